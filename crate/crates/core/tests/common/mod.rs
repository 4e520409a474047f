#![allow(dead_code)]

use proptest::prelude::*;
use rbd_core::{ComponentId, Diagram, GeneratingSet, ReliabilityAssignment};

/// Random diagrams over `A1..An` with at most `depth` levels of nesting.
pub fn diagram(n: u32, depth: u32) -> impl Strategy<Value = Diagram> {
    let leaf = prop_oneof![
        1 => Just(Diagram::One),
        1 => Just(Diagram::Zero),
        8 => (1..=n).prop_map(Diagram::component),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            3 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Diagram::series(a, b)),
            3 => (inner.clone(), inner.clone()).prop_map(|(a, b)| Diagram::parallel(a, b)),
            2 => inner.prop_map(Diagram::complement),
        ]
    })
}

pub fn complement_free(n: u32, depth: u32) -> impl Strategy<Value = Diagram> {
    let leaf = prop_oneof![
        1 => Just(Diagram::One),
        1 => Just(Diagram::Zero),
        8 => (1..=n).prop_map(Diagram::component),
    ];
    leaf.prop_recursive(depth, 64, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Diagram::series(a, b)),
            (inner.clone(), inner).prop_map(|(a, b)| Diagram::parallel(a, b)),
        ]
    })
}

/// Probabilities for `A1..An`, with the degenerate values 0 and 1 mixed in.
pub fn assignment(n: u32) -> impl Strategy<Value = ReliabilityAssignment> {
    let p = prop_oneof![1 => Just(0.0), 1 => Just(1.0), 8 => 0.0..=1.0f64];
    proptest::collection::vec(p, n as usize)
        .prop_map(|v| ReliabilityAssignment::from_slice(&v).unwrap())
}

pub fn set(n: u32) -> GeneratingSet {
    GeneratingSet::first(n)
}

pub fn id(i: u32) -> ComponentId {
    ComponentId::new(i).unwrap()
}

/// Diagram with every component index shifted by `offset`.
pub fn shift(d: &Diagram, offset: u32) -> Diagram {
    match d {
        Diagram::Elementary(c) => Diagram::component(c.index() + offset),
        Diagram::One => Diagram::One,
        Diagram::Zero => Diagram::Zero,
        Diagram::Series(a, b) => Diagram::series(shift(a, offset), shift(b, offset)),
        Diagram::Parallel(a, b) => Diagram::parallel(shift(a, offset), shift(b, offset)),
        Diagram::Complement(a) => Diagram::complement(shift(a, offset)),
    }
}
