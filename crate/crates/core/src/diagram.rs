//! Diagram terms and the structure function.
//!
//! A [`Diagram`] is a finite term built from elementary components `A1, A2, ...`,
//! the constants `1` (functioning) and `0` (failed), and the three connectives
//! series, parallel and complement. Evaluating a diagram under a
//! [`StateAssignment`] gives its functioning bit: series takes the minimum of
//! its parts, parallel the maximum and complement maps `x` to `1 - x`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{BitAnd, BitOr, Not};

use crate::error::{Error, Result};

/// Default upper bound on the number of components a truth table may span.
pub const DEFAULT_TABLE_CAP: usize = 20;

/// Identifies the elementary diagram `A<index>`. Indices start at 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ComponentId(u32);

impl ComponentId {
    pub fn new(index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::ZeroComponentIndex);
        }
        Ok(ComponentId(index))
    }

    pub fn index(self) -> u32 {
        self.0
    }
}

impl fmt::Display for ComponentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "A{}", self.0)
    }
}

/// A reliability block diagram term.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Diagram {
    Elementary(ComponentId),
    One,
    Zero,
    Series(Box<Diagram>, Box<Diagram>),
    Parallel(Box<Diagram>, Box<Diagram>),
    Complement(Box<Diagram>),
}

impl Diagram {
    /// Elementary diagram `A<index>`.
    ///
    /// # Panics
    /// If `index` is 0. Use [`ComponentId::new`] for fallible construction.
    pub fn component(index: u32) -> Diagram {
        Diagram::Elementary(ComponentId::new(index).expect("component index must be >= 1"))
    }

    pub fn constant(value: bool) -> Diagram {
        if value {
            Diagram::One
        } else {
            Diagram::Zero
        }
    }

    pub fn series(lhs: Diagram, rhs: Diagram) -> Diagram {
        Diagram::Series(Box::new(lhs), Box::new(rhs))
    }

    pub fn parallel(lhs: Diagram, rhs: Diagram) -> Diagram {
        Diagram::Parallel(Box::new(lhs), Box::new(rhs))
    }

    pub fn complement(inner: Diagram) -> Diagram {
        Diagram::Complement(Box::new(inner))
    }

    /// The set of components occurring in the term.
    pub fn components(&self) -> BTreeSet<ComponentId> {
        let mut out = BTreeSet::new();
        self.collect_components(&mut out);
        out
    }

    fn collect_components(&self, out: &mut BTreeSet<ComponentId>) {
        match self {
            Diagram::Elementary(c) => {
                out.insert(*c);
            }
            Diagram::One | Diagram::Zero => {}
            Diagram::Series(a, b) | Diagram::Parallel(a, b) => {
                a.collect_components(out);
                b.collect_components(out);
            }
            Diagram::Complement(a) => a.collect_components(out),
        }
    }

    /// True iff every component of the diagram belongs to `set`.
    pub fn built_upon(&self, set: &GeneratingSet) -> bool {
        self.first_foreign(set).is_none()
    }

    pub(crate) fn first_foreign(&self, set: &GeneratingSet) -> Option<ComponentId> {
        match self {
            Diagram::Elementary(c) => (!set.contains(*c)).then_some(*c),
            Diagram::One | Diagram::Zero => None,
            Diagram::Series(a, b) | Diagram::Parallel(a, b) => {
                a.first_foreign(set).or_else(|| b.first_foreign(set))
            }
            Diagram::Complement(a) => a.first_foreign(set),
        }
    }

    /// Structure function: the functioning bit of the diagram under `state`.
    ///
    /// States for components that do not occur in the diagram are ignored.
    pub fn evaluate(&self, state: &StateAssignment) -> Result<bool> {
        Ok(match self {
            Diagram::Elementary(c) => state.get(*c).ok_or(Error::MissingComponent(*c))?,
            Diagram::One => true,
            Diagram::Zero => false,
            Diagram::Series(a, b) => {
                let (x, y) = (a.evaluate(state)?, b.evaluate(state)?);
                x.min(y)
            }
            Diagram::Parallel(a, b) => {
                let (x, y) = (a.evaluate(state)?, b.evaluate(state)?);
                x.max(y)
            }
            Diagram::Complement(a) => !a.evaluate(state)?,
        })
    }

    /// Truth table over `set` with the default component cap.
    pub fn truth_table(&self, set: &GeneratingSet) -> Result<Vec<bool>> {
        self.truth_table_capped(set, DEFAULT_TABLE_CAP)
    }

    /// Entry `k` is the value under the state whose bit `i` (least significant
    /// first) is the state of the `i`-th component of `set`.
    pub fn truth_table_capped(&self, set: &GeneratingSet, cap: usize) -> Result<Vec<bool>> {
        if set.len() > cap {
            return Err(Error::CapExceeded {
                what: "truth table components",
                limit: cap,
                actual: set.len(),
            });
        }
        if let Some(c) = self.first_foreign(set) {
            return Err(Error::NotBuiltUpon(c));
        }
        let mut state = StateAssignment::all_failed(set);
        (0..1u64 << set.len())
            .map(|k| {
                state.set_from_bits(k);
                self.evaluate(&state)
            })
            .collect()
    }

    /// Number of nodes in the term tree.
    pub fn size(&self) -> usize {
        match self {
            Diagram::Elementary(_) | Diagram::One | Diagram::Zero => 1,
            Diagram::Series(a, b) | Diagram::Parallel(a, b) => 1 + a.size() + b.size(),
            Diagram::Complement(a) => 1 + a.size(),
        }
    }

    /// Longest root-to-leaf path, counting nodes.
    pub fn depth(&self) -> usize {
        match self {
            Diagram::Elementary(_) | Diagram::One | Diagram::Zero => 1,
            Diagram::Series(a, b) | Diagram::Parallel(a, b) => 1 + a.depth().max(b.depth()),
            Diagram::Complement(a) => 1 + a.depth(),
        }
    }

    pub fn contains_complement(&self) -> bool {
        match self {
            Diagram::Elementary(_) | Diagram::One | Diagram::Zero => false,
            Diagram::Series(a, b) | Diagram::Parallel(a, b) => {
                a.contains_complement() || b.contains_complement()
            }
            Diagram::Complement(_) => true,
        }
    }
}

impl BitAnd for Diagram {
    type Output = Diagram;

    fn bitand(self, rhs: Diagram) -> Diagram {
        Diagram::series(self, rhs)
    }
}

impl BitOr for Diagram {
    type Output = Diagram;

    fn bitor(self, rhs: Diagram) -> Diagram {
        Diagram::parallel(self, rhs)
    }
}

impl Not for Diagram {
    type Output = Diagram;

    fn not(self) -> Diagram {
        Diagram::complement(self)
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::parser::render(self))
    }
}

/// An ordered list of pairwise distinct components.
///
/// The order is the variable order used by canonical forms and the bit order
/// of truth tables.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct GeneratingSet {
    components: Vec<ComponentId>,
}

impl GeneratingSet {
    pub fn new(components: impl IntoIterator<Item = ComponentId>) -> Result<Self> {
        let components: Vec<ComponentId> = components.into_iter().collect();
        let mut seen = BTreeSet::new();
        for c in &components {
            if !seen.insert(*c) {
                return Err(Error::DuplicateComponent(*c));
            }
        }
        Ok(GeneratingSet { components })
    }

    /// `A1, ..., An`.
    pub fn first(n: u32) -> GeneratingSet {
        GeneratingSet {
            components: (1..=n).map(ComponentId).collect(),
        }
    }

    /// The components of `d` in ascending index order.
    pub fn of(d: &Diagram) -> GeneratingSet {
        GeneratingSet {
            components: d.components().into_iter().collect(),
        }
    }

    /// The components of all given diagrams in ascending index order.
    pub fn union<'a>(ds: impl IntoIterator<Item = &'a Diagram>) -> GeneratingSet {
        let mut all = BTreeSet::new();
        for d in ds {
            d.collect_components(&mut all);
        }
        GeneratingSet {
            components: all.into_iter().collect(),
        }
    }

    pub fn components(&self) -> &[ComponentId] {
        &self.components
    }

    pub fn len(&self) -> usize {
        self.components.len()
    }

    pub fn is_empty(&self) -> bool {
        self.components.is_empty()
    }

    pub fn contains(&self, c: ComponentId) -> bool {
        self.components.contains(&c)
    }

    pub fn position(&self, c: ComponentId) -> Option<usize> {
        self.components.iter().position(|x| *x == c)
    }
}

/// A functioning (`true`) or failed (`false`) bit for each component of a
/// generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateAssignment {
    // sorted by component
    states: Vec<(ComponentId, bool)>,
    // position in the generating set of each sorted entry
    order: Vec<usize>,
}

impl StateAssignment {
    pub fn all_failed(set: &GeneratingSet) -> StateAssignment {
        let mut indexed: Vec<(ComponentId, usize)> = set
            .components
            .iter()
            .enumerate()
            .map(|(i, c)| (*c, i))
            .collect();
        indexed.sort_unstable();
        StateAssignment {
            states: indexed.iter().map(|(c, _)| (*c, false)).collect(),
            order: indexed.iter().map(|(_, i)| *i).collect(),
        }
    }

    /// State number `k` of `set`: bit `i` of `k` is the state of the `i`-th component.
    pub fn from_index(set: &GeneratingSet, k: u64) -> StateAssignment {
        let mut s = StateAssignment::all_failed(set);
        s.set_from_bits(k);
        s
    }

    /// States given in generating-set order.
    pub fn from_bits(set: &GeneratingSet, bits: &[bool]) -> Result<StateAssignment> {
        if bits.len() != set.len() {
            return Err(Error::InvalidArgument(format!(
                "expected {} state bits, got {}",
                set.len(),
                bits.len()
            )));
        }
        let mut s = StateAssignment::all_failed(set);
        for (slot, pos) in s.states.iter_mut().zip(&s.order) {
            slot.1 = bits[*pos];
        }
        Ok(s)
    }

    fn set_from_bits(&mut self, k: u64) {
        for (slot, pos) in self.states.iter_mut().zip(&self.order) {
            slot.1 = (k >> pos) & 1 == 1;
        }
    }

    pub fn get(&self, c: ComponentId) -> Option<bool> {
        self.states
            .binary_search_by_key(&c, |(id, _)| *id)
            .ok()
            .map(|i| self.states[i].1)
    }

    pub fn set(&mut self, c: ComponentId, value: bool) -> Result<()> {
        match self.states.binary_search_by_key(&c, |(id, _)| *id) {
            Ok(i) => {
                self.states[i].1 = value;
                Ok(())
            }
            Err(_) => Err(Error::MissingComponent(c)),
        }
    }

    pub fn len(&self) -> usize {
        self.states.len()
    }

    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }

    /// Bits in generating-set order, rendered as `0`/`1` characters.
    pub fn to_bit_string(&self) -> String {
        let mut bits = vec!['0'; self.states.len()];
        for ((_, v), pos) in self.states.iter().zip(&self.order) {
            bits[*pos] = if *v { '1' } else { '0' };
        }
        bits.into_iter().collect()
    }
}
