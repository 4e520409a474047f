mod common;

use common::{assignment, complement_free, diagram, id, set, shift};
use proptest::prelude::*;
use rbd_core::canonical::dnf_from_table;
use rbd_core::reliability::polynomial_of_form;
use rbd_core::{
    equals, parse, reliability_bruteforce, reliability_exact, reliability_polynomial, render,
    Diagram, GeneratingSet, NodeStore, ReliabilityAssignment, StateAssignment,
};

const TOL: f64 = 1e-12;

fn states(g: &GeneratingSet) -> impl Iterator<Item = StateAssignment> + '_ {
    (0..1u64 << g.len()).map(move |k| StateAssignment::from_index(g, k))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn render_then_parse_is_identity(d in diagram(6, 6)) {
        prop_assert_eq!(parse(&render(&d)).unwrap(), d);
    }

    #[test]
    fn parse_is_total(bytes in proptest::collection::vec(any::<u8>(), 0..40)) {
        match rbd_core::parser::parse_bytes(&bytes) {
            Ok(_) => {}
            Err(e) => prop_assert!(e.position <= bytes.len()),
        }
    }

    #[test]
    fn parse_is_total_on_grammar_alphabet(text in "[A0-9()~*+&| ]{0,30}") {
        match parse(&text) {
            Ok(d) => prop_assert_eq!(parse(&render(&d)).unwrap(), d),
            Err(e) => prop_assert!(e.position <= text.chars().count()),
        }
    }

    #[test]
    fn structure_function_clauses(d1 in diagram(4, 5), d2 in diagram(4, 5)) {
        let g = set(4);
        for s in states(&g) {
            let (x, y) = (d1.evaluate(&s).unwrap(), d2.evaluate(&s).unwrap());
            prop_assert_eq!(Diagram::complement(d1.clone()).evaluate(&s).unwrap(), !x);
            prop_assert_eq!(Diagram::series(d1.clone(), d2.clone()).evaluate(&s).unwrap(), x.min(y));
            prop_assert_eq!(Diagram::parallel(d1.clone(), d2.clone()).evaluate(&s).unwrap(), x.max(y));
        }
    }

    #[test]
    fn truth_table_agrees_with_evaluate(d in diagram(5, 5)) {
        let g = set(5);
        let table = d.truth_table(&g).unwrap();
        prop_assert_eq!(table.len(), 32);
        for (k, s) in states(&g).enumerate() {
            prop_assert_eq!(table[k], d.evaluate(&s).unwrap());
        }
    }

    #[test]
    fn canonical_form_is_sound(d in diagram(10, 6)) {
        let g = set(10);
        let mut store = NodeStore::new(g.clone());
        let c = store.canonicalize(&d).unwrap();
        for s in states(&g) {
            prop_assert_eq!(store.evaluate(c, &s).unwrap(), d.evaluate(&s).unwrap());
        }
        prop_assert!(store.verify_structure().is_ok());
    }

    #[test]
    fn equality_is_truth_table_equality(d1 in diagram(3, 4), d2 in diagram(3, 4)) {
        let g = set(3);
        prop_assert_eq!(
            equals(&d1, &d2, &g).unwrap(),
            d1.truth_table(&g).unwrap() == d2.truth_table(&g).unwrap()
        );
    }

    #[test]
    fn representative_round_trip(d in diagram(5, 6)) {
        let mut store = NodeStore::new(set(5));
        let c = store.canonicalize(&d).unwrap();
        let r = store.representative(c).unwrap();
        prop_assert_eq!(store.canonicalize(&r).unwrap(), c);
        let t = store.truth_table(c).unwrap();
        prop_assert_eq!(store.canonicalize(&dnf_from_table(&set(5), &t)).unwrap(), c);
    }

    #[test]
    fn exact_matches_bruteforce(d in diagram(8, 6), p in assignment(8)) {
        let g = set(8);
        let exact = reliability_exact(&d, &g, &p).unwrap();
        let brute = reliability_bruteforce(&d, &g, &p).unwrap();
        prop_assert!((exact - brute).abs() <= TOL, "{} vs {}", exact, brute);
        prop_assert!((-TOL..=1.0 + TOL).contains(&exact));
    }

    #[test]
    fn complement_reliability(d in diagram(6, 6), p in assignment(6)) {
        let g = set(6);
        let r = reliability_exact(&d, &g, &p).unwrap();
        let rc = reliability_exact(&Diagram::complement(d), &g, &p).unwrap();
        prop_assert!((r + rc - 1.0).abs() <= TOL);
    }

    #[test]
    fn inclusion_exclusion(d1 in diagram(5, 5), d2 in diagram(5, 5), p in assignment(5)) {
        let g = set(5);
        let r = |d: &Diagram| reliability_exact(d, &g, &p).unwrap();
        let join = r(&Diagram::parallel(d1.clone(), d2.clone()));
        let meet = r(&Diagram::series(d1.clone(), d2.clone()));
        prop_assert!((join + meet - r(&d1) - r(&d2)).abs() <= TOL);
    }

    #[test]
    fn independent_parts_factorize(d1 in diagram(3, 5), d2 in diagram(3, 5), p in assignment(6)) {
        let d2 = shift(&d2, 3);
        let g = set(6);
        let r = |d: &Diagram| reliability_exact(d, &g, &p).unwrap();
        let both = r(&Diagram::series(d1.clone(), d2.clone()));
        prop_assert!((both - r(&d1) * r(&d2)).abs() <= TOL);
    }

    #[test]
    fn coherent_diagrams_are_monotone(
        d in complement_free(5, 5),
        p in assignment(5),
        which in 1u32..=5,
        bump in 0.0..=1.0f64,
    ) {
        let g = set(5);
        let before = reliability_exact(&d, &g, &p).unwrap();
        let mut raised = p.clone();
        let old = p.get(id(which)).unwrap();
        raised.insert(id(which), old + (1.0 - old) * bump).unwrap();
        let after = reliability_exact(&d, &g, &raised).unwrap();
        prop_assert!(after >= before - TOL, "{} < {}", after, before);
    }

    #[test]
    fn polynomial_matches_exact(d in diagram(5, 5), p in assignment(5)) {
        let g = set(5);
        let poly = reliability_polynomial(&d, &g).unwrap();
        let exact = reliability_exact(&d, &g, &p).unwrap();
        prop_assert!((poly.evaluate(&p).unwrap() - exact).abs() <= TOL);
        for (m, _) in poly.terms() {
            let mut v = m.components().to_vec();
            v.dedup();
            prop_assert_eq!(v.len(), m.degree());
        }
    }

    #[test]
    fn equal_diagrams_share_polynomial(d1 in diagram(3, 4), d2 in diagram(3, 4)) {
        let g = set(3);
        let mut store = NodeStore::new(g.clone());
        let (a, b) = (store.canonicalize(&d1).unwrap(), store.canonicalize(&d2).unwrap());
        let (pa, pb) = (polynomial_of_form(&store, a).unwrap(), polynomial_of_form(&store, b).unwrap());
        prop_assert_eq!(a == b, pa == pb);
    }

    #[test]
    fn quotient_is_well_defined(d in diagram(4, 5), p in assignment(4), seed in any::<u64>()) {
        use rand::SeedableRng;
        let gen = rbd_core::laws::TermGenerator::new(4);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let v = gen.equivalent_variant(&d, &mut rng, 4);
        let g = set(4);
        prop_assert!(equals(&d, &v, &g).unwrap());
        let diff = reliability_exact(&d, &g, &p).unwrap() - reliability_exact(&v, &g, &p).unwrap();
        prop_assert!(diff.abs() <= TOL);
    }

    #[test]
    fn assignment_file_round_trip(p in assignment(6)) {
        prop_assert_eq!(ReliabilityAssignment::parse(&p.render()).unwrap(), p);
    }
}

#[test]
fn canonicity_exhaustive_over_random_pool() {
    // every pair from a pool of terms over 4 components
    use proptest::strategy::ValueTree;
    use proptest::test_runner::TestRunner;
    let mut runner = TestRunner::deterministic();
    let strat = diagram(4, 5);
    let pool: Vec<Diagram> = (0..120)
        .map(|_| strat.new_tree(&mut runner).unwrap().current())
        .collect();
    let g = set(4);
    let mut store = NodeStore::new(g.clone());
    let forms: Vec<_> = pool.iter().map(|d| store.canonicalize(d).unwrap()).collect();
    let tables: Vec<_> = pool.iter().map(|d| d.truth_table(&g).unwrap()).collect();
    for i in 0..pool.len() {
        for j in 0..pool.len() {
            assert_eq!(forms[i] == forms[j], tables[i] == tables[j], "{} / {}", pool[i], pool[j]);
        }
    }
    assert!(store.verify_structure().is_ok());
}
