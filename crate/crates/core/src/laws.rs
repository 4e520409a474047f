//! Randomized checks that diagrams, their canonical forms and the structure
//! function satisfy the Boolean-algebra axioms.
//!
//! A [`Law`] is a pair of pattern diagrams over the placeholders `A1`, `A2`,
//! `A3`. A trial draws random diagrams, substitutes them for the placeholders
//! and compares both sides. Each law runs on its own ChaCha8 stream of the
//! seed, so reports are reproducible and independent of scheduling.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canonical::{equals, CanonicalForm, NodeStore};
use crate::diagram::{Diagram, GeneratingSet, StateAssignment};
use crate::error::{Error, Result};
use crate::parser::{parse, render};
use crate::reliability::{reliability_bruteforce, reliability_of_form, ReliabilityAssignment};

pub const MAX_LAW_COMPONENTS: usize = 8;
pub const DEFAULT_MAX_DEPTH: usize = 7;
pub const SHADOW_ASSIGNMENTS: usize = 8;
pub const SHADOW_TOLERANCE: f64 = 1e-12;

/// An equation between two patterns. `A<k>` in a pattern stands for the
/// `k`-th argument.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Law {
    pub id: &'static str,
    pub lhs: Diagram,
    pub rhs: Diagram,
}

impl Law {
    /// # Panics
    /// If either pattern does not parse.
    pub fn new(id: &'static str, lhs: &str, rhs: &str) -> Law {
        Law {
            id,
            lhs: parse(lhs).expect("valid law pattern"),
            rhs: parse(rhs).expect("valid law pattern"),
        }
    }

    pub fn arity(&self) -> usize {
        let comps = GeneratingSet::union([&self.lhs, &self.rhs]);
        comps
            .components()
            .last()
            .map_or(0, |c| c.index() as usize)
    }

    pub fn instantiate(&self, args: &[Diagram]) -> (Diagram, Diagram) {
        (substitute(&self.lhs, args), substitute(&self.rhs, args))
    }
}

/// The ten Boolean-algebra axioms: commutativity, associativity and
/// distributivity of both operations, the neutral elements and the
/// complement laws. Meet is series, join is parallel.
pub fn boolean_axioms() -> Vec<Law> {
    vec![
        Law::new("commutativity-meet", "A1 * A2", "A2 * A1"),
        Law::new("commutativity-join", "A1 + A2", "A2 + A1"),
        Law::new("associativity-meet", "(A1 * A2) * A3", "A1 * (A2 * A3)"),
        Law::new("associativity-join", "(A1 + A2) + A3", "A1 + (A2 + A3)"),
        Law::new("distributivity-meet-over-join", "A1 * (A2 + A3)", "A1 * A2 + A1 * A3"),
        Law::new("distributivity-join-over-meet", "A1 + A2 * A3", "(A1 + A2) * (A1 + A3)"),
        Law::new("neutral-meet", "A1 * 1", "A1"),
        Law::new("neutral-join", "A1 + 0", "A1"),
        Law::new("complement-join", "A1 + ~A1", "1"),
        Law::new("complement-meet", "A1 * ~A1", "0"),
    ]
}

/// Looks up an axiom by id. `series`/`parallel` are accepted for `meet`/`join`.
pub fn axiom(id: &str) -> Option<Law> {
    let id = id.replace("series", "meet").replace("parallel", "join");
    boolean_axioms().into_iter().find(|l| l.id == id)
}

fn substitute(pattern: &Diagram, args: &[Diagram]) -> Diagram {
    match pattern {
        Diagram::Elementary(c) => args[c.index() as usize - 1].clone(),
        Diagram::One => Diagram::One,
        Diagram::Zero => Diagram::Zero,
        Diagram::Series(a, b) => Diagram::series(substitute(a, args), substitute(b, args)),
        Diagram::Parallel(a, b) => Diagram::parallel(substitute(a, args), substitute(b, args)),
        Diagram::Complement(a) => Diagram::complement(substitute(a, args)),
    }
}

fn instantiate_form(store: &mut NodeStore, pattern: &Diagram, args: &[CanonicalForm]) -> Result<CanonicalForm> {
    Ok(match pattern {
        Diagram::Elementary(c) => args[c.index() as usize - 1],
        Diagram::One => store.one(),
        Diagram::Zero => store.zero(),
        Diagram::Series(a, b) => {
            let x = instantiate_form(store, a, args)?;
            let y = instantiate_form(store, b, args)?;
            store.meet(x, y)?
        }
        Diagram::Parallel(a, b) => {
            let x = instantiate_form(store, a, args)?;
            let y = instantiate_form(store, b, args)?;
            store.join(x, y)?
        }
        Diagram::Complement(a) => {
            let x = instantiate_form(store, a, args)?;
            store.complement(x)?
        }
    })
}

/// Random diagram terms over `A1..An`.
///
/// Each internal position is series with probability 0.3, parallel 0.3,
/// complement 0.2 and a leaf 0.2; positions at `max_depth` are always leaves.
/// A leaf is `1` or `0` with probability 0.1 each, otherwise a uniformly
/// chosen component.
#[derive(Debug, Clone, Copy)]
pub struct TermGenerator {
    pub components: u32,
    pub max_depth: usize,
}

impl TermGenerator {
    pub fn new(components: u32) -> Self {
        TermGenerator {
            components,
            max_depth: DEFAULT_MAX_DEPTH,
        }
    }

    pub fn generate<R: Rng + ?Sized>(&self, rng: &mut R) -> Diagram {
        self.generate_at(rng, 1)
    }

    fn generate_at<R: Rng + ?Sized>(&self, rng: &mut R, depth: usize) -> Diagram {
        if depth < self.max_depth {
            let u: f64 = rng.random();
            if u < 0.3 {
                return Diagram::series(self.generate_at(rng, depth + 1), self.generate_at(rng, depth + 1));
            } else if u < 0.6 {
                return Diagram::parallel(self.generate_at(rng, depth + 1), self.generate_at(rng, depth + 1));
            } else if u < 0.8 {
                return Diagram::complement(self.generate_at(rng, depth + 1));
            }
        }
        self.leaf(rng)
    }

    fn leaf<R: Rng + ?Sized>(&self, rng: &mut R) -> Diagram {
        let u: f64 = rng.random();
        if u < 0.1 {
            Diagram::One
        } else if u < 0.2 || self.components == 0 {
            Diagram::Zero
        } else {
            self.component(rng)
        }
    }

    fn component<R: Rng + ?Sized>(&self, rng: &mut R) -> Diagram {
        Diagram::component(rng.random_range(1..=self.components))
    }

    /// Random probabilities for `A1..An`, uniform in `[0, 1)`.
    pub fn assignment<R: Rng + ?Sized>(&self, rng: &mut R) -> ReliabilityAssignment {
        let probs: Vec<f64> = (0..self.components).map(|_| rng.random()).collect();
        ReliabilityAssignment::from_slice(&probs).expect("probabilities in range")
    }

    /// A diagram equal to `d` as a Boolean term, obtained by `steps` random
    /// axiom-derived rewrites at random positions.
    pub fn equivalent_variant<R: Rng + ?Sized>(&self, d: &Diagram, rng: &mut R, steps: usize) -> Diagram {
        let mut out = d.clone();
        for _ in 0..steps {
            out = self.rewrite_somewhere(&out, rng);
        }
        out
    }

    fn rewrite_somewhere<R: Rng + ?Sized>(&self, d: &Diagram, rng: &mut R) -> Diagram {
        let descend = rng.random_bool(0.6);
        match d {
            Diagram::Series(a, b) if descend => {
                if rng.random_bool(0.5) {
                    Diagram::series(self.rewrite_somewhere(a, rng), (**b).clone())
                } else {
                    Diagram::series((**a).clone(), self.rewrite_somewhere(b, rng))
                }
            }
            Diagram::Parallel(a, b) if descend => {
                if rng.random_bool(0.5) {
                    Diagram::parallel(self.rewrite_somewhere(a, rng), (**b).clone())
                } else {
                    Diagram::parallel((**a).clone(), self.rewrite_somewhere(b, rng))
                }
            }
            Diagram::Complement(a) if descend => Diagram::complement(self.rewrite_somewhere(a, rng)),
            _ => self.rewrite_here(d, rng),
        }
    }

    fn rewrite_here<R: Rng + ?Sized>(&self, d: &Diagram, rng: &mut R) -> Diagram {
        use Diagram::*;
        // structural rewrites first; fall back to an always-applicable one
        let structural = match d {
            Series(a, b) => match (rng.random_range(0..3), &**a, &**b) {
                (0, _, _) => Some(Diagram::series((**b).clone(), (**a).clone())),
                (1, Series(x, y), z) => Some(Diagram::series((**x).clone(), Diagram::series((**y).clone(), z.clone()))),
                (_, x, Parallel(y, z)) => Some(Diagram::parallel(
                    Diagram::series(x.clone(), (**y).clone()),
                    Diagram::series(x.clone(), (**z).clone()),
                )),
                (_, One, x) | (_, x, One) => Some(x.clone()),
                _ => None,
            },
            Parallel(a, b) => match (rng.random_range(0..3), &**a, &**b) {
                (0, _, _) => Some(Diagram::parallel((**b).clone(), (**a).clone())),
                (1, x, Parallel(y, z)) => {
                    Some(Diagram::parallel(Diagram::parallel(x.clone(), (**y).clone()), (**z).clone()))
                }
                (_, x, Series(y, z)) => Some(Diagram::series(
                    Diagram::parallel(x.clone(), (**y).clone()),
                    Diagram::parallel(x.clone(), (**z).clone()),
                )),
                (_, Zero, x) | (_, x, Zero) => Some(x.clone()),
                _ => None,
            },
            Complement(a) => match &**a {
                Complement(x) => Some((**x).clone()),
                Series(x, y) => Some(Diagram::parallel(
                    Diagram::complement((**x).clone()),
                    Diagram::complement((**y).clone()),
                )),
                Parallel(x, y) => Some(Diagram::series(
                    Diagram::complement((**x).clone()),
                    Diagram::complement((**y).clone()),
                )),
                One => Some(Zero),
                Zero => Some(One),
                Elementary(_) => None,
            },
            _ => None,
        };
        if let Some(r) = structural.filter(|_| rng.random_bool(0.7)) {
            return r;
        }
        match rng.random_range(0..5) {
            0 => Diagram::complement(Diagram::complement(d.clone())),
            1 => Diagram::series(d.clone(), Diagram::One),
            2 => Diagram::parallel(Diagram::Zero, d.clone()),
            3 => {
                let y = self.leaf(rng);
                Diagram::series(d.clone(), Diagram::parallel(y.clone(), Diagram::complement(y)))
            }
            _ => {
                let y = self.leaf(rng);
                Diagram::parallel(d.clone(), Diagram::series(y.clone(), Diagram::complement(y)))
            }
        }
    }
}

/// Which side of a law a report covers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// Equality of diagrams, or identical roots of canonical forms.
    Identity,
    /// Reliabilities of both sides agree under random assignments.
    NumericShadow,
    /// Structure function clauses under exhaustive states.
    Homomorphism,
}

/// What distinguishes the two sides of a failed trial.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness {
    /// A component state (bits in `A1..An` order) under which the sides differ.
    State(String),
    Assignment {
        probabilities: Vec<f64>,
        lhs: f64,
        rhs: f64,
    },
    /// A structure function clause violated under a state.
    Clause { clause: &'static str, state: String },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Counterexample {
    pub trial: usize,
    pub lhs: Diagram,
    pub rhs: Diagram,
    pub witness: Witness,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LawReport {
    pub law: &'static str,
    pub kind: CheckKind,
    pub trials: usize,
    pub failures: usize,
    pub first_counterexample: Option<Counterexample>,
}

impl LawReport {
    fn new(law: &'static str, kind: CheckKind) -> Self {
        LawReport {
            law,
            kind,
            trials: 0,
            failures: 0,
            first_counterexample: None,
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    fn record(&mut self, outcome: Option<Counterexample>) {
        self.trials += 1;
        if let Some(c) = outcome {
            self.failures += 1;
            self.first_counterexample.get_or_insert(c);
        }
    }

    pub fn label(&self) -> String {
        match self.kind {
            CheckKind::NumericShadow => format!("{}[numeric]", self.law),
            _ => self.law.to_string(),
        }
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.first_counterexample {
            None => write!(f, "{}: PASS (trials={})", self.label(), self.trials),
            Some(c) => {
                write!(
                    f,
                    "{}: FAIL trial={} lhs={} rhs={}",
                    self.label(),
                    c.trial,
                    render(&c.lhs),
                    render(&c.rhs)
                )?;
                match &c.witness {
                    Witness::State(bits) => write!(f, " state={bits}"),
                    Witness::Assignment {
                        probabilities,
                        lhs,
                        rhs,
                    } => {
                        let ps: Vec<String> = probabilities.iter().map(|p| p.to_string()).collect();
                        write!(f, " assignment={} r_lhs={lhs} r_rhs={rhs}", ps.join(","))
                    }
                    Witness::Clause { clause, state } => write!(f, " clause={clause} state={state}"),
                }
            }
        }
    }
}

fn check_bounds(trials: usize, n: usize) -> Result<()> {
    if trials == 0 {
        return Err(Error::InvalidArgument("trials must be at least 1".into()));
    }
    if !(1..=MAX_LAW_COMPONENTS).contains(&n) {
        return Err(Error::OutOfRange {
            what: "component count",
            value: n,
            min: 1,
            max: MAX_LAW_COMPONENTS,
        });
    }
    Ok(())
}

fn law_rng(seed: u64, stream: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream as u64);
    rng
}

// runs `check` for every law on its own thread; output order follows `laws`
fn per_law<T, F>(laws: &[Law], check: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(usize, &Law) -> Result<T> + Sync,
{
    std::thread::scope(|scope| {
        let handles: Vec<_> = laws
            .iter()
            .enumerate()
            .map(|(i, law)| {
                let check = &check;
                scope.spawn(move || check(i, law))
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("law check panicked"))
            .collect()
    })
}

fn first_difference(lhs: &Diagram, rhs: &Diagram, set: &GeneratingSet) -> Result<String> {
    for k in 0..1u64 << set.len() {
        let s = StateAssignment::from_index(set, k);
        if lhs.evaluate(&s)? != rhs.evaluate(&s)? {
            return Ok(s.to_bit_string());
        }
    }
    Ok(String::new())
}

/// Checks the ten axioms on random diagrams over `n` components, deciding
/// each instance with [`equals`].
pub fn check_diagram_algebra(trials: usize, seed: u64, n: usize) -> Result<Vec<LawReport>> {
    check_diagram_laws(&boolean_axioms(), trials, seed, n)
}

/// [`check_diagram_algebra`] for an arbitrary list of laws.
pub fn check_diagram_laws(laws: &[Law], trials: usize, seed: u64, n: usize) -> Result<Vec<LawReport>> {
    check_bounds(trials, n)?;
    let set = GeneratingSet::first(n as u32);
    let gen = TermGenerator::new(n as u32);
    per_law(laws, |i, law| {
        let mut rng = law_rng(seed, i);
        let mut report = LawReport::new(law.id, CheckKind::Identity);
        for trial in 0..trials {
            let args: Vec<Diagram> = (0..law.arity()).map(|_| gen.generate(&mut rng)).collect();
            let (lhs, rhs) = law.instantiate(&args);
            let outcome = if equals(&lhs, &rhs, &set)? {
                None
            } else {
                let witness = Witness::State(first_difference(&lhs, &rhs, &set)?);
                Some(Counterexample {
                    trial,
                    lhs,
                    rhs,
                    witness,
                })
            };
            report.record(outcome);
        }
        Ok(report)
    })
}

/// Checks the ten axioms on canonical forms with the induced operations,
/// requiring identical roots, and checks that both sides have the same
/// reliability under [`SHADOW_ASSIGNMENTS`] random assignments per trial.
///
/// Returns the identity reports for all laws followed by the numeric reports.
pub fn check_reliability_algebra(trials: usize, seed: u64, n: usize) -> Result<Vec<LawReport>> {
    check_reliability_laws(&boolean_axioms(), trials, seed, n)
}

/// [`check_reliability_algebra`] for an arbitrary list of laws.
pub fn check_reliability_laws(laws: &[Law], trials: usize, seed: u64, n: usize) -> Result<Vec<LawReport>> {
    check_bounds(trials, n)?;
    let set = GeneratingSet::first(n as u32);
    let gen = TermGenerator::new(n as u32);
    let pairs = per_law(laws, |i, law| {
        // separate streams from the diagram-level check
        let mut rng = law_rng(seed, laws.len() + i);
        let mut store = NodeStore::new(set.clone());
        let mut identity = LawReport::new(law.id, CheckKind::Identity);
        let mut shadow = LawReport::new(law.id, CheckKind::NumericShadow);
        for trial in 0..trials {
            let args: Vec<Diagram> = (0..law.arity()).map(|_| gen.generate(&mut rng)).collect();
            let forms = args
                .iter()
                .map(|d| store.canonicalize(d))
                .collect::<Result<Vec<_>>>()?;
            let lhs_form = instantiate_form(&mut store, &law.lhs, &forms)?;
            let rhs_form = instantiate_form(&mut store, &law.rhs, &forms)?;
            let (lhs, rhs) = law.instantiate(&args);

            let outcome = if lhs_form == rhs_form {
                None
            } else {
                let witness = Witness::State(first_difference(&lhs, &rhs, &set)?);
                Some(Counterexample {
                    trial,
                    lhs: lhs.clone(),
                    rhs: rhs.clone(),
                    witness,
                })
            };
            identity.record(outcome);

            // lhs through the brute-force oracle on the term, rhs through
            // Shannon expansion of the induced form
            let mut outcome = None;
            for _ in 0..SHADOW_ASSIGNMENTS {
                let p = gen.assignment(&mut rng);
                let r_lhs = reliability_bruteforce(&lhs, &set, &p)?;
                let r_rhs = reliability_of_form(&store, rhs_form, &p)?;
                if outcome.is_none() && (r_lhs - r_rhs).abs() > SHADOW_TOLERANCE {
                    outcome = Some(Counterexample {
                        trial,
                        lhs: lhs.clone(),
                        rhs: rhs.clone(),
                        witness: Witness::Assignment {
                            probabilities: p.iter().map(|(_, v)| v).collect(),
                            lhs: r_lhs,
                            rhs: r_rhs,
                        },
                    });
                }
            }
            shadow.record(outcome);
        }
        Ok((identity, shadow))
    })?;
    let (identity, shadow): (Vec<_>, Vec<_>) = pairs.into_iter().unzip();
    Ok(identity.into_iter().chain(shadow).collect())
}

/// Checks the structure function clauses on random pairs and every state:
/// the canonical form of `d1 * d2`, `d1 + d2` and `~d1` must evaluate to the
/// min, max and complement of the parts, and the constants to 0 and 1.
pub fn check_structure_homomorphism(trials: usize, seed: u64, n: usize) -> Result<LawReport> {
    check_bounds(trials, n)?;
    let set = GeneratingSet::first(n as u32);
    let gen = TermGenerator::new(n as u32);
    let mut rng = law_rng(seed, 2 * boolean_axioms().len());
    let mut store = NodeStore::new(set.clone());
    let mut report = LawReport::new("structure-homomorphism", CheckKind::Homomorphism);
    let one = store.canonicalize(&Diagram::One)?;
    let zero = store.canonicalize(&Diagram::Zero)?;
    let states: Vec<StateAssignment> = (0..1u64 << n).map(|k| StateAssignment::from_index(&set, k)).collect();
    for trial in 0..trials {
        let d1 = gen.generate(&mut rng);
        let d2 = gen.generate(&mut rng);
        let series = store.canonicalize(&Diagram::series(d1.clone(), d2.clone()))?;
        let parallel = store.canonicalize(&Diagram::parallel(d1.clone(), d2.clone()))?;
        let complement = store.canonicalize(&Diagram::complement(d1.clone()))?;
        let mut violation = None;
        for s in &states {
            let (x, y) = (d1.evaluate(s)?, d2.evaluate(s)?);
            let clauses = [
                ("series", store.evaluate(series, s)? == x.min(y)),
                ("parallel", store.evaluate(parallel, s)? == x.max(y)),
                ("complement", store.evaluate(complement, s)? == !x),
                ("one", store.evaluate(one, s)? && Diagram::One.evaluate(s)?),
                ("zero", !store.evaluate(zero, s)? && !Diagram::Zero.evaluate(s)?),
            ];
            if let Some((clause, _)) = clauses.iter().find(|(_, ok)| !ok) {
                violation = Some(Witness::Clause {
                    clause,
                    state: s.to_bit_string(),
                });
                break;
            }
        }
        report.record(violation.map(|witness| Counterexample {
            trial,
            lhs: d1,
            rhs: d2,
            witness,
        }));
    }
    Ok(report)
}

/// The structure function reaches both values and separates the two
/// constants (injectivity with no components).
pub fn structure_function_is_onto() -> bool {
    let empty = StateAssignment::all_failed(&GeneratingSet::default());
    let zero = Diagram::Zero.evaluate(&empty);
    let one = Diagram::One.evaluate(&empty);
    matches!((zero, one), (Ok(false), Ok(true)))
}
