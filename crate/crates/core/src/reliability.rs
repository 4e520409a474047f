//! Reliability of diagrams over independent components.
//!
//! `r(D)` is the probability that `D` functions when component `A_i`
//! functions independently with probability `p_i`. Four routes are offered:
//!
//! * [`reliability_bruteforce`] sums the structure function over every state,
//!   weighting each by its probability. Exponential, used as the oracle.
//! * [`reliability_exact`] applies the Shannon expansion
//!   `r(c) = p_i * r(high) + (1 - p_i) * r(low)` over the canonical form,
//!   memoized per node.
//! * [`reliability_polynomial`] performs the same expansion symbolically and
//!   yields a multilinear polynomial with exact rational coefficients.
//! * [`reliability_montecarlo`] samples component states.
//!
//! Repeated occurrences of a component are always handled through the
//! canonical form, never by multiplying the reliabilities of sub-diagrams.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::canonical::{CanonicalForm, NodeId, NodeStore};
use crate::diagram::{ComponentId, Diagram, GeneratingSet, StateAssignment, DEFAULT_TABLE_CAP};
use crate::error::{Error, Result};

/// Functioning probability for each component.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ReliabilityAssignment {
    probs: BTreeMap<ComponentId, f64>,
}

impl ReliabilityAssignment {
    pub fn new(entries: impl IntoIterator<Item = (ComponentId, f64)>) -> Result<Self> {
        let mut out = ReliabilityAssignment::default();
        for (c, p) in entries {
            if out.probs.contains_key(&c) {
                return Err(Error::DuplicateComponent(c));
            }
            out.insert(c, p)?;
        }
        Ok(out)
    }

    /// Assigns `probs[i]` to `A(i+1)`.
    pub fn from_slice(probs: &[f64]) -> Result<Self> {
        Self::new(
            probs
                .iter()
                .enumerate()
                .map(|(i, p)| (ComponentId::new(i as u32 + 1).expect("index >= 1"), *p)),
        )
    }

    /// Sets or replaces the probability of `c`.
    pub fn insert(&mut self, c: ComponentId, p: f64) -> Result<()> {
        if !(0.0..=1.0).contains(&p) {
            return Err(Error::InvalidProbability {
                component: c,
                value: p,
            });
        }
        self.probs.insert(c, p);
        Ok(())
    }

    pub fn get(&self, c: ComponentId) -> Option<f64> {
        self.probs.get(&c).copied()
    }

    pub fn require(&self, c: ComponentId) -> Result<f64> {
        self.get(c).ok_or(Error::MissingProbability(c))
    }

    pub fn iter(&self) -> impl Iterator<Item = (ComponentId, f64)> + '_ {
        self.probs.iter().map(|(c, p)| (*c, *p))
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    /// The assigned components in ascending index order.
    pub fn generating_set(&self) -> GeneratingSet {
        GeneratingSet::new(self.probs.keys().copied()).expect("map keys are distinct")
    }

    /// Parses the text format: one `A<k> = <probability>` per line, `#`
    /// starts a comment, blank lines are skipped, duplicate keys are errors.
    pub fn parse(text: &str) -> Result<Self> {
        let mut out = ReliabilityAssignment::default();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let syntax = |message: String| Error::AssignmentSyntax { line, message };
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) = content
                .split_once('=')
                .ok_or_else(|| syntax("expected `A<k> = <probability>`".into()))?;
            let key = key.trim();
            let component = key
                .strip_prefix('A')
                .filter(|digits| !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit()))
                .and_then(|digits| digits.parse::<u32>().ok())
                .and_then(|k| ComponentId::new(k).ok())
                .ok_or_else(|| syntax(format!("bad component name `{key}`")))?;
            let value = value.trim();
            let p: f64 = value
                .parse()
                .map_err(|_| syntax(format!("bad probability `{value}`")))?;
            if out.probs.contains_key(&component) {
                return Err(syntax(format!("duplicate entry for {component}")));
            }
            out.insert(component, p).map_err(|e| syntax(e.to_string()))?;
        }
        Ok(out)
    }

    /// Renders the text format accepted by [`ReliabilityAssignment::parse`].
    pub fn render(&self) -> String {
        self.probs
            .iter()
            .map(|(c, p)| format!("{c} = {p}\n"))
            .collect()
    }
}

fn check_inputs(d: &Diagram, set: &GeneratingSet, p: &ReliabilityAssignment) -> Result<()> {
    if let Some(c) = d.first_foreign(set) {
        return Err(Error::NotBuiltUpon(c));
    }
    for c in d.components() {
        p.require(c)?;
    }
    Ok(())
}

/// Exact reliability by summing over all `2^|set|` component states.
///
/// Components of `set` without a probability must not occur in `d`; they are
/// left out of the enumeration since they integrate to 1.
pub fn reliability_bruteforce(
    d: &Diagram,
    set: &GeneratingSet,
    p: &ReliabilityAssignment,
) -> Result<f64> {
    if set.len() > DEFAULT_TABLE_CAP {
        return Err(Error::CapExceeded {
            what: "brute-force components",
            limit: DEFAULT_TABLE_CAP,
            actual: set.len(),
        });
    }
    check_inputs(d, set, p)?;
    let vars = GeneratingSet::new(
        set.components()
            .iter()
            .copied()
            .filter(|c| p.get(*c).is_some()),
    )?;
    let probs: Vec<f64> = vars.components().iter().map(|c| p.probs[c]).collect();
    let mut total = 0.0;
    for k in 0..1u64 << vars.len() {
        let state = StateAssignment::from_index(&vars, k);
        if d.evaluate(&state)? {
            let weight: f64 = probs
                .iter()
                .enumerate()
                .map(|(i, pi)| if (k >> i) & 1 == 1 { *pi } else { 1.0 - pi })
                .product();
            total += weight;
        }
    }
    Ok(total)
}

/// Exact reliability by Shannon expansion over the canonical form of `d`.
pub fn reliability_exact(d: &Diagram, set: &GeneratingSet, p: &ReliabilityAssignment) -> Result<f64> {
    check_inputs(d, set, p)?;
    let mut store = NodeStore::new(set.clone());
    let form = store.canonicalize(d)?;
    reliability_of_form(&store, form, p)
}

/// Shannon expansion of an existing canonical form.
///
/// Every component tested by the form needs a probability.
pub fn reliability_of_form(
    store: &NodeStore,
    form: CanonicalForm,
    p: &ReliabilityAssignment,
) -> Result<f64> {
    let mut memo = HashMap::new();
    shannon(store, form, p, &mut memo)
}

fn shannon(
    store: &NodeStore,
    form: CanonicalForm,
    p: &ReliabilityAssignment,
    memo: &mut HashMap<NodeId, f64>,
) -> Result<f64> {
    let Some(node) = store.decision(form)? else {
        return Ok(if form.is_one() { 1.0 } else { 0.0 });
    };
    if let Some(r) = memo.get(&form.root()) {
        return Ok(*r);
    }
    let pi = p.require(node.component)?;
    let high = shannon(store, node.high, p, memo)?;
    let low = shannon(store, node.low, p, memo)?;
    let r = pi * high + (1.0 - pi) * low;
    memo.insert(form.root(), r);
    Ok(r)
}

/// A product of distinct component reliabilities `r_i`, ordered by index.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<ComponentId>);

impl Monomial {
    pub fn components(&self) -> &[ComponentId] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    fn with(&self, c: ComponentId) -> Monomial {
        let mut v = self.0.clone();
        match v.binary_search(&c) {
            Ok(_) => panic!("{c} already in monomial"),
            Err(i) => v.insert(i, c),
        }
        Monomial(v)
    }
}

// graded: by degree, then lexicographically by component index
impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "r{}", c.index())?;
        }
        Ok(())
    }
}

/// Multilinear polynomial in the component reliabilities with exact
/// rational coefficients. Zero coefficients are never stored, so equal
/// functions give identical polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReliabilityPolynomial {
    terms: BTreeMap<Monomial, BigRational>,
}

impl ReliabilityPolynomial {
    pub fn constant(value: i64) -> Self {
        let mut terms = BTreeMap::new();
        if value != 0 {
            terms.insert(Monomial::default(), BigRational::from_integer(BigInt::from(value)));
        }
        ReliabilityPolynomial { terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &[ComponentId]) -> BigRational {
        let mut key: Vec<ComponentId> = m.to_vec();
        key.sort_unstable();
        self.terms
            .get(&Monomial(key))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `low + r_c * (high - low)`. Neither operand may mention `c`.
    fn shannon_combine(c: ComponentId, low: &Self, high: &Self) -> Self {
        let mut out = low.clone();
        for (m, coef) in &high.terms {
            out.add_term(m.with(c), coef.clone());
        }
        for (m, coef) in &low.terms {
            out.add_term(m.with(c), -coef.clone());
        }
        out
    }

    pub fn evaluate(&self, p: &ReliabilityAssignment) -> Result<f64> {
        let mut total = 0.0;
        for (m, coef) in &self.terms {
            let mut term = coef.to_f64().unwrap_or(f64::NAN);
            for c in &m.0 {
                term *= p.require(*c)?;
            }
            total += term;
        }
        Ok(total)
    }

    /// Exact evaluation at rational reliabilities; missing components are errors.
    pub fn evaluate_exact(&self, values: &BTreeMap<ComponentId, BigRational>) -> Result<BigRational> {
        let mut total = BigRational::zero();
        for (m, coef) in &self.terms {
            let mut term = coef.clone();
            for c in &m.0 {
                term *= values.get(c).ok_or(Error::MissingProbability(*c))?;
            }
            total += term;
        }
        Ok(total)
    }
}

fn write_coefficient(f: &mut fmt::Formatter<'_>, c: &BigRational) -> fmt::Result {
    if c.is_integer() {
        write!(f, "{}", c.numer())
    } else {
        write!(f, "{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for ReliabilityPolynomial {
    /// Terms in graded order, for example `r1 + r2 - r1*r2` or `1 - r1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, coef)) in self.terms.iter().enumerate() {
            let magnitude = coef.abs();
            match (i, coef.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if m.degree() == 0 {
                write_coefficient(f, &magnitude)?;
            } else {
                if !magnitude.is_one() {
                    write_coefficient(f, &magnitude)?;
                    f.write_str("*")?;
                }
                write!(f, "{m}")?;
            }
        }
        Ok(())
    }
}

/// The reliability polynomial of `d`, built by symbolic Shannon expansion
/// over its canonical form.
pub fn reliability_polynomial(d: &Diagram, set: &GeneratingSet) -> Result<ReliabilityPolynomial> {
    let mut store = NodeStore::new(set.clone());
    let form = store.canonicalize(d)?;
    polynomial_of_form(&store, form)
}

pub fn polynomial_of_form(store: &NodeStore, form: CanonicalForm) -> Result<ReliabilityPolynomial> {
    let mut memo = HashMap::new();
    symbolic_shannon(store, form, &mut memo)
}

fn symbolic_shannon(
    store: &NodeStore,
    form: CanonicalForm,
    memo: &mut HashMap<NodeId, ReliabilityPolynomial>,
) -> Result<ReliabilityPolynomial> {
    let Some(node) = store.decision(form)? else {
        return Ok(ReliabilityPolynomial::constant(i64::from(form.is_one())));
    };
    if let Some(poly) = memo.get(&form.root()) {
        return Ok(poly.clone());
    }
    let low = symbolic_shannon(store, node.low, memo)?;
    let high = symbolic_shannon(store, node.high, memo)?;
    let poly = ReliabilityPolynomial::shannon_combine(node.component, &low, &high);
    memo.insert(form.root(), poly.clone());
    Ok(poly)
}

/// Result of a Monte Carlo run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonteCarloReport {
    pub estimate: f64,
    /// `sqrt(estimate * (1 - estimate) / samples)`.
    pub standard_error: f64,
    pub samples: u64,
    pub seed: u64,
}

impl MonteCarloReport {
    fn from_hits(hits: u64, samples: u64, seed: u64) -> Self {
        let estimate = hits as f64 / samples as f64;
        MonteCarloReport {
            estimate,
            standard_error: (estimate * (1.0 - estimate) / samples as f64).sqrt(),
            samples,
            seed,
        }
    }
}

/// Estimates the reliability of `d` from `samples` independent state vectors.
///
/// The generator is ChaCha8 seeded with `seed_from_u64(seed)` on stream 0.
/// For each sample, components of `d` are visited in ascending index order;
/// each draws one `f64` uniform in `[0, 1)` and functions iff the draw is
/// below its probability.
pub fn reliability_montecarlo(
    d: &Diagram,
    set: &GeneratingSet,
    p: &ReliabilityAssignment,
    samples: u64,
    seed: u64,
) -> Result<MonteCarloReport> {
    reliability_montecarlo_sharded(d, set, p, samples, seed, 1)
}

/// Like [`reliability_montecarlo`], with the samples split over `shards`
/// threads. Shard `i` uses stream `i` of the same seed and takes
/// `samples / shards` samples, the first `samples % shards` shards one more.
/// The result depends on `shards` but not on scheduling.
pub fn reliability_montecarlo_sharded(
    d: &Diagram,
    set: &GeneratingSet,
    p: &ReliabilityAssignment,
    samples: u64,
    seed: u64,
    shards: u64,
) -> Result<MonteCarloReport> {
    if samples == 0 {
        return Err(Error::InvalidArgument("samples must be at least 1".into()));
    }
    if shards == 0 {
        return Err(Error::InvalidArgument("shards must be at least 1".into()));
    }
    check_inputs(d, set, p)?;
    let vars = GeneratingSet::of(d);
    let probs: Vec<(ComponentId, f64)> = vars
        .components()
        .iter()
        .map(|c| (*c, p.probs[c]))
        .collect();
    let run = |stream: u64, count: u64| -> u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(stream);
        let mut state = StateAssignment::all_failed(&vars);
        let mut hits = 0;
        for _ in 0..count {
            for (c, pi) in &probs {
                let u: f64 = rng.random();
                state.set(*c, u < *pi).expect("component in state");
            }
            if d.evaluate(&state).expect("all components assigned") {
                hits += 1;
            }
        }
        hits
    };
    let share = |i: u64| samples / shards + u64::from(i < samples % shards);
    let hits = if shards == 1 {
        run(0, samples)
    } else {
        std::thread::scope(|scope| {
            let handles: Vec<_> = (0..shards)
                .map(|i| {
                    let run = &run;
                    scope.spawn(move || run(i, share(i)))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("shard panicked")).sum()
        })
    };
    Ok(MonteCarloReport::from_hits(hits, samples, seed))
}
