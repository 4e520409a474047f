//! Canonical forms of diagrams.
//!
//! Every Boolean function over a generating set has exactly one reduced,
//! ordered decision graph in a [`NodeStore`], so two diagrams are equal as
//! Boolean terms iff their canonical forms have the same root. Nodes are
//! hash-consed: the store never holds two nodes with the same
//! `(component, low, high)` triple, and never a node whose children coincide.
//! The variable order is the order of the store's generating set.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;
use std::sync::atomic::{AtomicU64, Ordering};

use crate::diagram::{ComponentId, Diagram, GeneratingSet, StateAssignment, DEFAULT_TABLE_CAP};
use crate::error::{Error, Result};

/// Default bound on the number of nodes a store may hold.
pub const DEFAULT_NODE_CAPACITY: usize = 1 << 22;

/// Largest component count accepted by [`enumerate_classes`].
pub const MAX_ENUMERATION_COMPONENTS: usize = 4;

static NEXT_STORE_ID: AtomicU64 = AtomicU64::new(1);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct NodeId(u32);

impl NodeId {
    pub const ZERO: NodeId = NodeId(0);
    pub const ONE: NodeId = NodeId(1);

    pub fn is_terminal(self) -> bool {
        self.0 < 2
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A Boolean function, identified by its root node in a particular store.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CanonicalForm {
    store: u64,
    root: NodeId,
}

impl CanonicalForm {
    pub fn root(self) -> NodeId {
        self.root
    }

    pub fn is_one(self) -> bool {
        self.root == NodeId::ONE
    }

    pub fn is_zero(self) -> bool {
        self.root == NodeId::ZERO
    }
}

/// The decision at an internal node: the component tested and both branches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Decision {
    pub component: ComponentId,
    pub low: CanonicalForm,
    pub high: CanonicalForm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct Node {
    level: u32,
    low: NodeId,
    high: NodeId,
}

const TERMINAL_LEVEL: u32 = u32::MAX;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Op {
    And,
    Or,
    Not,
}

/// Hash-consed storage for the nodes of canonical forms over one generating set.
#[derive(Debug)]
pub struct NodeStore {
    id: u64,
    set: GeneratingSet,
    nodes: Vec<Node>,
    unique: HashMap<Node, NodeId>,
    memo: HashMap<(Op, NodeId, NodeId), NodeId>,
    capacity: usize,
}

impl NodeStore {
    pub fn new(set: GeneratingSet) -> NodeStore {
        NodeStore::with_capacity_limit(set, DEFAULT_NODE_CAPACITY)
    }

    /// A store that refuses to grow beyond `capacity` nodes (terminals included).
    pub fn with_capacity_limit(set: GeneratingSet, capacity: usize) -> NodeStore {
        let terminal = Node {
            level: TERMINAL_LEVEL,
            low: NodeId::ZERO,
            high: NodeId::ZERO,
        };
        NodeStore {
            id: NEXT_STORE_ID.fetch_add(1, Ordering::Relaxed),
            set,
            nodes: vec![terminal, terminal],
            unique: HashMap::new(),
            memo: HashMap::new(),
            capacity: capacity.max(2),
        }
    }

    pub fn generating_set(&self) -> &GeneratingSet {
        &self.set
    }

    /// Number of nodes including the two terminals.
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn one(&self) -> CanonicalForm {
        self.form(NodeId::ONE)
    }

    pub fn zero(&self) -> CanonicalForm {
        self.form(NodeId::ZERO)
    }

    /// Drops the operation cache. Forms stay valid.
    pub fn clear_cache(&mut self) {
        self.memo.clear();
    }

    fn form(&self, root: NodeId) -> CanonicalForm {
        CanonicalForm {
            store: self.id,
            root,
        }
    }

    fn check(&self, c: CanonicalForm) -> Result<NodeId> {
        if c.store != self.id {
            return Err(Error::StoreMismatch);
        }
        Ok(c.root)
    }

    fn level(&self, n: NodeId) -> u32 {
        self.nodes[n.index()].level
    }

    fn make(&mut self, level: u32, low: NodeId, high: NodeId) -> Result<NodeId> {
        if low == high {
            return Ok(low);
        }
        let node = Node { level, low, high };
        if let Some(id) = self.unique.get(&node) {
            return Ok(*id);
        }
        if self.nodes.len() >= self.capacity {
            return Err(Error::StoreCapacity(self.capacity));
        }
        let id = NodeId(self.nodes.len() as u32);
        self.nodes.push(node);
        self.unique.insert(node, id);
        Ok(id)
    }

    /// The canonical form of the elementary diagram for `c`.
    pub fn variable(&mut self, c: ComponentId) -> Result<CanonicalForm> {
        let level = self.set.position(c).ok_or(Error::NotBuiltUpon(c))? as u32;
        let root = self.make(level, NodeId::ZERO, NodeId::ONE)?;
        Ok(self.form(root))
    }

    /// Builds the canonical form of `d`.
    pub fn canonicalize(&mut self, d: &Diagram) -> Result<CanonicalForm> {
        if let Some(c) = d.first_foreign(&self.set) {
            return Err(Error::NotBuiltUpon(c));
        }
        let root = self.build(d)?;
        Ok(self.form(root))
    }

    fn build(&mut self, d: &Diagram) -> Result<NodeId> {
        match d {
            Diagram::Elementary(c) => Ok(self.variable(*c)?.root),
            Diagram::One => Ok(NodeId::ONE),
            Diagram::Zero => Ok(NodeId::ZERO),
            Diagram::Series(a, b) => {
                let (x, y) = (self.build(a)?, self.build(b)?);
                self.apply(Op::And, x, y)
            }
            Diagram::Parallel(a, b) => {
                let (x, y) = (self.build(a)?, self.build(b)?);
                self.apply(Op::Or, x, y)
            }
            Diagram::Complement(a) => {
                let x = self.build(a)?;
                self.negate(x)
            }
        }
    }

    /// Pointwise minimum (series).
    pub fn meet(&mut self, a: CanonicalForm, b: CanonicalForm) -> Result<CanonicalForm> {
        let (x, y) = (self.check(a)?, self.check(b)?);
        let root = self.apply(Op::And, x, y)?;
        Ok(self.form(root))
    }

    /// Pointwise maximum (parallel).
    pub fn join(&mut self, a: CanonicalForm, b: CanonicalForm) -> Result<CanonicalForm> {
        let (x, y) = (self.check(a)?, self.check(b)?);
        let root = self.apply(Op::Or, x, y)?;
        Ok(self.form(root))
    }

    pub fn complement(&mut self, a: CanonicalForm) -> Result<CanonicalForm> {
        let x = self.check(a)?;
        let root = self.negate(x)?;
        Ok(self.form(root))
    }

    fn negate(&mut self, x: NodeId) -> Result<NodeId> {
        match x {
            NodeId::ZERO => return Ok(NodeId::ONE),
            NodeId::ONE => return Ok(NodeId::ZERO),
            _ => {}
        }
        let key = (Op::Not, x, x);
        if let Some(r) = self.memo.get(&key) {
            return Ok(*r);
        }
        let node = self.nodes[x.index()];
        let low = self.negate(node.low)?;
        let high = self.negate(node.high)?;
        let r = self.make(node.level, low, high)?;
        self.memo.insert(key, r);
        Ok(r)
    }

    fn apply(&mut self, op: Op, x: NodeId, y: NodeId) -> Result<NodeId> {
        match (op, x, y) {
            (Op::And, NodeId::ZERO, _) | (Op::And, _, NodeId::ZERO) => return Ok(NodeId::ZERO),
            (Op::And, NodeId::ONE, o) | (Op::And, o, NodeId::ONE) => return Ok(o),
            (Op::Or, NodeId::ONE, _) | (Op::Or, _, NodeId::ONE) => return Ok(NodeId::ONE),
            (Op::Or, NodeId::ZERO, o) | (Op::Or, o, NodeId::ZERO) => return Ok(o),
            _ if x == y => return Ok(x),
            _ => {}
        }
        let key = (op, x.min(y), x.max(y));
        if let Some(r) = self.memo.get(&key) {
            return Ok(*r);
        }
        let (lx, ly) = (self.level(x), self.level(y));
        let level = lx.min(ly);
        let (x0, x1) = self.cofactors(x, level);
        let (y0, y1) = self.cofactors(y, level);
        let low = self.apply(op, x0, y0)?;
        let high = self.apply(op, x1, y1)?;
        let r = self.make(level, low, high)?;
        self.memo.insert(key, r);
        Ok(r)
    }

    fn cofactors(&self, n: NodeId, level: u32) -> (NodeId, NodeId) {
        let node = self.nodes[n.index()];
        if node.level == level {
            (node.low, node.high)
        } else {
            (n, n)
        }
    }

    /// The decision at the root of `c`, or `None` for the terminals.
    pub fn decision(&self, c: CanonicalForm) -> Result<Option<Decision>> {
        let root = self.check(c)?;
        if root.is_terminal() {
            return Ok(None);
        }
        let node = self.nodes[root.index()];
        Ok(Some(Decision {
            component: self.set.components()[node.level as usize],
            low: self.form(node.low),
            high: self.form(node.high),
        }))
    }

    /// Follows the path selected by `state` from the root to a terminal.
    pub fn evaluate(&self, c: CanonicalForm, state: &StateAssignment) -> Result<bool> {
        let mut n = self.check(c)?;
        while !n.is_terminal() {
            let node = self.nodes[n.index()];
            let comp = self.set.components()[node.level as usize];
            let bit = state.get(comp).ok_or(Error::MissingComponent(comp))?;
            n = if bit { node.high } else { node.low };
        }
        Ok(n == NodeId::ONE)
    }

    /// Some state under which `c` evaluates to 1, components off the chosen
    /// path set to 0. `None` iff `c` is ZERO.
    pub fn satisfying_state(&self, c: CanonicalForm) -> Result<Option<StateAssignment>> {
        let mut n = self.check(c)?;
        if n == NodeId::ZERO {
            return Ok(None);
        }
        let mut state = StateAssignment::all_failed(&self.set);
        while !n.is_terminal() {
            let node = self.nodes[n.index()];
            let comp = self.set.components()[node.level as usize];
            // every non-ZERO node reaches ONE; prefer the low branch
            let take_high = node.low == NodeId::ZERO;
            state.set(comp, take_high)?;
            n = if take_high { node.high } else { node.low };
        }
        Ok(Some(state))
    }

    /// Truth table over the store's generating set, same bit order as
    /// [`Diagram::truth_table`].
    pub fn truth_table(&self, c: CanonicalForm) -> Result<Vec<bool>> {
        self.check(c)?;
        let n = self.set.len();
        if n > DEFAULT_TABLE_CAP {
            return Err(Error::CapExceeded {
                what: "truth table components",
                limit: DEFAULT_TABLE_CAP,
                actual: n,
            });
        }
        (0..1u64 << n)
            .map(|k| self.evaluate(c, &StateAssignment::from_index(&self.set, k)))
            .collect()
    }

    /// A diagram whose canonical form is `c`: the disjunction, over every
    /// path to the ONE terminal, of the conjunction of the literals on it.
    pub fn representative(&self, c: CanonicalForm) -> Result<Diagram> {
        let root = self.check(c)?;
        let mut cubes = Vec::new();
        let mut path = Vec::new();
        self.collect_cubes(root, &mut path, &mut cubes);
        let mut cubes = cubes.into_iter();
        Ok(match cubes.next() {
            None => Diagram::Zero,
            Some(first) => cubes.fold(first, Diagram::parallel),
        })
    }

    fn collect_cubes(&self, n: NodeId, path: &mut Vec<(ComponentId, bool)>, out: &mut Vec<Diagram>) {
        match n {
            NodeId::ZERO => {}
            NodeId::ONE => {
                let mut literals = path.iter().map(|(c, positive)| {
                    let v = Diagram::Elementary(*c);
                    if *positive {
                        v
                    } else {
                        Diagram::complement(v)
                    }
                });
                let cube = match literals.next() {
                    None => Diagram::One,
                    Some(first) => literals.fold(first, Diagram::series),
                };
                out.push(cube);
            }
            _ => {
                let node = self.nodes[n.index()];
                let comp = self.set.components()[node.level as usize];
                path.push((comp, false));
                self.collect_cubes(node.low, path, out);
                path.pop();
                path.push((comp, true));
                self.collect_cubes(node.high, path, out);
                path.pop();
            }
        }
    }

    /// Number of distinct nodes reachable from `c`, terminals included.
    pub fn node_count(&self, c: CanonicalForm) -> Result<usize> {
        let root = self.check(c)?;
        let mut seen = HashSet::new();
        let mut stack = vec![root];
        while let Some(n) = stack.pop() {
            if seen.insert(n) && !n.is_terminal() {
                let node = self.nodes[n.index()];
                stack.push(node.low);
                stack.push(node.high);
            }
        }
        Ok(seen.len())
    }

    /// Adjacency-list export of the graph below `c`.
    ///
    /// The first line is `root <id>`; each internal node follows as
    /// `<id> <component index> <low id> <high id>`. The terminals are ids 0
    /// (ZERO) and 1 (ONE); internal nodes are numbered from 2 in depth-first
    /// discovery order from the root, low branch first.
    pub fn export(&self, c: CanonicalForm) -> Result<String> {
        let root = self.check(c)?;
        let mut ids: HashMap<NodeId, usize> = HashMap::new();
        ids.insert(NodeId::ZERO, 0);
        ids.insert(NodeId::ONE, 1);
        let mut order = Vec::new();
        self.discover(root, &mut ids, &mut order);
        let mut out = String::new();
        let _ = writeln!(out, "root {}", ids[&root]);
        for n in order {
            let node = self.nodes[n.index()];
            let comp = self.set.components()[node.level as usize];
            let _ = writeln!(
                out,
                "{} {} {} {}",
                ids[&n],
                comp.index(),
                ids[&node.low],
                ids[&node.high]
            );
        }
        Ok(out)
    }

    fn discover(&self, n: NodeId, ids: &mut HashMap<NodeId, usize>, order: &mut Vec<NodeId>) {
        if ids.contains_key(&n) {
            return;
        }
        ids.insert(n, ids.len());
        order.push(n);
        let node = self.nodes[n.index()];
        self.discover(node.low, ids, order);
        self.discover(node.high, ids, order);
    }

    /// Scans the whole store for violations of reducedness, ordering and
    /// uniqueness. Returns a description of the first violation found.
    pub fn verify_structure(&self) -> std::result::Result<(), String> {
        let mut seen = HashSet::new();
        for (i, node) in self.nodes.iter().enumerate().skip(2) {
            if node.low == node.high {
                return Err(format!("node {i} has identical children"));
            }
            for child in [node.low, node.high] {
                if self.level(child) <= node.level {
                    return Err(format!("node {i} is not ordered above child {}", child.0));
                }
            }
            if !seen.insert(*node) {
                return Err(format!("node {i} duplicates an earlier node"));
            }
        }
        Ok(())
    }
}

/// Decides equality of two diagrams as Boolean terms over `set`.
pub fn equals(d1: &Diagram, d2: &Diagram, set: &GeneratingSet) -> Result<bool> {
    let mut store = NodeStore::new(set.clone());
    let a = store.canonicalize(d1)?;
    let b = store.canonicalize(d2)?;
    Ok(a == b)
}

/// The full disjunctive normal form of a truth table over `set`: one
/// conjunction of all literals per true entry, `0` when there is none.
pub fn dnf_from_table(set: &GeneratingSet, table: &[bool]) -> Diagram {
    let mut minterms = table.iter().enumerate().filter(|(_, v)| **v).map(|(k, _)| {
        let mut literals = set.components().iter().enumerate().map(|(i, c)| {
            let v = Diagram::Elementary(*c);
            if (k >> i) & 1 == 1 {
                v
            } else {
                Diagram::complement(v)
            }
        });
        match literals.next() {
            None => Diagram::One,
            Some(first) => literals.fold(first, Diagram::series),
        }
    });
    match minterms.next() {
        None => Diagram::Zero,
        Some(first) => minterms.fold(first, Diagram::parallel),
    }
}

/// Outcome of [`enumerate_classes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassEnumeration {
    pub components: usize,
    /// Number of pairwise distinct canonical forms obtained.
    pub count: u64,
    /// Truth table of each class representative, in enumeration order.
    pub tables: Option<Vec<Vec<bool>>>,
}

/// Builds one full-DNF diagram for every Boolean function of `A1..An`,
/// canonicalizes all of them into one store and counts the distinct roots.
///
/// Fails if two functions share a root or a root does not compute the
/// function it was built from.
pub fn enumerate_classes(n: usize, list: bool) -> Result<ClassEnumeration> {
    let min = usize::from(list);
    if n < min || n > MAX_ENUMERATION_COMPONENTS {
        return Err(Error::OutOfRange {
            what: "component count",
            value: n,
            min,
            max: MAX_ENUMERATION_COMPONENTS,
        });
    }
    let set = GeneratingSet::first(n as u32);
    let mut store = NodeStore::new(set.clone());
    let width = 1usize << n;
    let functions = 1u64 << width;
    let mut roots = HashSet::with_capacity(functions as usize);
    let mut tables = list.then(Vec::new);
    for f in 0..functions {
        let table: Vec<bool> = (0..width).map(|k| (f >> k) & 1 == 1).collect();
        let form = store.canonicalize(&dnf_from_table(&set, &table))?;
        if !roots.insert(form.root) {
            return Err(Error::InvalidArgument(format!(
                "function {f:#x} collides with an earlier class"
            )));
        }
        if store.truth_table(form)? != table {
            return Err(Error::InvalidArgument(format!(
                "function {f:#x} canonicalized to a different function"
            )));
        }
        if let Some(t) = tables.as_mut() {
            t.push(table);
        }
    }
    Ok(ClassEnumeration {
        components: n,
        count: roots.len() as u64,
        tables,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse;

    fn a(i: u32) -> Diagram {
        Diagram::component(i)
    }

    fn store(n: u32) -> NodeStore {
        NodeStore::new(GeneratingSet::first(n))
    }

    #[test]
    fn canonicalize_examples() {
        let mut s = store(3);
        assert!(s.canonicalize(&(a(1) | !a(1))).unwrap().is_one());
        assert!(s.canonicalize(&(a(1) & Diagram::Zero)).unwrap().is_zero());
        let lhs = s.canonicalize(&(a(1) & (a(2) | a(3)))).unwrap();
        let rhs = s.canonicalize(&((a(1) & a(2)) | (a(1) & a(3)))).unwrap();
        assert_eq!(lhs, rhs);
        assert!(s.verify_structure().is_ok());
    }

    #[test]
    fn not_built_upon() {
        let mut s = store(2);
        assert_eq!(
            s.canonicalize(&a(3)),
            Err(Error::NotBuiltUpon(ComponentId::new(3).unwrap()))
        );
    }

    #[test]
    fn equals_examples() {
        let g = GeneratingSet::first(3);
        assert!(equals(&((a(1) & a(2)) & a(3)), &(a(1) & (a(2) & a(3))), &g).unwrap());
        assert!(equals(&a(1), &!!a(1), &g).unwrap());
        assert!(!equals(&a(1), &a(2), &g).unwrap());
    }

    #[test]
    fn induced_operations() {
        let mut s = store(3);
        let c = s.canonicalize(&parse("A1 * ~A2 + A3").unwrap()).unwrap();
        let nc = s.complement(c).unwrap();
        assert!(s.join(c, nc).unwrap().is_one());
        assert!(s.meet(c, nc).unwrap().is_zero());
        let one = s.one();
        let zero = s.zero();
        assert_eq!(s.meet(c, one).unwrap(), c);
        assert_eq!(s.join(c, zero).unwrap(), c);
    }

    #[test]
    fn store_mismatch() {
        let mut s1 = store(1);
        let mut s2 = store(1);
        let x = s1.canonicalize(&a(1)).unwrap();
        let y = s2.canonicalize(&a(1)).unwrap();
        assert_eq!(s1.meet(x, y), Err(Error::StoreMismatch));
        assert_eq!(s2.complement(x), Err(Error::StoreMismatch));
    }

    #[test]
    fn capacity_limit() {
        let mut s = NodeStore::with_capacity_limit(GeneratingSet::first(4), 4);
        assert_eq!(
            s.canonicalize(&parse("A1 * A2 * A3 * A4").unwrap()),
            Err(Error::StoreCapacity(4))
        );
    }

    #[test]
    fn representative_examples() {
        let mut s = store(2);
        let one = s.one();
        assert_eq!(s.representative(one).unwrap(), Diagram::One);
        let zero = s.zero();
        assert_eq!(s.representative(zero).unwrap(), Diagram::Zero);
        let x = s.canonicalize(&a(1)).unwrap();
        let r = s.representative(x).unwrap();
        assert_eq!(s.canonicalize(&r).unwrap(), x);

        let xor = s.canonicalize(&parse("A1 * ~A2 + ~A1 * A2").unwrap()).unwrap();
        assert_eq!(s.truth_table(xor).unwrap(), vec![false, true, true, false]);
        let r = s.representative(xor).unwrap();
        assert_eq!(s.canonicalize(&r).unwrap(), xor);
        assert_eq!(
            r.truth_table(&GeneratingSet::first(2)).unwrap(),
            vec![false, true, true, false]
        );
    }

    #[test]
    fn path_evaluation_matches_structure_function() {
        let g = GeneratingSet::first(3);
        let mut s = NodeStore::new(g.clone());
        let d = parse("~(A1 + A2 * ~A3) + A2 * A3").unwrap();
        let c = s.canonicalize(&d).unwrap();
        for k in 0..8 {
            let st = StateAssignment::from_index(&g, k);
            assert_eq!(s.evaluate(c, &st).unwrap(), d.evaluate(&st).unwrap());
        }
    }

    #[test]
    fn variable_order_follows_generating_set() {
        let g = GeneratingSet::new([3, 1, 2].map(|i| ComponentId::new(i).unwrap())).unwrap();
        let mut s = NodeStore::new(g);
        let c = s.canonicalize(&parse("A1 * A2 * A3").unwrap()).unwrap();
        let top = s.decision(c).unwrap().unwrap();
        assert_eq!(top.component.index(), 3);
        assert!(s.verify_structure().is_ok());
    }

    #[test]
    fn satisfying_state_examples() {
        let g = GeneratingSet::first(3);
        let mut s = NodeStore::new(g.clone());
        let zero = s.zero();
        assert_eq!(s.satisfying_state(zero).unwrap(), None);
        let one = s.one();
        assert_eq!(s.satisfying_state(one).unwrap().unwrap().to_bit_string(), "000");
        let d = parse("A1 * ~A2 * A3").unwrap();
        let c = s.canonicalize(&d).unwrap();
        let st = s.satisfying_state(c).unwrap().unwrap();
        assert_eq!(st.to_bit_string(), "101");
        assert!(d.evaluate(&st).unwrap());
    }

    #[test]
    fn export_format() {
        let mut s = store(2);
        let c = s.canonicalize(&(a(1) & a(2))).unwrap();
        assert_eq!(s.export(c).unwrap(), "root 2\n2 1 0 3\n3 2 0 1\n");
        let c = s.canonicalize(&(a(1) | a(2))).unwrap();
        assert_eq!(s.export(c).unwrap(), "root 2\n2 1 3 1\n3 2 0 1\n");
        let one = s.one();
        assert_eq!(s.export(one).unwrap(), "root 1\n");
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_classes(0, false).unwrap().count, 2);
        assert_eq!(enumerate_classes(1, false).unwrap().count, 4);
        assert_eq!(enumerate_classes(2, false).unwrap().count, 16);
        let listed = enumerate_classes(2, true).unwrap();
        assert_eq!(listed.tables.unwrap().len(), 16);
        assert!(matches!(enumerate_classes(5, false), Err(Error::OutOfRange { .. })));
        assert!(matches!(enumerate_classes(0, true), Err(Error::OutOfRange { .. })));
    }

    #[test]
    fn dnf_from_table_examples() {
        let g = GeneratingSet::first(2);
        assert_eq!(dnf_from_table(&g, &[false; 4]), Diagram::Zero);
        assert_eq!(dnf_from_table(&GeneratingSet::default(), &[true]), Diagram::One);
        assert_eq!(
            dnf_from_table(&g, &[false, false, false, true]),
            a(1) & a(2)
        );
    }
}
