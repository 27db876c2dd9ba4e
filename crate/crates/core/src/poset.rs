//! Finite posets stored as a dense comparison table.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Index of an element inside one [`FinitePoset`], in declared order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct ElementId(pub usize);

impl ElementId {
    pub fn index(self) -> usize {
        self.0
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PosetError {
    #[error("unknown element `{0}`")]
    UnknownElement(String),
    #[error("duplicate element `{0}`")]
    DuplicateElement(String),
    #[error("generators force a cycle: {}", .0.join(" <= "))]
    Cycle(Vec<String>),
    #[error("relation is not a partial order: {0}")]
    AxiomViolation(String),
    #[error("subset is not a chain")]
    NotAChain,
}

/// A set of elements of one poset, kept sorted in declared order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Subset(Vec<ElementId>);

impl Subset {
    pub fn new(members: impl IntoIterator<Item = ElementId>) -> Self {
        let mut v: Vec<ElementId> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        Subset(v)
    }

    pub fn empty() -> Self {
        Subset(Vec::new())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, x: ElementId) -> bool {
        self.0.binary_search(&x).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.0.iter().copied()
    }

    pub fn as_slice(&self) -> &[ElementId] {
        &self.0
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset::new(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &Subset) -> Subset {
        Subset(self.iter().filter(|x| !other.contains(*x)).collect())
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset(self.iter().filter(|x| other.contains(*x)).collect())
    }

    pub fn is_subset(&self, other: &Subset) -> bool {
        self.iter().all(|x| other.contains(x))
    }
}

impl FromIterator<ElementId> for Subset {
    fn from_iter<I: IntoIterator<Item = ElementId>>(iter: I) -> Self {
        Subset::new(iter)
    }
}

/// Square bit matrix; row `x` holds the set of `y` with `x <= y`.
#[derive(Debug, Clone, PartialEq, Eq)]
struct BitMatrix {
    n: usize,
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        BitMatrix { n, words, bits: vec![0; n * words] }
    }

    fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }

    fn or_row_into(&mut self, src: usize, dst: usize) {
        let w = self.words;
        for k in 0..w {
            let v = self.bits[src * w + k];
            self.bits[dst * w + k] |= v;
        }
    }

    fn row_ones(&self, r: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        self.row(r).iter().enumerate().flat_map(move |(k, &word)| {
            let mut w = word;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(k * 64 + t)
            })
            .filter(move |&c| c < n)
        })
    }
}

/// A finite partially ordered set with named elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinitePoset {
    names: Vec<String>,
    index: HashMap<String, ElementId>,
    up: BitMatrix,
}

/// The result of [`FinitePoset::comparability`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Comparability {
    pub up: Subset,
    pub down: Subset,
    pub incomparable: Subset,
}

/// Interval queries over a finite poset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IntervalQuery {
    Open(ElementId, ElementId),
    Closed(ElementId, ElementId),
    Convex(Subset),
    Wide(Subset),
}

impl FinitePoset {
    /// Builds the reflexive-transitive closure of `pairs` (each `(a, b)` meaning `a <= b`).
    pub fn from_generators<S: AsRef<str>>(
        elements: &[S],
        pairs: &[(S, S)],
    ) -> Result<Self, PosetError> {
        let (names, index) = Self::index_names(elements)?;
        let n = names.len();
        let lookup = |s: &str| {
            index
                .get(s)
                .copied()
                .ok_or_else(|| PosetError::UnknownElement(s.to_string()))
        };
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (a, b) in pairs {
            let a = lookup(a.as_ref())?.0;
            let b = lookup(b.as_ref())?.0;
            if a != b {
                succ[a].push(b);
            }
        }
        for s in &mut succ {
            s.sort_unstable();
            s.dedup();
        }
        if let Some(cycle) = shortest_cycle(&succ) {
            let mut named: Vec<String> = cycle.iter().map(|&i| names[i].clone()).collect();
            named.push(names[cycle[0]].clone());
            return Err(PosetError::Cycle(named));
        }
        let order = topological_order(&succ);
        let mut up = BitMatrix::new(n);
        for &x in order.iter().rev() {
            up.set(x, x);
            for &y in &succ[x] {
                up.or_row_into(y, x);
            }
        }
        Ok(FinitePoset { names, index, up })
    }

    /// Builds a poset from an explicit `le` predicate and checks the three axioms.
    pub fn from_relation<S: AsRef<str>>(
        elements: &[S],
        le: impl Fn(usize, usize) -> bool,
    ) -> Result<Self, PosetError> {
        let (names, index) = Self::index_names(elements)?;
        let n = names.len();
        let mut up = BitMatrix::new(n);
        for x in 0..n {
            for y in 0..n {
                if le(x, y) {
                    up.set(x, y);
                }
            }
        }
        let p = FinitePoset { names, index, up };
        p.check_axioms()?;
        Ok(p)
    }

    fn index_names<S: AsRef<str>>(
        elements: &[S],
    ) -> Result<(Vec<String>, HashMap<String, ElementId>), PosetError> {
        let mut names = Vec::with_capacity(elements.len());
        let mut index = HashMap::with_capacity(elements.len());
        for (i, e) in elements.iter().enumerate() {
            let s = e.as_ref().to_string();
            if index.insert(s.clone(), ElementId(i)).is_some() {
                return Err(PosetError::DuplicateElement(s));
            }
            names.push(s);
        }
        Ok((names, index))
    }

    /// Verifies reflexivity, antisymmetry and transitivity of the stored table.
    pub fn check_axioms(&self) -> Result<(), PosetError> {
        let n = self.len();
        for x in 0..n {
            if !self.up.get(x, x) {
                return Err(PosetError::AxiomViolation(format!(
                    "{} is not <= itself",
                    self.names[x]
                )));
            }
        }
        for x in 0..n {
            for y in self.up.row_ones(x) {
                if y != x && self.up.get(y, x) {
                    return Err(PosetError::AxiomViolation(format!(
                        "{} and {} are mutually <=",
                        self.names[x], self.names[y]
                    )));
                }
                let rx = self.up.row(x);
                let ry = self.up.row(y);
                if ry.iter().zip(rx).any(|(a, b)| a & !b != 0) {
                    let z = self
                        .up
                        .row_ones(y)
                        .find(|&z| !self.up.get(x, z))
                        .expect("row difference is nonempty");
                    return Err(PosetError::AxiomViolation(format!(
                        "{} <= {} <= {} but not {} <= {}",
                        self.names[x], self.names[y], self.names[z], self.names[x], self.names[z]
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> {
        (0..self.len()).map(ElementId)
    }

    pub fn all(&self) -> Subset {
        Subset(self.elements().collect())
    }

    pub fn name(&self, x: ElementId) -> &str {
        &self.names[x.0]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn id(&self, name: &str) -> Result<ElementId, PosetError> {
        self.index
            .get(name)
            .copied()
            .ok_or_else(|| PosetError::UnknownElement(name.to_string()))
    }

    pub fn subset_by_names<S: AsRef<str>>(&self, names: &[S]) -> Result<Subset, PosetError> {
        names.iter().map(|s| self.id(s.as_ref())).collect()
    }

    pub fn names_of(&self, s: &Subset) -> Vec<String> {
        s.iter().map(|x| self.name(x).to_string()).collect()
    }

    pub fn le(&self, x: ElementId, y: ElementId) -> bool {
        self.up.get(x.0, y.0)
    }

    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        x != y && self.le(x, y)
    }

    pub fn comparable(&self, x: ElementId, y: ElementId) -> bool {
        self.le(x, y) || self.le(y, x)
    }

    pub fn incomparable(&self, x: ElementId, y: ElementId) -> bool {
        !self.comparable(x, y)
    }

    /// Elements `>= x`, including `x`.
    pub fn up_set(&self, x: ElementId) -> impl Iterator<Item = ElementId> + '_ {
        self.up.row_ones(x.0).map(ElementId)
    }

    pub fn comparability(&self, x: ElementId) -> Comparability {
        let mut up = Vec::new();
        let mut down = Vec::new();
        let mut inc = Vec::new();
        for y in self.elements() {
            if y == x {
                continue;
            }
            if self.le(x, y) {
                up.push(y);
            } else if self.le(y, x) {
                down.push(y);
            } else {
                inc.push(y);
            }
        }
        Comparability { up: Subset(up), down: Subset(down), incomparable: Subset(inc) }
    }

    pub fn interval(&self, q: &IntervalQuery) -> Subset {
        match q {
            IntervalQuery::Open(x, y) => self
                .elements()
                .filter(|&z| self.lt(*x, z) && self.lt(z, *y))
                .collect(),
            IntervalQuery::Closed(x, y) => self
                .elements()
                .filter(|&z| self.le(*x, z) && self.le(z, *y))
                .collect(),
            IntervalQuery::Convex(xs) => self
                .elements()
                .filter(|&z| {
                    xs.iter().any(|a| self.le(a, z)) && xs.iter().any(|b| self.le(z, b))
                })
                .collect(),
            IntervalQuery::Wide(xs) => {
                // w > X means w is strictly above every member of X, dually for w < X.
                let above: Vec<ElementId> = self
                    .elements()
                    .filter(|&w| xs.iter().all(|a| self.lt(a, w)))
                    .collect();
                let below: Vec<ElementId> = self
                    .elements()
                    .filter(|&w| xs.iter().all(|a| self.lt(w, a)))
                    .collect();
                self.elements()
                    .filter(|&z| {
                        above.iter().all(|&w| self.lt(z, w)) && below.iter().all(|&w| self.lt(w, z))
                    })
                    .collect()
            }
        }
    }

    /// All pairs `(v, u)` with `v` covering `u`, sorted by `v` then `u`.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for v in self.elements() {
            for u in self.elements() {
                if self.lt(u, v)
                    && !self.elements().any(|z| self.lt(u, z) && self.lt(z, v))
                {
                    out.push((v, u));
                }
            }
        }
        out
    }

    pub fn is_chain(&self, s: &Subset) -> bool {
        let v = s.as_slice();
        v.iter()
            .enumerate()
            .all(|(i, &a)| v[i + 1..].iter().all(|&b| self.comparable(a, b)))
    }

    pub fn is_antichain(&self, s: &Subset) -> bool {
        let v = s.as_slice();
        v.iter()
            .enumerate()
            .all(|(i, &a)| v[i + 1..].iter().all(|&b| self.incomparable(a, b)))
    }

    /// True iff no outside element sits strictly between two members while staying comparable to all of `c`.
    pub fn is_contiguous_chain(&self, c: &Subset) -> Result<bool, PosetError> {
        if !self.is_chain(c) {
            return Err(PosetError::NotAChain);
        }
        Ok(!self.elements().any(|x| {
            !c.contains(x)
                && c.iter().all(|y| self.comparable(x, y))
                && c.iter().any(|y| self.lt(y, x))
                && c.iter().any(|z| self.lt(x, z))
        }))
    }

    /// Members of `s` sorted bottom to top; `s` must be a chain.
    pub fn sort_chain(&self, s: &Subset) -> Vec<ElementId> {
        let mut v = s.as_slice().to_vec();
        v.sort_by_key(|&x| s.iter().filter(|&y| self.le(y, x)).count());
        v
    }

    /// Induced subposet on `s`, keeping names and declared order.
    pub fn induced(&self, s: &Subset) -> FinitePoset {
        let ids = s.as_slice();
        let names: Vec<&str> = ids.iter().map(|&x| self.name(x)).collect();
        FinitePoset::from_relation(&names, |a, b| self.le(ids[a], ids[b]))
            .expect("an induced subposet of a poset is a poset")
    }

    pub fn to_file(&self) -> PosetFile {
        PosetFile {
            elements: self.names.clone(),
            le: self
                .covers()
                .into_iter()
                .map(|(v, u)| [self.name(u).to_string(), self.name(v).to_string()])
                .collect(),
        }
    }

    pub fn from_file(file: &PosetFile) -> Result<Self, PosetError> {
        let pairs: Vec<(&str, &str)> =
            file.le.iter().map(|[a, b]| (a.as_str(), b.as_str())).collect();
        let elems: Vec<&str> = file.elements.iter().map(String::as_str).collect();
        FinitePoset::from_generators(&elems, &pairs)
    }
}

/// On-disk poset format: `le` lists generator pairs `[a, b]` meaning `a <= b`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PosetFile {
    pub elements: Vec<String>,
    pub le: Vec<[String; 2]>,
}

fn tarjan_scc(succ: &[Vec<usize>]) -> Vec<usize> {
    struct State<'a> {
        succ: &'a [Vec<usize>],
        index: Vec<Option<usize>>,
        low: Vec<usize>,
        on_stack: Vec<bool>,
        stack: Vec<usize>,
        comp: Vec<usize>,
        next_index: usize,
        next_comp: usize,
    }
    fn visit(s: &mut State<'_>, v: usize) {
        s.index[v] = Some(s.next_index);
        s.low[v] = s.next_index;
        s.next_index += 1;
        s.stack.push(v);
        s.on_stack[v] = true;
        for k in 0..s.succ[v].len() {
            let w = s.succ[v][k];
            match s.index[w] {
                None => {
                    visit(s, w);
                    s.low[v] = s.low[v].min(s.low[w]);
                }
                Some(iw) if s.on_stack[w] => s.low[v] = s.low[v].min(iw),
                _ => {}
            }
        }
        if Some(s.low[v]) == s.index[v] {
            loop {
                let w = s.stack.pop().expect("stack holds v");
                s.on_stack[w] = false;
                s.comp[w] = s.next_comp;
                if w == v {
                    break;
                }
            }
            s.next_comp += 1;
        }
    }
    let n = succ.len();
    let mut s = State {
        succ,
        index: vec![None; n],
        low: vec![0; n],
        on_stack: vec![false; n],
        stack: Vec::new(),
        comp: vec![0; n],
        next_index: 0,
        next_comp: 0,
    };
    for v in 0..n {
        if s.index[v].is_none() {
            visit(&mut s, v);
        }
    }
    s.comp
}

/// Returns a shortest directed cycle (as a vertex list) if the graph has one.
fn shortest_cycle(succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    let comp = tarjan_scc(succ);
    let n = succ.len();
    let mut size = vec![0usize; n];
    for &c in &comp {
        size[c] += 1;
    }
    let mut best: Option<Vec<usize>> = None;
    for start in 0..n {
        if size[comp[start]] < 2 {
            continue;
        }
        // BFS inside the component for the shortest path back to `start`.
        let mut parent: Vec<Option<usize>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([start]);
        seen[start] = true;
        let mut closing = None;
        'bfs: while let Some(v) = queue.pop_front() {
            for &w in &succ[v] {
                if comp[w] != comp[start] {
                    continue;
                }
                if w == start {
                    closing = Some(v);
                    break 'bfs;
                }
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = Some(v);
                    queue.push_back(w);
                }
            }
        }
        if let Some(mut v) = closing {
            let mut path = vec![v];
            while let Some(p) = parent[v] {
                path.push(p);
                v = p;
            }
            path.reverse();
            if best.as_ref().is_none_or(|b| path.len() < b.len()) {
                best = Some(path);
            }
        }
    }
    best
}

fn topological_order(succ: &[Vec<usize>]) -> Vec<usize> {
    let n = succ.len();
    let mut indeg = vec![0usize; n];
    for s in succ {
        for &w in s {
            indeg[w] += 1;
        }
    }
    let mut queue: VecDeque<usize> = (0..n).filter(|&v| indeg[v] == 0).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(v) = queue.pop_front() {
        order.push(v);
        for &w in &succ[v] {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                queue.push_back(w);
            }
        }
    }
    order
}

#[cfg(test)]
pub(crate) mod fixtures {
    use super::*;

    pub fn chain3() -> FinitePoset {
        FinitePoset::from_generators(&["a", "b", "c"], &[("a", "b"), ("b", "c")]).unwrap()
    }

    pub fn diamond() -> FinitePoset {
        FinitePoset::from_generators(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
        )
        .unwrap()
    }

    pub fn antichain(n: usize) -> FinitePoset {
        let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
        FinitePoset::from_generators::<String>(&names, &[]).unwrap()
    }

    pub fn grid(k: usize) -> FinitePoset {
        let names: Vec<String> = (0..k)
            .flat_map(|x| (0..k).map(move |y| format!("({x},{y})")))
            .collect();
        FinitePoset::from_relation(&names, |a, b| {
            let (ax, ay) = (a / k, a % k);
            let (bx, by) = (b / k, b % k);
            ax <= bx && ay <= by
        })
        .unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::fixtures::*;
    use super::*;
    use proptest::prelude::*;

    fn s(p: &FinitePoset, names: &[&str]) -> Subset {
        p.subset_by_names(names).unwrap()
    }

    #[test]
    fn chain_closure_is_transitive() {
        let p = chain3();
        assert!(p.le(p.id("a").unwrap(), p.id("c").unwrap()));
        assert!(!p.le(p.id("c").unwrap(), p.id("a").unwrap()));
    }

    #[test]
    fn three_cycle_is_rejected_with_its_cycle() {
        let err = FinitePoset::from_generators(
            &["a", "b", "c"],
            &[("a", "b"), ("b", "c"), ("c", "a")],
        )
        .unwrap_err();
        match err {
            PosetError::Cycle(c) => assert_eq!(c.len(), 4),
            other => panic!("expected cycle, got {other:?}"),
        }
    }

    #[test]
    fn shortest_cycle_is_reported() {
        let err = FinitePoset::from_generators(
            &["a", "b", "c", "d"],
            &[("a", "b"), ("b", "c"), ("c", "d"), ("d", "a"), ("c", "b")],
        )
        .unwrap_err();
        assert_eq!(err, PosetError::Cycle(vec!["b".into(), "c".into(), "b".into()]));
    }

    #[test]
    fn unknown_and_duplicate_elements() {
        assert_eq!(
            FinitePoset::from_generators(&["a"], &[("a", "z")]).unwrap_err(),
            PosetError::UnknownElement("z".into())
        );
        assert_eq!(
            FinitePoset::from_generators::<&str>(&["a", "a"], &[]).unwrap_err(),
            PosetError::DuplicateElement("a".into())
        );
    }

    #[test]
    fn diamond_middle_is_incomparable() {
        let p = diamond();
        assert!(p.incomparable(p.id("b").unwrap(), p.id("c").unwrap()));
    }

    #[test]
    fn comparability_examples() {
        let p = diamond();
        let c = p.comparability(p.id("b").unwrap());
        assert_eq!(c.up, s(&p, &["d"]));
        assert_eq!(c.down, s(&p, &["a"]));
        assert_eq!(c.incomparable, s(&p, &["c"]));

        let p = chain3();
        let c = p.comparability(p.id("b").unwrap());
        assert_eq!((c.up, c.down), (s(&p, &["c"]), s(&p, &["a"])));
        assert!(c.incomparable.is_empty());

        let p = FinitePoset::from_generators::<&str>(&["a", "b", "c"], &[]).unwrap();
        let c = p.comparability(p.id("b").unwrap());
        assert_eq!(c.incomparable, s(&p, &["a", "c"]));
    }

    #[test]
    fn interval_examples() {
        let p = diamond();
        let id = |n| p.id(n).unwrap();
        assert_eq!(p.interval(&IntervalQuery::Wide(s(&p, &["b"]))), s(&p, &["b", "c"]));
        assert_eq!(p.interval(&IntervalQuery::Closed(id("a"), id("d"))), p.all());
        assert_eq!(p.interval(&IntervalQuery::Open(id("a"), id("d"))), s(&p, &["b", "c"]));
        let q = chain3();
        assert_eq!(
            q.interval(&IntervalQuery::Open(q.id("a").unwrap(), q.id("c").unwrap())),
            s(&q, &["b"])
        );
        assert_eq!(
            q.interval(&IntervalQuery::Open(q.id("c").unwrap(), q.id("a").unwrap())),
            Subset::empty()
        );
    }

    #[test]
    fn wide_interval_of_empty_set_is_empty() {
        let p = diamond();
        assert!(p.interval(&IntervalQuery::Wide(Subset::empty())).is_empty());
    }

    #[test]
    fn covers_examples() {
        let p = chain3();
        let named = |p: &FinitePoset| -> Vec<(String, String)> {
            p.covers()
                .into_iter()
                .map(|(v, u)| (p.name(v).to_string(), p.name(u).to_string()))
                .collect()
        };
        assert_eq!(named(&p), vec![("b".into(), "a".into()), ("c".into(), "b".into())]);
        let d = diamond();
        assert_eq!(
            named(&d),
            vec![
                ("b".into(), "a".into()),
                ("c".into(), "a".into()),
                ("d".into(), "b".into()),
                ("d".into(), "c".into())
            ]
        );
        assert!(antichain(2).covers().is_empty());
    }

    #[test]
    fn chain_and_antichain_examples() {
        let p = diamond();
        assert!(p.is_chain(&s(&p, &["a", "b", "d"])));
        assert!(p.is_antichain(&s(&p, &["b", "c"])));
        let bcd = s(&p, &["b", "c", "d"]);
        assert!(!p.is_chain(&bcd) && !p.is_antichain(&bcd));
        assert!(p.is_chain(&Subset::empty()) && p.is_antichain(&Subset::empty()));
    }

    #[test]
    fn contiguity_examples() {
        let p = chain3();
        assert!(!p.is_contiguous_chain(&s(&p, &["a", "c"])).unwrap());
        assert!(p.is_contiguous_chain(&s(&p, &["a", "b"])).unwrap());
        let d = diamond();
        assert!(!d.is_contiguous_chain(&s(&d, &["a", "d"])).unwrap());
        assert_eq!(d.is_contiguous_chain(&s(&d, &["b", "c"])), Err(PosetError::NotAChain));
    }

    #[test]
    fn from_relation_rejects_non_transitive_tables() {
        let err = FinitePoset::from_relation(&["a", "b", "c"], |x, y| {
            x == y || (x, y) == (0, 1) || (x, y) == (1, 2)
        })
        .unwrap_err();
        assert!(matches!(err, PosetError::AxiomViolation(_)));
    }

    #[test]
    fn file_round_trip() {
        let p = grid(3);
        let file = p.to_file();
        let json = serde_json::to_string(&file).unwrap();
        let back: PosetFile = serde_json::from_str(&json).unwrap();
        assert_eq!(FinitePoset::from_file(&back).unwrap(), p);
    }

    fn arb_dag() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
        (1usize..10).prop_flat_map(|n| {
            let pairs = prop::collection::vec((0..n, 0..n), 0..20)
                .prop_map(|v| v.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect());
            (Just(n), pairs)
        })
    }

    fn build(n: usize, pairs: &[(usize, usize)]) -> FinitePoset {
        // Reverse the declared order so it is not a linear extension.
        let names: Vec<String> = (0..n).map(|i| format!("e{}", n - 1 - i)).collect();
        let gens: Vec<(String, String)> =
            pairs.iter().map(|&(a, b)| (format!("e{a}"), format!("e{b}"))).collect();
        FinitePoset::from_generators(&names, &gens).unwrap()
    }

    proptest! {
        #[test]
        fn generated_posets_satisfy_axioms((n, pairs) in arb_dag()) {
            let p = build(n, &pairs);
            prop_assert!(p.check_axioms().is_ok());
        }

        #[test]
        fn covers_regenerate_the_order((n, pairs) in arb_dag()) {
            let p = build(n, &pairs);
            let q = FinitePoset::from_file(&p.to_file()).unwrap();
            prop_assert_eq!(p, q);
        }

        #[test]
        fn comparability_partitions((n, pairs) in arb_dag()) {
            let p = build(n, &pairs);
            for x in p.elements() {
                let c = p.comparability(x);
                prop_assert_eq!(c.up.len() + c.down.len() + c.incomparable.len() + 1, p.len());
            }
        }

        #[test]
        fn interval_containments((n, pairs) in arb_dag()) {
            let p = build(n, &pairs);
            for x in p.elements() {
                for y in p.elements().filter(|&y| p.le(x, y)) {
                    let open = p.interval(&IntervalQuery::Open(x, y));
                    let closed = p.interval(&IntervalQuery::Closed(x, y));
                    let wide = p.interval(&IntervalQuery::Wide(Subset::new([x, y])));
                    prop_assert!(open.is_subset(&closed));
                    prop_assert!(closed.is_subset(&wide));
                }
            }
        }

        #[test]
        fn convex_hull_is_idempotent((n, pairs) in arb_dag(), mask in any::<u16>()) {
            let p = build(n, &pairs);
            let x: Subset = p.elements().filter(|e| mask >> e.0 & 1 == 1).collect();
            let c = p.interval(&IntervalQuery::Convex(x.clone()));
            prop_assert!(x.is_subset(&c));
            prop_assert_eq!(p.interval(&IntervalQuery::Convex(c.clone())), c);
        }
    }
}
