//! The five infinite example posets, their finite windows and named subsets, and bounded checks
//! of the claims made about them.

mod claims;
mod order;

use std::collections::HashMap;
use std::fmt;
use std::ops::RangeInclusive;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use serde::{Serialize, Serializer};
use serde_json::json;
use thiserror::Error;

use crate::poset::{ElementId, FinitePoset, PosetError, Subset};
use crate::report::VerificationReport;

pub use claims::{verify_claim, Claim};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("element {element} does not belong to family {expected}")]
    FamilyMismatch { expected: FamilyId, element: String },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("unknown subset name `{0}` for this family")]
    UnknownName(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("missing parameter `{0}`")]
    MissingParam(String),
    #[error("invalid window: {0}")]
    InvalidSpec(String),
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyId {
    P1,
    P2,
    P3,
    P4,
    P5,
}

impl FamilyId {
    pub const ALL: [FamilyId; 5] = [FamilyId::P1, FamilyId::P2, FamilyId::P3, FamilyId::P4, FamilyId::P5];

    /// Number of window coordinates: `n` for P1, `(z, n)` for P2, `(x, y)` for P3, `(x, y, z)`
    /// for P4 and `(x, y, n)` for P5.
    pub fn arity(self) -> usize {
        match self {
            FamilyId::P1 => 1,
            FamilyId::P2 | FamilyId::P3 => 2,
            FamilyId::P4 | FamilyId::P5 => 3,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "P{}", self.index() + 1)
    }
}

impl FromStr for FamilyId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "P1" => Ok(FamilyId::P1),
            "P2" => Ok(FamilyId::P2),
            "P3" => Ok(FamilyId::P3),
            "P4" => Ok(FamilyId::P4),
            "P5" => Ok(FamilyId::P5),
            _ => Err(FamilyError::UnknownFamily(s.to_string())),
        }
    }
}

impl Serialize for FamilyId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum P1Point {
    Bot,
    Top,
    A,
    Pair(u64, u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SymbolicElement {
    P1(P1Point),
    P2 { z: i64, i: u8, n: u64 },
    P3 { x: u64, y: u64 },
    P4 { x: u64, y: u64, z: u64 },
    P5 { x: u64, y: u64, n: u64 },
}

impl SymbolicElement {
    pub fn family(&self) -> FamilyId {
        match self {
            SymbolicElement::P1(_) => FamilyId::P1,
            SymbolicElement::P2 { .. } => FamilyId::P2,
            SymbolicElement::P3 { .. } => FamilyId::P3,
            SymbolicElement::P4 { .. } => FamilyId::P4,
            SymbolicElement::P5 { .. } => FamilyId::P5,
        }
    }

    /// Window coordinates in the order used by [`WindowSpec`]; `None` for the three special
    /// points of P1, which belong to every P1 window.
    pub fn coords(&self) -> Option<Vec<i64>> {
        let c = |v: u64| v as i64;
        Some(match *self {
            SymbolicElement::P1(P1Point::Pair(n, _)) => vec![c(n)],
            SymbolicElement::P1(_) => return None,
            SymbolicElement::P2 { z, n, .. } => vec![z, c(n)],
            SymbolicElement::P3 { x, y } => vec![c(x), c(y)],
            SymbolicElement::P4 { x, y, z } => vec![c(x), c(y), c(z)],
            SymbolicElement::P5 { x, y, n } => vec![c(x), c(y), c(n)],
        })
    }
}

impl fmt::Display for SymbolicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SymbolicElement::P1(P1Point::Bot) => write!(f, "bot"),
            SymbolicElement::P1(P1Point::Top) => write!(f, "top"),
            SymbolicElement::P1(P1Point::A) => write!(f, "a"),
            SymbolicElement::P1(P1Point::Pair(n, i)) => write!(f, "({n},{i})"),
            SymbolicElement::P2 { z, i, n } => write!(f, "({z},{i},{n})"),
            SymbolicElement::P3 { x, y } => write!(f, "({x},{y})"),
            SymbolicElement::P4 { x, y, z } => write!(f, "({x},{y},{z})"),
            SymbolicElement::P5 { x, y, n } => write!(f, "({x},{y},{n})"),
        }
    }
}

impl Serialize for SymbolicElement {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Inclusive bounds per window coordinate, written `lo..hi` separated by commas.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowSpec {
    pub ranges: Vec<RangeInclusive<i64>>,
}

impl WindowSpec {
    pub fn new(ranges: Vec<RangeInclusive<i64>>) -> Self {
        WindowSpec { ranges }
    }

    /// The box `[0, b]` in every coordinate, with `[-b, b]` for the integer coordinate of P2.
    pub fn cube(family: FamilyId, b: u64) -> Self {
        let b = b as i64;
        let mut ranges = vec![0..=b; family.arity()];
        if family == FamilyId::P2 {
            ranges[0] = -b..=b;
        }
        WindowSpec { ranges }
    }

    pub fn contains(&self, coords: &[i64]) -> bool {
        coords.len() == self.ranges.len() && self.ranges.iter().zip(coords).all(|(r, c)| r.contains(c))
    }

    /// Raises every upper bound by the matching slack entry; missing entries count as zero.
    pub fn extended(&self, slack: &[u64]) -> Self {
        let ranges = self
            .ranges
            .iter()
            .enumerate()
            .map(|(k, r)| *r.start()..=*r.end() + slack.get(k).copied().unwrap_or(0) as i64)
            .collect();
        WindowSpec { ranges }
    }

    pub fn validate(&self, family: FamilyId) -> Result<(), FamilyError> {
        if self.ranges.len() != family.arity() {
            return Err(FamilyError::InvalidSpec(format!(
                "{family} windows take {} coordinate ranges, got {}",
                family.arity(),
                self.ranges.len()
            )));
        }
        for (k, r) in self.ranges.iter().enumerate() {
            if r.is_empty() {
                return Err(FamilyError::InvalidSpec(format!("range {k} is empty")));
            }
            let signed = family == FamilyId::P2 && k == 0;
            if !signed && *r.start() < 0 {
                return Err(FamilyError::InvalidSpec(format!("range {k} must be nonnegative")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for WindowSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, r) in self.ranges.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}..{}", r.start(), r.end())?;
        }
        Ok(())
    }
}

impl FromStr for WindowSpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || FamilyError::InvalidSpec(format!("cannot parse `{s}`; expected e.g. `0..3,-2..2`"));
        let ranges = s
            .split(',')
            .map(|part| {
                let part = part.trim();
                match part.split_once("..") {
                    Some((lo, hi)) => {
                        let lo = lo.trim().parse().map_err(|_| bad())?;
                        let hi = hi.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
                        Ok(lo..=hi)
                    }
                    None => {
                        let v: i64 = part.parse().map_err(|_| bad())?;
                        Ok(v..=v)
                    }
                }
            })
            .collect::<Result<Vec<_>, FamilyError>>()?;
        Ok(WindowSpec { ranges })
    }
}

impl Serialize for WindowSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The named chains and antichains of the examples.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NamedSubsetId {
    C0,
    C1,
    C2,
    /// P2: all `(z, i, n)` with this `n`.
    D(u64),
    /// P3: the column `{(n, y)}`.
    C(u64),
    /// P4: `{(n, y, z)}`.
    E(u64),
    /// P5: the level `{(x, y, n)}`.
    L(u64),
    /// P5: `{(x, y, n) : x + y = s}`.
    K(u64, u64),
}

impl NamedSubsetId {
    pub fn check_family(self, family: FamilyId) -> Result<(), FamilyError> {
        use NamedSubsetId::*;
        let ok = matches!(
            (family, self),
            (FamilyId::P1, C1 | C2)
                | (FamilyId::P2, C0 | C1 | D(_))
                | (FamilyId::P3, C(_))
                | (FamilyId::P4, E(_))
                | (FamilyId::P5, L(_) | K(..))
        );
        if ok {
            Ok(())
        } else {
            Err(FamilyError::UnknownName(format!("{self} in {family}")))
        }
    }

    /// Membership test; the caller is expected to have checked the family.
    pub fn contains(self, e: &SymbolicElement) -> bool {
        use NamedSubsetId as N;
        use SymbolicElement as S;
        match (self, *e) {
            (N::C1, S::P1(p)) => matches!(p, P1Point::Bot | P1Point::Top | P1Point::Pair(_, 0)),
            (N::C2, S::P1(p)) => !matches!(p, P1Point::Pair(_, 0)),
            (N::C0, S::P2 { i, .. }) => i == 0,
            (N::C1, S::P2 { i, .. }) => i == 1,
            (N::D(k), S::P2 { n, .. }) => n == k,
            (N::C(k), S::P3 { x, .. }) => x == k,
            (N::E(k), S::P4 { x, .. }) => x == k,
            (N::L(k), S::P5 { n, .. }) => n == k,
            (N::K(k, s), S::P5 { x, y, n }) => n == k && x + y == s,
            _ => false,
        }
    }
}

impl fmt::Display for NamedSubsetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NamedSubsetId::C0 => write!(f, "C0"),
            NamedSubsetId::C1 => write!(f, "C1"),
            NamedSubsetId::C2 => write!(f, "C2"),
            NamedSubsetId::D(n) => write!(f, "D({n})"),
            NamedSubsetId::C(n) => write!(f, "C({n})"),
            NamedSubsetId::E(n) => write!(f, "E({n})"),
            NamedSubsetId::L(n) => write!(f, "L({n})"),
            NamedSubsetId::K(n, s) => write!(f, "K({n},{s})"),
        }
    }
}

impl FromStr for NamedSubsetId {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let unknown = || FamilyError::UnknownName(s.to_string());
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "C0" => return Ok(NamedSubsetId::C0),
            "C1" => return Ok(NamedSubsetId::C1),
            "C2" => return Ok(NamedSubsetId::C2),
            _ => {}
        }
        let (head, rest) = t.split_once('(').ok_or_else(unknown)?;
        let args: Vec<u64> = rest
            .strip_suffix(')')
            .ok_or_else(unknown)?
            .split(',')
            .map(|a| a.parse().map_err(|_| unknown()))
            .collect::<Result<_, _>>()?;
        match (head, args.as_slice()) {
            ("D", [n]) => Ok(NamedSubsetId::D(*n)),
            ("C", [n]) => Ok(NamedSubsetId::C(*n)),
            ("E", [n]) => Ok(NamedSubsetId::E(*n)),
            ("L", [n]) => Ok(NamedSubsetId::L(*n)),
            ("K", [n, s]) => Ok(NamedSubsetId::K(*n, *s)),
            _ => Err(unknown()),
        }
    }
}

/// Per-family comparison cache, shared by all callers.
pub struct Family {
    id: FamilyId,
    cache: RwLock<HashMap<(SymbolicElement, SymbolicElement), bool>>,
}

impl Family {
    /// The shared instance for `id`.
    pub fn get(id: FamilyId) -> &'static Family {
        static FAMILIES: OnceLock<[Family; 5]> = OnceLock::new();
        let all = FAMILIES.get_or_init(|| {
            FamilyId::ALL.map(|id| Family { id, cache: RwLock::new(HashMap::new()) })
        });
        &all[id.index()]
    }

    pub fn id(&self) -> FamilyId {
        self.id
    }

    pub fn le(&self, p: &SymbolicElement, q: &SymbolicElement) -> Result<bool, FamilyError> {
        for e in [p, q] {
            if e.family() != self.id {
                return Err(FamilyError::FamilyMismatch { expected: self.id, element: e.to_string() });
            }
        }
        // P1 and P5 are closed forms and cheaper than a cache lookup.
        if matches!(self.id, FamilyId::P1 | FamilyId::P5) {
            return Ok(order::le(p, q).expect("same family"));
        }
        let key = (*p, *q);
        if let Some(&hit) = self.cache.read().expect("cache lock").get(&key) {
            return Ok(hit);
        }
        let v = order::le(p, q).expect("same family");
        self.cache.write().expect("cache lock").insert(key, v);
        Ok(v)
    }

    pub fn lt(&self, p: &SymbolicElement, q: &SymbolicElement) -> Result<bool, FamilyError> {
        Ok(p != q && self.le(p, q)?)
    }

    pub fn comparable(&self, p: &SymbolicElement, q: &SymbolicElement) -> Result<bool, FamilyError> {
        Ok(self.le(p, q)? || self.le(q, p)?)
    }
}

/// Decides `p <= q` in `family`.
pub fn elem_le(family: FamilyId, p: &SymbolicElement, q: &SymbolicElement) -> Result<bool, FamilyError> {
    Family::get(family).le(p, q)
}

/// All elements of `family` inside `spec`, in a fixed order.
pub fn enumerate(family: FamilyId, spec: &WindowSpec) -> Result<Vec<SymbolicElement>, FamilyError> {
    spec.validate(family)?;
    let r = |k: usize| {
        let range = &spec.ranges[k];
        *range.start()..=*range.end()
    };
    let u = |v: i64| v as u64;
    let mut out = Vec::new();
    match family {
        FamilyId::P1 => {
            out.push(SymbolicElement::P1(P1Point::Bot));
            for n in r(0) {
                for i in 0..2 {
                    out.push(SymbolicElement::P1(P1Point::Pair(u(n), i)));
                }
            }
            out.push(SymbolicElement::P1(P1Point::A));
            out.push(SymbolicElement::P1(P1Point::Top));
        }
        FamilyId::P2 => {
            for z in r(0) {
                for i in 0..2 {
                    for n in r(1) {
                        out.push(SymbolicElement::P2 { z, i, n: u(n) });
                    }
                }
            }
        }
        FamilyId::P3 => {
            for x in r(0) {
                for y in r(1) {
                    out.push(SymbolicElement::P3 { x: u(x), y: u(y) });
                }
            }
        }
        FamilyId::P4 => {
            for x in r(0) {
                for y in r(1) {
                    for z in r(2) {
                        out.push(SymbolicElement::P4 { x: u(x), y: u(y), z: u(z) });
                    }
                }
            }
        }
        FamilyId::P5 => {
            for n in r(2) {
                for x in r(0) {
                    for y in r(1) {
                        out.push(SymbolicElement::P5 { x: u(x), y: u(y), n: u(n) });
                    }
                }
            }
        }
    }
    Ok(out)
}

/// A finite induced subposet of one of the families, with the map back to symbolic elements.
#[derive(Debug, Clone)]
pub struct Window {
    pub family: FamilyId,
    pub spec: WindowSpec,
    pub elements: Vec<SymbolicElement>,
    pub poset: FinitePoset,
    index: HashMap<SymbolicElement, ElementId>,
}

impl Window {
    pub fn id_of(&self, e: &SymbolicElement) -> Option<ElementId> {
        self.index.get(e).copied()
    }

    pub fn element(&self, id: ElementId) -> SymbolicElement {
        self.elements[id.0]
    }

    pub fn subset_of(&self, elems: impl IntoIterator<Item = SymbolicElement>) -> Subset {
        elems.into_iter().filter_map(|e| self.id_of(&e)).collect()
    }

    pub fn elements_of(&self, s: &Subset) -> Vec<SymbolicElement> {
        s.iter().map(|id| self.element(id)).collect()
    }
}

/// Builds the window; the induced order is checked against the partial-order axioms.
pub fn window(family: FamilyId, spec: &WindowSpec) -> Result<Window, FamilyError> {
    window_of(family, spec.clone(), enumerate(family, spec)?)
}

/// A window on an explicit element list, for regions that are not boxes.
pub fn window_of(
    family: FamilyId,
    spec: WindowSpec,
    elements: Vec<SymbolicElement>,
) -> Result<Window, FamilyError> {
    let fam = Family::get(family);
    for e in &elements {
        if e.family() != family {
            return Err(FamilyError::FamilyMismatch { expected: family, element: e.to_string() });
        }
    }
    let names: Vec<String> = elements.iter().map(ToString::to_string).collect();
    let poset = FinitePoset::from_relation(&names, |i, j| {
        fam.le(&elements[i], &elements[j]).expect("family checked")
    })?;
    let index = elements.iter().enumerate().map(|(i, e)| (*e, ElementId(i))).collect();
    Ok(Window { family, spec, elements, poset, index })
}

/// The named set intersected with the window.
pub fn named_subset(
    family: FamilyId,
    id: NamedSubsetId,
    spec: &WindowSpec,
) -> Result<Vec<SymbolicElement>, FamilyError> {
    id.check_family(family)?;
    Ok(enumerate(family, spec)?.into_iter().filter(|e| id.contains(e)).collect())
}

/// Checks that every element of `lower` inside `bound` lies strictly below some element of
/// `upper` inside `bound` extended by `slack`. Reports the first uncovered element otherwise.
pub fn check_bounded_cofinally_above(
    family: FamilyId,
    upper: NamedSubsetId,
    lower: NamedSubsetId,
    bound: &WindowSpec,
    slack: &[u64],
) -> Result<VerificationReport, FamilyError> {
    let fam = Family::get(family);
    let lows = named_subset(family, lower, bound)?;
    let search = bound.extended(slack);
    let ups = named_subset(family, upper, &search)?;
    let claim = format!("{family}.cofinally_above");
    let base = |r: VerificationReport| {
        r.param("upper", upper.to_string())
            .param("lower", lower.to_string())
            .param("bound", bound.to_string())
            .param("slack", slack.to_vec())
    };
    for y in &lows {
        let mut covered = false;
        for x in &ups {
            if fam.lt(y, x)? {
                covered = true;
                break;
            }
        }
        if !covered {
            return Ok(base(VerificationReport::fail(
                claim,
                json!({ "uncovered": y, "searched_window": search.to_string() }),
            )));
        }
    }
    Ok(base(VerificationReport::bounded(claim, None)).param("checked", lows.len()))
}

/// Both directions of [`check_bounded_cofinally_above`].
pub fn check_bounded_bicomparable(
    family: FamilyId,
    a: NamedSubsetId,
    b: NamedSubsetId,
    bound: &WindowSpec,
    slack: &[u64],
) -> Result<VerificationReport, FamilyError> {
    let ab = check_bounded_cofinally_above(family, a, b, bound, slack)?;
    let ba = check_bounded_cofinally_above(family, b, a, bound, slack)?;
    let claim = format!("{family}.bicomparable");
    let report = match (ab.passed(), ba.passed()) {
        (true, true) => VerificationReport::bounded(claim, None),
        _ => {
            let failing: Vec<_> = [&ab, &ba].into_iter().filter(|r| !r.passed()).collect();
            VerificationReport::fail(
                claim,
                json!(failing
                    .iter()
                    .map(|r| json!({ "params": r.params, "witness": r.witness }))
                    .collect::<Vec<_>>()),
            )
        }
    };
    Ok(report
        .param("a", a.to_string())
        .param("b", b.to_string())
        .param("bound", bound.to_string())
        .param("slack", slack.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn names(v: &[SymbolicElement]) -> Vec<String> {
        v.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn spec_and_name_parsing() {
        let s: WindowSpec = "0..3, -2..2".parse().unwrap();
        assert_eq!(s.ranges, vec![0..=3, -2..=2]);
        assert_eq!(s.to_string(), "0..3,-2..2");
        assert_eq!("0..=4".parse::<WindowSpec>().unwrap().ranges, vec![0..=4]);
        assert!("0..x".parse::<WindowSpec>().is_err());
        assert_eq!("K(0, 4)".parse::<NamedSubsetId>().unwrap(), NamedSubsetId::K(0, 4));
        assert!("Q(1)".parse::<NamedSubsetId>().is_err());
        assert!(WindowSpec::new(vec![-1..=2]).validate(FamilyId::P1).is_err());
        assert!("3..2,0..1".parse::<WindowSpec>().unwrap().validate(FamilyId::P3).is_err());
        assert!(WindowSpec::new(vec![-1..=2, 0..=1]).validate(FamilyId::P2).is_ok());
    }

    #[test]
    fn family_mismatch() {
        let p = SymbolicElement::P3 { x: 0, y: 0 };
        let q = SymbolicElement::P5 { x: 0, y: 0, n: 0 };
        assert!(matches!(elem_le(FamilyId::P3, &p, &q), Err(FamilyError::FamilyMismatch { .. })));
    }

    #[test]
    fn window_sizes() {
        let w = window(FamilyId::P5, &"0..2,0..2,0..1".parse().unwrap()).unwrap();
        assert_eq!(w.poset.len(), 18);
        let w = window(FamilyId::P1, &WindowSpec::cube(FamilyId::P1, 3)).unwrap();
        assert_eq!(w.poset.len(), 11);
    }

    #[test]
    fn named_subset_examples() {
        let k = named_subset(FamilyId::P5, NamedSubsetId::K(0, 4), &"0..10,0..10,0..0".parse().unwrap()).unwrap();
        assert_eq!(names(&k), ["(0,4,0)", "(1,3,0)", "(2,2,0)", "(3,1,0)", "(4,0,0)"]);
        let c2 = named_subset(FamilyId::P1, NamedSubsetId::C2, &WindowSpec::cube(FamilyId::P1, 2)).unwrap();
        let mut got = names(&c2);
        got.sort();
        assert_eq!(got, ["(0,1)", "(1,1)", "(2,1)", "a", "bot", "top"]);
        let d0 = named_subset(FamilyId::P2, NamedSubsetId::D(0), &"-1..1,0..3".parse().unwrap()).unwrap();
        assert_eq!(names(&d0), ["(-1,0,0)", "(-1,1,0)", "(0,0,0)", "(0,1,0)", "(1,0,0)", "(1,1,0)"]);
        assert!(matches!(
            named_subset(FamilyId::P3, NamedSubsetId::E(0), &WindowSpec::cube(FamilyId::P3, 2)),
            Err(FamilyError::UnknownName(_))
        ));
    }

    #[test]
    fn named_chains_and_antichains() {
        let checks: Vec<(FamilyId, NamedSubsetId, bool)> = vec![
            (FamilyId::P1, NamedSubsetId::C1, true),
            (FamilyId::P1, NamedSubsetId::C2, true),
            (FamilyId::P2, NamedSubsetId::C0, true),
            (FamilyId::P2, NamedSubsetId::C1, true),
            (FamilyId::P2, NamedSubsetId::D(2), true),
            (FamilyId::P3, NamedSubsetId::C(1), true),
            (FamilyId::P5, NamedSubsetId::K(1, 5), false),
        ];
        for (f, id, chain) in checks {
            let spec = WindowSpec::cube(f, 5);
            let w = window(f, &spec).unwrap();
            let s = w.subset_of(named_subset(f, id, &spec).unwrap());
            assert!(!s.is_empty());
            if chain {
                assert!(w.poset.is_chain(&s), "{f} {id}");
            } else {
                assert!(w.poset.is_antichain(&s), "{f} {id}");
            }
        }
    }

    #[test]
    fn p4_columns_are_not_chains() {
        // (n,y,z) and (n,y+1,z') with z' < z are incomparable under the generating relations.
        let p = SymbolicElement::P4 { x: 0, y: 0, z: 1 };
        let q = SymbolicElement::P4 { x: 0, y: 1, z: 0 };
        assert!(!elem_le(FamilyId::P4, &p, &q).unwrap() && !elem_le(FamilyId::P4, &q, &p).unwrap());
    }

    #[test]
    fn p5_antichains_meet_at_most_two_levels() {
        let w = window(FamilyId::P5, &"0..2,0..2,0..3".parse().unwrap()).unwrap();
        let level = |id: ElementId| match w.element(id) {
            SymbolicElement::P5 { n, .. } => n,
            _ => unreachable!(),
        };
        for a in w.poset.all().iter() {
            for b in w.poset.all().iter() {
                if level(b) >= level(a) + 2 {
                    assert!(w.poset.lt(b, a));
                }
            }
        }
    }

    #[test]
    fn cofinality_examples() {
        let r = check_bounded_cofinally_above(
            FamilyId::P4,
            NamedSubsetId::E(0),
            NamedSubsetId::E(1),
            &"0..5,0..5,0..5".parse().unwrap(),
            &[0, 3, 3],
        )
        .unwrap();
        assert!(r.passed(), "{r:?}");
        let r = check_bounded_cofinally_above(
            FamilyId::P3,
            NamedSubsetId::C(0),
            NamedSubsetId::C(1),
            &WindowSpec::cube(FamilyId::P3, 6),
            &[3, 3],
        )
        .unwrap();
        assert!(!r.passed());
        assert_eq!(r.witness.as_ref().unwrap()["uncovered"], "(1,0)");
        let r = check_bounded_cofinally_above(
            FamilyId::P3,
            NamedSubsetId::C(2),
            NamedSubsetId::C(2),
            &WindowSpec::cube(FamilyId::P3, 6),
            &[0, 1],
        )
        .unwrap();
        assert!(r.passed());
    }

    #[test]
    fn bicomparability_examples() {
        let r = check_bounded_bicomparable(
            FamilyId::P2,
            NamedSubsetId::C0,
            NamedSubsetId::C1,
            &WindowSpec::cube(FamilyId::P2, 8),
            &[2, 2],
        )
        .unwrap();
        assert!(r.passed(), "{r:?}");
        let r = check_bounded_bicomparable(
            FamilyId::P3,
            NamedSubsetId::C(0),
            NamedSubsetId::C(1),
            &WindowSpec::cube(FamilyId::P3, 6),
            &[2, 2],
        )
        .unwrap();
        assert!(!r.passed());
        // The top element lies in both P1 chains and nothing is strictly above it.
        let r = check_bounded_bicomparable(
            FamilyId::P1,
            NamedSubsetId::C1,
            NamedSubsetId::C2,
            &WindowSpec::cube(FamilyId::P1, 10),
            &[2],
        )
        .unwrap();
        assert!(!r.passed());
    }

    #[test]
    fn window_monotonicity() {
        for f in FamilyId::ALL {
            let big = window(f, &WindowSpec::cube(f, 4)).unwrap();
            let small = window(f, &WindowSpec::cube(f, 2)).unwrap();
            for a in small.poset.all().iter() {
                for b in small.poset.all().iter() {
                    let (ea, eb) = (small.element(a), small.element(b));
                    let (ba, bb) = (big.id_of(&ea).unwrap(), big.id_of(&eb).unwrap());
                    assert_eq!(small.poset.le(a, b), big.poset.le(ba, bb));
                }
            }
        }
    }

    fn arb_element(f: FamilyId, b: u64) -> BoxedStrategy<SymbolicElement> {
        match f {
            FamilyId::P1 => prop_oneof![
                Just(SymbolicElement::P1(P1Point::Bot)),
                Just(SymbolicElement::P1(P1Point::Top)),
                Just(SymbolicElement::P1(P1Point::A)),
                (0..=b, 0u8..2).prop_map(|(n, i)| SymbolicElement::P1(P1Point::Pair(n, i))),
            ]
            .boxed(),
            FamilyId::P2 => (-(b as i64)..=b as i64, 0u8..2, 0..=b)
                .prop_map(|(z, i, n)| SymbolicElement::P2 { z, i, n })
                .boxed(),
            FamilyId::P3 => (0..=b, 0..=b).prop_map(|(x, y)| SymbolicElement::P3 { x, y }).boxed(),
            FamilyId::P4 => (0..=b, 0..=b, 0..=b).prop_map(|(x, y, z)| SymbolicElement::P4 { x, y, z }).boxed(),
            FamilyId::P5 => (0..=b, 0..=b, 0..=b).prop_map(|(x, y, n)| SymbolicElement::P5 { x, y, n }).boxed(),
        }
    }

    proptest! {
        #[test]
        fn order_axioms_on_random_triples(
            (f, a, b, c) in prop::sample::select(FamilyId::ALL.to_vec()).prop_flat_map(|f| {
                (Just(f), arb_element(f, 12), arb_element(f, 12), arb_element(f, 12))
            })
        ) {
            let le = |p, q| elem_le(f, p, q).unwrap();
            prop_assert!(le(&a, &a));
            if le(&a, &b) && le(&b, &a) { prop_assert_eq!(a, b); }
            if le(&a, &b) && le(&b, &c) { prop_assert!(le(&a, &c)); }
        }
    }
}
