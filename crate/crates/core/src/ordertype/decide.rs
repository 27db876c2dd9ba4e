//! Structural decision procedures.
//!
//! Every rule below is a recursion over the term. The rules for sums look at each part and at
//! pairs of parts in order; the rules for `w[b]` and `w*[b]` look at one copy of `b` plus the
//! sequence running through the copies, which is cofinal for `w[b]` and coinitial for `w*[b]`.

use serde::{Serialize, Serializer};

use super::{CountOrOmega, OrderTerm};

/// No infinite decreasing sequence.
pub fn is_wellfounded(t: &OrderTerm) -> bool {
    match t {
        OrderTerm::Fin(_) | OrderTerm::Omega => true,
        OrderTerm::OmegaStar => false,
        OrderTerm::Sum(parts) => parts.iter().all(is_wellfounded),
        OrderTerm::OmegaRep(b) => is_wellfounded(b),
        // The copies themselves descend forever unless there are none.
        OrderTerm::OmegaStarRep(b) => b.is_empty(),
    }
}

/// No infinite increasing sequence.
pub fn is_cowellfounded(t: &OrderTerm) -> bool {
    is_wellfounded(&t.reverse())
}

/// Some increasing sequence has an upper bound in the order.
///
/// In `a + b` an unbounded increasing sequence of `a` is bounded by any point of `b`. In either
/// repetition, an increasing sequence inside one copy is bounded by a neighbouring copy, while
/// the sequence through the copies of `w[b]` is cofinal.
pub fn embeds_omega_plus_one(t: &OrderTerm) -> bool {
    match t {
        OrderTerm::Fin(_) | OrderTerm::Omega | OrderTerm::OmegaStar => false,
        OrderTerm::Sum(parts) => {
            parts.iter().any(embeds_omega_plus_one)
                || parts.iter().enumerate().any(|(i, a)| {
                    !is_cowellfounded(a) && parts[i + 1..].iter().any(|b| !b.is_empty())
                })
        }
        OrderTerm::OmegaRep(b) | OrderTerm::OmegaStarRep(b) => {
            embeds_omega_plus_one(b) || !is_cowellfounded(b)
        }
    }
}

/// Contains a decreasing sequence with an increasing sequence above it.
///
/// For `w[b]`, a decreasing sequence in copy 0 sits below the sequence through the copies; for
/// `w*[b]`, the descending run through the copies sits below an increasing sequence in copy 0.
pub fn embeds_zeta(t: &OrderTerm) -> bool {
    match t {
        OrderTerm::Fin(_) | OrderTerm::Omega | OrderTerm::OmegaStar => false,
        OrderTerm::Sum(parts) => {
            parts.iter().any(embeds_zeta)
                || parts.iter().enumerate().any(|(i, a)| {
                    !is_wellfounded(a) && parts[i + 1..].iter().any(|b| !is_cowellfounded(b))
                })
        }
        OrderTerm::OmegaRep(b) => embeds_zeta(b) || !is_wellfounded(b),
        OrderTerm::OmegaStarRep(b) => embeds_zeta(b) || !is_cowellfounded(b),
    }
}

/// Contains an increasing sequence with a decreasing sequence above it.
///
/// The run through the copies is at the wrong end in both repetitions, so only two copies matter.
pub fn embeds_omega_plus_omegastar(t: &OrderTerm) -> bool {
    match t {
        OrderTerm::Fin(_) | OrderTerm::Omega | OrderTerm::OmegaStar => false,
        OrderTerm::Sum(parts) => {
            parts.iter().any(embeds_omega_plus_omegastar)
                || parts.iter().enumerate().any(|(i, a)| {
                    !is_cowellfounded(a) && parts[i + 1..].iter().any(|b| !is_wellfounded(b))
                })
        }
        OrderTerm::OmegaRep(b) | OrderTerm::OmegaStarRep(b) => {
            embeds_omega_plus_omegastar(b) || (!is_cowellfounded(b) && !is_wellfounded(b))
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Predicates {
    pub wellfounded: bool,
    pub cowellfounded: bool,
    pub embeds_omega_plus_one: bool,
    pub embeds_zeta: bool,
    pub embeds_omega_plus_omegastar: bool,
}

pub fn predicates(t: &OrderTerm) -> Predicates {
    Predicates {
        wellfounded: is_wellfounded(t),
        cowellfounded: is_cowellfounded(t),
        embeds_omega_plus_one: embeds_omega_plus_one(t),
        embeds_zeta: embeds_zeta(t),
        embeds_omega_plus_omegastar: embeds_omega_plus_omegastar(t),
    }
}

/// Number of cuts whose lower side is nonempty without a maximum.
fn plus_limits(t: &OrderTerm) -> CountOrOmega {
    match t {
        OrderTerm::Fin(_) | OrderTerm::OmegaStar => CountOrOmega::Finite(0),
        OrderTerm::Omega => CountOrOmega::Finite(1),
        OrderTerm::Sum(parts) => parts.iter().map(plus_limits).fold(CountOrOmega::Finite(0), CountOrOmega::add),
        _ if t.is_empty() => CountOrOmega::Finite(0),
        // Each copy repeats its own limits; `w[b]` adds the top of the run through the copies.
        OrderTerm::OmegaRep(b) => {
            if plus_limits(b).is_zero() { CountOrOmega::Finite(1) } else { CountOrOmega::Omega }
        }
        OrderTerm::OmegaStarRep(b) => {
            if plus_limits(b).is_zero() { CountOrOmega::Finite(0) } else { CountOrOmega::Omega }
        }
    }
}

/// `(plus, minus)` limit-point counts.
pub fn limit_point_counts(t: &OrderTerm) -> (CountOrOmega, CountOrOmega) {
    (plus_limits(t), plus_limits(&t.reverse()))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum MaxPlus {
    NegInf,
    Fin(u64),
    Inf,
}

impl MaxPlus {
    fn add(self, o: MaxPlus) -> MaxPlus {
        match (self, o) {
            (MaxPlus::NegInf, _) | (_, MaxPlus::NegInf) => MaxPlus::NegInf,
            (MaxPlus::Inf, _) | (_, MaxPlus::Inf) => MaxPlus::Inf,
            (MaxPlus::Fin(a), MaxPlus::Fin(b)) => MaxPlus::Fin(a + b),
        }
    }
}

/// Transfer matrix over the pattern `w* w w* w ...` of alternating limits.
///
/// State 0 expects a decreasing run next, state 1 an increasing one. Entry `[s][s']` is the
/// largest number of completed pairs while reading the order from state `s` to state `s'`;
/// a pair completes when its increasing run is read.
type Transfer = [[MaxPlus; 2]; 2];

const IDENTITY: Transfer = [[MaxPlus::Fin(0), MaxPlus::NegInf], [MaxPlus::NegInf, MaxPlus::Fin(0)]];
const UP: Transfer = [[MaxPlus::Fin(0), MaxPlus::NegInf], [MaxPlus::Fin(1), MaxPlus::Fin(0)]];
const DOWN: Transfer = [[MaxPlus::Fin(0), MaxPlus::Fin(0)], [MaxPlus::NegInf, MaxPlus::Fin(0)]];

fn mul(a: &Transfer, b: &Transfer) -> Transfer {
    let mut out = [[MaxPlus::NegInf; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = (0..2).map(|k| a[i][k].add(b[k][j])).max().expect("two terms");
        }
    }
    out
}

fn join(a: &Transfer, b: &Transfer) -> Transfer {
    let mut out = *a;
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = a[i][j].max(b[i][j]);
        }
    }
    out
}

/// Supremum of `m^k` over `k >= 1`.
///
/// With two states every cycle has length at most two, so entries still growing between
/// four and six steps sit on a positive cycle and are unbounded.
fn plus_closure(m: &Transfer) -> Transfer {
    let mut power = *m;
    let mut acc = *m;
    let mut snapshot = acc;
    for k in 2..=6 {
        power = mul(&power, m);
        acc = join(&acc, &power);
        if k == 4 {
            snapshot = acc;
        }
    }
    for i in 0..2 {
        for j in 0..2 {
            if acc[i][j] != snapshot[i][j] {
                acc[i][j] = MaxPlus::Inf;
            }
        }
    }
    acc
}

fn transfer(t: &OrderTerm) -> Transfer {
    match t {
        OrderTerm::Fin(_) => IDENTITY,
        OrderTerm::Omega => UP,
        OrderTerm::OmegaStar => DOWN,
        OrderTerm::Sum(parts) => parts.iter().fold(IDENTITY, |acc, p| mul(&acc, &transfer(p))),
        _ if t.is_empty() => IDENTITY,
        OrderTerm::OmegaRep(b) => mul(&plus_closure(&transfer(b)), &UP),
        OrderTerm::OmegaStarRep(b) => mul(&DOWN, &plus_closure(&transfer(b))),
    }
}

/// A count that may be unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Alternation {
    Finite(u64),
    Infinite,
}

impl Serialize for Alternation {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Alternation::Finite(k) => s.serialize_u64(*k),
            Alternation::Infinite => s.serialize_str("inf"),
        }
    }
}

impl std::fmt::Display for Alternation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Alternation::Finite(k) => write!(f, "{k}"),
            Alternation::Infinite => write!(f, "inf"),
        }
    }
}

/// Largest number of disjoint consecutive intervals each holding a decreasing run below an
/// increasing run.
pub fn alternation_number(t: &OrderTerm) -> Alternation {
    match transfer(t)[0][0] {
        MaxPlus::Fin(k) => Alternation::Finite(k),
        MaxPlus::Inf => Alternation::Infinite,
        MaxPlus::NegInf => unreachable!("reading nothing is always possible"),
    }
}

pub fn hausdorff_rank(t: &OrderTerm) -> u32 {
    match t {
        OrderTerm::Fin(_) => 0,
        OrderTerm::Omega | OrderTerm::OmegaStar => 1,
        OrderTerm::Sum(parts) => parts.iter().map(hausdorff_rank).max().unwrap_or(0),
        OrderTerm::OmegaRep(b) | OrderTerm::OmegaStarRep(b) => {
            if b.is_empty() {
                0
            } else if b.is_finite() {
                1
            } else {
                hausdorff_rank(b) + 1
            }
        }
    }
}

fn has_max(t: &OrderTerm) -> bool {
    match t {
        OrderTerm::Fin(k) => *k > 0,
        OrderTerm::Omega => false,
        OrderTerm::OmegaStar => true,
        OrderTerm::Sum(parts) => parts.iter().rev().find(|p| !p.is_empty()).is_some_and(has_max),
        OrderTerm::OmegaRep(_) => false,
        OrderTerm::OmegaStarRep(b) => has_max(b),
    }
}

/// Some final segment has order type `w`.
fn has_final_omega(t: &OrderTerm) -> bool {
    match t {
        OrderTerm::Fin(_) | OrderTerm::OmegaStar => false,
        OrderTerm::Omega => true,
        OrderTerm::Sum(parts) => parts.iter().rev().find(|p| !p.is_empty()).is_some_and(has_final_omega),
        OrderTerm::OmegaRep(b) => !b.is_empty() && b.is_finite(),
        OrderTerm::OmegaStarRep(b) => has_final_omega(b),
    }
}

/// The whole order is a `w`-indexed sum of infinite co-wellfounded blocks.
///
/// Equivalently it is nonempty, has no maximum, bounds none of its increasing sequences, and
/// has no final segment of type `w`: cutting along a cofinal sequence then gives bounded, hence
/// co-wellfounded, blocks which can be merged until each is infinite.
pub fn is_decomposable(t: &OrderTerm) -> bool {
    !t.is_empty() && !has_max(t) && !embeds_omega_plus_one(t) && !has_final_omega(t)
}

/// Some interval (convex subset) of the order is decomposable.
///
/// A nonempty final segment of a decomposable interval is again decomposable, so an interval
/// meeting several parts of a sum can be cut down to the last part it meets. In `w[b]` an
/// interval meeting infinitely many copies is a final segment, which is decomposable exactly
/// when `b` is infinite and co-wellfounded; in `w*[b]` every such interval has a decomposable
/// final segment inside its topmost copy.
pub fn has_decomposable_interval(t: &OrderTerm) -> bool {
    match t {
        OrderTerm::Fin(_) | OrderTerm::Omega | OrderTerm::OmegaStar => false,
        OrderTerm::Sum(parts) => parts.iter().any(has_decomposable_interval),
        OrderTerm::OmegaRep(b) => {
            has_decomposable_interval(b) || (!b.is_finite() && is_cowellfounded(b))
        }
        OrderTerm::OmegaStarRep(b) => has_decomposable_interval(b),
    }
}

/// No interval of the order or of its reverse is decomposable.
pub fn is_vacillating_chain(t: &OrderTerm) -> bool {
    !has_decomposable_interval(t) && !has_decomposable_interval(&t.reverse())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Limits {
    pub plus: CountOrOmega,
    pub minus: CountOrOmega,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderTypeReport {
    pub term: String,
    pub predicates: Predicates,
    pub alt: Alternation,
    pub rank: u32,
    pub limits: Limits,
    pub vacillating: bool,
}

impl OrderTypeReport {
    pub fn new(t: &OrderTerm) -> Self {
        let t = t.normalize();
        let (plus, minus) = limit_point_counts(&t);
        OrderTypeReport {
            term: t.render(),
            predicates: predicates(&t),
            alt: alternation_number(&t),
            rank: hausdorff_rank(&t),
            limits: Limits { plus, minus },
            vacillating: is_vacillating_chain(&t),
        }
    }
}
