//! Chain and antichain partitions, spine certificates, and the greedy constructions.

use serde::{Deserialize, Serialize};
use serde_json::json;
use thiserror::Error;

use crate::poset::{ElementId, FinitePoset, PosetError, Subset};
use crate::report::VerificationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("subset is not a chain")]
    NotAChain,
    #[error("input certificate is invalid: {0}")]
    InvalidCertificate(SpineViolation),
    #[error("threshold too small: no unused eligible antichain for `{element}` ({eligible} eligible, tau {tau})")]
    ThresholdTooSmall { element: String, eligible: usize, tau: usize },
    #[error("no eligible point in chain {chain}")]
    NoEligiblePoint { chain: usize },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

/// A chain together with a partition into antichains that each meet it exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpineCertificate {
    pub chain: Subset,
    pub antichains: Vec<Subset>,
}

/// Name-based JSON form of a [`SpineCertificate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateFile {
    pub chain: Vec<String>,
    pub antichains: Vec<Vec<String>>,
}

impl SpineCertificate {
    pub fn to_file(&self, p: &FinitePoset) -> CertificateFile {
        CertificateFile {
            chain: p.names_of(&self.chain),
            antichains: self.antichains.iter().map(|a| p.names_of(a)).collect(),
        }
    }

    pub fn from_file(p: &FinitePoset, f: &CertificateFile) -> Result<Self, PosetError> {
        Ok(SpineCertificate {
            chain: p.subset_by_names(&f.chain)?,
            antichains: f
                .antichains
                .iter()
                .map(|a| p.subset_by_names(a))
                .collect::<Result<_, _>>()?,
        })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpineViolation {
    #[error("the chain is not a chain")]
    ChainNotAChain,
    #[error("chain element {0} lies outside the covered set")]
    ChainOutsideUniverse(ElementId),
    #[error("antichain {0} is empty")]
    EmptyAntichain(usize),
    #[error("antichain {0} is not an antichain")]
    NotAnAntichain(usize),
    #[error("element {0} lies outside the covered set")]
    OutsideUniverse(ElementId),
    #[error("element {0} appears in two antichains")]
    Overlap(ElementId),
    #[error("element {0} is not covered")]
    Uncovered(ElementId),
    #[error("antichain {index} meets the chain {count} times")]
    IntersectionCount { index: usize, count: usize },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainCover {
    pub parts: Vec<Subset>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AntichainCover {
    pub parts: Vec<Subset>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GapWitness {
    pub removed: Subset,
    pub inserted: Subset,
}

/// Elements sorted by the size of their down-set; a linear extension.
fn linear_extension(p: &FinitePoset, within: &Subset) -> Vec<ElementId> {
    let mut v = within.as_slice().to_vec();
    v.sort_by_key(|&x| (within.iter().filter(|&y| p.le(y, x)).count(), x));
    v
}

/// Length of the longest chain ending at each element (index = element id); 0 outside `within`.
fn heights_below(p: &FinitePoset, within: &Subset) -> Vec<usize> {
    let mut h = vec![0usize; p.len()];
    for x in linear_extension(p, within) {
        h[x.0] = 1 + within.iter().filter(|&y| p.lt(y, x)).map(|y| h[y.0]).max().unwrap_or(0);
    }
    h
}

fn heights_above(p: &FinitePoset, within: &Subset) -> Vec<usize> {
    let mut h = vec![0usize; p.len()];
    for x in linear_extension(p, within).into_iter().rev() {
        h[x.0] = 1 + within.iter().filter(|&y| p.lt(x, y)).map(|y| h[y.0]).max().unwrap_or(0);
    }
    h
}

/// Lexicographically least maximum chain of the subposet on `within`, bottom to top.
fn max_chain_within(p: &FinitePoset, within: &Subset) -> Vec<ElementId> {
    let up = heights_above(p, within);
    let height = within.iter().map(|x| up[x.0]).max().unwrap_or(0);
    let mut chain = Vec::with_capacity(height);
    let mut need = height;
    while need > 0 {
        let next = within
            .iter()
            .find(|&y| up[y.0] == need && chain.last().is_none_or(|&last| p.lt(last, y)))
            .expect("a maximum chain continues at every step");
        chain.push(next);
        need -= 1;
    }
    chain
}

/// Height of `p` and its lexicographically least maximum chain.
pub fn height_and_max_chain(p: &FinitePoset) -> (usize, Subset) {
    let c = max_chain_within(p, &p.all());
    (c.len(), Subset::new(c))
}

/// Partition into antichains by height level; part `i` holds the elements of height `i + 1`.
pub fn mirsky_partition(p: &FinitePoset) -> AntichainCover {
    let h = heights_below(p, &p.all());
    let height = h.iter().copied().max().unwrap_or(0);
    let parts = (1..=height)
        .map(|lvl| p.elements().filter(|x| h[x.0] == lvl).collect())
        .collect();
    AntichainCover { parts }
}

/// Width, a minimum chain cover, and a maximum antichain.
pub fn width_and_dilworth(p: &FinitePoset) -> (usize, ChainCover, Subset) {
    let n = p.len();
    let mut match_left: Vec<Option<usize>> = vec![None; n];
    let mut match_right: Vec<Option<usize>> = vec![None; n];
    fn augment(
        p: &FinitePoset,
        u: usize,
        seen: &mut [bool],
        ml: &mut [Option<usize>],
        mr: &mut [Option<usize>],
    ) -> bool {
        for v in 0..p.len() {
            if !seen[v] && p.lt(ElementId(u), ElementId(v)) {
                seen[v] = true;
                if mr[v].is_none_or(|w| augment(p, w, seen, ml, mr)) {
                    ml[u] = Some(v);
                    mr[v] = Some(u);
                    return true;
                }
            }
        }
        false
    }
    for u in 0..n {
        let mut seen = vec![false; n];
        augment(p, u, &mut seen, &mut match_left, &mut match_right);
    }

    let mut parts: Vec<Subset> = (0..n)
        .filter(|&v| match_right[v].is_none())
        .map(|start| {
            let mut members = vec![ElementId(start)];
            let mut cur = start;
            while let Some(next) = match_left[cur] {
                members.push(ElementId(next));
                cur = next;
            }
            Subset::new(members)
        })
        .collect();
    parts.sort_by_key(|s| s.as_slice().first().copied());

    // König: vertices reachable from free left vertices by alternating paths.
    let mut z_left = vec![false; n];
    let mut z_right = vec![false; n];
    let mut stack: Vec<usize> = (0..n).filter(|&u| match_left[u].is_none()).collect();
    for &u in &stack {
        z_left[u] = true;
    }
    while let Some(u) = stack.pop() {
        for v in 0..n {
            if !z_right[v] && p.lt(ElementId(u), ElementId(v)) && match_left[u] != Some(v) {
                z_right[v] = true;
                if let Some(w) = match_right[v] {
                    if !z_left[w] {
                        z_left[w] = true;
                        stack.push(w);
                    }
                }
            }
        }
    }
    let antichain: Subset = (0..n).filter(|&x| z_left[x] && !z_right[x]).map(ElementId).collect();
    debug_assert_eq!(antichain.len(), parts.len());
    (parts.len(), ChainCover { parts }, antichain)
}

/// Maximum chain plus height levels.
pub fn find_spine(p: &FinitePoset) -> SpineCertificate {
    let (_, chain) = height_and_max_chain(p);
    SpineCertificate { chain, antichains: mirsky_partition(p).parts }
}

/// Checks every certificate invariant with `universe` as the set to be partitioned.
pub fn check_spine_on(
    p: &FinitePoset,
    universe: &Subset,
    cert: &SpineCertificate,
) -> Result<(), SpineViolation> {
    if !p.is_chain(&cert.chain) {
        return Err(SpineViolation::ChainNotAChain);
    }
    if let Some(x) = cert.chain.iter().find(|&x| !universe.contains(x)) {
        return Err(SpineViolation::ChainOutsideUniverse(x));
    }
    let mut owner: Vec<Option<usize>> = vec![None; p.len()];
    for (i, a) in cert.antichains.iter().enumerate() {
        if a.is_empty() {
            return Err(SpineViolation::EmptyAntichain(i));
        }
        if !p.is_antichain(a) {
            return Err(SpineViolation::NotAnAntichain(i));
        }
        for x in a.iter() {
            if !universe.contains(x) {
                return Err(SpineViolation::OutsideUniverse(x));
            }
            if owner[x.0].is_some() {
                return Err(SpineViolation::Overlap(x));
            }
            owner[x.0] = Some(i);
        }
        let count = a.intersection(&cert.chain).len();
        if count != 1 {
            return Err(SpineViolation::IntersectionCount { index: i, count });
        }
    }
    if let Some(x) = universe.iter().find(|x| owner[x.0].is_none()) {
        return Err(SpineViolation::Uncovered(x));
    }
    Ok(())
}

pub fn check_spine(p: &FinitePoset, cert: &SpineCertificate) -> Result<(), SpineViolation> {
    check_spine_on(p, &p.all(), cert)
}

pub fn is_spine(p: &FinitePoset, cert: &SpineCertificate) -> bool {
    check_spine(p, cert).is_ok()
}

/// On a finite poset a chain is strongly maximal exactly when it has maximum size.
pub fn is_strongly_maximal(p: &FinitePoset, c: &Subset) -> Result<bool, PartitionError> {
    if !p.is_chain(c) {
        return Err(PartitionError::NotAChain);
    }
    Ok(c.len() == height_and_max_chain(p).0)
}

/// Finds a contiguous run of `c` that can be swapped for a strictly longer outside chain.
///
/// Runs are tried by increasing length, then by position from the bottom.
pub fn smc_gap_witness(p: &FinitePoset, c: &Subset) -> Result<Option<GapWitness>, PartitionError> {
    if !p.is_chain(c) {
        return Err(PartitionError::NotAChain);
    }
    let sorted = p.sort_chain(c);
    let k = sorted.len();
    for len in 0..=k {
        for start in 0..=(k - len) {
            let lo = start.checked_sub(1).map(|i| sorted[i]);
            let hi = sorted.get(start + len).copied();
            let region: Subset = p
                .elements()
                .filter(|&z| {
                    !c.contains(z)
                        && lo.is_none_or(|l| p.lt(l, z))
                        && hi.is_none_or(|h| p.lt(z, h))
                })
                .collect();
            let d = max_chain_within(p, &region);
            if d.len() > len {
                return Ok(Some(GapWitness {
                    removed: Subset::new(sorted[start..start + len].iter().copied()),
                    inserted: Subset::new(d),
                }));
            }
        }
    }
    Ok(None)
}

/// Largest number of members of `f` incomparable to a single member of `f`.
pub fn thick_degree(p: &FinitePoset, f: &Subset) -> usize {
    f.iter()
        .map(|x| f.iter().filter(|&y| p.incomparable(x, y)).count())
        .max()
        .unwrap_or(0)
}

/// Members `x` of `f` with `x` incomparable to `y` and every member comparable to `y` also comparable to `x`.
pub fn spine_support(p: &FinitePoset, f: &Subset, y: ElementId) -> Subset {
    f.iter()
        .filter(|&x| {
            p.incomparable(x, y)
                && f.iter().all(|z| !p.comparable(z, y) || p.comparable(z, x))
        })
        .collect()
}

/// Checks that every outside element has at least `tau` supporting members of `f`.
pub fn strong_thick_check(p: &FinitePoset, f: &Subset, tau: usize) -> VerificationReport {
    let claim = "strong-thick";
    let mut min_count: Option<usize> = None;
    for y in p.elements().filter(|&y| !f.contains(y)) {
        let count = spine_support(p, f, y).len();
        if count < tau {
            return VerificationReport::fail(
                claim,
                json!({"element": p.name(y), "count": count}),
            )
            .param("tau", tau)
            .param("thick_size", f.len());
        }
        min_count = Some(min_count.map_or(count, |m| m.min(count)));
    }
    VerificationReport::pass(claim, Some(json!({"min_count": min_count})))
        .param("tau", tau)
        .param("thick_size", f.len())
}

/// Extends a spine certificate of the subposet `f` to all of `p`, one outside element per antichain.
///
/// Each outside element needs at least `tau` certificate antichains that meet its support set;
/// `tau >= |P \ F|` guarantees that the greedy pass never runs out.
pub fn extend_spine_partition(
    p: &FinitePoset,
    f: &Subset,
    cert: &SpineCertificate,
    tau: usize,
) -> Result<SpineCertificate, PartitionError> {
    check_spine_on(p, f, cert).map_err(PartitionError::InvalidCertificate)?;
    let outside: Vec<ElementId> = p.elements().filter(|&y| !f.contains(y)).collect();
    let eligible: Vec<Vec<usize>> = outside
        .iter()
        .map(|&y| {
            let support = spine_support(p, f, y);
            cert.antichains
                .iter()
                .enumerate()
                .filter(|(_, a)| a.iter().any(|x| support.contains(x)))
                .map(|(i, _)| i)
                .collect()
        })
        .collect();
    for (&y, e) in outside.iter().zip(&eligible) {
        if e.len() < tau {
            return Err(PartitionError::ThresholdTooSmall {
                element: p.name(y).to_string(),
                eligible: e.len(),
                tau,
            });
        }
    }
    let mut used = vec![false; cert.antichains.len()];
    let mut grown = cert.antichains.clone();
    for (&y, e) in outside.iter().zip(&eligible) {
        let slot = e.iter().copied().find(|&i| !used[i]).ok_or_else(|| {
            PartitionError::ThresholdTooSmall {
                element: p.name(y).to_string(),
                eligible: e.len(),
                tau,
            }
        })?;
        used[slot] = true;
        grown[slot] = grown[slot].union(&Subset::new([y]));
    }
    Ok(SpineCertificate { chain: cert.chain.clone(), antichains: grown })
}

/// Picks one point per chain so that the picks are pairwise incomparable.
///
/// Each later pick is the least element of the longest final segment of its chain that is
/// incomparable to every earlier pick.
pub fn greedy_antichain_from_chains(
    p: &FinitePoset,
    chains: &[Subset],
) -> Result<Vec<ElementId>, PartitionError> {
    let mut picks: Vec<ElementId> = Vec::with_capacity(chains.len());
    for (i, c) in chains.iter().enumerate() {
        if !p.is_chain(c) {
            return Err(PartitionError::NotAChain);
        }
        let sorted = p.sort_chain(c);
        let tail_len = sorted
            .iter()
            .rev()
            .take_while(|&&x| picks.iter().all(|&a| p.incomparable(a, x)))
            .count();
        if tail_len == 0 {
            return Err(PartitionError::NoEligiblePoint { chain: i });
        }
        picks.push(sorted[sorted.len() - tail_len]);
    }
    debug_assert!(p.is_antichain(&Subset::new(picks.iter().copied())));
    Ok(picks)
}
