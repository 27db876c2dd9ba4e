//! Registry of finite checks for statements made about the example families.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::json;

use super::{
    enumerate, named_subset, window, window_of, Family, FamilyError, FamilyId, NamedSubsetId, P1Point,
    SymbolicElement, WindowSpec,
};
use crate::partition::{check_spine, width_and_dilworth, SpineCertificate};
use crate::poset::Subset;
use crate::report::VerificationReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Claim {
    /// P1: pairs `{(n,0),(n,1)}` plus singletons partition the window, each meeting `C2` once.
    P1SpinePartition { n: u64 },
    /// P1: the `m + 1` points `(k,1)`, `k <= m`, find only `m` hosts in `C1`.
    P1Pigeonhole { m: u64 },
    /// P2: `{C0, C1}` and `{D(n)}` each partition the window.
    P2Partitions { b: u64 },
    /// P2: every `(z-1,0,n)` lies below some `(z,0,n')` of the window.
    P2ShiftReduction { b: u64 },
    /// P3: the widest antichain of row `y` has `min(y + 1, B + 1)` elements.
    P3RowBound { y: u64, b: u64 },
    /// P3: many points of `C(n)` are incomparable to many points of `C(m)`.
    P3AtomicAntichain { n: u64, m: u64, b: u64 },
    /// P4: no point of the `E(n)` window lies above the whole `E(m)` window.
    P4NoDomination { n: u64, m: u64, b: u64 },
}

impl Claim {
    pub const NAMES: [&'static str; 7] = [
        "P1.spine_partition",
        "P1.pigeonhole",
        "P2.partitions",
        "P2.shift_reduction",
        "P3.row_bound",
        "P3.atomic_antichain",
        "P4.no_domination",
    ];

    /// Looks up `id` (with or without the family prefix) and reads its parameters.
    pub fn parse(family: FamilyId, id: &str, params: &BTreeMap<String, u64>) -> Result<Claim, FamilyError> {
        let short = match id.split_once('.') {
            Some((prefix, rest)) => {
                if prefix.parse::<FamilyId>()? != family {
                    return Err(FamilyError::UnknownClaim(format!("{id} for {family}")));
                }
                rest
            }
            None => id,
        };
        let get = |k: &str| params.get(k).copied().ok_or_else(|| FamilyError::MissingParam(k.to_string()));
        Ok(match (family, short) {
            (FamilyId::P1, "spine_partition") => Claim::P1SpinePartition { n: get("N")? },
            (FamilyId::P1, "pigeonhole") => Claim::P1Pigeonhole { m: get("m")? },
            (FamilyId::P2, "partitions") => Claim::P2Partitions { b: get("B")? },
            (FamilyId::P2, "shift_reduction") => Claim::P2ShiftReduction { b: get("B")? },
            (FamilyId::P3, "row_bound") => Claim::P3RowBound { y: get("y")?, b: get("B")? },
            (FamilyId::P3, "atomic_antichain") => {
                Claim::P3AtomicAntichain { n: get("n")?, m: get("m")?, b: get("B")? }
            }
            (FamilyId::P4, "no_domination") => Claim::P4NoDomination { n: get("n")?, m: get("m")?, b: get("B")? },
            _ => return Err(FamilyError::UnknownClaim(format!("{id} for {family}"))),
        })
    }

    pub fn family(&self) -> FamilyId {
        match self {
            Claim::P1SpinePartition { .. } | Claim::P1Pigeonhole { .. } => FamilyId::P1,
            Claim::P2Partitions { .. } | Claim::P2ShiftReduction { .. } => FamilyId::P2,
            Claim::P3RowBound { .. } | Claim::P3AtomicAntichain { .. } => FamilyId::P3,
            Claim::P4NoDomination { .. } => FamilyId::P4,
        }
    }

    fn params(&self) -> Vec<(&'static str, u64)> {
        match *self {
            Claim::P1SpinePartition { n } => vec![("N", n)],
            Claim::P1Pigeonhole { m } => vec![("m", m)],
            Claim::P2Partitions { b } | Claim::P2ShiftReduction { b } => vec![("B", b)],
            Claim::P3RowBound { y, b } => vec![("y", y), ("B", b)],
            Claim::P3AtomicAntichain { n, m, b } | Claim::P4NoDomination { n, m, b } => {
                vec![("n", n), ("m", m), ("B", b)]
            }
        }
    }
}

impl fmt::Display for Claim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Claim::P1SpinePartition { .. } => Claim::NAMES[0],
            Claim::P1Pigeonhole { .. } => Claim::NAMES[1],
            Claim::P2Partitions { .. } => Claim::NAMES[2],
            Claim::P2ShiftReduction { .. } => Claim::NAMES[3],
            Claim::P3RowBound { .. } => Claim::NAMES[4],
            Claim::P3AtomicAntichain { .. } => Claim::NAMES[5],
            Claim::P4NoDomination { .. } => Claim::NAMES[6],
        };
        f.write_str(name)
    }
}

/// Runs the finite check registered for `claim`.
pub fn verify_claim(family: FamilyId, claim: &Claim) -> Result<VerificationReport, FamilyError> {
    if claim.family() != family {
        return Err(FamilyError::UnknownClaim(format!("{claim} for {family}")));
    }
    let report = match *claim {
        Claim::P1SpinePartition { n } => p1_spine_partition(n)?,
        Claim::P1Pigeonhole { m } => p1_pigeonhole(m)?,
        Claim::P2Partitions { b } => p2_partitions(b)?,
        Claim::P2ShiftReduction { b } => p2_shift_reduction(b)?,
        Claim::P3RowBound { y, b } => p3_row_bound(y, b)?,
        Claim::P3AtomicAntichain { n, m, b } => p3_atomic_antichain(n, m, b)?,
        Claim::P4NoDomination { n, m, b } => p4_no_domination(n, m, b)?,
    };
    Ok(claim.params().into_iter().fold(report, |r, (k, v)| r.param(k, v)))
}

fn names(v: &[SymbolicElement]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn p1_spine_partition(n: u64) -> Result<VerificationReport, FamilyError> {
    let claim = "P1.spine_partition";
    let w = window(FamilyId::P1, &WindowSpec::cube(FamilyId::P1, n))?;
    let chain = w.subset_of(named_subset(FamilyId::P1, NamedSubsetId::C2, &w.spec)?);
    let mut antichains = vec![w.subset_of([SymbolicElement::P1(P1Point::Bot)])];
    for k in 0..=n {
        antichains.push(w.subset_of((0..2).map(|i| SymbolicElement::P1(P1Point::Pair(k, i)))));
    }
    antichains.push(w.subset_of([SymbolicElement::P1(P1Point::A)]));
    antichains.push(w.subset_of([SymbolicElement::P1(P1Point::Top)]));
    let cert = SpineCertificate { chain, antichains };
    Ok(match check_spine(&w.poset, &cert) {
        Ok(()) => VerificationReport::bounded(claim, Some(json!(cert.to_file(&w.poset)))),
        Err(v) => VerificationReport::fail(claim, json!({ "violation": v.to_string() })),
    })
}

fn p1_pigeonhole(m: u64) -> Result<VerificationReport, FamilyError> {
    let claim = "P1.pigeonhole";
    let fam = Family::get(FamilyId::P1);
    let spec = WindowSpec::cube(FamilyId::P1, m + 1);
    let c1 = named_subset(FamilyId::P1, NamedSubsetId::C1, &spec)?;
    let a = SymbolicElement::P1(P1Point::A);
    // The block holding `a` meets C1 in a point incomparable to `a`; take it to be (m,0).
    let host_of_a = SymbolicElement::P1(P1Point::Pair(m, 0));
    debug_assert!(!fam.comparable(&a, &host_of_a)?);
    let demanders: Vec<SymbolicElement> = (0..=m).map(|k| SymbolicElement::P1(P1Point::Pair(k, 1))).collect();
    let mut hosts: Vec<SymbolicElement> = Vec::new();
    let mut demanders_ok = true;
    for d in &demanders {
        demanders_ok &= fam.comparable(d, &a)?;
        for c in &c1 {
            if *c != host_of_a && !fam.comparable(d, c)? && !hosts.contains(c) {
                hosts.push(*c);
            }
        }
    }
    for (i, d) in demanders.iter().enumerate() {
        for e in &demanders[i + 1..] {
            demanders_ok &= fam.comparable(d, e)?;
        }
    }
    hosts.sort();
    let witness = json!({
        "demanders": names(&demanders),
        "hosts": names(&hosts),
        "host_of_a": host_of_a.to_string(),
    });
    Ok(if demanders_ok && hosts.len() < demanders.len() {
        VerificationReport::pass(claim, Some(witness))
    } else {
        VerificationReport::fail(claim, witness)
    })
}

fn p2_partitions(b: u64) -> Result<VerificationReport, FamilyError> {
    let claim = "P2.partitions";
    let spec = WindowSpec::cube(FamilyId::P2, b);
    let w = window(FamilyId::P2, &spec)?;
    let families: [(&str, Vec<NamedSubsetId>); 2] = [
        ("C", vec![NamedSubsetId::C0, NamedSubsetId::C1]),
        ("D", (0..=b).map(NamedSubsetId::D).collect()),
    ];
    for (label, parts) in families {
        let mut seen = vec![0usize; w.poset.len()];
        for id in &parts {
            let s: Subset = w.subset_of(named_subset(FamilyId::P2, *id, &spec)?);
            if !w.poset.is_chain(&s) {
                return Ok(VerificationReport::fail(claim, json!({ "not_a_chain": id.to_string() })));
            }
            for x in s.iter() {
                seen[x.0] += 1;
            }
        }
        if let Some(i) = seen.iter().position(|&c| c != 1) {
            return Ok(VerificationReport::fail(
                claim,
                json!({ "family": label, "element": w.elements[i], "times_covered": seen[i] }),
            ));
        }
    }
    Ok(VerificationReport::bounded(claim, None).param("window_size", w.poset.len()))
}

fn p2_shift_reduction(b: u64) -> Result<VerificationReport, FamilyError> {
    let claim = "P2.shift_reduction";
    let fam = Family::get(FamilyId::P2);
    let bi = b as i64;
    for z in (-bi + 1)..=bi {
        for n in 0..=b {
            let p = SymbolicElement::P2 { z: z - 1, i: 0, n };
            let mut found = false;
            for n2 in 0..=b {
                if fam.le(&p, &SymbolicElement::P2 { z, i: 0, n: n2 })? {
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(VerificationReport::fail(claim, json!({ "unmatched": p, "z": z })));
            }
        }
    }
    Ok(VerificationReport::bounded(claim, None))
}

fn p3_row_bound(y: u64, b: u64) -> Result<VerificationReport, FamilyError> {
    let claim = "P3.row_bound";
    let spec = WindowSpec::new(vec![0..=b as i64, y as i64..=y as i64]);
    let w = window_of(FamilyId::P3, spec.clone(), enumerate(FamilyId::P3, &spec)?)?;
    let (width, _, antichain) = width_and_dilworth(&w.poset);
    let expected = (y + 1).min(b + 1) as usize;
    let witness = json!({ "width": width, "expected": expected, "antichain": w.poset.names_of(&antichain) });
    Ok(if width == expected {
        VerificationReport::bounded(claim, Some(witness))
    } else {
        VerificationReport::fail(claim, witness)
    })
}

fn p3_atomic_antichain(n: u64, m: u64, b: u64) -> Result<VerificationReport, FamilyError> {
    let claim = "P3.atomic_antichain";
    let fam = Family::get(FamilyId::P3);
    let mut good = Vec::new();
    for y in 0..=2 * b {
        let p = SymbolicElement::P3 { x: n, y };
        let mut count = 0;
        for y2 in 0..=2 * b {
            if !fam.comparable(&p, &SymbolicElement::P3 { x: m, y: y2 })? {
                count += 1;
            }
        }
        if count >= b {
            good.push(p);
        }
    }
    let witness = json!({ "points": names(&good), "count": good.len(), "needed": b });
    Ok(if good.len() as u64 >= b {
        VerificationReport::bounded(claim, Some(witness))
    } else {
        VerificationReport::fail(claim, witness)
    })
}

fn p4_no_domination(n: u64, m: u64, b: u64) -> Result<VerificationReport, FamilyError> {
    let claim = "P4.no_domination";
    let fam = Family::get(FamilyId::P4);
    let upper = named_subset(FamilyId::P4, NamedSubsetId::E(n), &WindowSpec::cube(FamilyId::P4, b.max(n)))?;
    // The lower window reaches two rows further, past anything the upper window can dominate.
    let lower_spec = WindowSpec::cube(FamilyId::P4, b.max(m)).extended(&[0, 2, 0]);
    let lower = named_subset(FamilyId::P4, NamedSubsetId::E(m), &lower_spec)?;
    let mut refutations = Vec::with_capacity(upper.len());
    for u in &upper {
        let mut refuter = None;
        for l in &lower {
            if !fam.lt(l, u)? {
                refuter = Some(*l);
                break;
            }
        }
        match refuter {
            Some(l) => refutations.push(json!([u, l])),
            None => return Ok(VerificationReport::fail(claim, json!({ "dominating": u }))),
        }
    }
    Ok(VerificationReport::bounded(claim, Some(json!({ "refutations": refutations }))))
}
