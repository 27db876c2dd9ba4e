//! Exhaustive checks of the finite lemmas behind the spineless counterexample `P5`.

use serde_json::json;
use thiserror::Error;

use crate::families::{elem_le, enumerate, window, window_of, FamilyError, FamilyId, NamedSubsetId, SymbolicElement, WindowSpec};
use crate::partition::{height_and_max_chain, width_and_dilworth};
use crate::poset::{IntervalQuery, Subset};
use crate::report::VerificationReport;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifierError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

fn p5(x: u64, y: u64, n: u64) -> SymbolicElement {
    SymbolicElement::P5 { x, y, n }
}

fn le(p: &SymbolicElement, q: &SymbolicElement) -> bool {
    elem_le(FamilyId::P5, p, q).expect("P5 elements")
}

fn names(v: &[SymbolicElement]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Level `n` as an interval, the `x + y = s` antichain, and the rows and columns of the level
/// as contiguous chains, all inside the window with coordinates at most `b` and levels
/// `n - 1 ..= n + 1`.
pub fn verify_level_structure(n: u64, s: u64, b: u64) -> Result<VerificationReport, VerifierError> {
    if s > 2 * b {
        return Err(VerifierError::PreconditionViolated(format!("s = {s} exceeds 2B = {}", 2 * b)));
    }
    let claim = "level_structure";
    let bi = b as i64;
    let spec = WindowSpec::new(vec![0..=bi, 0..=bi, n.saturating_sub(1) as i64..=(n + 1) as i64]);
    let w = window(FamilyId::P5, &spec)?;
    let level = w.subset_of(w.elements.iter().copied().filter(|e| NamedSubsetId::L(n).contains(e)));
    let base = |r: VerificationReport| r.param("n", n).param("s", s).param("B", b);

    let hull = w.poset.interval(&IntervalQuery::Convex(level.clone()));
    if hull != level {
        let extra = w.elements_of(&hull.difference(&level));
        return Ok(base(VerificationReport::fail(claim, json!({ "level_not_an_interval": names(&extra) }))));
    }
    let k = w.subset_of(w.elements.iter().copied().filter(|e| NamedSubsetId::K(n, s).contains(e)));
    if !w.poset.is_antichain(&k) {
        return Ok(base(VerificationReport::fail(claim, json!({ "not_an_antichain": format!("K({n},{s})") }))));
    }
    let inner = window_of(FamilyId::P5, spec.clone(), w.elements_of(&level))?;
    let mut lines = 0;
    for z in 0..=b {
        for (label, pick) in [("row", 1usize), ("column", 0usize)] {
            let line: Subset = inner.subset_of(inner.elements.iter().copied().filter(|e| match *e {
                SymbolicElement::P5 { x, y, .. } => [x, y][pick] == z,
                _ => false,
            }));
            let ok = inner.poset.is_chain(&line) && inner.poset.is_contiguous_chain(&line).unwrap_or(false);
            if !ok {
                return Ok(base(VerificationReport::fail(claim, json!({ "line": label, "fixed": z }))));
            }
            lines += 1;
        }
    }
    Ok(base(VerificationReport::bounded(
        claim,
        Some(json!({ "level_size": level.len(), "antichain_size": k.len(), "lines_checked": lines })),
    )))
}

/// A chain of level `n` from `p` through `q` to `r` that moves one coordinate step at a time,
/// so it has exactly `w + z + 1 - x - y` points.
pub fn interpolate_chain(
    n: u64,
    p: (u64, u64),
    q: (u64, u64),
    r: (u64, u64),
) -> Result<Vec<SymbolicElement>, VerifierError> {
    let below = |a: (u64, u64), b: (u64, u64)| a.0 <= b.0 && a.1 <= b.1;
    if !below(p, q) || !below(q, r) {
        return Err(VerifierError::PreconditionViolated(format!(
            "{p:?} <= {q:?} <= {r:?} must hold coordinatewise"
        )));
    }
    let mut out = vec![p5(p.0, p.1, n)];
    let mut cur = p;
    for target in [q, r] {
        while cur.0 < target.0 {
            cur.0 += 1;
            out.push(p5(cur.0, cur.1, n));
        }
        while cur.1 < target.1 {
            cur.1 += 1;
            out.push(p5(cur.0, cur.1, n));
        }
    }
    Ok(out)
}

/// For every `(x, y)` with `x + y > 2(u + v)` and coordinates at most `b`, a relation
/// `(x, y, n + 1) <= (u, v, n)` forces `min(x, y) + 1 <= min(u, v)`.
pub fn verify_min_drop(u: u64, v: u64, b: u64) -> Result<VerificationReport, VerifierError> {
    if u > b || v > b {
        return Err(VerifierError::PreconditionViolated(format!("({u},{v}) exceeds the bound {b}")));
    }
    let claim = "min_drop";
    let top = p5(u, v, 0);
    let mut qualifying = 0u64;
    let mut below = 0u64;
    for x in 0..=b {
        for y in 0..=b {
            if x + y <= 2 * (u + v) {
                continue;
            }
            qualifying += 1;
            if le(&p5(x, y, 1), &top) {
                below += 1;
                if x.min(y) + 1 > u.min(v) {
                    return Ok(VerificationReport::fail(claim, json!({ "point": [x, y] }))
                        .param("u", u)
                        .param("v", v)
                        .param("B", b));
                }
            }
        }
    }
    Ok(VerificationReport::pass(claim, Some(json!({ "qualifying": qualifying, "below": below })))
        .param("u", u)
        .param("v", v)
        .param("B", b))
}

/// All monotone lattice paths from `(0, 0)` to `(u, v)`, as point lists.
fn lattice_paths(u: usize, v: usize) -> Vec<Vec<(usize, usize)>> {
    fn go(cur: (usize, usize), top: (usize, usize), acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        acc.push(cur);
        if cur == top {
            out.push(acc.clone());
        } else {
            if cur.0 < top.0 {
                go((cur.0 + 1, cur.1), top, acc, out);
            }
            if cur.1 < top.1 {
                go((cur.0, cur.1 + 1), top, acc, out);
            }
        }
        acc.pop();
    }
    let mut out = Vec::new();
    go((0, 0), (u, v), &mut Vec::new(), &mut out);
    out
}

/// Every labelling of the `(u+1) x (v+1)` rectangle by `0..=ell` that gives path point `k`
/// label `k` and never repeats a label on comparable cells.
fn label_assignments(u: usize, v: usize, path: &[(usize, usize)]) -> Vec<Vec<usize>> {
    let ell = u + v;
    let cells: Vec<(usize, usize)> = (0..=u).flat_map(|i| (0..=v).map(move |j| (i, j))).collect();
    let idx = |c: (usize, usize)| c.0 * (v + 1) + c.1;
    let mut fixed = vec![None; cells.len()];
    for (k, &c) in path.iter().enumerate() {
        fixed[idx(c)] = Some(k);
    }
    let comparable = |a: (usize, usize), b: (usize, usize)| (a.0 <= b.0 && a.1 <= b.1) || (b.0 <= a.0 && b.1 <= a.1);

    fn fill(
        pos: usize,
        cells: &[(usize, usize)],
        fixed: &[Option<usize>],
        labels: &mut Vec<usize>,
        ell: usize,
        comparable: &dyn Fn((usize, usize), (usize, usize)) -> bool,
        out: &mut Vec<Vec<usize>>,
    ) {
        if pos == cells.len() {
            out.push(labels.clone());
            return;
        }
        let choices: Vec<usize> = match fixed[pos] {
            Some(k) => vec![k],
            None => (0..=ell).collect(),
        };
        for k in choices {
            // Path points fix their labels up front, so they constrain earlier free cells too.
            let clash_fixed = fixed
                .iter()
                .enumerate()
                .any(|(j, f)| j != pos && *f == Some(k) && comparable(cells[j], cells[pos]));
            let clash_prev = (0..pos).any(|j| labels[j] == k && comparable(cells[j], cells[pos]));
            if clash_fixed || clash_prev {
                continue;
            }
            labels.push(k);
            fill(pos + 1, cells, fixed, labels, ell, comparable, out);
            labels.pop();
        }
    }

    let mut out = Vec::new();
    fill(0, &cells, &fixed, &mut Vec::with_capacity(cells.len()), ell, &comparable, &mut out);
    out
}

/// Exhaustively checks that every valid labelling is constant on each anti-diagonal `k < ell`
/// of the rectangle, over every top corner `(u, v)` with `u + v = ell` and every path.
pub fn verify_constant_on_rows(ell: usize) -> Result<VerificationReport, VerifierError> {
    if ell == 0 {
        return Err(VerifierError::PreconditionViolated("ell must be at least 1".into()));
    }
    let claim = "constant_on_rows";
    let (mut instances, mut assignments) = (0u64, 0u64);
    for u in 0..=ell {
        let v = ell - u;
        for path in lattice_paths(u, v) {
            instances += 1;
            for labels in label_assignments(u, v, &path) {
                assignments += 1;
                let label = |i: usize, j: usize| labels[i * (v + 1) + j];
                for k in 0..ell {
                    let diag: Vec<usize> =
                        (0..=u).filter(|&i| k >= i && k - i <= v).map(|i| label(i, k - i)).collect();
                    if diag.iter().any(|&l| l != diag[0]) {
                        return Ok(VerificationReport::fail(
                            claim,
                            json!({ "top": [u, v], "path": path, "labels": labels, "diagonal": k }),
                        )
                        .param("ell", ell));
                    }
                }
            }
        }
    }
    Ok(VerificationReport::pass(claim, Some(json!({ "instances": instances, "assignments": assignments })))
        .param("ell", ell))
}

/// The chain `F = {(x, a, 1) : a <= x <= 3a}` against `T = {(u, v, 0) : u + v <= 2a - 1}`:
/// `F` has `2a + 1` points, every point of level 0 outside `T` is comparable to all of `F`,
/// the points of `T` are not, and the longest chain in `T` has `2a` points.
pub fn verify_final_counting(a: u64) -> Result<VerificationReport, VerifierError> {
    if a == 0 {
        return Err(VerifierError::PreconditionViolated("a must be at least 1".into()));
    }
    let claim = "final_counting";
    let f: Vec<SymbolicElement> = (a..=3 * a).map(|x| p5(x, a, 1)).collect();
    let fw = window_of(FamilyId::P5, WindowSpec::new(vec![]), f.clone())?;
    let f_chain = fw.poset.is_chain(&fw.poset.all());

    let cap = 3 * a;
    let lower = enumerate(FamilyId::P5, &WindowSpec::new(vec![0..=cap as i64, 0..=cap as i64, 0..=0]))?;
    let mut t = Vec::new();
    for q in &lower {
        let SymbolicElement::P5 { x: u, y: v, .. } = *q else { unreachable!() };
        let all_comparable = f.iter().all(|p| le(q, p) || le(p, q));
        if (u + v >= 2 * a) != all_comparable {
            return Ok(VerificationReport::fail(claim, json!({ "misplaced": q })).param("a", a));
        }
        if u + v < 2 * a {
            t.push(*q);
        }
    }
    let tw = window_of(FamilyId::P5, WindowSpec::new(vec![]), t)?;
    let (t_height, longest) = height_and_max_chain(&tw.poset);
    let witness = json!({
        "F_size": f.len(),
        "T_height": t_height,
        "T_longest_chain": tw.poset.names_of(&longest),
    });
    let ok = f_chain && f.len() as u64 == 2 * a + 1 && t_height as u64 == 2 * a;
    Ok(if ok { VerificationReport::pass(claim, Some(witness)) } else { VerificationReport::fail(claim, witness) }
        .param("a", a))
}

/// The widest antichain of level 0 restricted to `[0, b]^2` has `b + 1` points.
pub fn verify_single_level_width(b: u64) -> Result<VerificationReport, VerifierError> {
    let claim = "single_level_width";
    let bi = b as i64;
    let w = window(FamilyId::P5, &WindowSpec::new(vec![0..=bi, 0..=bi, 0..=0]))?;
    let (width, _, antichain) = width_and_dilworth(&w.poset);
    let witness = json!({ "width": width, "antichain": w.poset.names_of(&antichain) });
    Ok(if width as u64 == b + 1 {
        VerificationReport::pass(claim, Some(witness))
    } else {
        VerificationReport::fail(claim, witness)
    }
    .param("B", b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::report::Status;
    use proptest::prelude::*;

    #[test]
    fn level_structure_examples() {
        assert!(verify_level_structure(0, 4, 10).unwrap().passed());
        let r = verify_level_structure(1, 0, 3).unwrap();
        assert!(r.passed());
        assert_eq!(r.witness.unwrap()["antichain_size"], 1);
        assert!(verify_level_structure(2, 8, 3).is_err());
    }

    #[test]
    fn interpolation_examples() {
        assert_eq!(interpolate_chain(0, (0, 0), (1, 1), (2, 3)).unwrap().len(), 6);
        assert_eq!(interpolate_chain(4, (2, 2), (2, 2), (2, 2)).unwrap().len(), 1);
        let row = interpolate_chain(0, (0, 0), (0, 0), (3, 0)).unwrap();
        assert_eq!(names(&row), ["(0,0,0)", "(1,0,0)", "(2,0,0)", "(3,0,0)"]);
        assert!(interpolate_chain(0, (1, 0), (0, 0), (3, 3)).is_err());
    }

    #[test]
    fn min_drop_examples() {
        let r = verify_min_drop(2, 2, 12).unwrap();
        assert_eq!(r.status, Status::Pass);
        // Exhaustive count on the 13 x 13 box: points with x + y > 8 lying below (2,2,0).
        let w = r.witness.unwrap();
        assert_eq!(w["below"], 18);
        let r = verify_min_drop(0, 0, 6).unwrap();
        assert_eq!(r.witness.unwrap()["below"], 0);
        assert!(verify_min_drop(1, 3, 15).unwrap().passed());
    }

    #[test]
    fn min_drop_count_matches_direct_enumeration() {
        let direct = (0..=12u64)
            .flat_map(|x| (0..=12u64).map(move |y| (x, y)))
            .filter(|&(x, y)| x + y > 8 && x.min(y) < 2)
            .count();
        assert_eq!(direct, 18);
    }

    #[test]
    fn rows_small_cases() {
        let r = verify_constant_on_rows(1).unwrap();
        assert!(r.passed());
        // Top (1,1) through (1,0): the free cell (0,1) is forced to label 1.
        let path = [(0, 0), (1, 0), (1, 1)];
        assert_eq!(label_assignments(1, 1, &path), vec![vec![0, 1, 1, 2]]);
        assert!(verify_constant_on_rows(2).unwrap().passed());
        assert!(verify_constant_on_rows(0).is_err());
    }

    #[test]
    fn labellings_are_bijective_on_maximal_chains() {
        for ell in 1..=3 {
            for u in 0..=ell {
                let v = ell - u;
                for path in lattice_paths(u, v) {
                    for labels in label_assignments(u, v, &path) {
                        for chain in lattice_paths(u, v) {
                            let mut seen: Vec<usize> = chain.iter().map(|&(i, j)| labels[i * (v + 1) + j]).collect();
                            seen.sort();
                            assert_eq!(seen, (0..=ell).collect::<Vec<_>>());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn final_counting_examples() {
        for (a, f, t) in [(1, 3, 2), (3, 7, 6)] {
            let r = verify_final_counting(a).unwrap();
            assert!(r.passed());
            let w = r.witness.unwrap();
            assert_eq!((w["F_size"].as_u64().unwrap(), w["T_height"].as_u64().unwrap()), (f, t));
        }
    }

    #[test]
    fn single_level_width_small() {
        for b in 0..=4 {
            assert!(verify_single_level_width(b).unwrap().passed());
        }
    }

    proptest! {
        #[test]
        fn interpolation_has_formula_size(
            x in 0u64..6, y in 0u64..6, du in 0u64..5, dv in 0u64..5, dw in 0u64..5, dz in 0u64..5,
        ) {
            let (u, v) = (x + du, y + dv);
            let (w, z) = (u + dw, v + dz);
            let c = interpolate_chain(1, (x, y), (u, v), (w, z)).unwrap();
            prop_assert_eq!(c.len() as u64, w + z + 1 - x - y);
            prop_assert!(c.contains(&p5(u, v, 1)));
            for pair in c.windows(2) {
                prop_assert!(le(&pair[0], &pair[1]));
            }
            prop_assert!(c.iter().all(|e| le(&p5(x, y, 1), e) && le(e, &p5(w, z, 1))));
        }
    }
}
