//! Order predicates for the five example families.
//!
//! P1 and P5 are given by closed clause lists. P2, P3 and P4 are given only by generating
//! relations; for those the order is decided by breadth-first search over the generator moves,
//! inside a box that the moves cannot usefully leave.

use std::collections::{HashSet, VecDeque};

use super::{P1Point, SymbolicElement};

pub(super) fn p1_le(p: P1Point, q: P1Point) -> bool {
    use P1Point::*;
    match (p, q) {
        _ if p == q => true,
        (Bot, _) | (_, Top) => true,
        (_, Bot) | (Top, _) => false,
        (Pair(n, i), Pair(m, j)) => (i == j && n <= m) || (i == 1 && j == 0 && m > n),
        (Pair(_, i), A) => i == 1,
        (A, Pair(..)) => false,
        (A, A) => true,
    }
}

/// `(z, i, n)` with the level index `2z + i`. Moves: `n + 1`, the next level at the same `n`,
/// and two levels up at `n = 0`. The level never decreases, and `n` only exceeds its start when
/// climbing within one level, so the box `level <= target level`, `n <= max(n, target n)`
/// contains every useful path.
pub(super) fn p2_le(p: (i64, u8, u64), q: (i64, u8, u64)) -> bool {
    let level = |(z, i, _): (i64, u8, u64)| 2 * z + i64::from(i);
    let (start, target) = ((level(p), p.2), (level(q), q.2));
    if target.0 < start.0 {
        return false;
    }
    let n_cap = p.2.max(q.2);
    bfs(start, target, |&(l, n)| {
        let mut out = Vec::with_capacity(3);
        if n < n_cap {
            out.push((l, n + 1));
        }
        if l < target.0 {
            out.push((l + 1, n));
        }
        if l + 2 <= target.0 {
            out.push((l + 2, 0));
        }
        out
    })
}

/// Moves `(x, y + 1)` and `(x + y + 1, y)`; neither coordinate ever decreases.
pub(super) fn p3_le(p: (u64, u64), q: (u64, u64)) -> bool {
    if q.0 < p.0 || q.1 < p.1 {
        return false;
    }
    bfs(p, q, |&(x, y)| {
        let mut out = Vec::with_capacity(2);
        if y < q.1 {
            out.push((x, y + 1));
        }
        if x + y < q.0 {
            out.push((x + y + 1, y));
        }
        out
    })
}

/// Upward moves from `(x, y, z)`: `z + 1`; `y + 1`; anything at `y + 2`; `x - 1`; and
/// `(x - y - 1, y, z')` for every `z'`, of which `z' = 0` suffices since `z` can then grow.
/// `y` never decreases, anything two rows up is above, and `x` never increases, so the search
/// stays in rows `y..=target y` with `x <= x` and `z <= max(z, target z)`.
pub(super) fn p4_le(p: (u64, u64, u64), q: (u64, u64, u64)) -> bool {
    if q.1 < p.1 {
        return false;
    }
    if q.1 >= p.1 + 2 {
        return true;
    }
    let z_cap = p.2.max(q.2);
    bfs(p, q, |&(x, y, z)| {
        let mut out = Vec::with_capacity(4);
        if z < z_cap {
            out.push((x, y, z + 1));
        }
        if y < q.1 {
            out.push((x, y + 1, z));
        }
        if x > 0 {
            out.push((x - 1, y, z));
        }
        if x > y {
            out.push((x - y - 1, y, 0));
        }
        out
    })
}

pub(super) fn p5_le(p: (u64, u64, u64), q: (u64, u64, u64)) -> bool {
    let (x, y, n) = p;
    let (u, v, m) = q;
    n >= m + 2
        || (n == m && x <= u && y <= v)
        || (n == m + 1 && x.min(y) < u.min(v))
        || (n == m + 1 && x + y <= 2 * (u + v))
}

fn bfs<S, F>(start: S, target: S, moves: F) -> bool
where
    S: Copy + Eq + std::hash::Hash,
    F: Fn(&S) -> Vec<S>,
{
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(s) = queue.pop_front() {
        if s == target {
            return true;
        }
        for next in moves(&s) {
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    false
}

/// Uncached comparison; `None` when the two elements belong to different families.
pub(super) fn le(p: &SymbolicElement, q: &SymbolicElement) -> Option<bool> {
    use SymbolicElement as E;
    Some(match (*p, *q) {
        (E::P1(a), E::P1(b)) => p1_le(a, b),
        (E::P2 { z, i, n }, E::P2 { z: z2, i: i2, n: n2 }) => p2_le((z, i, n), (z2, i2, n2)),
        (E::P3 { x, y }, E::P3 { x: a, y: b }) => p3_le((x, y), (a, b)),
        (E::P4 { x, y, z }, E::P4 { x: a, y: b, z: c }) => p4_le((x, y, z), (a, b, c)),
        (E::P5 { x, y, n }, E::P5 { x: u, y: v, n: m }) => p5_le((x, y, n), (u, v, m)),
        _ => return None,
    })
}
