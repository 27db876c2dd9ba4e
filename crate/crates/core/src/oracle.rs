//! Brute-force reference computations used to cross-check the fast algorithms.
//!
//! Everything here enumerates subsets directly and is only meant for small inputs.

use crate::poset::{ElementId, FinitePoset, Subset};

fn mask_members(mask: u32) -> impl Iterator<Item = ElementId> {
    (0..32).filter(move |i| mask >> i & 1 == 1).map(ElementId)
}

fn subsets(p: &FinitePoset, keep: impl Fn(&FinitePoset, u32) -> bool) -> Vec<u32> {
    assert!(p.len() <= 16, "brute force is limited to 16 elements");
    (0u32..1 << p.len()).filter(|&m| keep(p, m)).collect()
}

fn pairwise(mask: u32, rel: impl Fn(ElementId, ElementId) -> bool) -> bool {
    let v: Vec<ElementId> = mask_members(mask).collect();
    v.iter()
        .enumerate()
        .all(|(i, &a)| v[i + 1..].iter().all(|&b| rel(a, b)))
}

pub fn all_chains(p: &FinitePoset) -> Vec<u32> {
    subsets(p, |p, m| pairwise(m, |a, b| p.comparable(a, b)))
}

pub fn all_antichains(p: &FinitePoset) -> Vec<u32> {
    subsets(p, |p, m| pairwise(m, |a, b| !p.comparable(a, b)))
}

pub fn height(p: &FinitePoset) -> usize {
    all_chains(p).iter().map(|m| m.count_ones() as usize).max().unwrap_or(0)
}

pub fn max_antichain_size(p: &FinitePoset) -> usize {
    all_antichains(p).iter().map(|m| m.count_ones() as usize).max().unwrap_or(0)
}

/// Fewest parts in a partition of the whole poset into members of `family`.
fn min_partition(n: usize, family: &[u32]) -> usize {
    let full = (1u32 << n) - 1;
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        for &part in family {
            if part & low != 0 && part & !mask == 0 {
                let rest = best[(mask & !part) as usize];
                if rest != usize::MAX {
                    best[mask as usize] = best[mask as usize].min(rest + 1);
                }
            }
        }
    }
    best[full as usize]
}

pub fn min_chain_cover(p: &FinitePoset) -> usize {
    min_partition(p.len(), &all_chains(p))
}

pub fn min_antichain_cover(p: &FinitePoset) -> usize {
    min_partition(p.len(), &all_antichains(p))
}

fn to_mask(s: &Subset) -> u32 {
    s.iter().fold(0, |m, x| m | 1 << x.0)
}

/// The definition: no chain D has more elements outside C than C has outside D.
pub fn is_strongly_maximal(p: &FinitePoset, c: &Subset) -> bool {
    let cm = to_mask(c);
    all_chains(p)
        .into_iter()
        .all(|d| (cm & !d).count_ones() >= (d & !cm).count_ones())
}

pub fn subset_of_mask(mask: u32) -> Subset {
    mask_members(mask).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::fixtures::*;

    #[test]
    fn grid_values() {
        let g = grid(3);
        assert_eq!(height(&g), 5);
        assert_eq!(max_antichain_size(&g), 3);
        assert_eq!(min_chain_cover(&g), 3);
        assert_eq!(min_antichain_cover(&g), 5);
    }

    #[test]
    fn empty_poset() {
        let e = antichain(0);
        assert_eq!((height(&e), min_chain_cover(&e)), (0, 0));
    }
}
