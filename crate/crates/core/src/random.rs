//! Seeded random finite posets.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::poset::FinitePoset;

/// A random poset on `n` elements: each pair of a hidden linear order is a generator with
/// probability `p`, and the declared order is a random shuffle of the hidden one.
pub fn random_poset(seed: u64, n: usize, p: f64) -> FinitePoset {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_poset_with(&mut rng, n, p)
}

pub fn random_poset_with(rng: &mut impl Rng, n: usize, p: f64) -> FinitePoset {
    let mut labels: Vec<usize> = (0..n).collect();
    labels.shuffle(rng);
    let mut gens = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(p) {
                gens.push((format!("v{}", labels[a]), format!("v{}", labels[b])));
            }
        }
    }
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    FinitePoset::from_generators(&names, &gens).expect("generators follow a linear order")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_poset() {
        assert_eq!(random_poset(7, 8, 0.3), random_poset(7, 8, 0.3));
    }

    #[test]
    fn edge_probability_extremes() {
        let chain = random_poset(1, 6, 1.0);
        assert_eq!(chain.covers().len(), 5);
        assert!(random_poset(1, 6, 0.0).covers().is_empty());
    }
}
