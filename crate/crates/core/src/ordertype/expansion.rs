//! Reference decisions by explicit embedding search on bounded expansions.
//!
//! A term of rank at most 2 is flattened into a word of atoms: single points, `w`-runs and
//! `w*`-runs. Each repetition is unrolled into a fixed number of copies plus one atom that stands
//! for the run through all remaining copies. Predicates are then decided by searching for an
//! embedding of a small pattern word, independently of the structural rules.

use super::{Alternation, CountOrOmega, OrderTerm};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Atom {
    Point,
    Up,
    Down,
    /// The cofinal run through the copies of `w[b]`; `copy_len` is the length of one unrolled copy.
    UpThrough { copy_len: usize },
    /// The coinitial run through the copies of `w*[b]`.
    DownThrough { copy_len: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Pat {
    P,
    U,
    D,
}

/// Unrolls `t` with `copies` explicit copies per repetition.
pub fn expand(t: &OrderTerm, copies: usize) -> Vec<Atom> {
    match t {
        OrderTerm::Fin(k) => vec![Atom::Point; (*k).min(3) as usize],
        OrderTerm::Omega => vec![Atom::Up],
        OrderTerm::OmegaStar => vec![Atom::Down],
        OrderTerm::Sum(parts) => parts.iter().flat_map(|p| expand(p, copies)).collect(),
        OrderTerm::OmegaRep(b) | OrderTerm::OmegaStarRep(b) => {
            let body = expand(b, copies);
            if body.is_empty() {
                return body;
            }
            let copy_len = body.len();
            let mut out = Vec::with_capacity(copy_len * copies + 1);
            let up = matches!(t, OrderTerm::OmegaRep(_));
            if !up {
                out.push(Atom::DownThrough { copy_len });
            }
            for _ in 0..copies {
                out.extend_from_slice(&body);
            }
            if up {
                out.push(Atom::UpThrough { copy_len });
            }
            out
        }
    }
}

fn reverse_word(w: &[Atom]) -> Vec<Atom> {
    w.iter()
        .rev()
        .map(|a| match *a {
            Atom::Point => Atom::Point,
            Atom::Up => Atom::Down,
            Atom::Down => Atom::Up,
            Atom::UpThrough { copy_len } => Atom::DownThrough { copy_len },
            Atom::DownThrough { copy_len } => Atom::UpThrough { copy_len },
        })
        .collect()
}

/// Whether a single target atom can host the pattern block `seq`.
///
/// An increasing run hosts finitely many points followed by at most one increasing run; a
/// decreasing run hosts at most one decreasing run followed by finitely many points.
fn absorbs(atom: Atom, seq: &[Pat]) -> bool {
    match atom {
        Atom::Point => seq == [Pat::P],
        Atom::Up | Atom::UpThrough { .. } => {
            let pts = seq.iter().take_while(|&&p| p == Pat::P).count();
            seq[pts..].is_empty() || seq[pts..] == [Pat::U]
        }
        Atom::Down | Atom::DownThrough { .. } => {
            let start = usize::from(seq.first() == Some(&Pat::D));
            seq[start..].iter().all(|&p| p == Pat::P)
        }
    }
}

fn embeds(pattern: &[Pat], word: &[Atom]) -> bool {
    let (m, n) = (pattern.len(), word.len());
    // ok[i][j]: pattern[i..] embeds into word[j..].
    let mut ok = vec![vec![false; n + 1]; m + 1];
    for row in ok[m].iter_mut() {
        *row = true;
    }
    for j in (0..n).rev() {
        for i in (0..m).rev() {
            ok[i][j] = ok[i][j + 1] || (1..=m - i).any(|c| absorbs(word[j], &pattern[i..i + c]) && ok[i + c][j + 1]);
        }
    }
    ok[0][0]
}

const COPIES: usize = 4;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleVerdict {
    pub wellfounded: bool,
    pub cowellfounded: bool,
    pub embeds_omega_plus_one: bool,
    pub embeds_zeta: bool,
    pub embeds_omega_plus_omegastar: bool,
    pub alt: Alternation,
    pub rank: u32,
    pub limits: (CountOrOmega, CountOrOmega),
    pub vacillating: bool,
}

fn alternations(word: &[Atom]) -> u64 {
    let mut n = 0u64;
    let mut pat = vec![Pat::D, Pat::U];
    while n < 32 && embeds(&pat, word) {
        n += 1;
        pat.extend([Pat::D, Pat::U]);
    }
    n
}

fn count_atoms(word: &[Atom], up: bool) -> usize {
    word.iter()
        .filter(|a| match a {
            Atom::Up | Atom::UpThrough { .. } => up,
            Atom::Down | Atom::DownThrough { .. } => !up,
            Atom::Point => false,
        })
        .count()
}

fn stable_count(a: usize, b: usize) -> CountOrOmega {
    if a == b { CountOrOmega::Finite(a as u64) } else { CountOrOmega::Omega }
}

/// Searches for an interval ending at a cofinal run through copies that bounds none of its
/// increasing sequences and whose copies are not bare points.
fn has_decomposable_interval(word: &[Atom]) -> bool {
    word.iter().enumerate().any(|(j, a)| match *a {
        Atom::UpThrough { copy_len } if j >= copy_len => {
            let last_copy = &word[j - copy_len..j];
            let not_omega_tail = last_copy.iter().any(|a| *a != Atom::Point);
            not_omega_tail
                && (0..=j - copy_len).any(|i| !embeds(&[Pat::U, Pat::P], &word[i..=j]))
        }
        _ => false,
    })
}

/// Decides everything by search; only meaningful for terms of rank at most 2.
pub fn oracle(t: &OrderTerm) -> OracleVerdict {
    let w4 = expand(t, COPIES);
    let w5 = expand(t, COPIES + 1);
    let (a4, a5) = (alternations(&w4), alternations(&w5));
    let has_run = w4.iter().any(|a| *a != Atom::Point);
    let through_over_runs = w4.iter().enumerate().any(|(j, a)| match *a {
        Atom::UpThrough { copy_len } => w4[j - copy_len..j].iter().any(|x| *x != Atom::Point),
        Atom::DownThrough { copy_len } => w4[j + 1..=j + copy_len].iter().any(|x| *x != Atom::Point),
        _ => false,
    });
    let rank = match (has_run, through_over_runs) {
        (false, _) => 0,
        (true, false) => 1,
        (true, true) => 2,
    };
    OracleVerdict {
        wellfounded: !embeds(&[Pat::D], &w4),
        cowellfounded: !embeds(&[Pat::U], &w4),
        embeds_omega_plus_one: embeds(&[Pat::U, Pat::P], &w4),
        embeds_zeta: embeds(&[Pat::D, Pat::U], &w4),
        embeds_omega_plus_omegastar: embeds(&[Pat::U, Pat::D], &w4),
        alt: if a5 > a4 { Alternation::Infinite } else { Alternation::Finite(a4) },
        rank,
        limits: (
            stable_count(count_atoms(&w4, true), count_atoms(&w5, true)),
            stable_count(count_atoms(&w4, false), count_atoms(&w5, false)),
        ),
        vacillating: !has_decomposable_interval(&w4) && !has_decomposable_interval(&reverse_word(&w4)),
    }
}

/// Thirty terms of rank at most 2 used for the oracle comparison.
pub const REGRESSION_TERMS: [&str; 30] = [
    "0",
    "5",
    "w",
    "w*",
    "w*+w",
    "w+1",
    "1+w*",
    "w+w*",
    "w[w*]",
    "w[w]",
    "w[w*+w]",
    "w*[w]",
    "w*[w*]",
    "w*[w*+w]",
    "w[w+w*]",
    "w*[w+w*]",
    "w[w*]+1",
    "1+w[w*]",
    "w[w*+1]",
    "w[1+w*]",
    "w[w+1]",
    "w*[w+1]",
    "w*[1+w*]",
    "w+w[w*]",
    "w[w*]+w*[w]",
    "w*[w]+w[w*]",
    "w[w*]+w[w]",
    "w+w*+w+w*",
    "w*+w+w*+w+3",
    "w[w*+w+w*+w]",
];

#[cfg(test)]
mod tests {
    use super::super::{parse_term, OrderTerm};
    use super::*;

    #[test]
    fn expansion_shape() {
        let w = expand(&parse_term("w[w*]").unwrap(), 2);
        assert_eq!(w, vec![Atom::Down, Atom::Down, Atom::UpThrough { copy_len: 1 }]);
        let w = expand(&parse_term("w*[2+w]").unwrap(), 1);
        assert_eq!(
            w,
            vec![Atom::DownThrough { copy_len: 3 }, Atom::Point, Atom::Point, Atom::Up]
        );
    }

    #[test]
    fn absorption_rules() {
        assert!(absorbs(Atom::Up, &[Pat::P, Pat::P, Pat::U]));
        assert!(!absorbs(Atom::Up, &[Pat::U, Pat::P]));
        assert!(absorbs(Atom::Down, &[Pat::D, Pat::P]));
        assert!(!absorbs(Atom::Down, &[Pat::P, Pat::D]));
        assert!(!absorbs(Atom::Point, &[Pat::P, Pat::P]));
    }

    #[test]
    fn regression_terms_parse_with_rank_at_most_two() {
        for s in REGRESSION_TERMS {
            let t = parse_term(s).unwrap();
            assert!(crate::ordertype::hausdorff_rank(&t) <= 2, "{s}");
        }
        assert_eq!(oracle(&OrderTerm::Fin(0)).alt, Alternation::Finite(0));
    }

    fn structural(t: &OrderTerm) -> OracleVerdict {
        use crate::ordertype::*;
        let p = predicates(t);
        OracleVerdict {
            wellfounded: p.wellfounded,
            cowellfounded: p.cowellfounded,
            embeds_omega_plus_one: p.embeds_omega_plus_one,
            embeds_zeta: p.embeds_zeta,
            embeds_omega_plus_omegastar: p.embeds_omega_plus_omegastar,
            alt: alternation_number(t),
            rank: hausdorff_rank(t),
            limits: limit_point_counts(t),
            vacillating: is_vacillating_chain(t),
        }
    }

    #[test]
    fn oracle_agrees_on_regression_set() {
        for s in REGRESSION_TERMS {
            let t = parse_term(s).unwrap();
            assert_eq!(oracle(&t), structural(&t), "{s}");
            assert_eq!(oracle(&t.reverse().normalize()), structural(&t.reverse().normalize()), "{s} reversed");
        }
    }

    proptest::proptest! {
        #[test]
        fn oracle_agrees_on_random_low_rank_terms(t in crate::ordertype::strategies::arb_term(3)) {
            let t = t.normalize();
            proptest::prop_assume!(crate::ordertype::hausdorff_rank(&t) <= 2);
            proptest::prop_assert_eq!(oracle(&t), structural(&t));
        }
    }
}
