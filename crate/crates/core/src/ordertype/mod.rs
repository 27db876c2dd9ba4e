//! Terms for countable scattered linear orders and decision procedures on them.

mod decide;
pub mod expansion;
mod parse;

use std::fmt;

use serde::{Serialize, Serializer};

pub use decide::{
    alternation_number, Alternation, Limits, embeds_omega_plus_one, embeds_omega_plus_omegastar, embeds_zeta,
    has_decomposable_interval, hausdorff_rank, is_cowellfounded, is_decomposable,
    is_vacillating_chain, is_wellfounded, limit_point_counts, predicates, OrderTypeReport,
    Predicates,
};
pub use parse::{parse_term, SyntaxError};

/// A finite term denoting a countable scattered linear order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum OrderTerm {
    Fin(u64),
    Omega,
    OmegaStar,
    Sum(Vec<OrderTerm>),
    /// `w[t]`: copies of `t` indexed by the naturals.
    OmegaRep(Box<OrderTerm>),
    /// `w*[t]`: copies of `t` indexed by the negative integers.
    OmegaStarRep(Box<OrderTerm>),
}

/// A natural number or countably many.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum CountOrOmega {
    Finite(u64),
    Omega,
}

impl CountOrOmega {
    fn add(self, other: Self) -> Self {
        match (self, other) {
            (CountOrOmega::Finite(a), CountOrOmega::Finite(b)) => CountOrOmega::Finite(a + b),
            _ => CountOrOmega::Omega,
        }
    }

    pub fn is_zero(self) -> bool {
        self == CountOrOmega::Finite(0)
    }
}

impl fmt::Display for CountOrOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CountOrOmega::Finite(k) => write!(f, "{k}"),
            CountOrOmega::Omega => write!(f, "w"),
        }
    }
}

impl Serialize for CountOrOmega {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            CountOrOmega::Finite(k) => s.serialize_u64(*k),
            CountOrOmega::Omega => s.serialize_str("w"),
        }
    }
}

impl OrderTerm {
    pub fn zeta() -> Self {
        OrderTerm::Sum(vec![OrderTerm::OmegaStar, OrderTerm::Omega])
    }

    pub fn omega_rep(body: OrderTerm) -> Self {
        OrderTerm::OmegaRep(Box::new(body))
    }

    pub fn omega_star_rep(body: OrderTerm) -> Self {
        OrderTerm::OmegaStarRep(Box::new(body))
    }

    pub fn is_empty(&self) -> bool {
        match self {
            OrderTerm::Fin(k) => *k == 0,
            OrderTerm::Omega | OrderTerm::OmegaStar => false,
            OrderTerm::Sum(parts) => parts.iter().all(OrderTerm::is_empty),
            OrderTerm::OmegaRep(b) | OrderTerm::OmegaStarRep(b) => b.is_empty(),
        }
    }

    pub fn is_finite(&self) -> bool {
        match self {
            OrderTerm::Fin(_) => true,
            OrderTerm::Omega | OrderTerm::OmegaStar => false,
            OrderTerm::Sum(parts) => parts.iter().all(OrderTerm::is_finite),
            OrderTerm::OmegaRep(b) | OrderTerm::OmegaStarRep(b) => b.is_empty(),
        }
    }

    /// Rewrites to normal form: flat sums, merged finite parts, no empty parts, no finite bodies.
    pub fn normalize(&self) -> OrderTerm {
        match self {
            OrderTerm::Fin(_) | OrderTerm::Omega | OrderTerm::OmegaStar => self.clone(),
            OrderTerm::Sum(parts) => {
                let mut out: Vec<OrderTerm> = Vec::new();
                let push = |t: OrderTerm, out: &mut Vec<OrderTerm>| match (out.last_mut(), t) {
                    (_, OrderTerm::Fin(0)) => {}
                    (Some(OrderTerm::Fin(a)), OrderTerm::Fin(b)) => *a += b,
                    (_, t) => out.push(t),
                };
                for part in parts {
                    match part.normalize() {
                        OrderTerm::Sum(inner) => {
                            for t in inner {
                                push(t, &mut out);
                            }
                        }
                        t => push(t, &mut out),
                    }
                }
                match out.len() {
                    0 => OrderTerm::Fin(0),
                    1 => out.pop().expect("one part"),
                    _ => OrderTerm::Sum(out),
                }
            }
            OrderTerm::OmegaRep(b) => match b.normalize() {
                OrderTerm::Fin(0) => OrderTerm::Fin(0),
                OrderTerm::Fin(_) => OrderTerm::Omega,
                body => OrderTerm::omega_rep(body),
            },
            OrderTerm::OmegaStarRep(b) => match b.normalize() {
                OrderTerm::Fin(0) => OrderTerm::Fin(0),
                OrderTerm::Fin(_) => OrderTerm::OmegaStar,
                body => OrderTerm::omega_star_rep(body),
            },
        }
    }

    /// The term for the reversed order.
    pub fn reverse(&self) -> OrderTerm {
        match self {
            OrderTerm::Fin(k) => OrderTerm::Fin(*k),
            OrderTerm::Omega => OrderTerm::OmegaStar,
            OrderTerm::OmegaStar => OrderTerm::Omega,
            OrderTerm::Sum(parts) => OrderTerm::Sum(parts.iter().rev().map(OrderTerm::reverse).collect()),
            OrderTerm::OmegaRep(b) => OrderTerm::omega_star_rep(b.reverse()),
            OrderTerm::OmegaStarRep(b) => OrderTerm::omega_rep(b.reverse()),
        }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for OrderTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderTerm::Fin(k) => write!(f, "{k}"),
            OrderTerm::Omega => write!(f, "w"),
            OrderTerm::OmegaStar => write!(f, "w*"),
            OrderTerm::Sum(parts) => {
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    if matches!(p, OrderTerm::Sum(_)) {
                        write!(f, "({p})")?;
                    } else {
                        write!(f, "{p}")?;
                    }
                }
                Ok(())
            }
            OrderTerm::OmegaRep(b) => write!(f, "w[{b}]"),
            OrderTerm::OmegaStarRep(b) => write!(f, "w*[{b}]"),
        }
    }
}


#[cfg(test)]
mod tests {
    use super::strategies::arb_term;
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn normalization_examples() {
        let t = OrderTerm::Sum(vec![OrderTerm::Fin(2), OrderTerm::Fin(0), OrderTerm::Fin(3)]);
        assert_eq!(t.normalize(), OrderTerm::Fin(5));
        assert_eq!(OrderTerm::omega_rep(OrderTerm::Fin(0)).normalize(), OrderTerm::Fin(0));
        assert_eq!(OrderTerm::omega_star_rep(OrderTerm::Fin(2)).normalize(), OrderTerm::OmegaStar);
        let nested = OrderTerm::Sum(vec![
            OrderTerm::Fin(1),
            OrderTerm::Sum(vec![OrderTerm::Fin(1), OrderTerm::Omega]),
        ]);
        assert_eq!(nested.normalize(), OrderTerm::Sum(vec![OrderTerm::Fin(2), OrderTerm::Omega]));
    }

    #[test]
    fn reverse_examples() {
        assert_eq!(OrderTerm::Omega.reverse(), OrderTerm::OmegaStar);
        let ab = OrderTerm::Sum(vec![OrderTerm::Fin(1), OrderTerm::Omega]);
        assert_eq!(ab.reverse(), OrderTerm::Sum(vec![OrderTerm::OmegaStar, OrderTerm::Fin(1)]));
        assert_eq!(
            OrderTerm::omega_rep(OrderTerm::Omega).reverse(),
            OrderTerm::omega_star_rep(OrderTerm::OmegaStar)
        );
    }

    #[test]
    fn render_examples() {
        assert_eq!(OrderTerm::zeta().render(), "w*+w");
        assert_eq!(OrderTerm::omega_rep(OrderTerm::zeta()).render(), "w[w*+w]");
    }

    proptest! {
        #[test]
        fn normalize_is_idempotent(t in arb_term(3)) {
            let n = t.normalize();
            prop_assert_eq!(n.normalize(), n);
        }

        #[test]
        fn reverse_is_an_involution(t in arb_term(3)) {
            prop_assert_eq!(t.reverse().reverse(), t.clone());
            prop_assert_eq!(t.normalize().reverse().normalize(), t.reverse().normalize());
        }

        #[test]
        fn parse_inverts_render(t in arb_term(3)) {
            let n = t.normalize();
            prop_assert_eq!(parse_term(&n.render()).unwrap(), n);
        }
    }
}
