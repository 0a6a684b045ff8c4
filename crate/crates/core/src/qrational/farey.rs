//! The Stern–Brocot subdivision with q-weighted mediants.
//!
//! Every node is the mediant of the two ends of its interval, computed on
//! the raw (unreduced) numerator/denominator pairs:
//! `[node] = (N_L + q^d N_R)/(M_L + q^d M_R)`. The root `1/1` has `d = 0`;
//! a left child gets `d = 1` and a right child gets the parent's `d + 1`.

use num_bigint::BigInt;
use num_traits::One;

use crate::contfrac::Fraction;
use crate::modular::QMatrix;
use crate::ring::{IntPoly, RatFunc};

#[derive(Clone, Debug, PartialEq, Eq)]
struct End {
    frac: Fraction,
    n: IntPoly,
    m: IntPoly,
}

#[derive(Clone, Debug)]
struct State {
    left: End,
    right: End,
    d: usize,
}

impl State {
    fn root() -> Self {
        State {
            left: End {
                frac: Fraction::zero(),
                n: IntPoly::zero(),
                m: IntPoly::one(),
            },
            right: End {
                frac: Fraction::infinity(),
                n: IntPoly::one(),
                m: IntPoly::zero(),
            },
            d: 0,
        }
    }

    fn node(&self) -> End {
        let qd = IntPoly::q_pow(self.d);
        End {
            frac: self.left.frac.mediant(&self.right.frac),
            n: &self.left.n + &(&qd * &self.right.n),
            m: &self.left.m + &(&qd * &self.right.m),
        }
    }

    fn left_child(&self, node: End) -> Self {
        State {
            left: self.left.clone(),
            right: node,
            d: 1,
        }
    }

    fn right_child(&self, node: End) -> Self {
        State {
            left: node,
            right: self.right.clone(),
            d: self.d + 1,
        }
    }
}

/// A node of the weighted tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FareyNode {
    pub fraction: Fraction,
    pub value: RatFunc,
    /// Breadth-first depth, the root being depth 0.
    pub depth: usize,
    /// Exponent used in this node's own mediant.
    pub weight: usize,
    /// Exponent carried to the left child.
    pub left_edge_weight: usize,
    /// Exponent carried to the right child.
    pub right_edge_weight: usize,
    /// The two ends of the interval this node subdivides.
    pub parents: (Fraction, Fraction),
}

/// All nodes of depth `0..=depth` in breadth-first order (left to right
/// within a level).
pub fn farey_tree(depth: usize) -> Vec<FareyNode> {
    let mut out = Vec::new();
    let mut level = vec![State::root()];
    for k in 0..=depth {
        let mut next = Vec::with_capacity(level.len() * 2);
        for s in &level {
            let node = s.node();
            out.push(FareyNode {
                fraction: node.frac.clone(),
                value: RatFunc::reduce(node.n.clone(), node.m.clone()).expect("nonzero"),
                depth: k,
                weight: s.d,
                left_edge_weight: 1,
                right_edge_weight: s.d + 1,
                parents: (s.left.frac.clone(), s.right.frac.clone()),
            });
            if k < depth {
                next.push(s.left_child(node.clone()));
                next.push(s.right_child(node));
            }
        }
        level = next;
    }
    out
}

/// `[x]_q` by descending the weighted tree. The tree holds the positive
/// rationals; `x <= 0` is shifted to `x + k >= 1` and brought back with
/// `T_q^-k`.
pub fn farey_value(x: &Fraction) -> RatFunc {
    if x.is_infinite() {
        return RatFunc::infinity();
    }
    if x.is_positive() {
        return descend(x);
    }
    let k = BigInt::one() - x.floor();
    let shifted = x + &Fraction::from_int(k.clone());
    QMatrix::t_pow(&-k).moebius(&descend(&shifted))
}

fn descend(x: &Fraction) -> RatFunc {
    let mut s = State::root();
    loop {
        let node = s.node();
        match x.cmp(&node.frac) {
            std::cmp::Ordering::Equal => {
                return RatFunc::reduce(node.n, node.m).expect("nonzero");
            }
            std::cmp::Ordering::Less => s = s.left_child(node),
            std::cmp::Ordering::Greater => s = s.right_child(node),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qrational::{q_rational, Method};
    use crate::ring::rf;

    #[test]
    fn first_levels() {
        let t = farey_tree(2);
        assert_eq!(t[0].fraction, Fraction::from_int(1));
        assert_eq!(t[0].value, RatFunc::one());
        assert_eq!(t[0].weight, 0);
        assert_eq!(t[1].fraction, "1/2".parse().unwrap());
        assert_eq!(t[1].value, rf(&[0, 1], &[1, 1]));
        assert_eq!(t[2].fraction, Fraction::from_int(2));
        // children of 1/2: 1/3 and 2/3 with d = 2 on the right
        assert_eq!(t[4].fraction, "2/3".parse().unwrap());
        assert_eq!(t[4].weight, 2);
        assert_eq!(t[4].value, rf(&[0, 1, 1], &[1, 1, 1]));
        assert_eq!(t.len(), 7);
    }

    #[test]
    fn tree_matches_regular_cf_method() {
        for node in farey_tree(12) {
            let expected = q_rational(&node.fraction, Method::Regcf).value;
            assert_eq!(node.value, expected, "{}", node.fraction);
        }
    }

    #[test]
    fn non_positive_values() {
        for s in ["0", "-1", "-1/2", "-7/3", "1/3"] {
            let x: Fraction = s.parse().unwrap();
            assert_eq!(farey_value(&x), q_rational(&x, Method::Negcf).value, "{s}");
        }
    }
}
