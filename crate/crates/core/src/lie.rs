//! Lie polynomials as input syntax, expanded into the free associative algebra.

use crate::poly::Poly;
use crate::scalar::{int, Scalar};
use std::ops::{Add, Sub};

#[derive(Debug, Clone, PartialEq)]
pub enum LieExpr {
    Gen(u32),
    Bracket(Box<LieExpr>, Box<LieExpr>),
    Scale(Scalar, Box<LieExpr>),
    Sum(Vec<LieExpr>),
}

impl LieExpr {
    pub fn gen(letter: u32) -> Self {
        LieExpr::Gen(letter)
    }

    pub fn bracket(a: LieExpr, b: LieExpr) -> Self {
        LieExpr::Bracket(Box::new(a), Box::new(b))
    }

    pub fn scale(c: Scalar, e: LieExpr) -> Self {
        LieExpr::Scale(c, Box::new(e))
    }

    /// Replaces every bracket `[u, v]` with `uv - vu`, recursively.
    pub fn expand(&self) -> Poly {
        match self {
            LieExpr::Gen(l) => Poly::var(*l),
            LieExpr::Bracket(a, b) => {
                let (a, b) = (a.expand(), b.expand());
                &(&a * &b) - &(&b * &a)
            }
            LieExpr::Scale(c, e) => e.expand().scale(c),
            LieExpr::Sum(terms) => terms.iter().fold(Poly::zero(), |acc, t| &acc + &t.expand()),
        }
    }
}

pub fn lie_expand(e: &LieExpr) -> Poly {
    e.expand()
}

impl Add for LieExpr {
    type Output = LieExpr;
    fn add(self, rhs: LieExpr) -> LieExpr {
        match self {
            LieExpr::Sum(mut v) => {
                v.push(rhs);
                LieExpr::Sum(v)
            }
            lhs => LieExpr::Sum(vec![lhs, rhs]),
        }
    }
}

impl Sub for LieExpr {
    type Output = LieExpr;
    fn sub(self, rhs: LieExpr) -> LieExpr {
        self + LieExpr::scale(int(-1), rhs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word::Word;
    use proptest::prelude::*;

    const X: u32 = 0;
    const H: u32 = 1;

    #[test]
    fn sl2_relation_expands() {
        let e = LieExpr::bracket(LieExpr::gen(H), LieExpr::gen(X))
            - LieExpr::scale(int(2), LieExpr::gen(X));
        let expected = Poly::from_terms([
            (int(1), Word::new(vec![H, X])),
            (int(-1), Word::new(vec![X, H])),
            (int(-2), Word::new(vec![X])),
        ]);
        assert_eq!(e.expand(), expected);
    }

    #[test]
    fn jacobi_vanishes() {
        let (x, y, z) = (LieExpr::gen(0), LieExpr::gen(1), LieExpr::gen(2));
        let jac = LieExpr::bracket(LieExpr::bracket(x.clone(), y.clone()), z.clone())
            + LieExpr::bracket(LieExpr::bracket(y.clone(), z.clone()), x.clone())
            + LieExpr::bracket(LieExpr::bracket(z, x), y);
        assert!(jac.expand().is_zero());
    }

    #[test]
    fn generator_is_itself() {
        assert_eq!(LieExpr::gen(X).expand(), Poly::var(X));
    }

    fn arb_lie() -> impl Strategy<Value = LieExpr> {
        let leaf = (0u32..3).prop_map(LieExpr::Gen);
        leaf.prop_recursive(3, 12, 2, |inner| {
            prop_oneof![
                (inner.clone(), inner.clone()).prop_map(|(a, b)| LieExpr::bracket(a, b)),
                (-3i64..4, inner.clone()).prop_map(|(c, e)| LieExpr::scale(int(c), e)),
                (inner.clone(), inner).prop_map(|(a, b)| a + b),
            ]
        })
    }

    proptest! {
        #[test]
        fn bracket_is_commutator(u in arb_lie(), v in arb_lie()) {
            let (eu, ev) = (u.expand(), v.expand());
            prop_assert_eq!(LieExpr::bracket(u, v).expand(), &(&eu * &ev) - &(&ev * &eu));
        }

        #[test]
        fn expansion_is_linear(u in arb_lie(), v in arb_lie(), c in -4i64..5) {
            let lhs = (LieExpr::scale(int(c), u.clone()) + v.clone()).expand();
            prop_assert_eq!(lhs, &u.expand().scale(&int(c)) + &v.expand());
        }
    }
}
