//! Finite-dimensional highest-weight modules over sl₂.

use crate::alphabet::Alphabet;
use crate::lie::LieExpr;
use crate::poly::{ModElement, Poly};
use crate::presentation::{AlgebraPresentation, ModulePresentation};
use crate::scalar::{factorial, int, Scalar};
use crate::word::{ModMonomial, Word};

pub const X: u32 = 0;
pub const H: u32 = 1;
pub const Y: u32 = 2;

/// `[h,x] − 2x`, `[h,y] + 2y`, `[x,y] − h` over `x > h > y`.
pub fn sl2_relations() -> Vec<LieExpr> {
    let (x, h, y) = (LieExpr::gen(X), LieExpr::gen(H), LieExpr::gen(Y));
    vec![
        LieExpr::bracket(h.clone(), x.clone()) - LieExpr::scale(int(2), x.clone()),
        LieExpr::bracket(h.clone(), y.clone()) + LieExpr::scale(int(2), y.clone()),
        LieExpr::bracket(x, y) - h,
    ]
}

pub fn sl2_algebra() -> AlgebraPresentation {
    AlgebraPresentation::from_lie(
        Alphabet::algebra(["x", "h", "y"]).unwrap(),
        &sl2_relations(),
    )
    .unwrap()
}

/// `⟨v0 | x·v0, h·v0 − λ·v0, y^{m+1}·v0⟩` with the sl₂ relations as schema.
pub fn sl2_presentation(m: usize, lambda: Scalar) -> ModulePresentation {
    let t = vec![
        Poly::var(X).apply_to(0),
        (&Poly::var(H) - &Poly::constant(lambda)).apply_to(0),
        Poly::monomial(Word::power(Y, m + 1)).apply_to(0),
    ];
    ModulePresentation::new(sl2_algebra(), Alphabet::module(["v0"]).unwrap(), t).unwrap()
}

/// `v_i = y^i·v0 / i!`.
pub fn sl2_vector(i: usize) -> ModElement {
    ModElement::term(
        factorial(i as u32).recip(),
        ModMonomial::new(Word::power(Y, i), 0),
    )
}
