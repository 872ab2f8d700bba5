//! Linear combinations of monomials: algebra polynomials and module elements.

use crate::alphabet::{Alphabet, Signature};
use crate::error::{Error, Result};
use crate::scalar::{abs, Scalar, ScalarDisplay};
use crate::word::{Gen, ModMonomial, Word};
use num::{One, Signed, Zero};
use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

/// Monomials of the free algebra (`Word`) and of a double-free module
/// (`ModMonomial`). Their `Ord` is the active monomial order.
pub trait Monomial: Ord + Clone + Hash + fmt::Debug {
    fn degree(&self) -> usize;
    fn word(&self) -> &Word;
    /// `a · self`
    fn left_mul(&self, a: &Word) -> Self;
    fn fmt_with(&self, sig: &Signature, f: &mut fmt::Formatter<'_>) -> fmt::Result;
    fn check(&self, sig: &Signature) -> Result<()>;
}

impl Monomial for Word {
    fn degree(&self) -> usize {
        Word::degree(self)
    }
    fn word(&self) -> &Word {
        self
    }
    fn left_mul(&self, a: &Word) -> Self {
        a.concat(self)
    }
    fn fmt_with(&self, sig: &Signature, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&sig.algebra))
    }
    fn check(&self, sig: &Signature) -> Result<()> {
        Word::check(self, &sig.algebra)
    }
}

impl Monomial for ModMonomial {
    fn degree(&self) -> usize {
        ModMonomial::degree(self)
    }
    fn word(&self) -> &Word {
        &self.word
    }
    fn left_mul(&self, a: &Word) -> Self {
        ModMonomial::left_mul(self, a)
    }
    fn fmt_with(&self, sig: &Signature, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(sig))
    }
    fn check(&self, sig: &Signature) -> Result<()> {
        ModMonomial::check(self, sig)
    }
}

/// A finite linear combination with nonzero rational coefficients, keyed
/// by monomial in ascending monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LinComb<M: Monomial> {
    terms: BTreeMap<M, Scalar>,
}

/// Element of the free associative algebra.
pub type Poly = LinComb<Word>;
/// Element of the double-free module over the free algebra.
pub type ModElement = LinComb<ModMonomial>;

impl<M: Monomial> Default for LinComb<M> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<M: Monomial> LinComb<M> {
    pub fn zero() -> Self {
        LinComb {
            terms: BTreeMap::new(),
        }
    }

    pub fn monomial(m: M) -> Self {
        Self::term(Scalar::one(), m)
    }

    pub fn term(c: Scalar, m: M) -> Self {
        let mut p = Self::zero();
        p.add_term(m, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Scalar, M)>) -> Self {
        let mut p = Self::zero();
        for (c, m) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> btree_map::Iter<'_, M, Scalar> {
        self.terms.iter()
    }

    pub fn monomials(&self) -> impl DoubleEndedIterator<Item = &M> {
        self.terms.keys()
    }

    pub fn coeff(&self, m: &M) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn leading_monomial(&self) -> Option<&M> {
        self.terms.keys().next_back()
    }

    /// The greatest monomial together with its coefficient.
    pub fn leading_term(&self) -> Result<(&M, &Scalar)> {
        self.terms.iter().next_back().ok_or(Error::ZeroElement)
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.terms.values().next_back(), Some(c) if c.is_one())
    }

    /// Divides by the leading coefficient.
    pub fn make_monic(&self) -> Result<Self> {
        let (_, c) = self.leading_term()?;
        if c.is_one() {
            return Ok(self.clone());
        }
        let inv = c.recip();
        Ok(self.scale(&inv))
    }

    /// Maximum degree of a monomial; 0 for the zero element.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub(crate) fn add_term(&mut self, m: M, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c · other`
    pub(crate) fn add_scaled(&mut self, other: &Self, c: &Scalar) {
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    pub(crate) fn pop_leading(&mut self) -> Option<(M, Scalar)> {
        self.terms.pop_last()
    }

    pub(crate) fn insert_raw(&mut self, m: M, c: Scalar) {
        debug_assert!(!c.is_zero());
        self.terms.insert(m, c);
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LinComb {
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    /// `a · self` for a word `a`.
    pub fn left_mul_word(&self, a: &Word) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.left_mul(a), c.clone()))
                .collect(),
        }
    }

    pub fn check(&self, sig: &Signature) -> Result<()> {
        self.terms.keys().try_for_each(|m| m.check(sig))
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> LinCombDisplay<'a, M> {
        LinCombDisplay { value: self, sig }
    }
}

impl Poly {
    pub fn constant(c: Scalar) -> Self {
        Self::term(c, Word::empty())
    }

    pub fn one() -> Self {
        Self::monomial(Word::empty())
    }

    pub fn var(letter: u32) -> Self {
        Self::monomial(Word::letter(letter))
    }

    /// `left · self · right` for words.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Self {
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.sandwich(left, right), c.clone()))
                .collect(),
        }
    }

    /// `self · y` as a module element.
    pub fn apply_to(&self, gen: Gen) -> ModElement {
        LinComb {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (ModMonomial::new(w.clone(), gen), c.clone()))
                .collect(),
        }
    }

    pub fn check_alphabet(&self, alphabet: &Alphabet) -> Result<()> {
        self.terms.keys().try_for_each(|w| w.check(alphabet))
    }
}

impl ModElement {
    pub fn gen(gen: Gen) -> Self {
        Self::monomial(ModMonomial::gen(gen))
    }
}

/// Left action of the free algebra on the double-free module, extended
/// bilinearly: `u · (u′y) = (uu′)y`.
pub fn act(f: &Poly, m: &ModElement) -> ModElement {
    let mut out = ModElement::zero();
    for (u, c) in f.terms() {
        for (mm, d) in m.terms() {
            out.add_term(mm.left_mul(u), c * d);
        }
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Subtract,
    Multiply,
}

/// Ring operation with the operands' letters validated against `alphabet`.
pub fn poly_arith(f: &Poly, g: &Poly, op: ArithOp, alphabet: &Alphabet) -> Result<Poly> {
    f.check_alphabet(alphabet)?;
    g.check_alphabet(alphabet)?;
    Ok(match op {
        ArithOp::Add => f + g,
        ArithOp::Subtract => f - g,
        ArithOp::Multiply => f * g,
    })
}

/// `act` with both operands validated against `sig`.
pub fn act_checked(f: &Poly, m: &ModElement, sig: &Signature) -> Result<ModElement> {
    f.check_alphabet(&sig.algebra)?;
    m.check(sig)?;
    Ok(act(f, m))
}

impl<M: Monomial> Add for &LinComb<M> {
    type Output = LinComb<M>;
    fn add(self, rhs: &LinComb<M>) -> LinComb<M> {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl<M: Monomial> Sub for &LinComb<M> {
    type Output = LinComb<M>;
    fn sub(self, rhs: &LinComb<M>) -> LinComb<M> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-Scalar::one());
        out
    }
}

impl<M: Monomial> Add for LinComb<M> {
    type Output = LinComb<M>;
    fn add(self, rhs: LinComb<M>) -> LinComb<M> {
        &self + &rhs
    }
}

impl<M: Monomial> Sub for LinComb<M> {
    type Output = LinComb<M>;
    fn sub(self, rhs: LinComb<M>) -> LinComb<M> {
        &self - &rhs
    }
}

impl<M: Monomial> Neg for &LinComb<M> {
    type Output = LinComb<M>;
    fn neg(self) -> LinComb<M> {
        self.scale(&-Scalar::one())
    }
}

impl<M: Monomial> Neg for LinComb<M> {
    type Output = LinComb<M>;
    fn neg(self) -> LinComb<M> {
        -&self
    }
}

impl<M: Monomial> Mul<&Scalar> for &LinComb<M> {
    type Output = LinComb<M>;
    fn mul(self, rhs: &Scalar) -> LinComb<M> {
        self.scale(rhs)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (u, c) in self.terms() {
            for (v, d) in rhs.terms() {
                out.add_term(u.concat(v), c * d);
            }
        }
        out
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

pub struct LinCombDisplay<'a, M: Monomial> {
    value: &'a LinComb<M>,
    sig: &'a Signature,
}

struct MonoWith<'a, M: Monomial>(&'a M, &'a Signature);

impl<M: Monomial> fmt::Display for MonoWith<'_, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(self.1, f)
    }
}

/// Terms from greatest to smallest, each written `c*monomial`; the empty
/// algebra word is written as the bare coefficient.
impl<M: Monomial> fmt::Display for LinCombDisplay<'_, M> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.value.terms.iter().rev().enumerate() {
            let sign = if c.is_negative() { "-" } else { "+" };
            match (i, sign) {
                (0, "-") => f.write_str("-")?,
                (0, _) => {}
                _ => write!(f, " {sign} ")?,
            }
            let a = abs(c);
            let bare_constant = m.degree() == 0 && self.sig.module.is_empty();
            if bare_constant {
                write!(f, "{}", ScalarDisplay(&a))?;
            } else {
                write!(f, "{}*{}", ScalarDisplay(&a), MonoWith(m, self.sig))?;
            }
        }
        Ok(())
    }
}
