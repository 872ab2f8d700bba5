//! Words of the free monoid and module monomials `u·y`.

use crate::alphabet::{Alphabet, Signature};
use crate::error::Result;
use std::cmp::Ordering;
use std::fmt;
use std::ops::Mul;

/// A word over an algebra alphabet, stored as letter indices.
///
/// `Ord` is the deg-lex order: longer words are greater, equal lengths
/// compare lexicographically with lower letter indices being greater.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn new(letters: impl Into<Vec<u32>>) -> Self {
        Word(letters.into())
    }

    pub fn letter(letter: u32) -> Self {
        Word(vec![letter])
    }

    pub fn power(letter: u32, exp: usize) -> Self {
        Word(vec![letter; exp])
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.slice(0, len)
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        self.slice(start, self.0.len())
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `left · self · right`
    pub fn sandwich(&self, left: &Word, right: &Word) -> Word {
        let mut v = Vec::with_capacity(left.0.len() + self.0.len() + right.0.len());
        v.extend_from_slice(&left.0);
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&right.0);
        Word(v)
    }

    pub fn push(&mut self, letter: u32) {
        self.0.push(letter);
    }

    /// Position of the leftmost occurrence of `needle` as a subword.
    pub fn find(&self, needle: &Word) -> Option<usize> {
        self.occurrences(needle).next()
    }

    /// All start positions of `needle` in `self`, left to right.
    pub fn occurrences<'a>(&'a self, needle: &'a Word) -> impl Iterator<Item = usize> + 'a {
        let n = needle.0.len();
        let h = self.0.len();
        (0..=h.saturating_sub(n))
            .filter(move |_| n <= h)
            .filter(move |&p| self.0[p..p + n] == needle.0[..])
    }

    pub fn ends_with(&self, suffix: &Word) -> bool {
        self.0.ends_with(&suffix.0)
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.starts_with(&prefix.0)
    }

    pub fn check(&self, alphabet: &Alphabet) -> Result<()> {
        self.0.iter().try_for_each(|&l| alphabet.check_letter(l))
    }

    pub fn display<'a>(&'a self, alphabet: &'a Alphabet) -> WordDisplay<'a> {
        WordDisplay {
            word: self,
            alphabet,
        }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

pub struct WordDisplay<'a> {
    word: &'a Word,
    alphabet: &'a Alphabet,
}

impl fmt::Display for WordDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return f.write_str("1");
        }
        for (i, &l) in self.word.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            f.write_str(self.alphabet.name(l))?;
        }
        Ok(())
    }
}

/// Index of a module generator.
pub type Gen = u32;

/// A monomial `u·y` of a double-free module.
///
/// `Ord` is the order `u₁y₁ ≺ u₂y₂ ⇔ u₁ < u₂ or (u₁ = u₂ and y₁ < y₂)`,
/// module generators being ordered like algebra letters (earlier is greater).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModMonomial {
    pub word: Word,
    pub gen: Gen,
}

impl ModMonomial {
    pub fn new(word: Word, gen: Gen) -> Self {
        ModMonomial { word, gen }
    }

    pub fn gen(gen: Gen) -> Self {
        ModMonomial {
            word: Word::empty(),
            gen,
        }
    }

    pub fn degree(&self) -> usize {
        self.word.degree()
    }

    /// Left action of a word: `a · (u y) = (a u) y`.
    pub fn left_mul(&self, a: &Word) -> ModMonomial {
        ModMonomial {
            word: a.concat(&self.word),
            gen: self.gen,
        }
    }

    pub fn check(&self, sig: &Signature) -> Result<()> {
        self.word.check(&sig.algebra)?;
        sig.module.check_letter(self.gen)
    }

    pub fn display<'a>(&'a self, sig: &'a Signature) -> ModMonomialDisplay<'a> {
        ModMonomialDisplay { mono: self, sig }
    }
}

impl Ord for ModMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .cmp(&other.word)
            .then_with(|| other.gen.cmp(&self.gen))
    }
}

impl PartialOrd for ModMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

pub struct ModMonomialDisplay<'a> {
    mono: &'a ModMonomial,
    sig: &'a Signature,
}

impl fmt::Display for ModMonomialDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &l in self.mono.word.letters() {
            write!(f, "{}*", self.sig.algebra.name(l))?;
        }
        f.write_str(self.sig.module.name(self.mono.gen))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn occurrences_are_left_to_right() {
        let w = Word::new(vec![0, 1, 0, 1, 0]);
        let n = Word::new(vec![0, 1, 0]);
        assert_eq!(w.occurrences(&n).collect::<Vec<_>>(), vec![0, 2]);
        assert_eq!(w.find(&Word::new(vec![1, 1])), None);
        assert_eq!(Word::empty().find(&n), None);
        assert_eq!(w.find(&Word::empty()), Some(0));
    }

    #[test]
    fn display_uses_names() {
        let a = Alphabet::algebra(["x", "h", "y"]).unwrap();
        assert_eq!(Word::new(vec![0, 2]).display(&a).to_string(), "x*y");
        assert_eq!(Word::empty().display(&a).to_string(), "1");
        let sig = Signature::new(a, Alphabet::module(["v0"]).unwrap());
        let m = ModMonomial::new(Word::new(vec![2, 2]), 0);
        assert_eq!(m.display(&sig).to_string(), "y*y*v0");
        assert_eq!(ModMonomial::gen(0).display(&sig).to_string(), "v0");
    }
}
