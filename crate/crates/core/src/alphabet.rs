//! Ordered generator sets.
//!
//! The position of a symbol in its alphabet fixes the generator order:
//! earlier symbols are greater. `x > h > y` is the alphabet `[x, h, y]`.

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Role {
    /// Generators of the free algebra (the letters of words).
    Algebra,
    /// Free generators of a double-free module.
    Module,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
    role: Role,
}

impl Alphabet {
    pub fn new<S: Into<String>>(symbols: impl IntoIterator<Item = S>, role: Role) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() {
                return Err(Error::EmptySymbol);
            }
            if symbols[..i].contains(s) {
                return Err(Error::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Alphabet { symbols, role })
    }

    pub fn algebra<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new(symbols, Role::Algebra)
    }

    pub fn module<S: Into<String>>(symbols: impl IntoIterator<Item = S>) -> Result<Self> {
        Self::new(symbols, Role::Module)
    }

    pub fn empty(role: Role) -> Self {
        Alphabet {
            symbols: Vec::new(),
            role,
        }
    }

    pub fn role(&self) -> Role {
        self.role
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn name(&self, index: u32) -> &str {
        &self.symbols[index as usize]
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.symbols
            .iter()
            .position(|s| s == name)
            .map(|i| i as u32)
    }

    pub fn check_letter(&self, letter: u32) -> Result<()> {
        if (letter as usize) < self.symbols.len() {
            Ok(())
        } else {
            Err(Error::AlphabetMismatch {
                letter,
                size: self.symbols.len(),
            })
        }
    }
}

/// The pair of alphabets an element lives over; used for printing and
/// range validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Signature {
    pub algebra: Alphabet,
    pub module: Alphabet,
}

impl Signature {
    pub fn new(algebra: Alphabet, module: Alphabet) -> Self {
        Signature { algebra, module }
    }

    pub fn algebra_only(algebra: Alphabet) -> Self {
        Signature {
            algebra,
            module: Alphabet::empty(Role::Module),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty_names() {
        assert_eq!(
            Alphabet::algebra(["x", "h", "x"]),
            Err(Error::DuplicateSymbol("x".into()))
        );
        assert_eq!(Alphabet::algebra(["x", ""]), Err(Error::EmptySymbol));
        let a = Alphabet::algebra(["x", "h", "y"]).unwrap();
        assert_eq!(a.index_of("h"), Some(1));
        assert!(a.check_letter(3).is_err());
    }
}
