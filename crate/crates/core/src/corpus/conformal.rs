//! Truncated coefficient algebras of free Lie conformal algebras with
//! constant locality, and their Verma modules.

use crate::alphabet::Alphabet;
use crate::error::{Error, Result};
use crate::lie::LieExpr;
use crate::poly::Poly;
use crate::presentation::{AlgebraPresentation, ModulePresentation};
use crate::scalar::{binomial, int};
use crate::word::Word;

/// Symbols `B` in ascending order, locality `N`, index window `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConformalConfig {
    symbols: Vec<String>,
    locality: u32,
    lo: i64,
    hi: i64,
}

impl ConformalConfig {
    pub fn new<S: Into<String>>(
        symbols: impl IntoIterator<Item = S>,
        locality: u32,
        lo: i64,
        hi: i64,
    ) -> Result<Self> {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        let bad = |m: &str| Err(Error::InvalidConformal(m.into()));
        if symbols.is_empty() {
            return bad("no symbols");
        }
        if locality == 0 {
            return bad("locality must be positive");
        }
        if lo >= hi {
            return bad("empty window");
        }
        if locality as i64 > hi - lo {
            return bad("window too small for the locality");
        }
        Ok(ConformalConfig {
            symbols,
            locality,
            lo,
            hi,
        })
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }

    pub fn locality(&self) -> u32 {
        self.locality
    }

    pub fn window(&self) -> (i64, i64) {
        (self.lo, self.hi)
    }

    fn width(&self) -> i64 {
        self.hi - self.lo + 1
    }

    /// The letter of `b(n)`; letter 0 is the greatest, `hi` with the last
    /// symbol.
    pub fn letter(&self, symbol: usize, n: i64) -> u32 {
        let k = self.symbols.len() as i64;
        ((self.hi - n) * k + (k - 1 - symbol as i64)) as u32
    }

    /// `(symbol, index)` of a letter.
    pub fn decode(&self, letter: u32) -> (usize, i64) {
        let k = self.symbols.len() as i64;
        let l = letter as i64;
        ((k - 1 - l % k) as usize, self.hi - l / k)
    }

    pub fn name(symbol: &str, n: i64) -> String {
        if n < 0 {
            format!("{symbol}_m{}", -n)
        } else {
            format!("{symbol}_{n}")
        }
    }

    pub fn alphabet(&self) -> Alphabet {
        let k = self.symbols.len();
        let names = (0..self.width() as usize * k).map(|l| {
            let (s, n) = self.decode(l as u32);
            Self::name(&self.symbols[s], n)
        });
        Alphabet::algebra(names).unwrap()
    }

    /// Whether the letters of `w` stay at least `N` away from the window
    /// edges.
    pub fn is_interior(&self, w: &Word) -> bool {
        let n = self.locality as i64;
        w.letters().iter().all(|&l| {
            let (_, i) = self.decode(l);
            self.lo + n <= i && i <= self.hi - n
        })
    }

    /// The leading-word law for a pair `b(n)·a(m)`.
    pub fn is_leading_pair(&self, first: u32, second: u32) -> bool {
        let ((b, n), (a, m)) = (self.decode(first), self.decode(second));
        let big_n = self.locality as i64;
        n - m > big_n || (n - m == big_n && (b > a || (b == a && big_n % 2 == 1)))
    }
}

/// The bound on adjacent letters of a basis word: `n_i − n_{i+1} ≤ N − 1`
/// when `a_i > a_{i+1}` or (`a_i = a_{i+1}` and `N` odd), `≤ N` otherwise.
pub fn satisfies_locality_bound(cfg: &ConformalConfig, w: &Word) -> bool {
    let big_n = cfg.locality as i64;
    w.letters().windows(2).all(|p| {
        let ((a1, n1), (a2, n2)) = (cfg.decode(p[0]), cfg.decode(p[1]));
        let strict = a1 > a2 || (a1 == a2 && big_n % 2 == 1);
        n1 - n2 <= if strict { big_n - 1 } else { big_n }
    })
}

/// `Σ_{s=0}^{N} (−1)^s C(N, s) [b(n−s), a(m+s)]` for every pair of
/// symbols and every `(m, n)` keeping all indices inside the window.
pub fn conformal_presentation(cfg: &ConformalConfig) -> Result<AlgebraPresentation> {
    let big_n = cfg.locality as i64;
    let k = cfg.symbols.len();
    let mut rels: Vec<Poly> = Vec::new();
    for b in 0..k {
        for a in 0..k {
            for n in cfg.lo + big_n..=cfg.hi {
                for m in cfg.lo..=cfg.hi - big_n {
                    let mut e = LieExpr::Sum(Vec::new());
                    for s in 0..=big_n {
                        let c =
                            binomial(cfg.locality, s as u32) * int(if s % 2 == 0 { 1 } else { -1 });
                        let br = LieExpr::bracket(
                            LieExpr::gen(cfg.letter(b, n - s)),
                            LieExpr::gen(cfg.letter(a, m + s)),
                        );
                        e = e + LieExpr::scale(c, br);
                    }
                    let p = e.expand();
                    if !p.is_zero() {
                        rels.push(p);
                    }
                }
            }
        }
    }
    if rels.is_empty() {
        return Err(Error::InvalidConformal(
            "no relation fits the window".into(),
        ));
    }
    AlgebraPresentation::new(cfg.alphabet(), rels)
}

/// The relations above with `b(n)·I = 0` for every in-window `n ≥ 0`.
pub fn conformal_verma(cfg: &ConformalConfig) -> Result<ModulePresentation> {
    let algebra = conformal_presentation(cfg)?;
    let mut t = Vec::new();
    for n in 0.max(cfg.lo)..=cfg.hi {
        for s in 0..cfg.symbols.len() {
            t.push(Poly::var(cfg.letter(s, n)).apply_to(0));
        }
    }
    ModulePresentation::new(algebra, Alphabet::module(["I"]).unwrap(), t)
}
