//! Monomial orders: deg-lex on words and the induced order on module monomials.

use crate::error::{Error, Result};
use crate::word::{Gen, ModMonomial, Word};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::cmp::Ordering;

/// Which order is active and which alphabets it ranges over.
///
/// Only deg-lex ships; the module order compares word parts by deg-lex and
/// breaks ties by the module generator order.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderHandle {
    DegLex { letters: usize },
    Module { letters: usize, gens: usize },
}

impl OrderHandle {
    pub fn deglex(letters: usize) -> Self {
        OrderHandle::DegLex { letters }
    }

    pub fn module(letters: usize, gens: usize) -> Self {
        OrderHandle::Module { letters, gens }
    }

    pub fn letters(&self) -> usize {
        match *self {
            OrderHandle::DegLex { letters } | OrderHandle::Module { letters, .. } => letters,
        }
    }

    fn check_word(&self, w: &Word) -> Result<()> {
        let size = self.letters();
        match w.letters().iter().find(|&&l| l as usize >= size) {
            Some(&letter) => Err(Error::AlphabetMismatch { letter, size }),
            None => Ok(()),
        }
    }
}

/// Length first, then lexicographic by generator order.
pub fn deglex_compare(u: &Word, v: &Word, ord: &OrderHandle) -> Result<Ordering> {
    ord.check_word(u)?;
    ord.check_word(v)?;
    Ok(u.cmp(v))
}

/// `u₁y₁ ≺ u₂y₂ ⇔ u₁ < u₂ or (u₁ = u₂ and y₁ < y₂)`.
pub fn module_compare(a: &ModMonomial, b: &ModMonomial, ord: &OrderHandle) -> Result<Ordering> {
    let OrderHandle::Module { gens, .. } = *ord else {
        return Err(Error::IncompatibleMode {
            mode: "module order",
            shape: "word-only",
        });
    };
    ord.check_word(&a.word)?;
    ord.check_word(&b.word)?;
    for g in [a.gen, b.gen] {
        if g as usize >= gens {
            return Err(Error::AlphabetMismatch {
                letter: g,
                size: gens,
            });
        }
    }
    Ok(a.cmp(b))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Counterexample {
    pub property: &'static str,
    pub witnesses: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct OrderReport {
    pub samples: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl OrderReport {
    pub fn is_ok(&self) -> bool {
        self.counterexamples.is_empty()
    }

    fn fail(&mut self, property: &'static str, witnesses: Vec<String>) {
        // one witness per property is enough to diagnose
        if self.counterexamples.iter().all(|c| c.property != property) {
            self.counterexamples.push(Counterexample {
                property,
                witnesses,
            });
        }
    }
}

/// Sampling parameters shared by the validators.
#[derive(Debug, Clone, Copy)]
pub struct Sampling {
    pub budget: usize,
    pub max_len: usize,
    pub seed: u64,
}

impl Sampling {
    pub fn new(budget: usize) -> Self {
        Sampling {
            budget,
            max_len: 4,
            seed: 0x5eed,
        }
    }
}

fn random_word(rng: &mut ChaCha8Rng, letters: usize, max_len: usize, min_len: usize) -> Word {
    let len = rng.gen_range(min_len..=max_len.max(min_len));
    Word::new(
        (0..len)
            .map(|_| rng.gen_range(0..letters as u32))
            .collect::<Vec<_>>(),
    )
}

fn fmt_word(w: &Word) -> String {
    format!("{:?}", w.letters())
}

/// Checks a word comparator for being a total, left and right compatible
/// order on sampled words.
pub fn validate_word_order(
    cmp: impl Fn(&Word, &Word) -> Ordering,
    letters: usize,
    sampling: Sampling,
) -> OrderReport {
    let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
    let mut report = OrderReport::default();
    if letters == 0 {
        return report;
    }
    for _ in 0..sampling.budget {
        let u = random_word(&mut rng, letters, sampling.max_len, 0);
        // bias v towards u's length so ties get exercised
        let v = if rng.gen_bool(0.5) {
            random_word(&mut rng, letters, u.degree(), u.degree())
        } else {
            random_word(&mut rng, letters, sampling.max_len, 0)
        };
        let w = random_word(&mut rng, letters, sampling.max_len, 0);
        let a = random_word(&mut rng, letters, 2, 1);
        report.samples += 1;

        let uv = cmp(&u, &v);
        if (uv == Ordering::Equal) != (u == v) || cmp(&u, &u) != Ordering::Equal {
            report.fail("totality", vec![fmt_word(&u), fmt_word(&v)]);
        }
        if uv != cmp(&v, &u).reverse() {
            report.fail("antisymmetry", vec![fmt_word(&u), fmt_word(&v)]);
        }
        let vw = cmp(&v, &w);
        if uv == vw && uv != Ordering::Equal && cmp(&u, &w) != uv {
            report.fail(
                "transitivity",
                vec![fmt_word(&u), fmt_word(&v), fmt_word(&w)],
            );
        }
        if uv != Ordering::Equal {
            if cmp(&a.concat(&u), &a.concat(&v)) != uv {
                report.fail(
                    "left compatibility",
                    vec![fmt_word(&a), fmt_word(&u), fmt_word(&v)],
                );
            }
            if cmp(&u.concat(&a), &v.concat(&a)) != uv {
                report.fail(
                    "right compatibility",
                    vec![fmt_word(&u), fmt_word(&v), fmt_word(&a)],
                );
            }
        }
    }
    report
}

/// Checks a module-monomial comparator for totality and left compatibility
/// (`w ≺ w′ ⇒ aw ≺ aw′`).
pub fn validate_module_order(
    cmp: impl Fn(&ModMonomial, &ModMonomial) -> Ordering,
    letters: usize,
    gens: usize,
    sampling: Sampling,
) -> OrderReport {
    let mut rng = ChaCha8Rng::seed_from_u64(sampling.seed);
    let mut report = OrderReport::default();
    if letters == 0 || gens == 0 {
        return report;
    }
    let fmt = |m: &ModMonomial| format!("{:?}.{}", m.word.letters(), m.gen);
    for _ in 0..sampling.budget {
        let gen = |rng: &mut ChaCha8Rng| rng.gen_range(0..gens as Gen);
        let u = ModMonomial::new(
            random_word(&mut rng, letters, sampling.max_len, 0),
            gen(&mut rng),
        );
        let v = if rng.gen_bool(0.5) {
            let d = u.degree();
            ModMonomial::new(random_word(&mut rng, letters, d, d), gen(&mut rng))
        } else {
            ModMonomial::new(
                random_word(&mut rng, letters, sampling.max_len, 0),
                gen(&mut rng),
            )
        };
        let w = ModMonomial::new(
            random_word(&mut rng, letters, sampling.max_len, 0),
            gen(&mut rng),
        );
        let a = random_word(&mut rng, letters, 2, 1);
        report.samples += 1;

        let uv = cmp(&u, &v);
        if (uv == Ordering::Equal) != (u == v) {
            report.fail("totality", vec![fmt(&u), fmt(&v)]);
        }
        if uv != cmp(&v, &u).reverse() {
            report.fail("antisymmetry", vec![fmt(&u), fmt(&v)]);
        }
        let vw = cmp(&v, &w);
        if uv == vw && uv != Ordering::Equal && cmp(&u, &w) != uv {
            report.fail("transitivity", vec![fmt(&u), fmt(&v), fmt(&w)]);
        }
        if uv != Ordering::Equal && cmp(&u.left_mul(&a), &v.left_mul(&a)) != uv {
            report.fail("left compatibility", vec![fmt_word(&a), fmt(&u), fmt(&v)]);
        }
    }
    report
}

/// Validates the built-in comparator selected by `ord`.
pub fn validate_order(ord: &OrderHandle, budget: usize) -> OrderReport {
    let sampling = Sampling::new(budget);
    match *ord {
        OrderHandle::DegLex { letters } => validate_word_order(Word::cmp, letters, sampling),
        OrderHandle::Module { letters, gens } => {
            validate_module_order(ModMonomial::cmp, letters, gens, sampling)
        }
    }
}
