//! The line-oriented presentation format and the expression grammar.
//!
//! ```text
//! # sl2, highest weight 3
//! algebra-generators: x > h > y
//! module-generators: v0
//! order: deglex
//! relation: [h,x] - 2*x
//! module-relation: h*v0 - 3*v0
//! ```
//!
//! Expressions are sums of products of generators, rational literals,
//! parenthesized expressions, Lie brackets `[a, b]` and powers `e^k`; an
//! optional `lhs = rhs` stands for `lhs - rhs`.

use crate::alphabet::{Alphabet, Signature};
use crate::error::{Error, Result};
use crate::poly::{ModElement, Poly};
use crate::presentation::{AlgebraPresentation, ModulePresentation, Presentation};
use crate::scalar::Scalar;
use crate::word::{ModMonomial, Word};
use num::{BigInt, One, Zero};
use std::fmt::Write as _;

/// A parsed expression: an algebra element or a module element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    Algebra(Poly),
    Module(ModElement),
}

const GREEK: &[&str] = &[
    "alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta", "iota", "kappa",
    "lambda", "mu", "nu", "xi", "omicron", "pi", "rho", "sigma", "tau", "upsilon", "phi", "chi",
    "psi", "omega",
];

/// Greek letters and their spelled names read as scalar parameters.
fn looks_symbolic(name: &str) -> bool {
    let lower = name.to_lowercase();
    GREEK.contains(&lower.as_str()) || name.chars().any(|c| ('\u{0370}'..='\u{03ff}').contains(&c))
}

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
}

struct Lexer {
    toks: Vec<(Tok, usize)>,
}

fn lex(src: &str, line: usize, col0: usize) -> Result<Lexer> {
    let chars: Vec<char> = src.chars().collect();
    let mut toks = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let s: String = chars[start..i].iter().collect();
            toks.push((Tok::Num(s.parse().unwrap()), col));
        } else if c.is_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            toks.push((Tok::Ident(chars[start..i].iter().collect()), col));
        } else if "+-*/^()[],=".contains(c) {
            toks.push((Tok::Sym(c), col));
            i += 1;
        } else {
            return Err(Error::Syntax {
                line,
                column: col,
                message: format!("unexpected character `{c}`"),
            });
        }
    }
    Ok(Lexer { toks })
}

/// Polynomials over the algebra letters followed by the module letters.
struct Parser<'a> {
    toks: Vec<(Tok, usize)>,
    pos: usize,
    line: usize,
    end_col: usize,
    sig: &'a Signature,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.0)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |t| t.1)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T> {
        Err(Error::Syntax {
            line: self.line,
            column: self.col(),
            message: message.into(),
        })
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(&Tok::Sym(c)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.eat(c) {
            Ok(())
        } else {
            self.err(format!("expected `{c}`"))
        }
    }

    fn equation(&mut self) -> Result<Poly> {
        let lhs = self.expr()?;
        let out = if self.eat('=') {
            &lhs - &self.expr()?
        } else {
            lhs
        };
        if self.pos < self.toks.len() {
            return self.err("unexpected input after expression");
        }
        Ok(out)
    }

    fn expr(&mut self) -> Result<Poly> {
        let mut acc = Poly::zero();
        let mut sign = if self.eat('-') {
            -Scalar::one()
        } else {
            self.eat('+');
            Scalar::one()
        };
        loop {
            let t = self.term()?;
            acc = &acc + &t.scale(&sign);
            if self.eat('+') {
                sign = Scalar::one();
            } else if self.eat('-') {
                sign = -Scalar::one();
            } else {
                return Ok(acc);
            }
        }
    }

    fn term(&mut self) -> Result<Poly> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let col = self.col();
                let d = match self.peek() {
                    Some(Tok::Num(n)) => n.clone(),
                    _ => return self.err("expected an integer divisor"),
                };
                self.pos += 1;
                if d.is_zero() {
                    return Err(Error::Syntax {
                        line: self.line,
                        column: col,
                        message: "division by zero".into(),
                    });
                }
                acc = acc.scale(&Scalar::new(BigInt::one(), d));
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<Poly> {
        let base = self.primary()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let k = match self.peek() {
            Some(Tok::Num(n)) => n.clone(),
            _ => return self.err("expected an exponent"),
        };
        let k: u32 = match k.try_into() {
            Ok(k) if k <= 64 => k,
            _ => return self.err("exponent too large"),
        };
        self.pos += 1;
        let mut out = Poly::one();
        for _ in 0..k {
            out = &out * &base;
        }
        Ok(out)
    }

    fn primary(&mut self) -> Result<Poly> {
        let col = self.col();
        match self.peek().cloned() {
            Some(Tok::Num(n)) => {
                self.pos += 1;
                Ok(Poly::constant(Scalar::from_integer(n)))
            }
            Some(Tok::Ident(name)) => {
                self.pos += 1;
                let n_alg = self.sig.algebra.len() as u32;
                if let Some(l) = self.sig.algebra.index_of(&name) {
                    Ok(Poly::var(l))
                } else if let Some(g) = self.sig.module.index_of(&name) {
                    Ok(Poly::var(n_alg + g))
                } else if looks_symbolic(&name) {
                    Err(Error::SymbolicCoefficient {
                        line: self.line,
                        column: col,
                        name,
                    })
                } else {
                    Err(Error::UndeclaredGenerator {
                        line: self.line,
                        column: col,
                        name,
                    })
                }
            }
            Some(Tok::Sym('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                self.expect(')')?;
                Ok(e)
            }
            Some(Tok::Sym('[')) => {
                self.pos += 1;
                let a = self.expr()?;
                self.expect(',')?;
                let b = self.expr()?;
                self.expect(']')?;
                Ok(&(&a * &b) - &(&b * &a))
            }
            _ => self.err("expected a generator, number, `(` or `[`"),
        }
    }
}

/// Splits a combined polynomial into an algebra or module element.
fn classify(p: Poly, sig: &Signature, line: usize, column: usize) -> Result<Expr> {
    let n_alg = sig.algebra.len() as u32;
    let is_mod = |l: &u32| *l >= n_alg;
    if p.monomials().all(|m| !m.letters().iter().any(is_mod)) {
        return Ok(Expr::Algebra(p));
    }
    let mut terms = Vec::new();
    for (m, c) in p.terms() {
        let letters = m.letters();
        let ok = letters.last().is_some_and(is_mod)
            && letters[..letters.len() - 1].iter().all(|l| !is_mod(l));
        if !ok {
            let message = "each term of a module element needs exactly one module generator, as its last factor";
            return Err(Error::Syntax {
                line,
                column,
                message: message.into(),
            });
        }
        let (gen, word) = letters.split_last().unwrap();
        terms.push((
            c.clone(),
            ModMonomial::new(Word::new(word.to_vec()), gen - n_alg),
        ));
    }
    Ok(Expr::Module(ModElement::from_terms(terms)))
}

fn parse_at(src: &str, sig: &Signature, line: usize, col0: usize) -> Result<Expr> {
    let lexer = lex(src, line, col0)?;
    let end_col = col0 + src.chars().count();
    let mut parser = Parser {
        toks: lexer.toks,
        pos: 0,
        line,
        end_col,
        sig,
    };
    if parser.toks.is_empty() {
        return parser.err("empty expression");
    }
    let p = parser.equation()?;
    classify(p, sig, line, col0)
}

/// Parses one expression against the generators of `sig`.
pub fn parse_expr(src: &str, sig: &Signature) -> Result<Expr> {
    parse_at(src, sig, 1, 1)
}

fn generator_list(value: &str, line: usize, col0: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut col = col0;
    for part in value.split('>') {
        let name = part.trim();
        let lead = part.len() - part.trim_start().len();
        let valid = name
            .chars()
            .next()
            .is_some_and(|c| c.is_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_alphanumeric() || c == '_');
        if !valid {
            let message = format!("invalid generator name `{name}`");
            return Err(Error::Syntax {
                line,
                column: col + lead,
                message,
            });
        }
        out.push(name.to_string());
        col += part.chars().count() + 1;
    }
    Ok(out)
}

/// Parses a presentation file; module sections make it a module
/// presentation.
pub fn parse_presentation(text: &str) -> Result<Presentation> {
    let mut algebra: Option<Alphabet> = None;
    let mut module: Option<Alphabet> = None;
    let mut relations = Vec::new();
    let mut module_relations = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap();
        if content.trim().is_empty() {
            continue;
        }
        let Some((key, value)) = content.split_once(':') else {
            return Err(Error::Syntax {
                line,
                column: 1,
                message: "expected `key: value`".into(),
            });
        };
        let col0 = key.chars().count() + 2;
        let sig = || {
            let a = algebra
                .clone()
                .unwrap_or_else(|| Alphabet::empty(crate::alphabet::Role::Algebra));
            let m = module
                .clone()
                .unwrap_or_else(|| Alphabet::empty(crate::alphabet::Role::Module));
            Signature::new(a, m)
        };
        let dup = |what: &str| Error::Presentation {
            line,
            message: format!("{what} declared twice"),
        };
        match key.trim() {
            "algebra-generators" => {
                if algebra.is_some() {
                    return Err(dup("algebra generators"));
                }
                let names = generator_list(value, line, col0)?;
                algebra = Some(Alphabet::algebra(names).map_err(|e| Error::Presentation {
                    line,
                    message: e.to_string(),
                })?);
            }
            "module-generators" => {
                if module.is_some() {
                    return Err(dup("module generators"));
                }
                let names = generator_list(value, line, col0)?;
                module = Some(Alphabet::module(names).map_err(|e| Error::Presentation {
                    line,
                    message: e.to_string(),
                })?);
            }
            "order" => {
                if value.trim() != "deglex" {
                    let message = format!("unsupported order `{}`", value.trim());
                    return Err(Error::Presentation { line, message });
                }
            }
            "relation" => match parse_at(value, &sig(), line, col0)? {
                Expr::Algebra(p) if p.is_zero() => {
                    return Err(Error::Presentation {
                        line,
                        message: "zero relation".into(),
                    })
                }
                Expr::Algebra(p) => relations.push(p),
                Expr::Module(_) => {
                    let message =
                        "relation mentions a module generator; use module-relation".into();
                    return Err(Error::Presentation { line, message });
                }
            },
            "module-relation" => {
                if module.is_none() {
                    let message = "module-relation before module-generators".into();
                    return Err(Error::Presentation { line, message });
                }
                match parse_at(value, &sig(), line, col0)? {
                    Expr::Module(m) => module_relations.push(m),
                    Expr::Algebra(p) if p.is_zero() => {
                        return Err(Error::Presentation {
                            line,
                            message: "zero relation".into(),
                        })
                    }
                    Expr::Algebra(_) => {
                        let message = "module relation without a module generator".into();
                        return Err(Error::Presentation { line, message });
                    }
                }
            }
            other => {
                return Err(Error::Presentation {
                    line,
                    message: format!("unknown key `{other}`"),
                });
            }
        }
    }
    let algebra = algebra.ok_or(Error::Presentation {
        line: 0,
        message: "missing algebra-generators".into(),
    })?;
    let alg = AlgebraPresentation::new(algebra, relations)?;
    Ok(match module {
        None => alg.into(),
        Some(m) => ModulePresentation::new(alg, m, module_relations)?.into(),
    })
}

/// Writes a presentation in the file format; parsing the output gives the
/// same presentation.
pub fn emit_presentation(p: &Presentation) -> String {
    let sig = p.signature();
    let mut out = String::new();
    writeln!(
        out,
        "algebra-generators: {}",
        sig.algebra.symbols().join(" > ")
    )
    .unwrap();
    if let Some(m) = p.as_module() {
        writeln!(
            out,
            "module-generators: {}",
            m.module_alphabet().symbols().join(" > ")
        )
        .unwrap();
    }
    writeln!(out, "order: deglex").unwrap();
    for r in p.algebra().relations() {
        writeln!(
            out,
            "relation: {}",
            r.display(&Signature::algebra_only(sig.algebra.clone()))
        )
        .unwrap();
    }
    if let Some(m) = p.as_module() {
        for r in m.module_relations() {
            writeln!(out, "module-relation: {}", r.display(&sig)).unwrap();
        }
    }
    out
}
