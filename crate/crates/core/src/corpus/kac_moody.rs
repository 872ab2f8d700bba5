//! Kac–Moody algebras from symmetrizable Cartan matrices, and their Verma
//! modules.

use crate::alphabet::Alphabet;
use crate::engine::{complete_algebra, CheckMode, CompletionStatus};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::presentation::{AlgebraPresentation, ModulePresentation};
use crate::scalar::{binomial, int, Scalar};
use crate::word::Word;
use num::{Integer, Signed, ToPrimitive, Zero};

/// A symmetrizable generalized Cartan matrix with its symmetrizer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CartanData {
    a: Vec<Vec<i64>>,
    d: Vec<i64>,
}

impl CartanData {
    pub fn new(a: Vec<Vec<i64>>, d: Vec<i64>) -> Result<Self> {
        let n = a.len();
        let bad = |m: String| Err(Error::InvalidCartan(m));
        if n == 0 {
            return bad("empty matrix".into());
        }
        if a.iter().any(|r| r.len() != n) {
            return bad("matrix is not square".into());
        }
        if d.len() != n || d.iter().any(|&x| x <= 0) {
            return bad("symmetrizer needs one positive entry per row".into());
        }
        for i in 0..n {
            if a[i][i] != 2 {
                return bad(format!("a[{i}][{i}] = {}, expected 2", a[i][i]));
            }
            for j in 0..n {
                if i == j {
                    continue;
                }
                if a[i][j] > 0 {
                    return bad(format!("a[{i}][{j}] = {} is positive", a[i][j]));
                }
                if (a[i][j] == 0) != (a[j][i] == 0) {
                    return bad(format!("a[{i}][{j}] and a[{j}][{i}] vanish asymmetrically"));
                }
                if d[i] * a[i][j] != d[j] * a[j][i] {
                    return bad(format!("diag(d)·A is not symmetric at ({i}, {j})"));
                }
            }
        }
        Ok(CartanData { a, d })
    }

    /// Finds the smallest positive integer symmetrizer.
    pub fn symmetrizable(a: Vec<Vec<i64>>) -> Result<Self> {
        let n = a.len();
        if a.iter().any(|r| r.len() != n) {
            return Err(Error::InvalidCartan("matrix is not square".into()));
        }
        let mut d: Vec<Option<Scalar>> = vec![None; n];
        for root in 0..n {
            if d[root].is_some() {
                continue;
            }
            d[root] = Some(int(1));
            let mut stack = vec![root];
            while let Some(i) = stack.pop() {
                for j in 0..n {
                    if i != j && a[j][i] != 0 && a[i][j] != 0 && d[j].is_none() {
                        // d_j a_ji = d_i a_ij
                        d[j] = Some(d[i].clone().unwrap() * int(a[i][j]) / int(a[j][i]));
                        stack.push(j);
                    }
                }
            }
        }
        let d: Vec<Scalar> = d.into_iter().map(Option::unwrap).collect();
        let lcm = d
            .iter()
            .fold(num::BigInt::from(1), |acc, x| acc.lcm(x.denom()));
        let ints: Vec<num::BigInt> = d
            .iter()
            .map(|x| (x * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        let g = ints.iter().fold(num::BigInt::zero(), |acc, x| acc.gcd(x));
        let d = ints
            .iter()
            .map(|x| {
                (x / &g)
                    .abs()
                    .to_i64()
                    .ok_or_else(|| Error::InvalidCartan("symmetrizer overflow".into()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(a, d)
    }

    /// Finite types `A1`–`A4`, `B2`, `C2`, `G2`.
    pub fn of_type(name: &str) -> Result<Self> {
        let a = match name {
            "A1" => vec![vec![2]],
            "A2" => vec![vec![2, -1], vec![-1, 2]],
            "A3" => vec![vec![2, -1, 0], vec![-1, 2, -1], vec![0, -1, 2]],
            "A4" => vec![
                vec![2, -1, 0, 0],
                vec![-1, 2, -1, 0],
                vec![0, -1, 2, -1],
                vec![0, 0, -1, 2],
            ],
            "B2" => vec![vec![2, -2], vec![-1, 2]],
            "C2" => vec![vec![2, -1], vec![-2, 2]],
            "G2" => vec![vec![2, -1], vec![-3, 2]],
            _ => return Err(Error::InvalidCartan(format!("unknown type `{name}`"))),
        };
        Self::symmetrizable(a)
    }

    pub fn rank(&self) -> usize {
        self.a.len()
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.a
    }

    pub fn symmetrizer(&self) -> &[i64] {
        &self.d
    }

    /// Letter of `x_i`, 1-based `i`. Greater indices are greater letters.
    pub fn x(&self, i: usize) -> u32 {
        (self.rank() - i) as u32
    }

    pub fn h(&self, i: usize) -> u32 {
        (2 * self.rank() - i) as u32
    }

    pub fn y(&self, i: usize) -> u32 {
        (3 * self.rank() - i) as u32
    }

    /// `x_n > … > x_1 > h_n > … > h_1 > y_n > … > y_1`.
    pub fn alphabet(&self) -> Alphabet {
        let n = self.rank();
        let names = ["x", "h", "y"]
            .iter()
            .flat_map(|p| (1..=n).rev().map(move |i| format!("{p}{i}")));
        Alphabet::algebra(names).unwrap()
    }

    /// `Σ_ν (−1)^ν C(1−a_ij, ν) e_i^{1−a_ij−ν} e_j e_i^ν` over letters `e`.
    fn serre(&self, i: usize, j: usize, e: impl Fn(usize) -> u32) -> Poly {
        let k = (1 - self.a[i - 1][j - 1]) as usize;
        let mut out = Poly::zero();
        for nu in 0..=k {
            let w = Word::power(e(i), k - nu)
                .concat(&Word::letter(e(j)))
                .concat(&Word::power(e(i), nu));
            let c = binomial(k as u32, nu as u32) * int(if nu % 2 == 0 { 1 } else { -1 });
            out = &out + &Poly::term(c, w);
        }
        out
    }
}

fn commutator(a: u32, b: u32) -> Poly {
    &Poly::monomial(Word::new([a, b])) - &Poly::monomial(Word::new([b, a]))
}

/// Commutation of the Cartan part, the Cartan action, `[x_i, y_j]` and
/// the Serre elements for both halves, without completion.
pub fn kac_moody_presentation(c: &CartanData) -> AlgebraPresentation {
    let n = c.rank();
    let mut rels = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            rels.push(commutator(c.h(i), c.h(j)));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let coef = int(c.d[i - 1] * c.a[i - 1][j - 1]);
            rels.push(
                &commutator(c.x(j), c.h(i)) + &Poly::term(coef.clone(), Word::letter(c.x(j))),
            );
            rels.push(&commutator(c.h(i), c.y(j)) + &Poly::term(coef, Word::letter(c.y(j))));
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            let mut r = commutator(c.x(i), c.y(j));
            if i == j {
                r = &r - &Poly::var(c.h(i));
            }
            rels.push(r);
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                rels.push(c.serre(i, j, |k| c.x(k)));
            }
        }
    }
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                rels.push(c.serre(i, j, |k| c.y(k)));
            }
        }
    }
    AlgebraPresentation::new(c.alphabet(), rels).expect("Kac–Moody relations are well formed")
}

/// The algebra on `y_n > … > y_1` with the Serre relations alone.
pub fn negative_part(c: &CartanData) -> AlgebraPresentation {
    let n = c.rank();
    let names: Vec<String> = (1..=n).rev().map(|i| format!("y{i}")).collect();
    let letter = |i: usize| (n - i) as u32;
    let mut rels = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                rels.push(c.serre(i, j, letter));
            }
        }
    }
    AlgebraPresentation::new(Alphabet::algebra(names).unwrap(), rels)
        .expect("Serre relations are well formed")
}

/// The Verma module of highest weight `Λ(h_i) = weights[i−1]`, with the
/// algebra part completed up to `completion_cap`.
pub fn verma_presentation(
    c: &CartanData,
    weights: &[Scalar],
    completion_cap: usize,
    step_cap: usize,
) -> Result<ModulePresentation> {
    let n = c.rank();
    if weights.len() != n {
        return Err(Error::InvalidCartan(format!(
            "{} weights for rank {n}",
            weights.len()
        )));
    }
    let km = kac_moody_presentation(c);
    let done = complete_algebra(km.relations(), CheckMode::Algebra, completion_cap, step_cap)?;
    if done.status != CompletionStatus::Closed {
        return Err(Error::CompletionNotClosed(format!(
            "{} at degree cap {completion_cap}",
            done.status.name()
        )));
    }
    let algebra = AlgebraPresentation::new(km.alphabet().clone(), done.rules)?;
    let mut t = Vec::new();
    for i in 1..=n {
        t.push(Poly::var(c.x(i)).apply_to(0));
    }
    for i in 1..=n {
        t.push((&Poly::var(c.h(i)) - &Poly::constant(weights[i - 1].clone())).apply_to(0));
    }
    ModulePresentation::new(algebra, Alphabet::module(["v"]).unwrap(), t)
}
