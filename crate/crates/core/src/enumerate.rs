//! Reduced monomials up to a degree cap, and an independent dimension
//! count by exact row reduction.

use crate::alphabet::Signature;
use crate::engine::{is_gsb, CheckMode};
use crate::error::{Error, Result};
use crate::poly::{LinComb, Monomial, Poly};
use crate::presentation::Presentation;
use crate::rewrite::RuleSet;
use crate::word::{Gen, ModMonomial, Word};
use std::collections::BTreeMap;
use std::fmt::Write as _;

pub const DEFAULT_BUDGET: usize = 20_000;

/// Irreducible monomials grouped by degree `0..=degree_cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisReport<M: Monomial> {
    pub degree_cap: usize,
    /// Ascending within each degree.
    pub words: Vec<Vec<M>>,
    pub oracle: Option<Vec<i64>>,
}

impl<M: Monomial> BasisReport<M> {
    pub fn counts(&self) -> Vec<usize> {
        self.words.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.words.iter().map(Vec::len).sum()
    }

    /// `Some(true)` when oracle counts were attached and match.
    pub fn agreement(&self) -> Option<bool> {
        self.oracle
            .as_ref()
            .map(|o| o.iter().zip(self.counts()).all(|(&a, b)| a == b as i64))
    }

    pub fn render(&self, sig: &Signature) -> String {
        struct Mono<'a, M: Monomial>(&'a M, &'a Signature);
        impl<M: Monomial> std::fmt::Display for Mono<'_, M> {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                self.0.fmt_with(self.1, f)
            }
        }
        let mut out = String::new();
        for (d, ws) in self.words.iter().enumerate() {
            writeln!(out, "degree {d}: {}", ws.len()).unwrap();
            for w in ws {
                writeln!(out, "  {}", Mono(w, sig)).unwrap();
            }
        }
        writeln!(out, "total: {}", self.total()).unwrap();
        if let Some(o) = &self.oracle {
            let list: Vec<String> = o.iter().map(i64::to_string).collect();
            writeln!(out, "oracle: {}", list.join(" ")).unwrap();
            let verdict = if self.agreement() == Some(true) {
                "agree"
            } else {
                "disagree"
            };
            writeln!(out, "oracle agreement: {verdict}").unwrap();
        }
        out
    }
}

/// Words up to `cap` containing no word of `leads` as a subword, by
/// extending irreducible words one letter at a time.
fn avoiding(leads: &[Word], letters: u32, cap: usize) -> Vec<Vec<Word>> {
    if leads.iter().any(Word::is_empty) {
        return vec![Vec::new(); cap + 1];
    }
    let mut out = vec![vec![Word::empty()]];
    for _ in 0..cap {
        let mut next = Vec::new();
        for u in out.last().unwrap() {
            for l in 0..letters {
                let mut v = u.clone();
                v.push(l);
                if !leads.iter().any(|s| v.ends_with(s)) {
                    next.push(v);
                }
            }
        }
        next.sort();
        out.push(next);
    }
    out
}

fn all_words(letters: u32, cap: usize) -> Vec<Vec<Word>> {
    avoiding(&[], letters, cap)
}

/// `Red(S)` for an algebra or left-ideal rule set over `letters` letters.
pub fn red_words_algebra(rs: &RuleSet<Word>, letters: u32, degree_cap: usize) -> BasisReport<Word> {
    let words = match rs.mode() {
        crate::rewrite::Mode::Algebra => avoiding(rs.leads(), letters, degree_cap),
        _ => all_words(letters, degree_cap)
            .into_iter()
            .map(|layer| layer.into_iter().filter(|w| !rs.is_reducible(w)).collect())
            .collect(),
    };
    BasisReport {
        degree_cap,
        words,
        oracle: None,
    }
}

/// `Red(S·X*·Y ∪ T)`: word parts avoid the schema as subwords; each
/// candidate is then tested against every rule.
pub fn red_words_module(
    rs: &RuleSet<ModMonomial>,
    letters: u32,
    gens: &[Gen],
    degree_cap: usize,
) -> BasisReport<ModMonomial> {
    let words = avoiding(rs.schema_leads(), letters, degree_cap)
        .into_iter()
        .map(|layer| {
            let mut ms: Vec<ModMonomial> = layer
                .into_iter()
                .flat_map(|w| gens.iter().map(move |&g| ModMonomial::new(w.clone(), g)))
                .filter(|m| !rs.is_reducible(m))
                .collect();
            ms.sort();
            ms
        })
        .collect();
    BasisReport {
        degree_cap,
        words,
        oracle: None,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Basis {
    Algebra(BasisReport<Word>),
    Module(BasisReport<ModMonomial>),
}

impl Basis {
    pub fn counts(&self) -> Vec<usize> {
        match self {
            Basis::Algebra(b) => b.counts(),
            Basis::Module(b) => b.counts(),
        }
    }

    pub fn set_oracle(&mut self, oracle: Vec<i64>) {
        match self {
            Basis::Algebra(b) => b.oracle = Some(oracle),
            Basis::Module(b) => b.oracle = Some(oracle),
        }
    }

    pub fn agreement(&self) -> Option<bool> {
        match self {
            Basis::Algebra(b) => b.agreement(),
            Basis::Module(b) => b.agreement(),
        }
    }

    pub fn render(&self, sig: &Signature) -> String {
        match self {
            Basis::Algebra(b) => b.render(sig),
            Basis::Module(b) => b.render(sig),
        }
    }
}

fn is_module_mode(mode: CheckMode) -> bool {
    matches!(mode, CheckMode::Module | CheckMode::Pair)
}

fn check_shape(p: &Presentation, mode: CheckMode) -> Result<()> {
    let ok = match mode {
        CheckMode::Algebra => true,
        CheckMode::LeftIdeal => p.as_module().is_none(),
        CheckMode::Module | CheckMode::Pair => p.as_module().is_some(),
    };
    if ok {
        Ok(())
    } else {
        Err(Error::IncompatibleMode {
            mode: mode.name(),
            shape: p.shape(),
        })
    }
}

/// Reduced monomials of `p` in `mode`; module and pair modes share the
/// module rule set.
pub fn red_words(p: &Presentation, mode: CheckMode, degree_cap: usize) -> Result<Basis> {
    check_shape(p, mode)?;
    let alg = p.algebra();
    let letters = alg.alphabet().len() as u32;
    Ok(match (mode, p.as_module()) {
        (CheckMode::Algebra, _) => {
            Basis::Algebra(red_words_algebra(&alg.rule_set(), letters, degree_cap))
        }
        (CheckMode::LeftIdeal, _) => {
            let rs = RuleSet::left_ideal(alg.relations().to_vec())?;
            Basis::Algebra(red_words_algebra(&rs, letters, degree_cap))
        }
        (_, Some(m)) => Basis::Module(red_words_module(
            &m.rule_set(),
            letters,
            &m.generators(),
            degree_cap,
        )),
        (_, None) => unreachable!("shape checked"),
    })
}

/// Sparse exact elimination keeping one monic pivot per leading monomial.
struct Echelon<M: Monomial> {
    pivots: BTreeMap<M, LinComb<M>>,
}

impl<M: Monomial> Echelon<M> {
    fn insert(&mut self, mut row: LinComb<M>) -> bool {
        while let Some((lead, c)) = row.leading_term().ok().map(|(m, c)| (m.clone(), c.clone())) {
            match self.pivots.get(&lead) {
                Some(p) => row = &row - &p.scale(&c),
                None => {
                    let monic = row.scale(&c.recip());
                    self.pivots.insert(lead, monic);
                    return true;
                }
            }
        }
        false
    }
}

/// Per-degree dimensions of the quotient, computed from rows whose
/// leading monomial has degree at most `degree_cap`. Entry `d` is
/// `F_d − F_{d−1}`, where `F_d` is the number of monomials of degree
/// `≤ d` minus the rank of the rows with leading degree `≤ d`.
pub fn dimension_oracle(
    p: &Presentation,
    mode: CheckMode,
    degree_cap: usize,
    budget: usize,
) -> Result<Vec<i64>> {
    check_shape(p, mode)?;
    let alg = p.algebra();
    let letters = alg.alphabet().len() as u32;
    let gens = p.as_module().map(|m| m.generators()).unwrap_or_default();
    let words = all_words(letters, degree_cap);
    let per_degree: Vec<usize> = words
        .iter()
        .map(|l| {
            if is_module_mode(mode) {
                l.len() * gens.len()
            } else {
                l.len()
            }
        })
        .collect();
    let needed: usize = per_degree.iter().sum();
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let flat: Vec<&Word> = words.iter().flatten().collect();
    let upto = |n: usize| flat.iter().copied().take_while(move |w| w.degree() <= n);
    let mut ranks = vec![0usize; degree_cap + 1];
    if is_module_mode(mode) {
        let m = p.as_module().unwrap();
        let mut rows: Vec<(usize, LinComb<ModMonomial>)> = Vec::new();
        for t in m.module_relations() {
            let d = t.degree();
            for a in upto(degree_cap.saturating_sub(d)).filter(|_| d <= degree_cap) {
                rows.push((d + a.degree(), t.left_mul_word(a)));
            }
        }
        for s in alg.relations() {
            rows.extend(
                algebra_rows(s, &upto, degree_cap, true)
                    .into_iter()
                    .flat_map(|(d, r)| {
                        gens.iter()
                            .map(move |&g| (d, r.apply_to(g)))
                            .collect::<Vec<_>>()
                    }),
            );
        }
        eliminate(rows, &mut ranks);
    } else {
        let mut rows = Vec::new();
        for s in alg.relations() {
            rows.extend(algebra_rows(
                s,
                &upto,
                degree_cap,
                mode == CheckMode::Algebra,
            ));
        }
        eliminate(rows, &mut ranks);
    }
    let mut out = Vec::with_capacity(degree_cap + 1);
    let (mut cols, mut prev) = (0i64, 0i64);
    for d in 0..=degree_cap {
        cols += per_degree[d] as i64;
        let f = cols - ranks[d] as i64;
        out.push(f - prev);
        prev = f;
    }
    Ok(out)
}

/// `a·s·b` (two-sided) or `a·s` with leading degree at most `cap`.
fn algebra_rows<'a, I: Iterator<Item = &'a Word>>(
    s: &Poly,
    upto: &impl Fn(usize) -> I,
    cap: usize,
    two_sided: bool,
) -> Vec<(usize, Poly)> {
    let d = s.degree();
    if d > cap {
        return Vec::new();
    }
    let mut rows = Vec::new();
    for a in upto(cap - d) {
        if two_sided {
            for b in upto(cap - d - a.degree()) {
                rows.push((d + a.degree() + b.degree(), s.sandwich(a, b)));
            }
        } else {
            rows.push((d + a.degree(), s.sandwich(a, &Word::empty())));
        }
    }
    rows
}

/// Processes rows by ascending leading degree; `ranks[d]` is the rank of
/// the rows with leading degree `≤ d`.
fn eliminate<M: Monomial>(mut rows: Vec<(usize, LinComb<M>)>, ranks: &mut [usize]) {
    rows.sort_by_key(|(d, _)| *d);
    let mut ech = Echelon {
        pivots: BTreeMap::new(),
    };
    let mut it = rows.into_iter().peekable();
    let mut rank = 0;
    for (d, slot) in ranks.iter_mut().enumerate() {
        while let Some((_, row)) = it.next_if(|(rd, _)| *rd <= d) {
            if ech.insert(row) {
                rank += 1;
            }
        }
        *slot = rank;
    }
}

/// Reduced-word counts against oracle counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheck {
    pub gsb: bool,
    pub red: Vec<usize>,
    pub oracle: Vec<i64>,
}

impl CrossCheck {
    /// Equality under a passing check, domination otherwise.
    pub fn consistent(&self) -> bool {
        let pairs = || {
            self.red
                .iter()
                .zip(&self.oracle)
                .map(|(&r, &o)| (r as i64, o))
        };
        if self.gsb {
            pairs().all(|(r, o)| r == o)
        } else {
            pairs().all(|(r, o)| r >= o)
        }
    }

    /// Some degree has strictly more reduced words than the oracle allows.
    pub fn strict(&self) -> bool {
        self.red
            .iter()
            .zip(&self.oracle)
            .any(|(&r, &o)| r as i64 > o)
    }
}

pub fn cross_check(
    p: &Presentation,
    mode: CheckMode,
    degree_cap: usize,
    budget: usize,
    step_cap: usize,
) -> Result<CrossCheck> {
    let gsb = is_gsb(p, mode, step_cap)?.is_gsb();
    let red = red_words(p, mode, degree_cap)?.counts();
    let oracle = dimension_oracle(p, mode, degree_cap, budget)?;
    Ok(CrossCheck { gsb, red, oracle })
}

/// Every monomial of `f` appears in `basis`.
pub fn supported_on<M: Monomial>(f: &LinComb<M>, basis: &[Vec<M>]) -> bool {
    f.monomials().all(|m| {
        basis
            .get(m.degree())
            .is_some_and(|l| l.binary_search(m).is_ok())
    })
}
