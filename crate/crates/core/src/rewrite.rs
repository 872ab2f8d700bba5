//! Elimination of leading words and normal forms.
//!
//! Three settings share one reduction loop:
//! * algebra: a rule's leading word may occur anywhere (`f → f − c·a·s·b`);
//! * left ideal: the leading word must be a suffix (`f → f − c·a·s`);
//! * module: module rules match suffixes of `u·y` with the same generator,
//!   schema rules (algebra polynomials standing for the infinite family
//!   `s·X*·y`) match any subword of the word part.

use crate::error::{Error, Result};
use crate::poly::{LinComb, ModElement, Monomial, Poly};
use crate::scalar::Scalar;
use crate::word::{Gen, ModMonomial, Word};
use std::fmt;

pub const DEFAULT_STEP_CAP: usize = 1_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Mode {
    Algebra,
    LeftIdeal,
    Module,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Algebra => "algebra",
            Mode::LeftIdeal => "left-ideal",
            Mode::Module => "module",
        }
    }
}

/// Index of a rule inside a `RuleSet`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RuleRef {
    Rule(usize),
    Schema(usize),
}

impl fmt::Display for RuleRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RuleRef::Rule(i) => write!(f, "r{i}"),
            RuleRef::Schema(i) => write!(f, "s{i}"),
        }
    }
}

/// A rule occurrence in a monomial: `monomial = left · lead(rule) · right`
/// (for module rules `right` is empty).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reduction {
    pub rule: RuleRef,
    pub left: Word,
    pub right: Word,
}

/// One elimination step `f → f − coeff · left·rule·right`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Step<M> {
    pub rule: RuleRef,
    pub left: Word,
    pub right: Word,
    pub coeff: Scalar,
    pub eliminated: M,
}

pub type Trace<M> = Vec<Step<M>>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm<M: Monomial> {
    pub value: LinComb<M>,
    pub trace: Trace<M>,
}

impl<M: Monomial> NormalForm<M> {
    pub fn steps(&self) -> usize {
        self.trace.len()
    }
}

/// Monomial types that rules can be matched against.
pub trait Reducible: Monomial {
    fn supports(mode: Mode) -> bool;
    fn match_lead(&self, lead: &Self, mode: Mode) -> Option<(Word, Word)>;
    fn match_schema(&self, lead: &Word) -> Option<(Word, Word)>;
    fn expand_rule(rule: &LinComb<Self>, left: &Word, right: &Word) -> LinComb<Self>;
    fn expand_schema(rule: &Poly, left: &Word, right: &Word, at: &Self) -> LinComb<Self>;
    /// The module generator, if any.
    fn generator(&self) -> Option<Gen>;
    /// A degree-zero monomial on `gen`.
    fn anchor(gen: Option<Gen>) -> Self;
}

impl Reducible for Word {
    fn supports(mode: Mode) -> bool {
        mode != Mode::Module
    }

    fn match_lead(&self, lead: &Word, mode: Mode) -> Option<(Word, Word)> {
        match mode {
            Mode::Algebra => self
                .find(lead)
                .map(|p| (self.prefix(p), self.suffix_from(p + lead.degree()))),
            Mode::LeftIdeal => self
                .ends_with(lead)
                .then(|| (self.prefix(self.degree() - lead.degree()), Word::empty())),
            Mode::Module => None,
        }
    }

    fn match_schema(&self, _lead: &Word) -> Option<(Word, Word)> {
        None
    }

    fn expand_rule(rule: &Poly, left: &Word, right: &Word) -> Poly {
        rule.sandwich(left, right)
    }

    fn expand_schema(_rule: &Poly, _left: &Word, _right: &Word, _at: &Word) -> Poly {
        unreachable!("algebra rule sets carry no schema part")
    }

    fn generator(&self) -> Option<Gen> {
        None
    }

    fn anchor(_gen: Option<Gen>) -> Self {
        Word::empty()
    }
}

impl Reducible for ModMonomial {
    fn supports(mode: Mode) -> bool {
        mode == Mode::Module
    }

    fn match_lead(&self, lead: &ModMonomial, _mode: Mode) -> Option<(Word, Word)> {
        (self.gen == lead.gen && self.word.ends_with(&lead.word)).then(|| {
            (
                self.word.prefix(self.degree() - lead.degree()),
                Word::empty(),
            )
        })
    }

    fn match_schema(&self, lead: &Word) -> Option<(Word, Word)> {
        self.word.find(lead).map(|p| {
            (
                self.word.prefix(p),
                self.word.suffix_from(p + lead.degree()),
            )
        })
    }

    fn expand_rule(rule: &ModElement, left: &Word, _right: &Word) -> ModElement {
        rule.left_mul_word(left)
    }

    fn expand_schema(rule: &Poly, left: &Word, right: &Word, at: &ModMonomial) -> ModElement {
        rule.sandwich(left, right).apply_to(at.gen)
    }

    fn generator(&self) -> Option<Gen> {
        Some(self.gen)
    }

    fn anchor(gen: Option<Gen>) -> Self {
        ModMonomial::gen(gen.expect("module monomials carry a generator"))
    }
}

/// An immutable list of monic rules in one reduction mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleSet<M: Reducible> {
    mode: Mode,
    rules: Vec<LinComb<M>>,
    leads: Vec<M>,
    schema: Vec<Poly>,
    schema_leads: Vec<Word>,
}

fn normalize<M: Monomial>(rules: Vec<LinComb<M>>) -> Result<Vec<LinComb<M>>> {
    let mut out: Vec<LinComb<M>> = Vec::with_capacity(rules.len());
    for r in rules {
        if r.is_zero() {
            return Err(Error::ZeroRelation);
        }
        let r = r.make_monic()?;
        if !out.contains(&r) {
            out.push(r);
        }
    }
    Ok(out)
}

impl RuleSet<Word> {
    pub fn algebra(rules: Vec<Poly>) -> Result<Self> {
        Self::new(Mode::Algebra, rules, Vec::new())
    }

    pub fn left_ideal(rules: Vec<Poly>) -> Result<Self> {
        Self::new(Mode::LeftIdeal, rules, Vec::new())
    }
}

impl RuleSet<ModMonomial> {
    /// Module rules `T` plus the schema `S` standing for `S·X*·Y`.
    pub fn module(rules: Vec<ModElement>, schema: Vec<Poly>) -> Result<Self> {
        Self::new(Mode::Module, rules, schema)
    }
}

impl<M: Reducible> RuleSet<M> {
    /// Rules are made monic and exact duplicates dropped.
    pub fn new(mode: Mode, rules: Vec<LinComb<M>>, schema: Vec<Poly>) -> Result<Self> {
        if !M::supports(mode) {
            return Err(Error::IncompatibleMode {
                mode: mode.name(),
                shape: "this element type",
            });
        }
        if mode != Mode::Module && !schema.is_empty() {
            return Err(Error::IncompatibleMode {
                mode: mode.name(),
                shape: "schema",
            });
        }
        let rules = normalize(rules)?;
        let schema = normalize(schema)?;
        let leads = rules
            .iter()
            .map(|r| r.leading_monomial().unwrap().clone())
            .collect();
        let schema_leads = schema
            .iter()
            .map(|r| r.leading_monomial().unwrap().clone())
            .collect();
        Ok(RuleSet {
            mode,
            rules,
            leads,
            schema,
            schema_leads,
        })
    }

    pub fn mode(&self) -> Mode {
        self.mode
    }

    pub fn rules(&self) -> &[LinComb<M>] {
        &self.rules
    }

    pub fn schema(&self) -> &[Poly] {
        &self.schema
    }

    pub fn leads(&self) -> &[M] {
        &self.leads
    }

    pub fn schema_leads(&self) -> &[Word] {
        &self.schema_leads
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty() && self.schema.is_empty()
    }

    /// The same rules scanned in a different order; `rule_order[k]` is the
    /// old index of the new k-th rule.
    pub fn reordered(&self, rule_order: &[usize], schema_order: &[usize]) -> Self {
        let pick =
            |v: &Vec<LinComb<M>>, o: &[usize]| o.iter().map(|&i| v[i].clone()).collect::<Vec<_>>();
        let pick_s =
            |v: &Vec<Poly>, o: &[usize]| o.iter().map(|&i| v[i].clone()).collect::<Vec<_>>();
        RuleSet::new(
            self.mode,
            pick(&self.rules, rule_order),
            pick_s(&self.schema, schema_order),
        )
        .expect("reordering keeps rules valid")
    }

    /// First rule (declaration order, module rules before schema rules)
    /// matching `m`, at its leftmost occurrence.
    pub fn find_reduction(&self, m: &M) -> Option<Reduction> {
        for (i, lead) in self.leads.iter().enumerate() {
            if let Some((left, right)) = m.match_lead(lead, self.mode) {
                return Some(Reduction {
                    rule: RuleRef::Rule(i),
                    left,
                    right,
                });
            }
        }
        for (i, lead) in self.schema_leads.iter().enumerate() {
            if let Some((left, right)) = m.match_schema(lead) {
                return Some(Reduction {
                    rule: RuleRef::Schema(i),
                    left,
                    right,
                });
            }
        }
        None
    }

    /// `left · rule · right` evaluated at the monomial `at` it was matched in.
    pub fn expand(&self, rule: RuleRef, left: &Word, right: &Word, at: &M) -> LinComb<M> {
        match rule {
            RuleRef::Rule(i) => M::expand_rule(&self.rules[i], left, right),
            RuleRef::Schema(i) => M::expand_schema(&self.schema[i], left, right, at),
        }
    }

    pub fn is_reducible(&self, m: &M) -> bool {
        self.find_reduction(m).is_some()
    }

    /// Eliminates the greatest reducible monomial of `f`, if any.
    pub fn reduce_step(&self, f: &LinComb<M>) -> Option<(LinComb<M>, Step<M>)> {
        let (m, red) = f
            .monomials()
            .rev()
            .find_map(|m| self.find_reduction(m).map(|r| (m.clone(), r)))?;
        let coeff = f.coeff(&m);
        let mut out = f.clone();
        out.add_scaled(
            &self.expand(red.rule, &red.left, &red.right, &m),
            &-coeff.clone(),
        );
        let step = Step {
            rule: red.rule,
            left: red.left,
            right: red.right,
            coeff,
            eliminated: m,
        };
        Some((out, step))
    }

    /// Reduces `f` until every monomial is irreducible, recording each step.
    pub fn normal_form(&self, f: &LinComb<M>, step_cap: usize) -> Result<NormalForm<M>> {
        let mut rest = f.clone();
        let mut done = LinComb::zero();
        let mut trace = Vec::new();
        while let Some((m, c)) = rest.pop_leading() {
            match self.find_reduction(&m) {
                None => done.insert_raw(m, c),
                Some(red) => {
                    if trace.len() >= step_cap {
                        return Err(Error::StepCapExceeded(step_cap));
                    }
                    let prod = self.expand(red.rule, &red.left, &red.right, &m);
                    let neg = -c.clone();
                    for (m2, c2) in prod.terms().rev().skip(1) {
                        debug_assert!(m2 < &m);
                        rest.add_term(m2.clone(), c2 * &neg);
                    }
                    trace.push(Step {
                        rule: red.rule,
                        left: red.left,
                        right: red.right,
                        coeff: c,
                        eliminated: m,
                    });
                }
            }
        }
        Ok(NormalForm { value: done, trace })
    }

    /// Sum of `coeff · left·rule·right` over a trace.
    pub fn replay(&self, trace: &[Step<M>]) -> LinComb<M> {
        let mut out = LinComb::zero();
        for s in trace {
            out.add_scaled(
                &self.expand(s.rule, &s.left, &s.right, &s.eliminated),
                &s.coeff,
            );
        }
        out
    }
}

pub fn find_reduction<M: Reducible>(m: &M, rs: &RuleSet<M>) -> Option<Reduction> {
    rs.find_reduction(m)
}

pub fn reduce_step<M: Reducible>(f: &LinComb<M>, rs: &RuleSet<M>) -> Option<LinComb<M>> {
    rs.reduce_step(f).map(|(g, _)| g)
}

pub fn normal_form<M: Reducible>(
    f: &LinComb<M>,
    rs: &RuleSet<M>,
    step_cap: usize,
) -> Result<NormalForm<M>> {
    rs.normal_form(f, step_cap)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    const X: u32 = 0;
    const H: u32 = 1;
    const Y: u32 = 2;

    fn w(l: &[u32]) -> Word {
        Word::new(l.to_vec())
    }

    fn mm(l: &[u32]) -> ModMonomial {
        ModMonomial::new(w(l), 0)
    }

    fn sl2_schema() -> Vec<Poly> {
        vec![
            Poly::from_terms([
                (int(1), w(&[X, H])),
                (int(-1), w(&[H, X])),
                (int(2), w(&[X])),
            ]),
            Poly::from_terms([
                (int(1), w(&[H, Y])),
                (int(-1), w(&[Y, H])),
                (int(2), w(&[Y])),
            ]),
            Poly::from_terms([
                (int(1), w(&[X, Y])),
                (int(-1), w(&[Y, X])),
                (int(-1), w(&[H])),
            ]),
        ]
    }

    fn sl2_module(m: usize, lambda: i64) -> RuleSet<ModMonomial> {
        let t = vec![
            ModElement::monomial(mm(&[X])),
            ModElement::from_terms([(int(1), mm(&[H])), (int(-lambda), mm(&[]))]),
            ModElement::monomial(ModMonomial::new(Word::power(Y, m + 1), 0)),
        ];
        RuleSet::module(t, sl2_schema()).unwrap()
    }

    #[test]
    fn module_rule_matches_as_suffix() {
        let rs = RuleSet::module(vec![ModElement::monomial(mm(&[Y]))], vec![]).unwrap();
        let red = rs.find_reduction(&mm(&[X, Y])).unwrap();
        assert_eq!(
            red,
            Reduction {
                rule: RuleRef::Rule(0),
                left: w(&[X]),
                right: w(&[])
            }
        );
        // x·v0 is not a suffix of x·y·v0
        let rs = RuleSet::module(vec![ModElement::monomial(mm(&[X]))], vec![]).unwrap();
        assert_eq!(rs.find_reduction(&mm(&[X, Y])), None);
        let f = ModElement::monomial(mm(&[X, Y]));
        assert_eq!(rs.reduce_step(&f), None);
    }

    #[test]
    fn schema_rule_matches_any_subword() {
        let hx = Poly::from_terms([(int(1), w(&[H, X]))]);
        let xy = Poly::from_terms([(int(1), w(&[X, Y])), (int(-1), w(&[Y, X]))]);
        let rs = RuleSet::module(vec![], vec![xy]).unwrap();
        assert_eq!(rs.find_reduction(&mm(&[Y, X])), None);
        let rs = RuleSet::module(vec![], vec![hx]).unwrap();
        let red = rs.find_reduction(&mm(&[H, X, Y])).unwrap();
        assert_eq!(
            red,
            Reduction {
                rule: RuleRef::Schema(0),
                left: w(&[]),
                right: w(&[Y])
            }
        );
    }

    #[test]
    fn algebra_and_left_ideal_matching() {
        let rs = RuleSet::algebra(vec![Poly::monomial(w(&[H, Y]))]).unwrap();
        let red = rs.find_reduction(&w(&[X, H, Y, X])).unwrap();
        assert_eq!((red.left, red.right), (w(&[X]), w(&[X])));
        let rs = RuleSet::left_ideal(vec![Poly::monomial(w(&[H, Y]))]).unwrap();
        assert!(rs.find_reduction(&w(&[X, H, Y, X])).is_none());
        assert!(rs.find_reduction(&w(&[X, H, Y])).is_some());
    }

    #[test]
    fn step_eliminates_highest_weight_relation() {
        let rs = sl2_module(3, 3);
        let (g, step) = rs.reduce_step(&ModElement::monomial(mm(&[H]))).unwrap();
        assert_eq!(g, ModElement::term(int(3), mm(&[])));
        assert_eq!(step.rule, RuleRef::Rule(1));
        assert_eq!(rs.reduce_step(&g), None);
    }

    #[test]
    fn action_formulas_for_first_vector() {
        let rs = sl2_module(3, 3);
        let nf = rs
            .normal_form(&ModElement::monomial(mm(&[H, Y])), DEFAULT_STEP_CAP)
            .unwrap();
        assert_eq!(nf.value, ModElement::term(int(1), mm(&[Y])));
        let nf = rs
            .normal_form(&ModElement::monomial(mm(&[X, Y])), DEFAULT_STEP_CAP)
            .unwrap();
        assert_eq!(nf.value, ModElement::term(int(3), mm(&[])));
    }

    #[test]
    fn rules_reduce_to_zero() {
        let rs = sl2_module(2, 2);
        for r in rs.rules() {
            assert!(rs.normal_form(r, 100).unwrap().value.is_zero());
        }
        for s in rs.schema() {
            assert!(rs.normal_form(&s.apply_to(0), 100).unwrap().value.is_zero());
        }
    }

    #[test]
    fn trace_replays_to_difference() {
        let rs = sl2_module(2, 5);
        let f = ModElement::from_terms([(int(2), mm(&[X, X, Y, Y, Y])), (int(-1), mm(&[H, Y, H]))]);
        let nf = rs.normal_form(&f, DEFAULT_STEP_CAP).unwrap();
        assert_eq!(&f - &nf.value, rs.replay(&nf.trace));
        for m in nf.value.monomials() {
            assert!(!rs.is_reducible(m));
        }
    }

    #[test]
    fn step_cap_is_enforced() {
        let rs = sl2_module(3, 3);
        let f = ModElement::monomial(mm(&[X, X, Y, Y, Y]));
        assert_eq!(rs.normal_form(&f, 2), Err(Error::StepCapExceeded(2)));
    }

    #[test]
    fn rule_set_normalizes() {
        let two_x = Poly::term(int(2), w(&[X]));
        let rs = RuleSet::algebra(vec![two_x.clone(), Poly::var(X)]).unwrap();
        assert_eq!(rs.rules(), &[Poly::var(X)]);
        assert_eq!(
            RuleSet::algebra(vec![Poly::zero()]),
            Err(Error::ZeroRelation)
        );
        assert!(RuleSet::<Word>::new(Mode::Module, vec![], vec![]).is_err());
        assert!(RuleSet::<ModMonomial>::new(Mode::Algebra, vec![], vec![]).is_err());
    }
}
