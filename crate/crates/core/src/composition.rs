//! Composition enumeration and triviality certificates.
//!
//! Every report records the ambiguity `w`, the two participants as
//! `left·rule·right` (both with leading monomial `w`), and the composition
//! `s_poly = left_f·f·right_f − left_g·g·right_g`.

use crate::alphabet::Signature;
use crate::error::Result;
use crate::poly::{LinComb, ModElement, Monomial, Poly};
use crate::rewrite::{Reducible, RuleRef, RuleSet, Trace};
use crate::word::{Gen, ModMonomial, Word};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CompositionKind {
    /// `w = f̄a = bḡ` with a proper overlap.
    Intersection,
    /// `w = af̄b = ḡ`.
    Inclusion,
    /// `w = f̄ = aḡ` for left-ideal rules and module rules of a pair.
    RightJustified,
    /// `w = f̄ = aḡ` between module rules, schema instances included.
    ModuleInclusion,
    /// An algebra rule against a module rule of a Gröbner–Shirshov pair.
    MixedPair,
}

impl CompositionKind {
    pub fn name(self) -> &'static str {
        match self {
            CompositionKind::Intersection => "intersection",
            CompositionKind::Inclusion => "inclusion",
            CompositionKind::RightJustified => "right-justified",
            CompositionKind::ModuleInclusion => "module-inclusion",
            CompositionKind::MixedPair => "mixed-pair",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Participant {
    pub rule: RuleRef,
    pub left: Word,
    pub right: Word,
}

impl Participant {
    fn new(rule: RuleRef, left: Word, right: Word) -> Self {
        Participant { rule, left, right }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// Reduced to zero with every eliminated monomial strictly below `w`.
    Trivial,
    /// The normal form is a nonzero irreducible element.
    NonTrivial,
    /// Reduced to zero, but some step was not below `w`.
    Uncertified,
}

impl Verdict {
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Trivial => "trivial",
            Verdict::NonTrivial => "nontrivial",
            Verdict::Uncertified => "uncertified",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialityCheck<M: Monomial> {
    pub verdict: Verdict,
    pub normal_form: LinComb<M>,
    pub certificate: Trace<M>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionReport<M: Monomial> {
    pub kind: CompositionKind,
    pub w: M,
    pub f: Participant,
    pub g: Participant,
    pub s_poly: LinComb<M>,
    pub check: Option<TrivialityCheck<M>>,
}

impl<M: Reducible> CompositionReport<M> {
    pub fn verdict(&self) -> Option<Verdict> {
        self.check.as_ref().map(|c| c.verdict)
    }

    pub fn is_trivial(&self) -> bool {
        self.verdict() == Some(Verdict::Trivial)
    }

    fn sort_key(&self) -> (&M, &Participant, &Participant, CompositionKind) {
        (&self.w, &self.f, &self.g, self.kind)
    }

    /// One line: kind, w, participants, verdict.
    pub fn line(&self, sig: &Signature) -> String {
        struct P<'a>(&'a Participant, &'a Signature);
        impl fmt::Display for P<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let a = &self.1.algebra;
                write!(
                    f,
                    "{}[{}|{}]",
                    self.0.rule,
                    self.0.left.display(a),
                    self.0.right.display(a)
                )
            }
        }
        struct Mono<'a, M: Monomial>(&'a M, &'a Signature);
        impl<M: Monomial> fmt::Display for Mono<'_, M> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_with(self.1, f)
            }
        }
        let verdict = self.verdict().map_or("unchecked", Verdict::name);
        let steps = self.check.as_ref().map_or(0, |c| c.certificate.len());
        format!(
            "{} w={} f={} g={} verdict={} steps={}",
            self.kind.name(),
            Mono(&self.w, sig),
            P(&self.f, sig),
            P(&self.g, sig),
            verdict,
            steps
        )
    }
}

/// Sorts reports by `w`, then participants.
pub fn sort_reports<M: Reducible>(reports: &mut [CompositionReport<M>]) {
    reports.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
}

fn lead<M: Monomial>(f: &LinComb<M>) -> &M {
    f.leading_monomial().expect("rules are nonzero")
}

/// Intersection and inclusion compositions of the ordered pair `(f, g)`.
pub(crate) fn algebra_pair(
    (i, f): (RuleRef, &Poly),
    (j, g): (RuleRef, &Poly),
    out: &mut Vec<CompositionReport<Word>>,
) {
    let (fl, gl) = (lead(f), lead(g));
    let (nf, ng) = (fl.degree(), gl.degree());
    // proper overlaps: a suffix of f̄ of length k equals a prefix of ḡ
    for k in 1..nf.min(ng) {
        if fl.letters()[nf - k..] == gl.letters()[..k] {
            let a = gl.suffix_from(k);
            let b = fl.prefix(nf - k);
            let w = fl.concat(&a);
            let s_poly = &f.sandwich(&Word::empty(), &a) - &g.sandwich(&b, &Word::empty());
            out.push(CompositionReport {
                kind: CompositionKind::Intersection,
                w,
                f: Participant::new(i, Word::empty(), a),
                g: Participant::new(j, b, Word::empty()),
                s_poly,
                check: None,
            });
        }
    }
    if nf <= ng {
        for p in gl.occurrences(fl).collect::<Vec<_>>() {
            if i == j {
                continue;
            }
            let a = gl.prefix(p);
            let b = gl.suffix_from(p + nf);
            let s_poly = &f.sandwich(&a, &b) - g;
            out.push(CompositionReport {
                kind: CompositionKind::Inclusion,
                w: gl.clone(),
                f: Participant::new(i, a, b),
                g: Participant::new(j, Word::empty(), Word::empty()),
                s_poly,
                check: None,
            });
        }
    }
}

/// All intersection and inclusion compositions among two-sided rules,
/// self-overlaps included.
pub fn algebra_compositions(rules: &[Poly]) -> Vec<CompositionReport<Word>> {
    let mut out = Vec::new();
    for (i, f) in rules.iter().enumerate() {
        for (j, g) in rules.iter().enumerate() {
            algebra_pair((RuleRef::Rule(i), f), (RuleRef::Rule(j), g), &mut out);
        }
    }
    sort_reports(&mut out);
    out
}

pub(crate) fn left_ideal_pair(
    (i, f): (RuleRef, &Poly),
    (j, g): (RuleRef, &Poly),
    out: &mut Vec<CompositionReport<Word>>,
) {
    if i == j {
        return;
    }
    let (fl, gl) = (lead(f), lead(g));
    if fl.ends_with(gl) {
        let a = fl.prefix(fl.degree() - gl.degree());
        out.push(CompositionReport {
            kind: CompositionKind::RightJustified,
            w: fl.clone(),
            f: Participant::new(i, Word::empty(), Word::empty()),
            g: Participant::new(j, a.clone(), Word::empty()),
            s_poly: f - &g.sandwich(&a, &Word::empty()),
            check: None,
        });
    }
}

/// Compositions `f − ag` with `f̄ = aḡ` among left-ideal rules, `f ≠ g`.
pub fn left_ideal_compositions(rules: &[Poly]) -> Vec<CompositionReport<Word>> {
    let mut out = Vec::new();
    for (i, f) in rules.iter().enumerate() {
        for (j, g) in rules.iter().enumerate() {
            left_ideal_pair((RuleRef::Rule(i), f), (RuleRef::Rule(j), g), &mut out);
        }
    }
    sort_reports(&mut out);
    out
}

pub(crate) fn module_pair(
    (i, f): (RuleRef, &ModElement),
    (j, g): (RuleRef, &ModElement),
    kind: CompositionKind,
    out: &mut Vec<CompositionReport<ModMonomial>>,
) {
    if i == j {
        return;
    }
    let (fl, gl) = (lead(f), lead(g));
    if fl.gen == gl.gen && fl.word.ends_with(&gl.word) {
        let a = fl.word.prefix(fl.degree() - gl.degree());
        out.push(CompositionReport {
            kind,
            w: fl.clone(),
            f: Participant::new(i, Word::empty(), Word::empty()),
            g: Participant::new(j, a.clone(), Word::empty()),
            s_poly: f - &g.left_mul_word(&a),
            check: None,
        });
    }
}

/// Inclusion compositions `w = f̄ = aḡ` among module rules.
pub fn module_compositions(
    rules: &[ModElement],
    kind: CompositionKind,
) -> Vec<CompositionReport<ModMonomial>> {
    let mut out = Vec::new();
    for (i, f) in rules.iter().enumerate() {
        for (j, g) in rules.iter().enumerate() {
            module_pair((RuleRef::Rule(i), f), (RuleRef::Rule(j), g), kind, &mut out);
        }
    }
    sort_reports(&mut out);
    out
}

/// Compositions between the schema instances `s_i·u₁·y` and `s_j·u₂·y`.
///
/// Only instances where the occurrence of `s̄_j` overlaps `s̄_i` are
/// generated, with the shorter of `u₁`, `u₂` empty; disjoint occurrences
/// and common right factors give compositions that are trivial outright.
pub(crate) fn schema_pair(
    (i, si): (RuleRef, &Poly),
    (j, sj): (RuleRef, &Poly),
    gen: Gen,
    out: &mut Vec<CompositionReport<ModMonomial>>,
) {
    let (li, lj) = (lead(si), lead(sj));
    let (ni, nj) = (li.degree(), lj.degree());
    for p in 0..ni {
        if i == j && p == 0 {
            continue;
        }
        let overlap = nj.min(ni - p);
        if li.letters()[p..p + overlap] != lj.letters()[..overlap] {
            continue;
        }
        let (u1, u2) = if nj > ni - p {
            (lj.suffix_from(ni - p), Word::empty())
        } else {
            (Word::empty(), li.suffix_from(p + nj))
        };
        let a = li.prefix(p);
        let w = ModMonomial::new(li.concat(&u1), gen);
        let s_poly =
            &si.sandwich(&Word::empty(), &u1).apply_to(gen) - &sj.sandwich(&a, &u2).apply_to(gen);
        out.push(CompositionReport {
            kind: CompositionKind::ModuleInclusion,
            w,
            f: Participant::new(i, Word::empty(), u1),
            g: Participant::new(j, a, u2),
            s_poly,
            check: None,
        });
    }
}

/// Module compositions inside `S·X*·Y` for every generator in `gens`.
pub fn schema_compositions(schema: &[Poly], gens: &[Gen]) -> Vec<CompositionReport<ModMonomial>> {
    let mut out = Vec::new();
    for &y in gens {
        for (i, si) in schema.iter().enumerate() {
            for (j, sj) in schema.iter().enumerate() {
                schema_pair(
                    (RuleRef::Schema(i), si),
                    (RuleRef::Schema(j), sj),
                    y,
                    &mut out,
                );
            }
        }
    }
    sort_reports(&mut out);
    out
}

/// Compositions of a schema rule `s` (standing for `s·X*·y`) with a module
/// rule `t`, `t̄ = v·y`:
/// * `s̄` occurs inside `v`: `w = t̄ = a·s̄·b·y`, `s_poly = a·s·b·y − t`;
/// * a proper suffix of `s̄` is a prefix of `v` (or `v` a suffix of `s̄`):
///   `w = s̄·u·y = c·t̄` with `deg c < deg s̄`, `s_poly = s·u·y − c·t`.
pub(crate) fn mixed_pair(
    (i, s): (RuleRef, &Poly),
    (j, t): (RuleRef, &ModElement),
    kind: CompositionKind,
    out: &mut Vec<CompositionReport<ModMonomial>>,
) {
    let sl = lead(s);
    let tl = lead(t);
    let v = &tl.word;
    let ns = sl.degree();
    for p in v.occurrences(sl).collect::<Vec<_>>() {
        let a = v.prefix(p);
        let b = v.suffix_from(p + ns);
        out.push(CompositionReport {
            kind,
            w: tl.clone(),
            f: Participant::new(i, a.clone(), b.clone()),
            g: Participant::new(j, Word::empty(), Word::empty()),
            s_poly: &s.sandwich(&a, &b).apply_to(tl.gen) - t,
            check: None,
        });
    }
    for k in 1..ns {
        if k > v.degree() || sl.letters()[ns - k..] != v.letters()[..k] {
            continue;
        }
        let u = v.suffix_from(k);
        let c = sl.prefix(ns - k);
        out.push(CompositionReport {
            kind,
            w: ModMonomial::new(sl.concat(&u), tl.gen),
            f: Participant::new(i, Word::empty(), u.clone()),
            g: Participant::new(j, c.clone(), Word::empty()),
            s_poly: &s.sandwich(&Word::empty(), &u).apply_to(tl.gen) - &t.left_mul_word(&c),
            check: None,
        });
    }
}

/// Schema-versus-module compositions for every pair `(s, t)`.
pub fn mixed_compositions(
    schema: &[Poly],
    rules: &[ModElement],
    kind: CompositionKind,
) -> Vec<CompositionReport<ModMonomial>> {
    let mut out = Vec::new();
    for (i, s) in schema.iter().enumerate() {
        for (j, t) in rules.iter().enumerate() {
            mixed_pair(
                (RuleRef::Schema(i), s),
                (RuleRef::Rule(j), t),
                kind,
                &mut out,
            );
        }
    }
    sort_reports(&mut out);
    out
}

/// The composition families of a Gröbner–Shirshov pair `(S, T)` that
/// involve `T`: right-justified compositions within `T` and the mixed
/// compositions of `S` against `T`. Closure of `S` itself is checked in
/// the algebra.
pub fn pair_compositions(
    schema: &[Poly],
    rules: &[ModElement],
) -> Vec<CompositionReport<ModMonomial>> {
    let mut out = module_compositions(rules, CompositionKind::RightJustified);
    out.extend(mixed_compositions(
        schema,
        rules,
        CompositionKind::MixedPair,
    ));
    sort_reports(&mut out);
    out
}

/// Reduces `s_poly` against `rs`; trivial iff the normal form is zero and
/// every eliminated monomial lies strictly below `w`.
pub fn is_trivial<M: Reducible>(
    report: &CompositionReport<M>,
    rs: &RuleSet<M>,
    step_cap: usize,
) -> Result<TrivialityCheck<M>> {
    let nf = rs.normal_form(&report.s_poly, step_cap)?;
    let verdict = if !nf.value.is_zero() {
        Verdict::NonTrivial
    } else if nf.trace.iter().all(|s| s.eliminated < report.w) {
        Verdict::Trivial
    } else {
        Verdict::Uncertified
    };
    Ok(TrivialityCheck {
        verdict,
        normal_form: nf.value,
        certificate: nf.trace,
    })
}

/// Runs `is_trivial` on every report, storing the result in place.
pub fn check_all<M: Reducible>(
    reports: &mut [CompositionReport<M>],
    rs: &RuleSet<M>,
    step_cap: usize,
) -> Result<bool> {
    let mut all = true;
    for r in reports.iter_mut() {
        let check = is_trivial(r, rs, step_cap)?;
        all &= check.verdict == Verdict::Trivial;
        r.check = Some(check);
    }
    Ok(all)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::rewrite::DEFAULT_STEP_CAP;
    use crate::scalar::int;
    use proptest::prelude::*;
    use std::collections::BTreeSet;

    const X: u32 = 0;
    const H: u32 = 1;
    const Y: u32 = 2;

    fn w(l: &[u32]) -> Word {
        Word::new(l.to_vec())
    }

    fn p(terms: &[(i64, &[u32])]) -> Poly {
        Poly::from_terms(terms.iter().map(|(c, l)| (int(*c), w(l))))
    }

    fn mm(l: &[u32]) -> ModMonomial {
        ModMonomial::new(w(l), 0)
    }

    fn me(terms: &[(i64, &[u32])]) -> ModElement {
        ModElement::from_terms(terms.iter().map(|(c, l)| (int(*c), mm(l))))
    }

    fn sl2_s() -> Vec<Poly> {
        vec![
            p(&[(1, &[X, H]), (-1, &[H, X]), (2, &[X])]),
            p(&[(1, &[H, Y]), (-1, &[Y, H]), (2, &[Y])]),
            p(&[(1, &[X, Y]), (-1, &[Y, X]), (-1, &[H])]),
        ]
    }

    fn sl2_t(m: usize, lambda: i64) -> Vec<ModElement> {
        vec![
            me(&[(1, &[X])]),
            me(&[(1, &[H]), (-lambda, &[])]),
            ModElement::monomial(ModMonomial::new(Word::power(Y, m + 1), 0)),
        ]
    }

    #[test]
    fn self_overlap_of_square() {
        // x > y, f = xx - y
        let f = p(&[(1, &[0, 0]), (-1, &[1])]);
        let reports = algebra_compositions(std::slice::from_ref(&f));
        assert_eq!(reports.len(), 1);
        let r = &reports[0];
        assert_eq!(r.kind, CompositionKind::Intersection);
        assert_eq!(r.w, w(&[0, 0, 0]));
        assert_eq!(r.s_poly, p(&[(1, &[0, 1]), (-1, &[1, 0])]));
        let rs = RuleSet::algebra(vec![f]).unwrap();
        let check = is_trivial(r, &rs, DEFAULT_STEP_CAP).unwrap();
        assert_eq!(check.verdict, Verdict::NonTrivial);
        assert_eq!(check.normal_form, r.s_poly);
    }

    #[test]
    fn overlaps_of_two_sl2_relations() {
        // under x > h > y the leading words are xy and xh; neither suffix
        // meets the other's prefix
        let s = sl2_s();
        assert!(algebra_compositions(&[s[2].clone(), s[0].clone()]).is_empty());
        // with hy present the overlap xh·y = x·hy appears
        let reports = algebra_compositions(&s);
        let ws: BTreeSet<Word> = reports.iter().map(|r| r.w.clone()).collect();
        assert_eq!(ws, BTreeSet::from([w(&[X, H, Y])]));
        let r = &reports[0];
        let expected = &s[0].sandwich(&w(&[]), &w(&[Y])) - &s[1].sandwich(&w(&[X]), &w(&[]));
        assert_eq!(r.s_poly, expected);
        let rs = RuleSet::algebra(s).unwrap();
        assert_eq!(
            is_trivial(r, &rs, DEFAULT_STEP_CAP).unwrap().verdict,
            Verdict::Trivial
        );
    }

    #[test]
    fn no_overlap_no_compositions() {
        let rules = [p(&[(1, &[X, X])]), p(&[(1, &[Y, Y])])];
        let reports = algebra_compositions(&rules);
        // only the two self-overlaps remain
        assert!(reports.iter().all(|r| r.f.rule == r.g.rule));
        assert!(algebra_compositions(&[p(&[(1, &[X, Y])]), p(&[(1, &[H])])]).is_empty());
    }

    #[test]
    fn left_ideal_examples() {
        // x > y > 1: f = xy - y, g = y - 1
        let f = p(&[(1, &[0, 1]), (-1, &[1])]);
        let g = p(&[(1, &[1]), (-1, &[])]);
        let reports = left_ideal_compositions(&[f.clone(), g.clone()]);
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].w, w(&[0, 1]));
        // (xy - y) - x(y - 1) = x - y
        assert_eq!(reports[0].s_poly, p(&[(1, &[0]), (-1, &[1])]));
        let reports = left_ideal_compositions(&[p(&[(1, &[X, H])]), p(&[(1, &[Y])])]);
        assert!(reports.is_empty());
        assert!(left_ideal_compositions(&[f]).is_empty());
    }

    #[test]
    fn module_examples() {
        // hy·v0 - 2y·v0 against h·v0: h is not a suffix of hy
        let reports = module_compositions(
            &[me(&[(1, &[H, Y]), (-2, &[Y])]), me(&[(1, &[H])])],
            CompositionKind::ModuleInclusion,
        );
        assert!(reports.is_empty());
        let f = me(&[(1, &[X, Y]), (1, &[])]);
        let g = me(&[(1, &[Y])]);
        let reports = module_compositions(&[f, g], CompositionKind::ModuleInclusion);
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].w, mm(&[X, Y]));
        assert_eq!(reports[0].s_poly, me(&[(1, &[])]));
        let f = me(&[(1, &[X]), (1, &[])]);
        let g = me(&[(1, &[X]), (-1, &[])]);
        let reports = module_compositions(&[f, g], CompositionKind::ModuleInclusion);
        assert_eq!(reports.len(), 2);
        assert_eq!(
            reports[0].s_poly,
            me(&[(2, &[])]).scale(&int(if reports[0].f.rule == RuleRef::Rule(0) {
                1
            } else {
                -1
            }))
        );
    }

    #[test]
    fn sl2_mixed_composition_at_lambda_equal_m() {
        let (s, t) = (sl2_s(), sl2_t(1, 1));
        let reports = pair_compositions(&s, &t);
        let target = mm(&[X, Y, Y]);
        let r = reports
            .iter()
            .find(|r| r.w == target && r.f.rule == RuleRef::Schema(2))
            .expect("xy·y·v0 against y²v0");
        assert_eq!(r.f.right, w(&[Y]));
        assert_eq!(r.g.left, w(&[X]));
        // (xy - yx - h)y·v0 - x·y²v0 = -yxy·v0 - hy·v0
        assert_eq!(r.s_poly, me(&[(-1, &[Y, X, Y]), (-1, &[H, Y])]));
        let rs = RuleSet::module(t, s).unwrap();
        assert_eq!(
            is_trivial(r, &rs, DEFAULT_STEP_CAP).unwrap().verdict,
            Verdict::Trivial
        );
    }

    #[test]
    fn sl2_mixed_composition_fails_off_lambda_equal_m() {
        let (s, t) = (sl2_s(), sl2_t(2, 5));
        let reports = pair_compositions(&s, &t);
        let r = reports.iter().find(|r| r.w == mm(&[X, Y, Y, Y])).unwrap();
        let rs = RuleSet::module(t, s).unwrap();
        let check = is_trivial(r, &rs, DEFAULT_STEP_CAP).unwrap();
        assert_eq!(check.verdict, Verdict::NonTrivial);
        // -(m+1)(λ-m)·y^m·v0
        assert_eq!(check.normal_form, me(&[(-9, &[Y, Y])]));
    }

    #[test]
    fn no_schema_word_inside_power_of_y() {
        let (s, t) = (sl2_s(), sl2_t(1, 1));
        let reports = mixed_compositions(&s, &t[2..], CompositionKind::MixedPair);
        // only the overlap family appears: no leading word of S lies inside y²
        assert!(reports.iter().all(|r| !r.g.left.is_empty()));
    }

    #[test]
    fn trivial_zero_composition() {
        let r = CompositionReport {
            kind: CompositionKind::Inclusion,
            w: w(&[X]),
            f: Participant::new(RuleRef::Rule(0), w(&[]), w(&[])),
            g: Participant::new(RuleRef::Rule(1), w(&[]), w(&[])),
            s_poly: Poly::zero(),
            check: None,
        };
        let rs = RuleSet::algebra(vec![]).unwrap();
        let c = is_trivial(&r, &rs, 10).unwrap();
        assert_eq!(c.verdict, Verdict::Trivial);
        assert!(c.certificate.is_empty());
    }

    #[test]
    fn report_line_format() {
        let sig = Signature::algebra_only(Alphabet::algebra(["x", "y"]).unwrap());
        let f = p(&[(1, &[0, 0]), (-1, &[1])]);
        let mut reports = algebra_compositions(std::slice::from_ref(&f));
        check_all(&mut reports, &RuleSet::algebra(vec![f]).unwrap(), 100).unwrap();
        assert_eq!(
            reports[0].line(&sig),
            "intersection w=x*x*x f=r0[1|x] g=r0[x|1] verdict=nontrivial steps=0"
        );
    }

    /// Unordered pair of rule occurrences `(rule, position)` in an ambiguity.
    type Ambiguity = (Word, BTreeSet<(usize, usize)>);

    fn brute_force_ambiguities(
        leads: &[Word],
        letters: u32,
        max_len: usize,
    ) -> BTreeSet<Ambiguity> {
        let mut found = BTreeSet::new();
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::new();
            for u in &layer {
                for l in 0..letters {
                    let mut v = u.clone();
                    v.push(l);
                    next.push(v);
                }
            }
            for v in &next {
                let occ: Vec<(usize, usize, usize)> = leads
                    .iter()
                    .enumerate()
                    .flat_map(|(i, s)| {
                        v.occurrences(s)
                            .map(move |p| (i, p, p + s.degree()))
                            .collect::<Vec<_>>()
                    })
                    .collect();
                for (x, &(i, p, pe)) in occ.iter().enumerate() {
                    for &(j, q, qe) in &occ[x + 1..] {
                        let overlaps = p < qe && q < pe;
                        let spans = p.min(q) == 0 && pe.max(qe) == v.degree();
                        if overlaps && spans {
                            found.insert((v.clone(), BTreeSet::from([(i, p), (j, q)])));
                        }
                    }
                }
            }
            layer = next;
        }
        found
    }

    fn arb_leads() -> impl Strategy<Value = (u32, Vec<Word>)> {
        (2u32..=3).prop_flat_map(|n| {
            let word = proptest::collection::vec(0..n, 1..=4).prop_map(Word::new);
            (
                Just(n),
                proptest::collection::btree_set(word, 1..=3).prop_map(|s| s.into_iter().collect()),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn enumeration_matches_brute_force((letters, leads) in arb_leads()) {
            let rules: Vec<Poly> = leads.iter().map(|l| Poly::monomial(l.clone())).collect();
            let emitted: BTreeSet<Ambiguity> = algebra_compositions(&rules)
                .into_iter()
                .map(|r| {
                    let idx = |rr: RuleRef| match rr { RuleRef::Rule(i) => i, RuleRef::Schema(i) => i };
                    (r.w, BTreeSet::from([(idx(r.f.rule), r.f.left.degree()), (idx(r.g.rule), r.g.left.degree())]))
                })
                .collect();
            let expected = brute_force_ambiguities(&leads, letters, 8);
            prop_assert_eq!(emitted, expected);
        }

        #[test]
        fn intersections_cancel_leading_word(
            (_letters, leads) in arb_leads(),
            tails in proptest::collection::vec(-2i64..3, 3)
        ) {
            let rules: Vec<Poly> = leads
                .iter()
                .zip(&tails)
                .map(|(l, &c)| &Poly::monomial(l.clone()) + &Poly::constant(int(c)))
                .collect();
            for r in algebra_compositions(&rules) {
                if let Some(m) = r.s_poly.leading_monomial() {
                    prop_assert!(m < &r.w);
                }
            }
        }
    }
}
