//! Gröbner–Shirshov checks, Shirshov completion, and the comparison of an
//! algebra presentation with its lift to the double-free module.

use crate::alphabet::Signature;
use crate::composition::{
    algebra_compositions, algebra_pair, check_all, is_trivial, left_ideal_compositions,
    left_ideal_pair, mixed_compositions, mixed_pair, module_compositions, module_pair,
    pair_compositions, schema_compositions, sort_reports, CompositionKind, CompositionReport,
    Participant, Verdict,
};
use crate::error::{Error, Result};
use crate::poly::{LinComb, ModElement, Monomial, Poly};
use crate::presentation::{AlgebraPresentation, ModulePresentation, Presentation};
use crate::rewrite::{Mode, Reducible, RuleRef, RuleSet, Step};
use crate::scalar::Scalar;
use crate::word::{Gen, ModMonomial, Word};
use num::{One, Zero};
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;
use std::str::FromStr;

/// Which composition families a check or completion uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CheckMode {
    /// Two-sided ideal of `k⟨X⟩`.
    Algebra,
    /// Left ideal of `k⟨X⟩`.
    LeftIdeal,
    /// The double-free module `mod⟨Y | S·X*·Y ∪ T⟩`.
    Module,
    /// The pair `(S, T)`: `S` closed in the algebra, `T` against `S`.
    Pair,
}

impl CheckMode {
    pub fn name(self) -> &'static str {
        match self {
            CheckMode::Algebra => "algebra",
            CheckMode::LeftIdeal => "left-ideal",
            CheckMode::Module => "module",
            CheckMode::Pair => "pair",
        }
    }

    fn incompatible(self, p: &Presentation) -> Error {
        Error::IncompatibleMode {
            mode: self.name(),
            shape: p.shape(),
        }
    }
}

impl FromStr for CheckMode {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "algebra" => Ok(CheckMode::Algebra),
            "left-ideal" => Ok(CheckMode::LeftIdeal),
            "module" => Ok(CheckMode::Module),
            "pair" => Ok(CheckMode::Pair),
            _ => Err(format!("unknown mode `{s}`")),
        }
    }
}

/// All compositions of one check, with their verdicts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GsbReport {
    pub mode: CheckMode,
    pub algebra: Vec<CompositionReport<Word>>,
    pub module: Vec<CompositionReport<ModMonomial>>,
}

impl GsbReport {
    pub fn is_gsb(&self) -> bool {
        self.algebra.iter().all(|r| r.is_trivial()) && self.module.iter().all(|r| r.is_trivial())
    }

    pub fn checked(&self) -> usize {
        self.algebra.len() + self.module.len()
    }

    pub fn nontrivial(&self) -> usize {
        self.algebra.iter().filter(|r| !r.is_trivial()).count()
            + self.module.iter().filter(|r| !r.is_trivial()).count()
    }

    pub fn summary(&self) -> String {
        if self.is_gsb() {
            format!(
                "GSB: yes; compositions checked: {}; all trivial",
                self.checked()
            )
        } else {
            format!(
                "GSB: no; compositions checked: {}; nontrivial: {}",
                self.checked(),
                self.nontrivial()
            )
        }
    }

    /// The summary line followed by one line per composition.
    pub fn render(&self, sig: &Signature) -> String {
        let mut out = format!("mode: {}\n", self.mode.name());
        for r in &self.algebra {
            writeln!(out, "{}", r.line(sig)).unwrap();
        }
        for r in &self.module {
            writeln!(out, "{}", r.line(sig)).unwrap();
        }
        writeln!(out, "{}", self.summary()).unwrap();
        out
    }
}

fn checked<M: Reducible>(
    mut reports: Vec<CompositionReport<M>>,
    rs: &RuleSet<M>,
    step_cap: usize,
) -> Result<Vec<CompositionReport<M>>> {
    check_all(&mut reports, rs, step_cap)?;
    Ok(reports)
}

/// Enumerates the compositions of `mode` and checks each for triviality.
///
/// In module mode the compositions among schema instances are reduced by
/// the schema alone, which makes the verdict hold for every right factor
/// inserted before the generator.
pub fn is_gsb(p: &Presentation, mode: CheckMode, step_cap: usize) -> Result<GsbReport> {
    let s = p.algebra().relations();
    let mut report = GsbReport {
        mode,
        algebra: Vec::new(),
        module: Vec::new(),
    };
    match mode {
        CheckMode::Algebra => {
            report.algebra = checked(
                algebra_compositions(s),
                &RuleSet::algebra(s.to_vec())?,
                step_cap,
            )?;
        }
        CheckMode::LeftIdeal => {
            if p.as_module().is_some() {
                return Err(mode.incompatible(p));
            }
            report.algebra = checked(
                left_ideal_compositions(s),
                &RuleSet::left_ideal(s.to_vec())?,
                step_cap,
            )?;
        }
        CheckMode::Module => {
            let m = p.as_module().ok_or_else(|| mode.incompatible(p))?;
            let schema_only = RuleSet::module(Vec::new(), s.to_vec())?;
            let mut module = checked(
                schema_compositions(s, &m.generators()),
                &schema_only,
                step_cap,
            )?;
            let t = m.module_relations();
            let mut rest = module_compositions(t, CompositionKind::ModuleInclusion);
            rest.extend(mixed_compositions(s, t, CompositionKind::ModuleInclusion));
            module.extend(checked(rest, &m.rule_set(), step_cap)?);
            sort_reports(&mut module);
            report.module = module;
        }
        CheckMode::Pair => {
            let m = p.as_module().ok_or_else(|| mode.incompatible(p))?;
            report.algebra = checked(
                algebra_compositions(s),
                &RuleSet::algebra(s.to_vec())?,
                step_cap,
            )?;
            report.module = checked(
                pair_compositions(s, m.module_relations()),
                &m.rule_set(),
                step_cap,
            )?;
        }
    }
    Ok(report)
}

/// True iff no leading word of a rule is a suffix of another rule's.
pub fn is_minimal_gsb_left_ideal(rules: &[Poly]) -> bool {
    let leads: Vec<&Word> = rules.iter().filter_map(|r| r.leading_monomial()).collect();
    leads.iter().enumerate().all(|(i, f)| {
        leads
            .iter()
            .enumerate()
            .all(|(j, g)| i == j || !f.ends_with(g))
    })
}

/// One summand `left · rule · right` of a certificate, evaluated on `gen`
/// for schema rules.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CertKey {
    pub rule: RuleRef,
    pub left: Word,
    pub right: Word,
    pub gen: Option<Gen>,
}

/// A rule written as a combination of the input rules and schema instances.
pub type Certificate = BTreeMap<CertKey, Scalar>;

fn cert_add(into: &mut Certificate, from: &Certificate, c: &Scalar) {
    for (k, v) in from {
        let e = into.entry(k.clone()).or_insert_with(Scalar::zero);
        *e += v * c;
        if e.is_zero() {
            into.remove(k);
        }
    }
}

fn cert_shift(cert: &Certificate, left: &Word, right: &Word) -> Certificate {
    cert.iter()
        .map(|(k, v)| {
            let key = CertKey {
                rule: k.rule,
                left: left.concat(&k.left),
                right: k.right.concat(right),
                gen: k.gen,
            };
            (key, v.clone())
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Origin<M> {
    Composition {
        kind: CompositionKind,
        w: M,
        f: RuleRef,
        g: RuleRef,
    },
    InterReduced {
        from: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AddedRule<M: Monomial> {
    /// Rule ids count the input rules first.
    pub id: usize,
    pub rule: LinComb<M>,
    pub origin: Origin<M>,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CompletionStatus {
    Closed,
    DegreeCapped,
    StepCapped,
}

impl CompletionStatus {
    pub fn name(self) -> &'static str {
        match self {
            CompletionStatus::Closed => "closed",
            CompletionStatus::DegreeCapped => "degree-capped",
            CompletionStatus::StepCapped => "step-capped",
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CompletionStats {
    /// Compositions reduced during the worklist phase.
    pub examined: usize,
    /// Compositions re-checked by the closing verification pass.
    pub verified: usize,
    pub reductions: usize,
    pub added: usize,
    pub retired: usize,
    /// Compositions dropped because a participant was retired.
    pub skipped: usize,
    /// Compositions above the degree cap, counted when first generated.
    pub deferred: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompletionResult<M: Reducible> {
    pub mode: Mode,
    pub original: Vec<LinComb<M>>,
    pub schema: Vec<Poly>,
    /// The final rules, ordered by id.
    pub rules: Vec<LinComb<M>>,
    pub rule_ids: Vec<usize>,
    pub added: Vec<AddedRule<M>>,
    pub retired: Vec<usize>,
    pub status: CompletionStatus,
    /// Compositions of the final rules above the degree cap.
    pub over_cap: usize,
    pub stats: CompletionStats,
}

impl<M: Reducible> CompletionResult<M> {
    pub fn rule_set(&self) -> RuleSet<M> {
        RuleSet::new(self.mode, self.rules.clone(), self.schema.clone())
            .expect("completed rules are normalized")
    }

    /// Evaluates a certificate against the input rules and the schema.
    pub fn expand_certificate(&self, cert: &Certificate) -> LinComb<M> {
        let rs = RuleSet::new(self.mode, self.original.clone(), self.schema.clone())
            .expect("input rules are normalized");
        let mut out = LinComb::zero();
        for (k, c) in cert {
            let at = match k.rule {
                RuleRef::Rule(i) => rs.leads()[i].clone(),
                RuleRef::Schema(_) => M::anchor(k.gen),
            };
            out = &out + &rs.expand(k.rule, &k.left, &k.right, &at).scale(c);
        }
        out
    }

    pub fn render(&self, sig: &Signature) -> String {
        struct Mono<'a, M: Monomial>(&'a M, &'a Signature);
        impl<M: Monomial> std::fmt::Display for Mono<'_, M> {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                self.0.fmt_with(self.1, f)
            }
        }
        let mut out = String::new();
        for a in &self.added {
            write!(out, "added r{}: {} <- ", a.id, a.rule.display(sig)).unwrap();
            match &a.origin {
                Origin::Composition { kind, w, f, g } => {
                    writeln!(out, "{} w={} f={} g={}", kind.name(), Mono(w, sig), f, g).unwrap()
                }
                Origin::InterReduced { from } => {
                    writeln!(out, "inter-reduction of r{from}").unwrap()
                }
            }
        }
        for r in &self.retired {
            writeln!(out, "retired r{r}").unwrap();
        }
        let s = &self.stats;
        writeln!(out, "status: {}", self.status.name()).unwrap();
        writeln!(
            out,
            "rules: {}; over cap: {}",
            self.rules.len(),
            self.over_cap
        )
        .unwrap();
        writeln!(
            out,
            "stats: examined {}; verified {}; reductions {}; added {}; retired {}; skipped {}; deferred {}",
            s.examined, s.verified, s.reductions, s.added, s.retired, s.skipped, s.deferred
        )
        .unwrap();
        out
    }
}

/// Monomial types with a completion procedure.
trait Completable: Reducible {
    fn pairs(
        family: CheckMode,
        f: (RuleRef, &LinComb<Self>),
        g: (RuleRef, &LinComb<Self>),
        out: &mut Vec<CompositionReport<Self>>,
    );
    fn with_schema(
        family: CheckMode,
        schema: &[Poly],
        r: (RuleRef, &LinComb<Self>),
        out: &mut Vec<CompositionReport<Self>>,
    );
}

impl Completable for Word {
    fn pairs(
        family: CheckMode,
        f: (RuleRef, &Poly),
        g: (RuleRef, &Poly),
        out: &mut Vec<CompositionReport<Word>>,
    ) {
        match family {
            CheckMode::LeftIdeal => left_ideal_pair(f, g, out),
            _ => algebra_pair(f, g, out),
        }
    }

    fn with_schema(
        _: CheckMode,
        _: &[Poly],
        _: (RuleRef, &Poly),
        _: &mut Vec<CompositionReport<Word>>,
    ) {
    }
}

impl Completable for ModMonomial {
    fn pairs(
        family: CheckMode,
        f: (RuleRef, &ModElement),
        g: (RuleRef, &ModElement),
        out: &mut Vec<CompositionReport<ModMonomial>>,
    ) {
        let kind = if family == CheckMode::Pair {
            CompositionKind::RightJustified
        } else {
            CompositionKind::ModuleInclusion
        };
        module_pair(f, g, kind, out);
    }

    fn with_schema(
        family: CheckMode,
        schema: &[Poly],
        r: (RuleRef, &ModElement),
        out: &mut Vec<CompositionReport<ModMonomial>>,
    ) {
        let kind = if family == CheckMode::Pair {
            CompositionKind::MixedPair
        } else {
            CompositionKind::ModuleInclusion
        };
        for (i, s) in schema.iter().enumerate() {
            mixed_pair((RuleRef::Schema(i), s), r, kind, out);
        }
    }
}

struct Entry<M: Monomial> {
    rule: LinComb<M>,
    alive: bool,
    cert: Certificate,
}

struct Worklist<M: Completable> {
    mode: Mode,
    family: CheckMode,
    schema: Vec<Poly>,
    entries: Vec<Entry<M>>,
    active: Vec<usize>,
    rs: RuleSet<M>,
    pending: BTreeMap<(M, u64), CompositionReport<M>>,
    seq: u64,
    degree_cap: usize,
    step_cap: usize,
    stats: CompletionStats,
    added: Vec<AddedRule<M>>,
    retired: Vec<usize>,
}

impl<M: Completable> Worklist<M> {
    fn new(
        mode: Mode,
        family: CheckMode,
        schema: Vec<Poly>,
        rules: &[LinComb<M>],
        degree_cap: usize,
        step_cap: usize,
    ) -> Result<Self> {
        let rs = RuleSet::new(mode, rules.to_vec(), schema.clone())?;
        let mut wl = Worklist {
            mode,
            family,
            schema,
            entries: Vec::new(),
            active: Vec::new(),
            rs,
            pending: BTreeMap::new(),
            seq: 0,
            degree_cap,
            step_cap,
            stats: CompletionStats::default(),
            added: Vec::new(),
            retired: Vec::new(),
        };
        for (i, r) in wl.rs.rules().to_vec().into_iter().enumerate() {
            let atom = CertKey {
                rule: RuleRef::Rule(i),
                left: Word::empty(),
                right: Word::empty(),
                gen: None,
            };
            wl.entries.push(Entry {
                rule: r,
                alive: true,
                cert: BTreeMap::from([(atom, Scalar::one())]),
            });
            wl.active.push(i);
            wl.enqueue_for(i);
        }
        Ok(wl)
    }

    fn rebuild(&mut self) {
        let rules = self
            .active
            .iter()
            .map(|&i| self.entries[i].rule.clone())
            .collect();
        self.rs = RuleSet::new(self.mode, rules, self.schema.clone())
            .expect("active rules are normalized");
    }

    fn compositions_of(&self, id: usize, among: &[usize]) -> Vec<CompositionReport<M>> {
        let mut out = Vec::new();
        let new = (RuleRef::Rule(id), &self.entries[id].rule);
        for &o in among {
            let other = (RuleRef::Rule(o), &self.entries[o].rule);
            M::pairs(self.family, new, other, &mut out);
            if o != id {
                M::pairs(self.family, other, new, &mut out);
            }
        }
        M::with_schema(self.family, &self.schema, new, &mut out);
        out
    }

    fn enqueue_for(&mut self, id: usize) {
        for rep in self.compositions_of(id, &self.active.clone()) {
            if rep.w.degree() > self.degree_cap {
                self.stats.deferred += 1;
            } else {
                self.pending.insert((rep.w.clone(), self.seq), rep);
                self.seq += 1;
            }
        }
    }

    fn alive(&self, p: &Participant) -> bool {
        match p.rule {
            RuleRef::Rule(id) => self.entries[id].alive,
            RuleRef::Schema(_) => true,
        }
    }

    fn participant_cert(
        &self,
        rule: RuleRef,
        left: &Word,
        right: &Word,
        gen: Option<Gen>,
    ) -> Certificate {
        match rule {
            RuleRef::Rule(id) => cert_shift(&self.entries[id].cert, left, right),
            RuleRef::Schema(_) => BTreeMap::from([(
                CertKey {
                    rule,
                    left: left.clone(),
                    right: right.clone(),
                    gen,
                },
                Scalar::one(),
            )]),
        }
    }

    /// Maps trace positions back to rule ids and subtracts the steps.
    fn subtract_trace(&self, cert: &mut Certificate, trace: &[Step<M>]) {
        for s in trace {
            let rule = match s.rule {
                RuleRef::Rule(pos) => RuleRef::Rule(self.active[pos]),
                other => other,
            };
            let c = self.participant_cert(rule, &s.left, &s.right, s.eliminated.generator());
            cert_add(cert, &c, &-s.coeff.clone());
        }
    }

    fn examine(&mut self, rep: CompositionReport<M>) -> Result<()> {
        self.stats.examined += 1;
        let gen = rep.w.generator();
        let mut cert = self.participant_cert(rep.f.rule, &rep.f.left, &rep.f.right, gen);
        let g = self.participant_cert(rep.g.rule, &rep.g.left, &rep.g.right, gen);
        cert_add(&mut cert, &g, &-Scalar::one());
        let origin = Origin::Composition {
            kind: rep.kind,
            w: rep.w,
            f: rep.f.rule,
            g: rep.g.rule,
        };
        self.add(rep.s_poly, cert, origin)
    }

    /// Reduces `f`; a nonzero remainder becomes a new monic rule, and
    /// older rules whose leading monomial it reduces are retired and
    /// re-added in reduced form.
    fn add(&mut self, f: LinComb<M>, cert: Certificate, origin: Origin<M>) -> Result<()> {
        let mut queue = VecDeque::from([(f, cert, origin)]);
        while let Some((f, mut cert, origin)) = queue.pop_front() {
            let nf = self.rs.normal_form(&f, self.step_cap)?;
            self.stats.reductions += nf.steps();
            self.subtract_trace(&mut cert, &nf.trace);
            if nf.value.is_zero() {
                continue;
            }
            let (_, lc) = nf.value.leading_term()?;
            let inv = lc.recip();
            let rule = nf.value.scale(&inv);
            let cert: Certificate = cert.into_iter().map(|(k, v)| (k, v * &inv)).collect();
            let lead = rule.leading_monomial().unwrap().clone();
            let id = self.entries.len();
            self.entries.push(Entry {
                rule: rule.clone(),
                alive: true,
                cert: cert.clone(),
            });
            self.added.push(AddedRule {
                id,
                rule,
                origin,
                certificate: cert,
            });
            self.stats.added += 1;
            let victims: Vec<usize> = self
                .active
                .iter()
                .copied()
                .filter(|&o| {
                    self.entries[o]
                        .rule
                        .leading_monomial()
                        .unwrap()
                        .match_lead(&lead, self.mode)
                        .is_some()
                })
                .collect();
            for &v in &victims {
                self.entries[v].alive = false;
                self.retired.push(v);
                self.stats.retired += 1;
            }
            self.active.retain(|o| !victims.contains(o));
            self.active.push(id);
            self.rebuild();
            self.enqueue_for(id);
            for v in victims {
                queue.push_back((
                    self.entries[v].rule.clone(),
                    self.entries[v].cert.clone(),
                    Origin::InterReduced { from: v },
                ));
            }
        }
        Ok(())
    }

    /// Every composition among the final rules; returns the nontrivial
    /// ones within the cap and the number above it.
    fn verify(&mut self) -> Result<(Vec<CompositionReport<M>>, usize)> {
        let mut all = Vec::new();
        let active = self.active.clone();
        for (k, &id) in active.iter().enumerate() {
            let mut reps = self.compositions_of(id, &active[..=k]);
            all.append(&mut reps);
        }
        let mut over = 0;
        let mut bad = Vec::new();
        for rep in all {
            if rep.w.degree() > self.degree_cap {
                over += 1;
                continue;
            }
            self.stats.verified += 1;
            let check = is_trivial(&rep, &self.rs, self.step_cap)?;
            if check.verdict != Verdict::Trivial {
                bad.push(rep);
            }
        }
        Ok((bad, over))
    }

    fn run(mut self, original: Vec<LinComb<M>>) -> Result<CompletionResult<M>> {
        let outcome = (|| -> Result<(CompletionStatus, usize)> {
            loop {
                while let Some((_, rep)) = self.pending.pop_first() {
                    if !self.alive(&rep.f) || !self.alive(&rep.g) {
                        self.stats.skipped += 1;
                        continue;
                    }
                    self.examine(rep)?;
                }
                let (bad, over) = self.verify()?;
                if bad.is_empty() {
                    let status = if over > 0 {
                        CompletionStatus::DegreeCapped
                    } else {
                        CompletionStatus::Closed
                    };
                    return Ok((status, over));
                }
                for rep in bad {
                    self.pending.insert((rep.w.clone(), self.seq), rep);
                    self.seq += 1;
                }
            }
        })();
        let (status, over_cap) = match outcome {
            Ok(v) => v,
            Err(Error::StepCapExceeded(_)) => (CompletionStatus::StepCapped, 0),
            Err(e) => return Err(e),
        };
        Ok(CompletionResult {
            mode: self.mode,
            original,
            schema: self.schema.clone(),
            rules: self
                .active
                .iter()
                .map(|&i| self.entries[i].rule.clone())
                .collect(),
            rule_ids: self.active.clone(),
            added: self.added,
            retired: self.retired,
            status,
            over_cap,
            stats: self.stats,
        })
    }
}

fn complete<M: Completable>(
    mode: Mode,
    family: CheckMode,
    schema: Vec<Poly>,
    rules: &[LinComb<M>],
    degree_cap: usize,
    step_cap: usize,
) -> Result<CompletionResult<M>> {
    let wl = Worklist::new(mode, family, schema, rules, degree_cap, step_cap)?;
    let original = wl.rs.rules().to_vec();
    wl.run(original)
}

/// Completes a two-sided (`Algebra`) or left-ideal (`LeftIdeal`) rule set.
pub fn complete_algebra(
    rules: &[Poly],
    mode: CheckMode,
    degree_cap: usize,
    step_cap: usize,
) -> Result<CompletionResult<Word>> {
    let m = match mode {
        CheckMode::Algebra => Mode::Algebra,
        CheckMode::LeftIdeal => Mode::LeftIdeal,
        _ => {
            return Err(Error::IncompatibleMode {
                mode: mode.name(),
                shape: "algebra rule",
            })
        }
    };
    complete(m, mode, Vec::new(), rules, degree_cap, step_cap)
}

/// Completes the module rules `T` against a fixed schema `S`.
pub fn complete_module(
    schema: &[Poly],
    rules: &[ModElement],
    family: CheckMode,
    degree_cap: usize,
    step_cap: usize,
) -> Result<CompletionResult<ModMonomial>> {
    if !matches!(family, CheckMode::Module | CheckMode::Pair) {
        return Err(Error::IncompatibleMode {
            mode: family.name(),
            shape: "module rule",
        });
    }
    complete(
        Mode::Module,
        family,
        schema.to_vec(),
        rules,
        degree_cap,
        step_cap,
    )
}

/// The outcome of completing a presentation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion {
    pub mode: CheckMode,
    pub algebra: CompletionResult<Word>,
    pub module: Option<CompletionResult<ModMonomial>>,
    /// The input presentation with its rules replaced by the completed ones.
    pub presentation: Presentation,
}

impl Completion {
    /// The worst status of the phases.
    pub fn status(&self) -> CompletionStatus {
        self.module
            .as_ref()
            .map_or(self.algebra.status, |m| m.status.max(self.algebra.status))
    }

    pub fn render(&self, sig: &Signature) -> String {
        let mut out = String::new();
        match &self.module {
            None => out.push_str(&self.algebra.render(sig)),
            Some(m) => {
                out.push_str("[algebra]\n");
                out.push_str(&self.algebra.render(sig));
                out.push_str("[module]\n");
                out.push_str(&m.render(sig));
            }
        }
        writeln!(out, "completion: {}", self.status().name()).unwrap();
        out
    }
}

/// Shirshov completion. Module and pair modes complete `S` in the algebra
/// first, then `T` against the completed `S`.
pub fn shirshov_complete(
    p: &Presentation,
    mode: CheckMode,
    degree_cap: usize,
    step_cap: usize,
) -> Result<Completion> {
    let s = p.algebra().relations();
    match mode {
        CheckMode::Algebra | CheckMode::LeftIdeal => {
            if mode == CheckMode::LeftIdeal && p.as_module().is_some() {
                return Err(mode.incompatible(p));
            }
            let algebra = complete_algebra(s, mode, degree_cap, step_cap)?;
            let presentation = match p {
                Presentation::Algebra(a) => {
                    AlgebraPresentation::new(a.alphabet().clone(), algebra.rules.clone())?.into()
                }
                Presentation::Module(m) => m.with_relations(algebra.rules.clone())?.into(),
            };
            Ok(Completion {
                mode,
                algebra,
                module: None,
                presentation,
            })
        }
        CheckMode::Module | CheckMode::Pair => {
            let m = p.as_module().ok_or_else(|| mode.incompatible(p))?;
            let algebra = complete_algebra(s, CheckMode::Algebra, degree_cap, step_cap)?;
            let module = complete_module(
                &algebra.rules,
                m.module_relations(),
                mode,
                degree_cap,
                step_cap,
            )?;
            let presentation: ModulePresentation = m
                .with_relations(algebra.rules.clone())?
                .with_module_relations(module.rules.clone())?;
            Ok(Completion {
                mode,
                algebra,
                module: Some(module),
                presentation: presentation.into(),
            })
        }
    }
}

/// An ambiguity: its word and the rule occurrences `(rule, offset)`.
type AmbiguityKey = (Word, BTreeSet<(usize, usize)>);

fn rule_index(r: RuleRef) -> usize {
    match r {
        RuleRef::Rule(i) | RuleRef::Schema(i) => i,
    }
}

fn ambiguity(w: &Word, f: &Participant, g: &Participant) -> AmbiguityKey {
    (
        w.clone(),
        BTreeSet::from([
            (rule_index(f.rule), f.left.degree()),
            (rule_index(g.rule), g.left.degree()),
        ]),
    )
}

/// Verdicts of `S` in `k⟨X⟩` and of `S·X*·Y` in the double-free module.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiftReport {
    pub algebra_gsb: bool,
    pub module_gsb: bool,
    pub algebra_checked: usize,
    /// Module compositions checked, right factors included.
    pub module_checked: usize,
    /// Ambiguities whose verdicts differ between the two sides.
    pub mismatches: Vec<Word>,
}

impl LiftReport {
    pub fn agree(&self) -> bool {
        self.algebra_gsb == self.module_gsb && self.mismatches.is_empty()
    }
}

fn words_up_to(letters: u32, max_len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
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
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Checks `S` in the algebra and `S·X*·Y` (with empty `T`) in the module
/// independently and compares the verdicts ambiguity by ambiguity. For a
/// trivial module composition, the certificate is also checked after
/// inserting each right factor `z` of length `1..=sample_cap` before the
/// generator.
pub fn lift_check(
    s: &[Poly],
    letters: u32,
    gens: &[Gen],
    sample_cap: usize,
    step_cap: usize,
) -> Result<LiftReport> {
    let algebra_rs = RuleSet::algebra(s.to_vec())?;
    let s = algebra_rs.rules();
    let algebra = checked(algebra_compositions(s), &algebra_rs, step_cap)?;
    let mut alg_verdicts: BTreeMap<AmbiguityKey, bool> = BTreeMap::new();
    for r in &algebra {
        *alg_verdicts
            .entry(ambiguity(&r.w, &r.f, &r.g))
            .or_insert(true) &= r.is_trivial();
    }

    let module_rs = RuleSet::module(Vec::new(), s.to_vec())?;
    let zs = words_up_to(letters, sample_cap);
    let mut mod_verdicts: BTreeMap<AmbiguityKey, bool> = BTreeMap::new();
    let mut module_checked = 0;
    for base in schema_compositions(s, gens) {
        let key = ambiguity(&base.w.word, &base.f, &base.g);
        let (si, sj) = (&s[rule_index(base.f.rule)], &s[rule_index(base.g.rule)]);
        let gen = base.w.gen;
        let base_check = is_trivial(&base, &module_rs, step_cap)?;
        module_checked += 1;
        let mut ok = base_check.verdict == Verdict::Trivial;
        // the base certificate, with z inserted, must represent every extension
        for z in zs.iter().filter(|z| !z.is_empty()) {
            if !ok {
                break;
            }
            let w = ModMonomial::new(base.w.word.concat(z), gen);
            let s_poly = &si
                .sandwich(&base.f.left, &base.f.right.concat(z))
                .apply_to(gen)
                - &sj
                    .sandwich(&base.g.left, &base.g.right.concat(z))
                    .apply_to(gen);
            let shifted: Vec<Step<ModMonomial>> = base_check
                .certificate
                .iter()
                .map(|st| Step {
                    rule: st.rule,
                    left: st.left.clone(),
                    right: st.right.concat(z),
                    coeff: st.coeff.clone(),
                    eliminated: ModMonomial::new(st.eliminated.word.concat(z), gen),
                })
                .collect();
            module_checked += 1;
            ok &=
                module_rs.replay(&shifted) == s_poly && shifted.iter().all(|st| st.eliminated < w);
        }
        *mod_verdicts.entry(key).or_insert(true) &= ok;
    }

    let keys: BTreeSet<&AmbiguityKey> = alg_verdicts.keys().chain(mod_verdicts.keys()).collect();
    let mismatches = keys
        .into_iter()
        .filter(|k| alg_verdicts.get(*k) != mod_verdicts.get(*k))
        .map(|k| k.0.clone())
        .collect();
    Ok(LiftReport {
        algebra_gsb: alg_verdicts.values().all(|&v| v),
        module_gsb: mod_verdicts.values().all(|&v| v),
        algebra_checked: algebra.len(),
        module_checked,
        mismatches,
    })
}
