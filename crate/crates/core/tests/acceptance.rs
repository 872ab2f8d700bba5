//! Acceptance criteria, one line each. Exits nonzero if any criterion fails.

use gsmod::corpus::sl2::{H, X, Y};
use gsmod::corpus::{
    conformal_presentation, conformal_verma, kac_moody_presentation, negative_part,
    satisfies_locality_bound, sl2_presentation, sl2_vector, verma_presentation, CartanData,
    ConformalConfig,
};
use gsmod::enumerate::{red_words_algebra, red_words_module};
use gsmod::sample::{all_words, random_relations, random_word};
use gsmod::scalar::int;
use gsmod::*;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::process::ExitCode;
use std::time::Instant;

type Outcome = std::result::Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn e2s(e: Error) -> String {
    e.to_string()
}

fn algebra2(rels: Vec<Poly>) -> Presentation {
    AlgebraPresentation::new(Alphabet::algebra(["x", "y"]).unwrap(), rels)
        .unwrap()
        .into()
}

fn sl2_regression() -> Outcome {
    for m in 0..=5usize {
        let pres: Presentation = sl2_presentation(m, int(m as i64)).into();
        let report = is_gsb(&pres, CheckMode::Pair, DEFAULT_STEP_CAP).map_err(e2s)?;
        ensure(report.is_gsb(), || format!("m={m}: {}", report.summary()))?;
        let cap = m + 2;
        let Basis::Module(b) = red_words(&pres, CheckMode::Pair, cap).map_err(e2s)? else {
            return Err("expected a module basis".into());
        };
        let expected: Vec<ModMonomial> = (0..=m)
            .map(|i| ModMonomial::new(Word::power(Y, i), 0))
            .collect();
        ensure(b.words.concat() == expected, || {
            format!("m={m}: Red = {:?}", b.words)
        })?;
        let oracle =
            dimension_oracle(&pres, CheckMode::Module, cap, DEFAULT_BUDGET).map_err(e2s)?;
        let red: Vec<i64> = b.counts().iter().map(|&c| c as i64).collect();
        ensure(oracle == red, || {
            format!("m={m}: red {red:?} vs oracle {oracle:?}")
        })?;
    }
    Ok("m = 0..5: pair check passes, Red = {y^i v0 : i <= m}, oracle agrees per degree".into())
}

fn action_identities() -> Outcome {
    let (m, lambda) = (4usize, 4i64);
    let rs = sl2_presentation(m, int(lambda)).rule_set();
    let nf = |e: &ModElement| {
        rs.normal_form(e, DEFAULT_STEP_CAP)
            .map(|n| n.value)
            .map_err(e2s)
    };
    let v = |i: i64| {
        if i < 0 {
            ModElement::zero()
        } else {
            sl2_vector(i as usize)
        }
    };
    let mut checked = 0;
    for i in 0..=m as i64 {
        let cases = [
            (H, v(i).scale(&int(lambda - 2 * i)), "h"),
            (Y, v(i + 1).scale(&int(i + 1)), "y"),
            (X, v(i - 1).scale(&int(lambda - i + 1)), "x"),
        ];
        for (g, rhs, name) in cases {
            let lhs = nf(&act(&Poly::var(g), &v(i)))?;
            let rhs = nf(&rhs)?;
            ensure(lhs == rhs, || format!("{name}·v_{i}: {lhs:?} != {rhs:?}"))?;
            checked += 1;
        }
    }
    Ok(format!(
        "m = λ = 4: {checked} identities for h, y, x on v_0..v_4 hold exactly"
    ))
}

fn lambda_forcing() -> Outcome {
    let mut parts = Vec::new();
    for (m, lambda) in [(2usize, 2i64), (2, 5)] {
        let full = sl2_presentation(m, int(lambda));
        let t: Vec<ModElement> = full.module_relations()[..2].to_vec();
        let rs = full.with_module_relations(t).map_err(e2s)?.rule_set();
        let lhs = rs
            .normal_form(&act(&Poly::var(X), &sl2_vector(m + 1)), DEFAULT_STEP_CAP)
            .map_err(e2s)?
            .value;
        let rhs = sl2_vector(m).scale(&int(lambda - m as i64));
        ensure(lhs == rhs, || {
            format!("(m, λ) = ({m}, {lambda}): {lhs:?} != {rhs:?}")
        })?;
        parts.push(format!("({m},{lambda}) -> {}·v_{m}", lambda - m as i64));
    }
    Ok(format!("x·v_(m+1) = (λ - m)·v_m: {}", parts.join(", ")))
}

fn kac_moody_a2() -> Outcome {
    let c = CartanData::of_type("A2").map_err(e2s)?;
    let km: Presentation = kac_moody_presentation(&c).into();
    let done = shirshov_complete(&km, CheckMode::Algebra, 6, DEFAULT_STEP_CAP).map_err(e2s)?;
    ensure(done.status() == CompletionStatus::Closed, || {
        format!("completion {}", done.status().name())
    })?;
    let gsb = is_gsb(&done.presentation, CheckMode::Algebra, DEFAULT_STEP_CAP).map_err(e2s)?;
    ensure(gsb.is_gsb(), || format!("completed set: {}", gsb.summary()))?;
    let verma: Presentation = verma_presentation(&c, &[int(1), int(1)], 6, DEFAULT_STEP_CAP)
        .map_err(e2s)?
        .into();
    let pair = is_gsb(&verma, CheckMode::Pair, DEFAULT_STEP_CAP).map_err(e2s)?;
    ensure(pair.is_gsb(), || {
        format!("Verma pair check: {}", pair.summary())
    })?;
    let expected = vec![1usize, 2, 4, 6, 9, 12];
    let neg = shirshov_complete(
        &negative_part(&c).into(),
        CheckMode::Algebra,
        6,
        DEFAULT_STEP_CAP,
    )
    .map_err(e2s)?;
    ensure(neg.status() == CompletionStatus::Closed, || {
        "negative part did not close".into()
    })?;
    let neg_red = red_words(&neg.presentation, CheckMode::Algebra, 5)
        .map_err(e2s)?
        .counts();
    ensure(neg_red == expected, || {
        format!("negative-part Red counts {neg_red:?}")
    })?;
    let neg_oracle =
        dimension_oracle(&neg.presentation, CheckMode::Algebra, 5, DEFAULT_BUDGET).map_err(e2s)?;
    ensure(neg_oracle == [1, 2, 4, 6, 9, 12], || {
        format!("negative-part oracle {neg_oracle:?}")
    })?;
    let verma_red = red_words(&verma, CheckMode::Pair, 5).map_err(e2s)?.counts();
    ensure(verma_red == expected, || {
        format!("Verma Red counts {verma_red:?}")
    })?;
    let verma_oracle =
        dimension_oracle(&verma, CheckMode::Module, 5, DEFAULT_BUDGET).map_err(e2s)?;
    ensure(verma_oracle == [1, 2, 4, 6, 9, 12], || {
        format!("Verma oracle {verma_oracle:?}")
    })?;
    Ok(format!(
        "completion closed at cap 6 ({} rules, {} added); Verma pair check passes; counts 1,2,4,6,9,12 from Red and oracle",
        done.algebra.rules.len(),
        done.algebra.added.len()
    ))
}

fn conformal() -> Outcome {
    let mut summary = Vec::new();
    for n in [1u32, 2] {
        let cfg = ConformalConfig::new(["a"], n, -4, 3).map_err(e2s)?;
        let alg = conformal_presentation(&cfg).map_err(e2s)?;
        for r in alg.relations() {
            let lead = r.leading_monomial().unwrap();
            let ok =
                lead.degree() == 2 && cfg.is_leading_pair(lead.letters()[0], lead.letters()[1]);
            ensure(ok, || {
                format!("N={n}: leading word {:?} breaks the law", lead)
            })?;
        }
        let letters = alg.alphabet().len() as u32;
        let red = red_words_algebra(&alg.rule_set(), letters, 3);
        let verma = conformal_verma(&cfg).map_err(e2s)?;
        let vred = red_words_module(&verma.rule_set(), letters, &verma.generators(), 3);
        let mut interior_total = 0;
        for d in 0..=3 {
            let interior: Vec<Word> = all_words(letters, d)
                .into_iter()
                .filter(|w| cfg.is_interior(w))
                .collect();
            let expected: Vec<&Word> = interior
                .iter()
                .filter(|w| satisfies_locality_bound(&cfg, w))
                .collect();
            let got: Vec<&Word> = red.words[d].iter().filter(|w| cfg.is_interior(w)).collect();
            ensure(got == expected, || {
                format!("N={n}, degree {d}: interior Red differs from the bound")
            })?;
            let negative_tail = |w: &Word| w.letters().last().is_none_or(|&l| cfg.decode(l).1 < 0);
            let vexpected: Vec<&Word> = expected
                .iter()
                .copied()
                .filter(|w| negative_tail(w))
                .collect();
            let vgot: Vec<&Word> = vred.words[d]
                .iter()
                .map(|m| &m.word)
                .filter(|w| cfg.is_interior(w))
                .collect();
            ensure(vgot == vexpected, || {
                format!("N={n}, degree {d}: interior Verma Red differs")
            })?;
            interior_total += expected.len();
        }
        summary.push(format!(
            "N={n}: {} relations, {interior_total} interior words",
            alg.relations().len()
        ));
    }
    Ok(format!(
        "leading-term law, locality-bound set equality, Verma n_k < 0; {}",
        summary.join("; ")
    ))
}

fn lift_property() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x3410);
    let (mut yes, mut no) = (0, 0);
    for k in 0..200 {
        let rels = random_relations(&mut rng, 2, 3, 3);
        let r = lift_check(&rels, 2, &[0], 2, DEFAULT_STEP_CAP).map_err(e2s)?;
        ensure(r.agree(), || format!("case {k}: {r:?}"))?;
        if r.algebra_gsb {
            yes += 1;
        } else {
            no += 1;
        }
    }
    Ok(format!(
        "200 random presentations agree ({yes} bases, {no} non-bases)"
    ))
}

fn reduced_words_property() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x1003);
    let (mut closed, mut attempts) = (0, 0);
    while closed < 100 {
        attempts += 1;
        ensure(attempts <= 2000, || {
            format!("only {closed} closed completions in 2000 attempts")
        })?;
        let rels = random_relations(&mut rng, 2, 3, 3);
        let c = complete_algebra(&rels, CheckMode::Algebra, 5, 500_000).map_err(e2s)?;
        if c.status != CompletionStatus::Closed {
            continue;
        }
        closed += 1;
        let x = cross_check(
            &algebra2(c.rules),
            CheckMode::Algebra,
            5,
            DEFAULT_BUDGET,
            DEFAULT_STEP_CAP,
        )
        .map_err(e2s)?;
        let red: Vec<i64> = x.red.iter().map(|&r| r as i64).collect();
        ensure(x.gsb && red == x.oracle, || {
            format!("closed case {closed}: {x:?}")
        })?;
    }
    let (mut non_gsb, mut strict) = (0, 0);
    while non_gsb < 50 {
        let rels = random_relations(&mut rng, 2, 3, 3);
        let x = cross_check(
            &algebra2(rels),
            CheckMode::Algebra,
            5,
            DEFAULT_BUDGET,
            DEFAULT_STEP_CAP,
        )
        .map_err(e2s)?;
        if x.gsb {
            continue;
        }
        non_gsb += 1;
        ensure(x.consistent(), || {
            format!("non-basis case {non_gsb}: {x:?}")
        })?;
        strict += x.strict() as usize;
    }
    ensure(strict > 0, || {
        "no strict inequality among 50 non-bases".into()
    })?;
    Ok(format!(
        "100 closed completions ({attempts} attempts) match the oracle; 50 non-bases dominate it, {strict} strictly"
    ))
}

fn random_mod_element(rng: &mut ChaCha8Rng, letters: u32, gens: u32) -> ModElement {
    let terms = (0..rng.gen_range(1..=4)).map(|_| {
        let len = rng.gen_range(0..=5);
        let w = random_word(rng, letters, len);
        (
            int(rng.gen_range(-3..=3)),
            ModMonomial::new(w, rng.gen_range(0..gens)),
        )
    });
    ModElement::from_terms(terms)
}

fn random_poly(rng: &mut ChaCha8Rng, letters: u32) -> Poly {
    let terms = (0..rng.gen_range(1..=4)).map(|_| {
        let len = rng.gen_range(0..=5);
        (int(rng.gen_range(-3..=3)), random_word(rng, letters, len))
    });
    Poly::from_terms(terms)
}

fn shuffled<M: rewrite::Reducible>(rs: &RuleSet<M>, rng: &mut ChaCha8Rng) -> RuleSet<M> {
    let mut r: Vec<usize> = (0..rs.rules().len()).collect();
    let mut s: Vec<usize> = (0..rs.schema().len()).collect();
    r.shuffle(rng);
    s.shuffle(rng);
    rs.reordered(&r, &s)
}

fn confluence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x0c0f);
    let sl2 = sl2_presentation(3, int(3)).rule_set();
    let c = CartanData::of_type("A2").map_err(e2s)?;
    let km = shirshov_complete(
        &kac_moody_presentation(&c).into(),
        CheckMode::Algebra,
        6,
        DEFAULT_STEP_CAP,
    )
    .map_err(e2s)?;
    let km_rs = km.algebra.rule_set();
    let verma = verma_presentation(&c, &[int(1), int(1)], 6, DEFAULT_STEP_CAP)
        .map_err(e2s)?
        .rule_set();
    for k in 0..100 {
        let f = random_mod_element(&mut rng, 3, 1);
        let a = sl2.normal_form(&f, DEFAULT_STEP_CAP).map_err(e2s)?.value;
        let b = shuffled(&sl2, &mut rng)
            .normal_form(&f, DEFAULT_STEP_CAP)
            .map_err(e2s)?
            .value;
        ensure(a == b, || format!("sl2 element {k} depends on rule order"))?;
        let g = random_poly(&mut rng, 6);
        let a = km_rs.normal_form(&g, DEFAULT_STEP_CAP).map_err(e2s)?.value;
        let b = shuffled(&km_rs, &mut rng)
            .normal_form(&g, DEFAULT_STEP_CAP)
            .map_err(e2s)?
            .value;
        ensure(a == b, || format!("A2 element {k} depends on rule order"))?;
        let f = random_mod_element(&mut rng, 6, 1);
        let a = verma.normal_form(&f, DEFAULT_STEP_CAP).map_err(e2s)?.value;
        let b = shuffled(&verma, &mut rng)
            .normal_form(&f, DEFAULT_STEP_CAP)
            .map_err(e2s)?
            .value;
        ensure(a == b, || {
            format!("A2 Verma element {k} depends on rule order")
        })?;
    }
    Ok("100 random elements each for sl2, A2 and the A2 Verma module: normal forms independent of rule order".into())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("sl2 regression", sl2_regression),
        ("sl2 action identities", action_identities),
        ("lambda = m forcing", lambda_forcing),
        ("Kac-Moody A2", kac_moody_a2),
        ("conformal coefficient algebra", conformal),
        ("lift equivalence", lift_property),
        ("reduced words vs oracle", reduced_words_property),
        ("confluence", confluence),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS {} {name}: {detail} [{secs:.2}s]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {} {name}: {why} [{secs:.2}s]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
