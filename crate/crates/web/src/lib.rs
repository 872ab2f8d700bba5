//! Browser bindings. Every entry point takes plain values and returns a
//! JSON string, so the page needs no glue beyond `JSON.parse`.

use gsmod::corpus::{
    conformal_presentation, conformal_verma, sl2_presentation, verma_presentation, CartanData,
    ConformalConfig,
};
use gsmod::enumerate::{red_words_algebra, red_words_module};
use gsmod::scalar::Scalar;
use gsmod::{
    is_gsb, parse_expr, red_words, Basis, CheckMode, Expr, Presentation, DEFAULT_STEP_CAP,
};
use serde::Serialize;
use wasm_bindgen::prelude::wasm_bindgen;

const MAX_DEGREE: usize = 8;

#[derive(Debug, Serialize, PartialEq)]
pub struct Sl2Reduction {
    pub input: String,
    pub normal_form: String,
    pub steps: usize,
    pub gsb: bool,
    pub basis: Vec<String>,
}

#[derive(Debug, Serialize, PartialEq)]
pub struct WeightCounts {
    pub cartan: String,
    pub rank: usize,
    pub counts: Vec<usize>,
    pub words: Vec<Vec<String>>,
}

#[derive(Debug, Serialize, PartialEq)]
pub struct ConformalWindow {
    pub alphabet: Vec<String>,
    pub relations: usize,
    pub interior: Vec<String>,
    pub boundary: usize,
}

#[derive(Serialize)]
struct Failure {
    error: String,
}

fn json<T: Serialize>(r: Result<T, String>) -> String {
    match r {
        Ok(v) => serde_json::to_string(&v),
        Err(error) => serde_json::to_string(&Failure { error }),
    }
    .expect("plain structs serialize")
}

fn scalar(s: &str) -> Result<Scalar, String> {
    s.trim()
        .parse::<Scalar>()
        .map_err(|_| format!("`{s}` is not a rational number"))
}

/// Normal form of `expr` in the finite-dimensional sl2 module with
/// generator `v0` killed by `y^(m+1)`.
pub fn sl2_reduce(m: usize, lambda: &str, expr: &str) -> Result<Sl2Reduction, String> {
    if m > MAX_DEGREE {
        return Err(format!("m is limited to {MAX_DEGREE}"));
    }
    let module = sl2_presentation(m, scalar(lambda)?);
    let p: Presentation = module.clone().into();
    let sig = p.signature();
    let e = |e: gsmod::Error| e.to_string();
    let (normal_form, steps) = match parse_expr(expr, &sig).map_err(e)? {
        Expr::Module(f) => {
            let nf = module
                .rule_set()
                .normal_form(&f, DEFAULT_STEP_CAP)
                .map_err(e)?;
            (nf.value.display(&sig).to_string(), nf.trace.len())
        }
        Expr::Algebra(f) => {
            let nf = module
                .algebra()
                .rule_set()
                .normal_form(&f, DEFAULT_STEP_CAP)
                .map_err(e)?;
            (nf.value.display(&sig).to_string(), nf.trace.len())
        }
    };
    let gsb = is_gsb(&p, CheckMode::Pair, DEFAULT_STEP_CAP)
        .map_err(e)?
        .is_gsb();
    let Basis::Module(b) = red_words(&p, CheckMode::Pair, m + 1).map_err(e)? else {
        unreachable!("module presentations give module bases")
    };
    let basis = b
        .words
        .concat()
        .iter()
        .map(|w| w.display(&sig).to_string())
        .collect();
    Ok(Sl2Reduction {
        input: expr.to_string(),
        normal_form,
        steps,
        gsb,
        basis,
    })
}

/// Reduced words of a Kac-Moody Verma module by degree.
pub fn verma_weight_counts(
    cartan: &str,
    weights: &str,
    max_degree: usize,
) -> Result<WeightCounts, String> {
    if max_degree > MAX_DEGREE {
        return Err(format!("degree is limited to {MAX_DEGREE}"));
    }
    let e = |e: gsmod::Error| e.to_string();
    let c = CartanData::of_type(cartan).map_err(e)?;
    let weights: Vec<Scalar> = if weights.trim().is_empty() {
        vec![Scalar::from_integer(0.into()); c.rank()]
    } else {
        weights.split(',').map(scalar).collect::<Result<_, _>>()?
    };
    let verma = verma_presentation(&c, &weights, 6, DEFAULT_STEP_CAP).map_err(e)?;
    let sig = verma.signature();
    let letters = verma.alphabet().len() as u32;
    let report = red_words_module(&verma.rule_set(), letters, &verma.generators(), max_degree);
    Ok(WeightCounts {
        cartan: cartan.to_string(),
        rank: c.rank(),
        counts: report.counts(),
        words: report
            .words
            .iter()
            .map(|ws| ws.iter().map(|w| w.display(&sig).to_string()).collect())
            .collect(),
    })
}

/// Reduced words of degree at most `max_degree` in the coefficient algebra
/// of a conformal algebra, restricted to the interior of the window.
pub fn conformal_reduced(
    symbols: &str,
    locality: u32,
    lo: i64,
    hi: i64,
    max_degree: usize,
    verma: bool,
) -> Result<ConformalWindow, String> {
    if max_degree > 4 || hi - lo > 12 {
        return Err("window or degree too large for the demo".into());
    }
    let e = |e: gsmod::Error| e.to_string();
    let cfg =
        ConformalConfig::new(symbols.split(',').map(str::trim), locality, lo, hi).map_err(e)?;
    let alph = cfg.alphabet();
    let letters = alph.len() as u32;
    let (relations, words): (usize, Vec<gsmod::Word>) = if verma {
        let m = conformal_verma(&cfg).map_err(e)?;
        let r = red_words_module(&m.rule_set(), letters, &m.generators(), max_degree);
        (
            m.relations().len() + m.module_relations().len(),
            r.words.concat().into_iter().map(|x| x.word).collect(),
        )
    } else {
        let a = conformal_presentation(&cfg).map_err(e)?;
        let r = red_words_algebra(&a.rule_set(), letters, max_degree);
        (a.relations().len(), r.words.concat())
    };
    let (inside, outside): (Vec<_>, Vec<_>) = words.iter().partition(|w| cfg.is_interior(w));
    Ok(ConformalWindow {
        relations,
        interior: inside
            .into_iter()
            .map(|w| w.display(&alph).to_string())
            .collect(),
        boundary: outside.len(),
        alphabet: alph.symbols().to_vec(),
    })
}

#[wasm_bindgen(js_name = sl2Reduce)]
pub fn sl2_reduce_js(m: usize, lambda: &str, expr: &str) -> String {
    json(sl2_reduce(m, lambda, expr))
}

#[wasm_bindgen(js_name = vermaWeightCounts)]
pub fn verma_weight_counts_js(cartan: &str, weights: &str, max_degree: usize) -> String {
    json(verma_weight_counts(cartan, weights, max_degree))
}

#[wasm_bindgen(js_name = conformalReduced)]
pub fn conformal_reduced_js(
    symbols: &str,
    locality: u32,
    lo: i32,
    hi: i32,
    max_degree: usize,
    verma: bool,
) -> String {
    json(conformal_reduced(
        symbols, locality, lo as i64, hi as i64, max_degree, verma,
    ))
}
