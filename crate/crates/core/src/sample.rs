//! Random presentations for property tests.

use crate::poly::Poly;
use crate::scalar::int;
use crate::word::Word;
use rand::Rng;

/// A word of length `len` over `letters` letters.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, letters: u32, len: usize) -> Word {
    Word::new(
        (0..len)
            .map(|_| rng.gen_range(0..letters))
            .collect::<Vec<_>>(),
    )
}

/// Every word of length exactly `len`, ascending.
pub fn all_words(letters: u32, len: usize) -> Vec<Word> {
    let mut layer = vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(layer.len() * letters as usize);
        for u in &layer {
            for l in 0..letters {
                let mut v = u.clone();
                v.push(l);
                next.push(v);
            }
        }
        layer = next;
    }
    layer.sort();
    layer
}

/// Up to `max_rules` monic relations with leading degree in
/// `1..=max_degree`, each carrying up to two lower terms with small
/// nonzero integer coefficients.
pub fn random_relations<R: Rng + ?Sized>(
    rng: &mut R,
    letters: u32,
    max_rules: usize,
    max_degree: usize,
) -> Vec<Poly> {
    let count = rng.gen_range(1..=max_rules);
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let len = rng.gen_range(1..=max_degree);
        let lead = random_word(rng, letters, len);
        let mut f = Poly::monomial(lead.clone());
        for _ in 0..rng.gen_range(0..=2) {
            let len = rng.gen_range(0..=lead.degree());
            let w = random_word(rng, letters, len);
            let mut c = rng.gen_range(-2i64..=2);
            if c == 0 {
                c = 1;
            }
            if w < lead {
                f = &f + &Poly::term(int(c), w);
            }
        }
        out.push(f);
    }
    out
}
