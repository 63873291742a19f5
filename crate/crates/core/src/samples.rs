//! Sample generators for the law checkers: exhaustive enumerations over a
//! finite alphabet plus seeded random data.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::indicators::Indicator;
use crate::inscriptions::Pairing;
use crate::ring::{Coefficient, RingMode};
use crate::words::{Alphabet, Phrase, Word};

/// Non-empty words of length at most `max_len`.
pub fn nonempty_words(alphabet: &Alphabet, max_len: usize) -> Vec<Word> {
    alphabet.words_up_to(max_len).into_iter().skip(1).collect()
}

/// All phrases with at most `max_letters` letters in total and at most
/// `max_words` words, the empty phrase included. With `strict`, every word
/// is non-empty.
pub fn phrases(alphabet: &Alphabet, max_letters: usize, max_words: usize, strict: bool) -> Vec<Phrase> {
    let by_len: Vec<Vec<Word>> = (0..=max_letters).map(|n| alphabet.words_of_length(n)).collect();
    let mut out = Vec::new();
    fn go(
        by_len: &[Vec<Word>],
        budget: usize,
        words_left: usize,
        strict: bool,
        acc: &mut Vec<Word>,
        out: &mut Vec<Phrase>,
    ) {
        out.push(Phrase::from_words(acc.clone()));
        if words_left == 0 {
            return;
        }
        let shortest = usize::from(strict);
        for n in shortest..=budget {
            for w in &by_len[n] {
                acc.push(w.clone());
                go(by_len, budget - n, words_left - 1, strict, acc, out);
                acc.pop();
            }
        }
    }
    go(&by_len, max_letters, max_words, strict, &mut Vec::new(), &mut out);
    out.sort();
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random word of length `len`.
pub fn random_word(alphabet: &Alphabet, len: usize, rng: &mut impl Rng) -> Word {
    Word::from_letters(
        (0..len)
            .map(|_| alphabet.letters().choose(rng).expect("non-empty alphabet").clone())
            .collect(),
    )
}

/// A pairing with every value drawn uniformly from `lo..=hi`.
pub fn random_pairing(alphabet: &Alphabet, lo: i64, hi: i64, ring: RingMode, rng: &mut impl Rng) -> Result<Pairing> {
    let letters = alphabet.letters();
    let mut entries = Vec::new();
    for a in letters {
        for b in letters {
            entries.push((a.clone(), b.clone(), Coefficient::from_i64(ring, rng.gen_range(lo..=hi))));
        }
    }
    Pairing::from_table(ring, entries)
}

/// A table indicator with a value from `lo..=hi` on each of `support`.
pub fn random_indicator(support: &[Word], lo: i64, hi: i64, ring: RingMode, rng: &mut impl Rng) -> Indicator<Word> {
    let entries: Vec<(Word, Coefficient)> = support
        .iter()
        .map(|w| (w.clone(), Coefficient::from_i64(ring, rng.gen_range(lo..=hi))))
        .collect();
    Indicator::table(ring, entries).expect("one ring")
}
