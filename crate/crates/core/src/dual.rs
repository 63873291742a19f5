//! Products dual to the phrase comultiplications.
//!
//! `p ∘ q` is the phrase combination whose coefficient on `r` equals the
//! coefficient of `p ⊗ q` in `Δ(r)`. Both products here are built
//! directly from the shape of the coproduct terms rather than by searching
//! over candidate phrases.

use crate::element::{ModuleElement, Tensor};
use crate::error::{Error, Result};
use crate::inscriptions::Pairing;
use crate::ring::{Coefficient, RingMode};
use crate::stable::StableSet;
use crate::words::{Letter, Phrase, Word};

fn require_strict(p: &Phrase, op: &'static str) -> Result<()> {
    if p.is_strict() {
        Ok(())
    } else {
        Err(Error::NonStrictPhrase {
            op,
            phrase: p.to_string(),
        })
    }
}

/// Calls `visit` with every way of writing `y = x_1 ⋯ x_{parts}` where the
/// pieces flagged in `nonempty` must have at least one letter.
fn compositions(y: &Word, nonempty: &[bool], visit: &mut impl FnMut(&[Word])) {
    fn go(y: &Word, start: usize, nonempty: &[bool], acc: &mut Vec<Word>, visit: &mut impl FnMut(&[Word])) {
        let n = y.len();
        let u = acc.len();
        if u + 1 == nonempty.len() {
            if !(nonempty[u] && start > n) {
                acc.push(y.slice(start, n + 1));
                visit(acc);
                acc.pop();
            }
            return;
        }
        let first = if nonempty[u] { start + 1 } else { start };
        for end in first..=n + 1 {
            acc.push(y.slice(start, end));
            go(y, end, nonempty, acc, visit);
            acc.pop();
        }
    }
    go(y, 1, nonempty, &mut Vec::new(), visit);
}

/// `p ∗ y = Σ x_1 w_1 x_2 ⋯ w_k x_{k+1}` over `y = x_1 ⋯ x_{k+1}` with the
/// inner pieces `x_2, ..., x_k` non-empty; zero if some `w_i ∉ L`. For
/// `y = φ` this is `w_1` when `k = 1` and zero otherwise.
pub fn phrase_star(p: &Phrase, y: &Word, l: &StableSet, ring: RingMode) -> Result<ModuleElement<Word>> {
    require_strict(p, "phrase_star")?;
    let mut out = ModuleElement::zero(ring);
    let k = p.len();
    if y.is_empty() {
        if k == 1 {
            out.add_int(p.words()[0].clone(), 1);
        }
        return Ok(out);
    }
    if k == 0 {
        out.add_int(y.clone(), 1);
        return Ok(out);
    }
    if !p.words().iter().all(|w| l.contains(w)) {
        return Ok(out);
    }
    let nonempty: Vec<bool> = (0..=k).map(|u| u != 0 && u != k).collect();
    compositions(y, &nonempty, &mut |xs| {
        let mut letters = xs[0].letters().to_vec();
        for (w, x) in p.words().iter().zip(&xs[1..]) {
            letters.extend_from_slice(w.letters());
            letters.extend_from_slice(x.letters());
        }
        out.add_int(Word::from_letters(letters), 1);
    });
    Ok(out)
}

/// All ways to write `p` as `t` consecutive, possibly empty, phrases.
fn splittings(p: &Phrase, t: usize) -> Vec<Vec<Phrase>> {
    fn go(words: &[Word], t: usize, acc: &mut Vec<Phrase>, out: &mut Vec<Vec<Phrase>>) {
        if t == 1 {
            acc.push(Phrase::from_words(words.to_vec()));
            out.push(acc.clone());
            acc.pop();
            return;
        }
        for cut in 0..=words.len() {
            acc.push(Phrase::from_words(words[..cut].to_vec()));
            go(&words[cut..], t - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(p.words(), t, &mut Vec::new(), &mut out);
    out
}

/// All length-`t` sequences obtained from the words of `q` by inserting
/// empty words.
fn insertions(q: &Phrase, t: usize) -> Vec<Vec<Word>> {
    fn go(words: &[Word], t: usize, acc: &mut Vec<Word>, out: &mut Vec<Vec<Word>>) {
        if t == 0 {
            if words.is_empty() {
                out.push(acc.clone());
            }
            return;
        }
        if t > words.len() {
            acc.push(Word::empty());
            go(words, t - 1, acc, out);
            acc.pop();
        }
        if let Some((first, rest)) = words.split_first() {
            acc.push(first.clone());
            go(rest, t - 1, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    go(q.words(), t, &mut Vec::new(), &mut out);
    out
}

/// Turns a product of word combinations into a phrase combination.
fn phrase_product_of(factors: &[ModuleElement<Word>], ring: RingMode) -> Result<ModuleElement<Phrase>> {
    let mut out = ModuleElement::unit(ring);
    for f in factors {
        out = out.checked_mul(&f.map_basis(|w| Phrase::single(w.clone())))?;
    }
    Ok(out)
}

/// `p ∘_L q = Σ_{t ≥ 1} Σ Π_i p_i ∗ y_i` over splittings `p = p_1 ⋯ p_t`
/// and sequences `(y_1, ..., y_t)` obtained from `q` by inserting empty
/// words; `1` is a two-sided unit.
pub fn dual_product_l(p: &Phrase, q: &Phrase, l: &StableSet, ring: RingMode) -> Result<ModuleElement<Phrase>> {
    require_strict(p, "dual_product_L")?;
    require_strict(q, "dual_product_L")?;
    if p.is_empty() {
        return Ok(ModuleElement::basis(q.clone(), ring));
    }
    if q.is_empty() {
        return Ok(ModuleElement::basis(p.clone(), ring));
    }
    let mut out = ModuleElement::zero(ring);
    for t in 1..=p.len() + q.len() {
        let ys = insertions(q, t);
        for ps in splittings(p, t) {
            for y in &ys {
                if ps.iter().zip(y).any(|(pi, yi)| pi.is_empty() && yi.is_empty()) {
                    continue;
                }
                let factors = ps
                    .iter()
                    .zip(y)
                    .map(|(pi, yi)| phrase_star(pi, yi, l, ring))
                    .collect::<Result<Vec<_>>>()?;
                if factors.iter().any(ModuleElement::is_zero) {
                    continue;
                }
                out = out.checked_add(&phrase_product_of(&factors, ring)?)?;
            }
        }
    }
    Ok(out)
}

/// `(w_1|...|w_k) ↦ Σ_i (w_1|...|w_i) ⊗ (w_{i+1}|...|w_k)`.
pub fn deconcat(p: &Phrase, ring: RingMode) -> ModuleElement<Tensor<Phrase, Phrase>> {
    let words = p.words();
    ModuleElement::from_int_terms(
        ring,
        (0..=words.len()).map(|i| {
            (
                Tensor(Phrase::from_words(words[..i].to_vec()), Phrase::from_words(words[i..].to_vec())),
                1,
            )
        }),
    )
}

/// Every word `x_1 a_1 w_1 b_1 x_2 ⋯ a_k w_k b_k x_{k+1}` with
/// `y = x_1 ⋯ x_{k+1}` and `(a_u, b_u)` in the support of `μ`, weighted by
/// `Π μ(a_u, b_u)`: the words with an inscription whose inner words are
/// `ws` and whose remainder is `y`.
fn inscribe(ws: &[Word], y: &Word, support: &[(Letter, Letter, Coefficient)], ring: RingMode) -> ModuleElement<Word> {
    let mut out = ModuleElement::zero(ring);
    let k = ws.len();
    let nonempty = vec![false; k + 1];
    compositions(y, &nonempty, &mut |xs| {
        let mut partial: Vec<(Vec<Letter>, Coefficient)> = vec![(xs[0].letters().to_vec(), Coefficient::one(ring))];
        for (w, x) in ws.iter().zip(&xs[1..]) {
            let mut next = Vec::with_capacity(partial.len() * support.len());
            for (letters, c) in &partial {
                for (a, b, m) in support {
                    let mut v = letters.clone();
                    v.push(a.clone());
                    v.extend_from_slice(w.letters());
                    v.push(b.clone());
                    v.extend_from_slice(x.letters());
                    next.push((v, c * m));
                }
            }
            partial = next;
        }
        for (letters, c) in partial {
            out.add_term(Word::from_letters(letters), c);
        }
    });
    out
}

/// `p ∘_μ q`, the product dual to `Δ_μ`; `μ` must have finite support.
///
/// Each word `r_i` of a contributing phrase either appears whole on the
/// left (`r_i ⊗ 1`) and consumes one word of `p`, or carries an
/// inscription whose inner words are the next `k ≥ 0` words of `p` and
/// whose remainder is the next word of `q`.
pub fn dual_product_mu(p: &Phrase, q: &Phrase, mu: &Pairing) -> Result<ModuleElement<Phrase>> {
    let support = mu.support()?;
    let ring = mu.ring();
    let (pw, qw) = (p.words(), q.words());
    // memo[i][j] holds the product built from pw[i..] and qw[j..].
    let mut memo: Vec<Vec<Option<ModuleElement<Phrase>>>> = vec![vec![None; qw.len() + 1]; pw.len() + 1];
    for i in (0..=pw.len()).rev() {
        for j in (0..=qw.len()).rev() {
            let value = if i == pw.len() && j == qw.len() {
                ModuleElement::unit(ring)
            } else {
                let mut acc = ModuleElement::zero(ring);
                if i < pw.len() {
                    let head = ModuleElement::basis(Phrase::single(pw[i].clone()), ring);
                    let tail = memo[i + 1][j].as_ref().expect("filled");
                    acc = acc.checked_add(&head.checked_mul(tail)?)?;
                }
                if j < qw.len() {
                    for k in 0..=pw.len() - i {
                        let head = inscribe(&pw[i..i + k], &qw[j], &support, ring).map_basis(|w| Phrase::single(w.clone()));
                        if head.is_zero() {
                            continue;
                        }
                        let tail = memo[i + k][j + 1].as_ref().expect("filled");
                        acc = acc.checked_add(&head.checked_mul(tail)?)?;
                    }
                }
                acc
            };
            memo[i][j] = Some(value);
        }
    }
    Ok(memo[0][0].take().expect("filled"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Alphabet;

    const Z: RingMode = RingMode::Integer;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Phrase {
        s.parse().unwrap()
    }

    fn words(terms: &[(&str, i64)]) -> ModuleElement<Word> {
        ModuleElement::from_int_terms(Z, terms.iter().map(|(s, n)| (w(s), *n)))
    }

    fn phrases(terms: &[(&str, i64)]) -> ModuleElement<Phrase> {
        ModuleElement::from_int_terms(Z, terms.iter().map(|(s, n)| (p(s), *n)))
    }

    #[test]
    fn star_examples() {
        let all = StableSet::all();
        assert_eq!(
            phrase_star(&p("(A)"), &w("BC"), &all, Z).unwrap(),
            words(&[("ABC", 1), ("BAC", 1), ("BCA", 1)])
        );
        assert_eq!(phrase_star(&Phrase::empty(), &w("AB"), &all, Z).unwrap(), words(&[("AB", 1)]));
        assert!(phrase_star(&p("(A|B)"), &Word::empty(), &all, Z).unwrap().is_zero());
        assert_eq!(phrase_star(&p("(A)"), &Word::empty(), &all, Z).unwrap(), words(&[("A", 1)]));
        assert_eq!(
            phrase_star(&p("(A|B)"), &w("C"), &all, Z).unwrap(),
            words(&[("ACB", 1)])
        );
        assert_eq!(
            phrase_star(&p("(A|B)"), &w("CD"), &all, Z).unwrap(),
            words(&[("CADB", 1), ("ACDB", 1), ("ACBD", 1)])
        );
        let no_a = StableSet::letter_count_zero(Letter::new("A").unwrap());
        assert!(phrase_star(&p("(A)"), &w("B"), &no_a, Z).unwrap().is_zero());
        assert_eq!(phrase_star(&p("(A)"), &Word::empty(), &no_a, Z).unwrap(), words(&[("A", 1)]));
    }

    #[test]
    fn dual_l_examples() {
        let all = StableSet::all();
        assert_eq!(dual_product_l(&Phrase::empty(), &p("(AB|C)"), &all, Z).unwrap(), phrases(&[("(AB|C)", 1)]));
        assert_eq!(dual_product_l(&p("(AB|C)"), &Phrase::empty(), &all, Z).unwrap(), phrases(&[("(AB|C)", 1)]));
        assert_eq!(
            dual_product_l(&p("(A)"), &p("(B)"), &all, Z).unwrap(),
            phrases(&[("AB", 1), ("BA", 1), ("(A|B)", 1), ("(B|A)", 1)])
        );
    }

    #[test]
    fn deconcat_examples() {
        let pp = |terms: &[(&str, &str)]| {
            ModuleElement::from_int_terms(Z, terms.iter().map(|(a, b)| (Tensor(p(a), p(b)), 1)))
        };
        assert_eq!(deconcat(&Phrase::empty(), Z), pp(&[("1", "1")]));
        assert_eq!(deconcat(&p("(A|B)"), Z), pp(&[("1", "(A|B)"), ("(A)", "(B)"), ("(A|B)", "1")]));
        assert_eq!(deconcat(&p("(A)"), Z), pp(&[("1", "(A)"), ("(A)", "1")]));
    }

    #[test]
    fn dual_mu_examples() {
        let mu = Pairing::delta_on(Alphabet::parse("A").unwrap(), Z);
        assert_eq!(dual_product_mu(&Phrase::empty(), &p("(A|~)"), &mu).unwrap(), phrases(&[("(A|~)", 1)]));
        assert_eq!(dual_product_mu(&p("(A|~)"), &Phrase::empty(), &mu).unwrap(), phrases(&[("(A|~)", 1)]));
        assert_eq!(
            dual_product_mu(&p("(~)"), &p("(~)"), &mu).unwrap(),
            phrases(&[("AA", 1), ("(~|~)", 2)])
        );
        assert_eq!(dual_product_mu(&p("(~)"), &p("(~)"), &Pairing::delta(Z)), Err(Error::InfiniteSupport));
    }
}
