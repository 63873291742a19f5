//! Comultiplications built from a stable set `L`.
//!
//! A simple cut of `w` marks a proper factor `w_{i,j} ∈ L`; the pre-Lie
//! comultiplication `ρ_L` sums `w_{i,j} ⊗ w_{1,i} w_{j,m+1}` over them. A cut
//! is a family of such factors separated by at least one letter, and
//! `Δ_L` extracts all of them at once into a phrase. `Δ_S` is the subword
//! comultiplication of a strongly stable set.

use crate::element::{ModuleElement, Tensor};
use crate::error::{Error, Result};
use crate::ring::{Coefficient, RingMode};
use crate::stable::{split_by_mask, StableSet, StronglyStableSet};
use crate::words::{Phrase, Word};

/// Longest word accepted by [`delta_s`].
pub const SUBWORD_CAP: usize = 20;

/// A proper `L`-factor `w_{i,j}`, with 1-based `i < j <= m + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SimpleCut {
    pub i: usize,
    pub j: usize,
}

/// Index pairs `(i_1, j_1), ..., (i_k, j_k)` with `i_1 < j_1 < i_2 < ...`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Cut(Vec<(usize, usize)>);

impl Cut {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `l_c(w)`: the cut factors as a phrase.
    pub fn left(&self, w: &Word) -> Phrase {
        Phrase::from_words(self.0.iter().map(|&(i, j)| w.slice(i, j)).collect())
    }

    /// `r_c(w)`: the word left after deleting every cut factor.
    pub fn right(&self, w: &Word) -> Word {
        let mut letters = Vec::new();
        let mut next = 1;
        for &(i, j) in &self.0 {
            letters.extend_from_slice(&w.letters()[next - 1..i - 1]);
            next = j;
        }
        letters.extend_from_slice(&w.letters()[next - 1..]);
        Word::from_letters(letters)
    }
}

/// `member[i][j]` answers `w_{i,j} ∈ L` for `1 <= i < j <= m + 1`.
struct FactorTable {
    m: usize,
    member: Vec<Vec<bool>>,
}

impl FactorTable {
    fn new(w: &Word, l: &StableSet) -> Self {
        let m = w.len();
        let mut member = vec![vec![false; m + 2]; m + 2];
        for i in 1..=m {
            for j in i + 1..=m + 1 {
                member[i][j] = l.contains(&w.slice(i, j));
            }
        }
        FactorTable { m, member }
    }

    fn simple(&self, i: usize, j: usize) -> bool {
        self.member[i][j] && (i, j) != (1, self.m + 1)
    }
}

fn require_nonempty(w: &Word, op: &'static str) -> Result<()> {
    if w.is_empty() {
        Err(Error::EmptyWord { op })
    } else {
        Ok(())
    }
}

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

/// All simple cuts of `w`, in lexicographic order.
pub fn simple_cuts(w: &Word, l: &StableSet) -> Result<Vec<SimpleCut>> {
    require_nonempty(w, "simple_cuts")?;
    let table = FactorTable::new(w, l);
    let m = w.len();
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m + 1 {
            if table.simple(i, j) {
                out.push(SimpleCut { i, j });
            }
        }
    }
    Ok(out)
}

/// `ρ_L` on one non-empty word.
pub fn rho_l_word(w: &Word, l: &StableSet, ring: RingMode) -> Result<ModuleElement<Tensor<Word, Word>>> {
    let mut out = ModuleElement::zero(ring);
    for SimpleCut { i, j } in simple_cuts(w, l)? {
        out.add_int(Tensor(w.slice(i, j), w.strike(i, j)), 1);
    }
    Ok(out)
}

/// `ρ_L`, extended linearly; every word in the support must be non-empty.
pub fn rho_l(v: &ModuleElement<Word>, l: &StableSet) -> Result<ModuleElement<Tensor<Word, Word>>> {
    v.try_apply(|w| rho_l_word(w, l, v.ring()))
}

fn collect_cuts(table: &FactorTable, start: usize, current: &mut Vec<(usize, usize)>, out: &mut Vec<Cut>) {
    let m = table.m;
    for i in start..=m {
        for j in i + 1..=m + 1 {
            if !table.member[i][j] {
                continue;
            }
            current.push((i, j));
            if current.len() > 1 || table.simple(i, j) {
                out.push(Cut(current.clone()));
            }
            collect_cuts(table, j + 1, current, out);
            current.pop();
        }
    }
}

/// All cuts of `w`, the empty cut first, then by number of factors and
/// lexicographically.
pub fn cuts(w: &Word, l: &StableSet) -> Result<Vec<Cut>> {
    require_nonempty(w, "cuts")?;
    l.check_cap(w.len())?;
    let table = FactorTable::new(w, l);
    let mut out = vec![Cut::default()];
    collect_cuts(&table, 1, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// `Θ_L(w) = Σ_c l_c(w) ⊗ r_c(w)`, including the empty cut.
pub fn theta_l(w: &Word, l: &StableSet, ring: RingMode) -> Result<ModuleElement<Tensor<Phrase, Word>>> {
    let mut out = ModuleElement::zero(ring);
    for c in cuts(w, l)? {
        out.add_int(Tensor(c.left(w), c.right(w)), 1);
    }
    Ok(out)
}

/// `Δ_L` on a one-word phrase: `w ⊗ 1 + Θ_L(w)`.
pub fn delta_l_word(w: &Word, l: &StableSet, ring: RingMode) -> Result<ModuleElement<Tensor<Phrase, Phrase>>> {
    let mut out = theta_l(w, l, ring)?.map_basis(|Tensor(p, r)| Tensor(p.clone(), Phrase::single(r.clone())));
    out.add_int(Tensor(Phrase::single(w.clone()), Phrase::empty()), 1);
    Ok(out)
}

/// Extends a map on words multiplicatively to one phrase.
pub(crate) fn multiplicative(
    p: &Phrase,
    ring: RingMode,
    mut on_word: impl FnMut(&Word) -> Result<ModuleElement<Tensor<Phrase, Phrase>>>,
) -> Result<ModuleElement<Tensor<Phrase, Phrase>>> {
    let mut out = ModuleElement::unit(ring);
    for w in p.words() {
        out = out.checked_mul(&on_word(w)?)?;
    }
    Ok(out)
}

/// Extends a map on words anti-multiplicatively to one phrase.
pub(crate) fn anti_multiplicative(
    p: &Phrase,
    ring: RingMode,
    mut on_word: impl FnMut(&Word) -> Result<ModuleElement<Phrase>>,
) -> Result<ModuleElement<Phrase>> {
    let mut out = ModuleElement::unit(ring);
    for w in p.words() {
        out = on_word(w)?.checked_mul(&out)?;
    }
    Ok(out)
}

pub fn delta_l_phrase(p: &Phrase, l: &StableSet, ring: RingMode) -> Result<ModuleElement<Tensor<Phrase, Phrase>>> {
    require_strict(p, "delta_L")?;
    multiplicative(p, ring, |w| delta_l_word(w, l, ring))
}

/// `Δ_L` on strict phrases, extended multiplicatively and linearly.
pub fn delta_l(p: &ModuleElement<Phrase>, l: &StableSet) -> Result<ModuleElement<Tensor<Phrase, Phrase>>> {
    p.try_apply(|q| delta_l_phrase(q, l, p.ring()))
}

/// The coefficient of the empty phrase.
pub fn counit(p: &ModuleElement<Phrase>) -> Coefficient {
    p.coeff(&Phrase::empty())
}

/// The antipode on one word, memoized in `l`.
pub fn antipode_l_word(w: &Word, l: &StableSet, ring: RingMode) -> Result<ModuleElement<Phrase>> {
    require_nonempty(w, "antipode_L")?;
    if let Some(s) = l.antipodes.get(ring, w) {
        return Ok(s);
    }
    let mut s = ModuleElement::basis(Phrase::single(w.clone()), ring).negate();
    for c in cuts(w, l)?.into_iter().skip(1) {
        let tail = antipode_l_word(&c.right(w), l, ring)?;
        let term = ModuleElement::basis(c.left(w), ring).checked_mul(&tail)?;
        s = s.checked_sub(&term)?;
    }
    l.antipodes.insert(ring, w.clone(), s.clone());
    Ok(s)
}

pub fn antipode_l_phrase(p: &Phrase, l: &StableSet, ring: RingMode) -> Result<ModuleElement<Phrase>> {
    require_strict(p, "antipode_L")?;
    anti_multiplicative(p, ring, |w| antipode_l_word(w, l, ring))
}

/// The antipode of `(P, Δ_L)`, an anti-homomorphism with `s(1) = 1`.
pub fn antipode_l(p: &ModuleElement<Phrase>, l: &StableSet) -> Result<ModuleElement<Phrase>> {
    p.try_apply(|q| antipode_l_phrase(q, l, p.ring()))
}

pub fn delta_s_word(w: &Word, s: &StronglyStableSet, ring: RingMode) -> Result<ModuleElement<Tensor<Word, Word>>> {
    if w.len() > SUBWORD_CAP {
        return Err(Error::LengthCapExceeded {
            len: w.len(),
            cap: SUBWORD_CAP,
        });
    }
    let mut out = ModuleElement::zero(ring);
    for mask in 0..1u64 << w.len() {
        let (sub, rest) = split_by_mask(w, mask);
        if s.contains(&sub) {
            out.add_int(Tensor(sub, rest), 1);
        }
    }
    Ok(out)
}

/// `Δ_S(w) = Σ w' ⊗ w/w'` over subwords `w' ∈ S` taken as index subsets.
pub fn delta_s(v: &ModuleElement<Word>, s: &StronglyStableSet) -> Result<ModuleElement<Tensor<Word, Word>>> {
    v.try_apply(|w| delta_s_word(w, s, v.ring()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::Letter;

    const Z: RingMode = RingMode::Integer;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Phrase {
        s.parse().unwrap()
    }

    fn ww(terms: &[(&str, &str, i64)]) -> ModuleElement<Tensor<Word, Word>> {
        ModuleElement::from_int_terms(Z, terms.iter().map(|(a, b, n)| (Tensor(w(a), w(b)), *n)))
    }

    fn pp(terms: &[(&str, &str, i64)]) -> ModuleElement<Tensor<Phrase, Phrase>> {
        ModuleElement::from_int_terms(Z, terms.iter().map(|(a, b, n)| (Tensor(p(a), p(b)), *n)))
    }

    fn divisible(n: u64) -> StableSet {
        StableSet::letter_count_divisible(Letter::new("A").unwrap(), n).unwrap()
    }

    #[test]
    fn simple_cut_examples() {
        let all = StableSet::all();
        assert_eq!(
            simple_cuts(&w("AB"), &all).unwrap(),
            vec![SimpleCut { i: 1, j: 2 }, SimpleCut { i: 2, j: 3 }]
        );
        assert!(simple_cuts(&w("A"), &all).unwrap().is_empty());
        assert!(simple_cuts(&w("AA"), &divisible(2)).unwrap().is_empty());
        assert_eq!(simple_cuts(&Word::empty(), &all), Err(Error::EmptyWord { op: "simple_cuts" }));
    }

    #[test]
    fn rho_of_aba() {
        let rho = rho_l_word(&w("ABA"), &StableSet::all(), Z).unwrap();
        assert_eq!(
            rho,
            ww(&[("A", "BA", 1), ("B", "AA", 1), ("A", "AB", 1), ("AB", "A", 1), ("BA", "A", 1)])
        );
        assert!(rho_l_word(&w("A"), &StableSet::all(), Z).unwrap().is_zero());
    }

    #[test]
    fn rho_rejects_empty_word() {
        let v = ModuleElement::basis(Word::empty(), Z);
        assert!(matches!(rho_l(&v, &StableSet::all()), Err(Error::EmptyWord { .. })));
    }

    #[test]
    fn cut_lists() {
        let all = StableSet::all();
        let c = cuts(&w("AB"), &all).unwrap();
        assert_eq!(c.iter().map(|c| c.pairs().to_vec()).collect::<Vec<_>>(), vec![vec![], vec![(1, 2)], vec![(2, 3)]]);
        // Five simple cuts, since (1, 4) is the whole word; with the empty
        // cut and the two-factor cut these give seven of the eight terms of
        // the coproduct, the eighth being ABC ⊗ 1.
        let c = cuts(&w("ABC"), &all).unwrap();
        assert_eq!(c.len(), 7);
        assert_eq!(c[6].pairs(), &[(1, 2), (3, 4)]);
        assert_eq!(cuts(&w("A"), &divisible(3)).unwrap(), vec![Cut::default()]);
    }

    #[test]
    fn delta_examples() {
        let all = StableSet::all();
        assert_eq!(
            delta_l_word(&w("AB"), &all, Z).unwrap(),
            pp(&[("AB", "1", 1), ("1", "AB", 1), ("A", "B", 1), ("B", "A", 1)])
        );
        let abc = delta_l_word(&w("ABC"), &all, Z).unwrap();
        assert_eq!(
            abc,
            pp(&[
                ("ABC", "1", 1),
                ("1", "ABC", 1),
                ("A", "BC", 1),
                ("B", "AC", 1),
                ("C", "AB", 1),
                ("AB", "C", 1),
                ("BC", "A", 1),
                ("(A|C)", "B", 1),
            ])
        );
        let abc2 = delta_l_phrase(&p("(AB|C)"), &all, Z).unwrap();
        assert_eq!(abc2.len(), 8);
        assert_eq!(abc2.coeff(&Tensor(p("(B|C)"), p("A"))), Coefficient::int(1));
        assert_eq!(delta_l_phrase(&Phrase::empty(), &all, Z).unwrap(), pp(&[("1", "1", 1)]));
    }

    #[test]
    fn delta_rejects_non_strict() {
        let e = delta_l_phrase(&p("(A|~)"), &StableSet::all(), Z);
        assert!(matches!(e, Err(Error::NonStrictPhrase { .. })));
    }

    #[test]
    fn theta_examples() {
        let t = theta_l(&w("AB"), &StableSet::all(), Z).unwrap();
        assert_eq!(t.len(), 3);
        let t = theta_l(&w("AA"), &divisible(2), Z).unwrap();
        assert_eq!(t, ModuleElement::basis(Tensor(Phrase::empty(), w("AA")), Z));
    }

    #[test]
    fn counit_examples() {
        let x = ModuleElement::from_int_terms(Z, [(Phrase::empty(), 3), (p("(A)"), 2)]);
        assert_eq!(counit(&x), Coefficient::int(3));
        assert!(counit(&ModuleElement::basis(p("(AB|C)"), Z)).is_zero());
    }

    #[test]
    fn antipode_examples() {
        let all = StableSet::all();
        let el = |terms: &[(&str, i64)]| ModuleElement::from_int_terms(Z, terms.iter().map(|(s, n)| (p(s), *n)));
        assert_eq!(antipode_l_word(&w("A"), &all, Z).unwrap(), el(&[("A", -1)]));
        assert_eq!(
            antipode_l_word(&w("AB"), &all, Z).unwrap(),
            el(&[("AB", -1), ("(A|B)", 1), ("(B|A)", 1)])
        );
        assert_eq!(antipode_l_phrase(&p("(A|B)"), &all, Z).unwrap(), el(&[("(B|A)", 1)]));
        assert_eq!(antipode_l_phrase(&Phrase::empty(), &all, Z).unwrap(), el(&[("1", 1)]));
    }

    #[test]
    fn cap_is_enforced() {
        let l = StableSet::all().with_length_cap(3);
        assert_eq!(
            delta_l_word(&w("AAAA"), &l, Z),
            Err(Error::LengthCapExceeded { len: 4, cap: 3 })
        );
    }

    #[test]
    fn delta_s_examples() {
        let all = StronglyStableSet::all();
        assert_eq!(
            delta_s_word(&w("AB"), &all, Z).unwrap(),
            ww(&[("~", "AB", 1), ("A", "B", 1), ("B", "A", 1), ("AB", "~", 1)])
        );
        assert_eq!(delta_s_word(&Word::empty(), &all, Z).unwrap(), ww(&[("~", "~", 1)]));
        assert_eq!(
            delta_s_word(&w("AA"), &all, Z).unwrap(),
            ww(&[("~", "AA", 1), ("A", "A", 2), ("AA", "~", 1)])
        );
    }
}
