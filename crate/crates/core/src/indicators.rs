//! Indicators: linear functionals on words and phrases, evaluated pointwise.
//!
//! The pre-Lie products `⋆_L`, `⋆_μ` and their brackets are computed on a
//! given word by pairing the comultiplication with `f ⊗ g`; the actions
//! of indicators on words are the corresponding contractions.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::cuts::{delta_l_phrase, rho_l_word, simple_cuts};
use crate::element::{Basis, ModuleElement, Tensor};
use crate::error::{Error, Result};
use crate::inscriptions::{delta_mu_phrase, rho_mu_word, Pairing};
use crate::ring::{Coefficient, RingMode};
use crate::stable::StableSet;
use crate::words::{Letter, Phrase, Word};

type Eval<B> = Arc<dyn Fn(&B) -> Coefficient + Send + Sync>;

/// A functional given by its value on each basis element.
#[derive(Clone)]
pub struct Indicator<B> {
    ring: RingMode,
    label: String,
    eval: Eval<B>,
}

impl<B: Basis> Indicator<B> {
    /// Wraps `f`, whose values must lie in `ring`.
    pub fn from_fn(ring: RingMode, label: impl Into<String>, f: impl Fn(&B) -> Coefficient + Send + Sync + 'static) -> Self {
        Indicator {
            ring,
            label: label.into(),
            eval: Arc::new(f),
        }
    }

    pub fn zero(ring: RingMode) -> Self {
        Self::from_fn(ring, "0", move |_| Coefficient::zero(ring))
    }

    /// `δ_b`: 1 on `b`, 0 elsewhere.
    pub fn delta(b: B, ring: RingMode) -> Self {
        let label = format!("δ[{b}]");
        Self::from_fn(ring, label, move |x| {
            if *x == b {
                Coefficient::one(ring)
            } else {
                Coefficient::zero(ring)
            }
        })
    }

    /// A finitely supported indicator; zero outside `entries`.
    pub fn table(ring: RingMode, entries: impl IntoIterator<Item = (B, Coefficient)>) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (b, c) in entries {
            if c.mode() != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: c.mode(),
                });
            }
            table.insert(b, c);
        }
        Ok(Self::from_fn(ring, "table", move |x| {
            table.get(x).cloned().unwrap_or_else(|| Coefficient::zero(ring))
        }))
    }

    pub fn ring(&self) -> RingMode {
        self.ring
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn eval(&self, b: &B) -> Coefficient {
        (self.eval)(b)
    }

    /// `⟨v, f⟩ = Σ c_b f(b)`.
    pub fn pair(&self, v: &ModuleElement<B>) -> Result<Coefficient> {
        check_ring(self.ring, v.ring())?;
        let mut total = Coefficient::zero(self.ring);
        for (b, c) in v.iter() {
            total = &total + &(c * &self.eval(b));
        }
        Ok(total)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        check_ring(self.ring, other.ring)?;
        let (f, g) = (self.eval.clone(), other.eval.clone());
        Ok(Self::from_fn(self.ring, format!("({} + {})", self.label, other.label), move |b| &f(b) + &g(b)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        let f = self.eval.clone();
        Self::from_fn(self.ring, format!("-{}", self.label), move |b| f(b).negate())
    }

    pub fn checked_scale(&self, c: &Coefficient) -> Result<Self> {
        check_ring(self.ring, c.mode())?;
        let (f, c) = (self.eval.clone(), c.clone());
        Ok(Self::from_fn(self.ring, format!("{c}·{}", self.label), move |b| &c * &f(b)))
    }

    /// Zero outside the basis elements accepted by `keep`.
    pub fn restrict(&self, keep: impl Fn(&B) -> bool + Send + Sync + 'static) -> Self {
        let (f, ring) = (self.eval.clone(), self.ring);
        Self::from_fn(ring, format!("{}|", self.label), move |b| {
            if keep(b) {
                f(b)
            } else {
                Coefficient::zero(ring)
            }
        })
    }
}

impl<B> fmt::Debug for Indicator<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Indicator[{}]({})", self.ring, self.label)
    }
}

impl Indicator<Word> {
    /// `f_A`: the number of occurrences of `letter`.
    pub fn letter_count(letter: Letter, ring: RingMode) -> Self {
        let label = format!("f{letter}");
        Self::from_fn(ring, label, move |w: &Word| Coefficient::from_i64(ring, w.count(&letter) as i64))
    }

    /// `ℓ`: the length of a word.
    pub fn length(ring: RingMode) -> Self {
        Self::from_fn(ring, "len", move |w: &Word| Coefficient::from_i64(ring, w.len() as i64))
    }
}

impl Indicator<Phrase> {
    /// The number of occurrences of `letter` across all words of a phrase.
    pub fn letter_count(letter: Letter, ring: RingMode) -> Self {
        let label = format!("f{letter}");
        Self::from_fn(ring, label, move |p: &Phrase| {
            Coefficient::from_i64(ring, p.words().iter().map(|w| w.count(&letter)).sum::<usize>() as i64)
        })
    }

    /// `ℓ`: the number of words in a phrase.
    pub fn word_count(ring: RingMode) -> Self {
        Self::from_fn(ring, "len", move |p: &Phrase| Coefficient::from_i64(ring, p.len() as i64))
    }
}

fn check_ring(a: RingMode, b: RingMode) -> Result<()> {
    if a == b {
        Ok(())
    } else {
        Err(Error::RingMismatch { left: a, right: b })
    }
}

/// `⟨t, f ⊗ g⟩`.
pub fn pair_tensor<A: Basis, B: Basis>(t: &ModuleElement<Tensor<A, B>>, f: &Indicator<A>, g: &Indicator<B>) -> Result<Coefficient> {
    check_ring(f.ring, t.ring())?;
    check_ring(g.ring, t.ring())?;
    let mut total = Coefficient::zero(t.ring());
    for (Tensor(a, b), c) in t.iter() {
        let fa = f.eval(a);
        if fa.is_zero() {
            continue;
        }
        total = &total + &(c * &(&fa * &g.eval(b)));
    }
    Ok(total)
}

/// `⟨w, f ⋆_L g⟩ = Σ_{(i,j)} f(w_{i,j}) g(w_{1,i} w_{j,m+1})`.
pub fn star_l(f: &Indicator<Word>, g: &Indicator<Word>, l: &StableSet, w: &Word) -> Result<Coefficient> {
    check_ring(f.ring, g.ring)?;
    pair_tensor(&rho_l_word(w, l, f.ring)?, f, g)
}

pub fn bracket_l(f: &Indicator<Word>, g: &Indicator<Word>, l: &StableSet, w: &Word) -> Result<Coefficient> {
    Ok(&star_l(f, g, l, w)? - &star_l(g, f, l, w)?)
}

/// `⟨w, f ⋆_μ g⟩`, defined on every word including `φ`.
pub fn star_mu(f: &Indicator<Word>, g: &Indicator<Word>, mu: &Pairing, w: &Word) -> Result<Coefficient> {
    check_ring(f.ring, g.ring)?;
    check_ring(f.ring, mu.ring())?;
    pair_tensor(&rho_mu_word(w, mu), f, g)
}

pub fn bracket_mu(f: &Indicator<Word>, g: &Indicator<Word>, mu: &Pairing, w: &Word) -> Result<Coefficient> {
    Ok(&star_mu(f, g, mu, w)? - &star_mu(g, f, mu, w)?)
}

impl Indicator<Word> {
    /// `f ⋆_L g` as an indicator on `V`; it vanishes on `φ`.
    pub fn star_l(&self, g: &Self, l: &StableSet) -> Result<Self> {
        check_ring(self.ring, g.ring)?;
        let (f, g2, l2, ring) = (self.clone(), g.clone(), l.clone(), self.ring);
        let label = format!("({} ⋆ {})", self.label, g.label);
        Ok(Self::from_fn(ring, label, move |w| {
            if w.is_empty() {
                Coefficient::zero(ring)
            } else {
                star_l(&f, &g2, &l2, w).expect("same ring, non-empty word")
            }
        }))
    }

    pub fn bracket_l(&self, g: &Self, l: &StableSet) -> Result<Self> {
        self.star_l(g, l)?.checked_sub(&g.star_l(self, l)?)
    }

    /// `f ⋆_μ g` as an indicator on `W`.
    pub fn star_mu(&self, g: &Self, mu: &Pairing) -> Result<Self> {
        check_ring(self.ring, g.ring)?;
        check_ring(self.ring, mu.ring())?;
        let (f, g2, mu2, ring) = (self.clone(), g.clone(), mu.clone(), self.ring);
        let label = format!("({} ⋆ {})", self.label, g.label);
        Ok(Self::from_fn(ring, label, move |w| star_mu(&f, &g2, &mu2, w).expect("same ring")))
    }

    pub fn bracket_mu(&self, g: &Self, mu: &Pairing) -> Result<Self> {
        self.star_mu(g, mu)?.checked_sub(&g.star_mu(self, mu)?)
    }
}

/// `f w = -Σ_{(i,j)} f(w_{i,j}) w_{1,i} w_{j,m+1}`, extended linearly.
pub fn act_l(f: &Indicator<Word>, v: &ModuleElement<Word>, l: &StableSet) -> Result<ModuleElement<Word>> {
    check_ring(f.ring, v.ring())?;
    v.try_apply(|w| {
        let mut out = ModuleElement::zero(f.ring);
        for c in simple_cuts(w, l)? {
            out.add_term(w.strike(c.i, c.j), f.eval(&w.slice(c.i, c.j)).negate());
        }
        Ok(out)
    })
}

/// `f w = -Σ_a f(l_a(w)) μ(w|_a) r_a(w)`, extended linearly.
pub fn act_mu(f: &Indicator<Word>, v: &ModuleElement<Word>, mu: &Pairing) -> Result<ModuleElement<Word>> {
    check_ring(f.ring, v.ring())?;
    check_ring(f.ring, mu.ring())?;
    Ok(v.apply(|w| {
        let mut out = ModuleElement::zero(f.ring);
        for (Tensor(l, r), c) in rho_mu_word(w, mu).iter() {
            out.add_term(r.clone(), (c * &f.eval(l)).negate());
        }
        out
    }))
}

/// `e^{φ(f)} v = Σ_k φ(f)^k v / k!` where `φ(f)` is [`act_l`]; needs
/// rational coefficients.
pub fn exp_action(f: &Indicator<Word>, v: &ModuleElement<Word>, l: &StableSet) -> Result<ModuleElement<Word>> {
    if v.ring() != RingMode::Rational {
        return Err(Error::RationalRequired(v.ring()));
    }
    check_ring(f.ring, v.ring())?;
    let mut total = v.clone();
    let mut term = v.clone();
    let mut k = 1;
    while !term.is_zero() {
        term = act_l(f, &term, l)?.checked_scale(&Coefficient::rational(1, k)?)?;
        total = total.checked_add(&term)?;
        k += 1;
    }
    Ok(total)
}

/// `w ∘_L x`: the sum of all insertions of `w` into `x` when `w ∈ L`.
pub fn gerstenhaber_circ(w: &Word, x: &Word, l: &StableSet, ring: RingMode) -> Result<ModuleElement<Word>> {
    if w.is_empty() || x.is_empty() {
        return Err(Error::EmptyWord { op: "gerstenhaber_circ" });
    }
    let mut out = ModuleElement::zero(ring);
    if !l.contains(w) {
        return Ok(out);
    }
    let n = x.len();
    for i in 0..=n {
        out.add_int(x.slice(1, i + 1).concat(w).concat(&x.slice(i + 1, n + 1)), 1);
    }
    Ok(out)
}

/// `(f ∘_L g)(p) = ⟨Δ_L(p), f ⊗ g⟩` for phrase indicators.
pub fn circ_l(f: &Indicator<Phrase>, g: &Indicator<Phrase>, l: &StableSet, p: &Phrase) -> Result<Coefficient> {
    check_ring(f.ring, g.ring)?;
    pair_tensor(&delta_l_phrase(p, l, f.ring)?, f, g)
}

/// `(f ∘_μ g)(p) = ⟨Δ_μ(p), f ⊗ g⟩` for phrase indicators.
pub fn circ_mu(f: &Indicator<Phrase>, g: &Indicator<Phrase>, mu: &Pairing, p: &Phrase) -> Result<Coefficient> {
    check_ring(f.ring, g.ring)?;
    pair_tensor(&delta_mu_phrase(p, mu)?, f, g)
}

#[cfg(test)]
mod tests {
    use super::*;

    const Z: RingMode = RingMode::Integer;
    const Q: RingMode = RingMode::Rational;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn letter(s: &str) -> Letter {
        Letter::new(s).unwrap()
    }

    fn words(ring: RingMode, terms: &[(&str, i64)]) -> ModuleElement<Word> {
        ModuleElement::from_int_terms(ring, terms.iter().map(|(s, n)| (w(s), *n)))
    }

    #[test]
    fn star_examples() {
        let all = StableSet::all();
        let (da, db) = (Indicator::delta(w("A"), Z), Indicator::delta(w("B"), Z));
        assert_eq!(star_l(&da, &db, &all, &w("AB")).unwrap(), Coefficient::int(1));
        assert!(star_l(&da, &db, &all, &w("A")).unwrap().is_zero());
        assert!(bracket_l(&da, &da, &all, &w("AAB")).unwrap().is_zero());
        assert!(star_l(&da, &db, &all, &Word::empty()).is_err());
        assert!(da.star_l(&db, &all).unwrap().eval(&Word::empty()).is_zero());
    }

    #[test]
    fn act_l_examples() {
        let all = StableSet::all();
        let da = Indicator::delta(w("A"), Z);
        assert_eq!(act_l(&da, &words(Z, &[("AB", 1)]), &all).unwrap(), words(Z, &[("B", -1)]));
        assert!(act_l(&da, &words(Z, &[("A", 1)]), &all).unwrap().is_zero());
        let l = StableSet::letter_count_zero(letter("A"));
        let kills_l = Indicator::from_fn(Z, "kills", move |x: &Word| {
            if x.count(&letter("A")) == 0 {
                Coefficient::int(0)
            } else {
                Coefficient::int(7)
            }
        });
        assert!(act_l(&kills_l, &words(Z, &[("ABBA", 1), ("BAB", 2)]), &l).unwrap().is_zero());
    }

    #[test]
    fn act_mu_examples() {
        let mu = Pairing::delta(Z);
        let v = words(Z, &[("ABACBA", 1)]);
        let act = |f: &Indicator<Word>| act_mu(f, &v, &mu).unwrap();
        assert_eq!(act(&Indicator::<Word>::letter_count(letter("A"), Z)), words(Z, &[("~", -1), ("AA", -1)]));
        assert_eq!(
            act(&Indicator::<Word>::length(Z)),
            words(Z, &[("CBA", -1), ("AB", -2), ("~", -4), ("AA", -2)])
        );
        assert_eq!(
            act(&Indicator::<Word>::letter_count(letter("C"), Z)),
            words(Z, &[("AB", -1), ("~", -1), ("AA", -1)])
        );
        assert_eq!(
            act(&Indicator::<Word>::letter_count(letter("B"), Z)),
            words(Z, &[("CBA", -1), ("AB", -1), ("~", -2)])
        );
    }

    #[test]
    fn exp_examples() {
        let all = StableSet::all();
        let da = Indicator::delta(w("A"), Q);
        assert_eq!(exp_action(&da, &words(Q, &[("AB", 1)]), &all).unwrap(), words(Q, &[("AB", 1), ("B", -1)]));
        let v = words(Q, &[("ABA", 2), ("B", 1)]);
        assert_eq!(exp_action(&Indicator::zero(Q), &v, &all).unwrap(), v);
        assert_eq!(
            exp_action(&Indicator::delta(w("A"), Z), &words(Z, &[("AB", 1)]), &all),
            Err(Error::RationalRequired(Z))
        );
    }

    #[test]
    fn gerstenhaber_examples() {
        let all = StableSet::all();
        assert_eq!(gerstenhaber_circ(&w("A"), &w("B"), &all, Z).unwrap(), words(Z, &[("AB", 1), ("BA", 1)]));
        assert_eq!(gerstenhaber_circ(&w("A"), &w("A"), &all, Z).unwrap(), words(Z, &[("AA", 2)]));
        let l = StableSet::letter_count_zero(letter("A"));
        assert!(gerstenhaber_circ(&w("A"), &w("B"), &l, Z).unwrap().is_zero());
    }

    #[test]
    fn phrase_indicator_product_distinguishes() {
        let all = StableSet::all();
        let len = Indicator::<Phrase>::word_count(Z);
        let fb = Indicator::<Phrase>::letter_count(letter("B"), Z);
        let p = |s: &str| s.parse::<Phrase>().unwrap();
        assert_eq!(circ_l(&len, &fb, &all, &p("(ABC)")).unwrap(), Coefficient::int(4));
        assert_eq!(circ_l(&len, &fb, &all, &p("(ACB)")).unwrap(), Coefficient::int(3));
    }

    #[test]
    fn table_and_pairing() {
        let f = Indicator::table(Z, [(w("AB"), Coefficient::int(5))]).unwrap();
        assert_eq!(f.eval(&w("AB")), Coefficient::int(5));
        assert!(f.eval(&w("BA")).is_zero());
        assert_eq!(f.pair(&words(Z, &[("AB", 2), ("B", 9)])).unwrap(), Coefficient::int(10));
        assert!(Indicator::table(Z, [(w("AB"), Coefficient::rational(1, 2).unwrap())]).is_err());
    }
}
