//! Comultiplications built from a pairing `μ : A × A → R`.
//!
//! A simple inscription `(i, j)` in `w` pairs two letter positions with
//! weight `μ(w(i), w(j))`; `ρ_μ` sends `w` to the weighted sum of
//! `w_{i+1,j} ⊗ w_{1,i} w_{j+1,m+1}`. An inscription is any even set of
//! positions, read as consecutive pairs, and `Δ_μ` extracts the stretches
//! strictly inside each pair while deleting the pairs' full spans.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::cache::WordCache;
use crate::cuts::{anti_multiplicative, multiplicative};
use crate::element::{ModuleElement, Tensor};
use crate::error::{Error, Result};
use crate::ring::{Coefficient, RingMode};
use crate::words::{Alphabet, Letter, Phrase, Word};

/// Default cap on word length for inscription enumeration.
pub const DEFAULT_INSCRIPTION_CAP: usize = 12;

#[derive(Clone, Debug, PartialEq, Eq)]
enum PairKind {
    Delta,
    DeltaOn(Alphabet),
    Table(BTreeMap<(Letter, Letter), Coefficient>),
}

/// A pairing on letters with values in one ring mode; unlisted pairs are 0.
///
/// Clones share one antipode memo table.
#[derive(Clone)]
pub struct Pairing {
    kind: PairKind,
    ring: RingMode,
    cap: usize,
    antipodes: Arc<WordCache<ModuleElement<Phrase>>>,
}

impl Pairing {
    fn from_kind(kind: PairKind, ring: RingMode) -> Self {
        Pairing {
            kind,
            ring,
            cap: DEFAULT_INSCRIPTION_CAP,
            antipodes: Arc::default(),
        }
    }

    /// `μ(a, b) = 1` if `a = b` and 0 otherwise, on every letter.
    pub fn delta(ring: RingMode) -> Self {
        Self::from_kind(PairKind::Delta, ring)
    }

    /// The delta pairing restricted to `alphabet`, so of finite support.
    pub fn delta_on(alphabet: Alphabet, ring: RingMode) -> Self {
        Self::from_kind(PairKind::DeltaOn(alphabet), ring)
    }

    pub fn from_table(ring: RingMode, entries: impl IntoIterator<Item = (Letter, Letter, Coefficient)>) -> Result<Self> {
        let mut table = BTreeMap::new();
        for (a, b, c) in entries {
            if c.mode() != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: c.mode(),
                });
            }
            if !c.is_zero() {
                table.insert((a, b), c);
            }
        }
        Ok(Self::from_kind(PairKind::Table(table), ring))
    }

    pub fn with_length_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn length_cap(&self) -> usize {
        self.cap
    }

    pub fn ring(&self) -> RingMode {
        self.ring
    }

    pub fn get(&self, a: &Letter, b: &Letter) -> Coefficient {
        match &self.kind {
            PairKind::Delta if a == b => Coefficient::one(self.ring),
            PairKind::DeltaOn(alphabet) if a == b && alphabet.contains(a) => Coefficient::one(self.ring),
            PairKind::Table(t) => t
                .get(&(a.clone(), b.clone()))
                .cloned()
                .unwrap_or_else(|| Coefficient::zero(self.ring)),
            _ => Coefficient::zero(self.ring),
        }
    }

    /// The nonzero entries, or [`Error::InfiniteSupport`] for the delta
    /// pairing on all letters.
    pub fn support(&self) -> Result<Vec<(Letter, Letter, Coefficient)>> {
        match &self.kind {
            PairKind::Delta => Err(Error::InfiniteSupport),
            PairKind::DeltaOn(alphabet) => Ok(alphabet
                .letters()
                .iter()
                .map(|a| (a.clone(), a.clone(), Coefficient::one(self.ring)))
                .collect()),
            PairKind::Table(t) => Ok(t.iter().map(|((a, b), c)| (a.clone(), b.clone(), c.clone())).collect()),
        }
    }

    /// The pointwise sum of two finitely supported pairings.
    pub fn checked_add(&self, other: &Pairing) -> Result<Pairing> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch {
                left: self.ring,
                right: other.ring,
            });
        }
        let mut table: BTreeMap<(Letter, Letter), Coefficient> = BTreeMap::new();
        for (a, b, c) in self.support()?.into_iter().chain(other.support()?) {
            let e = table.entry((a, b)).or_insert_with(|| Coefficient::zero(self.ring));
            *e = &*e + &c;
        }
        Pairing::from_table(self.ring, table.into_iter().map(|((a, b), c)| (a, b, c)))
    }

    fn check_cap(&self, len: usize) -> Result<()> {
        if len > self.cap {
            Err(Error::LengthCapExceeded { len, cap: self.cap })
        } else {
            Ok(())
        }
    }

    fn check_ring(&self, ring: RingMode) -> Result<()> {
        if ring == self.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring,
                right: ring,
            })
        }
    }
}

impl fmt::Display for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.kind {
            PairKind::Delta => f.write_str("delta"),
            PairKind::DeltaOn(alphabet) => {
                f.write_str("delta:")?;
                let symbols: Vec<&str> = alphabet.letters().iter().map(Letter::symbol).collect();
                if alphabet.letters().iter().all(|a| a.symbol().chars().count() == 1) {
                    f.write_str(&symbols.concat())
                } else {
                    f.write_str(&symbols.join(","))
                }
            }
            PairKind::Table(t) => {
                f.write_str("{")?;
                for (k, ((a, b), c)) in t.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{a}{b}: {c}")?;
                }
                f.write_str("}")
            }
        }
    }
}

impl fmt::Debug for Pairing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Pairing[{}]({self})", self.ring)
    }
}

/// Position pairs `(i_1, j_1), ..., (i_k, j_k)`, 1-based, strictly
/// increasing, each index pointing at a letter.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Inscription(Vec<(usize, usize)>);

impl Inscription {
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `μ(w, α) = Π μ(w(i_u), w(j_u))`.
    pub fn weight(&self, w: &Word, mu: &Pairing) -> Coefficient {
        let mut c = Coefficient::one(mu.ring);
        for &(i, j) in &self.0 {
            c = &c * &mu.get(&w.letters()[i - 1], &w.letters()[j - 1]);
        }
        c
    }

    /// `l_α(w)`: the words strictly inside each pair.
    pub fn left(&self, w: &Word) -> Phrase {
        Phrase::from_words(self.0.iter().map(|&(i, j)| w.slice(i + 1, j)).collect())
    }

    /// `r_α(w)`: `w` with every span `[i_u, j_u]` deleted.
    pub fn right(&self, w: &Word) -> Word {
        let mut letters = Vec::new();
        let mut next = 1;
        for &(i, j) in &self.0 {
            letters.extend_from_slice(&w.letters()[next - 1..i - 1]);
            next = j + 1;
        }
        letters.extend_from_slice(&w.letters()[next - 1..]);
        Word::from_letters(letters)
    }
}

/// All inscriptions in `w`, the empty one first, then by size and
/// lexicographically.
pub fn inscriptions(w: &Word) -> Result<Vec<Inscription>> {
    if w.len() > DEFAULT_INSCRIPTION_CAP {
        return Err(Error::LengthCapExceeded {
            len: w.len(),
            cap: DEFAULT_INSCRIPTION_CAP,
        });
    }
    let m = w.len();
    let mut out = Vec::new();
    for mask in 0u32..1 << m {
        if mask.count_ones() % 2 == 1 {
            continue;
        }
        let positions: Vec<usize> = (0..m).filter(|k| mask >> k & 1 == 1).map(|k| k + 1).collect();
        out.push(Inscription(positions.chunks(2).map(|p| (p[0], p[1])).collect()));
    }
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out)
}

/// `ρ_μ` on one word.
pub fn rho_mu_word(w: &Word, mu: &Pairing) -> ModuleElement<Tensor<Word, Word>> {
    let m = w.len();
    let mut out = ModuleElement::zero(mu.ring);
    for i in 1..=m {
        for j in i + 1..=m {
            let c = mu.get(&w.letters()[i - 1], &w.letters()[j - 1]);
            if !c.is_zero() {
                out.add_term(Tensor(w.slice(i + 1, j), w.slice(1, i).concat(&w.slice(j + 1, m + 1))), c);
            }
        }
    }
    out
}

/// `ρ_μ`, extended linearly to all of `W`.
pub fn rho_mu(v: &ModuleElement<Word>, mu: &Pairing) -> Result<ModuleElement<Tensor<Word, Word>>> {
    mu.check_ring(v.ring())?;
    Ok(v.apply(|w| rho_mu_word(w, mu)))
}

fn walk(
    w: &Word,
    mu: &Pairing,
    start: usize,
    current: &mut Vec<(usize, usize)>,
    weight: &Coefficient,
    visit: &mut impl FnMut(&Inscription, &Coefficient),
) {
    let m = w.len();
    for i in start..=m {
        for j in i + 1..=m {
            let c = mu.get(&w.letters()[i - 1], &w.letters()[j - 1]);
            if c.is_zero() {
                continue;
            }
            let next = weight * &c;
            if next.is_zero() {
                continue;
            }
            current.push((i, j));
            visit(&Inscription(current.clone()), &next);
            walk(w, mu, j + 1, current, &next, visit);
            current.pop();
        }
    }
}

/// Calls `visit` on every non-empty inscription with nonzero weight.
fn for_each_weighted(w: &Word, mu: &Pairing, mut visit: impl FnMut(&Inscription, &Coefficient)) -> Result<()> {
    mu.check_cap(w.len())?;
    walk(w, mu, 1, &mut Vec::new(), &Coefficient::one(mu.ring), &mut visit);
    Ok(())
}

/// `Θ_μ(w) = Σ_α μ(w, α) l_α(w) ⊗ r_α(w)`, including the empty inscription.
pub fn theta_mu(w: &Word, mu: &Pairing) -> Result<ModuleElement<Tensor<Phrase, Word>>> {
    let mut out = ModuleElement::basis(Tensor(Phrase::empty(), w.clone()), mu.ring);
    for_each_weighted(w, mu, |alpha, c| {
        let (l, r) = (alpha.left(w), alpha.right(w));
        debug_assert_eq!(l.letter_count() + r.len() + 2 * alpha.len(), w.len());
        out.add_term(Tensor(l, r), c.clone());
    })?;
    Ok(out)
}

/// `Δ_μ` on a one-word phrase: `w ⊗ 1 + Θ_μ(w)`.
pub fn delta_mu_word(w: &Word, mu: &Pairing) -> Result<ModuleElement<Tensor<Phrase, Phrase>>> {
    let mut out = theta_mu(w, mu)?.map_basis(|Tensor(p, r)| Tensor(p.clone(), Phrase::single(r.clone())));
    out.add_int(Tensor(Phrase::single(w.clone()), Phrase::empty()), 1);
    Ok(out)
}

pub fn delta_mu_phrase(p: &Phrase, mu: &Pairing) -> Result<ModuleElement<Tensor<Phrase, Phrase>>> {
    multiplicative(p, mu.ring, |w| delta_mu_word(w, mu))
}

/// `Δ_μ` on all phrases, extended multiplicatively and linearly.
pub fn delta_mu(q: &ModuleElement<Phrase>, mu: &Pairing) -> Result<ModuleElement<Tensor<Phrase, Phrase>>> {
    mu.check_ring(q.ring())?;
    q.try_apply(|p| delta_mu_phrase(p, mu))
}

/// The antipode on one word, memoized in `mu`.
pub fn antipode_mu_word(w: &Word, mu: &Pairing) -> Result<ModuleElement<Phrase>> {
    if let Some(s) = mu.antipodes.get(mu.ring, w) {
        return Ok(s);
    }
    let mut terms = Vec::new();
    for_each_weighted(w, mu, |alpha, c| terms.push((alpha.left(w), alpha.right(w), c.clone())))?;
    let mut s = ModuleElement::basis(Phrase::single(w.clone()), mu.ring).negate();
    for (l, r, c) in terms {
        let term = ModuleElement::monomial(l, c).checked_mul(&antipode_mu_word(&r, mu)?)?;
        s = s.checked_sub(&term)?;
    }
    mu.antipodes.insert(mu.ring, w.clone(), s.clone());
    Ok(s)
}

pub fn antipode_mu_phrase(p: &Phrase, mu: &Pairing) -> Result<ModuleElement<Phrase>> {
    anti_multiplicative(p, mu.ring, |w| antipode_mu_word(w, mu))
}

/// The antipode of `(Q, Δ_μ)`.
pub fn antipode_mu(q: &ModuleElement<Phrase>, mu: &Pairing) -> Result<ModuleElement<Phrase>> {
    mu.check_ring(q.ring())?;
    q.try_apply(|p| antipode_mu_phrase(p, mu))
}
