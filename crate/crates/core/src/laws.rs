//! Executable checkers for the algebraic laws of (co)products.
//!
//! Every checker takes the operation under test as a closure on module
//! elements and a finite list of basis samples, checks the identity exactly
//! on each sample, and reports the first failure in sample order.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::element::{Basis, ModuleElement, Monoid, Tensor, Tensor3};
use crate::error::Result;
use crate::ring::{Coefficient, RingMode};
use crate::words::{Phrase, Word};

/// The first sample on which a law failed, with both sides rendered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub input: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub law: String,
    pub sample: String,
    pub checked: usize,
    pub counterexample: Option<Counterexample>,
    pub seed: Option<u64>,
}

impl LawReport {
    pub fn passed(&self) -> bool {
        self.counterexample.is_none()
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = Some(seed);
        self
    }
}

impl fmt::Display for LawReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{status} {} on {} ({} samples", self.law, self.sample, self.checked)?;
        if let Some(seed) = self.seed {
            write!(f, ", seed {seed}")?;
        }
        f.write_str(")")?;
        if let Some(c) = &self.counterexample {
            write!(f, "\n  input: {}\n  lhs:   {}\n  rhs:   {}", c.input, c.lhs, c.rhs)?;
        }
        Ok(())
    }
}

type Outcome = Result<Option<(String, String)>>;

fn compare<B: Basis>(lhs: &ModuleElement<B>, rhs: &ModuleElement<B>) -> Option<(String, String)> {
    (lhs != rhs).then(|| (lhs.to_string(), rhs.to_string()))
}

/// Runs `check` over `items` in parallel and keeps the first failure in
/// item order.
pub fn run_law<S: fmt::Display + Sync>(
    law: &str,
    sample: &str,
    items: &[S],
    check: impl Fn(&S) -> Outcome + Sync,
) -> LawReport {
    let counterexample = items.par_iter().find_map_first(|s| match check(s) {
        Ok(None) => None,
        Ok(Some((lhs, rhs))) => Some(Counterexample {
            input: s.to_string(),
            lhs,
            rhs,
        }),
        Err(e) => Some(Counterexample {
            input: s.to_string(),
            lhs: format!("error: {e}"),
            rhs: String::new(),
        }),
    });
    LawReport {
        law: law.to_string(),
        sample: sample.to_string(),
        checked: items.len(),
        counterexample,
        seed: None,
    }
}

/// `(id ⊗ f) t` for `t` in `A ⊗ B`.
pub fn id_tensor<A: Basis, B: Basis, C: Basis, D: Basis>(
    t: &ModuleElement<Tensor<A, B>>,
    f: &impl Fn(&ModuleElement<B>) -> Result<ModuleElement<Tensor<C, D>>>,
) -> Result<ModuleElement<Tensor3<A, C, D>>> {
    let ring = t.ring();
    t.try_apply(|Tensor(a, b)| {
        Ok(f(&ModuleElement::basis(b.clone(), ring))?.map_basis(|Tensor(c, d)| Tensor3(a.clone(), c.clone(), d.clone())))
    })
}

/// `(f ⊗ id) t` for `t` in `A ⊗ B`.
pub fn tensor_id<A: Basis, B: Basis, C: Basis, D: Basis>(
    t: &ModuleElement<Tensor<A, B>>,
    f: &impl Fn(&ModuleElement<A>) -> Result<ModuleElement<Tensor<C, D>>>,
) -> Result<ModuleElement<Tensor3<C, D, B>>> {
    let ring = t.ring();
    t.try_apply(|Tensor(a, b)| {
        Ok(f(&ModuleElement::basis(a.clone(), ring))?.map_basis(|Tensor(c, d)| Tensor3(c.clone(), d.clone(), b.clone())))
    })
}

fn swap12<A: Basis, B: Basis, C: Basis>(t: &ModuleElement<Tensor3<A, B, C>>) -> ModuleElement<Tensor3<B, A, C>> {
    t.map_basis(|Tensor3(a, b, c)| Tensor3(b.clone(), a.clone(), c.clone()))
}

fn swap<A: Basis>(t: &ModuleElement<Tensor<A, A>>) -> ModuleElement<Tensor<A, A>> {
    t.map_basis(|Tensor(a, b)| Tensor(b.clone(), a.clone()))
}

/// `P^{1,2} ρ̃ = ρ̃` where `ρ̃ = (id ⊗ ρ)ρ - (ρ ⊗ id)ρ`.
pub fn check_pre_lie<B: Basis>(
    rho: impl Fn(&ModuleElement<B>) -> Result<ModuleElement<Tensor<B, B>>> + Sync,
    samples: &[B],
    ring: RingMode,
    sample: &str,
) -> LawReport {
    run_law("pre-Lie", sample, samples, |b| {
        let r = rho(&ModuleElement::basis(b.clone(), ring))?;
        let assoc = id_tensor(&r, &rho)?.checked_sub(&tensor_id(&r, &rho)?)?;
        Ok(compare(&swap12(&assoc), &assoc))
    })
}

/// `(id ⊗ Δ)Δ = (Δ ⊗ id)Δ`.
pub fn check_coassoc<B: Basis>(
    delta: impl Fn(&ModuleElement<B>) -> Result<ModuleElement<Tensor<B, B>>> + Sync,
    samples: &[B],
    ring: RingMode,
    sample: &str,
) -> LawReport {
    run_law("coassociativity", sample, samples, |b| {
        let d = delta(&ModuleElement::basis(b.clone(), ring))?;
        Ok(compare(&id_tensor(&d, &delta)?, &tensor_id(&d, &delta)?))
    })
}

/// A pair of samples, rendered as `a · b`.
#[derive(Clone, Debug)]
pub struct Pair<B>(pub B, pub B);

impl<B: fmt::Display> fmt::Display for Pair<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} · {}", self.0, self.1)
    }
}

/// `Δ(ab) = Δ(a)Δ(b)`.
pub fn check_bialgebra<B: Monoid>(
    delta: impl Fn(&ModuleElement<B>) -> Result<ModuleElement<Tensor<B, B>>> + Sync,
    samples: &[Pair<B>],
    ring: RingMode,
    sample: &str,
) -> LawReport {
    run_law("multiplicativity", sample, samples, |Pair(a, b)| {
        let lhs = delta(&ModuleElement::basis(a.concat(b), ring))?;
        let rhs = delta(&ModuleElement::basis(a.clone(), ring))?.checked_mul(&delta(&ModuleElement::basis(b.clone(), ring))?)?;
        Ok(compare(&lhs, &rhs))
    })
}

/// `(ε ⊗ id)Δ = id = (id ⊗ ε)Δ` where `ε` takes the coefficient of the unit.
pub fn check_counit<B: Monoid>(
    delta: impl Fn(&ModuleElement<B>) -> Result<ModuleElement<Tensor<B, B>>> + Sync,
    samples: &[B],
    ring: RingMode,
    sample: &str,
) -> LawReport {
    run_law("counit", sample, samples, |b| {
        let x = ModuleElement::basis(b.clone(), ring);
        let d = delta(&x)?;
        let unit = B::unit();
        let mut left = ModuleElement::zero(ring);
        let mut right = ModuleElement::zero(ring);
        for (Tensor(l, r), c) in d.iter() {
            if *l == unit {
                left.add_term(r.clone(), c.clone());
            }
            if *r == unit {
                right.add_term(l.clone(), c.clone());
            }
        }
        Ok(compare(&left, &x).or_else(|| compare(&right, &x)))
    })
}

/// `μ(id ⊗ s)Δ = ε·1 = μ(s ⊗ id)Δ`.
pub fn check_antipode<B: Monoid>(
    delta: impl Fn(&ModuleElement<B>) -> Result<ModuleElement<Tensor<B, B>>> + Sync,
    antipode: impl Fn(&ModuleElement<B>) -> Result<ModuleElement<B>> + Sync,
    samples: &[B],
    ring: RingMode,
    sample: &str,
) -> LawReport {
    run_law("antipode", sample, samples, |b| {
        let d = delta(&ModuleElement::basis(b.clone(), ring))?;
        let expected = if *b == B::unit() {
            ModuleElement::unit(ring)
        } else {
            ModuleElement::zero(ring)
        };
        let mut right = ModuleElement::zero(ring);
        let mut left = ModuleElement::zero(ring);
        for (Tensor(l, r), c) in d.iter() {
            let s_r = antipode(&ModuleElement::basis(r.clone(), ring))?;
            let s_l = antipode(&ModuleElement::basis(l.clone(), ring))?;
            let l_el = ModuleElement::monomial(l.clone(), c.clone());
            let r_el = ModuleElement::monomial(r.clone(), c.clone());
            right = right.checked_add(&l_el.checked_mul(&s_r)?)?;
            left = left.checked_add(&s_l.checked_mul(&r_el)?)?;
        }
        Ok(compare(&right, &expected).or_else(|| compare(&left, &expected)))
    })
}

/// `(Δ ⊗ id)Θ = (id ⊗ Θ)Θ`, and `Θ(u) - 1 ⊗ u` has no term with the unit
/// on the left.
pub fn check_comodule<T: Monoid, U: Basis>(
    theta: impl Fn(&ModuleElement<U>) -> Result<ModuleElement<Tensor<T, U>>> + Sync,
    delta: impl Fn(&ModuleElement<T>) -> Result<ModuleElement<Tensor<T, T>>> + Sync,
    samples: &[U],
    ring: RingMode,
    sample: &str,
) -> LawReport {
    run_law("comodule", sample, samples, |u| {
        let t = theta(&ModuleElement::basis(u.clone(), ring))?;
        let lhs = tensor_id(&t, &delta)?;
        let rhs = id_tensor(&t, &theta)?;
        if let Some(bad) = compare(&lhs, &rhs) {
            return Ok(Some(bad));
        }
        let unit_part = t.filter(|Tensor(l, _)| *l == T::unit());
        let expected = ModuleElement::basis(Tensor(T::unit(), u.clone()), ring);
        Ok(compare(&unit_part, &expected))
    })
}

/// With `δ = ρ - P^{1,2}ρ`: `P^{1,2}δ = -δ` and the cyclic sum of
/// `(δ ⊗ id)δ` vanishes.
pub fn check_cojacobi<B: Basis>(
    rho: impl Fn(&ModuleElement<B>) -> Result<ModuleElement<Tensor<B, B>>> + Sync,
    samples: &[B],
    ring: RingMode,
    sample: &str,
) -> LawReport {
    let cobracket = |x: &ModuleElement<B>| -> Result<ModuleElement<Tensor<B, B>>> {
        let r = rho(x)?;
        r.checked_sub(&swap(&r))
    };
    run_law("co-Jacobi", sample, samples, |b| {
        let d = cobracket(&ModuleElement::basis(b.clone(), ring))?;
        if let Some(bad) = compare(&swap(&d), &d.negate()) {
            return Ok(Some(bad));
        }
        let dd = tensor_id(&d, &cobracket)?;
        let rot = |t: &ModuleElement<Tensor3<B, B, B>>| t.map_basis(|Tensor3(x, y, z)| Tensor3(z.clone(), x.clone(), y.clone()));
        let r1 = rot(&dd);
        let r2 = rot(&r1);
        let sum = dd.checked_add(&r1)?.checked_add(&r2)?;
        Ok(compare(&sum, &ModuleElement::zero(ring)))
    })
}

fn word_tensor_as_phrases(t: &ModuleElement<Tensor<Word, Word>>) -> ModuleElement<Tensor<Phrase, Phrase>> {
    t.map_basis(|Tensor(a, b)| Tensor(Phrase::single(a.clone()), Phrase::single(b.clone())))
}

/// The part of `Δ((w))` in one-word ⊗ one-word phrases equals `ρ(w)`.
pub fn check_leading_term(
    delta: impl Fn(&ModuleElement<Phrase>) -> Result<ModuleElement<Tensor<Phrase, Phrase>>> + Sync,
    rho: impl Fn(&ModuleElement<Word>) -> Result<ModuleElement<Tensor<Word, Word>>> + Sync,
    samples: &[Word],
    ring: RingMode,
    sample: &str,
) -> LawReport {
    run_law("leading term", sample, samples, |w| {
        let d = delta(&ModuleElement::basis(Phrase::single(w.clone()), ring))?;
        let leading = d.filter(|Tensor(l, r)| l.len() == 1 && r.len() == 1);
        let r = word_tensor_as_phrases(&rho(&ModuleElement::basis(w.clone(), ring))?);
        Ok(compare(&leading, &r))
    })
}

/// `Δ((w)) - (w) ⊗ 1 - 1 ⊗ (w)` lies in `T_+ ⊗ T^1`.
pub fn check_left_handed(
    delta: impl Fn(&ModuleElement<Phrase>) -> Result<ModuleElement<Tensor<Phrase, Phrase>>> + Sync,
    samples: &[Word],
    ring: RingMode,
    sample: &str,
) -> LawReport {
    run_law("left-handed", sample, samples, |w| {
        let p = Phrase::single(w.clone());
        let d = delta(&ModuleElement::basis(p.clone(), ring))?;
        let rest = d.checked_sub(&ModuleElement::from_int_terms(
            ring,
            [(Tensor(p.clone(), Phrase::empty()), 1), (Tensor(Phrase::empty(), p), 1)],
        ))?;
        let outside = rest.filter(|Tensor(l, r)| l.is_empty() || r.len() != 1);
        Ok(compare(&outside, &ModuleElement::zero(ring)))
    })
}

/// Every tensor factor of `Δ(x)` satisfies `inside`.
pub fn check_hopf_closure<B: Basis>(
    delta: impl Fn(&ModuleElement<B>) -> Result<ModuleElement<Tensor<B, B>>> + Sync,
    inside: impl Fn(&B) -> bool + Sync,
    samples: &[B],
    ring: RingMode,
    sample: &str,
) -> LawReport {
    run_law("subalgebra closure", sample, samples, |b| {
        let d = delta(&ModuleElement::basis(b.clone(), ring))?;
        let outside = d.filter(|Tensor(l, r)| !inside(l) || !inside(r));
        Ok(compare(&outside, &ModuleElement::zero(ring)))
    })
}

/// `⟨Δ(r), δ_p ⊗ δ_q⟩ = ⟨r, p ∘ q⟩` for every `r` in `range` and every
/// sample pair; terms of `p ∘ q` outside `range` are not compared.
pub fn check_duality<B: Basis>(
    delta: impl Fn(&ModuleElement<B>) -> Result<ModuleElement<Tensor<B, B>>> + Sync,
    product: impl Fn(&B, &B) -> Result<ModuleElement<B>> + Sync,
    range: &[B],
    pairs: &[Pair<B>],
    ring: RingMode,
    sample: &str,
) -> LawReport {
    let expanded: Result<Vec<ModuleElement<Tensor<B, B>>>> =
        range.par_iter().map(|r| delta(&ModuleElement::basis(r.clone(), ring))).collect();
    let expanded = match expanded {
        Ok(e) => e,
        Err(e) => {
            return run_law("duality", sample, &["coproduct of the range"], |_| {
                Ok(Some((format!("error: {e}"), String::new())))
            })
        }
    };
    let mut index: HashMap<(B, B), Vec<(B, Coefficient)>> = HashMap::new();
    for (r, d) in range.iter().zip(&expanded) {
        for (Tensor(p, q), c) in d.iter() {
            index.entry((p.clone(), q.clone())).or_default().push((r.clone(), c.clone()));
        }
    }
    let in_range: std::collections::HashSet<&B> = range.iter().collect();
    run_law("duality", sample, pairs, |Pair(p, q)| {
        let lhs = ModuleElement::from_terms(ring, index.get(&(p.clone(), q.clone())).cloned().unwrap_or_default())?;
        let rhs = product(p, q)?.filter(|r| in_range.contains(r));
        Ok(compare(&lhs, &rhs))
    })
}

/// Three samples, rendered as `a, b, c`.
#[derive(Clone, Debug)]
pub struct Triple<B>(pub B, pub B, pub B);

impl<B: fmt::Display> fmt::Display for Triple<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}, {}, {}", self.0, self.1, self.2)
    }
}

/// `(a ∘ b) ∘ c = a ∘ (b ∘ c)` for a product given on basis elements.
pub fn check_associative<B: Basis>(
    product: impl Fn(&B, &B) -> Result<ModuleElement<B>> + Sync,
    samples: &[Triple<B>],
    ring: RingMode,
    sample: &str,
) -> LawReport {
    let extend = |x: &ModuleElement<B>, y: &ModuleElement<B>| -> Result<ModuleElement<B>> {
        let mut out = ModuleElement::zero(ring);
        for (a, c) in x.iter() {
            for (b, d) in y.iter() {
                out = out.checked_add(&product(a, b)?.checked_scale(&(c * d))?)?;
            }
        }
        Ok(out)
    };
    run_law("associativity", sample, samples, |Triple(a, b, c)| {
        let (a, b, c) = (
            ModuleElement::basis(a.clone(), ring),
            ModuleElement::basis(b.clone(), ring),
            ModuleElement::basis(c.clone(), ring),
        );
        Ok(compare(&extend(&extend(&a, &b)?, &c)?, &extend(&a, &extend(&b, &c)?)?))
    })
}

/// Removes the largest term in canonical order; used to build negative
/// controls.
pub fn drop_last_term<B: Basis>(x: ModuleElement<B>) -> ModuleElement<B> {
    drop_last_term_where(x, |_| true)
}

/// Removes the largest term whose basis element satisfies `pick`.
pub fn drop_last_term_where<B: Basis>(x: ModuleElement<B>, pick: impl Fn(&B) -> bool) -> ModuleElement<B> {
    let Some(last) = x.support().filter(|b| pick(b)).last().cloned() else {
        return x;
    };
    x.filter(|b| *b != last)
}
