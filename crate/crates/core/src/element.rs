//! Exact sparse linear combinations over a basis.
//!
//! [`ModuleElement`] stores a canonical map from basis elements to nonzero
//! coefficients, all in one ring mode. Basis types are words, phrases, and
//! the tensor products [`Tensor`] and [`Tensor3`] of those.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::ring::{Coefficient, RingMode};
use crate::words::{LetterMap, Phrase, Word};

pub trait Basis: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {}

impl<T> Basis for T where T: Clone + Ord + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static {}

/// Basis elements closed under an associative concatenation with a unit.
pub trait Monoid: Basis {
    fn unit() -> Self;
    fn concat(&self, other: &Self) -> Self;
}

impl Monoid for Word {
    fn unit() -> Self {
        Word::empty()
    }
    fn concat(&self, other: &Self) -> Self {
        Word::concat(self, other)
    }
}

impl Monoid for Phrase {
    fn unit() -> Self {
        Phrase::empty()
    }
    fn concat(&self, other: &Self) -> Self {
        Phrase::concat(self, other)
    }
}

/// Basis elements that letter maps act on.
pub trait MapLetters: Sized {
    fn map_letters(&self, map: &LetterMap) -> Result<Self>;
}

impl MapLetters for Word {
    fn map_letters(&self, map: &LetterMap) -> Result<Self> {
        Word::map_letters(self, map)
    }
}

impl MapLetters for Phrase {
    fn map_letters(&self, map: &LetterMap) -> Result<Self> {
        Phrase::map_letters(self, map)
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tensor<A, B>(pub A, pub B);

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Tensor3<A, B, C>(pub A, pub B, pub C);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Tensor<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {}", self.0, self.1)
    }
}

impl<A: fmt::Display, B: fmt::Display, C: fmt::Display> fmt::Display for Tensor3<A, B, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ⊗ {} ⊗ {}", self.0, self.1, self.2)
    }
}

impl<A: Monoid, B: Monoid> Monoid for Tensor<A, B> {
    fn unit() -> Self {
        Tensor(A::unit(), B::unit())
    }
    fn concat(&self, other: &Self) -> Self {
        Tensor(self.0.concat(&other.0), self.1.concat(&other.1))
    }
}

impl<A: MapLetters, B: MapLetters> MapLetters for Tensor<A, B> {
    fn map_letters(&self, map: &LetterMap) -> Result<Self> {
        Ok(Tensor(self.0.map_letters(map)?, self.1.map_letters(map)?))
    }
}

impl<A: MapLetters, B: MapLetters, C: MapLetters> MapLetters for Tensor3<A, B, C> {
    fn map_letters(&self, map: &LetterMap) -> Result<Self> {
        Ok(Tensor3(self.0.map_letters(map)?, self.1.map_letters(map)?, self.2.map_letters(map)?))
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleElement<B> {
    ring: RingMode,
    terms: BTreeMap<B, Coefficient>,
}

impl<B: Basis> ModuleElement<B> {
    pub fn zero(ring: RingMode) -> Self {
        ModuleElement {
            ring,
            terms: BTreeMap::new(),
        }
    }

    /// The basis vector `b` with coefficient one.
    pub fn basis(b: B, ring: RingMode) -> Self {
        Self::monomial(b, Coefficient::one(ring))
    }

    pub fn monomial(b: B, c: Coefficient) -> Self {
        let mut e = Self::zero(c.mode());
        e.add_term(b, c);
        e
    }

    pub fn from_terms(ring: RingMode, terms: impl IntoIterator<Item = (B, Coefficient)>) -> Result<Self> {
        let mut e = Self::zero(ring);
        for (b, c) in terms {
            if c.mode() != ring {
                return Err(Error::RingMismatch {
                    left: ring,
                    right: c.mode(),
                });
            }
            e.add_term(b, c);
        }
        Ok(e)
    }

    /// Integer multiplicities mapped into `ring`.
    pub fn from_int_terms(ring: RingMode, terms: impl IntoIterator<Item = (B, i64)>) -> Self {
        let mut e = Self::zero(ring);
        for (b, n) in terms {
            e.add_int(b, n);
        }
        e
    }

    pub fn ring(&self) -> RingMode {
        self.ring
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> btree_map::Iter<'_, B, Coefficient> {
        self.terms.iter()
    }

    pub fn support(&self) -> impl Iterator<Item = &B> {
        self.terms.keys()
    }

    pub fn coeff(&self, b: &B) -> Coefficient {
        self.terms.get(b).cloned().unwrap_or_else(|| Coefficient::zero(self.ring))
    }

    /// Adds `c·b` in place, pruning a zero result.
    ///
    /// Panics if `c` is in a different ring mode; use
    /// [`ModuleElement::checked_add`] for untrusted inputs.
    pub fn add_term(&mut self, b: B, c: Coefficient) {
        assert_eq!(c.mode(), self.ring, "ring mode mismatch");
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_int(&mut self, b: B, n: i64) {
        if n != 0 {
            self.add_term(b, Coefficient::from_i64(self.ring, n));
        }
    }

    fn check_ring(&self, other: RingMode) -> Result<()> {
        if self.ring == other {
            Ok(())
        } else {
            Err(Error::RingMismatch {
                left: self.ring,
                right: other,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_ring(other.ring)?;
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(b.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.negate())
    }

    pub fn negate(&self) -> Self {
        ModuleElement {
            ring: self.ring,
            terms: self.terms.iter().map(|(b, c)| (b.clone(), c.negate())).collect(),
        }
    }

    pub fn checked_scale(&self, c: &Coefficient) -> Result<Self> {
        self.check_ring(c.mode())?;
        let mut out = Self::zero(self.ring);
        for (b, d) in &self.terms {
            out.add_term(b.clone(), c * d);
        }
        Ok(out)
    }

    pub fn scale_int(&self, n: i64) -> Self {
        self.checked_scale(&Coefficient::from_i64(self.ring, n))
            .expect("same ring")
    }

    /// Linear extension of a map on basis elements.
    pub fn map_basis<C: Basis>(&self, mut f: impl FnMut(&B) -> C) -> ModuleElement<C> {
        let mut out = ModuleElement::zero(self.ring);
        for (b, c) in &self.terms {
            out.add_term(f(b), c.clone());
        }
        out
    }

    /// Linear extension `Σ c_b · f(b)` of a fallible map into another
    /// module over the same ring.
    pub fn try_apply<C: Basis>(&self, mut f: impl FnMut(&B) -> Result<ModuleElement<C>>) -> Result<ModuleElement<C>> {
        let mut out = ModuleElement::zero(self.ring);
        for (b, c) in &self.terms {
            let image = f(b)?;
            self.check_ring(image.ring)?;
            if c.is_one() {
                for (b2, c2) in image.terms {
                    out.add_term(b2, c2);
                }
            } else {
                for (b2, c2) in image.terms {
                    out.add_term(b2, c * &c2);
                }
            }
        }
        Ok(out)
    }

    pub fn apply<C: Basis>(&self, mut f: impl FnMut(&B) -> ModuleElement<C>) -> ModuleElement<C> {
        self.try_apply(|b| Ok(f(b))).expect("map stays in one ring")
    }

    pub fn filter(&self, mut keep: impl FnMut(&B) -> bool) -> Self {
        ModuleElement {
            ring: self.ring,
            terms: self
                .terms
                .iter()
                .filter(|(b, _)| keep(b))
                .map(|(b, c)| (b.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn into_terms(self) -> BTreeMap<B, Coefficient> {
        self.terms
    }
}

impl<B: Monoid> ModuleElement<B> {
    pub fn unit(ring: RingMode) -> Self {
        Self::basis(B::unit(), ring)
    }

    /// Bilinear extension of the basis concatenation.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_ring(other.ring)?;
        let mut out = Self::zero(self.ring);
        for (a, c) in &self.terms {
            for (b, d) in &other.terms {
                out.add_term(a.concat(b), c * d);
            }
        }
        Ok(out)
    }
}

impl<B: Basis + MapLetters> ModuleElement<B> {
    pub fn map_letters(&self, map: &LetterMap) -> Result<Self> {
        let mut out = Self::zero(self.ring);
        for (b, c) in &self.terms {
            out.add_term(b.map_letters(map)?, c.clone());
        }
        Ok(out)
    }
}

/// `a ⊗ b`, bilinear.
pub fn tensor2<A: Basis, B: Basis>(a: &ModuleElement<A>, b: &ModuleElement<B>) -> Result<ModuleElement<Tensor<A, B>>> {
    a.check_ring(b.ring)?;
    let mut out = ModuleElement::zero(a.ring);
    for (x, c) in &a.terms {
        for (y, d) in &b.terms {
            out.add_term(Tensor(x.clone(), y.clone()), c * d);
        }
    }
    Ok(out)
}

/// `a ⊗ b ⊗ c`, trilinear.
pub fn tensor3<A: Basis, B: Basis, C: Basis>(
    a: &ModuleElement<A>,
    b: &ModuleElement<B>,
    c: &ModuleElement<C>,
) -> Result<ModuleElement<Tensor3<A, B, C>>> {
    a.check_ring(b.ring)?;
    a.check_ring(c.ring)?;
    let mut out = ModuleElement::zero(a.ring);
    for (x, cx) in &a.terms {
        for (y, cy) in &b.terms {
            let cxy = cx * cy;
            for (z, cz) in &c.terms {
                out.add_term(Tensor3(x.clone(), y.clone(), z.clone()), &cxy * cz);
            }
        }
    }
    Ok(out)
}

impl<B: Basis> fmt::Display for ModuleElement<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (b, c)) in self.terms.iter().enumerate() {
            let (neg, mag) = if c.is_negative() { (true, c.negate()) } else { (false, c.clone()) };
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{mag} · {b}")?;
            }
        }
        Ok(())
    }
}

impl<B: Basis> fmt::Debug for ModuleElement<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {}", self.ring, self)
    }
}

impl<B: Basis> Add for &ModuleElement<B> {
    type Output = ModuleElement<B>;
    fn add(self, rhs: Self) -> ModuleElement<B> {
        self.checked_add(rhs).expect("ring mode mismatch")
    }
}

impl<B: Basis> Sub for &ModuleElement<B> {
    type Output = ModuleElement<B>;
    fn sub(self, rhs: Self) -> ModuleElement<B> {
        self.checked_sub(rhs).expect("ring mode mismatch")
    }
}

impl<B: Basis> Neg for &ModuleElement<B> {
    type Output = ModuleElement<B>;
    fn neg(self) -> ModuleElement<B> {
        self.negate()
    }
}

impl<B: Monoid> Mul for &ModuleElement<B> {
    type Output = ModuleElement<B>;
    fn mul(self, rhs: Self) -> ModuleElement<B> {
        self.checked_mul(rhs).expect("ring mode mismatch")
    }
}
