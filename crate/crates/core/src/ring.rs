//! Exact coefficient arithmetic.
//!
//! Three ring modes are supported: arbitrary-precision integers, arbitrary
//! precision rationals and integers modulo a fixed `N >= 2`. Values of
//! different modes never mix; the checked operations return
//! [`Error::RingMismatch`] and the operator impls panic.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingMode {
    Integer,
    Rational,
    Modular(u64),
}

impl RingMode {
    pub fn modular(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidModulus(n));
        }
        Ok(RingMode::Modular(n))
    }
}

impl fmt::Display for RingMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingMode::Integer => f.write_str("int"),
            RingMode::Rational => f.write_str("rat"),
            RingMode::Modular(n) => write!(f, "mod:{n}"),
        }
    }
}

impl FromStr for RingMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "int" | "integer" | "Z" => Ok(RingMode::Integer),
            "rat" | "rational" | "Q" => Ok(RingMode::Rational),
            _ => {
                let n = s
                    .strip_prefix("mod:")
                    .ok_or_else(|| Error::parse(0, format!("unknown ring mode {s:?}")))?;
                let n: u64 = n
                    .parse()
                    .map_err(|_| Error::parse(4, format!("invalid modulus {n:?}")))?;
                RingMode::modular(n)
            }
        }
    }
}

/// An exact ring element tagged with its ring mode.
///
/// Integers that fit in an `i64` are kept unboxed; rationals are always in
/// lowest terms with a positive denominator; modular values live in `[0, N)`.
/// Every value therefore has exactly one representation, so the derived
/// equality and hashing are value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coefficient(Repr);

#[derive(Clone, PartialEq, Eq, Hash)]
enum Repr {
    Small(i64),
    Big(BigInt),
    Rational(BigRational),
    Modular { value: u64, modulus: u64 },
}

fn int_repr(n: BigInt) -> Repr {
    match n.to_i64() {
        Some(v) => Repr::Small(v),
        None => Repr::Big(n),
    }
}

fn reduce_mod(n: &BigInt, modulus: u64) -> u64 {
    n.mod_floor(&BigInt::from(modulus))
        .to_u64()
        .expect("residue fits below the modulus")
}

impl Coefficient {
    pub fn int(n: i64) -> Self {
        Coefficient(Repr::Small(n))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Coefficient(int_repr(n))
    }

    pub fn rational(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::from_ratio(BigRational::new(numer.into(), denom.into())))
    }

    /// `BigRational::new` already normalizes to lowest terms with a
    /// positive denominator.
    pub fn from_ratio(r: BigRational) -> Self {
        Coefficient(Repr::Rational(r))
    }

    pub fn modular(value: i64, modulus: u64) -> Result<Self> {
        RingMode::modular(modulus)?;
        Ok(Coefficient(Repr::Modular {
            value: reduce_mod(&BigInt::from(value), modulus),
            modulus,
        }))
    }

    /// The image of an integer in the given ring.
    pub fn from_integer(mode: RingMode, n: &BigInt) -> Self {
        match mode {
            RingMode::Integer => Coefficient(int_repr(n.clone())),
            RingMode::Rational => Coefficient(Repr::Rational(BigRational::from_integer(n.clone()))),
            RingMode::Modular(modulus) => Coefficient(Repr::Modular {
                value: reduce_mod(n, modulus),
                modulus,
            }),
        }
    }

    pub fn from_i64(mode: RingMode, n: i64) -> Self {
        match mode {
            RingMode::Integer => Coefficient(Repr::Small(n)),
            _ => Self::from_integer(mode, &BigInt::from(n)),
        }
    }

    pub fn zero(mode: RingMode) -> Self {
        Self::from_i64(mode, 0)
    }

    pub fn one(mode: RingMode) -> Self {
        Self::from_i64(mode, 1)
    }

    pub fn mode(&self) -> RingMode {
        match &self.0 {
            Repr::Small(_) | Repr::Big(_) => RingMode::Integer,
            Repr::Rational(_) => RingMode::Rational,
            Repr::Modular { modulus, .. } => RingMode::Modular(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v == 0,
            Repr::Big(_) => false,
            Repr::Rational(r) => r.is_zero(),
            Repr::Modular { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v == 1,
            Repr::Big(_) => false,
            Repr::Rational(r) => r.is_one(),
            Repr::Modular { value, .. } => *value == 1,
        }
    }

    /// True for strictly negative integers and rationals. Modular values
    /// carry no sign.
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(v) => *v < 0,
            Repr::Big(b) => b.is_negative(),
            Repr::Rational(r) => r.is_negative(),
            Repr::Modular { .. } => false,
        }
    }

    pub fn to_bigint(&self) -> Option<BigInt> {
        match &self.0 {
            Repr::Small(v) => Some(BigInt::from(*v)),
            Repr::Big(b) => Some(b.clone()),
            Repr::Rational(r) if r.is_integer() => Some(r.to_integer()),
            Repr::Rational(_) => None,
            Repr::Modular { value, .. } => Some(BigInt::from(*value)),
        }
    }

    pub fn to_ratio(&self) -> Option<BigRational> {
        match &self.0 {
            Repr::Rational(r) => Some(r.clone()),
            _ => None,
        }
    }

    fn check_same(&self, other: &Self) -> Result<()> {
        let (l, r) = (self.mode(), other.mode());
        if l == r {
            Ok(())
        } else {
            Err(Error::RingMismatch { left: l, right: r })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.add_same(other))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.add_same(&other.negate()))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        Ok(self.mul_same(other))
    }

    /// Division, defined only in rational mode.
    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.check_same(other)?;
        match (&self.0, &other.0) {
            (Repr::Rational(a), Repr::Rational(b)) => {
                if b.is_zero() {
                    Err(Error::ZeroDenominator)
                } else {
                    Ok(Coefficient(Repr::Rational(a / b)))
                }
            }
            _ => Err(Error::RationalRequired(self.mode())),
        }
    }

    pub fn negate(&self) -> Self {
        match &self.0 {
            Repr::Small(v) => match v.checked_neg() {
                Some(n) => Coefficient(Repr::Small(n)),
                None => Coefficient(int_repr(-BigInt::from(*v))),
            },
            Repr::Big(b) => Coefficient(int_repr(-b)),
            Repr::Rational(r) => Coefficient(Repr::Rational(-r)),
            Repr::Modular { value, modulus } => Coefficient(Repr::Modular {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            }),
        }
    }

    fn add_same(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => match a.checked_add(*b) {
                Some(s) => Coefficient(Repr::Small(s)),
                None => Coefficient(int_repr(BigInt::from(*a) + b)),
            },
            (Repr::Small(a), Repr::Big(b)) | (Repr::Big(b), Repr::Small(a)) => {
                Coefficient(int_repr(b + a))
            }
            (Repr::Big(a), Repr::Big(b)) => Coefficient(int_repr(a + b)),
            (Repr::Rational(a), Repr::Rational(b)) => Coefficient(Repr::Rational(a + b)),
            (Repr::Modular { value: a, modulus }, Repr::Modular { value: b, .. }) => {
                let s = (*a as u128 + *b as u128) % *modulus as u128;
                Coefficient(Repr::Modular {
                    value: s as u64,
                    modulus: *modulus,
                })
            }
            _ => panic!("ring mode mismatch: {} vs {}", self.mode(), other.mode()),
        }
    }

    fn mul_same(&self, other: &Self) -> Self {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => match a.checked_mul(*b) {
                Some(p) => Coefficient(Repr::Small(p)),
                None => Coefficient(int_repr(BigInt::from(*a) * b)),
            },
            (Repr::Small(a), Repr::Big(b)) | (Repr::Big(b), Repr::Small(a)) => {
                Coefficient(int_repr(b * a))
            }
            (Repr::Big(a), Repr::Big(b)) => Coefficient(int_repr(a * b)),
            (Repr::Rational(a), Repr::Rational(b)) => Coefficient(Repr::Rational(a * b)),
            (Repr::Modular { value: a, modulus }, Repr::Modular { value: b, .. }) => {
                let p = (*a as u128 * *b as u128) % *modulus as u128;
                Coefficient(Repr::Modular {
                    value: p as u64,
                    modulus: *modulus,
                })
            }
            _ => panic!("ring mode mismatch: {} vs {}", self.mode(), other.mode()),
        }
    }

    /// Parses decimal text (`-3`, `5/6`) into the given ring.
    pub fn parse(text: &str, mode: RingMode) -> Result<Self> {
        let t = text.trim();
        let bad = |pos: usize| Error::parse(pos, format!("invalid coefficient {t:?} for ring {mode}"));
        match t.split_once('/') {
            None => {
                let n: BigInt = t.parse().map_err(|_| bad(0))?;
                Ok(Self::from_integer(mode, &n))
            }
            Some((p, q)) => {
                if mode != RingMode::Rational {
                    return Err(bad(p.len()));
                }
                let p: BigInt = p.parse().map_err(|_| bad(0))?;
                let q: BigInt = q.parse().map_err(|_| bad(t.find('/').unwrap_or(0) + 1))?;
                if q.is_zero() {
                    return Err(Error::ZeroDenominator);
                }
                Ok(Self::from_ratio(BigRational::new(p, q)))
            }
        }
    }
}

/// Exact sum; fails on mixed ring modes.
pub fn ring_add(a: &Coefficient, b: &Coefficient) -> Result<Coefficient> {
    a.checked_add(b)
}

/// Exact product; fails on mixed ring modes.
pub fn ring_mul(a: &Coefficient, b: &Coefficient) -> Result<Coefficient> {
    a.checked_mul(b)
}

impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(v) => write!(f, "{v}"),
            Repr::Big(b) => write!(f, "{b}"),
            Repr::Rational(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Rational(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Modular { value, .. } => write!(f, "{value}"),
        }
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self, self.mode())
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        self.add_same(rhs)
    }
}

impl Add for Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: Coefficient) -> Coefficient {
        self.add_same(&rhs)
    }
}

impl AddAssign<&Coefficient> for Coefficient {
    fn add_assign(&mut self, rhs: &Coefficient) {
        *self = self.add_same(rhs);
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self.add_same(&rhs.negate())
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        self.mul_same(rhs)
    }
}

impl Mul for Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: Coefficient) -> Coefficient {
        self.mul_same(&rhs)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        self.negate()
    }
}

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        self.negate()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn rat(p: i64, q: i64) -> Coefficient {
        Coefficient::rational(p, q).unwrap()
    }

    fn m5(v: i64) -> Coefficient {
        Coefficient::modular(v, 5).unwrap()
    }

    #[test]
    fn addition_examples() {
        assert_eq!(ring_add(&Coefficient::int(2), &Coefficient::int(3)).unwrap(), Coefficient::int(5));
        assert_eq!(ring_add(&rat(1, 2), &rat(1, 3)).unwrap(), rat(5, 6));
        assert_eq!(ring_add(&m5(3), &m5(4)).unwrap(), m5(2));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(ring_mul(&Coefficient::int(-2), &Coefficient::int(3)).unwrap(), Coefficient::int(-6));
        assert_eq!(ring_mul(&rat(2, 3), &rat(3, 4)).unwrap(), rat(1, 2));
        assert_eq!(ring_mul(&m5(2), &m5(3)).unwrap(), m5(1));
    }

    #[test]
    fn mixed_modes_are_rejected() {
        let err = ring_add(&Coefficient::int(1), &rat(1, 2)).unwrap_err();
        assert_eq!(
            err,
            Error::RingMismatch {
                left: RingMode::Integer,
                right: RingMode::Rational
            }
        );
        assert!(ring_mul(&m5(1), &Coefficient::modular(1, 7).unwrap()).is_err());
        assert!(ring_add(&m5(1), &Coefficient::int(1)).is_err());
    }

    #[test]
    fn rationals_are_normalized() {
        assert_eq!(rat(2, 4), rat(1, 2));
        assert_eq!(rat(1, -2), rat(-1, 2));
        assert_eq!(rat(-3, -6).to_string(), "1/2");
        assert_eq!(rat(4, 2).to_string(), "2");
        assert!(Coefficient::rational(1, 0).is_err());
    }

    #[test]
    fn modular_values_are_canonical() {
        assert_eq!(Coefficient::modular(-1, 5).unwrap().to_string(), "4");
        assert_eq!(Coefficient::modular(12, 5).unwrap(), m5(2));
        assert!(Coefficient::modular(1, 1).is_err());
        assert_eq!(m5(2).negate(), m5(3));
    }

    #[test]
    fn overflow_promotes_to_bigint() {
        let big = Coefficient::int(i64::MAX);
        let sum = &big + &Coefficient::int(1);
        assert_eq!(sum.to_string(), "9223372036854775808");
        let back = &sum - &Coefficient::int(1);
        assert_eq!(back, big);
        let sq = &big * &big;
        assert!(!sq.is_zero());
        assert_eq!(Coefficient::int(i64::MIN).negate().to_string(), "9223372036854775808");
    }

    #[test]
    fn parse_round_trips() {
        for (text, mode) in [("-17", RingMode::Integer), ("5/6", RingMode::Rational), ("3", RingMode::Modular(7))] {
            let c = Coefficient::parse(text, mode).unwrap();
            assert_eq!(c.to_string(), text);
            assert_eq!(c.mode(), mode);
        }
        assert!(Coefficient::parse("1/2", RingMode::Integer).is_err());
        assert!(Coefficient::parse("x", RingMode::Integer).is_err());
        assert_eq!("mod:5".parse::<RingMode>().unwrap(), RingMode::Modular(5));
        assert!("mod:1".parse::<RingMode>().is_err());
    }

    #[test]
    fn division_requires_rationals() {
        assert_eq!(rat(1, 2).checked_div(&rat(1, 4)).unwrap(), Coefficient::rational(2, 1).unwrap());
        assert_eq!(
            Coefficient::int(4).checked_div(&Coefficient::int(2)),
            Err(Error::RationalRequired(RingMode::Integer))
        );
    }

    fn any_mode() -> impl Strategy<Value = RingMode> {
        prop_oneof![
            Just(RingMode::Integer),
            Just(RingMode::Rational),
            (2u64..50).prop_map(RingMode::Modular),
        ]
    }

    fn coeff_in(mode: RingMode) -> BoxedStrategy<Coefficient> {
        match mode {
            RingMode::Rational => (-1000i64..1000, 1i64..60)
                .prop_map(|(p, q)| Coefficient::rational(p, q).unwrap())
                .boxed(),
            RingMode::Integer => prop_oneof![
                (-1000i64..1000).prop_map(Coefficient::int),
                any::<i64>().prop_map(Coefficient::int),
            ]
            .boxed(),
            m => any::<i64>().prop_map(move |v| Coefficient::from_i64(m, v)).boxed(),
        }
    }

    fn triple() -> impl Strategy<Value = (Coefficient, Coefficient, Coefficient)> {
        any_mode().prop_flat_map(|m| (coeff_in(m), coeff_in(m), coeff_in(m)))
    }

    proptest! {
        #[test]
        fn ring_laws((a, b, c) in triple()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a * &Coefficient::one(a.mode()), a.clone());
        }

        #[test]
        fn rational_representation_is_unique(p in -500i64..500, q in 1i64..50, k in 1i64..20) {
            prop_assert_eq!(Coefficient::rational(p, q).unwrap(), Coefficient::rational(p * k, q * k).unwrap());
            prop_assert_eq!(Coefficient::rational(p, q).unwrap(), Coefficient::rational(-p, -q).unwrap());
        }
    }
}
