use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith::{inv_mod, mul_mod, reduce_mod};

/// An exact element of one of the base rings ZZ, QQ, Z/n or GF(p).
///
/// Residues are always stored reduced into `[0, modulus)`; rationals are kept
/// in lowest terms by `BigRational`. Moduli are limited to 64 bits.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Int(BigInt),
    Rat(BigRational),
    Zmod { value: u64, modulus: u64 },
    Gf { value: u64, p: u64 },
}

impl Scalar {
    pub fn zmod(value: &BigInt, modulus: u64) -> Self {
        Scalar::Zmod { value: reduce_mod(value, modulus), modulus }
    }

    pub fn gf(value: &BigInt, p: u64) -> Self {
        Scalar::Gf { value: reduce_mod(value, p), p }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_zero(),
            Scalar::Rat(v) => v.is_zero(),
            Scalar::Zmod { value, .. } | Scalar::Gf { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Int(v) => v.is_one(),
            Scalar::Rat(v) => v.is_one(),
            Scalar::Zmod { value, .. } | Scalar::Gf { value, .. } => *value == 1,
        }
    }

    /// The zero of the same ring as `self`.
    pub fn zero_like(&self) -> Self {
        self.with_int(&BigInt::zero())
    }

    pub fn one_like(&self) -> Self {
        self.with_int(&BigInt::one())
    }

    /// Image of an integer in the ring of `self`.
    pub fn with_int(&self, v: &BigInt) -> Self {
        match self {
            Scalar::Int(_) => Scalar::Int(v.clone()),
            Scalar::Rat(_) => Scalar::Rat(BigRational::from_integer(v.clone())),
            Scalar::Zmod { modulus, .. } => Scalar::zmod(v, *modulus),
            Scalar::Gf { p, .. } => Scalar::gf(v, *p),
        }
    }

    fn mismatch(&self, other: &Self) -> ! {
        panic!("scalar ring mismatch: {self:?} vs {other:?}")
    }

    pub fn add(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a + b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Zmod { value: a, modulus }, Scalar::Zmod { value: b, modulus: m2 })
                if modulus == m2 =>
            {
                Scalar::Zmod { value: ((*a as u128 + *b as u128) % *modulus as u128) as u64, modulus: *modulus }
            }
            (Scalar::Gf { value: a, p }, Scalar::Gf { value: b, p: p2 }) if p == p2 => {
                Scalar::Gf { value: ((*a as u128 + *b as u128) % *p as u128) as u64, p: *p }
            }
            _ => self.mismatch(other),
        }
    }

    pub fn neg(&self) -> Self {
        match self {
            Scalar::Int(a) => Scalar::Int(-a),
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Zmod { value, modulus } => {
                Scalar::Zmod { value: if *value == 0 { 0 } else { modulus - value }, modulus: *modulus }
            }
            Scalar::Gf { value, p } => Scalar::Gf { value: if *value == 0 { 0 } else { p - value }, p: *p },
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        match (self, other) {
            (Scalar::Int(a), Scalar::Int(b)) => Scalar::Int(a * b),
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Zmod { value: a, modulus }, Scalar::Zmod { value: b, modulus: m2 })
                if modulus == m2 =>
            {
                Scalar::Zmod { value: mul_mod(*a, *b, *modulus), modulus: *modulus }
            }
            (Scalar::Gf { value: a, p }, Scalar::Gf { value: b, p: p2 }) if p == p2 => {
                Scalar::Gf { value: mul_mod(*a, *b, *p), p: *p }
            }
            _ => self.mismatch(other),
        }
    }

    /// Multiplicative inverse, if `self` is a unit.
    pub fn inverse(&self) -> Option<Self> {
        match self {
            Scalar::Int(a) => {
                if a.abs().is_one() {
                    Some(Scalar::Int(a.clone()))
                } else {
                    None
                }
            }
            Scalar::Rat(a) => (!a.is_zero()).then(|| Scalar::Rat(a.recip())),
            Scalar::Zmod { value, modulus } => {
                inv_mod(*value, *modulus).map(|v| Scalar::Zmod { value: v, modulus: *modulus })
            }
            Scalar::Gf { value, p } => inv_mod(*value, *p).map(|v| Scalar::Gf { value: v, p: *p }),
        }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut acc = self.one_like();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            exp >>= 1;
        }
        acc
    }

    /// Integer representative: the integer itself, or the residue in `[0, n)`.
    /// `None` for non-integral rationals.
    pub fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Int(a) => Some(a.clone()),
            Scalar::Rat(a) => a.is_integer().then(|| a.to_integer()),
            Scalar::Zmod { value, .. } | Scalar::Gf { value, .. } => Some(BigInt::from(*value)),
        }
    }

    /// True for a negative integer or rational; residues are never negative.
    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Int(a) => a.is_negative(),
            Scalar::Rat(a) => a.is_negative(),
            _ => false,
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Int(a) => write!(f, "{a}"),
            Scalar::Rat(a) => {
                if a.is_integer() {
                    write!(f, "{}", a.numer())
                } else {
                    write!(f, "{}/{}", a.numer(), a.denom())
                }
            }
            Scalar::Zmod { value, .. } | Scalar::Gf { value, .. } => write!(f, "{value}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn samples(seed: i64) -> Vec<Scalar> {
        vec![
            Scalar::Int(BigInt::from(seed)),
            Scalar::Rat(BigRational::new(seed.into(), (seed.abs() % 7 + 1).into())),
            Scalar::zmod(&seed.into(), 12),
            Scalar::gf(&seed.into(), 7),
        ]
    }

    #[test]
    fn residues_are_reduced() {
        assert_eq!(Scalar::zmod(&BigInt::from(-1), 6), Scalar::Zmod { value: 5, modulus: 6 });
        assert_eq!(Scalar::gf(&BigInt::from(15), 7), Scalar::Gf { value: 1, p: 7 });
    }

    #[test]
    fn units() {
        assert!(Scalar::Int(BigInt::from(2)).inverse().is_none());
        assert_eq!(Scalar::Int(BigInt::from(-1)).inverse(), Some(Scalar::Int(BigInt::from(-1))));
        assert_eq!(Scalar::gf(&5.into(), 7).inverse(), Some(Scalar::gf(&3.into(), 7)));
        assert!(Scalar::zmod(&4.into(), 12).inverse().is_none());
    }

    proptest! {
        #[test]
        fn add_sub_roundtrip(a in -1000i64..1000, b in -1000i64..1000) {
            for (x, y) in samples(a).into_iter().zip(samples(b)) {
                prop_assert_eq!(x.add(&y).sub(&y), x);
            }
        }

        #[test]
        fn unit_inverse(a in -1000i64..1000) {
            for x in samples(a) {
                if let Some(inv) = x.inverse() {
                    prop_assert!(x.mul(&inv).is_one());
                }
            }
        }

        #[test]
        fn distributive(a in -50i64..50, b in -50i64..50, c in -50i64..50) {
            let (xs, ys, zs) = (samples(a), samples(b), samples(c));
            for i in 0..xs.len() {
                let lhs = xs[i].mul(&ys[i].add(&zs[i]));
                let rhs = xs[i].mul(&ys[i]).add(&xs[i].mul(&zs[i]));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
