//! Ring descriptors and their elements.
//!
//! A [`Ring`] is a runtime description (ZZ, QQ, Z/n, GF(p), polynomial rings
//! and affine quotients) that performs arithmetic on [`Elem`] values. Every
//! element is kept canonical, so `==` on representatives is ring equality.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;
use crate::poly::Polynomial;
use crate::scalar::Scalar;

/// Canonical representative of a ring element. Which variant is valid is
/// decided by the owning [`Ring`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Elem {
    S(Scalar),
    P(Polynomial),
}

impl Elem {
    pub fn as_scalar(&self) -> Option<&Scalar> {
        match self {
            Elem::S(s) => Some(s),
            Elem::P(_) => None,
        }
    }

    pub fn as_poly(&self) -> Option<&Polynomial> {
        match self {
            Elem::P(p) => Some(p),
            Elem::S(_) => None,
        }
    }

    pub fn into_poly(self) -> Option<Polynomial> {
        match self {
            Elem::P(p) => Some(p),
            Elem::S(_) => None,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Ring {
    ZZ,
    QQ,
    Zmod(u64),
    GF(u64),
    Poly(Arc<PolyRing>),
    Quot(Arc<QuotRing>),
}

#[derive(Debug, PartialEq, Eq)]
pub struct PolyRing {
    pub base: Ring,
    pub vars: Vec<String>,
}

/// `Poly(k; vars) / (gens)` with `k` a field. Elements are normal forms with
/// respect to a reduced Groebner basis under graded reverse lex.
#[derive(Debug)]
pub struct QuotRing {
    pub poly: Arc<PolyRing>,
    pub gens: Vec<Polynomial>,
    pub basis: GroebnerBasis,
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Ring::ZZ, Ring::ZZ) | (Ring::QQ, Ring::QQ) => true,
            (Ring::Zmod(a), Ring::Zmod(b)) | (Ring::GF(a), Ring::GF(b)) => a == b,
            (Ring::Poly(a), Ring::Poly(b)) => Arc::ptr_eq(a, b) || a == b,
            (Ring::Quot(a), Ring::Quot(b)) => {
                Arc::ptr_eq(a, b) || (a.poly == b.poly && a.basis.polys() == b.basis.polys())
            }
            _ => false,
        }
    }
}

impl Eq for Ring {}

fn valid_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl Ring {
    pub fn zmod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidRing(format!("Zmod({n}) needs n >= 2")));
        }
        Ok(Ring::Zmod(n))
    }

    pub fn gf(p: u64) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::InvalidRing(format!("GF({p}): {p} is not prime")));
        }
        Ok(Ring::GF(p))
    }

    pub fn poly(base: Ring, vars: Vec<String>) -> Result<Self> {
        if vars.is_empty() {
            return Err(Error::InvalidRing("polynomial ring needs at least one variable".into()));
        }
        let mut seen = base.all_var_names();
        for v in &vars {
            if !valid_identifier(v) {
                return Err(Error::InvalidRing(format!("`{v}` is not a valid variable name")));
            }
            if seen.contains(v) {
                return Err(Error::InvalidRing(format!("duplicate variable `{v}`")));
            }
            seen.push(v.clone());
        }
        if let Ring::Quot(_) = base {
            return Err(Error::InvalidRing("polynomial rings over quotients are not supported".into()));
        }
        Ok(Ring::Poly(Arc::new(PolyRing { base, vars })))
    }

    /// Affine algebra `poly / (gens)`; `poly` must be a polynomial ring over QQ or GF(p).
    pub fn quot(poly: Ring, gens: Vec<Polynomial>) -> Result<Self> {
        let pr = match &poly {
            Ring::Poly(pr) if pr.base.is_field() => pr.clone(),
            _ => {
                return Err(Error::InvalidRing(format!(
                    "Quot needs a polynomial ring over QQ or GF(p), got {poly}"
                )))
            }
        };
        let basis = GroebnerBasis::new(pr.clone(), &gens, MonomialOrdering::grevlex())?;
        Ok(Ring::Quot(Arc::new(QuotRing { poly: pr, gens, basis })))
    }

    pub fn is_field(&self) -> bool {
        matches!(self, Ring::QQ | Ring::GF(_))
    }

    /// For polynomial rings and quotients, the underlying polynomial ring.
    pub fn poly_ring(&self) -> Option<&Arc<PolyRing>> {
        match self {
            Ring::Poly(p) => Some(p),
            Ring::Quot(q) => Some(&q.poly),
            _ => None,
        }
    }

    /// Coefficient ring of a polynomial ring or quotient.
    pub fn base(&self) -> Option<&Ring> {
        self.poly_ring().map(|p| &p.base)
    }

    fn all_var_names(&self) -> Vec<String> {
        match self.poly_ring() {
            Some(p) => {
                let mut v = p.base.all_var_names();
                v.extend(p.vars.iter().cloned());
                v
            }
            None => Vec::new(),
        }
    }

    pub fn is_zero_ring(&self) -> bool {
        self.is_zero(&self.one())
    }

    /// All elements of a finite base ring (Z/n or GF(p)).
    pub fn elements(&self) -> Option<Vec<Elem>> {
        match self {
            Ring::Zmod(n) => Some((0..*n).map(|v| Elem::S(Scalar::Zmod { value: v, modulus: *n })).collect()),
            Ring::GF(p) => Some((0..*p).map(|v| Elem::S(Scalar::Gf { value: v, p: *p })).collect()),
            _ => None,
        }
    }

    pub fn cardinality(&self) -> Option<u64> {
        match self {
            Ring::Zmod(n) | Ring::GF(n) => Some(*n),
            _ => None,
        }
    }

    pub fn zero(&self) -> Elem {
        self.from_int(&BigInt::zero())
    }

    pub fn one(&self) -> Elem {
        self.from_int(&BigInt::one())
    }

    pub fn from_int(&self, v: &BigInt) -> Elem {
        match self {
            Ring::ZZ => Elem::S(Scalar::Int(v.clone())),
            Ring::QQ => Elem::S(Scalar::Rat(BigRational::from_integer(v.clone()))),
            Ring::Zmod(n) => Elem::S(Scalar::zmod(v, *n)),
            Ring::GF(p) => Elem::S(Scalar::gf(v, *p)),
            Ring::Poly(pr) => Elem::P(Polynomial::constant(pr.base.from_int(v), &pr.base)),
            Ring::Quot(q) => {
                let c = Polynomial::constant(q.poly.base.from_int(v), &q.poly.base);
                Elem::P(q.basis.normal_form(&c))
            }
        }
    }

    /// Image of a rational number; only defined over fields (and rings over them).
    pub fn from_rational(&self, v: &BigRational) -> Result<Elem> {
        match self {
            Ring::QQ => Ok(Elem::S(Scalar::Rat(v.clone()))),
            Ring::GF(p) => {
                let den = Scalar::gf(v.denom(), *p);
                let inv = den
                    .inverse()
                    .ok_or_else(|| Error::CoefficientNotInRing(format!("{v} (denominator vanishes mod {p})")))?;
                Ok(Elem::S(Scalar::gf(v.numer(), *p).mul(&inv)))
            }
            Ring::Poly(pr) => Ok(Elem::P(Polynomial::constant(pr.base.from_rational(v)?, &pr.base))),
            Ring::Quot(q) => {
                let c = Polynomial::constant(q.poly.base.from_rational(v)?, &q.poly.base);
                Ok(Elem::P(q.basis.normal_form(&c)))
            }
            _ => Err(Error::CoefficientNotInRing(format!("{v} in {self}"))),
        }
    }

    /// The element named by a variable of this ring or of a nested coefficient ring.
    pub fn var_elem(&self, name: &str) -> Option<Elem> {
        let pr = self.poly_ring()?;
        let p = match pr.vars.iter().position(|v| v == name) {
            Some(i) => Polynomial::var(i as u32 + 1, &pr.base),
            None => Polynomial::constant(pr.base.var_elem(name)?, &pr.base),
        };
        Some(self.reduce(p))
    }

    /// Canonical element from a polynomial of the underlying polynomial ring.
    fn reduce(&self, p: Polynomial) -> Elem {
        match self {
            Ring::Quot(q) => Elem::P(q.basis.normal_form(&p)),
            _ => Elem::P(p),
        }
    }

    /// Bring a polynomial of the underlying polynomial ring into canonical form.
    pub fn elem_from_poly(&self, p: Polynomial) -> Result<Elem> {
        match self {
            Ring::Poly(_) | Ring::Quot(_) => Ok(self.reduce(p)),
            _ => Err(Error::RingMismatch(format!("{self} is not a polynomial ring"))),
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::S(s) => s.is_zero(),
            Elem::P(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::S(x), Elem::S(y)) => Elem::S(x.add(y)),
            (Elem::P(x), Elem::P(y)) => {
                // Sums of normal forms are normal forms.
                Elem::P(x.add(y, self.base().expect("polynomial ring")))
            }
            _ => panic!("element kind does not match ring {self}"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match a {
            Elem::S(x) => Elem::S(x.neg()),
            Elem::P(x) => Elem::P(x.neg(self.base().expect("polynomial ring"))),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (a, b) {
            (Elem::S(x), Elem::S(y)) => Elem::S(x.mul(y)),
            (Elem::P(x), Elem::P(y)) => {
                let prod = x.mul(y, self.base().expect("polynomial ring"));
                self.reduce(prod)
            }
            _ => panic!("element kind does not match ring {self}"),
        }
    }

    pub fn pow(&self, a: &Elem, mut exp: u32) -> Elem {
        let mut acc = self.one();
        let mut b = a.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(&acc, &b);
            }
            exp >>= 1;
            if exp > 0 {
                b = self.mul(&b, &b);
            }
        }
        acc
    }

    /// Multiplicative inverse if `a` is a unit and the ring can find it
    /// (scalars, and units of polynomial rings over a domain).
    pub fn inverse(&self, a: &Elem) -> Option<Elem> {
        match a {
            Elem::S(s) => s.inverse().map(Elem::S),
            Elem::P(p) => match self {
                Ring::Poly(pr) if p.is_constant() => {
                    let c = p.constant_term()?;
                    let inv = pr.base.inverse(c)?;
                    Some(Elem::P(Polynomial::constant(inv, &pr.base)))
                }
                _ => None,
            },
        }
    }

    /// Structure map from `source` into `self` applied to `e`.
    ///
    /// Supported: identity, ZZ into any ring, a polynomial ring onto its
    /// quotient, and constants of a coefficient ring into polynomial rings
    /// and quotients over it.
    pub fn coerce_from(&self, source: &Ring, e: &Elem) -> Result<Elem> {
        if source == self {
            return Ok(e.clone());
        }
        if let (Ring::Poly(sp), Ring::Quot(q)) = (source, self) {
            if **sp == *q.poly {
                let p = e.as_poly().ok_or_else(|| Error::Internal("expected polynomial".into()))?;
                return Ok(self.reduce(p.clone()));
            }
        }
        match self {
            Ring::Poly(pr) => {
                let c = pr.base.coerce_from(source, e)?;
                Ok(Elem::P(Polynomial::constant(c, &pr.base)))
            }
            Ring::Quot(q) => {
                let c = q.poly.base.coerce_from(source, e)?;
                Ok(self.reduce(Polynomial::constant(c, &q.poly.base)))
            }
            _ => match (source, e) {
                (Ring::ZZ, Elem::S(Scalar::Int(v))) => Ok(self.from_int(v)),
                _ => Err(Error::Unsupported(format!("no structure map {source} -> {self}"))),
            },
        }
    }

    pub fn fmt_elem(&self, e: &Elem) -> String {
        match e {
            Elem::S(s) => s.to_string(),
            Elem::P(p) => {
                let pr = self.poly_ring().expect("polynomial element in polynomial ring");
                p.render(&pr.vars, |c| pr.base.fmt_elem(c))
            }
        }
    }

    /// Parse an element written in the polynomial grammar.
    pub fn parse_elem(&self, text: &str) -> Result<Elem> {
        crate::parse::parse_elem(text, self)
    }
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::ZZ => f.write_str("ZZ"),
            Ring::QQ => f.write_str("QQ"),
            Ring::Zmod(n) => write!(f, "Zmod({n})"),
            Ring::GF(p) => write!(f, "GF({p})"),
            Ring::Poly(pr) => write!(f, "Poly({}; {})", pr.base, pr.vars.join(",")),
            Ring::Quot(q) => {
                let base = &q.poly.base;
                let gens: Vec<String> =
                    q.gens.iter().map(|g| g.render(&q.poly.vars, |c| base.fmt_elem(c))).collect();
                write!(f, "Quot(Poly({}; {}); [{}])", base, q.poly.vars.join(","), gens.join(", "))
            }
        }
    }
}

impl std::str::FromStr for Ring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        crate::parse::parse_ring(s)
    }
}

/// An element bundled with the ring it lives in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    pub ring: Ring,
    pub value: Elem,
}

impl RingElement {
    pub fn parse(text: &str, ring: &Ring) -> Result<Self> {
        Ok(RingElement { ring: ring.clone(), value: ring.parse_elem(text)? })
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.fmt_elem(&self.value))
    }
}

/// Monomial `m` of `ring` (a polynomial ring or quotient) as an element.
pub fn monomial_elem(ring: &Ring, m: &Monomial) -> Result<Elem> {
    let base = ring.base().ok_or_else(|| Error::RingMismatch(format!("{ring} has no variables")))?;
    ring.elem_from_poly(Polynomial::term(m.clone(), base.one(), base))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructors_validate() {
        assert!(Ring::zmod(1).is_err());
        assert!(Ring::gf(12).is_err());
        assert!(Ring::gf(7).is_ok());
        assert!(Ring::poly(Ring::ZZ, vec!["x".into(), "x".into()]).is_err());
        assert!(Ring::poly(Ring::ZZ, vec!["1x".into()]).is_err());
        let zx = Ring::poly(Ring::ZZ, vec!["x".into()]).unwrap();
        assert!(Ring::quot(zx, vec![]).is_err());
    }

    #[test]
    fn quotient_normal_forms() {
        let r: Ring = "Quot(Poly(QQ; x,y); [x*y])".parse().unwrap();
        let x = r.var_elem("x").unwrap();
        let y = r.var_elem("y").unwrap();
        assert!(r.is_zero(&r.mul(&x, &y)));
        assert!(!r.is_zero(&x));
        let zero_ring: Ring = "Quot(Poly(GF(5); t); [t, t - 1])".parse().unwrap();
        assert!(zero_ring.is_zero_ring());
    }

    #[test]
    fn structure_maps() {
        let zx: Ring = "Poly(ZZ; x)".parse().unwrap();
        let three = Ring::ZZ.from_int(&BigInt::from(3));
        let img = zx.coerce_from(&Ring::ZZ, &three).unwrap();
        assert_eq!(zx.fmt_elem(&img), "3");
        let z6 = Ring::zmod(6).unwrap();
        assert_eq!(z6.fmt_elem(&z6.coerce_from(&Ring::ZZ, &Ring::ZZ.from_int(&BigInt::from(-1))).unwrap()), "5");
        assert!(Ring::ZZ.coerce_from(&Ring::QQ, &Ring::QQ.one()).is_err());
    }
}
