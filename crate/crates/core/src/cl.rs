//! The Coquand-Lombardi criterion: for `a_1..a_n` find exponents `m_i` with
//!
//! `prod a_i^m_i  in  ( a_j * prod_{i<=j} a_i^m_i : j = 1..n )`
//!
//! together with explicit membership coefficients, and turn such a witness
//! into a lex-submonic relation.

use std::sync::Arc;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::dependence::{monomial_cap, AlgebraConfig, SubmonicCertificate};
use crate::error::{Error, Result};
use crate::groebner;
use crate::linalg::{solve_zmod, solve_zz_reduced};
use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;
use crate::poly::Polynomial;
use crate::ring::{Elem, PolyRing, Ring};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClCertificate {
    pub ring: Ring,
    pub elements: Vec<Elem>,
    pub exponents: Vec<u32>,
    pub coeffs: Vec<Elem>,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ClOutcome {
    Found(Box<ClCertificate>),
    /// No exponents with every `m_i <= M` work.
    NotFoundUpTo(u32),
}

impl ClOutcome {
    pub fn certificate(&self) -> Option<&ClCertificate> {
        match self {
            ClOutcome::Found(c) => Some(c),
            ClOutcome::NotFoundUpTo(_) => None,
        }
    }
}

/// `prod a_i^m_i` and the generators `a_j * prod_{i<=j} a_i^m_i`.
fn target_and_gens(ring: &Ring, elems: &[Elem], m: &[u32]) -> (Elem, Vec<Elem>) {
    let mut prefix = ring.one();
    let mut gens = Vec::with_capacity(elems.len());
    for (a, &e) in elems.iter().zip(m) {
        prefix = ring.mul(&prefix, &ring.pow(a, e));
        gens.push(ring.mul(a, &prefix));
    }
    (prefix, gens)
}

fn supported(ring: &Ring) -> Result<()> {
    match ring {
        Ring::ZZ | Ring::QQ | Ring::Zmod(_) | Ring::GF(_) | Ring::Quot(_) => Ok(()),
        Ring::Poly(pr) if pr.base.is_field() => Ok(()),
        other => Err(Error::Unsupported(format!("Coquand-Lombardi search over {other}"))),
    }
}

fn int_of(e: &Elem) -> BigInt {
    e.as_scalar().and_then(Scalar::to_bigint).expect("integer element")
}

fn residue_of(e: &Elem) -> u64 {
    match e.as_scalar() {
        Some(Scalar::Zmod { value, .. }) => *value,
        _ => panic!("residue element expected"),
    }
}

/// Coefficients `r` with `target = sum r_j gens_j`, if any.
fn membership(ring: &Ring, target: &Elem, gens: &[Elem]) -> Result<Option<Vec<Elem>>> {
    match ring {
        Ring::ZZ => {
            let t = [int_of(target)];
            let g: Vec<Vec<BigInt>> = gens.iter().map(|x| vec![int_of(x)]).collect();
            Ok(solve_zz_reduced(&t, &g).map(|c| c.into_iter().map(|v| ring.from_int(&v)).collect()))
        }
        Ring::Zmod(n) => {
            let g: Vec<Vec<u64>> = gens.iter().map(|x| vec![residue_of(x)]).collect();
            Ok(solve_zmod(&[residue_of(target)], &g, *n, true)
                .map(|c| c.into_iter().map(|v| Elem::S(Scalar::Zmod { value: v, modulus: *n })).collect()))
        }
        Ring::QQ | Ring::GF(_) => {
            let mut out = vec![ring.zero(); gens.len()];
            if ring.is_zero(target) {
                return Ok(Some(out));
            }
            let Some(j) = gens.iter().position(|g| !ring.is_zero(g)) else { return Ok(None) };
            let inv = ring.inverse(&gens[j]).expect("nonzero field element");
            out[j] = ring.mul(target, &inv);
            Ok(Some(out))
        }
        Ring::Poly(_) | Ring::Quot(_) => {
            let pr: Arc<PolyRing> = ring.poly_ring().expect("polynomial ring").clone();
            let mut polys: Vec<Polynomial> = gens.iter().map(|g| g.as_poly().expect("polynomial").clone()).collect();
            if let Ring::Quot(q) = ring {
                polys.extend(q.basis.polys().iter().cloned());
            }
            let t = target.as_poly().expect("polynomial");
            let h = groebner::lift(&Ring::Poly(pr), t, &polys, &MonomialOrdering::grevlex())?;
            h.map(|h| h.into_iter().take(gens.len()).map(|c| ring.elem_from_poly(c)).collect()).transpose()
        }
    }
}

/// Exponent tuples with entries at most `max`, by increasing sum, then lex.
fn exponent_tuples(n: usize, max: u32) -> impl Iterator<Item = Vec<u32>> {
    (0..=n as u32 * max).flat_map(move |total| {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(n);
        fn rec(n: usize, left: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
            if cur.len() == n {
                if left == 0 {
                    out.push(cur.clone());
                }
                return;
            }
            let slots = (n - cur.len() - 1) as u32;
            for e in 0..=left.min(max) {
                if left - e > slots * max {
                    continue;
                }
                cur.push(e);
                rec(n, left - e, max, cur, out);
                cur.pop();
            }
        }
        rec(n, total, max, &mut cur, &mut out);
        out
    })
}

/// Search exponents `m_i <= max_exp` for which the criterion's membership holds.
pub fn cl_search(ring: &Ring, elems: &[Elem], max_exp: u32) -> Result<ClOutcome> {
    supported(ring)?;
    let count = (max_exp as u128 + 1).checked_pow(elems.len() as u32).unwrap_or(u128::MAX);
    let cap = monomial_cap();
    if count > cap {
        return Err(Error::ResourceExceeded { what: "exponent tuples".into(), count, limit: cap });
    }
    Ok(match first_certificate(ring, elems, max_exp)? {
        Some(cert) => ClOutcome::Found(Box::new(cert)),
        None => ClOutcome::NotFoundUpTo(max_exp),
    })
}

/// Re-evaluate `prod a_i^m_i = sum r_j a_j prod_{i<=j} a_i^m_i` exactly.
pub fn cl_verify(cert: &ClCertificate) -> bool {
    let n = cert.elements.len();
    if cert.exponents.len() != n || cert.coeffs.len() != n {
        return false;
    }
    let ring = &cert.ring;
    let (target, gens) = target_and_gens(ring, &cert.elements, &cert.exponents);
    let sum = gens.iter().zip(&cert.coeffs).fold(ring.zero(), |acc, (g, r)| ring.add(&acc, &ring.mul(r, g)));
    sum == target
}

/// `prod x_i^m_i - sum_j r_j x_j prod_{i<=j} x_i^m_i`, submonic under lex
/// with `x1 > x2 > ...` and vanishing at the elements.
pub fn cl_to_submonic(cert: &ClCertificate) -> Result<SubmonicCertificate> {
    if !cl_verify(cert) {
        return Err(Error::Precondition("certificate does not verify".into()));
    }
    let ring = &cert.ring;
    let mut prefix = Monomial::one();
    let mut terms = Vec::new();
    for (j, (&e, r)) in cert.exponents.iter().zip(&cert.coeffs).enumerate() {
        let xj = Monomial::var(j as u32 + 1);
        prefix = prefix.mul(&xj.pow(e));
        terms.push((xj.mul(&prefix), ring.neg(r)));
    }
    terms.push((prefix, ring.one()));
    let f = Polynomial::from_terms(terms, ring);
    let degree = f.total_degree().unwrap_or(0);
    let config = AlgebraConfig::new(ring.clone(), ring.clone())?;
    let sub = SubmonicCertificate::new(config, cert.elements.clone(), MonomialOrdering::lex(), f, degree)?;
    if let Err(why) = sub.check() {
        return Err(Error::Internal(format!("converted certificate fails: {why}")));
    }
    Ok(sub)
}

impl ClCertificate {
    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_wire()).expect("certificate serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_wire()).expect("certificate serializes")
    }

    /// Parse a certificate; `verified` is recomputed.
    pub fn from_json(text: &str) -> Result<Self> {
        let w: ClWire = serde_json::from_str(text)?;
        let ring: Ring = w.ring.parse()?;
        let elements = w.elements.iter().map(|e| ring.parse_elem(e)).collect::<Result<Vec<_>>>()?;
        let coeffs = w.coeffs.iter().map(|e| ring.parse_elem(e)).collect::<Result<Vec<_>>>()?;
        let mut cert = ClCertificate { ring, elements, exponents: w.exponents, coeffs, verified: false };
        cert.verified = cl_verify(&cert);
        Ok(cert)
    }

    fn to_wire(&self) -> ClWire {
        ClWire {
            ring: self.ring.to_string(),
            elements: self.elements.iter().map(|e| self.ring.fmt_elem(e)).collect(),
            exponents: self.exponents.clone(),
            coeffs: self.coeffs.iter().map(|e| self.ring.fmt_elem(e)).collect(),
            verified: self.verified,
        }
    }
}

#[derive(Serialize, Deserialize)]
struct ClWire {
    ring: String,
    elements: Vec<String>,
    exponents: Vec<u32>,
    coeffs: Vec<String>,
    verified: bool,
}

/// Outcome of checking `dim(R) < n` over all `n`-tuples of a finite ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteDimDecision {
    pub holds: bool,
    /// One certificate per tuple, in enumeration order, when `holds`.
    pub certificates: Vec<ClCertificate>,
    /// The first tuple without a certificate.
    pub failing: Option<Vec<Elem>>,
}

/// Decide `dim(R) < n_test` for `Zmod(n)` or `GF(p)` by checking every tuple.
///
/// Exponents are searched up to the ring's order, which always suffices in a
/// finite ring.
pub fn finite_ring_dim_lt(ring: &Ring, n_test: usize) -> Result<FiniteDimDecision> {
    let (Some(elems), Some(order)) = (ring.elements(), ring.cardinality()) else {
        return Err(Error::Unsupported(format!("{ring} is not a finite base ring")));
    };
    if n_test == 0 {
        return Err(Error::Invalid("arity must be at least 1".into()));
    }
    let count = (order as u128).checked_pow(n_test as u32).unwrap_or(u128::MAX);
    let cap = monomial_cap().max(1_000_000);
    if count > cap {
        return Err(Error::ResourceExceeded { what: "element tuples".into(), count, limit: cap });
    }
    let max_exp = u32::try_from(order).unwrap_or(u32::MAX);
    let results: Vec<(Vec<Elem>, Option<ClCertificate>)> = (0..count as u64)
        .into_par_iter()
        .map(|mut k| {
            let mut tuple = Vec::with_capacity(n_test);
            for _ in 0..n_test {
                tuple.push(elems[(k % order) as usize].clone());
                k /= order;
            }
            tuple.reverse();
            let found = first_certificate(ring, &tuple, max_exp)?;
            Ok((tuple, found))
        })
        .collect::<Result<_>>()?;
    let failing = results.iter().find(|(_, c)| c.is_none()).map(|(t, _)| t.clone());
    let holds = failing.is_none();
    let certificates = if holds { results.into_iter().filter_map(|(_, c)| c).collect() } else { Vec::new() };
    Ok(FiniteDimDecision { holds, certificates, failing })
}

/// Exponent search for one tuple, without the cap on the number of tuples.
fn first_certificate(ring: &Ring, elems: &[Elem], max_exp: u32) -> Result<Option<ClCertificate>> {
    for m in exponent_tuples(elems.len(), max_exp) {
        let (target, gens) = target_and_gens(ring, elems, &m);
        if let Some(coeffs) = membership(ring, &target, &gens)? {
            let mut cert =
                ClCertificate { ring: ring.clone(), elements: elems.to_vec(), exponents: m, coeffs, verified: false };
            cert.verified = cl_verify(&cert);
            if !cert.verified {
                return Err(Error::Internal("membership coefficients fail to verify".into()));
            }
            return Ok(Some(cert));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn elems(ring: &Ring, xs: &[&str]) -> Vec<Elem> {
        xs.iter().map(|x| ring.parse_elem(x).unwrap()).collect()
    }

    fn found(ring: &Ring, xs: &[&str], m: u32) -> ClCertificate {
        cl_search(ring, &elems(ring, xs), m).unwrap().certificate().expect("found").clone()
    }

    fn show(c: &ClCertificate) -> Vec<String> {
        c.coeffs.iter().map(|r| c.ring.fmt_elem(r)).collect()
    }

    #[test]
    fn mod_twelve() {
        let r = Ring::Zmod(12);
        let c = found(&r, &["2"], 5);
        assert_eq!(c.exponents, [2]);
        assert_eq!(show(&c), ["2"]);
        let mut bad = c.clone();
        bad.coeffs = elems(&r, &["1"]);
        assert!(!cl_verify(&bad));
        let sub = cl_to_submonic(&c).unwrap();
        assert_eq!(sub.poly_string(), "10*x1^3 + x1^2");
    }

    #[test]
    fn integer_pair() {
        let c = found(&Ring::ZZ, &["12", "18"], 5);
        assert_eq!(c.exponents, [0, 2]);
        assert_eq!(show(&c), ["27", "0"]);
        assert_eq!(cl_to_submonic(&c).unwrap().poly_string(), "x2^2 - 27*x1");
    }

    #[test]
    fn prime_field_unit() {
        let c = found(&Ring::GF(7), &["5"], 0);
        assert_eq!(c.exponents, [0]);
        assert_eq!(show(&c), ["3"]);
        assert_eq!(cl_to_submonic(&c).unwrap().poly_string(), "4*x1 + 1");
    }

    #[test]
    fn two_in_integers() {
        let e = elems(&Ring::ZZ, &["2"]);
        assert_eq!(cl_search(&Ring::ZZ, &e, 20).unwrap(), ClOutcome::NotFoundUpTo(20));
    }

    #[test]
    fn nilpotent_in_mod_four() {
        let c = found(&Ring::Zmod(4), &["2"], 4);
        assert_eq!(c.exponents, [2]);
    }

    #[test]
    fn finite_rings() {
        let d = finite_ring_dim_lt(&Ring::Zmod(12), 1).unwrap();
        assert!(d.holds);
        assert_eq!(d.certificates.len(), 12);
        assert!(finite_ring_dim_lt(&Ring::GF(7), 1).unwrap().holds);
        assert!(finite_ring_dim_lt(&Ring::ZZ, 1).is_err());
    }

    #[test]
    fn quotient_ring() {
        let r: Ring = "Quot(Poly(QQ; x,y); [x*y])".parse().unwrap();
        let c = found(&r, &["x", "y"], 2);
        let sub = cl_to_submonic(&c).unwrap();
        assert!(sub.verified);
    }

    #[test]
    fn json_round_trip() {
        let c = found(&Ring::ZZ, &["12", "18"], 5);
        let text = c.to_json();
        let back = ClCertificate::from_json(&text).unwrap();
        assert_eq!(back, c);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn exponent_order() {
        let all: Vec<Vec<u32>> = exponent_tuples(2, 1).collect();
        assert_eq!(all, [vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }
}
