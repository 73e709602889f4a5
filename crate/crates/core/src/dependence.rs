//! Bounded-degree search for submonic relations, certificates and their
//! verification, and the constructive pair algorithm over the integers.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::ext_gcd;
use crate::error::{Error, Result};
use crate::groebner;
use crate::linalg::{solve_in_span_plain, FieldSpan, IntLattice, SpanSolution};
use crate::monomial::{count_monomials, monomials_up_to, Monomial};
use crate::ordering::MonomialOrdering;
use crate::poly::Polynomial;
use crate::ring::{Elem, PolyRing, Ring};
use crate::scalar::Scalar;

/// Default cap on the number of candidate monomials in one search.
pub const DEFAULT_MONOMIAL_CAP: u128 = 20_000;

/// Cap on the number of tuples examined by [`dependence_matrix`].
pub const TUPLE_CAP: u128 = 1_000_000;

/// The candidate-monomial cap, overridable through `TRDEG_MONOMIAL_CAP`.
pub fn monomial_cap() -> u128 {
    std::env::var("TRDEG_MONOMIAL_CAP")
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MONOMIAL_CAP)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructureMap {
    Identity,
    Inclusion,
    Projection,
}

/// How span questions are decided for a configuration.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Method {
    /// Coordinates of values, solved over this scalar ring.
    Linear(Ring),
    /// Ideal membership in the algebra itself, via Groebner bases.
    Ideal,
}

/// A coefficient ring `R` with an `R`-algebra `A`.
///
/// Supported pairs:
/// `ZZ/ZZ`, `Zmod(n)/Zmod(n)`, `ZZ/Poly(ZZ; ..)`, `ZZ/Zmod(n)`,
/// `A/A` for `A` a polynomial ring or quotient over a field, and a field `k`
/// into `k`, `Poly(k; ..)` or a quotient over `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraConfig {
    coeffs: Ring,
    algebra: Ring,
    map: StructureMap,
    method: Method,
}

impl AlgebraConfig {
    pub fn new(coeffs: Ring, algebra: Ring) -> Result<Self> {
        use StructureMap::*;
        let (map, method) = match (&coeffs, &algebra) {
            (Ring::ZZ, Ring::ZZ) => (Identity, Method::Linear(Ring::ZZ)),
            (Ring::Zmod(n), Ring::Zmod(m)) if n == m => (Identity, Method::Linear(Ring::Zmod(*n))),
            (Ring::ZZ, Ring::Zmod(n)) => (Projection, Method::Linear(Ring::Zmod(*n))),
            (Ring::ZZ, Ring::Poly(pr)) if pr.base == Ring::ZZ => (Inclusion, Method::Linear(Ring::ZZ)),
            (r, a) if r == a && a.poly_ring().is_some_and(|p| p.base.is_field()) => (Identity, Method::Ideal),
            (k, Ring::Poly(pr)) if k.is_field() && pr.base == *k => (Inclusion, Method::Linear(k.clone())),
            (k, Ring::Quot(q)) if k.is_field() && q.poly.base == *k => (Inclusion, Method::Linear(k.clone())),
            (k, a) if k.is_field() && k == a => (Identity, Method::Linear(k.clone())),
            _ => {
                return Err(Error::Unsupported(format!(
                    "coefficients {coeffs} with algebra {algebra}; supported are ZZ/ZZ, Zmod(n)/Zmod(n), \
                     ZZ/Poly(ZZ; ..), ZZ/Zmod(n), A/A for A over a field, and k/k, k/Poly(k; ..), k/Quot over k"
                )))
            }
        };
        Ok(AlgebraConfig { coeffs, algebra, map, method })
    }

    pub fn coeffs(&self) -> &Ring {
        &self.coeffs
    }

    pub fn algebra(&self) -> &Ring {
        &self.algebra
    }

    pub fn structure_map(&self) -> StructureMap {
        self.map
    }

    pub fn parse_element(&self, text: &str) -> Result<Elem> {
        self.algebra.parse_elem(text)
    }

    pub fn parse_elements<S: AsRef<str>>(&self, texts: &[S]) -> Result<Vec<Elem>> {
        texts.iter().map(|t| self.parse_element(t.as_ref())).collect()
    }
}

impl fmt::Display for AlgebraConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {}", self.coeffs, self.algebra)
    }
}

/// `f(args)` in `algebra`, with coefficients mapped from `coeffs`.
pub fn eval_poly(f: &Polynomial, coeffs: &Ring, args: &[Elem], algebra: &Ring) -> Result<Elem> {
    AlgebraConfig::new(coeffs.clone(), algebra.clone())?;
    f.eval(coeffs, args, algebra)
}

/// A polynomial relation witnessing dependence of `elements` with respect
/// to `ordering`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubmonicCertificate {
    pub config: AlgebraConfig,
    pub elements: Vec<Elem>,
    pub ordering: MonomialOrdering,
    pub poly: Polynomial,
    pub trailing: Monomial,
    pub degree_bound: u32,
    pub verified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum VerifyFailure {
    #[error("the polynomial is zero")]
    ZeroPolynomial,
    #[error("trailing coefficient {0} is not 1")]
    NotSubmonic(String),
    #[error("stated trailing monomial {stated} differs from the actual {actual}")]
    TrailingMismatch { stated: String, actual: String },
    #[error("evaluation failed: {0}")]
    Evaluation(String),
    #[error("the polynomial evaluates to {0}, not 0")]
    NonzeroValue(String),
}

fn var_names(n: usize) -> Vec<String> {
    (1..=n.max(1)).map(|i| format!("x{i}")).collect()
}

impl SubmonicCertificate {
    /// Assemble a certificate and check it.
    pub fn new(
        config: AlgebraConfig,
        elements: Vec<Elem>,
        ordering: MonomialOrdering,
        poly: Polynomial,
        degree_bound: u32,
    ) -> Result<Self> {
        let trailing = poly.trailing_term(&ordering)?.0.clone();
        let mut cert = SubmonicCertificate { config, elements, ordering, poly, trailing, degree_bound, verified: false };
        cert.verified = cert.check().is_ok();
        Ok(cert)
    }

    /// Recompute everything a certificate claims.
    pub fn check(&self) -> std::result::Result<(), VerifyFailure> {
        let coeffs = self.config.coeffs();
        let (m, c) = self.poly.trailing_term(&self.ordering).map_err(|_| VerifyFailure::ZeroPolynomial)?;
        if !coeffs.is_one(c) {
            return Err(VerifyFailure::NotSubmonic(coeffs.fmt_elem(c)));
        }
        if *m != self.trailing {
            return Err(VerifyFailure::TrailingMismatch { stated: self.trailing.to_string(), actual: m.to_string() });
        }
        let v = self
            .poly
            .eval(coeffs, &self.elements, self.config.algebra())
            .map_err(|e| VerifyFailure::Evaluation(e.to_string()))?;
        if !self.config.algebra().is_zero(&v) {
            return Err(VerifyFailure::NonzeroValue(self.config.algebra().fmt_elem(&v)));
        }
        Ok(())
    }

    pub fn poly_string(&self) -> String {
        let coeffs = self.config.coeffs();
        self.poly.render(&var_names(self.elements.len()), |c| coeffs.fmt_elem(c))
    }

    pub fn total_degree(&self) -> u32 {
        self.poly.total_degree().unwrap_or(0)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(self.to_wire()).expect("certificate serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_wire()).expect("certificate serializes")
    }

    /// Parse a certificate; `verified` is recomputed, never trusted.
    pub fn from_json(text: &str) -> Result<Self> {
        Self::from_wire(serde_json::from_str(text)?)
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        Self::from_wire(serde_json::from_value(v.clone())?)
    }

    pub(crate) fn to_wire(&self) -> CertificateWire {
        let coeffs = self.config.coeffs();
        let mut terms: Vec<(&Monomial, &Elem)> = self.poly.terms().collect();
        terms.sort_by(|a, b| self.ordering.compare(a.0, b.0));
        CertificateWire {
            ring: self.config.algebra().to_string(),
            coeff_ring: coeffs.to_string(),
            ordering: self.ordering.to_string(),
            elements: self.elements.iter().map(|e| self.config.algebra().fmt_elem(e)).collect(),
            poly: terms.into_iter().map(|(m, c)| (coeffs.fmt_elem(c), m.pairs().to_vec())).collect(),
            trailing: self.trailing.pairs().to_vec(),
            degree_bound: self.degree_bound,
            verified: self.verified,
        }
    }

    pub(crate) fn from_wire(w: CertificateWire) -> Result<Self> {
        let algebra: Ring = w.ring.parse()?;
        let coeffs: Ring = w.coeff_ring.parse()?;
        let config = AlgebraConfig::new(coeffs.clone(), algebra)?;
        let ordering: MonomialOrdering = w.ordering.parse()?;
        let elements = config.parse_elements(&w.elements)?;
        let mut poly = Polynomial::zero();
        for (c, pairs) in &w.poly {
            let m = Monomial::from_pairs(pairs.iter().copied())
                .ok_or_else(|| Error::Invalid(format!("malformed monomial {pairs:?}")))?;
            if poly.coefficient(&m).is_some() {
                return Err(Error::Invalid(format!("monomial {m} listed twice")));
            }
            let c = coeffs.parse_elem(c)?;
            if coeffs.is_zero(&c) {
                return Err(Error::Invalid(format!("zero coefficient stored for {m}")));
            }
            poly.add_term(m, c, &coeffs);
        }
        let trailing = Monomial::from_pairs(w.trailing.iter().copied())
            .ok_or_else(|| Error::Invalid(format!("malformed trailing monomial {:?}", w.trailing)))?;
        let mut cert =
            SubmonicCertificate { config, elements, ordering, poly, trailing, degree_bound: w.degree_bound, verified: false };
        cert.verified = cert.check().is_ok();
        Ok(cert)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub(crate) struct CertificateWire {
    ring: String,
    coeff_ring: String,
    ordering: String,
    elements: Vec<String>,
    poly: Vec<(String, Vec<(u32, u32)>)>,
    trailing: Vec<(u32, u32)>,
    degree_bound: u32,
    verified: bool,
}

/// Pure re-computation of a certificate's claims.
pub fn verify_certificate(cert: &SubmonicCertificate) -> bool {
    cert.check().is_ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DependenceVerdict {
    Dependent(Box<SubmonicCertificate>),
    /// No submonic relation of total degree at most this bound exists.
    NoRelationUpTo(u32),
}

impl DependenceVerdict {
    pub fn certificate(&self) -> Option<&SubmonicCertificate> {
        match self {
            DependenceVerdict::Dependent(c) => Some(c),
            DependenceVerdict::NoRelationUpTo(_) => None,
        }
    }

    pub fn is_dependent(&self) -> bool {
        matches!(self, DependenceVerdict::Dependent(_))
    }
}

/// Search for a submonic `f` of total degree at most `max_degree` with
/// `f(elems) = 0`, trying trailing monomials in increasing order.
///
/// Exceeding the candidate-monomial cap is reported as
/// [`Error::ResourceExceeded`], never as a negative answer.
pub fn search_submonic_relation(
    config: &AlgebraConfig,
    elems: &[Elem],
    ord: &MonomialOrdering,
    max_degree: u32,
) -> Result<DependenceVerdict> {
    search_with_cap(config, elems, ord, max_degree, monomial_cap())
}

pub fn search_with_cap(
    config: &AlgebraConfig,
    elems: &[Elem],
    ord: &MonomialOrdering,
    max_degree: u32,
    cap: u128,
) -> Result<DependenceVerdict> {
    let n = elems.len();
    let count = count_monomials(n, max_degree);
    if count > cap {
        return Err(Error::ResourceExceeded { what: "candidate monomials".into(), count, limit: cap });
    }
    let mut monos = monomials_up_to(n, max_degree);
    monos.sort_by(|a, b| ord.compare(a, b));
    let values = evaluate_all(config.algebra(), elems, &monos, max_degree);

    let found = match &config.method {
        Method::Linear(scalars) => linear_search(config, scalars, &values)?,
        Method::Ideal => ideal_search(config, &values)?,
    };
    let Some((idx, coeffs)) = found else {
        return Ok(DependenceVerdict::NoRelationUpTo(max_degree));
    };

    let r = config.coeffs();
    let mut terms = vec![(monos[idx].clone(), r.one())];
    terms.extend(monos[idx + 1..].iter().cloned().zip(coeffs));
    let f = Polynomial::from_terms(terms, r);
    let cert = SubmonicCertificate::new(config.clone(), elems.to_vec(), ord.clone(), f, max_degree)?;
    if let Err(why) = cert.check() {
        return Err(Error::Internal(format!("search produced an invalid certificate: {why}")));
    }
    Ok(DependenceVerdict::Dependent(Box::new(cert)))
}

fn evaluate_all(algebra: &Ring, elems: &[Elem], monos: &[Monomial], max_degree: u32) -> Vec<Elem> {
    let powers: Vec<Vec<Elem>> = elems
        .iter()
        .map(|a| {
            let mut p = vec![algebra.one()];
            for _ in 0..max_degree {
                let next = algebra.mul(p.last().expect("nonempty"), a);
                p.push(next);
            }
            p
        })
        .collect();
    monos
        .iter()
        .map(|m| {
            m.pairs()
                .iter()
                .fold(algebra.one(), |acc, &(i, e)| algebra.mul(&acc, &powers[i as usize - 1][e as usize]))
        })
        .collect()
}

/// Coordinate vectors of `values` over `scalars`.
fn coordinates(values: &[Elem], scalars: &Ring) -> Vec<Vec<Scalar>> {
    let zero = scalars.zero().as_scalar().expect("scalar ring").clone();
    if values.iter().all(|v| v.as_scalar().is_some()) {
        return values.iter().map(|v| vec![v.as_scalar().expect("scalar").clone()]).collect();
    }
    let mut index: BTreeMap<&Monomial, usize> = BTreeMap::new();
    for v in values {
        for m in v.as_poly().expect("polynomial value").monomials() {
            let k = index.len();
            index.entry(m).or_insert(k);
        }
    }
    values
        .iter()
        .map(|v| {
            let mut row = vec![zero.clone(); index.len()];
            for (m, c) in v.as_poly().expect("polynomial value").terms() {
                row[index[m]] = c.as_scalar().expect("scalar coefficient").clone();
            }
            row
        })
        .collect()
}

enum Tracker {
    Int(IntLattice),
    Field(FieldSpan),
}

fn as_int(s: &Scalar) -> BigInt {
    s.to_bigint().expect("integer or residue")
}

/// Index of the least monomial whose value lies in the span of the values of
/// all larger monomials, with the coefficients of the relation.
fn linear_search(config: &AlgebraConfig, scalars: &Ring, values: &[Elem]) -> Result<Option<(usize, Vec<Elem>)>> {
    let vectors = coordinates(values, scalars);
    let dim = vectors.first().map_or(0, Vec::len);
    let mut tracker = match scalars {
        Ring::ZZ => Tracker::Int(IntLattice::default()),
        Ring::Zmod(n) => Tracker::Int(IntLattice::modulus(dim, *n)),
        _ => Tracker::Field(FieldSpan::default()),
    };
    // Decide every candidate sweeping downwards, so each membership test
    // sees exactly the larger monomials.
    let mut winner = None;
    for (idx, v) in vectors.iter().enumerate().rev() {
        match &mut tracker {
            Tracker::Int(l) => {
                let ints: Vec<BigInt> = v.iter().map(as_int).collect();
                if l.contains(&ints) {
                    winner = Some(idx);
                }
                l.insert(ints);
            }
            Tracker::Field(s) => {
                if s.contains(v) {
                    winner = Some(idx);
                }
                s.insert(v.clone());
            }
        }
    }
    let Some(idx) = winner else { return Ok(None) };
    let SpanSolution::InSpan(y) = solve_in_span_plain(&vectors[idx], &vectors[idx + 1..], scalars)? else {
        return Err(Error::Internal("span decision and solver disagree".into()));
    };
    let r = config.coeffs();
    let coeffs = y
        .iter()
        .map(|c| {
            let neg = c.neg();
            match (r, &neg) {
                (Ring::ZZ, Scalar::Zmod { value, .. }) => Elem::S(Scalar::Int(BigInt::from(*value))),
                _ => Elem::S(neg),
            }
        })
        .collect();
    Ok(Some((idx, coeffs)))
}

fn ideal_search(config: &AlgebraConfig, values: &[Elem]) -> Result<Option<(usize, Vec<Elem>)>> {
    let algebra = config.algebra();
    let pr: Arc<PolyRing> = algebra.poly_ring().expect("polynomial algebra").clone();
    let ambient = Ring::Poly(pr.clone());
    let base = &pr.base;
    let extra: Vec<Polynomial> = match algebra {
        Ring::Quot(q) => q.basis.polys().to_vec(),
        _ => Vec::new(),
    };
    let polys: Vec<&Polynomial> = values.iter().map(|v| v.as_poly().expect("polynomial value")).collect();
    let ord = MonomialOrdering::grevlex();
    for idx in 0..polys.len() {
        let mut gens: Vec<Polynomial> = polys[idx + 1..].iter().map(|p| (*p).clone()).collect();
        let k = gens.len();
        gens.extend(extra.iter().cloned());
        if let Some(h) = groebner::lift(&ambient, polys[idx], &gens, &ord)? {
            let coeffs = h
                .into_iter()
                .take(k)
                .map(|c| algebra.elem_from_poly(c.neg(base)))
                .collect::<Result<Vec<_>>>()?;
            return Ok(Some((idx, coeffs)));
        }
    }
    Ok(None)
}

/// For nonzero integers `a`, `b`: the least `n` with `gcd(a, b^(n+1)) | b^n`
/// and the relation `b^n = c*a + d*b^(n+1)` as `x2^n - c*x1 - d*x2^(n+1)`,
/// submonic under lex with `x1 > x2`.
pub fn pid_pair_certificate(a: &BigInt, b: &BigInt) -> Result<SubmonicCertificate> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::Precondition("pid_pair_certificate needs nonzero integers".into()));
    }
    let mut n: u32 = 0;
    let mut bn = BigInt::one();
    let (c, d) = loop {
        let bn1 = &bn * b;
        let (g, s, t) = ext_gcd(a, &bn1);
        if bn.is_multiple_of(&g) {
            let q = &bn / &g;
            break (s * &q, t * &q);
        }
        bn = bn1;
        n += 1;
    };
    let config = AlgebraConfig::new(Ring::ZZ, Ring::ZZ)?;
    let int = |v: BigInt| Elem::S(Scalar::Int(v));
    let f = Polynomial::from_terms(
        [
            (Monomial::var(2).pow(n), int(BigInt::one())),
            (Monomial::var(1), int(-c)),
            (Monomial::var(2).pow(n + 1), int(-d)),
        ],
        &Ring::ZZ,
    );
    let cert = SubmonicCertificate::new(config, vec![int(a.clone()), int(b.clone())], MonomialOrdering::lex(), f, n + 1)?;
    if let Err(why) = cert.check() {
        return Err(Error::Internal(format!("pair certificate failed: {why}")));
    }
    Ok(cert)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TupleOutcome {
    Dependent(Box<SubmonicCertificate>),
    NoRelationUpTo(u32),
    ResourceExceeded(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixEntry {
    /// Positions in the pool, increasing.
    pub indices: Vec<usize>,
    pub outcome: TupleOutcome,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DependenceMatrix {
    pub arity: usize,
    pub degree_bound: u32,
    pub entries: Vec<MatrixEntry>,
    pub dependent: usize,
    pub no_relation: usize,
    pub resource_exceeded: usize,
}

impl DependenceMatrix {
    /// Tuples with no relation up to the bound: witnesses that the
    /// transcendence degree may be at least the arity.
    pub fn candidates(&self) -> impl Iterator<Item = &MatrixEntry> {
        self.entries.iter().filter(|e| matches!(e.outcome, TupleOutcome::NoRelationUpTo(_)))
    }
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k as u128 {
        acc = match acc.checked_mul(n as u128 - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Search every `arity`-subset of `pool` (kept in pool order).
pub fn dependence_matrix(
    config: &AlgebraConfig,
    pool: &[Elem],
    arity: usize,
    ord: &MonomialOrdering,
    max_degree: u32,
) -> Result<DependenceMatrix> {
    if pool.is_empty() || arity == 0 {
        return Err(Error::Invalid("dependence matrix needs a nonempty pool and arity >= 1".into()));
    }
    let count = binomial(pool.len(), arity);
    if count > TUPLE_CAP {
        return Err(Error::ResourceExceeded { what: "tuples".into(), count, limit: TUPLE_CAP });
    }
    let cap = monomial_cap();
    let entries = combinations(pool.len(), arity)
        .into_par_iter()
        .map(|indices| {
            let elems: Vec<Elem> = indices.iter().map(|&i| pool[i].clone()).collect();
            let outcome = match search_with_cap(config, &elems, ord, max_degree, cap) {
                Ok(DependenceVerdict::Dependent(c)) => TupleOutcome::Dependent(c),
                Ok(DependenceVerdict::NoRelationUpTo(d)) => TupleOutcome::NoRelationUpTo(d),
                Err(e @ Error::ResourceExceeded { .. }) => TupleOutcome::ResourceExceeded(e.to_string()),
                Err(e) => return Err(e),
            };
            Ok(MatrixEntry { indices, outcome })
        })
        .collect::<Result<Vec<_>>>()?;
    let tally = |f: fn(&TupleOutcome) -> bool| entries.iter().filter(|e| f(&e.outcome)).count();
    Ok(DependenceMatrix {
        arity,
        degree_bound: max_degree,
        dependent: tally(|o| matches!(o, TupleOutcome::Dependent(_))),
        no_relation: tally(|o| matches!(o, TupleOutcome::NoRelationUpTo(_))),
        resource_exceeded: tally(|o| matches!(o, TupleOutcome::ResourceExceeded(_))),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zz_config() -> AlgebraConfig {
        AlgebraConfig::new(Ring::ZZ, Ring::ZZ).unwrap()
    }

    fn dep(config: &AlgebraConfig, elems: &[&str], ord: &str, d: u32) -> DependenceVerdict {
        let e = config.parse_elements(elems).unwrap();
        search_submonic_relation(config, &e, &ord.parse().unwrap(), d).unwrap()
    }

    #[test]
    fn integer_pair() {
        let v = dep(&zz_config(), &["12", "18"], "lex:x1>x2", 3);
        let cert = v.certificate().expect("dependent");
        assert_eq!(cert.poly_string(), "x2^2 - 27*x1");
        assert!(cert.verified);
    }

    #[test]
    fn two_is_not_dependent_in_small_degree() {
        assert_eq!(dep(&zz_config(), &["2"], "grevlex", 6), DependenceVerdict::NoRelationUpTo(6));
    }

    #[test]
    fn residues_mod_six() {
        let c = AlgebraConfig::new(Ring::Zmod(6), Ring::Zmod(6)).unwrap();
        let v = dep(&c, &["2"], "lex", 3);
        assert_eq!(v.certificate().unwrap().poly_string(), "5*x1^3 + x1");
    }

    #[test]
    fn ordering_asymmetry() {
        let a: Ring = "Poly(GF(7); t1,t2)".parse().unwrap();
        let c = AlgebraConfig::new(a.clone(), a).unwrap();
        let v = dep(&c, &["t1", "t1*t2"], "lex:x1>x2", 1);
        let cert = v.certificate().expect("dependent");
        assert_eq!(cert.poly_string(), "6*t2*x1 + x2");
        assert_eq!(dep(&c, &["t1", "t1*t2"], "lex:x2>x1", 4), DependenceVerdict::NoRelationUpTo(4));

        let mut flipped = cert.clone();
        flipped.ordering = "lex:x2>x1".parse().unwrap();
        assert!(matches!(flipped.check(), Err(VerifyFailure::NotSubmonic(_))));
    }

    #[test]
    fn zero_polynomial_fails() {
        let cert = pid_pair_certificate(&12.into(), &18.into()).unwrap();
        let mut bad = cert.clone();
        bad.poly = Polynomial::zero();
        assert_eq!(bad.check(), Err(VerifyFailure::ZeroPolynomial));
    }

    #[test]
    fn pid_pairs() {
        let cert = pid_pair_certificate(&12.into(), &18.into()).unwrap();
        assert_eq!(cert.poly_string(), "x2^2 - 27*x1");
        let cert = pid_pair_certificate(&4.into(), &6.into()).unwrap();
        assert_eq!(cert.poly_string(), "x2^2 - 9*x1");
        let cert = pid_pair_certificate(&1.into(), &7.into()).unwrap();
        assert_eq!(cert.poly_string(), "-x1 + 1");
        assert!(pid_pair_certificate(&0.into(), &7.into()).is_err());
    }

    #[test]
    fn polynomial_algebra_over_integers() {
        let a: Ring = "Poly(ZZ; x)".parse().unwrap();
        let c = AlgebraConfig::new(Ring::ZZ, a).unwrap();
        let v = dep(&c, &["x", "x^2"], "grevlex", 2);
        assert!(v.certificate().unwrap().verified);
        let v = dep(&c, &["x"], "grevlex", 5);
        assert_eq!(v, DependenceVerdict::NoRelationUpTo(5));
    }

    #[test]
    fn field_into_quotient() {
        let a: Ring = "Quot(Poly(QQ; x,y); [x*y])".parse().unwrap();
        let c = AlgebraConfig::new(Ring::QQ, a).unwrap();
        let v = dep(&c, &["x + 1"], "lex", 3);
        assert_eq!(v, DependenceVerdict::NoRelationUpTo(3));
        let v = dep(&c, &["x + y", "x - y"], "grevlex", 2);
        assert!(v.certificate().is_some() || v == DependenceVerdict::NoRelationUpTo(2));
    }

    #[test]
    fn unsupported_pairs() {
        let a: Ring = "Poly(ZZ; x)".parse().unwrap();
        assert!(matches!(AlgebraConfig::new(a.clone(), a), Err(Error::Unsupported(_))));
        assert!(AlgebraConfig::new(Ring::QQ, Ring::ZZ).is_err());
    }

    #[test]
    fn cap_is_enforced() {
        let e = zz_config().parse_elements(&["2", "3", "5"]).unwrap();
        let r = search_with_cap(&zz_config(), &e, &MonomialOrdering::grevlex(), 10, 100);
        assert!(matches!(r, Err(Error::ResourceExceeded { .. })));
    }

    #[test]
    fn json_round_trip() {
        let cert = dep(&zz_config(), &["12", "18"], "lex:x1>x2", 3).certificate().unwrap().clone();
        let text = cert.to_json();
        let back = SubmonicCertificate::from_json(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn matrix_over_small_integers() {
        let pool = zz_config().parse_elements(&["2", "3", "4", "5", "6", "7", "8", "9", "10"]).unwrap();
        let m = dependence_matrix(&zz_config(), &pool, 2, &MonomialOrdering::lex(), 4).unwrap();
        assert_eq!(m.entries.len(), 36);
        assert_eq!(m.dependent, 36);
        let single = dependence_matrix(&zz_config(), &pool[..1], 1, &MonomialOrdering::lex(), 6).unwrap();
        assert_eq!(single.candidates().count(), 1);
    }
}
