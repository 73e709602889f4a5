//! Buchberger's algorithm over QQ and GF(p): reduced bases, normal forms,
//! ideal membership with cofactors, and Krull dimension from the staircase.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;
use crate::poly::Polynomial;
use crate::ring::{Elem, PolyRing, Ring};
use crate::scalar::Scalar;

/// Terms sorted in increasing order, so the leading term is last.
type Terms = Vec<(Monomial, Scalar)>;

fn to_terms(p: &Polynomial, ord: &MonomialOrdering) -> Result<Terms> {
    let mut out: Terms = p
        .terms()
        .map(|(m, c)| match c {
            Elem::S(s @ (Scalar::Rat(_) | Scalar::Gf { .. })) => Ok((m.clone(), s.clone())),
            other => Err(Error::NonFieldCoefficients(format!("{other:?}"))),
        })
        .collect::<Result<_>>()?;
    out.sort_by(|a, b| ord.compare(&a.0, &b.0));
    Ok(out)
}

fn to_poly(t: &Terms, base: &Ring) -> Polynomial {
    Polynomial::from_terms(t.iter().map(|(m, c)| (m.clone(), Elem::S(c.clone()))), base)
}

/// `p + c * m * g`, all lists increasing under `ord`.
fn axpy(p: &[(Monomial, Scalar)], c: &Scalar, m: &Monomial, g: &[(Monomial, Scalar)], ord: &MonomialOrdering) -> Terms {
    let mut out = Vec::with_capacity(p.len() + g.len());
    let mut i = 0;
    let mut shifted = g.iter().map(|(gm, gc)| (gm.mul(m), gc.mul(c))).peekable();
    while i < p.len() || shifted.peek().is_some() {
        let take_p = match shifted.peek() {
            None => true,
            Some((sm, _)) if i < p.len() => match ord.compare(&p[i].0, sm) {
                Ordering::Less => true,
                Ordering::Greater => false,
                Ordering::Equal => {
                    let (sm, sc) = shifted.next().expect("peeked");
                    let v = p[i].1.add(&sc);
                    if !v.is_zero() {
                        out.push((sm, v));
                    }
                    i += 1;
                    continue;
                }
            },
            Some(_) => false,
        };
        if take_p {
            out.push(p[i].clone());
            i += 1;
        } else {
            out.push(shifted.next().expect("peeked"));
        }
    }
    out
}

fn scale(p: &Terms, c: &Scalar) -> Terms {
    p.iter().map(|(m, v)| (m.clone(), v.mul(c))).collect()
}

/// A basis element together with its expression in the input generators.
#[derive(Clone, Debug)]
struct Tracked {
    poly: Terms,
    cof: Option<Vec<Terms>>,
}

impl Tracked {
    fn lm(&self) -> &Monomial {
        &self.poly.last().expect("nonzero").0
    }

    /// `self + c * m * other`
    fn axpy(&self, c: &Scalar, m: &Monomial, other: &Tracked, ord: &MonomialOrdering) -> Tracked {
        let poly = axpy(&self.poly, c, m, &other.poly, ord);
        let cof = match (&self.cof, &other.cof) {
            (Some(a), Some(b)) => Some(a.iter().zip(b).map(|(x, y)| axpy(x, c, m, y, ord)).collect()),
            _ => None,
        };
        Tracked { poly, cof }
    }

    fn make_monic(&mut self) {
        let inv = self.poly.last().expect("nonzero").1.inverse().expect("field coefficient");
        self.poly = scale(&self.poly, &inv);
        if let Some(cof) = &mut self.cof {
            for c in cof.iter_mut() {
                *c = scale(c, &inv);
            }
        }
    }
}

/// Full reduction of `f` by monic `basis` (skipping index `skip`).
fn reduce(f: &Tracked, basis: &[Tracked], skip: Option<usize>, ord: &MonomialOrdering) -> Tracked {
    let mut p = f.clone();
    let mut rem: Terms = Vec::new();
    while let Some((m, c)) = p.poly.last().cloned() {
        let divisor = basis
            .iter()
            .enumerate()
            .filter(|(k, _)| Some(*k) != skip)
            .find_map(|(_, g)| g.lm().div_into(&m).map(|q| (g, q)));
        match divisor {
            Some((g, q)) => p = p.axpy(&c.neg(), &q, g, ord),
            None => {
                rem.push(p.poly.pop().expect("nonempty"));
            }
        }
    }
    rem.reverse();
    Tracked { poly: rem, cof: p.cof }
}

fn spoly(a: &Tracked, b: &Tracked, ord: &MonomialOrdering) -> Tracked {
    let l = a.lm().lcm(b.lm());
    let qa = a.lm().div_into(&l).expect("lcm");
    let qb = b.lm().div_into(&l).expect("lcm");
    let one = a.poly[0].1.one_like();
    let zero = Tracked { poly: Vec::new(), cof: a.cof.as_ref().map(|c| vec![Vec::new(); c.len()]) };
    zero.axpy(&one, &qa, a, ord).axpy(&one.neg(), &qb, b, ord)
}

fn pair(i: usize, j: usize) -> (usize, usize) {
    (i.min(j), i.max(j))
}

/// Buchberger with the normal selection strategy and the product and chain
/// criteria, followed by minimisation and interreduction.
fn compute(gens: &[Terms], ord: &MonomialOrdering, track: bool) -> Vec<Tracked> {
    let n = gens.len();
    let mut g: Vec<Tracked> = Vec::new();
    for (j, p) in gens.iter().enumerate() {
        if p.is_empty() {
            continue;
        }
        let cof = track.then(|| {
            let mut v = vec![Vec::new(); n];
            v[j] = vec![(Monomial::one(), p[0].1.one_like())];
            v
        });
        let mut t = Tracked { poly: p.clone(), cof };
        t.make_monic();
        g.push(t);
    }
    let mut pairs: BTreeSet<(usize, usize)> = BTreeSet::new();
    for j in 0..g.len() {
        for i in 0..j {
            pairs.insert((i, j));
        }
    }
    while !pairs.is_empty() {
        let &(i, j) = pairs
            .iter()
            .min_by(|a, b| {
                let la = g[a.0].lm().lcm(g[a.1].lm());
                let lb = g[b.0].lm().lcm(g[b.1].lm());
                la.degree().cmp(&lb.degree()).then_with(|| ord.compare(&la, &lb))
            })
            .expect("nonempty");
        pairs.remove(&(i, j));
        if g[i].lm().is_coprime(g[j].lm()) {
            continue;
        }
        let l = g[i].lm().lcm(g[j].lm());
        let chain = (0..g.len()).any(|k| {
            k != i
                && k != j
                && !pairs.contains(&pair(i, k))
                && !pairs.contains(&pair(j, k))
                && g[k].lm().divides(&l)
        });
        if chain {
            continue;
        }
        let s = spoly(&g[i], &g[j], ord);
        let mut r = reduce(&s, &g, None, ord);
        if r.poly.is_empty() {
            continue;
        }
        r.make_monic();
        let t = g.len();
        g.push(r);
        for k in 0..t {
            pairs.insert((k, t));
        }
    }

    // Keep one element per minimal leading monomial.
    let mut keep: Vec<Tracked> = Vec::new();
    for (i, gi) in g.iter().enumerate() {
        let redundant = g.iter().enumerate().any(|(k, gk)| {
            k != i && gk.lm().divides(gi.lm()) && (gk.lm() != gi.lm() || k < i)
        });
        if !redundant {
            keep.push(gi.clone());
        }
    }
    for i in 0..keep.len() {
        let r = reduce(&keep[i], &keep, Some(i), ord);
        keep[i] = r;
    }
    keep.sort_by(|a, b| ord.compare(a.lm(), b.lm()));
    keep
}

fn field_base(ring: &PolyRing) -> Result<&Ring> {
    if ring.base.is_field() {
        Ok(&ring.base)
    } else {
        Err(Error::NonFieldCoefficients(ring.base.to_string()))
    }
}

/// Reduced Groebner basis of an ideal of a polynomial ring over a field.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<PolyRing>,
    ord: MonomialOrdering,
    terms: Vec<Terms>,
    polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn new(ring: Arc<PolyRing>, gens: &[Polynomial], ord: MonomialOrdering) -> Result<Self> {
        let base = field_base(&ring)?.clone();
        let gens = gens.iter().map(|p| to_terms(p, &ord)).collect::<Result<Vec<_>>>()?;
        let terms: Vec<Terms> = compute(&gens, &ord, false).into_iter().map(|t| t.poly).collect();
        let polys = terms.iter().map(|t| to_poly(t, &base)).collect();
        Ok(GroebnerBasis { ring, ord, terms, polys })
    }

    pub fn ring(&self) -> &Arc<PolyRing> {
        &self.ring
    }

    pub fn ordering(&self) -> &MonomialOrdering {
        &self.ord
    }

    /// Basis elements, monic, in increasing order of leading monomial.
    pub fn polys(&self) -> &[Polynomial] {
        &self.polys
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.terms.iter().map(|t| t.last().expect("nonzero").0.clone()).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.terms.iter().any(|t| t.len() == 1 && t[0].0.is_one())
    }

    /// Remainder of `f` on division by the basis; zero iff `f` is in the ideal.
    ///
    /// Panics if `f` has coefficients outside the base field.
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let t = to_terms(f, &self.ord).expect("coefficients in the base field");
        let basis: Vec<Tracked> = self.terms.iter().map(|p| Tracked { poly: p.clone(), cof: None }).collect();
        let r = reduce(&Tracked { poly: t, cof: None }, &basis, None, &self.ord);
        to_poly(&r.poly, &self.ring.base)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Every S-polynomial of basis pairs reduces to zero.
    pub fn check_s_pairs(&self) -> bool {
        let basis: Vec<Tracked> = self.terms.iter().map(|p| Tracked { poly: p.clone(), cof: None }).collect();
        for j in 0..basis.len() {
            for i in 0..j {
                let s = spoly(&basis[i], &basis[j], &self.ord);
                if !reduce(&s, &basis, None, &self.ord).poly.is_empty() {
                    return false;
                }
            }
        }
        true
    }

    /// Krull dimension of the quotient by this ideal: the size of a largest
    /// variable set containing the support of no leading monomial, or -1 for
    /// the unit ideal.
    pub fn staircase_dimension(&self) -> Result<i64> {
        if self.is_unit_ideal() {
            return Ok(-1);
        }
        let n = self.ring.vars.len();
        if n > 24 {
            return Err(Error::ResourceExceeded {
                what: "variable subsets for dimension".into(),
                count: 1u128 << n,
                limit: 1 << 24,
            });
        }
        let masks: Vec<u32> = self
            .leading_monomials()
            .iter()
            .map(|m| m.support().fold(0u32, |acc, v| acc | 1 << (v - 1)))
            .collect();
        let best = (0u32..1 << n)
            .filter(|s| masks.iter().all(|m| m & !s != 0))
            .map(|s| s.count_ones())
            .max()
            .unwrap_or(0);
        Ok(best as i64)
    }
}

fn poly_ring_of(ring: &Ring) -> Result<&Arc<PolyRing>> {
    match ring {
        Ring::Poly(pr) => {
            field_base(pr)?;
            Ok(pr)
        }
        other => Err(Error::RingMismatch(format!("expected a polynomial ring over a field, got {other}"))),
    }
}

pub fn buchberger(ring: &Ring, gens: &[Polynomial], ord: &MonomialOrdering) -> Result<GroebnerBasis> {
    GroebnerBasis::new(poly_ring_of(ring)?.clone(), gens, ord.clone())
}

pub fn ideal_membership(ring: &Ring, f: &Polynomial, gens: &[Polynomial], ord: &MonomialOrdering) -> Result<bool> {
    Ok(buchberger(ring, gens, ord)?.contains(f))
}

pub fn staircase_dimension(ring: &Ring, gens: &[Polynomial], ord: &MonomialOrdering) -> Result<i64> {
    buchberger(ring, gens, ord)?.staircase_dimension()
}

/// Cofactors `h` with `f = sum h_i gens_i`, or `None` if `f` is not in the ideal.
pub fn lift(ring: &Ring, f: &Polynomial, gens: &[Polynomial], ord: &MonomialOrdering) -> Result<Option<Vec<Polynomial>>> {
    let pr = poly_ring_of(ring)?;
    let base = &pr.base;
    let target = to_terms(f, ord)?;
    if target.is_empty() {
        return Ok(Some(vec![Polynomial::zero(); gens.len()]));
    }
    let g = gens.iter().map(|p| to_terms(p, ord)).collect::<Result<Vec<_>>>()?;
    let basis = compute(&g, ord, true);
    let start = Tracked { poly: target, cof: Some(vec![Vec::new(); gens.len()]) };
    // Reducing f to zero gives f - sum q_k b_k = 0; the tracked cofactors
    // accumulate -sum q_k cof(b_k).
    let r = reduce(&start, &basis, None, ord);
    if !r.poly.is_empty() {
        return Ok(None);
    }
    let minus_one = base.one().as_scalar().expect("field base").neg();
    let cof = r.cof.expect("tracked");
    let out: Vec<Polynomial> = cof.iter().map(|c| to_poly(&scale(c, &minus_one), base)).collect();
    let mut check = Polynomial::zero();
    for (h, gi) in out.iter().zip(gens) {
        check = check.add(&h.mul(gi, base), base);
    }
    if check != *f {
        return Err(Error::Internal("ideal cofactors do not reproduce the target".into()));
    }
    Ok(Some(out))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ring(s: &str) -> Ring {
        s.parse().unwrap()
    }

    fn polys(r: &Ring, gens: &[&str]) -> Vec<Polynomial> {
        gens.iter().map(|g| parse_poly(g, r).unwrap()).collect()
    }

    fn printed(r: &Ring, gb: &GroebnerBasis) -> Vec<String> {
        gb.polys().iter().map(|p| crate::parse::print_poly(p, r)).collect()
    }

    #[test]
    fn basis_examples() {
        let r = ring("Poly(QQ; x,y)");
        let g = ord_grevlex();
        let gb = buchberger(&r, &polys(&r, &["x*y"]), &g).unwrap();
        assert_eq!(printed(&r, &gb), ["x*y"]);
        let gb = buchberger(&r, &polys(&r, &["x^2", "x*y", "y^2"]), &g).unwrap();
        assert_eq!(gb.polys().len(), 3);
        let gb = buchberger(&r, &polys(&r, &["x + y", "x - y"]), &g).unwrap();
        let mut p = printed(&r, &gb);
        p.sort();
        assert_eq!(p, ["x", "y"]);
        assert!(gb.check_s_pairs());
    }

    fn ord_grevlex() -> MonomialOrdering {
        MonomialOrdering::grevlex()
    }

    #[test]
    fn normal_forms() {
        let r = ring("Poly(QQ; x,y)");
        let gb = buchberger(&r, &polys(&r, &["x*y"]), &ord_grevlex()).unwrap();
        let x = parse_poly("x", &r).unwrap();
        assert_eq!(gb.normal_form(&x), x);
        assert!(gb.normal_form(&parse_poly("x^2*y", &r).unwrap()).is_zero());
        let gb = buchberger(&r, &polys(&r, &["x", "y"]), &ord_grevlex()).unwrap();
        assert!(gb.normal_form(&parse_poly("x^2 + y", &r).unwrap()).is_zero());
    }

    #[test]
    fn membership_in_monomial_ideal() {
        let r = ring("Poly(GF(7); t1,t2)");
        let gens = polys(&r, &["t1^2*t2^2", "t1^3*t2"]);
        let lex = MonomialOrdering::lex();
        assert!(!ideal_membership(&r, &parse_poly("t1^2*t2", &r).unwrap(), &gens, &lex).unwrap());
        assert!(ideal_membership(&r, &parse_poly("t1^2*t2^2", &r).unwrap(), &gens, &lex).unwrap());
        assert!(ideal_membership(&r, &Polynomial::zero(), &gens, &lex).unwrap());
    }

    #[test]
    fn dimensions() {
        let r = ring("Poly(QQ; x,y)");
        let g = ord_grevlex();
        assert_eq!(staircase_dimension(&r, &polys(&r, &["x*y"]), &g).unwrap(), 1);
        assert_eq!(staircase_dimension(&r, &polys(&r, &["x^2", "x*y", "y^2"]), &g).unwrap(), 0);
        assert_eq!(staircase_dimension(&r, &polys(&r, &["1"]), &g).unwrap(), -1);
        assert_eq!(staircase_dimension(&r, &[], &g).unwrap(), 2);
        let r3 = ring("Poly(QQ; x,y,z)");
        assert_eq!(staircase_dimension(&r3, &polys(&r3, &["x*z", "y*z"]), &g).unwrap(), 2);
    }

    #[test]
    fn lift_reproduces_target() {
        let r = ring("Poly(QQ; x,y)");
        let gens = polys(&r, &["x^2 - y", "x*y - 1"]);
        let f = parse_poly("x^3 - 1", &r).unwrap();
        for ord in [MonomialOrdering::lex(), ord_grevlex()] {
            let h = lift(&r, &f, &gens, &ord).unwrap().expect("member");
            assert_eq!(h.len(), 2);
        }
        assert!(lift(&r, &parse_poly("x", &r).unwrap(), &gens, &ord_grevlex()).unwrap().is_none());
    }

    #[test]
    fn rejects_integer_coefficients() {
        let r = ring("Poly(ZZ; x)");
        assert!(matches!(buchberger(&r, &[], &ord_grevlex()), Err(Error::NonFieldCoefficients(_))));
    }

    #[test]
    fn cyclic_three_is_consistent() {
        let r = ring("Poly(GF(101); a,b,c)");
        let gens = polys(&r, &["a + b + c", "a*b + b*c + c*a", "a*b*c - 1"]);
        for ord in [MonomialOrdering::lex(), ord_grevlex(), MonomialOrdering::grlex()] {
            let gb = buchberger(&r, &gens, &ord).unwrap();
            assert!(gb.check_s_pairs());
            for g in &gens {
                assert!(gb.contains(g));
            }
            assert_eq!(gb.staircase_dimension().unwrap(), 0);
        }
    }
}
