use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;
use crate::ring::{Elem, Ring};

/// Sparse multivariate polynomial; coefficients live in a ring supplied by the
/// caller on every arithmetic call. No zero coefficients are stored, so the
/// zero polynomial is the empty map and equality is syntactic.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Monomial, Elem>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Elem, base: &Ring) -> Self {
        Self::term(Monomial::one(), c, base)
    }

    pub fn term(m: Monomial, c: Elem, base: &Ring) -> Self {
        let mut terms = BTreeMap::new();
        if !base.is_zero(&c) {
            terms.insert(m, c);
        }
        Polynomial { terms }
    }

    pub fn var(index: u32, base: &Ring) -> Self {
        Self::term(Monomial::var(index), base.one(), base)
    }

    /// Sum of the given terms; repeated monomials are combined.
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, Elem)>, base: &Ring) -> Self {
        let mut p = Polynomial::zero();
        for (m, c) in terms {
            p.add_term(m, c, base);
        }
        p
    }

    pub fn add_term(&mut self, m: Monomial, c: Elem, base: &Ring) {
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                if !base.is_zero(&c) {
                    v.insert(c);
                }
            }
            Entry::Occupied(mut o) => {
                let s = base.add(o.get(), &c);
                if base.is_zero(&s) {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Elem)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Elem)> {
        self.terms.into_iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn coefficient(&self, m: &Monomial) -> Option<&Elem> {
        self.terms.get(m)
    }

    /// The coefficient of `1`, if nonzero.
    pub fn constant_term(&self) -> Option<&Elem> {
        self.terms.get(&Monomial::one())
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn max_var(&self) -> u32 {
        self.terms.keys().map(Monomial::max_var).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self, base: &Ring) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone(), base);
        }
        out
    }

    pub fn neg(&self, base: &Ring) -> Self {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), base.neg(c))).collect() }
    }

    pub fn sub(&self, other: &Self, base: &Ring) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), base.neg(c), base);
        }
        out
    }

    /// `c * m * self`.
    pub fn mul_term(&self, m: &Monomial, c: &Elem, base: &Ring) -> Self {
        let mut out = Polynomial::zero();
        for (k, v) in &self.terms {
            out.add_term(k.mul(m), base.mul(v, c), base);
        }
        out
    }

    pub fn scale(&self, c: &Elem, base: &Ring) -> Self {
        self.mul_term(&Monomial::one(), c, base)
    }

    pub fn mul(&self, other: &Self, base: &Ring) -> Self {
        let mut out = Polynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.mul(m2), base.mul(c1, c2), base);
            }
        }
        out
    }

    pub fn pow(&self, mut exp: u32, base: &Ring) -> Self {
        let mut acc = Polynomial::constant(base.one(), base);
        let mut b = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&b, base);
            }
            exp >>= 1;
            if exp > 0 {
                b = b.mul(&b, base);
            }
        }
        acc
    }

    /// Apply `f` to every coefficient, dropping those that become zero.
    pub fn map_coefficients(&self, base: &Ring, f: impl Fn(&Elem) -> Elem) -> Self {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))), base)
    }

    /// The least monomial of the support under `ord` and its coefficient.
    pub fn trailing_term(&self, ord: &MonomialOrdering) -> Result<(&Monomial, &Elem)> {
        self.terms
            .iter()
            .min_by(|a, b| ord.compare(a.0, b.0))
            .ok_or(Error::ZeroPolynomial)
    }

    /// The greatest monomial of the support under `ord` and its coefficient.
    pub fn leading_term(&self, ord: &MonomialOrdering) -> Result<(&Monomial, &Elem)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.compare(a.0, b.0))
            .ok_or(Error::ZeroPolynomial)
    }

    /// Evaluate at `args` in `algebra`, mapping each coefficient from
    /// `coeffs` into `algebra` first.
    pub fn eval(&self, coeffs: &Ring, args: &[Elem], algebra: &Ring) -> Result<Elem> {
        let needed = self.max_var() as usize;
        if needed > args.len() {
            return Err(Error::Invalid(format!(
                "polynomial mentions x{needed} but only {} arguments were given",
                args.len()
            )));
        }
        let mut powers: Vec<Vec<Elem>> = args.iter().map(|a| vec![algebra.one(), a.clone()]).collect();
        let mut acc = algebra.zero();
        for (m, c) in &self.terms {
            let mut term = algebra.coerce_from(coeffs, c)?;
            for &(i, e) in m.pairs() {
                let table = &mut powers[i as usize - 1];
                while table.len() <= e as usize {
                    let next = algebra.mul(table.last().expect("nonempty"), &table[1]);
                    table.push(next);
                }
                term = algebra.mul(&term, &table[e as usize]);
            }
            acc = algebra.add(&acc, &term);
        }
        Ok(acc)
    }

    /// Render using `fmt_coeff` for coefficients and `names` for variables.
    /// Terms are printed in decreasing graded-lex order.
    pub fn render(&self, names: &[String], fmt_coeff: impl Fn(&Elem) -> String) -> String {
        if self.terms.is_empty() {
            return "0".to_owned();
        }
        let ord = MonomialOrdering::grlex();
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|a, b| ord.compare(b.0, a.0));
        let mut out = String::new();
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let cs = fmt_coeff(c);
            let piece = if m.is_one() {
                if is_atomic(&cs) {
                    cs
                } else {
                    format!("({cs})")
                }
            } else {
                let ms = m.render(names);
                match cs.as_str() {
                    "1" => ms,
                    "-1" => format!("-{ms}"),
                    _ if is_atomic(&cs) => format!("{cs}*{ms}"),
                    _ => format!("({cs})*{ms}"),
                }
            };
            if k == 0 {
                out.push_str(&piece);
            } else if let Some(rest) = piece.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&piece);
            }
        }
        out
    }
}

/// A coefficient string that can be glued to a monomial with `*` without
/// parentheses: a product, optionally with a leading minus.
fn is_atomic(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    !body.is_empty() && !body.contains(['+', '-', ' ', '('])
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn zz(v: i64) -> Elem {
        Ring::ZZ.from_int(&BigInt::from(v))
    }

    #[test]
    fn zero_coefficients_vanish() {
        let r = Ring::ZZ;
        let x = Polynomial::var(1, &r);
        let p = x.add(&x.neg(&r), &r);
        assert!(p.is_zero());
        assert!(Polynomial::constant(zz(0), &r).is_zero());
    }

    #[test]
    fn eval_integer_relation() {
        // x2^2 - 27*x1 at (12, 18)
        let r = Ring::ZZ;
        let f = Polynomial::from_terms(
            [(Monomial::var(2).pow(2), zz(1)), (Monomial::var(1), zz(-27))],
            &r,
        );
        assert_eq!(f.eval(&r, &[zz(12), zz(18)], &r).unwrap(), zz(0));
        let one = Polynomial::constant(zz(1), &r);
        assert_eq!(one.eval(&r, &[zz(5)], &r).unwrap(), zz(1));
    }

    #[test]
    fn eval_mod_six() {
        let r = Ring::zmod(6).unwrap();
        let f = Polynomial::from_terms(
            [(Monomial::var(1), r.one()), (Monomial::var(1).pow(3), r.neg(&r.one()))],
            &r,
        );
        let two = r.from_int(&BigInt::from(2));
        assert!(r.is_zero(&f.eval(&r, &[two], &r).unwrap()));
    }

    #[test]
    fn eval_arity_error() {
        let r = Ring::ZZ;
        let f = Polynomial::var(3, &r);
        assert!(f.eval(&r, &[zz(1)], &r).is_err());
    }

    #[test]
    fn render_signs() {
        let r = Ring::ZZ;
        let f = Polynomial::from_terms(
            [(Monomial::var(2).pow(2), zz(1)), (Monomial::var(1), zz(-27)), (Monomial::one(), zz(-1))],
            &r,
        );
        assert_eq!(f.render(&[], |c| r.fmt_elem(c)), "x2^2 - 27*x1 - 1");
    }
}
