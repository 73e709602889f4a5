//! Positive integer weight vectors that realise finitely many strict
//! comparisons of a monomial ordering as linear inequalities.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::ordering::MonomialOrdering;

/// Weights `w_1..w_n >= 1`; the weight of `x^d` is `sum w_i d_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightVector(Vec<BigInt>);

impl WeightVector {
    pub fn new(w: Vec<BigInt>) -> Result<Self> {
        if w.iter().any(|x| x < &BigInt::one()) {
            return Err(Error::Invalid(format!("weights must be >= 1, got {w:?}")));
        }
        Ok(WeightVector(w))
    }

    pub fn ones(n: usize) -> Self {
        WeightVector(vec![BigInt::one(); n])
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Weight of `m`; variables beyond the vector contribute nothing.
    pub fn weight(&self, m: &Monomial) -> BigInt {
        m.pairs()
            .iter()
            .filter_map(|&(i, e)| self.0.get(i as usize - 1).map(|w| w * BigInt::from(e)))
            .sum()
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

/// `coeffs . w >= rhs`
#[derive(Clone, Debug)]
struct Ineq {
    coeffs: Vec<BigRational>,
    rhs: BigRational,
}

/// Merge, scale and deduplicate. `None` if a variable-free row is violated.
fn normalize(rows: Vec<Ineq>) -> Option<Vec<Ineq>> {
    let mut best: BTreeMap<Vec<BigRational>, BigRational> = BTreeMap::new();
    for row in rows {
        let Some(lead) = row.coeffs.iter().find(|c| !c.is_zero()).map(|c| c.abs()) else {
            if row.rhs.is_positive() {
                return None;
            }
            continue;
        };
        let coeffs: Vec<BigRational> = row.coeffs.iter().map(|c| c / &lead).collect();
        let rhs = row.rhs / &lead;
        match best.get_mut(&coeffs) {
            Some(r) if *r >= rhs => {}
            Some(r) => *r = rhs,
            None => {
                best.insert(coeffs, rhs);
            }
        }
    }
    Some(best.into_iter().map(|(coeffs, rhs)| Ineq { coeffs, rhs }).collect())
}

/// Fourier-Motzkin elimination of variable `k`.
fn eliminate(rows: Vec<Ineq>, k: usize) -> Option<Vec<Ineq>> {
    let (mut pos, mut neg, mut out) = (Vec::new(), Vec::new(), Vec::new());
    for r in rows {
        if r.coeffs[k].is_positive() {
            pos.push(r);
        } else if r.coeffs[k].is_negative() {
            neg.push(r);
        } else {
            out.push(r);
        }
    }
    for p in &pos {
        for q in &neg {
            let (a, b) = (p.coeffs[k].clone(), -q.coeffs[k].clone());
            let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| x / &a + y / &b).collect();
            out.push(Ineq { coeffs, rhs: &p.rhs / &a + &q.rhs / &b });
        }
    }
    normalize(out)
}

fn ceil(r: &BigRational) -> BigInt {
    r.ceil().to_integer()
}

fn floor(r: &BigRational) -> BigInt {
    r.floor().to_integer()
}

/// Lexicographically smallest integer point of `rows` with the first
/// `fixed.len()` coordinates already chosen.
fn search(rows: &[Ineq], n: usize, fixed: &mut Vec<BigInt>) -> bool {
    let k = fixed.len();
    if k == n {
        return true;
    }
    let substituted: Vec<Ineq> = rows
        .iter()
        .map(|r| {
            let mut rhs = r.rhs.clone();
            let mut coeffs = r.coeffs.clone();
            for (i, v) in fixed.iter().enumerate() {
                rhs -= &coeffs[i] * BigRational::from_integer(v.clone());
                coeffs[i] = BigRational::zero();
            }
            Ineq { coeffs, rhs }
        })
        .collect();
    let Some(mut proj) = normalize(substituted.clone()) else { return false };
    for v in (k + 1..n).rev() {
        match eliminate(proj, v) {
            Some(p) => proj = p,
            None => return false,
        }
    }
    let (mut lo, mut hi): (Option<BigInt>, Option<BigInt>) = (None, None);
    for r in &proj {
        let a = &r.coeffs[k];
        if a.is_positive() {
            let b = ceil(&(&r.rhs / a));
            lo = Some(lo.map_or(b.clone(), |l| l.max(b)));
        } else if a.is_negative() {
            let b = floor(&(&r.rhs / a));
            hi = Some(hi.map_or(b.clone(), |h| h.min(b)));
        }
    }
    let (Some(lo), Some(hi)) = (lo, hi) else {
        unreachable!("box constraints bound every variable")
    };
    let mut v = lo;
    while v <= hi {
        fixed.push(v.clone());
        if search(&substituted, n, fixed) {
            return true;
        }
        fixed.pop();
        v += 1;
    }
    false
}

fn feasible_in_box(base: &[Ineq], n: usize, bound: &BigInt) -> Option<Vec<BigInt>> {
    let mut rows = base.to_vec();
    for i in 0..n {
        let mut coeffs = vec![BigRational::zero(); n];
        coeffs[i] = -BigRational::one();
        rows.push(Ineq { coeffs, rhs: -BigRational::from_integer(bound.clone()) });
    }
    let rows = normalize(rows)?;
    let mut fixed = Vec::new();
    search(&rows, n, &mut fixed).then_some(fixed)
}

/// Positive integer weights `w` with `w(trailing) < w(m)` for every `m` in
/// `above`, given that `trailing < m` under `ord` for each of them.
///
/// Among all such vectors the one with the smallest maximum entry is chosen,
/// and among those the lexicographically smallest.
pub fn separating_weights(
    trailing: &Monomial,
    above: &[Monomial],
    ord: &MonomialOrdering,
) -> Result<WeightVector> {
    for m in above {
        if !ord.less(trailing, m) {
            return Err(Error::Precondition(format!("{trailing} is not below {m} under {ord}")));
        }
    }
    let n = above.iter().map(Monomial::max_var).chain([trailing.max_var(), 1]).max().unwrap_or(1) as usize;
    if above.is_empty() {
        return Ok(WeightVector::ones(n));
    }
    let d = trailing.to_exponents(n);
    let mut base = Vec::new();
    for m in above {
        // w . (e - d) >= 1 is the integer form of the strict inequality.
        let e = m.to_exponents(n);
        let coeffs = e.iter().zip(&d).map(|(&a, &b)| BigRational::from_integer(BigInt::from(a as i64 - b as i64))).collect();
        base.push(Ineq { coeffs, rhs: BigRational::one() });
    }
    for i in 0..n {
        let mut coeffs = vec![BigRational::zero(); n];
        coeffs[i] = BigRational::one();
        base.push(Ineq { coeffs, rhs: BigRational::one() });
    }

    let limit = BigInt::one() << 62;
    let mut hi = BigInt::one();
    let mut found = feasible_in_box(&base, n, &hi);
    while found.is_none() {
        if hi > limit {
            return Err(Error::Internal(format!(
                "no separating weights for {trailing} below {above:?} under {ord}"
            )));
        }
        hi *= 2;
        found = feasible_in_box(&base, n, &hi);
    }
    // Smallest feasible bound in (hi/2, hi].
    let mut lo = &hi / 2;
    while &hi - &lo > BigInt::one() {
        let mid = (&lo + &hi) / 2;
        match feasible_in_box(&base, n, &mid) {
            Some(w) => {
                hi = mid;
                found = Some(w);
            }
            None => lo = mid,
        }
    }
    let w = match feasible_in_box(&base, n, &hi) {
        Some(w) => w,
        None => found.expect("feasible at hi"),
    };
    let w = WeightVector::new(w)?;
    let tw = w.weight(trailing);
    for m in above {
        if w.weight(m) <= tw {
            return Err(Error::Internal(format!("weights {w} fail to separate {trailing} < {m}")));
        }
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e)
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn degree_separation() {
        let w = separating_weights(&m(&[1, 1]), &[m(&[3, 0]), m(&[0, 3])], &"grevlex".parse().unwrap()).unwrap();
        assert_eq!(w.as_slice(), ints(&[1, 1]).as_slice());
    }

    #[test]
    fn lex_needs_heavy_first_variable() {
        let w = separating_weights(&m(&[0, 2]), &[m(&[1, 0])], &"lex:x1>x2".parse().unwrap()).unwrap();
        assert_eq!(w.as_slice(), ints(&[3, 1]).as_slice());
    }

    #[test]
    fn precondition_checked() {
        let err = separating_weights(&m(&[2, 0]), &[m(&[1, 0])], &"lex".parse().unwrap());
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    /// Brute-force minimum over growing boxes, as an independent check of the
    /// "smallest max, then lexicographically smallest" rule.
    fn brute(trailing: &Monomial, above: &[Monomial], n: usize, cap: i64) -> Option<Vec<BigInt>> {
        fn first_in_box(w: &mut Vec<i64>, n: usize, b: i64, ok: &dyn Fn(&[i64]) -> bool) -> bool {
            if w.len() == n {
                return ok(w);
            }
            for v in 1..=b {
                w.push(v);
                if first_in_box(w, n, b, ok) {
                    return true;
                }
                w.pop();
            }
            false
        }
        let ok = |w: &[i64]| {
            let wv = WeightVector(ints(w));
            above.iter().all(|a| wv.weight(a) > wv.weight(trailing))
        };
        (1..=cap).find_map(|b| {
            let mut w = Vec::new();
            first_in_box(&mut w, n, b, &ok).then(|| ints(&w))
        })
    }

    #[test]
    fn matches_brute_force_in_small_cases() {
        let ord: MonomialOrdering = "lex:x2>x1".parse().unwrap();
        let t = m(&[3, 0, 1]);
        let above = [m(&[0, 1]), m(&[1, 1]), m(&[4, 0, 0])];
        let w = separating_weights(&t, &above, &ord).unwrap();
        assert_eq!(Some(w.as_slice().to_vec()), brute(&t, &above, 3, 20));
    }
}
