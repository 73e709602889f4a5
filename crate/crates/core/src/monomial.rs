use std::fmt;

/// A power product `x_{i1}^{e1} * ... * x_{ik}^{ek}` over 1-based variable indices.
///
/// Stored sparsely as `(index, exponent)` pairs sorted by index with every
/// exponent positive; the empty monomial is the constant `1`. The derived
/// `Ord` is structural and only used for map keys, never as a monomial ordering.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(index: u32) -> Self {
        assert!(index >= 1, "variable indices are 1-based");
        Monomial(vec![(index, 1)])
    }

    /// From a dense exponent vector; position `i` is variable `i + 1`.
    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(
            exps.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| (i as u32 + 1, e))
                .collect(),
        )
    }

    /// From arbitrary `(index, exponent)` pairs; zero exponents are dropped and
    /// repeated indices are merged.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (u32, u32)>) -> Option<Self> {
        let mut v: Vec<(u32, u32)> = Vec::new();
        for (i, e) in pairs {
            if i == 0 {
                return None;
            }
            if e > 0 {
                v.push((i, e));
            }
        }
        v.sort_unstable();
        let mut out: Vec<(u32, u32)> = Vec::with_capacity(v.len());
        for (i, e) in v {
            match out.last_mut() {
                Some((j, f)) if *j == i => *f += e,
                _ => out.push((i, e)),
            }
        }
        Some(Monomial(out))
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, index: u32) -> u32 {
        self.0
            .binary_search_by_key(&index, |&(i, _)| i)
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    pub fn max_var(&self) -> u32 {
        self.0.last().map(|&(i, _)| i).unwrap_or(0)
    }

    /// Dense exponents for variables `1..=n`. Panics if the support exceeds `n`.
    pub fn to_exponents(&self, n: usize) -> Vec<u32> {
        let mut out = vec![0; n];
        for &(i, e) in &self.0 {
            out[i as usize - 1] = e;
        }
        out
    }

    fn merge(&self, other: &Self, f: impl Fn(u32, u32) -> u32) -> Self {
        let (a, b) = (&self.0, &other.0);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        while i < a.len() || j < b.len() {
            let (idx, ea, eb) = match (a.get(i), b.get(j)) {
                (Some(&(x, ex)), Some(&(y, ey))) if x == y => {
                    i += 1;
                    j += 1;
                    (x, ex, ey)
                }
                (Some(&(x, ex)), Some(&(y, _))) if x < y => {
                    i += 1;
                    (x, ex, 0)
                }
                (Some(&(x, ex)), None) => {
                    i += 1;
                    (x, ex, 0)
                }
                (_, Some(&(y, ey))) => {
                    j += 1;
                    (y, 0, ey)
                }
                (None, None) => unreachable!(),
            };
            let e = f(ea, eb);
            if e > 0 {
                out.push((idx, e));
            }
        }
        Monomial(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.merge(other, |a, b| a + b)
    }

    pub fn lcm(&self, other: &Self) -> Self {
        self.merge(other, u32::max)
    }

    pub fn gcd(&self, other: &Self) -> Self {
        self.merge(other, u32::min)
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.0.iter().all(|&(i, e)| other.exponent(i) >= e)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn div_into(&self, other: &Self) -> Option<Self> {
        self.divides(other).then(|| other.merge(self, |a, b| a - b))
    }

    pub fn pow(&self, k: u32) -> Self {
        Monomial(if k == 0 { Vec::new() } else { self.0.iter().map(|&(i, e)| (i, e * k)).collect() })
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.gcd(other).is_one()
    }

    pub fn support(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().map(|&(i, _)| i)
    }

    /// Render with the given variable names (index `i` uses `names[i-1]`,
    /// falling back to `x{i}`).
    pub fn render(&self, names: &[String]) -> String {
        if self.is_one() {
            return "1".to_owned();
        }
        self.0
            .iter()
            .map(|&(i, e)| {
                let name = names.get(i as usize - 1).cloned().unwrap_or_else(|| format!("x{i}"));
                if e == 1 {
                    name
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

/// All monomials in variables `1..=nvars` of total degree at most `max_degree`.
pub fn monomials_up_to(nvars: usize, max_degree: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; nvars];
    fn rec(pos: usize, left: u32, exps: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == exps.len() {
            out.push(Monomial::from_exponents(exps));
            return;
        }
        for e in 0..=left {
            exps[pos] = e;
            rec(pos + 1, left - e, exps, out);
        }
        exps[pos] = 0;
    }
    rec(0, max_degree, &mut exps, &mut out);
    out
}

/// Number of monomials in `nvars` variables of degree at most `d`, i.e. C(n+d, n),
/// saturating at `u128::MAX`.
pub fn count_monomials(nvars: usize, d: u32) -> u128 {
    let mut acc: u128 = 1;
    for k in 1..=nvars as u128 {
        acc = match acc.checked_mul(d as u128 + k) {
            Some(v) => v / k,
            None => return u128::MAX,
        };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_storage() {
        let m = Monomial::from_pairs([(2, 1), (1, 0), (2, 2), (5, 1)]).unwrap();
        assert_eq!(m.pairs(), &[(2, 3), (5, 1)]);
        assert_eq!(m.degree(), 4);
        assert!(Monomial::from_pairs([(0, 1)]).is_none());
    }

    #[test]
    fn divisibility() {
        let a = Monomial::from_exponents(&[1, 1]);
        let b = Monomial::from_exponents(&[2, 1]);
        assert!(a.divides(&b));
        assert!(!b.divides(&a));
        assert_eq!(a.div_into(&b), Some(Monomial::var(1)));
        assert_eq!(a.lcm(&Monomial::var(3)), Monomial::from_exponents(&[1, 1, 1]));
    }

    #[test]
    fn counts_agree_with_enumeration() {
        for n in 0..5 {
            for d in 0..7 {
                assert_eq!(monomials_up_to(n, d).len() as u128, count_monomials(n, d));
            }
        }
        assert_eq!(count_monomials(3, 6), 84);
    }

    #[test]
    fn render() {
        assert_eq!(Monomial::from_exponents(&[0, 2, 1]).to_string(), "x2^2*x3");
        assert_eq!(Monomial::one().to_string(), "1");
    }
}
