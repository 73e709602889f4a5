//! Global monomial orderings.
//!
//! Variables carry a priority: an explicit list of indices, highest first,
//! followed by every unlisted index in increasing order. So the default
//! priority is `x1 > x2 > x3 > ...` over the whole infinite variable set.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::monomial::Monomial;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::weights::WeightVector;

/// Variable priority: `order[0]` is the largest variable.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Priority {
    order: Vec<u32>,
}

impl Priority {
    pub fn new(order: Vec<u32>) -> Result<Self> {
        let mut seen = order.clone();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != order.len() || seen.first() == Some(&0) {
            return Err(Error::InvalidOrdering(format!(
                "priority {order:?} must list distinct 1-based indices"
            )));
        }
        // A listed prefix that equals the default order carries no information.
        let trimmed = order.iter().enumerate().take_while(|&(k, &v)| v == k as u32 + 1).count();
        if trimmed == order.len() {
            return Ok(Priority::default());
        }
        Ok(Priority { order })
    }

    pub fn is_default(&self) -> bool {
        self.order.is_empty()
    }

    pub fn listed(&self) -> &[u32] {
        &self.order
    }

    /// Sort key: smaller means higher priority.
    fn rank(&self, var: u32) -> (u8, u32) {
        match self.order.iter().position(|&v| v == var) {
            Some(k) => (0, k as u32),
            None => (1, var),
        }
    }

    /// Variables occurring in `s` or `t`, highest priority first.
    fn union_by_rank(&self, s: &Monomial, t: &Monomial) -> Vec<u32> {
        let mut vars: Vec<u32> = s.support().chain(t.support()).collect();
        vars.sort_unstable_by_key(|&v| self.rank(v));
        vars.dedup();
        vars
    }

    fn lex(&self, s: &Monomial, t: &Monomial) -> Ordering {
        if self.order.is_empty() {
            // Default priority: the smaller index with a differing exponent decides.
            let (a, b) = (s.pairs(), t.pairs());
            for k in 0..a.len().max(b.len()) {
                match (a.get(k), b.get(k)) {
                    (Some(&(i, e)), Some(&(j, f))) => {
                        if i != j {
                            return if i < j { Ordering::Greater } else { Ordering::Less };
                        }
                        if e != f {
                            return e.cmp(&f);
                        }
                    }
                    (Some(_), None) => return Ordering::Greater,
                    (None, Some(_)) => return Ordering::Less,
                    (None, None) => unreachable!(),
                }
            }
            return Ordering::Equal;
        }
        for v in self.union_by_rank(s, t) {
            let c = s.exponent(v).cmp(&t.exponent(v));
            if c != Ordering::Equal {
                return c;
            }
        }
        Ordering::Equal
    }

    fn revlex(&self, s: &Monomial, t: &Monomial) -> Ordering {
        for v in self.union_by_rank(s, t).into_iter().rev() {
            let c = s.exponent(v).cmp(&t.exponent(v));
            if c != Ordering::Equal {
                return c.reverse();
            }
        }
        Ordering::Equal
    }

    fn render(&self) -> String {
        self.order.iter().map(|v| format!("x{v}")).collect::<Vec<_>>().join(">")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrdering {
    Lex(Priority),
    GrLex(Priority),
    GrevLex(Priority),
    /// Weighted degree first (unlisted variables weigh 1), ties broken by lex.
    WeightedLex { weights: Vec<BigRational>, priority: Priority },
    /// Rows compared in turn (missing columns are 0), ties broken by default lex.
    Matrix(Vec<Vec<BigRational>>),
}

impl Default for MonomialOrdering {
    fn default() -> Self {
        MonomialOrdering::lex()
    }
}

fn dot(row: &[BigRational], m: &Monomial) -> BigRational {
    m.pairs()
        .iter()
        .filter_map(|&(i, e)| row.get(i as usize - 1).map(|w| w * BigRational::from_integer(e.into())))
        .fold(BigRational::zero(), |a, b| a + b)
}

impl MonomialOrdering {
    pub fn lex() -> Self {
        MonomialOrdering::Lex(Priority::default())
    }

    pub fn grlex() -> Self {
        MonomialOrdering::GrLex(Priority::default())
    }

    pub fn grevlex() -> Self {
        MonomialOrdering::GrevLex(Priority::default())
    }

    /// Lex with the given variables in decreasing priority.
    pub fn lex_with(order: Vec<u32>) -> Result<Self> {
        Ok(MonomialOrdering::Lex(Priority::new(order)?))
    }

    pub fn weighted(weights: Vec<BigRational>, priority: Priority) -> Result<Self> {
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::InvalidOrdering("weights must be positive".into()));
        }
        Ok(MonomialOrdering::WeightedLex { weights, priority })
    }

    /// Matrix ordering; rejected unless every column's first nonzero entry is
    /// positive, which guarantees `1 < s` for every nonconstant `s`.
    pub fn matrix(rows: Vec<Vec<BigRational>>) -> Result<Self> {
        let ncols = rows.iter().map(Vec::len).max().unwrap_or(0);
        for c in 0..ncols {
            let first = rows.iter().filter_map(|r| r.get(c)).find(|v| !v.is_zero());
            if let Some(v) = first {
                if v.is_negative() {
                    return Err(Error::InvalidOrdering(format!(
                        "column {} has a negative leading entry; ordering is not global",
                        c + 1
                    )));
                }
            }
        }
        Ok(MonomialOrdering::Matrix(rows))
    }

    pub fn compare(&self, s: &Monomial, t: &Monomial) -> Ordering {
        match self {
            MonomialOrdering::Lex(p) => p.lex(s, t),
            MonomialOrdering::GrLex(p) => s.degree().cmp(&t.degree()).then_with(|| p.lex(s, t)),
            MonomialOrdering::GrevLex(p) => s.degree().cmp(&t.degree()).then_with(|| p.revlex(s, t)),
            MonomialOrdering::WeightedLex { weights, priority } => {
                let w = |m: &Monomial| {
                    m.pairs()
                        .iter()
                        .map(|&(i, e)| {
                            let wi = weights.get(i as usize - 1).cloned().unwrap_or_else(BigRational::one);
                            wi * BigRational::from_integer(e.into())
                        })
                        .fold(BigRational::zero(), |a, b| a + b)
                };
                w(s).cmp(&w(t)).then_with(|| priority.lex(s, t))
            }
            MonomialOrdering::Matrix(rows) => {
                for row in rows {
                    let c = dot(row, s).cmp(&dot(row, t));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
                Priority::default().lex(s, t)
            }
        }
    }

    pub fn less(&self, s: &Monomial, t: &Monomial) -> bool {
        self.compare(s, t) == Ordering::Less
    }

    /// Positive integer weights `w` with `s <= t  =>  w(s) <= w(t)` for the
    /// first `nvars` variables, when the ordering is refined by one.
    pub fn weight_grading(&self, nvars: usize) -> Option<WeightVector> {
        match self {
            MonomialOrdering::Lex(_) => None,
            MonomialOrdering::GrLex(_) | MonomialOrdering::GrevLex(_) => Some(WeightVector::ones(nvars)),
            MonomialOrdering::WeightedLex { weights, .. } => {
                let w: Vec<BigRational> =
                    (0..nvars).map(|i| weights.get(i).cloned().unwrap_or_else(BigRational::one)).collect();
                Some(clear_denominators(&w))
            }
            MonomialOrdering::Matrix(rows) => {
                let first = rows.first()?;
                let w: Vec<BigRational> =
                    (0..nvars).map(|i| first.get(i).cloned().unwrap_or_else(BigRational::zero)).collect();
                w.iter().all(Signed::is_positive).then(|| clear_denominators(&w))
            }
        }
    }
}

fn clear_denominators(w: &[BigRational]) -> WeightVector {
    let l = w.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let ints = w.iter().map(|v| (v * BigRational::from_integer(l.clone())).to_integer()).collect();
    WeightVector::new(ints).expect("positive rationals scale to positive integers")
}

/// The least monomial in the support of `f` and its coefficient.
pub fn trailing_term<'a>(
    f: &'a Polynomial,
    ord: &MonomialOrdering,
) -> Result<(&'a Monomial, &'a crate::ring::Elem)> {
    f.trailing_term(ord)
}

/// `f` is nonzero and its trailing coefficient is exactly `1` in `coeffs`.
pub fn is_submonic(f: &Polynomial, ord: &MonomialOrdering, coeffs: &Ring) -> bool {
    match f.trailing_term(ord) {
        Ok((_, c)) => coeffs.is_one(c),
        Err(_) => false,
    }
}

/// Optional weight vector certifying that `ord` is weight-graded on `nvars`
/// variables.
pub fn is_weight_graded(ord: &MonomialOrdering, nvars: usize) -> Option<WeightVector> {
    ord.weight_grading(nvars)
}

fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let bad = || Error::InvalidOrdering(format!("`{s}` is not a rational number"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn parse_priority(s: &str) -> Result<Priority> {
    let vars = s
        .split('>')
        .map(|v| {
            let v = v.trim();
            v.strip_prefix('x')
                .and_then(|n| n.parse::<u32>().ok())
                .filter(|&n| n >= 1)
                .ok_or_else(|| Error::InvalidOrdering(format!("`{v}` is not a variable like x1")))
        })
        .collect::<Result<Vec<_>>>()?;
    Priority::new(vars)
}

impl FromStr for MonomialOrdering {
    type Err = Error;

    /// `lex[:x1>x2>...]`, `grlex[:...]`, `grevlex[:...]`,
    /// `wlex:w1,w2,...[;x2>x1...]`, `matrix:[[a,b],[c,d]]`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, rest) = match s.split_once(':') {
            Some((k, r)) => (k.trim(), Some(r.trim())),
            None => (s, None),
        };
        let prio = |r: Option<&str>| r.map(parse_priority).transpose().map(Option::unwrap_or_default);
        match kind {
            "lex" => Ok(MonomialOrdering::Lex(prio(rest)?)),
            "grlex" => Ok(MonomialOrdering::GrLex(prio(rest)?)),
            "grevlex" => Ok(MonomialOrdering::GrevLex(prio(rest)?)),
            "wlex" => {
                let rest = rest.ok_or_else(|| Error::InvalidOrdering("wlex needs weights".into()))?;
                let (ws, pr) = match rest.split_once(';') {
                    Some((w, p)) => (w, Some(p)),
                    None => (rest, None),
                };
                let weights = ws.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
                MonomialOrdering::weighted(weights, prio(pr)?)
            }
            "matrix" => {
                let rest = rest.ok_or_else(|| Error::InvalidOrdering("matrix needs rows".into()))?;
                let inner = rest
                    .strip_prefix('[')
                    .and_then(|r| r.strip_suffix(']'))
                    .ok_or_else(|| Error::InvalidOrdering("matrix must look like [[..],[..]]".into()))?;
                let mut rows = Vec::new();
                for chunk in inner.split(']') {
                    let chunk = chunk.trim().trim_start_matches(',').trim();
                    if chunk.is_empty() {
                        continue;
                    }
                    let body = chunk
                        .strip_prefix('[')
                        .ok_or_else(|| Error::InvalidOrdering(format!("bad matrix row `{chunk}`")))?;
                    rows.push(body.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?);
                }
                if rows.is_empty() {
                    return Err(Error::InvalidOrdering("matrix has no rows".into()));
                }
                MonomialOrdering::matrix(rows)
            }
            other => Err(Error::InvalidOrdering(format!("unknown ordering `{other}`"))),
        }
    }
}

impl fmt::Display for MonomialOrdering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let with = |f: &mut fmt::Formatter<'_>, name: &str, p: &Priority| {
            if p.is_default() {
                f.write_str(name)
            } else {
                write!(f, "{name}:{}", p.render())
            }
        };
        match self {
            MonomialOrdering::Lex(p) => with(f, "lex", p),
            MonomialOrdering::GrLex(p) => with(f, "grlex", p),
            MonomialOrdering::GrevLex(p) => with(f, "grevlex", p),
            MonomialOrdering::WeightedLex { weights, priority } => {
                let ws: Vec<String> = weights.iter().map(fmt_rational).collect();
                write!(f, "wlex:{}", ws.join(","))?;
                if !priority.is_default() {
                    write!(f, ";{}", priority.render())?;
                }
                Ok(())
            }
            MonomialOrdering::Matrix(rows) => {
                let rs: Vec<String> = rows
                    .iter()
                    .map(|r| format!("[{}]", r.iter().map(fmt_rational).collect::<Vec<_>>().join(",")))
                    .collect();
                write!(f, "matrix:[{}]", rs.join(","))
            }
        }
    }
}
