//! Checks shared by the acceptance suite and the property tests.

#![allow(dead_code)]

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::seq::SliceRandom;
use rand::Rng;

use trdeg::ordering::Priority;
use trdeg::{hnf, IntMatrix, Monomial, MonomialOrdering, WeightVector};

pub const FAMILIES: [&str; 5] = ["lex", "grlex", "grevlex", "weighted", "matrix"];

pub fn random_monomial<R: Rng>(rng: &mut R, nvars: usize, max_deg: u32) -> Monomial {
    let total = rng.gen_range(0..=max_deg);
    let mut exps = vec![0u32; nvars];
    for _ in 0..total {
        exps[rng.gen_range(0..nvars)] += 1;
    }
    Monomial::from_exponents(&exps)
}

fn random_priority<R: Rng>(rng: &mut R, nvars: usize) -> Priority {
    let mut order: Vec<u32> = (1..=nvars as u32).collect();
    order.shuffle(rng);
    Priority::new(order).unwrap()
}

/// A random global ordering of the given family on `nvars` variables.
pub fn random_ordering<R: Rng>(rng: &mut R, family: &str, nvars: usize) -> MonomialOrdering {
    let rat = |v: i64| BigRational::from_integer(BigInt::from(v));
    match family {
        "lex" => MonomialOrdering::Lex(random_priority(rng, nvars)),
        "grlex" => MonomialOrdering::GrLex(random_priority(rng, nvars)),
        "grevlex" => MonomialOrdering::GrevLex(random_priority(rng, nvars)),
        "weighted" => {
            let w = (0..nvars)
                .map(|_| BigRational::new(BigInt::from(rng.gen_range(1..=9)), BigInt::from(rng.gen_range(1..=3))))
                .collect();
            MonomialOrdering::weighted(w, random_priority(rng, nvars)).unwrap()
        }
        "matrix" => {
            // Nonnegative first row with a random sign pattern below it; the
            // first nonzero entry of every column is then positive.
            let mut rows = vec![(0..nvars).map(|_| rat(rng.gen_range(0..=3))).collect::<Vec<_>>()];
            for _ in 0..rng.gen_range(0..=2) {
                rows.push((0..nvars).map(|_| rat(rng.gen_range(-3..=3))).collect());
            }
            for c in 0..nvars {
                if let Some(r) = rows.iter_mut().find(|r| !r[c].is_zero()) {
                    r[c] = r[c].abs();
                }
            }
            MonomialOrdering::matrix(rows).unwrap()
        }
        other => panic!("unknown family {other}"),
    }
}

/// Total, transitive, multiplicative and global on three random monomials.
pub fn ordering_axioms_hold(ord: &MonomialOrdering, s: &Monomial, t: &Monomial, u: &Monomial) -> Result<(), String> {
    let st = ord.compare(s, t);
    if st != ord.compare(t, s).reverse() {
        return Err(format!("antisymmetry fails for {s}, {t} under {ord}"));
    }
    if (st == Ordering::Equal) != (s == t) {
        return Err(format!("{s} and {t} compare equal under {ord}"));
    }
    if st != ord.compare(&s.mul(u), &t.mul(u)) {
        return Err(format!("multiplying {s}, {t} by {u} changes the comparison under {ord}"));
    }
    if ord.compare(&Monomial::one(), s) == Ordering::Greater {
        return Err(format!("1 > {s} under {ord}"));
    }
    let tu = ord.compare(t, u);
    if st != Ordering::Greater && tu != Ordering::Greater && ord.compare(s, u) == Ordering::Greater {
        return Err(format!("transitivity fails for {s} <= {t} <= {u} under {ord}"));
    }
    Ok(())
}

/// `w(trailing) < w(m)` for every `m` and all weights positive.
pub fn weights_separate(w: &WeightVector, trailing: &Monomial, above: &[Monomial]) -> Result<(), String> {
    if w.as_slice().iter().any(|x| !x.is_positive()) {
        return Err(format!("non-positive weight in {w}"));
    }
    let dot = |m: &Monomial| {
        m.pairs()
            .iter()
            .map(|&(i, e)| &w.as_slice()[i as usize - 1] * BigInt::from(e))
            .fold(BigInt::zero(), |a, b| a + b)
    };
    for m in above {
        if dot(trailing) >= dot(m) {
            return Err(format!("{w} does not separate {trailing} from {m}"));
        }
    }
    Ok(())
}

pub fn random_matrix<R: Rng>(rng: &mut R) -> IntMatrix {
    let (r, c) = (rng.gen_range(0..=5), rng.gen_range(1..=5));
    let rows = (0..r)
        .map(|_| (0..c).map(|_| BigInt::from(rng.gen_range(-20..=20))).collect())
        .collect();
    IntMatrix::from_rows(rows, c).unwrap()
}

/// `U A = H`, `U` unimodular, `H` in row Hermite normal form.
pub fn hnf_postconditions(a: &IntMatrix) -> Result<(), String> {
    let (h, u) = hnf(a);
    if u.mul(a).map_err(|e| e.to_string())? != h {
        return Err(format!("U*A != H for\n{a}"));
    }
    if !u.det().map_err(|e| e.to_string())?.abs().is_one() {
        return Err(format!("transform is not unimodular for\n{a}"));
    }
    let mut last: Option<usize> = None;
    let mut zero_seen = false;
    for (i, row) in h.rows().iter().enumerate() {
        match row.iter().position(|x| !x.is_zero()) {
            None => zero_seen = true,
            Some(p) => {
                if zero_seen || last.is_some_and(|q| p <= q) || !row[p].is_positive() {
                    return Err(format!("not in echelon form:\n{h}"));
                }
                if h.rows()[..i].iter().any(|above| above[p].is_negative() || above[p] >= row[p]) {
                    return Err(format!("entries above pivot not reduced:\n{h}"));
                }
                last = Some(p);
            }
        }
    }
    Ok(())
}
