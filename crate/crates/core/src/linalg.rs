//! Exact linear algebra for span membership: row Hermite normal form over
//! ZZ, Gaussian elimination over QQ and GF(p), and solving modulo n by
//! lifting to ZZ with the modulus adjoined as extra generators.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::arith::{ext_gcd, reduce_mod};
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    nrows: usize,
    ncols: usize,
    rows: Vec<Vec<BigInt>>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix { nrows, ncols, rows: vec![vec![BigInt::zero(); ncols]; nrows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = BigInt::one();
        }
        m
    }

    /// Build from rows; every row must have `ncols` entries.
    pub fn from_rows(rows: Vec<Vec<BigInt>>, ncols: usize) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::Invalid(format!("row of length {} in a matrix with {ncols} columns", r.len())));
        }
        Ok(IntMatrix { nrows: rows.len(), ncols, rows })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
        Self::from_rows(rows, ncols).expect("rectangular")
    }

    pub fn nrows(&self) -> usize {
        self.nrows
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.ncols != other.nrows {
            return Err(Error::Invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.nrows, self.ncols, other.nrows, other.ncols
            )));
        }
        let mut out = IntMatrix::zeros(self.nrows, other.ncols);
        for i in 0..self.nrows {
            for k in 0..self.ncols {
                let a = &self.rows[i][k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    out.rows[i][j] += a * &other.rows[k][j];
                }
            }
        }
        Ok(out)
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> Result<BigInt> {
        if self.nrows != self.ncols {
            return Err(Error::Invalid("determinant of a non-square matrix".into()));
        }
        let n = self.nrows;
        let mut a = self.rows.clone();
        let mut sign = BigInt::one();
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(i, k);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                    a[i][j] = v;
                }
            }
            prev = a[k][k].clone();
        }
        Ok(if n == 0 { BigInt::one() } else { sign * &a[n - 1][n - 1] })
    }

    fn row_sub_mul(rows: &mut [Vec<BigInt>], target: usize, src: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        let (t, s) = if target < src {
            let (lo, hi) = rows.split_at_mut(src);
            (&mut lo[target], &hi[0])
        } else {
            let (lo, hi) = rows.split_at_mut(target);
            (&mut hi[0], &lo[src])
        };
        for (x, y) in t.iter_mut().zip(s.iter()) {
            *x -= q * y;
        }
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ")))
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

/// Row Hermite normal form: returns `(H, U)` with `H = U * A`, `U` unimodular,
/// pivots positive and entries above each pivot reduced into `[0, pivot)`.
///
/// The pivot in each column is the smallest nonzero entry in absolute value.
pub fn hnf(a: &IntMatrix) -> (IntMatrix, IntMatrix) {
    let m = a.nrows;
    let mut h = a.rows.clone();
    let mut u = IntMatrix::identity(m).rows;
    let mut r = 0;
    for c in 0..a.ncols {
        if r == m {
            break;
        }
        let mut have_pivot = false;
        loop {
            let best = (r..m).filter(|&i| !h[i][c].is_zero()).min_by(|&i, &j| h[i][c].abs().cmp(&h[j][c].abs()));
            let Some(p) = best else { break };
            have_pivot = true;
            h.swap(r, p);
            u.swap(r, p);
            let mut clean = true;
            for i in r + 1..m {
                if h[i][c].is_zero() {
                    continue;
                }
                let q = h[i][c].div_floor(&h[r][c]);
                IntMatrix::row_sub_mul(&mut h, i, r, &q);
                IntMatrix::row_sub_mul(&mut u, i, r, &q);
                if !h[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if !have_pivot {
            continue;
        }
        if h[r][c].is_negative() {
            for x in h[r].iter_mut().chain(u[r].iter_mut()) {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = h[i][c].div_floor(&h[r][c]);
            IntMatrix::row_sub_mul(&mut h, i, r, &q);
            IntMatrix::row_sub_mul(&mut u, i, r, &q);
        }
        r += 1;
    }
    (
        IntMatrix { nrows: m, ncols: a.ncols, rows: h },
        IntMatrix { nrows: m, ncols: m, rows: u },
    )
}

fn first_nonzero(v: &[BigInt]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

/// Coefficients `c` with `sum c_i gens_i = target` over ZZ, read off the HNF
/// transform. `None` if the target is outside the lattice.
pub fn solve_zz(target: &[BigInt], gens: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    solve_zz_with_kernel(target, gens).map(|(c, _)| c)
}

/// Like [`solve_zz`], also returning a basis of the integer kernel
/// `{ d : sum d_i gens_i = 0 }`.
fn solve_zz_with_kernel(target: &[BigInt], gens: &[Vec<BigInt>]) -> Option<(Vec<BigInt>, Vec<Vec<BigInt>>)> {
    let ncols = target.len();
    let a = IntMatrix::from_rows(gens.to_vec(), ncols).ok()?;
    let (h, u) = hnf(&a);
    let mut rest = target.to_vec();
    let mut y = vec![BigInt::zero(); gens.len()];
    let mut rank = 0;
    for (i, row) in h.rows.iter().enumerate() {
        let Some(p) = first_nonzero(row) else { break };
        rank = i + 1;
        if let Some(q) = first_nonzero(&rest) {
            if q < p {
                return None;
            }
        }
        if rest[p].is_zero() {
            continue;
        }
        let (q, rem) = rest[p].div_rem(&row[p]);
        if !rem.is_zero() {
            return None;
        }
        for (x, r) in rest.iter_mut().zip(row) {
            *x -= &q * r;
        }
        y[i] = q;
    }
    if first_nonzero(&rest).is_some() {
        return None;
    }
    let mut c = vec![BigInt::zero(); gens.len()];
    for (i, yi) in y.iter().enumerate() {
        if yi.is_zero() {
            continue;
        }
        for (cj, uij) in c.iter_mut().zip(&u.rows[i]) {
            *cj += yi * uij;
        }
    }
    let kernel = u.rows[rank..].to_vec();
    Some((c, kernel))
}

/// Reduce `c` modulo the lattice spanned by `kernel` to its Hermite-reduced
/// representative (each pivot coordinate in `[0, pivot)`).
fn reduce_by_lattice(c: &mut [BigInt], kernel: Vec<Vec<BigInt>>) {
    if kernel.is_empty() {
        return;
    }
    let k = IntMatrix::from_rows(kernel, c.len()).expect("kernel rows match");
    let (h, _) = hnf(&k);
    for row in &h.rows {
        let Some(p) = first_nonzero(row) else { break };
        let q = c[p].div_floor(&row[p]);
        if q.is_zero() {
            continue;
        }
        for (x, r) in c.iter_mut().zip(row) {
            *x -= &q * r;
        }
    }
}

/// [`solve_zz`] followed by reduction modulo the solution lattice, giving the
/// canonical solution with small nonnegative pivot coordinates.
pub fn solve_zz_reduced(target: &[BigInt], gens: &[Vec<BigInt>]) -> Option<Vec<BigInt>> {
    let (mut c, kernel) = solve_zz_with_kernel(target, gens)?;
    reduce_by_lattice(&mut c, kernel);
    Some(c)
}

/// Solve modulo `n` by lifting: `target` in the ZZ-span of `gens` and `n * e_j`.
/// With `reduced`, the coefficients are the canonical representative modulo
/// all solutions; otherwise they are read off the HNF transform and taken mod `n`.
pub fn solve_zmod(target: &[u64], gens: &[Vec<u64>], n: u64, reduced: bool) -> Option<Vec<u64>> {
    let m = target.len();
    let k = gens.len();
    let t: Vec<BigInt> = target.iter().map(|&x| BigInt::from(x)).collect();
    let mut lifted: Vec<Vec<BigInt>> = gens.iter().map(|g| g.iter().map(|&x| BigInt::from(x)).collect()).collect();
    for j in 0..m {
        let mut e = vec![BigInt::zero(); m];
        e[j] = BigInt::from(n);
        lifted.push(e);
    }
    let (c, kernel) = solve_zz_with_kernel(&t, &lifted)?;
    let mut c: Vec<BigInt> = c[..k].to_vec();
    if reduced {
        let mut proj: Vec<Vec<BigInt>> = kernel.into_iter().map(|v| v[..k].to_vec()).collect();
        for i in 0..k {
            let mut e = vec![BigInt::zero(); k];
            e[i] = BigInt::from(n);
            proj.push(e);
        }
        reduce_by_lattice(&mut c, proj);
    }
    Some(c.iter().map(|x| reduce_mod(x, n)).collect())
}

/// Solve over a field given as scalars (`Rat` or `Gf`). Free variables are 0.
fn solve_field(target: &[Scalar], gens: &[Vec<Scalar>], zero: &Scalar) -> Option<Vec<Scalar>> {
    let m = target.len();
    let k = gens.len();
    // Augmented system: one row per coordinate, one column per generator.
    let mut a: Vec<Vec<Scalar>> = (0..m)
        .map(|j| {
            let mut row: Vec<Scalar> = gens.iter().map(|g| g[j].clone()).collect();
            row.push(target[j].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..k {
        let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else { continue };
        a.swap(r, p);
        let inv = a[r][c].inverse().expect("field element");
        for x in a[r].iter_mut() {
            *x = x.mul(&inv);
        }
        for i in 0..m {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = x.sub(&f.mul(y));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m {
            break;
        }
    }
    if a[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut c = vec![zero.clone(); k];
    for (i, &p) in pivots.iter().enumerate() {
        c[p] = a[i][k].clone();
    }
    Some(c)
}

/// Rank of a list of vectors over a field.
pub fn rank_over_field(vectors: &[Vec<Scalar>]) -> usize {
    let mut span = FieldSpan::default();
    for v in vectors {
        span.insert(v.clone());
    }
    span.rank()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpanSolution {
    InSpan(Vec<Scalar>),
    NotInSpan,
}

impl SpanSolution {
    pub fn is_in_span(&self) -> bool {
        matches!(self, SpanSolution::InSpan(_))
    }
}

fn ints_of(v: &[Scalar]) -> Result<Vec<BigInt>> {
    v.iter()
        .map(|s| match s {
            Scalar::Int(x) => Ok(x.clone()),
            other => Err(Error::RingMismatch(format!("expected an integer, got {other}"))),
        })
        .collect()
}

fn residues_of(v: &[Scalar], n: u64) -> Result<Vec<u64>> {
    v.iter()
        .map(|s| match s {
            Scalar::Zmod { value, modulus } if *modulus == n => Ok(*value),
            Scalar::Int(x) => Ok(reduce_mod(x, n)),
            other => Err(Error::RingMismatch(format!("expected a residue mod {n}, got {other}"))),
        })
        .collect()
}

/// Decide whether `target` is a `scalars`-linear combination of `gens`, and
/// if so return coefficients reproducing it exactly.
///
/// Over ZZ and Zmod(n) the coefficients are canonical: reduced modulo the
/// relations among `gens` so each pivot coordinate of the relation lattice
/// lies in `[0, pivot)`. Over fields free coefficients are 0.
pub fn solve_in_span(target: &[Scalar], gens: &[Vec<Scalar>], scalars: &Ring) -> Result<SpanSolution> {
    solve(target, gens, scalars, true)
}

/// Like [`solve_in_span`], with integer coefficients read directly off the
/// Hermite transform and not reduced further.
pub fn solve_in_span_plain(target: &[Scalar], gens: &[Vec<Scalar>], scalars: &Ring) -> Result<SpanSolution> {
    solve(target, gens, scalars, false)
}

fn solve(target: &[Scalar], gens: &[Vec<Scalar>], scalars: &Ring, reduced: bool) -> Result<SpanSolution> {
    if let Some(g) = gens.iter().find(|g| g.len() != target.len()) {
        return Err(Error::Invalid(format!("vector of length {} against target of length {}", g.len(), target.len())));
    }
    let out = match scalars {
        Ring::ZZ => {
            let t = ints_of(target)?;
            let g = gens.iter().map(|g| ints_of(g)).collect::<Result<Vec<_>>>()?;
            let c = if reduced { solve_zz_reduced(&t, &g) } else { solve_zz(&t, &g) };
            c.map(|c| c.into_iter().map(Scalar::Int).collect())
        }
        Ring::Zmod(n) => {
            let t = residues_of(target, *n)?;
            let g = gens.iter().map(|g| residues_of(g, *n)).collect::<Result<Vec<_>>>()?;
            solve_zmod(&t, &g, *n, reduced)
                .map(|c| c.into_iter().map(|value| Scalar::Zmod { value, modulus: *n }).collect())
        }
        Ring::QQ | Ring::GF(_) => {
            let zero = scalars.zero();
            let zero = zero.as_scalar().expect("scalar ring");
            for v in gens.iter().chain([&target.to_vec()]) {
                if v.iter().any(|x| std::mem::discriminant(x) != std::mem::discriminant(zero)) {
                    return Err(Error::RingMismatch(format!("vector entries outside {scalars}")));
                }
            }
            solve_field(target, gens, zero)
        }
        other => return Err(Error::Unsupported(format!("span solving over {other}"))),
    };
    Ok(match out {
        Some(c) => SpanSolution::InSpan(c),
        None => SpanSolution::NotInSpan,
    })
}

/// Incrementally maintained ZZ-lattice in echelon form, for repeated
/// membership queries without transforms.
#[derive(Clone, Debug, Default)]
pub struct IntLattice {
    /// Rows sorted by pivot column; each row is zero before its positive pivot.
    rows: Vec<(usize, Vec<BigInt>)>,
}

impl IntLattice {
    /// The lattice `n * ZZ^dim`.
    pub fn modulus(dim: usize, n: u64) -> Self {
        let rows = (0..dim)
            .map(|j| {
                let mut e = vec![BigInt::zero(); dim];
                e[j] = BigInt::from(n);
                (j, e)
            })
            .collect();
        IntLattice { rows }
    }

    pub fn insert(&mut self, mut v: Vec<BigInt>) {
        while let Some(c) = first_nonzero(&v) {
            match self.rows.binary_search_by_key(&c, |(p, _)| *p) {
                Err(at) => {
                    if v[c].is_negative() {
                        v.iter_mut().for_each(|x| *x = -&*x);
                    }
                    self.rows.insert(at, (c, v));
                    break;
                }
                Ok(at) => {
                    let row = &mut self.rows[at].1;
                    let (a, b) = (row[c].clone(), v[c].clone());
                    let (g, s, t) = ext_gcd(&a, &b);
                    let (ag, bg) = (&a / &g, &b / &g);
                    let new_row: Vec<BigInt> = row.iter().zip(&v).map(|(x, y)| &s * x + &t * y).collect();
                    let new_v: Vec<BigInt> = row.iter().zip(&v).map(|(x, y)| &ag * y - &bg * x).collect();
                    *row = new_row;
                    v = new_v;
                }
            }
        }
        self.reduce_above_pivots();
    }

    /// Bring every entry above a pivot into `[0, pivot)`, which keeps the
    /// basis entries bounded by the pivots.
    fn reduce_above_pivots(&mut self) {
        for i in 0..self.rows.len() {
            let (lower, upper) = self.rows.split_at_mut(i);
            let (p, pivot_row) = &upper[0];
            for (_, row) in lower.iter_mut() {
                let q = row[*p].div_floor(&pivot_row[*p]);
                if !q.is_zero() {
                    for (x, r) in row.iter_mut().zip(pivot_row) {
                        *x -= &q * r;
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        let mut v = v.to_vec();
        while let Some(c) = first_nonzero(&v) {
            let Ok(at) = self.rows.binary_search_by_key(&c, |(p, _)| *p) else { return false };
            let row = &self.rows[at].1;
            let (q, rem) = v[c].div_rem(&row[c]);
            if !rem.is_zero() {
                return false;
            }
            for (x, r) in v.iter_mut().zip(row) {
                *x -= &q * r;
            }
        }
        true
    }
}

/// Incrementally maintained span over a field, in echelon form.
#[derive(Clone, Debug, Default)]
pub struct FieldSpan {
    rows: Vec<(usize, Vec<Scalar>)>,
}

impl FieldSpan {
    fn reduce(&self, mut v: Vec<Scalar>) -> Vec<Scalar> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let f = v[*p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                *x = x.sub(&f.mul(r));
            }
        }
        v
    }

    pub fn insert(&mut self, v: Vec<Scalar>) {
        let v = self.reduce(v);
        if let Some(p) = v.iter().position(|x| !x.is_zero()) {
            let inv = v[p].inverse().expect("field element");
            let v: Vec<Scalar> = v.iter().map(|x| x.mul(&inv)).collect();
            let at = self.rows.partition_point(|(q, _)| *q < p);
            self.rows.insert(at, (p, v));
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v.to_vec()).iter().all(Scalar::is_zero)
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn check_hnf(a: &IntMatrix) {
        let (h, u) = hnf(a);
        assert_eq!(u.mul(a).unwrap(), h);
        assert_eq!(u.det().unwrap().abs(), BigInt::one());
        let mut last_pivot: Option<usize> = None;
        let mut zero_seen = false;
        for (i, row) in h.rows().iter().enumerate() {
            match first_nonzero(row) {
                None => zero_seen = true,
                Some(p) => {
                    assert!(!zero_seen, "zero rows at the bottom");
                    assert!(last_pivot.is_none_or(|q| p > q));
                    assert!(row[p].is_positive());
                    for above in &h.rows()[..i] {
                        assert!(!above[p].is_negative() && above[p] < row[p]);
                    }
                    last_pivot = Some(p);
                }
            }
        }
    }

    #[test]
    fn hnf_examples() {
        let a = IntMatrix::from_i64(&[&[4], &[10]]);
        let (h, _) = hnf(&a);
        assert_eq!(h, IntMatrix::from_i64(&[&[2], &[0]]));
        check_hnf(&a);

        let id = IntMatrix::identity(3);
        assert_eq!(hnf(&id), (id.clone(), id.clone()));

        let z = IntMatrix::zeros(2, 2);
        assert_eq!(hnf(&z), (z.clone(), IntMatrix::identity(2)));

        check_hnf(&IntMatrix::from_i64(&[&[2, 3, 6], &[4, -1, 7], &[6, 2, 13], &[0, 0, 5]]));
    }

    #[test]
    fn span_examples() {
        let z = |v: &[i64]| v.iter().map(|&x| Scalar::Int(x.into())).collect::<Vec<_>>();
        let sol = solve_in_span(&z(&[6]), &[z(&[4]), z(&[10])], &Ring::ZZ).unwrap();
        assert_eq!(sol, SpanSolution::InSpan(z(&[4, -1])));
        assert_eq!(solve_in_span(&z(&[3]), &[z(&[6]), z(&[10])], &Ring::ZZ).unwrap(), SpanSolution::NotInSpan);
        for ring in [Ring::ZZ, Ring::QQ, Ring::GF(7), Ring::Zmod(12)] {
            let conv = |v: &[i64]| v.iter().map(|&x| ring.from_int(&x.into()).as_scalar().unwrap().clone()).collect::<Vec<_>>();
            let sol = solve_in_span(&conv(&[2, 2]), &[conv(&[1, 0]), conv(&[0, 1])], &ring).unwrap();
            assert_eq!(sol, SpanSolution::InSpan(conv(&[2, 2])), "{ring}");
        }
        let p = "Poly(ZZ; x)".parse::<Ring>().unwrap();
        assert!(matches!(solve_in_span(&z(&[1]), &[], &p), Err(Error::Unsupported(_))));
        assert!(solve_in_span(&z(&[1, 2]), &[z(&[1])], &Ring::ZZ).is_err());
    }

    #[test]
    fn empty_generators() {
        let z = |v: &[i64]| v.iter().map(|&x| Scalar::Int(x.into())).collect::<Vec<_>>();
        assert_eq!(solve_in_span(&z(&[0, 0]), &[], &Ring::ZZ).unwrap(), SpanSolution::InSpan(vec![]));
        assert_eq!(solve_in_span(&z(&[0, 1]), &[], &Ring::ZZ).unwrap(), SpanSolution::NotInSpan);
    }

    #[test]
    fn mod_twelve_reduced_solution() {
        // 4 = r * 8 (mod 12): the canonical coefficient is 2.
        assert_eq!(solve_zmod(&[4], &[vec![8]], 12, true), Some(vec![2]));
        let plain = solve_zmod(&[4], &[vec![8]], 12, false).unwrap();
        assert_eq!(plain[0] * 8 % 12, 4);
        assert_eq!(solve_zmod(&[1], &[vec![2]], 12, true), None);
    }

    #[test]
    fn reduced_integer_solution() {
        assert_eq!(solve_zz_reduced(&ints(&[324]), &[ints(&[12]), ints(&[5832])]), Some(ints(&[27, 0])));
    }

    #[test]
    fn lattice_membership() {
        let mut l = IntLattice::default();
        l.insert(ints(&[4, 6]));
        l.insert(ints(&[10, 0]));
        assert!(l.contains(&ints(&[14, 6])));
        assert!(l.contains(&ints(&[2, 18])));
        assert!(!l.contains(&ints(&[1, 0])));
        let mut m = IntLattice::modulus(1, 6);
        m.insert(ints(&[4]));
        assert!(m.contains(&ints(&[2])));
        assert!(!m.contains(&ints(&[1])));
    }
}
