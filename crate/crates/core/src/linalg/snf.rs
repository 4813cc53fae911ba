use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ring::inv_mod;
use super::{BaseRing, LinalgError, Mat, Vector};

/// Smith normal form `U·A·V = D` with `U`, `V` unimodular.
///
/// `diag` holds `d₁ | d₂ | … | d_rank` followed by zeros up to `min(rows, cols)`.
/// Over `Z` the entries are non-negative; over `F_p` they are `1` or `0`.
#[derive(Clone, Debug)]
pub struct Snf {
    pub u: Mat,
    pub u_inv: Mat,
    pub v: Mat,
    pub diag: Vec<BigInt>,
    pub rank: usize,
}

impl Snf {
    pub fn d(&self) -> Mat {
        let (m, n) = (self.u.rows(), self.v.rows());
        let mut d = Mat::zeros(m, n);
        for (i, x) in self.diag.iter().enumerate() {
            d.set(i, i, x.clone());
        }
        d
    }
}

pub fn smith_normal_form(ring: &BaseRing, a: &Mat) -> Snf {
    match ring {
        BaseRing::Integers => IntSnf::new(a).run(),
        BaseRing::PrimeField(p) => field_snf(a, *p as u64),
    }
}

/// Basis (as columns) of `{x : A·x = 0}`.
pub fn kernel_basis(ring: &BaseRing, a: &Mat) -> Mat {
    let snf = smith_normal_form(ring, a);
    let idx: Vec<usize> = (snf.rank..a.cols()).collect();
    snf.v.select_cols(&idx)
}

/// Some `x` with `A·x = b` over the base ring, or `None` when none exists.
pub fn solve_linear(ring: &BaseRing, a: &Mat, b: &[BigInt]) -> Result<Option<Vector>, LinalgError> {
    if b.len() != a.rows() {
        return Err(LinalgError::DimensionMismatch(format!(
            "matrix has {} rows, right-hand side has {}",
            a.rows(),
            b.len()
        )));
    }
    let snf = smith_normal_form(ring, a);
    Ok(solve_with(ring, &snf, b))
}

pub(crate) fn solve_with(ring: &BaseRing, snf: &Snf, b: &[BigInt]) -> Option<Vector> {
    let y = snf.u.mul_vec(b, ring);
    let n = snf.v.rows();
    let mut z = vec![BigInt::zero(); n];
    for (i, yi) in y.iter().enumerate() {
        if i < snf.rank {
            z[i] = ring.divide(yi, &snf.diag[i])?;
        } else if !ring.is_zero(yi) {
            return None;
        }
    }
    Some(snf.v.mul_vec(&z, ring))
}

struct IntSnf {
    a: Vec<Vec<BigInt>>,
    u: Vec<Vec<BigInt>>,
    u_inv: Vec<Vec<BigInt>>,
    v: Vec<Vec<BigInt>>,
    m: usize,
    n: usize,
}

fn ident(n: usize) -> Vec<Vec<BigInt>> {
    (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as i64)).collect()).collect()
}

fn to_mat(rows: Vec<Vec<BigInt>>, cols: usize) -> Mat {
    let r = rows.len();
    Mat::from_vec(r, cols, rows.into_iter().flatten().collect())
}

impl IntSnf {
    fn new(a: &Mat) -> Self {
        let (m, n) = a.shape();
        IntSnf {
            a: (0..m).map(|i| a.row(i).to_vec()).collect(),
            u: ident(m),
            u_inv: ident(m),
            v: ident(n),
            m,
            n,
        }
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i != j {
            self.a.swap(i, j);
            self.u.swap(i, j);
            for row in &mut self.u_inv {
                row.swap(i, j);
            }
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i != j {
            for row in &mut self.a {
                row.swap(i, j);
            }
            for row in &mut self.v {
                row.swap(i, j);
            }
        }
    }

    /// row_i -= q * row_t
    fn row_axpy(&mut self, i: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for j in 0..self.n {
            if !self.a[t][j].is_zero() {
                let d = q * &self.a[t][j];
                self.a[i][j] -= d;
            }
        }
        for j in 0..self.m {
            if !self.u[t][j].is_zero() {
                let d = q * &self.u[t][j];
                self.u[i][j] -= d;
            }
        }
        // inverse operation on columns: col_t += q * col_i
        for r in 0..self.m {
            if !self.u_inv[r][i].is_zero() {
                let d = q * &self.u_inv[r][i];
                self.u_inv[r][t] += d;
            }
        }
    }

    /// col_j -= q * col_t
    fn col_axpy(&mut self, j: usize, t: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.m {
            if !self.a[r][t].is_zero() {
                let d = q * &self.a[r][t];
                self.a[r][j] -= d;
            }
        }
        for r in 0..self.n {
            if !self.v[r][t].is_zero() {
                let d = q * &self.v[r][t];
                self.v[r][j] -= d;
            }
        }
    }

    fn negate_row(&mut self, t: usize) {
        for x in &mut self.a[t] {
            *x = -&*x;
        }
        for x in &mut self.u[t] {
            *x = -&*x;
        }
        for row in &mut self.u_inv {
            row[t] = -&row[t];
        }
    }

    /// Smallest nonzero |a_ij| in the trailing submatrix, ties by lowest (row, col).
    /// The scan is row-major, so the first entry of magnitude one wins outright.
    fn pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, &BigUint)> = None;
        for i in t..self.m {
            for j in t..self.n {
                let x = &self.a[i][j];
                if x.is_zero() {
                    continue;
                }
                let ax = x.magnitude();
                if ax.is_one() {
                    return Some((i, j));
                }
                if best.is_none_or(|(_, _, b)| ax < b) {
                    best = Some((i, j, ax));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(mut self) -> Snf {
        let k = self.m.min(self.n);
        let mut rank = 0;
        for t in 0..k {
            let Some((pi, pj)) = self.pivot(t) else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut clean = true;
                for i in t + 1..self.m {
                    if !self.a[i][t].is_zero() {
                        let q = self.a[i][t].div_floor(&self.a[t][t]);
                        self.row_axpy(i, t, &q);
                        if !self.a[i][t].is_zero() {
                            clean = false;
                        }
                    }
                }
                for j in t + 1..self.n {
                    if !self.a[t][j].is_zero() {
                        let q = self.a[t][j].div_floor(&self.a[t][t]);
                        self.col_axpy(j, t, &q);
                        if !self.a[t][j].is_zero() {
                            clean = false;
                        }
                    }
                }
                if !clean {
                    let (pi, pj) = self.pivot(t).expect("nonzero entries remain");
                    self.swap_rows(t, pi);
                    self.swap_cols(t, pj);
                    continue;
                }
                // enforce d_t | every trailing entry
                let pivot = self.a[t][t].clone();
                if pivot.magnitude().is_one() {
                    break;
                }
                let offender = (t + 1..self.m)
                    .find(|&i| (t + 1..self.n).any(|j| !self.a[i][j].is_multiple_of(&pivot)));
                match offender {
                    Some(i) => self.row_axpy(t, i, &BigInt::from(-1)),
                    None => break,
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            rank = t + 1;
        }
        let diag = (0..k).map(|i| self.a[i][i].clone()).collect();
        Snf {
            u: to_mat(self.u, self.m),
            u_inv: to_mat(self.u_inv, self.m),
            v: to_mat(self.v, self.n),
            diag,
            rank,
        }
    }
}

fn field_snf(a: &Mat, p: u64) -> Snf {
    let (m, n) = a.shape();
    let pb = BigInt::from(p);
    let conv = |x: &BigInt| x.mod_floor(&pb).to_u64().expect("reduced residue");
    let mut a: Vec<Vec<u64>> = (0..m).map(|i| a.row(i).iter().map(conv).collect()).collect();
    let id = |k: usize| -> Vec<Vec<u64>> {
        (0..k).map(|i| (0..k).map(|j| (i == j) as u64).collect()).collect()
    };
    let mut u = id(m);
    let mut u_inv = id(m);
    let mut v = id(n);
    let k = m.min(n);
    let mut rank = 0;
    for t in 0..k {
        // lowest (row, col) nonzero entry; every nonzero entry is a unit
        let found = (t..m).flat_map(|i| (t..n).map(move |j| (i, j))).find(|&(i, j)| a[i][j] != 0);
        let Some((pi, pj)) = found else { break };
        if pi != t {
            a.swap(t, pi);
            u.swap(t, pi);
            for row in &mut u_inv {
                row.swap(t, pi);
            }
        }
        if pj != t {
            for row in &mut a {
                row.swap(t, pj);
            }
            for row in &mut v {
                row.swap(t, pj);
            }
        }
        let piv = a[t][t];
        if piv != 1 {
            let inv = inv_mod(piv, p);
            for x in &mut a[t] {
                *x = *x * inv % p;
            }
            for x in &mut u[t] {
                *x = *x * inv % p;
            }
            for row in &mut u_inv {
                row[t] = row[t] * piv % p;
            }
        }
        for i in t + 1..m {
            let q = a[i][t];
            if q == 0 {
                continue;
            }
            let neg = p - q;
            for j in t..n {
                a[i][j] = (a[i][j] + neg * a[t][j]) % p;
            }
            for j in 0..m {
                u[i][j] = (u[i][j] + neg * u[t][j]) % p;
            }
            for row in &mut u_inv {
                row[t] = (row[t] + q * row[i]) % p;
            }
        }
        for j in t + 1..n {
            let q = a[t][j];
            if q == 0 {
                continue;
            }
            let neg = p - q;
            a[t][j] = 0;
            for row in &mut v {
                row[j] = (row[j] + neg * row[t]) % p;
            }
        }
        rank = t + 1;
    }
    let back = |rows: Vec<Vec<u64>>, cols: usize| {
        Mat::from_vec(rows.len(), cols, rows.into_iter().flatten().map(BigInt::from).collect())
    };
    let diag = (0..k).map(|i| BigInt::from(a[i][i])).collect();
    Snf { u: back(u, m), u_inv: back(u_inv, m), v: back(v, n), diag, rank }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn check(ring: &BaseRing, a: &Mat) -> Snf {
        let s = smith_normal_form(ring, a);
        assert_eq!(s.u.mul(a, ring).mul(&s.v, ring), s.d(), "U A V = D for {a:?}");
        assert_eq!(s.u.mul(&s.u_inv, ring), Mat::identity(a.rows()));
        for w in s.diag[..s.rank].windows(2) {
            assert!(ring.divide(&w[1], &w[0]).is_some(), "divisibility chain");
        }
        s
    }

    #[test]
    fn diag_two_three() {
        let s = check(&BaseRing::Integers, &Mat::from_i64(&[&[2, 0], &[0, 3]], 2));
        assert_eq!(s.diag, vec![BigInt::one(), BigInt::from(6)]);
    }

    #[test]
    fn identity_and_zero() {
        let s = check(&BaseRing::Integers, &Mat::identity(3));
        assert!(s.diag.iter().all(One::is_one));
        let z = Mat::zeros(2, 3);
        let s = check(&BaseRing::Integers, &z);
        assert_eq!(s.rank, 0);
        assert_eq!(s.u, Mat::identity(2));
        assert_eq!(s.v, Mat::identity(3));
    }

    #[test]
    fn field_rank() {
        let f = BaseRing::PrimeField(2);
        let s = check(&f, &Mat::from_i64(&[&[1, 1], &[1, 1]], 2));
        assert_eq!(s.rank, 1);
    }

    #[test]
    fn solve_examples() {
        let z = BaseRing::Integers;
        assert_eq!(solve_linear(&z, &Mat::from_i64(&[&[2]], 1), &[BigInt::from(3)]).unwrap(), None);
        let a = Mat::from_i64(&[&[2, 3]], 2);
        let x = solve_linear(&z, &a, &[BigInt::one()]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x, &z), vec![BigInt::one()]);
        let f2 = BaseRing::PrimeField(2);
        let a = Mat::from_i64(&[&[1, 1]], 2);
        let x = solve_linear(&f2, &a, &[BigInt::one()]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x, &f2), vec![BigInt::one()]);
        assert!(solve_linear(&z, &a, &[]).is_err());
    }

    #[test]
    fn kernel_of_rank_one() {
        let z = BaseRing::Integers;
        let a = Mat::from_i64(&[&[2, 4, 6]], 3);
        let k = kernel_basis(&z, &a);
        assert_eq!(k.cols(), 2);
        assert!(a.mul(&k, &z).is_zero());
    }
}
