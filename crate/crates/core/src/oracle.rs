//! Brute-force dense matrices built by literally expanding the Hadamard and
//! Haar recursions.
//!
//! Everything here is deliberately naive: Kronecker products are formed
//! explicitly and products are plain triple loops. The fast transforms are
//! tested against these matrices, so nothing in this module may call into
//! [`crate::transforms`].

use std::collections::HashMap;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};
use crate::orderings::Permutation;
use crate::sample::{Sample, ScalingMode};

/// Largest level for which dense matrices are materialized (`4096 x 4096`).
pub const MAX_DENSE_LEVEL: u32 = 12;

/// Row-major square matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Sample> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![T::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut out = Self::zeros(n, n);
        for i in 0..n {
            out.set(i, i, T::ONE);
        }
        out
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::argument("ragged rows"));
        }
        Ok(Self {
            rows: rows.len(),
            cols,
            data: rows.concat(),
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[T] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> T {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: T) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[T] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.get(r, c));
            }
        }
        out
    }

    pub fn matmul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return Err(Error::argument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                for j in 0..rhs.cols {
                    let v = out.get(i, j) + a * rhs.get(k, j);
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }

    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..rhs.rows {
                    for l in 0..rhs.cols {
                        out.set(i * rhs.rows + k, j * rhs.cols + l, a * rhs.get(k, l));
                    }
                }
            }
        }
        out
    }

    /// Stack `top` above `bottom`.
    pub fn vstack(top: &Self, bottom: &Self) -> Result<Self> {
        if top.cols != bottom.cols {
            return Err(Error::argument("vstack column mismatch"));
        }
        let mut data = top.data.clone();
        data.extend_from_slice(&bottom.data);
        Ok(Self {
            rows: top.rows + bottom.rows,
            cols: top.cols,
            data,
        })
    }

    pub fn block_diag(blocks: &[&Self]) -> Self {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut out = Self::zeros(rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(r0 + r, c0 + c, b.get(r, c));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.scale(factor)).collect(),
        }
    }

    /// Largest entrywise `|a - b|`.
    pub fn max_abs_diff(&self, other: &Self) -> f64 {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a.to_f64() - b.to_f64()).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_identity_within(&self, tol: f64) -> bool {
        self.rows == self.cols && self.max_abs_diff(&Self::identity(self.rows)) <= tol
    }
}

fn check_level(m: u32) -> Result<()> {
    if m > MAX_DENSE_LEVEL {
        Err(Error::Capacity {
            m,
            max: MAX_DENSE_LEVEL,
        })
    } else {
        Ok(())
    }
}

fn pair<T: Sample>(second: T) -> DenseMatrix<T> {
    DenseMatrix {
        rows: 1,
        cols: 2,
        data: vec![T::ONE, second],
    }
}

fn recursion_step<T: Sample>(
    upper: &DenseMatrix<T>,
    lower: &DenseMatrix<T>,
    mode: ScalingMode,
) -> Result<DenseMatrix<T>> {
    let top = upper.kron(&pair(T::ONE));
    let bottom = lower.kron(&pair(-T::ONE));
    let stacked = DenseMatrix::vstack(&top, &bottom)?;
    Ok(match mode {
        ScalingMode::Orthonormal => stacked.scaled(FRAC_1_SQRT_2),
        ScalingMode::Unnormalized => stacked,
    })
}

/// Hadamard matrix in dyadic (Paley) order:
/// `H_{k+1} = c [H_k (x) (1 1); H_k (x) (1 -1)]`.
pub fn hadamard_dyadic_dense<T: Sample>(m: u32, mode: ScalingMode) -> Result<DenseMatrix<T>> {
    check_level(m)?;
    mode.check::<T>()?;
    let mut h = DenseMatrix::identity(1);
    for _ in 0..m {
        h = recursion_step(&h, &h, mode)?;
    }
    Ok(h)
}

/// Haar matrix: `Psi_{k+1} = c [Psi_k (x) (1 1); I_k (x) (1 -1)]`.
pub fn haar_dense<T: Sample>(m: u32, mode: ScalingMode) -> Result<DenseMatrix<T>> {
    check_level(m)?;
    mode.check::<T>()?;
    let mut psi = DenseMatrix::identity(1);
    for k in 0..m {
        let eye = DenseMatrix::identity(1 << k);
        psi = recursion_step(&psi, &eye, mode)?;
    }
    Ok(psi)
}

/// Sylvester (natural) ordered Hadamard matrix, the `m`-fold Kronecker power
/// of `[[1, 1], [1, -1]]`.
pub fn hadamard_natural_dense<T: Sample>(m: u32, mode: ScalingMode) -> Result<DenseMatrix<T>> {
    check_level(m)?;
    mode.check::<T>()?;
    let block = DenseMatrix::from_rows(&[vec![T::ONE, T::ONE], vec![T::ONE, -T::ONE]])?;
    let block = match mode {
        ScalingMode::Orthonormal => block.scaled(FRAC_1_SQRT_2),
        ScalingMode::Unnormalized => block,
    };
    let mut h = DenseMatrix::identity(1);
    for _ in 0..m {
        h = h.kron(&block);
    }
    Ok(h)
}

/// Stage-`r` factor of the cascade, `I_{r-1} (x) diag(I_{m-r}, Psi_{m-r})`.
pub fn cascade_factor_dense<T: Sample>(
    m: u32,
    r: u32,
    mode: ScalingMode,
) -> Result<DenseMatrix<T>> {
    check_level(m)?;
    if r < 1 || r + 1 > m {
        return Err(Error::argument(format!(
            "stage {r} out of range 1..={} for level {m}",
            m.saturating_sub(1)
        )));
    }
    let inner = DenseMatrix::block_diag(&[
        &DenseMatrix::identity(1 << (m - r)),
        &haar_dense(m - r, mode)?,
    ]);
    Ok(DenseMatrix::identity(1 << (r - 1)).kron(&inner))
}

/// The ordered product `F_{m-1} ... F_1 Psi_m` of the cascade factors and the
/// full Haar matrix.
pub fn cascade_product_dense<T: Sample>(m: u32, mode: ScalingMode) -> Result<DenseMatrix<T>> {
    let mut acc = haar_dense(m, mode)?;
    for r in 1..m {
        acc = cascade_factor_dense(m, r, mode)?.matmul(&acc)?;
    }
    Ok(acc)
}

/// Haar-to-Walsh matrix `W` with `H_m = W Psi_m`.
///
/// In orthonormal mode this is literally `H_m Psi_m^T`. The unnormalized Haar
/// rows are not of equal norm, so there `Psi_m^T` is followed by the inverse
/// Gram diagonal, giving `H_m Psi_m^{-1}` with exact integer division.
pub fn haar_walsh_dense<T: Sample>(m: u32, mode: ScalingMode) -> Result<DenseMatrix<T>> {
    let h = hadamard_dyadic_dense::<T>(m, mode)?;
    let psi = haar_dense::<T>(m, mode)?;
    let mut w = h.matmul(&psi.transpose())?;
    if mode == ScalingMode::Unnormalized {
        for k in 0..psi.rows() {
            let norm_sq = psi
                .row(k)
                .iter()
                .fold(T::ZERO, |acc, &v| acc + v * v);
            for r in 0..w.rows() {
                let q = w.get(r, k).div_exact(norm_sq).ok_or_else(|| {
                    Error::structure(format!("column {k} not divisible by Haar row norm"))
                })?;
                w.set(r, k, q);
            }
        }
    }
    Ok(w)
}

/// Explicit `diag(1, H_0, H_1, ..., H_{m-1})`.
pub fn haar_walsh_block_diagonal<T: Sample>(
    m: u32,
    mode: ScalingMode,
) -> Result<DenseMatrix<T>> {
    check_level(m)?;
    let mut blocks = vec![DenseMatrix::identity(1)];
    for j in 0..m {
        blocks.push(hadamard_dyadic_dense(j, mode)?);
    }
    let refs: Vec<&DenseMatrix<T>> = blocks.iter().collect();
    Ok(DenseMatrix::block_diag(&refs))
}

pub fn mat_vec<T: Sample>(matrix: &DenseMatrix<T>, x: &[T]) -> Result<Vec<T>> {
    if matrix.cols() != x.len() {
        return Err(Error::argument(format!(
            "matrix has {} columns but vector has length {}",
            matrix.cols(),
            x.len()
        )));
    }
    Ok((0..matrix.rows())
        .map(|r| {
            matrix
                .row(r)
                .iter()
                .zip(x)
                .fold(T::ZERO, |acc, (&a, &b)| acc + a * b)
        })
        .collect())
}

/// Permutation `p` with `a.row(i) == b.row(p[i])` for every `i`.
pub fn row_permutation_between<T: Sample>(
    a: &DenseMatrix<T>,
    b: &DenseMatrix<T>,
) -> Result<Permutation> {
    if (a.rows(), a.cols()) != (b.rows(), b.cols()) {
        return Err(Error::structure("matrices differ in shape"));
    }
    let key = |m: &DenseMatrix<T>, r: usize| -> Vec<u64> {
        m.row(r).iter().map(|v| v.bit_key()).collect()
    };
    let mut index = HashMap::with_capacity(b.rows());
    for r in 0..b.rows() {
        if index.insert(key(b, r), r).is_some() {
            return Err(Error::structure(format!("duplicate row {r} in target")));
        }
    }
    let mut map = Vec::with_capacity(a.rows());
    for r in 0..a.rows() {
        match index.remove(&key(a, r)) {
            Some(j) => map.push(j),
            None => {
                return Err(Error::structure(format!(
                    "row {r} has no unused match in target"
                )))
            }
        }
    }
    Permutation::new(map)
}

#[cfg(test)]
mod tests {
    use super::*;

    const U: ScalingMode = ScalingMode::Unnormalized;
    const O: ScalingMode = ScalingMode::Orthonormal;

    fn rows(m: &DenseMatrix<i64>) -> Vec<Vec<i64>> {
        (0..m.rows()).map(|r| m.row(r).to_vec()).collect()
    }

    #[test]
    fn base_cases() {
        for mode in [U, O] {
            assert_eq!(hadamard_dyadic_dense::<f64>(0, mode).unwrap().data(), &[1.0]);
            assert_eq!(haar_dense::<f64>(0, mode).unwrap().data(), &[1.0]);
            assert_eq!(hadamard_natural_dense::<f64>(0, mode).unwrap().data(), &[1.0]);
        }
    }

    #[test]
    fn small_hadamard_dyadic() {
        assert_eq!(
            rows(&hadamard_dyadic_dense(1, U).unwrap()),
            vec![vec![1, 1], vec![1, -1]]
        );
        assert_eq!(
            rows(&hadamard_dyadic_dense(2, U).unwrap()),
            vec![
                vec![1, 1, 1, 1],
                vec![1, 1, -1, -1],
                vec![1, -1, 1, -1],
                vec![1, -1, -1, 1]
            ]
        );
    }

    #[test]
    fn small_haar() {
        assert_eq!(rows(&haar_dense(1, U).unwrap()), vec![vec![1, 1], vec![1, -1]]);
        assert_eq!(
            rows(&haar_dense(2, U).unwrap()),
            vec![
                vec![1, 1, 1, 1],
                vec![1, 1, -1, -1],
                vec![1, -1, 0, 0],
                vec![0, 0, 1, -1]
            ]
        );
    }

    #[test]
    fn small_natural() {
        assert_eq!(
            rows(&hadamard_natural_dense(1, U).unwrap()),
            vec![vec![1, 1], vec![1, -1]]
        );
        assert_eq!(
            rows(&hadamard_natural_dense(2, U).unwrap()),
            vec![
                vec![1, 1, 1, 1],
                vec![1, -1, 1, -1],
                vec![1, 1, -1, -1],
                vec![1, -1, -1, 1]
            ]
        );
    }

    #[test]
    fn capacity_and_mode_errors() {
        assert!(matches!(
            hadamard_dyadic_dense::<i64>(13, U),
            Err(Error::Capacity { m: 13, max: 12 })
        ));
        assert!(matches!(haar_dense::<i64>(13, U), Err(Error::Capacity { .. })));
        assert!(matches!(
            hadamard_natural_dense::<i64>(13, U),
            Err(Error::Capacity { .. })
        ));
        assert!(matches!(haar_walsh_dense::<i64>(13, U), Err(Error::Capacity { .. })));
        assert!(matches!(
            hadamard_dyadic_dense::<i64>(2, O),
            Err(Error::UnsupportedMode)
        ));
    }

    #[test]
    fn cascade_factor_examples() {
        assert_eq!(
            rows(&cascade_factor_dense(2, 1, U).unwrap()),
            vec![
                vec![1, 0, 0, 0],
                vec![0, 1, 0, 0],
                vec![0, 0, 1, 1],
                vec![0, 0, 1, -1]
            ]
        );
        // I_1 (x) diag(I_1, Psi_1): pattern (I_2-size identity, Psi_1) twice
        let f = cascade_factor_dense::<i64>(3, 2, U).unwrap();
        let psi1 = haar_dense::<i64>(1, U).unwrap();
        let eye = DenseMatrix::identity(2);
        let expected = DenseMatrix::block_diag(&[&eye, &psi1, &eye, &psi1]);
        assert_eq!(f, expected);
    }

    #[test]
    fn cascade_factor_rejects_bad_stage() {
        assert!(cascade_factor_dense::<i64>(3, 0, U).is_err());
        assert!(cascade_factor_dense::<i64>(3, 3, U).is_err());
        assert!(cascade_factor_dense::<i64>(1, 1, U).is_err());
    }

    #[test]
    fn cascade_product_equals_hadamard_small() {
        for m in 1..=6 {
            assert_eq!(
                cascade_product_dense::<i64>(m, U).unwrap(),
                hadamard_dyadic_dense(m, U).unwrap()
            );
        }
    }

    #[test]
    fn orthonormality() {
        for m in 0..=8 {
            let h = hadamard_dyadic_dense::<f64>(m, O).unwrap();
            assert!(h.matmul(&h.transpose()).unwrap().is_identity_within(1e-12), "H_{m}");
            let psi = haar_dense::<f64>(m, O).unwrap();
            assert!(psi.matmul(&psi.transpose()).unwrap().is_identity_within(1e-12), "Psi_{m}");
        }
    }

    #[test]
    fn hadamard_scaling_consistency() {
        for m in 0..=8 {
            let u = hadamard_dyadic_dense::<f64>(m, U).unwrap();
            let o = hadamard_dyadic_dense::<f64>(m, O).unwrap();
            let factor = 2f64.powf(m as f64 / 2.0);
            assert!(u.max_abs_diff(&o.scaled(factor)) <= 1e-12, "m={m}");
        }
    }

    #[test]
    fn haar_scaling_is_per_row() {
        // Row k of the unnormalized Haar matrix is its orthonormal row times
        // the row's Euclidean norm; the norm is only 2^{m/2} for the two
        // coarsest rows.
        for m in 0..=8 {
            let u = haar_dense::<f64>(m, U).unwrap();
            let o = haar_dense::<f64>(m, O).unwrap();
            for r in 0..u.rows() {
                let norm = u.row(r).iter().map(|v| v * v).sum::<f64>().sqrt();
                for c in 0..u.cols() {
                    assert!((u.get(r, c) - norm * o.get(r, c)).abs() <= 1e-12);
                }
            }
        }
    }

    #[test]
    fn haar_walsh_small() {
        assert_eq!(haar_walsh_dense::<i64>(1, U).unwrap(), DenseMatrix::identity(2));
        let w = haar_walsh_dense::<i64>(3, U).unwrap();
        assert_eq!(w, haar_walsh_block_diagonal(3, U).unwrap());
    }

    #[test]
    fn mat_vec_examples() {
        let eye = DenseMatrix::<i64>::identity(4);
        assert_eq!(mat_vec(&eye, &[3, 1, 4, 1]).unwrap(), vec![3, 1, 4, 1]);
        let h1 = hadamard_dyadic_dense::<i64>(1, U).unwrap();
        assert_eq!(mat_vec(&h1, &[1, 0]).unwrap(), vec![1, 1]);
        let h2 = hadamard_dyadic_dense::<i64>(2, U).unwrap();
        assert_eq!(mat_vec(&h2, &[0, 1, 0, 0]).unwrap(), vec![1, 1, -1, -1]);
        assert!(mat_vec(&h2, &[1, 2]).is_err());
    }

    #[test]
    fn row_permutation_examples() {
        let h = hadamard_dyadic_dense::<i64>(2, U).unwrap();
        assert!(row_permutation_between(&h, &h).unwrap().is_identity());
        let n = hadamard_natural_dense::<i64>(2, U).unwrap();
        assert_eq!(row_permutation_between(&h, &n).unwrap().map(), &[0, 2, 1, 3]);
    }

    #[test]
    fn row_permutation_rejects_non_bijection() {
        let a = DenseMatrix::from_rows(&[vec![1i64, 1], vec![1, 1]]).unwrap();
        let b = DenseMatrix::from_rows(&[vec![1i64, 1], vec![1, -1]]).unwrap();
        assert!(matches!(row_permutation_between(&a, &b), Err(Error::Structure(_))));
        assert!(matches!(row_permutation_between(&b, &a), Err(Error::Structure(_))));
    }
}
