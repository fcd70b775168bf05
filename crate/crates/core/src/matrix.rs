//! Dense exact square matrices over `Q(i)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::linalg;
use crate::poly::{poly_divmod, UniPoly};
use crate::scalar::{FieldMode, GaussianRational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("rank mismatch: {left} vs {right}")]
    RankMismatch { left: usize, right: usize },
    #[error("matrix is not square ({rows} rows, row {row} has {len} entries)")]
    NotSquare { rows: usize, row: usize, len: usize },
    #[error("matrix must have at least one row")]
    Empty,
    #[error("singular matrix (determinant {det})")]
    Singular { det: GaussianRational },
    #[error("expected {expected} entries, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("rank {0} outside the supported range 2..=8")]
    RankOutOfRange(usize),
    #[error("sign entries must be +1 or -1, got {0}")]
    BadSign(i64),
    #[error("scale needs a scalar left operand and matrix products need two matrices")]
    OperandKind,
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    n: usize,
    entries: Vec<GaussianRational>,
}

impl Matrix {
    pub fn zero(n: usize) -> Self {
        Matrix { n, entries: vec![GaussianRational::zero(); n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n);
        for i in 0..n {
            m.entries[i * n + i] = GaussianRational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<GaussianRational>>) -> Result<Self, MatrixError> {
        let n = rows.len();
        if n == 0 {
            return Err(MatrixError::Empty);
        }
        if let Some((row, r)) = rows.iter().enumerate().find(|(_, r)| r.len() != n) {
            return Err(MatrixError::NotSquare { rows: n, row, len: r.len() });
        }
        Ok(Matrix { n, entries: rows.into_iter().flatten().collect() })
    }

    /// Integer literal rows; panics when not square.
    pub fn from_ints(rows: &[&[i64]]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|&v| GaussianRational::from_int(v)).collect()).collect())
            .expect("square integer matrix")
    }

    /// Row-major entries; `entries.len()` must be a perfect square.
    pub fn from_flat(n: usize, entries: Vec<GaussianRational>) -> Result<Self, MatrixError> {
        if entries.len() != n * n {
            return Err(MatrixError::LengthMismatch { expected: n * n, got: entries.len() });
        }
        Ok(Matrix { n, entries })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &GaussianRational {
        &self.entries[i * self.n + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: GaussianRational) {
        self.entries[i * self.n + j] = v;
    }

    pub fn entries(&self) -> &[GaussianRational] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[GaussianRational]> {
        self.entries.chunks(self.n)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn is_real(&self) -> bool {
        self.entries.iter().all(|e| e.is_real())
    }

    /// Zero off the main diagonal.
    pub fn is_diagonal(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Zero off the secondary diagonal `(i, n-1-i)`.
    pub fn is_antidiagonal(&self) -> bool {
        let n = self.n;
        (0..n).all(|i| (0..n).all(|j| i + j == n - 1 || self.get(i, j).is_zero()))
    }

    /// `Some(λ)` when the matrix equals `λ·I`.
    pub fn scalar_value(&self) -> Option<GaussianRational> {
        let lambda = self.get(0, 0).clone();
        (*self == Self::identity(self.n).scale(&lambda)).then_some(lambda)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Matrix { n: self.n, entries: self.entries.iter().map(|e| e * c).collect() }
    }

    pub fn scale_rational(&self, c: &Rational) -> Self {
        Matrix { n: self.n, entries: self.entries.iter().map(|e| e.scale(c)).collect() }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, MatrixError> {
        self.conform(other)?;
        Ok(Matrix { n: self.n, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect() })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, MatrixError> {
        self.conform(other)?;
        Ok(Matrix { n: self.n, entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect() })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, MatrixError> {
        self.conform(other)?;
        let n = self.n;
        let mut out = vec![GaussianRational::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        out[i * n + j] += &(a * b);
                    }
                }
            }
        }
        Ok(Matrix { n, entries: out })
    }

    fn conform(&self, other: &Self) -> Result<(), MatrixError> {
        if self.n != other.n {
            return Err(MatrixError::RankMismatch { left: self.n, right: other.n });
        }
        Ok(())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::identity(self.n);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// `xy - yx`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `xy + yx`.
    pub fn anticommutator(&self, other: &Self) -> Self {
        &(self * other) + &(other * self)
    }

    pub fn trace(&self) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for i in 0..self.n {
            acc += self.get(i, i);
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        let n = self.n;
        let mut m = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                m.set(j, i, self.get(i, j).clone());
            }
        }
        m
    }

    /// Evaluates `p` at this matrix with `unit` standing for the constant term's `1`.
    pub fn eval_poly(&self, p: &UniPoly, unit: &Matrix) -> Matrix {
        let mut acc = Matrix::zero(self.n);
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * self) + &unit.scale(c);
        }
        acc
    }
}

macro_rules! matrix_binop {
    ($trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&Matrix> for &Matrix {
            type Output = Matrix;
            fn $method(self, rhs: &Matrix) -> Matrix {
                self.$imp(rhs).expect("conforming matrices")
            }
        }
        impl $trait<Matrix> for Matrix {
            type Output = Matrix;
            fn $method(self, rhs: Matrix) -> Matrix {
                (&self).$imp(&rhs).expect("conforming matrices")
            }
        }
    };
}

matrix_binop!(Add, add, try_add);
matrix_binop!(Sub, sub, try_sub);
matrix_binop!(Mul, mul, try_mul);

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        Matrix { n: self.n, entries: self.entries.iter().map(|e| -e).collect() }
    }
}

impl Neg for Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        -&self
    }
}

/// Row-major literal form `[[a,b],[c,d]]` with scalars in the literal grammar.
impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, row) in self.rows().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, e) in row.iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MatArith {
    Add,
    Sub,
    Mul,
    Scale,
}

#[derive(Debug, Clone, Copy)]
pub enum Operand<'a> {
    Matrix(&'a Matrix),
    Scalar(&'a GaussianRational),
}

/// Exact matrix arithmetic; `Scale` takes a scalar left operand.
pub fn mat_arith(kind: MatArith, x: Operand<'_>, y: &Matrix) -> Result<Matrix, MatrixError> {
    match (kind, x) {
        (MatArith::Scale, Operand::Scalar(c)) => Ok(y.scale(c)),
        (MatArith::Add, Operand::Matrix(m)) => m.try_add(y),
        (MatArith::Sub, Operand::Matrix(m)) => m.try_sub(y),
        (MatArith::Mul, Operand::Matrix(m)) => m.try_mul(y),
        _ => Err(MatrixError::OperandKind),
    }
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(m: &Matrix) -> GaussianRational {
    let n = m.n;
    let mut a: Vec<Vec<GaussianRational>> = m.rows().map(|r| r.to_vec()).collect();
    let mut prev = GaussianRational::one();
    let mut negate = false;
    for k in 0..n.saturating_sub(1) {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return GaussianRational::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.checked_div(&prev).expect("Bareiss pivot is nonzero");
            }
            a[i][k] = GaussianRational::zero();
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Inverse by Gauss–Jordan elimination.
pub fn inverse(m: &Matrix) -> Result<Matrix, MatrixError> {
    let n = m.n;
    let mut a: Vec<Vec<GaussianRational>> = m.rows().map(|r| r.to_vec()).collect();
    let mut inv: Vec<Vec<GaussianRational>> = Matrix::identity(n).rows().map(|r| r.to_vec()).collect();
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Err(MatrixError::Singular { det: determinant(m) });
        };
        a.swap(col, p);
        inv.swap(col, p);
        let piv = a[col][col].inverse().expect("nonzero pivot");
        for j in 0..n {
            a[col][j] = &a[col][j] * &piv;
            inv[col][j] = &inv[col][j] * &piv;
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..n {
                let t = &f * &a[col][j];
                a[r][j] -= &t;
                let t = &f * &inv[col][j];
                inv[r][j] -= &t;
            }
        }
    }
    Matrix::from_rows(inv)
}

/// Characteristic polynomial `det(tI - m)` by Faddeev–LeVerrier (characteristic 0).
pub fn char_poly(m: &Matrix) -> UniPoly {
    let n = m.n;
    let mut coeffs = vec![GaussianRational::zero(); n + 1];
    coeffs[n] = GaussianRational::one();
    let mut mk = Matrix::zero(n);
    for k in 1..=n {
        mk = &(m * &mk) + &Matrix::identity(n).scale(&coeffs[n - k + 1]);
        let tr = (m * &mk).trace();
        coeffs[n - k] = -(tr.scale(&Rational::new(1, k as i64).expect("k > 0")));
    }
    UniPoly::new(coeffs, FieldMode::QI).expect("QI accepts complex coefficients")
}

/// Row-major flattening.
pub fn vectorize(m: &Matrix) -> Vec<GaussianRational> {
    m.entries.clone()
}

/// Minimal polynomial of `m` over the mode's scalar field.
pub fn min_poly(m: &Matrix, mode: FieldMode) -> UniPoly {
    min_poly_relative(m, &Matrix::identity(m.n), mode)
}

/// Least-degree monic `p` with `p(m) = 0`, where the constant term multiplies `unit`.
///
/// Found as the first linear dependence among `unit, m, m², …` over the mode's
/// scalar field. `unit` must act as an identity on `m`.
pub fn min_poly_relative(m: &Matrix, unit: &Matrix, mode: FieldMode) -> UniPoly {
    let mut powers: Vec<Vec<GaussianRational>> = vec![linalg::coords(unit, mode)];
    let mut current = m.clone();
    loop {
        let target = linalg::coords(&current, mode);
        if let Some(sol) = linalg::solve(&powers, &target) {
            let mut coeffs: Vec<GaussianRational> = sol.into_iter().map(|c| -c).collect();
            coeffs.push(GaussianRational::one());
            return UniPoly::new(coeffs, mode).expect("coefficients lie in the mode's field");
        }
        powers.push(target);
        current = &current * m;
    }
}

/// Checks that `min_poly(m)` divides an annihilator with coefficients in the mode's field.
pub fn min_poly_divides_char_poly(m: &Matrix, mode: FieldMode) -> bool {
    let mp = min_poly(m, mode);
    let chi = char_poly(m);
    let target = if mode.complex_scalars() || chi.is_real() { chi } else { chi.mul(&chi.conj()) };
    let target = target.with_mode(mode);
    poly_divmod(&target, &mp).map(|(_, r)| r.is_zero()).unwrap_or(false)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{make_j_family, quaternion_basis};

    fn g(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    #[test]
    fn arith_examples() {
        let q = quaternion_basis();
        assert_eq!(mat_arith(MatArith::Mul, Operand::Matrix(&q.c), &q.b).unwrap(), q.a);
        assert_eq!(mat_arith(MatArith::Mul, Operand::Matrix(&q.b), &q.c).unwrap(), -&q.a);
        let ipc = &q.i + &q.c;
        assert_eq!(&ipc * &ipc, q.c.scale(&g(2)));
        assert_eq!(mat_arith(MatArith::Scale, Operand::Scalar(&g(3)), &q.i).unwrap(), q.i.scale(&g(3)));
        assert_eq!(
            mat_arith(MatArith::Add, Operand::Matrix(&q.i), &Matrix::identity(3)),
            Err(MatrixError::RankMismatch { left: 2, right: 3 })
        );
        assert_eq!(mat_arith(MatArith::Scale, Operand::Matrix(&q.i), &q.i), Err(MatrixError::OperandKind));
    }

    #[test]
    fn determinant_examples() {
        let q = quaternion_basis();
        assert_eq!(determinant(&q.c), g(1));
        assert_eq!(determinant(&(&q.i + &q.a)), g(0));
        let j = make_j_family(&g(1), &g(1), &g(1), &g(1));
        assert_eq!(j, Matrix::from_ints(&[&[2, 1], &[1, 1]]));
        assert_eq!(determinant(&j), g(1));
        // needs a row swap
        assert_eq!(determinant(&Matrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 5]])), g(-5));
    }

    #[test]
    fn inverse_examples() {
        let q = quaternion_basis();
        assert_eq!(inverse(&q.c).unwrap(), -&q.c);
        assert_eq!(inverse(&q.b).unwrap(), q.b);
        assert_eq!(inverse(&(&q.i + &q.a)), Err(MatrixError::Singular { det: g(0) }));
    }

    #[test]
    fn min_poly_examples() {
        let q = quaternion_basis();
        assert_eq!(min_poly(&q.c, FieldMode::Q), UniPoly::from_ints(&[1, 0, 1], FieldMode::Q));
        assert_eq!(min_poly(&q.b, FieldMode::Q), UniPoly::from_ints(&[-1, 0, 1], FieldMode::Q));
        assert_eq!(min_poly(&Matrix::identity(3), FieldMode::Q), UniPoly::from_ints(&[-1, 1], FieldMode::Q));
        // iI over Q needs t^2 + 1; over Q(i) it is t - i.
        let ii = Matrix::identity(2).scale(&GaussianRational::i());
        assert_eq!(min_poly(&ii, FieldMode::Q), UniPoly::from_ints(&[1, 0, 1], FieldMode::Q));
        assert_eq!(min_poly(&ii, FieldMode::QI).degree(), Some(1));
        assert!(min_poly_divides_char_poly(&ii, FieldMode::Q));
    }

    #[test]
    fn min_poly_relative_to_idempotent_unit() {
        let e = Matrix::from_ints(&[&[0, 0], &[0, 1]]);
        assert_eq!(min_poly_relative(&e, &e, FieldMode::Q), UniPoly::from_ints(&[-1, 1], FieldMode::Q));
        assert_eq!(min_poly(&e, FieldMode::Q), UniPoly::from_ints(&[0, -1, 1], FieldMode::Q));
    }

    #[test]
    fn vectorize_examples() {
        let q = quaternion_basis();
        assert_eq!(vectorize(&q.c), vec![g(0), g(-1), g(1), g(0)]);
        assert_eq!(vectorize(&Matrix::identity(2)), vec![g(1), g(0), g(0), g(1)]);
        assert!(vectorize(&Matrix::zero(3)).iter().all(|e| e.is_zero()));
    }

    #[test]
    fn char_poly_of_companion() {
        // companion of t^3 - 2t + 5
        let m = Matrix::from_ints(&[&[0, 0, -5], &[1, 0, 2], &[0, 1, 0]]);
        assert_eq!(char_poly(&m), UniPoly::from_ints(&[5, -2, 0, 1], FieldMode::QI));
    }

    #[test]
    fn display_is_literal_form() {
        let q = quaternion_basis();
        assert_eq!(q.c.to_string(), "[[0,-1],[1,0]]");
        assert_eq!(Matrix::identity(2).scale(&GaussianRational::i()).to_string(), "[[1i,0],[0,1i]]");
    }

    #[test]
    fn from_rows_rejects_ragged() {
        let r = Matrix::from_rows(vec![vec![g(1), g(2)], vec![g(3)]]);
        assert!(matches!(r, Err(MatrixError::NotSquare { .. })));
        assert_eq!(Matrix::from_rows(vec![]), Err(MatrixError::Empty));
    }
}
