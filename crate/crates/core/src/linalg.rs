//! Exact row reduction over the mode's scalar field.
//!
//! Matrices are compared as coordinate vectors. Under `Q` and `Q_AS_R` the
//! scalar field is `Q`, so each Gaussian entry contributes its real and
//! imaginary parts as two rational coordinates; under `QI` and `QI_AS_C` each
//! entry is one `Q(i)` coordinate.

use crate::matrix::Matrix;
use crate::scalar::{FieldMode, GaussianRational};

pub type Vector = Vec<GaussianRational>;

pub fn coords(m: &Matrix, mode: FieldMode) -> Vector {
    if mode.complex_scalars() {
        m.entries().to_vec()
    } else {
        m.entries()
            .iter()
            .flat_map(|e| [GaussianRational::real(e.re.clone()), GaussianRational::real(e.im.clone())])
            .collect()
    }
}

/// Inverse of [`coords`].
pub fn from_coords(n: usize, v: &[GaussianRational], mode: FieldMode) -> Matrix {
    let entries = if mode.complex_scalars() {
        v.to_vec()
    } else {
        v.chunks(2).map(|p| GaussianRational::new(p[0].re.clone(), p[1].re.clone())).collect()
    };
    Matrix::from_flat(n, entries).expect("coordinate length matches rank")
}

pub fn axpy(acc: &mut [GaussianRational], c: &GaussianRational, x: &[GaussianRational]) {
    if c.is_zero() {
        return;
    }
    for (a, b) in acc.iter_mut().zip(x) {
        if !b.is_zero() {
            *a += &(c * b);
        }
    }
}

/// Reduced row echelon form built incrementally; pivots are normalized to one
/// and cleared from every other row.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    pub rows: Vec<Vector>,
    pub pivots: Vec<usize>,
}

impl Echelon {
    /// Subtracts the pivot components; returns the remainder.
    pub fn reduce(&self, v: &[GaussianRational]) -> Vector {
        let mut r = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = r[p].clone();
            if !c.is_zero() {
                axpy(&mut r, &-c, row);
            }
        }
        r
    }

    /// Coefficients of `v` on the rows, or `None` when `v` is outside the span.
    pub fn coefficients(&self, v: &[GaussianRational]) -> Option<Vector> {
        if !self.reduce(v).iter().all(|x| x.is_zero()) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    /// Adds `v` to the span; returns false if it was already inside.
    pub fn insert(&mut self, v: &[GaussianRational]) -> bool {
        let r = self.reduce(v);
        let Some(p) = r.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = r[p].inverse().expect("nonzero pivot");
        let r: Vector = r.iter().map(|x| x * &inv).collect();
        for row in &mut self.rows {
            let c = row[p].clone();
            if !c.is_zero() {
                axpy(row, &-c, &r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.rows.insert(at, r);
        self.pivots.insert(at, p);
        true
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

/// Solves `Σ x_k · columns[k] = target`; `None` if inconsistent.
/// Free variables, if any, are set to zero.
pub fn solve(columns: &[Vector], target: &[GaussianRational]) -> Option<Vector> {
    let k = columns.len();
    let len = target.len();
    // Augmented system, one row per coordinate.
    let mut rows: Vec<Vector> = (0..len)
        .map(|i| {
            let mut r: Vector = columns.iter().map(|c| c[i].clone()).collect();
            r.push(target[i].clone());
            r
        })
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .collect();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..k {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inverse().expect("nonzero");
        let pr: Vector = rows[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let c = row[col].clone();
                axpy(row, &-c, &pr);
            }
        }
        rows[rank] = pr;
        pivot_cols.push(col);
        rank += 1;
    }
    if rows[rank..].iter().any(|r| !r[k].is_zero()) {
        return None;
    }
    let mut x = vec![GaussianRational::zero(); k];
    for (r, &c) in pivot_cols.iter().enumerate() {
        x[c] = rows[r][k].clone();
    }
    Some(x)
}

/// Basis of `{x : Σ_j a[i][j] x_j = 0 ∀i}` for a `rows × cols` system.
pub fn kernel(a: &[Vector], cols: usize) -> Vec<Vector> {
    let mut rows: Vec<Vector> = a.to_vec();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].inverse().expect("nonzero");
        let pr: Vector = rows[rank].iter().map(|x| x * &inv).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let c = row[col].clone();
                axpy(row, &-c, &pr);
            }
        }
        rows[rank] = pr;
        pivot_cols.push(col);
        rank += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![GaussianRational::zero(); cols];
            x[f] = GaussianRational::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                x[pc] = -&rows[r][f];
            }
            x
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| GaussianRational::from_int(x)).collect()
    }

    #[test]
    fn echelon_insert_and_reduce() {
        let mut e = Echelon::default();
        assert!(e.insert(&v(&[0, 2, 4])));
        assert!(e.insert(&v(&[1, 1, 1])));
        assert!(!e.insert(&v(&[1, 3, 5])));
        assert_eq!(e.pivots, vec![0, 1]);
        assert_eq!(e.rows[0], v(&[1, 0, -1]));
        assert_eq!(e.coefficients(&v(&[2, 3, 4])), Some(v(&[2, 3])));
        assert_eq!(e.coefficients(&v(&[0, 0, 1])), None);
    }

    #[test]
    fn solve_and_kernel() {
        let cols = vec![v(&[1, 0, 1]), v(&[0, 1, 1])];
        assert_eq!(solve(&cols, &v(&[2, 3, 5])), Some(v(&[2, 3])));
        assert_eq!(solve(&cols, &v(&[2, 3, 4])), None);
        let k = kernel(&[v(&[1, 1, 0]), v(&[0, 0, 1])], 3);
        assert_eq!(k, vec![v(&[-1, 1, 0])]);
    }

    #[test]
    fn real_coordinates_split_parts() {
        let m = Matrix::identity(2).scale(&GaussianRational::i());
        let c = coords(&m, FieldMode::Q);
        assert_eq!(c.len(), 8);
        assert_eq!(from_coords(2, &c, FieldMode::Q), m);
        assert_eq!(from_coords(2, &coords(&m, FieldMode::QI), FieldMode::QI), m);
    }
}
