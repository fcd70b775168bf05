//! Constructors for the named matrix number systems.
//!
//! Secondary-diagonal matrices put their first entry at the top-right corner:
//! entry `b_i` sits at row `i`, column `n - 1 - i` (zero-based).

use crate::matrix::{Matrix, MatrixError};
use crate::scalar::GaussianRational;

fn int(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

/// `I, C, B, A` with `C² = -I`, `B² = I`, `A = CB`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuaternionBasis {
    pub i: Matrix,
    pub c: Matrix,
    pub b: Matrix,
    pub a: Matrix,
}

impl QuaternionBasis {
    pub fn as_array(&self) -> [&Matrix; 4] {
        [&self.i, &self.c, &self.b, &self.a]
    }
}

pub fn quaternion_basis() -> QuaternionBasis {
    QuaternionBasis {
        i: Matrix::identity(2),
        c: Matrix::from_ints(&[&[0, -1], &[1, 0]]),
        b: Matrix::from_ints(&[&[0, 1], &[1, 0]]),
        a: Matrix::from_ints(&[&[-1, 0], &[0, 1]]),
    }
}

pub fn make_diag(entries: &[GaussianRational]) -> Matrix {
    let n = entries.len();
    let mut m = Matrix::zero(n);
    for (i, e) in entries.iter().enumerate() {
        m.set(i, i, e.clone());
    }
    m
}

pub fn make_antidiag(entries: &[GaussianRational]) -> Matrix {
    let n = entries.len();
    let mut m = Matrix::zero(n);
    for (i, e) in entries.iter().enumerate() {
        m.set(i, n - 1 - i, e.clone());
    }
    m
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Placement {
    MainDiagonal,
    SecondaryDiagonal,
}

/// ±1 entries for one diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignPattern {
    signs: Vec<i8>,
    pub placement: Placement,
}

impl SignPattern {
    pub fn new(signs: &[i64], placement: Placement) -> Result<Self, MatrixError> {
        let signs = signs
            .iter()
            .map(|&s| match s {
                1 => Ok(1i8),
                -1 => Ok(-1i8),
                other => Err(MatrixError::BadSign(other)),
            })
            .collect::<Result<_, _>>()?;
        Ok(SignPattern { signs, placement })
    }

    pub fn main(signs: &[i64]) -> Self {
        Self::new(signs, Placement::MainDiagonal).expect("valid signs")
    }

    pub fn secondary(signs: &[i64]) -> Self {
        Self::new(signs, Placement::SecondaryDiagonal).expect("valid signs")
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    pub fn is_palindromic(&self) -> bool {
        self.signs.iter().eq(self.signs.iter().rev())
    }
}

pub fn make_sign_family(n: usize, pattern: &SignPattern) -> Result<Matrix, MatrixError> {
    if !(2..=8).contains(&n) {
        return Err(MatrixError::RankOutOfRange(n));
    }
    if pattern.signs.len() != n {
        return Err(MatrixError::LengthMismatch { expected: n, got: pattern.signs.len() });
    }
    let entries: Vec<GaussianRational> = pattern.signs.iter().map(|&s| int(s as i64)).collect();
    Ok(match pattern.placement {
        Placement::MainDiagonal => make_diag(&entries),
        Placement::SecondaryDiagonal => make_antidiag(&entries),
    })
}

/// `[[b·h + d, b], [k·b, d]]`.
pub fn make_j_family(h: &GaussianRational, k: &GaussianRational, d: &GaussianRational, b: &GaussianRational) -> Matrix {
    Matrix::from_rows(vec![vec![&(b * h) + d, b.clone()], vec![k * b, d.clone()]]).expect("2x2")
}

/// Creation/annihilation operators and the two number operators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ladder {
    pub creation: Matrix,
    pub annihilation: Matrix,
    /// `a⁺a`
    pub number: Matrix,
    /// `aa⁺`
    pub anti_number: Matrix,
}

pub fn make_ladder() -> Ladder {
    let q = quaternion_basis();
    let half = GaussianRational::frac(1, 2);
    Ladder {
        creation: (&q.c + &q.b).scale(&half),
        annihilation: (&q.b - &q.c).scale(&half),
        number: (&q.i + &q.a).scale(&half),
        anti_number: (&q.i - &q.a).scale(&half),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pauli {
    pub x: Matrix,
    pub y: Matrix,
    pub z: Matrix,
}

/// `σx = B`, `σy = iC`, `σz = -A`.
pub fn make_pauli() -> Pauli {
    let q = quaternion_basis();
    Pauli { x: q.b.clone(), y: q.c.scale(&GaussianRational::i()), z: -&q.a }
}

/// Metric convention for the Dirac-basis gamma matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DiracConvention {
    /// `{γ^μ, γ^ν} = 2δ^{μν}`: `γ⁰` as in Minkowski, `γ^k = -i·γ^k_Minkowski`.
    Euclidean,
    /// `{γ^μ, γ^ν} = 2η^{μν}` with signature `(+,-,-,-)`.
    Minkowski,
}

/// Dirac-basis gammas `γ⁰ = diag(1,1,-1,-1)`, `γ^k` from Pauli blocks.
pub fn make_dirac_with(convention: DiracConvention) -> [Matrix; 4] {
    let p = make_pauli();
    let block = |ul: &Matrix, ur: &Matrix, ll: &Matrix, lr: &Matrix| {
        let mut m = Matrix::zero(4);
        for (bi, bj, src) in [(0, 0, ul), (0, 2, ur), (2, 0, ll), (2, 2, lr)] {
            for i in 0..2 {
                for j in 0..2 {
                    m.set(bi + i, bj + j, src.get(i, j).clone());
                }
            }
        }
        m
    };
    let id = Matrix::identity(2);
    let zero = Matrix::zero(2);
    let gamma0 = block(&id, &zero, &zero, &-&id);
    let factor = match convention {
        DiracConvention::Minkowski => GaussianRational::one(),
        DiracConvention::Euclidean => -GaussianRational::i(),
    };
    let spatial = |s: &Matrix| block(&zero, &s.scale(&factor), &-&s.scale(&factor), &zero);
    [gamma0, spatial(&p.x), spatial(&p.y), spatial(&p.z)]
}

/// Euclidean-convention Dirac gammas; every `γ^μ` squares to the identity.
pub fn make_dirac() -> [Matrix; 4] {
    make_dirac_with(DiracConvention::Euclidean)
}

/// `I, D1, D2, D3` (rank 3).
pub fn d_family() -> [Matrix; 4] {
    [
        Matrix::identity(3),
        make_antidiag(&[int(1), int(1), int(1)]),
        make_diag(&[int(1), int(-1), int(1)]),
        make_antidiag(&[int(1), int(-1), int(1)]),
    ]
}

/// `I, D2, D4, D5` (rank 3).
pub fn d_family_second() -> [Matrix; 4] {
    [
        Matrix::identity(3),
        make_diag(&[int(1), int(-1), int(1)]),
        make_antidiag(&[int(1), int(1), int(-1)]),
        make_antidiag(&[int(1), int(-1), int(-1)]),
    ]
}

/// `I, G1, G2, G3` (rank 4).
pub fn g_family() -> [Matrix; 4] {
    [
        Matrix::identity(4),
        make_sign_family(4, &SignPattern::main(&[-1, 1, 1, -1])).unwrap(),
        make_sign_family(4, &SignPattern::secondary(&[1, 1, 1, 1])).unwrap(),
        make_sign_family(4, &SignPattern::secondary(&[-1, 1, 1, -1])).unwrap(),
    ]
}

/// Main-diagonal sign patterns listed for the rank-5 to rank-8 families.
pub fn rank_family_patterns(n: usize) -> Option<Vec<Vec<i64>>> {
    let p: Vec<Vec<i64>> = match n {
        5 => vec![vec![1, 1, 1, 1, 1], vec![-1, 1, 1, 1, -1], vec![-1, -1, 1, -1, -1], vec![1, -1, 1, -1, 1]],
        6 => vec![
            vec![1, 1, 1, 1, 1, 1],
            vec![-1, 1, 1, 1, 1, -1],
            vec![-1, -1, 1, 1, -1, -1],
            vec![1, -1, 1, 1, -1, 1],
        ],
        7 => vec![
            vec![1, 1, 1, 1, 1, 1, 1],
            vec![-1, 1, 1, 1, 1, 1, -1],
            vec![-1, -1, 1, 1, 1, -1, -1],
            vec![-1, -1, -1, 1, 1, -1, -1],
            vec![1, -1, -1, 1, 1, -1, -1],
            vec![1, -1, 1, -1, 1, -1, 1],
        ],
        8 => vec![
            vec![1, 1, 1, 1, 1, 1, 1, 1],
            vec![-1, 1, 1, 1, 1, 1, 1, -1],
            vec![-1, -1, 1, 1, 1, 1, -1, -1],
            vec![-1, -1, -1, 1, 1, -1, -1, -1],
            vec![1, -1, -1, 1, 1, -1, -1, 1],
            vec![1, -1, 1, -1, 1, -1, 1, 1],
        ],
        _ => return None,
    };
    Some(p)
}

/// Each listed main-diagonal pattern, then the same patterns on the secondary diagonal.
pub fn rank_family(n: usize) -> Option<Vec<Matrix>> {
    let patterns = rank_family_patterns(n)?;
    let main = patterns.iter().map(|p| make_sign_family(n, &SignPattern::main(p)).unwrap());
    let secondary = patterns.iter().map(|p| make_sign_family(n, &SignPattern::secondary(p)).unwrap());
    Some(main.chain(secondary).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quaternion_squares() {
        let q = quaternion_basis();
        assert_eq!(&q.c * &q.c, -&q.i);
        assert_eq!(&q.b * &q.b, q.i);
        assert_eq!(&q.a * &q.a, q.i);
        assert_eq!(&q.c * &q.b, q.a);
    }

    #[test]
    fn diag_and_antidiag_examples() {
        let d = d_family();
        assert_eq!(make_diag(&[int(1), int(-1), int(1)]), d[2]);
        assert_eq!(make_antidiag(&[int(1), int(1), int(1)]), d[1]);
        assert_eq!(make_diag(&[int(1), int(1)]), Matrix::identity(2));
        assert_eq!(make_antidiag(&[int(1), int(1)]), quaternion_basis().b);
        let m = make_antidiag(&[int(-1), int(-1), int(1)]);
        assert_eq!(&m * &m, make_diag(&[int(-1), int(1), int(-1)]));
    }

    #[test]
    fn sign_family_examples() {
        let g = g_family();
        assert_eq!(make_sign_family(4, &SignPattern::main(&[-1, 1, 1, -1])).unwrap(), g[1]);
        assert_eq!(make_sign_family(4, &SignPattern::secondary(&[-1, 1, 1, -1])).unwrap(), g[3]);
        assert_eq!(make_sign_family(5, &SignPattern::main(&[1, 1, 1, 1, 1])).unwrap(), Matrix::identity(5));
        assert_eq!(
            make_sign_family(4, &SignPattern::main(&[1, 1, 1])),
            Err(MatrixError::LengthMismatch { expected: 4, got: 3 })
        );
        assert_eq!(make_sign_family(9, &SignPattern::main(&[1; 9])), Err(MatrixError::RankOutOfRange(9)));
        assert_eq!(SignPattern::new(&[1, 0], Placement::MainDiagonal), Err(MatrixError::BadSign(0)));
    }

    #[test]
    fn j_family_cases() {
        let (h, k, d, b) = (int(5), int(7), int(3), int(2));
        assert_eq!(make_j_family(&int(0), &k, &d, &b), Matrix::from_ints(&[&[3, 2], &[14, 3]]));
        assert_eq!(make_j_family(&h, &k, &int(0), &int(1)), Matrix::from_ints(&[&[5, 1], &[7, 0]]));
        assert_eq!(make_j_family(&int(1), &int(0), &int(1), &int(1)), Matrix::from_ints(&[&[2, 1], &[0, 1]]));
    }

    #[test]
    fn ladder_examples() {
        let l = make_ladder();
        assert_eq!(l.creation, Matrix::from_ints(&[&[0, 0], &[1, 0]]));
        assert_eq!(l.annihilation, Matrix::from_ints(&[&[0, 1], &[0, 0]]));
        assert_eq!(l.number, Matrix::from_ints(&[&[0, 0], &[0, 1]]));
        assert_eq!(&l.creation + &l.annihilation, quaternion_basis().b);
    }

    #[test]
    fn pauli_examples() {
        let p = make_pauli();
        assert_eq!(p.x, Matrix::from_ints(&[&[0, 1], &[1, 0]]));
        assert_eq!(p.z, Matrix::from_ints(&[&[1, 0], &[0, -1]]));
        assert_eq!(&p.x * &p.y, p.z.scale(&GaussianRational::i()));
    }

    #[test]
    fn dirac_examples() {
        let g = make_dirac();
        assert_eq!(g[2], g_family()[3]);
        assert!((&g[0] * &g[0]).is_identity());
        assert!(g[1].anticommutator(&g[2]).is_zero());
        for x in &g {
            assert!((x * x).is_identity());
        }
        let m = make_dirac_with(DiracConvention::Minkowski);
        assert!((&m[0] * &m[0]).is_identity());
        for x in &m[1..] {
            assert_eq!(x * x, -Matrix::identity(4));
        }
        assert_eq!(m[2], g_family()[3].scale(&GaussianRational::i()));
    }

    #[test]
    fn rank_families_have_listed_sizes() {
        assert_eq!(rank_family(5).unwrap().len(), 8);
        assert_eq!(rank_family(6).unwrap().len(), 8);
        assert_eq!(rank_family(7).unwrap().len(), 12);
        assert_eq!(rank_family(8).unwrap().len(), 12);
        assert!(rank_family(4).is_none());
    }
}
