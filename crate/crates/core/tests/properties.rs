use matfield::algebra::{close_under, span_basis, structure_constants, AlgebraSpec, Bracket};
use matfield::families::{make_antidiag, make_diag, make_j_family};
use matfield::matrix::{char_poly, determinant, min_poly, min_poly_divides_char_poly};
use matfield::poly::{factor_bounded, poly_divmod};
use matfield::{FieldMode, GaussianRational, Matrix, UniPoly};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = GaussianRational> {
    (-12i64..=12, 1i64..=6).prop_map(|(n, d)| GaussianRational::frac(n, d))
}

fn gaussian() -> impl Strategy<Value = GaussianRational> {
    (rational(), rational()).prop_map(|(re, im)| &re + &(&im * &GaussianRational::i()))
}

fn small_int() -> impl Strategy<Value = GaussianRational> {
    (-3i64..=3).prop_map(GaussianRational::from_int)
}

fn matrix_of(n: usize, entry: impl Strategy<Value = GaussianRational>) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(entry, n * n).prop_map(move |e| Matrix::from_flat(n, e).unwrap())
}

fn real_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
    proptest::collection::vec(-5i64..=5, 1..=max_deg + 1).prop_map(|c| UniPoly::from_ints(&c, FieldMode::Q))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn scalar_field_axioms(x in gaussian(), y in gaussian(), z in gaussian()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        if !x.is_zero() {
            prop_assert!((&x * &x.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_display_round_trips(x in gaussian()) {
        let back: GaussianRational = x.to_string().parse().unwrap();
        prop_assert_eq!(back.to_string(), x.to_string());
        prop_assert_eq!(back, x);
    }

    #[test]
    fn divmod_reconstructs(p in real_poly(6), q in real_poly(3)) {
        prop_assume!(!q.is_zero());
        let (quot, rem) = poly_divmod(&p, &q).unwrap();
        prop_assert_eq!(quot.mul(&q).add(&rem), p);
        prop_assert!(rem.is_zero() || rem.degree() < q.degree());
    }

    #[test]
    fn factors_multiply_back(roots in proptest::collection::vec(-3i64..=3, 2..=4), extra in 0i64..=3) {
        // linear factors, times t^2 + extra + 1 when extra > 0
        let mut p = UniPoly::one(FieldMode::Q);
        for r in &roots {
            p = p.mul(&UniPoly::linear(&GaussianRational::from_int(*r), FieldMode::Q));
        }
        if extra > 0 {
            p = p.mul(&UniPoly::from_ints(&[extra + 1, 0, 1], FieldMode::Q));
        }
        let answer = factor_bounded(&p, 8).unwrap();
        let factors = answer.factors().expect("has rational roots");
        let mut product = UniPoly::one(FieldMode::Q);
        for (f, m) in factors {
            prop_assert!(f.is_monic() && f.degree() >= Some(1));
            product = product.mul(&f.pow(*m));
        }
        prop_assert_eq!(product, p);
    }

    #[test]
    fn determinant_is_multiplicative(a in matrix_of(3, small_int()), b in matrix_of(3, small_int())) {
        prop_assert_eq!(determinant(&(&a * &b)), &determinant(&a) * &determinant(&b));
    }

    #[test]
    fn min_poly_annihilates_and_divides(m in matrix_of(3, small_int())) {
        let mp = min_poly(&m, FieldMode::Q);
        let id = Matrix::identity(3);
        prop_assert!(m.eval_poly(&mp, &id).is_zero());
        prop_assert!(m.eval_poly(&char_poly(&m), &id).is_zero());
        prop_assert!(min_poly_divides_char_poly(&m, FieldMode::Q));
    }

    #[test]
    fn span_is_idempotent(ms in proptest::collection::vec(matrix_of(2, small_int()), 1..=5)) {
        let basis = span_basis(&ms, FieldMode::Q).unwrap();
        let again = span_basis(basis.elements(), FieldMode::Q).unwrap();
        prop_assert_eq!(basis.dim(), again.dim());
        for m in &ms {
            prop_assert!(basis.contains(m));
        }
    }

    #[test]
    fn closure_is_closed_and_tabulated(ms in proptest::collection::vec(matrix_of(2, small_int()), 1..=3), which in 0usize..3) {
        let bracket = [Bracket::Mul, Bracket::Commutator, Bracket::Anticommutator][which];
        let spec = AlgebraSpec::new("random", ms, FieldMode::Q, bracket).unwrap();
        let basis = close_under(&spec, 64, 8).map_err(|e| TestCaseError::fail(e.reason))?;
        prop_assert!(basis.dim() <= 4);
        for x in basis.elements() {
            for y in basis.elements() {
                prop_assert!(basis.contains(&bracket.apply(x, y)));
            }
        }
        let sc = structure_constants(&basis, bracket).unwrap();
        prop_assert!(sc.reconstructs(basis.elements()));
    }

    #[test]
    fn j_family_closes_commutatively(h in rational(), k in rational(), d in rational(), b in rational()) {
        let j = make_j_family(&h, &k, &d, &b);
        let spec = AlgebraSpec::mul("J", vec![Matrix::identity(2), j.clone()], FieldMode::Q).unwrap();
        let basis = close_under(&spec, 64, 8).map_err(|e| TestCaseError::fail(e.reason))?;
        prop_assert!(basis.dim() <= 2);
        let jj = &j * &j;
        prop_assert_eq!(&jj * &j, &j * &jj);
    }

    #[test]
    fn diag_antidiag_shapes(entries in (2usize..=6).prop_flat_map(|n| (proptest::collection::vec(gaussian(), n), proptest::collection::vec(gaussian(), n)))) {
        let (a, b) = entries;
        let n = a.len();
        let ab = &make_diag(&a) * &make_antidiag(&b);
        prop_assert!(ab.is_antidiagonal());
        prop_assert_eq!(ab, make_antidiag(&(0..n).map(|i| &a[i] * &b[i]).collect::<Vec<_>>()));
        let bb = &make_antidiag(&b) * &make_antidiag(&a);
        prop_assert!(bb.is_diagonal());
    }
}
