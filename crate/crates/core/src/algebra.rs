//! Finite-dimensional matrix algebras: span, closure, structure constants and
//! ring/field classification with re-checkable witnesses and certificates.
//!
//! Classification is relative to the algebra's own unit, which need not be
//! the ambient identity (`span{diag(0,1)}` is unital with unit `diag(0,1)`).
//! The radical is computed as the kernel of the trace form on the regular
//! representation; this relies on characteristic zero.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::linalg::{self, Echelon, Vector};
use crate::matrix::{min_poly_relative, Matrix};
use crate::poly::{factor_bounded, poly_divmod, FactorAnswer, UniPoly, DEFAULT_DEGREE_CAP};
use crate::scalar::{FieldMode, GaussianRational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("an algebra needs at least one generator")]
    NoGenerators,
    #[error("generator {index} has rank {got}, expected {expected}")]
    RankMismatch { index: usize, expected: usize, got: usize },
    #[error("classification requires the matrix-product bracket, got {0}")]
    NotMultiplicative(Bracket),
    #[error("span is not closed under {bracket}: {witness}")]
    NotClosed { bracket: Bracket, witness: Witness },
    #[error("internal verification failed: {0}")]
    VerificationFailed(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Bracket {
    Mul,
    Commutator,
    Anticommutator,
}

impl Bracket {
    pub fn apply(self, x: &Matrix, y: &Matrix) -> Matrix {
        match self {
            Bracket::Mul => x * y,
            Bracket::Commutator => x.commutator(y),
            Bracket::Anticommutator => x.anticommutator(y),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Bracket::Mul => "mul",
            Bracket::Commutator => "comm",
            Bracket::Anticommutator => "anticomm",
        }
    }
}

impl fmt::Display for Bracket {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for Bracket {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "mul" => Ok(Bracket::Mul),
            "comm" => Ok(Bracket::Commutator),
            "anticomm" => Ok(Bracket::Anticommutator),
            other => Err(format!("unknown bracket {other:?} (expected mul, comm or anticomm)")),
        }
    }
}

/// Engine limits. Defaults are generous for every built-in family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Caps {
    pub max_dim: usize,
    pub max_rounds: usize,
    /// Candidate elements (and grid subspaces) examined by witness searches.
    pub budget: usize,
    pub degree_cap: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_dim: 64, max_rounds: 8, budget: 500, degree_cap: DEFAULT_DEGREE_CAP }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub name: String,
    pub generators: Vec<Matrix>,
    pub mode: FieldMode,
    pub bracket: Bracket,
}

impl AlgebraSpec {
    pub fn new(name: impl Into<String>, generators: Vec<Matrix>, mode: FieldMode, bracket: Bracket) -> Result<Self, AlgebraError> {
        let first = generators.first().ok_or(AlgebraError::NoGenerators)?;
        let n = first.rank();
        if let Some((index, g)) = generators.iter().enumerate().find(|(_, g)| g.rank() != n) {
            return Err(AlgebraError::RankMismatch { index, expected: n, got: g.rank() });
        }
        Ok(AlgebraSpec { name: name.into(), generators, mode, bracket })
    }

    pub fn mul(name: impl Into<String>, generators: Vec<Matrix>, mode: FieldMode) -> Result<Self, AlgebraError> {
        Self::new(name, generators, mode, Bracket::Mul)
    }

    pub fn rank(&self) -> usize {
        self.generators[0].rank()
    }
}

/// Echelonized basis of a matrix subspace over the mode's scalar field.
#[derive(Debug, Clone)]
pub struct Basis {
    n: usize,
    mode: FieldMode,
    echelon: Echelon,
    elements: Vec<Matrix>,
}

impl PartialEq for Basis {
    fn eq(&self, other: &Self) -> bool {
        self.mode == other.mode && self.elements == other.elements
    }
}

impl Basis {
    fn from_echelon(n: usize, mode: FieldMode, echelon: Echelon) -> Self {
        let elements = echelon.rows.iter().map(|r| linalg::from_coords(n, r, mode)).collect();
        Basis { n, mode, echelon, elements }
    }

    pub fn elements(&self) -> &[Matrix] {
        &self.elements
    }

    pub fn dim(&self) -> usize {
        self.elements.len()
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    /// First nonzero coordinate of each element (coordinates as in [`linalg::coords`]).
    pub fn pivot_positions(&self) -> &[usize] {
        &self.echelon.pivots
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        m.rank() == self.n && self.coefficients(m).is_some()
    }

    pub fn coefficients(&self, m: &Matrix) -> Option<Vector> {
        self.echelon.coefficients(&linalg::coords(m, self.mode))
    }

    pub fn combine(&self, coeffs: &[GaussianRational]) -> Matrix {
        let mut acc = Matrix::zero(self.n);
        for (c, b) in coeffs.iter().zip(&self.elements) {
            if !c.is_zero() {
                acc = &acc + &b.scale(c);
            }
        }
        acc
    }
}

/// Deterministic echelon basis of the span of `matrices`.
pub fn span_basis(matrices: &[Matrix], mode: FieldMode) -> Result<Basis, AlgebraError> {
    let n = matrices.first().map_or(0, |m| m.rank());
    let mut echelon = Echelon::default();
    for (index, m) in matrices.iter().enumerate() {
        if m.rank() != n {
            return Err(AlgebraError::RankMismatch { index, expected: n, got: m.rank() });
        }
        echelon.insert(&linalg::coords(m, mode));
    }
    Ok(Basis::from_echelon(n, mode, echelon))
}

#[derive(Debug, Clone, PartialEq, Error)]
#[error("not closed within caps ({reason}); last basis has dimension {}", .basis.dim())]
pub struct NotClosedAtCap {
    pub basis: Basis,
    pub reason: String,
}

/// Smallest subspace containing the generators and closed under the bracket.
pub fn close_under(spec: &AlgebraSpec, max_dim: usize, max_rounds: usize) -> Result<Basis, NotClosedAtCap> {
    let mut basis = span_basis(&spec.generators, spec.mode).expect("spec generators share a rank");
    for round in 0..=max_rounds {
        if basis.dim() > max_dim {
            return Err(NotClosedAtCap { basis, reason: format!("dimension exceeds max_dim {max_dim}") });
        }
        let mut echelon = basis.echelon.clone();
        let mut grew = false;
        for x in basis.elements() {
            for y in basis.elements() {
                let p = spec.bracket.apply(x, y);
                grew |= echelon.insert(&linalg::coords(&p, spec.mode));
            }
        }
        if !grew {
            return Ok(basis);
        }
        let next = Basis::from_echelon(basis.n, spec.mode, echelon);
        if round == max_rounds {
            return Err(NotClosedAtCap { basis: next, reason: format!("still growing after {max_rounds} rounds") });
        }
        basis = next;
    }
    unreachable!("loop returns on every path")
}

/// Refutation payloads; each re-checks against a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    ZeroDivisor { x: Matrix, y: Matrix },
    Noncommuting { x: Matrix, y: Matrix },
    NotInSpan { x: Matrix, y: Matrix, product: Matrix },
    Nilpotent { x: Matrix, exponent: u32 },
}

impl Witness {
    /// Re-verifies the witness by direct exact arithmetic.
    pub fn verify(&self, basis: &Basis, bracket: Bracket) -> bool {
        match self {
            Witness::ZeroDivisor { x, y } => {
                !x.is_zero() && !y.is_zero() && (x * y).is_zero() && basis.contains(x) && basis.contains(y)
            }
            Witness::Noncommuting { x, y } => x * y != y * x && basis.contains(x) && basis.contains(y),
            Witness::NotInSpan { x, y, product } => {
                basis.contains(x) && basis.contains(y) && bracket.apply(x, y) == *product && !basis.contains(product)
            }
            Witness::Nilpotent { x, exponent } => {
                *exponent >= 1 && basis.contains(x) && x.pow(*exponent).is_zero() && !x.pow(exponent - 1).is_zero()
            }
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Witness::ZeroDivisor { .. } => "ZERO_DIVISOR",
            Witness::Noncommuting { .. } => "NONCOMMUTING",
            Witness::NotInSpan { .. } => "NOT_IN_SPAN",
            Witness::Nilpotent { .. } => "NILPOTENT",
        }
    }
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::ZeroDivisor { x, y } => write!(f, "ZERO_DIVISOR {x}·{y}=0"),
            Witness::Noncommuting { x, y } => write!(f, "NONCOMMUTING {x}·{y}≠{y}·{x}"),
            Witness::NotInSpan { x, y, product } => write!(f, "NOT_IN_SPAN bracket({x},{y})={product}"),
            Witness::Nilpotent { x, exponent } => write!(f, "NILPOTENT {x}^{exponent}=0"),
        }
    }
}

/// Multiplication table: `bracket(b_i, b_j) = Σ_k table[i][j][k]·b_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureConstants {
    pub bracket: Bracket,
    pub table: Vec<Vec<Vector>>,
}

impl StructureConstants {
    pub fn dim(&self) -> usize {
        self.table.len()
    }

    /// Checks the reconstruction identity against `elements`.
    pub fn reconstructs(&self, elements: &[Matrix]) -> bool {
        let n = match elements.first() {
            Some(m) => m.rank(),
            None => return self.table.is_empty(),
        };
        elements.iter().enumerate().all(|(i, x)| {
            elements.iter().enumerate().all(|(j, y)| {
                let mut acc = Matrix::zero(n);
                for (c, b) in self.table[i][j].iter().zip(elements) {
                    acc = &acc + &b.scale(c);
                }
                acc == self.bracket.apply(x, y)
            })
        })
    }
}

pub fn structure_constants(basis: &Basis, bracket: Bracket) -> Result<StructureConstants, AlgebraError> {
    let mut table = Vec::with_capacity(basis.dim());
    for x in basis.elements() {
        let mut row = Vec::with_capacity(basis.dim());
        for y in basis.elements() {
            let product = bracket.apply(x, y);
            match basis.coefficients(&product) {
                Some(c) => row.push(c),
                None => {
                    return Err(AlgebraError::NotClosed {
                        bracket,
                        witness: Witness::NotInSpan { x: x.clone(), y: y.clone(), product },
                    })
                }
            }
        }
        table.push(row);
    }
    Ok(StructureConstants { bracket, table })
}

/// Structure constants relative to an arbitrary linearly independent list.
pub fn structure_constants_for(elements: &[Matrix], mode: FieldMode, bracket: Bracket) -> Result<StructureConstants, AlgebraError> {
    let cols: Vec<Vector> = elements.iter().map(|m| linalg::coords(m, mode)).collect();
    let mut table = Vec::with_capacity(elements.len());
    for x in elements {
        let mut row = Vec::with_capacity(elements.len());
        for y in elements {
            let product = bracket.apply(x, y);
            match linalg::solve(&cols, &linalg::coords(&product, mode)) {
                Some(c) => row.push(c),
                None => {
                    return Err(AlgebraError::NotClosed {
                        bracket,
                        witness: Witness::NotInSpan { x: x.clone(), y: y.clone(), product },
                    })
                }
            }
        }
        table.push(row);
    }
    Ok(StructureConstants { bracket, table })
}

/// Two-sided identity of the algebra, if any.
pub fn find_unit(basis: &Basis) -> Option<Matrix> {
    if basis.dim() == 0 {
        return None;
    }
    let mode = basis.mode;
    let els = basis.elements();
    // Unknowns c_k with e = Σ c_k b_k; equations e·b_i = b_i and b_i·e = b_i, stacked.
    let cols: Vec<Vector> = els
        .iter()
        .map(|bk| els.iter().flat_map(|bi| linalg::coords(&(bk * bi), mode).into_iter().chain(linalg::coords(&(bi * bk), mode))).collect())
        .collect();
    let target: Vector = els.iter().flat_map(|bi| linalg::coords(bi, mode).into_iter().chain(linalg::coords(bi, mode))).collect();
    let c = linalg::solve(&cols, &target)?;
    let e = basis.combine(&c);
    els.iter().all(|b| &(&e * b) == b && &(b * &e) == b).then_some(e)
}

/// `Ok` when all basis pairs commute, otherwise the first failing pair.
pub fn is_commutative(basis: &Basis) -> Result<(), Witness> {
    let els = basis.elements();
    for (i, x) in els.iter().enumerate() {
        for y in &els[i + 1..] {
            if x * y != y * x {
                return Err(Witness::Noncommuting { x: x.clone(), y: y.clone() });
            }
        }
    }
    Ok(())
}

/// Radical: kernel of `(x, y) ↦ Tr(L_x L_y)` together with `Tr(L_x) = 0`.
pub fn radical(basis: &Basis) -> Result<Basis, AlgebraError> {
    let sc = structure_constants(basis, Bracket::Mul)?;
    let d = basis.dim();
    // left[i][k][j] = coefficient of b_k in b_i·b_j
    let left: Vec<Vec<Vector>> =
        (0..d).map(|i| (0..d).map(|k| (0..d).map(|j| sc.table[i][j][k].clone()).collect()).collect()).collect();
    let mut rows: Vec<Vector> = Vec::with_capacity(d + 1);
    for i in 0..d {
        let row = (0..d)
            .map(|j| {
                let mut acc = GaussianRational::zero();
                for k in 0..d {
                    for l in 0..d {
                        if !left[i][k][l].is_zero() && !left[j][l][k].is_zero() {
                            acc += &(&left[i][k][l] * &left[j][l][k]);
                        }
                    }
                }
                acc
            })
            .collect();
        rows.push(row);
    }
    rows.push(
        (0..d)
            .map(|j| {
                let mut acc = GaussianRational::zero();
                for k in 0..d {
                    acc += &left[j][k][k];
                }
                acc
            })
            .collect(),
    );
    let kernel = linalg::kernel(&rows, d);
    let members: Vec<Matrix> = kernel.iter().map(|v| basis.combine(v)).collect();
    let mut rad = span_basis(&members, basis.mode)?;
    rad.n = basis.n;
    Ok(rad)
}

/// Search order shared by witness and certificate searches: seeds, basis
/// elements, pairwise sums, then integer combinations with coefficients in
/// `{1, -1, 2, -2}` by growing support (first coefficient positive).
fn candidates<'a>(basis: &'a Basis, seeds: &'a [Matrix]) -> impl Iterator<Item = Matrix> + 'a {
    let els = basis.elements();
    let d = els.len();
    let sums = (0..d).flat_map(move |i| (i + 1..d).map(move |j| &els[i] + &els[j]));
    let combos = (1..=d).flat_map(move |size| {
        subsets(d, size).into_iter().flat_map(move |subset| {
            coefficient_tuples(size).into_iter().map(move |coeffs| {
                let mut acc = Matrix::zero(basis.n);
                for (&idx, &c) in subset.iter().zip(&coeffs) {
                    acc = &acc + &els[idx].scale(&GaussianRational::from_int(c));
                }
                acc
            })
        })
    });
    let mut seen = HashSet::new();
    seeds
        .iter()
        .filter(move |s| basis.contains(s))
        .cloned()
        .chain(els.iter().cloned())
        .chain(sums)
        .chain(combos)
        .filter(move |m| !m.is_zero() && seen.insert(m.clone()))
}

fn subsets(d: usize, size: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, d: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..d {
            cur.push(i);
            rec(i + 1, d, size, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, d, size, &mut Vec::new(), &mut out);
    out
}

fn coefficient_tuples(size: usize) -> Vec<Vec<i64>> {
    const ALL: [i64; 4] = [1, -1, 2, -2];
    let mut out: Vec<Vec<i64>> = vec![vec![]];
    for pos in 0..size {
        let choices: &[i64] = if pos == 0 { &[1, 2] } else { &ALL };
        out = out.into_iter().flat_map(|t| choices.iter().map(move |&c| [t.clone(), vec![c]].concat())).collect();
    }
    out
}

/// Splits `x` by a nontrivial factorization of its minimal polynomial relative to `unit`.
fn split_by_min_poly(x: &Matrix, unit: &Matrix, mode: FieldMode, degree_cap: usize) -> Option<Witness> {
    let mp = min_poly_relative(x, unit, mode);
    if mp.degree()? < 2 {
        return None;
    }
    let FactorAnswer::Factored(factors) = factor_bounded(&mp, degree_cap).ok()? else {
        return None;
    };
    let f = factors.first()?.0.clone();
    let (g, r) = poly_divmod(&mp, &f).ok()?;
    if !r.is_zero() {
        return None;
    }
    let fx = x.eval_poly(&f, unit);
    let gx = x.eval_poly(&g, unit);
    let w = Witness::ZeroDivisor { x: fx, y: gx };
    match &w {
        Witness::ZeroDivisor { x, y } if !x.is_zero() && !y.is_zero() && (x * y).is_zero() => Some(w),
        _ => None,
    }
}

fn nilpotent_witness(x: &Matrix) -> Option<Witness> {
    let mut prev = x.clone();
    for _ in 0..=x.rank() {
        let next = &prev * x;
        if next.is_zero() {
            return Some(Witness::ZeroDivisor { x: prev, y: x.clone() });
        }
        prev = next;
    }
    None
}

fn grid_coefficients() -> Vec<GaussianRational> {
    [(0, 1), (1, 1), (-1, 1), (2, 1), (-2, 1), (1, 2), (-1, 2)].iter().map(|&(p, q)| GaussianRational::frac(p, q)).collect()
}

/// Zero-divisor search: radical, then minimal-polynomial splitting of candidates, then a small grid.
pub fn find_zero_divisor(basis: &Basis, mode: FieldMode, budget: usize) -> Option<Witness> {
    find_zero_divisor_seeded(basis, mode, budget, &[], DEFAULT_DEGREE_CAP)
}

/// As [`find_zero_divisor`], trying `seeds` (typically the generators) before the basis elements.
pub fn find_zero_divisor_seeded(basis: &Basis, mode: FieldMode, budget: usize, seeds: &[Matrix], degree_cap: usize) -> Option<Witness> {
    let basis = &with_mode(basis, mode);
    if let Ok(rad) = radical(basis) {
        if let Some(w) = rad.elements().first().and_then(nilpotent_witness) {
            return Some(w);
        }
    }
    let mut spent = 0;
    if let Some(unit) = find_unit(basis) {
        for x in candidates(basis, seeds) {
            if spent >= budget {
                return None;
            }
            spent += 1;
            if let Some(w) = split_by_min_poly(&x, &unit, mode, degree_cap) {
                return Some(w);
            }
        }
    }
    let hs = grid_coefficients();
    let els = basis.elements();
    for i in 0..els.len() {
        for j in i + 1..els.len() {
            if spent >= budget {
                return None;
            }
            spent += 1;
            let mut opts: Vec<Matrix> = hs.iter().map(|h| &els[i] + &els[j].scale(h)).collect();
            opts.push(els[j].clone());
            for x in &opts {
                for y in &opts {
                    if (x * y).is_zero() {
                        return Some(Witness::ZeroDivisor { x: x.clone(), y: y.clone() });
                    }
                }
            }
        }
    }
    None
}

fn with_mode(basis: &Basis, mode: FieldMode) -> Basis {
    if basis.mode == mode {
        basis.clone()
    } else {
        let mut b = span_basis(basis.elements(), mode).expect("common rank");
        b.n = basis.n;
        b
    }
}

/// Proof that the algebra is a division algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Element whose minimal polynomial is irreducible with degree equal to the dimension.
    PrimitiveElement { element: Matrix, min_poly: UniPoly },
    /// `x² = y² = -1`, `xy = -yx` spanning a Hamilton quaternion algebra over an ordered field.
    QuaternionNormForm { x: Matrix, y: Matrix },
    DimOne { unit: Matrix },
}

impl Certificate {
    pub fn kind(&self) -> &'static str {
        match self {
            Certificate::PrimitiveElement { .. } => "PRIMITIVE_ELEMENT",
            Certificate::QuaternionNormForm { .. } => "QUATERNION_NORM_FORM",
            Certificate::DimOne { .. } => "DIM_ONE",
        }
    }

    pub fn verify(&self, basis: &Basis, unit: &Matrix, degree_cap: usize) -> bool {
        let mode = basis.mode;
        match self {
            Certificate::PrimitiveElement { element, min_poly } => {
                let mp = min_poly_relative(element, unit, mode);
                basis.contains(element)
                    && mp == *min_poly
                    && mp.degree() == Some(basis.dim())
                    && factor_bounded(&mp, degree_cap) == Ok(FactorAnswer::Irreducible)
            }
            Certificate::QuaternionNormForm { x, y } => {
                let minus = -unit;
                let xy = x * y;
                matches!(mode, FieldMode::Q | FieldMode::QAsR)
                    && basis.dim() == 4
                    && x * x == minus
                    && y * y == minus
                    && xy == -(y * x)
                    && span_basis(&[unit.clone(), x.clone(), y.clone(), xy], mode).map(|b| b.dim()) == Ok(4)
                    && [x, y].iter().all(|m| basis.contains(m))
            }
            Certificate::DimOne { unit: u } => basis.dim() == 1 && u == unit,
        }
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::PrimitiveElement { element, min_poly } => {
                write!(f, "PRIMITIVE_ELEMENT {element} min poly {min_poly}")
            }
            Certificate::QuaternionNormForm { x, y } => write!(f, "QUATERNION_NORM_FORM x={x} y={y}"),
            Certificate::DimOne { unit } => write!(f, "DIM_ONE unit={unit}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Division {
    Yes(Certificate),
    No(Witness),
    Unknown(String),
}

/// Decides whether the (closed, unital) algebra is a division algebra.
pub fn certify_division(basis: &Basis, mode: FieldMode, budget: usize) -> Division {
    certify_division_seeded(basis, mode, budget, &[], DEFAULT_DEGREE_CAP)
}

pub fn certify_division_seeded(basis: &Basis, mode: FieldMode, budget: usize, seeds: &[Matrix], degree_cap: usize) -> Division {
    let basis = &with_mode(basis, mode);
    if basis.dim() == 0 {
        return Division::Unknown("zero algebra".into());
    }
    let unit = find_unit(basis);
    if let Some(w) = find_zero_divisor_seeded(basis, mode, budget, seeds, degree_cap) {
        return Division::No(w);
    }
    let Some(unit) = unit else {
        return Division::Unknown("algebra has no unit and no zero divisor was found within budget".into());
    };
    if basis.dim() == 1 {
        return Division::Yes(Certificate::DimOne { unit });
    }
    let d = basis.dim();
    if is_commutative(basis).is_ok() {
        for x in candidates(basis, seeds).take(budget) {
            let mp = min_poly_relative(&x, &unit, mode);
            if mp.degree() == Some(d) && factor_bounded(&mp, degree_cap) == Ok(FactorAnswer::Irreducible) {
                return Division::Yes(Certificate::PrimitiveElement { element: x, min_poly: mp });
            }
        }
    } else if d == 4 && matches!(mode, FieldMode::Q | FieldMode::QAsR) {
        let minus = -&unit;
        let roots: Vec<Matrix> = candidates(basis, seeds).take(budget).filter(|x| x * x == minus).collect();
        for (i, x) in roots.iter().enumerate() {
            for y in &roots[i + 1..] {
                if x * y == -(y * x) {
                    let cert = Certificate::QuaternionNormForm { x: x.clone(), y: y.clone() };
                    if cert.verify(basis, &unit, degree_cap) {
                        return Division::Yes(cert);
                    }
                }
            }
        }
    }
    if mode == FieldMode::QIAsC && d >= 2 {
        return Division::Unknown("no zero-divisor witness with entries in Q(i) found within budget".into());
    }
    Division::Unknown("no certificate or witness found within budget".into())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ZeroDivisors {
    Yes(Witness),
    No(Certificate),
    Unknown(String),
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub name: String,
    pub mode: FieldMode,
    pub closed: bool,
    pub closure_failure: Option<NotClosedAtCap>,
    pub basis: Basis,
    pub unit: Option<Matrix>,
    pub commutative: bool,
    pub noncommuting: Option<Witness>,
    pub radical_dim: usize,
    pub zero_divisors: ZeroDivisors,
    pub division: Division,
    pub field: bool,
}

impl Classification {
    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    pub fn label(&self) -> &'static str {
        if !self.closed {
            return "NOT CLOSED";
        }
        let zd = matches!(self.zero_divisors, ZeroDivisors::Yes(_));
        match (self.field, &self.division, self.commutative, zd) {
            (true, _, _, _) => "FIELD",
            (false, Division::Yes(_), _, _) => "DIVISION RING",
            (_, _, true, true) => "COMMUTATIVE RING WITH ZERO DIVISORS",
            (_, _, false, true) => "RING WITH ZERO DIVISORS",
            (_, _, true, false) => "COMMUTATIVE RING",
            (_, _, false, false) => "RING",
        }
    }

    pub fn zero_divisor_witness(&self) -> Option<&Witness> {
        match &self.zero_divisors {
            ZeroDivisors::Yes(w) => Some(w),
            _ => None,
        }
    }
}

/// Full classification of the multiplicative closure of `spec`.
pub fn classify(spec: &AlgebraSpec, caps: &Caps) -> Result<Classification, AlgebraError> {
    if spec.bracket != Bracket::Mul {
        return Err(AlgebraError::NotMultiplicative(spec.bracket));
    }
    let mode = spec.mode;
    let (basis, closure_failure) = match close_under(spec, caps.max_dim, caps.max_rounds) {
        Ok(b) => (b, None),
        Err(e) => (e.basis.clone(), Some(e)),
    };
    if let Some(failure) = closure_failure {
        return Ok(Classification {
            name: spec.name.clone(),
            mode,
            closed: false,
            basis,
            closure_failure: Some(failure),
            unit: None,
            commutative: false,
            noncommuting: None,
            radical_dim: 0,
            zero_divisors: ZeroDivisors::Unknown("closure cap exceeded".into()),
            division: Division::Unknown("closure cap exceeded".into()),
            field: false,
        });
    }
    let unit = find_unit(&basis);
    let noncommuting = is_commutative(&basis).err();
    let commutative = noncommuting.is_none();
    let radical_dim = radical(&basis)?.dim();
    let division = certify_division_seeded(&basis, mode, caps.budget, &spec.generators, caps.degree_cap);

    let fail = |what: &str| AlgebraError::VerificationFailed(format!("{what} for {}", spec.name));
    if let Some(w) = &noncommuting {
        if !w.verify(&basis, Bracket::Mul) {
            return Err(fail("noncommuting witness"));
        }
    }
    let zero_divisors = match &division {
        Division::No(w) => {
            if !w.verify(&basis, Bracket::Mul) {
                return Err(fail("zero-divisor witness"));
            }
            ZeroDivisors::Yes(w.clone())
        }
        Division::Yes(c) => {
            let u = unit.as_ref().ok_or_else(|| fail("certificate without unit"))?;
            if !c.verify(&basis, u, caps.degree_cap) {
                return Err(fail("division certificate"));
            }
            ZeroDivisors::No(c.clone())
        }
        Division::Unknown(reason) => ZeroDivisors::Unknown(reason.clone()),
    };
    let field = commutative && matches!(division, Division::Yes(_));
    Ok(Classification {
        name: spec.name.clone(),
        mode,
        closed: true,
        closure_failure: None,
        basis,
        unit,
        commutative,
        noncommuting,
        radical_dim,
        zero_divisors,
        division,
        field,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{d_family, g_family, make_ladder, quaternion_basis};

    fn int(n: i64) -> GaussianRational {
        GaussianRational::from_int(n)
    }

    fn closure(gens: Vec<Matrix>, bracket: Bracket, mode: FieldMode) -> Result<Basis, NotClosedAtCap> {
        let caps = Caps::default();
        close_under(&AlgebraSpec::new("t", gens, mode, bracket).unwrap(), caps.max_dim, caps.max_rounds)
    }

    #[test]
    fn span_examples() {
        let q = quaternion_basis();
        let b = span_basis(&[q.i.clone(), q.c.clone(), q.c.scale(&int(2))], FieldMode::Q).unwrap();
        assert_eq!(b.dim(), 2);
        assert_eq!(span_basis(&[], FieldMode::Q).unwrap().dim(), 0);
        // Re-spanning reproduces the basis.
        let again = span_basis(b.elements(), FieldMode::Q).unwrap();
        assert_eq!(again, b);
    }

    #[test]
    fn closure_examples() {
        let q = quaternion_basis();
        assert_eq!(closure(vec![q.c.clone(), q.b.clone()], Bracket::Mul, FieldMode::Q).unwrap().dim(), 4);
        let comm = closure(vec![q.c.clone(), q.b.clone(), q.a.clone()], Bracket::Commutator, FieldMode::Q).unwrap();
        assert_eq!(comm.dim(), 3);
        let anti = closure(vec![q.c.clone(), q.b.clone()], Bracket::Anticommutator, FieldMode::Q).unwrap();
        assert!(anti.contains(&q.i));
        assert_eq!(q.c.commutator(&q.b), q.a.scale(&int(2)));
    }

    #[test]
    fn closure_cap_reports_last_basis() {
        let q = quaternion_basis();
        let spec = AlgebraSpec::mul("t", vec![q.c.clone(), q.b.clone()], FieldMode::Q).unwrap();
        let err = close_under(&spec, 3, 8).unwrap_err();
        assert_eq!(err.basis.dim(), 4);
        let err = close_under(&spec, 64, 0).unwrap_err();
        assert_eq!(err.basis.dim(), 4);
    }

    #[test]
    fn structure_constant_examples() {
        let q = quaternion_basis();
        let els: Vec<Matrix> = q.as_array().into_iter().cloned().collect();
        let sc = structure_constants_for(&els, FieldMode::Q, Bracket::Mul).unwrap();
        assert_eq!(sc.table[1][2], vec![int(0), int(0), int(0), int(1)]);
        assert!(sc.reconstructs(&els));

        let d = d_family();
        let sc = structure_constants_for(&[d[1].clone(), d[2].clone()], FieldMode::Q, Bracket::Mul);
        // D1·D2 = D3 is outside span{D1, D2}
        assert!(matches!(sc, Err(AlgebraError::NotClosed { .. })));

        let l = make_ladder();
        let b = span_basis(&[Matrix::identity(2), l.creation.clone()], FieldMode::Q).unwrap();
        let sc = structure_constants(&b, Bracket::Mul).unwrap();
        let idx = b.elements().iter().position(|m| *m == l.creation).unwrap();
        assert!(sc.table[idx][idx].iter().all(|c| c.is_zero()));
        assert!(sc.reconstructs(b.elements()));
    }

    #[test]
    fn unit_examples() {
        let q = quaternion_basis();
        let b = span_basis(&[q.i.clone(), q.c.clone()], FieldMode::Q).unwrap();
        assert_eq!(find_unit(&b), Some(q.i.clone()));
        let e = Matrix::from_ints(&[&[0, 0], &[0, 1]]);
        assert_eq!(find_unit(&span_basis(&[e.clone()], FieldMode::Q).unwrap()), Some(e));
        let l = make_ladder();
        assert_eq!(find_unit(&span_basis(&[l.creation], FieldMode::Q).unwrap()), None);
    }

    #[test]
    fn commutativity_examples() {
        let q = quaternion_basis();
        let els: Vec<Matrix> = q.as_array().into_iter().cloned().collect();
        let b = span_basis(&els, FieldMode::Q).unwrap();
        assert!(matches!(is_commutative(&b), Err(Witness::Noncommuting { .. })));
        assert!(is_commutative(&span_basis(&d_family(), FieldMode::Q).unwrap()).is_ok());
        assert!(is_commutative(&span_basis(&g_family(), FieldMode::Q).unwrap()).is_ok());
    }

    #[test]
    fn radical_examples() {
        let q = quaternion_basis();
        let l = make_ladder();
        let b = span_basis(&[q.i.clone(), l.creation.clone()], FieldMode::Q).unwrap();
        let rad = radical(&b).unwrap();
        assert_eq!(rad.dim(), 1);
        assert!(rad.contains(&l.creation));
        assert_eq!(radical(&span_basis(&[q.i.clone(), q.c.clone()], FieldMode::Q).unwrap()).unwrap().dim(), 0);
        assert_eq!(radical(&span_basis(&[q.i.clone(), q.b.clone()], FieldMode::Q).unwrap()).unwrap().dim(), 0);
    }

    #[test]
    fn zero_divisor_examples() {
        let q = quaternion_basis();
        let ia = span_basis(&[q.i.clone(), q.a.clone()], FieldMode::Q).unwrap();
        let w = find_zero_divisor(&ia, FieldMode::Q, 500).unwrap();
        assert!(w.verify(&ia, Bracket::Mul));

        let ic = span_basis(&[q.i.clone(), q.c.clone()], FieldMode::QI).unwrap();
        let w = find_zero_divisor(&ic, FieldMode::QI, 500).unwrap();
        assert!(w.verify(&ic, Bracket::Mul));

        let icq = span_basis(&[q.i.clone(), q.c.clone()], FieldMode::Q).unwrap();
        assert_eq!(find_zero_divisor(&icq, FieldMode::Q, 500), None);
    }

    #[test]
    fn division_examples() {
        let q = quaternion_basis();
        let ic = span_basis(&[q.i.clone(), q.c.clone()], FieldMode::Q).unwrap();
        match certify_division(&ic, FieldMode::Q, 500) {
            Division::Yes(Certificate::PrimitiveElement { min_poly, .. }) => {
                assert_eq!(min_poly.to_string(), "t^2+1");
            }
            other => panic!("{other:?}"),
        }
        let ib = span_basis(&[q.i.clone(), q.b.clone()], FieldMode::Q).unwrap();
        assert!(matches!(certify_division(&ib, FieldMode::Q, 500), Division::No(_)));
        let one = span_basis(&[q.i.clone()], FieldMode::Q).unwrap();
        assert!(matches!(certify_division(&one, FieldMode::Q, 500), Division::Yes(Certificate::DimOne { .. })));
    }

    #[test]
    fn hamilton_quaternions_certify() {
        // i ↦ [[i,0],[0,-i]], j ↦ C: a genuine Hamilton basis inside M2(Q(i)), spanned over Q.
        let q = quaternion_basis();
        let x = Matrix::from_rows(vec![vec![GaussianRational::i(), int(0)], vec![int(0), -GaussianRational::i()]]).unwrap();
        let y = q.c.clone();
        let gens = vec![q.i.clone(), x.clone(), y.clone(), &x * &y];
        let b = span_basis(&gens, FieldMode::Q).unwrap();
        assert_eq!(b.dim(), 4);
        match certify_division_seeded(&b, FieldMode::Q, 500, &gens, 8) {
            Division::Yes(c @ Certificate::QuaternionNormForm { .. }) => assert!(c.verify(&b, &q.i, 8)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn split_quaternion_table_is_not_division() {
        let q = quaternion_basis();
        let els: Vec<Matrix> = q.as_array().into_iter().cloned().collect();
        let b = span_basis(&els, FieldMode::Q).unwrap();
        match certify_division_seeded(&b, FieldMode::Q, 500, &els, 8) {
            Division::No(w) => assert!(w.verify(&b, Bracket::Mul)),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn classify_rejects_non_mul() {
        let q = quaternion_basis();
        let spec = AlgebraSpec::new("t", vec![q.c], FieldMode::Q, Bracket::Commutator).unwrap();
        assert_eq!(classify(&spec, &Caps::default()), Err(AlgebraError::NotMultiplicative(Bracket::Commutator)));
    }

    #[test]
    fn classify_nilpotent_algebra() {
        let l = make_ladder();
        let spec = AlgebraSpec::mul("a+", vec![l.creation.clone()], FieldMode::Q).unwrap();
        let c = classify(&spec, &Caps::default()).unwrap();
        assert_eq!(c.unit, None);
        assert_eq!(c.radical_dim, 1);
        assert_eq!(c.label(), "COMMUTATIVE RING WITH ZERO DIVISORS");
    }

    #[test]
    fn spec_rejects_mixed_ranks() {
        let r = AlgebraSpec::mul("t", vec![Matrix::identity(2), Matrix::identity(3)], FieldMode::Q);
        assert_eq!(r, Err(AlgebraError::RankMismatch { index: 1, expected: 2, got: 3 }));
        assert_eq!(AlgebraSpec::mul("t", vec![], FieldMode::Q), Err(AlgebraError::NoGenerators));
    }
}
