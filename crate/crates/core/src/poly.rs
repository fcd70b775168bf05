//! Univariate polynomials over `Q` / `Q(i)` with desk-scale factorization.
//!
//! Factorization is deterministic and bounded: rational roots first, then a
//! Kronecker interpolation search whose coefficients are pruned with the
//! Mignotte bound. Over `Q(i)` a squarefree polynomial is split through the
//! norm `N(t) = f(t - s·i)·conj(f)(t + s·i)`, which lies in `Q[t]`.
//! Any search that runs past its work budget answers `Unknown`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

use crate::scalar::{square_test, FieldMode, GaussianRational, Rational, SquareRoot};

/// Default degree cap for [`factor_bounded`].
pub const DEFAULT_DEGREE_CAP: usize = 8;

/// Interpolation candidates tried by one Kronecker search before giving up.
const KRONECKER_BUDGET: u64 = 400_000;

/// Values whose divisors are enumerated by trial division must stay below this.
const DIVISOR_LIMIT: u64 = 1_000_000_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("polynomial modes differ ({0} vs {1})")]
    ModeMismatch(FieldMode, FieldMode),
    #[error("mode {0} requires real coefficients")]
    NonRealCoefficient(FieldMode),
    #[error("factorization requires a monic non-constant polynomial")]
    NotMonicNonConstant,
}

/// Polynomial in `t`, coefficients lowest degree first; zero is the empty sequence.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<GaussianRational>,
    mode: FieldMode,
}

impl UniPoly {
    pub fn new(coeffs: Vec<GaussianRational>, mode: FieldMode) -> Result<Self, PolyError> {
        if !mode.complex_scalars() && coeffs.iter().any(|c| !c.is_real()) {
            return Err(PolyError::NonRealCoefficient(mode));
        }
        Ok(Self::raw(coeffs, mode))
    }

    fn raw(mut coeffs: Vec<GaussianRational>, mode: FieldMode) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        UniPoly { coeffs, mode }
    }

    /// Integer coefficients, lowest degree first.
    pub fn from_ints(coeffs: &[i64], mode: FieldMode) -> Self {
        Self::raw(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect(), mode)
    }

    pub fn zero(mode: FieldMode) -> Self {
        UniPoly { coeffs: Vec::new(), mode }
    }

    pub fn constant(c: GaussianRational, mode: FieldMode) -> Self {
        Self::raw(vec![c], mode)
    }

    pub fn one(mode: FieldMode) -> Self {
        Self::constant(GaussianRational::one(), mode)
    }

    /// `t - root`.
    pub fn linear(root: &GaussianRational, mode: FieldMode) -> Self {
        Self::raw(vec![-root, GaussianRational::one()], mode)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn mode(&self) -> FieldMode {
        self.mode
    }

    pub fn with_mode(mut self, mode: FieldMode) -> Self {
        self.mode = mode;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_real())
    }

    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// Scales to leading coefficient one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.inverse().expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::raw(self.coeffs.iter().map(|a| a * c).collect(), self.mode)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::raw((0..n).map(|k| &self.coeff(k) + &other.coeff(k)).collect(), self.mode)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::raw((0..n).map(|k| &self.coeff(k) - &other.coeff(k)).collect(), self.mode)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.mode);
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        Self::raw(out, self.mode)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one(self.mode);
        for _ in 0..exp {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        Self::raw(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::from_int(k as i64))
                .collect(),
            self.mode,
        )
    }

    pub fn eval(&self, x: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Coefficientwise complex conjugate.
    pub fn conj(&self) -> Self {
        Self::raw(self.coeffs.iter().map(|c| c.conj()).collect(), self.mode)
    }

    /// `p(t + shift)`.
    pub fn shift(&self, shift: &GaussianRational) -> Self {
        let step = Self::raw(vec![shift.clone(), GaussianRational::one()], self.mode);
        let mut acc = Self::zero(self.mode);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&step).add(&Self::constant(c.clone(), self.mode));
        }
        acc
    }

    fn cmp_key(&self, other: &Self) -> Ordering {
        self.coeffs.len().cmp(&other.coeffs.len()).then_with(|| {
            for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
                let o = a.re.cmp(&b.re).then_with(|| a.im.cmp(&b.im));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            let (negative, body) = if c.is_real() {
                let neg = c.re.signum() < 0;
                let mag = c.re.abs();
                if mag.is_one() && k > 0 {
                    (neg, String::new())
                } else {
                    (neg, mag.to_string())
                }
            } else if c.re.is_zero() {
                let neg = c.im.signum() < 0;
                let mag = c.im.abs();
                (neg, if mag.is_one() { "i".to_string() } else { format!("{mag}i") })
            } else {
                (false, format!("({c})"))
            };
            if negative {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            f.write_str(&body)?;
            f.write_str(&mono)?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} [{}]", self.mode)
    }
}

/// Euclidean division `p = q·quotient + remainder`, `deg remainder < deg q`.
pub fn poly_divmod(p: &UniPoly, q: &UniPoly) -> Result<(UniPoly, UniPoly), PolyError> {
    if q.is_zero() {
        return Err(PolyError::ZeroDivisor);
    }
    if p.mode != q.mode {
        return Err(PolyError::ModeMismatch(p.mode, q.mode));
    }
    Ok(divmod_unchecked(p, q))
}

fn divmod_unchecked(p: &UniPoly, q: &UniPoly) -> (UniPoly, UniPoly) {
    let dq = q.degree().expect("nonzero divisor");
    let inv_lead = q.leading().unwrap().inverse().expect("nonzero");
    let mut rem = p.coeffs.clone();
    if rem.len() <= dq {
        return (UniPoly::zero(p.mode), p.clone());
    }
    let mut quot = vec![GaussianRational::zero(); rem.len() - dq];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dq] * &inv_lead;
        if c.is_zero() {
            continue;
        }
        for (j, qc) in q.coeffs.iter().enumerate() {
            rem[k + j] -= &(&c * qc);
        }
        quot[k] = c;
    }
    rem.truncate(dq);
    (UniPoly::raw(quot, p.mode), UniPoly::raw(rem, p.mode))
}

fn exact_div(p: &UniPoly, q: &UniPoly) -> UniPoly {
    let (quot, rem) = divmod_unchecked(p, q);
    debug_assert!(rem.is_zero(), "inexact division {p:?} / {q:?}");
    quot
}

/// Monic greatest common divisor.
pub fn poly_gcd(a: &UniPoly, b: &UniPoly) -> UniPoly {
    let mut x = a.clone();
    let mut y = b.clone();
    while !y.is_zero() {
        let (_, r) = divmod_unchecked(&x, &y);
        x = y;
        y = r;
    }
    x.monic()
}

/// `p / gcd(p, p')`, monic.
pub fn squarefree_part(p: &UniPoly) -> UniPoly {
    assert!(!p.is_zero(), "squarefree part of the zero polynomial");
    let g = poly_gcd(p, &p.derivative());
    exact_div(p, &g).monic()
}

/// Yun's decomposition `p = lc · Π a_i^i` with pairwise coprime squarefree monic `a_i`.
pub fn squarefree_decomposition(p: &UniPoly) -> Vec<(UniPoly, u32)> {
    let mut out = Vec::new();
    if p.degree().unwrap_or(0) == 0 {
        return out;
    }
    let f = p.monic();
    let df = f.derivative();
    let a0 = poly_gcd(&f, &df);
    let mut b = exact_div(&f, &a0);
    let mut c = exact_div(&df, &a0);
    let mut d = c.sub(&b.derivative());
    let mut i = 1u32;
    while b.degree().unwrap_or(0) > 0 {
        let a = poly_gcd(&b, &d);
        let nb = exact_div(&b, &a);
        c = exact_div(&d, &a);
        d = c.sub(&nb.derivative());
        if a.degree().unwrap_or(0) > 0 {
            out.push((a, i));
        }
        b = nb;
        i += 1;
    }
    out
}

/// Result of [`factor_bounded`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FactorAnswer {
    /// Monic non-constant factors with multiplicities; their product is the input.
    Factored(Vec<(UniPoly, u32)>),
    /// Splits over the emulated closed field, but no factor has coefficients in the scalar field.
    FactoredExistence(String),
    Irreducible,
    Unknown(String),
}

impl FactorAnswer {
    /// Concrete nontrivial factors, if any.
    pub fn factors(&self) -> Option<&[(UniPoly, u32)]> {
        match self {
            FactorAnswer::Factored(f) => Some(f),
            _ => None,
        }
    }
}

/// Factors a monic non-constant polynomial under its mode, giving up above `degree_cap`.
pub fn factor_bounded(p: &UniPoly, degree_cap: usize) -> Result<FactorAnswer, PolyError> {
    let deg = match p.degree() {
        Some(d) if d >= 1 && p.is_monic() => d,
        _ => return Err(PolyError::NotMonicNonConstant),
    };
    if !p.mode.complex_scalars() && !p.is_real() {
        return Err(PolyError::NonRealCoefficient(p.mode));
    }
    if deg == 1 {
        return Ok(FactorAnswer::Irreducible);
    }
    if deg > degree_cap {
        return Ok(FactorAnswer::Unknown(format!("degree {deg} exceeds cap {degree_cap}")));
    }
    let answer = match p.mode {
        FieldMode::Q => match factor_full(p, FieldMode::Q) {
            Ok(f) => concrete(f),
            Err(reason) => FactorAnswer::Unknown(reason),
        },
        FieldMode::QI => match factor_full(p, FieldMode::QI) {
            Ok(f) => concrete(f),
            Err(reason) => FactorAnswer::Unknown(reason),
        },
        FieldMode::QAsR => factor_as_real(p, deg),
        FieldMode::QIAsC => match factor_full(p, FieldMode::QI) {
            Ok(f) if is_trivial(&f) => FactorAnswer::Unknown("roots outside Q(i)".into()),
            Ok(f) => FactorAnswer::Factored(relabel(f, FieldMode::QIAsC)),
            Err(reason) => FactorAnswer::Unknown(format!("roots outside Q(i) or search exhausted: {reason}")),
        },
    };
    Ok(answer)
}

fn is_trivial(f: &[(UniPoly, u32)]) -> bool {
    f.len() == 1 && f[0].1 == 1
}

fn concrete(f: Vec<(UniPoly, u32)>) -> FactorAnswer {
    if is_trivial(&f) {
        FactorAnswer::Irreducible
    } else {
        FactorAnswer::Factored(f)
    }
}

fn relabel(f: Vec<(UniPoly, u32)>, mode: FieldMode) -> Vec<(UniPoly, u32)> {
    f.into_iter().map(|(p, m)| (p.with_mode(mode), m)).collect()
}

fn factor_as_real(p: &UniPoly, deg: usize) -> FactorAnswer {
    if deg == 2 {
        let disc = discriminant(p);
        match square_test(&disc, FieldMode::QAsR).expect("real discriminant") {
            None => return FactorAnswer::Irreducible,
            Some(SquareRoot::Exists) => {
                return FactorAnswer::FactoredExistence("positive discriminant; roots are real but irrational".into())
            }
            Some(SquareRoot::Root(_)) => {}
        }
    }
    match factor_full(p, FieldMode::Q) {
        Ok(f) if !is_trivial(&f) => FactorAnswer::Factored(relabel(f, FieldMode::QAsR)),
        _ => FactorAnswer::FactoredExistence(format!("every real polynomial of degree {deg} > 2 splits over R")),
    }
}

fn discriminant(p: &UniPoly) -> GaussianRational {
    let (c, b, a) = (p.coeff(0), p.coeff(1), p.coeff(2));
    &(&b * &b) - &(&GaussianRational::from_int(4) * &(&a * &c))
}

/// Full factorization over `Q` or `Q(i)` (field mode chooses which); `Err` carries an unknown reason.
fn factor_full(p: &UniPoly, field: FieldMode) -> Result<Vec<(UniPoly, u32)>, String> {
    let mode = p.mode;
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(p) {
        let pieces = match field {
            FieldMode::Q => factor_squarefree_q(&part.with_mode(FieldMode::Q))?,
            _ => factor_squarefree_qi(&part.with_mode(FieldMode::QI))?,
        };
        out.extend(pieces.into_iter().map(|f| (f.with_mode(mode), mult)));
    }
    out.sort_by(|a, b| a.0.cmp_key(&b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// Roots of a monic quadratic under a square test in `field`.
fn split_quadratic(p: &UniPoly, field: FieldMode) -> Option<(GaussianRational, GaussianRational)> {
    let disc = discriminant(p);
    let root = match square_test(&disc, field).ok()?? {
        SquareRoot::Root(r) => r,
        SquareRoot::Exists => return None,
    };
    let b = p.coeff(1);
    let half = GaussianRational::frac(1, 2);
    let r1 = &(&(-&b) + &root) * &half;
    let r2 = &(&(-&b) - &root) * &half;
    Some((r1, r2))
}

fn quadratic_factors(p: &UniPoly, field: FieldMode) -> Vec<UniPoly> {
    match split_quadratic(p, field) {
        Some((r1, r2)) => vec![UniPoly::linear(&r1, p.mode), UniPoly::linear(&r2, p.mode)],
        None => vec![p.clone()],
    }
}

/// Irreducible monic factors over `Q` of a squarefree monic rational polynomial.
fn factor_squarefree_q(f: &UniPoly) -> Result<Vec<UniPoly>, String> {
    let deg = f.degree().expect("nonzero");
    if deg <= 1 {
        return Ok(vec![f.clone()]);
    }
    if deg == 2 {
        return Ok(quadratic_factors(f, FieldMode::Q));
    }
    let int = IntPoly::from_rational(f);
    if let Some(root) = int.rational_root()? {
        let lin = UniPoly::linear(&GaussianRational::real(root), f.mode);
        let rest = exact_div(f, &lin);
        let mut out = vec![lin];
        out.extend(factor_squarefree_q(&rest)?);
        return Ok(out);
    }
    if deg == 3 {
        return Ok(vec![f.clone()]);
    }
    for d in 2..=deg / 2 {
        if let Some(g) = int.kronecker_factor(d)? {
            let g = g.to_monic(f.mode);
            let rest = exact_div(f, &g);
            let mut out = factor_squarefree_q(&g)?;
            out.extend(factor_squarefree_q(&rest)?);
            return Ok(out);
        }
    }
    Ok(vec![f.clone()])
}

/// Irreducible monic factors over `Q(i)` of a squarefree monic polynomial.
fn factor_squarefree_qi(f: &UniPoly) -> Result<Vec<UniPoly>, String> {
    let deg = f.degree().expect("nonzero");
    if deg <= 1 {
        return Ok(vec![f.clone()]);
    }
    if deg == 2 {
        return Ok(quadratic_factors(f, FieldMode::QI));
    }
    if !f.is_real() {
        return norm_split(f);
    }
    let mut out = Vec::new();
    for g in factor_squarefree_q(&f.clone().with_mode(FieldMode::Q))? {
        let g = g.with_mode(FieldMode::QI);
        match g.degree().unwrap() {
            1 => out.push(g),
            2 => out.extend(quadratic_factors(&g, FieldMode::QI)),
            // An irreducible rational factor splits over Q(i) only into two conjugate halves.
            d if d % 2 == 1 => out.push(g),
            _ => out.extend(norm_split(&g)?),
        }
    }
    Ok(out)
}

/// Splits a squarefree polynomial over `Q(i)` by factoring a squarefree norm over `Q`.
fn norm_split(f: &UniPoly) -> Result<Vec<UniPoly>, String> {
    for s in [0i64, 1, -1, 2, -2, 3, -3, 4, -4, 5] {
        let shift = GaussianRational::new(Rational::zero(), Rational::from_int(-s));
        // f_s(t) = f(t - s·i)
        let fs = f.shift(&shift);
        let norm = fs.mul(&fs.conj());
        debug_assert!(norm.is_real());
        let norm_q = norm.clone().with_mode(FieldMode::Q);
        if poly_gcd(&norm_q, &norm_q.derivative()).degree() != Some(0) {
            continue;
        }
        let mut out = Vec::new();
        for h in factor_squarefree_q(&norm_q)? {
            let g = poly_gcd(&fs, &h.with_mode(f.mode));
            if g.degree().unwrap_or(0) > 0 {
                out.push(g.shift(&-&shift));
            }
        }
        return Ok(out);
    }
    Err("no squarefree norm within shift range".into())
}

/// Primitive integer polynomial, lowest degree first.
#[derive(Debug, Clone)]
struct IntPoly(Vec<BigInt>);

impl IntPoly {
    fn from_rational(f: &UniPoly) -> Self {
        let lcm = f.coeffs.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.re.denom()));
        let ints: Vec<BigInt> = f.coeffs.iter().map(|c| c.re.numer() * (&lcm / c.re.denom())).collect();
        let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let mut ints: Vec<BigInt> = ints.into_iter().map(|c| c / &content).collect();
        if ints.last().is_some_and(|c| c.is_negative()) {
            ints.iter_mut().for_each(|c| *c = -&*c);
        }
        IntPoly(ints)
    }

    fn degree(&self) -> usize {
        self.0.len() - 1
    }

    fn eval(&self, x: &BigInt) -> BigInt {
        self.0.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    fn eval_rational(&self, num: &BigInt, den: &BigInt) -> BigInt {
        // den^deg · P(num/den)
        let n = self.degree();
        let mut acc = BigInt::zero();
        let mut den_pow = BigInt::one();
        let mut terms = Vec::with_capacity(n + 1);
        for _ in 0..=n {
            terms.push(den_pow.clone());
            den_pow *= den;
        }
        let mut num_pow = BigInt::one();
        for (k, c) in self.0.iter().enumerate() {
            acc += c * &num_pow * &terms[n - k];
            num_pow *= num;
        }
        acc
    }

    fn rational_root(&self) -> Result<Option<Rational>, String> {
        if self.0[0].is_zero() {
            return Ok(Some(Rational::zero()));
        }
        let ps = divisors(&self.0[0])?;
        let qs = divisors(self.0.last().unwrap())?;
        for q in &qs {
            for p in &ps {
                if !p.gcd(q).is_one() {
                    continue;
                }
                for cand in [p.clone(), -p] {
                    if self.eval_rational(&cand, q).is_zero() {
                        return Ok(Some(Rational::new(cand, q.clone()).expect("nonzero")));
                    }
                }
            }
        }
        Ok(None)
    }

    fn to_monic(&self, mode: FieldMode) -> UniPoly {
        UniPoly::raw(self.0.iter().map(|c| GaussianRational::real(Rational::from_int(c.clone()))).collect(), mode).monic()
    }

    /// Kronecker search for an integer factor of exact degree `d`.
    fn kronecker_factor(&self, d: usize) -> Result<Option<IntPoly>, String> {
        let norm2: BigInt = self.0.iter().map(|c| c * c).sum();
        let bound = binomial(d, d / 2) * (norm2.sqrt() + BigInt::one());

        // Integer points in the order 0, 1, -1, 2, -2, ...; keep those with fewest divisors.
        let mut pool = Vec::new();
        for k in 0..(d as i64 + 6) {
            let x = BigInt::from(if k % 2 == 0 { -(k / 2) } else { (k + 1) / 2 });
            let v = self.eval(&x);
            if v.is_zero() {
                // An integer root; callers strip rational roots first.
                return Ok(Some(IntPoly(vec![-x, BigInt::one()])));
            }
            let divs = divisors(&v)?;
            pool.push((x, divs));
        }
        pool.sort_by_key(|(_, divs)| divs.len());
        pool.truncate(d + 1);
        pool.sort_by(|a, b| a.0.cmp(&b.0));

        let xs: Vec<BigInt> = pool.iter().map(|(x, _)| x.clone()).collect();
        // Candidate values at each point: ±divisor; the first point's sign is fixed positive.
        let choices: Vec<Vec<BigInt>> = pool
            .iter()
            .enumerate()
            .map(|(j, (_, divs))| {
                let mut v: Vec<BigInt> = divs.clone();
                if j > 0 {
                    v.extend(divs.iter().map(|x| -x));
                }
                v
            })
            .collect();
        let total: f64 = choices.iter().map(|c| c.len() as f64).product();
        if total > KRONECKER_BUDGET as f64 {
            return Err(format!("Kronecker search for degree-{d} factor exceeds budget ({total:.0} candidates)"));
        }
        let lead = self.0.last().unwrap().clone();
        let mut idx = vec![0usize; choices.len()];
        loop {
            let values: Vec<BigInt> = idx.iter().zip(&choices).map(|(&i, c)| c[i].clone()).collect();
            if let Some(g) = interpolate_integer(&xs, &values) {
                if g.len() == d + 1
                    && (&lead % g.last().unwrap()).is_zero()
                    && g.iter().all(|c| c.abs() <= bound)
                    && self.divisible_by(&g)
                {
                    return Ok(Some(IntPoly(g)));
                }
            }
            // odometer
            let mut k = 0;
            loop {
                if k == idx.len() {
                    return Ok(None);
                }
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }

    fn divisible_by(&self, g: &[BigInt]) -> bool {
        let to_poly = |v: &[BigInt]| {
            UniPoly::raw(v.iter().map(|c| GaussianRational::real(Rational::from_int(c.clone()))).collect(), FieldMode::Q)
        };
        let (_, r) = divmod_unchecked(&to_poly(&self.0), &to_poly(g));
        r.is_zero()
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Positive divisors of `|n|` (n ≠ 0), ascending.
fn divisors(n: &BigInt) -> Result<Vec<BigInt>, String> {
    let m = n.abs().to_u64().filter(|&m| m <= DIVISOR_LIMIT).ok_or_else(|| format!("value {n} too large to enumerate divisors"))?;
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut k = 1u64;
    while k * k <= m {
        if m % k == 0 {
            small.push(BigInt::from(k));
            if k * k != m {
                large.push(BigInt::from(m / k));
            }
        }
        k += 1;
    }
    small.extend(large.into_iter().rev());
    Ok(small)
}

/// Newton interpolation; `None` unless every coefficient is an integer.
fn interpolate_integer(xs: &[BigInt], ys: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = xs.len();
    let mut dd: Vec<Rational> = ys.iter().map(|y| Rational::from_int(y.clone())).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let num = &dd[i] - &dd[i - 1];
            let den = Rational::from_int(&xs[i] - &xs[i - level]);
            dd[i] = &num / &den;
        }
    }
    // Expand Σ dd[k] Π_{j<k} (t - x_j), Horner from the top.
    let mut coeffs: Vec<Rational> = vec![dd[n - 1].clone()];
    for k in (0..n - 1).rev() {
        let xk = Rational::from_int(xs[k].clone());
        let mut next = vec![Rational::zero(); coeffs.len() + 1];
        for (j, c) in coeffs.iter().enumerate() {
            next[j + 1] = &next[j + 1] + c;
            next[j] = &next[j] - &(c * &xk);
        }
        next[0] = &next[0] + &dd[k];
        coeffs = next;
    }
    while coeffs.last().is_some_and(|c| c.is_zero()) {
        coeffs.pop();
    }
    if coeffs.iter().any(|c| !c.is_integer()) {
        return None;
    }
    Some(coeffs.into_iter().map(|c| c.numer().clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c, FieldMode::Q)
    }

    fn product(f: &[(UniPoly, u32)], mode: FieldMode) -> UniPoly {
        f.iter().fold(UniPoly::one(mode), |acc, (g, m)| acc.mul(&g.pow(*m)))
    }

    #[test]
    fn divmod_examples() {
        let (quot, rem) = poly_divmod(&q(&[-1, 0, 1]), &q(&[-1, 1])).unwrap();
        assert_eq!((quot, rem.is_zero()), (q(&[1, 1]), true));

        let qi = |c: &[i64]| UniPoly::from_ints(c, FieldMode::QI);
        let t_minus_i = UniPoly::linear(&GaussianRational::i(), FieldMode::QI);
        let (quot, rem) = poly_divmod(&qi(&[1, 0, 1]), &t_minus_i).unwrap();
        assert_eq!(quot, UniPoly::new(vec![GaussianRational::i(), GaussianRational::one()], FieldMode::QI).unwrap());
        assert!(rem.is_zero());

        let (quot, rem) = poly_divmod(&q(&[0, 1, 0, 1]), &q(&[0, 0, 1])).unwrap();
        assert_eq!((quot, rem), (q(&[0, 1]), q(&[0, 1])));

        assert_eq!(poly_divmod(&q(&[1]), &q(&[])), Err(PolyError::ZeroDivisor));
        assert!(matches!(poly_divmod(&q(&[1]), &qi(&[1])), Err(PolyError::ModeMismatch(..))));
    }

    #[test]
    fn squarefree_examples() {
        assert_eq!(squarefree_part(&q(&[0, 0, 1])), q(&[0, 1]));
        // (t-1)^2 (t+1) = t^3 - t^2 - t + 1
        assert_eq!(squarefree_part(&q(&[1, -1, -1, 1])), q(&[-1, 0, 1]));
        assert_eq!(squarefree_part(&q(&[1, 0, 1])), q(&[1, 0, 1]));
        let dec = squarefree_decomposition(&q(&[1, -1, -1, 1]));
        assert_eq!(dec, vec![(q(&[1, 1]), 1), (q(&[-1, 1]), 2)]);
    }

    #[test]
    fn factor_examples() {
        assert_eq!(factor_bounded(&q(&[1, 0, 1]), 8).unwrap(), FactorAnswer::Irreducible);
        assert_eq!(
            factor_bounded(&q(&[-1, 0, 1]), 8).unwrap(),
            FactorAnswer::Factored(vec![(q(&[-1, 1]), 1), (q(&[1, 1]), 1)])
        );
        let p = UniPoly::from_ints(&[1, 0, 1], FieldMode::QI);
        let f = factor_bounded(&p, 8).unwrap();
        let fs = f.factors().expect("splits over Q(i)");
        assert_eq!(fs.len(), 2);
        assert_eq!(product(fs, FieldMode::QI), p);
        assert_eq!(factor_bounded(&q(&[-2, 0, 1]), 8).unwrap(), FactorAnswer::Irreducible);
        assert!(matches!(
            factor_bounded(&UniPoly::from_ints(&[-2, 0, 1], FieldMode::QAsR), 8).unwrap(),
            FactorAnswer::FactoredExistence(_)
        ));
        assert_eq!(factor_bounded(&UniPoly::from_ints(&[2, 0, 1], FieldMode::QAsR), 8).unwrap(), FactorAnswer::Irreducible);
        assert!(matches!(
            factor_bounded(&UniPoly::from_ints(&[-2, 0, 1], FieldMode::QIAsC), 8).unwrap(),
            FactorAnswer::Unknown(_)
        ));
    }

    #[test]
    fn factor_rejects_bad_input() {
        assert_eq!(factor_bounded(&q(&[1, 2]), 8), Err(PolyError::NotMonicNonConstant));
        assert_eq!(factor_bounded(&q(&[1]), 8), Err(PolyError::NotMonicNonConstant));
        assert!(matches!(factor_bounded(&q(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 1]), 8).unwrap(), FactorAnswer::Unknown(_)));
    }

    #[test]
    fn kronecker_finds_quadratic_pairs() {
        // (t^2+1)(t^2+2) = t^4 + 3t^2 + 2
        let p = q(&[2, 0, 3, 0, 1]);
        match factor_bounded(&p, 8).unwrap() {
            FactorAnswer::Factored(fs) => {
                assert_eq!(fs, vec![(q(&[1, 0, 1]), 1), (q(&[2, 0, 1]), 1)]);
            }
            other => panic!("{other:?}"),
        }
        // t^4 + 1 is irreducible over Q and splits over Q(i) as (t^2 - i)(t^2 + i).
        assert_eq!(factor_bounded(&q(&[1, 0, 0, 0, 1]), 8).unwrap(), FactorAnswer::Irreducible);
        let qi = UniPoly::from_ints(&[1, 0, 0, 0, 1], FieldMode::QI);
        let fs = factor_bounded(&qi, 8).unwrap().factors().unwrap().to_vec();
        assert_eq!(fs.len(), 2);
        assert_eq!(product(&fs, FieldMode::QI), qi);
        // t^3 - 2 has no rational root.
        assert_eq!(factor_bounded(&q(&[-2, 0, 0, 1]), 8).unwrap(), FactorAnswer::Irreducible);
    }

    #[test]
    fn repeated_factors_carry_multiplicity() {
        // t^2 (t - 1)
        let f = factor_bounded(&q(&[0, 0, -1, 1]), 8).unwrap();
        assert_eq!(f, FactorAnswer::Factored(vec![(q(&[-1, 1]), 1), (q(&[0, 1]), 2)]));
    }

    #[test]
    fn display_forms() {
        assert_eq!(q(&[1, 0, 1]).to_string(), "t^2+1");
        assert_eq!(q(&[10, -7, 1]).to_string(), "t^2-7t+10");
        assert_eq!(UniPoly::linear(&GaussianRational::i(), FieldMode::QI).to_string(), "t-i");
        assert_eq!(q(&[]).to_string(), "0");
    }
}
