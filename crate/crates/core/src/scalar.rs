//! Exact scalars: arbitrary-precision rationals and Gaussian rationals `Q(i)`.
//!
//! Every value is kept in canonical form (lowest terms, positive denominator),
//! so equality is structural and printed forms are unique. The literal
//! grammar used by spec files and reports is
//!
//! ```text
//! rational := ["-"] digits ["/" digits]
//! gauss    := rational | rational ("+"|"-") rational "i" | ["-"] rational "i"
//! ```

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid scalar literal {input:?}: {reason}")]
    Parse { input: String, reason: &'static str },
    #[error("mode {0} requires a real scalar")]
    NotReal(FieldMode),
}

/// Canonical rational number.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Rational(BigRational);

impl Rational {
    /// Builds `numerator / denominator` in lowest terms with the sign on the numerator.
    pub fn new(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Self, ScalarError> {
        let den = denominator.into();
        if den.is_zero() {
            return Err(ScalarError::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(numerator.into(), den)))
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        match self.0.numer().sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Rational(self.0.abs())
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Rational(self.0.recip()))
    }

    pub fn pow(&self, exp: u32) -> Self {
        Rational(num_traits::pow(self.0.clone(), exp as usize))
    }

    /// Exact rational square root, if one exists.
    pub fn sqrt(&self) -> Option<Self> {
        if self.signum() < 0 {
            return None;
        }
        let n = isqrt_exact(self.0.numer())?;
        let d = isqrt_exact(self.0.denom())?;
        Some(Rational(BigRational::new(n, d)))
    }

    pub fn as_big(&self) -> &BigRational {
        &self.0
    }
}

fn isqrt_exact(n: &BigInt) -> Option<BigInt> {
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Normalizes `numerator / denominator`.
pub fn rat_normalize(numerator: impl Into<BigInt>, denominator: impl Into<BigInt>) -> Result<Rational, ScalarError> {
    Rational::new(numerator, denominator)
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::from_int(n)
    }
}

impl From<BigRational> for Rational {
    fn from(r: BigRational) -> Self {
        Rational(r)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

macro_rules! forward_binop {
    ($ty:ident, $trait:ident, $method:ident, $imp:ident) => {
        impl $trait<&$ty> for &$ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $imp(self, rhs)
            }
        }
        impl $trait<$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: $ty) -> $ty {
                $imp(&self, &rhs)
            }
        }
        impl $trait<&$ty> for $ty {
            type Output = $ty;
            fn $method(self, rhs: &$ty) -> $ty {
                $imp(&self, rhs)
            }
        }
    };
}

fn rat_add(a: &Rational, b: &Rational) -> Rational {
    Rational(&a.0 + &b.0)
}
fn rat_sub(a: &Rational, b: &Rational) -> Rational {
    Rational(&a.0 - &b.0)
}
fn rat_mul(a: &Rational, b: &Rational) -> Rational {
    Rational(&a.0 * &b.0)
}
fn rat_div(a: &Rational, b: &Rational) -> Rational {
    assert!(!b.is_zero(), "rational division by zero");
    Rational(&a.0 / &b.0)
}

forward_binop!(Rational, Add, add, rat_add);
forward_binop!(Rational, Sub, sub, rat_sub);
forward_binop!(Rational, Mul, mul, rat_mul);
forward_binop!(Rational, Div, div, rat_div);

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

/// Gaussian rational `re + im·i`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GaussianRational {
    pub re: Rational,
    pub im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn real(re: Rational) -> Self {
        GaussianRational { re, im: Rational::zero() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::real(Rational::from_int(n))
    }

    /// `num/den`, panicking on a zero denominator; for literals in code and tests.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::real(Rational::new(num, den).expect("nonzero denominator"))
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn i() -> Self {
        GaussianRational { re: Rational::zero(), im: Rational::one() }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational { re: self.re.clone(), im: -&self.im }
    }

    /// `re² + im²`.
    pub fn norm(&self) -> Rational {
        &(&self.re * &self.re) + &(&self.im * &self.im)
    }

    pub fn inverse(&self) -> Result<Self, ScalarError> {
        gauss_inverse(self)
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale(&self, r: &Rational) -> Self {
        GaussianRational { re: &self.re * r, im: &self.im * r }
    }
}

pub fn gauss_inverse(x: &GaussianRational) -> Result<GaussianRational, ScalarError> {
    let n = x.norm();
    if n.is_zero() {
        return Err(ScalarError::DivisionByZero);
    }
    Ok(GaussianRational { re: &x.re / &n, im: -(&x.im / &n) })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// One field operation in `Q(i)`.
pub fn gauss_arith(op: ArithOp, x: &GaussianRational, y: &GaussianRational) -> Result<GaussianRational, ScalarError> {
    Ok(match op {
        ArithOp::Add => x + y,
        ArithOp::Sub => x - y,
        ArithOp::Mul => x * y,
        ArithOp::Div => x.checked_div(y)?,
    })
}

fn g_add(a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
    GaussianRational { re: &a.re + &b.re, im: &a.im + &b.im }
}
fn g_sub(a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
    GaussianRational { re: &a.re - &b.re, im: &a.im - &b.im }
}
fn g_mul(a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
    if a.im.is_zero() && b.im.is_zero() {
        return GaussianRational::real(&a.re * &b.re);
    }
    GaussianRational {
        re: &(&a.re * &b.re) - &(&a.im * &b.im),
        im: &(&a.re * &b.im) + &(&a.im * &b.re),
    }
}
fn g_div(a: &GaussianRational, b: &GaussianRational) -> GaussianRational {
    a.checked_div(b).expect("gaussian division by zero")
}

forward_binop!(GaussianRational, Add, add, g_add);
forward_binop!(GaussianRational, Sub, sub, g_sub);
forward_binop!(GaussianRational, Mul, mul, g_mul);
forward_binop!(GaussianRational, Div, div, g_div);

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        *self = g_add(self, rhs);
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        *self = g_sub(self, rhs);
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -self.re, im: -self.im }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational { re: -&self.re, im: -&self.im }
    }
}

impl From<i64> for GaussianRational {
    fn from(n: i64) -> Self {
        GaussianRational::from_int(n)
    }
}

impl From<Rational> for GaussianRational {
    fn from(r: Rational) -> Self {
        GaussianRational::real(r)
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.signum() < 0 {
            write!(f, "{}-{}i", self.re, self.im.abs())
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

struct LiteralCursor<'a> {
    input: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> LiteralCursor<'a> {
    fn err(&self, reason: &'static str) -> ScalarError {
        ScalarError::Parse { input: self.input.to_string(), reason }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn digits(&mut self) -> Result<BigInt, ScalarError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected digits"));
        }
        Ok(self.input[start..self.pos].parse().expect("ascii digits"))
    }

    /// Unsigned `digits ["/" digits]`.
    fn unsigned_rational(&mut self) -> Result<Rational, ScalarError> {
        let num = self.digits()?;
        if self.peek() == Some(b'/') {
            self.pos += 1;
            let den = self.digits()?;
            if den.is_zero() {
                return Err(self.err("zero denominator"));
            }
            return Rational::new(num, den);
        }
        Ok(Rational::from_int(num))
    }
}

impl FromStr for Rational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = LiteralCursor { input: s, bytes: s.as_bytes(), pos: 0 };
        let neg = cur.peek() == Some(b'-');
        if neg {
            cur.pos += 1;
        }
        let r = cur.unsigned_rational()?;
        if cur.pos != s.len() {
            return Err(cur.err("trailing characters"));
        }
        Ok(if neg { -r } else { r })
    }
}

impl FromStr for GaussianRational {
    type Err = ScalarError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut cur = LiteralCursor { input: s, bytes: s.as_bytes(), pos: 0 };
        let neg = cur.peek() == Some(b'-');
        if neg {
            cur.pos += 1;
        }
        let mut first = cur.unsigned_rational()?;
        if neg {
            first = -first;
        }
        match cur.peek() {
            None => Ok(GaussianRational::real(first)),
            Some(b'i') if cur.pos + 1 == s.len() => Ok(GaussianRational::new(Rational::zero(), first)),
            Some(sign @ (b'+' | b'-')) => {
                cur.pos += 1;
                let mut im = cur.unsigned_rational()?;
                if cur.peek() != Some(b'i') || cur.pos + 1 != s.len() {
                    return Err(cur.err("imaginary part must end with a single 'i'"));
                }
                if sign == b'-' {
                    im = -im;
                }
                Ok(GaussianRational::new(first, im))
            }
            Some(_) => Err(cur.err("unexpected character")),
        }
    }
}

/// Coefficient-field mode for linear combinations and irreducibility tests.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FieldMode {
    /// Rationals.
    Q,
    /// Gaussian rationals.
    QI,
    /// Rational scalars; squares and irreducibility decided as over the reals.
    QAsR,
    /// Gaussian-rational scalars; squares and irreducibility decided as over the complexes.
    QIAsC,
}

impl FieldMode {
    pub const ALL: [FieldMode; 4] = [FieldMode::Q, FieldMode::QI, FieldMode::QAsR, FieldMode::QIAsC];

    /// Whether linear-combination coefficients range over `Q(i)` rather than `Q`.
    pub fn complex_scalars(self) -> bool {
        matches!(self, FieldMode::QI | FieldMode::QIAsC)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FieldMode::Q => "Q",
            FieldMode::QI => "QI",
            FieldMode::QAsR => "Q_AS_R",
            FieldMode::QIAsC => "QI_AS_C",
        }
    }
}

impl fmt::Display for FieldMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FieldMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "Q" => Ok(FieldMode::Q),
            "QI" => Ok(FieldMode::QI),
            "Q_AS_R" => Ok(FieldMode::QAsR),
            "QI_AS_C" => Ok(FieldMode::QIAsC),
            other => Err(format!("unknown field mode {other:?} (expected Q, QI, Q_AS_R or QI_AS_C)")),
        }
    }
}

/// Outcome of [`square_test`] when a root exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SquareRoot {
    /// A concrete root `y` with `y² = x`.
    Root(GaussianRational),
    /// A root exists in the emulated closed field but is not representable in `Q(i)`.
    Exists,
}

/// Decides whether `x` is a square under `mode`.
pub fn square_test(x: &GaussianRational, mode: FieldMode) -> Result<Option<SquareRoot>, ScalarError> {
    match mode {
        FieldMode::Q | FieldMode::QAsR if !x.is_real() => Err(ScalarError::NotReal(mode)),
        FieldMode::Q => Ok(x.re.sqrt().map(|r| SquareRoot::Root(r.into()))),
        FieldMode::QAsR => Ok(match x.re.sqrt() {
            Some(r) => Some(SquareRoot::Root(r.into())),
            None if x.re.signum() > 0 => Some(SquareRoot::Exists),
            None => None,
        }),
        FieldMode::QI => Ok(gaussian_sqrt(x).map(SquareRoot::Root)),
        FieldMode::QIAsC => Ok(Some(gaussian_sqrt(x).map_or(SquareRoot::Exists, SquareRoot::Root))),
    }
}

/// Square root in `Q(i)`: with `r = |x|`, a root is `u + v·i` where
/// `u² = (re + r)/2`, `v² = (r - re)/2` and `2uv = im`.
pub fn gaussian_sqrt(x: &GaussianRational) -> Option<GaussianRational> {
    if x.is_zero() {
        return Some(GaussianRational::zero());
    }
    let r = x.norm().sqrt()?;
    let two = Rational::from_int(2);
    let u = ((&x.re + &r) / &two).sqrt()?;
    let mut v = ((&r - &x.re) / &two).sqrt()?;
    if x.im.signum() < 0 {
        v = -v;
    }
    let y = GaussianRational::new(u, v);
    debug_assert_eq!(&(&y * &y), x);
    Some(y)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(rat_normalize(2, 4).unwrap().to_string(), "1/2");
        assert_eq!(rat_normalize(3, -6).unwrap().to_string(), "-1/2");
        let z = rat_normalize(0, 5).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.denom(), &BigInt::from(1));
        assert_eq!(rat_normalize(1, 0), Err(ScalarError::ZeroDenominator));
    }

    #[test]
    fn arithmetic_examples() {
        let p = gauss_arith(ArithOp::Mul, &g("1+1i"), &g("1-1i")).unwrap();
        assert_eq!(p, g("2"));
        assert_eq!(gauss_arith(ArithOp::Div, &g("1"), &g("1i")).unwrap(), g("-1i"));
        assert_eq!(gauss_arith(ArithOp::Add, &g("1/2"), &g("1/3i")).unwrap(), g("1/2+1/3i"));
        assert_eq!(gauss_arith(ArithOp::Div, &g("1"), &g("0")), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(gauss_inverse(&g("1i")).unwrap(), g("-1i"));
        assert_eq!(gauss_inverse(&g("3")).unwrap(), g("1/3"));
        assert_eq!(gauss_inverse(&g("1+1i")).unwrap(), g("1/2-1/2i"));
        assert!(gauss_inverse(&g("0")).is_err());
    }

    #[test]
    fn square_examples() {
        assert_eq!(square_test(&g("4"), FieldMode::Q).unwrap(), Some(SquareRoot::Root(g("2"))));
        assert_eq!(square_test(&g("2"), FieldMode::Q).unwrap(), None);
        assert_eq!(square_test(&g("2i"), FieldMode::QI).unwrap(), Some(SquareRoot::Root(g("1+1i"))));
        assert_eq!(square_test(&g("2"), FieldMode::QAsR).unwrap(), Some(SquareRoot::Exists));
        assert_eq!(square_test(&g("-2"), FieldMode::QAsR).unwrap(), None);
        assert_eq!(square_test(&g("-4"), FieldMode::QI).unwrap(), Some(SquareRoot::Root(g("2i"))));
        assert_eq!(square_test(&g("2"), FieldMode::QIAsC).unwrap(), Some(SquareRoot::Exists));
        assert!(square_test(&g("1i"), FieldMode::Q).is_err());
    }

    #[test]
    fn literal_grammar() {
        for ok in ["0", "-1/2", "3+1/2i", "-1i", "1/2i", "-3/4-5/6i", "12345678901234567890"] {
            let v = g(ok);
            assert_eq!(v.to_string().parse::<GaussianRational>().unwrap(), v, "{ok}");
        }
        assert_eq!(g("-1i").to_string(), "-1i");
        assert_eq!(g("3-1/2i").to_string(), "3-1/2i");
        assert_eq!(g("2/4").to_string(), "1/2");
        for bad in ["", "1//2", "i", "+1", "1/0", "1+i", "1 ", "1.5", "1+-2i", "2ii", "1/2/3", "--1", "1+2"] {
            assert!(bad.parse::<GaussianRational>().is_err(), "{bad:?} should be rejected");
        }
    }

    #[test]
    fn field_mode_names_round_trip() {
        for m in FieldMode::ALL {
            assert_eq!(m.as_str().parse::<FieldMode>().unwrap(), m);
        }
        assert!("R".parse::<FieldMode>().is_err());
    }
}
