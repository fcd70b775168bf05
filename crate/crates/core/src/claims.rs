//! Executable claim catalog and deterministic report runner.
//!
//! Each claim expands into one or more check lines. A line carries the mode
//! it was evaluated under (or none for exact identities), the pinned
//! expectation, the computed outcome, and the witness or certificate that
//! justifies it. Witnesses are re-verified by the engine before they are
//! rendered.

use std::collections::BTreeSet;
use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{self, classify, AlgebraSpec, Bracket, Caps, Classification, Division, Witness};
use crate::families::{
    d_family, d_family_second, g_family, make_antidiag, make_diag, make_dirac, make_dirac_with, make_j_family,
    make_ladder, make_pauli, make_sign_family, quaternion_basis, rank_family_patterns, DiracConvention,
    SignPattern,
};
use crate::linalg;
use crate::matrix::{determinant, Matrix, MatrixError};
use crate::scalar::{FieldMode, GaussianRational, Rational};

pub const SUITE_VERSION: &str = "1.0.0";

/// Numbered equations with no executable content of their own.
pub const OUT_OF_SCOPE: &[&str] = &[
    "structure constants f, F, S of the graded brackets (23)-(25) are abstract; only representation-level closures are checked",
];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Outcome {
    Holds,
    Refuted,
    Unknown,
    NotInterpretable,
}

impl Outcome {
    pub const ALL: [Outcome; 4] = [Outcome::Holds, Outcome::Refuted, Outcome::Unknown, Outcome::NotInterpretable];

    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Holds => "HOLDS",
            Outcome::Refuted => "REFUTED",
            Outcome::Unknown => "UNKNOWN",
            Outcome::NotInterpretable => "NOT_INTERPRETABLE",
        }
    }
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of one check before it is stamped with ids and timing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Evaluation {
    pub outcome: Outcome,
    pub witness: Option<String>,
    pub certificate: Option<String>,
    pub detail: Option<String>,
}

impl Evaluation {
    fn holds() -> Self {
        Evaluation { outcome: Outcome::Holds, witness: None, certificate: None, detail: None }
    }

    fn refuted(witness: impl Into<String>) -> Self {
        Evaluation { outcome: Outcome::Refuted, witness: Some(witness.into()), certificate: None, detail: None }
    }

    fn unknown(reason: impl Into<String>) -> Self {
        Evaluation { outcome: Outcome::Unknown, witness: None, certificate: None, detail: Some(reason.into()) }
    }

    fn with_certificate(mut self, c: impl Into<String>) -> Self {
        self.certificate = Some(c.into());
        self
    }

    fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }
}

type CheckFn = Box<dyn Fn(&Caps) -> Evaluation + Send + Sync>;

pub struct Check {
    pub label: String,
    pub mode: Option<FieldMode>,
    pub expected: Outcome,
    eval: CheckFn,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check").field("label", &self.label).field("mode", &self.mode).field("expected", &self.expected).finish()
    }
}

impl Check {
    fn new(label: impl Into<String>, mode: Option<FieldMode>, expected: Outcome, eval: impl Fn(&Caps) -> Evaluation + Send + Sync + 'static) -> Self {
        Check { label: label.into(), mode, expected, eval: Box::new(eval) }
    }

    fn exact(label: impl Into<String>, expected: Outcome, eval: impl Fn(&Caps) -> Evaluation + Send + Sync + 'static) -> Self {
        Self::new(label, None, expected, eval)
    }

    pub fn evaluate(&self, caps: &Caps) -> Evaluation {
        (self.eval)(caps)
    }
}

#[derive(Debug)]
pub struct Claim {
    pub id: &'static str,
    /// Short locator, e.g. `Eq. (13)`.
    pub citation: &'static str,
    pub quote: &'static str,
    pub description: &'static str,
    /// Numbered equations this claim covers.
    pub equations: &'static [u32],
    pub checks: Vec<Check>,
}

impl Claim {
    pub fn paper_ref(&self) -> String {
        format!("{}, \"{}\"", self.citation, self.quote)
    }

    pub fn modes(&self) -> BTreeSet<FieldMode> {
        self.checks.iter().filter_map(|c| c.mode).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub claim_id: String,
    pub paper_ref: String,
    pub citation: String,
    pub label: String,
    pub mode: Option<FieldMode>,
    pub expected: Outcome,
    pub outcome: Outcome,
    pub witness: Option<String>,
    pub certificate: Option<String>,
    pub detail: Option<String>,
    pub elapsed: Duration,
}

impl Verdict {
    pub fn mode_str(&self) -> &'static str {
        self.mode.map_or("exact", FieldMode::as_str)
    }

    pub fn matches(&self) -> bool {
        self.expected == self.outcome
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Summary {
    pub checks: usize,
    pub holds: usize,
    pub refuted: usize,
    pub unknown: usize,
    pub not_interpretable: usize,
    pub mismatches: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub version: String,
    pub caps: Caps,
    pub verdicts: Vec<Verdict>,
    pub summary: Summary,
}

impl Report {
    fn new(caps: Caps, verdicts: Vec<Verdict>) -> Self {
        let mut summary = Summary { checks: verdicts.len(), ..Summary::default() };
        for v in &verdicts {
            match v.outcome {
                Outcome::Holds => summary.holds += 1,
                Outcome::Refuted => summary.refuted += 1,
                Outcome::Unknown => summary.unknown += 1,
                Outcome::NotInterpretable => summary.not_interpretable += 1,
            }
            if !v.matches() {
                summary.mismatches += 1;
            }
        }
        Report { version: SUITE_VERSION.to_string(), caps, verdicts, summary }
    }

    pub fn all_match(&self) -> bool {
        self.summary.mismatches == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClaimError {
    #[error("unknown claim id {0:?}")]
    UnknownId(String),
}

fn run_checks(claim: &Claim, caps: &Caps, modes: Option<&BTreeSet<FieldMode>>) -> Vec<Verdict> {
    claim
        .checks
        .iter()
        .filter(|c| match (c.mode, modes) {
            (Some(m), Some(allowed)) => allowed.contains(&m),
            _ => true,
        })
        .map(|c| {
            let start = Instant::now();
            let e = c.evaluate(caps);
            Verdict {
                claim_id: claim.id.to_string(),
                paper_ref: claim.paper_ref(),
                citation: claim.citation.to_string(),
                label: c.label.clone(),
                mode: c.mode,
                expected: c.expected,
                outcome: e.outcome,
                witness: e.witness,
                certificate: e.certificate,
                detail: e.detail,
                elapsed: start.elapsed(),
            }
        })
        .collect()
}

/// Runs every check line of one claim.
pub fn run_claim(id: &str, caps: &Caps) -> Result<Vec<Verdict>, ClaimError> {
    let claims = builtin_claims();
    let claim = claims.iter().find(|c| c.id == id).ok_or_else(|| ClaimError::UnknownId(id.to_string()))?;
    Ok(run_checks(claim, caps, None))
}

/// Runs the selected claims concurrently; verdicts come back in id order.
pub fn run_all(filter: Option<&BTreeSet<String>>, modes: Option<&BTreeSet<FieldMode>>, caps: &Caps) -> Result<Report, ClaimError> {
    let claims = builtin_claims();
    if let Some(ids) = filter {
        if let Some(bad) = ids.iter().find(|id| !claims.iter().any(|c| c.id == id.as_str())) {
            return Err(ClaimError::UnknownId(bad.clone()));
        }
    }
    let selected: Vec<&Claim> = claims.iter().filter(|c| filter.is_none_or(|ids| ids.contains(c.id))).collect();
    let per_claim: Vec<Vec<Verdict>> = selected.par_iter().map(|c| run_checks(c, caps, modes)).collect();
    Ok(Report::new(*caps, per_claim.into_iter().flatten().collect()))
}

fn int(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

fn frac(p: i64, q: i64) -> GaussianRational {
    GaussianRational::frac(p, q)
}

/// Compares named computed/stated pairs; the first mismatch becomes the witness.
fn identities(pairs: Vec<(&str, Matrix, Matrix)>) -> Evaluation {
    for (name, computed, stated) in pairs {
        if computed != stated {
            return Evaluation::refuted(format!("{name}: computed {computed}, stated {stated}"));
        }
    }
    Evaluation::holds()
}

fn spec(name: &str, gens: Vec<Matrix>, mode: FieldMode) -> AlgebraSpec {
    AlgebraSpec::mul(name, gens, mode).expect("built-in generators share a rank")
}

fn classification(name: &str, gens: Vec<Matrix>, mode: FieldMode, caps: &Caps) -> Result<Classification, Evaluation> {
    match classify(&spec(name, gens, mode), caps) {
        Ok(c) if c.closed => Ok(c),
        Ok(c) => Err(Evaluation::unknown(format!(
            "closure cap exceeded at dimension {}",
            c.basis.dim()
        ))),
        Err(e) => Err(Evaluation::unknown(e.to_string())),
    }
}

/// "The algebra generated by `gens` is a field" under `mode`.
fn field_claim(name: &str, gens: Vec<Matrix>, mode: FieldMode, caps: &Caps) -> Evaluation {
    let c = match classification(name, gens, mode, caps) {
        Ok(c) => c,
        Err(e) => return e,
    };
    let detail = format!("{}, closure dim {}", c.label(), c.dim());
    if c.field {
        let Division::Yes(cert) = &c.division else { unreachable!("field implies a certificate") };
        return Evaluation::holds().with_certificate(cert.to_string()).with_detail(detail);
    }
    if let Some(w) = c.zero_divisor_witness() {
        return Evaluation::refuted(w.to_string()).with_detail(detail);
    }
    if let Some(w) = &c.noncommuting {
        return Evaluation::refuted(w.to_string()).with_detail(detail);
    }
    Evaluation::unknown(match &c.division {
        Division::Unknown(r) => r.clone(),
        _ => "undecided".into(),
    })
    .with_detail(detail)
}

/// "The algebra generated by `gens` is a division ring" under `mode`.
fn division_claim(name: &str, gens: Vec<Matrix>, mode: FieldMode, caps: &Caps) -> Evaluation {
    let c = match classification(name, gens, mode, caps) {
        Ok(c) => c,
        Err(e) => return e,
    };
    let detail = format!("{}, closure dim {}", c.label(), c.dim());
    match &c.division {
        Division::Yes(cert) => Evaluation::holds().with_certificate(cert.to_string()).with_detail(detail),
        Division::No(w) => Evaluation::refuted(w.to_string()).with_detail(detail),
        Division::Unknown(r) => Evaluation::unknown(r.clone()).with_detail(detail),
    }
}

fn closure_dim(gens: Vec<Matrix>, mode: FieldMode, bracket: Bracket, caps: &Caps) -> Result<algebra::Basis, String> {
    let spec = AlgebraSpec::new("closure", gens, mode, bracket).map_err(|e| e.to_string())?;
    algebra::close_under(&spec, caps.max_dim, caps.max_rounds).map_err(|e| e.to_string())
}

fn commutes_pairwise(named: &[(&str, Matrix)]) -> Evaluation {
    for (i, (na, a)) in named.iter().enumerate() {
        for (nb, b) in &named[i + 1..] {
            if a * b != b * a {
                return Evaluation::refuted(format!("{}; {na}·{nb} ≠ {nb}·{na}", Witness::Noncommuting { x: a.clone(), y: b.clone() }));
            }
        }
    }
    Evaluation::holds()
}

/// `Σ c_k·label_k = 0` for the first kernel vector of the generator coordinates.
fn dependency(named: &[(String, Matrix)], mode: FieldMode) -> Option<String> {
    let cols: Vec<linalg::Vector> = named.iter().map(|(_, m)| linalg::coords(m, mode)).collect();
    let len = cols.first()?.len();
    let rows: Vec<linalg::Vector> = (0..len).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
    let v = linalg::kernel(&rows, named.len()).into_iter().next()?;
    let n = named[0].1.rank();
    let mut acc = Matrix::zero(n);
    let mut terms = Vec::new();
    for (c, (label, m)) in v.iter().zip(named) {
        if !c.is_zero() {
            acc = &acc + &m.scale(c);
            terms.push(format!("({c})·{label}"));
        }
    }
    acc.is_zero().then(|| format!("{} = 0", terms.join(" + ")))
}

/// Sign of `M²` relative to the identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SquareSign {
    Plus,
    Minus,
    Indefinite,
}

impl fmt::Display for SquareSign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SquareSign::Plus => "+",
            SquareSign::Minus => "-",
            SquareSign::Indefinite => "INDEFINITE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpacetimeForm {
    pub matrix: Matrix,
    pub lambda: Option<GaussianRational>,
    pub signs: Vec<SquareSign>,
}

/// `Σ (q_u·M_u)² = Σ q_u²·M_u²`, with the scalar value when the sum is scalar.
pub fn spacetime_form(assignment: &[(Matrix, Rational)]) -> Result<SpacetimeForm, MatrixError> {
    let (first, _) = assignment.first().ok_or(MatrixError::Empty)?;
    let n = first.rank();
    let id = Matrix::identity(n);
    let mut acc = Matrix::zero(n);
    let mut signs = Vec::with_capacity(assignment.len());
    for (m, q) in assignment {
        let sq = m.try_mul(m)?;
        acc = acc.try_add(&sq.scale_rational(&(q * q)))?;
        signs.push(if sq == id {
            SquareSign::Plus
        } else if sq == -&id {
            SquareSign::Minus
        } else {
            SquareSign::Indefinite
        });
    }
    let lambda = acc.scalar_value();
    Ok(SpacetimeForm { matrix: acc, lambda, signs })
}

/// The displayed assignment `(Ix)² + (By)² + (Cz)² + (A·c·t)²`.
pub fn paper_spacetime_assignment(x: &Rational, y: &Rational, z: &Rational, t: &Rational, c: &Rational) -> Vec<(Matrix, Rational)> {
    let q = quaternion_basis();
    vec![(q.i, x.clone()), (q.b, y.clone()), (q.c, z.clone()), (q.a, c * t)]
}

/// Random Gaussian rational with small numerator and denominator.
pub fn random_gaussian(rng: &mut impl Rng) -> GaussianRational {
    let re = GaussianRational::frac(rng.gen_range(-9..=9), rng.gen_range(1..=4));
    let im = if rng.gen_bool(0.3) { GaussianRational::frac(rng.gen_range(-9..=9), rng.gen_range(1..=4)) } else { GaussianRational::zero() };
    &re + &(&im * &GaussianRational::i())
}

fn random_nonzero(rng: &mut impl Rng) -> GaussianRational {
    loop {
        let x = random_gaussian(rng);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Product-shape laws for diagonal `a, a2` and anti-diagonal `b, b2` entries of one length.
pub fn check_product_shapes(a: &[GaussianRational], a2: &[GaussianRational], b: &[GaussianRational], b2: &[GaussianRational]) -> Result<(), String> {
    let n = a.len();
    let rev = |i: usize| n - 1 - i;
    let (da, da2, db, db2) = (make_diag(a), make_diag(a2), make_antidiag(b), make_antidiag(b2));
    let expect: [(&str, Matrix, Matrix); 5] = [
        ("AA'", &da * &da2, make_diag(&(0..n).map(|i| &a[i] * &a2[i]).collect::<Vec<_>>())),
        ("AB", &da * &db, make_antidiag(&(0..n).map(|i| &a[i] * &b[i]).collect::<Vec<_>>())),
        ("BA", &db * &da, make_antidiag(&(0..n).map(|i| &b[i] * &a[rev(i)]).collect::<Vec<_>>())),
        ("BB'", &db * &db2, make_diag(&(0..n).map(|i| &b[i] * &b2[rev(i)]).collect::<Vec<_>>())),
        ("B'B", &db2 * &db, make_diag(&(0..n).map(|i| &b[rev(i)] * &b2[i]).collect::<Vec<_>>())),
    ];
    for (name, computed, stated) in expect {
        if computed != stated {
            return Err(format!("{name} for n={n}: computed {computed}, formula {stated}"));
        }
    }
    Ok(())
}

/// Whether `diag(a)` commutes with `antidiag(b)` exactly when `a` is a palindrome
/// (for all-nonzero `b`; the forward direction holds for every `b`).
pub fn check_palindrome_law(a: &[GaussianRational], b: &[GaussianRational]) -> Result<(), String> {
    let n = a.len();
    let palindromic = (0..n).all(|i| a[i] == a[n - 1 - i]);
    let (da, db) = (make_diag(a), make_antidiag(b));
    let commute = &da * &db == &db * &da;
    let b_nonzero = b.iter().all(|x| !x.is_zero());
    if palindromic && !commute {
        return Err(format!("palindromic {da} fails to commute with {db}"));
    }
    if b_nonzero && commute && !palindromic {
        return Err(format!("non-palindromic {da} commutes with {db}"));
    }
    Ok(())
}

/// `BB' = B'B` iff `b_i·b'_{n+1-i} = b_{n+1-i}·b'_i` for all `i`.
pub fn check_antidiag_commutation(b: &[GaussianRational], b2: &[GaussianRational]) -> Result<(), String> {
    let n = b.len();
    let cond = (0..n).all(|i| &b[i] * &b2[n - 1 - i] == &b[n - 1 - i] * &b2[i]);
    let (db, db2) = (make_antidiag(b), make_antidiag(b2));
    let commute = &db * &db2 == &db2 * &db;
    (cond == commute).then_some(()).ok_or_else(|| format!("condition {cond} but commutation {commute} for {db}, {db2}"))
}

const SHAPE_SEED: u64 = 0x0005_eed1;

fn shape_trials(trials: usize, law: impl Fn(&mut ChaCha8Rng, usize) -> Result<(), String>) -> Evaluation {
    let mut rng = ChaCha8Rng::seed_from_u64(SHAPE_SEED);
    for t in 0..trials {
        let n = 2 + t % 5;
        if let Err(w) = law(&mut rng, n) {
            return Evaluation::refuted(w);
        }
    }
    Evaluation::holds().with_detail(format!("{trials} seeded trials, n = 2..6"))
}

fn random_vec(rng: &mut ChaCha8Rng, n: usize) -> Vec<GaussianRational> {
    (0..n).map(|_| random_gaussian(rng)).collect()
}

/// Random diagonal entries, palindromic with probability one half.
fn random_diag_entries(rng: &mut ChaCha8Rng, n: usize) -> Vec<GaussianRational> {
    let mut a = random_vec(rng, n);
    if rng.gen_bool(0.5) {
        for i in 0..n / 2 {
            a[n - 1 - i] = a[i].clone();
        }
    }
    a
}

/// Deterministic `(h, k, d, b)` grid with 100 entries.
pub fn j_family_grid() -> Vec<[GaussianRational; 4]> {
    let hs = [int(0), int(1), int(-2), frac(1, 2), int(3)];
    let ks = [int(0), int(-1), int(2), frac(-3, 2)];
    let dbs = [(int(1), int(1)), (int(3), int(1)), (int(0), int(2)), (frac(1, 3), int(-1)), (int(-2), frac(1, 2))];
    let mut out = Vec::with_capacity(100);
    for h in &hs {
        for k in &ks {
            for (d, b) in &dbs {
                out.push([h.clone(), k.clone(), d.clone(), b.clone()]);
            }
        }
    }
    out
}

fn rank_named(n: usize) -> Vec<(String, Matrix)> {
    let patterns = rank_family_patterns(n).expect("built-in rank");
    let fmt = |p: &Vec<i64>| p.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(",");
    let main = patterns.iter().map(|p| (format!("main({})", fmt(p)), make_sign_family(n, &SignPattern::main(p)).unwrap()));
    let sec = patterns.iter().map(|p| (format!("sec({})", fmt(p)), make_sign_family(n, &SignPattern::secondary(p)).unwrap()));
    main.chain(sec).collect()
}

/// Pinned span dimensions of the rank-5..8 families.
const RANK_SPAN_DIM: [(usize, usize); 4] = [(5, 5), (6, 6), (7, 11), (8, 10)];

const FIELD_MODES: [FieldMode; 2] = [FieldMode::Q, FieldMode::QIAsC];

use Outcome::{Holds, NotInterpretable, Refuted};

/// The full catalog, ordered by id.
pub fn builtin_claims() -> Vec<Claim> {
    let q = quaternion_basis();
    let (i2, c, b, a) = (q.i.clone(), q.c.clone(), q.b.clone(), q.a.clone());
    let mut claims = Vec::new();

    claims.push(Claim {
        id: "CL-01",
        citation: "Eq. (13)",
        quote: "CB=A, BC=-A",
        description: "quaternion multiplication table",
        equations: &[13],
        checks: vec![{
            let (c, b, a) = (c.clone(), b.clone(), a.clone());
            Check::exact("CB=A, BC=-A, AC=B, CA=-B, AB=C, BA=-C", Holds, move |_| {
                identities(vec![
                    ("CB", &c * &b, a.clone()),
                    ("BC", &b * &c, -&a),
                    ("AC", &a * &c, b.clone()),
                    ("CA", &c * &a, -&b),
                    ("AB", &a * &b, c.clone()),
                    ("BA", &b * &a, -&c),
                ])
            })
        }],
    });

    claims.push(Claim {
        id: "CL-02",
        citation: "prose",
        quote: "C^2 = -I",
        description: "squares of the basis units and k = ij",
        equations: &[],
        checks: vec![{
            let (i2, c, b, a) = (i2.clone(), c.clone(), b.clone(), a.clone());
            Check::exact("C^2=-I, B^2=I, A^2=I, A=CB, BC=-A", Holds, move |_| {
                identities(vec![
                    ("C^2", &c * &c, -&i2),
                    ("B^2", &b * &b, i2.clone()),
                    ("A^2", &a * &a, i2.clone()),
                    ("CB", &c * &b, a.clone()),
                    ("BC", &b * &c, -&a),
                ])
            })
        }],
    });

    claims.push(Claim {
        id: "CL-03",
        citation: "Eqs. (1)-(3)",
        quote: "a main diagonal matrix becomes a secondary diagonal matrix",
        description: "squares of the rank-n sign families; the two displayed squares after (3)",
        equations: &[1, 2, 3],
        checks: vec![
            Check::exact("(1) antidiag(1,...,1)^2 = I for n=3..8", Holds, |_| {
                for n in 3..=8 {
                    let m = make_antidiag(&vec![int(1); n]);
                    if &m * &m != Matrix::identity(n) {
                        return Evaluation::refuted(format!("n={n}: {m}^2 = {}", &m * &m));
                    }
                }
                Evaluation::holds()
            }),
            Check::exact("(2) diag(-1,...,-1,1)^2 = diag(-1,1,...,1)^2 = I for n=3..8", Holds, |_| {
                for n in 3..=8 {
                    let mut lead = vec![int(-1); n];
                    lead[n - 1] = int(1);
                    let mut single = vec![int(1); n];
                    single[0] = int(-1);
                    for m in [make_diag(&lead), make_diag(&single)] {
                        if &m * &m != Matrix::identity(n) {
                            return Evaluation::refuted(format!("n={n}: {m}^2 = {}", &m * &m));
                        }
                    }
                }
                Evaluation::holds()
            }),
            Check::exact("(3) antidiag(-1,...,-1,1)^2 is diagonal with entries b_i b_(n+1-i) for n=3..8", Holds, |_| {
                for n in 3..=8 {
                    let mut bs = vec![int(-1); n];
                    bs[n - 1] = int(1);
                    let m = make_antidiag(&bs);
                    let expect = make_diag(&(0..n).map(|i| &bs[i] * &bs[n - 1 - i]).collect::<Vec<_>>());
                    if &m * &m != expect {
                        return Evaluation::refuted(format!("n={n}: {m}^2 = {}", &m * &m));
                    }
                }
                Evaluation::holds()
            }),
            Check::exact("first display: antidiag(-1,-1,1)^2 = diag(-1,1,-1) = antidiag(-1,1,1)^2", Holds, |_| {
                let m1 = make_antidiag(&[int(-1), int(-1), int(1)]);
                let m2 = make_antidiag(&[int(-1), int(1), int(1)]);
                let d = make_diag(&[int(-1), int(1), int(-1)]);
                identities(vec![("antidiag(-1,-1,1)^2", &m1 * &m1, d.clone()), ("antidiag(-1,1,1)^2", &m2 * &m2, d)])
            }),
            Check::exact("second display: antidiag(-1,-1,1)^2 = diag(-1,1,1)", Refuted, |_| {
                let m = make_antidiag(&[int(-1), int(-1), int(1)]);
                identities(vec![("antidiag(-1,-1,1)^2", &m * &m, make_diag(&[int(-1), int(1), int(1)]))])
            }),
        ],
    });

    claims.push(Claim {
        id: "CL-04",
        citation: "Eq. (4)",
        quote: "It is analogue with the elementary matrix",
        description: "sums with the unit and the elementary matrices I_22, I_21",
        equations: &[4],
        checks: vec![
            {
                let (i2, c, b, a) = (i2.clone(), c.clone(), b.clone(), a.clone());
                Check::exact("I+C, I+B, I+A = 2I_22, C+B = 2I_21", Holds, move |_| {
                    identities(vec![
                        ("I+C", &i2 + &c, Matrix::from_ints(&[&[1, -1], &[1, 1]])),
                        ("I+B", &i2 + &b, Matrix::from_ints(&[&[1, 1], &[1, 1]])),
                        ("I+A", &i2 + &a, Matrix::from_ints(&[&[0, 0], &[0, 2]])),
                        ("C+B", &c + &b, Matrix::from_ints(&[&[0, 0], &[2, 0]])),
                    ])
                })
            },
            {
                let (i2, a) = (i2.clone(), a.clone());
                Check::exact("det(I+A) = 0", Holds, move |_| {
                    let d = determinant(&(&i2 + &a));
                    if d.is_zero() {
                        Evaluation::holds()
                    } else {
                        Evaluation::refuted(format!("det(I+A) = {d}"))
                    }
                })
            },
        ],
    });

    claims.push(Claim {
        id: "CL-05",
        citation: "Eq. (5)",
        quote: "(I+C)(I+C)=2C",
        description: "power identities of I+C, I+B, I+A",
        equations: &[5],
        checks: vec![{
            let (i2, c, b, a) = (i2.clone(), c.clone(), b.clone(), a.clone());
            Check::exact("(I+C)^2=2C, D^n=2^(n-1)D for D in {I+B, I+A} n=2..6, (I+C)^3=2(C-I), (I+C)^4=-4I", Holds, move |_| {
                let ic = &i2 + &c;
                let mut pairs = vec![
                    ("(I+C)^2", ic.pow(2), c.scale(&int(2))),
                    ("(I+C)^3", ic.pow(3), (&c - &i2).scale(&int(2))),
                    ("(I+C)^4", ic.pow(4), i2.scale(&int(-4))),
                ];
                for (name, d) in [("(I+B)^n", &i2 + &b), ("(I+A)^n", &i2 + &a)] {
                    for n in 2..=6u32 {
                        pairs.push((name, d.pow(n), d.scale(&int(1 << (n - 1)))));
                    }
                }
                identities(pairs)
            })
        }],
    });

    claims.push(Claim {
        id: "CL-06",
        citation: "Eqs. (6)-(9)",
        quote: "the creation operator of particle number",
        description: "ladder operators as combinations of I, C, B, A",
        equations: &[6, 7, 8, 9],
        checks: {
            let l = make_ladder();
            let half = frac(1, 2);
            let (i2, c, b, a) = (i2.clone(), c.clone(), b.clone(), a.clone());
            let l1 = l.clone();
            let (c1, b1) = (c.clone(), b.clone());
            let h1 = half.clone();
            let l2 = l.clone();
            let (c2, b2) = (c.clone(), b.clone());
            let h2 = half.clone();
            let l3 = l.clone();
            let (i3, a3) = (i2.clone(), a.clone());
            let h3 = half.clone();
            let l4 = l;
            let (i4, b4) = (i2, b);
            vec![
                Check::exact("(6) a+ = [[0,0],[1,0]] = (C+B)/2", Holds, move |_| {
                    identities(vec![
                        ("a+", l1.creation.clone(), Matrix::from_ints(&[&[0, 0], &[1, 0]])),
                        ("(C+B)/2", (&c1 + &b1).scale(&h1), l1.creation.clone()),
                    ])
                }),
                Check::exact("(7) a = [[0,1],[0,0]] = (B-C)/2", Holds, move |_| {
                    identities(vec![
                        ("a", l2.annihilation.clone(), Matrix::from_ints(&[&[0, 1], &[0, 0]])),
                        ("(B-C)/2", (&b2 - &c2).scale(&h2), l2.annihilation.clone()),
                    ])
                }),
                Check::exact("(8) a+a = (I+A)/2, aa+ = (I-A)/2", Holds, move |_| {
                    identities(vec![
                        ("a+a", &l3.creation * &l3.annihilation, (&i3 + &a3).scale(&h3)),
                        ("aa+", &l3.annihilation * &l3.creation, (&i3 - &a3).scale(&h3)),
                        ("N", l3.number.clone(), Matrix::from_ints(&[&[0, 0], &[0, 1]])),
                    ])
                }),
                Check::exact("(9) a+a + aa+ = I, a+ + a = B", Holds, move |_| {
                    identities(vec![
                        ("a+a + aa+", &(&l4.creation * &l4.annihilation) + &(&l4.annihilation * &l4.creation), i4.clone()),
                        ("a+ + a", &l4.creation + &l4.annihilation, b4.clone()),
                    ])
                }),
            ]
        },
    });

    claims.push(Claim {
        id: "CL-07",
        citation: "Eqs. (10)-(12)",
        quote: "Their products are still main diagonal",
        description: "diagonal/secondary-diagonal product shapes and the palindromic commutation condition",
        equations: &[10, 11, 12],
        checks: vec![
            Check::exact("AA', AB, BA, BB', B'B product shapes, n=2..6", Holds, |_| {
                shape_trials(60, |rng, n| {
                    let (a, a2, b, b2) = (random_vec(rng, n), random_vec(rng, n), random_vec(rng, n), random_vec(rng, n));
                    check_product_shapes(&a, &a2, &b, &b2)
                })
            }),
            Check::exact("AB=BA iff a_i = a_(n+1-i) (all b_i nonzero)", Holds, |_| {
                shape_trials(60, |rng, n| {
                    let a = random_diag_entries(rng, n);
                    let b: Vec<_> = (0..n).map(|_| random_nonzero(rng)).collect();
                    check_palindrome_law(&a, &b)
                })
            }),
            Check::exact("BB'=B'B iff b_i b'_(n+1-i) = b_(n+1-i) b'_i", Holds, |_| {
                shape_trials(60, |rng, n| {
                    let b = random_vec(rng, n);
                    let b2 = if rng.gen_bool(0.5) { b.iter().map(|x| x * &int(3)).collect() } else { random_vec(rng, n) };
                    check_antidiag_commutation(&b, &b2)
                })
            }),
        ],
    });

    claims.push(Claim {
        id: "CL-08",
        citation: "Eq. (14)",
        quote: "construct three similar commutative quotient ring——field",
        description: "{aI+bC} is a field",
        equations: &[14],
        checks: {
            let mut v = vec![{
                let (i2, c) = (i2.clone(), c.clone());
                Check::exact("aI+bC display with complex a = 1+2i, b = 3-1/2i", Holds, move |_| {
                    let (av, bv) = (GaussianRational::new(Rational::from_int(1), Rational::from_int(2)), GaussianRational::new(Rational::from_int(3), Rational::new(-1, 2).unwrap()));
                    let stated = Matrix::from_rows(vec![vec![av.clone(), -&bv], vec![bv.clone(), av.clone()]]).unwrap();
                    identities(vec![("aI+bC", &i2.scale(&av) + &c.scale(&bv), stated)])
                })
            }];
            for (mode, expected) in [(FieldMode::Q, Holds), (FieldMode::QIAsC, Refuted)] {
                let gens = vec![i2.clone(), c.clone()];
                v.push(Check::new("{aI+bC} is a field", Some(mode), expected, move |caps| field_claim("aI+bC", gens.clone(), mode, caps)));
            }
            v
        },
    });

    claims.push(Claim {
        id: "CL-09",
        citation: "prose",
        quote: "all have inverse-elements",
        description: "{aI+cB} and {aI+dA} are fields",
        equations: &[],
        checks: {
            let mut v = Vec::new();
            for (name, g) in [("aI+cB", b.clone()), ("aI+dA", a.clone())] {
                for mode in FIELD_MODES {
                    let gens = vec![i2.clone(), g.clone()];
                    v.push(Check::new(format!("{{{name}}} is a field"), Some(mode), Refuted, move |caps| field_claim(name, gens.clone(), mode, caps)));
                }
            }
            v
        },
    });

    claims.push(Claim {
        id: "CL-10",
        citation: "Eq. (15)",
        quote: "here h and k are constant",
        description: "{aI+cJ} with J = [[bh+d,b],[kb,d]]: closure, commutativity, field",
        equations: &[15],
        checks: {
            let mut v = vec![Check::new("{I,J} closes at dim <= 2 and commutes for 100 (h,k,d,b)", Some(FieldMode::Q), Holds, |caps| {
                for [h, k, d, bb] in j_family_grid() {
                    let j = make_j_family(&h, &k, &d, &bb);
                    match closure_dim(vec![Matrix::identity(2), j.clone()], FieldMode::Q, Bracket::Mul, caps) {
                        Ok(basis) if basis.dim() <= 2 => {}
                        Ok(basis) => return Evaluation::refuted(format!("J={j}: closure dim {}", basis.dim())),
                        Err(e) => return Evaluation::unknown(e),
                    }
                    let prod = (&j * &j, &j * &j);
                    if prod.0 != prod.1 {
                        return Evaluation::refuted(format!("J={j}"));
                    }
                }
                Evaluation::holds()
            })];
            let instances: [(&str, [i64; 4], Outcome, Outcome); 4] = [
                ("J(1,2,3,1)", [1, 2, 3, 1], Refuted, Refuted),
                ("J(0,-1,0,1)", [0, -1, 0, 1], Holds, Refuted),
                ("J(0,2,0,1)", [0, 2, 0, 1], Holds, Outcome::Unknown),
                ("J(1,0,1,1) upper triangular", [1, 0, 1, 1], Refuted, Refuted),
            ];
            for (name, [h, k, d, bb], q_exp, c_exp) in instances {
                let j = make_j_family(&int(h), &int(k), &int(d), &int(bb));
                for (mode, expected) in [(FieldMode::Q, q_exp), (FieldMode::QIAsC, c_exp)] {
                    let gens = vec![Matrix::identity(2), j.clone()];
                    v.push(Check::new(format!("{{aI+cJ}} is a field for {name}"), Some(mode), expected, move |caps| {
                        field_claim("aI+cJ", gens.clone(), mode, caps)
                    }));
                }
            }
            v
        },
    });

    claims.push(Claim {
        id: "CL-11",
        citation: "Eq. (16)",
        quote: "D_1D_2 = D_2D_1 = D_3",
        description: "rank-3 D table, the quaternion form and its dual parts",
        equations: &[16],
        checks: {
            let [id3, d1, d2, d3] = d_family();
            let mut v = vec![
                {
                    let (d1, d2, d3) = (d1.clone(), d2.clone(), d3.clone());
                    Check::exact("D1D2=D2D1=D3, D1D3=D3D1=D2, D2D3=D3D2=D1", Holds, move |_| {
                        identities(vec![
                            ("D1D2", &d1 * &d2, d3.clone()),
                            ("D2D1", &d2 * &d1, d3.clone()),
                            ("D1D3", &d1 * &d3, d2.clone()),
                            ("D3D1", &d3 * &d1, d2.clone()),
                            ("D2D3", &d2 * &d3, d1.clone()),
                            ("D3D2", &d3 * &d2, d1.clone()),
                        ])
                    })
                },
                {
                    let named: Vec<(String, Matrix)> =
                        [("I", &id3), ("D1", &d1), ("D2", &d2), ("D3", &d3)].iter().map(|(n, m)| (n.to_string(), (*m).clone())).collect();
                    Check::new("aI+bD1+cD2+dD3 has four independent units", Some(FieldMode::Q), Refuted, move |_| {
                        match dependency(&named, FieldMode::Q) {
                            Some(w) => Evaluation::refuted(format!("LINEAR_DEPENDENCE {w}")),
                            None => Evaluation::holds(),
                        }
                    })
                },
            ];
            for (name, g) in [("aI+bD1", &d1), ("aI+cD2", &d2), ("aI+dD3", &d3)] {
                for mode in FIELD_MODES {
                    let gens = vec![id3.clone(), g.clone()];
                    v.push(Check::new(format!("{{{name}}} is a field"), Some(mode), Refuted, move |caps| field_claim(name, gens.clone(), mode, caps)));
                }
            }
            v
        },
    });

    claims.push(Claim {
        id: "CL-12",
        citation: "Eqs. (17)-(18)",
        quote: "a new hypercomplex number",
        description: "D2, D4, D5: commutativity, closure and dual-part fields",
        equations: &[17, 18],
        checks: {
            let [id3, d2, d4, d5] = d_family_second();
            let mut v = vec![
                {
                    let named = [("D2", d2.clone()), ("D4", d4.clone()), ("D5", d5.clone())];
                    Check::exact("D2, D4, D5 commute pairwise", Holds, move |_| commutes_pairwise(&named))
                },
                {
                    let gens = vec![id3.clone(), d2.clone(), d4.clone(), d5.clone()];
                    Check::new("span{I,D2,D4,D5} is closed under multiplication", Some(FieldMode::Q), Holds, move |_| {
                        let basis = algebra::span_basis(&gens, FieldMode::Q).expect("common rank");
                        match algebra::structure_constants(&basis, Bracket::Mul) {
                            Ok(_) => Evaluation::holds().with_detail(format!("span dim {}", basis.dim())),
                            Err(e) => Evaluation::refuted(e.to_string()),
                        }
                    })
                },
            ];
            for mode in FIELD_MODES {
                let parts = [("aI+bD2", d2.clone()), ("aI+cD4", d4.clone()), ("aI+dD5", d5.clone())];
                let id3 = id3.clone();
                v.push(Check::new("some dual part of aI+bD2+cD4+dD5 is a field", Some(mode), Refuted, move |caps| {
                    let mut witnesses = Vec::new();
                    for (name, g) in &parts {
                        let gens = vec![id3.clone(), g.clone()];
                        let span = algebra::span_basis(&gens, mode).expect("common rank");
                        if let Err(e) = algebra::structure_constants(&span, Bracket::Mul) {
                            witnesses.push(format!("{{{name}}}: {e}"));
                            continue;
                        }
                        let e = field_claim(name, gens, mode, caps);
                        match e.outcome {
                            Outcome::Holds => return e,
                            Outcome::Refuted => witnesses.push(format!("{{{name}}}: {}", e.witness.unwrap_or_default())),
                            _ => return Evaluation::unknown(format!("{{{name}}} undecided")),
                        }
                    }
                    Evaluation::refuted(witnesses.join("; "))
                }));
            }
            v
        },
    });

    claims.push(Claim {
        id: "CL-13",
        citation: "Eq. (19)",
        quote: "which construct still a field",
        description: "rank-4 G family: displayed matrix, commutativity, field",
        equations: &[19],
        checks: {
            let [id4, g1, g2, g3] = g_family();
            let mut v = vec![
                {
                    let (id4, g1, g2, g3) = (id4.clone(), g1.clone(), g2.clone(), g3.clone());
                    Check::exact("aI+bG1+cG2+dG3 display (a,b,c,d) = (2,3,5,7)", Holds, move |_| {
                        let (av, bv, cv, dv) = (2, 3, 5, 7);
                        let computed = &(&id4.scale(&int(av)) + &g1.scale(&int(bv))) + &(&g2.scale(&int(cv)) + &g3.scale(&int(dv)));
                        let (p, m, s, t) = (av - bv, av + bv, cv + dv, cv - dv);
                        let stated = Matrix::from_ints(&[&[p, 0, 0, t], &[0, m, s, 0], &[0, s, m, 0], &[t, 0, 0, p]]);
                        identities(vec![("aI+bG1+cG2+dG3", computed, stated)])
                    })
                },
                {
                    let named = [("G1", g1.clone()), ("G2", g2.clone()), ("G3", g3.clone())];
                    Check::exact("G1, G2, G3 commute pairwise", Holds, move |_| commutes_pairwise(&named))
                },
            ];
            for mode in FIELD_MODES {
                let gens = vec![id4.clone(), g1.clone(), g2.clone(), g3.clone()];
                v.push(Check::new("{aI+bG1+cG2+dG3} is a field", Some(mode), Refuted, move |caps| field_claim("G family", gens.clone(), mode, caps)));
            }
            v
        },
    });

    claims.push(Claim {
        id: "CL-14",
        citation: "Eq. (20)",
        quote: "eight matrices of 5-rank; The twelve matrices of 7-rank",
        description: "rank-5..8 sign families; the secondary-diagonal members mirror each listed main-diagonal pattern",
        equations: &[20],
        checks: {
            let mut v = Vec::new();
            for (n, pinned) in RANK_SPAN_DIM {
                let named = rank_named(n);
                let count = named.len();
                let gens: Vec<Matrix> = named.iter().map(|(_, m)| m.clone()).collect();
                let commutative = n <= 6;
                v.push({
                    let named = named.clone();
                    Check::new(format!("rank {n}: the {count} matrices are linearly independent"), Some(FieldMode::Q), Refuted, move |_| {
                        let dim = algebra::span_basis(&gens_of(&named), FieldMode::Q).expect("common rank").dim();
                        let detail = format!("span dim {dim}");
                        if dim != pinned {
                            return Evaluation::unknown(format!("span dim {dim} differs from pinned {pinned}"));
                        }
                        match dependency(&named, FieldMode::Q) {
                            Some(w) => Evaluation::refuted(format!("LINEAR_DEPENDENCE {w}")).with_detail(detail),
                            None => Evaluation::holds().with_detail(detail),
                        }
                    })
                });
                v.push({
                    let named: Vec<(String, Matrix)> = named.clone();
                    Check::exact(format!("rank {n}: the family commutes"), if commutative { Holds } else { Refuted }, move |_| {
                        let refs: Vec<(&str, Matrix)> = named.iter().map(|(l, m)| (l.as_str(), m.clone())).collect();
                        commutes_pairwise(&refs)
                    })
                });
                if n == 5 {
                    let gens = gens.clone();
                    v.push(Check::new("rank 5: commutative span within Schur bound 7", Some(FieldMode::Q), Holds, move |_| {
                        let dim = algebra::span_basis(&gens, FieldMode::Q).expect("common rank").dim();
                        let commutes = gens.iter().all(|x| gens.iter().all(|y| x * y == y * x));
                        if !commutes || dim <= 7 {
                            Evaluation::holds().with_detail(format!("span dim {dim}"))
                        } else {
                            Evaluation::refuted(format!("commutative span of dim {dim} exceeds 7"))
                        }
                    }));
                }
                for mode in FIELD_MODES {
                    let gens = gens.clone();
                    v.push(Check::new(format!("rank {n}: the family constructs a field"), Some(mode), Refuted, move |caps| {
                        field_claim("rank family", gens.clone(), mode, caps)
                    }));
                }
            }
            v
        },
    });

    claims.push(Claim {
        id: "CL-15",
        citation: "Eq. (22)",
        quote: "relates three dimensional Pauli matrices",
        description: "Pauli correspondence and the Pauli ring",
        equations: &[22],
        checks: {
            let p = make_pauli();
            let (c, b, a, i2) = (c.clone(), b.clone(), a.clone(), i2.clone());
            let p1 = p.clone();
            let p2 = p.clone();
            let p3 = p.clone();
            let i3 = i2.clone();
            vec![
                Check::exact("sigma_x = B, sigma_y = iC, sigma_z = -A", Holds, move |_| {
                    identities(vec![
                        ("sigma_x", p1.x.clone(), b.clone()),
                        ("sigma_y", p1.y.clone(), c.scale(&GaussianRational::i())),
                        ("sigma_z", p1.z.clone(), -&a),
                    ])
                }),
                Check::exact("sigma_i sigma_j + sigma_j sigma_i = 2 delta_ij I, sigma_x sigma_y = i sigma_z", Holds, move |_| {
                    let s = [&p2.x, &p2.y, &p2.z];
                    let mut pairs = Vec::new();
                    for (i, x) in s.iter().enumerate() {
                        for (j, y) in s.iter().enumerate() {
                            let expect = if i == j { i2.scale(&int(2)) } else { Matrix::zero(2) };
                            pairs.push(("anticommutator", x.anticommutator(y), expect));
                        }
                    }
                    pairs.push(("sigma_x sigma_y", &p2.x * &p2.y, p2.z.scale(&GaussianRational::i())));
                    identities(pairs)
                }),
                Check::new("1 and the Pauli matrices close to a 4-dim noncommutative ring", Some(FieldMode::QI), Holds, move |caps| {
                    let gens = vec![i3.clone(), p3.x.clone(), p3.y.clone(), p3.z.clone()];
                    match closure_dim(gens, FieldMode::QI, Bracket::Mul, caps) {
                        Ok(basis) => match algebra::is_commutative(&basis) {
                            Err(w) if basis.dim() == 4 => Evaluation::holds().with_detail(format!("closure dim 4, {w}")),
                            _ => Evaluation::refuted(format!("closure dim {}", basis.dim())),
                        },
                        Err(e) => Evaluation::unknown(e),
                    }
                }),
            ]
        },
    });

    claims.push(Claim {
        id: "CL-16",
        citation: "prose",
        quote: "G_3 is namely γ_2 in Dirac matrices",
        description: "Dirac ring closure and the identification of G3 with gamma^2",
        equations: &[],
        checks: {
            let g3 = g_family()[3].clone();
            let g3m = g3.clone();
            vec![
                Check::new("the four gammas close to a 16-dim ring", Some(FieldMode::QI), Holds, |caps| {
                    match closure_dim(make_dirac().to_vec(), FieldMode::QI, Bracket::Mul, caps) {
                        Ok(basis) if basis.dim() == 16 => Evaluation::holds().with_detail("closure dim 16"),
                        Ok(basis) => Evaluation::refuted(format!("closure dim {}", basis.dim())),
                        Err(e) => Evaluation::unknown(e),
                    }
                }),
                Check::exact("G3 = gamma^2, Euclidean convention {gamma^mu, gamma^nu} = 2 delta", Holds, move |_| {
                    identities(vec![("gamma^2", make_dirac()[2].clone(), g3.clone())])
                }),
                Check::exact("G3 = gamma^2, Minkowski convention (+,-,-,-)", Refuted, move |_| {
                    identities(vec![("gamma^2", make_dirac_with(DiracConvention::Minkowski)[2].clone(), g3m.clone())])
                        .with_detail("gamma^2 = i*G3 in this convention")
                }),
            ]
        },
    });

    claims.push(Claim {
        id: "CL-17",
        citation: "Eqs. (23)-(25)",
        quote: "A_m A_n - j^2 A_n A_m",
        description: "representation-level bracket closures; abstract structure constants are out of scope",
        equations: &[23, 24, 25],
        checks: {
            let (i2, c, b, a) = (i2.clone(), c.clone(), b.clone(), a.clone());
            let gens = vec![c.clone(), b.clone(), a.clone()];
            let gens2 = gens.clone();
            let i3 = i2.clone();
            vec![
                Check::new("span{C,B,A} is closed under the commutator", Some(FieldMode::Q), Holds, move |_| {
                    let basis = algebra::span_basis(&gens, FieldMode::Q).expect("common rank");
                    match algebra::structure_constants(&basis, Bracket::Commutator) {
                        Ok(_) => Evaluation::holds().with_detail("[C,B]=2A, [A,C]=2B, [A,B]=2C"),
                        Err(e) => Evaluation::refuted(e.to_string()),
                    }
                }),
                Check::new("anticommutator closure of {C,B,A} requires I", Some(FieldMode::Q), Holds, move |caps| {
                    match closure_dim(gens2.clone(), FieldMode::Q, Bracket::Anticommutator, caps) {
                        Ok(basis) if basis.contains(&i3) => Evaluation::holds().with_detail(format!("closure dim {}, {{C,C}} = -2I", basis.dim())),
                        Ok(basis) => Evaluation::refuted(format!("closure dim {} without I", basis.dim())),
                        Err(e) => Evaluation::unknown(e),
                    }
                }),
                Check::exact("Pauli anticommutators equal 2 delta_ij I", Holds, move |_| {
                    let p = make_pauli();
                    let s = [&p.x, &p.y, &p.z];
                    let mut pairs = Vec::new();
                    for (i, x) in s.iter().enumerate() {
                        for (j, y) in s.iter().enumerate() {
                            pairs.push(("{sigma_i, sigma_j}", x.anticommutator(y), if i == j { i2.scale(&int(2)) } else { Matrix::zero(2) }));
                        }
                    }
                    identities(pairs)
                }),
            ]
        },
    });

    claims.push(Claim {
        id: "CL-18",
        citation: "Eq. (21)",
        quote: "a four dimensional space-time is",
        description: "(Ix)^2 + (By)^2 + (Cz)^2 + (Act)^2 with (Act) read as A·c·t",
        equations: &[21],
        checks: vec![
            Check::exact("form evaluates to (x^2+y^2-z^2+c^2t^2) I", Holds, |_| {
                let r = |n: i64| Rational::from_int(n);
                for (vals, lambda) in [([1, 0, 0, 0, 1], 1), ([0, 0, 1, 0, 1], -1), ([1, 1, 1, 1, 1], 2), ([2, 3, 5, 7, 11], 4 + 9 - 25 + 49 * 121)] {
                    let [x, y, z, t, cc] = vals.map(r);
                    let f = spacetime_form(&paper_spacetime_assignment(&x, &y, &z, &t, &cc)).expect("rank 2");
                    if f.lambda != Some(int(lambda)) {
                        return Evaluation::refuted(format!("values {vals:?}: form {} (expected {lambda}·I)", f.matrix));
                    }
                }
                Evaluation::holds()
            }),
            Check::exact("signature matches metric diag(1,1,1,-1)", Refuted, |_| {
                let one = Rational::from_int(1);
                let f = spacetime_form(&paper_spacetime_assignment(&one, &one, &one, &one, &one)).expect("rank 2");
                let signs: Vec<String> = f.signs.iter().map(|s| s.to_string()).collect();
                let computed = format!("({})", signs.join(","));
                if computed == "(+,+,+,-)" {
                    Evaluation::holds()
                } else {
                    Evaluation::refuted(format!("SIGNATURE computed {computed} from I^2=B^2=A^2=I, C^2=-I; stated (+,+,+,-)"))
                }
            }),
        ],
    });

    claims.push(Claim {
        id: "CL-19",
        citation: "prose",
        quote: "I+A(I+I+I…), I+B(I+I+I…), I+C(I+I+I…), A+I(I+A+B+C…)",
        description: "trailing n-element expressions have no stated meaning",
        equations: &[],
        checks: vec![Check::exact("n-element quantities I+A(I+I+I...)", NotInterpretable, |_| Evaluation {
            outcome: Outcome::NotInterpretable,
            witness: None,
            certificate: None,
            detail: Some("no operation is defined for the parenthesized repetition".into()),
        })],
    });

    claims.push(Claim {
        id: "CL-20",
        citation: "Eq. (13)",
        quote: "Such it is a division ring of real quaternions",
        description: "{aI+bC+cB+dA} is a ring and a division ring",
        equations: &[13],
        checks: {
            let gens = vec![i2.clone(), c.clone(), b.clone(), a.clone()];
            let gens2 = gens.clone();
            vec![
                Check::new("{aI+bC+cB+dA} is closed under multiplication (4-dim ring)", Some(FieldMode::Q), Holds, move |caps| {
                    match closure_dim(gens.clone(), FieldMode::Q, Bracket::Mul, caps) {
                        Ok(basis) if basis.dim() == 4 => Evaluation::holds().with_detail("closure dim 4"),
                        Ok(basis) => Evaluation::refuted(format!("closure dim {}", basis.dim())),
                        Err(e) => Evaluation::unknown(e),
                    }
                }),
                Check::new("{aI+bC+cB+dA} is a division ring", Some(FieldMode::Q), Refuted, move |caps| {
                    division_claim("aI+bC+cB+dA", gens2.clone(), FieldMode::Q, caps)
                }),
            ]
        },
    });

    claims.push(Claim {
        id: "CL-21",
        citation: "Eq. (10)",
        quote: "Any rank diagonal matrices all obey the commutative law of multiplication, and may construct the field",
        description: "diagonal matrices of rank n commute and form a field",
        equations: &[10],
        checks: {
            let mut v = vec![Check::exact("diagonal matrices commute, n=2..8", Holds, |_| {
                shape_trials(35, |rng, n| {
                    let n = n + (n - 2) % 3;
                    let (x, y) = (make_diag(&random_vec(rng, n)), make_diag(&random_vec(rng, n)));
                    (&x * &y == &y * &x).then_some(()).ok_or_else(|| format!("{x}, {y}"))
                })
            })];
            for mode in FIELD_MODES {
                v.push(Check::new("all rank-n diagonal matrices form a field, n=2..8", Some(mode), Refuted, move |caps| {
                    for n in 2..=8 {
                        let units: Vec<Matrix> = (0..n)
                            .map(|k| {
                                let mut e = vec![int(0); n];
                                e[k] = int(1);
                                make_diag(&e)
                            })
                            .collect();
                        let e = field_claim("diagonal", units, mode, caps);
                        if e.outcome != Outcome::Refuted {
                            return e;
                        }
                        if n == 2 {
                            return e.with_detail("rank 2 counterexample; every larger rank contains it");
                        }
                    }
                    Evaluation::unknown("no counterexample")
                }));
            }
            v
        },
    });

    claims
}

fn gens_of(named: &[(String, Matrix)]) -> Vec<Matrix> {
    named.iter().map(|(_, m)| m.clone()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_are_unique_and_ordered() {
        let claims = builtin_claims();
        let ids: Vec<&str> = claims.iter().map(|c| c.id).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(ids, sorted);
        assert!(ids.len() >= 19);
    }

    #[test]
    fn every_equation_is_covered() {
        let covered: BTreeSet<u32> = builtin_claims().iter().flat_map(|c| c.equations.iter().copied()).collect();
        assert_eq!(covered, (1..=25).collect());
    }

    #[test]
    fn spacetime_examples() {
        let r = Rational::from_int;
        let f = spacetime_form(&paper_spacetime_assignment(&r(1), &r(0), &r(0), &r(0), &r(1))).unwrap();
        assert_eq!(f.lambda, Some(int(1)));
        let f = spacetime_form(&paper_spacetime_assignment(&r(0), &r(0), &r(1), &r(0), &r(1))).unwrap();
        assert_eq!(f.lambda, Some(int(-1)));
        let f = spacetime_form(&paper_spacetime_assignment(&r(1), &r(1), &r(1), &r(1), &r(1))).unwrap();
        assert_eq!(f.lambda, Some(int(2)));
        assert_eq!(f.signs, vec![SquareSign::Plus, SquareSign::Plus, SquareSign::Minus, SquareSign::Plus]);
        let ladder = make_ladder();
        let f = spacetime_form(&[(ladder.creation, r(1))]).unwrap();
        assert_eq!(f.signs, vec![SquareSign::Indefinite]);
    }

    #[test]
    fn unknown_id_is_an_error() {
        assert_eq!(run_claim("CL-99", &Caps::default()), Err(ClaimError::UnknownId("CL-99".into())));
    }

    #[test]
    fn empty_filter_gives_empty_report() {
        let r = run_all(Some(&BTreeSet::new()), None, &Caps::default()).unwrap();
        assert!(r.verdicts.is_empty());
        assert_eq!(r.summary, Summary::default());
    }

    #[test]
    fn single_claims() {
        let caps = Caps::default();
        let v = run_claim("CL-01", &caps).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].outcome, Outcome::Holds);
        let v = run_claim("CL-05", &caps).unwrap();
        assert_eq!(v.len(), 1);
        assert_eq!(v[0].outcome, Outcome::Holds);
        let v = run_claim("CL-19", &caps).unwrap();
        assert_eq!(v[0].outcome, Outcome::NotInterpretable);
    }

    #[test]
    fn field_claims_in_both_modes() {
        let caps = Caps::default();
        let v = run_claim("CL-08", &caps).unwrap();
        let q = v.iter().find(|x| x.mode == Some(FieldMode::Q)).unwrap();
        assert_eq!(q.outcome, Outcome::Holds);
        assert!(q.certificate.as_deref().unwrap().contains("t^2+1"));
        let c = v.iter().find(|x| x.mode == Some(FieldMode::QIAsC)).unwrap();
        assert_eq!(c.outcome, Outcome::Refuted);
        assert!(c.witness.as_deref().unwrap().starts_with("ZERO_DIVISOR"));
    }

    #[test]
    fn every_check_meets_its_expectation() {
        let report = run_all(None, None, &Caps::default()).unwrap();
        let bad: Vec<String> = report
            .verdicts
            .iter()
            .filter(|v| !v.matches())
            .map(|v| format!("{} {} [{}]: {} vs {} {:?} {:?}", v.claim_id, v.label, v.mode_str(), v.outcome, v.expected, v.witness, v.detail))
            .collect();
        assert!(bad.is_empty(), "{bad:#?}");
        for v in &report.verdicts {
            if v.outcome == Outcome::Refuted {
                assert!(v.witness.is_some(), "{} {}", v.claim_id, v.label);
            }
        }
    }
}
