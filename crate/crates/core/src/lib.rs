//! Exact arithmetic and ring classification for algebras of small
//! hypercomplex matrices over `Q` and `Q(i)`.

pub mod algebra;
pub mod claims;
pub mod families;
pub mod linalg;
pub mod matrix;
pub mod poly;
pub mod scalar;

pub use algebra::{AlgebraSpec, Basis, Bracket, Caps, Classification, Witness};
pub use matrix::Matrix;
pub use poly::UniPoly;
pub use scalar::{FieldMode, GaussianRational, Rational};
