//! Exact Lie and Leibniz cohomology of finite-dimensional algebras given by
//! structure constants over the Gaussian rationals, the Koszul-map
//! decomposition of the second Leibniz cohomology of a Lie algebra, and an
//! order-by-order deformation obstruction calculus.

pub mod algebra;
pub mod cochain;
pub mod deformation;
pub mod error;
pub mod field;
pub mod koszul;
pub mod linalg;
pub mod poly;

pub use algebra::{AlgebraSpec, Kind, StructureReport};
pub use cochain::{Cochain, CochainScheme, Coefficients};
pub use deformation::{Deformation, MasseyLedger, ObstructionClass, Verdict};
pub use error::{Error, Result};
pub use field::Scalar;
pub use koszul::{Decomposition, KoszulReport};
pub use linalg::{Matrix, Subspace};
pub use poly::{Monomial, ParamAlgebra, PolyScalar};
