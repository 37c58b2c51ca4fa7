//! Exact loop-homology algebras of spheres, their orientation-reversal
//! quotients and transfer products.

pub mod algebra;
pub mod cli;
pub mod equivariant;
pub mod error;
pub mod linalg;
pub mod maps;
pub mod report;
pub mod scalar;
pub mod sphere;

pub use algebra::{basis_in_degree, degree, multiply, normalize, AlgebraContext, Element, Monomial};
pub use equivariant::{QuotientAlgebra, QuotientElement, SubgroupSpec};
pub use error::{Error, Result};
pub use report::{Check, Report};
pub use scalar::{Ring, Scalar};
pub use sphere::{betti, lookup_generator, make_space, BettiTable, Space, SpacePresentation};
