pub mod bivariate;
pub mod matrix;
pub mod poly;
pub mod polymatrix;
pub mod rational;

pub use bivariate::{divides, BiPoly, Quadratic};
pub use matrix::{PivotOrder, RationalMatrix};
pub use poly::{Assignment, Monomial, MultiPoly};
pub use polymatrix::{signed_vandermonde_block, PolyMatrix, SYMBOLIC_DET_LIMIT};
pub use rational::Rational;
