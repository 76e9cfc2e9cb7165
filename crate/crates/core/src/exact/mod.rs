//! Exact arbitrary-precision linear algebra and polynomial machinery.

pub mod interp;
pub mod matrix;
pub mod poly;
pub mod roots;

pub use interp::{char_poly, det_poly_linear, det_poly_of_pencil};
pub use matrix::{BinaryMatrix, IntMatrix, RationalMatrix};
pub use poly::{rational_string, IntPolynomial};
pub use roots::{poly_gcd, poly_roots, rational_root_multiplicity, square_free_decomposition, ComplexRoot};
