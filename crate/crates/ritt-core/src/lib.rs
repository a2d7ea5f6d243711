//! Exact solver toolkit for the polynomial composition equation
//! `C(A(z)) = D(B(z))` over the Gaussian rationals.

pub mod cheb;
pub mod decomp;
pub mod linalg;
pub mod linear;
pub mod poly;
pub mod rational;
pub mod scalar;

pub use cheb::chebyshev;
pub use decomp::{
    full_decompose, left_divide, max_common_right_factor, right_factor,
    CommonRightFactorResult, DecompositionChain, NotComposable,
};
pub use linear::LinearMap;
pub use poly::Polynomial;
pub use rational::{compose_poly_rational, compose_rational, RationalFunction};
pub use scalar::GaussianRational;
