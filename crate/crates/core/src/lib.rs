//! Certified computations around Bernoulli-convolution Fourier products:
//! exact algebraic arithmetic, Weil heights, cosine-product evaluation, the
//! algebraic approximation engine and the Roth-exponent pipeline.

pub mod algebraic;
pub mod arith;
pub mod heights;
pub mod fourier;
pub mod approx;
pub mod roth;
pub mod report;
