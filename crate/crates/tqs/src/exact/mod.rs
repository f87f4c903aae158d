//! Exact arithmetic over the rationals and over cyclotomic fields Q(zeta_N),
//! the coefficient domain for every matrix and polynomial in this crate.
//!
//! Rationals are `num_rational::BigRational`; cyclotomic elements are
//! [`Cyclo`] values in canonical power-basis form. All values are immutable
//! and all operations are pure, so everything here is safe to use from any
//! number of threads.

mod cyclo;
mod intpoly;
pub mod text;

pub use cyclo::{
    conductor_cap, lower_conductor, set_conductor_cap, Cyclo, Rational, DEFAULT_CONDUCTOR_CAP,
};
pub use intpoly::{cyclotomic_polynomial, divisors, euler_phi, factorize, IntPoly};
pub use text::{format_cyclo, parse_cyclo, parse_cyclo_in};
