#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod closed;
pub mod error;
pub mod gram;
pub mod haar;
pub mod loops;
pub mod matrix;
pub mod modp;
pub mod orthopoly;
pub mod partition;
pub mod poly;
pub mod report;
pub mod young;

pub use error::{Error, Result};
pub use partition::{Category, SetPartition};

use alloc::string::{String, ToString};
use num_rational::BigRational;

/// Renders a rational as `p/q`, or as an integer when the denominator is 1.
pub fn format_rational(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        alloc::format!("{}/{}", q.numer(), q.denom())
    }
}
