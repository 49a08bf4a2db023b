//! Exact rational scalars and the shifted-factorial building blocks.
//!
//! Everything in this module is a pure function of its arguments. The only
//! floating-point outputs are [`FloatApprox`] values (infinite q-products)
//! and [`log_abs`].

mod pochhammer;
mod rational;

pub use pochhammer::{pochhammer, q_pochhammer, q_pochhammer_infinite};
pub(crate) use rational::common_denominator;
pub use rational::{log_abs, Rational};

use serde::{Deserialize, Serialize};

/// A float together with an optional absolute error bound.
///
/// When `abs_error_bound` is `Some(e)` the true value lies in `value ± e`.
/// `None` means the estimate is heuristic.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FloatApprox {
    pub value: f64,
    pub abs_error_bound: Option<f64>,
}

impl FloatApprox {
    pub fn exact(value: f64) -> Self {
        FloatApprox {
            value,
            abs_error_bound: Some(0.0),
        }
    }

    pub fn heuristic(value: f64) -> Self {
        FloatApprox {
            value,
            abs_error_bound: None,
        }
    }

    pub fn contains(&self, x: f64) -> bool {
        match self.abs_error_bound {
            Some(e) => (x - self.value).abs() <= e,
            None => false,
        }
    }
}
