//! Scalar abstraction used by the generic numeric layers.

use num_traits::float::FloatConst;
use num_traits::{Float, FromPrimitive, NumAssignOps, ToPrimitive};
use std::fmt::{Debug, Display, LowerExp};

/// Floating-point scalar usable throughout the model and analytic layers.
///
/// Blanket-implemented for any type satisfying the bounds, in particular
/// `f32` and `f64`.
pub trait Real:
    Float
    + FloatConst
    + FromPrimitive
    + ToPrimitive
    + NumAssignOps
    + Debug
    + Display
    + LowerExp
    + Send
    + Sync
    + 'static
{
    /// Conversion from an `f64` constant; panics only on NaN inputs, which
    /// never occur for the literals used in this crate.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("finite f64 constant")
    }

    /// Conversion to `f64` for reporting and for the extended-precision
    /// far-series kernel.
    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar converts to f64")
    }

    /// Conversion from a small integer count.
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("count fits the scalar")
    }
}

impl<T> Real for T where
    T: Float
        + FloatConst
        + FromPrimitive
        + ToPrimitive
        + NumAssignOps
        + Debug
        + Display
        + LowerExp
        + Send
        + Sync
        + 'static
{
}
