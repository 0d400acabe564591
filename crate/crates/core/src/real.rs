//! Scalar abstraction for the analytical layer.
//!
//! Everything in the density-evolution and covariance modules is written
//! against [`Real`] so the same formulas run in `f32` or `f64`. The crate
//! root exposes `f64`-backed aliases, which is what the CLI and the
//! acceptance tolerances assume.

use std::fmt::{Debug, Display, LowerExp};
use std::iter::Sum;

use num_traits::{Float, FromPrimitive, NumAssign, ToPrimitive};

pub trait Real:
    Float + FromPrimitive + ToPrimitive + NumAssign + Sum + Debug + Display + LowerExp + Send + Sync + 'static
{
    /// Lift an `f64` constant into the scalar type.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("constant not representable in scalar type")
    }

    /// Lift a small integer (degree, count) into the scalar type.
    fn of_u32(v: u32) -> Self {
        Self::from_u32(v).expect("integer not representable in scalar type")
    }

    fn as_f64(self) -> f64 {
        self.to_f64().expect("scalar not representable as f64")
    }
}

impl<T> Real for T where
    T: Float
        + FromPrimitive
        + ToPrimitive
        + NumAssign
        + Sum
        + Debug
        + Display
        + LowerExp
        + Send
        + Sync
        + 'static
{
}
