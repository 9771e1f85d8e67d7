use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating point type the index engine and the analytic checks run on.
pub trait Scalar: Float + FromPrimitive + Debug + Display + Send + Sync + 'static {
    /// Lossless for the small integers (degrees, counts) this crate feeds in.
    fn from_usize_exact(v: usize) -> Self {
        Self::from_usize(v).expect("usize representable as float")
    }

    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("f64 literal representable")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
