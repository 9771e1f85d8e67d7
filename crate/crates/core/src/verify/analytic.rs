//! The real functions whose signs and monotonicity the extremal arguments rely on.
//!
//! `x` plays the role of a vertex degree (extended to the reals) and `a` is the
//! index exponent.

use crate::scalar::Scalar;

fn c<T: Scalar>(v: f64) -> T {
    T::lit(v)
}

/// `(1 + (x - 1 + y)²)^a - (x² + y²)^a`, non-negative for `x, y >= 1`, `a > 0`.
pub fn l1_gap<T: Scalar>(x: T, y: T, a: T) -> T {
    let one = T::one();
    let s = x - one + y;
    (one + s * s).powf(a) - (x * x + y * y).powf(a)
}

/// `(x² + 9)^a - (x² + 4)^a`, decreasing for `x > 0`, `0 < a < 1`.
pub fn l5_f<T: Scalar>(x: T, a: T) -> T {
    let x2 = x * x;
    (x2 + c(9.0)).powf(a) - (x2 + c(4.0)).powf(a)
}

fn l6_common<T: Scalar>(x: T, a: T) -> T {
    let one = T::one();
    let xp = x + one;
    (x - one) * (xp * xp + one).powf(a) + c::<T>(2.0) * (xp * xp + c(4.0)).powf(a)
        - (x - one) * (x * x + one).powf(a)
}

/// `(x-1)((x+1)²+1)^a + 2((x+1)²+4)^a - (x-1)(x²+1)^a - (x²+4)^a`.
pub fn l6_f1<T: Scalar>(x: T, a: T) -> T {
    l6_common(x, a) - (x * x + c(4.0)).powf(a)
}

/// As [`l6_f1`] with the last term `(x²+9)^a`.
pub fn l6_f2<T: Scalar>(x: T, a: T) -> T {
    l6_common(x, a) - (x * x + c(9.0)).powf(a)
}

/// `(x-2)(x²+1)^a + 2(x²+4)^a - 2((x-1)²+4)^a - (x-3)((x-1)²+1)^a`, increasing for `x >= 3`.
pub fn l7_f<T: Scalar>(x: T, a: T) -> T {
    let one = T::one();
    let two = c::<T>(2.0);
    let xm = x - one;
    (x - two) * (x * x + one).powf(a) + two * (x * x + c(4.0)).powf(a)
        - two * (xm * xm + c(4.0)).powf(a)
        - (x - c(3.0)) * (xm * xm + one).powf(a)
}

/// Lower bound for `l6_f1'(x) / (2a)`:
/// `(x-1)(x+1)(x²+2x+2)^(a-1) + 2(x+1)(x²+2x+5)^(a-1) - x(x-1)(x²+1)^(a-1) - x(x²+4)^(a-1)`.
pub fn g<T: Scalar>(x: T, a: T) -> T {
    let one = T::one();
    let two = c::<T>(2.0);
    let e = a - one;
    let x2 = x * x;
    (x - one) * (x + one) * (x2 + two * x + two).powf(e)
        + two * (x + one) * (x2 + two * x + c(5.0)).powf(e)
        - x * (x - one) * (x2 + one).powf(e)
        - x * (x2 + c(4.0)).powf(e)
}

/// Lower bound for `l7_f'(x) / (2a)`:
/// `(x-2)x(x²+1)^(a-1) + 2x(x²+4)^(a-1) - (x-3)(x-1)((x-1)²+1)^(a-1) - 2(x-1)((x-1)²+4)^(a-1)`.
///
/// Every power carries exponent `a - 1`, as differentiating [`l7_f`] gives.
pub fn h<T: Scalar>(x: T, a: T) -> T {
    let one = T::one();
    let two = c::<T>(2.0);
    let e = a - one;
    let xm = x - one;
    (x - two) * x * (x * x + one).powf(e) + two * x * (x * x + c(4.0)).powf(e)
        - (x - c(3.0)) * xm * (xm * xm + one).powf(e)
        - two * xm * (xm * xm + c(4.0)).powf(e)
}
