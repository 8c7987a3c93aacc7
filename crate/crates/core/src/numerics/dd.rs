//! Compensated (double-double) arithmetic for the handful of places where
//! plain f64 rounding at magnitudes of 1e4..1e5 would eat the accuracy
//! budget of downstream log-space comparisons.
//!
//! Only the operations the gamma kernels need are implemented.

/// An unevaluated sum `hi + lo` with `|lo| <= ulp(hi)/2`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Dd {
    pub hi: f64,
    pub lo: f64,
}

/// Knuth two-sum: exact error of a floating-point addition.
#[inline]
fn two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    let bb = s - a;
    let err = (a - (s - bb)) + (b - bb);
    Dd { hi: s, lo: err }
}

/// Exact product via fused multiply-add.
#[inline]
fn two_prod(a: f64, b: f64) -> Dd {
    let p = a * b;
    let err = a.mul_add(b, -p);
    Dd { hi: p, lo: err }
}

impl Dd {
    #[inline]
    pub fn from_f64(x: f64) -> Self {
        Dd { hi: x, lo: 0.0 }
    }

    #[inline]
    pub fn new(hi: f64, lo: f64) -> Self {
        Dd { hi, lo }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.hi + self.lo
    }

    #[inline]
    pub fn add(self, other: Dd) -> Dd {
        let s = two_sum(self.hi, other.hi);
        let lo = s.lo + self.lo + other.lo;
        let r = two_sum(s.hi, lo);
        Dd { hi: r.hi, lo: r.lo }
    }

    #[inline]
    pub fn add_f64(self, x: f64) -> Dd {
        self.add(Dd::from_f64(x))
    }

    #[inline]
    pub fn sub(self, other: Dd) -> Dd {
        self.add(Dd {
            hi: -other.hi,
            lo: -other.lo,
        })
    }

    /// Product with a plain f64.
    #[inline]
    pub fn mul_f64(self, x: f64) -> Dd {
        let p = two_prod(self.hi, x);
        let lo = p.lo + self.lo * x;
        let r = two_sum(p.hi, lo);
        Dd { hi: r.hi, lo: r.lo }
    }
}

/// Natural log of `x` with ~1 ulp *absolute* accuracy, one Newton refinement
/// of the libm result: ln x = r + (x·e^{-r} - 1) up to O(delta^2).
///
/// The refinement matters when the result is later multiplied by a large
/// factor: plain `f64::ln` has relative 1-ulp error, i.e. absolute error
/// growing with |ln x|.
pub(crate) fn ln_dd(x: f64) -> Dd {
    debug_assert!(x > 0.0);
    let r = x.ln();
    let t = (-r).exp();
    // u = x*t - 1, exactly
    let p = two_prod(x, t);
    let u = two_sum(p.hi, -1.0);
    let ulo = u.lo + p.lo;
    // ln x = r + ln(1+u) ~= r + u - u^2/2
    let corr = u.hi + (ulo - 0.5 * u.hi * u.hi);
    two_sum(r, corr)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_dd_matches_high_precision_references() {
        // Reference splits computed with mpmath at 60 digits.
        let l = ln_dd(1e4);
        let err = (l.hi - 9.210340371976184) + (l.lo - -8.683024893528997e-16);
        assert!(err.abs() < 5e-16, "err = {err:e}");
        let l2 = ln_dd(2.0);
        let err2 = (l2.hi - std::f64::consts::LN_2) + (l2.lo - 2.3190468138462996e-17);
        assert!(err2.abs() < 5e-16, "err = {err2:e}");
    }

    #[test]
    fn dd_sum_tracks_cancellation() {
        let a = Dd::from_f64(1e16).add_f64(1.0).add_f64(-1e16);
        assert_eq!(a.value(), 1.0);
    }
}
