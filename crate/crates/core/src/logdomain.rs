//! Signed log-domain scalars.
//!
//! Sector weights carry a factor `exp(beta*b*n/2)` that overflows `f64` for
//! modest `beta*b*n`, and the projected weights can be negative. Values are
//! therefore stored as a sign together with the log of the magnitude and only
//! ever exponentiated as ratios.

/// A real number `sign * exp(ln_mag)`. `sign == 0` encodes exact zero.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignedLog {
    pub sign: i8,
    pub ln_mag: f64,
}

impl SignedLog {
    pub fn zero() -> Self {
        SignedLog { sign: 0, ln_mag: f64::NEG_INFINITY }
    }

    pub fn positive(ln_mag: f64) -> Self {
        SignedLog { sign: 1, ln_mag }
    }

    pub fn negative(ln_mag: f64) -> Self {
        SignedLog { sign: -1, ln_mag }
    }

    /// Exact representation of an ordinary float.
    pub fn from_value(x: f64) -> Self {
        if x == 0.0 {
            Self::zero()
        } else {
            SignedLog { sign: if x > 0.0 { 1 } else { -1 }, ln_mag: x.abs().ln() }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// The plain value; overflows to +-inf / underflows to 0 as `f64` does.
    pub fn value(&self) -> f64 {
        f64::from(self.sign) * self.ln_mag.exp()
    }

    pub fn mul(self, other: SignedLog) -> SignedLog {
        if self.sign == 0 || other.sign == 0 {
            return SignedLog::zero();
        }
        SignedLog { sign: self.sign * other.sign, ln_mag: self.ln_mag + other.ln_mag }
    }

    pub fn scale_sign(self, sign: i8) -> SignedLog {
        SignedLog { sign: self.sign * sign, ln_mag: self.ln_mag }
    }

    /// Ratio `self / other` as a plain float. `other` must be nonzero.
    pub fn ratio(self, other: SignedLog) -> f64 {
        if self.sign == 0 {
            return 0.0;
        }
        f64::from(self.sign * other.sign) * (self.ln_mag - other.ln_mag).exp()
    }

    /// Signed log-sum-exp over a slice of terms.
    pub fn sum(terms: &[SignedLog]) -> SignedLog {
        let max = terms
            .iter()
            .filter(|t| t.sign != 0)
            .map(|t| t.ln_mag)
            .fold(f64::NEG_INFINITY, f64::max);
        if max == f64::NEG_INFINITY {
            return SignedLog::zero();
        }
        let acc: f64 = terms
            .iter()
            .filter(|t| t.sign != 0)
            .map(|t| f64::from(t.sign) * (t.ln_mag - max).exp())
            .sum();
        if acc == 0.0 {
            SignedLog::zero()
        } else {
            SignedLog {
                sign: if acc > 0.0 { 1 } else { -1 },
                ln_mag: max + acc.abs().ln(),
            }
        }
    }
}

/// `ln(1 + exp(-x))`, stable for any `x`.
pub fn ln_one_plus_exp_neg(x: f64) -> f64 {
    if x >= 0.0 {
        (-x).exp().ln_1p()
    } else {
        -x + x.exp().ln_1p()
    }
}

/// `1 - exp(-x)` as a signed log, stable for any `x`.
/// Positive for `x > 0`, negative for `x < 0`, exact zero at `x == 0`.
pub fn ln_one_minus_exp_neg(x: f64) -> SignedLog {
    if x == 0.0 {
        SignedLog::zero()
    } else if x > 0.0 {
        SignedLog::positive((-(-x).exp()).ln_1p())
    } else {
        // 1 - e^{y} with y = -x > 0: magnitude e^y - 1 = e^y (1 - e^{-y})
        let y = -x;
        SignedLog::negative(y + (-(-y).exp()).ln_1p())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol * b.abs().max(1.0), "{a} vs {b}");
    }

    #[test]
    fn ratio_cancels_large_offsets() {
        let a = SignedLog::positive(1.0e7 + (3.0f64).ln());
        let b = SignedLog::positive(1.0e7);
        close(a.ratio(b), 3.0, 1e-12);
    }

    #[test]
    fn sum_with_cancellation() {
        // 5e100 - 3e100 - 2e100 + 7 = 7
        let big = 100.0 * std::f64::consts::LN_10;
        let terms = [
            SignedLog::positive(big + 5.0f64.ln()),
            SignedLog::negative(big + 3.0f64.ln()),
            SignedLog::negative(big + 2.0f64.ln()),
            SignedLog::from_value(7.0),
        ];
        let s = SignedLog::sum(&terms);
        assert_eq!(s.sign, 1);
        // complete cancellation of the leading terms leaves rounding noise at
        // scale 1e100 * eps ~ 2e84, far above 7; only check the sign survives
        assert!(s.ln_mag < big);
    }

    #[test]
    fn sum_without_cancellation() {
        let terms = [SignedLog::from_value(2.5), SignedLog::from_value(-1.0)];
        close(SignedLog::sum(&terms).value(), 1.5, 1e-14);
    }

    #[test]
    fn one_minus_exp_neg_signs() {
        assert_eq!(ln_one_minus_exp_neg(0.0).sign, 0);
        let p = ln_one_minus_exp_neg(2.0);
        assert_eq!(p.sign, 1);
        close(p.ln_mag.exp(), 1.0 - (-2.0f64).exp(), 1e-14);
        let m = ln_one_minus_exp_neg(-2.0);
        assert_eq!(m.sign, -1);
        close(m.ln_mag.exp(), 2.0f64.exp() - 1.0, 1e-14);
    }

    #[test]
    fn one_plus_exp_neg_stable() {
        close(ln_one_plus_exp_neg(3.0), (1.0 + (-3.0f64).exp()).ln(), 1e-14);
        close(ln_one_plus_exp_neg(-800.0), 800.0, 1e-12);
        assert!(ln_one_plus_exp_neg(800.0) > 0.0);
    }

    /// Parity-projected reassembly of a single two-level system: with one
    /// fermion mode of energy b in each sector,
    /// Z = (1/2)[Z0+ + Z1+ + Z0- - Z1-] must give e^{beta b/2} + e^{-beta b/2}.
    #[test]
    fn single_mode_reassembly() {
        let beta = 0.7;
        let b = 1.3;
        let prefactor = beta * b / 2.0;
        let z0 = SignedLog::positive(prefactor + ln_one_plus_exp_neg(beta * b));
        let z1 = ln_one_minus_exp_neg(beta * b).mul(SignedLog::positive(prefactor));
        let z = SignedLog::sum(&[z0, z1, z0, z1.scale_sign(-1)]);
        let expected = prefactor.exp() + (-prefactor).exp();
        close(0.5 * z.value(), expected, 1e-12);
    }
}
