//! Truncated integer power series, used for the root-of-unity (multisection)
//! form of the `R` polynomial.

use crate::error::{Error, Result};
use crate::seqcalc::IntSeq;

/// Power series known modulo `t^{order+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerSeries {
    coeffs: Vec<i64>,
}

impl PowerSeries {
    pub fn from_poly(p: &IntSeq, order: usize) -> Self {
        PowerSeries {
            coeffs: p.window(order),
        }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Multiplies by `1/(1 − t^step)`.
    pub fn div_one_minus_power(&self, step: usize) -> Self {
        let mut c = self.coeffs.clone();
        for k in step..c.len() {
            c[k] += c[k - step];
        }
        PowerSeries { coeffs: c }
    }

    pub fn sub(&self, other: &PowerSeries) -> Self {
        let n = self.order().min(other.order());
        PowerSeries {
            coeffs: (0..=n).map(|k| self.coeff(k) - other.coeff(k)).collect(),
        }
    }

    /// `(1/d) Σ_{ξ^d=1} f(ξt)`: keeps the coefficients at multiples of `d`.
    pub fn multisection(&self, d: usize) -> Self {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| if k % d == 0 { c } else { 0 })
                .collect(),
        }
    }
}

/// `R(t) = (1/d) Σ_ξ Δ(ξt)/(1−ξt)² − (1−t^{d²})/(1−t^d)³`, expanded as a power
/// series to order `d(d−3)+d`. Fails unless every coefficient above `d(d−3)`
/// vanishes, i.e. unless the expansion is the polynomial it should be.
pub fn r_poly_multisection(alexander: &IntSeq, d: u64) -> Result<IntSeq> {
    if d < 3 {
        return Err(Error::InvalidDegree(d));
    }
    let d = d as usize;
    let top = d * (d - 3);
    let order = top + d;
    let first = PowerSeries::from_poly(alexander, order)
        .div_one_minus_power(1)
        .div_one_minus_power(1)
        .multisection(d);
    let mut numerator = vec![0i64; order + 1];
    numerator[0] = 1;
    if d * d <= order {
        numerator[d * d] = -1;
    }
    let second = PowerSeries::from_poly(&IntSeq::new(numerator), order)
        .div_one_minus_power(d)
        .div_one_minus_power(d)
        .div_one_minus_power(d);
    let r = first.sub(&second);
    if let Some(k) = (top + 1..=order).find(|&k| r.coeff(k) != 0) {
        return Err(Error::Inconsistent(format!(
            "multisection series has nonzero coefficient {} at t^{k} beyond degree {top}",
            r.coeff(k)
        )));
    }
    Ok(IntSeq::new(r.coeffs()[..=top].to_vec()))
}
