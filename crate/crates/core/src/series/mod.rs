//! Truncated formal power series in `t` with exact rational coefficients.
//!
//! A [`PowerSeries`] of order `N` stores the coefficients of `t^0..=t^N`.
//! Binary operations truncate to the smaller order of their operands.

mod gf;

pub use gf::{gf_a, gf_b_c, gf_d, gf_d_i, gf_f, gf_f_closed_form};

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::numeric::Rat;

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct PowerSeries {
    coeffs: Vec<Rat>,
}

impl PowerSeries {
    /// Panics if `coeffs` is empty; a series always has at least `t^0`.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a power series needs at least one coefficient"
        );
        PowerSeries { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| Rat::from(c)).collect())
    }

    pub fn zero(order: usize) -> Self {
        PowerSeries {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rat::one(), order)
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        Self::monomial(c, 0, order)
    }

    /// `c * t^k` truncated to `order`.
    pub fn monomial(c: Rat, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// Coefficient of `t^k`, or `None` beyond the truncation order.
    pub fn coeff(&self, k: usize) -> Option<&Rat> {
        self.coeffs.get(k)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rat::is_zero)
    }

    /// Drops terms above `order`. Panics if `order` exceeds the current order,
    /// since the missing coefficients are unknown rather than zero.
    pub fn truncate(mut self, order: usize) -> Self {
        assert!(
            order <= self.order(),
            "cannot raise the order of a truncated series"
        );
        self.coeffs.truncate(order + 1);
        self
    }

    pub fn add(&self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a + b)
    }

    pub fn sub(&self, rhs: &PowerSeries) -> PowerSeries {
        self.zip_with(rhs, |a, b| a - b)
    }

    fn zip_with(&self, rhs: &PowerSeries, op: impl Fn(&Rat, &Rat) -> Rat) -> PowerSeries {
        PowerSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| op(a, b))
                .collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> PowerSeries {
        PowerSeries {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, rhs: &PowerSeries) -> PowerSeries {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|k| {
                (0..=k)
                    .filter(|&j| !self.coeffs[j].is_zero() && !rhs.coeffs[k - j].is_zero())
                    .map(|j| &self.coeffs[j] * &rhs.coeffs[k - j])
                    .sum()
            })
            .collect();
        PowerSeries { coeffs }
    }

    pub fn pow(&self, mut exp: u32) -> PowerSeries {
        let mut base = self.clone();
        let mut acc = PowerSeries::one(self.order());
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base);
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Multiplicative inverse, `g_k = -(f_1 g_{k-1} + ... + f_k g_0) / f_0`.
    pub fn inv(&self) -> Result<PowerSeries> {
        let f0_inv = self.coeffs[0].recip().map_err(|_| Error::NotInvertible)?;
        let mut g: Vec<Rat> = Vec::with_capacity(self.coeffs.len());
        g.push(f0_inv.clone());
        for k in 1..=self.order() {
            let acc: Rat = (1..=k)
                .filter(|&j| !self.coeffs[j].is_zero())
                .map(|j| &self.coeffs[j] * &g[k - j])
                .sum();
            g.push(-(acc * &f0_inv));
        }
        Ok(PowerSeries { coeffs: g })
    }

    /// Square root with constant term 1, coefficient by coefficient:
    /// `2 s_k = f_k - (s_1 s_{k-1} + ... + s_{k-1} s_1)`.
    pub fn sqrt(&self) -> Result<PowerSeries> {
        self.check_radicand()?;
        let half = Rat::new(1, 2)?;
        let mut s: Vec<Rat> = Vec::with_capacity(self.coeffs.len());
        s.push(Rat::one());
        for k in 1..=self.order() {
            let cross: Rat = (1..k).map(|j| &s[j] * &s[k - j]).sum();
            s.push((&self.coeffs[k] - &cross) * &half);
        }
        Ok(PowerSeries { coeffs: s })
    }

    /// Square root by Newton iteration `s <- (s + f/s) / 2`, doubling the
    /// number of correct coefficients each round.
    pub fn sqrt_newton(&self) -> Result<PowerSeries> {
        self.check_radicand()?;
        let half = Rat::new(1, 2)?;
        let target = self.order();
        let mut s = PowerSeries::one(0);
        let mut known = 1;
        while known <= target {
            known = (2 * known).min(target + 1);
            let order = known - 1;
            let s_ext = s.extend_zero(order);
            let f = self.clone().truncate(order);
            s = s_ext.add(&f.mul(&s_ext.inv()?)).scale(&half);
        }
        Ok(s)
    }

    fn check_radicand(&self) -> Result<()> {
        if self.coeffs[0].is_one() {
            Ok(())
        } else {
            Err(Error::UnsupportedRadicand(self.coeffs[0].to_string()))
        }
    }

    fn extend_zero(&self, order: usize) -> PowerSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, Rat::zero());
        PowerSeries { coeffs }
    }

    /// Exact division by `t^k`. Fails if any coefficient below `t^k` is nonzero.
    pub fn shift_div(&self, k: usize) -> Result<PowerSeries> {
        if k > self.order() {
            return Err(Error::ShiftTooLarge {
                order: self.order(),
                k,
            });
        }
        if let Some((index, value)) = self.coeffs[..k]
            .iter()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
        {
            return Err(Error::NotDivisible {
                k,
                index,
                value: value.to_string(),
            });
        }
        Ok(PowerSeries {
            coeffs: self.coeffs[k..].to_vec(),
        })
    }

    /// Multiplication by `t^k`, raising the order by `k`.
    pub fn shift_mul(&self, k: usize) -> PowerSeries {
        let mut coeffs = vec![Rat::zero(); k];
        coeffs.extend_from_slice(&self.coeffs);
        PowerSeries { coeffs }
    }
}

impl fmt::Debug for PowerSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})t")?,
                _ => write!(f, "({c})t^{k}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(t^{})", self.order() + 1)
    }
}

pub fn ps_mul(f: &PowerSeries, g: &PowerSeries) -> PowerSeries {
    f.mul(g)
}

pub fn ps_inv(f: &PowerSeries) -> Result<PowerSeries> {
    f.inv()
}

pub fn ps_sqrt(f: &PowerSeries) -> Result<PowerSeries> {
    f.sqrt()
}

pub fn ps_shift_div(f: &PowerSeries, k: usize) -> Result<PowerSeries> {
    f.shift_div(k)
}
