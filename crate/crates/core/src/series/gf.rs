//! Generating functions of weighted Dyck paths.
//!
//! With `R(t) = sqrt(1 - 4 c1 c2 t^2)`:
//!
//! * `a(t) = (1 - R) / (2 c1 c2 t^2)` enumerates all Dyck paths by weight,
//! * `b(t) = (1 - R) / 2` the irreducible ones, and `c(t) = (c3/c2) b(t)` the
//!   irreducible ones by poids,
//! * `d(t) = 1 / (1 - c(t))` all paths returning to the axis by poids, and
//! * `d_i(t) = d(t) (c1 t a(t))^i` all paths ending at height `i`.
//!
//! Every division by a power of `t` goes through [`PowerSeries::shift_div`],
//! so a wrong low-order coefficient surfaces as an error instead of being
//! silently dropped.

use crate::error::{Error, Result};
use crate::numeric::Rat;
use crate::recurrence::WeightConfig;

use super::PowerSeries;

/// `sqrt(1 - 4 c1 c2 t^2)` to the given order.
fn radical(w: &WeightConfig, order: usize) -> Result<PowerSeries> {
    let k = Rat::from(4) * &w.c1 * &w.c2;
    PowerSeries::one(order)
        .sub(&PowerSeries::monomial(k, 2, order))
        .sqrt()
}

fn one_minus_radical(w: &WeightConfig, order: usize) -> Result<PowerSeries> {
    Ok(PowerSeries::one(order).sub(&radical(w, order)?))
}

fn require_c2(w: &WeightConfig) -> Result<()> {
    if w.c2.is_zero() {
        Err(Error::DegenerateWeights(
            "c2 = 0 leaves c(t) = (c3/c2) b(t) undefined",
        ))
    } else {
        Ok(())
    }
}

/// `a(t)`; the constant series 1 when `c1 c2 = 0`, since then only the empty
/// path returns to the axis.
pub fn gf_a(w: &WeightConfig, order: usize) -> Result<PowerSeries> {
    let c1c2 = &w.c1 * &w.c2;
    if c1c2.is_zero() {
        return Ok(PowerSeries::one(order));
    }
    let scale = (Rat::from(2) * c1c2).recip()?;
    Ok(one_minus_radical(w, order + 2)?.shift_div(2)?.scale(&scale))
}

/// `(b(t), c(t))`.
pub fn gf_b_c(w: &WeightConfig, order: usize) -> Result<(PowerSeries, PowerSeries)> {
    require_c2(w)?;
    let b = one_minus_radical(w, order)?.scale(&Rat::new(1, 2)?);
    let c = b.scale(&w.c3.checked_div(&w.c2)?);
    Ok((b, c))
}

/// `d(t) = d_0(t)`.
pub fn gf_d(w: &WeightConfig, order: usize) -> Result<PowerSeries> {
    let (_, c) = gf_b_c(w, order)?;
    PowerSeries::one(order).sub(&c).inv()
}

/// `d_i(t)`, whose `t^n` coefficient is `A(i, n)`.
///
/// The factor `c1 a(t)` is raised to the `i`-th power as an ordinary power
/// series and the `t^i` is applied at the end as a shift.
pub fn gf_d_i(w: &WeightConfig, i: usize, order: usize) -> Result<PowerSeries> {
    let d = gf_d(w, order)?;
    if i == 0 {
        return Ok(d);
    }
    if i > order {
        return Ok(PowerSeries::zero(order));
    }
    let inner = order - i;
    // (1 - R) / (2 c2 t^2) = c1 a(t)
    let step = one_minus_radical(w, inner + 2)?
        .shift_div(2)?
        .scale(&(Rat::from(2) * &w.c2).recip()?);
    let exp = u32::try_from(i).expect("height fits in u32");
    Ok(d.truncate(inner).mul(&step.pow(exp)).shift_mul(i))
}

fn require_tree_degree(m: u32) -> Result<()> {
    if m < 2 {
        Err(Error::InvalidDegree(
            m,
            "the closed form 2(m-1)/(m-2+m*sqrt(1-4(m-1)t^2)) degenerates for m < 2",
        ))
    } else {
        Ok(())
    }
}

/// Generating function of walks on the m-regular tree ending at distance `i`.
pub fn gf_f(m: u32, i: usize, order: usize) -> Result<PowerSeries> {
    require_tree_degree(m)?;
    gf_d_i(&WeightConfig::tree(m)?, i, order)
}

/// Same series as [`gf_f`], expanded straight from
/// `2(m-1) / (m-2 + m R) * ((1 - R) / (2(m-1) t))^i` with
/// `R = sqrt(1 - 4(m-1) t^2)`.
pub fn gf_f_closed_form(m: u32, i: usize, order: usize) -> Result<PowerSeries> {
    require_tree_degree(m)?;
    let m_rat = Rat::from(i64::from(m));
    let m1 = Rat::from(i64::from(m) - 1);
    let two_m1 = Rat::from(2) * &m1;
    let r = PowerSeries::one(order + 1)
        .sub(&PowerSeries::monomial(Rat::from(4) * &m1, 2, order + 1))
        .sqrt()?;
    let denom = PowerSeries::constant(&m_rat - &Rat::from(2), order)
        .add(&r.clone().truncate(order).scale(&m_rat));
    let lead = denom.inv()?.scale(&two_m1);
    let exp = u32::try_from(i).expect("height fits in u32");
    let bracket = PowerSeries::one(order + 1)
        .sub(&r)
        .shift_div(1)?
        .scale(&two_m1.recip()?);
    Ok(lead.mul(&bracket.pow(exp)))
}
