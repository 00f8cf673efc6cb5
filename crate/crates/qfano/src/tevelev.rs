//! Virtual Tevelev degrees: the virtual count of genus-g degree-k maps
//! with fixed general complex structure through n general points.
//!
//! Two routes are computed for every query: direct ring arithmetic
//! `m¹ · Coeff(P^{⋆n} ⋆ E^{⋆g}, q^k H^{⋆r})` and the closed formula in
//! terms of the point-class coefficients `P_i` and the discrepancy.

use num_traits::Zero;

use crate::euler::euler_closed;
use crate::gw::GWTable;
use crate::qring::{point_class, RingContext, RingElement};
use crate::rational::{rat, Rat};
use crate::space::FanoSpace;
use crate::{Error, Result};

/// A Tevelev query `(g, n)` with the forced curve degree `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TevelevQuery {
    pub g: u32,
    pub n: u32,
    pub k: u32,
}

/// `k[g,n] = r(n+g−1)/d`; errors when stability fails or the degree is
/// not an integer (no Tevelev degree is defined for that pair).
pub fn k_of(space: &FanoSpace, g: u32, n: u32) -> Result<u32> {
    if 2 * g as i64 - 2 + n as i64 <= 0 {
        return Err(Error::InvalidQuery(format!(
            "(g, n) = ({g}, {n}) violates the stability condition 2g-2+n > 0"
        )));
    }
    let numerator = space.r * (n + g - 1);
    if numerator % space.fano_index != 0 {
        return Err(Error::InvalidQuery(format!(
            "no Tevelev degree for (g, n) = ({g}, {n}): k = {numerator}/{} is not an integer",
            space.fano_index
        )));
    }
    Ok(numerator / space.fano_index)
}

/// The full decomposition of one query.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TevelevBreakdown {
    pub query: TevelevQuery,
    /// Point-class coefficients `P_0 … P_{⌊r/d⌋}` (shifted basis on the
    /// borderline).
    pub p_coeffs: Vec<Rat>,
    /// `b_0 … b_{⌊r/d⌋}`: coefficients of `Z = P^{⋆n} ⋆ E^{⋆g}` at
    /// `q^{i+k}` and basis index `r−id` (resp. `r−i` shifted).
    pub b_coeffs: Vec<Rat>,
    pub discrepancy: Rat,
    /// `m¹ · b_0`.
    pub value_direct: Rat,
    /// The closed-formula value; equals `value_direct`.
    pub value_closed: Rat,
    /// Nonzero terms of `Z` outside the `b`-window, reported rather
    /// than silently dropped.
    pub extra_terms: Vec<(u32, u32, Rat)>,
}

/// `P` and `E` in the basis all Tevelev arithmetic runs in: `HStar`
/// for strict spaces, `Shifted` end-to-end on the borderline.
fn working_elements(space: &FanoSpace, table: &mut GWTable) -> Result<(RingElement, RingElement)> {
    let hstar = RingContext::hstar(space.clone());
    let p = point_class(&hstar, table)?;
    let e = euler_closed(&hstar)?;
    if space.borderline {
        Ok((p.shift_basis()?, e.shift_basis()?))
    } else {
        Ok((p, e))
    }
}

/// The coefficients `P_i` of the point class, in the case-appropriate
/// basis, for `i = 0, …, ⌊r/d⌋`.
pub fn point_coefficients(space: &FanoSpace, table: &mut GWTable) -> Result<Vec<Rat>> {
    let (p, _) = working_elements(space, table)?;
    let (r, d) = (space.r, space.fano_index);
    Ok((0..=r / d).map(|i| p.coefficient(r - i * d, i)).collect())
}

/// Direct route: computes `Z = P^{⋆n} ⋆ E^{⋆g}` in the ring and reads
/// off the `b_i` window, the discrepancy and `vTev = m¹ b_0`.
pub fn tevelev_direct(space: &FanoSpace, table: &mut GWTable, g: u32, n: u32) -> Result<TevelevBreakdown> {
    let k = k_of(space, g, n)?;
    let query = TevelevQuery { g, n, k };
    let (p, e) = working_elements(space, table)?;
    let z = p.star_pow(n)?.star_mul(&e.star_pow(g)?)?;

    let (r, d) = (space.r, space.fano_index);
    debug_assert_eq!(
        z.homogeneous_degree(),
        Some((r * (n + g)) as i64),
        "Z fails the r(n+g-1) grading bookkeeping"
    );
    let window: Vec<(u32, u32)> = (0..=r / d)
        .map(|i| {
            if space.borderline {
                (r - i, i + k)
            } else {
                (r - i * d, i + k)
            }
        })
        .collect();
    let b_coeffs: Vec<Rat> = window
        .iter()
        .map(|&(idx, qp)| z.coefficient(idx, qp))
        .collect();
    let extra_terms: Vec<(u32, u32, Rat)> = z
        .terms()
        .into_iter()
        .filter(|(idx, qp, _)| !window.contains(&(*idx, *qp)))
        .collect();

    let value_direct = b_coeffs[0].clone() * rat(space.degree.clone());
    let discrepancy = discrepancy(space, &b_coeffs);
    let p_coeffs = point_coefficients(space, table)?;
    let value_closed = closed_value(space, &query, &p_coeffs, &discrepancy);
    Ok(TevelevBreakdown {
        query,
        p_coeffs,
        b_coeffs,
        discrepancy,
        value_direct,
        value_closed,
        extra_terms,
    })
}

/// `Disc = Σ_{i≥1} b_i m^{−im+1}`.
pub fn discrepancy(space: &FanoSpace, b_coeffs: &[Rat]) -> Rat {
    b_coeffs
        .iter()
        .enumerate()
        .skip(1)
        .filter(|(_, b)| !b.is_zero())
        .map(|(i, b)| b * space.m_power(-(i as i64), 1))
        .sum()
}

/// Closed route: evaluates the Tevelev formula from the `P_i`, the
/// genus factor and the discrepancy.
pub fn tevelev_closed(space: &FanoSpace, table: &mut GWTable, g: u32, n: u32) -> Result<Rat> {
    let breakdown = tevelev_direct(space, table, g, n)?;
    Ok(breakdown.value_closed)
}

fn closed_value(space: &FanoSpace, query: &TevelevQuery, p_coeffs: &[Rat], disc: &Rat) -> Rat {
    let base: Rat = p_coeffs
        .iter()
        .enumerate()
        .map(|(i, p)| p * space.m_power(-(i as i64), 0))
        .sum();
    let genus_factor = if space.borderline {
        let r = space.r as i64;
        rat(1) - space.m_power(-r, 0)
            * rat(space.m_factorial.clone()).pow(r as i32)
            * (rat(r + 1) - space.chi())
    } else {
        rat(space.fano_index as i64)
    };
    base.pow(query.n as i32) * genus_factor.pow(query.g as i32)
        * space.m_power(query.k as i64, 1 - query.g as i64)
        - disc
}
