//! The quantum Euler class `E`, computed two independent ways.
//!
//! The closed route evaluates the explicit formula (scalars only); the
//! constructive route assembles `E = Γ + E′` from the diagonal sum
//! `E′ = m⁻¹ Σ_i H^i ⋆ H^{r−i}` and the primitive contribution `Γ`,
//! which only needs the primitive rank and the `H^{⋆(r+1)}`
//! coefficients. Their exact agreement is the computational content of
//! the main structure theorem.

use num_traits::Zero;

use crate::gw::GWTable;
use crate::qring::{classical_to_star, hstar_top_coefficients, Basis, RingContext, RingElement};
use crate::rational::{binomial, rat, Rat};
use crate::{Error, Result};

/// `E` by the closed formula, in the `HStar` basis.
///
/// Strict: `E = m⁻¹χ H^{⋆r} + (r+L+1−|m|−χ) m^{m−1} q H^{⋆(r−d)}`.
/// Borderline: `E = m⁻¹χ H^{⋆r} +
///   Σ_{j=1}^{r} m⁻¹(j−χ) C(r,j−1) (m!)^{j−1} [m^m − (m!/j)(r+1)] q^j H^{⋆(r−j)}`.
pub fn euler_closed(context: &RingContext) -> Result<RingElement> {
    if context.basis != Basis::HStar {
        return Err(Error::BasisMismatch(
            "the closed Euler formula is stated in the H-star basis".into(),
        ));
    }
    let space = &context.space;
    let r = space.r;
    let chi = space.chi();
    let mut e = RingElement::basis_element(context.clone(), r).scale(&(space.m_inverse() * &chi));
    if !space.borderline {
        let d = space.fano_index;
        let coeff = (rat(d as i64) - &chi) * space.m_power(1, -1);
        e = e.add(&RingElement::basis_element(context.clone(), r - d).mul_monomial(1, &coeff))?;
    } else {
        let m_fact = rat(space.m_factorial.clone());
        let m_m = space.m_power(1, 0);
        for j in 1..=r {
            let coeff = space.m_inverse()
                * (rat(j as i64) - &chi)
                * rat(binomial(r as i64, j as i64 - 1))
                * m_fact.clone().pow(j as i32 - 1)
                * (m_m.clone() - m_fact.clone() * rat(r as i64 + 1) / rat(j as i64));
            e = e.add(&RingElement::basis_element(context.clone(), r - j).mul_monomial(j, &coeff))?;
        }
    }
    Ok(e)
}

/// The primitive-diagonal contribution
/// `Γ = m⁻¹(χ−r−1) H^{⋆r} + m⁻¹(r+1−χ) Σ_j C_j q^j H^{⋆(r−jd)}`,
/// with `C_j` the `H^{⋆(r+1)}` coefficients from the GW recursion.
/// Satisfies `H ⋆ Γ = 0` for strict spaces; see [`gamma_h_product`]
/// for the borderline residual.
pub fn gamma_element(context: &RingContext, table: &mut GWTable) -> Result<RingElement> {
    let space = &context.space;
    let r = space.r;
    let d = space.fano_index;
    let m_inv = space.m_inverse();
    let chi = space.chi();
    let leading = m_inv.clone() * (chi.clone() - rat(r as i64 + 1));
    let mut gamma = RingElement::basis_element(context.clone(), r).scale(&leading);
    let tops = hstar_top_coefficients(context, table)?;
    for j in 1..=r / d {
        let c = &tops[j as usize - 1];
        if c.is_zero() {
            continue;
        }
        let coeff = m_inv.clone() * (rat(r as i64 + 1) - &chi) * c;
        gamma =
            gamma.add(&RingElement::basis_element(context.clone(), r - j * d).mul_monomial(j, &coeff))?;
    }
    Ok(gamma)
}

/// The exact value of `H ⋆ Γ`.
///
/// Strict spaces: zero, since `H^{⋆(r+1)}` reduces to a single monomial
/// which the `q H^{⋆(r+1−d)}` coefficient of `Γ` cancels. Borderline
/// spaces: multiplication by `H` is injective on the restricted span
/// (reducing `H^{⋆(r+1)}` leaves an uncancelled `q^{r+1} H^{⋆0}` term),
/// so the product collapses to the single monomial
/// `m⁻¹(χ−r−1) C_{r+1} q^{r+1} H^{⋆0}` instead of vanishing.
pub fn gamma_h_product(context: &RingContext, table: &mut GWTable) -> Result<RingElement> {
    let space = &context.space;
    if !space.borderline {
        return Ok(RingElement::zero(context.clone()));
    }
    let r = space.r;
    let tops = hstar_top_coefficients(context, table)?;
    let coeff = space.m_inverse()
        * (space.chi() - rat(r as i64 + 1))
        * tops.last().expect("borderline tops are never empty");
    Ok(RingElement::basis_element(context.clone(), 0).mul_monomial(r + 1, &coeff))
}

/// `E′ = m⁻¹ Σ_{i=0}^{r} H^i ⋆ H^{r−i}` with the classical powers
/// expanded through the GW table.
pub fn euler_diagonal_restricted(context: &RingContext, table: &mut GWTable) -> Result<RingElement> {
    let space = &context.space;
    let r = space.r;
    let exps: Vec<RingElement> = (0..=r)
        .map(|i| classical_to_star(context, table, i))
        .collect::<Result<_>>()?;
    let mut sum = RingElement::zero(context.clone());
    for i in 0..=r as usize {
        sum = sum.add(&exps[i].star_mul(&exps[r as usize - i])?)?;
    }
    Ok(sum.scale(&space.m_inverse()))
}

/// `E = Γ + E′` assembled constructively.
pub fn euler_constructive(context: &RingContext, table: &mut GWTable) -> Result<RingElement> {
    let gamma = gamma_element(context, table)?;
    let diag = euler_diagonal_restricted(context, table)?;
    gamma.add(&diag)
}

/// `E` expressed in the shifted `(H + m!q)^{⋆i}` basis; borderline only.
pub fn euler_shifted(context: &RingContext) -> Result<RingElement> {
    euler_closed(context)?.shift_basis()
}

/// Expected shifted-basis coefficient of `q^j (H+m!q)^{⋆(r−j)}` in `E`,
/// from the change-of-basis lemma; used to cross-check [`euler_shifted`].
pub fn shifted_euler_coefficient(context: &RingContext, j: u32) -> Result<Rat> {
    let space = &context.space;
    if !space.borderline {
        return Err(Error::BasisMismatch(
            "the shifted Euler expansion needs a borderline space".into(),
        ));
    }
    let r = space.r;
    let chi = space.chi();
    let m_inv = space.m_inverse();
    let m_fact = rat(space.m_factorial.clone());
    let m_m = space.m_power(1, 0);
    Ok(match j {
        0 => m_inv * chi,
        1 => {
            m_inv * (rat(r as i64 + 1) - chi) * (m_m - &m_fact)
                - space.m_power(1, -1) * rat(r as i64)
        }
        _ if j <= r => {
            m_inv
                * m_fact.clone().pow(j as i32 - 1)
                * (rat(r as i64 + 1) - chi)
                * (m_m - m_fact)
        }
        _ => Rat::zero(),
    })
}
