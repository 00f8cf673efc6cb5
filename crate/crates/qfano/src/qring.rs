//! The restricted quantum ring `QH^*(X)^res` as a free `Q[q]`-module on
//! the quantum powers of a single generator, with Givental's relation
//! as the reduction rule, in two bases:
//!
//! * `HStar`: basis `1, H, …, H^{⋆r}`. Strict Fano reduction
//!   `T^{r+1} = m^m q T^{r+1−d}`; on the borderline the relation
//!   expands into a multi-term rule (one `q^j T^{r+1−j}` per `j`).
//! * `Shifted` (borderline only): basis `(H + m!q)^{⋆i}` with the
//!   single-term reduction `T^{r+1} = m^m q T^{r}`.
//!
//! The classical cup powers `H^t` exist only as outputs of the basis
//! change [`classical_to_star`], whose coefficients come from the
//! two-point invariants of [`crate::gw`].

use num_traits::Zero;

use crate::gw::GWTable;
use crate::rational::{binomial, rat, Rat};
use crate::series::QPolynomial;
use crate::space::FanoSpace;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Quantum powers of the hyperplane class.
    HStar,
    /// Quantum powers of `H + m!q`; borderline spaces only.
    Shifted,
}

impl Basis {
    pub fn tag(&self) -> &'static str {
        match self {
            Basis::HStar => "H_star",
            Basis::Shifted => "H_shifted",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingContext {
    pub space: FanoSpace,
    pub basis: Basis,
}

impl RingContext {
    pub fn new(space: FanoSpace, basis: Basis) -> Result<Self> {
        if basis == Basis::Shifted && !space.borderline {
            return Err(Error::BasisMismatch(
                "the shifted basis requires a borderline space (|m| = r+L)".into(),
            ));
        }
        Ok(Self { space, basis })
    }

    pub fn hstar(space: FanoSpace) -> Self {
        Self {
            space,
            basis: Basis::HStar,
        }
    }

    pub fn shifted(space: FanoSpace) -> Result<Self> {
        Self::new(space, Basis::Shifted)
    }

    /// The reduction of `T^{r+1}` as `(index drop, q-power, coefficient)`
    /// triples; every drop is at least 1, so reduction terminates.
    fn reduction_rule(&self) -> Vec<(u32, u32, Rat)> {
        let space = &self.space;
        let m_m = space.m_power(1, 0);
        match (self.basis, space.borderline) {
            (Basis::Shifted, _) => vec![(1, 1, m_m)],
            (Basis::HStar, false) => vec![(space.fano_index, 1, m_m)],
            (Basis::HStar, true) => {
                // magic relation rewritten one q-power at a time:
                // T^{r+1} = Σ_j C(r,j−1)(m!)^{j−1}[m^m − (m!/j)(r+1)] q^j T^{r+1−j}
                let r = space.r as i64;
                let m_fact = rat(space.m_factorial.clone());
                (1..=space.r + 1)
                    .map(|j| {
                        let c = rat(binomial(r, j as i64 - 1))
                            * m_fact.clone().pow(j as i32 - 1)
                            * (m_m.clone() - m_fact.clone() * rat(r + 1) / rat(j as i64));
                        (j, j, c)
                    })
                    .collect()
            }
        }
    }

    /// Coefficient of `q^j T^{r+1−j·drop-unit}` in the reduction of
    /// `T^{r+1}` — the magic-relation coefficients this context's rule
    /// encodes, indexed like [`hstar_top_coefficients`].
    pub fn magic_coefficients(&self) -> Vec<Rat> {
        let space = &self.space;
        let d = space.fano_index;
        let max_j = (space.r + 1) / d;
        let rule = self.reduction_rule();
        (1..=max_j)
            .map(|j| {
                rule.iter()
                    .find(|(drop, qp, _)| *qp == j && *drop == j * d)
                    .map(|(_, _, c)| c.clone())
                    .unwrap_or_else(Rat::zero)
            })
            .collect()
    }
}

/// An element of the ring: coefficient `i` multiplies the basis element
/// `T^{⋆i}` where `T` is `H` or `H + m!q` depending on the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RingElement {
    pub context: RingContext,
    coeffs: Vec<QPolynomial>,
}

impl RingElement {
    pub fn zero(context: RingContext) -> Self {
        let n = context.space.r as usize + 1;
        Self {
            context,
            coeffs: vec![QPolynomial::zero(); n],
        }
    }

    /// The basis element `T^{⋆i}`.
    pub fn basis_element(context: RingContext, i: u32) -> Self {
        let mut el = Self::zero(context);
        el.coeffs[i as usize] = QPolynomial::constant(rat(1));
        el
    }

    pub fn unit(context: RingContext) -> Self {
        Self::basis_element(context, 0)
    }

    pub fn from_coeffs(context: RingContext, coeffs: Vec<QPolynomial>) -> Self {
        assert_eq!(coeffs.len(), context.space.r as usize + 1);
        Self { context, coeffs }
    }

    pub fn coeffs(&self) -> &[QPolynomial] {
        &self.coeffs
    }

    /// Coefficient of `q^q_power T^{⋆basis_index}`.
    pub fn coefficient(&self, basis_index: u32, q_power: u32) -> Rat {
        self.coeffs
            .get(basis_index as usize)
            .map(|p| p.get(q_power))
            .unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(QPolynomial::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.add_assign(b);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            a.sub_assign(b);
        }
        Ok(out)
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        Self {
            context: self.context.clone(),
            coeffs: self.coeffs.iter().map(|p| p.scale(factor)).collect(),
        }
    }

    /// Multiplies every coefficient by `c · q^power`.
    pub fn mul_monomial(&self, power: u32, c: &Rat) -> Self {
        Self {
            context: self.context.clone(),
            coeffs: self.coeffs.iter().map(|p| p.mul_monomial(power, c)).collect(),
        }
    }

    fn check_context(&self, other: &Self) -> Result<()> {
        if self.context != other.context {
            return Err(Error::BasisMismatch(
                "ring elements come from different contexts".into(),
            ));
        }
        Ok(())
    }

    /// Star product: convolution in the generator followed by repeated
    /// reduction of all powers above `r`.
    pub fn star_mul(&self, other: &Self) -> Result<Self> {
        self.check_context(other)?;
        let r = self.context.space.r as usize;
        let mut raw = vec![QPolynomial::zero(); 2 * r + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j].add_assign(&a.mul(b));
                }
            }
        }
        Ok(Self {
            context: self.context.clone(),
            coeffs: reduce(&self.context, raw),
        })
    }

    /// `self^{⋆n}` by binary exponentiation; `n = 0` gives the unit.
    pub fn star_pow(&self, n: u32) -> Result<Self> {
        let mut acc = Self::unit(self.context.clone());
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.star_mul(&base)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.star_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// For a homogeneous element, `basis-index + d·(q-power)` is the
    /// same for every term; returns that value, or `None` if mixed.
    /// The zero element reports degree `Some(0)`.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let d = self.context.space.fano_index as i64;
        let mut degree: Option<i64> = None;
        for (i, p) in self.coeffs.iter().enumerate() {
            for (qp, c) in p.iter() {
                if c.is_zero() {
                    continue;
                }
                let deg = i as i64 + d * qp as i64;
                match degree {
                    None => degree = Some(deg),
                    Some(existing) if existing != deg => return None,
                    _ => {}
                }
            }
        }
        degree.or(Some(0))
    }

    /// Triangular basis change `HStar ↔ Shifted` on a borderline space:
    /// substitutes `H = (H + m!q) − m!q` or its inverse. An exact
    /// involution up to the basis tag.
    pub fn shift_basis(&self) -> Result<Self> {
        let space = &self.context.space;
        if !space.borderline {
            return Err(Error::BasisMismatch(
                "basis shift is defined only on borderline spaces".into(),
            ));
        }
        let (target, sign) = match self.context.basis {
            Basis::HStar => (Basis::Shifted, -1i64),
            Basis::Shifted => (Basis::HStar, 1i64),
        };
        let m_fact = rat(space.m_factorial.clone()) * rat(sign);
        let r = space.r as usize;
        let mut out = vec![QPolynomial::zero(); r + 1];
        for (i, p) in self.coeffs.iter().enumerate() {
            if p.is_zero() {
                continue;
            }
            // T^{⋆i} = Σ_{j ≤ i} C(i,j) (±m!·q)^{i−j} S^{⋆j}
            for j in 0..=i {
                let factor =
                    rat(binomial(i as i64, j as i64)) * m_fact.clone().pow((i - j) as i32);
                out[j].add_assign(&p.mul_monomial((i - j) as u32, &factor));
            }
        }
        Ok(Self {
            context: RingContext::new(space.clone(), target)?,
            coeffs: out,
        })
    }

    /// Nonzero terms as `(basis_index, q_power, coefficient)` triples in
    /// deterministic order.
    pub fn terms(&self) -> Vec<(u32, u32, Rat)> {
        let mut out = Vec::new();
        for (i, p) in self.coeffs.iter().enumerate() {
            for (qp, c) in p.iter() {
                out.push((i as u32, qp, c.clone()));
            }
        }
        out
    }
}

/// Pushes every power of the generator above `r` down through the
/// context's reduction rule. The top power strictly decreases.
fn reduce(context: &RingContext, mut raw: Vec<QPolynomial>) -> Vec<QPolynomial> {
    let r = context.space.r as usize;
    let rule = context.reduction_rule();
    for t in (r + 1..raw.len()).rev() {
        if raw[t].is_zero() {
            continue;
        }
        let entry = std::mem::take(&mut raw[t]);
        for (drop, q_power, c) in &rule {
            let target = t - *drop as usize;
            raw[target].add_assign(&entry.mul_monomial(*q_power, c));
        }
    }
    raw.truncate(r + 1);
    raw
}

/// The classical cup power `H^t` expanded in the `H^{⋆i}` basis,
/// computed iteratively through the divisor equation:
/// `H^t = H ⋆ H^{t−1} − Σ_k k·α^k_{r−(t−kd)} q^k H^{t−kd}` with every
/// classical power replaced by its (already known) expansion.
pub fn classical_to_star(context: &RingContext, table: &mut GWTable, t: u32) -> Result<RingElement> {
    Ok(classical_expansions(context, table, t)?.pop().unwrap())
}

/// Expansions of `H^0, …, H^t`, in order.
fn classical_expansions(
    context: &RingContext,
    table: &mut GWTable,
    t: u32,
) -> Result<Vec<RingElement>> {
    if context.basis != Basis::HStar {
        return Err(Error::BasisMismatch(
            "classical powers are expanded in the H-star basis".into(),
        ));
    }
    let space = &context.space;
    let r = space.r;
    if t > r {
        return Err(Error::OutOfRange(format!(
            "classical power H^{t} exceeds the dimension {r}"
        )));
    }
    let d = space.fano_index;
    table.ensure_k_max(t / d.max(1));
    let h = RingElement::basis_element(context.clone(), 1.min(r));
    let mut exps = vec![RingElement::unit(context.clone())];
    for s in 1..=t {
        // top index of exps[s-1] is s-1 < r, so no reduction fires here
        let mut next = h.star_mul(&exps[s as usize - 1])?;
        for k in 1..=s / d {
            let coeff = table.alpha(k, (r + k * d) as i64 - s as i64) * rat(k);
            if coeff.is_zero() {
                continue;
            }
            let correction = exps[(s - k * d) as usize].mul_monomial(k, &coeff);
            next = next.sub(&correction)?;
        }
        exps.push(next);
    }
    Ok(exps)
}

/// The closed nested-sum formula for `Coeff(H^i, q^j H^{⋆(i−jd)})`:
/// an independent oracle for [`classical_to_star`].
///
/// `Σ_{ℓ=1}^{j} (−1)^ℓ Σ_{i_1+…+i_ℓ=j} Σ_{0 ≤ u_ℓ ≤ … ≤ u_1 ≤ i−jd}
///  ∏_a i_a α^{i_a}_{r−(j−i_1−…−i_a)d−u_a}`
pub fn hstar_coeff_closed_form(
    context: &RingContext,
    table: &mut GWTable,
    i: u32,
    j: u32,
) -> Rat {
    let space = &context.space;
    let (r, d) = (space.r as i64, space.fano_index as i64);
    let (i, j) = (i as i64, j as i64);
    if i > r || j < 1 || j > i / d {
        return Rat::zero();
    }
    table.ensure_k_max(j as u32);
    let u_bound = i - j * d;
    let mut total = Rat::zero();
    for parts in compositions(j) {
        let sign = if parts.len() % 2 == 0 { rat(1) } else { rat(-1) };
        // weakly decreasing u-tuples, built from the innermost index up
        let mut stack: Vec<(usize, i64, Rat)> = vec![(0, u_bound, rat(1))];
        while let Some((depth, max_u, partial)) = stack.pop() {
            if depth == parts.len() {
                total += sign.clone() * partial;
                continue;
            }
            let prefix: i64 = parts[..=depth].iter().sum();
            for u in 0..=max_u {
                let alpha = table.alpha(parts[depth] as u32, r - (j - prefix) * d - u);
                if alpha.is_zero() {
                    continue;
                }
                let factor = rat(parts[depth]) * alpha;
                stack.push((depth + 1, u, partial.clone() * factor));
            }
        }
    }
    total
}

/// All compositions of `n` into positive parts.
fn compositions(n: i64) -> Vec<Vec<i64>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for mut rest in compositions(n - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// The `q^j` coefficients of `H^{⋆(r+1)}` in the `HStar` basis, indexed
/// by `j = 1, …` while `r+1−jd ≥ 0`, computed purely from the GW
/// recursion (never through the reduction rule, so the result can be
/// checked against the magic relation).
pub fn hstar_top_coefficients(context: &RingContext, table: &mut GWTable) -> Result<Vec<Rat>> {
    let space = &context.space;
    let (r, d) = (space.r, space.fano_index);
    table.ensure_k_max((r + 1) / d);
    let exps = classical_expansions(context, table, r)?;
    // raw[i] holds the q-polynomial multiplying e_i in H^{⋆(r+1)}
    let mut raw = vec![QPolynomial::zero(); r as usize + 2];
    // H ⋆ H^r = Σ_k k α^k_{kd−1} q^k · (expansion of H^{r+1−kd});
    // the classical H^{r+1} vanishes in dimension r
    for k in 1..=(r + 1) / d {
        let coeff = table.alpha(k, (k * d) as i64 - 1) * rat(k);
        if coeff.is_zero() {
            continue;
        }
        let term = exps[(r + 1 - k * d) as usize].mul_monomial(k, &coeff);
        for (idx, p) in term.coeffs().iter().enumerate() {
            raw[idx].add_assign(p);
        }
    }
    // H^{⋆(r+1)} = H ⋆ H^r − Σ_{j≥1} Coeff(H^r, q^j e_{r−jd}) q^j e_{r+1−jd}
    for j in 1..=r / d {
        let gamma = exps[r as usize].coefficient(r - j * d, j);
        raw[(r + 1 - j * d) as usize].add_term(j, &-gamma);
    }
    Ok((1..=(r + 1) / d)
        .map(|j| raw[(r + 1 - j * d) as usize].get(j))
        .collect())
}

/// The point class `P = m⁻¹ H^r` in the `HStar` basis.
pub fn point_class(context: &RingContext, table: &mut GWTable) -> Result<RingElement> {
    Ok(classical_to_star(context, table, context.space.r)?.scale(&context.space.m_inverse()))
}
