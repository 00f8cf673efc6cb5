//! Genus-0 two-point hyperplane descendant Gromov–Witten invariants
//! `⟨τ_a(H^i), H^j⟩_{0,k}`, memoized, built from a hypergeometric base
//! case (second insertion 1) and a recursion that trades the second
//! insertion's exponent for curve degree.
//!
//! Any invariant whose H-exponent leaves `[0, r]`, whose ψ-power is
//! negative, or whose dimension constraint fails evaluates to zero.

use std::collections::HashMap;

use num_traits::Zero;

use crate::rational::{factorial, rat, Rat};
use crate::series::TruncatedSeries;
use crate::space::FanoSpace;
use crate::{Error, Result};

/// Key of `⟨τ_a(H^i), H^j⟩_{0,k}` with `j = r + k·d − 1 − a − i` forced
/// by the virtual dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DescendantKey {
    /// Curve degree k ≥ 1.
    pub k: u32,
    /// ψ-power on the first marking.
    pub a: u32,
    /// H-power on the first marking.
    pub i: u32,
}

impl DescendantKey {
    /// The forced H-power on the second marking; may be negative for an
    /// inconsistent key.
    pub fn second_exponent(&self, space: &FanoSpace) -> i64 {
        vdim_02(space, self.k) - self.a as i64 - self.i as i64
    }
}

/// vdim of the two-point genus-0 space in degree k: `r + k·d − 1`.
pub fn vdim_02(space: &FanoSpace, k: u32) -> i64 {
    space.r as i64 + (k * space.fano_index) as i64 - 1
}

/// Memo table of descendant invariants for one space.
///
/// A single logical writer: all methods take `&mut self`, and every
/// returned value is independent of evaluation order.
pub struct GWTable {
    space: FanoSpace,
    memo: HashMap<DescendantKey, Rat>,
    k_max: u32,
}

impl GWTable {
    pub fn new(space: FanoSpace, k_max: u32) -> Self {
        Self {
            space,
            memo: HashMap::new(),
            k_max,
        }
    }

    pub fn space(&self) -> &FanoSpace {
        &self.space
    }

    pub fn k_max(&self) -> u32 {
        self.k_max
    }

    /// Grows the curve-degree bound on demand; never shrinks it.
    pub fn ensure_k_max(&mut self, k: u32) {
        self.k_max = self.k_max.max(k);
    }

    pub fn clear_memo(&mut self) {
        self.memo.clear();
    }

    pub fn memo_entries(&self) -> impl Iterator<Item = (&DescendantKey, &Rat)> {
        self.memo.iter()
    }

    /// Inserts a precomputed entry (cache loading); the caller is
    /// responsible for having verified that it belongs to this space.
    pub fn insert_entry(&mut self, key: DescendantKey, value: Rat) {
        self.ensure_k_max(key.k);
        self.memo.insert(key, value);
    }

    /// `⟨τ_a(H^i), H^j⟩_{0,k}` for a consistent key.
    pub fn descendant(&mut self, key: DescendantKey) -> Result<Rat> {
        if key.k == 0 {
            return Err(Error::OutOfRange("curve degree k must be positive".into()));
        }
        if key.k > self.k_max {
            return Err(Error::CurveDegreeBound {
                requested: key.k,
                bound: self.k_max,
            });
        }
        if key.i > self.space.r || key.second_exponent(&self.space) < 0 {
            return Err(Error::OutOfRange(format!(
                "inconsistent descendant key k={}, a={}, i={}",
                key.k, key.a, key.i
            )));
        }
        Ok(self.eval(key.k, key.a as i64, key.i as i64))
    }

    /// `α^k_s = m⁻¹ ⟨H^{kd+(r−s)−1}, H^s⟩_{0,k}`; zero out of range.
    pub fn alpha(&mut self, k: u32, s: i64) -> Rat {
        let r = self.space.r as i64;
        let i = (k * self.space.fano_index) as i64 + (r - s) - 1;
        if s < 0 || s > r || i < 0 || i > r {
            return Rat::zero();
        }
        self.space.m_inverse() * self.eval(k, 0, i)
    }

    /// Core evaluation with the vanishing conventions applied; `a` and
    /// `i` may be out of range here (the value is then zero).
    fn eval(&mut self, k: u32, a: i64, i: i64) -> Rat {
        let r = self.space.r as i64;
        if a < 0 || i < 0 || i > r {
            return Rat::zero();
        }
        let j = vdim_02(&self.space, k) - a - i;
        if !(0..=r).contains(&j) {
            return Rat::zero();
        }
        let key = DescendantKey {
            k,
            a: a as u32,
            i: i as u32,
        };
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let value = if j == 0 {
            base_descendant(&self.space, k, i as u32)
        } else {
            // ⟨τ_a(H^i), H^j⟩ = ⟨τ_a(H^{i+1}), H^{j−1}⟩ + k⟨τ_{a+1}(H^i), H^{j−1}⟩
            //   − Σ_{ℓ=1}^{k−1} m⁻¹ (k−ℓ) ⟨τ_a(H^i), ·⟩_{0,ℓ} ⟨H^{j−1}, ·⟩_{0,k−ℓ}
            // The boundary term is weighted by the degree of the component
            // carrying the divisor point. Each call decreases (k, j)
            // lexicographically.
            let mut value = self.eval(k, a, i + 1) + self.eval(k, a + 1, i) * rat(k);
            let m_inv = self.space.m_inverse();
            for l in 1..k {
                let first = self.eval(l, a, i);
                if first.is_zero() {
                    continue;
                }
                let second = self.eval(k - l, 0, j - 1);
                if second.is_zero() {
                    continue;
                }
                value -= &m_inv * rat(k - l) * first * second;
            }
            value
        };
        self.memo.insert(key, value.clone());
        value
    }
}

/// The base case `⟨τ_{r+kd−1−i}(H^i), 1⟩_{0,k}` as a Taylor coefficient
/// of a rational function in one variable.
///
/// Strict Fano: the coefficient of `x^{r+L−i}` in
/// `∏_j ∏_{ℓ=0}^{k m_j} (m_j x + ℓ) / ∏_{ℓ=1}^{k} (x+ℓ)^{r+L+1}`.
/// Borderline: `Σ_{h=0}^{k} (−m!)^{k−h}/(k−h)!` times the same
/// coefficient with `k` replaced by `h`; at `h = 0` the ℓ-product still
/// contributes its ℓ = 0 factor, so the series is `∏_j m_j·x`, not 1.
pub fn base_descendant(space: &FanoSpace, k: u32, i: u32) -> Rat {
    assert!(i <= space.r, "base case needs 0 <= i <= r");
    assert!(k >= 1);
    if !space.borderline {
        return base_coefficient(space, k, i);
    }
    let m_fact = rat(space.m_factorial.clone());
    let mut total = Rat::zero();
    for h in 0..=k {
        let inner = base_coefficient(space, h, i);
        if inner.is_zero() {
            continue;
        }
        let sign = if (k - h) % 2 == 0 { rat(1) } else { rat(-1) };
        let prefactor = sign * m_fact.clone().pow((k - h) as i32)
            / rat(factorial((k - h) as u64));
        total += prefactor * inner;
    }
    total
}

fn base_coefficient(space: &FanoSpace, k: u32, i: u32) -> Rat {
    let order = (space.r + space.codim) as usize;
    let target = (space.r + space.codim - i) as usize;
    let mut numer = TruncatedSeries::one(order);
    for m in space.degrees.iter() {
        for l in 0..=(k * m) {
            let factor = TruncatedSeries::linear(rat(l), rat(m), order);
            numer = numer.mul_truncated(&factor, order).unwrap();
        }
    }
    let mut denom = TruncatedSeries::one(order);
    for l in 1..=k {
        let factor = TruncatedSeries::linear(rat(l), rat(1), order);
        for _ in 0..(space.r + space.codim + 1) {
            denom = denom.mul_truncated(&factor, order).unwrap();
        }
    }
    // denominator constant term is (k!)^{r+L+1}, never zero
    let expansion = numer
        .mul_truncated(&denom.invert_truncated(order).unwrap(), order)
        .unwrap();
    expansion.coefficient(target).unwrap().clone()
}
