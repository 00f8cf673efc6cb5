//! Truncated formal power series in one variable and sparse polynomials
//! in the quantum parameter `q`, both over exact rationals.
//!
//! Series are dense and short (orders stay near `r + L`); q-polynomials
//! are sparse maps keyed by the q-power.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Zero;

use crate::rational::{rat, Rat};
use crate::{Error, Result};

/// A power series known up to and including `x^order`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rat>,
}

impl TruncatedSeries {
    /// Builds a series from coefficients `c_0, …, c_N`.
    pub fn new(coeffs: Vec<Rat>) -> Self {
        assert!(!coeffs.is_empty(), "a series needs at least c_0");
        Self { coeffs }
    }

    pub fn constant(c: Rat, order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = c;
        Self { coeffs }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(rat(1), order)
    }

    /// `a + b·x`, padded with zeros up to `order`.
    pub fn linear(a: Rat, b: Rat, order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order + 1];
        coeffs[0] = a;
        if order >= 1 {
            coeffs[1] = b;
        }
        Self { coeffs }
    }

    /// The truncation order `N` (coefficients exist for `0..=N`).
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coefficient(&self, n: usize) -> Result<&Rat> {
        self.coeffs
            .get(n)
            .ok_or_else(|| Error::OutOfRange(format!("coefficient {n} of a series of order {}", self.order())))
    }

    /// Cauchy product of `self` and `other`, truncated at `order`.
    pub fn mul_truncated(&self, other: &Self, order: usize) -> Result<Self> {
        if self.order() < order || other.order() < order {
            return Err(Error::OutOfRange(format!(
                "product to order {order} from inputs of order {} and {}",
                self.order(),
                other.order()
            )));
        }
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Ok(Self { coeffs })
    }

    /// The series `b` with `self · b ≡ 1 mod x^{order+1}`.
    pub fn invert_truncated(&self, order: usize) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::OutOfRange(
                "cannot invert a series with zero constant term".into(),
            ));
        }
        let mut inv = vec![Rat::zero(); order + 1];
        inv[0] = c0.recip();
        for n in 1..=order {
            let mut acc = Rat::zero();
            for i in 1..=n {
                if let Some(a) = self.coeffs.get(i) {
                    if !a.is_zero() && !inv[n - i].is_zero() {
                        acc += a * &inv[n - i];
                    }
                }
            }
            inv[n] = -(acc / c0);
        }
        Ok(Self { coeffs: inv })
    }
}

/// A polynomial in `q` with exact rational coefficients; zero
/// coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct QPolynomial {
    terms: BTreeMap<u32, Rat>,
}

impl QPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rat) -> Self {
        Self::monomial(0, c)
    }

    pub fn monomial(power: u32, coeff: Rat) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(power, coeff);
        }
        Self { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^power` (zero if absent).
    pub fn get(&self, power: u32) -> Rat {
        self.terms.get(&power).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (u32, &Rat)> {
        self.terms.iter().map(|(p, c)| (*p, c))
    }

    pub fn add_term(&mut self, power: u32, coeff: &Rat) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(power).or_insert_with(Rat::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&power);
        }
    }

    pub fn add_assign(&mut self, other: &Self) {
        for (p, c) in other.iter() {
            self.add_term(p, c);
        }
    }

    pub fn sub_assign(&mut self, other: &Self) {
        for (p, c) in other.iter() {
            self.add_term(p, &-c.clone());
        }
    }

    pub fn scale(&self, factor: &Rat) -> Self {
        if factor.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(p, c)| (*p, c * factor)).collect(),
        }
    }

    /// Multiplies by `coeff · q^power`.
    pub fn mul_monomial(&self, power: u32, coeff: &Rat) -> Self {
        if coeff.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(p, c)| (p + power, c * coeff))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (p, c) in self.iter() {
            for (p2, c2) in other.iter() {
                out.add_term(p + p2, &(c * c2));
            }
        }
        out
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(p, c)| match p {
                0 => format!("{c}"),
                1 => format!("{c}*q"),
                _ => format!("{c}*q^{p}"),
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}
