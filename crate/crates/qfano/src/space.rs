//! Validation of the input complete intersection and the scalar
//! invariants every other module consumes.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::rational::{factorial, int_pow, rat, Rat};
use crate::series::TruncatedSeries;
use crate::{Error, Result};

/// The degrees `m_1 ≤ … ≤ m_L` of the defining hypersurfaces.
///
/// Stored sorted so that cache keys and serialized output are
/// deterministic regardless of input order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeVector(Vec<u32>);

impl DegreeVector {
    pub fn new(mut degrees: Vec<u32>) -> Result<Self> {
        if degrees.is_empty() {
            return Err(Error::InvalidSpace("the degree list is empty".into()));
        }
        if let Some(&m) = degrees.iter().find(|&&m| m < 2) {
            return Err(Error::InvalidSpace(format!(
                "degree {m} is not allowed; every m_i must be at least 2 \
                 (a linear form m_i = 1 cuts down to a smaller ambient space)"
            )));
        }
        degrees.sort_unstable();
        Ok(Self(degrees))
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    /// Codimension L.
    pub fn len(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn is_empty(&self) -> bool {
        false // enforced nonempty at construction
    }

    /// Total degree |m|.
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }
}

/// A Fano complete intersection `X ⊂ P^{r+L}` with all derived scalars.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanoSpace {
    /// Complex dimension r ≥ 3.
    pub r: u32,
    pub degrees: DegreeVector,
    /// Codimension L.
    pub codim: u32,
    /// |m| = Σ m_i.
    pub total_degree: u32,
    /// Fano index d = r + L + 1 − |m| ≥ 1; deg q = 2d.
    pub fano_index: u32,
    /// deg X = ∏ m_i (the scalar m^1).
    pub degree: BigInt,
    /// m! = ∏ (m_i!).
    pub m_factorial: BigInt,
    /// Topological Euler characteristic χ(X).
    pub euler_char: BigInt,
    /// dim H^r(X)^prim = (−1)^r (χ − (r+1)).
    pub prim_rank: BigInt,
    /// |m| = r + L, equivalently d = 1 with the maximal total degree.
    pub borderline: bool,
}

/// Checks the inputs and derives every scalar invariant of X.
pub fn validate_space(r: u32, degrees: Vec<u32>) -> Result<FanoSpace> {
    if r < 3 {
        return Err(Error::InvalidSpace(format!(
            "dimension r = {r} is below the required r >= 3"
        )));
    }
    let degrees = DegreeVector::new(degrees)?;
    let codim = degrees.len();
    let total = degrees.total();
    if total > r + codim {
        return Err(Error::InvalidSpace(format!(
            "non-Fano input: |m| = {total} exceeds r + L = {}",
            r + codim
        )));
    }
    let fano_index = r + codim + 1 - total;
    let degree: BigInt = degrees.iter().map(BigInt::from).product();
    let m_factorial: BigInt = degrees.iter().map(|m| factorial(m as u64)).product();
    let euler_char = euler_characteristic(r, &degrees);
    let prim_sign = if r % 2 == 0 { 1 } else { -1 };
    let prim_rank = (euler_char.clone() - BigInt::from(r + 1)) * BigInt::from(prim_sign);
    debug_assert!(!prim_rank.is_negative());
    Ok(FanoSpace {
        r,
        borderline: total == r + codim,
        codim,
        total_degree: total,
        fano_index,
        degree,
        m_factorial,
        euler_char,
        prim_rank,
        degrees,
    })
}

/// χ(X) = deg X · [x^r] (1+x)^{r+L+1} / ∏_i (1 + m_i x).
///
/// Coefficient extraction from the total Chern series of T_X restricted
/// to X; the result is always an integer.
pub fn euler_characteristic(r: u32, degrees: &DegreeVector) -> BigInt {
    let order = r as usize;
    let mut numer = TruncatedSeries::one(order);
    let one_plus_x = TruncatedSeries::linear(rat(1), rat(1), order);
    for _ in 0..(r + degrees.len() + 1) {
        numer = numer.mul_truncated(&one_plus_x, order).unwrap();
    }
    let mut denom = TruncatedSeries::one(order);
    for m in degrees.iter() {
        let factor = TruncatedSeries::linear(rat(1), rat(m), order);
        denom = denom.mul_truncated(&factor, order).unwrap();
    }
    let chern = numer
        .mul_truncated(&denom.invert_truncated(order).unwrap(), order)
        .unwrap();
    let coeff = chern.coefficient(order).unwrap();
    let degree: BigInt = degrees.iter().map(BigInt::from).product();
    let chi = coeff * rat(degree);
    debug_assert!(chi.denom().is_one());
    chi.numer().clone()
}

impl FanoSpace {
    /// `m^{am+b} = ∏_i m_i^{a·m_i + b}`; negative exponents give exact
    /// rationals.
    pub fn m_power(&self, a: i64, b: i64) -> Rat {
        self.degrees
            .iter()
            .map(|m| int_pow(&BigInt::from(m), a * m as i64 + b))
            .product()
    }

    /// m⁻¹ = 1 / deg X.
    pub fn m_inverse(&self) -> Rat {
        rat(self.degree.clone()).recip()
    }

    pub fn chi(&self) -> Rat {
        rat(self.euler_char.clone())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;
    use num_traits::Zero;

    #[test]
    fn quadric_threefold() {
        let x = validate_space(3, vec![2]).unwrap();
        assert_eq!(x.codim, 1);
        assert_eq!(x.total_degree, 2);
        assert_eq!(x.fano_index, 3);
        assert_eq!(x.degree, BigInt::from(2));
        assert!(!x.borderline);
        assert_eq!(x.euler_char, BigInt::from(4));
        assert_eq!(x.prim_rank, BigInt::zero());
    }

    #[test]
    fn quartic_threefold_is_borderline() {
        let x = validate_space(3, vec![4]).unwrap();
        assert_eq!(x.fano_index, 1);
        assert!(x.borderline);
        assert_eq!(x.euler_char, BigInt::from(-56));
        assert_eq!(x.prim_rank, BigInt::from(60));
        assert_eq!(x.m_factorial, BigInt::from(24));
    }

    #[test]
    fn rejections() {
        assert!(matches!(
            validate_space(3, vec![5]),
            Err(Error::InvalidSpace(_))
        ));
        assert!(validate_space(2, vec![2]).is_err());
        assert!(validate_space(3, vec![]).is_err());
        let err = validate_space(3, vec![1, 2]).unwrap_err();
        assert!(err.to_string().contains("at least 2"));
    }

    #[test]
    fn euler_characteristic_examples() {
        let deg = |v: Vec<u32>| DegreeVector::new(v).unwrap();
        assert_eq!(euler_characteristic(3, &deg(vec![2])), BigInt::from(4));
        assert_eq!(euler_characteristic(3, &deg(vec![3])), BigInt::from(-6));
        assert_eq!(euler_characteristic(3, &deg(vec![2, 2])), BigInt::zero());
    }

    #[test]
    fn euler_characteristic_ignores_degree_order() {
        let a = validate_space(4, vec![2, 3]).unwrap();
        let b = validate_space(4, vec![3, 2]).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn m_power_examples() {
        let x = validate_space(4, vec![2, 3]).unwrap();
        assert_eq!(x.m_power(1, -1), rat(18)); // 2^1 * 3^2
        let q = validate_space(3, vec![2]).unwrap();
        assert_eq!(q.m_power(0, -1), ratio(1, 2));
        let quartic = validate_space(3, vec![4]).unwrap();
        assert_eq!(quartic.m_power(1, 0), rat(256));
    }

    #[test]
    fn prim_rank_nonnegative_on_grid() {
        for r in 3..=6u32 {
            for degrees in crate::verify::degree_grid(2, 4) {
                if let Ok(space) = validate_space(r, degrees.clone()) {
                    assert!(
                        !space.prim_rank.is_negative(),
                        "prim rank negative for r={r}, m={degrees:?}"
                    );
                    assert_eq!(space.borderline, space.fano_index == 1 && space.total_degree == space.r + space.codim);
                    assert!(space.fano_index >= 1);
                }
            }
        }
    }
}
