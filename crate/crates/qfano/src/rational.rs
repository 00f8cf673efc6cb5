//! Exact rational scalars and small combinatorial helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// The scalar type used everywhere: an arbitrary-precision rational.
pub type Rat = BigRational;

pub fn rat<T: Into<BigInt>>(n: T) -> Rat {
    Rat::from_integer(n.into())
}

pub fn ratio<N: Into<BigInt>, D: Into<BigInt>>(n: N, d: D) -> Rat {
    Rat::new(n.into(), d.into())
}

/// n! as a big integer.
pub fn factorial(n: u64) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Binomial coefficient C(n, k); zero outside Pascal's triangle.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `base^exp` with a possibly negative exponent, as an exact rational.
pub fn int_pow(base: &BigInt, exp: i64) -> Rat {
    let p = rat(base.pow(exp.unsigned_abs() as u32));
    if exp < 0 {
        p.recip()
    } else {
        p
    }
}

/// Canonical "p/q" rendering; "/q" is omitted for integers.
pub fn rat_to_string(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Parses the "p/q" form produced by [`rat_to_string`].
pub fn rat_from_str(s: &str) -> Result<Rat, Error> {
    let parse_int = |t: &str| -> Result<BigInt, Error> {
        t.parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("malformed rational {s:?}")))
    };
    match s.split_once('/') {
        None => Ok(rat(parse_int(s)?)),
        Some((p, q)) => {
            let denom = parse_int(q)?;
            if denom.is_zero() || denom.is_negative() {
                return Err(Error::Parse(format!("malformed rational {s:?}")));
            }
            Ok(Rat::new(parse_int(p)?, denom))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorial_and_binomial() {
        assert_eq!(factorial(0), BigInt::from(1));
        assert_eq!(factorial(4), BigInt::from(24));
        assert_eq!(binomial(3, 0), BigInt::from(1));
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(2, 5), BigInt::zero());
        assert_eq!(binomial(-1, 0), BigInt::zero());
    }

    #[test]
    fn int_pow_negative_exponent() {
        assert_eq!(int_pow(&BigInt::from(2), -1), ratio(1, 2));
        assert_eq!(int_pow(&BigInt::from(4), 4), rat(256));
        assert_eq!(int_pow(&BigInt::from(3), 0), rat(1));
    }

    #[test]
    fn rational_string_round_trip() {
        for s in ["0", "7", "-3", "1/2", "-22/7"] {
            let x = rat_from_str(s).unwrap();
            assert_eq!(rat_to_string(&x), s);
        }
        assert!(rat_from_str("1.5").is_err());
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("1/-2").is_err());
    }
}
