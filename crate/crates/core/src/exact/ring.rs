use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::{Error, Result};

/// Coefficients are arbitrary-precision integers. Over `Z/p` they are kept reduced to `0..p`.
pub type Scalar = BigInt;

/// The active coefficient ring.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub enum Ring {
    #[default]
    Integers,
    ModPrime(u64),
}

impl Ring {
    /// `Z/p`, with `p` checked for primality.
    pub fn mod_prime(p: u64) -> Result<Ring> {
        if is_prime(p) {
            Ok(Ring::ModPrime(p))
        } else {
            Err(Error::NotPrime(p.to_string()))
        }
    }

    /// Canonical representative of `c`.
    pub fn reduce(&self, c: &Scalar) -> Scalar {
        match self {
            Ring::Integers => c.clone(),
            Ring::ModPrime(p) => {
                let p = BigInt::from(*p);
                let r = c % &p;
                if r.is_negative() {
                    r + p
                } else {
                    r
                }
            }
        }
    }

    pub fn is_zero(&self, c: &Scalar) -> bool {
        self.reduce(c).is_zero()
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Integers => f.write_str("Z"),
            Ring::ModPrime(p) => write!(f, "Z/{p}"),
        }
    }
}

impl FromStr for Ring {
    type Err = Error;

    /// Accepts `Z` or `Z/p`.
    fn from_str(s: &str) -> Result<Ring> {
        let s = s.trim();
        if s == "Z" {
            return Ok(Ring::Integers);
        }
        let p = s
            .strip_prefix("Z/")
            .and_then(|p| p.parse::<u64>().ok())
            .ok_or_else(|| Error::InvalidRing(s.to_string()))?;
        Ring::mod_prime(p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_is_canonical() {
        let r = Ring::mod_prime(7).unwrap();
        assert_eq!(r.reduce(&BigInt::from(-1)), BigInt::from(6));
        assert_eq!(r.reduce(&BigInt::from(15)), BigInt::from(1));
        assert!(r.is_zero(&BigInt::from(-14)));
        assert_eq!(Ring::Integers.reduce(&BigInt::from(-5)), BigInt::from(-5));
    }

    #[test]
    fn composite_modulus_is_rejected() {
        assert!(Ring::mod_prime(9).is_err());
        assert!(Ring::mod_prime(1).is_err());
        assert!(Ring::mod_prime(2).is_ok());
        assert!("Z/15".parse::<Ring>().is_err());
    }

    #[test]
    fn parse_and_display() {
        for s in ["Z", "Z/2", "Z/101"] {
            assert_eq!(s.parse::<Ring>().unwrap().to_string(), s);
        }
        assert!("Q".parse::<Ring>().is_err());
    }
}
