use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// A pair (horizontal, vertical) of integers.
#[derive(
    Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize,
)]
pub struct Bidegree {
    pub horizontal: i64,
    pub vertical: i64,
}

impl Bidegree {
    pub const ZERO: Bidegree = Bidegree::new(0, 0);

    pub const fn new(horizontal: i64, vertical: i64) -> Self {
        Bidegree {
            horizontal,
            vertical,
        }
    }

    /// `h·h' + v·v'`. Only its parity enters signs.
    pub fn pairing(self, other: Bidegree) -> i64 {
        self.horizontal * other.horizontal + self.vertical * other.vertical
    }

    /// Sign picked up when something of bidegree `self` passes something of bidegree `other`.
    pub fn koszul(self, other: Bidegree) -> Sign {
        Sign::from_parity(self.pairing(other))
    }

    pub fn scale(self, k: i64) -> Bidegree {
        Bidegree::new(self.horizontal * k, self.vertical * k)
    }

    /// Structure map bidegree `(−i, 2−i−j)`.
    pub fn structure(i: usize, j: usize) -> Bidegree {
        let (i, j) = (i as i64, j as i64);
        Bidegree::new(-i, 2 - i - j)
    }

    /// Twisted differential bidegree `(−i, 1−i)`.
    pub fn differential(i: usize) -> Bidegree {
        let i = i as i64;
        Bidegree::new(-i, 1 - i)
    }
}

impl fmt::Display for Bidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.horizontal, self.vertical)
    }
}

impl Add for Bidegree {
    type Output = Bidegree;
    fn add(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.horizontal + o.horizontal, self.vertical + o.vertical)
    }
}

impl AddAssign for Bidegree {
    fn add_assign(&mut self, o: Bidegree) {
        *self = *self + o;
    }
}

impl Sub for Bidegree {
    type Output = Bidegree;
    fn sub(self, o: Bidegree) -> Bidegree {
        Bidegree::new(self.horizontal - o.horizontal, self.vertical - o.vertical)
    }
}

impl Neg for Bidegree {
    type Output = Bidegree;
    fn neg(self) -> Bidegree {
        Bidegree::new(-self.horizontal, -self.vertical)
    }
}

impl Sum for Bidegree {
    fn sum<I: Iterator<Item = Bidegree>>(iter: I) -> Bidegree {
        iter.fold(Bidegree::ZERO, Add::add)
    }
}

/// A sign ±1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(−1)^e`.
    pub fn from_parity(e: i64) -> Sign {
        if e.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn to_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_minus(self) -> bool {
        self == Sign::Minus
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, o: Sign) -> Sign {
        if self == o {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl Neg for Sign {
    type Output = Sign;
    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Sign for an operator of bidegree `op` passing the first `position` entries of `left`.
///
/// # Panics
/// If `position > left.len()`.
pub fn koszul_sign(left: &[Bidegree], op: Bidegree, position: usize) -> Sign {
    let passed: Bidegree = left[..position].iter().copied().sum();
    op.koszul(passed)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degree_zero_operator_never_changes_sign() {
        let left = [Bidegree::new(3, -1), Bidegree::new(1, 1)];
        assert_eq!(koszul_sign(&left, Bidegree::ZERO, 2), Sign::Plus);
    }

    #[test]
    fn even_pairing_is_positive() {
        let one_one = Bidegree::new(1, 1);
        assert_eq!(koszul_sign(&[one_one], one_one, 1), Sign::Plus);
    }

    #[test]
    fn horizontal_operator_examples() {
        // Hand enumeration: (−1,0)·(0,0) = 0, (−1,0)·(0,1) = 0, (−1,0)·(−1,0) = 1.
        let op = Bidegree::new(-1, 0);
        let left = [
            Bidegree::new(0, 0),
            Bidegree::new(0, 1),
            Bidegree::new(-1, 0),
        ];
        assert_eq!(koszul_sign(&left, op, 2), Sign::Plus);
        assert_eq!(koszul_sign(&left, op, 3), Sign::Minus);
        assert_eq!(koszul_sign(&left[2..], op, 1), Sign::Minus);
        assert_eq!(koszul_sign(&left, op, 0), Sign::Plus);
    }

    #[test]
    fn structure_bidegrees() {
        assert_eq!(Bidegree::structure(0, 2), Bidegree::new(0, 0));
        assert_eq!(Bidegree::structure(1, 1), Bidegree::new(-1, 0));
        assert_eq!(Bidegree::structure(0, 1), Bidegree::new(0, 1));
        assert_eq!(Bidegree::differential(2), Bidegree::new(-2, -1));
    }

    #[test]
    fn sign_algebra() {
        assert_eq!(Sign::Minus * Sign::Minus, Sign::Plus);
        assert_eq!(-Sign::Plus, Sign::Minus);
        assert_eq!(Sign::from_parity(-3), Sign::Minus);
    }
}
