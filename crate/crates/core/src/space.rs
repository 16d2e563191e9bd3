//! ℤ₂-graded spaces with an even-first basis.

use std::fmt;
use std::ops::Add;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn is_odd(self) -> bool {
        self == Parity::Odd
    }

    pub fn as_u8(self) -> u8 {
        self as u8
    }

    pub fn from_bit(bit: u8) -> Self {
        if bit & 1 == 1 {
            Parity::Odd
        } else {
            Parity::Even
        }
    }
}

impl Add for Parity {
    type Output = Parity;
    fn add(self, rhs: Parity) -> Parity {
        Parity::from_bit(self.as_u8() ^ rhs.as_u8())
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_u8())
    }
}

/// Exponent parity of the Koszul sign `(−1)^{ab}`: true when the sign is −1.
#[inline]
pub fn koszul(a: Parity, b: Parity) -> bool {
    a.is_odd() && b.is_odd()
}

/// A super vector space `V = V₀ ⊕ V₁` with `n0` even basis vectors followed
/// by `n1` odd ones. Parity is a function of the basis index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SuperSpace {
    n0: usize,
    n1: usize,
}

impl SuperSpace {
    pub fn new(n0: usize, n1: usize) -> Self {
        Self { n0, n1 }
    }

    pub fn even(n: usize) -> Self {
        Self::new(n, 0)
    }

    pub fn n0(&self) -> usize {
        self.n0
    }

    pub fn n1(&self) -> usize {
        self.n1
    }

    pub fn dim(&self) -> usize {
        self.n0 + self.n1
    }

    pub fn dims(&self) -> (usize, usize) {
        (self.n0, self.n1)
    }

    pub fn parity(&self, index: usize) -> Parity {
        debug_assert!(index < self.dim());
        if index < self.n0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Basis indices of the given parity.
    pub fn indices(&self, parity: Parity) -> std::ops::Range<usize> {
        match parity {
            Parity::Even => 0..self.n0,
            Parity::Odd => self.n0..self.dim(),
        }
    }

    pub fn ensure_eq(&self, other: &SuperSpace) -> Result<()> {
        if self != other {
            return Err(Error::SpaceMismatch {
                expected: self.dims(),
                found: other.dims(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for SuperSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.n0, self.n1)
    }
}
