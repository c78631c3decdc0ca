//! Arithmetic in the cyclic group `Z_N`.
//!
//! Every [`GroupElement`] carries its modulus, so values of different orders
//! can coexist in one process. Mixing moduli is an error, never a coercion.

use std::fmt;
use std::ops::Neg;

use thiserror::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("modulus must be positive")]
    ZeroModulus,
}

/// A residue `value` in `[0, modulus)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    value: u64,
    modulus: u64,
}

impl GroupElement {
    /// Reduces `value` modulo `modulus`.
    pub fn new(value: u64, modulus: u64) -> Result<Self, GroupError> {
        if modulus == 0 {
            return Err(GroupError::ZeroModulus);
        }
        Ok(GroupElement {
            value: value % modulus,
            modulus,
        })
    }

    /// Reduces a signed integer, so `from_i64(-1, 10)` is `9 mod 10`.
    pub fn from_i64(value: i64, modulus: u64) -> Result<Self, GroupError> {
        if modulus == 0 {
            return Err(GroupError::ZeroModulus);
        }
        let r = value.rem_euclid(modulus as i64) as u64;
        Ok(GroupElement { value: r, modulus })
    }

    pub fn zero(modulus: u64) -> Result<Self, GroupError> {
        Self::new(0, modulus)
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    pub fn is_zero(self) -> bool {
        self.value == 0
    }

    fn check(self, other: Self) -> Result<(), GroupError> {
        if self.modulus != other.modulus {
            Err(GroupError::ModulusMismatch {
                left: self.modulus,
                right: other.modulus,
            })
        } else {
            Ok(())
        }
    }

    pub fn try_add(self, other: Self) -> Result<Self, GroupError> {
        self.check(other)?;
        Ok(GroupElement {
            value: add_mod(self.value, other.value, self.modulus),
            modulus: self.modulus,
        })
    }

    pub fn try_sub(self, other: Self) -> Result<Self, GroupError> {
        self.try_add(-other)
    }

    /// Multiplies by an integer scalar (the `Z`-module action).
    pub fn scale(self, factor: u64) -> Self {
        let v = (self.value as u128 * (factor % self.modulus) as u128) % self.modulus as u128;
        GroupElement {
            value: v as u64,
            modulus: self.modulus,
        }
    }

    /// Parity of the residue. Only meaningful for even moduli, where
    /// reduction mod N preserves parity.
    pub fn is_odd(self) -> bool {
        self.value & 1 == 1
    }
}

impl Neg for GroupElement {
    type Output = GroupElement;

    fn neg(self) -> GroupElement {
        GroupElement {
            value: (self.modulus - self.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl fmt::Display for GroupElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

pub fn add(a: GroupElement, b: GroupElement) -> Result<GroupElement, GroupError> {
    a.try_add(b)
}

pub fn neg(a: GroupElement) -> GroupElement {
    -a
}

/// Folds [`add`] over `elements`. The modulus is given explicitly so that the
/// empty sum is well defined.
pub fn sum<I>(elements: I, modulus: u64) -> Result<GroupElement, GroupError>
where
    I: IntoIterator<Item = GroupElement>,
{
    elements
        .into_iter()
        .try_fold(GroupElement::zero(modulus)?, GroupElement::try_add)
}

#[inline]
pub(crate) fn add_mod(a: u64, b: u64, n: u64) -> u64 {
    let s = a + b;
    if s >= n {
        s - n
    } else {
        s
    }
}

#[inline]
pub(crate) fn sub_mod(a: u64, b: u64, n: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + n - b
    }
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

/// Units of `Z_N` in increasing order.
pub fn units(modulus: u64) -> Vec<u64> {
    if modulus == 1 {
        return vec![0];
    }
    (1..modulus).filter(|&a| gcd(a, modulus) == 1).collect()
}

/// Integer in the symmetric window around zero, used for zero-sum
/// partitions where sums are taken over the integers, not mod N.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymmetricInt(pub i64);

impl SymmetricInt {
    /// Residue `r` maps to `r` when `r <= N/2`, otherwise to `r - N`.
    pub fn from_residue(x: GroupElement) -> SymmetricInt {
        let (v, n) = (x.value as i64, x.modulus as i64);
        if 2 * v <= n {
            SymmetricInt(v)
        } else {
            SymmetricInt(v - n)
        }
    }

    pub fn to_residue(self, modulus: u64) -> Result<GroupElement, GroupError> {
        GroupElement::from_i64(self.0, modulus)
    }

    pub fn get(self) -> i64 {
        self.0
    }
}

impl fmt::Display for SymmetricInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
