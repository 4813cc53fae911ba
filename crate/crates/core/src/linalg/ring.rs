use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use super::LinalgError;

/// Coefficient ring: `Z` or `F_p` with `p < 2^16`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum BaseRing {
    Integers,
    PrimeField(u32),
}

impl BaseRing {
    pub fn prime_field(p: u64) -> Result<Self, LinalgError> {
        if p >= 1 << 16 {
            return Err(LinalgError::PrimeTooLarge(p));
        }
        if p < 2 || (2..).take_while(|d| d * d <= p).any(|d| p.is_multiple_of(d)) {
            return Err(LinalgError::NotPrime(p));
        }
        Ok(BaseRing::PrimeField(p as u32))
    }

    pub fn is_field(&self) -> bool {
        matches!(self, BaseRing::PrimeField(_))
    }

    pub fn modulus(&self) -> Option<u64> {
        match self {
            BaseRing::Integers => None,
            BaseRing::PrimeField(p) => Some(*p as u64),
        }
    }

    /// Canonical representative: identity over `Z`, residue in `[0, p)` over `F_p`.
    pub fn reduce(&self, x: &BigInt) -> BigInt {
        match self {
            BaseRing::Integers => x.clone(),
            BaseRing::PrimeField(p) => x.mod_floor(&BigInt::from(*p)),
        }
    }

    pub fn reduce_in_place(&self, x: &mut BigInt) {
        if let BaseRing::PrimeField(p) = self {
            let p = BigInt::from(*p);
            if x.is_negative() || *x >= p {
                *x = x.mod_floor(&p);
            }
        }
    }

    /// Representative of `x` in `R/(order)`. A zero order means no reduction
    /// beyond the ring itself.
    pub fn reduce_mod(&self, x: &BigInt, order: &BigInt) -> BigInt {
        if order.is_zero() {
            return self.reduce(x);
        }
        match self {
            BaseRing::Integers => x.mod_floor(order),
            // nonzero orders are units over a field
            BaseRing::PrimeField(_) => BigInt::zero(),
        }
    }

    pub fn is_zero(&self, x: &BigInt) -> bool {
        self.reduce(x).is_zero()
    }

    pub fn is_unit(&self, x: &BigInt) -> bool {
        match self {
            BaseRing::Integers => x.abs().is_one(),
            BaseRing::PrimeField(_) => !self.is_zero(x),
        }
    }

    /// Normalized generator of the ideal `(d)`: `|d|` over `Z`; `0` or `1` over a field.
    pub fn normalize_order(&self, d: &BigInt) -> BigInt {
        match self {
            BaseRing::Integers => d.abs(),
            BaseRing::PrimeField(_) => {
                if self.is_zero(d) {
                    BigInt::zero()
                } else {
                    BigInt::one()
                }
            }
        }
    }

    /// Generator of `(a) + (b)`.
    pub fn gcd(&self, a: &BigInt, b: &BigInt) -> BigInt {
        match self {
            BaseRing::Integers => a.gcd(b),
            BaseRing::PrimeField(_) => {
                if self.is_zero(a) && self.is_zero(b) {
                    BigInt::zero()
                } else {
                    BigInt::one()
                }
            }
        }
    }

    pub fn inverse(&self, x: &BigInt) -> Option<BigInt> {
        match self {
            BaseRing::Integers => {
                if x.is_one() || (-x).is_one() {
                    Some(x.clone())
                } else {
                    None
                }
            }
            BaseRing::PrimeField(p) => {
                let r = self.reduce(x).to_u64()?;
                if r == 0 {
                    return None;
                }
                Some(BigInt::from(inv_mod(r, *p as u64)))
            }
        }
    }

    /// Exact quotient `a / b` when `b` divides `a` in the ring.
    pub fn divide(&self, a: &BigInt, b: &BigInt) -> Option<BigInt> {
        match self {
            BaseRing::Integers => {
                if b.is_zero() {
                    return a.is_zero().then(BigInt::zero);
                }
                let (q, r) = a.div_rem(b);
                r.is_zero().then_some(q)
            }
            BaseRing::PrimeField(_) => {
                if self.is_zero(b) {
                    return self.is_zero(a).then(BigInt::zero);
                }
                let inv = self.inverse(b)?;
                Some(self.reduce(&(a * inv)))
            }
        }
    }
}

impl fmt::Display for BaseRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseRing::Integers => write!(f, "Z"),
            BaseRing::PrimeField(p) => write!(f, "F{p}"),
        }
    }
}

pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    // p < 2^16, so Fermat exponentiation in u64 cannot overflow
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_validation() {
        assert!(BaseRing::prime_field(2).is_ok());
        assert!(BaseRing::prime_field(65521).is_ok());
        assert_eq!(BaseRing::prime_field(4), Err(LinalgError::NotPrime(4)));
        assert_eq!(BaseRing::prime_field(1), Err(LinalgError::NotPrime(1)));
        assert_eq!(BaseRing::prime_field(65537), Err(LinalgError::PrimeTooLarge(65537)));
    }

    #[test]
    fn field_inverse() {
        let f = BaseRing::PrimeField(5);
        for a in 1..5 {
            let inv = f.inverse(&BigInt::from(a)).unwrap();
            assert_eq!(f.reduce(&(inv * a)), BigInt::one());
        }
        assert!(f.inverse(&BigInt::from(10)).is_none());
    }
}
