//! Scalar fields for the exact linear algebra.
//!
//! Everything downstream of the hom tables is generic over [`Field`]. The
//! rationals are the default; prime fields are available for cross-checking
//! ranks in positive characteristic.

use std::fmt::{self, Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Rem, Sub};

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, NumOps, One, Signed, ToPrimitive, Zero};

/// A commutative field with exact arithmetic.
pub trait Field:
    Clone + PartialEq + Debug + Display + Zero + One + NumOps + Neg<Output = Self> + Send + Sync + 'static
{
    /// Characteristic of the field; zero for the rationals.
    const CHARACTERISTIC: u64;

    fn from_int(value: i64) -> Self;

    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::one() / self.clone())
        }
    }
}

/// Fields of characteristic zero whose integral elements can be read back.
pub trait IntegerLift: Field {
    /// Returns the value as an integer when it is one.
    fn as_i64(&self) -> Option<i64>;
}

impl<T> Field for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static,
{
    const CHARACTERISTIC: u64 = 0;

    fn from_int(value: i64) -> Self {
        Ratio::from_integer(T::from_i64(value).expect("integer fits the rational backing type"))
    }
}

impl<T> IntegerLift for Ratio<T>
where
    T: Clone + Integer + Signed + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static,
{
    fn as_i64(&self) -> Option<i64> {
        if self.is_integer() {
            self.numer().to_i64()
        } else {
            None
        }
    }
}

const fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}

/// The prime field `Z/PZ`.
///
/// `P` must be prime and below `2^32` so that products fit in a `u64`;
/// both are checked at compile time on first use.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const VALID: () = assert!(is_prime(P) && P < (1 << 32), "Fp modulus must be a prime below 2^32");

    pub fn new(value: u64) -> Self {
        #[allow(clippy::let_unit_value)]
        let () = Self::VALID;
        Fp(value % P)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Fp::new(1);
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            exp >>= 1;
        }
        acc
    }
}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.0, P)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Fp::new(self.0 + rhs.0)
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Fp::new(self.0 + P - rhs.0)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Fp::new(self.0 * rhs.0)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        assert!(rhs.0 != 0, "division by zero in Fp");
        // Fermat inverse
        self * rhs.pow(P - 2)
    }
}

impl<const P: u64> Rem for Fp<P> {
    type Output = Self;
    fn rem(self, _rhs: Self) -> Self {
        Fp::new(0)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp::new(P - self.0)
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp::new(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp::new(1)
    }
}

impl<const P: u64> Field for Fp<P> {
    const CHARACTERISTIC: u64 = P;

    fn from_int(value: i64) -> Self {
        Fp::new(value.rem_euclid(P as i64) as u64)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;

    #[test]
    fn prime_field_inverses() {
        for a in 1..7u64 {
            let x = Fp::<7>::new(a);
            assert_eq!(x * x.inverse().unwrap(), Fp::one());
        }
        assert!(Fp::<7>::zero().inverse().is_none());
        assert_eq!(Fp::<5>::from_int(-1), Fp::new(4));
    }

    #[test]
    fn rational_integer_lift() {
        let half = BigRational::from_int(1) / BigRational::from_int(2);
        assert_eq!(half.as_i64(), None);
        assert_eq!((half.clone() + half).as_i64(), Some(1));
        assert_eq!(BigRational::from_int(-3).as_i64(), Some(-3));
        assert_eq!(<BigRational as Field>::CHARACTERISTIC, 0);
    }
}
