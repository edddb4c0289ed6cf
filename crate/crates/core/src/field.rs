//! Coefficient fields.
//!
//! Everything above this module is generic over [`Field`]. The working
//! instance is [`Rational`] (exact ℚ); [`Fp`] is a word-sized prime field
//! used for cross-checks where only the algebra, not the arithmetic, matters.

use std::fmt::{self, Debug, Display};
use std::hash::Hash;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational numbers. Always reduced with a positive denominator.
pub type Rational = BigRational;

/// A commutative field with exact arithmetic.
///
/// In-place operators take references so that big-number instances avoid
/// needless clones in inner loops.
pub trait Field:
    Clone
    + Debug
    + Display
    + PartialEq
    + Eq
    + Hash
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
    + for<'a> MulAssign<&'a Self>
    + for<'a> DivAssign<&'a Self>
    + Send
    + Sync
    + 'static
{
    fn from_i64(n: i64) -> Self;

    /// Image of a rational number; `None` if its denominator is not invertible.
    fn from_rational(q: &Rational) -> Option<Self>;

    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// An element whose square is `self`, if one exists in the field.
    fn sqrt(&self) -> Option<Self>;

    /// Sign convention used to make "up to sign" results canonical.
    /// Exactly one of `x` and `-x` is negative for every nonzero `x`.
    fn is_negative(&self) -> bool;

    fn mul_ref(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r *= other;
        r
    }

    fn add_ref(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r += other;
        r
    }

    fn sub_ref(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r -= other;
        r
    }

    fn div_ref(&self, other: &Self) -> Self {
        let mut r = self.clone();
        r /= other;
        r
    }
}

fn bigint_sqrt_exact(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &r * &r == *n {
        Some(r)
    } else {
        None
    }
}

impl Field for BigRational {
    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        Some(q.clone())
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn sqrt(&self) -> Option<Self> {
        let n = bigint_sqrt_exact(self.numer())?;
        let d = bigint_sqrt_exact(self.denom())?;
        Some(BigRational::new(n, d))
    }

    fn is_negative(&self) -> bool {
        self.numer().sign() == Sign::Minus
    }
}

/// The field with `P` elements, `P` an odd prime below 2^32.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u64>(u64);

/// A 31-bit Mersenne prime field; `P ≡ 3 (mod 4)` so square roots are a single power.
pub type Fp31 = Fp<2_147_483_647>;

impl<const P: u64> Fp<P> {
    pub fn new(v: u64) -> Self {
        Fp(v % P)
    }

    pub fn value(&self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self;
        let mut acc = Fp(1);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

}

impl<const P: u64> Debug for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl<const P: u64> Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Balanced representative reads better in printed polynomials.
        if self.is_negative() {
            write!(f, "-{}", P - self.0)
        } else {
            write!(f, "{}", self.0)
        }
    }
}

impl<const P: u64> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u64> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u64> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        if self.0 == 0 {
            self
        } else {
            Fp(P - self.0)
        }
    }
}

impl<const P: u64> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        let s = self.0 + o.0;
        Fp(if s >= P { s - P } else { s })
    }
}

impl<const P: u64> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl<const P: u64> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u128 * o.0 as u128) % P as u128) as u64)
    }
}

impl<const P: u64> Div for Fp<P> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero in Fp")
    }
}

macro_rules! fp_assign {
    ($tr:ident, $m:ident, $op:tt) => {
        impl<'a, const P: u64> $tr<&'a Fp<P>> for Fp<P> {
            fn $m(&mut self, o: &'a Fp<P>) {
                *self = *self $op *o;
            }
        }
    };
}
fp_assign!(AddAssign, add_assign, +);
fp_assign!(SubAssign, sub_assign, -);
fp_assign!(MulAssign, mul_assign, *);
fp_assign!(DivAssign, div_assign, /);

impl<const P: u64> Field for Fp<P> {
    fn from_i64(n: i64) -> Self {
        Fp(n.rem_euclid(P as i64) as u64)
    }

    fn from_rational(q: &Rational) -> Option<Self> {
        let p = BigInt::from(P);
        let n = q.numer().mod_floor(&p).to_u64()?;
        let d = q.denom().mod_floor(&p).to_u64()?;
        Fp(d).inv().map(|di| Fp(n) * di)
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn sqrt(&self) -> Option<Self> {
        if self.0 == 0 {
            return Some(*self);
        }
        // Euler's criterion, then the P ≡ 3 (mod 4) shortcut; other primes
        // fall back to a search that is only used in tests on tiny fields.
        if self.pow((P - 1) / 2).0 != 1 {
            return None;
        }
        if P % 4 == 3 {
            let r = self.pow((P + 1) / 4);
            return Some(if r.is_negative() { -r } else { r });
        }
        (1..P).map(Fp).find(|r| *r * *r == *self)
    }

    fn is_negative(&self) -> bool {
        self.0 > P / 2
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rational_sqrt() {
        assert_eq!(q(9, 4).sqrt(), Some(q(3, 2)));
        assert_eq!(q(2, 1).sqrt(), None);
        assert_eq!(q(-4, 1).sqrt(), None);
        assert_eq!(q(0, 1).sqrt(), Some(q(0, 1)));
    }

    #[test]
    fn rational_is_reduced() {
        let r = q(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert!(Field::is_negative(&r));
    }

    #[test]
    fn fp_arithmetic() {
        type F = Fp<7>;
        let a = F::from_i64(3);
        assert_eq!(a * a.inv().unwrap(), F::one());
        assert_eq!(F::from_i64(-1), F::new(6));
        assert_eq!(F::from_i64(2).sqrt().map(|r| r * r), Some(F::from_i64(2)));
        assert_eq!(F::from_i64(3).sqrt(), None);
        let big = Fp31::from_i64(123_456_789);
        let s = (big * big).sqrt().unwrap();
        assert!(s == big || s == -big);
    }

    #[test]
    fn fp_from_rational() {
        type F = Fp<7>;
        assert_eq!(F::from_rational(&q(1, 2)), Some(F::from_i64(4)));
        assert_eq!(F::from_rational(&q(1, 7)), None);
    }
}
