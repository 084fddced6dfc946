//! Exact rational scalars with an allocation-free fast path for machine-sized
//! integers.
//!
//! Almost every coefficient that shows up in the polynomial families is a
//! small integer, so `Scalar::Small` carries those without touching the heap.
//! Anything else (fractions from the rational Lazard model, or integers that
//! overflow `i64`) is promoted to a reduced `BigRational`.
//!
//! Invariant: a `Big` value is never an integer that fits in `i64`, so
//! structural equality is numeric equality.

use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Small(i64),
    Big(BigRational),
}

impl Scalar {
    pub const ZERO: Scalar = Scalar::Small(0);
    pub const ONE: Scalar = Scalar::Small(1);

    pub fn from_i64(v: i64) -> Self {
        Scalar::Small(v)
    }

    /// `numer / denom`, reduced. Panics on a zero denominator.
    pub fn ratio(numer: i64, denom: i64) -> Self {
        assert!(denom != 0, "zero denominator");
        Self::from_big(BigRational::new(BigInt::from(numer), BigInt::from(denom)))
    }

    pub fn from_bigint(v: BigInt) -> Self {
        match v.to_i64() {
            Some(s) => Scalar::Small(s),
            None => Scalar::Big(BigRational::from_integer(v)),
        }
    }

    pub fn from_big(v: BigRational) -> Self {
        if v.is_integer() {
            if let Some(s) = v.numer().to_i64() {
                return Scalar::Small(s);
            }
        }
        Scalar::Big(v)
    }

    pub fn to_big(&self) -> BigRational {
        match self {
            Scalar::Small(v) => BigRational::from_integer(BigInt::from(*v)),
            Scalar::Big(v) => v.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Small(0))
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Small(1))
    }

    pub fn is_integer(&self) -> bool {
        match self {
            Scalar::Small(_) => true,
            Scalar::Big(v) => v.is_integer(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Scalar::Small(v) => *v < 0,
            Scalar::Big(v) => v.is_negative(),
        }
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn recip(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        match self {
            Scalar::Small(1) => Some(Scalar::Small(1)),
            Scalar::Small(-1) => Some(Scalar::Small(-1)),
            _ => Some(Self::from_big(self.to_big().recip())),
        }
    }

    pub fn numer(&self) -> BigInt {
        match self {
            Scalar::Small(v) => BigInt::from(*v),
            Scalar::Big(v) => v.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match self {
            Scalar::Small(_) => BigInt::one(),
            Scalar::Big(v) => v.denom().clone(),
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::ZERO
    }
}

impl From<i64> for Scalar {
    fn from(v: i64) -> Self {
        Scalar::Small(v)
    }
}

impl From<i32> for Scalar {
    fn from(v: i32) -> Self {
        Scalar::Small(v as i64)
    }
}

impl From<BigInt> for Scalar {
    fn from(v: BigInt) -> Self {
        Scalar::from_bigint(v)
    }
}

impl From<BigRational> for Scalar {
    fn from(v: BigRational) -> Self {
        Scalar::from_big(v)
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &'a Scalar) -> Scalar {
        if let (Scalar::Small(a), Scalar::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                return Scalar::Small(s);
            }
        }
        Scalar::from_big(self.to_big() + rhs.to_big())
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &'a Scalar) -> Scalar {
        if let (Scalar::Small(a), Scalar::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_sub(*b) {
                return Scalar::Small(s);
            }
        }
        Scalar::from_big(self.to_big() - rhs.to_big())
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &'a Scalar) -> Scalar {
        if let (Scalar::Small(a), Scalar::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_mul(*b) {
                return Scalar::Small(s);
            }
        }
        Scalar::from_big(self.to_big() * rhs.to_big())
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    /// Panics on division by zero.
    fn div(self, rhs: &'a Scalar) -> Scalar {
        assert!(!rhs.is_zero(), "division by zero");
        if let (Scalar::Small(a), Scalar::Small(b)) = (self, rhs) {
            if *b != 0 && a % b == 0 {
                if let Some(s) = a.checked_div(*b) {
                    return Scalar::Small(s);
                }
            }
        }
        Scalar::from_big(self.to_big() / rhs.to_big())
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Small(v) => match v.checked_neg() {
                Some(n) => Scalar::Small(n),
                None => Scalar::from_big(-self.to_big()),
            },
            Scalar::Big(v) => Scalar::from_big(-v.clone()),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl<'a> $tr<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &'a Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::ZERO
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::ONE
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Small(a), Scalar::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Small(v) => write!(f, "{v}"),
            Scalar::Big(v) if v.is_integer() => write!(f, "{}", v.numer()),
            Scalar::Big(v) => write!(f, "{}/{}", v.numer(), v.denom()),
        }
    }
}
