//! Gaussian rationals: numbers `a + b*i` with `a`, `b` arbitrary-precision
//! rationals. All coefficient arithmetic in the crate is exact; there is no
//! floating point anywhere.

use num_bigint::BigInt;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// An element of ℚ(i), kept in canonical reduced form by `BigRational`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GaussRat {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussRat {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussRat { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        GaussRat {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        GaussRat {
            re: BigRational::new(BigInt::from(num), BigInt::from(den)),
            im: BigRational::zero(),
        }
    }

    pub fn from_rational(re: BigRational) -> Self {
        GaussRat {
            re,
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn zero() -> Self {
        GaussRat {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussRat {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussRat {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Squared modulus `a² + b²`, an exact non-negative rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// The magnitude surrogate `|a| + |b|`; satisfies `|a+bi| ≤ |a|+|b|`,
    /// which is all the crate's bound checks need.
    pub fn mag_surrogate(&self) -> BigRational {
        self.re.abs() + self.im.abs()
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm_sq();
        Some(GaussRat {
            re: &self.re / &n,
            im: -(&self.im) / &n,
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = GaussRat::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Exact square root in ℚ(i), when one exists.
    ///
    /// Solves `(x + y i)² = a + b i` over the rationals: requires
    /// `a² + b²` to be a rational square and then the two halves of
    /// `a ± √(a²+b²)` to be rational squares as well.
    pub fn sqrt(&self) -> Option<GaussRat> {
        if self.is_zero() {
            return Some(GaussRat::zero());
        }
        let a = &self.re;
        let b = &self.im;
        let r = rational_sqrt(&self.norm_sq())?;
        // x² = (a + r)/2, y² = (r − a)/2, sign(xy) = sign(b).
        let two = BigRational::from_integer(BigInt::from(2));
        let x2 = (a + &r) / &two;
        let y2 = (&r - a) / &two;
        let x = rational_sqrt(&x2)?;
        let y = rational_sqrt(&y2)?;
        let y = if b.is_negative() { -y } else { y };
        let cand = GaussRat { re: x, im: y };
        if &(&cand * &cand) == self {
            Some(cand)
        } else {
            None
        }
    }
}

/// Exact square root of a non-negative rational, if it is a perfect square.
pub fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let num = q.numer().sqrt();
    let den = q.denom().sqrt();
    if &(&num * &num) == q.numer() && &(&den * &den) == q.denom() {
        Some(BigRational::new(num, den))
    } else {
        None
    }
}

impl Add for &GaussRat {
    type Output = GaussRat;
    fn add(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussRat {
    type Output = GaussRat;
    fn sub(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussRat {
    type Output = GaussRat;
    fn mul(self, rhs: &GaussRat) -> GaussRat {
        GaussRat {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Div for &GaussRat {
    type Output = GaussRat;
    fn div(self, rhs: &GaussRat) -> GaussRat {
        let inv = rhs.inv().expect("division by zero");
        self * &inv
    }
}

impl Neg for &GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Neg for GaussRat {
    type Output = GaussRat;
    fn neg(self) -> GaussRat {
        GaussRat {
            re: -self.re,
            im: -self.im,
        }
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl GaussRat {
    /// Canonical printing, parseable by the constant fragment of the
    /// polynomial grammar: `3`, `-1/2`, `i`, `-2*i`, `1+2*i`, `1-1/3*i`.
    pub fn to_canonical_string(&self) -> String {
        if self.im.is_zero() {
            return fmt_rational(&self.re);
        }
        let im_part = if self.im.is_one() {
            "i".to_string()
        } else if (-self.im.clone()).is_one() {
            "-i".to_string()
        } else {
            format!("{}*i", fmt_rational(&self.im))
        };
        if self.re.is_zero() {
            return im_part;
        }
        if self.im.is_negative() {
            // im_part already starts with '-'
            format!("{}{}", fmt_rational(&self.re), im_part)
        } else {
            format!("{}+{}", fmt_rational(&self.re), im_part)
        }
    }
}

impl fmt::Display for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

impl fmt::Debug for GaussRat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_canonical_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let z = GaussRat::new(
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::from_integer(BigInt::from(3)),
        );
        let w = GaussRat::i();
        let p = &z * &w;
        assert_eq!(p.re, BigRational::from_integer(BigInt::from(-3)));
        assert_eq!(p.im, BigRational::new(BigInt::from(1), BigInt::from(2)));
        let q = &p / &w;
        assert_eq!(q, z);
    }

    #[test]
    fn sqrt_cases() {
        // √(2i) = 1 + i
        let two_i = GaussRat::new(BigRational::zero(), BigRational::from_integer(BigInt::from(2)));
        let s = two_i.sqrt().unwrap();
        assert_eq!(s, GaussRat::new(BigRational::one(), BigRational::one()));
        // √(-1) = i
        let minus_one = GaussRat::from_int(-1);
        assert_eq!(minus_one.sqrt().unwrap(), GaussRat::i());
        // 2 is not a rational square
        assert!(GaussRat::from_int(2).sqrt().is_none());
    }

    #[test]
    fn canonical_strings() {
        assert_eq!(GaussRat::from_ratio(-3, 2).to_canonical_string(), "-3/2");
        assert_eq!(GaussRat::i().to_canonical_string(), "i");
        let z = GaussRat::new(
            BigRational::one(),
            BigRational::new(BigInt::from(-1), BigInt::from(3)),
        );
        assert_eq!(z.to_canonical_string(), "1-1/3*i");
    }
}
