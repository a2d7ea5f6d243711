//! Exact scalars: rational numbers extended by the imaginary unit.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A complex number `re + im*i` with arbitrary-precision rational parts.
///
/// `BigRational` keeps each part in lowest terms with a positive
/// denominator, so `==` is exact structural equality.
#[derive(Clone, PartialEq, Eq)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        GaussianRational::new(BigRational::one(), BigRational::zero())
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    /// `num/den` as a real scalar. Panics if `den == 0`.
    pub fn from_ratio(num: i64, den: i64) -> Self {
        GaussianRational::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// `re_num/re_den + (im_num/im_den) i`.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        GaussianRational::new(
            BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        )
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
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
        GaussianRational::new(self.re.clone(), -self.im.clone())
    }

    /// `re^2 + im^2`, the multiplicative norm into the rationals.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero scalar");
        let n = self.norm_sq();
        GaussianRational::new(&self.re / &n, -&self.im / &n)
    }

    /// Exact square root in the Gaussian rationals, if one exists.
    ///
    /// The returned root is canonical: positive real part, or zero real
    /// part and nonnegative imaginary part.
    pub fn sqrt(&self) -> Option<GaussianRational> {
        let root = if self.im.is_zero() {
            if self.re.is_negative() {
                let b = rational_sqrt(&-self.re.clone())?;
                GaussianRational::new(BigRational::zero(), b)
            } else {
                let a = rational_sqrt(&self.re)?;
                GaussianRational::new(a, BigRational::zero())
            }
        } else {
            // (a + bi)^2 = x + yi forces a^2 + b^2 = sqrt(x^2 + y^2).
            let r = rational_sqrt(&self.norm_sq())?;
            let half = BigRational::new(BigInt::one(), BigInt::from(2));
            let a_sq = (&self.re + &r) * &half;
            let a = rational_sqrt(&a_sq)?;
            if a.is_zero() {
                return None;
            }
            let b = &self.im / (&a * BigRational::from_integer(BigInt::from(2)));
            GaussianRational::new(a, b)
        };
        if &root * &root != *self {
            return None;
        }
        Some(canonical_sign(root))
    }

    /// Total order on (re, im) pairs; used only for deterministic
    /// tie-breaking, not as a field order.
    pub fn lex_cmp(&self, other: &Self) -> Ordering {
        self.re.cmp(&other.re).then_with(|| self.im.cmp(&other.im))
    }
}

/// Flip the sign so that `re > 0`, or `re == 0 && im >= 0`.
fn canonical_sign(v: GaussianRational) -> GaussianRational {
    let flip = v.re.is_negative() || (v.re.is_zero() && v.im.is_negative());
    if flip {
        -v
    } else {
        v
    }
}

/// Exact square root of a nonnegative rational, if it is a perfect square.
fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let sn = q.numer().sqrt();
    let sd = q.denom().sqrt();
    if &sn * &sn == *q.numer() && &sd * &sd == *q.denom() {
        Some(BigRational::new(sn, sd))
    } else {
        None
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re + rhs.re, self.im + rhs.im)
    }
}

impl<'a> Add<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: GaussianRational) -> GaussianRational {
        GaussianRational::new(self.re - rhs.re, self.im - rhs.im)
    }
}

impl<'a> Sub<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: GaussianRational) -> GaussianRational {
        (&self).mul(&rhs)
    }
}

impl<'a> Mul<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: GaussianRational) -> GaussianRational {
        (&self).div(&rhs)
    }
}

impl<'a> Div<&'a GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        self.mul(&rhs.inv())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re, -self.im)
    }
}

impl<'a> Neg for &'a GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-self.re.clone(), -self.im.clone())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        if self.re.is_zero() {
            return write!(f, "{}i", self.im);
        }
        if self.im.is_negative() {
            write!(f, "{}{}i", self.re, self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_basics() {
        let i = GaussianRational::i();
        assert_eq!(&i * &i, GaussianRational::from_int(-1));
        let x = GaussianRational::from_parts(1, 2, -3, 1);
        let y = &x * &x.inv();
        assert!(y.is_one());
    }

    #[test]
    fn sqrt_of_squares() {
        let cases = [
            GaussianRational::from_int(4),
            GaussianRational::from_ratio(9, 16),
            GaussianRational::from_int(-4),
            GaussianRational::new(
                BigRational::zero(),
                BigRational::from_integer(BigInt::from(2)),
            ),
            GaussianRational::from_parts(3, 1, 4, 1),
        ];
        for c in cases {
            let r = c.sqrt().expect("square root should exist");
            assert_eq!(&r * &r, c);
        }
    }

    #[test]
    fn sqrt_rejects_non_squares() {
        assert!(GaussianRational::from_int(2).sqrt().is_none());
        assert!(GaussianRational::i().sqrt().is_none());
        assert!(GaussianRational::from_ratio(1, 3).sqrt().is_none());
    }

    #[test]
    fn sqrt_sign_is_canonical() {
        let r = GaussianRational::from_int(9).sqrt().unwrap();
        assert_eq!(r, GaussianRational::from_int(3));
        let r = GaussianRational::from_int(-9).sqrt().unwrap();
        assert_eq!(r, GaussianRational::from_parts(0, 1, 3, 1));
    }

    #[test]
    fn lex_order_is_total_on_samples() {
        let a = GaussianRational::from_int(1);
        let b = GaussianRational::from_parts(1, 1, 1, 2);
        assert_eq!(a.lex_cmp(&b), Ordering::Less);
        assert_eq!(b.lex_cmp(&a), Ordering::Greater);
        assert_eq!(a.lex_cmp(&a), Ordering::Equal);
    }
}
