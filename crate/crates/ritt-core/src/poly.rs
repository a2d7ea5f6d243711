//! Dense univariate polynomials over the Gaussian rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::scalar::GaussianRational;

/// Polynomial with coefficients in ascending degree order.
///
/// Canonical form: the zero polynomial is the empty vector, and the last
/// stored coefficient is always nonzero. Every constructor and operation
/// normalizes its output, so `==` is exact equality of polynomials.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<GaussianRational>,
}

impl Polynomial {
    /// Builds a polynomial from ascending coefficients, trimming
    /// trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().is_some_and(GaussianRational::is_zero) {
            coeffs.pop();
        }
        Polynomial { coeffs }
    }

    /// Integer coefficients in ascending order, e.g. `[0, -3, 0, 4]`
    /// for `4z^3 - 3z`.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Polynomial::from_coeffs(coeffs.iter().map(|&c| GaussianRational::from_int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Polynomial::constant(GaussianRational::one())
    }

    /// The identity polynomial `z`.
    pub fn identity() -> Self {
        Polynomial::from_coeffs(vec![GaussianRational::zero(), GaussianRational::one()])
    }

    pub fn constant(c: GaussianRational) -> Self {
        Polynomial::from_coeffs(vec![c])
    }

    /// `c * z^n`.
    pub fn monomial(c: GaussianRational, n: usize) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); n + 1];
        coeffs[n] = c;
        Polynomial { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `z^k` (zero beyond the stored length).
    pub fn coeff(&self, k: usize) -> GaussianRational {
        self.coeffs.get(k).cloned().unwrap_or_else(GaussianRational::zero)
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    /// Leading coefficient; `None` for the zero polynomial.
    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(GaussianRational::is_one)
    }

    /// Exponents carrying a nonzero coefficient, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, _)| k)
            .collect()
    }

    pub fn scale(&self, s: &GaussianRational) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero();
        }
        Polynomial::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * &GaussianRational::from_int(k as i64))
                .collect(),
        )
    }

    /// Exact Horner evaluation.
    pub fn evaluate(&self, p: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * p) + c;
        }
        acc
    }

    /// Composition `self(g)` by Horner's scheme in polynomial arithmetic.
    /// For nonconstant inputs the degree multiplies.
    pub fn compose(&self, g: &Polynomial) -> Polynomial {
        let mut acc = Polynomial::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * g) + &Polynomial::constant(c.clone());
        }
        acc
    }

    pub fn pow(&self, mut n: usize) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &base;
            }
            n >>= 1;
            if n > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q*d + r` with `deg r < deg d`.
    /// Panics if `d` is zero.
    pub fn div_rem(&self, d: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.leading().unwrap().inv();
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return (Polynomial::zero(), self.clone());
        }
        let qlen = rem.len() - dd;
        let mut q = vec![GaussianRational::zero(); qlen];
        for k in (0..qlen).rev() {
            let c = &rem[k + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[k + j] = &rem[k + j] - &(&c * dc);
                }
            }
            q[k] = c;
        }
        (Polynomial::from_coeffs(q), Polynomial::from_coeffs(rem))
    }

    /// Monic greatest common divisor; zero if both inputs are zero.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        match a.leading() {
            Some(l) if !l.is_one() => {
                let inv = l.inv();
                a.scale(&inv)
            }
            _ => a,
        }
    }

    /// Left-linear normalization `(f - f(0)) / lc(f)`: monic with zero
    /// constant term. This is the canonical representative of `f` under
    /// `f -> sigma . f` for linear `sigma`.
    pub fn canonical_right_form(&self) -> Polynomial {
        let lc = self.leading().expect("canonical form of zero polynomial");
        let inv = lc.inv();
        let mut shifted = self.clone();
        if !shifted.coeffs.is_empty() {
            shifted.coeffs[0] = GaussianRational::zero();
        }
        Polynomial::from_coeffs(shifted.coeffs.iter().map(|c| c * &inv).collect())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) + &rhs.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for k in 0..n {
            out.push(&self.coeff(k) - &rhs.coeff(k));
        }
        Polynomial::from_coeffs(out)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Polynomial::from_coeffs(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// Renders one real or imaginary component of a term, without sign.
fn write_term(
    f: &mut fmt::Formatter<'_>,
    q: &num_rational::BigRational,
    imag: bool,
    deg: usize,
) -> fmt::Result {
    let is_unit = q.abs().is_one();
    let var = deg > 0;
    if !is_unit || (!imag && !var) {
        if q.abs().denom().is_one() {
            write!(f, "{}", q.abs())?;
        } else {
            write!(f, "({})", q.abs())?;
        }
    }
    if imag {
        write!(f, "i")?;
    }
    if var {
        if deg == 1 {
            write!(f, "z")?;
        } else {
            write!(f, "z^{}", deg)?;
        }
    }
    Ok(())
}

impl fmt::Display for Polynomial {
    /// Canonical text form: fully expanded, descending degree, explicit
    /// rational coefficients; a coefficient with both real and imaginary
    /// parts is written as two terms of the same degree.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for deg in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[deg];
            for (q, imag) in [(c.re(), false), (c.im(), true)] {
                if q.is_zero() {
                    continue;
                }
                if first {
                    if q.is_negative() {
                        write!(f, "-")?;
                    }
                    first = false;
                } else if q.is_negative() {
                    write!(f, " - ")?;
                } else {
                    write!(f, " + ")?;
                }
                write_term(f, q, imag, deg)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheb::chebyshev;

    #[test]
    fn canonical_zero_encoding() {
        let p = Polynomial::from_ints(&[0, 0, 0]);
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
        assert_eq!(p.coeffs().len(), 0);
    }

    #[test]
    fn degree_and_leading() {
        let p = Polynomial::from_ints(&[1, 0, 2, 0]);
        assert_eq!(p.degree(), Some(2));
        assert_eq!(p.leading().unwrap(), &GaussianRational::from_int(2));
    }

    #[test]
    fn compose_monomial_substitution() {
        // (z^2 + 1) . z^3 = z^6 + 1
        let f = Polynomial::from_ints(&[1, 0, 1]);
        let g = Polynomial::monomial(GaussianRational::one(), 3);
        assert_eq!(f.compose(&g), Polynomial::from_ints(&[1, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn compose_identity() {
        let f = Polynomial::from_ints(&[3, -1, 0, 7]);
        assert_eq!(f.compose(&Polynomial::identity()), f);
    }

    #[test]
    fn compose_chebyshev_pieces() {
        // T_2 . T_3 = T_6, with T_6 from the recurrence.
        let t2 = Polynomial::from_ints(&[-1, 0, 2]);
        let t3 = Polynomial::from_ints(&[0, -3, 0, 4]);
        assert_eq!(t2.compose(&t3), chebyshev(6));
    }

    #[test]
    fn evaluate_examples() {
        let p = Polynomial::from_ints(&[1, 0, 1]);
        assert!(p.evaluate(&GaussianRational::i()).is_zero());
        let t3 = Polynomial::from_ints(&[0, -3, 0, 4]);
        assert_eq!(t3.evaluate(&GaussianRational::one()), GaussianRational::one());
        assert!(Polynomial::zero()
            .evaluate(&GaussianRational::from_int(17))
            .is_zero());
    }

    #[test]
    fn div_rem_round_trip() {
        let a = Polynomial::from_ints(&[1, 2, 0, 3, 4]);
        let d = Polynomial::from_ints(&[2, 0, 1]);
        let (q, r) = a.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, a);
        assert!(r.degree() < d.degree());
    }

    #[test]
    fn gcd_is_monic() {
        let a = Polynomial::from_ints(&[0, 2, 2]); // 2z(z+1)
        let b = Polynomial::from_ints(&[0, 0, 3, 3]); // 3z^2(z+1)
        let g = a.gcd(&b);
        assert_eq!(g, Polynomial::from_ints(&[0, 1, 1]));
    }

    #[test]
    fn canonical_right_form_strips_left_linear() {
        let f = Polynomial::from_ints(&[5, 0, 0, 2]); // 2z^3 + 5
        let c = f.canonical_right_form();
        assert_eq!(c, Polynomial::from_ints(&[0, 0, 0, 1]));
    }

    #[test]
    fn display_canonical_form() {
        assert_eq!(chebyshev(6).to_string(), "32z^6 - 48z^4 + 18z^2 - 1");
        assert_eq!(Polynomial::zero().to_string(), "0");
        let p = Polynomial::from_coeffs(vec![
            GaussianRational::from_parts(0, 1, 3, 1),
            GaussianRational::zero(),
            GaussianRational::from_ratio(1, 2),
        ]);
        assert_eq!(p.to_string(), "(1/2)z^2 + 3i");
        let mixed = Polynomial::from_coeffs(vec![
            GaussianRational::from_parts(1, 1, -2, 1),
            GaussianRational::from_int(-1),
        ]);
        assert_eq!(mixed.to_string(), "-z + 1 - 2i");
    }
}
