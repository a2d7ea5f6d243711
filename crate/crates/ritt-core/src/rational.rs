//! Reduced rational functions over the Gaussian rationals.

use std::fmt;

use crate::poly::Polynomial;
use crate::scalar::GaussianRational;

/// A rational function `num/den` kept in canonical reduced form:
/// `gcd(num, den) = 1` and `den` monic (hence nonzero).
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Reduces `num/den` to canonical form. Panics if `den` is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return RationalFunction {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, _) = num.div_rem(&g);
        let (den, _) = den.div_rem(&g);
        let lead_inv = den.leading().unwrap().inv();
        RationalFunction {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }

    pub fn from_poly(p: Polynomial) -> Self {
        RationalFunction {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn zero() -> Self {
        RationalFunction::from_poly(Polynomial::zero())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den == Polynomial::one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.is_polynomial()
    }

    /// Exact evaluation; `None` where the denominator vanishes.
    pub fn evaluate(&self, p: &GaussianRational) -> Option<GaussianRational> {
        let d = self.den.evaluate(p);
        if d.is_zero() {
            return None;
        }
        Some(&self.num.evaluate(p) / &d)
    }
}

impl From<Polynomial> for RationalFunction {
    fn from(p: Polynomial) -> Self {
        RationalFunction::from_poly(p)
    }
}

/// Composition `f(g)` of reduced rational functions; `g` must be
/// nonconstant. The result is reduced.
pub fn compose_rational(f: &RationalFunction, g: &RationalFunction) -> RationalFunction {
    assert!(!g.is_constant(), "composition with constant inner function");
    // f = p/q, g = u/v: f(g) = P/Q with
    //   P = sum_i p_i u^i v^(m-i),  Q = sum_i q_i u^i v^(m-i),
    // homogenized at m = max(deg p, deg q).
    let p = &f.num;
    let q = &f.den;
    let m = p.coeffs().len().max(q.coeffs().len()).saturating_sub(1);
    let mut u_pows = Vec::with_capacity(m + 1);
    let mut v_pows = Vec::with_capacity(m + 1);
    u_pows.push(Polynomial::one());
    v_pows.push(Polynomial::one());
    for k in 1..=m {
        u_pows.push(&u_pows[k - 1] * g.num());
        v_pows.push(&v_pows[k - 1] * g.den());
    }
    let mut num = Polynomial::zero();
    let mut den = Polynomial::zero();
    for i in 0..=m {
        let weight = &u_pows[i] * &v_pows[m - i];
        let pc = p.coeff(i);
        if !pc.is_zero() {
            num = &num + &weight.scale(&pc);
        }
        let qc = q.coeff(i);
        if !qc.is_zero() {
            den = &den + &weight.scale(&qc);
        }
    }
    assert!(!den.is_zero(), "degenerate composition: denominator vanished");
    RationalFunction::new(num, den)
}

/// `f(g)` for polynomial `f` over a rational inner function.
pub fn compose_poly_rational(f: &Polynomial, g: &RationalFunction) -> RationalFunction {
    compose_rational(&RationalFunction::from_poly(f.clone()), g)
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &Polynomial| {
            let s = p.to_string();
            if s.contains(' ') {
                format!("({})", s)
            } else {
                s
            }
        };
        write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheb::chebyshev;

    fn half_z_inv_plus_z() -> RationalFunction {
        // (z^2 + 1) / (2z): the Joukowski-style map behind the Laurent identity.
        RationalFunction::new(
            Polynomial::from_ints(&[1, 0, 1]),
            Polynomial::from_ints(&[0, 2]),
        )
    }

    #[test]
    fn reduction_and_monic_den() {
        // (2z^2 + 2z) / (4z) = (z + 1) / 2
        let r = RationalFunction::new(
            Polynomial::from_ints(&[0, 2, 2]),
            Polynomial::from_ints(&[0, 4]),
        );
        assert_eq!(r.num(), &Polynomial::from_ints(&[1, 1]).scale(&GaussianRational::from_ratio(1, 2)));
        assert_eq!(r.den(), &Polynomial::one());
        assert!(r.den().is_monic());
    }

    #[test]
    fn reduction_is_idempotent() {
        let r = RationalFunction::new(
            Polynomial::from_ints(&[0, 0, 6, 6]),
            Polynomial::from_ints(&[0, 3, 3]),
        );
        let again = RationalFunction::new(r.num().clone(), r.den().clone());
        assert_eq!(r, again);
    }

    #[test]
    fn compose_reciprocal_with_cube() {
        // (1/z) . z^3 = 1/z^3
        let f = RationalFunction::new(Polynomial::one(), Polynomial::identity());
        let g = RationalFunction::from_poly(Polynomial::monomial(GaussianRational::one(), 3));
        let expect = RationalFunction::new(
            Polynomial::one(),
            Polynomial::monomial(GaussianRational::one(), 3),
        );
        assert_eq!(compose_rational(&f, &g), expect);
    }

    #[test]
    fn compose_reduces() {
        // (z^3/(z^3+1)) . z^2 = z^6/(z^6+1)
        let f = RationalFunction::new(
            Polynomial::from_ints(&[0, 0, 0, 1]),
            Polynomial::from_ints(&[1, 0, 0, 1]),
        );
        let g = RationalFunction::from_poly(Polynomial::from_ints(&[0, 0, 1]));
        let expect = RationalFunction::new(
            Polynomial::from_ints(&[0, 0, 0, 0, 0, 0, 1]),
            Polynomial::from_ints(&[1, 0, 0, 0, 0, 0, 1]),
        );
        assert_eq!(compose_rational(&f, &g), expect);
    }

    #[test]
    fn laurent_identity_base_case() {
        // T_2((z^2+1)/(2z)) = (z^4+1)/(2z^2)
        let got = compose_poly_rational(&chebyshev(2), &half_z_inv_plus_z());
        let expect = RationalFunction::new(
            Polynomial::from_ints(&[1, 0, 0, 0, 1]),
            Polynomial::from_ints(&[0, 0, 2]),
        );
        assert_eq!(got, expect);
    }

    #[test]
    fn laurent_identity_small_n() {
        for n in 0..=8usize {
            let lhs = compose_poly_rational(&chebyshev(n), &half_z_inv_plus_z());
            let mut num = vec![0i64; 2 * n + 1];
            num[0] += 1;
            num[2 * n] += 1;
            let mut den = vec![0i64; n + 1];
            den[n] = 2;
            let rhs = RationalFunction::new(
                Polynomial::from_ints(&num),
                Polynomial::from_ints(&den),
            );
            assert_eq!(lhs, rhs, "n = {}", n);
        }
    }

    #[test]
    fn evaluate_avoids_poles() {
        let f = RationalFunction::new(Polynomial::one(), Polynomial::identity());
        assert_eq!(f.evaluate(&GaussianRational::zero()), None);
        assert_eq!(
            f.evaluate(&GaussianRational::from_int(2)),
            Some(GaussianRational::from_ratio(1, 2))
        );
    }
}
