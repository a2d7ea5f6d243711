//! Arithmetic in a quadratic extension of the Gaussian rationals.
//!
//! The Chebyshev recognizer produces a scale `u` with `u^2` in the base
//! field but possibly `u` itself outside it. Values here have the form
//! `base + surd_coeff * sqrt(surd_square)` for one fixed non-square
//! radicand per computation; mixing radicands is a programming error.

use crate::linear::LinearMap;
use crate::poly::Polynomial;
use crate::scalar::GaussianRational;

/// `base + surd_coeff * sqrt(surd_square)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt {
    pub base: GaussianRational,
    pub surd_coeff: GaussianRational,
    pub surd_square: GaussianRational,
}

impl QuadExt {
    pub fn from_base(base: GaussianRational, square: &GaussianRational) -> Self {
        QuadExt {
            base,
            surd_coeff: GaussianRational::zero(),
            surd_square: square.clone(),
        }
    }

    /// The generator `sqrt(square)` itself.
    pub fn surd(square: &GaussianRational) -> Self {
        QuadExt {
            base: GaussianRational::zero(),
            surd_coeff: GaussianRational::one(),
            surd_square: square.clone(),
        }
    }

    pub fn zero(square: &GaussianRational) -> Self {
        QuadExt::from_base(GaussianRational::zero(), square)
    }

    pub fn one(square: &GaussianRational) -> Self {
        QuadExt::from_base(GaussianRational::one(), square)
    }

    pub fn is_zero(&self) -> bool {
        self.base.is_zero() && self.surd_coeff.is_zero()
    }

    /// Whether the value lies in the base field.
    pub fn is_base(&self) -> bool {
        self.surd_coeff.is_zero()
    }

    pub fn to_base(&self) -> Option<GaussianRational> {
        self.is_base().then(|| self.base.clone())
    }

    fn same_square(&self, other: &QuadExt) {
        assert!(
            self.surd_square == other.surd_square,
            "mixed quadratic extensions"
        );
    }

    pub fn add(&self, other: &QuadExt) -> QuadExt {
        self.same_square(other);
        QuadExt {
            base: &self.base + &other.base,
            surd_coeff: &self.surd_coeff + &other.surd_coeff,
            surd_square: self.surd_square.clone(),
        }
    }

    pub fn sub(&self, other: &QuadExt) -> QuadExt {
        self.same_square(other);
        QuadExt {
            base: &self.base - &other.base,
            surd_coeff: &self.surd_coeff - &other.surd_coeff,
            surd_square: self.surd_square.clone(),
        }
    }

    pub fn neg(&self) -> QuadExt {
        QuadExt {
            base: -&self.base,
            surd_coeff: -&self.surd_coeff,
            surd_square: self.surd_square.clone(),
        }
    }

    pub fn mul(&self, other: &QuadExt) -> QuadExt {
        self.same_square(other);
        let s = &self.surd_square;
        QuadExt {
            base: &(&self.base * &other.base) + &(&(&self.surd_coeff * &other.surd_coeff) * s),
            surd_coeff: &(&self.base * &other.surd_coeff) + &(&self.surd_coeff * &other.base),
            surd_square: s.clone(),
        }
    }

    /// Inverse via the conjugate. Requires the radicand to be a
    /// non-square whenever the surd part is nonzero, which the
    /// recognizer guarantees.
    pub fn inv(&self) -> QuadExt {
        let conj = QuadExt {
            base: self.base.clone(),
            surd_coeff: -&self.surd_coeff,
            surd_square: self.surd_square.clone(),
        };
        let n = self.mul(&conj);
        assert!(n.is_base() && !n.base.is_zero(), "non-invertible extension scalar");
        let ninv = n.base.inv();
        QuadExt {
            base: &conj.base * &ninv,
            surd_coeff: &conj.surd_coeff * &ninv,
            surd_square: self.surd_square.clone(),
        }
    }

    pub fn pow(&self, n: usize) -> QuadExt {
        let mut acc = QuadExt::one(&self.surd_square);
        for _ in 0..n {
            acc = acc.mul(self);
        }
        acc
    }
}

/// Affine map `alpha*z + beta` with extension coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtLinear {
    pub alpha: QuadExt,
    pub beta: QuadExt,
}

impl ExtLinear {
    pub fn new(alpha: QuadExt, beta: QuadExt) -> Self {
        assert!(!alpha.is_zero(), "extension linear map with zero slope");
        ExtLinear { alpha, beta }
    }

    pub fn invert(&self) -> ExtLinear {
        let inv = self.alpha.inv();
        ExtLinear {
            alpha: inv.clone(),
            beta: inv.mul(&self.beta).neg(),
        }
    }

    pub fn to_base(&self) -> Option<LinearMap> {
        Some(LinearMap::new(self.alpha.to_base()?, self.beta.to_base()?))
    }
}

/// Polynomial `p0 + p1 * sqrt(square)` with base-field halves, reusing
/// base polynomial arithmetic for the extension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtPoly {
    pub p0: Polynomial,
    pub p1: Polynomial,
    pub square: GaussianRational,
}

impl ExtPoly {
    pub fn from_base(p: Polynomial, square: &GaussianRational) -> Self {
        ExtPoly {
            p0: p,
            p1: Polynomial::zero(),
            square: square.clone(),
        }
    }

    pub fn constant(c: &QuadExt) -> Self {
        ExtPoly {
            p0: Polynomial::constant(c.base.clone()),
            p1: Polynomial::constant(c.surd_coeff.clone()),
            square: c.surd_square.clone(),
        }
    }

    pub fn is_base(&self) -> bool {
        self.p1.is_zero()
    }

    pub fn to_base(&self) -> Option<Polynomial> {
        self.is_base().then(|| self.p0.clone())
    }

    pub fn add(&self, other: &ExtPoly) -> ExtPoly {
        assert!(self.square == other.square, "mixed quadratic extensions");
        ExtPoly {
            p0: &self.p0 + &other.p0,
            p1: &self.p1 + &other.p1,
            square: self.square.clone(),
        }
    }

    pub fn mul(&self, other: &ExtPoly) -> ExtPoly {
        assert!(self.square == other.square, "mixed quadratic extensions");
        let cross = &(&self.p0 * &other.p1) + &(&self.p1 * &other.p0);
        let surd_sq = (&self.p1 * &other.p1).scale(&self.square);
        ExtPoly {
            p0: &(&self.p0 * &other.p0) + &surd_sq,
            p1: cross,
            square: self.square.clone(),
        }
    }

    pub fn scale(&self, c: &QuadExt) -> ExtPoly {
        self.mul(&ExtPoly::constant(c))
    }

    /// Constant coefficient.
    pub fn coeff0(&self) -> QuadExt {
        QuadExt {
            base: self.p0.coeff(0),
            surd_coeff: self.p1.coeff(0),
            surd_square: self.square.clone(),
        }
    }

    pub fn leading(&self) -> QuadExt {
        let d = self
            .p0
            .degree()
            .into_iter()
            .chain(self.p1.degree())
            .max()
            .unwrap_or(0);
        QuadExt {
            base: self.p0.coeff(d),
            surd_coeff: self.p1.coeff(d),
            surd_square: self.square.clone(),
        }
    }
}

/// `f(m)` for a base polynomial `f` over an extension affine map, by
/// Horner's scheme in extension arithmetic.
pub fn compose_base_over_ext(f: &Polynomial, m: &ExtLinear) -> ExtPoly {
    let sq = &m.alpha.surd_square;
    let lin = ExtPoly {
        p0: Polynomial::from_coeffs(vec![m.beta.base.clone(), m.alpha.base.clone()]),
        p1: Polynomial::from_coeffs(vec![m.beta.surd_coeff.clone(), m.alpha.surd_coeff.clone()]),
        square: sq.clone(),
    };
    let mut acc = ExtPoly::from_base(Polynomial::zero(), sq);
    for c in f.coeffs().iter().rev() {
        acc = acc
            .mul(&lin)
            .add(&ExtPoly::from_base(Polynomial::constant(c.clone()), sq));
    }
    acc
}
