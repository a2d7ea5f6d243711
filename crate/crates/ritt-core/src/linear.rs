//! Invertible affine maps `alpha*z + beta`.

use std::fmt;

use crate::poly::Polynomial;
use crate::scalar::GaussianRational;

/// A degree-one polynomial viewed as an invertible map. `alpha != 0`
/// is an invariant enforced at construction.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearMap {
    alpha: GaussianRational,
    beta: GaussianRational,
}

impl LinearMap {
    pub fn new(alpha: GaussianRational, beta: GaussianRational) -> Self {
        assert!(!alpha.is_zero(), "linear map with zero leading coefficient");
        LinearMap { alpha, beta }
    }

    pub fn identity() -> Self {
        LinearMap::new(GaussianRational::one(), GaussianRational::zero())
    }

    /// The shift `z + c`.
    pub fn shift(c: GaussianRational) -> Self {
        LinearMap::new(GaussianRational::one(), c)
    }

    pub fn alpha(&self) -> &GaussianRational {
        &self.alpha
    }

    pub fn beta(&self) -> &GaussianRational {
        &self.beta
    }

    pub fn is_identity(&self) -> bool {
        self.alpha.is_one() && self.beta.is_zero()
    }

    /// The inverse map: `m.invert().compose(&m)` is the identity.
    pub fn invert(&self) -> LinearMap {
        let inv = self.alpha.inv();
        LinearMap::new(inv.clone(), -&(&inv * &self.beta))
    }

    /// `self . other`, i.e. apply `other` first.
    pub fn compose(&self, other: &LinearMap) -> LinearMap {
        LinearMap::new(
            &self.alpha * &other.alpha,
            &(&self.alpha * &other.beta) + &self.beta,
        )
    }

    pub fn apply(&self, p: &GaussianRational) -> GaussianRational {
        &(&self.alpha * p) + &self.beta
    }

    pub fn to_poly(&self) -> Polynomial {
        Polynomial::from_coeffs(vec![self.beta.clone(), self.alpha.clone()])
    }

    /// `self . p` for a polynomial `p`: scale then shift.
    pub fn after(&self, p: &Polynomial) -> Polynomial {
        &p.scale(&self.alpha) + &Polynomial::constant(self.beta.clone())
    }
}

impl fmt::Display for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly())
    }
}

impl fmt::Debug for LinearMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lin(a: i64, b: i64) -> LinearMap {
        LinearMap::new(GaussianRational::from_int(a), GaussianRational::from_int(b))
    }

    #[test]
    fn invert_examples() {
        // (z+1)^-1 = z-1
        assert_eq!(lin(1, 1).invert(), lin(1, -1));
        // (2z)^-1 = z/2
        assert_eq!(
            lin(2, 0).invert(),
            LinearMap::new(GaussianRational::from_ratio(1, 2), GaussianRational::zero())
        );
        // (2z+3)^-1 = (z-3)/2
        assert_eq!(
            lin(2, 3).invert(),
            LinearMap::new(
                GaussianRational::from_ratio(1, 2),
                GaussianRational::from_ratio(-3, 2)
            )
        );
    }

    #[test]
    fn inverse_composes_to_identity() {
        let m = LinearMap::new(
            GaussianRational::from_parts(2, 3, 1, 1),
            GaussianRational::from_int(-7),
        );
        assert!(m.invert().compose(&m).is_identity());
        assert!(m.compose(&m.invert()).is_identity());
    }

    #[test]
    fn compose_matches_polynomial_composition() {
        let m = lin(3, -2);
        let n = lin(-1, 5);
        let via_poly = m.to_poly().compose(&n.to_poly());
        assert_eq!(m.compose(&n).to_poly(), via_poly);
    }
}
