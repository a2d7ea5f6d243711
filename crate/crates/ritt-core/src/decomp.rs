//! Functional decomposition: left division, right factors, maximal
//! chains, and common right factors.

use std::fmt;

use num_integer::Integer;

use crate::poly::Polynomial;
use crate::scalar::GaussianRational;

/// Failure of an exact composition-division request.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotComposable(pub &'static str);

impl fmt::Display for NotComposable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "not composable: {}", self.0)
    }
}

impl std::error::Error for NotComposable {}

/// A maximal decomposition into indecomposable factors, outermost first.
/// Composing the factors left to right reproduces the original
/// polynomial exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionChain {
    pub factors: Vec<Polynomial>,
}

impl DecompositionChain {
    /// Recompose the chain into a single polynomial.
    pub fn recompose(&self) -> Polynomial {
        let mut it = self.factors.iter();
        let first = it.next().expect("empty decomposition chain").clone();
        it.fold(first, |acc, g| acc.compose(g))
    }
}

/// Common right factor data: `A = A_tilde . W`, `B = B_tilde . W`,
/// with `W` canonical (monic, zero constant term).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommonRightFactorResult {
    pub w: Polynomial,
    pub a_tilde: Polynomial,
    pub b_tilde: Polynomial,
}

/// Finds `h` with `f = h . g`, if it exists. The quotient is unique.
///
/// Top-down elimination: the coefficient of `h` at degree `j` is read
/// from the remaining coefficient of `f` at degree `j*deg(g)`, the term
/// `h_j * g^j` is subtracted, and the final remainder must vanish.
pub fn left_divide(f: &Polynomial, g: &Polynomial) -> Result<Polynomial, NotComposable> {
    let gd = g.degree().expect("left division by zero polynomial");
    assert!(gd >= 1, "left division by constant polynomial");
    if f.is_zero() {
        return Ok(Polynomial::zero());
    }
    let fd = f.degree().unwrap();
    if fd % gd != 0 {
        return Err(NotComposable("degree of the right factor does not divide"));
    }
    let k = fd / gd;
    let mut g_pows = Vec::with_capacity(k + 1);
    g_pows.push(Polynomial::one());
    for j in 1..=k {
        g_pows.push(&g_pows[j - 1] * g);
    }
    let g_lead = g.leading().unwrap().clone();
    let mut rem = f.clone();
    let mut h = vec![GaussianRational::zero(); k + 1];
    let mut lead_pow = GaussianRational::one();
    let mut lead_pows = Vec::with_capacity(k + 1);
    for _ in 0..=k {
        lead_pows.push(lead_pow.clone());
        lead_pow = &lead_pow * &g_lead;
    }
    for j in (0..=k).rev() {
        let c = &rem.coeff(j * gd) / &lead_pows[j];
        if !c.is_zero() {
            rem = &rem - &g_pows[j].scale(&c);
        }
        h[j] = c;
    }
    if rem.is_zero() {
        Ok(Polynomial::from_coeffs(h))
    } else {
        Err(NotComposable("nonzero remainder after elimination"))
    }
}

/// The canonical degree-`d` right factor of `f`, if one exists:
/// monic with zero constant term. Returns `None` when `d` does not
/// divide `deg f` or no factor of that degree exists.
///
/// The unique candidate is the truncated `(deg f / d)`-th root of the
/// monicized `f`, solved triangularly from the top; `left_divide`
/// verification makes the operation sound in every edge case.
pub fn right_factor(f: &Polynomial, d: usize) -> Option<Polynomial> {
    let n = f.degree().expect("right factor of zero polynomial");
    assert!(n >= 1, "right factor of constant polynomial");
    assert!(d >= 1 && d <= n, "right factor degree out of range");
    if n % d != 0 {
        return None;
    }
    if d == 1 {
        return Some(Polynomial::identity());
    }
    if d == n {
        return Some(f.canonical_right_form());
    }
    let m = n / d;
    let lead_inv = f.leading().unwrap().inv();
    let g = f.scale(&lead_inv);
    // W = z^d + w_{d-1} z^{d-1} + ... + w_1 z, solved so that the top
    // coefficients of W^m match those of g. The unknown at step j
    // enters linearly with coefficient m.
    let m_scalar = GaussianRational::from_int(m as i64);
    let mut w = Polynomial::monomial(GaussianRational::one(), d);
    for j in 1..d {
        let partial = w.pow(m);
        let wanted = g.coeff(n - j);
        let have = partial.coeff(n - j);
        let coeff = &(&wanted - &have) / &m_scalar;
        if !coeff.is_zero() {
            w = &w + &Polynomial::monomial(coeff, d - j);
        }
    }
    left_divide(f, &w).ok().map(|_| w)
}

/// Maximal decomposition by repeatedly extracting the smallest-degree
/// nontrivial right factor. A linear polynomial decomposes as itself.
pub fn full_decompose(f: &Polynomial) -> DecompositionChain {
    let n = f.degree().expect("decomposition of zero polynomial");
    assert!(n >= 1, "decomposition of constant polynomial");
    let mut inner_rev: Vec<Polynomial> = Vec::new();
    let mut cur = f.clone();
    loop {
        let nd = cur.degree().unwrap();
        if nd <= 1 {
            break;
        }
        let mut extracted = false;
        for d in 2..=nd / 2 {
            if nd % d != 0 {
                continue;
            }
            if let Some(w) = right_factor(&cur, d) {
                let u = left_divide(&cur, &w).expect("verified right factor must divide");
                inner_rev.push(w);
                cur = u;
                extracted = true;
                break;
            }
        }
        if !extracted {
            break;
        }
    }
    let mut factors = vec![cur];
    factors.extend(inner_rev.into_iter().rev());
    DecompositionChain { factors }
}

/// The maximal-degree common right factor of `A` and `B`, canonical
/// form, together with the cofactors. Degree-one inputs short-circuit
/// to the trivial `W = z`.
///
/// Right factors of a fixed degree are unique up to a left linear map,
/// so comparing canonical forms decides commonality.
pub fn max_common_right_factor(a: &Polynomial, b: &Polynomial) -> CommonRightFactorResult {
    let ad = a.degree().expect("common right factor of zero polynomial");
    let bd = b.degree().expect("common right factor of zero polynomial");
    assert!(ad >= 1 && bd >= 1, "common right factor of constant polynomial");
    let g = ad.gcd(&bd);
    let mut divisors: Vec<usize> = (1..=g).filter(|d| g % d == 0).collect();
    divisors.reverse();
    for d in divisors {
        let (wa, wb) = match (right_factor(a, d), right_factor(b, d)) {
            (Some(wa), Some(wb)) => (wa, wb),
            _ => continue,
        };
        if wa == wb {
            let a_tilde = left_divide(a, &wa).expect("verified factor");
            let b_tilde = left_divide(b, &wa).expect("verified factor");
            return CommonRightFactorResult {
                w: wa,
                a_tilde,
                b_tilde,
            };
        }
    }
    unreachable!("degree-1 candidate always matches");
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cheb::chebyshev;

    #[test]
    fn left_divide_monomials() {
        let f = Polynomial::from_ints(&[1, 0, 0, 0, 0, 0, 1]);
        let g = Polynomial::from_ints(&[0, 0, 0, 1]);
        assert_eq!(left_divide(&f, &g).unwrap(), Polynomial::from_ints(&[1, 0, 1]));
    }

    #[test]
    fn left_divide_chebyshev() {
        assert_eq!(left_divide(&chebyshev(6), &chebyshev(2)).unwrap(), chebyshev(3));
    }

    #[test]
    fn left_divide_support_obstruction() {
        // z^4 + z has odd support, not expressible through z^2.
        let f = Polynomial::from_ints(&[0, 1, 0, 0, 1]);
        let g = Polynomial::from_ints(&[0, 0, 1]);
        assert!(left_divide(&f, &g).is_err());
    }

    #[test]
    fn left_divide_constant_numerator() {
        let f = Polynomial::from_ints(&[5]);
        let g = Polynomial::from_ints(&[0, 0, 1]);
        assert_eq!(left_divide(&f, &g).unwrap(), Polynomial::from_ints(&[5]));
    }

    #[test]
    fn right_factor_monomial() {
        let f = Polynomial::monomial(GaussianRational::one(), 6);
        assert_eq!(
            right_factor(&f, 2).unwrap(),
            Polynomial::monomial(GaussianRational::one(), 2)
        );
    }

    #[test]
    fn right_factor_chebyshev_canonical() {
        // The canonical cubic right factor of T_6 is z^3 - (3/4)z.
        let w = right_factor(&chebyshev(6), 3).unwrap();
        let expect = Polynomial::from_coeffs(vec![
            GaussianRational::zero(),
            GaussianRational::from_ratio(-3, 4),
            GaussianRational::zero(),
            GaussianRational::one(),
        ]);
        assert_eq!(w, expect);
        // Cofactor check: T_6 = (32z^2 - 1) . (z^3 - (3/4)z).
        let u = left_divide(&chebyshev(6), &w).unwrap();
        assert_eq!(u, Polynomial::from_ints(&[-1, 0, 32]));
    }

    #[test]
    fn right_factor_rejects() {
        let f = Polynomial::from_ints(&[0, 1, 0, 0, 1]); // z^4 + z
        assert_eq!(right_factor(&f, 2), None);
    }

    #[test]
    fn full_decompose_power() {
        let f = Polynomial::monomial(GaussianRational::one(), 4);
        let chain = full_decompose(&f);
        let z2 = Polynomial::monomial(GaussianRational::one(), 2);
        assert_eq!(chain.factors, vec![z2.clone(), z2]);
        assert_eq!(chain.recompose(), f);
    }

    #[test]
    fn full_decompose_prime_degree() {
        let f = Polynomial::from_ints(&[0, 1, 0, 1]);
        let chain = full_decompose(&f);
        assert_eq!(chain.factors, vec![f]);
    }

    #[test]
    fn full_decompose_chebyshev() {
        let chain = full_decompose(&chebyshev(6));
        let degs: Vec<usize> = chain.factors.iter().map(|p| p.degree().unwrap()).collect();
        assert!(degs == vec![3, 2] || degs == vec![2, 3]);
        assert_eq!(chain.recompose(), chebyshev(6));
    }

    #[test]
    fn common_right_factor_of_powers() {
        let a = Polynomial::monomial(GaussianRational::one(), 4);
        let b = Polynomial::monomial(GaussianRational::one(), 6);
        let r = max_common_right_factor(&a, &b);
        assert_eq!(r.w, Polynomial::monomial(GaussianRational::one(), 2));
        assert_eq!(r.a_tilde, Polynomial::monomial(GaussianRational::one(), 2));
        assert_eq!(r.b_tilde, Polynomial::monomial(GaussianRational::one(), 3));
    }

    #[test]
    fn common_right_factor_constructed() {
        // A = (z^2+z)^2, B = (z^2+z)^3 + 1 share W = z^2 + z.
        let w = Polynomial::from_ints(&[0, 1, 1]);
        let a = w.pow(2);
        let b = &w.pow(3) + &Polynomial::one();
        let r = max_common_right_factor(&a, &b);
        assert_eq!(r.w, w);
        assert_eq!(r.a_tilde.compose(&r.w), a);
        assert_eq!(r.b_tilde.compose(&r.w), b);
    }

    #[test]
    fn common_right_factor_trivial() {
        let a = Polynomial::from_ints(&[0, 0, 1]);
        let b = Polynomial::from_ints(&[1, 0, 0, 1]);
        let r = max_common_right_factor(&a, &b);
        assert_eq!(r.w, Polynomial::identity());
        assert_eq!(r.a_tilde, a);
        assert_eq!(r.b_tilde, b);
    }

    #[test]
    fn degenerate_linear_input() {
        let a = Polynomial::from_ints(&[3, 2]);
        let b = Polynomial::from_ints(&[0, 0, 1]);
        let r = max_common_right_factor(&a, &b);
        assert_eq!(r.w, Polynomial::identity());
    }
}
