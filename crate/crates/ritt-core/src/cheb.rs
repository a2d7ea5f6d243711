//! Chebyshev polynomials of the first kind.

use crate::poly::Polynomial;
use crate::scalar::GaussianRational;

/// `T_n` from the three-term recurrence
/// `T_0 = 1`, `T_1 = z`, `T_{n+1} = 2z*T_n - T_{n-1}`.
pub fn chebyshev(n: usize) -> Polynomial {
    let mut prev = Polynomial::one();
    if n == 0 {
        return prev;
    }
    let mut cur = Polynomial::identity();
    let two_z = Polynomial::monomial(GaussianRational::from_int(2), 1);
    for _ in 1..n {
        let next = &(&two_z * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_base() {
        assert_eq!(chebyshev(0), Polynomial::one());
        assert_eq!(chebyshev(1), Polynomial::identity());
    }

    #[test]
    fn small_values() {
        assert_eq!(chebyshev(2), Polynomial::from_ints(&[-1, 0, 2]));
        assert_eq!(chebyshev(3), Polynomial::from_ints(&[0, -3, 0, 4]));
        assert_eq!(chebyshev(6), Polynomial::from_ints(&[-1, 0, 18, 0, -48, 0, 32]));
    }

    #[test]
    fn semigroup_sample() {
        // T_m . T_n = T_{mn} = T_n . T_m
        for (m, n) in [(2usize, 3usize), (3, 4), (2, 5), (4, 5)] {
            let tm = chebyshev(m);
            let tn = chebyshev(n);
            assert_eq!(tm.compose(&tn), chebyshev(m * n));
            assert_eq!(tn.compose(&tm), chebyshev(m * n));
        }
    }

    #[test]
    fn cosine_fixed_point() {
        // T_n(1) = 1 for every n, the algebraic shadow of cos(0) = 1.
        for n in 0..12 {
            assert_eq!(
                chebyshev(n).evaluate(&GaussianRational::one()),
                GaussianRational::one()
            );
        }
    }
}
