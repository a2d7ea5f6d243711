//! Solver for `C(A(z)) = D(B(z))`: normal-form recognizers, an
//! independent linear-algebra existence oracle, and the top-level
//! classification pipeline.
//!
//! Pipeline, after orienting so `deg A <= deg B`:
//!   1. if `deg A | deg B`, try exact left division (`D = z`);
//!   2. extract the maximal common right factor `W`; the interesting
//!      case has `deg W = gcd` and coprime reduced degrees `d1 < d2`;
//!   3. try the power form with a shared left linear, then the
//!      Chebyshev form, then the power form with independent left
//!      linears (the shared form is tried first so that instances
//!      fitting both the `z^2` and `T_2` shapes get a stable label);
//!   4. fall back to the existence oracle at the minimal witness
//!      degrees `(b/w, a/w)`, which is a complete decision procedure.
//!
//! Every emitted witness is re-verified by exact recomposition before
//! it is returned.

use num_integer::Integer;

use crate::cheb::chebyshev;
use crate::decomp::{left_divide, max_common_right_factor, CommonRightFactorResult};
use crate::linalg::kernel_basis;
use crate::linear::LinearMap;
use crate::poly::Polynomial;
use crate::quadext::{compose_base_over_ext, ExtLinear, ExtPoly, QuadExt};
use crate::scalar::GaussianRational;

/// Degree bookkeeping for a solved or unsolvable instance.
/// `w = gcd(a, b)`, `d1 = a/w`, `d2 = b/w` in the caller's orientation;
/// `swapped` records that the solver internally worked on `(B, A)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Degrees {
    pub a: usize,
    pub b: usize,
    pub w: usize,
    pub d1: usize,
    pub d2: usize,
    pub swapped: bool,
}

/// Parameters of the power normal form: the witness pair is
/// `C = z^c R(z)^m . mu_A^-1`, `D = z^m . mu_B^-1` with
/// `m = min(d1, d2)` and `c + m*deg R = max(d1, d2)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerData {
    pub c: usize,
    pub r: Polynomial,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CaseKind {
    Divides,
    Power(PowerData),
    Chebyshev,
}

/// A verified witness pair together with its classification.
///
/// `mu_a`/`mu_b` are the left linear maps of the recognized normal
/// form when they exist over the base field; a solvable instance can
/// have base-field witnesses whose normal-form maps only live in a
/// quadratic extension, in which case they are omitted.
#[derive(Debug, Clone)]
pub struct Solution {
    pub kind: CaseKind,
    pub c: Polynomial,
    pub d: Polynomial,
    pub w: Polynomial,
    pub degrees: Degrees,
    pub mu_a: Option<LinearMap>,
    pub mu_b: Option<LinearMap>,
}

/// Tagged outcome of `solve`. `NoSolution` is a value, not an error.
#[derive(Debug, Clone)]
pub enum SolveCase {
    Solved(Solution),
    NoSolution(Degrees),
}

impl SolveCase {
    pub fn tag(&self) -> &'static str {
        match self {
            SolveCase::Solved(s) => match s.kind {
                CaseKind::Divides => "Divides",
                CaseKind::Power(_) => "Power",
                CaseKind::Chebyshev => "Chebyshev",
            },
            SolveCase::NoSolution(_) => "NoSolution",
        }
    }

    pub fn degrees(&self) -> &Degrees {
        match self {
            SolveCase::Solved(s) => &s.degrees,
            SolveCase::NoSolution(d) => d,
        }
    }

    pub fn solution(&self) -> Option<&Solution> {
        match self {
            SolveCase::Solved(s) => Some(s),
            SolveCase::NoSolution(_) => None,
        }
    }
}

/// Recognized form `P = mu . z^d . lambda` with `lambda` monic.
#[derive(Debug, Clone)]
pub struct PowerForm {
    pub mu: LinearMap,
    pub degree: usize,
    pub lambda: LinearMap,
}

/// Recognizes `P = mu . z^d . lambda`, which holds exactly when `P'`
/// has a single critical point. The candidate point is read rationally
/// from the top two coefficients of `P'` and verified by expansion.
pub fn recognize_power(p: &Polynomial) -> Option<PowerForm> {
    let d = p.degree().expect("recognizer needs a nonconstant polynomial");
    assert!(d >= 2, "power form needs degree >= 2");
    let dp = p.derivative();
    let top = dp.coeff(d - 1);
    let scale = GaussianRational::from_int((d - 1) as i64);
    let z0 = -&(&dp.coeff(d - 2) / &(&top * &scale));
    let lambda = LinearMap::new(GaussianRational::one(), -&z0);
    let alpha = p.leading().unwrap().clone();
    let beta = p.evaluate(&z0);
    let candidate = &lambda.to_poly().pow(d).scale(&alpha) + &Polynomial::constant(beta.clone());
    if candidate == *p {
        Some(PowerForm {
            mu: LinearMap::new(alpha, beta),
            degree: d,
            lambda,
        })
    } else {
        None
    }
}

/// Recognized form `P = mu . T_n . lambda` with extension-valued maps:
/// the scale of `lambda` has a base-field square but may itself lie in
/// a quadratic extension.
#[derive(Debug, Clone)]
pub struct ChebFormExt {
    pub mu: ExtLinear,
    pub n: usize,
    pub lambda: ExtLinear,
}

/// Solves `p = mu . T_n . lambda` for `mu` with `lambda` given, by
/// matching the leading and constant coefficients and verifying the
/// full expansion in extension arithmetic.
fn fit_chebyshev_mu(p: &Polynomial, n: usize, lambda: &ExtLinear) -> Option<ExtLinear> {
    if p.degree() != Some(n) {
        return None;
    }
    let t = compose_base_over_ext(&chebyshev(n), lambda);
    let sq = &lambda.alpha.surd_square;
    let alpha = QuadExt::from_base(p.leading().unwrap().clone(), sq).mul(&t.leading().inv());
    let beta = QuadExt::from_base(p.coeff(0), sq).sub(&alpha.mul(&t.coeff0()));
    let candidate = t.scale(&alpha).add(&ExtPoly::constant(&beta));
    if candidate == ExtPoly::from_base(p.clone(), sq) {
        Some(ExtLinear::new(alpha, beta))
    } else {
        None
    }
}

/// Recognizes `P = mu . T_n . lambda` over the base field or a
/// quadratic extension of it.
///
/// The shift of `lambda` is forced by killing the `z^(n-1)` term; the
/// squared scale is forced by the ratio of the `z^(n-2)` and `z^n`
/// coefficients against `T_n`. Degree 2 is degenerate (any quadratic
/// fits), so the scale is normalized to 1 there.
pub fn recognize_chebyshev_ext(p: &Polynomial) -> Option<ChebFormExt> {
    let n = p.degree().expect("recognizer needs a nonconstant polynomial");
    assert!(n >= 2, "Chebyshev form needs degree >= 2");
    let n_scalar = GaussianRational::from_int(n as i64);
    let shift = -&(&p.coeff(n - 1) / &(p.leading().unwrap() * &n_scalar));
    let u = if n == 2 {
        QuadExt::from_base(GaussianRational::one(), &GaussianRational::one())
    } else {
        let depressed = p.compose(&LinearMap::shift(shift.clone()).to_poly());
        let q_sub = depressed.coeff(n - 2);
        if q_sub.is_zero() {
            return None;
        }
        let t = chebyshev(n);
        let u_square = &(&t.coeff(n - 2) / t.leading().unwrap()) * &(&depressed.coeff(n) / &q_sub);
        match u_square.sqrt() {
            Some(root) => QuadExt::from_base(root, &u_square),
            None => QuadExt::surd(&u_square),
        }
    };
    // lambda = u * (z - shift)
    let lambda = ExtLinear::new(u.clone(), u.mul(&QuadExt::from_base(-&shift, &u.surd_square)));
    let mu = fit_chebyshev_mu(p, n, &lambda)?;
    Some(ChebFormExt { mu, n, lambda })
}

/// Base-field restriction of `recognize_chebyshev_ext`: succeeds only
/// when both maps reduce to the base field.
pub fn recognize_chebyshev(p: &Polynomial) -> Option<(LinearMap, usize, LinearMap)> {
    let form = recognize_chebyshev_ext(p)?;
    let mu = form.mu.to_base()?;
    let lambda = form.lambda.to_base()?;
    Some((mu, form.n, lambda))
}

/// Decides existence of nonconstant `C` (deg <= nc), `D` (deg <= nd)
/// with `C(A) = D(B)`, by exact linear algebra on the coefficients of
/// `sum c_i A^i - sum d_j B^j = 0`. The returned witness is normalized
/// deterministically: zero constant term on `C` and monic `D`.
pub fn existence_oracle(
    a: &Polynomial,
    b: &Polynomial,
    nc: usize,
    nd: usize,
) -> Option<(Polynomial, Polynomial)> {
    assert!(!a.is_constant() && !b.is_constant(), "oracle needs nonconstant inputs");
    assert!(nc >= 1 && nd >= 1, "oracle needs positive degree bounds");
    let mut a_pows = Vec::with_capacity(nc + 1);
    a_pows.push(Polynomial::one());
    for i in 1..=nc {
        a_pows.push(&a_pows[i - 1] * a);
    }
    let mut b_pows = Vec::with_capacity(nd + 1);
    b_pows.push(Polynomial::one());
    for j in 1..=nd {
        b_pows.push(&b_pows[j - 1] * b);
    }
    let max_deg = a_pows[nc]
        .degree()
        .unwrap()
        .max(b_pows[nd].degree().unwrap());
    let ncols = nc + nd + 2;
    let mut rows = Vec::with_capacity(max_deg + 1);
    for k in 0..=max_deg {
        let mut row = Vec::with_capacity(ncols);
        for p in &a_pows {
            row.push(p.coeff(k));
        }
        for p in &b_pows {
            row.push(-&p.coeff(k));
        }
        rows.push(row);
    }
    let basis = kernel_basis(rows, ncols);
    let vector = basis
        .into_iter()
        .find(|v| v[nc + 2..].iter().any(|x| !x.is_zero()))?;
    let c = Polynomial::from_coeffs(vector[..=nc].to_vec());
    let d = Polynomial::from_coeffs(vector[nc + 1..].to_vec());
    // (C, D) -> (C - t, D - t) and joint rescaling preserve the
    // relation; normalize to C(0) = 0 and monic D.
    let t = Polynomial::constant(c.coeff(0));
    let c = &c - &t;
    let d = &d - &t;
    let lead_inv = d.leading().expect("selected witness is nonconstant").inv();
    let c = c.scale(&lead_inv);
    let d = d.scale(&lead_inv);
    debug_assert_eq!(c.compose(a), d.compose(b));
    Some((c, d))
}

/// Witness data in solver orientation: `c` composes with the
/// smaller-degree input, `d` with the larger.
struct Oriented {
    kind: CaseKind,
    c: Polynomial,
    d: Polynomial,
    w: Polynomial,
    mu_small: Option<LinearMap>,
    mu_large: Option<LinearMap>,
}

/// Splits `s = z^c * R(z^m)` by support analysis: every exponent must
/// be congruent to `c = min support` modulo `m`, with `c` coprime to
/// `m`. Returns `(c, R)` with `R` read off unnormalized.
fn sparse_form(s: &Polynomial, m: usize) -> Option<(usize, Polynomial)> {
    let support = s.support();
    let &c = support.first()?;
    if c == 0 || c.gcd(&m) != 1 {
        return None;
    }
    if support.iter().any(|&e| e % m != c % m) {
        return None;
    }
    let top = s.degree().unwrap();
    let r = Polynomial::from_coeffs(
        (0..=(top - c) / m).map(|k| s.coeff(c + m * k)).collect(),
    );
    Some((c, r))
}

/// Power template attempt with a single shared left linear, exactly as
/// in the normal form: `A~ = sigma . z^d1`, `B~ = sigma . z^c R(z^d1)`.
fn power_branch_strict(
    a: &Polynomial,
    b: &Polynomial,
    crf: &CommonRightFactorResult,
    form: &PowerForm,
    d1: usize,
) -> Option<Oriented> {
    let lambda_inv = form.lambda.invert();
    let bt_prime = crf.b_tilde.compose(&lambda_inv.to_poly());
    let s = form.mu.invert().after(&bt_prime);
    let (c_exp, r) = sparse_form(&s, d1)?;
    let mu_inv_poly = form.mu.invert().to_poly();
    let c_wit = (&Polynomial::monomial(GaussianRational::one(), c_exp) * &r.pow(d1))
        .compose(&mu_inv_poly);
    let d_wit = mu_inv_poly.pow(d1);
    if c_wit.compose(a) != d_wit.compose(b) {
        return None;
    }
    Some(Oriented {
        kind: CaseKind::Power(PowerData { c: c_exp, r }),
        c: c_wit,
        d: d_wit,
        w: form.lambda.after(&crf.w),
        mu_small: Some(form.mu.clone()),
        mu_large: Some(form.mu.clone()),
    })
}

/// Power template attempt with independent left linears: after the
/// inner linear of the recognized power side is divided out, the other
/// side must be an affine image of `z^c R(z^d1)`; the constant shift is
/// forced and the scale comes from the monic normalization of `R`.
fn power_branch_general(
    a: &Polynomial,
    b: &Polynomial,
    crf: &CommonRightFactorResult,
    form: &PowerForm,
    d1: usize,
) -> Option<Oriented> {
    let lambda_inv = form.lambda.invert();
    let bt_prime = crf.b_tilde.compose(&lambda_inv.to_poly());
    let beta = bt_prime.coeff(0);
    let b0 = &bt_prime - &Polynomial::constant(beta.clone());
    let (c_exp, r_raw) = sparse_form(&b0, d1)?;
    let alpha = r_raw.leading().unwrap().clone();
    let r = r_raw.scale(&alpha.inv());
    let mu_b = LinearMap::new(alpha, beta);
    let mu_a_inv_poly = form.mu.invert().to_poly();
    let c_wit = (&Polynomial::monomial(GaussianRational::one(), c_exp) * &r.pow(d1))
        .compose(&mu_a_inv_poly);
    let d_wit = mu_b.invert().to_poly().pow(d1);
    if c_wit.compose(a) != d_wit.compose(b) {
        return None;
    }
    Some(Oriented {
        kind: CaseKind::Power(PowerData { c: c_exp, r }),
        c: c_wit,
        d: d_wit,
        w: form.lambda.after(&crf.w),
        mu_small: Some(form.mu.clone()),
        mu_large: Some(mu_b),
    })
}

/// Chebyshev template attempt: recognize the larger side (degree >= 3,
/// so its form is determined), fit the smaller side against the shared
/// inner map, and build `C = T_d2 . mu_A^-1`, `D = T_d1 . mu_B^-1` in
/// extension arithmetic.
///
/// When the witnesses fail to lie in the base field directly, they are
/// renormalized by the left linear `(z - C(0))/lc(C)`, an invariant of
/// the witness orbit: if any base-field witness pair exists, this
/// canonical pair is base-field.
fn chebyshev_branch(
    a: &Polynomial,
    b: &Polynomial,
    crf: &CommonRightFactorResult,
    d1: usize,
    d2: usize,
) -> Option<Oriented> {
    let fb = recognize_chebyshev_ext(&crf.b_tilde)?;
    debug_assert_eq!(fb.n, d2);
    let mu_a = fit_chebyshev_mu(&crf.a_tilde, d1, &fb.lambda)?;
    let c_ext = compose_base_over_ext(&chebyshev(d2), &mu_a.invert());
    let d_ext = compose_base_over_ext(&chebyshev(d1), &fb.mu.invert());
    let (c_wit, d_wit, normalized) = match (c_ext.to_base(), d_ext.to_base()) {
        (Some(c), Some(d)) => (c, d, false),
        _ => {
            let c0 = c_ext.coeff0();
            let lead_inv = c_ext.leading().inv();
            let shift = ExtPoly::constant(&c0.neg());
            let c_n = c_ext.add(&shift).scale(&lead_inv);
            let d_n = d_ext.add(&shift).scale(&lead_inv);
            (c_n.to_base()?, d_n.to_base()?, true)
        }
    };
    if c_wit.compose(a) != d_wit.compose(b) {
        return None;
    }
    let w = match fb.lambda.to_base() {
        Some(l) => l.after(&crf.w),
        None => crf.w.clone(),
    };
    let (mu_small, mu_large) = if normalized {
        (None, None)
    } else {
        (mu_a.to_base(), fb.mu.to_base())
    };
    Some(Oriented {
        kind: CaseKind::Chebyshev,
        c: c_wit,
        d: d_wit,
        w,
        mu_small,
        mu_large,
    })
}

/// Complete decision fallback at the minimal witness degrees. A
/// witness found here after every structural branch failed can only be
/// the divides shape (the template branches are complete otherwise);
/// anything else would indicate an internal inconsistency.
fn oracle_fallback(a: &Polynomial, b: &Polynomial, d1: usize, d2: usize) -> Option<Oriented> {
    let (c, d) = existence_oracle(a, b, d2, d1)?;
    if d.degree() == Some(1) {
        let lin = LinearMap::new(d.coeff(1), d.coeff(0));
        let quotient = lin.invert().after(&c);
        debug_assert_eq!(quotient.compose(a), *b);
        return Some(Oriented {
            kind: CaseKind::Divides,
            c: quotient,
            d: Polynomial::identity(),
            w: a.canonical_right_form(),
            mu_small: None,
            mu_large: None,
        });
    }
    // Rescue labeling via the normalized witness pair.
    let lin = LinearMap::new(d.leading().unwrap().clone(), d.coeff(0)).invert();
    let c_n = lin.after(&c);
    let d_n = lin.after(&d);
    if recognize_chebyshev_ext(&d_n).is_some() {
        return Some(Oriented {
            kind: CaseKind::Chebyshev,
            c: c_n,
            d: d_n,
            w: Polynomial::identity(),
            mu_small: None,
            mu_large: None,
        });
    }
    if d_n == Polynomial::monomial(GaussianRational::one(), d1) {
        if let Some((c_exp, r_raw)) = sparse_form(&c_n, d1) {
            if let Some(r) = nth_root_monic(&r_raw.scale(&r_raw.leading().unwrap().inv()), d1) {
                return Some(Oriented {
                    kind: CaseKind::Power(PowerData { c: c_exp, r }),
                    c: c_n,
                    d: d_n,
                    w: Polynomial::identity(),
                    mu_small: None,
                    mu_large: None,
                });
            }
        }
    }
    unreachable!("oracle witness escaped classification");
}

/// Monic `m`-th root of a monic polynomial, when it exists exactly.
fn nth_root_monic(p: &Polynomial, m: usize) -> Option<Polynomial> {
    let pd = p.degree()?;
    if pd % m != 0 {
        return None;
    }
    if m == 1 {
        return Some(p.clone());
    }
    let d = pd / m;
    let m_scalar = GaussianRational::from_int(m as i64);
    let mut root = Polynomial::monomial(GaussianRational::one(), d);
    for j in 1..=d {
        let have = root.pow(m).coeff(pd - j);
        let coeff = &(&p.coeff(pd - j) - &have) / &m_scalar;
        if !coeff.is_zero() {
            root = &root + &Polynomial::monomial(coeff, d - j);
        }
    }
    (root.pow(m) == *p).then_some(root)
}

fn solve_core(a: &Polynomial, b: &Polynomial) -> Option<Oriented> {
    let ad = a.degree().unwrap();
    let bd = b.degree().unwrap();
    let w = ad.gcd(&bd);
    let d1 = ad / w;
    let d2 = bd / w;
    if d1 == 1 {
        if let Ok(quotient) = left_divide(b, a) {
            return Some(Oriented {
                kind: CaseKind::Divides,
                c: quotient,
                d: Polynomial::identity(),
                w: a.canonical_right_form(),
                mu_small: None,
                mu_large: None,
            });
        }
        return oracle_fallback(a, b, d1, d2);
    }
    let crf = max_common_right_factor(a, b);
    if crf.w.degree() == Some(w) {
        if let Some(form) = recognize_power(&crf.a_tilde) {
            debug_assert_eq!(form.degree, d1);
            if let Some(o) = power_branch_strict(a, b, &crf, &form, d1) {
                return Some(o);
            }
            if let Some(o) = chebyshev_branch(a, b, &crf, d1, d2) {
                return Some(o);
            }
            if let Some(o) = power_branch_general(a, b, &crf, &form, d1) {
                return Some(o);
            }
        } else if let Some(o) = chebyshev_branch(a, b, &crf, d1, d2) {
            return Some(o);
        }
    }
    oracle_fallback(a, b, d1, d2)
}

/// Solves `C(A) = D(B)` for minimal-degree polynomial witnesses and
/// classifies the instance. Inputs must be nonconstant; orientation is
/// normalized internally and restored on output.
pub fn solve(a: &Polynomial, b: &Polynomial) -> SolveCase {
    let ad = a.degree().filter(|&d| d >= 1).expect("solve needs nonconstant A");
    let bd = b.degree().filter(|&d| d >= 1).expect("solve needs nonconstant B");
    let swapped = ad > bd;
    let w = ad.gcd(&bd);
    let degrees = Degrees {
        a: ad,
        b: bd,
        w,
        d1: ad / w,
        d2: bd / w,
        swapped,
    };
    let oriented = if swapped {
        solve_core(b, a)
    } else {
        solve_core(a, b)
    };
    match oriented {
        Some(o) => {
            let (c, d, mu_a, mu_b) = if swapped {
                (o.d, o.c, o.mu_large, o.mu_small)
            } else {
                (o.c, o.d, o.mu_small, o.mu_large)
            };
            debug_assert_eq!(c.compose(a), d.compose(b));
            SolveCase::Solved(Solution {
                kind: o.kind,
                c,
                d,
                w: o.w,
                degrees,
                mu_a,
                mu_b,
            })
        }
        None => SolveCase::NoSolution(degrees),
    }
}
