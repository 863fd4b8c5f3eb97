//! Holomorphic families of Whittaker functions built from the Weil
//! representation, the spherical value formula, and the uniform
//! asymptotic-bound report.
//!
//! The principal-series family is
//! `W(φ,λ)(g) = χ₁(det g)|det g|^{λ₁+1/2} ∫ ω_ψ(g)φ(t, t^{-1}) χ₁χ₂^{-1}(t)|t|^{λ₁-λ₂} d^×t`,
//! evaluated exactly: the support of `t ↦ ω_ψ(g)φ(t, t^{-1})` meets finitely
//! many valuation shells, and each shell is refined into unit cosets fine
//! enough that the box memberships and both character twists are constant.
//! λ-exponents are restricted to half-integers so that every `q^λ`-power is
//! a `u`-monomial and values stay in the exact coefficient ring.

use std::collections::BTreeMap;
use std::fmt;

use num::complex::Complex64;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::cyclotomic::Cyclotomic;
use crate::padic::{psi_eval, rational_valuation};
use crate::schwartz::{CycPoly, Gl2Elem, SchwartzFunction2D};
use crate::shapes::SatakeData;
use crate::symbolic::{LaurentRational, Monomial, RatPoly, Var};

/// An exact half-integer, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct HalfInt {
    twice: i64,
}

impl HalfInt {
    pub fn halves(twice: i64) -> Self {
        HalfInt { twice }
    }

    pub fn int(n: i64) -> Self {
        HalfInt { twice: 2 * n }
    }

    pub fn zero() -> Self {
        HalfInt { twice: 0 }
    }

    pub fn twice(self) -> i64 {
        self.twice
    }

    pub fn as_rational(self) -> BigRational {
        BigRational::new(self.twice.into(), 2.into())
    }
}

/// λ-coordinates for the two family kinds.
#[derive(Clone, Copy, Debug)]
pub enum Lambda {
    /// Principal series: `(λ₁, λ₂)`.
    Ps(HalfInt, HalfInt),
    /// `|det|^λ` twist of a fixed function.
    Ds(HalfInt),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WhittakerError {
    /// λ-kind does not match the family kind.
    KindMismatch,
    /// Character values must be nonzero single terms.
    NonMonomialCharacter,
    /// Shell refinement would exceed the safety cap.
    RefinementTooDeep,
}

impl fmt::Display for WhittakerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WhittakerError::KindMismatch => write!(f, "lambda shape does not match family kind"),
            WhittakerError::NonMonomialCharacter => {
                write!(f, "unramified character values must be single terms")
            }
            WhittakerError::RefinementTooDeep => {
                write!(f, "unit-coset refinement exceeds the safety cap")
            }
        }
    }
}

impl std::error::Error for WhittakerError {}

/// A holomorphic family of Whittaker functions.
#[derive(Clone, Debug)]
pub enum WhittakerFamily {
    /// Built from unramified `χ₁, χ₂` (values at `ϖ` as single terms) and a
    /// Schwartz function on `F²`.
    PrincipalSeries {
        chi1: LaurentRational,
        chi2: LaurentRational,
        phi: SchwartzFunction2D,
    },
    /// An essentially square-integrable member given by a table of values at
    /// `a(ϖ^n)`, twisted by `|det|^λ`.
    TwistedTable { values: BTreeMap<i64, CycPoly>, p: u64 },
}

impl WhittakerFamily {
    pub fn principal_series(
        chi1: LaurentRational,
        chi2: LaurentRational,
        phi: SchwartzFunction2D,
    ) -> Result<Self, WhittakerError> {
        if chi1.as_monomial().is_none() || chi2.as_monomial().is_none() {
            return Err(WhittakerError::NonMonomialCharacter);
        }
        Ok(WhittakerFamily::PrincipalSeries { chi1, chi2, phi })
    }

    /// The spherical family: symbolic Satake characters and `φ = 1_{o×o}`.
    pub fn spherical(p: u64) -> Self {
        WhittakerFamily::PrincipalSeries {
            chi1: LaurentRational::var(Var::A1),
            chi2: LaurentRational::var(Var::B1),
            phi: SchwartzFunction2D::unit_box(p),
        }
    }
}

/// Safety cap on coset refinement depth (`p^k` cosets are enumerated).
const MAX_COSET_DEPTH: i64 = 8;

/// Evaluate the family member `W_λ` at the group word `g = g₁ g₂ ⋯` (each
/// `gᵢ` a generator). The result is exact, a Laurent polynomial in `u` and
/// the Satake symbols with cyclotomic coefficients.
pub fn whittaker_eval(
    family: &WhittakerFamily,
    lambda: &Lambda,
    word: &[Gl2Elem],
) -> Result<CycPoly, WhittakerError> {
    match (family, lambda) {
        (WhittakerFamily::PrincipalSeries { chi1, chi2, phi }, Lambda::Ps(l1, l2)) => {
            let acted = phi.weil_act_word(word);
            let det: BigRational = word.iter().map(|g| g.det()).product();
            assert!(!det.is_zero(), "group word must be invertible");
            let vdet = if det.is_one() {
                0
            } else {
                rational_valuation(&det, phi.p)
            };
            // χ₁(det) |det|^{λ₁ + 1/2}
            let (c1, m1) = chi1.as_monomial().ok_or(WhittakerError::NonMonomialCharacter)?;
            let prefactor = CycPoly::term(
                Cyclotomic::rational(rat_pow(&c1, vdet)),
                m1.pow(vdet).mul(&Monomial::var_pow(Var::U, vdet * (l1.twice() + 1))),
            );
            // χ₁χ₂^{-1}(ϖ) as a single term
            let (c2, m2) = chi2.as_monomial().ok_or(WhittakerError::NonMonomialCharacter)?;
            let ratio_coef = c1 / c2;
            let ratio_mono = m1.mul(&m2.inv());
            let integral = integrate_diagonal(
                &acted,
                &ratio_coef,
                &ratio_mono,
                l1.twice() - l2.twice(),
            )?;
            Ok(prefactor.mul(&integral))
        }
        (WhittakerFamily::TwistedTable { values, p }, Lambda::Ds(l)) => {
            // only torus words are meaningful for a value table
            let mut nu_ord = 0i64;
            for g in word {
                match g {
                    Gl2Elem::A(nu) => nu_ord += rational_valuation(nu, *p),
                    Gl2Elem::M(_) | Gl2Elem::N(_) | Gl2Elem::W => {
                        return Err(WhittakerError::KindMismatch)
                    }
                }
            }
            let base = values.get(&nu_ord).cloned().unwrap_or_else(CycPoly::zero);
            // |det|^λ = u^{2λ · ord(det)}, and ord(det) = nu_ord here
            Ok(base.mul(&CycPoly::monomial(Monomial::var_pow(
                Var::U,
                l.twice() * nu_ord,
            ))))
        }
        _ => Err(WhittakerError::KindMismatch),
    }
}

fn rat_pow(c: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num::pow::pow(c.clone(), e as usize)
    } else {
        num::pow::pow(BigRational::one() / c, (-e) as usize)
    }
}

fn val_opt(x: &BigRational, p: u64) -> Option<i64> {
    if x.is_zero() {
        None
    } else {
        Some(rational_valuation(x, p))
    }
}

/// `∫ φ(t, t^{-1}) χ(t) |t|^{(λ₁-λ₂)} d^×t` with `vol(o^×) = 1`, where `χ`
/// is the unramified character with value `ratio_coef · ratio_mono` at `ϖ`
/// and `lam_diff_twice = 2(λ₁-λ₂)`.
fn integrate_diagonal(
    phi: &SchwartzFunction2D,
    ratio_coef: &BigRational,
    ratio_mono: &Monomial,
    lam_diff_twice: i64,
) -> Result<CycPoly, WhittakerError> {
    let p = phi.p;
    let mut acc = CycPoly::zero();
    for term in &phi.terms {
        let (a1, a2) = (&term.center.0, &term.center.1);
        let (m1, m2) = term.depth;
        // valuation window for ord(t)
        let (mut lo, mut hi) = (i64::MIN, i64::MAX);
        match val_opt(a1, p) {
            Some(v) if v < m1 => {
                lo = lo.max(v);
                hi = hi.min(v);
            }
            _ => lo = lo.max(m1),
        }
        match val_opt(a2, p) {
            Some(v) if v < m2 => {
                lo = lo.max(-v);
                hi = hi.min(-v);
            }
            _ => hi = hi.min(-m2),
        }
        assert!(
            lo != i64::MIN && hi != i64::MAX,
            "diagonal support must be bounded for box indicators"
        );
        if lo > hi {
            continue;
        }
        let vg1 = val_opt(&term.twist.0, p);
        let vg2 = val_opt(&term.twist.1, p);
        for j in lo..=hi {
            // refine units mod ϖ^k so memberships and twists are constant
            let mut k = 1i64;
            k = k.max(m1 - j).max(j + m2);
            if let Some(v1) = vg1 {
                k = k.max(-v1 - j);
            }
            if let Some(v2) = vg2 {
                k = k.max(j - v2);
            }
            if k > MAX_COSET_DEPTH {
                return Err(WhittakerError::RefinementTooDeep);
            }
            let pk = p.pow(k as u32);
            let coset_measure = BigRational::new(
                BigInt::one(),
                BigInt::from(p - 1) * BigInt::from(p).pow((k - 1) as u32),
            );
            // character value on the shell: (coef·mono)^j · u^{j·2(λ₁-λ₂)}
            let shell_char = CycPoly::term(
                Cyclotomic::rational(rat_pow(ratio_coef, j)),
                ratio_mono
                    .pow(j)
                    .mul(&Monomial::var_pow(Var::U, j * lam_diff_twice)),
            );
            let mut shell_sum = Cyclotomic::zero();
            for c in 1..pk {
                if c % p == 0 {
                    continue;
                }
                let t = BigRational::from_integer(c.into()) * pow_p(p, j);
                let t_inv = BigRational::one() / &t;
                if in_box(&t, a1, m1, p) && in_box(&t_inv, a2, m2, p) {
                    let tw = &psi_eval(&(&term.twist.0 * &t), p)
                        * &psi_eval(&(&term.twist.1 * &t_inv), p);
                    shell_sum = &shell_sum + &tw;
                }
            }
            if shell_sum.is_zero() {
                continue;
            }
            let weight = &Cyclotomic::rational(coset_measure) * &shell_sum;
            acc = acc.add(&term.coef.mul(&shell_char).scale(&weight));
        }
    }
    Ok(acc)
}

fn in_box(x: &BigRational, center: &BigRational, depth: i64, p: u64) -> bool {
    let d = x - center;
    if d.is_zero() {
        return true;
    }
    rational_valuation(&d, p) >= depth
}

fn pow_p(p: u64, e: i64) -> BigRational {
    let base = BigRational::from_integer(BigInt::from(p));
    if e >= 0 {
        num::pow::pow(base, e as usize)
    } else {
        num::pow::pow(BigRational::one() / base, (-e) as usize)
    }
}

/// The spherical Whittaker value: `u^n (α^{n+1} - β^{n+1})/(α - β)` for
/// `n ≥ 0` (the division is exact) and `0` for `n < 0`.
pub fn shintani(n: i64, sp: &SatakeData) -> LaurentRational {
    if n < 0 {
        return LaurentRational::zero();
    }
    let mut sum = LaurentRational::zero();
    for k in 0..=n {
        sum = sum.add(&sp.alpha.pow(k).mul(&sp.beta.pow(n - k)));
    }
    sum.mul(&LaurentRational::var_pow(Var::U, n))
}

/// Convert an exact-rational Laurent polynomial into the cyclotomic ring.
pub fn rat_poly_to_cyc(p: &RatPoly) -> CycPoly {
    p.map_coeffs(|c| Cyclotomic::rational(c.clone()))
}

/// Numeric embedding of a cyclotomic-coefficient value: `u`, `a1`, `b1` are
/// sent to the given reals and roots of unity to the unit circle.
pub fn embed_cyc_poly(p: &CycPoly, u: f64, a1: f64, b1: f64) -> Complex64 {
    let mut acc = Complex64::new(0.0, 0.0);
    for (m, c) in p.terms() {
        let mut t = c.embed();
        for (v, e) in m.exps() {
            let base = match v {
                Var::U => u,
                Var::A1 => a1,
                Var::B1 => b1,
                _ => panic!("unexpected variable {} in Whittaker value", v),
            };
            t *= Complex64::new(base, 0.0).powi(e as i32);
        }
        acc += t;
    }
    acc
}

/// One sample point for the asymptotic bound: the torus valuation and a
/// word in `GL_2(o)` generators.
#[derive(Clone, Debug)]
pub struct BoundSample {
    pub nu_ord: i64,
    pub k_word: Vec<Gl2Elem>,
}

/// A sample on which the claimed bound failed.
#[derive(Clone, Debug)]
pub struct BoundViolation {
    pub nu_ord: i64,
    pub lambda: (i64, i64),
    pub epsilon: BigRational,
    pub lhs: f64,
    pub rhs: f64,
}

/// Report of [`asymptotic_bound_check`].
#[derive(Clone, Debug)]
pub struct BoundReport {
    /// Support radius: values vanish for `ord(ν) < -n`.
    pub n: i64,
    /// The constant, constructed a priori from the support data and the
    /// shell-count estimate, then verified on every sample.
    pub c: BigRational,
    pub violations: Vec<BoundViolation>,
    pub samples_checked: usize,
}

/// Verify `|W_λ(a(ν)k)| ≤ C · 1_{ϖ^{-n}o}(ν) · |ν|^{l(π_λ)+1/2-ε}` on a
/// sample grid.
///
/// `(n, C)` are built from the function data alone: `n` from the support
/// extents of `ω_ψ(k)φ`, and `C` from the sup-norm of the coefficients
/// together with the shell count played against the `ε`-slack, following
/// the usual estimate
/// `|W| ≤ C_φ Σ_{m} q^{-mδ} |ν|^{w₁+1/2}` with `δ = w₁ - w₂`.
pub fn asymptotic_bound_check(
    phi: &SchwartzFunction2D,
    wt1: &BigRational,
    wt2: &BigRational,
    lambda_grid: &[(HalfInt, HalfInt)],
    epsilons: &[BigRational],
    samples: &[BoundSample],
) -> Result<BoundReport, WhittakerError> {
    let p = phi.p;
    let q = p as f64;
    // support extents over the sampled k-words
    let mut e1 = i64::MAX;
    let mut e2 = i64::MAX;
    let mut c_phi = 0.0f64;
    let mut acted_cache: Vec<SchwartzFunction2D> = Vec::with_capacity(samples.len());
    for s in samples {
        let acted = phi.weil_act_word(&s.k_word);
        if let Some((a, b)) = acted.support_extents() {
            e1 = e1.min(a);
            e2 = e2.min(b);
        }
        let norm: f64 = acted
            .terms
            .iter()
            .map(|t| embed_cyc_poly(&t.coef, q.powf(-0.5), 1.0, 1.0).norm())
            .sum();
        c_phi = c_phi.max(norm);
        acted_cache.push(acted);
    }
    if e1 == i64::MAX {
        // empty function: everything vanishes
        return Ok(BoundReport {
            n: 0,
            c: BigRational::one(),
            violations: Vec::new(),
            samples_checked: samples.len(),
        });
    }
    let n = -(e1 + e2);

    // C from the proof construction, maximized over the λ-grid and ε-set
    let mut c_bound = 0.0f64;
    for (l1, l2) in lambda_grid {
        let w1 = wt1 + l1.as_rational();
        let w2 = wt2 + l2.as_rational();
        let delta = (&w1 - &w2).to_f64().unwrap();
        let head = q.powf((-(e1 as f64) * delta).max((e2 as f64) * delta));
        for eps in epsilons {
            let epsf = eps.to_f64().unwrap();
            assert!(epsf > 0.0, "epsilon must be positive");
            // max over x >= -n of (x + 1 + n) q^{-x eps}; the continuous
            // maximum sits at x* = 1/(ε ln q) - (1 + n)
            let x_star = (1.0 / (epsf * q.ln()) - 1.0 - n as f64).ceil() as i64;
            let mut best: f64 = 0.0;
            for x in -n..=x_star.max(-n) + 2 {
                let val = ((x + 1 + n) as f64) * q.powf(-(x as f64) * epsf);
                best = best.max(val);
            }
            c_bound = c_bound.max(c_phi * head * best);
        }
    }
    let c_rat = BigRational::from_float(c_bound * (1.0 + 1e-9)).unwrap_or_else(BigRational::one);

    // verify on every sample
    let u = q.powf(-0.5);
    let a1_val = q.powf(-wt1.to_f64().unwrap());
    let b1_val = q.powf(-wt2.to_f64().unwrap());
    let mut violations = Vec::new();
    let mut checked = 0usize;
    for (s, acted) in samples.iter().zip(&acted_cache) {
        let nu = pow_p(p, s.nu_ord);
        for (l1, l2) in lambda_grid {
            // W_λ(a(ν)k) with the k-action precomputed
            let fam = WhittakerFamily::PrincipalSeries {
                chi1: LaurentRational::var(Var::A1),
                chi2: LaurentRational::var(Var::B1),
                phi: acted.clone(),
            };
            // the λ-shift is carried by the u-powers of the exact value, so
            // the character symbols embed at their fixed weights
            let w = whittaker_eval(&fam, &Lambda::Ps(*l1, *l2), &[Gl2Elem::A(nu.clone())])?;
            let lhs = embed_cyc_poly(&w, u, a1_val, b1_val).norm();
            let w1 = wt1 + l1.as_rational();
            let w2 = wt2 + l2.as_rational();
            let l_shifted = w1.min(w2).to_f64().unwrap();
            for eps in epsilons {
                checked += 1;
                let rhs = if s.nu_ord < -n {
                    0.0
                } else {
                    let expo = l_shifted + 0.5 - eps.to_f64().unwrap();
                    c_bound * (1.0 + 1e-9) * q.powf(-(s.nu_ord as f64) * expo)
                };
                if lhs > rhs + 1e-12 {
                    violations.push(BoundViolation {
                        nu_ord: s.nu_ord,
                        lambda: (l1.twice(), l2.twice()),
                        epsilon: eps.clone(),
                        lhs,
                        rhs,
                    });
                }
            }
        }
    }
    Ok(BoundReport {
        n,
        c: c_rat,
        violations,
        samples_checked: checked,
    })
}

/// Per-factor parameters of `Π = π_1 × ⋯ × π_r`.
#[derive(Clone, Debug)]
pub enum LocalFactorParams {
    PrincipalSeries { wt1: BigRational, wt2: BigRational },
    SquareIntegrable { omega_wt: BigRational },
}

#[derive(Clone, Debug)]
pub struct RepFactor {
    /// `d_i = [F_i : F]`.
    pub degree: u32,
    pub params: LocalFactorParams,
}

/// λ-shift per factor.
#[derive(Clone, Debug)]
pub enum LambdaShift {
    Ps(BigRational, BigRational),
    Ds(BigRational),
}

#[derive(Clone, Debug, PartialEq)]
pub struct ParamsReport {
    /// `l((π_i)_{λ_i})` per factor.
    pub l_per_factor: Vec<BigRational>,
    /// `L(Π_λ) = Σ d_i l((π_i)_{λ_i})`.
    pub big_l: BigRational,
    /// `|λ|_Π = Σ d_i |λ_i|_{π_i}`.
    pub lambda_norm: BigRational,
    /// `|λ|_Π = 0`.
    pub tempered: bool,
}

/// Compute `l(π_i)`, `L(Π_λ)`, and `|λ|_Π` from exact weight data.
pub fn l_and_lambda_params(factors: &[RepFactor], lambda: &[LambdaShift]) -> ParamsReport {
    assert_eq!(factors.len(), lambda.len());
    let mut l_per_factor = Vec::new();
    let mut big_l = BigRational::zero();
    let mut lambda_norm = BigRational::zero();
    for (f, l) in factors.iter().zip(lambda) {
        let d = BigRational::from_integer((f.degree as i64).into());
        let (l_i, norm_i) = match (&f.params, l) {
            (LocalFactorParams::PrincipalSeries { wt1, wt2 }, LambdaShift::Ps(l1, l2)) => {
                let w1 = wt1 + l1;
                let w2 = wt2 + l2;
                (w1.clone().min(w2.clone()), w1.abs().max(w2.abs()))
            }
            (LocalFactorParams::SquareIntegrable { omega_wt }, LambdaShift::Ds(l)) => {
                let half_wt = omega_wt / BigRational::from_integer(2.into());
                let shifted = &half_wt + l;
                (shifted.clone(), shifted.abs())
            }
            _ => panic!("lambda shape does not match factor kind"),
        };
        big_l += &d * &l_i;
        lambda_norm += &d * &norm_i;
        l_per_factor.push(l_i);
    }
    let tempered = lambda_norm.is_zero();
    ParamsReport {
        l_per_factor,
        big_l,
        lambda_norm,
        tempered,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    fn spherical_value(p: u64, n: i64) -> CycPoly {
        let fam = WhittakerFamily::spherical(p);
        whittaker_eval(
            &fam,
            &Lambda::Ps(HalfInt::zero(), HalfInt::zero()),
            &[Gl2Elem::A(pow_p(p, n))],
        )
        .unwrap()
    }

    #[test]
    fn spherical_at_identity_is_one() {
        assert_eq!(spherical_value(5, 0), CycPoly::one());
    }

    #[test]
    fn spherical_vanishes_below_support() {
        assert!(spherical_value(5, -1).is_zero());
        assert!(spherical_value(5, -3).is_zero());
    }

    #[test]
    fn spherical_matches_shintani_formula() {
        let sp = SatakeData::symbolic(0);
        for n in 0..=10 {
            let w = spherical_value(5, n);
            let expected = rat_poly_to_cyc(shintani(n, &sp).numerator());
            assert_eq!(w, expected, "n = {}", n);
        }
    }

    #[test]
    fn shintani_small_values() {
        let sp = SatakeData::symbolic(0);
        assert!(shintani(-1, &sp).is_zero());
        assert!(shintani(0, &sp).is_one());
        // n = 1: u(α + β)
        let expected = LaurentRational::var(Var::A1)
            .add(&LaurentRational::var(Var::B1))
            .mul(&LaurentRational::var(Var::U));
        assert_eq!(shintani(1, &sp), expected);
        // the divided difference is exact: (α-β)·shintani(n) = u^n(α^{n+1}-β^{n+1})
        for n in 0..6 {
            let lhs = LaurentRational::var(Var::A1)
                .sub(&LaurentRational::var(Var::B1))
                .mul(&shintani(n, &sp));
            let rhs = LaurentRational::var(Var::A1)
                .pow(n + 1)
                .sub(&LaurentRational::var(Var::B1).pow(n + 1))
                .mul(&LaurentRational::var_pow(Var::U, n));
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn transformation_under_unipotent() {
        // W(n(x) g) = ψ(x) W(g): check at sampled points with exact values
        let p = 5u64;
        let fam = WhittakerFamily::spherical(p);
        let lam = Lambda::Ps(HalfInt::zero(), HalfInt::zero());
        for n in 0..3i64 {
            for x_num in [1i64, 2, 3] {
                let x = BigRational::new(x_num.into(), (p as i64).into());
                let with_n = whittaker_eval(
                    &fam,
                    &lam,
                    &[Gl2Elem::N(x.clone()), Gl2Elem::A(pow_p(p, n))],
                )
                .unwrap();
                let plain = whittaker_eval(&fam, &lam, &[Gl2Elem::A(pow_p(p, n))]).unwrap();
                let psi_x = psi_eval(&x, p);
                assert_eq!(with_n, plain.scale(&psi_x), "n={} x={}", n, x);
            }
        }
    }

    #[test]
    fn table_family_twists_by_det_power() {
        let mut values = BTreeMap::new();
        values.insert(0i64, CycPoly::one());
        values.insert(1i64, CycPoly::monomial(Monomial::var_pow(Var::U, 1)));
        let fam = WhittakerFamily::TwistedTable { values, p: 5 };
        // λ = 1: value at a(ϖ) is u · u^{2·1·1}
        let w = whittaker_eval(&fam, &Lambda::Ds(HalfInt::int(1)), &[Gl2Elem::A(rat(5, 1))])
            .unwrap();
        assert_eq!(w, CycPoly::monomial(Monomial::var_pow(Var::U, 3)));
    }

    #[test]
    fn params_for_tame_cubic_example() {
        let factors = [RepFactor {
            degree: 3,
            params: LocalFactorParams::PrincipalSeries {
                wt1: rat(1, 4),
                wt2: rat(-1, 4),
            },
        }];
        let lambda = [LambdaShift::Ps(rat(0, 1), rat(0, 1))];
        let report = l_and_lambda_params(&factors, &lambda);
        assert_eq!(report.l_per_factor, vec![rat(-1, 4)]);
        assert_eq!(report.big_l, rat(-3, 4));
        assert_eq!(report.lambda_norm, rat(3, 4));
        assert!(!report.tempered);
    }

    #[test]
    fn params_for_split_sum() {
        let factors: Vec<RepFactor> = [(0, 1), (1, 2), (-1, 2)]
            .iter()
            .map(|&(n, d)| RepFactor {
                degree: 1,
                params: LocalFactorParams::PrincipalSeries {
                    wt1: rat(n, d),
                    wt2: rat(n, d),
                },
            })
            .collect();
        let lambda = vec![
            LambdaShift::Ps(rat(0, 1), rat(0, 1)),
            LambdaShift::Ps(rat(0, 1), rat(0, 1)),
            LambdaShift::Ps(rat(0, 1), rat(0, 1)),
        ];
        let report = l_and_lambda_params(&factors, &lambda);
        assert_eq!(report.big_l, rat(0, 1));
    }

    #[test]
    fn params_unitary_tempered() {
        let factors = [RepFactor {
            degree: 3,
            params: LocalFactorParams::PrincipalSeries {
                wt1: rat(0, 1),
                wt2: rat(0, 1),
            },
        }];
        let lambda = [LambdaShift::Ps(rat(0, 1), rat(0, 1))];
        let report = l_and_lambda_params(&factors, &lambda);
        assert!(report.tempered);
        assert_eq!(report.big_l, rat(0, 1));
    }
}
