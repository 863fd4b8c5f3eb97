//! Weil–Deligne-side Asai cube factors for unramified data: L-factors for
//! all four étale cubic shapes, ε-factors in the conductor-`o_F` situation,
//! γ assembled from the triple, the correction factor comparing the two
//! γ-conventions, transformation laws, and pole-region bounds.
//!
//! Throughout, `q^{-s}` is the variable `T` and `q^{-1/2}` is `u`; an
//! unramified character is known by its value at a uniformizer.

use std::collections::BTreeMap;

use num::BigRational;

use crate::padic::{quad_char_eval, FieldTag, LocalFieldElement, PadicError};
use crate::shapes::{AsaiRepData, CubicShape, UnramChar};
use crate::symbolic::{LaurentRational, Monomial, Var};

/// Errors from factor assembly.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FactorError {
    /// Residue characteristic 2, or 3 in the tame ramified case.
    BadResidueCharacteristic(u64),
    /// A zero basis discriminant or transformation multiplier.
    ZeroArgument,
}

impl std::fmt::Display for FactorError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            FactorError::BadResidueCharacteristic(p) => {
                write!(f, "residue characteristic {} not supported here", p)
            }
            FactorError::ZeroArgument => write!(f, "zero argument"),
        }
    }
}

impl std::error::Error for FactorError {}

impl From<PadicError> for FactorError {
    fn from(e: PadicError) -> Self {
        match e {
            PadicError::EvenResidueCharacteristic => FactorError::BadResidueCharacteristic(2),
            _ => FactorError::ZeroArgument,
        }
    }
}

/// The `(L, ε, γ)` package of one representation, tied together by
/// `γ = ε · L(1-s, dual) / L(s)`.
#[derive(Clone, PartialEq, Debug)]
pub struct LocalFactorTriple {
    pub l_factor: LaurentRational,
    pub eps_factor: LaurentRational,
    pub gamma_factor: LaurentRational,
}

impl LocalFactorTriple {
    /// Assemble γ from `L(s)`, `L(1-s, dual)`, and ε.
    pub fn from_parts(
        l_factor: LaurentRational,
        l_dual_at_one_minus_s: LaurentRational,
        eps_factor: LaurentRational,
    ) -> Self {
        let gamma_factor = eps_factor
            .mul(&l_dual_at_one_minus_s)
            .try_div(&l_factor)
            .expect("L-factor is invertible");
        LocalFactorTriple {
            l_factor,
            eps_factor,
            gamma_factor,
        }
    }
}

/// Substitute `s -> 1-s`, realized on `T = q^{-s}` as `T -> u²/T`.
pub fn reflect_s(f: &LaurentRational) -> LaurentRational {
    let bindings: BTreeMap<Var, LaurentRational> = [(
        Var::T,
        LaurentRational::monomial(Monomial::from_pairs(&[(Var::U, 2), (Var::T, -1)])),
    )]
    .into();
    f.substitute(&bindings).expect("monomial substitution")
}

/// `|x|_F^{c·s + d/2}` as a monomial in `T` and `u`, for a base-field
/// element `x`: with `v = ord_F(x)` this is `T^{cv} u^{dv}`.
fn abs_power(x: &LocalFieldElement, c: i64, d: i64) -> LaurentRational {
    assert_eq!(x.tag, FieldTag::Base);
    let v = x.valuation;
    LaurentRational::monomial(Monomial::from_pairs(&[(Var::T, c * v), (Var::U, d * v)]))
}

/// Tate factors of an unramified character of `F^×` against `ψ^a`, with `ψ`
/// the standard character of conductor `o_F`.
///
/// `L(s, χ) = (1 - v T)^{-1}` with `v = χ(ϖ)`, and
/// `ε(s, χ, ψ^a) = χ(a) |a|^{s - 1/2}`.
pub fn tate_factors(chi: &UnramChar, a: &LocalFieldElement) -> LocalFactorTriple {
    assert_eq!(chi.tag, FieldTag::Base, "Tate factors over the base field");
    assert!(!a.is_zero(), "psi-twist by zero");
    let v = &chi.value;
    let one = LaurentRational::one();
    let l = one
        .try_div(&one.sub(&v.mul(&LaurentRational::var(Var::T))))
        .expect("nonzero");
    let l_dual = reflect_s(
        &one.try_div(&one.sub(&v.inv().expect("nonzero").mul(&LaurentRational::var(Var::T))))
            .expect("nonzero"),
    );
    // ε(s, χ, ψ^a) = χ(a)|a|^{s-1/2} = v^{ord a} T^{ord a} u^{-ord a}
    let eps = v.pow(a.valuation).mul(&abs_power(a, 1, -1));
    LocalFactorTriple::from_parts(l, l_dual, eps)
}

/// The Frobenius data of the Asai cube representation as Euler factors:
/// pairs `(c, k)` with `L(s, As Π) = Π (1 - c T^k)^{-1}`.
pub fn asai_euler_factors(rep: &AsaiRepData) -> Vec<(LaurentRational, u32)> {
    let f = &rep.factors;
    match rep.shape {
        CubicShape::Split => {
            let mut out = Vec::with_capacity(8);
            for g1 in [&f[0].alpha, &f[0].beta] {
                for g2 in [&f[1].alpha, &f[1].beta] {
                    for g3 in [&f[2].alpha, &f[2].beta] {
                        out.push((g1.mul(g2).mul(g3), 1));
                    }
                }
            }
            out
        }
        CubicShape::QuadUnramTimesLine => {
            let (a1, b1) = (&f[0].alpha, &f[0].beta);
            let (a2, b2) = (&f[1].alpha, &f[1].beta);
            let ab1 = a1.mul(b1);
            vec![
                (a1.mul(a2), 1),
                (a1.mul(b2), 1),
                (b1.mul(a2), 1),
                (b1.mul(b2), 1),
                (ab1.mul(&a2.pow(2)), 2),
                (ab1.mul(&b2.pow(2)), 2),
            ]
        }
        CubicShape::CubicUnramField => {
            let (a, b) = (&f[0].alpha, &f[0].beta);
            vec![
                (a.clone(), 1),
                (b.clone(), 1),
                (a.pow(2).mul(b), 3),
                (a.mul(&b.pow(2)), 3),
            ]
        }
        CubicShape::CubicTameRamified => {
            let (a, b) = (&f[0].alpha, &f[0].beta);
            vec![
                (a.pow(3), 1),
                (b.pow(3), 1),
                (a.pow(2).mul(b), 1),
                (a.mul(&b.pow(2)), 1),
            ]
        }
    }
}

/// The local L-factor `L(s, As Π)` for unramified data.
pub fn asai_cube_l(rep: &AsaiRepData) -> LaurentRational {
    let one = LaurentRational::one();
    let t = LaurentRational::var(Var::T);
    let mut den = LaurentRational::one();
    for (c, k) in asai_euler_factors(rep) {
        den = den.mul(&one.sub(&c.mul(&t.pow(k as i64))));
    }
    den.inv().expect("Euler product is nonzero")
}

/// `L(1-s, As Π^∨)`, the dual L-factor at the reflected point.
pub fn asai_cube_l_dual(rep: &AsaiRepData) -> LaurentRational {
    reflect_s(&asai_cube_l(&rep.contragredient()))
}

/// `ω_{K/F}(-1)` for the quadratic discriminant algebra of the shape, as an
/// exact sign computed through the Hilbert symbol.
pub fn omega_k_at_minus_one(shape: CubicShape, p: u64) -> Result<i32, FactorError> {
    check_p(shape, p)?;
    let d = shape.discriminant_class(p);
    Ok(quad_char_eval(&d, &LocalFieldElement::from_int(-1, p))?)
}

fn check_p(shape: CubicShape, p: u64) -> Result<(), FactorError> {
    if p < 3 || !is_prime(p) {
        return Err(FactorError::BadResidueCharacteristic(p));
    }
    if shape == CubicShape::CubicTameRamified && p % 3 == 0 {
        return Err(FactorError::BadResidueCharacteristic(p));
    }
    Ok(())
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// `ε(s, As Π, ψ)` for `ψ` of conductor `o_F` and the reference basis of
/// each shape (an integral basis in the unramified shapes, the monomial
/// basis `{1/3, ϖ_E^{-1}/3, ϖ_E^{-2}/3}`-dual situation in the tame one).
///
/// Unramified shapes give 1. The tame cubic gives
/// `(αβ)^6 T^4 u^{-4} ω_{K/F}(-1)`: each of the two induced characters
/// contributes `χ(3ϖ_E²)|3ϖ_E²|_E^{s-1/2}` and the two Langlands constants
/// square to `ω_{K/F}(-1)`.
pub fn asai_cube_eps(rep: &AsaiRepData, p: u64) -> Result<LaurentRational, FactorError> {
    check_p(rep.shape, p)?;
    match rep.shape {
        CubicShape::Split | CubicShape::QuadUnramTimesLine | CubicShape::CubicUnramField => {
            Ok(LaurentRational::one())
        }
        CubicShape::CubicTameRamified => {
            let sign = omega_k_at_minus_one(rep.shape, p)?;
            let ab = rep.factors[0].central_value();
            let shift = LaurentRational::monomial(Monomial::from_pairs(&[
                (Var::T, 4),
                (Var::U, -4),
            ]));
            Ok(ab.pow(6).mul(&shift).mul(&LaurentRational::int(sign.into())))
        }
    }
}

/// The ψ-twist law for the 8-dimensional ε-factor:
/// `ε(s, As Π, ψ^a) = ω(a)^4 |a|^{8(s-1/2)} ε(s, As Π, ψ)`.
pub fn eps_psi_twist_multiplier(
    omega_value: &LaurentRational,
    a: &LocalFieldElement,
) -> Result<LaurentRational, FactorError> {
    if a.is_zero() {
        return Err(FactorError::ZeroArgument);
    }
    Ok(omega_value.pow(4 * a.valuation).mul(&abs_power(a, 8, -8)))
}

/// The full Weil–Deligne-side triple for unramified data with conductor-`o_F`
/// `ψ`.
pub fn asai_cube_gamma(rep: &AsaiRepData, p: u64) -> Result<LocalFactorTriple, FactorError> {
    let l = asai_cube_l(rep);
    let l_dual = asai_cube_l_dual(rep);
    let eps = asai_cube_eps(rep, p)?;
    Ok(LocalFactorTriple::from_parts(l, l_dual, eps))
}

/// The correction factor of the γ-factor comparison:
/// `ω_Π(Δ) |Δ|_F^{2s-1} ω_{K/F}(-1)` for a basis discriminant `Δ ∈ F^×`.
pub fn correction_factor(
    shape: CubicShape,
    delta: &LocalFieldElement,
    rep: &AsaiRepData,
    p: u64,
) -> Result<LaurentRational, FactorError> {
    if delta.is_zero() {
        return Err(FactorError::ZeroArgument);
    }
    check_p(shape, p)?;
    assert_eq!(delta.tag, FieldTag::Base, "basis discriminant lives in F");
    let omega = rep.central_char_value();
    let omega_at_delta = omega.pow(delta.valuation);
    let abs = abs_power(delta, 2, -2); // |Δ|^{2s-1} = T^{2v} u^{-2v}
    let sign = omega_k_at_minus_one(shape, p)?;
    Ok(omega_at_delta
        .mul(&abs)
        .mul(&LaurentRational::int(sign.into())))
}

/// Reference basis discriminant per shape: a unit for the unramified shapes,
/// `Δ = 3^{-3} ϖ_F^{-2}` for the tame cubic.
pub fn reference_basis_discriminant(shape: CubicShape, p: u64) -> LocalFieldElement {
    match shape {
        CubicShape::CubicTameRamified => LocalFieldElement::with_valuation(
            FieldTag::Base,
            p,
            -2,
            BigRational::new(1.into(), 27.into()),
        ),
        _ => LocalFieldElement::from_int(1, p),
    }
}

/// A change of data under which `γ_PSR` transforms by a monomial multiplier.
#[derive(Clone, Debug)]
pub enum GammaTransform {
    /// Change of symplectic basis with the given transition determinant.
    BasisChange(LocalFieldElement),
    /// Replace `ψ` by `ψ^a`.
    PsiTwist(LocalFieldElement),
}

/// The multiplier picked up by `γ_PSR` under a basis change or ψ-twist:
/// `ω(det A)² |det A|^{4s-2}` and `ω(a)^4 |a|^{8s-4}` respectively.
pub fn gamma_psr_multiplier(
    omega_value: &LaurentRational,
    change: &GammaTransform,
) -> Result<LaurentRational, FactorError> {
    match change {
        GammaTransform::BasisChange(det_a) => {
            if det_a.is_zero() {
                return Err(FactorError::ZeroArgument);
            }
            Ok(omega_value
                .pow(2 * det_a.valuation)
                .mul(&abs_power(det_a, 4, -4)))
        }
        GammaTransform::PsiTwist(a) => {
            if a.is_zero() {
                return Err(FactorError::ZeroArgument);
            }
            Ok(omega_value.pow(4 * a.valuation).mul(&abs_power(a, 8, -8)))
        }
    }
}

/// Apply a transformation law to a `γ_PSR` value.
pub fn transform_gamma_psr(
    gamma_psr: &LaurentRational,
    omega_value: &LaurentRational,
    change: &GammaTransform,
) -> Result<LaurentRational, FactorError> {
    Ok(gamma_psr.mul(&gamma_psr_multiplier(omega_value, change)?))
}

/// Exact-rational weight data for a pole-region check: per factor, the
/// weights of the two inducing characters and an additive real shift.
#[derive(Clone, Debug)]
pub struct WeightData {
    /// `(wt(χ_1) + Re λ_1, wt(χ_2) + Re λ_2)` per factor.
    pub shifted_weights: Vec<(BigRational, BigRational)>,
}

/// Report from [`pole_region_check`].
#[derive(Clone, Debug)]
pub struct PoleRegionReport {
    /// `Re(s)` of each pole of `L(s, As Π_λ)`.
    pub pole_thresholds: Vec<BigRational>,
    /// `-L(Π_λ)`, the claimed pole-free boundary.
    pub bound: BigRational,
    pub ok: bool,
}

/// Check that every pole of `L(s, As Π_λ)` has `Re(s) ≤ -L(Π_λ)`.
///
/// The poles come from the Euler factors `(1 - c T^k)`: with
/// `|α_i| = q^{-f_i w_{i1}}` etc., the factor contributes a pole line at
/// `Re(s) = -(Σ exponents · f_i · w_{ij}) / k`, all exact rationals.
pub fn pole_region_check(shape: CubicShape, weights: &WeightData) -> PoleRegionReport {
    let profile = shape.factor_profile();
    assert_eq!(profile.len(), weights.shifted_weights.len());
    // L(Π_λ) = Σ d_i min(w_{i1}, w_{i2})
    let mut l_pi = BigRational::from_integer(0.into());
    for (tag, (w1, w2)) in profile.iter().zip(&weights.shifted_weights) {
        let d = BigRational::from_integer(((tag.e() * tag.f()) as i64).into());
        l_pi += d * w1.min(w2).clone();
    }
    let bound = -l_pi;

    let var_weight = |v: Var| -> Option<(usize, bool)> {
        match v {
            Var::A1 => Some((0, true)),
            Var::B1 => Some((0, false)),
            Var::A2 => Some((1, true)),
            Var::B2 => Some((1, false)),
            Var::A3 => Some((2, true)),
            Var::B3 => Some((2, false)),
            _ => None,
        }
    };

    let rep = AsaiRepData::symbolic(shape);
    let mut pole_thresholds = Vec::new();
    let mut ok = true;
    for (c, k) in asai_euler_factors(&rep) {
        let (_, m) = c.as_monomial().expect("symbolic eigenvalues are monomials");
        let mut log_q = BigRational::from_integer(0.into());
        for (v, e) in m.exps() {
            let (i, is_alpha) = var_weight(v).expect("Satake variable");
            let f = BigRational::from_integer((profile[i].f() as i64).into());
            let w = if is_alpha {
                weights.shifted_weights[i].0.clone()
            } else {
                weights.shifted_weights[i].1.clone()
            };
            log_q += BigRational::from_integer(e.into()) * f * w;
        }
        let threshold = -log_q / BigRational::from_integer((k as i64).into());
        if threshold > bound {
            ok = false;
        }
        pole_thresholds.push(threshold);
    }
    PoleRegionReport {
        pole_thresholds,
        bound,
        ok,
    }
}
