//! The four étale cubic shapes of `E/F` and unramified representation data.
//!
//! An unramified principal series of `GL_2(F_i)` is recorded by its Satake
//! parameters: the values of the two inducing characters at a uniformizer of
//! `F_i`. Symbolic data uses the fixed Satake variables; numeric data uses
//! exact rationals.

use num::BigRational;

use crate::padic::{DiscriminantClass, FieldTag};
use crate::symbolic::{LaurentRational, Var};

/// An unramified character of `F_i^×`, determined by its value at a
/// uniformizer.
#[derive(Clone, PartialEq, Debug)]
pub struct UnramChar {
    pub tag: FieldTag,
    pub value: LaurentRational,
}

impl UnramChar {
    pub fn new(tag: FieldTag, value: LaurentRational) -> Self {
        assert!(!value.is_zero(), "character value at uniformizer must be nonzero");
        UnramChar { tag, value }
    }
}

/// Satake parameters of one unramified `GL_2` factor: the values
/// `(χ_1(ϖ), χ_2(ϖ))`.
#[derive(Clone, PartialEq, Debug)]
pub struct SatakeData {
    pub alpha: LaurentRational,
    pub beta: LaurentRational,
}

impl SatakeData {
    pub fn new(alpha: LaurentRational, beta: LaurentRational) -> Self {
        assert!(!alpha.is_zero() && !beta.is_zero(), "Satake parameters must be nonzero");
        SatakeData { alpha, beta }
    }

    /// The symbolic parameters `(a_{i+1}, b_{i+1})` of the i-th factor.
    pub fn symbolic(i: usize) -> Self {
        let (a, b) = Var::satake_pair(i);
        SatakeData::new(LaurentRational::var(a), LaurentRational::var(b))
    }

    pub fn from_rationals(alpha: BigRational, beta: BigRational) -> Self {
        SatakeData::new(
            LaurentRational::constant(alpha),
            LaurentRational::constant(beta),
        )
    }

    /// Central character value `χ_1 χ_2 (ϖ) = αβ`.
    pub fn central_value(&self) -> LaurentRational {
        self.alpha.mul(&self.beta)
    }

    pub fn contragredient(&self) -> Self {
        SatakeData::new(
            self.alpha.inv().expect("nonzero"),
            self.beta.inv().expect("nonzero"),
        )
    }
}

/// The shape of the étale cubic algebra `E` over `F`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CubicShape {
    /// `E = F × F × F`.
    Split,
    /// `E = F' × F` with `F'/F` unramified quadratic.
    QuadUnramTimesLine,
    /// `E/F` the unramified cubic field extension.
    CubicUnramField,
    /// `E = F(ϖ_E)` with `ϖ_E³ = ϖ_F`, residue characteristic prime to 3.
    CubicTameRamified,
}

impl CubicShape {
    pub const ALL: [CubicShape; 4] = [
        CubicShape::Split,
        CubicShape::QuadUnramTimesLine,
        CubicShape::CubicUnramField,
        CubicShape::CubicTameRamified,
    ];

    /// Per-factor `(e_i, f_i)`; the degrees satisfy `Σ e_i f_i = 3`.
    pub fn factor_profile(self) -> Vec<FieldTag> {
        match self {
            CubicShape::Split => vec![FieldTag::Base, FieldTag::Base, FieldTag::Base],
            CubicShape::QuadUnramTimesLine => vec![FieldTag::Ext { e: 1, f: 2 }, FieldTag::Base],
            CubicShape::CubicUnramField => vec![FieldTag::Ext { e: 1, f: 3 }],
            CubicShape::CubicTameRamified => vec![FieldTag::Ext { e: 3, f: 1 }],
        }
    }

    pub fn num_factors(self) -> usize {
        self.factor_profile().len()
    }

    /// The discriminant class of `E`, determining the quadratic algebra `K`.
    ///
    /// Split and the cyclic unramified cubic have square discriminant; the
    /// unramified quadratic factor contributes a nonsquare unit; the tame
    /// cubic `x³ - ϖ` has discriminant `-27ϖ²`, the class of `-3`.
    pub fn discriminant_class(self, p: u64) -> DiscriminantClass {
        match self {
            CubicShape::Split | CubicShape::CubicUnramField => DiscriminantClass::trivial(),
            CubicShape::QuadUnramTimesLine => DiscriminantClass::nonsquare_unit(p),
            CubicShape::CubicTameRamified => DiscriminantClass::of_rational(
                &BigRational::from_integer((-3).into()),
                p,
            ),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            CubicShape::Split => "split",
            CubicShape::QuadUnramTimesLine => "quad_unram",
            CubicShape::CubicUnramField => "cubic_unram",
            CubicShape::CubicTameRamified => "cubic_tame",
        }
    }

    pub fn parse(s: &str) -> Option<CubicShape> {
        CubicShape::ALL.iter().copied().find(|sh| sh.name() == s)
    }
}

/// Unramified data for `Π = π_1 × ... × π_r` on `GL_2(E)`: the shape of `E`
/// and per-factor Satake parameters.
#[derive(Clone, PartialEq, Debug)]
pub struct AsaiRepData {
    pub shape: CubicShape,
    pub factors: Vec<SatakeData>,
}

impl AsaiRepData {
    pub fn new(shape: CubicShape, factors: Vec<SatakeData>) -> Self {
        assert_eq!(
            factors.len(),
            shape.num_factors(),
            "factor count must match the shape"
        );
        AsaiRepData { shape, factors }
    }

    /// Fully symbolic data for the shape.
    pub fn symbolic(shape: CubicShape) -> Self {
        let factors = (0..shape.num_factors()).map(SatakeData::symbolic).collect();
        AsaiRepData::new(shape, factors)
    }

    /// Inverts every Satake parameter; an involution.
    pub fn contragredient(&self) -> Self {
        AsaiRepData {
            shape: self.shape,
            factors: self.factors.iter().map(SatakeData::contragredient).collect(),
        }
    }

    /// The restriction to `F^×` of the central character, evaluated at
    /// `ϖ_F`: the product over factors of `(α_i β_i)^{e_i}`.
    pub fn central_char_value(&self) -> LaurentRational {
        let mut out = LaurentRational::one();
        for (tag, sd) in self.shape.factor_profile().iter().zip(&self.factors) {
            out = out.mul(&sd.central_value().pow(tag.e() as i64));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn profiles_have_total_degree_three() {
        for shape in CubicShape::ALL {
            let total: u32 = shape
                .factor_profile()
                .iter()
                .map(|t| t.e() * t.f())
                .sum();
            assert_eq!(total, 3);
        }
    }

    #[test]
    fn contragredient_is_an_involution() {
        for shape in CubicShape::ALL {
            let rep = AsaiRepData::symbolic(shape);
            assert_eq!(rep.contragredient().contragredient(), rep);
        }
    }

    #[test]
    fn tame_central_character_uses_ramification_index() {
        // ω(ϖ_F) = (αβ)^3 for the tame cubic
        let rep = AsaiRepData::symbolic(CubicShape::CubicTameRamified);
        let expected = rep.factors[0].central_value().pow(3);
        assert_eq!(rep.central_char_value(), expected);
    }

    #[test]
    fn shape_discriminants() {
        assert!(CubicShape::Split.discriminant_class(5).is_split(5));
        assert!(CubicShape::CubicUnramField.discriminant_class(7).is_split(7));
        assert!(!CubicShape::QuadUnramTimesLine.discriminant_class(7).is_split(7));
        // -3 is a square mod p exactly when p ≡ 1 mod 3
        assert!(CubicShape::CubicTameRamified.discriminant_class(7).is_split(7));
        assert!(!CubicShape::CubicTameRamified.discriminant_class(5).is_split(5));
    }
}
