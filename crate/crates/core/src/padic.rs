//! Exact p-adic character values: the standard additive character of
//! conductor `o_F`, unramified multiplicative characters, quadratic Hilbert
//! symbols, and discriminant square classes.
//!
//! The base field is modelled with uniformizer `p` and rational unit parts;
//! elements of the tame cubic extension carry their valuation in `ord_E`
//! units together with a rational unit representative. Residue
//! characteristic 2 is rejected throughout.

use std::fmt;

use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

use crate::cyclotomic::Cyclotomic;
use crate::symbolic::{LaurentRational, Monomial};

/// Which field an element lives in: the base `F`, or an extension with
/// ramification index `e` and residue degree `f`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum FieldTag {
    Base,
    Ext { e: u32, f: u32 },
}

impl FieldTag {
    pub fn e(self) -> u32 {
        match self {
            FieldTag::Base => 1,
            FieldTag::Ext { e, .. } => e,
        }
    }

    pub fn f(self) -> u32 {
        match self {
            FieldTag::Base => 1,
            FieldTag::Ext { f, .. } => f,
        }
    }
}

/// A nonzero local field element `unit * ϖ^valuation` with a rational unit
/// representative, or zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LocalFieldElement {
    pub tag: FieldTag,
    pub p: u64,
    pub valuation: i64,
    pub unit: BigRational,
}

/// Errors from p-adic evaluations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PadicError {
    EvenResidueCharacteristic,
    ZeroArgument,
    NotAUnit,
}

impl fmt::Display for PadicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PadicError::EvenResidueCharacteristic => {
                write!(f, "residue characteristic 2 is not supported")
            }
            PadicError::ZeroArgument => write!(f, "zero argument"),
            PadicError::NotAUnit => write!(f, "unit part has nonzero valuation"),
        }
    }
}

impl std::error::Error for PadicError {}

/// p-adic valuation of a nonzero rational.
pub fn rational_valuation(x: &BigRational, p: u64) -> i64 {
    assert!(!x.is_zero(), "valuation of zero");
    let p = BigInt::from(p);
    let mut v = 0i64;
    let mut n = x.numer().abs();
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    let mut d = x.denom().abs();
    while (&d % &p).is_zero() {
        d /= &p;
        v -= 1;
    }
    v
}

impl LocalFieldElement {
    /// An element of `F` given by an exact rational value.
    pub fn from_rational(x: BigRational, p: u64) -> Self {
        if x.is_zero() {
            return LocalFieldElement {
                tag: FieldTag::Base,
                p,
                valuation: 0,
                unit: BigRational::zero(),
            };
        }
        let v = rational_valuation(&x, p);
        let unit = x * power(p, -v);
        LocalFieldElement {
            tag: FieldTag::Base,
            p,
            valuation: v,
            unit,
        }
    }

    pub fn from_int(n: i64, p: u64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()), p)
    }

    /// `unit * ϖ^valuation` in the field with the given tag. The unit part
    /// must be a p-adic unit.
    pub fn with_valuation(tag: FieldTag, p: u64, valuation: i64, unit: BigRational) -> Self {
        assert!(!unit.is_zero() && rational_valuation(&unit, p) == 0, "unit part must be a unit");
        LocalFieldElement {
            tag,
            p,
            valuation,
            unit,
        }
    }

    /// The uniformizer of the field with the given tag.
    pub fn uniformizer(tag: FieldTag, p: u64) -> Self {
        Self::with_valuation(tag, p, 1, BigRational::one())
    }

    pub fn is_zero(&self) -> bool {
        self.unit.is_zero()
    }

    /// The rational value, defined for base-field elements.
    pub fn as_rational(&self) -> BigRational {
        assert_eq!(self.tag, FieldTag::Base, "only base-field elements have rational values");
        &self.unit * power(self.p, self.valuation)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.tag, other.tag);
        assert_eq!(self.p, other.p);
        if self.is_zero() || other.is_zero() {
            return LocalFieldElement {
                tag: self.tag,
                p: self.p,
                valuation: 0,
                unit: BigRational::zero(),
            };
        }
        // rational unit products can pick up p-powers; renormalize
        let unit = &self.unit * &other.unit;
        let extra = rational_valuation(&unit, self.p);
        LocalFieldElement {
            tag: self.tag,
            p: self.p,
            valuation: self.valuation + other.valuation + extra * self.tag.e() as i64,
            unit: unit * power(self.p, -extra),
        }
    }

    /// `|x|_F = q_F^{-ord}` expressed as a power of `u = q^{-1/2}`, for
    /// base-field elements.
    pub fn abs_as_u_power(&self) -> Monomial {
        assert_eq!(self.tag, FieldTag::Base);
        assert!(!self.is_zero());
        Monomial::var_pow(crate::symbolic::Var::U, 2 * self.valuation)
    }
}

fn power(p: u64, e: i64) -> BigRational {
    let base = BigRational::from_integer(BigInt::from(p));
    if e >= 0 {
        num::pow::pow(base, e as usize)
    } else {
        num::pow::pow(BigRational::one() / base, (-e) as usize)
    }
}

/// The standard additive character of `F` of conductor `o_F`, evaluated on
/// an exact rational argument: `ψ(x) = ζ_{p^k}^{a}` where `x ≡ a/p^k` modulo
/// `Z_p`. Integral arguments map to 1.
pub fn psi_eval(x: &BigRational, p: u64) -> Cyclotomic {
    if x.is_zero() {
        return Cyclotomic::one();
    }
    let v = rational_valuation(x, p);
    if v >= 0 {
        return Cyclotomic::one();
    }
    let k = (-v) as u32;
    let pk = BigInt::from(p).pow(k);
    // x = m/(n p^k) with p ∤ n m; the principal part is (m n^{-1} mod p^k)/p^k
    let scaled = x * BigRational::from_integer(pk.clone());
    debug_assert_eq!(rational_valuation(&scaled, p), 0);
    let a = mod_inverse_mul(scaled.numer(), scaled.denom(), &pk);
    Cyclotomic::root_of_unity(p, k, a.to_i64().expect("exponent fits i64"))
}

/// `ψ(x)` for a base-field [`LocalFieldElement`].
pub fn psi_eval_elem(x: &LocalFieldElement) -> Cyclotomic {
    if x.is_zero() {
        return Cyclotomic::one();
    }
    psi_eval(&x.as_rational(), x.p)
}

/// `num * den^{-1} mod m`, for `den` invertible mod `m`.
fn mod_inverse_mul(num: &BigInt, den: &BigInt, m: &BigInt) -> BigInt {
    let inv = mod_inverse(&den.mod_floor(m), m).expect("denominator invertible");
    (num * inv).mod_floor(m)
}

trait ModFloor {
    fn mod_floor(&self, m: &BigInt) -> BigInt;
}

impl ModFloor for BigInt {
    fn mod_floor(&self, m: &BigInt) -> BigInt {
        let r = self % m;
        if r.is_negative() {
            r + m
        } else {
            r
        }
    }
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    // extended Euclid
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut s0, mut s1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let s2 = &s0 - &q * &s1;
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.is_one() {
        Some(s0.mod_floor(m))
    } else {
        None
    }
}

/// Evaluate an unramified character with value `v` at the uniformizer of its
/// field on the element `x`: the result is `v^{ord(x)}`.
pub fn unram_char_eval(
    value_at_uniformizer: &LaurentRational,
    x: &LocalFieldElement,
) -> Result<LaurentRational, PadicError> {
    if x.is_zero() {
        return Err(PadicError::ZeroArgument);
    }
    Ok(value_at_uniformizer.pow(x.valuation))
}

/// Legendre symbol of a rational unit modulo an odd prime.
pub fn legendre(u: &BigRational, p: u64) -> Result<i32, PadicError> {
    if p == 2 {
        return Err(PadicError::EvenResidueCharacteristic);
    }
    if u.is_zero() || rational_valuation(u, p) != 0 {
        return Err(PadicError::NotAUnit);
    }
    let pb = BigInt::from(p);
    let a = mod_inverse_mul(u.numer(), u.denom(), &pb);
    // Euler criterion by repeated squaring
    let mut result = BigInt::one();
    let mut base = a;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = (&result * &base) % &pb;
        }
        base = (&base * &base) % &pb;
        e >>= 1;
    }
    if result.is_one() {
        Ok(1)
    } else {
        Ok(-1)
    }
}

/// The quadratic Hilbert symbol `(a, b)_p` for an odd prime `p`.
///
/// With `a = p^α u`, `b = p^β v`, the symbol is
/// `(-1)^{αβ(p-1)/2} (u|p)^β (v|p)^α`.
pub fn hilbert_symbol(
    a: &BigRational,
    b: &BigRational,
    p: u64,
) -> Result<i32, PadicError> {
    if p == 2 {
        return Err(PadicError::EvenResidueCharacteristic);
    }
    if a.is_zero() || b.is_zero() {
        return Err(PadicError::ZeroArgument);
    }
    let alpha = rational_valuation(a, p);
    let beta = rational_valuation(b, p);
    let u = a * power(p, -alpha);
    let v = b * power(p, -beta);
    let leg_u = legendre(&u, p)?;
    let leg_v = legendre(&v, p)?;
    let eps = ((p - 1) / 2) as i64;
    let mut s = 1i32;
    if (alpha * beta * eps) % 2 != 0 {
        s = -s;
    }
    if beta % 2 != 0 && leg_u == -1 {
        s = -s;
    }
    if alpha % 2 != 0 && leg_v == -1 {
        s = -s;
    }
    Ok(s)
}

/// A square class in `F^× / (F^×)²`, encoded by valuation parity and a unit
/// representative. Well defined under multiplication by squares.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DiscriminantClass {
    pub odd_valuation: bool,
    pub unit: BigRational,
}

impl DiscriminantClass {
    pub fn trivial() -> Self {
        DiscriminantClass {
            odd_valuation: false,
            unit: BigRational::one(),
        }
    }

    /// The class of an explicit nonzero rational.
    pub fn of_rational(x: &BigRational, p: u64) -> Self {
        assert!(!x.is_zero());
        let v = rational_valuation(x, p);
        DiscriminantClass {
            odd_valuation: v % 2 != 0,
            unit: x * power(p, -v),
        }
    }

    /// The class of the smallest quadratic nonresidue modulo `p`; the
    /// discriminant class of the unramified quadratic extension.
    pub fn nonsquare_unit(p: u64) -> Self {
        for n in 2..p {
            let c = BigRational::from_integer(BigInt::from(n));
            if legendre(&c, p) == Ok(-1) {
                return DiscriminantClass {
                    odd_valuation: false,
                    unit: c,
                };
            }
        }
        panic!("no nonresidue found; p must be an odd prime")
    }

    /// `true` when the class is that of a square, i.e. the associated
    /// quadratic algebra splits.
    pub fn is_split(&self, p: u64) -> bool {
        !self.odd_valuation && legendre(&self.unit, p) == Ok(1)
    }

    fn representative(&self, p: u64) -> BigRational {
        if self.odd_valuation {
            &self.unit * power(p, 1)
        } else {
            self.unit.clone()
        }
    }
}

/// The quadratic character attached to a discriminant class, evaluated via
/// the Hilbert symbol: `x ↦ (d, x)_p`. Trivial when `d` is a square class.
pub fn quad_char_eval(
    d: &DiscriminantClass,
    x: &LocalFieldElement,
) -> Result<i32, PadicError> {
    if x.is_zero() {
        return Err(PadicError::ZeroArgument);
    }
    assert_eq!(x.tag, FieldTag::Base, "quadratic character of F evaluates on F-elements");
    hilbert_symbol(&d.representative(x.p), &x.as_rational(), x.p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symbolic::Var;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn psi_trivial_on_integers() {
        assert_eq!(psi_eval(&rat(0, 1), 5), Cyclotomic::one());
        assert_eq!(psi_eval(&rat(7, 1), 5), Cyclotomic::one());
        assert_eq!(psi_eval(&rat(3, 2), 5), Cyclotomic::one()); // 3/2 is a 5-adic integer
    }

    #[test]
    fn psi_on_principal_parts() {
        // ψ(1/p) is the primitive p-th root
        assert_eq!(psi_eval(&rat(1, 5), 5), Cyclotomic::root_of_unity(5, 1, 1));
        // character orthogonality: sum over x in p^{-1}o/o of ψ(x) = 0
        let mut acc = Cyclotomic::zero();
        for j in 0..5 {
            acc = &acc + &psi_eval(&rat(j, 5), 5);
        }
        assert!(acc.is_zero());
    }

    #[test]
    fn psi_is_additive() {
        let p = 7u64;
        let samples = [rat(1, 7), rat(3, 49), rat(2, 1), rat(5, 7), rat(-4, 49)];
        for x in &samples {
            for y in &samples {
                let lhs = psi_eval(&(x + y), p);
                let rhs = &psi_eval(x, p) * &psi_eval(y, p);
                assert_eq!(lhs, rhs, "x={} y={}", x, y);
            }
        }
    }

    #[test]
    fn psi_respects_denominator_inverses() {
        // ψ(m/(n p^k)) with n invertible: 2/(3*25): 3^{-1} mod 25 = 17, 2*17 = 34 ≡ 9
        let v = psi_eval(&rat(2, 75), 5);
        assert_eq!(v, Cyclotomic::root_of_unity(5, 2, 9));
    }

    #[test]
    fn unramified_character_multiplicativity() {
        let tame = FieldTag::Ext { e: 3, f: 1 };
        let a1 = LaurentRational::var(Var::A1);
        // ϖ_F = ϖ_E^3 inside E
        let pi_f_in_e = LocalFieldElement::with_valuation(tame, 5, 3, BigRational::one());
        assert_eq!(unram_char_eval(&a1, &pi_f_in_e).unwrap(), a1.pow(3));
        // a unit evaluates to 1
        let unit = LocalFieldElement::with_valuation(tame, 5, 0, rat(2, 1));
        assert!(unram_char_eval(&a1, &unit).unwrap().is_one());
    }

    #[test]
    fn central_character_at_tame_discriminant() {
        // Δ = 3^{-3} ϖ_F^{-2} has ord_E = -6 for the tame cubic, p ∤ 3
        let tame = FieldTag::Ext { e: 3, f: 1 };
        let delta = LocalFieldElement::with_valuation(tame, 5, -6, rat(1, 27));
        let omega = LaurentRational::var(Var::A1).mul(&LaurentRational::var(Var::B1));
        let v = unram_char_eval(&omega, &delta).unwrap();
        assert_eq!(v, omega.pow(-6));
    }

    #[test]
    fn hilbert_symbol_squares_and_units() {
        // (1, b)_p = 1
        for p in [5u64, 7, 11, 13] {
            assert_eq!(hilbert_symbol(&rat(1, 1), &rat(-3, 1), p).unwrap(), 1);
        }
        // (-1,-1)_5 = 1: the conic -x^2 - y^2 = z^2 has the point (1,2,0) mod 5
        assert_eq!(hilbert_symbol(&rat(-1, 1), &rat(-1, 1), 5).unwrap(), 1);
        // (ϖ, u)_p is the Legendre symbol of u
        for p in [5u64, 7, 11] {
            for u in 1..p {
                let urat = BigRational::from_integer(BigInt::from(u));
                let expect = legendre(&urat, p).unwrap();
                assert_eq!(
                    hilbert_symbol(&BigRational::from_integer(BigInt::from(p)), &urat, p).unwrap(),
                    expect
                );
            }
        }
    }

    #[test]
    fn hilbert_symbol_against_conic_solvability() {
        // brute force: (a,b)_p = 1 iff z^2 = a x^2 + b y^2 has a nontrivial
        // solution mod p (valid for unit a, b and odd p)
        for p in [5u64, 7, 11, 13] {
            for a in 1..p {
                for b in 1..p {
                    let mut solvable = false;
                    'outer: for x in 0..p {
                        for y in 0..p {
                            if x == 0 && y == 0 {
                                continue;
                            }
                            let rhs = (a * x * x + b * y * y) % p;
                            for z in 0..p {
                                if (z * z) % p == rhs {
                                    solvable = true;
                                    break 'outer;
                                }
                            }
                        }
                    }
                    let sym = hilbert_symbol(
                        &BigRational::from_integer(BigInt::from(a)),
                        &BigRational::from_integer(BigInt::from(b)),
                        p,
                    )
                    .unwrap();
                    assert_eq!(sym == 1, solvable, "p={} a={} b={}", p, a, b);
                }
            }
        }
    }

    #[test]
    fn hilbert_symbol_bilinearity_and_symmetry() {
        let p = 7u64;
        let samples = [rat(1, 1), rat(3, 1), rat(7, 1), rat(-1, 1), rat(21, 1), rat(2, 7)];
        for a in &samples {
            for b in &samples {
                let ab = hilbert_symbol(a, b, p).unwrap();
                let ba = hilbert_symbol(b, a, p).unwrap();
                assert_eq!(ab, ba);
                for c in &samples {
                    let ac = hilbert_symbol(a, c, p).unwrap();
                    let a_bc = hilbert_symbol(a, &(b * c), p).unwrap();
                    assert_eq!(a_bc, ab * ac);
                }
            }
            // (a, -a)_p = 1
            assert_eq!(hilbert_symbol(a, &(-a), p).unwrap(), 1);
        }
    }

    #[test]
    fn p_equals_two_is_rejected() {
        assert_eq!(
            hilbert_symbol(&rat(3, 1), &rat(5, 1), 2),
            Err(PadicError::EvenResidueCharacteristic)
        );
    }

    #[test]
    fn quadratic_character_of_discriminant_classes() {
        // split class: trivial character
        let d = DiscriminantClass::trivial();
        let minus_one = LocalFieldElement::from_int(-1, 5);
        assert_eq!(quad_char_eval(&d, &minus_one).unwrap(), 1);
        // tame cubic class -3 at -1: both units, symbol +1
        for p in [5u64, 7, 11, 13] {
            let d = DiscriminantClass::of_rational(&rat(-3, 1), p);
            let minus_one = LocalFieldElement::from_int(-1, p);
            assert_eq!(quad_char_eval(&d, &minus_one).unwrap(), 1);
        }
        // squares lie in the kernel
        let d = DiscriminantClass::nonsquare_unit(7);
        for x in [rat(4, 1), rat(49, 1), rat(9, 4)] {
            let x = LocalFieldElement::from_rational(x, 7);
            assert_eq!(quad_char_eval(&d, &x).unwrap(), 1);
        }
        // and detect odd valuations for the unramified quadratic class
        let pi = LocalFieldElement::from_int(7, 7);
        assert_eq!(quad_char_eval(&d, &pi).unwrap(), -1);
    }
}
