use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::complex::Complex64;
use num::{BigRational, One, ToPrimitive};
use serde_json::{json, Value};

use super::monomial::{Monomial, Var};
use super::RatPoly;

/// Errors from the fallible rational-function operations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SymbolicError {
    /// Division by the zero function.
    DivisionByZero,
    /// Formal geometric series with ratio identically 1.
    DivergentGeometricSeries,
    /// A variable occurring with negative exponent was bound to zero.
    ZeroBinding(Var),
    /// Substitution made the denominator identically zero.
    DenominatorVanished,
    /// Numeric evaluation hit a (near-)zero denominator.
    PoleAtEvaluationPoint,
    /// Numeric evaluation with a variable missing from the assignment.
    UnboundVariable(Var),
    /// JSON deserialization failure.
    BadSerialization(String),
}

impl fmt::Display for SymbolicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicError::DivisionByZero => write!(f, "division by the zero function"),
            SymbolicError::DivergentGeometricSeries => {
                write!(f, "geometric series with ratio identically 1 diverges")
            }
            SymbolicError::ZeroBinding(v) => write!(
                f,
                "variable {} occurs with negative exponent but was bound to 0",
                v
            ),
            SymbolicError::DenominatorVanished => {
                write!(f, "substitution produced a zero denominator")
            }
            SymbolicError::PoleAtEvaluationPoint => {
                write!(f, "denominator vanishes at the evaluation point")
            }
            SymbolicError::UnboundVariable(v) => {
                write!(f, "variable {} has no value in the assignment", v)
            }
            SymbolicError::BadSerialization(msg) => write!(f, "bad serialization: {}", msg),
        }
    }
}

impl std::error::Error for SymbolicError {}

/// An exact rational function in the fixed variable set.
///
/// Held as an unreduced fraction of Laurent polynomials. Construction
/// normalizes deterministically (denominator freed of monomial content and
/// made monic in the leading coefficient) but performs no GCD reduction;
/// equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct LaurentRational {
    num: RatPoly,
    den: RatPoly,
}

impl LaurentRational {
    /// Build `num/den`. Panics if `den` is identically zero; use
    /// [`LaurentRational::try_new`] for a fallible version.
    pub fn new(num: RatPoly, den: RatPoly) -> Self {
        Self::try_new(num, den).expect("denominator is identically zero")
    }

    pub fn try_new(num: RatPoly, den: RatPoly) -> Result<Self, SymbolicError> {
        if den.is_zero() {
            return Err(SymbolicError::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(LaurentRational {
                num: RatPoly::zero(),
                den: RatPoly::one(),
            });
        }
        // Shift both parts by the denominator's monomial content, then make
        // the denominator monic in its leading coefficient. This fixes a
        // deterministic representative without any GCD computation.
        let shift = den.monomial_content().inv();
        let mut num = num.mul_monomial(&shift);
        let mut den = den.mul_monomial(&shift);
        let lead = den.leading_term().expect("nonzero").1.clone();
        if !lead.is_one() {
            let inv = BigRational::one() / lead;
            num = num.scale(&inv);
            den = den.scale(&inv);
        }
        Ok(LaurentRational { num, den })
    }

    pub fn from_poly(p: RatPoly) -> Self {
        LaurentRational {
            num: p,
            den: RatPoly::one(),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(RatPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(RatPoly::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_poly(RatPoly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(n.into()))
    }

    pub fn var(v: Var) -> Self {
        Self::from_poly(RatPoly::var(v))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::from_poly(RatPoly::monomial(m))
    }

    pub fn var_pow(v: Var, e: i64) -> Self {
        if e >= 0 {
            Self::from_poly(RatPoly::var_pow(v, e))
        } else {
            Self::from_poly(RatPoly::monomial(Monomial::var_pow(v, e)))
        }
    }

    pub fn numerator(&self) -> &RatPoly {
        &self.num
    }

    pub fn denominator(&self) -> &RatPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self == &LaurentRational::one()
    }

    /// `true` iff the value is a single term `c * monomial` with `c != 0`;
    /// such values are the ε-factors and transformation multipliers.
    pub fn as_monomial(&self) -> Option<(BigRational, Monomial)> {
        let (dc, dm) = self.den.as_single_term()?;
        let (nc, nm) = self.num.as_single_term()?;
        Some((nc / dc, nm.mul(&dm.inv())))
    }

    pub fn neg(&self) -> Self {
        LaurentRational {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        // Same-denominator fast path keeps sums of geometric-series terms
        // from accumulating squared denominators.
        if self.den == other.den {
            return LaurentRational::new(self.num.add(&other.num), self.den.clone());
        }
        LaurentRational::new(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        LaurentRational::new(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, SymbolicError> {
        if other.is_zero() {
            return Err(SymbolicError::DivisionByZero);
        }
        LaurentRational::try_new(self.num.mul(&other.den), self.den.mul(&other.num))
    }

    pub fn inv(&self) -> Result<Self, SymbolicError> {
        LaurentRational::one().try_div(self)
    }

    pub fn pow(&self, e: i64) -> Self {
        if e < 0 {
            return self
                .inv()
                .expect("inverse of zero function")
                .pow(-e);
        }
        let mut out = LaurentRational::one();
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                out = out.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        out
    }

    /// Exact composition `f(bindings)`. Variables absent from `bindings` are
    /// left alone. A variable occurring with negative exponent must be bound
    /// to a nonzero function.
    pub fn substitute(
        &self,
        bindings: &BTreeMap<Var, LaurentRational>,
    ) -> Result<Self, SymbolicError> {
        let num = substitute_poly(&self.num, bindings)?;
        let den = substitute_poly(&self.den, bindings)?;
        if den.is_zero() {
            return Err(SymbolicError::DenominatorVanished);
        }
        num.try_div(&den)
    }

    /// Numeric evaluation at a complex assignment covering every variable
    /// that occurs.
    pub fn evaluate_numeric(
        &self,
        assignment: &BTreeMap<Var, Complex64>,
    ) -> Result<Complex64, SymbolicError> {
        let n = eval_poly(&self.num, assignment)?;
        let d = eval_poly(&self.den, assignment)?;
        // scale-aware zero test for the denominator
        let scale = self
            .den
            .terms()
            .map(|(m, c)| {
                let mut t = c.to_f64().unwrap_or(0.0).abs();
                for (v, e) in m.exps() {
                    t *= assignment.get(&v).map(|z| z.norm()).unwrap_or(1.0).powi(e as i32);
                }
                t
            })
            .fold(0.0_f64, f64::max)
            .max(f64::MIN_POSITIVE);
        if d.norm() <= 1e-13 * scale {
            return Err(SymbolicError::PoleAtEvaluationPoint);
        }
        Ok(n / d)
    }

    /// Canonical JSON form: `{"num":[{"coef":"3/2","exps":{"u":1,"T":-2}}],"den":[...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "num": poly_to_json(&self.num),
            "den": poly_to_json(&self.den),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, SymbolicError> {
        let num = poly_from_json(v.get("num").ok_or_else(|| bad("missing num"))?)?;
        let den = poly_from_json(v.get("den").ok_or_else(|| bad("missing den"))?)?;
        LaurentRational::try_new(num, den)
    }
}

fn bad(msg: &str) -> SymbolicError {
    SymbolicError::BadSerialization(msg.to_string())
}

fn poly_to_json(p: &RatPoly) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .map(|(m, c)| {
            let exps: BTreeMap<String, i64> =
                m.exps().map(|(v, e)| (v.name().to_string(), e)).collect();
            json!({"coef": c.to_string(), "exps": exps})
        })
        .collect();
    Value::Array(terms)
}

fn poly_from_json(v: &Value) -> Result<RatPoly, SymbolicError> {
    let arr = v.as_array().ok_or_else(|| bad("terms must be an array"))?;
    let mut out = RatPoly::zero();
    for t in arr {
        let coef_s = t
            .get("coef")
            .and_then(Value::as_str)
            .ok_or_else(|| bad("term missing coef"))?;
        let coef = BigRational::from_str(coef_s).map_err(|e| bad(&e.to_string()))?;
        let mut m = Monomial::one();
        if let Some(exps) = t.get("exps").and_then(Value::as_object) {
            for (name, e) in exps {
                let var = Var::parse(name).ok_or_else(|| bad(&format!("unknown variable {}", name)))?;
                let e = e.as_i64().ok_or_else(|| bad("exponent must be an integer"))?;
                m = m.mul(&Monomial::var_pow(var, e));
            }
        }
        out.add_term(coef, m);
    }
    Ok(out)
}

fn substitute_poly(
    p: &RatPoly,
    bindings: &BTreeMap<Var, LaurentRational>,
) -> Result<LaurentRational, SymbolicError> {
    // Fast path: every binding is a nonzero single term, so each monomial
    // maps to a single term again. This covers the s -> 1-s and
    // contragredient substitutions.
    let monomial_only = bindings
        .values()
        .all(|f| f.as_monomial().is_some());
    if monomial_only {
        let mut out = RatPoly::zero();
        for (m, c) in p.terms() {
            let mut coef = c.clone();
            let mut mono = Monomial::one();
            for (v, e) in m.exps() {
                match bindings.get(&v) {
                    Some(f) => {
                        let (bc, bm) = f.as_monomial().expect("checked");
                        coef *= rat_pow(&bc, e);
                        mono = mono.mul(&bm.pow(e));
                    }
                    None => mono = mono.mul(&Monomial::var_pow(v, e)),
                }
            }
            out.add_term(coef, mono);
        }
        return Ok(LaurentRational::from_poly(out));
    }
    let mut out = LaurentRational::zero();
    for (m, c) in p.terms() {
        let mut term = LaurentRational::constant(c.clone());
        for (v, e) in m.exps() {
            let base = bindings
                .get(&v)
                .cloned()
                .unwrap_or_else(|| LaurentRational::var(v));
            if e < 0 && base.is_zero() {
                return Err(SymbolicError::ZeroBinding(v));
            }
            term = term.mul(&base.pow(e));
        }
        out = out.add(&term);
    }
    Ok(out)
}

fn rat_pow(c: &BigRational, e: i64) -> BigRational {
    if e >= 0 {
        num::pow::pow(c.clone(), e as usize)
    } else {
        num::pow::pow(BigRational::one() / c, (-e) as usize)
    }
}

fn eval_poly(
    p: &RatPoly,
    assignment: &BTreeMap<Var, Complex64>,
) -> Result<Complex64, SymbolicError> {
    let mut acc = Complex64::new(0.0, 0.0);
    for (m, c) in p.terms() {
        let mut t = Complex64::new(c.to_f64().ok_or(SymbolicError::PoleAtEvaluationPoint)?, 0.0);
        for (v, e) in m.exps() {
            let z = assignment
                .get(&v)
                .copied()
                .ok_or(SymbolicError::UnboundVariable(v))?;
            t *= z.powi(e as i32);
        }
        acc += t;
    }
    Ok(acc)
}

/// Closed form of the formal geometric series `sum_{n>=0} first * ratio^n`.
///
/// Returns `first / (1 - ratio)`; the defining property
/// `first + ratio * result = result` holds exactly. Errors when the ratio is
/// identically 1.
pub fn geometric_sum(
    first: &LaurentRational,
    ratio: &LaurentRational,
) -> Result<LaurentRational, SymbolicError> {
    if ratio == &LaurentRational::one() {
        return Err(SymbolicError::DivergentGeometricSeries);
    }
    first
        .try_div(&LaurentRational::one().sub(ratio))
        .map_err(|_| SymbolicError::DivergentGeometricSeries)
}

impl PartialEq for LaurentRational {
    /// Exact equality of rational functions by cross-multiplication.
    fn eq(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Eq for LaurentRational {}

impl fmt::Display for LaurentRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == RatPoly::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &LaurentRational {
    type Output = LaurentRational;
    fn add(self, rhs: &LaurentRational) -> LaurentRational {
        LaurentRational::add(self, rhs)
    }
}

impl Sub for &LaurentRational {
    type Output = LaurentRational;
    fn sub(self, rhs: &LaurentRational) -> LaurentRational {
        LaurentRational::sub(self, rhs)
    }
}

impl Mul for &LaurentRational {
    type Output = LaurentRational;
    fn mul(self, rhs: &LaurentRational) -> LaurentRational {
        LaurentRational::mul(self, rhs)
    }
}

impl Div for &LaurentRational {
    type Output = LaurentRational;
    fn div(self, rhs: &LaurentRational) -> LaurentRational {
        self.try_div(rhs).expect("division by zero function")
    }
}

impl Neg for &LaurentRational {
    type Output = LaurentRational;
    fn neg(self) -> LaurentRational {
        LaurentRational::neg(self)
    }
}
