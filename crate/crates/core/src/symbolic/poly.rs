use std::collections::BTreeMap;
use std::fmt;
use std::ops::Neg;

use num::{One, Zero};

use super::monomial::{Monomial, Var};

/// Coefficient ring for [`LaurentPoly`]: any exact ring with the standard
/// numeric traits. Satisfied by `BigRational` and by
/// [`crate::cyclotomic::Cyclotomic`].
pub trait Scalar:
    Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = Self>
{
}

impl<T> Scalar for T where
    T: Clone + PartialEq + fmt::Debug + fmt::Display + Zero + One + Neg<Output = T>
{
}

/// A Laurent polynomial: a finite sum of monomials with nonzero coefficients.
///
/// Terms are kept in a `BTreeMap` keyed by the canonical monomial order, so
/// iteration, display, and serialization are deterministic.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly<C: Scalar> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Scalar> Default for LaurentPoly<C> {
    fn default() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }
}

impl<C: Scalar> LaurentPoly<C> {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(C::one())
    }

    pub fn constant(c: C) -> Self {
        Self::term(c, Monomial::one())
    }

    pub fn term(c: C, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        LaurentPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(C::one(), m)
    }

    pub fn var(v: Var) -> Self {
        Self::monomial(Monomial::var(v))
    }

    pub fn var_pow(v: Var, e: i64) -> Self {
        Self::monomial(Monomial::var_pow(v, e))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// The term that is maximal in the canonical order, if any.
    pub fn leading_term(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, c: C, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(cur) => {
                *cur = cur.clone() + c;
                if cur.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(c.clone(), m.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(c1.clone() * c2.clone(), m1.mul(m2));
            }
        }
        out
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, k)| (m.clone(), k.clone() * c.clone()))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut out = Self::one();
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

    pub fn map_coeffs<D: Scalar>(&self, f: impl Fn(&C) -> D) -> LaurentPoly<D> {
        let mut out = LaurentPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(f(c), m.clone());
        }
        out
    }

    /// `true` iff the polynomial is a single term; returns it.
    pub fn as_single_term(&self) -> Option<(&C, &Monomial)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (c, m))
        } else {
            None
        }
    }

    /// Per-variable minimum exponent over all terms (the monomial content).
    /// Zero polynomial has trivial content.
    pub fn monomial_content(&self) -> Monomial {
        let mut mins: BTreeMap<Var, i64> = BTreeMap::new();
        let mut first = true;
        for m in self.terms.keys() {
            if first {
                for (v, e) in m.exps() {
                    mins.insert(v, e);
                }
                first = false;
            } else {
                // variables absent from m have exponent 0
                let keys: Vec<Var> = mins.keys().copied().collect();
                for v in keys {
                    let e = m.exponent(v);
                    let cur = mins.get_mut(&v).unwrap();
                    if e < *cur {
                        *cur = e;
                    }
                }
                for (v, e) in m.exps() {
                    mins.entry(v).or_insert_with(|| e.min(0));
                }
            }
        }
        let mut out = Monomial::one();
        for (v, e) in mins {
            if e != 0 {
                out = out.mul(&Monomial::var_pow(v, e));
            }
        }
        out
    }
}

impl<C: Scalar> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if m.is_one() {
                write!(f, "{}", c)?;
            } else {
                write!(f, "({})*{}", c, m)?;
            }
        }
        Ok(())
    }
}
