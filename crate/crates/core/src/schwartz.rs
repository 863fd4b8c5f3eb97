//! Exact Schwartz–Bruhat functions on `F²` and the Weil representation.
//!
//! A function is a finite sum of character-twisted box indicators
//! `coef · ψ(γ₁x + γ₂y) · 1_{a₁+ϖ^{m₁}o}(x) · 1_{a₂+ϖ^{m₂}o}(y)`
//! with coefficients in the cyclotomic-valued Laurent-polynomial ring (the
//! `u`-powers record `|t|`-factors and Fourier volumes exactly). The class
//! is closed under the four generator actions
//! `m(t), n(b), w, a(ν)`: scalings rescale boxes, the unipotent twist
//! becomes a linear twist after refining boxes until `ψ(b(x-a₁)(y-a₂))` is
//! constant, and `w` acts by the exact Fourier transform with self-dual
//! measure.

use num::{BigRational, One, Zero};

use crate::cyclotomic::Cyclotomic;
use crate::padic::{psi_eval, rational_valuation};
use crate::symbolic::{LaurentPoly, Monomial, Var};

/// Laurent polynomials with cyclotomic coefficients, the value ring for
/// Schwartz functions and Whittaker integrals.
pub type CycPoly = LaurentPoly<Cyclotomic>;

/// One character-twisted box indicator.
#[derive(Clone, Debug)]
pub struct BoxTerm {
    pub coef: CycPoly,
    /// `(γ₁, γ₂)`: the linear character twist `ψ(γ₁x + γ₂y)`.
    pub twist: (BigRational, BigRational),
    /// Box centers `(a₁, a₂)`.
    pub center: (BigRational, BigRational),
    /// Box depths `(m₁, m₂)`: the box in each coordinate is `a + ϖ^m o`.
    pub depth: (i64, i64),
}

/// A finite sum of [`BoxTerm`]s on `F²`, with `F` of residue characteristic
/// `p`.
#[derive(Clone, Debug)]
pub struct SchwartzFunction2D {
    pub p: u64,
    pub terms: Vec<BoxTerm>,
}

/// The four generators of `GL_2(F)` acting through the Weil representation.
#[derive(Clone, Debug)]
pub enum Gl2Elem {
    /// `m(t) = diag(t, t^{-1})`: `φ(x,y) ↦ |t| φ(tx, ty)`.
    M(BigRational),
    /// `n(b)`, upper unipotent: `φ ↦ ψ(bxy) φ`.
    N(BigRational),
    /// The Weyl element `w`: the Fourier transform `∫ φ(u,v) ψ(uy + vx)`.
    W,
    /// `a(ν) = diag(ν, 1)`: `φ(x,y) ↦ φ(νx, y)`.
    A(BigRational),
}

impl Gl2Elem {
    /// Determinant of the generator, used for the central/normalizing
    /// factors of Whittaker integrals.
    pub fn det(&self) -> BigRational {
        match self {
            Gl2Elem::M(_) | Gl2Elem::N(_) => BigRational::one(),
            Gl2Elem::W => BigRational::one(),
            Gl2Elem::A(nu) => nu.clone(),
        }
    }
}

/// Valuation with `+∞` (for zero) mapped to `i64::MAX`.
fn val_or_inf(x: &BigRational, p: u64) -> i64 {
    if x.is_zero() {
        i64::MAX
    } else {
        rational_valuation(x, p)
    }
}

fn u_pow(e: i64) -> CycPoly {
    CycPoly::monomial(Monomial::var_pow(Var::U, e))
}

impl SchwartzFunction2D {
    /// The unit box `1_{o × o}`.
    pub fn unit_box(p: u64) -> Self {
        SchwartzFunction2D {
            p,
            terms: vec![BoxTerm {
                coef: CycPoly::one(),
                twist: (BigRational::zero(), BigRational::zero()),
                center: (BigRational::zero(), BigRational::zero()),
                depth: (0, 0),
            }],
        }
    }

    /// Pointwise evaluation at exact rational arguments.
    pub fn eval(&self, x: &BigRational, y: &BigRational) -> CycPoly {
        let mut acc = CycPoly::zero();
        for t in &self.terms {
            if !in_box(x, &t.center.0, t.depth.0, self.p)
                || !in_box(y, &t.center.1, t.depth.1, self.p)
            {
                continue;
            }
            let tw = psi_eval(&(&t.twist.0 * x + &t.twist.1 * y), self.p);
            acc = acc.add(&t.coef.scale(&tw));
        }
        acc
    }

    /// Split every box into `p²` sub-boxes of depth one deeper in each
    /// coordinate. Pointwise values are unchanged.
    pub fn refine(&self) -> Self {
        SchwartzFunction2D {
            p: self.p,
            terms: self
                .terms
                .iter()
                .flat_map(|t| split_both(t, self.p))
                .collect(),
        }
    }

    /// Act by one Weil-representation generator.
    pub fn weil_act(&self, g: &Gl2Elem) -> Self {
        let p = self.p;
        let terms = match g {
            Gl2Elem::M(t) => {
                assert!(!t.is_zero(), "m(t) needs t nonzero");
                let v = rational_valuation(t, p);
                self.terms
                    .iter()
                    .map(|term| BoxTerm {
                        // |t| = q^{-v} = u^{2v}
                        coef: term.coef.mul(&u_pow(2 * v)),
                        twist: (&term.twist.0 * t, &term.twist.1 * t),
                        center: (&term.center.0 / t, &term.center.1 / t),
                        depth: (term.depth.0 - v, term.depth.1 - v),
                    })
                    .collect()
            }
            Gl2Elem::A(nu) => {
                assert!(!nu.is_zero(), "a(ν) needs ν nonzero");
                let v = rational_valuation(nu, p);
                self.terms
                    .iter()
                    .map(|term| BoxTerm {
                        coef: term.coef.clone(),
                        twist: (&term.twist.0 * nu, term.twist.1.clone()),
                        center: (&term.center.0 / nu, term.center.1.clone()),
                        depth: (term.depth.0 - v, term.depth.1),
                    })
                    .collect()
            }
            Gl2Elem::N(b) => {
                if b.is_zero() {
                    return self.clone();
                }
                let vb = rational_valuation(b, p);
                let mut out = Vec::new();
                for term in &self.terms {
                    // refine both depths until ψ(b ξ υ) ≡ 1 on the box,
                    // i.e. ord(b) + m₁ + m₂ ≥ 0
                    let mut stack = vec![term.clone()];
                    while vb + stack[0].depth.0 + stack[0].depth.1 < 0 {
                        stack = stack.iter().flat_map(|t| split_both(t, p)).collect();
                    }
                    for t in stack {
                        // ψ(bxy) = ψ(b a₂ x + b a₁ y - b a₁ a₂) on the box
                        let (a1, a2) = (&t.center.0, &t.center.1);
                        let extra = psi_eval(&-(b * a1 * a2), p);
                        out.push(BoxTerm {
                            coef: t.coef.scale(&extra),
                            twist: (&t.twist.0 + &(b * a2), &t.twist.1 + &(b * a1)),
                            center: t.center.clone(),
                            depth: t.depth,
                        });
                    }
                }
                out
            }
            Gl2Elem::W => self
                .terms
                .iter()
                .map(|t| {
                    // ∫ 1_{a+ϖ^m o}(x) ψ(x z) dx = q^{-m} ψ(a z) 1_{ϖ^{-m} o}(z),
                    // applied in each coordinate with z = y + γ₁ resp. x + γ₂
                    let vol = u_pow(2 * (t.depth.0 + t.depth.1));
                    let phase = &psi_eval(&(&t.center.0 * &t.twist.0), self.p)
                        * &psi_eval(&(&t.center.1 * &t.twist.1), self.p);
                    BoxTerm {
                        coef: t.coef.mul(&vol).scale(&phase),
                        twist: (t.center.1.clone(), t.center.0.clone()),
                        center: (-t.twist.1.clone(), -t.twist.0.clone()),
                        depth: (-t.depth.1, -t.depth.0),
                    }
                })
                .collect(),
        };
        SchwartzFunction2D { p, terms }
    }

    /// Act by a word of generators, leftmost acting last (so the word reads
    /// as a product of group elements applied to the function).
    pub fn weil_act_word(&self, word: &[Gl2Elem]) -> Self {
        let mut out = self.clone();
        for g in word.iter().rev() {
            out = out.weil_act(g);
        }
        out
    }

    /// Smallest valuation met by the support in each coordinate: the support
    /// of the x-part lies in `ϖ^{e₁} o` with `e₁` the returned first value.
    /// `None` for the empty function.
    pub fn support_extents(&self) -> Option<(i64, i64)> {
        let mut ext: Option<(i64, i64)> = None;
        for t in &self.terms {
            let e1 = val_or_inf(&t.center.0, self.p).min(t.depth.0);
            let e2 = val_or_inf(&t.center.1, self.p).min(t.depth.1);
            ext = Some(match ext {
                None => (e1, e2),
                Some((a, b)) => (a.min(e1), b.min(e2)),
            });
        }
        ext
    }
}

fn in_box(x: &BigRational, center: &BigRational, depth: i64, p: u64) -> bool {
    val_or_inf(&(x - center), p) >= depth
}

/// Split a term into `p²` sub-boxes, one depth deeper in both coordinates.
fn split_both(t: &BoxTerm, p: u64) -> Vec<BoxTerm> {
    let mut out = Vec::with_capacity((p * p) as usize);
    for r1 in 0..p {
        for r2 in 0..p {
            let shift1 = BigRational::from_integer(r1.into()) * pow_p(p, t.depth.0);
            let shift2 = BigRational::from_integer(r2.into()) * pow_p(p, t.depth.1);
            out.push(BoxTerm {
                coef: t.coef.clone(),
                twist: t.twist.clone(),
                center: (&t.center.0 + shift1, &t.center.1 + shift2),
                depth: (t.depth.0 + 1, t.depth.1 + 1),
            });
        }
    }
    out
}

fn pow_p(p: u64, e: i64) -> BigRational {
    let base = BigRational::from_integer(num::BigInt::from(p));
    if e >= 0 {
        num::pow::pow(base, e as usize)
    } else {
        num::pow::pow(BigRational::one() / base, (-e) as usize)
    }
}
