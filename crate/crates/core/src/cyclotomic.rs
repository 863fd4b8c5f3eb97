//! Exact arithmetic in the cyclotomic fields `Q(ζ_{p^k})`.
//!
//! Additive-character values live here: `ψ(x)` for `x` with a `p`-power
//! denominator is a root of unity of `p`-power order. Elements are vectors
//! of exact rationals over the power basis `ζ^0, ..., ζ^{φ(p^k)-1}`, reduced
//! canonically modulo the cyclotomic polynomial `Φ_{p^k}`. Levels are raised
//! lazily to the least common level before arithmetic so the dense vectors
//! stay small.

use std::fmt;
use std::ops::{Add, Mul, Neg};

use num::complex::Complex64;
use num::{BigRational, One, ToPrimitive, Zero};
use serde_json::{json, Value};

/// An exact element of `Q(ζ_{p^k})`, with `ζ_{p^k} = e^{2πi/p^k}`.
///
/// Invariant: `coeffs.len() == φ(p^k) = p^{k-1}(p-1)`, the canonical reduced
/// form modulo `Φ_{p^k}`. Rational numbers are the special case `k = 0`
/// (level 1), which mixes with any prime. Equality is mathematical: values
/// are compared after raising to a common level.
#[derive(Clone, Debug)]
pub struct Cyclotomic {
    p: u64,
    k: u32,
    coeffs: Vec<BigRational>,
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.k != 0 && other.k != 0 && self.p != other.p {
            // fields for distinct primes meet only in the rationals
            return match (self.as_rational(), other.as_rational()) {
                (Some(a), Some(b)) => a == b,
                _ => false,
            };
        }
        let (a, b) = self.common_level(other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

fn phi(p: u64, k: u32) -> usize {
    if k == 0 {
        1
    } else {
        (p.pow(k - 1) * (p - 1)) as usize
    }
}

impl Cyclotomic {
    pub fn rational(c: BigRational) -> Self {
        Cyclotomic {
            p: 0,
            k: 0,
            coeffs: vec![c],
        }
    }

    pub fn from_i64(n: i64) -> Self {
        Self::rational(BigRational::from_integer(n.into()))
    }

    /// `ζ_{p^k}^e`, reduced.
    pub fn root_of_unity(p: u64, k: u32, e: i64) -> Self {
        assert!(p >= 2, "root of unity needs a prime modulus");
        if k == 0 {
            return Self::one();
        }
        let n = p.pow(k) as i64;
        let e = e.rem_euclid(n) as usize;
        let mut out = Cyclotomic {
            p,
            k,
            coeffs: vec![BigRational::zero(); phi(p, k)],
        };
        out.add_power(e, &BigRational::one());
        out
    }

    pub fn level(&self) -> u64 {
        if self.k == 0 {
            1
        } else {
            self.p.pow(self.k)
        }
    }

    /// Add `c * ζ^e` (with `0 <= e < p^k`) into the reduced representation.
    ///
    /// For `e >= φ(p^k)` the relation `Φ_{p^k}(ζ) = 0` rewrites
    /// `ζ^{φ+r} = -Σ_{j<p-1} ζ^{r + j p^{k-1}}`, whose exponents are all in
    /// basis range.
    fn add_power(&mut self, e: usize, c: &BigRational) {
        let d = phi(self.p, self.k);
        if e < d {
            self.coeffs[e] += c;
            return;
        }
        let step = self.p.pow(self.k - 1) as usize;
        let r = e - d;
        debug_assert!(r < step);
        for j in 0..(self.p - 1) as usize {
            self.coeffs[r + j * step] -= c;
        }
    }

    /// Raise to level `p^k2`, `k2 >= k`, via `ζ_{p^k} = ζ_{p^{k2}}^{p^{k2-k}}`.
    fn raised(&self, p: u64, k2: u32) -> Cyclotomic {
        if self.k == 0 {
            let mut out = Cyclotomic {
                p,
                k: k2,
                coeffs: vec![BigRational::zero(); phi(p, k2)],
            };
            out.coeffs[0] = self.coeffs[0].clone();
            return out;
        }
        assert_eq!(self.p, p, "cyclotomic levels must share the prime");
        assert!(k2 >= self.k);
        if k2 == self.k {
            return self.clone();
        }
        let mult = p.pow(k2 - self.k) as usize;
        let mut out = Cyclotomic {
            p,
            k: k2,
            coeffs: vec![BigRational::zero(); phi(p, k2)],
        };
        for (e, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                out.add_power(e * mult, c);
            }
        }
        out
    }

    fn common_level(&self, other: &Self) -> (Cyclotomic, Cyclotomic) {
        if self.k == 0 && other.k == 0 {
            return (self.clone(), other.clone());
        }
        let (p, k) = if self.k == 0 {
            (other.p, other.k)
        } else if other.k == 0 {
            (self.p, self.k)
        } else {
            assert_eq!(self.p, other.p, "cannot mix roots of unity of different primes");
            (self.p, self.k.max(other.k))
        };
        (self.raised(p, k), other.raised(p, k))
    }

    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coeffs[1..].iter().all(|c| c.is_zero()) {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Complex embedding sending `ζ_{p^k}` to `e^{2πi/p^k}`.
    pub fn embed(&self) -> Complex64 {
        let n = self.level() as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let theta = 2.0 * std::f64::consts::PI * (e as f64) / n;
            acc += Complex64::new(c.to_f64().unwrap_or(0.0), 0.0)
                * Complex64::new(theta.cos(), theta.sin());
        }
        acc
    }

    pub fn to_json(&self) -> Value {
        json!({
            "level": self.level(),
            "coeffs": self.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })
    }
}

fn add_impl(lhs: &Cyclotomic, rhs: &Cyclotomic) -> Cyclotomic {
    let (mut a, b) = lhs.common_level(rhs);
    for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
        *x += y;
    }
    a
}

fn mul_impl(lhs: &Cyclotomic, rhs: &Cyclotomic) -> Cyclotomic {
    let (a, b) = lhs.common_level(rhs);
    if a.k == 0 {
        return Cyclotomic::rational(&a.coeffs[0] * &b.coeffs[0]);
    }
    let n = a.level() as usize;
    let mut out = Cyclotomic {
        p: a.p,
        k: a.k,
        coeffs: vec![BigRational::zero(); phi(a.p, a.k)],
    };
    for (e1, c1) in a.coeffs.iter().enumerate() {
        if c1.is_zero() {
            continue;
        }
        for (e2, c2) in b.coeffs.iter().enumerate() {
            if c2.is_zero() {
                continue;
            }
            out.add_power((e1 + e2) % n, &(c1 * c2));
        }
    }
    out
}

impl<'a, 'b> Add<&'b Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &'b Cyclotomic) -> Cyclotomic {
        add_impl(self, rhs)
    }
}

impl Add for Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: Cyclotomic) -> Cyclotomic {
        add_impl(&self, &rhs)
    }
}

impl<'a, 'b> Mul<&'b Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &'b Cyclotomic) -> Cyclotomic {
        mul_impl(self, rhs)
    }
}

impl Mul for Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: Cyclotomic) -> Cyclotomic {
        mul_impl(&self, &rhs)
    }
}

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            p: self.p,
            k: self.k,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Zero for Cyclotomic {
    fn zero() -> Self {
        Self::rational(BigRational::zero())
    }

    fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }
}

impl One for Cyclotomic {
    fn one() -> Self {
        Self::rational(BigRational::one())
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(r) = self.as_rational() {
            return write!(f, "{}", r);
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{}", c)?;
            } else {
                write!(f, "({})*z{}^{}", c, self.level(), e)?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_of_unity_has_exact_order() {
        // ζ_{25}^25 = 1
        let z = Cyclotomic::root_of_unity(5, 2, 1);
        let mut acc = Cyclotomic::one();
        for _ in 0..25 {
            acc = &acc * &z;
        }
        assert_eq!(acc, Cyclotomic::one());
        let mut acc = Cyclotomic::one();
        for _ in 0..5 {
            acc = &acc * &z;
        }
        assert_eq!(acc, Cyclotomic::root_of_unity(5, 1, 1).raised(5, 2));
    }

    #[test]
    fn orthogonality_sum_vanishes() {
        // sum_{j<p} ζ_p^{j m} = 0 for p not dividing m
        for p in [3u64, 5, 7] {
            for m in [1i64, 2, (p - 1) as i64] {
                let mut acc = Cyclotomic::zero();
                for j in 0..p as i64 {
                    acc = &acc + &Cyclotomic::root_of_unity(p, 1, j * m);
                }
                assert!(acc.is_zero(), "p={} m={}", p, m);
            }
        }
    }

    #[test]
    fn level_raising_is_multiplicative() {
        // ζ_5 * ζ_25 = ζ_25^6
        let a = Cyclotomic::root_of_unity(5, 1, 1);
        let b = Cyclotomic::root_of_unity(5, 2, 1);
        assert_eq!(&a * &b, Cyclotomic::root_of_unity(5, 2, 6));
    }

    #[test]
    fn embedding_matches_polar_form() {
        let z = Cyclotomic::root_of_unity(7, 1, 3);
        let w = z.embed();
        let expected = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI * 3.0 / 7.0);
        assert!((w - expected).norm() < 1e-12);
    }

    #[test]
    fn rationals_mix_with_any_prime() {
        let half = Cyclotomic::rational(BigRational::new(1.into(), 2.into()));
        let z = Cyclotomic::root_of_unity(5, 1, 2);
        let prod = &half * &z;
        assert_eq!(&prod + &prod, z);
    }
}
