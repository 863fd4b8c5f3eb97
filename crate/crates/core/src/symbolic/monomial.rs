use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// The closed variable set: `u = q^{-1/2}`, `T = q^{-s}`, and the Satake
/// parameters of the (up to three) principal-series factors.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Var {
    U,
    T,
    A1,
    B1,
    A2,
    B2,
    A3,
    B3,
}

/// All variables in canonical order.
pub const VARS: [Var; 8] = [
    Var::U,
    Var::T,
    Var::A1,
    Var::B1,
    Var::A2,
    Var::B2,
    Var::A3,
    Var::B3,
];

impl Var {
    pub fn name(self) -> &'static str {
        match self {
            Var::U => "u",
            Var::T => "T",
            Var::A1 => "a1",
            Var::B1 => "b1",
            Var::A2 => "a2",
            Var::B2 => "b2",
            Var::A3 => "a3",
            Var::B3 => "b3",
        }
    }

    pub fn parse(s: &str) -> Option<Var> {
        VARS.iter().copied().find(|v| v.name() == s)
    }

    /// Satake pair (alpha, beta) for the i-th factor, i = 0, 1, 2.
    pub fn satake_pair(i: usize) -> (Var, Var) {
        match i {
            0 => (Var::A1, Var::B1),
            1 => (Var::A2, Var::B2),
            2 => (Var::A3, Var::B3),
            _ => panic!("at most three GL(2) factors"),
        }
    }
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A Laurent monomial: a map from variables to signed exponents.
///
/// Zero exponents are never stored, so two monomials are equal iff their
/// exponent maps are equal. The ordering used for canonical term order is
/// total degree first, then exponent vectors lexicographically over [`VARS`].
#[derive(Clone, PartialEq, Eq, Debug, Default, Hash)]
pub struct Monomial {
    exps: BTreeMap<Var, i64>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn var(v: Var) -> Self {
        Monomial::var_pow(v, 1)
    }

    pub fn var_pow(v: Var, e: i64) -> Self {
        let mut exps = BTreeMap::new();
        if e != 0 {
            exps.insert(v, e);
        }
        Monomial { exps }
    }

    pub fn from_pairs(pairs: &[(Var, i64)]) -> Self {
        let mut m = Monomial::one();
        for &(v, e) in pairs {
            m = m.mul(&Monomial::var_pow(v, e));
        }
        m
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn exponent(&self, v: Var) -> i64 {
        self.exps.get(&v).copied().unwrap_or(0)
    }

    pub fn exps(&self) -> impl Iterator<Item = (Var, i64)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    pub fn vars(&self) -> impl Iterator<Item = Var> + '_ {
        self.exps.keys().copied()
    }

    pub fn total_degree(&self) -> i64 {
        self.exps.values().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            let cur = exps.entry(v).or_insert(0);
            *cur += e;
            if *cur == 0 {
                exps.remove(&v);
            }
        }
        Monomial { exps }
    }

    pub fn inv(&self) -> Monomial {
        Monomial {
            exps: self.exps.iter().map(|(&v, &e)| (v, -e)).collect(),
        }
    }

    pub fn pow(&self, k: i64) -> Monomial {
        if k == 0 {
            return Monomial::one();
        }
        Monomial {
            exps: self.exps.iter().map(|(&v, &e)| (v, e * k)).collect(),
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total_degree()
            .cmp(&other.total_degree())
            .then_with(|| {
                for v in VARS {
                    match self.exponent(v).cmp(&other.exponent(v)) {
                        Ordering::Equal => continue,
                        ord => return ord,
                    }
                }
                Ordering::Equal
            })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        let mut first = true;
        for v in VARS {
            let e = self.exponent(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v)?;
            } else {
                write!(f, "{}^{}", v, e)?;
            }
        }
        Ok(())
    }
}
