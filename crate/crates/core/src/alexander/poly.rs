use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

/// Laurent polynomial in `nvars` variables with integer coefficients.
/// Monomials are exponent vectors, kept in lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialTerm {
    pub coefficient: String,
    pub exponents: Vec<i64>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::monomial(1, vec![0; nvars])
    }

    pub fn monomial(c: i64, exps: Vec<i64>) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, BigInt::from(c));
        p
    }

    /// `x^m - 1`.
    pub fn binomial(exps: &[i64]) -> Self {
        Self::monomial(1, exps.to_vec()).sub(&Self::one(exps.len()))
    }

    /// From `(coefficient, exponents)` pairs.
    pub fn from_terms(nvars: usize, terms: &[(i64, Vec<i64>)]) -> Self {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            assert_eq!(e.len(), nvars);
            p.add_term(e.clone(), BigInt::from(*c));
        }
        p
    }

    fn add_term(&mut self, m: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(m, c)| (m.as_slice(), c))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let m: Vec<i64> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                out.add_term(m, c1 * c2);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Lexicographically largest monomial.
    pub fn leading(&self) -> Option<(&[i64], &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (m.as_slice(), c))
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    /// Long division on lexicographic leading terms, confined to the
    /// exponent box of `self` (a quotient term outside it cannot cancel).
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero(self.nvars));
        }
        let (dm, dc) = d.leading().map(|(m, c)| (m.to_vec(), c.clone()))?;
        let (lo, _) = self.exponent_box();
        let (dlo, _) = d.exponent_box();
        let mut rem = self.clone();
        let mut q = Self::zero(self.nvars);
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (m.to_vec(), c.clone())) {
            let qm: Vec<i64> = rm.iter().zip(&dm).map(|(a, b)| a - b).collect();
            // every monomial of q * d has each exponent >= qm + dlo
            if qm.iter().zip(&dlo).zip(&lo).any(|((a, b), l)| a + b < *l) {
                return None;
            }
            if !(&rc % &dc).is_zero() {
                return None;
            }
            let qc = &rc / &dc;
            let term = LaurentPoly { nvars: self.nvars, terms: BTreeMap::from([(qm, qc)]) };
            rem = rem.sub(&term.mul(d));
            q = q.add(&term);
        }
        Some(q)
    }

    /// Per-variable minimum and maximum exponents.
    pub fn exponent_box(&self) -> (Vec<i64>, Vec<i64>) {
        let mut lo = vec![i64::MAX; self.nvars];
        let mut hi = vec![i64::MIN; self.nvars];
        for m in self.terms.keys() {
            for i in 0..self.nvars {
                lo[i] = lo[i].min(m[i]);
                hi[i] = hi[i].max(m[i]);
            }
        }
        if self.terms.is_empty() {
            (vec![0; self.nvars], vec![0; self.nvars])
        } else {
            (lo, hi)
        }
    }

    /// Multiply by the unit `+-t^k` so that all exponents are nonnegative with
    /// minimum 0 in each variable and the lexicographically smallest monomial
    /// has a positive coefficient.
    pub fn normalized(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let (lo, _) = self.exponent_box();
        let sign_flip = self.terms.values().next().is_some_and(|c| c.is_negative());
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let shifted: Vec<i64> = m.iter().zip(&lo).map(|(a, b)| a - b).collect();
            out.add_term(shifted, if sign_flip { -c } else { c.clone() });
        }
        out
    }

    /// Substitutes `t_i = t` for every variable.
    pub fn specialize_diagonal(&self) -> Self {
        let mut out = Self::zero(1);
        for (m, c) in &self.terms {
            out.add_term(vec![m.iter().sum()], c.clone());
        }
        out
    }

    pub fn evaluate(&self, point: &[num_complex::Complex64]) -> num_complex::Complex64 {
        use num_traits::ToPrimitive;
        self.terms
            .iter()
            .map(|(m, c)| {
                let mut z = num_complex::Complex64::new(c.to_f64().unwrap_or(f64::NAN), 0.0);
                for (x, &e) in point.iter().zip(m) {
                    z *= x.powi(e as i32);
                }
                z
            })
            .sum()
    }

    pub fn monomial_list(&self) -> Vec<MonomialTerm> {
        self.terms
            .iter()
            .map(|(m, c)| MonomialTerm { coefficient: c.to_string(), exponents: m.clone() })
            .collect()
    }

    fn var_name(&self, i: usize) -> String {
        if self.nvars == 1 {
            "t".to_string()
        } else {
            format!("t{}", i + 1)
        }
    }
}

impl fmt::Display for LaurentPoly {
    /// Highest monomial first, e.g. `t1^7*t2^3 + t1^5*t2^2 - 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let mut mono = Vec::new();
            for (v, &e) in m.iter().enumerate() {
                match e {
                    0 => {}
                    1 => mono.push(self.var_name(v)),
                    _ => mono.push(format!("{}^{e}", self.var_name(v))),
                }
            }
            let abs = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{abs}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
