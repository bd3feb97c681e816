use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt::Write;

use num_complex::Complex64;

use crate::group::AbelianizedGroup;

/// Element of the integral group ring of `H_1`. Monomials are coordinate
/// vectors of the abelianization (free part, then torsion residues), always
/// normalised, so equal elements compare equal.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement {
    terms: BTreeMap<Vec<i64>, i64>,
}

fn add_coeff(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("group ring coefficient overflow")
}

fn mul_coeff(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("group ring coefficient overflow")
}

impl GroupAlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `c * x^m` for an already normalised monomial `m`.
    pub fn term(c: i64, m: Vec<i64>) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn one(ab: &AbelianizedGroup) -> Self {
        Self::term(1, vec![0; ab.coordinate_count()])
    }

    /// The image of generator `g`.
    pub fn generator(ab: &AbelianizedGroup, g: usize) -> Self {
        Self::term(1, ab.image(g).to_vec())
    }

    pub fn monomial(ab: &AbelianizedGroup, exps: &[i64]) -> Self {
        Self::term(1, ab.image_of_exponents(exps))
    }

    fn add_term(&mut self, m: Vec<i64>, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = add_coeff(*slot.get(), c);
                if sum == 0 {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], i64)> {
        self.terms.iter().map(|(m, &c)| (m.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(-1)
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        GroupAlgebraElement { terms: self.terms.iter().map(|(m, &c)| (m.clone(), mul_coeff(c, k))).collect() }
    }

    /// Multiplication by the monomial with coordinates `m`.
    pub fn shift(&self, m: &[i64], ab: &AbelianizedGroup) -> Self {
        let mut out = Self::zero();
        for (k, &c) in &self.terms {
            let mut v: Vec<i64> = k.iter().zip(m).map(|(a, b)| a + b).collect();
            ab.normalize(&mut v);
            out.add_term(v, c);
        }
        out
    }

    pub fn mul(&self, other: &Self, ab: &AbelianizedGroup) -> Self {
        let mut out = Self::zero();
        for (m1, &c1) in &self.terms {
            for (m2, &c2) in &other.terms {
                let mut v: Vec<i64> = m1.iter().zip(m2).map(|(a, b)| a + b).collect();
                ab.normalize(&mut v);
                out.add_term(v, mul_coeff(c1, c2));
            }
        }
        out
    }

    /// Value at the point whose coordinates are `coords`.
    pub fn evaluate(&self, coords: &[Complex64]) -> Complex64 {
        self.terms
            .iter()
            .map(|(m, &c)| {
                let mut z = Complex64::new(c as f64, 0.0);
                for (x, &e) in coords.iter().zip(m) {
                    if e != 0 {
                        z *= x.powi(e as i32);
                    }
                }
                z
            })
            .sum()
    }

    /// Sum of coefficients (value at the trivial character).
    pub fn augmentation(&self) -> i64 {
        self.terms.values().fold(0, |a, &c| add_coeff(a, c))
    }

    /// `c*t1^2*t2^-1 + ...` with coordinates named by `names`.
    pub fn display(&self, names: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, &c)) in self.terms.iter().enumerate() {
            let mut mono = String::new();
            for (name, &e) in names.iter().zip(m) {
                match e {
                    0 => {}
                    1 => write!(mono, "*{name}").unwrap(),
                    _ => write!(mono, "*{name}^{e}").unwrap(),
                }
            }
            let sign = if c < 0 { "-" } else { "+" };
            if i == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                write!(out, " {sign} ").unwrap();
            }
            let a = c.unsigned_abs();
            if mono.is_empty() {
                write!(out, "{a}").unwrap();
            } else if a == 1 {
                out.push_str(&mono[1..]);
            } else {
                write!(out, "{a}{mono}").unwrap();
            }
        }
        out
    }
}

/// Coordinate names: `t1..tk` for the free part, `u1..` for torsion.
pub fn coordinate_names(ab: &AbelianizedGroup) -> Vec<String> {
    (1..=ab.rank()).map(|i| format!("t{i}")).chain((1..=ab.torsion().len()).map(|i| format!("u{i}"))).collect()
}

/// `d(x^n)/dx = (x^n - 1)/(x - 1)` expanded, with `x` the monomial `m`.
pub fn geometric(m: &[i64], n: i64, ab: &AbelianizedGroup) -> GroupAlgebraElement {
    let mut out = GroupAlgebraElement::zero();
    let range: Box<dyn Iterator<Item = i64>> = if n >= 0 { Box::new(0..n) } else { Box::new(n..0) };
    let sign = if n >= 0 { 1 } else { -1 };
    for k in range {
        let mut v: Vec<i64> = m.iter().map(|x| x * k).collect();
        ab.normalize(&mut v);
        out.add_term(v, sign);
    }
    out
}
