use std::f64::consts::TAU;

use num_complex::Complex64;
use num_integer::Integer;
use num_rational::Ratio;
use thiserror::Error;

use crate::group::{AbelianizedGroup, Presentation};
use crate::linalg::{unimodular_inverse, IntMatrix};

#[derive(Debug, Error, PartialEq)]
pub enum CharacterError {
    #[error("expected {expected} values, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("generator values do not satisfy the relations ({0})")]
    Inconsistent(String),
    #[error("unknown coordinate `{0}`")]
    UnknownCoordinate(String),
    #[error("coordinate `{name}`: {message}")]
    BadValue { name: String, message: String },
    #[error("chart is not a basis of H_1: {0}")]
    BadChart(String),
}

/// A value for one chart coordinate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum CoordValue {
    Complex(Complex64),
    /// `exp(2 pi i p / q)`.
    Zeta(i64, i64),
}

impl CoordValue {
    pub fn to_complex(self) -> Complex64 {
        match self {
            CoordValue::Complex(z) => z,
            CoordValue::Zeta(p, q) => Complex64::from_polar(1.0, TAU * p as f64 / q as f64),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoordKind {
    Free,
    /// Takes values in the roots of unity of this order.
    Torsion(u64),
}

/// Coordinates on the character torus. A chart coordinate is the value of a
/// character on a fixed element of `H_1`, given as an exponent vector over
/// the generators. The standard chart uses the Smith basis of the
/// abelianization; named charts use any other basis.
#[derive(Clone, Debug, PartialEq)]
pub struct CharacterTorus {
    ab: AbelianizedGroup,
    names: Vec<String>,
    kinds: Vec<CoordKind>,
    words: Vec<Vec<i64>>,
    /// `psi[j]`: standard coordinate `j` as an integer combination of chart coordinates.
    psi: Vec<Vec<i64>>,
}

pub fn character_torus(ab: &AbelianizedGroup) -> CharacterTorus {
    CharacterTorus::standard(ab)
}

fn ratio_frac(r: Ratio<i64>) -> Ratio<i64> {
    r - r.floor()
}

impl CharacterTorus {
    pub fn standard(ab: &AbelianizedGroup) -> Self {
        let k = ab.rank();
        let n = ab.coordinate_count();
        let mut names: Vec<String> = (1..=k).map(|i| format!("t{i}")).collect();
        names.extend((1..=ab.torsion().len()).map(|i| format!("u{i}")));
        let mut kinds = vec![CoordKind::Free; k];
        kinds.extend(ab.torsion().iter().map(|&d| CoordKind::Torsion(d)));
        let psi = (0..n).map(|j| (0..n).map(|i| i64::from(i == j)).collect()).collect();
        CharacterTorus { ab: ab.clone(), names, kinds, words: ab.coordinate_words().to_vec(), psi }
    }

    /// A chart whose coordinates are the values on the given words
    /// (`name -> exponent vector`). There must be exactly `rank` words of
    /// infinite order, and together with the remaining (finite-order) words
    /// they must form a basis of `H_1`.
    pub fn with_chart(ab: &AbelianizedGroup, coords: &[(String, Vec<i64>)]) -> Result<Self, CharacterError> {
        let k = ab.rank();
        let n = ab.coordinate_count();
        let images: Vec<Vec<i64>> = coords.iter().map(|(_, w)| ab.image_of_exponents(w)).collect();
        let free_idx: Vec<usize> = (0..coords.len()).filter(|&i| images[i][..k].iter().any(|&x| x != 0)).collect();
        let tors_idx: Vec<usize> = (0..coords.len()).filter(|i| !free_idx.contains(i)).collect();
        if free_idx.len() != k {
            return Err(CharacterError::BadChart(format!("{} words of infinite order, rank is {k}", free_idx.len())));
        }
        let order_of = |img: &[i64]| -> u64 {
            ab.torsion().iter().enumerate().fold(1u64, |acc, (t, &d)| {
                let x = img[k + t].rem_euclid(d as i64) as u64;
                acc.lcm(&(d / d.gcd(&x)))
            })
        };
        let tors_orders: Vec<u64> = tors_idx.iter().map(|&i| order_of(&images[i])).collect();

        // free part: M (k x k), rows = free words
        let m = IntMatrix::from_rows(&free_idx.iter().map(|&i| images[i][..k].to_vec()).collect::<Vec<_>>());
        let m_inv = if k == 0 {
            IntMatrix::zeros(0, 0)
        } else {
            unimodular_inverse(&m).ok_or_else(|| CharacterError::BadChart("free words are not a basis".into()))?
        };

        // solve e_j = sum_i psi_ji phi_i
        let mut psi = vec![vec![0i64; coords.len()]; n];
        for (j, row) in psi.iter_mut().enumerate() {
            let mut residual: Vec<i64> = (0..n).map(|c| i64::from(c == j)).collect();
            for (a, &i) in free_idx.iter().enumerate() {
                let coeff: i64 = (0..k).map(|c| residual[c] * i64::try_from(&m_inv[(c, a)]).unwrap()).sum();
                row[i] = coeff;
                for c in 0..n {
                    residual[c] -= coeff * images[i][c];
                }
            }
            ab.normalize(&mut residual);
            // torsion words: brute force over their orders
            let mut choice = vec![0u64; tors_idx.len()];
            let found = loop {
                let mut v = residual.clone();
                for (a, &i) in tors_idx.iter().enumerate() {
                    for c in 0..n {
                        v[c] -= choice[a] as i64 * images[i][c];
                    }
                }
                ab.normalize(&mut v);
                if v.iter().all(|&x| x == 0) {
                    break true;
                }
                let mut pos = 0;
                loop {
                    if pos == choice.len() {
                        break;
                    }
                    choice[pos] += 1;
                    if choice[pos] < tors_orders[pos] {
                        break;
                    }
                    choice[pos] = 0;
                    pos += 1;
                }
                if pos == choice.len() {
                    break false;
                }
            };
            if !found {
                return Err(CharacterError::BadChart("words do not generate H_1".into()));
            }
            for (a, &i) in tors_idx.iter().enumerate() {
                row[i] = choice[a] as i64;
            }
        }
        let total: u64 = tors_orders.iter().product();
        let expected: u64 = ab.torsion().iter().product();
        if total != expected {
            return Err(CharacterError::BadChart("torsion words are not independent".into()));
        }

        let mut kinds = vec![CoordKind::Free; coords.len()];
        for (a, &i) in tors_idx.iter().enumerate() {
            kinds[i] = CoordKind::Torsion(tors_orders[a]);
        }
        Ok(CharacterTorus {
            ab: ab.clone(),
            names: coords.iter().map(|(s, _)| s.clone()).collect(),
            kinds,
            words: coords.iter().map(|(_, w)| w.clone()).collect(),
            psi,
        })
    }

    /// Chart from words written with the generator names of `p`, e.g.
    /// `("t4", "gv3 gv1^-1")`.
    pub fn with_named_chart(
        p: &Presentation,
        ab: &AbelianizedGroup,
        coords: &[(&str, &str)],
    ) -> Result<Self, CharacterError> {
        let m = p.generator_count();
        let mut parsed = Vec::new();
        for (name, text) in coords {
            let mut exps = vec![0i64; m];
            for tok in text.split_whitespace() {
                let (g, e) = match tok.split_once('^') {
                    Some((g, e)) => (
                        g,
                        e.parse::<i64>().map_err(|_| CharacterError::BadChart(format!("bad exponent in `{tok}`")))?,
                    ),
                    None => (tok, 1),
                };
                let idx = p.index_of_name(g).ok_or_else(|| CharacterError::BadChart(format!("unknown generator `{g}`")))?;
                exps[idx] += e;
            }
            parsed.push((name.to_string(), exps));
        }
        Self::with_chart(ab, &parsed)
    }

    pub fn abelianization(&self) -> &AbelianizedGroup {
        &self.ab
    }

    pub fn dimension(&self) -> usize {
        self.ab.rank()
    }

    pub fn torsion(&self) -> &[u64] {
        self.ab.torsion()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn kinds(&self) -> &[CoordKind] {
        &self.kinds
    }

    pub fn words(&self) -> &[Vec<i64>] {
        &self.words
    }

    /// Largest total exponent, over the generators, of the free chart
    /// coordinates in the value of a generator.
    pub fn generator_degree(&self) -> u64 {
        let k = self.ab.rank();
        self.ab
            .images()
            .iter()
            .map(|img| {
                (0..self.names.len())
                    .filter(|&i| self.kinds[i] == CoordKind::Free)
                    .map(|i| (0..k).map(|j| img[j] * self.psi[j][i]).sum::<i64>().unsigned_abs())
                    .sum::<u64>()
            })
            .max()
            .unwrap_or(0)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Builds the character with the given chart values. Torsion coordinates
    /// take the index `k` of `exp(2 pi i k / d)`.
    pub fn character(&self, values: &[ChartValue]) -> Result<Character, CharacterError> {
        if values.len() != self.names.len() {
            return Err(CharacterError::Arity { expected: self.names.len(), got: values.len() });
        }
        let k = self.ab.rank();
        let mut free = Vec::with_capacity(k);
        for j in 0..k {
            let mut z = Complex64::new(1.0, 0.0);
            for (i, &e) in self.psi[j].iter().enumerate() {
                if e != 0 {
                    z *= values[i].to_complex().powi(e as i32);
                }
            }
            free.push(z);
        }
        let mut torsion = Vec::new();
        for (t, &d) in self.ab.torsion().iter().enumerate() {
            let j = k + t;
            let mut turns = Ratio::from_integer(0i64);
            for (i, &e) in self.psi[j].iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match values[i] {
                    ChartValue::Root(idx, q) => turns += Ratio::new(e * idx as i64, q as i64),
                    ChartValue::Free(_) => {
                        return Err(CharacterError::BadChart("torsion coordinate depends on a free one".into()))
                    }
                }
            }
            let scaled = ratio_frac(turns) * Ratio::from_integer(d as i64);
            if !scaled.is_integer() {
                return Err(CharacterError::BadValue {
                    name: format!("u{}", t + 1),
                    message: "not a root of unity of the right order".into(),
                });
            }
            torsion.push(scaled.to_integer() as u64);
        }
        Ok(Character::from_standard(&self.ab, free, torsion))
    }

    /// Parses a coordinate value for coordinate `i`.
    pub fn chart_value(&self, i: usize, v: CoordValue) -> Result<ChartValue, CharacterError> {
        let name = self.names[i].clone();
        match (self.kinds[i], v) {
            (CoordKind::Free, v) => {
                let z = v.to_complex();
                if z.norm() == 0.0 || !z.is_finite() {
                    return Err(CharacterError::BadValue { name, message: "must be a nonzero number".into() });
                }
                Ok(ChartValue::Free(z))
            }
            (CoordKind::Torsion(d), CoordValue::Zeta(p, q)) => {
                let r = ratio_frac(Ratio::new(p, q)) * Ratio::from_integer(d as i64);
                if !r.is_integer() {
                    return Err(CharacterError::BadValue { name, message: format!("must be a {d}-th root of unity") });
                }
                Ok(ChartValue::Root(r.to_integer() as u64, d))
            }
            (CoordKind::Torsion(d), CoordValue::Complex(z)) => {
                let turns = z.arg() / TAU * d as f64;
                let idx = turns.round();
                if (z.norm() - 1.0).abs() > 1e-9 || (turns - idx).abs() > 1e-9 {
                    return Err(CharacterError::BadValue { name, message: format!("must be a {d}-th root of unity") });
                }
                Ok(ChartValue::Root(idx.rem_euclid(d as f64) as u64, d))
            }
        }
    }
}

/// A resolved chart value.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum ChartValue {
    Free(Complex64),
    /// `exp(2 pi i k / d)` as `(k, d)`.
    Root(u64, u64),
}

impl ChartValue {
    pub fn to_complex(self) -> Complex64 {
        match self {
            ChartValue::Free(z) => z,
            ChartValue::Root(k, d) => Complex64::from_polar(1.0, TAU * k as f64 / d as f64),
        }
    }
}

/// A point of the character torus: values on the generators, plus the
/// standard coordinates (free values and exact torsion indices).
#[derive(Clone, Debug, PartialEq)]
pub struct Character {
    generator_values: Vec<Complex64>,
    free: Vec<Complex64>,
    torsion: Vec<(u64, u64)>,
    coordinates: Vec<Complex64>,
}

impl Character {
    fn from_standard(ab: &AbelianizedGroup, free: Vec<Complex64>, torsion: Vec<u64>) -> Self {
        let torsion: Vec<(u64, u64)> = torsion.into_iter().zip(ab.torsion().iter().copied()).collect();
        let mut coordinates = free.clone();
        coordinates.extend(torsion.iter().map(|&(k, d)| ChartValue::Root(k, d).to_complex()));
        let k = ab.rank();
        let generator_values = ab
            .images()
            .iter()
            .map(|img| {
                let mut z = Complex64::new(1.0, 0.0);
                for (c, &e) in img[..k].iter().enumerate() {
                    if e != 0 {
                        z *= free[c].powi(e as i32);
                    }
                }
                let mut turns = Ratio::from_integer(0i64);
                for (t, &(_, d)) in torsion.iter().enumerate() {
                    turns += Ratio::new(img[k + t] * torsion[t].0 as i64, d as i64);
                }
                let turns = ratio_frac(turns);
                z * Complex64::from_polar(1.0, TAU * (*turns.numer() as f64) / (*turns.denom() as f64))
            })
            .collect();
        Character { generator_values, free, torsion, coordinates }
    }

    /// The character with standard coordinates `free` and torsion indices.
    pub fn from_chart(ab: &AbelianizedGroup, free: &[Complex64], torsion: &[u64]) -> Result<Self, CharacterError> {
        if free.len() != ab.rank() || torsion.len() != ab.torsion().len() {
            return Err(CharacterError::Arity {
                expected: ab.coordinate_count(),
                got: free.len() + torsion.len(),
            });
        }
        if free.iter().any(|z| z.norm() == 0.0 || !z.is_finite()) {
            return Err(CharacterError::BadValue { name: "free".into(), message: "must be nonzero".into() });
        }
        let torsion = torsion.iter().zip(ab.torsion()).map(|(&k, &d)| k % d).collect();
        Ok(Self::from_standard(ab, free.to_vec(), torsion))
    }

    pub fn trivial(ab: &AbelianizedGroup) -> Self {
        Self::from_standard(ab, vec![Complex64::new(1.0, 0.0); ab.rank()], vec![0; ab.torsion().len()])
    }

    /// Recovers the chart from values on every generator; the values must
    /// satisfy the abelianized relations to within `1e-9`.
    pub fn from_generator_values(ab: &AbelianizedGroup, values: &[Complex64]) -> Result<Self, CharacterError> {
        if values.len() != ab.generator_count() {
            return Err(CharacterError::Arity { expected: ab.generator_count(), got: values.len() });
        }
        if values.iter().any(|z| z.norm() == 0.0 || !z.is_finite()) {
            return Err(CharacterError::Inconsistent("zero or non-finite value".into()));
        }
        let eval_word = |w: &[i64]| -> Complex64 {
            let mut z = Complex64::new(1.0, 0.0);
            for (g, &e) in w.iter().enumerate() {
                if e != 0 {
                    z *= values[g].powi(e as i32);
                }
            }
            z
        };
        let k = ab.rank();
        let words = ab.coordinate_words();
        let free: Vec<Complex64> = words[..k].iter().map(|w| eval_word(w)).collect();
        let mut torsion = Vec::new();
        for (t, &d) in ab.torsion().iter().enumerate() {
            let z = eval_word(&words[k + t]);
            let turns = z.arg() / TAU * d as f64;
            let idx = turns.round();
            if (z.norm() - 1.0).abs() > 1e-9 || (turns - idx).abs() > 1e-9 {
                return Err(CharacterError::Inconsistent(format!("torsion coordinate {} is not a {d}-th root", t + 1)));
            }
            torsion.push(idx.rem_euclid(d as f64) as u64);
        }
        let xi = Self::from_standard(ab, free, torsion);
        for (g, (a, b)) in xi.generator_values.iter().zip(values).enumerate() {
            if (a - b).norm() > 1e-9 * (1.0 + b.norm()) {
                return Err(CharacterError::Inconsistent(format!("generator {g}")));
            }
        }
        Ok(xi)
    }

    pub fn generator_values(&self) -> &[Complex64] {
        &self.generator_values
    }

    /// Standard coordinates: free values, then torsion roots of unity.
    pub fn coordinates(&self) -> &[Complex64] {
        &self.coordinates
    }

    pub fn free_values(&self) -> &[Complex64] {
        &self.free
    }

    /// Torsion coordinates as `(k, d)` meaning `exp(2 pi i k / d)`.
    pub fn torsion_indices(&self) -> &[(u64, u64)] {
        &self.torsion
    }

    pub fn is_trivial(&self) -> bool {
        self.free.iter().all(|z| (z - Complex64::new(1.0, 0.0)).norm() < 1e-12) && self.torsion.iter().all(|t| t.0 == 0)
    }

    pub fn conjugate(&self) -> Self {
        Character {
            generator_values: self.generator_values.iter().map(|z| z.conj()).collect(),
            free: self.free.iter().map(|z| z.conj()).collect(),
            torsion: self.torsion.iter().map(|&(k, d)| ((d - k) % d, d)).collect(),
            coordinates: self.coordinates.iter().map(|z| z.conj()).collect(),
        }
    }
}
