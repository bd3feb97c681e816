use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::Presentation;
use crate::linalg::{reverse_column_echelon, smith_normal_form, unimodular_inverse, IntMatrix};

/// `H_1 = Z^rank + Z/d_1 + ... ` together with the image of every generator.
///
/// Coordinates are ordered free first, then torsion. The free basis is
/// normalised so that, reading generators from the last one backwards, each
/// new independent image becomes a unit vector whenever that is possible.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianizedGroup {
    rank: usize,
    torsion: Vec<u64>,
    /// Per generator: free coordinates, then torsion residues in `[0, d_i)`.
    images: Vec<Vec<i64>>,
    /// Per coordinate: an exponent vector over the generators whose image is
    /// that basis vector.
    coordinate_words: Vec<Vec<i64>>,
    relation_matrix: IntMatrix,
    p: IntMatrix,
    q: IntMatrix,
}

fn small(x: &BigInt) -> i64 {
    x.to_i64().expect("abelianization entry exceeds i64")
}

pub fn abelianize(pres: &Presentation) -> AbelianizedGroup {
    let m = pres.generator_count();
    let rows: Vec<Vec<i64>> = pres.relators().iter().map(|r| r.word.exponent_vector(m)).collect();
    let rel = IntMatrix::from_rows_with_cols(&rows, m);
    let smith = smith_normal_form(&rel);
    let q_inv = unimodular_inverse(&smith.q).expect("Smith transform is unimodular");

    // coordinate i of the Smith basis is free when d_i = 0 or i is past the diagonal
    let diag = |i: usize| -> BigInt { smith.diagonal.get(i).cloned().unwrap_or_else(BigInt::zero) };
    let mut free = Vec::new();
    let mut torsion_idx = Vec::new();
    for i in 0..m {
        let d = diag(i);
        if d.is_zero() {
            free.push(i);
        } else if d > BigInt::from(1) {
            torsion_idx.push(i);
        }
    }
    let torsion: Vec<u64> = torsion_idx.iter().map(|&i| diag(i).to_u64().expect("torsion order fits u64")).collect();

    // free images F (m x k), then canonicalise F -> F U
    let mut f = IntMatrix::zeros(m, free.len());
    for j in 0..m {
        for (c, &i) in free.iter().enumerate() {
            f[(j, c)] = smith.q[(j, i)].clone();
        }
    }
    let (h, u) = reverse_column_echelon(&f);
    let u_inv = unimodular_inverse(&u).expect("echelon transform is unimodular");

    let mut images = Vec::with_capacity(m);
    for j in 0..m {
        let mut v: Vec<i64> = (0..free.len()).map(|c| small(&h[(j, c)])).collect();
        for (t, &i) in torsion_idx.iter().enumerate() {
            let d = BigInt::from(torsion[t]);
            v.push(small(&smith.q[(j, i)].mod_floor(&d)));
        }
        images.push(v);
    }

    let mut coordinate_words = Vec::new();
    for c in 0..free.len() {
        let mut w = vec![BigInt::zero(); m];
        for (c2, &i) in free.iter().enumerate() {
            let coeff = &u_inv[(c, c2)];
            if coeff.is_zero() {
                continue;
            }
            for (g, wg) in w.iter_mut().enumerate() {
                *wg += coeff * &q_inv[(i, g)];
            }
        }
        coordinate_words.push(w.iter().map(small).collect());
    }
    for &i in &torsion_idx {
        coordinate_words.push((0..m).map(|g| small(&q_inv[(i, g)])).collect());
    }

    AbelianizedGroup {
        rank: free.len(),
        torsion,
        images,
        coordinate_words,
        relation_matrix: rel,
        p: smith.p,
        q: smith.q,
    }
}

impl AbelianizedGroup {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Invariant factors `d_i >= 2`, each dividing the next.
    pub fn torsion(&self) -> &[u64] {
        &self.torsion
    }

    pub fn generator_count(&self) -> usize {
        self.images.len()
    }

    /// Number of coordinates: rank plus number of torsion factors.
    pub fn coordinate_count(&self) -> usize {
        self.rank + self.torsion.len()
    }

    pub fn image(&self, g: usize) -> &[i64] {
        &self.images[g]
    }

    pub fn images(&self) -> &[Vec<i64>] {
        &self.images
    }

    pub fn coordinate_words(&self) -> &[Vec<i64>] {
        &self.coordinate_words
    }

    pub fn relation_matrix(&self) -> &IntMatrix {
        &self.relation_matrix
    }

    /// Smith transforms: `p * relation_matrix * q` is diagonal.
    pub fn transforms(&self) -> (&IntMatrix, &IntMatrix) {
        (&self.p, &self.q)
    }

    /// Reduces a coordinate vector: torsion entries taken mod their order.
    pub fn normalize(&self, v: &mut [i64]) {
        for (t, &d) in self.torsion.iter().enumerate() {
            v[self.rank + t] = v[self.rank + t].rem_euclid(d as i64);
        }
    }

    /// Image of an exponent vector over the generators.
    pub fn image_of_exponents(&self, exps: &[i64]) -> Vec<i64> {
        let mut v = vec![0i64; self.coordinate_count()];
        for (g, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            for (c, x) in self.images[g].iter().enumerate() {
                v[c] += e * x;
            }
        }
        self.normalize(&mut v);
        v
    }

    pub fn is_trivial_image(&self, g: usize) -> bool {
        self.images[g].iter().all(|&x| x == 0)
    }
}
