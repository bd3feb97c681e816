use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::{dim_h1_matrix, CharacterTorus, CharvarError, ChartValue, CoordKind, CoordValue, H1Dim};
use crate::charvar::Character;
use crate::fox::fox_matrix_generic_with;
use crate::graph::{choose_tree_and_orders, is_negative_definite, PlumbingGraph};
use crate::group::{abelianize, presentation, Generator, Presentation};

/// A random nonzero complex number with modulus in `[0.5, 2]` and uniform angle.
pub fn random_unit_scale<R: Rng>(rng: &mut R) -> Complex64 {
    Complex64::from_polar(rng.gen_range(0.5..=2.0), rng.gen_range(0.0..TAU))
}

/// Like [`random_unit_scale`], with the log-modulus shrunk by `degree` so that
/// monomials of total degree up to `degree` keep modulus in `[0.5, 2]`.
pub fn random_scaled<R: Rng>(rng: &mut R, degree: u64) -> Complex64 {
    let s = std::f64::consts::LN_2 / degree.max(1) as f64;
    Complex64::from_polar(rng.gen_range(-s..=s).exp(), rng.gen_range(0.0..TAU))
}

#[derive(Clone, Debug)]
pub struct StratumSample {
    pub target: usize,
    pub constraints: Vec<String>,
    pub samples: Vec<(Character, H1Dim)>,
}

impl StratumSample {
    pub fn dims(&self) -> Vec<usize> {
        self.samples.iter().map(|(_, h)| h.dim).collect()
    }

    /// Every sample lies in `V_k` or deeper.
    pub fn all_at_least(&self, k: usize) -> bool {
        self.samples.iter().all(|(_, h)| h.dim >= k)
    }

    pub fn any_unstable(&self) -> bool {
        self.samples.iter().any(|(_, h)| h.unstable)
    }
}

/// Draws `count` characters with the given coordinates fixed and the others
/// random (free ones scaled so each generator value has modulus in `[0.5, 2]`,
/// torsion ones uniform), and records `dim H^1` at each. `p` must have the torus's abelianization.
pub fn sample_stratum(
    p: &Presentation,
    torus: &CharacterTorus,
    constraints: &[(String, CoordValue)],
    k: usize,
    count: usize,
    seed: u64,
    tol: f64,
) -> Result<StratumSample, CharvarError> {
    let n = torus.names().len();
    let mut fixed: Vec<Option<ChartValue>> = vec![None; n];
    for (name, v) in constraints {
        let i = torus.index_of(name).ok_or_else(|| super::CharacterError::UnknownCoordinate(name.clone()))?;
        fixed[i] = Some(torus.chart_value(i, *v)?);
    }
    let degree = torus.generator_degree();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut characters = Vec::with_capacity(count);
    for _ in 0..count {
        let values: Vec<ChartValue> = (0..n)
            .map(|i| match (fixed[i], torus.kinds()[i]) {
                (Some(v), _) => v,
                (None, CoordKind::Free) => ChartValue::Free(random_scaled(&mut rng, degree)),
                (None, CoordKind::Torsion(d)) => ChartValue::Root(rng.gen_range(0..d), d),
            })
            .collect();
        characters.push(torus.character(&values)?);
    }
    let f = fox_matrix_generic_with(p, torus.abelianization().clone());
    let dims: Vec<H1Dim> =
        characters.par_iter().map(|xi| dim_h1_matrix(&f, xi, tol)).collect::<Result<Vec<_>, _>>()?;
    Ok(StratumSample {
        target: k,
        constraints: constraints.iter().map(|(name, v)| format!("{name}={v:?}")).collect(),
        samples: characters.into_iter().zip(dims).collect(),
    })
}

/// Which set of characters a closed-form corank applies to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorankMode {
    /// Vertex, arrow and cycle coordinates trivial; genus coordinates free.
    B1,
    /// As `B1`, with the genus coordinates of vertex `w` also trivial.
    BEpsW(usize),
}

fn ensure_negative_definite(g: &PlumbingGraph) -> Result<(), CharvarError> {
    if let Some(d) = g.validate().first() {
        return Err(CharvarError::Graph(d.to_string()));
    }
    if !is_negative_definite(&g.incidence().a).unwrap_or(false) {
        return Err(CharvarError::NotNegativeDefinite);
    }
    Ok(())
}

/// Corank of the Fox matrix on the given set of characters.
pub fn corank_closed_form(g: &PlumbingGraph, mode: CorankMode) -> Result<usize, CharvarError> {
    ensure_negative_definite(g)?;
    let b1 = g.first_betti();
    let r = g.arrows().len();
    let excess = |genus: u32| (2 * genus as usize).saturating_sub(1);
    let sum: usize = match mode {
        CorankMode::B1 => g.vertices().iter().map(|v| excess(v.genus)).sum(),
        CorankMode::BEpsW(w) => g
            .vertices()
            .iter()
            .enumerate()
            .map(|(i, v)| if i == w { 2 * v.genus as usize } else { excess(v.genus) })
            .sum(),
    };
    Ok(sum + b1 + r)
}

#[derive(Clone, Debug, Serialize)]
pub struct BCheck {
    /// `B1` or `B_eps,<vertex id>`.
    pub set: String,
    pub trial: usize,
    pub trivial: bool,
    pub dim: usize,
    pub expected: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct BEpsilonReport {
    pub checks: Vec<BCheck>,
}

impl BEpsilonReport {
    pub fn all_match(&self) -> bool {
        self.checks.iter().all(|c| c.dim == c.expected)
    }
}

/// Samples characters in `B1` and in `B_eps,w` (at `t_e = 1`) for every
/// positive-genus vertex `w`, and compares `dim H^1` with the closed-form
/// corank: `crk - 1` off the trivial character, `crk` at it.
pub fn b_epsilon_check(g: &PlumbingGraph, trials: usize, seed: u64, tol: f64) -> Result<BEpsilonReport, CharvarError> {
    ensure_negative_definite(g)?;
    let og = choose_tree_and_orders(g, None)?;
    let p = presentation(&og);
    let ab = abelianize(&p);
    let f = fox_matrix_generic_with(&p, ab.clone());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut checks = Vec::new();

    let mut sets: Vec<(String, CorankMode)> = vec![("B1".to_string(), CorankMode::B1)];
    for (w, v) in g.vertices().iter().enumerate() {
        if v.genus > 0 {
            sets.push((format!("B_eps,{}", v.id), CorankMode::BEpsW(w)));
        }
    }
    for (label, mode) in sets {
        let crk = corank_closed_form(g, mode)?;
        for trial in 0..trials {
            let values: Vec<Complex64> = p
                .generators()
                .iter()
                .map(|gen| match (gen, mode) {
                    (Generator::Alpha { vertex, .. } | Generator::Beta { vertex, .. }, CorankMode::BEpsW(w))
                        if *vertex == w =>
                    {
                        Complex64::new(1.0, 0.0)
                    }
                    (Generator::Alpha { .. } | Generator::Beta { .. }, _) => random_unit_scale(&mut rng),
                    _ => Complex64::new(1.0, 0.0),
                })
                .collect();
            let xi = Character::from_generator_values(&ab, &values)?;
            let h = dim_h1_matrix(&f, &xi, tol)?;
            if h.unstable {
                return Err(CharvarError::Unstable(format!("{label} trial {trial}")));
            }
            let trivial = xi.is_trivial();
            let expected = if trivial { crk } else { crk - 1 };
            checks.push(BCheck { set: label.clone(), trial, trivial, dim: h.dim, expected });
        }
    }
    Ok(BEpsilonReport { checks })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub fires: bool,
    pub positive_genus_vertices: usize,
    pub b1: usize,
    pub arrows: usize,
    /// The strata `V_k`, `V_{k+1}` whose intersection pattern is obstructed.
    pub k: i64,
}

/// The obstruction from the genus/cycle shape alone: it fires when at least
/// two vertices have positive genus, or one does and the graph has a cycle.
pub fn cornqp_obstruction_shape(genera: &[u32], b1: usize, arrows: usize) -> Obstruction {
    let positive = genera.iter().filter(|&&g| g > 0).count();
    let excess: i64 = genera.iter().map(|&g| (2 * g as i64 - 1).max(0)).sum();
    let k = excess + b1 as i64 + arrows as i64 - 1;
    let hypothesis = positive >= 2 || (positive >= 1 && b1 > 0);
    Obstruction { fires: hypothesis && k > 0, positive_genus_vertices: positive, b1, arrows, k }
}

pub fn cornqp_obstruction(g: &PlumbingGraph) -> Obstruction {
    let genera: Vec<u32> = g.vertices().iter().map(|v| v.genus).collect();
    cornqp_obstruction_shape(&genera, g.first_betti(), g.arrows().len())
}
