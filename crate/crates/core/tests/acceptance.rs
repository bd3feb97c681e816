//! End-to-end checks, one line per criterion. Every criterion runs even if an
//! earlier one fails; the test fails at the end if any did.

mod common;

use num_complex::Complex64;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use plumbing::alexander::{acampo_single, en_multivariable, expand, LaurentPoly};
use plumbing::charvar::{
    b_epsilon_check, dim_h1, dim_h1_matrix, sample_stratum, Character, CharacterTorus, CoordValue,
};
use plumbing::cover::{cyclic_cover, edge_preimage_count, vertex_data, Adjacency};
use plumbing::fox::{fox_derivative, fox_matrix_blocks, fox_matrix_generic, fox_matrix_generic_with, GroupAlgebraElement};
use plumbing::graph::{choose_tree_and_orders, solve_multiplicities, PlumbingGraph};
use plumbing::group::{
    abelianize, determinant, presentation, smith_normal_form, tietze_eliminate, IntMatrix, Presentation, Word,
};
use plumbing::qp::{classify, divisors, Verdict};

use common::{fixture, one_branching_fixtures, random_genus_graph, random_graph, rng, two_cluster_fixtures};

const TOL: f64 = 1e-8;

// written to the process stdout directly so the lines survive test capture
macro_rules! report {
    ($($arg:tt)*) => {{
        use std::io::Write;
        writeln!(std::io::stdout().lock(), $($arg)*).unwrap();
    }};
}

type Check = Result<(), String>;
type Named = (&'static str, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Check {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn pres(g: &PlumbingGraph) -> Presentation {
    presentation(&choose_tree_and_orders(g, None).unwrap())
}

fn two_branch_multiplicities() -> Check {
    let g = fixture("two_branch.pg");
    let mt = solve_multiplicities(&g).map_err(|e| e.to_string())?;
    // vertices along the chain: v1 - v2 - v4 - v3
    let chain: Vec<usize> = ["v1", "v2", "v4", "v3"].iter().map(|id| g.vertex_index(id).unwrap()).collect();
    let col = |b: usize| -> Vec<u64> { chain.iter().map(|&v| mt.per_branch[b][v]).collect() };
    ensure(col(0) == vec![2, 4, 10, 5], || format!("branch 1 column {:?}", col(0)))?;
    ensure(col(1) == vec![1, 2, 4, 2], || format!("branch 2 column {:?}", col(1)))?;
    ensure(mt.lcm_of_totals() == 42, || format!("lcm {}", mt.lcm_of_totals()))
}

/// Sign-normalized, lowest monomial shifted to the origin; the same unit
/// normalization as the library, done by hand on coefficient lists.
fn normalize_terms(mut terms: Vec<(i64, Vec<i64>)>) -> Vec<(i64, Vec<i64>)> {
    terms.sort_by(|a, b| a.1.cmp(&b.1));
    let n = terms[0].1.len();
    let lo: Vec<i64> = (0..n).map(|i| terms.iter().map(|t| t.1[i]).min().unwrap()).collect();
    let sign = if terms[0].0 < 0 { -1 } else { 1 };
    let mut out: Vec<(i64, Vec<i64>)> =
        terms.into_iter().map(|(c, m)| (sign * c, m.iter().zip(&lo).map(|(a, b)| a - b).collect())).collect();
    out.sort_by(|a, b| a.1.cmp(&b.1));
    out
}

fn terms_of(p: &LaurentPoly) -> Vec<(i64, Vec<i64>)> {
    p.terms().map(|(m, c)| (i64::try_from(c).unwrap(), m.to_vec())).collect()
}

fn alexander_polynomials() -> Check {
    let g = fixture("two_branch.pg");
    let mt = solve_multiplicities(&g).map_err(|e| e.to_string())?;
    let multi = expand(&en_multivariable(&g, &mt).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    // (t1^2 t2 + 1)(t1^5 t2^2 + 1), multiplied out by hand
    let expected = normalize_terms(vec![(1, vec![7, 3]), (1, vec![5, 2]), (1, vec![2, 1]), (1, vec![0, 0])]);
    ensure(normalize_terms(terms_of(&multi)) == expected, || format!("multi-variable: {multi}"))?;
    let single = expand(&acampo_single(&g, &mt).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
    // (t^3 + 1)(t^7 + 1)(t - 1) = t^11 - t^10 + t^8 - t^7 + t^4 - t^3 + t - 1
    let expected = normalize_terms(
        [(1, 11), (-1, 10), (1, 8), (-1, 7), (1, 4), (-1, 3), (1, 1), (-1, 0)].iter().map(|&(c, e)| (c, vec![e])).collect(),
    );
    ensure(normalize_terms(terms_of(&single)) == expected, || format!("single-variable: {single}"))
}

fn two_generator_presentation() -> Check {
    let g = fixture("two_branch.pg");
    let p = pres(&g);
    let q = tietze_eliminate(&p);
    ensure(q.generator_count() == 2 && q.relator_count() == 1, || {
        format!("{} generators, {} relators", q.generator_count(), q.relator_count())
    })?;
    let (a, b) = (Word::power(0, 2), Word::power(1, 2));
    let comm = Word::commutator(&a, &b);
    let r = &q.relators()[0].word;
    ensure(r.cyclically_equal(&comm) || r.cyclically_equal(&comm.inverse()), || {
        format!("relator {}", r.display(q.names()))
    })?;
    for (label, x) in [("original", &p), ("simplified", &q)] {
        let ab = abelianize(x);
        ensure(ab.rank() == 2 && ab.torsion().is_empty(), || {
            format!("{label}: H1 rank {} torsion {:?}", ab.rank(), ab.torsion())
        })?;
    }
    Ok(())
}

fn closed_manifold_jump_loci() -> Check {
    let g = fixture("closed.pg");
    let p = pres(&g);
    let ab = abelianize(&p);
    ensure(ab.rank() == 1 && ab.torsion().is_empty(), || format!("H1 rank {} torsion {:?}", ab.rank(), ab.torsion()))?;
    let f = fox_matrix_generic(&p);
    let dim_at = |t: Complex64| -> Result<(usize, bool), String> {
        let xi = Character::from_chart(&ab, &[t], &[]).map_err(|e| e.to_string())?;
        let h = dim_h1_matrix(&f, &xi, TOL).map_err(|e| e.to_string())?;
        Ok((h.dim, h.unstable))
    };
    let roots = [(3.0 + 5f64.sqrt()) / 2.0, (3.0 - 5f64.sqrt()) / 2.0];
    for r in roots {
        let (d, unstable) = dim_at(c(r))?;
        ensure(d == 1 && !unstable, || format!("dim {d} at root {r} (unstable {unstable})"))?;
    }
    let torus = CharacterTorus::standard(&ab);
    let generic = sample_stratum(&p, &torus, &[], 0, 20, 4, TOL).map_err(|e| e.to_string())?;
    ensure(generic.dims().iter().all(|&d| d == 0) && !generic.any_unstable(), || {
        format!("generic dims {:?}", generic.dims())
    })?;
    // 2000 points: the two roots, 900 around them at log-spaced distances
    // 1e-6 .. 1, and 1098 on a polar grid over 0.1 <= |t| <= 10 with angles
    // off the real axis
    let mut grid: Vec<Complex64> = roots.iter().map(|&r| c(r)).collect();
    for r in roots {
        for i in 0..18 {
            let dist = 10f64.powf(-6.0 + 6.0 * i as f64 / 17.0);
            for j in 0..25 {
                grid.push(c(r) + Complex64::from_polar(dist, std::f64::consts::TAU * (j as f64 + 0.5) / 25.0));
            }
        }
    }
    for i in 0..61 {
        let modulus = 10f64.powf(-1.0 + 2.0 * i as f64 / 60.0);
        for j in 0..18 {
            grid.push(Complex64::from_polar(modulus, std::f64::consts::TAU * (j as f64 + 0.5) / 18.0));
        }
    }
    ensure(grid.len() == 2000, || format!("grid has {} points", grid.len()))?;
    let mut hits = Vec::new();
    let mut unstable_points = 0;
    for t in &grid {
        let (d, unstable) = dim_at(*t)?;
        unstable_points += usize::from(unstable);
        if d >= 1 {
            hits.push(*t);
        }
    }
    report!("  scan: {} dim >= 1 points, {unstable_points} flagged unstable", hits.len());
    let only_roots = hits.len() == 2 && roots.iter().all(|&r| hits.contains(&c(r)));
    ensure(only_roots, || format!("dim >= 1 at {:?}", &hits[..hits.len().min(5)]))
}

fn six_fold_cover() -> Check {
    let g = fixture("two_branch.pg");
    let mt = solve_multiplicities(&g).map_err(|e| e.to_string())?;
    let cov = cyclic_cover(&g, &mt, 6).map_err(|e| e.to_string())?;
    let genera = cov.genera();
    ensure(cov.vertices.len() == 6, || format!("{} vertices", cov.vertices.len()))?;
    ensure(genera.iter().filter(|&&x| x == 1).count() == 1 && genera.iter().all(|&x| x <= 1), || {
        format!("genera {genera:?}")
    })?;
    ensure(cov.edges.len() == 6, || format!("{} edges", cov.edges.len()))?;
    ensure(cov.b1 == 1, || format!("b1 = {}", cov.b1))?;
    ensure(cov.arrows.len() == 2, || format!("{} arrows", cov.arrows.len()))?;
    ensure(cov.obstruction().fires, || "obstruction does not fire".into())
}

/// Genus of a connected cyclic cover of the sphere by counting the cycles of
/// `x -> x + a` on Z/N over each branch point.
fn genus_by_cycles(n: u64, a: &[u64]) -> u64 {
    let mut preimages = 0i64;
    for &ai in a {
        let mut seen = vec![false; n as usize];
        for s in 0..n as usize {
            if !seen[s] {
                preimages += 1;
                let mut x = s;
                while !seen[x] {
                    seen[x] = true;
                    x = (x + ai as usize) % n as usize;
                }
            }
        }
    }
    let chi = n as i64 * (2 - a.len() as i64) + preimages;
    ((2 - chi) / 2) as u64
}

fn full_cover() -> Check {
    let g = fixture("two_branch.pg");
    let mt = solve_multiplicities(&g).map_err(|e| e.to_string())?;
    let cov = cyclic_cover(&g, &mt, 42).map_err(|e| e.to_string())?;
    let mut positive: Vec<u64> = cov.vertices.iter().map(|v| v.genus).filter(|&x| x > 0).collect();
    positive.sort();
    let oracle = (genus_by_cycles(6, &[3, 2, 1]), genus_by_cycles(14, &[6, 7, 1]));
    ensure(oracle == (1, 3), || format!("oracle {oracle:?}"))?;
    ensure(positive == vec![1, 3], || format!("positive genera {positive:?}"))?;
    ensure(cov.obstruction().fires, || "obstruction does not fire".into())
}

fn eight_vertex_strata() -> Check {
    let g = fixture("doubled_chain.pg");
    let p = pres(&g);
    let ab = abelianize(&p);
    ensure(ab.rank() == 4 && ab.torsion() == [2], || format!("rank {} torsion {:?}", ab.rank(), ab.torsion()))?;
    let torus = CharacterTorus::standard(&ab);
    // the printed vertex labels: t4^4, t4^6, t4^5, t5 t4^4
    let expected_images = [[0, 0, 0, 4, 0], [0, 0, 0, 6, 0], [0, 0, 0, 5, 0], [0, 0, 0, 4, 1]];
    for (id, img) in ["v1", "v2", "v3", "v4"].iter().zip(expected_images) {
        let v = g.vertex_index(id).unwrap();
        let col = p.index_of(&plumbing::group::Generator::Vertex(v)).unwrap();
        ensure(ab.image(col) == img, || format!("image of {id}: {:?}", ab.image(col)))?;
    }
    let fix = |pairs: &[(&str, CoordValue)]| -> Vec<(String, CoordValue)> {
        pairs.iter().map(|(n, v)| (n.replace("t5", "u1"), *v)).collect()
    };
    let one = CoordValue::Complex(c(1.0));
    let minus_one = CoordValue::Zeta(1, 2);
    let s = CoordValue::Complex(c((7.0 + 3.0 * 5f64.sqrt()) / 2.0));
    let a = sample_stratum(&p, &torus, &fix(&[("t4", one), ("t5", minus_one), ("t3", s)]), 3, 10, 11, TOL)
        .map_err(|e| e.to_string())?;
    ensure(a.dims() == vec![3; 10] && !a.any_unstable(), || format!("translated component dims {:?}", a.dims()))?;
    let b = sample_stratum(&p, &torus, &fix(&[("t4", one), ("t5", CoordValue::Zeta(0, 2))]), 3, 10, 12, TOL)
        .map_err(|e| e.to_string())?;
    ensure(b.dims() == vec![3; 10] && !b.any_unstable(), || format!("subtorus dims {:?}", b.dims()))?;
    let point = fix(&[
        ("t4", one),
        ("t5", CoordValue::Zeta(0, 2)),
        ("t1", CoordValue::Complex(c(-1.0))),
        ("t3", CoordValue::Complex(c(2.0))),
        ("t2", CoordValue::Complex(c(2.0 + 3f64.sqrt()))),
    ]);
    let d = sample_stratum(&p, &torus, &point, 4, 1, 13, TOL).map_err(|e| e.to_string())?;
    ensure(d.dims() == vec![4] && !d.any_unstable(), || format!("curve point dim {:?}", d.dims()))
}

fn block_equivalence() -> Check {
    let mut r = rng(801);
    for i in 0..50 {
        let g = random_graph(&mut r);
        let og = choose_tree_and_orders(&g, None).map_err(|e| e.to_string())?;
        let p = presentation(&og);
        let ab = abelianize(&p);
        let blocks = fox_matrix_blocks(&og, &ab);
        let generic = fox_matrix_generic_with(&p.with_all_relators(), ab);
        ensure(blocks.rows == generic.rows, || format!("graph {i}: row tags differ"))?;
        for row in 0..blocks.nrows() {
            for col in 0..blocks.ncols() {
                ensure(blocks.entry(row, col) == generic.entry(row, col), || format!("graph {i}: entry ({row}, {col})"))?;
            }
        }
    }
    Ok(())
}

fn corank_theorems() -> Check {
    let mut r = rng(802);
    for i in 0..25 {
        let g = random_genus_graph(&mut r);
        let report = b_epsilon_check(&g, 3, 900 + i, TOL).map_err(|e| format!("graph {i}: {e}"))?;
        ensure(report.all_match(), || {
            let bad = report.checks.iter().find(|c| c.dim != c.expected).unwrap();
            format!("graph {i}: {} trial {} dim {} expected {}", bad.set, bad.trial, bad.dim, bad.expected)
        })?;
    }
    Ok(())
}

fn tietze_invariance() -> Check {
    let mut graphs: Vec<PlumbingGraph> =
        ["two_branch.pg", "closed.pg", "doubled_chain.pg", "trefoil.pg", "cusp_pair.pg", "hopf.pg"].iter().map(|n| fixture(n)).collect();
    graphs.extend(two_cluster_fixtures(3));
    let mut r = rng(803);
    for (i, g) in graphs.iter().enumerate() {
        let p = pres(g);
        let q = tietze_eliminate(&p);
        let ab_p = abelianize(&p);
        let ab_q = abelianize(&q);
        let torus = CharacterTorus::standard(&ab_p);
        let sample = sample_stratum(&p, &torus, &[], 0, 4, r.gen(), TOL).map_err(|e| e.to_string())?;
        for (xi, h) in &sample.samples {
            let values: Vec<Complex64> = q
                .names()
                .iter()
                .map(|n| xi.generator_values()[p.index_of_name(n).expect("kept generator")])
                .collect();
            let xq = Character::from_generator_values(&ab_q, &values).map_err(|e| format!("graph {i}: {e}"))?;
            let hq = dim_h1(&q, &xq, TOL).map_err(|e| e.to_string())?;
            ensure(hq.dim == h.dim, || format!("graph {i}: dim {} before, {} after", h.dim, hq.dim))?;
        }
        let hp = dim_h1(&p, &Character::trivial(&ab_p), TOL).map_err(|e| e.to_string())?;
        let hq = dim_h1(&q, &Character::trivial(&ab_q), TOL).map_err(|e| e.to_string())?;
        ensure(hp.dim == hq.dim, || format!("graph {i}: trivial character {} vs {}", hp.dim, hq.dim))?;
    }
    Ok(())
}

fn fundamental_identity() -> Check {
    let mut r = rng(804);
    for i in 0..30 {
        let g = random_graph(&mut r);
        let p = pres(&g).with_all_relators();
        let ab = abelianize(&p);
        let one = GroupAlgebraElement::one(&ab);
        for (k, rel) in p.relators().iter().enumerate() {
            let mut sum = GroupAlgebraElement::zero();
            for x in 0..p.generator_count() {
                let d = fox_derivative(&rel.word, x, &ab).map_err(|e| e.to_string())?;
                sum = sum.add(&d.mul(&GroupAlgebraElement::generator(&ab, x).sub(&one), &ab));
            }
            ensure(sum.is_zero(), || format!("graph {i} relator {k}: {}", sum.display(&plumbing::fox::coordinate_names(&ab))))?;
        }
    }
    Ok(())
}

fn edge_symmetry() -> Check {
    let mut graphs = vec![fixture("two_branch.pg"), fixture("trefoil.pg"), fixture("cusp_pair.pg")];
    graphs.extend(two_cluster_fixtures(10));
    for (i, g) in graphs.iter().enumerate() {
        let mt = solve_multiplicities(g).map_err(|e| e.to_string())?;
        let totals = mt.totals();
        let mut degrees: Vec<u64> = divisors(mt.lcm_of_totals());
        degrees.extend(2..=12);
        for n in degrees.into_iter().filter(|&n| n >= 2) {
            let data = vertex_data(g, &mt, n).map_err(|e| e.to_string())?;
            for d in &data {
                ensure(d.components * d.degree == d.n_v, || format!("graph {i} n {n}: c * N != n_v"))?;
                for (slot, adj) in d.adjacent.iter().enumerate() {
                    if let Adjacency::Edge(e) = *adj {
                        let edge = g.edges()[e];
                        let w = edge.other(d.vertex);
                        let other = &data[w];
                        let back = other.adjacent.iter().position(|x| *x == Adjacency::Edge(e)).unwrap();
                        let expected = edge_preimage_count(n, totals[d.vertex], totals[w]);
                        ensure(d.preimages_at(slot) == expected && other.preimages_at(back) == expected, || {
                            format!("graph {i} n {n} edge {e}: {} / {} / {expected}", d.preimages_at(slot), other.preimages_at(back))
                        })?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn star_covers() -> Check {
    let mut graphs = vec![fixture("trefoil.pg"), fixture("cusp_pair.pg"), fixture("hopf.pg")];
    graphs.extend(one_branching_fixtures(10));
    for (i, g) in graphs.iter().enumerate() {
        let mt = solve_multiplicities(g).map_err(|e| e.to_string())?;
        let mut degrees = divisors(mt.lcm_of_totals());
        degrees.extend(2..=12);
        for n in degrees.into_iter().filter(|&n| n >= 2) {
            let cov = cyclic_cover(g, &mt, n).map_err(|e| e.to_string())?;
            let positive = cov.vertices.iter().filter(|v| v.genus > 0).count();
            ensure(cov.b1 == 0 && positive <= 1 && !cov.obstruction().fires, || {
                format!("graph {i} n {n}: b1 {} positive-genus vertices {positive}", cov.b1)
            })?;
        }
    }
    Ok(())
}

fn smith_unimodular() -> Check {
    let mut r = rng(805);
    for i in 0..40 {
        let rows = r.gen_range(1..=5);
        let cols = r.gen_range(1..=5);
        let m: Vec<Vec<i64>> = (0..rows).map(|_| (0..cols).map(|_| r.gen_range(-6..=6)).collect()).collect();
        let a = IntMatrix::from_rows_with_cols(&m, cols);
        let s = smith_normal_form(&a);
        ensure(s.p.mul(&a).mul(&s.q) == s.d(), || format!("matrix {i}: p a q != d"))?;
        ensure(determinant(&s.p).abs().is_one() && determinant(&s.q).abs().is_one(), || format!("matrix {i}: not unimodular"))?;
        for w in s.diagonal.windows(2) {
            ensure(w[1].is_zero() || (!w[0].is_zero() && (&w[1] % &w[0]).is_zero()), || {
                format!("matrix {i}: diagonal {:?}", s.diagonal)
            })?;
        }
        ensure(s.diagonal.iter().all(|d| !d.is_negative()), || format!("matrix {i}: negative invariant factor"))?;
    }
    Ok(())
}

fn property_suite() -> Check {
    let parts: [Named; 7] = [
        ("block/generic Fox", block_equivalence),
        ("corank theorems", corank_theorems),
        ("Tietze invariance", tietze_invariance),
        ("fundamental identity", fundamental_identity),
        ("edge symmetry", edge_symmetry),
        ("star covers", star_covers),
        ("Smith unimodularity", smith_unimodular),
    ];
    let failures: Vec<String> =
        parts.iter().filter_map(|(name, f)| f().err().map(|e| format!("{name}: {e}"))).collect();
    ensure(failures.is_empty(), || failures.join("; "))
}

fn qp_verdicts() -> Check {
    let mut quasi: Vec<(String, PlumbingGraph)> =
        ["unknot.pg", "hopf.pg", "trefoil.pg", "cusp_pair.pg"].iter().map(|n| (n.to_string(), fixture(n))).collect();
    quasi.extend(one_branching_fixtures(10).into_iter().enumerate().map(|(i, g)| (format!("one-branching {i}"), g)));
    for (name, g) in &quasi {
        let r = classify(g).map_err(|e| format!("{name}: {e}"))?;
        ensure(r.verdict == Verdict::QuasiProjective, || format!("{name}: {:?}", r.verdict))?;
    }
    let mut not: Vec<(String, PlumbingGraph)> = vec![("two_branch".into(), fixture("two_branch.pg"))];
    not.extend(two_cluster_fixtures(10).into_iter().enumerate().map(|(i, g)| (format!("two-cluster {i}"), g)));
    for (name, g) in &not {
        let r = classify(g).map_err(|e| format!("{name}: {e}"))?;
        let e = r.e.unwrap_or(0);
        let w = r.witness.as_ref().ok_or_else(|| format!("{name}: {:?} without witness", r.verdict))?;
        ensure(r.verdict == Verdict::NotQuasiProjective && e % w.n == 0, || format!("{name}: {:?} n {} e {e}", r.verdict, w.n))?;
        let mt = solve_multiplicities(g).unwrap();
        let cov = cyclic_cover(g, &mt, w.n).unwrap();
        ensure(cov.obstruction().fires, || format!("{name}: witness cover does not fire"))?;
    }
    Ok(())
}

#[test]
fn acceptance() {
    let criteria: [Named; 9] = [
        ("two-branch multiplicities and lcm", two_branch_multiplicities),
        ("Alexander polynomials", alexander_polynomials),
        ("two-generator presentation", two_generator_presentation),
        ("closed manifold jump loci", closed_manifold_jump_loci),
        ("6-fold cover", six_fold_cover),
        ("42-fold cover", full_cover),
        ("eight-vertex strata", eight_vertex_strata),
        ("property suite", property_suite),
        ("quasi-projectivity verdicts", qp_verdicts),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        match f() {
            Ok(()) => report!("criterion {}: PASS  {name}", i + 1),
            Err(e) => {
                failed += 1;
                report!("criterion {}: FAIL  {name}: {e}", i + 1);
            }
        }
    }
    assert_eq!(failed, 0, "{failed} criteria failed");
}
