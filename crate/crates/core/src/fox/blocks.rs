//! Closed-form Fox matrix of a plumbing presentation, assembled from the
//! graph without differentiating words.
//!
//! Rows: vertex relators (vertex order), one commutator per arrowhead
//! (all of them, arrowhead order), one per extra edge, two per genus pair.
//! Columns follow the generators of [`presentation`](crate::group::presentation).

use super::{geometric, Block, FoxMatrix, GroupAlgebraElement, RowTag};
use crate::graph::OrderedGraph;
use crate::group::{presentation, AbelianizedGroup, Generator, RelatorKind};

pub fn fox_matrix_blocks(og: &OrderedGraph, ab: &AbelianizedGroup) -> FoxMatrix {
    let g = og.base();
    let p = presentation(og);
    let cols = p.generators().to_vec();
    let m = cols.len();
    let k = ab.coordinate_count();
    let col_of = |gen: &Generator| p.index_of(gen).expect("generator present");

    let t = |gen: &Generator| -> Vec<i64> { ab.image(col_of(gen)).to_vec() };
    let mono = |v: Vec<i64>| GroupAlgebraElement::term(1, v);
    let one = GroupAlgebraElement::one(ab);
    let mul = |a: &[i64], b: &[i64]| -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
        ab.normalize(&mut v);
        v
    };
    let inv = |a: &[i64]| -> Vec<i64> {
        let mut v: Vec<i64> = a.iter().map(|x| -x).collect();
        ab.normalize(&mut v);
        v
    };
    // t_{e->} from v: 1 on tree edges, t_e or t_e^-1 on extra edges
    let t_edge_from = |e: usize, v: usize| -> Vec<i64> {
        if og.in_tree(e) {
            vec![0; k]
        } else {
            let te = t(&Generator::Edge(e));
            if og.oriented(e).0 == v {
                te
            } else {
                inv(&te)
            }
        }
    };

    let mut rows: Vec<RowTag> = Vec::new();
    let mut entries: Vec<Vec<GroupAlgebraElement>> = Vec::new();
    let zero_row = || vec![GroupAlgebraElement::zero(); m];

    let n_vertices = og.vertex_order().len();
    let n_arrows = og.arrow_order().len();
    let n_extra = og.extra_edges().len();
    let n_vertex_cols = n_vertices;
    let arrow_cols = n_vertex_cols..n_vertex_cols + n_arrows;
    let edge_cols = arrow_cols.end..arrow_cols.end + n_extra;
    let genus_cols = edge_cols.end..m;

    // vertex rows
    for &v in og.vertex_order() {
        let mut row = zero_row();
        let tv = t(&Generator::Vertex(v));
        let euler = g.vertices()[v].euler;
        // diagonal: (1 - t_v^-eps)/(t_v - 1) = t_v^-eps (t_v^eps - 1)/(t_v - 1)
        let shift: Vec<i64> = tv.iter().map(|x| -x * euler).collect();
        row[col_of(&Generator::Vertex(v))] = geometric(&tv, euler, ab).shift(&shift, ab);

        let mut prefix = vec![0i64; k];
        for &e in og.edges_at(v) {
            let w = g.edges()[e].other(v);
            let te = t_edge_from(e, v);
            let cw = col_of(&Generator::Vertex(w));
            row[cw] = row[cw].add(&mono(mul(&prefix, &te)));
            if !og.in_tree(e) {
                let tw = t(&Generator::Vertex(w));
                let ce = col_of(&Generator::Edge(e));
                let entry = if og.oriented(e).0 == v {
                    // T (1 - t_w)
                    mono(prefix.clone()).sub(&mono(mul(&prefix, &tw)))
                } else {
                    // T t_e^-1 (t_w - 1)
                    mono(mul(&mul(&prefix, &te), &tw)).sub(&mono(mul(&prefix, &te)))
                };
                row[ce] = row[ce].add(&entry);
            }
            prefix = mul(&prefix, &t(&Generator::Vertex(w)));
        }
        for &h in og.arrows_at(v) {
            row[col_of(&Generator::Arrow(h))] = mono(prefix.clone());
            prefix = mul(&prefix, &t(&Generator::Arrow(h)));
        }
        for j in 1..=g.vertices()[v].genus {
            let a = Generator::Alpha { vertex: v, j };
            let b = Generator::Beta { vertex: v, j };
            row[col_of(&a)] = mono(t(&b)).sub(&one);
            row[col_of(&b)] = one.sub(&mono(t(&a)));
        }
        rows.push(RowTag { kind: RelatorKind::Vertex, source: Some(v) });
        entries.push(row);
    }

    // arrowhead rows: [gamma_v, gamma_h]
    for &h in og.arrow_order() {
        let v = g.arrows()[h].vertex;
        let mut row = zero_row();
        let gh = Generator::Arrow(h);
        let gv = Generator::Vertex(v);
        row[col_of(&gv)] = one.sub(&mono(t(&gh)));
        row[col_of(&gh)] = mono(t(&gv)).sub(&one);
        rows.push(RowTag { kind: RelatorKind::Arrow, source: Some(h) });
        entries.push(row);
    }

    // extra-edge rows: [gamma_v1, gamma_e gamma_v2 gamma_e^-1]
    for &e in og.extra_edges() {
        let (v1, v2) = og.oriented(e);
        let mut row = zero_row();
        let t1 = t(&Generator::Vertex(v1));
        let t2 = t(&Generator::Vertex(v2));
        let te = t(&Generator::Edge(e));
        let one_minus_t2 = one.sub(&mono(t2.clone()));
        let t1_minus_one = mono(t1.clone()).sub(&one);
        row[col_of(&Generator::Vertex(v1))] = one_minus_t2.clone();
        row[col_of(&Generator::Vertex(v2))] = t1_minus_one.shift(&te, ab);
        row[col_of(&Generator::Edge(e))] = t1_minus_one.mul(&one_minus_t2, ab);
        rows.push(RowTag { kind: RelatorKind::Edge, source: Some(e) });
        entries.push(row);
    }

    // genus rows: [gamma_v, alpha], [gamma_v, beta]
    for &v in og.vertex_order() {
        let gv = Generator::Vertex(v);
        for j in 1..=g.vertices()[v].genus {
            for x in [Generator::Alpha { vertex: v, j }, Generator::Beta { vertex: v, j }] {
                let mut row = zero_row();
                row[col_of(&gv)] = one.sub(&mono(t(&x)));
                row[col_of(&x)] = mono(t(&gv)).sub(&one);
                rows.push(RowTag { kind: RelatorKind::Genus, source: Some(v) });
                entries.push(row);
            }
        }
    }

    let vr = 0..n_vertices;
    let ar = vr.end..vr.end + n_arrows;
    let er = ar.end..ar.end + n_extra;
    let gr = er.end..rows.len();
    let vc = 0..n_vertex_cols;
    let mut blocks = vec![
        Block { name: "A", rows: vr.clone(), cols: vc.clone() },
        Block { name: "B", rows: vr.clone(), cols: arrow_cols.clone() },
        Block { name: "C", rows: vr.clone(), cols: edge_cols.clone() },
        Block { name: "A_g", rows: vr, cols: genus_cols.clone() },
        Block { name: "B~", rows: ar.clone(), cols: vc.clone() },
        Block { name: "H", rows: ar, cols: arrow_cols },
        Block { name: "C~", rows: er.clone(), cols: vc.clone() },
        Block { name: "E", rows: er, cols: edge_cols },
        Block { name: "A~_g", rows: gr.clone(), cols: vc },
        Block { name: "G", rows: gr, cols: genus_cols },
    ];
    blocks.retain(|b| !b.rows.is_empty() && !b.cols.is_empty());

    FoxMatrix { rows, cols, entries, blocks, ab: ab.clone() }
}
