use super::{Presentation, Relator, RelatorKind, Word};

/// Picks the next elimination: relators by increasing length (ties by
/// position), and inside a relator the lowest-index generator occurring once.
/// Returns `(generator, relator index, word the generator equals)`.
fn next_move(relators: &[Relator], generators: usize) -> Option<(usize, usize, Word)> {
    let mut by_length: Vec<usize> = (0..relators.len()).collect();
    by_length.sort_by_key(|&i| (relators[i].word.len(), i));
    let (idx, g) = by_length
        .into_iter()
        .find_map(|i| (0..generators).find(|&g| relators[i].word.occurrences(g) == 1).map(|g| (i, g)))?;
    let syl = relators[idx].word.syllables();
    let pos = syl.iter().position(|&(h, _)| h == g).unwrap();
    let e = syl[pos].1;
    let u = Word::new(syl[..pos].iter().copied());
    let v = Word::new(syl[pos + 1..].iter().copied());
    // u g^e v = 1
    let solution = if e == 1 { u.inverse().concat(&v.inverse()) } else { v.concat(&u) };
    Some((g, idx, solution))
}

/// Eliminates generators that occur exactly once in some relator until none
/// is left, shortest relator first. Trivial relators are dropped.
pub fn tietze_eliminate(p: &Presentation) -> Presentation {
    let mut generators = p.generators().to_vec();
    let mut names = p.names().to_vec();
    let mut relators: Vec<Relator> = p.relators().to_vec();
    relators.retain(|r| !r.word.is_identity());

    while let Some((g, idx, solution)) = next_move(&relators, generators.len()) {
        relators.remove(idx);
        for r in relators.iter_mut() {
            if r.word.occurrences(g) > 0 {
                r.word = r.word.substitute(g, &solution);
                r.kind = RelatorKind::Derived;
            }
        }
        relators.retain(|r| !r.word.is_identity());

        let map: Vec<Option<usize>> =
            (0..generators.len()).map(|h| if h == g { None } else if h < g { Some(h) } else { Some(h - 1) }).collect();
        generators.remove(g);
        names.remove(g);
        for r in relators.iter_mut() {
            r.word = r.word.renumber(&map);
        }
    }
    Presentation::new(generators, names, relators)
}


#[cfg(test)]
mod graph_tests {
    use super::*;
    use crate::graph::{choose_tree_and_orders, parse_graph};
    use crate::group::{abelianize, presentation};

    fn reduced(text: &str) -> (Presentation, Presentation) {
        let g = parse_graph(text).unwrap();
        let p = presentation(&choose_tree_and_orders(&g, None).unwrap());
        let q = tietze_eliminate(&p);
        (p, q)
    }

    #[test]
    fn two_branch_reduces_to_commutator_of_squares() {
        let (p, q) = reduced(include_str!("../../tests/fixtures/two_branch.pg"));
        assert_eq!(q.names(), &["gv1".to_string(), "gv3".to_string()]);
        assert_eq!(q.relator_count(), 1);
        let target = Word::commutator(&Word::power(0, 2), &Word::power(1, 2));
        let w = &q.relators()[0].word;
        assert!(w.cyclically_equal(&target) || w.cyclically_equal(&target.inverse()));
        let (a, b) = (abelianize(&p), abelianize(&q));
        assert_eq!((a.rank(), a.torsion()), (2, &[][..]));
        assert_eq!((b.rank(), b.torsion()), (2, &[][..]));
    }

    #[test]
    fn closed_reduces_to_two_relators() {
        let (_, q) = reduced(include_str!("../../tests/fixtures/closed.pg"));
        assert_eq!(q.names(), &["gv1".to_string(), "ge1".to_string()]);
        // gamma = gv1, delta = ge1
        let expected = Presentation::from_strings(
            &["gv1", "ge1"],
            &["ge1 gv1 ge1^-1 gv1 ge1 gv1^-1 ge1^-1 gv1^-1", "ge1^-1 gv1 ge1 ge1 gv1 ge1^-1 gv1^-3"],
        )
        .unwrap();
        for e in expected.relators() {
            assert!(q
                .relators()
                .iter()
                .any(|r| r.word.cyclically_equal(&e.word) || r.word.cyclically_equal(&e.word.inverse())));
        }
    }
}
