//! Fox calculus over the group ring of `H_1`.

mod algebra;
mod blocks;

use std::fmt::Write;
use std::ops::Range;

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

pub use algebra::{coordinate_names, geometric, GroupAlgebraElement};
pub use blocks::fox_matrix_blocks;

use crate::charvar::Character;
use crate::group::{abelianize, AbelianizedGroup, Generator, Presentation, RelatorKind, Word};

#[derive(Debug, Error, PartialEq)]
pub enum FoxError {
    #[error("generator {0} is not in the presentation")]
    UnknownGenerator(usize),
    #[error("character does not match the matrix: {0}")]
    CharacterMismatch(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowTag {
    pub kind: RelatorKind,
    pub source: Option<usize>,
}

/// Named rectangular region of a block Fox matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub name: &'static str,
    pub rows: Range<usize>,
    pub cols: Range<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FoxMatrix {
    pub rows: Vec<RowTag>,
    pub cols: Vec<Generator>,
    pub entries: Vec<Vec<GroupAlgebraElement>>,
    pub blocks: Vec<Block>,
    ab: AbelianizedGroup,
}

/// Free derivative of `w` with respect to generator `x`, read off letter by letter.
pub fn fox_derivative(w: &Word, x: usize, ab: &AbelianizedGroup) -> Result<GroupAlgebraElement, FoxError> {
    if x >= ab.generator_count() {
        return Err(FoxError::UnknownGenerator(x));
    }
    if let Some(g) = w.generators().find(|&g| g >= ab.generator_count()) {
        return Err(FoxError::UnknownGenerator(g));
    }
    let mut out = GroupAlgebraElement::zero();
    let mut prefix = vec![0i64; ab.coordinate_count()];
    let step = |prefix: &mut Vec<i64>, g: usize, sign: i64| {
        for (p, c) in prefix.iter_mut().zip(ab.image(g)) {
            *p += sign * c;
        }
        ab.normalize(prefix);
    };
    for (g, sign) in w.letters() {
        if sign > 0 {
            if g == x {
                out = out.add(&GroupAlgebraElement::term(1, prefix.clone()));
            }
            step(&mut prefix, g, 1);
        } else {
            step(&mut prefix, g, -1);
            if g == x {
                // d(x^-1) = -x^-1, and the prefix now already ends in x^-1
                out = out.add(&GroupAlgebraElement::term(-1, prefix.clone()));
            }
        }
    }
    Ok(out)
}

/// Entrywise Fox derivatives of all relators of `p`.
pub fn fox_matrix_generic(p: &Presentation) -> FoxMatrix {
    fox_matrix_generic_with(p, abelianize(p))
}

/// As [`fox_matrix_generic`], with monomials written in the coordinates of `ab`
/// (which must be the abelianization of the same group on the same generators).
pub fn fox_matrix_generic_with(p: &Presentation, ab: AbelianizedGroup) -> FoxMatrix {
    let m = p.generator_count();
    let entries = p
        .relators()
        .iter()
        .map(|r| (0..m).map(|x| fox_derivative(&r.word, x, &ab).expect("relator generators are in range")).collect())
        .collect();
    FoxMatrix {
        rows: p.relators().iter().map(|r| RowTag { kind: r.kind, source: r.source }).collect(),
        cols: p.generators().to_vec(),
        entries,
        blocks: Vec::new(),
        ab,
    }
}

impl FoxMatrix {
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn abelianization(&self) -> &AbelianizedGroup {
        &self.ab
    }

    pub fn entry(&self, i: usize, j: usize) -> &GroupAlgebraElement {
        &self.entries[i][j]
    }

    pub fn block(&self, name: &str) -> Option<&Block> {
        self.blocks.iter().find(|b| b.name == name)
    }

    /// Evaluation at the point with chart coordinates `coords`.
    pub fn evaluate_at(&self, coords: &[Complex64]) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.nrows(), self.ncols(), |i, j| self.entries[i][j].evaluate(coords))
    }

    /// Text dump: one line per row, block boundaries as comment lines.
    pub fn dump(&self, generator_names: &[String]) -> String {
        let names = coordinate_names(&self.ab);
        let mut out = String::new();
        writeln!(out, "# columns: {}", generator_names.join(" ")).unwrap();
        for (i, row) in self.entries.iter().enumerate() {
            for b in self.blocks.iter().filter(|b| b.rows.start == i && b.cols.start == 0) {
                writeln!(out, "# rows {}..{} ({})", b.rows.start, b.rows.end, self.row_block_names(b.rows.start)).unwrap();
            }
            let cells: Vec<String> = row.iter().map(|e| e.display(&names)).collect();
            writeln!(out, "{}: {}", self.rows[i].kind.tag(), cells.join(" | ")).unwrap();
        }
        out
    }

    fn row_block_names(&self, start: usize) -> String {
        let names: Vec<&str> = self.blocks.iter().filter(|b| b.rows.start == start).map(|b| b.name).collect();
        names.join(", ")
    }
}

/// `F` evaluated at `xi`. The character must be defined on the same
/// abelianization and agree with it on every generator.
pub fn evaluate(f: &FoxMatrix, xi: &Character) -> Result<DMatrix<Complex64>, FoxError> {
    let coords = xi.coordinates();
    if coords.len() != f.ab.coordinate_count() {
        return Err(FoxError::CharacterMismatch(format!(
            "{} coordinates given, {} expected",
            coords.len(),
            f.ab.coordinate_count()
        )));
    }
    for (g, value) in xi.generator_values().iter().enumerate().take(f.ncols()) {
        let expected = GroupAlgebraElement::generator(&f.ab, g).evaluate(coords);
        if (expected - value).norm() > 1e-9 * (1.0 + value.norm()) {
            return Err(FoxError::CharacterMismatch(format!("generator {g} has an inconsistent value")));
        }
    }
    Ok(f.evaluate_at(coords))
}
