//! Group presentations of plumbed manifolds, Tietze moves and abelianization.

mod abelian;
mod presentation;
mod tietze;
mod word;

pub use abelian::{abelianize, AbelianizedGroup};
pub use presentation::{presentation, Generator, Presentation, PresentationError, Relator, RelatorKind};
pub use tietze::tietze_eliminate;
pub use word::{Word, WordDisplay};

pub use crate::linalg::{determinant, smith_normal_form, IntMatrix, Smith};
