use thiserror::Error;

use crate::derivations::Definition;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },

    #[error("left Leibniz identity fails on {count} basis triple(s), first at (e{}, e{}, e{})", .first.0 + 1, .first.1 + 1, .first.2 + 1)]
    NotLeibniz {
        count: usize,
        first: (usize, usize, usize),
    },

    #[error("structure tensor is not a Lie algebra (bracket is not antisymmetric)")]
    NotLie,

    #[error("module axiom X.(Y.v) - Y.(X.v) = [X,Y].v fails for basis pair (e{}, e{})", .0 + 1, .1 + 1)]
    InvalidModule(usize, usize),

    #[error("subspace is not an ideal")]
    NotIdeal,

    #[error("algebra is not complete in the sense of {0}")]
    NotComplete(Definition),

    #[error("bilinear map is not a biderivation")]
    NotBiderivation,

    #[error("{0}")]
    Catalog(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_dim(context: &'static str, expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            context,
            expected,
            found,
        })
    }
}
