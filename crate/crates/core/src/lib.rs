pub mod binary;
pub mod corpus;
pub mod error;
pub mod flats;
pub mod fixtures;
pub mod gf2;
pub mod io;
pub mod iso;
pub mod matroid;
pub mod minors;
pub mod oracle;
pub mod subset;
pub mod zlattice;

pub use error::{Error, ParseError, Result};
pub use gf2::{parse_matrix, BinaryMatrix, Codeword};
pub use matroid::{Matroid, MatroidParams};
pub use subset::SubsetMask;
pub use zlattice::{build_zlattice, CyclicFlatPresentation, EdgeLabel, ZElement, ZLattice};
