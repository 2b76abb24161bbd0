//! Named binary matrices used throughout the examples and tests.

use serde::{Serialize, Serializer};

use crate::gf2::{parse_matrix, BinaryMatrix};
use crate::matroid::Matroid;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fixture {
    /// Six elements whose lattice has a rank edge and a nullity edge.
    Example1,
    /// The binary `(6,3,3)` matroid.
    Code633,
    /// `RM(1,3)`, the binary `(8,4,4)` matroid.
    ReedMuller844,
    /// A simple binary `(11,4,5)` matroid meeting the Griesmer bound.
    Code1145,
    /// The simplex code, `(7,3,4)`.
    Simplex734,
    /// The Hamming code, `(7,4,3)`.
    Hamming743,
    /// Dual of the cycle matroid of `K5`, `(10,6,3)`.
    DualK5,
}

impl Fixture {
    pub const ALL: [Fixture; 7] = [
        Fixture::Example1,
        Fixture::Code633,
        Fixture::ReedMuller844,
        Fixture::Code1145,
        Fixture::Simplex734,
        Fixture::Hamming743,
        Fixture::DualK5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Fixture::Example1 => "example1",
            Fixture::Code633 => "code_6_3_3",
            Fixture::ReedMuller844 => "reed_muller_8_4_4",
            Fixture::Code1145 => "code_11_4_5",
            Fixture::Simplex734 => "simplex_7_3_4",
            Fixture::Hamming743 => "hamming_7_4_3",
            Fixture::DualK5 => "dual_k5_10_6_3",
        }
    }

    pub fn from_name(name: &str) -> Option<Fixture> {
        Fixture::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn text(self) -> &'static str {
        match self {
            Fixture::Example1 => include_str!("../fixtures/example1.txt"),
            Fixture::Code633 => include_str!("../fixtures/code_6_3_3.txt"),
            Fixture::ReedMuller844 => include_str!("../fixtures/reed_muller_8_4_4.txt"),
            Fixture::Code1145 => include_str!("../fixtures/code_11_4_5.txt"),
            Fixture::Simplex734 => include_str!("../fixtures/simplex_7_3_4.txt"),
            Fixture::Hamming743 => include_str!("../fixtures/hamming_7_4_3.txt"),
            Fixture::DualK5 => include_str!("../fixtures/dual_k5_10_6_3.txt"),
        }
    }

    pub fn matrix(self) -> BinaryMatrix {
        parse_matrix(self.text()).expect("bundled fixture parses")
    }

    pub fn matroid(self) -> Matroid {
        Matroid::from_matrix(self.matrix())
    }
}

impl Serialize for Fixture {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}
