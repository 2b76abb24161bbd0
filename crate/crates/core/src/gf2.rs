//! Linear algebra over GF(2) on bit masks.
//!
//! A [`BinaryMatrix`] stores its rows as `n`-bit masks. Column `j` (1-based in
//! text, 0-based in masks) is bit `j - 1` of every row.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, ParseError, Result};
use crate::subset::{SubsetMask, MAX_GROUND_SET};

/// Largest row-space dimension [`BinaryMatrix::enumerate_codewords`] will expand.
pub const MAX_CODEWORD_RANK: usize = 24;

/// A `k x n` matrix over GF(2), one mask per row.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryMatrix {
    n: usize,
    rows: Vec<u64>,
    // Column vectors expressed in coordinates of a reduced row basis.
    columns: Vec<u64>,
    row_rank: usize,
}

/// A word of the row space. Over GF(2) the support is the value.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword {
    pub mask: SubsetMask,
    pub weight: usize,
}

impl Codeword {
    fn new(bits: u64) -> Self {
        Codeword {
            mask: SubsetMask::from_bits(bits),
            weight: bits.count_ones() as usize,
        }
    }
}

/// Inserts `v` into an XOR basis indexed by leading bit. Returns whether `v`
/// was independent of the basis.
#[inline]
fn insert(basis: &mut [u64; 64], mut v: u64) -> bool {
    while v != 0 {
        let top = 63 - v.leading_zeros() as usize;
        if basis[top] == 0 {
            basis[top] = v;
            return true;
        }
        v ^= basis[top];
    }
    false
}

/// GF(2) rank of a list of vectors.
pub fn rank_of_vectors<I: IntoIterator<Item = u64>>(vectors: I) -> usize {
    let mut basis = [0u64; 64];
    vectors.into_iter().filter(|&v| insert(&mut basis, v)).count()
}

impl BinaryMatrix {
    /// Builds a matrix from row masks over `n` columns.
    pub fn new(n: usize, rows: Vec<u64>) -> Result<Self> {
        if rows.is_empty() {
            return Err(ParseError::Empty.into());
        }
        if n == 0 {
            return Err(ParseError::Malformed {
                line: 1,
                message: "matrix has no columns".into(),
            }
            .into());
        }
        if n > MAX_GROUND_SET {
            return Err(ParseError::TooManyColumns { columns: n }.into());
        }
        let full = SubsetMask::full(n).bits();
        if let Some(r) = rows.iter().find(|&&r| r & !full != 0) {
            return Err(Error::OutOfGroundSet {
                set: SubsetMask::from_bits(*r),
                n,
            });
        }

        let mut basis = [0u64; 64];
        for &r in &rows {
            insert(&mut basis, r);
        }
        let reduced: Vec<u64> = basis.iter().copied().filter(|&b| b != 0).collect();
        let columns = (0..n)
            .map(|j| {
                reduced
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (i, r)| acc | (((r >> j) & 1) << i))
            })
            .collect();
        Ok(BinaryMatrix {
            n,
            row_rank: reduced.len(),
            rows,
            columns,
        })
    }

    /// Builds a matrix whose columns are the given vectors (bit `i` is row `i`).
    pub fn from_columns(k: usize, columns: &[u64]) -> Result<Self> {
        let rows = (0..k)
            .map(|i| {
                columns
                    .iter()
                    .enumerate()
                    .fold(0u64, |acc, (j, c)| acc | (((c >> i) & 1) << j))
            })
            .collect();
        BinaryMatrix::new(columns.len(), rows)
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_cols(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// Dimension of the row space.
    pub fn rank(&self) -> usize {
        self.row_rank
    }

    /// Column `j` (0-based) in reduced coordinates.
    pub fn column(&self, j: usize) -> u64 {
        self.columns[j]
    }

    /// GF(2) rank of the columns indexed by `x`.
    pub fn rank_of_columns(&self, x: SubsetMask) -> Result<usize> {
        if !x.is_subset(SubsetMask::full(self.n)) {
            return Err(Error::OutOfGroundSet { set: x, n: self.n });
        }
        Ok(self.rank_of_columns_unchecked(x))
    }

    pub(crate) fn rank_of_columns_unchecked(&self, x: SubsetMask) -> usize {
        let mut basis = [0u64; 64];
        let mut r = 0;
        for j in x.iter() {
            if insert(&mut basis, self.columns[j]) {
                r += 1;
                if r == self.row_rank {
                    break;
                }
            }
        }
        r
    }

    /// Every word of the row space, ordered by `(weight, mask)`.
    pub fn enumerate_codewords(&self) -> Result<Vec<Codeword>> {
        if self.row_rank > MAX_CODEWORD_RANK {
            return Err(Error::BoundExceeded {
                what: "row-space dimension for codeword enumeration",
                limit: MAX_CODEWORD_RANK,
            });
        }
        let mut basis = [0u64; 64];
        for &r in &self.rows {
            insert(&mut basis, r);
        }
        let gens: Vec<u64> = basis.iter().copied().filter(|&b| b != 0).collect();
        let mut words = Vec::with_capacity(1 << gens.len());
        // Gray-code walk over all combinations.
        let mut current = 0u64;
        words.push(Codeword::new(0));
        for i in 1u64..(1u64 << gens.len()) {
            current ^= gens[i.trailing_zeros() as usize];
            words.push(Codeword::new(current));
        }
        words.sort_unstable_by_key(|c| (c.weight, c.mask.bits()));
        Ok(words)
    }

    /// Minimum weight of a nonzero codeword, if the row space is nonzero.
    pub fn min_nonzero_weight(&self) -> Result<Option<usize>> {
        Ok(self
            .enumerate_codewords()?
            .iter()
            .find(|c| c.weight > 0)
            .map(|c| c.weight))
    }
}

/// Parses whitespace-separated `0`/`1` tokens, one row per line. Blank lines
/// and lines starting with `#` are skipped.
pub fn parse_matrix(text: &str) -> Result<BinaryMatrix, ParseError> {
    let mut rows = Vec::new();
    let mut width: Option<usize> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let line_no = lineno + 1;
        let tokens: Vec<&str> = line.split_whitespace().collect();
        // A single run of digits like `101011` is accepted as one row too.
        let cells: Vec<&str> = if tokens.len() == 1 && tokens[0].len() > 1 {
            (0..tokens[0].len())
                .map(|i| &tokens[0][i..i + 1])
                .collect()
        } else {
            tokens
        };
        if cells.len() > MAX_GROUND_SET {
            return Err(ParseError::TooManyColumns {
                columns: cells.len(),
            });
        }
        let expected = *width.get_or_insert(cells.len());
        if cells.len() != expected {
            return Err(ParseError::RaggedRow {
                line: line_no,
                expected,
                found: cells.len(),
            });
        }
        let mut row = 0u64;
        for (j, tok) in cells.iter().enumerate() {
            match *tok {
                "0" => {}
                "1" => row |= 1 << j,
                other => {
                    return Err(ParseError::NonBinaryToken {
                        line: line_no,
                        token: other.to_string(),
                    })
                }
            }
        }
        rows.push(row);
    }
    let n = width.ok_or(ParseError::Empty)?;
    BinaryMatrix::new(n, rows).map_err(|e| match e {
        Error::Parse(p) => p,
        other => ParseError::Malformed {
            line: 0,
            message: other.to_string(),
        },
    })
}

impl FromStr for BinaryMatrix {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_matrix(s)
    }
}

impl fmt::Display for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let line: Vec<&str> = (0..self.n)
                .map(|j| if (r >> j) & 1 == 1 { "1" } else { "0" })
                .collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryMatrix({}x{})", self.rows.len(), self.n)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const EXAMPLE_1: &str = "1 0 1 0 1 1\n0 1 1 0 1 1\n0 0 0 1 1 1\n";

    /// Plain Gaussian elimination on a dense 0/1 table, column by column.
    fn dense_rank(rows: &[Vec<u8>], cols: &[usize]) -> usize {
        let mut m: Vec<Vec<u8>> = rows
            .iter()
            .map(|r| cols.iter().map(|&c| r[c]).collect())
            .collect();
        let mut rank = 0;
        for c in 0..cols.len() {
            let Some(p) = (rank..m.len()).find(|&i| m[i][c] == 1) else {
                continue;
            };
            m.swap(rank, p);
            for i in 0..m.len() {
                if i != rank && m[i][c] == 1 {
                    let pivot = m[rank].clone();
                    for (a, b) in m[i].iter_mut().zip(pivot) {
                        *a ^= b;
                    }
                }
            }
            rank += 1;
        }
        rank
    }

    #[test]
    fn parses_identity() {
        let m = parse_matrix("10\n01").unwrap();
        assert_eq!(m.num_rows(), 2);
        assert_eq!(m.num_cols(), 2);
        assert_eq!(m.rows(), &[0b01, 0b10]);
    }

    #[test]
    fn parses_example_rows_as_column_sets() {
        let m = parse_matrix(EXAMPLE_1).unwrap();
        let sets: Vec<_> = m.rows().iter().map(|&r| SubsetMask::from_bits(r)).collect();
        assert_eq!(
            sets,
            vec![
                SubsetMask::from_one_based([1, 3, 5, 6]),
                SubsetMask::from_one_based([2, 3, 5, 6]),
                SubsetMask::from_one_based([4, 5, 6]),
            ]
        );
    }

    #[test]
    fn parse_errors_are_distinct() {
        assert!(matches!(
            parse_matrix("10\n011"),
            Err(ParseError::RaggedRow { line: 2, .. })
        ));
        assert!(matches!(
            parse_matrix("1 2"),
            Err(ParseError::NonBinaryToken { .. })
        ));
        assert!(matches!(parse_matrix("# nothing\n\n"), Err(ParseError::Empty)));
        let wide = vec!["1"; 65].join(" ");
        assert!(matches!(
            parse_matrix(&wide),
            Err(ParseError::TooManyColumns { columns: 65 })
        ));
    }

    #[test]
    fn rank_of_columns_examples() {
        let m = parse_matrix(EXAMPLE_1).unwrap();
        assert_eq!(m.rank_of_columns(SubsetMask::from_one_based([5, 6])).unwrap(), 1);
        assert_eq!(m.rank_of_columns(SubsetMask::EMPTY).unwrap(), 0);
        assert_eq!(m.rank_of_columns(SubsetMask::full(6)).unwrap(), 3);
        assert!(m.rank_of_columns(SubsetMask::singleton(6)).is_err());
    }

    #[test]
    fn codewords_of_identity() {
        let m = parse_matrix("10\n01").unwrap();
        let words: Vec<u64> = m
            .enumerate_codewords()
            .unwrap()
            .iter()
            .map(|c| c.mask.bits())
            .collect();
        assert_eq!(words, vec![0b00, 0b01, 0b10, 0b11]);
    }

    #[test]
    fn codeword_bound_is_enforced() {
        let rows: Vec<u64> = (0..25).map(|i| 1u64 << i).collect();
        let m = BinaryMatrix::new(25, rows).unwrap();
        assert!(m.enumerate_codewords().is_err());
    }

    #[test]
    fn redundant_rows_do_not_inflate_codewords() {
        let m = parse_matrix("110\n011\n101").unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.enumerate_codewords().unwrap().len(), 4);
    }

    fn matrix_strategy() -> impl Strategy<Value = (usize, Vec<u64>)> {
        (1usize..=10).prop_flat_map(|n| {
            (
                Just(n),
                prop::collection::vec(0u64..(1u64 << n), 1..=6),
            )
        })
    }

    proptest! {
        #[test]
        fn rank_matches_dense_elimination((n, rows) in matrix_strategy(), x in any::<u64>()) {
            let m = BinaryMatrix::new(n, rows.clone()).unwrap();
            let x = SubsetMask::from_bits(x).intersection(SubsetMask::full(n));
            let dense: Vec<Vec<u8>> = rows
                .iter()
                .map(|r| (0..n).map(|j| ((r >> j) & 1) as u8).collect())
                .collect();
            let cols: Vec<usize> = x.iter().collect();
            prop_assert_eq!(m.rank_of_columns(x).unwrap(), dense_rank(&dense, &cols));
        }

        #[test]
        fn rank_is_monotone_and_submodular((n, rows) in matrix_strategy(), a in any::<u64>(), b in any::<u64>()) {
            let m = BinaryMatrix::new(n, rows).unwrap();
            let full = SubsetMask::full(n);
            let a = SubsetMask::from_bits(a).intersection(full);
            let b = SubsetMask::from_bits(b).intersection(full);
            let r = |s| m.rank_of_columns(s).unwrap();
            prop_assert!(r(a) <= r(a.union(b)));
            prop_assert!(r(a.union(b)) + r(a.intersection(b)) <= r(a) + r(b));
        }
    }
}
