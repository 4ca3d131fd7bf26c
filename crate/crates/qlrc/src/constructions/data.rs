//! Fixed matrices embedded as data in the `gf4` text format.
//!
//! Every matrix that exists only as a printed table (rather than as the
//! output of a parameterized construction) lives here, each pinned by an
//! FNV-1a checksum so that an accidental edit fails the data integrity test
//! instead of silently changing a code.

use crate::linalg::Matrix;
use crate::textio::{fnv1a64, import_matrix};

/// Parity-check matrix of the longest (3,4)-locality code of dimension 4:
/// three local blocks of the [6,3,4] code plus five global parity rows.
/// Defines an [18,4,12] code.
pub const C18: &str = "\
gf4 14 18
1 0 0 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0
0 1 0 1 a b 0 0 0 0 0 0 0 0 0 0 0 0
0 0 1 1 b a 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 1 0 0 1 1 1 0 0 0 0 0 0
0 0 0 0 0 0 0 1 0 1 a b 0 0 0 0 0 0
0 0 0 0 0 0 0 0 1 1 b a 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 1 1
0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 a b
0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 b a
1 1 a b 0 b 1 a a b 0 b 1 b a 1 0 b
b a a a a a 1 0 1 b a 0 a 1 1 b b 1
0 1 1 b b 1 a b a 1 b 1 a b a a 1 b
1 b b b a 0 b a 1 a 0 b a 1 1 b 1 a
1 b b b b 1 b a a 1 1 b b a 1 a a a
";

/// Parity-check matrix of a [16,4,10] code with three overlapping size-6
/// repair groups.
pub const H16: &str = "\
gf4 12 16
1 0 0 1 1 1 0 0 0 0 0 0 0 0 0 0
0 1 0 1 a b 0 0 0 0 0 0 0 0 0 0
0 0 1 1 b a 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 1 0 0 1 1 1 0 0 0 0
0 0 0 0 0 0 0 1 0 1 a b 0 0 0 0
0 0 0 0 0 0 0 0 1 1 b a 0 0 0 0
0 0 0 0 0 0 0 0 0 0 1 0 0 1 1 1
0 0 0 0 0 0 0 0 0 1 0 0 0 1 a b
0 0 0 0 0 0 0 0 0 0 0 0 1 1 b a
0 0 0 1 a a 0 0 0 a b 0 0 1 1 b
0 0 0 1 b b 0 0 0 b 0 b 0 1 0 a
0 0 0 a 1 b 0 0 0 a 0 a 0 a 1 a
";

/// Parity-check matrix of a [17,4,11] code with four size-6 repair groups,
/// pairwise disjoint or overlapping in exactly two positions.
pub const H17: &str = "\
gf4 13 17
1 0 0 1 1 1 0 0 0 0 0 0 0 0 0 0 0
0 1 0 1 a b 0 0 0 0 0 0 0 0 0 0 0
0 0 1 1 b a 0 0 0 0 0 0 0 0 0 0 0
1 0 0 0 0 0 0 1 1 1 0 0 0 0 0 0 0
0 1 0 0 0 0 0 1 a b 0 0 0 0 0 0 0
0 0 0 0 0 0 1 1 b a 0 0 0 0 0 0 0
1 0 0 0 0 0 0 0 0 0 1 1 1 0 0 0 0
0 0 1 0 0 0 0 0 0 0 1 a b 0 0 0 0
0 0 0 0 0 0 1 0 0 0 1 b a 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 1 0 0 1 1 1
0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 a b
0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 b a
b a a b 1 b 1 a b b a a b a b 1 b
";

/// Parity-check matrix (with deliberately dependent rows) of a [15,4,9]
/// code whose four size-6 repair groups all share the first coordinate.
pub const H15: &str = "\
gf4 12 15
1 1 0 0 0 0 0 1 1 0 0 0 0 0 0
1 0 1 0 0 0 0 a b 0 0 0 0 0 0
1 0 0 1 0 0 0 b a 0 0 0 0 0 0
1 1 0 0 0 0 0 0 0 1 1 0 0 0 0
1 0 0 0 1 0 0 0 0 a b 0 0 0 0
1 0 0 0 0 1 0 0 0 b a 0 0 0 0
1 0 a 0 0 0 0 0 0 0 0 1 1 0 0
1 0 0 0 a 0 0 0 0 0 0 a b 0 0
1 0 0 0 0 0 1 0 0 0 0 b a 0 0
1 0 0 a 0 0 0 0 0 0 0 0 0 1 1
1 0 0 0 0 a 0 0 0 0 0 0 0 a b
1 0 0 0 0 0 1 0 0 0 0 0 0 b a
";

/// Generator matrix of the [21,3,16] simplex code: the columns are the 21
/// projectively normalized nonzero vectors of GF(4)³.
pub const G21: &str = "\
gf4 3 21
1 0 1 1 1 0 1 0 1 1 1 1 0 1 1 1 1 0 1 1 1
0 1 1 a b 0 0 1 1 a b 0 1 1 a b 0 1 1 a b
0 0 0 0 0 1 1 1 1 1 1 a a a a a b b b b b
";

/// Cyclic-form generator matrix of the [17,4,12] ovoid code.
pub const G17: &str = "\
gf4 4 17
1 1 a 0 1 a b b a 1 0 a 1 1 0 0 0
0 1 1 a 0 1 a b b a 1 0 a 1 1 0 0
0 0 1 1 a 0 1 a b b a 1 0 a 1 1 0
0 0 0 1 1 a 0 1 a b b a 1 0 a 1 1
";

/// Generator matrix of the [16,3,12] code obtained by shortening the ovoid
/// code at its last position.
pub const G16: &str = "\
gf4 3 16
1 1 a 0 1 a b b a 1 0 a 1 1 0 0
0 1 1 a 0 1 a b b a 1 0 a 1 1 0
0 0 1 1 a 0 1 a b b a 1 0 a 1 1
";

/// Parity-check matrix of the [20,7,8] (2,3)-locality code with five
/// disjoint repair groups.
pub const D8_FIVE_GROUPS: &str = "\
gf4 13 20
1 0 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 1 b a 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 1 0 1 1 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 b a 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 1 0 1 1 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 1 b a 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 1 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 1 b a 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 1
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 b a
0 0 1 1 0 0 1 1 0 0 1 1 0 0 0 1 0 0 a 0
0 0 b a 0 0 b a 0 0 1 1 0 0 1 b 0 0 0 b
0 0 0 a 0 0 b b 0 0 a 1 0 0 1 1 0 0 0 a
";

/// Parity-check matrix of the [20,5,12] (2,3)-locality code with five
/// disjoint repair groups.
pub const D12_FIVE_GROUPS: &str = "\
gf4 15 20
1 0 1 a 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 1 1 b 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 1 0 1 a 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 1 b 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 1 0 1 a 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 1 1 b 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 a 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 b 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 a
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 b
0 0 0 1 0 0 1 1 0 0 b a 0 0 a b 0 0 b a
0 0 1 1 0 0 1 0 0 0 a b 0 0 b 1 0 0 a 1
0 0 b b 0 0 b b 0 0 a a 0 0 a a 0 0 1 1
0 0 a a 0 0 a a 0 0 b b 0 0 a a 0 0 1 1
0 0 b b 0 0 a a 0 0 b b 0 0 b b 0 0 b b
";

/// Parity-check matrix of the [20,7,9] (3,3)-locality code: the best known
/// distance for four size-5 groups at dimension 7 (the distance-10 slot is
/// open).
pub const D9_EXAMPLE: &str = "\
gf4 13 20
1 0 1 1 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 1 1 a b 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 1 0 1 1 1 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 1 1 a b 0 0 0 0 0 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 1 0 1 1 1 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 1 1 a b 0 0 0 0 0
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 0 1 1 1
0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0 1 1 a b
0 0 1 1 1 0 0 1 1 1 0 0 1 1 1 0 0 1 1 1
0 0 b b a 0 0 b b a 0 0 1 1 b 0 0 1 b 1
0 0 1 0 a 0 0 a 1 a 0 0 a a 1 0 0 a a 1
0 0 1 b 1 0 0 1 0 a 0 0 0 1 1 0 0 a 1 a
0 0 a b 0 0 0 b b a 0 0 a b 0 0 0 1 1 b
";

/// The [9,5,3] two-group example code (the smallest optimal (3,3)-LRC used
/// throughout the test suite).
pub const EXAMPLE_9_5_3: &str = "\
gf4 4 9
1 1 1 1 0 0 0 0 0
0 1 a b 1 0 0 0 0
0 0 0 0 0 1 1 1 1
0 0 0 0 1 1 a b 0
";

/// Every embedded matrix with its pinned checksum.
pub const ALL: &[(&str, &str, u64)] = &[
    ("c18", C18, 0xf24ea37f962ef403),
    ("h16", H16, 0xa56734dac7c07106),
    ("h17", H17, 0xdbeefa8eed9998fd),
    ("h15", H15, 0x0b3fd4c8d8af8343),
    ("g21", G21, 0x966ec07742dd3a79),
    ("g17", G17, 0x9e806ca4cc0995a2),
    ("g16", G16, 0xed35888f9960c264),
    ("d8_five_groups", D8_FIVE_GROUPS, 0xffec75731960eb5c),
    ("d12_five_groups", D12_FIVE_GROUPS, 0x65f1dfae4338192c),
    ("d9_example", D9_EXAMPLE, 0x4b67340509e5cfbb),
    ("example_9_5_3", EXAMPLE_9_5_3, 0x66615c1a6d290bd3),
];

/// Parses an embedded matrix; panics on malformed data (caught by tests).
pub fn fixed(text: &str) -> Matrix {
    import_matrix(text).expect("embedded matrix data is malformed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn checksums_and_shapes() {
        for &(name, text, sum) in ALL {
            assert_eq!(
                fnv1a64(text.as_bytes()),
                sum,
                "checksum mismatch for embedded matrix `{name}`"
            );
            let m = fixed(text);
            assert!(m.rows() > 0 && m.cols() > 0, "empty matrix `{name}`");
        }
    }
}
