//! Distance-3 and distance-4 families for locality 2 and 3.
//!
//! All of these codes are unions of local parity blocks placed along the
//! diagonal. When the length is not a multiple of the group size, exactly
//! one adjacent pair of blocks overlaps by `e` columns and the remaining
//! blocks stay disjoint; that generalizes the printed three-block examples
//! to arbitrary ℓ. Constructions are emit-then-measure: the builders place
//! the blocks, the tests measure `(n, k, d)`.

use crate::codes::LinearCode;
use crate::galois::F4;
use crate::linalg::Matrix;
use crate::{Error, Result};

use super::gtp::{gtp, GtpSpec};

/// `[5,2,4]` MDS parity-check block; its first two rows check a `[5,3,3]`
/// MDS code.
pub fn mds_5_2_block() -> Matrix {
    Matrix::parse("1 1 1 1 0; 0 1 a b 1; 0 1 b a 0")
}

/// `[6,3,4]` MDS parity-check block in tiled form.
pub fn mds_6_3_block() -> Matrix {
    Matrix::parse("1 1 1 1 0 0; 0 1 a b 1 0; 0 1 b a 0 1")
}

/// Places ℓ copies of `block` along the diagonal with one adjacent pair
/// overlapping by `e` columns (the first pair, or the last when
/// `overlap_last` is set). Returns the stacked rows and the group supports.
fn block_layout(
    block: &Matrix,
    ell: usize,
    e: usize,
    overlap_last: bool,
) -> (Matrix, Vec<Vec<usize>>) {
    let w = block.cols();
    let h = block.rows();
    assert!(e < w && ell >= 2);
    let offsets: Vec<usize> = (0..ell)
        .map(|j| {
            if e == 0 {
                j * w
            } else if overlap_last {
                if j + 1 < ell {
                    j * w
                } else {
                    j * w - e
                }
            } else if j == 0 {
                0
            } else {
                j * w - e
            }
        })
        .collect();
    let n = ell * w - e;
    let mut m = Matrix::zeros(ell * h, n);
    let mut groups = Vec::with_capacity(ell);
    for (j, &off) in offsets.iter().enumerate() {
        for i in 0..h {
            for c in 0..w {
                m[(j * h + i, off + c)] = block[(i, c)];
            }
        }
        groups.push((off..off + w).collect());
    }
    (m, groups)
}

/// One global parity row that tiles `pattern` over every block window.
/// Overlapping columns must receive the same symbol from both windows.
fn tiled_global_row(pattern: &[F4], groups: &[Vec<usize>], n: usize) -> Matrix {
    let mut row = vec![None; n];
    for support in groups {
        assert_eq!(support.len(), pattern.len());
        for (&col, &v) in support.iter().zip(pattern) {
            match row[col] {
                None => row[col] = Some(v),
                Some(old) => assert_eq!(old, v, "inconsistent overlap in global row"),
            }
        }
    }
    Matrix::from_rows(&[row.into_iter().map(|v| v.unwrap_or(F4::ZERO)).collect()])
}

/// Distance-3 family: `r ∈ {2, 3}`, `δ = 3`, `n = (r+2)ℓ − e`.
pub fn d3_family(r: usize, ell: usize, e: usize) -> Result<(LinearCode, Vec<Vec<usize>>)> {
    let family = format!("d3.r{r}");
    let block = match r {
        2 => Matrix::parse("0 1 1 1; 1 0 1 a"),
        3 => Matrix::parse("0 1 1 1 1; 1 0 1 a b"),
        _ => {
            return Err(Error::Domain {
                family,
                constraint: format!("locality must be 2 or 3, got {r}"),
            })
        }
    };
    let max_e = r - 1;
    if e > max_e {
        return Err(Error::Domain {
            family,
            constraint: format!("excess must satisfy e ≤ {max_e}, got {e}"),
        });
    }
    if ell < 2 {
        return Err(Error::Domain {
            family,
            constraint: format!("needs ℓ ≥ 2, got {ell}"),
        });
    }
    let (h, groups) = block_layout(&block, ell, e, false);
    Ok((LinearCode::from_parity(&h)?, groups))
}

/// Distance-4 family: `(r, δ) ∈ {(2,3), (3,3), (2,4), (3,4)}`, with the two
/// divisibility-excluded parameter sets reported as nonexistence verdicts.
pub fn d4_family(
    r: usize,
    delta: usize,
    ell: usize,
    e: usize,
) -> Result<(LinearCode, Vec<Vec<usize>>)> {
    let family = format!("d4.r{r}delta{delta}");
    if ell < 2 {
        return Err(Error::Domain {
            family,
            constraint: format!("needs ℓ ≥ 2, got {ell}"),
        });
    }
    match (r, delta) {
        (2, 3) => match e {
            1 => {
                let spec = GtpSpec {
                    ell,
                    b1: Matrix::parse("1 1 1 1; 0 1 a b"),
                    a2: Matrix::ones(1, ell),
                    b2: Matrix::parse("0 1 b a"),
                };
                gtp(&spec)
            }
            0 => Err(Error::Nonexistent {
                family,
                reason: "even dimension forces disjoint size-4 groups and 4 | n, \
                         but the bound forces n = 4ℓ + 1"
                    .into(),
            }),
            _ => Err(Error::Domain {
                family,
                constraint: format!("excess must be 1 (odd dimension), got {e}"),
            }),
        },
        (3, 3) => match e {
            0 => {
                let b = mds_5_2_block();
                let spec = GtpSpec {
                    ell,
                    b1: b.select_rows(&[0, 1]),
                    a2: Matrix::ones(1, ell),
                    b2: b.select_rows(&[2]),
                };
                gtp(&spec)
            }
            1 => {
                let b = mds_5_2_block();
                let (upper, groups) = block_layout(&b.select_rows(&[0, 1]), ell, 1, true);
                let global = tiled_global_row(b.row(2), &groups, upper.cols());
                let code = LinearCode::from_parity(&upper.vstack(&global))?;
                Ok((code, groups))
            }
            2 => Err(Error::Nonexistent {
                family,
                reason: "dimension divisible by 3 forces disjoint size-5 groups and 5 | n, \
                         but the bound forces n = 5ℓ + 1"
                    .into(),
            }),
            _ => Err(Error::Domain {
                family,
                constraint: format!("excess must be 0 or 1, got {e}"),
            }),
        },
        (2, 4) => match e {
            0 => {
                let h = Matrix::identity(ell).kron(&mds_5_2_block());
                let code = LinearCode::from_parity(&h)?;
                let groups = (0..ell).map(|j| (5 * j..5 * j + 5).collect()).collect();
                Ok((code, groups))
            }
            1 => {
                let (h, groups) = block_layout(&mds_5_2_block(), ell, 1, false);
                Ok((LinearCode::from_parity(&h)?, groups))
            }
            _ => Err(Error::Domain {
                family,
                constraint: format!("excess must be 0 or 1, got {e}"),
            }),
        },
        (3, 4) => {
            if e > 2 {
                return Err(Error::Domain {
                    family,
                    constraint: format!("excess must be 0, 1 or 2, got {e}"),
                });
            }
            let (h, groups) = block_layout(&mds_6_3_block(), ell, e, false);
            Ok((LinearCode::from_parity(&h)?, groups))
        }
        _ => Err(Error::Domain {
            family,
            constraint: format!("no distance-4 family at (r, δ) = ({r}, {delta})"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lrc::{verify_locality, verify_optimal, RepairGroupSet};

    fn check(
        build: Result<(LinearCode, Vec<Vec<usize>>)>,
        n: usize,
        k: usize,
        d: usize,
        r: usize,
        delta: usize,
    ) {
        let (code, groups) = build.unwrap();
        assert_eq!((code.n(), code.k()), (n, k));
        assert_eq!(code.min_distance().unwrap(), d);
        let set = RepairGroupSet::from_supports(&code, &groups).unwrap();
        assert!(verify_locality(&code, &set, r, delta).unwrap().all_ok());
        assert!(verify_optimal(&code, r, delta).unwrap().is_optimal());
    }

    #[test]
    fn distance_3_families() {
        check(d3_family(2, 2, 0), 8, 4, 3, 2, 3);
        check(d3_family(2, 3, 1), 11, 5, 3, 2, 3);
        check(d3_family(3, 2, 0), 10, 6, 3, 3, 3);
        check(d3_family(3, 3, 1), 14, 8, 3, 3, 3);
        check(d3_family(3, 3, 2), 13, 7, 3, 3, 3);
    }

    #[test]
    fn distance_4_families() {
        check(d4_family(2, 3, 2, 1), 8, 3, 4, 2, 3);
        check(d4_family(2, 3, 3, 1), 12, 5, 4, 2, 3);
        check(d4_family(3, 3, 3, 0), 15, 8, 4, 3, 3);
        check(d4_family(3, 3, 3, 1), 14, 7, 4, 3, 3);
        check(d4_family(2, 4, 2, 0), 10, 4, 4, 2, 4);
        check(d4_family(2, 4, 2, 1), 9, 3, 4, 2, 4);
        check(d4_family(3, 4, 2, 0), 12, 6, 4, 3, 4);
        check(d4_family(3, 4, 2, 1), 11, 5, 4, 3, 4);
        check(d4_family(3, 4, 2, 2), 10, 4, 4, 3, 4);
    }

    #[test]
    fn excluded_parameter_sets_are_verdicts() {
        match d4_family(2, 3, 3, 0) {
            Err(Error::Nonexistent { .. }) => {}
            other => panic!("expected nonexistence verdict, got {other:?}"),
        }
        match d4_family(3, 3, 3, 2) {
            Err(Error::Nonexistent { .. }) => {}
            other => panic!("expected nonexistence verdict, got {other:?}"),
        }
    }

    #[test]
    fn out_of_range_excess_is_a_domain_error() {
        assert!(matches!(d3_family(2, 3, 2), Err(Error::Domain { .. })));
        assert!(matches!(d4_family(3, 4, 2, 3), Err(Error::Domain { .. })));
    }
}
