//! Locality-1 families: every symbol is repaired from a single partner
//! group, so the repair groups are disjoint repetition blocks of length δ.
//!
//! For `n = (k+e)δ` with excess `e ∈ {0,1,2,3}` the optimal distance is
//! `(e+1)δ`. The `e = 0` code is a concatenation of `k` repetition codes;
//! `e = 1` comes out of the tensor-product construction; `e ∈ {2, 3}`
//! append `e` global parity rows whose per-block tail columns must be
//! projectively distinct (`e = 2`, at most 5 blocks) or in general position
//! (`e = 3`, at most 6 blocks), which caps `k` at 3.

use crate::codes::LinearCode;
use crate::galois::F4;
use crate::linalg::Matrix;
use crate::{Error, Result};

use super::gtp::{gtp, GtpSpec};

/// Parity-check matrix `[I_{δ−1} | 1]` of the `[δ, 1, δ]` repetition code.
pub fn h_delta(delta: usize) -> Matrix {
    assert!(delta >= 2);
    Matrix::identity(delta - 1).hstack(&Matrix::ones(delta - 1, 1))
}

/// Tail columns for the two-row global part: the five points of the
/// projective line over GF(4).
const TAILS_E2: [[F4; 2]; 5] = [
    [F4::ONE, F4::ZERO],
    [F4::ONE, F4::ONE],
    [F4::ONE, F4::A],
    [F4::ONE, F4::B],
    [F4::ZERO, F4::ONE],
];

/// Tail columns for the three-row global part: six vectors of GF(4)³ in
/// general position (any three linearly independent).
const TAILS_E3: [[F4; 3]; 6] = [
    [F4::ONE, F4::ZERO, F4::ZERO],
    [F4::ONE, F4::ONE, F4::ONE],
    [F4::ONE, F4::A, F4::B],
    [F4::ONE, F4::B, F4::A],
    [F4::ZERO, F4::ZERO, F4::ONE],
    [F4::ZERO, F4::ONE, F4::ZERO],
];

/// Builds the `(1, δ)` family member with dimension `k` and excess `e`.
pub fn r1_family(k: usize, delta: usize, e: usize) -> Result<(LinearCode, Vec<Vec<usize>>)> {
    if delta < 3 {
        return Err(Error::Domain {
            family: format!("r1.e{e}"),
            constraint: format!("requires δ ≥ 3, got δ = {delta}"),
        });
    }
    if k < 2 {
        return Err(Error::Domain {
            family: format!("r1.e{e}"),
            constraint: format!("requires k ≥ 2, got k = {k}"),
        });
    }
    if e >= 2 && !(2..=3).contains(&k) {
        return Err(Error::Domain {
            family: format!("r1.e{e}"),
            constraint: format!(
                "requires k ∈ {{2, 3}}: only {} admissible tail columns exist, got k = {k}",
                if e == 2 { 5 } else { 6 }
            ),
        });
    }
    let ell = k + e;
    let groups: Vec<Vec<usize>> = (0..ell)
        .map(|j| (j * delta..(j + 1) * delta).collect())
        .collect();
    let code = match e {
        0 => LinearCode::from_parity(&Matrix::identity(k).kron(&h_delta(delta)))?,
        1 => {
            let mut b2 = Matrix::zeros(1, delta);
            b2[(0, delta - 1)] = F4::ONE;
            let spec = GtpSpec {
                ell,
                b1: h_delta(delta),
                a2: Matrix::ones(1, ell),
                b2,
            };
            gtp(&spec)?.0
        }
        2 => from_tails(ell, delta, &TAILS_E2.map(|t| t.to_vec())[..ell])?,
        3 => from_tails(ell, delta, &TAILS_E3.map(|t| t.to_vec())[..ell])?,
        _ => {
            return Err(Error::Domain {
                family: format!("r1.e{e}"),
                constraint: "excess e must lie in {0, 1, 2, 3}".into(),
            })
        }
    };
    Ok((code, groups))
}

/// Diagonal repetition blocks plus `e` global rows whose only nonzero
/// entries sit in the last column of each block.
fn from_tails(ell: usize, delta: usize, tails: &[Vec<F4>]) -> Result<LinearCode> {
    let e = tails[0].len();
    let upper = Matrix::identity(ell).kron(&h_delta(delta));
    let mut lower = Matrix::zeros(e, ell * delta);
    for (j, tail) in tails.iter().enumerate() {
        for (i, &v) in tail.iter().enumerate() {
            lower[(i, j * delta + (delta - 1))] = v;
        }
    }
    LinearCode::from_parity(&upper.vstack(&lower))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;

    #[test]
    fn concatenated_repetition_blocks() {
        let (c, groups) = r1_family(2, 3, 0).unwrap();
        assert_eq!((c.n(), c.k()), (6, 2));
        assert_eq!(c.min_distance().unwrap(), 3);
        assert_eq!(groups, vec![vec![0, 1, 2], vec![3, 4, 5]]);
    }

    #[test]
    fn excess_one_code_is_kron_reducible() {
        let (c, _) = r1_family(2, 4, 1).unwrap();
        assert_eq!((c.n(), c.k()), (12, 2));
        assert_eq!(c.min_distance().unwrap(), 8);
        // The same codeword set is spanned by a pure tensor generator.
        let g = Matrix::parse("1 1 0; 0 1 1").kron(&Matrix::ones(1, 4));
        let tensor = LinearCode::from_generator(&g).unwrap();
        assert!(c.same_code(&tensor));
    }

    #[test]
    fn excess_two_and_three_parameters() {
        let (c, _) = r1_family(3, 3, 2).unwrap();
        assert_eq!((c.n(), c.k()), (15, 3));
        assert_eq!(c.min_distance().unwrap(), 9);

        let (c, _) = r1_family(3, 3, 3).unwrap();
        assert_eq!((c.n(), c.k()), (18, 3));
        assert_eq!(c.min_distance().unwrap(), 12);
    }

    #[test]
    fn six_tail_columns_are_in_general_position() {
        let m = Matrix::from_rows(
            &TAILS_E3
                .iter()
                .map(|t| t.to_vec())
                .collect::<Vec<_>>(),
        )
        .transpose();
        for i in 0..6 {
            for j in i + 1..6 {
                for k in j + 1..6 {
                    assert_eq!(m.select_cols(&[i, j, k]).rank(), 3);
                }
            }
        }
    }

    #[test]
    fn a_sixth_projective_group_is_rejected() {
        // e = 2 with k = 4 would need six projectively distinct tail columns
        // on a line with only five points.
        match r1_family(4, 3, 2) {
            Err(Error::Domain { .. }) => {}
            other => panic!("expected domain rejection, got {other:?}"),
        }
    }

    #[test]
    fn delta_two_is_rejected() {
        assert!(r1_family(2, 2, 0).is_err());
    }
}
