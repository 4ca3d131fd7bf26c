//! Tensor-product construction of locality codes with disjoint repair
//! groups.
//!
//! Given a `(δ−1)×(r+δ−1)` local parity block `B₁`, a `μ×ℓ` coupling matrix
//! `A₂` and a `ν×(r+δ−1)` auxiliary block `B₂`, the parity-check matrix
//!
//! ```text
//! H = [ I_ℓ ⊗ B₁ ]
//!     [ A₂  ⊗ B₂ ]
//! ```
//!
//! defines a code of length `ℓ(r+δ−1)` with ℓ disjoint repair groups. When
//! `A₂` checks an `[ℓ, ℓ−μ]` MDS code, `B₁` checks an `[r+δ−1, r]` MDS code
//! and the stack `[B₁; B₂]` checks an `[r+δ−1, r−ν]` MDS code, the result is
//! an `(r, δ)`-LRC of dimension `ℓr − μν` with distance at least
//! `δ(μ+1)` if `r = ν`, and at least `min{δ(μ+1), δ+ν}` if `r > ν`.

use crate::codes::LinearCode;
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Specification of one tensor-product code.
#[derive(Clone, Debug)]
pub struct GtpSpec {
    pub ell: usize,
    pub b1: Matrix,
    pub a2: Matrix,
    pub b2: Matrix,
}

impl GtpSpec {
    /// Group size `r + δ − 1`.
    pub fn group_size(&self) -> usize {
        self.b1.cols()
    }

    pub fn delta(&self) -> usize {
        self.b1.rows() + 1
    }

    pub fn r(&self) -> usize {
        self.b1.cols() - self.b1.rows()
    }

    pub fn mu(&self) -> usize {
        self.a2.rows()
    }

    pub fn nu(&self) -> usize {
        self.b2.rows()
    }

    /// `ℓr − μν`.
    pub fn expected_dimension(&self) -> usize {
        self.ell * self.r() - self.mu() * self.nu()
    }

    /// The guaranteed lower bound on minimum distance.
    pub fn distance_bound(&self) -> usize {
        let delta = self.delta();
        let by_coupling = delta * (self.mu() + 1);
        if self.r() == self.nu() {
            by_coupling
        } else {
            by_coupling.min(delta + self.nu())
        }
    }

    /// Checks shapes and the three MDS preconditions.
    pub fn validate(&self) -> Result<()> {
        let g = self.group_size();
        if self.b2.cols() != g {
            return Err(Error::shape(format!(
                "B2 has {} columns, expected the group size {g}",
                self.b2.cols()
            )));
        }
        if self.a2.cols() != self.ell {
            return Err(Error::shape(format!(
                "A2 has {} columns, expected ℓ = {}",
                self.a2.cols(),
                self.ell
            )));
        }
        if self.mu() >= self.ell {
            return Err(Error::invalid(format!(
                "need μ < ℓ, got μ = {} and ℓ = {}",
                self.mu(),
                self.ell
            )));
        }
        if self.nu() > self.r() {
            return Err(Error::invalid(format!(
                "need ν ≤ r, got ν = {} and r = {}",
                self.nu(),
                self.r()
            )));
        }
        check_mds_parity(&self.a2, "A2")?;
        check_mds_parity(&self.b1, "B1")?;
        let stacked = self.b1.vstack(&self.b2);
        if self.nu() == self.r() {
            // Square stack: the precondition degenerates to nonsingularity.
            if stacked.rank() != g {
                return Err(Error::MdsPrecondition {
                    which: "[B1; B2]".into(),
                    n: g,
                    k: 0,
                });
            }
        } else {
            check_mds_parity(&stacked, "[B1; B2]")?;
        }
        Ok(())
    }
}

/// Verifies that `h` is a full-rank parity-check matrix of an MDS code,
/// using duality: the code checked by `h` is MDS iff the code generated by
/// `h` is MDS, and the latter has small dimension.
fn check_mds_parity(h: &Matrix, which: &str) -> Result<()> {
    let n = h.cols();
    let rho = h.rows();
    let err = || Error::MdsPrecondition {
        which: which.into(),
        n,
        k: n - rho,
    };
    if h.rank() != rho {
        return Err(err());
    }
    let dual = LinearCode::from_generator(h).map_err(|_| err())?;
    if !dual.is_mds().map_err(|_| err())? {
        return Err(err());
    }
    Ok(())
}

/// Builds the tensor-product code along with its ℓ disjoint group supports.
pub fn gtp(spec: &GtpSpec) -> Result<(LinearCode, Vec<Vec<usize>>)> {
    spec.validate()?;
    let upper = Matrix::identity(spec.ell).kron(&spec.b1);
    let lower = spec.a2.kron(&spec.b2);
    let h = upper.vstack(&lower);
    let code = LinearCode::from_parity(&h)?;
    debug_assert_eq!(code.k(), spec.expected_dimension());
    let g = spec.group_size();
    let groups = (0..spec.ell)
        .map(|j| (j * g..(j + 1) * g).collect())
        .collect();
    Ok((code, groups))
}
