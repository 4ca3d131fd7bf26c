//! Linear codes over GF(4).
//!
//! A [`LinearCode`] keeps a generator and a parity-check matrix in reduced
//! row echelon form, so two values compare equal exactly when they have the
//! same codeword set. Minimum distance and weight distribution are computed
//! by exhaustive enumeration of all `4^k − 1` nonzero codewords, walking the
//! message space in reflected Gray order so that each step updates the
//! running codeword by a single scaled generator row.

use crate::galois::F4;
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Largest dimension accepted for exhaustive enumeration. `4^14` codewords
/// is minutes of work; everything beyond must be certified structurally.
pub const DISTANCE_CAP: usize = 14;

/// A linear `[n, k]` code over GF(4), stored as a canonical
/// generator/parity-check pair.
#[derive(Clone, PartialEq, Eq)]
pub struct LinearCode {
    n: usize,
    k: usize,
    generator: Matrix,
    parity: Matrix,
    degenerate: bool,
}

impl LinearCode {
    /// Builds the code with parity-check matrix `h`. Linearly dependent rows
    /// are dropped silently (some published parity-check matrices carry them
    /// by design); an all-zero matrix is rejected.
    pub fn from_parity(h: &Matrix) -> Result<LinearCode> {
        if h.rows() == 0 || h.cols() == 0 || h.is_zero() {
            return Err(Error::ZeroMatrix);
        }
        let parity = h.row_basis();
        let generator = parity.null_space().row_basis();
        Ok(Self::assemble(generator, parity, h.cols()))
    }

    /// Builds the code spanned by the rows of `g`. Dependent rows are
    /// dropped; an all-zero matrix is rejected.
    pub fn from_generator(g: &Matrix) -> Result<LinearCode> {
        if g.rows() == 0 || g.cols() == 0 || g.is_zero() {
            return Err(Error::ZeroMatrix);
        }
        let generator = g.row_basis();
        let parity = generator.null_space().row_basis();
        Ok(Self::assemble(generator, parity, g.cols()))
    }

    /// The zero-dimensional code of length `n` (used for degenerate results
    /// of shortening/restriction, never built from user input).
    fn zero_code(n: usize) -> LinearCode {
        LinearCode {
            n,
            k: 0,
            generator: Matrix::zeros(0, n),
            parity: Matrix::identity(n),
            degenerate: true,
        }
    }

    fn assemble(generator: Matrix, parity: Matrix, n: usize) -> LinearCode {
        let k = generator.rows();
        debug_assert_eq!(parity.rows(), n - k);
        debug_assert!(generator.matmul(&parity.transpose()).is_zero());
        let degenerate =
            k == 0 || (0..n).any(|j| (0..k).all(|i| generator[(i, j)].is_zero()));
        LinearCode {
            n,
            k,
            generator,
            parity,
            degenerate,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn parity(&self) -> &Matrix {
        &self.parity
    }

    /// True when some coordinate is identically zero across the code.
    pub fn is_degenerate(&self) -> bool {
        self.degenerate
    }

    /// Encodes a message of length `k`.
    pub fn encode(&self, msg: &[F4]) -> Vec<F4> {
        self.generator.act_row(msg)
    }

    /// Membership test via the parity-check matrix.
    pub fn contains(&self, word: &[F4]) -> bool {
        word.len() == self.n && self.parity.act_col(word).iter().all(|x| x.is_zero())
    }

    /// The dual code; an involution.
    pub fn dual(&self) -> LinearCode {
        LinearCode {
            n: self.n,
            k: self.n - self.k,
            generator: self.parity.clone(),
            parity: self.generator.clone(),
            degenerate: (0..self.n)
                .any(|j| (0..self.parity.rows()).all(|i| self.parity[(i, j)].is_zero()))
                || self.parity.rows() == 0,
        }
    }

    /// Exact minimum Hamming weight over all nonzero codewords, refusing
    /// dimensions above [`DISTANCE_CAP`].
    pub fn min_distance(&self) -> Result<usize> {
        self.min_distance_capped(DISTANCE_CAP)
    }

    pub fn min_distance_capped(&self, cap: usize) -> Result<usize> {
        if self.k == 0 {
            return Err(Error::EmptyCode);
        }
        if self.k > cap {
            return Err(Error::DistanceCap { dim: self.k, cap });
        }
        let mut best = self.n + 1;
        enumerate_nonzero_codewords(&self.generator, |w| {
            let wt = weight(w);
            if wt < best {
                best = wt;
            }
        });
        Ok(best)
    }

    /// Exact weight distribution `A_0 … A_n`.
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        if self.k == 0 {
            return Err(Error::EmptyCode);
        }
        if self.k > DISTANCE_CAP {
            return Err(Error::DistanceCap {
                dim: self.k,
                cap: DISTANCE_CAP,
            });
        }
        let mut counts = vec![0u64; self.n + 1];
        counts[0] = 1;
        enumerate_nonzero_codewords(&self.generator, |w| {
            counts[weight(w)] += 1;
        });
        Ok(WeightDistribution { counts })
    }

    /// Singleton defect `s = n − k + 1 − d`.
    pub fn defect(&self) -> Result<usize> {
        let d = self.min_distance()?;
        Ok(self.n - self.k + 1 - d)
    }

    /// True when the code meets the classical Singleton bound.
    pub fn is_mds(&self) -> Result<bool> {
        Ok(self.defect()? == 0)
    }

    /// Deletes the given coordinates.
    pub fn puncture(&self, positions: &[usize]) -> Result<LinearCode> {
        let del = normalize_positions(positions, self.n)?;
        if del.len() == self.n {
            return Err(Error::invalid("puncturing every coordinate is rejected"));
        }
        let g = self.generator.delete_cols(&del);
        if g.is_zero() || g.rows() == 0 {
            return Ok(LinearCode::zero_code(g.cols()));
        }
        LinearCode::from_generator(&g)
    }

    /// Keeps the codewords that vanish on `positions`, then deletes those
    /// coordinates.
    pub fn shorten(&self, positions: &[usize]) -> Result<LinearCode> {
        let del = normalize_positions(positions, self.n)?;
        if del.len() == self.n {
            return Err(Error::invalid("shortening every coordinate is rejected"));
        }
        if del.is_empty() {
            return Ok(self.clone());
        }
        // Messages whose codeword vanishes on the chosen positions.
        let restricted = self.generator.select_cols(&del);
        let kernel = restricted.transpose().null_space();
        if kernel.rows() == 0 {
            return Ok(LinearCode::zero_code(self.n - del.len()));
        }
        let sub = kernel.matmul(&self.generator).delete_cols(&del);
        if sub.is_zero() {
            return Ok(LinearCode::zero_code(sub.cols()));
        }
        LinearCode::from_generator(&sub)
    }

    /// Restriction (punctured subcode) to `support`: deletes the complement.
    pub fn restrict(&self, support: &[usize]) -> Result<LinearCode> {
        let sup = normalize_positions(support, self.n)?;
        if sup.is_empty() {
            return Err(Error::invalid("restriction to an empty support"));
        }
        let g = self.generator.select_cols(&sup);
        if g.is_zero() || g.rows() == 0 {
            return Ok(LinearCode::zero_code(sup.len()));
        }
        LinearCode::from_generator(&g)
    }

    /// True when both codes have identical codeword sets.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.n == other.n && self.generator == other.generator
    }
}

fn normalize_positions(positions: &[usize], n: usize) -> Result<Vec<usize>> {
    let mut p: Vec<usize> = positions.to_vec();
    p.sort_unstable();
    p.dedup();
    if let Some(&bad) = p.iter().find(|&&i| i >= n) {
        return Err(Error::invalid(format!(
            "coordinate {bad} out of range for length {n}"
        )));
    }
    Ok(p)
}

/// Number of codewords at each Hamming weight.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// Smallest nonzero weight with a codeword, i.e. the minimum distance.
    pub fn min_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }
}

fn weight(w: &[F4]) -> usize {
    w.iter().filter(|x| !x.is_zero()).count()
}

/// Visits all `4^k − 1` nonzero codewords of the row space of `gen`.
///
/// Messages walk a radix-4 reflected Gray sequence (loopless focus-pointer
/// form), so consecutive codewords differ by one scaled generator row.
pub fn enumerate_nonzero_codewords(gen: &Matrix, mut visit: impl FnMut(&[F4])) {
    let k = gen.rows();
    let n = gen.cols();
    assert!(k > 0, "cannot enumerate a zero-dimensional code");

    // scaled[i][s] = s * row_i, for s in 0..4
    let scaled: Vec<[Vec<F4>; 4]> = (0..k)
        .map(|i| {
            let row = gen.row(i);
            [
                vec![F4::ZERO; n],
                row.to_vec(),
                row.iter().map(|&x| F4::A * x).collect(),
                row.iter().map(|&x| F4::B * x).collect(),
            ]
        })
        .collect();

    let mut word = vec![F4::ZERO; n];
    let mut digit = vec![0u8; k];
    let mut dir = vec![1i8; k];
    let mut focus: Vec<usize> = (0..=k).collect();

    loop {
        let j = focus[0];
        focus[0] = 0;
        if j == k {
            break;
        }
        let old = digit[j];
        let new = (old as i8 + dir[j]) as u8;
        digit[j] = new;
        if new == 0 || new == 3 {
            dir[j] = -dir[j];
            focus[j] = focus[j + 1];
            focus[j + 1] = j + 1;
        }
        let delta = (old ^ new) as usize;
        for (w, d) in word.iter_mut().zip(&scaled[j][delta]) {
            *w += *d;
        }
        visit(&word);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn repetition(delta: usize) -> LinearCode {
        // parity [I | 1]
        let h = Matrix::identity(delta - 1).hstack(&Matrix::ones(delta - 1, 1));
        LinearCode::from_parity(&h).unwrap()
    }

    /// Plain re-multiplication enumeration, used as an independent oracle
    /// for the Gray-walk enumerator.
    fn min_distance_naive(c: &LinearCode) -> usize {
        let k = c.k();
        let total = 4usize.pow(k as u32);
        let mut best = usize::MAX;
        for m in 1..total {
            let msg: Vec<F4> = (0..k)
                .map(|i| F4::from_bits(((m >> (2 * i)) & 3) as u8))
                .collect();
            let w = weight(&c.encode(&msg));
            best = best.min(w);
        }
        best
    }

    #[test]
    fn repetition_code_parameters() {
        for delta in 2..=6 {
            let c = repetition(delta);
            assert_eq!((c.n(), c.k()), (delta, 1));
            assert_eq!(c.min_distance().unwrap(), delta);
        }
    }

    #[test]
    fn gray_enumeration_matches_naive() {
        let g = Matrix::parse("1 0 1 1 a; 0 1 b a 1; 1 1 0 b 0");
        let c = LinearCode::from_generator(&g).unwrap();
        assert_eq!(c.min_distance().unwrap(), min_distance_naive(&c));

        let mut n_visited = 0u64;
        enumerate_nonzero_codewords(c.generator(), |w| {
            assert!(c.contains(w));
            n_visited += 1;
        });
        assert_eq!(n_visited, 4u64.pow(c.k() as u32) - 1);
    }

    #[test]
    fn weight_distribution_accounting() {
        let c = repetition(4);
        let wd = c.weight_distribution().unwrap();
        assert_eq!(wd.count(0), 1);
        assert_eq!(wd.count(4), 3);
        assert_eq!(wd.total(), 4);
        assert_eq!(wd.min_weight(), Some(4));
    }

    #[test]
    fn dual_of_repetition_is_single_parity_check() {
        let c = repetition(4);
        let d = c.dual();
        assert_eq!((d.n(), d.k()), (4, 3));
        assert_eq!(d.min_distance().unwrap(), 2);
        assert!(d.dual().same_code(&c));
    }

    #[test]
    fn dependent_parity_rows_are_dropped() {
        let h = Matrix::parse("1 0 1; 0 1 1; 1 1 0");
        let c = LinearCode::from_parity(&h).unwrap();
        assert_eq!((c.n(), c.k()), (3, 1));
    }

    #[test]
    fn zero_matrix_rejected() {
        assert!(LinearCode::from_parity(&Matrix::zeros(2, 5)).is_err());
        assert!(LinearCode::from_generator(&Matrix::zeros(1, 4)).is_err());
    }

    #[test]
    fn puncture_and_shorten_shapes() {
        let c = repetition(5);
        let p = c.puncture(&[4]).unwrap();
        assert_eq!((p.n(), p.k()), (4, 1));
        assert_eq!(p.min_distance().unwrap(), 4);

        let s = c.shorten(&[4]).unwrap();
        // A repetition codeword that is zero at one place is zero everywhere.
        assert_eq!(s.k(), 0);
    }

    #[test]
    fn full_puncture_rejected() {
        let c = repetition(3);
        assert!(c.puncture(&[0, 1, 2]).is_err());
        assert!(c.restrict(&[]).is_err());
    }

    #[test]
    fn restrict_is_puncture_of_complement() {
        let g = Matrix::parse("1 0 1 1 a; 0 1 b a 1");
        let c = LinearCode::from_generator(&g).unwrap();
        let r = c.restrict(&[0, 2, 4]).unwrap();
        let p = c.puncture(&[1, 3]).unwrap();
        assert!(r.same_code(&p));
    }

    #[test]
    fn distance_cap_is_enforced() {
        let g = Matrix::identity(15);
        let c = LinearCode::from_generator(&g).unwrap();
        match c.min_distance() {
            Err(Error::DistanceCap { dim, cap }) => {
                assert_eq!(dim, 15);
                assert_eq!(cap, DISTANCE_CAP);
            }
            other => panic!("expected cap refusal, got {other:?}"),
        }
    }

    #[test]
    fn mds_and_defect() {
        // [4,2,3] from the 2x4 parity block
        let h = Matrix::parse("1 0 1 1; 0 1 b a");
        let c = LinearCode::from_parity(&h).unwrap();
        assert_eq!(c.min_distance().unwrap(), 3);
        assert!(c.is_mds().unwrap());
        assert_eq!(c.defect().unwrap(), 0);
    }

    #[test]
    fn degenerate_coordinate_is_flagged_not_rejected() {
        let g = Matrix::parse("1 0 1 0; 0 1 1 0");
        let c = LinearCode::from_generator(&g).unwrap();
        assert!(c.is_degenerate());
        assert_eq!(c.k(), 2);
    }
}
