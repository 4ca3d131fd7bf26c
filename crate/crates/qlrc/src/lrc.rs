//! Locality machinery for `(r, δ)` locally repairable codes.
//!
//! A repair group is a coordinate set `R` whose restricted code has minimum
//! distance at least `δ`, so that any `δ − 1` erasures inside the group can
//! be repaired from the remaining symbols of the group alone. This module
//! verifies and discovers repair groups, evaluates the Singleton-type bound
//!
//! ```text
//! d ≤ n − k + 1 − (⌈k/r⌉ − 1)(δ − 1)
//! ```
//!
//! builds chains of dual subcodes and their residue codes, checks the
//! defect-based distance bounds, tests block-design structure of group
//! families, and performs local-first erasure repair.

use crate::codes::LinearCode;
use crate::galois::F4;
use crate::linalg::Matrix;
use crate::{Error, Result};

/// Alphabet size; everything in this crate is quaternary.
pub const Q: usize = 4;

/// No Singleton-optimal quaternary `(3,4)` code with `d = 12` can have more
/// repair groups than this; claims above it are refused outright.
pub const MAX_GROUPS_3_4_D12: usize = 21;

/// Candidate-support budget for repair-group discovery.
pub const DISCOVERY_BUDGET: u64 = 4_000_000;

/// Validated `(n, k, d, r, δ)` parameter set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LrcParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub r: usize,
    pub delta: usize,
}

impl LrcParams {
    pub fn new(n: usize, k: usize, d: usize, r: usize, delta: usize) -> Result<LrcParams> {
        if r < 1 || delta < 2 || k < 1 || n <= k {
            return Err(Error::Infeasible(format!(
                "need r ≥ 1, δ ≥ 2, k ≥ 1, n > k; got n={n} k={k} r={r} δ={delta}"
            )));
        }
        let bound = singleton_bound(n, k, r, delta)?;
        if d > bound {
            return Err(Error::Infeasible(format!(
                "distance {d} exceeds the Singleton-type bound {bound}"
            )));
        }
        Ok(LrcParams { n, k, d, r, delta })
    }
}

/// Singleton-type upper bound on the minimum distance of an `(r, δ)`-LRC.
pub fn singleton_bound(n: usize, k: usize, r: usize, delta: usize) -> Result<usize> {
    if k < 1 || r < 1 || delta < 2 || n <= k {
        return Err(Error::Infeasible(format!(
            "need k ≥ 1, r ≥ 1, δ ≥ 2, n > k; got n={n} k={k} r={r} δ={delta}"
        )));
    }
    let groups_needed = k.div_ceil(r);
    let penalty = (groups_needed - 1) * (delta - 1);
    let base = n - k + 1;
    if penalty >= base {
        return Err(Error::Infeasible(format!(
            "parameters infeasible: n−k+1 = {base} ≤ locality penalty {penalty}"
        )));
    }
    Ok(base - penalty)
}

/// One repair group: a support plus the local parity rows, i.e. a generator
/// of the dual subcode supported inside the group, restricted to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairGroup {
    pub support: Vec<usize>,
    pub local_parity: Matrix,
}

/// The locality certificate of a code: a covering family of repair groups.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepairGroupSet {
    pub groups: Vec<RepairGroup>,
}

impl RepairGroupSet {
    /// Builds a group set from plain supports, deriving each group's local
    /// parity rows from the code (the dual codewords supported inside the
    /// group, restricted to it).
    pub fn from_supports(code: &LinearCode, supports: &[Vec<usize>]) -> Result<RepairGroupSet> {
        if supports.is_empty() {
            return Err(Error::invalid("empty repair-group list"));
        }
        let groups = supports
            .iter()
            .map(|s| {
                let basis = dual_subcode_basis(code, s);
                Ok(RepairGroup {
                    support: sorted(s),
                    local_parity: basis.select_cols(&sorted(s)),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(RepairGroupSet { groups })
    }

    pub fn supports(&self) -> Vec<Vec<usize>> {
        self.groups.iter().map(|g| g.support.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.groups.len()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }
}

fn sorted(v: &[usize]) -> Vec<usize> {
    let mut v = v.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

/// Full-length basis of the dual subcode `{u ∈ C⊥ : supp(u) ⊆ support}`.
pub fn dual_subcode_basis(code: &LinearCode, support: &[usize]) -> Matrix {
    let h = code.parity();
    let complement: Vec<usize> = (0..code.n()).filter(|i| !support.contains(i)).collect();
    if complement.is_empty() {
        return h.clone();
    }
    let outside = h.select_cols(&complement);
    // Row combinations of H vanishing outside the support.
    let combos = outside.left_null_space();
    combos.matmul(h).row_basis()
}

/// Per-group verification outcome.
#[derive(Clone, Debug)]
pub struct GroupCheck {
    pub support: Vec<usize>,
    pub size_ok: bool,
    pub local_distance: Option<usize>,
    pub local_distance_ok: bool,
}

/// Report of the three locality conditions: cover, group size, local
/// distance.
#[derive(Clone, Debug)]
pub struct LocalityReport {
    pub per_group: Vec<GroupCheck>,
    pub cover_ok: bool,
}

impl LocalityReport {
    pub fn all_ok(&self) -> bool {
        self.cover_ok
            && self
                .per_group
                .iter()
                .all(|g| g.size_ok && g.local_distance_ok)
    }
}

/// Checks the covering condition, the size bound `|R| ≤ r + δ − 1` and the
/// local distance condition `d(C_R) ≥ δ` for every group.
pub fn verify_locality(
    code: &LinearCode,
    groups: &RepairGroupSet,
    r: usize,
    delta: usize,
) -> Result<LocalityReport> {
    if groups.is_empty() {
        return Err(Error::invalid("empty repair-group list"));
    }
    let mut covered = vec![false; code.n()];
    let mut per_group = Vec::with_capacity(groups.len());
    for g in &groups.groups {
        for &i in &g.support {
            if i >= code.n() {
                return Err(Error::invalid(format!(
                    "group coordinate {i} out of range for length {}",
                    code.n()
                )));
            }
            covered[i] = true;
        }
        let size_ok = g.support.len() <= r + delta - 1;
        let restriction = code.restrict(&g.support)?;
        let local_distance = if restriction.k() == 0 || restriction.is_degenerate() {
            None
        } else {
            Some(restriction.min_distance()?)
        };
        let local_distance_ok = local_distance.is_some_and(|d| d >= delta);
        per_group.push(GroupCheck {
            support: g.support.clone(),
            size_ok,
            local_distance,
            local_distance_ok,
        });
    }
    Ok(LocalityReport {
        per_group,
        cover_ok: covered.iter().all(|&c| c),
    })
}

/// Result of repair-group discovery.
#[derive(Clone, Debug)]
pub struct Discovery {
    /// Inclusion-minimal supports whose restriction has distance ≥ δ and no
    /// identically-zero coordinate, sizes δ … r+δ−1, lexicographic order.
    pub supports: Vec<Vec<usize>>,
    /// Whether the union of the supports is all of `[n]`.
    pub covers: bool,
}

/// Exhaustive bottom-up search for repair groups.
///
/// Supports are enumerated by size from δ up to `r + δ − 1`; a support whose
/// restriction has minimum distance at least δ and no identically-zero
/// coordinate passes, and supersets of passing supports are skipped so the
/// result is the inclusion-minimal family. Group size is deliberately not
/// assumed to be exactly `r + δ − 1`: that property is a theorem about
/// optimal codes and is checked downstream, not presupposed here.
pub fn discover_repair_groups(code: &LinearCode, r: usize, delta: usize) -> Result<Discovery> {
    let n = code.n();
    let max_size = r + delta - 1;
    let mut candidates: u64 = 0;
    for size in delta..=max_size.min(n) {
        candidates = candidates.saturating_add(binomial(n, size));
    }
    if candidates > DISCOVERY_BUDGET {
        return Err(Error::DiscoveryBudget {
            candidates,
            budget: DISCOVERY_BUDGET,
        });
    }

    let mut found: Vec<Vec<usize>> = Vec::new();
    let mut found_masks: Vec<u128> = Vec::new();
    for size in delta..=max_size.min(n) {
        let mut combo = Combinations::new(n, size);
        while let Some(support) = combo.next() {
            let mask = mask_of(support);
            if found_masks.iter().any(|&m| m & mask == m) {
                continue; // superset of a smaller group
            }
            let restriction = code.restrict(support)?;
            if restriction.k() == 0 || restriction.is_degenerate() {
                continue;
            }
            if restriction.min_distance()? >= delta {
                found.push(support.to_vec());
                found_masks.push(mask);
            }
        }
    }
    let union = found_masks.iter().fold(0u128, |acc, m| acc | m);
    let covers = union.count_ones() as usize == n;
    Ok(Discovery {
        supports: found,
        covers,
    })
}

fn mask_of(support: &[usize]) -> u128 {
    support.iter().fold(0u128, |acc, &i| {
        assert!(i < 128);
        acc | (1u128 << i)
    })
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u64) / (i as u64 + 1);
    }
    acc
}

/// Lexicographic k-subset enumerator over `0..n`.
struct Combinations {
    n: usize,
    idx: Vec<usize>,
    started: bool,
    done: bool,
}

impl Combinations {
    fn new(n: usize, k: usize) -> Combinations {
        Combinations {
            n,
            idx: (0..k).collect(),
            started: false,
            done: k > n,
        }
    }

    fn next(&mut self) -> Option<&[usize]> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            return Some(&self.idx);
        }
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                return None;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                return Some(&self.idx);
            }
        }
    }
}

/// A chain of dual subcodes: each step grows the cumulative sum space by at
/// least `δ − 1` dimensions.
#[derive(Clone, Debug)]
pub struct Chain {
    pub supports: Vec<Vec<usize>>,
    /// Full-length basis of each subcode.
    pub bases: Vec<Matrix>,
    /// Dimension of the cumulative sum space after each step.
    pub running_dims: Vec<usize>,
}

impl Chain {
    pub fn len(&self) -> usize {
        self.supports.len()
    }

    pub fn is_empty(&self) -> bool {
        self.supports.is_empty()
    }
}

/// Builds a maximal chain greedily over the discovered repair groups.
///
/// Ties are broken by lexicographically smallest support so that chains, and
/// hence residue codes, are reproducible. A maximal chain has at least
/// `⌈k/r⌉` subcodes; that lower bound is asserted.
pub fn build_chain(
    code: &LinearCode,
    r: usize,
    delta: usize,
    seed: Option<&[usize]>,
) -> Result<Chain> {
    let discovery = discover_repair_groups(code, r, delta)?;
    build_chain_from_groups(code, r, delta, &discovery.supports, seed)
}

/// Same as [`build_chain`] but over a caller-provided group family (used
/// when discovery has already run, or for declared groups).
pub fn build_chain_from_groups(
    code: &LinearCode,
    r: usize,
    delta: usize,
    groups: &[Vec<usize>],
    seed: Option<&[usize]>,
) -> Result<Chain> {
    if groups.is_empty() {
        return Err(Error::invalid("no repair groups available for a chain"));
    }
    let mut ordered: Vec<Vec<usize>> = groups.iter().map(|g| sorted(g)).collect();
    ordered.sort();
    if let Some(seed) = seed {
        let seed = sorted(seed);
        if let Some(pos) = ordered.iter().position(|g| *g == seed) {
            let g = ordered.remove(pos);
            ordered.insert(0, g);
        } else {
            return Err(Error::invalid("seed support is not a discovered group"));
        }
    }

    let bases: Vec<Matrix> = ordered
        .iter()
        .map(|g| dual_subcode_basis(code, g))
        .collect();

    let mut chain = Chain {
        supports: Vec::new(),
        bases: Vec::new(),
        running_dims: Vec::new(),
    };
    let mut sum_space: Option<Matrix> = None;
    let mut used = vec![false; ordered.len()];
    loop {
        let mut advanced = false;
        for i in 0..ordered.len() {
            if used[i] {
                continue;
            }
            let (candidate, old_dim) = match &sum_space {
                None => (bases[i].clone(), 0),
                Some(s) => (s.vstack(&bases[i]), s.rows()),
            };
            let grown = candidate.row_basis();
            if grown.rows() >= old_dim + delta - 1 {
                chain.supports.push(ordered[i].clone());
                chain.bases.push(bases[i].clone());
                chain.running_dims.push(grown.rows());
                sum_space = Some(grown);
                used[i] = true;
                advanced = true;
                break;
            }
        }
        if !advanced {
            break;
        }
    }

    let need = code.k().div_ceil(r);
    assert!(
        chain.len() >= need,
        "maximal chain of length {} violates the ⌈k/r⌉ = {need} lower bound",
        chain.len()
    );
    Ok(chain)
}

/// Shortens the code on the supports of the first `⌊(k−1)/r⌋` chain
/// subcodes; for a Singleton-optimal code the result is an MDS code.
pub fn residue_code(code: &LinearCode, chain: &Chain, r: usize) -> Result<LinearCode> {
    let m = (code.k() - 1) / r;
    if chain.len() < m {
        return Err(Error::ChainTooShort {
            need: m,
            found: chain.len(),
        });
    }
    if m == 0 {
        return Ok(code.clone());
    }
    let mut region: Vec<usize> = Vec::new();
    for basis in chain.bases.iter().take(m) {
        for j in 0..basis.cols() {
            if (0..basis.rows()).any(|i| !basis[(i, j)].is_zero()) {
                region.push(j);
            }
        }
    }
    region.sort_unstable();
    region.dedup();
    code.shorten(&region)
}

/// True iff every `t`-subset of `0..v` lies in exactly `lambda` of the
/// groups: the defining property of a `t-(v, s, λ)` block design.
pub fn design_check(groups: &[Vec<usize>], t: usize, v: usize, lambda: usize) -> bool {
    if groups.iter().flatten().any(|&i| i >= v) {
        return false;
    }
    let masks: Vec<u128> = groups.iter().map(|g| mask_of(g)).collect();
    let mut combo = Combinations::new(v, t);
    while let Some(subset) = combo.next() {
        let sub_mask = mask_of(subset);
        let count = masks.iter().filter(|&&m| m & sub_mask == sub_mask).count();
        if count != lambda {
            return false;
        }
    }
    true
}

/// Outcome of erasure repair.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepairOutcome {
    /// All erasures filled; positions are split by how they were repaired.
    Repaired {
        word: Vec<F4>,
        local: Vec<usize>,
        global: Vec<usize>,
    },
    /// The global system is underdetermined.
    Unrecoverable,
    /// The unerased symbols violate the parity checks.
    Inconsistent,
}

/// Repairs erased positions (`None` entries), local groups first.
///
/// Groups are scanned in listed order to a fixpoint: whenever the local
/// parity system of a group determines its erased symbols uniquely they are
/// filled in. Remaining erasures go to a single global solve against the
/// full parity-check matrix. Local solve order cannot change the final
/// verdict, only the attribution, because each successful local solve is
/// forced.
pub fn repair_erasures(
    code: &LinearCode,
    groups: &RepairGroupSet,
    word: &[Option<F4>],
) -> Result<RepairOutcome> {
    if word.len() != code.n() {
        return Err(Error::shape(format!(
            "word length {} does not match code length {}",
            word.len(),
            code.n()
        )));
    }
    let mut current: Vec<Option<F4>> = word.to_vec();
    let mut local_fixed: Vec<usize> = Vec::new();

    loop {
        let mut progress = false;
        for group in &groups.groups {
            let erased: Vec<usize> = group
                .support
                .iter()
                .copied()
                .filter(|&i| current[i].is_none())
                .collect();
            if erased.is_empty() {
                continue;
            }
            let capacity = group.local_parity.rows();
            if erased.len() > capacity {
                continue;
            }
            // Local system: unknown columns vs. syndrome of known columns.
            let pos_in_group: Vec<usize> = erased
                .iter()
                .map(|&i| group.support.iter().position(|&s| s == i).unwrap())
                .collect();
            let unknown = group.local_parity.select_cols(&pos_in_group);
            let mut rhs = vec![F4::ZERO; group.local_parity.rows()];
            for (j, &coord) in group.support.iter().enumerate() {
                if let Some(v) = current[coord] {
                    for (i, r) in rhs.iter_mut().enumerate() {
                        *r += group.local_parity[(i, j)] * v;
                    }
                }
            }
            match unknown.solve_affine(&rhs) {
                Some((x, kernel)) if kernel.rows() == 0 => {
                    for (slot, &coord) in x.iter().zip(&erased) {
                        current[coord] = Some(*slot);
                        local_fixed.push(coord);
                    }
                    progress = true;
                }
                Some(_) => {} // underdetermined locally; leave for global solve
                None => return Ok(RepairOutcome::Inconsistent),
            }
        }
        if !progress {
            break;
        }
    }

    let erased: Vec<usize> = (0..code.n()).filter(|&i| current[i].is_none()).collect();
    let mut global_fixed: Vec<usize> = Vec::new();
    if !erased.is_empty() {
        let h = code.parity();
        let unknown = h.select_cols(&erased);
        let mut rhs = vec![F4::ZERO; h.rows()];
        for (j, slot) in current.iter().enumerate() {
            if let Some(v) = slot {
                for (i, r) in rhs.iter_mut().enumerate() {
                    *r += h[(i, j)] * *v;
                }
            }
        }
        match unknown.solve_affine(&rhs) {
            Some((x, kernel)) if kernel.rows() == 0 => {
                for (slot, &coord) in x.iter().zip(&erased) {
                    current[coord] = Some(*slot);
                    global_fixed.push(coord);
                }
            }
            Some(_) => return Ok(RepairOutcome::Unrecoverable),
            None => return Ok(RepairOutcome::Inconsistent),
        }
    }

    let full: Vec<F4> = current.into_iter().map(|x| x.unwrap()).collect();
    if !code.contains(&full) {
        return Ok(RepairOutcome::Inconsistent);
    }
    local_fixed.sort_unstable();
    global_fixed.sort_unstable();
    Ok(RepairOutcome::Repaired {
        word: full,
        local: local_fixed,
        global: global_fixed,
    })
}

/// Verdict of the `r | (k−1)` distance dichotomy for optimal codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyCheck {
    pub divides: bool,
    pub limit: usize,
    pub ok: bool,
}

/// Residue-code verification record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueCheck {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    pub expected_codimension: usize,
    pub codimension_ok: bool,
    pub is_mds: bool,
    pub dim_lower_bound_ok: bool,
}

/// Structural checks forced on optimal codes with `d > q`: uniform group
/// size `r + δ − 1`, and pairwise-disjoint groups when `k > 2r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuralCheck {
    pub sizes_exact: bool,
    pub disjoint_required: bool,
    pub disjoint_ok: bool,
    pub group_count_ok: bool,
}

/// Full assessment of a code against the `(r, δ)` optimality criteria.
#[derive(Clone, Debug)]
pub struct Assessment {
    pub params: LrcParams,
    pub bound: usize,
    pub singleton_gap: usize,
    pub defect: usize,
    /// `d ≤ q(s+1)` for dimension ≥ 2; trivially true for k = 1.
    pub defect_bound_ok: bool,
    /// Distance dichotomy; populated only when the gap is zero.
    pub dichotomy: Option<DichotomyCheck>,
    pub locality: LocalityReport,
    pub group_sizes: Vec<usize>,
    pub uniform_group_size: bool,
    pub structural: Option<StructuralCheck>,
    pub residue: Option<ResidueCheck>,
}

impl Assessment {
    pub fn is_optimal(&self) -> bool {
        self.singleton_gap == 0 && self.locality.all_ok()
    }
}

/// Assesses a code at `(r, δ)`, discovering repair groups and computing the
/// exact distance.
pub fn verify_optimal(code: &LinearCode, r: usize, delta: usize) -> Result<Assessment> {
    verify_optimal_with(code, r, delta, None, None)
}

/// Assessment with optional externally-certified distance and/or declared
/// repair groups (needed when exhaustive enumeration or discovery is out of
/// reach).
pub fn verify_optimal_with(
    code: &LinearCode,
    r: usize,
    delta: usize,
    distance: Option<usize>,
    declared: Option<&RepairGroupSet>,
) -> Result<Assessment> {
    let d = match distance {
        Some(d) => d,
        None => code.min_distance()?,
    };
    let n = code.n();
    let k = code.k();
    let bound = singleton_bound(n, k, r, delta)?;
    let gap = bound.saturating_sub(d);
    let defect = n - k + 1 - d;
    let defect_bound_ok = k < 2 || d <= Q * defect + Q;

    let (groups, discovered_supports) = match declared {
        Some(g) => (g.clone(), g.supports()),
        None => {
            let discovery = discover_repair_groups(code, r, delta)?;
            let set = RepairGroupSet::from_supports(code, &discovery.supports)?;
            (set, discovery.supports)
        }
    };
    let locality = verify_locality(code, &groups, r, delta)?;
    let group_sizes: Vec<usize> = groups.groups.iter().map(|g| g.support.len()).collect();
    let uniform_group_size = group_sizes.windows(2).all(|w| w[0] == w[1]);

    let dichotomy = (gap == 0).then(|| {
        let divides = (k - 1) % r == 0;
        let limit = if divides { delta * Q } else { Q };
        DichotomyCheck {
            divides,
            limit,
            ok: d <= limit,
        }
    });

    let structural = (gap == 0 && d > Q).then(|| {
        let sizes_exact = group_sizes.iter().all(|&s| s == r + delta - 1);
        let disjoint_required = k > 2 * r;
        let disjoint_ok = !disjoint_required || pairwise_disjoint(&discovered_supports);
        let group_count_ok =
            !(r == 3 && delta == 4 && d == 12) || groups.len() <= MAX_GROUPS_3_4_D12;
        StructuralCheck {
            sizes_exact,
            disjoint_required,
            disjoint_ok,
            group_count_ok,
        }
    });

    // Residue verification, when the code is optimal and small enough for
    // the chain machinery to run.
    let residue = if gap == 0 {
        match build_chain_from_groups(code, r, delta, &discovered_supports, None) {
            Ok(chain) => residue_check(code, &chain, r, delta).ok(),
            Err(_) => None,
        }
    } else {
        None
    };

    Ok(Assessment {
        params: LrcParams { n, k, d, r, delta },
        bound,
        singleton_gap: gap,
        defect,
        defect_bound_ok,
        dichotomy,
        locality,
        group_sizes,
        uniform_group_size,
        structural,
        residue,
    })
}

fn pairwise_disjoint(supports: &[Vec<usize>]) -> bool {
    let masks: Vec<u128> = supports.iter().map(|s| mask_of(s)).collect();
    for i in 0..masks.len() {
        for j in i + 1..masks.len() {
            if masks[i] & masks[j] != 0 {
                return false;
            }
        }
    }
    true
}

/// Builds the residue code over a chain and verifies its MDS contract.
pub fn residue_check(
    code: &LinearCode,
    chain: &Chain,
    r: usize,
    delta: usize,
) -> Result<ResidueCheck> {
    let residue = residue_code(code, chain, r)?;
    let m = (code.k() - 1) / r;
    let expected_codim = code.n() - code.k() - m * (delta - 1);
    let d = residue.min_distance()?;
    let codim = residue.n() - residue.k();
    Ok(ResidueCheck {
        n: residue.n(),
        k: residue.k(),
        d,
        expected_codimension: expected_codim,
        codimension_ok: codim == expected_codim,
        is_mds: d == residue.n() - residue.k() + 1,
        dim_lower_bound_ok: residue.k() + m * r >= code.k(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::Matrix;

    /// The [9,5,3] two-group example code.
    fn example_code() -> LinearCode {
        let h = Matrix::parse(
            "1 1 1 1 0 0 0 0 0;
             0 1 a b 1 0 0 0 0;
             0 0 0 0 0 1 1 1 1;
             0 0 0 0 1 1 a b 0",
        );
        LinearCode::from_parity(&h).unwrap()
    }

    #[test]
    fn singleton_bound_values() {
        assert_eq!(singleton_bound(9, 5, 3, 3).unwrap(), 3);
        assert_eq!(singleton_bound(18, 4, 3, 4).unwrap(), 12);
        // k ≤ r reduces to the classical Singleton bound
        assert_eq!(singleton_bound(10, 4, 4, 2).unwrap(), 7);
        assert!(singleton_bound(5, 4, 1, 4).is_err());
    }

    #[test]
    fn example_code_is_an_optimal_3_3_lrc() {
        let c = example_code();
        assert_eq!((c.n(), c.k()), (9, 5));
        assert_eq!(c.min_distance().unwrap(), 3);

        let groups =
            RepairGroupSet::from_supports(&c, &[vec![0, 1, 2, 3, 4], vec![4, 5, 6, 7, 8]])
                .unwrap();
        let report = verify_locality(&c, &groups, 3, 3).unwrap();
        assert!(report.all_ok());

        let assessment = verify_optimal(&c, 3, 3).unwrap();
        assert!(assessment.is_optimal());
        assert_eq!(assessment.singleton_gap, 0);
    }

    #[test]
    fn missing_cover_is_reported() {
        let c = example_code();
        let groups = RepairGroupSet::from_supports(&c, &[vec![0, 1, 2, 3, 4]]).unwrap();
        let report = verify_locality(&c, &groups, 3, 3).unwrap();
        assert!(!report.cover_ok);
        assert!(!report.all_ok());
        assert!(report.per_group[0].local_distance_ok);
    }

    #[test]
    fn empty_group_list_rejected() {
        let c = example_code();
        assert!(RepairGroupSet::from_supports(&c, &[]).is_err());
    }

    #[test]
    fn chain_and_residue_of_example_code() {
        let c = example_code();
        let chain = build_chain(&c, 3, 3, None).unwrap();
        assert!(chain.len() >= 2); // ⌈5/3⌉ = 2
        let residue = residue_code(&c, &chain, 3).unwrap();
        assert_eq!((residue.n(), residue.k()), (4, 2));
        assert_eq!(residue.min_distance().unwrap(), 3);
        assert!(residue.is_mds().unwrap());

        let check = residue_check(&c, &chain, 3, 3).unwrap();
        assert!(check.codimension_ok && check.is_mds && check.dim_lower_bound_ok);
    }

    #[test]
    fn residue_of_mds_code_with_empty_prefix_is_itself() {
        // k ≤ r: m = 0, residue is the code itself.
        let h = Matrix::parse("1 0 1 1; 0 1 b a");
        let c = LinearCode::from_parity(&h).unwrap();
        let chain = Chain {
            supports: vec![],
            bases: vec![],
            running_dims: vec![],
        };
        let residue = residue_code(&c, &chain, 3).unwrap();
        assert!(residue.same_code(&c));
    }

    #[test]
    fn design_check_rejects_uncovered_pairs() {
        let groups = vec![vec![0, 1, 2, 3], vec![4, 5, 6, 7]];
        assert!(!design_check(&groups, 2, 8, 1));
        // Trivial 1-design: every point in exactly one group.
        assert!(design_check(&groups, 1, 8, 1));
    }

    #[test]
    fn local_repair_on_the_example_code() {
        let c = example_code();
        let groups =
            RepairGroupSet::from_supports(&c, &[vec![0, 1, 2, 3, 4], vec![4, 5, 6, 7, 8]])
                .unwrap();
        let codeword = c.encode(&[F4::ONE, F4::A, F4::B, F4::ZERO, F4::ONE]);

        // Erase two symbols in the first group: locally repairable (δ−1 = 2).
        let mut word: Vec<Option<F4>> = codeword.iter().copied().map(Some).collect();
        word[1] = None;
        word[3] = None;
        match repair_erasures(&c, &groups, &word).unwrap() {
            RepairOutcome::Repaired { word, local, global } => {
                assert_eq!(word, codeword);
                assert_eq!(local, vec![1, 3]);
                assert!(global.is_empty());
            }
            other => panic!("expected repair, got {other:?}"),
        }

        // No erasures: identity.
        let word: Vec<Option<F4>> = codeword.iter().copied().map(Some).collect();
        match repair_erasures(&c, &groups, &word).unwrap() {
            RepairOutcome::Repaired { word, local, global } => {
                assert_eq!(word, codeword);
                assert!(local.is_empty() && global.is_empty());
            }
            other => panic!("expected identity repair, got {other:?}"),
        }
    }

    #[test]
    fn inconsistent_word_is_detected() {
        let c = example_code();
        let groups =
            RepairGroupSet::from_supports(&c, &[vec![0, 1, 2, 3, 4], vec![4, 5, 6, 7, 8]])
                .unwrap();
        let mut codeword = c.encode(&[F4::ONE, F4::A, F4::B, F4::ZERO, F4::ONE]);
        codeword[0] += F4::ONE; // corrupt
        let word: Vec<Option<F4>> = codeword.iter().copied().map(Some).collect();
        assert_eq!(
            repair_erasures(&c, &groups, &word).unwrap(),
            RepairOutcome::Inconsistent
        );
    }

    #[test]
    fn discovery_budget_refusal() {
        let g = Matrix::identity(100);
        let c = LinearCode::from_generator(&g).unwrap();
        match discover_repair_groups(&c, 20, 10) {
            Err(Error::DiscoveryBudget { .. }) => {}
            other => panic!("expected budget refusal, got {other:?}"),
        }
    }

    #[test]
    fn combinations_enumerator_counts() {
        let mut combo = Combinations::new(6, 3);
        let mut count = 0;
        while combo.next().is_some() {
            count += 1;
        }
        assert_eq!(count, 20);
        assert_eq!(binomial(21, 5), 20349);
    }
}
