use super::Subspace;
use crate::error::{Error, Result};
use crate::field::Elem;

/// A scalar `α` with `dim(U_i ∩ αU_j) = dim` exceeding the Sidon limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IntersectionWitness {
    pub i: usize,
    pub j: usize,
    pub alpha: Elem,
    pub alpha_log: u32,
    pub dim: usize,
}

// dim(U ∩ αV) only depends on the class αF_q^*, and the smallest log in each
// class lies below (q^m - 1)/(q - 1).
fn class_sweep(u: &Subspace) -> impl Iterator<Item = (u32, Elem)> + '_ {
    let f = u.ambient().field();
    (0..u.ambient().projective_count()).map(move |a| (a, f.exp(a as u64)))
}

/// First `α ∉ F_q` (by increasing log) with `dim(U ∩ αU) ≥ 2`.
pub fn sidon_witness(u: &Subspace) -> Option<IntersectionWitness> {
    class_sweep(u).skip(1).find_map(|(a, alpha)| {
        let dim = u.scaled_overlap_dim(u, alpha);
        (dim >= 2).then_some(IntersectionWitness {
            i: 0,
            j: 0,
            alpha,
            alpha_log: a,
            dim,
        })
    })
}

/// Whether `dim(U ∩ αU) ≤ 1` for every `α ∈ F_{q^m} \ F_q`.
pub fn is_sidon(u: &Subspace) -> bool {
    sidon_witness(u).is_none()
}

/// Checks the multi-Sidon conditions over all pairs `i ≤ j`.
///
/// Pairs are visited in lexicographic order and, within a pair, `α` by
/// increasing log; the first violation is returned. Off-diagonal pairs are
/// symmetric (`dim(U_i ∩ αU_j) = dim(U_j ∩ α^{-1}U_i)`), so `j < i` is skipped.
pub fn multi_sidon_witness(spaces: &[Subspace]) -> Result<Option<IntersectionWitness>> {
    for (i, u) in spaces.iter().enumerate() {
        for (j, v) in spaces.iter().enumerate().skip(i + 1) {
            if !u.same_ambient(v) {
                return Err(Error::AmbientMismatch);
            }
            if u.dim() != v.dim() {
                return Err(Error::DimensionMismatch(u.dim(), v.dim()));
            }
            if u == v {
                return Err(Error::DuplicateSubspace(i, j));
            }
        }
    }
    for (i, u) in spaces.iter().enumerate() {
        if let Some(w) = sidon_witness(u) {
            return Ok(Some(IntersectionWitness { i, j: i, ..w }));
        }
        for (j, v) in spaces.iter().enumerate().skip(i + 1) {
            let hit = class_sweep(u).find_map(|(a, alpha)| {
                let dim = u.scaled_overlap_dim(v, alpha);
                (dim >= 2).then_some(IntersectionWitness {
                    i,
                    j,
                    alpha,
                    alpha_log: a,
                    dim,
                })
            });
            if hit.is_some() {
                return Ok(hit);
            }
        }
    }
    Ok(None)
}

pub fn is_multi_sidon(spaces: &[Subspace]) -> Result<bool> {
    Ok(multi_sidon_witness(spaces)?.is_none())
}

/// Number of distinct subspaces `αU`, i.e. `(q^m - 1)/(q^t - 1)` where
/// `F_{q^t}^*` is the stabilizer of `U`.
pub fn orbit_size(u: &Subspace) -> usize {
    let f = u.ambient().field();
    let classes = u.ambient().projective_count();
    // the stabilizer is ⟨ω^P⟩ for the smallest P > 0 fixing U, and P | classes
    (1..=classes)
        .filter(|a| classes.is_multiple_of(*a))
        .find(|&a| u.scale(f.exp(a as u64)) == *u)
        .unwrap_or(classes) as usize
}

/// The orbit `{αU : α ∈ F_{q^m}^*}` as a list of distinct subspaces, ordered
/// by the smallest log of `α` producing each.
pub fn orbit(u: &Subspace) -> Vec<Subspace> {
    let f = u.ambient().field();
    (0..orbit_size(u) as u64)
        .map(|a| u.scale(f.exp(a)))
        .collect()
}
