use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;

use super::sidon::orbit_size;
use super::{Ambient, Subspace};
use crate::error::{Error, Result};
use crate::field::{gaussian_binomial, Elem};

/// Minimum subspace distance of a cyclic code with the pair that attains it:
/// `d(U_i, αU_j) = distance`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MinDistance {
    pub distance: usize,
    pub i: usize,
    pub j: usize,
    pub alpha: Elem,
}

/// Minimum distance of `⋃ C_{U_i}`, sweeping `α` against fixed representatives.
///
/// `d(αU, βV) = d(U, α^{-1}βV)`, so pairs `(U_i, αU_j)` with `i ≤ j` cover every
/// pair of distinct codewords. Ties keep the first hit in `(i, j, log α)` order.
pub fn code_min_distance(representatives: &[Subspace]) -> Result<MinDistance> {
    let first = representatives.first().ok_or(Error::SingleSubspaceCode)?;
    for v in &representatives[1..] {
        if !first.same_ambient(v) {
            return Err(Error::AmbientMismatch);
        }
        if first.dim() != v.dim() {
            return Err(Error::DimensionMismatch(first.dim(), v.dim()));
        }
    }
    let amb = first.ambient();
    let f = amb.field();
    let k = first.dim();
    let mut best: Option<MinDistance> = None;
    for (i, u) in representatives.iter().enumerate() {
        for (j, v) in representatives.iter().enumerate().skip(i) {
            for a in 0..amb.projective_count() {
                let alpha = f.exp(a as u64);
                let shared = u.scaled_overlap_dim(v, alpha);
                if shared == k {
                    if i == j {
                        // αU = U is the same codeword
                        continue;
                    }
                    return Err(Error::OrbitsOverlap(i, j));
                }
                let distance = 2 * (k - shared);
                if best.is_none_or(|b| distance < b.distance) {
                    best = Some(MinDistance {
                        distance,
                        i,
                        j,
                        alpha,
                    });
                }
            }
        }
    }
    best.ok_or(Error::SingleSubspaceCode)
}

/// A multi-orbit cyclic subspace code `⋃_i C_{U_i}` given by its representatives.
#[derive(Clone, Debug)]
pub struct CyclicSubspaceCode {
    representatives: Vec<Subspace>,
    orbit_sizes: Vec<usize>,
    min_distance: MinDistance,
}

impl CyclicSubspaceCode {
    /// Validates equal dimensions and pairwise disjoint orbits, and computes the
    /// minimum distance.
    pub fn new(representatives: Vec<Subspace>) -> Result<Self> {
        let min_distance = code_min_distance(&representatives)?;
        let orbit_sizes = representatives.iter().map(orbit_size).collect();
        Ok(CyclicSubspaceCode {
            representatives,
            orbit_sizes,
            min_distance,
        })
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        self.representatives[0].ambient()
    }

    pub fn representatives(&self) -> &[Subspace] {
        &self.representatives
    }

    pub fn orbit_sizes(&self) -> &[usize] {
        &self.orbit_sizes
    }

    /// Number of orbits `r`.
    pub fn orbit_count(&self) -> usize {
        self.representatives.len()
    }

    pub fn dim(&self) -> usize {
        self.representatives[0].dim()
    }

    pub fn min_distance(&self) -> usize {
        self.min_distance.distance
    }

    pub fn min_distance_witness(&self) -> MinDistance {
        self.min_distance
    }

    /// Total number of subspaces in the code.
    pub fn size(&self) -> usize {
        self.orbit_sizes.iter().sum()
    }

    /// Whether every orbit has the full length `(q^m - 1)/(q - 1)`.
    pub fn is_full_length(&self) -> bool {
        let full = self.ambient().projective_count() as usize;
        self.orbit_sizes.iter().all(|&s| s == full)
    }
}

/// Sphere-packing bound on the size of a code in `G_q(m, k)` with minimum distance `d`:
/// `[m, k-d/2+1]_q / [k, k-d/2+1]_q`.
pub fn sphere_packing_bound(q: u64, m: u32, k: u32, d: u32) -> Result<BigRational> {
    if !d.is_multiple_of(2) || d / 2 > k || k > m {
        return Err(Error::InvalidParams(format!(
            "need even d <= 2k and k <= m, got m={m} k={k} d={d}"
        )));
    }
    let t = k - d / 2 + 1;
    let den = gaussian_binomial(k, t, q);
    if den.is_zero() {
        return Err(Error::InvalidParams(
            "distance zero leaves the bound undefined".into(),
        ));
    }
    Ok(BigRational::new(
        gaussian_binomial(m, t, q).into(),
        den.into(),
    ))
}

/// Bound on the number of full-length orbits: each contributes
/// `(q^m - 1)/(q - 1)` codewords to the sphere-packing budget.
pub fn orbit_count_bound(q: u64, m: u32, k: u32, d: u32) -> Result<BigRational> {
    let full = (BigUint::from(q).pow(m) - 1u32) / (q - 1);
    Ok(sphere_packing_bound(q, m, k, d)? / BigRational::from_integer(full.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subspace::orbit;

    /// Brute-force minimum distance over all pairs of distinct orbit members.
    fn brute_min_distance(reps: &[Subspace]) -> usize {
        let members: Vec<Subspace> = reps.iter().flat_map(orbit).collect();
        let mut best = usize::MAX;
        for (a, u) in members.iter().enumerate() {
            for v in &members[a + 1..] {
                assert_ne!(u, v);
                let common = u.elements().iter().filter(|&&x| v.contains(x)).count();
                best = best.min(u.dim() + v.dim() - 2 * u.ambient().log_q(common));
            }
        }
        best
    }

    #[test]
    fn subfield_orbit_distance_matches_brute_force() {
        let amb = Ambient::new(2, 4).unwrap();
        let u = Subspace::subfield(&amb, 4).unwrap();
        let code = CyclicSubspaceCode::new(vec![u.clone()]).unwrap();
        assert_eq!(code.orbit_sizes(), &[5]);
        assert_eq!(code.min_distance(), brute_min_distance(&[u]));
        // the orbit is a spread: distinct cosets of F_4^* meet only in 0
        assert_eq!(code.min_distance(), 4);
    }

    #[test]
    fn random_two_dim_subspace_matches_brute_force() {
        let amb = Ambient::new(2, 5).unwrap();
        let f = amb.field();
        for (a, b) in [(0u64, 1u64), (0, 3), (2, 9), (1, 17)] {
            let u = Subspace::span(&amb, &[f.exp(a), f.exp(b)]);
            let code = CyclicSubspaceCode::new(vec![u.clone()]).unwrap();
            assert_eq!(code.min_distance(), brute_min_distance(&[u]));
        }
    }

    #[test]
    fn whole_field_code_rejected() {
        let amb = Ambient::new(3, 2).unwrap();
        let u = Subspace::subfield(&amb, 9).unwrap();
        assert!(matches!(
            CyclicSubspaceCode::new(vec![u]),
            Err(Error::SingleSubspaceCode)
        ));
    }

    #[test]
    fn overlapping_orbits_rejected() {
        let amb = Ambient::new(3, 4).unwrap();
        let f = amb.field();
        let u = Subspace::span(&amb, &[f.one(), f.exp(5)]);
        let v = u.scale(f.exp(7));
        assert!(matches!(
            CyclicSubspaceCode::new(vec![u, v]),
            Err(Error::OrbitsOverlap(0, 1))
        ));
    }

    #[test]
    fn sphere_packing_small_values() {
        // k = 2, d = 2 in G_3(4, 2): [4,2]_3 / [2,2]_3 = 130
        let b = sphere_packing_bound(3, 4, 2, 2).unwrap();
        assert_eq!(b, BigRational::from_integer(130.into()));
        let r = orbit_count_bound(3, 4, 2, 2).unwrap();
        assert_eq!(r, BigRational::new(130.into(), 40.into()));
    }
}
