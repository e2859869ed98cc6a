use std::sync::Arc;

use super::{Ambient, CyclicSubspaceCode, Subspace};
use crate::error::{Error, Result};
use crate::field::Elem;

/// `t = (q^{m-k} - 1)/(q - 1)` translates `d_1..d_t`, none in `U`, with no two
/// `F_q`-proportional modulo `U`.
///
/// Greedy scan over nonzero elements by increasing log: a candidate is kept
/// when it lies outside every coset `U + λd` already claimed.
pub fn coset_representatives(u: &Subspace) -> Result<Vec<Elem>> {
    let amb = u.ambient();
    let f = amb.field();
    let (m, k) = (amb.m() as usize, u.dim());
    if k >= m {
        return Err(Error::InvalidParams(format!(
            "need dim U < m, got {k} >= {m}"
        )));
    }
    let q = amb.q();
    let t = ((q.pow((m - k) as u32) - 1) / (q - 1)) as usize;
    let mut covered = vec![false; f.order() as usize];
    for &x in u.elements() {
        covered[x.encoding() as usize] = true;
    }
    let mut reps = Vec::with_capacity(t);
    for x in f.elements_by_log().skip(1) {
        if reps.len() == t {
            break;
        }
        if covered[x.encoding() as usize] {
            continue;
        }
        for &lambda in &amb.ground_elements()[1..] {
            let d = f.mul(lambda, x);
            for &y in u.elements() {
                covered[f.add(y, d).encoding() as usize] = true;
            }
        }
        reps.push(x);
    }
    debug_assert_eq!(reps.len(), t);
    Ok(reps)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CosetEntry {
    /// Index of the representative `U_i`.
    pub subspace: usize,
    pub translate: Elem,
}

/// The affine family `A(U_1..U_r) = ⋃_i {U_i + d_{i,j}}`.
#[derive(Clone, Debug)]
pub struct CosetFamily {
    ambient: Arc<Ambient>,
    entries: Vec<CosetEntry>,
    per_subspace: usize,
    cosets: Vec<Vec<Elem>>,
}

impl CosetFamily {
    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn entries(&self) -> &[CosetEntry] {
        &self.entries
    }

    /// Translates per subspace, `t`.
    pub fn per_subspace(&self) -> usize {
        self.per_subspace
    }

    /// Each coset as a sorted element set, aligned with [`entries`](Self::entries).
    pub fn cosets(&self) -> &[Vec<Elem>] {
        &self.cosets
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

pub fn build_coset_family(code: &CyclicSubspaceCode) -> Result<CosetFamily> {
    let mut entries = Vec::new();
    let mut cosets = Vec::new();
    let mut per_subspace = 0;
    for (i, u) in code.representatives().iter().enumerate() {
        let reps = coset_representatives(u)?;
        per_subspace = reps.len();
        for d in reps {
            entries.push(CosetEntry {
                subspace: i,
                translate: d,
            });
            cosets.push(u.translate(d));
        }
    }
    Ok(CosetFamily {
        ambient: Arc::clone(code.ambient()),
        entries,
        per_subspace,
        cosets,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subspace::construct_g;

    fn check_representatives(u: &Subspace, reps: &[Elem]) {
        let amb = u.ambient();
        let f = amb.field();
        for &d in reps {
            assert!(!u.contains(d));
        }
        for (a, &x) in reps.iter().enumerate() {
            for &y in &reps[a + 1..] {
                for &lambda in &amb.ground_elements()[1..] {
                    assert!(!u.contains(f.sub(x, f.mul(lambda, y))));
                }
            }
        }
    }

    #[test]
    fn counts_for_small_cases() {
        for (q, m, k, t) in [
            (3u64, 4u32, 2usize, 4usize),
            (2, 6, 3, 7),
            (5, 3, 2, 1),
            (2, 4, 3, 1),
        ] {
            let amb = Ambient::new(q, m).unwrap();
            let f = amb.field();
            let gens: Vec<Elem> = (0..k as u64).map(|i| f.exp(i * 3 + 1)).collect();
            let u = Subspace::span(&amb, &gens);
            assert_eq!(u.dim(), k);
            let reps = coset_representatives(&u).unwrap();
            assert_eq!(reps.len(), t);
            check_representatives(&u, &reps);
        }
    }

    #[test]
    fn full_dimension_rejected() {
        let amb = Ambient::new(3, 2).unwrap();
        let u = Subspace::subfield(&amb, 9).unwrap();
        assert!(coset_representatives(&u).is_err());
    }

    #[test]
    fn family_of_g_3_2_1() {
        let g = construct_g(3, 2, 1).unwrap();
        let fam = build_coset_family(&g.code).unwrap();
        assert_eq!(fam.len(), 4);
        for c in fam.cosets() {
            assert_eq!(c.len(), 9);
            assert!(!c.contains(&Elem::ZERO));
        }
        for (a, x) in fam.cosets().iter().enumerate() {
            for y in &fam.cosets()[a + 1..] {
                assert!(x.iter().all(|e| !y.contains(e)));
            }
        }
    }

    #[test]
    fn family_of_g_5_2_1() {
        let g = construct_g(5, 2, 1).unwrap();
        let fam = build_coset_family(&g.code).unwrap();
        assert_eq!(fam.len(), 12);
        assert_eq!(fam.per_subspace(), 6);
    }
}
