//! Oracles shared by the integration tests. Nothing here calls the library's
//! own sweep routines.
#![allow(dead_code)]

use std::collections::BTreeSet;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use subspace_ooc::field::Elem;
use subspace_ooc::subspace::{Ambient, Subspace};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `Σ_t x_t y_{t+τ}` on raw bit vectors.
pub fn bit_corr(x: &[bool], y: &[bool], tau: usize) -> usize {
    let n = x.len();
    (0..n).filter(|&t| x[t] && y[(t + tau) % n]).count()
}

/// `(max auto over 0 < τ < n, max cross over all τ and i < j)` by bit sums.
pub fn bit_maxima(words: &[Vec<bool>]) -> (usize, usize) {
    let n = words[0].len();
    let mut auto = 0;
    let mut cross = 0;
    for (i, x) in words.iter().enumerate() {
        for tau in 1..n {
            auto = auto.max(bit_corr(x, x, tau));
        }
        for y in &words[i + 1..] {
            for tau in 0..n {
                cross = cross.max(bit_corr(x, y, tau));
            }
        }
    }
    (auto, cross)
}

/// Every `k`-dimensional subspace, spanned from all `k`-tuples of nonzero
/// elements and deduplicated by element set. Small ambients only.
pub fn all_subspaces(amb: &Arc<Ambient>, k: usize) -> Vec<Subspace> {
    let f = amb.field();
    let nonzero: Vec<Elem> = (0..f.group_order() as u64).map(|i| f.exp(i)).collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let mut idx = vec![0usize; k];
    loop {
        let gens: Vec<Elem> = idx.iter().map(|&i| nonzero[i]).collect();
        let u = Subspace::span(amb, &gens);
        if u.dim() == k && seen.insert(u.elements().to_vec()) {
            out.push(u);
        }
        let mut pos = k;
        loop {
            if pos == 0 {
                return out;
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < nonzero.len() {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// `|A ∩ B|` on element lists.
pub fn common(a: &[Elem], b: &[Elem]) -> usize {
    let b: BTreeSet<Elem> = b.iter().copied().collect();
    a.iter().filter(|x| b.contains(x)).count()
}

/// `dim(U ∩ V)` from `|U ∩ V| = q^dim`.
pub fn dim_meet(u: &Subspace, v: &Subspace) -> usize {
    let q = u.ambient().q() as usize;
    let mut c = common(u.elements(), v.elements());
    let mut d = 0;
    while c > 1 {
        assert_eq!(c % q, 0, "intersection size is not a power of q");
        c /= q;
        d += 1;
    }
    d
}

/// All distinct `αU` by scaling with every nonzero `α`.
pub fn orbit_members(u: &Subspace) -> Vec<Subspace> {
    let f = u.ambient().field();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for a in 0..f.group_order() as u64 {
        let v = u.scale(f.exp(a));
        if seen.insert(v.elements().to_vec()) {
            out.push(v);
        }
    }
    out
}

/// Minimum subspace distance over all distinct members of the given orbits;
/// `None` for a code with one member.
pub fn brute_min_distance(reps: &[Subspace]) -> Option<usize> {
    let members: Vec<Subspace> = reps.iter().flat_map(orbit_members).collect();
    let mut best: Option<usize> = None;
    for (i, u) in members.iter().enumerate() {
        for v in &members[i + 1..] {
            let d = u.dim() + v.dim() - 2 * dim_meet(u, v);
            best = Some(best.map_or(d, |b| b.min(d)));
        }
    }
    best
}
