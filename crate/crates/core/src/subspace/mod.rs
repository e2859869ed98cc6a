//! `F_q`-linear subspaces of `F_{q^m}` and the cyclic subspace codes built from them.
//!
//! An [`Ambient`] fixes the big field `F_{q^m}` together with its ground
//! subfield `F_q`; every [`Subspace`] carries a handle to its ambient space,
//! an independent basis, and its full element set sorted by encoding.

mod code;
mod construct;
mod coset;
mod sidon;

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{prime_power, Elem, Field, Subfield};

pub use code::{
    code_min_distance, orbit_count_bound, sphere_packing_bound, CyclicSubspaceCode, MinDistance,
};
pub use construct::{
    construct_g, construct_multi_orbit, construct_w, linearized_graph, search_sidon_space,
    single_orbit, single_orbit_sidon, validate_multi_orbit, GConstruction, NormReport,
    NormViolation, NormViolationKind, SidonParams, SingleOrbitSource,
};
pub use coset::{build_coset_family, coset_representatives, CosetEntry, CosetFamily};
pub use sidon::{
    is_multi_sidon, is_sidon, multi_sidon_witness, orbit, orbit_size, sidon_witness,
    IntersectionWitness,
};

/// `F_{q^m}` viewed as an `m`-dimensional vector space over `F_q`.
///
/// Coordinates are taken with respect to the basis `1, ω, ..., ω^{m-1}` and
/// computed through the trace dual basis, so rank questions reduce to
/// Gaussian elimination over `F_q`.
#[derive(Debug)]
pub struct Ambient {
    field: Field,
    ground: Subfield,
    ground_elements: Vec<Elem>,
    m: u32,
    /// F_q-coordinates of the prime-field basis monomials `x^j`.
    monomial_coords: Vec<Vec<Elem>>,
}

impl PartialEq for Ambient {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.ground == other.ground
    }
}

impl Ambient {
    /// `F_{q^m}` with the canonical modulus and primitive element.
    pub fn new(q: u64, m: u32) -> Result<Arc<Self>> {
        let (p, e0) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        if m == 0 {
            return Err(Error::InvalidParams("m must be at least 1".into()));
        }
        let field = Field::new(p, e0 * m, None)?;
        Self::from_field(field, q)
    }

    /// Views an existing field as a vector space over its subfield of order `q`.
    pub fn from_field(field: Field, q: u64) -> Result<Arc<Self>> {
        let ground = field.subfield(q)?;
        let m = field.degree() / ground.degree();
        let ground_elements = ground.elements(&field);
        let mut amb = Ambient {
            field,
            ground,
            ground_elements,
            m,
            monomial_coords: Vec::new(),
        };
        amb.monomial_coords = amb.compute_monomial_coords();
        Ok(Arc::new(amb))
    }

    fn compute_monomial_coords(&self) -> Vec<Vec<Elem>> {
        let f = &self.field;
        let m = self.m as usize;
        let basis: Vec<Elem> = (0..m as u64).map(|i| f.exp(i)).collect();
        let gram: Vec<Vec<Elem>> = basis
            .iter()
            .map(|&a| basis.iter().map(|&b| self.trace(f.mul(a, b))).collect())
            .collect();
        let inv = invert(f, gram).expect("trace form of a basis is nondegenerate");
        let p = f.characteristic();
        (0..f.degree())
            .map(|j| {
                let y = Elem(p.pow(j));
                let t: Vec<Elem> = basis.iter().map(|&b| self.trace(f.mul(y, b))).collect();
                inv.iter()
                    .map(|row| {
                        row.iter()
                            .zip(&t)
                            .fold(Elem::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
                    })
                    .collect()
            })
            .collect()
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ground(&self) -> &Subfield {
        &self.ground
    }

    /// Elements of `F_q` in canonical order.
    pub fn ground_elements(&self) -> &[Elem] {
        &self.ground_elements
    }

    /// Ground field order `q`.
    pub fn q(&self) -> u64 {
        self.ground.order()
    }

    /// Dimension of the field over `F_q`.
    pub fn m(&self) -> u32 {
        self.m
    }

    /// `(q^m - 1) / (q - 1)`: the number of scalar classes `αF_q^*`.
    pub fn projective_count(&self) -> u32 {
        self.ground.generator_log()
    }

    /// `Tr_{q^m/q}(y)`.
    pub fn trace(&self, y: Elem) -> Elem {
        let f = &self.field;
        let q = self.q();
        let mut acc = Elem::ZERO;
        let mut cur = y;
        for _ in 0..self.m {
            acc = f.add(acc, cur);
            cur = f.pow(cur, q);
        }
        acc
    }

    /// `F_q`-coordinates of `x` in the basis `1, ω, ..., ω^{m-1}`.
    pub fn coordinates(&self, x: Elem) -> Vec<Elem> {
        let f = &self.field;
        let p = f.characteristic();
        let mut out = vec![Elem::ZERO; self.m as usize];
        let mut v = x.0;
        for row in &self.monomial_coords {
            let digit = v % p;
            v /= p;
            if digit == 0 {
                continue;
            }
            let d = f.constant(digit as u64);
            for (slot, &c) in out.iter_mut().zip(row) {
                *slot = f.add(*slot, f.mul(d, c));
            }
        }
        out
    }

    pub fn from_coordinates(&self, coords: &[Elem]) -> Elem {
        let f = &self.field;
        coords.iter().enumerate().fold(Elem::ZERO, |acc, (i, &c)| {
            f.add(acc, f.mul(c, f.exp(i as u64)))
        })
    }

    /// `F_q`-rank of a set of field elements.
    pub fn rank(&self, vectors: &[Elem]) -> usize {
        let rows: Vec<Vec<Elem>> = vectors.iter().map(|&v| self.coordinates(v)).collect();
        rank(&self.field, rows)
    }

    /// Exponent `d` with `q^d = count`; `count` must be a power of `q`.
    pub(crate) fn log_q(&self, mut count: usize) -> usize {
        let q = self.q() as usize;
        let mut d = 0;
        while count > 1 {
            debug_assert_eq!(count % q, 0);
            count /= q;
            d += 1;
        }
        d
    }
}

/// Gauss-Jordan inverse of a square matrix over a subfield, using ambient arithmetic.
fn invert(f: &Field, mut a: Vec<Vec<Elem>>) -> Option<Vec<Vec<Elem>>> {
    let n = a.len();
    let mut inv: Vec<Vec<Elem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { Elem::ONE } else { Elem::ZERO })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let s = f.inv(a[col][col]).ok()?;
        for j in 0..n {
            a[col][j] = f.mul(a[col][j], s);
            inv[col][j] = f.mul(inv[col][j], s);
        }
        for r in 0..n {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let factor = a[r][col];
            for j in 0..n {
                a[r][j] = f.sub(a[r][j], f.mul(factor, a[col][j]));
                inv[r][j] = f.sub(inv[r][j], f.mul(factor, inv[col][j]));
            }
        }
    }
    Some(inv)
}

fn rank(f: &Field, mut rows: Vec<Vec<Elem>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let s = f.inv(rows[r][col]).expect("pivot is nonzero");
        for x in &mut rows[r][col..] {
            *x = f.mul(*x, s);
        }
        let (done, below) = rows.split_at_mut(r + 1);
        let pivot_row = &done[r];
        for row in below {
            let factor = row[col];
            if factor.is_zero() {
                continue;
            }
            for (x, &p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *x = f.sub(*x, f.mul(factor, p));
            }
        }
        r += 1;
    }
    r
}

/// An `F_q`-subspace of `F_{q^m}`.
#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: Arc<Ambient>,
    basis: Vec<Elem>,
    /// All `q^k` elements, sorted by encoding.
    elements: Vec<Elem>,
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.same_ambient(other) && self.elements == other.elements
    }
}

impl Eq for Subspace {}

impl Subspace {
    /// The `F_q`-span of `generators`; dependent generators are dropped from the basis.
    pub fn span(ambient: &Arc<Ambient>, generators: &[Elem]) -> Subspace {
        let f = ambient.field();
        let mut basis = Vec::new();
        let mut elements = vec![Elem::ZERO];
        for &g in generators {
            if elements.binary_search(&g).is_ok() {
                continue;
            }
            let mut grown = Vec::with_capacity(elements.len() * ambient.q() as usize);
            for &lambda in ambient.ground_elements() {
                let shift = f.mul(lambda, g);
                grown.extend(elements.iter().map(|&s| f.add(s, shift)));
            }
            grown.sort_unstable();
            elements = grown;
            basis.push(g);
        }
        Subspace {
            ambient: Arc::clone(ambient),
            basis,
            elements,
        }
    }

    /// The subfield of order `order` as an `F_q`-subspace.
    pub fn subfield(ambient: &Arc<Ambient>, order: u64) -> Result<Subspace> {
        let f = ambient.field();
        let sub = f.subfield(order)?;
        if !ambient.ground().is_subfield_of(&sub) {
            return Err(Error::NoSuchSubfield {
                order: ambient.q(),
                field_order: order,
            });
        }
        let k = sub.degree() / ambient.ground().degree();
        let g = sub.generator(f);
        let gens: Vec<Elem> = (0..k as u64).map(|i| f.pow(g, i)).collect();
        Ok(Self::span(ambient, &gens))
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn basis(&self) -> &[Elem] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// All elements sorted by encoding.
    pub fn elements(&self) -> &[Elem] {
        &self.elements
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    pub fn same_ambient(&self, other: &Subspace) -> bool {
        Arc::ptr_eq(&self.ambient, &other.ambient) || *self.ambient == *other.ambient
    }

    /// `αU`.
    pub fn scale(&self, alpha: Elem) -> Subspace {
        let f = self.ambient.field();
        if alpha.is_zero() {
            return Subspace::span(&self.ambient, &[]);
        }
        let mut elements: Vec<Elem> = self.elements.iter().map(|&x| f.mul(alpha, x)).collect();
        elements.sort_unstable();
        Subspace {
            ambient: Arc::clone(&self.ambient),
            basis: self.basis.iter().map(|&x| f.mul(alpha, x)).collect(),
            elements,
        }
    }

    /// `U + d` as a sorted element set.
    pub fn translate(&self, d: Elem) -> Vec<Elem> {
        let f = self.ambient.field();
        let mut out: Vec<Elem> = self.elements.iter().map(|&x| f.add(x, d)).collect();
        out.sort_unstable();
        out
    }

    fn check_ambient(&self, other: &Subspace) -> Result<()> {
        if self.same_ambient(other) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    /// `dim(U ∩ V)`, by rank arithmetic: `dim U + dim V - rank(U ∪ V)`.
    pub fn dim_intersection(&self, other: &Subspace) -> Result<usize> {
        self.check_ambient(other)?;
        let mut all = self.basis.clone();
        all.extend_from_slice(&other.basis);
        Ok(self.dim() + other.dim() - self.ambient.rank(&all))
    }

    /// Subspace distance `dim U + dim V - 2 dim(U ∩ V)`.
    pub fn distance(&self, other: &Subspace) -> Result<usize> {
        Ok(self.dim() + other.dim() - 2 * self.dim_intersection(other)?)
    }

    /// `dim(U ∩ αV)` by counting `|U ∩ αV|` through membership tests.
    pub(crate) fn scaled_overlap_dim(&self, other: &Subspace, alpha: Elem) -> usize {
        let f = self.ambient.field();
        let count = other
            .elements
            .iter()
            .filter(|&&x| self.contains(f.mul(alpha, x)))
            .count();
        self.ambient.log_q(count)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f81() -> Arc<Ambient> {
        Ambient::new(3, 4).unwrap()
    }

    #[test]
    fn coordinates_round_trip() {
        for (q, m) in [(3u64, 4u32), (4, 2), (2, 6), (9, 2)] {
            let amb = Ambient::new(q, m).unwrap();
            for x in amb.field().elements_by_log() {
                let c = amb.coordinates(x);
                assert_eq!(c.len(), m as usize);
                assert!(c.iter().all(|&ci| amb.ground().contains(amb.field(), ci)));
                assert_eq!(amb.from_coordinates(&c), x);
            }
        }
    }

    #[test]
    fn empty_span_is_zero() {
        let amb = f81();
        let z = Subspace::span(&amb, &[]);
        assert_eq!(z.dim(), 0);
        assert_eq!(z.elements(), &[Elem::ZERO]);
    }

    #[test]
    fn span_one_omega_has_nine_elements() {
        let amb = f81();
        let f = amb.field();
        let u = Subspace::span(&amb, &[f.one(), f.omega()]);
        assert_eq!(u.dim(), 2);
        let mut brute = Vec::new();
        for &a in amb.ground_elements() {
            for &b in amb.ground_elements() {
                brute.push(f.add(a, f.mul(b, f.omega())));
            }
        }
        brute.sort();
        brute.dedup();
        assert_eq!(brute.len(), 9);
        assert_eq!(u.elements(), brute.as_slice());
    }

    #[test]
    fn dependent_generators_are_reduced() {
        let amb = f81();
        let f = amb.field();
        let u = Subspace::span(&amb, &[f.one(), f.constant(2)]);
        assert_eq!(u.dim(), 1);
        assert_eq!(u.basis(), &[f.one()]);
    }

    #[test]
    fn self_intersection_and_distance() {
        let amb = f81();
        let f = amb.field();
        let u = Subspace::span(&amb, &[f.one(), f.exp(7)]);
        assert_eq!(u.dim_intersection(&u).unwrap(), 2);
        assert_eq!(u.distance(&u).unwrap(), 0);
    }

    #[test]
    fn distinct_lines_meet_in_zero() {
        let amb = f81();
        let f = amb.field();
        let a = Subspace::span(&amb, &[f.exp(1)]);
        let b = Subspace::span(&amb, &[f.exp(2)]);
        assert_eq!(a.dim_intersection(&b).unwrap(), 0);
        assert_eq!(a.distance(&b).unwrap(), 2);
    }

    #[test]
    fn f9_against_omega_f9() {
        let amb = f81();
        let f = amb.field();
        let u = Subspace::subfield(&amb, 9).unwrap();
        let v = u.scale(f.omega());
        let common = u.elements().iter().filter(|&&x| v.contains(x)).count();
        let expected = amb.log_q(common);
        assert_eq!(u.dim_intersection(&v).unwrap(), expected);
        // ω ∉ F_9, so ωF_9 is a different coset of F_9^* and meets F_9 only in 0
        assert_eq!(expected, 0);
    }

    #[test]
    fn mismatched_ambients_rejected() {
        let a = f81();
        let b = Ambient::new(9, 2).unwrap();
        let u = Subspace::span(&a, &[a.field().one()]);
        let v = Subspace::span(&b, &[b.field().one()]);
        assert!(matches!(
            u.dim_intersection(&v),
            Err(Error::AmbientMismatch)
        ));
    }

    #[test]
    fn subfield_subspace() {
        let amb = f81();
        let u = Subspace::subfield(&amb, 9).unwrap();
        assert_eq!(u.dim(), 2);
        assert_eq!(u.elements().len(), 9);
        let whole = Subspace::subfield(&amb, 81).unwrap();
        assert_eq!(whole.dim(), 4);
    }
}
