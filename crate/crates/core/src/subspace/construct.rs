//! Explicit multi-orbit constructions from binomial linearized polynomials.
//!
//! For `ξ ∈ F_{q^m} \ F_{q^k}` and `f(x) = μ x^{q^s}` the set
//! `W_{f,ξ} = {x + ξ f(x) : x ∈ F_{q^k}}` is a `k`-dimensional `F_q`-subspace.
//! With `m = 2k`, `gcd(s, k) = 1` and suitable norm conditions on the `μ_i`,
//! the orbits of the `W_{f_i,ξ}` form a code of minimum distance `2k - 2`.

use std::sync::Arc;

use num_integer::gcd;

use super::{is_sidon, Ambient, CyclicSubspaceCode, Subspace};
use crate::error::{Error, Result};
use crate::field::{Elem, Subfield};

fn middle_subfield(ambient: &Ambient, k: u32) -> Result<Subfield> {
    let order = ambient
        .q()
        .checked_pow(k)
        .ok_or_else(|| Error::InvalidParams(format!("q^{k} overflows")))?;
    ambient.field().subfield(order)
}

/// `{x + ξ μ x^{q^s} : x ∈ F_{q^k}}`.
///
/// Fails if `μ ∉ F_{q^k}` or if the image has dimension below `k`.
pub fn linearized_graph(
    ambient: &Arc<Ambient>,
    k: u32,
    s: u32,
    mu: Elem,
    xi: Elem,
) -> Result<Subspace> {
    let f = ambient.field();
    let sub = middle_subfield(ambient, k)?;
    if !sub.contains(f, mu) {
        return Err(Error::NotInSubfield { order: sub.order() });
    }
    let frob = ambient.q().pow(s);
    let coeff = f.mul(xi, mu);
    let g = sub.generator(f);
    let images: Vec<Elem> = (0..k as u64)
        .map(|i| {
            let x = f.pow(g, i);
            f.add(x, f.mul(coeff, f.pow(x, frob)))
        })
        .collect();
    let w = Subspace::span(ambient, &images);
    if w.dim() < k as usize {
        return Err(Error::DegenerateSubspace {
            got: w.dim(),
            expected: k as usize,
        });
    }
    Ok(w)
}

/// Parameters `(k, s, μ_1..μ_r, ξ)` of the binomial construction.
#[derive(Clone, Debug)]
pub struct SidonParams {
    ambient: Arc<Ambient>,
    k: u32,
    s: u32,
    mus: Vec<Elem>,
    xi: Elem,
}

impl SidonParams {
    pub fn new(ambient: &Arc<Ambient>, k: u32, s: u32, mus: Vec<Elem>, xi: Elem) -> Result<Self> {
        let f = ambient.field();
        if k < 2 || !ambient.m().is_multiple_of(k) {
            return Err(Error::InvalidParams(format!(
                "k = {k} must be at least 2 and divide m = {}",
                ambient.m()
            )));
        }
        if s == 0 || gcd(s, k) != 1 {
            return Err(Error::InvalidParams(format!(
                "gcd(s, k) = gcd({s}, {k}) must be 1"
            )));
        }
        if mus.is_empty() || mus.len() as u64 > ambient.q() - 1 {
            return Err(Error::InvalidParams(format!(
                "need 1 <= r <= q - 1 = {}, got r = {}",
                ambient.q() - 1,
                mus.len()
            )));
        }
        let sub = middle_subfield(ambient, k)?;
        if sub.contains(f, xi) {
            return Err(Error::InvalidParams("xi must lie outside F_{q^k}".into()));
        }
        if mus.iter().any(|&mu| !sub.contains(f, mu)) {
            return Err(Error::NotInSubfield { order: sub.order() });
        }
        Ok(SidonParams {
            ambient: Arc::clone(ambient),
            k,
            s,
            mus,
            xi,
        })
    }

    pub fn ambient(&self) -> &Arc<Ambient> {
        &self.ambient
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn mus(&self) -> &[Elem] {
        &self.mus
    }

    pub fn xi(&self) -> Elem {
        self.xi
    }
}

/// `W_{μ_i x^{q^s}, ξ}`.
pub fn construct_w(params: &SidonParams, i: usize) -> Result<Subspace> {
    let mu = *params.mus.get(i).ok_or(Error::IndexOutOfRange {
        index: i,
        n: params.mus.len(),
    })?;
    linearized_graph(&params.ambient, params.k, params.s, mu, params.xi)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NormViolationKind {
    /// `N(μ_i) = N(μ_j)`.
    EqualNorms,
    /// `N(μ_i μ_j ξ^{q^k+1}) = 1`.
    UnitProductNorm,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NormViolation {
    pub i: usize,
    pub j: usize,
    pub kind: NormViolationKind,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct NormReport {
    pub violations: Vec<NormViolation>,
}

impl NormReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Pairwise norm conditions for the multi-orbit construction (`m = 2k`).
pub fn validate_multi_orbit(params: &SidonParams) -> Result<NormReport> {
    let amb = &params.ambient;
    let f = amb.field();
    if amb.m() != 2 * params.k {
        return Err(Error::InvalidParams(format!(
            "need m = 2k, got m = {} and k = {}",
            amb.m(),
            params.k
        )));
    }
    let sub = middle_subfield(amb, params.k)?;
    let ground = amb.ground();
    let xi_norm = f.pow(params.xi, sub.order() + 1);
    let norms: Vec<Elem> = params
        .mus
        .iter()
        .map(|&mu| sub.rel_norm(f, mu, ground))
        .collect::<Result<_>>()?;
    let mut violations = Vec::new();
    for i in 0..params.mus.len() {
        for j in i + 1..params.mus.len() {
            if norms[i] == norms[j] {
                violations.push(NormViolation {
                    i,
                    j,
                    kind: NormViolationKind::EqualNorms,
                });
            }
            let prod = f.mul(f.mul(params.mus[i], params.mus[j]), xi_norm);
            if sub.rel_norm(f, prod, ground)? == f.one() {
                violations.push(NormViolation {
                    i,
                    j,
                    kind: NormViolationKind::UnitProductNorm,
                });
            }
        }
    }
    Ok(NormReport { violations })
}

/// The code `⋃_i C_{W_{f_i,ξ}}` for the given parameters.
pub fn construct_multi_orbit(params: &SidonParams) -> Result<CyclicSubspaceCode> {
    let reps = (0..params.mus.len())
        .map(|i| construct_w(params, i))
        .collect::<Result<Vec<_>>>()?;
    CyclicSubspaceCode::new(reps)
}

/// Output of [`construct_g`], with the canonical choices it made.
#[derive(Clone, Debug)]
pub struct GConstruction {
    pub params: SidonParams,
    /// Primitive element of `F_{q^k}`.
    pub w: Elem,
    /// Linear coefficient making `x^2 + b x + w` irreducible over `F_{q^k}`.
    pub b: Elem,
    pub code: CyclicSubspaceCode,
}

/// The code `G_{2k,s}` with `⌊(q-1)/2⌋` orbits `V_i = {u + u^{q^s} w^i ξ}`.
///
/// `w` is the primitive element of `F_{q^k}` with the smallest log, `b` the first
/// element of `F_{q^k}` in canonical order with `x^2 + b x + w` irreducible, and
/// `ξ` the root of that quadratic with the smallest log.
pub fn construct_g(q: u64, k: u32, s: u32) -> Result<GConstruction> {
    if q < 3 {
        return Err(Error::InvalidParams(format!(
            "q must be at least 3, got {q}"
        )));
    }
    if k < 2 {
        return Err(Error::InvalidParams(format!(
            "k must be at least 2, got {k}"
        )));
    }
    if s == 0 || gcd(s, k) != 1 {
        return Err(Error::InvalidParams(format!(
            "gcd(s, k) = gcd({s}, {k}) must be 1"
        )));
    }
    let amb = Ambient::new(q, 2 * k)?;
    let f = amb.field();
    let sub = middle_subfield(&amb, k)?;
    let w = sub.generator(f);
    if sub.rel_norm(f, w, amb.ground())? == f.one() {
        // a primitive element is never a (q-1)-th power when q > 2
        return Err(Error::InvalidParams("w is a (q-1)-th power".into()));
    }
    let mut b = None;
    for cand in sub.elements(f) {
        if sub.is_irreducible_quadratic(f, cand, w)? {
            b = Some(cand);
            break;
        }
    }
    let b = b.ok_or(Error::NoIrreducibleQuadratic)?;
    let xi = f
        .elements_by_log()
        .find(|&x| f.add(f.mul(x, f.add(x, b)), w).is_zero())
        .ok_or(Error::NoIrreducibleQuadratic)?;
    let r = (q - 1) / 2;
    let mus: Vec<Elem> = (0..r).map(|i| f.pow(w, i)).collect();
    let params = SidonParams::new(&amb, k, s, mus, xi)?;
    let code = construct_multi_orbit(&params)?;
    Ok(GConstruction { params, w, b, code })
}

/// Single-orbit binomial construction in `F_{q^{2k}}`: the first `ξ` (by log)
/// outside `F_{q^k}` for which `{x + ξ x^{q^s}}` is a Sidon space.
///
/// Over `F_2` every relative norm is 1 and no such `ξ` exists; this returns
/// [`Error::NoSidonSpace`] there.
pub fn single_orbit_sidon(q: u64, k: u32, s: u32) -> Result<(SidonParams, CyclicSubspaceCode)> {
    if k < 2 || s == 0 || gcd(s, k) != 1 {
        return Err(Error::InvalidParams(format!(
            "need k >= 2 and gcd(s, k) = 1, got k = {k}, s = {s}"
        )));
    }
    let amb = Ambient::new(q, 2 * k)?;
    let f = amb.field();
    let sub = middle_subfield(&amb, k)?;
    for xi in f.elements_by_log().filter(|&x| !sub.contains(f, x)) {
        let w = match linearized_graph(&amb, k, s, f.one(), xi) {
            Ok(w) => w,
            Err(Error::DegenerateSubspace { .. }) => continue,
            Err(e) => return Err(e),
        };
        if is_sidon(&w) {
            let params = SidonParams::new(&amb, k, s, vec![f.one()], xi)?;
            return Ok((params, CyclicSubspaceCode::new(vec![w])?));
        }
    }
    Err(Error::NoSidonSpace(format!(
        "no binomial subspace for q = {q}, k = {k}, s = {s}"
    )))
}

/// First Sidon space `span{1, ω^{a_1}, .., ω^{a_{k-1}}}` with
/// `0 < a_1 < .. < a_{k-1}` in lexicographic order.
///
/// Every orbit contains a subspace through 1, so this finds a Sidon space
/// whenever one of dimension `k` exists.
pub fn search_sidon_space(ambient: &Arc<Ambient>, k: u32) -> Result<Subspace> {
    let m = ambient.m();
    if k == 0 || 2 * k > m {
        return Err(Error::InvalidParams(format!(
            "need 1 <= k <= m/2, got k = {k}, m = {m}"
        )));
    }
    let f = ambient.field();
    let n = u64::from(f.group_order());
    let rest = k as usize - 1;
    let mut exps: Vec<u64> = (1..=rest as u64).collect();
    loop {
        if exps.last().is_none_or(|&a| a < n) {
            let basis: Vec<Elem> = std::iter::once(f.one())
                .chain(exps.iter().map(|&a| f.exp(a)))
                .collect();
            let u = Subspace::span(ambient, &basis);
            if u.dim() == k as usize && is_sidon(&u) {
                return Ok(u);
            }
        }
        // advance to the next increasing tuple below n
        let mut i = rest;
        loop {
            if i == 0 {
                return Err(Error::NoSidonSpace(format!(
                    "no {k}-dimensional Sidon space in F_{{{}^{m}}}",
                    ambient.q()
                )));
            }
            i -= 1;
            if exps[i] + ((rest - i) as u64) < n {
                exps[i] += 1;
                for j in i + 1..rest {
                    exps[j] = exps[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// Where a single-orbit code came from.
#[derive(Clone, Debug)]
pub enum SingleOrbitSource {
    Binomial(SidonParams),
    Search,
}

/// A one-orbit Sidon code in `F_{q^m}`: the binomial construction when
/// `m = 2k` and it succeeds, otherwise [`search_sidon_space`].
pub fn single_orbit(
    q: u64,
    k: u32,
    m: u32,
    s: u32,
) -> Result<(SingleOrbitSource, CyclicSubspaceCode)> {
    if m == 2 * k {
        match single_orbit_sidon(q, k, s) {
            Ok((params, code)) => return Ok((SingleOrbitSource::Binomial(params), code)),
            Err(Error::NoSidonSpace(_)) => {}
            Err(e) => return Err(e),
        }
    }
    let amb = Ambient::new(q, m)?;
    let u = search_sidon_space(&amb, k)?;
    Ok((SingleOrbitSource::Search, CyclicSubspaceCode::new(vec![u])?))
}
