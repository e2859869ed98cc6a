use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};

fn check_params(n: u64, w: u64, lambda: u64) -> Result<()> {
    if lambda == 0 || lambda >= w {
        return Err(Error::LambdaNotBelowWeight { lambda, w });
    }
    if w > n {
        return Err(Error::WeightExceedsLength { w, n });
    }
    Ok(())
}

/// Johnson bound `J(n, w, λ)`, evaluated from the innermost floor
/// `⌊(n-λ)/(w-λ)⌋` outward and finally divided by `w`.
pub fn johnson_bound(n: u64, w: u64, lambda: u64) -> Result<BigUint> {
    check_params(n, w, lambda)?;
    let mut acc = BigUint::from(1u32);
    for i in (1..=lambda).rev() {
        acc = acc * (n - i) / (w - i);
    }
    Ok(acc / w)
}

/// `size / J(n, w, λ)` as an exact rational.
pub fn optimality_ratio(size: u64, n: u64, w: u64, lambda: u64) -> Result<BigRational> {
    let j = johnson_bound(n, w, lambda)?;
    if j.is_zero() {
        return Err(Error::ZeroJohnsonBound);
    }
    Ok(BigRational::new(BigUint::from(size).into(), j.into()))
}

/// One row request: `F_{q^m}` with `k`-dimensional representatives.
///
/// With `m = 2k` and `q ≥ 3` the orbit count defaults to `⌊(q-1)/2⌋`;
/// otherwise to a single Sidon-space orbit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableSpec {
    pub q: u64,
    pub k: u32,
    pub m: u32,
    pub orbits: Option<u64>,
}

impl TableSpec {
    pub fn paired(q: u64, k: u32) -> Self {
        TableSpec {
            q,
            k,
            m: 2 * k,
            orbits: None,
        }
    }

    pub fn orbit_count(&self) -> u64 {
        self.orbits
            .unwrap_or(if self.m == 2 * self.k && self.q >= 3 {
                (self.q - 1) / 2
            } else {
                1
            })
    }
}

/// Parameters of the OOC obtained from a distance-`(2k-2)` cyclic code with
/// `r` full-length orbits: `(q^m - 1, q^k, q)` with `r(q^{m-k} - 1)/(q - 1)` words.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub q: u64,
    pub k: u32,
    pub m: u32,
    pub r: u64,
    pub n: u64,
    pub w: u64,
    pub lambda: u64,
    pub size: u64,
    #[serde(serialize_with = "crate::io::ser_display")]
    pub johnson: BigUint,
    #[serde(serialize_with = "crate::io::ser_display")]
    pub ratio: BigRational,
}

pub fn params_table(specs: &[TableSpec]) -> Result<Vec<TableRow>> {
    specs
        .iter()
        .map(|spec| {
            let &TableSpec { q, k, m, .. } = spec;
            if q < 2 || k < 2 || m < 2 * k {
                return Err(Error::InvalidParams(format!(
                    "need q >= 2, k >= 2, m >= 2k; got q={q} k={k} m={m}"
                )));
            }
            let pow = |e: u32| {
                q.checked_pow(e)
                    .ok_or_else(|| Error::InvalidParams(format!("{q}^{e} overflows")))
            };
            let r = spec.orbit_count();
            let n = pow(m)? - 1;
            let w = pow(k)?;
            let size = r * ((pow(m - k)? - 1) / (q - 1));
            let johnson = johnson_bound(n, w, q)?;
            let ratio = optimality_ratio(size, n, w, q)?;
            Ok(TableRow {
                q,
                k,
                m,
                r,
                n,
                w,
                lambda: q,
                size,
                johnson,
                ratio,
            })
        })
        .collect()
}
