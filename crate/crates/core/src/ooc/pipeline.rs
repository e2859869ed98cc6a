use num_bigint::BigUint;
use num_rational::BigRational;

use super::{
    johnson_bound, optimality_ratio, s_of_w, verify_oos, Codeword, IndexSet, VerificationReport,
};
use crate::error::{Error, Result};
use crate::subspace::{build_coset_family, CosetFamily, CyclicSubspaceCode};

/// A constant-weight binary code with its declared correlation bound.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OocCode {
    pub n: usize,
    pub w: usize,
    pub lambda: usize,
    pub words: Vec<Codeword>,
}

impl OocCode {
    pub fn supports(&self) -> Vec<IndexSet> {
        self.words.iter().map(Codeword::support).collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OocParams {
    pub n: u64,
    pub w: u64,
    pub lambda: u64,
    pub size: u64,
    pub johnson: BigUint,
    pub ratio: BigRational,
}

impl OocParams {
    pub fn new(n: u64, w: u64, lambda: u64, size: u64) -> Result<Self> {
        Ok(OocParams {
            n,
            w,
            lambda,
            size,
            johnson: johnson_bound(n, w, lambda)?,
            ratio: optimality_ratio(size, n, w, lambda)?,
        })
    }
}

/// Everything produced on the way from a cyclic subspace code to a verified OOC.
#[derive(Clone, Debug)]
pub struct OocConstruction {
    pub family: CosetFamily,
    pub sets: Vec<IndexSet>,
    pub code: OocCode,
    pub params: OocParams,
    pub report: VerificationReport,
}

/// Cosets `U_i + d_{i,j}` → discrete-log images → binary words, declared as a
/// `(q^m - 1, q^k, q^{k-d/2})` OOC and verified by brute force.
///
/// Fails with [`Error::VerificationFailed`] if the correlation sweep exceeds
/// the declared `λ`.
pub fn build_ooc(code: &CyclicSubspaceCode) -> Result<OocConstruction> {
    let amb = code.ambient();
    let f = amb.field();
    let q = amb.q();
    let k = code.dim() as u32;
    let d = code.min_distance() as u32;
    let lambda = q.pow(k - d / 2);
    let w = q.pow(k);
    let n = f.group_order() as u64;

    let family = build_coset_family(code)?;
    let sets: Vec<IndexSet> = family.cosets().iter().map(|c| s_of_w(f, c)).collect();
    let words: Vec<Codeword> = sets.iter().map(IndexSet::to_codeword).collect();
    let size = (code.orbit_count() * family.per_subspace()) as u64;
    debug_assert_eq!(size as usize, words.len());

    let report = verify_oos(&sets, lambda as usize)?;
    if !report.pass {
        return Err(Error::VerificationFailed(Box::new(report)));
    }
    let params = OocParams::new(n, w, lambda, size)?;
    Ok(OocConstruction {
        family,
        code: OocCode {
            n: n as usize,
            w: w as usize,
            lambda: lambda as usize,
            words,
        },
        sets,
        params,
        report,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subspace::{construct_g, Ambient, Subspace};

    #[test]
    fn g_3_2_1_pipeline() {
        let g = construct_g(3, 2, 1).unwrap();
        let out = build_ooc(&g.code).unwrap();
        assert_eq!(
            (
                out.params.n,
                out.params.w,
                out.params.lambda,
                out.params.size
            ),
            (80, 9, 3, 4)
        );
        assert!(out.report.pass);
        assert!(out
            .code
            .words
            .iter()
            .all(|x| x.weight() == 9 && x.len() == 80));
    }

    #[test]
    fn short_orbit_fails_verification() {
        // F_4 in F_16 over F_2 has a 5-element orbit with d = 4, so λ would be 1;
        // but F_4^* fixes U and maps the cosets U + d onto each other.
        let amb = Ambient::new(2, 4).unwrap();
        let u = Subspace::subfield(&amb, 4).unwrap();
        let code = CyclicSubspaceCode::new(vec![u]).unwrap();
        match build_ooc(&code) {
            Err(Error::VerificationFailed(report)) => {
                assert!(!report.pass);
                assert_eq!(report.max_cross, 4);
            }
            other => panic!("expected verification failure, got {other:?}"),
        }
    }
}
