use serde::{Deserialize, Serialize};

use super::index_set::{rotated, IndexSet};
use crate::error::{Error, Result};

/// Largest correlation value and the smallest shift attaining it.
///
/// `tau` is `None` only when the shift range is empty (autocorrelation with `n = 1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Peak {
    pub value: usize,
    pub tau: Option<usize>,
}

/// `|X ∩ (Y + τ)|` by merging two sorted sequences.
pub fn shifted_intersection(x: &IndexSet, y: &IndexSet, tau: usize) -> usize {
    let n = x.n();
    let mut a = x.members().iter().copied().peekable();
    let mut b = rotated(y.members(), tau % n.max(1), n).peekable();
    let mut count = 0;
    while let (Some(&u), Some(&v)) = (a.peek(), b.peek()) {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => {
                a.next();
            }
            std::cmp::Ordering::Greater => {
                b.next();
            }
            std::cmp::Ordering::Equal => {
                count += 1;
                a.next();
                b.next();
            }
        }
    }
    count
}

fn peak(x: &IndexSet, y: &IndexSet, taus: std::ops::Range<usize>) -> Peak {
    let mut best = Peak {
        value: 0,
        tau: None,
    };
    for tau in taus {
        let v = shifted_intersection(x, y, tau);
        if best.tau.is_none() || v > best.value {
            best = Peak {
                value: v,
                tau: Some(tau),
            };
        }
    }
    best
}

/// `max_{0<τ<n} |X ∩ (X + τ)|`.
pub fn autocorr_max(x: &IndexSet) -> Peak {
    peak(x, x, 1..x.n())
}

/// `max_{0≤τ<n} |X ∩ (Y + τ)|` for distinct `X`, `Y`.
pub fn crosscorr_max(x: &IndexSet, y: &IndexSet) -> Result<Peak> {
    if x.n() != y.n() {
        return Err(Error::SizeMismatch(0, 1));
    }
    if x == y {
        return Err(Error::DuplicateMember(0, 1));
    }
    Ok(peak(x, y, 0..x.n()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum WitnessKind {
    Auto,
    Cross,
}

/// Words and shift attaining one of the reported maxima.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub kind: WitnessKind,
    pub words: Vec<usize>,
    pub tau: usize,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub max_auto: usize,
    pub max_cross: usize,
    pub witnesses: Vec<Witness>,
    pub pass: bool,
}

/// Checks the auto- and crosscorrelation properties of an `(n, w, λ)` optical
/// orthogonal set by exhaustive shift sweeps.
///
/// Witnesses pick the smallest `τ`, then the smallest word indices.
pub fn verify_oos(sets: &[IndexSet], lambda: usize) -> Result<VerificationReport> {
    let first = sets.first().ok_or(Error::EmptyFamily)?;
    for (i, s) in sets.iter().enumerate().skip(1) {
        if s.n() != first.n() || s.len() != first.len() {
            return Err(Error::SizeMismatch(0, i));
        }
    }

    let mut auto: Option<(usize, usize, usize)> = None; // (value, tau, word)
    for (i, x) in sets.iter().enumerate() {
        let p = autocorr_max(x);
        if let Some(tau) = p.tau {
            let better = match auto {
                None => true,
                Some((v, t, _)) => p.value > v || (p.value == v && tau < t),
            };
            if better {
                auto = Some((p.value, tau, i));
            }
        }
    }

    let mut cross: Option<(usize, usize, usize, usize)> = None; // (value, tau, i, j)
    for (i, x) in sets.iter().enumerate() {
        for (j, y) in sets.iter().enumerate().skip(i + 1) {
            let p = crosscorr_max(x, y).map_err(|e| match e {
                Error::DuplicateMember(..) => Error::DuplicateMember(i, j),
                other => other,
            })?;
            let tau = p.tau.expect("cross sweep includes tau = 0");
            let better = match cross {
                None => true,
                Some((v, t, _, _)) => p.value > v || (p.value == v && tau < t),
            };
            if better {
                cross = Some((p.value, tau, i, j));
            }
        }
    }

    let mut witnesses = Vec::new();
    if let Some((value, tau, i)) = auto {
        witnesses.push(Witness {
            kind: WitnessKind::Auto,
            words: vec![i],
            tau,
            value,
        });
    }
    if let Some((value, tau, i, j)) = cross {
        witnesses.push(Witness {
            kind: WitnessKind::Cross,
            words: vec![i, j],
            tau,
            value,
        });
    }
    let max_auto = auto.map_or(0, |a| a.0);
    let max_cross = cross.map_or(0, |c| c.0);
    Ok(VerificationReport {
        max_auto,
        max_cross,
        witnesses,
        pass: max_auto.max(max_cross) <= lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, m: &[usize]) -> IndexSet {
        IndexSet::new(n, m.iter().copied()).unwrap()
    }

    #[test]
    fn singleton_autocorrelation_is_zero() {
        assert_eq!(autocorr_max(&set(7, &[3])).value, 0);
        assert_eq!(
            autocorr_max(&set(1, &[0])),
            Peak {
                value: 0,
                tau: None
            }
        );
    }

    #[test]
    fn full_set_autocorrelation_is_n() {
        let x = set(6, &[0, 1, 2, 3, 4, 5]);
        assert_eq!(
            autocorr_max(&x),
            Peak {
                value: 6,
                tau: Some(1)
            }
        );
    }

    #[test]
    fn pair_in_z4() {
        let x = set(4, &[0, 1]);
        assert_eq!(shifted_intersection(&x, &x, 1), 1);
        assert_eq!(shifted_intersection(&x, &x, 2), 0);
        assert_eq!(shifted_intersection(&x, &x, 3), 1);
        assert_eq!(
            autocorr_max(&x),
            Peak {
                value: 1,
                tau: Some(1)
            }
        );
    }

    #[test]
    fn cross_includes_zero_shift() {
        let p = crosscorr_max(&set(2, &[0]), &set(2, &[1])).unwrap();
        assert_eq!(
            p,
            Peak {
                value: 1,
                tau: Some(1)
            }
        );
        let p = crosscorr_max(&set(5, &[0, 1]), &set(5, &[0, 2])).unwrap();
        // τ=0: {0}; τ=1: {1,3}∩{0,1} = {1}; τ=4: {4,1} -> {1}; τ=3: {3,0} -> {0}
        assert_eq!(
            p,
            Peak {
                value: 1,
                tau: Some(0)
            }
        );
    }

    #[test]
    fn cross_rejects_equal_sets() {
        let x = set(5, &[0, 1]);
        assert!(crosscorr_max(&x, &x).is_err());
    }

    #[test]
    fn verify_singleton_family() {
        let r = verify_oos(&[set(9, &[0])], 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.max_auto, 0);
        assert_eq!(r.max_cross, 0);
    }

    #[test]
    fn verify_rejects_unequal_sizes_and_empty() {
        assert!(matches!(
            verify_oos(&[set(9, &[0, 1]), set(9, &[0])], 1),
            Err(Error::SizeMismatch(0, 1))
        ));
        assert!(matches!(verify_oos(&[], 1), Err(Error::EmptyFamily)));
        assert!(matches!(
            verify_oos(&[set(9, &[0, 1]), set(9, &[2, 5]), set(9, &[0, 1])], 1),
            Err(Error::DuplicateMember(0, 2))
        ));
    }

    #[test]
    fn witness_prefers_small_tau() {
        // {0,1,3} in Z_7 is a perfect difference set: every τ gives exactly 1
        let r = verify_oos(&[set(7, &[0, 1, 3])], 1).unwrap();
        assert!(r.pass);
        assert_eq!(r.witnesses[0].tau, 1);
        assert_eq!(r.witnesses[0].value, 1);
    }
}
