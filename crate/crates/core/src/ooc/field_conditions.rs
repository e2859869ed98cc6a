use super::IndexSet;
use crate::error::{Error, Result};
use crate::field::{Elem, Field};

/// `S(W) = {i : ω^i ∈ W}` as a subset of `Z_N`; zero is dropped.
pub fn s_of_w(field: &Field, w: &[Elem]) -> IndexSet {
    let n = field.group_order() as usize;
    IndexSet::new(
        n,
        w.iter()
            .filter_map(|&x| field.dlog(x).ok().map(|l| l as usize)),
    )
    .expect("discrete logs lie in Z_N")
}

/// `|W_i ∩ αW_j| = value` at a scalar `α`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FieldWitness {
    pub i: usize,
    pub j: usize,
    pub alpha: Elem,
    pub alpha_log: u32,
    pub value: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldConditionReport {
    /// `max |W_i ∩ αW_i|` over `α ∉ {0, 1}`.
    pub max_auto: usize,
    /// `max |W_i ∩ αW_j|` over `i ≠ j`, `α ≠ 0`.
    pub max_cross: usize,
    /// Where the overall maximum is attained: smallest `log α`, then smallest `(i, j)`.
    pub witness: Option<FieldWitness>,
    pub holds: bool,
}

/// Evaluates the multiplicative intersection conditions on subsets of `F_{q^m}^*`
/// directly in the field.
pub fn check_field_conditions(
    field: &Field,
    sets: &[Vec<Elem>],
    lambda: usize,
) -> Result<FieldConditionReport> {
    if sets.is_empty() {
        return Err(Error::EmptyFamily);
    }
    let mut sorted: Vec<Vec<Elem>> = Vec::with_capacity(sets.len());
    for (i, s) in sets.iter().enumerate() {
        if s.contains(&Elem::ZERO) {
            return Err(Error::ZeroInSet(i));
        }
        if s.is_empty() {
            return Err(Error::InvalidParams(format!("set {i} is empty")));
        }
        let mut v = s.clone();
        v.sort_unstable();
        v.dedup();
        sorted.push(v);
    }
    for i in 0..sorted.len() {
        for j in i + 1..sorted.len() {
            if sorted[i] == sorted[j] {
                return Err(Error::DuplicateMember(i, j));
            }
        }
    }

    let mut max_auto = 0;
    let mut max_cross = 0;
    let mut witness: Option<FieldWitness> = None;
    for a in 0..field.group_order() {
        let alpha = field.exp(a as u64);
        for (i, wi) in sorted.iter().enumerate() {
            for (j, wj) in sorted.iter().enumerate() {
                if i == j && a == 0 {
                    continue;
                }
                let value = wj
                    .iter()
                    .filter(|&&x| wi.binary_search(&field.mul(alpha, x)).is_ok())
                    .count();
                if i == j {
                    max_auto = max_auto.max(value);
                } else {
                    max_cross = max_cross.max(value);
                }
                if witness.is_none_or(|w| value > w.value) {
                    witness = Some(FieldWitness {
                        i,
                        j,
                        alpha,
                        alpha_log: a,
                        value,
                    });
                }
            }
        }
    }
    Ok(FieldConditionReport {
        max_auto,
        max_cross,
        witness,
        holds: max_auto.max(max_cross) <= lambda,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_of_w_basics() {
        let f = Field::new(3, 4, None).unwrap();
        assert_eq!(s_of_w(&f, &[f.one()]).members(), &[0]);
        assert_eq!(s_of_w(&f, &[f.exp(3), f.exp(7)]).members(), &[3, 7]);
        assert_eq!(
            s_of_w(&f, &[f.zero(), f.one(), f.omega()]).members(),
            &[0, 1]
        );
    }

    #[test]
    fn single_element_set() {
        let f = Field::new(3, 4, None).unwrap();
        // |{x} ∩ {αx}| = 0 whenever α ≠ 1
        let r = check_field_conditions(&f, &[vec![f.exp(9)]], 1).unwrap();
        assert!(r.holds);
        assert_eq!(r.max_auto, 0);
        assert!(
            check_field_conditions(&f, &[vec![f.exp(9)]], 0)
                .unwrap()
                .holds
        );
    }

    #[test]
    fn dilated_pair_fails_at_beta() {
        let f = Field::new(3, 4, None).unwrap();
        let w1: Vec<Elem> = [0u64, 2, 9, 30].iter().map(|&i| f.exp(i)).collect();
        let beta = f.exp(5);
        let w2: Vec<Elem> = w1.iter().map(|&x| f.mul(beta, x)).collect();
        let r = check_field_conditions(&f, &[w1.clone(), w2], 2).unwrap();
        assert!(!r.holds);
        let w = r.witness.unwrap();
        assert_eq!(w.value, w1.len());
        assert_eq!((w.i, w.j, w.alpha), (1, 0, beta));
    }

    #[test]
    fn zero_rejected() {
        let f = Field::new(2, 4, None).unwrap();
        assert!(matches!(
            check_field_conditions(&f, &[vec![f.one()], vec![f.zero(), f.omega()]], 1),
            Err(Error::ZeroInSet(1))
        ));
    }
}
