mod common;

use rand::Rng;
use subspace_ooc::field::{Elem, Field};

fn all(f: &Field) -> Vec<Elem> {
    f.elements_by_log().collect()
}

#[test]
fn exp_log_bijection() {
    for (p, e) in [(2, 1), (2, 6), (2, 10), (3, 4), (5, 2), (5, 4), (7, 3)] {
        let f = Field::new(p, e, None).unwrap();
        let n = f.group_order();
        for i in 0..n {
            assert_eq!(f.dlog(f.exp(i as u64)).unwrap(), i);
        }
        let mut seen = vec![false; f.order() as usize];
        for x in f.elements_by_log().skip(1) {
            assert_eq!(f.exp(f.dlog(x).unwrap() as u64), x);
            assert!(!std::mem::replace(&mut seen[x.encoding() as usize], true));
        }
    }
}

#[test]
fn axioms_exhaustive_up_to_81() {
    for (p, e) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (3, 4)] {
        let f = Field::new(p, e, None).unwrap();
        let xs = all(&f);
        for &a in &xs {
            assert_eq!(f.add(a, f.neg(a)), f.zero());
            if !a.is_zero() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
            }
            for &b in &xs {
                assert_eq!(f.add(a, b), f.add(b, a));
                assert_eq!(f.mul(a, b), f.mul(b, a));
                for &c in &xs {
                    assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                    assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
    }
}

#[test]
fn axioms_random_above_81() {
    let mut rng = common::rng(11);
    for (p, e) in [(2, 8), (5, 4), (7, 4), (2, 16)] {
        let f = Field::new(p, e, None).unwrap();
        let q = f.order() as u32;
        let mut pick = || f.from_encoding(rng.gen_range(0..q)).unwrap();
        for _ in 0..2000 {
            let (a, b, c) = (pick(), pick(), pick());
            assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
            assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
            assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
            assert_eq!(f.sub(f.add(a, b), b), a);
        }
    }
}

#[test]
fn subfield_closure_and_size() {
    for (p, e) in [(2, 6), (3, 4), (5, 4), (2, 12)] {
        let f = Field::new(p, e, None).unwrap();
        for d in (1..=e).filter(|d| e % d == 0) {
            let order = (p as u64).pow(d);
            let sub = f.subfield(order).unwrap();
            let xs = sub.elements(&f);
            assert_eq!(xs.len() as u64, order);
            if order > 256 {
                continue;
            }
            for &a in &xs {
                for &b in &xs {
                    assert!(sub.contains(&f, f.add(a, b)));
                    assert!(sub.contains(&f, f.mul(a, b)));
                }
            }
        }
    }
}

#[test]
fn rel_norm_lands_in_subfield_and_is_multiplicative() {
    // (big field, middle order, ground order) with middle order at most 25
    for (p, e, mid, ground) in [
        (3, 4, 9, 3),
        (5, 4, 25, 5),
        (2, 4, 4, 2),
        (2, 6, 8, 2),
        (2, 4, 16, 4),
    ] {
        let f = Field::new(p, e, None).unwrap();
        let sub = f.subfield(mid).unwrap();
        let to = f.subfield(ground).unwrap();
        let xs = sub.elements(&f);
        for &a in &xs {
            let na = sub.rel_norm(&f, a, &to).unwrap();
            assert!(to.contains(&f, na));
            for &b in &xs {
                let nb = sub.rel_norm(&f, b, &to).unwrap();
                assert_eq!(sub.rel_norm(&f, f.mul(a, b), &to).unwrap(), f.mul(na, nb));
            }
        }
    }
}

#[test]
fn frobenius_is_linear() {
    for (p, e) in [(2, 6), (3, 4), (5, 2), (7, 2)] {
        let f = Field::new(p, e, None).unwrap();
        let xs = all(&f);
        for &a in &xs {
            for &b in &xs {
                let lhs = f.pow(f.add(a, b), p as u64);
                assert_eq!(lhs, f.add(f.pow(a, p as u64), f.pow(b, p as u64)));
            }
        }
    }
}
