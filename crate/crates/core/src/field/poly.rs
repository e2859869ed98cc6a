//! Dense polynomials over a prime field, coefficients stored low-to-high.
//!
//! Only what field construction needs: reduction, multiplication modulo a
//! monic modulus, and a trial-division irreducibility test.

pub(crate) fn trim(mut a: Vec<u32>) -> Vec<u32> {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

pub(crate) fn degree(a: &[u32]) -> Option<usize> {
    a.iter().rposition(|&c| c != 0)
}

fn inv_mod(a: u32, p: u32) -> u32 {
    // p is prime and small, Fermat is fine
    let mut result = 1u64;
    let mut base = a as u64 % p as u64;
    let mut exp = p as u64 - 2;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    result as u32
}

/// Remainder of `a` modulo `b` (b nonzero).
pub(crate) fn rem(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let db = degree(b).expect("division by zero polynomial");
    let lead_inv = inv_mod(b[db], p) as u64;
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let factor = r[dr] as u64 * lead_inv % p as u64;
        let shift = dr - db;
        for (i, &c) in b.iter().enumerate().take(db + 1) {
            let sub = factor * c as u64 % p as u64;
            let slot = &mut r[shift + i];
            *slot = ((*slot as u64 + p as u64 - sub) % p as u64) as u32;
        }
        r = trim(r);
    }
    r
}

/// Product of `a` and `b` reduced modulo the monic `modulus`, padded to `deg(modulus)` coefficients.
pub(crate) fn mul_mod(a: &[u32], b: &[u32], modulus: &[u32], p: u32) -> Vec<u32> {
    let e = modulus.len() - 1;
    let mut prod = vec![0u64; a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p as u64;
        }
    }
    // reduce from the top using x^e = -(c_0 + ... + c_{e-1} x^{e-1})
    for d in (e..prod.len()).rev() {
        let c = prod[d];
        if c == 0 {
            continue;
        }
        prod[d] = 0;
        for (i, &m) in modulus.iter().enumerate().take(e) {
            let sub = c * m as u64 % p as u64;
            prod[d - e + i] = (prod[d - e + i] + p as u64 - sub) % p as u64;
        }
    }
    let mut out: Vec<u32> = prod.into_iter().take(e).map(|c| c as u32).collect();
    out.resize(e, 0);
    out
}

pub(crate) fn encode(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c)
}

pub(crate) fn decode(mut v: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(len);
    for _ in 0..len {
        out.push(v % p);
        v /= p;
    }
    out
}

/// Monic polynomial of the given degree whose lower coefficients are the
/// base-`p` digits of `index`, with `c_0` as the most significant digit.
///
/// Iterating `index` upward walks monic polynomials in lexicographic order of
/// their low-to-high coefficient lists.
pub(crate) fn monic_lex(index: u64, degree: usize, p: u32) -> Vec<u32> {
    let mut coeffs = vec![0u32; degree + 1];
    let mut v = index;
    for slot in coeffs[..degree].iter_mut().rev() {
        *slot = (v % p as u64) as u32;
        v /= p as u64;
    }
    coeffs[degree] = 1;
    coeffs
}

/// A monic factor of degree `1..=deg(f)/2`, if one exists.
pub(crate) fn find_factor(f: &[u32], p: u32) -> Option<Vec<u32>> {
    let df = degree(f)?;
    for d in 1..=df / 2 {
        let count = (p as u64).pow(d as u32);
        for idx in 0..count {
            let g = monic_lex(idx, d, p);
            if degree(&rem(f, &g, p)).is_none() {
                return Some(g);
            }
        }
    }
    None
}
