//! Table-driven arithmetic in small extension fields `F_{p^e}`.
//!
//! Elements are stored by their coefficient encoding: the polynomial
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` modulo the field modulus maps to the
//! integer `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`. Multiplication, inversion
//! and discrete logarithms go through exp/log tables built once against a
//! fixed primitive element `ω`, so every product and every `dlog` is O(1).
//!
//! Construction is deterministic. Without an explicit modulus the field uses
//! the lexicographically smallest monic irreducible polynomial (coefficient
//! lists compared from `c_0` upward), and `ω` is the smallest encoding whose
//! multiplicative order is `p^e - 1`.

mod poly;
mod subfield;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

pub use subfield::Subfield;

/// Largest supported field order.
pub const MAX_FIELD_ORDER: u64 = 1 << 22;

/// A field element in coefficient encoding.
///
/// The encoding is only meaningful relative to the [`Field`] that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Elem(pub(crate) u32);

impl Elem {
    pub const ZERO: Elem = Elem(0);
    pub const ONE: Elem = Elem(1);

    pub fn encoding(self) -> u32 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

const NO_LOG: u32 = u32::MAX;

#[derive(Debug, Clone)]
pub struct Field {
    p: u32,
    e: u32,
    modulus: Vec<u32>,
    omega: u32,
    /// `exp[i]` is the encoding of `ω^i`, for `0 <= i < N`.
    exp: Vec<u32>,
    /// `log[v]` is the discrete log of the element with encoding `v`; `log[0]` is unused.
    log: Vec<u32>,
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.e == other.e
            && self.modulus == other.modulus
            && self.omega == other.omega
    }
}

impl Eq for Field {}

impl Field {
    /// Builds `F_{p^e}`, validating the modulus when one is supplied and
    /// picking the canonical one otherwise.
    pub fn new(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Self> {
        let modulus = Self::checked_modulus(p, e, modulus)?;
        let omega = Self::find_primitive(p, &modulus);
        Self::build(p, e, modulus, omega)
    }

    /// Builds `F_{p^e}` with an explicit modulus and primitive element, as
    /// recorded in a field descriptor.
    pub fn with_omega(p: u32, e: u32, modulus: &[u32], omega_index: u32) -> Result<Self> {
        let modulus = Self::checked_modulus(p, e, Some(modulus))?;
        Self::build(p, e, modulus, omega_index)
    }

    fn checked_modulus(p: u32, e: u32, modulus: Option<&[u32]>) -> Result<Vec<u32>> {
        if !is_prime(p as u64) {
            return Err(Error::NotPrime(p as u64));
        }
        if e == 0 {
            return Err(Error::InvalidParams(
                "extension degree must be at least 1".into(),
            ));
        }
        let order = (p as u64).checked_pow(e).filter(|&o| o <= MAX_FIELD_ORDER);
        let Some(_) = order else {
            return Err(Error::FieldTooLarge((p as u128).pow(e.min(64)) as u64));
        };
        match modulus {
            Some(m) => {
                if m.len() != e as usize + 1 {
                    return Err(Error::InvalidModulus(format!(
                        "expected {} coefficients, got {}",
                        e + 1,
                        m.len()
                    )));
                }
                if m[e as usize] != 1 {
                    return Err(Error::InvalidModulus("modulus is not monic".into()));
                }
                if let Some(&c) = m.iter().find(|&&c| c >= p) {
                    return Err(Error::InvalidModulus(format!(
                        "coefficient {c} not reduced mod {p}"
                    )));
                }
                if let Some(factor) = poly::find_factor(m, p) {
                    return Err(Error::ReducibleModulus {
                        modulus: m.to_vec(),
                        factor,
                    });
                }
                Ok(m.to_vec())
            }
            None => Ok(Self::canonical_modulus(p, e as usize)),
        }
    }

    fn canonical_modulus(p: u32, e: usize) -> Vec<u32> {
        let count = (p as u64).pow(e as u32);
        (0..count)
            .map(|idx| poly::monic_lex(idx, e, p))
            .find(|f| poly::find_factor(f, p).is_none())
            .expect("an irreducible polynomial of every degree exists")
    }

    fn find_primitive(p: u32, modulus: &[u32]) -> u32 {
        let e = modulus.len() - 1;
        let order = (p as u64).pow(e as u32);
        let n = order - 1;
        let factors = prime_factors(n);
        (1..order as u32)
            .find(|&g| {
                let g = poly::decode(g, p, e);
                factors
                    .iter()
                    .all(|&r| poly_pow(&g, n / r, modulus, p) != one_poly(e))
            })
            .expect("the multiplicative group of a finite field is cyclic")
    }

    fn build(p: u32, e: u32, modulus: Vec<u32>, omega: u32) -> Result<Self> {
        let order = (p as u64).pow(e) as u32;
        if omega == 0 || omega >= order {
            return Err(Error::NotPrimitive(omega));
        }
        let n = (order - 1) as usize;
        let g = poly::decode(omega, p, e as usize);
        let mut exp = Vec::with_capacity(n);
        let mut log = vec![NO_LOG; order as usize];
        let mut cur = one_poly(e as usize);
        for i in 0..n {
            let v = poly::encode(&cur, p);
            if log[v as usize] != NO_LOG {
                return Err(Error::NotPrimitive(omega));
            }
            log[v as usize] = i as u32;
            exp.push(v);
            cur = poly::mul_mod(&cur, &g, &modulus, p);
        }
        if poly::encode(&cur, p) != 1 {
            return Err(Error::NotPrimitive(omega));
        }
        Ok(Field {
            p,
            e,
            modulus,
            omega,
            exp,
            log,
        })
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.e
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Number of elements, `p^e`.
    pub fn order(&self) -> u64 {
        self.log.len() as u64
    }

    /// Order of the multiplicative group, `N = p^e - 1`.
    pub fn group_order(&self) -> u32 {
        self.exp.len() as u32
    }

    pub fn omega(&self) -> Elem {
        Elem(self.omega)
    }

    pub fn zero(&self) -> Elem {
        Elem::ZERO
    }

    pub fn one(&self) -> Elem {
        Elem::ONE
    }

    /// The image of the integer `c` in the prime field.
    pub fn constant(&self, c: u64) -> Elem {
        Elem((c % self.p as u64) as u32)
    }

    pub fn from_encoding(&self, v: u32) -> Result<Elem> {
        if (v as u64) < self.order() {
            Ok(Elem(v))
        } else {
            Err(Error::Parse(format!(
                "encoding {v} out of range for field of order {}",
                self.order()
            )))
        }
    }

    /// `ω^i`.
    pub fn exp(&self, i: u64) -> Elem {
        Elem(self.exp[(i % self.exp.len() as u64) as usize])
    }

    /// Discrete logarithm to the base `ω`.
    pub fn dlog(&self, x: Elem) -> Result<u32> {
        match self.log[x.0 as usize] {
            NO_LOG => Err(Error::ZeroLog),
            l => Ok(l),
        }
    }

    /// Log index with `-1` standing for zero, as used in serialized forms.
    pub fn log_index(&self, x: Elem) -> i64 {
        match self.log[x.0 as usize] {
            NO_LOG => -1,
            l => l as i64,
        }
    }

    pub fn from_log_index(&self, i: i64) -> Result<Elem> {
        match i {
            -1 => Ok(Elem::ZERO),
            i if i >= 0 && i < self.group_order() as i64 => Ok(self.exp(i as u64)),
            _ => Err(Error::Parse(format!("log index {i} out of range"))),
        }
    }

    /// All elements in canonical order: zero first, then `ω^0, ω^1, ...`.
    pub fn elements_by_log(&self) -> impl Iterator<Item = Elem> + '_ {
        std::iter::once(Elem::ZERO).chain(self.exp.iter().map(|&v| Elem(v)))
    }

    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        if self.p == 2 {
            return Elem(a.0 ^ b.0);
        }
        let p = self.p as u64;
        let (mut x, mut y) = (a.0 as u64, b.0 as u64);
        let (mut out, mut place) = (0u64, 1u64);
        while x > 0 || y > 0 {
            out += (x % p + y % p) % p * place;
            place *= p;
            x /= p;
            y /= p;
        }
        Elem(out as u32)
    }

    pub fn neg(&self, a: Elem) -> Elem {
        if self.p == 2 {
            return a;
        }
        let p = self.p as u64;
        let mut x = a.0 as u64;
        let (mut out, mut place) = (0u64, 1u64);
        while x > 0 {
            out += (p - x % p) % p * place;
            place *= p;
            x /= p;
        }
        Elem(out as u32)
    }

    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a.is_zero() || b.is_zero() {
            return Elem::ZERO;
        }
        let n = self.exp.len();
        let s = self.log[a.0 as usize] as usize + self.log[b.0 as usize] as usize;
        Elem(self.exp[if s >= n { s - n } else { s }])
    }

    pub fn inv(&self, a: Elem) -> Result<Elem> {
        let l = self.dlog(a)? as usize;
        let n = self.exp.len();
        Ok(Elem(self.exp[(n - l) % n]))
    }

    pub fn pow(&self, a: Elem, k: u64) -> Elem {
        if k == 0 {
            return Elem::ONE;
        }
        if a.is_zero() {
            return Elem::ZERO;
        }
        let n = self.exp.len() as u64;
        let l = self.log[a.0 as usize] as u64;
        Elem(self.exp[((l as u128 * (k % n) as u128) % n as u128) as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn element_order(&self, a: Elem) -> Result<u64> {
        let l = self.dlog(a)? as u64;
        let n = self.group_order() as u64;
        Ok(n / num_integer::gcd(n, l))
    }
}

fn one_poly(e: usize) -> Vec<u32> {
    let mut v = vec![0; e];
    v[0] = 1;
    v
}

fn poly_pow(base: &[u32], mut k: u64, modulus: &[u32], p: u32) -> Vec<u32> {
    let e = modulus.len() - 1;
    let mut result = one_poly(e);
    let mut b = base.to_vec();
    while k > 0 {
        if k & 1 == 1 {
            result = poly::mul_mod(&result, &b, modulus, p);
        }
        b = poly::mul_mod(&b, &b, modulus, p);
        k >>= 1;
    }
    result
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Splits `q = p^e` into `(p, e)`.
pub fn prime_power(q: u64) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut e = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p as u32, e))
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// The Gaussian binomial coefficient: number of `k`-dimensional subspaces of `F_q^m`.
///
/// Returns zero when `k > m`.
pub fn gaussian_binomial(m: u32, k: u32, q: u64) -> BigUint {
    if k > m {
        return BigUint::zero();
    }
    let q = BigUint::from(q);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..k {
        num *= q.pow(m - i) - 1u32;
        den *= q.pow(k - i) - 1u32;
    }
    num / den
}
