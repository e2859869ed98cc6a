use super::{Elem, Field};
use crate::error::{Error, Result};

/// The unique subfield of a given order inside a [`Field`].
///
/// Inside `F_{p^e}` with primitive `ω`, the subfield of order `p^d` (for
/// `d | e`) is `{0} ∪ ⟨ω^{(p^e-1)/(p^d-1)}⟩`, so membership is a divisibility
/// test on the discrete log.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Subfield {
    order: u64,
    degree: u32,
    step: u32,
}

impl Field {
    pub fn subfield(&self, order: u64) -> Result<Subfield> {
        let missing = || Error::NoSuchSubfield {
            order,
            field_order: self.order(),
        };
        let (p, d) = super::prime_power(order).ok_or_else(missing)?;
        if p != self.characteristic() || !self.degree().is_multiple_of(d) {
            return Err(missing());
        }
        Ok(Subfield {
            order,
            degree: d,
            step: self.group_order() / (order as u32 - 1),
        })
    }

    /// The whole field viewed as its own subfield.
    pub fn full_subfield(&self) -> Subfield {
        Subfield {
            order: self.order(),
            degree: self.degree(),
            step: 1,
        }
    }
}

impl Subfield {
    pub fn order(&self) -> u64 {
        self.order
    }

    /// Degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Log of the subfield generator in the ambient field.
    pub fn generator_log(&self) -> u32 {
        self.step
    }

    /// A generator of the multiplicative group of the subfield.
    pub fn generator(&self, f: &Field) -> Elem {
        f.exp(self.step as u64)
    }

    pub fn contains(&self, f: &Field, x: Elem) -> bool {
        match f.dlog(x) {
            Ok(l) => l % self.step == 0,
            Err(_) => true,
        }
    }

    /// Elements in canonical order: zero, then increasing log in the ambient field.
    pub fn elements(&self, f: &Field) -> Vec<Elem> {
        std::iter::once(Elem::ZERO)
            .chain((0..self.order - 1).map(|j| f.exp(j * self.step as u64)))
            .collect()
    }

    pub fn is_subfield_of(&self, other: &Subfield) -> bool {
        other.degree.is_multiple_of(self.degree)
    }

    /// Relative norm of `x` from this subfield down to `to`: `x^{(Q-1)/(q-1)}`.
    pub fn rel_norm(&self, f: &Field, x: Elem, to: &Subfield) -> Result<Elem> {
        if !self.contains(f, x) {
            return Err(Error::NotInSubfield { order: self.order });
        }
        if !to.is_subfield_of(self) {
            return Err(Error::NoSuchSubfield {
                order: to.order,
                field_order: self.order,
            });
        }
        Ok(f.pow(x, (self.order - 1) / (to.order - 1)))
    }

    /// Whether `x^2 + b x + c` has no root in this subfield, by exhaustive search.
    pub fn is_irreducible_quadratic(&self, f: &Field, b: Elem, c: Elem) -> Result<bool> {
        for coeff in [b, c] {
            if !self.contains(f, coeff) {
                return Err(Error::NotInSubfield { order: self.order });
            }
        }
        Ok(self
            .elements(f)
            .into_iter()
            .all(|x| !f.add(f.mul(x, f.add(x, b)), c).is_zero()))
    }
}
