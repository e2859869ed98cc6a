//! File formats: field descriptors, subspace and code files, OOS JSON, and the
//! plain-text OOC listing.
//!
//! Field elements are written as their log index with `-1` for zero.

use std::fmt::Display;
use std::sync::Arc;

use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::ooc::{Codeword, IndexSet, OocCode};
use crate::subspace::{Ambient, CyclicSubspaceCode, Subspace};

pub(crate) fn ser_display<T: Display, S: Serializer>(
    v: &T,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldDescriptor {
    pub p: u32,
    pub e: u32,
    /// Monic modulus, coefficients low-to-high.
    pub modulus: Vec<u32>,
    /// Coefficient encoding of the primitive element `ω`.
    pub omega_index: u32,
}

impl FieldDescriptor {
    pub fn of(field: &Field) -> Self {
        FieldDescriptor {
            p: field.characteristic(),
            e: field.degree(),
            modulus: field.modulus().to_vec(),
            omega_index: field.omega().encoding(),
        }
    }

    pub fn build(&self) -> Result<Field> {
        Field::with_omega(self.p, self.e, &self.modulus, self.omega_index)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceFile {
    /// Optional inside a code file, where the top-level descriptor applies.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub field: Option<FieldDescriptor>,
    pub ground_q: u64,
    pub basis: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeFile {
    pub field: FieldDescriptor,
    pub orbits: Vec<SubspaceFile>,
}

impl SubspaceFile {
    pub fn of(u: &Subspace, with_field: bool) -> Self {
        let f = u.ambient().field();
        SubspaceFile {
            field: with_field.then(|| FieldDescriptor::of(f)),
            ground_q: u.ambient().q(),
            basis: u.basis().iter().map(|&x| f.log_index(x)).collect(),
        }
    }

    fn subspace_in(&self, ambient: &Arc<Ambient>) -> Result<Subspace> {
        let f = ambient.field();
        let basis = self
            .basis
            .iter()
            .map(|&i| f.from_log_index(i))
            .collect::<Result<Vec<_>>>()?;
        Ok(Subspace::span(ambient, &basis))
    }

    /// A standalone subspace file; it must carry its own field descriptor.
    pub fn load(&self) -> Result<Subspace> {
        let desc = self
            .field
            .as_ref()
            .ok_or_else(|| Error::Parse("subspace file has no field descriptor".into()))?;
        let ambient = Ambient::from_field(desc.build()?, self.ground_q)?;
        self.subspace_in(&ambient)
    }
}

impl CodeFile {
    pub fn of(code: &CyclicSubspaceCode) -> Self {
        CodeFile {
            field: FieldDescriptor::of(code.ambient().field()),
            orbits: code
                .representatives()
                .iter()
                .map(|u| SubspaceFile::of(u, false))
                .collect(),
        }
    }

    pub fn load(&self) -> Result<CyclicSubspaceCode> {
        let first = self
            .orbits
            .first()
            .ok_or_else(|| Error::Parse("code file lists no orbits".into()))?;
        let ambient = Ambient::from_field(self.field.build()?, first.ground_q)?;
        let mut reps = Vec::with_capacity(self.orbits.len());
        for orbit in &self.orbits {
            if orbit.ground_q != first.ground_q {
                return Err(Error::AmbientMismatch);
            }
            if orbit.field.as_ref().is_some_and(|d| *d != self.field) {
                return Err(Error::AmbientMismatch);
            }
            reps.push(orbit.subspace_in(&ambient)?);
        }
        CyclicSubspaceCode::new(reps)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OosFile {
    pub n: usize,
    pub sets: Vec<Vec<usize>>,
}

impl OosFile {
    pub fn of(sets: &[IndexSet]) -> Result<Self> {
        let n = sets.first().ok_or(Error::EmptyFamily)?.n();
        Ok(OosFile {
            n,
            sets: sets.iter().map(|s| s.members().to_vec()).collect(),
        })
    }

    pub fn load(&self) -> Result<Vec<IndexSet>> {
        self.sets
            .iter()
            .map(|s| IndexSet::new(self.n, s.iter().copied()))
            .collect()
    }
}

/// One codeword per line after a `# n=.. w=.. lambda=.. size=..` header.
pub fn write_ooc_text(code: &OocCode) -> String {
    let mut out = format!(
        "# n={} w={} lambda={} size={}\n",
        code.n,
        code.w,
        code.lambda,
        code.words.len()
    );
    for word in &code.words {
        out.push_str(&word.to_bit_string());
        out.push('\n');
    }
    out
}

/// Parses the text listing, checking that lengths, weights and count agree
/// with the header.
pub fn parse_ooc_text(text: &str) -> Result<OocCode> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines
        .next()
        .ok_or_else(|| Error::Parse("empty OOC file".into()))?;
    let fields = header
        .strip_prefix('#')
        .ok_or_else(|| Error::Parse("missing '# n=.. w=.. lambda=.. size=..' header".into()))?;
    let (mut n, mut w, mut lambda, mut size) = (None, None, None, None);
    for tok in fields.split_whitespace() {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("malformed header token {tok:?}")))?;
        let value: usize = value
            .parse()
            .map_err(|_| Error::Parse(format!("header value {value:?} is not an integer")))?;
        match key {
            "n" => n = Some(value),
            "w" => w = Some(value),
            "lambda" => lambda = Some(value),
            "size" => size = Some(value),
            other => return Err(Error::Parse(format!("unknown header key {other:?}"))),
        }
    }
    let missing = |k: &str| Error::Parse(format!("header lacks {k}"));
    let n = n.ok_or_else(|| missing("n"))?;
    let w = w.ok_or_else(|| missing("w"))?;
    let lambda = lambda.ok_or_else(|| missing("lambda"))?;
    let size = size.ok_or_else(|| missing("size"))?;

    let words = lines.map(Codeword::parse).collect::<Result<Vec<_>>>()?;
    if words.is_empty() {
        return Err(Error::EmptyFamily);
    }
    for (i, word) in words.iter().enumerate() {
        if word.len() != n || word.weight() != w {
            return Err(Error::Parse(format!(
                "codeword {i} has length {} and weight {}, header declares n={n} w={w}",
                word.len(),
                word.weight()
            )));
        }
    }
    if words.len() != size {
        return Err(Error::Parse(format!(
            "header declares size={size}, found {} codewords",
            words.len()
        )));
    }
    Ok(OocCode {
        n,
        w,
        lambda,
        words,
    })
}
