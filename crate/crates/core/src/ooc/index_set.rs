use crate::error::{Error, Result};

/// A subset of `Z_n`, kept sorted and duplicate-free.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet {
    n: usize,
    members: Vec<usize>,
}

impl IndexSet {
    pub fn new(n: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut members: Vec<usize> = members.into_iter().collect();
        if let Some(&bad) = members.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, n });
        }
        members.sort_unstable();
        members.dedup();
        Ok(IndexSet { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.binary_search(&i).is_ok()
    }

    /// `X + τ` in `Z_n`.
    pub fn shift(&self, tau: i64) -> IndexSet {
        let n = self.n as i64;
        let t = tau.rem_euclid(n.max(1)) as usize;
        IndexSet {
            n: self.n,
            members: rotated(&self.members, t, self.n).collect(),
        }
    }

    /// The codeword with this support.
    pub fn to_codeword(&self) -> Codeword {
        let mut bits = vec![false; self.n];
        for &i in &self.members {
            bits[i] = true;
        }
        Codeword {
            bits,
            weight: self.members.len(),
        }
    }
}

/// Sorted members of `X + τ`, without allocating: the tail that wraps past `n`
/// comes first.
pub(crate) fn rotated(members: &[usize], tau: usize, n: usize) -> impl Iterator<Item = usize> + '_ {
    let split = members.partition_point(|&a| a + tau < n);
    members[split..]
        .iter()
        .map(move |&a| a + tau - n)
        .chain(members[..split].iter().map(move |&a| a + tau))
}

/// A binary word of length `n` with cached Hamming weight.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Codeword {
    bits: Vec<bool>,
    weight: usize,
}

impl Codeword {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        let weight = bits.iter().filter(|&&b| b).count();
        Codeword { bits, weight }
    }

    /// Parses a string of `0`/`1` characters.
    pub fn parse(s: &str) -> Result<Self> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Parse(format!(
                    "unexpected character {other:?} in codeword"
                ))),
            })
            .collect::<Result<Vec<bool>>>()?;
        Ok(Self::from_bits(bits))
    }

    /// The word whose support is `members` (the inverse of [`support`](Self::support)).
    pub fn from_support(n: usize, members: &[usize]) -> Result<Self> {
        Ok(IndexSet::new(n, members.iter().copied())?.to_codeword())
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.weight
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn support(&self) -> IndexSet {
        IndexSet {
            n: self.bits.len(),
            members: self
                .bits
                .iter()
                .enumerate()
                .filter_map(|(i, &b)| b.then_some(i))
                .collect(),
        }
    }

    pub fn to_bit_string(&self) -> String {
        self.bits
            .iter()
            .map(|&b| if b { '1' } else { '0' })
            .collect()
    }
}
