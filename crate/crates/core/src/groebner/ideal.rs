use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A squarefree monomial as a set of variable indices: `x_i` is bit `i-1`, `y_i` is bit
/// `n+i-1`.
pub type Monomial = u128;

/// Squarefree monomial ideal in `x_1..x_n, y_1..y_n`, stored by its minimal generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    n: usize,
    generators: Vec<Monomial>,
}

pub const MAX_IDEAL_N: usize = 64;

impl MonomialIdeal {
    /// Keeps the minimal elements of `generators`.
    pub fn new(n: usize, generators: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        if n > MAX_IDEAL_N {
            return Err(Error::cap("ideal vertex count", MAX_IDEAL_N, n));
        }
        let range = full(2 * n);
        let mut gens: Vec<Monomial> = generators.into_iter().collect();
        if let Some(&bad) = gens.iter().find(|&&g| g & !range != 0) {
            return Err(Error::Parse(format!(
                "monomial {bad:#x} uses a variable beyond 2n = {}",
                2 * n
            )));
        }
        gens.sort_by_key(|g| (g.count_ones(), *g));
        gens.dedup();
        let mut minimal: Vec<Monomial> = Vec::with_capacity(gens.len());
        for g in gens {
            if !minimal.iter().any(|&h| h & !g == 0) {
                minimal.push(g);
            }
        }
        minimal.sort_by(|&a, &b| bits(a).cmp(bits(b)));
        Ok(MonomialIdeal {
            n,
            generators: minimal,
        })
    }

    /// Fails instead of discarding non-minimal or repeated generators.
    pub fn new_minimal(n: usize, generators: Vec<Monomial>) -> Result<Self> {
        let count = generators.len();
        let ideal = MonomialIdeal::new(n, generators)?;
        if ideal.generators.len() != count {
            return Err(Error::Internal(format!(
                "{} of {count} generators are redundant",
                count - ideal.generators.len()
            )));
        }
        Ok(ideal)
    }

    /// Graph vertex count; the ring has `2n` variables.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_vars(&self) -> usize {
        2 * self.n
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn contains_generator(&self, m: Monomial) -> bool {
        self.generators.contains(&m)
    }

    /// Union of all generator supports.
    pub fn support(&self) -> Monomial {
        self.generators.iter().fold(0, |a, &g| a | g)
    }

    pub fn x(&self, i: usize) -> Monomial {
        1 << (i - 1)
    }

    pub fn y(&self, i: usize) -> Monomial {
        1 << (self.n + i - 1)
    }

    pub fn var_name(&self, idx: usize) -> String {
        var_name(self.n, idx)
    }

    pub fn names(&self, m: Monomial) -> Vec<String> {
        names(self.n, m)
    }

    pub fn parse_monomial(&self, vars: &[impl AsRef<str>]) -> Result<Monomial> {
        parse_monomial(self.n, vars)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ideal serializes")
    }
}

fn full(bits: usize) -> u128 {
    if bits >= 128 {
        u128::MAX
    } else {
        (1u128 << bits) - 1
    }
}

pub(crate) fn var_name(n: usize, idx: usize) -> String {
    if idx < n {
        format!("x{}", idx + 1)
    } else {
        format!("y{}", idx - n + 1)
    }
}

pub(crate) fn names(n: usize, m: Monomial) -> Vec<String> {
    bits(m).map(|i| var_name(n, i)).collect()
}

/// Set bits of `m`, increasing.
pub(crate) fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            i
        })
    })
}

pub(crate) fn parse_monomial(n: usize, vars: &[impl AsRef<str>]) -> Result<Monomial> {
    let mut m: Monomial = 0;
    for v in vars {
        let v = v.as_ref();
        let (kind, idx) = v.split_at(v.len().min(1));
        let i: usize = idx
            .parse()
            .map_err(|_| Error::Parse(format!("bad variable {v:?}")))?;
        if i == 0 || i > n {
            return Err(Error::Parse(format!(
                "variable {v:?} out of range for n = {n}"
            )));
        }
        let bit = match kind {
            "x" => i - 1,
            "y" => n + i - 1,
            _ => {
                return Err(Error::Parse(format!(
                    "bad variable {v:?}, expected x<i> or y<i>"
                )))
            }
        };
        if m >> bit & 1 == 1 {
            return Err(Error::Parse(format!(
                "variable {v:?} repeated in a squarefree monomial"
            )));
        }
        m |= 1 << bit;
    }
    Ok(m)
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self
            .generators
            .iter()
            .map(|&g| self.names(g).concat())
            .collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

#[derive(Serialize, Deserialize)]
struct IdealJson {
    n: usize,
    generators: Vec<Vec<String>>,
}

impl Serialize for MonomialIdeal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IdealJson {
            n: self.n,
            generators: self.generators.iter().map(|&g| self.names(g)).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MonomialIdeal {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = IdealJson::deserialize(d)?;
        let gens = raw
            .generators
            .iter()
            .map(|g| parse_monomial(raw.n, g))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        MonomialIdeal::new(raw.n, gens).map_err(serde::de::Error::custom)
    }
}
