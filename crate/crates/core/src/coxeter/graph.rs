use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// A Coxeter matrix together with an optional type name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterGraph {
    m: Vec<Vec<u32>>,
    name: Option<String>,
}

/// JSON form of a raw Coxeter matrix.
#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct MatrixSpec {
    rank: usize,
    m: Vec<Vec<u32>>,
}

/// The finite irreducible families accepted by name.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Family {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    G2,
    H(usize),
    I2(u32),
}

impl Family {
    fn parse(s: &str) -> Option<Family> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m: u32 = rest.trim().parse().ok()?;
            return (m >= 2).then_some(Family::I2(m));
        }
        let (head, tail) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let n: usize = tail.parse().ok()?;
        let fam = match head {
            "A" if n >= 1 => Family::A(n),
            "B" | "C" if n >= 2 => Family::B(n),
            "D" if n >= 4 => Family::D(n),
            "E" if (6..=8).contains(&n) => Family::E(n),
            "F" if n == 4 => Family::F4,
            "G" if n == 2 => Family::G2,
            "H" if (2..=4).contains(&n) => Family::H(n),
            _ => return None,
        };
        Some(fam)
    }

    fn rank(self) -> usize {
        match self {
            Family::A(n) | Family::B(n) | Family::D(n) | Family::E(n) | Family::H(n) => n,
            Family::F4 => 4,
            Family::G2 | Family::I2(_) => 2,
        }
    }

    /// Bourbaki numbering, zero-based generators.
    fn matrix(self) -> Vec<Vec<u32>> {
        let n = self.rank();
        let mut m = vec![vec![2u32; n]; n];
        let mut set = |i: usize, j: usize, v: u32| {
            m[i][j] = v;
            m[j][i] = v;
        };
        match self {
            Family::A(_) => (1..n).for_each(|i| set(i - 1, i, 3)),
            Family::B(_) => {
                (1..n).for_each(|i| set(i - 1, i, 3));
                set(n - 2, n - 1, 4);
            }
            Family::D(_) => {
                (1..n - 1).for_each(|i| set(i - 1, i, 3));
                set(n - 3, n - 1, 3);
            }
            Family::E(_) => {
                set(0, 2, 3);
                set(1, 3, 3);
                (3..n).for_each(|i| set(i - 1, i, 3));
            }
            Family::F4 => {
                set(0, 1, 3);
                set(1, 2, 4);
                set(2, 3, 3);
            }
            Family::G2 => set(0, 1, 6),
            Family::H(_) => {
                set(0, 1, 5);
                (2..n).for_each(|i| set(i - 1, i, 3));
            }
            Family::I2(k) => set(0, 1, k),
        }
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        m
    }
}

impl CoxeterGraph {
    /// Validates a raw Coxeter matrix. Finiteness is not checked here; the
    /// root-count cap catches infinite types during generation.
    pub fn from_matrix(m: Vec<Vec<u32>>) -> Result<Self> {
        let n = m.len();
        if n == 0 {
            return Err(Error::InvalidGraph("rank must be positive".into()));
        }
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGraph(format!(
                    "row {i} has length {}",
                    row.len()
                )));
            }
            if row[i] != 1 {
                return Err(Error::InvalidGraph(format!("m[{i}][{i}] must be 1")));
            }
            for (j, &v) in row.iter().enumerate() {
                if i != j && v < 2 {
                    return Err(Error::InvalidGraph(format!("m[{i}][{j}] = {v} is below 2")));
                }
                if m[j][i] != v {
                    return Err(Error::InvalidGraph(format!(
                        "matrix is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(CoxeterGraph { m, name: None })
    }

    /// Parses a finite type name such as `A3`, `B4`, `H3`, `F4` or `I2(7)`.
    pub fn named(name: &str) -> Result<Self> {
        let fam = Family::parse(name).ok_or_else(|| Error::UnknownType(name.to_string()))?;
        let mut g = CoxeterGraph::from_matrix(fam.matrix())?;
        g.name = Some(name.trim().to_string());
        Ok(g)
    }

    /// Parses `{"rank": n, "m": [[...]]}`.
    pub fn from_json(json: &str) -> Result<Self> {
        let spec: MatrixSpec =
            serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
        if spec.m.len() != spec.rank {
            return Err(Error::InvalidGraph(format!(
                "rank {} but matrix has {} rows",
                spec.rank,
                spec.m.len()
            )));
        }
        CoxeterGraph::from_matrix(spec.m)
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn label(&self, i: usize, j: usize) -> u32 {
        self.m[i][j]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.m
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Off-diagonal labels, each unordered pair once.
    pub fn labels(&self) -> impl Iterator<Item = u32> + '_ {
        let n = self.rank();
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| self.m[i][j]))
    }

    /// `Some(n)` when the matrix is that of `A_{n}`, so that the group is
    /// the symmetric group on `n + 1` letters.
    pub fn type_a_rank(&self) -> Option<usize> {
        let n = self.rank();
        (Family::A(n).matrix() == self.m).then_some(n)
    }

    /// `Some(m)` for a rank-two graph `I2(m)`.
    pub fn dihedral_order(&self) -> Option<u32> {
        (self.rank() == 2).then(|| self.m[0][1])
    }
}

impl FromStr for CoxeterGraph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        CoxeterGraph::named(s)
    }
}

impl fmt::Display for CoxeterGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.name {
            Some(name) => f.write_str(name),
            None => {
                let json = serde_json::to_string(&self.m).map_err(|_| fmt::Error)?;
                write!(f, "matrix{json}")
            }
        }
    }
}
