use std::fmt;

use serde::{Serialize, Serializer};

use crate::coxeter::{CoxeterSystem, ElemId};
use crate::subset::RootSubset;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    S,
    R,
}

impl Generator {
    pub fn other(self) -> Generator {
        match self {
            Generator::S => Generator::R,
            Generator::R => Generator::S,
        }
    }

    /// Zero-based generator index: `s` is 0, `r` is 1.
    pub fn index(self) -> usize {
        self as usize
    }

    fn letter(self) -> char {
        match self {
            Generator::S => 's',
            Generator::R => 'r',
        }
    }
}

/// Alternating word `first other first ...` of `len` letters in `I2(m)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DihedralWord {
    pub first: Generator,
    pub len: usize,
}

impl DihedralWord {
    pub fn new(first: Generator, len: usize) -> Self {
        DihedralWord { first, len }
    }

    /// `(first other)^k first`.
    pub fn reflection(first: Generator, k: usize) -> Self {
        DihedralWord::new(first, 2 * k + 1)
    }

    /// The reduced alternating word for the same element: length at most
    /// `m`, and starting with `s` when the length is exactly `m`.
    pub fn normalize(self, m: usize) -> Self {
        let mut w = self;
        w.len %= 2 * m;
        if w.len > m {
            // (sr)^k s = (rs)^{m-k-1} r and (sr)^k = (rs)^{m-k}
            w = DihedralWord::new(w.first.other(), 2 * m - w.len);
        }
        if w.len == 0 || w.len == m {
            w.first = Generator::S;
        }
        w
    }

    pub fn word(self) -> Vec<usize> {
        (0..self.len)
            .map(|i| {
                if i % 2 == 0 {
                    self.first.index()
                } else {
                    self.first.other().index()
                }
            })
            .collect()
    }
}

impl fmt::Display for DihedralWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a = self.first.letter();
        let b = self.first.other().letter();
        let k = self.len / 2;
        match (k, self.len % 2) {
            (0, 0) => write!(f, "e"),
            (0, _) => write!(f, "{a}"),
            (1, 0) => write!(f, "{a}{b}"),
            (1, _) => write!(f, "{a}{b}{a}"),
            (_, 0) => write!(f, "({a}{b})^{k}"),
            (_, _) => write!(f, "({a}{b})^{k}{a}"),
        }
    }
}

impl Serialize for DihedralWord {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Reduced forms of `T_L(v)` predicted by the dihedral case analysis, for `v`
/// given as an alternating word: `first, (first other) first, ...` up to `d =
/// len - 1`, with terms longer than `m` rewritten as words starting with the
/// other generator.
pub fn dihedral_profile_words(m: usize, v: DihedralWord) -> Vec<DihedralWord> {
    let v = v.normalize(m);
    (0..v.len)
        .map(|k| DihedralWord::reflection(v.first, k).normalize(m))
        .collect()
}

/// [`dihedral_profile_words`] for an element of a dihedral system, mapped to
/// root indices.
pub fn dihedral_tl_profile(sys: &CoxeterSystem, v: ElemId) -> Result<RootSubset> {
    let m = sys
        .graph()
        .dihedral_order()
        .ok_or(Error::WrongType("I2(m)"))? as usize;
    let g = sys.group();
    let word = g.word(v);
    let first = match word.first() {
        None => return Ok(RootSubset::empty()),
        Some(0) => Generator::S,
        Some(_) => Generator::R,
    };
    dihedral_profile_words(m, DihedralWord::new(first, word.len()))
        .into_iter()
        .map(|w| g.phi_inverse(g.from_word(&w.word())?))
        .collect()
}
