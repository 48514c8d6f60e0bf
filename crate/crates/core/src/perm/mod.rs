//! Type A in one-line notation: permutations of `[n]`, their left-reflection
//! sets, and the transitive-closure description of the weak-order join.

mod dictionary;
mod paths;

use std::collections::BTreeSet;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::{Error, Result};

pub use dictionary::TypeA;
pub use paths::{
    check_tab_confinement, extract_chain, for_each_path_to_reflection, palindromic_path,
    sample_paths_to_reflections, shortest_chain, PermPath,
};

/// Default bound on `n` for permutations parsed from text.
pub const DEFAULT_MAX_DEGREE: usize = 12;

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

/// The transposition `(a b)` with `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Transposition {
    a: usize,
    b: usize,
}

pub type TranspositionSet = BTreeSet<Transposition>;

impl Transposition {
    /// Normalizes the pair so that `a < b`.
    pub fn new(x: usize, y: usize) -> Self {
        assert!(
            x != y && x >= 1 && y >= 1,
            "({x} {y}) is not a transposition"
        );
        Transposition {
            a: x.min(y),
            b: x.max(y),
        }
    }

    pub fn a(self) -> usize {
        self.a
    }

    pub fn b(self) -> usize {
        self.b
    }

    pub fn contains(self, x: usize) -> bool {
        x == self.a || x == self.b
    }

    pub fn apply(self, x: usize) -> usize {
        if x == self.a {
            self.b
        } else if x == self.b {
            self.a
        } else {
            x
        }
    }

    /// Whether `a <= i < j <= b` for this transposition `(i j)`.
    pub fn within(self, a: usize, b: usize) -> bool {
        a <= self.a && self.b <= b
    }

    pub fn as_permutation(self, n: usize) -> Permutation {
        let mut v: Vec<usize> = (1..=n).collect();
        v.swap(self.a - 1, self.b - 1);
        Permutation(v)
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.a, self.b)
    }
}

impl Serialize for Transposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn new(values: Vec<usize>) -> Result<Self> {
        Self::with_max_degree(values, DEFAULT_MAX_DEGREE)
    }

    pub fn with_max_degree(values: Vec<usize>, max: usize) -> Result<Self> {
        let n = values.len();
        if n == 0 || n > max {
            return Err(Error::InvalidPermutation(format!(
                "degree {n} outside 1..={max}"
            )));
        }
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidPermutation(format!(
                    "{values:?} is not a bijection on 1..={n}"
                )));
            }
        }
        Ok(Permutation(values))
    }

    /// Parses `"3124"` (digits, `n <= 9`) or `"10,2,3,..."`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Option<Vec<usize>> = if s.contains(',') {
            s.split(',').map(|t| t.trim().parse().ok()).collect()
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect()
        };
        let values =
            values.ok_or_else(|| Error::InvalidPermutation(format!("cannot parse `{s}`")))?;
        Permutation::new(values)
    }

    /// Accepts only a one-line permutation of exactly `n` letters; returns
    /// `None` for anything else (so generator words fall through).
    pub fn parse_one_line(s: &str, n: usize) -> Option<Self> {
        let s = s.trim();
        if s.chars().any(char::is_whitespace) {
            return None;
        }
        if !s.contains(',') && s.chars().count() != n {
            return None;
        }
        Permutation::with_max_degree(Permutation::parse(s).ok()?.0, usize::MAX)
            .ok()
            .filter(|p| p.degree() == n)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// `sigma(i)` for one-based `i`.
    pub fn at(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&x| self.0[x - 1]).collect())
    }

    /// `t ∘ self`: swaps the values `a` and `b`.
    pub fn left_mul(&self, t: Transposition) -> Permutation {
        Permutation(self.0.iter().map(|&v| t.apply(v)).collect())
    }

    /// Product `s_{i_1} ... s_{i_k}` of simple transpositions (zero-based
    /// generator `i` is `(i+1 i+2)`).
    pub fn from_word(n: usize, word: &[usize]) -> Permutation {
        let mut v: Vec<usize> = (1..=n).collect();
        for &i in word {
            v.swap(i, i + 1);
        }
        Permutation(v)
    }

    /// A reduced word obtained by bubble-sorting the one-line notation.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut v = self.0.clone();
        let mut rev = Vec::new();
        while let Some(i) = (0..v.len().saturating_sub(1)).find(|&i| v[i] > v[i + 1]) {
            v.swap(i, i + 1);
            rev.push(i);
        }
        rev.reverse();
        rev
    }

    /// Coxeter length, the number of inversions.
    pub fn inv(&self) -> usize {
        inv_set(self).len()
    }

    pub fn as_transposition(&self) -> Option<Transposition> {
        let moved: Vec<usize> = (1..=self.degree()).filter(|&i| self.at(i) != i).collect();
        match moved[..] {
            [a, b] if self.at(a) == b => Some(Transposition::new(a, b)),
            _ => None,
        }
    }

    pub fn transpositions(n: usize) -> impl Iterator<Item = Transposition> {
        (1..=n).flat_map(move |a| (a + 1..=n).map(move |b| Transposition::new(a, b)))
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut v: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation(v.clone()));
            let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| v[i] < v[i + 1]) else {
                break;
            };
            let j = (i + 1..n).rev().find(|&j| v[j] > v[i]).unwrap();
            v.swap(i, j);
            v[i + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() <= 9 {
            for v in &self.0 {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
            f.write_str(&parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// `Inv(sigma)`: position pairs `(i, j)`, `i < j`, with `sigma(i) > sigma(j)`.
pub fn inv_set(sigma: &Permutation) -> BTreeSet<(usize, usize)> {
    let n = sigma.degree();
    let mut out = BTreeSet::new();
    for i in 1..=n {
        for j in i + 1..=n {
            if sigma.at(i) > sigma.at(j) {
                out.insert((i, j));
            }
        }
    }
    out
}

/// `T_L(sigma)`: transpositions `(a b)` with `sigma^{-1}(a) > sigma^{-1}(b)`.
pub fn tl_perm(sigma: &Permutation) -> TranspositionSet {
    inv_set(&sigma.inverse())
        .into_iter()
        .map(|(a, b)| Transposition::new(a, b))
        .collect()
}

pub fn is_transitively_closed(set: &TranspositionSet) -> bool {
    set.iter().all(|s| {
        set.range(Transposition::new(s.b, s.b + 1)..)
            .take_while(|t| t.a == s.b)
            .all(|t| set.contains(&Transposition::new(s.a, t.b)))
    })
}

/// Adds `(i k)` whenever `(i j)` and `(j k)` are present, to a fixpoint.
pub fn transitive_closure(set: &TranspositionSet) -> TranspositionSet {
    let mut closed = set.clone();
    loop {
        let mut added = Vec::new();
        for s in &closed {
            for t in closed.range(Transposition::new(s.b, s.b + 1)..) {
                if t.a != s.b {
                    break;
                }
                let st = Transposition::new(s.a, t.b);
                if !closed.contains(&st) {
                    added.push(st);
                }
            }
        }
        if added.is_empty() {
            return closed;
        }
        closed.extend(added);
    }
}

/// The permutation whose left-reflection set is `set`, if there is one.
///
/// Value `y` is placed before value `x` exactly when `x < y` and `(x y)` is in
/// the set; each value's position is the number of values placed before it.
pub fn permutation_with_left_reflections(n: usize, set: &TranspositionSet) -> Result<Permutation> {
    let before = |y: usize, x: usize| -> bool {
        if x < y {
            set.contains(&Transposition::new(x, y))
        } else {
            !set.contains(&Transposition::new(y, x))
        }
    };
    let mut one_line = vec![0; n];
    for x in 1..=n {
        let pos = (1..=n).filter(|&y| y != x && before(y, x)).count();
        if one_line[pos] != 0 {
            return Err(Error::InvalidPermutation(
                "set is not the left-reflection set of a permutation".into(),
            ));
        }
        one_line[pos] = x;
    }
    let p = Permutation::with_max_degree(one_line, usize::MAX)?;
    if &tl_perm(&p) != set {
        return Err(Error::InvalidPermutation(
            "set is not the left-reflection set of a permutation".into(),
        ));
    }
    Ok(p)
}

/// The join in type A through transitive closure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureJoin {
    pub left_reflections: TranspositionSet,
    pub join: Permutation,
}

/// `T_L(sigma ∨ tau) = (T_L(sigma) ∪ T_L(tau))^tc`, plus the permutation
/// with that left-reflection set.
pub fn transitive_closure_join(sigma: &Permutation, tau: &Permutation) -> Result<ClosureJoin> {
    if sigma.degree() != tau.degree() {
        return Err(Error::InvalidPermutation("degrees differ".into()));
    }
    let mut union = tl_perm(sigma);
    union.extend(tl_perm(tau));
    let closed = transitive_closure(&union);
    let join = permutation_with_left_reflections(sigma.degree(), &closed)?;
    Ok(ClosureJoin {
        left_reflections: closed,
        join,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn ts(pairs: &[(usize, usize)]) -> TranspositionSet {
        pairs
            .iter()
            .map(|&(a, b)| Transposition::new(a, b))
            .collect()
    }

    #[test]
    fn inversion_sets() {
        assert!(inv_set(&p("1234")).is_empty());
        assert_eq!(inv_set(&p("3124")), BTreeSet::from([(1, 2), (1, 3)]));
        assert_eq!(p("3124").inv(), 2);
        assert_eq!(inv_set(&p("54321")).len(), 10);
    }

    #[test]
    fn left_reflection_sets() {
        assert_eq!(tl_perm(&p("3124")), ts(&[(1, 3), (2, 3)]));
        assert_eq!(tl_perm(&p("1423")), ts(&[(2, 4), (3, 4)]));
        assert!(tl_perm(&p("1234")).is_empty());
    }

    #[test]
    fn closure_join_example() {
        let j = transitive_closure_join(&p("3124"), &p("1423")).unwrap();
        assert_eq!(
            j.left_reflections,
            ts(&[(1, 3), (1, 4), (2, 3), (2, 4), (3, 4)])
        );
        assert_eq!(j.join, p("4312"));
        let same = transitive_closure_join(&p("3124"), &p("3124")).unwrap();
        assert_eq!(same.left_reflections, tl_perm(&p("3124")));
        assert_eq!(same.join, p("3124"));
    }

    #[test]
    fn words_round_trip() {
        for sigma in Permutation::all(5) {
            let w = sigma.reduced_word();
            assert_eq!(w.len(), sigma.inv());
            assert_eq!(Permutation::from_word(5, &w), sigma);
            assert!(is_transitively_closed(&tl_perm(&sigma)));
        }
        assert_eq!(Permutation::all(4).len(), 24);
    }

    #[test]
    fn parsing() {
        assert!(Permutation::parse("3124").is_ok());
        assert!(Permutation::parse("3123").is_err());
        assert!(Permutation::parse("10,1,2,3,4,5,6,7,8,9").is_ok());
        assert!(Permutation::parse("1234567890123").is_err());
        assert_eq!(
            Permutation::parse("10,1,2,3,4,5,6,7,8,9")
                .unwrap()
                .to_string(),
            "10,1,2,3,4,5,6,7,8,9"
        );
        assert_eq!(Permutation::parse_one_line("2 1", 2), None);
        assert_eq!(Permutation::parse_one_line("1", 4), None);
        assert_eq!(Permutation::parse_one_line("21", 2), Some(p("21")));
    }

    #[test]
    fn non_realizable_set_is_rejected() {
        // {(1 3)} alone is closed but its complement {(1 2), (2 3)} is not
        assert!(permutation_with_left_reflections(3, &ts(&[(1, 3)])).is_err());
    }
}
