use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use super::{tl_perm, transitive_closure, Permutation, Transposition, TranspositionSet};
use crate::{Error, Result};

/// A Bruhat path in `S_n` starting at the identity. Each step left-multiplies
/// the previous vertex by its label.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermPath {
    n: usize,
    steps: Vec<(Transposition, Permutation)>,
}

impl PermPath {
    pub fn new(n: usize) -> Self {
        PermPath {
            n,
            steps: Vec::new(),
        }
    }

    pub fn from_labels(n: usize, labels: &[Transposition]) -> Self {
        let mut p = PermPath::new(n);
        for &t in labels {
            p.push(t);
        }
        p
    }

    pub fn push(&mut self, t: Transposition) {
        let next = self.end().left_mul(t);
        self.steps.push((t, next));
    }

    pub fn pop(&mut self) -> Option<(Transposition, Permutation)> {
        self.steps.pop()
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn end(&self) -> Permutation {
        self.steps
            .last()
            .map_or_else(|| Permutation::identity(self.n), |(_, v)| v.clone())
    }

    pub fn labels(&self) -> Vec<Transposition> {
        self.steps.iter().map(|(t, _)| *t).collect()
    }

    pub fn vertices(&self) -> Vec<Permutation> {
        std::iter::once(Permutation::identity(self.n))
            .chain(self.steps.iter().map(|(_, v)| v.clone()))
            .collect()
    }

    pub fn is_palindromic(&self) -> bool {
        let l = self.labels();
        l.iter().eq(l.iter().rev())
    }

    /// First step at which the inversion count fails to increase.
    pub fn check_increasing(&self) -> Result<()> {
        let mut prev = 0;
        for (k, (_, v)) in self.steps.iter().enumerate() {
            let inv = v.inv();
            if inv <= prev {
                return Err(Error::LengthNotIncreasing { step: k });
            }
            prev = inv;
        }
        Ok(())
    }
}

/// Shortest chain `a = i_0 < i_1 < ... < i_l = b` with every `(i_r i_{r+1})`
/// in `arcs`; among shortest chains the smallest next index wins.
pub fn shortest_chain(arcs: &TranspositionSet, a: usize, b: usize) -> Option<Vec<usize>> {
    // dist[i - a] = number of arcs from i to b
    let mut dist = vec![usize::MAX; b - a + 1];
    dist[b - a] = 0;
    for i in (a..b).rev() {
        dist[i - a] = (i + 1..=b)
            .filter(|&j| arcs.contains(&Transposition::new(i, j)) && dist[j - a] != usize::MAX)
            .map(|j| dist[j - a] + 1)
            .min()
            .unwrap_or(usize::MAX);
    }
    if dist[0] == usize::MAX {
        return None;
    }
    let mut chain = vec![a];
    let mut cur = a;
    while cur != b {
        cur = (cur + 1..=b)
            .find(|&j| {
                arcs.contains(&Transposition::new(cur, j)) && dist[j - a] == dist[cur - a] - 1
            })
            .expect("distance table is consistent");
        chain.push(cur);
    }
    Some(chain)
}

/// A palindromic `(sigma, tau)`-Bruhat path from the identity to `t`.
///
/// For a chain `a = i_0 < ... < i_l = b` through `T_L(sigma) ∪ T_L(tau)` the
/// labels are `(a i_1), ..., (i_{l-1} b), (i_{l-2} i_{l-1}), ..., (a i_1)`.
/// Every step is checked to increase the inversion count.
pub fn palindromic_path(
    sigma: &Permutation,
    tau: &Permutation,
    t: Transposition,
) -> Result<PermPath> {
    let n = sigma.degree();
    let mut union = tl_perm(sigma);
    union.extend(tl_perm(tau));
    if !transitive_closure(&union).contains(&t) {
        return Err(Error::NotInClosure { a: t.a(), b: t.b() });
    }
    let chain = shortest_chain(&union, t.a(), t.b()).expect("t is in the closure");
    let forward: Vec<Transposition> = chain
        .windows(2)
        .map(|w| Transposition::new(w[0], w[1]))
        .collect();
    let mut labels = forward.clone();
    labels.extend(forward.iter().rev().skip(1));
    let path = PermPath::from_labels(n, &labels);
    path.check_increasing()?;
    debug_assert_eq!(path.end(), t.as_permutation(n));
    Ok(path)
}

fn end_transposition(path: &PermPath) -> Result<Transposition> {
    path.end()
        .as_transposition()
        .ok_or(Error::NotEndingAtReflection)
}

/// Whether every label of a path ending at `(a b)` lies in
/// `T_ab = {(i j) : a <= i < j <= b}`.
pub fn check_tab_confinement(path: &PermPath) -> Result<bool> {
    let end = end_transposition(path)?;
    Ok(path.labels().iter().all(|t| t.within(end.a(), end.b())))
}

/// Selects from a path ending at `(a b)` the transpositions that move the
/// tracked entry, starting from `a`, reading the product right to left (that
/// is, in path order). Consecutive selections must link up, `j'_{l-1} =
/// i'_l`, so that they form an increasing chain from `a` to `b`.
pub fn extract_chain(path: &PermPath) -> Result<Vec<Transposition>> {
    let end = end_transposition(path)?;
    let mut x = end.a();
    let mut selected: Vec<Transposition> = Vec::new();
    for t in path.labels() {
        if !t.contains(x) {
            continue;
        }
        // the tracked entry must sit at the small end of each selected label
        if t.a() != x {
            return Err(Error::LinkingViolation {
                step: selected.len(),
            });
        }
        selected.push(t);
        x = t.b();
    }
    if x != end.b() {
        return Err(Error::LinkingViolation {
            step: selected.len(),
        });
    }
    Ok(selected)
}

/// Calls `visit` on every length-increasing path from the identity that ends
/// at a transposition (each such path prefix is visited once).
pub fn for_each_path_to_reflection(n: usize, mut visit: impl FnMut(&PermPath)) {
    fn go(path: &mut PermPath, all: &[Transposition], visit: &mut dyn FnMut(&PermPath)) {
        let cur = path.end();
        let pos = cur.inverse();
        for &t in all {
            // length grows iff value a precedes value b
            if pos.at(t.a()) < pos.at(t.b()) {
                path.push(t);
                if path.end().as_transposition().is_some() {
                    visit(path);
                }
                go(path, all, visit);
                path.pop();
            }
        }
    }
    let all: Vec<Transposition> = Permutation::transpositions(n).collect();
    go(&mut PermPath::new(n), &all, &mut visit);
}

/// `count` length-increasing paths to transpositions, collected from seeded
/// random walks: every walk prefix that ends at a transposition is kept.
pub fn sample_paths_to_reflections(n: usize, count: usize, seed: u64) -> Vec<PermPath> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let all: Vec<Transposition> = Permutation::transpositions(n).collect();
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let mut path = PermPath::new(n);
        loop {
            let pos = path.end().inverse();
            let up: Vec<Transposition> = all
                .iter()
                .copied()
                .filter(|t| pos.at(t.a()) < pos.at(t.b()))
                .collect();
            let Some(&t) = up.choose(&mut rng) else {
                break;
            };
            path.push(t);
            if path.end().as_transposition().is_some() {
                out.push(path.clone());
                if out.len() == count {
                    break;
                }
            }
        }
    }
    out
}
