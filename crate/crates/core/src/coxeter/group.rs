use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use super::roots::{signed, unsigned, RootTable, SignedRoot};
use crate::subset::RootSubset;
use crate::{Error, Result};

/// Default cap on the number of group elements enumerated.
pub const DEFAULT_ELEMENT_CAP: usize = 5_000_000;

/// Dense id of a group element; the identity is always `ElemId(0)` and ids
/// are sorted by length.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct ElemId(pub u32);

impl ElemId {
    pub const IDENTITY: ElemId = ElemId(0);

    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Owned snapshot of one element.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupElement {
    pub inversions: RootSubset,
    /// One reduced word, zero-based generator indices.
    pub word: Vec<usize>,
    pub length: usize,
}

/// Set of group elements as a bitmap over [`ElemId`]s.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    words: Vec<u64>,
}

impl ElementSet {
    pub fn new(order: usize) -> Self {
        ElementSet {
            words: vec![0; order.div_ceil(64)],
        }
    }

    pub fn contains(&self, e: ElemId) -> bool {
        let i = e.index();
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    /// Returns `true` if the element was newly inserted.
    pub fn insert(&mut self, e: ElemId) -> bool {
        let i = e.index();
        let w = &mut self.words[i / 64];
        let bit = 1u64 << (i % 64);
        let fresh = *w & bit == 0;
        *w |= bit;
        fresh
    }

    pub fn remove(&mut self, e: ElemId) {
        let i = e.index();
        self.words[i / 64] &= !(1u64 << (i % 64));
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    pub fn iter(&self) -> impl Iterator<Item = ElemId> + '_ {
        self.words.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros();
                w &= w - 1;
                Some(ElemId((k * 64) as u32 + b))
            })
        })
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter().map(|e| e.0)).finish()
    }
}

/// All elements of a finite Coxeter group, with multiplication tables for
/// reflections on either side.
///
/// Each element is keyed by its inversion set `Phi_w`. The signed permutation
/// of the positive roots induced by `w` is kept for table construction.
#[derive(Debug, Clone)]
pub struct Group {
    rank: usize,
    nroots: usize,
    inversions: Vec<RootSubset>,
    words: Vec<Vec<u8>>,
    index: HashMap<RootSubset, ElemId>,
    /// `perms[w * N + r]` = signed index of `w(beta_r)`.
    perms: Vec<SignedRoot>,
    /// `left[t * |W| + w]` = `s_t w`.
    left: Vec<u32>,
    /// `right[t * |W| + w]` = `w s_t`.
    right: Vec<u32>,
    reflection: Vec<ElemId>,
    root_of: Vec<u32>,
}

fn inversions_of(perm: &[SignedRoot]) -> RootSubset {
    // Phi_w = { -w(beta) : beta > 0, w(beta) < 0 }
    perm.iter()
        .filter(|&&x| x < 0)
        .map(|&x| unsigned(x).0)
        .collect()
}

fn apply(row: &[SignedRoot], x: SignedRoot) -> SignedRoot {
    let (i, pos) = unsigned(x);
    if pos {
        row[i]
    } else {
        -row[i]
    }
}

impl Group {
    /// Breadth-first enumeration from the identity, extending reduced words on
    /// the right by every generator `s` with `w(alpha_s) > 0`.
    pub fn enumerate(table: &RootTable, cap: usize) -> Result<Group> {
        let n = table.len();
        let rank = table.rank();
        let identity: Vec<SignedRoot> = (0..n).map(|i| signed(i, true)).collect();

        let mut perms: Vec<SignedRoot> = identity.clone();
        let mut inversions = vec![RootSubset::empty()];
        let mut words: Vec<Vec<u8>> = vec![Vec::new()];
        let mut index = HashMap::from([(RootSubset::empty(), ElemId(0))]);

        let mut head = 0;
        while head < inversions.len() {
            let w = perms[head * n..(head + 1) * n].to_vec();
            for s in 0..rank {
                if w[s] < 0 {
                    continue;
                }
                // (w s)(beta) = w(s(beta))
                let ws: Vec<SignedRoot> = table.act_row(s).iter().map(|&x| apply(&w, x)).collect();
                let inv = inversions_of(&ws);
                if index.contains_key(&inv) {
                    continue;
                }
                if inversions.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                let id = ElemId(inversions.len() as u32);
                index.insert(inv, id);
                let mut word = words[head].clone();
                word.push(s as u8);
                words.push(word);
                inversions.push(inv);
                perms.extend_from_slice(&ws);
            }
            head += 1;
        }

        let order = inversions.len();
        let lookup = |p: &[SignedRoot]| -> u32 { index[&inversions_of(p)].0 };
        let mut left = vec![0u32; n * order];
        let mut right = vec![0u32; n * order];
        let mut buf = vec![0; n];
        for t in 0..n {
            let row = table.act_row(t);
            for w in 0..order {
                let p = &perms[w * n..(w + 1) * n];
                // (t w)(beta) = t(w(beta))
                for (b, &x) in buf.iter_mut().zip(p) {
                    *b = apply(row, x);
                }
                left[t * order + w] = lookup(&buf);
                // (w t)(beta) = w(t(beta))
                for (b, &x) in buf.iter_mut().zip(row) {
                    *b = apply(p, x);
                }
                right[t * order + w] = lookup(&buf);
            }
        }

        let mut root_of = vec![u32::MAX; order];
        let mut reflection = Vec::with_capacity(n);
        for t in 0..n {
            let e = index[&inversions_of(table.act_row(t))];
            root_of[e.index()] = t as u32;
            reflection.push(e);
        }

        Ok(Group {
            rank,
            nroots: n,
            inversions,
            words,
            index,
            perms,
            left,
            right,
            reflection,
            root_of,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.inversions.len()
    }

    pub fn num_roots(&self) -> usize {
        self.nroots
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = ElemId> {
        (0..self.order() as u32).map(ElemId)
    }

    pub fn identity(&self) -> ElemId {
        ElemId::IDENTITY
    }

    /// The longest element; its inversion set is all of `Phi+`.
    pub fn longest(&self) -> ElemId {
        ElemId(self.order() as u32 - 1)
    }

    pub fn inversions(&self, w: ElemId) -> RootSubset {
        self.inversions[w.index()]
    }

    pub fn length(&self, w: ElemId) -> usize {
        self.inversions[w.index()].len()
    }

    /// Cached reduced word, zero-based generators.
    pub fn word(&self, w: ElemId) -> Vec<usize> {
        self.words[w.index()].iter().map(|&s| s as usize).collect()
    }

    pub fn element(&self, w: ElemId) -> GroupElement {
        GroupElement {
            inversions: self.inversions(w),
            word: self.word(w),
            length: self.length(w),
        }
    }

    /// Element with the given inversion set, if any.
    pub fn by_inversions(&self, inv: RootSubset) -> Option<ElemId> {
        self.index.get(&inv).copied()
    }

    /// Signed index of `w(beta_r)`.
    pub fn apply(&self, w: ElemId, r: usize) -> SignedRoot {
        self.perms[w.index() * self.nroots + r]
    }

    /// `s_{beta_t} w`.
    pub fn left_mul(&self, t: usize, w: ElemId) -> ElemId {
        ElemId(self.left[t * self.order() + w.index()])
    }

    /// `w s_{beta_t}`.
    pub fn right_mul(&self, w: ElemId, t: usize) -> ElemId {
        ElemId(self.right[t * self.order() + w.index()])
    }

    /// Product of the generators in `word`, which need not be reduced.
    pub fn from_word(&self, word: &[usize]) -> Result<ElemId> {
        let mut w = ElemId::IDENTITY;
        for &s in word {
            if s >= self.rank {
                return Err(Error::Parse(format!(
                    "generator {} out of range 1..={}",
                    s + 1,
                    self.rank
                )));
            }
            w = self.right_mul(w, s);
        }
        Ok(w)
    }

    pub fn multiply(&self, u: ElemId, v: ElemId) -> ElemId {
        self.words[v.index()]
            .iter()
            .fold(u, |acc, &s| self.right_mul(acc, s as usize))
    }

    pub fn inverse(&self, w: ElemId) -> ElemId {
        self.words[w.index()]
            .iter()
            .rev()
            .fold(ElemId::IDENTITY, |acc, &s| self.right_mul(acc, s as usize))
    }

    /// The reflection `s_beta` for the positive root with index `root`.
    pub fn phi(&self, root: usize) -> ElemId {
        self.reflection[root]
    }

    pub fn phi_inverse(&self, t: ElemId) -> Result<usize> {
        match self.root_of[t.index()] {
            u32::MAX => Err(Error::NotAReflection),
            r => Ok(r as usize),
        }
    }

    /// Root index of `t` when `t` is a reflection.
    pub fn reflection_root(&self, t: ElemId) -> Option<usize> {
        self.phi_inverse(t).ok()
    }

    /// `T_L(w)`, identified with `Phi_w` under `phi`.
    pub fn left_reflection_set(&self, w: ElemId) -> RootSubset {
        self.inversions(w)
    }

    /// Reflection set of a vertex set, mapped back to root indices.
    pub fn reflections_in(&self, set: &ElementSet) -> RootSubset {
        set.iter().filter_map(|e| self.reflection_root(e)).collect()
    }

    /// Word as a space-separated string of one-based generators.
    pub fn format_word(&self, w: ElemId) -> String {
        format_word(&self.word(w))
    }
}

pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter()
        .map(|s| (s + 1).to_string())
        .collect::<Vec<_>>()
        .join(" ")
}
