//! Closure predicates, biclosed sets, weak-order joins and the `tau` map.

use serde::Serialize;

use crate::coxeter::{ElemId, ElementSet, Group, RootTable};
use crate::scalar::{Scalar, Sign};
use crate::subset::RootSubset;
use crate::{Error, Result};

/// Default bound on `|Phi+|` for the subset-enumeration oracle.
pub const DEFAULT_ORACLE_CAP: usize = 20;

fn sign_of<S: Scalar>(x: &S) -> Sign {
    x.sign()
}

fn minor<S: Scalar>(a: &[S], b: &[S], i: usize, j: usize) -> S {
    a[i].clone() * b[j].clone() - a[j].clone() * b[i].clone()
}

/// Whether `g = x a + y b` for some reals `x, y >= 0`.
///
/// Solved exactly by Cramer's rule on a nonzero 2x2 minor, scaled through by
/// the determinant so no division is needed.
pub fn cone_member<S: Scalar>(a: &[S], b: &[S], g: &[S]) -> bool {
    let n = a.len();
    let pivot = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .map(|(i, j)| (i, j, minor(a, b, i, j)))
        .find(|(_, _, d)| !d.is_zero());
    let Some((i, j, det)) = pivot else {
        // a and b parallel: g must be a nonnegative multiple of a
        let Some(k) = (0..n).find(|&k| !a[k].is_zero()) else {
            return false;
        };
        let parallel = (0..n).all(|i| minor(g, a, i, k).is_zero());
        return parallel && sign_of(&g[k]) * sign_of(&a[k]) != Sign::Negative;
    };
    // det * g = x' a + y' b with x' = det * x, y' = det * y
    let x = minor(g, b, i, j);
    let y = minor(a, g, i, j);
    let fits = (0..n).all(|k| {
        (det.clone() * g[k].clone() - x.clone() * a[k].clone() - y.clone() * b[k].clone()).is_zero()
    });
    let ds = sign_of(&det);
    fits && sign_of(&x) * ds != Sign::Negative && sign_of(&y) * ds != Sign::Negative
}

/// `A` is closed when the cone of any two of its roots meets `Phi+` inside `A`.
pub fn is_closed(table: &RootTable, set: RootSubset) -> bool {
    set.iter()
        .all(|a| set.iter().all(|b| table.cone(a, b).is_subset(set)))
}

pub fn is_biclosed(table: &RootTable, set: RootSubset) -> bool {
    is_closed(table, set) && is_closed(table, set.complement(table.len()))
}

/// `{Phi_w : w in W}`, sorted.
pub fn enumerate_biclosed(group: &Group) -> Vec<RootSubset> {
    let mut out: Vec<RootSubset> = group.elements().map(|w| group.inversions(w)).collect();
    out.sort();
    out
}

/// Every subset of `Phi+` filtered by [`is_biclosed`], sorted. Refuses above
/// `cap` positive roots.
pub fn enumerate_biclosed_oracle(table: &RootTable, cap: usize) -> Result<Vec<RootSubset>> {
    let n = table.len();
    if n > cap {
        return Err(Error::OracleTooLarge { roots: n, cap });
    }
    let mut out: Vec<RootSubset> = (0..1u128 << n)
        .map(RootSubset::from_bits)
        .filter(|&s| is_biclosed(table, s))
        .collect();
    out.sort();
    Ok(out)
}

/// `u <=_R v` iff `Phi_u ⊆ Phi_v`.
pub fn leq_weak(group: &Group, u: ElemId, v: ElemId) -> bool {
    group.inversions(u).is_subset(group.inversions(v))
}

/// The inclusion-minimal element whose inversion set contains `union`,
/// checked to be unique.
pub fn join_of_union(group: &Group, union: RootSubset) -> Result<ElemId> {
    let mut best: Option<ElemId> = None;
    for w in group.elements() {
        if !union.is_subset(group.inversions(w)) {
            continue;
        }
        if best.is_none_or(|b| group.length(w) < group.length(b)) {
            best = Some(w);
        }
    }
    let m = best.ok_or(Error::NoUpperBound)?;
    let inv = group.inversions(m);
    // every upper bound must lie above the candidate
    for w in group.elements() {
        let wi = group.inversions(w);
        if union.is_subset(wi) && !inv.is_subset(wi) {
            return Err(Error::NonUniqueMinimal);
        }
    }
    Ok(m)
}

/// `u ∨_R v` by scanning all upper bounds of `Phi_u ∪ Phi_v`.
pub fn join_bruteforce(group: &Group, u: ElemId, v: ElemId) -> Result<ElemId> {
    join_of_union(group, group.inversions(u).union(group.inversions(v)))
}

/// `tau(A)`: all non-identity `w = s_{b_1} ... s_{b_k}` with every `b_i` in
/// `A` and lengths increasing along the prefixes.
pub fn tau_reachable(group: &Group, set: RootSubset) -> ElementSet {
    let mut seen = ElementSet::new(group.order());
    seen.insert(ElemId::IDENTITY);
    let mut queue = vec![ElemId::IDENTITY];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        let lx = group.length(x);
        for a in set.iter() {
            let y = group.right_mul(x, a);
            if group.length(y) > lx && seen.insert(y) {
                queue.push(y);
            }
        }
    }
    seen.remove(ElemId::IDENTITY);
    seen
}

/// `J(A, B) = {alpha in Phi+ : s_alpha in tau(A ∪ B)}`.
pub fn conjectural_join_d(group: &Group, a: RootSubset, b: RootSubset) -> RootSubset {
    group.reflections_in(&tau_reachable(group, a.union(b)))
}

/// JSON form of a root subset: sorted indices and readable roots.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SubsetDescription {
    pub indices: Vec<usize>,
    pub roots: Vec<String>,
}

pub fn describe(table: &RootTable, set: RootSubset) -> SubsetDescription {
    SubsetDescription {
        indices: set.to_vec(),
        roots: set.iter().map(|i| table.label(i)).collect(),
    }
}
