//! Bruhat graph reachability, `V_W(u, v)` and Conjecture H.

mod dihedral;
mod dot;

use serde::Serialize;

use crate::coxeter::{ElemId, ElementSet, Group};
use crate::subset::RootSubset;
use crate::weak_order::{join_bruteforce, join_of_union};
use crate::Result;

pub use dihedral::{dihedral_profile_words, dihedral_tl_profile, DihedralWord, Generator};
pub use dot::bruhat_dot;

/// The Bruhat graph of a frozen group: edges `x -> s_beta x` whenever the
/// length goes up.
#[derive(Debug, Clone, Copy)]
pub struct BruhatGraph<'a> {
    group: &'a Group,
}

impl<'a> BruhatGraph<'a> {
    pub fn new(group: &'a Group) -> Self {
        BruhatGraph { group }
    }

    /// Out-edges `(root, target)` of `x` with labels restricted to `labels`.
    pub fn out_edges(
        &self,
        x: ElemId,
        labels: RootSubset,
    ) -> impl Iterator<Item = (usize, ElemId)> + 'a {
        let g = self.group;
        let lx = g.length(x);
        labels
            .iter()
            .map(move |t| (t, g.left_mul(t, x)))
            .filter(move |&(_, y)| g.length(y) > lx)
    }

    pub fn reachable(&self, labels: RootSubset) -> ElementSet {
        bruhat_reachable(self.group, labels)
    }
}

/// Vertices of all Bruhat paths from the identity with labels in `labels`,
/// identity included.
pub fn bruhat_reachable(group: &Group, labels: RootSubset) -> ElementSet {
    let graph = BruhatGraph::new(group);
    let mut seen = ElementSet::new(group.order());
    seen.insert(ElemId::IDENTITY);
    let mut queue = vec![ElemId::IDENTITY];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (_, y) in graph.out_edges(x, labels) {
            if seen.insert(y) {
                queue.push(y);
            }
        }
    }
    seen
}

/// `T ∩ V` for the vertex set reached with `labels`, as root indices.
pub fn reflections_reached(group: &Group, labels: RootSubset) -> RootSubset {
    group.reflections_in(&bruhat_reachable(group, labels))
}

/// `V_W(u, v)`.
pub fn bruhat_vertices(group: &Group, u: ElemId, v: ElemId) -> ElementSet {
    bruhat_reachable(group, pair_labels(group, u, v))
}

/// `T_L(u) ∪ T_L(v)`.
pub fn pair_labels(group: &Group, u: ElemId, v: ElemId) -> RootSubset {
    group
        .left_reflection_set(u)
        .union(group.left_reflection_set(v))
}

/// Both sides of `T_L(u ∨ v) = T ∩ V_W(u, v)` and their symmetric difference.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct HVerdict {
    pub holds: bool,
    pub lhs: RootSubset,
    pub rhs: RootSubset,
    pub diff: RootSubset,
}

impl HVerdict {
    pub fn new(lhs: RootSubset, rhs: RootSubset) -> Self {
        let diff = lhs.symmetric_difference(rhs);
        HVerdict {
            holds: diff.is_empty(),
            lhs,
            rhs,
            diff,
        }
    }
}

pub fn check_conjecture_h(group: &Group, u: ElemId, v: ElemId) -> Result<HVerdict> {
    let join = join_bruteforce(group, u, v)?;
    let labels = pair_labels(group, u, v);
    Ok(HVerdict::new(
        group.left_reflection_set(join),
        reflections_reached(group, labels),
    ))
}

/// Conjecture H for a label set `T_L(u) ∪ T_L(v)`; both sides depend on the
/// pair only through this union.
pub fn check_conjecture_h_for_labels(group: &Group, labels: RootSubset) -> Result<HVerdict> {
    let join = join_of_union(group, labels)?;
    Ok(HVerdict::new(
        group.left_reflection_set(join),
        reflections_reached(group, labels),
    ))
}

/// A Bruhat path from the identity: `(label, vertex)` steps.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruhatPath {
    pub steps: Vec<(usize, ElemId)>,
}

impl BruhatPath {
    pub fn labels(&self) -> Vec<usize> {
        self.steps.iter().map(|&(t, _)| t).collect()
    }

    pub fn vertices(&self) -> Vec<ElemId> {
        std::iter::once(ElemId::IDENTITY)
            .chain(self.steps.iter().map(|&(_, v)| v))
            .collect()
    }

    pub fn end(&self) -> ElemId {
        self.steps.last().map_or(ElemId::IDENTITY, |&(_, v)| v)
    }

    pub fn witness(&self, group: &Group) -> PathWitness {
        PathWitness {
            labels: self.labels(),
            vertices: self
                .vertices()
                .iter()
                .map(|&v| group.format_word(v))
                .collect(),
        }
    }
}

/// JSON form `{"labels": [...], "vertices": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathWitness {
    pub labels: Vec<usize>,
    pub vertices: Vec<String>,
}

/// A shortest Bruhat path from the identity to `target` with labels in
/// `labels`, if one exists. Ties go to the smallest label.
pub fn path_witness(group: &Group, labels: RootSubset, target: ElemId) -> Option<BruhatPath> {
    let graph = BruhatGraph::new(group);
    let mut parent: Vec<Option<(usize, ElemId)>> = vec![None; group.order()];
    let mut seen = ElementSet::new(group.order());
    seen.insert(ElemId::IDENTITY);
    let mut queue = vec![ElemId::IDENTITY];
    let mut head = 0;
    while head < queue.len() && !seen.contains(target) {
        let x = queue[head];
        head += 1;
        for (t, y) in graph.out_edges(x, labels) {
            if seen.insert(y) {
                parent[y.index()] = Some((t, x));
                queue.push(y);
            }
        }
    }
    if !seen.contains(target) {
        return None;
    }
    let mut steps = Vec::new();
    let mut cur = target;
    while let Some((t, prev)) = parent[cur.index()] {
        steps.push((t, cur));
        cur = prev;
    }
    steps.reverse();
    Some(BruhatPath { steps })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxeter::CoxeterSystem;

    #[test]
    fn empty_labels_reach_only_the_identity() {
        let sys = CoxeterSystem::named("A3").unwrap();
        let v = bruhat_reachable(sys.group(), RootSubset::empty());
        assert_eq!(v.iter().collect::<Vec<_>>(), vec![ElemId::IDENTITY]);
    }

    #[test]
    fn a3_example() {
        let sys = CoxeterSystem::named("A3").unwrap();
        let g = sys.group();
        let u = g.from_word(&[0, 1]).unwrap();
        let v = g.from_word(&[0, 2]).unwrap();
        let vw = bruhat_vertices(g, u, v);
        assert!(vw.contains(g.from_word(&[0, 1, 2, 1, 0]).unwrap()));
        let verdict = check_conjecture_h(g, u, v).unwrap();
        assert!(verdict.holds);
        assert_eq!(verdict.rhs.to_vec(), vec![0, 2, 3, 5]);
    }

    #[test]
    fn i2_4_examples() {
        let sys = CoxeterSystem::named("I2(4)").unwrap();
        let g = sys.group();
        let s = g.from_word(&[0]).unwrap();
        let r = g.from_word(&[1]).unwrap();
        let srs = g.from_word(&[0, 1, 0]).unwrap();
        let full = check_conjecture_h(g, s, r).unwrap();
        assert!(full.holds);
        assert_eq!(full.rhs, sys.table().all());
        let path = path_witness(g, pair_labels(g, s, r), srs).unwrap();
        let words: Vec<String> = path.vertices().iter().map(|&x| g.format_word(x)).collect();
        assert_eq!(words.len(), 4);
        assert_eq!(path.labels().len(), 3);

        let v = check_conjecture_h(g, s, srs).unwrap();
        assert!(v.holds);
        assert_eq!(v.lhs.len(), 3);
        assert!(!v.rhs.contains(1));
    }

    #[test]
    fn witness_paths_increase_length() {
        let sys = CoxeterSystem::named("B3").unwrap();
        let g = sys.group();
        let labels = sys.table().all();
        for t in 0..sys.table().len() {
            let path = path_witness(g, labels, g.phi(t)).unwrap();
            let lens: Vec<usize> = path.vertices().iter().map(|&x| g.length(x)).collect();
            assert!(lens.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(path.end(), g.phi(t));
        }
        let s = g.from_word(&[0]).unwrap();
        assert!(path_witness(g, RootSubset::singleton(1), s).is_none());
    }
}
