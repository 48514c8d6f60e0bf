use super::{Permutation, Transposition, TranspositionSet};
use crate::coxeter::{CoxeterSystem, ElemId};
use crate::subset::RootSubset;
use crate::{Error, Result};

/// Dictionary between `S_n` in one-line notation and the abstract group of
/// type `A_{n-1}`: permutations to element ids, transpositions to roots.
#[derive(Debug, Clone, Copy)]
pub struct TypeA<'a> {
    sys: &'a CoxeterSystem,
    n: usize,
}

impl<'a> TypeA<'a> {
    pub fn new(sys: &'a CoxeterSystem) -> Result<Self> {
        let n = sys.symmetric_degree().ok_or(Error::WrongType("A"))?;
        Ok(TypeA { sys, n })
    }

    pub fn system(&self) -> &'a CoxeterSystem {
        self.sys
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn element(&self, p: &Permutation) -> Result<ElemId> {
        if p.degree() != self.n {
            return Err(Error::InvalidPermutation(format!(
                "expected {} letters, got {}",
                self.n,
                p.degree()
            )));
        }
        self.sys.group().from_word(&p.reduced_word())
    }

    pub fn permutation(&self, w: ElemId) -> Permutation {
        Permutation::from_word(self.n, &self.sys.group().word(w))
    }

    pub fn root(&self, t: Transposition) -> Result<usize> {
        let w = self.element(&t.as_permutation(self.n))?;
        self.sys.group().phi_inverse(w)
    }

    pub fn transposition(&self, root: usize) -> Transposition {
        self.permutation(self.sys.group().phi(root))
            .as_transposition()
            .expect("reflections of type A are transpositions")
    }

    pub fn to_roots(&self, set: &TranspositionSet) -> Result<RootSubset> {
        set.iter().map(|&t| self.root(t)).collect()
    }

    pub fn to_transpositions(&self, set: RootSubset) -> TranspositionSet {
        set.iter().map(|r| self.transposition(r)).collect()
    }
}
