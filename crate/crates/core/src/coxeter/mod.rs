//! Coxeter graphs, positive root systems and group enumeration.

mod graph;
mod group;
mod roots;

pub use graph::CoxeterGraph;
pub use group::{format_word, ElemId, ElementSet, Group, GroupElement, DEFAULT_ELEMENT_CAP};
pub use roots::{
    bilinear_form, generate_positive_roots, RootInfo, RootSystem, RootTable, SignedRoot,
    DEFAULT_ROOT_CAP,
};

use crate::perm::Permutation;
use crate::scalar::{Backend, ExactField, FloatField, Ring};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BuildConfig {
    pub backend: Backend,
    pub root_cap: usize,
    pub element_cap: usize,
}

impl Default for BuildConfig {
    fn default() -> Self {
        BuildConfig {
            backend: Backend::Exact,
            root_cap: DEFAULT_ROOT_CAP,
            element_cap: DEFAULT_ELEMENT_CAP,
        }
    }
}

/// A parsed element together with whether the input word was reduced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ParsedElement {
    pub element: ElemId,
    pub input_length: usize,
    pub reduced: bool,
}

/// Graph, root table and element set of one finite Coxeter group, frozen
/// after construction.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    graph: CoxeterGraph,
    ring_l: Option<u32>,
    table: RootTable,
    group: Group,
}

impl CoxeterSystem {
    pub fn build(graph: CoxeterGraph, config: &BuildConfig) -> Result<Self> {
        let (table, ring_l) = match config.backend {
            Backend::Exact => {
                let ring = Ring::for_labels(graph.labels());
                let l = ring.l();
                let field = ExactField::new(ring);
                (RootTable::build(&graph, &field, config.root_cap)?, Some(l))
            }
            Backend::Float => (
                RootTable::build(&graph, &FloatField, config.root_cap)?,
                None,
            ),
        };
        let group = Group::enumerate(&table, config.element_cap)?;
        Ok(CoxeterSystem {
            graph,
            ring_l,
            table,
            group,
        })
    }

    /// Exact backend with default caps.
    pub fn named(name: &str) -> Result<Self> {
        CoxeterSystem::build(CoxeterGraph::named(name)?, &BuildConfig::default())
    }

    pub fn graph(&self) -> &CoxeterGraph {
        &self.graph
    }

    pub fn table(&self) -> &RootTable {
        &self.table
    }

    pub fn group(&self) -> &Group {
        &self.group
    }

    pub fn backend(&self) -> Backend {
        self.table.backend()
    }

    /// Ring parameter `L` of the exact backend.
    pub fn ring_parameter(&self) -> Option<u32> {
        self.ring_l
    }

    pub fn name(&self) -> String {
        self.graph.to_string()
    }

    /// Number of letters when this is a type-A group, i.e. `n + 1` for `A_n`.
    pub fn symmetric_degree(&self) -> Option<usize> {
        self.graph.type_a_rank().map(|n| n + 1)
    }

    /// Parses a generator word such as `"1 2 1"` (one-based, separated by
    /// spaces or commas; `"e"` or an empty string is the identity) or, for
    /// type A, a permutation in one-line notation such as `"3124"`.
    pub fn parse_element(&self, input: &str) -> Result<ParsedElement> {
        let s = input.trim();
        if let Some(n) = self.symmetric_degree() {
            if let Some(p) = Permutation::parse_one_line(s, n) {
                let word = p.reduced_word();
                let element = self.group.from_word(&word)?;
                return Ok(ParsedElement {
                    element,
                    input_length: word.len(),
                    reduced: true,
                });
            }
        }
        let word = parse_word(s)?;
        let element = self.group.from_word(&word)?;
        Ok(ParsedElement {
            element,
            input_length: word.len(),
            reduced: self.group.length(element) == word.len(),
        })
    }

    /// Reduced word, plus one-line notation for type A.
    pub fn format_element(&self, w: ElemId) -> String {
        let word = self.group.format_word(w);
        match self.symmetric_degree() {
            Some(n) => format!(
                "{} [{}]",
                Permutation::from_word(n, &self.group.word(w)),
                word
            ),
            None => word,
        }
    }
}

/// Parses a one-based generator word into zero-based indices.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() || s == "e" {
        return Ok(Vec::new());
    }
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| match t.parse::<usize>() {
            Ok(k) if k >= 1 => Ok(k - 1),
            _ => Err(Error::Parse(format!("bad generator `{t}` in word `{s}`"))),
        })
        .collect()
}
