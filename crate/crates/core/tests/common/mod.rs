//! Golden documents shared by the golden-file tests and the acceptance run.

#![allow(dead_code)]

use std::path::PathBuf;

use serde::Serialize;
use weakorder::bruhat::{check_conjecture_h, DihedralWord, Generator};
use weakorder::perm::{
    palindromic_path, transitive_closure_join, Permutation, Transposition, TypeA,
};
use weakorder::weak_order::{conjectural_join_d, join_bruteforce};
use weakorder::{CoxeterSystem, ElemId, RootSubset};

pub const GOLDEN: [&str; 3] = ["s4_example", "a3_roots_join", "i2_4_cases"];

pub fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(format!("{name}.json"))
}

pub fn render(name: &str) -> String {
    let value = match name {
        "s4_example" => serde_json::to_string_pretty(&s4_example()),
        "a3_roots_join" => serde_json::to_string_pretty(&a3_roots_join()),
        "i2_4_cases" => serde_json::to_string_pretty(&i2_4_cases()),
        _ => panic!("no golden document `{name}`"),
    };
    value.unwrap() + "\n"
}

/// Compares a rendered document with its file; `UPDATE_GOLDEN=1` rewrites it.
pub fn check_golden(name: &str) -> Result<(), String> {
    let fresh = render(name);
    let path = golden_path(name);
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &fresh).map_err(|e| e.to_string())?;
    }
    let stored = std::fs::read_to_string(&path).map_err(|e| format!("{}: {e}", path.display()))?;
    if stored == fresh {
        Ok(())
    } else {
        Err(format!(
            "{} differs from the computed document",
            path.display()
        ))
    }
}

#[derive(Serialize)]
pub struct PathDoc {
    pub labels: Vec<Transposition>,
    pub vertices: Vec<Permutation>,
}

#[derive(Serialize)]
pub struct S4Example {
    pub schema: u32,
    pub sigma: Permutation,
    pub tau: Permutation,
    pub tl_sigma: Vec<Transposition>,
    pub tl_tau: Vec<Transposition>,
    pub join_closure: Permutation,
    pub join_bruteforce: Permutation,
    pub tl_join: Vec<Transposition>,
    pub t_cap_v: Vec<Transposition>,
    pub excluded: Vec<Transposition>,
    pub holds: bool,
    pub palindromic_path_to_14: PathDoc,
}

fn transpositions(a: &TypeA, set: RootSubset) -> Vec<Transposition> {
    let mut v: Vec<Transposition> = set.iter().map(|r| a.transposition(r)).collect();
    v.sort();
    v
}

pub fn s4_example() -> S4Example {
    let sys = CoxeterSystem::named("A3").unwrap();
    let a = TypeA::new(&sys).unwrap();
    let g = sys.group();
    let sigma = Permutation::parse("3124").unwrap();
    let tau = Permutation::parse("1423").unwrap();
    let u = a.element(&sigma).unwrap();
    let v = a.element(&tau).unwrap();
    let verdict = check_conjecture_h(g, u, v).unwrap();
    let closure = transitive_closure_join(&sigma, &tau).unwrap();
    let path = palindromic_path(&sigma, &tau, Transposition::new(1, 4)).unwrap();
    S4Example {
        schema: 1,
        tl_sigma: transpositions(&a, g.left_reflection_set(u)),
        tl_tau: transpositions(&a, g.left_reflection_set(v)),
        join_closure: closure.join,
        join_bruteforce: a.permutation(join_bruteforce(g, u, v).unwrap()),
        tl_join: transpositions(&a, verdict.lhs),
        t_cap_v: transpositions(&a, verdict.rhs),
        excluded: transpositions(&a, sys.table().all().difference(verdict.rhs)),
        holds: verdict.holds,
        palindromic_path_to_14: PathDoc {
            labels: path.labels(),
            vertices: path.vertices(),
        },
        sigma,
        tau,
    }
}

#[derive(Serialize)]
pub struct A3RootsJoin {
    pub schema: u32,
    pub positive_roots: Vec<String>,
    pub a: Vec<String>,
    pub b: Vec<String>,
    pub a_join_b: Vec<String>,
    pub j_a_b: Vec<String>,
    pub tau_contains_s_a2: bool,
    pub tau_contains_s_a2_a3: bool,
}

pub fn a3_roots_join() -> A3RootsJoin {
    let sys = CoxeterSystem::named("A3").unwrap();
    let g = sys.group();
    let t = sys.table();
    let labels = |s: RootSubset| -> Vec<String> { s.iter().map(|i| t.label(i)).collect() };
    let u = g.from_word(&[0, 1]).unwrap();
    let v = g.from_word(&[0, 2]).unwrap();
    let (a, b) = (g.inversions(u), g.inversions(v));
    let tau = weakorder::weak_order::tau_reachable(g, a.union(b));
    A3RootsJoin {
        schema: 1,
        positive_roots: labels(t.all()),
        a: labels(a),
        b: labels(b),
        a_join_b: labels(g.inversions(join_bruteforce(g, u, v).unwrap())),
        j_a_b: labels(conjectural_join_d(g, a, b)),
        tau_contains_s_a2: tau.contains(g.phi(1)),
        tau_contains_s_a2_a3: tau.contains(g.phi(4)),
    }
}

#[derive(Serialize)]
pub struct DihedralCase {
    pub u: DihedralWord,
    pub v: DihedralWord,
    pub join: DihedralWord,
    pub tl_join: Vec<DihedralWord>,
    pub t_cap_v: Vec<DihedralWord>,
    pub excluded: Vec<DihedralWord>,
    pub holds: bool,
}

#[derive(Serialize)]
pub struct I24Cases {
    pub schema: u32,
    pub reflections: Vec<DihedralWord>,
    pub cases: Vec<DihedralCase>,
}

fn dihedral_name(sys: &CoxeterSystem, w: ElemId) -> DihedralWord {
    let word = sys.group().word(w);
    let first = if word.first() == Some(&1) {
        Generator::R
    } else {
        Generator::S
    };
    DihedralWord::new(first, word.len()).normalize(4)
}

pub fn i2_4_cases() -> I24Cases {
    let sys = CoxeterSystem::named("I2(4)").unwrap();
    let g = sys.group();
    let names = |s: RootSubset| -> Vec<DihedralWord> {
        let mut v: Vec<DihedralWord> = s.iter().map(|r| dihedral_name(&sys, g.phi(r))).collect();
        v.sort();
        v
    };
    let case = |u: &[usize], v: &[usize]| {
        let u = g.from_word(u).unwrap();
        let v = g.from_word(v).unwrap();
        let verdict = check_conjecture_h(g, u, v).unwrap();
        DihedralCase {
            u: dihedral_name(&sys, u),
            v: dihedral_name(&sys, v),
            join: dihedral_name(&sys, join_bruteforce(g, u, v).unwrap()),
            tl_join: names(verdict.lhs),
            t_cap_v: names(verdict.rhs),
            excluded: names(sys.table().all().difference(verdict.rhs)),
            holds: verdict.holds,
        }
    };
    I24Cases {
        schema: 1,
        reflections: names(sys.table().all()),
        cases: vec![case(&[0], &[1]), case(&[0], &[0, 1, 0])],
    }
}
