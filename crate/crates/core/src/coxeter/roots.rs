use std::cmp::Ordering;
use std::collections::HashMap;

use serde::Serialize;

use super::CoxeterGraph;
use crate::scalar::{Backend, Field, Scalar, Sign};
use crate::subset::RootSubset;
use crate::weak_order::cone_member;
use crate::{Error, Result};

/// Default cap on the number of positive roots generated before giving up.
pub const DEFAULT_ROOT_CAP: usize = 10_000;

/// The symmetric bilinear form `B_ij = -cos(pi/m_ij)` on the simple roots.
pub fn bilinear_form<F: Field>(graph: &CoxeterGraph, field: &F) -> Result<Vec<Vec<F::Elem>>> {
    let n = graph.rank();
    let half = field.rational(-1, 2);
    let mut form = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let m = graph.label(i, j);
            let v = match m {
                1 => field.one(),
                2 => field.zero(),
                _ => half.clone() * field.two_cos_pi_over(m)?,
            };
            row.push(v);
        }
        form.push(row);
    }
    Ok(form)
}

/// Positive roots with typed coordinates in the simple-root basis.
#[derive(Debug, Clone)]
pub struct RootSystem<S: Scalar> {
    pub form: Vec<Vec<S>>,
    pub roots: Vec<Vec<S>>,
    /// Generation depth: number of simple reflections needed to reach the
    /// root from a simple root.
    pub depth: Vec<u32>,
}

fn lex_cmp_desc<S: Scalar>(a: &[S], b: &[S]) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        match (y.clone() - x.clone()).sign() {
            Sign::Zero => continue,
            Sign::Negative => return Ordering::Less,
            Sign::Positive => return Ordering::Greater,
        }
    }
    Ordering::Equal
}

fn inner<S: Scalar>(form: &[Vec<S>], v: &[S], w: &[S]) -> S {
    let mut acc: Option<S> = None;
    for (i, vi) in v.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        for (j, wj) in w.iter().enumerate() {
            if form[i][j].is_zero() || wj.is_zero() {
                continue;
            }
            let t = vi.clone() * form[i][j].clone() * wj.clone();
            acc = Some(match acc {
                Some(a) => a + t,
                None => t,
            });
        }
    }
    acc.unwrap_or_else(|| v[0].clone() - v[0].clone())
}

/// `s_beta(v) = v - 2 (v, beta) beta` for a unit vector `beta`.
fn reflect<S: Scalar>(form: &[Vec<S>], beta: &[S], v: &[S]) -> Vec<S> {
    let ip = inner(form, v, beta);
    let two_ip = ip.clone() + ip;
    v.iter()
        .zip(beta)
        .map(|(x, b)| x.clone() - two_ip.clone() * b.clone())
        .collect()
}

fn is_nonnegative<S: Scalar>(v: &[S]) -> bool {
    v.iter().all(|x| x.sign() != Sign::Negative)
}

fn key_of<S: Scalar>(v: &[S]) -> Vec<S::Key> {
    v.iter().map(Scalar::key).collect()
}

/// Closure of the simple roots under the simple reflections, keeping the
/// positive roots. Ordering: simple roots in generator order, then by
/// generation depth, ties broken by descending lexicographic order of the
/// coordinates.
pub fn generate_positive_roots<F: Field>(
    graph: &CoxeterGraph,
    field: &F,
    cap: usize,
) -> Result<RootSystem<F::Elem>> {
    let n = graph.rank();
    let form = bilinear_form(graph, field)?;
    let simple: Vec<Vec<F::Elem>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { field.one() } else { field.zero() })
                .collect()
        })
        .collect();

    let mut seen: HashMap<Vec<<F::Elem as Scalar>::Key>, usize> = HashMap::new();
    let mut roots = Vec::new();
    let mut depth = Vec::new();
    for r in simple.iter() {
        seen.insert(key_of(r), roots.len());
        roots.push(r.clone());
        depth.push(0);
    }

    let mut level_start = 0;
    let mut d = 0;
    while level_start < roots.len() {
        let level_end = roots.len();
        let mut next: Vec<Vec<F::Elem>> = Vec::new();
        let mut next_keys: HashMap<Vec<<F::Elem as Scalar>::Key>, ()> = HashMap::new();
        for root in &roots[level_start..level_end] {
            for s in simple.iter() {
                let img = reflect(&form, s, root);
                if !is_nonnegative(&img) {
                    continue;
                }
                let k = key_of(&img);
                if seen.contains_key(&k) || next_keys.contains_key(&k) {
                    continue;
                }
                next_keys.insert(k, ());
                next.push(img);
            }
        }
        next.sort_by(|a, b| lex_cmp_desc(a, b));
        d += 1;
        for r in next {
            if roots.len() >= cap {
                return Err(Error::FinitenessExceeded { cap });
            }
            seen.insert(key_of(&r), roots.len());
            roots.push(r);
            depth.push(d);
        }
        level_start = level_end;
    }
    Ok(RootSystem { form, roots, depth })
}

/// Signed reference to a root: `+(i+1)` for `beta_i`, `-(i+1)` for `-beta_i`.
pub type SignedRoot = i32;

pub(crate) fn signed(index: usize, positive: bool) -> SignedRoot {
    let v = index as i32 + 1;
    if positive {
        v
    } else {
        -v
    }
}

pub(crate) fn unsigned(r: SignedRoot) -> (usize, bool) {
    ((r.unsigned_abs() - 1) as usize, r > 0)
}

/// One positive root in serializable form.
#[derive(Debug, Clone, Serialize)]
pub struct RootInfo {
    pub index: usize,
    pub depth: u32,
    /// Per simple-root coordinate, the coefficients over the field basis.
    pub coords: Vec<Vec<String>>,
    pub decimal: Vec<f64>,
}

/// Frozen positive-root table with the reflection action and cone data.
#[derive(Debug, Clone)]
pub struct RootTable {
    rank: usize,
    backend: Backend,
    roots: Vec<RootInfo>,
    form: Vec<Vec<f64>>,
    /// `act[t * N + r]` is the signed index of `s_{beta_t}(beta_r)`.
    act: Vec<SignedRoot>,
    /// `cone[a * N + b]`: positive roots in the nonnegative cone of
    /// `beta_a` and `beta_b`.
    cone: Vec<RootSubset>,
}

impl RootTable {
    pub fn build<F: Field>(graph: &CoxeterGraph, field: &F, cap: usize) -> Result<RootTable> {
        let sys = generate_positive_roots(graph, field, cap)?;
        RootTable::from_system(graph.rank(), field.backend(), &sys)
    }

    pub fn from_system<S: Scalar>(
        rank: usize,
        backend: Backend,
        sys: &RootSystem<S>,
    ) -> Result<RootTable> {
        let n = sys.roots.len();
        if n > RootSubset::CAPACITY {
            return Err(Error::TooManyRoots {
                roots: n,
                max: RootSubset::CAPACITY,
            });
        }
        let index: HashMap<Vec<S::Key>, usize> = sys
            .roots
            .iter()
            .enumerate()
            .map(|(i, r)| (key_of(r), i))
            .collect();

        let mut act = vec![0; n * n];
        for t in 0..n {
            for r in 0..n {
                let img = reflect(&sys.form, &sys.roots[t], &sys.roots[r]);
                let neg: Vec<S> = img.iter().map(|x| -x.clone()).collect();
                let s = if let Some(&i) = index.get(&key_of(&img)) {
                    signed(i, true)
                } else if let Some(&i) = index.get(&key_of(&neg)) {
                    signed(i, false)
                } else {
                    return Err(Error::InvalidGraph(format!(
                        "reflection of root {r} in root {t} is not a root"
                    )));
                };
                act[t * n + r] = s;
            }
        }

        let mut cone = vec![RootSubset::empty(); n * n];
        for a in 0..n {
            cone[a * n + a] = RootSubset::singleton(a);
            for b in a + 1..n {
                let set: RootSubset = (0..n)
                    .filter(|&g| cone_member(&sys.roots[a], &sys.roots[b], &sys.roots[g]))
                    .collect();
                cone[a * n + b] = set;
                cone[b * n + a] = set;
            }
        }

        let roots = sys
            .roots
            .iter()
            .enumerate()
            .map(|(i, r)| RootInfo {
                index: i,
                depth: sys.depth[i],
                coords: r.iter().map(Scalar::render).collect(),
                decimal: r.iter().map(Scalar::to_f64).collect(),
            })
            .collect();
        let form = sys
            .form
            .iter()
            .map(|row| row.iter().map(Scalar::to_f64).collect())
            .collect();
        Ok(RootTable {
            rank,
            backend,
            roots,
            form,
            act,
            cone,
        })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn backend(&self) -> Backend {
        self.backend
    }

    /// Number of positive roots, equal to the number of reflections.
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn roots(&self) -> &[RootInfo] {
        &self.roots
    }

    pub fn root(&self, i: usize) -> &RootInfo {
        &self.roots[i]
    }

    pub fn form_approx(&self) -> &[Vec<f64>] {
        &self.form
    }

    pub fn all(&self) -> RootSubset {
        RootSubset::full(self.len())
    }

    /// Signed index of `s_{beta_t}(beta_r)`.
    pub fn act(&self, t: usize, r: usize) -> SignedRoot {
        self.act[t * self.len() + r]
    }

    pub(crate) fn act_row(&self, t: usize) -> &[SignedRoot] {
        let n = self.len();
        &self.act[t * n..(t + 1) * n]
    }

    pub fn cone(&self, a: usize, b: usize) -> RootSubset {
        self.cone[a * self.len() + b]
    }

    /// Human-readable form such as `α1+α2` (integer coefficients) or
    /// `1.618α1+α2`.
    pub fn label(&self, i: usize) -> String {
        let mut out = String::new();
        for (k, &c) in self.roots[i].decimal.iter().enumerate() {
            if c.abs() < 1e-9 {
                continue;
            }
            if !out.is_empty() {
                out.push('+');
            }
            let r = c.round();
            if (c - r).abs() < 1e-9 {
                if r != 1.0 {
                    out.push_str(&format!("{r}"));
                }
            } else {
                out.push_str(&format!("{c:.4}"));
            }
            out.push_str(&format!("α{}", k + 1));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{ExactField, FloatField, Ring};

    fn exact(name: &str) -> (CoxeterGraph, ExactField) {
        let g = CoxeterGraph::named(name).unwrap();
        let f = ExactField::new(Ring::for_labels(g.labels()));
        (g, f)
    }

    #[test]
    fn form_examples() {
        let (g, f) = exact("A2");
        let b = bilinear_form(&g, &f).unwrap();
        assert_eq!(b[0][0], f.one());
        assert_eq!(b[0][1], f.rational(-1, 2));
        let (g, f) = exact("I2(4)");
        let b = bilinear_form(&g, &f).unwrap();
        assert!((b[0][1].to_f64() + 2f64.sqrt() / 2.0).abs() < 1e-12);
        // -sqrt2/2 squared is 1/2
        assert_eq!(b[0][1].clone() * b[0][1].clone(), f.rational(1, 2));
        let (g, f) = exact("A3");
        assert!(bilinear_form(&g, &f).unwrap()[0][2].is_zero());
    }

    #[test]
    fn a3_roots_in_order() {
        let (g, f) = exact("A3");
        let t = RootTable::build(&g, &f, DEFAULT_ROOT_CAP).unwrap();
        let labels: Vec<String> = (0..t.len()).map(|i| t.label(i)).collect();
        assert_eq!(labels, ["α1", "α2", "α3", "α1+α2", "α2+α3", "α1+α2+α3"]);
        assert_eq!(t.root(5).depth, 2);
    }

    #[test]
    fn root_counts() {
        for (name, count) in [
            ("A2", 3),
            ("B3", 9),
            ("H3", 15),
            ("F4", 24),
            ("I2(7)", 7),
            ("D4", 12),
        ] {
            let (g, f) = exact(name);
            assert_eq!(
                RootTable::build(&g, &f, DEFAULT_ROOT_CAP).unwrap().len(),
                count,
                "{name}"
            );
        }
    }

    #[test]
    fn act_is_an_involution() {
        let (g, f) = exact("H3");
        let t = RootTable::build(&g, &f, DEFAULT_ROOT_CAP).unwrap();
        for a in 0..t.len() {
            assert_eq!(t.act(a, a), -(a as i32 + 1));
            for r in 0..t.len() {
                let (i, pos) = unsigned(t.act(a, r));
                let (j, pos2) = unsigned(t.act(a, i));
                assert_eq!(j, r);
                assert_eq!(pos, pos2);
            }
        }
    }

    #[test]
    fn infinite_type_hits_the_cap() {
        // affine A2~: a triangle of 3-labels
        let g =
            CoxeterGraph::from_matrix(vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]]).unwrap();
        let f = ExactField::new(Ring::for_labels(g.labels()));
        assert_eq!(
            RootTable::build(&g, &f, 200).unwrap_err(),
            Error::FinitenessExceeded { cap: 200 }
        );
        assert_eq!(
            RootTable::build(&g, &FloatField, 200).unwrap_err(),
            Error::FinitenessExceeded { cap: 200 }
        );
    }
}
