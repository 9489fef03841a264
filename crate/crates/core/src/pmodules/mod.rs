//! Finite-dimensional weight modules over the lower Borel `h + n^-`.
//!
//! Every module here carries an integral basis of weight vectors; `h` acts
//! through the weights and each `f_beta` (all positive roots, not only the
//! simple ones) is stored as a sparse integer matrix.

mod graded;

pub use graded::{
    explicit_quotient_dimension, free_rank_count, graded_piece, GradedPieceContext, GradedPieceSpec,
};

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::chevalley::{ChevalleyBasis, Generator};
use crate::error::{ensure_consistent, Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Sparse column: `(row, value)` sorted by row.
pub type SparseCol = Vec<(u32, i64)>;

#[derive(Clone, Debug)]
pub struct WeightedBModule {
    rank: usize,
    root_weights: Vec<Weight>,
    labels: Vec<String>,
    weights: Vec<Weight>,
    /// `lowering[k][b]` is the image of basis vector `b` under `f_{beta_k}`.
    lowering: Vec<Vec<SparseCol>>,
    spaces: HashMap<Weight, Vec<usize>>,
    position: Vec<usize>,
}

fn merge_sorted(mut v: Vec<(u32, i64)>) -> SparseCol {
    v.sort_unstable_by_key(|t| t.0);
    let mut out: SparseCol = Vec::with_capacity(v.len());
    for (r, x) in v {
        match out.last_mut() {
            Some(last) if last.0 == r => last.1 += x,
            _ => out.push((r, x)),
        }
    }
    out.retain(|t| t.1 != 0);
    out
}

impl WeightedBModule {
    pub fn new(
        rs: &RootSystem,
        labels: Vec<String>,
        weights: Vec<Weight>,
        lowering: Vec<Vec<SparseCol>>,
    ) -> Result<Self> {
        let root_weights: Vec<Weight> = rs.positive_roots().iter().map(|r| r.omega).collect();
        Self::from_parts(rs.rank(), root_weights, labels, weights, lowering)
    }

    fn from_parts(
        rank: usize,
        root_weights: Vec<Weight>,
        labels: Vec<String>,
        weights: Vec<Weight>,
        lowering: Vec<Vec<SparseCol>>,
    ) -> Result<Self> {
        let dim = weights.len();
        if labels.len() != dim || lowering.len() != root_weights.len() {
            return Err(Error::InvalidInput("module data has inconsistent sizes".into()));
        }
        for (k, cols) in lowering.iter().enumerate() {
            ensure_consistent!(cols.len() == dim, "action matrix has wrong width");
            for (b, col) in cols.iter().enumerate() {
                for &(r, _) in col {
                    ensure_consistent!(
                        weights[r as usize] == weights[b] - root_weights[k],
                        "f_{k} does not lower {} by its root",
                        labels[b]
                    );
                }
            }
        }
        let mut spaces: HashMap<Weight, Vec<usize>> = HashMap::new();
        let mut position = vec![0; dim];
        for (b, &w) in weights.iter().enumerate() {
            let v = spaces.entry(w).or_default();
            position[b] = v.len();
            v.push(b);
        }
        Ok(WeightedBModule {
            rank,
            root_weights,
            labels,
            weights,
            lowering,
            spaces,
            position,
        })
    }

    /// One-dimensional module of weight `lambda`.
    pub fn character(rs: &RootSystem, lambda: Weight) -> Self {
        let n = rs.num_positive_roots();
        WeightedBModule::new(
            rs,
            vec![if lambda.is_zero() {
                "1".into()
            } else {
                format!("C{lambda}")
            }],
            vec![lambda],
            vec![vec![Vec::new()]; n],
        )
        .unwrap()
    }

    pub fn trivial(rs: &RootSystem) -> Self {
        Self::character(rs, Weight::zero(rs.rank()))
    }

    pub fn zero(rs: &RootSystem) -> Self {
        WeightedBModule::new(rs, vec![], vec![], vec![vec![]; rs.num_positive_roots()]).unwrap()
    }

    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.root_weights.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn weights(&self) -> &[Weight] {
        &self.weights
    }

    /// Distinct weights, sorted.
    pub fn weight_list(&self) -> Vec<Weight> {
        let mut v: Vec<Weight> = self.spaces.keys().copied().collect();
        v.sort();
        v
    }

    /// Basis indices spanning the `mu` weight space.
    pub fn weight_space(&self, mu: Weight) -> &[usize] {
        self.spaces.get(&mu).map_or(&[], |v| v.as_slice())
    }

    /// Position of basis vector `b` inside its weight space.
    pub fn position(&self, b: usize) -> usize {
        self.position[b]
    }

    /// Image of basis vector `b` under `f_{beta_k}`.
    pub fn lower(&self, k: usize, b: usize) -> &SparseCol {
        &self.lowering[k][b]
    }

    /// Apply `f_{beta_k}` to a sparse vector.
    pub fn lower_vec(&self, k: usize, v: &[(u32, i64)]) -> SparseCol {
        let mut acc = Vec::new();
        for &(b, x) in v {
            for &(r, y) in &self.lowering[k][b as usize] {
                acc.push((r, x.checked_mul(y).expect("module action overflow")));
            }
        }
        merge_sorted(acc)
    }

    /// Check `[f_a, f_b] = f_{[a,b]}` on every basis vector.
    pub fn check_module(&self, basis: &ChevalleyBasis) -> Result<()> {
        let n = self.num_roots();
        for a in 0..n {
            for c in 0..n {
                let br = basis.bracket(basis.index(Generator::F(a)), basis.index(Generator::F(c)));
                for b in 0..self.dim() {
                    let v = vec![(b as u32, 1i64)];
                    let ac = self.lower_vec(a, &self.lower_vec(c, &v));
                    let ca = self.lower_vec(c, &self.lower_vec(a, &v));
                    let mut lhs: Vec<(u32, i64)> = ac;
                    lhs.extend(ca.into_iter().map(|(r, x)| (r, -x)));
                    let mut rhs = Vec::new();
                    for &(g, coef) in br {
                        let Generator::F(k) = basis.generator(g) else {
                            return Err(Error::Consistency("[f, f] left n^-".into()));
                        };
                        for (r, x) in self.lower_vec(k, &v) {
                            rhs.push((r, -coef * x));
                        }
                    }
                    lhs.extend(rhs);
                    ensure_consistent!(
                        merge_sorted(lhs).is_empty(),
                        "module relation [f_{a}, f_{c}] fails on {}",
                        self.labels[b]
                    );
                }
            }
        }
        Ok(())
    }

    /// Multiplicity of each weight.
    pub fn character_map(&self) -> BTreeMap<Weight, usize> {
        self.spaces.iter().map(|(&w, v)| (w, v.len())).collect()
    }

    fn with_action<F>(&self, labels: Vec<String>, weights: Vec<Weight>, act: F) -> Self
    where
        F: Fn(usize, usize) -> Vec<(u32, i64)>,
    {
        let dim = weights.len();
        let lowering = (0..self.num_roots())
            .map(|k| (0..dim).map(|b| merge_sorted(act(k, b))).collect())
            .collect();
        Self::from_parts(self.rank, self.root_weights.clone(), labels, weights, lowering)
            .expect("functor preserves weight compatibility")
    }

    pub fn tensor(&self, other: &WeightedBModule) -> WeightedBModule {
        let (m, n) = (self.dim(), other.dim());
        let mut labels = Vec::with_capacity(m * n);
        let mut weights = Vec::with_capacity(m * n);
        for a in 0..m {
            for b in 0..n {
                labels.push(format!("{} ⊗ {}", self.labels[a], other.labels[b]));
                weights.push(self.weights[a] + other.weights[b]);
            }
        }
        self.with_action(labels, weights, |k, idx| {
            let (a, b) = (idx / n, idx % n);
            let mut out = Vec::new();
            for &(r, x) in &self.lowering[k][a] {
                out.push((r * n as u32 + b as u32, x));
            }
            for &(r, x) in &other.lowering[k][b] {
                out.push(((a * n) as u32 + r, x));
            }
            out
        })
    }

    pub fn direct_sum(&self, other: &WeightedBModule) -> WeightedBModule {
        let m = self.dim();
        let labels = self.labels.iter().chain(&other.labels).cloned().collect();
        let weights = self.weights.iter().chain(&other.weights).copied().collect();
        self.with_action(labels, weights, |k, b| {
            if b < m {
                self.lowering[k][b].clone()
            } else {
                other.lowering[k][b - m]
                    .iter()
                    .map(|&(r, x)| (r + m as u32, x))
                    .collect()
            }
        })
    }

    /// Tensor with the character of weight `lambda`.
    pub fn twist(&self, lambda: Weight) -> WeightedBModule {
        let labels = self.labels.iter().map(|l| format!("{l} ⊗ C{lambda}")).collect();
        let weights = self.weights.iter().map(|&w| w + lambda).collect();
        self.with_action(labels, weights, |k, b| self.lowering[k][b].clone())
    }

    pub fn wedge(&self, k: usize) -> WeightedBModule {
        let subsets = combinations(self.dim(), k);
        let index: HashMap<&[usize], usize> = subsets
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let labels = subsets
            .iter()
            .map(|s| {
                if s.is_empty() {
                    "1".to_string()
                } else {
                    s.iter()
                        .map(|&i| self.labels[i].as_str())
                        .collect::<Vec<_>>()
                        .join("∧")
                }
            })
            .collect();
        let weights = subsets
            .iter()
            .map(|s| {
                s.iter()
                    .fold(Weight::zero(self.rank), |acc, &i| acc + self.weights[i])
            })
            .collect();
        self.with_action(labels, weights, |root, idx| {
            let s = &subsets[idx];
            let mut out = Vec::new();
            for (q, &x) in s.iter().enumerate() {
                for &(y, c) in &self.lowering[root][x] {
                    if let Some((t, sign)) = replace_in_wedge(s, q, y as usize) {
                        out.push((index[t.as_slice()] as u32, sign * c));
                    }
                }
            }
            out
        })
    }

    pub fn sym(&self, k: usize) -> WeightedBModule {
        let monos = multisets(self.dim(), k);
        let index: HashMap<&[usize], usize> =
            monos.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
        let labels = monos
            .iter()
            .map(|s| {
                if s.is_empty() {
                    "1".to_string()
                } else {
                    s.iter()
                        .map(|&i| self.labels[i].as_str())
                        .collect::<Vec<_>>()
                        .join("·")
                }
            })
            .collect();
        let weights = monos
            .iter()
            .map(|s| {
                s.iter()
                    .fold(Weight::zero(self.rank), |acc, &i| acc + self.weights[i])
            })
            .collect();
        self.with_action(labels, weights, |root, idx| {
            let s = &monos[idx];
            let mut out = Vec::new();
            for q in 0..s.len() {
                for &(y, c) in &self.lowering[root][s[q]] {
                    let t = replace_in_multiset(s, q, y as usize);
                    out.push((index[t.as_slice()] as u32, c));
                }
            }
            out
        })
    }

    /// Tensor power `self^{⊗k}`.
    pub fn tensor_power(&self, rs: &RootSystem, k: usize) -> WeightedBModule {
        let mut out = WeightedBModule::trivial(rs);
        for _ in 0..k {
            out = out.tensor(self);
        }
        out
    }

    /// JSON dump: labels, weights and the nonzero entries of every `f_beta`.
    pub fn dump(&self, rs: &RootSystem) -> ModuleDump {
        ModuleDump {
            dim: self.dim(),
            labels: self.labels.clone(),
            weights: self.weights.clone(),
            lowering: (0..self.num_roots())
                .map(|k| ActionDump {
                    root: rs.positive_roots()[k].alpha.clone(),
                    entries: self.lowering[k]
                        .iter()
                        .enumerate()
                        .flat_map(|(c, col)| col.iter().map(move |&(r, x)| (r as usize, c, x)))
                        .collect(),
                })
                .collect(),
        }
    }
}

/// Serialized module: `entries` are `(row, column, value)` triples of the
/// matrix of `f_root`, where `root` is in simple-root coordinates.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ModuleDump {
    pub dim: usize,
    pub labels: Vec<String>,
    pub weights: Vec<Weight>,
    pub lowering: Vec<ActionDump>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct ActionDump {
    pub root: Vec<i32>,
    pub entries: Vec<(usize, usize, i64)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Functor {
    Tensor,
    Wedge,
    Sym,
}

/// `tensor` multiplies all inputs; `wedge` and `sym` take one input and degree `k`.
pub fn apply_functor(
    rs: &RootSystem,
    kind: Functor,
    inputs: &[&WeightedBModule],
    k: usize,
) -> Result<WeightedBModule> {
    match kind {
        Functor::Tensor => Ok(inputs
            .iter()
            .fold(WeightedBModule::trivial(rs), |acc, m| acc.tensor(m))),
        Functor::Wedge | Functor::Sym => {
            let [m] = inputs else {
                return Err(Error::InvalidInput(
                    "wedge and sym take exactly one module".into(),
                ));
            };
            Ok(if kind == Functor::Wedge {
                m.wedge(k)
            } else {
                m.sym(k)
            })
        }
    }
}

/// All increasing `k`-subsets of `0..n`, in lexicographic order.
pub fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] != i + n - k) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All non-decreasing length-`k` sequences over `0..n`.
pub fn multisets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    let mut cur = vec![0usize; k];
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] + 1 < n) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[i];
        }
    }
}

/// Replace position `q` of an increasing sequence by `y` and re-sort.
/// Returns `None` when `y` is already present elsewhere.
pub(crate) fn replace_in_wedge<T: Ord + Copy>(s: &[T], q: usize, y: T) -> Option<(Vec<T>, i64)> {
    let mut t: Vec<T> = Vec::with_capacity(s.len());
    t.extend_from_slice(&s[..q]);
    t.extend_from_slice(&s[q + 1..]);
    match t.binary_search(&y) {
        Ok(_) => None,
        Err(p) => {
            t.insert(p, y);
            let sign = if (p as i64 - q as i64) % 2 == 0 { 1 } else { -1 };
            Some((t, sign))
        }
    }
}

pub(crate) fn replace_in_multiset<T: Ord + Copy>(s: &[T], q: usize, y: T) -> Vec<T> {
    let mut t: Vec<T> = Vec::with_capacity(s.len());
    t.extend_from_slice(&s[..q]);
    t.extend_from_slice(&s[q + 1..]);
    let p = t.partition_point(|&x| x <= y);
    t.insert(p, y);
    t
}

pub(crate) fn insert_in_multiset<T: Ord + Copy>(s: &[T], y: T) -> Vec<T> {
    let mut t = s.to_vec();
    let p = t.partition_point(|&x| x <= y);
    t.insert(p, y);
    t
}
