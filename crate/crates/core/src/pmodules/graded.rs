//! Graded pieces `V_j^{-2m}` of the pushed-forward polyvector fields.
//!
//! The numerator `S(u_P) ⊗ ∧(g ⊕ n_P)` modulo the ideal generated by
//! `Δ(x) = x + β(ad x)` (`x ∈ p`) has the canonical complement
//! `S(u_P) ⊗ ∧(u_P ⊕ n_P)`: every `p`-factor sitting in a `g`-slot rewrites as
//!
//! ```text
//! x  ≡  -Σ_{a,b} M_ba(x) d_a · u_a ⊗ n_b,      [x, n_a] = Σ_b M_ba(x) n_b,
//! ```
//!
//! where `u_a = e_{γ_a}` and `d_a = (γ_a, γ_a)/2` comes from the invariant
//! pairing `(e_γ, f_γ) = 1/d_γ` identifying `n_P^*` with `u_P`. A basis of
//! `V_j^{-2m}` is then `s ⊗ (u-wedge of size a) ⊗ (n-wedge of size b)` with
//! `a + b = j` and `s ∈ S^{b-m}(u_P)`.

use std::collections::HashMap;

use rayon::prelude::*;

use super::{
    combinations, insert_in_multiset, multisets, replace_in_multiset, replace_in_wedge, WeightedBModule,
};
use crate::chevalley::{ChevalleyBasis, Generator, ParabolicSplit};
use crate::error::{ensure_consistent, Result};
use crate::linalg::sparse_rank;
use crate::rootsys::{RootSystem, Weight};

/// Which graded piece: exterior degree `j` and `C^*`-degree `r = -2m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPieceSpec {
    pub levi: Vec<usize>,
    pub j: usize,
    pub r: i64,
}

impl GradedPieceSpec {
    pub fn new(levi: &[usize], j: usize, r: i64) -> Self {
        GradedPieceSpec {
            levi: levi.to_vec(),
            j,
            r,
        }
    }

    /// `m = -r/2`, or `None` if `r` is odd or positive.
    pub fn m(&self) -> Option<usize> {
        (self.r <= 0 && self.r % 2 == 0).then(|| (-self.r / 2) as usize)
    }
}

type Reduction = Vec<(u8, u8, i64)>;

/// Action tables for one parabolic, shared by all graded pieces.
pub struct GradedPieceContext<'a> {
    rs: &'a RootSystem,
    basis: &'a ChevalleyBasis,
    split: ParabolicSplit,
    d: usize,
    /// `u_P` part of `[f_γ, u_a]`.
    s_act: Vec<Vec<Vec<(u8, i64)>>>,
    /// Reduced `p` part of `[f_γ, u_a]` as `(S-factor, n-factor, coef)`.
    g_red: Vec<Vec<Reduction>>,
    /// `[f_γ, n_a]` inside `n_P`.
    n_act: Vec<Vec<Vec<(u8, i64)>>>,
    /// Reduction of each `p` basis vector (indexed by basis of `g`).
    red: HashMap<usize, Reduction>,
    #[cfg_attr(not(test), allow(dead_code))]
    u_of_root: HashMap<usize, u8>,
}

impl<'a> GradedPieceContext<'a> {
    pub fn new(rs: &'a RootSystem, basis: &'a ChevalleyBasis, levi: &[usize]) -> Result<Self> {
        let split = ParabolicSplit::new(basis, levi)?;
        let d = split.dim_x();
        let u_of_root: HashMap<usize, u8> = split
            .nonlevi_roots
            .iter()
            .enumerate()
            .map(|(a, &k)| (k, a as u8))
            .collect();
        let n_pos = |c: usize| -> Option<u8> {
            match basis.generator(c) {
                Generator::F(k) => u_of_root.get(&k).copied(),
                _ => None,
            }
        };

        let mut red: HashMap<usize, Reduction> = HashMap::new();
        for &x in &split.p_basis {
            let mut terms = Vec::new();
            for (a, &ka) in split.nonlevi_roots.iter().enumerate() {
                let fa = basis.index(Generator::F(ka));
                for &(c, v) in basis.bracket(x, fa) {
                    let Some(b) = n_pos(c) else {
                        return Err(crate::error::Error::Consistency(
                            "n_P is not an ideal of p".into(),
                        ));
                    };
                    terms.push((a as u8, b, -v * basis.root_sym(ka)));
                }
            }
            red.insert(x, terms);
        }

        let nroots = rs.num_positive_roots();
        let mut s_act = vec![vec![Vec::new(); d]; nroots];
        let mut g_red = vec![vec![Vec::new(); d]; nroots];
        let mut n_act = vec![vec![Vec::new(); d]; nroots];
        for g in 0..nroots {
            let fg = basis.index(Generator::F(g));
            for (a, &ka) in split.nonlevi_roots.iter().enumerate() {
                let ea = basis.index(Generator::E(ka));
                for &(c, v) in basis.bracket(fg, ea) {
                    match basis.generator(c) {
                        Generator::E(k) if !split.is_levi_root[k] => {
                            s_act[g][a].push((u_of_root[&k], v));
                        }
                        _ => {
                            for &(sa, nb, cc) in &red[&c] {
                                g_red[g][a].push((sa, nb, v * cc));
                            }
                        }
                    }
                }
                let fa = basis.index(Generator::F(ka));
                for &(c, v) in basis.bracket(fg, fa) {
                    let b = n_pos(c);
                    ensure_consistent!(b.is_some(), "[f, n_P] left n_P");
                    n_act[g][a].push((b.unwrap(), v));
                }
            }
        }
        Ok(GradedPieceContext {
            rs,
            basis,
            split,
            d,
            s_act,
            g_red,
            n_act,
            red,
            u_of_root,
        })
    }

    pub fn split(&self) -> &ParabolicSplit {
        &self.split
    }

    pub fn dim_x(&self) -> usize {
        self.d
    }

    fn u_root(&self, a: u8) -> usize {
        self.split.nonlevi_roots[a as usize]
    }

    fn root_weight(&self, a: u8) -> Weight {
        self.rs.positive_roots()[self.u_root(a)].omega
    }

    fn label(&self, s: &[u8], w: &[u8]) -> String {
        let name = |prefix: char, a: u8| {
            let k = self.u_root(a);
            format!(
                "{prefix}{}",
                crate::chevalley::root_label(self.basis.root_alpha(k))
            )
        };
        let d = self.d as u8;
        let join = |v: Vec<String>, sep: &str| {
            if v.is_empty() {
                "1".to_string()
            } else {
                v.join(sep)
            }
        };
        let sp = join(s.iter().map(|&a| name('e', a)).collect(), "·");
        let gp = join(w.iter().filter(|&&x| x < d).map(|&a| name('e', a)).collect(), "∧");
        let np = join(
            w.iter().filter(|&&x| x >= d).map(|&x| name('f', x - d)).collect(),
            "∧",
        );
        format!("{sp} ⊗ {gp} ⊗ {np}")
    }

    /// Basis of `V_j^{-2m}` as `(S-monomial, wedge)` pairs; wedge entries
    /// `< d` are `u_P` slots, entries `>= d` are `n_P` slots shifted by `d`.
    fn basis_keys(&self, j: usize, m: usize) -> Vec<(Vec<u8>, Vec<u8>)> {
        let d = self.d;
        let mut out = Vec::new();
        if j > 2 * d {
            return out;
        }
        let lo = m.max(j.saturating_sub(d));
        let hi = j.min(d);
        for b in lo..=hi {
            let a = j - b;
            let ss = multisets(d, b - m);
            let aa = combinations(d, a);
            let bb = combinations(d, b);
            for s in &ss {
                for ua in &aa {
                    for nb in &bb {
                        let s: Vec<u8> = s.iter().map(|&x| x as u8).collect();
                        let w: Vec<u8> = ua
                            .iter()
                            .map(|&x| x as u8)
                            .chain(nb.iter().map(|&x| (x + d) as u8))
                            .collect();
                        out.push((s, w));
                    }
                }
            }
        }
        out
    }

    /// `f_γ` applied to a complement basis element.
    fn act(&self, g: usize, s: &[u8], w: &[u8], out: &mut Vec<((Vec<u8>, Vec<u8>), i64)>) {
        let d = self.d as u8;
        for q in 0..s.len() {
            for &(b, c) in &self.s_act[g][s[q] as usize] {
                out.push(((replace_in_multiset(s, q, b), w.to_vec()), c));
            }
        }
        for q in 0..w.len() {
            let x = w[q];
            if x < d {
                for &(b, c) in &self.s_act[g][x as usize] {
                    if let Some((t, sign)) = replace_in_wedge(w, q, b) {
                        out.push(((s.to_vec(), t), sign * c));
                    }
                }
                for &(sa, nb, c) in &self.g_red[g][x as usize] {
                    if let Some((t, sign)) = replace_in_wedge(w, q, d + nb) {
                        out.push(((insert_in_multiset(s, sa), t), sign * c));
                    }
                }
            } else {
                for &(b, c) in &self.n_act[g][(x - d) as usize] {
                    if let Some((t, sign)) = replace_in_wedge(w, q, d + b) {
                        out.push(((s.to_vec(), t), sign * c));
                    }
                }
            }
        }
    }

    /// Build `V_j^{-2m}` as a module over the lower Borel.
    pub fn piece(&self, j: usize, m: usize) -> WeightedBModule {
        let keys = self.basis_keys(j, m);
        let index: HashMap<&(Vec<u8>, Vec<u8>), u32> =
            keys.iter().enumerate().map(|(i, k)| (k, i as u32)).collect();
        let d = self.d as u8;
        let weights: Vec<Weight> = keys
            .iter()
            .map(|(s, w)| {
                let mut mu = Weight::zero(self.rs.rank());
                for &a in s {
                    mu += self.root_weight(a);
                }
                for &x in w {
                    if x < d {
                        mu += self.root_weight(x);
                    } else {
                        mu -= self.root_weight(x - d);
                    }
                }
                mu
            })
            .collect();
        let labels = keys.iter().map(|(s, w)| self.label(s, w)).collect();
        let lowering = (0..self.rs.num_positive_roots())
            .map(|g| {
                keys.par_iter()
                    .map(|(s, w)| {
                        let mut terms = Vec::new();
                        self.act(g, s, w, &mut terms);
                        let col: Vec<(u32, i64)> = terms.iter().map(|(k, c)| (index[k], *c)).collect();
                        super::merge_sorted(col)
                    })
                    .collect()
            })
            .collect();
        WeightedBModule::new(self.rs, labels, weights, lowering)
            .expect("graded piece action is weight-compatible")
    }
}

/// Build the graded piece described by `spec`; inconsistent specs give the zero module.
pub fn graded_piece(
    rs: &RootSystem,
    basis: &ChevalleyBasis,
    spec: &GradedPieceSpec,
) -> Result<WeightedBModule> {
    let ctx = GradedPieceContext::new(rs, basis, &spec.levi)?;
    Ok(match spec.m() {
        Some(m) if m <= ctx.dim_x() => ctx.piece(spec.j, m),
        _ => WeightedBModule::zero(rs),
    })
}

fn binom(n: i64, k: i64) -> u64 {
    if k < 0 || n < k {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i + 1) as u64)
}

/// `Σ_{a+b=j} C(d,a) C(d,b) C(d+b-m-1, b-m)`.
pub fn free_rank_count(d: usize, j: usize, m: usize) -> u64 {
    let (d, j, m) = (d as i64, j as i64, m as i64);
    (0..=j)
        .map(|b| {
            let a = j - b;
            let sym = if b < m {
                0
            } else if d == 0 {
                (b == m) as u64
            } else {
                binom(d + b - m - 1, b - m)
            };
            binom(d, a) * binom(d, b) * sym
        })
        .sum()
}

/// Numerator element: S-monomial over `u_P`, wedge over `g ⊕ n_P` with
/// `g` basis indices first and `n_P` slots shifted by `dim g`.
type NumKey = (Vec<u8>, Vec<u16>);

impl GradedPieceContext<'_> {
    fn numerator_keys(&self, j: usize, m: usize) -> Vec<NumKey> {
        let d = self.d;
        let dg = self.basis.dim();
        let mut out = Vec::new();
        let lo = m.max(j.saturating_sub(dg));
        for b in lo..=j.min(d) {
            for s in multisets(d, b - m) {
                for gs in combinations(dg, j - b) {
                    for ns in combinations(d, b) {
                        out.push((
                            s.iter().map(|&x| x as u8).collect(),
                            gs.iter()
                                .map(|&x| x as u16)
                                .chain(ns.iter().map(|&x| (x + dg) as u16))
                                .collect(),
                        ));
                    }
                }
            }
        }
        out
    }

    /// Rewrite a numerator element in the complement basis.
    #[cfg_attr(not(test), allow(dead_code))]
    fn reduce(&self, key: &NumKey, coef: i64, out: &mut HashMap<(Vec<u8>, Vec<u8>), i64>) {
        let dg = self.basis.dim() as u16;
        let (s, w) = key;
        let p_slot = w
            .iter()
            .position(|&x| x < dg && self.split.in_p(self.basis, x as usize));
        match p_slot {
            Some(q) => {
                for &(sa, nb, c) in &self.red[&(w[q] as usize)] {
                    if let Some((t, sign)) = replace_in_wedge(w, q, dg + nb as u16) {
                        let s2 = insert_in_multiset(s, sa);
                        self.reduce(&(s2, t), coef * c * sign, out);
                    }
                }
            }
            None => {
                let d = self.d as u8;
                let w2: Vec<u8> = w
                    .iter()
                    .map(|&x| {
                        if x < dg {
                            let Generator::E(k) = self.basis.generator(x as usize) else {
                                unreachable!()
                            };
                            self.u_of_root[&k]
                        } else {
                            d + (x - dg) as u8
                        }
                    })
                    .collect();
                *out.entry((s.clone(), w2)).or_default() += coef;
            }
        }
    }

    /// `f_γ` on a numerator element (adjoint on `g`-slots).
    #[cfg_attr(not(test), allow(dead_code))]
    fn act_numerator(&self, g: usize, key: &NumKey, out: &mut Vec<(NumKey, i64)>) {
        let dg = self.basis.dim() as u16;
        let (s, w) = key;
        for q in 0..s.len() {
            for &(b, c) in &self.s_act[g][s[q] as usize] {
                out.push(((replace_in_multiset(s, q, b), w.clone()), c));
            }
        }
        let fg = self.basis.index(Generator::F(g));
        for q in 0..w.len() {
            let x = w[q];
            if x < dg {
                for &(c, v) in self.basis.bracket(fg, x as usize) {
                    if let Some((t, sign)) = replace_in_wedge(w, q, c as u16) {
                        out.push(((s.clone(), t), sign * v));
                    }
                }
            } else {
                for &(b, c) in &self.n_act[g][(x - dg) as usize] {
                    if let Some((t, sign)) = replace_in_wedge(w, q, dg + b as u16) {
                        out.push(((s.clone(), t), sign * c));
                    }
                }
            }
        }
    }

    /// Relations `Δ(s ⊗ x) ∧ ω` spanning the kernel of the quotient map.
    fn relations(&self, j: usize, m: usize) -> Vec<Vec<(NumKey, i64)>> {
        let d = self.d;
        let dg = self.basis.dim();
        let mut out = Vec::new();
        for b in m..=j.min(d) {
            let a = j - b;
            if a == 0 || a > dg {
                continue;
            }
            for &x in &self.split.p_basis {
                for s in multisets(d, b - m) {
                    let s: Vec<u8> = s.iter().map(|&v| v as u8).collect();
                    for og in combinations(dg, a - 1) {
                        for on in combinations(d, b) {
                            let mut rel = Vec::new();
                            if !og.contains(&x) {
                                let mut wg: Vec<u16> = og.iter().map(|&v| v as u16).collect();
                                let pos = wg.partition_point(|&v| v < x as u16);
                                wg.insert(pos, x as u16);
                                let sign = if pos % 2 == 0 { 1 } else { -1 };
                                let w: Vec<u16> = wg
                                    .into_iter()
                                    .chain(on.iter().map(|&v| (v + dg) as u16))
                                    .collect();
                                rel.push(((s.clone(), w), sign));
                            }
                            // + Σ M_ba d_a u_a ⊗ n_b ∧ ω
                            for &(sa, nb, c) in &self.red[&x] {
                                if on.contains(&(nb as usize)) {
                                    continue;
                                }
                                let mut wn: Vec<usize> = on.clone();
                                let pos = wn.partition_point(|&v| v < nb as usize);
                                wn.insert(pos, nb as usize);
                                let sign = if (og.len() + pos) % 2 == 0 { 1 } else { -1 };
                                let w: Vec<u16> = og
                                    .iter()
                                    .map(|&v| v as u16)
                                    .chain(wn.iter().map(|&v| (v + dg) as u16))
                                    .collect();
                                rel.push(((insert_in_multiset(&s, sa), w), -c * sign));
                            }
                            if !rel.is_empty() {
                                out.push(rel);
                            }
                        }
                    }
                }
            }
        }
        out
    }
}

/// Dimension of `V_j^{-2m}` computed the slow way: numerator dimension minus
/// the rank of the explicit relation span. Returns `(numerator, rank)`.
pub fn explicit_quotient_dimension(ctx: &GradedPieceContext<'_>, j: usize, m: usize) -> (usize, usize) {
    let keys = ctx.numerator_keys(j, m);
    let index: HashMap<&NumKey, u32> = keys.iter().enumerate().map(|(i, k)| (k, i as u32)).collect();
    let rows: Vec<Vec<(u32, i64)>> = ctx
        .relations(j, m)
        .into_iter()
        .map(|rel| {
            let col: Vec<(u32, i64)> = rel.iter().map(|(k, c)| (index[k], *c)).collect();
            super::merge_sorted(col)
        })
        .collect();
    (keys.len(), sparse_rank(keys.len(), &rows))
}
