//! Chevalley basis of the simple Lie algebra and its parabolic splittings.
//!
//! Basis order: `e_beta` for positive roots (root order), then `h_i`, then
//! `f_beta`. Non-simple root vectors are defined by induction on height:
//! with `i` the smallest index such that `delta = gamma - alpha_i` is a root
//! and `p` the largest `k` with `delta - k alpha_i` a root,
//!
//! ```text
//! f_gamma = [f_i, f_delta] / (p + 1),    e_gamma = [e_delta, e_i] / (p + 1).
//! ```
//!
//! so `e_gamma = -omega(f_gamma)` for the Chevalley involution `omega`.

use std::collections::HashMap;

use crate::error::{ensure_consistent, Error, Result};
use crate::pmodules::WeightedBModule;
use crate::rootsys::{RootSystem, Weight};

/// Sparse vector in the basis of `g`.
pub type LieVec = Vec<(usize, i64)>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    E(usize),
    H(usize),
    F(usize),
}

#[derive(Debug)]
pub struct ChevalleyBasis {
    nroots: usize,
    rank: usize,
    weights: Vec<Weight>,
    /// `brackets[a][b] = [x_a, x_b]`.
    brackets: Vec<Vec<LieVec>>,
    names: Vec<String>,
    root_alpha: Vec<Vec<i32>>,
    root_sym: Vec<i64>,
    sym: Vec<i64>,
}

type Dense = Vec<Vec<i64>>;

fn commutator(a: &Dense, b: &Dense) -> Dense {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let (aik, bik) = (a[i][k], b[i][k]);
            if aik == 0 && bik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j] - bik * a[k][j];
            }
        }
    }
    out
}

fn divide_exact(m: &mut Dense, d: i64) -> bool {
    for row in m.iter_mut() {
        for x in row.iter_mut() {
            if *x % d != 0 {
                return false;
            }
            *x /= d;
        }
    }
    true
}

/// Name like `12` for `alpha_1 + alpha_2` or `122` for `alpha_1 + 2 alpha_2`.
pub fn root_label(alpha: &[i32]) -> String {
    let mut s = String::new();
    for (i, &c) in alpha.iter().enumerate() {
        for _ in 0..c {
            s.push_str(&(i + 1).to_string());
        }
    }
    s
}

impl ChevalleyBasis {
    pub fn new(rs: &RootSystem) -> Result<Self> {
        let n = rs.num_positive_roots();
        let r = rs.rank();
        let dim = 2 * n + r;
        let roots = rs.positive_roots();
        let e = |k: usize| k;
        let h = |i: usize| n + i;
        let f = |k: usize| n + r + k;
        let shift = |k: usize, i: usize, sgn: i32| -> Option<usize> {
            let mut a = roots[k].alpha.clone();
            a[i] += sgn;
            rs.root_index(&a)
        };

        // fmat[i][k]: [f_i, f_k] = fmat f_{k + alpha_i}
        // emat[m][k]: [e_m, f_k] = emat f_{k - alpha_m}, k not simple
        let mut fmat = vec![vec![0i64; n]; r];
        let mut emat = vec![vec![0i64; n]; r];
        let mut defining: Vec<Option<(usize, usize, i64)>> = vec![None; n];

        for g in 0..n {
            if roots[g].is_simple() {
                continue;
            }
            let pairs: Vec<(usize, usize)> = (0..r).filter_map(|j| shift(g, j, -1).map(|d| (j, d))).collect();
            ensure_consistent!(!pairs.is_empty(), "root without predecessor");
            // e-data of [f_j, f_delta]: coefficient on f_{gamma - alpha_m}
            let edata = |j: usize, d: usize, emat: &[Vec<i64>], fmat: &[Vec<i64>]| -> Vec<i64> {
                (0..r)
                    .map(|m| {
                        let mut x = 0i64;
                        if m == j {
                            x -= roots[d].omega[j] as i64;
                        }
                        if roots[d].is_simple() {
                            if d == m {
                                x += rs.cartan()[m][j] as i64;
                            }
                        } else if let Some(dm) = shift(d, m, -1) {
                            x += emat[m][d] * fmat[j][dm];
                        }
                        x
                    })
                    .collect()
            };
            let (i0, d0) = pairs[0];
            let mut p = 0i64;
            let mut cur = d0;
            while let Some(t) = shift(cur, i0, -1) {
                p += 1;
                cur = t;
            }
            defining[g] = Some((i0, d0, p + 1));
            let x0 = edata(i0, d0, &emat, &fmat);
            for m in 0..r {
                ensure_consistent!(x0[m] % (p + 1) == 0, "non-integral structure constant");
                emat[m][g] = x0[m] / (p + 1);
            }
            fmat[i0][d0] = p + 1;
            let m0 = (0..r).find(|&m| emat[m][g] != 0);
            let Some(m0) = m0 else {
                return Err(Error::Consistency("root vector killed by every e_i".into()));
            };
            for &(j, d) in &pairs[1..] {
                let x = edata(j, d, &emat, &fmat);
                let c = x[m0] / emat[m0][g];
                for m in 0..r {
                    ensure_consistent!(x[m] == c * emat[m][g], "inconsistent bracket data");
                }
                fmat[j][d] = c;
            }
        }

        let zero = || vec![vec![0i64; dim]; dim];
        let mut ad: Vec<Dense> = vec![Vec::new(); dim];
        for i in 0..r {
            let mut me = zero();
            let mut mf = zero();
            let mut mh = zero();
            for k in 0..n {
                // columns are inputs
                if let Some(t) = shift(k, i, 1) {
                    me[e(t)][e(k)] = -fmat[i][k];
                    mf[f(t)][f(k)] = fmat[i][k];
                }
                if k == i {
                    me[h(i)][f(k)] = 1;
                    mf[h(i)][e(k)] = -1;
                } else if !roots[k].is_simple() {
                    if let Some(t) = shift(k, i, -1) {
                        me[f(t)][f(k)] = emat[i][k];
                        mf[e(t)][e(k)] = -emat[i][k];
                    }
                }
                let c = roots[k].omega[i] as i64;
                mh[e(k)][e(k)] = c;
                mh[f(k)][f(k)] = -c;
            }
            for kk in 0..r {
                let a = rs.cartan()[kk][i] as i64;
                me[e(i)][h(kk)] = -a;
                mf[f(i)][h(kk)] = a;
            }
            ad[e(i)] = me;
            ad[f(i)] = mf;
            ad[h(i)] = mh;
        }
        for g in 0..n {
            let Some((i0, d0, q)) = defining[g] else {
                continue;
            };
            let mut me = commutator(&ad[e(d0)], &ad[e(i0)]);
            let mut mf = commutator(&ad[f(i0)], &ad[f(d0)]);
            ensure_consistent!(
                divide_exact(&mut me, q) && divide_exact(&mut mf, q),
                "root vector normalization not integral"
            );
            ad[e(g)] = me;
            ad[f(g)] = mf;
        }

        let brackets: Vec<Vec<LieVec>> = (0..dim)
            .map(|a| {
                (0..dim)
                    .map(|b| {
                        (0..dim)
                            .filter(|&c| ad[a][c][b] != 0)
                            .map(|c| (c, ad[a][c][b]))
                            .collect()
                    })
                    .collect()
            })
            .collect();

        let mut weights = vec![Weight::zero(r); dim];
        let mut names = vec![String::new(); dim];
        for k in 0..n {
            weights[e(k)] = roots[k].omega;
            weights[f(k)] = -roots[k].omega;
            names[e(k)] = format!("e{}", root_label(&roots[k].alpha));
            names[f(k)] = format!("f{}", root_label(&roots[k].alpha));
        }
        for i in 0..r {
            names[h(i)] = format!("h{}", i + 1);
        }
        let basis = ChevalleyBasis {
            nroots: n,
            rank: r,
            weights,
            brackets,
            names,
            root_alpha: roots.iter().map(|x| x.alpha.clone()).collect(),
            root_sym: roots.iter().map(|x| x.sym).collect(),
            sym: rs.symmetrizer().to_vec(),
        };
        basis.check_antisymmetry()?;
        Ok(basis)
    }

    fn check_antisymmetry(&self) -> Result<()> {
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                let mut x = self.brackets[a][b].clone();
                for &(c, v) in &self.brackets[b][a] {
                    match x.iter_mut().find(|t| t.0 == c) {
                        Some(t) => t.1 += v,
                        None => x.push((c, v)),
                    }
                }
                ensure_consistent!(x.iter().all(|t| t.1 == 0), "bracket not antisymmetric");
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        2 * self.nroots + self.rank
    }

    pub fn num_roots(&self) -> usize {
        self.nroots
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn index(&self, g: Generator) -> usize {
        match g {
            Generator::E(k) => k,
            Generator::H(i) => self.nroots + i,
            Generator::F(k) => self.nroots + self.rank + k,
        }
    }

    pub fn generator(&self, a: usize) -> Generator {
        if a < self.nroots {
            Generator::E(a)
        } else if a < self.nroots + self.rank {
            Generator::H(a - self.nroots)
        } else {
            Generator::F(a - self.nroots - self.rank)
        }
    }

    pub fn weight(&self, a: usize) -> Weight {
        self.weights[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    /// `[x_a, x_b]`.
    pub fn bracket(&self, a: usize, b: usize) -> &LieVec {
        &self.brackets[a][b]
    }

    /// Bracket of two sparse vectors.
    pub fn bracket_vec(&self, x: &LieVec, y: &LieVec) -> LieVec {
        let mut acc: HashMap<usize, i64> = HashMap::new();
        for &(a, ca) in x {
            for &(b, cb) in y {
                for &(c, v) in &self.brackets[a][b] {
                    *acc.entry(c).or_default() += ca * cb * v;
                }
            }
        }
        let mut out: LieVec = acc.into_iter().filter(|t| t.1 != 0).collect();
        out.sort_unstable();
        out
    }

    /// Coroot `h_gamma` in the basis `h_1, .., h_r`.
    pub fn coroot(&self, k: usize) -> LieVec {
        (0..self.rank)
            .filter(|&i| self.root_alpha[k][i] != 0)
            .map(|i| {
                (
                    self.index(Generator::H(i)),
                    self.root_alpha[k][i] as i64 * self.sym[i] / self.root_sym[k],
                )
            })
            .collect()
    }

    /// Half squared length of root `k` (short roots have 1).
    pub fn root_sym(&self, k: usize) -> i64 {
        self.root_sym[k]
    }

    pub fn root_alpha(&self, k: usize) -> &[i32] {
        &self.root_alpha[k]
    }

    /// Largest absolute structure constant.
    pub fn max_structure_constant(&self) -> i64 {
        self.brackets
            .iter()
            .flatten()
            .flatten()
            .map(|t| t.1.abs())
            .max()
            .unwrap_or(0)
    }

    /// Check the Jacobi identity on every triple of basis vectors.
    pub fn check_jacobi(&self) -> Result<()> {
        let d = self.dim();
        for a in 0..d {
            for b in 0..d {
                for c in 0..d {
                    let bc = self.bracket_vec(&vec![(a, 1)], &self.brackets[b][c].clone());
                    let ca = self.bracket_vec(&vec![(b, 1)], &self.brackets[c][a].clone());
                    let ab = self.bracket_vec(&vec![(c, 1)], &self.brackets[a][b].clone());
                    let mut acc: HashMap<usize, i64> = HashMap::new();
                    for (k, v) in bc.into_iter().chain(ca).chain(ab) {
                        *acc.entry(k).or_default() += v;
                    }
                    ensure_consistent!(
                        acc.values().all(|&v| v == 0),
                        "Jacobi fails on ({}, {}, {})",
                        self.names[a],
                        self.names[b],
                        self.names[c]
                    );
                }
            }
        }
        Ok(())
    }
}

/// Levi subsets are given by 1-based simple-root labels throughout.
#[derive(Clone, Debug)]
pub struct ParabolicSplit {
    pub levi: Vec<usize>,
    /// Positive roots outside the Levi, in root order. These index both
    /// `n_P` (via `f`) and `u_P` (via `e`).
    pub nonlevi_roots: Vec<usize>,
    pub is_levi_root: Vec<bool>,
    pub p_basis: Vec<usize>,
    pub np_basis: Vec<usize>,
    pub up_basis: Vec<usize>,
    pub levi_basis: Vec<usize>,
}

impl ParabolicSplit {
    pub fn new(basis: &ChevalleyBasis, levi: &[usize]) -> Result<Self> {
        let r = basis.rank();
        let mut levi = levi.to_vec();
        levi.sort_unstable();
        levi.dedup();
        if let Some(&bad) = levi.iter().find(|&&i| i == 0 || i > r) {
            return Err(Error::InvalidInput(format!("levi label {bad} outside 1..={r}")));
        }
        let n = basis.num_roots();
        let is_levi_root: Vec<bool> = (0..n)
            .map(|k| {
                basis
                    .root_alpha(k)
                    .iter()
                    .enumerate()
                    .all(|(i, &c)| c == 0 || levi.contains(&(i + 1)))
            })
            .collect();
        let nonlevi_roots: Vec<usize> = (0..n).filter(|&k| !is_levi_root[k]).collect();
        let np_basis: Vec<usize> = nonlevi_roots
            .iter()
            .map(|&k| basis.index(Generator::F(k)))
            .collect();
        let up_basis: Vec<usize> = nonlevi_roots
            .iter()
            .map(|&k| basis.index(Generator::E(k)))
            .collect();
        let mut levi_basis: Vec<usize> = (0..r).map(|i| basis.index(Generator::H(i))).collect();
        for k in (0..n).filter(|&k| is_levi_root[k]) {
            levi_basis.push(basis.index(Generator::E(k)));
            levi_basis.push(basis.index(Generator::F(k)));
        }
        levi_basis.sort_unstable();
        let mut p_basis: Vec<usize> = levi_basis
            .iter()
            .copied()
            .chain(np_basis.iter().copied())
            .collect();
        p_basis.sort_unstable();
        Ok(ParabolicSplit {
            levi,
            nonlevi_roots,
            is_levi_root,
            p_basis,
            np_basis,
            up_basis,
            levi_basis,
        })
    }

    /// `dim G/P`.
    pub fn dim_x(&self) -> usize {
        self.nonlevi_roots.len()
    }

    pub fn in_p(&self, basis: &ChevalleyBasis, a: usize) -> bool {
        match basis.generator(a) {
            Generator::E(k) => self.is_levi_root[k],
            _ => true,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdjointPiece {
    G,
    P,
    NP,
    UP,
}

/// `g`, `p`, `n_P` or `u_P = g/p` as a module over the lower Borel.
pub fn adjoint_b_module(
    rs: &RootSystem,
    basis: &ChevalleyBasis,
    split: &ParabolicSplit,
    which: AdjointPiece,
) -> WeightedBModule {
    let space: Vec<usize> = match which {
        AdjointPiece::G => (0..basis.dim()).collect(),
        AdjointPiece::P => split.p_basis.clone(),
        AdjointPiece::NP => split.np_basis.clone(),
        AdjointPiece::UP => split.up_basis.clone(),
    };
    let pos: HashMap<usize, usize> = space.iter().enumerate().map(|(i, &a)| (a, i)).collect();
    let n = basis.num_roots();
    let lowering = (0..n)
        .map(|g| {
            let fg = basis.index(Generator::F(g));
            space
                .iter()
                .map(|&a| {
                    // entries outside the subspace are dropped: for P and NP
                    // they never occur, for UP this is the projection along p
                    basis
                        .bracket(fg, a)
                        .iter()
                        .filter_map(|&(c, v)| pos.get(&c).map(|&i| (i as u32, v)))
                        .collect()
                })
                .collect()
        })
        .collect();
    WeightedBModule::new(
        rs,
        space.iter().map(|&a| basis.name(a).to_string()).collect(),
        space.iter().map(|&a| basis.weight(a)).collect(),
        lowering,
    )
    .expect("adjoint action is weight-compatible")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn setup(k: CartanType, n: usize) -> (RootSystem, ChevalleyBasis) {
        let rs = RootSystem::new(k, n).unwrap();
        let b = ChevalleyBasis::new(&rs).unwrap();
        (rs, b)
    }

    fn single(b: &ChevalleyBasis, g: Generator) -> LieVec {
        vec![(b.index(g), 1)]
    }

    #[test]
    fn sl2_relations() {
        let (_, b) = setup(CartanType::A, 1);
        let (e, h, f) = (0, 1, 2);
        assert_eq!(b.bracket(e, f), &vec![(h, 1)]);
        assert_eq!(b.bracket(h, e), &vec![(e, 2)]);
        assert_eq!(b.bracket(h, f), &vec![(f, -2)]);
    }

    #[test]
    fn jacobi_and_constant_bounds() {
        for (k, n) in [
            (CartanType::A, 1),
            (CartanType::A, 2),
            (CartanType::A, 3),
            (CartanType::B, 2),
            (CartanType::B, 3),
            (CartanType::C, 3),
        ] {
            let (_, b) = setup(k, n);
            b.check_jacobi().unwrap();
            assert!(b.max_structure_constant() <= 2, "{k:?}{n}");
        }
    }

    #[test]
    fn rank_four_constant_bounds() {
        for (k, n) in [(CartanType::D, 4), (CartanType::B, 4), (CartanType::C, 4)] {
            let (_, b) = setup(k, n);
            assert!(b.max_structure_constant() <= 2, "{k:?}{n}");
        }
    }

    #[test]
    fn e_f_pairs_give_coroots() {
        for (k, n) in [
            (CartanType::A, 3),
            (CartanType::B, 2),
            (CartanType::C, 3),
            (CartanType::D, 4),
        ] {
            let (rs, b) = setup(k, n);
            for g in 0..rs.num_positive_roots() {
                let got = b.bracket(b.index(Generator::E(g)), b.index(Generator::F(g)));
                assert_eq!(got, &b.coroot(g), "{k:?}{n} root {g}");
            }
        }
    }

    #[test]
    fn simple_generator_relations() {
        let (rs, b) = setup(CartanType::B, 2);
        for i in 0..2 {
            for j in 0..2 {
                let got = b.bracket(b.index(Generator::E(i)), b.index(Generator::F(j)));
                let want = if i == j {
                    vec![(b.index(Generator::H(i)), 1)]
                } else {
                    vec![]
                };
                assert_eq!(got, &want);
            }
        }
        for i in 0..2 {
            for k in 0..rs.num_positive_roots() {
                let c = rs.positive_roots()[k].omega[i] as i64;
                let e = b.index(Generator::E(k));
                let want = if c == 0 { vec![] } else { vec![(e, c)] };
                assert_eq!(b.bracket(b.index(Generator::H(i)), e), &want);
            }
        }
    }

    #[test]
    fn b2_named_root_vectors() {
        let (_, b) = setup(CartanType::B, 2);
        let f = |k| single(&b, Generator::F(k));
        let e = |k| single(&b, Generator::E(k));
        assert_eq!(b.bracket_vec(&f(0), &f(1)), f(2));
        assert_eq!(b.bracket_vec(&e(1), &e(0)), e(2));
        // the f_4 = [f_3, f_2] vector is -2 times the normalized basis vector
        assert_eq!(b.bracket_vec(&f(2), &f(1)), vec![(b.index(Generator::F(3)), -2)]);
        assert_eq!(b.bracket_vec(&e(1), &e(2)), vec![(b.index(Generator::E(3)), -2)]);
        assert!(b.bracket_vec(&e(1), &e(3)).is_empty());
        assert!(b.bracket_vec(&f(1), &f(3)).is_empty());
        assert_eq!(b.name(b.index(Generator::F(3))), "f122");
    }

    fn ad_power(b: &ChevalleyBasis, x: &LieVec, k: usize, y: &LieVec) -> LieVec {
        let mut v = y.clone();
        for _ in 0..k {
            v = b.bracket_vec(x, &v);
        }
        v
    }

    #[test]
    fn b2_serre_relations() {
        let (_, b) = setup(CartanType::B, 2);
        for side in [Generator::E as fn(usize) -> Generator, Generator::F] {
            let x1 = single(&b, side(0));
            let x2 = single(&b, side(1));
            // ad(x2)^3 x1 = 0 and ad(x1)^2 x2 = 0, nonzero one step earlier
            assert!(ad_power(&b, &x2, 3, &x1).is_empty());
            assert!(!ad_power(&b, &x2, 2, &x1).is_empty());
            assert!(ad_power(&b, &x1, 2, &x2).is_empty());
            assert!(!ad_power(&b, &x1, 1, &x2).is_empty());
        }
    }

    #[test]
    fn a3_f123_two_ways() {
        let (_, b) = setup(CartanType::A, 3);
        let f = |k| single(&b, Generator::F(k));
        let left = b.bracket_vec(&f(0), &b.bracket_vec(&f(1), &f(2)));
        let right = b.bracket_vec(&b.bracket_vec(&f(0), &f(1)), &f(2));
        assert_eq!(left, right);
        assert_eq!(left, f(5));
        assert_eq!(b.bracket_vec(&f(0), &f(1)), f(3));
        assert_eq!(b.bracket_vec(&e_of(&b, 1), &e_of(&b, 0)), e_of(&b, 3));
    }

    fn e_of(b: &ChevalleyBasis, k: usize) -> LieVec {
        single(b, Generator::E(k))
    }

    #[test]
    fn split_dimensions() {
        let (rs, b) = setup(CartanType::A, 3);
        let s = ParabolicSplit::new(&b, &[1, 3]).unwrap();
        assert_eq!(s.np_basis.len(), 4);
        assert_eq!(s.p_basis.len(), 11);
        assert_eq!(b.dim(), 15);
        assert_eq!(s.p_basis.len() + s.up_basis.len(), b.dim());
        let full = ParabolicSplit::new(&b, &[1, 2, 3]).unwrap();
        assert_eq!(full.dim_x(), 0);
        let borel = ParabolicSplit::new(&b, &[]).unwrap();
        assert_eq!(borel.dim_x(), rs.num_positive_roots());
        assert!(ParabolicSplit::new(&b, &[4]).is_err());
    }

    #[test]
    fn nilradical_weights() {
        let (rs, b) = setup(CartanType::A, 3);
        let s = ParabolicSplit::new(&b, &[1, 3]).unwrap();
        let m = adjoint_b_module(&rs, &b, &s, AdjointPiece::NP);
        let alphas: Vec<Vec<i32>> = m
            .weights()
            .iter()
            .map(|&w| rs.omega_to_alpha_integral(w).unwrap())
            .collect();
        assert_eq!(
            alphas,
            vec![vec![0, -1, 0], vec![-1, -1, 0], vec![0, -1, -1], vec![-1, -1, -1]]
        );
        let (rs, b) = setup(CartanType::B, 2);
        let s = ParabolicSplit::new(&b, &[]).unwrap();
        let m = adjoint_b_module(&rs, &b, &s, AdjointPiece::NP);
        let alphas: Vec<Vec<i32>> = m
            .weights()
            .iter()
            .map(|&w| rs.omega_to_alpha_integral(w).unwrap())
            .collect();
        assert_eq!(alphas, vec![vec![-1, 0], vec![0, -1], vec![-1, -1], vec![-1, -2]]);
    }

    #[test]
    fn adjoint_modules_are_modules() {
        for (k, n, levi) in [
            (CartanType::A, 3, vec![1, 3]),
            (CartanType::B, 2, vec![]),
            (CartanType::C, 3, vec![2]),
        ] {
            let (rs, b) = setup(k, n);
            let s = ParabolicSplit::new(&b, &levi).unwrap();
            for piece in [
                AdjointPiece::G,
                AdjointPiece::P,
                AdjointPiece::NP,
                AdjointPiece::UP,
            ] {
                let m = adjoint_b_module(&rs, &b, &s, piece);
                m.check_module(&b).unwrap();
            }
        }
    }

    #[test]
    fn g_splits_as_p_plus_up_by_weight() {
        let (rs, b) = setup(CartanType::A, 3);
        let s = ParabolicSplit::new(&b, &[2]).unwrap();
        let g = adjoint_b_module(&rs, &b, &s, AdjointPiece::G);
        let p = adjoint_b_module(&rs, &b, &s, AdjointPiece::P);
        let u = adjoint_b_module(&rs, &b, &s, AdjointPiece::UP);
        for mu in g.weight_list() {
            assert_eq!(
                g.weight_space(mu).len(),
                p.weight_space(mu).len() + u.weight_space(mu).len()
            );
        }
    }
}
