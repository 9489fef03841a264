//! BGG complexes computing `H^*(G/B, G ×_B E)` isotypic component by component.
//!
//! For dominant `ν`, the `L_ν`-multiplicity in `H^i` is the `i`-th cohomology
//! of `⊕_{ℓ(w)=i} E[w·ν]`. The component `E[w·ν] -> E[w'·ν]` along a Bruhat
//! cover is `x ↦ c θ x`, where `θ ∈ U(n^-)` maps the highest weight vector of
//! the Verma module `M(w'·ν)` to a singular vector in `M(w·ν)` and `c` is a
//! scalar making every Bruhat square anticommute. `θ` acts on `E` through the
//! left action of the `f_β`.

pub mod pbw;

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

pub use pbw::{IntPoly, Monomial, PbwAlgebra, UMinusElement};

use crate::chevalley::ChevalleyBasis;
use crate::error::{ensure_consistent, Error, Result};
use crate::linalg::{IntMatrix, RatMatrix};
use crate::pmodules::{SparseCol, WeightedBModule};
use crate::rootsys::{RootSystem, Weight};

/// An edge of the Bruhat graph with its operator.
#[derive(Clone, Debug)]
pub struct BggEdge {
    pub source: usize,
    pub target: usize,
    pub root: usize,
    /// Normalized singular vector (leading coefficient 1).
    pub theta: UMinusElement,
    /// Sign/scalar fixing `c` in `c θ`.
    pub scalar: BigRational,
    /// Integer operator actually applied: a positive multiple of `c θ`,
    /// the same multiple for all edges leaving one length.
    pub operator: IntPoly,
}

/// All edge operators for one dominant weight.
#[derive(Debug)]
pub struct BggData {
    pub nu: Weight,
    pub edges: Vec<BggEdge>,
    /// Edge indices by source length.
    pub by_level: Vec<Vec<usize>>,
}

pub struct BggEngine<'a> {
    rs: &'a RootSystem,
    pbw: PbwAlgebra,
    cache: Mutex<HashMap<Weight, Arc<OnceLock<std::result::Result<Arc<BggData>, String>>>>>,
}

impl<'a> BggEngine<'a> {
    pub fn new(rs: &'a RootSystem, basis: &ChevalleyBasis) -> Self {
        BggEngine {
            rs,
            pbw: PbwAlgebra::new(rs, basis),
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        self.rs
    }

    pub fn algebra(&self) -> &PbwAlgebra {
        &self.pbw
    }

    /// `θ` for the cover `w -> w'`: singular vector of weight `w'·ν - w·ν`
    /// in the Verma module of highest weight `w·ν`.
    pub fn singular_vector(&self, w: usize, w2: usize, nu: Weight) -> Result<UMinusElement> {
        let rs = self.rs;
        ensure_consistent!(
            rs.element(w2).length == rs.element(w).length + 1,
            "not a Bruhat cover"
        );
        let lambda = rs.dot_action(w, nu);
        let target = rs.dot_action(w2, nu);
        let diff = rs
            .omega_to_alpha_integral(lambda - target)
            .ok_or_else(|| Error::Consistency("cover weight not in root lattice".into()))?;
        ensure_consistent!(diff.iter().all(|&x| x >= 0), "cover weight not negative");
        let monos = self.pbw.monomials_of_weight(&diff);
        let mut rows: BTreeMap<(usize, Monomial), Vec<BigRational>> = BTreeMap::new();
        for (c, m) in monos.iter().enumerate() {
            for i in 0..rs.rank() {
                for (t, x) in self.pbw.raise(i, m, lambda) {
                    rows.entry((i, t))
                        .or_insert_with(|| vec![BigRational::zero(); monos.len()])[c] =
                        BigRational::from_integer(x);
                }
            }
        }
        let mut mat = RatMatrix::zeros(rows.len(), monos.len());
        mat.data = rows.into_values().collect();
        let ns = mat.nullspace();
        ensure_consistent!(
            ns.len() == 1,
            "singular vector space of dimension {} for cover {:?} -> {:?}, nu = {nu}",
            ns.len(),
            rs.element(w).word,
            rs.element(w2).word
        );
        let v = &ns[0];
        // monos are sorted descending, so the first nonzero entry leads
        let lead = v.iter().find(|x| !x.is_zero()).unwrap().clone();
        let coefficients = monos
            .iter()
            .zip(v)
            .filter(|(_, x)| !x.is_zero())
            .map(|(m, x)| (m.clone(), x / &lead))
            .collect();
        Ok(UMinusElement {
            weight: target - lambda,
            coefficients,
        })
    }

    /// Edge operators for `ν`, memoized.
    pub fn data(&self, nu: Weight) -> Result<Arc<BggData>> {
        if !nu.is_dominant() {
            return Err(Error::NotDominant(nu.to_string()));
        }
        let slot = self.cache.lock().unwrap().entry(nu).or_default().clone();
        slot.get_or_init(|| self.build_data(nu).map(Arc::new).map_err(|e| e.to_string()))
            .clone()
            .map_err(Error::Consistency)
    }

    fn build_data(&self, nu: Weight) -> Result<BggData> {
        let rs = self.rs;
        if !nu.is_dominant() {
            return Err(Error::NotDominant(nu.to_string()));
        }
        let levels = rs.weyl_elements_by_length();
        let mut edges: Vec<BggEdge> = Vec::new();
        let mut by_level: Vec<Vec<usize>> = vec![Vec::new(); levels.len()];
        let mut edge_of: HashMap<(usize, usize), usize> = HashMap::new();
        for (l, ws) in levels.iter().enumerate() {
            for &w in ws {
                for cover in rs.covers(w) {
                    let theta = self.singular_vector(w, cover.target, nu)?;
                    let operator = theta.to_int();
                    edge_of.insert((w, cover.target), edges.len());
                    by_level[l].push(edges.len());
                    edges.push(BggEdge {
                        source: w,
                        target: cover.target,
                        root: cover.root,
                        theta,
                        scalar: BigRational::zero(),
                        operator,
                    });
                }
            }
        }
        for &e in &by_level[0] {
            edges[e].scalar = BigRational::one();
        }
        // squares (w1, w4) with middles, grouped by the length of w4
        let mut squares: BTreeMap<(usize, usize), Vec<usize>> = BTreeMap::new();
        for ws in levels {
            for &w1 in ws {
                for c1 in rs.covers(w1) {
                    for c2 in rs.covers(c1.target) {
                        squares.entry((w1, c2.target)).or_default().push(c1.target);
                    }
                }
            }
        }
        let mut ratio: HashMap<(usize, usize, usize), BigRational> = HashMap::new();
        for (&(w1, w4), mids) in &squares {
            ensure_consistent!(mids.len() == 2, "Bruhat interval of length 2 without 4 elements");
            let (w2, w3) = (mids[0], mids[1]);
            let p = self.pbw.mul(
                &edges[edge_of[&(w2, w4)]].operator,
                &edges[edge_of[&(w1, w2)]].operator,
            );
            let q = self.pbw.mul(
                &edges[edge_of[&(w3, w4)]].operator,
                &edges[edge_of[&(w1, w3)]].operator,
            );
            let r = pbw::proportionality(&p, &q)
                .ok_or_else(|| Error::Consistency(format!("square paths not proportional at nu = {nu}")))?;
            ratio.insert((w1, w2, w4), r.clone());
            ratio.insert((w1, w3, w4), r.recip());
        }
        let mut squares_into: HashMap<usize, Vec<(usize, usize, usize)>> = HashMap::new();
        for (&(w1, w4), mids) in &squares {
            squares_into.entry(w4).or_default().push((w1, mids[0], mids[1]));
        }
        // solve level by level: c24 c12 r + c34 c13 = 0
        for ws in levels.iter().skip(2) {
            for &w4 in ws {
                let incoming: Vec<usize> = rs.weyl_elements_by_length()[rs.element(w4).length - 1]
                    .iter()
                    .copied()
                    .filter(|&w| edge_of.contains_key(&(w, w4)))
                    .collect();
                let mut known: HashMap<usize, BigRational> = HashMap::new();
                for &start in &incoming {
                    if known.contains_key(&start) {
                        continue;
                    }
                    known.insert(start, BigRational::one());
                    let mut stack = vec![start];
                    while let Some(w2) = stack.pop() {
                        let c24 = known[&w2].clone();
                        for &(w1, m0, m1) in &squares_into[&w4] {
                            let w3 = match (m0 == w2, m1 == w2) {
                                (true, _) => m1,
                                (_, true) => m0,
                                _ => continue,
                            };
                            if known.contains_key(&w3) {
                                continue;
                            }
                            let c12 = &edges[edge_of[&(w1, w2)]].scalar;
                            let c13 = &edges[edge_of[&(w1, w3)]].scalar;
                            let r = &ratio[&(w1, w2, w4)];
                            let c34 = -(&c24 * c12 * r) / c13;
                            known.insert(w3, c34);
                            stack.push(w3);
                        }
                    }
                }
                for (w2, c) in known {
                    edges[edge_of[&(w2, w4)]].scalar = c;
                }
            }
        }
        for (&(w1, w4), mids) in &squares {
            let (w2, w3) = (mids[0], mids[1]);
            let lhs =
                &edges[edge_of[&(w2, w4)]].scalar * &edges[edge_of[&(w1, w2)]].scalar * &ratio[&(w1, w2, w4)];
            let rhs = &edges[edge_of[&(w3, w4)]].scalar * &edges[edge_of[&(w1, w3)]].scalar;
            ensure_consistent!(
                lhs + rhs == BigRational::zero(),
                "Bruhat square does not anticommute"
            );
        }
        // integral operators: one common positive multiple per level
        for level in &by_level {
            let denom = level.iter().fold(BigInt::one(), |acc, &e| {
                num_integer::Integer::lcm(&acc, edges[e].scalar.denom())
            });
            for &e in level {
                let c = (&edges[e].scalar * BigRational::from_integer(denom.clone())).to_integer();
                let op: IntPoly = edges[e]
                    .operator
                    .iter()
                    .map(|(m, x)| (m.clone(), x * &c))
                    .collect();
                edges[e].operator = op;
            }
        }
        Ok(BggData { nu, edges, by_level })
    }

    /// BGG complex of `E` at `ν`, restricted to lengths in `lo..=hi`.
    pub fn assemble(&self, e: &WeightedBModule, nu: Weight, lo: usize, hi: usize) -> Result<BggComplex> {
        let rs = self.rs;
        let levels = rs.weyl_elements_by_length();
        let hi = hi.min(levels.len() - 1);
        let mut terms: Vec<Vec<(usize, Vec<usize>)>> = vec![Vec::new(); levels.len()];
        let mut offsets: Vec<HashMap<usize, usize>> = vec![HashMap::new(); levels.len()];
        let mut dims = vec![0usize; levels.len()];
        for l in lo..=hi {
            for &w in &levels[l] {
                let basis = e.weight_space(rs.dot_action(w, nu)).to_vec();
                offsets[l].insert(w, dims[l]);
                dims[l] += basis.len();
                terms[l].push((w, basis));
            }
        }
        let any_nonempty = (lo..=hi).any(|l| dims[l] > 0);
        let data = if any_nonempty { Some(self.data(nu)?) } else { None };
        let mut differentials: Vec<Option<IntMatrix>> = vec![None; levels.len()];
        if let Some(data) = &data {
            for l in lo + 1..=hi {
                // rows: source basis vectors of level l-1
                let mut rows: Vec<Vec<(u32, i64)>> = vec![Vec::new(); dims[l - 1]];
                for &ei in &data.by_level[l - 1] {
                    let edge = &data.edges[ei];
                    let src = &terms[l - 1].iter().find(|t| t.0 == edge.source).unwrap().1;
                    let tgt = &terms[l].iter().find(|t| t.0 == edge.target).unwrap().1;
                    if src.is_empty() || tgt.is_empty() {
                        continue;
                    }
                    let (so, to) = (offsets[l - 1][&edge.source], offsets[l][&edge.target]);
                    let images = apply_poly(e, &self.pbw, &edge.operator, src)?;
                    for (k, img) in images.into_iter().enumerate() {
                        for (g, x) in img {
                            rows[so + k].push(((to + e.position(g as usize)) as u32, x));
                        }
                    }
                }
                for r in rows.iter_mut() {
                    r.sort_unstable_by_key(|t| t.0);
                }
                let t = IntMatrix {
                    nrows: dims[l - 1],
                    ncols: dims[l],
                    rows,
                };
                differentials[l] = Some(transpose(&t));
            }
        }
        let cx = BggComplex {
            nu,
            lo,
            hi,
            terms,
            dims,
            differentials,
        };
        cx.check_square_zero()?;
        Ok(cx)
    }

    /// `p · x` for each basis vector `x` in `src`, as sparse columns of `E`.
    pub fn apply(&self, e: &WeightedBModule, p: &IntPoly, src: &[usize]) -> Result<Vec<SparseCol>> {
        apply_poly(e, &self.pbw, p, src)
    }

    /// Full complex over all lengths.
    pub fn assemble_full(&self, e: &WeightedBModule, nu: Weight) -> Result<BggComplex> {
        let top = self.rs.weyl_elements_by_length().len() - 1;
        self.assemble(e, nu, 0, top)
    }
}

fn transpose(m: &IntMatrix) -> IntMatrix {
    let mut out = IntMatrix::zeros(m.ncols, m.nrows);
    for (r, row) in m.rows.iter().enumerate() {
        for &(c, x) in row {
            out.rows[c as usize].push((r as u32, x));
        }
    }
    out
}

/// `p · x` for each basis vector `x` in `src` (all of one weight).
fn apply_poly(e: &WeightedBModule, alg: &PbwAlgebra, p: &IntPoly, src: &[usize]) -> Result<Vec<SparseCol>> {
    let n = alg.num_roots();
    // application order of a monomial: highest root index first
    let seqs: Vec<(Vec<usize>, i64)> = p
        .iter()
        .map(|(m, c)| {
            let mut s = Vec::new();
            for k in (0..n).rev() {
                s.extend(std::iter::repeat_n(k, m[k] as usize));
            }
            let c = c
                .to_i64()
                .ok_or_else(|| Error::Consistency("operator coefficient overflows i64".into()));
            c.map(|c| (s, c))
        })
        .collect::<Result<_>>()?;
    let mut acc: Vec<BTreeMap<u32, i128>> = vec![BTreeMap::new(); src.len()];
    let start: Vec<SparseCol> = src.iter().map(|&b| vec![(b as u32, 1)]).collect();
    let mut order: Vec<usize> = (0..seqs.len()).collect();
    order.sort_by(|&a, &b| seqs[a].0.cmp(&seqs[b].0));
    walk(e, &seqs, &order, 0, &start, &mut acc);
    acc.into_iter()
        .map(|m| {
            m.into_iter()
                .filter(|t| t.1 != 0)
                .map(|(r, x)| {
                    i64::try_from(x)
                        .map(|x| (r, x))
                        .map_err(|_| Error::Consistency("differential entry overflows i64".into()))
                })
                .collect()
        })
        .collect()
}

/// Depth-first walk over the trie of application sequences sharing prefixes.
fn walk(
    e: &WeightedBModule,
    seqs: &[(Vec<usize>, i64)],
    group: &[usize],
    depth: usize,
    cur: &[SparseCol],
    acc: &mut [BTreeMap<u32, i128>],
) {
    let mut i = 0;
    while i < group.len() {
        let s = &seqs[group[i]].0;
        if s.len() == depth {
            let c = seqs[group[i]].1 as i128;
            for (k, v) in cur.iter().enumerate() {
                for &(r, x) in v {
                    *acc[k].entry(r).or_default() += c * x as i128;
                }
            }
            i += 1;
            continue;
        }
        let g = s[depth];
        let mut j = i;
        while j < group.len() && seqs[group[j]].0.len() > depth && seqs[group[j]].0[depth] == g {
            j += 1;
        }
        let next: Vec<SparseCol> = cur.iter().map(|v| e.lower_vec(g, v)).collect();
        if next.iter().any(|v| !v.is_empty()) {
            walk(e, seqs, &group[i..j], depth + 1, &next, acc);
        }
        i = j;
    }
}

/// Terms and differentials of a BGG complex over a range of lengths.
#[derive(Clone, Debug)]
pub struct BggComplex {
    pub nu: Weight,
    pub lo: usize,
    pub hi: usize,
    /// Per length: `(w, basis of E[w·ν])`.
    pub terms: Vec<Vec<(usize, Vec<usize>)>>,
    pub dims: Vec<usize>,
    /// `differentials[l]` maps length `l-1` to length `l`
    /// (rows index the target, columns the source).
    pub differentials: Vec<Option<IntMatrix>>,
}

impl BggComplex {
    fn check_square_zero(&self) -> Result<()> {
        for l in self.lo + 1..self.hi {
            if let (Some(a), Some(b)) = (&self.differentials[l], &self.differentials[l + 1]) {
                ensure_consistent!(b.mul(a).is_zero(), "d^2 != 0 at length {l}, nu = {}", self.nu);
            }
        }
        Ok(())
    }

    fn rank(&self, l: usize) -> usize {
        match self.differentials.get(l).and_then(|d| d.as_ref()) {
            Some(d) if self.dims[l] > 0 && self.dims[l - 1] > 0 => d.rank(),
            _ => 0,
        }
    }

    /// `dim H^l`, valid for `lo < l < hi` and at the ends of the full range.
    pub fn cohomology_at(&self, l: usize) -> usize {
        let incoming = if l > 0 { self.rank(l) } else { 0 };
        let outgoing = if l + 1 < self.dims.len() {
            self.rank(l + 1)
        } else {
            0
        };
        self.dims[l] - incoming - outgoing
    }

    /// Euler characteristic of the terms in range.
    pub fn euler_characteristic(&self) -> i64 {
        (self.lo..=self.hi)
            .map(|l| {
                if l % 2 == 0 {
                    self.dims[l] as i64
                } else {
                    -(self.dims[l] as i64)
                }
            })
            .sum()
    }
}

/// Multiplicities of `L_ν` by cohomological degree.
pub fn complex_cohomology(cx: &BggComplex) -> Vec<usize> {
    assert_eq!(cx.lo, 0, "complex_cohomology needs the full range");
    (0..=cx.hi).map(|l| cx.cohomology_at(l)).collect()
}

/// Dominant `ν` whose complex can be nonzero: the dot-dominant
/// representatives of all weights of `E`.
pub fn candidate_dominants(rs: &RootSystem, e: &WeightedBModule) -> BTreeSet<Weight> {
    e.weight_list()
        .into_iter()
        .filter_map(|mu| rs.dominant_dot_representative(mu).map(|(_, nu)| nu))
        .collect()
}

/// JSON layout of `--dump-differentials`.
#[derive(Debug, Serialize)]
pub struct DifferentialDump {
    pub nu: Weight,
    pub edges: Vec<EdgeDump>,
    pub terms: Vec<Vec<TermDump>>,
    pub differentials: Vec<Option<MatrixDump>>,
}

#[derive(Debug, Serialize)]
pub struct EdgeDump {
    pub source: Vec<usize>,
    pub target: Vec<usize>,
    pub theta: String,
    pub scalar: String,
}

#[derive(Debug, Serialize)]
pub struct TermDump {
    pub word: Vec<usize>,
    pub weight: Weight,
    pub basis: Vec<String>,
}

/// Sparse matrix as `(row, column, value)` triples.
#[derive(Debug, Serialize)]
pub struct MatrixDump {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<(usize, usize, i64)>,
}

impl BggEngine<'_> {
    pub fn dump(&self, e: &WeightedBModule, cx: &BggComplex) -> Result<DifferentialDump> {
        let rs = self.rs;
        let data = self.data(cx.nu)?;
        let word = |w: usize| rs.element(w).word.iter().map(|i| i + 1).collect::<Vec<_>>();
        Ok(DifferentialDump {
            nu: cx.nu,
            edges: data
                .edges
                .iter()
                .map(|ed| EdgeDump {
                    source: word(ed.source),
                    target: word(ed.target),
                    theta: ed.theta.format(&self.pbw),
                    scalar: ed.scalar.to_string(),
                })
                .collect(),
            terms: cx
                .terms
                .iter()
                .map(|lv| {
                    lv.iter()
                        .map(|(w, b)| TermDump {
                            word: word(*w),
                            weight: rs.dot_action(*w, cx.nu),
                            basis: b.iter().map(|&i| e.labels()[i].clone()).collect(),
                        })
                        .collect()
                })
                .collect(),
            differentials: cx
                .differentials
                .iter()
                .map(|d| {
                    d.as_ref().map(|m| MatrixDump {
                        rows: m.nrows,
                        cols: m.ncols,
                        entries: m
                            .rows
                            .iter()
                            .enumerate()
                            .flat_map(|(r, row)| row.iter().map(move |&(c, x)| (r, c as usize, x)))
                            .collect(),
                    })
                })
                .collect(),
        })
    }
}

/// Sign of a rational, as used in reports.
pub fn sign_of(x: &BigRational) -> i32 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chevalley::{adjoint_b_module, AdjointPiece, ParabolicSplit};
    use crate::pmodules::{graded_piece, GradedPieceSpec};
    use crate::rootsys::CartanType;

    fn setup(k: CartanType, n: usize) -> (RootSystem, ChevalleyBasis) {
        let rs = RootSystem::new(k, n).unwrap();
        let b = ChevalleyBasis::new(&rs).unwrap();
        (rs, b)
    }

    fn w(rs: &RootSystem, word: &[usize]) -> usize {
        rs.element_from_word(word)
    }

    #[test]
    fn simple_covers_give_simple_roots() {
        for (k, n) in [
            (CartanType::A, 1),
            (CartanType::A, 3),
            (CartanType::B, 2),
            (CartanType::C, 3),
        ] {
            let (rs, b) = setup(k, n);
            let eng = BggEngine::new(&rs, &b);
            for i in 0..n {
                let th = eng.singular_vector(0, w(&rs, &[i]), Weight::zero(n)).unwrap();
                let mut fi = IntPoly::new();
                fi.insert(eng.algebra().generator(rs.simple_root_index(i)), BigInt::one());
                assert_eq!(th.to_int(), fi);
            }
        }
    }

    #[test]
    fn b2_edge_operators() {
        let (rs, b) = setup(CartanType::B, 2);
        let eng = BggEngine::new(&rs, &b);
        let alg = eng.algebra();
        let nu = Weight::zero(2);
        let f1 = alg.generator(0);
        let f2 = alg.generator(1);
        let word = |ws: &[&Monomial]| -> IntPoly {
            let idx: Vec<usize> = ws
                .iter()
                .map(|m| m.iter().position(|&x| x == 1).unwrap())
                .collect();
            alg.from_word(&idx)
        };
        let s1 = w(&rs, &[0]);
        let s21 = w(&rs, &[1, 0]);
        let s2 = w(&rs, &[1]);
        let s12 = w(&rs, &[0, 1]);
        // f2^3 along s1 -> s2 s1
        let th = eng.singular_vector(s1, s21, nu).unwrap();
        assert!(pbw::proportionality(&th.to_int(), &word(&[&f2, &f2, &f2])).is_some());
        // f1^2 along s2 -> s1 s2
        let th = eng.singular_vector(s2, s12, nu).unwrap();
        assert!(pbw::proportionality(&th.to_int(), &word(&[&f1, &f1])).is_some());
        // cross edge u1 = 2 f1 f2 - f2 f1
        let th = eng.singular_vector(s1, s12, nu).unwrap();
        let mut u1 = word(&[&f1, &f2]);
        for c in u1.values_mut() {
            *c *= 2;
        }
        for (m, c) in word(&[&f2, &f1]) {
            *u1.entry(m).or_insert_with(BigInt::zero) -= c;
        }
        u1.retain(|_, c| !c.is_zero());
        assert!(pbw::proportionality(&th.to_int(), &u1).is_some());
        // u2 = 3 f2^2 f1 - 3 f2 f1 f2 + f1 f2^2
        let th = eng.singular_vector(s2, s21, nu).unwrap();
        let mut u2 = IntPoly::new();
        for (ws, c) in [(vec![1, 1, 0], 3), (vec![1, 0, 1], -3), (vec![0, 1, 1], 1)] {
            for (m, x) in alg.from_word(&ws) {
                *u2.entry(m).or_insert_with(BigInt::zero) += x * c;
            }
        }
        u2.retain(|_, c| !c.is_zero());
        assert!(pbw::proportionality(&th.to_int(), &u2).is_some());
        // leading normalization
        assert!(th.leading().unwrap().1.is_one());
    }

    #[test]
    fn b2_level_two_cross_operators() {
        let (rs, b) = setup(CartanType::B, 2);
        let eng = BggEngine::new(&rs, &b);
        let alg = eng.algebra();
        let nu = Weight::zero(2);
        let comb = |terms: &[(Vec<usize>, i64)]| -> IntPoly {
            let mut p = IntPoly::new();
            for (ws, c) in terms {
                for (m, x) in alg.from_word(ws) {
                    *p.entry(m).or_insert_with(BigInt::zero) += x * c;
                }
            }
            p.retain(|_, c| !c.is_zero());
            p
        };
        // v1 = f1 f2 - 2 f2 f1 from s2 s1 to s2 s1 s2
        let th = eng
            .singular_vector(w(&rs, &[1, 0]), w(&rs, &[1, 0, 1]), nu)
            .unwrap();
        let v1 = comb(&[(vec![0, 1], 1), (vec![1, 0], -2)]);
        assert!(pbw::proportionality(&th.to_int(), &v1).is_some());
        // v2 = f2^2 f1 - 3 f2 f1 f2 + 3 f1 f2^2 from s1 s2 to s1 s2 s1
        let th = eng
            .singular_vector(w(&rs, &[0, 1]), w(&rs, &[0, 1, 0]), nu)
            .unwrap();
        let v2 = comb(&[(vec![1, 1, 0], 1), (vec![1, 0, 1], -3), (vec![0, 1, 1], 3)]);
        assert!(pbw::proportionality(&th.to_int(), &v2).is_some());
    }

    #[test]
    fn trivial_module_complex() {
        let (rs, b) = setup(CartanType::A, 2);
        let eng = BggEngine::new(&rs, &b);
        let e = WeightedBModule::trivial(&rs);
        let cx = eng.assemble_full(&e, Weight::zero(2)).unwrap();
        assert_eq!(cx.dims, vec![1, 0, 0, 0]);
        assert_eq!(complex_cohomology(&cx), vec![1, 0, 0, 0]);
        assert_eq!(
            candidate_dominants(&rs, &e).into_iter().collect::<Vec<_>>(),
            vec![Weight::zero(2)]
        );
    }

    #[test]
    fn singular_vectors_unique_on_test_grids() {
        for (k, n) in [(CartanType::A, 2), (CartanType::B, 2), (CartanType::A, 3)] {
            let (rs, b) = setup(k, n);
            let eng = BggEngine::new(&rs, &b);
            let rho = rs.rho();
            let a12 = rs.simple_root(0) + rs.simple_root(1);
            for nu in [Weight::zero(n), rho, a12] {
                if !nu.is_dominant() {
                    continue;
                }
                let data = eng.data(nu).unwrap();
                let covers: usize = (0..rs.weyl_order()).map(|x| rs.covers(x).len()).sum();
                assert_eq!(data.edges.len(), covers);
            }
        }
    }

    #[test]
    fn b2_sym2_at_alpha12() {
        let (rs, b) = setup(CartanType::B, 2);
        let eng = BggEngine::new(&rs, &b);
        let split = ParabolicSplit::new(&b, &[]).unwrap();
        let n = adjoint_b_module(&rs, &b, &split, AdjointPiece::NP);
        let s2 = n.sym(2);
        let a12 = rs.simple_root(0) + rs.simple_root(1);
        let cands = candidate_dominants(&rs, &s2);
        assert_eq!(cands.into_iter().collect::<Vec<_>>(), vec![Weight::zero(2), a12]);
        let cx = eng.assemble_full(&s2, a12).unwrap();
        assert_eq!(complex_cohomology(&cx), vec![0, 0, 1, 0, 0]);
        // at nu = 0: span{f2 f4, f1 f3} -> span{f4^2}
        let cx = eng.assemble_full(&s2, Weight::zero(2)).unwrap();
        assert_eq!(cx.dims, vec![0, 0, 2, 1, 0]);
        assert_eq!(cx.differentials[3].as_ref().unwrap().rank(), 1);
        assert_eq!(complex_cohomology(&cx), vec![0, 0, 1, 0, 0]);
    }

    #[test]
    fn grassmannian_piece_at_zero() {
        let (rs, b) = setup(CartanType::A, 3);
        let eng = BggEngine::new(&rs, &b);
        let e = graded_piece(&rs, &b, &GradedPieceSpec::new(&[1, 3], 3, -4)).unwrap();
        let cx = eng.assemble_full(&e, Weight::zero(3)).unwrap();
        assert_eq!(cx.dims[0], 0);
        let d1 = cx.differentials[1].as_ref().unwrap();
        assert!(d1.is_zero());
        let h = complex_cohomology(&cx);
        assert_eq!(h[1], 2);
        assert_eq!(
            cx.euler_characteristic(),
            h.iter()
                .enumerate()
                .map(|(i, &x)| if i % 2 == 0 { x as i64 } else { -(x as i64) })
                .sum::<i64>()
        );
    }

    #[test]
    fn a3_term_counts_follow_length_census() {
        let (rs, _) = setup(CartanType::A, 3);
        let counts: Vec<usize> = rs.weyl_elements_by_length().iter().map(|v| v.len()).collect();
        assert_eq!(counts, vec![1, 3, 5, 6, 5, 3, 1]);
    }

    #[test]
    fn partial_range_matches_full() {
        let (rs, b) = setup(CartanType::B, 2);
        let eng = BggEngine::new(&rs, &b);
        let e = graded_piece(&rs, &b, &GradedPieceSpec::new(&[], 4, -6)).unwrap();
        for nu in candidate_dominants(&rs, &e) {
            let full = complex_cohomology(&eng.assemble_full(&e, nu).unwrap());
            for l in 0..full.len() {
                let lo = l.saturating_sub(1);
                let cx = eng.assemble(&e, nu, lo, l + 1).unwrap();
                assert_eq!(cx.cohomology_at(l), full[l], "nu {nu} l {l}");
            }
        }
    }

    #[test]
    fn integer_operators_square_to_zero() {
        let (rs, b) = setup(CartanType::A, 3);
        let eng = BggEngine::new(&rs, &b);
        let data = eng.data(Weight::zero(3)).unwrap();
        let alg = eng.algebra();
        // every square of integer operators anticommutes exactly
        for w1 in 0..rs.weyl_order() {
            for c1 in rs.covers(w1) {
                for c2 in rs.covers(c1.target) {
                    let w4 = c2.target;
                    let mut sum = IntPoly::new();
                    for m in rs.covers(w1) {
                        if let Some(e2) = data.edges.iter().find(|e| e.source == m.target && e.target == w4) {
                            let e1 = data
                                .edges
                                .iter()
                                .find(|e| e.source == w1 && e.target == m.target)
                                .unwrap();
                            for (t, c) in alg.mul(&e2.operator, &e1.operator) {
                                *sum.entry(t).or_insert_with(BigInt::zero) += c;
                            }
                        }
                    }
                    sum.retain(|_, c| !c.is_zero());
                    assert!(sum.is_empty());
                }
            }
        }
    }
}
