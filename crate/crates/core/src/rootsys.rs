//! Root systems, weights and the finite Weyl group.
//!
//! Weights live in fundamental-weight coordinates. Roots are stored in both
//! simple-root and fundamental-weight coordinates. The Cartan matrix follows
//! Bourbaki: `a_ij = <alpha_j, alpha_i^vee>`, so the fundamental-weight
//! coordinates of `alpha_i` are column `i` of the matrix.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Index, IndexMut, Mul, Neg, Sub, SubAssign};

use num_rational::Rational64;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub const MAX_RANK: usize = 8;

/// Integral weight in fundamental-weight coordinates.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight {
    len: u8,
    c: [i32; MAX_RANK],
}

impl Weight {
    pub fn zero(rank: usize) -> Self {
        assert!(rank <= MAX_RANK);
        Weight {
            len: rank as u8,
            c: [0; MAX_RANK],
        }
    }

    pub fn from_slice(coords: &[i32]) -> Self {
        let mut w = Weight::zero(coords.len());
        w.c[..coords.len()].copy_from_slice(coords);
        w
    }

    pub fn rank(&self) -> usize {
        self.len as usize
    }

    pub fn coords(&self) -> &[i32] {
        &self.c[..self.len as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.coords().iter().all(|&x| x == 0)
    }

    pub fn is_dominant(&self) -> bool {
        self.coords().iter().all(|&x| x >= 0)
    }
}

impl Index<usize> for Weight {
    type Output = i32;
    fn index(&self, i: usize) -> &i32 {
        &self.coords()[i]
    }
}

impl IndexMut<usize> for Weight {
    fn index_mut(&mut self, i: usize) -> &mut i32 {
        let n = self.len as usize;
        &mut self.c[..n][i]
    }
}

impl Add for Weight {
    type Output = Weight;
    fn add(mut self, o: Weight) -> Weight {
        self += o;
        self
    }
}

impl AddAssign for Weight {
    fn add_assign(&mut self, o: Weight) {
        debug_assert_eq!(self.len, o.len);
        for i in 0..self.len as usize {
            self.c[i] += o.c[i];
        }
    }
}

impl Sub for Weight {
    type Output = Weight;
    fn sub(mut self, o: Weight) -> Weight {
        self -= o;
        self
    }
}

impl SubAssign for Weight {
    fn sub_assign(&mut self, o: Weight) {
        debug_assert_eq!(self.len, o.len);
        for i in 0..self.len as usize {
            self.c[i] -= o.c[i];
        }
    }
}

impl Neg for Weight {
    type Output = Weight;
    fn neg(mut self) -> Weight {
        for i in 0..self.len as usize {
            self.c[i] = -self.c[i];
        }
        self
    }
}

impl Mul<Weight> for i32 {
    type Output = Weight;
    fn mul(self, mut w: Weight) -> Weight {
        for i in 0..w.len as usize {
            w.c[i] *= self;
        }
        w
    }
}

impl fmt::Debug for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, x) in self.coords().iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for Weight {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coords().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = Vec::<i32>::deserialize(d)?;
        if v.len() > MAX_RANK {
            return Err(serde::de::Error::custom("weight rank too large"));
        }
        Ok(Weight::from_slice(&v))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CartanType {
    A,
    B,
    C,
    D,
}

impl CartanType {
    pub fn letter(self) -> char {
        match self {
            CartanType::A => 'A',
            CartanType::B => 'B',
            CartanType::C => 'C',
            CartanType::D => 'D',
        }
    }

    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'A' => Some(CartanType::A),
            'B' => Some(CartanType::B),
            'C' => Some(CartanType::C),
            'D' => Some(CartanType::D),
            _ => None,
        }
    }

    /// Order of the Weyl group.
    pub fn weyl_order(self, rank: usize) -> u64 {
        let fact = |n: usize| (1..=n as u64).product::<u64>();
        match self {
            CartanType::A => fact(rank + 1),
            CartanType::B | CartanType::C => (1u64 << rank) * fact(rank),
            CartanType::D => (1u64 << (rank - 1)) * fact(rank),
        }
    }
}

/// A positive root.
#[derive(Clone, Debug)]
pub struct Root {
    /// Simple-root coordinates.
    pub alpha: Vec<i32>,
    /// Fundamental-weight coordinates.
    pub omega: Weight,
    pub height: i32,
    /// Half the squared length, normalized so short roots have 1.
    pub sym: i64,
}

impl Root {
    pub fn is_simple(&self) -> bool {
        self.height == 1
    }
}

/// An element of the finite Weyl group.
#[derive(Clone, Debug)]
pub struct WeylElement {
    /// Reduced word `s_{i_1} ... s_{i_k}`, indices from 0.
    pub word: Vec<usize>,
    pub length: usize,
    matrix: Vec<i32>,
    rho_image: Weight,
}

impl WeylElement {
    pub fn rho_image(&self) -> Weight {
        self.rho_image
    }
}

/// Bruhat cover `w -> s_gamma w` with length going up by one.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cover {
    pub target: usize,
    pub root: usize,
}

/// Cartan data, positive roots and the full Weyl group.
#[derive(Debug)]
pub struct RootSystem {
    kind: CartanType,
    rank: usize,
    cartan: Vec<Vec<i32>>,
    sym: Vec<i64>,
    roots: Vec<Root>,
    root_lookup: HashMap<Vec<i32>, usize>,
    weyl: Vec<WeylElement>,
    weyl_lookup: HashMap<Weight, usize>,
    by_length: Vec<Vec<usize>>,
    covers: Vec<Vec<Cover>>,
}

const MAX_WEYL: u64 = 50_000;

fn cartan_matrix(kind: CartanType, n: usize) -> Vec<Vec<i32>> {
    let mut a = vec![vec![0i32; n]; n];
    for i in 0..n {
        a[i][i] = 2;
    }
    match kind {
        CartanType::A | CartanType::B | CartanType::C => {
            for i in 0..n.saturating_sub(1) {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            if kind == CartanType::B && n >= 2 {
                // alpha_n short
                a[n - 1][n - 2] = -2;
            }
            if kind == CartanType::C && n >= 2 {
                // alpha_n long
                a[n - 2][n - 1] = -2;
            }
        }
        CartanType::D => {
            for i in 0..n - 2 {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
            a[n - 3][n - 1] = -1;
            a[n - 1][n - 3] = -1;
        }
    }
    a
}

/// Integers `d_i` with `d_i a_ij` symmetric and `min d_i = 1`.
fn symmetrizer(a: &[Vec<i32>]) -> Vec<i64> {
    let n = a.len();
    let mut d: Vec<Option<Rational64>> = vec![None; n];
    d[0] = Some(Rational64::from_integer(1));
    let mut stack = vec![0];
    while let Some(i) = stack.pop() {
        for j in 0..n {
            if i != j && a[i][j] != 0 && d[j].is_none() {
                // d_i a_ij = d_j a_ji
                let di = d[i].unwrap();
                d[j] = Some(di * Rational64::from_integer(a[i][j] as i64) / a[j][i] as i64);
                stack.push(j);
            }
        }
    }
    let d: Vec<Rational64> = d.into_iter().map(|x| x.expect("connected diagram")).collect();
    let denom = d.iter().fold(1i64, |acc, x| num_integer::lcm(acc, *x.denom()));
    let ints: Vec<i64> = d.iter().map(|x| (x * denom).to_integer()).collect();
    let g = ints.iter().fold(0i64, |acc, &x| num_integer::gcd(acc, x));
    ints.into_iter().map(|x| x / g).collect()
}

impl RootSystem {
    /// Build the root system of the given type and rank.
    pub fn new(kind: CartanType, rank: usize) -> Result<Self> {
        let unsupported = |reason: &str| Error::UnsupportedType {
            letter: kind.letter(),
            rank,
            reason: reason.to_string(),
        };
        let min_rank = match kind {
            CartanType::A => 1,
            CartanType::B | CartanType::C => 2,
            CartanType::D => 4,
        };
        if rank < min_rank {
            return Err(unsupported(&format!("rank must be at least {min_rank}")));
        }
        if rank > MAX_RANK || kind.weyl_order(rank) > MAX_WEYL {
            return Err(unsupported("Weyl group too large to materialize"));
        }
        let cartan = cartan_matrix(kind, rank);
        let sym = symmetrizer(&cartan);
        let mut rs = RootSystem {
            kind,
            rank,
            cartan,
            sym,
            roots: Vec::new(),
            root_lookup: HashMap::new(),
            weyl: Vec::new(),
            weyl_lookup: HashMap::new(),
            by_length: Vec::new(),
            covers: Vec::new(),
        };
        rs.build_roots();
        rs.build_weyl();
        rs.build_covers();
        Ok(rs)
    }

    pub fn parse(letter: &str, rank: usize) -> Result<Self> {
        let mut chars = letter.trim().chars();
        let kind = match (chars.next(), chars.next()) {
            (Some(c), None) => CartanType::from_letter(c),
            _ => None,
        };
        match kind {
            Some(k) => RootSystem::new(k, rank),
            None => Err(Error::UnsupportedType {
                letter: letter.chars().next().unwrap_or('?'),
                rank,
                reason: "type must be one of A, B, C, D".into(),
            }),
        }
    }

    fn build_roots(&mut self) {
        let n = self.rank;
        let mut roots: Vec<Vec<i32>> = (0..n)
            .map(|i| {
                let mut v = vec![0; n];
                v[i] = 1;
                v
            })
            .collect();
        let mut seen: std::collections::HashSet<Vec<i32>> = roots.iter().cloned().collect();
        let mut frontier = roots.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..n {
                    // q = largest k with beta - k alpha_i a root
                    let mut q = 0;
                    loop {
                        let mut t = beta.clone();
                        t[i] -= q + 1;
                        if t.iter().all(|&x| x >= 0) && seen.contains(&t) {
                            q += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i32 = (0..n).map(|j| self.cartan[i][j] * beta[j]).sum();
                    let p = q - pairing;
                    if p > 0 {
                        let mut t = beta.clone();
                        t[i] += 1;
                        if seen.insert(t.clone()) {
                            next.push(t);
                        }
                    }
                }
            }
            roots.extend(next.iter().cloned());
            frontier = next;
        }
        roots.sort_by(|a, b| {
            let ha: i32 = a.iter().sum();
            let hb: i32 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        self.roots = roots
            .into_iter()
            .map(|alpha| {
                let omega = self.alpha_to_omega(&alpha);
                let height = alpha.iter().sum();
                let mut norm = 0i64;
                for i in 0..n {
                    for j in 0..n {
                        norm += alpha[i] as i64 * alpha[j] as i64 * self.sym[i] * self.cartan[i][j] as i64;
                    }
                }
                Root {
                    alpha,
                    omega,
                    height,
                    sym: norm / 2,
                }
            })
            .collect();
        self.root_lookup = self
            .roots
            .iter()
            .enumerate()
            .map(|(k, r)| (r.alpha.clone(), k))
            .collect();
    }

    fn build_weyl(&mut self) {
        let n = self.rank;
        let rho = self.rho();
        let mut id = vec![0i32; n * n];
        for i in 0..n {
            id[i * n + i] = 1;
        }
        self.weyl = vec![WeylElement {
            word: vec![],
            length: 0,
            matrix: id,
            rho_image: rho,
        }];
        self.weyl_lookup.insert(rho, 0);
        self.by_length = vec![vec![0]];
        loop {
            let level = self.by_length.last().unwrap().clone();
            let mut next = Vec::new();
            for &w in &level {
                for i in 0..n {
                    let img = self.weyl[w].rho_image;
                    if img[i] <= 0 {
                        continue;
                    }
                    let new_img = self.reflect_simple(i, img);
                    if self.weyl_lookup.contains_key(&new_img) {
                        continue;
                    }
                    let mut word = vec![i];
                    word.extend_from_slice(&self.weyl[w].word);
                    let old = &self.weyl[w].matrix;
                    let mut m = old.clone();
                    // (S_i M)_{k,c} = M_{k,c} - a_{k,i} M_{i,c}
                    for k in 0..n {
                        for c in 0..n {
                            m[k * n + c] = old[k * n + c] - self.cartan[k][i] * old[i * n + c];
                        }
                    }
                    let idx = self.weyl.len();
                    self.weyl.push(WeylElement {
                        length: word.len(),
                        word,
                        matrix: m,
                        rho_image: new_img,
                    });
                    self.weyl_lookup.insert(new_img, idx);
                    next.push(idx);
                }
            }
            if next.is_empty() {
                break;
            }
            self.by_length.push(next);
        }
    }

    fn build_covers(&mut self) {
        let mut covers = vec![Vec::new(); self.weyl.len()];
        for (w, el) in self.weyl.iter().enumerate() {
            for g in 0..self.roots.len() {
                let img = self.reflect(g, el.rho_image);
                let t = self.weyl_lookup[&img];
                if self.weyl[t].length == el.length + 1 {
                    covers[w].push(Cover { target: t, root: g });
                }
            }
        }
        self.covers = covers;
    }

    pub fn kind(&self) -> CartanType {
        self.kind
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Short label such as `A3`.
    pub fn name(&self) -> String {
        format!("{}{}", self.kind.letter(), self.rank)
    }

    pub fn cartan(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    /// Symmetrizer `d_i = (alpha_i, alpha_i) / 2`.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.sym
    }

    pub fn cartan_determinant(&self) -> i64 {
        det_i64(&self.cartan)
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    /// Index of a positive root given in simple-root coordinates.
    pub fn root_index(&self, alpha: &[i32]) -> Option<usize> {
        self.root_lookup.get(alpha).copied()
    }

    /// Roots are sorted by height, so the simple roots come first.
    pub fn simple_root_index(&self, i: usize) -> usize {
        debug_assert!(self.roots[i].is_simple());
        i
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        self.roots[i].omega
    }

    pub fn rho(&self) -> Weight {
        Weight::from_slice(&vec![1; self.rank])
    }

    pub fn fundamental_weight(&self, i: usize) -> Weight {
        let mut w = Weight::zero(self.rank);
        w[i] = 1;
        w
    }

    pub fn coxeter_number(&self) -> usize {
        2 * self.roots.len() / self.rank
    }

    /// Index of the highest short root; its coroot is the highest coroot.
    pub fn highest_short_root(&self) -> usize {
        let min_sym = self.roots.iter().map(|r| r.sym).min().unwrap();
        (0..self.roots.len())
            .filter(|&k| self.roots[k].sym == min_sym)
            .max_by_key(|&k| self.roots[k].height)
            .unwrap()
    }

    pub fn alpha_to_omega(&self, alpha: &[i32]) -> Weight {
        let n = self.rank;
        let mut w = Weight::zero(n);
        for i in 0..n {
            w[i] = (0..n).map(|j| self.cartan[i][j] * alpha[j]).sum();
        }
        w
    }

    /// Simple-root coordinates, rational in general.
    pub fn omega_to_alpha(&self, w: Weight) -> Vec<Rational64> {
        let n = self.rank;
        let mut m: Vec<Vec<Rational64>> = (0..n)
            .map(|i| {
                let mut row: Vec<Rational64> = (0..n)
                    .map(|j| Rational64::from_integer(self.cartan[i][j] as i64))
                    .collect();
                row.push(Rational64::from_integer(w[i] as i64));
                row
            })
            .collect();
        for c in 0..n {
            let p = (c..n).find(|&r| m[r][c] != Rational64::from_integer(0)).unwrap();
            m.swap(c, p);
            let piv = m[c][c];
            for k in c..=n {
                m[c][k] /= piv;
            }
            for r in 0..n {
                if r != c {
                    let f = m[r][c];
                    if f != Rational64::from_integer(0) {
                        for k in c..=n {
                            let t = m[c][k];
                            m[r][k] -= f * t;
                        }
                    }
                }
            }
        }
        (0..n).map(|i| m[i][n]).collect()
    }

    /// Simple-root coordinates when they are integral.
    pub fn omega_to_alpha_integral(&self, w: Weight) -> Option<Vec<i32>> {
        self.omega_to_alpha(w)
            .into_iter()
            .map(|x| x.is_integer().then(|| x.to_integer() as i32))
            .collect()
    }

    /// `<lambda, beta^vee>` for the positive root with index `k`.
    pub fn pairing(&self, lambda: Weight, k: usize) -> i64 {
        let r = &self.roots[k];
        let s: i64 = (0..self.rank)
            .map(|j| r.alpha[j] as i64 * self.sym[j] * lambda[j] as i64)
            .sum();
        debug_assert_eq!(s % r.sym, 0);
        s / r.sym
    }

    /// Invariant form on weights, normalized so short roots have length 2.
    pub fn inner(&self, a: Weight, b: Weight) -> Rational64 {
        let ca = self.omega_to_alpha(a);
        // (alpha_i, mu) = d_i <mu, alpha_i^vee> = d_i mu_i
        (0..self.rank)
            .map(|i| ca[i] * Rational64::from_integer(self.sym[i] * b[i] as i64))
            .sum()
    }

    fn reflect_simple(&self, i: usize, mut w: Weight) -> Weight {
        let c = w[i];
        for k in 0..self.rank {
            w[k] -= c * self.cartan[k][i];
        }
        w
    }

    /// Reflection in the positive root with index `k`.
    pub fn reflect(&self, k: usize, lambda: Weight) -> Weight {
        let p = self.pairing(lambda, k) as i32;
        lambda - p * self.roots[k].omega
    }

    pub fn weyl_elements(&self) -> &[WeylElement] {
        &self.weyl
    }

    pub fn weyl_order(&self) -> usize {
        self.weyl.len()
    }

    pub fn element(&self, w: usize) -> &WeylElement {
        &self.weyl[w]
    }

    /// Element indices grouped by length.
    pub fn weyl_elements_by_length(&self) -> &[Vec<usize>] {
        &self.by_length
    }

    pub fn longest_element(&self) -> usize {
        self.by_length.last().unwrap()[0]
    }

    /// Bruhat covers `w -> s_gamma w`.
    pub fn covers(&self, w: usize) -> &[Cover] {
        &self.covers[w]
    }

    /// Element with the given reduced (or arbitrary) word.
    pub fn element_from_word(&self, word: &[usize]) -> usize {
        let mut img = self.rho();
        for &i in word.iter().rev() {
            img = self.reflect_simple(i, img);
        }
        self.weyl_lookup[&img]
    }

    pub fn act(&self, w: usize, lambda: Weight) -> Weight {
        let n = self.rank;
        let m = &self.weyl[w].matrix;
        let mut out = Weight::zero(n);
        for k in 0..n {
            out[k] = (0..n).map(|c| m[k * n + c] * lambda[c]).sum();
        }
        out
    }

    /// `w . lambda = w(lambda + rho) - rho`.
    pub fn dot_action(&self, w: usize, lambda: Weight) -> Weight {
        let rho = self.rho();
        self.act(w, lambda + rho) - rho
    }

    pub fn compose(&self, a: usize, b: usize) -> usize {
        let img = self.act(a, self.weyl[b].rho_image);
        self.weyl_lookup[&img]
    }

    pub fn inverse(&self, w: usize) -> usize {
        let word: Vec<usize> = self.weyl[w].word.iter().rev().copied().collect();
        self.element_from_word(&word)
    }

    /// Number of positive roots sent to negative roots.
    pub fn inversions(&self, w: usize) -> usize {
        (0..self.roots.len())
            .filter(|&k| {
                let img = self.act(w, self.roots[k].omega);
                let a = self.omega_to_alpha_integral(img).unwrap();
                a.iter().any(|&x| x < 0)
            })
            .count()
    }

    /// Is `lambda + rho` off every wall?
    pub fn is_dot_regular(&self, lambda: Weight) -> bool {
        let mu = lambda + self.rho();
        (0..self.roots.len()).all(|k| self.pairing(mu, k) != 0)
    }

    /// The unique `(w, nu)` with `nu` dominant and `w . nu = lambda`, or `None`
    /// when `lambda + rho` is singular.
    pub fn dominant_dot_representative(&self, lambda: Weight) -> Option<(usize, Weight)> {
        let rho = self.rho();
        let mut mu = lambda + rho;
        if (0..self.roots.len()).any(|k| self.pairing(mu, k) == 0) {
            return None;
        }
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| mu[i] < 0) {
            mu = self.reflect_simple(i, mu);
            word.push(i);
        }
        Some((self.element_from_word(&word), mu - rho))
    }

    /// Dimension of the irreducible module with highest weight `nu`.
    pub fn weyl_dimension(&self, nu: Weight) -> Result<u64> {
        if !nu.is_dominant() {
            return Err(Error::NotDominant(nu.to_string()));
        }
        let rho = self.rho();
        let mut num = num_bigint::BigInt::from(1);
        let mut den = num_bigint::BigInt::from(1);
        for k in 0..self.roots.len() {
            num *= self.pairing(nu + rho, k);
            den *= self.pairing(rho, k);
        }
        let q = num / den;
        u64::try_from(q).map_err(|_| Error::InvalidInput("dimension overflows u64".into()))
    }
}

fn det_i64(a: &[Vec<i32>]) -> i64 {
    let n = a.len();
    let mut m: Vec<Vec<Rational64>> = a
        .iter()
        .map(|r| r.iter().map(|&x| Rational64::from_integer(x as i64)).collect())
        .collect();
    let mut det = Rational64::from_integer(1);
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| m[r][c] != Rational64::from_integer(0)) else {
            return 0;
        };
        if p != c {
            m.swap(c, p);
            det = -det;
        }
        det *= m[c][c];
        for r in c + 1..n {
            let f = m[r][c] / m[c][c];
            for k in c..n {
                let t = m[c][k];
                m[r][k] -= f * t;
            }
        }
    }
    det.to_integer()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(k: CartanType, n: usize) -> RootSystem {
        RootSystem::new(k, n).unwrap()
    }

    fn w(c: &[i32]) -> Weight {
        Weight::from_slice(c)
    }

    #[test]
    fn a1_basics() {
        let r = rs(CartanType::A, 1);
        assert_eq!(r.num_positive_roots(), 1);
        assert_eq!(r.rho(), w(&[1]));
        assert_eq!(r.weyl_order(), 2);
    }

    #[test]
    fn b2_pairings_fix_alpha1_long() {
        let r = rs(CartanType::B, 2);
        assert_eq!(r.num_positive_roots(), 4);
        // [h1, e2] = -e2 and [h2, e1] = -2 e1
        assert_eq!(r.simple_root(1)[0], -1);
        assert_eq!(r.simple_root(0)[1], -2);
        assert_eq!(r.symmetrizer(), &[2, 1]);
        let alphas: Vec<Vec<i32>> = r.positive_roots().iter().map(|x| x.alpha.clone()).collect();
        assert_eq!(alphas, vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![1, 2]]);
        assert_eq!(r.positive_roots()[2].omega, w(&[1, 0]));
    }

    #[test]
    fn a3_counts() {
        let r = rs(CartanType::A, 3);
        assert_eq!(r.num_positive_roots(), 6);
        assert_eq!(r.weyl_order(), 24);
        assert_eq!(r.element(r.longest_element()).length, 6);
        let counts: Vec<usize> = r.weyl_elements_by_length().iter().map(|v| v.len()).collect();
        assert_eq!(counts, vec![1, 3, 5, 6, 5, 3, 1]);
    }

    #[test]
    fn length_census_small_types() {
        let r = rs(CartanType::A, 1);
        let c: Vec<usize> = r.weyl_elements_by_length().iter().map(|v| v.len()).collect();
        assert_eq!(c, vec![1, 1]);
        let r = rs(CartanType::B, 2);
        let c: Vec<usize> = r.weyl_elements_by_length().iter().map(|v| v.len()).collect();
        assert_eq!(c, vec![1, 2, 2, 2, 1]);
    }

    #[test]
    fn weyl_orders_match_formula() {
        for (k, n) in [
            (CartanType::A, 2),
            (CartanType::B, 3),
            (CartanType::C, 3),
            (CartanType::D, 4),
        ] {
            let r = rs(k, n);
            assert_eq!(r.weyl_order() as u64, k.weyl_order(n));
            assert_eq!(r.element(r.longest_element()).length, r.num_positive_roots());
        }
    }

    #[test]
    fn simple_dot_zero() {
        let r = rs(CartanType::A, 3);
        for i in 0..3 {
            let s = r.element_from_word(&[i]);
            assert_eq!(r.dot_action(s, Weight::zero(3)), -r.simple_root(i));
        }
    }

    #[test]
    fn a3_longest_dot_zero() {
        let r = rs(CartanType::A, 3);
        let got = r.dot_action(r.longest_element(), Weight::zero(3));
        assert_eq!(r.omega_to_alpha_integral(got).unwrap(), vec![-3, -4, -3]);
    }

    #[test]
    fn dominant_representatives() {
        let r = rs(CartanType::A, 2);
        assert!(r.dominant_dot_representative(-r.rho()).is_none());
        let (s, nu) = r.dominant_dot_representative(-r.simple_root(0)).unwrap();
        assert_eq!(r.element(s).word, vec![0]);
        assert!(nu.is_zero());
        let b = rs(CartanType::B, 2);
        let lam = -2 * b.simple_root(0);
        let (w2, nu) = b.dominant_dot_representative(lam).unwrap();
        assert_eq!(b.element(w2).length, 2);
        assert_eq!(nu, b.positive_roots()[2].omega);
    }

    #[test]
    fn weyl_dimensions() {
        let b = rs(CartanType::B, 2);
        assert_eq!(b.weyl_dimension(Weight::zero(2)).unwrap(), 1);
        assert_eq!(b.weyl_dimension(w(&[1, 0])).unwrap(), 5);
        assert_eq!(b.weyl_dimension(w(&[0, 1])).unwrap(), 4);
        let a = rs(CartanType::A, 3);
        assert_eq!(a.weyl_dimension(w(&[1, 0, 0])).unwrap(), 4);
        assert_eq!(a.weyl_dimension(w(&[1, 0, 1])).unwrap(), 15);
        assert!(a.weyl_dimension(w(&[-1, 0, 0])).is_err());
    }

    #[test]
    fn determinants_and_coxeter_numbers() {
        assert_eq!(rs(CartanType::A, 3).cartan_determinant(), 4);
        assert_eq!(rs(CartanType::B, 2).cartan_determinant(), 2);
        assert_eq!(rs(CartanType::D, 4).cartan_determinant(), 4);
        assert_eq!(rs(CartanType::A, 3).coxeter_number(), 4);
        assert_eq!(rs(CartanType::B, 2).coxeter_number(), 4);
    }

    #[test]
    fn highest_short_root() {
        let b = rs(CartanType::B, 2);
        // alpha1 + alpha2 is short in B2
        assert_eq!(b.positive_roots()[b.highest_short_root()].alpha, vec![1, 1]);
        let a = rs(CartanType::A, 2);
        assert_eq!(a.positive_roots()[a.highest_short_root()].alpha, vec![1, 1]);
    }

    #[test]
    fn unsupported_inputs() {
        assert!(RootSystem::new(CartanType::D, 3).is_err());
        assert!(RootSystem::new(CartanType::B, 1).is_err());
        assert!(RootSystem::parse("E", 6).is_err());
        assert!(RootSystem::new(CartanType::A, 9).is_err());
    }

    #[test]
    fn covers_have_root_weights() {
        let r = rs(CartanType::B, 2);
        let total: usize = (0..r.weyl_order()).map(|w| r.covers(w).len()).sum();
        // dihedral of order 8: levels 1,2,2,2,1 are completely bipartite
        assert_eq!(total, 2 + 4 + 4 + 2);
    }
}
