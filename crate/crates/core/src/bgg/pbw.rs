//! PBW straightening in `U(n^-)` and the raising action on Verma modules.
//!
//! Monomials are exponent vectors `f_{β_1}^{a_1} ... f_{β_N}^{a_N}` in the
//! fixed root order (height, then lexicographic). Products are straightened by
//! `f_k f_j = f_j f_k + [f_k, f_j]` for `k > j`.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::chevalley::{ChevalleyBasis, Generator};
use crate::rootsys::{RootSystem, Weight};

pub type Monomial = Vec<u8>;

/// Integer combination of PBW monomials.
pub type IntPoly = BTreeMap<Monomial, BigInt>;

type Terms = Arc<Vec<(Monomial, i64)>>;

pub struct PbwAlgebra {
    n: usize,
    rank: usize,
    root_alpha: Vec<Vec<i32>>,
    root_omega: Vec<Weight>,
    /// `[f_a, f_b] = c f_t`.
    fbracket: Vec<Vec<Option<(usize, i64)>>>,
    /// `[e_i, f_b] = c f_t` for `b` not simple `i`.
    ebracket: Vec<Vec<Option<(usize, i64)>>>,
    memo: RwLock<HashMap<(u8, Monomial), Terms>>,
}

impl PbwAlgebra {
    pub fn new(rs: &RootSystem, basis: &ChevalleyBasis) -> Self {
        let n = rs.num_positive_roots();
        let r = rs.rank();
        let as_f = |v: &Vec<(usize, i64)>| -> Option<(usize, i64)> {
            match v.as_slice() {
                [] => None,
                [(c, x)] => match basis.generator(*c) {
                    Generator::F(t) => Some((t, *x)),
                    _ => None,
                },
                _ => panic!("bracket of root vectors is not a root vector"),
            }
        };
        let fbracket = (0..n)
            .map(|a| {
                (0..n)
                    .map(|b| as_f(basis.bracket(basis.index(Generator::F(a)), basis.index(Generator::F(b)))))
                    .collect()
            })
            .collect();
        let ebracket = (0..r)
            .map(|i| {
                (0..n)
                    .map(|b| as_f(basis.bracket(basis.index(Generator::E(i)), basis.index(Generator::F(b)))))
                    .collect()
            })
            .collect();
        PbwAlgebra {
            n,
            rank: r,
            root_alpha: rs.positive_roots().iter().map(|x| x.alpha.clone()).collect(),
            root_omega: rs.positive_roots().iter().map(|x| x.omega).collect(),
            fbracket,
            ebracket,
            memo: RwLock::new(HashMap::new()),
        }
    }

    pub fn num_roots(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> Monomial {
        vec![0; self.n]
    }

    pub fn generator(&self, k: usize) -> Monomial {
        let mut m = self.one();
        m[k] = 1;
        m
    }

    /// Weight of a monomial in fundamental-weight coordinates (non-positive).
    pub fn weight(&self, m: &Monomial) -> Weight {
        let mut w = Weight::zero(self.rank);
        for (k, &a) in m.iter().enumerate() {
            w -= a as i32 * self.root_omega[k];
        }
        w
    }

    /// `f_k * m` in the PBW basis.
    pub fn mul_gen_left(&self, k: usize, m: &Monomial) -> Terms {
        let key = (k as u8, m.clone());
        if let Some(t) = self.memo.read().unwrap().get(&key) {
            return t.clone();
        }
        let out = self.mul_gen_left_uncached(k, m);
        let out = Arc::new(out);
        self.memo.write().unwrap().insert(key, out.clone());
        out
    }

    fn mul_gen_left_uncached(&self, k: usize, m: &Monomial) -> Vec<(Monomial, i64)> {
        let first = m.iter().position(|&a| a > 0);
        match first {
            Some(j) if j < k => {
                // f_k f_j rest = f_j (f_k rest) + [f_k, f_j] rest
                let mut rest = m.clone();
                rest[j] -= 1;
                let mut acc: BTreeMap<Monomial, i64> = BTreeMap::new();
                for (t, c) in self.mul_gen_left(k, &rest).iter() {
                    // every index in t is >= j, so prepending f_j is sorted
                    let mut t2 = t.clone();
                    t2[j] += 1;
                    *acc.entry(t2).or_default() += c;
                }
                if let Some((s, c0)) = self.fbracket[k][j] {
                    for (t, c) in self.mul_gen_left(s, &rest).iter() {
                        *acc.entry(t.clone()).or_default() += c0 * c;
                    }
                }
                acc.into_iter().filter(|t| t.1 != 0).collect()
            }
            _ => {
                let mut t = m.clone();
                t[k] += 1;
                vec![(t, 1)]
            }
        }
    }

    /// `m * p`.
    pub fn mul_mono_left(&self, m: &Monomial, p: &IntPoly) -> IntPoly {
        let mut cur = p.clone();
        for k in (0..self.n).rev() {
            for _ in 0..m[k] {
                let mut next = IntPoly::new();
                for (t, c) in &cur {
                    for (t2, c2) in self.mul_gen_left(k, t).iter() {
                        *next.entry(t2.clone()).or_insert_with(BigInt::zero) += c * *c2;
                    }
                }
                next.retain(|_, c| !c.is_zero());
                cur = next;
            }
        }
        cur
    }

    pub fn mul(&self, p: &IntPoly, q: &IntPoly) -> IntPoly {
        let mut out = IntPoly::new();
        for (m, c) in p {
            for (t, c2) in self.mul_mono_left(m, q) {
                *out.entry(t).or_insert_with(BigInt::zero) += c * c2;
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    /// Straightened product `f_{w_0} f_{w_1} ...` of root vectors.
    pub fn from_word(&self, word: &[usize]) -> IntPoly {
        let mut p = IntPoly::new();
        p.insert(self.one(), BigInt::one());
        for &k in word.iter().rev() {
            p = self.mul_mono_left(&self.generator(k), &p);
        }
        p
    }

    /// All PBW monomials whose roots sum to `target` (simple-root coordinates).
    pub fn monomials_of_weight(&self, target: &[i32]) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = self.one();
        let mut rem = target.to_vec();
        self.enumerate(0, &mut rem, &mut cur, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }

    fn enumerate(&self, k: usize, rem: &mut Vec<i32>, cur: &mut Monomial, out: &mut Vec<Monomial>) {
        if k == self.n {
            if rem.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        let alpha = &self.root_alpha[k];
        let mut count = 0u8;
        loop {
            self.enumerate(k + 1, rem, cur, out);
            if !alpha.iter().zip(rem.iter()).all(|(&a, &r)| r >= a) {
                break;
            }
            for (r, &a) in rem.iter_mut().zip(alpha) {
                *r -= a;
            }
            count += 1;
            cur[k] = count;
        }
        for (r, &a) in rem.iter_mut().zip(alpha) {
            *r += a * count as i32;
        }
        cur[k] = 0;
    }

    /// `e_i * (m v_λ)` in the Verma module of highest weight `λ`.
    pub fn raise(&self, i: usize, m: &Monomial, lambda: Weight) -> IntPoly {
        let seq: Vec<usize> = (0..self.n)
            .flat_map(|k| std::iter::repeat_n(k, m[k] as usize))
            .collect();
        let mut out = IntPoly::new();
        let mut suffix_weight = Weight::zero(self.rank);
        for s in (0..seq.len()).rev() {
            let k = seq[s];
            let mut suffix = self.one();
            for &x in &seq[s + 1..] {
                suffix[x] += 1;
            }
            let mut prefix = self.one();
            for &x in &seq[..s] {
                prefix[x] += 1;
            }
            if k == i {
                // [e_i, f_i] = h_i acts on the suffix vector by its weight
                let c = (lambda + suffix_weight)[i] as i64;
                if c != 0 {
                    let mut t = m.clone();
                    t[k] -= 1;
                    *out.entry(t).or_insert_with(BigInt::zero) += c;
                }
            } else if let Some((t, c)) = self.ebracket[i][k] {
                let mut p = IntPoly::new();
                for (u, cu) in self.mul_gen_left(t, &suffix).iter() {
                    *p.entry(u.clone()).or_insert_with(BigInt::zero) += c * cu;
                }
                for (u, cu) in self.mul_mono_left(&prefix, &p) {
                    *out.entry(u).or_insert_with(BigInt::zero) += cu;
                }
            }
            suffix_weight -= self.root_omega[k];
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (k, &a) in m.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let name = format!("f{}", crate::chevalley::root_label(&self.root_alpha[k]));
            parts.push(if a == 1 { name } else { format!("{name}^{a}") });
        }
        if parts.is_empty() {
            "1".into()
        } else {
            parts.join("")
        }
    }
}

/// Rational element of `U(n^-)` of a fixed weight.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UMinusElement {
    pub weight: Weight,
    pub coefficients: BTreeMap<Monomial, BigRational>,
}

impl UMinusElement {
    /// Largest monomial (exponent-lex) with a nonzero coefficient.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.coefficients.iter().next_back()
    }

    /// Primitive integer multiple, with positive leading coefficient.
    pub fn to_int(&self) -> IntPoly {
        let mons: Vec<&Monomial> = self.coefficients.keys().collect();
        let vals: Vec<BigRational> = self.coefficients.values().cloned().collect();
        let ints = crate::linalg::primitive_integer_vector(&vals);
        mons.into_iter()
            .cloned()
            .zip(ints)
            .filter(|t| !t.1.is_zero())
            .collect()
    }

    pub fn from_int(weight: Weight, p: &IntPoly) -> Self {
        UMinusElement {
            weight,
            coefficients: p
                .iter()
                .map(|(m, c)| (m.clone(), BigRational::from_integer(c.clone())))
                .collect(),
        }
    }

    pub fn format(&self, alg: &PbwAlgebra) -> String {
        let mut s = String::new();
        for (m, c) in self.coefficients.iter().rev() {
            let neg = c < &BigRational::zero();
            let a = if neg { -c.clone() } else { c.clone() };
            if s.is_empty() {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            if !a.is_one() {
                s.push_str(&format!("{a}·"));
            }
            s.push_str(&alg.format_monomial(m));
        }
        if s.is_empty() {
            "0".into()
        } else {
            s
        }
    }
}

/// `Some(r)` with `p = r q` if the two are proportional (both nonzero).
pub fn proportionality(p: &IntPoly, q: &IntPoly) -> Option<BigRational> {
    if p.len() != q.len() || p.is_empty() {
        return None;
    }
    let (m0, q0) = q.iter().next()?;
    let r = BigRational::new(p.get(m0)?.clone(), q0.clone());
    for (m, qc) in q {
        let pc = p.get(m)?;
        if BigRational::from_integer(pc.clone()) != &r * BigRational::from_integer(qc.clone()) {
            return None;
        }
    }
    Some(r)
}
