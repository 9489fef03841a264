//! Exact linear algebra: sparse integer rank and small rational nullspaces.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{CheckedMul, CheckedSub, One, Signed, Zero};

/// Sparse row: strictly increasing column indices, nonzero values.
pub type SparseRow<T> = Vec<(u32, T)>;

/// Sparse integer matrix stored by rows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub rows: Vec<SparseRow<i64>>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            nrows,
            ncols,
            rows: vec![Vec::new(); nrows],
        }
    }

    pub fn from_dense(d: &[Vec<i64>]) -> Self {
        let ncols = d.first().map_or(0, |r| r.len());
        let rows = d
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(|(c, &x)| (c as u32, x))
                    .collect()
            })
            .collect();
        IntMatrix {
            nrows: d.len(),
            ncols,
            rows,
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<i64>> {
        let mut out = vec![vec![0; self.ncols]; self.nrows];
        for (r, row) in self.rows.iter().enumerate() {
            for &(c, x) in row {
                out[r][c as usize] = x;
            }
        }
        out
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(|r| r.is_empty())
    }

    /// `self * other`, exact. Panics on i64 overflow.
    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, other.nrows);
        let mut out = IntMatrix::zeros(self.nrows, other.ncols);
        let mut acc: Vec<i128> = vec![0; other.ncols];
        let mut touched: Vec<u32> = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            for &(k, a) in row {
                for &(c, b) in &other.rows[k as usize] {
                    if acc[c as usize] == 0 {
                        touched.push(c);
                    }
                    acc[c as usize] += a as i128 * b as i128;
                }
            }
            touched.sort_unstable();
            touched.dedup();
            for &c in &touched {
                let v = std::mem::take(&mut acc[c as usize]);
                if v != 0 {
                    out.rows[r].push((c, i64::try_from(v).expect("matrix product overflow")));
                }
            }
            touched.clear();
        }
        out
    }

    pub fn rank(&self) -> usize {
        sparse_rank(self.ncols, &self.rows)
    }
}

trait Ring: Clone + Integer + Signed + CheckedMul + CheckedSub {}
impl Ring for i128 {}
impl Ring for BigInt {}

fn content_normalize<T: Ring>(row: &mut SparseRow<T>) {
    let mut g = T::zero();
    for (_, x) in row.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if !g.is_zero() && !g.is_one() {
        for (_, x) in row.iter_mut() {
            *x = x.div_floor(&g);
        }
    }
}

/// `a*row - b*piv`, both with the same leading column. `None` on overflow.
fn combine<T: Ring>(a: &T, row: &SparseRow<T>, b: &T, piv: &SparseRow<T>) -> Option<SparseRow<T>> {
    let mut out = Vec::with_capacity(row.len() + piv.len());
    let (mut i, mut j) = (0, 0);
    while i < row.len() || j < piv.len() {
        let ci = row.get(i).map_or(u32::MAX, |e| e.0);
        let cj = piv.get(j).map_or(u32::MAX, |e| e.0);
        if ci < cj {
            out.push((ci, a.checked_mul(&row[i].1)?));
            i += 1;
        } else if cj < ci {
            out.push((cj, T::zero().checked_sub(&b.checked_mul(&piv[j].1)?)?));
            j += 1;
        } else {
            let v = a
                .checked_mul(&row[i].1)?
                .checked_sub(&b.checked_mul(&piv[j].1)?)?;
            if !v.is_zero() {
                out.push((ci, v));
            }
            i += 1;
            j += 1;
        }
    }
    Some(out)
}

fn rank_generic<T: Ring>(ncols: usize, rows: Vec<SparseRow<T>>) -> Option<usize> {
    let mut pivots: Vec<Option<SparseRow<T>>> = vec![None; ncols];
    let mut rank = 0;
    for mut row in rows {
        content_normalize(&mut row);
        while let Some(&(c, _)) = row.first() {
            match &pivots[c as usize] {
                Some(p) => {
                    let g = p[0].1.gcd(&row[0].1);
                    let a = p[0].1.div_floor(&g);
                    let b = row[0].1.div_floor(&g);
                    row = combine(&a, &row, &b, p)?;
                    content_normalize(&mut row);
                }
                None => {
                    pivots[c as usize] = Some(row);
                    rank += 1;
                    break;
                }
            }
        }
    }
    Some(rank)
}

/// Exact rank of a sparse integer matrix given by rows.
///
/// Fraction-free elimination with row-content reduction; runs in `i128` and
/// restarts with arbitrary precision if an intermediate overflows.
pub fn sparse_rank(ncols: usize, rows: &[SparseRow<i64>]) -> usize {
    let mut order: Vec<usize> = (0..rows.len()).filter(|&r| !rows[r].is_empty()).collect();
    order.sort_by_key(|&r| (rows[r][0].0, rows[r].len()));
    let small: Vec<SparseRow<i128>> = order
        .iter()
        .map(|&r| rows[r].iter().map(|&(c, x)| (c, x as i128)).collect())
        .collect();
    if let Some(r) = rank_generic(ncols, small) {
        return r;
    }
    let big: Vec<SparseRow<BigInt>> = order
        .iter()
        .map(|&r| rows[r].iter().map(|&(c, x)| (c, BigInt::from(x))).collect())
        .collect();
    rank_generic(ncols, big).expect("arbitrary precision cannot overflow")
}

/// Dense matrix over the rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    pub nrows: usize,
    pub ncols: usize,
    pub data: Vec<Vec<BigRational>>,
}

impl RatMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        RatMatrix {
            nrows,
            ncols,
            data: vec![vec![BigRational::zero(); ncols]; nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RatMatrix::zeros(n, n);
        for i in 0..n {
            m.data[i][i] = BigRational::one();
        }
        m
    }

    pub fn from_i64(d: &[Vec<i64>]) -> Self {
        let ncols = d.first().map_or(0, |r| r.len());
        RatMatrix {
            nrows: d.len(),
            ncols,
            data: d
                .iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        }
    }

    /// Exact rank: clear denominators row by row, then eliminate over the integers.
    pub fn rank(&self) -> usize {
        let mut rows: Vec<SparseRow<BigInt>> = Vec::with_capacity(self.nrows);
        for r in &self.data {
            let l = r.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            let row: SparseRow<BigInt> = r
                .iter()
                .enumerate()
                .filter(|(_, x)| !x.is_zero())
                .map(|(c, x)| (c as u32, (x * BigRational::from_integer(l.clone())).to_integer()))
                .collect();
            if !row.is_empty() {
                rows.push(row);
            }
        }
        rows.sort_by_key(|r| r[0].0);
        rank_generic(self.ncols, rows).unwrap()
    }

    /// Basis of `{x : self * x = 0}` in reduced echelon form.
    pub fn nullspace(&self) -> Vec<Vec<BigRational>> {
        let mut m = self.data.clone();
        let mut pivot_cols = Vec::new();
        let mut r = 0;
        for c in 0..self.ncols {
            let Some(p) = (r..self.nrows).find(|&i| !m[i][c].is_zero()) else {
                continue;
            };
            m.swap(r, p);
            let inv = m[r][c].recip();
            for k in c..self.ncols {
                if !m[r][k].is_zero() {
                    m[r][k] = &m[r][k] * &inv;
                }
            }
            for i in 0..self.nrows {
                if i != r && !m[i][c].is_zero() {
                    let f = m[i][c].clone();
                    for k in c..self.ncols {
                        if !m[r][k].is_zero() {
                            let t = &f * &m[r][k];
                            m[i][k] -= t;
                        }
                    }
                }
            }
            pivot_cols.push(c);
            r += 1;
            if r == self.nrows {
                break;
            }
        }
        let free: Vec<usize> = (0..self.ncols).filter(|c| !pivot_cols.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![BigRational::zero(); self.ncols];
                v[fc] = BigRational::one();
                for (row, &pc) in pivot_cols.iter().enumerate() {
                    v[pc] = -m[row][fc].clone();
                }
                v
            })
            .collect()
    }
}

/// Exact rank of a rational matrix.
pub fn exact_rank(m: &RatMatrix) -> usize {
    m.rank()
}

/// Scale a rational vector to a primitive integer vector with the same direction.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|x| (x * BigRational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|x| x / &g).collect()
}
