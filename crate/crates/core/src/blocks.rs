//! Block census of restricted weights and whole-center dimensions.
//!
//! A restricted weight `μ` is shifted to `x = μ + ρ` and folded into the closed
//! fundamental alcove of `W ⋉ lQ`. Alcove points are then identified under the
//! finite group `Ω ≅ P/Q` of alcove symmetries, realized as `x ↦ fold(x + lω_k)`.
//! A block class is the set of alcove walls through `x` (node 0 is the affine
//! wall), taken up to `Ω`.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{CartanType, RootSystem, Weight};

/// Largest `l^rank` enumerated.
const MAX_RESTRICTED: u64 = 20_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusClass {
    /// Canonical wall set: lexicographically least over the `Ω`-orbit.
    pub walls: Vec<usize>,
    /// Levi (1-based simple roots) of an orbit member off the affine wall,
    /// when one exists.
    pub levi: Option<Vec<usize>>,
    pub label: String,
    /// Number of blocks.
    pub count: u64,
    /// Restricted weights in these blocks.
    pub weights: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockCensus {
    #[serde(rename = "type")]
    pub kind: CartanType,
    pub rank: usize,
    pub l: u64,
    pub classes: Vec<CensusClass>,
    pub blocks: u64,
    pub restricted_weights: u64,
    pub warnings: Vec<String>,
}

impl BlockCensus {
    pub fn class(&self, label: &str) -> Option<&CensusClass> {
        self.classes.iter().find(|c| c.label == label)
    }

    pub fn regular_count(&self) -> u64 {
        self.classes
            .iter()
            .filter(|c| c.walls.is_empty())
            .map(|c| c.count)
            .sum()
    }
}

/// Reasons `l` falls outside the usual hypotheses.
pub fn l_warnings(rs: &RootSystem, l: u64) -> Vec<String> {
    let mut w = Vec::new();
    if l.is_multiple_of(2) {
        w.push(format!("l = {l} is even"));
    }
    if l <= rs.coxeter_number() as u64 {
        w.push(format!(
            "l = {l} does not exceed the Coxeter number {}",
            rs.coxeter_number()
        ));
    }
    let det = rs.cartan_determinant().unsigned_abs();
    if l.gcd(&det) != 1 {
        w.push(format!("l = {l} is not coprime to the Cartan determinant {det}"));
    }
    w
}

struct Folder<'a> {
    rs: &'a RootSystem,
    l: i64,
    theta: usize,
    theta_omega: Weight,
}

impl<'a> Folder<'a> {
    fn new(rs: &'a RootSystem, l: u64) -> Self {
        let theta = rs.highest_short_root();
        Folder {
            rs,
            l: l as i64,
            theta,
            theta_omega: rs.positive_roots()[theta].omega,
        }
    }

    /// Unique representative in the closed alcove.
    fn fold(&self, mut x: Weight) -> Weight {
        let r = self.rs.rank();
        loop {
            if let Some(i) = (0..r).find(|&i| x[i] < 0) {
                x = self.rs.reflect(self.rs.simple_root_index(i), x);
                continue;
            }
            let t = self.rs.pairing(x, self.theta);
            if t > self.l {
                x -= ((t - self.l) as i32) * self.theta_omega;
                continue;
            }
            return x;
        }
    }

    fn walls(&self, x: Weight) -> Vec<usize> {
        let mut w = Vec::new();
        if self.rs.pairing(x, self.theta) == self.l {
            w.push(0);
        }
        w.extend((0..self.rs.rank()).filter(|&i| x[i] == 0).map(|i| i + 1));
        w
    }

    /// The `Ω`-orbit of an alcove point.
    fn omega_orbit(&self, x: Weight) -> BTreeSet<Weight> {
        let mut seen = BTreeSet::from([x]);
        let mut stack = vec![x];
        while let Some(y) = stack.pop() {
            for k in 0..self.rs.rank() {
                let z = self.fold(y + (self.l as i32) * self.rs.fundamental_weight(k));
                if seen.insert(z) {
                    stack.push(z);
                }
            }
        }
        seen
    }
}

fn class_label(rs: &RootSystem, walls: &[usize], levi: &Option<Vec<usize>>) -> String {
    if walls.is_empty() {
        return "regular".into();
    }
    if walls.len() == rs.rank() {
        return "steinberg".into();
    }
    match levi {
        Some(l) => format!(
            "levi {{{}}}",
            l.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        ),
        None => format!(
            "walls {{{}}}",
            walls.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
        ),
    }
}

pub fn restricted_weight_census(rs: &RootSystem, l: u64) -> Result<BlockCensus> {
    let r = rs.rank();
    if l < 2 {
        return Err(Error::InvalidInput(format!("l = {l} must be at least 2")));
    }
    let total = l
        .checked_pow(r as u32)
        .filter(|&t| t <= MAX_RESTRICTED)
        .ok_or_else(|| Error::InvalidInput(format!("l^{r} restricted weights is too many")))?;
    let folder = Folder::new(rs, l);

    // alcove representative -> number of restricted weights folding onto it
    let alcove: BTreeMap<Weight, u64> = (0..total)
        .into_par_iter()
        .fold(BTreeMap::new, |mut acc: BTreeMap<Weight, u64>, idx| {
            let mut x = Weight::zero(r);
            let mut t = idx;
            for i in 0..r {
                x[i] = (t % l) as i32 + 1;
                t /= l;
            }
            *acc.entry(folder.fold(x)).or_default() += 1;
            acc
        })
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });

    let mut done: BTreeSet<Weight> = BTreeSet::new();
    let mut classes: BTreeMap<Vec<usize>, CensusClass> = BTreeMap::new();
    for &x in alcove.keys() {
        if done.contains(&x) {
            continue;
        }
        let orbit = folder.omega_orbit(x);
        let weights: u64 = orbit.iter().filter_map(|y| alcove.get(y)).sum();
        let wall_sets: Vec<Vec<usize>> = orbit.iter().map(|&y| folder.walls(y)).collect();
        let walls = wall_sets.iter().min().unwrap().clone();
        let levi = wall_sets.iter().filter(|w| !w.contains(&0)).min().cloned();
        done.extend(orbit);
        let c = classes.entry(walls.clone()).or_insert_with(|| CensusClass {
            label: class_label(rs, &walls, &levi),
            walls,
            levi,
            count: 0,
            weights: 0,
        });
        c.count += 1;
        c.weights += weights;
    }
    let mut classes: Vec<CensusClass> = classes.into_values().collect();
    classes.sort_by_key(|c| (c.walls.len(), c.walls.clone()));
    Ok(BlockCensus {
        kind: rs.kind(),
        rank: r,
        l,
        blocks: classes.iter().map(|c| c.count).sum(),
        restricted_weights: total,
        classes,
        warnings: l_warnings(rs, l),
    })
}

/// `c_{a,b} = C(a+b, b) / (a+b)`.
pub fn rational_catalan(a: u64, b: u64) -> Result<u128> {
    let n = a + b;
    if n == 0 {
        return Err(Error::InvalidInput("c_{0,0} is undefined".into()));
    }
    let mut c = BigUint::from(1u32);
    for i in 0..b {
        c = c * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    let (q, rem) = c.div_rem(&BigUint::from(n));
    if !rem.is_zero() {
        return Err(Error::InvalidInput(format!("C({n},{b}) is not divisible by {n}")));
    }
    q.to_u128()
        .ok_or_else(|| Error::InvalidInput("rational Catalan number overflows".into()))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassDimension {
    pub label: String,
    pub levi: Vec<usize>,
    pub count: u64,
    pub block_dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CenterDimension {
    pub census: BlockCensus,
    pub terms: Vec<ClassDimension>,
    pub total: u128,
    /// `c_{(n+1)l-n, n}` with `n = rank + 1`, type A only.
    pub catalan: Option<u128>,
}

/// Whole-center dimension; `block_dim(levi)` supplies the diamond total of
/// a block with the given Levi (from a cache or a fresh computation).
pub fn total_center_dimension<F>(rs: &RootSystem, l: u64, mut block_dim: F) -> Result<CenterDimension>
where
    F: FnMut(&[usize]) -> Result<u64>,
{
    let census = restricted_weight_census(rs, l)?;
    let mut terms = Vec::new();
    let mut total: u128 = 0;
    for c in &census.classes {
        let Some(levi) = c.levi.clone() else {
            return Err(Error::InvalidInput(format!(
                "block class {} has no Levi representative off the affine wall",
                c.label
            )));
        };
        let d = block_dim(&levi)?;
        total += c.count as u128 * d as u128;
        terms.push(ClassDimension {
            label: c.label.clone(),
            levi,
            count: c.count,
            block_dim: d,
        });
    }
    let catalan = match rs.kind() {
        CartanType::A => {
            let n = rs.rank() as u64 + 1;
            ((n + 1) * l)
                .checked_sub(n)
                .and_then(|a| rational_catalan(a, n).ok())
        }
        _ => None,
    };
    Ok(CenterDimension {
        census,
        terms,
        total,
        catalan,
    })
}
