//! Cohomology of equivariant bundles and formal Hodge diamonds.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use crate::bgg::complex_cohomology;
pub use crate::linalg::exact_rank;

use crate::bgg::BggEngine;
use crate::chevalley::ChevalleyBasis;
use crate::error::{Error, Result};
use crate::pmodules::{GradedPieceContext, WeightedBModule};
use crate::rootsys::{CartanType, RootSystem, Weight};

pub const DIAMOND_SCHEMA_VERSION: u32 = 1;

/// `H^*(G/B, G ×_B E)` by isotype.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SheafCohomology {
    /// `ν ↦ [mult in H^0, H^1, ...]`, only `ν` with some nonzero multiplicity.
    pub multiplicities: BTreeMap<Weight, Vec<usize>>,
    /// Total dimension per degree.
    pub totals: Vec<u64>,
}

pub fn sheaf_cohomology(engine: &BggEngine<'_>, e: &WeightedBModule) -> Result<SheafCohomology> {
    let rs = engine.root_system();
    let top = rs.weyl_elements_by_length().len() - 1;
    let nus: Vec<Weight> = crate::bgg::candidate_dominants(rs, e).into_iter().collect();
    let per_nu: Vec<(Weight, Vec<usize>)> = nus
        .into_par_iter()
        .map(|nu| Ok((nu, complex_cohomology(&engine.assemble(e, nu, 0, top)?))))
        .collect::<Result<_>>()?;
    let mut totals = vec![0u64; top + 1];
    let mut multiplicities = BTreeMap::new();
    for (nu, h) in per_nu {
        if h.iter().all(|&x| x == 0) {
            continue;
        }
        let d = rs.weyl_dimension(nu)?;
        for (t, &x) in totals.iter_mut().zip(&h) {
            *t += x as u64 * d;
        }
        multiplicities.insert(nu, h);
    }
    Ok(SheafCohomology {
        multiplicities,
        totals,
    })
}

/// Isotypic decomposition of `H^i` alone. Only dominant `ν` with a nonzero
/// length-`i` term are visited, and only lengths `i-1..=i+1` are assembled.
pub fn sheaf_cohomology_in_degree(
    engine: &BggEngine<'_>,
    e: &WeightedBModule,
    i: usize,
) -> Result<BTreeMap<Weight, usize>> {
    let rs = engine.root_system();
    let mut nus: Vec<Weight> = e
        .weight_list()
        .into_iter()
        .filter_map(|mu| rs.dominant_dot_representative(mu))
        .filter(|&(w, _)| rs.element(w).length == i)
        .map(|(_, nu)| nu)
        .collect();
    nus.sort();
    nus.dedup();
    let found: Vec<(Weight, usize)> = nus
        .into_par_iter()
        .map(|nu| {
            let cx = engine.assemble(e, nu, i.saturating_sub(1), i + 1)?;
            Ok((nu, cx.cohomology_at(i)))
        })
        .collect::<Result<_>>()?;
    Ok(found.into_iter().filter(|t| t.1 > 0).collect())
}

/// One entry `h^{i,j}` with its isotypic decomposition.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiamondEntry {
    pub i: usize,
    pub j: usize,
    /// `C^*`-degree `-i-j`.
    pub degree: i64,
    pub isotypes: Vec<Isotype>,
    pub dim: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Isotype {
    pub nu: Weight,
    pub mult: usize,
}

impl DiamondEntry {
    pub fn new(rs: &RootSystem, i: usize, j: usize, isotypes: &BTreeMap<Weight, usize>) -> Result<Self> {
        let mut dim = 0;
        for (&nu, &m) in isotypes {
            dim += m as u64 * rs.weyl_dimension(nu)?;
        }
        Ok(DiamondEntry {
            i,
            j,
            degree: -((i + j) as i64),
            isotypes: isotypes
                .iter()
                .filter(|t| *t.1 > 0)
                .map(|(&nu, &mult)| Isotype { nu, mult })
                .collect(),
            dim,
        })
    }

    /// `3·L₀ + 1·L[1,0]`, or `0`.
    pub fn format_isotypes(&self) -> String {
        if self.isotypes.is_empty() {
            return "0".into();
        }
        self.isotypes
            .iter()
            .map(|t| {
                if t.nu.is_zero() {
                    format!("{}·L₀", t.mult)
                } else {
                    format!("{}·L{}", t.mult, t.nu)
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn only_trivial(&self) -> bool {
        self.isotypes.iter().all(|t| t.nu.is_zero())
    }
}

/// Formal Hodge diamond of `T^*(G/P)`.
///
/// Entries are indexed by `(i, j)` with `i + j = 2k` even, `0 <= k <= n`,
/// and `i <= k` (rows `k`, columns `c = (j - i)/2 <= k`), `n = dim G/P`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HodgeDiamond {
    pub schema_version: u32,
    #[serde(rename = "type")]
    pub kind: CartanType,
    pub rank: usize,
    pub levi: Vec<usize>,
    pub dim_x: usize,
    pub entries: Vec<DiamondEntry>,
    pub total: u64,
}

impl HodgeDiamond {
    /// Admissible `(i, j)` of a diamond with `dim X = n`, by increasing `i + j`.
    pub fn positions(n: usize) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for k in 0..=n {
            for c in 0..=k {
                out.push((k - c, k + c));
            }
        }
        out
    }

    pub fn from_entries(
        kind: CartanType,
        rank: usize,
        levi: &[usize],
        dim_x: usize,
        mut entries: Vec<DiamondEntry>,
    ) -> Result<Self> {
        entries.sort_by_key(|e| (e.i + e.j, e.j));
        let want = Self::positions(dim_x);
        let have: Vec<(usize, usize)> = entries.iter().map(|e| (e.i, e.j)).collect();
        if want != have {
            return Err(Error::InvalidInput(
                "diamond entries do not fill the triangle".into(),
            ));
        }
        let total = entries.iter().map(|e| e.dim).sum();
        Ok(HodgeDiamond {
            schema_version: DIAMOND_SCHEMA_VERSION,
            kind,
            rank,
            levi: levi.to_vec(),
            dim_x,
            entries,
            total,
        })
    }

    pub fn entry(&self, i: usize, j: usize) -> Option<&DiamondEntry> {
        self.entries.iter().find(|e| e.i == i && e.j == j)
    }

    /// `h^{i,j}`, zero outside the triangle.
    pub fn h(&self, i: usize, j: usize) -> u64 {
        self.entry(i, j).map_or(0, |e| e.dim)
    }

    /// Rows `k = (i+j)/2`, columns `c = (j-i)/2`, as printed in tables.
    pub fn grid(&self) -> Vec<Vec<u64>> {
        (0..=self.dim_x)
            .map(|k| (0..=k).map(|c| self.h(k - c, k + c)).collect())
            .collect()
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let d: HodgeDiamond = serde_json::from_str(s)?;
        if d.schema_version != DIAMOND_SCHEMA_VERSION {
            return Err(Error::Cache(format!(
                "schema version {} (expected {DIAMOND_SCHEMA_VERSION})",
                d.schema_version
            )));
        }
        let check = Self::from_entries(d.kind, d.rank, &d.levi, d.dim_x, d.entries.clone())?;
        if check.total != d.total {
            return Err(Error::Cache("total does not match entries".into()));
        }
        Ok(d)
    }
}

/// One diamond entry from scratch.
pub fn diamond_entry(
    engine: &BggEngine<'_>,
    ctx: &GradedPieceContext<'_>,
    i: usize,
    j: usize,
) -> Result<DiamondEntry> {
    let rs = engine.root_system();
    if !(i + j).is_multiple_of(2) || i > j || j > 2 * ctx.dim_x() {
        return Err(Error::InvalidInput(format!(
            "({i}, {j}) is not a diamond position"
        )));
    }
    let piece = ctx.piece(j, (i + j) / 2);
    let iso = sheaf_cohomology_in_degree(engine, &piece, i)?;
    DiamondEntry::new(rs, i, j, &iso)
}

pub fn hodge_diamond(rs: &RootSystem, basis: &ChevalleyBasis, levi: &[usize]) -> Result<HodgeDiamond> {
    hodge_diamond_with(rs, basis, levi, &[], |_| {})
}

/// Diamond with some entries already known; `on_entry` sees each newly
/// computed entry as soon as it is done (entries run concurrently).
pub fn hodge_diamond_with<F>(
    rs: &RootSystem,
    basis: &ChevalleyBasis,
    levi: &[usize],
    known: &[DiamondEntry],
    on_entry: F,
) -> Result<HodgeDiamond>
where
    F: Fn(&DiamondEntry) + Sync,
{
    let ctx = GradedPieceContext::new(rs, basis, levi)?;
    let engine = BggEngine::new(rs, basis);
    let n = ctx.dim_x();
    let todo: Vec<(usize, usize)> = HodgeDiamond::positions(n)
        .into_iter()
        .filter(|&(i, j)| !known.iter().any(|e| e.i == i && e.j == j))
        .collect();
    let mut entries: Vec<DiamondEntry> = todo
        .into_par_iter()
        .map(|(i, j)| {
            let e = diamond_entry(&engine, &ctx, i, j)?;
            on_entry(&e);
            Ok(e)
        })
        .collect::<Result<_>>()?;
    entries.extend(known.iter().filter(|e| e.i + e.j <= 2 * n).cloned());
    let mut levi = levi.to_vec();
    levi.sort_unstable();
    levi.dedup();
    HodgeDiamond::from_entries(rs.kind(), rs.rank(), &levi, n, entries)
}
