//! Borel-Weil-Bott for line bundles on `G/B` and Schur bundles on Grassmannians.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::rootsys::{RootSystem, Weight};

/// Weakly decreasing integer sequence; negative parts allowed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidInput(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition { parts })
    }

    pub fn zero(n: usize) -> Self {
        Partition { parts: vec![0; n] }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&x| x == 0)
    }

    /// Highest weight of the dual: `(-λ_n, ..., -λ_1)`.
    pub fn dual(&self) -> Self {
        Partition {
            parts: self.parts.iter().rev().map(|x| -x).collect(),
        }
    }
}

impl std::fmt::Display for Partition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `(degree, ν)` of the only nonzero cohomology of the line bundle `λ` on `G/B`.
pub fn bott_line_bundle(rs: &RootSystem, lambda: Weight) -> Option<(usize, Weight)> {
    rs.dominant_dot_representative(lambda)
        .map(|(w, nu)| (rs.element(w).length, nu))
}

/// Result of sorting `ν' = (α, β) + (N, ..., 1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GrassmannianBott {
    pub shifted: Vec<i64>,
    /// `None` when `ν'` has a repeated entry and every cohomology group vanishes.
    pub result: Option<(usize, Partition)>,
}

/// Cohomology of `S_α(Q) ⊗ S_β(S)` on `Gr(k, N)`, `Q` of rank `N-k`, `S` of rank `k`.
pub fn bwb_grassmannian(n: usize, k: usize, alpha: &Partition, beta: &Partition) -> Result<GrassmannianBott> {
    if k > n || alpha.len() != n - k || beta.len() != k {
        return Err(Error::InvalidInput(format!(
            "expected {} Q-side and {k} S-side parts, got {} and {}",
            n.saturating_sub(k),
            alpha.len(),
            beta.len()
        )));
    }
    let shifted: Vec<i64> = alpha
        .parts()
        .iter()
        .chain(beta.parts())
        .enumerate()
        .map(|(i, &x)| x + (n - i) as i64)
        .collect();
    let mut sorted = shifted.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Ok(GrassmannianBott {
            shifted,
            result: None,
        });
    }
    let inversions = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .filter(|&(i, j)| shifted[i] < shifted[j])
        .count();
    let nu = sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| x - (n - i) as i64)
        .collect();
    Ok(GrassmannianBott {
        shifted,
        result: Some((inversions, Partition { parts: nu })),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::CartanType;

    fn p(v: &[i64]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn line_bundles() {
        let rs = RootSystem::new(CartanType::B, 2).unwrap();
        assert_eq!(bott_line_bundle(&rs, Weight::zero(2)), Some((0, Weight::zero(2))));
        let a1 = rs.simple_root(0);
        assert_eq!(bott_line_bundle(&rs, -a1), Some((1, Weight::zero(2))));
        assert_eq!(bott_line_bundle(&rs, -rs.rho()), None);
    }

    #[test]
    fn worked_gr24_example() {
        let q = p(&[2, 0]).dual();
        assert_eq!(q, p(&[0, -2]));
        let r = bwb_grassmannian(4, 2, &q, &p(&[1, 1])).unwrap();
        assert_eq!(r.shifted, vec![4, 1, 3, 2]);
        assert_eq!(r.result, Some((2, Partition::zero(4))));
    }

    #[test]
    fn repeated_entries_vanish() {
        let r = bwb_grassmannian(4, 2, &p(&[0, -2]), &p(&[2, 0])).unwrap();
        assert_eq!(r.shifted, vec![4, 1, 4, 1]);
        assert_eq!(r.result, None);
    }

    #[test]
    fn structure_sheaf() {
        let r = bwb_grassmannian(4, 2, &Partition::zero(2), &Partition::zero(2)).unwrap();
        assert_eq!(r.result, Some((0, Partition::zero(4))));
    }

    #[test]
    fn bad_inputs() {
        assert!(Partition::new(vec![0, 1]).is_err());
        assert!(bwb_grassmannian(4, 2, &p(&[1]), &p(&[1, 1])).is_err());
    }

    #[test]
    fn grassmannian_matches_line_bundles_on_projective_line() {
        // Gr(1, 2) = P^1: S_(a)(Q) ⊗ S_(b)(S) is O(a - b)
        let rs = RootSystem::new(CartanType::A, 1).unwrap();
        for a in -4i64..4 {
            for b in -4i64..4 {
                let r = bwb_grassmannian(2, 1, &p(&[a]), &p(&[b])).unwrap();
                let lb = bott_line_bundle(&rs, Weight::from_slice(&[(a - b) as i32]));
                match (r.result, lb) {
                    (None, None) => {}
                    (Some((d, nu)), Some((d2, nu2))) => {
                        assert_eq!(d, d2);
                        assert_eq!((nu.parts()[0] - nu.parts()[1]) as i32, nu2[0]);
                    }
                    other => panic!("mismatch at ({a}, {b}): {other:?}"),
                }
            }
        }
    }
}
