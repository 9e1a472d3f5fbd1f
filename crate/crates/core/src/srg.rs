//! Strongly regular graph recognition and parameter arithmetic.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Parameter quadruple `(n, k, lambda, mu)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// Validates `0 <= k < n`, `lambda, mu <= k` and the counting identity
    /// `k(k - lambda - 1) = (n - k - 1) mu`.
    pub fn new(n: i64, k: i64, lambda: i64, mu: i64) -> Result<Self> {
        let bad = Error::InfeasibleParams { n, k, lambda, mu };
        if k < 0 || lambda < 0 || mu < 0 || k >= n || lambda > k || mu > k {
            return Err(bad);
        }
        // Complete graphs have no non-adjacent pairs, so the identity says nothing.
        if k != n - 1 && k * (k - lambda - 1) != (n - k - 1) * mu {
            return Err(bad);
        }
        Ok(SrgParams { n: n as usize, k: k as usize, lambda: lambda as usize, mu: mu as usize })
    }

    pub fn as_tuple(&self) -> (usize, usize, usize, usize) {
        (self.n, self.k, self.lambda, self.mu)
    }

    /// Parameters of the complementary graph.
    pub fn complement(&self) -> Result<SrgParams> {
        let (n, k, l, m) = (self.n as i64, self.k as i64, self.lambda as i64, self.mu as i64);
        let ck = n - k - 1;
        // Complete and edgeless graphs swap; keep their lambda/mu conventions
        // rather than the formula, which is meaningless without both pair kinds.
        if ck == 0 {
            return Ok(SrgParams { n: self.n, k: 0, lambda: 0, mu: 0 });
        }
        if ck == n - 1 {
            return Ok(SrgParams { n: self.n, k: self.n - 1, lambda: self.n.saturating_sub(2), mu: 0 });
        }
        let cl = n - 2 * k + m - 2;
        let cm = n - 2 * k + l;
        if ck < 0 || cl < 0 || cm < 0 {
            return Err(Error::InfeasibleResult { n, k, lambda: l, mu: m });
        }
        SrgParams::new(n, ck, cl, cm).map_err(|_| Error::InfeasibleResult { n, k, lambda: l, mu: m })
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.n, self.k, self.lambda, self.mu)
    }
}

/// Free-function form of [`SrgParams::complement`].
pub fn complement_params(p: &SrgParams) -> Result<SrgParams> {
    p.complement()
}

/// The quadruple of `g` if it is strongly regular.
///
/// Complete graphs report `(n, n-1, n-2, 0)`; graphs without adjacent pairs
/// report `lambda = 0`, graphs without non-adjacent pairs report `mu = 0`.
/// The empty graph has no parameters.
pub fn srg_params(g: &Graph) -> Option<SrgParams> {
    let n = g.n();
    if n == 0 {
        return None;
    }
    let k = g.degree(0);
    if (1..n).any(|v| g.degree(v) != k) {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for u in 0..n {
        for v in u + 1..n {
            let c = g.common_neighbours(u, v);
            let slot = if g.has_edge(u, v) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(c),
                Some(x) if x != c => return None,
                _ => {}
            }
        }
    }
    let p = SrgParams::new(n as i64, k as i64, lambda.unwrap_or(0) as i64, mu.unwrap_or(0) as i64);
    Some(p.expect("parameters measured on a strongly regular graph satisfy the counting identity"))
}

/// `r` parts of size `m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct MultipartiteShape {
    pub r: usize,
    pub m: usize,
}

/// Whether `g` and its complement are both connected. Complete and edgeless
/// graphs are never primitive.
pub fn is_primitive(g: &Graph) -> Result<bool> {
    let p = srg_params(g).ok_or(Error::NotSrg)?;
    if p.k == 0 || p.k == p.n - 1 {
        return Ok(false);
    }
    Ok(g.is_connected() && g.complement().is_connected())
}

/// Recovers `K_{r x m}` with `r >= 2` from the components of the complement.
pub fn multipartite_decomposition(g: &Graph) -> Option<MultipartiteShape> {
    let co = g.complement();
    let parts = co.components();
    let r = parts.len();
    if r < 2 {
        return None;
    }
    let m = parts[0].len();
    for part in &parts {
        if part.len() != m {
            return None;
        }
        // each part must be independent in g, i.e. a clique in the complement
        for (i, &u) in part.iter().enumerate() {
            if part[i + 1..].iter().any(|&v| g.has_edge(u, v)) {
                return None;
            }
        }
    }
    Some(MultipartiteShape { r, m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_multipartite, named_family, FamilyKind};
    use crate::graph::{complete, cycle, disjoint_union, path};

    #[test]
    fn params_of_small_families() {
        let j5 = named_family(FamilyKind::Johnson2, 5).unwrap();
        assert_eq!(srg_params(&j5).unwrap().as_tuple(), (10, 6, 3, 4));
        let h3 = named_family(FamilyKind::Hamming2, 3).unwrap();
        assert_eq!(srg_params(&h3).unwrap().as_tuple(), (9, 4, 1, 2));
        assert_eq!(srg_params(&path(4)), None);
        assert_eq!(srg_params(&complete(5)).unwrap().as_tuple(), (5, 4, 3, 0));
        assert_eq!(srg_params(&Graph::empty(4).unwrap()).unwrap().as_tuple(), (4, 0, 0, 0));
        let two_k3 = disjoint_union(&complete(3), &complete(3));
        assert_eq!(srg_params(&two_k3).unwrap().as_tuple(), (6, 2, 1, 0));
    }

    #[test]
    fn complement_params_examples() {
        let petersen = SrgParams::new(10, 3, 0, 1).unwrap();
        assert_eq!(petersen.complement().unwrap().as_tuple(), (10, 6, 3, 4));
        let c5 = SrgParams::new(5, 2, 0, 1).unwrap();
        assert_eq!(c5.complement().unwrap(), c5);
        for r in 2..=5i64 {
            for m in 1..=5i64 {
                let p = SrgParams::new(r * m, (r - 1) * m, (r - 2) * m, (r - 1) * m).unwrap();
                let c = p.complement().unwrap();
                if m == 1 {
                    assert_eq!(c.as_tuple(), ((r * m) as usize, 0, 0, 0));
                } else {
                    assert_eq!(c.as_tuple(), ((r * m) as usize, (m - 1) as usize, (m - 2) as usize, 0));
                }
            }
        }
    }

    #[test]
    fn complement_params_rejects_negative_components() {
        // n - 2k + lambda < 0
        let p = SrgParams { n: 10, k: 8, lambda: 0, mu: 8 };
        assert!(matches!(p.complement(), Err(Error::InfeasibleResult { .. })));
    }

    #[test]
    fn infeasible_quadruples_rejected() {
        assert!(SrgParams::new(10, 3, 0, 2).is_err());
        assert!(SrgParams::new(5, 5, 0, 0).is_err());
        assert!(SrgParams::new(9, 8, 7, 12).is_err());
    }

    #[test]
    fn primitivity() {
        assert!(is_primitive(&cycle(5)).unwrap());
        assert!(!is_primitive(&complete_multipartite(3, 2).unwrap()).unwrap());
        let two_k3 = disjoint_union(&complete(3), &complete(3));
        assert!(!is_primitive(&two_k3).unwrap());
        assert!(!is_primitive(&complete(4)).unwrap());
        assert_eq!(is_primitive(&path(4)), Err(Error::NotSrg));
    }

    #[test]
    fn multipartite_shapes() {
        let j4 = named_family(FamilyKind::Johnson2, 4).unwrap();
        assert_eq!(multipartite_decomposition(&j4), Some(MultipartiteShape { r: 3, m: 2 }));
        assert_eq!(multipartite_decomposition(&complete(4)), Some(MultipartiteShape { r: 4, m: 1 }));
        let petersen = named_family(FamilyKind::Petersen, 0).unwrap();
        assert_eq!(multipartite_decomposition(&petersen), None);
        // K_{1,2}: complement components of unequal size
        assert_eq!(multipartite_decomposition(&path(3)), None);
    }
}
