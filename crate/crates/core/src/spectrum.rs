//! Exact enumeration of the Neumann spectrum of the square.
//!
//! Every eigenvalue is an integer `p² + q²` with `p, q ≥ 0`; the ordered pair
//! `(p, q)` contributes one dimension (`cos px cos qy`). Nothing here touches
//! floating point except the comparison against `π/4 · λ` in [`weyl_check`].

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use serde::{Deserialize, Serialize};

/// A lattice point `(p, q)`, the atom of the spectrum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 2]", into = "[u32; 2]")]
pub struct LatticePair {
    pub p: u32,
    pub q: u32,
}

impl LatticePair {
    pub const fn new(p: u32, q: u32) -> Self {
        Self { p, q }
    }

    pub const fn value(self) -> u64 {
        (self.p as u64) * (self.p as u64) + (self.q as u64) * (self.q as u64)
    }

    pub const fn swapped(self) -> Self {
        Self::new(self.q, self.p)
    }

    pub fn in_subspace(self, tag: SubspaceTag) -> bool {
        match tag {
            SubspaceTag::Full => true,
            SubspaceTag::ARot => (self.p + self.q) % 2 == 1,
            SubspaceTag::SRot => (self.p + self.q).is_multiple_of(2),
            SubspaceTag::AMir => self.p % 2 == 1 && self.q % 2 == 1,
        }
    }
}

impl From<[u32; 2]> for LatticePair {
    fn from([p, q]: [u32; 2]) -> Self {
        Self::new(p, q)
    }
}

impl From<LatticePair> for [u32; 2] {
    fn from(pair: LatticePair) -> Self {
        [pair.p, pair.q]
    }
}

impl fmt::Display for LatticePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.p, self.q)
    }
}

/// Symmetry subspaces of `L²((0,π)²)` and the parity condition on `(p, q)`
/// selecting the basis functions they contain.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum SubspaceTag {
    /// Every eigenfunction.
    Full,
    /// `ψ(π−x, π−y) = −ψ(x, y)`; `p + q` odd.
    ARot,
    /// `ψ(π−x, π−y) = ψ(x, y)`; `p + q` even.
    SRot,
    /// Antisymmetric under both mirrors; `p` and `q` odd.
    AMir,
}

impl SubspaceTag {
    pub const ALL: [SubspaceTag; 4] = [Self::Full, Self::ARot, Self::SRot, Self::AMir];
}

/// A 1-based inclusive index range.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IndexRange {
    pub lo: u32,
    pub hi: u32,
}

impl IndexRange {
    pub const fn new(lo: u32, hi: u32) -> Self {
        Self { lo, hi }
    }

    pub const fn len(self) -> u32 {
        self.hi - self.lo + 1
    }

    pub const fn is_empty(self) -> bool {
        false
    }

    pub const fn contains(self, n: u32) -> bool {
        self.lo <= n && n <= self.hi
    }
}

impl fmt::Display for IndexRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.lo == self.hi {
            write!(f, "{}", self.lo)
        } else {
            write!(f, "{}-{}", self.lo, self.hi)
        }
    }
}

/// One distinct eigenvalue of a (sub)spectrum with its lattice pairs and its
/// position in the sequence counted with multiplicity.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct EigenvalueEntry {
    pub lambda: u64,
    /// Ordered by decreasing `p`.
    pub pairs: Vec<LatticePair>,
    pub n_lo: u32,
    pub n_hi: u32,
}

impl EigenvalueEntry {
    pub fn multiplicity(&self) -> u32 {
        self.pairs.len() as u32
    }

    pub fn range(&self) -> IndexRange {
        IndexRange::new(self.n_lo, self.n_hi)
    }

    pub fn is_odd(&self) -> bool {
        self.lambda % 2 == 1
    }

    /// The eigenspace is spanned by `(p,q)` and `(q,p)` for a single `p > q`.
    pub fn two_dimensional_pair(&self) -> Option<LatticePair> {
        match self.pairs.as_slice() {
            [a, b] if a.p > a.q && *b == a.swapped() => Some(*a),
            _ => None,
        }
    }
}

/// Every lattice pair with `p² + q² ≤ lambda_max`, grouped by value.
fn lattice_by_value(lambda_max: u64) -> BTreeMap<u64, Vec<LatticePair>> {
    let mut groups: BTreeMap<u64, Vec<LatticePair>> = BTreeMap::new();
    let mut p: u64 = 0;
    while p * p <= lambda_max {
        let mut q: u64 = 0;
        while p * p + q * q <= lambda_max {
            let pair = LatticePair::new(p as u32, q as u32);
            groups.entry(pair.value()).or_default().push(pair);
            q += 1;
        }
        p += 1;
    }
    for pairs in groups.values_mut() {
        pairs.sort_by_key(|pair| std::cmp::Reverse(pair.p));
    }
    groups
}

/// All distinct eigenvalues `≤ lambda_max` of the tagged subspace, with
/// cumulative 1-based index ranges inside that subspace.
pub fn enumerate_spectrum(lambda_max: u64, tag: SubspaceTag) -> Vec<EigenvalueEntry> {
    let mut next = 1u32;
    lattice_by_value(lambda_max)
        .into_iter()
        .filter_map(|(lambda, pairs)| {
            let pairs: Vec<_> = pairs.into_iter().filter(|pr| pr.in_subspace(tag)).collect();
            if pairs.is_empty() {
                return None;
            }
            let n_lo = next;
            next += pairs.len() as u32;
            Some(EigenvalueEntry {
                lambda,
                pairs,
                n_lo,
                n_hi: next - 1,
            })
        })
        .collect()
}

/// `N(λ)`: eigenvalues strictly below `lambda`, counted with multiplicity.
pub fn counting_function(lambda: f64) -> u64 {
    if lambda <= 0.0 {
        return 0;
    }
    let mut total = 0u64;
    let mut p = 0u64;
    while ((p * p) as f64) < lambda {
        let rest = lambda - (p * p) as f64;
        // number of q ≥ 0 with q² < rest
        let mut q = rest.sqrt().floor() as u64 + 1;
        while q > 0 && ((q * q) as f64) >= rest {
            q -= 1;
        }
        while (((q + 1) * (q + 1)) as f64) < rest {
            q += 1;
        }
        total += q + 1;
        p += 1;
    }
    total
}

/// Outcome of checking `N(λ) > π λ / 4` at every eigenvalue up to a bound.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct WeylReport {
    pub holds: bool,
    /// Minimum of `N(λ) − π λ / 4` over the checked eigenvalues.
    pub worst_margin: f64,
    pub worst_lambda: u64,
    pub checked: usize,
}

/// Checks the lower counting bound at each distinct positive eigenvalue
/// `≤ lambda_max`. `N` is constant on `(λ_k, λ_{k+1}]` while `π λ / 4` grows,
/// so the right endpoints are the only places the bound can first fail.
pub fn weyl_check(lambda_max: u64) -> WeylReport {
    let mut report = WeylReport {
        holds: true,
        worst_margin: f64::INFINITY,
        worst_lambda: 0,
        checked: 0,
    };
    for entry in enumerate_spectrum(lambda_max, SubspaceTag::Full) {
        if entry.lambda == 0 {
            continue;
        }
        let below = (entry.n_lo - 1) as f64;
        let margin = below - PI / 4.0 * entry.lambda as f64;
        report.checked += 1;
        if margin < report.worst_margin {
            report.worst_margin = margin;
            report.worst_lambda = entry.lambda;
        }
        if 4.0 * below <= PI * entry.lambda as f64 {
            report.holds = false;
        }
    }
    report
}

/// `max { p : p² + q² = λ }` over the entry's pairs.
pub fn max_p(entry: &EigenvalueEntry) -> u32 {
    entry.pairs.iter().map(|pr| pr.p).max().unwrap_or(0)
}

/// Position of `lambda` in the tagged subspace sequence, if it occurs there.
pub fn subspace_index_range(lambda: u64, tag: SubspaceTag) -> Option<IndexRange> {
    enumerate_spectrum(lambda, tag)
        .last()
        .filter(|e| e.lambda == lambda)
        .map(EigenvalueEntry::range)
}

/// The full spectrum up to a bound together with its three subspace spectra,
/// for repeated lookups.
#[derive(Debug, Clone)]
pub struct Spectrum {
    lambda_max: u64,
    full: Vec<EigenvalueEntry>,
    arot: BTreeMap<u64, IndexRange>,
    srot: BTreeMap<u64, IndexRange>,
    amir: BTreeMap<u64, IndexRange>,
}

impl Spectrum {
    pub fn new(lambda_max: u64) -> Self {
        let ranges = |tag| {
            enumerate_spectrum(lambda_max, tag)
                .into_iter()
                .map(|e| (e.lambda, e.range()))
                .collect()
        };
        Self {
            lambda_max,
            full: enumerate_spectrum(lambda_max, SubspaceTag::Full),
            arot: ranges(SubspaceTag::ARot),
            srot: ranges(SubspaceTag::SRot),
            amir: ranges(SubspaceTag::AMir),
        }
    }

    pub fn lambda_max(&self) -> u64 {
        self.lambda_max
    }

    pub fn entries(&self) -> &[EigenvalueEntry] {
        &self.full
    }

    /// The entry whose index range contains `n`.
    pub fn entry_for_index(&self, n: u32) -> Option<&EigenvalueEntry> {
        let pos = self.full.partition_point(|e| e.n_hi < n);
        self.full.get(pos).filter(|e| e.range().contains(n))
    }

    pub fn entry_for_lambda(&self, lambda: u64) -> Option<&EigenvalueEntry> {
        self.full
            .binary_search_by_key(&lambda, |e| e.lambda)
            .ok()
            .map(|i| &self.full[i])
    }

    pub fn subspace_range(&self, lambda: u64, tag: SubspaceTag) -> Option<IndexRange> {
        match tag {
            SubspaceTag::Full => self.entry_for_lambda(lambda).map(EigenvalueEntry::range),
            SubspaceTag::ARot => self.arot.get(&lambda).copied(),
            SubspaceTag::SRot => self.srot.get(&lambda).copied(),
            SubspaceTag::AMir => self.amir.get(&lambda).copied(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(entries: &[EigenvalueEntry]) -> Vec<(u64, u32, u32, u32)> {
        entries
            .iter()
            .map(|e| (e.lambda, e.multiplicity(), e.n_lo, e.n_hi))
            .collect()
    }

    #[test]
    fn first_nine_indices() {
        let entries = enumerate_spectrum(8, SubspaceTag::Full);
        assert_eq!(
            summary(&entries),
            vec![
                (0, 1, 1, 1),
                (1, 2, 2, 3),
                (2, 1, 4, 4),
                (4, 2, 5, 6),
                (5, 2, 7, 8),
                (8, 1, 9, 9)
            ]
        );
        assert_eq!(
            entries[4].pairs,
            vec![LatticePair::new(2, 1), LatticePair::new(1, 2)]
        );
    }

    #[test]
    fn zero_only() {
        let entries = enumerate_spectrum(0, SubspaceTag::Full);
        assert_eq!(entries.len(), 1);
        assert_eq!(entries[0].pairs, vec![LatticePair::new(0, 0)]);
        assert_eq!((entries[0].n_lo, entries[0].n_hi), (1, 1));
        assert_eq!(enumerate_spectrum(0, SubspaceTag::SRot).len(), 1);
        assert!(enumerate_spectrum(0, SubspaceTag::ARot).is_empty());
    }

    #[test]
    fn arot_prefix() {
        let entries = enumerate_spectrum(5, SubspaceTag::ARot);
        assert_eq!(summary(&entries), vec![(1, 2, 1, 2), (5, 2, 3, 4)]);
    }

    #[test]
    fn counting_examples() {
        assert_eq!(counting_function(1.0), 1);
        assert_eq!(counting_function(5.0), 6);
        assert_eq!(counting_function(245.0), 208);
        assert_eq!(counting_function(0.0), 0);
        assert_eq!(counting_function(0.5), 1);
        assert_eq!(counting_function(5.0001), 8);
    }

    #[test]
    fn counting_matches_index_of_245() {
        let spectrum = Spectrum::new(245);
        let entry = spectrum.entry_for_lambda(245).unwrap();
        assert_eq!(entry.n_lo - 1, 208);
    }

    #[test]
    fn max_p_examples() {
        let s = Spectrum::new(100);
        assert_eq!(max_p(s.entry_for_lambda(5).unwrap()), 2);
        assert_eq!(max_p(s.entry_for_lambda(25).unwrap()), 5);
        assert_eq!(max_p(s.entry_for_lambda(98).unwrap()), 7);
    }

    #[test]
    fn subspace_ranges() {
        assert_eq!(
            subspace_index_range(5, SubspaceTag::ARot),
            Some(IndexRange::new(3, 4))
        );
        assert_eq!(
            subspace_index_range(2, SubspaceTag::AMir),
            Some(IndexRange::new(1, 1))
        );
        assert_eq!(
            subspace_index_range(50, SubspaceTag::SRot),
            Some(IndexRange::new(22, 24))
        );
        assert_eq!(subspace_index_range(5, SubspaceTag::SRot), None);
        assert_eq!(subspace_index_range(89, SubspaceTag::AMir), None);
        let s = Spectrum::new(245);
        for tag in SubspaceTag::ALL {
            for lambda in [1, 2, 5, 10, 25, 50, 130, 225] {
                assert_eq!(
                    s.subspace_range(lambda, tag),
                    subspace_index_range(lambda, tag)
                );
            }
        }
    }

    #[test]
    fn weyl_small() {
        let r = weyl_check(1);
        assert!(r.holds);
        assert_eq!(r.worst_lambda, 1);
        assert!((r.worst_margin - (1.0 - PI / 4.0)).abs() < 1e-15);
        assert!(weyl_check(245).holds);
    }

    #[test]
    fn index_lookup() {
        let s = Spectrum::new(245);
        assert_eq!(s.entry_for_index(1).unwrap().lambda, 0);
        assert_eq!(s.entry_for_index(26).unwrap().lambda, 25);
        assert_eq!(s.entry_for_index(208).unwrap().lambda, 244);
        assert_eq!(s.entry_for_index(209).unwrap().lambda, 245);
    }

    #[test]
    fn entry_json_shape() {
        let s = Spectrum::new(5);
        let json = serde_json::to_value(s.entry_for_lambda(5).unwrap()).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"lambda": 5, "pairs": [[2, 1], [1, 2]], "nLo": 7, "nHi": 8})
        );
    }
}
