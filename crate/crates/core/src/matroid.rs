//! Matroids on at most 24 elements represented by their bases.
//!
//! A [`Matroid`] stores its bases as bit masks sorted in increasing order, so
//! two matroids compare equal exactly when they have the same ground-set size
//! and the same basis family. Isomorphism is handled separately in
//! [`crate::canonical`].

use std::fmt;

use crate::canonical::are_isomorphic;
use crate::error::{Error, Result};
use crate::subset::{self, Mask, MAX_ELEMENTS};

/// Ground sets up to this size have the basis-exchange axiom checked on
/// construction and support the Tutte polynomial.
pub const CHECK_CAP: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matroid {
    n: usize,
    rank: usize,
    bases: Vec<Mask>,
}

impl fmt::Debug for Matroid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Matroid")
            .field("n", &self.n)
            .field("rank", &self.rank)
            .field("bases", &self.basis_lists())
            .finish()
    }
}

/// Result of a deletion or contraction together with the relabelling map:
/// `labels[i]` is the element of the original matroid now called `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Minor {
    pub matroid: Matroid,
    pub labels: Vec<usize>,
}

/// Bit table over all subsets of the ground set marking the independent ones.
pub(crate) struct IndependenceTable {
    bits: Vec<u64>,
}

impl IndependenceTable {
    pub(crate) fn new(m: &Matroid) -> Self {
        let total = 1usize << m.n;
        let mut bits = vec![0u64; total.div_ceil(64)];
        for &b in &m.bases {
            bits[b as usize / 64] |= 1 << (b % 64);
        }
        // Every proper subset of a mask is numerically smaller, so a single
        // descending pass propagates independence downwards.
        for mask in (1..total).rev() {
            if bits[mask / 64] >> (mask % 64) & 1 == 1 {
                let mut rest = mask;
                while rest != 0 {
                    let low = rest & rest.wrapping_neg();
                    let sub = mask ^ low;
                    bits[sub / 64] |= 1 << (sub % 64);
                    rest ^= low;
                }
            }
        }
        IndependenceTable { bits }
    }

    #[inline]
    pub(crate) fn is_independent(&self, mask: Mask) -> bool {
        let i = mask as usize;
        self.bits[i / 64] >> (i % 64) & 1 == 1
    }
}

impl Matroid {
    /// Builds and validates a matroid from explicit basis lists.
    pub fn from_bases(n: usize, bases: &[Vec<usize>]) -> Result<Matroid> {
        if n > MAX_ELEMENTS {
            return Err(Error::SizeCap { n, cap: MAX_ELEMENTS });
        }
        let mut masks = Vec::with_capacity(bases.len());
        for b in bases {
            let mut mask: Mask = 0;
            for &e in b {
                if e >= n {
                    return Err(Error::ElementOutOfRange { element: e, n });
                }
                if subset::contains(mask, e) {
                    return Err(Error::MalformedSubset(b.clone()));
                }
                mask |= 1 << e;
            }
            masks.push(mask);
        }
        Matroid::from_masks(n, masks)
    }

    /// Validating constructor over basis masks. The exchange axiom is checked
    /// when `n <= CHECK_CAP`; larger ground sets are only checked for
    /// equicardinality.
    pub fn from_masks(n: usize, mut masks: Vec<Mask>) -> Result<Matroid> {
        if n > MAX_ELEMENTS {
            return Err(Error::SizeCap { n, cap: MAX_ELEMENTS });
        }
        if let Some(&bad) = masks.iter().find(|&&m| m & !subset::full(n) != 0) {
            let element = subset::elements(bad & !subset::full(n)).next().unwrap_or(n);
            return Err(Error::ElementOutOfRange { element, n });
        }
        masks.sort_unstable();
        masks.dedup();
        let first = *masks.first().ok_or(Error::EmptyBases)?;
        let rank = subset::size(first);
        if let Some(&b) = masks.iter().find(|&&b| subset::size(b) != rank) {
            return Err(Error::UnequalBasisSizes(rank, subset::size(b)));
        }
        let m = Matroid { n, rank, bases: masks };
        if n <= CHECK_CAP {
            m.check_exchange()?;
        }
        Ok(m)
    }

    /// Constructor for basis families known to be valid. Sorts and dedups.
    pub(crate) fn from_masks_unchecked(n: usize, mut masks: Vec<Mask>) -> Matroid {
        masks.sort_unstable();
        masks.dedup();
        debug_assert!(!masks.is_empty());
        let rank = subset::size(masks[0]);
        debug_assert!(masks.iter().all(|&b| subset::size(b) == rank));
        Matroid { n, rank, bases: masks }
    }

    fn check_exchange(&self) -> Result<()> {
        for &b1 in &self.bases {
            for &b2 in &self.bases {
                if b1 == b2 {
                    continue;
                }
                for e in subset::elements(b1 & !b2) {
                    let exchanged = subset::elements(b2 & !b1)
                        .any(|f| self.is_basis((b1 & !(1 << e)) | 1 << f));
                    if !exchanged {
                        return Err(Error::ExchangeAxiomViolated {
                            b1: subset::to_vec(b1),
                            b2: subset::to_vec(b2),
                            element: e,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The uniform matroid `U_{r,n}`.
    pub fn uniform(r: usize, n: usize) -> Result<Matroid> {
        if r > n {
            return Err(Error::InvalidRank { r, n });
        }
        if n > MAX_ELEMENTS {
            return Err(Error::SizeCap { n, cap: MAX_ELEMENTS });
        }
        Ok(Matroid { n, rank: r, bases: subset::k_subsets(n, r).collect() })
    }

    /// The Fano plane with lines {0,1,3}, {1,2,4}, ... (translates of {0,1,3} mod 7).
    pub fn fano() -> Matroid {
        let lines: Vec<Mask> = fano_lines();
        let bases = subset::k_subsets(7, 3).filter(|b| !lines.contains(b)).collect();
        Matroid::from_masks_unchecked(7, bases)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bases(&self) -> &[Mask] {
        &self.bases
    }

    pub fn basis_count(&self) -> u64 {
        self.bases.len() as u64
    }

    pub fn is_basis(&self, mask: Mask) -> bool {
        self.bases.binary_search(&mask).is_ok()
    }

    /// Bases as element lists in lexicographic order.
    pub fn basis_lists(&self) -> Vec<Vec<usize>> {
        let mut lists: Vec<Vec<usize>> = self.bases.iter().map(|&b| subset::to_vec(b)).collect();
        lists.sort();
        lists
    }

    pub(crate) fn independence(&self) -> IndependenceTable {
        IndependenceTable::new(self)
    }

    pub fn is_independent(&self, set: Mask) -> bool {
        self.bases.iter().any(|&b| b & set == set)
    }

    pub fn rank_of(&self, set: Mask) -> usize {
        self.bases.iter().map(|&b| subset::size(b & set)).max().unwrap_or(0)
    }

    pub fn dual(&self) -> Matroid {
        let full = subset::full(self.n);
        let bases = self.bases.iter().map(|&b| full & !b).collect();
        Matroid::from_masks_unchecked(self.n, bases)
    }

    /// Elements lying in no basis.
    pub fn loops(&self) -> Mask {
        let union = self.bases.iter().fold(0, |acc, &b| acc | b);
        subset::full(self.n) & !union
    }

    /// Elements lying in every basis.
    pub fn coloops(&self) -> Mask {
        self.bases.iter().fold(subset::full(self.n), |acc, &b| acc & b)
    }

    fn check_element(&self, e: usize) -> Result<()> {
        if e >= self.n {
            Err(Error::ElementOutOfRange { element: e, n: self.n })
        } else {
            Ok(())
        }
    }

    /// `M \ e`. Deleting a coloop is the same as contracting it.
    pub fn delete(&self, e: usize) -> Result<Matroid> {
        Ok(self.delete_with_labels(e)?.matroid)
    }

    /// `M / e`. Contracting a loop is the same as deleting it.
    pub fn contract(&self, e: usize) -> Result<Matroid> {
        Ok(self.contract_with_labels(e)?.matroid)
    }

    pub fn delete_with_labels(&self, e: usize) -> Result<Minor> {
        self.check_element(e)?;
        let bit = 1 << e;
        let avoiding: Vec<Mask> = self.bases.iter().copied().filter(|b| b & bit == 0).collect();
        let bases = if avoiding.is_empty() {
            // e is a coloop
            self.bases.iter().map(|&b| subset::squeeze(b, e)).collect()
        } else {
            avoiding.into_iter().map(|b| subset::squeeze(b, e)).collect()
        };
        Ok(Minor {
            matroid: Matroid::from_masks_unchecked(self.n - 1, bases),
            labels: (0..self.n).filter(|&x| x != e).collect(),
        })
    }

    pub fn contract_with_labels(&self, e: usize) -> Result<Minor> {
        self.check_element(e)?;
        let bit = 1 << e;
        let containing: Vec<Mask> = self.bases.iter().copied().filter(|b| b & bit != 0).collect();
        let bases = if containing.is_empty() {
            // e is a loop
            self.bases.iter().map(|&b| subset::squeeze(b, e)).collect()
        } else {
            containing.into_iter().map(|b| subset::squeeze(b, e)).collect()
        };
        Ok(Minor {
            matroid: Matroid::from_masks_unchecked(self.n - 1, bases),
            labels: (0..self.n).filter(|&x| x != e).collect(),
        })
    }

    /// Minimal dependent sets, ordered by size then mask.
    pub fn circuits(&self) -> Vec<Mask> {
        let table = self.independence();
        let mut out = Vec::new();
        for k in 1..=(self.rank + 1).min(self.n) {
            for c in subset::k_subsets(self.n, k) {
                if !table.is_independent(c)
                    && subset::elements(c).all(|e| table.is_independent(c & !(1 << e)))
                {
                    out.push(c);
                }
            }
        }
        out
    }

    /// `A` together with every element `a` that lies in a circuit contained in `A ∪ {a}`.
    pub fn closure(&self, set: Mask) -> Mask {
        let r = self.rank_of(set);
        let mut cl = set;
        for e in 0..self.n {
            if !subset::contains(set, e) && self.rank_of(set | 1 << e) == r {
                cl |= 1 << e;
            }
        }
        cl
    }

    /// Maximal non-spanning sets, sorted by mask.
    pub fn hyperplanes(&self) -> Vec<Mask> {
        if self.rank == 0 {
            return Vec::new();
        }
        let table = self.independence();
        let mut out: Vec<Mask> = subset::k_subsets(self.n, self.rank - 1)
            .filter(|&i| table.is_independent(i))
            .map(|i| {
                (0..self.n)
                    .filter(|&e| !subset::contains(i, e) && !table.is_independent(i | 1 << e))
                    .fold(i, |h, e| h | 1 << e)
            })
            .collect();
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Every circuit has at least `rank` elements. Equivalently every
    /// `(rank-1)`-subset is independent, which is what is tested.
    pub fn is_paving(&self) -> bool {
        if self.rank == 0 {
            return true;
        }
        let table = self.independence();
        subset::k_subsets(self.n, self.rank - 1).all(|s| table.is_independent(s))
    }

    /// Paving, and any two circuits of size `rank` have symmetric difference
    /// larger than two. For a paving matroid the size-`rank` circuits are
    /// exactly the non-bases of size `rank`.
    pub fn is_sparse_paving(&self) -> bool {
        if !self.is_paving() {
            return false;
        }
        let non_bases = self.non_bases();
        for (i, &a) in non_bases.iter().enumerate() {
            for &b in &non_bases[i + 1..] {
                if subset::size(a ^ b) <= 2 {
                    return false;
                }
            }
        }
        true
    }

    /// The `rank`-subsets that are not bases.
    pub fn non_bases(&self) -> Vec<Mask> {
        subset::k_subsets(self.n, self.rank).filter(|&s| !self.is_basis(s)).collect()
    }

    /// True when every pair of elements lies in a common circuit.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut parent: Vec<usize> = (0..self.n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut x = x;
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for c in self.circuits() {
            let mut it = subset::elements(c);
            if let Some(first) = it.next() {
                for e in it {
                    let (a, b) = (find(&mut parent, first), find(&mut parent, e));
                    parent[a] = b;
                }
            }
        }
        let root = find(&mut parent, 0);
        (1..self.n).all(|e| find(&mut parent, e) == root)
    }

    /// Direct sum; elements of `other` are shifted up by `self.n()`.
    pub fn direct_sum(&self, other: &Matroid) -> Result<Matroid> {
        let n = self.n + other.n;
        if n > MAX_ELEMENTS {
            return Err(Error::SizeCap { n, cap: MAX_ELEMENTS });
        }
        let bases = self
            .bases
            .iter()
            .flat_map(|&a| other.bases.iter().map(move |&b| a | b << self.n))
            .collect();
        Ok(Matroid::from_masks_unchecked(n, bases))
    }

    /// Replaces every element `i` by the parallel pair `2i`, `2i+1`.
    pub fn two_thickening(&self) -> Result<Matroid> {
        let n = 2 * self.n;
        if n > MAX_ELEMENTS {
            return Err(Error::SizeCap { n, cap: MAX_ELEMENTS });
        }
        let mut bases = Vec::new();
        for &b in &self.bases {
            let elems = subset::to_vec(b);
            for choice in 0u32..(1 << elems.len()) {
                let mask = elems
                    .iter()
                    .enumerate()
                    .fold(0, |m, (j, &e)| m | 1 << (2 * e + (choice >> j & 1) as usize));
                bases.push(mask);
            }
        }
        Ok(Matroid::from_masks_unchecked(n, bases))
    }

    /// Replaces every element `i` by the series pair `2i`, `2i+1`; the dual of
    /// the 2-thickening of the dual.
    pub fn two_stretching(&self) -> Result<Matroid> {
        Ok(self.dual().two_thickening()?.dual())
    }

    /// Adds a new element `n` in general position.
    pub fn free_extension(&self) -> Result<Matroid> {
        let n = self.n + 1;
        if n > MAX_ELEMENTS {
            return Err(Error::SizeCap { n, cap: MAX_ELEMENTS });
        }
        let mut bases = self.bases.clone();
        if self.rank > 0 {
            let g = 1 << self.n;
            let table = self.independence();
            bases.extend(
                subset::k_subsets(self.n, self.rank - 1)
                    .filter(|&i| table.is_independent(i))
                    .map(|i| i | g),
            );
        }
        Ok(Matroid::from_masks_unchecked(n, bases))
    }

    /// Loopless rank-2 matroid with the given parallel classes; class `k`
    /// occupies a consecutive block of elements.
    pub fn rank2_from_parallel_classes(sizes: &[usize]) -> Result<Matroid> {
        if sizes.len() < 2 || sizes.contains(&0) {
            return Err(Error::Invalid(
                "need at least two parallel classes, each nonempty".into(),
            ));
        }
        let n: usize = sizes.iter().sum();
        if n > MAX_ELEMENTS {
            return Err(Error::SizeCap { n, cap: MAX_ELEMENTS });
        }
        let mut class = Vec::with_capacity(n);
        for (k, &s) in sizes.iter().enumerate() {
            class.extend(std::iter::repeat_n(k, s));
        }
        let bases = subset::k_subsets(n, 2)
            .filter(|&p| {
                let v = subset::to_vec(p);
                class[v[0]] != class[v[1]]
            })
            .collect();
        Ok(Matroid::from_masks_unchecked(n, bases))
    }

    /// Minor `M / contract \ delete` restricted to the remaining elements,
    /// relabelled in increasing order.
    pub fn minor(&self, contract: Mask, delete: Mask) -> Matroid {
        debug_assert_eq!(contract & delete, 0);
        let keep = subset::full(self.n) & !(contract | delete);
        let keep_elems = subset::to_vec(keep);
        let table = self.independence();
        let rc = self.rank_of(contract);
        let rk = self.rank_of(keep | contract) - rc;
        let mut bases = Vec::new();
        for sub in subset::k_subsets(keep_elems.len(), rk) {
            let a = subset::elements(sub).fold(0, |m, i| m | 1 << keep_elems[i]);
            let independent_with_contract = if table.is_independent(a) {
                self.rank_of(a | contract) == subset::size(a) + rc
            } else {
                false
            };
            if independent_with_contract {
                bases.push(sub);
            }
        }
        Matroid::from_masks_unchecked(keep_elems.len(), bases)
    }

    /// Whether some minor of `self` is isomorphic to `other`. Exhaustive over
    /// all ways of deleting and contracting the surplus elements.
    pub fn has_minor(&self, other: &Matroid) -> Result<bool> {
        if other.n > self.n || other.rank > self.rank || other.n - other.rank > self.n - self.rank
        {
            return Ok(false);
        }
        let surplus = self.n - other.n;
        let want_contract = self.rank - other.rank;
        for keep in subset::k_subsets(self.n, other.n) {
            let rest = subset::full(self.n) & !keep;
            let rest_elems = subset::to_vec(rest);
            for c in subset::k_subsets(surplus, want_contract) {
                // With the rank drop fixed, a minor of the right size can only
                // arise from an independent contraction set and coindependent
                // deletion set.
                let contract = subset::elements(c).fold(0, |m, i| m | 1 << rest_elems[i]);
                let delete = rest & !contract;
                if !self.is_independent(contract) || self.rank_of(keep | contract) != self.rank {
                    continue;
                }
                let minor = self.minor(contract, delete);
                if minor.rank == other.rank
                    && minor.bases.len() == other.bases.len()
                    && are_isomorphic(&minor, other)?
                {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }
}

/// Lines of the Fano plane on points 0..6.
pub fn fano_lines() -> Vec<Mask> {
    let mut lines: Vec<Mask> = (0..7)
        .map(|i| subset::from_elements([i, (i + 1) % 7, (i + 3) % 7]))
        .collect();
    lines.sort_unstable();
    lines
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, bases: &[&[usize]]) -> Result<Matroid> {
        let v: Vec<Vec<usize>> = bases.iter().map(|b| b.to_vec()).collect();
        Matroid::from_bases(n, &v)
    }

    #[test]
    fn from_bases_examples() {
        let u24 = m(4, &[&[0, 1], &[0, 2], &[0, 3], &[1, 2], &[1, 3], &[2, 3]]).unwrap();
        assert_eq!(u24, Matroid::uniform(2, 4).unwrap());
        let c = m(3, &[&[0, 1], &[0, 2]]).unwrap();
        assert_eq!(c.rank(), 2);
        assert_eq!(c.coloops(), 0b001);
        assert_eq!(m(3, &[&[0, 1], &[2]]), Err(Error::UnequalBasisSizes(2, 1)));
        assert_eq!(m(3, &[]), Err(Error::EmptyBases));
        assert!(matches!(m(2, &[&[0, 2]]), Err(Error::ElementOutOfRange { element: 2, n: 2 })));
        assert!(matches!(
            m(4, &[&[0, 1], &[2, 3]]),
            Err(Error::ExchangeAxiomViolated { .. })
        ));
    }

    #[test]
    fn uniform_examples() {
        assert_eq!(Matroid::uniform(1, 3).unwrap().basis_count(), 3);
        let u02 = Matroid::uniform(0, 2).unwrap();
        assert_eq!(u02.bases(), &[0]);
        assert_eq!(Matroid::uniform(3, 7).unwrap().basis_count(), 35);
        assert_eq!(Matroid::uniform(3, 2), Err(Error::InvalidRank { r: 3, n: 2 }));
    }

    #[test]
    fn dual_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.dual(), u24);
        let fd = Matroid::fano().dual();
        assert_eq!(fd.rank(), 4);
        assert_eq!(fd.basis_count(), 28);
        assert_eq!(fd.dual(), Matroid::fano());
    }

    #[test]
    fn delete_contract_examples() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.delete(3).unwrap(), Matroid::uniform(2, 3).unwrap());
        assert_eq!(u24.contract(3).unwrap(), Matroid::uniform(1, 3).unwrap());
        let u36 = Matroid::uniform(3, 6).unwrap();
        assert_eq!(u36.basis_count(), 20);
        assert_eq!(u36.delete(0).unwrap().basis_count(), 10);
        assert_eq!(u36.contract(0).unwrap().basis_count(), 10);
        assert!(u24.delete(4).is_err());
    }

    #[test]
    fn coloop_delete_and_loop_contract_fall_through() {
        let u22 = Matroid::uniform(2, 2).unwrap();
        assert_eq!(u22.delete(0).unwrap(), Matroid::uniform(1, 1).unwrap());
        let u02 = Matroid::uniform(0, 2).unwrap();
        assert_eq!(u02.contract(1).unwrap(), Matroid::uniform(0, 1).unwrap());
    }

    #[test]
    fn labels_track_original_elements() {
        let minor = Matroid::uniform(2, 5).unwrap().delete_with_labels(2).unwrap();
        assert_eq!(minor.labels, vec![0, 1, 3, 4]);
    }

    #[test]
    fn loops_and_coloops() {
        assert_eq!(Matroid::uniform(0, 2).unwrap().loops(), 0b11);
        assert_eq!(Matroid::uniform(2, 2).unwrap().coloops(), 0b11);
        let u12 = Matroid::uniform(1, 2).unwrap();
        let s = u12.direct_sum(&u12).unwrap();
        assert_eq!(s.basis_count(), 4);
        assert_eq!(s.coloops(), 0);
        assert_eq!(s.loops(), 0);
    }

    #[test]
    fn circuits_hyperplanes_closure() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        assert_eq!(u24.circuits(), subset::k_subsets(4, 3).collect::<Vec<_>>());
        assert_eq!(u24.closure(0b0001), 0b0001);
        assert_eq!(u24.closure(0b0011), 0b1111);
        assert_eq!(Matroid::fano().hyperplanes(), fano_lines());
        assert_eq!(Matroid::fano().rank_of(fano_lines()[0]), 2);
    }

    #[test]
    fn paving_predicates() {
        for n in 0..=7 {
            for r in 0..=n {
                assert!(Matroid::uniform(r, n).unwrap().is_paving());
            }
        }
        let bad = Matroid::uniform(2, 2).unwrap().direct_sum(&Matroid::uniform(0, 1).unwrap()).unwrap();
        assert!(!bad.is_paving());
        assert!(Matroid::fano().is_sparse_paving());
        // disjoint parallel pairs are sparse, a parallel triple is not
        let two_parallel_pairs = Matroid::rank2_from_parallel_classes(&[2, 2, 1]).unwrap();
        assert!(two_parallel_pairs.is_sparse_paving());
        let triple = Matroid::rank2_from_parallel_classes(&[3, 1, 1]).unwrap();
        assert!(triple.is_paving());
        assert!(!triple.is_sparse_paving());
    }

    #[test]
    fn paving_matches_circuit_definition() {
        let cases = [
            Matroid::fano(),
            Matroid::rank2_from_parallel_classes(&[3, 1, 1]).unwrap(),
            Matroid::uniform(2, 2).unwrap().direct_sum(&Matroid::uniform(1, 3).unwrap()).unwrap(),
            Matroid::uniform(1, 2).unwrap().direct_sum(&Matroid::uniform(0, 1).unwrap()).unwrap(),
        ];
        for m in cases {
            let by_circuits = m.circuits().iter().all(|&c| subset::size(c) >= m.rank());
            assert_eq!(m.is_paving(), by_circuits, "{m:?}");
        }
    }

    #[test]
    fn constructions() {
        let s = Matroid::uniform(1, 3).unwrap().two_stretching().unwrap();
        assert_eq!((s.rank(), s.n(), s.basis_count()), (4, 6, 12));
        let s2 = Matroid::uniform(2, 4).unwrap().two_stretching().unwrap();
        assert_eq!((s2.rank(), s2.n(), s2.basis_count()), (6, 8, 24));
        let t = Matroid::uniform(2, 4).unwrap().two_thickening().unwrap().dual();
        assert_eq!(t.basis_count(), 24);
        let fe = Matroid::uniform(1, 2).unwrap().free_extension().unwrap();
        assert_eq!(fe, Matroid::uniform(1, 3).unwrap());
        let tri = Matroid::rank2_from_parallel_classes(&[3, 1, 1]).unwrap();
        assert_eq!(tri.basis_count(), 2 * 3 + 1);
        assert!(Matroid::rank2_from_parallel_classes(&[3]).is_err());
        assert!(Matroid::rank2_from_parallel_classes(&[3, 0]).is_err());
    }

    #[test]
    fn minors() {
        let u22 = Matroid::uniform(2, 2).unwrap();
        let u01 = Matroid::uniform(0, 1).unwrap();
        let n1 = u22.direct_sum(&u01).unwrap();
        assert!(n1.has_minor(&n1).unwrap());
        assert!(!Matroid::fano().has_minor(&n1).unwrap());
        let n2 = Matroid::uniform(0, 2).unwrap().direct_sum(&Matroid::uniform(1, 1).unwrap()).unwrap();
        assert!(!Matroid::fano().has_minor(&n2).unwrap());
        let two_pairs = Matroid::rank2_from_parallel_classes(&[2, 2]).unwrap();
        assert!(two_pairs.has_minor(&Matroid::uniform(1, 2).unwrap()).unwrap());
        assert!(Matroid::uniform(2, 4).unwrap().has_minor(&Matroid::uniform(1, 3).unwrap()).unwrap());
        // contracting a basis leaves loops
        assert!(Matroid::uniform(2, 4).unwrap().has_minor(&u01).unwrap());
        assert!(!Matroid::uniform(2, 4).unwrap().has_minor(&n2).unwrap());
        // U_{2,2} + loop contains U_{0,1} (the loop) and U_{1,1}
        assert!(n1.has_minor(&u01).unwrap());
    }

    #[test]
    fn connectivity() {
        assert!(Matroid::fano().is_connected());
        assert!(Matroid::uniform(2, 4).unwrap().is_connected());
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert!(!u12.direct_sum(&u12).unwrap().is_connected());
    }
}
