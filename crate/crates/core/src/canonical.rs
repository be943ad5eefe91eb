//! Canonical forms of small set systems and matroids under relabelling of
//! the ground set.
//!
//! The search is individualisation-refinement: element colours are refined
//! by how they sit in the set system until stable, then the first
//! non-singleton cell is split by individualising each of its elements in
//! turn. Every discrete colouring is a relabelling; the canonical key is the
//! least sorted relabelled family over all leaves. Since refinement and cell
//! choice only look at colours, the set of leaves is relabelling-invariant.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{self, Mask};

/// Largest ground set accepted by [`canonical_form`].
pub const CANONICAL_CAP: usize = 9;

/// Total-order key identifying a matroid up to isomorphism.
///
/// The family encoded is whichever of the bases or the non-bases of size
/// `rank` is smaller, relabelled canonically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub rank: usize,
    pub encodes_non_bases: bool,
    pub key: Vec<Mask>,
}

impl CanonicalForm {
    /// Short hex digest used to name files.
    pub fn hash_hex(&self) -> String {
        let mut h = Sha256::new();
        h.update((self.n as u32).to_le_bytes());
        h.update((self.rank as u32).to_le_bytes());
        h.update([self.encodes_non_bases as u8]);
        for k in &self.key {
            h.update(k.to_le_bytes());
        }
        h.finalize().iter().take(8).map(|b| format!("{b:02x}")).collect()
    }
}

pub fn canonical_form(m: &Matroid) -> Result<CanonicalForm> {
    if m.n() > CANONICAL_CAP {
        return Err(Error::CapExceeded(format!(
            "canonical form needs n <= {CANONICAL_CAP}, got {}",
            m.n()
        )));
    }
    let total = subset::binomial(m.n() as u64, m.rank() as u64) as usize;
    let encodes_non_bases = m.bases().len() * 2 > total;
    let family = if encodes_non_bases { m.non_bases() } else { m.bases().to_vec() };
    Ok(CanonicalForm {
        n: m.n(),
        rank: m.rank(),
        encodes_non_bases,
        key: canonical_set_system(m.n(), &family),
    })
}

pub fn are_isomorphic(a: &Matroid, b: &Matroid) -> Result<bool> {
    if a.n() != b.n() || a.rank() != b.rank() || a.bases().len() != b.bases().len() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

/// Canonical relabelling of a family of subsets of `{0..n-1}`, returned as
/// a sorted list of masks.
pub fn canonical_set_system(n: usize, sets: &[Mask]) -> Vec<Mask> {
    let mut sorted = sets.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.is_empty() {
        return sorted;
    }
    let incidence: Vec<Vec<usize>> = (0..n)
        .map(|e| (0..sorted.len()).filter(|&s| subset::contains(sorted[s], e)).collect())
        .collect();
    let search = Search { n, sets: &sorted, incidence };
    let colours = search.refine(vec![0; n]);
    let mut best: Option<Vec<Mask>> = None;
    search.descend(colours, &mut best);
    best.expect("at least one leaf")
}

struct Search<'a> {
    n: usize,
    sets: &'a [Mask],
    incidence: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn cell_count(colours: &[u32]) -> usize {
        let mut c = colours.to_vec();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// Iterated colour refinement; new colours are ranks of signatures that
    /// start with the old colour, so cell order is preserved.
    fn refine(&self, mut colours: Vec<u32>) -> Vec<u32> {
        let mut cells = Self::cell_count(&colours);
        loop {
            let set_sigs: Vec<Vec<u32>> = self
                .sets
                .iter()
                .map(|&s| {
                    let mut v: Vec<u32> = subset::elements(s).map(|e| colours[e]).collect();
                    v.sort_unstable();
                    v
                })
                .collect();
            let sigs: Vec<(u32, Vec<&Vec<u32>>)> = (0..self.n)
                .map(|e| {
                    let mut v: Vec<&Vec<u32>> =
                        self.incidence[e].iter().map(|&s| &set_sigs[s]).collect();
                    v.sort_unstable();
                    (colours[e], v)
                })
                .collect();
            let mut distinct: Vec<&(u32, Vec<&Vec<u32>>)> = sigs.iter().collect();
            distinct.sort_unstable();
            distinct.dedup();
            let next: Vec<u32> = sigs
                .iter()
                .map(|s| distinct.binary_search(&s).expect("present") as u32)
                .collect();
            let next_cells = distinct.len();
            colours = next;
            if next_cells == cells {
                return colours;
            }
            cells = next_cells;
        }
    }

    fn descend(&self, colours: Vec<u32>, best: &mut Option<Vec<Mask>>) {
        if Self::cell_count(&colours) == self.n {
            let mut relabelled: Vec<Mask> = self
                .sets
                .iter()
                .map(|&s| subset::elements(s).fold(0, |m, e| m | 1 << colours[e]))
                .collect();
            relabelled.sort_unstable();
            if best.as_ref().is_none_or(|b| relabelled < *b) {
                *best = Some(relabelled);
            }
            return;
        }
        // first non-singleton cell in colour order
        let mut counts = vec![0usize; self.n];
        for &c in &colours {
            counts[c as usize] += 1;
        }
        let target = counts.iter().position(|&k| k > 1).expect("non-discrete") as u32;
        for v in 0..self.n {
            if colours[v] != target {
                continue;
            }
            let split: Vec<u32> = colours
                .iter()
                .enumerate()
                .map(|(e, &c)| 2 * c + u32::from(c == target && e != v))
                .collect();
            self.descend(self.refine(split), best);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::seq::SliceRandom;
    use rand::SeedableRng;

    fn relabel(m: &Matroid, perm: &[usize]) -> Matroid {
        let bases = m
            .bases()
            .iter()
            .map(|&b| subset::elements(b).fold(0, |acc, e| acc | 1 << perm[e]))
            .collect();
        Matroid::from_masks(m.n(), bases).unwrap()
    }

    #[test]
    fn invariant_under_relabelling() {
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let samples = [
            Matroid::fano(),
            Matroid::rank2_from_parallel_classes(&[3, 2, 1]).unwrap(),
            Matroid::uniform(3, 6).unwrap(),
            Matroid::fano().dual(),
            Matroid::uniform(1, 2)
                .unwrap()
                .direct_sum(&Matroid::uniform(2, 4).unwrap())
                .unwrap(),
        ];
        for m in samples {
            let cf = canonical_form(&m).unwrap();
            for _ in 0..10 {
                let mut perm: Vec<usize> = (0..m.n()).collect();
                perm.shuffle(&mut rng);
                assert_eq!(canonical_form(&relabel(&m, &perm)).unwrap(), cf);
            }
        }
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let u24 = Matroid::uniform(2, 4).unwrap();
        let u12 = Matroid::uniform(1, 2).unwrap();
        assert!(!are_isomorphic(&u24, &u12.direct_sum(&u12).unwrap()).unwrap());
        for n in 4..=8 {
            let a = Matroid::uniform(1, n - 2)
                .unwrap()
                .direct_sum(&Matroid::uniform(1, 2).unwrap())
                .unwrap();
            let b = Matroid::rank2_from_parallel_classes(&[n - 2, 1, 1]).unwrap();
            assert_eq!(a.basis_count(), 2 * (n as u64 - 2));
            assert_eq!(b.basis_count(), 2 * (n as u64 - 2) + 1);
            assert!(!are_isomorphic(&a, &b).unwrap());
        }
        // same basis count, different structure: parallel classes 3+1+1+1 vs 2+2+2
        let p = Matroid::rank2_from_parallel_classes(&[3, 1, 1, 1]).unwrap();
        let q = Matroid::rank2_from_parallel_classes(&[2, 2, 2]).unwrap();
        assert_eq!(p.basis_count(), q.basis_count());
        assert!(!are_isomorphic(&p, &q).unwrap());
    }

    #[test]
    fn cap_enforced() {
        let big = Matroid::uniform(2, 10).unwrap();
        assert!(matches!(canonical_form(&big), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn hash_is_stable_across_relabelling() {
        let a = Matroid::rank2_from_parallel_classes(&[2, 1, 1]).unwrap();
        let b = relabel(&a, &[3, 1, 0, 2]);
        let (ha, hb) = (canonical_form(&a).unwrap().hash_hex(), canonical_form(&b).unwrap().hash_hex());
        assert_eq!(ha, hb);
        assert_eq!(ha.len(), 16);
    }
}
