//! Enumeration of small paving and sparse paving matroids up to isomorphism.
//!
//! A rank-`r` paving matroid is determined by its hyperplanes, which form an
//! `(r-1)`-partition of the ground set: blocks of size at least `r-1` with
//! every `(r-1)`-subset in exactly one block. Blocks of size `r-1` are forced
//! once the others are known, so enumeration works on the *nontrivial*
//! blocks (size at least `r`, pairwise meeting in at most `r-2` elements).
//!
//! Families are grown one block at a time and deduplicated level by level
//! through [`canonical_set_system`], so only one representative of each
//! isomorphism class is ever extended.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::canonical::{canonical_form, canonical_set_system, CanonicalForm};
use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{self, binomial, Mask};

/// `(r-1)`-partition of `{0..n-1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PartitionFamily {
    n: usize,
    r: usize,
    blocks: Vec<Mask>,
}

impl PartitionFamily {
    /// Validates that every `(r-1)`-subset lies in exactly one block and all
    /// blocks have at least `r-1` elements.
    pub fn new(n: usize, r: usize, blocks: Vec<Mask>) -> Result<PartitionFamily> {
        if r == 0 || r > n {
            return Err(Error::InvalidRank { r, n });
        }
        if n > subset::MAX_ELEMENTS {
            return Err(Error::SizeCap { n, cap: subset::MAX_ELEMENTS });
        }
        let mut blocks = blocks;
        blocks.sort_unstable();
        blocks.dedup();
        for &b in &blocks {
            if b & !subset::full(n) != 0 {
                return Err(Error::InvalidPartition(format!("block {:?} outside ground set", subset::to_vec(b))));
            }
            if subset::size(b) + 1 < r {
                return Err(Error::InvalidPartition(format!(
                    "block {:?} has fewer than r-1 = {} elements",
                    subset::to_vec(b),
                    r - 1
                )));
            }
        }
        for s in subset::k_subsets(n, r - 1) {
            let hits = blocks.iter().filter(|&&b| b & s == s).count();
            if hits != 1 {
                return Err(Error::InvalidPartition(format!(
                    "{:?} lies in {hits} blocks",
                    subset::to_vec(s)
                )));
            }
        }
        Ok(PartitionFamily { n, r, blocks })
    }

    /// Completes a family of nontrivial blocks with the uncovered
    /// `(r-1)`-subsets as singleton blocks.
    pub fn complete(n: usize, r: usize, nontrivial: &[Mask]) -> Result<PartitionFamily> {
        if r == 0 || r > n {
            return Err(Error::InvalidRank { r, n });
        }
        let mut blocks = nontrivial.to_vec();
        for s in subset::k_subsets(n, r - 1) {
            if !nontrivial.iter().any(|&b| b & s == s) {
                blocks.push(s);
            }
        }
        PartitionFamily::new(n, r, blocks)
    }

    /// Hyperplanes of a paving matroid.
    pub fn from_matroid(m: &Matroid) -> Result<PartitionFamily> {
        if !m.is_paving() {
            return Err(Error::Invalid("matroid is not paving".into()));
        }
        PartitionFamily::new(m.n(), m.rank(), m.hyperplanes())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn blocks(&self) -> &[Mask] {
        &self.blocks
    }

    pub fn nontrivial_blocks(&self) -> Vec<Mask> {
        self.blocks.iter().copied().filter(|&b| subset::size(b) >= self.r).collect()
    }
}

/// Paving matroid whose hyperplanes are the blocks: bases are the
/// `r`-subsets contained in no block.
pub fn matroid_from_partition(pf: &PartitionFamily) -> Result<Matroid> {
    let bases: Vec<Mask> = subset::k_subsets(pf.n, pf.r)
        .filter(|&s| !pf.blocks.iter().any(|&b| b & s == s))
        .collect();
    if bases.is_empty() {
        return Err(Error::NoBases);
    }
    Ok(Matroid::from_masks_unchecked(pf.n, bases))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct EnumFlags {
    pub loopless: bool,
    pub coloopless: bool,
}

impl EnumFlags {
    pub const BOTH: EnumFlags = EnumFlags { loopless: true, coloopless: true };
    pub const NONE: EnumFlags = EnumFlags { loopless: false, coloopless: false };
}

/// Size caps for enumeration: `n <= 9` for rank at most 2, `n <= 8` for
/// rank 3, `n <= 7` otherwise.
pub fn enumeration_cap(r: usize) -> usize {
    match r {
        0..=2 => 9,
        3 => 8,
        _ => 7,
    }
}

fn check_caps(r: usize, n: usize) -> Result<()> {
    if r == 0 || r > n {
        return Err(Error::InvalidRank { r, n });
    }
    let cap = enumeration_cap(r);
    if n > cap {
        return Err(Error::CapExceeded(format!("enumeration at rank {r} supports n <= {cap}, got {n}")));
    }
    Ok(())
}

/// All families (up to relabelling) of blocks drawn from `candidates` that
/// pairwise meet in at most `max_meet` elements, canonical and sorted.
fn enumerate_block_families(n: usize, candidates: &[Mask], max_meet: usize) -> Vec<Vec<Mask>> {
    let mut all: BTreeSet<Vec<Mask>> = BTreeSet::new();
    let mut level: BTreeSet<Vec<Mask>> = BTreeSet::new();
    level.insert(Vec::new());
    while !level.is_empty() {
        all.extend(level.iter().cloned());
        let next: Vec<Vec<Vec<Mask>>> = level
            .par_iter()
            .map(|family| {
                candidates
                    .iter()
                    .filter(|&&b| {
                        !family.contains(&b)
                            && family.iter().all(|&f| subset::size(f & b) <= max_meet)
                    })
                    .map(|&b| {
                        let mut ext = family.clone();
                        ext.push(b);
                        canonical_set_system(n, &ext)
                    })
                    .collect()
            })
            .collect();
        level = next.into_iter().flatten().collect();
    }
    all.into_iter().collect()
}

/// Paving matroid of rank `r` on `n` elements from its nontrivial blocks.
fn paving_from_nontrivial(n: usize, r: usize, blocks: &[Mask]) -> Matroid {
    let bases: Vec<Mask> = subset::k_subsets(n, r)
        .filter(|&s| !blocks.iter().any(|&b| b & s == s))
        .collect();
    Matroid::from_masks_unchecked(n, bases)
}

fn passes(m: &Matroid, flags: EnumFlags) -> bool {
    (!flags.loopless || m.loops() == 0) && (!flags.coloopless || m.coloops() == 0)
}

fn sorted_by_canonical_form(ms: Vec<Matroid>) -> Result<Vec<Matroid>> {
    let mut keyed: Vec<(CanonicalForm, Matroid)> = ms
        .into_iter()
        .map(|m| Ok((canonical_form(&m)?, m)))
        .collect::<Result<_>>()?;
    keyed.sort_by(|a, b| a.0.cmp(&b.0));
    keyed.dedup_by(|a, b| a.0 == b.0);
    Ok(keyed.into_iter().map(|(_, m)| m).collect())
}

/// Pairwise non-isomorphic rank-`r` paving matroids on `n` elements,
/// filtered by `flags`, sorted by canonical form. Paving matroids of rank at
/// least 2 never have loops, so `loopless` only matters at rank 1.
pub fn enumerate_paving(r: usize, n: usize, flags: EnumFlags) -> Result<Vec<Matroid>> {
    check_caps(r, n)?;
    let full = subset::full(n);
    let candidates: Vec<Mask> = (r..n).flat_map(|k| subset::k_subsets(n, k)).collect();
    debug_assert!(!candidates.contains(&full));
    let families = enumerate_block_families(n, &candidates, r.saturating_sub(2));
    let families = if r == 1 {
        // blocks must meet in at most r-2 = -1 elements: at most one block
        families.into_iter().filter(|f| f.len() <= 1).collect()
    } else {
        families
    };
    let ms: Vec<Matroid> = families
        .iter()
        .map(|f| paving_from_nontrivial(n, r, f))
        .filter(|m| passes(m, flags))
        .collect();
    sorted_by_canonical_form(ms)
}

/// Pairwise non-isomorphic rank-`r` sparse paving matroids on `n` elements.
/// The circuit-hyperplanes are a stable set in the Johnson graph `J(n,r)`:
/// `r`-subsets pairwise differing in more than two elements.
pub fn enumerate_sparse_paving(r: usize, n: usize) -> Result<Vec<Matroid>> {
    check_caps(r, n)?;
    if r == n {
        return Ok(vec![Matroid::uniform(r, n)?]);
    }
    let candidates: Vec<Mask> = subset::k_subsets(n, r).collect();
    let families = enumerate_block_families(n, &candidates, r.saturating_sub(2));
    let families = if r == 1 {
        families.into_iter().filter(|f| f.len() <= 1).collect()
    } else {
        families
    };
    let ms: Vec<Matroid> = families.iter().map(|f| paving_from_nontrivial(n, r, f)).collect();
    sorted_by_canonical_form(ms)
}

/// `g(r,n) = min { b(M) - C(n-1, r-1) }` over loopless, coloopless rank-`r`
/// paving matroids on `n` elements, with a matroid attaining it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GValue {
    pub value: u64,
    pub witness: Matroid,
    pub class_size: usize,
}

pub fn g(r: usize, n: usize) -> Result<GValue> {
    let class = enumerate_paving(r, n, EnumFlags::BOTH)?;
    let offset = binomial(n as u64 - 1, r as u64 - 1);
    let witness = class.iter().min_by_key(|m| m.basis_count()).ok_or(Error::EmptyClass)?.clone();
    Ok(GValue { value: witness.basis_count() - offset, witness, class_size: class.len() })
}
