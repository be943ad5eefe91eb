//! Sparse paving specifics: the basis lower bound, the closed-form Tutte
//! polynomial, and Steiner systems `S(k-1, k, n)` as circuit-hyperplanes.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{self, binomial, Mask, MAX_ELEMENTS};
use crate::tutte::TuttePolynomial;

/// `n` points and blocks of common size `k`, read as a candidate
/// `S(k-1, k, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BlockDesign {
    pub n: usize,
    pub k: usize,
    pub blocks: Vec<Vec<usize>>,
}

impl BlockDesign {
    /// The Fano plane: points 0..6, lines {0,1,3}, {1,2,4}, ..., {6,0,2}.
    pub fn fano() -> BlockDesign {
        BlockDesign {
            n: 7,
            k: 3,
            blocks: (0..7).map(|i| vec![i, (i + 1) % 7, (i + 3) % 7]).collect(),
        }
    }

    /// Steiner parameter `t = k - 1`.
    pub fn t(&self) -> usize {
        self.k.saturating_sub(1)
    }

    fn masks(&self) -> Result<Vec<Mask>> {
        if self.n > MAX_ELEMENTS {
            return Err(Error::SizeCap { n: self.n, cap: MAX_ELEMENTS });
        }
        let mut out = Vec::with_capacity(self.blocks.len());
        for b in &self.blocks {
            if b.len() != self.k {
                return Err(Error::UnequalBlockSizes(self.k, b.len()));
            }
            let mut mask: Mask = 0;
            for &p in b {
                if p >= self.n {
                    return Err(Error::ElementOutOfRange { element: p, n: self.n });
                }
                if subset::contains(mask, p) {
                    return Err(Error::MalformedSubset(b.clone()));
                }
                mask |= 1 << p;
            }
            out.push(mask);
        }
        Ok(out)
    }
}

/// Whether every `(k-1)`-subset of points lies in exactly one block.
pub fn verify_steiner(design: &BlockDesign) -> Result<bool> {
    let blocks = design.masks()?;
    if design.k == 0 || design.k > design.n {
        return Ok(false);
    }
    let mut sorted = blocks.clone();
    sorted.sort_unstable();
    sorted.dedup();
    if sorted.len() != blocks.len() {
        return Ok(false);
    }
    for s in subset::k_subsets(design.n, design.k - 1) {
        if blocks.iter().filter(|&&b| b & s == s).count() != 1 {
            return Ok(false);
        }
    }
    let t_subsets = binomial(design.n as u64, design.k as u64 - 1);
    assert_eq!(
        blocks.len() as u64 * design.k as u64,
        t_subsets,
        "a Steiner system has C(n,k-1)/k blocks"
    );
    Ok(true)
}

/// Rank-`k` sparse paving matroid whose bases are the `k`-subsets that are
/// not blocks.
pub fn sparse_from_steiner(design: &BlockDesign) -> Result<Matroid> {
    if !verify_steiner(design)? {
        return Err(Error::NotSteiner);
    }
    let blocks = design.masks()?;
    let bases: Vec<Mask> =
        subset::k_subsets(design.n, design.k).filter(|s| !blocks.contains(s)).collect();
    if bases.is_empty() {
        return Err(Error::NoBases);
    }
    Ok(Matroid::from_masks_unchecked(design.n, bases))
}

/// `(n-r)/r * C(n, r-1)`, exact.
pub fn sparse_basis_bound(n: usize, r: usize) -> Result<Ratio<u64>> {
    if r == 0 || r > n {
        return Err(Error::InvalidRank { r, n });
    }
    let c = subset::checked_binomial(n as u64, r as u64 - 1).ok_or(Error::Overflow)?;
    let num = (n as u64 - r as u64).checked_mul(c).ok_or(Error::Overflow)?;
    Ok(Ratio::new(num, r as u64))
}

/// Number of circuit-hyperplanes of a sparse paving matroid: its non-bases
/// of size `rank`.
pub fn circuit_hyperplane_count(m: &Matroid) -> u64 {
    binomial(m.n() as u64, m.rank() as u64) - m.basis_count()
}

/// Tutte polynomial of a rank-`r` sparse paving matroid on `n` elements with
/// `lambda` circuit-hyperplanes:
/// `Σ_{i<r} C(n,i)(x-1)^{r-i} + C(n,r) + λ(xy-x-y) + Σ_{i>r} C(n,i)(y-1)^{i-r}`.
///
/// Fails with `InvalidLambda` if `lambda > C(n,r)` or the expansion has a
/// negative coefficient, which no matroid's Tutte polynomial has.
pub fn tutte_sparse_closed_form(n: usize, r: usize, lambda: u64) -> Result<TuttePolynomial> {
    if r == 0 || r >= n {
        return Err(Error::InvalidRank { r, n });
    }
    let total = binomial(n as u64, r as u64);
    if lambda > total {
        return Err(Error::InvalidLambda { n, r, lambda });
    }
    let mut p = TuttePolynomial::default();
    let x_minus_1 = {
        let mut f = TuttePolynomial::monomial(1, 0, 1);
        f.add_term(0, 0, -1);
        f
    };
    let y_minus_1 = {
        let mut f = TuttePolynomial::monomial(0, 1, 1);
        f.add_term(0, 0, -1);
        f
    };
    let power = |base: &TuttePolynomial, k: usize| {
        (0..k).fold(TuttePolynomial::one(), |acc, _| acc.mul(base))
    };
    for i in 0..r {
        let c = binomial(n as u64, i as u64) as i64;
        p.add(&power(&x_minus_1, r - i).scale(c));
    }
    p.add_term(0, 0, total as i64);
    let l = lambda as i64;
    p.add_term(1, 1, l);
    p.add_term(1, 0, -l);
    p.add_term(0, 1, -l);
    for i in r + 1..=n {
        let c = binomial(n as u64, i as u64) as i64;
        p.add(&power(&y_minus_1, i - r).scale(c));
    }
    if !p.is_nonnegative() {
        return Err(Error::InvalidLambda { n, r, lambda });
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tutte::tutte;

    #[test]
    fn steiner_examples() {
        let fano = BlockDesign::fano();
        assert!(verify_steiner(&fano).unwrap());
        assert_eq!(fano.blocks.len() as u64, binomial(7, 2) / 3);
        let k4 = BlockDesign { n: 4, k: 3, blocks: subset::k_subsets(4, 3).map(subset::to_vec).collect() };
        assert!(!verify_steiner(&k4).unwrap());
        let empty = BlockDesign { n: 3, k: 2, blocks: vec![] };
        assert!(!verify_steiner(&empty).unwrap());
        let ragged = BlockDesign { n: 4, k: 2, blocks: vec![vec![0, 1], vec![2]] };
        assert_eq!(verify_steiner(&ragged), Err(Error::UnequalBlockSizes(2, 1)));
    }

    #[test]
    fn sparse_from_fano_meets_bound() {
        let m = sparse_from_steiner(&BlockDesign::fano()).unwrap();
        assert_eq!(m, Matroid::fano());
        assert_eq!(m.basis_count(), 28);
        assert_eq!(sparse_basis_bound(7, 3).unwrap(), Ratio::from_integer(28));
        assert!(m.is_sparse_paving());
        let bad = BlockDesign { n: 4, k: 2, blocks: vec![vec![0, 1]] };
        assert_eq!(sparse_from_steiner(&bad), Err(Error::NotSteiner));
    }

    #[test]
    fn affine_plane_of_order_three() {
        // points (x,y) in Z_3^2 as 3x+y; lines are cosets of the four directions
        let pt = |x: usize, y: usize| 3 * (x % 3) + (y % 3);
        let mut blocks = Vec::new();
        for (dx, dy) in [(0, 1), (1, 0), (1, 1), (1, 2)] {
            let mut seen = std::collections::BTreeSet::new();
            for x in 0..3 {
                for y in 0..3 {
                    let mut line: Vec<usize> = (0..3).map(|t| pt(x + t * dx, y + t * dy)).collect();
                    line.sort();
                    seen.insert(line);
                }
            }
            blocks.extend(seen);
        }
        let design = BlockDesign { n: 9, k: 3, blocks };
        assert_eq!(design.blocks.len(), 12);
        assert!(verify_steiner(&design).unwrap());
        let m = sparse_from_steiner(&design).unwrap();
        assert_eq!(m.basis_count(), 72);
        assert_eq!(sparse_basis_bound(9, 3).unwrap(), Ratio::from_integer(72));
    }

    #[test]
    fn bound_examples() {
        for n in 1..10 {
            assert_eq!(sparse_basis_bound(n, 1).unwrap(), Ratio::from_integer(n as u64 - 1));
        }
        assert_eq!(sparse_basis_bound(4, 2).unwrap(), Ratio::from_integer(4));
        assert_eq!(sparse_basis_bound(5, 2).unwrap(), Ratio::new(15, 2));
    }

    #[test]
    fn closed_form_matches_deletion_contraction() {
        assert_eq!(tutte_sparse_closed_form(4, 2, 0).unwrap(), tutte(&Matroid::uniform(2, 4).unwrap()).unwrap());
        let fano = tutte_sparse_closed_form(7, 3, 7).unwrap();
        assert_eq!(fano, tutte(&Matroid::fano()).unwrap());
        assert_eq!(fano.eval(1, 1), 28);
        assert_eq!(tutte_sparse_closed_form(4, 2, 1).unwrap().eval(1, 1), 5);
        assert!(matches!(tutte_sparse_closed_form(4, 2, 7), Err(Error::InvalidLambda { .. })));
        assert!(matches!(tutte_sparse_closed_form(4, 2, 6), Err(Error::InvalidLambda { .. })));
    }
}
