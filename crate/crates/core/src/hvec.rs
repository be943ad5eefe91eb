//! Face vectors and h-vectors of matroid independence complexes, and the
//! inequalities used to test them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::Matroid;
use crate::subset::{self, binomial, binomial_i};

/// `f_i` is the number of faces with `i` elements, `0 <= i <= d`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FVector(pub Vec<i64>);

/// h-vector `h_0..h_d`; entries may be negative for non-matroidal input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HVector(pub Vec<i64>);

impl FVector {
    pub fn dim(&self) -> usize {
        self.0.len().saturating_sub(1)
    }
}

impl HVector {
    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Negative entries never occur for matroid complexes.
    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&h| h >= 0)
    }

    /// The vector with trailing zeros removed (at least `h_0` is kept).
    pub fn trimmed(&self) -> HVector {
        let mut v = self.0.clone();
        while v.len() > 1 && v.last() == Some(&0) {
            v.pop();
        }
        HVector(v)
    }
}

/// Number of independent sets of each size.
pub fn f_vector(m: &Matroid) -> FVector {
    let table = m.independence();
    let mut f = vec![0i64; m.rank() + 1];
    for mask in 0..=subset::full(m.n()) {
        if table.is_independent(mask) {
            f[subset::size(mask)] += 1;
        }
    }
    FVector(f)
}

/// `h_k = Σ_{i<=k} (-1)^{i+k} f_i C(d-i, k-i)`.
pub fn h_from_f(f: &FVector) -> Result<HVector> {
    if f.0.first() != Some(&1) {
        return Err(Error::Invalid("f-vector must start with f_0 = 1".into()));
    }
    let d = f.dim() as u64;
    let mut h = Vec::with_capacity(f.0.len());
    for k in 0..=d {
        let mut acc: i128 = 0;
        for i in 0..=k {
            let c = subset::checked_binomial(d - i, k - i).ok_or(Error::Overflow)? as i128;
            let term = (f.0[i as usize] as i128).checked_mul(c).ok_or(Error::Overflow)?;
            acc = if (i + k) % 2 == 0 { acc.checked_add(term) } else { acc.checked_sub(term) }
                .ok_or(Error::Overflow)?;
        }
        h.push(i64::try_from(acc).map_err(|_| Error::Overflow)?);
    }
    Ok(HVector(h))
}

/// Inverse transform `f_k = Σ_{i<=k} h_i C(d-i, k-i)`.
pub fn f_from_h(h: &HVector) -> Result<FVector> {
    let d = h.0.len().saturating_sub(1) as u64;
    let mut f = Vec::with_capacity(h.0.len());
    for k in 0..=d {
        let mut acc: i128 = 0;
        for i in 0..=k {
            let c = subset::checked_binomial(d - i, k - i).ok_or(Error::Overflow)? as i128;
            acc = acc
                .checked_add((h.0[i as usize] as i128).checked_mul(c).ok_or(Error::Overflow)?)
                .ok_or(Error::Overflow)?;
        }
        f.push(i64::try_from(acc).map_err(|_| Error::Overflow)?);
    }
    Ok(FVector(f))
}

pub fn h_vector(m: &Matroid) -> HVector {
    h_from_f(&f_vector(m)).expect("matroid f-vectors fit in i64")
}

/// Closed-form h-vector of a rank-`r` paving matroid on `n` elements with
/// `b` bases: `h_k = C(n-r+k-1, k)` for `k < r`, `h_r = b - C(n-1, r-1)`.
pub fn paving_h_vector(n: usize, r: usize, b: u64) -> Result<HVector> {
    if r == 0 || r > n {
        return Err(Error::InvalidRank { r, n });
    }
    let (n64, r64) = (n as u64, r as u64);
    let min = binomial(n64 - 1, r64 - 1);
    let max = binomial(n64, r64);
    if b < min || b > max {
        return Err(Error::BasisCountOutOfRange { b, min, max });
    }
    let mut h: Vec<i64> = (0..r as i64)
        .map(|k| binomial_i(n as i64 - r as i64 + k - 1, k) as i64)
        .collect();
    h.push((b - min) as i64);
    Ok(HVector(h))
}

/// Hibi's inequalities with `[d/2]` read as floor:
/// `h_0 <= ... <= h_{[d/2]}` and `h_i <= h_{d-i}` for `0 <= i <= [d/2]`.
pub fn hibi_check(h: &HVector) -> bool {
    let v = &h.0;
    if v.is_empty() {
        return true;
    }
    let d = v.len() - 1;
    let half = d / 2;
    let increasing = v[..=half].windows(2).all(|w| w[0] <= w[1]);
    let symmetric = (0..=half).all(|i| v[i] <= v[d - i]);
    increasing && symmetric
}

/// Default sample points for [`brown_colbourn_check`]: 1, 3/2, 2, 4.
pub fn default_bc_samples() -> Vec<BigRational> {
    [(1, 1), (3, 2), (2, 1), (4, 1)]
        .iter()
        .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
        .collect()
}

/// `(-1)^j Σ_{i<=j} (-b)^i h_i >= 0` for every `j` and every sampled `b`.
/// Samples below 1 are rejected.
pub fn brown_colbourn_check(h: &HVector, samples: &[BigRational]) -> Result<bool> {
    if let Some(b) = samples.iter().find(|b| **b < BigRational::one()) {
        return Err(Error::Invalid(format!("sample b = {b} is below 1")));
    }
    for b in samples {
        let neg_b = -b.clone();
        let mut power = BigRational::one();
        let mut partial = BigRational::zero();
        for (j, &hj) in h.0.iter().enumerate() {
            partial += &power * BigRational::from_integer(BigInt::from(hj));
            power *= &neg_b;
            let signed = if j % 2 == 0 { partial.clone() } else { -partial.clone() };
            if signed.is_negative() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// `S(r,n) = (-1)^{r-1} Σ_{i=0}^{r-1} (-1)^i C(n-r+i-1, i)`.
pub fn s_bound(r: usize, n: usize) -> Result<i128> {
    if r == 0 || r > n {
        return Err(Error::InvalidRank { r, n });
    }
    let mut acc: i128 = 0;
    for i in 0..r as i64 {
        let c = binomial_i(n as i64 - r as i64 + i - 1, i);
        acc += if i % 2 == 0 { c } else { -c };
    }
    Ok(if r % 2 == 1 { acc } else { -acc })
}
