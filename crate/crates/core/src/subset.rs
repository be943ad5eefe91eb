//! Small-set utilities: subsets of `{0..n-1}` stored as `u32` bit masks,
//! plus exact binomial coefficients.

/// Largest ground set that fits in a mask.
pub const MAX_ELEMENTS: usize = 24;

/// Bit mask of a subset of `{0..n-1}`; bit `i` set means element `i` present.
pub type Mask = u32;

#[inline]
pub fn full(n: usize) -> Mask {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

#[inline]
pub fn size(mask: Mask) -> usize {
    mask.count_ones() as usize
}

#[inline]
pub fn contains(mask: Mask, e: usize) -> bool {
    mask >> e & 1 == 1
}

/// Elements of `mask` in increasing order.
pub fn elements(mask: Mask) -> impl Iterator<Item = usize> {
    let mut m = mask;
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let e = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(e)
        }
    })
}

pub fn to_vec(mask: Mask) -> Vec<usize> {
    elements(mask).collect()
}

pub fn from_elements<I: IntoIterator<Item = usize>>(elems: I) -> Mask {
    elems.into_iter().fold(0, |m, e| m | 1 << e)
}

/// All `k`-subsets of `{0..n-1}` in increasing mask order (Gosper's hack).
pub fn k_subsets(n: usize, k: usize) -> impl Iterator<Item = Mask> {
    let limit: u64 = 1u64 << n;
    let mut next: Option<u64> = if k > n {
        None
    } else {
        Some((1u64 << k) - 1)
    };
    std::iter::from_fn(move || {
        let cur = next?;
        if cur >= limit {
            next = None;
            return None;
        }
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            Some((((r ^ cur) >> 2) / c) | r)
        };
        Some(cur as Mask)
    })
}

/// Removes element `e` from `mask` and shifts higher elements down by one.
#[inline]
pub fn squeeze(mask: Mask, e: usize) -> Mask {
    let low = mask & ((1u32 << e) - 1);
    let high = (mask >> (e + 1)) << e;
    low | high
}

/// Lexicographic comparison of the sorted element lists of two masks.
pub fn lex_cmp(a: Mask, b: Mask) -> std::cmp::Ordering {
    elements(a).cmp(elements(b))
}

/// `C(n, k)` as `u64`; zero when `k > n`. Panics on overflow.
pub fn binomial(n: u64, k: u64) -> u64 {
    checked_binomial(n, k).expect("binomial overflow")
}

pub fn checked_binomial(n: u64, k: u64) -> Option<u64> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

/// `C(a, b)` over the integers with `C(a, 0) = 1` for every `a` and
/// `C(a, b) = 0` whenever `b < 0` or `b > a`.
pub fn binomial_i(a: i64, b: i64) -> i128 {
    if b < 0 {
        return 0;
    }
    if b == 0 {
        return 1;
    }
    if b > a {
        return 0;
    }
    binomial(a as u64, b as u64) as i128
}
