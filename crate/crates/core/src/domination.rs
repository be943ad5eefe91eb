//! The monomial domination problem behind `f(r,d)`.
//!
//! `f(r,d)` is the least number of degree-`r` monomials in `d` indeterminates
//! whose one-step divisors include every degree-`(r-1)` monomial. This is a
//! set-cover instance: the universe is the degree-`(r-1)` monomials and each
//! degree-`r` candidate covers its one-step divisors. It is solved exactly by
//! branch and bound:
//!
//! * branch on an uncovered universe monomial `u` with the fewest remaining
//!   candidates; its candidates `u*x_0, ..., u*x_{d-1}` form a clique in
//!   `G_{r,d}`, so at most `d` branches,
//! * the `k`-th branch takes the `k`-th candidate and forbids the earlier ones,
//! * prune with a fractional lower bound: each uncovered `u` needs `1/w(u)`
//!   of a set, where `w(u)` is the largest number of uncovered elements any
//!   available candidate of `u` still covers,
//! * at the root, variables other than `x_0` are interchangeable, so only the
//!   candidates `x_0^r` and `x_0^{r-1} x_1` of `x_0^{r-1}` need branches.
//!
//! The standard colouring supplies the initial incumbent.

use std::collections::HashMap;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::subset::binomial;

/// Largest universe accepted by [`f_exact`].
pub const UNIVERSE_CAP: usize = 5000;

/// Limits on a search. `None` means unlimited.
#[derive(Debug, Clone, Copy, Default)]
pub struct Budget {
    pub max_nodes: Option<u64>,
    pub time_limit: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn seconds(s: u64) -> Self {
        Budget { max_nodes: None, time_limit: Some(Duration::from_secs(s)) }
    }

    pub fn nodes(n: u64) -> Self {
        Budget { max_nodes: Some(n), time_limit: None }
    }
}

/// The cover formulation of `f(r,d)`.
#[derive(Debug, Clone)]
pub struct DominationInstance {
    pub r: u32,
    pub d: usize,
    /// Degree `r-1` monomials, graded-lex.
    pub universe: Vec<Monomial>,
    /// Degree `r` monomials, graded-lex.
    pub candidates: Vec<Monomial>,
    /// Universe indices covered by each candidate.
    pub covers: Vec<Vec<usize>>,
    /// Candidate indices covering each universe member, by variable.
    pub covered_by: Vec<Vec<usize>>,
}

impl DominationInstance {
    pub fn new(r: u32, d: usize) -> Result<Self> {
        if r == 0 || d == 0 {
            return Err(Error::Invalid(format!("need r >= 1 and d >= 1, got r = {r}, d = {d}")));
        }
        let size = binomial(d as u64 + r as u64 - 2, r as u64 - 1);
        if size > UNIVERSE_CAP as u64 {
            return Err(Error::CapExceeded(format!(
                "universe of {size} monomials exceeds the cap of {UNIVERSE_CAP}"
            )));
        }
        let universe = monomials_of_degree(r - 1, d);
        let candidates = monomials_of_degree(r, d);
        let u_index: HashMap<&Monomial, usize> =
            universe.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let c_index: HashMap<&Monomial, usize> =
            candidates.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let covers = candidates
            .iter()
            .map(|c| c.divisors_one_step().iter().map(|m| u_index[m]).collect())
            .collect();
        let covered_by = universe
            .iter()
            .map(|u| u.multiples_one_step().iter().map(|m| c_index[m]).collect())
            .collect();
        Ok(DominationInstance { r, d, universe, candidates, covers, covered_by })
    }

    /// Whether every universe monomial divides some member of `set`.
    pub fn is_cover(&self, set: &[Monomial]) -> bool {
        self.universe
            .iter()
            .all(|u| set.iter().any(|m| m.degree() == self.r && u.divides(m).unwrap_or(false)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DominationResult {
    pub r: u32,
    pub d: usize,
    /// `f(r,d)` when `optimal`, otherwise the best size found.
    pub value: u64,
    /// Degree-`r` monomials, graded-lex.
    pub witness: Vec<Monomial>,
    pub optimal: bool,
    pub nodes_explored: u64,
}

#[derive(Clone)]
struct Bits(Vec<u64>);

impl Bits {
    fn full(n: usize) -> Self {
        let mut v = vec![u64::MAX; n.div_ceil(64)];
        if !n.is_multiple_of(64) {
            *v.last_mut().unwrap() = (1u64 << (n % 64)) - 1;
        }
        Bits(v)
    }
    #[inline]
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    #[inline]
    fn clear(&mut self, i: usize) {
        self.0[i / 64] &= !(1 << (i % 64));
    }
    #[inline]
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(k * 64 + b)
                }
            })
        })
    }
}

struct Solver<'a> {
    inst: &'a DominationInstance,
    uncovered: Bits,
    available: Bits,
    /// How many times each universe member is covered by the chosen set.
    cover_count: Vec<u32>,
    chosen: Vec<usize>,
    best: Vec<usize>,
    nodes: u64,
    budget: Budget,
    start: Instant,
    aborted: bool,
    lcm: u64,
}

impl Solver<'_> {
    fn gain(&self, c: usize) -> u64 {
        self.inst.covers[c].iter().filter(|&&u| self.uncovered.get(u)).count() as u64
    }

    /// Fractional covering bound, `None` when some uncovered element has no
    /// available candidate left.
    fn lower_bound(&self) -> Option<u64> {
        let mut total: u64 = 0;
        for u in self.uncovered.iter() {
            let w = self.inst.covered_by[u]
                .iter()
                .filter(|&&c| self.available.get(c))
                .map(|&c| self.gain(c))
                .max()?;
            total += self.lcm / w;
        }
        Some(total.div_ceil(self.lcm))
    }

    fn take(&mut self, c: usize) {
        for &u in &self.inst.covers[c] {
            self.cover_count[u] += 1;
            self.uncovered.clear(u);
        }
        self.chosen.push(c);
    }

    fn untake(&mut self, c: usize) {
        self.chosen.pop();
        for &u in &self.inst.covers[c] {
            self.cover_count[u] -= 1;
            if self.cover_count[u] == 0 {
                self.uncovered.set(u);
            }
        }
    }

    fn out_of_budget(&mut self) -> bool {
        if self.aborted {
            return true;
        }
        if let Some(max) = self.budget.max_nodes {
            if self.nodes >= max {
                self.aborted = true;
            }
        }
        if self.nodes.is_multiple_of(1024) {
            if let Some(limit) = self.budget.time_limit {
                if self.start.elapsed() >= limit {
                    self.aborted = true;
                }
            }
        }
        self.aborted
    }

    fn search(&mut self, root: bool) {
        self.nodes += 1;
        if self.out_of_budget() {
            return;
        }
        if self.uncovered.is_empty() {
            if self.chosen.len() < self.best.len() {
                self.best = self.chosen.clone();
            }
            return;
        }
        let Some(lb) = self.lower_bound() else { return };
        if self.chosen.len() as u64 + lb >= self.best.len() as u64 {
            return;
        }
        let branch_on = if root {
            0
        } else {
            // fewest available candidates, ties broken by graded-lex order
            let mut best_u = usize::MAX;
            let mut best_k = usize::MAX;
            for u in self.uncovered.iter() {
                let k = self.inst.covered_by[u].iter().filter(|&&c| self.available.get(c)).count();
                if k < best_k {
                    best_k = k;
                    best_u = u;
                    if k <= 1 {
                        break;
                    }
                }
            }
            best_u
        };
        let mut options: Vec<(u64, usize)> = self.inst.covered_by[branch_on]
            .iter()
            .filter(|&&c| self.available.get(c))
            .map(|&c| (self.gain(c), c))
            .collect();
        if root {
            // x0^{r-1} at the root: x0^r or x0^{r-1} x1, the rest are symmetric
            options.truncate(2);
        }
        options.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        let mut forbidden = Vec::with_capacity(options.len());
        for &(_, c) in &options {
            self.take(c);
            self.search(false);
            self.untake(c);
            self.available.clear(c);
            forbidden.push(c);
            if self.aborted {
                break;
            }
        }
        for c in forbidden {
            self.available.set(c);
        }
    }
}

fn lcm_upto(k: usize) -> u64 {
    (1..=k as u64).fold(1, |acc, x| acc / num_integer::gcd(acc, x) * x)
}

/// Exact `f(r,d)` by branch and bound. When the budget runs out the best
/// cover found so far is returned with `optimal = false`.
pub fn f_exact(r: u32, d: usize, budget: Budget) -> Result<DominationResult> {
    let inst = DominationInstance::new(r, d)?;
    solve(&inst, budget)
}

pub fn solve(inst: &DominationInstance, budget: Budget) -> Result<DominationResult> {
    let classes = colour_classes(inst.r, inst.d);
    let incumbent = classes.iter().min_by_key(|c| c.len()).expect("d >= 1 classes");
    let index: HashMap<&Monomial, usize> =
        inst.candidates.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut solver = Solver {
        inst,
        uncovered: Bits::full(inst.universe.len()),
        available: Bits::full(inst.candidates.len()),
        cover_count: vec![0; inst.universe.len()],
        chosen: Vec::new(),
        best: incumbent.iter().map(|m| index[m]).collect(),
        nodes: 0,
        budget,
        start: Instant::now(),
        aborted: false,
        lcm: lcm_upto(inst.d.min(inst.r as usize).max(1)),
    };
    solver.search(inst.d > 1);
    let mut witness: Vec<Monomial> = solver.best.iter().map(|&c| inst.candidates[c].clone()).collect();
    witness.sort();
    debug_assert!(inst.is_cover(&witness));
    Ok(DominationResult {
        r: inst.r,
        d: inst.d,
        value: witness.len() as u64,
        witness,
        optimal: !solver.aborted,
        nodes_explored: solver.nodes,
    })
}

/// Colour `Σ i t_i mod d` of the standard colouring.
pub fn colour(m: &Monomial) -> usize {
    let d = m.dim();
    m.exponents().iter().enumerate().map(|(i, &t)| i * t as usize).sum::<usize>() % d
}

/// Degree-`r` monomials grouped by colour, `d` classes in colour order.
pub fn colour_classes(r: u32, d: usize) -> Vec<Vec<Monomial>> {
    let mut classes = vec![Vec::new(); d];
    for m in monomials_of_degree(r, d) {
        classes[colour(&m)].push(m);
    }
    classes
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FBar {
    pub value: u64,
    pub class_sizes: Vec<u64>,
}

/// Smallest colour class of the standard colouring on degree-`r` monomials.
pub fn f_bar(r: u32, d: usize) -> Result<FBar> {
    if r == 0 || d == 0 {
        return Err(Error::Invalid(format!("need r >= 1 and d >= 1, got r = {r}, d = {d}")));
    }
    let class_sizes: Vec<u64> = colour_classes(r, d).iter().map(|c| c.len() as u64).collect();
    let value = *class_sizes.iter().min().expect("d >= 1");
    Ok(FBar { value, class_sizes })
}

/// `m' = m * x_j / x_i` with `i != j`: adjacency in `G_{r,d}`.
pub fn adjacent_same_degree(a: &Monomial, b: &Monomial) -> bool {
    if a.dim() != b.dim() || a.degree() != b.degree() {
        return false;
    }
    let diff: u32 = a.exponents().iter().zip(b.exponents()).map(|(x, y)| x.abs_diff(*y)).sum();
    diff == 2
}

/// Adjacency in `TG_{r,d}`: same-degree adjacency, or one divides the other
/// with degrees differing by one.
pub fn adjacent_total(a: &Monomial, b: &Monomial) -> bool {
    if adjacent_same_degree(a, b) {
        return true;
    }
    let (lo, hi) = if a.degree() < b.degree() { (a, b) } else { (b, a) };
    hi.degree() == lo.degree() + 1 && lo.divides(hi).unwrap_or(false)
}

/// Möbius function by trial division.
pub fn mobius(mut n: u64) -> i64 {
    assert!(n >= 1);
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

/// Number of aperiodic binary necklaces with `r` ones and `d` zeros:
/// `(1/(r+d)) Σ_{k | gcd(r+d, r)} μ(k) C((r+d)/k, r/k)`.
pub fn necklaces_l2(r: u64, d: u64) -> Result<u64> {
    let n = r + d;
    if n == 0 {
        return Err(Error::Invalid("r + d must be positive".into()));
    }
    let g = num_integer::gcd(n, r);
    let mut total: i128 = 0;
    for k in 1..=g {
        if g.is_multiple_of(k) {
            let c = crate::subset::checked_binomial(n / k, r / k).ok_or(Error::Overflow)?;
            total += mobius(k) as i128 * c as i128;
        }
    }
    debug_assert_eq!(total % n as i128, 0);
    Ok((total / n as i128) as u64)
}

/// Largest `r + d` for [`necklaces_bruteforce`].
pub const NECKLACE_CAP: u64 = 24;

/// Counts rotation orbits of full length among binary strings with `r` ones
/// and `d` zeros by direct enumeration.
pub fn necklaces_bruteforce(r: u64, d: u64) -> Result<u64> {
    let n = r + d;
    if n > NECKLACE_CAP {
        return Err(Error::SizeCap { n: n as usize, cap: NECKLACE_CAP as usize });
    }
    if n == 0 {
        return Err(Error::Invalid("r + d must be positive".into()));
    }
    let full = (1u64 << n) - 1;
    let rotate = |w: u64| ((w << 1) | (w >> (n - 1))) & full;
    let mut aperiodic = 0u64;
    for w in crate::subset::k_subsets(n as usize, r as usize) {
        let w = w as u64;
        let mut x = rotate(w);
        let mut period = 1;
        while x != w {
            x = rotate(x);
            period += 1;
        }
        if period == n {
            aperiodic += 1;
        }
    }
    Ok(aperiodic / n)
}

/// For `gcd(r+d, r) = 1`, checks that the rotation `x_i -> x_{i+1}` carries
/// colour class `c` onto class `c + r (mod d)` and that every class has
/// `L_2(r,d)` members.
pub fn colour_class_coprime_check(r: u32, d: usize) -> Result<bool> {
    let g = num_integer::gcd(r as u64 + d as u64, r as u64);
    if g != 1 {
        return Err(Error::NotCoprime(g));
    }
    let classes = colour_classes(r, d);
    let l2 = necklaces_l2(r as u64, d as u64)?;
    for (c, class) in classes.iter().enumerate() {
        if class.len() as u64 != l2 {
            return Ok(false);
        }
        let target = (c + r as usize) % d;
        let mut image: Vec<Monomial> = class.iter().map(Monomial::rotate).collect();
        image.sort();
        if image != classes[target] {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ScanStatus {
    /// `f` proven optimal and `f = f_bar = L2`.
    Confirmed,
    /// `f` proven optimal but the three values are not all equal.
    Gap,
    /// The search did not finish; `f` is only an upper bound.
    Timeout,
}

impl ScanStatus {
    pub fn as_str(self) -> &'static str {
        match self {
            ScanStatus::Confirmed => "confirmed",
            ScanStatus::Gap => "gap",
            ScanStatus::Timeout => "timeout",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub r: u32,
    pub d: usize,
    pub f: u64,
    pub f_optimal: bool,
    pub f_bar: u64,
    #[serde(rename = "L2")]
    pub l2: u64,
    pub status: ScanStatus,
}

pub fn scan_cell(r: u32, d: usize, budget: Budget) -> Result<ScanRow> {
    let res = f_exact(r, d, budget)?;
    let fb = f_bar(r, d)?.value;
    let l2 = necklaces_l2(r as u64, d as u64)?;
    let status = if !res.optimal {
        ScanStatus::Timeout
    } else if res.value == fb && fb == l2 {
        ScanStatus::Confirmed
    } else {
        ScanStatus::Gap
    };
    Ok(ScanRow { r, d, f: res.value, f_optimal: res.optimal, f_bar: fb, l2, status })
}

/// Every cell `1 <= r <= r_max`, `1 <= d <= d_max`, ordered by `(r, d)`.
/// Cells run in parallel on the current rayon pool.
pub fn conjecture_scan(r_max: u32, d_max: usize, budget: Budget) -> Result<Vec<ScanRow>> {
    let cells: Vec<(u32, usize)> =
        (1..=r_max).flat_map(|r| (1..=d_max).map(move |d| (r, d))).collect();
    let mut rows = cells
        .par_iter()
        .map(|&(r, d)| scan_cell(r, d, budget))
        .collect::<Result<Vec<_>>>()?;
    rows.sort_by_key(|row| (row.r, row.d));
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Smallest cover by trying every subset size in increasing order.
    fn brute_force_f(r: u32, d: usize) -> u64 {
        let inst = DominationInstance::new(r, d).unwrap();
        let c = inst.candidates.len();
        assert!(c <= 20);
        let full: u64 = (1 << inst.universe.len()) - 1;
        let masks: Vec<u64> =
            inst.covers.iter().map(|cv| cv.iter().fold(0, |m, &u| m | 1 << u)).collect();
        (0u32..1 << c)
            .filter(|s| {
                let cov = (0..c).filter(|&i| s >> i & 1 == 1).fold(0, |m, i| m | masks[i]);
                cov == full
            })
            .map(|s| s.count_ones() as u64)
            .min()
            .unwrap()
    }

    #[test]
    fn brute_force_agrees_on_small_cells() {
        for (r, d) in [(1, 1), (1, 4), (2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2), (2, 5), (4, 3)] {
            let exact = f_exact(r, d, Budget::unlimited()).unwrap();
            assert!(exact.optimal);
            assert_eq!(exact.value, brute_force_f(r, d), "r={r} d={d}");
        }
    }

    #[test]
    fn f_exact_examples() {
        let res = f_exact(3, 3, Budget::unlimited()).unwrap();
        assert_eq!(res.value, 3);
        assert!(res.optimal);
        let inst = DominationInstance::new(3, 3).unwrap();
        assert!(inst.is_cover(&res.witness));
        for d in 1..=6 {
            assert_eq!(f_exact(1, d, Budget::unlimited()).unwrap().value, 1);
            assert_eq!(f_exact(2, d, Budget::unlimited()).unwrap().value, (d as u64).div_ceil(2));
        }
    }

    #[test]
    fn budget_exhaustion_reports_best_known() {
        let res = f_exact(5, 4, Budget::nodes(3)).unwrap();
        assert!(!res.optimal);
        assert_eq!(res.value, f_bar(5, 4).unwrap().value);
    }

    #[test]
    fn f_bar_examples() {
        let fb = f_bar(3, 3).unwrap();
        assert_eq!(fb.value, 3);
        let mut sizes = fb.class_sizes.clone();
        sizes.sort();
        assert_eq!(sizes, vec![3, 3, 4]);
        for r in 1..6 {
            assert_eq!(f_bar(r, 1).unwrap().value, 1);
        }
    }

    #[test]
    fn colouring_is_proper_and_classes_dominate() {
        for r in 1..=5u32 {
            for d in 1..=5usize {
                let ms = monomials_of_degree(r, d);
                for a in &ms {
                    for b in &ms {
                        if adjacent_same_degree(a, b) {
                            assert_ne!(colour(a), colour(b));
                        }
                    }
                }
                // clique of size d: the multiples of any degree r-1 monomial
                let base = Monomial::one(d);
                let mut m = base;
                for _ in 1..r {
                    m = m.times_var(0);
                }
                let clique = m.multiples_one_step();
                for a in &clique {
                    for b in &clique {
                        assert!(a == b || adjacent_same_degree(a, b));
                    }
                }
                let inst = DominationInstance::new(r, d).unwrap();
                for class in colour_classes(r, d) {
                    assert!(inst.is_cover(&class));
                    // dominates V(G_{r,d}) as well
                    for v in &ms {
                        assert!(class.iter().any(|c| c == v || adjacent_same_degree(c, v)));
                    }
                }
            }
        }
    }

    #[test]
    fn total_graph_adjacency() {
        let a = Monomial::new(vec![1, 0]);
        let b = Monomial::new(vec![1, 1]);
        assert!(adjacent_total(&a, &b));
        assert!(!adjacent_total(&a, &Monomial::new(vec![0, 2])));
    }

    #[test]
    fn mobius_values() {
        let expected = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1, -1, 0];
        for (i, &mu) in expected.iter().enumerate() {
            assert_eq!(mobius(i as u64 + 1), mu);
        }
    }

    #[test]
    fn necklace_examples() {
        assert_eq!(necklaces_l2(2, 3).unwrap(), 2);
        assert_eq!(necklaces_l2(2, 2).unwrap(), 1);
        assert_eq!(necklaces_l2(3, 3).unwrap(), 3);
        assert_eq!(necklaces_bruteforce(2, 2).unwrap(), 1);
        assert_eq!(necklaces_bruteforce(1, 1).unwrap(), 1);
        assert!(necklaces_bruteforce(20, 5).is_err());
    }

    #[test]
    fn coprime_classes() {
        assert!(colour_class_coprime_check(2, 3).unwrap());
        assert!(colour_class_coprime_check(3, 4).unwrap());
        assert_eq!(f_bar(3, 4).unwrap().class_sizes, vec![5; 4]);
        assert_eq!(colour_class_coprime_check(2, 2), Err(Error::NotCoprime(2)));
    }

    #[test]
    fn scan_rows() {
        let row = scan_cell(2, 5, Budget::unlimited()).unwrap();
        assert_eq!((row.f, row.f_bar, row.l2), (3, 3, 3));
        assert_eq!(row.status, ScanStatus::Confirmed);
        let row = scan_cell(1, 1, Budget::unlimited()).unwrap();
        assert_eq!((row.f, row.f_bar, row.l2), (1, 1, 1));
        let rows = conjecture_scan(3, 3, Budget::unlimited()).unwrap();
        let keys: Vec<_> = rows.iter().map(|r| (r.r, r.d)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(rows.len(), 9);
    }
}
