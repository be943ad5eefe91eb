//! Multicomplexes (divisor-closed monomial sets), their O-sequences, and
//! explicit pure witnesses for h-vectors.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::domination::DominationResult;
use crate::error::{Error, Result};
use crate::hvec::{paving_h_vector, HVector};
use crate::monomial::{monomials_of_degree, Monomial};
use crate::subset::binomial;

/// Constructors refuse to materialise more monomials than this.
pub const CENSUS_CAP: usize = 1_000_000;

/// Nonempty divisor-closed set of monomials over `d` indeterminates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multicomplex {
    d: usize,
    monomials: BTreeSet<Monomial>,
}

/// Degree census `h_0..h_s` of a multicomplex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OSequence {
    pub entries: Vec<u64>,
    pub pure: bool,
}

impl Multicomplex {
    /// Smallest divisor-closed set containing `generators`.
    pub fn downward_closure(d: usize, generators: &[Monomial]) -> Result<Multicomplex> {
        let mut monomials = BTreeSet::new();
        monomials.insert(Monomial::one(d));
        for g in generators {
            if g.dim() != d {
                return Err(Error::DimensionMismatch(d, g.dim()));
            }
            let count: u64 = g.exponents().iter().map(|&t| t as u64 + 1).product();
            if count as usize > CENSUS_CAP {
                return Err(Error::CapExceeded(format!("more than {CENSUS_CAP} monomials")));
            }
            monomials.extend(g.all_divisors());
            if monomials.len() > CENSUS_CAP {
                return Err(Error::CapExceeded(format!("more than {CENSUS_CAP} monomials")));
            }
        }
        Ok(Multicomplex { d, monomials })
    }

    /// Validates that `monomials` is nonempty and divisor-closed.
    pub fn from_monomials(d: usize, monomials: BTreeSet<Monomial>) -> Result<Multicomplex> {
        if monomials.is_empty() {
            return Err(Error::Invalid("a multicomplex is nonempty".into()));
        }
        if let Some(m) = monomials.iter().find(|m| m.dim() != d) {
            return Err(Error::DimensionMismatch(d, m.dim()));
        }
        let mc = Multicomplex { d, monomials };
        if !mc.is_divisor_closed() {
            return Err(Error::Invalid("monomial set is not divisor-closed".into()));
        }
        Ok(mc)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.monomials.iter()
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.monomials.contains(m)
    }

    pub fn is_divisor_closed(&self) -> bool {
        self.monomials
            .iter()
            .all(|m| m.divisors_one_step().iter().all(|q| self.monomials.contains(q)))
    }

    /// Members with no proper multiple in the set, graded-lex.
    pub fn maximal(&self) -> Vec<Monomial> {
        self.monomials
            .iter()
            .filter(|m| m.multiples_one_step().iter().all(|q| !self.monomials.contains(q)))
            .cloned()
            .collect()
    }

    pub fn is_pure(&self) -> bool {
        let max = self.maximal();
        max.windows(2).all(|w| w[0].degree() == w[1].degree())
    }

    pub fn o_sequence(&self) -> OSequence {
        let top = self.monomials.iter().map(|m| m.degree()).max().unwrap_or(0) as usize;
        let mut entries = vec![0u64; top + 1];
        for m in &self.monomials {
            entries[m.degree() as usize] += 1;
        }
        OSequence { entries, pure: self.is_pure() }
    }

    /// Union of two multicomplexes over the same indeterminates.
    pub fn union(&self, other: &Multicomplex) -> Result<Multicomplex> {
        if self.d != other.d {
            return Err(Error::DimensionMismatch(self.d, other.d));
        }
        let monomials = self.monomials.union(&other.monomials).cloned().collect();
        Ok(Multicomplex { d: self.d, monomials })
    }
}

/// Pure multicomplex witnessing that the h-vector of a rank-`r` paving
/// matroid on `n` elements with `b` bases is a pure O-sequence.
///
/// Over `d = n - r` indeterminates it contains every monomial of degree
/// below `r`, the degree-`r` monomials of `dom`, and the graded-lex first
/// unused degree-`r` monomials until there are `h_r = b - C(n-1, r-1)` of
/// them. `dom` must be a feasible cover for `(r, d)`.
pub fn certify_paving_h(n: usize, r: usize, b: u64, dom: &DominationResult) -> Result<Multicomplex> {
    let h = paving_h_vector(n, r, b)?;
    if n == r {
        return Err(Error::Invalid("paving witness needs n > r (no coloops)".into()));
    }
    let d = n - r;
    if dom.r as usize != r || dom.d != d {
        return Err(Error::Invalid(format!(
            "domination result is for (r, d) = ({}, {}), expected ({r}, {d})",
            dom.r, dom.d
        )));
    }
    let h_r = *h.0.last().expect("nonempty") as u64;
    let max = binomial(n as u64 - 1, r as u64);
    if h_r > max {
        return Err(Error::HrAboveMax { h_r, max });
    }
    if h_r < dom.witness.len() as u64 {
        return Err(Error::HrBelowF { h_r, f: dom.value });
    }
    let mut top: BTreeSet<Monomial> = dom.witness.iter().cloned().collect();
    for m in monomials_of_degree(r as u32, d) {
        if top.len() as u64 >= h_r {
            break;
        }
        top.insert(m);
    }
    let generators: Vec<Monomial> = top.into_iter().collect();
    let mc = Multicomplex::downward_closure(d, &generators)?;
    let os = mc.o_sequence();
    let expected: Vec<u64> = h.0.iter().map(|&x| x as u64).collect();
    if !os.pure || os.entries != expected {
        return Err(Error::Invalid(
            "domination witness does not cover every monomial of degree r-1".into(),
        ));
    }
    Ok(mc)
}

/// Default node budget for [`certify_general_h`].
pub const DEFAULT_SEARCH_BUDGET: u64 = 5_000_000;

/// Exhaustive search for a pure multicomplex with degree census `h` over
/// `h_1` indeterminates. `Ok(None)` means no such multicomplex exists.
///
/// The top-degree monomials are chosen in graded-lex order, pruning as soon
/// as the divisors collected so far exceed `h_k` in some degree. The first
/// choice may be taken with non-increasing exponents: the least monomial
/// over all variable permutations of any witness has that shape.
pub fn certify_general_h(h: &HVector, budget: u64) -> Result<Option<Multicomplex>> {
    let h: Vec<i64> = h.0.clone();
    if h.first() != Some(&1) || h.iter().any(|&x| x < 0) {
        return Ok(None);
    }
    let top = h.len() - 1;
    if top == 0 {
        return Ok(Some(Multicomplex::downward_closure(0, &[])?));
    }
    if h[top] == 0 {
        return Ok(None);
    }
    let d = h[1] as usize;
    if d == 0 {
        return Ok(None);
    }
    let candidates = monomials_of_degree(top as u32, d);
    let target: Vec<u64> = h.iter().map(|&x| x as u64).collect();
    if target[top] > candidates.len() as u64 {
        return Ok(None);
    }
    let divisors: Vec<Vec<Monomial>> = candidates.iter().map(|c| c.all_divisors()).collect();
    let mut search = GeneralSearch {
        target,
        candidates: &candidates,
        divisors: &divisors,
        counts: HashMap::new(),
        census: vec![0; top + 1],
        chosen: Vec::new(),
        nodes: 0,
        budget,
    };
    if search.run(0)? {
        let gens: Vec<Monomial> = search.chosen.iter().map(|&i| candidates[i].clone()).collect();
        Ok(Some(Multicomplex::downward_closure(d, &gens)?))
    } else {
        Ok(None)
    }
}

struct GeneralSearch<'a> {
    target: Vec<u64>,
    candidates: &'a [Monomial],
    divisors: &'a [Vec<Monomial>],
    counts: HashMap<Monomial, u32>,
    census: Vec<u64>,
    chosen: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl GeneralSearch<'_> {
    fn add(&mut self, i: usize) -> bool {
        let mut ok = true;
        for m in &self.divisors[i] {
            let c = self.counts.entry(m.clone()).or_insert(0);
            *c += 1;
            if *c == 1 {
                let k = m.degree() as usize;
                self.census[k] += 1;
                if self.census[k] > self.target[k] {
                    ok = false;
                }
            }
        }
        self.chosen.push(i);
        ok
    }

    fn remove(&mut self, i: usize) {
        self.chosen.pop();
        for m in &self.divisors[i] {
            let c = self.counts.get_mut(m).expect("present");
            *c -= 1;
            if *c == 0 {
                self.counts.remove(m);
                self.census[m.degree() as usize] -= 1;
            }
        }
    }

    fn run(&mut self, from: usize) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::BudgetExceeded);
        }
        let top = self.target.len() - 1;
        let want = self.target[top] as usize;
        if self.chosen.len() == want {
            return Ok(self.census == self.target);
        }
        let left = want - self.chosen.len();
        for i in from..self.candidates.len() {
            if self.candidates.len() - i < left {
                break;
            }
            if self.chosen.is_empty()
                && !self.candidates[i].exponents().windows(2).all(|w| w[0] >= w[1])
            {
                continue;
            }
            let ok = self.add(i);
            if ok && self.run(i + 1)? {
                return Ok(true);
            }
            self.remove(i);
        }
        Ok(false)
    }
}
