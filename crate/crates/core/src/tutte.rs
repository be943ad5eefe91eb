//! Tutte polynomials by deletion-contraction.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matroid::{Matroid, CHECK_CAP};
use crate::subset;

/// Polynomial in `x`, `y` with integer coefficients keyed by `(i, j)` for
/// the monomial `x^i y^j`. Zero coefficients are never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct TuttePolynomial {
    coefficients: BTreeMap<(u32, u32), i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteTerm {
    pub i: u32,
    pub j: u32,
    pub c: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TutteJson {
    pub terms: Vec<TutteTerm>,
}

impl TuttePolynomial {
    pub fn one() -> Self {
        Self::monomial(0, 0, 1)
    }

    pub fn monomial(i: u32, j: u32, c: i64) -> Self {
        let mut p = Self::default();
        p.add_term(i, j, c);
        p
    }

    pub fn add_term(&mut self, i: u32, j: u32, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.coefficients.entry((i, j)).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coefficients.remove(&(i, j));
        }
    }

    pub fn add(&mut self, other: &TuttePolynomial) {
        for (&(i, j), &c) in &other.coefficients {
            self.add_term(i, j, c);
        }
    }

    pub fn mul(&self, other: &TuttePolynomial) -> TuttePolynomial {
        let mut out = TuttePolynomial::default();
        for (&(i1, j1), &c1) in &self.coefficients {
            for (&(i2, j2), &c2) in &other.coefficients {
                out.add_term(i1 + i2, j1 + j2, c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, k: i64) -> TuttePolynomial {
        let mut out = TuttePolynomial::default();
        for (&(i, j), &c) in &self.coefficients {
            out.add_term(i, j, c * k);
        }
        out
    }

    fn shift(&self, di: u32, dj: u32) -> TuttePolynomial {
        TuttePolynomial {
            coefficients: self.coefficients.iter().map(|(&(i, j), &c)| ((i + di, j + dj), c)).collect(),
        }
    }

    pub fn coefficient(&self, i: u32, j: u32) -> i64 {
        self.coefficients.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((u32, u32), i64)> + '_ {
        self.coefficients.iter().map(|(&k, &c)| (k, c))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coefficients.values().all(|&c| c >= 0)
    }

    pub fn eval(&self, x: i64, y: i64) -> i128 {
        self.coefficients
            .iter()
            .map(|(&(i, j), &c)| c as i128 * (x as i128).pow(i) * (y as i128).pow(j))
            .sum()
    }

    pub fn to_json(&self) -> TutteJson {
        TutteJson { terms: self.terms().map(|((i, j), c)| TutteTerm { i, j, c }).collect() }
    }
}

/// Tutte polynomial of `m` with loops contributing `y` and coloops `x`.
pub fn tutte(m: &Matroid) -> Result<TuttePolynomial> {
    if m.n() > CHECK_CAP {
        return Err(Error::SizeCap { n: m.n(), cap: CHECK_CAP });
    }
    let mut memo = HashMap::new();
    Ok(tutte_rec(m, &mut memo))
}

fn tutte_rec(m: &Matroid, memo: &mut HashMap<Matroid, TuttePolynomial>) -> TuttePolynomial {
    if m.n() == 0 {
        return TuttePolynomial::one();
    }
    let loops = m.loops();
    let coloops = m.coloops();
    let trivial = loops | coloops;
    if trivial == subset::full(m.n()) {
        return TuttePolynomial::monomial(subset::size(coloops) as u32, subset::size(loops) as u32, 1);
    }
    if let Some(p) = memo.get(m) {
        return p.clone();
    }
    let result = if trivial != 0 {
        // Strip loops and coloops in one go; they factor out as x^a y^b.
        let mut core = m.clone();
        for e in subset::elements(trivial).collect::<Vec<_>>().into_iter().rev() {
            core = core.delete(e).expect("in range");
        }
        tutte_rec(&core, memo).shift(subset::size(coloops) as u32, subset::size(loops) as u32)
    } else {
        let e = m.n() - 1;
        let mut p = tutte_rec(&m.delete(e).expect("in range"), memo);
        p.add(&tutte_rec(&m.contract(e).expect("in range"), memo));
        p
    };
    memo.insert(m.clone(), result.clone());
    result
}
