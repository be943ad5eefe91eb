use std::cmp::Ordering;
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// Monomial `x_0^{t_0} ... x_{d-1}^{t_{d-1}}` over `d` indeterminates.
///
/// Ordered graded-lexicographically: lower degree first, and within a degree
/// a larger exponent on an earlier variable comes first, so the degree-2
/// monomials in two variables are ordered `x0^2, x0*x1, x1^2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    degree: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        let degree = exps.iter().sum();
        Monomial { exps, degree }
    }

    pub fn one(d: usize) -> Self {
        Monomial { exps: vec![0; d], degree: 0 }
    }

    pub fn var(d: usize, i: usize) -> Self {
        let mut exps = vec![0; d];
        exps[i] = 1;
        Monomial { exps, degree: 1 }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exps
    }

    pub fn dim(&self) -> usize {
        self.exps.len()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn divides(&self, other: &Monomial) -> Result<bool> {
        if self.dim() != other.dim() {
            return Err(Error::DimensionMismatch(self.dim(), other.dim()));
        }
        Ok(self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b))
    }

    /// `m / x_i` for every `i` with `t_i > 0`.
    pub fn divisors_one_step(&self) -> Vec<Monomial> {
        (0..self.dim())
            .filter(|&i| self.exps[i] > 0)
            .map(|i| self.divided_by_var(i))
            .collect()
    }

    /// `m * x_i` for every `i`.
    pub fn multiples_one_step(&self) -> Vec<Monomial> {
        (0..self.dim()).map(|i| self.times_var(i)).collect()
    }

    pub fn times_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] += 1;
        Monomial { exps, degree: self.degree + 1 }
    }

    pub fn divided_by_var(&self, i: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[i] -= 1;
        Monomial { exps, degree: self.degree - 1 }
    }

    /// All divisors including 1 and the monomial itself.
    pub fn all_divisors(&self) -> Vec<Monomial> {
        let mut out = vec![Monomial::one(self.dim())];
        for (i, &t) in self.exps.iter().enumerate() {
            let current = std::mem::take(&mut out);
            for m in current {
                let mut e = m.exps.clone();
                for k in 0..=t {
                    e[i] = k;
                    out.push(Monomial::new(e.clone()));
                }
            }
        }
        out
    }

    /// Rotation of variables `x_i -> x_{i+1 mod d}`.
    pub fn rotate(&self) -> Monomial {
        let d = self.dim();
        let mut exps = vec![0; d];
        for (i, &t) in self.exps.iter().enumerate() {
            exps[(i + 1) % d] = t;
        }
        Monomial { exps, degree: self.degree }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree
            .cmp(&other.degree)
            .then_with(|| other.exps.cmp(&self.exps))
            .then_with(|| self.exps.len().cmp(&other.exps.len()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Serialised as its exponent vector.
impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.exps.serialize(s)
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree == 0 {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &t) in self.exps.iter().enumerate() {
            if t == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if t == 1 {
                write!(f, "x{i}")?;
            } else {
                write!(f, "x{i}^{t}")?;
            }
        }
        Ok(())
    }
}

/// All monomials of degree `r` in `d` indeterminates in graded-lex order.
pub fn monomials_of_degree(r: u32, d: usize) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; d];
    fill(&mut exps, 0, r, &mut out);
    out
}

fn fill(exps: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Monomial>) {
    let d = exps.len();
    if d == 0 {
        if left == 0 {
            out.push(Monomial::new(Vec::new()));
        }
        return;
    }
    if i == d - 1 {
        exps[i] = left;
        out.push(Monomial::new(exps.clone()));
        return;
    }
    for t in (0..=left).rev() {
        exps[i] = t;
        fill(exps, i + 1, left - t, out);
    }
    exps[i] = 0;
}
