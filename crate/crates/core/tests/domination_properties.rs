use std::collections::BTreeMap;

use pavingkit::domination::adjacent_same_degree;
use pavingkit::monomial::monomials_of_degree;
use pavingkit::*;

fn grid() -> BTreeMap<(u32, usize), DominationResult> {
    let mut out = BTreeMap::new();
    for r in 1..=6u32 {
        for d in 1..=4usize {
            out.insert((r, d), f_exact(r, d, Budget::seconds(60)).unwrap());
        }
    }
    out
}

#[test]
fn recursion_bound_on_grid() {
    let g = grid();
    for (&(r, d), res) in &g {
        assert!(res.optimal);
        if r >= 2 && d >= 2 {
            let bound = g[&(r, d - 1)].value + g[&(r - 1, d)].value;
            assert!(res.value <= bound, "f({r},{d}) = {} > {bound}", res.value);
        }
    }
}

#[test]
fn witnesses_cover_and_dominate() {
    for ((r, d), res) in grid() {
        assert_eq!(res.witness.len() as u64, res.value);
        let inst = DominationInstance::new(r, d).unwrap();
        assert!(inst.is_cover(&res.witness), "({r},{d})");
        for m in monomials_of_degree(r, d) {
            let dominated = res.witness.iter().any(|w| *w == m || adjacent_same_degree(w, &m));
            assert!(dominated, "({r},{d}): {m} not dominated");
        }
    }
}

#[test]
fn f_never_exceeds_f_bar() {
    for ((r, d), res) in grid() {
        assert!(res.value <= f_bar(r, d).unwrap().value, "({r},{d})");
    }
}

#[test]
fn symmetry_probe_is_reported() {
    let g = grid();
    let mut agree = 0;
    let mut differ = Vec::new();
    for (&(r, d), res) in &g {
        if let Some(other) = g.get(&(d as u32, r as usize)) {
            if res.value == other.value {
                agree += 1;
            } else {
                differ.push((r, d));
            }
        }
    }
    println!("f(r,d) = f(d,r) on {agree} ordered pairs; differs on {differ:?}");
    assert!(agree > 0);
}

#[test]
fn budget_exhaustion_is_not_an_error() {
    let res = f_exact(6, 4, Budget::nodes(1)).unwrap();
    assert!(!res.optimal);
    let inst = DominationInstance::new(6, 4).unwrap();
    assert!(inst.is_cover(&res.witness));
}
