use std::fs;
use std::path::Path;

use pavingkit::io::{self, EnumerationRow, MatroidJson, WitnessJson};
use pavingkit::subset::binomial;
use pavingkit::*;
use serde_json::{json, Value};

use crate::output::Output;
use crate::{Command, Failure};

/// Output to print, and an error to report afterwards (for best-effort
/// results such as an f-solve that ran out of budget).
pub struct Done {
    pub output: Output,
    pub failure: Option<Failure>,
}

impl From<Output> for Done {
    fn from(output: Output) -> Self {
        Done { output, failure: None }
    }
}

type Res = std::result::Result<Done, Failure>;

fn to_value<T: serde::Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("plain data serialises")
}

fn read_file(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("cannot read {}: {e}", path.display())))
}

fn load_matroid(path: &Path) -> std::result::Result<Matroid, Failure> {
    Ok(io::read_matroid(&read_file(path)?)?)
}

fn ratio_string(q: Ratio<u64>) -> String {
    if *q.denom() == 1 {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn run(cmd: &Command) -> Res {
    match cmd {
        Command::Hvector { matroid } => {
            let m = load_matroid(matroid)?;
            Ok(Output::new(to_value(&io::hvector_report(&m)?)).into())
        }
        Command::PavingH { n, r, b } => {
            let h = paving_h_vector(*n, *r, *b)?;
            Ok(Output::new(json!({"n": n, "r": r, "b": b, "h": h})).into())
        }
        Command::Certify { matroid, budget } => certify(&load_matroid(matroid)?, *budget),
        Command::FSolve { r, d, budget, max_nodes } => {
            let budget = Budget { max_nodes: *max_nodes, ..Budget::seconds(*budget) };
            let res = f_exact(*r, *d, budget)?;
            let failure = (!res.optimal).then(|| {
                Failure::budget(format!("budget exhausted; {} is an upper bound on f({r},{d})", res.value))
            });
            Ok(Done { output: Output::new(to_value(&res)), failure })
        }
        Command::Fbar { r, d } => {
            let fb = f_bar(*r, *d)?;
            Ok(Output::new(json!({"r": r, "d": d, "f_bar": fb.value, "class_sizes": fb.class_sizes})).into())
        }
        Command::Necklaces { r, d, brute } => {
            let mut v = json!({"r": r, "d": d, "L2": necklaces_l2(*r, *d)?});
            if *brute {
                v["brute_force"] = json!(necklaces_bruteforce(*r, *d)?);
            }
            Ok(Output::new(v).into())
        }
        Command::Scan { rmax, dmax, budget } => {
            let rows = conjecture_scan(*rmax, *dmax, Budget::seconds(*budget))?;
            Ok(Output::new(to_value(&rows)).into())
        }
        Command::Enumerate { r, n, sparse, allow_loops, allow_coloops, out } => {
            let ms = if *sparse {
                enumerate_sparse_paving(*r, *n)?
            } else {
                let flags = EnumFlags { loopless: !allow_loops, coloopless: !allow_coloops };
                enumerate_paving(*r, *n, flags)?
            };
            let rows: Vec<EnumerationRow> = ms.iter().map(EnumerationRow::new).collect::<pavingkit::Result<_>>()?;
            if let Some(dir) = out {
                write_enumeration(dir, &ms, &rows)?;
            }
            Ok(Output::new(to_value(&rows)).into())
        }
        Command::G { r, n } => {
            let gv = g(*r, *n)?;
            let v = json!({
                "r": r,
                "n": n,
                "g": gv.value,
                "min_bases": gv.witness.basis_count(),
                "class_size": gv.class_size,
                "witness": MatroidJson::from_matroid(&gv.witness),
            });
            Ok(Output::new(v).into())
        }
        Command::Tutte { matroid } => Ok(tutte_output(&tutte(&load_matroid(matroid)?)?).into()),
        Command::TutteSparse { n, r, lambda } => Ok(tutte_output(&tutte_sparse_closed_form(*n, *r, *lambda)?).into()),
        Command::Steiner { design } => {
            let text = read_file(design)?;
            let design: BlockDesign = serde_json::from_str(&text)
                .map_err(|e| Failure::from(Error::Invalid(format!("design JSON: {e}"))))?;
            let steiner = verify_steiner(&design)?;
            let bound = sparse_basis_bound(design.n, design.k)?;
            let mut v = json!({
                "n": design.n,
                "k": design.k,
                "blocks": design.blocks.len(),
                "steiner": steiner,
                "bound": ratio_string(bound),
                "bases": Value::Null,
                "meets_bound": Value::Null,
            });
            if steiner {
                let m = sparse_from_steiner(&design)?;
                v["bases"] = json!(m.basis_count());
                v["meets_bound"] = json!(Ratio::from_integer(m.basis_count()) == bound);
                v["matroid"] = to_value(&MatroidJson::from_matroid(&m));
            }
            Ok(Output::new(v).into())
        }
        Command::Bounds { r, n } => bounds(*r, *n),
    }
}

fn tutte_output(t: &TuttePolynomial) -> Output {
    let json = to_value(&t.to_json());
    let rows = json["terms"].as_array().cloned().unwrap_or_default();
    Output::with_rows(json, rows)
}

fn certify(m: &Matroid, budget: u64) -> Res {
    let h = h_vector(m);
    let paving_route = m.rank() >= 1 && m.coloops() == 0 && m.is_paving();
    let (method, witness) = if paving_route {
        let (n, r) = (m.n(), m.rank());
        let dom = f_exact(r as u32, n - r, Budget::seconds(60))?;
        ("paving", Some(certify_paving_h(n, r, m.basis_count(), &dom)?))
    } else {
        ("search", certify_general_h(&h, budget)?)
    };
    let v = match &witness {
        Some(mc) => json!({
            "h": h,
            "method": method,
            "certified": true,
            "witness": WitnessJson::from_multicomplex(mc),
            "reason": Value::Null,
        }),
        None => json!({
            "h": h,
            "method": method,
            "certified": false,
            "witness": Value::Null,
            "reason": format!("no pure multicomplex over {} indeterminates has this degree census", h.0.get(1).copied().unwrap_or(0)),
        }),
    };
    Ok(Output::new(v).into())
}

fn bounds(r: usize, n: usize) -> Res {
    let s = s_bound(r, n)?;
    let offset = if r >= 1 { binomial(n as u64 - 1, r as u64 - 1) } else { 0 };
    let sparse = sparse_basis_bound(n, r)?;
    let (f, f_bound) = if r < n {
        let res = f_exact(r as u32, n - r, Budget::seconds(60))?;
        if !res.optimal {
            return Err(Failure::budget(format!("f({r},{}) not resolved within budget", n - r)));
        }
        (json!(res.value), json!(offset + res.value))
    } else {
        (Value::Null, Value::Null)
    };
    let v = json!({
        "r": r,
        "n": n,
        "S": s as i64,
        "S_bound": offset as i64 + s as i64,
        "f": f,
        "f_bound": f_bound,
        "sparse_bound": ratio_string(sparse),
    });
    Ok(Output::new(v).into())
}

fn write_enumeration(dir: &Path, ms: &[Matroid], rows: &[EnumerationRow]) -> std::result::Result<(), Failure> {
    let io_err = |e: std::io::Error| Failure::usage(format!("cannot write to {}: {e}", dir.display()));
    fs::create_dir_all(dir).map_err(io_err)?;
    for (m, row) in ms.iter().zip(rows) {
        let mut text = io::write_matroid(m);
        text.push('\n');
        fs::write(dir.join(format!("{}.json", row.hash)), text).map_err(io_err)?;
    }
    let mut w = csv::Writer::from_path(dir.join("summary.csv")).map_err(|e| Failure::usage(e.to_string()))?;
    for row in rows {
        w.serialize(row).map_err(|e| Failure::usage(e.to_string()))?;
    }
    w.flush().map_err(io_err)?;
    Ok(())
}
