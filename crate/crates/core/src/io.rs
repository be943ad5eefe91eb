//! JSON interchange formats.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hvec::{self, FVector, HVector};
use crate::matroid::Matroid;
use crate::multicomplex::Multicomplex;
use crate::monomial::Monomial;

/// `{"n": 4, "bases": [[0,1], [0,2], ...]}` with each basis strictly
/// increasing.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatroidJson {
    pub n: usize,
    pub bases: Vec<Vec<usize>>,
}

impl MatroidJson {
    pub fn from_matroid(m: &Matroid) -> MatroidJson {
        MatroidJson { n: m.n(), bases: m.basis_lists() }
    }

    /// Validates list shape and the basis axioms.
    pub fn to_matroid(&self) -> Result<Matroid> {
        for b in &self.bases {
            if b.windows(2).any(|w| w[0] >= w[1]) {
                return Err(Error::MalformedSubset(b.clone()));
            }
        }
        Matroid::from_bases(self.n, &self.bases)
    }
}

pub fn read_matroid(json: &str) -> Result<Matroid> {
    let parsed: MatroidJson =
        serde_json::from_str(json).map_err(|e| Error::Invalid(format!("matroid JSON: {e}")))?;
    parsed.to_matroid()
}

pub fn write_matroid(m: &Matroid) -> String {
    serde_json::to_string(&MatroidJson::from_matroid(m)).expect("plain data serialises")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bounds {
    #[serde(rename = "S")]
    pub s: Option<i64>,
    pub hibi: bool,
    /// Only meaningful for connected matroids; `None` otherwise.
    pub brown_colbourn: Option<bool>,
}

/// `{"f": [...], "h": [...], "bounds": {"S", "hibi", "brown_colbourn"}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HVectorReport {
    pub f: FVector,
    pub h: HVector,
    pub bounds: Bounds,
}

pub fn hvector_report(m: &Matroid) -> Result<HVectorReport> {
    let f = hvec::f_vector(m);
    let h = hvec::h_from_f(&f)?;
    let s = if m.rank() >= 1 {
        hvec::s_bound(m.rank(), m.n()).ok().and_then(|v| i64::try_from(v).ok())
    } else {
        None
    };
    let brown_colbourn = if m.is_connected() {
        Some(hvec::brown_colbourn_check(&h, &hvec::default_bc_samples())?)
    } else {
        None
    };
    Ok(HVectorReport { bounds: Bounds { s, hibi: hvec::hibi_check(&h), brown_colbourn }, f, h })
}

/// `{"d", "maximal", "o_sequence", "pure"}` for a multicomplex witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessJson {
    pub d: usize,
    pub maximal: Vec<Monomial>,
    pub o_sequence: Vec<u64>,
    pub pure: bool,
}

impl WitnessJson {
    pub fn from_multicomplex(mc: &Multicomplex) -> WitnessJson {
        let os = mc.o_sequence();
        WitnessJson { d: mc.d(), maximal: mc.maximal(), o_sequence: os.entries, pure: os.pure }
    }
}

/// One line of an enumeration summary.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationRow {
    pub hash: String,
    pub n: usize,
    pub r: usize,
    pub bases: u64,
    pub paving: bool,
    pub sparse: bool,
    pub h: String,
}

impl EnumerationRow {
    pub fn new(m: &Matroid) -> Result<EnumerationRow> {
        let cf = crate::canonical::canonical_form(m)?;
        let h = hvec::h_vector(m);
        Ok(EnumerationRow {
            hash: cf.hash_hex(),
            n: m.n(),
            r: m.rank(),
            bases: m.basis_count(),
            paving: m.is_paving(),
            sparse: m.is_sparse_paving(),
            h: h.0.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "),
        })
    }
}
