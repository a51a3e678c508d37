//! Structured output for machine consumption. Field order is fixed so
//! identical runs serialize byte-identically.

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gcp::GcpResult;
use crate::pres::{PlanarZeroSet, PresResult};
use crate::printer::format_poly;
use crate::resultant::ResultantValue;

/// One command invocation's result as a stable JSON document. Fields that
/// do not apply to a command are null.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDoc {
    /// Which operation produced this document.
    pub command: String,
    /// SHA-256 of the raw system source text, hex encoded.
    pub system_hash: String,
    /// The main polynomial result in canonical textual form.
    pub result_poly: String,
    /// Squarefree factors with multiplicities, when computed.
    pub squarefree_factors: Option<Vec<(String, u32)>>,
    /// Valuation in the perturbation variable, when computed.
    pub valuation_s: Option<u32>,
    /// Number of requested trials, for gcd-based commands.
    pub trials: Option<u32>,
    /// Whether the confirmation trial left the result unchanged.
    pub agreement: Option<bool>,
}

impl OutputDoc {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn from_json(text: &str) -> Result<OutputDoc> {
        serde_json::from_str(text)
            .map_err(|e| Error::Validate(format!("malformed output document: {}", e)))
    }

    pub fn for_res(source: &str, r: &ResultantValue) -> OutputDoc {
        OutputDoc {
            command: "res".into(),
            system_hash: system_hash(source),
            result_poly: format_poly(r.poly.as_poly()),
            squarefree_factors: None,
            valuation_s: None,
            trials: None,
            agreement: None,
        }
    }

    pub fn for_gcp(source: &str, g: &GcpResult) -> OutputDoc {
        OutputDoc {
            command: "gcp".into(),
            system_hash: system_hash(source),
            result_poly: format_poly(g.r_s.as_poly()),
            squarefree_factors: None,
            valuation_s: Some(g.s),
            trials: None,
            agreement: None,
        }
    }

    pub fn for_pres(source: &str, r: &PresResult) -> OutputDoc {
        OutputDoc {
            command: "pres".into(),
            system_hash: system_hash(source),
            result_poly: format_poly(r.gcd.as_poly()),
            squarefree_factors: Some(
                r.squarefree.iter().map(|(f, m)| (format_poly(f.as_poly()), *m)).collect(),
            ),
            valuation_s: None,
            trials: Some(r.trials),
            agreement: Some(r.agreement),
        }
    }

    /// `agreement` carries the zero-set comparison result when the caller
    /// ran one.
    pub fn for_planar(source: &str, z: &PlanarZeroSet, agreement: Option<bool>) -> OutputDoc {
        OutputDoc {
            command: "planar".into(),
            system_hash: system_hash(source),
            result_poly: format_poly(z.poly.as_poly()),
            squarefree_factors: None,
            valuation_s: None,
            trials: None,
            agreement,
        }
    }

    pub fn for_check(source: &str) -> OutputDoc {
        OutputDoc {
            command: "check".into(),
            system_hash: system_hash(source),
            result_poly: String::new(),
            squarefree_factors: None,
            valuation_s: None,
            trials: None,
            agreement: None,
        }
    }
}

/// Hex SHA-256 of the raw source text, byte for byte as read.
pub fn system_hash(source: &str) -> String {
    let mut h = Sha256::new();
    h.update(source.as_bytes());
    let digest = h.finalize();
    digest.iter().map(|b| format!("{:02x}", b)).collect()
}
