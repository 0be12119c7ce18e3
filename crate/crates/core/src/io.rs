//! JSON instance and certificate files.
//!
//! Instances are tagged by `kind` (`poset`, `bigraph`, `family`, `sequence`).
//! Certificates are tagged the same way and carry every set in sorted order,
//! with covers sorted by their smallest element, so that serialized output is
//! canonical.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::dilworth::{self, PreconditionCheck};
use crate::erdos_szekeres::{self, IntSeq, Monotone, SubseqWitness};
use crate::hall::{self, BipartiteGraph, Matching, SdrAssignment, SetFamily};
use crate::mirsky;
use crate::oracle;
use crate::poset::{AntichainCover, ChainCover, FinitePoset};
use crate::Caps;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum InstanceFile {
    Poset {
        elements: Vec<String>,
        #[serde(default)]
        edges: Vec<(String, String)>,
    },
    Bigraph {
        left: Vec<String>,
        right: Vec<String>,
        #[serde(default)]
        edges: Vec<(String, String)>,
    },
    Family {
        members: BTreeMap<String, Vec<String>>,
    },
    Sequence {
        values: Vec<i64>,
    },
}

/// A validated instance.
#[derive(Debug, Clone)]
pub enum Instance {
    Poset(FinitePoset<String>),
    Bigraph(BipartiteGraph<String>),
    Family(SetFamily<String, String>),
    Sequence(IntSeq),
}

impl Instance {
    pub fn kind(&self) -> &'static str {
        match self {
            Instance::Poset(_) => "poset",
            Instance::Bigraph(_) => "bigraph",
            Instance::Family(_) => "family",
            Instance::Sequence(_) => "sequence",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("validation error at {location}: {message}")]
    Validation { location: String, message: String },
}

fn invalid(location: impl Into<String>, message: impl Into<String>) -> IoError {
    IoError::Validation {
        location: location.into(),
        message: message.into(),
    }
}

fn check_unique(field: &str, ids: &[String]) -> Result<(), IoError> {
    let mut seen = HashSet::new();
    for (i, id) in ids.iter().enumerate() {
        if !seen.insert(id) {
            return Err(invalid(
                format!("{field}[{i}]"),
                format!("duplicate id {id:?}"),
            ));
        }
    }
    Ok(())
}

fn check_edges(
    edges: &[(String, String)],
    from: &HashSet<&String>,
    to: &HashSet<&String>,
) -> Result<(), IoError> {
    for (i, (u, v)) in edges.iter().enumerate() {
        if !from.contains(u) {
            return Err(invalid(
                format!("edges[{i}]"),
                format!("dangling endpoint {u:?}"),
            ));
        }
        if !to.contains(v) {
            return Err(invalid(
                format!("edges[{i}]"),
                format!("dangling endpoint {v:?}"),
            ));
        }
    }
    Ok(())
}

fn warn_if_large(size: usize, caps: &Caps) {
    if size > caps.carrier_warn {
        log::warn!(
            "instance has {size} elements, above the advisory limit of {}; exhaustive routines will refuse it",
            caps.carrier_warn
        );
    }
}

/// Parses and validates an instance file.
pub fn parse_instance(bytes: &[u8], caps: &Caps) -> Result<Instance, IoError> {
    let text = std::str::from_utf8(bytes).map_err(|e| IoError::Parse(e.to_string()))?;
    let file: InstanceFile =
        serde_json::from_str(text).map_err(|e| IoError::Parse(e.to_string()))?;
    validate_instance(file, caps)
}

pub fn validate_instance(file: InstanceFile, caps: &Caps) -> Result<Instance, IoError> {
    match file {
        InstanceFile::Poset { elements, edges } => {
            if elements.is_empty() {
                return Err(invalid("elements", "carrier is empty"));
            }
            check_unique("elements", &elements)?;
            let ids: HashSet<&String> = elements.iter().collect();
            check_edges(&edges, &ids, &ids)?;
            warn_if_large(elements.len(), caps);
            FinitePoset::build(elements, edges)
                .map(Instance::Poset)
                .map_err(|e| invalid("edges", e.to_string()))
        }
        InstanceFile::Bigraph { left, right, edges } => {
            if left.is_empty() {
                return Err(invalid("left", "left vertex set is empty"));
            }
            if right.is_empty() {
                return Err(invalid("right", "right vertex set is empty"));
            }
            check_unique("left", &left)?;
            check_unique("right", &right)?;
            let l: HashSet<&String> = left.iter().collect();
            if let Some(i) = right.iter().position(|v| l.contains(v)) {
                return Err(invalid(
                    format!("right[{i}]"),
                    format!(
                        "{:?} is also a left vertex (sides must be disjoint)",
                        right[i]
                    ),
                ));
            }
            let r: HashSet<&String> = right.iter().collect();
            check_edges(&edges, &l, &r)?;
            warn_if_large(left.len() + right.len(), caps);
            BipartiteGraph::new(left, right, edges)
                .map(Instance::Bigraph)
                .map_err(|e| invalid("edges", e.to_string()))
        }
        InstanceFile::Family { members } => {
            for (name, items) in &members {
                check_unique(&format!("members.{name}"), items)?;
            }
            Ok(Instance::Family(SetFamily::new(members)))
        }
        InstanceFile::Sequence { values } => {
            if values.is_empty() {
                return Err(invalid("values", "sequence is empty"));
            }
            let mut seen = HashSet::new();
            for (i, v) in values.iter().enumerate() {
                if !seen.insert(v) {
                    return Err(invalid(
                        format!("values[{i}]"),
                        format!("duplicate value {v}"),
                    ));
                }
            }
            warn_if_large(values.len(), caps);
            IntSeq::from_list(values)
                .map(Instance::Sequence)
                .map_err(|e| invalid("values", e.to_string()))
        }
    }
}

/// Solver provenance recorded in certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub algorithm: String,
    pub tie_break: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub precondition_check: Option<PreconditionCheck>,
}

impl Meta {
    fn new(algorithm: &str, precondition_check: Option<PreconditionCheck>) -> Self {
        Meta {
            algorithm: algorithm.into(),
            tie_break: "lexicographic-id".into(),
            precondition_check,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SetViolation {
    pub set: BTreeSet<String>,
    pub deficiency: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubfamilyViolation {
    pub subfamily: BTreeSet<String>,
    pub union_size: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Certificate {
    Width {
        width: usize,
        antichain: BTreeSet<String>,
    },
    Height {
        height: usize,
        chain: BTreeSet<String>,
    },
    ChainCover {
        width: usize,
        cover: Vec<BTreeSet<String>>,
        antichain: BTreeSet<String>,
        meta: Meta,
    },
    AntichainCover {
        height: usize,
        layers: Vec<BTreeSet<String>>,
        chain: BTreeSet<String>,
        meta: Meta,
    },
    CheckDilworth {
        width: usize,
        cover_size: usize,
        equal: bool,
    },
    CheckMirsky {
        height: usize,
        cover_size: usize,
        equal: bool,
    },
    Matching {
        pairs: BTreeSet<(String, String)>,
        meta: Meta,
    },
    HallViolation {
        violation: SetViolation,
    },
    Sdr {
        choice: BTreeMap<String, String>,
        meta: Meta,
    },
    SdrViolation {
        violation: SubfamilyViolation,
    },
    Es {
        m: usize,
        n: usize,
        monotone: Monotone,
        subsequence: Vec<i64>,
        meta: Meta,
    },
}

impl Certificate {
    /// Whether this certificate reports a failed premise rather than a
    /// constructed object.
    pub fn is_violation(&self) -> bool {
        match self {
            Certificate::HallViolation { .. } | Certificate::SdrViolation { .. } => true,
            Certificate::CheckDilworth { equal, .. } | Certificate::CheckMirsky { equal, .. } => {
                !equal
            }
            _ => false,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificates serialize")
    }

    pub fn from_json(bytes: &[u8]) -> Result<Self, IoError> {
        serde_json::from_slice(bytes).map_err(|e| IoError::Parse(e.to_string()))
    }
}

pub fn chain_cover_certificate(cert: &dilworth::DilworthCertificate<String>) -> Certificate {
    Certificate::ChainCover {
        width: cert.width,
        cover: cert.cover.clone().canonical().chains,
        antichain: cert.antichain_witness.clone(),
        meta: Meta::new("perles-recursion", None),
    }
}

pub fn antichain_cover_certificate(cert: &mirsky::MirskyCertificate<String>) -> Certificate {
    Certificate::AntichainCover {
        height: cert.height,
        layers: cert.layers.antichains.clone(),
        chain: cert.chain_witness.clone(),
        meta: Meta::new("maximal-layer-peeling", None),
    }
}

pub fn matching_certificate(outcome: hall::MatchingOutcome<String>) -> Certificate {
    match outcome {
        hall::MatchingOutcome::Matched { matching, check } => Certificate::Matching {
            pairs: matching.pairs,
            meta: Meta::new("dilworth-reduction", Some(check)),
        },
        hall::MatchingOutcome::Violated(v) => Certificate::HallViolation {
            violation: SetViolation {
                set: v.set,
                deficiency: v.deficiency,
            },
        },
    }
}

pub fn sdr_certificate(outcome: hall::SdrOutcome<String, String>) -> Certificate {
    match outcome {
        hall::SdrOutcome::Assigned(a) => Certificate::Sdr {
            choice: a.choice,
            meta: Meta::new("dilworth-reduction", None),
        },
        hall::SdrOutcome::Violated(v) => Certificate::SdrViolation {
            violation: SubfamilyViolation {
                subfamily: v.subfamily,
                union_size: v.union_size,
            },
        },
    }
}

pub fn es_certificate(m: usize, n: usize, w: &SubseqWitness) -> Certificate {
    Certificate::Es {
        m,
        n,
        monotone: w.kind,
        subsequence: w.subsequence.values().to_vec(),
        meta: Meta::new("dilworth-pre-es", None),
    }
}

/// Outcome of re-checking a certificate against its instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub valid: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl Verdict {
    fn ok() -> Self {
        Verdict {
            valid: true,
            reason: None,
        }
    }

    fn fail(reason: impl Into<String>) -> Self {
        Verdict {
            valid: false,
            reason: Some(reason.into()),
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Verdict::fail(format!($($msg)+));
        }
    };
}

/// Re-checks `cert` against `inst` with the verifiers only. Covers paired
/// with a witness of the same size certify themselves; bare extremum claims
/// and the equality reports are recomputed with the oracle.
pub fn verify_certificate(inst: &Instance, cert: &Certificate, caps: &Caps) -> Verdict {
    match (inst, cert) {
        (Instance::Poset(p), Certificate::Width { width, antichain }) => {
            ensure!(p.is_antichain(antichain), "witness is not an antichain");
            ensure!(
                antichain.len() == *width,
                "witness size differs from claimed width"
            );
            match oracle::max_antichain(p, caps) {
                Ok(best) => ensure!(best.size == *width, "a larger antichain exists"),
                Err(e) => return Verdict::fail(format!("cannot confirm maximality: {e}")),
            }
            Verdict::ok()
        }
        (Instance::Poset(p), Certificate::Height { height, chain }) => {
            ensure!(p.is_chain(chain), "witness is not a chain");
            ensure!(
                chain.len() == *height,
                "witness size differs from claimed height"
            );
            match oracle::max_chain(p, caps) {
                Ok(best) => ensure!(best.size == *height, "a longer chain exists"),
                Err(e) => return Verdict::fail(format!("cannot confirm maximality: {e}")),
            }
            Verdict::ok()
        }
        (
            Instance::Poset(p),
            Certificate::ChainCover {
                width,
                cover,
                antichain,
                ..
            },
        ) => {
            ensure!(p.is_antichain(antichain), "witness is not an antichain");
            ensure!(
                antichain.len() == *width,
                "antichain size differs from width"
            );
            ensure!(
                p.verify_chain_cover(&ChainCover::new(cover.clone())),
                "cover is not a chain cover"
            );
            ensure!(cover.len() == *width, "cover size differs from width");
            Verdict::ok()
        }
        (
            Instance::Poset(p),
            Certificate::AntichainCover {
                height,
                layers,
                chain,
                ..
            },
        ) => {
            ensure!(p.is_chain(chain), "witness is not a chain");
            ensure!(chain.len() == *height, "chain size differs from height");
            ensure!(
                p.verify_antichain_cover(&AntichainCover::new(layers.clone())),
                "layers are not an antichain cover"
            );
            ensure!(layers.len() == *height, "layer count differs from height");
            Verdict::ok()
        }
        (
            Instance::Poset(p),
            Certificate::CheckDilworth {
                width,
                cover_size,
                equal,
            },
        ) => {
            match dilworth::check_dilworth(p, caps) {
                Ok(r) => ensure!(
                    (r.width, r.cover_size, r.equal) == (*width, *cover_size, *equal),
                    "report differs from recomputation"
                ),
                Err(e) => return Verdict::fail(e.to_string()),
            }
            Verdict::ok()
        }
        (
            Instance::Poset(p),
            Certificate::CheckMirsky {
                height,
                cover_size,
                equal,
            },
        ) => {
            match mirsky::check_mirsky(p, caps) {
                Ok(r) => ensure!(
                    (r.height, r.cover_size, r.equal) == (*height, *cover_size, *equal),
                    "report differs from recomputation"
                ),
                Err(e) => return Verdict::fail(e.to_string()),
            }
            Verdict::ok()
        }
        (Instance::Bigraph(g), Certificate::Matching { pairs, .. }) => {
            let m = Matching {
                pairs: pairs.clone(),
            };
            ensure!(
                hall::verify_matching(g, &m, true),
                "not an L-perfect matching"
            );
            Verdict::ok()
        }
        (Instance::Bigraph(g), Certificate::HallViolation { violation }) => {
            ensure!(!violation.set.is_empty(), "empty violating set");
            let n = match hall::neighborhood(g, &violation.set) {
                Ok(n) => n.len(),
                Err(e) => return Verdict::fail(e.to_string()),
            };
            ensure!(n < violation.set.len(), "set has enough neighbours");
            ensure!(
                violation.set.len() - n == violation.deficiency,
                "deficiency differs from recomputation"
            );
            Verdict::ok()
        }
        (Instance::Family(f), Certificate::Sdr { choice, .. }) => {
            let a = SdrAssignment {
                choice: choice.clone(),
            };
            ensure!(
                hall::verify_sdr(f, &a),
                "not a system of distinct representatives"
            );
            Verdict::ok()
        }
        (Instance::Family(f), Certificate::SdrViolation { violation }) => {
            ensure!(!violation.subfamily.is_empty(), "empty subfamily");
            ensure!(
                violation
                    .subfamily
                    .iter()
                    .all(|n| f.members.contains_key(n)),
                "subfamily names an unknown member"
            );
            let u = hall::union_of(f, &violation.subfamily).len();
            ensure!(u < violation.subfamily.len(), "union is large enough");
            ensure!(
                u == violation.union_size,
                "union size differs from recomputation"
            );
            Verdict::ok()
        }
        (
            Instance::Sequence(s),
            Certificate::Es {
                m,
                n,
                monotone,
                subsequence,
                ..
            },
        ) => {
            ensure!(s.len() == m * n + 1, "sequence length is not m*n+1");
            let sub = match IntSeq::from_list(subsequence.clone()) {
                Ok(sub) => sub,
                Err(e) => return Verdict::fail(e.to_string()),
            };
            let want = match monotone {
                Monotone::Increasing => m + 1,
                Monotone::Decreasing => n + 1,
            };
            ensure!(sub.len() == want, "subsequence length differs from {want}");
            let w = SubseqWitness {
                kind: *monotone,
                subsequence: sub,
            };
            ensure!(
                erdos_szekeres::verify_subseq(s, &w),
                "not a monotone subsequence"
            );
            Verdict::ok()
        }
        (inst, _) => Verdict::fail(format!(
            "certificate kind does not apply to a {} instance",
            inst.kind()
        )),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const P3: &str = r#"{"kind":"poset","elements":["a","b","c"],"edges":[["a","b"]]}"#;

    #[test]
    fn parses_p3() {
        match parse_instance(P3.as_bytes(), &Caps::default()).unwrap() {
            Instance::Poset(p) => {
                assert_eq!(p.len(), 3);
                assert!(p.lt(&"a".to_string(), &"b".to_string()));
            }
            other => panic!("{other:?}"),
        }
    }

    fn location(json: &str) -> String {
        match parse_instance(json.as_bytes(), &Caps::default()).unwrap_err() {
            IoError::Validation { location, .. } => location,
            e => panic!("{e}"),
        }
    }

    #[test]
    fn validation_locations() {
        assert_eq!(
            location(r#"{"kind":"bigraph","left":["a"],"right":["a"],"edges":[]}"#),
            "right[0]"
        );
        assert_eq!(
            location(r#"{"kind":"sequence","values":[1,1]}"#),
            "values[1]"
        );
        assert_eq!(
            location(r#"{"kind":"poset","elements":["a","b","a"]}"#),
            "elements[2]"
        );
        assert_eq!(
            location(r#"{"kind":"poset","elements":["a"],"edges":[["a","z"]]}"#),
            "edges[0]"
        );
        assert_eq!(
            location(r#"{"kind":"poset","elements":["a","b"],"edges":[["a","b"],["b","a"]]}"#),
            "edges"
        );
        assert_eq!(
            location(r#"{"kind":"bigraph","left":["l"],"right":["r"],"edges":[["r","l"]]}"#),
            "edges[0]"
        );
        assert_eq!(
            location(r#"{"kind":"family","members":{"S":["x","x"]}}"#),
            "members.S[1]"
        );
        assert_eq!(location(r#"{"kind":"poset","elements":[]}"#), "elements");
    }

    #[test]
    fn parse_errors() {
        let caps = Caps::default();
        assert!(matches!(
            parse_instance(b"{", &caps),
            Err(IoError::Parse(_))
        ));
        assert!(matches!(
            parse_instance(br#"{"kind":"lattice"}"#, &caps),
            Err(IoError::Parse(_))
        ));
        assert!(matches!(
            parse_instance(&[0xff, 0xfe], &caps),
            Err(IoError::Parse(_))
        ));
    }

    #[test]
    fn certificate_json_shape() {
        let cert = Certificate::HallViolation {
            violation: SetViolation {
                set: ["l2".to_string(), "l1".to_string()].into_iter().collect(),
                deficiency: 1,
            },
        };
        assert_eq!(
            cert.to_json(),
            r#"{"kind":"hall-violation","violation":{"set":["l1","l2"],"deficiency":1}}"#
        );
        assert!(cert.is_violation());
        assert_eq!(
            Certificate::from_json(cert.to_json().as_bytes()).unwrap(),
            cert
        );
    }

    #[test]
    fn verify_rejects_wrong_kind() {
        let inst = parse_instance(P3.as_bytes(), &Caps::default()).unwrap();
        let cert = Certificate::Sdr {
            choice: BTreeMap::new(),
            meta: Meta::new("x", None),
        };
        assert!(!verify_certificate(&inst, &cert, &Caps::default()).valid);
    }
}
