//! JSON file formats: instance files, raw twist data, census lines and the
//! `check` report.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::cartier::{
    hesitant_walk_from_twist_witness, is_untwisted_capped, CartierVector, SignVector,
};
use crate::error::{Error, Result};
use crate::rootdata::LieType;
use crate::twistedcube::LatticeCensus;
use crate::walks::{find_hesitant_lambda_walk, is_minimal, minimize, WalkKind, WalkWitness};
use crate::weightword::{DominantWeight, Instance, TwistData, Word};

/// Either a `{type, word, weight}` instance or raw `{n, c, ell}` data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InstanceFile {
    Derived(Instance),
    Raw(TwistData),
}

impl InstanceFile {
    pub fn twist_data(&self) -> Result<TwistData> {
        match self {
            InstanceFile::Derived(inst) => inst.twist_data(),
            InstanceFile::Raw(d) => Ok(d.clone()),
        }
    }

    pub fn n(&self) -> usize {
        match self {
            InstanceFile::Derived(inst) => inst.word.len(),
            InstanceFile::Raw(d) => d.n(),
        }
    }
}

fn field<'a, T: Deserialize<'a>>(obj: &'a Map<String, Value>, key: &str) -> Result<T> {
    let v = obj
        .get(key)
        .ok_or_else(|| Error::Parse(format!("missing field {key:?}")))?;
    T::deserialize(v).map_err(|e| Error::Parse(format!("field {key:?}: {e}")))
}

fn only_keys(obj: &Map<String, Value>, allowed: &[&str]) -> Result<()> {
    match obj.keys().find(|k| !allowed.contains(&k.as_str())) {
        Some(k) => Err(Error::Parse(format!("unexpected field {k:?}"))),
        None => Ok(()),
    }
}

pub fn parse_instance(text: &str) -> Result<InstanceFile> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("instance JSON: {e}")))?;
    let obj = value
        .as_object()
        .ok_or_else(|| Error::Parse("instance must be a JSON object".into()))?;
    let derived = ["type", "word", "weight"].iter().any(|k| obj.contains_key(*k));
    let raw = ["n", "c", "ell"].iter().any(|k| obj.contains_key(*k));
    match (derived, raw) {
        (true, false) => {
            only_keys(obj, &["type", "word", "weight"])?;
            let t: String = field(obj, "type")?;
            let lie_type: LieType = t.parse()?;
            let word = Word::new(field(obj, "word")?);
            let weight: Vec<i64> = field(obj, "weight")?;
            Ok(InstanceFile::Derived(Instance::new(
                lie_type,
                word,
                DominantWeight::new(weight)?,
            )?))
        }
        (false, true) => {
            only_keys(obj, &["n", "c", "ell"])?;
            Ok(InstanceFile::Raw(raw_from_object(obj)?))
        }
        (true, true) => Err(Error::Parse(
            "instance mixes {type, word, weight} with {n, c, ell}".into(),
        )),
        (false, false) => Err(Error::Parse(
            "instance needs either {type, word, weight} or {n, c, ell}".into(),
        )),
    }
}

fn raw_from_object(obj: &Map<String, Value>) -> Result<TwistData> {
    let n: usize = field(obj, "n")?;
    let ell: Vec<i64> = field(obj, "ell")?;
    if ell.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: ell.len(),
        });
    }
    let c: BTreeMap<String, i64> = if obj.contains_key("c") {
        field(obj, "c")?
    } else {
        BTreeMap::new()
    };
    let mut entries = Vec::with_capacity(c.len());
    for (key, v) in c {
        let (j, k) = key
            .split_once(',')
            .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
            .ok_or_else(|| Error::Parse(format!("c key {key:?} is not \"j,k\"")))?;
        entries.push(((j, k), v));
    }
    TwistData::from_entries(ell, entries)
}

pub fn raw_to_json(d: &TwistData) -> Value {
    let c: Map<String, Value> = d
        .nonzero_c()
        .into_iter()
        .map(|((j, k), v)| (format!("{j},{k}"), Value::from(v)))
        .collect();
    serde_json::json!({ "n": d.n(), "c": c, "ell": d.ells() })
}

#[derive(Debug, Serialize)]
struct CensusSummary {
    positive: usize,
    negative: usize,
    signed: i64,
}

/// One JSON object per point in lexicographic order, then a summary line.
pub fn census_lines(census: &LatticeCensus) -> Vec<String> {
    let mut out: Vec<String> = census
        .points
        .iter()
        .map(|p| serde_json::to_string(p).expect("serializable"))
        .collect();
    out.push(
        serde_json::to_string(&CensusSummary {
            positive: census.positive,
            negative: census.negative,
            signed: census.signed(),
        })
        .expect("serializable"),
    );
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WalkReport {
    pub kind: WalkKind,
    pub positions: Vec<usize>,
    pub subword: Vec<usize>,
    pub minimal: bool,
}

impl WalkReport {
    pub fn new(inst: &Instance, witness: &WalkWitness) -> Result<WalkReport> {
        let rd = inst.lie_type.root_data();
        Ok(WalkReport {
            kind: witness.kind,
            positions: witness.positions.clone(),
            subword: witness.subword(&inst.word).entries().to_vec(),
            minimal: is_minimal(&rd, &inst.word, witness, &inst.weight)?,
        })
    }
}

/// Output of `check`: the verdict, the failing `(sigma, k, m)` when twisted,
/// and for derived instances the canonical hesitant lambda-walk, a minimal
/// sub-walk of it, and the walk rebuilt from the sigma witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub untwisted: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub sigma: Option<SignVector>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<CartierVector>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub walk: Option<WalkReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub minimal_walk: Option<WalkReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub walk_from_sigma: Option<WalkReport>,
}

pub fn check_instance(file: &InstanceFile, max_n: usize) -> Result<CheckReport> {
    let d = file.twist_data()?;
    let verdict = is_untwisted_capped(&d, max_n)?;
    let mut report = CheckReport {
        untwisted: verdict.untwisted,
        sigma: None,
        k: None,
        m: None,
        walk: None,
        minimal_walk: None,
        walk_from_sigma: None,
    };
    if let Some(w) = &verdict.witness {
        report.sigma = Some(w.sigma.clone());
        report.k = Some(w.k);
        report.m = Some(w.m.clone());
    }
    let InstanceFile::Derived(inst) = file else {
        return Ok(report);
    };
    let rd = inst.lie_type.root_data();
    if let Some(walk) = find_hesitant_lambda_walk(&rd, &inst.word, &inst.weight) {
        let minimal = minimize(&rd, &inst.word, &walk, &inst.weight)?;
        report.walk = Some(WalkReport::new(inst, &walk)?);
        report.minimal_walk = Some(WalkReport::new(inst, &minimal)?);
    }
    if let Some(w) = &verdict.witness {
        if d.ells().iter().all(|&l| l >= 0) {
            let back = hesitant_walk_from_twist_witness(&d, &inst.word, &w.sigma, w.k)?;
            report.walk_from_sigma = Some(WalkReport::new(inst, &back)?);
        }
    }
    Ok(report)
}

impl CheckReport {
    pub fn human(&self) -> String {
        let mut out = String::new();
        out.push_str(if self.untwisted {
            "untwisted\n"
        } else {
            "twisted\n"
        });
        if let (Some(sigma), Some(k), Some(m)) = (&self.sigma, self.k, &self.m) {
            out.push_str(&format!("  sigma = {sigma}, k = {k}, m = {:?}\n", m.values()));
        }
        for (label, w) in [
            ("hesitant walk", &self.walk),
            ("minimal walk", &self.minimal_walk),
            ("walk from sigma", &self.walk_from_sigma),
        ] {
            if let Some(w) = w {
                out.push_str(&format!(
                    "  {label}: {:?} at positions {:?}{}\n",
                    w.subword,
                    w.positions,
                    if w.minimal { " (minimal)" } else { "" }
                ));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::twistedcube::lattice_points;

    #[test]
    fn parse_both_shapes() {
        let f = parse_instance(r#"{"type":"A2","word":[1,2,1],"weight":[2,1]}"#).unwrap();
        assert!(matches!(f, InstanceFile::Derived(_)));
        let f = parse_instance(r#"{"n":2,"c":{"1,2":1},"ell":[3,5]}"#).unwrap();
        let InstanceFile::Raw(d) = f else { panic!() };
        assert_eq!(d.c(1, 2), 1);
        assert_eq!(d.ells(), &[3, 5]);
        let f = parse_instance(r#"{"n":3,"ell":[0,1,2]}"#).unwrap();
        assert_eq!(f.n(), 3);
    }

    #[test]
    fn malformed_instances() {
        for bad in [
            "[]",
            "{}",
            "not json",
            r#"{"type":"A2","word":[1,2,1]}"#,
            r#"{"type":"A2","word":[1,3],"weight":[1,0]}"#,
            r#"{"type":"A2","word":[1],"weight":[1,-1]}"#,
            r#"{"type":"A2","word":[1],"weight":[1]}"#,
            r#"{"type":"Q2","word":[1],"weight":[1,0]}"#,
            r#"{"type":"A2","word":[1],"weight":[1,0],"n":1}"#,
            r#"{"type":"A2","word":[1],"weight":[1,0],"extra":1}"#,
            r#"{"n":2,"c":{"2,1":1},"ell":[3,5]}"#,
            r#"{"n":2,"c":{"1-2":1},"ell":[3,5]}"#,
            r#"{"n":2,"ell":[3]}"#,
        ] {
            assert!(parse_instance(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn raw_json_roundtrip() {
        let d = TwistData::from_entries(vec![3, 5, 0], [((1, 2), 1), ((2, 3), -2)]).unwrap();
        let text = raw_to_json(&d).to_string();
        assert_eq!(parse_instance(&text).unwrap(), InstanceFile::Raw(d));
    }

    #[test]
    fn census_format() {
        let d = TwistData::from_entries(vec![3, 5], [((1, 2), 1)]).unwrap();
        let lines = census_lines(&lattice_points(&d).unwrap());
        assert_eq!(lines.len(), 12);
        assert_eq!(lines[0], r#"{"x":[-1,5],"rho":-1}"#);
        assert_eq!(lines[11], r#"{"positive":10,"negative":1,"signed":9}"#);
    }

    #[test]
    fn check_reports() {
        let f = parse_instance(r#"{"type":"A2","word":[1,2,1],"weight":[2,1]}"#).unwrap();
        let r = check_instance(&f, 20).unwrap();
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(json["untwisted"], false);
        assert_eq!(json["sigma"], "-+-");
        assert_eq!(json["k"], 1);
        assert_eq!(json["m"], serde_json::json!([-2, 0, 2]));
        assert_eq!(
            json["walk"],
            serde_json::json!({"kind":"hesitant_lambda_walk","positions":[1,3],"subword":[1,1],"minimal":true})
        );

        let f = parse_instance(r#"{"n":2,"c":{"1,2":1},"ell":[3,5]}"#).unwrap();
        let r = check_instance(&f, 20).unwrap();
        assert!(!r.untwisted && r.walk.is_none());
        assert_eq!(r.m.unwrap().values(), &[-2, 5]);

        let f = parse_instance(r#"{"type":"A3","word":[1,2,3,1,2,1],"weight":[0,0,3]}"#).unwrap();
        let r = check_instance(&f, 20).unwrap();
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"untwisted":true}"#);
        assert_eq!(r.human(), "untwisted\n");
        assert!(check_instance(&f, 5).is_err());
    }
}
