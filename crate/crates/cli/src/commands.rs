use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use multibraid_core::elim::{complete_filtration, is_eliminable, tilde_degrees};
use multibraid_core::graph::{enumerate_classes, parse_digraph, parse_graph, EdgeBicoloredGraph, GraphClass};
use multibraid_core::multibraid::{char_poly, classify as classify_spec, lmp2, parse_spec, MultiBraidSpec, VerdictStatus};
use multibraid_core::oracle::{freeness_verdict, parse_arrangement, CertificateReport, CertificateStatus, OracleOptions};
use multibraid_core::{deformation_verdict, DeformationSpec, Rational, RationalArrangement};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::report::Report;

pub type CmdResult = Result<Report, String>;

fn read(path: &Path) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn to_value<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("report payloads serialize")
}

fn big_int(v: i128) -> Value {
    i64::try_from(v).map(Value::from).unwrap_or_else(|_| Value::String(v.to_string()))
}

pub fn classify(graph: &Path, k: u32, n: Option<Vec<u32>>) -> CmdResult {
    let g = parse_graph(&read(graph)?).map_err(|e| e.to_string())?;
    let n = n.unwrap_or_else(|| vec![0; g.vertex_count()]);
    let spec = MultiBraidSpec::new(k, n.clone(), g.clone()).map_err(|e| e.to_string())?;
    let evidence = is_eliminable(&g);
    let verdict = classify_spec(&spec);

    let filtration = match &evidence.ordering {
        Some(nu) => {
            let f = complete_filtration(&g, nu).map_err(|e| e.to_string())?;
            json!({ "ordering": nu.sequence(), "verified": f.verify(&g), "added": f.added })
        }
        None => Value::Null,
    };
    let chi = char_poly(&spec).ok();
    let multiplicities: Vec<Value> = spec.multiplicities().iter().map(|&(i, j, m)| json!([i, j, m])).collect();
    let result = json!({
        "status": verdict.status,
        "condition": verdict.condition,
        "exponents": verdict.exponents,
        "tilde_degrees": verdict.tilde_degrees,
        "big_n": spec.big_n(),
        "multiplicities": multiplicities,
        "char_poly_roots": chi.as_ref().map(|c| c.roots.clone()),
        "char_poly_coefficients": chi.map(|c| c.coefficients().into_iter().map(big_int).collect::<Vec<_>>()),
        "lmp2": lmp2(&spec).ok(),
        "evidence": evidence,
        "filtration": filtration,
    });
    let inputs = json!({ "graph": g.to_doc(), "k": k, "n": n });
    let mut report = Report::new("classify", inputs, result, None);
    if !evidence.consistent() {
        report.internal = Some("ordering search and structural characterization disagree".into());
    } else if let Value::Object(f) = &report.result["filtration"] {
        if f.get("verified") != Some(&Value::Bool(true)) {
            report.internal = Some("filtration failed verification".into());
        }
    }
    Ok(report)
}

#[derive(Serialize)]
struct OracleCell {
    status: CertificateStatus,
    degrees: Vec<u32>,
    agrees: bool,
}

#[derive(Serialize)]
struct CensusRow {
    key: String,
    representative: multibraid_core::graph::GraphDoc,
    labeled_count: u64,
    eliminable: bool,
    structural: bool,
    ordering: Option<Vec<usize>>,
    tilde_degrees: Option<Vec<i64>>,
    oracle: Option<OracleCell>,
}

fn census_row(c: &GraphClass, with_oracle: bool, opts: &OracleOptions) -> Result<CensusRow, String> {
    let g = &c.representative;
    let ev = is_eliminable(g);
    let degrees = ev.ordering.as_ref().map(|nu| tilde_degrees(g, nu).expect("search returns valid orderings").sorted());
    let oracle = if with_oracle {
        let spec = MultiBraidSpec::uniform(1, g.clone());
        let cert = freeness_verdict(&spec.arrangement::<Rational>().map_err(|e| e.to_string())?, opts)
            .map_err(|e| e.to_string())?;
        let expected = classify_spec(&spec).exponents.map(|e| e.0.iter().map(|&x| x as u32).collect::<Vec<_>>());
        let agrees = match (&expected, cert.status) {
            (Some(e), CertificateStatus::Free) => *e == cert.generator_degrees(),
            (None, CertificateStatus::NonFree) => true,
            _ => false,
        };
        Some(OracleCell { status: cert.status, degrees: cert.generator_degrees(), agrees })
    } else {
        None
    };
    Ok(CensusRow {
        key: c.canonical_key.iter().map(|d| char::from(b'0' + d)).collect(),
        representative: g.to_doc(),
        labeled_count: c.labeled_count,
        eliminable: ev.eliminable,
        structural: ev.structural.passes(),
        ordering: ev.ordering.map(|nu| nu.sequence().to_vec()),
        tilde_degrees: degrees,
        oracle,
    })
}

/// Classes seen among `samples` random labeled graphs on six vertices; the
/// count is the number of draws landing in each class.
fn sampled_classes(samples: usize, swap: bool, seed: u64) -> Result<Vec<GraphClass>, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = 3u64.pow(15);
    let mut seen: BTreeMap<Vec<u8>, GraphClass> = BTreeMap::new();
    for _ in 0..samples {
        let g = EdgeBicoloredGraph::from_index(6, rng.gen_range(0..total));
        let key = g.canonical_key(swap).map_err(|e| e.to_string())?;
        seen.entry(key.clone())
            .or_insert_with(|| GraphClass { canonical_key: key, representative: g, labeled_count: 0 })
            .labeled_count += 1;
    }
    Ok(seen.into_values().collect())
}

pub fn census(vertices: usize, swap: bool, with_oracle: bool, sample: Option<usize>, seed: u64) -> CmdResult {
    let classes = match (vertices, sample) {
        (0, _) => return Err("the census needs at least one vertex".into()),
        (1..=5, None) => enumerate_classes(vertices, swap).map_err(|e| e.to_string())?,
        (1..=5, Some(_)) => return Err("--sample applies to six vertices; smaller censuses are exhaustive".into()),
        (6, Some(s)) => sampled_classes(s, swap, seed)?,
        (6, None) => return Err("six vertices is too large for an exhaustive census; pass --sample".into()),
        _ => return Err(format!("censuses are limited to six vertices (got {vertices})")),
    };
    let opts = OracleOptions { seed, ..OracleOptions::default() };
    let rows: Vec<CensusRow> =
        classes.par_iter().map(|c| census_row(c, with_oracle, &opts)).collect::<Result<_, _>>()?;

    let eliminable = rows.iter().filter(|r| r.eliminable).count();
    let structural_disagreements = rows.iter().filter(|r| r.eliminable != r.structural).count();
    let oracle_disagreements = with_oracle.then(|| rows.iter().filter(|r| r.oracle.as_ref().is_some_and(|o| !o.agrees)).count());
    let summary = json!({
        "classes": rows.len(),
        "eliminable": eliminable,
        "non_eliminable": rows.len() - eliminable,
        "labeled_total": rows.iter().map(|r| r.labeled_count).sum::<u64>(),
        "structural_disagreements": structural_disagreements,
        "oracle_disagreements": oracle_disagreements,
    });
    let inputs = json!({ "vertices": vertices, "include_swap": swap, "oracle": with_oracle, "sample": sample });
    let seeded = (with_oracle || sample.is_some()).then_some(seed);
    let mut report = Report::new("census", inputs, json!({ "summary": summary, "classes": rows }), seeded);
    if structural_disagreements > 0 {
        report.internal = Some(format!("{structural_disagreements} classes where search and structure disagree"));
    } else if oracle_disagreements.unwrap_or(0) > 0 {
        report.internal = Some(format!("{} classes where the oracle contradicts the theorem", oracle_disagreements.unwrap()));
    }
    Ok(report)
}

fn arrangement_echo(a: &RationalArrangement) -> Value {
    let hs: Vec<Value> = a
        .hyperplanes()
        .iter()
        .map(|h| json!({ "normal": h.normal.iter().map(|x| x.to_string()).collect::<Vec<_>>(), "multiplicity": h.mult }))
        .collect();
    json!({ "dimension": a.ambient_dim(), "hyperplanes": hs })
}

pub fn oracle(spec: Option<PathBuf>, arrangement: Option<PathBuf>, budget: Option<u32>, seed: u64) -> CmdResult {
    let (a, spec) = match (spec, arrangement) {
        (Some(p), _) => {
            let spec = parse_spec(&read(&p)?).map_err(|e| e.to_string())?;
            (spec.arrangement::<Rational>().map_err(|e| e.to_string())?, Some(spec))
        }
        (None, Some(p)) => (parse_arrangement(&read(&p)?).map_err(|e| e.to_string())?, None),
        (None, None) => return Err("pass --spec or --arrangement".into()),
    };
    let opts = OracleOptions { budget, seed, ..OracleOptions::default() };
    let cert = freeness_verdict(&a, &opts).map_err(|e| e.to_string())?;
    let certificate = CertificateReport::from(&cert);

    let mut disagreement = None;
    let theorem = spec.as_ref().map(|s| {
        let v = classify_spec(s);
        let expected: Option<Vec<u32>> = v.exponents.as_ref().map(|e| e.0.iter().map(|&x| x as u32).collect());
        // undecided on either side: nothing to compare
        let agrees = match (v.status, cert.status) {
            (VerdictStatus::Free, CertificateStatus::Free) => Some(expected.as_ref() == Some(&cert.generator_degrees())),
            (VerdictStatus::NonFree, CertificateStatus::NonFree) => Some(true),
            (VerdictStatus::Free, CertificateStatus::NonFree) | (VerdictStatus::NonFree, CertificateStatus::Free) => {
                Some(false)
            }
            _ => None,
        };
        if agrees == Some(false) {
            disagreement = Some(format!("theorem says {:?}, oracle says {:?}", v.status, cert.status));
        }
        json!({ "status": v.status, "condition": v.condition, "exponents": v.exponents, "agrees": agrees })
    });
    let mut inputs = json!({ "arrangement": arrangement_echo(&a), "budget": budget });
    if let Some(s) = &spec {
        inputs["spec"] = to_value(s);
    }
    let result = json!({ "certificate": certificate, "theorem": theorem });
    let mut report = Report::new("oracle", inputs, result, Some(seed));
    report.internal = disagreement;
    Ok(report)
}

pub fn deform(digraph: &Path, k: u32) -> CmdResult {
    let g = parse_digraph(&read(digraph)?).map_err(|e| e.to_string())?;
    if g.vertex_count() < 2 {
        return Err("a deformation needs at least two vertices".into());
    }
    let spec = DeformationSpec::new(g.clone(), k);
    let verdict = deformation_verdict(&spec);
    let inputs = json!({ "digraph": g.to_doc(), "k": k });
    Ok(Report::new("deform", inputs, to_value(&verdict), None))
}
