use std::path::Path;

use kashaev_core::algebra::{LaurentPoly, Matrix, Rational};
use kashaev_core::diagram::{parse_input, Colour, Diagram, ParsedInput};
use kashaev_core::invariants::{
    alexander_kauffman, avoid_roots, conjecture_report, kashaev_invariant, parameter_of, ScanPoint, ScanVerdict,
};
use kashaev_core::matrices::{
    adjacent_pair, factorization_check, goeritz, kashaev_matrix, kauffman_matrix, reduced_kashaev_det, sign_diagonal,
    GoeritzData,
};
use kashaev_core::seifert::{lt_signature, pythagorean_points, seifert_from_braid, CirclePoint, SeifertMatrix};
use serde_json::{json, Value};

use crate::corpus::{lookup, CorpusEntry};
use crate::fuzz;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(kashaev_core::Error),
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(kashaev_core::Error),
    #[error("identity check failed: {}", .0.join(", "))]
    Failed(Vec<String>),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) | CliError::Io { .. } | CliError::Usage(_) => 2,
            CliError::Compute(_) | CliError::Failed(_) => 1,
        }
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn compute<T>(r: kashaev_core::Result<T>) -> Result<T> {
    r.map_err(CliError::Compute)
}

/// A resolved command-line input.
#[derive(Clone, Debug)]
pub struct Input {
    pub label: String,
    pub parsed: ParsedInput,
    pub golden: Option<&'static CorpusEntry>,
}

impl Input {
    pub fn diagram(&self) -> &Diagram {
        &self.parsed.diagram
    }

    pub fn from_entry(entry: &'static CorpusEntry) -> Result<Self> {
        let parsed = entry.parse().map_err(CliError::Parse)?;
        Ok(Input { label: entry.name.to_string(), parsed, golden: Some(entry) })
    }

    /// Seifert matrix of the braid closure, for braid inputs that close to a knot.
    pub fn oracle(&self) -> Option<SeifertMatrix> {
        self.parsed.braid.as_ref().and_then(|b| seifert_from_braid(b).ok())
    }
}

/// Corpus name, then file path, then inline PD or braid text.
pub fn resolve(arg: &str) -> Result<Input> {
    if let Some(entry) = lookup(arg) {
        return Input::from_entry(entry);
    }
    let path = Path::new(arg);
    let (text, fallback) = if path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: arg.to_string(), source })?;
        let stem = path.file_stem().map_or(arg.to_string(), |s| s.to_string_lossy().into_owned());
        (text, stem)
    } else {
        (arg.to_string(), arg.trim().to_string())
    };
    let parsed = parse_input(&text).map_err(CliError::Parse)?;
    let label = parsed.diagram.name().map_or(fallback, str::to_string);
    Ok(Input { label, parsed, golden: None })
}

fn rat(r: &Rational) -> Value {
    Value::String(r.to_string())
}

fn colour_name(c: Colour) -> &'static str {
    match c {
        Colour::White => "white",
        Colour::Black => "black",
    }
}

fn poly_rows(m: &Matrix<LaurentPoly>) -> Value {
    let rows: Vec<Value> = (0..m.rows()).map(|i| m.row(i).iter().map(|p| p.to_string()).collect()).collect();
    Value::Array(rows)
}

fn verdict_name(v: ScanVerdict) -> &'static str {
    match v {
        ScanVerdict::TheoremBacked => "theorem-backed",
        ScanVerdict::Exploratory => "exploratory",
        ScanVerdict::Skipped => "skipped",
    }
}

fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}

pub fn info(input: &Input, as_json: bool) -> Result<String> {
    let d = input.diagram();
    let braid = input.parsed.braid.as_ref().map(|b| b.to_text());
    if as_json {
        return Ok(render(&json!({
            "diagram": input.label,
            "crossings": d.crossing_count(),
            "edges": d.edge_count(),
            "regions": d.region_count(),
            "components": d.component_count(),
            "writhe": d.writhe(),
            "special": d.is_special(),
            "outer_region": d.outer_region(),
            "pd": d.to_pd_string(),
            "braid": braid,
        })));
    }
    let mut out = format!(
        "name: {}\ncrossings: {}\nedges: {}\nregions: {}\ncomponents: {}\nwrithe: {}\nspecial: {}\nouter region: {}\npd: {}\n",
        input.label,
        d.crossing_count(),
        d.edge_count(),
        d.region_count(),
        d.component_count(),
        d.writhe(),
        d.is_special(),
        d.outer_region(),
        d.to_pd_string(),
    );
    if let Some(b) = braid {
        out.push_str(&format!("braid: {b}\n"));
    }
    Ok(out)
}

fn goeritz_json(g: &GoeritzData) -> Value {
    let m = g.matrix.entries();
    let rows: Vec<Value> = (0..m.rows()).map(|i| m.row(i).iter().map(rat).collect()).collect();
    json!({
        "regions": g.matrix.labels(),
        "entries": rows,
        "eta": g.eta,
        "t": g.t,
        "mu": g.mu,
        "signature": g.classical_signature(),
    })
}

pub fn matrices(input: &Input, pair: Option<(usize, usize)>) -> Result<String> {
    let d = input.diagram();
    let pair = adjacent_pair(d, pair).map_err(|e| CliError::Usage(e.to_string()))?;
    let tau = compute(kashaev_matrix(d))?;
    let regions: Vec<Value> = d
        .regions()
        .iter()
        .map(|r| json!({"id": r.id, "colour": colour_name(r.colour), "corners": r.corners}))
        .collect();
    let det = compute(reduced_kashaev_det(d, Some(pair)))?;
    Ok(render(&json!({
        "diagram": input.label,
        "regions": regions,
        "kashaev": poly_rows(&tau.to_laurent()),
        "kauffman": poly_rows(&kauffman_matrix(d)),
        "signs": sign_diagonal(d),
        "pair": [pair.0, pair.1],
        "reduced_det": det.to_string(),
        "goeritz": {
            "white": goeritz_json(&goeritz(d, Colour::White)),
            "black": goeritz_json(&goeritz(d, Colour::Black)),
        },
    })))
}

pub fn alexander(input: &Input) -> Result<String> {
    Ok(compute(alexander_kauffman(input.diagram()))?.to_t_string())
}

pub fn signature_at(input: &Input, x: &Rational) -> Result<String> {
    let d = input.diagram();
    let inertia = compute(kashaev_matrix(d))?.eval(x).inertia();
    let inv = compute(kashaev_invariant(d, x))?;
    Ok(render(&json!({
        "diagram": input.label,
        "x": rat(x),
        "writhe": d.writhe(),
        "signature": inertia.signature(),
        "nullity": inertia.nullity,
        "kashaev_invariant": inv,
    })))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanFormat {
    Json,
    Csv,
}

/// Sample points on the circle, moved off the Alexander roots when possible.
fn sample_points(d: &Diagram, count: usize) -> Result<Vec<CirclePoint>> {
    let points = pythagorean_points(count);
    let delta = compute(alexander_kauffman(d))?;
    if delta.is_zero() {
        return Ok(points);
    }
    compute(avoid_roots(&points, &delta))
}

fn scan_json(points: &[ScanPoint]) -> Value {
    let rows: Vec<Value> = points
        .iter()
        .map(|p| {
            let (re, im) = p.point.omega();
            json!({
                "u": rat(&parameter_of(&p.point)),
                "x": rat(&p.point.x()),
                "omega": [rat(&re), rat(&im)],
                "kashaev": p.kashaev,
                "oracle": p.oracle_2sigma,
                "equal": p.equal,
            })
        })
        .collect();
    Value::Array(rows)
}

pub fn scan(input: &Input, count: usize, format: ScanFormat) -> Result<String> {
    let d = input.diagram();
    let points = sample_points(d, count)?;
    let tau = compute(kashaev_matrix(d))?;
    let oracle = input.oracle();
    let w = d.writhe();
    let mut rows = Vec::with_capacity(points.len());
    for p in &points {
        let kashaev = tau.eval(&p.x()).signature() - w;
        let sigma2 = match &oracle {
            Some(a) => Some(2 * compute(lt_signature(a, p))?),
            None => None,
        };
        rows.push((p, kashaev, sigma2));
    }
    match format {
        ScanFormat::Csv => {
            let mut out = String::from("u,x,kashaev_inv,oracle_2sigma,equal\n");
            for (p, k, o) in rows {
                let (o, eq) = match o {
                    Some(o) => (o.to_string(), (o == k).to_string()),
                    None => (String::new(), String::new()),
                };
                out.push_str(&format!("{},{},{k},{o},{eq}\n", parameter_of(p), p.x()));
            }
            Ok(out)
        }
        ScanFormat::Json => {
            let report = compute(conjecture_report(d, oracle.as_ref(), &points))?;
            let scan = if oracle.is_some() {
                scan_json(&report.scan)
            } else {
                let plain: Vec<Value> = rows
                    .iter()
                    .map(|(p, k, _)| json!({"u": rat(&parameter_of(p)), "x": rat(&p.x()), "kashaev": k}))
                    .collect();
                Value::Array(plain)
            };
            Ok(render(&json!({
                "diagram": input.label,
                "writhe": w,
                "scan": scan,
                "applicability": report.applicability,
                "verdict": verdict_name(report.verdict),
            })))
        }
    }
}

/// Rational points at which rewritten diagrams are compared with the original.
pub const FUZZ_POINTS: [(i64, i64); 5] = [(-3, 4), (-1, 3), (0, 1), (1, 5), (5, 7)];

fn fuzz_points() -> Vec<Rational> {
    FUZZ_POINTS.iter().map(|&(p, q)| Rational::new(p.into(), q.into())).collect()
}

fn incidence_signs(d: &Diagram) -> bool {
    (0..d.crossing_count()).all(|c| {
        [Colour::White, Colour::Black]
            .into_iter()
            .all(|v| d.eta(c, v) * d.orientation_type(c, v) == d.crossings()[c].sign.value())
    })
}

fn writhe_split(d: &Diagram) -> bool {
    goeritz(d, Colour::White).mu + goeritz(d, Colour::Black).mu == d.writhe()
}

pub struct VerifyOutcome {
    pub json: String,
    /// `entry: check` for every failed check.
    pub failures: Vec<String>,
}

fn verify_one(input: &Input, index: usize, fuzz_count: usize, seed: u64, failures: &mut Vec<String>) -> Result<Value> {
    let d = input.diagram();
    let oracle = input.oracle();
    let points = sample_points(d, 64)?;
    let report = compute(conjecture_report(d, oracle.as_ref(), &points))?;
    let mut checks: Vec<(&str, bool)> = vec![
        ("factorization", report.factorization),
        ("alexander_sq", report.alexander_sq_sign.is_some() && report.alexander_oracle != Some(false)),
        ("classical", report.classical),
        ("incidence_signs", report.incidence_signs),
        ("writhe_split", report.writhe_split),
        ("at_one", report.at_one != Some(false)),
        ("nullity", report.nullity),
        ("scan", report.verdict != ScanVerdict::TheoremBacked || report.scan_equal()),
    ];
    let mut golden = serde_json::Map::new();
    if let Some(g) = input.golden {
        if let Some(a) = g.alexander {
            let ok = report.alexander.to_t_string() == a;
            golden.insert("alexander".into(), ok.into());
            checks.push(("golden_alexander", ok));
        }
        if let Some(s) = g.sigma {
            let ok = report.sigma_gl.as_ref().ok() == Some(&s);
            golden.insert("sigma".into(), ok.into());
            checks.push(("golden_sigma", ok));
        }
        if let Some(app) = g.applicable {
            let ok = report.applicability == Some(app);
            golden.insert("applicability".into(), ok.into());
            checks.push(("golden_applicability", ok));
        }
    }

    let xs = fuzz_points();
    let base: Vec<i64> = xs.iter().map(|x| compute(kashaev_invariant(d, x))).collect::<Result<_>>()?;
    let variants = compute(fuzz::variants(d, fuzz_count, seed.wrapping_add(index as u64)))?;
    let (mut fact, mut inc, mut split, mut inv) = (true, true, true, true);
    for v in &variants {
        fact &= compute(factorization_check(v))?;
        inc &= incidence_signs(v);
        split &= writhe_split(v);
        let tau = compute(kashaev_matrix(v))?;
        inv &= xs.iter().zip(&base).all(|(x, b)| tau.eval(x).signature() - v.writhe() == *b);
    }
    checks.extend([
        ("fuzz_factorization", fact),
        ("fuzz_incidence_signs", inc),
        ("fuzz_writhe_split", split),
        ("fuzz_invariance", inv),
    ]);
    for (name, ok) in &checks {
        if !ok {
            failures.push(format!("{}: {name}", input.label));
        }
    }
    Ok(json!({
        "diagram": input.label,
        "identities": {
            "factorization": report.factorization,
            "alexander_sq": report.alexander_sq_sign.is_some(),
            "alexander_oracle": report.alexander_oracle,
            "classical": report.classical,
            "incidence_signs": report.incidence_signs,
            "writhe_split": report.writhe_split,
            "at_one": report.at_one,
            "nullity": report.nullity,
        },
        "kashaev_at_zero": report.kashaev_at_zero,
        "sigma": report.sigma_gl.ok(),
        "sigma_oracle": report.sigma_oracle,
        "scan": scan_json(&report.scan),
        "applicability": report.applicability,
        "verdict": verdict_name(report.verdict),
        "golden": golden,
        "fuzz": {
            "variants": fuzz_count,
            "factorization": fact,
            "incidence_signs": inc,
            "writhe_split": split,
            "invariance": inv,
        },
    }))
}

/// Runs every identity on each input and on `fuzz_count` random rewrites of it.
pub fn verify(inputs: &[Input], fuzz_count: usize, seed: u64) -> Result<VerifyOutcome> {
    let mut failures = Vec::new();
    let mut entries = Vec::with_capacity(inputs.len());
    for (i, input) in inputs.iter().enumerate() {
        entries.push(verify_one(input, i, fuzz_count, seed, &mut failures)?);
    }
    let json = render(&json!({
        "entries": entries,
        "fuzz": fuzz_count,
        "seed": seed,
        "passed": failures.is_empty(),
    }));
    Ok(VerifyOutcome { json, failures })
}
