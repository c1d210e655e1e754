use std::fs;

use magnus_forest::dendriform::{
    descent_magnus_coefficient, fixpoint_log_coefficient, magnus_coefficient,
};
use magnus_forest::linalg::{matrix_exp, FloatMatrix};
use magnus_forest::numeric::{chen_reference, mps_omega_parts};
use magnus_forest::path::{default_path, ExactMatrix, MatPolyPath};
use magnus_forest::perm::{mps_coefficient, Permutation};
use magnus_forest::rational::{format_rational, parse_rational, Rational};
use magnus_forest::verify::{run_suite, NumericInput, Report, Suite};
use magnus_forest::{rotate, unrotate, BinaryTree, RootedTree};
use serde_json::{json, Value};

use crate::args::{CoefficientKind, Format, PathPoint, TreeKindArg};
use crate::table::{float, Table};

pub const TREE_CAP: usize = 8;
pub const PERM_CAP: usize = 6;
pub const MAGNUS_CAP: usize = 5;

pub const EXIT_VERIFY: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAP: u8 = 3;

#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Failure {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }
}

impl From<magnus_forest::Error> for Failure {
    fn from(e: magnus_forest::Error) -> Self {
        Failure::input(e.to_string())
    }
}

/// What a command prints and the exit code it asks for.
pub struct Output {
    pub body: String,
    pub code: u8,
}

impl Output {
    fn ok(body: String) -> Self {
        Output { body, code: 0 }
    }
}

pub struct Settings {
    pub format: Format,
    pub parallel: bool,
    pub unsafe_degree: bool,
}

impl Settings {
    fn cap(&self, what: &str, degree: usize, cap: usize) -> Result<(), Failure> {
        if degree > cap && !self.unsafe_degree {
            return Err(Failure {
                code: EXIT_CAP,
                message: format!("{what} degree {degree} exceeds the safety cap {cap}; pass --unsafe-degree to override"),
            });
        }
        Ok(())
    }

    fn render(&self, table: &Table, json: Value) -> String {
        match self.format {
            Format::Text => table.text(),
            Format::Csv => table.csv(),
            Format::Json => pretty(&json),
        }
    }
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

pub fn trees(settings: &Settings, kind: TreeKindArg, degree: usize) -> Result<Output, Failure> {
    settings.cap("tree", degree, TREE_CAP)?;
    let (mut table, mut items) = match kind {
        TreeKindArg::Binary => (
            Table::new(vec![
                "index", "tree", "degree", "leaves", "descents", "rotate",
            ]),
            Vec::new(),
        ),
        TreeKindArg::Rooted => (
            Table::new(vec!["index", "tree", "degree", "leaves", "unrotate"]),
            Vec::new(),
        ),
    };
    match kind {
        TreeKindArg::Binary => {
            for (i, t) in BinaryTree::enumerate(degree).iter().enumerate() {
                let r = rotate(t);
                table.push(vec![
                    (i + 1).to_string(),
                    t.to_string(),
                    t.degree().to_string(),
                    t.leaf_count().to_string(),
                    t.descent_count().to_string(),
                    r.to_string(),
                ]);
                items.push(json!({
                    "tree": t.to_json(),
                    "code": t.to_string(),
                    "degree": t.degree(),
                    "leaves": t.leaf_count(),
                    "descents": t.descent_count(),
                    "rotate": r.to_string(),
                }));
            }
        }
        TreeKindArg::Rooted => {
            for (i, t) in RootedTree::enumerate(degree).iter().enumerate() {
                let b = unrotate(t);
                table.push(vec![
                    (i + 1).to_string(),
                    t.to_string(),
                    t.degree().to_string(),
                    t.leaf_count().to_string(),
                    b.to_string(),
                ]);
                items.push(json!({
                    "tree": t.to_json(),
                    "code": t.to_string(),
                    "degree": t.degree(),
                    "leaves": t.leaf_count(),
                    "unrotate": b.to_string(),
                }));
            }
        }
    }
    let kind_name = match kind {
        TreeKindArg::Binary => "binary",
        TreeKindArg::Rooted => "rooted",
    };
    let json = json!({ "kind": kind_name, "degree": degree, "count": table.len(), "trees": items });
    Ok(Output::ok(settings.render(&table, json)))
}

pub fn coefficients(
    settings: &Settings,
    kind: CoefficientKind,
    degree: usize,
) -> Result<Output, Failure> {
    let trees = matches!(
        kind,
        CoefficientKind::All | CoefficientKind::Rooted | CoefficientKind::Binary
    );
    let perms = matches!(kind, CoefficientKind::All | CoefficientKind::Perm);
    if trees {
        settings.cap("tree", degree, TREE_CAP)?;
    }
    if perms {
        settings.cap("permutation", degree, PERM_CAP)?;
    }
    let mut table = Table::new(vec![
        "formula",
        "degree",
        "object",
        "statistic",
        "coefficient",
    ]);
    let mut push = |formula: &str, n: usize, object: String, stat: String, c: Rational| {
        table.push(vec![
            formula.into(),
            n.to_string(),
            object,
            stat,
            format_rational(&c),
        ]);
    };
    for n in 1..=degree {
        if matches!(kind, CoefficientKind::All | CoefficientKind::Rooted) {
            let rooted = RootedTree::enumerate(n);
            for t in &rooted {
                push(
                    "magnus",
                    n,
                    t.to_string(),
                    format!("L={}", t.leaf_count()),
                    magnus_coefficient(t)?,
                );
            }
            for t in &rooted {
                let c = fixpoint_log_coefficient(t)?;
                push(
                    "fixpoint-log",
                    n,
                    t.to_string(),
                    format!("L={}", t.leaf_count()),
                    c,
                );
            }
        }
        if matches!(kind, CoefficientKind::All | CoefficientKind::Binary) {
            for t in BinaryTree::enumerate(n) {
                let c = descent_magnus_coefficient(&t)?;
                push(
                    "binary-descent",
                    n,
                    t.to_string(),
                    format!("d={}", t.descent_count()),
                    c,
                );
            }
        }
        if perms {
            for sigma in Permutation::all(n) {
                let c = mps_coefficient(&sigma);
                push(
                    "permutation",
                    n,
                    sigma.to_string(),
                    format!("d={}", sigma.descent_count()),
                    c,
                );
            }
        }
    }
    let json = json!({ "degree": degree, "rows": table.json_rows() });
    Ok(Output::ok(settings.render(&table, json)))
}

fn load_path(source: &str) -> Result<MatPolyPath, Failure> {
    if source == "default" {
        return Ok(default_path());
    }
    let text =
        fs::read_to_string(source).map_err(|e| Failure::input(format!("cannot read {source}: {e}")))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Failure::input(format!("{source}: malformed JSON: {e}")))?;
    MatPolyPath::from_json(&value).map_err(|e| Failure::input(format!("{source}: {e}")))
}

fn load_point(point: &PathPoint) -> Result<(MatPolyPath, Rational), Failure> {
    let s =
        parse_rational(&point.s).map_err(|e| Failure::input(format!("--s {}: {e}", point.s)))?;
    if s < magnus_forest::rational::int(0) {
        return Err(Failure::input(format!(
            "--s must be non-negative, got {}",
            point.s
        )));
    }
    Ok((load_path(&point.path)?, s))
}

pub fn verify(
    settings: &Settings,
    suite: &str,
    degree: usize,
    point: &PathPoint,
) -> Result<Output, Failure> {
    let suite: Suite = suite
        .parse()
        .map_err(|e: magnus_forest::Error| Failure::input(e.to_string()))?;
    match suite {
        Suite::Theorem | Suite::Flows => settings.cap("tree", degree, TREE_CAP)?,
        Suite::Axioms | Suite::Psi => settings.cap("permutation", degree, PERM_CAP)?,
        Suite::Numeric | Suite::All => settings.cap("numeric", degree, MAGNUS_CAP)?,
    }
    let (path, s) = load_point(point)?;
    let input = NumericInput {
        path,
        s,
        parallel: settings.parallel,
    };
    let report = run_suite(suite, degree, &input)?;
    let body = match settings.format {
        Format::Json => pretty(&report_json(&report)),
        Format::Csv => report_table(&report).csv(),
        Format::Text => report_text(&report),
    };
    Ok(Output {
        body,
        code: if report.passed() { 0 } else { EXIT_VERIFY },
    })
}

fn status(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

fn report_text(report: &Report) -> String {
    let mut out = format!("suite {} degree {}\n", report.suite, report.degree);
    for c in &report.checks {
        out += &format!("{}  {:<8} {}\n", status(c.passed), c.suite.name(), c.name);
        if !c.detail.is_empty() {
            let label = if c.passed { "note" } else { "counterexample" };
            out += &format!("      {label}: {}\n", c.detail);
        }
    }
    out += &format!(
        "{} checks, {} failed\n",
        report.checks.len(),
        report.failures()
    );
    out
}

fn report_table(report: &Report) -> Table {
    let mut t = Table::new(vec!["suite", "check", "status", "detail"]);
    for c in &report.checks {
        t.push(vec![
            c.suite.name().into(),
            c.name.clone(),
            status(c.passed).into(),
            c.detail.clone(),
        ]);
    }
    t
}

fn report_json(report: &Report) -> Value {
    let checks: Vec<Value> = report
        .checks
        .iter()
        .map(|c| {
            json!({
                "suite": c.suite.name(),
                "check": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })
        })
        .collect();
    json!({
        "suite": report.suite.name(),
        "degree": report.degree,
        "passed": report.passed(),
        "failures": report.failures(),
        "checks": checks,
    })
}

fn float_rows(m: &FloatMatrix) -> Vec<Vec<String>> {
    m.data()
        .chunks(m.dim())
        .map(|r| r.iter().map(|x| float(*x)).collect())
        .collect()
}

fn exact_rows(m: &ExactMatrix) -> Vec<Vec<String>> {
    m.entries()
        .chunks(m.dim())
        .map(|r| r.iter().map(format_rational).collect())
        .collect()
}

pub fn magnus(settings: &Settings, degree: usize, point: &PathPoint) -> Result<Output, Failure> {
    settings.cap("magnus", degree, MAGNUS_CAP)?;
    let (a, s) = load_point(point)?;
    let parts = mps_omega_parts(&a, degree, settings.parallel)?;
    let mut omega = ExactMatrix::zero(a.dim());
    for p in &parts {
        omega = omega.add(&p.eval(&s))?;
    }
    let exp = matrix_exp(&omega.to_f64());
    let reference = chen_reference(&a, degree + 6, &s)?;
    let residual = exp.sub(&reference.to_f64()).norm_inf();

    let body = match settings.format {
        Format::Json => pretty(&json!({
            "degree": degree,
            "s": format_rational(&s),
            "omega": omega.to_json(),
            "exp_omega": float_rows(&exp),
            "chen_reference": reference.to_json(),
            "chen_levels": degree + 6,
            "residual_inf": float(residual),
        })),
        Format::Csv => {
            let mut t = Table::new(vec!["quantity", "row", "col", "value"]);
            let mut matrix = |name: &str, rows: Vec<Vec<String>>| {
                for (i, row) in rows.into_iter().enumerate() {
                    for (j, v) in row.into_iter().enumerate() {
                        t.push(vec![name.into(), i.to_string(), j.to_string(), v]);
                    }
                }
            };
            matrix("omega", exact_rows(&omega));
            matrix("exp_omega", float_rows(&exp));
            matrix("chen_reference", exact_rows(&reference));
            t.push(vec![
                "residual_inf".into(),
                String::new(),
                String::new(),
                float(residual),
            ]);
            t.csv()
        }
        Format::Text => {
            let block = |rows: Vec<Vec<String>>| -> String {
                rows.into_iter()
                    .map(|r| format!("  [{}]\n", r.join(", ")))
                    .collect()
            };
            let mut out = format!("degree {degree}, s = {}\n", format_rational(&s));
            out += &format!("Omega_{degree}(s):\n{}", block(exact_rows(&omega)));
            out += &format!("exp(Omega_{degree}(s)):\n{}", block(float_rows(&exp)));
            out += &format!(
                "Chen reference, {} levels:\n{}",
                degree + 6,
                block(exact_rows(&reference))
            );
            out += &format!("residual (inf-norm): {}\n", float(residual));
            out
        }
    };
    Ok(Output::ok(body))
}
