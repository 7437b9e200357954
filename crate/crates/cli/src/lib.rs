//! Command-line front end for the screening engine.
//!
//! Exit codes: 0 on success, 1 when a consistency check fails, 2 on a usage
//! or configuration error.

use std::fmt::Write as _;
use std::path::PathBuf;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ydscreen_core::braid::{braiding_matrix, dynkin};
use ydscreen_core::classify::{central_scalars, screen_central, screen_pair, ClassContext};
use ydscreen_core::grp2::{expected_class_count, ClassType};
use ydscreen_core::numth::{lematec_check, lematec_sweep, snl_check, MAX_SNL_PRIME};
use ydscreen_core::racks::{identify, is_rack_iso, psl_projection};
use ydscreen_core::{
    named_rack, rack_from_class, rack_iso, screen_group, Character, ConjClass, Field, Group, GroupKind, Verdict,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "ydscreen", version, about = "Screen Yetter-Drinfeld modules over SL(2,q) and GL(2,q)")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Reserved. Every computation is deterministic and ignores it.
    #[arg(long, global = true)]
    pub seed_order: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    /// sl2 or gl2.
    #[arg(long, default_value = "sl2")]
    pub group: GroupKind,
    /// Field order, a prime power.
    #[arg(long)]
    pub q: u64,
    /// Defining polynomial over F_p, constant term first (e.g. 3,0,1).
    #[arg(long, value_delimiter = ',')]
    pub modulus: Option<Vec<u32>>,
    /// Largest group order to enumerate.
    #[arg(long)]
    pub bound: Option<u64>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Screen every class and character, then compare with the closed forms.
    Classify(GroupArgs),
    /// List the conjugacy classes with sizes and centralizer orders.
    Tables(GroupArgs),
    /// Braiding matrices and Dynkin diagrams of one class.
    Braiding {
        #[command(flatten)]
        group: GroupArgs,
        /// Class label such as C8(s), or a row such as C7 for all its classes.
        #[arg(long)]
        class: String,
        /// Character exponents, comma separated; all characters when omitted.
        #[arg(long, value_delimiter = ',')]
        character: Option<Vec<u64>>,
    },
    /// Class racks, invariant profiles and named-rack matches.
    Racks {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        class: Option<String>,
    },
    /// Sweep the two totient inequalities.
    CheckLemmas {
        #[arg(long, default_value_t = 100_000)]
        max_n: u64,
        #[arg(long, default_value_t = 31)]
        max_p: u64,
    },
}

/// A rendered result: JSON document, a flat table for CSV and text, and the exit code.
struct Output {
    json: Value,
    header: Vec<&'static str>,
    rows: Vec<Vec<String>>,
    summary: Vec<String>,
    code: i32,
}

enum Failure {
    Usage(anyhow::Error),
}

impl<E: Into<anyhow::Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.into())
    }
}

/// Parses `argv` (program name first), runs the subcommand and returns the exit code.
pub fn run(argv: Vec<String>) -> i32 {
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli).and_then(|out| emit(&cli, &out).map(|_| out.code)) {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            EXIT_USAGE
        }
    }
}

fn execute(cli: &Cli) -> Result<Output, Failure> {
    match &cli.command {
        Command::Classify(args) => classify(args),
        Command::Tables(args) => tables(args),
        Command::Braiding { group, class, character } => braiding(group, class, character.as_deref()),
        Command::Racks { group, class } => racks(group, class.as_deref()),
        Command::CheckLemmas { max_n, max_p } => check_lemmas(*max_n, *max_p),
    }
}

fn emit(cli: &Cli, out: &Output) -> Result<(), Failure> {
    let text = match cli.format {
        Format::Json => serde_json::to_string_pretty(&out.json)? + "\n",
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(&out.header)?;
            for r in &out.rows {
                w.write_record(r)?;
            }
            String::from_utf8(w.into_inner().map_err(|e| anyhow!("{e}"))?)?
        }
        Format::Text => render_text(out),
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))?,
        None => print!("{text}"),
    }
    Ok(())
}

fn render_text(out: &Output) -> String {
    let mut s = String::new();
    for line in &out.summary {
        let _ = writeln!(s, "{line}");
    }
    if !out.rows.is_empty() {
        if !out.summary.is_empty() {
            s.push('\n');
        }
        let mut widths: Vec<usize> = out.header.iter().map(|h| h.chars().count()).collect();
        for r in &out.rows {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |cells: Vec<&str>| {
            let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
            padded.join("  ").trim_end().to_string()
        };
        let _ = writeln!(s, "{}", line(out.header.clone()));
        for r in &out.rows {
            let _ = writeln!(s, "{}", line(r.iter().map(String::as_str).collect()));
        }
    }
    s
}

fn build_group(args: &GroupArgs) -> Result<Group, Failure> {
    let field = Field::for_order(args.q, args.modulus.as_deref()).with_context(|| format!("--q {}", args.q))?;
    let group = match args.bound {
        Some(b) => Group::with_bound(args.group, field, b),
        None => Group::new(args.group, field),
    };
    Ok(group.with_context(|| format!("{} over F_{}", args.group, args.q))?)
}

fn header_json(g: &Group) -> Value {
    json!({ "group": g.kind(), "q": g.q(), "field": g.field().spec() })
}

fn select_classes(classes: Vec<ConjClass>, selector: &str) -> Result<Vec<ConjClass>, Failure> {
    let exact: Vec<ConjClass> = classes.iter().filter(|c| c.label() == selector).cloned().collect();
    if !exact.is_empty() {
        return Ok(exact);
    }
    let row: ClassType = selector.parse().map_err(|e: String| anyhow!("--class: {e}"))?;
    let by_row: Vec<ConjClass> = classes.into_iter().filter(|c| c.tag.row == row).collect();
    if by_row.is_empty() {
        return Err(anyhow!("--class: no class matches {selector:?}").into());
    }
    Ok(by_row)
}

fn classify(args: &GroupArgs) -> Result<Output, Failure> {
    let g = build_group(args)?;
    let report = screen_group(&g).map_err(|e| anyhow!(e))?;
    let rows = report
        .classes
        .iter()
        .map(|c| {
            let ruled: Vec<String> = c.ruled_out.iter().map(|(k, v)| format!("{k}={v}")).collect();
            vec![
                c.tag.clone(),
                c.label.clone(),
                c.size.to_string(),
                c.centralizer_order.to_string(),
                format!("{:?}", c.centralizer_factors),
                c.subjects.to_string(),
                c.survivors.len().to_string(),
                c.unresolved.len().to_string(),
                ruled.join(";"),
                c.flag.map(|f| serde_json::to_value(f).unwrap().as_str().unwrap().to_string()).unwrap_or_default(),
            ]
        })
        .collect();
    let mut summary = vec![format!("{} over F_{} (modulus {:?})", report.group, report.q, report.field.modulus)];
    for c in &report.paper_checks {
        let status = serde_json::to_value(c.status)?;
        summary.push(format!("check {}: {}", c.proposition, status.as_str().unwrap_or("?")));
        for d in &c.diff {
            summary.push(format!("  {d}"));
        }
    }
    let code = if report.all_checks_pass() { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok(Output {
        json: serde_json::to_value(&report)?,
        header: vec![
            "tag",
            "label",
            "size",
            "centralizer_order",
            "centralizer_factors",
            "subjects",
            "survivors",
            "unresolved",
            "ruled_out",
            "flag",
        ],
        rows,
        summary,
        code,
    })
}

fn tables(args: &GroupArgs) -> Result<Output, Failure> {
    let g = build_group(args)?;
    let classes = g.conjugacy_classes().map_err(|e| anyhow!(e))?;
    let expected = expected_class_count(g.kind(), g.q());
    let mut json = header_json(&g);
    json["class_count"] = json!(classes.len());
    json["expected_class_count"] = json!(expected);
    json["classes"] = classes
        .iter()
        .map(|c| {
            json!({
                "tag": c.tag.row.to_string(),
                "label": c.label(),
                "params": c.tag.param_strings(),
                "representative": c.representative.to_string(),
                "size": c.size(),
                "centralizer_order": c.centralizer.len(),
                "equivalent_params": c.equivalent_params.iter()
                    .map(|p| p.iter().map(|x| x.to_string()).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            })
        })
        .collect();
    let rows = classes
        .iter()
        .map(|c| {
            vec![
                c.tag.row.to_string(),
                c.label(),
                c.representative.to_string(),
                c.size().to_string(),
                c.centralizer.len().to_string(),
            ]
        })
        .collect();
    let summary = vec![format!("{} over F_{}: {} classes (expected {expected})", g.kind(), g.q(), classes.len())];
    let code = if classes.len() as u64 == expected { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok(Output {
        json,
        header: vec!["tag", "label", "representative", "size", "centralizer_order"],
        rows,
        summary,
        code,
    })
}

fn verdict_fields(v: &Verdict) -> (&'static str, String) {
    match v {
        Verdict::RuledOut { verdict } => ("ruled-out", verdict.criterion.to_string()),
        Verdict::Survives { .. } => ("survives", String::new()),
        Verdict::Unresolved { .. } => ("unresolved", String::new()),
    }
}

fn braiding(args: &GroupArgs, selector: &str, character: Option<&[u64]>) -> Result<Output, Failure> {
    let g = build_group(args)?;
    let classes = select_classes(g.conjugacy_classes().map_err(|e| anyhow!(e))?, selector)?;
    let mut rows = Vec::new();
    let mut out_classes = Vec::new();
    for c in &classes {
        if c.is_central() {
            if character.is_some() {
                return Err(anyhow!("--character does not apply to the central class {}", c.label()).into());
            }
            let verdicts = screen_central(c, &central_scalars(&g, c)).map_err(|e| anyhow!(e))?;
            for v in &verdicts {
                let (outcome, criterion) = verdict_fields(&v.verdict);
                rows.push(vec![
                    c.label(),
                    v.subject.describe(),
                    v.value.to_string(),
                    String::new(),
                    String::new(),
                    outcome.into(),
                    criterion,
                ]);
            }
            out_classes.push(json!({ "label": c.label(), "central": true, "verdicts": verdicts }));
            continue;
        }
        let ctx = ClassContext::new(&g, c).map_err(|e| anyhow!(e))?;
        let chars: Vec<Character> = match character {
            Some(exps) => {
                let factors = ctx.zg.factors().to_vec();
                if exps.len() != factors.len() || exps.iter().zip(&factors).any(|(k, d)| k >= d) {
                    return Err(anyhow!("--character {exps:?} is not an exponent tuple for Z/{factors:?}").into());
                }
                vec![Character { factors, exponents: exps.to_vec() }]
            }
            None => ctx.zg.characters(),
        };
        let mut per_char = Vec::new();
        for chi in &chars {
            let v = screen_pair(&ctx, chi).map_err(|e| anyhow!(e))?;
            let (outcome, criterion) = verdict_fields(&v.verdict);
            let mut cliques = Vec::new();
            for (k, t) in ctx.cliques.iter().enumerate() {
                let m = braiding_matrix(&g, c, &ctx.zg, chi, t).map_err(|e| anyhow!(e))?;
                let d = dynkin(&m);
                let edges: Vec<String> = d.edges.iter().map(|(i, j, l)| format!("{i}-{j}:{l}")).collect();
                rows.push(vec![
                    c.label(),
                    format!("{:?}", chi.exponents),
                    v.value.to_string(),
                    k.to_string(),
                    edges.join(" "),
                    outcome.into(),
                    criterion.clone(),
                ]);
                let entries: Vec<Vec<String>> =
                    m.entries.iter().map(|r| r.iter().map(|x| x.to_string()).collect()).collect();
                cliques.push(json!({ "indices": t.indices, "matrix": entries, "diagram": d }));
            }
            per_char.push(json!({ "character": chi, "value": v.value, "verdict": v.verdict, "cliques": cliques }));
        }
        out_classes.push(json!({
            "label": c.label(),
            "representative": c.representative.to_string(),
            "centralizer_factors": ctx.zg.factors(),
            "power_pairs": ctx.power_pairs,
            "characters": per_char,
        }));
    }
    let mut json = header_json(&g);
    json["classes"] = Value::Array(out_classes);
    Ok(Output {
        json,
        header: vec!["class", "subject", "value", "clique", "edges", "outcome", "criterion"],
        rows,
        summary: vec![format!("{} over F_{}, class {selector}", g.kind(), g.q())],
        code: EXIT_OK,
    })
}

fn racks(args: &GroupArgs, selector: Option<&str>) -> Result<Output, Failure> {
    let g = build_group(args)?;
    let all = g.conjugacy_classes().map_err(|e| anyhow!(e))?;
    let classes = match selector {
        Some(s) => select_classes(all.clone(), s)?,
        None => all.clone(),
    };
    let mut rows = Vec::new();
    let mut out = Vec::new();
    let mut code = EXIT_OK;
    for c in &classes {
        let r = rack_from_class(&g, c);
        let ok = r.is_rack();
        let named = identify(&r);
        for &n in &named {
            let f = rack_iso(&r, &named_rack(n)).expect("identified racks are isomorphic");
            if !is_rack_iso(&r, &named_rack(n), &f) {
                code = EXIT_CHECK_FAILED;
            }
        }
        if !ok {
            code = EXIT_CHECK_FAILED;
        }
        let names: Vec<&str> = named.iter().map(|n| n.as_str()).collect();
        let profile = r.profile();
        let compact: Vec<String> =
            profile.entries.iter().map(|e| format!("{}x{:?}/{}", e.count, e.cycle_type, e.orbit)).collect();
        rows.push(vec![c.label(), r.len().to_string(), ok.to_string(), names.join(";"), compact.join(" ")]);
        out.push(json!({ "label": c.label(), "size": r.len(), "is_rack": ok, "named": names, "profile": profile }));
    }
    let mut json = header_json(&g);
    json["classes"] = Value::Array(out);
    let mut summary = vec![format!("{} over F_{}", g.kind(), g.q())];
    if g.kind() == GroupKind::Sl2 && g.q() % 2 == 1 && g.q() > 3 {
        let p = psl_projection(&g, &all);
        summary.push(format!(
            "PSL projection: -1 {} a square; same image {:?}; all isomorphic {}",
            if p.minus_one_square { "is" } else { "is not" },
            p.same_image,
            p.all_isomorphic
        ));
        json["psl_projection"] = serde_json::to_value(&p)?;
    }
    Ok(Output { json, header: vec!["class", "size", "is_rack", "named", "profile"], rows, summary, code })
}

fn check_lemmas(max_n: u64, max_p: u64) -> Result<Output, Failure> {
    if max_p > MAX_SNL_PRIME {
        return Err(anyhow!("--max-p {max_p} exceeds {MAX_SNL_PRIME}").into());
    }
    let sweep = lematec_sweep(3, max_n);
    let failures: Vec<_> = sweep.iter().filter(|c| !c.pass).collect();
    let boundary = lematec_check(2)?;
    let snl: Vec<_> = (3..=max_p).filter_map(|p| snl_check(p).ok()).collect();
    let snl_fail = snl.iter().filter(|c| !c.pass).count();
    let mut rows = vec![vec![
        "lematec".to_string(),
        format!("3..={max_n}"),
        sweep.len().to_string(),
        String::new(),
        String::new(),
        failures.is_empty().to_string(),
    ]];
    for f in &failures {
        rows.push(vec![
            "lematec".into(),
            f.n.to_string(),
            String::new(),
            f.phi.to_string(),
            f.rhs.to_string(),
            "false".into(),
        ]);
    }
    for c in &snl {
        rows.push(vec![
            "snl".into(),
            c.p.to_string(),
            String::new(),
            c.phi.to_string(),
            c.bound.to_string(),
            c.pass.to_string(),
        ]);
    }
    let summary = vec![
        format!("lematec: {} values of n in 3..={max_n}, {} failures", sweep.len(), failures.len()),
        format!("lematec boundary n = 2: 8·φ⁴ = {} vs n³ = {} (not asserted)", boundary.lhs, boundary.rhs),
        format!("snl: {} odd primes up to {max_p}, {snl_fail} failures", snl.len()),
    ];
    let json = json!({
        "lematec": { "from": 3, "to": max_n, "checked": sweep.len(), "failures": failures, "boundary": boundary },
        "snl": snl,
    });
    let code = if failures.is_empty() && snl_fail == 0 { EXIT_OK } else { EXIT_CHECK_FAILED };
    Ok(Output { json, header: vec!["lemma", "argument", "checked", "phi", "bound", "pass"], rows, summary, code })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn argv(s: &str) -> Vec<String> {
        std::iter::once("ydscreen").chain(s.split_whitespace()).map(String::from).collect()
    }

    #[test]
    fn parses_global_flags_after_subcommand() {
        let cli = Cli::try_parse_from(argv("classify --group gl2 --q 5 --format csv --modulus 2,1")).unwrap();
        assert_eq!(cli.format, Format::Csv);
        let Command::Classify(a) = cli.command else { panic!() };
        assert_eq!((a.group, a.q, a.modulus), (GroupKind::Gl2, 5, Some(vec![2, 1])));
    }

    #[test]
    fn text_table_is_aligned() {
        let out = Output {
            json: Value::Null,
            header: vec!["a", "bb"],
            rows: vec![vec!["xyz".into(), "1".into()]],
            summary: vec![],
            code: 0,
        };
        assert_eq!(render_text(&out), "a    bb\nxyz  1\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(run(argv("classify --q 33")), EXIT_USAGE);
        assert_eq!(run(argv("classify --group so3 --q 5")), EXIT_USAGE);
        assert_eq!(run(argv("frobnicate")), EXIT_USAGE);
        assert_eq!(run(argv("check-lemmas --max-p 41")), EXIT_USAGE);
    }
}
