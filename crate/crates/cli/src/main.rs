mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context};
use clap::{Args, Parser, Subcommand};
use fppkit_core::classes::{chi, cube_roots_of_k, h0_large, multiplicity2_exclusion, ClassOnFpp};
use fppkit_core::fiber::{exclusion_report, solve_outcome, EllipticCase, FiberScenario, MuVerdict};
use fppkit_core::hj::{hj_eval, hj_expand, parse_string, uv_sequences};
use fppkit_core::intersection::{ExceptionalIncidence, IntersectionContext};
use fppkit_core::proof::{verify_paper, Status, VerifyOptions};
use fppkit_core::rational::{fmt_q, parse_q};
use fppkit_core::singularity::{discrepancy, local_discriminant_order, SingularityType};
use fppkit_core::surface::{compute_invariants, k2_of, preset, quotient_presets, SurfaceModel};
use fppkit_core::torsion::{torsion_groups_aut21, TorsionGroup};
use serde_json::{json, Value};

use output::{paint, q, qs, qt, Rendered};

#[derive(Parser)]
#[command(name = "fppkit", version, about = "Exact checks on fake projective planes and their quotients")]
struct Cli {
    /// Emit a single JSON document instead of text.
    #[arg(long)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy, Default)]
struct Format {
    /// Emit a single JSON document instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Hirzebruch-Jung continued fractions.
    #[command(subcommand)]
    Hj(HjCmd),
    /// Cyclic quotient singularities.
    #[command(subcommand)]
    Sing(SingCmd),
    /// Surface models and their invariants.
    #[command(subcommand)]
    Surface(SurfaceCmd),
    /// E.K and E^2 of a curve on a model.
    #[command(subcommand)]
    Isect(IsectCmd),
    /// Enumerate k_ij matrices for an I_9 fibre.
    SolveFiber {
        #[arg(long)]
        case: String,
        #[arg(long)]
        mu: u32,
        #[arg(long)]
        symmetric_only: bool,
        #[command(flatten)]
        format: Format,
    },
    /// How each multiplicity of the I_9 fibre is ruled in or out.
    Exclusions {
        #[arg(long)]
        case: String,
        #[command(flatten)]
        format: Format,
    },
    /// Divisor classes on a fake projective plane.
    #[command(subcommand)]
    Classes(ClassesCmd),
    /// Run every check and report.
    VerifyPaper {
        /// Restrict to one check group.
        #[arg(long)]
        only: Option<String>,
        /// Replace the order-7 quotient by a model file.
        #[arg(long)]
        y_model: Option<PathBuf>,
        /// Emit JSON; with a path, write it there and print text.
        #[arg(long, num_args = 0..=1, value_name = "PATH")]
        json: Option<Option<PathBuf>>,
    },
}

#[derive(Subcommand)]
enum HjCmd {
    /// Value of a string such as 2,2,3.
    Eval {
        string: String,
        #[command(flatten)]
        format: Format,
    },
    /// String of a fraction q/a.
    Expand {
        fraction: String,
        #[command(flatten)]
        format: Format,
    },
    /// The u_j and v_j tables.
    Uv {
        string: String,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum SingCmd {
    /// String, discrepancy and local determinant of 1/q(1,a).
    Info {
        #[arg(long)]
        q: i64,
        #[arg(long)]
        a: i64,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum SurfaceCmd {
    /// Validate a model file and print its invariants.
    Check {
        #[arg(long)]
        model: PathBuf,
        #[command(flatten)]
        format: Format,
    },
    /// Invariants of a built-in quotient; without a name, list them.
    Preset {
        name: Option<String>,
        #[command(flatten)]
        format: Format,
    },
}

#[derive(Args)]
struct CurveArgs {
    #[arg(long, conflicts_with = "preset")]
    model: Option<PathBuf>,
    #[arg(long)]
    preset: Option<String>,
    /// Coefficient of the pullback part, a rational.
    #[arg(long, allow_hyphen_values = true)]
    m: String,
    /// Comma-separated label:index=count.
    #[arg(long, default_value = "")]
    hits: String,
    #[command(flatten)]
    format: Format,
}

#[derive(Subcommand)]
enum IsectCmd {
    Ek(CurveArgs),
    E2(CurveArgs),
}

#[derive(Subcommand)]
enum ClassesCmd {
    /// chi(mL + t) and h0 where it is determined.
    Chi {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[command(flatten)]
        format: Format,
    },
    /// Number of cube roots of K for a torsion group such as 2,2,2.
    CubeRoots {
        #[arg(long)]
        group: String,
        /// Whether K is divisible by 3; needed only with 3-torsion.
        #[arg(long)]
        k_divisible: Option<bool>,
        #[command(flatten)]
        format: Format,
    },
    /// Contradiction certificate for a multiple I_9 fibre.
    Exclusion {
        #[arg(long)]
        case: String,
        #[arg(long)]
        mu: u32,
        /// Torsion group; default is every group of the order-21 surfaces.
        #[arg(long)]
        group: Option<String>,
        #[command(flatten)]
        format: Format,
    },
}

fn load_model(path: &PathBuf) -> anyhow::Result<SurfaceModel> {
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    Ok(SurfaceModel::from_json(&text)?)
}

fn hj_cmd(cmd: HjCmd) -> anyhow::Result<(Rendered, Format)> {
    Ok(match cmd {
        HjCmd::Eval { string, format } => {
            let s = parse_string(&string)?;
            let v = hj_eval(s.entries())?;
            (Rendered::ok(json!({"string": s.entries(), "value": q(&v)}), fmt_q(&v)), format)
        }
        HjCmd::Expand { fraction, format } => {
            let f = parse_q(&fraction)?;
            let (Ok(n), Ok(d)) = (i64::try_from(f.numer().clone()), i64::try_from(f.denom().clone())) else {
                bail!("{fraction} is too large");
            };
            let s = hj_expand(n, d)?;
            (Rendered::ok(json!({"value": q(&f), "string": s.entries()}), s.to_string()), format)
        }
        HjCmd::Uv { string, format } => {
            let s = parse_string(&string)?;
            let uv = uv_sequences(&s);
            let text = format!(
                "u: {}\nv: {}\nq: {}",
                join(&uv.u),
                join(&uv.v),
                uv.q
            );
            (Rendered::ok(serde_json::to_value(&uv)?, text), format)
        }
    })
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(", ")
}

fn sing_cmd(cmd: SingCmd) -> anyhow::Result<(Rendered, Format)> {
    let SingCmd::Info { q: order, a, format } = cmd;
    let s = SingularityType::new(format!("1/{order}(1,{a})"), order, a)?;
    let d = discrepancy(&s);
    let det = local_discriminant_order(&s);
    let text = format!(
        "{}\nstring: {}\ndiscrepancy: {}\nD_p.K: {}\nD_p^2: {}\n|det|: {}",
        s.label,
        s.string,
        qt(&d.coefficients),
        fmt_q(&d.dpk),
        fmt_q(&d.dp2),
        det
    );
    let value = json!({
        "q": order,
        "a": a,
        "string": s.string.entries(),
        "discrepancy": qs(&d.coefficients),
        "dpk": q(&d.dpk),
        "dp2": q(&d.dp2),
        "det": det,
    });
    Ok((Rendered::ok(value, text), format))
}

fn invariants_rendered(model: &SurfaceModel) -> Rendered {
    match compute_invariants(model) {
        Ok(inv) => {
            let dp = inv.d_prime.as_ref().map_or("unknown".to_string(), |d| d.to_string());
            let text = format!(
                "{}\nK^2: {}\ndet R: {}\nD: {} = {}^2\nD': {}",
                model.name,
                fmt_q(&inv.k2_s),
                inv.det_r,
                inv.d,
                inv.sqrt_d,
                dp
            );
            let mut value = serde_json::to_value(&inv).expect("plain data");
            value["name"] = json!(model.name);
            value["valid"] = json!(true);
            Rendered::ok(value, text)
        }
        Err(e) => Rendered {
            json: json!({"name": model.name, "valid": false, "k2_s": q(&k2_of(model)), "error": e.to_string()}),
            text: format!("{}\ninvalid: {e}", model.name),
            ok: false,
        },
    }
}

fn surface_cmd(cmd: SurfaceCmd) -> anyhow::Result<(Rendered, Format)> {
    Ok(match cmd {
        SurfaceCmd::Check { model, format } => (invariants_rendered(&load_model(&model)?), format),
        SurfaceCmd::Preset { name: Some(name), format } => {
            (invariants_rendered(&preset(&name)?.model), format)
        }
        SurfaceCmd::Preset { name: None, format } => {
            let all = quotient_presets();
            let value = Value::Array(
                all.iter()
                    .map(|p| json!({"name": p.name, "group_order": p.group_order, "model": p.model.to_file()}))
                    .collect(),
            );
            let text = all
                .iter()
                .map(|p| {
                    let pts: Vec<String> = p.model.singularities.iter().map(|s| format!("1/{}(1,{})", s.q, s.a)).collect();
                    format!("{:<8} |G| = {:<2} {}", p.name, p.group_order, pts.join(" "))
                })
                .collect::<Vec<_>>()
                .join("\n");
            (Rendered::ok(value, text), format)
        }
    })
}

fn isect_cmd(cmd: IsectCmd) -> anyhow::Result<(Rendered, Format)> {
    let (which, args) = match cmd {
        IsectCmd::Ek(a) => ("ek", a),
        IsectCmd::E2(a) => ("e2", a),
    };
    let model = match (&args.model, &args.preset) {
        (Some(p), _) => load_model(p)?,
        (None, Some(name)) => preset(name)?.model,
        (None, None) => preset("Y")?.model,
    };
    let inc = ExceptionalIncidence::parse_hits(parse_q(&args.m)?, &args.hits)?;
    inc.validate(&model)?;
    let ctx = IntersectionContext::new(&model)?;
    let v = if which == "ek" { ctx.ek(&inc)? } else { ctx.e2(&inc)? };
    let value = json!({"model": model.name, "curve": inc.to_string(), which: q(&v)});
    Ok((Rendered::ok(value, fmt_q(&v)), args.format))
}

fn matrix_json(k: &[[i64; 3]; 3]) -> Value {
    json!(k)
}

fn matrix_text(k: &[[i64; 3]; 3]) -> String {
    k.iter().map(|r| format!("  {} {} {}", r[0], r[1], r[2])).collect::<Vec<_>>().join("\n")
}

fn solve_cmd(case: &str, mu: u32, symmetric_only: bool) -> anyhow::Result<Rendered> {
    let scenario = FiberScenario::new(EllipticCase::parse(case)?, mu)?;
    let outcome = solve_outcome(scenario);
    let sols: Vec<_> = outcome
        .solutions
        .iter()
        .filter(|s| !symmetric_only || fppkit_core::fiber::rotate(&s.k) == s.k)
        .collect();
    let mut text = format!(
        "{} mu = {}: {} solution(s), row sum {}",
        scenario.case,
        mu,
        sols.len(),
        scenario.row_sum
    );
    for s in &sols {
        text.push_str(&format!("\n{}\n", matrix_text(&s.k)));
    }
    let value = json!({
        "case": scenario.case,
        "mu": mu,
        "row_sum": scenario.row_sum,
        "symmetric_only": symmetric_only,
        "stats": outcome.stats,
        "solutions": sols.iter().map(|s| json!({"k": matrix_json(&s.k), "m": s.m})).collect::<Vec<_>>(),
    });
    Ok(Rendered::ok(value, text.trim_end().to_string()))
}

fn exclusions_cmd(case: &str) -> anyhow::Result<Rendered> {
    let report = exclusion_report(EllipticCase::parse(case)?);
    let lines: Vec<String> = report
        .entries
        .iter()
        .map(|e| {
            let v = match &e.verdict {
                MuVerdict::CombinatoriallyInfeasible { .. } => "combinatorially infeasible".to_string(),
                MuVerdict::ExcludedByTorsion { solutions, .. } => {
                    format!("excluded by the torsion argument ({solutions} matrix solution(s))")
                }
                MuVerdict::Admissible { solutions } => format!("admissible ({solutions} solution(s))"),
            };
            format!("mu = {}: {v}", e.mu)
        })
        .collect();
    let text = format!(
        "{}\n{}\nadmissible: {}",
        report.case,
        lines.join("\n"),
        join(&report.admissible)
    );
    Ok(Rendered { ok: report.admissible == [1], json: serde_json::to_value(&report)?, text })
}

fn classes_cmd(cmd: ClassesCmd) -> anyhow::Result<(Rendered, Format)> {
    Ok(match cmd {
        ClassesCmd::Chi { m, format } => {
            let g = TorsionGroup::trivial();
            let cls = ClassOnFpp::untwisted(&g, m);
            let h0 = h0_large(&cls, &ClassOnFpp::untwisted(&g, 3));
            let text = format!("chi: {}\nh0: {h0}", chi(&cls));
            (Rendered::ok(json!({"m": m, "chi": chi(&cls), "h0": h0}), text), format)
        }
        ClassesCmd::CubeRoots { group, k_divisible, format } => {
            let g = TorsionGroup::parse(&group)?;
            let n = cube_roots_of_k(&g, k_divisible)?;
            (Rendered::ok(json!({"group": g.to_string(), "cube_roots": n}), n.to_string()), format)
        }
        ClassesCmd::Exclusion { case, mu, group, format } => {
            let scenario = FiberScenario::new(EllipticCase::parse(&case)?, mu)?;
            let groups = match group {
                Some(g) => vec![TorsionGroup::parse(&g)?],
                None => torsion_groups_aut21(),
            };
            let certs = groups
                .iter()
                .map(|g| multiplicity2_exclusion(&scenario, g))
                .collect::<Result<Vec<_>, _>>()?;
            let mut text = String::new();
            for c in &certs {
                text.push_str(&format!("{} mu = {} on {}: per-curve class {}L\n", c.case, c.mu, c.group, c.per_curve_degree));
                for r in &c.relations {
                    text.push_str(&format!("  {}: {} = {}\n", r.statement, fmt_q(&r.lhs), fmt_q(&r.rhs)));
                }
                text.push_str(&format!("  contradiction: {}\n", serde_json::to_string(&c.contradiction)?));
            }
            let ok = certs.iter().all(|c| c.balanced());
            (Rendered { json: serde_json::to_value(&certs)?, text: text.trim_end().into(), ok }, format)
        }
    })
}

fn verify_cmd(only: Option<String>, y_model: Option<PathBuf>, json_path: Option<&PathBuf>) -> anyhow::Result<Rendered> {
    let y_model = y_model.as_ref().map(load_model).transpose()?;
    let report = verify_paper(&VerifyOptions { only, y_model })?;
    let rendered = report.to_json();
    if let Some(path) = json_path {
        std::fs::write(path, format!("{rendered}\n")).with_context(|| format!("writing {}", path.display()))?;
    }
    let mut text = String::new();
    for c in &report.checks {
        let tag = match c.status {
            Status::Pass => paint("PASS ", "32"),
            Status::Fail => paint("FAIL ", "31"),
            Status::Axiom => paint("AXIOM", "36"),
        };
        text.push_str(&format!("{tag} [{}] {}  ({})\n", c.group, c.name, c.anchor));
        if c.status == Status::Fail {
            text.push_str(&format!("      expected {}\n      computed {}\n", c.expected, c.computed));
        }
    }
    let computed = report.computed_checks().count();
    let failed = report.failures().count();
    text.push_str(&format!("{} of {computed} checks passed; overall {}", computed - failed, report.status));
    Ok(Rendered { json: serde_json::from_str(&rendered)?, text, ok: report.passed() })
}

fn run(cli: Cli) -> anyhow::Result<(Rendered, bool)> {
    let (rendered, format) = match cli.command {
        Command::Hj(c) => hj_cmd(c)?,
        Command::Sing(c) => sing_cmd(c)?,
        Command::Surface(c) => surface_cmd(c)?,
        Command::Isect(c) => isect_cmd(c)?,
        Command::SolveFiber { case, mu, symmetric_only, format } => (solve_cmd(&case, mu, symmetric_only)?, format),
        Command::Exclusions { case, format } => (exclusions_cmd(&case)?, format),
        Command::Classes(c) => classes_cmd(c)?,
        Command::VerifyPaper { only, y_model, json } => {
            let path = json.as_ref().and_then(Option::as_ref);
            let as_json = matches!(json, Some(None));
            (verify_cmd(only, y_model, path)?, Format { json: as_json })
        }
    };
    Ok((rendered, cli.json || format.json))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((r, as_json)) => {
            let body = if as_json {
                serde_json::to_string_pretty(&r.json).expect("valid JSON")
            } else {
                r.text
            };
            // a closed pipe downstream is not our failure
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            if r.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("fppkit: {e:#}");
            ExitCode::from(2)
        }
    }
}

#[cfg(test)]
mod tests {
    use clap::CommandFactory;

    use super::*;

    fn exec(args: &[&str]) -> anyhow::Result<(Rendered, bool)> {
        run(Cli::try_parse_from(std::iter::once("fppkit").chain(args.iter().copied()))?)
    }

    #[test]
    fn clap_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn hj_eval_text_and_json() {
        let (r, json) = exec(&["hj", "eval", "2,2,3"]).unwrap();
        assert!(!json);
        assert_eq!(r.text, "7/5");
        let (r, json) = exec(&["hj", "eval", "2,2,3", "--json"]).unwrap();
        assert!(json);
        assert_eq!(r.json["string"], json!([2, 2, 3]));
    }

    #[test]
    fn global_json_flag() {
        let (_, json) = exec(&["--json", "sing", "info", "--q", "7", "--a", "5"]).unwrap();
        assert!(json);
    }

    #[test]
    fn bad_input_is_an_error() {
        assert!(exec(&["hj", "eval", "1,2"]).is_err());
        assert!(exec(&["solve-fiber", "--case", "5,5", "--mu", "1"]).is_err());
        assert!(exec(&["verify-paper", "--only", "nonsense"]).is_err());
    }

    #[test]
    fn exclusion_of_multiplicity_two() {
        let (r, _) = exec(&["exclusions", "--case", "2,3"]).unwrap();
        assert!(r.ok);
    }
}
