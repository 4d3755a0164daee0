use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use wba_core::algebra::{jm_element, words::pretty, AlgebraElement};
use wba_core::arith::parse_scalar;
use wba_core::diagram::Shape;
use wba_core::fusion::identity_checks;
use wba_core::fusion::{default_h, fusion_idempotent, FusionConfig, Variant};
use wba_core::tableaux::{
    enumerate_tableaux, is_semisimple, Bipartition, BratteliGraph, WalledTableau,
};
use wba_core::verify::{
    certify_element, check_defining_relations, check_exponents, check_jm_structure,
    check_proof_lemmas, check_system, interp_idempotent, laplacian_cases, SystemOptions,
};
use wba_core::Error;

#[derive(Parser)]
#[command(
    name = "wba",
    version,
    about = "Exact computations in the walled Brauer algebra B_{r,s}(δ)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the standard walled tableaux of shape (r, s).
    Tableaux {
        r: usize,
        s: usize,
        /// Keep only paths ending at this bipartition, e.g. "[1]|[1]".
        #[arg(long = "final")]
        final_shape: Option<String>,
        #[arg(long)]
        count: bool,
        #[arg(long)]
        json: bool,
    },
    /// Construct the primitive idempotent of one tableau.
    Idempotent {
        r: usize,
        s: usize,
        /// Move list such as "L+1,1;L+2,1;L-2,1;L-1,1".
        #[arg(long)]
        tableau: String,
        #[arg(long, value_enum, default_value_t = Method::First)]
        method: Method,
        #[arg(long, value_enum, default_value_t = VariantArg::Fwd)]
        variant: VariantArg,
        /// Parameter of the second procedure, e.g. "3*d+1/2".
        #[arg(long)]
        h: Option<String>,
        /// Certify the result (idempotency, spectrum, interpolation).
        #[arg(long)]
        check: bool,
        #[arg(long, conflicts_with = "pretty")]
        json: bool,
        #[arg(long)]
        pretty: bool,
        /// Also specialize δ to this rational; refused when the algebra is
        /// not semisimple there.
        #[arg(long)]
        delta_rational: Option<String>,
    },
    /// Run certification suites; exits nonzero on any failure.
    Verify {
        r: usize,
        s: usize,
        #[arg(long, value_enum, default_value_t = Suite::All)]
        suite: Suite,
        #[arg(long, env = "WBA_SEED", default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        json: bool,
    },
    /// Print the branching graph up to level r + s.
    Bratteli {
        r: usize,
        s: usize,
        #[arg(long, value_enum, default_value_t = Format::Dot)]
        format: Format,
    },
    /// Print the Jucys–Murphy element x_k.
    Jm {
        r: usize,
        s: usize,
        k: usize,
        #[arg(long)]
        pretty: bool,
    },
    /// Multiply two elements given as JSON files ("-" for stdin).
    Mul { a: String, b: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    First,
    Second,
    Interp,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Fwd,
    Mirror,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    System,
    Lemmas,
    YangBaxter,
    Exponents,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dot,
    Json,
}

enum Failure {
    Usage(Error),
    Compute(Error),
    /// A suite ran and reported failures; output already printed.
    Verification,
}

type CliResult = std::result::Result<(), Failure>;

fn usage(e: Error) -> Failure {
    Failure::Usage(e)
}

fn compute(e: Error) -> Failure {
    Failure::Compute(e)
}

/// `println!` that exits quietly when the reader has gone away.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        let mut stdout = std::io::stdout().lock();
        if let Err(e) = writeln!(stdout, $($arg)*) {
            if e.kind() == std::io::ErrorKind::BrokenPipe {
                std::process::exit(0);
            }
            panic!("writing to stdout: {e}");
        }
    }};
}

fn print_json(v: &Value) {
    out!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("serializable")
}

fn tableaux_cmd(shape: Shape, final_shape: Option<String>, count: bool, json: bool) -> CliResult {
    let fin = final_shape
        .map(|f| f.parse::<Bipartition>())
        .transpose()
        .map_err(usage)?;
    let ts = enumerate_tableaux(shape, fin.as_ref());
    if count {
        out!("{}", ts.len());
    } else if json {
        print_json(&Value::Array(
            ts.iter().map(|t| to_value(&t.to_json())).collect(),
        ));
    } else {
        for t in &ts {
            out!("{}", t.spec());
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn idempotent_cmd(
    shape: Shape,
    spec: &str,
    method: Method,
    variant: VariantArg,
    h: Option<String>,
    check: bool,
    pretty_out: bool,
    delta_rational: Option<String>,
) -> CliResult {
    let t = WalledTableau::parse(spec, shape).map_err(usage)?;
    let h = h
        .map(|h| parse_scalar(&h))
        .transpose()
        .map_err(usage)?
        .unwrap_or_else(default_h);
    let delta_q = delta_rational
        .map(|q| {
            parse_scalar(&q)?
                .as_rational()
                .ok_or_else(|| Error::Unsupported(format!("'{q}' is not a rational number")))
        })
        .transpose()
        .map_err(usage)?;
    if let Some(q) = &delta_q {
        if !is_semisimple(shape.r, shape.s, q) {
            return Err(compute(Error::Unsupported(format!(
                "B_{{{},{}}}({q}) is not semisimple; fusion refused",
                shape.r, shape.s
            ))));
        }
    }

    let variant = match variant {
        VariantArg::Fwd => Variant::Forward,
        VariantArg::Mirror => Variant::Mirror,
    };
    let (e, method_name) = match method {
        Method::First => (fusion_idempotent(&t, &FusionConfig::first()), "first"),
        Method::Second => (
            fusion_idempotent(&t, &FusionConfig::second(variant, h.clone())),
            "second",
        ),
        Method::Interp => (interp_idempotent(&t), "interp"),
    };
    let e = e.map_err(compute)?;

    if pretty_out {
        out!("{}", pretty(&e));
        if check {
            let cert = certify_element(&t, &e);
            out!(
                "certification: {}",
                if cert.passed() { "pass" } else { "FAIL" }
            );
        }
        return Ok(());
    }
    let mut out = json!({
        "tableau": to_value(&t.to_json()),
        "method": method_name,
        "element": to_value(&e.to_json()),
        "pretty": pretty(&e),
    });
    if matches!(method, Method::Second) {
        out["variant"] = json!(match variant {
            Variant::Forward => "fwd",
            Variant::Mirror => "mirror",
        });
        out["h"] = json!(h.to_string());
    }
    let mut failed = false;
    if check {
        let cert = certify_element(&t, &e);
        failed = !cert.passed();
        out["certification"] = json!({
            "passed": cert.passed(),
            "checks": to_value(&cert),
        });
    }
    if let Some(q) = &delta_q {
        let terms = e.eval_delta(q).ok_or_else(|| {
            compute(Error::ZeroDenominator(format!(
                "a coefficient has a pole at d = {q}"
            )))
        })?;
        out["specialization"] = json!({
            "delta": q.to_string(),
            "terms": terms
                .iter()
                .map(|(d, c)| json!({"diagram": d.img_one_based(), "coeff": c.to_string()}))
                .collect::<Vec<_>>(),
        });
    }
    print_json(&out);
    if failed {
        Err(Failure::Verification)
    } else {
        Ok(())
    }
}

struct SuiteLine {
    name: String,
    passed: bool,
    detail: String,
}

fn verify_cmd(shape: Shape, suite: Suite, seed: u64, json_out: bool) -> CliResult {
    shape.require_fusion_shape().map_err(usage)?;
    let wants = |s: Suite| suite == Suite::All || suite == s;
    let mut lines = Vec::new();
    let mut report = serde_json::Map::new();

    if wants(Suite::System) {
        let r = check_system(shape, &SystemOptions::standard(shape)).map_err(compute)?;
        lines.push(SuiteLine {
            name: "system".into(),
            passed: r.passed,
            detail: format!(
                "{} idempotents, {} pairs, complete: {}",
                r.tableau_count, r.orthogonal_pairs, r.complete
            ),
        });
        report.insert("system".into(), to_value(&r));
    }
    if wants(Suite::Lemmas) {
        let res = check_proof_lemmas(shape, seed, 5).map_err(compute)?;
        for l in &res {
            lines.push(SuiteLine {
                name: format!("lemma: {}", l.name),
                passed: l.passed(),
                detail: format!("{} instances", l.instances),
            });
        }
        report.insert("lemmas".into(), to_value(&res));
    }
    if wants(Suite::YangBaxter) {
        let ids = identity_checks(shape, seed, 20).map_err(compute)?;
        for l in &ids {
            lines.push(SuiteLine {
                name: format!("identity: {}", l.name),
                passed: l.passed(),
                detail: format!("{} instances", l.instances),
            });
        }
        let rels = check_defining_relations(shape).map_err(compute)?;
        let jm = check_jm_structure(shape).map_err(compute)?;
        for l in rels.iter().chain(&jm) {
            lines.push(SuiteLine {
                name: format!("relation: {}", l.name),
                passed: l.passed(),
                detail: format!("{} instances", l.instances),
            });
        }
        report.insert("identities".into(), to_value(&ids));
        report.insert("relations".into(), to_value(&rels));
        report.insert("jm".into(), to_value(&jm));
    }
    if wants(Suite::Exponents) {
        let r = check_exponents(shape).map_err(compute)?;
        lines.push(SuiteLine {
            name: "exponents".into(),
            passed: r.passed(),
            detail: format!(
                "{} tableaux, {} removal steps, {} negative controls",
                r.tableaux, r.removal_steps, r.negative_controls
            ),
        });
        report.insert("exponents".into(), to_value(&r));
        report.insert("laplacian_cases".into(), to_value(&laplacian_cases()));
    }

    let passed = lines.iter().all(|l| l.passed);
    if json_out {
        report.insert("shape".into(), json!(shape.to_string()));
        report.insert("seed".into(), json!(seed));
        report.insert("passed".into(), json!(passed));
        print_json(&Value::Object(report));
    } else {
        for l in &lines {
            let mark = if l.passed { "PASS" } else { "FAIL" };
            out!("{mark} {}: {}", l.name, l.detail);
        }
    }
    if passed {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn read_element(path: &str) -> Result<AlgebraElement, Failure> {
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| usage(Error::Unsupported(format!("reading stdin: {e}"))))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| usage(Error::Unsupported(format!("reading {path}: {e}"))))?
    };
    AlgebraElement::from_json_str(&text).map_err(usage)
}

fn run(cli: Cli) -> CliResult {
    match cli.command {
        Command::Tableaux {
            r,
            s,
            final_shape,
            count,
            json,
        } => tableaux_cmd(Shape::new(r, s), final_shape, count, json),
        Command::Idempotent {
            r,
            s,
            tableau,
            method,
            variant,
            h,
            check,
            json: _,
            pretty,
            delta_rational,
        } => idempotent_cmd(
            Shape::new(r, s),
            &tableau,
            method,
            variant,
            h,
            check,
            pretty,
            delta_rational,
        ),
        Command::Verify {
            r,
            s,
            suite,
            seed,
            json,
        } => verify_cmd(Shape::new(r, s), suite, seed, json),
        Command::Bratteli { r, s, format } => {
            let g = BratteliGraph::build(Shape::new(r, s));
            match format {
                Format::Dot => out!("{}", g.to_dot().trim_end()),
                Format::Json => out!("{}", g.to_json_string()),
            }
            Ok(())
        }
        Command::Jm { r, s, k, pretty: p } => {
            let x = jm_element(Shape::new(r, s), k).map_err(usage)?;
            if p {
                out!("{}", pretty(&x));
            } else {
                print_json(&to_value(&x.to_json()));
            }
            Ok(())
        }
        Command::Mul { a, b } => {
            if a == "-" && b == "-" {
                return Err(usage(Error::Unsupported(
                    "only one operand can be read from stdin".into(),
                )));
            }
            let (x, y) = (read_element(&a)?, read_element(&b)?);
            let z = x.checked_mul(&y).map_err(compute)?;
            print_json(&to_value(&z.to_json()));
            Ok(())
        }
    }
}

fn error_json(e: &Error) -> String {
    json!({"error": {"kind": e.kind(), "message": e.to_string()}}).to_string()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Compute(e)) => {
            out!("{}", error_json(&e));
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("{}", error_json(&e));
            ExitCode::from(2)
        }
    }
}
