//! Argument parsing and dispatch for the `idem` binary.

use std::ffi::OsString;
use std::fmt::Write as _;

use clap::{Args, CommandFactory, Parser, Subcommand};
use idem_core::algebra::{basis_map, verify_algebra, IdemOp, IdemOpsTable};
use idem_core::arith::gcd;
use idem_core::binomial::OmegaTable;
use idem_core::functions::{
    builtin, classify_function, orbit_union_size, r_count, rho_closed_form, rho_count, rho_prime_power, BUILTINS,
};
use idem_core::idempotent::{enumerate_idempotents, order, tower_mod};
use idem_core::quadratic::{kernel, scaled_idempotents, sqrt_structure};
use idem_core::structure::{classify, orbit};
use idem_core::{Error, Modulus, StructureTable, DEFAULT_MAX_ENUM};
use serde_json::{json, Map, Value};

use crate::{audit, render};

const AFTER_HELP: &str = "Residues are reported in 1..m: m denotes the zero class.\n\
Exit codes: 0 success (unsolvable answers included), 2 bad input, 3 enumeration cap exceeded.";

#[derive(Parser, Debug)]
#[command(name = "idem", version, about = "Idempotent residues, generalized orders and binomial congruences")]
#[command(after_help = AFTER_HELP, propagate_version = true)]
struct Cli {
    /// Structured JSON output.
    #[arg(long, global = true)]
    json: bool,
    /// Largest modulus whose residues may be enumerated in full.
    #[arg(long, global = true, env = "IDEM_MAX_ENUM", default_value_t = DEFAULT_MAX_ENUM, value_name = "N")]
    max_enum: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct MA {
    m: i128,
    a: i128,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Factorization, φ, ψ and parity flags of m.
    #[command(allow_negative_numbers = true)]
    Modinfo { m: i128 },
    /// The idempotents E_m.
    #[command(allow_negative_numbers = true)]
    Idempotents { m: i128 },
    /// Generalized order |a|_m and the idempotent class of a.
    #[command(allow_negative_numbers = true)]
    Order(MA),
    /// Normal/regular status, order, class, μ and δ of a.
    #[command(allow_negative_numbers = true)]
    Classify(MA),
    /// Idempotent, normal and regular sets, optionally within one class.
    #[command(allow_negative_numbers = true)]
    Sets {
        m: i128,
        #[arg(long, conflicts_with = "normal")]
        regular: bool,
        #[arg(long)]
        normal: bool,
        /// Restrict to residues whose idempotent class is E.
        #[arg(long, value_name = "E")]
        class: Option<i128>,
    },
    /// The power set {a, a², …, a^|a|}.
    #[command(allow_negative_numbers = true)]
    Orbit(MA),
    /// Solutions of x^k ≡ a with the solvability verdicts.
    #[command(allow_negative_numbers = true)]
    Solve { m: i128, k: u64, a: i128 },
    /// ω_m(a) for regular a.
    #[command(allow_negative_numbers = true)]
    Omega(MA),
    /// Generalized primitive roots of m.
    #[command(allow_negative_numbers = true)]
    Gproots { m: i128 },
    /// r and ρ for class e and order k, closed forms and orbit-union size.
    #[command(allow_negative_numbers = true)]
    Counts { m: i128, e: i128, k: u64 },
    /// M / QM / DI classification of a builtin function on 1..=N.
    #[command(name = "classify-fn")]
    ClassifyFn {
        /// One of phi, psi, id, square, cube, succ, tau, sigma, rad, nrad.
        name: String,
        n: u64,
    },
    /// Operation tables on E_m and the ring-law checks.
    #[command(allow_negative_numbers = true)]
    Algebra { m: i128 },
    /// One operation on idempotents: complement, circ, otimes or simdiff.
    #[command(allow_negative_numbers = true)]
    Idemop { m: i128, op: String, e1: i128, e2: Option<i128> },
    /// The kernel S_{m,k} of x² ≡ kx.
    #[command(allow_negative_numbers = true)]
    Quadratic { m: i128, k: i128 },
    /// Square roots of an idempotent within its class, for odd m.
    #[command(allow_negative_numbers = true)]
    Sqrt { m: i128, e: i128 },
    /// The power tower base^base^…^base of the given height, mod m.
    #[command(allow_negative_numbers = true)]
    Tower { m: i128, base: i128, height: u64 },
    /// Check every registered theorem over a range of moduli.
    Audit {
        /// LO..HI, inclusive on both ends.
        range: String,
        /// Comma-separated theorem ids; all when omitted.
        #[arg(long, value_delimiter = ',')]
        theorems: Vec<String>,
        /// Write the JSON report to FILE.
        #[arg(long, value_name = "FILE")]
        out: Option<std::path::PathBuf>,
    },
}

/// Exit status and captured streams of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommandResult {
    pub exit_code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// A command's payload: echoed inputs, then the answer fields.
#[derive(Debug, Clone)]
pub struct Reply {
    pub inputs: Vec<(&'static str, Value)>,
    pub answer: Vec<(&'static str, Value)>,
    /// Replaces the generic text rendering.
    text: Option<String>,
}

impl Reply {
    pub fn json(&self) -> Value {
        let map: Map<String, Value> =
            self.inputs.iter().chain(&self.answer).map(|(k, v)| (k.to_string(), v.clone())).collect();
        Value::Object(map)
    }

    pub fn text(&self) -> String {
        self.text.clone().unwrap_or_else(|| render::text(&self.answer))
    }
}

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Cap(String),
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
            Failure::Io(_) => 1,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::EnumerationCap { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Out = Result<Reply, Failure>;

fn reply(inputs: Vec<(&'static str, Value)>, answer: Vec<(&'static str, Value)>) -> Out {
    Ok(Reply { inputs, answer, text: None })
}

fn modulus(m: i128) -> Result<Modulus, Failure> {
    Ok(Modulus::from_signed(m)?)
}

fn table(m: i128, cap: u64) -> Result<StructureTable, Failure> {
    Ok(StructureTable::new(modulus(m)?, cap)?)
}

fn enumerable(m: &Modulus, cap: u64) -> Result<(), Failure> {
    Ok(m.ensure_enumerable(cap)?)
}

/// Runs one parsed command. `cap` is the enumeration limit.
fn execute(cmd: Cmd, cap: u64) -> Out {
    match cmd {
        Cmd::Modinfo { m } => {
            let md = modulus(m)?;
            let factors: Vec<Value> = md.factorization().factors().iter().map(|&(p, a)| json!([p, a])).collect();
            reply(
                vec![("m", json!(md.value()))],
                vec![
                    ("factorization", json!(factors)),
                    ("omega", json!(md.omega())),
                    ("phi", json!(md.phi())),
                    ("psi", json!(md.psi())),
                    ("square_free", json!(md.is_square_free())),
                    ("weakly_even", json!(md.is_weakly_even())),
                    ("barely_even", json!(md.is_barely_even())),
                    ("idempotent_count", json!(1u64 << md.omega())),
                ],
            )
        }
        Cmd::Idempotents { m } => {
            let md = modulus(m)?;
            let e = enumerate_idempotents(&md);
            reply(vec![("m", json!(md.value()))], vec![("idempotents", json!(e.elements()))])
        }
        Cmd::Order(MA { m, a }) => {
            let md = modulus(m)?;
            let o = order(&md, md.canon(a));
            reply(
                vec![("m", json!(md.value())), ("a", json!(o.a))],
                vec![("order", json!(o.order)), ("idem_class", json!(o.idem_class))],
            )
        }
        Cmd::Classify(MA { m, a }) => {
            let md = modulus(m)?;
            let c = classify(&md, md.canon(a));
            reply(
                vec![("m", json!(md.value())), ("a", json!(c.a))],
                vec![
                    ("normal", json!(c.is_normal)),
                    ("regular", json!(c.is_regular)),
                    ("order", json!(c.order)),
                    ("idem_class", json!(c.idem_class)),
                    ("mu", json!(c.mu)),
                    ("delta", json!(c.delta)),
                ],
            )
        }
        Cmd::Sets { m, regular, normal, class } => {
            let t = table(m, cap)?;
            let md = t.modulus();
            let e = class.map(|e| md.canon(e));
            if let Some(e) = e {
                t.ensure_idempotent(e)?;
            }
            let mut inputs = vec![("m", json!(md.value()))];
            if let Some(e) = e {
                inputs.push(("class", json!(e)));
            }
            let mut answer = Vec::new();
            if !regular && !normal && e.is_none() {
                answer.push(("idempotents", json!(t.idempotents())));
            }
            if !regular {
                answer.push(("normal", json!(t.normal_set(e)?)));
            }
            if !normal {
                answer.push(("regular", json!(t.regular_set(e)?)));
            }
            reply(inputs, answer)
        }
        Cmd::Orbit(MA { m, a }) => {
            let md = modulus(m)?;
            let o = orbit(&md, md.canon(a));
            reply(
                vec![("m", json!(md.value())), ("a", json!(o.generator))],
                vec![("orbit", json!(o.elements)), ("length", json!(o.len()))],
            )
        }
        Cmd::Solve { m, k, a } => {
            let t = table(m, cap)?;
            let a = t.modulus().canon(a);
            let s = OmegaTable::new(&t).solve(k, a)?;
            reply(
                vec![("m", json!(s.m)), ("k", json!(s.k)), ("a", json!(s.a))],
                vec![
                    ("solutions", json!(s.solutions)),
                    ("regular_solutions", json!(s.regular_solutions)),
                    ("verdict", json!(if s.solvable { "solvable" } else { "unsolvable" })),
                    ("bc01_verdict", json!(s.bc01_verdict)),
                ],
            )
        }
        Cmd::Omega(MA { m, a }) => {
            let t = table(m, cap)?;
            let a = t.modulus().canon(a);
            let i = OmegaTable::new(&t).omega_info(a)?;
            reply(
                vec![("m", json!(t.m())), ("a", json!(i.a))],
                vec![("omega", json!(i.omega_a)), ("omega_set", json!(i.omega_set)), ("ind_sup", json!(i.ind_sup))],
            )
        }
        Cmd::Gproots { m } => {
            let t = table(m, cap)?;
            reply(vec![("m", json!(t.m()))], vec![("gproots", json!(OmegaTable::new(&t).gen_primitive_roots()))])
        }
        Cmd::Counts { m, e, k } => {
            let t = table(m, cap)?;
            let md = t.modulus();
            let e = md.canon(e);
            if k == 0 {
                return Err(Failure::Usage("k must be positive".into()));
            }
            let u = orbit_union_size(&t, e, k)?;
            let closed = rho_closed_form(md, k).ok();
            let pp = idem_core::arith::factorize(k).ok().and_then(|f| match f.factors() {
                [(q, beta)] if md.is_weakly_even() => rho_prime_power(md, *q, *beta).ok(),
                _ => None,
            });
            let pp = pp.map(|f| json!({"q": f.q, "beta": f.beta, "rho": f.rho, "r": f.r, "r_at_q": f.r_at_q}));
            reply(
                vec![("m", json!(md.value())), ("e", json!(e)), ("k", json!(k))],
                vec![
                    ("r", json!(r_count(&t, e, k)?)),
                    ("rho", json!(rho_count(&t, e, k)?)),
                    ("rho1_closed_form", json!(closed)),
                    ("rho1_prime_power", pp.unwrap_or(Value::Null)),
                    ("union_size", json!(u.actual)),
                    ("union_formula", json!(u.formula)),
                ],
            )
        }
        Cmd::ClassifyFn { name, n } => {
            let f = builtin(&name).ok_or_else(|| {
                let names: Vec<&str> = BUILTINS.iter().map(|(n, _)| *n).collect();
                Failure::Usage(format!("unknown function `{name}`; expected one of {}", names.join(", ")))
            })?;
            if n == 0 {
                return Err(Failure::Usage("N must be positive".into()));
            }
            let c = classify_function(&f, n);
            let cx = |p: Option<(u64, u64)>| json!(p.map(|(a, b)| [a, b]));
            reply(
                vec![("function", json!(name)), ("n", json!(n))],
                vec![
                    ("multiplicative", json!(c.is_m)),
                    ("quasimultiplicative", json!(c.is_qm)),
                    ("division_invariant", json!(c.is_di)),
                    ("di_on_prime_powers", json!(c.is_di_pa)),
                    ("m_counterexample", cx(c.m_counterexample)),
                    ("qm_counterexample", cx(c.qm_counterexample)),
                    ("di_counterexample", cx(c.di_counterexample)),
                    ("di_pa_counterexample", cx(c.di_pa_counterexample)),
                ],
            )
        }
        Cmd::Algebra { m } => {
            let md = modulus(m)?;
            let t = IdemOpsTable::new(&md);
            let b = basis_map(&md);
            let r = verify_algebra(&md);
            let laws: Vec<Value> = r
                .laws
                .iter()
                .map(|l| {
                    let cx = l
                        .counterexample
                        .as_ref()
                        .map(|w| w.iter().map(|(k, v)| (k.to_string(), json!(v))).collect::<Map<String, Value>>());
                    json!({"law": l.law, "passed": l.passed, "checked": l.checked, "counterexample": cx})
                })
                .collect();
            let members: Vec<Value> = b.member_sets.iter().map(|(e, s)| json!({"e": e, "basis": s})).collect();
            reply(
                vec![("m", json!(md.value()))],
                vec![
                    ("idempotents", json!(t.elements)),
                    ("complement", json!(t.complement)),
                    ("circ", json!(t.circ)),
                    ("otimes", json!(t.otimes)),
                    ("simdiff", json!(t.simdiff)),
                    ("basis", json!(b.basis)),
                    ("members", json!(members)),
                    ("laws", json!(laws)),
                    ("all_passed", json!(r.all_passed())),
                ],
            )
        }
        Cmd::Idemop { m, op, e1, e2 } => {
            let md = modulus(m)?;
            let which = IdemOp::parse(&op).ok_or_else(|| {
                Failure::Usage(format!("unknown operation `{op}`; expected complement, circ, otimes or simdiff"))
            })?;
            let value = idem_core::algebra::idem_op(&md, which, e1, e2)?;
            let mut inputs = vec![("m", json!(md.value())), ("op", json!(which.name())), ("e1", json!(md.canon(e1)))];
            if let Some(e2) = e2 {
                inputs.push(("e2", json!(md.canon(e2))));
            }
            reply(inputs, vec![("value", json!(value))])
        }
        Cmd::Quadratic { m, k } => {
            let md = modulus(m)?;
            enumerable(&md, cap)?;
            let s = kernel(&md, k);
            let coprime = gcd(s.k, md.value()) == 1;
            let mut answer = vec![("solutions", json!(s.solutions)), ("size", json!(s.solutions.len()))];
            if coprime {
                answer.push(("equals_k_times_idempotents", json!(s.solutions == scaled_idempotents(&md, s.k))));
            }
            reply(vec![("m", json!(md.value())), ("k", json!(s.k))], answer)
        }
        Cmd::Sqrt { m, e } => {
            let md = modulus(m)?;
            enumerable(&md, cap)?;
            let r = sqrt_structure(&md, e)?;
            let dec: Vec<Value> = r.decompositions.iter().map(|&(root, e0)| json!([root, e0])).collect();
            reply(
                vec![("m", json!(r.m)), ("e", json!(r.e))],
                vec![
                    ("roots", json!(r.roots)),
                    ("decompositions", json!(dec)),
                    ("size", json!(r.size)),
                    ("expected_size", json!(r.expected_size)),
                    ("product", json!(r.product)),
                    ("expected_product", json!(r.expected_product)),
                    ("holds", json!(r.holds())),
                ],
            )
        }
        Cmd::Tower { m, base, height } => {
            let md = modulus(m)?;
            if height == 0 {
                return Err(Failure::Usage("height must be at least 1".into()));
            }
            let b = md.canon(base);
            reply(
                vec![("m", json!(md.value())), ("base", json!(b)), ("height", json!(height))],
                vec![("value", json!(tower_mod(&md, b, height)))],
            )
        }
        Cmd::Audit { range, theorems, out } => {
            let (lo, hi) = audit::parse_range(&range).map_err(Failure::Usage)?;
            let ids: Vec<&str> = theorems.iter().map(String::as_str).filter(|s| !s.is_empty()).collect();
            let selected = idem_core::audit::select(&ids).map_err(Failure::Usage)?;
            let timed = audit::run(lo, hi, &selected, cap)?;
            let doc = audit::report_json(&timed, cap, true);
            if let Some(path) = &out {
                let body = serde_json::to_string_pretty(&doc).expect("report serializes") + "\n";
                std::fs::write(path, body).map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
            }
            let text = audit_text(&doc);
            let Value::Object(map) = doc else { unreachable!() };
            let mut answer = Vec::new();
            for key in ["range", "domain_bound", "findings_per_modulus", "theorems", "timing"] {
                answer.push((key, map[key].clone()));
            }
            Ok(Reply { inputs: Vec::new(), answer, text: Some(text) })
        }
    }
}

/// One line per theorem, then one per recorded finding.
fn audit_text(doc: &Value) -> String {
    let mut s = String::new();
    let range = &doc["range"];
    let theorems = doc["theorems"].as_array().expect("theorem list");
    let failing = theorems.iter().filter(|t| t["violations"].as_u64() != Some(0)).count();
    let _ = writeln!(
        s,
        "audit {}..{}: {} theorems, {} with counterexamples",
        range["lo"],
        range["hi"],
        theorems.len(),
        failing
    );
    for t in theorems {
        let _ = writeln!(
            s,
            "{} {}: {} instances, {} skipped, {} violations",
            t["id"].as_str().unwrap_or_default(),
            t["status"].as_str().unwrap_or_default(),
            t["instances"],
            t["skipped"],
            t["violations"]
        );
    }
    for t in theorems {
        for f in t["findings"].as_array().into_iter().flatten() {
            let witness: Vec<String> = f["witness"]
                .as_object()
                .into_iter()
                .flatten()
                .map(|(k, v)| format!("{k}={}", render::text(&[("", v.clone())]).trim_end()))
                .collect();
            let _ = writeln!(
                s,
                "  {} m={} {}: expected {}, actual {} [{}] ({})",
                t["id"].as_str().unwrap_or_default(),
                f["m"],
                witness.join(" "),
                f["expected"],
                f["actual"],
                f["claim"].as_str().unwrap_or_default(),
                f["replay"].as_str().unwrap_or_default()
            );
        }
    }
    s
}

/// Parses `argv` (program name first) and evaluates it.
pub fn evaluate<I, T>(argv: I) -> Result<(Reply, bool), Failure>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = Cli::try_parse_from(argv).map_err(|e| Failure::Usage(e.render().to_string()))?;
    let json = cli.json;
    Ok((execute(cli.cmd, cli.max_enum)?, json))
}

/// Parses and runs one invocation, capturing its output.
pub fn dispatch<I, T>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let mut text = e.render().to_string();
            if e.use_stderr() && !text.contains("Usage:") {
                text = format!("{text}\n{}\n", Cli::command().render_usage());
            }
            return if e.use_stderr() {
                CommandResult { exit_code: 2, stdout: String::new(), stderr: text }
            } else {
                CommandResult { exit_code: 0, stdout: text, stderr: String::new() }
            };
        }
    };
    let json = cli.json;
    match execute(cli.cmd, cli.max_enum) {
        Ok(r) => {
            let stdout =
                if json { serde_json::to_string(&r.json()).expect("payload serializes") + "\n" } else { r.text() };
            CommandResult { exit_code: 0, stdout, stderr: String::new() }
        }
        Err(f) => {
            let code = f.exit_code();
            let stderr = match f {
                Failure::Usage(msg) if msg.starts_with("error:") => msg,
                Failure::Usage(msg) => format!(
                    "error: {msg}\n\nUsage: idem [OPTIONS] <COMMAND>\nRun `idem --help` for the command list.\n"
                ),
                Failure::Cap(msg) => format!("error: {msg}; raise --max-enum or IDEM_MAX_ENUM\n"),
                Failure::Io(msg) => format!("error: {msg}\n"),
            };
            CommandResult { exit_code: code, stdout: String::new(), stderr }
        }
    }
}
