//! `qchar`: command-line front end for the q-character engine.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use qchar_core::braid::{braid_act_word, Dir};
use qchar_core::cartan::{CartanDatum, Cone, WeylWord};
use qchar_core::io::cache::fm_expand_cached;
use qchar_core::io::parse::{parse_expr, parse_monomial, parse_poly, RingValue};
use qchar_core::io::serialize::{render_poly, render_series, series_json, Format};
use qchar_core::io::Cache;
use qchar_core::limits::{
    const_flip, factor_const_nonconst, project_pi_r, projected_limit, verify_all, verify_case,
    CaseReport, Engine, LimitReport, LimitRequest, Verdict,
};
use qchar_core::qchar::{kr_highest_weight, kr_qchar_closed, w_normalized_qchar, QCharacter};
use qchar_core::rings::{CAMonomial, GradedSeries, SparsePoly, YMonomial};
use qchar_core::Error;

#[derive(Parser)]
#[command(
    name = "qchar",
    version,
    about = "Twisted q-characters and their projected limits"
)]
struct Cli {
    /// Bypass the on-disk cache ($QCHAR_CACHE_DIR).
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Cartan matrix, symmetrizers, positive roots and longest element.
    Roots {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, default_value = "text")]
        out: Format,
    },
    /// Apply T_w (or its inverse) to a Y- or Psi-expression.
    BraidAct {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, visible_alias = "word")]
        w: WeylWord,
        #[arg(long, conflicts_with = "dir")]
        inverse: bool,
        /// +1 for T_w, -1 for its inverse.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_dir)]
        dir: Option<Dir>,
        #[command(flatten)]
        expr: ExprArg,
        #[arg(long, default_value = "text")]
        out: Format,
    },
    /// q-character of the simple module with a dominant highest monomial.
    Qchar {
        #[command(flatten)]
        head: HeadArgs,
        #[arg(long, default_value = "fm")]
        engine: EngineArg,
        #[arg(long, default_value = "text")]
        out: Format,
    },
    /// w-normalized q-character, optionally truncated at a cone height.
    Wnorm {
        #[command(flatten)]
        head: HeadArgs,
        #[arg(long)]
        w: WeylWord,
        #[arg(long)]
        height: Option<i64>,
        #[arg(long, default_value = "text")]
        out: Format,
    },
    /// Apply the projection pi_R to an A/e-expression.
    Project {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[command(flatten)]
        expr: ExprArg,
        #[arg(long, default_value = "text")]
        out: Format,
    },
    /// Projected limit of w-normalized KR q-characters.
    Limit {
        #[command(flatten)]
        lim: LimitArgs,
        #[arg(long, default_value = "text")]
        out: Format,
    },
    /// Projected limit split into constant and non-constant parts.
    Factorize {
        #[command(flatten)]
        lim: LimitArgs,
        #[arg(long, default_value = "text")]
        out: Format,
    },
    /// Run the built-in catalog of worked examples.
    Verify {
        #[arg(long)]
        case: Option<String>,
        #[arg(long)]
        all: bool,
        #[arg(long)]
        list: bool,
        #[arg(long, default_value = "text")]
        out: Format,
    },
    /// Inspect or clear the on-disk cache.
    Cache {
        #[arg(value_parser = ["path", "list", "clear"], default_value = "list")]
        action: String,
    },
}

#[derive(Clone, Copy, clap::ValueEnum)]
enum EngineArg {
    Fm,
    Closed,
}

/// Expression given either positionally or with `--expr`.
#[derive(Args)]
#[group(required = true, multiple = false)]
struct ExprArg {
    #[arg(value_name = "EXPR", allow_hyphen_values = true)]
    positional: Option<String>,
    #[arg(long = "expr", allow_hyphen_values = true)]
    flag: Option<String>,
}

impl ExprArg {
    fn text(&self) -> &str {
        self.positional
            .as_deref()
            .or(self.flag.as_deref())
            .unwrap_or_default()
    }
}

fn parse_dir(s: &str) -> Result<Dir, String> {
    s.trim_start_matches('+')
        .parse::<i64>()
        .ok()
        .and_then(Dir::from_sign)
        .ok_or_else(|| format!("expected +1 or -1, got {s}"))
}

#[derive(Args)]
struct HeadArgs {
    #[arg(long = "type")]
    ty: String,
    /// Highest monomial, e.g. "Y[1,-3]Y[1,-1]".
    #[arg(long, visible_alias = "hw", conflicts_with_all = ["i", "k"])]
    head: Option<String>,
    /// KR node (1-based), used with --k.
    #[arg(long, requires = "k")]
    i: Option<usize>,
    #[arg(long, requires = "i")]
    k: Option<usize>,
    #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
    shift: i64,
}

#[derive(Args)]
struct LimitArgs {
    #[arg(long = "type")]
    ty: String,
    #[arg(long, default_value = "e")]
    w: WeylWord,
    /// KR node (1-based).
    #[arg(long, default_value_t = 1)]
    i: usize,
    /// Extra dominant monomial m.
    #[arg(long, default_value = "1")]
    m: String,
    #[arg(long, default_value_t = 6)]
    height: i64,
    #[arg(long)]
    kmax: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    rmin: Option<i64>,
    #[arg(long, default_value_t = 3)]
    window: usize,
    #[arg(long, default_value = "fm")]
    engine: EngineArg,
}

/// Failure of a command, carrying its exit code.
enum Failure {
    Core(Error),
    Usage(String),
    Refuted(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn exit_code(&self) -> u8 {
        match self {
            Failure::Core(Error::Parse { .. }) | Failure::Usage(_) => 2,
            Failure::Core(Error::NoLimitDetected { .. }) => 4,
            Failure::Core(Error::Io(_) | Error::Json(_)) => 1,
            Failure::Core(_) => 3,
            Failure::Refuted(_) => 1,
        }
    }
}

type CmdResult = Result<String, Failure>;

fn datum(label: &str) -> Result<CartanDatum, Failure> {
    Ok(CartanDatum::from_label(label)?)
}

fn node_index(d: &CartanDatum, i: usize) -> Result<usize, Failure> {
    if i == 0 {
        return Err(Failure::Usage("node labels start at 1".into()));
    }
    d.check_node(i - 1)?;
    Ok(i - 1)
}

fn head_monomial(d: &CartanDatum, h: &HeadArgs) -> Result<YMonomial, Failure> {
    match (&h.head, h.i, h.k) {
        (Some(text), _, _) => Ok(parse_monomial::<YMonomial>(text, d)?),
        (None, Some(i), Some(k)) => Ok(kr_highest_weight(d, node_index(d, i)?, k, h.shift)),
        _ => Err(Failure::Usage("give --head or both --i and --k".into())),
    }
}

fn cache_for(cli_no_cache: bool) -> Option<Cache> {
    if cli_no_cache {
        None
    } else {
        Cache::from_env()
    }
}

fn cmd_roots(ty: &str, out: Format) -> CmdResult {
    let d = datum(ty)?;
    let roots: Vec<Vec<i64>> = d.positive_roots().to_vec();
    let w0 = d.longest_word().to_string();
    if out == Format::Json {
        let v = json!({
            "datum": d.type_label.to_string(),
            "cartan": d.cartan_matrix(),
            "symmetrizers": d.symmetrizers(),
            "dual_coxeter": d.dual_coxeter,
            "lacing": d.lacing,
            "positive_roots": roots,
            "longest_word": w0,
        });
        return Ok(serde_json::to_string_pretty(&v).unwrap());
    }
    let mut s = format!("type {}\ncartan matrix:\n", d.type_label);
    for row in d.cartan_matrix() {
        let cells: Vec<String> = row.iter().map(|c| format!("{c:>3}")).collect();
        s.push_str(&format!("  {}\n", cells.join("")));
    }
    s.push_str(&format!("symmetrizers d: {:?}\n", d.symmetrizers()));
    s.push_str(&format!("dual Coxeter number: {}\n", d.dual_coxeter));
    s.push_str(&format!("positive roots ({}):\n", roots.len()));
    for r in &roots {
        s.push_str(&format!("  {r:?}\n"));
    }
    s.push_str(&format!("longest element: {w0}"));
    Ok(s)
}

fn cmd_braid(ty: &str, w: &WeylWord, dir: Dir, expr: &str, out: Format) -> CmdResult {
    let d = datum(ty)?;
    for &l in w.letters() {
        d.check_node(l)?;
    }
    match parse_expr(expr, &d)? {
        RingValue::Y(p) => Ok(render_poly(&d, None, &braid_act_word(&d, w, dir, &p), out)),
        RingValue::LWeight(p) => Ok(render_poly(&d, None, &braid_act_word(&d, w, dir, &p), out)),
        _ => Err(Failure::Usage(
            "braid-act expects a Y- or Psi-expression".into(),
        )),
    }
}

fn compute_qchar(
    d: &CartanDatum,
    head: &YMonomial,
    engine: EngineArg,
    cache: Option<&Cache>,
) -> Result<QCharacter, Failure> {
    match engine {
        EngineArg::Fm => Ok(fm_expand_cached(cache, d, head)?),
        EngineArg::Closed => {
            let (i, k, s) = qchar_core::qchar::detect_kr(d, head).ok_or_else(|| {
                Error::ClosedFormUnavailable(format!("{head} is not a KR highest monomial"))
            })?;
            Ok(kr_qchar_closed(d, i, k, s)?)
        }
    }
}

fn cmd_qchar(h: &HeadArgs, engine: EngineArg, out: Format, cache: Option<&Cache>) -> CmdResult {
    let d = datum(&h.ty)?;
    let head = head_monomial(&d, h)?;
    let q = compute_qchar(&d, &head, engine, cache)?;
    Ok(render_poly(&d, Some(head.to_string()), &q.poly, out))
}

fn cmd_wnorm(
    h: &HeadArgs,
    w: &WeylWord,
    height: Option<i64>,
    out: Format,
    cache: Option<&Cache>,
) -> CmdResult {
    let d = datum(&h.ty)?;
    let head = head_monomial(&d, h)?;
    let q = compute_qchar(&d, &head, EngineArg::Fm, cache)?;
    let norm = w_normalized_qchar(&d, &q, w)?;
    match height {
        Some(n) => {
            let s = GradedSeries::from_poly(Cone::new(&d, w), n, &norm)?;
            Ok(render_series(&d, Some(head.to_string()), &s, out))
        }
        None => Ok(render_poly(&d, Some(head.to_string()), &norm, out)),
    }
}

fn cmd_project(ty: &str, r: i64, expr: &str, out: Format) -> CmdResult {
    let d = datum(ty)?;
    let p: SparsePoly<CAMonomial> = parse_poly(expr, &d)?;
    Ok(render_poly(&d, None, &project_pi_r(r, &p), out))
}

fn limit_request(
    d: &CartanDatum,
    a: &LimitArgs,
    cache: Option<&Cache>,
) -> Result<LimitRequest, Failure> {
    let node = node_index(d, a.i)?;
    let m = parse_monomial::<YMonomial>(&a.m, d)?;
    for &l in a.w.letters() {
        d.check_node(l)?;
    }
    let mut req = LimitRequest::new(d, &a.w, node, &m, a.height);
    if let Some(k) = a.kmax {
        req.k_max = k;
    }
    if let Some(r) = a.rmin {
        req.r_min = r;
    }
    req.window = a.window;
    req.engine = match a.engine {
        EngineArg::Fm => Engine::Fm,
        EngineArg::Closed => Engine::Closed,
    };
    req.cache = cache.cloned();
    Ok(req)
}

/// Limit value and the `R` it stabilized from, through the cache.
fn compute_limit(
    d: &CartanDatum,
    a: &LimitArgs,
    cache: Option<&Cache>,
) -> Result<(GradedSeries, i64), Failure> {
    let req = limit_request(d, a, cache)?;
    let cone = Cone::new(d, &req.w);
    let request_text = format!(
        "limit w={} i={} m={} N={} kmax={} rmin={} window={}",
        req.w, req.node, req.m, req.height_cap, req.k_max, req.r_min, req.window
    );
    let key = cache.map(|c| c.key(d, &request_text));
    if let (Some(c), Some(k)) = (cache, &key) {
        if let Some(payload) = c.get(k) {
            if let Some(hit) = decode_limit(d, &cone, req.height_cap, &payload) {
                log::info!("limit served from cache");
                return Ok(hit);
            }
            log::warn!("unreadable cached limit {k}");
        }
    }
    let report: LimitReport = projected_limit(&req)?;
    let value = report.value.expect("converged sweep has a value");
    let r = report.stable_from_r.unwrap_or(0);
    log::info!(
        "converged: stable from R={r}, {} sweep steps",
        report.sweep_log.len()
    );
    if let (Some(c), Some(k)) = (cache, &key) {
        let payload = json!({"value": qchar_core::io::series_text(&value), "stable_from_r": r});
        let meta = json!({"kind": "limit", "request": request_text, "height_cap": req.height_cap});
        if let Err(e) = c.put(k, &payload.to_string(), meta) {
            log::warn!("could not write cache entry: {e}");
        }
    }
    Ok((value, r))
}

fn decode_limit(
    d: &CartanDatum,
    cone: &Cone,
    cap: i64,
    payload: &str,
) -> Option<(GradedSeries, i64)> {
    let v: Value = serde_json::from_str(payload).ok()?;
    let poly: SparsePoly<CAMonomial> = parse_poly(v["value"].as_str()?, d).ok()?;
    let s = GradedSeries::from_poly(cone.clone(), cap, &poly).ok()?;
    Some((s, v["stable_from_r"].as_i64()?))
}

fn cmd_limit(a: &LimitArgs, out: Format, cache: Option<&Cache>) -> CmdResult {
    let d = datum(&a.ty)?;
    let (value, r) = compute_limit(&d, a, cache)?;
    if out == Format::Json {
        let mut v = series_json(&d, Some(a.m.clone()), &value);
        v["limit"] = json!({"w": a.w.to_string(), "i": a.i, "stable_from_r": r});
        return Ok(serde_json::to_string_pretty(&v).unwrap());
    }
    Ok(render_series(&d, Some(a.m.clone()), &value, out))
}

fn cmd_factorize(a: &LimitArgs, out: Format, cache: Option<&Cache>) -> CmdResult {
    let d = datum(&a.ty)?;
    let (value, _) = compute_limit(&d, a, cache)?;
    let (c, nonconst) = factor_const_nonconst(&value)?;
    let flipped = match const_flip(&d, &c) {
        Ok(f) => Some(f),
        Err(Error::FlipLeftCone(why)) => {
            log::warn!("constant part cannot be flipped: {why}");
            None
        }
        Err(e) => return Err(e.into()),
    };
    let head = Some(a.m.clone());
    if out == Format::Json {
        let v = json!({
            "constant": series_json(&d, head.clone(), &c),
            "nonconstant": series_json(&d, head.clone(), &nonconst),
            "flipped_constant": flipped.as_ref().map(|f| series_json(&d, head.clone(), f)),
        });
        return Ok(serde_json::to_string_pretty(&v).unwrap());
    }
    let mut s = format!(
        "c = {}\na = {}",
        render_series(&d, head.clone(), &c, out),
        render_series(&d, head.clone(), &nonconst, out)
    );
    if let Some(f) = &flipped {
        s.push_str(&format!("\nc^-1 = {}", render_series(&d, head, f, out)));
    }
    Ok(s)
}

fn render_reports(reports: &[CaseReport], out: Format) -> String {
    if out == Format::Json {
        return serde_json::to_string_pretty(reports).unwrap();
    }
    let mut s: String = reports.iter().map(|r| r.to_text()).collect();
    let clauses: usize = reports.iter().map(|r| r.clauses.len()).sum();
    let refuted: usize = reports.iter().map(|r| r.refuted()).sum();
    let inconclusive: usize = reports.iter().map(|r| r.inconclusive()).sum();
    s.push_str(&format!(
        "summary: {} cases, {clauses} clauses, {} confirmed, {refuted} refuted, {inconclusive} inconclusive",
        reports.len(),
        clauses - refuted - inconclusive
    ));
    s
}

fn cmd_verify(case: Option<&str>, all: bool, list: bool, out: Format) -> CmdResult {
    if list {
        let cat = qchar_core::limits::catalog();
        return Ok(cat
            .iter()
            .map(|c| format!("{:<28} {}", c.id, c.description))
            .collect::<Vec<_>>()
            .join("\n"));
    }
    let reports = match (case, all) {
        (Some(id), false) => vec![verify_case(id)
            .ok_or_else(|| Failure::Usage(format!("unknown case '{id}'; see --list")))?],
        (None, true) => verify_all(),
        _ => {
            return Err(Failure::Usage(
                "give exactly one of --case, --all or --list".into(),
            ))
        }
    };
    let text = render_reports(&reports, out);
    let refuted = reports
        .iter()
        .any(|r| r.clauses.iter().any(|c| c.verdict == Verdict::Refuted));
    if refuted {
        Err(Failure::Refuted(text))
    } else {
        Ok(text)
    }
}

fn cmd_cache(action: &str) -> CmdResult {
    let Some(cache) = Cache::from_env() else {
        return Ok(format!(
            "cache disabled: set {} to enable it",
            qchar_core::io::CACHE_ENV
        ));
    };
    match action {
        "path" => Ok(cache.dir().display().to_string()),
        "clear" => Ok(format!("removed {} entries", cache.clear()?)),
        _ => {
            let keys = cache.entries()?;
            Ok(format!(
                "{} entries in {}\n{}",
                keys.len(),
                cache.dir().display(),
                keys.join("\n")
            )
            .trim_end()
            .to_string())
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    let cache = cache_for(cli.no_cache);
    let cache = cache.as_ref();
    match &cli.cmd {
        Command::Roots { ty, out } => cmd_roots(ty, *out),
        Command::BraidAct {
            ty,
            w,
            inverse,
            dir,
            expr,
            out,
        } => {
            let dir = dir.unwrap_or(if *inverse { Dir::Inverse } else { Dir::Forward });
            cmd_braid(ty, w, dir, expr.text(), *out)
        }
        Command::Qchar { head, engine, out } => cmd_qchar(head, *engine, *out, cache),
        Command::Wnorm {
            head,
            w,
            height,
            out,
        } => cmd_wnorm(head, w, *height, *out, cache),
        Command::Project { ty, r, expr, out } => cmd_project(ty, *r, expr.text(), *out),
        Command::Limit { lim, out } => cmd_limit(lim, *out, cache),
        Command::Factorize { lim, out } => cmd_factorize(lim, *out, cache),
        Command::Verify {
            case,
            all,
            list,
            out,
        } => cmd_verify(case.as_deref(), *all, *list, *out),
        Command::Cache { action } => cmd_cache(action),
    }
}

/// Prints to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            emit(&out);
            ExitCode::SUCCESS
        }
        Err(f) => {
            let code = f.exit_code();
            match f {
                Failure::Core(Error::NoLimitDetected { bound, report }) => {
                    eprintln!("error: no-limit-detected ({bound})");
                    eprintln!("sweep log:\n{}", report.log_text());
                }
                Failure::Core(e) => eprintln!("error: {e}"),
                Failure::Usage(msg) => eprintln!("error: {msg}"),
                Failure::Refuted(text) => {
                    emit(&text);
                    eprintln!("error: catalog contains REFUTED clauses");
                }
            }
            ExitCode::from(code)
        }
    }
}
