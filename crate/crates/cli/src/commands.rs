//! Command implementations. Every command produces a machine-readable JSON
//! envelope (stable key order, the wall-time field excepted from
//! determinism) and a human rendering, plus the exit code: 0 success or
//! consistent, 1 domain failure, 2 parse failure, 3 inconsistency finding.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use leibniz_core::algebra::{Algebra, GradedSubspace, Label, Parity};
use leibniz_core::corpus;
use leibniz_core::decomposer;
use leibniz_core::exactlin::{Field, Subspace};
use leibniz_core::idealkit::{self, leibniz_kernel, simplicity_oracle_with_kernel, Verdict};
use leibniz_core::maxlen::{self, MaxlenContext};
use leibniz_core::supportgraph::{SupportMap, SupportSymbol};

use crate::format::{AlgebraFile, FormatError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_FINDING: i32 = 3;

pub struct Outcome {
    pub exit: i32,
    pub json: Value,
    pub human: String,
}

struct Loaded {
    algebra: Algebra,
    digest: String,
    path: String,
}

fn load(path: &Path) -> Result<Loaded, Outcome> {
    let bytes = match fs::read(path) {
        Ok(b) => b,
        Err(e) => return Err(parse_failure(path, &format!("cannot read file: {e}"))),
    };
    let digest = hex_digest(&bytes);
    let text = match String::from_utf8(bytes) {
        Ok(t) => t,
        Err(_) => return Err(parse_failure(path, "file is not valid utf-8")),
    };
    let file = match AlgebraFile::from_json(&text) {
        Ok(f) => f,
        Err(FormatError::Json(e)) => {
            return Err(parse_failure(path, &format!("invalid json: {e}")))
        }
        Err(e) => return Err(parse_failure(path, &e.to_string())),
    };
    let algebra = match file.to_algebra() {
        Ok(a) => a,
        Err(e) => return Err(parse_failure(path, &e.to_string())),
    };
    Ok(Loaded {
        algebra,
        digest,
        path: path.display().to_string(),
    })
}

fn hex_digest(bytes: &[u8]) -> String {
    let mut h = Sha256::new();
    h.update(bytes);
    format!("{:x}", h.finalize())
}

fn parse_failure(path: &Path, message: &str) -> Outcome {
    Outcome {
        exit: EXIT_PARSE,
        json: json!({
            "command": "error",
            "input": path.display().to_string(),
            "error": message,
        }),
        human: format!("parse error in {}: {message}", path.display()),
    }
}

fn envelope(command: &str, loaded: &Loaded, started: Instant, body: Value) -> Value {
    let mut map = serde_json::Map::new();
    map.insert("command".into(), json!(command));
    map.insert("input".into(), json!(loaded.path));
    map.insert("digest".into(), json!(loaded.digest));
    map.insert(
        "wall_time_ms".into(),
        json!(started.elapsed().as_millis() as u64),
    );
    if let Value::Object(extra) = body {
        for (k, v) in extra {
            map.insert(k, v);
        }
    }
    Value::Object(map)
}

fn require_valid(loaded: &Loaded, command: &str, started: Instant) -> Result<(), Outcome> {
    let report = loaded.algebra.validate();
    if report.is_valid() {
        return Ok(());
    }
    let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
    let body = json!({"valid": false, "violations": violations});
    Err(Outcome {
        exit: EXIT_DOMAIN,
        human: format!(
            "{}: algebra is invalid, refusing to analyze\n  {}",
            loaded.path,
            violations.join("\n  ")
        ),
        json: envelope(command, loaded, started, body),
    })
}

fn subspace_json(s: &Subspace) -> Value {
    let rows: Vec<Vec<String>> = s
        .rows()
        .iter()
        .map(|r| r.coords().iter().map(|c| c.to_string()).collect())
        .collect();
    json!({"dim": s.dim(), "rows": rows})
}

fn graded_json(g: &GradedSubspace) -> Value {
    let pieces: Vec<Value> = g
        .pieces()
        .iter()
        .map(|((label, parity), s)| {
            json!({
                "label": label.to_string(),
                "parity": parity.bit(),
                "space": subspace_json(s),
            })
        })
        .collect();
    json!({"dim": g.dim(), "pieces": pieces})
}

fn labels_json(set: &std::collections::BTreeSet<Label>) -> Value {
    Value::Array(set.iter().map(|l| json!(l.to_string())).collect())
}

pub fn cmd_validate(path: &Path) -> Outcome {
    let started = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let report = loaded.algebra.validate();
    let violations: Vec<String> = report.violations.iter().map(|v| v.to_string()).collect();
    let valid = report.is_valid();
    let body = json!({
        "valid": valid,
        "violations": violations,
        "dim": loaded.algebra.dim(),
        "field": loaded.algebra.field().to_string(),
        "char2_warning": loaded.algebra.char2_warning(),
    });
    let human = if valid {
        let warn = if loaded.algebra.char2_warning() {
            "\n  note: characteristic 2, sign factors collapse"
        } else {
            ""
        };
        format!(
            "{}: valid ({} generators){warn}",
            loaded.path,
            loaded.algebra.dim()
        )
    } else {
        format!("{}: INVALID\n  {}", loaded.path, violations.join("\n  "))
    };
    Outcome {
        exit: if valid { EXIT_OK } else { EXIT_DOMAIN },
        json: envelope("validate", &loaded, started, body),
        human,
    }
}

pub fn cmd_support(path: &Path) -> Outcome {
    let started = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    if let Err(o) = require_valid(&loaded, "support", started) {
        return o;
    }
    let s = leibniz_core::supportgraph::support(&loaded.algebra);
    let body = json!({
        "support": labels_json(&s.all),
        "support_even": labels_json(&s.even),
        "support_odd": labels_json(&s.odd),
        "distinguished": loaded.algebra.distinguished().map(|l| l.to_string()),
    });
    let human = format!(
        "support: {:?}\n  even part: {:?}\n  odd part: {:?}\n  distinguished: {}",
        s.all.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        s.even.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        s.odd.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
        loaded
            .algebra
            .distinguished()
            .map(|l| l.to_string())
            .unwrap_or_else(|| "(none)".into()),
    );
    Outcome {
        exit: EXIT_OK,
        json: envelope("support", &loaded, started, body),
        human,
    }
}

pub fn parse_symbol(s: &str) -> SupportSymbol {
    match s.strip_suffix('~') {
        Some(base) => SupportSymbol::tilde(base),
        None => SupportSymbol::plain(s),
    }
}

pub fn cmd_star(path: &Path, x: &str, y: &str) -> Outcome {
    let started = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    if let Err(o) = require_valid(&loaded, "star", started) {
        return o;
    }
    let map = SupportMap::new(&loaded.algebra);
    let sx = parse_symbol(x);
    let sy = parse_symbol(y);
    let result = map.star(&sx, &sy);
    let names: Vec<String> = result.iter().map(|l| l.to_string()).collect();
    let body = json!({"x": sx.to_string(), "y": sy.to_string(), "result": names});
    let human = format!("{sx} * {sy} = {{{}}}", names.join(", "));
    Outcome {
        exit: EXIT_OK,
        json: envelope("star", &loaded, started, body),
        human,
    }
}

pub fn cmd_classes(path: &Path) -> Outcome {
    let started = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    if let Err(o) = require_valid(&loaded, "classes", started) {
        return o;
    }
    let classes = SupportMap::new(&loaded.algebra).connection_classes();
    let list: Vec<Value> = classes
        .iter()
        .map(|c| {
            json!({
                "representative": c.representative.to_string(),
                "members": labels_json(&c.members),
            })
        })
        .collect();
    let mut human = format!("{} connection class(es)\n", classes.len());
    for c in &classes {
        let _ = writeln!(
            human,
            "  [{}] = {{{}}}",
            c.representative,
            c.members
                .iter()
                .map(|l| l.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        );
    }
    let body = json!({"classes": list});
    Outcome {
        exit: EXIT_OK,
        json: envelope("classes", &loaded, started, body),
        human,
    }
}

fn decompose_body(alg: &Algebra) -> (Value, String, bool) {
    let report = decomposer::decompose(alg);
    let ideals: Vec<Value> = report
        .ideals
        .iter()
        .map(|ci| {
            let (even, odd) = decomposer::body_parity_dims(&ci.body);
            json!({
                "representative": ci.class.representative.to_string(),
                "members": labels_json(&ci.class.members),
                "head": subspace_json(&ci.head),
                "body_dim_even": even,
                "body_dim_odd": odd,
                "total_dim": ci.total.dim(),
            })
        })
        .collect();
    let checks: Value = Value::Object(
        report
            .checks
            .iter()
            .map(|(k, v)| (k.clone(), json!(v)))
            .collect(),
    );
    let centerless = idealkit::center(alg).is_zero();
    let tight = idealkit::is_tight(alg);
    let body = json!({
        "complement": subspace_json(&report.complement),
        "pair_span": subspace_json(&report.pair_span),
        "direct": report.direct,
        "checks": checks,
        "corollary_no_distinguished": alg.distinguished().is_none(),
        "corollary_centerless_tight": centerless && tight,
        "ideals": ideals,
    });
    let mut human = format!(
        "decomposition: {} ideal(s), complement dim {}, direct: {}\n",
        report.ideals.len(),
        report.complement.dim(),
        report.direct
    );
    for ci in &report.ideals {
        let _ = writeln!(
            human,
            "  class [{}]: head dim {}, body dim {}, total dim {}",
            ci.class.representative,
            ci.head.dim(),
            ci.body.dim(),
            ci.total.dim()
        );
    }
    let _ = writeln!(human, "  checks: {:?}", report.checks);
    (body, human, report.all_checks_pass())
}

pub fn cmd_decompose(path: &Path) -> Outcome {
    let started = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    if let Err(o) = require_valid(&loaded, "decompose", started) {
        return o;
    }
    let (body, human, ok) = decompose_body(&loaded.algebra);
    Outcome {
        exit: if ok { EXIT_OK } else { EXIT_FINDING },
        json: envelope("decompose", &loaded, started, body),
        human,
    }
}

pub fn cmd_frak_i(path: &Path) -> Outcome {
    let started = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    if let Err(o) = require_valid(&loaded, "frak-i", started) {
        return o;
    }
    match leibniz_kernel(&loaded.algebra) {
        Ok(kernel) => {
            let body = json!({"kernel": graded_json(&kernel)});
            let human = format!("Leibniz kernel: dim {}", kernel.dim());
            Outcome {
                exit: EXIT_OK,
                json: envelope("frak-i", &loaded, started, body),
                human,
            }
        }
        Err(e) => Outcome {
            exit: EXIT_FINDING,
            json: envelope("frak-i", &loaded, started, json!({"error": e.to_string()})),
            human: e.to_string(),
        },
    }
}

pub fn cmd_center(path: &Path) -> Outcome {
    let started = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    if let Err(o) = require_valid(&loaded, "center", started) {
        return o;
    }
    let z = idealkit::center(&loaded.algebra);
    let human = format!("center: dim {}", z.dim());
    let body = json!({"center": subspace_json(&z)});
    Outcome {
        exit: EXIT_OK,
        json: envelope("center", &loaded, started, body),
        human,
    }
}

pub fn cmd_lie_annihilator(path: &Path, include_o: bool) -> Outcome {
    let started = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    if let Err(o) = require_valid(&loaded, "lie-annihilator", started) {
        return o;
    }
    match leibniz_kernel(&loaded.algebra) {
        Ok(kernel) => {
            let ann = idealkit::lie_annihilator(&loaded.algebra, &kernel, include_o);
            let body = json!({"include_o": include_o, "annihilator": subspace_json(&ann)});
            let human = format!(
                "Lie annihilator (distinguished label {}): dim {}",
                if include_o { "quantified" } else { "skipped" },
                ann.dim()
            );
            Outcome {
                exit: EXIT_OK,
                json: envelope("lie-annihilator", &loaded, started, body),
                human,
            }
        }
        Err(e) => Outcome {
            exit: EXIT_FINDING,
            json: envelope(
                "lie-annihilator",
                &loaded,
                started,
                json!({"error": e.to_string()}),
            ),
            human: e.to_string(),
        },
    }
}

pub fn cmd_tight(path: &Path) -> Outcome {
    let started = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    if let Err(o) = require_valid(&loaded, "tight", started) {
        return o;
    }
    let tight = idealkit::is_tight(&loaded.algebra);
    Outcome {
        exit: EXIT_OK,
        json: envelope("tight", &loaded, started, json!({"tight": tight})),
        human: format!("distinguished component tight: {tight}"),
    }
}

pub fn cmd_maxlen(path: &Path) -> Outcome {
    let started = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    if let Err(o) = require_valid(&loaded, "maxlen", started) {
        return o;
    }
    let ml = maxlen::is_maximal_length(&loaded.algebra);
    Outcome {
        exit: EXIT_OK,
        json: envelope("maxlen", &loaded, started, json!({"maximal_length": ml})),
        human: format!("maximal length: {ml}"),
    }
}

pub fn cmd_s_mult(path: &Path) -> Outcome {
    let started = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    if let Err(o) = require_valid(&loaded, "s-mult", started) {
        return o;
    }
    let ctx = match MaxlenContext::new(&loaded.algebra) {
        Ok(c) => c,
        Err(e) => {
            return Outcome {
                exit: EXIT_DOMAIN,
                human: format!("multiplicativity needs maximal length: {e}"),
                json: envelope("s-mult", &loaded, started, json!({"error": e.to_string()})),
            }
        }
    };
    let report = ctx.support_multiplicativity();
    let body = json!({
        "multiplicative": report.holds,
        "counterexample": report.counterexample.as_ref().map(|w| w.to_string()),
    });
    let human = match &report.counterexample {
        None => "support multiplicative: true".to_string(),
        Some(w) => format!("support multiplicative: false\n  {w}"),
    };
    Outcome {
        exit: EXIT_OK,
        json: envelope("s-mult", &loaded, started, body),
        human,
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SimplicityMode {
    Oracle,
    Theorem,
    Both,
}

fn verdict_str(v: Verdict) -> &'static str {
    match v {
        Verdict::Simple => "simple",
        Verdict::NotSimple => "not-simple",
        Verdict::ProbablySimple => "probably-simple",
    }
}

fn oracle_json(alg: &Algebra, seed: u64) -> Result<(Value, String), String> {
    let kernel = leibniz_kernel(alg).map_err(|e| e.to_string())?;
    let report = simplicity_oracle_with_kernel(alg, &kernel, seed).map_err(|e| e.to_string())?;
    let value = json!({
        "verdict": verdict_str(report.verdict),
        "sampled": report.sampled,
        "witness": report.witness.as_ref().map(graded_json),
        "kernel_dim": kernel.dim(),
    });
    let human = format!(
        "oracle verdict: {}{}",
        verdict_str(report.verdict),
        if report.sampled {
            " (sampling over an infinite field)"
        } else {
            ""
        }
    );
    Ok((value, human))
}

fn theorem_json(
    ctx: &MaxlenContext<'_>,
    seed: u64,
    selected: (bool, bool),
) -> Result<(Value, String, bool), String> {
    let report = ctx
        .theorem_simplicity_check(seed)
        .map_err(|e| e.to_string())?;
    let rows: Vec<Value> = report
        .rows
        .iter()
        .map(|r| {
            let hyp: Value = Value::Object(
                r.hypotheses
                    .iter()
                    .map(|(k, v)| (k.clone(), json!(v)))
                    .collect(),
            );
            json!({
                "include_o": r.include_o,
                "allow_tilde": r.allow_tilde,
                "selected": (r.include_o, r.allow_tilde) == selected,
                "hypotheses": hyp,
                "hypotheses_hold": r.hypotheses_hold,
                "connected_both_sides": r.connectivity,
                "consistent": r.consistent,
            })
        })
        .collect();
    let value = json!({
        "oracle_verdict": verdict_str(report.oracle.verdict),
        "rows": rows,
        "consistent": report.consistent,
    });
    let mut human = format!(
        "characterization check: oracle {} / consistent {}\n",
        verdict_str(report.oracle.verdict),
        report.consistent
    );
    for r in &report.rows {
        let mark = if (r.include_o, r.allow_tilde) == selected { " <-" } else { "" };
        let _ = writeln!(
            human,
            "  include_o={} allow_tilde={}: hypotheses {} connectivity {} consistent {}{mark}",
            r.include_o, r.allow_tilde, r.hypotheses_hold, r.connectivity, r.consistent
        );
    }
    Ok((value, human, report.consistent))
}

pub fn cmd_simplicity(
    path: &Path,
    mode: SimplicityMode,
    seed: u64,
    include_o: bool,
    allow_tilde: bool,
) -> Outcome {
    let started = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    if let Err(o) = require_valid(&loaded, "simplicity", started) {
        return o;
    }
    let mut body = serde_json::Map::new();
    body.insert(
        "mode".into(),
        json!(match mode {
            SimplicityMode::Oracle => "oracle",
            SimplicityMode::Theorem => "theorem",
            SimplicityMode::Both => "both",
        }),
    );
    body.insert("seed".into(), json!(seed));
    let mut human = String::new();
    let mut exit = EXIT_OK;

    if matches!(mode, SimplicityMode::Oracle | SimplicityMode::Both) {
        match oracle_json(&loaded.algebra, seed) {
            Ok((v, h)) => {
                body.insert("oracle".into(), v);
                let _ = writeln!(human, "{h}");
            }
            Err(e) => {
                return Outcome {
                    exit: EXIT_FINDING,
                    human: e.clone(),
                    json: envelope("simplicity", &loaded, started, json!({"error": e})),
                }
            }
        }
    }
    if matches!(mode, SimplicityMode::Theorem | SimplicityMode::Both) {
        let ctx = match MaxlenContext::new(&loaded.algebra) {
            Ok(c) => c,
            Err(e) => {
                return Outcome {
                    exit: EXIT_DOMAIN,
                    human: format!(
                        "theorem mode needs a maximal-length algebra (every piece away \
                         from the distinguished label of dimension at most one): {e}"
                    ),
                    json: envelope(
                        "simplicity",
                        &loaded,
                        started,
                        json!({"error": e.to_string()}),
                    ),
                }
            }
        };
        match theorem_json(&ctx, seed, (include_o, allow_tilde)) {
            Ok((v, h, consistent)) => {
                body.insert("theorem".into(), v);
                human.push_str(&h);
                if !consistent {
                    exit = EXIT_FINDING;
                }
            }
            Err(e) => {
                return Outcome {
                    exit: EXIT_FINDING,
                    human: e.clone(),
                    json: envelope("simplicity", &loaded, started, json!({"error": e})),
                }
            }
        }
    }
    Outcome {
        exit,
        json: envelope("simplicity", &loaded, started, Value::Object(body)),
        human,
    }
}

pub fn cmd_report(path: &Path, seed: u64) -> Outcome {
    let started = Instant::now();
    let loaded = match load(path) {
        Ok(l) => l,
        Err(o) => return o,
    };
    let alg = &loaded.algebra;
    let validation = alg.validate();
    if !validation.is_valid() {
        return match require_valid(&loaded, "report", started) {
            Err(o) => o,
            Ok(()) => unreachable!("invalid algebra cannot pass"),
        };
    }
    let mut body = serde_json::Map::new();
    let mut human = String::new();
    let mut exit = EXIT_OK;

    body.insert("valid".into(), json!(true));
    body.insert("field".into(), json!(alg.field().to_string()));
    body.insert("dim".into(), json!(alg.dim()));

    let s = leibniz_core::supportgraph::support(alg);
    body.insert(
        "support".into(),
        json!({
            "all": labels_json(&s.all),
            "even": labels_json(&s.even),
            "odd": labels_json(&s.odd),
            "distinguished": alg.distinguished().map(|l| l.to_string()),
        }),
    );
    let _ = writeln!(
        human,
        "support: {} label(s), dim {}",
        s.all.len(),
        alg.dim()
    );

    let classes = SupportMap::new(alg).connection_classes();
    body.insert(
        "classes".into(),
        Value::Array(
            classes
                .iter()
                .map(|c| {
                    json!({
                        "representative": c.representative.to_string(),
                        "members": labels_json(&c.members),
                    })
                })
                .collect(),
        ),
    );
    let _ = writeln!(human, "connection classes: {}", classes.len());

    let kernel = match leibniz_kernel(alg) {
        Ok(k) => k,
        Err(e) => {
            return Outcome {
                exit: EXIT_FINDING,
                human: e.to_string(),
                json: envelope("report", &loaded, started, json!({"error": e.to_string()})),
            }
        }
    };
    body.insert("frak_i".into(), graded_json(&kernel));
    let _ = writeln!(human, "Leibniz kernel: dim {}", kernel.dim());

    let z = idealkit::center(alg);
    body.insert("center".into(), subspace_json(&z));
    let _ = writeln!(human, "center: dim {}", z.dim());

    let ann_with = idealkit::lie_annihilator(alg, &kernel, true);
    let ann_without = idealkit::lie_annihilator(alg, &kernel, false);
    body.insert(
        "lie_annihilator".into(),
        json!({
            "include_o": subspace_json(&ann_with),
            "exclude_o": subspace_json(&ann_without),
        }),
    );
    let _ = writeln!(
        human,
        "Lie annihilator: dim {} / {}",
        ann_with.dim(),
        ann_without.dim()
    );

    let tight = idealkit::is_tight(alg);
    body.insert("tight".into(), json!(tight));
    let _ = writeln!(human, "tight: {tight}");

    let ml = maxlen::is_maximal_length(alg);
    body.insert("maximal_length".into(), json!(ml));
    let _ = writeln!(human, "maximal length: {ml}");

    let (dec_body, dec_human, dec_ok) = decompose_body(alg);
    body.insert("decomposition".into(), dec_body);
    human.push_str(&dec_human);
    if !dec_ok {
        exit = EXIT_FINDING;
    }

    match oracle_json(alg, seed) {
        Ok((v, h)) => {
            body.insert("simplicity".into(), v);
            let _ = writeln!(human, "{h}");
        }
        Err(e) => {
            return Outcome {
                exit: EXIT_FINDING,
                human: e.clone(),
                json: envelope("report", &loaded, started, json!({"error": e})),
            }
        }
    }

    if ml {
        let ctx = MaxlenContext::new(alg).expect("maximal length checked above");
        let mult = ctx.support_multiplicativity();
        body.insert(
            "s_mult".into(),
            json!({
                "multiplicative": mult.holds,
                "counterexample": mult.counterexample.as_ref().map(|w| w.to_string()),
            }),
        );
        match theorem_json(&ctx, seed, (true, false)) {
            Ok((v, h, consistent)) => {
                body.insert("theorem".into(), v);
                human.push_str(&h);
                if !consistent {
                    exit = EXIT_FINDING;
                }
            }
            Err(e) => {
                return Outcome {
                    exit: EXIT_FINDING,
                    human: e.clone(),
                    json: envelope("report", &loaded, started, json!({"error": e})),
                }
            }
        }
    } else {
        body.insert("s_mult".into(), json!({"applicable": false}));
        body.insert("theorem".into(), json!({"applicable": false}));
    }

    Outcome {
        exit,
        json: envelope("report", &loaded, started, Value::Object(body)),
        human,
    }
}

pub struct GenerateArgs {
    pub family: String,
    pub field: String,
    pub k: usize,
    pub parity: u8,
    pub copies: usize,
    pub seed: u64,
    pub output: Option<PathBuf>,
    pub out_dir: Option<PathBuf>,
}

fn parse_field(s: &str) -> Result<Field, String> {
    let t = s.trim().to_lowercase();
    if t == "q" {
        return Ok(Field::Rationals);
    }
    let digits = t
        .trim_start_matches("gf")
        .trim_start_matches('(')
        .trim_end_matches(')');
    let p: u64 = digits
        .parse()
        .map_err(|_| format!("cannot parse field {s:?}"))?;
    Field::prime(p).map_err(|e| e.to_string())
}

pub fn cmd_generate(args: &GenerateArgs) -> Outcome {
    let fail = |msg: String| Outcome {
        exit: EXIT_DOMAIN,
        json: json!({"command": "generate", "error": msg}),
        human: msg.clone(),
    };
    if args.family == "corpus" {
        let Some(dir) = &args.out_dir else {
            return fail("--out-dir is required for the corpus family".into());
        };
        if let Err(e) = fs::create_dir_all(dir) {
            return fail(format!("cannot create {}: {e}", dir.display()));
        }
        let mut written = Vec::new();
        for inst in corpus::full_corpus() {
            let file = AlgebraFile::from_algebra(&inst.algebra);
            let path = dir.join(format!("{}.json", inst.name));
            if let Err(e) = fs::write(&path, file.to_json()) {
                return fail(format!("cannot write {}: {e}", path.display()));
            }
            written.push(inst.name);
        }
        let human = format!(
            "wrote {} instance files to {}",
            written.len(),
            dir.display()
        );
        return Outcome {
            exit: EXIT_OK,
            json: json!({"command": "generate", "family": "corpus", "written": written}),
            human,
        };
    }

    let field = match parse_field(&args.field) {
        Ok(f) => f,
        Err(e) => return fail(e),
    };
    let parity = match Parity::from_bit(args.parity) {
        Some(p) => p,
        None => return fail(format!("parity {} is not 0 or 1", args.parity)),
    };
    let algebra = match args.family.as_str() {
        "abelian" => {
            let cells: Vec<(String, Vec<Parity>)> = (0..args.k.max(1))
                .map(|i| {
                    (
                        format!("l{i}"),
                        vec![if i % 2 == 0 {
                            Parity::Even
                        } else {
                            Parity::Odd
                        }],
                    )
                })
                .collect();
            let borrowed: Vec<(&str, &[Parity])> = cells
                .iter()
                .map(|(l, ps)| (l.as_str(), ps.as_slice()))
                .collect();
            corpus::gen_abelian(&borrowed, field)
        }
        "n2" => corpus::gen_n2_family(args.k.max(1), field),
        "simple3" => corpus::simple_3dim(field),
        "two-step" => corpus::two_step(field),
        "so3" => corpus::so3(field),
        "so3-module" => corpus::so3_with_ad_copies(field, &vec![parity; args.copies.max(1)]),
        "sl2-module" => {
            let lie = corpus::sl2(field);
            let m = leibniz_core::corpus::ModuleSpec::adjoint(&lie, parity, "m");
            match corpus::gen_hemisemidirect(&lie, &m) {
                Ok(a) => a.with_distinguished(Some("h".into())),
                Err(e) => return fail(e.to_string()),
            }
        }
        "perturbed-n2" => {
            let base = corpus::gen_n2_family(args.k.max(1), field);
            corpus::gen_perturb(&base, 2, args.seed).0
        }
        other => return fail(format!("unknown family {other:?}")),
    };
    let text = AlgebraFile::from_algebra(&algebra).to_json();
    match &args.output {
        Some(path) => {
            if let Err(e) = fs::write(path, &text) {
                return fail(format!("cannot write {}: {e}", path.display()));
            }
            Outcome {
                exit: EXIT_OK,
                json: json!({
                    "command": "generate",
                    "family": args.family,
                    "output": path.display().to_string(),
                }),
                human: format!("wrote {}", path.display()),
            }
        }
        None => Outcome {
            exit: EXIT_OK,
            json: serde_json::from_str(&text).expect("emitted json parses"),
            human: text,
        },
    }
}
