//! Command-line harness: a thin dispatcher over the library. Subcommands
//! mirror the library capabilities one to one; all heavy lifting lives in
//! the modules.
//!
//! Exit codes: 0 success, 1 a verification found a violation, 2 usage or
//! input error. In `--json` mode output carries `"schema": 1` and is byte
//! identical for identical configuration and seed.

use crate::geometry::{self, classical_projection};
use crate::plucker::{gram_h2, gram_h6, gram_positive_test, witt_index, Subspace};
use crate::spin::{orbit, standard_generators, Generator};
use crate::suites::{Backend, RunConfig, Suite};
use crate::veronese::{classify, collinear_strong_family, strong_fixture, ProjPoint};
use crate::wire::{
    self, generator_from_wire, gscalar_to_wire, herm3_from_wire, herm3_to_wire, WireGenerator,
    WireHerm3,
};
use serde_json::json;

const USAGE: &str = "\
usage: albert <command> [flags]

commands:
  verify        run verification suites
                  --suite <composition|jordan|veronese|liegroups|plucker|geometry|all>
                  --samples <n>  --seed <n>  --backend <exact|float>  --fast  --json
  classify      classify an element read from a JSON file
                  <file>  --json
  orbit         enumerate a projective orbit under group generators
                  --seed-point <file|fixture>  --generators <file|standard>
                  --depth <n>  --cap <n>  --json
  witt          Witt index of a built-in form
                  --form <h6|h2|positive>  --json
  project       exact projections in the classical quadrangle
                  --seed <n>  --count <n>  --json
  export-graph  export an incidence sample
                  --geometry <w2|fano|grid|classical|e6>  --format <dot|json>
                  --seed <n>  --depth <n>  --count <n>
";

struct Flags {
    positional: Vec<String>,
    options: Vec<(String, String)>,
    switches: Vec<String>,
}

fn parse_flags(args: &[String], switch_names: &[&str]) -> Result<Flags, String> {
    let mut flags = Flags {
        positional: Vec::new(),
        options: Vec::new(),
        switches: Vec::new(),
    };
    let mut iter = args.iter().peekable();
    while let Some(arg) = iter.next() {
        if let Some(name) = arg.strip_prefix("--") {
            if switch_names.contains(&name) {
                flags.switches.push(name.to_string());
            } else {
                let value = iter
                    .next()
                    .ok_or_else(|| format!("flag --{name} needs a value"))?;
                flags.options.push((name.to_string(), value.clone()));
            }
        } else {
            flags.positional.push(arg.clone());
        }
    }
    Ok(flags)
}

impl Flags {
    fn get(&self, name: &str) -> Option<&str> {
        self.options
            .iter()
            .rev()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }

    fn get_u64(&self, name: &str, default: u64) -> Result<u64, String> {
        match self.get(name) {
            None => Ok(default),
            Some(v) => v.parse().map_err(|_| format!("--{name} needs an integer")),
        }
    }

    fn has(&self, name: &str) -> bool {
        self.switches.iter().any(|s| s == name)
    }
}

pub fn run(args: &[String]) -> i32 {
    match dispatch(args) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            eprintln!("{USAGE}");
            2
        }
    }
}

fn dispatch(args: &[String]) -> Result<i32, String> {
    let Some(command) = args.first() else {
        return Err("no command given".to_string());
    };
    let rest = &args[1..];
    match command.as_str() {
        "verify" => cmd_verify(rest),
        "classify" => cmd_classify(rest),
        "orbit" => cmd_orbit(rest),
        "witt" => cmd_witt(rest),
        "project" => cmd_project(rest),
        "export-graph" => cmd_export_graph(rest),
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            Ok(0)
        }
        other => Err(format!("unknown command {other:?}")),
    }
}

fn cmd_verify(args: &[String]) -> Result<i32, String> {
    let flags = parse_flags(args, &["json", "fast", "inject-table-fault"])?;
    if !flags.positional.is_empty() {
        return Err(format!("unexpected argument {:?}", flags.positional[0]));
    }
    let suites = match flags.get("suite") {
        None => Suite::ALL.to_vec(),
        Some(name) => Suite::parse(name).ok_or_else(|| format!("unknown suite {name:?}"))?,
    };
    let backend = match flags.get("backend").unwrap_or("exact") {
        "exact" => Backend::Exact,
        "float" => Backend::Float,
        other => return Err(format!("unknown backend {other:?}")),
    };
    let cfg = RunConfig {
        suites,
        samples: flags.get_u64("samples", 500)? as usize,
        seed: flags.get_u64("seed", 7)?,
        backend,
        fast: flags.has("fast"),
        inject_table_fault: flags.has("inject-table-fault"),
    };
    let report = crate::suites::run(&cfg);
    if flags.has("json") {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.render_text());
    }
    Ok(if report.pass() { 0 } else { 1 })
}

fn cmd_classify(args: &[String]) -> Result<i32, String> {
    let flags = parse_flags(args, &["json"])?;
    let [file] = flags.positional.as_slice() else {
        return Err("classify needs exactly one input file".to_string());
    };
    let text = std::fs::read_to_string(file).map_err(|e| format!("cannot read {file}: {e}"))?;
    let wire_point: WireHerm3 =
        serde_json::from_str(&text).map_err(|e| format!("cannot parse {file}: {e}"))?;
    let point = herm3_from_wire(&wire_point).map_err(|e| e.to_string())?;
    let classification = classify(&point).map_err(|e| format!("{e}"))?;
    let failed = classification.failed_equation.map(|eq| {
        json!({
            "family": eq.family,
            "triple": eq.triple,
            "basis_t": eq.basis_t,
        })
    });
    if flags.has("json") {
        println!(
            "{}",
            json!({
                "schema": wire::SCHEMA_VERSION,
                "point": herm3_to_wire(&point),
                "veronese": classification.veronese,
                "weak": classification.weak,
                "strong": classification.strong_defining,
                "strong_appendix": classification.strong_appendix,
                "agreement": classification.agreement(),
                "failed_equation": failed,
            })
        );
    } else {
        println!("point: {point}");
        println!("veronese: {}", classification.veronese);
        match classification.weak {
            Some(w) => println!("weakly isotropic: {w}"),
            None => println!("weakly isotropic: n/a (not a Veronese vector)"),
        }
        match classification.strong_defining {
            Some(s) => println!("strongly isotropic: {s}"),
            None => println!("strongly isotropic: n/a"),
        }
        println!("procedures agree: {}", classification.agreement());
        if let Some(eq) = classification.failed_equation {
            println!("violated equation: {eq}");
        }
    }
    Ok(0)
}

fn load_seed_point(source: &str) -> Result<ProjPoint, String> {
    if source == "fixture" {
        return Ok(strong_fixture());
    }
    let text =
        std::fs::read_to_string(source).map_err(|e| format!("cannot read {source}: {e}"))?;
    let wire_point: WireHerm3 =
        serde_json::from_str(&text).map_err(|e| format!("cannot parse {source}: {e}"))?;
    let point = herm3_from_wire(&wire_point).map_err(|e| e.to_string())?;
    ProjPoint::new(point).map_err(|e| e.to_string())
}

fn load_generators(source: &str) -> Result<Vec<Generator>, String> {
    if source == "standard" {
        return Ok(standard_generators());
    }
    let text =
        std::fs::read_to_string(source).map_err(|e| format!("cannot read {source}: {e}"))?;
    let wire_gens: Vec<WireGenerator> =
        serde_json::from_str(&text).map_err(|e| format!("cannot parse {source}: {e}"))?;
    wire_gens
        .iter()
        .map(|w| generator_from_wire(w).map_err(|e| e.to_string()))
        .collect()
}

fn cmd_orbit(args: &[String]) -> Result<i32, String> {
    let flags = parse_flags(args, &["json"])?;
    let seed_point = load_seed_point(flags.get("seed-point").unwrap_or("fixture"))?;
    let gens = load_generators(flags.get("generators").unwrap_or("standard"))?;
    let depth = flags.get_u64("depth", 2)? as usize;
    let cap = flags.get_u64("cap", 100)? as usize;
    let mut points = orbit(&seed_point, &gens, depth);
    points.truncate(cap);
    if flags.has("json") {
        println!(
            "{}",
            json!({
                "schema": wire::SCHEMA_VERSION,
                "depth": depth,
                "count": points.len(),
                "points": points.iter().map(|p| herm3_to_wire(p.rep())).collect::<Vec<_>>(),
            })
        );
    } else {
        println!("orbit of {} points at depth {depth}", points.len());
        for p in &points {
            println!("  {p}");
        }
    }
    Ok(0)
}

fn cmd_witt(args: &[String]) -> Result<i32, String> {
    let flags = parse_flags(args, &["json"])?;
    let form = flags.get("form").unwrap_or("h6");
    let (gram, label) = match form {
        "h6" => (gram_h6(), "h6"),
        "h2" => (gram_h2(), "h2"),
        "positive" => (gram_positive_test(6), "positive"),
        other => return Err(format!("unknown form {other:?}")),
    };
    let w = witt_index(&gram);
    if flags.has("json") {
        println!(
            "{}",
            json!({"schema": wire::SCHEMA_VERSION, "form": label, "witt": w})
        );
    } else {
        println!("{w}");
    }
    Ok(0)
}

fn subspace_to_wire(s: &Subspace) -> Vec<Vec<[String; 2]>> {
    s.basis()
        .iter()
        .map(|v| v.0.iter().map(gscalar_to_wire).collect())
        .collect()
}

fn cmd_project(args: &[String]) -> Result<i32, String> {
    let flags = parse_flags(args, &["json"])?;
    let seed = flags.get_u64("seed", 7)?;
    let count = flags.get_u64("count", 20)? as usize;
    let sample = geometry::build_classical_sample(24, seed);
    let mut results = Vec::new();
    let mut failures = 0usize;
    'outer: for p in &sample.points {
        for m in &sample.lines {
            if results.len() >= count {
                break 'outer;
            }
            if m.contains(&p.basis()[0]) {
                continue;
            }
            match classical_projection(p, m) {
                Ok((q, l)) => results.push((p.clone(), m.clone(), q, l)),
                Err(e) => {
                    eprintln!("projection violation: {e}");
                    failures += 1;
                }
            }
        }
    }
    if flags.has("json") {
        println!(
            "{}",
            json!({
                "schema": wire::SCHEMA_VERSION,
                "seed": seed,
                "count": results.len(),
                "projections": results.iter().map(|(p, m, q, l)| json!({
                    "point": subspace_to_wire(p),
                    "line": subspace_to_wire(m),
                    "q": subspace_to_wire(q),
                    "l": subspace_to_wire(l),
                })).collect::<Vec<_>>(),
            })
        );
    } else {
        println!(
            "computed {} unique projections from non-incident point-line pairs",
            results.len()
        );
    }
    Ok(if failures == 0 { 0 } else { 1 })
}

fn cmd_export_graph(args: &[String]) -> Result<i32, String> {
    let flags = parse_flags(args, &[])?;
    let which = flags.get("geometry").unwrap_or("w2");
    let seed = flags.get_u64("seed", 7)?;
    let depth = flags.get_u64("depth", 2)? as usize;
    let count = flags.get_u64("count", 24)? as usize;
    let sample = match which {
        "w2" => geometry::w2_fixture(),
        "fano" => geometry::fano_fixture(),
        "grid" => geometry::grid3_fixture(),
        "classical" => geometry::build_classical_sample(count, seed).sample,
        "e6" => {
            let seeds = collinear_strong_family();
            let gens = standard_generators();
            geometry::build_e6_sample(&seeds, &gens[..4], depth, count.max(8)).sample
        }
        other => return Err(format!("unknown geometry {other:?}")),
    };
    match flags.get("format").unwrap_or("dot") {
        "dot" => print!("{}", geometry::export_dot(&sample)),
        "json" => println!("{}", geometry::export_json(&sample)),
        other => return Err(format!("unknown format {other:?}")),
    }
    Ok(0)
}
