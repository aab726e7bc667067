//! Command-line front end: every library computation behind a
//! subcommand, JSON in and out, one document per invocation.
//!
//! Exit codes: 0 for a completed computation (verdicts live in the
//! JSON, never in the exit code), 2 for usage errors, 3 for malformed
//! input data.

use std::collections::HashMap;
use std::fs;

use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::checkers::{run_checker, ColorSpec, TheoremSpec};
use crate::classes;
use crate::error::Error;
use crate::geom::generate::{build_leta_family, plant_family, PlantedFamily};
use crate::geom::search::find_flat_transversal;
use crate::geom::verify::verify_theorem_on_instance;
use crate::geom::{self, ColoredFamily, Polytope, Rat};
use crate::mult;
use crate::schubert::{enumerate_basis, CohClass, GrassmannContext, Ring, SchubertSymbol};

const USAGE: &str = "usage: schelly <group> <command> [--flag value ...]

groups and commands:
  schubert mul|power|dual|basis|embed|transpose
  classes  sw|dual-sw|w1-height|cat-bound|rank-locus
  check    colorful|colorful-multi|ineq|ls|semi|semi-ineq|semi-ls|complex|linear-map
  geom     intersects|hetero|semi|point-transversal|flat-transversal|plant|leta|verify

common flags:
  --d, --m          Grassmannian parameters
  --ring Z2|Z       coefficient ring (default Z2)
  --symbol 0,1,2    Schubert symbol (weakly increasing)
  --a / --b         symbols for `schubert mul`
  --n               exponent (power) or color count (ls checks)
  --degree          basis degree
  --i               characteristic-class index
  --l --r --n-bundle  rank-locus parameters
  --rho --k         transversal class parameters
  --specs 2,1;2,1   per-color rho,k[,count] triples, ';'-separated
  --rhos 2,1        rho list for the inequality corollaries
  --eta 3,3         linear-map grid sizes
  --json-in FILE    sets/family/coords input document
  --seed --budget   generator seed, search budget
  --target-color --flat-dim   plant parameters

exit codes: 0 computed (verdict in JSON), 2 usage error, 3 bad input data";

enum CliError {
    Usage(String),
    Data(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Data(e.to_string())
    }
}

type CliResult<T> = std::result::Result<T, CliError>;

fn usage<T>(msg: impl Into<String>) -> CliResult<T> {
    Err(CliError::Usage(msg.into()))
}

struct Args {
    flags: HashMap<String, String>,
}

impl Args {
    fn parse<I: Iterator<Item = String>>(mut it: I) -> CliResult<Self> {
        let mut flags = HashMap::new();
        while let Some(arg) = it.next() {
            let Some(name) = arg.strip_prefix("--") else {
                return usage(format!("unexpected argument '{arg}'"));
            };
            let Some(value) = it.next() else {
                return usage(format!("flag --{name} needs a value"));
            };
            if flags.insert(name.to_string(), value).is_some() {
                return usage(format!("flag --{name} given twice"));
            }
        }
        Ok(Args { flags })
    }

    fn str(&self, name: &str) -> CliResult<&str> {
        self.flags
            .get(name)
            .map(String::as_str)
            .ok_or_else(|| CliError::Usage(format!("missing required flag --{name}")))
    }

    fn opt(&self, name: &str) -> Option<&str> {
        self.flags.get(name).map(String::as_str)
    }

    fn u32(&self, name: &str) -> CliResult<u32> {
        self.str(name)?
            .parse()
            .map_err(|_| CliError::Usage(format!("--{name} expects a non-negative integer")))
    }

    fn i64(&self, name: &str) -> CliResult<i64> {
        self.str(name)?
            .parse()
            .map_err(|_| CliError::Usage(format!("--{name} expects an integer")))
    }

    fn u64_or(&self, name: &str, default: u64) -> CliResult<u64> {
        match self.opt(name) {
            None => Ok(default),
            Some(s) => s
                .parse()
                .map_err(|_| CliError::Usage(format!("--{name} expects a non-negative integer"))),
        }
    }

    fn usize(&self, name: &str) -> CliResult<usize> {
        self.str(name)?
            .parse()
            .map_err(|_| CliError::Usage(format!("--{name} expects a non-negative integer")))
    }

    fn ring(&self) -> CliResult<Ring> {
        match self.opt("ring") {
            None | Some("Z2") => Ok(Ring::Z2),
            Some("Z") => Ok(Ring::Z),
            Some(other) => usage(format!("--ring must be Z2 or Z, got '{other}'")),
        }
    }

    fn symbol(&self, name: &str) -> CliResult<SchubertSymbol> {
        let entries = parse_u32_list(self.str(name)?, name)?;
        SchubertSymbol::new(entries).map_err(CliError::from)
    }

    fn u32_list(&self, name: &str) -> CliResult<Vec<u32>> {
        parse_u32_list(self.str(name)?, name)
    }

    fn specs(&self) -> CliResult<Vec<ColorSpec>> {
        let raw = self.str("specs")?;
        raw.split(';')
            .map(|part| {
                let nums = parse_u32_list(part, "specs")?;
                match nums.as_slice() {
                    [rho, k] => Ok(ColorSpec::new(*rho, *k)),
                    [rho, k, count] => Ok(ColorSpec::with_count(*rho, *k, *count)),
                    _ => usage("each spec is rho,k or rho,k,count"),
                }
            })
            .collect()
    }

    fn json_file<T: serde::de::DeserializeOwned>(&self) -> CliResult<T> {
        let path = self.str("json-in")?;
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Data(format!("cannot read {path}: {e}")))?;
        serde_json::from_str(&text).map_err(|e| CliError::Data(format!("{path}: {e}")))
    }
}

fn parse_u32_list(s: &str, name: &str) -> CliResult<Vec<u32>> {
    s.split(',')
        .map(|part| {
            part.trim()
                .parse()
                .map_err(|_| CliError::Usage(format!("--{name}: '{part}' is not an integer")))
        })
        .collect()
}

/// Set list document for the geometry commands.
#[derive(Serialize, Deserialize)]
struct SetList {
    d: usize,
    sets: Vec<Polytope>,
}

impl SetList {
    fn validated(self) -> CliResult<Vec<Polytope>> {
        for p in &self.sets {
            if p.dim() != self.d {
                return Err(CliError::Data(format!(
                    "set of dimension {} in a d={} document",
                    p.dim(),
                    self.d
                )));
            }
        }
        if self.sets.is_empty() {
            return Err(CliError::Data("empty set list".into()));
        }
        Ok(self.sets)
    }
}

/// Coordinate table for `geom leta`.
#[derive(Serialize, Deserialize)]
struct CoordTable {
    d: usize,
    coords: Vec<Vec<String>>,
}

/// Family documents are accepted bare or wrapped in `geom plant` output.
#[derive(Deserialize)]
#[serde(untagged)]
enum FamilyDoc {
    Bare(ColoredFamily),
    Planted { family: ColoredFamily },
}

fn load_family(args: &Args) -> CliResult<ColoredFamily> {
    Ok(match args.json_file::<FamilyDoc>()? {
        FamilyDoc::Bare(f) => f,
        FamilyDoc::Planted { family } => family,
    })
}

fn ctx_from(args: &Args) -> CliResult<GrassmannContext> {
    Ok(GrassmannContext::new(
        args.u32("d")?,
        args.u32("m")?,
        args.ring()?,
    )?)
}

fn theorem_spec(cmd: &str, args: &Args) -> CliResult<TheoremSpec> {
    let spec = match cmd {
        "colorful" => TheoremSpec::ColorfulTrans {
            d: args.u32("d")?,
            m: args.u32("m")?,
            rho: args.u32("rho")?,
            k: args.u32("k")?,
        },
        "colorful-multi" => TheoremSpec::ColorfulTransMulti {
            d: args.u32("d")?,
            m: args.u32("m")?,
            specs: args.specs()?,
        },
        "ineq" => TheoremSpec::IneqCorollary {
            d: args.u32("d")?,
            k: args.u32("k")?,
            rhos: args.u32_list("rhos")?,
        },
        "ls" => TheoremSpec::LsTrans {
            n: args.i64("n")?,
            rho: args.i64("rho")?,
        },
        "semi" => TheoremSpec::SemiTrans {
            d: args.u32("d")?,
            m: args.u32("m")?,
            specs: args.specs()?,
        },
        "semi-ineq" => TheoremSpec::SemiIneq {
            d: args.u32("d")?,
            k: args.u32("k")?,
            rhos: args.u32_list("rhos")?,
        },
        "semi-ls" => TheoremSpec::SemiLs {
            n: args.i64("n")?,
            rho: args.i64("rho")?,
        },
        "complex" => TheoremSpec::ComplexTrans {
            d: args.u32("d")?,
            m: args.u32("m")?,
            specs: args.specs()?,
        },
        "linear-map" => TheoremSpec::LinearMap {
            eta: args.u32_list("eta")?,
            d: args.u32("d")?,
        },
        other => return usage(format!("unknown check '{other}'")),
    };
    Ok(spec)
}

fn schubert_cmd(cmd: &str, args: &Args) -> CliResult<serde_json::Value> {
    match cmd {
        "mul" => {
            let ctx = ctx_from(args)?;
            let a = args.symbol("a")?;
            let b = args.symbol("b")?;
            let product = mult::lr_product(&a, &b, &ctx)?;
            Ok(serde_json::to_value(product).expect("class serializes"))
        }
        "power" => {
            let ctx = ctx_from(args)?;
            let sym = args.symbol("symbol")?;
            let cls = CohClass::from_symbol(ctx, &sym)?;
            let result = mult::power(&cls, args.u32("n")?)?;
            Ok(serde_json::to_value(result).expect("class serializes"))
        }
        "dual" => {
            let ctx = ctx_from(args)?;
            let sym = args.symbol("symbol")?;
            let dual = sym.poincare_dual(&ctx)?;
            Ok(json!({"d": ctx.d(), "m": ctx.m(), "symbol": dual}))
        }
        "basis" => {
            let ctx = ctx_from(args)?;
            let degree = args.u32("degree")?;
            let basis = enumerate_basis(&ctx, degree);
            Ok(json!({"d": ctx.d(), "m": ctx.m(), "degree": degree, "symbols": basis}))
        }
        "embed" => {
            let ctx = ctx_from(args)?;
            let sym = args.symbol("symbol")?;
            let (embedded, ectx) = sym.affine_embed(&ctx)?;
            Ok(json!({"d": ectx.d(), "m": ectx.m(), "symbol": embedded}))
        }
        "transpose" => {
            let ctx = ctx_from(args)?;
            let sym = args.symbol("symbol")?;
            let (transposed, tctx) = sym.transpose(&ctx)?;
            Ok(json!({"d": tctx.d(), "m": tctx.m(), "symbol": transposed}))
        }
        other => usage(format!("unknown schubert command '{other}'")),
    }
}

fn classes_cmd(cmd: &str, args: &Args) -> CliResult<serde_json::Value> {
    match cmd {
        "sw" => {
            let ctx = ctx_from(args)?;
            let cls = classes::stiefel_whitney(&ctx, args.u32("i")?)?;
            Ok(serde_json::to_value(cls).expect("class serializes"))
        }
        "dual-sw" => {
            let ctx = ctx_from(args)?;
            let cls = classes::dual_stiefel_whitney(&ctx, args.u32("i")?)?;
            Ok(serde_json::to_value(cls).expect("class serializes"))
        }
        "w1-height" => {
            let report = classes::w1_height_closed_form(args.u32("d")?, args.u32("m")?)?;
            Ok(serde_json::to_value(report).expect("report serializes"))
        }
        "cat-bound" => {
            let ctx = ctx_from(args)?;
            let report = classes::ls_category_report(&ctx);
            Ok(serde_json::to_value(report).expect("report serializes"))
        }
        "rank-locus" => {
            let ctx = ctx_from(args)?;
            let rl = classes::rank_locus_class(
                &ctx,
                args.u32("l")?,
                args.u32("r")?,
                args.u32("n-bundle")?,
            )?;
            Ok(json!({"class": rl.class, "in_box": rl.in_box}))
        }
        other => usage(format!("unknown classes command '{other}'")),
    }
}

fn geom_cmd(cmd: &str, args: &Args) -> CliResult<serde_json::Value> {
    match cmd {
        "intersects" => {
            let sets = args.json_file::<SetList>()?.validated()?;
            Ok(json!({"intersects": geom::intersects(&sets)?}))
        }
        "hetero" => {
            let fam = load_family(args)?;
            Ok(json!({"heterochromatic": geom::check_heterochromatic(&fam)?}))
        }
        "semi" => {
            let sets = args.json_file::<SetList>()?.validated()?;
            Ok(json!({"semintersecting": geom::check_semintersecting(&sets)?}))
        }
        "point-transversal" => {
            let sets = args.json_file::<SetList>()?.validated()?;
            match geom::find_point_transversal(&sets)? {
                Some(point) => Ok(json!({
                    "found": true,
                    "point": point.iter().map(Rat::to_string).collect::<Vec<_>>(),
                })),
                None => Ok(json!({"found": false})),
            }
        }
        "flat-transversal" => {
            let sets = args.json_file::<SetList>()?.validated()?;
            let rho = args.usize("rho")?;
            let budget = args.u64_or("budget", 20_000)?;
            match find_flat_transversal(&sets, rho, budget)? {
                Some(flat) => Ok(json!({"found": true, "flat": flat})),
                None => Ok(json!({"found": false})),
            }
        }
        "plant" => {
            let planted: PlantedFamily = plant_family(
                args.usize("d")?,
                args.usize("target-color")?,
                args.usize("flat-dim")?,
                &args.specs()?,
                args.u64_or("seed", 0)?,
            )?;
            Ok(json!({
                "family": planted.family,
                "planted": planted.planted,
                "target_color": planted.target_color,
            }))
        }
        "leta" => {
            let eta = args.u32_list("eta")?;
            let table: CoordTable = args.json_file()?;
            let coords: Vec<Vec<Rat>> = table
                .coords
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|s| geom::rat_from_str(s))
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()
                .map_err(CliError::from)?;
            let fam = build_leta_family(table.d, &eta, &coords)?;
            Ok(serde_json::to_value(fam).expect("family serializes"))
        }
        "verify" => {
            let fam = load_family(args)?;
            let name = args.str("theorem")?;
            let spec = theorem_spec(name, args)?;
            let budget = args.u64_or("budget", 20_000)?;
            let report = verify_theorem_on_instance(&fam, &spec, budget)?;
            Ok(serde_json::to_value(report).expect("report serializes"))
        }
        other => usage(format!("unknown geom command '{other}'")),
    }
}

fn execute(argv: &[String]) -> CliResult<serde_json::Value> {
    let Some(group) = argv.first() else {
        return usage("no command given");
    };
    if group == "help" || group == "--help" {
        return usage("");
    }
    let Some(cmd) = argv.get(1) else {
        return usage(format!("'{group}' needs a command"));
    };
    let args = Args::parse(argv[2..].iter().cloned())?;
    match group.as_str() {
        "schubert" => schubert_cmd(cmd, &args),
        "classes" => classes_cmd(cmd, &args),
        "check" => {
            let spec = theorem_spec(cmd, &args)?;
            let report = run_checker(&spec)?;
            Ok(serde_json::to_value(report).expect("report serializes"))
        }
        "geom" => geom_cmd(cmd, &args),
        other => usage(format!("unknown command group '{other}'")),
    }
}

/// Entry point for the `schelly` binary; returns the process exit code.
pub fn run<I: Iterator<Item = String>>(args: I) -> i32 {
    let argv: Vec<String> = args.collect();
    let wants_help = argv.first().is_some_and(|a| a == "help" || a == "--help");
    match execute(&argv) {
        Ok(value) => {
            println!("{}", serde_json::to_string(&value).expect("valid JSON"));
            0
        }
        Err(CliError::Usage(msg)) => {
            if !msg.is_empty() {
                eprintln!("error: {msg}");
            }
            eprintln!("{USAGE}");
            if wants_help {
                0
            } else {
                2
            }
        }
        Err(CliError::Data(msg)) => {
            eprintln!("error: {msg}");
            3
        }
    }
}
