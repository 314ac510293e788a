use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use blobtl::braids::{
    affine_image, check_affine_relations, check_reidemeister, embed_in_type_a, evaluate_word, full_twist_word,
    parse_affine, parse_word, BraidFamily, BraidGen, BraidWord, Letter, Move,
};
use blobtl::coefficients::{Coefficient, LaurentPoly, RationalFunction, Series};
use blobtl::coideal_rep::{
    commutant_dimension, eigen_decomposition, generator_operator, projector_image_check, schur_weyl_rank,
    ImageKind, RepGenerator,
};
use blobtl::convergence::{converge, twist_power};
use blobtl::diagrams::{enumerate_basis, Family};
use blobtl::group_algebra::{left_ideal_dimension, normalized_idempotent, quasi_idempotent_scalar, standard_symmetrizer};
use blobtl::jones_wenzl::{higher_projector, projector, quasi_idempotent, verify_characterization, Epsilon, Kind};
use blobtl::tl_algebra::{parse_element, TlElement};
use blobtl::weyl_group::{
    bipartitions_of, conjugacy_bipartition, conjugacy_classes, group_order, specht_dimension_hook,
    specht_dimension_paths, Bipartition, WeylType,
};
use blobtl::{Error, Result};

/// Exact computations in type B and D Temperley-Lieb algebras.
#[derive(Parser)]
#[command(name = "blobtl", version)]
struct Cli {
    /// output format
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    output: Output,
    /// seed for randomly generated inputs
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// worker threads for independent checks
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Output {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RingArg {
    Laurent,
    Ratfunc,
    Series,
}

#[derive(Subcommand)]
enum Cmd {
    /// list the diagram basis
    Basis {
        #[arg(long = "type", default_value = "B")]
        family: Family,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        count_only: bool,
    },
    /// multiply two elements, e.g. --left "1 - q^-1 U1" --right "s0 U1"
    Mul {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Jones-Wenzl projectors a, b+, b-, d
    Jw {
        #[arg(long)]
        kind: Kind,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        ring: RingOpts,
        /// also verify the characterizing properties
        #[arg(long)]
        check: bool,
    },
    /// higher projectors e_eps, e.g. --eps 1,-1,1
    Higher {
        #[arg(long, allow_hyphen_values = true)]
        eps: Epsilon,
        #[arg(long, default_value = "B")]
        family: Family,
        #[command(flatten)]
        ring: RingOpts,
        /// print the quasi-idempotent and its scalar instead
        #[arg(long)]
        quasi: bool,
    },
    /// hyperoctahedral group combinatorics
    Weyl {
        #[command(subcommand)]
        cmd: WeylCmd,
    },
    /// Young symmetrizer of a bipartition such as "2,1|1"
    Symmetrizer {
        #[arg(long)]
        bipartition: Bipartition,
        /// print the idempotent rather than the quasi-idempotent
        #[arg(long)]
        normalized: bool,
    },
    /// braid words and their images
    Braid {
        #[command(subcommand)]
        cmd: BraidCmd,
    },
    /// images of affine TL words such as "D U1 D^-1"
    Affine {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        word: Option<String>,
        /// check the affine relations instead
        #[arg(long)]
        check: bool,
    },
    /// powers of the full twist
    Twist {
        #[arg(long, default_value = "D")]
        family: BraidFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 1)]
        power: u32,
        /// truncate to a series below this exponent
        #[arg(long)]
        precision: Option<i64>,
    },
    /// q-adic distance of [delta_n]^m to d_n
    Converge {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        target: i64,
        #[arg(long, default_value_t = 8)]
        max_power: u32,
        /// defaults to four times the target
        #[arg(long)]
        precision: Option<i64>,
    },
    /// the tensor representation V^n
    Rep {
        #[command(subcommand)]
        cmd: RepCmd,
    },
}

#[derive(Args)]
struct RingOpts {
    #[arg(long, value_enum, default_value_t = RingArg::Ratfunc)]
    ring: RingArg,
    /// series precision
    #[arg(long, default_value_t = 16)]
    precision: i64,
}

#[derive(Subcommand)]
enum WeylCmd {
    Order {
        #[arg(long = "type", default_value = "B")]
        ty: WeylType,
        #[arg(long)]
        n: usize,
    },
    Classes {
        #[arg(long)]
        n: usize,
    },
    Dims {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand)]
enum BraidCmd {
    /// evaluate a word such as "s0 s1^-1 (s1 s2)^3"
    Eval {
        #[arg(long, default_value = "B")]
        family: BraidFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: Option<String>,
        /// evaluate a random word of this length instead
        #[arg(long)]
        random_length: Option<usize>,
    },
    /// check local moves; all moves and positions by default
    Reidemeister {
        #[arg(long = "move")]
        mv: Option<Move>,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        position: Option<usize>,
    },
    /// the image of a type B or D word in the type A braid group
    Embed {
        #[arg(long, default_value = "B")]
        family: BraidFamily,
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        word: String,
    },
}

#[derive(Subcommand)]
enum RepCmd {
    /// eigenvectors of B on V^n
    Eigen {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        vectors: bool,
    },
    /// rank of the TL(B_n) action and the commutant dimension
    Rank {
        #[arg(long)]
        n: usize,
    },
    /// image of a projector: b+, b-, d, e(1,-1,...)
    Project {
        #[arg(long)]
        kind: ImageKind,
        #[arg(long)]
        n: usize,
    },
    /// matrix of s0, U<i>, H<i>, B or C
    Op {
        #[arg(long)]
        gen: RepGenerator,
        #[arg(long)]
        n: usize,
    },
}

struct Report {
    json: Value,
    text: String,
}

fn report(json: Value, text: impl Into<String>) -> Result<Report> {
    Ok(Report { json, text: text.into() })
}

fn element_text<C: Coefficient>(x: &TlElement<C>) -> String {
    if x.is_zero() {
        "0".into()
    } else {
        x.to_string()
    }
}

fn with_ring(x: &TlElement<RationalFunction>, ring: &RingOpts) -> Result<Report> {
    match ring.ring {
        RingArg::Ratfunc => report(x.to_json(), element_text(x)),
        RingArg::Series => {
            let s: TlElement<Series> = x.convert(Some(ring.precision))?;
            report(s.to_json(), element_text(&s))
        }
        RingArg::Laurent => {
            let l: TlElement<LaurentPoly> = x.convert(None)?;
            report(l.to_json(), element_text(&l))
        }
    }
}

fn random_word(family: BraidFamily, n: usize, len: usize, seed: u64) -> Result<BraidWord> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut gens: Vec<Letter> = (1..n).map(Letter::sigma).collect();
    match family {
        BraidFamily::A => {}
        BraidFamily::B1 => gens.push(Letter::s0()),
        BraidFamily::D => gens.push(Letter::s0_prime(false)),
    }
    if gens.is_empty() {
        return BraidWord::new(n, family, vec![]);
    }
    let letters = (0..len)
        .map(|_| {
            let l = gens[rng.gen_range(0..gens.len())];
            if l.gen != BraidGen::S0 && rng.gen_bool(0.5) {
                l.inverted()
            } else {
                l
            }
        })
        .collect();
    BraidWord::new(n, family, letters)
}

fn run(cli: &Cli) -> Result<Report> {
    match &cli.cmd {
        Cmd::Basis { family, n, count_only } => {
            let basis = enumerate_basis(*n, *family)?;
            let ty = format!("{family:?}");
            if *count_only {
                return report(json!({"type": ty, "n": n, "count": basis.len()}), basis.len().to_string());
            }
            let text: Vec<String> = basis.iter().map(ToString::to_string).collect();
            let diagrams: Vec<Value> = basis.iter().map(|d| d.to_json()).collect();
            report(json!({"type": ty, "n": n, "count": basis.len(), "diagrams": diagrams}), text.join("\n"))
        }
        Cmd::Mul { n, left, right } => {
            let a = parse_element(left, *n)?;
            let b = parse_element(right, *n)?;
            let p = a.checked_mul(&b)?;
            report(p.to_json(), element_text(&p))
        }
        Cmd::Jw { kind, n, ring, check } => {
            let x = projector(*kind, *n)?;
            let mut r = with_ring(&x, ring)?;
            if *check {
                let c = verify_characterization(&x, *kind)?;
                r.json = json!({
                    "element": r.json,
                    "characterization": {
                        "idempotent": c.idempotent,
                        "nonzero": c.nonzero,
                        "kills_generators": c.kills_generators,
                        "s0_eigen": c.s0_eigen,
                        "in_type_d": c.in_type_d,
                        "passed": c.passed(),
                    },
                });
                r.text = format!("{}\ncharacterization: {}", r.text, if c.passed() { "pass" } else { "FAIL" });
            }
            Ok(r)
        }
        Cmd::Higher { eps, family, ring, quasi } => {
            if *quasi {
                let (t, scalar) = quasi_idempotent(eps)?;
                let mut r = with_ring(&t, ring)?;
                r.json = json!({"quasi_idempotent": r.json, "scalar": Coefficient::to_json(&scalar)});
                r.text = format!("{}\nscalar: {scalar}", r.text);
                return Ok(r);
            }
            with_ring(&higher_projector(eps, *family)?, ring)
        }
        Cmd::Weyl { cmd } => weyl(cmd),
        Cmd::Symmetrizer { bipartition, normalized } => {
            let q = standard_symmetrizer(bipartition)?;
            let scalar = quasi_idempotent_scalar(&q)?;
            let dim = left_ideal_dimension(&q)?;
            let shown = if *normalized { normalized_idempotent(bipartition)? } else { q };
            report(
                json!({
                    "bipartition": bipartition.to_json(),
                    "element": shown.to_json(),
                    "scalar": scalar.to_string(),
                    "left_ideal_dimension": dim,
                }),
                format!("{shown}\nscalar: {scalar}\nleft ideal dimension: {dim}"),
            )
        }
        Cmd::Braid { cmd } => braid(cmd, cli),
        Cmd::Affine { n, word, check } => {
            if *check {
                let rels = check_affine_relations(*n)?;
                let text: Vec<String> =
                    rels.iter().map(|(name, ok)| format!("{name}: {}", if *ok { "pass" } else { "FAIL" })).collect();
                let json: Vec<Value> = rels.iter().map(|(name, ok)| json!({"relation": name, "holds": ok})).collect();
                return report(json!({"n": n, "relations": json}), text.join("\n"));
            }
            let Some(word) = word else {
                return Err(Error::InvalidArgument("give --word or --check".into()));
            };
            let x: TlElement<LaurentPoly> = affine_image(&parse_affine(word)?, *n)?;
            report(x.to_json(), element_text(&x))
        }
        Cmd::Twist { family, n, power, precision } => {
            if let Some(p) = precision {
                let x = twist_power(*family, *n, *power, *p)?;
                return report(x.to_json(), element_text(&x));
            }
            let t: TlElement<LaurentPoly> = evaluate_word(&full_twist_word(*family, *n)?)?;
            let x = t.pow(*power)?;
            report(x.to_json(), element_text(&x))
        }
        Cmd::Converge { n, target, max_power, precision } => {
            let r = converge(*n, *target, *max_power, precision.unwrap_or(4 * target))?;
            let mut lines: Vec<String> = r.entries.iter().map(|e| format!("m={} valuation={}", e.m, e.valuation)).collect();
            lines.push(match r.achieved_at {
                Some(m) => format!("achieved_at {m}"),
                None => format!("status {:?}", r.status),
            });
            report(r.to_json(), lines.join("\n"))
        }
        Cmd::Rep { cmd } => rep(cmd),
    }
}

fn weyl(cmd: &WeylCmd) -> Result<Report> {
    match cmd {
        WeylCmd::Order { ty, n } => {
            let o = group_order(*ty, *n)?;
            report(json!({"type": format!("{ty:?}"), "n": n, "order": o.to_string()}), o.to_string())
        }
        WeylCmd::Classes { n } => {
            check_small(*n, 6)?;
            let mut classes: Vec<(Bipartition, usize)> =
                conjugacy_classes(*n).iter().map(|c| (conjugacy_bipartition(&c[0]), c.len())).collect();
            classes.sort();
            let text: Vec<String> = classes.iter().map(|(b, k)| format!("{b} {k}")).collect();
            let json: Vec<Value> = classes.iter().map(|(b, k)| json!({"bipartition": b.to_json(), "size": k})).collect();
            report(json!({"n": n, "classes": json}), text.join("\n"))
        }
        WeylCmd::Dims { n } => {
            let bps = bipartitions_of(*n);
            let mut text = Vec::new();
            let mut json = Vec::new();
            for b in &bps {
                let h = specht_dimension_hook(b);
                if *n <= 12 && specht_dimension_paths(b) != h {
                    return Err(Error::InvalidArgument(format!("dimension formulas disagree at {b}")));
                }
                text.push(format!("{b} {h}"));
                json.push(json!({"bipartition": b.to_json(), "dimension": h.to_string()}));
            }
            report(json!({"n": n, "modules": json}), text.join("\n"))
        }
    }
}

fn check_small(n: usize, cap: usize) -> Result<()> {
    if n == 0 || n > cap {
        return Err(Error::InvalidArgument(format!("n must be between 1 and {cap}")));
    }
    Ok(())
}

fn braid(cmd: &BraidCmd, cli: &Cli) -> Result<Report> {
    match cmd {
        BraidCmd::Eval { family, n, word, random_length } => {
            let w = match (word, random_length) {
                (Some(text), None) => parse_word(text, *n, *family)?,
                (None, Some(len)) => random_word(*family, *n, *len, cli.seed)?,
                _ => return Err(Error::InvalidArgument("give exactly one of --word and --random-length".into())),
            };
            let x: TlElement<LaurentPoly> = evaluate_word(&w)?;
            report(json!({"word": w.to_json(), "image": x.to_json()}), format!("{w}\n{}", element_text(&x)))
        }
        BraidCmd::Reidemeister { mv, n, position } => {
            let moves: Vec<Move> = mv.map_or_else(|| Move::ALL.to_vec(), |m| vec![m]);
            let jobs: Vec<(Move, usize)> = moves
                .iter()
                .flat_map(|&m| match position {
                    Some(i) => vec![(m, *i)],
                    None => m.positions(*n).map(|i| (m, i)).collect(),
                })
                .collect();
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(cli.jobs.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            let results: Vec<_> = pool.install(|| jobs.par_iter().map(|&(m, i)| check_reidemeister(m, *n, i)).collect());
            let mut text = Vec::new();
            let mut json = Vec::new();
            for r in results {
                let r = r?;
                text.push(format!("{} at {}: {}", r.mv, r.position, if r.holds() { "pass" } else { "FAIL" }));
                let checks: Vec<Value> =
                    r.checks.iter().map(|c| json!({"name": c.name, "holds": c.holds()})).collect();
                json.push(json!({"move": r.mv.to_string(), "position": r.position, "holds": r.holds(), "checks": checks}));
            }
            report(json!({"n": n, "results": json}), text.join("\n"))
        }
        BraidCmd::Embed { family, n, word } => {
            let w = embed_in_type_a(&parse_word(word, *n, *family)?)?;
            report(w.to_json(), w.to_string())
        }
    }
}

fn rep(cmd: &RepCmd) -> Result<Report> {
    match cmd {
        RepCmd::Eigen { n, vectors } => {
            let r = eigen_decomposition(*n)?;
            let mut text: Vec<String> = Vec::new();
            for s in &r.spaces {
                text.push(format!("[{}] multiplicity {}", s.index, s.multiplicity));
                if *vectors {
                    for (e, v) in &s.vectors {
                        text.push(format!("  {e}: {v}"));
                    }
                }
            }
            text.push(format!("independent eigenvectors: {}", r.rank));
            report(r.to_json(*vectors), text.join("\n"))
        }
        RepCmd::Rank { n } => {
            let rank = schur_weyl_rank(*n)?;
            let comm = if *n <= 4 { Some(commutant_dimension(*n)?) } else { None };
            let mut text = format!("rank {rank}");
            if let Some(c) = comm {
                text.push_str(&format!("\ncommutant dimension {c}"));
            }
            report(json!({"n": n, "rank": rank, "commutant_dimension": comm}), text)
        }
        RepCmd::Project { kind, n } => {
            let r = projector_image_check(kind, *n)?;
            let labels: Vec<String> = r.labels.iter().map(ToString::to_string).collect();
            let text = format!("rank {}\nimage {}\n{}", r.rank, labels.join(" "), if r.holds() { "pass" } else { "FAIL" });
            report(r.to_json(), text)
        }
        RepCmd::Op { gen, n } => {
            let m = generator_operator(*gen, *n)?;
            let text: Vec<String> = m
                .rows()
                .iter()
                .map(|row| row.iter().map(ToString::to_string).collect::<Vec<_>>().join("\t"))
                .collect();
            report(m.to_json(), text.join("\n"))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(r) => {
            match cli.output {
                Output::Text => println!("{}", r.text),
                Output::Json => println!("{}", serde_json::to_string_pretty(&r.json).expect("json")),
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
