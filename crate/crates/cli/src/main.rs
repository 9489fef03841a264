use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use qcenter::blocks::total_center_dimension;
use qcenter::bwb::bwb_grassmannian;
use qcenter::cache::{normalize, DiamondCache};
use qcenter::cohomology::complex_cohomology;
use qcenter::{
    bott_line_bundle, graded_piece, restricted_weight_census, BggEngine, ChevalleyBasis, Error,
    GradedPieceSpec, Partition, RootSystem, Weight,
};

mod format;

#[derive(Parser, Debug)]
#[command(name = "qcenter", version, about = "Formal Hodge diamonds and block censuses")]
struct Cli {
    /// Worker threads (default: all cores)
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Diamond cache directory (default: $QCENTER_CACHE or ~/.cache/qcenter)
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,
    /// Neither read nor write the cache
    #[arg(long, global = true)]
    no_cache: bool,
    #[arg(long, value_enum, global = true, default_value = "md")]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Md,
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Formal Hodge diamond of T*(G/P)
    Diamond {
        #[command(flatten)]
        group: GroupArgs,
        /// Simple roots of the Levi, comma separated ("" for the Borel)
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        levi: String,
        /// Print isotypic decompositions instead of dimensions
        #[arg(long)]
        per_weight: bool,
    },
    /// Blocks of restricted weights by singularity class
    Census {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        l: u64,
    },
    /// Dimension of the whole center, summed over the census
    CenterDim {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        l: u64,
        /// Fail instead of computing diamonds missing from the cache
        #[arg(long)]
        cached_only: bool,
    },
    /// Borel-Weil-Bott: a line bundle on G/B or S_q(Q) ⊗ S_s(S) on Gr(k, n)
    Bwb(BwbArgs),
    /// Singular vectors and differentials of one BGG complex, as JSON
    BggDump {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, default_value = "", allow_hyphen_values = true)]
        levi: String,
        /// Exterior degree of the graded piece
        #[arg(long)]
        j: usize,
        /// C*-degree of the graded piece (even, <= 0)
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        /// Dominant weight in fundamental-weight coordinates
        #[arg(long, allow_hyphen_values = true)]
        nu: String,
    },
}

#[derive(Args, Debug)]
struct GroupArgs {
    #[arg(long = "type")]
    kind: String,
    #[arg(long)]
    rank: usize,
}

#[derive(Args, Debug)]
struct BwbArgs {
    #[arg(long = "type")]
    kind: Option<String>,
    #[arg(long)]
    rank: Option<usize>,
    /// Line bundle weight (fundamental-weight coordinates)
    #[arg(long, allow_hyphen_values = true)]
    weight: Option<String>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    /// Highest weight on the quotient bundle (n - k parts)
    #[arg(long, allow_hyphen_values = true)]
    q: Option<String>,
    /// Highest weight on the tautological subbundle (k parts)
    #[arg(long, allow_hyphen_values = true)]
    s: Option<String>,
    /// Take the dual of the quotient-side representation
    #[arg(long)]
    dual_q: bool,
}

enum Failure {
    Usage(String),
    Engine(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Engine(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn parse_list(s: &str) -> Result<Vec<i64>, Failure> {
    s.split(',')
        .map(str::trim)
        .filter(|x| !x.is_empty())
        .map(|x| x.parse().map_err(|_| usage(format!("not an integer: {x:?}"))))
        .collect()
}

fn parse_levi(s: &str, rank: usize) -> Result<Vec<usize>, Failure> {
    let v = parse_list(s)?;
    if v.iter().any(|&x| x < 1 || x as usize > rank) {
        return Err(usage(format!("levi indices must lie in 1..={rank}")));
    }
    Ok(normalize(&v.iter().map(|&x| x as usize).collect::<Vec<_>>()))
}

fn parse_weight(s: &str, rank: usize) -> Result<Weight, Failure> {
    let v = parse_list(s)?;
    if v.len() != rank {
        return Err(usage(format!("weight needs {rank} coordinates")));
    }
    Ok(Weight::from_slice(
        &v.iter().map(|&x| x as i32).collect::<Vec<_>>(),
    ))
}

fn root_system(g: &GroupArgs) -> Result<RootSystem, Failure> {
    Ok(RootSystem::parse(&g.kind, g.rank)?)
}

fn json_string<T: serde::Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

struct Ctx {
    cache: Option<DiamondCache>,
    format: Format,
}

impl Ctx {
    fn diamond(
        &self,
        rs: &RootSystem,
        basis: &ChevalleyBasis,
        levi: &[usize],
    ) -> Result<qcenter::HodgeDiamond, Failure> {
        match &self.cache {
            None => Ok(qcenter::hodge_diamond(rs, basis, levi)?),
            Some(c) => {
                let mut warnings = Vec::new();
                let d = c.diamond(rs, basis, levi, &mut warnings)?;
                for w in warnings {
                    eprintln!("warning: {w}");
                }
                Ok(d)
            }
        }
    }
}

fn run(cli: Cli) -> Result<String, Failure> {
    let ctx = Ctx {
        cache: (!cli.no_cache)
            .then(|| DiamondCache::new(cli.cache_dir.clone().unwrap_or_else(DiamondCache::default_dir))),
        format: cli.format,
    };
    match cli.command {
        Command::Diamond {
            group,
            levi,
            per_weight,
        } => {
            let rs = root_system(&group)?;
            let levi = parse_levi(&levi, rs.rank())?;
            let basis = ChevalleyBasis::new(&rs)?;
            let d = ctx.diamond(&rs, &basis, &levi)?;
            Ok(match ctx.format {
                Format::Md => format::diamond_md(&d, per_weight),
                Format::Json => d.to_json()? + "\n",
                Format::Csv => format::diamond_csv(&d),
            })
        }
        Command::Census { group, l } => {
            let rs = root_system(&group)?;
            let c = restricted_weight_census(&rs, l)?;
            for w in &c.warnings {
                eprintln!("warning: {w}; counts are raw enumeration");
            }
            Ok(match ctx.format {
                Format::Md => format::census_md(&c),
                Format::Json => json_string(&c),
                Format::Csv => format::census_csv(&c),
            })
        }
        Command::CenterDim {
            group,
            l,
            cached_only,
        } => {
            let rs = root_system(&group)?;
            let basis = ChevalleyBasis::new(&rs)?;
            let (kind, rank) = (rs.kind(), rs.rank());
            let c = total_center_dimension(&rs, l, |levi| {
                if cached_only {
                    let rec = ctx
                        .cache
                        .as_ref()
                        .and_then(|c| c.load(kind, rank, levi).ok().flatten());
                    return match rec.filter(|r| r.is_complete()) {
                        Some(r) => Ok(r.to_diamond()?.total),
                        None => Err(Error::MissingDiamond { levi: levi.to_vec() }),
                    };
                }
                match ctx.diamond(&rs, &basis, levi) {
                    Ok(d) => Ok(d.total),
                    Err(Failure::Engine(e)) => Err(e),
                    Err(Failure::Usage(m)) => Err(Error::InvalidInput(m)),
                }
            })?;
            for w in &c.census.warnings {
                eprintln!("warning: {w}");
            }
            Ok(match ctx.format {
                Format::Md => format::center_md(&c),
                Format::Json => json_string(&c),
                Format::Csv => format::center_csv(&c),
            })
        }
        Command::Bwb(a) => bwb(a, ctx.format),
        Command::BggDump {
            group,
            levi,
            j,
            r,
            nu,
        } => {
            let rs = root_system(&group)?;
            let levi = parse_levi(&levi, rs.rank())?;
            let nu = parse_weight(&nu, rs.rank())?;
            if !nu.is_dominant() {
                return Err(usage(format!("nu = {nu} is not dominant")));
            }
            let basis = ChevalleyBasis::new(&rs)?;
            let e = graded_piece(&rs, &basis, &GradedPieceSpec::new(&levi, j, r))?;
            let engine = BggEngine::new(&rs, &basis);
            let cx = engine.assemble_full(&e, nu)?;
            let out = json!({
                "type": rs.kind().letter().to_string(),
                "rank": rs.rank(),
                "levi": levi,
                "j": j,
                "r": r,
                "module": e.dump(&rs),
                "complex": engine.dump(&e, &cx)?,
                "cohomology": complex_cohomology(&cx),
            });
            Ok(json_string(&out))
        }
    }
}

fn bwb(a: BwbArgs, fmt: Format) -> Result<String, Failure> {
    if let Some(w) = &a.weight {
        let (Some(kind), Some(rank)) = (&a.kind, a.rank) else {
            return Err(usage("--weight needs --type and --rank"));
        };
        let rs = RootSystem::parse(kind, rank)?;
        let lambda = parse_weight(w, rank)?;
        let r = bott_line_bundle(&rs, lambda);
        return Ok(match (fmt, r) {
            (Format::Json, r) => json_string(&json!({
                "weight": lambda,
                "degree": r.map(|t| t.0),
                "nu": r.map(|t| t.1),
            })),
            (Format::Csv, Some((d, nu))) => format!("weight,degree,nu\n\"{lambda}\",{d},\"{nu}\"\n"),
            (Format::Csv, None) => format!("weight,degree,nu\n\"{lambda}\",,\n"),
            (Format::Md, Some((d, nu))) => format!("H^{d} = L{nu}, all other degrees vanish\n"),
            (Format::Md, None) => format!("{lambda} + rho is singular: all cohomology vanishes\n"),
        });
    }
    let (Some(n), Some(k), Some(q), Some(s)) = (a.n, a.k, &a.q, &a.s) else {
        return Err(usage("bwb needs either --weight or all of --n --k --q --s"));
    };
    let mut q = Partition::new(parse_list(q)?)?;
    if a.dual_q {
        q = q.dual();
    }
    let s = Partition::new(parse_list(s)?)?;
    let r = bwb_grassmannian(n, k, &q, &s)?;
    Ok(match fmt {
        Format::Json => json_string(&json!({
            "n": n,
            "k": k,
            "q": q,
            "s": s,
            "shifted": r.shifted,
            "degree": r.result.as_ref().map(|t| t.0),
            "nu": r.result.as_ref().map(|t| t.1.clone()),
        })),
        Format::Csv => {
            let (d, nu) = r.result.map_or((String::new(), String::new()), |(d, nu)| {
                (d.to_string(), nu.to_string())
            });
            format!(
                "shifted,degree,nu\n\"{}\",{d},\"{nu}\"\n",
                format::join(&r.shifted)
            )
        }
        Format::Md => match r.result {
            Some((d, nu)) => format!(
                "shifted sequence ({}): H^{d} = L{nu}, all other degrees vanish\n",
                format::join(&r.shifted)
            ),
            None => format!(
                "shifted sequence ({}) has a repeated entry: all cohomology vanishes\n",
                format::join(&r.shifted)
            ),
        },
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(j) = cli.jobs {
        if j == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(1);
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .expect("thread pool is configured once");
    }
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Engine(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                Error::Consistency(_) => 2,
                Error::Cache(_) | Error::Io(_) => 3,
                Error::MissingDiamond { .. } => {
                    eprintln!("hint: run `qcenter diamond` for that levi first, or drop --cached-only");
                    1
                }
                _ => 1,
            })
        }
    }
}
