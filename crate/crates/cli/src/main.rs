//! `resilience`: thick and cohesive invariants of simplicial complexes from the
//! command line.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use simplicial_resilience::attack::{
    attack_random, attack_targeted, attack_tower, cohesive_sixpack, thick_bigrid, thick_sixpack,
    Cofiltration, SixPack, SixPackMode, TargetScore,
};
use simplicial_resilience::cochain::betti;
use simplicial_resilience::complex::StrataSet;
use simplicial_resilience::invariants::{cohesive_report, thick_profile};
use simplicial_resilience::io::{
    barcode_text, barcodes_svg, canonical_json, parse_cofiltration, parse_facets, BarcodeReport,
    CofiltrationFile,
};
use simplicial_resilience::persistence::{barcode, hilbert_function, Line};
use simplicial_resilience::{Error, ErrorClass, PrimeField, Result};

#[derive(Parser, Debug)]
#[command(
    name = "resilience",
    version,
    about = "Thick and cohesive Betti numbers, barcodes and attack six-packs"
)]
struct Cli {
    /// Output encoding.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    /// Write the result here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    /// Worker threads for grid and ladder evaluation (results do not depend on it).
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Text,
    Json,
    Svg,
}

#[derive(Args, Debug)]
struct FieldArg {
    /// Prime modulus of the coefficient field.
    #[arg(long, default_value_t = 2)]
    field: u32,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Betti numbers of a facet file.
    Betti {
        facets: PathBuf,
        #[command(flatten)]
        field: FieldArg,
        /// Highest degree reported.
        #[arg(long)]
        max_dim: Option<usize>,
    },
    /// Thick Betti numbers and coskeletal barcodes.
    Thick {
        facets: PathBuf,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Cohesive Betti numbers and the comparison map for a strata set.
    Cohesive {
        facets: PathBuf,
        /// Comma-separated ascending dimensions, e.g. 0,2.
        #[arg(long)]
        strata: String,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Barcode of the cohomology of a cofiltration along attack time.
    Barcode {
        cofiltration: PathBuf,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Bottom, top, image, kernel and cokernel barcodes of a ladder.
    Sixpack {
        cofiltration: PathBuf,
        #[arg(long)]
        degree: usize,
        /// Coskeleton index of the top row.
        #[arg(long, conflicts_with = "strata", required_unless_present = "strata")]
        thick: Option<usize>,
        /// Strata of the top row, e.g. 0,2.
        #[arg(long)]
        strata: Option<String>,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Attack x thickness grid: Hilbert function and line barcodes.
    Bigrid {
        cofiltration: PathBuf,
        #[arg(long)]
        degree: usize,
        #[command(flatten)]
        field: FieldArg,
    },
    /// Simulate an attack and print the resulting cofiltration file.
    Attack {
        facets: PathBuf,
        #[arg(long)]
        steps: usize,
        /// Seed of a uniformly random attack.
        #[arg(
            long,
            conflicts_with = "targeted",
            required_unless_present = "targeted"
        )]
        seed: Option<u64>,
        /// Greedy attack score.
        #[arg(long, value_parser = ["max_dim", "max_cofaces"])]
        targeted: Option<String>,
        /// Restrict random removals to these dimensions, e.g. 1,2.
        #[arg(long)]
        target_dims: Option<String>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match execute(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e.class() {
                ErrorClass::Usage => 1,
                ErrorClass::Input => 2,
                ErrorClass::Internal => 3,
            })
        }
    }
}

fn execute(cli: &Cli) -> Result<()> {
    if cli.threads == 0 {
        return Err(Error::InvalidArgument(
            "--threads must be at least 1".into(),
        ));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| {
            Error::InvalidArgument(format!("cannot start {} threads: {e}", cli.threads))
        })?;
    let out = pool.install(|| render(&cli.command, cli.format))?;
    match &cli.output {
        Some(path) => {
            std::fs::write(path, out).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{out}");
            Ok(())
        }
    }
}

fn field(arg: &FieldArg) -> Result<PrimeField> {
    PrimeField::new(arg.field)
}

fn no_svg(format: OutFormat, what: &str) -> Result<()> {
    if format == OutFormat::Svg {
        return Err(Error::InvalidArgument(format!(
            "{what} has no SVG rendering; use text or json"
        )));
    }
    Ok(())
}

fn render(command: &Command, format: OutFormat) -> Result<String> {
    match command {
        Command::Betti {
            facets,
            field: f,
            max_dim,
        } => {
            no_svg(format, "betti")?;
            let p = field(f)?;
            let x = parse_facets(facets)?;
            let top = x.dim().max(0) as usize;
            let top = max_dim.map_or(top, |m| m.min(top));
            let values: Vec<usize> = (0..=top).map(|n| betti(&x, n, p)).collect();
            Ok(match format {
                OutFormat::Json => {
                    canonical_json(&json!({ "field": p.modulus(), "betti": values }))?
                }
                _ => {
                    let mut s = format!("# field={}\n", p.modulus());
                    for (n, b) in values.iter().enumerate() {
                        let _ = writeln!(s, "beta^{n} = {b}");
                    }
                    s
                }
            })
        }
        Command::Thick { facets, field: f } => {
            let p = field(f)?;
            let x = parse_facets(facets)?;
            let profile = thick_profile(&x, p)?;
            let reports: Vec<BarcodeReport> = profile
                .barcodes
                .iter()
                .enumerate()
                .map(|(n, c)| BarcodeReport::new(c, p, n, "thick", None))
                .collect();
            Ok(match format {
                OutFormat::Json => canonical_json(
                    &json!({ "field": p.modulus(), "betti": profile.betti, "barcodes": reports }),
                )?,
                OutFormat::Svg => {
                    let panels: Vec<_> = reports
                        .iter()
                        .map(|r| (format!("coskeletal H^{}", r.degree), r))
                        .collect();
                    barcodes_svg(&panels)
                }
                OutFormat::Text => {
                    let mut s = format!(
                        "# field={}\nthick beta^{{n,h}} (rows n, columns h)\n",
                        p.modulus()
                    );
                    let width = profile.betti.first().map_or(0, Vec::len);
                    let head: Vec<String> = (0..width).map(|h| format!("{h:>4}")).collect();
                    let _ = writeln!(s, "n\\h{}", head.concat());
                    for (n, row) in profile.betti.iter().enumerate() {
                        let cells: Vec<String> = row.iter().map(|b| format!("{b:>4}")).collect();
                        let _ = writeln!(s, "{n:<3}{}", cells.concat());
                    }
                    for r in &reports {
                        let _ = writeln!(s, "\n{}\n{}", r.header(), barcode_text(r));
                    }
                    s
                }
            })
        }
        Command::Cohesive {
            facets,
            strata,
            field: f,
        } => {
            no_svg(format, "cohesive")?;
            let p = field(f)?;
            let strata = StrataSet::parse(strata)?;
            let x = parse_facets(facets)?;
            let report = cohesive_report(&x, &strata, p)?;
            let degrees: Vec<Value> = report
                .degrees
                .iter()
                .map(|d| {
                    json!({
                        "degree": d.degree, "betti": d.betti, "cohesive": d.cohesive,
                        "image": d.image, "kernel": d.kernel, "cokernel": d.cokernel,
                    })
                })
                .collect();
            Ok(match format {
                OutFormat::Json => canonical_json(&json!({
                    "field": p.modulus(), "strata": strata.dims(), "degrees": degrees,
                }))?,
                _ => {
                    let mut s = format!("# field={} strata={strata}\n", p.modulus());
                    for d in &report.degrees {
                        let _ = writeln!(
                            s,
                            "n={} beta={} cohesive={} img={} ker={} coker={}",
                            d.degree, d.betti, d.cohesive, d.image, d.kernel, d.cokernel
                        );
                    }
                    s
                }
            })
        }
        Command::Barcode {
            cofiltration,
            degree,
            field: f,
        } => {
            let p = field(f)?;
            let c = parse_cofiltration(cofiltration)?;
            let t = attack_tower(&c, *degree, p)?;
            let r = BarcodeReport::new(&barcode(&t)?, p, *degree, "attack", c.seed());
            match format {
                OutFormat::Json => canonical_json(&r),
                _ => emit_panels(&[("attack".into(), r)], format, None),
            }
        }
        Command::Sixpack {
            cofiltration,
            degree,
            thick,
            strata,
            field: f,
        } => {
            let p = field(f)?;
            let c = parse_cofiltration(cofiltration)?;
            let pack = match (thick, strata) {
                (Some(h), _) => thick_sixpack(&c, *degree, *h, p)?,
                (None, Some(s)) => cohesive_sixpack(&c, *degree, &StrataSet::parse(s)?, p)?,
                (None, None) => {
                    return Err(Error::InvalidArgument("need --thick or --strata".into()))
                }
            };
            emit_panels(&sixpack_panels(&pack, p, &c), format, None)
        }
        Command::Bigrid {
            cofiltration,
            degree,
            field: f,
        } => {
            let p = field(f)?;
            let c = parse_cofiltration(cofiltration)?;
            let g = thick_bigrid(&c, *degree, p)?;
            let hilbert = hilbert_function(&g);
            let mut panels = Vec::new();
            for h in 0..g.height() {
                let code = barcode(&g.line_restriction(Line::Horizontal(h))?)?;
                panels.push((
                    format!("row h={h}"),
                    BarcodeReport::new(&code, p, *degree, format!("attack h={h}"), c.seed()),
                ));
            }
            for i in 0..g.width() {
                let code = barcode(&g.line_restriction(Line::Vertical(i))?)?;
                panels.push((
                    format!("column i={i}"),
                    BarcodeReport::new(&code, p, *degree, format!("thick i={i}"), c.seed()),
                ));
            }
            emit_panels(&panels, format, Some(&hilbert))
        }
        Command::Attack {
            facets,
            steps,
            seed,
            targeted,
            target_dims,
        } => {
            no_svg(format, "attack")?;
            let x = parse_facets(facets)?;
            let c = match (seed, targeted) {
                (Some(s), _) => {
                    let dims = target_dims.as_deref().map(StrataSet::parse).transpose()?;
                    attack_random(&x, *steps, *s, dims.as_ref().map(StrataSet::dims))?
                }
                (None, Some(score)) => attack_targeted(&x, *steps, score.parse::<TargetScore>()?)?,
                (None, None) => {
                    return Err(Error::InvalidArgument("need --seed or --targeted".into()))
                }
            };
            canonical_json(&CofiltrationFile::from_cofiltration(&c))
        }
    }
}

fn sixpack_panels(pack: &SixPack, p: PrimeField, c: &Cofiltration) -> Vec<(String, BarcodeReport)> {
    let mode = match &pack.mode {
        SixPackMode::Thick(h) => format!("thick h={h}"),
        SixPackMode::Cohesive(s) => format!("cohesive strata={s}"),
    };
    [
        ("bottom", &pack.bottom),
        ("top", &pack.top),
        ("image", &pack.image),
        ("kernel", &pack.kernel),
        ("cokernel", &pack.cokernel),
    ]
    .into_iter()
    .map(|(name, code)| {
        (
            name.to_string(),
            BarcodeReport::new(code, p, pack.degree, mode.clone(), c.seed()),
        )
    })
    .collect()
}

fn emit_panels(
    panels: &[(String, BarcodeReport)],
    format: OutFormat,
    hilbert: Option<&Vec<Vec<usize>>>,
) -> Result<String> {
    match format {
        OutFormat::Json => {
            let mut obj = serde_json::Map::new();
            for (name, r) in panels {
                obj.insert(
                    name.clone(),
                    serde_json::to_value(r).map_err(|e| Error::Consistency(e.to_string()))?,
                );
            }
            if let Some(h) = hilbert {
                obj.insert("hilbert".into(), json!(h));
            }
            canonical_json(&Value::Object(obj))
        }
        OutFormat::Svg => {
            let refs: Vec<(String, &BarcodeReport)> =
                panels.iter().map(|(n, r)| (n.clone(), r)).collect();
            Ok(barcodes_svg(&refs))
        }
        OutFormat::Text => {
            let mut s = String::new();
            if let Some(h) = hilbert {
                s.push_str("hilbert function (rows h, columns attack step i)\n");
                for (k, row) in h.iter().enumerate() {
                    let cells: Vec<String> = row.iter().map(|d| format!("{d:>4}")).collect();
                    let _ = writeln!(s, "h={k:<3}{}", cells.concat());
                }
                s.push('\n');
            }
            for (k, (name, r)) in panels.iter().enumerate() {
                if k > 0 {
                    s.push('\n');
                }
                let _ = writeln!(s, "## {name}\n{}\n{}", r.header(), barcode_text(r));
            }
            Ok(s)
        }
    }
}
