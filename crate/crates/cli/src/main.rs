use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use lndext::blowup::{blowup_chart, coordinates};
use lndext::derivation::Derivation;
use lndext::ideal::PresentedRing;
use lndext::poly::{parse_polynomial, Polynomial, VarSet};
use lndext::pullback::{build_pullback, verify_pullback};
use lndext::report::Report;
use lndext::rewriter::{chart_vars, default_max_steps, rewrite_membership, Outcome};
use lndext::suites::{run_suite, SuiteParams, SUITES};
use lndext::trivial_ext::{classify_kind, Degeneracy, Kind, TrivialExtension};
use lndext::Error;

#[derive(Parser)]
#[command(name = "lndext", version, about = "Verification suites for extensions of Ga-bundles over the punctured plane")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite.
    Verify {
        /// One of: family1, family2, smoothext, section7, gluing,
        /// sequence-axioms, cross-family, sl2, equimod, properties, rewriter.
        suite: String,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        p: Option<u32>,
        #[arg(long)]
        q: Option<u32>,
        #[arg(long)]
        nu_max: Option<u32>,
        #[arg(long)]
        trunc_len: Option<u32>,
        #[arg(long)]
        trunc_deg: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Decide membership of a polynomial in t, v, u in the chart algebra.
    Member {
        poly: String,
        #[arg(long, default_value_t = 1)]
        n: u32,
        #[arg(long)]
        max_steps: Option<usize>,
    },
    /// Classify Q[x,y][generators] inside Q[x,y,t] as first or second kind.
    Classify {
        /// Generators in x, y, t.
        generators: Vec<String>,
        /// File with one generator per line.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Build the pullback of SL2 along (g, h) over Q[x,y] and check it.
    Pullback {
        #[arg(long)]
        g: String,
        #[arg(long)]
        h: String,
        #[arg(long, default_value_t = 2)]
        nu_max: u32,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Fixed loci in every chart of a blowup.
    Charts {
        /// Comma-separated variable names.
        #[arg(long, default_value = "xi,eta,zeta")]
        vars: String,
        /// Comma-separated images of the variables under the derivation.
        #[arg(long, default_value = "eta,0,0")]
        images: String,
        /// Comma-separated center generators; defaults to the coordinates.
        #[arg(long)]
        center: Option<String>,
    },
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::Unbounded(_) => 3,
        Error::NotRegularOnChart(_) | Error::RelationNotRespected { .. } => 1,
        _ => 2,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(error_code(&e))
}

fn emit(report: &Report, format: Format) -> ExitCode {
    match format {
        Format::Text => print!("{}", report.to_text()),
        Format::Structured => println!("{}", report.to_json()),
    }
    ExitCode::from(report.exit_code() as u8)
}

fn split(list: &str) -> Vec<&str> {
    list.split(',').map(str::trim).filter(|s| !s.is_empty()).collect()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => fail(e),
    }
}

fn run(command: Command) -> lndext::Result<ExitCode> {
    match command {
        Command::Verify {
            suite,
            n,
            p,
            q,
            nu_max,
            trunc_len,
            trunc_deg,
            format,
            seed,
        } => {
            if !SUITES.contains(&suite.as_str()) {
                return Err(Error::InvalidInput(format!(
                    "unknown suite `{suite}`; expected one of {}",
                    SUITES.join(", ")
                )));
            }
            let mut params = SuiteParams::from_env()?;
            params.n = n;
            params.p = p;
            params.q = q;
            params.nu_max = nu_max;
            params.trunc_len = trunc_len;
            params.trunc_deg = trunc_deg;
            if let Some(s) = seed {
                params.seed = s;
            }
            Ok(emit(&run_suite(&suite, &params)?, format))
        }
        Command::Member { poly, n, max_steps } => {
            let f = parse_polynomial(&poly, &chart_vars())?;
            let steps = max_steps.unwrap_or_else(|| default_max_steps(&f));
            let trace = rewrite_membership(&f, n, steps)?;
            print!("{trace}");
            Ok(ExitCode::from(match trace.outcome {
                Outcome::Member(_) => 0,
                Outcome::NotMember(_) => 1,
                Outcome::StepLimit => 3,
            }))
        }
        Command::Classify { generators, file } => {
            let mut gens = generators;
            if let Some(path) = file {
                let text = std::fs::read_to_string(&path)
                    .map_err(|e| Error::InvalidInput(format!("{}: {e}", path.display())))?;
                gens.extend(text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).map(String::from));
            }
            if gens.is_empty() {
                return Err(Error::InvalidInput("no generators given".into()));
            }
            let refs: Vec<&str> = gens.iter().map(String::as_str).collect();
            let ext = TrivialExtension::parse(&refs)?;
            let c = classify_kind(&ext);
            let kind = match c.kind {
                Kind::FirstKind => "first",
                Kind::SecondKind => "second",
            };
            println!("kind: {kind}");
            match c.degenerate {
                Some(Degeneracy::BaseOnly) => println!("degenerate: the algebra is Q[x,y]"),
                Some(Degeneracy::FullPolynomialRing) => println!("degenerate: the algebra is Q[x,y,t]"),
                None => {}
            }
            if let Some((i, nu)) = c.witness {
                println!("witness: generator {} ({}) has a unit coefficient at t^{nu}", i, ext.generators()[i]);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Pullback { g, h, nu_max, format } => {
            let base = PresentedRing::polynomial(&VarSet::new(["x", "y"])?);
            let g = base.element(&g)?;
            let h = base.element(&h)?;
            let bundle = build_pullback(&base, &g, &h)?;
            if bundle.is_trivial() {
                println!("trivial: <{}, {}> is the unit ideal", bundle.g(), bundle.h());
                return Ok(ExitCode::SUCCESS);
            }
            Ok(emit(&verify_pullback(&bundle, nu_max)?, format))
        }
        Command::Charts { vars, images, center } => {
            let names = split(&vars);
            let ring = PresentedRing::parse(&names, &[])?;
            let imgs = split(&images);
            if imgs.len() != names.len() {
                return Err(Error::InvalidInput(format!("{} variables but {} images", names.len(), imgs.len())));
            }
            let images: Vec<Polynomial> =
                imgs.iter().map(|s| parse_polynomial(s, ring.vars())).collect::<lndext::Result<_>>()?;
            let d = Derivation::new(&ring, images)?;
            let centers: Vec<Polynomial> = match center {
                Some(c) => split(&c).iter().map(|s| parse_polynomial(s, ring.vars())).collect::<lndext::Result<_>>()?,
                None => coordinates(ring.vars()),
            };
            for j in 0..centers.len() {
                let chart = blowup_chart(&d, &centers, j)?;
                let fixed = chart.fixed_locus();
                let gens: Vec<String> = fixed.groebner().polynomials().iter().map(|p| p.to_string()).collect();
                println!("chart {j}: denominator {}", chart.denominator());
                println!("  variables: {}", chart.ring().vars());
                let rels: Vec<String> = chart.ring().relations().generators().iter().map(|p| p.to_string()).collect();
                println!("  relations: [{}]", rels.join(", "));
                let imgs: Vec<String> = chart.derivation().images().iter().map(|p| p.to_string()).collect();
                println!("  derivation: [{}]", imgs.join(", "));
                if fixed.is_unit() {
                    println!("  fixed locus: empty");
                } else {
                    println!("  fixed locus: [{}]", gens.join(", "));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}
