//! Command-line front end: exact lattice-width geometry on polygon JSON
//! files, extremal constructions, inequality verification, fuzzing, and
//! SVG figures.

mod svg;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use latgeom::bounds::{
    construct_extremal, random_lattice_free, verify_bounds, width_limit, BoundsReport,
    ExtremalKind, Profile,
};
use latgeom::classify::{classify_maximal, is_split_containing};
use latgeom::covering::{mu1, mu2_approx};
use latgeom::exactnum::Rational;
use latgeom::json;
use latgeom::latwidth::lattice_width;
use latgeom::triangles::{tri_area_circumscribed, tri_width_circumscribed, TriangleParams};
use latgeom::{Polygon, Scalar};

#[derive(Parser)]
#[command(name = "latgeom", about = "Exact planar geometry of numbers", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Lattice width and all minimizing directions.
    Width { polygon: PathBuf },
    /// Exact area.
    Area { polygon: PathBuf },
    /// Lattice-freeness and maximal classification.
    Classify { polygon: PathBuf },
    /// Covering minima: mu1 exactly, mu2 as a certified interval.
    Mu {
        polygon: PathBuf,
        /// Interval width, as a rational like 1/1000.
        #[arg(long, default_value = "1/1000")]
        eps: String,
    },
    /// Emit an extremal polygon as JSON.
    Construct {
        #[command(subcommand)]
        kind: ConstructCommand,
    },
    /// Width and area of a triangle circumscribed about the unit cell.
    TriWidth {
        /// The three parameters x0 x1 x2, each in (0, 1).
        #[arg(long, num_args = 3)]
        params: Vec<String>,
    },
    /// Evaluate every applicable area-width inequality.
    Verify { polygon: PathBuf },
    /// Run the seeded lattice-free generator through the verifier.
    Fuzz {
        #[arg(long)]
        seeds: u64,
        #[arg(long, value_parser = ["general", "symmetric", "triangle3"])]
        profile: String,
    },
    /// Render the polygon over the integer grid as SVG.
    Plot {
        polygon: PathBuf,
        #[arg(short, long)]
        output: PathBuf,
    },
}

#[derive(Args)]
struct OutputOpt {
    /// Write the polygon JSON here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum ConstructCommand {
    /// The width-maximal lattice-free triangle over the standard cell.
    Hurkens {
        #[command(flatten)]
        out: OutputOpt,
    },
    /// conv of two crossing segments attaining the upper area bound.
    GeneralMaxQuad {
        #[arg(long)]
        w: String,
        #[arg(long, default_value = "1/2")]
        s: String,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// The triangle attaining the upper area bound for 2 < w.
    GeneralMaxTriangle {
        #[arg(long)]
        w: String,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// The translate of (w/2) conv{(1,0),(0,1),(-1,-1)}.
    GeneralMin {
        #[arg(long)]
        w: String,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// The symmetric cross attaining the symmetric upper bound.
    SymMaxCross {
        #[arg(long)]
        w: String,
        #[command(flatten)]
        out: OutputOpt,
    },
    /// The lattice-free translate of (w/2) K_alpha.
    SymMin {
        #[arg(long)]
        w: String,
        #[arg(long)]
        alpha: String,
        #[command(flatten)]
        out: OutputOpt,
    },
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::FAILURE
        }
    }
}

fn load_polygon(path: &PathBuf) -> Result<Polygon, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    json::polygon_from_str(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn parse_scalar(text: &str) -> Result<Scalar, String> {
    if text.trim() == "1+2/sqrt3" {
        return Ok(width_limit());
    }
    text.parse::<Scalar>()
        .map_err(|e| format!("cannot parse {text:?}: {e}"))
}

fn parse_rational(text: &str) -> Result<Rational, String> {
    parse_scalar(text)?
        .as_rational()
        .cloned()
        .ok_or_else(|| format!("{text:?} is not rational"))
}

fn show(value: &Scalar) -> String {
    format!("{value} \u{2248} {:.7}", value.to_f64())
}

fn run(cli: Cli) -> Result<(), String> {
    match cli.command {
        Command::Width { polygon } => {
            let k = load_polygon(&polygon)?;
            let lw = lattice_width(&k);
            println!("w = {}", show(&lw.width));
            let dirs: Vec<String> = lw.minimizers.iter().map(|d| d.to_string()).collect();
            println!("minimizers: {}", dirs.join(", "));
        }
        Command::Area { polygon } => {
            let k = load_polygon(&polygon)?;
            println!("A = {}", show(&k.area()));
        }
        Command::Classify { polygon } => {
            let k = load_polygon(&polygon)?;
            let class = classify_maximal(&k).map_err(|e| e.to_string())?;
            println!("{class}");
            let counts: Vec<usize> = k
                .edges()
                .map(|(p, q)| latgeom::geom::segment_lattice_points(p, q, false).len())
                .collect();
            println!("edge relint integer points: {counts:?}");
            match is_split_containing(&k) {
                Some(split) => println!("contained in split: {split}"),
                None => println!("contained in split: none"),
            }
        }
        Command::Mu { polygon, eps } => {
            let k = load_polygon(&polygon)?;
            println!("mu1 = {}", show(&mu1(&k)));
            let eps = parse_rational(&eps)?;
            // mu2 is translation invariant; center a symmetric body first.
            let centered = match k.symmetry_center() {
                Some(c) => k.translate(&-c.x.clone(), &-c.y.clone()),
                None => k,
            };
            let iv = mu2_approx(&centered, &eps).map_err(|e| e.to_string())?;
            println!(
                "mu2 in [{}, {}] \u{2248} [{:.7}, {:.7}]",
                Scalar::Rational(iv.lo.clone()),
                Scalar::Rational(iv.hi.clone()),
                Scalar::Rational(iv.lo).to_f64(),
                Scalar::Rational(iv.hi).to_f64(),
            );
        }
        Command::Construct { kind } => {
            let (kind, out) = match kind {
                ConstructCommand::Hurkens { out } => (
                    ExtremalKind::Hurkens {
                        base: [(0, 0), (1, 0), (0, 1)],
                    },
                    out,
                ),
                ConstructCommand::GeneralMaxQuad { w, s, out } => (
                    ExtremalKind::GeneralMaxQuad {
                        w: parse_scalar(&w)?,
                        s: parse_scalar(&s)?,
                    },
                    out,
                ),
                ConstructCommand::GeneralMaxTriangle { w, out } => (
                    ExtremalKind::GeneralMaxTriangle {
                        w: parse_scalar(&w)?,
                    },
                    out,
                ),
                ConstructCommand::GeneralMin { w, out } => (
                    ExtremalKind::GeneralMin {
                        w: parse_scalar(&w)?,
                    },
                    out,
                ),
                ConstructCommand::SymMaxCross { w, out } => (
                    ExtremalKind::SymMaxCross {
                        w: parse_scalar(&w)?,
                    },
                    out,
                ),
                ConstructCommand::SymMin { w, alpha, out } => (
                    ExtremalKind::SymMin {
                        w: parse_scalar(&w)?,
                        alpha: parse_scalar(&alpha)?,
                    },
                    out,
                ),
            };
            let body = construct_extremal(&kind).map_err(|e| e.to_string())?;
            let text = json::polygon_to_string(&body);
            match out.output {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))?;
                    eprintln!("wrote {}", path.display());
                }
                None => println!("{text}"),
            }
        }
        Command::TriWidth { params } => {
            if params.len() != 3 {
                return Err("--params needs exactly three values".into());
            }
            let x: Vec<Scalar> = params
                .iter()
                .map(|p| parse_scalar(p))
                .collect::<Result<_, _>>()?;
            let params = TriangleParams::standard([x[0].clone(), x[1].clone(), x[2].clone()])
                .map_err(|e| e.to_string())?;
            let w = tri_width_circumscribed(&params).map_err(|e| e.to_string())?;
            println!("w = {}", show(&w));
            println!("A = {}", show(&tri_area_circumscribed(&params)));
        }
        Command::Verify { polygon } => {
            let k = load_polygon(&polygon)?;
            let report = verify_bounds(&k).map_err(|e| e.to_string())?;
            print_report(&report);
        }
        Command::Fuzz { seeds, profile } => {
            let profile = match profile.as_str() {
                "general" => Profile::General,
                "symmetric" => Profile::Symmetric,
                _ => Profile::Triangle3,
            };
            let mut violations = 0u64;
            for seed in 0..seeds {
                let k = random_lattice_free(seed, profile);
                let report = verify_bounds(&k).map_err(|e| e.to_string())?;
                if !report.all_satisfied() {
                    violations += 1;
                    println!("seed {seed}: VIOLATION");
                    print_report(&report);
                }
            }
            println!("{seeds} seeds, {violations} violations");
            if violations > 0 {
                return Err("inequality violations found".into());
            }
        }
        Command::Plot { polygon, output } => {
            let k = load_polygon(&polygon)?;
            let svg = svg::polygon_svg(&k);
            fs::write(&output, svg).map_err(|e| format!("{}: {e}", output.display()))?;
            eprintln!("wrote {}", output.display());
        }
    }
    Ok(())
}

fn print_report(report: &BoundsReport) {
    println!("w = {}", show(&report.width));
    println!("A = {}", show(&report.area));
    println!("class = {}", report.class);
    println!("symmetric = {}", report.symmetric);
    for check in &report.inequalities {
        if !check.applicable {
            println!("  {:?}: not applicable at this width", check.kind);
            continue;
        }
        let bound = match &check.bound {
            Some(b) => show(b),
            None => "unbounded".to_string(),
        };
        let slack = match &check.slack {
            Some(s) => format!(", slack {}", show(s)),
            None => String::new(),
        };
        let status = if check.satisfied { "ok" } else { "VIOLATED" };
        println!("  {:?}: bound {bound} [{status}]{slack}", check.kind);
        if let Some(tag) = &check.certification {
            println!("    equality case: {tag:?}");
        }
    }
    if let Some((kind, _)) = &report.equality_case {
        println!("tight at {kind:?}");
    }
}
