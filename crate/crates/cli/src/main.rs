mod check;
mod render;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fricke::double::{
    f2_compose, f2_p2_compose, f2_p2_viete, f2_param_affine, f2_phi, f2_psi, F2Point, F2SectionFrame,
};
use fricke::fricke::{
    compose, p2_compose, p2_viete, param_affine, phi, psi, star, FrickePoint, FrickeSurface, Generator,
};
use fricke::geometry::{
    format_rational, parse_rational, parse_rationals, ProjectivePoint2, ProjectivePoint3, Rational,
};
use fricke::sections::{
    cf_convergent, chebyshev_b_signed, DihedralMove, QuadricSection, SectionFrame, SectionPoint, Translation,
};
use fricke::tree::{frobenius_scan, generate, Limit, TreeSurface};
use num_bigint::BigInt;
use serde_json::json;

use render::Output;

#[derive(Parser)]
#[command(name = "fricke", version, about = "Exact composition laws on the Fricke surfaces")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    format: Format,

    /// Worker threads for tree expansion; output does not depend on it.
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Surface {
    Fricke,
    DoubleFricke,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeneratorArg {
    #[value(name = "L", alias = "l")]
    L,
    #[value(name = "R", alias = "r")]
    R,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct LimitArgs {
    /// Maximum number of moves from the root.
    #[arg(long)]
    depth: Option<u32>,
    /// Largest absolute component allowed.
    #[arg(long)]
    max_component: Option<u64>,
}

#[derive(Args)]
struct SurfaceArg {
    #[arg(long, value_enum, default_value_t = Surface::Fricke)]
    surface: Surface,
}

#[derive(Args)]
struct FrameArg {
    #[command(flatten)]
    surface: SurfaceArg,
    /// Base point `m0,n0,k0` on the surface; the section is `y = n0`.
    #[arg(long, allow_hyphen_values = true)]
    frame: String,
}

#[derive(Subcommand)]
enum Command {
    /// Breadth-first Viete tree from a root triple.
    Tree {
        #[command(flatten)]
        surface: SurfaceArg,
        /// Root triple, `1,1,1` by default.
        #[arg(long, allow_hyphen_values = true)]
        root: Option<String>,
        #[command(flatten)]
        limit: LimitArgs,
    },
    /// Positive Markov triples grouped by largest component.
    Frobenius {
        #[arg(long)]
        max_component: u64,
    },
    /// Third intersection of the secant line through two points.
    Compose {
        #[command(flatten)]
        surface: SurfaceArg,
        /// Constant term of `x² + y² + z² = 3xyz + σ` (Fricke only).
        #[arg(long, allow_hyphen_values = true)]
        sigma: Option<String>,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// `p ⋆ q = (1,1,1) ∘ (p ∘ q)` on the Markov surface.
    Star {
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// Conic group law on a section.
    SectionAdd {
        #[command(flatten)]
        frame: FrameArg,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    SectionDouble {
        #[command(flatten)]
        frame: FrameArg,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    SectionInverse {
        #[command(flatten)]
        frame: FrameArg,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Dihedral move A, TA, C, TC, B or T on a Fricke section.
    Dihedral {
        #[arg(long, allow_hyphen_values = true)]
        frame: String,
        #[arg(long = "move")]
        which: String,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// Closed-form power of TA or TC on a Fricke section.
    TaPower {
        #[arg(long, allow_hyphen_values = true)]
        frame: String,
        #[arg(long, default_value = "TA")]
        family: String,
        #[arg(long)]
        r: u32,
        #[arg(allow_hyphen_values = true)]
        p: String,
    },
    /// `b_r(n0)` for `r ≥ -2`.
    Chebyshev {
        #[arg(long, allow_hyphen_values = true)]
        n0: String,
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
    },
    /// Points at infinity of a section as slopes `x/z`.
    Infinity {
        #[command(flatten)]
        frame: FrameArg,
    },
    /// `b_r(n0) / b_{r-1}(n0)`.
    Convergent {
        #[arg(long, allow_hyphen_values = true)]
        n0: String,
        #[arg(long)]
        r: u32,
    },
    /// Affine chart `(P, Q) ↦ point`.
    Param {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(allow_hyphen_values = true)]
        p: String,
        #[arg(allow_hyphen_values = true)]
        q: String,
    },
    /// `P² → surface`.
    Phi {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    /// `surface → P²`.
    Psi {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    P2Viete {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(long, value_enum)]
        generator: GeneratorArg,
        #[arg(allow_hyphen_values = true)]
        point: String,
    },
    P2Compose {
        #[command(flatten)]
        surface: SurfaceArg,
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Double Fricke tree from `(-n, 0, n)`.
    NegativeTree {
        #[arg(long, default_value_t = 1)]
        n: u64,
        #[arg(long)]
        depth: u32,
    },
    /// Randomized property checks, reproducible from the seed.
    Check {
        #[arg(long)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        cases: usize,
    },
}

enum Failure {
    Usage(String),
    Domain(String),
}

impl From<fricke::Error> for Failure {
    fn from(e: fricke::Error) -> Self {
        Failure::Domain(e.to_string())
    }
}

type Outcome = Result<Output, Failure>;

fn usage(flag: &str, e: impl std::fmt::Display) -> Failure {
    Failure::Usage(format!("invalid value for {flag}: {e}"))
}

fn triple(flag: &str, s: &str) -> Result<[Rational; 3], Failure> {
    let v = parse_rationals(s, 3).map_err(|e| usage(flag, e))?;
    Ok(v.try_into().expect("three values"))
}

fn rational(flag: &str, s: &str) -> Result<Rational, Failure> {
    parse_rational(s).map_err(|e| usage(flag, e))
}

fn section_point(flag: &str, s: &str) -> Result<SectionPoint, Failure> {
    let mut v = parse_rationals(s, 2).map_err(|e| usage(flag, e))?.into_iter();
    Ok(SectionPoint::new(v.next().expect("x"), v.next().expect("z")))
}

fn p2_point(flag: &str, s: &str) -> Result<ProjectivePoint2, Failure> {
    s.parse().map_err(|e| usage(flag, e))
}

fn p3_point(flag: &str, s: &str) -> Result<ProjectivePoint3, Failure> {
    s.parse().map_err(|e| usage(flag, e))
}

fn integer_triple(flag: &str, s: &str) -> Result<[BigInt; 3], Failure> {
    let v = triple(flag, s)?;
    if v.iter().any(|c| !c.is_integer()) {
        return Err(usage(flag, "components must be integers"));
    }
    Ok(v.map(|c| c.to_integer()))
}

fn fricke_frame(s: &str) -> Result<SectionFrame, Failure> {
    let [m, n, k] = triple("--frame", s)?;
    Ok(SectionFrame::new(m, n, k)?)
}

fn with_frame(frame: &FrameArg, f: impl Fn(&dyn QuadricSection) -> Outcome) -> Outcome {
    let [m, n, k] = triple("--frame", &frame.frame)?;
    match frame.surface.surface {
        Surface::Fricke => f(&SectionFrame::new(m, n, k)?),
        Surface::DoubleFricke => f(&F2SectionFrame::new(m, n, k)?),
    }
}

fn tree_surface(s: Surface) -> TreeSurface {
    match s {
        Surface::Fricke => TreeSurface::Fricke,
        Surface::DoubleFricke => TreeSurface::DoubleFricke,
    }
}

fn generator(g: GeneratorArg) -> Generator {
    match g {
        GeneratorArg::L => Generator::L,
        GeneratorArg::R => Generator::R,
    }
}

fn run(command: Command) -> Outcome {
    match command {
        Command::Tree { surface, root, limit } => {
            let root = match root {
                Some(r) => integer_triple("--root", &r)?,
                None => [1, 1, 1].map(BigInt::from),
            };
            let limit = match (limit.depth, limit.max_component) {
                (Some(d), _) => Limit::Depth(d),
                (None, Some(m)) => Limit::MaxComponent(m),
                (None, None) => unreachable!("clap requires one limit"),
            };
            Ok(render::tree(&generate(tree_surface(surface.surface), root, limit)?))
        }
        Command::Frobenius { max_component } => Ok(render::frobenius(&frobenius_scan(max_component))),
        Command::Compose { surface, sigma, p, q } => {
            let (p, q) = (triple("P", &p)?, triple("Q", &q)?);
            match surface.surface {
                Surface::Fricke => {
                    let sigma = sigma.map(|s| rational("--sigma", &s)).transpose()?.unwrap_or_default();
                    let f = FrickeSurface::with_sigma(sigma);
                    let (p, q) = (f.point(p)?, f.point(q)?);
                    Ok(render::compose(compose(&p, &q).map(FrickePoint::into_coords)))
                }
                Surface::DoubleFricke => {
                    if sigma.is_some() {
                        return Err(usage("--sigma", "only the Fricke surface has a σ family"));
                    }
                    let (p, q) = (F2Point::new(p)?, F2Point::new(q)?);
                    Ok(render::compose(f2_compose(&p, &q).map(F2Point::into_coords)))
                }
            }
        }
        Command::Star { p, q } => {
            let (p, q) = (FrickePoint::new(triple("P", &p)?)?, FrickePoint::new(triple("Q", &q)?)?);
            Ok(render::compose(star(&p, &q)?.map(FrickePoint::into_coords)))
        }
        Command::SectionAdd { frame, p, q } => {
            let (p, q) = (section_point("P", &p)?, section_point("Q", &q)?);
            with_frame(&frame, |f| Ok(render::section_point(&f.add(&p, &q)?)))
        }
        Command::SectionDouble { frame, p } => {
            let p = section_point("P", &p)?;
            with_frame(&frame, |f| Ok(render::section_point(&f.double(&p)?)))
        }
        Command::SectionInverse { frame, p } => {
            let p = section_point("P", &p)?;
            with_frame(&frame, |f| Ok(render::section_point(&f.inverse(&p)?)))
        }
        Command::Dihedral { frame, which, p } => {
            let which: DihedralMove = which.parse().map_err(|e| usage("--move", e))?;
            let frame = fricke_frame(&frame)?;
            let p = section_point("P", &p)?;
            frame.check(&p)?;
            Ok(render::section_point(&frame.dihedral(&p, which)))
        }
        Command::TaPower { frame, family, r, p } => {
            let family: Translation = family.parse().map_err(|e| usage("--family", e))?;
            let frame = fricke_frame(&frame)?;
            let p = section_point("P", &p)?;
            frame.check(&p)?;
            Ok(render::section_point(&frame.ta_power(&p, r, family)))
        }
        Command::Chebyshev { n0, r } => {
            let n0 = rational("--n0", &n0)?;
            if r < -2 {
                return Err(usage("--r", "index must be at least -2"));
            }
            let value = chebyshev_b_signed(r, &n0)?;
            Ok(Output::json_and_plain(
                json!({"result": {"r": r, "n0": format_rational(&n0), "value": format_rational(&value)}}),
                format_rational(&value),
            ))
        }
        Command::Infinity { frame } => with_frame(&frame, |f| Ok(render::quadratic_roots(&f.infinity_points()?))),
        Command::Convergent { n0, r } => {
            let n0 = rational("--n0", &n0)?;
            Ok(render::rational(&cf_convergent(&n0, r)?))
        }
        Command::Param { surface, p, q } => {
            let (p, q) = (rational("P", &p)?, rational("Q", &q)?);
            let coords = match surface.surface {
                Surface::Fricke => param_affine(&p, &q)?.into_coords(),
                Surface::DoubleFricke => f2_param_affine(&p, &q)?.into_coords(),
            };
            Ok(render::triple(&coords))
        }
        Command::Phi { surface, point } => {
            let p = p2_point("POINT", &point)?;
            let image = match surface.surface {
                Surface::Fricke => phi(&p),
                Surface::DoubleFricke => f2_phi(&p)?,
            };
            Ok(render::projective(&image))
        }
        Command::Psi { surface, point } => {
            let p = p3_point("POINT", &point)?;
            let image = match surface.surface {
                Surface::Fricke => psi(&p)?,
                Surface::DoubleFricke => f2_psi(&p)?,
            };
            Ok(render::projective(&image))
        }
        Command::P2Viete { surface, generator: g, point } => {
            let p = p2_point("POINT", &point)?;
            let image = match surface.surface {
                Surface::Fricke => p2_viete(&p, generator(g))?,
                Surface::DoubleFricke => f2_p2_viete(&p, generator(g))?,
            };
            Ok(render::projective(&image))
        }
        Command::P2Compose { surface, a, b } => {
            let (a, b) = (p2_point("A", &a)?, p2_point("B", &b)?);
            let image = match surface.surface {
                Surface::Fricke => p2_compose(&a, &b)?,
                Surface::DoubleFricke => f2_p2_compose(&a, &b)?,
            };
            Ok(render::projective(&image))
        }
        Command::NegativeTree { n, depth } => {
            let n = BigInt::from(n);
            let root = [-n.clone(), BigInt::from(0), n];
            Ok(render::tree(&generate(TreeSurface::DoubleFricke, root, Limit::Depth(depth))?))
        }
        Command::Check { seed, cases } => Ok(check::run(seed, cases)),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let is_tree = matches!(cli.command, Command::Tree { .. } | Command::NegativeTree { .. });
    if cli.format == Format::Dot && !is_tree {
        eprintln!("error: --format dot is only supported by tree and negative-tree");
        return ExitCode::from(2);
    }
    let outcome = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| run(cli.command)),
            Err(e) => Err(Failure::Usage(format!("invalid value for --threads: {e}"))),
        },
        None => run(cli.command),
    };
    match outcome {
        Ok(out) => {
            println!("{}", out.render(cli.format));
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
