//! Command-line front end. Every subcommand prints one JSON document on
//! success; `reproduce-paper` prints a table unless `--json` is given.

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::classification::{
    classify_kappa, infinite_orbit_family, reduce_to_minimal, separation_pair,
};
use crate::error::{Error, Result};
use crate::exactmath::{BernoulliTable, Rational, VarSpace};
use crate::groupoid::{default_cap, orbit, Kappa, Point, UVPoint};
use crate::invariants::{
    are_equivalent, b_l_poly_uv, b_l_with, default_fingerprint_len, is_quasi_invariant, p_l,
    parse_terms, q_l, q_l_poly_uv,
};
use crate::reproduce::reproduce_all;
use crate::special_cases::{
    delta_kappa1, gens_11, line_orbit_minus_half, ratio_criterion_minus1,
    ratio_criterion_minus_half, susy_power_sum, trig_finite_generation, trig_power_sum, TrigParams,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_PARSE: i32 = 64;

#[derive(Parser, Debug)]
#[command(
    name = "superweyl",
    version,
    about = "Orbits and invariants of the deformed super Weyl groupoid action"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Classify kappa as nonspecial, positive special or negative special.
    Classify {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, allow_hyphen_values = true)]
        kappa: Kappa,
    },
    /// Enumerate the orbit of a point.
    Orbit {
        #[command(flatten)]
        at: PointArgs,
        /// Maximum number of points (default (n+m)!+1).
        #[arg(long)]
        cap: Option<usize>,
    },
    /// Evaluate q_l, b_l and p_l for l = 1..=upto.
    Invariants {
        #[command(flatten)]
        at: PointArgs,
        #[arg(long)]
        upto: Option<u32>,
    },
    /// Decide equivalence of two points.
    Equiv {
        #[command(flatten)]
        opt: Opt,
        #[arg(long, allow_hyphen_values = true)]
        kappa: Kappa,
        #[arg(long)]
        left: Point,
        #[arg(long)]
        right: Point,
    },
    /// Lower a point to its minimal form.
    Reduce {
        #[command(flatten)]
        at: PointArgs,
        #[arg(long, default_value_t = 10_000)]
        max_steps: usize,
    },
    /// Check a polynomial in (u, v) for invariance.
    QuasiCheck {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, allow_hyphen_values = true)]
        kappa: Kappa,
        /// Polynomial as a JSON term array.
        #[arg(long, group = "poly_source")]
        poly: Option<String>,
        /// Use q_l in (u, v).
        #[arg(long, group = "poly_source")]
        ql: Option<u32>,
        /// Use b_l in (u, v).
        #[arg(long, group = "poly_source")]
        bl: Option<u32>,
    },
    /// Verified infinite-orbit witnesses for negative special kappa.
    WitnessInfinite {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, allow_hyphen_values = true)]
        kappa: Kappa,
        /// Inclusive range `a..b`.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_range)]
        range: (i64, i64),
    },
    /// Two equivalent minimal points in distinct orbits for positive special kappa.
    WitnessSeparation {
        #[command(flatten)]
        dims: Dims,
        #[arg(long, allow_hyphen_values = true)]
        kappa: Kappa,
        #[arg(long, allow_hyphen_values = true, default_value = "5")]
        x0: Rational,
        #[arg(long, allow_hyphen_values = true, default_value = "0")]
        y0: Rational,
    },
    /// Checks for kappa = 1, -1, -1/2 and the trigonometric deformation.
    Case {
        #[command(subcommand)]
        case: Case,
    },
    /// Run the full reference catalogue.
    ReproducePaper {
        /// Print the report as JSON instead of a table.
        #[arg(long)]
        json: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
enum Case {
    /// prod ((u_i - v_j)^2 - 1).
    Delta {
        #[command(flatten)]
        opt: Opt,
        #[arg(long)]
        uv: UVPoint,
    },
    /// sum x_i^l - sum y_j^l over the point's coordinates.
    SusyPowerSum {
        #[command(flatten)]
        opt: Opt,
        #[arg(long)]
        point: Point,
        #[arg(short = 'l', long)]
        l: u32,
    },
    /// The simplified equivalence criterion at kappa = -1 or -1/2.
    Ratio {
        #[command(flatten)]
        opt: Opt,
        #[arg(long, allow_hyphen_values = true)]
        kappa: Kappa,
        #[arg(long)]
        left: Point,
        #[arg(long)]
        right: Point,
    },
    /// The two points of an infinite line orbit at kappa = -1/2, n = 2, m = 1.
    LineOrbit {
        #[command(flatten)]
        opt: Opt,
        #[arg(short = 'l', long, allow_hyphen_values = true)]
        l: i64,
        #[arg(short = 'a', long, allow_hyphen_values = true, default_value = "0")]
        a: Rational,
        #[arg(long)]
        second_family: bool,
    },
    /// Generators for n = m = 1.
    Gens {
        #[command(flatten)]
        opt: Opt,
        #[arg(long, allow_hyphen_values = true)]
        kappa: Kappa,
        #[arg(long)]
        point: Point,
    },
    /// sum z^r + (1 - q^r)/(1 - t^r) sum w^r.
    TrigPowerSum {
        #[command(flatten)]
        trig: TrigArgs,
        /// z values, comma separated.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list, default_value = "")]
        z: RationalList,
        /// w values, comma separated.
        #[arg(long, allow_hyphen_values = true, value_parser = parse_list, default_value = "")]
        w: RationalList,
        #[arg(short = 'r', long)]
        r: u32,
    },
    /// Whether t^i q^j != 1 for all 1 <= i <= n, 1 <= j <= m.
    TrigFiniteGeneration {
        #[command(flatten)]
        trig: TrigArgs,
    },
}

#[derive(Args, Debug)]
struct Opt {
    /// Accepted for uniformity; output is JSON.
    #[arg(long)]
    json: bool,
}

#[derive(Args, Debug)]
struct Dims {
    #[command(flatten)]
    opt: Opt,
    #[arg(short = 'n')]
    n: usize,
    #[arg(short = 'm')]
    m: usize,
}

#[derive(Args, Debug)]
#[group(id = "coords_args")]
#[command(group(clap::ArgGroup::new("coords").args(["point", "uv"]).required(true)))]
struct PointArgs {
    #[command(flatten)]
    opt: Opt,
    #[arg(long, allow_hyphen_values = true)]
    kappa: Kappa,
    /// Checked against the point when given.
    #[arg(short = 'n')]
    n: Option<usize>,
    #[arg(short = 'm')]
    m: Option<usize>,
    #[arg(long)]
    point: Option<Point>,
    #[arg(long)]
    uv: Option<UVPoint>,
}

#[derive(Args, Debug)]
struct TrigArgs {
    #[command(flatten)]
    opt: Opt,
    #[arg(long, allow_hyphen_values = true)]
    q: Rational,
    #[arg(long, allow_hyphen_values = true)]
    t: Rational,
    #[arg(short = 'n', default_value_t = 1)]
    n: usize,
    #[arg(short = 'm', default_value_t = 1)]
    m: usize,
}

#[derive(Clone, Debug)]
struct RationalList(Vec<Rational>);

fn parse_list(s: &str) -> std::result::Result<RationalList, String> {
    s.split(',')
        .map(str::trim)
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<Rational>().map_err(|e| e.to_string()))
        .collect::<std::result::Result<_, _>>()
        .map(RationalList)
}

fn parse_range(s: &str) -> std::result::Result<(i64, i64), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected a..b, got {s:?}"))?;
    let a: i64 = a.trim().parse().map_err(|e| format!("{a:?}: {e}"))?;
    let b: i64 = b.trim().parse().map_err(|e| format!("{b:?}: {e}"))?;
    if a > b {
        return Err(format!("empty range {s:?}"));
    }
    Ok((a, b))
}

impl PointArgs {
    fn point(&self) -> Result<Point> {
        let p = match (&self.point, &self.uv) {
            (Some(p), _) => p.clone(),
            (None, Some(uv)) => uv.to_xy(&self.kappa),
            (None, None) => return Err(Error::Parse("one of --point or --uv is required".into())),
        };
        let (n, m) = p.dims();
        let want = (self.n.unwrap_or(n), self.m.unwrap_or(m));
        if want != (n, m) {
            return Err(Error::DimensionMismatch {
                left_n: n,
                left_m: m,
                right_n: want.0,
                right_m: want.1,
            });
        }
        Ok(p)
    }
}

/// `q_l`, `b_l` and `p_l` for `l = 1..=upto`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantValues {
    pub q: Vec<Rational>,
    pub b: Vec<Rational>,
    pub p: Vec<Rational>,
}

/// Outcome of one invocation: exit status and the text for standard output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
}

fn error_json(kind: &str, message: &str) -> String {
    json!({ "error": kind, "message": message }).to_string()
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    serde_json::to_string_pretty(value)
        .map_err(|e| Error::InternalVerificationFailed(e.to_string()))
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: EXIT_OK,
                    stdout: e.to_string(),
                },
                _ => Outcome {
                    code: EXIT_PARSE,
                    stdout: error_json("ParseError", e.to_string().trim()),
                },
            };
        }
    };
    match execute(cli.command) {
        Ok(stdout) => Outcome {
            code: EXIT_OK,
            stdout,
        },
        Err(CommandFailure::Error(e)) => {
            let code = if matches!(e, Error::Parse(_) | Error::ZeroKappa) {
                EXIT_PARSE
            } else {
                EXIT_DOMAIN
            };
            Outcome {
                code,
                stdout: error_json(e.kind(), &e.to_string()),
            }
        }
        Err(CommandFailure::Report(stdout)) => Outcome {
            code: EXIT_DOMAIN,
            stdout,
        },
    }
}

enum CommandFailure {
    Error(Error),
    /// A completed run whose checks did not all pass.
    Report(String),
}

impl From<Error> for CommandFailure {
    fn from(e: Error) -> Self {
        CommandFailure::Error(e)
    }
}

fn execute(command: Command) -> std::result::Result<String, CommandFailure> {
    let out = match command {
        Command::Classify { dims, kappa } => to_json(&classify_kappa(&kappa, dims.n, dims.m))?,
        Command::Orbit { at, cap } => {
            let p = at.point()?;
            let cap = cap.unwrap_or_else(|| default_cap(p.n(), p.m()));
            if cap == 0 {
                return Err(Error::Parse("--cap must be at least 1".into()).into());
            }
            to_json(&orbit(&p, &at.kappa, cap))?
        }
        Command::Invariants { at, upto } => {
            let p = at.point()?;
            let upto = upto.unwrap_or_else(|| default_fingerprint_len(p.n(), p.m()) as u32);
            let uv = p.to_uv(&at.kappa);
            let table = BernoulliTable::new(upto as usize);
            to_json(&InvariantValues {
                q: (1..=upto).map(|l| q_l(&p, &at.kappa, l)).collect(),
                b: (1..=upto)
                    .map(|l| b_l_with(&table, &uv, &at.kappa, l))
                    .collect(),
                p: (1..=upto).map(|l| p_l(&p, &at.kappa, l)).collect(),
            })?
        }
        Command::Equiv {
            kappa, left, right, ..
        } => to_json(&are_equivalent(&left, &right, &kappa)?)?,
        Command::Reduce { at, max_steps } => {
            to_json(&reduce_to_minimal(&at.point()?, &at.kappa, max_steps)?)?
        }
        Command::QuasiCheck {
            dims,
            kappa,
            poly,
            ql,
            bl,
        } => {
            let space = VarSpace::new(dims.n, dims.m);
            let f = match (poly, ql, bl) {
                (Some(json), _, _) => parse_terms(&json, dims.n, dims.m)?,
                (_, Some(l), _) => q_l_poly_uv(space, &kappa, l),
                (_, _, Some(l)) => b_l_poly_uv(space, &kappa, l),
                _ => {
                    return Err(
                        Error::Parse("one of --poly, --ql or --bl is required".into()).into(),
                    )
                }
            };
            to_json(&is_quasi_invariant(&f, dims.n, dims.m, &kappa)?)?
        }
        Command::WitnessInfinite { dims, kappa, range } => to_json(&infinite_orbit_family(
            &kappa, dims.n, dims.m, range.0, range.1,
        )?)?,
        Command::WitnessSeparation {
            dims,
            kappa,
            x0,
            y0,
        } => to_json(&separation_pair(&kappa, dims.n, dims.m, &x0, &y0)?)?,
        Command::Case { case } => execute_case(case)?,
        Command::ReproducePaper { json, seed } => {
            let report = reproduce_all(seed);
            let text = if json {
                to_json(&report)?
            } else {
                format!("seed {seed}\n{}", report.table())
            };
            if !report.all_pass {
                return Err(CommandFailure::Report(text));
            }
            text
        }
    };
    Ok(out)
}

fn execute_case(case: Case) -> Result<String> {
    match case {
        Case::Delta { uv, .. } => to_json(&json!({ "delta": delta_kappa1(&uv) })),
        Case::SusyPowerSum { point, l, .. } => {
            to_json(&json!({ "value": susy_power_sum(point.x(), point.y(), l) }))
        }
        Case::Ratio {
            kappa, left, right, ..
        } => {
            let k = kappa.value();
            let equal = if *k == Rational::from_integer(-1) {
                ratio_criterion_minus1(&left, &right)?
            } else if *k == Rational::frac(-1, 2) {
                ratio_criterion_minus_half(&left, &right)?
            } else {
                return Err(Error::UnsupportedKappa(kappa.to_string()));
            };
            to_json(&json!({ "kappa": kappa, "equal": equal }))
        }
        Case::LineOrbit {
            l,
            a,
            second_family,
            ..
        } => {
            let kappa = Kappa::new(Rational::frac(-1, 2))?;
            let (p, q) = line_orbit_minus_half(l, &a, second_family);
            to_json(&json!({ "uv": [p, q], "xy": [p.to_xy(&kappa), q.to_xy(&kappa)] }))
        }
        Case::Gens { kappa, point, .. } => to_json(&json!({ "values": gens_11(&kappa, &point)? })),
        Case::TrigPowerSum { trig, z, w, r } => {
            let params = TrigParams::new(trig.q, trig.t, trig.n, trig.m)?;
            to_json(&json!({ "value": trig_power_sum(&z.0, &w.0, &params, r)? }))
        }
        Case::TrigFiniteGeneration { trig } => {
            let params = TrigParams::new(trig.q, trig.t, trig.n, trig.m)?;
            to_json(&json!({ "finitely_generated": trig_finite_generation(&params) }))
        }
    }
}
