//! `alpha-landau`: univalence radii, series evaluation, coefficient
//! extraction and bounds, Poisson integrals and the verification harness
//! for α-harmonic mappings, with JSON (stdout) and CSV output for
//! scripting. Diagnostics go to stderr; exit code 0 on success, 2 on
//! domain errors, 3 on accuracy errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use num_complex::Complex64;
use serde::Serialize;

use alpha_harmonic::alphamap::{
    boundary_from_json, poisson_solve, spectrum_from_json, spectrum_to_json, AlphaHarmonicMap,
    SamplingGrid,
};
use alpha_harmonic::coefficients::{
    corollary22_bound, default_extraction_points, extract_from_map, longwang_term_bound,
    theorem21_lhs,
};
use alpha_harmonic::landau::{classical_m_constant, corollary33, solve_rho0, LandauInput};
use alpha_harmonic::verify::{random_admissible_map, run_verification};
use alpha_harmonic::Error;

#[derive(Parser)]
#[command(
    name = "alpha-landau",
    version,
    about = "Numerics for alpha-harmonic mappings on the unit disc"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Univalence radius rho0 and schlicht-disc bound R0 for (alpha, beta, Lambda)
    Radii {
        #[arg(long)]
        alpha: f64,
        /// Lower bound on lambda_f(0) (or on |J_f(0)| with --corollary33)
        #[arg(long)]
        beta: f64,
        /// Upper bound on Lambda_f over the disc
        #[arg(long = "Lambda")]
        lambda: f64,
        /// Treat beta as |J_f(0)| and reduce via lambda_f(0) >= beta/Lambda
        #[arg(long)]
        corollary33: bool,
    },
    /// Evaluate the series of a spectrum file at a point
    Eval {
        #[arg(long)]
        spectrum: PathBuf,
        /// Point as re,im
        #[arg(long, value_parser = parse_complex)]
        z: Complex64,
    },
    /// Wirtinger derivatives and dilations at a point
    Derivs {
        #[arg(long)]
        spectrum: PathBuf,
        #[arg(long, value_parser = parse_complex)]
        z: Complex64,
        /// Also report the finite-difference residual of the defining
        /// equation at this step size
        #[arg(long)]
        residual_h: Option<f64>,
    },
    /// Recover coefficients c_{+k}, c_{-k} by circle quadrature
    Extract {
        #[arg(long)]
        spectrum: PathBuf,
        #[arg(long)]
        k: u32,
        #[arg(long, default_value_t = 0.7)]
        r: f64,
        /// Quadrature points (default max(256, 8(K+2)) for max index K)
        #[arg(long)]
        n_points: Option<usize>,
    },
    /// Coefficient estimate for one index against the sampled Lambda bound
    CheckBound {
        #[arg(long)]
        spectrum: PathBuf,
        #[arg(long)]
        k: u32,
        /// Also report the closed-form coefficient bound
        #[arg(long)]
        corollary22: bool,
        /// Also report the per-term series bound at this n
        #[arg(long)]
        longwang_n: Option<u32>,
    },
    /// Sampled injectivity and schlicht-coverage report
    Verify {
        #[arg(long, conflicts_with = "random")]
        spectrum: Option<PathBuf>,
        /// Generate an admissible map instead of reading one
        #[arg(long)]
        random: bool,
        /// Required with --random; ignored otherwise (alpha comes from the file)
        #[arg(long)]
        alpha: Option<f64>,
        /// Hypothesis lambda_f(0) >= beta (default: the map's own lambda_f(0))
        #[arg(long)]
        beta: Option<f64>,
        /// Hypothesis Lambda_f <= Lambda (default: 1.01 x grid estimate)
        #[arg(long = "Lambda")]
        lambda: Option<f64>,
        #[arg(long, default_value_t = 3)]
        max_index: u32,
        #[arg(long, default_value_t = 2000)]
        n_samples: usize,
        #[arg(long, default_value_t = 1024)]
        n_boundary: usize,
        /// Default 0; the ALPHA_LANDAU_SEED environment variable overrides
        /// the default, an explicit flag overrides both
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Solve the Dirichlet problem from sampled boundary data at a point
    Poisson {
        #[arg(long)]
        boundary: PathBuf,
        #[arg(long)]
        alpha: f64,
        #[arg(long, value_parser = parse_complex)]
        z: Complex64,
    },
    /// CSV table of radii over an alpha range
    Sweep {
        #[arg(long)]
        alpha_min: f64,
        #[arg(long)]
        alpha_max: f64,
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        beta: f64,
        #[arg(long = "Lambda")]
        lambda: f64,
    },
    /// Minimum of (3-r^2)/(r(1-r^2)) on (0,1)
    MConstant,
}

fn parse_complex(text: &str) -> Result<Complex64, String> {
    let (re, im) = text
        .split_once(',')
        .ok_or_else(|| format!("expected re,im, got `{text}`"))?;
    let re: f64 = re.trim().parse().map_err(|e| format!("bad real part: {e}"))?;
    let im: f64 = im.trim().parse().map_err(|e| format!("bad imaginary part: {e}"))?;
    Ok(Complex64::new(re, im))
}

#[derive(Serialize)]
struct ComplexOut {
    re: f64,
    im: f64,
}

impl From<Complex64> for ComplexOut {
    fn from(z: Complex64) -> Self {
        ComplexOut { re: z.re, im: z.im }
    }
}

#[derive(Serialize)]
struct RadiiOut {
    a: f64,
    rho0: f64,
    #[serde(rename = "R0_lower")]
    r0_lower: f64,
    phi_residual: f64,
    #[serde(rename = "positive_R0")]
    positive_r0: bool,
}

#[derive(Serialize)]
struct EvalOut {
    value: ComplexOut,
}

#[derive(Serialize)]
struct DerivsOut {
    dz: ComplexOut,
    dzbar: ComplexOut,
    #[serde(rename = "Lambda")]
    lambda_max: f64,
    lambda: f64,
    jacobian: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    t_alpha_residual: Option<f64>,
}

#[derive(Serialize)]
struct ExtractOut {
    k: u32,
    c_plus: ComplexOut,
    c_minus: ComplexOut,
    radius: f64,
    quadrature_points: usize,
}

#[derive(Serialize)]
struct CheckBoundOut {
    lhs: f64,
    #[serde(rename = "Lambda_est")]
    lambda_est: f64,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    coeff_sum: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c22_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    c22_holds: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    longwang_lhs: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    longwang_rhs: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    longwang_holds: Option<bool>,
}

#[derive(Serialize)]
struct MConstantOut {
    r_star: f64,
    m: f64,
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::Domain(format!("cannot read {}: {e}", path.display())))
}

fn load_map(path: &Path) -> Result<AlphaHarmonicMap, Error> {
    spectrum_from_json(&read_file(path)?)
}

fn print_json<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serialization"));
}

/// 12 significant digits for CSV cells.
fn csv_num(x: f64) -> String {
    format!("{x:.11e}")
}

fn run(cli: Cli) -> Result<(), Error> {
    match cli.command {
        Command::Radii {
            alpha,
            beta,
            lambda,
            corollary33: use_jacobian,
        } => {
            let input = LandauInput::new(alpha, beta, lambda)?;
            let result = if use_jacobian {
                corollary33(&input)?
            } else {
                solve_rho0(&input)?
            };
            print_json(&RadiiOut {
                a: result.a,
                rho0: result.rho0,
                r0_lower: result.r0_lower,
                phi_residual: result.phi_residual,
                positive_r0: result.r0_lower > 0.0,
            });
        }
        Command::Eval { spectrum, z } => {
            let map = load_map(&spectrum)?;
            let value = map.evaluate(z)?;
            print_json(&EvalOut {
                value: value.into(),
            });
        }
        Command::Derivs {
            spectrum,
            z,
            residual_h,
        } => {
            let map = load_map(&spectrum)?;
            let pair = map.wirtinger(z)?;
            let dil = pair.dilations();
            let t_alpha_residual = match residual_h {
                Some(h) => Some(map.t_alpha_residual(z, h)?),
                None => None,
            };
            print_json(&DerivsOut {
                dz: pair.dz.into(),
                dzbar: pair.dzbar.into(),
                lambda_max: dil.lambda_max,
                lambda: dil.lambda_min,
                jacobian: dil.jacobian,
                t_alpha_residual,
            });
        }
        Command::Extract {
            spectrum,
            k,
            r,
            n_points,
        } => {
            let map = load_map(&spectrum)?;
            let n_points =
                n_points.unwrap_or_else(|| default_extraction_points(map.spectrum().max_abs_index()));
            let result = extract_from_map(&map, k, r, n_points)?;
            print_json(&ExtractOut {
                k: result.k,
                c_plus: result.c_plus.into(),
                c_minus: result.c_minus.into(),
                radius: result.radius,
                quadrature_points: result.quadrature_points,
            });
        }
        Command::CheckBound {
            spectrum,
            k,
            corollary22,
            longwang_n,
        } => {
            let map = load_map(&spectrum)?;
            let alpha = map.alpha();
            let c_plus = map.spectrum().coefficient(k as i32).norm();
            let c_minus = map.spectrum().coefficient(-(k as i32)).norm();
            let lhs = theorem21_lhs(k, alpha, c_plus, c_minus)?;
            let lambda_est = map.sup_lambda(&SamplingGrid::default())? * 1.01;
            let mut out = CheckBoundOut {
                lhs,
                lambda_est,
                holds: lhs <= lambda_est,
                coeff_sum: None,
                c22_bound: None,
                c22_holds: None,
                longwang_lhs: None,
                longwang_rhs: None,
                longwang_holds: None,
            };
            if corollary22 {
                let bound = corollary22_bound(k, alpha, lambda_est)?;
                out.coeff_sum = Some(c_plus + c_minus);
                out.c22_bound = Some(bound);
                out.c22_holds = Some(c_plus + c_minus <= bound);
            }
            if let Some(n) = longwang_n {
                let (lw_lhs, lw_rhs) = longwang_term_bound(k, alpha, n)?;
                out.longwang_lhs = Some(lw_lhs);
                out.longwang_rhs = Some(lw_rhs);
                out.longwang_holds = Some(lw_lhs <= lw_rhs + 1e-12);
            }
            print_json(&out);
        }
        Command::Verify {
            spectrum,
            random,
            alpha,
            beta,
            lambda,
            max_index,
            n_samples,
            n_boundary,
            seed,
        } => {
            let seed = match seed {
                Some(s) => s,
                None => match std::env::var("ALPHA_LANDAU_SEED") {
                    Ok(text) => text.parse().map_err(|e| {
                        Error::Domain(format!("ALPHA_LANDAU_SEED must be a u64: {e}"))
                    })?,
                    Err(_) => 0,
                },
            };
            let (map, digest_bytes) = if random {
                let alpha = alpha.ok_or_else(|| {
                    Error::Domain("--random requires --alpha".into())
                })?;
                let beta = beta.ok_or_else(|| {
                    Error::Domain("--random requires --beta".into())
                })?;
                let lambda = lambda.ok_or_else(|| {
                    Error::Domain("--random requires --Lambda".into())
                })?;
                let map = random_admissible_map(alpha, beta, lambda, max_index, seed)?;
                let bytes = spectrum_to_json(&map).into_bytes();
                (map, bytes)
            } else {
                let path = spectrum.ok_or_else(|| {
                    Error::Domain("verify needs --spectrum FILE or --random".into())
                })?;
                let text = read_file(&path)?;
                let map = spectrum_from_json(&text)?;
                (map, text.into_bytes())
            };
            let beta = match beta {
                Some(b) => b,
                None => map.wirtinger(Complex64::ZERO)?.dilations().lambda_min,
            };
            let lambda = match lambda {
                Some(l) => l,
                None => map.sup_lambda(&SamplingGrid::default())? * 1.01,
            };
            let report =
                run_verification(&map, &digest_bytes, beta, lambda, n_samples, n_boundary, seed)?;
            print_json(&report);
        }
        Command::Poisson { boundary, alpha, z } => {
            let data = boundary_from_json(&read_file(&boundary)?)?;
            let value = poisson_solve(alpha, &data, z)?;
            print_json(&EvalOut {
                value: value.into(),
            });
        }
        Command::Sweep {
            alpha_min,
            alpha_max,
            steps,
            beta,
            lambda,
        } => {
            if steps < 2 {
                return Err(Error::Domain(format!(
                    "sweep needs at least 2 steps, got {steps}"
                )));
            }
            println!("alpha,a,rho0,R0_lower,error");
            for i in 0..steps {
                let alpha =
                    alpha_min + (alpha_max - alpha_min) * i as f64 / (steps - 1) as f64;
                let row = LandauInput::new(alpha, beta, lambda).and_then(|inp| solve_rho0(&inp));
                match row {
                    Ok(res) => println!(
                        "{},{},{},{},",
                        csv_num(alpha),
                        csv_num(res.a),
                        csv_num(res.rho0),
                        csv_num(res.r0_lower)
                    ),
                    Err(e) => println!(
                        "{},,,,{}",
                        csv_num(alpha),
                        e.to_string().replace(',', ";")
                    ),
                }
            }
        }
        Command::MConstant => {
            let (r_star, m) = classical_m_constant();
            print_json(&MConstantOut { r_star, m });
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let code = match e {
                Error::Accuracy { .. } => 3,
                _ => 2,
            };
            ExitCode::from(code)
        }
    }
}
