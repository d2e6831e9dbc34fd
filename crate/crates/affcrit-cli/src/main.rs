//! Command-line surface for the affcrit library.
//!
//! Exit codes: 0 success, 2 precondition violation (one-line diagnostic on
//! stderr naming the precondition), 64 unknown subcommand, 65 parse failure.
//! Output is deterministic for fixed inputs; all rationals print as `p/q`
//! strings. `--format json` (default) emits the documented schemas, `tsv`
//! emits tab-separated rows.

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use affcrit::blocks::{bggh_matrix, block_partition, derived_simple_characters, projective_flag};
use affcrit::characters::{
    p_series, q_series, restricted_verma_character, verma_character, CoeffSeries,
};
use affcrit::linkage::{
    classical_class, classify_class, deformed_integral_roots, refinement_check, restricted_class,
    ClassReportJson, DeformationSpec,
};
use affcrit::rootsys::{AffineWeight, CartanType, FiniteRoot, RootSystemData};
use affcrit::weights::{is_critical, DepthCap, Window, DEFAULT_DEPTH_CAP};
use affcrit::weyl::{integral_generators, integral_roots, orbit_dot, NConstraint, OrbitResult};
use affcrit::Rat;

#[derive(Parser)]
#[command(
    name = "affcrit",
    version,
    about = "Exact critical-level combinatorics of affine Kac-Moody algebras",
    after_help = "Weights are comma-separated rationals f1,...,fr,level,delta in \
                  fundamental-weight coordinates. Depth defaults to 4 and is capped \
                  at 12 unless --unsafe-depth is given; the env var AFFCRIT_DEPTH_CAP \
                  overrides the cap."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Subcommand)]
enum Command {
    /// Print root system data for a simple type (e.g. A2, D4, E8)
    Rootsys {
        /// Cartan type, e.g. A1
        cartan_type: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Evaluate the invariant bilinear form on two weights
    Pairing {
        #[arg(long = "type")]
        cartan_type: String,
        /// First weight, f1,...,fr,level,delta
        #[arg(long)]
        x: String,
        /// Second weight
        #[arg(long)]
        y: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Test whether a weight has critical level
    Critical {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Integral root families of a weight, optionally in a deformed regime
    IntegralRoots {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        weight: String,
        /// One of: closed, generic, subgeneric:<root coords>
        #[arg(long)]
        deform: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Dot orbit of a weight under its integral reflections inside a window
    Orbit {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        /// Restrict generators to these positive finite roots (repeatable)
        #[arg(long)]
        alpha: Vec<String>,
        #[arg(long)]
        unsafe_depth: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Restricted or classical linkage class inside a window
    Class {
        #[arg(long, value_parser = ["restricted", "classical"])]
        mode: String,
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        #[arg(long)]
        unsafe_depth: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Classify the restricted class of a critical weight by its bar orbit
    Classify {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check that rank-one orbits refine to the restricted class
    RefineCheck {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        #[arg(long)]
        unsafe_depth: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Coefficients of the colored-partition series p(n)
    Pcoeff {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Coefficients of the inverse series q(n)
    Qcoeff {
        #[arg(long)]
        rank: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Truncated character of a Verma or restricted Verma module
    Char {
        /// verma or rverma
        #[arg(value_parser = ["verma", "rverma"])]
        kind: String,
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        #[arg(long)]
        unsafe_depth: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Partition a critical window into restricted linkage classes
    Blocks {
        #[arg(long = "type")]
        cartan_type: String,
        /// Window ceiling weight
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        #[arg(long)]
        unsafe_depth: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Restricted Verma flag of the restricted projective cover
    Flag {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        weight: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// BGGH reciprocity matrix of a generic or subgeneric class
    Bggh {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        #[arg(long)]
        unsafe_depth: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Derived simple characters of a generic or subgeneric class
    Simples {
        #[arg(long = "type")]
        cartan_type: String,
        #[arg(long)]
        weight: String,
        #[arg(long, default_value_t = 4)]
        depth: u32,
        #[arg(long)]
        unsafe_depth: bool,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
}

enum CliError {
    /// Malformed input values: exit 65.
    Parse(String),
    /// Violated operation precondition: exit 2.
    Precondition(affcrit::Error),
}

impl From<affcrit::Error> for CliError {
    fn from(e: affcrit::Error) -> Self {
        CliError::Precondition(e)
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp
                | ErrorKind::DisplayVersion
                | ErrorKind::DisplayHelpOnMissingArgumentOrSubcommand => ExitCode::SUCCESS,
                ErrorKind::InvalidSubcommand => ExitCode::from(64),
                _ => ExitCode::from(65),
            };
        }
    };
    match run(cli.command) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(CliError::Parse(msg)) => {
            eprintln!("parse error: {msg}");
            ExitCode::from(65)
        }
        Err(CliError::Precondition(e)) => {
            eprintln!("{e}");
            ExitCode::from(2)
        }
    }
}

fn parse_type(s: &str) -> Result<RootSystemData, CliError> {
    let mut chars = s.chars();
    let letter = chars
        .next()
        .filter(|c| c.is_ascii_alphabetic())
        .ok_or_else(|| CliError::Parse(format!("bad Cartan type {s:?}")))?;
    let _rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| CliError::Parse(format!("bad Cartan type {s:?}: expected letter + rank")))?;
    let _ = letter;
    // The shape is fine; rank validity is an operation precondition.
    let t: CartanType = s.parse().map_err(CliError::Precondition)?;
    RootSystemData::build(t).map_err(CliError::Precondition)
}

fn parse_weight(rs: &RootSystemData, s: &str) -> Result<AffineWeight, CliError> {
    let parts: Vec<&str> = s.split(',').collect();
    let expected = rs.rank() + 2;
    if parts.len() != expected {
        return Err(CliError::Parse(format!(
            "weight {s:?} has {} coordinates, expected {expected} (f1,...,fr,level,delta)",
            parts.len()
        )));
    }
    let coords: Result<Vec<Rat>, _> = parts.iter().map(|p| p.trim().parse::<Rat>()).collect();
    let mut coords =
        coords.map_err(|e| CliError::Parse(format!("weight {s:?}: bad rational ({e})")))?;
    let delta = coords.pop().unwrap();
    let level = coords.pop().unwrap();
    Ok(AffineWeight::new(coords, level, delta))
}

fn parse_root(rs: &RootSystemData, s: &str) -> Result<FiniteRoot, CliError> {
    let coords: Result<Vec<i64>, _> = s.split(',').map(|p| p.trim().parse::<i64>()).collect();
    let coords = coords
        .map_err(|_| CliError::Parse(format!("root {s:?}: expected comma-separated integers")))?;
    if coords.len() != rs.rank() {
        return Err(CliError::Parse(format!(
            "root {s:?} has {} coordinates, expected {}",
            coords.len(),
            rs.rank()
        )));
    }
    Ok(FiniteRoot::new(coords))
}

fn parse_deform(rs: &RootSystemData, s: &str) -> Result<DeformationSpec, CliError> {
    match s {
        "closed" => Ok(DeformationSpec::Closed),
        "generic" => Ok(DeformationSpec::Generic),
        _ => match s.strip_prefix("subgeneric:") {
            Some(root) => Ok(DeformationSpec::Subgeneric(parse_root(rs, root)?)),
            None => Err(CliError::Parse(format!(
                "bad --deform value {s:?}: expected closed, generic or subgeneric:<root>"
            ))),
        },
    }
}

fn resolve_cap(unsafe_depth: bool) -> Result<DepthCap, CliError> {
    if unsafe_depth {
        return Ok(DepthCap::unlimited());
    }
    match std::env::var("AFFCRIT_DEPTH_CAP") {
        Ok(v) => v
            .parse::<u32>()
            .map(DepthCap)
            .map_err(|_| CliError::Parse(format!("AFFCRIT_DEPTH_CAP={v:?} is not an integer"))),
        Err(_) => Ok(DepthCap(DEFAULT_DEPTH_CAP)),
    }
}

fn json<T: serde::Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("output serializes");
    s.push('\n');
    s
}

/// Window-truncated results name their truncation on stderr.
fn note_truncation(ceiling: &AffineWeight, depth: u32) {
    eprintln!(
        "window: ceiling={}; depth={depth}",
        serde_json::to_string(ceiling).expect("weight serializes")
    );
}

fn weight_json(w: &AffineWeight) -> String {
    serde_json::to_string(w).expect("weight serializes")
}

fn orbit_output(orbit: &OrbitResult, format: Format) -> String {
    match format {
        Format::Json => json(orbit),
        Format::Tsv => {
            let mut out = String::new();
            for m in &orbit.members {
                out.push_str(&format!("member\t{}\n", weight_json(m)));
            }
            out.push_str(&format!("truncated\t{}\n", orbit.truncated));
            out
        }
    }
}

fn series_output(series: &CoeffSeries, format: Format) -> String {
    match format {
        Format::Json => json(&series.values),
        Format::Tsv => {
            let mut out = String::new();
            for (i, v) in series.values.iter().enumerate() {
                out.push_str(&format!("{i}\t{v}\n"));
            }
            out
        }
    }
}

fn constraint_tsv(c: &NConstraint) -> String {
    match c {
        NConstraint::AllIntegers => "all".to_string(),
        NConstraint::Residue { rem, modulus } => format!("{rem} mod {modulus}"),
    }
}

fn run(command: Command) -> Result<String, CliError> {
    match command {
        Command::Rootsys {
            cartan_type,
            format,
        } => {
            let rs = parse_type(&cartan_type)?;
            let data = rs.to_json();
            Ok(match format {
                Format::Json => json(&data),
                Format::Tsv => {
                    let mut out = String::new();
                    out.push_str(&format!("family\t{}\n", data.family));
                    out.push_str(&format!("rank\t{}\n", data.rank));
                    out.push_str(&format!(
                        "cartan_matrix\t{}\n",
                        serde_json::to_string(&data.cartan_matrix).unwrap()
                    ));
                    out.push_str(&format!(
                        "d_values\t{}\n",
                        serde_json::to_string(&data.d_values).unwrap()
                    ));
                    for r in &data.positive_roots {
                        out.push_str(&format!(
                            "positive_root\t{}\n",
                            serde_json::to_string(r).unwrap()
                        ));
                    }
                    out.push_str(&format!(
                        "theta\t{}\n",
                        serde_json::to_string(&data.theta).unwrap()
                    ));
                    out.push_str(&format!("dual_coxeter\t{}\n", data.dual_coxeter));
                    out.push_str(&format!(
                        "rho_finite\t{}\n",
                        serde_json::to_string(
                            &data
                                .rho_finite
                                .iter()
                                .map(Rat::to_string)
                                .collect::<Vec<_>>()
                        )
                        .unwrap()
                    ));
                    out
                }
            })
        }
        Command::Pairing {
            cartan_type,
            x,
            y,
            format,
        } => {
            let rs = parse_type(&cartan_type)?;
            let xw = parse_weight(&rs, &x)?;
            let yw = parse_weight(&rs, &y)?;
            let value = rs.pairing(&xw, &yw);
            Ok(match format {
                Format::Json => json(&value.to_string()),
                Format::Tsv => format!("{value}\n"),
            })
        }
        Command::Critical {
            cartan_type,
            weight,
            format,
        } => {
            let rs = parse_type(&cartan_type)?;
            let w = parse_weight(&rs, &weight)?;
            let value = is_critical(&rs, &w);
            Ok(match format {
                Format::Json => json(&value),
                Format::Tsv => format!("{value}\n"),
            })
        }
        Command::IntegralRoots {
            cartan_type,
            weight,
            deform,
            format,
        } => {
            let rs = parse_type(&cartan_type)?;
            let w = parse_weight(&rs, &weight)?;
            let desc = match deform {
                None => integral_roots(&rs, &w),
                Some(d) => deformed_integral_roots(&rs, &w, &parse_deform(&rs, &d)?)?,
            };
            Ok(match format {
                Format::Json => json(&desc),
                Format::Tsv => {
                    let mut out = String::new();
                    out.push_str(&format!("critical\t{}\n", desc.critical));
                    out.push_str(&format!(
                        "imaginary_integral\t{}\n",
                        desc.imaginary_integral
                    ));
                    for (root, constraint) in &desc.entries {
                        out.push_str(&format!(
                            "entry\t{}\t{}\n",
                            serde_json::to_string(&root.coords).unwrap(),
                            constraint_tsv(constraint)
                        ));
                    }
                    out
                }
            })
        }
        Command::Orbit {
            cartan_type,
            weight,
            depth,
            alpha,
            unsafe_depth,
            format,
        } => {
            let rs = parse_type(&cartan_type)?;
            let w = parse_weight(&rs, &weight)?;
            let cap = resolve_cap(unsafe_depth)?;
            cap.check(depth)?;
            let window = Window::below(w.clone(), depth);
            let mut desc = integral_roots(&rs, &w);
            if !alpha.is_empty() {
                let chosen: Result<Vec<FiniteRoot>, CliError> =
                    alpha.iter().map(|a| parse_root(&rs, a)).collect();
                let chosen = chosen?;
                for root in &chosen {
                    if !rs.is_positive_root(&root.coords) {
                        return Err(affcrit::Error::NotAPositiveRoot {
                            coords: root.coords.clone(),
                        }
                        .into());
                    }
                }
                desc.entries
                    .retain(|(r, _)| chosen.contains(r) || chosen.contains(&r.negated()));
            }
            let gens = integral_generators(&desc, depth);
            let orbit = orbit_dot(&rs, &w, &gens, &window)?;
            note_truncation(&w, depth);
            Ok(orbit_output(&orbit, format))
        }
        Command::Class {
            mode,
            cartan_type,
            weight,
            depth,
            unsafe_depth,
            format,
        } => {
            let rs = parse_type(&cartan_type)?;
            let w = parse_weight(&rs, &weight)?;
            resolve_cap(unsafe_depth)?.check(depth)?;
            let window = Window::below(w.clone(), depth);
            let orbit = match mode.as_str() {
                "restricted" => restricted_class(&rs, &w, &window)?,
                _ => classical_class(&rs, &w, &window)?,
            };
            note_truncation(&w, depth);
            Ok(orbit_output(&orbit, format))
        }
        Command::Classify {
            cartan_type,
            weight,
            format,
        } => {
            let rs = parse_type(&cartan_type)?;
            let w = parse_weight(&rs, &weight)?;
            let report = ClassReportJson::from(&classify_class(&rs, &w)?);
            Ok(match format {
                Format::Json => json(&report),
                Format::Tsv => {
                    let mut out = String::new();
                    out.push_str(&format!("kind\t{}\n", report.kind));
                    out.push_str(&format!(
                        "alpha\t{}\n",
                        report
                            .alpha
                            .as_ref()
                            .map(|a| serde_json::to_string(a).unwrap())
                            .unwrap_or_else(|| "null".into())
                    ));
                    out.push_str(&format!("orbit_size\t{}\n", report.orbit_size));
                    for w in &report.finite_orbit {
                        out.push_str(&format!(
                            "finite_orbit\t{}\n",
                            serde_json::to_string(w).unwrap()
                        ));
                    }
                    out
                }
            })
        }
        Command::RefineCheck {
            cartan_type,
            weight,
            depth,
            unsafe_depth,
            format,
        } => {
            let rs = parse_type(&cartan_type)?;
            let w = parse_weight(&rs, &weight)?;
            resolve_cap(unsafe_depth)?.check(depth)?;
            let window = Window::below(w.clone(), depth);
            let value = refinement_check(&rs, &w, &window)?;
            note_truncation(&w, depth);
            Ok(match format {
                Format::Json => json(&value),
                Format::Tsv => format!("{value}\n"),
            })
        }
        Command::Pcoeff { rank, n, format } => {
            if rank == 0 {
                return Err(CliError::Parse("--rank must be positive".into()));
            }
            Ok(series_output(&p_series(rank, n), format))
        }
        Command::Qcoeff { rank, n, format } => {
            if rank == 0 {
                return Err(CliError::Parse("--rank must be positive".into()));
            }
            Ok(series_output(&q_series(rank, n), format))
        }
        Command::Char {
            kind,
            cartan_type,
            weight,
            depth,
            unsafe_depth,
            format,
        } => {
            let rs = parse_type(&cartan_type)?;
            let w = parse_weight(&rs, &weight)?;
            let cap = resolve_cap(unsafe_depth)?;
            let ch = match kind.as_str() {
                "verma" => verma_character(&rs, &w, depth, cap)?,
                _ => restricted_verma_character(&rs, &w, depth, cap)?,
            };
            note_truncation(&w, depth);
            Ok(match format {
                Format::Json => json(&ch.to_json(&rs)),
                Format::Tsv => ch.to_tsv(&rs),
            })
        }
        Command::Blocks {
            cartan_type,
            weight,
            depth,
            unsafe_depth,
            format,
        } => {
            let rs = parse_type(&cartan_type)?;
            let w = parse_weight(&rs, &weight)?;
            let cap = resolve_cap(unsafe_depth)?;
            cap.check(depth)?;
            let window = Window::below(w.clone(), depth);
            let partition = block_partition(&rs, &window, cap)?;
            note_truncation(&w, depth);
            Ok(match format {
                Format::Json => json(&partition),
                Format::Tsv => {
                    let mut out = String::new();
                    for class in &partition.classes {
                        for m in &class.members {
                            out.push_str(&format!(
                                "{}\t{}\n",
                                weight_json(&class.representative),
                                weight_json(m)
                            ));
                        }
                    }
                    out
                }
            })
        }
        Command::Flag {
            cartan_type,
            weight,
            format,
        } => {
            let rs = parse_type(&cartan_type)?;
            let w = parse_weight(&rs, &weight)?;
            let flag = projective_flag(&rs, &w)?;
            Ok(match format {
                Format::Json => json(&flag),
                Format::Tsv => {
                    let mut out = String::new();
                    for step in &flag.flag {
                        out.push_str(&format!(
                            "{}\t{}\n",
                            weight_json(&step.weight),
                            step.multiplicity
                        ));
                    }
                    out
                }
            })
        }
        Command::Bggh {
            cartan_type,
            weight,
            depth,
            unsafe_depth,
            format,
        } => {
            let rs = parse_type(&cartan_type)?;
            let w = parse_weight(&rs, &weight)?;
            resolve_cap(unsafe_depth)?.check(depth)?;
            let window = Window::below(w.clone(), depth);
            let matrix = bggh_matrix(&rs, &w, &window)?;
            note_truncation(&w, depth);
            Ok(match format {
                Format::Json => json(&matrix),
                Format::Tsv => matrix.to_tsv(),
            })
        }
        Command::Simples {
            cartan_type,
            weight,
            depth,
            unsafe_depth,
            format,
        } => {
            let rs = parse_type(&cartan_type)?;
            let w = parse_weight(&rs, &weight)?;
            let cap = resolve_cap(unsafe_depth)?;
            cap.check(depth)?;
            let window = Window::below(w.clone(), depth);
            let solved = derived_simple_characters(&rs, &w, &window, depth, cap)?;
            note_truncation(&w, depth);
            Ok(match format {
                Format::Json => {
                    let rows: Vec<_> = solved.iter().map(|s| s.to_json(&rs)).collect();
                    json(&rows)
                }
                Format::Tsv => {
                    let mut out = String::new();
                    for s in &solved {
                        let member = weight_json(&s.member);
                        for (w, h, v) in s.character.support_weights(&rs) {
                            out.push_str(&format!(
                                "{member}\t{}\t{}\t{h}\t{v}\n",
                                s.valid_depth,
                                weight_json(&w)
                            ));
                        }
                    }
                    out
                }
            })
        }
    }
}
