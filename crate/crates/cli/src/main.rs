//! `fockcrystal`: JSON front end to the library.
//!
//! Exit codes: 0 success, 1 a `verify` criterion failed, 2 input error,
//! 3 internal consistency failure.

mod graph;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use fockcrystal::crystal::{crystal_component, crystal_graph, kleshchev_charge, peel};
use fockcrystal::mullineux::{
    m_e_classical, m_e_crystal, mullineux_symbol, phi, phi_d, phi_uglov, DigitMode,
};
use fockcrystal::partitions::{parse_charge, parse_charged, parse_partition};
use fockcrystal::rational;
use fockcrystal::verify::{self, Profile};
use fockcrystal::walls::{
    finite_dim_labels, is_asymptotic, opposite_charge, ringel_d, transport_psi, wall_between,
    wc_asymptotic, CherednikParams,
};
use fockcrystal::{beta_decompose, beta_recompose, Error, TripleCoordinates};

use output::{charged, coordinates};

#[derive(Parser)]
#[command(name = "fockcrystal", version, about = "Crystals, Mullineux involutions and wall-crossing on Fock spaces")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

/// A charged multipartition on the command line.
#[derive(clap::Args)]
struct Vertex {
    /// Rank e of the ŝl_e-crystal.
    #[arg(long)]
    e: usize,
    /// Multicharge, lowest component first, e.g. "5,-1,0".
    #[arg(long, allow_hyphen_values = true)]
    charge: String,
    /// Multipartition, e.g. "1|3.2|-".
    #[arg(long, allow_hyphen_values = true)]
    mp: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Consistent,
    Literal,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProfileArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// The generalized Mullineux involution Φ.
    Phi(Vertex),
    /// Φ_{e,s} on an Uglov multipartition.
    PhiUglov(Vertex),
    /// Φ^(d), acting on the d-adic digits of σ.
    PhiD {
        #[command(flatten)]
        vertex: Vertex,
        #[arg(long)]
        d: usize,
        #[arg(long, value_enum, default_value = "consistent")]
        mode: ModeArg,
    },
    /// The Mullineux involution m_e on an e-regular partition.
    Mullineux {
        #[arg(long)]
        e: usize,
        #[arg(long, allow_hyphen_values = true)]
        partition: String,
    },
    /// The triple coordinates β.
    Beta(Vertex),
    /// β⁻¹ of triple coordinates.
    Recompose {
        #[arg(long)]
        e: usize,
        /// e-side multipartition.
        #[arg(long, allow_hyphen_values = true)]
        e_side: String,
        /// Base charge r.
        #[arg(long, allow_hyphen_values = true)]
        e_charge: String,
        #[arg(long, allow_hyphen_values = true, default_value = "-")]
        sigma: String,
        /// ℓ-side multipartition with e components.
        #[arg(long, allow_hyphen_values = true)]
        l_side: String,
        /// Dual charge ṙ.
        #[arg(long, allow_hyphen_values = true)]
        l_charge: String,
    },
    /// The ŝl_e-crystal up to a size bound.
    CrystalGraph {
        #[arg(long)]
        e: usize,
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
        #[arg(long)]
        n_max: usize,
        /// Restrict to the component of this vertex.
        #[arg(long, allow_hyphen_values = true)]
        mp: Option<String>,
        /// Graphviz output instead of JSON.
        #[arg(long)]
        dot: bool,
    },
    /// Labels of finite-dimensional simples of size n.
    FiniteDims {
        #[arg(long)]
        e: usize,
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
        #[arg(long)]
        n: usize,
    },
    /// The wall-crossing across κ = 0 at an asymptotic integral parameter.
    Wallcross(Vertex),
    /// The lift of a charge used for Kleshchev multipartitions.
    KleshchevCharge {
        #[arg(long)]
        e: usize,
        #[arg(long, allow_hyphen_values = true)]
        charge: String,
        #[arg(long)]
        n: usize,
    },
    /// Combinatorial Ringel duality.
    Ringel(Vertex),
    /// Runs the acceptance criteria.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        profile: ProfileArg,
        /// Comma-separated criterion ids.
        #[arg(long, value_delimiter = ',')]
        only: Vec<String>,
    },
}

enum Failure {
    Input(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        if err.is_internal() {
            Failure::Internal(err.to_string())
        } else {
            Failure::Input(err.to_string())
        }
    }
}

type Outcome = Result<(String, ExitCode), Failure>;

fn emit(v: Value) -> Outcome {
    Ok((output::render(&v), ExitCode::SUCCESS))
}

fn vertex(v: &Vertex) -> Result<fockcrystal::ChargedMultipartition, Failure> {
    Ok(parse_charged(&v.mp, &v.charge)?)
}

fn run(cmd: Command) -> Outcome {
    match cmd {
        Command::Phi(v) => {
            let x = vertex(&v)?;
            let r = phi(&x, v.e)?;
            emit(json!({
                "input": charged(&x),
                "image": charged(&r.image),
                "coordinates_in": coordinates(&r.coordinates_in),
                "coordinates_out": coordinates(&r.coordinates_out),
                "fixed_up_to_shift": r.fixed_up_to_shift(&x),
            }))
        }
        Command::PhiUglov(v) => {
            let x = vertex(&v)?;
            let image = phi_uglov(&x, v.e)?;
            let (_, word) = peel(&x, v.e);
            emit(json!({
                "input": charged(&x),
                "image": charged(&image),
                "word": word.to_string(),
            }))
        }
        Command::PhiD { vertex: v, d, mode } => {
            let x = vertex(&v)?;
            let mode = match mode {
                ModeArg::Consistent => DigitMode::Consistent,
                ModeArg::Literal => DigitMode::Literal,
            };
            let image = phi_d(&x, v.e, d, mode)?;
            emit(json!({
                "input": charged(&x),
                "image": charged(&image),
                "d": d,
                "mode": mode,
            }))
        }
        Command::Mullineux { e, partition } => {
            let lam = parse_partition(&partition)?;
            let image = m_e_crystal(&lam, e)?;
            let classical = m_e_classical(&lam, e)?;
            if classical != image {
                return Err(Failure::Internal(format!(
                    "crystal image {image} and symbol image {classical} differ"
                )));
            }
            emit(json!({
                "input": lam.to_string(),
                "image": image.to_string(),
                "symbol": mullineux_symbol(&lam, e)?,
            }))
        }
        Command::Beta(v) => {
            let x = vertex(&v)?;
            let c = beta_decompose(&x, v.e)?;
            emit(json!({ "input": charged(&x), "coordinates": coordinates(&c) }))
        }
        Command::Recompose {
            e,
            e_side,
            e_charge,
            sigma,
            l_side,
            l_charge,
        } => {
            let c = TripleCoordinates {
                e_side: parse_charged(&e_side, &e_charge)?,
                sigma: parse_partition(&sigma)?,
                l_side: parse_charged(&l_side, &l_charge)?,
            };
            let image = beta_recompose(&c, e)?;
            emit(json!({ "coordinates": coordinates(&c), "image": charged(&image) }))
        }
        Command::CrystalGraph {
            e,
            charge,
            n_max,
            mp,
            dot,
        } => {
            if e < 1 {
                return Err(Failure::Input("e must be at least 1".into()));
            }
            let s = parse_charge(&charge)?;
            let g = match mp {
                Some(mp) => crystal_component(&parse_charged(&mp, &charge)?, e, n_max),
                None => crystal_graph(&s, e, n_max),
            };
            if dot {
                Ok((graph::to_dot(&g), ExitCode::SUCCESS))
            } else {
                emit(graph::to_json(&g))
            }
        }
        Command::FiniteDims { e, charge, n } => {
            if e < 2 {
                return Err(Error::InvalidRank { min: 2, got: e }.into());
            }
            let s = parse_charge(&charge)?;
            let labels = finite_dim_labels(&s, e, n);
            emit(json!({
                "e": e,
                "charge": s,
                "n": n,
                "count": labels.len(),
                "labels": labels.iter().map(charged).collect::<Vec<_>>(),
            }))
        }
        Command::Wallcross(v) => {
            let x = vertex(&v)?;
            let (s, e, n) = (x.charge(), v.e, x.size());
            let p = CherednikParams::integral(s, e, n)?;
            let pi = is_asymptotic(&p).ok_or(Error::NotAsymptotic)?;
            let s_opp = opposite_charge(s, e, n)?;
            let q = CherednikParams::new(
                *p.kappa() - rational::int(1),
                s_opp.entries().iter().map(|&t| rational::int(t)).collect(),
                n,
            )?;
            let walls = wall_between(&p, &q)?;
            let image = wc_asymptotic(&x, e)?;
            let via_phi = phi(&x, e)
                .and_then(|r| transport_psi(&r.image, &s_opp.neg(), e))
                .ok();
            let transposed = image.charged_transpose();
            emit(json!({
                "input": charged(&x),
                "kappa": rational::format(p.kappa()),
                "kappa_opposite": rational::format(q.kappa()),
                "asymptotic_permutation": pi.iter().map(|i| i + 1).collect::<Vec<_>>(),
                "opposite_charge": s_opp,
                "walls": walls,
                "image": charged(&image),
                "psi_phi": via_phi.as_ref().map(charged),
                "identity_holds": via_phi.map(|y| y == transposed),
            }))
        }
        Command::KleshchevCharge { e, charge, n } => {
            if e < 2 {
                return Err(Error::InvalidRank { min: 2, got: e }.into());
            }
            let s = parse_charge(&charge)?;
            emit(json!({
                "charge": s,
                "lift": kleshchev_charge(&s, e, n),
            }))
        }
        Command::Ringel(v) => {
            let x = vertex(&v)?;
            let r = ringel_d(&x, v.e)?;
            emit(json!({
                "input": charged(&x),
                "image": charged(&r.image),
                "finite_dimensional": r.finite_dimensional,
            }))
        }
        Command::Verify { profile, only } => {
            let profile = match profile {
                ProfileArg::Quick => Profile::Quick,
                ProfileArg::Full => Profile::Full,
            };
            let known = verify::criterion_ids();
            if let Some(bad) = only.iter().find(|o| !known.contains(&o.as_str())) {
                return Err(Failure::Input(format!("unknown criterion {bad:?}")));
            }
            let report = verify::run(profile, &only);
            let code = if report.ok() { ExitCode::SUCCESS } else { ExitCode::from(1) };
            let text = output::render(&serde_json::to_value(&report).map_err(|e| Failure::Internal(e.to_string()))?);
            Ok((text, code))
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("FOCKCRYSTAL_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Failure::Input(format!("FOCKCRYSTAL_THREADS must be a positive integer, got {raw:?}")))?;
    if n == 0 {
        return Err(Failure::Input("FOCKCRYSTAL_THREADS must be positive".into()));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Internal(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{err}");
                return ExitCode::SUCCESS;
            }
            return fail(Failure::Input(err.render().to_string().trim().to_string()));
        }
    };
    match configure_threads().and_then(|()| run(cli.command)) {
        Ok((text, code)) => {
            print!("{text}");
            code
        }
        Err(f) => fail(f),
    }
}

fn fail(f: Failure) -> ExitCode {
    let (kind, message, code) = match f {
        Failure::Input(m) => ("input", m, 2),
        Failure::Internal(m) => ("internal", m, 3),
    };
    print!("{}", output::render(&json!({ "error": { "kind": kind, "message": message } })));
    ExitCode::from(code)
}
