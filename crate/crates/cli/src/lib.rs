//! Command implementations behind the `abvar-aut` binary.
//!
//! Exit codes: 0 success, 1 domain-negative result, 2 usage error,
//! 3 certificate failure.

pub mod report;

use std::str::FromStr;

use abvar_aut::amitsur::{embeddable_in_division_ring, prime_data, EmbeddingRoute, GmrPresentation};
use abvar_aut::arith::nt::prime_divisors;
use abvar_aut::arith::IntPoly;
use abvar_aut::classify::{classify, classify_closed, verify_witness, WitnessCertificate, WitnessId};
use abvar_aut::weil::{
    albert_type_of, center_field, classify_endo, division_index, local_invariants, make_weil_zeta,
    WeilNumber,
};
use abvar_aut::Error;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::Serialize;

use report::{certificate_text, AmitsurReport, ClassifyReport, WeilReport};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_CERTIFICATE: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "abvar-aut",
    version,
    about = "Automorphism groups of simple polarized abelian varieties over finite fields"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Validate a q-Weil number and describe its endomorphism algebra
    Weil(WeilArgs),
    /// Decide whether G_{m,r} embeds in a division ring
    Amitsur(AmitsurArgs),
    /// List the realizable automorphism groups
    Classify(ClassifyArgs),
    /// Replay a construction certificate
    Witness(WitnessArgs),
}

#[derive(Debug, Args)]
pub struct WeilArgs {
    /// q = p^a; implied by --p and --a in the zeta form
    #[arg(long)]
    pub q: Option<String>,
    /// Minimal polynomial, comma-separated coefficients, constant term first
    #[arg(long, allow_hyphen_values = true)]
    pub poly: Option<String>,
    /// m for the Weil number p^(a/2) * zeta_m
    #[arg(long)]
    pub zeta: Option<u64>,
    #[arg(long)]
    pub p: Option<u64>,
    #[arg(long)]
    pub a: Option<u32>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct AmitsurArgs {
    #[arg(long)]
    pub m: u64,
    #[arg(long, allow_hyphen_values = true)]
    pub r: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    /// Odd prime dimension
    #[arg(long, conflicts_with = "closed")]
    pub g: Option<u64>,
    /// Dimension 3 over algebraically closed fields
    #[arg(long)]
    pub closed: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    /// 1-6, alt3, alt4, alt5, closed1-closed5
    #[arg(long, conflicts_with = "all")]
    pub id: Option<String>,
    #[arg(long)]
    pub all: bool,
    /// Dimension for the families 6 and alt3
    #[arg(long)]
    pub g: Option<u64>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

/// What a command printed and how it exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    fn ok(stdout: String, code: i32) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code,
        }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        }
    }

    fn from_error(err: Error) -> Self {
        let code = match err {
            Error::NotWeil(_) => EXIT_NEGATIVE,
            Error::DichotomyViolation(_) => EXIT_CERTIFICATE,
            _ => EXIT_USAGE,
        };
        Outcome {
            stdout: String::new(),
            stderr: format!("error: {err}\n"),
            code,
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn no_csv(cmd: &str) -> Outcome {
    Outcome::usage(format!("csv output is only available for classify, not {cmd}"))
}

pub fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Weil(args) => cmd_weil(&args),
        Command::Amitsur(args) => cmd_amitsur(&args),
        Command::Classify(args) => cmd_classify(&args),
        Command::Witness(args) => cmd_witness(&args),
    }
}

fn parse_weil(args: &WeilArgs) -> Result<WeilNumber, Outcome> {
    let q = match &args.q {
        Some(q) => Some(
            BigInt::from_str(q.trim()).map_err(|_| Outcome::usage(format!("invalid --q {q:?}")))?,
        ),
        None => None,
    };
    match (&args.poly, args.zeta) {
        (Some(poly), None) => {
            if args.p.is_some() || args.a.is_some() {
                return Err(Outcome::usage("--p and --a belong to the --zeta form"));
            }
            let q = q.ok_or_else(|| Outcome::usage("--poly requires --q"))?;
            let h = IntPoly::from_str(poly).map_err(Outcome::from_error)?;
            WeilNumber::from_poly(h, q).map_err(Outcome::from_error)
        }
        (None, Some(m)) => {
            let (p, a) = match (args.p, args.a) {
                (Some(p), Some(a)) => (p, a),
                _ => return Err(Outcome::usage("--zeta requires --p and --a")),
            };
            let w = make_weil_zeta(m, p, a).map_err(Outcome::from_error)?;
            if let Some(q) = q {
                if q != w.q {
                    return Err(Outcome::usage(format!("--q {q} differs from p^a = {}", w.q)));
                }
            }
            Ok(w)
        }
        (Some(_), Some(_)) => Err(Outcome::usage("give exactly one of --poly and --zeta")),
        (None, None) => Err(Outcome::usage("one of --poly or --zeta is required")),
    }
}

pub fn weil_report(w: &WeilNumber) -> Result<WeilReport, Error> {
    let center = center_field(w)?;
    let invariants = local_invariants(w)?;
    let e = center.degree();
    let d = division_index(&invariants);
    let albert_type = albert_type_of(&center, &invariants);
    let (shape, note) = match classify_endo(w) {
        Ok(endo) => (Some(endo.shape), None),
        Err(Error::Unsupported(msg)) => (None, Some(msg)),
        Err(other) => return Err(other),
    };
    Ok(WeilReport {
        weil_number: w.to_string(),
        q: w.q.to_string(),
        p: w.p,
        a: w.a,
        minimal_polynomial: w.h.clone(),
        center,
        invariants,
        e,
        d,
        g: d * e / 2,
        albert_type,
        shape,
        note,
    })
}

fn cmd_weil(args: &WeilArgs) -> Outcome {
    if args.format == Format::Csv {
        return no_csv("weil");
    }
    let w = match parse_weil(args) {
        Ok(w) => w,
        Err(out) => return out,
    };
    match weil_report(&w) {
        Ok(report) => Outcome::ok(
            match args.format {
                Format::Json => to_json(&report),
                _ => report.to_text(),
            },
            EXIT_OK,
        ),
        Err(e) => Outcome::from_error(e),
    }
}

pub fn amitsur_report(m: u64, r: i64) -> Result<AmitsurReport, Error> {
    let pres = GmrPresentation::new(m, r)?;
    let emb = embeddable_in_division_ring(&pres);
    let prime_data = prime_divisors(m)
        .into_iter()
        .map(|p| prime_data(&pres, p))
        .collect::<Result<Vec<_>, _>>()?;
    let verdict = match emb.route {
        Some(EmbeddingRoute::Cyclic) => "EMBEDDABLE (cyclic)".to_string(),
        Some(EmbeddingRoute::Condition1) => "EMBEDDABLE via (1)".to_string(),
        Some(EmbeddingRoute::Condition2) => "EMBEDDABLE via (2)".to_string(),
        None => "NOT EMBEDDABLE".to_string(),
    };
    Ok(AmitsurReport {
        m: pres.m,
        r: pres.r,
        s: pres.s,
        t: pres.t,
        n: pres.n,
        order: pres.order(),
        dicyclic: pres.dicyclic_label(),
        c1: abvar_aut::amitsur::condition_c1(&pres),
        c2: abvar_aut::amitsur::condition_c2(&pres),
        prime_data,
        embeddable: emb.embeddable,
        route: emb.route,
        verdict,
        trace: emb.trace,
    })
}

fn cmd_amitsur(args: &AmitsurArgs) -> Outcome {
    if args.format == Format::Csv {
        return no_csv("amitsur");
    }
    match amitsur_report(args.m, args.r) {
        Ok(report) => {
            let code = if report.embeddable { EXIT_OK } else { EXIT_NEGATIVE };
            let text = match args.format {
                Format::Json => to_json(&report),
                _ => report.to_text(),
            };
            Outcome::ok(text, code)
        }
        Err(e) => Outcome::from_error(e),
    }
}

fn cmd_classify(args: &ClassifyArgs) -> Outcome {
    let report = match (args.g, args.closed) {
        (Some(g), false) => match classify(g) {
            Ok(rows) => ClassifyReport {
                g: Some(g),
                closed: false,
                rows,
            },
            Err(e) => return Outcome::from_error(e),
        },
        (None, true) => ClassifyReport {
            g: None,
            closed: true,
            rows: classify_closed(),
        },
        _ => return Outcome::usage("give exactly one of --g and --closed"),
    };
    let text = match args.format {
        Format::Text => report.to_text(),
        Format::Json => to_json(&report),
        Format::Csv => report.to_csv(),
    };
    Outcome::ok(text, EXIT_OK)
}

fn witness_list(args: &WitnessArgs) -> Result<Vec<(WitnessId, Option<u64>)>, Error> {
    if let Some(g) = args.g {
        if !abvar_aut::arith::nt::is_odd_prime(g) {
            return Err(Error::NotOddPrime(g));
        }
    }
    if let Some(id) = &args.id {
        let id: WitnessId = id.parse()?;
        return Ok(vec![(id, args.g)]);
    }
    // with --all, --g goes to the families whose side condition it meets
    Ok(WitnessId::all()
        .into_iter()
        .map(|id| {
            let g = args.g.filter(|&g| id.takes_g() && id.accepts_g(g));
            (id, g)
        })
        .collect())
}

fn cmd_witness(args: &WitnessArgs) -> Outcome {
    if args.format == Format::Csv {
        return no_csv("witness");
    }
    if args.id.is_none() && !args.all {
        return Outcome::usage("one of --id or --all is required");
    }
    let list = match witness_list(args) {
        Ok(list) => list,
        Err(e) => return Outcome::from_error(e),
    };
    let mut certs: Vec<WitnessCertificate> = Vec::new();
    for (id, g) in list {
        match verify_witness(id, g) {
            Ok(cert) => certs.push(cert),
            Err(e) => return Outcome::from_error(e),
        }
    }
    let code = if certs.iter().all(|c| c.overall) {
        EXIT_OK
    } else {
        EXIT_CERTIFICATE
    };
    let text = match (args.format, args.all) {
        (Format::Json, false) => to_json(&certs[0]),
        (Format::Json, true) => to_json(&certs),
        _ => certs
            .iter()
            .map(certificate_text)
            .collect::<Vec<_>>()
            .join("\n"),
    };
    Outcome::ok(text, code)
}
