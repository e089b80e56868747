//! Command-line surface. Five subcommands over the library:
//!
//! * `av` — full pipeline for one weight, JSON out, `--verify` also runs
//!   the insertion-based oracle and asserts agreement;
//! * `diagram` — the diagram roots and the witness antichain, JSON out;
//! * `census` — width census report, JSON out;
//! * `verify` — Springer identities plus (for small classical ranks) the
//!   downset bijection, JSON out;
//! * `hasse` — DOT text of the Hasse diagram.
//!
//! Weights are comma-separated exact rationals (`a/b` or integers); floats
//! are rejected so the integrality predicates stay exact. Exit codes:
//! 0 ok, 2 parse/input, 3 dominance, 4 oracle disagreement, 5 infeasible
//! census.

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::avcore::associated_variety;
use crate::census::{verify_bijection_classical, verify_springer_identities, width_census, BijectionReport, SpringerReport};
use crate::diagram::{
    compute_diagram, resolve_weight_input, HermitianContext, WeightCoords, WeightInput, WeightMode,
};
use crate::root_data::{HermitianType, Weight};
use crate::rs_oracle::k_prime;
use crate::{Error, Rat};

#[derive(Parser, Debug)]
#[command(
    name = "hwhc",
    version,
    about = "Associated varieties and GK dimensions of highest weight Harish-Chandra modules"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Associated variety, orbit data and GK dimension for one weight.
    Av(QueryArgs),
    /// The diagram of a weight and a maximum antichain witnessing its width.
    Diagram(QueryArgs),
    /// Enumerate all lower order ideals and bucket them by width.
    Census(TypeArgs),
    /// Springer identities and (small classical ranks) the downset bijection.
    Verify(TypeArgs),
    /// Hasse diagram of the noncompact poset in DOT format.
    Hasse(TypeArgs),
}

#[derive(Args, Debug)]
pub struct TypeArgs {
    /// Family: su | sp | so_star | so_odd | so_even | e6 | e7.
    #[arg(long = "type")]
    pub family: String,
    /// p for su(p,q).
    #[arg(long)]
    pub p: Option<usize>,
    /// q for su(p,q).
    #[arg(long)]
    pub q: Option<usize>,
    /// n for sp(2n,R), so*(2n), so(2,2n-1), so(2,2n-2).
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Args, Debug)]
pub struct QueryArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// λ+ρ in ε-coordinates, e.g. "25/2,23/2,...,-17/2".
    #[arg(long, allow_hyphen_values = true)]
    pub rho_shifted: Option<String>,
    /// λ in ε-coordinates; ρ is added internally.
    #[arg(long, allow_hyphen_values = true)]
    pub highest_weight: Option<String>,
    /// ⟨λ+ρ, α_i∨⟩, one exact rational per simple root.
    #[arg(long, allow_hyphen_values = true)]
    pub coroot_labels: Option<String>,
    /// Also run the insertion-based oracle and require agreement (av only).
    #[arg(long)]
    pub verify: bool,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Dominance(String),
    OracleDisagreement { report: String },
    Infeasible(String),
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Input(_) => 2,
            Self::Dominance(_) => 3,
            Self::OracleDisagreement { .. } => 4,
            Self::Infeasible(_) => 5,
            Self::Internal(_) => 1,
        }
    }

    /// JSON payload to print on stdout even though the command failed.
    pub fn stdout_payload(&self) -> Option<&str> {
        match self {
            Self::OracleDisagreement { report } => Some(report),
            _ => None,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Self::Input(m) | Self::Dominance(m) | Self::Infeasible(m) | Self::Internal(m) => {
                f.write_str(m)
            }
            Self::OracleDisagreement { .. } => {
                f.write_str("oracle disagreement: k(λ) and k'(λ) differ; this is a bug")
            }
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::NotKDominant { .. } => Self::Dominance(e.to_string()),
            Error::InfeasibleCensus { .. } => Self::Infeasible(e.to_string()),
            Error::ParameterOutOfBounds { .. }
            | Error::DimensionMismatch { .. }
            | Error::NonMonotoneInput { .. } => Self::Input(e.to_string()),
            other => Self::Internal(other.to_string()),
        }
    }
}

#[derive(Serialize)]
struct AvOutput {
    #[serde(rename = "type")]
    type_label: String,
    lambda_rho: Vec<String>,
    integrality: String,
    y_size: usize,
    width: usize,
    k: usize,
    orbit_label: String,
    orbit_dim: usize,
    gk_dim: usize,
    delta: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    oracle_k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

#[derive(Serialize)]
struct DiagramOutput {
    #[serde(rename = "type")]
    type_label: String,
    lambda_rho: Vec<String>,
    integrality: String,
    y: Vec<String>,
    width: usize,
    witness: Vec<String>,
}

#[derive(Serialize)]
struct VerifyOutput {
    #[serde(rename = "type")]
    type_label: String,
    springer: SpringerReport,
    #[serde(skip_serializing_if = "Option::is_none")]
    bijection: Option<BijectionReport>,
    pass: bool,
}

pub fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Av(args) => cmd_av(args),
        Command::Diagram(args) => cmd_diagram(args),
        Command::Census(args) => cmd_census(args),
        Command::Verify(args) => cmd_verify(args),
        Command::Hasse(args) => cmd_hasse(args),
    }
}

fn parse_type(args: &TypeArgs) -> Result<HermitianType, CliError> {
    let need_n = |n: Option<usize>, what: &str| {
        n.ok_or_else(|| CliError::Input(format!("{what} requires --n")))
    };
    let t = match args.family.as_str() {
        "su" => {
            let p = args.p.ok_or_else(|| CliError::Input("su requires --p".into()))?;
            let q = args.q.ok_or_else(|| CliError::Input("su requires --q".into()))?;
            HermitianType::Su { p, q }
        }
        "sp" => HermitianType::Sp { n: need_n(args.n, "sp")? },
        "so_star" | "sostar" => HermitianType::SoStar { n: need_n(args.n, "so_star")? },
        "so_odd" => HermitianType::SoOdd { n: need_n(args.n, "so_odd")? },
        "so_even" => HermitianType::SoEven { n: need_n(args.n, "so_even")? },
        "e6" => HermitianType::E6,
        "e7" => HermitianType::E7,
        other => {
            return Err(CliError::Input(format!(
                "unknown family '{other}'; expected su, sp, so_star, so_odd, so_even, e6, e7"
            )))
        }
    };
    if matches!(t, HermitianType::E6 | HermitianType::E7)
        && (args.p.is_some() || args.q.is_some() || args.n.is_some())
    {
        return Err(CliError::Input(format!("{} takes no rank parameters", args.family)));
    }
    t.validate()?;
    Ok(t)
}

fn parse_rational(s: &str) -> Result<Rat, CliError> {
    let bad = || CliError::Input(format!("cannot parse '{s}' as an exact rational (use a or a/b; no floats)"));
    let s = s.trim();
    if s.contains('.') || s.is_empty() {
        return Err(bad());
    }
    match s.split_once('/') {
        None => s.parse::<i64>().map(Rat::from_integer).map_err(|_| bad()),
        Some((num, den)) => {
            let n: i64 = num.trim().parse().map_err(|_| bad())?;
            let d: i64 = den.trim().parse().map_err(|_| bad())?;
            if d == 0 {
                return Err(bad());
            }
            Ok(Rat::new(n, d))
        }
    }
}

fn parse_rational_list(s: &str) -> Result<Vec<Rat>, CliError> {
    s.split(',').map(parse_rational).collect()
}

fn resolve_weight(args: &QueryArgs, ctx: &HermitianContext) -> Result<Weight, CliError> {
    let channels = [&args.rho_shifted, &args.highest_weight, &args.coroot_labels];
    if channels.iter().filter(|c| c.is_some()).count() != 1 {
        return Err(CliError::Input(
            "provide exactly one of --rho-shifted, --highest-weight, --coroot-labels".into(),
        ));
    }
    let input = if let Some(s) = &args.rho_shifted {
        WeightInput {
            mode: WeightMode::RhoShifted,
            coords: WeightCoords::Epsilon(parse_rational_list(s)?),
        }
    } else if let Some(s) = &args.highest_weight {
        WeightInput {
            mode: WeightMode::HighestWeight,
            coords: WeightCoords::Epsilon(parse_rational_list(s)?),
        }
    } else {
        WeightInput {
            mode: WeightMode::RhoShifted,
            coords: WeightCoords::CorootLabels(parse_rational_list(
                args.coroot_labels.as_ref().unwrap(),
            )?),
        }
    };
    Ok(resolve_weight_input(&input, &ctx.rs)?)
}

fn to_pretty<T: Serialize>(value: &T) -> Result<String, CliError> {
    serde_json::to_string_pretty(value).map_err(|e| CliError::Internal(e.to_string()))
}

fn cmd_av(args: QueryArgs) -> Result<String, CliError> {
    let t = parse_type(&args.ty)?;
    let ctx = HermitianContext::new(t)?;
    let lr = resolve_weight(&args, &ctx)?;
    let av = associated_variety(&ctx, &lr)?;
    let mut out = AvOutput {
        type_label: t.label(),
        lambda_rho: lr.coords.iter().map(|c| c.to_string()).collect(),
        integrality: av.integrality.as_str().to_owned(),
        y_size: av.y_size,
        width: av.width_m,
        k: av.k,
        orbit_label: av.orbit_label.clone(),
        orbit_dim: av.orbit_dim,
        gk_dim: av.gk_dim,
        delta: av.delta,
        oracle_k: None,
        agree: None,
    };
    if args.verify {
        let oracle = k_prime(&ctx, &lr)?;
        out.oracle_k = Some(oracle);
        out.agree = Some(oracle == av.k);
        if oracle != av.k {
            return Err(CliError::OracleDisagreement {
                report: to_pretty(&out)?,
            });
        }
    }
    to_pretty(&out)
}

fn cmd_diagram(args: QueryArgs) -> Result<String, CliError> {
    let t = parse_type(&args.ty)?;
    let ctx = HermitianContext::new(t)?;
    let lr = resolve_weight(&args, &ctx)?;
    crate::diagram::check_k_dominant(&lr, &ctx.rs)?;
    let d = compute_diagram(&lr, &ctx)?;
    let (width, witness) = ctx.poset.width(&d.y);
    let out = DiagramOutput {
        type_label: t.label(),
        lambda_rho: lr.coords.iter().map(|c| c.to_string()).collect(),
        integrality: d.integrality.as_str().to_owned(),
        y: d.y.iter_ones().map(|i| ctx.poset.roots[i].display()).collect(),
        width,
        witness: witness.iter().map(|&i| ctx.poset.roots[i].display()).collect(),
    };
    to_pretty(&out)
}

fn cmd_census(args: TypeArgs) -> Result<String, CliError> {
    let t = parse_type(&args)?;
    let report = width_census(t)?;
    to_pretty(&report)
}

fn cmd_verify(args: TypeArgs) -> Result<String, CliError> {
    let t = parse_type(&args)?;
    let springer = verify_springer_identities(t)?;
    let bijection = match verify_bijection_classical(t) {
        Ok(r) => Some(r),
        Err(Error::InfeasibleCensus { .. }) => None,
        Err(e) => return Err(e.into()),
    };
    let pass = springer.pass && bijection.as_ref().is_none_or(|b| b.pass);
    let out = VerifyOutput {
        type_label: t.label(),
        springer,
        bijection,
        pass,
    };
    to_pretty(&out)
}

fn cmd_hasse(args: TypeArgs) -> Result<String, CliError> {
    let t = parse_type(&args)?;
    let ctx = HermitianContext::new(t)?;
    Ok(ctx.poset.emit_hasse_dot())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> Result<String, CliError> {
        let cli = Cli::try_parse_from(args).expect("argv parses");
        run(cli)
    }

    #[test]
    fn av_intro_example() {
        let out = run_args(&[
            "hwhc",
            "av",
            "--type",
            "sp",
            "--n",
            "11",
            "--rho-shifted",
            "25/2,23/2,19/2,15/2,13/2,11/2,9/2,-3/2,-7/2,-9/2,-17/2",
            "--verify",
        ])
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["k"], 7);
        assert_eq!(v["width"], 3);
        assert_eq!(v["gk_dim"], 56);
        assert_eq!(v["agree"], true);
        assert_eq!(v["integrality"], "half_integral");
    }

    #[test]
    fn av_su_example_and_determinism() {
        let args = [
            "hwhc",
            "av",
            "--type",
            "su",
            "--p",
            "4",
            "--q",
            "3",
            "--rho-shifted",
            "2,1,-1,-2,3,0,-3",
        ];
        let out1 = run_args(&args).unwrap();
        let out2 = run_args(&args).unwrap();
        assert_eq!(out1, out2, "byte-deterministic output");
        let v: serde_json::Value = serde_json::from_str(&out1).unwrap();
        assert_eq!(v["k"], 2);
        assert_eq!(v["orbit_dim"], 10);
        assert!(v.get("oracle_k").is_none());
    }

    #[test]
    fn av_coroot_labels_rho() {
        let out = run_args(&[
            "hwhc",
            "av",
            "--type",
            "e7",
            "--coroot-labels",
            "1,1,1,1,1,1,1",
        ])
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["k"], 0);
        assert_eq!(v["gk_dim"], 0);
    }

    #[test]
    fn rho_shifted_and_highest_weight_agree() {
        // λ+ρ = (2,1,-1 | 3,0,-3) with ρ = (3,2,1,0,-1,-2,-3) for su(4,3).
        let shifted = run_args(&[
            "hwhc", "av", "--type", "su", "--p", "4", "--q", "3", "--rho-shifted",
            "2,1,-1,-2,3,0,-3",
        ])
        .unwrap();
        let hw = run_args(&[
            "hwhc", "av", "--type", "su", "--p", "4", "--q", "3", "--highest-weight",
            "-1,-1,-2,-2,4,2,0",
        ])
        .unwrap();
        assert_eq!(shifted, hw);
    }

    #[test]
    fn diagram_example() {
        let out = run_args(&[
            "hwhc", "diagram", "--type", "sp", "--n", "2", "--rho-shifted", "1/2,-1/2",
        ])
        .unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["y"], serde_json::json!(["ε1+ε2"]));
        assert_eq!(v["width"], 1);
        assert_eq!(v["witness"], serde_json::json!(["ε1+ε2"]));
    }

    #[test]
    fn census_and_hasse_examples() {
        let out = run_args(&["hwhc", "census", "--type", "e6"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["counts"], serde_json::json!([1, 6, 20]));
        assert_eq!(v["pass"], true);

        let dot = run_args(&["hwhc", "hasse", "--type", "so_even", "--n", "6"]).unwrap();
        assert_eq!(dot.matches("label=\"ε").count(), 10);
    }

    #[test]
    fn verify_command() {
        let out = run_args(&["hwhc", "verify", "--type", "so_star", "--n", "5"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["pass"], true);
        assert!(v["bijection"]["bijective"].as_bool().unwrap());

        let out = run_args(&["hwhc", "verify", "--type", "e7"]).unwrap();
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["pass"], true);
        assert!(v.get("bijection").is_none());
    }

    #[test]
    fn exit_codes() {
        // Parse failure.
        let e = run_args(&["hwhc", "av", "--type", "su", "--p", "2", "--q", "1", "--rho-shifted", "1.5,0,0"])
            .unwrap_err();
        assert_eq!(e.exit_code(), 2);

        // Missing weight channel.
        let e = run_args(&["hwhc", "av", "--type", "e6"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);

        // Dominance failure names the compact root.
        let e = run_args(&["hwhc", "av", "--type", "su", "--p", "2", "--q", "1", "--rho-shifted", "0,1,0"])
            .unwrap_err();
        assert_eq!(e.exit_code(), 3);
        assert!(e.to_string().contains("ε1-ε2"));

        // Infeasible census.
        let e = run_args(&["hwhc", "census", "--type", "sp", "--n", "21"]).unwrap_err();
        assert_eq!(e.exit_code(), 5);

        // Bad family.
        let e = run_args(&["hwhc", "census", "--type", "g2"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);

        // Out-of-bounds rank parameter.
        let e = run_args(&["hwhc", "hasse", "--type", "so_star", "--n", "2"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);

        // Oracle disagreement is reserved for exit code 4 and keeps its
        // JSON payload printable.
        let e = CliError::OracleDisagreement { report: "{}".into() };
        assert_eq!(e.exit_code(), 4);
        assert_eq!(e.stdout_payload(), Some("{}"));
    }
}
