//! Command-line surface. All region parameters are rational literals `p/q`;
//! decimals are accepted only under `--rationalize`, which converts them by
//! continued fractions with denominator at most 10⁶ and echoes the
//! conversion.

use clap::{Args, Parser, Subcommand};

#[derive(Debug, Parser)]
#[command(
    name = "biinterval",
    version,
    about = "Decide, construct, and verify spectra and tilings of two-interval regions"
)]
pub struct Cli {
    /// Emit a machine-readable JSON report instead of text
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Canonicalize a region, classify it, and construct + verify its
    /// spectrum and tiling
    Analyze(AnalyzeArgs),
    /// Run a single verification check (exit 1 when the check fails)
    #[command(subcommand)]
    Verify(VerifyCommand),
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Region endpoints as rational literals
    #[arg(value_names = ["I1_LO", "I1_HI", "I2_LO", "I2_HI"], num_args = 4)]
    pub endpoints: Vec<String>,

    /// Parseval truncation bound
    #[arg(long = "K", default_value_t = 1000, value_name = "INT")]
    pub truncation: u64,

    /// Odd offset numerator; selects the half-half spectrum when admitted
    #[arg(long, value_name = "ODD_INT")]
    pub p: Option<i64>,

    /// Right edge of the coverage window [0, W); defaults to 10 periods
    #[arg(long, value_name = "RATIONAL")]
    pub window: Option<String>,

    /// Accept decimal inputs, converting by continued fractions
    #[arg(long)]
    pub rationalize: bool,
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Reconcile a modulus scan of the indicator transform against the
    /// exact zero classifier
    Zeros(ZerosArgs),
    /// Verify a proposed periodic tiling by exact sweep over a window
    Tiling(TilingArgs),
    /// Check a Parseval partial sum against its analytic tail bound
    Parseval(ParsevalArgs),
    /// Check a truncation of the universal series against its limit 1
    Stilde(StildeArgs),
}

#[derive(Debug, Args)]
pub struct ZerosArgs {
    #[arg(value_names = ["I1_LO", "I1_HI", "I2_LO", "I2_HI"], num_args = 4)]
    pub endpoints: Vec<String>,

    /// Scan window (lo, hi]
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], default_values = ["0", "10"])]
    pub window: Vec<String>,

    /// Grid pitch of the scan
    #[arg(long, default_value = "1/1000", value_name = "RATIONAL")]
    pub step: String,

    /// Modulus below which a refined minimum counts as a zero
    #[arg(long, default_value_t = 1e-6)]
    pub threshold: f64,

    /// Largest denominator enumerated for predicted zeros
    #[arg(long = "denominator-bound", default_value_t = 1000, value_name = "INT")]
    pub denominator_bound: i64,

    #[arg(long)]
    pub rationalize: bool,
}

#[derive(Debug, Args)]
pub struct TilingArgs {
    #[arg(value_names = ["I1_LO", "I1_HI", "I2_LO", "I2_HI"], num_args = 4)]
    pub endpoints: Vec<String>,

    /// Period of the proposed translation set
    #[arg(long, value_name = "RATIONAL")]
    pub period: String,

    /// Residues of the translation set, comma-separated
    #[arg(long, value_delimiter = ',', required = true, value_name = "RATIONALS")]
    pub residues: Vec<String>,

    /// Verification window [lo, hi); defaults to [0, 10 * period)
    #[arg(long, num_args = 2, value_names = ["LO", "HI"])]
    pub window: Option<Vec<String>>,

    #[arg(long)]
    pub rationalize: bool,
}

#[derive(Debug, Args)]
pub struct ParsevalArgs {
    #[arg(value_names = ["I1_LO", "I1_HI", "I2_LO", "I2_HI"], num_args = 4)]
    pub endpoints: Vec<String>,

    /// Test frequency
    #[arg(long, default_value = "0", value_name = "RATIONAL")]
    pub lambda: String,

    /// Truncation bound
    #[arg(long = "K", default_value_t = 1000, value_name = "INT")]
    pub truncation: u64,

    /// Odd offset numerator; selects the half-half spectrum when admitted
    #[arg(long, value_name = "ODD_INT")]
    pub p: Option<i64>,

    #[arg(long)]
    pub rationalize: bool,
}

#[derive(Debug, Args)]
pub struct StildeArgs {
    /// Evaluation point in (0, 1)
    #[arg(long, value_name = "RATIONAL")]
    pub beta: String,

    /// Truncation bound
    #[arg(long = "K", default_value_t = 1000, value_name = "INT")]
    pub truncation: u64,
}
