//! Command dispatch. Exit-code contract: 0 when the command succeeds (for
//! `verify`, when the check passes), 1 when a verification check fails, 2 on
//! parse or validation errors.

use biinterval_core::{
    build_spectrum, build_tiling, canonicalize, classify_region, enumerate_frequencies,
    gram_matrix, parse_rational, parseval_sum, rat, rationalize, reconcile, s_tilde_partial,
    to_f64, verify_tiling, BiIntervalRegion, CaseSelector, RatInterval, Rational, RawIntervalPair,
    RealWindow, SpectrumSpec, TilingSpec,
};

use crate::args::{
    AnalyzeArgs, Cli, Command, ParsevalArgs, StildeArgs, TilingArgs, VerifyCommand, ZerosArgs,
};
use crate::report::{
    analysis_text, parseval_text, stilde_text, tiling_text, to_json, zeros_text, AnalysisReport,
    InputEcho, ParsevalCheck, RationalizedArg, STildeCheck, TilingCheck, VerificationSummary,
    VerifyReport, SCHEMA,
};

const RATIONALIZE_MAX_DENOMINATOR: i64 = 1_000_000;

/// Runs one parsed command, printing its report to stdout. `Ok(true)` means
/// success/pass, `Ok(false)` a failed verification, `Err` a usage error.
pub fn run(cli: &Cli) -> Result<bool, String> {
    match &cli.command {
        Command::Analyze(args) => run_analyze(args, cli.json),
        Command::Verify(VerifyCommand::Zeros(args)) => run_zeros(args, cli.json),
        Command::Verify(VerifyCommand::Tiling(args)) => run_tiling(args, cli.json),
        Command::Verify(VerifyCommand::Parseval(args)) => run_parseval(args, cli.json),
        Command::Verify(VerifyCommand::Stilde(args)) => run_stilde(args, cli.json),
    }
}

struct ArgParser {
    rationalize: bool,
    conversions: Vec<RationalizedArg>,
}

impl ArgParser {
    fn new(rationalize: bool) -> Self {
        ArgParser {
            rationalize,
            conversions: Vec::new(),
        }
    }

    fn rational(&mut self, name: &str, text: &str) -> Result<Rational, String> {
        if let Ok(value) = parse_rational(text) {
            return Ok(value);
        }
        let decimal: f64 = text
            .parse()
            .map_err(|_| format!("argument {name}: {text:?} is not a rational literal"))?;
        if !self.rationalize {
            return Err(format!(
                "argument {name}: decimal input {text:?} requires --rationalize"
            ));
        }
        let value = rationalize(decimal, RATIONALIZE_MAX_DENOMINATOR)
            .ok_or_else(|| format!("argument {name}: cannot rationalize {text:?}"))?;
        self.conversions.push(RationalizedArg {
            argument: name.to_string(),
            original: text.to_string(),
            value,
        });
        Ok(value)
    }

    /// Numeric flags take a rational literal or a plain decimal.
    fn real(&mut self, name: &str, text: &str) -> Result<f64, String> {
        if let Ok(value) = parse_rational(text) {
            return Ok(to_f64(&value));
        }
        text.parse::<f64>()
            .map_err(|_| format!("argument {name}: {text:?} is not a rational or decimal"))
    }
}

fn parse_region(
    parser: &mut ArgParser,
    endpoints: &[String],
) -> Result<
    (
        RawIntervalPair,
        BiIntervalRegion,
        biinterval_core::AffineMap,
    ),
    String,
> {
    let names = ["i1_lo", "i1_hi", "i2_lo", "i2_hi"];
    let mut values = [rat(0, 1); 4];
    for (i, name) in names.iter().enumerate() {
        values[i] = parser.rational(name, &endpoints[i])?;
    }
    let raw = RawIntervalPair {
        i1_lo: values[0],
        i1_hi: values[1],
        i2_lo: values[2],
        i2_hi: values[3],
    };
    let (region, map) = canonicalize(&raw).map_err(|e| e.to_string())?;
    Ok((raw, region, map))
}

fn input_echo(raw: &RawIntervalPair, parser: ArgParser) -> InputEcho {
    InputEcho {
        i1: RatInterval::new(raw.i1_lo, raw.i1_hi),
        i2: RatInterval::new(raw.i2_lo, raw.i2_hi),
        rationalized: parser.conversions,
    }
}

/// Case-matched selectors so the reported tiling always witnesses the same
/// case as the reported spectrum.
fn tiling_selector(spectrum: &SpectrumSpec) -> CaseSelector {
    match spectrum {
        SpectrumSpec::Lattice => CaseSelector::CaseI,
        SpectrumSpec::HalfInteger { .. } => CaseSelector::CaseII,
    }
}

fn run_analyze(args: &AnalyzeArgs, json: bool) -> Result<bool, String> {
    let mut parser = ArgParser::new(args.rationalize);
    let (raw, region, map) = parse_region(&mut parser, &args.endpoints)?;
    let window_edge = match &args.window {
        Some(text) => Some(parser.rational("window", text)?),
        None => None,
    };
    let classification = classify_region(&region);

    let mut spectrum = None;
    let mut tiling = None;
    let mut verification = None;
    if classification.is_spectral() {
        let spec =
            build_spectrum(&region, CaseSelector::Auto, args.p).map_err(|e| e.to_string())?;
        let tile = build_tiling(&region, tiling_selector(&spec)).map_err(|e| e.to_string())?;

        let gram_truncation = args.truncation.min(100);
        let freqs = enumerate_frequencies(&spec, &Rational::from_integer(gram_truncation as i64));
        let gram_max = gram_matrix(&region, &freqs).max_off_diagonal_modulus();
        let parseval = parseval_sum(&region, &spec, &rat(0, 1), args.truncation);
        let edge = window_edge.unwrap_or_else(|| tile.period() * 10);
        let coverage_window = RatInterval::new(rat(0, 1), edge);
        let coverage = verify_tiling(&region, &tile, &coverage_window);

        verification = Some(VerificationSummary {
            gram_truncation,
            gram_max_off_diagonal: gram_max,
            parseval,
            coverage_window,
            coverage_exact: coverage.exact_cover,
        });
        spectrum = Some(spec);
        tiling = Some(tile);
    }

    let report = AnalysisReport {
        schema: SCHEMA.to_string(),
        input: input_echo(&raw, parser),
        canonical: region,
        affine_map: map,
        classification,
        spectral: classification.is_spectral(),
        spectrum,
        tiling,
        verification,
    };
    if json {
        print!("{}", to_json(&report));
    } else {
        print!("{}", analysis_text(&report));
    }
    Ok(true)
}

fn run_zeros(args: &ZerosArgs, json: bool) -> Result<bool, String> {
    let mut parser = ArgParser::new(args.rationalize);
    let (_, region, _) = parse_region(&mut parser, &args.endpoints)?;
    let lo = parser.real("window lo", &args.window[0])?;
    let hi = parser.real("window hi", &args.window[1])?;
    let step = parser.real("step", &args.step)?;
    if !step.is_finite() || step <= 0.0 {
        return Err(format!("argument step: must be positive, got {step}"));
    }
    if !args.threshold.is_finite() || args.threshold <= 0.0 {
        return Err(format!(
            "argument threshold: must be positive, got {}",
            args.threshold
        ));
    }
    if args.denominator_bound < 1 {
        return Err(format!(
            "argument denominator-bound: must be at least 1, got {}",
            args.denominator_bound
        ));
    }
    let scan = reconcile(
        &region,
        RealWindow::new(lo, hi),
        step,
        args.threshold,
        args.denominator_bound,
    );
    let report = VerifyReport::new("zeros", scan.pass, scan);
    if json {
        print!("{}", to_json(&report));
    } else {
        print!("{}", zeros_text(&report));
    }
    Ok(report.pass)
}

fn run_tiling(args: &TilingArgs, json: bool) -> Result<bool, String> {
    let mut parser = ArgParser::new(args.rationalize);
    let (_, region, _) = parse_region(&mut parser, &args.endpoints)?;
    let period = parser.rational("period", &args.period)?;
    let mut residues = Vec::with_capacity(args.residues.len());
    for (i, text) in args.residues.iter().enumerate() {
        residues.push(parser.rational(&format!("residues[{i}]"), text)?);
    }
    let tiling = TilingSpec::new(period, residues).map_err(|e| e.to_string())?;
    let window = match &args.window {
        Some(pair) => RatInterval::new(
            parser.rational("window lo", &pair[0])?,
            parser.rational("window hi", &pair[1])?,
        ),
        None => RatInterval::new(rat(0, 1), tiling.period() * 10),
    };
    let coverage = verify_tiling(&region, &tiling, &window);
    let pass = coverage.exact_cover;
    let report = VerifyReport::new(
        "tiling",
        pass,
        TilingCheck {
            density: Some(tiling.density()),
            tiling,
            coverage,
        },
    );
    if json {
        print!("{}", to_json(&report));
    } else {
        print!("{}", tiling_text(&report));
    }
    Ok(pass)
}

fn run_parseval(args: &ParsevalArgs, json: bool) -> Result<bool, String> {
    let mut parser = ArgParser::new(args.rationalize);
    let (_, region, _) = parse_region(&mut parser, &args.endpoints)?;
    let lambda = parser.rational("lambda", &args.lambda)?;
    let spectrum =
        build_spectrum(&region, CaseSelector::Auto, args.p).map_err(|e| e.to_string())?;
    let parseval = parseval_sum(&region, &spectrum, &lambda, args.truncation);
    let pass = parseval.defect <= parseval.tail_bound
        && parseval.partial_sum <= to_f64(&region.r()) + 1e-12;
    let report = VerifyReport::new(
        "parseval",
        pass,
        ParsevalCheck {
            spectrum,
            lambda,
            parseval,
        },
    );
    if json {
        print!("{}", to_json(&report));
    } else {
        print!("{}", parseval_text(&report));
    }
    Ok(pass)
}

fn run_stilde(args: &StildeArgs, json: bool) -> Result<bool, String> {
    let mut parser = ArgParser::new(false);
    let beta = parser.real("beta", &args.beta)?;
    let series = s_tilde_partial(beta, args.truncation).map_err(|e| e.to_string())?;
    let deviation = (series.partial - 1.0).abs();
    let pass = deviation <= series.tail_bound;
    let report = VerifyReport::new(
        "stilde",
        pass,
        STildeCheck {
            beta,
            truncation_k: args.truncation,
            partial: series.partial,
            tail_bound: series.tail_bound,
            deviation,
        },
    );
    if json {
        print!("{}", to_json(&report));
    } else {
        print!("{}", stilde_text(&report));
    }
    Ok(pass)
}
