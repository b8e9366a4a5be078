use std::fmt;
use std::fs::{self, File};
use std::io::BufWriter;
use std::process::ExitCode;

use decolimit::circuit::logical_depth;
use decolimit::limit::{estimate, n_chi_closed_form};
use decolimit::{
    count_periods_by_zero_crossings, parse_circuit, sample_trace, CoherentPulse, DepthReport, FeasibilityReport,
    LimitMethod, ParseError, DEFAULT_TAIL_TOL,
};

use crate::args::{DepthArgs, LimitArgs, PulseArgs, TraceArgs, VerdictArgs};
use crate::format::{header, write_trace};

#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Parse(ParseError),
    Io(String),
}

impl Failure {
    pub fn exit_code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Parse(_) => 3,
            Failure::Io(_) => 4,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) | Failure::Io(m) => f.write_str(m),
            Failure::Parse(e) => write!(f, "{e}"),
        }
    }
}

impl From<decolimit::Error> for Failure {
    fn from(e: decolimit::Error) -> Self {
        match e {
            decolimit::Error::Parse(p) => Failure::Parse(p),
            other => Failure::Usage(other.to_string()),
        }
    }
}

const EXIT_INFEASIBLE: u8 = 5;

fn build_pulse(args: &PulseArgs) -> Result<CoherentPulse, Failure> {
    let missing = |flag: &str| Failure::Usage(format!("missing --{flag}"));
    let duration = args.duration_s.ok_or_else(|| missing("duration-s"))?;
    let power = args.peak_power_w.ok_or_else(|| missing("peak-power-w"))?;
    let pulse = match (args.frequency_hz, args.wavelength_m) {
        (Some(f), None) => CoherentPulse::new(f, duration, power)?,
        (None, Some(l)) => CoherentPulse::from_wavelength(l, duration, power)?,
        (None, None) => return Err(Failure::Usage("give one of --frequency-hz or --wavelength-m".into())),
        (Some(_), Some(_)) => {
            return Err(Failure::Usage("--frequency-hz and --wavelength-m are exclusive".into()));
        }
    };
    Ok(match args.photon_energy_j {
        Some(e) => pulse.with_photon_energy(e)?,
        None => pulse,
    })
}

fn print_pulse(args: &PulseArgs, pulse: &CoherentPulse) {
    match args.wavelength_m {
        Some(l) => println!("frequency_hz = {:e} (from wavelength_m = {l:e})", pulse.frequency()),
        None => println!("frequency_hz = {:e}", pulse.frequency()),
    }
    println!("duration_s = {:e}", pulse.duration());
    println!("peak_power_w = {:e}", pulse.peak_power());
    let source = if pulse.photon_energy_override().is_some() {
        "override"
    } else {
        "h*nu"
    };
    println!("photon_energy_j = {:e} ({source})", pulse.photon_energy());
}

pub fn nbar(args: &PulseArgs) -> Result<ExitCode, Failure> {
    let pulse = build_pulse(args)?;
    println!("{}", header(DEFAULT_TAIL_TOL));
    print_pulse(args, &pulse);
    println!("nbar = {}", pulse.nbar());
    Ok(ExitCode::SUCCESS)
}

pub fn trace(args: &TraceArgs) -> Result<ExitCode, Failure> {
    let trace = sample_trace(args.nbar, args.tau_max, args.samples, args.tail_tol)?;
    let file =
        File::create(&args.output).map_err(|e| Failure::Io(format!("cannot write {}: {e}", args.output.display())))?;
    write_trace(BufWriter::new(file), &trace)
        .map_err(|e| Failure::Io(format!("cannot write {}: {e}", args.output.display())))?;

    let crossings = count_periods_by_zero_crossings(&trace);
    if crossings.is_degenerate() {
        eprintln!("warning: consecutive exact zeros in W; the grid does not resolve the signal");
    }
    println!("{}", header(args.tail_tol));
    println!("nbar = {}", args.nbar);
    println!("samples = {}", trace.len());
    println!("zero_crossings = {}", crossings.sign_changes);
    println!("periods = {}", crossings.periods());
    Ok(ExitCode::SUCCESS)
}

fn resolve_nbar(args: &LimitArgs) -> Result<f64, Failure> {
    match args.nbar {
        Some(n) => Ok(n),
        None if args.pulse.is_empty() => Err(Failure::Usage("give --nbar or the pulse flags".into())),
        None => {
            let pulse = build_pulse(&args.pulse)?;
            print_pulse(&args.pulse, &pulse);
            Ok(pulse.nbar())
        }
    }
}

/// Prints the limit report and returns the estimate for the chosen method.
fn report_limit(args: &LimitArgs) -> Result<decolimit::LimitEstimate, Failure> {
    println!("{}", header(DEFAULT_TAIL_TOL));
    let nbar = resolve_nbar(args)?;
    let chosen = estimate(nbar, args.pth, args.method)?;
    println!("nbar = {nbar}");
    println!("p_th = {}", args.pth);
    if args.method != LimitMethod::ClosedForm {
        println!("{} = {}", LimitMethod::ClosedForm, n_chi_closed_form(nbar, args.pth));
    }
    println!("{} = {}", chosen.method, chosen.value);
    Ok(chosen)
}

pub fn limit(args: &LimitArgs) -> Result<ExitCode, Failure> {
    report_limit(args)?;
    Ok(ExitCode::SUCCESS)
}

fn load_depth(path: &std::path::Path) -> Result<DepthReport, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Io(format!("cannot read {}: {e}", path.display())))?;
    let circuit = parse_circuit(&text).map_err(Failure::Parse)?;
    Ok(logical_depth(&circuit))
}

fn print_depth(report: &DepthReport) {
    let width = report.qubit_names.iter().map(String::len).max().unwrap_or(0).max(6);
    print!("{:<width$}", "period");
    for q in &report.qubit_names {
        print!(" {q:>width$}");
    }
    println!();
    for (p, row) in report.counts.iter().enumerate() {
        print!("{p:<width$}");
        for c in row {
            print!(" {c:>width$}");
        }
        println!();
    }
    match &report.argmax {
        Some((p, q)) => println!("argmax = period {p}, qubit {q}"),
        None => println!("argmax = none"),
    }
    println!("chi = {}", report.chi);
}

pub fn depth(args: &DepthArgs) -> Result<ExitCode, Failure> {
    let report = load_depth(&args.path)?;
    println!("{}", header(DEFAULT_TAIL_TOL));
    print_depth(&report);
    Ok(ExitCode::SUCCESS)
}

pub fn verdict(args: &VerdictArgs) -> Result<ExitCode, Failure> {
    let report = load_depth(&args.path)?;
    let estimate = report_limit(&args.limit)?;
    print_depth(&report);
    let verdict = FeasibilityReport::new(report.chi as u64, args.periods_per_gate, estimate)?;
    println!("periods_per_gate = {}", verdict.periods_per_gate);
    println!("required_periods = {}", verdict.required_periods);
    println!("available_periods = {}", estimate.periods());
    println!("margin = {}", verdict.margin);
    if verdict.feasible {
        println!("verdict = feasible");
        Ok(ExitCode::SUCCESS)
    } else {
        println!("verdict = infeasible");
        Ok(ExitCode::from(EXIT_INFEASIBLE))
    }
}
