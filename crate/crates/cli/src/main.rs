use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use cyclotomy49::output::write_report;
use cyclotomy49::scan::{run_scan, Format, ScanConfig};
use cyclotomy49::{run_selftest, CliError, Result};
use cyclotomy49_core::artiad::classify;
use cyclotomy49_core::congruence::verify_prime;

#[derive(Parser, Debug)]
#[command(version, about = "Verify order-49 Jacobi sum congruences and classify septic artiad primes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Verify the congruence for J(1,n)_49 at one prime p ≡ 1 (mod 49)
    Verify {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        generator: Option<u64>,
        /// Check every n in 1..=48 instead of n = 1
        #[arg(long)]
        all_n: bool,
    },
    /// Classify p ≡ 1 (mod 14) as ordinary, artiad or hyperartiad
    Classify {
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        generator: Option<u64>,
    },
    /// Scan a range of primes and write a report
    Scan {
        #[arg(long)]
        min: u64,
        #[arg(long)]
        max: u64,
        #[arg(long, value_parser = ["14", "49"])]
        modulus: String,
        #[arg(long)]
        all_n: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Search past `max` (steps of 20000, up to 10^6) for the first artiad prime
        #[arg(long)]
        extend_to_artiad: bool,
        #[arg(long)]
        output: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run the startup algebra checks
    Selftest {
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

fn print_json<T: serde::Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Verify { prime, generator, all_n } => {
            let ns: Vec<u32> = if all_n { (1..=48).collect() } else { vec![1] };
            let v = verify_prime(prime, generator, &ns)?;
            print_json(&v)?;
            for d in &v.discrepancies {
                eprintln!("discrepancy: {d}");
            }
            Ok(if v.passed() { 0 } else { 1 })
        }
        Command::Classify { prime, generator } => {
            let c = classify(prime, generator)?;
            print_json(&c)?;
            eprintln!("{prime}: {}", c.kind.as_str());
            Ok(0)
        }
        Command::Scan { min, max, modulus, all_n, jobs, extend_to_artiad, output, format } => {
            let config = ScanConfig {
                min,
                max,
                modulus: modulus.parse().map_err(|_| CliError::Usage(format!("bad modulus {modulus}")))?,
                all_n,
                jobs,
                extend_to_artiad,
                output: output.display().to_string(),
                format,
            };
            let report = run_scan(&config)?;
            write_report(&report, &output, format)?;
            let s = &report.summary;
            eprintln!(
                "{} primes ({} ordinary, {} artiad, {} hyperartiad), {} certificates, {} mismatches, {} discrepancies",
                s.primes, s.ordinary, s.artiad, s.hyperartiad, s.certificates, s.mismatches, s.discrepancies.len()
            );
            Ok(if report.passed() { 0 } else { 1 })
        }
        Command::Selftest { inject_fault } => {
            let rep = run_selftest(inject_fault)?;
            for c in &rep.checks {
                let status = if c.passed { "ok  " } else { "FAIL" };
                if c.detail.is_empty() || c.passed {
                    println!("{status} {}", c.name);
                } else {
                    println!("{status} {} ({})", c.name, c.detail);
                }
            }
            Ok(if rep.passed() { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
