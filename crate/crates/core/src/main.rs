use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use swf_core::cli::{parse_spec, run, run_regression, CliError, Format, RunOptions};
use swf_core::conley::Group;
use swf_core::systems::Flavor;

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    S1,
    Pin2,
}

#[derive(Clone, Copy, ValueEnum)]
enum FlavorArg {
    A,
    R,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Text,
    Json,
}

/// Seiberg-Witten Floer spectra of Seifert fibered spaces.
#[derive(Parser)]
#[command(name = "swf", version)]
struct Args {
    /// JSON spec, inline (starting with `{`) or a file path
    #[arg(long, required_unless_present = "regression")]
    manifold: Option<String>,
    #[arg(long, value_enum, default_value = "s1")]
    group: GroupArg,
    #[arg(long, value_enum, default_value = "a")]
    flavor: FlavorArg,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    /// print reduced homology of the first k objects
    #[arg(long, value_name = "k")]
    homology_prefix: Option<usize>,
    /// spectral gap as p/q
    #[arg(long, value_name = "p/q")]
    gap: Option<String>,
    /// check every published value and print one line per case
    #[arg(long)]
    regression: bool,
}

fn fail(e: CliError) -> ExitCode {
    eprintln!("swf: {e}");
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.regression {
        let outcomes = run_regression();
        let mut failed = 0;
        for o in &outcomes {
            let tag = if o.pass { "PASS" } else { "FAIL" };
            println!("{tag} {}: expected {} got {}", o.label, o.expected, o.got);
            failed += usize::from(!o.pass);
        }
        println!("{} cases, {failed} failed", outcomes.len());
        return if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) };
    }
    let source = args.manifold.unwrap_or_default();
    let doc = if source.trim_start().starts_with('{') {
        source
    } else {
        match std::fs::read_to_string(&source) {
            Ok(s) => s,
            Err(e) => return fail(CliError::Parse(format!("{source}: {e}"))),
        }
    };
    let spec = match parse_spec(&doc) {
        Ok(s) => s,
        Err(e) => return fail(e),
    };
    let mut options = RunOptions { homology_prefix: args.homology_prefix, ..RunOptions::default() };
    if let Some(g) = args.gap {
        match swf_core::rat::parse(&g) {
            Some(v) => options.gap = v,
            None => return fail(CliError::Parse(format!("gap {g:?} is not a rational p/q"))),
        }
    }
    let group = match args.group {
        GroupArg::S1 => Group::S1,
        GroupArg::Pin2 => Group::Pin2,
    };
    let flavor = match args.flavor {
        FlavorArg::A => Flavor::A,
        FlavorArg::R => Flavor::R,
    };
    let format = match args.format {
        FormatArg::Text => Format::Text,
        FormatArg::Json => Format::Json,
    };
    match run(&spec, group, flavor, &options) {
        Ok(report) => {
            print!("{}", report.render(format));
            ExitCode::SUCCESS
        }
        Err(e) => fail(e),
    }
}
