//! Command-line front end.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::config::{Config, CONFIG_ENV};
use crate::modal::temporal::run_temporal;
use crate::model::{parse_tree, ParsedTree};
use crate::observation::Format;
use crate::pipeline::{hint_regions, Compressor};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_CONFIG: i32 = 2;

/// Mean output/input ratio the bundled corpus is expected to reach.
pub const TARGET_RATIO: f64 = 0.40;

#[derive(Debug, Parser)]
#[command(
    name = "axcompact",
    version,
    about = "Compress linearized accessibility trees into region-structured observations"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compress one screen, optionally against the previous step.
    Compress {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        prev: Option<PathBuf>,
        /// Region profile to use instead of auto-detection.
        #[arg(long)]
        app: Option<String>,
        #[arg(long, default_value = "")]
        instruction: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, env = CONFIG_ENV)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compression ratio per fixture in a directory of `.tsv` trees with
    /// optional same-named `.txt` instructions.
    Stats {
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, env = CONFIG_ENV)]
        config: Option<PathBuf>,
    },
    /// Temporal comparison of two steps.
    Diff {
        #[arg(long)]
        prev: PathBuf,
        #[arg(long)]
        curr: PathBuf,
        #[arg(long, env = CONFIG_ENV)]
        config: Option<PathBuf>,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn input(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_INPUT,
            message: message.into(),
        }
    }

    fn config(message: impl Into<String>) -> Self {
        Self {
            code: EXIT_CONFIG,
            message: message.into(),
        }
    }
}

fn read_tree(path: &Path, err: &mut dyn Write) -> Result<ParsedTree, Failure> {
    let raw =
        fs::read_to_string(path).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    let parsed =
        parse_tree(&raw).map_err(|e| Failure::input(format!("{}: {e}", path.display())))?;
    for w in &parsed.warnings {
        let _ = writeln!(err, "{}: {w}", path.display());
    }
    Ok(parsed)
}

fn compressor(config: Option<&Path>) -> Result<Compressor, Failure> {
    let cfg = Config::resolve(config).map_err(|e| Failure::config(e.to_string()))?;
    Compressor::new(cfg).map_err(|e| Failure::config(e.to_string()))
}

#[allow(clippy::too_many_arguments)]
fn cmd_compress(
    input: &Path,
    prev: Option<&Path>,
    app: Option<&str>,
    instruction: &str,
    format: Format,
    config: Option<&Path>,
    out_path: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let c = compressor(config)?;
    let curr = read_tree(input, err)?.state;
    let prev = prev
        .map(|p| read_tree(p, err))
        .transpose()?
        .map(|p| p.state);
    let result = c
        .compress(prev.as_ref(), &curr, instruction, app)
        .map_err(|e| Failure::config(e.to_string()))?;
    for n in &result.notes {
        let _ = writeln!(err, "{n}");
    }
    let doc = result.observation.serialize(format);
    match out_path {
        Some(p) => {
            fs::write(p, doc).map_err(|e| Failure::input(format!("{}: {e}", p.display())))?
        }
        None => out
            .write_all(doc.as_bytes())
            .map_err(|e| Failure::input(format!("stdout: {e}")))?,
    }
    Ok(())
}

fn cmd_stats(
    dir: &Path,
    config: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let c = compressor(config)?;
    let mut files: Vec<PathBuf> = fs::read_dir(dir)
        .map_err(|e| Failure::input(format!("{}: {e}", dir.display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "tsv"))
        .collect();
    files.sort();

    let mut table = String::from("file\tinput_chars\toutput_chars\tratio\ttokens\n");
    let mut ratios = Vec::new();
    for path in &files {
        let name = path
            .file_name()
            .map_or_else(String::new, |n| n.to_string_lossy().into_owned());
        let instruction = fs::read_to_string(path.with_extension("txt")).unwrap_or_default();
        let row = read_tree(path, err).and_then(|t| {
            c.compress(None, &t.state, instruction.trim(), None)
                .map_err(|e| Failure::config(e.to_string()))
        });
        match row {
            Ok(r) => {
                let o = &r.observation;
                ratios.push(o.ratio());
                table.push_str(&format!(
                    "{name}\t{}\t{}\t{:.3}\t{}\n",
                    o.source_chars,
                    o.output_chars,
                    o.ratio(),
                    o.output_token_estimate
                ));
            }
            Err(f) => table.push_str(&format!("{name}\t-\t-\t-\t-\tskipped: {}\n", f.message)),
        }
    }
    if !ratios.is_empty() {
        let mean = ratios.iter().sum::<f64>() / ratios.len() as f64;
        let verdict = if mean <= TARGET_RATIO { "PASS" } else { "FAIL" };
        table.push_str(&format!("mean\t-\t-\t{mean:.3}\t-\n"));
        table.push_str(&format!("target\t<= {TARGET_RATIO:.2}\t{verdict}\n"));
    }
    out.write_all(table.as_bytes())
        .map_err(|e| Failure::input(format!("stdout: {e}")))
}

fn cmd_diff(
    prev: &Path,
    curr: &Path,
    config: Option<&Path>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<(), Failure> {
    let c = compressor(config)?;
    let prev = read_tree(prev, err)?.state;
    let curr = read_tree(curr, err)?.state;
    let profile = c.profiles().detect_app(curr.elements());
    let (prev, curr) = (hint_regions(&prev, profile), hint_regions(&curr, profile));
    let cfg = c.config();
    let outcome = run_temporal(&prev, &curr, &cfg.matching, &cfg.modal_score);
    let cmp = &outcome.comparison;

    let mut report = String::new();
    let ratio = cmp
        .ratio
        .map_or_else(|| "n/a".to_string(), |r| format!("{r:.2}"));
    let d = cmp.displacement.unwrap_or_default();
    report.push_str(&format!(
        "{}, R={ratio}, Δp=({},{}), {} candidates\n",
        cmp.verdict,
        d.dx,
        d.dy,
        outcome.candidates.len()
    ));
    report.push_str(&format!(
        "app: {}; matched {} of {} previous dynamic elements\n",
        profile.app, cmp.matched_elements, cmp.prev_dynamic
    ));
    for w in &cmp.warnings {
        report.push_str(&format!("warning: {w}\n"));
    }
    if let Some(score) = &outcome.score {
        for (e, s) in outcome.candidates.iter().zip(&score.elements) {
            report.push_str(&format!(
                "candidate {} ({}) \"{}\" @ {} tag={:+.2} name={:+.2}\n",
                e.id,
                e.tag(),
                e.content.label(),
                e.center(),
                s.tag,
                s.name
            ));
        }
        report.push_str(&format!(
            "score: total={:.2} count={:+.2} threshold={:.2} -> {}\n",
            score.total,
            score.count,
            cfg.modal_score.t_modal,
            if outcome.accepted {
                "modal"
            } else {
                "no modal"
            }
        ));
    }
    out.write_all(report.as_bytes())
        .map_err(|e| Failure::input(format!("stdout: {e}")))
}

/// Runs the CLI and returns the process exit code. Diagnostics go to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return e.exit_code();
        }
    };
    let result = match &cli.command {
        Command::Compress {
            input,
            prev,
            app,
            instruction,
            format,
            config,
            out: out_path,
        } => cmd_compress(
            input,
            prev.as_deref(),
            app.as_deref(),
            instruction,
            *format,
            config.as_deref(),
            out_path.as_deref(),
            out,
            err,
        ),
        Command::Stats { dir, config } => cmd_stats(dir, config.as_deref(), out, err),
        Command::Diff { prev, curr, config } => cmd_diff(prev, curr, config.as_deref(), out, err),
    };
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}
