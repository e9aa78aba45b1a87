use std::fs::File;
use std::io::{BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use qsubspace::experiment::{compare_modes, run_experiment, write_report_csv};
use qsubspace::persist::{load_model_from_path, save_model_to_path};
use qsubspace::{
    dataset, ClassifierModel, Dataset, Error, ExperimentConfig, FitOptions, Mode, Result,
};

/// Pattern classification on quantized basis-state encodings.
#[derive(Parser)]
#[command(name = "qsubspace", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Fit a classifier from a labeled CSV dataset and save it as JSON
    Fit {
        /// Representation mode: flat1d, separable, or nonseparable
        #[arg(long)]
        mode: Mode,
        /// Input dataset CSV with header f0,...,f{p-1},label
        #[arg(long)]
        data: PathBuf,
        /// Output model file
        #[arg(long)]
        out: PathBuf,
        /// Also store quantized learning elements for nearest-neighbor use
        #[arg(long)]
        store_elements: bool,
    },
    /// Classify patterns from a CSV file against a saved model
    Classify {
        /// Model file written by fit
        #[arg(long)]
        model: PathBuf,
        /// Input CSV with columns f0,...,f{p-1} (a label column is ignored)
        #[arg(long = "in")]
        input: PathBuf,
        /// Output CSV of per-row labels, scores, and tie flags
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the Monte-Carlo success-rate experiment grid
    Experiment {
        /// JSON config file; omitted fields take the reference defaults
        #[arg(long)]
        config: Option<PathBuf>,
        /// Master seed for the trial grid
        #[arg(long)]
        seed: Option<u64>,
        /// Trials per learning-set size
        #[arg(long)]
        trials: Option<usize>,
        /// Smallest learning-set size
        #[arg(long)]
        n_min: Option<usize>,
        /// Largest learning-set size
        #[arg(long)]
        n_max: Option<usize>,
        /// Test points drawn per class per trial
        #[arg(long)]
        test_points: Option<usize>,
        /// Per-class means as `m00,m01;m10,m11`
        #[arg(long, allow_hyphen_values = true)]
        means: Option<String>,
        /// Per-class standard deviations, same shape as --means
        #[arg(long, allow_hyphen_values = true)]
        stddevs: Option<String>,
        /// Output prefix: writes <prefix>.csv and <prefix>.json
        #[arg(long)]
        out: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}

/// 1 for input problems (unreadable or malformed files, bad config),
/// 2 for domain errors (fit preconditions, dimension mismatches).
fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Csv { .. }
        | Error::Io(_)
        | Error::Json(_)
        | Error::InvalidConfig(_)
        | Error::UnsupportedFormat(_)
        | Error::InvalidModel(_) => 1,
        _ => 2,
    }
}

fn run(command: Command) -> Result<()> {
    match command {
        Command::Fit { mode, data, out, store_elements } => {
            cmd_fit(mode, &data, &out, store_elements)
        }
        Command::Classify { model, input, out } => cmd_classify(&model, &input, &out),
        Command::Experiment {
            config,
            seed,
            trials,
            n_min,
            n_max,
            test_points,
            means,
            stddevs,
            out,
        } => {
            let config =
                build_config(config, seed, trials, n_min, n_max, test_points, means, stddevs)?;
            cmd_experiment(&config, &out)
        }
    }
}

fn cmd_fit(mode: Mode, data: &Path, out: &Path, store_elements: bool) -> Result<()> {
    let dataset = Dataset::from_csv_path(data)?;
    let options = FitOptions { store_elements, ..FitOptions::default() };
    let model = ClassifierModel::fit(&dataset, mode, options)?;
    save_model_to_path(&model, out)?;
    let dims = model.bank().dims();
    println!(
        "fitted {} model: {} classes [{}], {} features, dims {:?}, product dim {}",
        model.mode(),
        model.class_labels().len(),
        model.class_labels().join(", "),
        model.p(),
        dims,
        model.bank().product_dim(),
    );
    println!("wrote {}", out.display());
    Ok(())
}

fn cmd_classify(model_path: &Path, input: &Path, out: &Path) -> Result<()> {
    let model = load_model_from_path(model_path)?;
    let patterns = dataset::read_patterns_csv(BufReader::new(File::open(input)?))?;
    let mut writer = BufWriter::new(File::create(out)?);
    write!(writer, "row,label")?;
    for label in model.class_labels() {
        write!(writer, ",score_{label}")?;
    }
    writeln!(writer, ",tie")?;
    for (row, pattern) in patterns.iter().enumerate() {
        let pred = model.predict(pattern)?;
        write!(writer, "{row},{}", pred.label)?;
        for score in &pred.scores {
            write!(writer, ",{score:.11e}")?;
        }
        writeln!(writer, ",{}", pred.tie)?;
    }
    writer.flush()?;
    println!("classified {} patterns, wrote {}", patterns.len(), out.display());
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn build_config(
    config_path: Option<PathBuf>,
    seed: Option<u64>,
    trials: Option<usize>,
    n_min: Option<usize>,
    n_max: Option<usize>,
    test_points: Option<usize>,
    means: Option<String>,
    stddevs: Option<String>,
) -> Result<ExperimentConfig> {
    let mut config = match config_path {
        Some(path) => serde_json::from_reader(BufReader::new(File::open(path)?))?,
        None => ExperimentConfig::default(),
    };
    if let Some(seed) = seed {
        config.master_seed = seed;
    }
    if let Some(trials) = trials {
        config.trials = trials;
    }
    if let Some(n_min) = n_min {
        config.n_min = n_min;
    }
    if let Some(n_max) = n_max {
        config.n_max = n_max;
    }
    if let Some(test_points) = test_points {
        config.test_points_per_class = test_points;
    }
    if let Some(means) = means {
        config.class_means = parse_class_matrix(&means, "--means")?;
    }
    if let Some(stddevs) = stddevs {
        config.class_stddevs = parse_class_matrix(&stddevs, "--stddevs")?;
    }
    Ok(config)
}

/// Parses `1,1;-2,-2` into per-class rows of per-feature values.
fn parse_class_matrix(text: &str, flag: &str) -> Result<Vec<Vec<f64>>> {
    text.split(';')
        .map(|row| {
            row.split(',')
                .map(|field| {
                    field.trim().parse::<f64>().map_err(|_| {
                        Error::InvalidConfig(format!("{flag}: invalid number '{field}'"))
                    })
                })
                .collect()
        })
        .collect()
}

fn cmd_experiment(config: &ExperimentConfig, prefix: &Path) -> Result<()> {
    let report = run_experiment(config)?;

    let csv_path = PathBuf::from(format!("{}.csv", prefix.display()));
    write_report_csv(&report, BufWriter::new(File::create(&csv_path)?))?;
    let json_path = PathBuf::from(format!("{}.json", prefix.display()));
    let mut json_out = BufWriter::new(File::create(&json_path)?);
    serde_json::to_writer_pretty(&mut json_out, &report)?;
    json_out.write_all(b"\n")?;
    json_out.flush()?;

    for row in &report.rows {
        if row.degenerate_stats {
            eprintln!(
                "warning: {} n={} aggregated {} trials; statistics are degenerate",
                row.mode, row.n, row.trials
            );
        }
    }
    if config.modes.len() >= 2 {
        let a = *config.modes.last().expect("nonempty");
        let b = config.modes[0];
        let cmp = compare_modes(&report, a, b, config.n_max)?;
        let t = cmp.t_statistic.map_or("n/a".to_string(), |t| format!("{t:.3}"));
        println!(
            "n={}: {} mean {:.4} vs {} mean {:.4} (diff {:+.4}, paired t {} over {} trials, {} at 95%)",
            cmp.n,
            cmp.mode_a,
            cmp.mean_a,
            cmp.mode_b,
            cmp.mean_b,
            cmp.mean_diff,
            t,
            cmp.paired_trials,
            if cmp.significant_95 { "significant" } else { "not significant" },
        );
    }
    println!("wrote {} and {}", csv_path.display(), json_path.display());
    Ok(())
}
