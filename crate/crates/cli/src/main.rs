use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use thermal_werner::output::{emit_csv, emit_svg, write_csv};
use thermal_werner::sweep::FigureOptions;
use thermal_werner::{
    classify_werner, critical_constants, evaluate_point, evaluate_werner, figure, run_sweep,
    temperature_of_x, x_of_temperature, Axis, BellChoice, Error, MeasureRecord, ModelParams,
    SweepSpec,
};

#[derive(Parser, Debug)]
#[command(
    name = "thermal-werner",
    version,
    about = "Thermal entanglement, Werner states and entropic non-triviality of the two-qubit Heisenberg model"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct Model {
    /// Coupling J_H (> 0)
    #[arg(long = "j", default_value_t = 1.0)]
    j: f64,
    /// Boltzmann constant
    #[arg(long = "kb", default_value_t = 1.0)]
    kb: f64,
}

impl Model {
    fn params(&self, b: f64) -> thermal_werner::Result<ModelParams> {
        ModelParams::with_kb(self.j, b, self.kb)
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// All measures of the Gibbs state at one (J_H, B, T)
    Point {
        #[command(flatten)]
        model: Model,
        #[arg(long)]
        b: f64,
        #[arg(long)]
        t: f64,
        #[arg(long, default_value = "phi+", value_parser = parse_bell)]
        bell: BellChoice,
    },
    /// All measures of the Werner state with mixing parameter x
    Werner {
        #[arg(long)]
        x: f64,
        #[arg(long, default_value = "phi+", value_parser = parse_bell)]
        bell: BellChoice,
    },
    /// Werner mixing parameter for (T, B), or with --invert the temperature for (x, B)
    Map {
        #[command(flatten)]
        model: Model,
        #[arg(long)]
        b: f64,
        #[arg(long, required_unless_present = "invert")]
        t: Option<f64>,
        #[arg(long, requires = "x")]
        invert: bool,
        #[arg(long)]
        x: Option<f64>,
    },
    /// Critical temperature and field
    Critical {
        #[command(flatten)]
        model: Model,
    },
    /// One-dimensional sweep written as CSV
    Sweep {
        /// t, invt, b or x
        #[arg(long, value_parser = parse_axis)]
        axis: Axis,
        #[arg(long)]
        lo: f64,
        #[arg(long)]
        hi: f64,
        #[arg(long)]
        n: usize,
        /// Logarithmic spacing
        #[arg(long)]
        log: bool,
        #[command(flatten)]
        model: Model,
        /// Field held fixed on temperature axes
        #[arg(long, default_value_t = 0.0)]
        b: f64,
        /// Temperature held fixed on the field axis
        #[arg(long)]
        t: Option<f64>,
        #[arg(long, default_value = "phi+", value_parser = parse_bell)]
        bell: BellChoice,
        /// Output file; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write an SVG plot to this path
        #[arg(long, requires = "plot")]
        svg: Option<PathBuf>,
        /// Columns to plot, as x_col,y_col
        #[arg(long, value_parser = parse_plot)]
        plot: Option<(String, String)>,
    },
    /// Regenerate the data of a figure preset
    Figure {
        #[arg(value_parser = clap::value_parser!(u8).range(1..=5))]
        id: u8,
        #[arg(long)]
        out: PathBuf,
        /// Also write one SVG per CSV
        #[arg(long)]
        svg: bool,
    },
    /// Entanglement regime of a Werner state
    Classify {
        #[arg(long)]
        x: f64,
    },
}

fn parse_bell(s: &str) -> Result<BellChoice, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_axis(s: &str) -> Result<Axis, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn parse_plot(s: &str) -> Result<(String, String), String> {
    match s.split_once(',') {
        Some((x, y)) if !x.is_empty() && !y.is_empty() && !y.contains(',') => {
            Ok((x.to_string(), y.to_string()))
        }
        _ => Err(format!(
            "expected two column names as x_col,y_col, got '{s}'"
        )),
    }
}

fn print_records(records: &[MeasureRecord]) -> thermal_werner::Result<()> {
    for r in records {
        r.check()?;
    }
    write_csv(records, io::stdout().lock()).map_err(|e| Error::io("<stdout>", e))
}

fn run(cli: Cli) -> thermal_werner::Result<()> {
    match cli.command {
        Command::Point { model, b, t, bell } => {
            let p = model.params(b)?;
            print_records(&[evaluate_point(&p, t, bell)?.record])
        }
        Command::Werner { x, bell } => print_records(&[evaluate_werner(x, bell)?]),
        Command::Map {
            model,
            b,
            t,
            invert,
            x,
        } => {
            let p = model.params(b)?;
            if invert {
                let x = x.expect("clap enforces --x with --invert");
                println!("{:?}", temperature_of_x(&p, x)?);
            } else {
                let t = t.expect("clap enforces --t without --invert");
                let m = x_of_temperature(&p, t)?;
                if !m.in_bijection_domain {
                    eprintln!(
                        "warning: B = {b} exceeds B_c = {}; x is not one-to-one in T here",
                        p.critical_field()
                    );
                }
                println!("{:?}", m.x);
            }
            Ok(())
        }
        Command::Critical { model } => {
            let c = critical_constants(&model.params(0.0)?);
            println!("t_c,b_c");
            println!("{:?},{:?}", c.t_c, c.b_c);
            Ok(())
        }
        Command::Sweep {
            axis,
            lo,
            hi,
            n,
            log,
            model,
            b,
            t,
            bell,
            out,
            svg,
            plot,
        } => {
            let mut spec = SweepSpec::new(axis, lo, hi, n, model.params(b)?).with_bell(bell);
            if log {
                spec = spec.log();
            }
            if let Some(t) = t {
                spec = spec.at_temperature(t);
            }
            let records = run_sweep(&spec)?;
            match &out {
                Some(path) => emit_csv(&records, path)?,
                None => print_records(&records)?,
            }
            if let (Some(path), Some((x_col, y_col))) = (svg, plot) {
                emit_svg(&records, &x_col, &y_col, &path)?;
            }
            Ok(())
        }
        Command::Figure { id, out, svg } => {
            let written = figure(id, &out, FigureOptions { svg })?;
            let mut stdout = io::stdout().lock();
            for path in written {
                writeln!(stdout, "{}", path.display()).map_err(|e| Error::io("<stdout>", e))?;
            }
            Ok(())
        }
        Command::Classify { x } => {
            println!("{}", classify_werner(x)?);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
