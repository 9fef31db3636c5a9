use std::fs;
use std::io::{self, Read};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use revenge::counting::{self, Mode};
use revenge::cube::state_file;
use revenge::verify::{self, Level};
use revenge::{CubeElem, InvariantClass, Shape};

const SUCCESS: u8 = 0;
const UNSOLVABLE: u8 = 1;
const INVALID_INPUT: u8 = 2;
const VERIFY_FAILED: u8 = 3;

#[derive(Parser)]
#[command(name = "revenge", version, about = "Rubik's Revenge state space: counts, probabilities, solvability")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Marked,
    Mechanical,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Mode {
        match m {
            ModeArg::Marked => Mode::Marked,
            ModeArg::Mechanical => Mode::Mechanical,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Number of inequivalent assemblies
    Count {
        #[arg(long, value_enum, default_value = "marked")]
        mode: ModeArg,
    },
    /// Probability that a uniformly random assembly is solvable
    Prob {
        #[arg(long, value_enum, default_value = "marked")]
        mode: ModeArg,
        #[arg(long, conflicts_with = "mc")]
        exact: bool,
        /// Monte-Carlo estimate from N samples
        #[arg(long, value_name = "N")]
        mc: Option<u64>,
        #[arg(long, env = "REVENGE_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Decide whether the state in FILE can be solved (`-` reads stdin)
    Solvable {
        #[arg(long, value_enum, default_value = "marked")]
        mode: ModeArg,
        #[arg(default_value = "-")]
        file: PathBuf,
    },
    /// Print the class string of the state in FILE
    Invariant {
        #[arg(long, value_enum, default_value = "marked")]
        mode: ModeArg,
        #[arg(default_value = "-")]
        file: PathBuf,
    },
    /// Print a state file representing CLASS (read from stdin when omitted)
    Canonical {
        #[arg(long, value_enum, default_value = "marked")]
        mode: ModeArg,
        class: Option<String>,
    },
    /// Print a uniformly random state file
    RandomAssembly {
        #[arg(long, value_enum, default_value = "marked")]
        mode: ModeArg,
        #[arg(long, env = "REVENGE_SEED", default_value_t = 0)]
        seed: u64,
    },
    /// Run the self-checks, one line each
    Verify {
        #[arg(long, value_enum, default_value = "full")]
        level: LevelArg,
    },
}

struct Failure {
    code: u8,
    message: String,
}

fn invalid(message: impl ToString) -> Failure {
    Failure { code: INVALID_INPUT, message: message.to_string() }
}

fn read_input(path: &PathBuf) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map_err(|e| invalid(format!("stdin: {e}")))?;
        Ok(text)
    } else {
        fs::read_to_string(path).map_err(|e| invalid(format!("{}: {e}", path.display())))
    }
}

fn read_state(path: &PathBuf, mode: Mode) -> Result<CubeElem, Failure> {
    let text = read_input(path)?;
    let name = if path.as_os_str() == "-" { "<stdin>".to_string() } else { path.display().to_string() };
    let t = state_file::parse(&text).map_err(|e| invalid(format!("{name}: {e}")))?;
    if mode == Mode::Mechanical && !t.in_t_prime() {
        return Err(invalid("not mechanically admissible: edge flips present"));
    }
    Ok(t)
}

fn class_string(t: &CubeElem, mode: Mode) -> String {
    match mode {
        Mode::Marked => t.invariant_marked().to_string(),
        Mode::Mechanical => t.invariant_mechanical().expect("checked admissible").to_string(),
    }
}

fn parse_class(s: &str, mode: Mode) -> Result<InvariantClass, Failure> {
    let s = s.trim();
    match mode {
        Mode::Marked => s.parse().map_err(|e: revenge::Error| invalid(e)),
        Mode::Mechanical => match s {
            "0" | "1" | "2" => InvariantClass::new(vec![0; Shape::REVENGE.pairs], s.parse().unwrap()).map_err(invalid),
            _ => Err(invalid(format!("invalid mechanical class `{s}`, expected 0, 1 or 2"))),
        },
    }
}

fn run(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Count { mode } => {
            println!("{}", counting::count_classes(mode.into()));
        }
        Command::Prob { mode, mc: Some(n), seed, .. } => {
            let est = counting::monte_carlo_prob(mode.into(), n, seed).map_err(invalid)?;
            println!("{}", counting::format_rational(&est.estimate));
            println!("stderr {:.6e}", est.stderr);
        }
        Command::Prob { mode, .. } => {
            println!("{}", counting::format_rational(&counting::prob_exact(mode.into())));
        }
        Command::Solvable { mode, file } => {
            let mode = mode.into();
            let t = read_state(&file, mode)?;
            let solvable = match mode {
                Mode::Marked => t.in_il(),
                Mode::Mechanical => t.solvable_mechanical().expect("checked admissible"),
            };
            if !solvable {
                println!("unsolvable: {}", class_string(&t, mode));
                return Ok(UNSOLVABLE);
            }
            println!("solvable");
        }
        Command::Invariant { mode, file } => {
            let mode = mode.into();
            println!("{}", class_string(&read_state(&file, mode)?, mode));
        }
        Command::Canonical { mode, class } => {
            let text = match class {
                Some(c) if c != "-" => c,
                _ => read_input(&PathBuf::from("-"))?,
            };
            let class = parse_class(&text, mode.into())?;
            let t = class.canonical_representative().map_err(invalid)?;
            print!("{}", state_file::format(&t));
        }
        Command::RandomAssembly { mode, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let t = match Mode::from(mode) {
                Mode::Marked => CubeElem::random(&mut rng),
                Mode::Mechanical => CubeElem::random_t_prime(&mut rng),
            };
            print!("{}", state_file::format(&t));
        }
        Command::Verify { level } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let checks = verify::run(level);
            for c in &checks {
                println!("{c}");
            }
            if checks.iter().any(|c| !c.passed) {
                return Ok(VERIFY_FAILED);
            }
        }
    }
    Ok(SUCCESS)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { INVALID_INPUT } else { SUCCESS });
        }
    };
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
