//! `spc`: encode words into bundled infinitesimal coordinates, verify ledgers,
//! and evaluate hyperreal expressions.
//!
//! Exit codes: 0 ok, 1 roundtrip failures, 2 input error, 3 config error,
//! 4 malformed ledger, 5 integrity failure, 6 infinite value under `st`.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use subparticle::expr::{self, EvalError, ExprError};
use subparticle::pipeline::{self, Config, ConfigOverrides, Ledger, PipelineError, RecoverError};
use subparticle::{Base, HyperError};

#[derive(Parser)]
#[command(name = "spc", version, about = "Subparticle coordinate encoding pipeline")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the full pipeline on one word and emit its JSON ledger
    Encode {
        #[arg(long, allow_hyphen_values = true)]
        word: String,
        #[command(flatten)]
        config: ConfigArgs,
        /// Write the ledger here instead of standard output
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute realization and decoding from a ledger and print the word
    Realize {
        #[arg(long)]
        ledger: PathBuf,
    },
    /// Evaluate an expression such as "st(42*H*eps + eps)"
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, default_value_t = 10)]
        base: u64,
    },
    /// Run the pipeline on every line of a corpus file
    Roundtrip {
        #[arg(long)]
        corpus: PathBuf,
        #[command(flatten)]
        config: ConfigArgs,
    },
}

#[derive(Args)]
struct ConfigArgs {
    /// JSON config file; flags override its values
    #[arg(long)]
    config: Option<PathBuf>,
    #[arg(long)]
    base: Option<u64>,
    #[arg(long)]
    dims: Option<usize>,
    /// Ordered symbols of the alphabet
    #[arg(long)]
    alphabet: Option<String>,
    /// Quality coordinate that carries the code
    #[arg(long)]
    coord: Option<usize>,
    /// Signs of coordinates 3..=dims, e.g. "+-+-+-"
    #[arg(long, allow_hyphen_values = true)]
    signs: Option<String>,
    /// Naming coordinate value
    #[arg(long)]
    naming: Option<u64>,
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

impl ConfigArgs {
    fn resolve(self) -> Result<Config, Failure> {
        let from_file = match &self.config {
            Some(path) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| Failure::new(3, format!("cannot read config {}: {e}", path.display())))?;
                ConfigOverrides::from_json(&text).map_err(|e| Failure::new(3, e.to_string()))?
            }
            None => ConfigOverrides::default(),
        };
        let flags = ConfigOverrides {
            base: self.base,
            dims: self.dims,
            alphabet: self.alphabet,
            bundle_coordinate: self.coord,
            signs: self.signs,
            naming: self.naming,
        };
        from_file.merge(flags).resolve().map_err(|e| Failure::new(3, e.to_string()))
    }
}

fn encode(word: &str, config: ConfigArgs, out: Option<PathBuf>) -> Result<(), Failure> {
    let config = config.resolve()?;
    let ledger = pipeline::run(word, &config).map_err(|e| match e {
        PipelineError::Config(e) => Failure::new(3, e.to_string()),
        PipelineError::Codec(e) => Failure::new(2, e.to_string()),
        other => Failure::new(1, other.to_string()),
    })?;
    let json = ledger.to_json();
    match out {
        Some(path) => fs::write(&path, json + "\n")
            .map_err(|e| Failure::new(2, format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{json}");
            Ok(())
        }
    }
}

fn realize(path: PathBuf) -> Result<(), Failure> {
    let text = fs::read_to_string(&path)
        .map_err(|e| Failure::new(4, format!("cannot read ledger {}: {e}", path.display())))?;
    let word = Ledger::from_json(&text)
        .and_then(|ledger| pipeline::recover(&ledger))
        .map_err(|e| {
            let code = match e {
                RecoverError::Malformed(_) => 4,
                RecoverError::Integrity(_) => 5,
                RecoverError::Infinite(_) => 6,
            };
            Failure::new(code, e.to_string())
        })?;
    println!("{word}");
    Ok(())
}

fn eval(text: &str, base: u64) -> Result<(), Failure> {
    let base = Base::new(base).map_err(|e| Failure::new(3, e.to_string()))?;
    match expr::evaluate(text, base) {
        Ok(value) => {
            println!("{}", expr::describe(&value));
            Ok(())
        }
        Err(ExprError::Parse(e)) => Err(Failure { code: 2, message: e.render(text) }),
        Err(ExprError::Eval(EvalError::Hyper(HyperError::InfiniteValue))) => {
            Err(Failure::new(6, HyperError::InfiniteValue.to_string()))
        }
        Err(ExprError::Eval(e)) => Err(Failure::new(2, e.to_string())),
    }
}

fn roundtrip(corpus: PathBuf, config: ConfigArgs) -> Result<(), Failure> {
    let config = config.resolve()?;
    let text = fs::read_to_string(&corpus)
        .map_err(|e| Failure::new(2, format!("cannot read corpus {}: {e}", corpus.display())))?;
    let words: Vec<&str> = text.lines().collect();
    let results: Vec<Result<(), String>> =
        words.par_iter().map(|w| pipeline::roundtrip_word(w, &config)).collect();

    let mut ok = 0;
    for (word, result) in words.iter().zip(&results) {
        match result {
            Ok(()) => ok += 1,
            Err(reason) => println!("FAIL {word:?}: {reason}"),
        }
    }
    println!("{ok}/{} ok", words.len());
    if ok == words.len() {
        Ok(())
    } else {
        Err(Failure::new(1, format!("{} of {} words failed", words.len() - ok, words.len())))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Encode { word, config, out } => encode(&word, config, out),
        Command::Realize { ledger } => realize(ledger),
        Command::Eval { expr, base } => eval(&expr, base),
        Command::Roundtrip { corpus, config } => roundtrip(corpus, config),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if f.message.starts_with("error") {
                eprintln!("{}", f.message);
            } else {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
