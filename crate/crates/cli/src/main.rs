use std::io::{self, BufRead, IsTerminal, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use cga_cli::repl::{Entry, Flow};
use cga_cli::{parse_statement, CliError, Runner, Session};
use cga_core::Backend;
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "cga", version, about = "Conformal geometric algebra calculator")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BackendArg {
    /// Coefficient backend: exact, symbolic or float.
    #[arg(long, env = "CGA_BACKEND", default_value = "exact")]
    backend: Backend,
}

#[derive(Subcommand)]
enum Command {
    /// Interactive session.
    Repl {
        #[command(flatten)]
        backend: BackendArg,
    },
    /// Evaluate one expression and print the result.
    Eval {
        expr: String,
        #[command(flatten)]
        backend: BackendArg,
        /// Print the result as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run a script, one statement per line.
    Run {
        file: PathBuf,
        #[command(flatten)]
        backend: BackendArg,
        /// Also write the numbered In/Out transcript to this file.
        #[arg(long)]
        transcript: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Repl { backend } => repl(backend.backend),
        Command::Eval { expr, backend, json } => eval(&expr, backend.backend, json),
        Command::Run { file, backend, transcript } => run(&file, backend.backend, transcript.as_deref()),
    };
    ExitCode::from(code as u8)
}

fn eval(expr: &str, backend: Backend, json: bool) -> i32 {
    let result = parse_statement(expr).map_err(CliError::from).and_then(|st| {
        let outcome = Session::new(backend).execute(&st)?;
        Ok(outcome)
    });
    match result {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("Warning: {w}");
            }
            if json {
                println!("{}", outcome.value.to_json());
            } else {
                println!("{}", outcome.value);
            }
            0
        }
        Err(e) => {
            eprintln!("Error: {e}");
            e.exit_code()
        }
    }
}

fn run(file: &std::path::Path, backend: Backend, transcript: Option<&std::path::Path>) -> i32 {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("Error: cannot read {}: {e}", file.display());
            return 1;
        }
    };
    let mut runner = Runner::new(backend);
    let mut log = Vec::new();
    let result = runner.feed_script(&text, &mut log);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for entry in &log {
        match entry {
            Entry::Input { .. } => {}
            Entry::Error(_) => eprintln!("{entry}"),
            _ => {
                let _ = writeln!(out, "{entry}");
            }
        }
    }
    if let Some(path) = transcript {
        let body: String = log.iter().map(|e| format!("{e}\n")).collect();
        if let Err(e) = std::fs::write(path, body) {
            eprintln!("Error: cannot write {}: {e}", path.display());
            return 1;
        }
    }
    match result {
        Ok(_) => 0,
        Err(e) => e.exit_code(),
    }
}

fn repl(backend: Backend) -> i32 {
    let mut runner = Runner::new(backend);
    let interactive = io::stdin().is_terminal();
    if interactive {
        println!("cga: conformal geometric algebra calculator ({backend} backend). :help for commands.");
    }
    let stdin = io::stdin();
    let mut lines = stdin.lock().lines();
    for line_no in 1.. {
        if interactive {
            print!("In[{}] := ", runner.next_index());
            let _ = io::stdout().flush();
        }
        let Some(Ok(line)) = lines.next() else { break };
        let mut log = Vec::new();
        let flow = runner.feed(&line, line_no, &mut log);
        for entry in &log {
            match entry {
                Entry::Input { .. } => {}
                Entry::Error(_) => eprintln!("{entry}"),
                _ => println!("{entry}"),
            }
        }
        if let Ok(Flow::Quit) = flow {
            break;
        }
    }
    0
}
