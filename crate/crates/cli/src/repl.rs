//! Line-oriented driver shared by the REPL and the script runner.

use std::fmt;

use cga_core::Backend;

use crate::error::{CliError, ParseError, Pos};
use crate::eval::{BladeDisplay, Session, Value};
use crate::parser::parse_statement_at;

/// One line of session output.
#[derive(Clone, Debug, PartialEq)]
pub enum Entry {
    Input { n: usize, text: String },
    Output { n: usize, text: String },
    Note(String),
    Warning(String),
    Error(String),
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Entry::Input { n, text } => write!(f, "In[{n}] := {text}"),
            Entry::Output { n, text } => write!(f, "Out[{n}] = {text}"),
            Entry::Note(s) => f.write_str(s),
            Entry::Warning(s) => write!(f, "Warning: {s}"),
            Entry::Error(s) => write!(f, "Error: {s}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flow {
    Continue,
    Quit,
}

const HELP: &str = "\
commands: :backend exact|symbolic|float, :vars, :clear name..., :load file,
          :json on|off, :blades geometric|outer, :help, :quit
products: a*b geometric, a^b outer, a|b left contraction (one precedence level)";

/// A session plus numbering and output settings.
#[derive(Debug, Default)]
pub struct Runner {
    pub session: Session,
    counter: usize,
    json: bool,
    blades: BladeDisplay,
}

impl Runner {
    pub fn new(backend: Backend) -> Self {
        Runner { session: Session::new(backend), ..Runner::default() }
    }

    /// Number of the next statement.
    pub fn next_index(&self) -> usize {
        self.counter + 1
    }

    pub fn render(&self, v: &Value) -> String {
        if self.json {
            v.to_json().to_string()
        } else {
            v.render(self.blades)
        }
    }

    /// Handles one input line. Failures are logged as an [`Entry::Error`]
    /// and also returned so callers can pick an exit code.
    pub fn feed(&mut self, raw: &str, line: usize, log: &mut Vec<Entry>) -> Result<Flow, CliError> {
        let result = self.feed_inner(raw, line, log);
        if let Err(e) = &result {
            log.push(Entry::Error(e.to_string()));
        }
        result
    }

    /// Runs every line of a script, stopping at the first failure.
    pub fn feed_script(&mut self, text: &str, log: &mut Vec<Entry>) -> Result<Flow, CliError> {
        for (i, raw) in text.lines().enumerate() {
            if self.feed(raw, i + 1, log)? == Flow::Quit {
                return Ok(Flow::Quit);
            }
        }
        Ok(Flow::Continue)
    }

    fn feed_inner(&mut self, raw: &str, line: usize, log: &mut Vec<Entry>) -> Result<Flow, CliError> {
        let text = raw.split('#').next().unwrap_or("").trim();
        if text.is_empty() {
            return Ok(Flow::Continue);
        }
        if let Some(cmd) = text.strip_prefix(':') {
            return self.command(cmd, line, log);
        }
        self.counter += 1;
        let n = self.counter;
        log.push(Entry::Input { n, text: text.to_string() });
        let st = parse_statement_at(text, line)?;
        let outcome = self.session.execute(&st)?;
        log.extend(outcome.warnings.into_iter().map(Entry::Warning));
        if !outcome.silent {
            log.push(Entry::Output { n, text: self.render(&outcome.value) });
        }
        Ok(Flow::Continue)
    }

    fn command(&mut self, cmd: &str, line: usize, log: &mut Vec<Entry>) -> Result<Flow, CliError> {
        let mut words = cmd.split_whitespace();
        let name = words.next().unwrap_or("");
        let rest: Vec<&str> = words.collect();
        let bad = |msg: String| CliError::Parse(ParseError::Syntax(msg, Pos { line, col: 1 }));
        match (name, rest.as_slice()) {
            ("quit" | "q" | "exit", []) => return Ok(Flow::Quit),
            ("help", []) => log.extend(HELP.lines().map(|l| Entry::Note(l.to_string()))),
            ("backend", []) => log.push(Entry::Note(format!("backend: {}", self.session.backend()))),
            ("backend", [b]) => {
                let backend: Backend = b.parse().map_err(bad)?;
                self.session.set_backend(backend);
                log.push(Entry::Note(format!("backend: {backend}")));
            }
            ("vars", []) => {
                let vars: Vec<Entry> = self
                    .session
                    .vars()
                    .map(|(k, v)| Entry::Note(format!("{k} = {}", Value::Mv(v.clone()).render(self.blades))))
                    .collect();
                if vars.is_empty() {
                    log.push(Entry::Note("(no variables)".into()));
                }
                log.extend(vars);
                let symbols: Vec<&str> = self.session.symbols().collect();
                if !symbols.is_empty() {
                    log.push(Entry::Note(format!("symbols: {}", symbols.join(", "))));
                }
            }
            ("clear", names) if !names.is_empty() => {
                for name in names {
                    let name = name.trim_end_matches(',');
                    let msg = if self.session.clear(name) {
                        format!("cleared {name}")
                    } else {
                        format!("nothing named {name}")
                    };
                    log.push(Entry::Note(msg));
                }
            }
            ("load", [path]) => {
                let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("cannot read {path}: {e}")))?;
                return self.feed_script(&text, log);
            }
            ("json", [on @ ("on" | "off")]) => {
                self.json = *on == "on";
                log.push(Entry::Note(format!("json: {on}")));
            }
            ("blades", [mode @ ("geometric" | "outer")]) => {
                self.blades = if *mode == "outer" { BladeDisplay::Outer } else { BladeDisplay::Geometric };
                log.push(Entry::Note(format!("blades: {mode}")));
            }
            _ => return Err(bad(format!("unknown command `:{cmd}` (try :help)"))),
        }
        Ok(Flow::Continue)
    }
}
