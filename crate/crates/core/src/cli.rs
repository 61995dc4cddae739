//! Command-line front end. [`run_command`] does all the work and returns
//! text instead of printing, so it can be driven from tests and the REPL.

use std::fmt::Write as _;
use std::io::{BufRead, Write};

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::Error;
use crate::machine;
use crate::number::{GrossNumber, Rational};
use crate::oracle;
use crate::parser::{self, Style};
use crate::prime::{self, PrimalityVerdict, PrimeRule, SetId, TraceStep};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PARSE: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_USAGE: i32 = 3;

#[derive(Debug, Clone, PartialEq)]
pub struct CommandResult {
    pub exit_code: i32,
    /// Output on success, the error message otherwise.
    pub human_text: String,
    pub machine_record: Option<Value>,
}

impl CommandResult {
    fn ok(human_text: String, machine_record: Value) -> Self {
        CommandResult {
            exit_code: EXIT_OK,
            human_text,
            machine_record: Some(machine_record),
        }
    }

    fn fail(exit_code: i32, message: String) -> Self {
        CommandResult {
            exit_code,
            human_text: message,
            machine_record: None,
        }
    }

    /// What goes to stdout in the given mode; `None` on failure.
    pub fn stdout_text(&self, machine: bool) -> Option<String> {
        if self.exit_code != EXIT_OK {
            return None;
        }
        match (&self.machine_record, machine) {
            (Some(rec), true) => Some(rec.to_string()),
            _ => Some(self.human_text.clone()),
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "grossone",
    version,
    about = "Exact arithmetic with grossone-based numerals"
)]
struct Cli {
    /// Print "G" instead of "①"
    #[arg(long, global = true)]
    ascii: bool,
    /// Emit JSON records
    #[arg(long, global = true)]
    machine: bool,
    /// Include proof traces for classify and twins
    #[arg(long, global = true)]
    trace: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct LambdaArgs {
    /// A λ-form q·①^k
    #[arg(long, allow_hyphen_values = true)]
    lambda: String,
    /// Finite prime
    #[arg(long)]
    p: u64,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Evaluate an expression
    Eval {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Compare two expressions
    Cmp {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
    },
    /// Primality verdict
    Classify {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Purely infinite / simple / compound flags
    Shape {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Split into infinite, finite and infinitesimal parts
    Decompose {
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Infinite twin primes λ/p^(2m+1) ± 1
    Twins {
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long, allow_negative_numbers = true)]
        m: i64,
    },
    /// Members λ/p^(2m+1) of A(p)
    EnumA {
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long)]
        count: u64,
        #[arg(long, default_value_t = 1, allow_negative_numbers = true)]
        m_start: i64,
    },
    /// Members of B(p), twin pairs for m = 1..=count
    EnumB {
        #[command(flatten)]
        lambda: LambdaArgs,
        #[arg(long)]
        count: u64,
    },
    /// Size of naturals, evens, odds or integers
    SetCount { name: String },
    /// Substitute ① := T
    Subst {
        #[arg(allow_hyphen_values = true)]
        expr: String,
        #[arg(long, allow_hyphen_values = true)]
        at: String,
    },
    /// Finite-analogue check with N = lcm(1..B)²
    FiniteCheck {
        #[arg(long)]
        bound: u64,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        mmax: u64,
    },
    /// Twin primes up to a limit
    Sieve {
        #[arg(long)]
        limit: u64,
    },
    /// Read commands or expressions line by line
    Repl,
}

#[derive(Debug, Clone, Copy, Default)]
struct Opts {
    ascii: bool,
    trace: bool,
    machine: bool,
}

impl Opts {
    fn style(self) -> Style {
        if self.ascii {
            Style::Ascii
        } else {
            Style::Unicode
        }
    }

    fn fmt(self, x: &GrossNumber) -> String {
        parser::format(x, self.style())
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Parse(_) => EXIT_PARSE,
        _ => EXIT_DOMAIN,
    }
}

fn eval(text: &str) -> Result<GrossNumber, Error> {
    parser::eval_str(text)
}

fn lambda_cert(text: &str) -> Result<prime::LambdaCert, CommandResult> {
    let x = eval(text).map_err(|e| CommandResult::fail(exit_code_for(&e), e.to_string()))?;
    prime::lambda_certify(&x).ok_or_else(|| {
        CommandResult::fail(
            EXIT_DOMAIN,
            format!("{x} is not a λ-form q·①^k with q > 0 and k a positive integer"),
        )
    })
}

fn rational_text(r: &Rational) -> String {
    parser::format(&GrossNumber::from_rational(r.clone()), Style::Ascii)
}

fn write_trace(out: &mut String, trace: &[TraceStep]) {
    for (i, step) in trace.iter().enumerate() {
        let _ = write!(out, "\n  {}. {}", i + 1, step);
    }
}

pub fn verdict_text(v: &PrimalityVerdict, style: Style) -> String {
    match v {
        PrimalityVerdict::Prime { rule, .. } => match rule {
            PrimeRule::Finite => "Prime (finite)".to_string(),
            r => format!("Prime ({})", r.citation()),
        },
        PrimalityVerdict::Composite {
            witness, cofactor, ..
        } => format!(
            "Composite: ({}) * ({})",
            parser::format(witness, style),
            parser::format(cofactor, style)
        ),
        PrimalityVerdict::NotInteger => "NotInteger".to_string(),
        PrimalityVerdict::NotPositive => "NotPositive".to_string(),
        PrimalityVerdict::Unknown { reason, .. } => format!("Unknown: {reason}"),
    }
}

fn dispatch(command: Command, opts: Opts) -> CommandResult {
    macro_rules! tryv {
        ($e:expr) => {
            match $e {
                Ok(v) => v,
                Err(e) => {
                    let e: Error = e.into();
                    return CommandResult::fail(exit_code_for(&e), e.to_string());
                }
            }
        };
    }
    macro_rules! cert {
        ($text:expr) => {
            match lambda_cert($text) {
                Ok(c) => c,
                Err(r) => return r,
            }
        };
    }

    match command {
        Command::Eval { expr } => {
            let x = tryv!(eval(&expr));
            CommandResult::ok(opts.fmt(&x), parser::to_machine(&x))
        }
        Command::Cmp { a, b } => {
            let (a, b) = (tryv!(eval(&a)), tryv!(eval(&b)));
            let ord = format!("{:?}", a.cmp(&b));
            CommandResult::ok(ord.clone(), json!({ "cmp": ord }))
        }
        Command::Classify { expr } => {
            let x = tryv!(eval(&expr));
            let v = prime::classify_prime(&x);
            let mut text = verdict_text(&v, opts.style());
            if opts.trace {
                write_trace(&mut text, v.trace());
            }
            CommandResult::ok(text, machine::verdict_to_machine(&v))
        }
        Command::Shape { expr } => {
            let s = tryv!(eval(&expr)).classify_shape();
            let rec = json!({
                "is_zero": s.is_zero,
                "is_finite": s.is_finite,
                "is_purely_infinite": s.is_purely_infinite,
                "has_infinitesimal": s.has_infinitesimal,
                "is_simple": s.is_simple,
                "is_compound": s.is_compound,
            });
            let text = rec
                .as_object()
                .expect("object")
                .iter()
                .map(|(k, v)| format!("{k}: {v}"))
                .collect::<Vec<_>>()
                .join("\n");
            CommandResult::ok(text, rec)
        }
        Command::Decompose { expr } => {
            let d = tryv!(eval(&expr)).decompose();
            let text = format!(
                "infinite: {}\nfinite: {}\ninfinitesimal: {}",
                opts.fmt(&d.infinite_part),
                rational_text(&d.finite_part),
                opts.fmt(&d.infinitesimal_part)
            );
            let rec = json!({
                "infinite_part": parser::to_machine(&d.infinite_part),
                "finite_part": format!("{}/{}", d.finite_part.numer(), d.finite_part.denom()),
                "infinitesimal_part": parser::to_machine(&d.infinitesimal_part),
            });
            CommandResult::ok(text, rec)
        }
        Command::Twins { lambda, m } => {
            let c = cert!(&lambda.lambda);
            let t = tryv!(prime::make_twins(&c, lambda.p, m));
            let mut text = format!(
                "lower: {}\nupper: {}",
                opts.fmt(&t.lower),
                opts.fmt(&t.upper)
            );
            if opts.trace {
                write_trace(&mut text, &t.trace);
            }
            let rec = json!({
                "lower": parser::to_machine(&t.lower),
                "upper": parser::to_machine(&t.upper),
                "p": t.p,
                "m": t.m,
                "trace": machine::trace_to_machine(&t.trace),
            });
            CommandResult::ok(text, rec)
        }
        Command::EnumA {
            lambda,
            count,
            m_start,
        } => {
            let c = cert!(&lambda.lambda);
            let xs = tryv!(prime::enumerate_a(&c, lambda.p, count, m_start));
            members_result(&xs, opts)
        }
        Command::EnumB { lambda, count } => {
            let c = cert!(&lambda.lambda);
            let xs = tryv!(prime::enumerate_b(&c, lambda.p, count));
            members_result(&xs, opts)
        }
        Command::SetCount { name } => {
            let Ok(id) = name.parse::<SetId>() else {
                return CommandResult::fail(EXIT_USAGE, format!("unknown set '{name}'"));
            };
            let x = prime::set_count(id);
            CommandResult::ok(opts.fmt(&x), parser::to_machine(&x))
        }
        Command::Subst { expr, at } => {
            let x = tryv!(eval(&expr));
            let Some(t) = tryv!(eval(&at)).as_rational() else {
                return CommandResult::fail(
                    EXIT_DOMAIN,
                    "substitution point must be finite".into(),
                );
            };
            let r = tryv!(x.eval_at(&t));
            CommandResult::ok(
                rational_text(&r),
                json!({ "value": format!("{}/{}", r.numer(), r.denom()) }),
            )
        }
        Command::FiniteCheck { bound, p, mmax } => {
            let r = tryv!(oracle::finite_analogue_check(bound, p, mmax));
            let mut text = format!("N = lcm(1..{bound})^2 = {}", r.stand_in);
            for c in &r.cases {
                let status = match (c.divisible, c.passed, c.offending_prime) {
                    (false, ..) => format!("FAIL ({p}^{} does not divide N)", 2 * c.m + 1),
                    (true, true, _) => "pass".to_string(),
                    (true, false, Some(q)) => format!(
                        "FAIL ({q} divides N/{p}^{} {} 1)",
                        2 * c.m + 1,
                        if c.offending_offset == Some(-1) {
                            "-"
                        } else {
                            "+"
                        }
                    ),
                    (true, false, None) => "FAIL".to_string(),
                };
                let _ = write!(text, "\nm = {}: {status}", c.m);
            }
            let failed = r.cases.iter().filter(|c| !c.passed).count();
            if failed == 0 {
                text.push_str("\nall cases passed");
            } else {
                let _ = write!(text, "\n{failed} of {} cases failed", r.cases.len());
            }
            CommandResult::ok(text, machine::report_to_machine(&r))
        }
        Command::Sieve { limit } => {
            let pairs = oracle::twin_sieve(limit);
            let text = pairs
                .iter()
                .map(|(a, b)| format!("({a}, {b})"))
                .collect::<Vec<_>>()
                .join("\n");
            CommandResult::ok(text, json!({ "pairs": pairs }))
        }
        Command::Repl => {
            let stdin = std::io::stdin();
            let stdout = std::io::stdout();
            match repl(stdin.lock(), stdout.lock(), opts) {
                Ok(()) => CommandResult {
                    exit_code: EXIT_OK,
                    human_text: String::new(),
                    machine_record: None,
                },
                Err(e) => CommandResult::fail(EXIT_DOMAIN, e.to_string()),
            }
        }
    }
}

fn members_result(xs: &[GrossNumber], opts: Opts) -> CommandResult {
    let text = xs
        .iter()
        .map(|x| opts.fmt(x))
        .collect::<Vec<_>>()
        .join("\n");
    let rec = json!({ "members": xs.iter().map(parser::to_machine).collect::<Vec<_>>() });
    CommandResult::ok(text, rec)
}

fn finish(mut r: CommandResult, ascii: bool) -> CommandResult {
    if ascii {
        r.human_text = r.human_text.replace('\u{2460}', "G");
    }
    r
}

/// Runs one invocation. `argv[0]` is the program name.
pub fn run_command<I, S>(argv: I) -> CommandResult
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            return CommandResult {
                exit_code: code,
                human_text: e.to_string().trim_end().to_string(),
                machine_record: None,
            };
        }
    };
    let opts = Opts {
        ascii: cli.ascii,
        trace: cli.trace,
        machine: cli.machine,
    };
    finish(dispatch(cli.command, opts), cli.ascii)
}

const SINGLE_EXPR: [&str; 4] = ["eval", "classify", "shape", "decompose"];
const COMMANDS: [&str; 12] = [
    "eval",
    "cmp",
    "classify",
    "shape",
    "decompose",
    "twins",
    "enum-a",
    "enum-b",
    "set-count",
    "subst",
    "finite-check",
    "sieve",
];

/// Whitespace split honouring single and double quotes.
fn split_words(line: &str) -> Vec<String> {
    let mut words = Vec::new();
    let mut cur = String::new();
    let mut quote: Option<char> = None;
    let mut in_word = false;
    for c in line.chars() {
        match quote {
            Some(q) if c == q => quote = None,
            Some(_) => cur.push(c),
            None if c == '"' || c == '\'' => {
                quote = Some(c);
                in_word = true;
            }
            None if c.is_whitespace() => {
                if in_word {
                    words.push(std::mem::take(&mut cur));
                    in_word = false;
                }
            }
            None => {
                cur.push(c);
                in_word = true;
            }
        }
    }
    if in_word {
        words.push(cur);
    }
    words
}

/// Turns a REPL line into an argv, or `None` for a bare expression.
fn line_argv(line: &str, opts: Opts) -> Vec<String> {
    let mut words = split_words(line);
    let mut argv = vec!["grossone".to_string()];
    if opts.ascii {
        argv.push("--ascii".into());
    }
    if opts.machine {
        argv.push("--machine".into());
    }
    if opts.trace {
        argv.push("--trace".into());
    }
    let first = words.first().map(String::as_str).unwrap_or("");
    if !COMMANDS.contains(&first) {
        argv.push("eval".into());
        argv.push(line.trim().to_string());
        return argv;
    }
    let cmd = words.remove(0);
    if SINGLE_EXPR.contains(&cmd.as_str()) {
        let (flags, rest): (Vec<String>, Vec<String>) = words
            .into_iter()
            .partition(|w| matches!(w.as_str(), "--ascii" | "--machine" | "--trace"));
        argv.extend(flags);
        argv.push(cmd);
        argv.push(rest.join(" "));
    } else {
        argv.push(cmd);
        argv.extend(words);
    }
    argv
}

/// Reads one command or expression per line until end of input or `quit`.
/// Errors are reported inline and never end the session.
fn repl<R: BufRead, W: Write>(input: R, mut output: W, opts: Opts) -> std::io::Result<()> {
    for line in input.lines() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() {
            continue;
        }
        if trimmed == "quit" || trimmed == "exit" {
            break;
        }
        if trimmed == "repl" {
            writeln!(output, "error: already in a REPL")?;
            continue;
        }
        let r = run_command(line_argv(trimmed, opts));
        match r.stdout_text(opts.machine) {
            Some(text) => writeln!(output, "{text}")?,
            None => writeln!(output, "error: {}", r.human_text)?,
        }
    }
    output.flush()
}

/// REPL entry point for library callers.
pub fn run_repl<R: BufRead, W: Write>(
    input: R,
    output: W,
    ascii: bool,
    trace: bool,
    machine: bool,
) -> std::io::Result<()> {
    repl(
        input,
        output,
        Opts {
            ascii,
            trace,
            machine,
        },
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> CommandResult {
        let mut argv = vec!["grossone"];
        argv.extend_from_slice(args);
        run_command(argv)
    }

    #[test]
    fn eval_examples() {
        let r = run(&["eval", "①*①^-1"]);
        assert_eq!((r.exit_code, r.human_text.as_str()), (0, "1"));
        let r = run(&["eval", "1/(G+1)"]);
        assert_eq!(r.exit_code, EXIT_DOMAIN);
        let r = run(&["eval", "①^"]);
        assert_eq!(r.exit_code, EXIT_PARSE);
        assert!(r.human_text.contains("position 3"));
        let r = run(&["eval", "-G"]);
        assert_eq!(r.human_text, "-①");
        let r = run(&["--ascii", "eval", "G^2 - 1"]);
        assert_eq!(r.human_text, "G^2 - 1");
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run(&[]).exit_code, EXIT_USAGE);
        assert_eq!(run(&["frobnicate"]).exit_code, EXIT_USAGE);
        assert_eq!(run(&["twins", "--lambda", "G^2"]).exit_code, EXIT_USAGE);
        assert_eq!(run(&["set-count", "primes"]).exit_code, EXIT_USAGE);
        assert_eq!(run(&["--help"]).exit_code, EXIT_OK);
    }

    #[test]
    fn classify_with_trace() {
        let r = run(&["classify", "G^2/8 - 1", "--trace"]);
        assert_eq!(r.exit_code, 0);
        let text = &r.human_text;
        assert!(text.starts_with("Prime (Lemma 2)"));
        let l3 = text.find("Lemma 3:").unwrap();
        let l2 = text.rfind("Lemma 2:").unwrap();
        assert!(l3 < l2);
        let r = run(&["classify", "①/2+1"]);
        assert_eq!(r.human_text, "Prime (Theorem 1)");
    }

    #[test]
    fn twins_and_enumerations() {
        let r = run(&[
            "--ascii", "twins", "--lambda", "G^2", "--p", "2", "--m", "1",
        ]);
        assert_eq!(r.human_text, "lower: G^2/8 - 1\nupper: G^2/8 + 1");
        let r = run(&["twins", "--lambda", "G", "--p", "2", "--m", "1"]);
        assert_eq!(r.exit_code, EXIT_DOMAIN);
        let r = run(&["twins", "--lambda", "G^2", "--p", "2", "--m", "-1"]);
        assert_eq!(r.exit_code, EXIT_DOMAIN);
        let r = run(&[
            "--ascii", "enum-a", "--lambda", "G^2", "--p", "2", "--count", "3",
        ]);
        assert_eq!(r.human_text, "G^2/8\nG^2/32\nG^2/128");
        let r = run(&[
            "--ascii", "enum-b", "--lambda", "G^2", "--p", "2", "--count", "1",
        ]);
        assert_eq!(r.human_text, "G^2/8 - 1\nG^2/8 + 1");
    }

    #[test]
    fn other_commands() {
        assert_eq!(run(&["cmp", "G/2", "G-1"]).human_text, "Less");
        assert_eq!(
            run(&["--ascii", "set-count", "integers"]).human_text,
            "2G + 1"
        );
        assert_eq!(run(&["subst", "G^2-1", "--at", "10"]).human_text, "99");
        assert_eq!(run(&["subst", "G^3.1", "--at", "2"]).exit_code, EXIT_DOMAIN);
        assert_eq!(
            run(&["--ascii", "decompose", "1.7G - 1.5"]).human_text,
            "infinite: 17G/10\nfinite: -3/2\ninfinitesimal: 0"
        );
        assert!(run(&["shape", "G - 3G^(1/2)"])
            .human_text
            .contains("is_compound: true"));
        assert_eq!(run(&["sieve", "--limit", "7"]).human_text, "(3, 5)\n(5, 7)");
        let r = run(&["finite-check", "--bound", "10", "--p", "2", "--mmax", "1"]);
        assert!(r.human_text.ends_with("all cases passed"));
        let r = run(&["finite-check", "--bound", "10", "--p", "11", "--mmax", "0"]);
        assert_eq!(r.exit_code, EXIT_DOMAIN);
    }

    #[test]
    fn machine_records() {
        let r = run(&["--machine", "eval", "G"]);
        assert_eq!(
            r.stdout_text(true).unwrap(),
            r#"{"terms":[{"c":"1/1","p":"1/1"}]}"#
        );
        let r = run(&["--machine", "classify", "G^2-1"]);
        let rec = r.machine_record.unwrap();
        assert_eq!(rec["verdict"], "Composite");
        let v = machine::verdict_from_machine(&rec).unwrap();
        assert!(v.audit(&parser::eval_str("G^2-1").unwrap()));
    }

    #[test]
    fn repl_session() {
        let input = "①-①\nclassify ①/2+1\n①^\n\ncmp G 'G + 1'\nquit\neval 5\n";
        let mut out = Vec::new();
        run_repl(input.as_bytes(), &mut out, false, false, false).unwrap();
        let out = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = out.lines().collect();
        assert_eq!(lines[0], "0");
        assert_eq!(lines[1], "Prime (Theorem 1)");
        assert!(lines[2].starts_with("error: parse error at position 3"));
        assert_eq!(lines[3], "Less");
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn split_words_quotes() {
        assert_eq!(split_words(r#"cmp "G + 1" 'G'"#), vec!["cmp", "G + 1", "G"]);
        assert_eq!(split_words("  a  b "), vec!["a", "b"]);
    }
}
