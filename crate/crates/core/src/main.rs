use std::process::ExitCode;

use grossone::cli::run_command;

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let machine = argv.iter().skip(1).any(|a| a == "--machine");
    let result = run_command(&argv);
    match result.stdout_text(machine) {
        Some(text) if !text.is_empty() => println!("{text}"),
        Some(_) => {}
        None => eprintln!("{}", result.human_text),
    }
    ExitCode::from(result.exit_code as u8)
}
