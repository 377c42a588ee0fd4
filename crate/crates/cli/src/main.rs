use std::process::ExitCode;

fn main() -> ExitCode {
    let (code, report) = braidforge_cli::run(std::env::args_os());
    if code != 0 && !report.json {
        eprintln!("{}", report.render());
    } else {
        println!("{}", report.render());
    }
    ExitCode::from(code as u8)
}
