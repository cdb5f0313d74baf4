//! Drives the command-line front end in process and prints its JSON reports.

use adrlab::cli::execute;

fn run(args: &[&str], stdin: &str) -> String {
    let mut full = vec!["adrlab"];
    full.extend_from_slice(args);
    let out = execute(full, &mut stdin.as_bytes());
    println!("$ adrlab {} -> exit {}", args.join(" "), out.code);
    eprint!("{}", out.stderr);
    out.stdout
}

fn main() {
    let brauer = run(&["gen", "brauer", "-n", "3"], "");
    print!("{}", run(&["gldim"], &brauer));
    let adr = run(&["adr"], &brauer);
    println!("{}", adr.lines().take(12).collect::<Vec<_>>().join("\n"));
    let linear = run(&["gen", "linear", "-n", "3"], "");
    print!("{}", run(&["usq-check", "--order", "natural"], &linear));
    print!("{}", run(&["adr", "--dot"], &linear));
}
