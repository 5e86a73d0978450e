use std::io;

fn main() {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = io::BufWriter::new(stdout.lock());
    let code = chiral::cli::run(std::env::args_os(), &mut out, &mut stderr.lock());
    drop(out);
    std::process::exit(code);
}
