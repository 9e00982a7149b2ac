//! Drives the command line in-process and shows the exit codes.

use qbailey::cli::run;

fn main() {
    for line in [
        "verify theorem --id 3 --order 3 --format tsv --dump",
        "verify pair --name u-chain --n-max 4 --order 20",
        "enumerate --family Q --n 8 --format json",
        "verify theorem --id 4",
    ] {
        let out = run(std::iter::once("qbailey").chain(line.split_whitespace()));
        println!("$ qbailey {line}   # exit {}", out.code);
        print!("{}{}", out.stdout, out.stderr);
        println!();
    }
}
