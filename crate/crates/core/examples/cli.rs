//! Drives the command line in-process.
fn main() {
    let out = turan2d::cli::run(["turan2d", "search-m2", "--m", "6", "--r", "3"]);
    print!("{}", out.stdout);
    let out = turan2d::cli::run(["turan2d", "construct", "--spec", "odd-optimal:k=5", "--format", "g6"]);
    print!("{}", out.stdout);
    println!("exit {}", out.code);
}
