use std::process;

fn main() {
    process::exit(i32::from(alliance_lab::cli::run(std::env::args_os())));
}
