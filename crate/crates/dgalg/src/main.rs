fn main() {
    let (out, code) = dgalg::run(std::env::args_os());
    if code == dgalg::cli::EXIT_ERROR {
        eprint!("{out}");
    } else {
        print!("{out}");
    }
    std::process::exit(code);
}
