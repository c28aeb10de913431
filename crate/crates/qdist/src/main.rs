fn main() {
    let argv: Vec<std::ffi::OsString> = std::env::args_os().collect();
    // A panic is an internal invariant failure: exit 70, never a signal.
    let code =
        std::panic::catch_unwind(|| qdist::cli::run(argv)).unwrap_or(qdist::cli::EXIT_INTERNAL);
    std::process::exit(code);
}
