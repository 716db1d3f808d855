fn main() -> std::process::ExitCode {
    h2e::cli::run(std::env::args_os())
}
