fn main() -> std::process::ExitCode {
    diskgeo::cli::main()
}
