fn main() -> std::process::ExitCode {
    qecc::cli::main()
}
