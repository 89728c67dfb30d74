fn main() {
    // Default SIGPIPE behavior so piping into `head` ends the process
    // quietly instead of panicking on the closed stream.
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    std::process::exit(minrank::cli::run_from_env());
}
