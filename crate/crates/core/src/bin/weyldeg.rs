use std::io::{stderr, stdout, BufWriter, Write};
use std::process::ExitCode;

use weyldeg::cli::{run, THREADS_ENV};

fn main() -> ExitCode {
    if let Some(n) = std::env::var(THREADS_ENV).ok().and_then(|v| v.parse::<usize>().ok()) {
        // only fails if a pool was already built
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    let mut out = BufWriter::new(stdout().lock());
    let code = run(std::env::args_os(), &mut out, &mut stderr());
    let _ = out.flush();
    ExitCode::from(code as u8)
}
