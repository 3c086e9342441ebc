use std::io::{self, Write};
use std::process::ExitCode;

use clap::Parser;

use spantree::cli::{random_corpus_graph, run, Args, EXIT_INPUT};

fn main() -> ExitCode {
    let args = Args::parse();
    let stdout = io::stdout();
    let mut out = io::BufWriter::new(stdout.lock());

    if let Some(seed) = args.random_corpus {
        let _ = out.write_all(random_corpus_graph(seed).as_bytes());
        let _ = out.flush();
        return ExitCode::SUCCESS;
    }

    let config = args
        .config()
        .expect("clap requires --input without --random-corpus");
    let status = match std::fs::read_to_string(&config.input_path) {
        Ok(text) => run(&config, &text, &mut out, &mut io::stderr().lock()),
        Err(e) => {
            eprintln!("error: {}: {e}", config.input_path.display());
            EXIT_INPUT
        }
    };
    let _ = out.flush();
    ExitCode::from(status as u8)
}
