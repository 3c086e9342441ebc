//! The `spantree` command line.

use std::io::{self, Write};
use std::path::PathBuf;

use clap::{ArgGroup, Parser, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::corpus::{random_connected_graph, CorpusShape};
use crate::dwcm::Dwcm;
use crate::enumerator::{enumerate_k, EnumState, Limit, RankedTree};
use crate::error::Error;
use crate::oracle::{kirchhoff_count, sorted_reference};
use crate::parse::{format_graph, parse_graph};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_MISMATCH: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Enumerate,
    Verify,
    Count,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunConfig {
    pub input_path: PathBuf,
    pub limit: Limit,
    pub format: Format,
    pub mode: Mode,
    pub dump_dwcm: bool,
}

/// Lists the spanning trees of a weighted graph, cheapest first.
///
/// Input is an edge list: an optional run of `#` comment lines, a header
/// line `n m`, then `m` lines `u v w` with 0-based vertices and integer
/// weights. Text output is one tree per line: `rank weight edge-ids`.
#[derive(Debug, Parser)]
#[command(name = "spantree", version)]
#[command(group(ArgGroup::new("limit").args(["k", "all"])))]
#[command(group(ArgGroup::new("mode").args(["verify", "count"])))]
pub struct Args {
    /// Graph file.
    #[arg(long, value_name = "PATH", required_unless_present = "random_corpus")]
    pub input: Option<PathBuf>,

    /// Stop after this many trees.
    #[arg(long, value_name = "INT", value_parser = clap::value_parser!(u64).range(1..))]
    pub k: Option<u64>,

    /// Emit every spanning tree (the default).
    #[arg(long)]
    pub all: bool,

    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,

    /// Check the enumeration against an exhaustive sorted listing.
    #[arg(long)]
    pub verify: bool,

    /// Print the number of spanning trees.
    #[arg(long)]
    pub count: bool,

    /// Print each emitted tree's difference weighted circuit matrix to stderr.
    #[arg(long)]
    pub dump_dwcm: bool,

    /// Print a random connected graph (n in 3..=7, m <= 15) generated from SEED and exit.
    #[arg(long, value_name = "SEED", conflicts_with_all = ["input", "verify", "count"])]
    pub random_corpus: Option<u64>,
}

impl Args {
    /// `None` when no graph file was given (the `--random-corpus` path).
    pub fn config(&self) -> Option<RunConfig> {
        let mode = if self.verify {
            Mode::Verify
        } else if self.count {
            Mode::Count
        } else {
            Mode::Enumerate
        };
        let limit = match self.k {
            Some(k) => Limit::First(usize::try_from(k).unwrap_or(usize::MAX)),
            None => Limit::All,
        };
        Some(RunConfig {
            input_path: self.input.clone()?,
            limit,
            format: self.format,
            mode,
            dump_dwcm: self.dump_dwcm,
        })
    }
}

/// Output record for one tree in JSON mode.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonTree {
    pub rank: usize,
    pub weight: i64,
    pub edges: Vec<usize>,
}

/// The JSON document: `{"n":…,"m":…,"trees":[…]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct JsonOutput {
    pub n: usize,
    pub m: usize,
    pub trees: Vec<JsonTree>,
}

impl From<&RankedTree<i64>> for JsonTree {
    fn from(r: &RankedTree<i64>) -> Self {
        JsonTree {
            rank: r.rank,
            weight: r.tree.weight(),
            edges: r.tree.edge_ids().iter().map(|id| id.index()).collect(),
        }
    }
}

/// One line of text output.
pub fn text_line(r: &RankedTree<i64>) -> String {
    format!("{} {} {}", r.rank, r.tree.weight(), r.tree.key())
}

/// Describes the first rank where `actual` departs from `expected`.
pub fn first_divergence(
    expected: &[RankedTree<i64>],
    actual: &[RankedTree<i64>],
) -> Option<String> {
    let describe = |r: Option<&RankedTree<i64>>| match r {
        Some(r) => format!("weight {} edges {}", r.tree.weight(), r.tree.key()),
        None => "end of sequence".to_string(),
    };
    (0..expected.len().max(actual.len()))
        .find(|&i| {
            expected.get(i).map(|r| (r.rank, &r.tree)) != actual.get(i).map(|r| (r.rank, &r.tree))
        })
        .map(|i| {
            format!(
                "rank {}: expected {}, enumerated {}",
                i + 1,
                describe(expected.get(i)),
                describe(actual.get(i))
            )
        })
}

/// Runs one invocation against already-read input text and returns the exit status.
pub fn run(config: &RunConfig, graph_text: &str, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    match execute(config, graph_text, out, err) {
        Ok(status) => status,
        Err(Failure::Input(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_INPUT
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => EXIT_OK,
        Err(Failure::Io(e)) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_INPUT
        }
    }
}

enum Failure {
    Input(String),
    Io(io::Error),
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Input(e.to_string())
    }
}

fn execute(
    config: &RunConfig,
    graph_text: &str,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, Failure> {
    let path = config.input_path.display();
    let graph = parse_graph(graph_text).map_err(|e| Failure::Input(format!("{path}: {e}")))?;

    match config.mode {
        Mode::Count => {
            writeln!(out, "{}", kirchhoff_count(&graph))?;
            Ok(EXIT_OK)
        }
        Mode::Verify => {
            let expected = match sorted_reference(&graph) {
                Err(Error::TooManyTrees { count, limit }) => {
                    return Err(Failure::Input(format!(
                        "{path}: {count} spanning trees is more than the {limit} that --verify \
                         will list; use --count, or --k to enumerate a prefix"
                    )))
                }
                other => other?,
            };
            let actual = enumerate_k(&graph, Limit::All)?;
            match first_divergence(&expected, &actual) {
                None => {
                    writeln!(out, "OK N={}", actual.len())?;
                    Ok(EXIT_OK)
                }
                Some(diff) => {
                    writeln!(out, "MISMATCH at {diff}")?;
                    Ok(EXIT_MISMATCH)
                }
            }
        }
        Mode::Enumerate => {
            let state = EnumState::new(&graph)?;
            let trees: Box<dyn Iterator<Item = RankedTree<i64>>> = match config.limit {
                Limit::First(k) => Box::new(state.take(k)),
                Limit::All => Box::new(state),
            };
            if config.format == Format::Json {
                write!(
                    out,
                    "{{\"n\":{},\"m\":{},\"trees\":[",
                    graph.vertex_count(),
                    graph.edge_count()
                )?;
            }
            for r in trees {
                if config.dump_dwcm {
                    write!(
                        err,
                        "{}",
                        Dwcm::build_unchecked(&graph, &r.tree).render(&graph)
                    )?;
                }
                match config.format {
                    Format::Text => writeln!(out, "{}", text_line(&r))?,
                    Format::Json => {
                        if r.rank > 1 {
                            out.write_all(b",")?;
                        }
                        serde_json::to_writer(&mut *out, &JsonTree::from(&r))
                            .map_err(io::Error::from)?;
                    }
                }
            }
            if config.format == Format::Json {
                writeln!(out, "]}}")?;
            }
            Ok(EXIT_OK)
        }
    }
}

/// Text of one random desk-scale graph for `--random-corpus`.
pub fn random_corpus_graph(seed: u64) -> String {
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    format_graph(&random_connected_graph(&mut rng, &CorpusShape::desk()))
}

#[cfg(test)]
mod tests {
    use super::*;

    const K3: &str = "3 3\n0 1 1\n1 2 2\n0 2 3\n";

    fn config(mode: Mode, format: Format, limit: Limit) -> RunConfig {
        RunConfig {
            input_path: "g.txt".into(),
            limit,
            format,
            mode,
            dump_dwcm: false,
        }
    }

    fn invoke(config: &RunConfig, text: &str) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let status = run(config, text, &mut out, &mut err);
        (
            status,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn triangle_text() {
        let (status, out, err) =
            invoke(&config(Mode::Enumerate, Format::Text, Limit::First(3)), K3);
        assert_eq!(status, EXIT_OK);
        assert_eq!(out, "1 3 0,1\n2 4 0,2\n3 5 1,2\n");
        assert!(err.is_empty());
    }

    #[test]
    fn triangle_json_round_trips() {
        let (status, out, _) = invoke(&config(Mode::Enumerate, Format::Json, Limit::All), K3);
        assert_eq!(status, EXIT_OK);
        let parsed: JsonOutput = serde_json::from_str(&out).unwrap();
        assert_eq!((parsed.n, parsed.m), (3, 3));
        let got: Vec<_> = parsed
            .trees
            .iter()
            .map(|t| (t.rank, t.weight, t.edges.clone()))
            .collect();
        assert_eq!(
            got,
            vec![(1, 3, vec![0, 1]), (2, 4, vec![0, 2]), (3, 5, vec![1, 2])]
        );
        assert_eq!(out, serde_json::to_string(&parsed).unwrap() + "\n");
    }

    #[test]
    fn json_with_no_trees_requested() {
        let (_, out, _) = invoke(&config(Mode::Enumerate, Format::Json, Limit::First(0)), K3);
        assert_eq!(out, "{\"n\":3,\"m\":3,\"trees\":[]}\n");
    }

    #[test]
    fn count_k4() {
        let k4 = "4 6\n0 1 1\n0 2 1\n0 3 1\n1 2 1\n1 3 1\n2 3 1\n";
        let (status, out, _) = invoke(&config(Mode::Count, Format::Text, Limit::All), k4);
        assert_eq!((status, out.as_str()), (EXIT_OK, "16\n"));
    }

    #[test]
    fn count_disconnected_is_zero() {
        let (status, out, _) = invoke(
            &config(Mode::Count, Format::Text, Limit::All),
            "4 2\n0 1 1\n2 3 1\n",
        );
        assert_eq!((status, out.as_str()), (EXIT_OK, "0\n"));
    }

    #[test]
    fn verify_ok() {
        let (status, out, _) = invoke(&config(Mode::Verify, Format::Text, Limit::All), K3);
        assert_eq!((status, out.as_str()), (EXIT_OK, "OK N=3\n"));
    }

    #[test]
    fn input_errors() {
        let cases = [
            ("2 1\n0 0 5\n", "line 2: self-loop"),
            ("2 1\n0 3 1\n", "line 2: vertex 3 out of range"),
            ("4 2\n0 1 1\n2 3 1\n", "not connected"),
        ];
        for (text, needle) in cases {
            let (status, out, err) =
                invoke(&config(Mode::Enumerate, Format::Text, Limit::All), text);
            assert_eq!(status, EXIT_INPUT, "{text:?}");
            assert!(out.is_empty());
            assert!(err.contains(needle), "{err}");
        }
    }

    #[test]
    fn verify_refuses_huge_graphs() {
        let mut text = String::from("9 36\n");
        for u in 0..9 {
            for v in u + 1..9 {
                text.push_str(&format!("{u} {v} 1\n"));
            }
        }
        let (status, _, err) = invoke(&config(Mode::Verify, Format::Text, Limit::All), &text);
        assert_eq!(status, EXIT_INPUT);
        assert!(err.contains("--count"), "{err}");
    }

    #[test]
    fn divergence_report() {
        let g = parse_graph(K3).unwrap();
        let good = sorted_reference(&g).unwrap();
        assert_eq!(first_divergence(&good, &good), None);

        let mut swapped = good.clone();
        swapped.swap(1, 2);
        swapped[1].rank = 2;
        swapped[2].rank = 3;
        assert_eq!(
            first_divergence(&good, &swapped).unwrap(),
            "rank 2: expected weight 4 edges 0,2, enumerated weight 5 edges 1,2"
        );
        assert_eq!(
            first_divergence(&good, &good[..2]).unwrap(),
            "rank 3: expected weight 5 edges 1,2, enumerated end of sequence"
        );
    }

    #[test]
    fn dump_goes_to_stderr() {
        let mut c = config(Mode::Enumerate, Format::Text, Limit::First(1));
        c.dump_dwcm = true;
        let (status, out, err) = invoke(&c, K3);
        assert_eq!(status, EXIT_OK);
        assert_eq!(out, "1 3 0,1\n");
        assert_eq!(
            err,
            "# tree weight 3 edges 0,1\n     0:1  1:2\n2:3    2    1\n"
        );
    }

    #[test]
    fn args_map_to_config() {
        let args = Args::parse_from([
            "spantree", "--input", "g.txt", "--k", "5", "--format", "json",
        ]);
        let c = args.config().unwrap();
        assert_eq!(c.limit, Limit::First(5));
        assert_eq!((c.mode, c.format), (Mode::Enumerate, Format::Json));

        let args = Args::parse_from(["spantree", "--input", "g.txt", "--count"]);
        assert_eq!(args.config().unwrap().mode, Mode::Count);
        assert_eq!(args.config().unwrap().limit, Limit::All);

        assert!(Args::try_parse_from(["spantree", "--input", "g", "--k", "2", "--all"]).is_err());
        assert!(Args::try_parse_from(["spantree", "--input", "g", "--verify", "--count"]).is_err());
        assert!(Args::try_parse_from(["spantree", "--input", "g", "--k", "0"]).is_err());
        assert!(Args::try_parse_from(["spantree"]).is_err());
        assert!(Args::try_parse_from(["spantree", "--random-corpus", "3"])
            .unwrap()
            .config()
            .is_none());
    }

    #[test]
    fn random_corpus_parses() {
        let g = parse_graph(&random_corpus_graph(11)).unwrap();
        assert!(g.is_connected());
        assert_eq!(random_corpus_graph(11), random_corpus_graph(11));
    }
}
