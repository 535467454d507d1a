use anyhow::{Context, Result};
use hyperc::format::{write_edge_list, write_labels};
use hyperc::ingest::{
    from_ngrams, from_transactions, prepare, FrequencyColumn, HypergraphStats, IngestReport, NgramOptions,
    Separator, TransactionMode, TransactionOptions,
};
use hyperc::ingest::read_transactions;
use serde::Serialize;

use crate::args::{BuildArgs, Command, FreqColumn, Mode, Sep, Source};
use crate::{io, manifest};

#[derive(Serialize)]
struct Stats {
    ingest: IngestReport,
    input: HypergraphStats,
    largest_component: bool,
    output: HypergraphStats,
}

pub fn run(args: &BuildArgs, command: &Command) -> Result<()> {
    let reader = io::reader(&args.input)?;
    let built: hyperc::ingest::BuiltHypergraph = match args.from {
        Source::Ngrams => {
            let opts = NgramOptions {
                m: args.m,
                frequency: match args.freq_column {
                    FreqColumn::Auto => FrequencyColumn::Auto,
                    FreqColumn::None => FrequencyColumn::None,
                    FreqColumn::First => FrequencyColumn::First,
                    FreqColumn::Last => FrequencyColumn::Last,
                },
                weighted: args.weighted,
                lowercase: args.lowercase,
            };
            from_ngrams(reader, &opts)
        }
        Source::Transactions => {
            let sep = match args.sep {
                Sep::Comma => Separator::Comma,
                Sep::Whitespace => Separator::Whitespace,
            };
            let opts = TransactionOptions {
                m: args.m,
                mode: match args.mode {
                    Mode::Subsets => TransactionMode::Subsets,
                    Mode::Exact => TransactionMode::Exact,
                },
                weighted: args.weighted,
                lowercase: args.lowercase,
            };
            from_transactions(read_transactions(reader, sep)?, &opts)
        }
    }
    .with_context(|| format!("building from {}", args.input.display()))?;

    let input = HypergraphStats::of(&built.hypergraph);
    let (h, labels) = if args.keep_all {
        (built.hypergraph, built.labels)
    } else {
        let p = prepare(&built.hypergraph, &built.labels)?;
        (p.hypergraph, p.labels)
    };

    io::out_dir(&args.output)?;
    let dir = &args.output;
    io::with_writer(Some(&dir.join("hypergraph.hg")), |w| Ok(write_edge_list(w, &h)?))?;
    io::with_writer(Some(&dir.join("labels.tsv")), |w| Ok(write_labels(w, &labels)?))?;
    let stats = Stats {
        ingest: built.report,
        input,
        largest_component: !args.keep_all,
        output: HypergraphStats::of(&h),
    };
    io::write_json(&dir.join("stats.json"), &stats)?;
    manifest::write(&dir.join("run.json"), command)
}
