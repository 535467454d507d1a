use std::collections::BTreeMap;
use std::io::BufRead;
use std::path::Path;

use anyhow::{bail, Context, Result};
use hyperc::analysis::{default_k_grid, top_table, topk_correlation, write_correlation_csv};
use hyperc::NodeLabelMap;

use crate::args::{Command, CompareArgs};
use crate::exit::Mismatch;
use crate::{io, manifest};

/// A centrality CSV keyed by node id.
struct Scores {
    path: std::path::PathBuf,
    name: String,
    by_id: BTreeMap<usize, (String, f64)>,
}

fn read_scores(path: &Path) -> Result<Scores> {
    let name = path
        .file_stem()
        .and_then(|s| s.to_str())
        .with_context(|| format!("no method name in {}", path.display()))?
        .to_owned();
    let mut lines = io::reader(path)?.lines();
    let header = lines.next().transpose()?.unwrap_or_default();
    if header.trim_end() != "node_id,label,score" {
        bail!("{}: expected header node_id,label,score", path.display());
    }
    let mut by_id = BTreeMap::new();
    for (k, line) in lines.enumerate() {
        let line = line?;
        if line.is_empty() {
            continue;
        }
        let f = io::csv_split(&line);
        let parsed = match f.as_slice() {
            [id, label, score] => id.parse::<usize>().ok().zip(score.parse::<f64>().ok()).map(|(i, s)| (i, label, s)),
            _ => None,
        };
        let Some((id, label, score)) = parsed else {
            return Err(hyperc::Error::Parse { line: k + 2, message: format!("bad record {line:?}") })
                .with_context(|| format!("reading {}", path.display()));
        };
        if by_id.insert(id, (label.clone(), score)).is_some() {
            bail!("{}: node {id} listed twice", path.display());
        }
    }
    Ok(Scores { path: path.to_owned(), name, by_id })
}

pub fn run(args: &CompareArgs, command: &Command) -> Result<()> {
    let all: Vec<Scores> = args.inputs.iter().map(|p| read_scores(p)).collect::<Result<_>>()?;
    let first = &all[0];
    for other in &all[1..] {
        let same = other.by_id.len() == first.by_id.len()
            && other.by_id.iter().zip(&first.by_id).all(|((a, (la, _)), (b, (lb, _)))| a == b && la == lb);
        if !same {
            return Err(Mismatch(format!(
                "{} and {} cover different nodes",
                first.path.display(),
                other.path.display()
            )).into());
        }
    }
    let n = first.by_id.len();
    let labels = NodeLabelMap::from_labels(first.by_id.values().map(|(l, _)| l.as_str()))?;
    let vectors: Vec<Vec<f64>> = all.iter().map(|s| s.by_id.values().map(|&(_, v)| v).collect()).collect();

    let ks = args.k.clone().unwrap_or_else(|| default_k_grid(n));
    let mut comparisons = Vec::new();
    for (i, a) in all.iter().enumerate() {
        for (j, b) in all.iter().enumerate() {
            if i != j {
                comparisons.push(topk_correlation((&a.name, &vectors[i]), (&b.name, &vectors[j]), &ks)?);
            }
        }
    }

    io::out_dir(&args.output)?;
    io::with_writer(Some(&args.output.join("correlations.csv")), |w| Ok(write_correlation_csv(w, &comparisons)?))?;
    let named: Vec<(&str, &[f64])> = all.iter().zip(&vectors).map(|(s, v)| (s.name.as_str(), v.as_slice())).collect();
    let table = top_table(&named, &labels, args.top)?;
    std::fs::write(args.output.join("top.md"), table.to_markdown())?;
    manifest::write(&args.output.join("run.json"), command)
}
