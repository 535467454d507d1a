use std::io::Write;

use anyhow::{Context, Result};
use hyperc::format::{read_edge_list, read_labels};
use hyperc::tensor::set_deterministic;
use hyperc::zec::{EnsembleReport, ZecOptions};
use hyperc::{cec, hec, zec, Centrality, Error, Hypergraph, Method, NodeLabelMap, ZecAlgorithm};
use serde::Serialize;

use crate::args::{CentralityArgs, Command, ZecSolver};
use crate::exit::{Mismatch, Unconverged};
use crate::{io, manifest};

/// Solver settings actually used, after defaults.
#[derive(Serialize)]
struct Settings {
    tol: f64,
    max_iters: usize,
    #[serde(flatten, skip_serializing_if = "Option::is_none")]
    zec: Option<ZecSettings>,
}

#[derive(Serialize)]
struct ZecSettings {
    algorithm: ZecAlgorithm,
    step: f64,
    alpha: f64,
    restarts: usize,
    seed: u64,
    cluster_tol: f64,
}

#[derive(Serialize)]
struct Sidecar {
    method: Method,
    converged: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    eigenvalue: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    residual: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    iterations: Option<usize>,
    m: usize,
    nodes: usize,
    edges: usize,
    largest_component: bool,
    settings: Settings,
    #[serde(skip_serializing_if = "Option::is_none")]
    ensemble: Option<EnsembleReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
}

fn configure_threads(threads: Option<usize>) -> Result<()> {
    if let Some(n) = threads {
        if n == 0 {
            return Err(Error::InvalidArgument("--threads must be at least 1".into()).into());
        }
        // a pool may already exist when several runs share a process
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
    Ok(())
}

fn load(args: &CentralityArgs) -> Result<(Hypergraph, NodeLabelMap, Vec<usize>)> {
    let h: Hypergraph =
        read_edge_list(io::reader(&args.input)?).with_context(|| format!("reading {}", args.input.display()))?;
    let labels = match &args.labels {
        Some(p) => read_labels(io::reader(p)?).with_context(|| format!("reading {}", p.display()))?,
        None => NodeLabelMap::identity(h.node_count()),
    };
    if labels.len() != h.node_count() {
        return Err(Mismatch(format!("{} labels for {} nodes", labels.len(), h.node_count())).into());
    }
    if !args.lcc {
        let ids = (0..h.node_count()).collect();
        return Ok((h, labels, ids));
    }
    let c = hyperc::largest_component(&h, &labels)?;
    let mut original = vec![0; c.hypergraph.node_count()];
    for (old, new) in c.old_to_new.iter().enumerate() {
        if let Some(new) = new {
            original[*new] = old;
        }
    }
    Ok((c.hypergraph, c.labels, original))
}

fn write_scores(path: &std::path::Path, r: &Centrality, labels: &NodeLabelMap, ids: &[usize]) -> Result<()> {
    io::with_writer(Some(path), |w: &mut dyn Write| {
        writeln!(w, "node_id,label,score")?;
        for i in r.ranking() {
            let label = labels.label(i).expect("label per node");
            writeln!(w, "{},{},{}", ids[i], io::csv_field(label), r.scores[i])?;
        }
        Ok(())
    })
}

pub fn run(args: &CentralityArgs, command: &Command) -> Result<()> {
    set_deterministic(args.deterministic);
    configure_threads(args.threads)?;
    let (h, labels, ids) = load(args)?;
    if !hyperc::is_connected(&h) {
        return Err(anyhow::Error::new(Error::NotConnected).context("input hypergraph is not connected; pass --lcc to use its largest component"));
    }

    io::out_dir(&args.output)?;
    manifest::write(&args.output.join("run.json"), command)?;

    let mut methods: Vec<Method> = Vec::new();
    for &m in &args.method {
        if !methods.contains(&m) {
            methods.push(m);
        }
    }
    let mut unconverged = Vec::new();
    for method in methods {
        let (tol, max_iters) = match method {
            Method::Cec => (args.tol.unwrap_or(cec::DEFAULT_TOL), args.max_iters.unwrap_or(cec::DEFAULT_MAX_ITERS)),
            Method::Hec => (args.tol.unwrap_or(hec::DEFAULT_TOL), args.max_iters.unwrap_or(hec::DEFAULT_MAX_ITERS)),
            Method::Zec => {
                let d = ZecOptions::<f64>::default();
                (args.tol.unwrap_or(d.tol), args.max_iters.unwrap_or(d.max_iters))
            }
        };
        let mut sidecar = Sidecar {
            method,
            converged: false,
            eigenvalue: None,
            residual: None,
            iterations: None,
            m: h.uniformity(),
            nodes: h.node_count(),
            edges: h.edge_count(),
            largest_component: args.lcc,
            settings: Settings { tol, max_iters, zec: None },
            ensemble: None,
            error: None,
        };
        let outcome = match method {
            Method::Cec => cec::cec(&h, tol, max_iters),
            Method::Hec => hec::hec(&h, tol, max_iters),
            Method::Zec => {
                let opts = ZecOptions {
                    algorithm: match args.zec_algorithm {
                        ZecSolver::Ds => ZecAlgorithm::DynamicalSystems,
                        ZecSolver::Sshopm => ZecAlgorithm::Sshopm,
                    },
                    alpha: args.alpha,
                    step: args.step,
                    tol,
                    max_iters,
                    restarts: args.restarts,
                    seed: args.seed,
                    cluster_tol: args.cluster_tol,
                    ..ZecOptions::default()
                };
                sidecar.settings.zec = Some(ZecSettings {
                    algorithm: opts.algorithm,
                    step: opts.step,
                    alpha: opts.alpha,
                    restarts: opts.restarts,
                    seed: opts.seed,
                    cluster_tol: opts.cluster_tol,
                });
                zec::zec(&h, &opts).map(|(r, ens)| {
                    sidecar.ensemble = Some(ens.report());
                    r
                })
            }
        };
        let r = match outcome {
            Ok(r) => r,
            Err(e @ (Error::NotConverged { .. } | Error::NoConvergedRestarts { .. })) => {
                sidecar.error = Some(e.to_string());
                io::write_json(&args.output.join(format!("{method}.json")), &sidecar)?;
                unconverged.push(method);
                continue;
            }
            Err(e) => return Err(e).with_context(|| format!("computing {method}")),
        };
        sidecar.converged = r.converged;
        sidecar.eigenvalue = Some(r.eigenvalue);
        sidecar.residual = Some(r.residual);
        sidecar.iterations = Some(r.iterations);
        io::write_json(&args.output.join(format!("{method}.json")), &sidecar)?;
        if r.converged {
            write_scores(&args.output.join(format!("{method}.csv")), &r, &labels, &ids)?;
        } else {
            unconverged.push(method);
        }
    }
    if unconverged.is_empty() {
        Ok(())
    } else {
        Err(Unconverged(unconverged).into())
    }
}
