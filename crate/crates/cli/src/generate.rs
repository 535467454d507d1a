use anyhow::Result;
use hyperc::analytic::{example_unstable_fixture, sunflower as build_sunflower};
use hyperc::format::write_edge_list;
use hyperc::Hypergraph;

use crate::args::{Command, GenerateArgs, SunflowerArgs};
use crate::{io, manifest};

fn emit(h: &Hypergraph, output: Option<&std::path::Path>, command: &Command) -> Result<()> {
    io::with_writer(output, |w| Ok(write_edge_list(w, h)?))?;
    if let Some(p) = output {
        manifest::write(&io::sidecar_manifest(p), command)?;
    }
    Ok(())
}

pub fn sunflower(args: &SunflowerArgs, command: &Command) -> Result<()> {
    let h: Hypergraph = build_sunflower(args.m, args.r)?;
    emit(&h, args.output.as_deref(), command)
}

pub fn fixture(args: &GenerateArgs, command: &Command) -> Result<()> {
    let (h, _) = example_unstable_fixture::<f64>();
    emit(&h, args.output.as_deref(), command)
}
