//! Command-line orchestration: verification reports, exports and the HTTP
//! serve mode.

pub mod export;
pub mod serve;
pub mod verify;

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::cluster_algebra::{explore, ExploreOptions};
use crate::error::{Error, Result};
use crate::repcat::ClusterCategory;
use crate::root_system::{DynkinType, RootSystem};
use crate::tilting::Convention;
pub use export::{export_atlas, export_homtable, export_quiver, Export, Format};
pub use verify::{verify, verify_in, Check, CheckReport, Status, VerificationReport, VerifyOptions};

#[derive(Debug, Parser)]
#[command(name = "cluster-tilt", version, about = "Cluster algebras of simply-laced finite type and their cluster categories")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run verification checks over every cluster of a type.
    Verify(VerifyArgs),
    /// Export an atlas, a quiver or a Hom table.
    Export(ExportArgs),
    /// Write the atlas of a type as JSON.
    Clusters(ClustersArgs),
    /// Serve the JSON API used by the explorer.
    Serve(ServeArgs),
}

#[derive(Debug, Args)]
pub struct TypeArgs {
    /// Dynkin type such as A3, D5 or E6.
    #[arg(long = "type")]
    pub dynkin_type: DynkinType,
    /// Permit E7 and E8.
    #[arg(long)]
    pub allow_large: bool,
}

impl TypeArgs {
    fn explore(&self) -> ExploreOptions {
        ExploreOptions {
            allow_large: self.allow_large,
            ..Default::default()
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Table,
    Json,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    /// Comma-separated checks, or `all`.
    #[arg(long, default_value = "all")]
    pub checks: String,
    /// Restrict to one atlas cluster id.
    #[arg(long)]
    pub cluster: Option<usize>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Table)]
    pub format: ReportFormat,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Compare Q_T with the opposite of the exchange quiver.
    #[arg(long)]
    pub convention_flip: bool,
}

#[derive(Debug, Args)]
pub struct ExportArgs {
    /// atlas, quiver or homtable.
    pub what: Export,
    #[command(flatten)]
    pub ty: TypeArgs,
    /// json or dot.
    #[arg(long, default_value = "json")]
    pub format: Format,
    /// Cluster whose quiver is exported.
    #[arg(long, default_value_t = 0)]
    pub cluster: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClustersArgs {
    #[command(flatten)]
    pub ty: TypeArgs,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ServeArgs {
    #[arg(long, default_value_t = 8080)]
    pub port: u16,
    #[arg(long)]
    pub allow_large: bool,
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Run a parsed command; the value is the process exit code.
pub fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Verify(a) => {
            let opts = VerifyOptions {
                checks: Check::parse_list(&a.checks)?,
                cluster: a.cluster,
                explore: a.ty.explore(),
                convention: Convention {
                    flip: a.convention_flip,
                },
            };
            let report = verify(a.ty.dynkin_type, &opts)?;
            let text = match a.format {
                ReportFormat::Table => report.to_table(),
                ReportFormat::Json => {
                    let mut s = serde_json::to_string_pretty(&report).expect("reports serialize");
                    s.push('\n');
                    s
                }
            };
            emit(&a.out, &text)?;
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Export(a) => {
            let ty = a.ty.dynkin_type;
            let text = match a.what {
                Export::Atlas => export_atlas(&explore(ty, a.ty.explore())?, a.format),
                Export::Quiver => export_quiver(&explore(ty, a.ty.explore())?, a.cluster, a.format)?,
                Export::HomTable => {
                    export_homtable(&ClusterCategory::new(&RootSystem::new(ty))?, a.format)?
                }
            };
            emit(&a.out, &text)?;
            Ok(0)
        }
        Command::Clusters(a) => {
            let atlas = explore(a.ty.dynkin_type, a.ty.explore())?;
            emit(&a.out, &export_atlas(&atlas, Format::Json))?;
            Ok(0)
        }
        Command::Serve(a) => {
            let rt = tokio::runtime::Runtime::new()
                .map_err(|e| Error::Parse(format!("cannot start runtime: {e}")))?;
            rt.block_on(serve::serve(a.port, a.allow_large))
                .map_err(|e| Error::Parse(format!("server error: {e}")))?;
            Ok(0)
        }
    }
}
