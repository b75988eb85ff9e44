//! Export of atlases, quivers and Hom tables as JSON or DOT.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::cluster_algebra::Atlas;
use crate::error::{Error, Result};
use crate::repcat::{ClusterCategory, HomEntry};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Dot,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            _ => Err(Error::Parse(format!("unknown format {s}; expected json or dot"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Export {
    Atlas,
    Quiver,
    HomTable,
}

impl FromStr for Export {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "atlas" => Ok(Export::Atlas),
            "quiver" => Ok(Export::Quiver),
            "homtable" => Ok(Export::HomTable),
            _ => Err(Error::Parse(format!(
                "unknown export {s}; expected atlas, quiver or homtable"
            ))),
        }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("exports serialize");
    s.push('\n');
    s
}

/// The atlas as JSON, or its exchange graph as an undirected DOT graph.
pub fn export_atlas(atlas: &Atlas, format: Format) -> String {
    match format {
        Format::Json => to_json(&atlas.to_json()),
        Format::Dot => {
            let mut s = format!("graph exchange_{} {{\n", atlas.dynkin_type());
            for (id, c) in atlas.clusters().iter().enumerate() {
                let vars: Vec<String> = c.vars.iter().map(usize::to_string).collect();
                let _ = writeln!(s, "  {id} [label=\"{{{}}}\"];", vars.join(","));
            }
            for e in atlas.edges() {
                let _ = writeln!(s, "  {} -- {};", e.cluster, e.target);
            }
            s.push_str("}\n");
            s
        }
    }
}

/// The exchange quiver of an atlas cluster.
pub fn export_quiver(atlas: &Atlas, cluster: usize, format: Format) -> Result<String> {
    if cluster >= atlas.num_clusters() {
        return Err(Error::Parse(format!("no cluster {cluster}")));
    }
    let q = &atlas.cluster(cluster).quiver;
    Ok(match format {
        Format::Json => to_json(q),
        Format::Dot => q.to_dot(&format!("Q_{}_{cluster}", atlas.dynkin_type()), None),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct HomTableJson {
    #[serde(rename = "type")]
    pub dynkin_type: String,
    pub objects: Vec<String>,
    pub entries: Vec<HomEntry>,
}

/// `dim Hom_C` and `dim Ext_C` for every ordered pair of indecomposables.
pub fn export_homtable(cat: &ClusterCategory, format: Format) -> Result<String> {
    match format {
        Format::Json => Ok(to_json(&HomTableJson {
            dynkin_type: cat.root_system().dynkin_type().to_string(),
            objects: cat.objects().iter().map(ToString::to_string).collect(),
            entries: cat.hom_table(),
        })),
        Format::Dot => Err(Error::Parse("the Hom table exports as json only".into())),
    }
}
