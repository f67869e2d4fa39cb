use clap::ValueEnum;

use super::{Format, RunArgs};
use crate::raag::GraphSpec;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Free,
    FreeAbelian,
    Raag,
    Lamplighter,
    DihedralInf,
    Heisenberg,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Free => "free",
            Family::FreeAbelian => "free-abelian",
            Family::Raag => "raag",
            Family::Lamplighter => "lamplighter",
            Family::DihedralInf => "dihedral-inf",
            Family::Heisenberg => "heisenberg",
        }
    }

    /// Default conjugation-closure slack. Free groups need none, since a
    /// cyclic permutation of a cyclically reduced word never gets longer;
    /// two extra layers let the stability flag confirm it cheaply.
    pub fn default_slack(self, max_n: usize) -> usize {
        match self {
            Family::Free => 2,
            _ => max_n,
        }
    }
}

/// A validated run configuration.
#[derive(Debug, Clone)]
pub struct RunConfig {
    pub family: Family,
    pub rank: usize,
    pub dim: usize,
    pub graph: Option<GraphSpec>,
    pub max_n: usize,
    pub slack: usize,
    pub window: usize,
    pub format: Format,
}

impl RunConfig {
    pub fn new(family: Family, max_n: usize) -> Self {
        Self {
            family,
            rank: 2,
            dim: 2,
            graph: None,
            max_n,
            slack: family.default_slack(max_n),
            window: 5,
            format: Format::Csv,
        }
    }

    pub fn from_args(args: &RunArgs) -> Result<Self> {
        let graph = match (args.family, &args.graph) {
            (Family::Raag, Some(path)) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("{}: {e}", path.display())))?;
                Some(GraphSpec::parse(&text).map_err(|e| Error::Config(format!("{}: {e}", path.display())))?)
            }
            (Family::Raag, None) => return Err(Error::Config("--family raag requires --graph FILE".into())),
            (_, Some(_)) => return Err(Error::Config("--graph only applies to --family raag".into())),
            (_, None) => None,
        };
        let cfg = Self {
            family: args.family,
            rank: args.rank,
            dim: args.dim,
            graph,
            max_n: args.max_n,
            slack: args.slack.unwrap_or_else(|| args.family.default_slack(args.max_n)),
            window: args.window,
            format: args.format,
        };
        cfg.check()?;
        Ok(cfg)
    }

    pub fn check(&self) -> Result<()> {
        match self.family {
            Family::Free if self.rank == 0 => Err(Error::Config("--rank must be at least 1".into())),
            Family::FreeAbelian if self.dim == 0 => Err(Error::Config("--dim must be at least 1".into())),
            Family::Raag if self.graph.is_none() => Err(Error::Config("missing defining graph".into())),
            _ if self.window == 0 => Err(Error::Config("--window must be at least 1".into())),
            _ => Ok(()),
        }
    }

    /// One-line description used in report headers.
    pub fn describe(&self) -> String {
        match self.family {
            Family::Free => format!("free rank={}", self.rank),
            Family::FreeAbelian => format!("free-abelian dim={}", self.dim),
            Family::Raag => {
                let g = self.graph.as_ref().expect("checked");
                let edges: Vec<String> = (0..g.vertex_count())
                    .flat_map(|u| (u + 1..g.vertex_count()).map(move |v| (u, v)))
                    .filter(|&(u, v)| g.adjacent(u, v))
                    .map(|(u, v)| format!("{}{}", g.labels()[u], g.labels()[v]))
                    .collect();
                format!("raag vertices={} edges={}", g.labels().join(" "), edges.join(" "))
            }
            other => other.name().to_string(),
        }
    }
}
