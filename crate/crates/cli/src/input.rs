use sha2::{Digest, Sha256};
use std::io::Read;
use std::path::{Path, PathBuf};

use closedpack::{BinaryMatrix, FamilySpec, Generated, Graph, InputDescriptor};

use crate::error::{CliError, Result};

/// Where a command reads its graph or matrix from.
#[derive(Debug, clap::Args)]
#[group(required = true, multiple = false)]
pub struct InputArgs {
    /// Graph text file (`-` for stdin).
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Matrix text file (`-` for stdin).
    #[arg(long)]
    pub matrix: Option<PathBuf>,
    /// Generated family, e.g. `"web 7 2"`.
    #[arg(long)]
    pub family: Option<String>,
}

pub enum Input {
    Graph(Graph, InputDescriptor),
    Matrix(BinaryMatrix),
}

pub fn read_source(path: &Path) -> Result<Vec<u8>> {
    let io = |source| CliError::Io {
        path: path.to_path_buf(),
        source,
    };
    if path == Path::new("-") {
        let mut buf = Vec::new();
        std::io::stdin().read_to_end(&mut buf).map_err(io)?;
        Ok(buf)
    } else {
        std::fs::read(path).map_err(io)
    }
}

fn utf8(path: &Path, bytes: &[u8]) -> Result<String> {
    String::from_utf8(bytes.to_vec()).map_err(|_| CliError::Usage(format!("{}: not UTF-8 text", path.display())))
}

fn sha256_hex(bytes: &[u8]) -> String {
    format!("{:x}", Sha256::digest(bytes))
}

impl InputArgs {
    pub fn load(&self) -> Result<Input> {
        if let Some(path) = &self.graph {
            let bytes = read_source(path)?;
            let g: Graph = utf8(path, &bytes)?.parse()?;
            Ok(Input::Graph(g, InputDescriptor::File { sha256: sha256_hex(&bytes) }))
        } else if let Some(path) = &self.matrix {
            let bytes = read_source(path)?;
            Ok(Input::Matrix(utf8(path, &bytes)?.parse()?))
        } else {
            let text = self.family.as_deref().unwrap_or_default();
            let spec: FamilySpec = text.parse()?;
            Ok(match spec.build()? {
                Generated::Graph(g) => Input::Graph(g, InputDescriptor::Family { spec }),
                Generated::Matrix(m) => Input::Matrix(m),
            })
        }
    }

    /// Loads input that must be a graph.
    pub fn load_graph(&self) -> Result<(Graph, InputDescriptor)> {
        match self.load()? {
            Input::Graph(g, d) => Ok((g, d)),
            Input::Matrix(_) => Err(CliError::Usage("this command needs a graph, not a matrix".into())),
        }
    }
}
