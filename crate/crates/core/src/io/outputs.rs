use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::generator::Collection;
use crate::graph::Graph;

use super::{decode_graph6, encode_graph6, io_err, FileError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Min3,
    Cubic,
}

/// Write one graph6 file per `(n, m)` (min3) or per `n` (cubic), in
/// certificate order, and `counts.tsv`. Returns the paths written.
pub fn write_outputs(
    collections: &[Collection],
    mode: OutputMode,
    dir: &Path,
) -> Result<Vec<PathBuf>, FileError> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let mut written = Vec::new();
    let mut counts = String::from("n\tm\tcount\n");
    for col in collections {
        let mut by_m: BTreeMap<usize, String> = BTreeMap::new();
        for (_, g) in &col.graphs {
            let text = by_m.entry(g.m()).or_default();
            text.push_str(&encode_graph6(g));
            text.push('\n');
        }
        for (m, text) in &by_m {
            let name = match mode {
                OutputMode::Min3 => format!("min3_n{}_m{m}.g6", col.n),
                OutputMode::Cubic => format!("cubic_n{}.g6", col.n),
            };
            let path = dir.join(name);
            fs::write(&path, text).map_err(io_err(&path))?;
            written.push(path);
            let _ = writeln!(counts, "{}\t{m}\t{}", col.n, text.lines().count());
        }
        let _ = writeln!(counts, "{}\ttotal\t{}", col.n, col.len());
    }
    let path = dir.join("counts.tsv");
    fs::write(&path, counts).map_err(io_err(&path))?;
    written.push(path);
    Ok(written)
}

/// Graphs of a graph6 file, one per non-blank line.
pub fn read_graph6_file(path: &Path) -> Result<Vec<Graph>, FileError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            decode_graph6(l.trim()).map_err(|source| FileError::Graph6 {
                path: path.to_path_buf(),
                line: i + 1,
                source,
            })
        })
        .collect()
}
