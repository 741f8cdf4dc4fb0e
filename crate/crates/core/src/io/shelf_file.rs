//! Text persistence for shelves.
//!
//! Tab separated. A magic/version line, then `m` and `n` lines, then one
//! record per entry: class, graph6, provenance fields and the cycle list.
//! Empty fields are written as `-`.
//!
//! ```text
//! min3gen-shelf  1
//! m  11
//! n  7
//! A1  F?~vW  2,5,3,7  0-1-2-6,0-1-5-4
//! ```

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use crate::cycles::{Cycle, CycleSet};
use crate::generator::{ClassTag, Level, Provenance, Shelf, ShelfEntry};

use super::{decode_graph6, encode_graph6, io_err, FileError};

pub const SHELF_FORMAT_VERSION: u32 = 1;
const MAGIC: &str = "min3gen-shelf";

fn shelf_path(dir: &Path, m: usize, n: usize) -> PathBuf {
    dir.join(format!("shelf_n{n}_m{m}.tsv"))
}

fn marker_path(dir: &Path, n: usize) -> PathBuf {
    dir.join(format!("level_n{n}.done"))
}

fn join_or_dash(items: impl Iterator<Item = String>, sep: &str) -> String {
    let s: Vec<String> = items.collect();
    if s.is_empty() {
        "-".to_string()
    } else {
        s.join(sep)
    }
}

fn render(shelf: &Shelf) -> String {
    let mut out = format!(
        "{MAGIC}\t{SHELF_FORMAT_VERSION}\nm\t{}\nn\t{}\n",
        shelf.m, shelf.n
    );
    for e in shelf.entries() {
        let prov = join_or_dash(
            e.provenance.fields().into_iter().map(|v| v.to_string()),
            ",",
        );
        let cycles = join_or_dash(e.cycles.iter().map(Cycle::to_string), ",");
        let _ = writeln!(
            out,
            "{}\t{}\t{prov}\t{cycles}",
            e.provenance.class(),
            encode_graph6(&e.graph)
        );
    }
    out
}

pub fn save_shelf(shelf: &Shelf, dir: &Path) -> Result<PathBuf, FileError> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let path = shelf_path(dir, shelf.m, shelf.n);
    fs::write(&path, render(shelf)).map_err(io_err(&path))?;
    Ok(path)
}

fn parse_header(path: &Path, lines: &[&str]) -> Result<(usize, usize), FileError> {
    let bad = |line: usize, msg: &str| FileError::Parse {
        path: path.to_path_buf(),
        line,
        msg: msg.to_string(),
    };
    let first = lines.first().ok_or_else(|| bad(1, "empty shelf file"))?;
    let version = first
        .strip_prefix(MAGIC)
        .and_then(|r| r.strip_prefix('\t'))
        .ok_or_else(|| bad(1, "not a shelf file"))?;
    if version != SHELF_FORMAT_VERSION.to_string() {
        return Err(FileError::Version {
            path: path.to_path_buf(),
            found: version.to_string(),
            expected: SHELF_FORMAT_VERSION,
        });
    }
    let field = |i: usize, key: &str| -> Result<usize, FileError> {
        lines
            .get(i)
            .and_then(|l| l.strip_prefix(key))
            .and_then(|r| r.strip_prefix('\t'))
            .and_then(|v| v.parse().ok())
            .ok_or_else(|| bad(i + 1, &format!("expected `{key}<TAB>count`")))
    };
    Ok((field(1, "m")?, field(2, "n")?))
}

fn parse_record(path: &Path, line: usize, text: &str) -> Result<ShelfEntry, FileError> {
    let bad = |msg: String| FileError::Parse {
        path: path.to_path_buf(),
        line,
        msg,
    };
    let parts: Vec<&str> = text.split('\t').collect();
    let &[class, g6, prov, cycles] = parts.as_slice() else {
        return Err(bad(format!("expected 4 fields, got {}", parts.len())));
    };
    let class: ClassTag = class.parse().map_err(bad)?;
    let graph = decode_graph6(g6).map_err(|source| FileError::Graph6 {
        path: path.to_path_buf(),
        line,
        source,
    })?;
    let fields: Vec<usize> = if prov == "-" {
        Vec::new()
    } else {
        prov.split(',')
            .map(|f| {
                f.parse()
                    .map_err(|_| bad(format!("bad provenance field {f:?}")))
            })
            .collect::<Result<_, _>>()?
    };
    let provenance = Provenance::from_fields(class, &fields)
        .ok_or_else(|| bad(format!("provenance {prov:?} does not fit class {class}")))?;
    let cycles: CycleSet = if cycles == "-" {
        CycleSet::default()
    } else {
        cycles
            .split(',')
            .map(|c| c.parse::<Cycle>().map_err(|e| bad(e.to_string())))
            .collect::<Result<_, _>>()?
    };
    Ok(ShelfEntry::new(graph, cycles, provenance))
}

pub fn load_shelf(path: &Path) -> Result<Shelf, FileError> {
    let text = fs::read_to_string(path).map_err(io_err(path))?;
    let lines: Vec<&str> = text.lines().collect();
    let (m, n) = parse_header(path, &lines)?;
    let mut shelf = Shelf::new(m, n);
    for (i, l) in lines.iter().enumerate().skip(3) {
        if l.is_empty() {
            continue;
        }
        let entry = parse_record(path, i + 1, l)?;
        if entry.graph.n() != n || entry.graph.m() != m {
            return Err(FileError::Parse {
                path: path.to_path_buf(),
                line: i + 1,
                msg: format!(
                    "graph has n={} m={}, shelf is n={n} m={m}",
                    entry.graph.n(),
                    entry.graph.m()
                ),
            });
        }
        shelf.push(entry);
    }
    Ok(shelf)
}

/// Write every shelf of a level, then a marker naming them.
pub fn save_level(level: &Level, dir: &Path) -> Result<(), FileError> {
    for shelf in level.shelves.values() {
        save_shelf(shelf, dir)?;
    }
    let ms: Vec<String> = level.shelves.keys().map(|m| m.to_string()).collect();
    let marker = format!(
        "{MAGIC}\t{SHELF_FORMAT_VERSION}\nintermediates\t{}\nshelves\t{}\n",
        level.with_intermediates,
        ms.join(",")
    );
    let path = marker_path(dir, level.n);
    fs::write(&path, marker).map_err(io_err(&path))
}

/// The saved level `n`, or `None` when its marker is absent.
pub fn load_level(dir: &Path, n: usize) -> Result<Option<Level>, FileError> {
    let path = marker_path(dir, n);
    if !path.exists() {
        return Ok(None);
    }
    let text = fs::read_to_string(&path).map_err(io_err(&path))?;
    let lines: Vec<&str> = text.lines().collect();
    let bad = |line: usize| FileError::Parse {
        path: path.clone(),
        line,
        msg: "malformed level marker".to_string(),
    };
    let version = lines
        .first()
        .and_then(|l| l.strip_prefix(MAGIC))
        .and_then(|r| r.strip_prefix('\t'))
        .ok_or_else(|| bad(1))?;
    if version != SHELF_FORMAT_VERSION.to_string() {
        return Err(FileError::Version {
            path: path.clone(),
            found: version.to_string(),
            expected: SHELF_FORMAT_VERSION,
        });
    }
    let with_intermediates = match lines.get(1).and_then(|l| l.strip_prefix("intermediates\t")) {
        Some("true") => true,
        Some("false") => false,
        _ => return Err(bad(2)),
    };
    let list = lines
        .get(2)
        .and_then(|l| l.strip_prefix("shelves\t"))
        .ok_or_else(|| bad(3))?;
    let mut level = Level {
        n,
        shelves: Default::default(),
        with_intermediates,
    };
    for m in list.split(',').filter(|s| !s.is_empty()) {
        let m: usize = m.parse().map_err(|_| bad(3))?;
        level.shelves.insert(m, load_shelf(&shelf_path(dir, m, n))?);
    }
    Ok(Some(level))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generator::e1;

    #[test]
    fn shelf_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let mut shelf = Shelf::new(10, 6);
        for e in e1(&ShelfEntry::root()) {
            shelf.push(e);
        }
        let path = save_shelf(&shelf, dir.path()).unwrap();
        assert_eq!(load_shelf(&path).unwrap(), shelf);

        let mut root = Shelf::new(9, 6);
        root.push(ShelfEntry::root());
        let path = save_shelf(&root, dir.path()).unwrap();
        assert_eq!(load_shelf(&path).unwrap(), root);
    }

    #[test]
    fn version_mismatch() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("shelf_n6_m9.tsv");
        fs::write(&path, "min3gen-shelf\t99\nm\t9\nn\t6\n").unwrap();
        assert!(matches!(load_shelf(&path), Err(FileError::Version { .. })));
    }

    #[test]
    fn bad_record_names_line() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("shelf_n6_m9.tsv");
        fs::write(&path, "min3gen-shelf\t1\nm\t9\nn\t6\nA0\tE~~w\n").unwrap();
        match load_shelf(&path) {
            Err(FileError::Parse { line, .. }) => assert_eq!(line, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_level() {
        let dir = tempfile::tempdir().unwrap();
        assert!(load_level(dir.path(), 7).unwrap().is_none());
    }
}
