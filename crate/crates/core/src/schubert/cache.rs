//! On-disk cache of [`ProductTable`]s.
//!
//! One text file per Cartan label: a header naming the label, the
//! convention version and the group order, then one line `u v w c` per
//! nonzero structure constant `sigma^u sigma^v = ... + c sigma^w`, with ids
//! into the canonical enumeration of `W`. A file whose header does not match
//! is ignored and rewritten.

use std::fs;
use std::io::{BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use super::{ProductTable, Sparse};
use crate::error::{Error, Result};
use crate::rootdata::RootSystem;
use crate::weyl::{self, Enumeration, WeylElem};

/// Bumped whenever ids, indexing or the file layout change.
pub const CONVENTION_VERSION: u32 = 1;

/// Environment variable overriding the cache directory.
pub const CACHE_ENV: &str = "EIGENCONE_CACHE_DIR";

const MAGIC: &str = "# eigencone schubert table";

pub(super) fn path_for(dir: &Path, rs: &RootSystem) -> PathBuf {
    dir.join(format!("schubert-{}.txt", rs.label()))
}

pub(super) fn store(t: &ProductTable, path: &Path) -> Result<()> {
    if let Some(parent) = path.parent() {
        fs::create_dir_all(parent)?;
    }
    let tmp = path.with_extension("tmp");
    {
        let mut f = BufWriter::new(fs::File::create(&tmp)?);
        writeln!(f, "{MAGIC}")?;
        writeln!(f, "label {}", t.rs.label())?;
        writeln!(f, "convention {CONVENTION_VERSION}")?;
        writeln!(f, "elements {}", t.elems.len())?;
        let n = t.elems.len();
        for u in 0..n {
            for v in 0..n {
                for &(w, c) in &t.products[u * n + v] {
                    writeln!(f, "{u} {v} {w} {c}")?;
                }
            }
        }
        f.flush()?;
    }
    fs::rename(&tmp, path)?;
    Ok(())
}

/// `Ok(None)` when there is no usable cache file.
pub(super) fn load(rs: &RootSystem, path: &Path) -> Result<Option<ProductTable>> {
    let Ok(file) = fs::File::open(path) else {
        return Ok(None);
    };
    let mut lines = BufReader::new(file).lines();
    let mut header = Vec::new();
    for _ in 0..4 {
        match lines.next() {
            Some(line) => header.push(line?),
            None => return Ok(None),
        }
    }
    let elements = weyl::elements(rs)?;
    let expect = [
        MAGIC.to_string(),
        format!("label {}", rs.label()),
        format!("convention {CONVENTION_VERSION}"),
        format!("elements {}", elements.len()),
    ];
    if header != expect {
        return Ok(None);
    }
    let n = elements.len();
    let mut products: Vec<Sparse> = vec![Vec::new(); n * n];
    for (lineno, line) in lines.enumerate() {
        let line = line?;
        let bad = || Error::Cache(format!("{}: malformed line {}", path.display(), lineno + 5));
        let f: Vec<i64> = line
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        let [u, v, w, c] = f[..] else {
            return Err(bad());
        };
        if [u, v, w].iter().any(|&x| x < 0 || x as usize >= n) {
            return Err(bad());
        }
        products[u as usize * n + v as usize].push((w as u32, c));
    }
    let lengths = elements.iter().map(WeylElem::length).collect();
    Ok(Some(ProductTable {
        rs: rs.clone(),
        elems: Enumeration::new(elements),
        lengths,
        w0: weyl::longest_element(rs),
        products,
    }))
}
