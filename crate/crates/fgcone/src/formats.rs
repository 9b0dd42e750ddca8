//! Text formats: alist and dense matrices, JSON-lines class lists, and CSV
//! spectra.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};

use fgcone_core::cone::{ClassSet, PseudoCodeword};
use fgcone_core::pweight::Spectrum;
use fgcone_core::rational::to_f64;
use fgcone_core::ParityCheckMatrix;
use serde::{Deserialize, Serialize};

use crate::error::{parse_err, Error, Result};

/// Writes `h` in alist format (1-based, no zero padding).
pub fn write_alist<W: Write>(h: &ParityCheckMatrix, mut out: W) -> Result<()> {
    let cols: Vec<&[usize]> = (0..h.n()).map(|i| h.col(i)).collect();
    writeln!(out, "{} {}", h.n(), h.m())?;
    writeln!(out, "{} {}", h.max_col_weight(), h.max_row_weight())?;
    let join = |it: &mut dyn Iterator<Item = usize>| it.map(|v| v.to_string()).collect::<Vec<_>>().join(" ");
    writeln!(out, "{}", join(&mut cols.iter().map(|c| c.len())))?;
    writeln!(out, "{}", join(&mut h.rows().iter().map(Vec::len)))?;
    for c in &cols {
        writeln!(out, "{}", join(&mut c.iter().map(|j| j + 1)))?;
    }
    for r in h.rows() {
        writeln!(out, "{}", join(&mut r.iter().map(|i| i + 1)))?;
    }
    Ok(())
}

fn numbers(line: &str, lineno: usize) -> Result<Vec<usize>> {
    line.split_whitespace()
        .map(|t| t.parse::<usize>().map_err(|e| parse_err(lineno, format!("{t:?}: {e}"))))
        .collect()
}

/// Reads an alist file. Zero entries used as padding are ignored. The row
/// lists must agree with the column lists.
pub fn read_alist<R: BufRead>(input: R) -> Result<ParityCheckMatrix> {
    let lines: Vec<(usize, String)> = input
        .lines()
        .enumerate()
        .map(|(k, l)| l.map(|l| (k + 1, l)))
        .collect::<std::io::Result<Vec<_>>>()?
        .into_iter()
        .filter(|(_, l)| !l.trim().is_empty())
        .collect();
    let mut it = lines.iter();
    let mut next = |what: &str| -> Result<(usize, Vec<usize>)> {
        let (k, l) = it.next().ok_or_else(|| parse_err(0, format!("missing {what}")))?;
        Ok((*k, numbers(l, *k)?))
    };
    let (k, dims) = next("dimensions")?;
    let [n, m] = dims[..] else {
        return Err(parse_err(k, "expected `n m`"));
    };
    next("maximum degrees")?;
    let (k, col_deg) = next("column degrees")?;
    if col_deg.len() != n {
        return Err(parse_err(k, format!("expected {n} column degrees")));
    }
    let (k, row_deg) = next("row degrees")?;
    if row_deg.len() != m {
        return Err(parse_err(k, format!("expected {m} row degrees")));
    }
    let mut col_sets = Vec::with_capacity(n);
    for i in 0..n {
        let (k, entries) = next("column list")?;
        let set: Vec<usize> = entries.into_iter().filter(|&v| v != 0).map(|v| v - 1).collect();
        if set.len() != col_deg[i] || set.iter().any(|&j| j >= m) {
            return Err(parse_err(k, format!("bad neighbour list for column {}", i + 1)));
        }
        col_sets.push(set);
    }
    let mut rows = Vec::with_capacity(m);
    for j in 0..m {
        let (k, entries) = next("row list")?;
        let mut set: Vec<usize> = entries.into_iter().filter(|&v| v != 0).map(|v| v - 1).collect();
        if set.len() != row_deg[j] || set.iter().any(|&i| i >= n) {
            return Err(parse_err(k, format!("bad neighbour list for row {}", j + 1)));
        }
        set.sort_unstable();
        rows.push(set);
    }
    let h = ParityCheckMatrix::from_row_supports(n, rows)?;
    for (i, set) in col_sets.iter_mut().enumerate() {
        set.sort_unstable();
        if set.as_slice() != h.col(i) {
            return Err(parse_err(0, format!("column {} disagrees with the row lists", i + 1)));
        }
    }
    Ok(h)
}

/// One row per line, entries `0`/`1` separated by spaces.
pub fn write_dense<W: Write>(h: &ParityCheckMatrix, mut out: W) -> Result<()> {
    for row in h.dense() {
        let s: Vec<String> = row.iter().map(|b| b.to_string()).collect();
        writeln!(out, "{}", s.join(" "))?;
    }
    Ok(())
}

/// Accepts rows with or without separators between the bits.
pub fn read_dense<R: BufRead>(input: R) -> Result<ParityCheckMatrix> {
    let mut rows = Vec::new();
    for (k, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let row = line
            .chars()
            .filter(|c| !c.is_whitespace() && *c != ',')
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                other => Err(parse_err(k + 1, format!("unexpected {other:?}"))),
            })
            .collect::<Result<Vec<u8>>>()?;
        rows.push(row);
    }
    Ok(ParityCheckMatrix::from_dense(&rows)?)
}

/// One line of a class list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub class_id: usize,
    pub vector: Vec<i64>,
    #[serde(rename = "type")]
    pub type_counts: BTreeMap<String, usize>,
    pub is_codeword: bool,
    /// Size of the orbit this class represents, for orbit lists.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub orbit_size: Option<u64>,
}

impl ClassRecord {
    pub fn new(h: &ParityCheckMatrix, class_id: usize, w: &PseudoCodeword) -> Self {
        let t = w.type_vector();
        let mut type_counts = BTreeMap::new();
        if t.zeros > 0 {
            type_counts.insert("0".to_string(), t.zeros);
        }
        for (v, c) in &t.counts {
            type_counts.insert(v.to_string(), *c);
        }
        Self { class_id, vector: w.entries().to_vec(), type_counts, is_codeword: w.is_codeword(h), orbit_size: None }
    }
}

pub fn write_classes<W: Write>(h: &ParityCheckMatrix, classes: &[PseudoCodeword], mut out: W) -> Result<()> {
    for (k, w) in classes.iter().enumerate() {
        serde_json::to_writer(&mut out, &ClassRecord::new(h, k, w))?;
        writeln!(out)?;
    }
    Ok(())
}

/// One line per orbit with its size, or one per class when the set has no
/// symmetry.
pub fn write_class_set<W: Write>(h: &ParityCheckMatrix, set: &ClassSet, mut out: W) -> Result<()> {
    if !set.is_symmetric() {
        return write_classes(h, set.representatives(), out);
    }
    for (k, (w, &size)) in set.representatives().iter().zip(set.counts()).enumerate() {
        let rec = ClassRecord { orbit_size: Some(size), ..ClassRecord::new(h, k, w) };
        serde_json::to_writer(&mut out, &rec)?;
        writeln!(out)?;
    }
    Ok(())
}

pub fn read_class_records<R: BufRead>(input: R) -> Result<Vec<ClassRecord>> {
    let mut out = Vec::new();
    for (k, line) in input.lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let rec: ClassRecord =
            serde_json::from_str(&line).map_err(|e| parse_err(k + 1, e.to_string()))?;
        out.push(rec);
    }
    Ok(out)
}

/// Reads a class list and normalizes every vector.
pub fn read_classes<R: BufRead>(input: R) -> Result<Vec<PseudoCodeword>> {
    read_class_records(input)?
        .iter()
        .map(|r| PseudoCodeword::from_integers(&r.vector).map_err(Error::from))
        .collect()
}

/// `pseudo_weight,count` with exact values rendered as `p/q`.
pub fn write_spectrum_csv<W: Write>(spectrum: &Spectrum, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["pseudo_weight", "count"])?;
    for (pw, count) in spectrum.terms() {
        w.write_record([pw.to_string(), count.to_string()])?;
    }
    w.flush()?;
    Ok(())
}

/// Histogram over bins `[k * width, (k + 1) * width)`. Lossy: values are
/// placed by their floating point approximation.
pub fn histogram(spectrum: &Spectrum, width: f64) -> Result<Vec<(f64, f64, u64)>> {
    if !(width > 0.0) {
        return Err(Error::Usage("bin width must be positive".into()));
    }
    let mut bins: BTreeMap<i64, u64> = BTreeMap::new();
    for (pw, count) in spectrum.terms() {
        let k = (to_f64(pw) / width).floor() as i64;
        *bins.entry(k).or_default() += count;
    }
    Ok(bins.into_iter().map(|(k, c)| (k as f64 * width, (k + 1) as f64 * width, c)).collect())
}

pub fn write_histogram_csv<W: Write>(spectrum: &Spectrum, width: f64, out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["bin_low", "bin_high", "count"])?;
    for (lo, hi, c) in histogram(spectrum, width)? {
        w.write_record([lo.to_string(), hi.to_string(), c.to_string()])?;
    }
    w.flush()?;
    Ok(())
}
