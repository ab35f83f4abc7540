//! Point-set CSV files.
//!
//! ```text
//! # d=3 n=10 m=2 gens=1,3
//! 5.7206140281768436e-01,4.1562693777745352e-01,...
//! ```
//!
//! One point per row, coordinates written with 17 significant digits so that
//! reading a file back gives bit-identical values.

use std::fmt::Write as _;

use super::build::DesignPointSet;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointFileHeader {
    pub d: usize,
    pub n: usize,
    pub m: usize,
    pub gens: Vec<u64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct PointFile {
    pub header: Option<PointFileHeader>,
    pub points: Vec<Vec<f64>>,
}

pub fn write_points(x: &DesignPointSet) -> String {
    let gens: Vec<String> = x.generator.generators().iter().map(u64::to_string).collect();
    let mut out = format!(
        "# d={} n={} m={} gens={}\n",
        x.d,
        x.n(),
        x.generator.m(),
        gens.join(",")
    );
    for p in &x.points {
        for (j, v) in p.iter().enumerate() {
            if j > 0 {
                out.push(',');
            }
            write!(out, "{v:.16e}").expect("writing to a String cannot fail");
        }
        out.push('\n');
    }
    out
}

fn parse_header(line: &str) -> Result<PointFileHeader> {
    let mut d = None;
    let mut n = None;
    let mut m = None;
    let mut gens = None;
    for field in line.trim_start_matches('#').split_whitespace() {
        let (key, value) = field
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("header field without '=': {field}")))?;
        let int = |v: &str| {
            v.parse::<usize>().map_err(|_| Error::Parse(format!("bad header value {key}={v}")))
        };
        match key {
            "d" => d = Some(int(value)?),
            "n" => n = Some(int(value)?),
            "m" => m = Some(int(value)?),
            "gens" => {
                gens = Some(
                    value
                        .split(',')
                        .map(|g| g.parse::<u64>().map_err(|_| Error::Parse(format!("bad generator {g}"))))
                        .collect::<Result<Vec<_>>>()?,
                )
            }
            _ => return Err(Error::Parse(format!("unknown header field {key}"))),
        }
    }
    match (d, n, m, gens) {
        (Some(d), Some(n), Some(m), Some(gens)) => Ok(PointFileHeader { d, n, m, gens }),
        _ => Err(Error::Parse("header needs d=, n=, m= and gens=".into())),
    }
}

/// Parses a point CSV. The header is optional; when present its counts must
/// match the rows.
pub fn read_points(text: &str) -> Result<PointFile> {
    let mut header = None;
    let mut points = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line.starts_with('#') {
            if lineno == 0 {
                header = Some(parse_header(line)?);
            }
            continue;
        }
        let row = line
            .split(',')
            .map(|v| {
                v.trim()
                    .parse::<f64>()
                    .map_err(|_| Error::Parse(format!("line {}: bad number {v:?}", lineno + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        points.push(row);
    }
    if let Some(h) = &header {
        if h.n != points.len() {
            return Err(Error::Parse(format!("header says n={} but file has {} rows", h.n, points.len())));
        }
        if points.iter().any(|p| p.len() != h.d + 1) {
            return Err(Error::Parse(format!("rows must have d+1 = {} columns", h.d + 1)));
        }
    }
    Ok(PointFile { header, points })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::designs::build::{build_design, GeneratorSet};

    #[test]
    fn round_trip_is_bit_identical() {
        let x = build_design(&GeneratorSet::new(10, vec![1, 3]).unwrap());
        let text = write_points(&x);
        assert!(text.starts_with("# d=3 n=10 m=2 gens=1,3\n"));
        let back = read_points(&text).unwrap();
        assert_eq!(back.points, x.points);
        assert_eq!(back.header.unwrap().gens, vec![1, 3]);
        assert_eq!(write_points(&x), text);
    }

    #[test]
    fn headerless_and_bad_files() {
        let f = read_points("1,0\n0,1\n").unwrap();
        assert!(f.header.is_none());
        assert_eq!(f.points.len(), 2);
        assert!(read_points("1,zero\n").is_err());
        assert!(read_points("# d=1 n=3 m=1 gens=1\n1,0\n").is_err());
        assert!(read_points("# d=1 n=1\n1,0\n").is_err());
    }
}
