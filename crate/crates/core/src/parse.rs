//! Readers for the three text formats.
//!
//! * `dense`: one row per line of `0`/`1` characters, optionally separated by
//!   single spaces. Blank lines are skipped. No labels.
//! * `csv`: a header of an (ignored) corner cell followed by column labels,
//!   then one `label,cell,cell,...` line per row.
//! * `edgelist`: `rows: a b c` and `cols: x y z` declarations (listing every
//!   vertex, including isolated ones), then one `row col` pair per line.
//!   `#` starts a comment.

use std::collections::HashMap;
use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::error::{Axis, ParseError, ParseErrorKind};
use crate::matrix::BinaryMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Format {
    Dense,
    Csv,
    Edgelist,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Dense => "dense",
            Format::Csv => "csv",
            Format::Edgelist => "edgelist",
        }
    }

    /// `.txt` is dense, `.csv` is csv, `.edges` is an edge list.
    pub fn from_path(path: &Path) -> Option<Self> {
        match path.extension()?.to_str()? {
            "txt" => Some(Format::Dense),
            "csv" => Some(Format::Csv),
            "edges" => Some(Format::Edgelist),
            _ => None,
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "dense" => Ok(Format::Dense),
            "csv" => Ok(Format::Csv),
            "edgelist" | "edges" => Ok(Format::Edgelist),
            other => Err(format!(
                "unknown format {other:?} (expected dense, csv or edgelist)"
            )),
        }
    }
}

pub fn parse_matrix(input: &[u8], format: Format) -> Result<BinaryMatrix, ParseError> {
    let text = std::str::from_utf8(input).map_err(|e| ParseError {
        line: 1 + input[..e.valid_up_to()]
            .iter()
            .filter(|&&b| b == b'\n')
            .count(),
        kind: ParseErrorKind::Encoding,
    })?;
    match format {
        Format::Dense => parse_dense(text),
        Format::Csv => parse_csv(text),
        Format::Edgelist => parse_edgelist(text),
    }
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

pub fn parse_dense(text: &str) -> Result<BinaryMatrix, ParseError> {
    let mut data = Vec::new();
    let mut cols = None;
    let mut rows = 0;
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        let start = data.len();
        let mut after_space = true;
        for ch in line.chars() {
            match ch {
                '0' | '1' => {
                    data.push((ch == '1') as u8);
                    after_space = false;
                }
                ' ' if !after_space => after_space = true,
                c if c.is_ascii_digit() => {
                    return Err(err(line_no, ParseErrorKind::BadCell(c.to_string())));
                }
                _ => {
                    return Err(err(
                        line_no,
                        ParseErrorKind::Malformed(format!("unexpected character {ch:?}")),
                    ));
                }
            }
        }
        let width = data.len() - start;
        match cols {
            None => cols = Some(width),
            Some(expected) if expected != width => {
                return Err(err(
                    line_no,
                    ParseErrorKind::InconsistentRowLength {
                        expected,
                        actual: width,
                    },
                ));
            }
            _ => {}
        }
        rows += 1;
    }
    Ok(BinaryMatrix::new(rows, cols.unwrap_or(0), data).expect("cells are 0 or 1"))
}

pub fn parse_csv(text: &str) -> Result<BinaryMatrix, ParseError> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());

    let mut col_labels: Option<Vec<String>> = None;
    let mut row_labels = Vec::new();
    let mut data = Vec::new();
    let mut seen_rows: HashMap<String, ()> = HashMap::new();
    for record in reader.records() {
        let record = record.map_err(|e| {
            let line = e.position().map_or(1, |p| p.line() as usize);
            err(line, ParseErrorKind::Malformed(e.to_string()))
        })?;
        let line = record.position().map_or(1, |p| p.line() as usize);
        if record.iter().all(str::is_empty) {
            continue;
        }
        let Some(labels) = &col_labels else {
            let labels: Vec<String> = record.iter().skip(1).map(str::to_owned).collect();
            check_unique(&labels, Axis::Column, line)?;
            col_labels = Some(labels);
            continue;
        };
        let label = record.get(0).unwrap_or_default();
        if label.is_empty() {
            return Err(err(
                line,
                ParseErrorKind::Malformed("empty row label".into()),
            ));
        }
        let cells = record.len() - 1;
        if cells != labels.len() {
            return Err(err(
                line,
                ParseErrorKind::InconsistentRowLength {
                    expected: labels.len(),
                    actual: cells,
                },
            ));
        }
        if seen_rows.insert(label.to_owned(), ()).is_some() {
            return Err(err(
                line,
                ParseErrorKind::DuplicateLabel {
                    axis: Axis::Row,
                    label: label.to_owned(),
                },
            ));
        }
        for cell in record.iter().skip(1) {
            match cell {
                "0" => data.push(0),
                "1" => data.push(1),
                other => return Err(err(line, ParseErrorKind::BadCell(other.to_owned()))),
            }
        }
        row_labels.push(label.to_owned());
    }
    let col_labels = col_labels.unwrap_or_default();
    let m = BinaryMatrix::new(row_labels.len(), col_labels.len(), data).expect("validated cells");
    Ok(m.with_labels(Some(row_labels), Some(col_labels))
        .expect("labels validated while reading"))
}

pub fn parse_edgelist(text: &str) -> Result<BinaryMatrix, ParseError> {
    let mut row_labels: Option<Vec<String>> = None;
    let mut col_labels: Option<Vec<String>> = None;
    let mut row_index: HashMap<String, usize> = HashMap::new();
    let mut col_index: HashMap<String, usize> = HashMap::new();
    let mut edges: Vec<(usize, usize, usize)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or_default().trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("rows:") {
            declare(rest, Axis::Row, line_no, &mut row_labels, &mut row_index)?;
            continue;
        }
        if let Some(rest) = line.strip_prefix("cols:") {
            declare(rest, Axis::Column, line_no, &mut col_labels, &mut col_index)?;
            continue;
        }
        if row_labels.is_none() || col_labels.is_none() {
            return Err(err(
                line_no,
                ParseErrorKind::Malformed("edge before the rows:/cols: declarations".into()),
            ));
        }
        let mut parts = line.split_whitespace();
        let (Some(r), Some(c), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(err(
                line_no,
                ParseErrorKind::Malformed("expected `row col`".into()),
            ));
        };
        let ri = *row_index.get(r).ok_or_else(|| {
            err(
                line_no,
                ParseErrorKind::UnknownLabel {
                    axis: Axis::Row,
                    label: r.to_owned(),
                },
            )
        })?;
        let ci = *col_index.get(c).ok_or_else(|| {
            err(
                line_no,
                ParseErrorKind::UnknownLabel {
                    axis: Axis::Column,
                    label: c.to_owned(),
                },
            )
        })?;
        edges.push((ri, ci, line_no));
    }

    let row_labels = row_labels.unwrap_or_default();
    let col_labels = col_labels.unwrap_or_default();
    let mut m = BinaryMatrix::zeros(row_labels.len(), col_labels.len());
    for (r, c, line_no) in edges {
        if m.get(r, c) == 1 {
            return Err(err(
                line_no,
                ParseErrorKind::DuplicateEdge(row_labels[r].clone(), col_labels[c].clone()),
            ));
        }
        m.set(r, c, true);
    }
    Ok(m.with_labels(Some(row_labels), Some(col_labels))
        .expect("labels validated while reading"))
}

fn declare(
    rest: &str,
    axis: Axis,
    line: usize,
    labels: &mut Option<Vec<String>>,
    index: &mut HashMap<String, usize>,
) -> Result<(), ParseError> {
    if labels.is_some() {
        return Err(err(
            line,
            ParseErrorKind::Malformed(format!("{axis} labels declared twice")),
        ));
    }
    let list: Vec<String> = rest.split_whitespace().map(str::to_owned).collect();
    check_unique(&list, axis, line)?;
    index.extend(list.iter().cloned().enumerate().map(|(i, l)| (l, i)));
    *labels = Some(list);
    Ok(())
}

fn check_unique(labels: &[String], axis: Axis, line: usize) -> Result<(), ParseError> {
    let mut seen = HashMap::with_capacity(labels.len());
    for l in labels {
        if l.is_empty() {
            return Err(err(
                line,
                ParseErrorKind::Malformed(format!("empty {axis} label")),
            ));
        }
        if seen.insert(l.as_str(), ()).is_some() {
            return Err(err(
                line,
                ParseErrorKind::DuplicateLabel {
                    axis,
                    label: l.clone(),
                },
            ));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn identity2() -> BinaryMatrix {
        BinaryMatrix::from_rows(&[[1, 0], [0, 1]]).unwrap()
    }

    #[test]
    fn dense_basic() {
        let m = parse_matrix(b"101\n010", Format::Dense).unwrap();
        assert_eq!(m, BinaryMatrix::from_rows(&[[1, 0, 1], [0, 1, 0]]).unwrap());
        assert!(m.row_labels().is_none());
    }

    #[test]
    fn dense_spaces_blank_lines_crlf() {
        let m = parse_matrix(b"\n1 0 1\r\n\n0 1 0\n\n", Format::Dense).unwrap();
        assert_eq!(m, BinaryMatrix::from_rows(&[[1, 0, 1], [0, 1, 0]]).unwrap());
    }

    #[test]
    fn dense_empty_is_zero_by_zero() {
        let m = parse_matrix(b"", Format::Dense).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 0));
    }

    #[test]
    fn dense_errors_carry_line_numbers() {
        let e = parse_matrix(b"10\n12\n", Format::Dense).unwrap_err();
        assert_eq!(
            e,
            ParseError {
                line: 2,
                kind: ParseErrorKind::BadCell("2".into())
            }
        );
        let e = parse_matrix(b"10\n\n101\n", Format::Dense).unwrap_err();
        assert_eq!(
            e,
            ParseError {
                line: 3,
                kind: ParseErrorKind::InconsistentRowLength {
                    expected: 2,
                    actual: 3
                }
            }
        );
        let e = parse_matrix(b"1  0\n", Format::Dense).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Malformed(_)));
        let e = parse_matrix(b"1x\n", Format::Dense).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Malformed(_)));
    }

    #[test]
    fn invalid_utf8() {
        let e = parse_matrix(b"10\n\xff\n", Format::Dense).unwrap_err();
        assert_eq!(
            e,
            ParseError {
                line: 2,
                kind: ParseErrorKind::Encoding
            }
        );
    }

    #[test]
    fn csv_basic() {
        let m = parse_matrix(b",x,y\na,1,0\nb,0,1", Format::Csv).unwrap();
        assert!(m.same_entries(&identity2()));
        assert_eq!(m.row_labels().unwrap(), ["a", "b"]);
        assert_eq!(m.col_labels().unwrap(), ["x", "y"]);
    }

    #[test]
    fn csv_header_only_and_empty() {
        let m = parse_matrix(b",x,y,z\n", Format::Csv).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 3));
        let m = parse_matrix(b"", Format::Csv).unwrap();
        assert_eq!((m.rows(), m.cols()), (0, 0));
    }

    #[test]
    fn csv_errors() {
        let e = parse_matrix(b",x,y\na,1,0\nb,1\n", Format::Csv).unwrap_err();
        assert_eq!(
            e,
            ParseError {
                line: 3,
                kind: ParseErrorKind::InconsistentRowLength {
                    expected: 2,
                    actual: 1
                }
            }
        );
        let e = parse_matrix(b",x,x\n", Format::Csv).unwrap_err();
        assert!(matches!(
            e.kind,
            ParseErrorKind::DuplicateLabel {
                axis: Axis::Column,
                ..
            }
        ));
        let e = parse_matrix(b",x\na,1\na,0\n", Format::Csv).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(
            e.kind,
            ParseErrorKind::DuplicateLabel {
                axis: Axis::Row,
                ..
            }
        ));
        let e = parse_matrix(b",x\na,yes\n", Format::Csv).unwrap_err();
        assert_eq!(
            e,
            ParseError {
                line: 2,
                kind: ParseErrorKind::BadCell("yes".into())
            }
        );
    }

    #[test]
    fn edgelist_matches_csv() {
        let text = b"rows: a b\ncols: x y\na x\nb y\n";
        let e = parse_matrix(text, Format::Edgelist).unwrap();
        let c = parse_matrix(b",x,y\na,1,0\nb,0,1", Format::Csv).unwrap();
        assert_eq!(e, c);
    }

    #[test]
    fn edgelist_isolated_vertices_and_comments() {
        let text = b"# pollinators\ncols: x y z\nrows: a b c # plants\n\nc z\n";
        let m = parse_matrix(text, Format::Edgelist).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        assert_eq!(m.ones(), 1);
        assert_eq!(m.get(2, 2), 1);
    }

    #[test]
    fn edgelist_errors() {
        let e = parse_matrix(b"a x\n", Format::Edgelist).unwrap_err();
        assert_eq!(e.line, 1);
        let e = parse_matrix(b"rows: a\ncols: x\na y\n", Format::Edgelist).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(
            e.kind,
            ParseErrorKind::UnknownLabel {
                axis: Axis::Column,
                ..
            }
        ));
        let e = parse_matrix(b"rows: a a\n", Format::Edgelist).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::DuplicateLabel { .. }));
        let e = parse_matrix(b"rows: a\ncols: x\na x\na x\n", Format::Edgelist).unwrap_err();
        assert_eq!(e.line, 4);
        assert!(matches!(e.kind, ParseErrorKind::DuplicateEdge(..)));
        let e = parse_matrix(b"rows: a\ncols: x\na x extra\n", Format::Edgelist).unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::Malformed(_)));
        let e = parse_matrix(b"rows: a\nrows: b\n", Format::Edgelist).unwrap_err();
        assert_eq!(e.line, 2);
    }

    #[test]
    fn format_names() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
        assert_eq!(
            Format::from_path(Path::new("web.edges")),
            Some(Format::Edgelist)
        );
        assert_eq!(Format::from_path(Path::new("web.txt")), Some(Format::Dense));
        assert_eq!(Format::from_path(Path::new("web")), None);
    }

    proptest! {
        #[test]
        fn never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..256)) {
            for f in [Format::Dense, Format::Csv, Format::Edgelist] {
                let _ = parse_matrix(&bytes, f);
            }
        }

        #[test]
        fn dense_roundtrip(m in 1usize..6, n in 1usize..6, seed in proptest::collection::vec(0u8..2, 36)) {
            let a = BinaryMatrix::new(m, n, seed[..m * n].to_vec()).unwrap();
            prop_assert_eq!(parse_matrix(a.to_string().as_bytes(), Format::Dense).unwrap(), a);
        }
    }
}
