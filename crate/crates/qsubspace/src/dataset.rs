//! Labeled feature vectors and CSV ingestion.
//!
//! A [`Dataset`] is a rectangular table of `p` real features plus a class
//! label per row. The accepted CSV layout has header `f0,...,f{p-1},label`
//! with plain decimal-point numerics. Pattern files for batch
//! classification use the same feature columns; their label column, when
//! present, is ignored.

use std::fs::File;
use std::io::Read;
use std::path::Path;

use crate::error::{Error, Result};

/// One labeled observation.
#[derive(Debug, Clone, PartialEq)]
pub struct DataRow {
    pub features: Vec<f64>,
    pub label: String,
}

/// A nonempty rectangular table of labeled feature vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    p: usize,
    rows: Vec<DataRow>,
}

impl Dataset {
    /// Validates shape and contents: at least one row, all rows of equal
    /// width, finite features, nonempty labels.
    pub fn new(rows: Vec<DataRow>) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyInput("dataset needs at least one row"))?;
        let p = first.features.len();
        if p == 0 {
            return Err(Error::EmptyInput("dataset rows need at least one feature"));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.features.len() != p {
                return Err(Error::RaggedRow { row: i, expected: p, got: row.features.len() });
            }
            if let Some(&bad) = row.features.iter().find(|f| !f.is_finite()) {
                return Err(Error::NonFinite(bad));
            }
            if row.label.is_empty() {
                return Err(Error::EmptyInput("class labels must be nonempty"));
            }
        }
        Ok(Self { p, rows })
    }

    /// Feature count.
    pub fn p(&self) -> usize {
        self.p
    }

    pub fn rows(&self) -> &[DataRow] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Distinct labels in order of first appearance.
    pub fn class_labels(&self) -> Vec<&str> {
        let mut seen = Vec::new();
        for row in &self.rows {
            if !seen.contains(&row.label.as_str()) {
                seen.push(row.label.as_str());
            }
        }
        seen
    }

    /// Rows grouped per class, classes in order of first appearance and
    /// rows in dataset order within each class.
    pub fn by_class(&self) -> Vec<(&str, Vec<&[f64]>)> {
        let mut groups: Vec<(&str, Vec<&[f64]>)> = Vec::new();
        for row in &self.rows {
            match groups.iter_mut().find(|(l, _)| *l == row.label) {
                Some((_, members)) => members.push(&row.features),
                None => groups.push((&row.label, vec![&row.features])),
            }
        }
        groups
    }

    /// Feature `j` pooled across every row, in dataset order.
    pub fn column(&self, j: usize) -> Result<Vec<f64>> {
        if j >= self.p {
            return Err(Error::DimMismatch { expected: self.p, got: j });
        }
        Ok(self.rows.iter().map(|r| r.features[j]).collect())
    }

    /// Reads the `f0,...,f{p-1},label` CSV layout.
    pub fn from_csv_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_csv_reader(File::open(path)?)
    }

    pub fn from_csv_reader(reader: impl Read) -> Result<Self> {
        let mut csv = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
        let p = validate_header(csv.headers().map_err(csv_error)?, true)?;
        let mut rows = Vec::new();
        for record in csv.records() {
            let record = record.map_err(csv_error)?;
            let line = record.position().map_or(0, |pos| pos.line());
            if record.len() != p + 1 {
                return Err(Error::Csv {
                    line,
                    msg: format!("expected {} fields, found {}", p + 1, record.len()),
                });
            }
            let features = parse_features(&record, p, line)?;
            let label = record[p].to_string();
            if label.is_empty() {
                return Err(Error::Csv { line, msg: "empty class label".into() });
            }
            rows.push(DataRow { features, label });
        }
        if rows.is_empty() {
            return Err(Error::Csv { line: 1, msg: "no data rows".into() });
        }
        Dataset::new(rows)
    }
}

/// Reads unlabeled patterns for batch classification: feature columns
/// `f0..f{p-1}`, with any trailing `label` column ignored.
pub fn read_patterns_csv(reader: impl Read) -> Result<Vec<Vec<f64>>> {
    let mut csv = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(reader);
    let header = csv.headers().map_err(csv_error)?.clone();
    let p = validate_header(&header, false)?;
    let labeled = header.len() == p + 1;
    let mut patterns = Vec::new();
    for record in csv.records() {
        let record = record.map_err(csv_error)?;
        let line = record.position().map_or(0, |pos| pos.line());
        let expected = if labeled { p + 1 } else { p };
        if record.len() != expected {
            return Err(Error::Csv {
                line,
                msg: format!("expected {} fields, found {}", expected, record.len()),
            });
        }
        patterns.push(parse_features(&record, p, line)?);
    }
    if patterns.is_empty() {
        return Err(Error::Csv { line: 1, msg: "no data rows".into() });
    }
    Ok(patterns)
}

/// Checks `f0..f{p-1}` naming and returns p. With `require_label` the
/// final column must be `label`; otherwise a trailing `label` is allowed
/// but not required.
fn validate_header(header: &csv::StringRecord, require_label: bool) -> Result<usize> {
    let cols: Vec<&str> = header.iter().collect();
    if cols.is_empty() || cols.iter().all(|c| c.is_empty()) {
        return Err(Error::Csv { line: 1, msg: "empty header".into() });
    }
    let has_label = cols.last() == Some(&"label");
    if require_label && !has_label {
        return Err(Error::Csv {
            line: 1,
            msg: format!("last column must be 'label', found '{}'", cols.last().unwrap()),
        });
    }
    let p = if has_label { cols.len() - 1 } else { cols.len() };
    if p == 0 {
        return Err(Error::Csv { line: 1, msg: "no feature columns before 'label'".into() });
    }
    for (j, col) in cols[..p].iter().enumerate() {
        let expected = format!("f{j}");
        if *col != expected {
            return Err(Error::Csv {
                line: 1,
                msg: format!("expected column '{expected}', found '{col}'"),
            });
        }
    }
    Ok(p)
}

fn parse_features(record: &csv::StringRecord, p: usize, line: u64) -> Result<Vec<f64>> {
    let mut features = Vec::with_capacity(p);
    for j in 0..p {
        let field = &record[j];
        let value: f64 = field.parse().map_err(|_| Error::Csv {
            line,
            msg: format!("invalid number '{field}' in column f{j}"),
        })?;
        if !value.is_finite() {
            return Err(Error::Csv {
                line,
                msg: format!("non-finite value '{field}' in column f{j}"),
            });
        }
        features.push(value);
    }
    Ok(features)
}

fn csv_error(e: csv::Error) -> Error {
    let line = match e.position() {
        Some(pos) => pos.line(),
        None => 0,
    };
    Error::Csv { line, msg: e.to_string() }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(features: &[f64], label: &str) -> DataRow {
        DataRow { features: features.to_vec(), label: label.to_string() }
    }

    #[test]
    fn new_validates_shape() {
        assert!(matches!(Dataset::new(vec![]), Err(Error::EmptyInput(_))));
        let ragged = Dataset::new(vec![row(&[1.0, 2.0], "a"), row(&[1.0], "b")]);
        assert!(matches!(ragged, Err(Error::RaggedRow { row: 1, expected: 2, got: 1 })));
        let nan = Dataset::new(vec![row(&[f64::NAN], "a")]);
        assert!(matches!(nan, Err(Error::NonFinite(_))));
        let unlabeled = Dataset::new(vec![row(&[1.0], "")]);
        assert!(matches!(unlabeled, Err(Error::EmptyInput(_))));
    }

    #[test]
    fn class_order_is_first_appearance() {
        let d = Dataset::new(vec![
            row(&[0.0], "b"),
            row(&[1.0], "a"),
            row(&[2.0], "b"),
            row(&[3.0], "c"),
        ])
        .unwrap();
        assert_eq!(d.class_labels(), vec!["b", "a", "c"]);
        let groups = d.by_class();
        assert_eq!(groups[0].0, "b");
        assert_eq!(groups[0].1, vec![&[0.0][..], &[2.0][..]]);
        assert_eq!(groups[1].0, "a");
        assert_eq!(groups[2].0, "c");
    }

    #[test]
    fn column_pools_in_row_order() {
        let d = Dataset::new(vec![row(&[1.0, 10.0], "a"), row(&[2.0, 20.0], "b")]).unwrap();
        assert_eq!(d.column(0).unwrap(), vec![1.0, 2.0]);
        assert_eq!(d.column(1).unwrap(), vec![10.0, 20.0]);
        assert!(d.column(2).is_err());
    }

    #[test]
    fn csv_round_trip() {
        let text = "f0,f1,label\n1.5,-2.0,first\n0.25,3.0,second\n";
        let d = Dataset::from_csv_reader(text.as_bytes()).unwrap();
        assert_eq!(d.p(), 2);
        assert_eq!(d.len(), 2);
        assert_eq!(d.rows()[0], row(&[1.5, -2.0], "first"));
        assert_eq!(d.rows()[1], row(&[0.25, 3.0], "second"));
    }

    #[test]
    fn csv_rejects_bad_header() {
        let wrong_order = "f1,f0,label\n1,2,a\n";
        assert!(matches!(
            Dataset::from_csv_reader(wrong_order.as_bytes()),
            Err(Error::Csv { line: 1, .. })
        ));
        let no_label = "f0,f1\n1,2\n";
        assert!(matches!(
            Dataset::from_csv_reader(no_label.as_bytes()),
            Err(Error::Csv { line: 1, .. })
        ));
    }

    #[test]
    fn csv_rejects_empty_input() {
        assert!(matches!(Dataset::from_csv_reader("".as_bytes()), Err(Error::Csv { .. })));
        let header_only = "f0,label\n";
        assert!(matches!(
            Dataset::from_csv_reader(header_only.as_bytes()),
            Err(Error::Csv { line: 1, .. })
        ));
    }

    #[test]
    fn csv_reports_line_numbers() {
        let text = "f0,label\n1.0,a\nnot_a_number,b\n";
        match Dataset::from_csv_reader(text.as_bytes()) {
            Err(Error::Csv { line, msg }) => {
                assert_eq!(line, 3);
                assert!(msg.contains("not_a_number"));
            }
            other => panic!("expected csv error, got {other:?}"),
        }
    }

    #[test]
    fn csv_rejects_non_finite() {
        let text = "f0,label\nNaN,a\n";
        assert!(matches!(
            Dataset::from_csv_reader(text.as_bytes()),
            Err(Error::Csv { line: 2, .. })
        ));
        let inf = "f0,label\ninf,a\n";
        assert!(matches!(
            Dataset::from_csv_reader(inf.as_bytes()),
            Err(Error::Csv { line: 2, .. })
        ));
    }

    #[test]
    fn csv_rejects_short_row() {
        let text = "f0,f1,label\n1.0,a\n";
        match Dataset::from_csv_reader(text.as_bytes()) {
            Err(Error::Csv { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected csv error, got {other:?}"),
        }
    }

    #[test]
    fn patterns_accept_optional_label_column() {
        let labeled = "f0,f1,label\n1.0,2.0,x\n3.0,4.0,y\n";
        let got = read_patterns_csv(labeled.as_bytes()).unwrap();
        assert_eq!(got, vec![vec![1.0, 2.0], vec![3.0, 4.0]]);

        let bare = "f0,f1\n1.0,2.0\n3.0,4.0\n";
        let got = read_patterns_csv(bare.as_bytes()).unwrap();
        assert_eq!(got, vec![vec![1.0, 2.0], vec![3.0, 4.0]]);
    }

    #[test]
    fn patterns_reject_width_mismatch() {
        let text = "f0,f1\n1.0\n";
        assert!(matches!(read_patterns_csv(text.as_bytes()), Err(Error::Csv { line: 2, .. })));
    }
}
