//! Plain tables written as TSV or CSV.

use std::cmp::Ordering;
use std::io::Write;
use std::str::FromStr;

use crate::error::CliError;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Tsv,
    Csv,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "tsv" => Ok(Format::Tsv),
            "csv" => Ok(Format::Csv),
            other => Err(CliError::Usage(format!("unknown format {other:?}"))),
        }
    }
}

/// A header and rows of cells. Commands fill it; [`ReportTable::write`]
/// prints it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportTable {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
    /// Leading columns that form the primary key, or 0 to keep insertion
    /// order.
    pub key_columns: usize,
}

/// Integers compare numerically and sort before text.
fn cell_order(a: &str, b: &str) -> Ordering {
    match (a.parse::<i64>(), b.parse::<i64>()) {
        (Ok(x), Ok(y)) => x.cmp(&y),
        (Ok(_), Err(_)) => Ordering::Less,
        (Err(_), Ok(_)) => Ordering::Greater,
        (Err(_), Err(_)) => a.cmp(b),
    }
}

impl ReportTable {
    pub fn new<S: Into<String>>(header: impl IntoIterator<Item = S>, key_columns: usize) -> Self {
        Self {
            header: header.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
            key_columns,
        }
    }

    pub fn push<S: ToString>(&mut self, row: impl IntoIterator<Item = S>) {
        let row: Vec<String> = row.into_iter().map(|c| c.to_string()).collect();
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    /// Sorts rows by the key columns. Stable, so equal keys keep their order.
    pub fn sort(&mut self) {
        let k = self.key_columns;
        if k == 0 {
            return;
        }
        self.rows.sort_by(|a, b| {
            a[..k]
                .iter()
                .zip(&b[..k])
                .map(|(x, y)| cell_order(x, y))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        });
    }

    pub fn column(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    /// The cell under `name` in the first row whose first cell is `key`.
    pub fn lookup(&self, key: &str, name: &str) -> Option<&str> {
        let col = self.column(name)?;
        self.rows
            .iter()
            .find(|r| r[0] == key)
            .map(|r| r[col].as_str())
    }

    pub fn write<W: Write>(&self, out: W, format: Format) -> Result<(), CliError> {
        let mut builder = csv::WriterBuilder::new();
        if format == Format::Tsv {
            builder.delimiter(b'\t').quote_style(csv::QuoteStyle::Never);
        }
        let mut writer = builder.from_writer(out);
        writer.write_record(&self.header)?;
        for row in &self.rows {
            writer.write_record(row)?;
        }
        writer.flush()?;
        Ok(())
    }

    pub fn render(&self, format: Format) -> String {
        let mut buf = Vec::new();
        self.write(&mut buf, format).expect("writing to memory");
        String::from_utf8(buf).expect("cells are utf-8")
    }
}
