//! CSV tables with a header row. Numbers are written with 17 significant
//! digits, so every `f64` reads back bit for bit.

use std::io::{Read, Write};

use complex_moments::Complex64;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table { header: header.iter().map(|s| s.to_string()).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.header.iter().position(|h| h == name)
    }

    /// A column parsed as numbers; `None` if absent or not numeric.
    pub fn column_f64(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.column_index(name)?;
        self.rows.iter().map(|r| r.get(i)?.parse().ok()).collect()
    }

    /// Pairs of `re`/`im` style columns as complex numbers.
    pub fn column_complex(&self, re: &str, im: &str) -> Option<Vec<Complex64>> {
        let re = self.column_f64(re)?;
        let im = self.column_f64(im)?;
        Some(re.into_iter().zip(im).map(|(a, b)| Complex64::new(a, b)).collect())
    }

    pub fn write<W: Write>(&self, out: W) -> csv::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(&self.header)?;
        for r in &self.rows {
            w.write_record(r)?;
        }
        w.flush()?;
        Ok(())
    }

    pub fn read<R: Read>(input: R) -> csv::Result<Self> {
        let mut r = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(input);
        let header = r.headers()?.iter().map(str::to_string).collect();
        let rows = r
            .records()
            .map(|rec| rec.map(|rec| rec.iter().map(str::to_string).collect()))
            .collect::<csv::Result<_>>()?;
        Ok(Table { header, rows })
    }
}

pub fn number(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn optional(x: Option<f64>) -> String {
    x.map(number).unwrap_or_default()
}
