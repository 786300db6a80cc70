//! Human, CSV and JSON-lines rendering of command results.

use std::io::{self, Write};

use clap::ValueEnum;
use serde_json::{Map, Value};

use crate::arith::{to_num_den, ExactRational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Csv,
    Json,
}

/// A table cell. Rationals print as `num/den` in machine formats.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(i128),
    Rat(ExactRational),
    Float(f64),
    Text(String),
    Empty,
}

impl Cell {
    pub fn int(v: impl Into<i128>) -> Self {
        Cell::Int(v.into())
    }

    pub fn text(s: impl Into<String>) -> Self {
        Cell::Text(s.into())
    }

    fn human(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Rat(q) => q.to_string(),
            Cell::Float(x) => x.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Empty => "-".into(),
        }
    }

    fn machine(&self) -> String {
        match self {
            Cell::Rat(q) => to_num_den(q),
            Cell::Empty => String::new(),
            other => other.human(),
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Int(v) => match i64::try_from(*v) {
                Ok(v) => Value::from(v),
                Err(_) => Value::String(v.to_string()),
            },
            Cell::Float(x) => serde_json::Number::from_f64(*x)
                .map(Value::Number)
                .unwrap_or_else(|| Value::String(x.to_string())),
            Cell::Empty => Value::Null,
            other => Value::String(other.machine()),
        }
    }
}

/// Output of one command: a grid, optionally with bespoke human or JSON forms.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
    /// Human form is the bare rows, space separated, without a header.
    pub bare: bool,
    pub human: Option<String>,
    pub json: Option<Vec<Value>>,
}

impl Report {
    pub fn new(headers: &[&str]) -> Self {
        Report {
            headers: headers.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Human => self.write_human(out),
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    fn write_human(&self, out: &mut dyn Write) -> io::Result<()> {
        if let Some(h) = &self.human {
            return out.write_all(h.as_bytes());
        }
        let cells: Vec<Vec<String>> =
            self.rows.iter().map(|r| r.iter().map(Cell::human).collect()).collect();
        if self.bare {
            for r in &cells {
                writeln!(out, "{}", r.join(" "))?;
            }
            return Ok(());
        }
        let mut widths: Vec<usize> = self.headers.iter().map(|h| h.chars().count()).collect();
        for r in &cells {
            for (w, c) in widths.iter_mut().zip(r) {
                *w = (*w).max(c.chars().count());
            }
        }
        let line = |fields: &[String]| {
            let padded: Vec<String> = fields
                .iter()
                .zip(&widths)
                .map(|(f, &w)| format!("{}{f}", " ".repeat(w - f.chars().count())))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        writeln!(out, "{}", line(&self.headers))?;
        for r in &cells {
            writeln!(out, "{}", line(r))?;
        }
        Ok(())
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
        w.write_record(&self.headers)?;
        for r in &self.rows {
            w.write_record(r.iter().map(Cell::machine))?;
        }
        w.flush()
    }

    fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        let lines: Vec<Value> = match &self.json {
            Some(v) => v.clone(),
            None => self
                .rows
                .iter()
                .map(|r| {
                    let obj: Map<String, Value> =
                        self.headers.iter().cloned().zip(r.iter().map(Cell::json)).collect();
                    Value::Object(obj)
                })
                .collect(),
        };
        for v in lines {
            writeln!(out, "{}", serde_json::to_string(&v).map_err(io::Error::other)?)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    fn sample() -> Report {
        let mut r = Report::new(&["n", "side", "note"]);
        r.push(vec![Cell::int(5), Cell::Rat(rat(3, 2)), Cell::text("a,b")]);
        r.push(vec![Cell::int(6), Cell::Rat(rat(3, 1)), Cell::Empty]);
        r
    }

    fn render(r: &Report, f: Format) -> String {
        let mut buf = Vec::new();
        r.write(f, &mut buf).unwrap();
        String::from_utf8(buf).unwrap()
    }

    #[test]
    fn formats() {
        let r = sample();
        assert_eq!(render(&r, Format::Csv), "n,side,note\n5,3/2,\"a,b\"\n6,3/1,\n");
        assert_eq!(
            render(&r, Format::Json),
            "{\"n\":5,\"note\":\"a,b\",\"side\":\"3/2\"}\n{\"n\":6,\"note\":null,\"side\":\"3/1\"}\n"
        );
        assert_eq!(render(&r, Format::Human), "n  side  note\n5   3/2   a,b\n6     3     -\n");
        let mut bare = sample();
        bare.bare = true;
        assert_eq!(render(&bare, Format::Human), "5 3/2 a,b\n6 3 -\n");
    }
}
