//! Tabular output as CSV or JSON (array of objects, keys in column order).

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use serde::ser::{SerializeMap, SerializeSeq};
use serde::{Serialize, Serializer};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Int(BigUint),
    Str(String),
    Float(f64),
    Bool(bool),
    List(Vec<usize>),
    Null,
}

impl From<usize> for Cell {
    fn from(x: usize) -> Self {
        Cell::Int(BigUint::from(x))
    }
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        Cell::Int(BigUint::from(x))
    }
}

impl From<u32> for Cell {
    fn from(x: u32) -> Self {
        Cell::Int(BigUint::from(x))
    }
}

impl From<BigUint> for Cell {
    fn from(x: BigUint) -> Self {
        Cell::Int(x)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Str(x.to_string())
    }
}

impl From<String> for Cell {
    fn from(x: String) -> Self {
        Cell::Str(x)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Bool(x)
    }
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Float(x)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(x: Option<T>) -> Self {
        x.map_or(Cell::Null, Into::into)
    }
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(x) => x.to_string(),
            Cell::Str(s) if s.contains([',', '"', '\n']) => format!("\"{}\"", s.replace('"', "\"\"")),
            Cell::Str(s) => s.clone(),
            Cell::Float(x) => format!("{x}"),
            Cell::Bool(b) => b.to_string(),
            Cell::List(v) => v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "),
            Cell::Null => String::new(),
        }
    }
}

impl Serialize for Cell {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            // integers beyond u64 become strings so every JSON reader keeps them exact
            Cell::Int(x) => match x.to_u64() {
                Some(v) => s.serialize_u64(v),
                None => s.serialize_str(&x.to_string()),
            },
            Cell::Str(x) => s.serialize_str(x),
            Cell::Float(x) => s.serialize_f64(*x),
            Cell::Bool(b) => s.serialize_bool(*b),
            Cell::List(v) => {
                let mut seq = s.serialize_seq(Some(v.len()))?;
                for x in v {
                    seq.serialize_element(x)?;
                }
                seq.end()
            }
            Cell::Null => s.serialize_none(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<&'static str>,
    pub rows: Vec<Vec<Cell>>,
}

struct Row<'a>(&'a [&'static str], &'a [Cell]);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0.iter().zip(self.1) {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

impl Table {
    pub fn new(columns: Vec<&'static str>) -> Self {
        Table { columns, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    /// Rendered text with a trailing newline.
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => {
                let mut out = self.columns.join(",");
                out.push('\n');
                for r in &self.rows {
                    out.push_str(&r.iter().map(Cell::csv).collect::<Vec<_>>().join(","));
                    out.push('\n');
                }
                out
            }
            Format::Json => {
                let rows: Vec<Row> = self.rows.iter().map(|r| Row(&self.columns, r)).collect();
                let mut s = serde_json::to_string_pretty(&rows).expect("serializable");
                s.push('\n');
                s
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renders_both_formats() {
        let mut t = Table::new(vec!["a", "b", "c"]);
        t.push(vec![3usize.into(), "x,y".into(), Cell::Null]);
        t.push(vec![BigUint::from(2u32).pow(70).into(), true.into(), Cell::List(vec![1, 2])]);
        assert_eq!(t.render(Format::Csv), "a,b,c\n3,\"x,y\",\n1180591620717411303424,true,1 2\n");
        let j = t.render(Format::Json);
        let v: serde_json::Value = serde_json::from_str(&j).unwrap();
        assert_eq!(v[0]["a"], 3);
        assert_eq!(v[1]["a"], "1180591620717411303424");
        assert!(j.find("\"a\"").unwrap() < j.find("\"b\"").unwrap());
    }
}
