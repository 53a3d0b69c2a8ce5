//! CSV and JSON emitters for class and descendant tables.

use std::io::Write;

use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::enumerate::{ClassRecord, Witness};
use crate::forms::slots;
use crate::minimize::Descendant;
use crate::Q;

/// Parses `p/q` or `p`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: num_bigint::BigInt = n.trim().parse().ok()?;
    let d: num_bigint::BigInt = d.trim().parse().ok()?;
    if d == 0.into() {
        return None;
    }
    Some(Q::new(n, d))
}

/// Always `p/q`, even for integers.
pub fn fmt_q(q: &Q) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}` (expected csv or json)")),
        }
    }
}

fn slot_name(b: i64, r: i64) -> String {
    format!("n{b}_{r}")
}

struct Ordered(Vec<(String, Node)>);

enum Node {
    Leaf(serde_json::Value),
    Group(Ordered),
}

impl Serialize for Node {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Node::Leaf(v) => v.serialize(s),
            Node::Group(g) => g.serialize(s),
        }
    }
}

impl Serialize for Ordered {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in &self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

/// One class as ordered `(group, column, value)` cells; the CSV flattens the
/// groups and the JSON nests them.
fn class_cells(index: usize, c: &ClassRecord) -> Vec<(&'static str, String, serde_json::Value)> {
    use serde_json::json;
    let w: Witness = c.witnesses[0];
    let mut v = vec![
        ("", "row".to_string(), json!(index + 1)),
        ("", "table_row".to_string(), json!(c.table_row)),
        ("", "case".to_string(), json!(c.case().tag())),
        ("", "chi".to_string(), json!(c.chi())),
    ];
    for m in 3..=13 {
        v.push(("P", format!("P{m}"), json!(c.profile.p[m])));
    }
    v.push(("witness", "eta".into(), json!(w.eta)));
    v.push(("witness", "zeta".into(), json!(w.zeta)));
    v.push(("witness", "alpha".into(), json!(w.alpha)));
    v.push(("witness", "beta".into(), json!(w.beta)));
    v.push(("", "witnesses".into(), json!(c.witnesses.len())));
    for (p, n) in slots(c.case()).iter().zip(c.b12.counts) {
        v.push(("b12", slot_name(p.b, p.r), json!(n)));
    }
    v.push(("", "k3".into(), json!(fmt_q(&c.k3))));
    v
}

fn cell_text(v: &serde_json::Value) -> String {
    match v {
        serde_json::Value::String(s) => s.clone(),
        serde_json::Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn nest(cells: Vec<(&'static str, String, serde_json::Value)>) -> Ordered {
    let mut out: Vec<(String, Node)> = Vec::new();
    for (g, k, v) in cells {
        if g.is_empty() {
            out.push((k, Node::Leaf(v)));
            continue;
        }
        match out.iter_mut().find(|(name, _)| name == g) {
            Some((_, Node::Group(items))) => items.0.push((k, Node::Leaf(v))),
            _ => out.push((g.to_string(), Node::Group(Ordered(vec![(k, Node::Leaf(v))])))),
        }
    }
    Ordered(out)
}

fn write_rows<W: Write>(
    out: &mut W,
    format: Format,
    rows: Vec<Vec<(&'static str, String, serde_json::Value)>>,
) -> std::io::Result<()> {
    match format {
        Format::Csv => {
            let mut wr = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(out);
            if let Some(first) = rows.first() {
                wr.write_record(first.iter().map(|(_, k, _)| k.as_str()))?;
            }
            for r in &rows {
                wr.write_record(r.iter().map(|(_, _, v)| cell_text(v)))?;
            }
            wr.flush()?;
        }
        Format::Json => {
            let items: Vec<Ordered> = rows.into_iter().map(nest).collect();
            serde_json::to_writer_pretty(&mut *out, &items)?;
            out.write_all(b"\n")?;
        }
    }
    Ok(())
}

pub fn write_classes<W: Write>(out: &mut W, format: Format, classes: &[ClassRecord]) -> std::io::Result<()> {
    write_rows(out, format, classes.iter().enumerate().map(|(i, c)| class_cells(i, c)).collect())
}

pub fn write_descendants<W: Write>(
    out: &mut W,
    format: Format,
    classes: &[ClassRecord],
    descendants: &[Vec<Descendant>],
) -> std::io::Result<()> {
    use serde_json::json;
    let mut rows = Vec::new();
    for (i, (c, ds)) in classes.iter().zip(descendants).enumerate() {
        for (j, d) in ds.iter().enumerate() {
            rows.push(vec![
                ("", "row".to_string(), json!(i + 1)),
                ("", "table_row".to_string(), json!(c.table_row)),
                ("", "case".to_string(), json!(c.case().tag())),
                ("", "chi".to_string(), json!(c.chi())),
                ("", "class_k3".to_string(), json!(fmt_q(&c.k3))),
                ("", "descendant".to_string(), json!(j + 1)),
                ("", "trace".to_string(), json!(d.trace)),
                ("", "basket".to_string(), json!(d.basket.to_string())),
                ("", "k3".to_string(), json!(fmt_q(&d.k3))),
            ]);
        }
    }
    write_rows(out, format, rows)
}
