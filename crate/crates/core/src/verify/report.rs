//! Machine-readable output: JSON with floats rounded to 15 significant
//! digits, and CSV rows.

use super::SweepRow;
use serde::Serialize;
use serde_json::{Map, Number, Value};
use std::io::Write;

/// Rounds to 15 significant decimal digits.
pub fn round_sig15(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x;
    }
    format!("{x:.14e}").parse().unwrap_or(x)
}

fn round_value(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => n
            .as_f64()
            .and_then(|x| Number::from_f64(round_sig15(x)))
            .map_or(Value::Null, Value::Number),
        Value::Array(items) => Value::Array(items.into_iter().map(round_value).collect()),
        Value::Object(map) => Value::Object(
            map.into_iter()
                .map(|(k, v)| (k, round_value(v)))
                .collect::<Map<_, _>>(),
        ),
        other => other,
    }
}

/// Serializes `value` as pretty JSON with every float rounded to 15
/// significant digits. Non-finite floats become `null`.
pub fn to_json<T: Serialize>(value: &T) -> serde_json::Result<String> {
    let v = round_value(serde_json::to_value(value)?);
    serde_json::to_string_pretty(&v)
}

pub const CSV_HEADER: [&str; 9] = [
    "graph6", "alpha", "tr_max", "mu_alpha", "gap", "bound", "slack", "class", "verdict",
];

/// CSV writer for [`SweepRow`]s; floats are written at full precision.
pub struct CsvRows<W: Write> {
    inner: csv::Writer<W>,
}

impl<W: Write> CsvRows<W> {
    pub fn new(out: W) -> csv::Result<Self> {
        let mut inner = csv::WriterBuilder::new()
            .has_headers(false)
            .from_writer(out);
        inner.write_record(CSV_HEADER)?;
        Ok(CsvRows { inner })
    }

    pub fn write(&mut self, row: &SweepRow) -> csv::Result<()> {
        self.inner.serialize(row)
    }

    pub fn finish(mut self) -> std::io::Result<()> {
        self.inner.flush()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounding() {
        assert_eq!(round_sig15(0.1 + 0.2), 0.3);
        assert_eq!(round_sig15(1.0 / 3.0).to_string(), "0.333333333333333");
        assert_eq!(round_sig15(0.0), 0.0);
        assert_eq!(round_sig15(12.0), 12.0);
    }

    #[test]
    fn json_rounds_nested_floats_only() {
        #[derive(Serialize)]
        struct S {
            count: u64,
            xs: Vec<f64>,
            y: Option<f64>,
        }
        let s = S {
            count: 7,
            xs: vec![1.0 / 3.0, 2.0],
            y: Some(f64::NAN),
        };
        let json = to_json(&s).unwrap();
        let v: Value = serde_json::from_str(&json).unwrap();
        assert_eq!(v["count"], 7);
        assert_eq!(
            v["xs"][0].as_f64().unwrap().to_string(),
            "0.333333333333333"
        );
        assert!(v["y"].is_null());
    }

    #[test]
    fn csv_rows() {
        let mut buf = Vec::new();
        let mut w = CsvRows::new(&mut buf).unwrap();
        w.write(&SweepRow {
            graph6: "Cs".into(),
            alpha: 0.0,
            tr_max: 5,
            mu_alpha: 4.5,
            gap: 0.5,
            bound: 0.25,
            slack: 0.25,
            class: "ExtremalEvenDVDR{3,4}".into(),
            verdict: "EqualityStructural".into(),
        })
        .unwrap();
        w.finish().unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(
            lines.next(),
            Some("graph6,alpha,tr_max,mu_alpha,gap,bound,slack,class,verdict")
        );
        assert_eq!(
            lines.next(),
            Some("Cs,0.0,5,4.5,0.5,0.25,0.25,\"ExtremalEvenDVDR{3,4}\",EqualityStructural")
        );
    }
}
