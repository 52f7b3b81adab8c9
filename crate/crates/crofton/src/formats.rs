//! Output encodings: canonical text, LaTeX, JSON, CSV and 15-digit floats.

use std::fmt::Write;
use std::str::FromStr;

use clap::ValueEnum;
use crofton_core::{format_latex, BigRational, PiNumber};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    /// Canonical exact text, e.g. `2/pi + 2/3*pi`
    Exact,
    Latex,
    Json,
    Csv,
    /// Decimal with 15 significant digits
    Float,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct TermJson {
    pi_exp_times_2: i32,
    num: String,
    den: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
struct PiJson {
    terms: Vec<TermJson>,
}

/// `{"terms":[{"pi_exp_times_2": .., "num": "..", "den": ".."}]}`, sorted by
/// exponent.
pub fn pi_to_json(x: &PiNumber) -> Value {
    let terms = x
        .terms()
        .map(|(e, c)| TermJson { pi_exp_times_2: e, num: c.numer().to_string(), den: c.denom().to_string() })
        .collect();
    serde_json::to_value(PiJson { terms }).expect("plain data serializes")
}

pub fn pi_from_json(v: &Value) -> Result<PiNumber, String> {
    let parsed: PiJson = serde_json::from_value(v.clone()).map_err(|e| e.to_string())?;
    let mut terms = Vec::with_capacity(parsed.terms.len());
    for t in parsed.terms {
        let num = BigInt::from_str(&t.num).map_err(|e| format!("numerator {:?}: {e}", t.num))?;
        let den = BigInt::from_str(&t.den).map_err(|e| format!("denominator {:?}: {e}", t.den))?;
        if den == BigInt::from(0) {
            return Err("zero denominator".into());
        }
        terms.push((t.pi_exp_times_2, BigRational::new(num, den)));
    }
    Ok(PiNumber::from_terms(terms))
}

/// Fifteen significant digits, trailing zeros removed; scientific notation
/// outside `[1e-5, 1e15)`.
pub fn format_float(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let exp = x.abs().log10().floor() as i32;
    if !(-5..15).contains(&exp) {
        let s = format!("{x:.14e}");
        let (mant, e) = s.split_once('e').expect("scientific format has an exponent");
        return format!("{}e{e}", trim_zeros(mant));
    }
    let decimals = (14 - exp).max(0) as usize;
    trim_zeros(&format!("{x:.decimals$}")).to_string()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

pub fn float_text(x: &PiNumber) -> crofton_core::Result<String> {
    Ok(format_float(x.eval_f64()?))
}

/// One labelled row of exact values, e.g. `n=6 k=4` or `d=3` with a vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Entry {
    pub keys: Vec<i64>,
    pub values: Vec<PiNumber>,
}

/// A titled list of entries sharing key names; the common shape of every
/// command's output.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Listing {
    pub title: Option<String>,
    pub key_names: Vec<&'static str>,
    pub entries: Vec<Entry>,
}

impl Listing {
    /// A single unlabelled vector (or scalar).
    pub fn values(values: Vec<PiNumber>) -> Self {
        Self { title: None, key_names: Vec::new(), entries: vec![Entry { keys: Vec::new(), values }] }
    }

    fn label(&self, e: &Entry) -> String {
        self.key_names.iter().zip(&e.keys).map(|(n, k)| format!("{n}={k}")).collect::<Vec<_>>().join(" ")
    }

    fn lines(&self, cell: impl Fn(&PiNumber) -> crofton_core::Result<String>) -> crofton_core::Result<String> {
        let mut out = String::new();
        if let Some(t) = &self.title {
            writeln!(out, "# {t}").unwrap();
        }
        for e in &self.entries {
            let vals = e.values.iter().map(&cell).collect::<crofton_core::Result<Vec<_>>>()?.join(", ");
            if e.keys.is_empty() {
                writeln!(out, "{vals}").unwrap();
            } else {
                writeln!(out, "{}: {vals}", self.label(e)).unwrap();
            }
        }
        Ok(out)
    }

    fn json(&self) -> crofton_core::Result<String> {
        let mut entries = Vec::new();
        for e in &self.entries {
            let mut obj = serde_json::Map::new();
            for (n, k) in self.key_names.iter().zip(&e.keys) {
                obj.insert((*n).to_string(), json!(k));
            }
            obj.insert("values".into(), Value::Array(e.values.iter().map(pi_to_json).collect()));
            let floats = e.values.iter().map(|v| v.eval_f64()).collect::<crofton_core::Result<Vec<_>>>()?;
            obj.insert("floats".into(), json!(floats));
            entries.push(Value::Object(obj));
        }
        let doc = json!({ "title": self.title, "entries": entries });
        Ok(serde_json::to_string_pretty(&doc).expect("values serialize") + "\n")
    }

    fn csv(&self) -> crofton_core::Result<String> {
        let multi = self.entries.iter().any(|e| e.values.len() > 1);
        let mut header: Vec<&str> = self.key_names.clone();
        if multi {
            header.push("k");
        }
        header.extend(["exact", "float"]);
        let mut out = header.join(",") + "\n";
        for e in &self.entries {
            for (i, v) in e.values.iter().enumerate() {
                let mut row: Vec<String> = e.keys.iter().map(|k| k.to_string()).collect();
                if multi {
                    row.push(i.to_string());
                }
                row.push(v.to_string());
                row.push(float_text(v)?);
                out += &(row.join(",") + "\n");
            }
        }
        Ok(out)
    }

    /// Two keys become a grid (rows by the first, columns by the second);
    /// otherwise one row per entry.
    fn latex(&self) -> String {
        let mut out = String::new();
        if let Some(t) = &self.title {
            writeln!(out, "% {t}").unwrap();
        }
        let cell = |v: &PiNumber| format!("${}$", format_latex(v));
        match self.key_names.as_slice() {
            [] => {
                for e in &self.entries {
                    writeln!(out, "{}", e.values.iter().map(cell).collect::<Vec<_>>().join(", ")).unwrap();
                }
            }
            [row, col] => {
                let mut cols: Vec<i64> = self.entries.iter().map(|e| e.keys[1]).collect();
                cols.sort_unstable();
                cols.dedup();
                let mut rows: Vec<i64> = self.entries.iter().map(|e| e.keys[0]).collect();
                rows.dedup();
                writeln!(out, "\\begin{{tabular}}{{||c||{}||}}", vec!["c"; cols.len()].join("|")).unwrap();
                let head: Vec<String> = cols.iter().map(|c| format!("${col}={c}$")).collect();
                writeln!(out, " & {} \\\\", head.join(" & ")).unwrap();
                writeln!(out, "\\hline").unwrap();
                for r in rows {
                    let cells: Vec<String> = cols
                        .iter()
                        .map(|c| {
                            self.entries
                                .iter()
                                .find(|e| e.keys[0] == r && e.keys[1] == *c)
                                .map(|e| e.values.iter().map(cell).collect::<Vec<_>>().join(", "))
                                .unwrap_or_default()
                        })
                        .collect();
                    writeln!(out, "${row}={r}$ & {} \\\\", cells.join(" & ")).unwrap();
                }
                writeln!(out, "\\end{{tabular}}").unwrap();
            }
            [key, ..] => {
                writeln!(out, "\\begin{{tabular}}{{||c||l||}}").unwrap();
                for e in &self.entries {
                    let vals = e.values.iter().map(cell).collect::<Vec<_>>().join(", ");
                    writeln!(out, "${key}={}$ & {vals} \\\\", e.keys[0]).unwrap();
                }
                writeln!(out, "\\end{{tabular}}").unwrap();
            }
        }
        out
    }

    pub fn render(&self, format: OutputFormat) -> crofton_core::Result<String> {
        match format {
            OutputFormat::Exact => self.lines(|v| Ok(v.to_string())),
            OutputFormat::Float => self.lines(float_text),
            OutputFormat::Json => self.json(),
            OutputFormat::Csv => self.csv(),
            OutputFormat::Latex => Ok(self.latex()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crofton_core::parse_pi;

    fn p(s: &str) -> PiNumber {
        parse_pi(s).unwrap()
    }

    #[test]
    fn json_round_trip() {
        for s in ["0", "2/pi + 2/3*pi", "-1/16*pi + 1/24*pi^3", "pi^(1/2)", "18261468225"] {
            let x = p(s);
            let v = pi_to_json(&x);
            assert_eq!(pi_from_json(&v).unwrap(), x, "{s}");
        }
        let v = pi_to_json(&p("24/pi^2 - 2"));
        assert_eq!(
            v,
            json!({"terms": [
                {"pi_exp_times_2": -4, "num": "24", "den": "1"},
                {"pi_exp_times_2": 0, "num": "-2", "den": "1"}
            ]})
        );
        assert!(pi_from_json(&json!({"terms": [{"pi_exp_times_2": 0, "num": "1", "den": "0"}]})).is_err());
        assert!(pi_from_json(&json!({"terms": 3})).is_err());
    }

    #[test]
    fn floats() {
        assert_eq!(format_float(103.90897734821046), "103.90897734821");
        assert_eq!(format_float(2.0), "2");
        assert_eq!(format_float(0.5), "0.5");
        assert_eq!(format_float(-0.4317195800896), "-0.4317195800896");
        assert_eq!(format_float(18261468225.0), "18261468225");
        assert_eq!(format_float(1.5e20), "1.5e20");
        assert_eq!(format_float(2.5e-7), "2.5e-7");
        assert_eq!(format_float(0.0), "0");
    }

    #[test]
    fn listing_renderings() {
        let l = Listing::values(vec![p("1/2*pi^2"), p("1/2*pi^2")]);
        assert_eq!(l.render(OutputFormat::Exact).unwrap(), "1/2*pi^2, 1/2*pi^2\n");
        assert_eq!(l.render(OutputFormat::Float).unwrap(), "4.93480220054468, 4.93480220054468\n");
        assert_eq!(
            l.render(OutputFormat::Csv).unwrap(),
            "k,exact,float\n0,1/2*pi^2,4.93480220054468\n1,1/2*pi^2,4.93480220054468\n"
        );
        let grid = Listing {
            title: Some("A".into()),
            key_names: vec!["n", "k"],
            entries: vec![
                Entry { keys: vec![1, 0], values: vec![p("1")] },
                Entry { keys: vec![1, 1], values: vec![p("2/pi")] },
            ],
        };
        assert_eq!(grid.render(OutputFormat::Exact).unwrap(), "# A\nn=1 k=0: 1\nn=1 k=1: 2/pi\n");
        let tex = grid.render(OutputFormat::Latex).unwrap();
        assert!(tex.contains("$n=1$ & $1$ & $\\frac{2}{\\pi}$ \\\\"), "{tex}");
        let js: Value = serde_json::from_str(&grid.render(OutputFormat::Json).unwrap()).unwrap();
        assert_eq!(js["entries"][1]["k"], 1);
        assert_eq!(pi_from_json(&js["entries"][1]["values"][0]).unwrap(), p("2/pi"));
    }
}
