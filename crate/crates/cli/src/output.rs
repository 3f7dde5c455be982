//! Report serialization: text, JSON, and CSV with fixed columns.

use loglog_core::identity_catalog::IdentityReport;
use serde::{Deserialize, Serialize};

/// Serializable mirror of a report row.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Row {
    pub id: String,
    pub params: Vec<(String, f64)>,
    pub lhs: f64,
    pub rhs: f64,
    pub abs_dev: f64,
    pub rel_dev: f64,
    pub pass: bool,
    pub note: String,
}

impl From<&IdentityReport> for Row {
    fn from(r: &IdentityReport) -> Row {
        Row {
            id: r.id.clone(),
            params: r.params.clone(),
            lhs: r.lhs_value,
            rhs: r.rhs_value,
            abs_dev: r.abs_dev,
            rel_dev: r.rel_dev,
            pass: r.pass,
            note: r.note.clone(),
        }
    }
}

fn params_text(params: &[(String, f64)]) -> String {
    params
        .iter()
        .map(|(name, value)| format!("{name}={value}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// Human-readable lines, one per row.
pub fn render_text(rows: &[Row]) -> String {
    let mut out = String::new();
    for row in rows {
        let status = if row.pass { "PASS" } else { "FAIL" };
        let note = if row.note.is_empty() {
            String::new()
        } else {
            format!("  [{}]", row.note)
        };
        out.push_str(&format!(
            "{status}  {:<18} {:<28} lhs={:<24} rhs={:<24} abs={:.3e} rel={:.3e}{note}\n",
            row.id,
            params_text(&row.params),
            row.lhs,
            row.rhs,
            row.abs_dev,
            row.rel_dev
        ));
    }
    out
}

/// JSON array of rows.
pub fn render_json(rows: &[Row]) -> String {
    let mut s = serde_json::to_string_pretty(rows).expect("rows serialize");
    s.push('\n');
    s
}

fn csv_quote(text: &str) -> String {
    format!("\"{}\"", text.replace('"', "\"\""))
}

/// CSV with the fixed columns id, params, lhs, rhs, abs_dev, rel_dev, pass, note.
pub fn render_csv(rows: &[Row]) -> String {
    let mut out = String::from("id,params,lhs,rhs,abs_dev,rel_dev,pass,note\n");
    for row in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{}\n",
            row.id,
            csv_quote(&params_text(&row.params)),
            row.lhs,
            row.rhs,
            row.abs_dev,
            row.rel_dev,
            row.pass,
            csv_quote(&row.note)
        ));
    }
    out
}
