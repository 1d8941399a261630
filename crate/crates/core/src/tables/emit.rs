//! Text renderings of table lines.

use crate::characters::VermaSum;
use crate::weights::Weight;

use super::frame::Entry;

pub fn csv_header() -> &'static str {
    "family,ell,k,w,weight,terms"
}

/// One CSV row; terms are `mult*weight` joined by spaces.
pub fn csv_row(e: &Entry, ch: &VermaSum<Weight>) -> String {
    let terms: Vec<String> = ch.iter().map(|(w, c)| format!("{c}*{w}")).collect();
    format!(
        "{},{},{},{},\"{}\",\"{}\"",
        e.frame.family_name(),
        e.frame.ell(),
        e.k,
        e.frame.superscript(&e.w, false),
        e.weight(),
        terms.join(" ")
    )
}

/// `T_{name} = M_{name} + ...`, naming each Verma term by its frame entry
/// when it lies in the frame.
pub fn latex_line(e: &Entry, ch: &VermaSum<Weight>) -> String {
    let terms: Vec<String> = ch
        .iter()
        .map(|(w, c)| {
            let name = e.frame.locate(&w).map_or_else(|| w.to_string(), |t| t.latex());
            if c == 1 { format!("M_{{{name}}}") } else { format!("{c}M_{{{name}}}") }
        })
        .collect();
    format!("T_{{{}}} = {}", e.latex(), terms.join(" + "))
}
