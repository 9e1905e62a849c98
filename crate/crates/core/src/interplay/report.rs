use std::fmt::Write as _;

use crate::oracle::Semantics;

/// One line of a cost report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReportRow {
    pub language: String,
    pub semantics: Semantics,
    pub length: usize,
    /// Empty when no word of this length qualifies.
    pub max_cost: Option<String>,
    pub witness: Option<String>,
    pub evidence_kind: String,
}

const HEADER: [&str; 6] = ["language", "semantics", "length", "max_cost", "witness", "evidence_kind"];

impl ReportRow {
    fn fields(&self) -> [String; 6] {
        [
            self.language.clone(),
            self.semantics.to_string(),
            self.length.to_string(),
            self.max_cost.clone().unwrap_or_default(),
            self.witness.clone().unwrap_or_default(),
            self.evidence_kind.clone(),
        ]
    }
}

pub fn rows_to_csv(rows: &[ReportRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(HEADER).expect("in-memory write");
    for row in rows {
        w.write_record(row.fields()).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("csv output is utf-8")
}

fn cell(s: &str) -> String {
    if s.is_empty() {
        "–".to_string()
    } else {
        s.replace('|', "\\|")
    }
}

/// Markdown table with the same columns as [`rows_to_csv`].
pub fn rows_to_markdown(rows: &[ReportRow]) -> String {
    let mut out = String::new();
    writeln!(out, "| {} |", HEADER.join(" | ")).unwrap();
    writeln!(out, "|{}", "---|".repeat(HEADER.len())).unwrap();
    for row in rows {
        let fields: Vec<String> = row.fields().iter().map(|f| cell(f)).collect();
        writeln!(out, "| {} |", fields.join(" | ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        let rows = vec![
            ReportRow {
                language: "(a+b)*a".into(),
                semantics: Semantics::Rev,
                length: 3,
                max_cost: Some("2".into()),
                witness: Some("aab".into()),
                evidence_kind: "scan".into(),
            },
            ReportRow {
                language: "x,y".into(),
                semantics: Semantics::Abs,
                length: 1,
                max_cost: None,
                witness: None,
                evidence_kind: "scan".into(),
            },
        ];
        assert_eq!(
            rows_to_csv(&rows),
            "language,semantics,length,max_cost,witness,evidence_kind\n(a+b)*a,rev,3,2,aab,scan\n\"x,y\",abs,1,,,scan\n"
        );
        let md = rows_to_markdown(&rows);
        assert!(md.starts_with("| language | semantics |"));
        assert!(md.contains("| (a+b)*a | rev | 3 | 2 | aab | scan |"));
    }
}
