//! CSV output contract shared by the figure commands.
//!
//! Layout: one `#`-prefixed comment line holding the resolved scenario as
//! JSON, then a header row, then data rows.  Numbers always use `.` as the
//! decimal separator (Rust's float formatting is locale-independent).  Every
//! row ends with a `flag` column: empty for a computed point, otherwise a
//! short reason (`infeasible`, `regime`, `no-convergence`) with the numeric
//! fields of that row left empty.

use std::io::{self, Write};

/// One data row: already-formatted fields, plus the flag.
#[derive(Debug, Clone)]
pub struct Row {
    pub fields: Vec<String>,
    pub flag: &'static str,
}

impl Row {
    /// Computed row: every field present, empty flag.
    pub fn ok(fields: Vec<String>) -> Self {
        Self { fields, flag: "" }
    }

    /// Flagged row: `kept` leading fields (the sweep coordinates) survive,
    /// the remaining `blank` numeric fields are emitted empty.
    pub fn flagged(kept: Vec<String>, blank: usize, flag: &'static str) -> Self {
        let mut fields = kept;
        fields.extend(std::iter::repeat(String::new()).take(blank));
        Self { fields, flag }
    }
}

/// Render a float for CSV: shortest round-trip representation, `.` decimals.
pub fn num(v: f64) -> String {
    format!("{v}")
}

/// Write the full document; `header` must not already contain `flag`.
pub fn write_csv<W: Write>(
    out: &mut W,
    resolved_config: &str,
    header: &[&str],
    rows: &[Row],
) -> io::Result<()> {
    writeln!(out, "# {resolved_config}")?;
    writeln!(out, "{},flag", header.join(","))?;
    for row in rows {
        debug_assert_eq!(row.fields.len(), header.len());
        writeln!(out, "{},{}", row.fields.join(","), row.flag)?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn document_layout() {
        let rows = vec![
            Row::ok(vec![num(10.0), num(0.25)]),
            Row::flagged(vec![num(15.0)], 1, "infeasible"),
        ];
        let mut buf = Vec::new();
        write_csv(&mut buf, r#"{"rho_db":10.0}"#, &["rho_db", "bler"], &rows).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], r##"# {"rho_db":10.0}"##);
        assert_eq!(lines[1], "rho_db,bler,flag");
        assert_eq!(lines[2], "10,0.25,");
        assert_eq!(lines[3], "15,,infeasible");
        assert_eq!(lines.len(), 4);
    }

    #[test]
    fn numbers_use_point_decimals_and_round_trip() {
        for v in [0.1, 1e-9, 3.0000000000000004, 123456.75, 2.5e-300] {
            let s = num(v);
            assert!(!s.contains(','), "{s}");
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
    }
}
