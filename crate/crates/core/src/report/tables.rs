use std::str::FromStr;

use crate::partition::{CardinalityRow, LengthRow, SweepReport};

/// Decimal places for averages.
pub const AVG_PLACES: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TableFormat {
    /// Column-aligned text with a header line per table.
    Text,
    /// RFC 4180 CSV; the argmax point is split into `a0,a1` columns.
    Csv,
}

impl FromStr for TableFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "table" | "text" => Ok(TableFormat::Text),
            "csv" => Ok(TableFormat::Csv),
            other => Err(format!("unknown table format {other:?}")),
        }
    }
}

fn point((a0, a1): (i64, i64)) -> String {
    format!("({a0},{a1})")
}

/// `1, (-1,-1), 22, 11`
pub fn cardinality_line(row: &CardinalityRow) -> String {
    format!("{}, {}, {}, {}", row.m, point(row.argmax), row.intervals, row.singletons)
}

/// `2, (2,2), [25/13], 123, 21.5067`, averaging over all body entries of
/// the ring.
pub fn length_line(row: &LengthRow) -> String {
    format!(
        "{}, {}, {}, {}, {}",
        row.m,
        point(row.argmax),
        row.interval,
        row.max_len,
        row.avg_over_entries.to_decimal(AVG_PLACES)
    )
}

fn aligned(out: &mut String, header: &[&str], rows: &[Vec<String>]) {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let mut line = |cells: &[String]| {
        let padded: Vec<String> = cells.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
        out.push_str(padded.join("  ").trim_end());
        out.push('\n');
    };
    line(&header.iter().map(|h| h.to_string()).collect::<Vec<_>>());
    for r in rows {
        line(r);
    }
}

pub fn render_tables(report: &SweepReport, format: TableFormat) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Text => {
            let rows: Vec<Vec<String>> = report
                .cardinality
                .iter()
                .map(|r| vec![r.m.to_string(), point(r.argmax), r.intervals.to_string(), r.singletons.to_string()])
                .collect();
            aligned(&mut out, &["m", "point", "intervals", "singletons"], &rows);
            out.push('\n');
            let rows: Vec<Vec<String>> = report
                .lengths
                .iter()
                .map(|r| {
                    vec![
                        r.m.to_string(),
                        point(r.argmax),
                        r.interval.to_string(),
                        r.max_len.to_string(),
                        r.avg_over_entries.to_decimal(AVG_PLACES),
                        r.avg_over_points.to_decimal(AVG_PLACES),
                    ]
                })
                .collect();
            aligned(&mut out, &["m", "point", "interval", "max_len", "avg_len", "avg_of_avgs"], &rows);
        }
        TableFormat::Csv => {
            let rows = report.cardinality.iter().map(|r| {
                vec![
                    r.m.to_string(),
                    r.argmax.0.to_string(),
                    r.argmax.1.to_string(),
                    r.intervals.to_string(),
                    r.singletons.to_string(),
                ]
            });
            out.push_str(&csv_text(&["m", "a0", "a1", "intervals", "singletons"], rows));
            out.push('\n');
            let rows = report.lengths.iter().map(|r| {
                vec![
                    r.m.to_string(),
                    r.argmax.0.to_string(),
                    r.argmax.1.to_string(),
                    r.interval.to_string(),
                    r.max_len.to_string(),
                    r.avg_over_entries.to_decimal(AVG_PLACES),
                    r.avg_over_points.to_decimal(AVG_PLACES),
                ]
            });
            out.push_str(&csv_text(&["m", "a0", "a1", "interval", "max_len", "avg_len", "avg_of_avgs"], rows));
        }
    }
    out
}

/// One line per point: `m,a0,a1,intervals,singletons,max_len,avg_len`,
/// where `m` is the point's ring.
pub fn render_sweep_csv(report: &SweepReport) -> String {
    let rows = report.summaries.iter().map(|s| {
        vec![
            s.ring().to_string(),
            s.a0.to_string(),
            s.a1.to_string(),
            s.intervals.to_string(),
            s.singletons.to_string(),
            s.max_len.to_string(),
            s.avg_len().to_decimal(AVG_PLACES),
        ]
    });
    csv_text(&["m", "a0", "a1", "intervals", "singletons", "max_len", "avg_len"], rows)
}

fn csv_text(header: &[&str], rows: impl Iterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for r in rows {
        w.write_record(&r).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("writing to memory")).expect("fields are UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{sweep, Limits};

    #[test]
    fn first_ring_lines() {
        let report = sweep(1, &Limits::default()).unwrap();
        assert_eq!(cardinality_line(&report.cardinality[0]), "1, (-1,-1), 22, 11");
        assert_eq!(length_line(&report.lengths[0]), "1, (-1,-1), [8/5], 38, 9.8172");
        let csv = render_tables(&report, TableFormat::Csv);
        assert!(csv.starts_with("m,a0,a1,intervals,singletons\n1,-1,-1,22,11\n"));
        let text = render_tables(&report, TableFormat::Text);
        assert!(text.lines().next().unwrap().ends_with("singletons"));
        let summary = render_sweep_csv(&report);
        assert_eq!(summary.lines().count(), 10);
        assert_eq!(summary.lines().nth(1), Some("0,0,0,1,0,1,1.0000"));
    }

    #[test]
    fn intervals_with_commas_are_quoted() {
        let report = sweep(4, &Limits::default()).unwrap();
        let csv = render_tables(&report, TableFormat::Csv);
        assert!(csv.contains("4,4,4,\"(15/8,62/33)\",363,"), "{csv}");
    }
}
