//! Report emission. Identical records produce byte-identical output in every
//! format, so reruns and different worker counts can be diffed directly.

use serde::Serialize;

use crate::verify::{BatchSummary, VerificationRecord};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Csv,
    Human,
}

impl std::str::FromStr for ReportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(ReportFormat::Json),
            "csv" => Ok(ReportFormat::Csv),
            "human" => Ok(ReportFormat::Human),
            other => Err(format!("unknown format '{other}' (expected json, csv or human)")),
        }
    }
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    records: &'a [VerificationRecord],
    summary: &'a BatchSummary,
}

/// Renders a whole batch. JSON is one `{records, summary}` object; CSV is a
/// header row plus one row per record (the summary is not part of the CSV
/// bytes); human is one line per record plus a summary block.
pub fn emit_report(
    records: &[VerificationRecord],
    summary: &BatchSummary,
    format: ReportFormat,
) -> Vec<u8> {
    match format {
        ReportFormat::Json => {
            let mut bytes = serde_json::to_vec(&ReportDocument { records, summary })
                .expect("records serialize");
            bytes.push(b'\n');
            bytes
        }
        ReportFormat::Csv => emit_records_csv(records),
        ReportFormat::Human => {
            let mut out = String::new();
            for record in records {
                out.push_str(&human_line(record));
                out.push('\n');
            }
            out.push_str(&human_summary(summary));
            out.into_bytes()
        }
    }
}

/// One record as a standalone JSON object.
pub fn emit_record_json(record: &VerificationRecord) -> Vec<u8> {
    let mut bytes = serde_json::to_vec(record).expect("record serializes");
    bytes.push(b'\n');
    bytes
}

pub const CSV_HEADER: [&str; 20] = [
    "graph",
    "graph6",
    "law",
    "n",
    "m",
    "g",
    "kappa_g",
    "hypothesis_holds",
    "mu_kappa",
    "expected",
    "equality_holds",
    "upper_bound_holds",
    "hyp_le_g_plus_one",
    "hyp_le_half_order",
    "delta",
    "doubling_iff_holds",
    "status",
    "base_witness",
    "mu_witness",
    "note",
];

fn opt_usize(v: Option<usize>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn opt_bool(v: Option<bool>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn witness(v: &Option<Vec<usize>>) -> String {
    v.as_ref()
        .map(|cut| {
            cut.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ")
        })
        .unwrap_or_default()
}

/// Header row plus one row per record; empty cells stand for absent values.
pub fn emit_records_csv(records: &[VerificationRecord]) -> Vec<u8> {
    let mut writer = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("csv header");
    for r in records {
        writer
            .write_record([
                r.graph.clone(),
                r.graph6.clone(),
                r.law.to_string(),
                r.n.to_string(),
                r.m.to_string(),
                r.g.to_string(),
                opt_usize(r.kappa_g),
                opt_bool(r.hypothesis_holds),
                opt_usize(r.mu_kappa),
                opt_usize(r.expected),
                opt_bool(r.equality_holds),
                opt_bool(r.upper_bound_holds),
                opt_bool(r.hyp_le_g_plus_one),
                opt_bool(r.hyp_le_half_order),
                opt_usize(r.delta),
                opt_bool(r.doubling_iff_holds),
                r.status.name().to_string(),
                witness(&r.base_witness),
                witness(&r.mu_witness),
                r.note.clone().unwrap_or_default(),
            ])
            .expect("csv row");
    }
    writer.into_inner().expect("csv buffer")
}

pub fn human_line(r: &VerificationRecord) -> String {
    let mut line = format!("{}  law={} n={} m={} g={}", r.graph, r.law, r.n, r.m, r.g);
    if let Some(k) = r.kappa_g {
        line.push_str(&format!(" kappa_g={k}"));
    }
    if let Some(d) = r.delta {
        line.push_str(&format!(" delta={d}"));
    }
    if let Some(mk) = r.mu_kappa {
        line.push_str(&format!(" mu_kappa={mk}"));
    }
    if let Some(e) = r.expected {
        line.push_str(&format!(" expected={e}"));
    }
    line.push_str(&format!(" [{}]", r.status.name()));
    if let Some(note) = &r.note {
        line.push_str(&format!(" ({note})"));
    }
    line
}

pub fn human_summary(s: &BatchSummary) -> String {
    format!(
        "records={} verified={} hypothesis_failed={} not_applicable={} skipped={} violations={}\n",
        s.records, s.verified, s.hypothesis_failed, s.not_applicable, s.skipped, s.violations
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connectivity::Method;
    use crate::generate::FamilySpec;
    use crate::graph::Graph;
    use crate::verify::{check_extra_law, run_batch, BatchOptions};

    #[test]
    fn empty_batch_renders_an_all_zero_json_document() {
        let bytes = emit_report(&[], &BatchSummary::default(), ReportFormat::Json);
        let text = String::from_utf8(bytes).unwrap();
        assert_eq!(
            text,
            "{\"records\":[],\"summary\":{\"records\":0,\"verified\":0,\"hypothesis_failed\":0,\
             \"not_applicable\":0,\"skipped\":0,\"violations\":0}}\n"
        );
    }

    #[test]
    fn csv_row_carries_the_golden_cycle_values() {
        let c6 = FamilySpec::Cycle(6).build().unwrap();
        let record = check_extra_law(&c6, 1, "cycle:6", Method::Pruned, None).unwrap();
        let bytes = emit_records_csv(&[record]);
        let text = String::from_utf8(bytes).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), CSV_HEADER.join(","));
        let row = lines.next().unwrap();
        assert!(row.contains("6,6,1,2,true,5,5,true,true"), "{row}");
        assert!(row.starts_with("cycle:6,"));
        assert!(row.contains(",verified,"));
        assert!(row.contains("0 3"));
    }

    #[test]
    fn absent_values_render_as_empty_cells() {
        let k4 = FamilySpec::Complete(4).build().unwrap();
        let record = check_extra_law(&k4, 1, "complete:4", Method::Pruned, None).unwrap();
        let bytes = emit_records_csv(&[record]);
        let text = String::from_utf8(bytes).unwrap();
        let row = text.lines().nth(1).unwrap();
        assert!(row.contains(",,"), "{row}");
        assert!(row.contains("not_applicable"));
    }

    #[test]
    fn identical_batches_emit_identical_bytes() {
        let items: Vec<(String, Graph)> = vec![
            ("cycle:6".into(), FamilySpec::Cycle(6).build().unwrap()),
            ("path:5".into(), FamilySpec::Path(5).build().unwrap()),
        ];
        let a = run_batch(&items, &[0, 1], &BatchOptions::default());
        let b = run_batch(&items, &[0, 1], &BatchOptions { jobs: 3, ..Default::default() });
        for format in [ReportFormat::Json, ReportFormat::Csv, ReportFormat::Human] {
            assert_eq!(
                emit_report(&a.records, &a.summary, format),
                emit_report(&b.records, &b.summary, format)
            );
        }
    }
}
