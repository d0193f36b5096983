use std::io::{self, Write};

use serde::Serialize;

use super::{Argument, EventRecord};

pub const COLUMNS: [&str; 16] = [
    "doc_id",
    "event_number",
    "semantic_category",
    "triggers",
    "times",
    "places",
    "facilities",
    "urban_rural",
    "participants",
    "participant_semantics",
    "organizers",
    "organizer_semantics",
    "targets",
    "doc_protest",
    "doc_violent",
    "doc_demand",
];

/// One flat output row. List-valued fields are joined with `|`; semantic
/// columns align with their head columns, empty where a head has none.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EventRow {
    pub doc_id: String,
    pub event_number: u32,
    pub semantic_category: String,
    pub triggers: String,
    pub times: String,
    pub places: String,
    pub facilities: String,
    pub urban_rural: String,
    pub participants: String,
    pub participant_semantics: String,
    pub organizers: String,
    pub organizer_semantics: String,
    pub targets: String,
    pub doc_protest: String,
    pub doc_violent: String,
    pub doc_demand: String,
}

impl EventRow {
    pub fn fields(&self) -> [String; 16] {
        [
            self.doc_id.clone(),
            self.event_number.to_string(),
            self.semantic_category.clone(),
            self.triggers.clone(),
            self.times.clone(),
            self.places.clone(),
            self.facilities.clone(),
            self.urban_rural.clone(),
            self.participants.clone(),
            self.participant_semantics.clone(),
            self.organizers.clone(),
            self.organizer_semantics.clone(),
            self.targets.clone(),
            self.doc_protest.clone(),
            self.doc_violent.clone(),
            self.doc_demand.clone(),
        ]
    }
}

fn join<'a>(items: impl IntoIterator<Item = &'a str>) -> String {
    items.into_iter().collect::<Vec<_>>().join("|")
}

fn texts(args: &[Argument]) -> String {
    join(args.iter().map(|a| a.text.as_str()))
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|v| v.to_string()).unwrap_or_default()
}

/// One row per record, ordered by (doc_id, event_number).
pub fn export_rows(records: &[EventRecord]) -> Vec<EventRow> {
    let mut rows: Vec<EventRow> = records
        .iter()
        .map(|r| EventRow {
            doc_id: r.doc_id.clone(),
            event_number: r.event_number,
            semantic_category: opt(r.semantic_category),
            triggers: join(r.triggers.iter().map(|t| t.text.as_str())),
            times: texts(&r.times),
            places: texts(&r.places),
            facilities: texts(&r.facilities),
            urban_rural: texts(&r.urban_rural_markers),
            participants: join(r.participants.iter().map(|p| p.head.text.as_str())),
            participant_semantics: join(r.participants.iter().map(|p| p.semantic.map_or("", |s| s.as_str()))),
            organizers: join(r.organizers.iter().map(|o| o.head.text.as_str())),
            organizer_semantics: join(r.organizers.iter().map(|o| o.semantic.map_or("", |s| s.as_str()))),
            targets: texts(&r.targets),
            doc_protest: opt(r.labels.protest_label()),
            doc_violent: opt(r.labels.violent()),
            doc_demand: opt(r.labels.demand()),
        })
        .collect();
    rows.sort_by(|a, b| (&a.doc_id, a.event_number).cmp(&(&b.doc_id, b.event_number)));
    rows
}

/// RFC 4180 CSV with a header line, written even when there are no rows.
pub fn write_csv<W: Write>(out: W, rows: &[EventRow]) -> io::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::CRLF)
        .from_writer(out);
    w.write_record(COLUMNS)?;
    for row in rows {
        w.write_record(row.fields())?;
    }
    w.flush()
}

/// One JSON object per row, keys in column order.
pub fn write_jsonl<W: Write>(mut out: W, rows: &[EventRow]) -> io::Result<()> {
    for row in rows {
        serde_json::to_writer(&mut out, row)?;
        out.write_all(b"\n")?;
    }
    Ok(())
}
