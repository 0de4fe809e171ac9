use std::fs;
use std::io::{self, Write};
use std::path::Path;

use serde::Serialize;

/// Rendered subcommand output, tagged by whether everything certified.
#[derive(Debug)]
pub enum Outcome {
    Certified(String),
    Failed(String),
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

/// CSV with LF line endings.
pub fn csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 fields")
}

pub fn write(path: Option<&Path>, body: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, body),
        None => {
            let mut stdout = io::stdout().lock();
            stdout.write_all(body.as_bytes())?;
            stdout.flush()
        }
    }
}
