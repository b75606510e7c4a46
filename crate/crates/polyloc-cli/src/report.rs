//! Report emission. Reports are deterministic for a fixed configuration:
//! no timestamps or timing fields are serialized (wall-clock time goes to
//! stderr), and JSON keys are emitted in sorted order.

use std::io::Write;
use std::path::PathBuf;

use polyloc::Error;
use serde_json::json;

use crate::OutputFormat;

/// One CSV line of the flat moduli listing.
pub struct Row {
    pub instance: String,
    pub index: usize,
    pub re: f64,
    pub im: f64,
    pub modulus: f64,
}

pub struct Report {
    pub command: &'static str,
    pub config: serde_json::Value,
    pub instances: Vec<serde_json::Value>,
    pub summary: serde_json::Value,
    /// Flat eigenvalue rows backing the CSV format.
    pub rows: Vec<Row>,
}

impl Report {
    pub fn emit(&self, output: &Option<PathBuf>, format: OutputFormat) -> Result<(), Error> {
        let text = match format {
            OutputFormat::JsonReport => {
                let doc = json!({
                    "command": self.command,
                    "config": self.config,
                    "instances": self.instances,
                    "summary": self.summary,
                });
                let mut s = serde_json::to_string_pretty(&doc).expect("report serialization");
                s.push('\n');
                s
            }
            OutputFormat::CsvModuli => {
                let mut s = String::from("instance,index,re,im,modulus\n");
                for row in &self.rows {
                    s.push_str(&format!(
                        "{},{},{},{},{}\n",
                        row.instance, row.index, row.re, row.im, row.modulus
                    ));
                }
                s
            }
        };
        match output {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Error::Parse(format!("cannot write {}: {e}", path.display()))),
            None => {
                let mut stdout = std::io::stdout().lock();
                stdout
                    .write_all(text.as_bytes())
                    .map_err(|e| Error::Parse(format!("cannot write report: {e}")))
            }
        }
    }
}
