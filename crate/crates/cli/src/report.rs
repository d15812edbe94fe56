use clap::ValueEnum;
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Whether a command found what it was asked to verify.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violation,
}

impl Status {
    pub fn from_passed(passed: bool) -> Self {
        if passed {
            Status::Ok
        } else {
            Status::Violation
        }
    }
}

/// One command's result in all three renderings. `json` must be an object;
/// `rows` back both the csv and text forms.
pub struct Report {
    pub command: &'static str,
    pub json: Map<String, Value>,
    pub csv_header: Option<String>,
    pub rows: Vec<String>,
    /// Text lines; when empty the csv rows are printed instead.
    pub text: Vec<String>,
    pub status: Status,
}

impl Report {
    pub fn new(command: &'static str, json: Value) -> Self {
        let json = match json {
            Value::Object(m) => m,
            other => Map::from_iter([("result".to_string(), other)]),
        };
        Report { command, json, csv_header: None, rows: Vec::new(), text: Vec::new(), status: Status::Ok }
    }

    pub fn csv(mut self, header: &str, rows: Vec<String>) -> Self {
        self.csv_header = Some(header.to_string());
        self.rows = rows;
        self
    }

    pub fn text(mut self, lines: Vec<String>) -> Self {
        self.text = lines;
        self
    }

    pub fn status(mut self, status: Status) -> Self {
        self.status = status;
        self
    }

    /// Renders with the version and seed in the header.
    pub fn render(&self, format: Format, seed: u64) -> String {
        let version = env!("CARGO_PKG_VERSION");
        match format {
            Format::Json => {
                let mut out = Map::new();
                out.insert("version".into(), json!(version));
                out.insert("seed".into(), json!(seed.to_string()));
                out.insert("command".into(), json!(self.command));
                for (k, v) in &self.json {
                    out.insert(k.clone(), v.clone());
                }
                let mut s = serde_json::to_string_pretty(&Value::Object(out)).expect("json values serialize");
                s.push('\n');
                s
            }
            Format::Csv | Format::Text => {
                let mut s = format!("# biperm {version} {} seed={seed}\n", self.command);
                let body: Vec<&String> = if format == Format::Text && !self.text.is_empty() {
                    self.text.iter().collect()
                } else {
                    self.csv_header.iter().chain(&self.rows).collect()
                };
                for line in body {
                    s.push_str(line);
                    s.push('\n');
                }
                s
            }
        }
    }
}

pub fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(ToString::to_string).collect()
}
