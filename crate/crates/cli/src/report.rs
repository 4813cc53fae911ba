use serde::Serialize;
use serde_json::Value;

pub const TOOL: &str = concat!("abmc ", env!("CARGO_PKG_VERSION"));

/// One run's output. Everything except `timing_ms` is a function of the
/// materialized spec and seed.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub format: u32,
    pub tool: String,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    pub algebra: String,
    pub seed: u64,
    pub bounds: usize,
    pub pass: bool,
    pub summary: Vec<String>,
    pub result: Value,
    pub timing_ms: u64,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.pass {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// JSON with the timing field zeroed, for byte comparisons.
    pub fn canonical_json(&self) -> String {
        let mut r = self.clone();
        r.timing_ms = 0;
        r.to_json()
    }

    pub fn to_text(&self) -> String {
        let mut rows: Vec<(&str, String)> = vec![
            ("tool", self.tool.clone()),
            ("command", self.command.clone()),
            ("algebra", self.algebra.clone()),
        ];
        if let Some(p) = &self.preset {
            rows.push(("preset", p.clone()));
        }
        rows.push(("seed", self.seed.to_string()));
        rows.push(("bounds", self.bounds.to_string()));
        rows.push(("status", if self.pass { "pass".into() } else { "FAIL".into() }));
        rows.push(("timing", format!("{} ms", self.timing_ms)));
        let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        let mut out = String::new();
        for (k, v) in rows {
            out.push_str(&format!("{k:<width$}  {v}\n"));
        }
        out.push('\n');
        for line in &self.summary {
            out.push_str(line);
            out.push('\n');
        }
        out
    }
}
