//! Deterministic report rendering.
//!
//! Every verb produces a [`Report`]; the text renderer and the JSON renderer
//! are both byte-stable because all collections arrive in sorted order and
//! every scalar is already in the exact token syntax.

use serde::Serialize;

#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Value,
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub title: String,
    pub rows: Vec<Vec<String>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub value: Option<String>,
    pub warnings: Vec<String>,
    pub sections: Vec<Section>,
}

impl Report {
    pub fn pass() -> Self {
        Report { verdict: Verdict::Pass, value: None, warnings: Vec::new(), sections: Vec::new() }
    }

    pub fn fail() -> Self {
        Report { verdict: Verdict::Fail, value: None, warnings: Vec::new(), sections: Vec::new() }
    }

    pub fn value(text: impl Into<String>) -> Self {
        Report {
            verdict: Verdict::Value,
            value: Some(text.into()),
            warnings: Vec::new(),
            sections: Vec::new(),
        }
    }

    pub fn warn(mut self, message: impl Into<String>) -> Self {
        self.warnings.push(message.into());
        self
    }

    pub fn section(mut self, title: impl Into<String>, rows: Vec<Vec<String>>) -> Self {
        self.sections.push(Section { title: title.into(), rows });
        self
    }

    pub fn is_fail(&self) -> bool {
        matches!(self.verdict, Verdict::Fail)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        match &self.verdict {
            Verdict::Pass => out.push_str("verdict: pass\n"),
            Verdict::Fail => out.push_str("verdict: fail\n"),
            Verdict::Value => {}
        }
        for warning in &self.warnings {
            out.push_str("warning: ");
            out.push_str(warning);
            out.push('\n');
        }
        if let Some(value) = &self.value {
            out.push_str(value);
            if !value.ends_with('\n') {
                out.push('\n');
            }
        }
        for section in &self.sections {
            out.push('[');
            out.push_str(&section.title);
            out.push_str("]\n");
            for row in &section.rows {
                out.push_str("  ");
                out.push_str(&row.join("  "));
                out.push('\n');
            }
        }
        out
    }

    pub fn render_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("report serializes");
        text.push('\n');
        text
    }
}
