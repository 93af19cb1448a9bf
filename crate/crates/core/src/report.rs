//! Command reports. The JSON form is the record; the text form is rendered
//! from it and carries the same facts.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Debug, Serialize, PartialEq)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

impl Status {
    pub fn of(ok: bool) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Item {
    pub label: String,
    pub value: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub status: Option<Status>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Section {
    pub title: String,
    pub items: Vec<Item>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub passed: bool,
    pub sections: Vec<Section>,
    /// Verbatim output such as an emitted algebra file.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub raw: Option<String>,
}

impl Section {
    pub fn new(title: impl Into<String>) -> Self {
        Section {
            title: title.into(),
            items: Vec::new(),
        }
    }

    pub fn value(&mut self, label: impl Into<String>, value: impl Serialize) -> &mut Item {
        self.items.push(Item {
            label: label.into(),
            value: serde_json::to_value(value).expect("report values serialize"),
            status: None,
            notes: Vec::new(),
        });
        self.items.last_mut().expect("just pushed")
    }

    pub fn check(&mut self, label: impl Into<String>, ok: bool, value: impl Serialize) -> &mut Item {
        let item = self.value(label, value);
        item.status = Some(Status::of(ok));
        item
    }
}

impl Item {
    pub fn note(&mut self, note: impl Into<String>) -> &mut Self {
        self.notes.push(note.into());
        self
    }

    pub fn notes(&mut self, notes: impl IntoIterator<Item = String>) -> &mut Self {
        self.notes.extend(notes);
        self
    }
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            passed: true,
            sections: Vec::new(),
            raw: None,
        }
    }

    pub fn push(&mut self, section: Section) {
        self.sections.push(section);
    }

    /// `passed` becomes false if any item failed.
    pub fn finish(mut self) -> Self {
        let failed = self
            .sections
            .iter()
            .flat_map(|s| &s.items)
            .any(|i| i.status == Some(Status::Fail));
        self.passed &= !failed;
        self
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        if let Some(raw) = &self.raw {
            return raw.clone();
        }
        let mut out = String::new();
        for s in &self.sections {
            let _ = writeln!(out, "== {} ==", s.title);
            for i in &s.items {
                let mark = match i.status {
                    Some(Status::Pass) => "PASS ",
                    Some(Status::Fail) => "FAIL ",
                    None => "",
                };
                let _ = writeln!(out, "{mark}{}: {}", i.label, render(&i.value));
                for n in &i.notes {
                    let _ = writeln!(out, "    {n}");
                }
            }
            out.push('\n');
        }
        let _ = writeln!(out, "{}: {}", self.command, if self.passed { "PASS" } else { "FAIL" });
        out
    }
}

fn render(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "none".into(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failing_item_fails_the_report() {
        let mut r = Report::new("demo");
        let mut s = Section::new("things");
        s.value("dim", 3);
        s.check("holds", false, "no").note("because");
        r.push(s);
        let r = r.finish();
        assert!(!r.passed);
        assert_eq!(r.exit_code(), 1);
        let text = r.to_text();
        assert!(text.contains("dim: 3"));
        assert!(text.contains("FAIL holds: no"));
        assert!(text.contains("    because"));
        let json: Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(json["sections"][0]["items"][1]["status"], "fail");
    }
}
