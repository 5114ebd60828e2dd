//! JSON certificates and their text rendering.

use assocform::num::format_rational;
use assocform::poly::{format_form, Form, Style};
use assocform::{DualForm, Frame, Rational, Subspace};
use serde_json::{json, Value};

use crate::Format;

pub const VERSION: &str = concat!("assocform/", env!("CARGO_PKG_VERSION"), "/schema-1");

#[derive(Default)]
pub struct Flags {
    pub hsop: Option<bool>,
    pub cat_nonzero: Option<bool>,
    pub u_res_member: Option<bool>,
}

pub struct Report {
    pub operation: &'static str,
    pub input: Value,
    pub output: Value,
    pub flags: Flags,
    pub witnesses: Value,
}

impl Report {
    pub fn new(operation: &'static str) -> Report {
        Report {
            operation,
            input: json!({}),
            output: json!({}),
            flags: Flags::default(),
            witnesses: json!({}),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "version": VERSION,
            "operation": self.operation,
            "input": self.input,
            "output": self.output,
            "flags": {
                "hsop": self.flags.hsop,
                "cat_nonzero": self.flags.cat_nonzero,
                "u_res_member": self.flags.u_res_member,
            },
            "witnesses": self.witnesses,
        })
    }

    pub fn emit(&self, format: Format) -> String {
        let v = self.to_json();
        match format {
            Format::Json => serde_json::to_string_pretty(&v).expect("json"),
            Format::Text => {
                let mut lines = Vec::new();
                flatten("", &v, &mut lines);
                lines.join("\n")
            }
        }
    }
}

/// `key.path: value` lines, skipping nulls.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    let key = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Null => {}
        Value::Object(map) => {
            for (k, x) in map {
                flatten(&key(k), x, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push(format!("{prefix}: [{}]", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&key(&i.to_string()), x, out);
            }
        }
        other => out.push(format!("{prefix}: {}", scalar(other))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn form(f: &Form) -> Value {
    Value::String(format_form(f, Style::Text))
}

pub fn dual(f: &DualForm) -> Value {
    Value::String(f.format(Style::Text))
}

pub fn rational(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn subspace(w: &Subspace) -> Value {
    Value::Array(w.basis().iter().map(form).collect())
}

pub fn frame(f: &Frame) -> Value {
    let m = f.matrix();
    let rows = (0..2)
        .map(|r| Value::Array((0..2).map(|c| rational(&m[(r, c)])).collect()))
        .collect();
    Value::Array(rows)
}
