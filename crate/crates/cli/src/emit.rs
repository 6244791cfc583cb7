//! Report assembly. JSON keys are sorted, so identical inputs give identical bytes.

use g2_cartan::report::{Check, Report};
use g2_cartan::{G2Element, Scalar};
use serde_json::{json, Map, Value};

pub struct Out {
    command: String,
    ext: Option<String>,
    checks: Vec<Value>,
    pass: bool,
    fields: Map<String, Value>,
}

impl Out {
    pub fn new(command: &str) -> Out {
        Out { command: command.to_string(), ext: None, checks: Vec::new(), pass: true, fields: Map::new() }
    }

    pub fn pass(&self) -> bool {
        self.pass
    }

    /// A scalar literal; records the active extension for the echo.
    pub fn scalar(&mut self, s: &Scalar) -> Value {
        if self.ext.is_none() {
            self.ext = s.render_ext();
        }
        Value::String(s.render())
    }

    pub fn scalars<'a>(&mut self, xs: impl IntoIterator<Item = &'a Scalar>) -> Value {
        Value::Array(xs.into_iter().map(|x| self.scalar(x)).collect())
    }

    /// Nonzero coordinates as {label: literal}.
    pub fn element(&mut self, x: &G2Element<Scalar>) -> Value {
        let mut m = Map::new();
        for (l, c) in x.support() {
            let v = self.scalar(c);
            m.insert(l.name().to_string(), v);
        }
        Value::Object(m)
    }

    pub fn set(&mut self, key: &str, v: Value) {
        self.fields.insert(key.to_string(), v);
    }

    pub fn check(&mut self, c: &Check) {
        self.pass &= c.pass;
        let mut v = json!({"name": c.name, "pass": c.pass});
        if let Some(w) = &c.witness {
            v["witness"] = Value::String(w.clone());
        }
        self.checks.push(v);
    }

    pub fn counted(&mut self, name: &str, count: usize, pass: bool, witness: Option<String>) {
        self.check(&Check::new(name, pass, witness));
        if let Some(last) = self.checks.last_mut() {
            last["count"] = json!(count);
        }
    }

    pub fn report(&mut self, r: &Report) {
        for c in &r.checks {
            self.check(c);
        }
    }

    pub fn into_json(self) -> Value {
        let mut m = self.fields;
        m.insert("command".into(), Value::String(self.command));
        m.insert("ext".into(), self.ext.map_or(Value::Null, Value::String));
        m.insert("pass".into(), Value::Bool(self.pass));
        m.insert("checks".into(), Value::Array(self.checks));
        Value::Object(m)
    }
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// Arrays holding objects get one line per item; flat arrays stay inline.
fn is_list(v: &Value) -> bool {
    matches!(v, Value::Array(items) if items.iter().any(|x| x.is_object() || x.is_array()))
}

/// Plain-text table: scalar fields first, then lists, then checks.
pub fn human(v: &Value) -> String {
    let Value::Object(m) = v else { return inline(v) };
    let mut out = String::new();
    for key in ["command", "ext"] {
        if let Some(x) = m.get(key).filter(|x| !x.is_null()) {
            out += &format!("{:<16}{}\n", key, inline(x));
        }
    }
    for (k, x) in m {
        if ["command", "ext", "checks", "pass"].contains(&k.as_str()) || is_list(x) {
            continue;
        }
        out += &format!("{:<16}{}\n", k, inline(x));
    }
    for (k, x) in m {
        if let (Value::Array(items), true) = (x, k != "checks" && is_list(x)) {
            out += &format!("{}:\n", k);
            for it in items {
                out += &format!("  {}\n", inline(it));
            }
        }
    }
    if let Some(Value::Array(cs)) = m.get("checks") {
        for c in cs {
            let pass = c["pass"].as_bool().unwrap_or(false);
            out += &format!("[{}] {}", if pass { "pass" } else { "FAIL" }, inline(&c["name"]));
            if let Some(n) = c.get("count") {
                out += &format!(" ({})", n);
            }
            if let Some(w) = c.get("witness") {
                out += &format!(": {}", inline(w));
            }
            out.push('\n');
        }
    }
    out += &format!("{:<16}{}\n", "result", if m["pass"].as_bool() == Some(true) { "PASS" } else { "FAIL" });
    out
}
