use serde_json::Value;

/// Plain-text view of a report: one `key: value` line per field, with
/// checks listed last.
pub fn render_text(report: &str) -> String {
    let v: Value = match serde_json::from_str(report) {
        Ok(v) => v,
        Err(_) => return report.to_string(),
    };
    let Some(obj) = v.as_object() else {
        return report.to_string();
    };
    let mut out = String::new();
    for (k, val) in obj {
        if k == "checks" || k == "schema" {
            continue;
        }
        let shown = match val {
            Value::String(s) => s.clone(),
            other => other.to_string(),
        };
        out.push_str(&format!("{k}: {shown}\n"));
    }
    if let Some(checks) = obj.get("checks").and_then(Value::as_array) {
        for c in checks {
            let status = c
                .get("status")
                .and_then(Value::as_str)
                .unwrap_or("?")
                .to_uppercase();
            let name = c.get("name").and_then(Value::as_str).unwrap_or("?");
            let detail = c.get("detail").and_then(Value::as_str).unwrap_or("");
            out.push_str(&format!("[{status}] {name}: {detail}\n"));
        }
    }
    out
}
