//! Column-oriented text tables behind every CSV and JSON output.

use serde_json::{json, Map, Value};

/// Rows of preformatted cells under named columns.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Table {
    columns: Vec<String>,
    rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self {
            columns: columns.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        assert_eq!(row.len(), self.columns.len(), "row width must match the columns");
        self.rows.push(row);
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<String>] {
        &self.rows
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// CSV with `# `-prefixed comment lines before the column header.
    pub fn to_csv(&self, comments: &[String]) -> String {
        let mut out = String::new();
        for c in comments {
            out.push_str("# ");
            out.push_str(c);
            out.push('\n');
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }

    /// `{"comments": [...], "columns": [...], "rows": [{column: cell}]}`.
    pub fn to_json(&self, comments: &[String]) -> Value {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|r| {
                let obj: Map<String, Value> =
                    self.columns.iter().cloned().zip(r.iter().map(|c| json!(c))).collect();
                Value::Object(obj)
            })
            .collect();
        json!({ "comments": comments, "columns": self.columns, "rows": rows })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_and_json() {
        let mut t = Table::new(["n", "value"]);
        t.push(vec!["1".into(), "2.5e0".into()]);
        assert_eq!(t.to_csv(&["keli x".into()]), "# keli x\nn,value\n1,2.5e0\n");
        let j = t.to_json(&[]);
        assert_eq!(j["rows"][0]["value"], "2.5e0");
        assert_eq!(t.len(), 1);
    }
}
