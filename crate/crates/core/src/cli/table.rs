use std::fmt::Write;

use super::Format;

/// Column-oriented output. Cells and metadata tokens are JSON literals
/// (numbers, quoted strings, `true`, `false`, `null`), so both formats print
/// them verbatim.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub columns: Vec<(&'static str, Vec<String>)>,
    /// Rendered after the rows as `#key,token,...` in CSV.
    pub meta: Vec<(&'static str, Vec<String>)>,
}

impl Table {
    pub fn column(&mut self, name: &'static str, cells: Vec<String>) {
        self.columns.push((name, cells));
    }

    pub fn meta(&mut self, key: &'static str, tokens: Vec<String>) {
        self.meta.push((key, tokens));
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Json => self.to_json(),
        }
    }

    fn rows(&self) -> usize {
        self.columns.iter().map(|(_, c)| c.len()).min().unwrap_or(0)
    }

    fn to_csv(&self) -> String {
        let mut s = String::new();
        let header: Vec<&str> = self.columns.iter().map(|(n, _)| *n).collect();
        s.push_str(&header.join(","));
        s.push('\n');
        for r in 0..self.rows() {
            let row: Vec<&str> = self.columns.iter().map(|(_, c)| c[r].as_str()).collect();
            s.push_str(&row.join(","));
            s.push('\n');
        }
        for (key, tokens) in &self.meta {
            let _ = writeln!(s, "#{key},{}", tokens.join(","));
        }
        s
    }

    fn to_json(&self) -> String {
        let mut fields: Vec<String> = self
            .columns
            .iter()
            .map(|(name, cells)| format!("  \"{name}\": [{}]", cells[..self.rows()].join(", ")))
            .collect();
        for (key, tokens) in &self.meta {
            let value = match tokens.as_slice() {
                [one] => one.clone(),
                many => format!("[{}]", many.join(", ")),
            };
            fields.push(format!("  \"{key}\": {value}"));
        }
        format!("{{\n{}\n}}\n", fields.join(",\n"))
    }
}

/// A string as a JSON literal token.
pub fn json_string(s: &str) -> String {
    serde_json::to_string(s).expect("strings serialize")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::default();
        t.column("n", vec!["0".into(), "1".into()]);
        t.column("value", vec!["1".into(), "0.500000000000".into()]);
        t.meta("truncated", vec!["2".into()]);
        t.meta("stable", vec!["true".into(), "null".into()]);
        t
    }

    #[test]
    fn csv_layout() {
        assert_eq!(sample().render(Format::Csv), "n,value\n0,1\n1,0.500000000000\n#truncated,2\n#stable,true,null\n");
    }

    #[test]
    fn json_parses() {
        let v: serde_json::Value = serde_json::from_str(&sample().render(Format::Json)).unwrap();
        assert_eq!(v["n"], serde_json::json!([0, 1]));
        assert_eq!(v["truncated"], 2);
        assert_eq!(v["stable"], serde_json::json!([true, null]));
    }
}
