//! Report rendering. JSON and CSV print floating-point values through the
//! same 17-significant-digit formatter, so the two formats carry identical
//! numbers and reruns of the same seeded config are byte-identical. Human
//! tables round to four decimals.

/// 17 significant digits, enough to reconstruct the exact f64.
pub fn fmt_g17(x: f64) -> String {
    debug_assert!(x.is_finite(), "report values must be finite, got {x}");
    format!("{x:.16e}")
}

/// Four decimals for human-readable tables.
pub fn fmt_human(x: f64) -> String {
    format!("{x:.4}")
}

/// Quotes a CSV field (schemes contain commas).
pub fn csv_quote(field: &str) -> String {
    format!("\"{}\"", field.replace('"', "\"\""))
}

/// Minimal ordered JSON object writer.
pub struct JsonObject {
    buf: String,
    first: bool,
}

impl JsonObject {
    pub fn new() -> Self {
        JsonObject { buf: String::from("{"), first: true }
    }

    fn key(&mut self, key: &str) {
        if !self.first {
            self.buf.push(',');
        }
        self.first = false;
        self.buf.push('"');
        self.buf.push_str(key);
        self.buf.push_str("\":");
    }

    pub fn str_field(&mut self, key: &str, value: &str) -> &mut Self {
        self.key(key);
        self.buf.push('"');
        for c in value.chars() {
            match c {
                '"' => self.buf.push_str("\\\""),
                '\\' => self.buf.push_str("\\\\"),
                '\n' => self.buf.push_str("\\n"),
                c => self.buf.push(c),
            }
        }
        self.buf.push('"');
        self
    }

    pub fn num_field(&mut self, key: &str, value: f64) -> &mut Self {
        self.key(key);
        self.buf.push_str(&fmt_g17(value));
        self
    }

    pub fn int_field(&mut self, key: &str, value: u128) -> &mut Self {
        self.key(key);
        self.buf.push_str(&value.to_string());
        self
    }

    /// Raw JSON fragment (arrays, nested objects).
    pub fn raw_field(&mut self, key: &str, raw: &str) -> &mut Self {
        self.key(key);
        self.buf.push_str(raw);
        self
    }

    pub fn finish(mut self) -> String {
        self.buf.push('}');
        self.buf
    }
}

/// JSON array of raw fragments.
pub fn json_array<I: IntoIterator<Item = String>>(items: I) -> String {
    let mut buf = String::from("[");
    for (i, item) in items.into_iter().enumerate() {
        if i > 0 {
            buf.push(',');
        }
        buf.push_str(&item);
    }
    buf.push(']');
    buf
}

/// Integer vector as a JSON array.
pub fn json_u32_array(values: &[u32]) -> String {
    json_array(values.iter().map(|v| v.to_string()))
}
