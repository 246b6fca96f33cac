//! Star notation for removal vectors: `a*b` means the value `a` repeated
//! `b` times, so `0*3,5` is `(0,0,0,5)`.

use procens::CensoringScheme;

/// Parses star notation, validating length `m` and removal sum `n - m`.
pub fn parse_scheme_notation(text: &str, n: u32, m: u32) -> Result<CensoringScheme, String> {
    let mut removals: Vec<u32> = Vec::new();
    for raw in text.split(',') {
        let token = raw.trim();
        if token.is_empty() {
            return Err(format!("empty token in scheme `{text}`"));
        }
        match token.split_once('*') {
            None => {
                let value: u32 = token
                    .parse()
                    .map_err(|_| format!("malformed token `{token}` in scheme `{text}`"))?;
                removals.push(value);
            }
            Some((value, count)) => {
                let value: u32 = value
                    .trim()
                    .parse()
                    .map_err(|_| format!("malformed token `{token}` in scheme `{text}`"))?;
                let count: usize = count
                    .trim()
                    .parse()
                    .ok()
                    .filter(|&c| c >= 1)
                    .ok_or_else(|| format!("malformed token `{token}` in scheme `{text}`"))?;
                removals.extend(std::iter::repeat(value).take(count));
            }
        }
    }
    if removals.len() != m as usize {
        return Err(format!(
            "scheme `{text}` expands to {} entries, expected m={m}",
            removals.len()
        ));
    }
    let total: u64 = removals.iter().map(|&r| r as u64).sum();
    if total != (n - m) as u64 {
        return Err(format!(
            "scheme `{text}` removals sum to {total}, expected n-m={}",
            n - m
        ));
    }
    CensoringScheme::new(n, m, removals).map_err(|e| e.to_string())
}

/// Run-length encodes runs of two or more as `a*b`.
pub fn format_scheme_notation(scheme: &CensoringScheme) -> String {
    let removals = scheme.removals();
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < removals.len() {
        let mut j = i;
        while j + 1 < removals.len() && removals[j + 1] == removals[i] {
            j += 1;
        }
        let run = j - i + 1;
        if run >= 2 {
            parts.push(format!("{}*{run}", removals[i]));
        } else {
            parts.push(removals[i].to_string());
        }
        i = j + 1;
    }
    parts.join(",")
}
