//! Fixture files for the `tables` command: the numeric matrices checked in
//! as data, compared entry by entry against the regenerated values.

use std::path::{Path, PathBuf};

/// Fixture directory: `WELDEDCALC_FIXTURES` overrides the checked-in one.
pub fn fixture_dir() -> PathBuf {
    match std::env::var_os("WELDEDCALC_FIXTURES") {
        Some(dir) => PathBuf::from(dir),
        None => Path::new(env!("CARGO_MANIFEST_DIR")).join("fixtures"),
    }
}

fn significant_lines(text: &str) -> Vec<String> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(|l| l.split_whitespace().collect::<Vec<_>>().join(" "))
        .collect()
}

/// Compare computed table text against the fixture file `<name>.txt`;
/// `Ok(None)` on match, otherwise a human-readable diff.
pub fn compare(dir: &Path, name: &str, computed: &str) -> std::io::Result<Option<String>> {
    let path = dir.join(format!("{name}.txt"));
    let fixture = std::fs::read_to_string(&path)?;
    let a = significant_lines(&fixture);
    let b = significant_lines(computed);
    if a == b {
        return Ok(None);
    }
    let mut out = String::new();
    out.push_str(&format!("  fixture {path:?}\n"));
    for i in 0..a.len().max(b.len()) {
        let fa = a.get(i).map(String::as_str).unwrap_or("<missing>");
        let fb = b.get(i).map(String::as_str).unwrap_or("<missing>");
        if fa != fb {
            out.push_str(&format!(
                "  line {}: fixture `{fa}` computed `{fb}`\n",
                i + 1
            ));
        }
    }
    Ok(Some(out))
}
