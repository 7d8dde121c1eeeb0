//! Line handling shared by the plain-text formats.

/// Splits a line into fields: on tabs when the line has any, otherwise on
/// runs of whitespace. Multiword lemmas ("près de") need the tab form.
pub(crate) fn split_fields(line: &str) -> Vec<&str> {
    if line.contains('\t') {
        line.split('\t').map(str::trim).filter(|f| !f.is_empty()).collect()
    } else {
        line.split_whitespace().collect()
    }
}

/// Non-blank, non-comment lines with their 1-based line numbers.
pub(crate) fn content_lines(source: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    source.lines().enumerate().filter_map(|(i, line)| {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            None
        } else {
            Some((i + 1, split_fields(trimmed)))
        }
    })
}
