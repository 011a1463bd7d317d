//! Shared plumbing for the line-oriented text formats.

use std::fmt;

/// Parse failure with 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(line: usize, column: usize, message: impl Into<String>) -> Self {
        Self {
            line,
            column,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "line {}, column {}: {}",
            self.line, self.column, self.message
        )
    }
}

/// Non-blank, non-comment lines paired with their 1-based line number.
/// Comments start with `#`.
pub(crate) fn content_lines(text: &str) -> Vec<(usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim_end()))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        })
        .collect()
}

/// Column (1-based) of the first character of `token` inside `line`.
pub(crate) fn column_of(line: &str, token: &str) -> usize {
    let base = line.as_ptr() as usize;
    let at = token.as_ptr() as usize;
    if at >= base && at <= base + line.len() {
        at - base + 1
    } else {
        1
    }
}

pub(crate) fn parse_usize(line_no: usize, line: &str, token: &str) -> Result<usize, ParseError> {
    token.parse::<usize>().map_err(|_| {
        ParseError::new(
            line_no,
            column_of(line, token),
            format!("expected a non-negative integer, found `{token}`"),
        )
    })
}
