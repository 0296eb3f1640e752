//! The edge-list text format: one edge per line as two whitespace-separated
//! labels. Blank lines and lines starting with `#` are ignored.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: expected two labels, found {found}")]
pub struct ParseError {
    pub line: usize,
    pub found: usize,
}

pub fn parse_edge_list(text: &str) -> Result<Vec<(String, String)>, ParseError> {
    let mut edges = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        if tokens.len() != 2 {
            return Err(ParseError {
                line: i + 1,
                found: tokens.len(),
            });
        }
        edges.push((tokens[0].to_string(), tokens[1].to_string()));
    }
    Ok(edges)
}
