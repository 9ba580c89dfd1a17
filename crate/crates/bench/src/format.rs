//! Text format for instances: a line of integer codes separated by spaces or
//! commas, or a line of bracket characters.

use dyck_core::{BracketString, DyckError};
use thiserror::Error;

/// Bracket characters in code order: `[` is 1, `]` is 2, …, `>` is 8.
pub const BRACKETS: [char; 8] = ['[', ']', '(', ')', '{', '}', '<', '>'];

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}, column {column}: {message}")]
    Token {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("input contains no instance")]
    Empty,
    #[error("expected a single instance line, found another at line {0}")]
    ExtraLine(usize),
    #[error(transparent)]
    Model(#[from] DyckError),
}

fn bracket_code(c: char) -> Option<u32> {
    BRACKETS.iter().position(|&b| b == c).map(|i| i as u32 + 1)
}

/// Parses one instance. Blank lines are ignored; leading digits select the
/// code format, anything else the bracket format. Errors report 1-based
/// line and column.
pub fn parse_instance(text: &str) -> Result<BracketString, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let (index, line) = lines.next().ok_or(FormatError::Empty)?;
    if let Some((extra, _)) = lines.next() {
        return Err(FormatError::ExtraLine(extra + 1));
    }
    let line_no = index + 1;
    let first = line.trim_start().chars().next().unwrap_or(' ');
    let codes = if first.is_ascii_digit() {
        parse_codes(line, line_no)?
    } else {
        parse_brackets(line, line_no)?
    };
    Ok(BracketString::from_codes(&codes)?)
}

fn parse_codes(line: &str, line_no: usize) -> Result<Vec<u32>, FormatError> {
    let mut out = Vec::new();
    let mut start = None;
    let mut flush = |start: &mut Option<usize>, end: usize| -> Result<(), FormatError> {
        if let Some(s) = start.take() {
            let token = &line[s..end];
            let column = line[..s].chars().count() + 1;
            let bad = |message: String| FormatError::Token {
                line: line_no,
                column,
                message,
            };
            match token.parse::<u32>() {
                Ok(0) => return Err(bad("code 0 is not a bracket".into())),
                Ok(c) => out.push(c),
                Err(_) => return Err(bad(format!("invalid code `{token}`"))),
            }
        }
        Ok(())
    };
    for (i, c) in line.char_indices() {
        if c.is_whitespace() || c == ',' {
            flush(&mut start, i)?;
        } else if start.is_none() {
            start = Some(i);
        }
    }
    flush(&mut start, line.len())?;
    Ok(out)
}

fn parse_brackets(line: &str, line_no: usize) -> Result<Vec<u32>, FormatError> {
    line.chars()
        .enumerate()
        .filter(|(_, c)| !c.is_whitespace())
        .map(|(i, c)| {
            bracket_code(c).ok_or_else(|| FormatError::Token {
                line: line_no,
                column: i + 1,
                message: format!("unexpected character `{c}`"),
            })
        })
        .collect()
}

/// Bracket-character rendering, or `None` when a code exceeds 8.
pub fn to_brackets(s: &BracketString) -> Option<String> {
    s.codes()
        .into_iter()
        .map(|c| BRACKETS.get(c as usize - 1).copied())
        .collect()
}
