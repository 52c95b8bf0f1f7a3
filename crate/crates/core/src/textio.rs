//! The `.smx` text format.
//!
//! ```text
//! [ 3 0 | 1  2
//!   0 1 | 0  3
//!   ----+-----
//!   1 1 | 5  2
//!   0 0 | 2 -1 ]
//! U
//! [ 7/2 ]
//! ```
//!
//! A component sits between `[` and `]`. Rows end at a newline or `;`,
//! entries are integers or fractions separated by whitespace, and `|` marks
//! a column cut. A line made only of `-` and `+` (at least two dashes) marks
//! a row cut. Components are separated by a line holding just `U` (or `∪`).
//! Lines and columns in errors are 1-based and count characters.

use crate::dense::DenseMatrix;
use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::supermatrix::SuperMatrix;
use crate::union::SuperNMatrix;

pub fn parse(text: &str) -> Result<SuperNMatrix> {
    Parser::default().run(text)
}

/// Canonical rendering, without a trailing newline.
pub fn format(u: &SuperNMatrix) -> String {
    u.components()
        .iter()
        .map(format_component)
        .collect::<Vec<_>>()
        .join("\nU\n")
}

pub fn format_component(s: &SuperMatrix) -> String {
    let cells: Vec<Vec<String>> = s
        .data()
        .to_rows()
        .iter()
        .map(|row| row.iter().map(Rational::to_string).collect())
        .collect();
    let widths: Vec<usize> = (0..s.cols())
        .map(|j| {
            cells
                .iter()
                .map(|row| row[j].chars().count())
                .max()
                .unwrap_or(1)
        })
        .collect();
    let col_cuts = s.col_partition().cuts();
    let is_cut = |j: usize| col_cuts.contains(&j);

    let mut rule = String::new();
    for (j, &w) in widths.iter().enumerate() {
        if j > 0 {
            rule.push_str(if is_cut(j) { "-+-" } else { "-" });
        }
        rule.extend(std::iter::repeat_n('-', w));
    }
    if rule.len() < 2 {
        rule.push('-');
    }

    let mut lines = Vec::with_capacity(s.rows() + s.row_partition().cuts().len());
    for (i, row) in cells.iter().enumerate() {
        if s.row_partition().cuts().contains(&i) {
            lines.push(format!("  {rule}"));
        }
        let mut line = String::from(if i == 0 { "[ " } else { "  " });
        for (j, cell) in row.iter().enumerate() {
            if j > 0 {
                line.push_str(if is_cut(j) { " | " } else { " " });
            }
            line.push_str(&format!("{cell:>width$}", width = widths[j]));
        }
        lines.push(line);
    }
    let mut out = lines.join("\n");
    out.push_str(" ]");
    out
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// A row cut seen on `line`, placed before the row with index `at`.
struct RuleLine {
    line: usize,
    at: usize,
}

struct Component {
    open_line: usize,
    open_column: usize,
    entries: Vec<Rational>,
    rows: usize,
    width: usize,
    col_cuts: Vec<usize>,
    rules: Vec<RuleLine>,
}

impl Component {
    fn new(open_line: usize, open_column: usize) -> Self {
        Component {
            open_line,
            open_column,
            entries: Vec::new(),
            rows: 0,
            width: 0,
            col_cuts: Vec::new(),
            rules: Vec::new(),
        }
    }

    fn push_row(&mut self, row: Row, line: usize) -> Result<()> {
        if row.entries.is_empty() {
            return match row.cuts.first() {
                Some(&(_, column)) => {
                    Err(parse_error(line, column, "'|' in a row without entries"))
                }
                None => Ok(()),
            };
        }
        if let Some(&(0, column)) = row.cuts.first() {
            return Err(parse_error(
                line,
                column,
                "'|' before the first entry of a row",
            ));
        }
        if let Some(&(_, column)) = row.cuts.iter().find(|&&(at, _)| at == row.entries.len()) {
            return Err(parse_error(
                line,
                column,
                "'|' after the last entry of a row",
            ));
        }
        let cuts: Vec<usize> = row.cuts.iter().map(|&(at, _)| at).collect();
        if self.rows == 0 {
            self.width = row.entries.len();
            self.col_cuts = cuts;
        } else if row.entries.len() != self.width {
            return Err(Error::RaggedRows {
                line,
                expected: self.width,
                found: row.entries.len(),
            });
        } else if cuts != self.col_cuts {
            return Err(Error::InconsistentCuts {
                line,
                expected: self.col_cuts.clone(),
                found: cuts,
            });
        }
        self.entries.extend(row.entries);
        self.rows += 1;
        Ok(())
    }

    fn push_rule(&mut self, line: usize) -> Result<()> {
        if self.rows == 0 {
            return Err(parse_error(line, 1, "row cut before the first row"));
        }
        if self.rules.last().is_some_and(|r| r.at == self.rows) {
            return Err(parse_error(
                line,
                1,
                "two row cuts with no row between them",
            ));
        }
        self.rules.push(RuleLine {
            line,
            at: self.rows,
        });
        Ok(())
    }

    fn finish(self, close_line: usize, close_column: usize) -> Result<SuperMatrix> {
        if self.rows == 0 {
            return Err(parse_error(
                close_line,
                close_column,
                "matrix has no entries",
            ));
        }
        if let Some(rule) = self.rules.iter().find(|r| r.at == self.rows) {
            return Err(parse_error(rule.line, 1, "row cut after the last row"));
        }
        let row_cuts = self.rules.iter().map(|r| r.at).collect();
        let data = DenseMatrix::new(self.rows, self.width, self.entries)?;
        SuperMatrix::with_cuts(data, row_cuts, self.col_cuts)
    }
}

#[derive(Default)]
struct Row {
    entries: Vec<Rational>,
    /// `(entries before the cut, column of the '|')`
    cuts: Vec<(usize, usize)>,
}

#[derive(Default)]
struct Parser {
    done: Vec<SuperMatrix>,
    open: Option<Component>,
    /// Line of a `U` separator not yet followed by a component.
    pending_separator: Option<usize>,
}

fn is_rule_line(line: &str) -> bool {
    let mut dashes = 0;
    for c in line.chars().filter(|c| !c.is_whitespace()) {
        match c {
            '-' => dashes += 1,
            '+' => {}
            _ => return false,
        }
    }
    dashes >= 2
}

fn is_separator(line: &str) -> bool {
    matches!(line.trim(), "U" | "∪")
}

impl Parser {
    fn run(mut self, text: &str) -> Result<SuperNMatrix> {
        for (index, raw) in text.split('\n').enumerate() {
            let line = raw.strip_suffix('\r').unwrap_or(raw);
            self.line(index + 1, line)?;
        }
        if let Some(open) = self.open {
            return Err(parse_error(
                open.open_line,
                open.open_column,
                "'[' is never closed",
            ));
        }
        if let Some(line) = self.pending_separator {
            return Err(parse_error(
                line,
                1,
                "'U' must be followed by another matrix",
            ));
        }
        if self.done.is_empty() {
            return Err(Error::EmptyInput);
        }
        SuperNMatrix::new(self.done)
    }

    fn line(&mut self, number: usize, line: &str) -> Result<()> {
        if line.trim().is_empty() {
            return Ok(());
        }
        if let Some(open) = self.open.as_mut() {
            if is_rule_line(line) {
                return open.push_rule(number);
            }
        } else if is_separator(line) {
            if self.done.is_empty() || self.pending_separator.is_some() {
                return Err(parse_error(
                    number,
                    first_column(line),
                    "'U' must sit between two matrices",
                ));
            }
            self.pending_separator = Some(number);
            return Ok(());
        }
        self.content(number, line)
    }

    fn content(&mut self, number: usize, line: &str) -> Result<()> {
        let chars: Vec<char> = line.chars().collect();
        let mut row = Row::default();
        let mut k = 0;
        while k < chars.len() {
            let c = chars[k];
            let column = k + 1;
            if c.is_whitespace() {
                k += 1;
                continue;
            }
            if self.open.is_none() {
                if c != '[' {
                    return Err(parse_error(
                        number,
                        column,
                        format!("expected '[', found '{c}'"),
                    ));
                }
                if !self.done.is_empty() && self.pending_separator.is_none() {
                    return Err(parse_error(
                        number,
                        column,
                        "matrices must be separated by a 'U' line",
                    ));
                }
                self.pending_separator = None;
                self.open = Some(Component::new(number, column));
                k += 1;
                continue;
            }
            match c {
                '[' => {
                    return Err(parse_error(
                        number,
                        column,
                        "unexpected '[' inside a matrix",
                    ))
                }
                ';' => {
                    self.open_component()
                        .push_row(std::mem::take(&mut row), number)?;
                }
                '|' => {
                    if row
                        .cuts
                        .last()
                        .is_some_and(|&(at, _)| at == row.entries.len())
                    {
                        return Err(parse_error(
                            number,
                            column,
                            "two '|' with no entry between them",
                        ));
                    }
                    row.cuts.push((row.entries.len(), column));
                }
                ']' => {
                    self.open_component()
                        .push_row(std::mem::take(&mut row), number)?;
                    if let Some(extra) = chars[k + 1..].iter().position(|c| !c.is_whitespace()) {
                        return Err(parse_error(
                            number,
                            column + extra + 1,
                            "unexpected text after ']'",
                        ));
                    }
                    let open = self.open.take().expect("inside a matrix");
                    self.done.push(open.finish(number, column)?);
                    return Ok(());
                }
                _ => {
                    let end = chars[k..]
                        .iter()
                        .position(|c| c.is_whitespace() || matches!(c, '[' | ']' | '|' | ';'))
                        .map_or(chars.len(), |n| k + n);
                    let token: String = chars[k..end].iter().collect();
                    let value = token
                        .parse::<Rational>()
                        .map_err(|e| parse_error(number, column, e.to_string()))?;
                    row.entries.push(value);
                    k = end;
                    continue;
                }
            }
            k += 1;
        }
        if let Some(open) = self.open.as_mut() {
            open.push_row(row, number)?;
        }
        Ok(())
    }

    fn open_component(&mut self) -> &mut Component {
        self.open.as_mut().expect("inside a matrix")
    }
}

fn first_column(line: &str) -> usize {
    line.chars()
        .position(|c| !c.is_whitespace())
        .map_or(1, |k| k + 1)
}
