//! Line-oriented input formats.
//!
//! Every file is a sequence of keyword lines and number rows; `#` starts a
//! comment, blank lines are ignored and rationals are written `p` or `p/q`.
//!
//! ```text
//! problem            solution            vlp
//! dim_x 2            points              dim_x 2
//! dim_y 2            0 0                 dim_y 2
//! graph              directions          objective
//! 1 0 0 0 0          0 1                 1 0
//! ...                kernel_directions   0 1
//! cone               1 0                 constraints
//! 0 1                end                 1 0 0
//! end                                    cone
//!                                        1 0
//!                                        end
//! ```
//!
//! A graph row `a b r` means `a·x + b·y >= r`, a cone row `c` means
//! `c·y >= 0`, a constraint row `a r` means `a·x >= r`. An empty `cone`
//! section is the whole space; a missing one (problem files only) means
//! `G(0)`.

use std::fmt;
use std::fmt::Write as _;

use setopt::geometry::rational::parse_rational;
use setopt::geometry::{LinearInequality, Rational, Vector};
use setopt::{OrderingCone, PolyMapping, Problem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.line == 0 {
            write!(f, "{}", self.message)
        } else {
            write!(f, "line {}: {}", self.line, self.message)
        }
    }
}

impl std::error::Error for ParseError {}

fn fail<T>(line: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { line, message: message.into() })
}

/// A non-blank line with its 1-based number, comments stripped.
struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

fn lines(text: &str) -> Vec<Line<'_>> {
    text.lines()
        .enumerate()
        .filter_map(|(i, raw)| {
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
        })
        .collect()
}

fn last_line(text: &str) -> usize {
    text.lines().count()
}

fn parse_row(line: &Line<'_>, arity: usize, what: &str) -> Result<Vector, ParseError> {
    if line.tokens.len() != arity {
        return fail(
            line.number,
            format!("{what} row needs {arity} numbers, found {}", line.tokens.len()),
        );
    }
    line.tokens
        .iter()
        .map(|t| match parse_rational(t) {
            Some(r) => Ok(r),
            None => fail(line.number, format!("`{t}` is not a rational number (expected p or p/q)")),
        })
        .collect()
}

fn parse_dim(line: &Line<'_>) -> Result<usize, ParseError> {
    match line.tokens.as_slice() {
        [_, value] => value
            .parse::<usize>()
            .map_err(|_| ParseError { line: line.number, message: format!("`{value}` is not a dimension") }),
        _ => fail(line.number, format!("expected `{} <number>`", line.tokens[0])),
    }
}

/// Cursor over keyword-structured lines.
struct Reader<'a> {
    lines: Vec<Line<'a>>,
    pos: usize,
    eof: usize,
}

impl<'a> Reader<'a> {
    fn new(text: &'a str) -> Self {
        Reader { lines: lines(text), pos: 0, eof: last_line(text) }
    }

    fn peek(&self) -> Option<&Line<'a>> {
        self.lines.get(self.pos)
    }

    fn next(&mut self, expecting: &str) -> Result<&Line<'a>, ParseError> {
        let eof = self.eof;
        let line = self.lines.get(self.pos).ok_or(ParseError {
            line: eof,
            message: format!("unexpected end of input, expected {expecting}"),
        })?;
        self.pos += 1;
        Ok(line)
    }

    fn keyword(&mut self, word: &str) -> Result<usize, ParseError> {
        let line = self.next(&format!("`{word}`"))?;
        if line.tokens != [word] {
            return fail(line.number, format!("expected `{word}`, found `{}`", line.tokens.join(" ")));
        }
        Ok(line.number)
    }

    fn dimension(&mut self, word: &str) -> Result<usize, ParseError> {
        let line = self.next(&format!("`{word}`"))?;
        if line.tokens[0] != word {
            return fail(line.number, format!("expected `{word} <number>`, found `{}`", line.tokens.join(" ")));
        }
        parse_dim(line)
    }

    fn at_number_row(&self) -> bool {
        self.peek()
            .is_some_and(|l| l.tokens[0].starts_with(|c: char| c.is_ascii_digit() || c == '-' || c == '+'))
    }

    /// Rows until the next keyword line.
    fn rows(&mut self, arity: usize, what: &str) -> Result<Vec<(usize, Vector)>, ParseError> {
        let mut out = Vec::new();
        while self.at_number_row() {
            let line = self.next(what)?;
            out.push((line.number, parse_row(line, arity, what)?));
        }
        Ok(out)
    }

    fn at_keyword(&self, word: &str) -> bool {
        self.peek().is_some_and(|l| l.tokens == [word])
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        self.keyword("end")?;
        if let Some(line) = self.peek() {
            return fail(line.number, "content after `end`");
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct ProblemFile {
    pub dim_x: usize,
    pub dim_y: usize,
    pub graph: Vec<Vector>,
    /// `None` when the section is absent.
    pub cone: Option<Vec<Vector>>,
}

impl ProblemFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut r = Reader::new(text);
        r.keyword("problem")?;
        let dim_x = r.dimension("dim_x")?;
        let dim_y = r.dimension("dim_y")?;
        r.keyword("graph")?;
        let graph = values(r.rows(dim_x + dim_y + 1, "graph")?);
        let cone = if r.at_keyword("cone") {
            r.keyword("cone")?;
            Some(values(r.rows(dim_y, "cone")?))
        } else {
            None
        };
        r.finish()?;
        Ok(ProblemFile { dim_x, dim_y, graph, cone })
    }

    pub fn mapping(&self) -> PolyMapping {
        let rows = self
            .graph
            .iter()
            .map(|row| {
                let (coeffs, rhs) = row.split_at(self.dim_x + self.dim_y);
                LinearInequality::new(coeffs.to_vec(), rhs[0].clone())
            })
            .collect();
        PolyMapping::new(self.dim_x, self.dim_y, rows)
    }

    /// The problem together with a flag telling whether `C` defaulted to `G(0)`.
    pub fn problem(&self) -> setopt::Result<(Problem, bool)> {
        let mapping = self.mapping();
        match &self.cone {
            Some(rows) => Ok((Problem::new(mapping, OrderingCone::new(self.dim_y, rows.clone()))?, false)),
            // an empty graph has no G(0); the analysis reports infeasibility
            None if mapping.graph().is_empty() => Ok((Problem::new(mapping, OrderingCone::zero(self.dim_y))?, true)),
            None => Ok((Problem::with_default_cone(mapping)?, true)),
        }
    }

    /// Canonical text: rows as stored by the normalized graph and cone.
    pub fn render(mapping: &PolyMapping, cone: Option<&OrderingCone>) -> String {
        let mut out = String::new();
        writeln!(out, "problem").unwrap();
        writeln!(out, "dim_x {}", mapping.n()).unwrap();
        writeln!(out, "dim_y {}", mapping.q()).unwrap();
        writeln!(out, "graph").unwrap();
        for row in mapping.graph().rows() {
            let mut v = row.coefficients().to_vec();
            v.push(row.rhs().clone());
            writeln!(out, "{}", tokens(&v)).unwrap();
        }
        if let Some(c) = cone {
            writeln!(out, "cone").unwrap();
            for row in c.rows() {
                writeln!(out, "{}", tokens(row.coefficients())).unwrap();
            }
        }
        writeln!(out, "end").unwrap();
        out
    }
}

pub fn tokens(v: &[Rational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Vectors of a solution file keep their line numbers for diagnostics.
#[derive(Debug, Clone, Default)]
pub struct SolutionFile {
    pub points: Vec<(usize, Vector)>,
    pub directions: Vec<(usize, Vector)>,
    pub kernel_directions: Vec<(usize, Vector)>,
}

impl SolutionFile {
    /// `dim` is the pre-image dimension of the problem the file belongs to.
    pub fn parse(text: &str, dim: usize) -> Result<Self, ParseError> {
        let mut r = Reader::new(text);
        r.keyword("solution")?;
        let header = r.keyword("points")?;
        let points = r.rows(dim, "point")?;
        if points.is_empty() {
            return fail(header, "the points section must not be empty");
        }
        r.keyword("directions")?;
        let directions = r.rows(dim, "direction")?;
        r.keyword("kernel_directions")?;
        let kernel_directions = r.rows(dim, "kernel direction")?;
        r.finish()?;
        Ok(SolutionFile { points, directions, kernel_directions })
    }

    pub fn render(points: &[Vector], directions: &[Vector], kernel_directions: &[Vector]) -> String {
        let mut out = String::from("solution\n");
        for (name, list) in [("points", points), ("directions", directions), ("kernel_directions", kernel_directions)] {
            writeln!(out, "{name}").unwrap();
            for v in list {
                writeln!(out, "{}", tokens(v)).unwrap();
            }
        }
        out.push_str("end\n");
        out
    }
}

fn values(rows: Vec<(usize, Vector)>) -> Vec<Vector> {
    rows.into_iter().map(|(_, v)| v).collect()
}

impl SolutionFile {
    pub fn vectors(&self) -> (Vec<Vector>, Vec<Vector>, Vec<Vector>) {
        let strip = |rows: &[(usize, Vector)]| rows.iter().map(|(_, v)| v.clone()).collect();
        (strip(&self.points), strip(&self.directions), strip(&self.kernel_directions))
    }

    /// Line of the first occurrence of `v` in any section.
    pub fn line_of(&self, v: &[Rational]) -> Option<usize> {
        self.points
            .iter()
            .chain(&self.directions)
            .chain(&self.kernel_directions)
            .find(|(_, w)| w.as_slice() == v)
            .map(|(line, _)| *line)
    }
}

#[derive(Debug, Clone)]
pub struct VlpFile {
    pub dim_y: usize,
    /// `q` rows of length `n`.
    pub objective: Vec<Vector>,
    pub a: Vec<Vector>,
    pub b: Vec<Rational>,
    pub cone: Vec<Vector>,
}

impl VlpFile {
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut r = Reader::new(text);
        r.keyword("vlp")?;
        let dim_x = r.dimension("dim_x")?;
        let dim_y = r.dimension("dim_y")?;
        let header = r.keyword("objective")?;
        let objective = values(r.rows(dim_x, "objective")?);
        if objective.len() != dim_y {
            return fail(header, format!("objective needs {dim_y} rows, found {}", objective.len()));
        }
        r.keyword("constraints")?;
        let constraints = values(r.rows(dim_x + 1, "constraint")?);
        r.keyword("cone")?;
        let cone = values(r.rows(dim_y, "cone")?);
        r.finish()?;
        let (a, b) = constraints
            .into_iter()
            .map(|mut row| {
                let rhs = row.pop().expect("arity checked");
                (row, rhs)
            })
            .unzip();
        Ok(VlpFile { dim_y, objective, a, b, cone })
    }

    pub fn problem(&self) -> setopt::Result<Problem> {
        Problem::from_vlp(&self.objective, &self.a, &self.b, OrderingCone::new(self.dim_y, self.cone.clone()))
    }
}
