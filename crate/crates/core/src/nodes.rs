//! Tabulated values of `f(s) = ln ξ(s)` at the interpolation nodes.
//!
//! Entry `j` (1-based) holds `f(j/(j+1))`, which by `f(s) = f(1-s)` also
//! equals `f(1/(j+1))`. Building the table is the expensive stage of the
//! pipeline, so it is cached on disk in a small line-oriented text format:
//!
//! ```text
//! # keli-node-table v1
//! digits: <D>
//! count: <N>
//! <j> <decimal value of f(j/(j+1))>
//! ```

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rayon::prelude::*;
use rug::float::Round;
use rug::{Float, Rational};

use crate::error::{Error, Result};
use crate::mp::{digits_to_bits, format_real, parse_real, PrecisionContext};
use crate::special::SpecialTables;

pub const NODE_TABLE_MAGIC: &str = "# keli-node-table v1";

/// Which of the two mirrored node families to evaluate at.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NodeSet {
    /// `j/(j+1)`: 1/2, 2/3, 3/4, …
    V,
    /// `1/(j+1)`: 1/2, 1/3, 1/4, …
    U,
}

impl NodeSet {
    pub fn node(self, j: u64) -> Rational {
        match self {
            NodeSet::V => Rational::from((j, j + 1)),
            NodeSet::U => Rational::from((1, j + 1)),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct NodeValueTable {
    digits: u32,
    values: Vec<Float>,
}

impl NodeValueTable {
    pub fn new(digits: u32, values: Vec<Float>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::InvalidArgument("node table needs at least one entry".into()));
        }
        if let Some(j) = values.iter().position(|v| !v.is_finite()) {
            return Err(Error::InvalidArgument(format!("entry {} is not finite", j + 1)));
        }
        Ok(Self { digits, values })
    }

    pub fn digits(&self) -> u32 {
        self.digits
    }

    pub fn count(&self) -> usize {
        self.values.len()
    }

    /// `f(j/(j+1))` for `j` in `1..=count`.
    pub fn value(&self, j: usize) -> &Float {
        &self.values[j - 1]
    }

    pub fn values(&self) -> &[Float] {
        &self.values
    }

    /// `(j, f(j/(j+1)))` pairs in ascending `j`.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &Float)> {
        self.values.iter().enumerate().map(|(i, v)| (i + 1, v))
    }

    /// The first `count` entries.
    pub fn truncated(&self, count: usize) -> Self {
        Self {
            digits: self.digits,
            values: self.values[..count.min(self.count())].to_vec(),
        }
    }

    /// Copy rounded to `digits` decimal digits.
    pub fn rounded_to(&self, digits: u32) -> Self {
        let bits = digits_to_bits(digits);
        Self {
            digits,
            values: self
                .values
                .iter()
                .map(|v| Float::with_val_round(bits, v, Round::Nearest).0)
                .collect(),
        }
    }

    /// Adapts a loaded table to a run at `ctx`.
    ///
    /// A table with more digits than the run is rounded down and a warning
    /// is returned; one with fewer digits is rejected.
    pub fn coerce_to(&self, ctx: &PrecisionContext) -> Result<(Self, Option<String>)> {
        let want = ctx.working_digits();
        match self.digits.cmp(&want) {
            std::cmp::Ordering::Equal => Ok((self.clone(), None)),
            std::cmp::Ordering::Greater => {
                let warning = format!(
                    "node table has {} digits, rounding to the run's {} digits",
                    self.digits, want
                );
                log::warn!("{warning}");
                Ok((self.rounded_to(want), Some(warning)))
            }
            std::cmp::Ordering::Less => Err(Error::InsufficientPrecision(format!(
                "node table has {} digits but the run needs {}",
                self.digits, want
            ))),
        }
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{NODE_TABLE_MAGIC}");
        let _ = writeln!(out, "digits: {}", self.digits);
        let _ = writeln!(out, "count: {}", self.count());
        for (j, v) in self.entries() {
            let _ = writeln!(out, "{j} {}", format_real(v));
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim_end()));
        let (_, magic) = lines.next().ok_or_else(|| Error::parse(1, "empty node table"))?;
        if magic != NODE_TABLE_MAGIC {
            if magic.starts_with("# keli-node-table") {
                return Err(Error::VersionMismatch {
                    expected: NODE_TABLE_MAGIC.into(),
                    found: magic.into(),
                });
            }
            return Err(Error::parse(1, format!("not a node table: `{magic}`")));
        }
        let digits: u32 = header_field(lines.next(), "digits")?;
        let count: usize = header_field(lines.next(), "count")?;
        let bits = digits_to_bits(digits);

        let mut values = Vec::with_capacity(count);
        for (line_no, line) in lines {
            if line.is_empty() {
                continue;
            }
            let (j, value) = line
                .split_once(' ')
                .ok_or_else(|| Error::parse(line_no, "expected `<j> <value>`"))?;
            let j: usize = j
                .parse()
                .map_err(|_| Error::parse(line_no, format!("bad index `{j}`")))?;
            if j != values.len() + 1 {
                return Err(Error::parse(
                    line_no,
                    format!("index {j} out of sequence, expected {}", values.len() + 1),
                ));
            }
            if j > count {
                return Err(Error::parse(line_no, format!("entry {j} beyond declared count {count}")));
            }
            let v = parse_real(value, bits).map_err(|e| match e {
                Error::Parse { message, .. } => Error::parse(line_no, message),
                other => other,
            })?;
            values.push(v);
        }
        if values.len() < count {
            return Err(Error::Truncated {
                declared: count,
                found: values.len(),
            });
        }
        Self::new(digits, values)
    }
}

fn header_field<T: std::str::FromStr>(line: Option<(usize, &str)>, key: &str) -> Result<T> {
    let (line_no, line) = line.ok_or(Error::Truncated {
        declared: 0,
        found: 0,
    })?;
    line.strip_prefix(key)
        .and_then(|rest| rest.strip_prefix(':'))
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| Error::parse(line_no, format!("expected `{key}: <value>`")))
}

/// Tabulates `f(j/(j+1))` for `j = 1..=count` at `ctx`.
pub fn build_node_table(count: usize, ctx: &PrecisionContext) -> Result<NodeValueTable> {
    build_node_table_on(count, ctx, NodeSet::V)
}

/// Tabulation on either node family; the results agree by symmetry.
pub fn build_node_table_on(
    count: usize,
    ctx: &PrecisionContext,
    set: NodeSet,
) -> Result<NodeValueTable> {
    if count == 0 {
        return Err(Error::InvalidArgument("count must be at least 1".into()));
    }
    let tables = SpecialTables::for_context(ctx, 0.0);
    let values = (1..=count as u64)
        .into_par_iter()
        .map(|j| {
            let s = ctx.real(set.node(j));
            let v = tables.xi_log(&s, ctx.total_digits(), ctx.working_digits())?;
            Ok(ctx.report(&v))
        })
        .collect::<Result<Vec<_>>>()?;
    NodeValueTable::new(ctx.working_digits(), values)
}

pub fn persist_node_table(table: &NodeValueTable, destination: &Path) -> Result<()> {
    fs::write(destination, table.to_text()).map_err(|e| Error::io(destination, e))
}

pub fn load_node_table(source: &Path) -> Result<NodeValueTable> {
    let text = fs::read_to_string(source).map_err(|e| Error::io(source, e))?;
    NodeValueTable::from_text(&text)
}
