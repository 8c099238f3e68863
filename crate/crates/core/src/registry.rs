//! Bundled catalog of named codes.
//!
//! Each record is a plain-text file of `key: value` header lines and matrix
//! blocks. A block starts with a `key:` line that has no value and runs to the
//! next blank line:
//!
//! ```text
//! name: steane-8-3-3
//! kind: signed
//! provenance: published
//! n: 8
//! K: 3
//! declared: d=3
//! gcos:
//! 01010101
//! ...
//! ```
//!
//! Kinds are `classical`, `plus`, `signed` and `params` (parameters only).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::codes::{self, LinearCode};
use crate::cssplus::PlusCode;
use crate::error::{Error, Result};
use crate::gf2::BinMatrix;
use crate::qstate::{SignVector, SignedCode};

macro_rules! bundled {
    ($($name:literal),* $(,)?) => {
        &[$(($name, include_str!(concat!("../registry/", $name, ".rec")))),*]
    };
}

/// `(file stem, contents)` of every bundled record.
pub const BUNDLED_RECORDS: &[(&str, &str)] = bundled![
    "repetition-5-1-5",
    "even-weight-8-7-2",
    "hamming-7-4-3",
    "hamming-15-11-3",
    "hamming-31-26-3",
    "ext-hamming-8-4-4",
    "ext-hamming-16-11-4",
    "reed-muller-16-5-8",
    "golay-23-12-7",
    "cyclic-10",
    "cyclic-15",
    "cyclic5-27",
    "hamming-form-10-6-3",
    "dual-pair-11-7-3",
    "dual-pair-20-15-3",
    "plus-4-2-2",
    "plus-7-1-3",
    "plus-8-0-4",
    "plus-10-2-3",
    "plus-12-3-3",
    "plus-13-5-3",
    "plus-14-6-3",
    "plus-15-7-3",
    "plus-15-7-3-cyclic",
    "plus-16-6-4",
    "plus-17-7-3",
    "plus-20-9-3",
    "plus-cyc-19-8-3",
    "plus-cyc-20-9-3",
    "plus-cyc-21-10-3",
    "plus-cyc-22-11-3",
    "plus-cyc-23-12-3",
    "plus-cyc-24-13-3",
    "plus-cyc-25-14-3",
    "plus-cyc-26-15-3",
    "plus-cyc-27-16-3",
    "plus-27-16-3",
    "plus-31-21-3",
    "golay-23-1-7",
    "laflamme-5-1-3",
    "steane-8-3-3",
    "signed-10-4-3",
    "signed-11-5-3",
    "bch-31-11-5",
    "bch-29-11-4",
    "bch-31-1-7",
    "qr-48-0-12",
    "bch-63-3-11",
    "bch-63-15-9",
    "qr-80-0-16",
    "qr-104-0-20",
    "bch-127-15-17",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Classical,
    Plus,
    Signed,
    Params,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Published,
    Derived,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::Classical => "classical",
            Kind::Plus => "plus",
            Kind::Signed => "signed",
            Kind::Params => "params",
        })
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Published => "published",
            Provenance::Derived => "derived",
        })
    }
}

const BLOCK_KEYS: &[&str] = &["h1", "d", "h2", "gcos", "generator", "check", "signs", "offset"];

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    pub name: String,
    pub kind: Kind,
    pub provenance: Provenance,
    pub aliases: Vec<String>,
    pub n: usize,
    /// Encoded qubits for quantum kinds, dimension for classical codes.
    pub k: usize,
    pub declared: BTreeMap<String, usize>,
    pub construct: Option<String>,
    pub h1_from: Option<String>,
    pub d_select: Option<Vec<usize>>,
    pub command: Option<String>,
    pub note: Option<String>,
    pub blocks: BTreeMap<String, Vec<String>>,
    #[serde(skip)]
    pub text: String,
}

fn parse_usize(key: &str, v: &str) -> Result<usize> {
    v.trim().parse().map_err(|_| Error::Parse(format!("{key}: expected a number, got {v:?}")))
}

/// `"4,6"` or `"6-12"` style lists of 1-based indices.
fn parse_index_list(v: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for part in v.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once('-') {
            let (a, b) = (parse_usize("range", a)?, parse_usize("range", b)?);
            if a == 0 || b < a {
                return Err(Error::Parse(format!("bad index range {part:?}")));
            }
            out.extend(a..=b);
        } else {
            let i = parse_usize("index", part)?;
            if i == 0 {
                return Err(Error::Parse("indices are 1-based".into()));
            }
            out.push(i);
        }
    }
    Ok(out)
}

impl FromStr for Record {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut fields: BTreeMap<String, String> = BTreeMap::new();
        let mut blocks: BTreeMap<String, Vec<String>> = BTreeMap::new();
        let mut open: Option<String> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.starts_with('#') {
                continue;
            }
            if let Some(block) = &open {
                if line.is_empty() {
                    open = None;
                } else {
                    blocks.get_mut(block).expect("opened").push(line.to_string());
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(':')
                .ok_or_else(|| Error::Parse(format!("record line {}: expected `key: value`", lineno + 1)))?;
            let (key, value) = (key.trim().to_string(), value.trim());
            if value.is_empty() && BLOCK_KEYS.contains(&key.as_str()) {
                if blocks.insert(key.clone(), Vec::new()).is_some() {
                    return Err(Error::Parse(format!("block {key:?} repeated")));
                }
                open = Some(key);
            } else if fields.insert(key.clone(), value.to_string()).is_some() {
                return Err(Error::Parse(format!("field {key:?} repeated")));
            }
        }
        let take = |k: &str| fields.get(k).cloned();
        let require = |k: &str| take(k).ok_or_else(|| Error::Parse(format!("record lacks `{k}`")));
        let name = require("name")?;
        let kind = match require("kind")?.as_str() {
            "classical" => Kind::Classical,
            "plus" => Kind::Plus,
            "signed" => Kind::Signed,
            "params" => Kind::Params,
            other => return Err(Error::Parse(format!("{name}: unknown kind {other:?}"))),
        };
        let provenance = match require("provenance")?.as_str() {
            "published" => Provenance::Published,
            "derived" => Provenance::Derived,
            other => return Err(Error::Parse(format!("{name}: unknown provenance {other:?}"))),
        };
        let n = parse_usize("n", &require("n")?)?;
        let k = match kind {
            Kind::Classical => parse_usize("k", &require("k")?)?,
            _ => parse_usize("K", &require("K")?)?,
        };
        let mut declared = BTreeMap::new();
        for pair in take("declared").unwrap_or_default().split_whitespace() {
            let (key, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("{name}: declared entry {pair:?}")))?;
            declared.insert(key.to_string(), parse_usize(key, v)?);
        }
        let aliases = take("aliases")
            .map(|a| a.split(',').map(|s| s.trim().to_string()).filter(|s| !s.is_empty()).collect())
            .unwrap_or_default();
        let d_select = take("d-select").map(|v| parse_index_list(&v)).transpose()?;
        if provenance == Provenance::Derived
            && kind != Kind::Classical
            && take("command").is_none()
            && take("construct").is_none()
        {
            return Err(Error::Parse(format!("{name}: derived records need `command` or `construct`")));
        }
        Ok(Self {
            name,
            kind,
            provenance,
            aliases,
            n,
            k,
            declared,
            construct: take("construct"),
            h1_from: take("h1-from"),
            d_select,
            command: take("command"),
            note: take("note"),
            blocks,
            text: text.to_string(),
        })
    }
}

impl Record {
    pub fn block(&self, key: &str) -> Option<Result<BinMatrix>> {
        self.blocks.get(key).map(|rows| BinMatrix::from_strs(rows))
    }

    fn require_block(&self, key: &str) -> Result<BinMatrix> {
        self.block(key).unwrap_or_else(|| Err(Error::Parse(format!("{}: missing `{key}` block", self.name))))
    }

    pub fn declared(&self, key: &str) -> Option<usize> {
        self.declared.get(key).copied()
    }
}

/// A built registry entry.
#[derive(Clone, Debug)]
pub enum Built {
    Classical(LinearCode),
    Plus(PlusCode),
    Signed(SignedCode),
    Params,
}

#[derive(Clone, Debug)]
pub struct Registry {
    records: Vec<Record>,
}

/// Classical code from a construct expression such as `hamming 3` or
/// `cyclic 0,1 4 10`.
fn classical_construct(expr: &str, reg: &Registry, depth: usize) -> Result<LinearCode> {
    let parts: Vec<&str> = expr.split_whitespace().collect();
    let num = |i: usize| -> Result<usize> {
        parts
            .get(i)
            .ok_or_else(|| Error::Parse(format!("construct {expr:?}: missing argument")))
            .and_then(|v| parse_usize("construct", v))
    };
    match parts.first().copied() {
        Some("repetition") => codes::make_repetition(num(1)?),
        Some("even-weight") => codes::make_even_weight(num(1)?),
        Some("hamming") => codes::make_hamming(num(1)?),
        Some("shortened-hamming") => codes::make_shortened_hamming(num(1)?, num(2)?),
        Some("extended-hamming") => codes::make_extended_hamming(num(1)?),
        Some("reed-muller") => codes::make_reed_muller_1(num(1)?),
        Some("golay") => codes::make_golay(),
        Some("cyclic") => {
            let exps = parts
                .get(1)
                .ok_or_else(|| Error::Parse(format!("construct {expr:?}: missing exponents")))?
                .split(',')
                .map(|e| parse_usize("exponent", e))
                .collect::<Result<Vec<_>>>()?;
            Ok(LinearCode::from_check(codes::make_cyclic_check(&exps, num(2)?, num(3)?)?))
        }
        // combine BASE identity N rows a,b,c
        Some("combine") => {
            let base = reg.classical_at_depth(parts.get(1).copied().unwrap_or(""), depth + 1)?;
            if parts.get(2) != Some(&"identity") || parts.get(4) != Some(&"rows") {
                return Err(Error::Parse(format!(
                    "construct {expr:?}: expected `combine BASE identity N rows LIST`"
                )));
            }
            let ext = LinearCode::from_generator(BinMatrix::identity(num(3)?)?);
            let rows: Vec<usize> =
                parse_index_list(parts.get(5).copied().unwrap_or(""))?.into_iter().map(|r| r - 1).collect();
            base.combine(&ext, &rows)
        }
        _ => Err(Error::Parse(format!("unknown construct {expr:?}"))),
    }
}

const MAX_DEPTH: usize = 8;

impl Registry {
    pub fn bundled() -> Self {
        let records = BUNDLED_RECORDS
            .iter()
            .map(|(stem, text)| {
                let r: Record = text.parse().unwrap_or_else(|e| panic!("bundled record {stem}: {e}"));
                assert_eq!(r.name, *stem, "record name must match its file");
                r
            })
            .collect();
        Self { records }
    }

    pub fn from_records(records: Vec<Record>) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for r in &records {
            for key in std::iter::once(&r.name).chain(&r.aliases) {
                if !seen.insert(key.clone()) {
                    return Err(Error::Parse(format!("duplicate registry name {key:?}")));
                }
            }
        }
        Ok(Self { records })
    }

    /// Bundled records plus `extra`, which may reference bundled names.
    pub fn with_extra(extra: Record) -> Result<Self> {
        let mut records = Self::bundled().records;
        records.retain(|r| r.name != extra.name);
        records.push(extra);
        Self::from_records(records)
    }

    pub fn records(&self) -> &[Record] {
        &self.records
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn get(&self, name: &str) -> Result<&Record> {
        self.records
            .iter()
            .find(|r| r.name == name || r.aliases.iter().any(|a| a == name))
            .ok_or_else(|| Error::UnknownCode(name.to_string()))
    }

    pub fn build(&self, name: &str) -> Result<Built> {
        self.build_record(self.get(name)?, 0)
    }

    pub fn classical(&self, name: &str) -> Result<LinearCode> {
        self.classical_at_depth(name, 0)
    }

    pub fn plus(&self, name: &str) -> Result<PlusCode> {
        match self.build(name)? {
            Built::Plus(p) => Ok(p),
            _ => Err(Error::InvalidParameter(format!("{name} is not a plus code"))),
        }
    }

    pub fn signed(&self, name: &str) -> Result<SignedCode> {
        match self.build(name)? {
            Built::Signed(s) => Ok(s),
            Built::Plus(p) => SignedCode::from_plus(&p),
            _ => Err(Error::InvalidParameter(format!("{name} is not a quantum code"))),
        }
    }

    fn classical_at_depth(&self, name: &str, depth: usize) -> Result<LinearCode> {
        match self.build_record(self.get(name)?, depth)? {
            Built::Classical(c) => Ok(c),
            _ => Err(Error::InvalidParameter(format!("{name} is not a classical code"))),
        }
    }

    fn plus_at_depth(&self, name: &str, depth: usize) -> Result<PlusCode> {
        match self.build_record(self.get(name)?, depth)? {
            Built::Plus(p) => Ok(p),
            _ => Err(Error::InvalidParameter(format!("{name} is not a plus code"))),
        }
    }

    /// Classical code from a registry name or a construct expression.
    pub fn resolve_classical(&self, source: &str) -> Result<LinearCode> {
        self.classical_source(source, 0)
    }

    /// A registry name or a construct expression.
    fn classical_source(&self, source: &str, depth: usize) -> Result<LinearCode> {
        if self.get(source).is_ok() {
            self.classical_at_depth(source, depth + 1)
        } else {
            classical_construct(source, self, depth)
        }
    }

    pub fn build_record(&self, r: &Record, depth: usize) -> Result<Built> {
        if depth > MAX_DEPTH {
            return Err(Error::Parse(format!("{}: construct references nest too deeply", r.name)));
        }
        let built = match r.kind {
            Kind::Params => Built::Params,
            Kind::Classical => Built::Classical(self.build_classical(r, depth)?),
            Kind::Plus => Built::Plus(self.build_plus(r, depth)?),
            Kind::Signed => Built::Signed(self.build_signed(r)?),
        };
        let (n, k) = match &built {
            Built::Params => (r.n, r.k),
            Built::Classical(c) => (c.n(), c.k()),
            Built::Plus(p) => (p.n(), p.k()),
            Built::Signed(s) => (s.n(), s.k()),
        };
        if (n, k) != (r.n, r.k) {
            return Err(Error::Inconsistent(format!(
                "{}: built (n, k) = ({n}, {k}) but the record declares ({}, {})",
                r.name, r.n, r.k
            )));
        }
        Ok(built)
    }

    fn build_classical(&self, r: &Record, depth: usize) -> Result<LinearCode> {
        let from_blocks = match (r.block("check"), r.block("generator")) {
            (Some(h), _) => Some(LinearCode::from_check(h?)),
            (None, Some(g)) => Some(LinearCode::from_generator(g?)),
            (None, None) => None,
        };
        let from_construct =
            r.construct.as_deref().map(|c| classical_construct(c, self, depth)).transpose()?;
        match (from_blocks, from_construct) {
            (Some(a), Some(b)) => {
                if !a.same_code(&b) {
                    return Err(Error::Inconsistent(format!(
                        "{}: printed matrix and construct disagree",
                        r.name
                    )));
                }
                Ok(a)
            }
            (Some(a), None) | (None, Some(a)) => Ok(a),
            (None, None) => Err(Error::Parse(format!("{}: no matrix or construct", r.name))),
        }
    }

    fn build_plus(&self, r: &Record, depth: usize) -> Result<PlusCode> {
        let plus = if let Some(expr) = &r.construct {
            let parts: Vec<&str> = expr.split_whitespace().collect();
            match parts.as_slice() {
                ["weakly-self-dual", ..] if parts.len() > 1 => {
                    let src = expr.trim_start()["weakly-self-dual".len()..].trim();
                    PlusCode::build_from_weakly_self_dual(&self.classical_source(src, depth)?)?
                }
                ["reduce", src] => self.plus_at_depth(src, depth + 1)?.reduce_kk1()?,
                ["reduce", src, row] => {
                    let row = parse_usize("row", row)?;
                    if row == 0 {
                        return Err(Error::Parse("rows are 1-based".into()));
                    }
                    self.plus_at_depth(src, depth + 1)?.reduce_kk1_at(row - 1)?
                }
                _ => return Err(Error::Parse(format!("{}: unknown plus construct {expr:?}", r.name))),
            }
        } else if let Some(gcos) = r.block("gcos") {
            PlusCode::build_from_generator(gcos?, r.require_block("d")?)?
        } else {
            let h1 = match (&r.h1_from, r.block("h1")) {
                (Some(src), None) => self.classical_source(src, depth)?.check().clone(),
                (None, Some(h)) => h?,
                (Some(src), Some(h)) => {
                    let h = h?;
                    let c = self.classical_source(src, depth)?;
                    if !c.check().same_rowspan(&h) {
                        return Err(Error::Inconsistent(format!(
                            "{}: printed h1 differs from {src}",
                            r.name
                        )));
                    }
                    h
                }
                (None, None) => return Err(Error::Parse(format!("{}: missing h1", r.name))),
            };
            let d = match (&r.d_select, r.block("d")) {
                (Some(rows), None) => {
                    let g1 = h1.standard_form()?.generator_original();
                    let idx: Vec<usize> = rows.iter().map(|i| i - 1).collect();
                    g1.select_rows(&idx)?
                }
                (None, Some(d)) => d?,
                (Some(rows), Some(d)) => {
                    let d = d?;
                    let g1 = h1.standard_form()?.generator_original();
                    let idx: Vec<usize> = rows.iter().map(|i| i - 1).collect();
                    if g1.select_rows(&idx)? != d {
                        return Err(Error::Inconsistent(format!(
                            "{}: printed D differs from the selected generator rows",
                            r.name
                        )));
                    }
                    d
                }
                (None, None) => BinMatrix::empty(h1.n_cols())?,
            };
            PlusCode::build_from_h1_d(h1, d)?
        };
        if let Some(h2) = r.block("h2") {
            if !plus.h2().same_rowspan(&h2?) {
                return Err(Error::Inconsistent(format!(
                    "{}: derived h2 does not span the printed h2",
                    r.name
                )));
            }
        }
        Ok(plus)
    }

    fn build_signed(&self, r: &Record) -> Result<SignedCode> {
        let gcos = r.require_block("gcos")?;
        let d = r.require_block("d")?;
        let w = 1usize
            .checked_shl(gcos.n_rows() as u32)
            .ok_or_else(|| Error::InvalidParameter("base coset too large".into()))?;
        let signs = r
            .blocks
            .get("signs")
            .map(|rows| rows.iter().map(|h| SignVector::from_hex(h, w)).collect::<Result<Vec<_>>>())
            .transpose()?
            .unwrap_or_else(|| vec![SignVector::zeros(w).expect("power of two"); d.n_rows()]);
        let offset = match r.blocks.get("offset").map(Vec::as_slice) {
            Some([h]) => SignVector::from_hex(h, w)?,
            Some(_) => return Err(Error::Parse(format!("{}: offset block must be one line", r.name))),
            None => SignVector::zeros(w)?,
        };
        SignedCode::new(gcos, d, signs, offset)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn record_parse_errors() {
        assert!("kind: plus".parse::<Record>().is_err());
        let base = "name: x\nkind: classical\nprovenance: published\nn: 3\nk: 1\nconstruct: repetition 3\n";
        assert!(base.parse::<Record>().is_ok());
        assert!(format!("{base}n: 4\n").parse::<Record>().is_err());
        assert!(base.replace("classical", "weird").parse::<Record>().is_err());
        let derived = "name: y\nkind: plus\nprovenance: derived\nn: 3\nK: 0\n";
        assert!(derived.parse::<Record>().is_err());
    }

    #[test]
    fn index_lists() {
        assert_eq!(parse_index_list("4,6").unwrap(), vec![4, 6]);
        assert_eq!(parse_index_list("6-8").unwrap(), vec![6, 7, 8]);
        assert!(parse_index_list("0").is_err());
        assert!(parse_index_list("5-3").is_err());
    }

    #[test]
    fn unknown_name() {
        assert!(matches!(Registry::bundled().get("nope"), Err(Error::UnknownCode(_))));
    }
}
