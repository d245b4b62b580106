//! Report and brace-database serialization.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::brace::{is_left_brace, multiplicative_group, SkewBrace};
use crate::catalog::CatalogSource;
use crate::count::CountReport;
use crate::error::{Error, Result};
use crate::group::{abelian_groups_of_order, isomorphic, FiniteGroup, GroupInvariants};

pub const CSV_HEADER: &str = "order,group_id,abelian,regular_count,class_count";
pub const CSV_TOTALS_HEADER: &str = "order,b,s,complete";

/// Per-group rows, then a totals block. Unknown totals are left empty.
pub fn report_csv(r: &CountReport) -> String {
    let mut out = String::new();
    out.push_str(CSV_HEADER);
    out.push('\n');
    for g in &r.per_group {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.order, g.id_label, g.abelian, g.regular_count, g.class_count
        );
    }
    out.push_str(CSV_TOTALS_HEADER);
    out.push('\n');
    out.push_str(&totals_line(r));
    out.push('\n');
    out
}

/// `order,b,s,complete` values for one report.
pub fn totals_line(r: &CountReport) -> String {
    let opt = |x: Option<usize>| x.map_or(String::new(), |v| v.to_string());
    format!("{},{},{},{}", r.order, opt(r.b), opt(r.s), r.complete())
}

#[derive(Debug, Serialize)]
struct JsonGroup<'a> {
    group_id: &'a str,
    abelian: bool,
    regular_count: usize,
    class_count: usize,
}

#[derive(Debug, Serialize)]
struct JsonSkip<'a> {
    group_id: &'a str,
    reason: &'a str,
}

#[derive(Debug, Serialize)]
struct JsonReport<'a> {
    order: usize,
    groups: Vec<JsonGroup<'a>>,
    skipped: Vec<JsonSkip<'a>>,
    b: Option<usize>,
    s: Option<usize>,
    complete: bool,
}

pub fn report_json(r: &CountReport) -> String {
    let j = JsonReport {
        order: r.order,
        groups: r
            .per_group
            .iter()
            .map(|g| JsonGroup {
                group_id: &g.id_label,
                abelian: g.abelian,
                regular_count: g.regular_count,
                class_count: g.class_count,
            })
            .collect(),
        skipped: r
            .skipped
            .iter()
            .map(|s| JsonSkip {
                group_id: &s.id_label,
                reason: &s.reason,
            })
            .collect(),
        b: r.b,
        s: r.s,
        complete: r.complete(),
    };
    let mut s = serde_json::to_string_pretty(&j).expect("serializable");
    s.push('\n');
    s
}

/// One line of the brace database.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BraceRecord {
    pub order: usize,
    pub add_group_id: String,
    /// Row-major `∘` table.
    pub circ_table: Vec<u32>,
    pub is_left_brace: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mult_group_id: Option<String>,
}

/// Label of the catalog group isomorphic to `g`, if the catalog has one.
pub fn identify_group(g: &FiniteGroup, source: &CatalogSource) -> Option<String> {
    let cat = source.catalog_for(g.order());
    let inv = GroupInvariants::of(g);
    let mut candidates: Vec<FiniteGroup> = cat.entries(g.order()).to_vec();
    if g.is_abelian() {
        candidates.extend(abelian_groups_of_order(g.order()));
    }
    candidates
        .iter()
        .find(|h| GroupInvariants::of(h) == inv && isomorphic(h, g))
        .map(|h| h.id_label().to_string())
}

pub fn brace_record(b: &SkewBrace, source: Option<&CatalogSource>) -> BraceRecord {
    BraceRecord {
        order: b.order(),
        add_group_id: b.add_group_id().to_string(),
        circ_table: b.circ.clone(),
        is_left_brace: is_left_brace(b),
        mult_group_id: source.and_then(|s| identify_group(&multiplicative_group(b), s)),
    }
}

pub fn braces_jsonl(braces: &[SkewBrace], source: Option<&CatalogSource>) -> String {
    let mut out = String::new();
    for b in braces {
        out.push_str(&serde_json::to_string(&brace_record(b, source)).expect("serializable"));
        out.push('\n');
    }
    out
}

pub fn parse_brace_records(text: &str) -> Result<Vec<BraceRecord>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l).map_err(|e| Error::Parse {
                line: i + 1,
                msg: e.to_string(),
            })
        })
        .collect()
}

/// Rebuilds the brace of a record, looking the additive group up by label.
pub fn brace_of_record(rec: &BraceRecord, source: &CatalogSource) -> Result<SkewBrace> {
    let n = rec.order;
    let add = source
        .catalog_for(n)
        .entries(n)
        .iter()
        .find(|g| g.id_label() == rec.add_group_id)
        .cloned()
        .or_else(|| {
            abelian_groups_of_order(n)
                .into_iter()
                .find(|g| g.id_label() == rec.add_group_id)
        })
        .ok_or_else(|| Error::UnknownGroup(rec.add_group_id.clone()))?;
    SkewBrace::from_tables(add, rec.circ_table.clone())
}

pub fn write_file(path: &Path, contents: &str) -> Result<()> {
    std::fs::write(path, contents)?;
    Ok(())
}
