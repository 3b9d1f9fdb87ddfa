//! Encoded arrangements with their expected groups, and the verification
//! pipeline that checks each one.

mod report;

use std::collections::BTreeMap;
use std::sync::OnceLock;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::invariants::{
    bigness_certificate, compare_with, invariant_bundle, BignessPlan, CompareLimits, ComparisonVerdict, InvariantBundle,
    InvariantError,
};
use crate::van_kampen::{assemble, parse_table, present, VanKampenError};
use crate::word::{parse_relations, simplify, Presentation, Word, WordError};

pub use report::{matrix_table, report_json, report_table};

const DATA: &str = include_str!("../../data/catalog.txt");
const TWO_CONICS_TABLE: &str = include_str!("../../data/two_conics_table.txt");

/// Tietze move budget for the simplification stage.
pub const SIMPLIFY_BUDGET: usize = 10_000;

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("unknown catalog entry {0:?}")]
    UnknownEntry(String),
    #[error("unknown comparison family {0:?}")]
    UnknownFamily(String),
    #[error(transparent)]
    Word(#[from] WordError),
    #[error(transparent)]
    Invariant(#[from] InvariantError),
    #[error(transparent)]
    VanKampen(#[from] VanKampenError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Source {
    /// The two-conic Lefschetz table, assembled and presented projectively.
    Table,
    /// A published van Kampen presentation, already in the internal convention.
    Presentation(Presentation),
    /// Only the expected group is known.
    None,
}

#[derive(Debug, Clone)]
pub struct ArrangementEntry {
    pub id: String,
    pub description: String,
    pub figure: String,
    pub source: Source,
    pub expected: Presentation,
    /// An entry whose expected group must agree with this one's invariants.
    pub same_as: Option<String>,
    pub bigness: BignessPlan,
    /// Comparison family and 1-based position in it.
    pub family: Option<(String, usize)>,
}

fn internal(relations: &str) -> Vec<Word> {
    parse_relations(relations).expect("catalog relations parse").iter().map(Word::reversed).collect()
}

fn parse_entry(id: &str, fields: &BTreeMap<&str, &str>) -> ArrangementEntry {
    let get = |k: &str| *fields.get(k).unwrap_or_else(|| panic!("entry {}: missing field {}", id, k));
    let count = |k: &str| -> usize { get(k).parse().unwrap_or_else(|_| panic!("entry {}: bad {}", id, k)) };
    let source = match get("source") {
        "table" => Source::Table,
        "presentation" => Source::Presentation(Presentation::new(count("gens"), internal(get("relations"))).expect("relators fit")),
        "none" => Source::None,
        other => panic!("entry {}: bad source {}", id, other),
    };
    let kill: Vec<u32> = fields.get("kill").map_or(Vec::new(), |s| s.split_whitespace().map(|t| t.parse().expect("kill index")).collect());
    let extra = fields.get("extra").map_or(Vec::new(), |s| internal(s));
    let family = fields.get("family").map(|s| {
        let (name, pos) = s.rsplit_once(' ').expect("family name and position");
        (name.to_string(), pos.parse().expect("family position"))
    });
    ArrangementEntry {
        id: id.to_string(),
        description: get("description").to_string(),
        figure: get("figure").to_string(),
        source,
        expected: Presentation::new(count("expected_gens"), internal(get("expected"))).expect("relators fit"),
        same_as: fields.get("same_as").map(|s| s.to_string()),
        bigness: BignessPlan::killing(&kill).adding(extra),
        family,
    }
}

fn catalog() -> &'static [ArrangementEntry] {
    static CATALOG: OnceLock<Vec<ArrangementEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let mut out = Vec::new();
        let mut current: Option<(&str, BTreeMap<&str, &str>)> = None;
        for line in DATA.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
            if let Some(id) = line.strip_prefix('[').and_then(|l| l.strip_suffix(']')) {
                if let Some((id, f)) = current.take() {
                    out.push(parse_entry(id, &f));
                }
                current = Some((id, BTreeMap::new()));
            } else {
                let (k, v) = line.split_once(':').expect("key: value line");
                current.as_mut().expect("field before first entry").1.insert(k.trim(), v.trim());
            }
        }
        if let Some((id, f)) = current {
            out.push(parse_entry(id, &f));
        }
        out
    })
}

pub fn entries() -> &'static [ArrangementEntry] {
    catalog()
}

pub fn get_entry(id: &str) -> Result<&'static ArrangementEntry, CatalogError> {
    catalog().iter().find(|e| e.id == id).ok_or_else(|| CatalogError::UnknownEntry(id.to_string()))
}

/// Entry ids of a comparison family, in family order.
pub fn family(name: &str) -> Result<Vec<&'static ArrangementEntry>, CatalogError> {
    let mut members: Vec<_> = catalog().iter().filter(|e| e.family.as_ref().is_some_and(|(f, _)| f == name)).collect();
    if members.is_empty() {
        return Err(CatalogError::UnknownFamily(name.to_string()));
    }
    members.sort_by_key(|e| e.family.as_ref().map(|(_, k)| *k));
    Ok(members)
}

pub fn family_names() -> Vec<String> {
    let mut names: Vec<String> = catalog().iter().filter_map(|e| e.family.as_ref().map(|(f, _)| f.clone())).collect();
    names.dedup();
    names
}

/// The presentation the pipeline starts from, if the entry has a source.
pub fn source_presentation(entry: &ArrangementEntry) -> Result<Option<Presentation>, CatalogError> {
    match &entry.source {
        Source::Table => {
            let (n, rows) = parse_table(TWO_CONICS_TABLE)?;
            Ok(Some(present(&assemble(&rows, n)?, true)))
        }
        Source::Presentation(p) => Ok(Some(p.clone())),
        Source::None => Ok(None),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Stage {
    Present,
    Simplify,
    Compare,
    Bigness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StageResult {
    pub stage: Stage,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    /// The computed group was shown equal to the expected one.
    Equivalent,
    /// Only invariants could be compared, and they agree.
    InvariantMatch,
    /// No source; the expected group was checked on its own.
    ExpectedOnly,
    Distinct,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub stages: Vec<StageResult>,
    pub computed: Option<InvariantBundle>,
    pub expected: InvariantBundle,
    pub simplified: Option<String>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.stages.iter().all(|s| s.passed) && matches!(self.verdict, Verdict::Equivalent | Verdict::InvariantMatch | Verdict::ExpectedOnly)
    }
}

fn stage(stage: Stage, passed: bool, detail: impl Into<String>) -> StageResult {
    StageResult { stage, passed, detail: detail.into() }
}

fn bigness_stage(entry: &ArrangementEntry, p: &Presentation) -> StageResult {
    match bigness_certificate(p, &entry.bigness) {
        Ok(c) => stage(Stage::Bigness, c.verified, "surjects onto Z/2 * Z/3"),
        Err(e) => stage(Stage::Bigness, false, e.to_string()),
    }
}

pub fn verify(entry: &ArrangementEntry) -> Result<VerificationReport, CatalogError> {
    let limits = CompareLimits::default();
    let expected = invariant_bundle(&entry.expected, &limits.targets)?;
    let mut stages = Vec::new();
    let Some(source) = source_presentation(entry)? else {
        let verdict = match &entry.same_as {
            Some(other) => {
                let o = invariant_bundle(&get_entry(other)?.expected, &limits.targets)?;
                let ok = o.same_group_invariants(&expected);
                stages.push(stage(Stage::Compare, ok, format!("invariants against {}", other)));
                if ok { Verdict::InvariantMatch } else { Verdict::Distinct }
            }
            None => Verdict::ExpectedOnly,
        };
        stages.push(bigness_stage(entry, &entry.expected));
        return Ok(VerificationReport { id: entry.id.clone(), stages, computed: None, expected, simplified: None, verdict });
    };
    stages.push(stage(Stage::Present, true, format!("{} generators, {} relators", source.ngen(), source.relators().len())));

    let simplified = match simplify(&source, SIMPLIFY_BUDGET) {
        Ok(s) => {
            stages.push(stage(Stage::Simplify, true, format!("{} moves", s.trace.len())));
            s.presentation
        }
        Err(WordError::BudgetExhausted { used, best }) => {
            stages.push(stage(Stage::Simplify, false, format!("budget exhausted after {} moves", used)));
            best.presentation
        }
        Err(e) => return Err(e.into()),
    };
    let computed = invariant_bundle(&simplified, &limits.targets)?;
    let verdict = match compare_with(&simplified, &entry.expected, &limits)? {
        ComparisonVerdict::Equivalent(_) => {
            stages.push(stage(Stage::Compare, true, "equivalent to the expected group"));
            Verdict::Equivalent
        }
        ComparisonVerdict::Distinct { witness } => {
            stages.push(stage(Stage::Compare, false, witness));
            Verdict::Distinct
        }
        ComparisonVerdict::Inconclusive { reason } => {
            stages.push(stage(Stage::Compare, false, reason));
            Verdict::Inconclusive
        }
    };
    stages.push(bigness_stage(entry, &source));
    Ok(VerificationReport {
        id: entry.id.clone(),
        stages,
        computed: Some(computed),
        expected,
        simplified: Some(simplified.to_text()),
        verdict,
    })
}

/// Verifies every entry concurrently; reports come back sorted by id.
pub fn verify_all() -> Result<Vec<VerificationReport>, CatalogError> {
    let mut reports: Vec<VerificationReport> = catalog().par_iter().map(verify).collect::<Result<_, _>>()?;
    reports.sort_by(|a, b| a.id.cmp(&b.id));
    Ok(reports)
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonMatrix {
    pub family: String,
    pub ids: Vec<String>,
    /// `verdicts[i][j]` compares member `i` with member `j`.
    pub verdicts: Vec<Vec<ComparisonVerdict>>,
}

impl ComparisonMatrix {
    /// Whether no pair of distinct members was found equivalent.
    pub fn pairwise_separated(&self) -> bool {
        (0..self.ids.len()).all(|i| (0..self.ids.len()).all(|j| i == j || !self.verdicts[i][j].is_equivalent()))
    }
}

/// Pairwise comparison of the expected groups of a family.
pub fn comparison_matrix(name: &str) -> Result<ComparisonMatrix, CatalogError> {
    let members = family(name)?;
    let limits = CompareLimits::default();
    let verdicts = members
        .par_iter()
        .map(|a| members.iter().map(|b| compare_with(&a.expected, &b.expected, &limits)).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ComparisonMatrix { family: name.to_string(), ids: members.iter().map(|e| e.id.clone()).collect(), verdicts })
}
