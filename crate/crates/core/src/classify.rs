//! Classification tables of globally generated bundles with `c1 ≤ 2`,
//! regenerated from curve data, Chern calculus and the `α` bound.
//!
//! A rank-3 bundle `F` with curve `C` extends nontrivially by `O^{r−3}` for
//! `r ≤ 3 + α(F)`. The top rank `3 + α` is lost to a decomposable bundle
//! whenever a sum of two `c1 = 1` bundles has the same Chern data and that
//! rank (the unique bundle there without trivial factors is the sum).

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::chow::{self, ChernData};
use crate::curves::{self, CurveData};
use crate::error::{Error, Result};
use crate::qcoh::StandardBundle;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationEntry {
    pub c1: i64,
    pub c2: i64,
    pub c3: i64,
    pub rank_min: u32,
    /// `None` for families with an arbitrary number of trivial summands.
    pub rank_max: Option<u32>,
    pub curve: Option<CurveData>,
    pub description: String,
    pub indecomposable: bool,
    pub h0_e_minus1_nonzero: bool,
    pub note: Option<String>,
}

impl ClassificationEntry {
    pub fn classes(&self) -> (i64, i64, i64) {
        (self.c1, self.c2, self.c3)
    }

    pub fn ranks(&self) -> Vec<u32> {
        match self.rank_max {
            Some(max) => (self.rank_min..=max).collect(),
            None => vec![self.rank_min],
        }
    }
}

impl fmt::Display for ClassificationEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ranks = match self.rank_max {
            Some(max) if max == self.rank_min => format!("{max}"),
            Some(max) => format!("{}≤r≤{max}", self.rank_min),
            None => format!("r≥{}", self.rank_min),
        };
        write!(
            f,
            "({},{},{};{ranks}) {}{}",
            self.c1,
            self.c2,
            self.c3,
            self.description,
            if self.indecomposable {
                ""
            } else {
                " [decomposable]"
            }
        )
    }
}

/// `(c1, c2, c3; r)`.
pub type Tuple = (i64, i64, i64, u32);

/// Chern data pulled back along a double cover `Q → P³`: `H ↦ h`,
/// `H² ↦ 2l`, `H³ ↦ 2p`.
pub fn pullback_from_p3(rank: u32, c1: i64, c2: i64, c3: i64) -> ChernData {
    ChernData::new(rank, c1, 2 * c2, 2 * c3)
}

struct Builder {
    c1: i64,
    data: ChernData,
    ranks: (u32, Option<u32>),
    curve: Option<CurveData>,
    description: String,
    indecomposable: bool,
    h0_minus1: bool,
    note: Option<String>,
}

impl Builder {
    fn new(data: ChernData, description: impl Into<String>) -> Self {
        Self {
            c1: data.c1,
            data,
            ranks: (data.rank, Some(data.rank)),
            curve: None,
            description: description.into(),
            indecomposable: true,
            h0_minus1: false,
            note: None,
        }
    }

    fn curve(mut self, curve: CurveData) -> Self {
        self.curve = Some(curve);
        self
    }

    fn decomposable(mut self) -> Self {
        self.indecomposable = false;
        self
    }

    fn h0_minus1(mut self) -> Self {
        self.h0_minus1 = true;
        self
    }

    fn ranks(mut self, lo: u32, hi: u32) -> Self {
        self.ranks = (lo, Some(hi));
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    fn build(self) -> ClassificationEntry {
        if let Some(curve) = &self.curve {
            let c3 = curves::c3_from_curve(curve, self.c1).c3;
            assert_eq!(
                c3, self.data.c3,
                "c3 of {} disagrees with its curve",
                self.description
            );
            assert_eq!(
                curve.degree(),
                self.data.c2,
                "c2 of {} is not deg C",
                self.description
            );
        }
        ClassificationEntry {
            c1: self.c1,
            c2: self.data.c2,
            c3: self.data.c3,
            rank_min: self.ranks.0,
            rank_max: self.ranks.1,
            curve: self.curve,
            description: self.description,
            indecomposable: self.indecomposable,
            h0_e_minus1_nonzero: self.h0_minus1,
            note: self.note,
        }
    }
}

fn sum_data(parts: &[ChernData]) -> ChernData {
    chow::direct_sum(parts)
}

fn quotient(sub: ChernData, total: ChernData) -> ChernData {
    chow::whitney_third(&sub, &total).expect("integral quotient")
}

fn bundle(b: StandardBundle) -> ChernData {
    b.chern_data()
}

/// Rank-3 globally generated bundles with the given `c1`.
pub fn rank3_table(c1: i64) -> Result<Vec<ClassificationEntry>> {
    use StandardBundle::*;
    let o = ChernData::trivial;
    let line = ChernData::line;
    match c1 {
        1 => Ok(vec![
            Builder::new(sum_data(&[o(2), line(1)]), "O² ⊕ O(1)")
                .decomposable()
                .h0_minus1()
                .build(),
            Builder::new(sum_data(&[bundle(Spinor), o(1)]), "Σ ⊕ O")
                .curve(CurveData::connected(1, 0))
                .decomposable()
                .build(),
            Builder::new(quotient(line(-1), o(4)), "A")
                .curve(CurveData::connected(2, 0))
                .build(),
        ]),
        2 => {
            let two_conics_a = bundle(StandardBundle::a().dual().twist(1));
            // Null-correlation N on P³ has (c1, c2) = (0, 1); on P³ a rank-2
            // twist by 1 gives (c1 + 2, c2 + c1 + 1).
            let (c1_n, c2_n) = (0, 1);
            let (n1, n2) = (c1_n + 2, c2_n + c1_n + 1);
            let pulled = pullback_from_p3(3, n1, n2, 0);
            assert_eq!(
                two_conics_a, pulled,
                "both two-conics bundles share Chern data"
            );
            let rational_quartic = quotient(o(1), sum_data(&[bundle(Spinor), bundle(Spinor)]));
            Ok(vec![
                Builder::new(sum_data(&[o(2), line(2)]), "O² ⊕ O(2)")
                    .decomposable()
                    .h0_minus1()
                    .build(),
                Builder::new(sum_data(&[o(1), line(1), line(1)]), "O ⊕ O(1)²")
                    .curve(CurveData::connected(2, 0))
                    .decomposable()
                    .h0_minus1()
                    .build(),
                Builder::new(sum_data(&[bundle(Spinor), line(1)]), "Σ ⊕ O(1)")
                    .curve(CurveData::connected(3, 0))
                    .decomposable()
                    .h0_minus1()
                    .build(),
                Builder::new(
                    quotient(line(-1), sum_data(&[o(3), line(1)])),
                    "coker(O(−1) → O³ ⊕ O(1))",
                )
                .curve(CurveData::connected(4, 1))
                .h0_minus1()
                .build(),
                Builder::new(two_conics_a, "A^∨(1) or pullback of N(1) ⊕ O")
                    .curve(CurveData::two_conics())
                    .build(),
                Builder::new(rational_quartic, "(Σ ⊕ Σ)/O")
                    .curve(CurveData::connected(4, 0))
                    .build(),
                Builder::new(
                    quotient(o(3), sum_data(&[bundle(Spinor), bundle(Phi)])),
                    "(Σ ⊕ Φ)/O³",
                )
                .curve(CurveData::connected(5, 1))
                .build(),
                Builder::new(
                    quotient(o(5), sum_data(&[bundle(Phi), bundle(Phi)])),
                    "(Φ ⊕ Φ)/O⁵",
                )
                .curve(CurveData::connected(6, 2))
                .build(),
                Builder::new(quotient(line(-2), o(4)), "coker(O(−2) → O⁴)")
                    .curve(CurveData::connected(8, 5))
                    .build(),
            ])
        }
        other => Err(Error::InvalidC1(other)),
    }
}

/// Sums of two `c1 = 1` bundles from `{O(1), Σ, A, Φ}` with the given `c2`.
pub fn decomposable_sums(c1: i64, c2: i64) -> Result<Vec<StandardBundle>> {
    use StandardBundle::*;
    if c1 != 2 || !(4..=6).contains(&c2) {
        return Err(Error::OutOfCatalogue(format!("c1 = {c1}, c2 = {c2}")));
    }
    let atoms = [Line(1), Spinor, StandardBundle::a(), Phi];
    let mut out = Vec::new();
    for i in 0..atoms.len() {
        for j in i..atoms.len() {
            let second = match (&atoms[i], &atoms[j]) {
                (PullbackA(_), PullbackA(_)) => PullbackA(1),
                _ => atoms[j].clone(),
            };
            let sum = StandardBundle::sum(vec![atoms[i].clone(), second]);
            if sum.chern_data().c2 == c2 {
                out.push(sum);
            }
        }
    }
    Ok(out)
}

/// Why no bundle of rank above 3 exists for this `c2` (with `c1 = 2`).
pub fn excluded_c2(c2: i64) -> Option<&'static str> {
    match c2 {
        7 => Some("no smooth curve of degree 7 on Q has I_C(2) spanned with the required genus"),
        c if c >= 9 => Some("a curve cut out by quadrics on Q has degree at most 8"),
        _ => None,
    }
}

/// Top indecomposable rank for an extension of `F` by trivial bundles.
fn extension_ceiling(entry: &ClassificationEntry) -> Option<(u32, Option<StandardBundle>)> {
    let curve = entry.curve.as_ref()?;
    let alpha = curves::alpha(curve, entry.c1).value?;
    if !entry.indecomposable || alpha <= 0 {
        return None;
    }
    let top = 3 + alpha as u32;
    let forced = decomposable_sums(entry.c1, entry.c2)
        .unwrap_or_default()
        .into_iter()
        .find(|s| {
            let d = s.chern_data();
            d.rank == top && d.c3 == entry.c3
        });
    match forced {
        Some(sum) => Some((top - 1, Some(sum))),
        None => Some((top, None)),
    }
}

/// Rank-3 table extended to every rank.
pub fn higher_rank_table(c1: i64) -> Result<Vec<ClassificationEntry>> {
    let base = rank3_table(c1)?;
    let mut out = Vec::new();
    for entry in &base {
        let mut e = entry.clone();
        if !e.indecomposable {
            e.rank_max = None;
            e.note = Some("any number of further trivial summands".to_string());
            out.push(e);
            continue;
        }
        out.push(e.clone());
        if let Some((ceiling, forced)) = extension_ceiling(entry) {
            if ceiling >= 4 {
                let description = extension_name(c1, entry).unwrap_or_else(|| {
                    format!("nonsplit extension of {} by O^(r−3)", entry.description)
                });
                let mut ext =
                    Builder::new(ChernData::new(4, entry.c1, entry.c2, entry.c3), description)
                        .ranks(4, ceiling);
                if let Some(curve) = entry.curve.clone() {
                    ext = ext.curve(curve);
                }
                if entry.h0_e_minus1_nonzero {
                    ext = ext.h0_minus1();
                }
                out.push(ext.build());
            }
            if let Some(sum) = forced {
                let d = sum.chern_data();
                out.push(
                    Builder::new(d, sum.to_string())
                        .decomposable()
                        .note("unique bundle of this rank and Chern data without trivial factors")
                        .build(),
                );
            }
        }
    }
    if c1 == 2 {
        for c2 in 4..=6 {
            for sum in decomposable_sums(2, c2)? {
                let d = sum.chern_data();
                let name = sum.to_string();
                if out.iter().any(|e| e.description == name) {
                    continue;
                }
                out.push(Builder::new(d, name).decomposable().build());
            }
        }
    }
    Ok(out)
}

fn extension_name(c1: i64, entry: &ClassificationEntry) -> Option<String> {
    match (c1, entry.c2, entry.c3) {
        (1, 2, 2) => Some("Φ".to_string()),
        (2, 4, 4) => Some("E_P".to_string()),
        _ => None,
    }
}

/// Lookup by `(c1, c2)`, with the exclusion reason when the list is empty.
pub fn lookup(c1: i64, c2: i64) -> Result<(Vec<ClassificationEntry>, Option<&'static str>)> {
    let entries: Vec<ClassificationEntry> = higher_rank_table(c1)?
        .into_iter()
        .filter(|e| e.c2 == c2)
        .collect();
    let reason = if c1 == 2 { excluded_c2(c2) } else { None };
    Ok((entries, reason))
}

/// `c1 = 0`: only the trivial bundle.
pub fn trivial_table() -> Vec<ClassificationEntry> {
    vec![ClassificationEntry {
        c1: 0,
        c2: 0,
        c3: 0,
        rank_min: 1,
        rank_max: None,
        curve: None,
        description: "O^r".to_string(),
        indecomposable: false,
        h0_e_minus1_nonzero: false,
        note: Some("a globally generated bundle with c1 = 0 is trivial".to_string()),
    }]
}

/// Indecomposable `(c1, c2, c3; r)` with `r ≥ 3` over both `c1` values.
pub fn indecomposable_tuples() -> BTreeSet<Tuple> {
    let mut out = BTreeSet::new();
    for c1 in 1..=2 {
        for e in higher_rank_table(c1).expect("valid c1") {
            if e.indecomposable {
                for r in e.ranks() {
                    if r >= 3 {
                        out.insert((e.c1, e.c2, e.c3, r));
                    }
                }
            }
        }
    }
    out
}

/// Reference list for the higher-rank statement, kept independent of the
/// generator.
pub fn higher_rank_target() -> BTreeSet<Tuple> {
    let mut t = BTreeSet::new();
    for r in 3..=4 {
        t.insert((1, 2, 2, r));
    }
    t.insert((2, 4, 0, 3));
    t.insert((2, 4, 2, 3));
    t.insert((2, 4, 4, 4));
    for r in 4..=5 {
        t.insert((2, 5, 5, r));
    }
    for r in 4..=7 {
        t.insert((2, 6, 8, r));
    }
    for r in 4..=13 {
        t.insert((2, 8, 16, r));
    }
    t
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HigherRankReport {
    pub matched: Vec<Tuple>,
    pub missing: Vec<Tuple>,
    /// Generated rank-3 tuples from the rank-3 classification that the
    /// reference list leaves out.
    pub flagged_rank3: Vec<Tuple>,
    /// Anything else generated but absent from the reference list.
    pub unexpected: Vec<Tuple>,
}

impl HigherRankReport {
    pub fn is_consistent(&self) -> bool {
        self.missing.is_empty() && self.unexpected.is_empty()
    }
}

pub fn higher_rank_check() -> HigherRankReport {
    let generated = indecomposable_tuples();
    let target = higher_rank_target();
    let rank3: BTreeSet<(i64, i64, i64)> = rank3_table(2)
        .expect("c1 = 2")
        .into_iter()
        .chain(rank3_table(1).expect("c1 = 1"))
        .filter(|e| e.indecomposable)
        .map(|e| e.classes())
        .collect();
    let mut report = HigherRankReport {
        matched: Vec::new(),
        missing: Vec::new(),
        flagged_rank3: Vec::new(),
        unexpected: Vec::new(),
    };
    for t in &target {
        if generated.contains(t) {
            report.matched.push(*t);
        } else {
            report.missing.push(*t);
        }
    }
    for t in generated.difference(&target) {
        if t.3 == 3 && rank3.contains(&(t.0, t.1, t.2)) {
            report.flagged_rank3.push(*t);
        } else {
            report.unexpected.push(*t);
        }
    }
    report
}
