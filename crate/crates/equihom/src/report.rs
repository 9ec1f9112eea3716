//! Serialization of Mackey functors and homology tables.
//!
//! The JSON shape is `{top: {rank, torsion}, bot: {rank, torsion}, res, tr,
//! weyl}` with matrices written over the canonical generators (torsion
//! generators first, then free ones), rows indexed by the target.  Records
//! round-trip: deserializing re-runs the full axiom validation.  Output is
//! byte-identical across runs on the same input.

use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::c2sset::{bredon_homology_range, SsetError};
use crate::expr::{evaluate, ExprError, SpaceExpr};
use crate::intalg::{FGAbelianGroup, GroupHom, IntAlgError, IntMatrix};
use crate::mackey::{burnside, constant_z, norm_f2, MackeyError, MackeyFunctor};

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("matrix or torsion entry does not fit in an i64")]
    EntryOverflow,
    #[error(transparent)]
    Mackey(#[from] MackeyError),
    #[error(transparent)]
    IntAlg(#[from] IntAlgError),
    #[error(transparent)]
    Expr(#[from] ExprError),
    #[error(transparent)]
    Sset(#[from] SsetError),
}

/// The built-in coefficient systems.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coefficient {
    /// The norm of F2: top Z/4, bottom Z/2.
    B,
    /// The Burnside Mackey functor.
    A,
    /// The constant Mackey functor Z.
    Zconst,
}

impl Coefficient {
    pub fn functor(self) -> MackeyFunctor {
        match self {
            Coefficient::B => norm_f2(),
            Coefficient::A => burnside(),
            Coefficient::Zconst => constant_z(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Coefficient::B => "B",
            Coefficient::A => "A",
            Coefficient::Zconst => "Zconst",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LevelRecord {
    pub rank: usize,
    pub torsion: Vec<i64>,
}

impl LevelRecord {
    fn from_group(g: &FGAbelianGroup) -> Result<Self, ReportError> {
        let torsion = g
            .torsion()
            .iter()
            .map(|t| t.to_i64().ok_or(ReportError::EntryOverflow))
            .collect::<Result<Vec<i64>, _>>()?;
        Ok(LevelRecord {
            rank: g.free_rank(),
            torsion,
        })
    }

    fn to_group(&self) -> Result<FGAbelianGroup, ReportError> {
        Ok(FGAbelianGroup::from_invariants(&self.torsion, self.rank)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MackeyRecord {
    pub top: LevelRecord,
    pub bot: LevelRecord,
    pub res: Vec<Vec<i64>>,
    pub tr: Vec<Vec<i64>>,
    pub weyl: Vec<Vec<i64>>,
}

fn matrix_entries(m: &IntMatrix) -> Result<Vec<Vec<i64>>, ReportError> {
    (0..m.rows())
        .map(|i| {
            (0..m.cols())
                .map(|j| m.get(i, j).to_i64().ok_or(ReportError::EntryOverflow))
                .collect()
        })
        .collect()
}

fn entries_matrix(rows: usize, cols: usize, e: &[Vec<i64>]) -> Result<IntMatrix, ReportError> {
    if e.len() != rows || e.iter().any(|r| r.len() != cols) {
        return Err(ReportError::EntryOverflow);
    }
    Ok(IntMatrix::from_fn(rows, cols, |i, j| e[i][j].into()))
}

impl MackeyRecord {
    pub fn from_functor(m: &MackeyFunctor) -> Result<Self, ReportError> {
        Ok(MackeyRecord {
            top: LevelRecord::from_group(m.top())?,
            bot: LevelRecord::from_group(m.bot())?,
            res: matrix_entries(m.res().matrix())?,
            tr: matrix_entries(m.tr().matrix())?,
            weyl: matrix_entries(m.weyl().matrix())?,
        })
    }

    /// Rebuilds the functor, re-running axiom validation.
    pub fn to_functor(&self) -> Result<MackeyFunctor, ReportError> {
        let top = self.top.to_group()?;
        let bot = self.bot.to_group()?;
        let nt = top.num_generators();
        let nb = bot.num_generators();
        let res = GroupHom::new(top.clone(), bot.clone(), entries_matrix(nb, nt, &self.res)?)?;
        let tr = GroupHom::new(bot.clone(), top.clone(), entries_matrix(nt, nb, &self.tr)?)?;
        let weyl = GroupHom::new(bot.clone(), bot.clone(), entries_matrix(nb, nb, &self.weyl)?)?;
        Ok(MackeyFunctor::new(top, bot, res, tr, weyl)?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyRow {
    pub degree: i64,
    pub homology: MackeyRecord,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyTable {
    pub space: String,
    pub coefficient: String,
    pub reduced: bool,
    pub max_degree: i64,
    pub rows: Vec<HomologyRow>,
}

/// Runs the cellular engine on an expression and tabulates degrees
/// `0..=max_degree`.
pub fn homology_table(
    expr: &SpaceExpr,
    coeff: Coefficient,
    max_degree: usize,
    reduced: bool,
) -> Result<HomologyTable, ReportError> {
    let space = evaluate(expr, max_degree + 1)?;
    let functor = coeff.functor();
    let groups = bredon_homology_range(&space, &functor, max_degree, reduced)?;
    let rows = groups
        .iter()
        .enumerate()
        .map(|(n, h)| {
            Ok(HomologyRow {
                degree: n as i64,
                homology: MackeyRecord::from_functor(h)?,
            })
        })
        .collect::<Result<Vec<_>, ReportError>>()?;
    Ok(HomologyTable {
        space: expr.to_string(),
        coefficient: coeff.name().to_string(),
        reduced,
        max_degree: max_degree as i64,
        rows,
    })
}

pub fn table_to_json(t: &HomologyTable) -> String {
    let mut s = serde_json::to_string_pretty(t).expect("homology tables serialize");
    s.push('\n');
    s
}

fn group_label(l: &LevelRecord) -> String {
    let mut parts = Vec::new();
    if l.rank > 0 {
        parts.push(if l.rank == 1 {
            "Z".to_string()
        } else {
            format!("Z^{}", l.rank)
        });
    }
    for t in &l.torsion {
        parts.push(format!("Z/{t}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

fn matrix_label(m: &[Vec<i64>]) -> String {
    m.iter()
        .map(|row| {
            row.iter()
                .map(|e| e.to_string())
                .collect::<Vec<_>>()
                .join(" ")
        })
        .collect::<Vec<_>>()
        .join(";")
}

/// CSV rendering: one row per degree, matrices as space-separated entries
/// with `;` between rows, so no cell ever needs quoting.
pub fn table_to_csv(t: &HomologyTable) -> String {
    let mut out = String::from("degree,top,bot,res,tr,weyl\n");
    for row in &t.rows {
        let h = &row.homology;
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            row.degree,
            group_label(&h.top),
            group_label(&h.bot),
            matrix_label(&h.res),
            matrix_label(&h.tr),
            matrix_label(&h.weyl),
        ));
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRow {
    pub degree: i64,
    pub left: MackeyRecord,
    pub right: MackeyRecord,
    pub verdict: String,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check: String,
    pub space: String,
    pub max_degree: i64,
    pub rows: Vec<CheckRow>,
    pub passed: bool,
}

impl CheckReport {
    pub fn render_text(&self) -> String {
        let mut out = format!("{} on {}\n", self.check, self.space);
        for row in &self.rows {
            let status = if row.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!(
                "  degree {}: {} ({})\n",
                row.degree, status, row.verdict
            ));
        }
        out.push_str(&format!(
            "overall: {}\n",
            if self.passed { "PASS" } else { "FAIL" }
        ));
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("check reports serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::parse;
    use crate::mackey::{burnside_induced, isomorphic, norm_f2_induced};

    #[test]
    fn records_round_trip_with_validation() {
        for m in [
            norm_f2(),
            burnside(),
            constant_z(),
            norm_f2_induced(),
            burnside_induced(),
        ] {
            let rec = MackeyRecord::from_functor(&m).unwrap();
            let back = rec.to_functor().unwrap();
            assert_eq!(back, m);
            let json = serde_json::to_string(&rec).unwrap();
            let reparsed: MackeyRecord = serde_json::from_str(&json).unwrap();
            assert_eq!(reparsed.to_functor().unwrap(), m);
        }
    }

    #[test]
    fn norm_f2_record_shape() {
        let rec = MackeyRecord::from_functor(&norm_f2()).unwrap();
        assert_eq!(rec.top, LevelRecord { rank: 0, torsion: vec![4] });
        assert_eq!(rec.bot, LevelRecord { rank: 0, torsion: vec![2] });
        assert_eq!(rec.res, vec![vec![1]]);
        assert_eq!(rec.tr, vec![vec![2]]);
        assert_eq!(rec.weyl, vec![vec![1]]);
    }

    #[test]
    fn point_table_rows() {
        let t = homology_table(&parse("pt").unwrap(), Coefficient::B, 1, false).unwrap();
        assert_eq!(t.rows.len(), 2);
        assert!(isomorphic(&t.rows[0].homology.to_functor().unwrap(), &norm_f2()));
        let h1 = t.rows[1].homology.to_functor().unwrap();
        assert!(h1.is_zero());
    }

    #[test]
    fn tables_serialize_deterministically() {
        let e = parse("Ssigma").unwrap();
        let a = table_to_json(&homology_table(&e, Coefficient::B, 2, true).unwrap());
        let b = table_to_json(&homology_table(&e, Coefficient::B, 2, true).unwrap());
        assert_eq!(a, b);
        let c = table_to_csv(&homology_table(&e, Coefficient::B, 2, true).unwrap());
        let d = table_to_csv(&homology_table(&e, Coefficient::B, 2, true).unwrap());
        assert_eq!(c, d);
        assert!(c.starts_with("degree,top,bot,res,tr,weyl\n"));
    }

    #[test]
    fn csv_group_labels() {
        let l = LevelRecord { rank: 2, torsion: vec![2, 4] };
        assert_eq!(group_label(&l), "Z^2+Z/2+Z/4");
        assert_eq!(group_label(&LevelRecord { rank: 0, torsion: vec![] }), "0");
        assert_eq!(group_label(&LevelRecord { rank: 1, torsion: vec![3] }), "Z+Z/3");
    }
}
