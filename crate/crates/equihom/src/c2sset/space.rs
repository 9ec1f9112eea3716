//! Finite simplicial sets with an optional C2 action, stored as
//! nondegenerate simplices per dimension with explicit face data.

use std::collections::BTreeSet;

use thiserror::Error;

use super::simplex::{face, DegSimplex, SimplexRef};
use crate::intalg::IntAlgError;
use crate::mackey::MackeyError;

#[derive(Error, Debug)]
pub enum SsetError {
    #[error("invalid face data: {0}")]
    InvalidFaceData(String),
    #[error("simplicial identity d_{i} d_{j} = d_{jm1} d_{i} fails at {simplex}", jm1 = j - 1)]
    SimplicialIdentity { simplex: String, i: usize, j: usize },
    #[error("the involution is not simplicial or not involutive: {0}")]
    NotInvolution(String),
    #[error("space is not pointed as required: {0}")]
    NotPointed(String),
    #[error("not a subobject: {0}")]
    NotSubobject(String),
    #[error("unknown space `{0}`")]
    UnknownSpace(String),
    #[error("cell budget exceeded: {cells} cells, budget {budget}")]
    CellBudget { cells: usize, budget: usize },
    #[error("boundary does not square to zero: {0}")]
    ComplexError(String),
    #[error("chains stored through dimension {available} cannot compute homology at {degree}")]
    InsufficientDepth { available: usize, degree: usize },
    #[error("{0}")]
    Mackey(#[from] MackeyError),
    #[error("{0}")]
    IntAlg(#[from] IntAlgError),
}

/// Nondegenerate simplices per dimension, with faces of an n-simplex given
/// as possibly degenerate (n-1)-simplices. Dimension 0 entries have no
/// face data.
#[derive(Clone, Debug)]
pub struct FiniteSimplicialSet {
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<DegSimplex>>>,
}

impl FiniteSimplicialSet {
    /// Validates shapes and all simplicial identities `d_i d_j = d_{j-1} d_i`
    /// (i < j) on the stored data.
    pub fn new(
        names: Vec<Vec<String>>,
        faces: Vec<Vec<Vec<DegSimplex>>>,
    ) -> Result<Self, SsetError> {
        if faces.len() != names.len() {
            return Err(SsetError::InvalidFaceData(format!(
                "face table covers {} dimensions, names cover {}",
                faces.len(),
                names.len()
            )));
        }
        let space = FiniteSimplicialSet { names, faces };
        for n in 0..=space.dim_bound() {
            let count = space.names[n].len();
            if n == 0 {
                if !space.faces[0].is_empty() {
                    return Err(SsetError::InvalidFaceData(
                        "vertices must have empty face data".into(),
                    ));
                }
                continue;
            }
            if space.faces[n].len() != count {
                return Err(SsetError::InvalidFaceData(format!(
                    "dimension {n} has {count} simplices but {} face rows",
                    space.faces[n].len()
                )));
            }
            for (idx, fs) in space.faces[n].iter().enumerate() {
                if fs.len() != n + 1 {
                    return Err(SsetError::InvalidFaceData(format!(
                        "{} has {} faces, expected {}",
                        space.names[n][idx],
                        fs.len(),
                        n + 1
                    )));
                }
                for f in fs {
                    if f.target.dim >= space.names.len()
                        || f.target.idx >= space.names[f.target.dim].len()
                    {
                        return Err(SsetError::InvalidFaceData(format!(
                            "{} has a face over a missing target",
                            space.names[n][idx]
                        )));
                    }
                    if f.dim() + 1 != n {
                        return Err(SsetError::InvalidFaceData(format!(
                            "{} has a face of dimension {}, expected {}",
                            space.names[n][idx],
                            f.dim(),
                            n - 1
                        )));
                    }
                }
            }
        }
        space.check_simplicial_identities()?;
        Ok(space)
    }

    fn check_simplicial_identities(&self) -> Result<(), SsetError> {
        for n in 2..=self.dim_bound() {
            for idx in 0..self.names[n].len() {
                let z = DegSimplex::nondegenerate(SimplexRef { dim: n, idx });
                for j in 1..=n {
                    for i in 0..j {
                        let lhs = self.face(&self.face(&z, j), i);
                        let rhs = self.face(&self.face(&z, i), j - 1);
                        if lhs != rhs {
                            return Err(SsetError::SimplicialIdentity {
                                simplex: self.names[n][idx].clone(),
                                i,
                                j,
                            });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// Largest dimension with stored simplices (0 for a vertex-only set).
    pub fn dim_bound(&self) -> usize {
        self.names.len().saturating_sub(1)
    }

    pub fn count(&self, dim: usize) -> usize {
        self.names.get(dim).map_or(0, |v| v.len())
    }

    pub fn total_cells(&self) -> usize {
        self.names.iter().map(|v| v.len()).sum()
    }

    pub fn name(&self, r: SimplexRef) -> &str {
        &self.names[r.dim][r.idx]
    }

    pub fn names_at(&self, dim: usize) -> &[String] {
        self.names.get(dim).map_or(&[], |v| v.as_slice())
    }

    /// Stored faces of a nondegenerate simplex of positive dimension.
    pub fn faces_of(&self, r: SimplexRef) -> &[DegSimplex] {
        &self.faces[r.dim][r.idx]
    }

    /// `d_i` of a possibly degenerate simplex.
    pub fn face(&self, z: &DegSimplex, i: usize) -> DegSimplex {
        face(z, i, &|r, k| self.faces[r.dim][r.idx][k].clone())
    }

    pub fn euler_characteristic(&self) -> i64 {
        let mut chi = 0i64;
        for (n, v) in self.names.iter().enumerate() {
            let c = v.len() as i64;
            chi += if n % 2 == 0 { c } else { -c };
        }
        chi
    }
}

/// A finite simplicial set with a simplicial involution and an optional
/// fixed basepoint vertex.
#[derive(Clone, Debug)]
pub struct C2SimplicialSet {
    pub space: FiniteSimplicialSet,
    action: Vec<Vec<usize>>,
    basepoint: Option<usize>,
}

impl C2SimplicialSet {
    /// Validates that the action is an involution on every dimension,
    /// commutes with all stored faces, and fixes the basepoint.
    pub fn new(
        space: FiniteSimplicialSet,
        action: Vec<Vec<usize>>,
        basepoint: Option<usize>,
    ) -> Result<Self, SsetError> {
        if action.len() != space.names.len() {
            return Err(SsetError::NotInvolution(format!(
                "action covers {} dimensions, space has {}",
                action.len(),
                space.names.len()
            )));
        }
        for (n, perm) in action.iter().enumerate() {
            if perm.len() != space.count(n) {
                return Err(SsetError::NotInvolution(format!(
                    "action on dimension {n} has wrong length"
                )));
            }
            for (idx, &img) in perm.iter().enumerate() {
                if img >= perm.len() || perm[img] != idx {
                    return Err(SsetError::NotInvolution(format!(
                        "not an involution at {}",
                        space.names[n][idx]
                    )));
                }
            }
        }
        let c2 = C2SimplicialSet {
            space,
            action,
            basepoint,
        };
        for n in 1..=c2.space.dim_bound() {
            for idx in 0..c2.space.count(n) {
                let r = SimplexRef { dim: n, idx };
                for (i, f) in c2.space.faces_of(r).iter().enumerate() {
                    let af = c2.act_deg(f);
                    let fa = &c2.space.faces_of(c2.act(r))[i];
                    if af != *fa {
                        return Err(SsetError::NotInvolution(format!(
                            "action does not commute with d_{i} at {}",
                            c2.space.name(r)
                        )));
                    }
                }
            }
        }
        if let Some(b) = basepoint {
            if b >= c2.space.count(0) {
                return Err(SsetError::NotPointed("basepoint index out of range".into()));
            }
            if c2.action[0][b] != b {
                return Err(SsetError::NotPointed(format!(
                    "basepoint {} is not fixed by the action",
                    c2.space.names[0][b]
                )));
            }
        }
        Ok(c2)
    }

    pub fn trivial(space: FiniteSimplicialSet, basepoint: Option<usize>) -> Self {
        let action = space.names.iter().map(|v| (0..v.len()).collect()).collect();
        C2SimplicialSet::new(space, action, basepoint)
            .expect("trivial action is always a valid involution")
    }

    pub fn act(&self, r: SimplexRef) -> SimplexRef {
        SimplexRef {
            dim: r.dim,
            idx: self.action[r.dim][r.idx],
        }
    }

    /// Action on a possibly degenerate simplex: same word, acted target.
    pub fn act_deg(&self, z: &DegSimplex) -> DegSimplex {
        DegSimplex {
            word: z.word.clone(),
            target: self.act(z.target),
        }
    }

    pub fn is_fixed(&self, r: SimplexRef) -> bool {
        self.act(r) == r
    }

    /// True when the involution fixes every simplex.
    pub fn is_trivial_action(&self) -> bool {
        self.action
            .iter()
            .all(|level| level.iter().enumerate().all(|(i, &j)| i == j))
    }

    pub fn basepoint(&self) -> Option<SimplexRef> {
        self.basepoint.map(|idx| SimplexRef { dim: 0, idx })
    }

    pub fn require_basepoint(&self) -> Result<SimplexRef, SsetError> {
        self.basepoint()
            .ok_or_else(|| SsetError::NotPointed("a basepoint is required".into()))
    }

    pub fn fixed_count(&self, dim: usize) -> usize {
        (0..self.space.count(dim))
            .filter(|&idx| self.is_fixed(SimplexRef { dim, idx }))
            .count()
    }
}

/// Incremental construction of a [`FiniteSimplicialSet`]; `build` runs the
/// full validation.
#[derive(Default)]
pub struct SimplicialSetBuilder {
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<DegSimplex>>>,
}

impl SimplicialSetBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(&mut self, name: &str) -> SimplexRef {
        self.simplex(0, name, vec![])
    }

    pub fn simplex(&mut self, dim: usize, name: &str, faces: Vec<DegSimplex>) -> SimplexRef {
        while self.names.len() <= dim {
            self.names.push(vec![]);
            self.faces.push(vec![]);
        }
        self.names[dim].push(name.to_string());
        if dim > 0 {
            self.faces[dim].push(faces);
        }
        SimplexRef {
            dim,
            idx: self.names[dim].len() - 1,
        }
    }

    pub fn build(self) -> Result<FiniteSimplicialSet, SsetError> {
        FiniteSimplicialSet::new(self.names, self.faces)
    }
}

/// A set of nondegenerate simplices of an ambient space, per dimension.
/// `validate` checks closure under faces and under the action.
#[derive(Clone, Debug, Default)]
pub struct SubObject {
    pub members: Vec<BTreeSet<usize>>,
}

impl SubObject {
    pub fn empty(dims: usize) -> Self {
        SubObject {
            members: vec![BTreeSet::new(); dims],
        }
    }

    pub fn contains(&self, r: SimplexRef) -> bool {
        self.members.get(r.dim).is_some_and(|s| s.contains(&r.idx))
    }

    pub fn insert(&mut self, r: SimplexRef) {
        while self.members.len() <= r.dim {
            self.members.push(BTreeSet::new());
        }
        self.members[r.dim].insert(r.idx);
    }

    pub fn is_empty(&self) -> bool {
        self.members.iter().all(|s| s.is_empty())
    }

    pub fn validate(&self, ambient: &C2SimplicialSet) -> Result<(), SsetError> {
        for (n, s) in self.members.iter().enumerate() {
            for &idx in s {
                if idx >= ambient.space.count(n) {
                    return Err(SsetError::NotSubobject(format!(
                        "member index {idx} out of range in dimension {n}"
                    )));
                }
                let r = SimplexRef { dim: n, idx };
                if !self.contains(ambient.act(r)) {
                    return Err(SsetError::NotSubobject(format!(
                        "{} is a member but its image under the action is not",
                        ambient.space.name(r)
                    )));
                }
                if n > 0 {
                    for f in ambient.space.faces_of(r) {
                        if !self.contains(f.target) {
                            return Err(SsetError::NotSubobject(format!(
                                "{} is a member but its face {} is not",
                                ambient.space.name(r),
                                ambient.space.name(f.target)
                            )));
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Reads the cell budget from EQUIHOM_MAX_CELLS, defaulting to 200000.
pub fn cell_budget() -> usize {
    std::env::var("EQUIHOM_MAX_CELLS")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(200_000)
}

/// Fails if the space exceeds the given cell budget.
pub fn check_budget(space: &FiniteSimplicialSet, budget: usize) -> Result<(), SsetError> {
    let cells = space.total_cells();
    if cells > budget {
        return Err(SsetError::CellBudget { cells, budget });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn point() -> FiniteSimplicialSet {
        FiniteSimplicialSet::new(vec![vec!["v".into()]], vec![vec![]]).unwrap()
    }

    #[test]
    fn rejects_wrong_face_count() {
        let names = vec![vec!["v".into()], vec!["e".into()]];
        let faces = vec![
            vec![],
            vec![vec![DegSimplex::nondegenerate(SimplexRef { dim: 0, idx: 0 })]],
        ];
        assert!(matches!(
            FiniteSimplicialSet::new(names, faces),
            Err(SsetError::InvalidFaceData(_))
        ));
    }

    #[test]
    fn rejects_broken_simplicial_identity() {
        // A 2-simplex whose faces have mismatched endpoints.
        let v = |idx| DegSimplex::nondegenerate(SimplexRef { dim: 0, idx });
        let e = |idx| DegSimplex::nondegenerate(SimplexRef { dim: 1, idx });
        let names = vec![
            vec!["a".into(), "b".into(), "c".into()],
            vec!["ab".into(), "ac".into(), "bc".into()],
            vec!["t".into()],
        ];
        let faces = vec![
            vec![],
            vec![vec![v(1), v(0)], vec![v(2), v(0)], vec![v(2), v(1)]],
            // d_0 = bc, d_1 = ab (wrong: should be ac), d_2 = ab.
            vec![vec![e(2), e(0), e(0)]],
        ];
        assert!(matches!(
            FiniteSimplicialSet::new(names, faces),
            Err(SsetError::SimplicialIdentity { .. })
        ));
    }

    #[test]
    fn rejects_non_involution_and_moved_basepoint() {
        let names = vec![vec!["a".into(), "b".into(), "c".into()]];
        let sp = FiniteSimplicialSet::new(names, vec![vec![]]).unwrap();
        assert!(matches!(
            C2SimplicialSet::new(sp.clone(), vec![vec![1, 2, 0]], None),
            Err(SsetError::NotInvolution(_))
        ));
        assert!(matches!(
            C2SimplicialSet::new(sp, vec![vec![1, 0, 2]], Some(0)),
            Err(SsetError::NotPointed(_))
        ));
    }

    #[test]
    fn subobject_closure_is_checked() {
        let v = |idx| DegSimplex::nondegenerate(SimplexRef { dim: 0, idx });
        let names = vec![vec!["a".into(), "b".into()], vec!["ab".into()]];
        let faces = vec![vec![], vec![vec![v(1), v(0)]]];
        let sp = FiniteSimplicialSet::new(names, faces).unwrap();
        let c2 = C2SimplicialSet::trivial(sp, None);
        let mut sub = SubObject::empty(2);
        sub.insert(SimplexRef { dim: 1, idx: 0 });
        assert!(matches!(
            sub.validate(&c2),
            Err(SsetError::NotSubobject(_))
        ));
        sub.insert(SimplexRef { dim: 0, idx: 0 });
        sub.insert(SimplexRef { dim: 0, idx: 1 });
        assert!(sub.validate(&c2).is_ok());
    }

    #[test]
    fn budget_check_reports_cells() {
        let p = point();
        assert!(check_budget(&p, 1).is_ok());
        assert!(matches!(
            check_budget(&p, 0),
            Err(SsetError::CellBudget { cells: 1, budget: 0 })
        ));
    }
}
