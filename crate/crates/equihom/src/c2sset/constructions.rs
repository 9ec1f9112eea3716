//! Products, coinduction, quotients, and the pointed constructions built
//! from them.

use std::collections::BTreeMap;

use super::catalog;
use super::simplex::{DegSimplex, SimplexRef};
use super::space::{C2SimplicialSet, FiniteSimplicialSet, SsetError, SubObject};

/// Degeneracy-prefixed display name of a possibly degenerate simplex.
pub(super) fn deg_label(word: &[usize], name: &str) -> String {
    if word.is_empty() {
        return name.to_string();
    }
    let mut s = String::new();
    for &j in word {
        s.push_str(&format!("s{j}"));
    }
    s.push('.');
    s.push_str(name);
    s
}

/// All simplices of dimension `n` (degenerate or not) of a space.
/// Deterministic order: target dimension, target index, then the
/// degeneracy word as an ascending bitmask.
pub(super) fn deg_simplices(space: &FiniteSimplicialSet, n: usize) -> Vec<DegSimplex> {
    assert!(n < 64, "dimension bound too large for subset enumeration");
    let mut out = Vec::new();
    for d in 0..=n.min(space.dim_bound()) {
        let extra = (n - d) as u32;
        for idx in 0..space.count(d) {
            let target = SimplexRef { dim: d, idx };
            for mask in 0u64..(1u64 << n) {
                if mask.count_ones() != extra {
                    continue;
                }
                let word: Vec<usize> = (0..n).rev().filter(|j| mask >> j & 1 == 1).collect();
                out.push(DegSimplex { word, target });
            }
        }
    }
    out
}

/// Strips every degeneracy direction shared by all entries, outermost
/// (largest) first. Returns the stripped word; `parts` is left at the
/// jointly nondegenerate base.
pub(super) fn peel_common(parts: &mut [DegSimplex]) -> Vec<usize> {
    let mut peeled = Vec::new();
    loop {
        let j = parts[0]
            .word
            .iter()
            .copied()
            .find(|j| parts[1..].iter().all(|p| p.word.contains(j)));
        match j {
            Some(j) => {
                for p in parts.iter_mut() {
                    *p = p.strip(j);
                }
                peeled.push(j);
            }
            None => return peeled,
        }
    }
}

/// Degreewise product of finitely many factors: nondegenerate n-simplices
/// are tuples of n-simplices of the factors with no common degeneracy
/// direction.
pub(super) struct ProductData {
    names: Vec<Vec<String>>,
    faces: Vec<Vec<Vec<DegSimplex>>>,
    pub cells: Vec<Vec<Vec<DegSimplex>>>,
    index: Vec<BTreeMap<Vec<DegSimplex>, usize>>,
}

impl ProductData {
    pub fn build(factors: &[&FiniteSimplicialSet], dim_bound: usize) -> ProductData {
        assert!(!factors.is_empty());
        let mut data = ProductData {
            names: vec![Vec::new(); dim_bound + 1],
            faces: vec![Vec::new(); dim_bound + 1],
            cells: vec![Vec::new(); dim_bound + 1],
            index: vec![BTreeMap::new(); dim_bound + 1],
        };
        for n in 0..=dim_bound {
            let per_factor: Vec<Vec<DegSimplex>> =
                factors.iter().map(|f| deg_simplices(f, n)).collect();
            if per_factor.iter().any(|v| v.is_empty()) {
                continue;
            }
            let mut odo = vec![0usize; factors.len()];
            'tuples: loop {
                let parts: Vec<DegSimplex> = odo
                    .iter()
                    .enumerate()
                    .map(|(f, &i)| per_factor[f][i].clone())
                    .collect();
                let common = parts[0]
                    .word
                    .iter()
                    .any(|j| parts[1..].iter().all(|p| p.word.contains(j)));
                if !common {
                    let name = format!(
                        "({})",
                        parts
                            .iter()
                            .enumerate()
                            .map(|(f, p)| deg_label(&p.word, factors[f].name(p.target)))
                            .collect::<Vec<_>>()
                            .join(",")
                    );
                    let idx = data.names[n].len();
                    data.names[n].push(name);
                    data.cells[n].push(parts.clone());
                    data.index[n].insert(parts, idx);
                }
                for f in (0..factors.len()).rev() {
                    odo[f] += 1;
                    if odo[f] < per_factor[f].len() {
                        continue 'tuples;
                    }
                    odo[f] = 0;
                    if f == 0 {
                        break 'tuples;
                    }
                }
            }
        }
        for n in 1..=dim_bound {
            for cell in &data.cells[n] {
                let mut fs = Vec::with_capacity(n + 1);
                for i in 0..=n {
                    let mut parts: Vec<DegSimplex> = cell
                        .iter()
                        .enumerate()
                        .map(|(f, p)| factors[f].face(p, i))
                        .collect();
                    let word = peel_common(&mut parts);
                    let target = data.lookup(&parts);
                    fs.push(DegSimplex { word, target });
                }
                data.faces[n].push(fs);
            }
        }
        data
    }

    pub fn lookup(&self, parts: &[DegSimplex]) -> SimplexRef {
        let dim = parts[0].dim();
        let idx = *self.index[dim]
            .get(parts)
            .expect("tuple enumeration is complete below the dimension bound");
        SimplexRef { dim, idx }
    }

    /// Finishes into a validated space plus an action defined on cells.
    pub fn into_c2(
        self,
        act_cell: impl Fn(&[DegSimplex]) -> Vec<DegSimplex>,
        basepoint_cell: Option<Vec<DegSimplex>>,
    ) -> Result<C2SimplicialSet, SsetError> {
        let mut action: Vec<Vec<usize>> = Vec::with_capacity(self.cells.len());
        for dim_cells in &self.cells {
            let mut perm = Vec::with_capacity(dim_cells.len());
            for cell in dim_cells {
                perm.push(self.lookup(&act_cell(cell)).idx);
            }
            action.push(perm);
        }
        let basepoint = basepoint_cell.map(|c| self.lookup(&c).idx);
        let space = FiniteSimplicialSet::new(self.names, self.faces)?;
        C2SimplicialSet::new(space, action, basepoint)
    }
}

/// Product of two C2-simplicial sets with the diagonal action, truncated
/// at `dim_bound`. Pointed when both factors are.
pub fn product(
    x: &C2SimplicialSet,
    y: &C2SimplicialSet,
    dim_bound: usize,
) -> Result<C2SimplicialSet, SsetError> {
    product_with_data(x, y, dim_bound).map(|(c2, _)| c2)
}

fn product_with_data(
    x: &C2SimplicialSet,
    y: &C2SimplicialSet,
    dim_bound: usize,
) -> Result<(C2SimplicialSet, Vec<Vec<Vec<DegSimplex>>>), SsetError> {
    let data = ProductData::build(&[&x.space, &y.space], dim_bound);
    let cells = data.cells.clone();
    let basepoint = match (x.basepoint(), y.basepoint()) {
        (Some(a), Some(b)) => Some(vec![
            DegSimplex::nondegenerate(a),
            DegSimplex::nondegenerate(b),
        ]),
        _ => None,
    };
    let c2 = data.into_c2(
        |parts| vec![x.act_deg(&parts[0]), y.act_deg(&parts[1])],
        basepoint,
    )?;
    Ok((c2, cells))
}

/// The domain of a mapping space used for fat wedges: k free orbits,
/// optionally together with one fixed point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MapDomain {
    FreeOrbits(usize),
    FreeOrbitsPlusFixed(usize),
}

impl MapDomain {
    fn coordinates(self) -> usize {
        match self {
            MapDomain::FreeOrbits(k) => 2 * k,
            MapDomain::FreeOrbitsPlusFixed(k) => 2 * k + 1,
        }
    }

    fn orbit_pairs(self) -> usize {
        match self {
            MapDomain::FreeOrbits(k) | MapDomain::FreeOrbitsPlusFixed(k) => k,
        }
    }

    /// The involution on coordinates: each free orbit swaps its pair of
    /// coordinates, the fixed point stays.
    fn permute(self, i: usize) -> usize {
        let k = self.orbit_pairs();
        if i < k {
            i + k
        } else if i < 2 * k {
            i - k
        } else {
            i
        }
    }
}

/// Map(T, x) for a plain simplicial set x: the coordinate-indexed power
/// with the involution permuting coordinates by the T-action.
pub fn map_space(
    x: &FiniteSimplicialSet,
    basepoint: Option<usize>,
    t: MapDomain,
    dim_bound: usize,
) -> Result<C2SimplicialSet, SsetError> {
    map_space_with_data(x, basepoint, t, dim_bound).map(|(c2, _)| c2)
}

fn map_space_with_data(
    x: &FiniteSimplicialSet,
    basepoint: Option<usize>,
    t: MapDomain,
    dim_bound: usize,
) -> Result<(C2SimplicialSet, Vec<Vec<Vec<DegSimplex>>>), SsetError> {
    let m = t.coordinates();
    if m == 0 {
        let mut names = vec![vec!["()".to_string()]];
        names.extend(std::iter::repeat_with(Vec::new).take(dim_bound));
        let mut faces = vec![Vec::new()];
        faces.extend(std::iter::repeat_with(Vec::new).take(dim_bound));
        let space = FiniteSimplicialSet::new(names, faces)?;
        let action = space_identity(&space);
        let c2 = C2SimplicialSet::new(space, action, Some(0))?;
        return Ok((c2, vec![vec![vec![]]]));
    }
    let factors: Vec<&FiniteSimplicialSet> = (0..m).map(|_| x).collect();
    let data = ProductData::build(&factors, dim_bound);
    let cells = data.cells.clone();
    let basepoint_cell = basepoint.map(|b| {
        vec![DegSimplex::nondegenerate(SimplexRef { dim: 0, idx: b }); m]
    });
    let c2 = data.into_c2(
        |parts| (0..m).map(|i| parts[t.permute(i)].clone()).collect(),
        basepoint_cell,
    )?;
    Ok((c2, cells))
}

fn space_identity(space: &FiniteSimplicialSet) -> Vec<Vec<usize>> {
    (0..=space.dim_bound())
        .map(|n| (0..space.count(n)).collect())
        .collect()
}

/// Coinduction of a plain simplicial set: x times x with the swap
/// involution. Fixed simplices are exactly the diagonal ones.
pub fn coinduce(
    x: &FiniteSimplicialSet,
    basepoint: Option<usize>,
    dim_bound: usize,
) -> Result<C2SimplicialSet, SsetError> {
    map_space(x, basepoint, MapDomain::FreeOrbits(1), dim_bound)
}

/// The fat wedge inside Map(T, x): all tuples with some coordinate at the
/// basepoint. Returns the ambient mapping space and the subobject.
pub fn fat_wedge(
    x: &FiniteSimplicialSet,
    basepoint: Option<usize>,
    t: MapDomain,
    dim_bound: usize,
) -> Result<(C2SimplicialSet, SubObject), SsetError> {
    let bp = basepoint.ok_or_else(|| {
        SsetError::NotPointed("fat wedge requires a pointed space".into())
    })?;
    let (ambient, cells) = map_space_with_data(x, Some(bp), t, dim_bound)?;
    let bp_ref = SimplexRef { dim: 0, idx: bp };
    let mut sub = SubObject::empty(cells.len());
    for (n, dim_cells) in cells.iter().enumerate() {
        for (idx, parts) in dim_cells.iter().enumerate() {
            if parts.iter().any(|p| p.target == bp_ref) {
                sub.insert(SimplexRef { dim: n, idx });
            }
        }
    }
    sub.validate(&ambient)?;
    Ok((ambient, sub))
}

/// Norm of a plain pointed simplicial set: the coinduced square modulo
/// the fat wedge of the two axes.
pub fn norm_space(
    x: &FiniteSimplicialSet,
    basepoint: Option<usize>,
    dim_bound: usize,
) -> Result<C2SimplicialSet, SsetError> {
    let (ambient, sub) = fat_wedge(x, basepoint, MapDomain::FreeOrbits(1), dim_bound)?;
    quotient(&ambient, &sub)
}

/// Collapses a nonempty subobject to a single fixed basepoint vertex `*`.
pub fn quotient(x: &C2SimplicialSet, sub: &SubObject) -> Result<C2SimplicialSet, SsetError> {
    sub.validate(x)?;
    if sub.is_empty() {
        return Err(SsetError::NotSubobject(
            "cannot collapse an empty subobject".into(),
        ));
    }
    let dims = x.space.dim_bound();
    // Survivor reindexing: dimension 0 reserves index 0 for `*`.
    let mut new_idx: Vec<Vec<Option<usize>>> = Vec::with_capacity(dims + 1);
    let mut names: Vec<Vec<String>> = Vec::with_capacity(dims + 1);
    for n in 0..=dims {
        let mut map = Vec::with_capacity(x.space.count(n));
        let mut dim_names = Vec::new();
        if n == 0 {
            dim_names.push("*".to_string());
        }
        for idx in 0..x.space.count(n) {
            let r = SimplexRef { dim: n, idx };
            if sub.contains(r) {
                map.push(None);
            } else {
                map.push(Some(dim_names.len()));
                dim_names.push(x.space.name(r).to_string());
            }
        }
        new_idx.push(map);
        names.push(dim_names);
    }
    let star = SimplexRef { dim: 0, idx: 0 };
    let mut faces: Vec<Vec<Vec<DegSimplex>>> = vec![Vec::new(); dims + 1];
    for n in 1..=dims {
        for idx in 0..x.space.count(n) {
            if new_idx[n][idx].is_none() {
                continue;
            }
            let mut fs = Vec::with_capacity(n + 1);
            for f in x.space.faces_of(SimplexRef { dim: n, idx }) {
                let mapped = match new_idx[f.target.dim][f.target.idx] {
                    Some(t) => DegSimplex {
                        word: f.word.clone(),
                        target: SimplexRef {
                            dim: f.target.dim,
                            idx: t,
                        },
                    },
                    // Collapsed face: the total degeneracy of `*`.
                    None => DegSimplex {
                        word: (0..f.dim()).rev().collect(),
                        target: star,
                    },
                };
                fs.push(mapped);
            }
            faces[n].push(fs);
        }
    }
    let mut action: Vec<Vec<usize>> = Vec::with_capacity(dims + 1);
    for n in 0..=dims {
        let mut perm = Vec::with_capacity(names[n].len());
        if n == 0 {
            perm.push(0);
        }
        for idx in 0..x.space.count(n) {
            if new_idx[n][idx].is_some() {
                let img = x.act(SimplexRef { dim: n, idx }).idx;
                perm.push(new_idx[n][img].expect("subobject is action-closed"));
            }
        }
        action.push(perm);
    }
    let space = FiniteSimplicialSet::new(names, faces)?;
    C2SimplicialSet::new(space, action, Some(0))
}

/// Disjoint union; names are prefixed to keep them distinct. Unpointed.
pub fn disjoint_union(
    x: &C2SimplicialSet,
    y: &C2SimplicialSet,
) -> Result<C2SimplicialSet, SsetError> {
    let dims = x.space.dim_bound().max(y.space.dim_bound());
    let mut names: Vec<Vec<String>> = vec![Vec::new(); dims + 1];
    let mut faces: Vec<Vec<Vec<DegSimplex>>> = vec![Vec::new(); dims + 1];
    let mut action: Vec<Vec<usize>> = vec![Vec::new(); dims + 1];
    for n in 0..=dims {
        for idx in 0..x.space.count(n) {
            names[n].push(format!("l.{}", x.space.names_at(n)[idx]));
            action[n].push(x.act(SimplexRef { dim: n, idx }).idx);
        }
        for idx in 0..y.space.count(n) {
            names[n].push(format!("r.{}", y.space.names_at(n)[idx]));
            action[n].push(x.space.count(n) + y.act(SimplexRef { dim: n, idx }).idx);
        }
        if n > 0 {
            for idx in 0..x.space.count(n) {
                faces[n].push(x.space.faces_of(SimplexRef { dim: n, idx }).to_vec());
            }
            for idx in 0..y.space.count(n) {
                let shifted = y
                    .space
                    .faces_of(SimplexRef { dim: n, idx })
                    .iter()
                    .map(|f| DegSimplex {
                        word: f.word.clone(),
                        target: SimplexRef {
                            dim: f.target.dim,
                            idx: x.space.count(f.target.dim) + f.target.idx,
                        },
                    })
                    .collect();
                faces[n].push(shifted);
            }
        }
    }
    let space = FiniteSimplicialSet::new(names, faces)?;
    C2SimplicialSet::new(space, action, None)
}

/// Wedge of two pointed spaces: disjoint union with the basepoints
/// collapsed together.
pub fn wedge(x: &C2SimplicialSet, y: &C2SimplicialSet) -> Result<C2SimplicialSet, SsetError> {
    let bx = x.require_basepoint()?;
    let by = y.require_basepoint()?;
    let du = disjoint_union(x, y)?;
    let mut sub = SubObject::empty(du.space.dim_bound() + 1);
    sub.insert(SimplexRef { dim: 0, idx: bx.idx });
    sub.insert(SimplexRef {
        dim: 0,
        idx: x.space.count(0) + by.idx,
    });
    quotient(&du, &sub)
}

/// Smash product of two pointed spaces: the product modulo the wedge axes.
pub fn smash(
    x: &C2SimplicialSet,
    y: &C2SimplicialSet,
    dim_bound: usize,
) -> Result<C2SimplicialSet, SsetError> {
    let bx = x.require_basepoint()?;
    let by = y.require_basepoint()?;
    let (ambient, cells) = product_with_data(x, y, dim_bound)?;
    let mut sub = SubObject::empty(cells.len());
    for (n, dim_cells) in cells.iter().enumerate() {
        for (idx, parts) in dim_cells.iter().enumerate() {
            if parts[0].target == bx || parts[1].target == by {
                sub.insert(SimplexRef { dim: n, idx });
            }
        }
    }
    sub.validate(&ambient)?;
    quotient(&ambient, &sub)
}

/// Adds a disjoint fixed basepoint.
pub fn disjoint_basepoint(x: &C2SimplicialSet) -> Result<C2SimplicialSet, SsetError> {
    let mut names: Vec<Vec<String>> = Vec::new();
    let mut faces: Vec<Vec<Vec<DegSimplex>>> = Vec::new();
    let mut action: Vec<Vec<usize>> = Vec::new();
    for n in 0..=x.space.dim_bound() {
        names.push(x.space.names_at(n).to_vec());
        action.push((0..x.space.count(n)).map(|i| x.act(SimplexRef { dim: n, idx: i }).idx).collect());
        if n == 0 {
            faces.push(Vec::new());
        } else {
            faces.push((0..x.space.count(n))
                .map(|i| x.space.faces_of(SimplexRef { dim: n, idx: i }).to_vec())
                .collect());
        }
    }
    let bp = names[0].len();
    names[0].push("+".to_string());
    action[0].push(bp);
    let space = FiniteSimplicialSet::new(names, faces)?;
    C2SimplicialSet::new(space, action, Some(bp))
}

/// Suspension by the trivial circle: smash with S1.
pub fn suspend_trivial(
    x: &C2SimplicialSet,
    dim_bound: usize,
) -> Result<C2SimplicialSet, SsetError> {
    smash(x, &catalog::s1(), dim_bound)
}

/// Suspension by the sign circle: smash with Ssigma.
pub fn suspend_sigma(
    x: &C2SimplicialSet,
    dim_bound: usize,
) -> Result<C2SimplicialSet, SsetError> {
    smash(x, &catalog::s_sigma(), dim_bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c2sset::catalog::{c2, pt, rp2, s0, s1, s_sigma};

    #[test]
    fn product_with_point_matches_factor() {
        let p = product(&pt(), &s1(), 3).unwrap();
        assert_eq!(p.space.count(0), 1);
        assert_eq!(p.space.count(1), 1);
        assert_eq!(p.space.count(2), 0);
    }

    #[test]
    fn torus_counts_and_shuffles() {
        let t = product(&s1(), &s1(), 3).unwrap();
        assert_eq!(
            (t.space.count(0), t.space.count(1), t.space.count(2)),
            (1, 3, 2)
        );
        assert_eq!(t.space.count(3), 0);
        assert_eq!(t.space.euler_characteristic(), 0);
    }

    #[test]
    fn coinduced_circle_fixes_exactly_the_diagonal() {
        let t = coinduce(&s1().space, Some(0), 3).unwrap();
        assert_eq!(t.fixed_count(0), 1);
        assert_eq!(t.fixed_count(1), 1);
        assert_eq!(t.fixed_count(2), 0);
        let fixed_edge = (0..t.space.count(1))
            .find(|&i| t.is_fixed(SimplexRef { dim: 1, idx: i }))
            .unwrap();
        assert_eq!(t.space.name(SimplexRef { dim: 1, idx: fixed_edge }), "(e,e)");
    }

    #[test]
    fn coinduced_pair_of_points_fixes_the_diagonal() {
        let q = coinduce(&c2().space, None, 2).unwrap();
        assert_eq!(q.space.count(0), 4);
        assert_eq!(q.fixed_count(0), 2);
    }

    #[test]
    fn smash_with_s0_keeps_counts() {
        let s = smash(&s1(), &s0(), 3).unwrap();
        assert_eq!(s.space.count(0), 1);
        assert_eq!(s.space.count(1), 1);
        assert_eq!(s.space.count(2), 0);
    }

    #[test]
    fn sigma_suspension_of_s0_is_the_sign_sphere() {
        let s = suspend_sigma(&s0(), 2).unwrap();
        assert_eq!((s.space.count(0), s.space.count(1)), (2, 2));
        assert_eq!(s.fixed_count(0), 2);
        assert_eq!(s.fixed_count(1), 0);
        let model = s_sigma();
        assert_eq!(model.fixed_count(0), 2);
        assert_eq!(model.fixed_count(1), 0);
    }

    #[test]
    fn wedge_of_circles_matches_builtin() {
        let w = wedge(&s1(), &s1()).unwrap();
        assert_eq!((w.space.count(0), w.space.count(1)), (1, 2));
        assert!(w.basepoint().is_some());
    }

    #[test]
    fn norm_of_circle_is_a_twisted_two_sphere() {
        let n = norm_space(&s1().space, Some(0), 3).unwrap();
        assert_eq!(
            (n.space.count(0), n.space.count(1), n.space.count(2)),
            (1, 1, 2)
        );
        // The surviving edge is the diagonal, fixed by the swap; the two
        // 2-cells are swapped.
        assert_eq!(n.fixed_count(0), 1);
        assert_eq!(n.fixed_count(1), 1);
        assert_eq!(n.fixed_count(2), 0);
    }

    #[test]
    fn fat_wedge_requires_a_basepoint() {
        assert!(matches!(
            fat_wedge(&c2().space, None, MapDomain::FreeOrbits(1), 2),
            Err(SsetError::NotPointed(_))
        ));
    }

    #[test]
    fn quotient_of_everything_is_a_point() {
        let x = s_sigma();
        let mut sub = SubObject::empty(x.space.dim_bound() + 1);
        for n in 0..=x.space.dim_bound() {
            for idx in 0..x.space.count(n) {
                sub.insert(SimplexRef { dim: n, idx });
            }
        }
        let q = quotient(&x, &sub).unwrap();
        assert_eq!(q.space.total_cells(), 1);
    }

    #[test]
    fn disjoint_basepoint_adds_one_fixed_vertex() {
        let plus = disjoint_basepoint(&c2()).unwrap();
        assert_eq!(plus.space.count(0), 3);
        assert_eq!(plus.fixed_count(0), 1);
        assert!(plus.basepoint().is_some());
    }

    #[test]
    fn coinduced_projective_plane_dimensions() {
        let q = coinduce(&rp2().space, Some(0), 4).unwrap();
        assert_eq!(q.space.count(4), 600);
        assert_eq!(q.space.count(5), 0);
    }
}
