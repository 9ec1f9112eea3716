//! Signed James stages: words in a pointed C2-space with the
//! reversal-and-act involution.

use std::collections::BTreeMap;

use super::catalog::s0;
use super::constructions::{
    deg_label, deg_simplices, fat_wedge, peel_common, quotient, smash, MapDomain,
};
use super::simplex::{DegSimplex, SimplexRef};
use super::space::{C2SimplicialSet, FiniteSimplicialSet, SsetError, SubObject};

struct JamesData {
    c2: C2SimplicialSet,
    /// Word length of each cell, per dimension.
    lengths: Vec<Vec<usize>>,
}

/// Cells of dimension m are words of at most n letters, where a letter is
/// a simplex of x not degenerate on the basepoint, subject to the word
/// having no common degeneracy direction. Faces act letterwise and drop
/// letters that land on the basepoint.
fn james_with_data(
    x: &C2SimplicialSet,
    n: usize,
    dim_bound: usize,
) -> Result<JamesData, SsetError> {
    let bp = x.require_basepoint()?;
    let mut names: Vec<Vec<String>> = vec![Vec::new(); dim_bound + 1];
    let mut faces: Vec<Vec<Vec<DegSimplex>>> = vec![Vec::new(); dim_bound + 1];
    let mut cells: Vec<Vec<Vec<DegSimplex>>> = vec![Vec::new(); dim_bound + 1];
    let mut index: Vec<BTreeMap<Vec<DegSimplex>, usize>> = vec![BTreeMap::new(); dim_bound + 1];
    for m in 0..=dim_bound {
        let letters: Vec<DegSimplex> = deg_simplices(&x.space, m)
            .into_iter()
            .filter(|z| z.target != bp)
            .collect();
        let mut push = |word: Vec<DegSimplex>, m: usize| {
            let name = if word.is_empty() {
                "1".to_string()
            } else {
                word.iter()
                    .map(|z| deg_label(&z.word, x.space.name(z.target)))
                    .collect::<Vec<_>>()
                    .join("|")
            };
            let idx = names[m].len();
            names[m].push(name);
            cells[m].push(word.clone());
            index[m].insert(word, idx);
        };
        if m == 0 {
            push(vec![], 0);
        }
        for k in 1..=n {
            if letters.is_empty() {
                break;
            }
            let mut odo = vec![0usize; k];
            'words: loop {
                let word: Vec<DegSimplex> = odo.iter().map(|&i| letters[i].clone()).collect();
                let common = word[0]
                    .word
                    .iter()
                    .any(|j| word[1..].iter().all(|z| z.word.contains(j)));
                if !common {
                    push(word, m);
                }
                for pos in (0..k).rev() {
                    odo[pos] += 1;
                    if odo[pos] < letters.len() {
                        continue 'words;
                    }
                    odo[pos] = 0;
                    if pos == 0 {
                        break 'words;
                    }
                }
            }
        }
    }
    let lookup = |word: &[DegSimplex]| -> SimplexRef {
        let dim = if word.is_empty() { 0 } else { word[0].dim() };
        SimplexRef {
            dim,
            idx: *index[dim]
                .get(word)
                .expect("word enumeration is complete below the dimension bound"),
        }
    };
    for m in 1..=dim_bound {
        for cell in &cells[m] {
            let mut fs = Vec::with_capacity(m + 1);
            for i in 0..=m {
                let mut parts: Vec<DegSimplex> = cell
                    .iter()
                    .map(|z| x.space.face(z, i))
                    .filter(|f| f.target != bp)
                    .collect();
                let f = if parts.is_empty() {
                    DegSimplex {
                        word: (0..m - 1).rev().collect(),
                        target: SimplexRef { dim: 0, idx: 0 },
                    }
                } else {
                    let peeled = peel_common(&mut parts);
                    DegSimplex {
                        word: peeled,
                        target: lookup(&parts),
                    }
                };
                fs.push(f);
            }
            faces[m].push(fs);
        }
    }
    let mut action: Vec<Vec<usize>> = Vec::with_capacity(dim_bound + 1);
    let mut lengths: Vec<Vec<usize>> = Vec::with_capacity(dim_bound + 1);
    for m in 0..=dim_bound {
        let mut perm = Vec::with_capacity(cells[m].len());
        for cell in &cells[m] {
            let reversed: Vec<DegSimplex> = cell.iter().rev().map(|z| x.act_deg(z)).collect();
            perm.push(lookup(&reversed).idx);
        }
        action.push(perm);
        lengths.push(cells[m].iter().map(|c| c.len()).collect());
    }
    let space = FiniteSimplicialSet::new(names, faces)?;
    let c2 = C2SimplicialSet::new(space, action, Some(0))?;
    Ok(JamesData { c2, lengths })
}

/// The n-th signed James stage of a pointed C2-space.
pub fn james_stage(
    x: &C2SimplicialSet,
    n: usize,
    dim_bound: usize,
) -> Result<C2SimplicialSet, SsetError> {
    james_with_data(x, n, dim_bound).map(|d| d.c2)
}

/// The stage n together with the previous stage as a subobject.
pub fn james_stage_with_previous(
    x: &C2SimplicialSet,
    n: usize,
    dim_bound: usize,
) -> Result<(C2SimplicialSet, SubObject), SsetError> {
    assert!(n >= 1, "stage 0 has no previous stage");
    let data = james_with_data(x, n, dim_bound)?;
    let mut sub = SubObject::empty(dim_bound + 1);
    for (m, lens) in data.lengths.iter().enumerate() {
        for (idx, &len) in lens.iter().enumerate() {
            if len <= n - 1 {
                sub.insert(SimplexRef { dim: m, idx });
            }
        }
    }
    sub.validate(&data.c2)?;
    Ok((data.c2, sub))
}

/// The stage quotient J_n / J_{n-1}.
pub fn james_quotient(
    x: &C2SimplicialSet,
    n: usize,
    dim_bound: usize,
) -> Result<C2SimplicialSet, SsetError> {
    let (ambient, sub) = james_stage_with_previous(x, n, dim_bound)?;
    quotient(&ambient, &sub)
}

/// The k-fold norm smash power of the underlying space of x:
/// Map(kC2, x) modulo its fat wedge. For k = 0 this is S0.
pub fn norm_smash_power(
    x: &C2SimplicialSet,
    k: usize,
    dim_bound: usize,
) -> Result<C2SimplicialSet, SsetError> {
    let bp = x.require_basepoint()?;
    if k == 0 {
        return Ok(s0());
    }
    let (ambient, sub) = fat_wedge(&x.space, Some(bp.idx), MapDomain::FreeOrbits(k), dim_bound)?;
    quotient(&ambient, &sub)
}

/// The cofiber model for the stage quotient: the norm smash power for
/// n = 2k, and its smash with x itself for n = 2k + 1.
pub fn james_quotient_model(
    x: &C2SimplicialSet,
    n: usize,
    dim_bound: usize,
) -> Result<C2SimplicialSet, SsetError> {
    assert!(n >= 1);
    let k = n / 2;
    if n % 2 == 0 {
        norm_smash_power(x, k, dim_bound)
    } else {
        let even = norm_smash_power(x, k, dim_bound)?;
        smash(&even, x, dim_bound)
    }
}
