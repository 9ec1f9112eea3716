//! Sparse unit-pivot reduction of a three-term complex of free abelian
//! groups. Canceling a generator pair across a ±1 entry is a change of
//! basis that splits off an acyclic summand: the pivot matrix picks up a
//! Schur complement while the adjacent differential only loses the
//! corresponding row or column. Recorded moves let cycles be pushed into
//! the reduced complex and representatives pulled back out.

use super::matrix::IntMatrix;
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};

/// Spots are numbered 2 -> 1 -> 0 along the differentials.
const SPOTS: usize = 3;

struct SparseMat {
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: Vec<BTreeSet<usize>>,
}

impl SparseMat {
    fn new(rows: usize, cols: usize, entries: Vec<(usize, usize, BigInt)>) -> Self {
        let mut m = SparseMat {
            rows: vec![BTreeMap::new(); rows],
            cols: vec![BTreeSet::new(); cols],
        };
        for (i, j, v) in entries {
            if !v.is_zero() {
                m.rows[i].insert(j, v);
                m.cols[j].insert(i);
            }
        }
        m
    }

    fn add_to(&mut self, i: usize, j: usize, delta: BigInt) {
        if delta.is_zero() {
            return;
        }
        match self.rows[i].entry(j) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(delta);
                self.cols[j].insert(i);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += delta;
                if e.get().is_zero() {
                    e.remove();
                    self.cols[j].remove(&i);
                }
            }
        }
    }

    fn clear_row(&mut self, i: usize) {
        for (j, _) in std::mem::take(&mut self.rows[i]) {
            self.cols[j].remove(&i);
        }
    }

    fn clear_col(&mut self, j: usize) {
        for i in std::mem::take(&mut self.cols[j]) {
            self.rows[i].remove(&j);
        }
    }
}

fn is_unit(v: &BigInt) -> bool {
    let one = BigInt::one();
    *v == one || *v == -one
}

struct Move {
    /// Spot of the canceled column generator; the row generator lives one
    /// spot below.
    upper: usize,
    row: usize,
    col: usize,
    unit_negative: bool,
    /// Pivot column without the pivot entry, indexed by original row gens.
    col_rest: Vec<(usize, BigInt)>,
    /// Pivot row without the pivot entry, indexed by original column gens.
    row_rest: Vec<(usize, BigInt)>,
}

fn apply_pivot(mats: &mut [SparseMat; 2], moves: &mut Vec<Move>, m: usize, i: usize, j: usize) {
    let unit_negative = mats[m].rows[i][&j].sign() == num_bigint::Sign::Minus;
    let col_rest: Vec<(usize, BigInt)> = mats[m].cols[j]
        .iter()
        .filter(|&&r| r != i)
        .map(|&r| (r, mats[m].rows[r][&j].clone()))
        .collect();
    let row_rest: Vec<(usize, BigInt)> = mats[m].rows[i]
        .iter()
        .filter(|&(&c, _)| c != j)
        .map(|(&c, v)| (c, v.clone()))
        .collect();
    mats[m].clear_row(i);
    mats[m].clear_col(j);
    for (r, bv) in &col_rest {
        let factor = if unit_negative { -bv } else { bv.clone() };
        for (c, cv) in &row_rest {
            mats[m].add_to(*r, *c, -&factor * cv);
        }
    }
    // The adjacent differential drops the canceled generator outright: the
    // reduction lemma forces the discarded entries to vanish in the new
    // basis.
    if m == 0 {
        mats[1].clear_col(i);
    } else {
        mats[0].clear_row(j);
    }
    moves.push(Move {
        upper: 2 - m,
        row: i,
        col: j,
        unit_negative,
        col_rest,
        row_rest,
    });
}

/// Result of reducing `F_2 --d2--> F_1 --d1--> F_0`, with the surviving
/// generators per spot and the chain equivalences encoded as moves.
pub(super) struct Reduction {
    sizes: [usize; SPOTS],
    alive: [Vec<usize>; SPOTS],
    moves: Vec<Move>,
    /// Reduced differentials over the surviving generators, in `alive`
    /// order.
    pub(super) d2: IntMatrix,
    pub(super) d1: IntMatrix,
}

impl Reduction {
    /// `sizes` are the generator counts at spots [2, 1, 0]; the entry lists
    /// are (row, col, value) triplets of the two differentials. Requires
    /// `d1 . d2 = 0`.
    pub(super) fn new(
        sizes: [usize; SPOTS],
        d2_entries: Vec<(usize, usize, BigInt)>,
        d1_entries: Vec<(usize, usize, BigInt)>,
    ) -> Self {
        // mats[0] = d2 (rows at spot 1, cols at spot 2); mats[1] = d1.
        let mut mats = [
            SparseMat::new(sizes[1], sizes[0], d2_entries),
            SparseMat::new(sizes[2], sizes[1], d1_entries),
        ];
        let mut moves = Vec::new();
        loop {
            let mut candidates = Vec::new();
            for (m, mat) in mats.iter().enumerate() {
                for (i, row) in mat.rows.iter().enumerate() {
                    for (j, v) in row {
                        if is_unit(v) {
                            let cost = (row.len() - 1) * (mat.cols[*j].len() - 1);
                            candidates.push((cost, m, i, *j));
                        }
                    }
                }
            }
            if candidates.is_empty() {
                break;
            }
            candidates.sort();
            let valid = |mats: &[SparseMat; 2], m: usize, i: usize, j: usize| {
                matches!(mats[m].rows[i].get(&j), Some(v) if is_unit(v))
            };
            let mut progressed = false;
            for &(cost, m, i, j) in &candidates {
                if !valid(&mats, m, i, j) {
                    continue;
                }
                let now = (mats[m].rows[i].len() - 1) * (mats[m].cols[j].len() - 1);
                if now > 2 * (cost + 8) {
                    // Grew too much since the scan; let the next round
                    // reconsider it with a fresh cost.
                    continue;
                }
                apply_pivot(&mut mats, &mut moves, m, i, j);
                progressed = true;
            }
            if !progressed {
                // Every surviving unit is expensive now; pay for the
                // cheapest one so the loop still terminates.
                let next = candidates
                    .iter()
                    .find(|&&(_, m, i, j)| valid(&mats, m, i, j))
                    .copied();
                match next {
                    Some((_, m, i, j)) => apply_pivot(&mut mats, &mut moves, m, i, j),
                    None => break,
                }
            }
        }

        let mut dead = [
            vec![false; sizes[0]],
            vec![false; sizes[1]],
            vec![false; sizes[2]],
        ];
        for mv in &moves {
            dead[2 - mv.upper][mv.col] = true;
            dead[2 - (mv.upper - 1)][mv.row] = true;
        }
        let alive: [Vec<usize>; SPOTS] = [
            (0..sizes[0]).filter(|&g| !dead[0][g]).collect(),
            (0..sizes[1]).filter(|&g| !dead[1][g]).collect(),
            (0..sizes[2]).filter(|&g| !dead[2][g]).collect(),
        ];
        let pos1: BTreeMap<usize, usize> =
            alive[1].iter().enumerate().map(|(k, &g)| (g, k)).collect();
        let pos2: BTreeMap<usize, usize> =
            alive[2].iter().enumerate().map(|(k, &g)| (g, k)).collect();
        let mut d2 = IntMatrix::zeros(alive[1].len(), alive[0].len());
        for (k, &g) in alive[0].iter().enumerate() {
            for &r in &mats[0].cols[g] {
                d2.set(pos1[&r], k, mats[0].rows[r][&g].clone());
            }
        }
        let mut d1 = IntMatrix::zeros(alive[2].len(), alive[1].len());
        for (k, &g) in alive[1].iter().enumerate() {
            for &r in &mats[1].cols[g] {
                d1.set(pos2[&r], k, mats[1].rows[r][&g].clone());
            }
        }
        Reduction {
            sizes,
            alive,
            moves,
            d2,
            d1,
        }
    }

    pub(super) fn alive(&self, spot: usize) -> &[usize] {
        &self.alive[2 - spot]
    }

    /// Pushes a vector at `spot` (original coordinates) into the reduced
    /// complex, returning coordinates over the surviving generators. A
    /// chain map, so cycles stay cycles and boundaries stay boundaries.
    pub(super) fn project(&self, spot: usize, mut full: Vec<BigInt>) -> Vec<BigInt> {
        assert_eq!(full.len(), self.sizes[2 - spot]);
        for mv in &self.moves {
            if mv.upper - 1 == spot {
                let yi = std::mem::take(&mut full[mv.row]);
                if !yi.is_zero() {
                    let f = if mv.unit_negative { -yi } else { yi };
                    for (r, bv) in &mv.col_rest {
                        full[*r] -= &f * bv;
                    }
                }
            }
        }
        self.alive(spot)
            .iter()
            .map(|&g| std::mem::take(&mut full[g]))
            .collect()
    }

    /// Lifts a vector over the surviving generators at `spot` back to the
    /// original coordinates. A chain map and a section of `project`.
    pub(super) fn include(&self, spot: usize, small: &[BigInt]) -> Vec<BigInt> {
        let mut full = vec![BigInt::zero(); self.sizes[2 - spot]];
        assert_eq!(small.len(), self.alive(spot).len());
        for (k, &g) in self.alive(spot).iter().enumerate() {
            full[g] = small[k].clone();
        }
        for mv in self.moves.iter().rev() {
            if mv.upper == spot {
                let mut acc = BigInt::zero();
                for (c, cv) in &mv.row_rest {
                    acc += cv * &full[*c];
                }
                full[mv.col] = if mv.unit_negative { acc } else { -acc };
            }
        }
        full
    }
}
