//! Finitely generated abelian groups in invariant-factor form, and their
//! homomorphisms as integer matrices over canonical generators.

use super::matrix::IntMatrix;
use super::snf::{snf_engine, SnfNeed};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum IntAlgError {
    #[error("not composable: {0}")]
    NonComposable(String),
    #[error("matrix is not a homomorphism: source generator {generator} of order {order} has image not killed by its order")]
    NotWellDefined { generator: usize, order: BigInt },
    #[error("not a chain complex: {0}")]
    NotAComplex(String),
    #[error("not a chain map: {0}")]
    NotChainMap(String),
    #[error("torsion coefficients must be >= 2 and form a divisibility chain")]
    BadInvariantFactors,
}

/// A finitely generated abelian group `Z/d_1 + ... + Z/d_k + Z^r` with
/// `2 <= d_1 | d_2 | ... | d_k`. Generator order: torsion generators first
/// (in divisibility order), free generators last.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FGAbelianGroup {
    torsion: Vec<BigInt>,
    free_rank: usize,
}

impl FGAbelianGroup {
    pub fn new(torsion: Vec<BigInt>, free_rank: usize) -> Result<Self, IntAlgError> {
        let two = BigInt::from(2);
        for (i, d) in torsion.iter().enumerate() {
            if *d < two {
                return Err(IntAlgError::BadInvariantFactors);
            }
            if i > 0 && !d.mod_floor(&torsion[i - 1]).is_zero() {
                return Err(IntAlgError::BadInvariantFactors);
            }
        }
        Ok(FGAbelianGroup { torsion, free_rank })
    }

    pub fn trivial() -> Self {
        FGAbelianGroup {
            torsion: vec![],
            free_rank: 0,
        }
    }

    pub fn free(rank: usize) -> Self {
        FGAbelianGroup {
            torsion: vec![],
            free_rank: rank,
        }
    }

    pub fn cyclic(order: u64) -> Self {
        assert!(order >= 2);
        FGAbelianGroup {
            torsion: vec![BigInt::from(order)],
            free_rank: 0,
        }
    }

    /// Convenience constructor from small invariant factors.
    pub fn from_invariants(torsion: &[i64], free_rank: usize) -> Result<Self, IntAlgError> {
        FGAbelianGroup::new(torsion.iter().map(|d| BigInt::from(*d)).collect(), free_rank)
    }

    pub fn torsion(&self) -> &[BigInt] {
        &self.torsion
    }

    pub fn free_rank(&self) -> usize {
        self.free_rank
    }

    pub fn num_generators(&self) -> usize {
        self.torsion.len() + self.free_rank
    }

    pub fn is_trivial(&self) -> bool {
        self.num_generators() == 0
    }

    /// Order of the `i`-th generator; zero denotes infinite order.
    pub fn generator_order(&self, i: usize) -> BigInt {
        if i < self.torsion.len() {
            self.torsion[i].clone()
        } else {
            BigInt::zero()
        }
    }

    pub fn orders(&self) -> Vec<BigInt> {
        (0..self.num_generators())
            .map(|i| self.generator_order(i))
            .collect()
    }

    /// `None` when the group is infinite.
    pub fn order(&self) -> Option<BigInt> {
        if self.free_rank > 0 {
            return None;
        }
        Some(self.torsion.iter().product())
    }

    /// Relation matrix whose columns are `d_i * e_i` over the torsion
    /// generators; shape `num_generators x torsion_count`.
    pub fn relation_matrix(&self) -> IntMatrix {
        let n = self.num_generators();
        let mut m = IntMatrix::zeros(n, self.torsion.len());
        for (j, d) in self.torsion.iter().enumerate() {
            m.set(j, j, d.clone());
        }
        m
    }

    /// Reduces a coordinate vector into canonical representatives
    /// (`[0, d_i)` on torsion coordinates).
    pub fn normalize_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        assert_eq!(v.len(), self.num_generators());
        v.iter()
            .enumerate()
            .map(|(i, x)| {
                if i < self.torsion.len() {
                    x.mod_floor(&self.torsion[i])
                } else {
                    x.clone()
                }
            })
            .collect()
    }

    /// All elements of a finite group, each as a coordinate vector, in
    /// lexicographic order. Panics if the group is infinite.
    pub fn elements(&self) -> Vec<Vec<BigInt>> {
        assert_eq!(self.free_rank, 0, "cannot enumerate an infinite group");
        let mut out = vec![vec![]];
        for d in &self.torsion {
            let mut next = Vec::new();
            for prefix in &out {
                let mut x = BigInt::zero();
                while &x < d {
                    let mut v = prefix.clone();
                    v.push(x.clone());
                    next.push(v);
                    x += 1;
                }
            }
            out = next;
        }
        out
    }
}

impl fmt::Debug for FGAbelianGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.torsion.iter().map(|d| format!("Z/{d}")).collect();
        for _ in 0..self.free_rank {
            parts.push("Z".to_string());
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// A homomorphism of finitely generated abelian groups, recorded as the
/// integer matrix of generator images (rows indexed by target generators,
/// columns by source generators). Entries are kept reduced modulo the
/// target generator orders, so hom equality is entrywise matrix equality.
#[derive(Clone, PartialEq, Eq)]
pub struct GroupHom {
    source: FGAbelianGroup,
    target: FGAbelianGroup,
    matrix: IntMatrix,
}

impl GroupHom {
    pub fn new(
        source: FGAbelianGroup,
        target: FGAbelianGroup,
        matrix: IntMatrix,
    ) -> Result<Self, IntAlgError> {
        assert_eq!(matrix.rows(), target.num_generators(), "matrix row count");
        assert_eq!(matrix.cols(), source.num_generators(), "matrix col count");
        // Well-definedness: the image of a generator of order d must be
        // killed by d in the target.
        for j in 0..source.num_generators() {
            let d = source.generator_order(j);
            if d.is_zero() {
                continue;
            }
            for i in 0..target.num_generators() {
                if matrix.get(i, j).is_zero() {
                    continue;
                }
                let o = target.generator_order(i);
                let x = matrix.get(i, j) * &d;
                let ok = if o.is_zero() {
                    x.is_zero()
                } else {
                    x.mod_floor(&o).is_zero()
                };
                if !ok {
                    return Err(IntAlgError::NotWellDefined {
                        generator: j,
                        order: d,
                    });
                }
            }
        }
        let matrix = normalize_mod_orders(&matrix, &target);
        Ok(GroupHom {
            source,
            target,
            matrix,
        })
    }

    pub fn identity(g: &FGAbelianGroup) -> Self {
        GroupHom {
            source: g.clone(),
            target: g.clone(),
            matrix: IntMatrix::identity(g.num_generators()),
        }
    }

    pub fn zero(source: &FGAbelianGroup, target: &FGAbelianGroup) -> Self {
        GroupHom {
            source: source.clone(),
            target: target.clone(),
            matrix: IntMatrix::zeros(target.num_generators(), source.num_generators()),
        }
    }

    pub fn source(&self) -> &FGAbelianGroup {
        &self.source
    }

    pub fn target(&self) -> &FGAbelianGroup {
        &self.target
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// `self` after `other`, i.e. `self . other : X -> Z` for
    /// `other : X -> Y`, `self : Y -> Z`.
    pub fn compose(&self, other: &GroupHom) -> Result<GroupHom, IntAlgError> {
        if self.source != other.target {
            return Err(IntAlgError::NonComposable(format!(
                "domain {:?} does not match codomain {:?}",
                self.source, other.target
            )));
        }
        GroupHom::new(
            other.source.clone(),
            self.target.clone(),
            self.matrix.mul(&other.matrix),
        )
    }

    pub fn add(&self, other: &GroupHom) -> GroupHom {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: normalize_mod_orders(&self.matrix.add(&other.matrix), &self.target),
        }
    }

    pub fn sub(&self, other: &GroupHom) -> GroupHom {
        assert_eq!(self.source, other.source);
        assert_eq!(self.target, other.target);
        GroupHom {
            source: self.source.clone(),
            target: self.target.clone(),
            matrix: normalize_mod_orders(&self.matrix.sub(&other.matrix), &self.target),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn eval(&self, v: &[BigInt]) -> Vec<BigInt> {
        let x = IntMatrix::col_vec(v);
        let y = self.matrix.mul(&x);
        self.target.normalize_vec(&y.column(0))
    }
}

impl fmt::Debug for GroupHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GroupHom {:?} -> {:?} via {:?}",
            self.source, self.target, self.matrix
        )
    }
}

pub(crate) fn normalize_mod_orders(m: &IntMatrix, target: &FGAbelianGroup) -> IntMatrix {
    IntMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        let x = m.get(i, j);
        let o = target.generator_order(i);
        if x.is_zero() || o.is_zero() {
            x.clone()
        } else {
            x.mod_floor(&o)
        }
    })
}

/// A group described by `num_gens` raw generators modulo the columns of a
/// relation matrix, canonicalized by Smith reduction.
///
/// `to_canonical` sends a raw coordinate vector to coordinates over the
/// canonical generators; `lift` sends a canonical generator to a raw
/// representative. `to_canonical * lift = id` modulo generator orders.
#[derive(Clone, Debug)]
pub struct PresentedGroup {
    pub group: FGAbelianGroup,
    pub to_canonical: IntMatrix,
    pub lift: IntMatrix,
}

impl PresentedGroup {
    /// Class of a raw vector over the canonical generators.
    pub fn classify(&self, raw: &IntMatrix) -> IntMatrix {
        normalize_mod_orders(&self.to_canonical.mul(raw), &self.group)
    }
}

/// Presents the cokernel `Z^num_gens / im(relations)` in canonical form.
pub fn present(num_gens: usize, relations: &IntMatrix) -> PresentedGroup {
    assert_eq!(relations.rows(), num_gens, "relation row count");
    let raw = snf_engine(
        relations,
        SnfNeed {
            u: true,
            u_inv: true,
            ..SnfNeed::default()
        },
    );
    let u = raw.u.unwrap();
    let u_inv = raw.u_inv.unwrap();
    let one = BigInt::one();
    let mut torsion = Vec::new();
    let mut survivors = Vec::new();
    for i in 0..raw.rank {
        let d = raw.d.get(i, i);
        if !d.is_one() {
            torsion.push(d.clone());
            survivors.push(i);
        }
        debug_assert!(*d >= one);
    }
    let free_start = survivors.len();
    for i in raw.rank..num_gens {
        survivors.push(i);
    }
    let group = FGAbelianGroup {
        torsion,
        free_rank: num_gens - raw.rank,
    };
    debug_assert_eq!(free_start + group.free_rank, survivors.len());
    let to_canonical = normalize_rows_mod(&u.select_rows(&survivors), &group);
    let lift = u_inv.select_columns(&survivors);
    PresentedGroup {
        group,
        to_canonical,
        lift,
    }
}

fn normalize_rows_mod(m: &IntMatrix, group: &FGAbelianGroup) -> IntMatrix {
    IntMatrix::from_fn(m.rows(), m.cols(), |i, j| {
        let o = group.generator_order(i);
        if o.is_zero() {
            m.get(i, j).clone()
        } else {
            m.get(i, j).mod_floor(&o)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn group_validation() {
        assert!(FGAbelianGroup::new(vec![2.into(), 4.into()], 1).is_ok());
        assert!(FGAbelianGroup::new(vec![2.into(), 3.into()], 0).is_err());
        assert!(FGAbelianGroup::new(vec![1.into()], 0).is_err());
    }

    #[test]
    fn hom_well_definedness() {
        let z4 = FGAbelianGroup::cyclic(4);
        let z2 = FGAbelianGroup::cyclic(2);
        // Reduction mod 2 is fine.
        assert!(GroupHom::new(z4.clone(), z2.clone(), IntMatrix::from_rows(&[vec![1]])).is_ok());
        // Z/2 -> Z/4 sending the generator to 1 is not a homomorphism.
        assert!(GroupHom::new(z2.clone(), z4.clone(), IntMatrix::from_rows(&[vec![1]])).is_err());
        // Multiplication by 2 is.
        assert!(GroupHom::new(z2.clone(), z4.clone(), IntMatrix::from_rows(&[vec![2]])).is_ok());
        // Torsion cannot map to a free group nontrivially.
        let z = FGAbelianGroup::free(1);
        assert!(GroupHom::new(z2.clone(), z.clone(), IntMatrix::from_rows(&[vec![1]])).is_err());
        assert!(GroupHom::new(z2, z, IntMatrix::from_rows(&[vec![0]])).is_ok());
    }

    #[test]
    fn hom_normalization_and_equality() {
        let z4 = FGAbelianGroup::cyclic(4);
        let a = GroupHom::new(z4.clone(), z4.clone(), IntMatrix::from_rows(&[vec![5]])).unwrap();
        let b = GroupHom::new(z4.clone(), z4.clone(), IntMatrix::from_rows(&[vec![1]])).unwrap();
        assert_eq!(a, b);
        let neg = GroupHom::new(z4.clone(), z4, IntMatrix::from_rows(&[vec![-1]])).unwrap();
        assert_eq!(neg.matrix().get(0, 0), &BigInt::from(3));
    }

    #[test]
    fn present_cyclic_quotients() {
        // Z^2 / <(2,0), (0,3)> = Z/2 + Z/3 = Z/6 presented as one factor.
        let p = present(2, &IntMatrix::from_rows(&[vec![2, 0], vec![0, 3]]));
        assert_eq!(p.group, FGAbelianGroup::cyclic(6));
        // Round trip: to_canonical . lift = id.
        let round = p.classify(&p.lift);
        assert_eq!(round, IntMatrix::identity(1));
    }

    #[test]
    fn present_keeps_free_part() {
        // Z^3 / <2 e_0> = Z/2 + Z^2.
        let mut rel = IntMatrix::zeros(3, 1);
        rel.set(0, 0, 2.into());
        let p = present(3, &rel);
        assert_eq!(p.group.torsion(), &[BigInt::from(2)]);
        assert_eq!(p.group.free_rank(), 2);
        let round = p.classify(&p.lift);
        assert_eq!(round, IntMatrix::identity(3));
    }

    #[test]
    fn elements_enumeration() {
        let g = FGAbelianGroup::new(vec![2.into(), 4.into()], 0).unwrap();
        let els = g.elements();
        assert_eq!(els.len(), 8);
        assert_eq!(els[0], vec![BigInt::from(0), BigInt::from(0)]);
    }
}
