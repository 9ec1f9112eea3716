//! Cross-checks `homology_at` against direct enumeration on chain complexes
//! whose groups are finite of order at most 64. The oracle works purely with
//! element sets: it lists cycles, lists boundaries, forms cosets by hand, and
//! identifies the quotient group by order counting.

use equihom::intalg::{homology_at, FGAbelianGroup, GroupHom, IntMatrix};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use std::collections::{BTreeMap, BTreeSet};

fn add_mod(g: &FGAbelianGroup, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let sum: Vec<BigInt> = a.iter().zip(b).map(|(x, y)| x + y).collect();
    g.normalize_vec(&sum)
}

fn scalar_mod(g: &FGAbelianGroup, m: u64, a: &[BigInt]) -> Vec<BigInt> {
    let s: Vec<BigInt> = a.iter().map(|x| x * BigInt::from(m)).collect();
    g.normalize_vec(&s)
}

/// Invariant factors of the subquotient ker(d_out)/im(d_in), computed by
/// explicit coset enumeration and order counting.
fn oracle_invariants(d_in: &GroupHom, d_out: &GroupHom) -> Vec<u64> {
    let b = d_in.target();
    assert!(b.order().expect("finite") <= BigInt::from(64));
    let zero_c = vec![BigInt::zero(); d_out.target().num_generators()];
    let cycles: Vec<Vec<BigInt>> = b
        .elements()
        .into_iter()
        .filter(|x| d_out.eval(x) == zero_c)
        .collect();
    let boundaries: BTreeSet<Vec<BigInt>> = d_in
        .source()
        .elements()
        .into_iter()
        .map(|a| d_in.eval(&a))
        .collect();

    // Coset representative: the least element of z + boundaries.
    let rep = |z: &[BigInt]| -> Vec<BigInt> {
        boundaries
            .iter()
            .map(|w| add_mod(b, z, w))
            .min()
            .expect("boundaries contain zero")
    };
    let classes: BTreeSet<Vec<BigInt>> = cycles.iter().map(|z| rep(z)).collect();
    let n = classes.len() as u64;
    let zero_class = rep(&vec![BigInt::zero(); b.num_generators()]);

    // Count classes killed by each multiplier.
    let mut killed = BTreeMap::new();
    for m in 1..=n {
        let count = classes
            .iter()
            .filter(|c| rep(&scalar_mod(b, m, c)) == zero_class)
            .count() as u64;
        killed.insert(m, count);
    }

    // Match against every abelian group of order n in invariant-factor form.
    let mut matches = Vec::new();
    for chain in invariant_chains(n) {
        let profile_ok = (1..=n).all(|m| {
            let predicted: u64 = chain.iter().map(|d| d.gcd(&m)).product();
            predicted == killed[&m]
        });
        if profile_ok {
            matches.push(chain);
        }
    }
    assert_eq!(matches.len(), 1, "order profile must identify the group");
    matches.pop().unwrap()
}

/// All divisibility chains d_1 | d_2 | ... | d_k with product n and d_i >= 2,
/// i.e. the invariant factors of each abelian group of order n.
fn invariant_chains(n: u64) -> Vec<Vec<u64>> {
    fn go(remaining: u64, max_allowed: u64) -> Vec<Vec<u64>> {
        if remaining == 1 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        // Choose the largest factor first; the rest divide it.
        for d in (2..=remaining.min(max_allowed)).rev() {
            if remaining % d == 0 && max_allowed % d == 0 {
                for mut rest in go(remaining / d, d) {
                    rest.push(d);
                    out.push(rest);
                }
            }
        }
        out
    }
    go(n, n)
}

fn check(d_in: &GroupHom, d_out: &GroupHom) {
    let expected = oracle_invariants(d_in, d_out);
    let h = homology_at(d_in, d_out).expect("valid complex");
    assert_eq!(h.group.free_rank(), 0);
    let got: Vec<u64> = h
        .group
        .torsion()
        .iter()
        .map(|d| u64::try_from(d).unwrap())
        .collect();
    assert_eq!(got, expected, "homology disagrees with enumeration");
}

fn hom(src: &FGAbelianGroup, tgt: &FGAbelianGroup, rows: &[Vec<i64>]) -> GroupHom {
    GroupHom::new(src.clone(), tgt.clone(), IntMatrix::from_rows(rows)).unwrap()
}

#[test]
fn cyclic_complexes() {
    let z4 = FGAbelianGroup::cyclic(4);
    let z8 = FGAbelianGroup::cyclic(8);
    let cases: Vec<(GroupHom, GroupHom)> = vec![
        (hom(&z4, &z4, &[vec![2]]), hom(&z4, &z4, &[vec![2]])),
        (hom(&z8, &z8, &[vec![4]]), hom(&z8, &z4, &[vec![2]])),
        (hom(&z8, &z8, &[vec![2]]), hom(&z8, &z8, &[vec![4]])),
        (hom(&z8, &z8, &[vec![0]]), hom(&z8, &z8, &[vec![4]])),
    ];
    for (d_in, d_out) in &cases {
        check(d_in, d_out);
    }
}

#[test]
fn mixed_torsion_complexes() {
    let z6 = FGAbelianGroup::cyclic(6);
    let z9 = FGAbelianGroup::cyclic(9);
    check(&hom(&z6, &z6, &[vec![2]]), &hom(&z6, &z6, &[vec![3]]));
    check(&hom(&z6, &z6, &[vec![0]]), &hom(&z6, &z6, &[vec![2]]));
    check(&hom(&z9, &z9, &[vec![3]]), &hom(&z9, &z9, &[vec![3]]));
    check(&hom(&z9, &z9, &[vec![0]]), &hom(&z9, &z9, &[vec![3]]));
}

#[test]
fn two_generator_complexes() {
    let g = FGAbelianGroup::new(vec![4.into(), 4.into()], 0).unwrap();
    let d = hom(&g, &g, &[vec![2, 1], vec![0, 2]]);
    check(&d, &d);
    let g2 = FGAbelianGroup::new(vec![2.into(), 4.into()], 0).unwrap();
    let din = hom(&g2, &g2, &[vec![1, 0], vec![0, 2]]);
    let dout = hom(&g2, &g2, &[vec![1, 2], vec![0, 0]]);
    // d_out . d_in = [[1, 4],[0,0]] = [[1,0],[0,0]] mod orders... verify zero
    // composition before using the pair.
    if dout.compose(&din).map(|c| c.is_zero()).unwrap_or(false) {
        check(&din, &dout);
    }
}

#[test]
fn randomized_complexes_agree_with_enumeration() {
    // Deterministic pseudo-random sweep over small matrices; pairs that do
    // not compose to zero are skipped.
    let shapes = [
        FGAbelianGroup::cyclic(4),
        FGAbelianGroup::new(vec![2.into(), 2.into()], 0).unwrap(),
        FGAbelianGroup::new(vec![2.into(), 4.into()], 0).unwrap(),
        FGAbelianGroup::cyclic(6),
        FGAbelianGroup::cyclic(8),
    ];
    let mut state: u64 = 0x9e3779b97f4a7c15;
    let mut next = move || {
        state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
        (state >> 33) as i64
    };
    let mut tested = 0;
    let mut attempts = 0;
    while tested < 40 && attempts < 4000 {
        attempts += 1;
        let a = &shapes[(next() as usize) % shapes.len()];
        let b = &shapes[(next() as usize) % shapes.len()];
        let c = &shapes[(next() as usize) % shapes.len()];
        let rand_hom = |src: &FGAbelianGroup, tgt: &FGAbelianGroup, next: &mut dyn FnMut() -> i64| {
            let m = IntMatrix::from_fn(tgt.num_generators(), src.num_generators(), |_, _| {
                BigInt::from(next() % 5 - 2)
            });
            GroupHom::new(src.clone(), tgt.clone(), m)
        };
        let Ok(d_in) = rand_hom(a, b, &mut next) else {
            continue;
        };
        let Ok(d_out) = rand_hom(b, c, &mut next) else {
            continue;
        };
        if !d_out.compose(&d_in).unwrap().is_zero() {
            continue;
        }
        check(&d_in, &d_out);
        tested += 1;
    }
    assert!(tested >= 20, "only exercised {tested} random complexes");
}
