// Run with `cargo run --example bredon_engine`.

use equihom::c2sset::{
    bredon_chains, bredon_homology_range, classical_homology, f2_betti, rp2, OrbitKind,
};
use equihom::intalg::FGAbelianGroup;
use equihom::mackey::{burnside, constant_z, norm_f2};

fn label(g: &FGAbelianGroup) -> String {
    let mut parts = Vec::new();
    match g.free_rank() {
        0 => {}
        1 => parts.push("Z".to_string()),
        r => parts.push(format!("Z^{r}")),
    }
    for t in g.torsion() {
        parts.push(format!("Z/{t}"));
    }
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join("+")
    }
}

fn main() {
    // RP2 with the trivial involution: every orbit is fixed, so the chain
    // terms are sums of copies of the coefficient functor's top level.
    let space = rp2();
    let coefficient = norm_f2();
    let complex = bredon_chains(&space, &coefficient, 3).unwrap();

    for n in 0..=2 {
        let orbits = complex.orbits(n);
        let fixed = orbits.iter().filter(|o| o.kind == OrbitKind::Fixed).count();
        let free = orbits.len() - fixed;
        let term = complex.term(n);
        println!(
            "dim {n}: {fixed} fixed + {free} free orbits, chain term top {} bot {}",
            label(term.top()),
            label(term.bot())
        );
    }

    for (name, m) in
        [("burnside", burnside()), ("constant Z", constant_z()), ("norm F2", norm_f2())]
    {
        let h = bredon_homology_range(&space, &m, 2, false).unwrap();
        let rows: Vec<String> = h
            .iter()
            .enumerate()
            .map(|(n, hn)| format!("H{n} = ({}, {})", label(hn.top()), label(hn.bot())))
            .collect();
        println!("Bredon homology of RP2 with {name}: {}", rows.join(", "));
    }

    // Cross-checks against nonequivariant invariants of the same cell
    // structure.
    let z = FGAbelianGroup::free(1);
    let classical: Vec<String> = (0..=2)
        .map(|n| label(&classical_homology(&space.space, &z, n, false).unwrap()))
        .collect();
    println!("classical H*(RP2; Z) = {}", classical.join(", "));
    println!("mod 2 Betti numbers  = {:?}", f2_betti(&space.space, 2));
}
