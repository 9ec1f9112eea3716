// Run with `cargo run --example configuration_counts`.

use equihom::confcomb::{
    aut_order, emb_nonempty, graph_subgroup_count, norm_map_status, pi0_emb, pi0_emb_sigma,
    pi0_underlying, C2SetDescriptor, RepPQ,
};

fn main() {
    // Graph subgroups of C2 x Sigma_n index the orbit types of finite free
    // C2-sets inside configuration spaces.
    for n in 0..=8 {
        println!("graph subgroups of C2 x Sigma_{n}: {}", graph_subgroup_count(n).unwrap());
    }
    println!();

    for (f, k) in [(0, 1), (0, 2), (1, 1), (2, 2)] {
        let t = C2SetDescriptor::new(f, k);
        println!(
            "automorphisms of {f} fixed points + {k} free orbits: {}",
            aut_order(t)
        );
    }
    println!();

    // Components of embedding spaces into the sign line: the fixed locus is
    // a point, so free orbits straddle it in 2^k k! ways.
    let sigma = RepPQ::new(0, 1);
    for k in 0..=4 {
        let t = C2SetDescriptor::new(0, k);
        println!(
            "pi0 Emb({k} free orbits -> sigma): {} (underlying Sigma_{} count {})",
            pi0_emb(t, sigma).unwrap(),
            2 * k,
            pi0_underlying(2 * k)
        );
        assert_eq!(pi0_emb(t, sigma).unwrap(), pi0_emb_sigma(k));
    }
    println!();

    // The fixed subspace of the sign line is the origin, so a second fixed
    // point needs a fixed direction.
    let two_fixed = C2SetDescriptor::new(2, 0);
    println!(
        "Emb(2 fixed points -> sigma) nonempty: {}",
        emb_nonempty(two_fixed, sigma)
    );
    println!(
        "Emb(2 fixed points -> 1 + sigma) nonempty: {}",
        emb_nonempty(two_fixed, RepPQ::new(1, 1))
    );
    println!();

    // Norm maps for algebras over the little disks of a representation.
    for v in [RepPQ::new(1, 0), RepPQ::new(0, 1), RepPQ::new(1, 1), RepPQ::new(0, 2)] {
        println!(
            "norm map status for {}+{}.sigma: {:?}",
            v.p,
            v.q,
            norm_map_status(v)
        );
    }
}
