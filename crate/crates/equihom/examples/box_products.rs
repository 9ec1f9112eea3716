// Run with `cargo run --example box_products`.

use equihom::intalg::FGAbelianGroup;
use equihom::mackey::{
    associator, box_mackey, braiding, burnside, constant_z, induced, induced_comparison,
    isomorphic, norm_f2, unitor, MackeyFunctor, NormF2Ring,
};

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

fn show(name: &str, m: &MackeyFunctor) {
    println!("{name}: top {}, bot {}", label(m.top()), label(m.bot()));
}

fn main() {
    let a = burnside();
    let z = constant_z();
    let b = norm_f2();

    show("box(burnside, burnside)", &box_mackey(&a, &a).unwrap());
    show("box(constant Z, constant Z)", &box_mackey(&z, &z).unwrap());
    show("box(norm F2, norm F2)", &box_mackey(&b, &b).unwrap());
    show("box(norm F2, constant Z)", &box_mackey(&b, &z).unwrap());

    // Burnside is the unit, up to a certified isomorphism.
    for (name, m) in [("burnside", &a), ("constant Z", &z), ("norm F2", &b)] {
        let u = unitor(m).unwrap();
        println!("unitor on {name} is an isomorphism: {}", u.is_isomorphism());
    }

    let swap = braiding(&b, &z).unwrap();
    println!("braiding box(norm F2, constant Z): iso {}", swap.is_isomorphism());
    println!(
        "box is symmetric on (norm F2, constant Z): {}",
        isomorphic(&box_mackey(&b, &z).unwrap(), &box_mackey(&z, &b).unwrap())
    );

    let assoc = associator(&b, &z, &a).unwrap();
    println!("associator on (norm F2, constant Z, burnside): iso {}", assoc.is_isomorphism());

    // Boxing with the induced Burnside functor frees everything up.
    let cmp = induced_comparison(&b).unwrap();
    println!(
        "box(induced burnside, norm F2) -> induced(norm F2): iso {}",
        cmp.is_isomorphism()
    );
    show("induced(norm F2)", &induced(&b));

    // The norm of F2 is a Green functor: residue rings Z/4 and Z/2 with a
    // multiplicative restriction and the Frobenius-compatible transfer.
    let ring_res = (0..4).all(|x| NormF2Ring::res(NormF2Ring::mul_top(x, x)) == {
        let r = NormF2Ring::res(x);
        NormF2Ring::mul_bot(r, r)
    });
    println!("restriction on norm F2 is multiplicative on squares: {ring_res}");
    println!(
        "Frobenius: 3 * tr(1) = tr(res(3) * 1) = {}",
        NormF2Ring::mul_top(3, NormF2Ring::tr(1))
    );
}
