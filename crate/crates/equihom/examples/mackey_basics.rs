// Run with `cargo run --example mackey_basics`.

use equihom::intalg::{FGAbelianGroup, GroupHom, IntMatrix};
use equihom::mackey::{
    burnside, compare, constant_z, find_isomorphism, mackey_hom_group, norm_f2, IsoVerdict,
    MackeyFunctor, SearchOutcome,
};
use equihom::report::MackeyRecord;

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

fn describe(name: &str, m: &MackeyFunctor) {
    let rec = MackeyRecord::from_functor(m).unwrap();
    println!(
        "{name}: top {}, bot {}, res {:?}, tr {:?}, weyl {:?}",
        label(m.top()),
        label(m.bot()),
        rec.res,
        rec.tr,
        rec.weyl
    );
}

fn main() {
    describe("burnside  ", &burnside());
    describe("constant Z", &constant_z());
    describe("norm of F2", &norm_f2());

    // The constructor checks the axioms, so building the norm of F2 by hand
    // must reproduce the stock functor.
    let top = FGAbelianGroup::cyclic(4);
    let bot = FGAbelianGroup::cyclic(2);
    let res = GroupHom::new(top.clone(), bot.clone(), IntMatrix::from_rows(&[vec![1]])).unwrap();
    let tr = GroupHom::new(bot.clone(), top.clone(), IntMatrix::from_rows(&[vec![2]])).unwrap();
    let weyl = GroupHom::new(bot.clone(), bot.clone(), IntMatrix::from_rows(&[vec![1]])).unwrap();
    let by_hand = MackeyFunctor::new(top.clone(), bot.clone(), res, tr, weyl).unwrap();
    println!("hand-built norm of F2 equals the stock one: {}", by_hand == norm_f2());

    // Structure maps that break an axiom are rejected: negating the bottom
    // level is incompatible with res = 1 since weyl.res must equal res.
    let top = FGAbelianGroup::free(1);
    let bot = FGAbelianGroup::free(1);
    let res = GroupHom::new(top.clone(), bot.clone(), IntMatrix::from_rows(&[vec![1]])).unwrap();
    let tr = GroupHom::new(bot.clone(), top.clone(), IntMatrix::from_rows(&[vec![2]])).unwrap();
    let bad_weyl =
        GroupHom::new(bot.clone(), bot.clone(), IntMatrix::from_rows(&[vec![-1]])).unwrap();
    match MackeyFunctor::new(top, bot, res, tr, bad_weyl) {
        Ok(_) => println!("unexpectedly accepted a broken Weyl action"),
        Err(e) => println!("weyl = [-1] against res = [1] is rejected: {e}"),
    }

    // Double coset formula on the Burnside functor: res.tr = 1 + weyl.
    let a = burnside();
    let lhs = a.res().compose(a.tr()).unwrap();
    let rhs = GroupHom::identity(a.bot()).add(a.weyl());
    println!("burnside satisfies res.tr = 1 + weyl: {}", lhs == rhs);

    let report = compare(&burnside(), &constant_z());
    match report.verdict {
        IsoVerdict::NotIsomorphic(reason) => {
            println!("burnside vs constant Z: not isomorphic ({reason})")
        }
        other => println!("burnside vs constant Z: unexpected verdict {other:?}"),
    }
    match find_isomorphism(&norm_f2(), &norm_f2()) {
        SearchOutcome::Found(w) => {
            println!("self-comparison of norm of F2 found a witness, iso: {}", w.is_isomorphism())
        }
        other => println!("self-comparison failed: {other:?}"),
    }

    let hom = mackey_hom_group(&norm_f2(), &norm_f2());
    println!("Hom(norm of F2, norm of F2) = {}", label(&hom.group));
}
