// Run with `cargo run --example james_construction`.

use equihom::c2sset::{james_stage, s_sigma};
use equihom::checks::james_check;
use equihom::grfree::{
    james_homology_descriptor, FreeDescriptor, FreeSummand, GradedSet, RORep, Stage,
};

fn main() {
    // Stagewise sign-James construction on the sign circle. Cells pile up
    // quickly with the word-length filtration, so we stay in low stages.
    let base = s_sigma();
    for n in 0..=3 {
        let stage = james_stage(&base, n, 4).unwrap();
        let counts: Vec<usize> = (0..=3).map(|d| stage.space.count(d)).collect();
        println!("stage {n}: nondegenerate cells by dimension {counts:?}");
    }

    // Predicted homology, one descriptor per stage; each stage's answer is
    // contained in the next.
    let underlying = GradedSet::new(vec![("a".to_string(), 1)]).unwrap();
    let hred = FreeDescriptor::new(vec![FreeSummand::fixed(RORep::sigma())]);
    let mut prev: Option<FreeDescriptor> = None;
    for n in 0..=3i64 {
        let d = james_homology_descriptor(&underlying, &hred, Stage::Bounded(n), 4).unwrap();
        let nested = prev.map_or(true, |p| p.is_sub_multiset_of(&d));
        println!("stage {n} descriptor: {d} (contains previous: {nested})");
        prev = Some(d);
    }
    let full = james_homology_descriptor(&underlying, &hred, Stage::Unbounded, 4).unwrap();
    println!("unbounded, degrees <= 4:  {full}");

    // The checker compares each stage's cellular homology with the
    // truncated descriptor.
    for stage in 0..=2 {
        let report = james_check(stage, 3).unwrap();
        print!("{}", report.render_text());
    }
}
