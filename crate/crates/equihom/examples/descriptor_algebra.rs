// Run with `cargo run --example descriptor_algebra`.

use equihom::c2sset::build_sphere_table;
use equihom::grfree::{
    box_descriptors, coind_homology_descriptor, evaluate_descriptor, norm_graded_set,
    suspend_descriptor, tensor_power_basis, FreeDescriptor, FreeSummand, GradedSet, RORep,
    SummandKind,
};
use equihom::mackey::norm_f2;

fn main() {
    // Integer-graded cell basis of the circle: a unit in degree 0 and the
    // fundamental class in degree 1.
    let circle = GradedSet::new(vec![("u".to_string(), 0), ("a".to_string(), 1)]).unwrap();
    let reduced = GradedSet::new(vec![("a".to_string(), 1)]).unwrap();

    println!("coind(S1) predicted free basis:");
    println!("  {}", coind_homology_descriptor(&circle));
    println!("norm on the reduced circle basis:");
    println!("  {}", norm_graded_set(&reduced));

    for k in 0..=3 {
        let words = tensor_power_basis(&reduced, k).unwrap();
        let names: Vec<String> =
            words.elements().iter().map(|(w, d)| format!("{w}:{d}")).collect();
        println!("tensor power {k} of {{a:1}}: {}", names.join(" "));
    }

    // Box products distribute over summands; induced summands absorb the
    // twist of whatever they meet.
    let coind_part = coind_homology_descriptor(&circle);
    let sigma_part = FreeDescriptor::new(vec![
        FreeSummand::fixed(RORep::trivial(0)),
        FreeSummand::fixed(RORep::sigma()),
    ]);
    let boxed = box_descriptors(&coind_part, &sigma_part);
    println!("coind(S1) box (S0 + S^sigma): {boxed}");

    let shifted = suspend_descriptor(&boxed, RORep::sigma());
    println!("after one sigma suspension:   {shifted}");

    // Descriptors evaluate to actual Mackey functors degree by degree once
    // the sphere homology they reference is tabulated.
    let coefficient = norm_f2();
    let shifts: Vec<RORep> = boxed
        .summands()
        .iter()
        .filter(|s| s.kind == SummandKind::Fixed)
        .map(|s| s.shift)
        .collect();
    let table = build_sphere_table(&shifts, 3, &coefficient).unwrap();
    for n in 0..=3i64 {
        let m = evaluate_descriptor(&boxed, n, &table).unwrap();
        println!(
            "degree {n}: top rank {} torsion {:?}, bot rank {} torsion {:?}",
            m.top().free_rank(),
            m.top().torsion(),
            m.bot().free_rank(),
            m.bot().torsion()
        );
    }
}
