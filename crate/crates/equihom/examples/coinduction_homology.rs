// Run with `cargo run --example coinduction_homology`.

use equihom::checks::coind_check;
use equihom::expr::parse;
use equihom::grfree::{coind_homology_descriptor, GradedSet};
use equihom::report::{homology_table, table_to_csv, Coefficient};

fn main() {
    // The homology of a coinduced space is predicted by a free descriptor
    // read off from any integer-graded cell basis of the input.
    let circle = GradedSet::new(vec![("u".to_string(), 0), ("a".to_string(), 1)]).unwrap();
    println!("predicted basis for coind(S1): {}", coind_homology_descriptor(&circle));
    println!();

    let expr = parse("coind(S1)").unwrap();
    let table = homology_table(&expr, Coefficient::B, 3, false).unwrap();
    print!("{}", table_to_csv(&table));
    println!();

    // The bundled checker runs the cellular engine against the prediction
    // degree by degree.
    for src in ["S1", "wedge(S1,S1)", "S2"] {
        let report = coind_check(&parse(src).unwrap(), 3).unwrap();
        print!("{}", report.render_text());
    }
}
