// Run with `cargo run --example splitting_coinduction`.

use equihom::checks::splitting_check;
use equihom::expr::parse;
use equihom::report::{homology_table, table_to_csv, Coefficient};

fn main() {
    // One sign suspension splits a coinduced space into the sign suspension
    // of the original plus a norm part. Both sides are honest finite
    // C2-simplicial sets, so the engine can test the split in each degree.
    for src in ["S1", "S2"] {
        let report = splitting_check(&parse(src).unwrap(), 4).unwrap();
        print!("{}", report.render_text());
        println!();
    }

    // The three spaces in the splitting for the circle, tabulated
    // separately: the suspended coinduction, the induced free part, and the
    // suspended norm.
    let lhs = parse("suspsigma(coind(S1))").unwrap();
    let free_part = parse("smash(plus(C2),susp(S1))").unwrap();
    let norm_part = parse("suspsigma(norm(S1))").unwrap();
    for expr in [lhs, free_part, norm_part] {
        let table = homology_table(&expr, Coefficient::B, 4, true).unwrap();
        print!("{}", table_to_csv(&table));
        println!();
    }
}
