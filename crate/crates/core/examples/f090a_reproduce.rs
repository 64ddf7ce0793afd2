//! The whole F090A pipeline, first on the given seeds (which stops at
//! seed validation) and then on their minimal reductions.

use linksep::cli::{f090a_reproduce, render, ReproduceOptions};

fn main() {
    let given = f090a_reproduce(&ReproduceOptions::default());
    print!("{}", render(&given.certificate));

    let reduced = f090a_reproduce(&ReproduceOptions {
        reduce_minimal: true,
        ..ReproduceOptions::default()
    });
    print!("{}", render(&reduced.certificate));
    println!("{}", serde_json::to_string_pretty(&reduced.statistics).unwrap());
}
