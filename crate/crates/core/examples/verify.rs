//! Run every verification check over a type and print the report table.
//!
//!     cargo run --release --example verify -- D5

use cluster_tilt::cli::{verify, VerifyOptions};

fn main() {
    let ty = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "A4".into())
        .parse()
        .expect("a Dynkin type");
    let report = verify(ty, &VerifyOptions::default()).unwrap();
    print!("{}", report.to_table());
    if let Some(w) = report.check(cluster_tilt::cli::Check::Winding) {
        println!("winding numbers: {}", w.summary["histogram"]);
    }
}
