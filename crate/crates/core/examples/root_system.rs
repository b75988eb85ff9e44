//! Almost positive roots of a Dynkin type, their compatibility degrees and
//! the tau orbits that define them.
//!
//!     cargo run --example root_system -- D4

use cluster_tilt::root_system::{DynkinType, RootSystem, Sign};

fn main() {
    let ty: DynkinType = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "A3".into())
        .parse()
        .expect("a Dynkin type such as A3 or D4");
    let rs = RootSystem::new(ty);
    let roots = rs.almost_positive_roots();
    println!(
        "{ty}: {} positive roots, {} almost positive, Coxeter number {}",
        rs.positive_roots().len(),
        roots.len(),
        ty.coxeter_number()
    );
    println!("sinks {:?}, sources {:?} (1-based)", plus1(&rs.signs().plus), plus1(&rs.signs().minus));

    println!("\ncompatibility degrees (row || column):");
    for a in roots {
        let row: Vec<String> = roots
            .iter()
            .map(|b| rs.compatibility_degree(a, b).to_string())
            .collect();
        println!("{:>14}  {}", a.to_string(), row.join(" "));
    }

    // tau+ and tau- are involutions; alternating them walks the orbit.
    let start = &roots[0];
    let mut orbit = vec![start.clone()];
    let mut cur = start.clone();
    let mut t = Sign::Plus;
    for _ in 0..2 * roots.len() {
        cur = rs.tau(t, &cur);
        t = t.opposite();
        if !orbit.contains(&cur) {
            orbit.push(cur.clone());
        }
    }
    let names: Vec<String> = orbit.iter().map(ToString::to_string).collect();
    println!("\norbit of {start} under tau+, tau-, ...: {}", names.join(" -> "));
}

fn plus1(s: &std::collections::BTreeSet<usize>) -> Vec<usize> {
    s.iter().map(|v| v + 1).collect()
}
