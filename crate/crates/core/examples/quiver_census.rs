//! Mutation class of a Dynkin quiver and the structural census of every
//! member: shortest paths, chordless cycles and vertex links.
//!
//!     cargo run --example quiver_census -- E6

use cluster_tilt::cluster_algebra::alternating_quiver;
use cluster_tilt::quiver::census::{census, ALLOWED_LINKS};
use cluster_tilt::quiver::{mutation_class, DEFAULT_CLASS_CAP};
use cluster_tilt::root_system::DynkinType;

fn main() {
    let ty: DynkinType = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "D5".into())
        .parse()
        .expect("a Dynkin type");
    let q = alternating_quiver(ty);
    print!("{}", q.to_dot("alternating", None));

    let class = mutation_class(&q, DEFAULT_CLASS_CAP).unwrap();
    let trees = class.iter().filter(|q| q.is_tree()).count();
    println!("{} quivers up to relabeling, {trees} of them trees", class.len());

    let r = census(ty).unwrap();
    println!("arrows by number of shortest return paths: {:?}", r.shortest_path_counts);
    println!(
        "chordless cycles: {} ({} not oriented)",
        r.chordless_cycles, r.unoriented_cycles
    );
    println!("link profiles seen ({} of {}):", r.profiles.len(), ALLOWED_LINKS.len());
    for (p, count) in &r.profiles {
        let orientations: Vec<&str> = r.orientations[p].iter().map(String::as_str).collect();
        println!("  {p:<8} {count:>5}  orientations {}", orientations.join(" "));
    }
    for (a, b) in &r.link_changes {
        println!("  mutation at the vertex turns {a} into {b}");
    }
    println!("census {}", if r.passed() { "passes" } else { "FAILS" });
}
