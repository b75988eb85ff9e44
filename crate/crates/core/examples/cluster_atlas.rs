//! Every seed of a finite-type cluster algebra: the variables with their
//! denominator vectors, and the clusters.
//!
//!     cargo run --example cluster_atlas -- A3

use cluster_tilt::cluster_algebra::{explore, initial_seed};
use cluster_tilt::root_system::DynkinType;

fn main() {
    let ty: DynkinType = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "A3".into())
        .parse()
        .expect("a Dynkin type");
    let atlas = explore(ty, Default::default()).unwrap();
    println!(
        "{ty}: {} clusters, {} cluster variables",
        atlas.num_clusters(),
        atlas.num_variables()
    );
    for (id, v) in atlas.variables().iter().enumerate() {
        println!("  x[{id}] root {:<14} {v}", atlas.root_of(id).to_string());
    }
    for (id, c) in atlas.clusters().iter().enumerate().take(10) {
        println!("  cluster {id}: variables {:?}, neighbours {:?}", c.vars, c.neighbors);
    }
    if atlas.num_clusters() > 10 {
        println!("  ...");
    }

    // A seed mutated along a path, and the id shared by relabeled seeds.
    let s = initial_seed(ty).mutate_path(&[0, 1, 0]).unwrap();
    println!("\nafter mutating at 1, 2, 1: seed {}", &s.id()[..16]);
    for v in &s.vars {
        println!("  {v}   denominator {:?}", v.denominator_vector());
    }
}
