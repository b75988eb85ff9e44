//! The cluster category of a Dynkin quiver: indecomposables, the shift,
//! Hom and Ext dimensions, and composition of explicit morphisms.
//!
//!     cargo run --example cluster_category -- A3

use cluster_tilt::repcat::ClusterCategory;
use cluster_tilt::root_system::{DynkinType, RootSystem};

fn main() {
    let ty: DynkinType = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "A3".into())
        .parse()
        .expect("a Dynkin type");
    let cat = ClusterCategory::new(&RootSystem::new(ty)).unwrap();
    println!("{ty}: {} indecomposables", cat.len());
    for i in 0..cat.len() {
        println!(
            "  {:<16} tau = {:<16} mesh vertex {:?}",
            cat.object(i).to_string(),
            cat.object(cat.tau(i)).to_string(),
            cat.vertex(i)
        );
    }

    println!("\ndim Hom_C (rows = source):");
    for a in 0..cat.len() {
        let row: Vec<String> = (0..cat.len()).map(|b| cat.hom_dim(a, b).to_string()).collect();
        println!("  {:>16}  {}", cat.object(a).to_string(), row.join(" "));
    }

    // Compose a degree-0 map with a degree-1 map when one is available.
    for a in 0..cat.len() {
        for b in 0..cat.len() {
            for c in 0..cat.len() {
                let (f, g) = (cat.hom_basis(a, b), cat.hom_basis(b, c));
                if a == b || b == c || f.is_empty() || g.is_empty() {
                    continue;
                }
                if f[0].degree() == Some(0) && g[0].degree() == Some(1) {
                    let h = cat.compose(&f[0], &g[0]).unwrap();
                    println!(
                        "\n{} -> {} -> {}: composite is {}",
                        cat.object(a),
                        cat.object(b),
                        cat.object(c),
                        if h.is_zero() { "zero" } else { "nonzero" }
                    );
                    return;
                }
            }
        }
    }
}
