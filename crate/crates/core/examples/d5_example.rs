//! A D5 cluster whose exchange quiver is three oriented triangles, and an
//! object whose cluster variable has denominator x1 x2 x3 x4.

use cluster_tilt::tilting::checks::Context;
use cluster_tilt::tilting::example::{d5_example_quiver, find_d5_example};
use cluster_tilt::tilting::Convention;

fn main() {
    let q = d5_example_quiver();
    print!("{}", q.to_dot("example", None));
    for e in q.relations().unwrap().relations() {
        println!("arrow {} -> {}: {:?}", e.source + 1, e.target + 1, e.kind);
    }

    let ctx = Context::new("D5".parse().unwrap(), Default::default(), Convention::pin().unwrap()).unwrap();
    let ex = find_d5_example(&ctx).unwrap();
    let positions: Vec<usize> = ex.labels.iter().map(|p| p + 1).collect();
    println!("\nrealised by atlas cluster {}; vertices 1..5 sit at seed positions {positions:?}", ex.cluster);
    println!("M = {}, d = {:?}", ex.object_name, ex.d);
    println!("x_M = {}", ex.display);
    println!("denominator exponents {:?}, numerator prime to every x_i: {}", ex.denominator, ex.numerator_prime);
}
