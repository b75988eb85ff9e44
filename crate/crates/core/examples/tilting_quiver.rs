//! The tilting object attached to a cluster, the quiver of its endomorphism
//! algebra next to the exchange quiver, its relations, and the
//! approximation triangles at each summand.
//!
//!     cargo run --example tilting_quiver -- D4 7

use cluster_tilt::tilting::checks::{exchange_check, quiver_check, relations_check, Context};
use cluster_tilt::tilting::Convention;

fn main() {
    let mut args = std::env::args().skip(1);
    let ty = args.next().unwrap_or_else(|| "D4".into()).parse().expect("a Dynkin type");
    let cluster: usize = args.next().map_or(5, |c| c.parse().expect("a cluster id"));
    let ctx = Context::new(ty, Default::default(), Convention::pin().unwrap()).unwrap();

    let t = ctx.tilting(cluster).unwrap();
    let names: Vec<String> = t.summands.iter().map(|&i| ctx.cat.object(i).to_string()).collect();
    println!("cluster {cluster} of {ty}: T = {}", names.join(" + "));

    let (verdict, pres) = quiver_check(&ctx, cluster).unwrap();
    let pres = pres.expect("Hom dimensions between summands are at most 1");
    print!("{}", verdict.qt.to_dot("Q_T", Some(&names)));
    println!("equal to the exchange quiver: {}", verdict.matches);

    for r in relations_check(&ctx, cluster, &pres).unwrap() {
        if r.paths.is_empty() {
            continue;
        }
        println!(
            "arrow {} -> {}: {:?} relation, {:?}",
            r.arrow.0 + 1,
            r.arrow.1 + 1,
            r.kind,
            r.outcome
        );
    }

    for p in 0..t.len() {
        let e = exchange_check(&ctx, cluster, p, &pres).unwrap();
        let show = |s: &Option<Vec<usize>>| {
            s.as_ref().map_or("0".to_string(), |v| {
                v.iter().map(|&q| names[q].clone()).collect::<Vec<_>>().join(" + ")
            })
        };
        println!(
            "exchange at {}: B = {}, B' = {}, triangles match arrows: {}, x x' identity: {}",
            names[p],
            show(&e.b),
            show(&e.b_prime),
            e.bb_ok,
            e.identity_ok
        );
    }
}
