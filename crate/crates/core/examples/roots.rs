//! Chromatic roots of the icosahedron and the disk that must contain them.

use clawfree_zeros::bounds::minimize_c;
use clawfree_zeros::families;
use clawfree_zeros::graph::{classify, pair_independence_ratio};
use clawfree_zeros::penrose::{chromatic_via_penrose, VertexOrdering};
use clawfree_zeros::roots::{all_inside, find_roots};
use num_traits::ToPrimitive;

fn main() -> clawfree_zeros::Result<()> {
    let g = families::icosahedron();
    let class = classify(&g).class_index.expect("claw-free");
    let kappa = pair_independence_ratio(&g)?;
    let delta = g.max_degree();
    let c = minimize_c(class, kappa.to_f64().unwrap_or(1.0))?.c_star;
    let radius = c * delta as f64;

    let p = chromatic_via_penrose(&g, &VertexOrdering::natural(g.vertex_count()))?;
    let report = find_roots(&p)?;
    for r in &report.roots {
        println!("{:>10.6} {:+.6}i   |q| = {:.6}", r.re, r.im, r.modulus());
    }
    println!(
        "class {class}, kappa {kappa}, max degree {delta}: bound {radius:.6}, largest |q| {:.6}",
        report.max_modulus()
    );
    println!("all roots inside: {}", all_inside(&report, radius));
    Ok(())
}
