//! Tree counts against their generating function and the majorants used
//! for the disk bound.

use clawfree_zeros::families;
use clawfree_zeros::genfun::{
    eval_counts, g_delta, h, tree_genfun, u_coefficients, w_closed_form, GenFunParams,
};
use clawfree_zeros::penrose::VertexOrdering;

fn main() -> clawfree_zeros::Result<()> {
    let p = GenFunParams::new(3, 2)?;
    let table = u_coefficients(p, 12);
    let coeffs: Vec<String> = table.coeffs().iter().map(|c| c.to_string()).collect();
    println!("u_n for d=3, m=2: {}", coeffs.join(", "));
    let y = 0.8 * p.radius();
    println!(
        "w({y:.4}) truncated {:.9}, closed form {:.9}",
        table.eval_w(y),
        w_closed_form(p, y)?
    );

    let g = families::icosahedron();
    let delta = g.max_degree() + 1;
    let ord = VertexOrdering::anchored_at(&g, 0);
    let counts = tree_genfun(&g, &ord, 0, g.vertex_count() - 1)?;
    println!("Penrose trees at vertex 0 by size: {counts:?}");
    let x = 0.4;
    let y = x / delta as f64;
    println!(
        "T(y) = {:.6} <= g_delta(y) = {:.6} <= h(x) = {:.6}",
        eval_counts(&counts, y),
        g_delta(delta, y)?,
        h(x)?
    );
    Ok(())
}
