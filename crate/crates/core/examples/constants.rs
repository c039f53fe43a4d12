//! Zero-free disk constants for both classes over a kappa grid, and the
//! radius for a given maximum degree.

use clawfree_zeros::bounds::{minimize_c, table1, BoundQuery};

fn main() -> clawfree_zeros::Result<()> {
    println!("kappa      C0        C1        a0*       a1*");
    for row in table1(0.1)? {
        println!(
            "{:.1}   {:.6}  {:.6}  {:.6}  {:.6}",
            row.kappa, row.c0, row.c1, row.a0, row.a1
        );
    }

    let m = minimize_c(0, 0.75)?;
    let r = BoundQuery::new(0, 0.75)?
        .with_a(m.a_star)?
        .evaluate(Some(6))?;
    println!(
        "\nclaw-free, kappa 0.75, max degree 6: zeros lie in |q| < {:.6}",
        r.radius.unwrap_or(f64::NAN)
    );
    Ok(())
}
