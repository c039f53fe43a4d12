//! Chromatic polynomial of the octahedron through the Penrose forest
//! expansion, checked against deletion-contraction.

use clawfree_zeros::chromatic::chromatic_deletion_contraction;
use clawfree_zeros::families;
use clawfree_zeros::penrose::{
    chromatic_via_penrose, penrose_polynomial, ForestTable, VertexOrdering,
};

fn main() -> clawfree_zeros::Result<()> {
    let g = families::octahedron();
    let ord = VertexOrdering::natural(g.vertex_count());

    let forests = penrose_polynomial(&g, &ord)?;
    println!("F(z) = {}", forests.display_in("z"));

    let table = ForestTable::build(&g, &ord, 12)?;
    println!(
        "Penrose spanning trees: {}",
        table.tree_count(table.full_mask())
    );

    let p = chromatic_via_penrose(&g, &ord)?;
    println!("P(q) = {}", p.display_in("q"));
    assert_eq!(p, chromatic_deletion_contraction(&g)?);
    println!("matches deletion-contraction");
    Ok(())
}
