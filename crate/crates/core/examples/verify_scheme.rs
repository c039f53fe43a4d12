//! Checks the partition scheme and the forest expansion on a random graph.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use clawfree_zeros::families;
use clawfree_zeros::penrose::{verify_partition_scheme, VertexOrdering};

fn main() -> clawfree_zeros::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let g = families::random_gnp(7, 0.5, &mut rng);
    let ord = VertexOrdering::random(7, &mut rng);
    println!(
        "graph: {} vertices, {} edges",
        g.vertex_count(),
        g.edge_count()
    );
    println!("ordering: {:?}", ord.sequence());

    let report = verify_partition_scheme(&g, &ord, 6)?;
    println!("{report:#?}");
    println!("passed: {}", report.passed());
    Ok(())
}
