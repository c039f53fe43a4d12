//! Class membership and pair independence ratio of a few small graphs.

use clawfree_zeros::families;
use clawfree_zeros::graph::{classify, neighborhood_stats};

fn main() {
    let graphs = [
        ("K4", families::complete(4)),
        ("C5", families::cycle(5)),
        ("octahedron", families::octahedron()),
        ("icosahedron", families::icosahedron()),
        ("L(K4)", families::line_graph(&families::complete(4))),
        ("claw", families::star(3)),
    ];
    println!(
        "{:<12} {:>5} {:>6} {:>7} {:>5} {:>6}",
        "graph", "claw", "C4", "diamond", "class", "kappa"
    );
    for (name, g) in graphs {
        let c = classify(&g);
        let kappa = neighborhood_stats(&g)
            .kappa
            .map_or("-".to_string(), |k| k.to_string());
        let class = c.class_index.map_or("-".to_string(), |i| i.to_string());
        println!(
            "{name:<12} {:>5} {:>6} {:>7} {class:>5} {kappa:>6}",
            !c.claw_free, !c.square_free, !c.diamond_free
        );
    }
}
