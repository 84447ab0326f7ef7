//! Cartesian products: vertex indexing, fibers, degree additivity.
//!
//! ```bash
//! cargo run --example products
//! ```

use alliance_lab::{build_family, cartesian_product, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let g = build_family(&FamilySpec::Path(3))?;
    let h = build_family(&FamilySpec::Cycle(4))?;
    let pg = cartesian_product(&g, &h)?;

    println!(
        "P3 x C4: {} vertices, {} edges",
        pg.graph().n(),
        pg.graph().edge_count()
    );
    // |E(G x H)| = |V(G)| |E(H)| + |E(G)| |V(H)|
    assert_eq!(
        pg.graph().edge_count(),
        g.n() * h.edge_count() + g.edge_count() * h.n()
    );

    // A product vertex is a coordinate pair; its degree is the sum of the
    // coordinate degrees.
    let v = pg.index(1, 2);
    let (i, j) = pg.coords(v);
    println!("vertex {v} has coordinates ({i}, {j})");
    assert_eq!(
        pg.graph().degree(v),
        g.degree(1) + h.degree(2),
        "degrees add coordinatewise"
    );

    // Fibers are copies of the factors.
    let row = pg.left_fiber(2)?; // vertices (0..3, 2)
    println!("fiber over column 2: {:?}", row.indices());
    assert_eq!(row.len(), g.n());

    // Orientation does not matter up to isomorphism: same order and size.
    let qg = cartesian_product(&h, &g)?;
    assert_eq!(qg.graph().n(), pg.graph().n());
    assert_eq!(qg.graph().edge_count(), pg.graph().edge_count());

    // Products of products: the 3-cube as K2 x K2 x K2.
    let k2 = build_family(&FamilySpec::Complete(2))?;
    let square = cartesian_product(&k2, &k2)?.into_graph();
    let cube = cartesian_product(&square, &k2)?.into_graph();
    let q3 = build_family(&FamilySpec::Hypercube(3))?;
    println!(
        "K2 x K2 x K2: {} vertices, {} edges (the 3-cube has {} and {})",
        cube.n(),
        cube.edge_count(),
        q3.n(),
        q3.edge_count()
    );
    assert_eq!((cube.n(), cube.edge_count()), (q3.n(), q3.edge_count()));
    Ok(())
}
