//! Constructive recipes: checkerboard and third-row patterns in grids,
//! row/column stripes in cylinders, two-partition products, and the
//! complement of an independent set. Every construction is re-verified
//! before it is returned.
//!
//! ```bash
//! cargo run --example alliance_constructions
//! ```

use alliance_lab::constructions::{
    canonical_two_partition, complement_of_independent_set, cylinder_goa, grid_goa,
    product_partition_goa,
};
use alliance_lab::exact::{global_offensive_alliance_number, independence_number, SolveOptions};
use alliance_lab::{build_family, FamilySpec, VertexSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = SolveOptions::default();

    println!("grid      recipe            built  optimal");
    for (r, t) in [(4, 4), (4, 5), (3, 5), (5, 5)] {
        let (pg, c) = grid_goa(r, t)?;
        let exact = global_offensive_alliance_number(pg.graph(), &opts)?.value;
        println!(
            "P{r} x P{t}   {:<17} {:>4} {:>8}",
            c.recipe,
            c.cardinality(),
            exact
        );
        assert!(c.cardinality() >= exact);
    }

    println!("\ncylinder  recipe            built  optimal");
    for (r, t) in [(4, 5), (3, 6)] {
        let (pg, c) = cylinder_goa(r, t)?;
        let exact = global_offensive_alliance_number(pg.graph(), &opts)?.value;
        println!(
            "P{r} x C{t}   {:<17} {:>4} {:>8}",
            c.recipe,
            c.cardinality(),
            exact
        );
    }

    // Two-partition product: split each factor into an offensive part and
    // a strong part, then take X1 x Y1 together with X2 x Y2.
    let (g, gp) = canonical_two_partition(&FamilySpec::Cycle(6))?;
    let (h, hp) = canonical_two_partition(&FamilySpec::Complete(4))?;
    let (pg, c) = product_partition_goa(&g, &h, &gp, &hp)?;
    println!(
        "\nC6 x K4 from two-partitions: {} of {} vertices ({})",
        c.cardinality(),
        pg.graph().n(),
        c.recipe
    );
    let coords: Vec<(usize, usize)> = c.set.iter().map(|v| pg.coords(v)).collect();
    println!("cells: {coords:?}");

    // Complement of a maximum independent set; in C7 this is optimal-ish
    // but in general only an upper bound.
    let c7 = build_family(&FamilySpec::Cycle(7))?;
    let mis: VertexSet = independence_number(&c7, &opts)?.witness;
    let comp = complement_of_independent_set(&c7, &mis)?;
    let exact = global_offensive_alliance_number(&c7, &opts)?.value;
    println!(
        "\nC7: complement of independent {:?} gives alliance {:?} (size {}, optimum {})",
        mis.indices(),
        comp.set.indices(),
        comp.cardinality(),
        exact
    );
    Ok(())
}
