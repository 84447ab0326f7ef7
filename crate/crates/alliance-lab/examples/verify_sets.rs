//! Certify claimed sets: domination, offensive alliances (plain and
//! strong), efficient domination, alliance partitions, and the unit-square
//! property in path/cycle products. Failures come with a counterexample
//! vertex.
//!
//! ```bash
//! cargo run --example verify_sets
//! ```

use alliance_lab::verify::{
    check_partition, check_square_lemma, is_dominating_set, is_efficient_dominating_set,
    is_global_offensive_alliance, is_global_strong_offensive_alliance, PartitionMode,
};
use alliance_lab::{build_family, cartesian_product, FamilySpec, VertexSet};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let c6 = build_family(&FamilySpec::Cycle(6))?;

    // {0, 3} dominates C6 and is even an efficient dominating set, but it
    // is not a global offensive alliance.
    let s = VertexSet::from_indices(6, [0, 3])?;
    println!("C6, S = {:?}", s.indices());
    println!("  dominating:          {}", is_dominating_set(&c6, &s)?.verdict);
    println!("  efficient:           {}", is_efficient_dominating_set(&c6, &s)?.verdict);
    let goa = is_global_offensive_alliance(&c6, &s)?;
    println!("  offensive alliance:  {}", goa.verdict);
    if let Some(w) = goa.witness {
        println!(
            "    counterexample: vertex {} sees {} inside vs {} outside",
            w.vertex, w.in_degree, w.out_degree
        );
    }

    // Alternate vertices of C6 form a strong (and plain) offensive alliance.
    let evens = VertexSet::from_indices(6, [0, 2, 4])?;
    println!("\nC6, S = {:?}", evens.indices());
    println!(
        "  offensive alliance:  {}",
        is_global_offensive_alliance(&c6, &evens)?.verdict
    );
    println!(
        "  strong offensive:    {}",
        is_global_strong_offensive_alliance(&c6, &evens)?.verdict
    );

    // Evens/odds is a partition into two offensive alliances.
    let odds = evens.complement();
    let cert = check_partition(
        &c6,
        &[evens.clone(), odds.clone()],
        PartitionMode::BothOffensive,
    )?;
    println!("\nC6 = evens + odds, both parts offensive: {}", cert.verdict);

    // In an odd cycle that fails: one part must take the extra vertex.
    let c5 = build_family(&FamilySpec::Cycle(5))?;
    let big = VertexSet::from_indices(5, [0, 2, 4])?;
    let small = big.complement();
    let both = check_partition(&c5, &[big.clone(), small.clone()], PartitionMode::BothOffensive)?;
    let mixed =
        check_partition(&c5, &[big, small], PartitionMode::OffensivePlusStrong)?;
    println!("C5 = {{0,2,4}} + {{1,3}}: both offensive {}", both.verdict);
    if let Some(w) = both.witness {
        println!("    {}", w.detail);
    }
    println!("C5 = {{0,2,4}} + {{1,3}}: offensive + strong {}", mixed.verdict);

    // Any offensive alliance in a grid meets every unit square at least
    // twice.
    let p4 = build_family(&FamilySpec::Path(4))?;
    let grid = cartesian_product(&p4, &p4)?;
    let checkerboard = VertexSet::from_indices(
        16,
        (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|(i, j)| (i + j) % 2 == 0)
            .map(|(i, j)| grid.index(i, j)),
    )?;
    assert!(is_global_offensive_alliance(grid.graph(), &checkerboard)?.verdict);
    let squares = check_square_lemma(&grid, &checkerboard)?;
    println!("\nP4 x P4 checkerboard meets every unit square twice: {}", squares.verdict);

    // Dropping a vertex breaks some square, and the certificate names one
    // of its corners.
    let mut damaged = VertexSet::empty(16);
    for v in checkerboard.iter().skip(1) {
        damaged.insert(v);
    }
    let cert = check_square_lemma(&grid, &damaged)?;
    println!("after removing (0,0): {}", cert.verdict);
    if let Some(w) = cert.witness {
        println!("    {}", w.detail);
    }
    Ok(())
}
