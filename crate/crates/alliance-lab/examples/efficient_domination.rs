//! Efficient dominating sets (perfect codes) and the characterization of
//! the graphs whose minimum efficient dominating set is also a global
//! offensive alliance: among connected graphs of order at least two,
//! exactly the stars.
//!
//! ```bash
//! cargo run --example efficient_domination
//! ```

use alliance_lab::exact::{find_efficient_dominating_set, star_characterization, SolveOptions};
use alliance_lab::{build_family, FamilySpec, Graph};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = SolveOptions::default();

    println!("graph   efficient dominating set      matches gamma");
    for token in ["P4", "C4", "C6", "K5", "S4", "Q3"] {
        let g = build_family(&token.parse::<FamilySpec>()?)?;
        match find_efficient_dominating_set(&g, &opts)? {
            Some(found) => println!(
                "{:<6}  {:<28}  {}",
                token,
                format!("{:?}", found.result.witness.indices()),
                found.matches_domination_number
            ),
            None => println!("{token:<6}  none exists"),
        }
    }

    println!("\ngraph   star?   alliance-compatible EDS?   sides agree");
    for token in ["S4", "S7", "P2", "P3", "P5", "C6", "K4", "Q3"] {
        let g = build_family(&token.parse::<FamilySpec>()?)?;
        let ch = star_characterization(&g, &opts)?;
        println!(
            "{:<6} {:>6} {:>17} {:>17}",
            token,
            ch.is_star,
            ch.alliance_eds.is_some(),
            ch.matches
        );
        assert!(ch.matches, "the characterization is a theorem");
    }

    // The one-vertex graph is excluded for a reason: its unique dominating
    // set is efficient and offensive, yet K1 is no star.
    let k1 = Graph::from_edges(1, [])?;
    assert!(star_characterization(&k1, &opts).is_err());
    println!("\nK1 is rejected: the characterization needs order >= 2");
    Ok(())
}
