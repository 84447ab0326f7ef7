//! The closed-formula catalog for products of named families, checked
//! against the exact solver, plus the combined bound envelope for products
//! with no closed form.
//!
//! ```bash
//! cargo run --example formula_catalog
//! ```

use alliance_lab::exact::{global_offensive_alliance_number, SolveOptions};
use alliance_lab::formulas::{bound_envelope, closed_formula, hypercube_bounds, ProductSpec};
use alliance_lab::{build_family, cartesian_product, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let opts = SolveOptions::default();
    let catalog = [
        ("P4", "P6"), // grid, even sides
        ("P4", "P5"), // grid, one odd side
        ("P5", "P5"), // grid, both odd
        ("P3", "C6"), // cylinder
        ("C4", "C6"), // torus
        ("K4", "P3"), // clique x path
        ("K3", "C5"), // clique x cycle
        ("K3", "K5"), // cliques, equal parity
        ("K4", "K5"), // cliques, mixed parity
        ("Q1", "Q2"), // hypercube x hypercube
    ];

    println!("product    formula          solver  source");
    for (a, b) in catalog {
        let spec = ProductSpec {
            left: a.parse::<FamilySpec>()?,
            right: b.parse::<FamilySpec>()?,
        };
        let bracket = closed_formula(&spec)?.expect("catalog entries all have formulas");
        let g = build_family(&spec.left)?;
        let h = build_family(&spec.right)?;
        let product = cartesian_product(&g, &h)?.into_graph();
        let exact = global_offensive_alliance_number(&product, &opts)?.value;
        let shown = match bracket.hi {
            Some(hi) if hi == bracket.lo => format!("= {}", bracket.lo),
            Some(hi) => format!("[{}, {}]", bracket.lo, hi),
            None => format!(">= {}", bracket.lo),
        };
        assert!(bracket.lo <= exact && bracket.hi.is_none_or(|hi| exact <= hi));
        println!("{:<4}x{:<5} {:<16} {:>5}   {}", a, b, shown, exact, bracket.source);
    }

    // Hypercubes: exact in low dimension, a bracket beyond.
    println!("\nk   gamma_o(Q_k)");
    for k in 1..=6 {
        let b = hypercube_bounds(k);
        match b.hi {
            Some(hi) if hi == b.lo => println!("{k}   = {}", b.lo),
            Some(hi) => println!("{k}   in [{}, {}]", b.lo, hi),
            None => println!("{k}   >= {}", b.lo),
        }
    }

    // No closed formula covers a star product, but the envelope of general
    // bounds still brackets the value.
    let star = build_family(&FamilySpec::Star(4))?;
    let path = build_family(&FamilySpec::Path(4))?;
    let env = bound_envelope(&star, &path, &opts)?;
    let product = cartesian_product(&star, &path)?.into_graph();
    let exact = global_offensive_alliance_number(&product, &opts)?.value;
    println!(
        "\nS4 x P4 has no closed formula; the envelope gives [{}, {}] (exact {exact}):",
        env.combined.lo,
        env.combined.hi.expect("finite upper bound")
    );
    for part in &env.parts {
        let hi = part.hi.map_or("-".to_string(), |h| h.to_string());
        println!("  lo {:>2}  hi {:>3}  {}", part.lo, hi, part.source);
    }
    Ok(())
}
