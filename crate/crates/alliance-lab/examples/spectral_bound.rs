//! The Laplacian spectral radius, computed by power iteration, and the
//! lower bound `ceil(n ceil((min_degree + 1) / 2) / lambda)` it yields for
//! the alliance number.
//!
//! ```bash
//! cargo run --example spectral_bound
//! ```

use alliance_lab::exact::{global_offensive_alliance_number, SolveOptions};
use alliance_lab::spectral::{laplacian_spectral_radius, spectral_lower_bound};
use alliance_lab::{build_family, cartesian_product, FamilySpec};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    println!("graph     lambda      spectral lower   exact gamma_o");
    for token in ["P6", "C8", "K5", "S6", "Q3"] {
        let g = build_family(&token.parse::<FamilySpec>()?)?;
        let spec = laplacian_spectral_radius(&g)?;
        let (lower, _) = spectral_lower_bound(&g)?;
        let exact = global_offensive_alliance_number(&g, &SolveOptions::default())?.value;
        assert!(lower <= exact, "the bound must never overshoot");
        println!("{:<8} {:>9.5} {:>14} {:>15}", token, spec.lambda, lower, exact);
    }

    // For a complete graph K_n the radius is exactly n, and for products
    // the factor radii add; both are useful sanity anchors.
    let k4 = build_family(&FamilySpec::Complete(4))?;
    let k6 = build_family(&FamilySpec::Complete(6))?;
    let both = cartesian_product(&k4, &k6)?.into_graph();
    let lambda = laplacian_spectral_radius(&both)?.lambda;
    println!("\nlambda(K4 x K6) = {lambda:.6} (factor radii 4 and 6 add to 10)");
    assert!((lambda - 10.0).abs() < 1e-6);

    // The 3-cube: lambda = 6 and the bound gives 3, while the true
    // alliance number is 4 - lower bounds need not be tight.
    let q3 = build_family(&FamilySpec::Hypercube(3))?;
    let spec = laplacian_spectral_radius(&q3)?;
    let (lower, _) = spectral_lower_bound(&q3)?;
    println!(
        "3-cube: lambda = {:.6} after {} iterations (residual {:.2e}), bound {} vs exact 4",
        spec.lambda, spec.iterations, spec.residual, lower
    );
    Ok(())
}
