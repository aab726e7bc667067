//! Plants a colored family with a known monochromatic transversal,
//! verifies the theorem hypothesis exactly, and recovers a certified
//! transversal by search.
//!
//! Run with: cargo run --example planted_transversals

use schelly::checkers::{ColorSpec, TheoremSpec};
use schelly::geom::check_heterochromatic;
use schelly::geom::generate::plant_family;
use schelly::geom::verify::verify_theorem_on_instance;

fn main() {
    // 4 red and 4 blue boxes in R^4; the red ones sit on a random
    // rational 2-flat, the blue ones contain everything
    let specs = vec![ColorSpec::new(2, 1), ColorSpec::new(2, 1)];
    let planted = plant_family(4, 0, 2, &specs, 2024).unwrap();
    println!("planted family: {} colors, sizes {:?}",
        planted.family.num_colors(),
        planted.family.colors().iter().map(Vec::len).collect::<Vec<_>>());
    println!("planted flat: {}", planted.planted);

    let hetero = check_heterochromatic(&planted.family).unwrap();
    println!("every representative system intersects: {hetero}");

    let theorem = TheoremSpec::ColorfulTrans { d: 4, m: 3, rho: 2, k: 1 };
    let report = verify_theorem_on_instance(&planted.family, &theorem, 10_000).unwrap();
    println!("\nhypothesis ({}) holds: {}", report.hypothesis, report.hypothesis_ok);
    println!("cohomological condition applies: {}", report.condition.applies);
    match &report.transversal {
        Some(w) => {
            println!("certified transversal for color {}: {}", w.color, w.flat);
            println!("residuals: {:?}", w.flat.residuals());
        }
        None => println!("search exhausted: {}", report.search_exhausted),
    }

    // the same machinery flags families that break the hypothesis
    let broken = plant_family(4, 0, 2, &specs, 2024).unwrap();
    let mut colors = broken.family.colors().to_vec();
    colors[1] = vec![
        schelly::geom::Polytope::cube(
            &std::iter::repeat(schelly::geom::Rat::from_integer(50.into()))
                .take(4)
                .collect::<Vec<_>>(),
            &schelly::geom::Rat::from_integer(1.into()),
        )
        .unwrap();
        4
    ];
    let far_family = schelly::geom::ColoredFamily::new(4, colors).unwrap();
    let report = verify_theorem_on_instance(&far_family, &theorem, 10_000).unwrap();
    println!("\nafter moving the blue boxes far away:");
    println!("hypothesis holds: {} ({})", report.hypothesis_ok, report.notes);
}
