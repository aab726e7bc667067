//! Runs every theorem checker on its headline case and prints the
//! verdicts with their witnesses.
//!
//! Run with: cargo run --example theorem_checkers

use schelly::checkers::{run_checker, ColorSpec, TheoremSpec};

fn show(label: &str, spec: TheoremSpec) {
    let report = run_checker(&spec).unwrap();
    println!(
        "{label}\n  applies: {}  ({})",
        report.applies, report.notes
    );
    for entry in &report.trace {
        println!("    {}: {}", entry.check, entry.value);
    }
    println!();
}

fn main() {
    // 4 red and 4 blue sets in R^4, every red meets every blue:
    // some color has a 2-plane transversal
    show(
        "colorful, d=4 m=3 rho=2 k=1 (red/blue 2-planes in R^4)",
        TheoremSpec::ColorfulTrans { d: 4, m: 3, rho: 2, k: 1 },
    );

    show(
        "colorful-multi, d=4 m=2, mixed specs (0,1),(1,1),(1,1)",
        TheoremSpec::ColorfulTransMulti {
            d: 4,
            m: 2,
            specs: vec![
                ColorSpec::new(0, 1),
                ColorSpec::new(1, 1),
                ColorSpec::new(1, 1),
            ],
        },
    );

    show(
        "inequality corollary, d=4 k=1 rhos=[2,1] (|F| = 7 = kd+2k+1)",
        TheoremSpec::IneqCorollary { d: 4, k: 1, rhos: vec![2, 1] },
    );

    // 3 red, 3 blue, 3 green sets in R^4 with intersecting
    // heterochromatic triples: some color has a line transversal
    show(
        "category-based, n=3 rho=1 (3-color lines in R^4)",
        TheoremSpec::LsTrans { n: 3, rho: 1 },
    );

    // 4 red, 4 blue, 4 green in R^4, heterochromatic triples
    // semintersecting: some color has a 2-plane transversal
    show(
        "semintersecting, d=4 m=3, specs (2,1)x3",
        TheoremSpec::SemiTrans {
            d: 4,
            m: 3,
            specs: vec![ColorSpec::new(2, 1); 3],
        },
    );

    show(
        "semintersecting inequality, d=4 k=1 rhos=[2,2,2] (|F| = 12)",
        TheoremSpec::SemiIneq { d: 4, k: 1, rhos: vec![2, 2, 2] },
    );

    show(
        "semintersecting category-based, n=3 rho=2",
        TheoremSpec::SemiLs { n: 3, rho: 2 },
    );

    show(
        "complex case, d=4 m=3, specs (2,1)x3 (integer coefficients)",
        TheoremSpec::ComplexTrans {
            d: 4,
            m: 3,
            specs: vec![ColorSpec::new(2, 1); 3],
        },
    );

    show(
        "linear map of L_(3,3) into R^2",
        TheoremSpec::LinearMap { eta: vec![3, 3], d: 2 },
    );

    // a negative verdict for contrast: w1^3 = 0 in G(4,2)
    show(
        "colorful, d=4 m=2 rho=1 k=1 (fails: w1^3 = 0 mod 2)",
        TheoremSpec::ColorfulTrans { d: 4, m: 2, rho: 1, k: 1 },
    );
}
