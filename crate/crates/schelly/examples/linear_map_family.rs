//! Linear images of the complex L_η: builds the colored family of face
//! images for a random vertex placement, checks the size condition, and
//! finds the guaranteed transversal.
//!
//! Run with: cargo run --example linear_map_family

use schelly::checkers::{run_checker, TheoremSpec};
use schelly::geom::generate::{build_leta_family, random_rational_points};
use schelly::geom::search::find_flat_transversal;
use schelly::geom::check_heterochromatic;

fn main() {
    // L_(3,3) has vertex grid [3]x[3]; color i fixes the i-th index.
    // With sum(eta) = 6 >= (l-1)(d+2)+1 = 5 in the plane, some color
    // admits a transversal of dimension n_i - l = 1.
    let eta = vec![3u32, 3];
    let d = 2usize;
    let coords = random_rational_points(d, 9, 8, 3, 7);
    println!("vertex placements:");
    for (i, c) in coords.iter().enumerate() {
        println!("  v{:?} -> ({}, {})", (i / 3, i % 3), c[0], c[1]);
    }

    let fam = build_leta_family(d, &eta, &coords).unwrap();
    println!(
        "\nfamily: {} colors of sizes {:?}",
        fam.num_colors(),
        fam.colors().iter().map(Vec::len).collect::<Vec<_>>()
    );
    println!(
        "heterochromatic systems intersect (shared grid vertices): {}",
        check_heterochromatic(&fam).unwrap()
    );

    let spec = TheoremSpec::LinearMap { eta: eta.clone(), d: d as u32 };
    let report = run_checker(&spec).unwrap();
    println!("size condition applies: {}", report.applies);

    for (color, class) in fam.colors().iter().enumerate() {
        match find_flat_transversal(class, 1, 50_000).unwrap() {
            Some(flat) => {
                println!("color {color}: line transversal found: {flat}");
                return;
            }
            None => println!("color {color}: no line transversal"),
        }
    }
    unreachable!("the theorem guarantees a transversal for some color");
}
