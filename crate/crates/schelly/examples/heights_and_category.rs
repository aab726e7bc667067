//! Heights of the first Stiefel–Whitney class and the resulting
//! Lusternik–Schnirelmann category lower bounds, computed by Pieri
//! iteration and compared against the closed forms.
//!
//! Run with: cargo run --example heights_and_category

use schelly::classes::{ls_category_report, w1_height_closed_form};
use schelly::schubert::GrassmannContext;

fn main() {
    println!("{:>4} {:>4} {:>6} {:>9} {:>7} {:>6} {:>10} {:>8}",
        "d", "m", "dim", "computed", "lower", "exact", "cat sharp", "cat any");
    for d in 2..=12u32 {
        for m in 1..d {
            if m > d - m {
                continue; // transposition-symmetric half
            }
            let h = w1_height_closed_form(d, m).unwrap();
            let ctx = GrassmannContext::real(d, m).unwrap();
            let cat = ls_category_report(&ctx);
            let exact = h
                .exact
                .map(|e| e.to_string())
                .unwrap_or_else(|| "-".to_string());
            println!(
                "{:>4} {:>4} {:>6} {:>9} {:>7} {:>6} {:>10} {:>8}",
                d,
                m,
                ctx.top_degree(),
                h.computed,
                h.lower,
                exact,
                cat.sharp,
                cat.unconditional
            );
            assert!(h.computed >= h.lower);
        }
    }
    println!("\n(for m > 2 only lower bounds are known in closed form;");
    println!(" the computed column is always the exact Pieri-iterated height)");
}
