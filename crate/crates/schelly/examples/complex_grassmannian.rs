//! Integer-coefficient Schubert calculus for complex Grassmannians:
//! positive structure constants, the mod-2 reduction map, and the
//! dimension-count fast path of the complex transversal theorem.
//!
//! Run with: cargo run --example complex_grassmannian

use schelly::checkers::{check_complex_trans, ColorSpec};
use schelly::mult::lr_product;
use schelly::schubert::{GrassmannContext, SchubertSymbol};

fn main() {
    let z = GrassmannContext::complex(6, 3).unwrap();
    let z2 = GrassmannContext::real(6, 3).unwrap();
    let s = SchubertSymbol::new(vec![0, 1, 2]).unwrap();

    let over_z = lr_product(&s, &s, &z).unwrap();
    let over_z2 = lr_product(&s, &s, &z2).unwrap();
    println!("{s}^2 in {z}:  {over_z}");
    println!("{s}^2 in {z2}: {over_z2}");
    println!("(the coefficient-2 term survives over Z and cancels mod 2)\n");
    assert_eq!(over_z.reduced_mod2(), over_z2);

    // the complex theorem needs 2(d-m)+1 colors; with special classes
    // the verdict is just a dimension count
    let specs = vec![ColorSpec::new(2, 1); 3];
    let report = check_complex_trans(4, 3, &specs).unwrap();
    println!("complex check d=4 m=3, specs (2,1)x3:");
    println!("  applies: {}", report.applies);
    for t in &report.trace {
        println!("  {}: {}", t.check, t.value);
    }

    let specs = vec![ColorSpec::new(1, 1); 5];
    let report = check_complex_trans(4, 2, &specs).unwrap();
    println!("\ncomplex check d=4 m=2, specs (1,1)x5:");
    println!("  applies: {} (total degree exceeds the box)", report.applies);
}
