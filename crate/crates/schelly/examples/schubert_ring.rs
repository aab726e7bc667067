//! Tour of the Schubert-cocycle ring of a Grassmannian: basis
//! enumeration, Poincaré duality, transposition, the affine embedding,
//! and products via Pieri and Littlewood–Richardson.
//!
//! Run with: cargo run --example schubert_ring

use schelly::mult::{lr_product, pieri_multiply, power, schur_oracle_product};
use schelly::schubert::{enumerate_basis, CohClass, GrassmannContext, SchubertSymbol};

fn main() {
    let ctx = GrassmannContext::real(5, 2).unwrap();
    println!("cohomology basis of {ctx} by degree:");
    for degree in 0..=ctx.top_degree() {
        let basis = enumerate_basis(&ctx, degree);
        let names: Vec<String> = basis.iter().map(|s| s.to_string()).collect();
        println!("  H^{degree}: {}", names.join(", "));
    }

    let a = SchubertSymbol::new(vec![1, 2]).unwrap();
    println!("\nsymbol {a}: degree {}", a.dimension());
    println!("  Poincaré dual: {}", a.poincare_dual(&ctx).unwrap());
    let (t, tctx) = a.transpose(&ctx).unwrap();
    println!("  transpose: {t} in {tctx}");
    let (e, ectx) = a.affine_embed(&ctx).unwrap();
    println!("  affine embedding: {e} in {ectx}");

    let cls = CohClass::from_symbol(ctx, &SchubertSymbol::new(vec![0, 1]).unwrap()).unwrap();
    println!("\nPieri ladder from {cls}:");
    let mut cur = cls;
    while !cur.is_zero() {
        let next = pieri_multiply(&cur, 1).unwrap();
        println!("  * [0,1] -> {next}");
        cur = next;
    }

    let x = SchubertSymbol::new(vec![1, 2]).unwrap();
    let y = SchubertSymbol::new(vec![0, 2]).unwrap();
    let product = lr_product(&x, &y, &ctx).unwrap();
    println!("\n{x} * {y} = {product}");
    let oracle = schur_oracle_product(&x, &y, &ctx).unwrap();
    assert_eq!(product, oracle);
    println!("(the Schur-polynomial oracle agrees)");

    let g43 = GrassmannContext::real(4, 3).unwrap();
    let col = CohClass::from_symbol(g43, &SchubertSymbol::new(vec![0, 0, 1]).unwrap()).unwrap();
    println!("\npowers of [0,0,1] in {g43}:");
    for n in 0..=4 {
        println!("  ^{n} = {}", power(&col, n).unwrap());
    }
}
