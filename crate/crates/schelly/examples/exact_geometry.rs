//! The exact rational geometry layer: intersection tests, membership,
//! point transversals, semintersecting families, and flat queries —
//! all decided by exact simplex, reliable at touching boundaries.
//!
//! Run with: cargo run --example exact_geometry

use schelly::geom::{
    check_semintersecting, contains_point, find_point_transversal, flat_meets_polytope,
    intersects, FlatCandidate, Polytope, Rat,
};

fn ri(x: i64) -> Rat {
    Rat::from_integer(x.into())
}

fn rq(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}

fn main() {
    // two unit squares that touch in exactly one corner point
    let a = Polytope::from_box(&[ri(0), ri(0)], &[ri(1), ri(1)]).unwrap();
    let b = Polytope::from_box(&[ri(1), ri(1)], &[ri(2), ri(2)]).unwrap();
    println!("corner-touching squares intersect: {}", intersects(&[a.clone(), b.clone()]).unwrap());
    let x = find_point_transversal(&[a.clone(), b.clone()]).unwrap().unwrap();
    println!("common point: ({}, {})", x[0], x[1]);

    // shrink one square by an invisible 1/1000000 and they separate
    let eps = rq(1, 1_000_000);
    let a_shrunk = Polytope::from_box(&[ri(0), ri(0)], &[ri(1) - &eps, ri(1) - &eps]).unwrap();
    println!(
        "after shrinking by {eps}: {}",
        intersects(&[a_shrunk, b.clone()]).unwrap()
    );

    // membership at a boundary point is exact
    println!(
        "(1/2, 1) on the edge of the first square: {}",
        contains_point(&a, &[rq(1, 2), ri(1)]).unwrap()
    );

    // a semintersecting triple: the long box meets both short ones,
    // which are disjoint from each other
    let long = Polytope::from_box(&[ri(0), ri(0)], &[ri(10), ri(1)]).unwrap();
    let left = Polytope::from_box(&[ri(1), ri(0)], &[ri(2), ri(1)]).unwrap();
    let right = Polytope::from_box(&[ri(7), ri(0)], &[ri(8), ri(1)]).unwrap();
    println!(
        "semintersecting triple: {}",
        check_semintersecting(&[long, left, right]).unwrap()
    );

    // flat queries: the diagonal line meets the box exactly in a corner
    let cube = Polytope::from_box(&[ri(2), ri(2)], &[ri(3), ri(3)]).unwrap();
    let diagonal =
        FlatCandidate::new(vec![ri(0), ri(4)], vec![vec![ri(1), ri(-1)]]).unwrap();
    println!(
        "anti-diagonal line through (2,2)-corner box: {}",
        flat_meets_polytope(&diagonal, &cube).unwrap()
    );
    let shifted = FlatCandidate::new(vec![ri(0), rq(39, 10)], vec![vec![ri(1), ri(-1)]]).unwrap();
    println!(
        "same line shifted down by 1/10: {}",
        flat_meets_polytope(&shifted, &cube).unwrap()
    );
}
