//! Stiefel–Whitney classes, heights of w₁, Lusternik–Schnirelmann
//! category lower bounds, and the rank-locus class of the tautological
//! bundle.
//!
//! Heights are always computed by Pieri iteration in Z₂; the closed
//! forms (exact for m ≤ 2, lower bounds for m > 2 after transposing so
//! that 2m ≤ d) serve as an oracle.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mult::pieri_multiply;
use crate::schubert::{CohClass, GrassmannContext, SchubertSymbol};

/// The Stiefel–Whitney class `w_i = [0,…,0,1,…,1]` with i ones.
pub fn stiefel_whitney(ctx: &GrassmannContext, i: u32) -> Result<CohClass> {
    if i < 1 || i > ctx.m() {
        return Err(Error::OutOfRange {
            what: "w_i index",
            value: i as i64,
            min: 1,
            max: ctx.m() as i64,
        });
    }
    let mut lambda = vec![0u32; ctx.m() as usize];
    for e in lambda.iter_mut().rev().take(i as usize) {
        *e = 1;
    }
    CohClass::from_symbol(*ctx, &SchubertSymbol::new(lambda)?)
}

/// The dual Stiefel–Whitney class `w̄_i = [0,…,0,i]`.
pub fn dual_stiefel_whitney(ctx: &GrassmannContext, i: u32) -> Result<CohClass> {
    if i < 1 || i > ctx.max_entry() {
        return Err(Error::OutOfRange {
            what: "dual w_i index",
            value: i as i64,
            min: 1,
            max: ctx.max_entry() as i64,
        });
    }
    let mut lambda = vec![0u32; ctx.m() as usize];
    *lambda.last_mut().expect("m >= 1") = i;
    CohClass::from_symbol(*ctx, &SchubertSymbol::new(lambda)?)
}

/// Largest n with w₁ⁿ ≠ 0 in `H*(G(d,m); Z₂)`, by iterated Pieri
/// multiplication with k = 1. The coefficient ring of the argument is
/// ignored: heights are a mod-2 notion.
pub fn w1_height_computed(ctx: &GrassmannContext) -> u32 {
    let ctx = GrassmannContext::real(ctx.d(), ctx.m()).expect("ctx already validated");
    let mut cur = CohClass::unit(ctx);
    let mut n = 0;
    while cur.degree() < ctx.top_degree() {
        let next = pieri_multiply(&cur, 1).expect("k=1 is always in range");
        if next.is_zero() {
            break;
        }
        cur = next;
        n += 1;
    }
    n
}

/// Height data for w₁ on G(d,m): the Pieri-computed height together
/// with the closed-form bounds. `s` is the exponent of the minimal
/// power of two with 2^s ≥ d.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeightReport {
    pub d: u32,
    pub m: u32,
    pub s: u32,
    pub computed: u32,
    pub lower: u32,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub exact: Option<u32>,
}

/// Closed-form height bounds, evaluated after transposing so that
/// 2m ≤ d: exact d−1 for m = 1, exact 2^s−2 for m = 2, and a lower
/// bound (2^{s−1} when d = 2m = 2^s, else 2^s−2, never below d−m) for
/// m > 2. The computed height is included for comparison.
pub fn w1_height_closed_form(d: u32, m: u32) -> Result<HeightReport> {
    GrassmannContext::real(d, m)?;
    // transpose so the row count is the smaller parameter
    let mm = m.min(d - m);
    let mut s = 0u32;
    while (1u64 << s) < d as u64 {
        s += 1;
    }
    let pow = |e: u32| 1u32 << e;
    let (lower, exact) = match mm {
        1 => (d - 1, Some(d - 1)),
        2 => (pow(s) - 2, Some(pow(s) - 2)),
        _ => {
            let base = if d == 2 * mm && d == pow(s) {
                pow(s - 1)
            } else {
                pow(s) - 2
            };
            (base.max(d - mm), None)
        }
    };
    let small = GrassmannContext::real(d, mm)?;
    let computed = w1_height_computed(&small);
    debug_assert!(computed >= lower, "G({d},{m}): computed {computed} < lower {lower}");
    Ok(HeightReport {
        d,
        m,
        s,
        computed,
        lower,
        exact,
    })
}

/// Lower bounds for the Lusternik–Schnirelmann category of G(d,m).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CategoryBound {
    pub d: u32,
    pub m: u32,
    /// Height n of w₁ (computed after transposing so that 2m ≤ d).
    pub height: u32,
    /// min{n+2, m(d−m)+1}.
    pub sharp: u32,
    /// min{d−m+2, m(d−m)+1}; valid without the 2m ≤ d restriction.
    pub unconditional: u32,
}

pub fn ls_category_report(ctx: &GrassmannContext) -> CategoryBound {
    let d = ctx.d();
    let m = ctx.m();
    let top = ctx.top_degree();
    let mm = m.min(d - m);
    let small = GrassmannContext::real(d, mm).expect("ctx already validated");
    let height = w1_height_computed(&small);
    CategoryBound {
        d,
        m,
        height,
        sharp: (height + 2).min(top + 1),
        unconditional: (d - m + 2).min(top + 1),
    }
}

/// The sharp (height-based) category lower bound min{n+2, m(d−m)+1}.
pub fn ls_category_lower_bound(ctx: &GrassmannContext) -> u32 {
    ls_category_report(ctx).sharp
}

/// Rank-locus class of the tautological bundle, possibly truncated away
/// by the box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankLocus {
    pub class: CohClass,
    /// False when l−r exceeds d−m, in which case `class` is zero.
    pub in_box: bool,
}

/// The class `c_{l,r} = [0,…,0 (r times), l−r,…,l−r (n−r times)]` dual
/// to the locus where l generic sections of the tautological bundle
/// span rank ≤ r. Only the tautological case n_bundle = m is supported;
/// when the class falls outside the box the zero class is returned with
/// `in_box = false` rather than an error.
pub fn rank_locus_class(
    ctx: &GrassmannContext,
    l: u32,
    r: u32,
    n_bundle: u32,
) -> Result<RankLocus> {
    if n_bundle != ctx.m() {
        return Err(Error::OutOfRange {
            what: "rank-locus bundle dimension (must equal m)",
            value: n_bundle as i64,
            min: ctx.m() as i64,
            max: ctx.m() as i64,
        });
    }
    if l <= r {
        return Err(Error::OutOfRange {
            what: "rank-locus l (need l > r)",
            value: l as i64,
            min: r as i64 + 1,
            max: i64::MAX,
        });
    }
    if r > n_bundle {
        return Err(Error::OutOfRange {
            what: "rank-locus r",
            value: r as i64,
            min: 0,
            max: n_bundle as i64,
        });
    }
    let entry = l - r;
    let degree = entry * (n_bundle - r);
    if entry > ctx.max_entry() {
        return Ok(RankLocus {
            class: CohClass::zero(*ctx, degree),
            in_box: false,
        });
    }
    let mut lambda = vec![0u32; n_bundle as usize];
    for e in lambda.iter_mut().skip(r as usize) {
        *e = entry;
    }
    Ok(RankLocus {
        class: CohClass::from_symbol(*ctx, &SchubertSymbol::new(lambda)?)?,
        in_box: true,
    })
}
