//! Applicability checkers for the colorful-Helly-type transversal
//! theorems: each one evaluates the stated cohomological or arithmetic
//! condition and returns a [`TheoremReport`] with a witness and a
//! machine-readable trace of every sub-check.
//!
//! Checkers are pure parameter → verdict functions; geometric hypothesis
//! testing lives in [`crate::geom`].

use serde::{Deserialize, Deserializer, Serialize};

use crate::classes::ls_category_lower_bound;
use crate::error::{Error, Result};
use crate::mult::{multiply, power};
use crate::schubert::{CohClass, GrassmannContext, SchubertSymbol};

/// Parameters of one color: `rho_i`, `k_i`, and the number of sets of
/// that color (defaults to ρ+k+1, the fixed-size theorems' count).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ColorSpec {
    pub rho: u32,
    pub k: u32,
    pub count: u32,
}

impl ColorSpec {
    pub fn new(rho: u32, k: u32) -> Self {
        ColorSpec {
            rho,
            k,
            count: rho + k + 1,
        }
    }

    pub fn with_count(rho: u32, k: u32, count: u32) -> Self {
        ColorSpec { rho, k, count }
    }

    fn check_in(&self, ctx: &GrassmannContext) -> Result<()> {
        if self.rho >= ctx.m() {
            return Err(Error::OutOfRange {
                what: "rho",
                value: self.rho as i64,
                min: 0,
                max: ctx.m() as i64 - 1,
            });
        }
        if self.k < 1 || self.k > ctx.max_entry() {
            return Err(Error::OutOfRange {
                what: "k",
                value: self.k as i64,
                min: 1,
                max: ctx.max_entry() as i64,
            });
        }
        Ok(())
    }
}

impl<'de> Deserialize<'de> for ColorSpec {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            rho: u32,
            k: u32,
            count: Option<u32>,
        }
        let r = Repr::deserialize(deserializer)?;
        Ok(ColorSpec {
            rho: r.rho,
            k: r.k,
            count: r.count.unwrap_or(r.rho + r.k + 1),
        })
    }
}

/// Which theorem a report refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TheoremId {
    ColorfulTrans,
    ColorfulTransMulti,
    IneqCorollary,
    LsTrans,
    SemiTrans,
    SemiIneq,
    SemiLs,
    ComplexTrans,
    LinearMap,
}

/// Witness backing a verdict: the nonzero cohomology product, or the
/// two sides of the operative inequality.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Class(CohClass),
    Inequality { lhs: i64, rhs: i64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub check: String,
    pub value: String,
}

/// Structured verdict of a theorem-applicability check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem: TheoremId,
    pub params: serde_json::Value,
    pub applies: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<Witness>,
    pub trace: Vec<TraceEntry>,
    pub notes: String,
}

impl TheoremReport {
    fn with_class_witness(
        theorem: TheoremId,
        params: serde_json::Value,
        witness: CohClass,
        trace: Vec<TraceEntry>,
        notes: String,
    ) -> Self {
        TheoremReport {
            theorem,
            params,
            applies: !witness.is_zero(),
            witness: Some(Witness::Class(witness)),
            trace,
            notes,
        }
    }
}

fn trace(check: impl Into<String>, value: impl ToString) -> TraceEntry {
    TraceEntry {
        check: check.into(),
        value: value.to_string(),
    }
}

/// The class `[0,…,0 (ρ), k,…,k (m−ρ)]` whose nonvanishing on the
/// transversal space defines a topological ρ-transversal of index (m,k).
pub fn transversal_class(ctx: &GrassmannContext, rho: u32, k: u32) -> Result<CohClass> {
    ColorSpec::new(rho, k).check_in(ctx)?;
    let mut lambda = vec![0u32; ctx.m() as usize];
    for e in lambda.iter_mut().skip(rho as usize) {
        *e = k;
    }
    CohClass::from_symbol(*ctx, &SchubertSymbol::new(lambda)?)
}

fn product_of_spec_classes(ctx: &GrassmannContext, specs: &[ColorSpec]) -> Result<CohClass> {
    let mut acc = CohClass::unit(*ctx);
    for spec in specs {
        let cls = transversal_class(ctx, spec.rho, spec.k)?;
        acc = multiply(&acc, &cls)?;
    }
    Ok(acc)
}

/// Colored-family theorem with one (ρ,k) for every color: applies iff
/// `[0^ρ,k^{m−ρ}]^{d−m+1} ≠ 0` over Z₂.
pub fn check_colorful_trans(d: u32, m: u32, rho: u32, k: u32) -> Result<TheoremReport> {
    let ctx = GrassmannContext::real(d, m)?;
    let cls = transversal_class(&ctx, rho, k)?;
    let exponent = d - m + 1;
    let prod = power(&cls, exponent)?;
    let trace_entries = vec![
        trace("class", cls.terms().next().map(|(s, _)| s.to_string()).unwrap_or_default()),
        trace("exponent d-m+1", exponent),
        trace("product degree", prod.degree()),
        trace("top degree", ctx.top_degree()),
        trace("product", &prod),
    ];
    Ok(TheoremReport::with_class_witness(
        TheoremId::ColorfulTrans,
        serde_json::json!({"d": d, "m": m, "rho": rho, "k": k}),
        prod,
        trace_entries,
        format!(
            "{} colors with {} sets each in R^{d}; verdict is the Z2 power",
            exponent,
            rho + k + 1
        ),
    ))
}

/// Independent-colors variant: exactly d−m+1 specs, applies iff the Z₂
/// product of their classes is nonzero. Also serves the `T_ρ^{ρ+k+1}`
/// property variant, where color sizes are arbitrary.
pub fn check_colorful_trans_multi(d: u32, m: u32, specs: &[ColorSpec]) -> Result<TheoremReport> {
    let ctx = GrassmannContext::real(d, m)?;
    let expected = (d - m + 1) as usize;
    if specs.len() != expected {
        return Err(Error::SpecCount {
            expected,
            got: specs.len(),
        });
    }
    let prod = product_of_spec_classes(&ctx, specs)?;
    let trace_entries = vec![
        trace(
            "total degree",
            specs.iter().map(|s| s.k * (m - s.rho)).sum::<u32>(),
        ),
        trace("top degree", ctx.top_degree()),
        trace("product", &prod),
    ];
    Ok(TheoremReport::with_class_witness(
        TheoremId::ColorfulTransMulti,
        serde_json::json!({"d": d, "m": m, "specs": specs}),
        prod,
        trace_entries,
        "Z2 product of per-color classes".to_string(),
    ))
}

/// Inequality corollary (k+1 colors in R^d, m = d−k): applies iff
/// Σρ_i ≥ k(d−k). The equivalent Z₂ product is computed as a
/// cross-check and recorded in the trace.
pub fn check_ineq_corollary(d: u32, k: u32, rhos: &[u32]) -> Result<TheoremReport> {
    ineq_check_common(TheoremId::IneqCorollary, d, k, rhos, 1)
}

/// Semintersecting inequality corollary (k+2 colors): applies iff
/// Σρ_i ≥ (d−k)(k+1).
pub fn check_semi_ineq(d: u32, k: u32, rhos: &[u32]) -> Result<TheoremReport> {
    ineq_check_common(TheoremId::SemiIneq, d, k, rhos, 2)
}

fn ineq_check_common(
    id: TheoremId,
    d: u32,
    k: u32,
    rhos: &[u32],
    extra_colors: u32,
) -> Result<TheoremReport> {
    if k < 1 || k >= d {
        return Err(Error::OutOfRange {
            what: "k",
            value: k as i64,
            min: 1,
            max: d as i64 - 1,
        });
    }
    let m = d - k;
    let ctx = GrassmannContext::real(d, m)?;
    let expected = (k + extra_colors) as usize;
    if rhos.len() != expected {
        return Err(Error::SpecCount {
            expected,
            got: rhos.len(),
        });
    }
    let specs: Vec<ColorSpec> = rhos.iter().map(|&rho| ColorSpec::new(rho, k)).collect();
    for s in &specs {
        s.check_in(&ctx)?;
    }
    let lhs: i64 = rhos.iter().map(|&r| r as i64).sum();
    let rhs = match id {
        TheoremId::IneqCorollary => (k * (d - k)) as i64,
        _ => ((d - k) * (k + 1)) as i64,
    };
    let applies = lhs >= rhs;

    let prod = product_of_spec_classes(&ctx, &specs)?;
    assert_eq!(
        applies,
        !prod.is_zero(),
        "inequality and cohomology verdicts must agree (d={d}, k={k}, rhos={rhos:?})"
    );
    let family_size: u32 = specs.iter().map(|s| s.count).sum();
    let size_threshold = match id {
        TheoremId::IneqCorollary => k * d + 2 * k + 1,
        _ => (d + 2) * (k + 1),
    };
    let trace_entries = vec![
        trace("sum of rhos", lhs),
        trace("threshold", rhs),
        trace("family size", family_size),
        trace("family size threshold", size_threshold),
        trace("cohomology product", &prod),
        trace("cohomology agrees", applies == !prod.is_zero()),
    ];
    Ok(TheoremReport {
        theorem: id,
        params: serde_json::json!({"d": d, "k": k, "rhos": rhos}),
        applies,
        witness: Some(Witness::Inequality { lhs, rhs }),
        trace: trace_entries,
        notes: format!("{} colors in R^{d}, m = {m}", k + extra_colors),
    })
}

/// Category-based theorem for n colors of ρ+2 sets in R^{n+ρ}: applies
/// iff ρ ≥ 1, n ≥ 2, n ≤ (ρ+1)(n−1), and n < cat G(n+ρ, ρ+1).
pub fn check_ls_trans(n: i64, rho: i64) -> Result<TheoremReport> {
    ls_check_common(TheoremId::LsTrans, n, rho)
}

/// Semintersecting analogue in R^{n+ρ−1}: applies iff ρ ≥ 2, n ≥ 3,
/// n ≤ (ρ+1)(n−2), and n < cat G(n+ρ−1, ρ+1).
pub fn check_semi_ls(n: i64, rho: i64) -> Result<TheoremReport> {
    ls_check_common(TheoremId::SemiLs, n, rho)
}

fn ls_check_common(id: TheoremId, n: i64, rho: i64) -> Result<TheoremReport> {
    let semi = matches!(id, TheoremId::SemiLs);
    let (rho_min, n_min) = if semi { (2, 3) } else { (1, 2) };
    let mut entries = Vec::new();
    let mut applies = true;

    let rho_ok = rho >= rho_min;
    entries.push(trace(format!("rho >= {rho_min}"), rho_ok));
    applies &= rho_ok;
    let n_ok = n >= n_min;
    entries.push(trace(format!("n >= {n_min}"), n_ok));
    applies &= n_ok;

    let mut witness = None;
    if applies {
        let slack = n - if semi { 2 } else { 1 };
        let dim = (rho + 1) * slack;
        let dim_ok = n <= dim;
        entries.push(trace("n <= dim G", format!("{n} <= {dim}: {dim_ok}")));
        applies &= dim_ok;
        if applies {
            let d = if semi { n + rho - 1 } else { n + rho } as u32;
            let m = (rho + 1) as u32;
            let ctx = GrassmannContext::real(d, m)?;
            let cat = ls_category_lower_bound(&ctx) as i64;
            let cat_ok = n < cat;
            entries.push(trace(
                "n < cat lower bound",
                format!("{n} < {cat}: {cat_ok} (G({d},{m}))"),
            ));
            applies &= cat_ok;
            witness = Some(Witness::Inequality { lhs: n, rhs: cat });
        }
    }
    Ok(TheoremReport {
        theorem: id,
        params: serde_json::json!({"n": n, "rho": rho}),
        applies,
        witness,
        trace: entries,
        notes: format!(
            "{n} colors of {} sets in R^{}",
            rho + 2,
            if semi { n + rho - 1 } else { n + rho }
        ),
    })
}

/// Semintersecting colored-family theorem: exactly d−m+2 specs, applies
/// iff the Z₂ product of their classes is nonzero.
pub fn check_semi_trans(d: u32, m: u32, specs: &[ColorSpec]) -> Result<TheoremReport> {
    let ctx = GrassmannContext::real(d, m)?;
    let expected = (d - m + 2) as usize;
    if specs.len() != expected {
        return Err(Error::SpecCount {
            expected,
            got: specs.len(),
        });
    }
    let prod = product_of_spec_classes(&ctx, specs)?;
    let trace_entries = vec![
        trace(
            "total degree",
            specs.iter().map(|s| s.k * (m - s.rho)).sum::<u32>(),
        ),
        trace("top degree", ctx.top_degree()),
        trace("product", &prod),
    ];
    Ok(TheoremReport::with_class_witness(
        TheoremId::SemiTrans,
        serde_json::json!({"d": d, "m": m, "specs": specs}),
        prod,
        trace_entries,
        "Z2 product over d-m+2 colors".to_string(),
    ))
}

/// Complex-case theorem: exactly 2(d−m)+1 specs, applies iff the
/// integer product of their classes is nonzero. When every spec
/// satisfies the special-class condition (k_i = 1, k_i = d−m, ρ_i = 0,
/// or ρ_i = m−1), the verdict provably equals the dimension count
/// Σ k_i(m−ρ_i) ≤ m(d−m); both are recorded.
pub fn check_complex_trans(d: u32, m: u32, specs: &[ColorSpec]) -> Result<TheoremReport> {
    let ctx = GrassmannContext::complex(d, m)?;
    let expected = (2 * (d - m) + 1) as usize;
    if specs.len() != expected {
        return Err(Error::SpecCount {
            expected,
            got: specs.len(),
        });
    }
    let prod = product_of_spec_classes(&ctx, specs)?;
    let total: u32 = specs.iter().map(|s| s.k * (m - s.rho)).sum();
    let fast_path = specs
        .iter()
        .all(|s| s.k == 1 || s.k == d - m || s.rho == m - 1 || s.rho == 0);
    let fits = total <= ctx.top_degree();
    if fast_path {
        assert_eq!(
            !prod.is_zero(),
            fits,
            "fast path must agree with the full product (d={d}, m={m}, specs={specs:?})"
        );
    }
    let trace_entries = vec![
        trace("total degree", total),
        trace("top degree", ctx.top_degree()),
        trace("fast path eligible", fast_path),
        trace("dimension count fits", fits),
        trace("product", &prod),
    ];
    Ok(TheoremReport::with_class_witness(
        TheoremId::ComplexTrans,
        serde_json::json!({"d": d, "m": m, "specs": specs}),
        prod,
        trace_entries,
        "integer product over 2(d-m)+1 colors in CG(d,m)".to_string(),
    ))
}

/// Linear-map theorem for the complex L_η: applies iff
/// Σ n_i ≥ (l−1)(d+2)+1, guaranteeing for some i a transversal plane of
/// dimension n_i − l to the i-th family of face images.
pub fn check_linear_map(eta: &[u32], d: u32) -> Result<TheoremReport> {
    let l = eta.len() as u32;
    if l == 0 {
        return Err(Error::EmptyInput("eta"));
    }
    for &n_i in eta {
        if n_i < l {
            return Err(Error::OutOfRange {
                what: "eta entry (need n_i >= l)",
                value: n_i as i64,
                min: l as i64,
                max: i64::MAX,
            });
        }
    }
    let lhs: i64 = eta.iter().map(|&n| n as i64).sum();
    let rhs = (l as i64 - 1) * (d as i64 + 2) + 1;
    let applies = lhs >= rhs;
    let dims: Vec<u32> = eta.iter().map(|&n| n - l).collect();
    let trace_entries = vec![
        trace("sum of eta", lhs),
        trace("threshold (l-1)(d+2)+1", rhs),
        trace("transversal dims", format!("{dims:?}")),
    ];
    Ok(TheoremReport {
        theorem: TheoremId::LinearMap,
        params: serde_json::json!({"eta": eta, "d": d}),
        applies,
        witness: Some(Witness::Inequality { lhs, rhs }),
        trace: trace_entries,
        notes: format!("linear image of L_eta in R^{d}, {l} colors"),
    })
}

/// A theorem together with its parameters; the JSON form tags the
/// variant under `"theorem"` and is what `geom verify` consumes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "theorem", rename_all = "snake_case")]
pub enum TheoremSpec {
    ColorfulTrans { d: u32, m: u32, rho: u32, k: u32 },
    ColorfulTransMulti { d: u32, m: u32, specs: Vec<ColorSpec> },
    IneqCorollary { d: u32, k: u32, rhos: Vec<u32> },
    LsTrans { n: i64, rho: i64 },
    SemiTrans { d: u32, m: u32, specs: Vec<ColorSpec> },
    SemiIneq { d: u32, k: u32, rhos: Vec<u32> },
    SemiLs { n: i64, rho: i64 },
    ComplexTrans { d: u32, m: u32, specs: Vec<ColorSpec> },
    LinearMap { eta: Vec<u32>, d: u32 },
}

/// Dispatches to the matching checker.
pub fn run_checker(spec: &TheoremSpec) -> Result<TheoremReport> {
    match spec {
        TheoremSpec::ColorfulTrans { d, m, rho, k } => check_colorful_trans(*d, *m, *rho, *k),
        TheoremSpec::ColorfulTransMulti { d, m, specs } => {
            check_colorful_trans_multi(*d, *m, specs)
        }
        TheoremSpec::IneqCorollary { d, k, rhos } => check_ineq_corollary(*d, *k, rhos),
        TheoremSpec::LsTrans { n, rho } => check_ls_trans(*n, *rho),
        TheoremSpec::SemiTrans { d, m, specs } => check_semi_trans(*d, *m, specs),
        TheoremSpec::SemiIneq { d, k, rhos } => check_semi_ineq(*d, *k, rhos),
        TheoremSpec::SemiLs { n, rho } => check_semi_ls(*n, *rho),
        TheoremSpec::ComplexTrans { d, m, specs } => check_complex_trans(*d, *m, specs),
        TheoremSpec::LinearMap { eta, d } => check_linear_map(eta, *d),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mult::lr_product;
    use crate::schubert::Ring;

    fn sym(v: &[u32]) -> SchubertSymbol {
        SchubertSymbol::new(v.to_vec()).unwrap()
    }

    fn class_witness(report: &TheoremReport) -> &CohClass {
        match report.witness.as_ref().unwrap() {
            Witness::Class(c) => c,
            Witness::Inequality { .. } => panic!("expected class witness"),
        }
    }

    #[test]
    fn transversal_class_examples() {
        let g43 = GrassmannContext::real(4, 3).unwrap();
        assert_eq!(
            transversal_class(&g43, 2, 1).unwrap(),
            CohClass::from_symbol(g43, &sym(&[0, 0, 1])).unwrap()
        );
        let g52 = GrassmannContext::real(5, 2).unwrap();
        assert_eq!(
            transversal_class(&g52, 1, 2).unwrap(),
            CohClass::from_symbol(g52, &sym(&[0, 2])).unwrap()
        );
        assert_eq!(
            transversal_class(&g52, 0, 3).unwrap(),
            CohClass::from_symbol(g52, &sym(&[3, 3])).unwrap()
        );
        assert!(transversal_class(&g52, 2, 1).is_err());
        assert!(transversal_class(&g52, 0, 0).is_err());
    }

    #[test]
    fn colorful_trans_examples() {
        let r = check_colorful_trans(4, 3, 2, 1).unwrap();
        assert!(r.applies);
        assert_eq!(class_witness(&r).coeff(&sym(&[0, 1, 1])), 1);

        let r = check_colorful_trans(4, 3, 0, 1).unwrap();
        assert!(!r.applies);

        // 2m > d cases: the Pieri remark guarantees the condition holds
        for (d, m) in [(4, 3), (5, 3), (6, 4), (7, 4)] {
            let r = check_colorful_trans(d, m, m - 1, 1).unwrap();
            assert!(r.applies, "G({d},{m})");
        }
    }

    #[test]
    fn colorful_trans_multi_examples() {
        let specs = vec![ColorSpec::new(2, 1), ColorSpec::new(2, 1)];
        let r = check_colorful_trans_multi(4, 3, &specs).unwrap();
        assert!(r.applies);
        assert_eq!(class_witness(&r).coeff(&sym(&[0, 1, 1])), 1);

        // degree overflow
        let specs = vec![ColorSpec::new(0, 1), ColorSpec::new(0, 1)];
        let r = check_colorful_trans_multi(4, 3, &specs).unwrap();
        assert!(!r.applies);

        let specs = vec![ColorSpec::new(1, 1); 3];
        let r = check_colorful_trans_multi(4, 2, &specs).unwrap();
        assert!(!r.applies);

        assert!(matches!(
            check_colorful_trans_multi(4, 2, &[ColorSpec::new(1, 1)]),
            Err(Error::SpecCount { expected: 3, got: 1 })
        ));
    }

    #[test]
    fn single_and_multi_checkers_agree() {
        for d in 2..=6u32 {
            for m in 1..d {
                for rho in 0..m {
                    for k in 1..=(d - m) {
                        let single = check_colorful_trans(d, m, rho, k).unwrap();
                        let specs = vec![ColorSpec::new(rho, k); (d - m + 1) as usize];
                        let multi = check_colorful_trans_multi(d, m, &specs).unwrap();
                        assert_eq!(single.applies, multi.applies, "G({d},{m}) rho={rho} k={k}");
                        assert_eq!(single.witness, multi.witness);
                    }
                }
            }
        }
    }

    #[test]
    fn ineq_corollary_examples() {
        let r = check_ineq_corollary(4, 1, &[2, 1]).unwrap();
        assert!(r.applies);
        assert_eq!(
            r.witness,
            Some(Witness::Inequality { lhs: 3, rhs: 3 })
        );
        // |F| = 7 = kd + 2k + 1
        assert!(r
            .trace
            .iter()
            .any(|t| t.check == "family size" && t.value == "7"));

        let r = check_ineq_corollary(4, 1, &[1, 1]).unwrap();
        assert!(!r.applies);

        assert!(check_ineq_corollary(4, 1, &[1, 1, 1]).is_err());
        assert!(check_ineq_corollary(4, 1, &[3, 1]).is_err()); // rho >= m
    }

    #[test]
    fn ineq_agrees_with_cohomology_sweep() {
        // the checker asserts agreement internally; sweep to exercise it
        for d in 2..=6u32 {
            for k in 1..d {
                let m = d - k;
                let len = (k + 1) as usize;
                let mut rhos = vec![0u32; len];
                loop {
                    check_ineq_corollary(d, k, &rhos).unwrap();
                    let mut i = 0;
                    while i < len {
                        rhos[i] += 1;
                        if rhos[i] < m {
                            break;
                        }
                        rhos[i] = 0;
                        i += 1;
                    }
                    if i == len {
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn ls_trans_examples() {
        assert!(check_ls_trans(3, 1).unwrap().applies);
        assert!(!check_ls_trans(1, 2).unwrap().applies);
        assert!(check_ls_trans(2, 1).unwrap().applies);
    }

    #[test]
    fn semi_trans_examples() {
        let specs = vec![ColorSpec::new(2, 1); 3];
        let r = check_semi_trans(4, 3, &specs).unwrap();
        assert!(r.applies);
        assert_eq!(class_witness(&r).coeff(&sym(&[1, 1, 1])), 1);

        let specs = vec![ColorSpec::new(1, 1); 4];
        let r = check_semi_trans(4, 2, &specs).unwrap();
        assert!(!r.applies);

        let specs = vec![ColorSpec::new(0, 2); 4];
        let r = check_semi_trans(4, 2, &specs).unwrap();
        assert!(!r.applies);
    }

    #[test]
    fn semi_ineq_examples() {
        let r = check_semi_ineq(4, 1, &[2, 2, 2]).unwrap();
        assert!(r.applies);
        assert!(r
            .trace
            .iter()
            .any(|t| t.check == "family size" && t.value == "12"));

        assert!(!check_semi_ineq(4, 1, &[2, 2, 1]).unwrap().applies);
    }

    #[test]
    fn semi_ineq_agrees_with_cohomology_sweep() {
        for d in 2..=6u32 {
            for k in 1..d {
                let m = d - k;
                let len = (k + 2) as usize;
                let mut rhos = vec![0u32; len];
                loop {
                    check_semi_ineq(d, k, &rhos).unwrap();
                    let mut i = 0;
                    while i < len {
                        rhos[i] += 1;
                        if rhos[i] < m {
                            break;
                        }
                        rhos[i] = 0;
                        i += 1;
                    }
                    if i == len {
                        break;
                    }
                }
            }
        }
    }

    #[test]
    fn semi_ls_examples() {
        assert!(check_semi_ls(3, 2).unwrap().applies);
        assert!(!check_semi_ls(3, 1).unwrap().applies);
        assert!(check_semi_ls(4, 2).unwrap().applies);
    }

    #[test]
    fn complex_trans_examples() {
        let specs = vec![ColorSpec::new(2, 1); 3];
        let r = check_complex_trans(4, 3, &specs).unwrap();
        assert!(r.applies);
        assert_eq!(class_witness(&r).coeff(&sym(&[1, 1, 1])), 1);

        let specs = vec![ColorSpec::new(1, 1); 5];
        let r = check_complex_trans(4, 2, &specs).unwrap();
        assert!(!r.applies);

        assert!(check_complex_trans(4, 3, &[ColorSpec::new(2, 1); 2]).is_err());
    }

    fn for_each_multiset(n_items: usize, len: usize, mut f: impl FnMut(&[usize])) {
        let mut idx = vec![0usize; len];
        loop {
            f(&idx);
            let mut j = len;
            loop {
                if j == 0 {
                    return;
                }
                j -= 1;
                if idx[j] + 1 < n_items {
                    idx[j] += 1;
                    for t in (j + 1)..len {
                        idx[t] = idx[j];
                    }
                    break;
                }
                if j == 0 {
                    return;
                }
            }
        }
    }

    #[test]
    fn complex_fast_path_small_sweep() {
        // the checker asserts fast-path agreement internally
        for d in 2..=5u32 {
            for m in 1..d {
                let width = d - m;
                let nfac = (2 * width + 1) as usize;
                let pairs: Vec<ColorSpec> = (0..m)
                    .flat_map(|rho| (1..=width).map(move |k| ColorSpec::new(rho, k)))
                    .filter(|s| s.k == 1 || s.k == width || s.rho == m - 1 || s.rho == 0)
                    .collect();
                for_each_multiset(pairs.len(), nfac, |idx| {
                    let specs: Vec<ColorSpec> = idx.iter().map(|&i| pairs[i]).collect();
                    check_complex_trans(d, m, &specs).unwrap();
                });
            }
        }
    }

    #[test]
    fn linear_map_examples() {
        let r = check_linear_map(&[3, 3], 2).unwrap();
        assert!(r.applies);
        assert!(r
            .trace
            .iter()
            .any(|t| t.check == "transversal dims" && t.value == "[1, 1]"));

        assert!(!check_linear_map(&[2, 2], 2).unwrap().applies);
        assert!(!check_linear_map(&[4, 4, 4], 4).unwrap().applies);
        assert!(check_linear_map(&[1, 3], 2).is_err());
    }

    #[test]
    fn rho_monotonicity_holds_over_z() {
        // over Z, lowering one rho (enlarging its rectangle) can only
        // turn a nonzero product zero, by coefficient positivity
        for d in 2..=6u32 {
            for m in 1..d {
                let ctx = GrassmannContext::new(d, m, Ring::Z).unwrap();
                let width = d - m;
                let nfac = (width + 1) as usize;
                let pairs: Vec<(u32, u32)> = (0..m)
                    .flat_map(|rho| (1..=width).map(move |k| (rho, k)))
                    .collect();
                let mut idx = vec![0usize; nfac];
                'outer: loop {
                    let specs: Vec<(u32, u32)> = idx.iter().map(|&i| pairs[i]).collect();
                    let product = |sp: &[(u32, u32)]| -> bool {
                        let mut acc = CohClass::unit(ctx);
                        for &(rho, k) in sp {
                            let cls = transversal_class(&ctx, rho, k).unwrap();
                            acc = multiply(&acc, &cls).unwrap();
                        }
                        !acc.is_zero()
                    };
                    let base = product(&specs);
                    for i in 0..nfac {
                        let (rho, k) = specs[i];
                        if rho == 0 {
                            continue;
                        }
                        let mut lowered = specs.clone();
                        lowered[i] = (rho - 1, k);
                        let low = product(&lowered);
                        assert!(
                            !low || base,
                            "G({d},{m}): lowering rho created a class from zero: {specs:?} -> {lowered:?}"
                        );
                    }
                    let mut j = nfac;
                    loop {
                        if j == 0 {
                            break 'outer;
                        }
                        j -= 1;
                        if idx[j] + 1 < pairs.len() {
                            idx[j] += 1;
                            for t in (j + 1)..nfac {
                                idx[t] = idx[j];
                            }
                            break;
                        }
                        if j == 0 {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn mod2_cancellation_defeats_rho_monotonicity() {
        // over Z2 the analogous claim fails: w1^3 = 0 in G(4,2) while the
        // lowered-rho product [1,1]·[0,1]^2 = [2,2] survives
        let base = check_colorful_trans_multi(4, 2, &[ColorSpec::new(1, 1); 3]).unwrap();
        assert!(!base.applies);
        let lowered = check_colorful_trans_multi(
            4,
            2,
            &[ColorSpec::new(0, 1), ColorSpec::new(1, 1), ColorSpec::new(1, 1)],
        )
        .unwrap();
        assert!(lowered.applies);
        assert_eq!(class_witness(&lowered).coeff(&sym(&[2, 2])), 1);
    }

    #[test]
    fn z2_nonzero_implies_z_nonzero() {
        for d in 2..=6u32 {
            let m = (d + 1) / 2;
            let z2 = GrassmannContext::real(d, m).unwrap();
            let z = GrassmannContext::complex(d, m).unwrap();
            for g in 0..=z2.top_degree() {
                for a in crate::schubert::enumerate_basis(&z2, g) {
                    for h in 0..=(z2.top_degree() - g) {
                        for b in crate::schubert::enumerate_basis(&z2, h) {
                            let p2 = lr_product(&a, &b, &z2).unwrap();
                            if !p2.is_zero() {
                                assert!(!lr_product(&a, &b, &z).unwrap().is_zero());
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn report_json_shape() {
        let specs = vec![ColorSpec::new(2, 1); 3];
        let r = check_semi_trans(4, 3, &specs).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["theorem"], "semi_trans");
        assert_eq!(v["applies"], true);
        assert_eq!(v["witness"]["terms"][0]["symbol"], serde_json::json!([1, 1, 1]));
        assert!(v["trace"].is_array());

        let back: TheoremReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn theorem_spec_json_round_trip() {
        let spec = TheoremSpec::SemiTrans {
            d: 4,
            m: 3,
            specs: vec![ColorSpec::new(2, 1); 3],
        };
        let json = serde_json::to_string(&spec).unwrap();
        assert!(json.contains(r#""theorem":"semi_trans""#));
        let back: TheoremSpec = serde_json::from_str(&json).unwrap();
        assert_eq!(back, spec);
        let report = run_checker(&back).unwrap();
        assert!(report.applies);
    }
}
