//! Schubert symbols and cohomology classes of the Grassmannian G(d,m).
//!
//! A symbol `[λ₁,…,λ_m]` with `0 ≤ λ₁ ≤ … ≤ λ_m ≤ d−m` names a Schubert
//! cocycle; the canonical basis of the degree-λ part of `H*(G(d,m))`
//! consists of all symbols with entry sum λ. Symbols are stored in the
//! weakly increasing convention everywhere; the decreasing-partition view
//! exists only inside multiplication internals.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Coefficient ring of the cohomology: Z₂ for real Grassmannians,
/// Z for complex ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Ring {
    Z2,
    Z,
}

impl fmt::Display for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Ring::Z2 => write!(f, "Z2"),
            Ring::Z => write!(f, "Z"),
        }
    }
}

/// Ambient parameters of a Grassmannian G(d,m) together with the
/// coefficient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GrassmannContext {
    d: u32,
    m: u32,
    ring: Ring,
}

impl GrassmannContext {
    pub fn new(d: u32, m: u32, ring: Ring) -> Result<Self> {
        if m == 0 || m >= d {
            return Err(Error::InvalidContext { d, m });
        }
        Ok(GrassmannContext { d, m, ring })
    }

    /// Real Grassmannian (Z₂ coefficients).
    pub fn real(d: u32, m: u32) -> Result<Self> {
        Self::new(d, m, Ring::Z2)
    }

    /// Complex Grassmannian (integer coefficients).
    pub fn complex(d: u32, m: u32) -> Result<Self> {
        Self::new(d, m, Ring::Z)
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn ring(&self) -> Ring {
        self.ring
    }

    /// Largest allowed symbol entry, d−m.
    pub fn max_entry(&self) -> u32 {
        self.d - self.m
    }

    /// Dimension m(d−m) of the Grassmannian; the top cohomology degree.
    pub fn top_degree(&self) -> u32 {
        self.m * (self.d - self.m)
    }

    /// The context of the transposed Grassmannian G(d, d−m).
    pub fn transposed(&self) -> GrassmannContext {
        GrassmannContext {
            d: self.d,
            m: self.d - self.m,
            ring: self.ring,
        }
    }
}

impl fmt::Display for GrassmannContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{};{})", self.d, self.m, self.ring)
    }
}

/// A Schubert symbol: a weakly increasing sequence of non-negative
/// integers. Validity against a context (length m, entries ≤ d−m) is
/// checked by [`SchubertSymbol::check_in`].
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SchubertSymbol {
    lambda: Vec<u32>,
}

impl SchubertSymbol {
    pub fn new(lambda: Vec<u32>) -> Result<Self> {
        if lambda.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::InvalidSymbol {
                symbol: lambda,
                d: 0,
                m: 0,
            });
        }
        Ok(SchubertSymbol { lambda })
    }

    /// The zero symbol `[0,…,0]` of length m (the unit cocycle).
    pub fn zero(m: u32) -> Self {
        SchubertSymbol {
            lambda: vec![0; m as usize],
        }
    }

    pub fn entries(&self) -> &[u32] {
        &self.lambda
    }

    pub fn len(&self) -> usize {
        self.lambda.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lambda.is_empty()
    }

    /// Entry sum λ₁+⋯+λ_m, the cohomological degree of the cocycle.
    pub fn dimension(&self) -> u32 {
        self.lambda.iter().sum()
    }

    /// Checks length and box bound against a context.
    pub fn check_in(&self, ctx: &GrassmannContext) -> Result<()> {
        if self.lambda.len() != ctx.m() as usize
            || self.lambda.last().is_some_and(|&l| l > ctx.max_entry())
        {
            return Err(Error::InvalidSymbol {
                symbol: self.lambda.clone(),
                d: ctx.d(),
                m: ctx.m(),
            });
        }
        Ok(())
    }

    /// Poincaré dual `[d−m−λ_m,…,d−m−λ₁]`.
    pub fn poincare_dual(&self, ctx: &GrassmannContext) -> Result<SchubertSymbol> {
        self.check_in(ctx)?;
        let w = ctx.max_entry();
        Ok(SchubertSymbol {
            lambda: self.lambda.iter().rev().map(|&l| w - l).collect(),
        })
    }

    /// Conjugate-partition symbol in the transposed Grassmannian G(d,d−m).
    pub fn transpose(&self, ctx: &GrassmannContext) -> Result<(SchubertSymbol, GrassmannContext)> {
        self.check_in(ctx)?;
        let tctx = ctx.transposed();
        let new_m = tctx.m();
        // conj_j = #{i : λ_i > j}, assembled in increasing order
        let lambda = (0..new_m)
            .rev()
            .map(|j| self.lambda.iter().filter(|&&l| l > j).count() as u32)
            .collect();
        Ok((SchubertSymbol { lambda }, tctx))
    }

    /// The affine-plane embedding `[λ₁,…,λ_m] ↦ [0,λ₁,…,λ_m]` into
    /// G(d+1,m+1).
    pub fn affine_embed(&self, ctx: &GrassmannContext) -> Result<(SchubertSymbol, GrassmannContext)> {
        self.check_in(ctx)?;
        let ectx = GrassmannContext::new(ctx.d() + 1, ctx.m() + 1, ctx.ring())?;
        let mut lambda = Vec::with_capacity(self.lambda.len() + 1);
        lambda.push(0);
        lambda.extend_from_slice(&self.lambda);
        Ok((SchubertSymbol { lambda }, ectx))
    }

    /// Decreasing-partition view with trailing zeros trimmed.
    /// Internal to multiplication.
    pub(crate) fn to_partition(&self) -> Vec<u32> {
        let mut p: Vec<u32> = self.lambda.iter().rev().copied().collect();
        while p.last() == Some(&0) {
            p.pop();
        }
        p
    }

    /// Inverse of [`SchubertSymbol::to_partition`]: pads to length m and
    /// reverses into the increasing convention.
    pub(crate) fn from_partition(partition: &[u32], m: u32) -> SchubertSymbol {
        let mut lambda = vec![0; m as usize];
        for (i, &p) in partition.iter().enumerate() {
            lambda[m as usize - 1 - i] = p;
        }
        SchubertSymbol { lambda }
    }
}

impl fmt::Display for SchubertSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, l) in self.lambda.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{l}")?;
        }
        write!(f, "]")
    }
}

impl Serialize for SchubertSymbol {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.lambda.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SchubertSymbol {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let lambda = Vec::<u32>::deserialize(deserializer)?;
        SchubertSymbol::new(lambda).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// All basis symbols of the given degree in lexicographic order; empty
/// when the degree exceeds m(d−m).
pub fn enumerate_basis(ctx: &GrassmannContext, degree: u32) -> Vec<SchubertSymbol> {
    let m = ctx.m() as usize;
    let w = ctx.max_entry();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(m);
    fn rec(cur: &mut Vec<u32>, m: usize, w: u32, remaining: u32, out: &mut Vec<SchubertSymbol>) {
        if cur.len() == m {
            if remaining == 0 {
                out.push(SchubertSymbol {
                    lambda: cur.clone(),
                });
            }
            return;
        }
        let slots = (m - cur.len()) as u32;
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=w {
            // every later entry is at least v
            if v > remaining || remaining - v > (slots - 1) * w {
                continue;
            }
            if v * slots > remaining {
                break;
            }
            cur.push(v);
            rec(cur, m, w, remaining - v, out);
            cur.pop();
        }
    }
    rec(&mut cur, m, w, degree, &mut out);
    out
}

/// An element of `H*(G(d,m))`: a degree-homogeneous sum of Schubert
/// cocycles with nonzero ring coefficients. The zero class keeps its
/// degree tag with an empty term map.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CohClass {
    ctx: GrassmannContext,
    degree: u32,
    terms: BTreeMap<SchubertSymbol, i64>,
}

impl CohClass {
    pub fn zero(ctx: GrassmannContext, degree: u32) -> Self {
        CohClass {
            ctx,
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The unit class `[0,…,0]`.
    pub fn unit(ctx: GrassmannContext) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(SchubertSymbol::zero(ctx.m()), 1);
        CohClass {
            ctx,
            degree: 0,
            terms,
        }
    }

    pub fn from_symbol(ctx: GrassmannContext, sym: &SchubertSymbol) -> Result<Self> {
        sym.check_in(&ctx)?;
        let degree = sym.dimension();
        let mut terms = BTreeMap::new();
        terms.insert(sym.clone(), 1);
        Ok(CohClass { ctx, degree, terms })
    }

    /// Builds a class from raw terms, validating symbols, summing repeats,
    /// reducing in the ring, and dropping zeros.
    pub fn from_terms<I>(ctx: GrassmannContext, degree: u32, raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = (SchubertSymbol, i64)>,
    {
        let mut terms: BTreeMap<SchubertSymbol, i64> = BTreeMap::new();
        for (sym, coeff) in raw {
            sym.check_in(&ctx)?;
            if sym.dimension() != degree {
                return Err(Error::BadInput(format!(
                    "term {sym} has degree {} in a degree-{degree} class",
                    sym.dimension()
                )));
            }
            *terms.entry(sym).or_insert(0) += coeff;
        }
        let terms = normalize(terms, ctx.ring());
        if degree > ctx.top_degree() && !terms.is_empty() {
            return Err(Error::BadInput(format!(
                "nonzero class of degree {degree} above the top degree {}",
                ctx.top_degree()
            )));
        }
        Ok(CohClass { ctx, degree, terms })
    }

    pub fn ctx(&self) -> &GrassmannContext {
        &self.ctx
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of a symbol (zero when absent).
    pub fn coeff(&self, sym: &SchubertSymbol) -> i64 {
        self.terms.get(sym).copied().unwrap_or(0)
    }

    /// Terms in lexicographic symbol order.
    pub fn terms(&self) -> impl Iterator<Item = (&SchubertSymbol, i64)> {
        self.terms.iter().map(|(s, &c)| (s, c))
    }

    /// Same terms reduced into the other ring (used to compare Z against Z₂).
    pub fn reduced_mod2(&self) -> CohClass {
        let ctx = GrassmannContext {
            ring: Ring::Z2,
            ..self.ctx
        };
        let terms = normalize(self.terms.clone(), Ring::Z2);
        CohClass {
            ctx,
            degree: self.degree,
            terms,
        }
    }
}

fn normalize(terms: BTreeMap<SchubertSymbol, i64>, ring: Ring) -> BTreeMap<SchubertSymbol, i64> {
    terms
        .into_iter()
        .filter_map(|(s, c)| {
            let c = match ring {
                Ring::Z2 => c.rem_euclid(2),
                Ring::Z => c,
            };
            (c != 0).then_some((s, c))
        })
        .collect()
}

impl fmt::Display for CohClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (sym, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if c != 1 {
                write!(f, "{c}·")?;
            }
            write!(f, "{sym}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    symbol: SchubertSymbol,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct CohClassRepr {
    d: u32,
    m: u32,
    ring: Ring,
    degree: u32,
    terms: Vec<TermRepr>,
}

impl Serialize for CohClass {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = CohClassRepr {
            d: self.ctx.d(),
            m: self.ctx.m(),
            ring: self.ctx.ring(),
            degree: self.degree,
            terms: self
                .terms()
                .map(|(s, c)| TermRepr {
                    symbol: s.clone(),
                    coeff: c,
                })
                .collect(),
        };
        repr.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for CohClass {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = CohClassRepr::deserialize(deserializer)?;
        let ctx = GrassmannContext::new(repr.d, repr.m, repr.ring)
            .map_err(|e| D::Error::custom(e.to_string()))?;
        CohClass::from_terms(
            ctx,
            repr.degree,
            repr.terms.into_iter().map(|t| (t.symbol, t.coeff)),
        )
        .map_err(|e| D::Error::custom(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sym(v: &[u32]) -> SchubertSymbol {
        SchubertSymbol::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dimension_is_entry_sum() {
        assert_eq!(sym(&[0, 0, 0]).dimension(), 0);
        assert_eq!(sym(&[1, 1, 1]).dimension(), 3);
        assert_eq!(sym(&[1, 2]).dimension(), 3);
    }

    #[test]
    fn rejects_decreasing_sequences() {
        assert!(SchubertSymbol::new(vec![2, 1]).is_err());
    }

    #[test]
    fn basis_enumeration_lex_order() {
        let ctx = GrassmannContext::real(4, 2).unwrap();
        let basis = enumerate_basis(&ctx, 2);
        assert_eq!(basis, vec![sym(&[0, 2]), sym(&[1, 1])]);
        assert_eq!(enumerate_basis(&ctx, 0), vec![sym(&[0, 0])]);
        assert!(enumerate_basis(&ctx, 5).is_empty());
    }

    #[test]
    fn basis_sizes_sum_to_binomial() {
        // total number of symbols in the m×(d−m) box is C(d,m)
        fn binom(n: u64, k: u64) -> u64 {
            (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
        }
        for d in 2..=10u32 {
            for m in 1..d {
                let ctx = GrassmannContext::real(d, m).unwrap();
                let total: usize = (0..=ctx.top_degree())
                    .map(|g| enumerate_basis(&ctx, g).len())
                    .sum();
                assert_eq!(total as u64, binom(d as u64, m as u64), "G({d},{m})");
            }
        }
    }

    #[test]
    fn poincare_dual_examples() {
        let ctx = GrassmannContext::real(4, 2).unwrap();
        assert_eq!(sym(&[0, 1]).poincare_dual(&ctx).unwrap(), sym(&[1, 2]));
        assert_eq!(sym(&[0, 0]).poincare_dual(&ctx).unwrap(), sym(&[2, 2]));
        assert_eq!(sym(&[1, 1]).poincare_dual(&ctx).unwrap(), sym(&[1, 1]));
    }

    #[test]
    fn poincare_dual_is_involutive() {
        for d in 2..=8u32 {
            for m in 1..d {
                let ctx = GrassmannContext::real(d, m).unwrap();
                for g in 0..=ctx.top_degree() {
                    for s in enumerate_basis(&ctx, g) {
                        let dd = s
                            .poincare_dual(&ctx)
                            .unwrap()
                            .poincare_dual(&ctx)
                            .unwrap();
                        assert_eq!(dd, s);
                    }
                }
            }
        }
    }

    #[test]
    fn transpose_examples() {
        let ctx = GrassmannContext::real(5, 2).unwrap();
        let (t, tctx) = sym(&[1, 2]).transpose(&ctx).unwrap();
        assert_eq!(t, sym(&[0, 1, 2]));
        assert_eq!((tctx.d(), tctx.m()), (5, 3));

        let ctx = GrassmannContext::real(4, 2).unwrap();
        let (t, tctx) = sym(&[0, 0]).transpose(&ctx).unwrap();
        assert_eq!(t, sym(&[0, 0]));
        assert_eq!((tctx.d(), tctx.m()), (4, 2));
        let (t, _) = sym(&[2, 2]).transpose(&ctx).unwrap();
        assert_eq!(t, sym(&[2, 2]));
    }

    #[test]
    fn transpose_preserves_dimension_and_is_involutive() {
        for d in 2..=8u32 {
            for m in 1..d {
                let ctx = GrassmannContext::real(d, m).unwrap();
                for g in 0..=ctx.top_degree() {
                    for s in enumerate_basis(&ctx, g) {
                        let (t, tctx) = s.transpose(&ctx).unwrap();
                        assert_eq!(t.dimension(), s.dimension());
                        let (tt, ttctx) = t.transpose(&tctx).unwrap();
                        assert_eq!(tt, s);
                        assert_eq!(ttctx, ctx);
                    }
                }
            }
        }
    }

    #[test]
    fn affine_embed_examples() {
        let ctx = GrassmannContext::real(4, 2).unwrap();
        let (e, ectx) = sym(&[1, 1]).affine_embed(&ctx).unwrap();
        assert_eq!(e, sym(&[0, 1, 1]));
        assert_eq!((ectx.d(), ectx.m()), (5, 3));

        let (e, _) = sym(&[0, 0]).affine_embed(&ctx).unwrap();
        assert_eq!(e, sym(&[0, 0, 0]));
    }

    #[test]
    fn affine_embed_preserves_degree_and_monotonicity() {
        for d in 2..=7u32 {
            for m in 1..d {
                let ctx = GrassmannContext::real(d, m).unwrap();
                for g in 0..=ctx.top_degree() {
                    for s in enumerate_basis(&ctx, g) {
                        let (e, ectx) = s.affine_embed(&ctx).unwrap();
                        assert_eq!(e.dimension(), s.dimension());
                        assert!(e.check_in(&ectx).is_ok());
                    }
                }
            }
        }
    }

    #[test]
    fn class_json_round_trip() {
        let ctx = GrassmannContext::real(4, 2).unwrap();
        let cls = CohClass::from_terms(
            ctx,
            2,
            vec![(sym(&[0, 2]), 1), (sym(&[1, 1]), 1)],
        )
        .unwrap();
        let json = serde_json::to_string(&cls).unwrap();
        assert_eq!(
            json,
            r#"{"d":4,"m":2,"ring":"Z2","degree":2,"terms":[{"symbol":[0,2],"coeff":1},{"symbol":[1,1],"coeff":1}]}"#
        );
        let back: CohClass = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cls);
    }

    #[test]
    fn z2_classes_store_canonical_coefficients() {
        let ctx = GrassmannContext::real(4, 2).unwrap();
        let cls =
            CohClass::from_terms(ctx, 2, vec![(sym(&[0, 2]), 3), (sym(&[1, 1]), 2)]).unwrap();
        assert_eq!(cls.coeff(&sym(&[0, 2])), 1);
        assert_eq!(cls.coeff(&sym(&[1, 1])), 0);
        assert_eq!(cls.num_terms(), 1);
    }

    #[test]
    fn zero_class_keeps_degree_tag() {
        let ctx = GrassmannContext::real(4, 2).unwrap();
        let z = CohClass::zero(ctx, 7);
        assert!(z.is_zero());
        assert_eq!(z.degree(), 7);
    }

    #[test]
    fn invalid_context_rejected() {
        assert!(GrassmannContext::real(3, 3).is_err());
        assert!(GrassmannContext::real(3, 0).is_err());
    }
}
