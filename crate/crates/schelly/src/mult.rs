//! Multiplication in the cohomology ring of G(d,m).
//!
//! General products use the Littlewood–Richardson skew-tableau rule;
//! multiplication by a single-row class `[0,…,0,k]` has a direct Pieri
//! implementation. [`schur_oracle_product`] multiplies the corresponding
//! Schur polynomials in m variables and re-expands in the Schur basis —
//! an independent route used to test the tableau code.

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::schubert::{CohClass, GrassmannContext, SchubertSymbol};

/// Pieri rule: multiplies a class by the dual Stiefel–Whitney class
/// `[0,…,0,k]`, summing over all interleaving symbols ξ with
/// λ_j ≤ ξ_j ≤ λ_{j+1} (λ_{m+1} = d−m) and Σξ = k + Σλ.
pub fn pieri_multiply(cls: &CohClass, k: u32) -> Result<CohClass> {
    let ctx = *cls.ctx();
    if k > ctx.max_entry() {
        return Err(Error::OutOfRange {
            what: "pieri k",
            value: k as i64,
            min: 0,
            max: ctx.max_entry() as i64,
        });
    }
    let degree = cls.degree() + k;
    if degree > ctx.top_degree() {
        return Ok(CohClass::zero(ctx, degree));
    }
    let mut acc: BTreeMap<SchubertSymbol, i64> = BTreeMap::new();
    for (sym, coeff) in cls.terms() {
        let lambda = sym.entries();
        let m = lambda.len();
        let mut xi = vec![0u32; m];
        // depth-first over interleavings
        #[allow(clippy::too_many_arguments)]
        fn rec(
            j: usize,
            remaining: u32,
            lambda: &[u32],
            max_entry: u32,
            xi: &mut Vec<u32>,
            coeff: i64,
            acc: &mut BTreeMap<SchubertSymbol, i64>,
        ) {
            let m = lambda.len();
            if j == m {
                if remaining == 0 {
                    let sym = SchubertSymbol::new(xi.clone()).expect("interleaving is monotone");
                    *acc.entry(sym).or_insert(0) += coeff;
                }
                return;
            }
            let hi = if j + 1 < m { lambda[j + 1] } else { max_entry };
            for v in lambda[j]..=hi.min(lambda[j] + remaining) {
                xi[j] = v;
                rec(j + 1, remaining - (v - lambda[j]), lambda, max_entry, xi, coeff, acc);
            }
        }
        rec(0, k, lambda, ctx.max_entry(), &mut xi, coeff, &mut acc);
    }
    CohClass::from_terms(ctx, degree, acc)
}

/// Transposes a class term-by-term into G(d, d−m). Ring isomorphism in
/// both coefficient rings.
pub fn transpose_class(cls: &CohClass) -> CohClass {
    let ctx = cls.ctx();
    let tctx = ctx.transposed();
    let terms: Vec<(SchubertSymbol, i64)> = cls
        .terms()
        .map(|(s, c)| {
            let (t, _) = s.transpose(ctx).expect("stored symbols are valid");
            (t, c)
        })
        .collect();
    CohClass::from_terms(tctx, cls.degree(), terms).expect("transpose preserves degrees")
}

/// Multiplies by the Stiefel–Whitney class `w_i = [0,…,0,1,…,1]`
/// (i ones) via conjugation symmetry: transpose, Pieri with k = i,
/// transpose back.
pub fn dual_pieri_multiply(cls: &CohClass, i: u32) -> Result<CohClass> {
    let ctx = cls.ctx();
    if i < 1 || i > ctx.m() {
        return Err(Error::OutOfRange {
            what: "w_i index",
            value: i as i64,
            min: 1,
            max: ctx.m() as i64,
        });
    }
    let transposed = transpose_class(cls);
    let product = pieri_multiply(&transposed, i)?;
    Ok(transpose_class(&product))
}

/// Littlewood–Richardson expansion of the product of two Schubert
/// cocycles; partitions outside the m×(d−m) box are discarded, and
/// coefficients are reduced mod 2 when the ring is Z₂.
pub fn lr_product(a: &SchubertSymbol, b: &SchubertSymbol, ctx: &GrassmannContext) -> Result<CohClass> {
    a.check_in(ctx)?;
    b.check_in(ctx)?;
    let degree = a.dimension() + b.dimension();
    if degree > ctx.top_degree() {
        return Ok(CohClass::zero(*ctx, degree));
    }
    let lam = a.to_partition();
    let mu = b.to_partition();
    let mut terms: Vec<(SchubertSymbol, i64)> = Vec::new();
    for nu in partitions_over(degree, ctx.m() as usize, ctx.max_entry(), &lam) {
        let c = lr_coefficient(&nu, &lam, &mu);
        if c != 0 {
            terms.push((SchubertSymbol::from_partition(&nu, ctx.m()), c));
        }
    }
    CohClass::from_terms(*ctx, degree, terms)
}

/// Bilinear extension of [`lr_product`]; the operands must share a
/// context.
pub fn multiply(a: &CohClass, b: &CohClass) -> Result<CohClass> {
    if a.ctx() != b.ctx() {
        return Err(Error::ContextMismatch);
    }
    let ctx = *a.ctx();
    let degree = a.degree() + b.degree();
    if degree > ctx.top_degree() {
        return Ok(CohClass::zero(ctx, degree));
    }
    let mut acc: BTreeMap<SchubertSymbol, i64> = BTreeMap::new();
    for (sa, ca) in a.terms() {
        for (sb, cb) in b.terms() {
            let prod = lr_product(sa, sb, &ctx)?;
            for (s, c) in prod.terms() {
                *acc.entry(s.clone()).or_insert(0) += ca * cb * c;
            }
        }
    }
    CohClass::from_terms(ctx, degree, acc)
}

/// n-th power under [`multiply`]; the empty product is the unit class.
pub fn power(cls: &CohClass, n: u32) -> Result<CohClass> {
    let ctx = *cls.ctx();
    let mut acc = CohClass::unit(ctx);
    for _ in 0..n {
        if acc.is_zero() && acc.degree() > ctx.top_degree() {
            // zero stays zero; just track the degree
            acc = CohClass::zero(ctx, acc.degree() + cls.degree());
            continue;
        }
        acc = multiply(&acc, cls)?;
    }
    Ok(acc)
}

/// Memoization cache for symbol-pair products, keyed on the
/// lexicographically ordered pair. Confine a table to one worker;
/// products are pure so rebuilding is always safe.
pub struct ProductTable {
    ctx: GrassmannContext,
    entries: HashMap<(SchubertSymbol, SchubertSymbol), CohClass>,
}

impl ProductTable {
    pub fn new(ctx: GrassmannContext) -> Self {
        ProductTable {
            ctx,
            entries: HashMap::new(),
        }
    }

    pub fn ctx(&self) -> &GrassmannContext {
        &self.ctx
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Memoized [`lr_product`].
    pub fn product(&mut self, a: &SchubertSymbol, b: &SchubertSymbol) -> Result<CohClass> {
        let key = if a <= b {
            (a.clone(), b.clone())
        } else {
            (b.clone(), a.clone())
        };
        if let Some(hit) = self.entries.get(&key) {
            return Ok(hit.clone());
        }
        let value = lr_product(&key.0, &key.1, &self.ctx)?;
        self.entries.insert(key, value.clone());
        Ok(value)
    }

    /// Memoized bilinear product of two classes.
    pub fn multiply(&mut self, a: &CohClass, b: &CohClass) -> Result<CohClass> {
        if a.ctx() != &self.ctx || b.ctx() != &self.ctx {
            return Err(Error::ContextMismatch);
        }
        let degree = a.degree() + b.degree();
        if degree > self.ctx.top_degree() {
            return Ok(CohClass::zero(self.ctx, degree));
        }
        let mut acc: BTreeMap<SchubertSymbol, i64> = BTreeMap::new();
        let pairs: Vec<(SchubertSymbol, i64, SchubertSymbol, i64)> = a
            .terms()
            .flat_map(|(sa, ca)| b.terms().map(move |(sb, cb)| (sa.clone(), ca, sb.clone(), cb)))
            .collect();
        for (sa, ca, sb, cb) in pairs {
            let prod = self.product(&sa, &sb)?;
            for (s, c) in prod.terms() {
                *acc.entry(s.clone()).or_insert(0) += ca * cb * c;
            }
        }
        CohClass::from_terms(self.ctx, degree, acc)
    }
}

// ---------- Littlewood–Richardson internals ----------

/// Partitions ν of `total` with at most `rows` parts, entries ≤ `width`,
/// containing `inner` part-wise.
fn partitions_over(total: u32, rows: usize, width: u32, inner: &[u32]) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur: Vec<u32> = Vec::with_capacity(rows);
    fn rec(
        cur: &mut Vec<u32>,
        remaining: u32,
        rows: usize,
        width: u32,
        inner: &[u32],
        out: &mut Vec<Vec<u32>>,
    ) {
        if remaining == 0 {
            // remaining inner parts must already be covered
            if cur.len() >= inner.len() {
                out.push(cur.clone());
            }
            return;
        }
        if cur.len() == rows {
            return;
        }
        let hi = cur.last().copied().unwrap_or(width).min(remaining);
        let lo = inner.get(cur.len()).copied().unwrap_or(0).max(1);
        let mut v = hi;
        while v >= lo {
            cur.push(v);
            rec(cur, remaining - v, rows, width, inner, out);
            cur.pop();
            v -= 1;
        }
    }
    if total == 0 {
        if inner.is_empty() {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut cur, total, rows, width, inner, &mut out);
    out
}

/// Number of Littlewood–Richardson skew tableaux of shape ν/λ and
/// content μ: rows weakly increasing, columns strictly increasing, and
/// the reverse reading word a lattice word.
fn lr_coefficient(nu: &[u32], lam: &[u32], mu: &[u32]) -> i64 {
    let rows = nu.len();
    let lamp: Vec<u32> = (0..rows)
        .map(|i| lam.get(i).copied().unwrap_or(0))
        .collect();
    if lamp.iter().zip(nu).any(|(&l, &n)| l > n) {
        return 0;
    }
    // cells in reverse reading order: rows top to bottom, right to left
    let mut cells: Vec<(usize, u32)> = Vec::new();
    for r in 0..rows {
        for c in (lamp[r]..nu[r]).rev() {
            cells.push((r, c));
        }
    }
    if cells.len() as u32 != mu.iter().sum::<u32>() {
        return 0;
    }
    let n_vals = mu.len();
    let mut grid: Vec<Vec<u8>> = (0..rows).map(|r| vec![0; nu[r] as usize]).collect();
    let mut count = vec![0u32; n_vals + 1];
    let mut total = 0i64;
    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        cells: &[(usize, u32)],
        nu: &[u32],
        lamp: &[u32],
        mu: &[u32],
        grid: &mut Vec<Vec<u8>>,
        count: &mut Vec<u32>,
        total: &mut i64,
    ) {
        if i == cells.len() {
            *total += 1;
            return;
        }
        let (r, c) = cells[i];
        let mut lo = 1usize;
        let mut hi = mu.len();
        if c + 1 < nu[r] {
            hi = hi.min(grid[r][(c + 1) as usize] as usize);
        }
        if r > 0 && c >= lamp[r - 1] {
            lo = lo.max(grid[r - 1][c as usize] as usize + 1);
        }
        for v in lo..=hi {
            if count[v] >= mu[v - 1] {
                continue;
            }
            if v > 1 && count[v] >= count[v - 1] {
                continue; // would break the lattice-word property
            }
            grid[r][c as usize] = v as u8;
            count[v] += 1;
            rec(i + 1, cells, nu, lamp, mu, grid, count, total);
            count[v] -= 1;
        }
        grid[r][c as usize] = 0;
    }
    rec(0, &cells, nu, &lamp, mu, &mut grid, &mut count, &mut total);
    total
}

// ---------- Schur polynomial oracle ----------

type Monomials = BTreeMap<Vec<u32>, i64>;

/// Schur polynomial s_shape(x₁,…,x_m) as a monomial sum over semistandard
/// tableaux with entries in 1..m.
fn schur_monomials(shape: &[u32], m: usize) -> Monomials {
    let mut out = Monomials::new();
    if shape.len() > m {
        return out;
    }
    if shape.is_empty() {
        out.insert(vec![0; m], 1);
        return out;
    }
    let rows = shape.len();
    let mut grid: Vec<Vec<u8>> = shape.iter().map(|&w| vec![0; w as usize]).collect();
    let mut exp = vec![0u32; m];
    fn rec(
        r: usize,
        c: usize,
        rows: usize,
        shape: &[u32],
        m: usize,
        grid: &mut Vec<Vec<u8>>,
        exp: &mut Vec<u32>,
        out: &mut Monomials,
    ) {
        if r == rows {
            *out.entry(exp.clone()).or_insert(0) += 1;
            return;
        }
        let (nr, nc) = if c + 1 < shape[r] as usize {
            (r, c + 1)
        } else {
            (r + 1, 0)
        };
        let mut lo = 1usize;
        if c > 0 {
            lo = lo.max(grid[r][c - 1] as usize);
        }
        if r > 0 && c < shape[r - 1] as usize {
            lo = lo.max(grid[r - 1][c] as usize + 1);
        }
        for v in lo..=m {
            grid[r][c] = v as u8;
            exp[v - 1] += 1;
            rec(nr, nc, rows, shape, m, grid, exp, out);
            exp[v - 1] -= 1;
        }
        grid[r][c] = 0;
    }
    rec(0, 0, rows, shape, m, &mut grid, &mut exp, &mut out);
    out
}

fn monomial_mul(a: &Monomials, b: &Monomials) -> Monomials {
    let mut r = Monomials::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *r.entry(e).or_insert(0) += ca * cb;
        }
    }
    r
}

/// Independent oracle: multiplies the two Schur polynomials in exactly m
/// variables, re-expands in the Schur basis by leading-monomial
/// elimination, and truncates to the box. Must agree with
/// [`lr_product`].
pub fn schur_oracle_product(
    a: &SchubertSymbol,
    b: &SchubertSymbol,
    ctx: &GrassmannContext,
) -> Result<CohClass> {
    a.check_in(ctx)?;
    b.check_in(ctx)?;
    let m = ctx.m() as usize;
    let degree = a.dimension() + b.dimension();
    let mut poly = monomial_mul(
        &schur_monomials(&a.to_partition(), m),
        &schur_monomials(&b.to_partition(), m),
    );
    let mut cache: HashMap<Vec<u32>, Monomials> = HashMap::new();
    let mut terms: Vec<(SchubertSymbol, i64)> = Vec::new();
    loop {
        poly.retain(|_, c| *c != 0);
        // lex-greatest monomial of a symmetric polynomial is a partition
        let Some((lead, &coeff)) = poly.iter().next_back() else {
            break;
        };
        assert!(
            lead.windows(2).all(|w| w[0] >= w[1]),
            "leading monomial {lead:?} is not a partition"
        );
        assert!(coeff > 0, "negative leading coefficient {coeff} at {lead:?}");
        let nu: Vec<u32> = lead.iter().copied().filter(|&x| x > 0).collect();
        let s = cache
            .entry(nu.clone())
            .or_insert_with(|| schur_monomials(&nu, m))
            .clone();
        for (e, c) in &s {
            *poly.entry(e.clone()).or_insert(0) -= coeff * c;
        }
        if nu.first().copied().unwrap_or(0) <= ctx.max_entry() {
            terms.push((SchubertSymbol::from_partition(&nu, ctx.m()), coeff));
        }
    }
    if degree > ctx.top_degree() {
        debug_assert!(terms.is_empty());
        return Ok(CohClass::zero(*ctx, degree));
    }
    CohClass::from_terms(*ctx, degree, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::schubert::{enumerate_basis, Ring};

    fn sym(v: &[u32]) -> SchubertSymbol {
        SchubertSymbol::new(v.to_vec()).unwrap()
    }

    fn single(ctx: GrassmannContext, v: &[u32]) -> CohClass {
        CohClass::from_symbol(ctx, &sym(v)).unwrap()
    }

    fn all_symbols(ctx: &GrassmannContext) -> Vec<SchubertSymbol> {
        (0..=ctx.top_degree())
            .flat_map(|g| enumerate_basis(ctx, g))
            .collect()
    }

    #[test]
    fn pieri_examples() {
        let g42 = GrassmannContext::real(4, 2).unwrap();
        let p = pieri_multiply(&single(g42, &[0, 1]), 1).unwrap();
        assert_eq!(
            p,
            CohClass::from_terms(g42, 2, vec![(sym(&[0, 2]), 1), (sym(&[1, 1]), 1)]).unwrap()
        );

        let g43 = GrassmannContext::real(4, 3).unwrap();
        let p = pieri_multiply(&single(g43, &[0, 0, 1]), 1).unwrap();
        assert_eq!(p, single(g43, &[0, 1, 1]));

        let cls = single(g42, &[1, 2]);
        assert_eq!(pieri_multiply(&cls, 0).unwrap(), cls);
    }

    #[test]
    fn pieri_rejects_out_of_range_k() {
        let g42 = GrassmannContext::real(4, 2).unwrap();
        assert!(pieri_multiply(&CohClass::unit(g42), 3).is_err());
    }

    #[test]
    fn dual_pieri_examples() {
        let g42 = GrassmannContext::real(4, 2).unwrap();
        let p = dual_pieri_multiply(&single(g42, &[0, 1]), 1).unwrap();
        assert_eq!(
            p,
            CohClass::from_terms(g42, 2, vec![(sym(&[0, 2]), 1), (sym(&[1, 1]), 1)]).unwrap()
        );

        let g52 = GrassmannContext::real(5, 2).unwrap();
        let p = dual_pieri_multiply(&CohClass::unit(g52), 2).unwrap();
        assert_eq!(p, single(g52, &[1, 1]));

        let p = dual_pieri_multiply(&single(g42, &[1, 1]), 2).unwrap();
        assert_eq!(p, single(g42, &[2, 2]));
    }

    #[test]
    fn lr_examples() {
        let g42 = GrassmannContext::real(4, 2).unwrap();
        let p = lr_product(&sym(&[1, 1]), &sym(&[1, 1]), &g42).unwrap();
        assert_eq!(p, single(g42, &[2, 2]));

        let g63z = GrassmannContext::complex(6, 3).unwrap();
        let p = lr_product(&sym(&[0, 1, 2]), &sym(&[0, 1, 2]), &g63z).unwrap();
        assert_eq!(p.coeff(&sym(&[1, 2, 3])), 2);
        assert_eq!(p.coeff(&sym(&[0, 3, 3])), 1);
        assert_eq!(p.coeff(&sym(&[2, 2, 2])), 1);

        let g63 = GrassmannContext::real(6, 3).unwrap();
        let p = lr_product(&sym(&[0, 1, 2]), &sym(&[0, 1, 2]), &g63).unwrap();
        assert_eq!(p.coeff(&sym(&[1, 2, 3])), 0);
    }

    #[test]
    fn multiply_examples() {
        let g43 = GrassmannContext::real(4, 3).unwrap();
        let x = single(g43, &[0, 1, 1]);
        assert_eq!(multiply(&CohClass::unit(g43), &x).unwrap(), x);

        let sq = multiply(&single(g43, &[0, 0, 1]), &single(g43, &[0, 0, 1])).unwrap();
        assert_eq!(sq, single(g43, &[0, 1, 1]));
        assert_eq!(sq, pieri_multiply(&single(g43, &[0, 0, 1]), 1).unwrap());

        let top = single(g43, &[1, 1, 1]);
        let over = multiply(&top, &x).unwrap();
        assert!(over.is_zero());
    }

    #[test]
    fn power_examples() {
        let g43 = GrassmannContext::real(4, 3).unwrap();
        let p = power(&single(g43, &[0, 0, 1]), 3).unwrap();
        assert_eq!(p, single(g43, &[1, 1, 1]));

        let p = power(&single(g43, &[0, 0, 1]), 4).unwrap();
        assert!(p.is_zero());

        assert_eq!(power(&single(g43, &[0, 1, 1]), 0).unwrap(), CohClass::unit(g43));
    }

    #[test]
    fn top_rectangle_identity_small() {
        for d in 2..=5u32 {
            for m in 1..d {
                let ctx = GrassmannContext::real(d, m).unwrap();
                let ones = single(ctx, &vec![1; m as usize]);
                let p = power(&ones, d - m).unwrap();
                let top = single(ctx, &vec![d - m; m as usize]);
                assert_eq!(p, top, "G({d},{m})");
            }
        }
    }

    #[test]
    fn schur_oracle_examples() {
        let g42z = GrassmannContext::complex(4, 2).unwrap();
        let p = schur_oracle_product(&sym(&[0, 1]), &sym(&[0, 1]), &g42z).unwrap();
        assert_eq!(
            p,
            CohClass::from_terms(g42z, 2, vec![(sym(&[0, 2]), 1), (sym(&[1, 1]), 1)]).unwrap()
        );

        let x = sym(&[1, 2]);
        let p = schur_oracle_product(&SchubertSymbol::zero(2), &x, &g42z).unwrap();
        assert_eq!(p, CohClass::from_symbol(g42z, &x).unwrap());

        let p = schur_oracle_product(&sym(&[1, 1]), &sym(&[1, 1]), &g42z).unwrap();
        assert_eq!(p, CohClass::from_symbol(g42z, &sym(&[2, 2])).unwrap());
    }

    #[test]
    fn lr_agrees_with_oracle_small() {
        for d in 2..=5u32 {
            for m in 1..d {
                for ring in [Ring::Z2, Ring::Z] {
                    let ctx = GrassmannContext::new(d, m, ring).unwrap();
                    let syms = all_symbols(&ctx);
                    for a in &syms {
                        for b in &syms {
                            assert_eq!(
                                lr_product(a, b, &ctx).unwrap(),
                                schur_oracle_product(a, b, &ctx).unwrap(),
                                "G({d},{m};{ring}) {a}·{b}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_agrees_with_pieri_small() {
        for d in 2..=6u32 {
            for m in 1..d {
                let ctx = GrassmannContext::real(d, m).unwrap();
                let syms = all_symbols(&ctx);
                for a in &syms {
                    let cls = CohClass::from_symbol(ctx, a).unwrap();
                    for k in 0..=ctx.max_entry() {
                        let mut row = vec![0; m as usize];
                        row[m as usize - 1] = k;
                        let via_lr = lr_product(a, &sym(&row), &ctx).unwrap();
                        let via_pieri = pieri_multiply(&cls, k).unwrap();
                        assert_eq!(via_lr, via_pieri, "G({d},{m}) {a} · row {k}");
                    }
                }
            }
        }
    }

    #[test]
    fn multiply_is_commutative_and_associative_sampled() {
        let ctx = GrassmannContext::real(6, 3).unwrap();
        let syms = all_symbols(&ctx);
        for (i, a) in syms.iter().enumerate().step_by(3) {
            for b in syms.iter().skip(i % 5).step_by(4) {
                let ca = CohClass::from_symbol(ctx, a).unwrap();
                let cb = CohClass::from_symbol(ctx, b).unwrap();
                assert_eq!(multiply(&ca, &cb).unwrap(), multiply(&cb, &ca).unwrap());
                for c in syms.iter().step_by(7) {
                    let cc = CohClass::from_symbol(ctx, c).unwrap();
                    let left = multiply(&multiply(&ca, &cb).unwrap(), &cc).unwrap();
                    let right = multiply(&ca, &multiply(&cb, &cc).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn mod2_equals_integer_reduction_small() {
        for d in 2..=5u32 {
            for m in 1..d {
                let z2 = GrassmannContext::real(d, m).unwrap();
                let z = GrassmannContext::complex(d, m).unwrap();
                let syms = all_symbols(&z2);
                for a in &syms {
                    for b in &syms {
                        let p2 = lr_product(a, b, &z2).unwrap();
                        let pz = lr_product(a, b, &z).unwrap();
                        assert_eq!(p2, pz.reduced_mod2());
                        if !p2.is_zero() {
                            assert!(!pz.is_zero());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn lr_coefficients_nonnegative_over_z() {
        let ctx = GrassmannContext::complex(6, 3).unwrap();
        let syms = all_symbols(&ctx);
        for a in &syms {
            for b in &syms {
                let p = lr_product(a, b, &ctx).unwrap();
                assert!(p.terms().all(|(_, c)| c > 0));
            }
        }
    }

    #[test]
    fn product_table_memoizes_and_matches() {
        let ctx = GrassmannContext::real(5, 2).unwrap();
        let mut table = ProductTable::new(ctx);
        let a = sym(&[1, 2]);
        let b = sym(&[0, 2]);
        let ab = table.product(&a, &b).unwrap();
        let ba = table.product(&b, &a).unwrap();
        assert_eq!(ab, ba);
        assert_eq!(table.len(), 1);
        assert_eq!(ab, lr_product(&a, &b, &ctx).unwrap());

        let ca = CohClass::from_symbol(ctx, &a).unwrap();
        let cb = CohClass::from_symbol(ctx, &b).unwrap();
        assert_eq!(
            table.multiply(&ca, &cb).unwrap(),
            multiply(&ca, &cb).unwrap()
        );
    }

    #[test]
    fn duality_pairing_small() {
        for d in 2..=5u32 {
            for m in 1..d {
                let ctx = GrassmannContext::real(d, m).unwrap();
                let top = sym(&vec![ctx.max_entry(); m as usize]);
                for g in 0..=ctx.top_degree() {
                    let basis = enumerate_basis(&ctx, g);
                    for a in &basis {
                        for b in &basis {
                            let dual = b.poincare_dual(&ctx).unwrap();
                            let p = lr_product(a, &dual, &ctx).unwrap();
                            let want = i64::from(a == b);
                            assert_eq!(p.coeff(&top), want, "G({d},{m}) <{a},{b}>");
                        }
                    }
                }
            }
        }
    }
}
