//! Heuristic search for ρ-flat transversals with exact certification.
//!
//! Positive answers are always certified: either the candidate flat is
//! rational and passes [`flat_meets_polytope`] for every set (residuals
//! zero), or the float residuals of a rationalized descent result are
//! all below the 1e-8 tolerance. A `None` answer means the budget was
//! exhausted, not that no transversal exists — except in the plane with
//! ρ = 1, where the point-pair enumeration is complete.

use num::{ToPrimitive, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};

use super::linalg::{extend_to_rank, is_independent, rank, sub};
use super::{find_point_transversal, flat_meets_polytope, FlatCandidate, Polytope, Rat};

pub const RESIDUAL_TOLERANCE: f64 = 1e-8;

/// Candidate points of one polytope: centroid first, then vertices.
fn candidate_points(p: &Polytope) -> Vec<Vec<Rat>> {
    let mut pts = vec![p.centroid()];
    for v in p.vertices() {
        if !pts.contains(v) {
            pts.push(v.clone());
        }
    }
    pts
}

fn exact_flat_hits_all(flat: &FlatCandidate, sets: &[Polytope]) -> Result<bool> {
    for p in sets {
        if !flat_meets_polytope(flat, p)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn certified(flat: FlatCandidate, n_sets: usize) -> FlatCandidate {
    flat.with_residuals(vec![0.0; n_sets])
}

/// Builds a ρ-flat through the given points, extending a degenerate
/// span with pool directions and then coordinate axes.
fn span_flat(points: &[Vec<Rat>], rho: usize, dim: usize, pool: &[Vec<Rat>]) -> Option<FlatCandidate> {
    let base = points.first()?.clone();
    let mut dirs: Vec<Vec<Rat>> = Vec::new();
    for p in &points[1..] {
        let d = sub(p, &base);
        if d.iter().all(Zero::is_zero) {
            continue;
        }
        dirs.push(d);
        if rank(&dirs) < dirs.len() {
            dirs.pop();
        }
    }
    if dirs.len() > rho {
        return None;
    }
    let pool_dirs: Vec<Vec<Rat>> = pool.iter().map(|p| sub(p, &base)).collect();
    extend_to_rank(&mut dirs, rho, dim, &pool_dirs);
    if dirs.len() != rho {
        return None;
    }
    FlatCandidate::new(base, dirs).ok()
}

/// Searches for a ρ-flat meeting every set.
///
/// Strategy: exact point transversal first (any common point extends to
/// a ρ-flat); then exact flats spanned by (ρ+1)-tuples of candidate
/// points (centroids, then vertices) from distinct sets; in the plane
/// with ρ = 1 an exhaustive sweep over all point pairs, which is
/// complete; finally multistart projected descent on the
/// Gram-determinant degeneracy objective over points in the first ρ+2
/// sets, with exact re-certification of the rationalized flat. `budget`
/// caps the number of exact span candidates and scales the number of
/// descent multistarts.
pub fn find_flat_transversal(
    sets: &[Polytope],
    rho: usize,
    budget: u64,
) -> Result<Option<FlatCandidate>> {
    let Some(first) = sets.first() else {
        return Err(Error::EmptyInput("set list"));
    };
    let dim = first.dim();
    for p in sets {
        if p.dim() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: p.dim(),
            });
        }
    }
    if rho >= dim {
        return Err(Error::OutOfRange {
            what: "transversal dimension rho",
            value: rho as i64,
            min: 0,
            max: dim as i64 - 1,
        });
    }

    if rho == 0 {
        return Ok(find_point_transversal(sets)?
            .map(|x| certified(FlatCandidate::new(x, Vec::new()).expect("point flat"), sets.len())));
    }

    // any common point extends to a rho-flat through it
    if let Some(x) = find_point_transversal(sets)? {
        let mut dirs = Vec::new();
        extend_to_rank(&mut dirs, rho, dim, &[]);
        let flat = FlatCandidate::new(x, dirs).expect("axes are independent");
        debug_assert!(exact_flat_hits_all(&flat, sets)?);
        return Ok(Some(certified(flat, sets.len())));
    }

    let points: Vec<Vec<Vec<Rat>>> = sets.iter().map(candidate_points).collect();
    let centroids: Vec<Vec<Rat>> = sets.iter().map(Polytope::centroid).collect();

    // a family of at most rho+1 sets always has the affine-span transversal
    if sets.len() <= rho + 1 {
        let chosen: Vec<Vec<Rat>> = centroids.clone();
        let flat = span_flat(&chosen, rho, dim, &[]).expect("span of <= rho+1 points");
        debug_assert!(exact_flat_hits_all(&flat, sets)?);
        return Ok(Some(certified(flat, sets.len())));
    }

    if dim == 2 && rho == 1 {
        return line_search_in_plane(sets, &points);
    }

    let mut tested: u64 = 0;
    let mut combo: Vec<usize> = (0..=rho).collect();
    'combos: loop {
        // tuples over this set combination, centroid entries (index 0) first
        let sizes: Vec<usize> = combo.iter().map(|&s| points[s].len()).collect();
        let mut idx = vec![0usize; combo.len()];
        loop {
            if tested >= budget {
                break 'combos;
            }
            tested += 1;
            let tuple: Vec<Vec<Rat>> = combo
                .iter()
                .zip(&idx)
                .map(|(&s, &i)| points[s][i].clone())
                .collect();
            if let Some(flat) = span_flat(&tuple, rho, dim, &centroids) {
                if exact_flat_hits_all(&flat, sets)? {
                    return Ok(Some(certified(flat, sets.len())));
                }
            }
            let mut c = idx.len();
            loop {
                if c == 0 {
                    break;
                }
                c -= 1;
                idx[c] += 1;
                if idx[c] < sizes[c] {
                    break;
                }
                idx[c] = 0;
                if c == 0 {
                    c = usize::MAX;
                    break;
                }
            }
            if c == usize::MAX {
                break;
            }
        }
        // next (rho+1)-combination of set indices in lex order
        let k = combo.len();
        let mut i = k;
        loop {
            if i == 0 {
                break 'combos;
            }
            i -= 1;
            if combo[i] + (k - i) < sets.len() {
                combo[i] += 1;
                for j in i + 1..k {
                    combo[j] = combo[j - 1] + 1;
                }
                break;
            }
        }
    }

    if sets.len() >= rho + 2 {
        let multistarts = (budget / 250).clamp(4, 24) as u32;
        if let Some(flat) = gram_descent_search(sets, rho, multistarts)? {
            return Ok(Some(flat));
        }
    }
    Ok(None)
}

/// Complete search for line transversals in the plane: if a transversal
/// line exists it can be pivoted until it passes through two vertices
/// of the family, so sweeping all point pairs decides the question.
fn line_search_in_plane(
    sets: &[Polytope],
    points: &[Vec<Vec<Rat>>],
) -> Result<Option<FlatCandidate>> {
    let pool: Vec<Vec<Rat>> = {
        let mut all = Vec::new();
        for pts in points {
            for p in pts {
                if !all.contains(p) {
                    all.push(p.clone());
                }
            }
        }
        all
    };
    for i in 0..pool.len() {
        for j in (i + 1)..pool.len() {
            let dir = sub(&pool[j], &pool[i]);
            if dir.iter().all(Zero::is_zero) {
                continue;
            }
            let flat = FlatCandidate::new(pool[i].clone(), vec![dir])?;
            if exact_flat_hits_all(&flat, sets)? {
                return Ok(Some(certified(flat, sets.len())));
            }
        }
    }
    Ok(None)
}

// ---------- float descent on the Gram-determinant objective ----------

struct FloatSets {
    verts: Vec<Vec<Vec<f64>>>,
}

impl FloatSets {
    fn new(sets: &[Polytope]) -> Self {
        FloatSets {
            verts: sets
                .iter()
                .map(|p| {
                    p.vertices()
                        .iter()
                        .map(|v| v.iter().map(|r| r.to_f64().unwrap_or(0.0)).collect())
                        .collect()
                })
                .collect(),
        }
    }

    fn point(&self, set: usize, coeffs: &[f64]) -> Vec<f64> {
        let dim = self.verts[set][0].len();
        let mut x = vec![0.0; dim];
        for (c, v) in coeffs.iter().zip(&self.verts[set]) {
            for t in 0..dim {
                x[t] += c * v[t];
            }
        }
        x
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[allow(clippy::needless_range_loop)]
fn det(mut m: Vec<Vec<f64>>) -> f64 {
    let n = m.len();
    let mut d = 1.0;
    for c in 0..n {
        let Some(p) = (c..n).max_by(|&i, &j| m[i][c].abs().total_cmp(&m[j][c].abs())) else {
            return 0.0;
        };
        if m[p][c].abs() < 1e-300 {
            return 0.0;
        }
        if p != c {
            m.swap(p, c);
            d = -d;
        }
        d *= m[c][c];
        for i in (c + 1)..n {
            let f = m[i][c] / m[c][c];
            for j in c..n {
                m[i][j] -= f * m[c][j];
            }
        }
    }
    d
}

/// det Gram of the difference vectors of the rho+2 points; zero iff the
/// points fit in a rho-flat.
fn degeneracy_objective(fsets: &FloatSets, rho: usize, params: &[Vec<f64>]) -> f64 {
    let pts: Vec<Vec<f64>> = params
        .iter()
        .enumerate()
        .map(|(s, c)| fsets.point(s, c))
        .collect();
    let diffs: Vec<Vec<f64>> = (1..=rho + 1)
        .map(|i| pts[i].iter().zip(&pts[0]).map(|(a, b)| a - b).collect())
        .collect();
    let g: Vec<Vec<f64>> = diffs
        .iter()
        .map(|u| diffs.iter().map(|v| dot(u, v)).collect())
        .collect();
    det(g).abs()
}

/// Euclidean projection onto the probability simplex.
fn project_simplex(v: &mut [f64]) {
    let n = v.len();
    let mut sorted = v.to_vec();
    sorted.sort_by(|a, b| b.total_cmp(a));
    let mut cum = 0.0;
    let mut theta = 0.0;
    for (i, &s) in sorted.iter().enumerate() {
        cum += s;
        let t = (cum - 1.0) / (i as f64 + 1.0);
        if s - t > 0.0 {
            theta = t;
        }
    }
    let mut total = 0.0;
    for x in v.iter_mut() {
        *x = (*x - theta).max(0.0);
        total += *x;
    }
    if total > 0.0 {
        for x in v.iter_mut() {
            *x /= total;
        }
    } else {
        let u = 1.0 / n as f64;
        for x in v.iter_mut() {
            *x = u;
        }
    }
}

fn rand_unit(rng: &mut ChaCha8Rng) -> f64 {
    (rng.next_u64() >> 11) as f64 / (1u64 << 53) as f64
}

fn gram_descent_search(
    sets: &[Polytope],
    rho: usize,
    multistarts: u32,
) -> Result<Option<FlatCandidate>> {
    let used = &sets[..rho + 2];
    let fsets = FloatSets::new(used);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_cafe);
    for _ in 0..multistarts {
        let mut params: Vec<Vec<f64>> = used
            .iter()
            .map(|p| {
                let mut c: Vec<f64> = (0..p.vertices().len()).map(|_| rand_unit(&mut rng)).collect();
                project_simplex(&mut c);
                c
            })
            .collect();
        let mut f = degeneracy_objective(&fsets, rho, &params);
        for _ in 0..250 {
            if f < 1e-20 {
                break;
            }
            // numeric gradient, coordinate by coordinate
            let h = 1e-6;
            let mut grad: Vec<Vec<f64>> = Vec::with_capacity(params.len());
            for s in 0..params.len() {
                let mut g = vec![0.0; params[s].len()];
                for j in 0..params[s].len() {
                    let old = params[s][j];
                    params[s][j] = old + h;
                    let fp = degeneracy_objective(&fsets, rho, &params);
                    params[s][j] = old - h;
                    let fm = degeneracy_objective(&fsets, rho, &params);
                    params[s][j] = old;
                    g[j] = (fp - fm) / (2.0 * h);
                }
                grad.push(g);
            }
            let gnorm: f64 = grad.iter().flatten().map(|g| g * g).sum::<f64>().sqrt();
            if gnorm < 1e-18 {
                break;
            }
            let mut step = 0.5;
            let mut improved = false;
            for _ in 0..20 {
                let mut trial = params.clone();
                for (ts, gs) in trial.iter_mut().zip(&grad) {
                    for (t, g) in ts.iter_mut().zip(gs) {
                        *t -= step * g / gnorm;
                    }
                    project_simplex(ts);
                }
                let ft = degeneracy_objective(&fsets, rho, &trial);
                if ft < f {
                    params = trial;
                    f = ft;
                    improved = true;
                    break;
                }
                step *= 0.5;
            }
            if !improved {
                break;
            }
        }
        if f < 1e-12 {
            let pts: Vec<Vec<f64>> = params
                .iter()
                .enumerate()
                .map(|(s, c)| fsets.point(s, c))
                .collect();
            if let Some(flat) = flat_from_float_points(&pts, rho, sets)? {
                return Ok(Some(flat));
            }
        }
    }
    Ok(None)
}

/// Best rational approximation with bounded denominator (continued
/// fractions).
fn rat_approx(x: f64, max_den: u64) -> Rat {
    if !x.is_finite() {
        return Rat::zero();
    }
    let negative = x < 0.0;
    let mut x = x.abs();
    let (mut p0, mut q0, mut p1, mut q1) = (0i128, 1i128, 1i128, 0i128);
    for _ in 0..64 {
        let a = x.floor();
        if a > 1e17 {
            break;
        }
        let ai = a as i128;
        let p2 = ai * p1 + p0;
        let q2 = ai * q1 + q0;
        if q2 > max_den as i128 {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = p2;
        q1 = q2;
        let frac = x - a;
        if frac < 1e-12 {
            break;
        }
        x = 1.0 / frac;
    }
    let mut r = Rat::new(p1.into(), q1.max(1).into());
    if negative {
        r = -r;
    }
    r
}

fn perp_component(u: &[f64], ortho: &[Vec<f64>]) -> Vec<f64> {
    let mut w = u.to_vec();
    for q in ortho {
        let c = dot(&w, q);
        for (wi, qi) in w.iter_mut().zip(q) {
            *wi -= c * qi;
        }
    }
    w
}

fn orthonormalize(dirs: &[Vec<f64>]) -> Vec<Vec<f64>> {
    let mut out: Vec<Vec<f64>> = Vec::new();
    for d in dirs {
        let mut w = perp_component(d, &out);
        let n = dot(&w, &w).sqrt();
        if n > 1e-9 {
            for x in w.iter_mut() {
                *x /= n;
            }
            out.push(w);
        }
    }
    out
}

/// Distance from the hull of `verts` to the flat, via Frank-Wolfe on
/// the squared perpendicular distance.
fn flat_distance_float(base: &[f64], ortho: &[Vec<f64>], verts: &[Vec<f64>]) -> f64 {
    let dim = base.len();
    let mut x: Vec<f64> = vec![0.0; dim];
    for v in verts {
        for t in 0..dim {
            x[t] += v[t] / verts.len() as f64;
        }
    }
    let residual = |x: &[f64]| {
        let u: Vec<f64> = x.iter().zip(base).map(|(a, b)| a - b).collect();
        perp_component(&u, ortho)
    };
    for _ in 0..120 {
        let r = residual(&x);
        let g: Vec<f64> = r.iter().map(|v| 2.0 * v).collect();
        let v = verts
            .iter()
            .min_by(|a, b| dot(&g, a).total_cmp(&dot(&g, b)))
            .expect("nonempty vertex list");
        let dvec: Vec<f64> = v.iter().zip(&x).map(|(a, b)| a - b).collect();
        let pd = perp_component(&dvec, ortho);
        let denom = dot(&pd, &pd);
        if denom < 1e-30 {
            // moving along dvec does not change the perpendicular part
            if dot(&g, &dvec) < -1e-15 {
                for t in 0..dim {
                    x[t] += dvec[t];
                }
                continue;
            }
            break;
        }
        let gamma = (-dot(&r, &pd) / denom).clamp(0.0, 1.0);
        if gamma <= 1e-15 {
            break;
        }
        for t in 0..dim {
            x[t] += gamma * dvec[t];
        }
    }
    let r = residual(&x);
    dot(&r, &r).sqrt()
}

fn flat_from_float_points(
    pts: &[Vec<f64>],
    rho: usize,
    sets: &[Polytope],
) -> Result<Option<FlatCandidate>> {
    let dim = pts[0].len();
    let diffs: Vec<Vec<f64>> = (1..pts.len())
        .map(|i| pts[i].iter().zip(&pts[0]).map(|(a, b)| a - b).collect())
        .collect();
    // greedy independent float directions, largest first
    let mut chosen: Vec<Vec<f64>> = Vec::new();
    let mut order: Vec<usize> = (0..diffs.len()).collect();
    order.sort_by(|&i, &j| dot(&diffs[j], &diffs[j]).total_cmp(&dot(&diffs[i], &diffs[i])));
    for i in order {
        if chosen.len() == rho {
            break;
        }
        let w = perp_component(&diffs[i], &orthonormalize(&chosen));
        if dot(&w, &w).sqrt() > 1e-6 {
            chosen.push(diffs[i].clone());
        }
    }
    let max_den = 1u64 << 16;
    let base: Vec<Rat> = pts[0].iter().map(|&x| rat_approx(x, max_den)).collect();
    let mut dirs: Vec<Vec<Rat>> = chosen
        .iter()
        .map(|d| d.iter().map(|&x| rat_approx(x, max_den)).collect())
        .collect();
    dirs.retain(|d| d.iter().any(|x| !x.is_zero()));
    if !dirs.is_empty() && !is_independent(&dirs) {
        return Ok(None);
    }
    extend_to_rank(&mut dirs, rho, dim, &[]);
    if dirs.len() != rho {
        return Ok(None);
    }
    let flat = FlatCandidate::new(base, dirs)?;
    if exact_flat_hits_all(&flat, sets)? {
        return Ok(Some(certified(flat, sets.len())));
    }
    // fall back to the float tolerance against the rationalized flat
    let fbase: Vec<f64> = flat
        .base()
        .iter()
        .map(|r| r.to_f64().unwrap_or(0.0))
        .collect();
    let fdirs: Vec<Vec<f64>> = flat
        .directions()
        .iter()
        .map(|d| d.iter().map(|r| r.to_f64().unwrap_or(0.0)).collect())
        .collect();
    let ortho = orthonormalize(&fdirs);
    if ortho.len() != rho {
        return Ok(None);
    }
    let mut residuals = Vec::with_capacity(sets.len());
    for p in sets {
        let verts: Vec<Vec<f64>> = p
            .vertices()
            .iter()
            .map(|v| v.iter().map(|r| r.to_f64().unwrap_or(0.0)).collect())
            .collect();
        let r = flat_distance_float(&fbase, &ortho, &verts);
        if r > RESIDUAL_TOLERANCE {
            return Ok(None);
        }
        residuals.push(r);
    }
    Ok(Some(flat.with_residuals(residuals)))
}
