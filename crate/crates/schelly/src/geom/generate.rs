//! Deterministic instance generators: planted colored families with a
//! known monochromatic transversal, and linear images of the L_η
//! complex.

use num::{One, Signed, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::checkers::ColorSpec;
use crate::error::{Error, Result};

use super::linalg::is_independent;
use super::{flat_meets_polytope, ColoredFamily, FlatCandidate, Polytope, Rat};

/// A generated family together with the flat planted through the target
/// color's sets.
#[derive(Debug, Clone, PartialEq)]
pub struct PlantedFamily {
    pub family: ColoredFamily,
    pub planted: FlatCandidate,
    pub target_color: usize,
}

fn rint(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> i64 {
    let span = (hi - lo + 1) as u64;
    lo + (rng.next_u64() % span) as i64
}

fn rq(p: i64, q: i64) -> Rat {
    Rat::new(p.into(), q.into())
}

/// Smallest side length whose ρ-dimensional grid holds `count` points.
fn grid_side(count: usize, rho: usize) -> usize {
    let mut side = 1usize;
    while side.pow(rho as u32) < count {
        side += 1;
    }
    side
}

/// Builds a colored family in which the target color's sets are small
/// boxes centered at distinct lattice points of a random rational
/// ρ-flat L (scaled to fit in [−1,1]^d, half-width 1/8), and every
/// other color consists of large boxes containing all of them. The
/// output is heterochromatic by construction, the planted flat is
/// certified exactly at generation time, and the construction is
/// bit-deterministic in the seed.
pub fn plant_family(
    d: usize,
    target_color: usize,
    flat_dim: usize,
    specs: &[ColorSpec],
    seed: u64,
) -> Result<PlantedFamily> {
    if d == 0 {
        return Err(Error::BadInput("ambient dimension must be positive".into()));
    }
    if specs.is_empty() {
        return Err(Error::EmptyInput("color specs"));
    }
    if target_color >= specs.len() {
        return Err(Error::OutOfRange {
            what: "target color",
            value: target_color as i64,
            min: 0,
            max: specs.len() as i64 - 1,
        });
    }
    if flat_dim >= d {
        return Err(Error::OutOfRange {
            what: "planted flat dimension",
            value: flat_dim as i64,
            min: 0,
            max: d as i64 - 1,
        });
    }
    if flat_dim as i64 != specs[target_color].rho as i64 {
        return Err(Error::BadInput(format!(
            "flat_dim {flat_dim} must equal the target color's rho {}",
            specs[target_color].rho
        )));
    }
    if specs.iter().any(|s| s.count == 0) {
        return Err(Error::BadInput("color with zero sets".into()));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut base: Vec<Rat> = (0..d).map(|_| rq(rint(&mut rng, -8, 8), 16)).collect();

    let mut dirs: Vec<Vec<Rat>> = Vec::with_capacity(flat_dim);
    let mut attempts = 0;
    while dirs.len() < flat_dim {
        let cand: Vec<Rat> = (0..d)
            .map(|_| Rat::from_integer(rint(&mut rng, -3, 3).into()))
            .collect();
        dirs.push(cand);
        if !is_independent(&dirs) {
            dirs.pop();
            attempts += 1;
            if attempts > 1000 {
                return Err(Error::DegenerateDirections);
            }
        }
    }

    let count = specs[target_color].count as usize;
    let side = grid_side(count, flat_dim.max(1));
    let mut offsets: Vec<Vec<i64>> = Vec::with_capacity(count);
    if flat_dim == 0 {
        offsets = vec![Vec::new(); count];
    } else {
        let mut idx = vec![0usize; flat_dim];
        while offsets.len() < count {
            offsets.push(idx.iter().map(|&i| i as i64).collect());
            let mut c = 0;
            while c < flat_dim {
                idx[c] += 1;
                if idx[c] < side {
                    break;
                }
                idx[c] = 0;
                c += 1;
            }
        }
    }

    let center_of = |base: &[Rat], dirs: &[Vec<Rat>], offset: &[i64]| -> Vec<Rat> {
        (0..d)
            .map(|t| {
                let mut x = base[t].clone();
                for (dir, &o) in dirs.iter().zip(offset) {
                    x += &dir[t] * Rat::from_integer(o.into());
                }
                x
            })
            .collect()
    };

    let mut max_abs = Rat::zero();
    for off in &offsets {
        for x in center_of(&base, &dirs, off) {
            let a = x.abs();
            if a > max_abs {
                max_abs = a;
            }
        }
    }
    if max_abs > Rat::one() {
        let factor = Rat::one() / max_abs.ceil();
        for x in base.iter_mut() {
            *x = &*x * &factor;
        }
        for dir in dirs.iter_mut() {
            for x in dir.iter_mut() {
                *x = &*x * &factor;
            }
        }
    }

    let half = rq(1, 8);
    let targets: Vec<Polytope> = offsets
        .iter()
        .map(|off| Polytope::cube(&center_of(&base, &dirs, off), &half))
        .collect::<Result<_>>()?;

    let mut colors: Vec<Vec<Polytope>> = Vec::with_capacity(specs.len());
    for (c, spec) in specs.iter().enumerate() {
        if c == target_color {
            colors.push(targets.clone());
            continue;
        }
        let mut class = Vec::with_capacity(spec.count as usize);
        for _ in 0..spec.count {
            let lo: Vec<Rat> = (0..d).map(|_| rq(-32 + rint(&mut rng, 0, 2), 8)).collect();
            let hi: Vec<Rat> = (0..d).map(|_| rq(32 - rint(&mut rng, 0, 2), 8)).collect();
            class.push(Polytope::from_box(&lo, &hi)?);
        }
        colors.push(class);
    }

    let planted = FlatCandidate::new(base, dirs)?.with_residuals(vec![0.0; count]);
    for t in &targets {
        assert!(
            flat_meets_polytope(&planted, t)?,
            "planted flat must meet every target box"
        );
    }
    let family = ColoredFamily::new(d, colors)?;
    Ok(PlantedFamily {
        family,
        planted,
        target_color,
    })
}

/// Colored family of the faces of a linear image of L_η: the vertex
/// grid is [n₁]×…×[n_l], `coords` assigns a point to each vertex in
/// row-major order (last index fastest), and color i consists of the
/// n_i hulls of the slices fixing the i-th coordinate. Heterochromatic
/// systems share a grid vertex, so the family always passes the
/// heterochromatic check.
pub fn build_leta_family(dim: usize, eta: &[u32], coords: &[Vec<Rat>]) -> Result<ColoredFamily> {
    if eta.is_empty() {
        return Err(Error::EmptyInput("eta"));
    }
    if eta.contains(&0) {
        return Err(Error::BadInput("eta entries must be positive".into()));
    }
    let total: usize = eta.iter().map(|&n| n as usize).product();
    if coords.len() != total {
        return Err(Error::BadInput(format!(
            "coordinate table has {} entries, expected {total}",
            coords.len()
        )));
    }
    for c in coords {
        if c.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: c.len(),
            });
        }
    }
    let l = eta.len();
    let mut colors: Vec<Vec<Polytope>> = Vec::with_capacity(l);
    for i in 0..l {
        let mut class = Vec::with_capacity(eta[i] as usize);
        for j in 0..eta[i] as usize {
            let mut vertices = Vec::new();
            let mut multi = vec![0usize; l];
            for (flat, coord) in coords.iter().enumerate() {
                // decode row-major index (last index fastest)
                let mut rest = flat;
                for pos in (0..l).rev() {
                    multi[pos] = rest % eta[pos] as usize;
                    rest /= eta[pos] as usize;
                }
                if multi[i] == j {
                    vertices.push(coord.clone());
                }
            }
            class.push(Polytope::new(dim, vertices)?);
        }
        colors.push(class);
    }
    ColoredFamily::new(dim, colors)
}

/// Deterministic rational points with coordinates in
/// [−range, range] and denominator `denom`.
pub fn random_rational_points(
    dim: usize,
    count: usize,
    denom: i64,
    range: i64,
    seed: u64,
) -> Vec<Vec<Rat>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| rq(rint(&mut rng, -range * denom, range * denom), denom))
                .collect()
        })
        .collect()
}
