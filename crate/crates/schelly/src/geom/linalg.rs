//! Small exact-rational linear algebra helpers.

use num::{BigRational, Zero};

pub type Rat = BigRational;

/// Rank of a list of row vectors, by Gaussian elimination on a copy.
#[allow(clippy::needless_range_loop)]
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut mat: Vec<Vec<Rat>> = rows.to_vec();
    let ncols = mat.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..ncols {
        let Some(pivot) = (r..mat.len()).find(|&i| !mat[i][c].is_zero()) else {
            continue;
        };
        mat.swap(r, pivot);
        let p = mat[r][c].clone();
        for x in mat[r].iter_mut().skip(c) {
            *x = &*x / &p;
        }
        for i in 0..mat.len() {
            if i != r && !mat[i][c].is_zero() {
                let f = mat[i][c].clone();
                for j in c..ncols {
                    let delta = &f * &mat[r][j];
                    mat[i][j] = &mat[i][j] - &delta;
                }
            }
        }
        r += 1;
        if r == mat.len() {
            break;
        }
    }
    r
}

pub fn is_independent(vectors: &[Vec<Rat>]) -> bool {
    !vectors.is_empty() && rank(vectors) == vectors.len()
}

/// Greedily appends vectors from `pool` (then standard basis vectors)
/// until `dirs` has rank `target`; keeps every appended vector
/// independent of the rest.
pub fn extend_to_rank(dirs: &mut Vec<Vec<Rat>>, target: usize, dim: usize, pool: &[Vec<Rat>]) {
    let unit = |i: usize| {
        let mut v = vec![Rat::zero(); dim];
        v[i] = Rat::from_integer(1.into());
        v
    };
    let candidates = pool
        .iter()
        .cloned()
        .chain((0..dim).map(unit))
        .collect::<Vec<_>>();
    for cand in candidates {
        if dirs.len() >= target {
            break;
        }
        dirs.push(cand);
        if rank(dirs) < dirs.len() {
            dirs.pop();
        }
    }
}

pub fn sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}
