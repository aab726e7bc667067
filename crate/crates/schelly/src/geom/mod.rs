//! Exact convex-polytope machinery for verifying transversal theorems on
//! concrete families.
//!
//! Polytopes are V-representation only: membership, intersection, and
//! flat-meets queries are linear feasibility problems in barycentric
//! coefficients, solved by the exact rational simplex in [`lp`]. Floats
//! appear only inside the heuristic flat search ([`search`]), never in a
//! verdict.

pub mod generate;
pub mod linalg;
pub mod lp;
pub mod search;
pub mod verify;

use std::fmt;
use std::str::FromStr;

use num::{BigRational, One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use lp::Feasibility;

pub type Rat = BigRational;

pub(crate) fn rat_from_str(s: &str) -> Result<Rat> {
    Rat::from_str(s.trim()).map_err(|e| Error::BadInput(format!("rational '{s}': {e}")))
}

/// Rational number in JSON: emitted as a canonical "p/q" (or integer)
/// string, accepted as either a string or a bare integer.
#[derive(Debug, Clone, PartialEq, Eq)]
struct JsonRat(Rat);

impl Serialize for JsonRat {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.0.to_string())
    }
}

impl<'de> Deserialize<'de> for JsonRat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(i64),
            Str(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Int(i) => Ok(JsonRat(Rat::from_integer(i.into()))),
            Raw::Str(s) => rat_from_str(&s)
                .map(JsonRat)
                .map_err(|e| D::Error::custom(e.to_string())),
        }
    }
}

fn wrap_vec(v: &[Rat]) -> Vec<JsonRat> {
    v.iter().map(|r| JsonRat(r.clone())).collect()
}

fn unwrap_vec(v: Vec<JsonRat>) -> Vec<Rat> {
    v.into_iter().map(|r| r.0).collect()
}

/// A compact convex set given as the convex hull of finitely many
/// points with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polytope {
    dim: usize,
    vertices: Vec<Vec<Rat>>,
}

impl Polytope {
    pub fn new(dim: usize, vertices: Vec<Vec<Rat>>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::BadInput("ambient dimension must be positive".into()));
        }
        if vertices.is_empty() {
            return Err(Error::EmptyInput("polytope vertex list"));
        }
        for v in &vertices {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
        }
        Ok(Polytope { dim, vertices })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vec<Rat>] {
        &self.vertices
    }

    /// Average of the vertex list; lies in the hull.
    pub fn centroid(&self) -> Vec<Rat> {
        let n = Rat::from_integer((self.vertices.len() as i64).into());
        (0..self.dim)
            .map(|t| self.vertices.iter().map(|v| &v[t]).sum::<Rat>() / &n)
            .collect()
    }

    /// Axis-aligned box `[lo, hi]` (degenerate coordinates allowed);
    /// duplicate corners collapse.
    pub fn from_box(lo: &[Rat], hi: &[Rat]) -> Result<Self> {
        let dim = lo.len();
        if hi.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: hi.len(),
            });
        }
        if lo.iter().zip(hi).any(|(l, h)| l > h) {
            return Err(Error::BadInput("box with lo > hi".into()));
        }
        let mut vertices: Vec<Vec<Rat>> = vec![Vec::with_capacity(dim)];
        for t in 0..dim {
            if lo[t] == hi[t] {
                for v in vertices.iter_mut() {
                    v.push(lo[t].clone());
                }
            } else {
                let mut next = Vec::with_capacity(vertices.len() * 2);
                for v in vertices {
                    let mut a = v.clone();
                    a.push(lo[t].clone());
                    next.push(a);
                    let mut b = v;
                    b.push(hi[t].clone());
                    next.push(b);
                }
                vertices = next;
            }
        }
        Polytope::new(dim, vertices)
    }

    /// Axis-aligned cube of the given half-width around a center.
    pub fn cube(center: &[Rat], half_width: &Rat) -> Result<Self> {
        if half_width.is_negative() {
            return Err(Error::BadInput("negative half-width".into()));
        }
        let lo: Vec<Rat> = center.iter().map(|c| c - half_width).collect();
        let hi: Vec<Rat> = center.iter().map(|c| c + half_width).collect();
        Polytope::from_box(&lo, &hi)
    }

    /// A single point.
    pub fn point(coords: Vec<Rat>) -> Result<Self> {
        let dim = coords.len();
        Polytope::new(dim, vec![coords])
    }
}

#[derive(Serialize, Deserialize)]
struct PolytopeRepr {
    vertices: Vec<Vec<JsonRat>>,
}

impl Serialize for Polytope {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        PolytopeRepr {
            vertices: self.vertices.iter().map(|v| wrap_vec(v)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Polytope {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = PolytopeRepr::deserialize(deserializer)?;
        let vertices: Vec<Vec<Rat>> = repr.vertices.into_iter().map(unwrap_vec).collect();
        let dim = vertices.first().map_or(0, Vec::len);
        Polytope::new(dim, vertices).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// A colored list of polytopes: `colors[i]` holds the sets painted with
/// color i. Every color class is nonempty and all sets share the
/// ambient dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColoredFamily {
    dim: usize,
    colors: Vec<Vec<Polytope>>,
}

impl ColoredFamily {
    pub fn new(dim: usize, colors: Vec<Vec<Polytope>>) -> Result<Self> {
        if colors.is_empty() {
            return Err(Error::EmptyInput("color list"));
        }
        for class in &colors {
            if class.is_empty() {
                return Err(Error::EmptyInput("color class"));
            }
            for p in class {
                if p.dim() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        got: p.dim(),
                    });
                }
            }
        }
        Ok(ColoredFamily { dim, colors })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn colors(&self) -> &[Vec<Polytope>] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.colors.len()
    }
}

#[derive(Serialize, Deserialize)]
struct FamilyRepr {
    d: usize,
    colors: Vec<Vec<Polytope>>,
}

impl Serialize for ColoredFamily {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FamilyRepr {
            d: self.dim,
            colors: self.colors.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for ColoredFamily {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = FamilyRepr::deserialize(deserializer)?;
        ColoredFamily::new(repr.d, repr.colors).map_err(|e| D::Error::custom(e.to_string()))
    }
}

/// A candidate affine ρ-flat `base + span(directions)` with per-set
/// residual bounds from the search that produced it (all zero when the
/// flat was certified exactly).
#[derive(Debug, Clone, PartialEq)]
pub struct FlatCandidate {
    dim_flat: usize,
    base: Vec<Rat>,
    directions: Vec<Vec<Rat>>,
    residuals: Vec<f64>,
}

impl FlatCandidate {
    pub fn new(base: Vec<Rat>, directions: Vec<Vec<Rat>>) -> Result<Self> {
        let dim = base.len();
        if dim == 0 {
            return Err(Error::BadInput("flat in dimension zero".into()));
        }
        if directions.len() >= dim {
            return Err(Error::OutOfRange {
                what: "flat dimension",
                value: directions.len() as i64,
                min: 0,
                max: dim as i64 - 1,
            });
        }
        for dir in &directions {
            if dir.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: dir.len(),
                });
            }
        }
        if !directions.is_empty() && !linalg::is_independent(&directions) {
            return Err(Error::DegenerateDirections);
        }
        Ok(FlatCandidate {
            dim_flat: directions.len(),
            base,
            directions,
            residuals: Vec::new(),
        })
    }

    pub fn with_residuals(mut self, residuals: Vec<f64>) -> Self {
        self.residuals = residuals;
        self
    }

    pub fn dim_flat(&self) -> usize {
        self.dim_flat
    }

    pub fn ambient_dim(&self) -> usize {
        self.base.len()
    }

    pub fn base(&self) -> &[Rat] {
        &self.base
    }

    pub fn directions(&self) -> &[Vec<Rat>] {
        &self.directions
    }

    pub fn residuals(&self) -> &[f64] {
        &self.residuals
    }
}

impl fmt::Display for FlatCandidate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-flat through (", self.dim_flat)?;
        for (i, c) in self.base.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[derive(Serialize, Deserialize)]
struct FlatRepr {
    base: Vec<JsonRat>,
    directions: Vec<Vec<JsonRat>>,
    residuals: Vec<f64>,
}

impl Serialize for FlatCandidate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        FlatRepr {
            base: wrap_vec(&self.base),
            directions: self.directions.iter().map(|d| wrap_vec(d)).collect(),
            residuals: self.residuals.clone(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FlatCandidate {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = FlatRepr::deserialize(deserializer)?;
        let flat = FlatCandidate::new(
            unwrap_vec(repr.base),
            repr.directions.into_iter().map(unwrap_vec).collect(),
        )
        .map_err(|e| D::Error::custom(e.to_string()))?;
        Ok(flat.with_residuals(repr.residuals))
    }
}

fn check_same_dim(sets: &[Polytope]) -> Result<usize> {
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
    Ok(dim)
}

/// Feasibility system for a common point of all sets: one barycentric
/// block per polytope, a convexity row per block, and coordinate rows
/// tying every block to the first.
fn common_point_system(sets: &[Polytope]) -> Result<Feasibility> {
    let dim = check_same_dim(sets)?;
    let offsets: Vec<usize> = sets
        .iter()
        .scan(0usize, |acc, p| {
            let o = *acc;
            *acc += p.vertices().len();
            Some(o)
        })
        .collect();
    let n_vars: usize = sets.iter().map(|p| p.vertices().len()).sum();
    let mut sys = Feasibility::new(n_vars);
    for (p, &off) in sets.iter().zip(&offsets) {
        let mut row = vec![Rat::zero(); n_vars];
        for j in 0..p.vertices().len() {
            row[off + j] = Rat::one();
        }
        sys.add_eq(row, Rat::one())?;
    }
    for (p, &off) in sets.iter().zip(&offsets).skip(1) {
        for t in 0..dim {
            let mut row = vec![Rat::zero(); n_vars];
            for (j, v) in sets[0].vertices().iter().enumerate() {
                row[offsets[0] + j] = v[t].clone();
            }
            for (j, v) in p.vertices().iter().enumerate() {
                row[off + j] = -&v[t];
            }
            sys.add_eq(row, Rat::zero())?;
        }
    }
    Ok(sys)
}

/// Exact test for a nonempty common intersection.
pub fn intersects(sets: &[Polytope]) -> Result<bool> {
    Ok(common_point_system(sets)?.solve().is_some())
}

/// Exact membership of a point in the hull.
pub fn contains_point(p: &Polytope, x: &[Rat]) -> Result<bool> {
    if x.len() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: x.len(),
        });
    }
    let n = p.vertices().len();
    let mut sys = Feasibility::new(n);
    sys.add_eq(vec![Rat::one(); n], Rat::one())?;
    for t in 0..p.dim() {
        let row = p.vertices().iter().map(|v| v[t].clone()).collect();
        sys.add_eq(row, x[t].clone())?;
    }
    Ok(sys.solve().is_some())
}

/// Exact common point of all sets, when one exists.
pub fn find_point_transversal(sets: &[Polytope]) -> Result<Option<Vec<Rat>>> {
    let dim = check_same_dim(sets)?;
    let Some(solution) = common_point_system(sets)?.solve() else {
        return Ok(None);
    };
    let first = &sets[0];
    let x: Vec<Rat> = (0..dim)
        .map(|t| {
            first
                .vertices()
                .iter()
                .enumerate()
                .map(|(j, v)| &solution[j] * &v[t])
                .sum()
        })
        .collect();
    for p in sets {
        debug_assert!(contains_point(p, &x)?, "LP point must lie in every set");
    }
    Ok(Some(x))
}

/// Exact test whether an affine flat meets the hull: feasibility over
/// barycentric coefficients and signed flat parameters.
pub fn flat_meets_polytope(flat: &FlatCandidate, p: &Polytope) -> Result<bool> {
    if flat.ambient_dim() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: flat.ambient_dim(),
        });
    }
    if !flat.directions.is_empty() && !linalg::is_independent(&flat.directions) {
        return Err(Error::DegenerateDirections);
    }
    let n = p.vertices().len();
    let rho = flat.dim_flat;
    let n_vars = n + 2 * rho;
    let mut sys = Feasibility::new(n_vars);
    let mut conv = vec![Rat::zero(); n_vars];
    for c in conv.iter_mut().take(n) {
        *c = Rat::one();
    }
    sys.add_eq(conv, Rat::one())?;
    for t in 0..p.dim() {
        let mut row = vec![Rat::zero(); n_vars];
        for (j, v) in p.vertices().iter().enumerate() {
            row[j] = v[t].clone();
        }
        for (i, dir) in flat.directions.iter().enumerate() {
            row[n + 2 * i] = -&dir[t];
            row[n + 2 * i + 1] = dir[t].clone();
        }
        sys.add_eq(row, flat.base[t].clone())?;
    }
    Ok(sys.solve().is_some())
}

/// Iterates over all full systems of representatives (one set per
/// color) until `f` returns false.
fn for_each_representative_system<F>(fam: &ColoredFamily, mut f: F) -> Result<bool>
where
    F: FnMut(&[Polytope]) -> Result<bool>,
{
    let sizes: Vec<usize> = fam.colors().iter().map(Vec::len).collect();
    let mut idx = vec![0usize; sizes.len()];
    loop {
        let reps: Vec<Polytope> = idx
            .iter()
            .enumerate()
            .map(|(c, &i)| fam.colors()[c][i].clone())
            .collect();
        if !f(&reps)? {
            return Ok(false);
        }
        let mut c = 0;
        while c < sizes.len() {
            idx[c] += 1;
            if idx[c] < sizes[c] {
                break;
            }
            idx[c] = 0;
            c += 1;
        }
        if c == sizes.len() {
            return Ok(true);
        }
    }
}

/// True iff every full system of representatives intersects. By
/// convexity this implies that every smaller heterochromatic subset
/// intersects as well.
pub fn check_heterochromatic(fam: &ColoredFamily) -> Result<bool> {
    for_each_representative_system(fam, intersects)
}

/// True iff at most one of the k leave-one-out subfamilies fails to
/// intersect.
pub fn check_semintersecting(sets: &[Polytope]) -> Result<bool> {
    if sets.len() < 2 {
        return Err(Error::OutOfRange {
            what: "semintersecting family size",
            value: sets.len() as i64,
            min: 2,
            max: i64::MAX,
        });
    }
    let mut failures = 0;
    for skip in 0..sets.len() {
        let rest: Vec<Polytope> = sets
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != skip)
            .map(|(_, p)| p.clone())
            .collect();
        if !intersects(&rest)? {
            failures += 1;
            if failures > 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// True iff every full representative system is semintersecting (the
/// hypothesis of the semintersecting theorems, with subset size equal
/// to the number of colors).
pub fn check_all_representatives_semintersecting(fam: &ColoredFamily) -> Result<bool> {
    if fam.num_colors() < 2 {
        return Err(Error::OutOfRange {
            what: "number of colors",
            value: fam.num_colors() as i64,
            min: 2,
            max: i64::MAX,
        });
    }
    for_each_representative_system(fam, check_semintersecting)
}
