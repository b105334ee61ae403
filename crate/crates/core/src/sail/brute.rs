//! Convex-hull oracle for the sail, straight from the definition.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{normalize, Frame, SailPolyline};
use crate::error::{Error, Result};
use crate::forms::BinaryQuadraticForm;
use crate::lattice::{det, LatticeVector};

/// Hull boundary facing the origin of all lattice points with
/// `|x|, |y| ≤ radius` strictly inside the canonical angle, in original
/// coordinates and sail order.
///
/// Near the box the hull bends away from the true sail, so only vertices
/// well inside the radius are trustworthy.
pub fn brute_sail(q: &BinaryQuadraticForm, radius: u32) -> Result<SailPolyline> {
    let nf = normalize(q)?;
    if radius == 0 {
        return Err(Error::EmptyOracle);
    }
    let inv = nf.map.invert();
    let r = radius as i64;
    let mut inside: Vec<LatticeVector> = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            let v = inv.apply(&LatticeVector::new(x, y));
            if v.x > BigInt::zero()
                && nf.alpha.cmp_ratio(&v.y, &v.x) == Ordering::Greater
                && nf.beta.cmp_ratio(&v.y, &v.x) == Ordering::Less
            {
                inside.push(v);
            }
        }
    }
    if inside.is_empty() {
        return Err(Error::EmptyOracle);
    }
    let hull = convex_hull(inside);
    let origin = LatticeVector::zero();
    let mut vertices: Vec<LatticeVector> = Vec::new();
    let n = hull.len();
    for i in 0..n {
        let (a, b) = (&hull[i], &hull[(i + 1) % n]);
        if n > 1 && det(&(b - a), &(&origin - a)) < BigInt::zero() {
            vertices.push(a.clone());
            vertices.push(b.clone());
        }
    }
    if vertices.is_empty() {
        vertices.push(hull[0].clone());
    }
    // all points have x > 0, so slope order is determinant order
    vertices.sort_by(|u, w| det(w, u).cmp(&BigInt::zero()));
    vertices.dedup();
    let corner = vertices
        .iter()
        .position(|v| *v == LatticeVector::new(1, 0))
        .filter(|&i| i + 1 < vertices.len());
    Ok(SailPolyline {
        frame: Frame::Original,
        vertices: vertices.iter().map(|v| nf.map.apply(v)).collect(),
        corner,
    })
}

/// Counter-clockwise hull with collinear points dropped.
fn convex_hull(mut pts: Vec<LatticeVector>) -> Vec<LatticeVector> {
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let turn = |o: &LatticeVector, a: &LatticeVector, b: &LatticeVector| det(&(a - o), &(b - o));
    let mut hull: Vec<LatticeVector> = Vec::with_capacity(2 * pts.len());
    for pass in [pts.clone(), pts.into_iter().rev().collect()] {
        let base = hull.len();
        for p in pass {
            while hull.len() >= base + 2
                && turn(&hull[hull.len() - 2], &hull[hull.len() - 1], &p) <= BigInt::zero()
            {
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}
