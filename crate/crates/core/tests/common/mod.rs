//! Oracles and generators shared by the integration suites. Nothing here
//! calls the library's own river walk or continued-fraction code when it
//! serves as an oracle.

#![allow(dead_code)]

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use qriver::exact::QuadraticSurd;
use qriver::forms::{BinaryQuadraticForm, FormClass};
use qriver::lattice::{LatticeVector, UnimodularMap};
use qriver::sail::{brute_sail, sail_vertices};
use qriver::topograph::{
    find_river_edge, river, turn_runs, Direction, EdgeKey, Superbase, TopographEdge, Turn,
    TurnSequence,
};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn form(a: i64, h: i64, b: i64) -> BinaryQuadraticForm {
    BinaryQuadraticForm::from_ints(a, h, b).unwrap()
}

/// `n` indefinite anisotropic forms with integer coefficients in
/// `[-bound, bound]`.
pub fn random_forms(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> Vec<BinaryQuadraticForm> {
    let mut out = Vec::with_capacity(n);
    while out.len() < n {
        let (a, h, b) = (
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
            rng.gen_range(-bound..=bound),
        );
        if let Ok(q) = BinaryQuadraticForm::from_ints(a, h, b) {
            if q.classify() == FormClass::IndefiniteAnisotropic {
                out.push(q);
            }
        }
    }
    out
}

/// Product of up to `max_len` random generators of GL(2, ℤ).
pub fn random_word(rng: &mut ChaCha8Rng, max_len: usize) -> UnimodularMap {
    let gens = [
        UnimodularMap::new(1, 1, 0, 1).unwrap(),
        UnimodularMap::new(1, -1, 0, 1).unwrap(),
        UnimodularMap::new(0, -1, 1, 0).unwrap(),
        UnimodularMap::new(0, 1, 1, 0).unwrap(),
        UnimodularMap::new(1, 0, 2, 1).unwrap(),
        UnimodularMap::new(-1, 0, 0, 1).unwrap(),
    ];
    let len = rng.gen_range(1..=max_len);
    (0..len).fold(UnimodularMap::identity(), |m, _| {
        m.compose(&gens[rng.gen_range(0..gens.len())])
    })
}

fn superbases(k: &EdgeKey) -> [Superbase; 2] {
    let (u, v) = k.regions();
    [Superbase::new(u, v), Superbase::new(u, &-v)]
}

/// Orders an edge set into a path, failing unless it is one simple path:
/// every superbase meets at most two of the edges and they are connected.
pub fn order_path(edges: &BTreeSet<EdgeKey>) -> Result<Vec<EdgeKey>, String> {
    if edges.is_empty() {
        return Ok(Vec::new());
    }
    let mut at: BTreeMap<Superbase, Vec<EdgeKey>> = BTreeMap::new();
    for e in edges {
        for s in superbases(e) {
            at.entry(s).or_default().push(e.clone());
        }
    }
    if let Some((s, es)) = at.iter().find(|(_, es)| es.len() > 2) {
        return Err(format!("superbase {s:?} meets {} river edges", es.len()));
    }
    let neighbors = |e: &EdgeKey| -> Vec<EdgeKey> {
        superbases(e)
            .iter()
            .flat_map(|s| at[s].iter().filter(|f| *f != e).cloned())
            .collect()
    };
    let start = edges
        .iter()
        .find(|e| neighbors(e).len() < 2)
        .ok_or("edge set has no end: it closes up")?
        .clone();
    let mut path = vec![start.clone()];
    let mut prev: Option<EdgeKey> = None;
    let mut cur = start;
    loop {
        let next = neighbors(&cur).into_iter().find(|n| Some(n) != prev.as_ref());
        match next {
            Some(n) => {
                prev = Some(cur);
                cur = n.clone();
                path.push(n);
            }
            None => break,
        }
    }
    if path.len() != edges.len() {
        return Err(format!(
            "edge set is not connected: path of {} out of {}",
            path.len(),
            edges.len()
        ));
    }
    Ok(path)
}

/// Turns along an ordered sign-separating path: the region shared by two
/// consecutive edges is kept, and keeping the positive region is `L`.
pub fn kept_face_turns(q: &BinaryQuadraticForm, path: &[EdgeKey]) -> TurnSequence {
    let letters = path
        .windows(2)
        .map(|w| {
            let (a, b) = w[0].regions();
            let (c, d) = w[1].regions();
            let kept = if a == c || a == d { a } else { b };
            if q.sign_at(kept) == Ordering::Greater {
                Turn::Left
            } else {
                Turn::Right
            }
        })
        .collect();
    TurnSequence::new(letters)
}

/// River runs derived from the brute-force sign oracle alone.
pub fn oracle_runs(q: &BinaryQuadraticForm, depth: usize) -> Vec<u64> {
    let edges = qriver::topograph::river_oracle(q, depth);
    let path = order_path(&edges).expect("oracle river is a simple path");
    turn_runs(&kept_face_turns(q, &path))
}

/// River edges reached by walking both ways from the located river edge,
/// restricted to `ball`, together with every directed edge walked.
pub fn walked_in_ball(
    q: &BinaryQuadraticForm,
    ball: &BTreeMap<EdgeKey, usize>,
) -> (BTreeSet<EdgeKey>, Vec<TopographEdge>) {
    let mut out = BTreeSet::new();
    let mut walked = Vec::new();
    for dir in [Direction::Forward, Direction::Backward] {
        let mut steps = 64;
        loop {
            let path = river(q, steps, dir).unwrap();
            let inside: Vec<bool> = path.edges.iter().map(|e| ball.contains_key(&e.key())).collect();
            let entered = inside.iter().position(|&b| b);
            let left_after = entered.map(|i| inside[i..].iter().any(|&b| !b));
            if left_after == Some(true) || steps >= 1 << 14 {
                out.extend(path.edges.iter().map(|e| e.key()).filter(|k| ball.contains_key(k)));
                walked.extend(path.edges);
                break;
            }
            steps *= 2;
        }
    }
    (out, walked)
}

/// Brute-force sail vertex comparison. Returns the number of certified
/// vertices, or a description of the first disagreement.
pub fn compare_sail_with_hull(q: &BinaryQuadraticForm) -> Result<usize, String> {
    let mut radius = 24u32;
    loop {
        let brute = brute_sail(q, radius).map_err(|e| e.to_string())?;
        let half = BigInt::from(radius / 2);
        let near = |v: &LatticeVector| v.x.abs() <= half && v.y.abs() <= half;
        let vs = &brute.vertices;
        let certified: Vec<&LatticeVector> = (1..vs.len().saturating_sub(1))
            .filter(|&i| near(&vs[i - 1]) && near(&vs[i]) && near(&vs[i + 1]))
            .map(|i| &vs[i])
            .collect();
        if certified.len() >= 2 || radius >= 384 {
            let cf = sail_vertices(q, 24).map_err(|e| e.to_string())?;
            let cf_set: BTreeSet<&LatticeVector> = cf.vertices.iter().collect();
            if let Some(v) = certified.iter().find(|v| !cf_set.contains(*v)) {
                return Err(format!("{q}: hull vertex {v} is not a sail vertex"));
            }
            // and the other way: sail vertices well inside the box are hull vertices
            let brute_set: BTreeSet<&LatticeVector> = vs.iter().collect();
            let cvs = &cf.vertices;
            for i in 1..cvs.len() - 1 {
                if near(&cvs[i - 1]) && near(&cvs[i]) && near(&cvs[i + 1]) && !brute_set.contains(&cvs[i]) {
                    return Err(format!("{q}: sail vertex {} missing from hull", cvs[i]));
                }
            }
            if certified.is_empty() {
                return Err(format!("{q}: no vertex certified up to radius {radius}"));
            }
            return Ok(certified.len());
        }
        radius *= 2;
    }
}

/// Continued-fraction terms of a surd computed from a decimal enclosure
/// with `digits` places, without any surd arithmetic. Returns as many terms
/// as the enclosure determines, at most `n`.
pub fn decimal_cf_oracle(s: &QuadraticSurd, digits: u32, n: usize) -> Vec<BigInt> {
    let scale = BigInt::from(10).pow(digits);
    // r ≤ √d·10^digits < r + 1
    let r = (s.d() * &scale * &scale).sqrt();
    let lo_num = s.p() * &scale + &r;
    let hi_num = &lo_num + 1;
    let den = s.q() * &scale;
    let (mut lo, mut hi) = (
        BigRational::new(lo_num, den.clone()),
        BigRational::new(hi_num, den),
    );
    if lo > hi {
        std::mem::swap(&mut lo, &mut hi);
    }
    let mut terms = Vec::new();
    while terms.len() < n {
        let (a, b) = (lo.floor(), hi.floor());
        // the true value lies strictly inside, so equal floors at both ends
        // (with the upper end not landing on an integer) decide the term
        if a != b || hi.is_integer() {
            break;
        }
        terms.push(a.to_integer());
        let (l, h) = (&lo - &a, &hi - &a);
        if l.is_zero() {
            break;
        }
        lo = BigRational::one() / h;
        hi = BigRational::one() / l;
    }
    terms
}

pub fn is_fibonacci(n: &BigInt) -> bool {
    // n ≥ 0 is Fibonacci iff 5n² ± 4 is a square
    let five = BigInt::from(5) * n * n;
    [&five + 4, &five - 4]
        .iter()
        .any(|m: &BigInt| !m.is_negative() && m.sqrt().pow(2) == *m)
}

pub fn located_edge_is_on_river(q: &BinaryQuadraticForm) -> bool {
    let e = find_river_edge(q).unwrap();
    q.sign_at(&e.left) == Ordering::Greater && q.sign_at(&e.right) == Ordering::Less
}
