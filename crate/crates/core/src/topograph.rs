//! Conway's topograph: the trivalent tree whose regions are lax primitive
//! vectors, decorated with the values of a form.
//!
//! A directed edge is stored as the pair of regions on its two sides, `left`
//! and `right`, oriented so that `det(left, right) = +1`. Travelling along
//! it we head toward the superbase `{left, right, left + right}` and leave
//! `{left, right, left − right}` behind.

mod dot;

pub use dot::{to_dot, DEFAULT_DOT_DEPTH};

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::cfrac::FareyFraction;
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::forms::BinaryQuadraticForm;
use crate::lattice::{det, LatticeVector, UnimodularMap};
use crate::sail::normalize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Turn {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
}

impl Turn {
    pub fn flip(self) -> Self {
        match self {
            Turn::Left => Turn::Right,
            Turn::Right => Turn::Left,
        }
    }
}

impl fmt::Display for Turn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Turn::Left => "L",
            Turn::Right => "R",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TurnSequence(Vec<Turn>);

impl TurnSequence {
    pub fn new(letters: Vec<Turn>) -> Self {
        Self(letters)
    }

    pub fn letters(&self) -> &[Turn] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The sequence as seen travelling the other way.
    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().map(|t| t.flip()).collect())
    }
}

impl fmt::Display for TurnSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|t| write!(f, "{t}"))
    }
}

impl std::str::FromStr for TurnSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                'L' => Ok(Turn::Left),
                'R' => Ok(Turn::Right),
                other => Err(Error::Parse(format!("turn letter {other:?}"))),
            })
            .collect::<Result<_>>()
            .map(Self)
    }
}

impl Serialize for TurnSequence {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Run lengths of a turn sequence. The first and last runs may be cut
/// short by the window.
pub fn turn_runs(t: &TurnSequence) -> Vec<u64> {
    let mut runs: Vec<u64> = Vec::new();
    let mut prev = None;
    for &turn in t.letters() {
        if prev == Some(turn) {
            *runs.last_mut().unwrap() += 1;
        } else {
            runs.push(1);
            prev = Some(turn);
        }
    }
    runs
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct TopographEdge {
    pub left: LatticeVector,
    pub right: LatticeVector,
}

impl TopographEdge {
    /// Errors unless `det(left, right) = +1`.
    pub fn new(left: LatticeVector, right: LatticeVector) -> Result<Self> {
        let d = det(&left, &right);
        if d.is_one() {
            Ok(Self { left, right })
        } else {
            Err(Error::NotUnimodular(d))
        }
    }

    pub fn ahead(&self) -> LatticeVector {
        &self.left + &self.right
    }

    pub fn behind(&self) -> LatticeVector {
        &self.left - &self.right
    }

    /// The same edge travelled the other way.
    pub fn reversed(&self) -> Self {
        Self {
            left: self.right.clone(),
            right: -&self.left,
        }
    }

    pub fn key(&self) -> EdgeKey {
        EdgeKey::new(&self.left, &self.right)
    }

    pub fn superbase_ahead(&self) -> Superbase {
        Superbase::new(&self.left, &self.right)
    }
}

impl fmt::Display for TopographEdge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.left, self.right)
    }
}

/// Undirected edge: the unordered pair of lax regions it separates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeKey(LatticeVector, LatticeVector);

impl EdgeKey {
    pub fn new(u: &LatticeVector, v: &LatticeVector) -> Self {
        let (u, v) = (u.lax(), v.lax());
        if u <= v {
            Self(u, v)
        } else {
            Self(v, u)
        }
    }

    pub fn regions(&self) -> (&LatticeVector, &LatticeVector) {
        (&self.0, &self.1)
    }

    /// The four edges sharing a superbase with this one.
    pub fn neighbors(&self) -> [EdgeKey; 4] {
        let (u, v) = (&self.0, &self.1);
        let (s, d) = (u + v, u - v);
        [
            EdgeKey::new(u, &s),
            EdgeKey::new(v, &s),
            EdgeKey::new(u, &d),
            EdgeKey::new(v, &d),
        ]
    }

    /// A directed representative.
    pub fn directed(&self) -> TopographEdge {
        let (u, v) = (self.0.clone(), self.1.clone());
        if det(&u, &v).is_one() {
            TopographEdge { left: u, right: v }
        } else {
            TopographEdge { left: v, right: u }
        }
    }
}

/// Vertex of the topograph: three lax regions with `e₁ + e₂ + e₃ = 0` for
/// suitable signs.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Superbase {
    regions: [LatticeVector; 3],
}

impl Superbase {
    /// The superbase `{u, v, u + v}`.
    pub fn new(u: &LatticeVector, v: &LatticeVector) -> Self {
        let mut regions = [u.lax(), v.lax(), (u + v).lax()];
        regions.sort();
        Self { regions }
    }

    pub fn regions(&self) -> &[LatticeVector; 3] {
        &self.regions
    }
}

/// `Q` on the four regions around a directed edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeValues {
    #[serde(serialize_with = "crate::report::rational")]
    pub left: Rational,
    #[serde(serialize_with = "crate::report::rational")]
    pub right: Rational,
    #[serde(serialize_with = "crate::report::rational")]
    pub ahead: Rational,
    #[serde(serialize_with = "crate::report::rational")]
    pub behind: Rational,
}

/// `Q(u + v) + Q(u − v) = 2·(Q(u) + Q(v))`
pub fn ap_rule_holds(v: &EdgeValues) -> bool {
    &v.ahead + &v.behind == Rational::from_integer(2.into()) * (&v.left + &v.right)
}

/// Values by direct evaluation, with the arithmetic progression rule
/// asserted.
pub fn edge_values(q: &BinaryQuadraticForm, e: &TopographEdge) -> EdgeValues {
    let values = EdgeValues {
        left: q.evaluate(&e.left),
        right: q.evaluate(&e.right),
        ahead: q.evaluate(&e.ahead()),
        behind: q.evaluate(&e.behind()),
    };
    assert!(ap_rule_holds(&values), "AP rule fails at {e} for {q}");
    values
}

/// The edge between `(1, 0)` and `(0, 1)`, heading toward `(1, 1)`.
pub fn base_edge() -> TopographEdge {
    TopographEdge {
        left: LatticeVector::new(1, 0),
        right: LatticeVector::new(0, 1),
    }
}

/// Image of a directed edge. A reflection swaps the sides so that the edge
/// still heads toward the image of its ahead region.
pub fn pgl_apply(m: &UnimodularMap, e: &TopographEdge) -> TopographEdge {
    let (l, r) = (m.apply(&e.left), m.apply(&e.right));
    if m.is_orientation_preserving() {
        TopographEdge { left: l, right: r }
    } else {
        TopographEdge { left: r, right: l }
    }
}

/// A river edge with its positive face on the left: the base edge of the
/// reduced form carried back to the original coordinates.
pub fn find_river_edge(q: &BinaryQuadraticForm) -> Result<TopographEdge> {
    let nf = normalize(q)?;
    let e = pgl_apply(&nf.map, &base_edge());
    let (l, r) = (q.sign_at(&e.left), q.sign_at(&e.right));
    assert_eq!(l, r.reverse(), "normalized base edge is not on the river");
    Ok(if l == Ordering::Less { e.reversed() } else { e })
}

/// One step along the river. The ahead region `w` replaces the face with
/// the same sign: replacing the right face is a left turn.
pub fn river_step(q: &BinaryQuadraticForm, e: &TopographEdge) -> Result<(TopographEdge, Turn)> {
    let w = e.ahead();
    let (l, r, s) = (q.sign_at(&e.left), q.sign_at(&e.right), q.sign_at(&w));
    if l == r || l == Ordering::Equal || r == Ordering::Equal {
        return Err(Error::OutOfDomain(format!("{e} is not a river edge of {q}")));
    }
    if s == Ordering::Equal {
        return Err(Error::Classification(q.classify()));
    }
    Ok(if s == r {
        (TopographEdge { left: e.left.clone(), right: w }, Turn::Left)
    } else {
        (TopographEdge { left: w, right: e.right.clone() }, Turn::Right)
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

/// A finite stretch of the river, with the face values on each side.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RiverPath {
    pub direction: Direction,
    pub edges: Vec<TopographEdge>,
    pub turns: TurnSequence,
    #[serde(serialize_with = "crate::report::rationals")]
    pub positive_values: Vec<Rational>,
    #[serde(serialize_with = "crate::report::rationals")]
    pub negative_values: Vec<Rational>,
}

/// Walks `n_steps` from [`find_river_edge`]. Going backward starts from the
/// reversed edge, so the positive face is then on the right.
pub fn river(q: &BinaryQuadraticForm, n_steps: usize, direction: Direction) -> Result<RiverPath> {
    let start = find_river_edge(q)?;
    let mut e = match direction {
        Direction::Forward => start,
        Direction::Backward => start.reversed(),
    };
    let mut edges = Vec::with_capacity(n_steps + 1);
    let mut turns = Vec::with_capacity(n_steps);
    for _ in 0..n_steps {
        let (next, turn) = river_step(q, &e)?;
        edges.push(std::mem::replace(&mut e, next));
        turns.push(turn);
    }
    edges.push(e);
    let (mut positive_values, mut negative_values) = (Vec::new(), Vec::new());
    for e in &edges {
        let v = edge_values(q, e);
        let (pos, neg) = if v.left > Rational::zero() {
            (v.left, v.right)
        } else {
            (v.right, v.left)
        };
        positive_values.push(pos);
        negative_values.push(neg);
    }
    Ok(RiverPath {
        direction,
        edges,
        turns: TurnSequence::new(turns),
        positive_values,
        negative_values,
    })
}

/// Turns along the river `back` steps behind and `ahead` steps past the
/// river edge, read in the forward direction.
pub fn river_turns(q: &BinaryQuadraticForm, back: usize, ahead: usize) -> Result<TurnSequence> {
    let behind = river(q, back, Direction::Backward)?.turns.reversed();
    let front = river(q, ahead, Direction::Forward)?.turns;
    Ok(TurnSequence::new(
        behind.letters().iter().chain(front.letters()).copied().collect(),
    ))
}

/// Region `(p, q)` as the fraction `p/q`.
pub fn farey_label(v: &LatticeVector) -> Result<FareyFraction> {
    FareyFraction::new(v.x.clone(), v.y.clone())
}

/// Every edge within `depth` steps of the base edge, with its distance.
pub fn topograph_ball(depth: usize) -> BTreeMap<EdgeKey, usize> {
    ball_from_base(depth)
        .into_iter()
        .map(|(e, d)| (e.key(), d))
        .collect()
}

/// The same ball as directed edges pointing away from the base edge. The
/// topograph is a tree, so walking outward meets each edge once.
fn ball_from_base(depth: usize) -> Vec<(TopographEdge, usize)> {
    let mut out = vec![(base_edge(), 0)];
    let mut frontier = vec![base_edge(), base_edge().reversed()];
    for d in 1..=depth {
        frontier = frontier
            .into_iter()
            .flat_map(|e| {
                let w = e.ahead();
                [
                    TopographEdge { left: e.left, right: w.clone() },
                    TopographEdge { left: w, right: e.right },
                ]
            })
            .collect();
        out.extend(frontier.iter().map(|e| (e.clone(), d)));
    }
    out
}

pub(crate) fn ball_around(
    seeds: impl IntoIterator<Item = EdgeKey>,
    depth: usize,
) -> BTreeMap<EdgeKey, usize> {
    let mut seen = BTreeMap::new();
    let mut queue = VecDeque::new();
    for s in seeds {
        if seen.insert(s.clone(), 0).is_none() {
            queue.push_back(s);
        }
    }
    while let Some(k) = queue.pop_front() {
        let d = seen[&k];
        if d == depth {
            continue;
        }
        for n in k.neighbors() {
            if !seen.contains_key(&n) {
                seen.insert(n.clone(), d + 1);
                queue.push_back(n);
            }
        }
    }
    seen
}

/// Sign-separating edges within `depth` of the base edge, found by direct
/// evaluation at every region. Empty for forms that take one sign.
pub fn river_oracle(q: &BinaryQuadraticForm, depth: usize) -> BTreeSet<EdgeKey> {
    ball_from_base(depth)
        .into_iter()
        .filter(|(e, _)| {
            let (sl, sr) = (q.sign_at(&e.left), q.sign_at(&e.right));
            sl != Ordering::Equal && sr != Ordering::Equal && sl != sr
        })
        .map(|(e, _)| e.key())
        .collect()
}
