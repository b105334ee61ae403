//! Matching the LLS sequence of a sail against the turn runs of the river.
//!
//! Both are finite windows of bi-infinite sequences, so they can only be
//! compared up to shift and reversal, and the runs at either end of the
//! river window may be cut short.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::BinaryQuadraticForm;
use crate::sail::{lls_window, LLSWindow};
use crate::topograph::{find_river_edge, river_step, turn_runs, Turn, TurnSequence};

/// Complete runs that must agree before a match counts.
pub const DEFAULT_MIN_OVERLAP: usize = 4;

/// Cap on river steps taken while collecting runs.
const MAX_RIVER_STEPS: usize = 1 << 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MatchReport {
    pub matched: bool,
    /// `b[j]` sits against `a[j + offset]`, after reversing `b` if
    /// `reversed`.
    pub offset: i64,
    pub reversed: bool,
    pub compared_length: usize,
    /// `(index in a, index in b)` of the first disagreement at offset zero.
    pub first_mismatch: Option<(usize, usize)>,
}

struct Candidate {
    offset: i64,
    reversed: bool,
    compared: usize,
}

impl Candidate {
    fn beats(&self, other: &Candidate) -> bool {
        let key = |c: &Candidate| {
            (
                !c.reversed,
                c.compared,
                std::cmp::Reverse(c.offset.unsigned_abs()),
                c.offset > 0,
            )
        };
        key(self) > key(other)
    }
}

/// Compares `b` against `a` at one offset. Returns the number of compared
/// positions and the number of those in `b`'s interior, or the first
/// mismatching pair.
fn compare(
    a: &[u64],
    b: &[u64],
    offset: i64,
    partial_ends: bool,
) -> std::result::Result<(usize, usize), (usize, usize)> {
    let (mut compared, mut interior) = (0, 0);
    for (j, &bj) in b.iter().enumerate() {
        let i = j as i64 + offset;
        if i < 0 || i >= a.len() as i64 {
            continue;
        }
        let i = i as usize;
        let end = j == 0 || j + 1 == b.len();
        let ok = if partial_ends && end { a[i] >= bj } else { a[i] == bj };
        if !ok {
            return Err((i, j));
        }
        compared += 1;
        if !(partial_ends && end) {
            interior += 1;
        }
    }
    Ok((compared, interior))
}

fn search(a: &[u64], b: &[u64], min_overlap: usize, partial_ends: bool) -> Result<MatchReport> {
    let full = if partial_ends { b.len().saturating_sub(2) } else { b.len() };
    let available = full.min(a.len());
    if a.is_empty() || b.is_empty() || available < min_overlap {
        return Err(Error::InsufficientOverlap {
            needed: min_overlap,
            available,
        });
    }
    let reversed_b: Vec<u64> = b.iter().rev().copied().collect();
    let mut best: Option<Candidate> = None;
    for (reversed, seq) in [(false, b), (true, reversed_b.as_slice())] {
        for offset in -(seq.len() as i64)..=(a.len() as i64) {
            if let Ok((compared, interior)) = compare(a, seq, offset, partial_ends) {
                if interior < min_overlap.max(1) {
                    continue;
                }
                let c = Candidate {
                    offset,
                    reversed,
                    compared,
                };
                if best.as_ref().is_none_or(|b| c.beats(b)) {
                    best = Some(c);
                }
            }
        }
    }
    Ok(match best {
        Some(c) => MatchReport {
            matched: true,
            offset: c.offset,
            reversed: c.reversed,
            compared_length: c.compared,
            first_mismatch: None,
        },
        None => MatchReport {
            matched: false,
            offset: 0,
            reversed: false,
            compared_length: 0,
            first_mismatch: compare(a, b, 0, partial_ends).err(),
        },
    })
}

/// Best alignment of `b` inside `a` up to shift and reversal. The first and
/// last terms of `b` are treated as truncated: they match any term at least
/// as large. A match needs `min_overlap` agreeing interior terms. Plain
/// shifts are preferred over reversals, then longer overlaps, then smaller
/// shifts.
pub fn align(a: &[u64], b: &[u64], min_overlap: usize) -> Result<MatchReport> {
    search(a, b, min_overlap, true)
}

/// [`align`] with every term of `b` compared exactly.
pub fn align_exact(a: &[u64], b: &[u64], min_overlap: usize) -> Result<MatchReport> {
    search(a, b, min_overlap, false)
}

/// Walks from `start` until `runs` letter changes have been seen.
fn turns_until(
    q: &BinaryQuadraticForm,
    start: crate::topograph::TopographEdge,
    runs: usize,
) -> Result<Vec<Turn>> {
    let mut e = start;
    let mut letters: Vec<Turn> = Vec::new();
    let mut changes = 0;
    while changes < runs {
        if letters.len() == MAX_RIVER_STEPS {
            return Err(Error::BudgetExceeded(MAX_RIVER_STEPS));
        }
        let (next, turn) = river_step(q, &e)?;
        if letters.last().is_some_and(|&t| t != turn) {
            changes += 1;
        }
        letters.push(turn);
        e = next;
    }
    Ok(letters)
}

/// The two sides of the theorem for `q`: the LLS window with `window` terms
/// on each side of the anchor, and the river's turn runs collected far
/// enough in each direction to cover it.
pub fn theorem_windows(q: &BinaryQuadraticForm, window: usize) -> Result<(LLSWindow, TurnSequence)> {
    let lls = lls_window(q, window, window)?;
    let edge = find_river_edge(q)?;
    let ahead = turns_until(q, edge.clone(), window + 2)?;
    let behind = TurnSequence::new(turns_until(q, edge.reversed(), window + 2)?).reversed();
    let turns = behind.letters().iter().chain(&ahead).copied().collect();
    Ok((lls, TurnSequence::new(turns)))
}

/// Aligns `window` LLS terms either side of the anchor against the river's
/// turn runs.
pub fn check_theorem(q: &BinaryQuadraticForm, window: usize) -> Result<MatchReport> {
    let (lls, turns) = theorem_windows(q, window)?;
    align(&lls.terms, &turn_runs(&turns), 2 * window)
}
