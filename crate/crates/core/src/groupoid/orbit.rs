//! Orbit enumeration by capped breadth-first closure.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use super::moves::{all_moves, MoveEdge};
use super::point::{Kappa, Point};

/// A (possibly truncated) orbit.
///
/// When `complete` is true the point set is closed under raise and lower
/// moves. When false, enumeration stopped because a new point was found with
/// `cap` points already collected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Orbit {
    pub points: BTreeSet<Point>,
    pub edges: Vec<MoveEdge>,
    pub complete: bool,
    pub cap: usize,
}

impl Orbit {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.points.contains(p)
    }
}

/// `(n + m)! + 1`, saturating.
pub fn default_cap(n: usize, m: usize) -> usize {
    (1..=n + m)
        .try_fold(1usize, |acc, k| acc.checked_mul(k))
        .map_or(usize::MAX, |f| f.saturating_add(1))
}

/// Breadth-first closure of `seed` under all moves.
///
/// Each level is expanded in ascending point order, and each point's moves in
/// raise-then-lower, ascending-witness order, so the result is deterministic.
pub fn orbit(seed: &Point, kappa: &Kappa, cap: usize) -> Orbit {
    let cap = cap.max(1);
    let mut points = BTreeSet::from([seed.clone()]);
    let mut edges = Vec::new();
    let mut frontier = vec![seed.clone()];
    let mut complete = true;

    'levels: while !frontier.is_empty() {
        frontier.sort();
        let mut next = Vec::new();
        for p in &frontier {
            for e in all_moves(p, kappa) {
                if !points.contains(&e.to) {
                    if points.len() >= cap {
                        complete = false;
                        break 'levels;
                    }
                    points.insert(e.to.clone());
                    next.push(e.to.clone());
                }
                edges.push(e);
            }
        }
        frontier = next;
    }

    Orbit {
        points,
        edges,
        complete,
        cap,
    }
}

/// Shortest move sequence from `a` to `b`, searching at most `cap` points.
pub fn path_between(a: &Point, b: &Point, kappa: &Kappa, cap: usize) -> Option<Vec<MoveEdge>> {
    path_within(a, b, kappa, cap, usize::MAX)
}

/// As [`path_between`], additionally bounded to paths of at most `max_moves`.
pub fn path_within(
    a: &Point,
    b: &Point,
    kappa: &Kappa,
    cap: usize,
    max_moves: usize,
) -> Option<Vec<MoveEdge>> {
    if a.dims() != b.dims() {
        return None;
    }
    if a == b {
        return Some(Vec::new());
    }
    let cap = cap.max(1);
    // point -> (edge that reached it, depth)
    let mut parent: BTreeMap<Point, Option<MoveEdge>> = BTreeMap::from([(a.clone(), None)]);
    let mut queue = VecDeque::from([(a.clone(), 0usize)]);

    while let Some((p, depth)) = queue.pop_front() {
        if depth >= max_moves {
            continue;
        }
        for e in all_moves(&p, kappa) {
            if parent.contains_key(&e.to) {
                continue;
            }
            if parent.len() >= cap {
                return None;
            }
            let to = e.to.clone();
            parent.insert(to.clone(), Some(e));
            if &to == b {
                return Some(unwind(&parent, b));
            }
            queue.push_back((to, depth + 1));
        }
    }
    None
}

fn unwind(parent: &BTreeMap<Point, Option<MoveEdge>>, end: &Point) -> Vec<MoveEdge> {
    let mut path = Vec::new();
    let mut cur = end;
    while let Some(Some(e)) = parent.get(cur) {
        path.push(e.clone());
        cur = &e.from;
    }
    path.reverse();
    path
}
