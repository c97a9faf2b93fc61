//! Raise and lower moves in `(x, y)` coordinates.
//!
//! Raise applies on `x_i = y_p = c` and sends `(x_i, y_p)` to
//! `(c + 1, c - kappa)`. Lower is its inverse and applies where
//! `x_i = y_p + kappa + 1`. Points are multisets, so one edge is emitted per
//! matched value, not per index pair.

use serde::{Deserialize, Serialize};

use super::point::{Kappa, Point};
use crate::exactmath::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum MoveKind {
    Raise,
    Lower,
}

impl MoveKind {
    pub fn opposite(self) -> MoveKind {
        match self {
            MoveKind::Raise => MoveKind::Lower,
            MoveKind::Lower => MoveKind::Raise,
        }
    }
}

/// One application of a raise or lower move.
///
/// `witness` is the common value `c` with `x_i = y_p = c` on the raise side of
/// the move: the source value for a raise, the image value for a lower. A
/// raise edge and the lower edge that undoes it carry the same witness.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MoveEdge {
    pub from: Point,
    pub to: Point,
    pub kind: MoveKind,
    pub witness: Rational,
}

/// Values present in both sorted lists, deduplicated, ascending.
fn common_values<'a>(a: &'a [Rational], b: &'a [Rational]) -> Vec<&'a Rational> {
    let (mut i, mut j) = (0, 0);
    let mut out: Vec<&Rational> = Vec::new();
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                if out.last() != Some(&&a[i]) {
                    out.push(&a[i]);
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

pub fn raise_moves(p: &Point, kappa: &Kappa) -> Vec<MoveEdge> {
    let k = kappa.value();
    common_values(p.x(), p.y())
        .into_iter()
        .map(|c| MoveEdge {
            from: p.clone(),
            to: p.replace_pair(c, c + Rational::one(), c, c - k),
            kind: MoveKind::Raise,
            witness: c.clone(),
        })
        .collect()
}

pub fn lower_moves(p: &Point, kappa: &Kappa) -> Vec<MoveEdge> {
    let k = kappa.value();
    let offset = k + Rational::one();
    // x_i = y_p + kappa + 1  <=>  x_i is in (y + offset)
    let shifted: Vec<Rational> = p.y().iter().map(|y| y + &offset).collect();
    common_values(p.x(), &shifted)
        .into_iter()
        .map(|c| {
            let y_old = c - &offset;
            let image = c - Rational::one();
            MoveEdge {
                from: p.clone(),
                to: p.replace_pair(c, image.clone(), &y_old, &y_old + k),
                kind: MoveKind::Lower,
                witness: image,
            }
        })
        .collect()
}

/// All raise moves then all lower moves, each in ascending witness order.
pub fn all_moves(p: &Point, kappa: &Kappa) -> Vec<MoveEdge> {
    let mut out = raise_moves(p, kappa);
    out.extend(lower_moves(p, kappa));
    out
}

/// Applies the move opposite to `edge` at `edge.to`, if it applies there.
pub fn undo(edge: &MoveEdge, kappa: &Kappa) -> Option<MoveEdge> {
    let candidates = match edge.kind {
        MoveKind::Raise => lower_moves(&edge.to, kappa),
        MoveKind::Lower => raise_moves(&edge.to, kappa),
    };
    candidates.into_iter().find(|e| e.witness == edge.witness)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn pt(s: &str) -> Point {
        s.parse().unwrap()
    }

    fn k(s: &str) -> Kappa {
        s.parse().unwrap()
    }

    #[test]
    fn raise_examples() {
        let e = raise_moves(&pt("x=3;y=3"), &k("2"));
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].to, pt("x=4;y=1"));
        assert_eq!(e[0].kind, MoveKind::Raise);
        assert_eq!(e[0].witness, Rational::from_integer(3));

        assert!(raise_moves(&pt("x=3;y=5"), &k("2")).is_empty());

        let e = raise_moves(&pt("x=0;y=0"), &k("-1"));
        assert_eq!(e[0].to, pt("x=1;y=1"));
    }

    #[test]
    fn lower_examples() {
        let e = lower_moves(&pt("x=4;y=1"), &k("2"));
        assert_eq!(e.len(), 1);
        assert_eq!(e[0].to, pt("x=3;y=3"));
        assert_eq!(e[0].witness, Rational::from_integer(3));
        assert!(lower_moves(&pt("x=3;y=3"), &k("2")).is_empty());
    }

    #[test]
    fn duplicate_values_give_one_edge() {
        let e = raise_moves(&pt("x=1,1,2;y=1,1,2"), &k("3"));
        assert_eq!(e.len(), 2);
        assert_eq!(e[0].to, pt("x=1,2,2;y=-2,1,2"));
        assert_eq!(e[1].to, pt("x=1,1,3;y=-1,1,1"));
    }

    #[test]
    fn empty_sides_have_no_moves() {
        assert!(all_moves(&pt("x=;y=1,2"), &k("1")).is_empty());
        assert!(all_moves(&pt("x=1,2;y="), &k("1")).is_empty());
    }

    fn kappa() -> impl Strategy<Value = Kappa> {
        prop::sample::select(vec!["2", "-1", "1/2", "-2/3", "3", "5/3", "1", "-1/2"])
            .prop_map(|s| s.parse().unwrap())
    }

    fn near_diagonal(kappa: Kappa) -> impl Strategy<Value = (Point, Kappa)> {
        // Small integer grids make coincidences (and thus moves) common.
        let kv = kappa.value().clone();
        (
            prop::collection::vec(-3i64..4, 1..4),
            prop::collection::vec(-3i64..4, 1..4),
            prop::collection::vec(0i64..3, 0..3),
        )
            .prop_map(move |(x, y, shifts)| {
                let mut xs: Vec<Rational> = x.into_iter().map(Rational::from_integer).collect();
                let ys: Vec<Rational> = y.into_iter().map(Rational::from_integer).collect();
                for (i, s) in shifts.into_iter().enumerate() {
                    if i < xs.len() {
                        xs[i] = &xs[i] + &kv * Rational::from_integer(s);
                    }
                }
                (Point::new(xs, ys), Kappa::new(kv.clone()).unwrap())
            })
    }

    proptest! {
        #[test]
        fn moves_invert(pk in kappa().prop_flat_map(near_diagonal)) {
            let (p, kappa) = pk;
            for e in all_moves(&p, &kappa) {
                let back = undo(&e, &kappa).expect("inverse move applies");
                prop_assert_eq!(&back.to, &p);
                prop_assert_eq!(back.kind, e.kind.opposite());
                prop_assert_eq!(&back.witness, &e.witness);
            }
        }
    }
}
