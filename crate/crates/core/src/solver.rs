//! Linear-time single-peg strategy.
//!
//! Every solvable board with three or more pegs is, after trimming and
//! possibly mirroring, one of five parameterized shapes. Each shape comes
//! with an explicit unhop script that builds it from one peg; playing the
//! script backwards solves the board. No search is involved.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::automaton;
use crate::board::{Configuration, Dir, IllegalMove, IllegalUnhop, Move, Unhop};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    AsIs,
    Mirrored,
}

/// Shape of a trimmed solvable board, read left to right before any
/// mirroring. Parameters count repetitions of the starred two-cell units.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// `1`
    Singleton,
    /// `110`
    TwoPegsWithHole,
    /// `10 (10)^tail 11`
    Stage1 { tail: usize },
    /// `11 (01)^left 00 (10)^right 11`
    Stage2 { left: usize, right: usize },
    /// `11 (01)^left (11)^filled 00 (10)^right 11`, `filled >= 1`
    Stage3 {
        left: usize,
        filled: usize,
        right: usize,
    },
    /// `11 (01)^left (11)^filled 01`
    Stage4 { left: usize, filled: usize },
    /// `11 (01)^left (11)^filled 1011 (10)^right 11`
    Stage5 {
        left: usize,
        filled: usize,
        right: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Tag {
    Singleton,
    TwoPegsWithHole,
    Stage1,
    Stage2,
    Stage3,
    Stage4,
    Stage5,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Family {
    pub shape: Shape,
    pub orientation: Orientation,
}

impl Shape {
    pub fn tag(&self) -> Tag {
        match self {
            Shape::Singleton => Tag::Singleton,
            Shape::TwoPegsWithHole => Tag::TwoPegsWithHole,
            Shape::Stage1 { .. } => Tag::Stage1,
            Shape::Stage2 { .. } => Tag::Stage2,
            Shape::Stage3 { .. } => Tag::Stage3,
            Shape::Stage4 { .. } => Tag::Stage4,
            Shape::Stage5 { .. } => Tag::Stage5,
        }
    }

    /// Number of cells in the rendered board.
    pub fn width(&self) -> usize {
        match *self {
            Shape::Singleton => 1,
            Shape::TwoPegsWithHole => 3,
            Shape::Stage1 { tail } => 2 * tail + 4,
            Shape::Stage2 { left, right } => 2 * (left + right) + 6,
            Shape::Stage3 {
                left,
                filled,
                right,
            } => 2 * (left + filled + right) + 6,
            Shape::Stage4 { left, filled } => 2 * (left + filled) + 4,
            Shape::Stage5 {
                left,
                filled,
                right,
            } => 2 * (left + filled + right) + 8,
        }
    }

    fn render(&self) -> String {
        let rep = |unit: &str, k: usize| unit.repeat(k);
        match *self {
            Shape::Singleton => "1".into(),
            Shape::TwoPegsWithHole => "110".into(),
            Shape::Stage1 { tail } => format!("10{}11", rep("10", tail)),
            Shape::Stage2 { left, right } => {
                format!("11{}00{}11", rep("01", left), rep("10", right))
            }
            Shape::Stage3 {
                left,
                filled,
                right,
            } => {
                format!(
                    "11{}{}00{}11",
                    rep("01", left),
                    rep("11", filled),
                    rep("10", right)
                )
            }
            Shape::Stage4 { left, filled } => {
                format!("11{}{}01", rep("01", left), rep("11", filled))
            }
            Shape::Stage5 {
                left,
                filled,
                right,
            } => {
                format!(
                    "11{}{}1011{}11",
                    rep("01", left),
                    rep("11", filled),
                    rep("10", right)
                )
            }
        }
    }

    // Seed cell and unhops building the shape, in its own coordinates.
    fn script(&self) -> (usize, Vec<Unhop>) {
        use Dir::{Left as L, Right as R};
        match *self {
            Shape::Singleton => (0, vec![]),
            Shape::TwoPegsWithHole => (2, vec![Unhop::new(2, L)]),
            Shape::Stage1 { tail } => {
                // 1 -> 110 -> 1011, then the right end keeps unhopping right.
                let mut script = vec![Unhop::new(2, L), Unhop::new(1, R)];
                script.extend((0..tail).map(|j| Unhop::new(3 + 2 * j, R)));
                (2, script)
            }
            Shape::Stage2 { left, right } => {
                // Stage 1 shifted right, then the left end unhops left
                // `left + 1` times; the first of these opens the 00.
                let shift = 2 * left + 2;
                let (seed, mut script) = Shape::Stage1 { tail: right }.script();
                for u in &mut script {
                    *u = u.shifted(shift);
                }
                script.extend((0..=left).map(|j| Unhop::new(shift - 2 * j, L)));
                (seed + shift, script)
            }
            Shape::Stage3 {
                left,
                filled,
                right,
            } => {
                // Walk the 00 right by unhopping the peg after it leftwards.
                let (seed, mut script) = Shape::Stage2 {
                    left,
                    right: right + filled,
                }
                .script();
                script.extend((0..filled).map(|j| Unhop::new(2 * left + 4 + 2 * j, L)));
                (seed, script)
            }
            Shape::Stage4 { left, filled: 0 } => {
                let len = self.width();
                let (seed, script) = Shape::Stage1 { tail: left }.script();
                (
                    len - 1 - seed,
                    script.into_iter().map(|u| u.mirror(len)).collect(),
                )
            }
            Shape::Stage4 { left, filled } => {
                // The 00 walks right until it meets the final 11.
                let (seed, mut script) = Shape::Stage2 {
                    left,
                    right: filled - 1,
                }
                .script();
                script.extend((0..filled).map(|j| Unhop::new(2 * left + 4 + 2 * j, L)));
                (seed, script)
            }
            Shape::Stage5 {
                left,
                filled,
                right,
            } => {
                // Fill the 00 from its left neighbour.
                let (seed, mut script) = Shape::Stage3 {
                    left,
                    filled: filled + 1,
                    right,
                }
                .script();
                script.push(Unhop::new(2 * left + 2 * filled + 3, R));
                (seed, script)
            }
        }
    }
}

/// Unhop script for a family: start from one peg at `seed` on a board of
/// `len` holes and apply `unhops` in order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Script {
    pub len: usize,
    pub seed: usize,
    pub unhops: Vec<Unhop>,
}

impl Script {
    /// Replays the script from its seed.
    pub fn build(&self) -> Result<Configuration, IllegalUnhop> {
        let mut c = Configuration::single(self.len, self.seed);
        for &u in &self.unhops {
            c.unplay(u)?;
        }
        Ok(c)
    }

    /// The hops that undo the script, last unhop first.
    pub fn to_moves(&self) -> Vec<Move> {
        self.unhops
            .iter()
            .rev()
            .map(|u| u.inverse().expect("script unhops stay on the board"))
            .collect()
    }
}

impl Family {
    pub fn tag(&self) -> Tag {
        self.shape.tag()
    }

    pub fn render(&self) -> Configuration {
        let text = self.shape.render();
        let c: Configuration = text.parse().expect("shapes render to 0/1 text");
        match self.orientation {
            Orientation::AsIs => c,
            Orientation::Mirrored => c.reverse(),
        }
    }

    pub fn unhop_script(&self) -> Script {
        let len = self.shape.width();
        let (seed, unhops) = self.shape.script();
        match self.orientation {
            Orientation::AsIs => Script { len, seed, unhops },
            Orientation::Mirrored => Script {
                len,
                seed: len - 1 - seed,
                unhops: unhops.into_iter().map(|u| u.mirror(len)).collect(),
            },
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.orientation {
            Orientation::AsIs => "",
            Orientation::Mirrored => ", mirrored",
        };
        write!(f, "{:?}{side}", self.shape)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("configuration {0} cannot be reduced to a single peg")]
    Unsolvable(Configuration),
    #[error("configuration {0} matches no solvable shape")]
    NotClassifiable(Configuration),
    #[error("configuration {0} is not trimmed")]
    NotTrimmed(Configuration),
}

// Two-cell units over a byte slice, with a literal prefix and suffix
// stripped up front so the middle can be matched greedily.
struct Units<'a> {
    s: &'a [u8],
    pos: usize,
    end: usize,
}

impl<'a> Units<'a> {
    fn framed(s: &'a [u8], prefix: &[u8], suffix: &[u8]) -> Option<Units<'a>> {
        if s.len() < prefix.len() + suffix.len() || !s.starts_with(prefix) || !s.ends_with(suffix) {
            return None;
        }
        Some(Units {
            s,
            pos: prefix.len(),
            end: s.len() - suffix.len(),
        })
    }

    fn lit(&mut self, w: &[u8]) -> bool {
        if self.pos + w.len() <= self.end && &self.s[self.pos..self.pos + w.len()] == w {
            self.pos += w.len();
            true
        } else {
            false
        }
    }

    fn reps(&mut self, unit: &[u8]) -> usize {
        let mut k = 0;
        while self.lit(unit) {
            k += 1;
        }
        k
    }

    fn done(&self) -> bool {
        self.pos == self.end
    }
}

fn match_shape(s: &[u8]) -> Option<Shape> {
    if s == b"1" {
        return Some(Shape::Singleton);
    }
    if let Some(mut u) = Units::framed(s, b"10", b"11") {
        let tail = u.reps(b"10");
        if u.done() {
            return Some(Shape::Stage1 { tail });
        }
    }
    if let Some(mut u) = Units::framed(s, b"11", b"11") {
        let left = u.reps(b"01");
        let filled = u.reps(b"11");
        let mark = u.pos;
        if u.lit(b"00") {
            let right = u.reps(b"10");
            if u.done() {
                return Some(if filled == 0 {
                    Shape::Stage2 { left, right }
                } else {
                    Shape::Stage3 {
                        left,
                        filled,
                        right,
                    }
                });
            }
        }
        u.pos = mark;
        if u.lit(b"1011") {
            let right = u.reps(b"10");
            if u.done() {
                return Some(Shape::Stage5 {
                    left,
                    filled,
                    right,
                });
            }
        }
    }
    if let Some(mut u) = Units::framed(s, b"11", b"01") {
        let left = u.reps(b"01");
        let filled = u.reps(b"11");
        if u.done() {
            return Some(Shape::Stage4 { left, filled });
        }
    }
    None
}

/// Classifies a trimmed board, trying it as given and then mirrored.
pub fn classify(c: &Configuration) -> Result<Family, SolveError> {
    if c.is_empty() || !c.is_peg(0) || !c.is_peg(c.len() - 1) {
        return Err(SolveError::NotTrimmed(c.clone()));
    }
    let forward: Vec<u8> = c.symbols().map(|b| b + b'0').collect();
    if let Some(shape) = match_shape(&forward) {
        return Ok(Family {
            shape,
            orientation: Orientation::AsIs,
        });
    }
    let backward: Vec<u8> = forward.iter().rev().copied().collect();
    if let Some(shape) = match_shape(&backward) {
        return Ok(Family {
            shape,
            orientation: Orientation::Mirrored,
        });
    }
    Err(SolveError::NotClassifiable(c.clone()))
}

pub fn unhop_script(f: &Family) -> Script {
    f.unhop_script()
}

/// An ordered hop sequence from a starting board.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plan {
    pub initial: Configuration,
    pub final_pegs: usize,
    pub moves: Vec<Move>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ReplayError {
    #[error("move {index} ({mv}) is illegal: {cause}")]
    Illegal {
        index: usize,
        mv: Move,
        cause: IllegalMove,
    },
    #[error("plan ends with {found} pegs, expected {expected}")]
    WrongPegCount { found: usize, expected: usize },
}

impl Plan {
    /// Plays every move from `initial`.
    pub fn replay(&self) -> Result<Configuration, ReplayError> {
        let mut c = self.initial.clone();
        for (index, &mv) in self.moves.iter().enumerate() {
            c.play(mv)
                .map_err(|cause| ReplayError::Illegal { index, mv, cause })?;
        }
        Ok(c)
    }

    /// Replays and checks the final peg count.
    pub fn validate(&self) -> Result<Configuration, ReplayError> {
        let end = self.replay()?;
        if end.peg_count() != self.final_pegs {
            return Err(ReplayError::WrongPegCount {
                found: end.peg_count(),
                expected: self.final_pegs,
            });
        }
        Ok(end)
    }

    /// Space-separated moves, e.g. `3L 0R`.
    pub fn compact(&self) -> String {
        self.moves
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plans serialize")
    }
}

/// Reduces a solvable board to one peg, in time linear in its length.
/// Moves are in the board's own coordinates.
pub fn solve_single(c: &Configuration) -> Result<Plan, SolveError> {
    if !automaton::is_solvable(c) {
        return Err(SolveError::Unsolvable(c.clone()));
    }
    let moves = single_peg_moves(c)?;
    Ok(Plan {
        initial: c.clone(),
        final_pegs: 1,
        moves,
    })
}

// Assumes `c` is in the solvable language.
pub(crate) fn single_peg_moves(c: &Configuration) -> Result<Vec<Move>, SolveError> {
    let (window, offset) = c.trim();
    match window.len() {
        0 => return Err(SolveError::Unsolvable(c.clone())),
        1 => return Ok(vec![]),
        2 => {
            // 11 with a hole beside it somewhere on the board.
            let right_hole = offset + 2 < c.len() && !c.is_peg(offset + 2);
            return if right_hole {
                Ok(vec![Move::new(offset, Dir::Right)])
            } else if offset >= 1 {
                Ok(vec![Move::new(offset + 1, Dir::Left)])
            } else {
                Err(SolveError::Unsolvable(c.clone()))
            };
        }
        _ => {}
    }
    let family = classify(&window)?;
    let script = family.unhop_script();
    Ok(script
        .to_moves()
        .into_iter()
        .map(|m| m.shifted(offset))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(s: &str) -> Configuration {
        s.parse().unwrap()
    }

    #[test]
    fn classify_examples() {
        let f = classify(&cfg("1010101011")).unwrap();
        assert_eq!(f.shape, Shape::Stage1 { tail: 3 });
        assert_eq!(f.render(), cfg("1010101011"));
        assert_eq!(
            classify(&cfg("110011")).unwrap().shape,
            Shape::Stage2 { left: 0, right: 0 }
        );
        assert_eq!(
            classify(&cfg("111111111101")).unwrap().shape,
            Shape::Stage4 { left: 0, filled: 4 }
        );
        assert_eq!(classify(&cfg("1")).unwrap().shape, Shape::Singleton);
        assert!(matches!(
            classify(&cfg("11")),
            Err(SolveError::NotClassifiable(_))
        ));
        assert!(matches!(
            classify(&cfg("0110")),
            Err(SolveError::NotTrimmed(_))
        ));
    }

    #[test]
    fn displayed_stage_strings() {
        let cases = [
            ("110010101011", Shape::Stage2 { left: 0, right: 3 }),
            (
                "111111110011",
                Shape::Stage3 {
                    left: 0,
                    filled: 3,
                    right: 0,
                },
            ),
            (
                "111111101111",
                Shape::Stage5 {
                    left: 0,
                    filled: 2,
                    right: 0,
                },
            ),
            ("1011", Shape::Stage1 { tail: 0 }),
        ];
        for (text, shape) in cases {
            let f = classify(&cfg(text)).unwrap();
            assert_eq!(f.shape, shape, "{text}");
            assert_eq!(f.orientation, Orientation::AsIs);
        }
        let f = classify(&cfg("1101")).unwrap();
        assert_eq!(f.shape, Shape::Stage4 { left: 0, filled: 0 });
        let f = classify(&cfg("11001111")).unwrap();
        assert_eq!(
            f.shape,
            Shape::Stage3 {
                left: 0,
                filled: 1,
                right: 0
            }
        );
        assert_eq!(f.orientation, Orientation::Mirrored);
    }

    #[test]
    fn script_examples() {
        let single = Family {
            shape: Shape::Singleton,
            orientation: Orientation::AsIs,
        };
        assert!(single.unhop_script().unhops.is_empty());

        let pair = Family {
            shape: Shape::TwoPegsWithHole,
            orientation: Orientation::Mirrored,
        };
        assert_eq!(pair.render(), cfg("011"));
        let script = pair.unhop_script();
        assert_eq!(script.unhops.len(), 1);
        assert_eq!(script.build().unwrap(), cfg("011"));

        let f = classify(&cfg("1011")).unwrap();
        let script = f.unhop_script();
        assert_eq!(script.unhops.len(), 2);
        assert_eq!(script.build().unwrap(), cfg("1011"));
    }

    #[test]
    fn every_shape_builds_what_it_renders() {
        for a in 0..4 {
            for b in 0..4 {
                for c in 0..4 {
                    let shapes = [
                        Shape::Stage1 { tail: a },
                        Shape::Stage2 { left: a, right: b },
                        Shape::Stage3 {
                            left: a,
                            filled: c + 1,
                            right: b,
                        },
                        Shape::Stage4 { left: a, filled: c },
                        Shape::Stage5 {
                            left: a,
                            filled: c,
                            right: b,
                        },
                    ];
                    for shape in shapes {
                        for orientation in [Orientation::AsIs, Orientation::Mirrored] {
                            let f = Family { shape, orientation };
                            let script = f.unhop_script();
                            let built = script.build().unwrap_or_else(|e| panic!("{f}: {e}"));
                            assert_eq!(built, f.render(), "{f}");
                            assert_eq!(script.unhops.len(), built.peg_count() - 1);
                            // The last surviving peg is never at either end.
                            assert!(script.seed > 0 && script.seed < script.len - 1, "{f}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn solve_single_examples() {
        let p = solve_single(&cfg("1")).unwrap();
        assert!(p.moves.is_empty());
        assert_eq!(p.final_pegs, 1);

        let p = solve_single(&cfg("011")).unwrap();
        assert_eq!(p.moves, vec![Move::new(2, Dir::Left)]);

        let p = solve_single(&cfg("1011")).unwrap();
        assert_eq!(p.moves.len(), 2);
        assert_eq!(p.validate().unwrap().peg_count(), 1);

        assert!(matches!(
            solve_single(&cfg("11")),
            Err(SolveError::Unsolvable(_))
        ));
        assert!(matches!(
            solve_single(&cfg("1111")),
            Err(SolveError::Unsolvable(_))
        ));
        assert!(matches!(
            solve_single(&cfg("000")),
            Err(SolveError::Unsolvable(_))
        ));
    }

    #[test]
    fn two_peg_boards_use_the_free_side() {
        assert_eq!(
            solve_single(&cfg("110")).unwrap().moves,
            vec![Move::new(0, Dir::Right)]
        );
        assert_eq!(
            solve_single(&cfg("0110")).unwrap().moves,
            vec![Move::new(1, Dir::Right)]
        );
        assert_eq!(
            solve_single(&cfg("00011")).unwrap().moves,
            vec![Move::new(4, Dir::Left)]
        );
    }

    #[test]
    fn plan_serialization() {
        let p = solve_single(&cfg("011")).unwrap();
        assert_eq!(
            p.to_json(),
            r#"{"initial":"011","final_pegs":1,"moves":[{"from":2,"dir":"L"}]}"#
        );
        assert_eq!(p.compact(), "2L");
        let back: Plan = serde_json::from_str(&p.to_json()).unwrap();
        assert_eq!(back, p);
    }
}
