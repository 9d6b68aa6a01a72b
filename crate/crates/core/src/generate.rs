//! Seeded random boards. Solvable boards are built by replaying the unhop
//! script of a random shape from one peg, so they are solvable by
//! construction.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::board::{Cell, Configuration};
use crate::solver::{Family, Orientation, Shape};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random shape whose rendered width is at most `width` (and close to it
/// when `width >= 8`).
pub fn random_family<R: Rng>(rng: &mut R, width: usize) -> Family {
    let orientation = *[Orientation::AsIs, Orientation::Mirrored]
        .choose(rng)
        .unwrap();
    let shape = if width < 8 {
        match width {
            0..=2 => Shape::Singleton,
            3 => Shape::TwoPegsWithHole,
            _ => Shape::Stage1 {
                tail: (width - 4) / 2,
            },
        }
    } else {
        // Split the budget of two-cell units between the shape parameters.
        let units = (width - 8) / 2;
        let pick = rng.gen_range(0..5);
        let mut split = |parts: usize| -> Vec<usize> {
            let mut cuts: Vec<usize> = (0..parts - 1).map(|_| rng.gen_range(0..=units)).collect();
            cuts.sort_unstable();
            let mut out = Vec::with_capacity(parts);
            let mut prev = 0;
            for c in cuts {
                out.push(c - prev);
                prev = c;
            }
            out.push(units - prev);
            out
        };
        match pick {
            0 => Shape::Stage1 { tail: units + 2 },
            1 => {
                let p = split(2);
                Shape::Stage2 {
                    left: p[0],
                    right: p[1] + 1,
                }
            }
            2 => {
                let p = split(3);
                Shape::Stage3 {
                    left: p[0],
                    filled: p[1] + 1,
                    right: p[2],
                }
            }
            3 => {
                let p = split(2);
                Shape::Stage4 {
                    left: p[0],
                    filled: p[1] + 2,
                }
            }
            _ => {
                let p = split(3);
                Shape::Stage5 {
                    left: p[0],
                    filled: p[1],
                    right: p[2],
                }
            }
        }
    };
    Family { shape, orientation }
}

/// A solvable board of exactly `len` cells: a random shape of nearly that
/// width, built from one peg, at a random offset.
pub fn random_solvable<R: Rng>(rng: &mut R, len: usize) -> Configuration {
    assert!(len >= 1, "boards need at least one cell");
    let family = random_family(rng, len);
    let script = family.unhop_script();
    let body = script.build().expect("shape scripts replay");
    let offset = rng.gen_range(0..=len - body.len());
    let mut cells = vec![Cell::Hole; len];
    cells[offset..offset + body.len()].copy_from_slice(body.cells());
    Configuration::new(cells)
}

/// Concatenated solvable pieces of width up to `piece` with random gaps of
/// zero to two holes, cut to `len` cells.
pub fn random_multi<R: Rng>(rng: &mut R, len: usize, piece: usize) -> Configuration {
    let mut cells = Vec::with_capacity(len + piece + 2);
    while cells.len() < len {
        let width = rng.gen_range(1..=piece.max(1));
        let body = random_solvable(rng, width);
        let (trimmed, _) = body.trim();
        cells.extend_from_slice(trimmed.cells());
        cells.extend(std::iter::repeat_n(Cell::Hole, rng.gen_range(0..=2)));
    }
    cells.truncate(len);
    Configuration::new(cells)
}

/// Uniformly random cells.
pub fn random_board<R: Rng>(rng: &mut R, len: usize) -> Configuration {
    Configuration::new(
        (0..len)
            .map(|_| if rng.gen() { Cell::Peg } else { Cell::Hole })
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::automaton::is_solvable;

    #[test]
    fn solvable_by_construction() {
        let mut r = rng(7);
        for len in 1..200 {
            let c = random_solvable(&mut r, len);
            assert_eq!(c.len(), len);
            assert!(is_solvable(&c), "{c}");
        }
    }

    #[test]
    fn near_requested_width() {
        let mut r = rng(1);
        for _ in 0..50 {
            let c = random_solvable(&mut r, 1000);
            let (t, _) = c.trim();
            assert!(t.len() >= 990, "{}", t.len());
        }
    }

    #[test]
    fn same_seed_same_board() {
        assert_eq!(
            random_solvable(&mut rng(42), 500),
            random_solvable(&mut rng(42), 500)
        );
        assert_eq!(
            random_multi(&mut rng(42), 500, 12),
            random_multi(&mut rng(42), 500, 12)
        );
        assert_ne!(
            random_solvable(&mut rng(1), 500),
            random_solvable(&mut rng(2), 500)
        );
    }
}
