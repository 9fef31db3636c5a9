use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use crate::error::Error;

use super::geometry::Geometry;
use super::CubeElem;

/// The twelve slice quarter-turns. Each is clockwise when the slab is viewed
/// from its own side of the cube: `U`, `MU` from above, `MD`, `D` from below,
/// and likewise for the other two axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Move {
    B,
    MB,
    MF,
    F,
    L,
    ML,
    MR,
    R,
    D,
    MD,
    MU,
    U,
}

impl Move {
    pub const ALL: [Move; 12] = [
        Move::B,
        Move::MB,
        Move::MF,
        Move::F,
        Move::L,
        Move::ML,
        Move::MR,
        Move::R,
        Move::D,
        Move::MD,
        Move::MU,
        Move::U,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Move::B => "B",
            Move::MB => "MB",
            Move::MF => "MF",
            Move::F => "F",
            Move::L => "L",
            Move::ML => "ML",
            Move::MR => "MR",
            Move::R => "R",
            Move::D => "D",
            Move::MD => "MD",
            Move::MU => "MU",
            Move::U => "U",
        }
    }

    /// `(axis, slab coordinate)`; x = 0 (L…R), y = 1 (D…U), z = 2 (B…F).
    pub fn slab(self) -> (usize, i32) {
        let index = Move::ALL.iter().position(|&m| m == self).unwrap();
        let axis = [2, 0, 1][index / 4];
        (axis, [-3, -1, 1, 3][index % 4])
    }

    /// Outer-face moves; the others turn one of the inner slices.
    pub fn is_outer(self) -> bool {
        self.slab().1.abs() == 3
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Move {
    type Err = Error;

    fn from_str(s: &str) -> Result<Move, Error> {
        Move::ALL
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::UnknownMove(s.to_string()))
    }
}

static GENERATORS: OnceLock<Vec<CubeElem>> = OnceLock::new();

/// All twelve generators, in [`Move::ALL`] order. Built once from the geometric model.
pub fn generators() -> &'static [CubeElem] {
    GENERATORS.get_or_init(|| {
        let geometry = Geometry::new();
        Move::ALL
            .iter()
            .map(|m| {
                let (axis, coord) = m.slab();
                geometry.slab_move(axis, coord)
            })
            .collect()
    })
}

pub fn generator(m: Move) -> &'static CubeElem {
    let index = Move::ALL.iter().position(|&x| x == m).unwrap();
    &generators()[index]
}

/// Right-multiplies `start` by the generators of `word`, first move first.
pub fn apply_word(word: &[Move], start: &CubeElem) -> CubeElem {
    word.iter().fold(start.clone(), |acc, &m| &acc * generator(m))
}

/// Whitespace-separated move names.
pub fn parse_word(s: &str) -> Result<Vec<Move>, Error> {
    s.split_whitespace().map(str::parse).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn names_round_trip() {
        for m in Move::ALL {
            assert_eq!(m.name().parse::<Move>().unwrap(), m);
        }
        assert!("X".parse::<Move>().is_err());
        assert_eq!(parse_word("U MR  B").unwrap(), vec![Move::U, Move::MR, Move::B]);
    }

    #[test]
    fn slabs_are_distinct() {
        let mut slabs: Vec<_> = Move::ALL.iter().map(|m| m.slab()).collect();
        slabs.sort();
        slabs.dedup();
        assert_eq!(slabs.len(), 12);
        assert_eq!(Move::U.slab(), (1, 3));
        assert_eq!(Move::MD.slab(), (1, -1));
        assert_eq!(Move::R.slab(), (0, 3));
        assert_eq!(Move::B.slab(), (2, -3));
    }

    #[test]
    fn generators_have_order_four() {
        for m in Move::ALL {
            let g = generator(m);
            assert!(!g.is_identity(), "{m}");
            assert!(!g.pow(2).is_identity(), "{m}");
            assert!(g.pow(4).is_identity(), "{m}");
        }
    }

    #[test]
    fn generators_are_licit() {
        for m in Move::ALL {
            let g = generator(m);
            assert!(g.in_t_prime(), "{m}");
            assert!(g.in_l(), "{m}");
        }
    }

    #[test]
    fn outer_moves_cycle_structure() {
        for m in Move::ALL.into_iter().filter(|m| m.is_outer()) {
            let g = generator(m);
            assert_eq!(g.corner().perm().cycle_type(), vec![4], "{m}");
            assert_eq!(g.corner().perm().sign(), -1);
            // face centers: one 4-cycle; no inner-slice centers move
            assert_eq!(g.center().cycle_type(), vec![4], "{m}");
            assert_eq!(g.center().sign(), -1);
            assert_eq!(g.edge().perm().cycle_type(), vec![4, 4], "{m}");
        }
    }

    #[test]
    fn inner_moves_cycle_structure() {
        for m in Move::ALL.into_iter().filter(|m| !m.is_outer()) {
            let g = generator(m);
            assert!(g.corner().is_identity(), "{m}");
            assert_eq!(g.center().cycle_type(), vec![4, 4], "{m}");
            assert_eq!(g.center().sign(), 1);
            assert_eq!(g.edge().perm().cycle_type(), vec![4], "{m}");
        }
    }

    #[test]
    fn whole_cube_rotation_moves_every_center_block() {
        let g = apply_word(&[Move::U, Move::MU, Move::MD, Move::D], &CubeElem::identity());
        // D is clockwise from below, so the four slabs do not rotate together
        assert!(g.in_l());
        let aligned = apply_word(
            &[Move::U, Move::MU, Move::MD, Move::MD, Move::MD, Move::D, Move::D, Move::D],
            &CubeElem::identity(),
        );
        assert_eq!(aligned.corner().perm().cycle_type(), vec![4, 4]);
        assert_eq!(aligned.center().cycle_type(), vec![4, 4, 4, 4, 4, 4]);
    }

    #[test]
    fn word_laws() {
        let start = CubeElem::random(&mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(apply_word(&[], &start), start);
        for m in Move::ALL {
            assert_eq!(apply_word(&[m; 4], &start), start);
        }
    }

    #[test]
    fn random_words_are_licit_and_keep_the_invariant() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let start = CubeElem::random(&mut rng);
        for _ in 0..200 {
            let word: Vec<Move> = (0..rng.random_range(1..60)).map(|_| Move::ALL[rng.random_range(0..12)]).collect();
            assert!(apply_word(&word, &CubeElem::identity()).in_l());
            assert_eq!(apply_word(&word, &start).invariant_marked(), start.invariant_marked());
        }
    }
}
