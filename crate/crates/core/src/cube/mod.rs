//! The group `T = (C₂≀S₂₄) × (C₃≀S₈) × S₂₄`, its subgroups `T′`, `L`, `I`,
//! and the solvability predicates and double-coset invariants built on them.
//!
//! States are stored as elements of `T` relative to the solved state, so the
//! identity element is the solved cube and applying a move is right
//! multiplication. Edge pieces `{2k, 2k+1}` are indistinguishable, as are
//! centers `{4k, …, 4k+3}`.
//!
//! The same predicates run unchanged on smaller shapes (fewer edge pairs,
//! corners or center blocks); the brute-force oracle relies on that.

pub mod geometry;
mod moves;
pub mod state_file;

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::wreath::WreathElem;

pub use moves::{apply_word, generator, generators, parse_word, Move};

/// Piece counts: `2·pairs` edges, `corners` corners, `4·blocks` centers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Shape {
    pub pairs: usize,
    pub corners: usize,
    pub blocks: usize,
}

impl Shape {
    pub const REVENGE: Shape = Shape { pairs: 12, corners: 8, blocks: 6 };

    pub fn edges(&self) -> usize {
        2 * self.pairs
    }

    pub fn centers(&self) -> usize {
        4 * self.blocks
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubeElem {
    edge: WreathElem,
    corner: WreathElem,
    center: Perm,
}

impl CubeElem {
    pub fn from_parts(edge: WreathElem, corner: WreathElem, center: Perm) -> Result<CubeElem> {
        if edge.modulus() != 2 {
            return Err(Error::ModulusMismatch { left: 2, right: edge.modulus() });
        }
        if corner.modulus() != 3 {
            return Err(Error::ModulusMismatch { left: 3, right: corner.modulus() });
        }
        if !edge.degree().is_multiple_of(2) {
            return Err(Error::InvalidShape(format!("{} edges do not form pairs", edge.degree())));
        }
        if !center.degree().is_multiple_of(4) {
            return Err(Error::InvalidShape(format!("{} centers do not form blocks of 4", center.degree())));
        }
        Ok(CubeElem { edge, corner, center })
    }

    /// The solved state of the full-size cube.
    pub fn identity() -> CubeElem {
        CubeElem::identity_of(Shape::REVENGE)
    }

    pub fn identity_of(shape: Shape) -> CubeElem {
        CubeElem {
            edge: WreathElem::identity(2, shape.edges()).unwrap(),
            corner: WreathElem::identity(3, shape.corners).unwrap(),
            center: Perm::identity(shape.centers()),
        }
    }

    pub fn edge(&self) -> &WreathElem {
        &self.edge
    }

    pub fn corner(&self) -> &WreathElem {
        &self.corner
    }

    pub fn center(&self) -> &Perm {
        &self.center
    }

    pub fn shape(&self) -> Shape {
        Shape {
            pairs: self.edge.degree() / 2,
            corners: self.corner.degree(),
            blocks: self.center.degree() / 4,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.edge.is_identity() && self.corner.is_identity() && self.center.is_identity()
    }

    pub fn compose(&self, other: &CubeElem) -> Result<CubeElem> {
        Ok(CubeElem {
            edge: self.edge.compose(&other.edge)?,
            corner: self.corner.compose(&other.corner)?,
            center: self.center.compose(&other.center)?,
        })
    }

    pub fn inverse(&self) -> CubeElem {
        CubeElem {
            edge: self.edge.inverse(),
            corner: self.corner.inverse(),
            center: self.center.inverse(),
        }
    }

    pub fn pow(&self, e: usize) -> CubeElem {
        (0..e).fold(CubeElem::identity_of(self.shape()), |acc, _| &acc * self)
    }

    /// Mechanically admissible: every edge flip bit is zero.
    pub fn in_t_prime(&self) -> bool {
        self.edge.twists().iter().all(|&b| b == 0)
    }

    /// The characteristic morphism `(Σθ mod 3, ε(τ)·ε(φ))` on `T′`.
    pub fn chi(&self) -> Result<(u8, i8)> {
        if !self.in_t_prime() {
            return Err(Error::NotInTPrime);
        }
        Ok((self.corner.twist_sum(), self.corner.perm().sign() * self.center.sign()))
    }

    /// Membership in the licit group, as the kernel of [`CubeElem::chi`].
    pub fn in_l(&self) -> bool {
        matches!(self.chi(), Ok((0, 1)))
    }

    /// Membership in the group of indistinguishable-piece relabelings.
    pub fn in_i(&self) -> bool {
        let sigma = self.edge.perm();
        let rho = self.edge.twists();
        for k in 0..self.edge.degree() / 2 {
            let (a, b) = (2 * k, 2 * k + 1);
            let (sa, sb) = (sigma.apply(a), sigma.apply(b));
            let expected = if sa == a && sb == b {
                0
            } else if sa == b && sb == a {
                1
            } else {
                return false;
            };
            if rho[a] != expected || rho[b] != expected {
                return false;
            }
        }
        if !self.corner.is_identity() {
            return false;
        }
        self.center.images().iter().enumerate().all(|(i, &x)| i / 4 == x / 4)
    }

    /// Solvable in the marked model: the element lies in `I·L`.
    pub fn in_il(&self) -> bool {
        self.edge.twists().chunks(2).all(|p| p[0] == p[1]) && self.corner.twist_sum() == 0
    }

    /// Solvable among mechanically admissible states.
    pub fn solvable_mechanical(&self) -> Result<bool> {
        if !self.in_t_prime() {
            return Err(Error::NotInTPrime);
        }
        Ok(self.corner.twist_sum() == 0)
    }

    /// Complete invariant of the double coset `I·t·L`.
    pub fn invariant_marked(&self) -> InvariantClass {
        let pair_classes = self
            .edge
            .twists()
            .chunks(2)
            .map(|p| match (p[0], p[1]) {
                (0, 1) => 1,
                (1, 0) => 2,
                _ => 0,
            })
            .collect();
        InvariantClass { pair_classes, twist: self.corner.twist_sum() }
    }

    /// Complete invariant of `(I∩T′)·t·L` on `T′`: the corner twist sum.
    pub fn invariant_mechanical(&self) -> Result<u8> {
        if !self.in_t_prime() {
            return Err(Error::NotInTPrime);
        }
        Ok(self.corner.twist_sum())
    }

    /// Uniform element of `T`.
    pub fn random<R: Rng + ?Sized>(rng: &mut R) -> CubeElem {
        CubeElem::random_of(Shape::REVENGE, rng)
    }

    /// Uniform element of `T′`.
    pub fn random_t_prime<R: Rng + ?Sized>(rng: &mut R) -> CubeElem {
        CubeElem::random_t_prime_of(Shape::REVENGE, rng)
    }

    pub fn random_of<R: Rng + ?Sized>(shape: Shape, rng: &mut R) -> CubeElem {
        CubeElem {
            edge: WreathElem::random(2, shape.edges(), rng).unwrap(),
            corner: WreathElem::random(3, shape.corners, rng).unwrap(),
            center: Perm::random(shape.centers(), rng),
        }
    }

    pub fn random_t_prime_of<R: Rng + ?Sized>(shape: Shape, rng: &mut R) -> CubeElem {
        CubeElem {
            edge: WreathElem::from_perm(2, Perm::random(shape.edges(), rng)).unwrap(),
            corner: WreathElem::random(3, shape.corners, rng).unwrap(),
            center: Perm::random(shape.centers(), rng),
        }
    }

    /// Uniform element of `I`: each pair swapped (with both flips) or not, each
    /// center block permuted arbitrarily.
    pub fn random_i<R: Rng + ?Sized>(shape: Shape, rng: &mut R) -> CubeElem {
        let mut images: Vec<usize> = (0..shape.edges()).collect();
        let mut flips = vec![0u8; shape.edges()];
        for k in 0..shape.pairs {
            if rng.random_bool(0.5) {
                images.swap(2 * k, 2 * k + 1);
                flips[2 * k] = 1;
                flips[2 * k + 1] = 1;
            }
        }
        let mut centers = Vec::with_capacity(shape.centers());
        for b in 0..shape.blocks {
            centers.extend(Perm::random(4, rng).images().iter().map(|&x| 4 * b + x));
        }
        CubeElem {
            edge: WreathElem::new(2, flips, Perm::from_images_unchecked(images)).unwrap(),
            corner: WreathElem::identity(3, shape.corners).unwrap(),
            center: Perm::from_images_unchecked(centers),
        }
    }
}

impl Mul for &CubeElem {
    type Output = CubeElem;

    fn mul(self, rhs: &CubeElem) -> CubeElem {
        self.compose(rhs).expect("cube elements of different shapes")
    }
}

/// Generators of `I`: each pair swap with its double flip, and per center
/// block a 4-cycle and a transposition.
pub fn i_generators(shape: Shape) -> Vec<CubeElem> {
    let id = CubeElem::identity_of(shape);
    let mut gens = Vec::new();
    for k in 0..shape.pairs {
        let mut flips = vec![0u8; shape.edges()];
        flips[2 * k] = 1;
        flips[2 * k + 1] = 1;
        let swap = Perm::from_cycles(shape.edges(), &[&[2 * k, 2 * k + 1]]).unwrap();
        gens.push(CubeElem { edge: WreathElem::new(2, flips, swap).unwrap(), ..id.clone() });
    }
    for b in 0..shape.blocks {
        let base = 4 * b;
        let n = shape.centers();
        let cycle = Perm::from_cycles(n, &[&[base, base + 1, base + 2, base + 3]]).unwrap();
        let transposition = Perm::from_cycles(n, &[&[base, base + 1]]).unwrap();
        gens.push(CubeElem { center: cycle, ..id.clone() });
        gens.push(CubeElem { center: transposition, ..id.clone() });
    }
    gens
}

/// Double-coset label: per edge pair `0` for `{(0,0),(1,1)}`, `1` for `(0,1)`,
/// `2` for `(1,0)`; plus the corner twist sum.
///
/// Printed as the pair digits, a colon and the twist digit: `000000000000:0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct InvariantClass {
    pub pair_classes: Vec<u8>,
    pub twist: u8,
}

impl InvariantClass {
    pub fn new(pair_classes: Vec<u8>, twist: u8) -> Result<InvariantClass> {
        if pair_classes.iter().any(|&c| c > 2) || twist > 2 {
            let s = InvariantClass { pair_classes, twist }.to_string();
            return Err(Error::InvalidClass(s));
        }
        Ok(InvariantClass { pair_classes, twist })
    }

    /// The class of the solved state.
    pub fn solved(pairs: usize) -> InvariantClass {
        InvariantClass { pair_classes: vec![0; pairs], twist: 0 }
    }

    /// Enumerates all `3^(pairs+1)` classes in lexicographic order.
    pub fn all(pairs: usize) -> impl Iterator<Item = InvariantClass> {
        let total = 3u64.pow(pairs as u32 + 1);
        (0..total).map(move |mut code| {
            let twist = (code % 3) as u8;
            code /= 3;
            let mut pair_classes = vec![0u8; pairs];
            for slot in pair_classes.iter_mut().rev() {
                *slot = (code % 3) as u8;
                code /= 3;
            }
            InvariantClass { pair_classes, twist }
        })
    }

    /// Full-size representative with identity permutations.
    pub fn canonical_representative(&self) -> Result<CubeElem> {
        if self.pair_classes.len() != Shape::REVENGE.pairs {
            return Err(Error::InvalidClass(self.to_string()));
        }
        Ok(self.canonical_representative_in(Shape::REVENGE))
    }

    /// Representative in a shape with as many pairs as this class has labels.
    pub fn canonical_representative_in(&self, shape: Shape) -> CubeElem {
        assert_eq!(shape.pairs, self.pair_classes.len(), "pair count mismatch");
        let flips: Vec<u8> = self
            .pair_classes
            .iter()
            .flat_map(|&c| match c {
                0 => [0, 0],
                1 => [0, 1],
                _ => [1, 0],
            })
            .collect();
        let mut twists = vec![0u8; shape.corners];
        if let Some(t) = twists.first_mut() {
            *t = self.twist;
        }
        CubeElem {
            edge: WreathElem::from_twists(2, flips).unwrap(),
            corner: WreathElem::from_twists(3, twists).unwrap(),
            center: Perm::identity(shape.centers()),
        }
    }
}

impl fmt::Display for InvariantClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.pair_classes {
            write!(f, "{c}")?;
        }
        write!(f, ":{}", self.twist)
    }
}

impl FromStr for InvariantClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<InvariantClass> {
        let bad = || Error::InvalidClass(s.to_string());
        let (pairs, twist) = s.trim().split_once(':').ok_or_else(bad)?;
        let digit = |c: char| c.to_digit(10).filter(|&d| d < 3).map(|d| d as u8);
        let pair_classes = pairs.chars().map(digit).collect::<Option<Vec<u8>>>().ok_or_else(bad)?;
        let mut tw = twist.chars();
        let twist = match (tw.next().and_then(digit), tw.next()) {
            (Some(t), None) => t,
            _ => return Err(bad()),
        };
        Ok(InvariantClass { pair_classes, twist })
    }
}
