//! Brute-force ground truth on small instances.
//!
//! Orbit tables are computed by explicit enumeration, and [`MiniModel`]
//! enumerates a scaled-down `T` (few edge pairs, corners and center blocks)
//! completely, so double-coset counts, `IL` membership and probabilities can
//! be checked against the closed forms used at full size.

use std::collections::{BTreeSet, VecDeque};
use std::sync::OnceLock;

use num_rational::BigRational;

use crate::counting::Mode;
use crate::cube::{i_generators, CubeElem, Shape};
use crate::error::{Error, Result};
use crate::perm::Perm;
use crate::wreath::WreathElem;

/// Largest miniature `T` the oracle will enumerate.
pub const ENUMERATION_CAP: u64 = 10_000_000;

/// The two elements of `I₂ ⊂ C₂ ≀ S₂`: identity and swap-with-double-flip.
pub fn i2_elements() -> Vec<WreathElem> {
    vec![
        WreathElem::identity(2, 2).unwrap(),
        WreathElem::new(2, vec![1, 1], Perm::from_images(vec![1, 0]).unwrap()).unwrap(),
    ]
}

fn c2_squared() -> Vec<[u8; 2]> {
    vec![[0, 0], [0, 1], [1, 0], [1, 1]]
}

/// Orbits of `I₂` on `C₂²`, each sorted, listed by smallest element.
pub fn i2_orbits() -> Vec<Vec<[u8; 2]>> {
    let group = i2_elements();
    let mut orbits: Vec<Vec<[u8; 2]>> = Vec::new();
    for c in c2_squared() {
        if orbits.iter().any(|o| o.contains(&c)) {
            continue;
        }
        let orbit: BTreeSet<[u8; 2]> = group
            .iter()
            .map(|g| {
                let v = g.act_on_vector(&c).unwrap();
                [v[0], v[1]]
            })
            .collect();
        orbits.push(orbit.into_iter().collect());
    }
    orbits
}

/// Orbit count of `I₂` on `C₂²` by Burnside: mean number of fixed points.
pub fn i2_burnside_count() -> usize {
    let group = i2_elements();
    let fixed: usize = group
        .iter()
        .map(|g| c2_squared().into_iter().filter(|c| g.act_on_vector(c).unwrap() == c.to_vec()).count())
        .sum();
    assert_eq!(fixed % group.len(), 0);
    fixed / group.len()
}

/// Orbits of `C₃ × {±1}` (the cosets `H/H′`) under left multiplication by the
/// corner/center part of the indistinguishable group, read off its generators.
pub fn chi_quotient_orbits(mode: Mode) -> Vec<Vec<(u8, i8)>> {
    let shifts: Vec<(u8, i8)> = i_generators(Shape::REVENGE)
        .iter()
        .filter(|g| mode == Mode::Marked || g.in_t_prime())
        .map(|g| (g.corner().twist_sum(), g.corner().perm().sign() * g.center().sign()))
        .collect();
    let points: Vec<(u8, i8)> = (0..3).flat_map(|t| [(t, 1), (t, -1)]).collect();
    let mut orbits: Vec<Vec<(u8, i8)>> = Vec::new();
    for &p in &points {
        if orbits.iter().any(|o| o.contains(&p)) {
            continue;
        }
        let mut orbit = vec![p];
        let mut i = 0;
        while i < orbit.len() {
            let (t, e) = orbit[i];
            for &(dt, de) in &shifts {
                let q = ((t + dt) % 3, e * de);
                if !orbit.contains(&q) {
                    orbit.push(q);
                }
            }
            i += 1;
        }
        orbit.sort();
        orbits.push(orbit);
    }
    orbits
}

fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

fn rank_perm(p: &Perm) -> u64 {
    let v = p.images();
    let n = v.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller = v[i + 1..].iter().filter(|&&x| x < v[i]).count() as u64;
        rank = rank * (n - i) as u64 + smaller;
    }
    rank
}

fn unrank_perm(n: usize, mut rank: u64) -> Perm {
    let mut digits = vec![0usize; n];
    for i in (0..n).rev() {
        let radix = (n - i) as u64;
        digits[i] = (rank % radix) as usize;
        rank /= radix;
    }
    let mut pool: Vec<usize> = (0..n).collect();
    let images = digits.into_iter().map(|d| pool.remove(d)).collect();
    Perm::from_images(images).unwrap()
}

/// Every permutation of degree `n`, in lexicographic order.
pub fn all_perms(n: usize) -> Vec<Perm> {
    (0..factorial(n)).map(|r| unrank_perm(n, r)).collect()
}

/// Fully enumerable analogue of `T` with its subgroups `I`, `T′`, `L`.
#[derive(Clone, Debug)]
pub struct MiniModel {
    shape: Shape,
    size: u64,
    i_elements: Vec<CubeElem>,
    i_inverses: Vec<CubeElem>,
    il_table: OnceLock<Vec<bool>>,
}

impl MiniModel {
    /// Default small model: 2 edge pairs, 2 corners, one center block.
    pub fn small() -> MiniModel {
        MiniModel::new(Shape { pairs: 2, corners: 2, blocks: 1 }).unwrap()
    }

    pub fn new(shape: Shape) -> Result<MiniModel> {
        MiniModel::with_cap(shape, ENUMERATION_CAP)
    }

    pub fn with_cap(shape: Shape, cap: u64) -> Result<MiniModel> {
        let size = (1u128 << shape.edges())
            * factorial(shape.edges()) as u128
            * 3u128.pow(shape.corners as u32)
            * factorial(shape.corners) as u128
            * factorial(shape.centers()) as u128;
        if size > cap as u128 {
            return Err(Error::ModelTooLarge { size, cap });
        }
        let mut model = MiniModel { shape, size: size as u64, i_elements: Vec::new(), i_inverses: Vec::new(), il_table: OnceLock::new() };
        model.i_elements = model.select(CubeElem::in_i);
        model.i_inverses = model.i_elements.iter().map(CubeElem::inverse).collect();
        Ok(model)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    /// `|mini-T|`.
    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn i_elements(&self) -> &[CubeElem] {
        &self.i_elements
    }

    /// Mixed-radix index of an element of this model.
    pub fn rank(&self, t: &CubeElem) -> u64 {
        let s = self.shape;
        let mut r = 0u64;
        for &b in t.edge().twists() {
            r = r * 2 + b as u64;
        }
        r = r * factorial(s.edges()) + rank_perm(t.edge().perm());
        for &x in t.corner().twists() {
            r = r * 3 + x as u64;
        }
        r = r * factorial(s.corners) + rank_perm(t.corner().perm());
        r * factorial(s.centers()) + rank_perm(t.center())
    }

    pub fn unrank(&self, mut r: u64) -> CubeElem {
        let s = self.shape;
        let center = unrank_perm(s.centers(), r % factorial(s.centers()));
        r /= factorial(s.centers());
        let corner_perm = unrank_perm(s.corners, r % factorial(s.corners));
        r /= factorial(s.corners);
        let mut corner_twists = vec![0u8; s.corners];
        for x in corner_twists.iter_mut().rev() {
            *x = (r % 3) as u8;
            r /= 3;
        }
        let edge_perm = unrank_perm(s.edges(), r % factorial(s.edges()));
        r /= factorial(s.edges());
        let mut flips = vec![0u8; s.edges()];
        for b in flips.iter_mut().rev() {
            *b = (r % 2) as u8;
            r /= 2;
        }
        CubeElem::from_parts(
            WreathElem::new(2, flips, edge_perm).unwrap(),
            WreathElem::new(3, corner_twists, corner_perm).unwrap(),
            center,
        )
        .unwrap()
    }

    pub fn elements(&self) -> impl Iterator<Item = CubeElem> + '_ {
        (0..self.size).map(|r| self.unrank(r))
    }

    /// Elements satisfying `keep`, in rank order.
    fn select<F>(&self, keep: F) -> Vec<CubeElem>
    where
        F: Fn(&CubeElem) -> bool + Sync,
    {
        #[cfg(feature = "parallel")]
        {
            use rayon::prelude::*;
            (0..self.size).into_par_iter().map(|r| self.unrank(r)).filter(|t| keep(t)).collect()
        }
        #[cfg(not(feature = "parallel"))]
        {
            self.elements().filter(|t| keep(t)).collect()
        }
    }

    /// Exhaustive `IL` test: some `i` in mini-`I` has `i⁻¹·t` in mini-`L`.
    pub fn in_il(&self, t: &CubeElem) -> bool {
        self.i_inverses.iter().any(|inv| (inv * t).in_l())
    }

    /// Same as [`MiniModel::in_il`] with `I` replaced by `I ∩ T′`.
    pub fn in_i_t_prime_l(&self, t: &CubeElem) -> bool {
        self.i_inverses.iter().filter(|inv| inv.in_t_prime()).any(|inv| (inv * t).in_l())
    }

    /// Exhaustive `IL` membership of every element, indexed by rank.
    fn il_table(&self) -> &[bool] {
        self.il_table.get_or_init(|| {
            #[cfg(feature = "parallel")]
            {
                use rayon::prelude::*;
                (0..self.size).into_par_iter().map(|r| self.in_il(&self.unrank(r))).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                self.elements().map(|t| self.in_il(&t)).collect()
            }
        })
    }

    /// Elements where the closed-form predicate and the exhaustive search disagree.
    pub fn il_disagreements(&self) -> Vec<CubeElem> {
        let table = self.il_table();
        self.select(|t| t.in_il() != table[self.rank(t) as usize])
    }

    /// Smallest generating set found greedily from the listed elements.
    fn greedy_generators(&self, elements: &[CubeElem]) -> Vec<CubeElem> {
        let mut gens: Vec<CubeElem> = Vec::new();
        let mut span: BTreeSet<u64> = BTreeSet::from([self.rank(&CubeElem::identity_of(self.shape))]);
        for x in elements {
            if span.contains(&self.rank(x)) {
                continue;
            }
            gens.push(x.clone());
            let mut queue: VecDeque<CubeElem> = span.iter().map(|&r| self.unrank(r)).collect();
            while let Some(y) = queue.pop_front() {
                for g in &gens {
                    let z = &y * g;
                    if span.insert(self.rank(&z)) {
                        queue.push_back(z);
                    }
                }
            }
        }
        gens
    }

    /// Number of double cosets `I \ T / L` (marked) or `(I∩T′) \ T′ / L`
    /// (mechanical), by breadth-first search over the whole model.
    pub fn double_coset_count(&self, mode: Mode) -> u64 {
        let left: Vec<CubeElem> = match mode {
            Mode::Marked => self.i_elements.clone(),
            Mode::Mechanical => self.i_elements.iter().filter(|i| i.in_t_prime()).cloned().collect(),
        };
        let left = self.greedy_generators(&left);
        let l_elements = self.select(CubeElem::in_l);
        let right = self.greedy_generators(&l_elements);

        let mut seen = vec![false; self.size as usize];
        let mut classes = 0;
        for start in 0..self.size {
            if seen[start as usize] {
                continue;
            }
            let t = self.unrank(start);
            if mode == Mode::Mechanical && !t.in_t_prime() {
                continue;
            }
            classes += 1;
            seen[start as usize] = true;
            let mut queue = VecDeque::from([t]);
            while let Some(x) = queue.pop_front() {
                let next = left.iter().map(|i| i * &x).chain(right.iter().map(|l| &x * l));
                for y in next {
                    let r = self.rank(&y) as usize;
                    if !std::mem::replace(&mut seen[r], true) {
                        queue.push_back(y);
                    }
                }
            }
        }
        classes
    }

    /// `|mini-IL| / |mini-T|` (marked) or `|(I∩T′)L| / |T′|` (mechanical),
    /// counted with the exhaustive membership tests.
    pub fn probability(&self, mode: Mode) -> BigRational {
        let (hits, total) = match mode {
            Mode::Marked => (self.il_table().iter().filter(|&&b| b).count(), self.size as usize),
            Mode::Mechanical => {
                let hits = self.select(|t| t.in_t_prime() && self.in_i_t_prime_l(t)).len();
                (hits, self.select(CubeElem::in_t_prime).len())
            }
        };
        BigRational::new(hits.into(), total.into())
    }
}
