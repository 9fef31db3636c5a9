//! Deterministic Schreier–Sims over a faithful permutation representation.
//!
//! [`embed`] sends a cube element to a permutation of 96 points: edge stickers
//! on 0–47, corner stickers on 48–71, centers on 72–95. [`StrongGenSet`] then
//! gives the exact order of the generated group and membership by sifting.

use num_bigint::BigUint;

use crate::cube::{generators, CubeElem};
use crate::error::{Error, Result};
use crate::perm::Perm;

/// Injective homomorphism `T → S_96` (for the full-size shape).
pub fn embed(t: &CubeElem) -> Perm {
    t.edge()
        .to_sticker_perm()
        .concat(&t.corner().to_sticker_perm())
        .concat(t.center())
}

#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// Indices into `StrongGenSet::strong`; all fix the earlier base points.
    gens: Vec<usize>,
    /// `transversal[β]` maps the base point to `β`; paired with its inverse.
    transversal: Vec<Option<(Perm, Perm)>>,
    orbit: Vec<usize>,
}

impl Level {
    fn new(base_point: usize, degree: usize) -> Level {
        let mut level = Level { base_point, gens: Vec::new(), transversal: vec![None; degree], orbit: Vec::new() };
        level.reset_orbit(degree);
        level
    }

    fn reset_orbit(&mut self, degree: usize) {
        self.transversal = vec![None; degree];
        self.transversal[self.base_point] = Some((Perm::identity(degree), Perm::identity(degree)));
        self.orbit = vec![self.base_point];
    }

    fn extend_orbit(&mut self, strong: &[Perm]) {
        let mut i = 0;
        while i < self.orbit.len() {
            let beta = self.orbit[i];
            for &g in &self.gens {
                let s = &strong[g];
                let gamma = s.apply(beta);
                if self.transversal[gamma].is_none() {
                    let u = &self.transversal[beta].as_ref().unwrap().0;
                    let rep = s * u;
                    let inv = rep.inverse();
                    self.transversal[gamma] = Some((rep, inv));
                    self.orbit.push(gamma);
                }
            }
            i += 1;
        }
    }
}

/// Base, strong generators and transversals of a permutation group.
#[derive(Clone, Debug)]
pub struct StrongGenSet {
    degree: usize,
    strong: Vec<Perm>,
    levels: Vec<Level>,
}

/// `u_y⁻¹ · s · u_β`, the Schreier generator for orbit point `β` and generator `s`.
fn schreier_generator(s: &Perm, u_beta: &Perm, u_gamma_inv: &Perm) -> Perm {
    let images = u_beta.images().iter().map(|&x| u_gamma_inv.apply(s.apply(x))).collect();
    Perm::from_images_unchecked(images)
}

impl StrongGenSet {
    /// Builds a base and strong generating set for `⟨gens⟩`.
    ///
    /// Base points are taken in natural order: whenever a new level is needed
    /// the smallest point moved by the new generator is used.
    pub fn build(gens: &[Perm]) -> Result<StrongGenSet> {
        let degree = gens.first().ok_or(Error::NoGenerators)?.degree();
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::DegreeMismatch { left: degree, right: g.degree() });
        }
        let mut sgs = StrongGenSet { degree, strong: Vec::new(), levels: Vec::new() };
        for g in gens.iter().filter(|g| !g.is_identity()) {
            if sgs.strong.contains(g) {
                continue;
            }
            let depth = sgs.levels.iter().take_while(|l| g.apply(l.base_point) == l.base_point).count();
            sgs.add_strong(g.clone(), 0, depth);
        }
        for level in &mut sgs.levels {
            level.extend_orbit(&sgs.strong);
        }

        let mut i = sgs.levels.len();
        'levels: while i > 0 {
            let li = i - 1;
            let mut k = 0;
            while k < sgs.levels[li].orbit.len() {
                let beta = sgs.levels[li].orbit[k];
                let gen_count = sgs.levels[li].gens.len();
                for gi in 0..gen_count {
                    let level = &sgs.levels[li];
                    let s = &sgs.strong[level.gens[gi]];
                    let gamma = s.apply(beta);
                    let u_beta = &level.transversal[beta].as_ref().unwrap().0;
                    let u_gamma_inv = &level.transversal[gamma].as_ref().unwrap().1;
                    // skip when s·u_β already equals the stored representative
                    if u_beta.images().iter().all(|&x| u_gamma_inv.apply(s.apply(x)) == x) {
                        continue;
                    }
                    let h = schreier_generator(s, u_beta, u_gamma_inv);
                    let (residue, drop) = sgs.strip(h, li + 1);
                    if drop < sgs.levels.len() || !residue.is_identity() {
                        sgs.add_strong(residue, li + 1, drop);
                        for l in li + 1..=drop.min(sgs.levels.len() - 1) {
                            sgs.levels[l].extend_orbit(&sgs.strong);
                        }
                        i = drop.min(sgs.levels.len() - 1) + 1;
                        continue 'levels;
                    }
                }
                k += 1;
            }
            i -= 1;
        }
        Ok(sgs)
    }

    /// Registers `g` as a strong generator on levels `from..=to`, appending a
    /// level if `to` runs past the current base.
    fn add_strong(&mut self, g: Perm, from: usize, to: usize) {
        if to >= self.levels.len() {
            let point = (0..self.degree).find(|&x| g.apply(x) != x).expect("identity residue");
            self.levels.push(Level::new(point, self.degree));
        }
        let index = self.strong.len();
        self.strong.push(g);
        let last = to.min(self.levels.len() - 1);
        for level in &mut self.levels[from..=last] {
            level.gens.push(index);
        }
    }

    /// Sifts `g` from level `from`; returns the residue and the level where
    /// sifting stopped (`levels.len()` when it passed every level).
    fn strip(&self, mut g: Perm, from: usize) -> (Perm, usize) {
        for (j, level) in self.levels.iter().enumerate().skip(from) {
            let beta = g.apply(level.base_point);
            match &level.transversal[beta] {
                Some((_, inv)) => g = inv * &g,
                None => return (g, j),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn strong_generators(&self) -> &[Perm] {
        &self.strong
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Product of the basic orbit lengths.
    pub fn order(&self) -> BigUint {
        self.levels.iter().map(|l| BigUint::from(l.orbit.len())).product()
    }

    pub fn contains(&self, p: &Perm) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (residue, drop) = self.strip(p.clone(), 0);
        drop == self.levels.len() && residue.is_identity()
    }

    /// Checks the stabilizer-chain invariants: level generators fix earlier
    /// base points and every transversal element maps the base point where
    /// it claims to.
    pub fn validate(&self) -> std::result::Result<(), String> {
        for (i, level) in self.levels.iter().enumerate() {
            for &g in &level.gens {
                let s = &self.strong[g];
                if let Some(b) = self.levels[..i].iter().find(|l| s.apply(l.base_point) != l.base_point) {
                    return Err(format!("level {i} generator moves base point {}", b.base_point));
                }
            }
            for &beta in &level.orbit {
                let (u, inv) = level.transversal[beta].as_ref().ok_or("orbit point without representative")?;
                if u.apply(level.base_point) != beta || !(u * inv).is_identity() {
                    return Err(format!("bad representative for {beta} at level {i}"));
                }
            }
            let listed = level.transversal.iter().filter(|t| t.is_some()).count();
            if listed != level.orbit.len() {
                return Err(format!("level {i}: transversal and orbit disagree"));
            }
        }
        Ok(())
    }
}

/// Stabilizer chain of the group generated by the twelve slice moves.
pub fn licit_group() -> StrongGenSet {
    let gens: Vec<Perm> = generators().iter().map(embed).collect();
    StrongGenSet::build(&gens).expect("twelve generators")
}
