//! Permutations of `{0, …, n-1}` stored as image tables.
//!
//! Composition is right-to-left: `(p * q)(i) = p(q(i))`, so `q` is applied first.
//! Every group element in the crate is built from these.

use std::fmt;
use std::ops::Mul;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    pub fn identity(n: usize) -> Perm {
        Perm { images: (0..n).collect() }
    }

    /// Builds a permutation from its image table, rejecting anything that is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for (i, &x) in images.iter().enumerate() {
            if x >= n {
                return Err(Error::InvalidPermutation(format!(
                    "image {x} of point {i} is out of range for degree {n}"
                )));
            }
            if std::mem::replace(&mut seen[x], true) {
                return Err(Error::InvalidPermutation(format!("image {x} appears twice")));
            }
        }
        Ok(Perm { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Perm {
        debug_assert!(Perm::from_images(images.clone()).is_ok());
        Perm { images }
    }

    /// Product of disjoint or overlapping cycles, applied right to left.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Perm> {
        let mut result = Perm::identity(n);
        for cycle in cycles.iter().rev() {
            let mut images: Vec<usize> = (0..n).collect();
            for (k, &a) in cycle.iter().enumerate() {
                let b = cycle[(k + 1) % cycle.len()];
                if a >= n || b >= n {
                    return Err(Error::InvalidPermutation(format!("cycle point out of range for degree {n}")));
                }
                images[a] = b;
            }
            let c = Perm::from_images(images)?;
            result = c.compose(&result)?;
        }
        Ok(result)
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(Perm { images: other.images.iter().map(|&j| self.images[j]).collect() })
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Perm { images: inv }
    }

    /// Cycle decomposition including fixed points, each cycle starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Sorted lengths of the non-trivial cycles.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lens: Vec<usize> =
            self.cycles().iter().map(Vec::len).filter(|&l| l > 1).collect();
        lens.sort_unstable();
        lens
    }

    /// `(-1)^(n - number of cycles)`.
    pub fn sign(&self) -> i8 {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut parity = 0usize;
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut x = start;
            let mut len = 0;
            while !seen[x] {
                seen[x] = true;
                x = self.images[x];
                len += 1;
            }
            parity += len - 1;
        }
        if parity.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Uniform permutation via the Fisher–Yates shuffle from `rand`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Perm {
        let mut images: Vec<usize> = (0..n).collect();
        images.shuffle(rng);
        Perm { images }
    }

    /// Direct sum: `self` on the first points, `other` shifted past them.
    pub fn concat(&self, other: &Perm) -> Perm {
        let shift = self.degree();
        let images = self
            .images
            .iter()
            .copied()
            .chain(other.images.iter().map(|&x| x + shift))
            .collect();
        Perm { images }
    }
}

impl Mul for &Perm {
    type Output = Perm;

    /// Panics on degree mismatch; use [`Perm::compose`] for a checked product.
    fn mul(self, rhs: &Perm) -> Perm {
        self.compose(rhs).expect("perm degree mismatch")
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm{:?}", self.images)
    }
}

impl fmt::Display for Perm {
    /// Cycle notation, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(ToString::to_string).collect();
            write!(f, "({})", parts.join(" "))?;
        }
        Ok(())
    }
}
