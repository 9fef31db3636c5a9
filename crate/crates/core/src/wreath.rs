//! Elements `(ρ, σ)` of `C_k ≀ S_n` for `k ∈ {2, 3}`.
//!
//! The product is `(ρ, σ)(θ, τ) = (ρ + σ·θ, στ)` where `(σ·θ)_j = θ_{σ⁻¹(j)}`.
//! Twists are indexed by destination slot: `ρ_j` is the twist picked up by
//! whatever piece lands in slot `j`. Under the flat sticker numbering
//! `i·k + b` the element sends sticker `(i, b)` to `(σ(i), b + ρ_{σ(i)})`.

use std::ops::Mul;

use rand::Rng;

use crate::error::{Error, Result};
use crate::perm::Perm;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WreathElem {
    modulus: u8,
    twists: Vec<u8>,
    perm: Perm,
}

fn check_modulus(k: u8) -> Result<()> {
    if k == 2 || k == 3 {
        Ok(())
    } else {
        Err(Error::UnsupportedModulus(k))
    }
}

impl WreathElem {
    pub fn new(modulus: u8, twists: Vec<u8>, perm: Perm) -> Result<WreathElem> {
        check_modulus(modulus)?;
        if twists.len() != perm.degree() {
            return Err(Error::DegreeMismatch { left: twists.len(), right: perm.degree() });
        }
        if let Some((index, &value)) = twists.iter().enumerate().find(|(_, &t)| t >= modulus) {
            return Err(Error::TwistOutOfRange { index, value, modulus });
        }
        Ok(WreathElem { modulus, twists, perm })
    }

    pub fn identity(modulus: u8, n: usize) -> Result<WreathElem> {
        check_modulus(modulus)?;
        Ok(WreathElem { modulus, twists: vec![0; n], perm: Perm::identity(n) })
    }

    /// Pure twist with identity permutation.
    pub fn from_twists(modulus: u8, twists: Vec<u8>) -> Result<WreathElem> {
        let n = twists.len();
        WreathElem::new(modulus, twists, Perm::identity(n))
    }

    /// Pure permutation with zero twists.
    pub fn from_perm(modulus: u8, perm: Perm) -> Result<WreathElem> {
        let n = perm.degree();
        WreathElem::new(modulus, vec![0; n], perm)
    }

    #[inline]
    pub fn modulus(&self) -> u8 {
        self.modulus
    }

    #[inline]
    pub fn degree(&self) -> usize {
        self.perm.degree()
    }

    #[inline]
    pub fn twists(&self) -> &[u8] {
        &self.twists
    }

    #[inline]
    pub fn perm(&self) -> &Perm {
        &self.perm
    }

    pub fn is_identity(&self) -> bool {
        self.twists.iter().all(|&t| t == 0) && self.perm.is_identity()
    }

    fn check_compatible(&self, other: &WreathElem) -> Result<()> {
        if self.modulus != other.modulus {
            return Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus });
        }
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: other.degree() });
        }
        Ok(())
    }

    /// `σ·θ`: re-index a twist vector by the permutation.
    fn permute_vector(&self, v: &[u8]) -> Vec<u8> {
        let mut out = vec![0; v.len()];
        for (i, &x) in v.iter().enumerate() {
            out[self.perm.apply(i)] = x;
        }
        out
    }

    pub fn compose(&self, other: &WreathElem) -> Result<WreathElem> {
        self.check_compatible(other)?;
        let k = self.modulus;
        let moved = self.permute_vector(&other.twists);
        let twists = self.twists.iter().zip(&moved).map(|(&a, &b)| (a + b) % k).collect();
        Ok(WreathElem { modulus: k, twists, perm: &self.perm * &other.perm })
    }

    /// `(-(σ⁻¹·ρ), σ⁻¹)`.
    pub fn inverse(&self) -> WreathElem {
        let k = self.modulus;
        let inv = self.perm.inverse();
        let twists = (0..self.degree())
            .map(|i| (k - self.twists[self.perm.apply(i)]) % k)
            .collect();
        WreathElem { modulus: k, twists, perm: inv }
    }

    /// Left action on twist vectors: `(ρ, σ)·c = ρ + σ·c`.
    pub fn act_on_vector(&self, c: &[u8]) -> Result<Vec<u8>> {
        if c.len() != self.degree() {
            return Err(Error::DegreeMismatch { left: self.degree(), right: c.len() });
        }
        let k = self.modulus;
        let moved = self.permute_vector(c);
        Ok(self.twists.iter().zip(&moved).map(|(&a, &b)| (a + b % k) % k).collect())
    }

    pub fn twist_sum(&self) -> u8 {
        (self.twists.iter().map(|&t| t as u32).sum::<u32>() % self.modulus as u32) as u8
    }

    /// Faithful permutation representation on the `k·n` stickers.
    pub fn to_sticker_perm(&self) -> Perm {
        let k = self.modulus as usize;
        let mut images = vec![0; k * self.degree()];
        for i in 0..self.degree() {
            let j = self.perm.apply(i);
            let rho = self.twists[j] as usize;
            for b in 0..k {
                images[i * k + b] = j * k + (b + rho) % k;
            }
        }
        Perm::from_images_unchecked(images)
    }

    /// Uniform element of `C_k ≀ S_n`.
    pub fn random<R: Rng + ?Sized>(modulus: u8, n: usize, rng: &mut R) -> Result<WreathElem> {
        check_modulus(modulus)?;
        let twists = (0..n).map(|_| rng.random_range(0..modulus)).collect();
        Ok(WreathElem { modulus, twists, perm: Perm::random(n, rng) })
    }
}

impl Mul for &WreathElem {
    type Output = WreathElem;

    fn mul(self, rhs: &WreathElem) -> WreathElem {
        self.compose(rhs).expect("incompatible wreath elements")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn elem(k: u8, twists: &[u8], images: &[usize]) -> WreathElem {
        WreathElem::new(k, twists.to_vec(), Perm::from_images(images.to_vec()).unwrap()).unwrap()
    }

    /// The group law written out pointwise, independent of `compose`.
    fn law(a: &WreathElem, b: &WreathElem) -> (Vec<u8>, Vec<usize>) {
        let n = a.degree();
        let k = a.modulus();
        let sigma_inv = a.perm().inverse();
        let twists = (0..n)
            .map(|j| (a.twists()[j] + b.twists()[sigma_inv.apply(j)]) % k)
            .collect();
        let perm = (0..n).map(|i| a.perm().apply(b.perm().apply(i))).collect();
        (twists, perm)
    }

    #[test]
    fn identity_is_neutral() {
        let a = elem(3, &[1, 2, 0], &[2, 0, 1]);
        let e = WreathElem::identity(3, 3).unwrap();
        assert_eq!(&a * &e, a);
        assert_eq!(&e * &a, a);
    }

    #[test]
    fn swap_with_double_flip_squares_to_identity() {
        let a = elem(2, &[1, 1], &[1, 0]);
        let sq = &a * &a;
        assert_eq!(law(&a, &a), (vec![0, 0], vec![0, 1]));
        assert!(sq.is_identity());
    }

    #[test]
    fn inverse_cases() {
        let e = WreathElem::identity(2, 2).unwrap();
        assert_eq!(e.inverse(), e);
        let f = elem(2, &[1, 0], &[0, 1]);
        assert_eq!(f.inverse(), f);
    }

    #[test]
    fn action_orbit_table() {
        let g = elem(2, &[1, 1], &[1, 0]);
        assert_eq!(g.act_on_vector(&[0, 0]).unwrap(), vec![1, 1]);
        assert_eq!(g.act_on_vector(&[1, 1]).unwrap(), vec![0, 0]);
        assert_eq!(g.act_on_vector(&[0, 1]).unwrap(), vec![0, 1]);
        assert_eq!(g.act_on_vector(&[1, 0]).unwrap(), vec![1, 0]);
        let e = WreathElem::identity(2, 2).unwrap();
        assert_eq!(e.act_on_vector(&[1, 0]).unwrap(), vec![1, 0]);
        assert!(g.act_on_vector(&[0]).is_err());
    }

    #[test]
    fn twist_sum_cases() {
        assert_eq!(WreathElem::identity(3, 8).unwrap().twist_sum(), 0);
        let mut t = vec![0; 8];
        t[0] = 1;
        assert_eq!(WreathElem::from_twists(3, t).unwrap().twist_sum(), 1);
    }

    #[test]
    fn sticker_perm_cases() {
        assert!(WreathElem::identity(3, 4).unwrap().to_sticker_perm().is_identity());
        let f = elem(2, &[1, 0], &[0, 1]);
        assert_eq!(f.to_sticker_perm(), Perm::from_cycles(4, &[&[0, 1]]).unwrap());
    }

    #[test]
    fn constructor_errors() {
        assert_eq!(WreathElem::identity(4, 2).unwrap_err(), Error::UnsupportedModulus(4));
        assert!(matches!(
            WreathElem::from_twists(2, vec![0, 2]),
            Err(Error::TwistOutOfRange { index: 1, value: 2, modulus: 2 })
        ));
        let a = WreathElem::identity(2, 3).unwrap();
        let b = WreathElem::identity(3, 3).unwrap();
        assert!(matches!(a.compose(&b), Err(Error::ModulusMismatch { .. })));
        let c = WreathElem::identity(2, 4).unwrap();
        assert!(matches!(a.compose(&c), Err(Error::DegreeMismatch { .. })));
    }

    fn arb_elem(k: u8, n: usize) -> impl Strategy<Value = WreathElem> {
        (
            proptest::collection::vec(0..k, n),
            Just((0..n).collect::<Vec<_>>()).prop_shuffle(),
        )
            .prop_map(move |(t, p)| WreathElem::new(k, t, Perm::from_images(p).unwrap()).unwrap())
    }

    fn arb_k_elems(count: usize) -> impl Strategy<Value = Vec<WreathElem>> {
        (prop_oneof![Just(2u8), Just(3u8)], 1usize..10)
            .prop_flat_map(move |(k, n)| proptest::collection::vec(arb_elem(k, n), count))
    }

    proptest! {
        #[test]
        fn compose_matches_pointwise_law(v in arb_k_elems(2)) {
            let c = &v[0] * &v[1];
            let (twists, images) = law(&v[0], &v[1]);
            prop_assert_eq!(c.twists(), &twists[..]);
            prop_assert_eq!(c.perm().images(), &images[..]);
        }

        #[test]
        fn associativity(v in arb_k_elems(3)) {
            prop_assert_eq!(&(&v[0] * &v[1]) * &v[2], &v[0] * &(&v[1] * &v[2]));
        }

        #[test]
        fn inverse_cancels(v in arb_k_elems(1)) {
            prop_assert!((&v[0] * &v[0].inverse()).is_identity());
            prop_assert!((&v[0].inverse() * &v[0]).is_identity());
        }

        #[test]
        fn action_is_a_left_action(v in arb_k_elems(2), seed in any::<u64>()) {
            let k = v[0].modulus();
            let c: Vec<u8> = (0..v[0].degree()).map(|i| ((seed >> (i % 60)) as u8) % k).collect();
            let lhs = (&v[0] * &v[1]).act_on_vector(&c).unwrap();
            let rhs = v[0].act_on_vector(&v[1].act_on_vector(&c).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn twist_sum_is_a_homomorphism(v in arb_k_elems(2)) {
            let k = v[0].modulus();
            prop_assert_eq!((&v[0] * &v[1]).twist_sum(), (v[0].twist_sum() + v[1].twist_sum()) % k);
        }

        #[test]
        fn sticker_rep_is_an_injective_homomorphism(v in arb_k_elems(2)) {
            let (a, b) = (&v[0], &v[1]);
            prop_assert_eq!((a * b).to_sticker_perm(), &a.to_sticker_perm() * &b.to_sticker_perm());
            prop_assert_eq!(a == b, a.to_sticker_perm() == b.to_sticker_perm());
        }
    }
}
