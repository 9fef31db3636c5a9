use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use revenge::cube::{apply_word, generators};
use revenge::sims::{embed, licit_group};
use revenge::{CubeElem, Move};

fn factorial(n: u32) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

#[test]
fn licit_group_has_the_kernel_order() {
    let sgs = licit_group();
    sgs.validate().unwrap();
    let expected = factorial(24) * BigUint::from(3u32).pow(8) * factorial(8) * factorial(24) / 6u32;
    assert_eq!(sgs.order(), expected);
    assert_eq!(sgs.degree(), 96);
}

#[test]
fn every_generator_and_word_sifts_through() {
    let sgs = licit_group();
    for g in generators() {
        assert!(sgs.contains(&embed(g)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(44);
    for _ in 0..200 {
        let word: Vec<Move> = (0..60).map(|_| Move::ALL[rng.random_range(0..12)]).collect();
        assert!(sgs.contains(&embed(&apply_word(&word, &CubeElem::identity()))));
    }
}

#[test]
fn sifting_matches_chi_kernel_on_random_t_prime() {
    let sgs = licit_group();
    let mut rng = ChaCha8Rng::seed_from_u64(45);
    let (mut inside, mut outside) = (0, 0);
    for _ in 0..1000 {
        let t = CubeElem::random_t_prime(&mut rng);
        let member = sgs.contains(&embed(&t));
        assert_eq!(member, t.in_l(), "{t:?}");
        if member {
            inside += 1;
        } else {
            outside += 1;
        }
    }
    assert!(inside > 50 && outside > 500, "{inside} / {outside}");
}

#[test]
fn elements_outside_t_prime_never_sift() {
    let sgs = licit_group();
    let mut rng = ChaCha8Rng::seed_from_u64(46);
    for _ in 0..200 {
        let t = CubeElem::random(&mut rng);
        if !t.in_t_prime() {
            assert!(!sgs.contains(&embed(&t)));
        }
    }
}
