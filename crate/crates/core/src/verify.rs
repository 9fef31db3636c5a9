//! Self-checks run by `revenge verify`, one [`Check`] per line of output.

use std::fmt;
use std::time::Instant;

use num_bigint::BigUint;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::counting::{self, Mode};
use crate::cube::geometry::Geometry;
use crate::cube::{apply_word, generators, CubeElem, Move, Shape};
use crate::oracle::{self, MiniModel};
use crate::sims::{self, StrongGenSet};

const SEED: u64 = 0x5eed;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Level {
    /// Everything except Schreier–Sims and the large miniature sweep.
    Quick,
    Full,
}

#[derive(Clone, Debug)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

fn check(name: &'static str, passed: bool, detail: impl Into<String>) -> Check {
    Check { name, passed, detail: detail.into() }
}

fn rat(n: u64, d: u64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

pub fn check_geometry() -> Check {
    match Geometry::new().validate() {
        Ok(()) => check("geometry", true, "56 pieces, pairs and blocks share colors, edge marks discernible"),
        Err(e) => check("geometry", false, e),
    }
}

pub fn check_generators() -> Check {
    let bad: Vec<String> = Move::ALL
        .iter()
        .zip(generators())
        .filter(|(_, g)| !(g.pow(4).is_identity() && !g.pow(2).is_identity() && g.in_t_prime() && g.in_l()))
        .map(|(m, _)| m.to_string())
        .collect();
    check("generators", bad.is_empty(), if bad.is_empty() {
        "12 moves of order 4 in T' and ker(chi)".to_string()
    } else {
        format!("failing moves: {}", bad.join(" "))
    })
}

pub fn check_chi_homomorphism(samples: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let ok = (0..samples).all(|_| {
        let a = CubeElem::random_t_prime(&mut rng);
        let b = CubeElem::random_t_prime(&mut rng);
        let ((ta, sa), (tb, sb)) = (a.chi().unwrap(), b.chi().unwrap());
        (&a * &b).chi().unwrap() == ((ta + tb) % 3, sa * sb)
    });
    check("chi homomorphism", ok, format!("{samples} random pairs in T'"))
}

pub fn check_invariant_constancy(samples: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 1);
    let ok = (0..samples).all(|_| {
        let t = CubeElem::random(&mut rng);
        let i = CubeElem::random_i(Shape::REVENGE, &mut rng);
        let word: Vec<Move> = (0..30).map(|_| Move::ALL[rng.random_range(0..12)]).collect();
        let l = apply_word(&word, &CubeElem::identity());
        l.in_l() && (&(&i * &t) * &l).invariant_marked() == t.invariant_marked()
    });
    check("invariant constancy", ok, format!("{samples} random i*t*l"))
}

pub fn check_i2_orbits() -> Check {
    let orbits = oracle::i2_orbits();
    let reps: Vec<[u8; 2]> = orbits.iter().map(|o| o[0]).collect();
    let ok = orbits.len() == 3 && reps == [[0, 0], [0, 1], [1, 0]] && oracle::i2_burnside_count() == 3;
    check("I2 orbits", ok, format!("{} orbits, representatives {:?}", orbits.len(), reps))
}

pub fn check_class_counts() -> Check {
    let pairs = counting::count_pair_classes();
    let marked = counting::count_marked_classes();
    let mech = counting::count_mechanical_classes();
    let ok = pairs == BigUint::from(3u32).pow(12) && marked == BigUint::from(3u32).pow(13) && mech == BigUint::from(3u32);
    check("class counts", ok, format!("I\\T/T' = {pairs}, I\\T/L = {marked}, mechanical = {mech}"))
}

pub fn check_probabilities() -> Check {
    let pm = counting::prob_marked_exact();
    let pc = counting::prob_mechanical_exact();
    let unequal = counting::reciprocal(&counting::count_marked_classes()) != pm;
    let equal = counting::reciprocal(&counting::count_mechanical_classes()) == pc;
    let ok = pm == rat(1, 12288) && pc == rat(1, 3) && unequal && equal;
    check(
        "exact probabilities",
        ok,
        format!("marked {}, mechanical {}", counting::format_rational(&pm), counting::format_rational(&pc)),
    )
}

pub fn check_mini_model(shape: Shape) -> Check {
    let model = match MiniModel::new(shape) {
        Ok(m) => m,
        Err(e) => return check("miniature model", false, e.to_string()),
    };
    let classes = model.double_coset_count(Mode::Marked);
    let mech = model.double_coset_count(Mode::Mechanical);
    let disagreements = model.il_disagreements().len();
    let prob = model.probability(Mode::Marked);
    let prob_mech = model.probability(Mode::Mechanical);
    let expected_classes = 3u64.pow(shape.pairs as u32 + 1);
    let ok = classes == expected_classes
        && mech == 3
        && disagreements == 0
        && prob == rat(1, 3 << shape.pairs)
        && prob_mech == rat(1, 3);
    check(
        "miniature model",
        ok,
        format!(
            "pairs={} corners={} blocks={}: {} elements, {classes} classes, {mech} mechanical, {disagreements} IL disagreements, p={} / {}",
            shape.pairs,
            shape.corners,
            shape.blocks,
            model.size(),
            counting::format_rational(&prob),
            counting::format_rational(&prob_mech),
        ),
    )
}

pub fn check_sims_order(group: &StrongGenSet, elapsed_ms: u128) -> Check {
    let order = group.order();
    let ok = order == counting::order_l() && group.validate().is_ok();
    check("schreier-sims order", ok, format!("|<moves>| = {order} (base length {}, {elapsed_ms} ms)", group.base().len()))
}

/// Sifting membership against `ker χ` on random `T′` elements and random words.
pub fn check_sifting(group: &StrongGenSet, samples: usize) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 2);
    let elems: Vec<CubeElem> = (0..samples)
        .map(|i| {
            if i % 10 == 9 {
                let word: Vec<Move> = (0..50).map(|_| Move::ALL[rng.random_range(0..12)]).collect();
                apply_word(&word, &CubeElem::identity())
            } else {
                CubeElem::random_t_prime(&mut rng)
            }
        })
        .collect();
    let results: Vec<(bool, bool)> = elems
        .iter()
        .map(|t| {
            let inside = group.contains(&sims::embed(t));
            (inside == t.in_l(), inside)
        })
        .collect();
    let mismatches = results.iter().filter(|r| !r.0).count();
    let members = results.iter().filter(|r| r.1).count();
    check(
        "sifting agrees with chi",
        mismatches == 0 && members > 0 && members < samples,
        format!("{samples} elements, {members} in <moves>, {mismatches} mismatches"),
    )
}

pub fn run(level: Level) -> Vec<Check> {
    let mut checks = vec![
        check_geometry(),
        check_generators(),
        check_chi_homomorphism(1000),
        check_invariant_constancy(200),
        check_i2_orbits(),
        check_class_counts(),
        check_probabilities(),
    ];
    match level {
        Level::Quick => checks.push(check_mini_model(Shape { pairs: 1, corners: 1, blocks: 1 })),
        Level::Full => {
            checks.push(check_mini_model(MiniModel::small().shape()));
            let start = Instant::now();
            let group = sims::licit_group();
            checks.push(check_sims_order(&group, start.elapsed().as_millis()));
            checks.push(check_sifting(&group, 1000));
        }
    }
    checks
}
