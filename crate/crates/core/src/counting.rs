//! Exact group orders, double-coset counts and solvability probabilities,
//! plus the Monte-Carlo estimators that check them empirically.
//!
//! Every exact quantity is an integer or a reduced rational; nothing on the
//! exact path goes through floating point.

use std::fmt;

use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cube::{CubeElem, Shape};
use crate::error::{Error, Result};
use crate::oracle;

/// Which state space and which indistinguishability group to count in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    /// All marked assemblies, `T` modulo `I` on the left and `L` on the right.
    Marked,
    /// Mechanically admissible assemblies, `T′` modulo `I ∩ T′` and `L`.
    Mechanical,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Marked => "marked",
            Mode::Mechanical => "mechanical",
        })
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n as u64).map(BigUint::from).product()
}

fn pow(base: u32, exp: usize) -> BigUint {
    BigUint::from(base).pow(exp as u32)
}

/// Closed-form orders of the groups involved, for any shape with at least
/// one corner and one center block.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupOrders {
    pub t: BigUint,
    pub t_prime: BigUint,
    pub l: BigUint,
    pub i: BigUint,
    pub i_cap_l: BigUint,
    pub i_cap_t_prime: BigUint,
}

impl GroupOrders {
    pub fn of(shape: Shape) -> Result<GroupOrders> {
        if shape.corners == 0 || shape.blocks == 0 {
            return Err(Error::InvalidShape("need at least one corner and one center block".into()));
        }
        let t_prime = factorial(shape.edges())
            * pow(3, shape.corners)
            * factorial(shape.corners)
            * factorial(shape.centers());
        let t = pow(2, shape.edges()) * &t_prime;
        // χ is onto C₃ × {±1}
        let l = &t_prime / 6u32;
        let s4_blocks = pow(24, shape.blocks);
        Ok(GroupOrders {
            t,
            t_prime,
            l,
            i: pow(2, shape.pairs) * &s4_blocks,
            i_cap_l: &s4_blocks / 2u32,
            i_cap_t_prime: s4_blocks,
        })
    }

    pub fn revenge() -> GroupOrders {
        GroupOrders::of(Shape::REVENGE).expect("full-size shape")
    }
}

pub fn order_t() -> BigUint {
    GroupOrders::revenge().t
}

pub fn order_t_prime() -> BigUint {
    GroupOrders::revenge().t_prime
}

pub fn order_l() -> BigUint {
    GroupOrders::revenge().l
}

pub fn order_i() -> BigUint {
    GroupOrders::revenge().i
}

pub fn order_i_cap_l() -> BigUint {
    GroupOrders::revenge().i_cap_l
}

pub fn order_i_cap_t_prime() -> BigUint {
    GroupOrders::revenge().i_cap_t_prime
}

/// `#(I \ T / T′)`: one factor per edge pair, the number of `I₂`-orbits on `C₂²`.
pub fn count_pair_classes() -> BigUint {
    pow(oracle::i2_orbits().len() as u32, Shape::REVENGE.pairs)
}

/// `#(I \ T / L)`, built from the orbit enumerations rather than a constant.
pub fn count_marked_classes() -> BigUint {
    count_pair_classes() * BigUint::from(oracle::chi_quotient_orbits(Mode::Marked).len())
}

/// `#((I∩T′) \ T′ / L)`.
pub fn count_mechanical_classes() -> BigUint {
    BigUint::from(oracle::chi_quotient_orbits(Mode::Mechanical).len())
}

fn ratio(num: BigUint, den: BigUint) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// `#IL / #T` with `#IL = #I·#L / #(I∩L)`.
pub fn prob_marked_exact() -> BigRational {
    let o = GroupOrders::revenge();
    ratio(&o.i * &o.l, &o.i_cap_l * &o.t)
}

/// `#(I∩T′)L / #T′`, using `I ∩ T′ ∩ L = I ∩ L`.
pub fn prob_mechanical_exact() -> BigRational {
    let o = GroupOrders::revenge();
    ratio(&o.i_cap_t_prime * &o.l, &o.i_cap_l * &o.t_prime)
}

pub fn prob_exact(mode: Mode) -> BigRational {
    match mode {
        Mode::Marked => prob_marked_exact(),
        Mode::Mechanical => prob_mechanical_exact(),
    }
}

pub fn count_classes(mode: Mode) -> BigUint {
    match mode {
        Mode::Marked => count_marked_classes(),
        Mode::Mechanical => count_mechanical_classes(),
    }
}

/// Samples per independently seeded stream. Fixed so the result does not
/// depend on how streams are scheduled.
pub const STREAM_LEN: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Execution {
    #[cfg_attr(not(feature = "parallel"), default)]
    Sequential,
    #[cfg(feature = "parallel")]
    #[default]
    Parallel,
}

#[derive(Clone, Debug, PartialEq)]
pub struct McEstimate {
    pub hits: u64,
    pub samples: u64,
    /// `hits / samples`, reduced.
    pub estimate: BigRational,
    /// `sqrt(p̂(1 − p̂)/n)`.
    pub stderr: f64,
}

impl McEstimate {
    fn new(hits: u64, samples: u64) -> McEstimate {
        let estimate = BigRational::new(hits.into(), samples.into());
        let p = hits as f64 / samples as f64;
        McEstimate { hits, samples, estimate, stderr: (p * (1.0 - p) / samples as f64).sqrt() }
    }

    pub fn as_f64(&self) -> f64 {
        self.hits as f64 / self.samples as f64
    }
}

/// Rng for stream `index` of a run seeded with `seed` (ChaCha8, one stream per index).
pub fn stream_rng(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

fn count_stream(mode: Mode, seed: u64, index: u64, len: u64) -> u64 {
    let mut rng = stream_rng(seed, index);
    let mut hits = 0;
    for _ in 0..len {
        let solvable = match mode {
            Mode::Marked => CubeElem::random(&mut rng).in_il(),
            Mode::Mechanical => CubeElem::random_t_prime(&mut rng)
                .solvable_mechanical()
                .expect("sample lies in T′"),
        };
        hits += u64::from(solvable);
    }
    hits
}

/// Fraction of `n` uniform samples that are solvable, with the default execution.
pub fn monte_carlo_prob(mode: Mode, n: u64, seed: u64) -> Result<McEstimate> {
    monte_carlo_prob_with(mode, n, seed, Execution::default())
}

pub fn monte_carlo_prob_with(mode: Mode, n: u64, seed: u64, exec: Execution) -> Result<McEstimate> {
    if n == 0 {
        return Err(Error::EmptySample);
    }
    let streams = n.div_ceil(STREAM_LEN);
    let len = move |i: u64| if i + 1 == streams { n - i * STREAM_LEN } else { STREAM_LEN };
    let hits = match exec {
        Execution::Sequential => (0..streams).map(|i| count_stream(mode, seed, i, len(i))).sum(),
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..streams).into_par_iter().map(|i| count_stream(mode, seed, i, len(i))).sum()
        }
    };
    Ok(McEstimate::new(hits, n))
}

/// `|estimate - p| < k·sqrt(p(1 − p)/n)` against an exact probability `p`.
pub fn within_sigmas(est: &McEstimate, exact: &BigRational, k: f64) -> bool {
    let p = exact.to_f64().expect("finite probability");
    let sigma = (p * (1.0 - p) / est.samples as f64).sqrt();
    (est.as_f64() - p).abs() < k * sigma
}

/// Reduced `numerator/denominator`.
pub fn format_rational(r: &BigRational) -> String {
    let r = r.reduced();
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `1 / count` as a rational.
pub fn reciprocal(count: &BigUint) -> BigRational {
    ratio(BigUint::one(), count.clone())
}


#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: u64, d: u64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn order_t_is_the_factorial_product() {
        let direct = BigUint::from(2u32).pow(24) * factorial(24).pow(2) * BigUint::from(3u32).pow(8) * factorial(8);
        assert_eq!(order_t(), direct);
        assert_eq!(order_t() / order_t_prime(), BigUint::from(1u64 << 24));
        assert_eq!(&order_t() % &order_l(), BigUint::from(0u32));
        assert_eq!(order_t() / order_l(), BigUint::from(6u64 << 24));
    }

    #[test]
    fn order_l_cases() {
        assert_eq!(order_t_prime() / order_l(), BigUint::from(6u32));
        assert_eq!(&order_t_prime() % &order_l(), BigUint::from(0u32));
        assert_eq!(&order_l() % &factorial(24), BigUint::from(0u32));
        let expected = factorial(24) * BigUint::from(3u32).pow(8) * factorial(8) * factorial(24) / 6u32;
        assert_eq!(order_l(), expected);
    }

    #[test]
    fn indistinguishable_group_orders() {
        let s4_6 = BigUint::from(24u32).pow(6);
        assert_eq!(order_i(), BigUint::from(1u32 << 12) * &s4_6);
        assert_eq!(order_i_cap_l(), &s4_6 / 2u32);
        assert_eq!(order_i_cap_t_prime(), s4_6);
    }

    #[test]
    fn class_counts() {
        assert_eq!(count_pair_classes(), BigUint::from(3u32).pow(12));
        assert_eq!(count_marked_classes(), BigUint::from(1_594_323u32));
        assert_eq!(count_marked_classes(), BigUint::from(3u32).pow(13));
        assert_eq!(count_mechanical_classes(), BigUint::from(3u32));
    }

    #[test]
    fn exact_probabilities() {
        assert_eq!(prob_marked_exact(), rat(1, 12288));
        assert_eq!(prob_mechanical_exact(), rat(1, 3));
        assert!(prob_marked_exact().numer().is_one());
        assert_eq!(format_rational(&prob_marked_exact()), "1/12288");
        assert_eq!(format_rational(&prob_mechanical_exact()), "1/3");
    }

    #[test]
    fn equal_class_sizes_only_in_mechanical_mode() {
        assert_ne!(reciprocal(&count_marked_classes()), prob_marked_exact());
        assert_eq!(reciprocal(&count_mechanical_classes()), prob_mechanical_exact());
    }

    #[test]
    fn rejects_empty_sample() {
        assert_eq!(monte_carlo_prob(Mode::Marked, 0, 1), Err(Error::EmptySample));
    }

    #[test]
    fn monte_carlo_is_deterministic_and_schedule_free() {
        let n = 3 * STREAM_LEN + 17;
        let a = monte_carlo_prob_with(Mode::Mechanical, n, 99, Execution::Sequential).unwrap();
        let b = monte_carlo_prob_with(Mode::Mechanical, n, 99, Execution::Sequential).unwrap();
        assert_eq!(a, b);
        #[cfg(feature = "parallel")]
        {
            let c = monte_carlo_prob_with(Mode::Mechanical, n, 99, Execution::Parallel).unwrap();
            assert_eq!(a, c);
        }
        assert_eq!(a.samples, n);
        assert!(within_sigmas(&a, &prob_mechanical_exact(), 5.0));
    }

    #[test]
    fn shape_orders_need_corners_and_blocks() {
        assert!(GroupOrders::of(Shape { pairs: 1, corners: 0, blocks: 1 }).is_err());
        assert!(GroupOrders::of(Shape { pairs: 1, corners: 1, blocks: 0 }).is_err());
    }
}
