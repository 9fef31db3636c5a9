use revenge::counting::{self, monte_carlo_prob_with, Execution, Mode, STREAM_LEN};

#[test]
fn result_depends_only_on_seed() {
    let n = 3 * STREAM_LEN + 17;
    let a = monte_carlo_prob_with(Mode::Mechanical, n, 11, Execution::Sequential).unwrap();
    let b = monte_carlo_prob_with(Mode::Mechanical, n, 11, Execution::default()).unwrap();
    assert_eq!(a, b);
    assert_eq!(a.samples, n);
    let c = monte_carlo_prob_with(Mode::Mechanical, n, 12, Execution::Sequential).unwrap();
    assert_ne!(a.hits, c.hits);
}

#[cfg(feature = "parallel")]
#[test]
fn result_ignores_thread_count() {
    let n = 5 * STREAM_LEN;
    let expected = monte_carlo_prob_with(Mode::Marked, n, 3, Execution::Sequential).unwrap();
    for threads in [1, 2, 3, 8] {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        let got = pool.install(|| monte_carlo_prob_with(Mode::Marked, n, 3, Execution::default()).unwrap());
        assert_eq!(got, expected, "{threads} threads");
    }
}

#[test]
fn estimates_land_near_the_exact_values() {
    let mech = counting::monte_carlo_prob(Mode::Mechanical, 200_000, 5).unwrap();
    assert!(counting::within_sigmas(&mech, &counting::prob_mechanical_exact(), 4.0), "{}", mech.as_f64());
    let marked = counting::monte_carlo_prob(Mode::Marked, 1_000_000, 5).unwrap();
    assert!(counting::within_sigmas(&marked, &counting::prob_marked_exact(), 4.0), "{}", marked.as_f64());
}
