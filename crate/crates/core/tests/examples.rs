//! Runs every example as a test.

#[allow(dead_code)]
#[path = "../examples/gosper_identity.rs"]
mod gosper_identity;
#[allow(dead_code)]
#[path = "../examples/hyp2f1_paths.rs"]
mod hyp2f1_paths;
#[allow(dead_code)]
#[path = "../examples/incomplete_beta.rs"]
mod incomplete_beta;
#[allow(dead_code)]
#[path = "../examples/operator_reduction.rs"]
mod operator_reduction;
#[allow(dead_code)]
#[path = "../examples/polynomial_roots.rs"]
mod polynomial_roots;
#[allow(dead_code)]
#[path = "../examples/q0_three_ways.rs"]
mod q0_three_ways;
#[allow(dead_code)]
#[path = "../examples/random_sweep.rs"]
mod random_sweep;
#[allow(dead_code)]
#[path = "../examples/series_identities.rs"]
mod series_identities;
#[allow(dead_code)]
#[path = "../examples/verify_roots.rs"]
mod verify_roots;

#[test]
fn example_gosper_identity() {
    gosper_identity::run_example().expect("gosper_identity");
}

#[test]
fn example_hyp2f1_paths() {
    hyp2f1_paths::run_example().expect("hyp2f1_paths");
}

#[test]
fn example_incomplete_beta() {
    incomplete_beta::run_example().expect("incomplete_beta");
}

#[test]
fn example_operator_reduction() {
    operator_reduction::run_example().expect("operator_reduction");
}

#[test]
fn example_polynomial_roots() {
    polynomial_roots::run_example().expect("polynomial_roots");
}

#[test]
fn example_q0_three_ways() {
    q0_three_ways::run_example().expect("q0_three_ways");
}

#[test]
fn example_random_sweep() {
    random_sweep::run_example().expect("random_sweep");
}

#[test]
fn example_series_identities() {
    series_identities::run_example().expect("series_identities");
}

#[test]
fn example_verify_roots() {
    verify_roots::run_example().expect("verify_roots");
}
