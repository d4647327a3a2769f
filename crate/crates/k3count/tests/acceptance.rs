//! Acceptance suite: every exit criterion runs here at its stated order
//! and runtime bound, with zero tolerance on coefficients. Each test
//! prints one PASS line (visible with `cargo test -- --nocapture`).

use std::time::{Duration, Instant};

use k3count::k3::{h1_from_ode, K3System};
use k3count::qseries::{eta24_inverse, f_combo, g2};
use k3count::reducer::{
    eval_trr_rhs, odd_deg2_gram, pf_trr2_check, prop22_gw0, prop22_gw1pt, trr_summands, CohBasis,
    SfChoice, DEG2_RANK,
};
use k3count::series::{frac, mul, rat, PowerSeries, Rat};
use k3count::verify::{
    c10_gyz2, c11_reducer, c12_spot, c1_g2_def, c2_eta_product, c3_pri_g0, c4_f_identity,
    c5_bas_res, c6_ode2_m, c7_ode2_p, c8_com_com, c9_theorem, CheckStatus, DerivativeForm,
};

fn assert_pass(r: &k3count::verify::CheckReport) {
    assert_eq!(
        r.status,
        CheckStatus::Pass,
        "{} failed at exponent {:?}: {}",
        r.id,
        r.first_failing_exponent,
        r.detail
    );
}

fn corrupt(series: &PowerSeries, n: usize, delta: i64) -> PowerSeries {
    let mut coeffs = series.coeffs().to_vec();
    coeffs[n] += rat(delta);
    PowerSeries::from_coeffs(coeffs)
}

// ------------------------------------------------------------ criteria --

#[test]
fn c3_log_derivative_identity_order_256_under_5s() {
    let start = Instant::now();
    let n0 = eta24_inverse(256);
    let report = c3_pri_g0(&n0, &g2(256));
    let elapsed = start.elapsed();
    assert_pass(&report);
    assert_eq!(report.order_certified, 256);
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("PASS C3: theta(N0) = (24 G2 + 1) N0 exact to order 256 in {elapsed:?}");
}

#[test]
fn c4_f_identity_order_256_under_5s() {
    let start = Instant::now();
    let report = c4_f_identity(&f_combo(256), &g2(256));
    let elapsed = start.elapsed();
    assert_pass(&report);
    assert_eq!(report.order_certified, 256);
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("PASS C4: F(t) - 4 t^2 G2'(t^2) = 0 exact to order 256 in {elapsed:?}");
}

#[test]
fn c5_c8_basic_result_and_chain_order_256() {
    let sys = K3System::build(256);
    let r5 = c5_bas_res(&sys.m0.series, &sys.p0.series, DerivativeForm::Theta);
    assert_pass(&r5);
    assert_eq!(r5.order_certified, 256);
    let r8 = c8_com_com(&sys);
    assert_pass(&r8);
    assert_eq!(r8.order_certified, 256);
    // independently wired right-hand side agrees with n1 to the same order
    assert!(sys.gyz1.series.equal_to_order(&sys.n1.series, 256));
    println!("PASS C5/C8: theta(M0-P0) identity and the chain into 2 N1(t^2), exact to order 256");
}

#[test]
fn c6_c7_c9_recursion_routes_order_128_under_30s() {
    let start = Instant::now();
    let sys = K3System::build(128);
    let r6 = c6_ode2_m(&sys.m0.series, &sys.m1_theorem.series);
    let r7 = c7_ode2_p(&sys.p0.series, &sys.p1.series);
    let r9 = c9_theorem(&sys);
    let elapsed = start.elapsed();
    assert_pass(&r6);
    assert_pass(&r7);
    assert_pass(&r9);
    assert_eq!(r6.order_certified, 128);
    assert_eq!(r7.order_certified, 128);
    assert_eq!(r9.order_certified, 128);
    // the decomposition: h1(M0) = P1 + 2 N1(t^2) + (h1(P0) - P1)
    let lhs = h1_from_ode(&sys.m0.series);
    let correction = &h1_from_ode(&sys.p0.series) - &sys.p1.series;
    let rhs = &(&sys.p1.series + &sys.n1.series.compose_power(2).scale(&rat(2))) + &correction;
    assert!(lhs.equal_to_order(&rhs, 128));
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!("PASS C6/C7/C9: recursion routes match the structure-theorem routes to order 128 in {elapsed:?}");
}

#[test]
fn c10_index2_counts_match_index1_for_e_up_to_32() {
    let sys = K3System::build(128);
    for e in 1..=32 {
        let d = 4 * e - 3;
        assert_eq!(sys.n1_index2(e), sys.n1.series[d], "e = {e}");
    }
    // spot values
    assert_eq!(sys.n1_index2(1), rat(1));
    assert_eq!(sys.n1.series[1], rat(1));
    assert_eq!(sys.n1_index2(2), rat(49440));
    assert_eq!(sys.n1.series[5], rat(49440));
    let report = c10_gyz2(&sys);
    assert_pass(&report);
    println!("PASS C10: N1(d,2) = N1(d,1) at d = 4e-3 for all e <= 32; spot values (1,1) and (49440,49440)");
}

#[test]
fn c11_reducer_closed_form_under_10s() {
    let start = Instant::now();
    let basis = CohBasis::build();
    let summands = trr_summands();
    let report = c11_reducer(&basis, &summands, 256);
    let elapsed = start.elapsed();
    assert_pass(&report);
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");

    // the closed form, restated directly
    for choice in [SfChoice::TwoSF, SfChoice::SMinus3F2F] {
        let value = eval_trr_rhs(&basis, choice);
        assert!(value.is_fully_reduced());
        assert_eq!(value.gw1pt, prop22_gw1pt());
        assert_eq!(value.gw0, prop22_gw0());
    }
    // genus-1 sub-sums
    let pf2 = pf_trr2_check(&summands, &basis, SfChoice::TwoSF);
    assert_eq!(pf2.sub_sum_via_euler, frac(-6, 5));
    assert_eq!(pf2.sub_sum_via_completeness, frac(8, 15));
    assert_eq!(pf2.total, frac(-2, 3));
    println!("PASS C11: recursion reduces to -(2/3) GW1(pt) + ((d-2)^2/9) GW0 with intermediates {{-1/80, 1/15, 1/576}}, -6/5 + 8/15 = -2/3, (4/576)(4d-8)^2; {elapsed:?}");
}

#[test]
fn c12_m0_spot_values() {
    let sys = K3System::build(8);
    let report = c12_spot(&sys.m0.series);
    assert_pass(&report);
    assert_eq!(sys.m0.series[0], frac(1, 8));
    assert_eq!(sys.m0.series[2], rat(27));
    println!("PASS C12: M0[0] = 1/8 and M0[2] = 27");
}

// ------------------------------------------------------ property suite --

#[test]
fn property_mul_fast_matches_mul_on_100_random_order_256_pairs() {
    use rand::{Rng, SeedableRng};
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x5eed);
    for case in 0..100 {
        let integers_only = case % 2 == 0;
        let mut make = |_: usize| {
            let numer = rng.gen_range(-1000i64..=1000);
            let denom = if integers_only {
                1
            } else {
                rng.gen_range(1i64..=60)
            };
            frac(numer, denom)
        };
        let f = PowerSeries::from_fn(256, &mut make);
        let g = PowerSeries::from_fn(256, &mut make);
        assert_eq!(f.mul_fast(&g), mul(&f, &g), "case {case}");
    }
    println!("PASS property: mul_fast = mul on 100 random order-256 pairs");
}

#[test]
fn property_reducer_is_basis_independent() {
    let standard = CohBasis::build();
    let mut s22 = [0i64; DEG2_RANK];
    s22[3] = -1;
    s22[4] = 1;
    let mut f22 = [0i64; DEG2_RANK];
    f22[0] = 1;
    f22[3] = 1;
    let alternative = CohBasis::build_with_deg2_gram(&odd_deg2_gram(), &s22, &f22);
    for choice in [SfChoice::TwoSF, SfChoice::SMinus3F2F] {
        let a = eval_trr_rhs(&standard, choice);
        let b = eval_trr_rhs(&alternative, choice);
        assert_eq!(a.gw1pt, b.gw1pt);
        assert_eq!(a.gw0, b.gw0);
        assert!(a.is_fully_reduced() && b.is_fully_reduced());
    }
    println!("PASS property: reduction identical under a second nondegenerate Gram matrix");
}

#[test]
fn property_euler_trace_is_24() {
    assert_eq!(CohBasis::build().euler_trace(), rat(24));
    println!("PASS property: sum over the basis of pairings with duals = 24");
}

// every check can fail: one fault injection per check

#[test]
fn fault_c1_corrupted_sigma_fails_at_exponent_2() {
    let mut coeffs: Vec<Rat> = g2(16).coeffs().to_vec();
    coeffs[2] = rat(2);
    let r = c1_g2_def(&PowerSeries::from_coeffs(coeffs));
    assert_eq!(r.status, CheckStatus::Fail);
    assert_eq!(r.first_failing_exponent, Some(2));
    println!("PASS fault-injection C1");
}

#[test]
fn fault_c2_corrupted_eta_coefficient() {
    let r = c2_eta_product(&corrupt(&eta24_inverse(16), 3, 1));
    assert_eq!(r.status, CheckStatus::Fail);
    assert_eq!(r.first_failing_exponent, Some(3));
    println!("PASS fault-injection C2");
}

#[test]
fn fault_c3_corrupted_n0() {
    let r = c3_pri_g0(&corrupt(&eta24_inverse(16), 5, 1), &g2(16));
    assert_eq!(r.status, CheckStatus::Fail);
    assert_eq!(r.first_failing_exponent, Some(5));
    println!("PASS fault-injection C3");
}

#[test]
fn fault_c4_corrupted_f_combo() {
    let r = c4_f_identity(&corrupt(&f_combo(16), 2, 1), &g2(16));
    assert_eq!(r.status, CheckStatus::Fail);
    assert_eq!(r.first_failing_exponent, Some(2));
    println!("PASS fault-injection C4");
}

#[test]
fn fault_c5_plain_derivative_fails_at_first_odd_exponent() {
    let sys = K3System::build(16);
    let r = c5_bas_res(&sys.m0.series, &sys.p0.series, DerivativeForm::Plain);
    assert_eq!(r.status, CheckStatus::Fail);
    assert_eq!(r.first_failing_exponent, Some(1));
    assert_eq!(r.order_certified, 15);
    println!("PASS fault-injection C5 (plain-derivative parity failure)");
}

#[test]
fn fault_c6_corrupted_m1() {
    let sys = K3System::build(16);
    let r = c6_ode2_m(&sys.m0.series, &corrupt(&sys.m1_theorem.series, 4, 1));
    assert_eq!(r.status, CheckStatus::Fail);
    assert_eq!(r.first_failing_exponent, Some(4));
    println!("PASS fault-injection C6");
}

#[test]
fn fault_c7_corrupted_p1() {
    let sys = K3System::build(16);
    let r = c7_ode2_p(&sys.p0.series, &corrupt(&sys.p1.series, 3, 1));
    assert_eq!(r.status, CheckStatus::Fail);
    assert_eq!(r.first_failing_exponent, Some(3));
    println!("PASS fault-injection C7");
}

#[test]
fn fault_c8_corrupted_n1_breaks_the_chain_end() {
    let mut sys = K3System::build(16);
    sys.n1.series = corrupt(&sys.n1.series, 2, 1);
    let r = c8_com_com(&sys);
    assert_eq!(r.status, CheckStatus::Fail);
    assert_eq!(r.first_failing_exponent, Some(4)); // 2 N1(t^2) moves at t^4
    println!("PASS fault-injection C8");
}

#[test]
fn fault_c9_corrupted_theorem_route() {
    let mut sys = K3System::build(16);
    sys.m1_theorem.series = corrupt(&sys.m1_theorem.series, 2, 1);
    let r = c9_theorem(&sys);
    assert_eq!(r.status, CheckStatus::Fail);
    assert_eq!(r.first_failing_exponent, Some(2));
    println!("PASS fault-injection C9");
}

#[test]
fn fault_c10_corrupted_n1_breaks_the_count_comparison() {
    let mut sys = K3System::build(16);
    sys.n1.series = corrupt(&sys.n1.series, 1, 1);
    let r = c10_gyz2(&sys);
    assert_eq!(r.status, CheckStatus::Fail);
    assert_eq!(r.first_failing_exponent, Some(1));
    println!("PASS fault-injection C10");
}

#[test]
fn fault_c11_corrupted_summand_coefficient() {
    let basis = CohBasis::build();
    let mut summands = trr_summands();
    let last = summands.len() - 1;
    summands[last].coeff = frac(1, 575); // 1/576 as printed
    let r = c11_reducer(&basis, &summands, 16);
    assert_eq!(r.status, CheckStatus::Fail);
    assert_eq!(r.first_failing_exponent, Some(0));
    println!("PASS fault-injection C11");
}

// ------------------------------------------------------------- bench ----

#[test]
fn bench_order_4096_self_product_matches_direct_sums() {
    let start = Instant::now();
    let eta = eta24_inverse(4096);
    let built = start.elapsed();
    let start = Instant::now();
    let product = eta.mul_fast(&eta);
    let multiplied = start.elapsed();
    for n in [0usize, 1000, 4096] {
        let direct: Rat = (0..=n).map(|k| &eta[k] * &eta[n - k]).sum();
        assert_eq!(product[n], direct, "spot coefficient {n}");
    }
    println!(
        "PASS bench: order-4096 self-product (construction {built:?}, product {multiplied:?}) \
         matches direct convolution at t^0, t^1000, t^4096"
    );
}
