use domset_core::algorithms::AlgorithmConfig;
use domset_core::generators::FamilyParams;
use domset_harness::experiment::{AlgorithmSpec, BoundKind, ExperimentSpec, GraphSource, LowerBoundMode};
use domset_harness::report::{format_ratio, render, round_half_up, Emit, RenderOptions};
use domset_harness::{run_experiment, run_suite};
use proptest::prelude::*;

const ALL: [&str; 11] = [
    "greedy", "a1", "a2", "a1p", "a2p", "a3", "hybrid-a1", "hybrid-a2", "hybrid-a1p", "hybrid-a2p", "hybrid-a3",
];

fn spec(params: FamilyParams, alpha: f64) -> ExperimentSpec {
    let cfg = AlgorithmConfig {
        alpha,
        ..AlgorithmConfig::default()
    };
    ExperimentSpec::new(
        params.to_string(),
        GraphSource::Generated(params),
        ALL.iter().map(|n| AlgorithmSpec::new(n, cfg.clone())).collect(),
    )
}

fn arb_family() -> impl Strategy<Value = FamilyParams> {
    prop_oneof![
        (1u32..=6).prop_map(|d| FamilyParams::Hypercube { d }),
        (1u32..=7).prop_map(|k| FamilyParams::Queens { k }),
        (1usize..=4, 0usize..80, any::<u64>()).prop_map(|(k, extra, seed)| FamilyParams::KTree {
            n: k + 1 + extra,
            k,
            seed
        }),
        (2u32..=5).prop_map(|p| FamilyParams::TrapStars { p }),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn ratios_never_beat_the_relaxation(params in arb_family(), alpha in 0.0f64..=1.0) {
        let report = run_experiment(&spec(params, alpha)).unwrap();
        let row = &report.rows[0];
        prop_assert_eq!(row.bound.kind, BoundKind::Lp1);
        for o in &row.outcomes {
            prop_assert!(o.valid);
            prop_assert!(o.ratio >= 1.0 - 1e-6, "{} ratio {}", o.name, o.ratio);
            prop_assert_eq!(o.size, o.set.len());
        }
    }

    #[test]
    fn decomposition_bound_never_exceeds_lp1(params in arb_family(), f in 0.05f64..0.95) {
        let mut s = spec(params, 0.5);
        s.algorithms.truncate(1);
        let lp1 = run_experiment(&s).unwrap().rows[0].bound.value;
        s.bound = LowerBoundMode::Decomposition { prefix_fraction: f };
        let dec = run_experiment(&s).unwrap().rows[0].bound;
        prop_assert!(dec.value <= lp1 + 1e-6, "{} > {}", dec.value, lp1);
    }

    #[test]
    fn half_up_rounding(cents in 0u64..100_000, frac in 0.0f64..1.0) {
        let x = cents as f64 / 100.0 + frac / 100.0;
        let r = round_half_up(x, 2);
        let expected = if frac >= 0.5 { cents + 1 } else { cents };
        // Only fractions within float noise of one half may land either way.
        if (frac - 0.5).abs() > 1e-6 {
            prop_assert_eq!((r * 100.0).round() as u64, expected);
        }
        prop_assert_eq!(format_ratio(x).len(), format!("{:.2}", r).len());
    }
}

#[test]
fn suite_output_is_byte_identical() {
    let specs: Vec<_> = (1..=6)
        .map(|i| {
            spec(
                FamilyParams::KTree {
                    n: 40 * i,
                    k: 3,
                    seed: i as u64,
                },
                0.5,
            )
        })
        .collect();
    let one = run_suite(&specs, 1).unwrap();
    let many = run_suite(&specs, 4).unwrap();
    for emit in [Emit::Csv, Emit::Markdown] {
        let a = render(&one, emit, RenderOptions::default()).unwrap();
        let b = render(&many, emit, RenderOptions { sizes: false, timings: false }).unwrap();
        assert_eq!(a, b);
    }
}
