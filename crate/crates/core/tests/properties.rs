use proptest::prelude::*;

use pdgenus::enumerate::{euler_polynomial, pdg_polynomial, tree_stats, EnumOptions, GenusMethod};
use pdgenus::poly::ratio;
use pdgenus::random::{random_planar, random_ribbon_with, trial_rng};
use pdgenus::stats::to_distribution;
use pdgenus::theorems::{
    audit, parallel_recurrence, subdivision_recurrence, with_parallels, TheoremId,
};
use pdgenus::{EdgeSubset, RibbonGraph};

fn pdg(g: &RibbonGraph) -> pdgenus::IntPolynomial {
    pdg_polynomial(g, GenusMethod::Formula, &EnumOptions::default()).unwrap()
}

fn planar() -> impl Strategy<Value = RibbonGraph> {
    (any::<u64>(), 1usize..6, 0usize..5)
        .prop_map(|(seed, v, extra)| random_planar(seed, v, v - 1 + extra).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn partial_duals_share_the_polynomial(g in planar(), bits in any::<u64>()) {
        let e = g.edge_count();
        let a = EdgeSubset::from_bits(bits & ((1u64 << e) - 1), e).unwrap();
        let d = g.partial_dual(a);
        prop_assert_eq!(pdg(&d), pdg(&g));
    }

    #[test]
    fn orientable_partial_duals_share_the_polynomial(seed in any::<u64>(), bits in any::<u64>()) {
        let g = random_ribbon_with(&mut trial_rng(seed, 0), 3, 6, 0.0).unwrap();
        let a = EdgeSubset::from_bits(bits & 63, 6).unwrap();
        let opts = EnumOptions::default();
        let d = g.partial_dual(a);
        prop_assert_eq!(pdg_polynomial(&d, GenusMethod::Construct, &opts).unwrap(), pdg(&g));
        prop_assert_eq!(euler_polynomial(&d, &opts).unwrap(), euler_polynomial(&g, &opts).unwrap());
    }

    #[test]
    fn polynomials_are_distributions(g in planar()) {
        let d = to_distribution(&pdg(&g), g.edge_count()).unwrap();
        let (mean, variance) = d.mean_variance();
        prop_assert!(mean >= ratio(0, 1) && variance >= ratio(0, 1));
        if let Ok(ks) = d.ks_to_normal() {
            prop_assert!((0.0..=1.0).contains(&ks));
        }
    }

    #[test]
    fn top_coefficient_is_degree_of_max_genus(g in planar()) {
        let stats = tree_stats(&g, &EnumOptions::default()).unwrap();
        let p = pdg(&g);
        prop_assert_eq!(p.degree(), Some(stats.gamma_max));
        prop_assert_eq!(p.coeff(stats.gamma_max), stats.top_coeff);
    }

    #[test]
    fn recurrences_on_random_edges(g in planar(), pick in any::<usize>(), n in 2usize..5) {
        let e = pick % g.edge_count().max(1);
        if g.edge_count() > 0 {
            prop_assert_eq!(subdivision_recurrence(&g, e).unwrap(), pdg(&g.subdivide_edge(e).unwrap()));
            if !g.is_bridge(e) {
                prop_assert_eq!(parallel_recurrence(&g, e, n).unwrap(), pdg(&with_parallels(&g, e, n).unwrap()));
            }
        }
    }
}

#[test]
fn audits_do_not_depend_on_the_thread_count() {
    let one = EnumOptions::with_threads(1)
        .install(|| audit(TheoremId::Parallel, 3, 20, 7))
        .unwrap();
    let four = EnumOptions::with_threads(4)
        .install(|| audit(TheoremId::Parallel, 3, 20, 7))
        .unwrap();
    assert_eq!(one, four);
    assert!(one.iter().all(|r| r.agree));
}
