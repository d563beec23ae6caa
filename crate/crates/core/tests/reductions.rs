mod common;

use ramsey_core::evaluator::{eval_ramsey, EvalConfig};
use ramsey_core::reductions::{embed_kclique_linear, embed_kclique_sublinear, pad_instance, probe_function, Probe};
use ramsey_core::solvers::clique_oracle;
use ramsey_core::structures::{generate, Graph};
use ramsey_core::threshold::Threshold;

fn t(src: &str) -> Threshold {
    Threshold::parse(src).unwrap()
}

#[test]
fn pad_is_identity_when_bound_already_holds() {
    let f = t("ceil(log2(n))");
    let g = generate::gnp(9, 0.5, &mut generate::rng(41));
    let out = pad_instance(&g, 4, &f).unwrap();
    assert_eq!(out.graph, g);
    assert_eq!(out.params.target(), 4);
}

#[test]
fn reductions_work_on_larger_inputs() {
    let cfg = EvalConfig::default();
    for seed in 0..5 {
        let (g, _) = generate::planted_clique(40, 0.2, 7, &mut generate::rng(seed));
        let out = embed_kclique_sublinear(&g, 7, &t("ceil(sqrt(n))")).unwrap();
        assert!(eval_ramsey(&out.graph, &t("ceil(sqrt(n))"), &cfg).unwrap().outcome());
        let out = embed_kclique_linear(&g, 7, &t("ceil(1/2 * n)")).unwrap();
        assert!(eval_ramsey(&out.graph, &t("ceil(1/2 * n)"), &cfg).unwrap().outcome());
    }
}

#[test]
fn embeddings_reject_wrong_cases() {
    let g = Graph::cycle(5);
    assert!(embed_kclique_linear(&g, 2, &t("ceil(log2(n))")).is_err());
    assert!(embed_kclique_linear(&g, 2, &t("n - 2*ceil(log2(n))")).is_err());
    assert!(embed_kclique_sublinear(&g, 2, &t("ceil(1/2 * n)")).is_err());
    assert!(embed_kclique_sublinear(&g, 0, &t("ceil(log2(n))")).is_err());
}

#[test]
fn probe_with_oracle_backed_membership() {
    for f in common::suite() {
        for n in 1..=15usize {
            let got = probe_function(
                |g: &Graph| -> Result<bool, ()> {
                    let k = f.eval(n as u64).unwrap();
                    Ok(k <= n as u128 && clique_oracle(g, k as usize).unwrap().outcome)
                },
                n,
            )
            .unwrap();
            let v = f.eval(n as u64).unwrap();
            let expected = if v > n as u128 { Probe::AboveN } else { Probe::Value(v as u64) };
            assert_eq!(got, expected, "{f} at n = {n}");
        }
    }
}
