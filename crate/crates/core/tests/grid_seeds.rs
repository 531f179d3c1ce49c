//! The grid must pass for any seed, not just the default: the seed moves
//! both the Erdos-Renyi corpus member and every pointwise sample point.

use subjoin::verify::{run_suite, Corpus, Tolerances};

#[test]
fn grid_passes_for_other_seeds() {
    for seed in [7u64, 123, 0xdead_beef] {
        let corpus = Corpus::default_corpus(seed);
        let report = run_suite(&corpus, seed, &Tolerances::default());
        let failing: Vec<String> = report
            .cases
            .iter()
            .filter(|c| !c.passed())
            .map(|c| format!("{} {} {} {}", c.kind, c.g1, c.g2, c.matrix))
            .collect();
        assert!(failing.is_empty(), "seed {seed} failures: {failing:#?}");
    }
}
