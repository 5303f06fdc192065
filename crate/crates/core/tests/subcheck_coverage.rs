//! Sub-check coverage: every guarded converse and secondary clause in the
//! theorem catalog must fire substantively somewhere in a standard corpus,
//! so no clause is green merely for lack of instances.

use std::collections::BTreeSet;

use idealforge_core::theorem::{
    build_corpus, check_theorem, instances_for, sweep, CorpusSpec, TheoremId,
};

fn fired_subchecks(id: TheoremId, corpus: &idealforge_core::theorem::Corpus) -> BTreeSet<String> {
    let mut out = BTreeSet::new();
    for inst in instances_for(id, corpus) {
        let v = check_theorem(id, &inst).unwrap();
        assert!(v.holds, "{} failed on {}", id.name(), v.instance);
        for s in v.fired {
            out.insert(s.to_string());
        }
    }
    out
}

#[test]
fn every_subcheck_fires_somewhere() {
    let spec = CorpusSpec {
        zn_max: 16,
        product_order_max: 16,
        quotient_depth: 1,
        idealization_order_max: 32,
        duplication_zn_max: 6,
        ..CorpusSpec::default()
    };
    let (corpus, diags) = build_corpus(&spec);
    assert!(diags.is_empty(), "{diags:?}");

    let expectations: &[(TheoremId, &[&str])] = &[
        (TheoremId::TQuasi, &["five-way-equivalence"]),
        (TheoremId::PJr, &["radical-containment-characterization"]),
        (TheoremId::TSq, &["square-zero"]),
        (
            TheoremId::CNak,
            &["inside-nilradical", "im-full-forces-zero-module"],
        ),
        (TheoremId::TEq, &["five-scan-agreement"]),
        (TheoremId::PQuot, &["residual-stays-weakly-j"]),
        (TheoremId::PWp, &["weakly-prime-inside-radical"]),
        (TheoremId::CWp2, &["maximal-property-forces-weakly-prime"]),
        (TheoremId::PInt, &["intersection-stays-weakly-j"]),
        (TheoremId::PSum, &["sum-stays-weakly-j"]),
        (
            TheoremId::PCart,
            &["weakly-j-iff-j"], // the form implication is vacuous: no
                                 // nonzero weakly J-ideals exist in products
        ),
        (
            TheoremId::PLoc,
            &["extension-stays-weakly-j", "contraction-stays-weakly-j"],
        ),
        (
            TheoremId::PHom,
            &["mono-preimage-stays-weakly-j", "epi-image-stays-weakly-j"],
        ),
        (
            TheoremId::CQuo,
            &["push-to-quotient", "lift-j-ideal", "lift-weakly-j"],
        ),
        (TheoremId::PPres, &["weakly-j-collapses-to-j"]),
        (TheoremId::CPre, &["quotient-presimplifiable"]),
        (TheoremId::PQpres, &["quotient-quasi-presimplifiable"]),
        (TheoremId::LQp, &["quasi-j-characterization"]),
        (TheoremId::TSpres, &["strong-zero-divisor-characterization"]),
        (TheoremId::LSup, &["weakly-j-is-superfluous"]),
        (TheoremId::PMc, &["complement-duality"]),
        (TheoremId::PMaxs, &["maximal-disjoint-is-weakly-j"]),
        (
            TheoremId::TIdl,
            &["pair-ideal-projects", "full-module-equivalence"],
        ),
        (
            TheoremId::LMax,
            &["maximal-spectrum-formula", "radical-transfer"],
        ),
        (TheoremId::PPp, &["all-ideals-j"]),
        (
            TheoremId::TAmlI,
            &[
                "j-forward",
                "j-converse-under-guard",
                "weakly-forward",
                "weakly-converse-under-guard",
            ],
        ),
        (TheoremId::CCj, &["j-ideals-over-0xJ-are-joins"]),
        (
            TheoremId::TAmlK,
            &[
                "j-forward",
                "j-converse-under-guard",
                "weakly-forward",
                "weakly-converse-under-guard",
            ],
        ),
        (
            TheoremId::C12,
            &[
                "j-forward",
                "j-converse-under-guard",
                "weakly-forward",
                "weakly-converse-under-guard",
            ],
        ),
        (TheoremId::P13, &["join-t-projects"]),
    ];

    for (id, required) in expectations {
        let fired = fired_subchecks(*id, &corpus);
        for name in *required {
            assert!(
                fired.contains(*name),
                "{}: sub-check {} never fired (fired: {:?})",
                id.name(),
                name,
                fired
            );
        }
    }
}

#[test]
fn sweep_exposes_fired_subchecks() {
    let spec = CorpusSpec {
        zn_max: 8,
        product_order_max: 6,
        quotient_depth: 0,
        idealization_order_max: 8,
        duplication_zn_max: 4,
        ..CorpusSpec::default()
    };
    let (corpus, _) = build_corpus(&spec);
    let outcome = sweep(&corpus, &[TheoremId::TAmlI], 1);
    assert!(outcome
        .verdicts
        .iter()
        .any(|v| v.fired.contains(&"j-converse-under-guard")));
}
