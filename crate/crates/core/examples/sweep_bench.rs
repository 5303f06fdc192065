use std::time::Instant;

use idealforge_core::theorem::{build_corpus, sweep, CorpusSpec, TheoremId};

fn main() {
    let t0 = Instant::now();
    let (corpus, diags) = build_corpus(&CorpusSpec::default());
    println!(
        "corpus: {} rings, {} products, {} idealizations, {} amalgams, {} homs, {} modules ({} diags) in {:?}",
        corpus.rings.len(),
        corpus.products.len(),
        corpus.idealizations.len(),
        corpus.amalgams.len(),
        corpus.homs.len(),
        corpus.modules.len(),
        diags.len(),
        t0.elapsed()
    );
    let t1 = Instant::now();
    let out = sweep(&corpus, &TheoremId::ALL, 1);
    println!("sweep in {:?}", t1.elapsed());
    for s in &out.stats {
        println!(
            "{:10} pass={:6} vacuous={:6} fail={}",
            s.theorem.name(),
            s.pass,
            s.vacuous,
            s.fail
        );
    }
    for v in out.failures().take(5) {
        println!("FAIL {} on {}: {:?}", v.theorem.name(), v.instance, v.witness);
    }
}
