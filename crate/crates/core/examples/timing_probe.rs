use procoinv_core::combinat::{enumerate_compositions, Composition};
use procoinv_core::quotient::{invariant_hilbert, QuotientAlgebra};
use procoinv_core::qseries::a_alpha;

fn main() {
    let start = std::time::Instant::now();
    let mut qa = QuotientAlgebra::new(Composition::ones(5));
    for alpha in enumerate_compositions(5) {
        let t0 = std::time::Instant::now();
        let table = invariant_hilbert(&mut qa, &alpha).unwrap();
        assert_eq!(table, a_alpha(&alpha), "alpha={:?}", alpha);
        println!("alpha={:<12} ok in {:?}", alpha.display(), t0.elapsed());
    }
    println!("total {:?}", start.elapsed());
}
