use std::sync::Arc;

use ppmat::bijection::{greene_shape, lis_tail, phi, phi_inverse, strict_tableau_to_word, word_to_strict_tableau};
use ppmat::poly::{Family, MultiPoly, Truncation, VarTable};
use ppmat::symfun::{determinant_bareiss, determinant_cofactor};
use ppmat::{NMatrix, Partition, PlanePartition, Word};
use proptest::prelude::*;

fn matrix() -> impl Strategy<Value = NMatrix> {
    (1usize..=4, 1usize..=4).prop_flat_map(|(n, m)| {
        proptest::collection::vec(0u32..=3, n * m).prop_map(move |data| NMatrix::from_flat(n, m, data).unwrap())
    })
}

fn word() -> impl Strategy<Value = Word> {
    (1u32..=4).prop_flat_map(|m| proptest::collection::vec(1..=m, 0..=8).prop_map(move |l| Word::new(m, l).unwrap()))
}

fn table() -> Arc<VarTable> {
    VarTable::new(vec![Family::indexed("x", 2), Family::scalar("q")]).unwrap()
}

fn poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec(((0u32..=2, 0u32..=2, 0u32..=3), -5i64..=5), 0..=5).prop_map(|terms| {
        let t = table();
        terms.into_iter().fold(MultiPoly::zero(&t), |acc, ((a, b, c), coef)| {
            let mono = t.monomial(&[(0, a), (1, b), (2, c)]);
            acc.checked_add(&MultiPoly::term(&t, mono, coef)).unwrap()
        })
    })
}

/// Longest weakly increasing subsequence over letters `> m − i`, by trying
/// every subset of positions.
fn lis_by_subsets(letters: &[u32], m: u32, i: u32) -> usize {
    let low = m - i + 1;
    (0u32..1 << letters.len())
        .filter_map(|mask| {
            let picked: Vec<u32> = (0..letters.len()).filter(|&p| mask >> p & 1 == 1).map(|p| letters[p]).collect();
            let ok = picked.iter().all(|&a| a >= low) && picked.windows(2).all(|w| w[0] <= w[1]);
            ok.then_some(picked.len())
        })
        .max()
        .unwrap_or(0)
}

proptest! {
    #[test]
    fn phi_is_a_bijection(d in matrix()) {
        let pp = phi_inverse(&d);
        prop_assert_eq!(phi(&pp, d.rows(), d.cols() as u32).unwrap(), d.clone());
        prop_assert_eq!(phi_inverse(&phi(&pp, d.rows(), d.cols() as u32).unwrap()), pp);
    }

    #[test]
    fn statistics_read_off_the_matrix(d in matrix()) {
        let pp = phi_inverse(&d);
        let (mut des, mut uh, mut corner) = (0u64, 0u64, 0u64);
        for i in 1..=d.rows() {
            for l in 1..=d.cols() {
                let v = d.get(i, l) as u64;
                des += v;
                uh += v * (i + l - 1) as u64;
                corner += v * l as u64;
            }
        }
        prop_assert_eq!(pp.des(), des);
        prop_assert_eq!(pp.up_hook_volume(), uh);
        prop_assert_eq!(pp.corner_volume(), corner);
        let cols = pp.column_counts(d.cols() as u32).unwrap();
        let col_sums: Vec<u32> = d.col_sums().into_iter().map(|s| s as u32).collect();
        prop_assert_eq!(cols, col_sums);
    }

    #[test]
    fn corner_volume_is_superadditive(a in matrix(), b in matrix()) {
        let (p, q) = (phi_inverse(&a), phi_inverse(&b));
        let sum = p.add(&q);
        prop_assert!(sum.corner_volume() >= p.corner_volume() + q.corner_volume());
        prop_assert_eq!(sum.volume(), p.volume() + q.volume());
    }

    #[test]
    fn scaling_identities(d in matrix(), k in 1u32..=4) {
        let pp = phi_inverse(&d);
        let scaled = pp.scale(k);
        let k = k as u64;
        prop_assert_eq!(scaled.corner_volume(), k * pp.corner_volume());
        prop_assert_eq!(scaled.up_hook_volume(), pp.up_hook_volume() + (k - 1) * pp.corner_volume());
    }

    #[test]
    fn words_and_strict_tableaux(w in word()) {
        let st = word_to_strict_tableau(&w);
        prop_assert_eq!(strict_tableau_to_word(&st, w.alphabet_size()).unwrap(), w.clone());
        prop_assert_eq!(st.shape(), greene_shape(&w));
    }

    #[test]
    fn lis_matches_subsets(w in word()) {
        let m = w.alphabet_size();
        for i in 1..=m {
            prop_assert_eq!(lis_tail(&w, i).unwrap(), lis_by_subsets(w.letters(), m, i));
        }
    }

    #[test]
    fn ring_laws(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!(&a * &MultiPoly::one(a.table()), a);
    }

    #[test]
    fn truncation_is_a_homomorphism(a in poly(), b in poly(), deg in 0u32..=6) {
        let t = Truncation::total(deg);
        let direct = (&a * &b).truncate(&t).unwrap();
        let via = (&a.truncate(&t).unwrap() * &b.truncate(&t).unwrap()).truncate(&t).unwrap();
        prop_assert_eq!(&direct, &via);
        prop_assert_eq!(a.mul_truncated(&b, &t).unwrap(), direct);
        let sum = (&a + &b).truncate(&t).unwrap();
        prop_assert_eq!(sum, &a.truncate(&t).unwrap() + &b.truncate(&t).unwrap());
    }

    #[test]
    fn json_round_trip(a in poly()) {
        let back = MultiPoly::from_json(&a.to_json(), a.table()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn bareiss_matches_cofactor(entries in proptest::collection::vec(poly(), 16), n in 1usize..=4) {
        let t = table();
        let m: Vec<Vec<MultiPoly>> = (0..n).map(|r| entries[r * 4..r * 4 + n].to_vec()).collect();
        prop_assert_eq!(determinant_bareiss(&t, &m).unwrap(), determinant_cofactor(&t, &m).unwrap());
    }

    #[test]
    fn conjugation_is_an_involution(parts in proptest::collection::vec(1u32..=6, 0..=6)) {
        let mut parts = parts;
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let p = Partition::new(parts).unwrap();
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap_or_default(), p);
    }
}

#[test]
fn plane_partition_json_is_canonical() {
    let pp: PlanePartition = serde_json::from_str("[[3,1,0],[1],[]]").unwrap();
    assert_eq!(serde_json::to_string(&pp).unwrap(), "[[3,1],[1]]");
}
