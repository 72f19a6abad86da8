use kpeterson::algebra::{Partition, Permutation, PolyZQ, SymFunc};
use kpeterson::grothendieck::dual_groth;
use kpeterson::schubert::{grassmannian_perm, groth_poly, k_conjugate, lambda_map, KBoundedPartition};
use proptest::prelude::*;

fn partition_in(rows: usize, cols: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=cols, rows).prop_map(|v| Partition::from_unsorted(v))
}

proptest! {
    #[test]
    fn complement_is_an_involution(lam in partition_in(3, 3)) {
        let vee = lam.complement(3, 6).unwrap();
        prop_assert_eq!(vee.complement(3, 6).unwrap(), lam.clone());
        prop_assert_eq!(lam.weight() + vee.weight(), 9);
    }

    #[test]
    fn grassmannian_perm_has_one_descent(lam in partition_in(2, 3)) {
        let w = grassmannian_perm(&lam, 2, 5).unwrap();
        prop_assert_eq!(w.length(), lam.weight());
        if !lam.is_empty() {
            prop_assert_eq!(w.descents(), vec![2]);
        }
    }

    #[test]
    fn partition_text_round_trip(lam in partition_in(5, 6)) {
        let back: Partition = lam.to_string().parse().unwrap();
        prop_assert_eq!(back, lam);
    }
}

#[test]
fn lambda_map_images_are_irreducible_and_conjugation_involutes() {
    for n in 3..=6 {
        for w in Permutation::all(n) {
            let lam = lambda_map(&w);
            assert!(lam.is_irreducible(), "{w}");
            assert_eq!(k_conjugate(&k_conjugate(&lam)), lam, "{w}");
        }
    }
}

#[test]
fn json_round_trips() {
    let w: Permutation = "2413".parse().unwrap();
    let p = groth_poly(&w);
    let back: PolyZQ = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
    assert_eq!(back, p);
    let g = dual_groth(&"2,1".parse().unwrap());
    let back: SymFunc = serde_json::from_str(&serde_json::to_string(&g).unwrap()).unwrap();
    assert_eq!(back, g);
}

#[test]
fn k_bounded_validation() {
    assert!(KBoundedPartition::new("4,1".parse().unwrap(), 3).is_err());
    assert!(KBoundedPartition::new("3,1".parse().unwrap(), 3).is_ok());
}
