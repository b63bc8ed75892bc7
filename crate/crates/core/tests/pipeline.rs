use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use albertkit::json::{tensor_from_json, tensor_to_json, vpoint_to_json};
use albertkit::pvs::{delta, w_point};
use albertkit::smap::{isotope_tensor, jordan_tensor};
use albertkit::{isotope, sample, AlbertElem};

#[test]
fn isotope_at_translated_base_point() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let e = AlbertElem::identity();
    for _ in 0..2 {
        let g = sample::group_elem(&mut rng, 3);
        let x = g.act_v(&w_point());
        assert_eq!(delta(&x), g.chi());
        let t = isotope_tensor(&x).unwrap();
        let back = tensor_from_json(&tensor_to_json(&t, vpoint_to_json(&x))).unwrap();
        assert_eq!(back, t);
        // μ_g carries the unit of J to the unit of M_gx.
        assert_eq!(t.unit(), Some(g.mu().apply(&e)));
    }
}

#[test]
fn both_isotope_tensors_at_a_diagonal_point() {
    let a = AlbertElem::diag_i(2, -1, 1);
    let springer = isotope::springer_tensor(&a).unwrap();
    let tform = isotope::TFormIsotope::new(&a).unwrap().tensor().unwrap();
    assert_eq!(springer, tform);
    assert!(springer.is_commutative());
    assert_ne!(springer, jordan_tensor());
    assert!(springer.unit().is_some());
}
