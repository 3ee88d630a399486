mod common;

use common::*;
use num_integer::Integer;
use num_traits::{One, Signed};
use platlink::cover::{h1_order, is_unknot_2bridge, pairing_matrix, symplectic_lift, two_bridge_entry};
use platlink::diagram::plat_diagram;
use platlink::plat::summarize;

fn knot_words_b4(max_len: usize) -> impl Iterator<Item = Vec<i64>> {
    words_up_to(4, max_len).into_iter().filter(|s| union_find_components(4, s).0 == 1)
}

#[test]
fn symplectic_on_random_words() {
    let mut r = rng(200);
    for i in 0..200 {
        let strands = [4, 6, 8][i % 3];
        let len = (i % 15) + 1;
        let w = random_word(&mut r, strands, len);
        let m = symplectic_lift(&w).unwrap();
        let j = pairing_matrix(strands - 2);
        assert_eq!(m.transpose().mul(&j).mul(&m), j, "{w}");
    }
}

#[test]
fn knot_determinants_are_odd() {
    let mut n = 0;
    for s in knot_words_b4(5) {
        let d = h1_order(&word(4, &s)).unwrap();
        assert!(d.is_odd(), "{s:?}: {d}");
        n += 1;
    }
    assert!(n > 1000);
}

#[test]
fn h1_order_matches_fox_colouring_and_goeritz() {
    for s in knot_words_b4(5) {
        let w = word(4, &s);
        let d = plat_diagram(&w).unwrap();
        let expected = if d.pd.is_empty() { num_bigint::BigInt::one() } else { fox_determinant(&d.pd) };
        let h = h1_order(&w).unwrap();
        assert_eq!(h, expected, "{s:?}");
        assert_eq!(d.determinant(), h, "{s:?}");
    }
}

#[test]
fn two_bridge_entry_is_the_determinant_up_to_sign() {
    for s in knot_words_b4(6) {
        let w = word(4, &s);
        assert_eq!(two_bridge_entry(&w).unwrap().abs(), h1_order(&w).unwrap(), "{s:?}");
        assert_eq!(is_unknot_2bridge(&w).unwrap(), h1_order(&w).unwrap().is_one());
    }
}

#[test]
fn links_have_even_determinant() {
    for s in words_up_to(4, 4) {
        let w = word(4, &s);
        if summarize(&w).components == 2 {
            assert!(h1_order(&w).unwrap().is_even(), "{s:?}");
        }
    }
}
