mod common;

use common::*;
use platlink::cover::{disk_bound_test, PunctureClass, Side};

/// Whether `c = Σ x_i (e_{a_i} + e_{b_i})` has an integer solution with
/// every `|x_i| ≤ 2`, found by exhaustive search.
fn integer_combination(c: &[i64], pairs: &[(usize, usize)]) -> bool {
    let n = pairs.len();
    let choices = 5usize.pow(n as u32);
    (0..choices).any(|mut code| {
        let mut v = vec![0i64; c.len()];
        for &(a, b) in pairs {
            let x = (code % 5) as i64 - 2;
            code /= 5;
            v[a - 1] += x;
            v[b - 1] += x;
        }
        v == c
    })
}

#[test]
fn disk_test_matches_linear_system_oracle() {
    let mut r = rng(20);
    for _ in 0..20 {
        let w = random_word(&mut r, 6, 10);
        let images = puncture_images(6, &w.signed_letters());
        let lower = [(1, 2), (3, 4), (5, 6)];
        let upper: Vec<(usize, usize)> = (0..3).map(|i| (images[2 * i], images[2 * i + 1])).collect();
        for mask in 0u32..64 {
            let c: Vec<i64> = (0..6).map(|j| ((mask >> j) & 1) as i64).collect();
            let class = PunctureClass::new(c.clone());
            if mask.count_ones() % 2 == 1 {
                assert!(disk_bound_test(&class, Side::Lower, &w).is_err());
                continue;
            }
            assert_eq!(disk_bound_test(&class, Side::Lower, &w).unwrap(), integer_combination(&c, &lower), "{w} {c:?}");
            assert_eq!(disk_bound_test(&class, Side::Upper, &w).unwrap(), integer_combination(&c, &upper), "{w} {c:?}");
        }
    }
}
