use num_bigint::BigInt;

const TWISTED_PLAT: &str = "s2^3 s4^3 s1^-3 s3^-3 s5^-3 s2^3 s4^3";

#[test]
fn wrappers_agree_with_the_library() {
    assert_eq!(platlink_py::permutation("s2^2 s1^-1 s3 s2^-3", 4).unwrap(), vec![3, 1, 4, 2]);
    assert_eq!(platlink_py::order("s2^2 s1^-1 s3 s2^-3", 4).unwrap(), 4);
    assert_eq!(platlink_py::components("", 6).unwrap(), (3, vec![1, 1, 1]));
    assert_eq!(platlink_py::knot_powers(TWISTED_PLAT, 6, 5).unwrap(), vec![1, 3, 5]);
    assert!((platlink_py::entropy(TWISTED_PLAT, 6, 1e-4, 10_000).unwrap() - 4.02503).abs() <= 1e-3);
    assert_eq!(platlink_py::jm_distance(TWISTED_PLAT, 6).unwrap(), 2);
    assert_eq!(platlink_py::h1_order("s2^3", 4).unwrap(), BigInt::from(3));
    assert!(platlink_py::export("s2^3", 4, "gauss").unwrap().contains('-'));
    let family: serde_json::Value = serde_json::from_str(&platlink_py::family_json(TWISTED_PLAT, 6, 3, false).unwrap()).unwrap();
    assert_eq!(family["entries"][1]["distance"]["d"], 4);
}

#[test]
fn failures_are_errors() {
    assert!(platlink_py::components("s1", 5).is_err());
    assert!(platlink_py::export("s1", 4, "png").is_err());
    assert!(platlink_py::report_json("s1 s7", 4).is_err());
}
