mod common;

use common::*;
use platlink::cache::{Cache, CacheStatus};
use platlink::report::{analyze, cache_key};
use platlink::{parse_braid, Error};

#[test]
fn put_then_get() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path()).unwrap();
    let w = parse_braid(PA_BRAID, 6).unwrap();
    let r = analyze(&w).unwrap();
    assert_eq!(cache.get(&r.key).unwrap(), None);
    cache.put(&r).unwrap();
    assert_eq!(cache.get(&r.key).unwrap(), Some(r.clone()));
    let fresh = analyze(&w).unwrap();
    assert!(fresh.same_invariants(&r));
}

#[test]
fn equivalent_spellings_hit_the_same_entry() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path()).unwrap();
    let a = parse_braid("s2^2 s4 s4^-1 s4 s1 s3 s5 s2", 6).unwrap();
    let b = parse_braid(PA_BRAID, 6).unwrap();
    assert_eq!(cache_key(&a), cache_key(&b));
    assert_eq!(cache.get_or_compute(&a).unwrap().1, CacheStatus::Miss);
    assert_eq!(cache.get_or_compute(&b).unwrap().1, CacheStatus::Hit);
}

#[test]
fn concurrent_writers_leave_a_valid_record() {
    let dir = tempfile::tempdir().unwrap();
    let w = parse_braid(TWISTED_PLAT, 6).unwrap();
    std::thread::scope(|s| {
        for _ in 0..8 {
            s.spawn(|| Cache::new(dir.path()).unwrap().get_or_compute(&w).unwrap());
        }
    });
    let cache = Cache::new(dir.path()).unwrap();
    assert!(cache.get(&cache_key(&w)).unwrap().is_some());
    let leftovers = std::fs::read_dir(dir.path()).unwrap().count();
    assert_eq!(leftovers, 1);
}

#[test]
fn truncated_record_is_repaired() {
    let dir = tempfile::tempdir().unwrap();
    let cache = Cache::new(dir.path()).unwrap();
    let w = parse_braid(FIGURE_EIGHT, 4).unwrap();
    let (r, _) = cache.get_or_compute(&w).unwrap();
    let path = dir.path().join(format!("{}.json", r.key));
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::write(&path, &text[..text.len() / 2]).unwrap();
    assert!(matches!(cache.get(&r.key), Err(Error::CorruptCache { .. })));
    assert_eq!(cache.get_or_compute(&w).unwrap().1, CacheStatus::Repaired);
    assert!(cache.get(&r.key).unwrap().unwrap().same_invariants(&r));
}
