//! Parse then exercise the verdict pipeline on small graphs: the checks must
//! never panic and their internal relations must hold for any parsed input.

#![no_main]

use cubesat::verify::{count_copies, new_copies_through, verdict, weak_closure};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(g) = cubesat::format::graph_from_json(text) else {
        return;
    };
    if g.n() > 5 {
        return;
    }
    for m in 1..=3u32 {
        let v = verdict(&g, m);
        assert_eq!(v.is_saturated, v.is_free && v.is_semi_saturated);
        assert_eq!(v.is_free, count_copies(&g, m) == 0);

        let closure = weak_closure(&g, m);
        assert!(closure.edge_count() >= g.edge_count());
        assert_eq!(weak_closure(&closure, m), closure);

        for e in cubesat::CubeGraph::full(g.dim()).edges() {
            if !g.has_edge(e) {
                let mut h = g.clone();
                h.insert(e);
                let diff = count_copies(&h, m) - count_copies(&g, m);
                assert_eq!(new_copies_through(&g, e, m).unwrap(), diff);
            }
        }
    }
});
