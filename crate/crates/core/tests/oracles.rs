//! Closed-form predicates against brute-force enumeration of the sets they
//! describe.

use std::collections::HashSet;

use infgon_core::arc::arcs_in_window;
use infgon_core::quiver::{composite_nonzero, h_region_witness, Composite};
use infgon_core::{
    arcs_cross, ext_dim, h_region_contains, hom_dim, wedge_contains, Arc, CrossResult, FiniteArc, FiniteInd, IndObject,
    RegionPart, Window,
};

fn x(s: i64, d: i64) -> FiniteInd {
    FiniteInd::new(s, d).unwrap()
}

/// `H^-(Σ^r X_s)` and `H^+(Σ^r X_s)` listed straight from their parametrized
/// definitions over a bounding box of `(m, n)`.
#[allow(clippy::int_plus_one)]
fn enumerate_regions(r: i64, s: i64, bound: i64) -> (HashSet<FiniteInd>, HashSet<FiniteInd>) {
    let mut minus = HashSet::new();
    let mut plus = HashSet::new();
    for m in -bound..=bound {
        for n in -bound..=bound {
            let index = n - m - 2;
            if index < 0 {
                continue;
            }
            let obj = x(-n, index);
            if m <= -r - s - 3 && -r - s - 1 <= n && n <= -r - 1 {
                minus.insert(obj);
            }
            if -r - s - 1 <= m && m <= -r - 1 && -r + 1 <= n {
                plus.insert(obj);
            }
        }
    }
    (minus, plus)
}

#[test]
fn h_regions_match_enumeration() {
    for r in -4..=4 {
        for s in 0..=5 {
            let center = x(r, s);
            let (minus, plus) = enumerate_regions(r, s, 40);
            for shift in -12..=12 {
                for index in 0..=12 {
                    let obj = x(shift, index);
                    assert_eq!(h_region_contains(center, obj, RegionPart::Minus), minus.contains(&obj), "{center} {obj}");
                    assert_eq!(h_region_contains(center, obj, RegionPart::Plus), plus.contains(&obj), "{center} {obj}");
                    assert_eq!(
                        h_region_contains(center, obj, RegionPart::Either),
                        minus.contains(&obj) || plus.contains(&obj)
                    );
                }
            }
        }
    }
}

#[test]
fn h_region_examples_from_enumeration() {
    let (minus, plus) = enumerate_regions(1, 0, 30);
    // H^+(Σ X_0) = { Σ^{-n} X_n : n >= 0 }.
    let expected: HashSet<FiniteInd> = (0..=20).map(|n| x(-n, n)).collect();
    let plus_small: HashSet<FiniteInd> = plus.into_iter().filter(|o| o.index() <= 20).collect();
    assert_eq!(plus_small, expected);
    assert!(minus.contains(&x(2, 0)));
    let w = h_region_witness(x(1, 0), x(2, 0)).unwrap();
    assert_eq!((w.m, w.n), (-4, -2));
    assert!(!minus.contains(&x(1, 0)) && !expected.contains(&x(1, 0)));
}

#[test]
fn h_regions_are_disjoint() {
    for r in -6..=6 {
        for s in 0..=8 {
            let (minus, plus) = enumerate_regions(r, s, 40);
            assert!(minus.is_disjoint(&plus), "center Σ^{r} X_{s}");
            for shift in -15..=15 {
                for index in 0..=15 {
                    let o = x(shift, index);
                    assert!(!(h_region_contains(x(r, s), o, RegionPart::Minus)
                        && h_region_contains(x(r, s), o, RegionPart::Plus)));
                }
            }
        }
    }
}

#[test]
fn wedge_matches_enumeration() {
    for n in -5..=5 {
        let mut set = HashSet::new();
        for k in 0..=15 {
            for j in 0..=k {
                set.insert(x(n - j, k));
            }
        }
        for shift in -20..=20 {
            for index in 0..=15 {
                let o = x(shift, index);
                assert_eq!(wedge_contains(n, o), set.contains(&o), "n={n} {o}");
            }
        }
        assert!(wedge_contains(0, x(-2, 5)));
    }
}

#[test]
fn slices_lie_in_their_wedges() {
    for n in -10..=10 {
        for i in 0..=30 {
            assert!(wedge_contains(n, FiniteInd::on_slice(n, i)));
        }
    }
}

#[test]
fn hom_values_are_zero_or_one() {
    let mut objects: Vec<IndObject> = arcs_in_window(Window::symmetric(8))
        .map(|a| IndObject::Finite(a.to_object()))
        .collect();
    objects.extend((-8..=8).map(|n| IndObject::prufer(n).unwrap()));
    for &a in &objects {
        for &b in &objects {
            assert!(hom_dim(a, b).value <= 1);
        }
    }
}

#[test]
fn ext_with_prufer_is_symmetric() {
    for arc in arcs_in_window(Window::symmetric(10)) {
        let y = IndObject::Finite(arc.to_object());
        for n in -10..=10 {
            let e = IndObject::prufer(n).unwrap();
            assert_eq!(ext_dim(y, e).value, ext_dim(e, y).value, "{y} {e}");
        }
    }
}

#[test]
fn ext_between_prufer_objects_is_not_symmetric() {
    let e = |n| IndObject::prufer(n).unwrap();
    assert_eq!(ext_dim(e(3), e(0)).value, 1);
    assert_eq!(ext_dim(e(0), e(3)).value, 0);
    assert_eq!(arcs_cross(Arc::Infinite(-5), Arc::Infinite(-2)), CrossResult::UndefinedInfiniteInfinite);
}

#[test]
fn composite_fixtures() {
    assert_eq!(composite_nonzero(x(0, 0), x(-1, 1), x(-2, 2)), Ok(Composite::True));

    // Hom(u, w) = 1 but the second leg lands in H^-(Σv), so no criterion
    // applies.
    let u = FiniteArc::new(-4, 0).unwrap().to_object();
    let v = FiniteArc::new(-2, 3).unwrap().to_object();
    let w = FiniteArc::new(-4, 1).unwrap().to_object();
    assert!(hom_dim(IndObject::Finite(u), IndObject::Finite(w)).value == 1);
    assert_eq!(composite_nonzero(u, v, w), Ok(Composite::Indeterminate));
}

#[test]
fn tower_transitions_eventually_certified() {
    // Inside the wedge, the slice maps from Y compose nonzero once Hom is on.
    let win = Window::symmetric(10);
    for arc in arcs_in_window(win) {
        let y = arc.to_object();
        for n in -6..=6 {
            if !wedge_contains(n, y) {
                continue;
            }
            let start = (0..).find(|&i| infgon_core::quiver::finite_hom(y, FiniteInd::on_slice(n, i))).unwrap();
            for i in start..start + 20 {
                let c = composite_nonzero(y, FiniteInd::on_slice(n, i), FiniteInd::on_slice(n, i + 1));
                assert_eq!(c, Ok(Composite::True), "Y={y}, n={n}, i={i}");
            }
        }
    }
}
