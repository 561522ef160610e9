//! Exhaustive agreement checks over fixed windows. Each suite compares two
//! independent computations of the same quantity and reports every
//! disagreement it finds (the first few verbatim).

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::arc::{arc_to_object, arcs_in_window, ext_via_crossing, object_to_arc, Arc, FiniteArc};
use crate::config::{
    classify, overarc_antichain, strong_overarc, ArcConfiguration, CrossCheck, OverarcTarget, Reason,
    Verdict,
};
use crate::graded::{
    build_hom_tower, build_inverse_hom_tower, degreewise_dims, dual_descriptor, f_image, prufer_prufer_tower,
    truncated_colim, truncated_lim, GradedModuleDescriptor,
};
use crate::quiver::{ext_dim, hom_dim, shift_object, wedge_contains, FiniteInd, IndObject, PruferInd};
use crate::window::Window;

const SHOWN_FAILURES: usize = 5;

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub id: u8,
    pub name: &'static str,
    pub checked: u64,
    pub failures: u64,
    pub examples: Vec<String>,
    pub elapsed_ms: u128,
    pub limit_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures == 0 && self.elapsed_ms <= self.limit_ms
    }

    /// One line: `PASS`/`FAIL`, id, name, counts and timing.
    pub fn summary_line(&self) -> String {
        let mut line = format!(
            "{} [{}] {}: {} checks, {} failures, {} ms (limit {} ms)",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checked,
            self.failures,
            self.elapsed_ms,
            self.limit_ms
        );
        if let Some(first) = self.examples.first() {
            line.push_str(&format!("; first failure: {first}"));
        }
        line
    }
}

struct Tally {
    checked: u64,
    failures: u64,
    examples: Vec<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checked: 0,
            failures: 0,
            examples: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures += 1;
            if self.examples.len() < SHOWN_FAILURES {
                self.examples.push(describe());
            }
        }
    }

    fn finish(self, id: u8, name: &'static str, started: Instant, limit: Duration) -> SuiteReport {
        SuiteReport {
            id,
            name,
            checked: self.checked,
            failures: self.failures,
            examples: self.examples,
            elapsed_ms: started.elapsed().as_millis(),
            limit_ms: limit.as_millis(),
        }
    }
}

fn finite(x: FiniteArc) -> IndObject {
    IndObject::Finite(x.to_object())
}

fn arcs(w: i64) -> Vec<FiniteArc> {
    arcs_in_window(Window::symmetric(w)).collect()
}

pub const SUITE_IDS: [u8; 9] = [1, 2, 3, 4, 5, 6, 7, 8, 9];

pub fn run(id: u8) -> Option<SuiteReport> {
    Some(match id {
        1 => crossing_bridge(),
        2 => serre_duality(),
        3 => direct_towers(),
        4 => inverse_towers(),
        5 => double_towers(),
        6 => classification_fixtures(),
        7 => zigzag_witnesses(),
        8 => graded_images(),
        9 => shift_equivariance(),
        _ => return None,
    })
}

pub fn run_all() -> Vec<SuiteReport> {
    SUITE_IDS.iter().filter_map(|&id| run(id)).collect()
}

/// Ext read from crossings against Ext from H-regions, both directions, for
/// every pair of finite arcs in [-25, 25] and every finite/infinite pair.
pub fn crossing_bridge() -> SuiteReport {
    let started = Instant::now();
    let mut t = Tally::new();
    let all = arcs(25);
    for &x in &all {
        let ox = finite(x);
        for &y in &all {
            let oy = finite(y);
            let crossing = ext_via_crossing(Arc::Finite(x), Arc::Finite(y)).map(|h| h.value);
            let xy = ext_dim(ox, oy).value;
            let yx = ext_dim(oy, ox).value;
            t.check(crossing == Ok(xy) && xy == yx, || {
                format!("{x} vs {y}: crossing {crossing:?}, ext {xy}/{yx}")
            });
        }
        for m in -25..=25 {
            let e = arc_to_object(Arc::Infinite(m)).expect("in range");
            let crossing = ext_via_crossing(Arc::Finite(x), Arc::Infinite(m)).map(|h| h.value);
            let xe = ext_dim(ox, e).value;
            let ex = ext_dim(e, ox).value;
            t.check(crossing == Ok(xe) && xe == ex, || {
                format!("{x} vs ({m},∞): crossing {crossing:?}, ext {xe}/{ex}")
            });
        }
    }
    t.finish(1, "crossing/Ext bridge on [-25,25]", started, Duration::from_secs(30))
}

pub fn serre_duality() -> SuiteReport {
    let started = Instant::now();
    let mut t = Tally::new();
    let all: Vec<IndObject> = arcs(25).into_iter().map(finite).collect();
    for &a in &all {
        let a2 = shift_object(a, 2);
        for &b in &all {
            let lhs = hom_dim(a, b).value;
            let rhs = hom_dim(b, a2).value;
            t.check(lhs == rhs, || format!("Hom({a}, {b}) = {lhs} but Hom({b}, Σ²{a}) = {rhs}"));
        }
    }
    t.finish(2, "Serre duality on [-25,25]", started, Duration::from_secs(30))
}

pub fn direct_towers() -> SuiteReport {
    let started = Instant::now();
    let mut t = Tally::new();
    for x in arcs(15) {
        let y = x.to_object();
        for n in -8..=8 {
            let expected = hom_dim(IndObject::Finite(y), IndObject::Prufer(PruferInd::new(n).expect("small"))).value;
            let got = truncated_colim(&build_hom_tower(y, n, 60));
            t.check(got.as_ref().map(|l| l.value) == Ok(expected), || {
                format!("Y={y}, n={n}: colim {got:?}, wedge formula {expected}")
            });
        }
    }
    t.finish(3, "direct towers vs Hom(Y, E_n)", started, Duration::from_secs(60))
}

pub fn inverse_towers() -> SuiteReport {
    let started = Instant::now();
    let mut t = Tally::new();
    for x in arcs(15) {
        let y = x.to_object();
        for n in -8..=8 {
            let expected = u8::from(wedge_contains(n + 2, y));
            let via_hom = hom_dim(IndObject::Prufer(PruferInd::new(n).expect("small")), IndObject::Finite(y)).value;
            let got = truncated_lim(&build_inverse_hom_tower(y, n, 60));
            let ok = matches!(got, Ok(l) if l.value == expected && l.lim1_vanishes) && via_hom == expected;
            t.check(ok, || format!("Y={y}, n={n}: lim {got:?}, wedge {expected}, hom {via_hom}"));
        }
    }
    t.finish(4, "inverse towers vs Hom(E_n, Y)", started, Duration::from_secs(60))
}

pub fn double_towers() -> SuiteReport {
    let started = Instant::now();
    let mut t = Tally::new();
    for m in -6..=6 {
        for n in -6..=6 {
            let expected = u8::from(n <= m);
            let got = prufer_prufer_tower(m, n, 30);
            t.check(got.as_ref().map(|l| l.value) == Ok(expected), || {
                format!("m={m}, n={n}: double tower {got:?}, expected {expected}")
            });
        }
    }
    t.finish(5, "double towers vs Hom(E_m, E_n)", started, Duration::from_secs(60))
}

pub fn classification_fixtures() -> SuiteReport {
    let started = Instant::now();
    let mut t = Tally::new();
    let w = Window::symmetric(12);
    let arc = |a, b| FiniteArc::new(a, b).expect("valid fixture arc");

    let mut expect = |label: &str, c: ArcConfiguration, verdict: Verdict, reason: Option<Reason>| {
        let got = classify(&c, w);
        let ok = got.verdict == verdict && reason.as_ref().is_none_or(|r| *r == got.reason);
        t.check(ok, || format!("{label}: got {:?} / {:?}", got.verdict, got.reason));
    };
    expect("Fan(0)+[0]", ArcConfiguration::fan(0).with_infinite(0), Verdict::ClusterTilting, None);
    expect("Zigzag(0)", ArcConfiguration::zigzag(0), Verdict::WctLocallyFinite, None);
    expect(
        "Fan(0)",
        ArcConfiguration::fan(0),
        Verdict::NotWct,
        Some(Reason::MissingInfiniteArc { fountain: 0 }),
    );
    expect(
        "Explicit{(0,2)}",
        ArcConfiguration::explicit(vec![arc(0, 2)]),
        Verdict::NotWct,
        Some(Reason::AddableArc { arc: arc(2, 4) }),
    );
    expect(
        "SplitFan(0,3)",
        ArcConfiguration::split_fan(0, 3).expect("ordered"),
        Verdict::NotWct,
        None,
    );
    expect(
        "Fan(0)+[1]",
        ArcConfiguration::fan(0).with_infinite(1),
        Verdict::NotWct,
        Some(Reason::CrossingPair {
            first: Arc::Finite(arc(0, 2)),
            second: Arc::Infinite(1),
        }),
    );
    expect(
        "Fan(0)+[0,3]",
        ArcConfiguration::fan(0).with_infinite(0).with_infinite(3),
        Verdict::NotWct,
        Some(Reason::MoreThanOneInfiniteArc { arcs: vec![0, 3] }),
    );
    for m in -5..=5 {
        expect("Fan(m)+[m]", ArcConfiguration::fan(m).with_infinite(m), Verdict::ClusterTilting, None);
        expect("Zigzag(c)", ArcConfiguration::zigzag(m), Verdict::WctLocallyFinite, None);
    }
    let crossing_ok = ArcConfiguration::zigzag(0).with_infinite(0).noncrossing_check()
        == CrossCheck::Crossing {
            first: Arc::Finite(arc(-1, 1)),
            second: Arc::Infinite(0),
        };
    t.check(crossing_ok, || "Zigzag(0)+[0] crossing witness".into());
    t.finish(6, "classification fixtures", started, Duration::from_secs(5))
}

pub fn zigzag_witnesses() -> SuiteReport {
    let started = Instant::now();
    let mut t = Tally::new();
    let z = ArcConfiguration::zigzag(0);
    let w = Window::symmetric(10);
    for x in z.finite_in_window(w) {
        let got = strong_overarc(&z, OverarcTarget::Arc(x));
        t.check(
            matches!(got, Ok(y) if y.strictly_over(&x) && z.contains(y)),
            || format!("strong overarc of {x}: {got:?}"),
        );
    }
    for h in -10..=10 {
        let got = strong_overarc(&z, OverarcTarget::Point(h));
        t.check(
            matches!(got, Ok(y) if y.straddles(h) && z.contains(y)),
            || format!("strong overarc of {h}: {got:?}"),
        );
    }
    let seed = FiniteArc::new(-1, 1).expect("valid");
    match overarc_antichain(&z, seed, 20) {
        Ok(chain) => {
            t.check(chain.len() == 20, || format!("chain has {} members", chain.len()));
            let e = IndObject::Prufer(PruferInd::new(-seed.a() - 2).expect("small"));
            for (i, &x) in chain.iter().enumerate() {
                t.check(hom_dim(finite(x), e).value == 1, || format!("Hom({x}, {e}) = 0"));
                for &y in &chain[i + 1..] {
                    let ok = hom_dim(finite(x), finite(y)).value == 0 && hom_dim(finite(y), finite(x)).value == 0;
                    t.check(ok, || format!("{x} and {y} comparable"));
                }
            }
        }
        Err(e) => t.check(false, || format!("antichain failed: {e}")),
    }
    t.finish(7, "Zigzag(0) overarcs and antichain", started, Duration::from_secs(10))
}

fn random_descriptor(rng: &mut ChaCha8Rng) -> GradedModuleDescriptor {
    let shift = rng.gen_range(-40..=40);
    match rng.gen_range(0..3) {
        0 => GradedModuleDescriptor::FiniteCyclic {
            shift,
            length: rng.gen_range(1..=30),
        },
        1 => GradedModuleDescriptor::PolyFree { shift },
        _ => GradedModuleDescriptor::PruferMod { shift },
    }
}

pub fn graded_images() -> SuiteReport {
    let started = Instant::now();
    let mut t = Tally::new();
    let mut rng = ChaCha8Rng::seed_from_u64(0x1f_2a_3b);
    let wide = Window::symmetric(50);
    for _ in 0..1000 {
        let m = random_descriptor(&mut rng);
        let dual = dual_descriptor(m);
        t.check(dual_descriptor(dual) == m, || format!("dual of dual of {m} is {}", dual_descriptor(dual)));
        let mut mirrored = degreewise_dims(m, wide);
        mirrored.reverse();
        t.check(degreewise_dims(dual, wide) == mirrored, || format!("support of {dual} is not the mirror of {m}"));
        if let GradedModuleDescriptor::FiniteCyclic { length, .. } = m {
            let total: i64 = degreewise_dims(m, Window::symmetric(80)).iter().map(|&d| i64::from(d)).sum();
            t.check(total == length, || format!("{m} has total dimension {total}"));
        }
    }
    for i in -20..=20 {
        for n in 0..=20 {
            let x = FiniteInd::new(i, n).expect("small");
            let expected = GradedModuleDescriptor::FiniteCyclic { shift: i, length: n + 1 };
            t.check(f_image(IndObject::Finite(x)) == expected, || format!("F({x})"));
        }
        let e = IndObject::Prufer(PruferInd::new(i).expect("small"));
        t.check(
            f_image(e) == GradedModuleDescriptor::PruferMod { shift: i },
            || format!("F({e})"),
        );
    }
    t.finish(8, "duality involution and F-images", started, Duration::from_secs(5))
}

pub fn shift_equivariance() -> SuiteReport {
    let started = Instant::now();
    let mut t = Tally::new();
    let mut objects: Vec<IndObject> = arcs(15).into_iter().map(finite).collect();
    objects.extend((-15..=15).map(|m| arc_to_object(Arc::Infinite(m)).expect("small")));
    for s in -5..=5 {
        let moved: Vec<IndObject> = objects.iter().map(|&x| shift_object(x, s)).collect();
        for (i, &a) in objects.iter().enumerate() {
            let expected = match object_to_arc(a) {
                Arc::Finite(x) => Arc::Finite(FiniteArc::new(x.a() - s, x.b() - s).expect("translate")),
                Arc::Infinite(m) => Arc::Infinite(m - s),
            };
            t.check(object_to_arc(moved[i]) == expected, || format!("Σ^{s} {a} has arc {}", object_to_arc(moved[i])));
            for (j, &b) in objects.iter().enumerate() {
                let before = hom_dim(a, b).value;
                let after = hom_dim(moved[i], moved[j]).value;
                t.check(before == after, || format!("Hom({a}, {b}) = {before} changes to {after} under Σ^{s}"));
            }
        }
    }
    t.finish(9, "shift equivariance on [-15,15]", started, Duration::from_secs(30))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert!(run(0).is_none());
        assert!(run(10).is_none());
    }

    #[test]
    fn summary_format() {
        let r = SuiteReport {
            id: 3,
            name: "x",
            checked: 2,
            failures: 1,
            examples: vec!["boom".into()],
            elapsed_ms: 1,
            limit_ms: 10,
        };
        assert!(!r.passed());
        assert_eq!(r.summary_line(), "FAIL [3] x: 2 checks, 1 failures, 1 ms (limit 10 ms); first failure: boom");
    }
}
