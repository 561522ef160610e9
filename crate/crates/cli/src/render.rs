//! Arc diagrams as SVG 1.1.
//!
//! Finite arcs are upper semicircles over a number line, infinite arcs are
//! vertical rays. All coordinates are integers so the output is stable
//! byte for byte.

use std::collections::BTreeSet;
use std::fmt::Write;

use infgon_core::{Arc, ArcConfiguration, Window};

const UNIT: i64 = 40;
const MARGIN: i64 = 30;
const LABEL_ROOM: i64 = 24;
const PLAIN: &str = "#1f3b73";
const CROSSING: &str = "#c0392b";

struct Layout {
    lo: i64,
    width: i64,
    height: i64,
    baseline: i64,
}

impl Layout {
    fn new(w: Window) -> Self {
        let span = w.width() * UNIT;
        let top = span / 2 + MARGIN;
        Layout {
            lo: w.lo(),
            width: span + 2 * MARGIN,
            height: top + MARGIN + LABEL_ROOM,
            baseline: top + MARGIN / 2,
        }
    }

    fn x(&self, i: i64) -> i64 {
        MARGIN + (i - self.lo) * UNIT
    }
}

/// Arcs taking part in at least one crossing inside the window.
fn crossing_arcs(arcs: &[Arc]) -> BTreeSet<Arc> {
    let mut out = BTreeSet::new();
    for (i, &x) in arcs.iter().enumerate() {
        for &y in &arcs[i + 1..] {
            let hit = match (x, y) {
                (Arc::Finite(p), Arc::Finite(q)) => p.crosses(&q),
                (Arc::Finite(p), Arc::Infinite(m)) | (Arc::Infinite(m), Arc::Finite(p)) => p.straddles(m),
                (Arc::Infinite(_), Arc::Infinite(_)) => false,
            };
            if hit {
                out.insert(x);
                out.insert(y);
            }
        }
    }
    out
}

pub fn render_svg(c: &ArcConfiguration, w: Window, highlight: bool) -> String {
    let layout = Layout::new(w);
    let arcs = c.materialize(w);
    let marked = if highlight { crossing_arcs(&arcs) } else { BTreeSet::new() };
    let style = |a: &Arc| {
        if marked.contains(a) {
            (" crossing", CROSSING)
        } else {
            ("", PLAIN)
        }
    };

    let mut s = String::new();
    let (width, height, base) = (layout.width, layout.height, layout.baseline);
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n");
    s.push_str("<!DOCTYPE svg PUBLIC \"-//W3C//DTD SVG 1.1//EN\" \"http://www.w3.org/Graphics/SVG/1.1/DTD/svg11.dtd\">\n");
    writeln!(
        s,
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">"
    )
    .unwrap();
    writeln!(s, "<title>arc configuration on {}</title>", w).unwrap();
    writeln!(s, "<rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"white\"/>").unwrap();

    s.push_str("<g id=\"axis\" stroke=\"black\" stroke-width=\"1\">\n");
    writeln!(
        s,
        "<line x1=\"{}\" y1=\"{base}\" x2=\"{}\" y2=\"{base}\"/>",
        layout.x(w.lo()) - MARGIN / 2,
        layout.x(w.hi()) + MARGIN / 2
    )
    .unwrap();
    for i in w.lo()..=w.hi() {
        let x = layout.x(i);
        writeln!(s, "<line x1=\"{x}\" y1=\"{}\" x2=\"{x}\" y2=\"{}\"/>", base - 4, base + 4).unwrap();
    }
    s.push_str("</g>\n");

    s.push_str("<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n");
    for i in w.lo()..=w.hi() {
        writeln!(s, "<text x=\"{}\" y=\"{}\">{i}</text>", layout.x(i), base + 20).unwrap();
    }
    s.push_str("</g>\n");

    s.push_str("<g id=\"arcs\" fill=\"none\" stroke-width=\"2\">\n");
    for a in &arcs {
        match *a {
            Arc::Finite(f) => {
                let (x1, x2) = (layout.x(f.a()), layout.x(f.b()));
                let r = (x2 - x1) / 2;
                let (class, color) = style(a);
                writeln!(
                    s,
                    "<path class=\"arc{class}\" d=\"M {x1} {base} A {r} {r} 0 0 1 {x2} {base}\" stroke=\"{color}\"/>"
                )
                .unwrap();
            }
            Arc::Infinite(m) => {
                let x = layout.x(m);
                let (class, color) = style(a);
                writeln!(
                    s,
                    "<line class=\"ray{class}\" x1=\"{x}\" y1=\"{base}\" x2=\"{x}\" y2=\"{}\" stroke=\"{color}\"/>",
                    MARGIN / 2
                )
                .unwrap();
            }
        }
    }
    s.push_str("</g>\n</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count(svg: &str, needle: &str) -> usize {
        svg.matches(needle).count()
    }

    #[test]
    fn fan_with_infinite_arc() {
        let c = ArcConfiguration::fan(0).with_infinite(0);
        let svg = render_svg(&c, Window::symmetric(5), false);
        assert_eq!(count(&svg, "<path class=\"arc"), 8);
        assert_eq!(count(&svg, "<line class=\"ray"), 1);
    }

    #[test]
    fn empty_configuration_draws_axis_only() {
        let c = ArcConfiguration::new(vec![], vec![]).unwrap();
        let svg = render_svg(&c, Window::symmetric(3), true);
        assert_eq!(count(&svg, "class=\"arc"), 0);
        assert_eq!(count(&svg, "class=\"ray"), 0);
        assert_eq!(count(&svg, "<text"), 7);
    }

    #[test]
    fn zigzag_small_window() {
        let svg = render_svg(&ArcConfiguration::zigzag(0), Window::symmetric(3), false);
        assert_eq!(count(&svg, "<path class=\"arc"), 5);
    }

    #[test]
    fn highlight_marks_crossings() {
        let c = ArcConfiguration::fan(0).with_infinite(1);
        let svg = render_svg(&c, Window::symmetric(4), true);
        assert_eq!(count(&svg, "ray crossing"), 1);
        // (0, b) for b >= 2 all pass over 1.
        assert_eq!(count(&svg, "arc crossing"), 3);
        assert!(!render_svg(&c, Window::symmetric(4), false).contains("crossing\""));
    }

    #[test]
    fn deterministic() {
        let c = ArcConfiguration::zigzag(1);
        assert_eq!(render_svg(&c, Window::symmetric(6), true), render_svg(&c, Window::symmetric(6), true));
    }
}
