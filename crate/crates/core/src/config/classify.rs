use std::fmt;

use serde::{Deserialize, Serialize};

use super::{ArcConfiguration, CrossCheck, Maximality};
use crate::arc::{Arc, FiniteArc};
use crate::window::Window;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "WCT_LocallyFinite")]
    WctLocallyFinite,
    #[serde(rename = "WCT_FountainPlusInfinite")]
    WctFountainPlusInfinite,
    ClusterTilting,
    #[serde(rename = "NotWCT")]
    NotWct,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::WctLocallyFinite => "WCT_LocallyFinite",
            Verdict::WctFountainPlusInfinite => "WCT_FountainPlusInfinite",
            Verdict::ClusterTilting => "ClusterTilting",
            Verdict::NotWct => "NotWCT",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Reason {
    /// Finite arcs only, maximal and locally finite. Such a subcategory is
    /// weakly cluster tilting but never functorially finite.
    LocallyFiniteMaximal { maximality: Maximality },
    /// One infinite arc whose endpoint is a fountain of the finite part.
    FountainWithInfiniteArc { infinite_arc: i64, maximality: Maximality },
    MoreThanOneInfiniteArc { arcs: Vec<i64> },
    CrossingPair { first: Arc, second: Arc },
    AddableArc { arc: FiniteArc },
    /// Maximal with a fountain at `fountain` but no infinite arc: the arc
    /// `(fountain, ∞)` crosses nothing and would have to belong.
    MissingInfiniteArc { fountain: i64 },
    FountainMismatch { infinite_arc: i64, fountains: Vec<i64> },
    NotLocallyFiniteNoInfiniteArc {
        left_fountains: Vec<i64>,
        right_fountains: Vec<i64>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Classification {
    pub verdict: Verdict,
    pub reason: Reason,
}

fn list(xs: &[i64]) -> String {
    let parts: Vec<String> = xs.iter().map(i64::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn maximality_line(m: &Maximality) -> String {
    match m {
        Maximality::CertifiedMaximal => "WITNESS maximal certified".to_string(),
        Maximality::WindowVerified { window } => format!("WITNESS maximal window-verified on {window}"),
        Maximality::AddableArc { arc } => format!("WITNESS addable {arc}"),
    }
}

impl Classification {
    pub fn is_weakly_cluster_tilting(&self) -> bool {
        self.verdict != Verdict::NotWct
    }

    /// `VERDICT <name>` followed by one `WITNESS` line per fact.
    pub fn to_text(&self) -> String {
        let mut lines = vec![format!("VERDICT {}", self.verdict)];
        match &self.reason {
            Reason::LocallyFiniteMaximal { maximality } => {
                lines.push(maximality_line(maximality));
                lines.push("WITNESS locally_finite".into());
                lines.push("WITNESS not_cluster_tilting no arc to infinity".into());
            }
            Reason::FountainWithInfiniteArc {
                infinite_arc,
                maximality,
            } => {
                lines.push(format!("WITNESS infinite_arc {}", Arc::Infinite(*infinite_arc)));
                lines.push(format!("WITNESS fountain {infinite_arc}"));
                lines.push(maximality_line(maximality));
                if self.verdict == Verdict::ClusterTilting {
                    lines.push("WITNESS also WCT_FountainPlusInfinite".into());
                }
            }
            Reason::MoreThanOneInfiniteArc { arcs } => {
                let arcs: Vec<String> = arcs.iter().map(|m| Arc::Infinite(*m).to_string()).collect();
                lines.push(format!("WITNESS more_than_one_infinite_arc {}", arcs.join(" ")));
            }
            Reason::CrossingPair { first, second } => {
                lines.push(format!("WITNESS crossing {first} {second}"));
            }
            Reason::AddableArc { arc } => lines.push(format!("WITNESS addable {arc}")),
            Reason::MissingInfiniteArc { fountain } => {
                lines.push(format!("WITNESS fountain {fountain}"));
                lines.push(format!("WITNESS missing_infinite_arc {}", Arc::Infinite(*fountain)));
            }
            Reason::FountainMismatch {
                infinite_arc,
                fountains,
            } => {
                lines.push(format!("WITNESS infinite_arc {}", Arc::Infinite(*infinite_arc)));
                lines.push(format!("WITNESS fountain_mismatch fountains={}", list(fountains)));
            }
            Reason::NotLocallyFiniteNoInfiniteArc {
                left_fountains,
                right_fountains,
            } => {
                lines.push(format!(
                    "WITNESS not_locally_finite left_fountains={} right_fountains={}",
                    list(left_fountains),
                    list(right_fountains)
                ));
                lines.push("WITNESS no_infinite_arc".into());
            }
        }
        let mut out = lines.join("\n");
        out.push('\n');
        out
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

fn not_wct(reason: Reason) -> Classification {
    Classification {
        verdict: Verdict::NotWct,
        reason,
    }
}

/// Classifies a configuration as weakly cluster tilting, cluster tilting or
/// neither. `window` bounds the maximality scan where no certificate exists.
pub fn classify(c: &ArcConfiguration, window: Window) -> Classification {
    let infinite = c.infinite();
    if infinite.len() >= 2 {
        return not_wct(Reason::MoreThanOneInfiniteArc { arcs: infinite });
    }
    if let CrossCheck::Crossing { first, second } = c.noncrossing_check() {
        return not_wct(Reason::CrossingPair { first, second });
    }
    let maximality = c.maximality_check(window);
    if let Maximality::AddableArc { arc } = maximality {
        return not_wct(Reason::AddableArc { arc });
    }
    let fountains = c.fountains();

    match infinite.first() {
        None => {
            if c.is_locally_finite() {
                Classification {
                    verdict: Verdict::WctLocallyFinite,
                    reason: Reason::LocallyFiniteMaximal { maximality },
                }
            } else if let Some(&fountain) = fountains.first() {
                not_wct(Reason::MissingInfiniteArc { fountain })
            } else {
                let profile = c.fountain_profile();
                let pick = |left: bool| {
                    profile
                        .iter()
                        .filter(|(_, f)| if left { f.left_fountain } else { f.right_fountain })
                        .map(|(v, _)| *v)
                        .collect()
                };
                not_wct(Reason::NotLocallyFiniteNoInfiniteArc {
                    left_fountains: pick(true),
                    right_fountains: pick(false),
                })
            }
        }
        Some(&m) => {
            if fountains.contains(&m) {
                // Weakly cluster tilting with an arc to infinity at a
                // fountain; such subcategories are also functorially finite.
                Classification {
                    verdict: Verdict::ClusterTilting,
                    reason: Reason::FountainWithInfiniteArc {
                        infinite_arc: m,
                        maximality,
                    },
                }
            } else {
                not_wct(Reason::FountainMismatch {
                    infinite_arc: m,
                    fountains,
                })
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Window {
        Window::symmetric(12)
    }

    #[test]
    fn fixtures() {
        let ct = classify(&ArcConfiguration::fan(0).with_infinite(0), w());
        assert_eq!(ct.verdict, Verdict::ClusterTilting);
        assert!(ct.to_text().starts_with("VERDICT ClusterTilting\n"));

        let zz = classify(&ArcConfiguration::zigzag(0), w());
        assert_eq!(zz.verdict, Verdict::WctLocallyFinite);
        assert!(zz.to_text().contains("not_cluster_tilting"));

        let fan = classify(&ArcConfiguration::fan(0), w());
        assert_eq!(fan.reason, Reason::MissingInfiniteArc { fountain: 0 });

        let one = classify(&ArcConfiguration::explicit(vec![FiniteArc::new(0, 2).unwrap()]), w());
        assert_eq!(
            one.reason,
            Reason::AddableArc {
                arc: FiniteArc::new(2, 4).unwrap()
            }
        );

        let split = classify(&ArcConfiguration::split_fan(0, 3).unwrap(), w());
        assert_eq!(
            split.reason,
            Reason::NotLocallyFiniteNoInfiniteArc {
                left_fountains: vec![0],
                right_fountains: vec![3]
            }
        );

        let crossing = classify(&ArcConfiguration::fan(0).with_infinite(1), w());
        assert_eq!(crossing.to_text(), "VERDICT NotWCT\nWITNESS crossing (0,2) (1,∞)\n");

        let two = classify(&ArcConfiguration::fan(0).with_infinite(0).with_infinite(3), w());
        assert_eq!(two.reason, Reason::MoreThanOneInfiniteArc { arcs: vec![0, 3] });
    }

    #[test]
    fn split_fan_with_infinite_arc() {
        let c = ArcConfiguration::split_fan(0, 3).unwrap().with_infinite(0);
        assert_eq!(
            classify(&c, w()).reason,
            Reason::FountainMismatch {
                infinite_arc: 0,
                fountains: vec![]
            }
        );
    }

    #[test]
    fn serde_names() {
        let s = serde_json::to_string(&Verdict::WctLocallyFinite).unwrap();
        assert_eq!(s, "\"WCT_LocallyFinite\"");
        assert_eq!(serde_json::to_string(&Verdict::NotWct).unwrap(), "\"NotWCT\"");
    }
}
