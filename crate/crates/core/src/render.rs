//! SVG drawings of annular matchings.
//!
//! Endpoints are equally spaced on each circle, counter-clockwise from the
//! top, with the first cross-cut at the top on both circles. Outer
//! half-circles stay in the outer 40% of the ring and inner half-circles in
//! the inner 40%; cross-cuts run radially through both bands and turn only
//! in the middle fifth, so the drawing is planar. The canonical code is
//! stored in the document metadata and read back by [`code_from_svg`].

use std::f64::consts::{FRAC_PI_2, PI, TAU};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::model::{endpoints, AnnularMatching, ChordKind, Side, CODE_VERSION};

const SIZE: f64 = 240.0;
const CENTER: f64 = SIZE / 2.0;
const OUTER_R: f64 = 100.0;
const INNER_R: f64 = 40.0;
const BAND: f64 = 0.4 * (OUTER_R - INNER_R);
const SAMPLES: usize = 24;
const NAMESPACE: &str = "urn:annular-matching";

fn angle(index: usize, len: usize) -> f64 {
    FRAC_PI_2 + TAU * index as f64 / len as f64
}

fn point(radius: f64, theta: f64) -> (f64, f64) {
    (CENTER + radius * theta.cos(), CENTER - radius * theta.sin())
}

fn polyline(points: impl IntoIterator<Item = (f64, f64)>) -> String {
    let mut d = String::new();
    for (i, (x, y)) in points.into_iter().enumerate() {
        let _ = write!(d, "{}{x:.2},{y:.2}", if i == 0 { "M" } else { " L" });
    }
    d
}

fn escape(text: &str) -> String {
    text.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

fn unescape(text: &str) -> String {
    text.replace("&quot;", "\"")
        .replace("&gt;", ">")
        .replace("&lt;", "<")
        .replace("&amp;", "&")
}

/// Half-circle from endpoint `a` counter-clockwise to endpoint `b`, bulging
/// away from its circle in proportion to the angle it spans.
fn arc_path(side: Side, a: usize, b: usize, len: usize) -> String {
    let start = angle(a, len);
    let mut end = angle(b, len);
    if end <= start {
        end += TAU;
    }
    let depth = BAND * (end - start) / TAU;
    polyline((0..=SAMPLES).map(|s| {
        let t = s as f64 / SAMPLES as f64;
        let bulge = depth * (PI * t).sin();
        let radius = match side {
            Side::Outer => OUTER_R - bulge,
            Side::Inner => INNER_R + bulge,
        };
        point(radius, start + t * (end - start))
    }))
}

fn crosscut_path(outer_theta: f64, inner_theta: f64) -> String {
    let (top, bottom) = (OUTER_R - BAND, INNER_R + BAND);
    let mut pts = vec![point(OUTER_R, outer_theta), point(top, outer_theta)];
    pts.extend((1..SAMPLES).map(|s| {
        let t = s as f64 / SAMPLES as f64;
        point(top + t * (bottom - top), outer_theta + t * (inner_theta - outer_theta))
    }));
    pts.extend([point(bottom, inner_theta), point(INNER_R, inner_theta)]);
    polyline(pts)
}

/// SVG 1.1 document for `matching`.
pub fn render_svg(matching: &AnnularMatching) -> String {
    let code = matching.canonical().code();
    let diagram = endpoints(matching);
    let (a, b) = (diagram.outer.len(), diagram.inner.len());
    let mut svg = String::new();
    let _ = writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SIZE}" height="{SIZE}" viewBox="0 0 {SIZE} {SIZE}">"#
    );
    let _ = writeln!(svg, "  <title>annular matching {}</title>", escape(&code));
    let _ = writeln!(
        svg,
        r#"  <metadata><am:matching xmlns:am="{NAMESPACE}" version="{CODE_VERSION}" code="{}"/></metadata>"#,
        escape(&code)
    );
    let _ = writeln!(svg, r##"  <g fill="none" stroke="#888" stroke-width="1">"##);
    for r in [OUTER_R, INNER_R] {
        let _ = writeln!(svg, r#"    <circle cx="{CENTER}" cy="{CENTER}" r="{r}"/>"#);
    }
    let _ = writeln!(svg, "  </g>");
    let _ = writeln!(svg, r##"  <g fill="none" stroke="#000" stroke-width="2">"##);
    for chord in &diagram.chords {
        let (class, d) = match chord.kind {
            ChordKind::Crosscut => (
                "crosscut",
                crosscut_path(angle(chord.a.index, a), angle(chord.b.index, b)),
            ),
            ChordKind::OuterHalfCircle => ("outer-arc", arc_path(Side::Outer, chord.a.index, chord.b.index, a)),
            ChordKind::InnerHalfCircle => ("inner-arc", arc_path(Side::Inner, chord.a.index, chord.b.index, b)),
        };
        let _ = writeln!(svg, r#"    <path class="{class}" d="{d}"/>"#);
    }
    let _ = writeln!(svg, "  </g>");
    let _ = writeln!(svg, r##"  <g fill="#000">"##);
    for (radius, len) in [(OUTER_R, a), (INNER_R, b)] {
        for i in 0..len {
            let (x, y) = point(radius, angle(i, len));
            let _ = writeln!(svg, r#"    <circle class="endpoint" cx="{x:.2}" cy="{y:.2}" r="2.5"/>"#);
        }
    }
    let _ = writeln!(svg, "  </g>");
    svg.push_str("</svg>\n");
    svg
}

/// Matching recorded in the metadata of a document from [`render_svg`].
pub fn code_from_svg(svg: &str) -> Result<AnnularMatching> {
    let missing = || Error::Parse { code: String::new(), reason: "no matching metadata in SVG".into() };
    let element = svg.find("<am:matching").ok_or_else(missing)?;
    let rest = &svg[element..];
    let rest = &rest[..rest.find("/>").ok_or_else(missing)?];
    let start = rest.find("code=\"").ok_or_else(missing)? + "code=\"".len();
    let len = rest[start..].find('"').ok_or_else(missing)?;
    AnnularMatching::parse(&unescape(&rest[start..start + len]))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn render(code: &str) -> String {
        render_svg(&AnnularMatching::parse(code).unwrap())
    }

    #[test]
    fn two_crosscuts() {
        let svg = render("(|)(|)");
        assert_eq!(svg.matches("class=\"crosscut\"").count(), 2);
        assert_eq!(svg.matches("-arc\"").count(), 0);
        assert_eq!(svg.matches("class=\"endpoint\"").count(), 4);
    }

    #[test]
    fn one_crosscut_one_arc() {
        let svg = render("(UD|)");
        assert_eq!(svg.matches("class=\"crosscut\"").count(), 1);
        assert_eq!(svg.matches("class=\"outer-arc\"").count(), 1);
        assert_eq!(svg.matches("class=\"inner-arc\"").count(), 0);
    }

    #[test]
    fn embedded_code_round_trips() {
        for code in ["(|)(|)", "(UD|)", "(UUDD|UD)(|)(UD|)", "outer:LLRR;inner:LR", "outer:;inner:"] {
            let m = AnnularMatching::parse(code).unwrap();
            let svg = render_svg(&m);
            assert_eq!(code_from_svg(&svg).unwrap(), m, "{code}");
            assert_eq!(svg, render_svg(&m));
        }
        assert!(code_from_svg("<svg/>").is_err());
    }
}
