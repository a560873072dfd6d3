use std::fmt::Write;

use crate::exact::{Interval, Rational};
use crate::partition::{AtlasEntry, PartitionAtlas};
use crate::tail::TailKind;

const WIDTH: i64 = 1000;
const MARGIN: i64 = 40;
const BAR_Y: i64 = 40;
const BAR_H: i64 = 24;
const COORD_PLACES: usize = 3;

/// Horizontal position of `lambda`, computed exactly and rounded only here.
fn x_of(lambda: &Rational) -> String {
    let span = Rational::from(WIDTH - 2 * MARGIN);
    let x = Rational::from(MARGIN) + (lambda + &Rational::from(2)) * span / Rational::from(4);
    x.to_decimal(COORD_PLACES)
}

fn width_of(i: &Interval) -> String {
    let span = Rational::from(WIDTH - 2 * MARGIN);
    ((i.hi() - i.lo()) * span / Rational::from(4)).to_decimal(COORD_PLACES)
}

/// Blue for the shortest cycle in the atlas through red for the longest.
fn color(len: usize, min: usize, max: usize) -> String {
    let hue = if max == min { 240 } else { 240 - 240 * (len - min) / (max - min) };
    format!("hsl({hue},70%,50%)")
}

fn entry(out: &mut String, e: &AtlasEntry, class: &str, min: usize, max: usize) {
    let i = &e.interval;
    let fill = color(e.cycle.len(), min, max);
    let title = format!("<title>{} len {}</title>", i, e.cycle.len());
    if i.is_singleton() {
        let x = x_of(i.lo());
        let _ = writeln!(
            out,
            r#"  <line class="{class}-singleton" x1="{x}" y1="{}" x2="{x}" y2="{}" stroke="{fill}" stroke-width="1.5">{title}</line>"#,
            BAR_Y - 8,
            BAR_Y + BAR_H + 8
        );
    } else {
        let _ = writeln!(
            out,
            r#"  <rect class="{class}-segment" x="{}" y="{BAR_Y}" width="{}" height="{BAR_H}" fill="{fill}" stroke="white" stroke-width="0.5">{title}</rect>"#,
            x_of(i.lo()),
            width_of(i)
        );
    }
}

/// An SVG number line of `(-2, 2)`: body intervals as segments colored by
/// cycle length, singletons as ticks, the closed-form tail hatched, and any
/// bridge entries drawn like body entries under their own class.
pub fn emit_diagram(atlas: &PartitionAtlas) -> String {
    let lens = atlas.body.iter().chain(&atlas.bridge).map(|e| e.cycle.len());
    let (min, max) = (lens.clone().min().unwrap_or(1), lens.max().unwrap_or(1));
    let height = BAR_Y + BAR_H + 40;
    let mut out = String::new();
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH}" height="{height}" viewBox="0 0 {WIDTH} {height}">"#
    );
    out.push_str(concat!(
        "  <defs>\n",
        "    <pattern id=\"hatch\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\" patternTransform=\"rotate(45)\">\n",
        "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#555\" stroke-width=\"2\"/>\n",
        "    </pattern>\n",
        "  </defs>\n",
    ));
    let _ = writeln!(
        out,
        r#"  <text x="{MARGIN}" y="20" font-family="monospace" font-size="12">({},{}) s={} d={} K={}: {} intervals, {} singletons, max length {}</text>"#,
        atlas.a0,
        atlas.a1,
        atlas.tail.label.s,
        atlas.tail.label.d,
        atlas.tail.label.k_min,
        atlas.stats.intervals,
        atlas.stats.singletons,
        atlas.stats.max_len
    );
    if atlas.tail.kind != TailKind::Full {
        let t = &atlas.tail.interval;
        let _ = writeln!(
            out,
            r##"  <rect class="tail" x="{}" y="{BAR_Y}" width="{}" height="{BAR_H}" fill="url(#hatch)" stroke="#555" stroke-width="0.5"><title>tail {}</title></rect>"##,
            x_of(t.lo()),
            width_of(t),
            t
        );
    }
    for e in atlas.bridge.iter().filter(|e| !e.interval.is_singleton()) {
        entry(&mut out, e, "bridge", min, max);
    }
    for e in atlas.body.iter().filter(|e| !e.interval.is_singleton()) {
        entry(&mut out, e, "body", min, max);
    }
    // Ticks go last so segments never cover them.
    for e in atlas.bridge.iter().filter(|e| e.interval.is_singleton()) {
        entry(&mut out, e, "bridge", min, max);
    }
    for e in atlas.body.iter().filter(|e| e.interval.is_singleton()) {
        entry(&mut out, e, "body", min, max);
    }
    for v in -2..=2 {
        let x = x_of(&Rational::from(v));
        let _ = writeln!(
            out,
            r#"  <text x="{x}" y="{}" font-family="monospace" font-size="11" text-anchor="middle">{v}</text>"#,
            BAR_Y + BAR_H + 24
        );
    }
    out.push_str("</svg>\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{compute_atlas, Limits};

    fn count(svg: &str, class: &str) -> usize {
        svg.matches(&format!("class=\"{class}\"")).count()
    }

    #[test]
    fn element_counts() {
        let svg = emit_diagram(&compute_atlas(0, 0, &Limits::default()).unwrap());
        assert_eq!((count(&svg, "body-segment"), count(&svg, "tail")), (1, 0));
        assert!(svg.contains(r#"x="40.000" y="40" width="920.000""#));

        let svg = emit_diagram(&compute_atlas(-1, -1, &Limits::default()).unwrap());
        assert_eq!(count(&svg, "body-segment"), 11);
        assert_eq!(count(&svg, "body-singleton"), 11);
        assert_eq!(count(&svg, "tail"), 1);
        assert!(svg.contains("<title>tail (-2,-1)</title>"));
    }

    #[test]
    fn deterministic() {
        let atlas = compute_atlas(2, 3, &Limits::default()).unwrap();
        let svg = emit_diagram(&atlas);
        assert_eq!(svg, emit_diagram(&atlas));
        assert_eq!(count(&svg, "bridge-segment") + count(&svg, "bridge-singleton"), 3);
    }
}
