use crate::exact::Rational;
use crate::partition::PartitionAtlas;

/// Body endpoints in ascending order. An endpoint owned by the interval to
/// its right is prefixed `>`, one owned by the interval to its left `<`;
/// singletons and the open right edge `2` carry no mark.
pub fn render_endpoint_listing(atlas: &PartitionAtlas) -> String {
    let mut points: Vec<(Rational, &'static str)> = Vec::with_capacity(atlas.body.len() + 1);
    for e in &atlas.body {
        let i = &e.interval;
        if i.is_singleton() {
            points.push((i.lo().clone(), ""));
            continue;
        }
        let owned_by_left = points.last().is_some_and(|(p, _)| p == i.lo());
        if !owned_by_left {
            points.push((i.lo().clone(), if i.lo_closed() { ">" } else { "" }));
        }
        if i.hi_closed() {
            points.push((i.hi().clone(), "<"));
        }
    }
    if let Some(last) = atlas.body.last() {
        let hi = last.interval.hi();
        if !last.interval.hi_closed() && points.last().map(|(p, _)| p) != Some(hi) {
            points.push((hi.clone(), ""));
        }
    }
    points.iter().map(|(p, mark)| format!("{mark}{p}")).collect::<Vec<_>>().join(" ")
}
