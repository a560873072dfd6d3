use rotation_atlas::partition::{compute_atlas, Limits};
use rotation_atlas::report::render_endpoint_listing;

const LISTINGS: &str = include_str!("data/endpoint_listings.txt");

fn goldens() -> Vec<((i64, i64), &'static str)> {
    LISTINGS
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let (point, listing) = l.split_once(':').unwrap();
            let mut it = point.split_whitespace().map(|t| t.parse::<i64>().unwrap());
            ((it.next().unwrap(), it.next().unwrap()), listing.trim())
        })
        .collect()
}

#[test]
fn every_point_up_to_two_is_listed() {
    let mut points: Vec<_> = goldens().into_iter().map(|(p, _)| p).collect();
    points.sort();
    let mut expected: Vec<_> = (-2..=2).flat_map(|a| (-2..=2).map(move |b| (a, b))).filter(|&p| p != (0, 0)).collect();
    expected.sort();
    assert_eq!(points, expected);
}

#[test]
fn listings_match() {
    let mut mismatches = Vec::new();
    for ((a0, a1), want) in goldens() {
        let got = render_endpoint_listing(&compute_atlas(a0, a1, &Limits::default()).unwrap());
        if got != want {
            mismatches.push(format!("({a0},{a1})\n  want {want}\n  got  {got}"));
        }
    }
    assert!(mismatches.is_empty(), "{}", mismatches.join("\n"));
}
