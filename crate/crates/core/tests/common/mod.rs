#![allow(dead_code)]

use jacquet::{CuspidalContext, Exponent, Multisegment, Segment};

pub fn ctx(twice: i64) -> CuspidalContext {
    CuspidalContext::new(Exponent::from_twice(twice)).unwrap()
}

/// Every non-empty segment inside `[-bound, bound]` on the integral line
/// (`half = false`) or the half-integral one.
pub fn segments_within(bound: i64, half: bool) -> Vec<Segment> {
    let pts: Vec<Exponent> = (-2 * bound..=2 * bound)
        .filter(|t| (t.rem_euclid(2) == 1) == half)
        .map(Exponent::from_twice)
        .collect();
    let mut out = Vec::new();
    for (i, lo) in pts.iter().enumerate() {
        for hi in &pts[i..] {
            out.push(Segment::new(*lo, *hi).unwrap());
        }
    }
    out
}

/// Every multisegment built from `segs` with total degree in `1..=max_degree`.
pub fn multisegments_up_to(segs: &[Segment], max_degree: usize) -> Vec<Multisegment> {
    fn go(segs: &[Segment], start: usize, left: usize, cur: &mut Vec<Segment>, out: &mut Vec<Multisegment>) {
        if !cur.is_empty() {
            out.push(Multisegment::new(cur.clone()));
        }
        for i in start..segs.len() {
            if segs[i].len() <= left {
                cur.push(segs[i]);
                go(segs, i, left - segs[i].len(), cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(segs, 0, max_degree, &mut Vec::new(), &mut out);
    out
}

/// Multisegments of one or two segments drawn from `segs`.
pub fn one_or_two_segments(segs: &[Segment]) -> Vec<Multisegment> {
    let mut out: Vec<Multisegment> = segs.iter().map(|s| Multisegment::single(*s)).collect();
    for (i, a) in segs.iter().enumerate() {
        for b in &segs[i..] {
            out.push(Multisegment::new([*a, *b]));
        }
    }
    out
}
