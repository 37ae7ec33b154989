//! An independent Conway-polynomial engine.
//!
//! The polynomial is computed straight from the defining relations: switch a
//! crossing that violates descending order and splice it, recursing until
//! every component is descending (`∇ = 1` for one component, `0` for a split
//! rest). This is exponential and deliberately naive — it exists as an
//! oracle against which the optimized degree-two scan in [`crate::knot`] is
//! verified, so the two implementations must share no code.

use crate::curve::Hand;
use std::collections::BTreeMap;

/// One passage through a crossing: `(label, slot)` where slot `0` is the
/// first based occurrence of the label and `1` the second.
pub type Passage = (u32, u8);

/// A closed component, as its cyclic list of passages.
pub type Component = Vec<Passage>;

/// Sign of a crossing given handedness and which passage goes over
/// (`over == 0` means the first passage is the over-strand).
pub fn sign_of(hand: Hand, over: u8) -> i64 {
    let hv = hand.value();
    if over == 0 {
        -hv
    } else {
        hv
    }
}

/// Replace the crossing `x` by its oriented smoothing.
fn splice(comps: &[Component], x: u32) -> Vec<Component> {
    let mut loc: Vec<(usize, usize)> = Vec::with_capacity(2);
    for (ci, comp) in comps.iter().enumerate() {
        for (pi, &(y, _)) in comp.iter().enumerate() {
            if y == x {
                loc.push((ci, pi));
            }
        }
    }
    assert_eq!(loc.len(), 2, "label {x} must occur exactly twice");
    let ((c1, p1), (c2, p2)) = (loc[0], loc[1]);
    if c1 == c2 {
        let comp = &comps[c1];
        let (a, b) = (p1.min(p2), p1.max(p2));
        let part_a: Component = comp[a + 1..b].to_vec();
        let part_b: Component = comp[b + 1..]
            .iter()
            .chain(comp[..a].iter())
            .copied()
            .collect();
        let mut out: Vec<Component> = comps
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != c1)
            .map(|(_, c)| c.clone())
            .collect();
        out.push(part_a);
        out.push(part_b);
        out
    } else {
        let (comp1, comp2) = (&comps[c1], &comps[c2]);
        let merged: Component = comp1[..p1]
            .iter()
            .chain(comp2[p2 + 1..].iter())
            .chain(comp2[..p2].iter())
            .chain(comp1[p1 + 1..].iter())
            .copied()
            .collect();
        let mut out = vec![merged];
        out.extend(
            comps
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != c1 && i != c2)
                .map(|(_, c)| c.clone()),
        );
        out
    }
}

/// Conway polynomial of a resolved link, coefficients of 1, z, z², ...
/// `crs` maps each label to its handedness and over-slot.
fn nabla(comps: &[Component], crs: &BTreeMap<u32, (Hand, u8)>) -> Vec<i64> {
    if comps.iter().any(|c| c.is_empty()) {
        return if comps.len() == 1 { vec![1] } else { vec![0] };
    }
    // First label whose first-visited passage is the under-strand.
    let mut seen: std::collections::BTreeSet<u32> = std::collections::BTreeSet::new();
    let mut violated: Option<u32> = None;
    'outer: for comp in comps {
        for &(x, s) in comp {
            if !seen.insert(x) {
                continue;
            }
            if crs[&x].1 != s {
                violated = Some(x);
                break 'outer;
            }
        }
    }
    let Some(vi) = violated else {
        // Fully descending: an unknot, or a split link.
        return if comps.len() == 1 { vec![1] } else { vec![0] };
    };
    let (h, over) = crs[&vi];
    let eps = sign_of(h, over);
    let mut switched = crs.clone();
    switched.insert(vi, (h, 1 - over));
    let p1 = nabla(comps, &switched);
    let mut without = crs.clone();
    without.remove(&vi);
    let p0 = nabla(&splice(comps, vi), &without);
    // p1 + z * eps * p0
    let mut out = p1;
    if out.len() < p0.len() + 1 {
        out.resize(p0.len() + 1, 0);
    }
    for (i, &co) in p0.iter().enumerate() {
        out[i + 1] += eps * co;
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Single component of a based double-occurrence word, with passage slots.
pub fn knot_component(seq: &[u32]) -> Component {
    let mut first: BTreeMap<u32, usize> = BTreeMap::new();
    let mut comp = Vec::with_capacity(seq.len());
    for (p, &x) in seq.iter().enumerate() {
        if let std::collections::btree_map::Entry::Vacant(e) = first.entry(x) {
            e.insert(p);
            comp.push((x, 0));
        } else {
            comp.push((x, 1));
        }
    }
    comp
}

/// Conway polynomial of the knot given by a based double-occurrence word
/// with handedness and over-slot data.
pub fn nabla_of(seq: &[u32], hand: &BTreeMap<u32, Hand>, over: &BTreeMap<u32, u8>) -> Vec<i64> {
    let crs: BTreeMap<u32, (Hand, u8)> = hand.iter().map(|(&x, &h)| (x, (h, over[&x]))).collect();
    nabla(&[knot_component(seq)], &crs)
}

/// Degree-two coefficient computed through the full polynomial.
pub fn a2_from_nabla(seq: &[u32], hand: &BTreeMap<u32, Hand>, over: &BTreeMap<u32, u8>) -> i64 {
    let co = nabla_of(seq, hand, over);
    co.get(2).copied().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hands(pairs: &[(u32, Hand)]) -> BTreeMap<u32, Hand> {
        pairs.iter().copied().collect()
    }

    fn overs(pairs: &[(u32, u8)]) -> BTreeMap<u32, u8> {
        pairs.iter().copied().collect()
    }

    #[test]
    fn unknot_polynomial_is_one() {
        assert_eq!(nabla_of(&[], &BTreeMap::new(), &BTreeMap::new()), vec![1]);
    }

    #[test]
    fn alternating_trefoil_polynomial() {
        let seq = [1, 2, 3, 1, 2, 3];
        let hand = hands(&[(1, Hand::L), (2, Hand::R), (3, Hand::L)]);
        let over = overs(&[(1, 0), (2, 1), (3, 0)]);
        assert_eq!(nabla_of(&seq, &hand, &over), vec![1, 0, 1]);
        assert_eq!(a2_from_nabla(&seq, &hand, &over), 1);
    }

    #[test]
    fn kink_resolutions_are_trivial() {
        let seq = [1, 1];
        for h in [Hand::L, Hand::R] {
            for o in [0u8, 1] {
                let hand = hands(&[(1, h)]);
                let over = overs(&[(1, o)]);
                assert_eq!(nabla_of(&seq, &hand, &over), vec![1]);
            }
        }
    }

    #[test]
    fn splice_within_one_component() {
        // (1, 2, 1, 2) spliced at 1 leaves the two arcs between its passages.
        let comp = vec![(1, 0), (2, 0), (1, 1), (2, 1)];
        let out = splice(&[comp], 1);
        assert_eq!(out, vec![vec![(2, 0)], vec![(2, 1)]]);
    }

    #[test]
    fn splice_merges_two_components() {
        let c1 = vec![(1, 0), (2, 0)];
        let c2 = vec![(3, 0), (1, 1), (3, 1)];
        let out = splice(&[c1, c2], 1);
        assert_eq!(out, vec![vec![(3, 1), (3, 0), (2, 0)]]);
    }
}
