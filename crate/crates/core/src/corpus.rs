//! Exhaustive enumeration of small curves.
//!
//! Curves are enumerated bottom-up: all chord diagrams on `c` chords (as
//! perfect matchings of `2c` base points, deduplicated to canonical words),
//! then all `2^c` handedness assignments, keeping the realizable ones, and
//! finally deduplicating to canonical curve classes (minimal word/handedness
//! representative over all base-point rotations).

use crate::curve::{canonical_word, Hand, PlaneCurve};
use std::collections::BTreeSet;

/// A canonical curve class: the minimal `(word, handedness)` representative,
/// with labels `0..c` by first appearance and handedness indexed by label.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CurveClass {
    pub word: Vec<u32>,
    pub hands: Vec<Hand>,
}

impl CurveClass {
    pub fn curve(&self) -> PlaneCurve {
        PlaneCurve::from_canonical(&self.word, &self.hands)
            .expect("class representatives are well-formed")
    }

    pub fn crossing_count(&self) -> usize {
        self.hands.len()
    }
}

fn visit_pairings(pts: &[usize], next_label: u32, seq: &mut [u32], out: &mut BTreeSet<Vec<u32>>) {
    if pts.is_empty() {
        out.insert(canonical_word(seq));
        return;
    }
    let a = pts[0];
    for i in 1..pts.len() {
        let b = pts[i];
        let rest: Vec<usize> = pts[1..i]
            .iter()
            .chain(pts[i + 1..].iter())
            .copied()
            .collect();
        seq[a] = next_label;
        seq[b] = next_label;
        visit_pairings(&rest, next_label + 1, seq, out);
    }
}

/// All canonical double-occurrence words on `c` chords, sorted.
pub fn all_canonical_words(c: usize) -> Vec<Vec<u32>> {
    let mut seen: BTreeSet<Vec<u32>> = BTreeSet::new();
    let pts: Vec<usize> = (0..2 * c).collect();
    let mut seq = vec![0u32; 2 * c];
    visit_pairings(&pts, 0, &mut seq, &mut seen);
    seen.into_iter().collect()
}

/// Handedness assignment for labels `0..c` from the bits of `mask`, most
/// significant bit first (so masks in `0..2^c` run in lexicographic order).
fn hands_from_mask(c: usize, mask: u64) -> Vec<Hand> {
    (0..c)
        .map(|i| {
            if (mask >> (c - 1 - i)) & 1 == 0 {
                Hand::L
            } else {
                Hand::R
            }
        })
        .collect()
}

fn curve_from(word: &[u32], hands: &[Hand]) -> PlaneCurve {
    PlaneCurve::new(
        word.to_vec(),
        hands
            .iter()
            .enumerate()
            .map(|(i, &h)| (i as u32, h))
            .collect::<Vec<_>>(),
    )
    .expect("canonical words are double-occurrence")
}

/// Census of the curves on `c` crossings.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Census {
    pub canonical_words: usize,
    /// Words admitting at least one realizable handedness.
    pub realizable_words: usize,
    /// Realizable `(word, handedness)` pairs.
    pub realizable_pairs: usize,
    /// Curve classes after base-point canonicalization.
    pub curve_classes: usize,
}

fn enumerate(c: usize) -> (Vec<Vec<u32>>, usize, BTreeSet<CurveClass>) {
    let words = all_canonical_words(c);
    let mut realizable_words = Vec::new();
    let mut pairs = 0usize;
    let mut classes: BTreeSet<CurveClass> = BTreeSet::new();
    for word in &words {
        let mut any = false;
        for mask in 0..(1u64 << c) {
            let hands = hands_from_mask(c, mask);
            let curve = curve_from(word, &hands);
            if curve.is_realizable() {
                any = true;
                pairs += 1;
                let (w, hv) = curve.canonical();
                classes.insert(CurveClass { word: w, hands: hv });
            }
        }
        if any {
            realizable_words.push(word.clone());
        }
    }
    (realizable_words, pairs, classes)
}

/// Canonical words admitting at least one realizable handedness, sorted.
pub fn realizable_words(c: usize) -> Vec<Vec<u32>> {
    enumerate(c).0
}

/// All realizable curve classes on `c` crossings, sorted.
pub fn curve_classes(c: usize) -> Vec<CurveClass> {
    enumerate(c).2.into_iter().collect()
}

pub fn census(c: usize) -> Census {
    let canonical_words = all_canonical_words(c).len();
    let (rwords, pairs, classes) = enumerate(c);
    Census {
        canonical_words,
        realizable_words: rwords.len(),
        realizable_pairs: pairs,
        curve_classes: classes.len(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conway;
    use crate::curve::ChordDiagram;
    use crate::dyadic::Dyadic;
    use crate::knot::{a2_avg, for_each_resolution, KnotDiagram};

    #[test]
    fn census_matches_reference_table() {
        let expect = [
            (1, 1, 1, 1),
            (1, 1, 2, 1),
            (2, 1, 4, 3),
            (5, 3, 18, 9),
            (18, 5, 54, 37),
            (105, 15, 244, 182),
        ];
        for (c, &(words, rwords, pairs, classes)) in expect.iter().enumerate() {
            let census = census(c);
            assert_eq!(
                census,
                Census {
                    canonical_words: words,
                    realizable_words: rwords,
                    realizable_pairs: pairs,
                    curve_classes: classes,
                },
                "census at {c} crossings"
            );
        }
    }

    #[test]
    fn six_crossing_census() {
        let census = census(6);
        assert_eq!(census.canonical_words, 902);
        assert_eq!(census.realizable_words, 55);
        assert_eq!(census.realizable_pairs, 1330);
        assert_eq!(census.curve_classes, 1143);
    }

    #[test]
    fn three_crossing_class_table() {
        use Hand::{L, R};
        let classes = curve_classes(3);
        let rows: Vec<(Vec<u32>, Vec<Hand>, Dyadic)> = classes
            .iter()
            .map(|cl| {
                let avg = a2_avg(&cl.curve(), 20).unwrap();
                (cl.word.clone(), cl.hands.clone(), avg)
            })
            .collect();
        let z = Dyadic::ZERO;
        let expect = vec![
            (vec![0, 0, 1, 1, 2, 2], vec![L, L, L], z),
            (vec![0, 0, 1, 1, 2, 2], vec![L, L, R], z),
            (vec![0, 0, 1, 1, 2, 2], vec![L, R, R], z),
            (vec![0, 0, 1, 1, 2, 2], vec![R, R, R], z),
            (vec![0, 0, 1, 2, 2, 1], vec![L, L, L], z),
            (vec![0, 0, 1, 2, 2, 1], vec![L, L, R], z),
            (vec![0, 0, 1, 2, 2, 1], vec![L, R, R], z),
            (vec![0, 0, 1, 2, 2, 1], vec![R, L, R], z),
            (vec![0, 1, 2, 0, 1, 2], vec![L, R, L], Dyadic::new(1, 2)),
        ];
        assert_eq!(rows, expect);
    }

    #[test]
    fn class_average_digests() {
        // (sum of averages, sum of squared averages) per crossing count.
        let expect = [
            (Dyadic::ZERO, Dyadic::ZERO),
            (Dyadic::ZERO, Dyadic::ZERO),
            (Dyadic::ZERO, Dyadic::ZERO),
            (Dyadic::new(1, 2), Dyadic::new(1, 4)),
            (Dyadic::from_int(1), Dyadic::new(1, 2)),
            (Dyadic::new(39, 2), Dyadic::new(41, 4)),
        ];
        for (c, &(sum, sumsq)) in expect.iter().enumerate() {
            let mut tot = Dyadic::ZERO;
            let mut totsq = Dyadic::ZERO;
            for class in curve_classes(c) {
                let avg = a2_avg(&class.curve(), 20).unwrap();
                tot += avg;
                totsq += avg * avg;
            }
            assert_eq!((tot, totsq), (sum, sumsq), "digest at {c} crossings");
        }
    }

    #[test]
    fn six_crossing_average_digests() {
        let mut tot = Dyadic::ZERO;
        let mut totsq = Dyadic::ZERO;
        for class in curve_classes(6) {
            let avg = a2_avg(&class.curve(), 20).unwrap();
            tot += avg;
            totsq += avg * avg;
        }
        assert_eq!(tot, Dyadic::from_int(84));
        assert_eq!(totsq, Dyadic::new(177, 3));
    }

    #[test]
    fn scan_agrees_with_conway_recursion() {
        // Every resolution of every realizable pair up to 4 crossings, plus
        // the alternating resolution of every 5-crossing class.
        for c in 0..=4 {
            for word in realizable_words(c) {
                for mask in 0..(1u64 << c) {
                    let hands = hands_from_mask(c, mask);
                    let curve = curve_from(&word, &hands);
                    if !curve.is_realizable() {
                        continue;
                    }
                    let labels: Vec<u32> = curve.labels().collect();
                    for_each_resolution(&labels, |over| {
                        let k = KnotDiagram::new(curve.clone(), over.clone()).unwrap();
                        assert_eq!(
                            k.a2(),
                            conway::a2_from_nabla(curve.sequence(), curve.handedness(), over),
                            "disagreement on {word:?} mask {mask} over {over:?}"
                        );
                        Ok(())
                    })
                    .unwrap();
                }
            }
        }
        for class in curve_classes(5) {
            let k = KnotDiagram::alternating(class.curve()).unwrap();
            assert_eq!(k.a2_crosschecked().unwrap(), k.a2());
        }
    }

    #[test]
    fn alternating_resolutions_realize_the_small_knot_table() {
        let mut nablas: BTreeSet<Vec<i64>> = BTreeSet::new();
        for c in 1..=5 {
            for class in curve_classes(c) {
                let k = KnotDiagram::alternating(class.curve()).unwrap();
                nablas.insert(k.nabla());
            }
        }
        let expect: Vec<Vec<i64>> = vec![
            vec![1],
            vec![1, 0, -1],
            vec![1, 0, 1],
            vec![1, 0, 2],
            vec![1, 0, 3, 0, 1],
        ];
        assert_eq!(nablas.into_iter().collect::<Vec<_>>(), expect);
    }

    #[test]
    fn a2_value_partition_by_crossing_count() {
        // (classes, classes with a nonzero a2 resolution, classes with an
        // a2 = -1 resolution).
        let expect = [
            (1, 0, 0),
            (1, 0, 0),
            (3, 0, 0),
            (9, 1, 0),
            (37, 5, 1),
            (182, 46, 9),
        ];
        for (c, &(total, nonzero, minus_one)) in expect.iter().enumerate() {
            let classes = curve_classes(c);
            let mut nnz = 0;
            let mut nm1 = 0;
            for class in &classes {
                let curve = class.curve();
                let labels: Vec<u32> = curve.labels().collect();
                let mut any_nz = false;
                let mut any_m1 = false;
                for_each_resolution(&labels, |over| {
                    let k = KnotDiagram::new(curve.clone(), over.clone()).unwrap();
                    let a2 = k.a2();
                    any_nz |= a2 != 0;
                    any_m1 |= a2 == -1;
                    Ok(())
                })
                .unwrap();
                nnz += any_nz as usize;
                nm1 += any_m1 as usize;
            }
            assert_eq!(
                (classes.len(), nnz, nm1),
                (total, nonzero, minus_one),
                "partition at {c} crossings"
            );
        }
    }

    #[test]
    fn reducibility_matches_pattern_containment_on_small_words() {
        let c1 = ChordDiagram::interleaved_pair();
        for c in 0..=5 {
            for word in realizable_words(c) {
                let hands = vec![Hand::L; c];
                let curve = curve_from(&word, &hands);
                assert_eq!(
                    curve.r1_reducible(),
                    curve.contains(&c1).is_none(),
                    "word {word:?}"
                );
            }
        }
    }
}
