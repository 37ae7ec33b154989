//! Over/under resolutions of plane curves and degree-two invariants.
//!
//! A [`KnotDiagram`] is a realizable plane curve together with one over/under
//! bit per crossing (`0` = the first based passage goes over). The central
//! invariant is the degree-two Conway coefficient `a2`, computed by a single
//! based scan: walking the word from the base point, each first passage that
//! runs *under* contributes `sign · linking-of-splice` and is then switched
//! to run over; the contributions telescope the skein relation down the
//! descending order. The [`crate::conway`] engine recomputes the same number
//! independently for cross-checks.
//!
//! Averaging `a2` over all `2^c` resolutions of a curve gives a curve
//! invariant with denominator a power of two; enumerating resolutions is
//! exponential, so it is guarded by an explicit cap and refuses — never
//! samples — beyond it.

use crate::conway;
use crate::curve::{Hand, PlaneCurve};
use crate::diagram::Diagram;
use crate::dyadic::Dyadic;
use crate::error::{Error, Result};
use crate::graph::VertexId;
use std::collections::BTreeMap;

/// Largest crossing count for which resolution averages are enumerated by
/// default (2^20 resolutions).
pub const DEFAULT_RESOLUTION_CAP: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotDiagram {
    curve: PlaneCurve,
    over: BTreeMap<u32, u8>,
}

impl KnotDiagram {
    /// A resolved diagram: `over[x] = 0` places the first based passage of
    /// `x` on top, `1` the second. The underlying curve must be realizable.
    pub fn new(curve: PlaneCurve, over: BTreeMap<u32, u8>) -> Result<KnotDiagram> {
        curve.require_planar()?;
        let labels: Vec<u32> = curve.labels().collect();
        let keys: Vec<u32> = over.keys().copied().collect();
        if labels != keys {
            return Err(Error::invalid(format!(
                "over/under bits must cover exactly the crossing labels {labels:?}, got {keys:?}"
            )));
        }
        if let Some((&x, &b)) = over.iter().find(|&(_, &b)| b > 1) {
            return Err(Error::invalid(format!(
                "over bit for crossing {x} must be 0 or 1, got {b}"
            )));
        }
        Ok(KnotDiagram { curve, over })
    }

    /// The alternating resolution: over exactly at even first positions, so
    /// the strand alternates over, under, over, ... along the word.
    pub fn alternating(curve: PlaneCurve) -> Result<KnotDiagram> {
        let over = curve
            .positions()
            .iter()
            .map(|(&x, &(p1, _))| (x, (p1 % 2) as u8))
            .collect();
        KnotDiagram::new(curve, over)
    }

    pub fn curve(&self) -> &PlaneCurve {
        &self.curve
    }

    pub fn over_bits(&self) -> &BTreeMap<u32, u8> {
        &self.over
    }

    pub fn crossing_count(&self) -> usize {
        self.curve.crossing_count()
    }

    /// Sign of a crossing in the resolved diagram.
    pub fn crossing_sign(&self, label: u32) -> Result<i64> {
        let hand = self
            .curve
            .hand_of(label)
            .ok_or_else(|| Error::invalid(format!("no crossing labelled {label}")))?;
        Ok(conway::sign_of(hand, self.over[&label]))
    }

    pub fn writhe(&self) -> i64 {
        self.curve
            .labels()
            .map(|x| self.crossing_sign(x).expect("label exists"))
            .sum()
    }

    /// The same diagram with the crossing `label` switched to `sign` (+1 or
    /// -1) by choosing its over/under bit.
    pub fn with_sign(&self, label: u32, sign: i64) -> Result<KnotDiagram> {
        if sign != 1 && sign != -1 {
            return Err(Error::invalid(format!(
                "crossing sign must be +1 or -1, got {sign}"
            )));
        }
        let hand = self
            .curve
            .hand_of(label)
            .ok_or_else(|| Error::invalid(format!("no crossing labelled {label}")))?;
        let bit = [0u8, 1]
            .into_iter()
            .find(|&b| conway::sign_of(hand, b) == sign)
            .expect("one bit per sign");
        let mut over = self.over.clone();
        over.insert(label, bit);
        KnotDiagram::new(self.curve.clone(), over)
    }

    /// Linking number of the two-component link produced by the oriented
    /// smoothing at `label`: splitting the loop at that crossing's two
    /// visits leaves two closed components, and the linking number is half
    /// the signed count of the crossings joining them.
    pub fn smoothing_linking_number(&self, label: u32) -> Result<i64> {
        let pos = self.curve.positions();
        let &(p1, p2) = pos
            .get(&label)
            .ok_or_else(|| Error::invalid(format!("no crossing labelled {label}")))?;
        let mut total = 0i64;
        for (&y, &(q1, q2)) in &pos {
            if y == label {
                continue;
            }
            let split = ((p1 < q1 && q1 < p2) != (p1 < q2 && q2 < p2)) as i64;
            total += split * self.crossing_sign(y)?;
        }
        debug_assert_eq!(total % 2, 0, "two closed curves cross evenly");
        Ok(total / 2)
    }

    /// Degree-two Conway coefficient, by the one-pass based scan.
    pub fn a2(&self) -> i64 {
        let il = self.curve.interleave_lists();
        a2_scan(
            self.curve.sequence(),
            self.curve.handedness(),
            &self.over,
            &il,
        )
    }

    /// Full Conway polynomial via the independent recursive engine.
    pub fn nabla(&self) -> Vec<i64> {
        conway::nabla_of(self.curve.sequence(), self.curve.handedness(), &self.over)
    }

    /// `a2` computed through both implementations, erroring on disagreement.
    pub fn a2_crosschecked(&self) -> Result<i64> {
        let fast = self.a2();
        let slow =
            conway::a2_from_nabla(self.curve.sequence(), self.curve.handedness(), &self.over);
        if fast != slow {
            return Err(Error::structural(format!(
                "degree-two coefficient disagreement: scan {fast}, recursion {slow}"
            )));
        }
        Ok(fast)
    }

    /// Mirror image: every handedness flips, over/under bits stay.
    pub fn mirror(&self) -> KnotDiagram {
        let hand: BTreeMap<u32, Hand> = self
            .curve
            .handedness()
            .iter()
            .map(|(&x, &h)| (x, h.flip()))
            .collect();
        let curve = PlaneCurve::new(self.curve.sequence().to_vec(), hand)
            .expect("mirror preserves the word");
        KnotDiagram {
            curve,
            over: self.over.clone(),
        }
    }

    /// Move the base point `r` steps along the strand. Crossings whose
    /// passages straddle the old base point swap passage order, so both
    /// their stored handedness and their over bit flip.
    pub fn rotate(&self, r: usize) -> KnotDiagram {
        let pos = self.curve.positions();
        let curve = self.curve.rotate(r);
        let over = pos
            .iter()
            .map(|(&x, &(p1, p2))| {
                let b = self.over[&x];
                (x, if p1 < r && r <= p2 { 1 - b } else { b })
            })
            .collect();
        KnotDiagram { curve, over }
    }
}

/// The one-pass degree-two scan over a based word.
pub(crate) fn a2_scan(
    seq: &[u32],
    hand: &BTreeMap<u32, Hand>,
    over: &BTreeMap<u32, u8>,
    il: &BTreeMap<u32, Vec<u32>>,
) -> i64 {
    let mut first: BTreeMap<u32, usize> = BTreeMap::new();
    for (p, &x) in seq.iter().enumerate() {
        first.entry(x).or_insert(p);
    }
    let mut ov = over.clone();
    let mut total = 0i64;
    for (p, &x) in seq.iter().enumerate() {
        if first[&x] == p && ov[&x] != 0 {
            let eps = conway::sign_of(hand[&x], ov[&x]);
            let lam2: i64 = il[&x].iter().map(|y| conway::sign_of(hand[y], ov[y])).sum();
            debug_assert_eq!(lam2 % 2, 0, "interleavement count must be even");
            total += eps * (lam2 / 2);
            ov.insert(x, 0);
        }
    }
    total
}

/// Visit every over/under assignment of `labels`, in lexicographic order of
/// the bit vector read label-ascending. The closure may stop the walk early
/// by returning an error.
pub fn for_each_resolution<F>(labels: &[u32], mut f: F) -> Result<()>
where
    F: FnMut(&BTreeMap<u32, u8>) -> Result<()>,
{
    let c = labels.len();
    assert!(c < 63, "resolution enumeration limited to 62 crossings");
    let mut over: BTreeMap<u32, u8> = labels.iter().map(|&x| (x, 0)).collect();
    for m in 0..(1u64 << c) {
        for (i, &x) in labels.iter().enumerate() {
            over.insert(x, ((m >> (c - 1 - i)) & 1) as u8);
        }
        f(&over)?;
    }
    Ok(())
}

/// Average of the degree-two coefficient over all `2^c` resolutions of a
/// realizable curve. Refuses curves with more than `cap` crossings.
pub fn a2_avg(curve: &PlaneCurve, cap: usize) -> Result<Dyadic> {
    curve.require_planar()?;
    let c = curve.crossing_count();
    if c > cap {
        return Err(Error::cap(c, cap, String::new()));
    }
    let labels: Vec<u32> = curve.labels().collect();
    let il = curve.interleave_lists();
    let mut total = 0i64;
    for_each_resolution(&labels, |over| {
        total += a2_scan(curve.sequence(), curve.handedness(), over, &il);
        Ok(())
    })?;
    Ok(Dyadic::new(total, c as u32))
}

/// One cycle's contribution to an averaged-invariant sum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlphaRow {
    pub cycle: Vec<VertexId>,
    pub crossings: usize,
    pub average: Dyadic,
}

/// Sum of averaged degree-two coefficients over all cycles of the given
/// length in the diagram's graph, visiting cycles in canonical order. Any
/// cycle whose restriction exceeds `cap` crossings aborts the sum with a
/// cap-exceeded error naming that cycle.
pub fn alpha(diag: &Diagram, cycle_len: usize, cap: usize) -> Result<(Dyadic, Vec<AlphaRow>)> {
    diag.require_planar()?;
    let graph = diag.graph();
    let cycles = graph.cycles(cycle_len);
    if cycles.is_empty() {
        return Err(Error::invalid(format!(
            "graph has no cycles of length {cycle_len}"
        )));
    }
    let mut rows = Vec::with_capacity(cycles.len());
    let mut total = Dyadic::ZERO;
    for cycle in cycles {
        let curve = diag.restrict_to_cycle(&cycle)?;
        let average = a2_avg(&curve, cap).map_err(|e| match e {
            Error::CapExceeded { crossings, cap, .. } => {
                Error::cap(crossings, cap, format!("cycle {cycle:?}"))
            }
            other => other,
        })?;
        total += average;
        rows.push(AlphaRow {
            crossings: curve.crossing_count(),
            cycle,
            average,
        });
    }
    Ok((total, rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::convex_drawing;
    use crate::graph::Graph;

    #[test]
    fn trefoil_invariants() {
        let t = PlaneCurve::trefoil();
        let k = KnotDiagram::alternating(t.clone()).unwrap();
        assert_eq!(k.over_bits(), &BTreeMap::from([(1, 0), (2, 1), (3, 0)]));
        assert_eq!(k.nabla(), vec![1, 0, 1]);
        assert_eq!(k.a2(), 1);
        assert_eq!(k.a2_crosschecked().unwrap(), 1);
        assert_eq!(a2_avg(&t, 20).unwrap(), Dyadic::new(1, 2));
    }

    #[test]
    fn figure_eight_invariants() {
        let f = PlaneCurve::figure_eight();
        let k = KnotDiagram::alternating(f.clone()).unwrap();
        assert_eq!(k.nabla(), vec![1, 0, -1]);
        assert_eq!(k.a2(), -1);
        assert_eq!(a2_avg(&f, 20).unwrap(), Dyadic::ZERO);
        // The other valid handedness assignment gives the same values.
        let hand: BTreeMap<u32, Hand> = f
            .handedness()
            .iter()
            .map(|(&x, &h)| (x, h.flip()))
            .collect();
        let f2 = PlaneCurve::new(f.sequence().to_vec(), hand).unwrap();
        assert!(f2.is_realizable());
        let k2 = KnotDiagram::alternating(f2.clone()).unwrap();
        assert_eq!(k2.nabla(), vec![1, 0, -1]);
        assert_eq!(k2.a2(), -1);
        assert_eq!(a2_avg(&f2, 20).unwrap(), Dyadic::ZERO);
    }

    #[test]
    fn torus_knot_five_one_alternating_polynomial() {
        let seq: Vec<u32> = vec![1, 2, 3, 4, 5, 1, 2, 3, 4, 5];
        let mut nablas = std::collections::BTreeSet::new();
        let mut found = 0;
        for bits in 0..32u32 {
            let hand: BTreeMap<u32, Hand> = (0..5)
                .map(|i| {
                    (
                        i as u32 + 1,
                        if (bits >> i) & 1 == 0 {
                            Hand::L
                        } else {
                            Hand::R
                        },
                    )
                })
                .collect();
            let Ok(curve) = PlaneCurve::new(seq.clone(), hand) else {
                continue;
            };
            if !curve.is_realizable() {
                continue;
            }
            found += 1;
            let k = KnotDiagram::alternating(curve).unwrap();
            nablas.insert(k.nabla());
        }
        assert!(found > 0);
        assert_eq!(
            nablas.into_iter().collect::<Vec<_>>(),
            vec![vec![1, 0, 3, 0, 1]]
        );
    }

    #[test]
    fn kink_averages_to_zero() {
        for h in [Hand::L, Hand::R] {
            let k = PlaneCurve::kink(h);
            assert_eq!(a2_avg(&k, 20).unwrap(), Dyadic::ZERO);
        }
    }

    #[test]
    fn average_refuses_beyond_cap() {
        let t = PlaneCurve::trefoil();
        match a2_avg(&t, 2) {
            Err(Error::CapExceeded { crossings, cap, .. }) => {
                assert_eq!((crossings, cap), (3, 2));
            }
            other => panic!("expected cap refusal, got {other:?}"),
        }
    }

    #[test]
    fn resolution_order_is_lexicographic() {
        let mut seen: Vec<Vec<u8>> = Vec::new();
        for_each_resolution(&[1, 2], |over| {
            seen.push(over.values().copied().collect());
            Ok(())
        })
        .unwrap();
        assert_eq!(seen, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
    }

    #[test]
    fn scan_is_base_point_invariant() {
        let f = PlaneCurve::figure_eight();
        let k = KnotDiagram::alternating(f).unwrap();
        let reference = k.a2();
        for r in 0..8 {
            let rotated = k.rotate(r);
            assert_eq!(rotated.a2(), reference, "rotation by {r}");
            assert_eq!(rotated.a2_crosschecked().unwrap(), reference);
        }
    }

    #[test]
    fn mirror_negates_writhe_and_preserves_a2() {
        let t = PlaneCurve::trefoil();
        let k = KnotDiagram::alternating(t).unwrap();
        let m = k.mirror();
        assert_eq!(m.writhe(), -k.writhe());
        assert_eq!(m.a2(), k.a2());
        assert_eq!(m.a2_crosschecked().unwrap(), k.a2());
    }

    #[test]
    fn rejects_mismatched_over_bits() {
        let t = PlaneCurve::trefoil();
        assert!(KnotDiagram::new(t.clone(), BTreeMap::from([(1, 0), (2, 1)])).is_err());
        assert!(KnotDiagram::new(t, BTreeMap::from([(1, 0), (2, 1), (3, 2)])).is_err());
    }

    #[test]
    fn alpha_of_convex_k6() {
        let d = convex_drawing(&Graph::complete(6), None).unwrap();
        let (total, rows) = alpha(&d, 6, DEFAULT_RESOLUTION_CAP).unwrap();
        assert_eq!(total, Dyadic::new(25, 2)); // 25/4
        assert_eq!(rows.len(), 60);
        assert_eq!(rows.iter().map(|r| r.crossings).max(), Some(7));
        // Four times the total is an odd integer.
        assert_eq!(total.four_times_as_integer(), Some(25));
    }

    #[test]
    fn alpha_respects_the_cap() {
        let d = convex_drawing(&Graph::complete(6), None).unwrap();
        match alpha(&d, 6, 3) {
            Err(Error::CapExceeded { context, .. }) => {
                assert!(context.contains("cycle"), "{context}");
            }
            other => panic!("expected cap refusal, got {other:?}"),
        }
    }

    #[test]
    fn switching_a_crossing_changes_a2_by_the_smoothed_linking_number() {
        for curve in [PlaneCurve::trefoil(), PlaneCurve::figure_eight()] {
            let base = KnotDiagram::alternating(curve).unwrap();
            for x in base.curve().labels().collect::<Vec<_>>() {
                let plus = base.with_sign(x, 1).unwrap();
                let minus = base.with_sign(x, -1).unwrap();
                assert_eq!(plus.crossing_sign(x).unwrap(), 1);
                assert_eq!(minus.crossing_sign(x).unwrap(), -1);
                let lk = base.smoothing_linking_number(x).unwrap();
                assert_eq!(plus.a2() - minus.a2(), lk, "at crossing {x}");
                // The smoothed linking number does not depend on the bit at
                // the smoothed crossing itself.
                assert_eq!(plus.smoothing_linking_number(x).unwrap(), lk);
            }
        }
    }
}
