//! Knot and link diagrams obtained by restricting a graph diagram to one or
//! two disjoint cycles: oriented closed curves through 4-valent crossings.
//!
//! Segments are the maximal strands between crossings; each carries the
//! orientation of the cycle it came from. A component untouched by crossings
//! is a free loop.

use crate::diagram::CrossingId;
use crate::error::{Error, Result};

/// One end of a segment. End 0 is the start (outgoing at its crossing),
/// end 1 the finish (incoming).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SegEnd {
    pub seg: usize,
    pub end: u8,
}

/// A 4-valent crossing of a link diagram. `slots` lists the incident segment
/// ends counterclockwise; the over strand occupies slots `over_parity` and
/// `over_parity + 2`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkCrossing {
    /// Crossing id in the diagram this link was restricted from.
    pub source: CrossingId,
    pub slots: [SegEnd; 4],
    pub over_parity: u8,
}

impl LinkCrossing {
    /// Slot through which the over strand leaves the crossing.
    pub fn over_exit(&self) -> usize {
        let p = self.over_parity as usize;
        if self.slots[p].end == 0 {
            p
        } else {
            p + 2
        }
    }

    /// Slot through which the under strand leaves the crossing.
    pub fn under_exit(&self) -> usize {
        let q = (self.over_parity as usize + 1) % 4;
        if self.slots[q].end == 0 {
            q
        } else {
            (q + 2) % 4
        }
    }

    /// Crossing sign: +1 exactly when the under direction is the over
    /// direction rotated +90 degrees counterclockwise. With counterclockwise
    /// slots this reads off the exit slots.
    pub fn sign(&self) -> i64 {
        let diff = (4 + self.under_exit() - self.over_exit()) % 4;
        debug_assert!(diff == 1 || diff == 3);
        if diff == 1 {
            1
        } else {
            -1
        }
    }
}

/// An oriented link diagram with components indexed 0..num_components.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkDiagram {
    pub num_components: usize,
    /// seg_component[s] = component of segment s.
    pub seg_component: Vec<usize>,
    pub crossings: Vec<LinkCrossing>,
    /// Components that pass through no crossing at all.
    pub free_loops: Vec<usize>,
}

impl LinkDiagram {
    pub fn crossing_count(&self) -> usize {
        self.crossings.len()
    }

    /// Component of the strand occupying slots {which, which+2}.
    fn strand_component(&self, x: &LinkCrossing, which: usize) -> usize {
        let a = self.seg_component[x.slots[which].seg];
        let b = self.seg_component[x.slots[(which + 2) % 4].seg];
        debug_assert_eq!(a, b, "strand changes component mid-crossing");
        a
    }

    /// Signed crossing sum between the two components of a 2-component link;
    /// the raw sum is always even and the linking number is half of it.
    pub fn linking_number(&self) -> Result<i64> {
        if self.num_components != 2 {
            return Err(Error::WrongComponentCount { expected: 2, got: self.num_components });
        }
        let mut raw = 0i64;
        for x in &self.crossings {
            let c0 = self.strand_component(x, 0);
            let c1 = self.strand_component(x, 1);
            if c0 != c1 {
                raw += x.sign();
            }
        }
        assert!(raw % 2 == 0, "inter-component sign sum must be even, got {}", raw);
        Ok(raw / 2)
    }

    /// Sum of all crossing signs of a knot diagram.
    pub fn writhe(&self) -> Result<i64> {
        if self.num_components != 1 {
            return Err(Error::WrongComponentCount { expected: 1, got: self.num_components });
        }
        Ok(self.crossings.iter().map(|x| x.sign()).sum())
    }

    /// The same diagram with one crossing (identified by its source id in the
    /// original graph diagram) switched. Identity if the crossing was
    /// smoothed away by the restriction.
    pub fn with_crossing_changed(&self, source: CrossingId) -> LinkDiagram {
        let mut out = self.clone();
        for x in &mut out.crossings {
            if x.source == source {
                x.over_parity ^= 1;
            }
        }
        out
    }

    pub fn mirror(&self) -> LinkDiagram {
        let mut out = self.clone();
        for x in &mut out.crossings {
            x.over_parity ^= 1;
        }
        out
    }
}
