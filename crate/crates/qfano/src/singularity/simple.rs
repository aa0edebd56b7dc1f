//! Checkable hypotheses for recognizing a divisor-to-curve contraction as a simple (2,1)-contraction.
//!
//! Only the hypotheses are evaluated. Nothing here asserts the conclusion.

use serde::Serialize;

use crate::vgit::CyclicQuotientType;

/// Explicit data about f: X -> (Y, o) contracting E to a curve C.
#[derive(Clone, Debug, Serialize)]
pub struct SimpleContractionData {
    /// o is a cDV point of Y.
    pub target_cdv: bool,
    pub curve_smooth_at_o: bool,
    pub smooth_off_central_fiber: bool,
    pub general_fiber_is_line: bool,
    pub exceptional_normal: bool,
    /// Quotient types of the singular points of X on the central fiber.
    pub central_singularities: Vec<CyclicQuotientType>,
    pub central_components: usize,
    pub components_meet_only_at_singular_point: bool,
    /// Degree d with E1|F in |O(d)| on F = P(1,1,r-1).
    pub e1_on_f_degree: i64,
    /// E1|F avoids the singular point of F.
    pub e1_misses_f_vertex: bool,
    /// Number of distinct transverse intersection points of the strict transforms of the components with E1|F.
    pub transverse_points: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SimpleContractionPredicates {
    pub target_cdv: bool,
    pub curve_smooth: bool,
    pub smooth_off_fiber_with_line_fibers: bool,
    pub exceptional_normal: bool,
    pub one_point_of_type_1_r_1_1_rm1: bool,
    pub exceptional_restriction: bool,
}

impl SimpleContractionPredicates {
    pub fn all(&self) -> bool {
        self.target_cdv
            && self.curve_smooth
            && self.smooth_off_fiber_with_line_fibers
            && self.exceptional_normal
            && self.one_point_of_type_1_r_1_1_rm1
            && self.exceptional_restriction
    }
}

impl SimpleContractionData {
    /// r of the unique central singular point when it has type 1/r(1,1,r-1), r >= 2.
    pub fn index(&self) -> Option<u64> {
        let [p] = self.central_singularities.as_slice() else {
            return None;
        };
        let r = p.r;
        if r < 2 || p.weights.len() != 3 {
            return None;
        }
        let s = p.sorted().weights;
        let want = {
            let mut v = vec![1, 1, r - 1];
            v.sort_unstable();
            v
        };
        (s == want).then_some(r)
    }

    pub fn evaluate(&self) -> SimpleContractionPredicates {
        let r = self.index();
        let fiber = match r {
            Some(r) => self.central_components as u64 == r && self.components_meet_only_at_singular_point,
            None => false,
        };
        let restriction = match r {
            Some(r) => {
                self.e1_on_f_degree == r as i64 - 1
                    && (r == 2 || self.e1_misses_f_vertex)
                    && self.transverse_points as u64 == r
            }
            None => false,
        };
        SimpleContractionPredicates {
            target_cdv: self.target_cdv,
            curve_smooth: self.curve_smooth_at_o,
            smooth_off_fiber_with_line_fibers: self.smooth_off_central_fiber && self.general_fiber_is_line,
            exceptional_normal: self.exceptional_normal,
            one_point_of_type_1_r_1_1_rm1: fiber,
            exceptional_restriction: restriction,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn good(r: u64) -> SimpleContractionData {
        SimpleContractionData {
            target_cdv: true,
            curve_smooth_at_o: true,
            smooth_off_central_fiber: true,
            general_fiber_is_line: true,
            exceptional_normal: true,
            central_singularities: vec![CyclicQuotientType::new(r, &[1, r as i64 - 1, 1])],
            central_components: r as usize,
            components_meet_only_at_singular_point: true,
            e1_on_f_degree: r as i64 - 1,
            e1_misses_f_vertex: true,
            transverse_points: r as usize,
        }
    }

    #[test]
    fn predicates() {
        for r in 2..6 {
            assert!(good(r).evaluate().all());
        }
        let mut d = good(3);
        d.central_components = 2;
        assert!(!d.evaluate().one_point_of_type_1_r_1_1_rm1);
        let mut d = good(4);
        d.central_singularities = vec![CyclicQuotientType::new(4, &[1, 1, 1])];
        assert!(!d.evaluate().all());
        let mut d = good(2);
        d.e1_misses_f_vertex = false;
        assert!(d.evaluate().exceptional_restriction);
        let mut d = good(3);
        d.e1_misses_f_vertex = false;
        assert!(!d.evaluate().exceptional_restriction);
    }
}
