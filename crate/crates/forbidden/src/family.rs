//! The family container and its structural re-verification.

use std::collections::BTreeMap;

use graph_core::{graph6, Graph};
use invariants::{is_perfect, max_degree};
use iso::CanonicalForm;

use crate::conditions::is_minimal_forbidden;
use crate::{ForbiddenError, Parameter};

/// A complete family of minimal forbidden graphs for one class, keyed
/// and sorted by canonical form.
#[derive(Debug, Clone)]
pub struct ForbiddenFamily {
    parameter: Parameter,
    k: usize,
    members: BTreeMap<CanonicalForm, Graph>,
    vertex_range: (usize, usize),
    engine_version: String,
}

impl ForbiddenFamily {
    pub(crate) fn from_parts(
        parameter: Parameter,
        k: usize,
        members: BTreeMap<CanonicalForm, Graph>,
        vertex_range: (usize, usize),
        engine_version: String,
    ) -> Self {
        ForbiddenFamily {
            parameter,
            k,
            members,
            vertex_range,
            engine_version,
        }
    }

    pub fn parameter(&self) -> Parameter {
        self.parameter
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Members in canonical-form order.
    pub fn members(&self) -> impl Iterator<Item = &Graph> + '_ {
        self.members.values()
    }

    pub fn canonical_forms(&self) -> impl Iterator<Item = &CanonicalForm> + '_ {
        self.members.keys()
    }

    pub fn contains_form(&self, form: CanonicalForm) -> bool {
        self.members.contains_key(&form)
    }

    /// Inclusive vertex-count bounds the enumeration scanned.
    pub fn vertex_range(&self) -> (usize, usize) {
        self.vertex_range
    }

    pub fn engine_version(&self) -> &str {
        &self.engine_version
    }

    /// Member count per vertex count.
    pub fn histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for g in self.members.values() {
            *h.entry(g.n()).or_insert(0) += 1;
        }
        h
    }
}

/// Outcome of [`verify_family`]: how many members were checked and one
/// line per violated assertion, naming the offending member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyReport {
    pub checked: usize,
    pub violations: Vec<String>,
}

impl FamilyReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Re-derives every structural law an enumerated family must satisfy,
/// from the members alone. With the family for the other parameter at
/// the same gap supplied, additionally checks that the two families
/// agree exactly on their perfect members.
pub fn verify_family(
    fam: &ForbiddenFamily,
    counterpart: Option<&ForbiddenFamily>,
) -> Result<FamilyReport, ForbiddenError> {
    let mut violations = Vec::new();
    let k = fam.k();
    let p = fam.parameter();
    if fam.is_empty() {
        violations.push("family has no members".to_string());
    }
    for (form, g) in fam.members.iter() {
        let name = graph6::encode(g);
        let mut complain = |message: String| violations.push(format!("{name}: {message}"));

        if iso::canonical_form(g)? != *form {
            complain("stored under a key that is not its canonical form".to_string());
        }

        let n = g.n();
        if n < k + 3 || n > 2 * k + 3 {
            complain(format!("order {n} outside {}..={}", k + 3, 2 * k + 3));
        }

        // One hub, nothing dominating besides it, and the member is the
        // hub-free side with the hub put back.
        let dominating = g.dominating_vertices().expect("members are nonempty");
        if dominating.len() != 1 {
            complain(format!("{} dominating vertices", dominating.len()));
        } else {
            let hub = dominating.first().expect("one dominating vertex");
            let side = g.delete_vertex(hub);
            if side.has_dominating_vertex() {
                complain("hub-free side still has a dominating vertex".to_string());
            }
            let rebuilt = side
                .add_dominating_vertex()
                .expect("members stay within vertex capacity");
            if !iso::are_isomorphic(&rebuilt, g)? {
                complain("hub removal and readdition changes the graph".to_string());
            }
        }

        let degree = max_degree(g)?;
        if degree != n - 1 {
            complain(format!("maximum degree {degree}, expected {}", n - 1));
        }
        let value = p.value(g)?;
        if value + k + 1 != n {
            complain(format!("parameter value {value}, expected {}", n - k - 1));
        }
        if p == Parameter::Chi {
            let chi = value;
            if (2 * chi).saturating_sub(2) > degree || degree > 2 * k + 2 {
                complain(format!("degree {degree} outside the chromatic bounds"));
            }
            if !(2..=k + 2).contains(&chi) {
                complain(format!("chromatic number {chi} outside 2..={}", k + 2));
            }
        }

        if !is_minimal_forbidden(g, p, k)?.verdict() {
            complain("fails the three-condition minimality test".to_string());
        }
    }

    if let Some(other) = counterpart {
        let opposite = match p {
            Parameter::Chi => Parameter::Omega,
            Parameter::Omega => Parameter::Chi,
        };
        if other.parameter() != opposite || other.k() != k {
            violations.push(format!(
                "counterpart is ({}, {}), expected ({}, {})",
                other.parameter(),
                other.k(),
                opposite,
                k
            ));
        } else {
            // The perfect members of the two families at one gap must
            // coincide.
            for (a, b, direction) in [(fam, other, "counterpart"), (other, fam, "this family")] {
                for (form, g) in a.members.iter() {
                    if is_perfect(g)?.is_perfect && !b.members.contains_key(form) {
                        violations
                            .push(format!("{}: perfect but absent from {direction}", graph6::encode(g)));
                    }
                }
            }
        }
    }

    Ok(FamilyReport {
        checked: fam.len(),
        violations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate_family;
    use graph_core::catalog;

    #[test]
    fn small_families_verify_cleanly_with_and_without_counterparts() {
        for k in 0..=1 {
            let chi = enumerate_family(Parameter::Chi, k).unwrap();
            let omega = enumerate_family(Parameter::Omega, k).unwrap();
            for (fam, other) in [(&chi, &omega), (&omega, &chi)] {
                let alone = verify_family(fam, None).unwrap();
                assert_eq!(alone.checked, fam.len());
                assert_eq!(alone.violations, Vec::<String>::new());
                let paired = verify_family(fam, Some(other)).unwrap();
                assert!(paired.is_ok());
            }
        }
    }

    #[test]
    fn histogram_splits_the_gap_one_family_by_order() {
        let fam = enumerate_family(Parameter::Chi, 1).unwrap();
        let histogram = fam.histogram();
        assert_eq!(histogram.get(&4), Some(&1));
        assert_eq!(histogram.get(&5), Some(&3));
        assert_eq!(histogram.values().sum::<usize>(), 4);
    }

    #[test]
    fn misfiled_member_draws_violations() {
        // W5 is a clique-side member at gap 2; filed on the chromatic
        // side, its chromatic number 4 breaks the order arithmetic, the
        // degree bound, and the minimality test.
        let w5 = catalog::wheel(5).unwrap();
        let form = iso::canonical_form(&w5).unwrap();
        let fam = ForbiddenFamily::from_parts(
            Parameter::Chi,
            2,
            [(form, w5)].into_iter().collect(),
            (5, 7),
            "test".to_string(),
        );
        let report = verify_family(&fam, None).unwrap();
        assert_eq!(report.checked, 1);
        assert!(report.violations.len() >= 2, "{:?}", report.violations);
    }

    #[test]
    fn mismatched_counterpart_is_reported() {
        let chi = enumerate_family(Parameter::Chi, 1).unwrap();
        let report = verify_family(&chi, Some(&chi)).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert!(report.violations[0].contains("counterpart"));
    }
}
