//! Class decomposition: for each connection class the head (products of
//! class pairs landing on the distinguished component), the body (the sum
//! of the class components) and their direct sum, which is an ideal; plus
//! the global decomposition of the algebra into a complement of the
//! distinguished pair span and the class ideals.

use std::collections::BTreeMap;

use crate::algebra::{Algebra, GradedSubspace, Parity};
use crate::exactlin::{Subspace, Vector};
use crate::idealkit::{distinguished_pair_span, is_ideal, Inconsistency};
use crate::supportgraph::{ConnectionClass, SupportMap};

/// The ideal attached to one connection class.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassIdeal {
    pub class: ConnectionClass,
    /// Products of class pairs landing on the distinguished component.
    pub head: Subspace,
    /// Direct sum of the class components.
    pub body: GradedSubspace,
    /// head + body; verified to absorb multiplication by the whole algebra.
    pub total: GradedSubspace,
}

/// span{[L_b, L_c] : b,c in the class} intersected with the distinguished
/// component; zero when nothing is distinguished.
pub fn class_head(alg: &Algebra, class: &ConnectionClass) -> Subspace {
    let Some(o) = alg.distinguished().cloned() else {
        return Subspace::zero(alg.field(), alg.dim());
    };
    let mut acc = Subspace::zero(alg.field(), alg.dim());
    for b in &class.members {
        for c in &class.members {
            acc = acc
                .sum(&alg.label_pair_product(b, c))
                .expect("same ambient");
        }
    }
    acc.intersect(&alg.label_piece(&o)).expect("same ambient")
}

/// Builds the class ideal and verifies the ideal sweep; a failure is an
/// internal error (the decomposition theorem guarantees success).
pub fn class_ideal(alg: &Algebra, class: &ConnectionClass) -> Result<ClassIdeal, Inconsistency> {
    let head = class_head(alg, class);
    let mut body_gens: Vec<Vector> = Vec::new();
    for (i, b) in alg.basis().iter().enumerate() {
        if class.members.contains(&b.label) {
            body_gens.push(Vector::standard_basis(alg.field(), alg.dim(), i));
        }
    }
    let body = GradedSubspace::from_homogeneous_generators(alg, &body_gens)
        .expect("basis vectors are homogeneous");
    let total_plain = head.sum(&body.total()).expect("same ambient");
    if total_plain.dim() != head.dim() + body.dim() {
        return Err(Inconsistency(
            "class head and body are not independent".into(),
        ));
    }
    let total = GradedSubspace::split(alg, &total_plain)
        .ok_or_else(|| Inconsistency("class ideal is not graded".into()))?;
    if !is_ideal(alg, &total_plain) {
        return Err(Inconsistency(format!(
            "class ideal sweep failed for representative {}",
            class.representative
        )));
    }
    Ok(ClassIdeal {
        class: class.clone(),
        head,
        body,
        total,
    })
}

/// Named outcomes of the internal consistency checks run by `decompose`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionReport {
    /// Deterministic complement of the distinguished pair span inside the
    /// distinguished component.
    pub complement: Subspace,
    pub ideals: Vec<ClassIdeal>,
    /// The distinguished pair span (always inside the distinguished
    /// component).
    pub pair_span: Subspace,
    /// True when the complement plus the class ideals sum directly.
    pub direct: bool,
    pub checks: BTreeMap<String, bool>,
}

impl DecompositionReport {
    pub fn all_checks_pass(&self) -> bool {
        self.checks.values().all(|&v| v)
    }
}

/// The global decomposition. All failures land in the `checks` map as
/// internal-inconsistency findings; the call itself does not error.
pub fn decompose(alg: &Algebra) -> DecompositionReport {
    let map = SupportMap::new(alg);
    let classes = map.connection_classes();
    let pair_span = distinguished_pair_span(alg);
    let l_o = match alg.distinguished() {
        Some(o) => alg.label_piece(o),
        None => Subspace::zero(alg.field(), alg.dim()),
    };
    let complement = pair_span
        .complement_in(&l_o)
        .expect("pair span lives inside the distinguished component");

    let mut checks: BTreeMap<String, bool> = BTreeMap::new();
    let mut ideals = Vec::new();
    let mut sweep_ok = true;
    for class in &classes {
        match class_ideal(alg, class) {
            Ok(ci) => ideals.push(ci),
            Err(_) => sweep_ok = false,
        }
    }
    checks.insert("ideal_sweep".into(), sweep_ok);

    // complement + sum of ideals reconstitutes the algebra
    let mut sum = complement.clone();
    let mut dims = complement.dim();
    for ci in &ideals {
        sum = sum.sum(&ci.total.total()).expect("same ambient");
        dims += ci.total.dim();
    }
    let full = Subspace::full(alg.field(), alg.dim());
    checks.insert("sum_reconstitutes".into(), sweep_ok && sum == full);

    // cross-class products vanish, checked on basis pairs of the totals
    let mut cross_ok = true;
    for (i, ca) in ideals.iter().enumerate() {
        for cb in ideals.iter().skip(i + 1) {
            for u in ca.total.total().rows() {
                for v in cb.total.total().rows() {
                    let p = alg.multiply(u, v).expect("same ambient");
                    let q = alg.multiply(v, u).expect("same ambient");
                    if !p.is_zero() || !q.is_zero() {
                        cross_ok = false;
                    }
                }
            }
        }
    }
    checks.insert("cross_products_vanish".into(), cross_ok);

    // directness: pairwise intersections of totals are zero and the global
    // rank count is exact
    let mut pairwise_zero = true;
    for (i, ca) in ideals.iter().enumerate() {
        for cb in ideals.iter().skip(i + 1) {
            let inter = ca
                .total
                .total()
                .intersect(&cb.total.total())
                .expect("same ambient");
            if !inter.is_zero() {
                pairwise_zero = false;
            }
        }
    }
    let direct = sweep_ok && pairwise_zero && dims == alg.dim() && sum == full;

    // empty distinguished label: the sum must be direct with no complement
    let cooo1 = match alg.distinguished() {
        None => direct && complement.is_zero(),
        Some(_) => true,
    };
    checks.insert("direct_when_no_distinguished".into(), cooo1);

    // centerless and tight: the sum must be direct
    let centerless = crate::idealkit::center(alg).is_zero();
    let tight = crate::idealkit::is_tight(alg);
    checks.insert(
        "direct_when_centerless_and_tight".into(),
        !(centerless && tight) || direct,
    );

    DecompositionReport {
        complement,
        ideals,
        pair_span,
        direct,
        checks,
    }
}

/// Per-parity pieces of a class body, handy for reports.
pub fn body_parity_dims(body: &GradedSubspace) -> (usize, usize) {
    (
        body.parity_part(Parity::Even).dim(),
        body.parity_part(Parity::Odd).dim(),
    )
}
