//! Ideal machinery: graded ideal closures, the Leibniz kernel (the ideal
//! generated by all symmetrized products, which measures the failure of
//! skew-supersymmetry), center and Lie-annihilator, tightness of the
//! distinguished component, and the brute-force simplicity oracle.

use std::collections::{BTreeSet, HashSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{Algebra, GradedSubspace, Label, NonHomogeneous, Parity};
use crate::exactlin::{Field, Subspace, Vector};
use crate::supportgraph::SupportMap;

/// Default seed for the sampling paths of the oracle.
pub const DEFAULT_SEED: u64 = 0x6c65_6962;

/// Number of random combinations sampled per rational piece of dim >= 2.
pub const RATIONAL_SAMPLES: usize = 32;

/// A theorem-guaranteed property failed on a validated algebra; this
/// indicates a bug upstream, never bad input.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("internal inconsistency: {0}")]
pub struct Inconsistency(pub String);

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealClosureResult {
    pub subspace: GradedSubspace,
    pub generators: Vec<Vector>,
    pub iterations: usize,
}

/// Smallest graded subspace containing `v` that absorbs multiplication by
/// the whole algebra on both sides.
pub fn ideal_closure(alg: &Algebra, v: &GradedSubspace) -> IdealClosureResult {
    let generators: Vec<Vector> = v
        .pieces()
        .values()
        .flat_map(|s| s.rows().iter().cloned())
        .collect();
    let mut current = v.total();
    let mut iterations = 0usize;
    loop {
        let mut vecs: Vec<Vector> = current.rows().to_vec();
        let before = current.dim();
        for w in current.rows() {
            for k in 0..alg.dim() {
                let e = Vector::standard_basis(alg.field(), alg.dim(), k);
                vecs.push(alg.multiply(w, &e).expect("vectors over the algebra"));
                vecs.push(alg.multiply(&e, w).expect("vectors over the algebra"));
            }
        }
        current = Subspace::from_vectors(alg.field(), alg.dim(), &vecs).expect("same ambient");
        if current.dim() == before {
            break;
        }
        iterations += 1;
    }
    let subspace = GradedSubspace::split(alg, &current)
        .expect("closure of a graded subspace splits into homogeneous pieces");
    IdealClosureResult {
        subspace,
        generators,
        iterations,
    }
}

/// Closure of the span of a single homogeneous vector.
pub fn ideal_closure_of_vector(
    alg: &Algebra,
    v: &Vector,
) -> Result<IdealClosureResult, NonHomogeneous> {
    let g = GradedSubspace::from_homogeneous_generators(alg, std::slice::from_ref(v))?;
    Ok(ideal_closure(alg, &g))
}

/// The ideal generated by all `[x,y] + (-1)^{|x||y|}[y,x]` over basis pairs.
///
/// Postcondition (checked): the whole algebra multiplied from the left into
/// the result is zero; a failure is an internal error, not a report entry.
pub fn leibniz_kernel(alg: &Algebra) -> Result<GradedSubspace, Inconsistency> {
    let dim = alg.dim();
    let mut gens = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            let ij = alg.basis_product(i, j);
            let ji = alg.basis_product(j, i);
            let sign = alg
                .field()
                .from_i64(alg.basis()[i].parity.pair_sign(alg.basis()[j].parity));
            let mut s = ij.clone();
            s.axpy(&sign, &ji);
            if !s.is_zero() {
                gens.push(s);
            }
        }
    }
    let graded = GradedSubspace::from_homogeneous_generators(alg, &gens)
        .map_err(|e| Inconsistency(format!("symmetrized generator is not homogeneous: {e}")))?;
    let closed = ideal_closure(alg, &graded).subspace;
    // [L, kernel] = 0
    let total = closed.total();
    for w in total.rows() {
        for k in 0..dim {
            let e = Vector::standard_basis(alg.field(), dim, k);
            let p = alg.multiply(&e, w).expect("vectors over the algebra");
            if !p.is_zero() {
                return Err(Inconsistency(
                    "left products into the Leibniz kernel do not vanish".into(),
                ));
            }
        }
    }
    Ok(closed)
}

/// Kernel support sets: labels (other than the distinguished one) whose
/// parity piece meets the Leibniz kernel nontrivially.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelSupport {
    pub kernel_even: BTreeSet<Label>,
    pub kernel_odd: BTreeSet<Label>,
}

impl KernelSupport {
    pub fn all(&self) -> BTreeSet<Label> {
        self.kernel_even.union(&self.kernel_odd).cloned().collect()
    }
}

pub fn kernel_support(alg: &Algebra, kernel: &GradedSubspace) -> KernelSupport {
    let distinguished = alg.distinguished();
    let mut kernel_even = BTreeSet::new();
    let mut kernel_odd = BTreeSet::new();
    for ((label, parity), piece) in kernel.pieces() {
        if Some(label) == distinguished || piece.is_zero() {
            continue;
        }
        match parity {
            Parity::Even => kernel_even.insert(label.clone()),
            Parity::Odd => kernel_odd.insert(label.clone()),
        };
    }
    KernelSupport {
        kernel_even,
        kernel_odd,
    }
}

/// Kernel of x -> (all [x, e_k], [e_k, x]); basis-independent.
pub fn center(alg: &Algebra) -> Subspace {
    annihilator_of_labels(alg, &alg.labels())
}

/// Elements annihilating (on both sides) every component whose label lies
/// outside the kernel support. The distinguished label is quantified iff
/// `include_o`; always contains the center.
pub fn lie_annihilator(alg: &Algebra, kernel: &GradedSubspace, include_o: bool) -> Subspace {
    let ks = kernel_support(alg, kernel).all();
    let mut quantified: BTreeSet<Label> = alg
        .labels()
        .into_iter()
        .filter(|l| !ks.contains(l))
        .collect();
    if !include_o {
        if let Some(o) = alg.distinguished() {
            quantified.remove(o);
        }
    }
    annihilator_of_labels(alg, &quantified)
}

fn annihilator_of_labels(alg: &Algebra, labels: &BTreeSet<Label>) -> Subspace {
    let dim = alg.dim();
    let f = alg.field();
    let mut rows: Vec<Vector> = Vec::new();
    for (k, b) in alg.basis().iter().enumerate() {
        if !labels.contains(&b.label) {
            continue;
        }
        // coordinates of [x, e_k] and [e_k, x] as linear forms in x
        for m in 0..dim {
            let mut right = Vector::zero(f, dim);
            let mut left = Vector::zero(f, dim);
            for i in 0..dim {
                right.set(i, alg.basis_product(i, k).get(m).clone());
                left.set(i, alg.basis_product(k, i).get(m).clone());
            }
            rows.push(right);
            rows.push(left);
        }
    }
    crate::exactlin::null_space(f, dim, &rows).expect("constraint rows share the ambient")
}

/// True iff the distinguished component is zero or exactly the span of
/// products of component pairs multiplying into it.
pub fn is_tight(alg: &Algebra) -> bool {
    let Some(o) = alg.distinguished().cloned() else {
        return true; // L_o := 0 by convention
    };
    let l_o = alg.label_piece(&o);
    if l_o.is_zero() {
        return true;
    }
    distinguished_pair_span(alg) == l_o
}

/// The span of [L_a, L_b] over pairs a,b outside the distinguished label
/// with a ⋆ b = {o}, intersected with L_o. Zero when nothing is
/// distinguished.
pub fn distinguished_pair_span(alg: &Algebra) -> Subspace {
    let Some(o) = alg.distinguished().cloned() else {
        return Subspace::zero(alg.field(), alg.dim());
    };
    let map = SupportMap::new(alg);
    let mut acc = Subspace::zero(alg.field(), alg.dim());
    for ((a, b), c) in map.label_products() {
        if c == &o && a != &o && b != &o {
            acc = acc
                .sum(&alg.label_pair_product(a, b))
                .expect("same ambient");
        }
    }
    acc.intersect(&alg.label_piece(&o)).expect("same ambient")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Simple,
    NotSimple,
    ProbablySimple,
}

/// Outcome of the simplicity oracle. `NotSimple` carries a witness ideal
/// whenever one exists (the only exception is the abelian algebra of
/// dimension at most one, which has no proper nonzero subspace at all).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplicityReport {
    pub verdict: Verdict,
    pub witness: Option<GradedSubspace>,
    pub sampled: bool,
}

/// Brute-force simplicity check.
///
/// Reduction: the algebra is simple iff the product is nonzero and, for
/// every nonzero homogeneous vector v, the graded ideal generated by v is
/// the Leibniz kernel when v lies in the kernel and the whole algebra
/// otherwise. Over a prime field all nonzero vectors of every homogeneous
/// piece are enumerated (exact verdict); over the rationals pieces of
/// dimension one are decided exactly and larger pieces are sampled, which
/// can only downgrade "simple" to `ProbablySimple`.
pub fn simplicity_oracle(alg: &Algebra, seed: u64) -> Result<SimplicityReport, Inconsistency> {
    let kernel = leibniz_kernel(alg)?;
    simplicity_oracle_with_kernel(alg, &kernel, seed)
}

pub fn simplicity_oracle_with_kernel(
    alg: &Algebra,
    kernel: &GradedSubspace,
    seed: u64,
) -> Result<SimplicityReport, Inconsistency> {
    if alg.products().is_empty() {
        // [L, L] = 0: any homogeneous line is a proper ideal when one exists
        let witness = if alg.dim() >= 2 {
            let line = Vector::standard_basis(alg.field(), alg.dim(), 0);
            Some(
                GradedSubspace::from_homogeneous_generators(alg, &[line])
                    .expect("basis vectors are homogeneous"),
            )
        } else {
            None
        };
        return Ok(SimplicityReport {
            verdict: Verdict::NotSimple,
            witness,
            sampled: false,
        });
    }

    let kernel_total = kernel.total();
    let full = Subspace::full(alg.field(), alg.dim());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut sampled = false;

    for label in alg.labels() {
        for parity in [Parity::Even, Parity::Odd] {
            let piece = alg.homogeneous_piece(&label, parity);
            if piece.is_zero() {
                continue;
            }
            let candidates = match alg.field() {
                _ if piece.dim() == 1 => piece.rows().to_vec(),
                Field::Prime(p) => nonzero_vectors_of(&piece, p),
                Field::Rationals => {
                    sampled = true;
                    let mut cands = piece.rows().to_vec();
                    for _ in 0..RATIONAL_SAMPLES {
                        let mut v = Vector::zero(alg.field(), alg.dim());
                        for row in piece.rows() {
                            let c: i64 = rng.gen_range(-3..=3);
                            v.axpy(&alg.field().from_i64(c), row);
                        }
                        if !v.is_zero() {
                            cands.push(v);
                        }
                    }
                    cands
                }
            };
            for v in candidates {
                let closure = ideal_closure_of_vector(alg, &v)
                    .expect("piece vectors are homogeneous")
                    .subspace;
                let total = closure.total();
                let in_kernel = kernel_total.contains(&v).expect("same ambient");
                let ok = if in_kernel {
                    total == kernel_total
                } else {
                    total == full
                };
                if !ok {
                    return Ok(SimplicityReport {
                        verdict: Verdict::NotSimple,
                        witness: Some(closure),
                        sampled,
                    });
                }
            }
        }
    }

    let verdict = if sampled {
        Verdict::ProbablySimple
    } else {
        Verdict::Simple
    };
    Ok(SimplicityReport {
        verdict,
        witness: None,
        sampled,
    })
}

/// All nonzero vectors of a subspace over GF(p).
fn nonzero_vectors_of(piece: &Subspace, p: u64) -> Vec<Vector> {
    let d = piece.dim();
    let mut out = Vec::new();
    let mut coeffs = vec![0u64; d];
    loop {
        // advance the odometer
        let mut i = 0;
        while i < d {
            coeffs[i] += 1;
            if coeffs[i] < p {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
        if i == d {
            break;
        }
        let mut v = Vector::zero(piece.field(), piece.ambient_dim());
        for (c, row) in coeffs.iter().zip(piece.rows()) {
            if *c != 0 {
                v.axpy(&piece.field().from_i64(*c as i64), row);
            }
        }
        out.push(v);
    }
    out
}

/// Is the subspace closed under multiplication by the whole algebra on
/// both sides?
pub fn is_ideal(alg: &Algebra, space: &Subspace) -> bool {
    for w in space.rows() {
        for k in 0..alg.dim() {
            let e = Vector::standard_basis(alg.field(), alg.dim(), k);
            let right = alg.multiply(w, &e).expect("same ambient");
            let left = alg.multiply(&e, w).expect("same ambient");
            if !space.contains(&right).expect("same ambient")
                || !space.contains(&left).expect("same ambient")
            {
                return false;
            }
        }
    }
    true
}

/// Literal enumeration of every graded ideal over a prime field: all sums
/// of subspaces of the homogeneous pieces, filtered by the ideal sweep.
/// Only feasible at small dimension; the oracle-agreement suite restricts
/// to at most 3 labels and total dimension 4.
pub fn enumerate_graded_ideals(alg: &Algebra) -> Vec<GradedSubspace> {
    let Field::Prime(p) = alg.field() else {
        panic!("literal enumeration requires a prime field");
    };
    let mut cells: Vec<Vec<Subspace>> = Vec::new();
    for label in alg.labels() {
        for parity in [Parity::Even, Parity::Odd] {
            let piece = alg.homogeneous_piece(&label, parity);
            if !piece.is_zero() {
                cells.push(all_subspaces_of(&piece, p));
            }
        }
    }
    let mut ideals = Vec::new();
    let mut choice = vec![0usize; cells.len()];
    loop {
        let mut total = Subspace::zero(alg.field(), alg.dim());
        for (ci, cell) in cells.iter().enumerate() {
            total = total.sum(&cell[choice[ci]]).expect("same ambient");
        }
        if is_ideal(alg, &total) {
            let graded = GradedSubspace::split(alg, &total)
                .expect("sums of homogeneous subspaces are graded");
            ideals.push(graded);
        }
        // advance
        let mut i = 0;
        while i < cells.len() {
            choice[i] += 1;
            if choice[i] < cells[i].len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
        if i == cells.len() || cells.is_empty() {
            break;
        }
    }
    ideals
}

/// Every subspace of `piece` (including zero and the piece itself),
/// enumerated by repeated one-vector extensions with canonical dedup.
fn all_subspaces_of(piece: &Subspace, p: u64) -> Vec<Subspace> {
    let vectors = nonzero_vectors_of(piece, p);
    let mut seen: HashSet<Subspace> = HashSet::new();
    let zero = Subspace::zero(piece.field(), piece.ambient_dim());
    let mut frontier = vec![zero.clone()];
    seen.insert(zero);
    while let Some(s) = frontier.pop() {
        if s.dim() == piece.dim() {
            continue;
        }
        for v in &vectors {
            if !s.contains(v).expect("same ambient") {
                let bigger = s.sum(&Subspace::line(v)).expect("same ambient");
                if seen.insert(bigger.clone()) {
                    frontier.push(bigger);
                }
            }
        }
    }
    let mut out: Vec<Subspace> = seen.into_iter().collect();
    out.sort_by_key(|s| (s.dim(), format!("{s}")));
    out
}

/// Simplicity verdict derived from the literal ideal enumeration: the
/// product is nonzero and every graded ideal is zero, the Leibniz kernel
/// or the whole algebra.
pub fn simplicity_by_enumeration(alg: &Algebra) -> Result<Verdict, Inconsistency> {
    if alg.products().is_empty() {
        return Ok(Verdict::NotSimple);
    }
    let kernel = leibniz_kernel(alg)?.total();
    let full = Subspace::full(alg.field(), alg.dim());
    for ideal in enumerate_graded_ideals(alg) {
        let t = ideal.total();
        if !(t.is_zero() || t == kernel || t == full) {
            return Ok(Verdict::NotSimple);
        }
    }
    Ok(Verdict::Simple)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{n2, BasisElement};
    use std::collections::BTreeMap as Map;

    fn q() -> Field {
        Field::Rationals
    }

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn n2_pair() -> Algebra {
        let basis = vec![
            BasisElement::new("x1", "a1", Parity::Even),
            BasisElement::new("y1", "b1", Parity::Even),
            BasisElement::new("x2", "a2", Parity::Even),
            BasisElement::new("y2", "b2", Parity::Even),
        ];
        let mut products = Map::new();
        products.insert((0, 0), Vector::from_i64(q(), &[0, 1, 0, 0]));
        products.insert((2, 2), Vector::from_i64(q(), &[0, 0, 0, 1]));
        Algebra::new(q(), basis, products, None).unwrap()
    }

    fn span_of(alg: &Algebra, entries: &[&[i64]]) -> Subspace {
        let vecs: Vec<Vector> = entries
            .iter()
            .map(|e| Vector::from_i64(alg.field(), e))
            .collect();
        Subspace::from_vectors(alg.field(), alg.dim(), &vecs).unwrap()
    }

    #[test]
    fn closure_examples() {
        let alg = n2(q());
        // span{y} is already an ideal
        let y = Vector::from_i64(q(), &[0, 1]);
        let r = ideal_closure_of_vector(&alg, &y).unwrap();
        assert_eq!(r.subspace.total(), span_of(&alg, &[&[0, 1]]));
        // span{x} closes to the whole algebra
        let x = Vector::from_i64(q(), &[1, 0]);
        let r = ideal_closure_of_vector(&alg, &x).unwrap();
        assert_eq!(r.subspace.total(), Subspace::full(q(), 2));
        assert!(r.iterations <= alg.dim());
        // the zero subspace stays zero
        let r = ideal_closure(&alg, &GradedSubspace::zero(&alg));
        assert!(r.subspace.is_zero());
    }

    #[test]
    fn kernel_examples() {
        // Lie superalgebra: kernel is zero
        let basis = vec![
            BasisElement::new("e", "a", Parity::Even),
            BasisElement::new("f", "b", Parity::Even),
            BasisElement::new("h", "c", Parity::Even),
        ];
        let mut products = Map::new();
        products.insert((0, 1), Vector::from_i64(q(), &[0, 0, 1]));
        products.insert((1, 0), Vector::from_i64(q(), &[0, 0, -1]));
        let lie = Algebra::new(q(), basis, products, None).unwrap();
        assert!(leibniz_kernel(&lie).unwrap().is_zero());
        assert!(lie.is_lie_superalgebra());

        // n2 over Q: kernel = span{y}
        let alg = n2(q());
        let k = leibniz_kernel(&alg).unwrap();
        assert_eq!(k.total(), span_of(&alg, &[&[0, 1]]));
        assert!(!alg.is_lie_superalgebra());

        // n2 over GF(2): 2y = 0, kernel vanishes
        let alg2 = n2(gf(2));
        assert!(leibniz_kernel(&alg2).unwrap().is_zero());
    }

    #[test]
    fn kernel_iff_lie_away_from_char_2() {
        for alg in [n2(q()), n2(gf(5)), n2_pair()] {
            let k = leibniz_kernel(&alg).unwrap();
            assert_eq!(alg.is_lie_superalgebra(), k.is_zero());
        }
    }

    #[test]
    fn center_examples() {
        let basis = vec![
            BasisElement::new("u", "a", Parity::Even),
            BasisElement::new("v", "b", Parity::Even),
        ];
        let abelian = Algebra::new(q(), basis, Map::new(), None).unwrap();
        assert_eq!(center(&abelian), Subspace::full(q(), 2));

        let alg = n2(q());
        assert_eq!(center(&alg), span_of(&alg, &[&[0, 1]]));

        let pair = n2_pair();
        assert_eq!(
            center(&pair),
            span_of(&pair, &[&[0, 1, 0, 0], &[0, 0, 0, 1]])
        );
    }

    #[test]
    fn annihilator_examples() {
        // abelian: everything annihilates everything
        let basis = vec![
            BasisElement::new("u", "a", Parity::Even),
            BasisElement::new("v", "b", Parity::Even),
        ];
        let ab = Algebra::new(q(), basis, Map::new(), None).unwrap();
        let kk = leibniz_kernel(&ab).unwrap();
        assert_eq!(lie_annihilator(&ab, &kk, true), Subspace::full(q(), 2));

        let alg = n2(q());
        let k = leibniz_kernel(&alg).unwrap();
        // kernel support = {b}; only label a is quantified
        let ann = lie_annihilator(&alg, &k, true);
        assert_eq!(ann, span_of(&alg, &[&[0, 1]]));
        // a Lie algebra quantifies everything: annihilator = center
        let basis = vec![
            BasisElement::new("e", "a", Parity::Even),
            BasisElement::new("f", "b", Parity::Even),
            BasisElement::new("h", "c", Parity::Even),
        ];
        let mut products = Map::new();
        products.insert((0, 1), Vector::from_i64(q(), &[0, 0, 1]));
        products.insert((1, 0), Vector::from_i64(q(), &[0, 0, -1]));
        let lie = Algebra::new(q(), basis, products, None).unwrap();
        let lk = leibniz_kernel(&lie).unwrap();
        assert_eq!(lie_annihilator(&lie, &lk, true), center(&lie));
        // center is always contained in the annihilator
        for alg in [n2(q()), n2_pair()] {
            let k = leibniz_kernel(&alg).unwrap();
            for flag in [true, false] {
                let ann = lie_annihilator(&alg, &k, flag);
                assert!(ann.contains_subspace(&center(&alg)).unwrap());
            }
        }
    }

    #[test]
    fn tight_examples() {
        assert!(is_tight(&n2(q()))); // o = empty
        let with_o = n2(q()).with_distinguished(Some("b".into()));
        assert!(is_tight(&with_o)); // span{[L_a,L_a]} = L_b
                                    // nonzero L_o with no products into it
        let basis = vec![
            BasisElement::new("x", "a", Parity::Even),
            BasisElement::new("w", "o", Parity::Even),
        ];
        let alg = Algebra::new(q(), basis, Map::new(), Some("o".into())).unwrap();
        assert!(alg.validate().is_valid());
        assert!(!is_tight(&alg));
    }

    #[test]
    fn oracle_examples() {
        // n2 over Q is simple: closure(x) = L, closure(y) = kernel
        let r = simplicity_oracle(&n2(q()), DEFAULT_SEED).unwrap();
        assert_eq!(r.verdict, Verdict::Simple);
        assert!(!r.sampled);

        // abelian: products vanish, witness is a homogeneous line
        let basis = vec![
            BasisElement::new("u", "a", Parity::Even),
            BasisElement::new("v", "b", Parity::Even),
        ];
        let ab = Algebra::new(q(), basis, Map::new(), None).unwrap();
        let r = simplicity_oracle(&ab, DEFAULT_SEED).unwrap();
        assert_eq!(r.verdict, Verdict::NotSimple);
        let w = r.witness.unwrap();
        assert_eq!(w.dim(), 1);
        assert!(is_ideal(&ab, &w.total()));

        // direct sum: the first copy shows up as a witness
        let pair = n2_pair();
        let r = simplicity_oracle(&pair, DEFAULT_SEED).unwrap();
        assert_eq!(r.verdict, Verdict::NotSimple);
        let w = r.witness.unwrap().total();
        assert!(is_ideal(&pair, &w));
        let kernel = leibniz_kernel(&pair).unwrap().total();
        assert!(w != kernel && w != Subspace::full(q(), 4) && !w.is_zero());
    }

    #[test]
    fn oracle_dim1_abelian_has_no_witness() {
        let basis = vec![BasisElement::new("u", "a", Parity::Even)];
        let alg = Algebra::new(q(), basis, Map::new(), None).unwrap();
        let r = simplicity_oracle(&alg, DEFAULT_SEED).unwrap();
        assert_eq!(r.verdict, Verdict::NotSimple);
        assert!(r.witness.is_none());
    }

    #[test]
    fn closure_monotone_and_idempotent() {
        let alg = n2_pair();
        let x1 = Vector::from_i64(q(), &[1, 0, 0, 0]);
        let small =
            GradedSubspace::from_homogeneous_generators(&alg, std::slice::from_ref(&x1)).unwrap();
        let y2 = Vector::from_i64(q(), &[0, 0, 0, 1]);
        let big = GradedSubspace::from_homogeneous_generators(&alg, &[x1, y2]).unwrap();
        let cs = ideal_closure(&alg, &small).subspace;
        let cb = ideal_closure(&alg, &big).subspace;
        assert!(cb.total().contains_subspace(&cs.total()).unwrap());
        let again = ideal_closure(&alg, &cs).subspace;
        assert_eq!(again, cs);
    }

    #[test]
    fn enumeration_agrees_with_oracle_on_small_instances() {
        for p in [5u64, 7] {
            let alg = n2(gf(p));
            let enum_verdict = simplicity_by_enumeration(&alg).unwrap();
            let oracle = simplicity_oracle(&alg, DEFAULT_SEED).unwrap();
            assert_eq!(enum_verdict, oracle.verdict);
            assert_eq!(enum_verdict, Verdict::Simple);

            let basis = vec![
                BasisElement::new("u", "a", Parity::Even),
                BasisElement::new("v", "b", Parity::Odd),
            ];
            let ab = Algebra::new(gf(p), basis, Map::new(), None).unwrap();
            assert_eq!(
                simplicity_by_enumeration(&ab).unwrap(),
                simplicity_oracle(&ab, DEFAULT_SEED).unwrap().verdict
            );
        }
    }

    #[test]
    fn subspace_enumeration_counts() {
        // GF(2), dim 2: 1 zero + 3 lines + 1 plane = 5 subspaces
        let f = gf(2);
        let basis = vec![
            BasisElement::new("u", "a", Parity::Even),
            BasisElement::new("v", "a", Parity::Even),
        ];
        let alg = Algebra::new(f, basis, Map::new(), None).unwrap();
        let piece = alg.homogeneous_piece(&"a".into(), Parity::Even);
        assert_eq!(all_subspaces_of(&piece, 2).len(), 5);
    }
}
