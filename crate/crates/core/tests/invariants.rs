//! Cross-module invariants checked over the generated corpus, with
//! independent oracles where the module logic could hide a bug: class
//! computation against literal depth-bounded chain search, and the adjoint
//! identity of the expansion map against direct evaluation.

use std::collections::{BTreeSet, HashSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use leibniz_core::algebra::{Algebra, Label, Parity};
use leibniz_core::corpus;
use leibniz_core::exactlin::Vector;
use leibniz_core::idealkit::{
    self, center, ideal_closure, leibniz_kernel, lie_annihilator, DEFAULT_SEED,
};
use leibniz_core::maxlen::{self, MaxlenContext, Side};
use leibniz_core::supportgraph::{SupportMap, SupportSymbol, SymbolSet};
use leibniz_core::GradedSubspace;

fn valid_corpus() -> Vec<(String, Algebra)> {
    corpus::full_corpus()
        .into_iter()
        .filter(|i| i.expected_valid)
        .map(|i| (i.name, i.algebra))
        .collect()
}

/// A light sample for the more expensive scans.
fn sampled_corpus(stride: usize) -> Vec<(String, Algebra)> {
    valid_corpus().into_iter().step_by(stride).collect()
}

#[test]
fn phi_distributes_over_unions() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for (name, alg) in sampled_corpus(7) {
        let map = SupportMap::new(&alg);
        let symbols: Vec<SupportSymbol> = map
            .all_symbols()
            .into_iter()
            .filter(|s| Some(&s.base) != map.distinguished())
            .collect();
        if symbols.is_empty() {
            continue;
        }
        for _ in 0..8 {
            let pick = |rng: &mut ChaCha8Rng| -> SymbolSet {
                symbols
                    .iter()
                    .filter(|_| rng.gen_bool(0.4))
                    .cloned()
                    .collect()
            };
            let u1 = pick(&mut rng);
            let u2 = pick(&mut rng);
            let r = &map.all_symbols()[rng.gen_range(0..map.all_symbols().len())];
            let joint: SymbolSet = u1.union(&u2).cloned().collect();
            let lhs = map.phi(&joint, r);
            let rhs: SymbolSet = map.phi(&u1, r).union(&map.phi(&u2, r)).cloned().collect();
            assert_eq!(lhs, rhs, "distributivity on {name}");
        }
    }
}

#[test]
fn phi_output_is_tilde_closed_and_avoids_distinguished() {
    for (name, alg) in sampled_corpus(5) {
        let map = SupportMap::new(&alg);
        let symbols: Vec<SupportSymbol> = map
            .all_symbols()
            .into_iter()
            .filter(|s| Some(&s.base) != map.distinguished())
            .collect();
        for x in &symbols {
            for r in map.all_symbols() {
                let img = map.phi(&SymbolSet::from([x.clone()]), &r);
                for s in &img {
                    assert!(img.contains(&s.toggled()), "tilde closure on {name}");
                    assert_ne!(Some(&s.base), map.distinguished(), "o excluded on {name}");
                }
            }
        }
    }
}

/// The two-sided membership property of the expansion map: for tilde-closed
/// input, a plain label lies in phi(U, r) iff one of the two adjoint
/// queries from that label meets U.
#[test]
fn phi_adjoint_property_on_random_sets() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for (name, alg) in sampled_corpus(6) {
        let map = SupportMap::new(&alg);
        let labels: Vec<Label> = map.undistinguished().into_iter().collect();
        if labels.is_empty() {
            continue;
        }
        for _ in 0..10 {
            // random tilde-closed U
            let mut u = SymbolSet::new();
            for l in &labels {
                if rng.gen_bool(0.4) {
                    u.insert(SupportSymbol::plain(l.clone()));
                    u.insert(SupportSymbol::tilde(l.clone()));
                }
            }
            let all = map.all_symbols();
            let r = &all[rng.gen_range(0..all.len())];
            let img = map.phi(&u, r);
            for a in map.support().all.iter() {
                if Some(a) == map.distinguished() {
                    continue;
                }
                let in_image = img.contains(&SupportSymbol::plain(a.clone()));
                let q1 = map.phi(
                    &SymbolSet::from([SupportSymbol::plain(a.clone())]),
                    &r.toggled(),
                );
                let q2 = map.phi(&SymbolSet::from([SupportSymbol::tilde(a.clone())]), r);
                let meets = |q: &SymbolSet| q.iter().any(|s| !s.tilded && u.contains(s));
                assert_eq!(
                    in_image,
                    meets(&q1) || meets(&q2),
                    "adjoint property on {name}"
                );
            }
        }
    }
}

/// Literal chain search: every plain label appearing in some iterated phi
/// value within the given depth, starting from the label or its tilde.
fn chain_reachable(map: &SupportMap, a: &Label, depth: usize) -> BTreeSet<Label> {
    let mut reached: BTreeSet<Label> = BTreeSet::from([a.clone()]);
    let mut frontier: HashSet<SymbolSet> = HashSet::new();
    frontier.insert(SymbolSet::from([SupportSymbol::plain(a.clone())]));
    frontier.insert(SymbolSet::from([SupportSymbol::tilde(a.clone())]));
    let steps = map.all_symbols();
    for _ in 0..depth {
        let mut next: HashSet<SymbolSet> = HashSet::new();
        for set in &frontier {
            if set.is_empty() {
                continue;
            }
            for r in &steps {
                let img = map.phi(set, r);
                for s in &img {
                    if !s.tilded {
                        reached.insert(s.base.clone());
                    }
                }
                if !img.is_empty() {
                    next.insert(img);
                }
            }
        }
        if next.is_subset(&frontier) {
            break;
        }
        frontier.extend(next);
    }
    reached
}

#[test]
fn classes_match_depth_bounded_chain_search() {
    for (name, alg) in valid_corpus() {
        let map = SupportMap::new(&alg);
        let labels = map.undistinguished();
        if labels.len() > 6 {
            continue;
        }
        let classes = map.connection_classes();
        let depth = 2 * map.support().all.len();
        for a in &labels {
            let reachable = chain_reachable(&map, a, depth);
            let class = classes
                .iter()
                .find(|c| c.members.contains(a))
                .unwrap_or_else(|| panic!("label {a} unassigned on {name}"));
            assert_eq!(
                &reachable, &class.members,
                "reachability on {name} from {a}"
            );
        }
    }
}

#[test]
fn connection_relation_is_an_equivalence() {
    for (name, alg) in valid_corpus() {
        let map = SupportMap::new(&alg);
        let labels: Vec<Label> = map.undistinguished().into_iter().collect();
        if labels.len() > 6 {
            continue;
        }
        for a in &labels {
            assert!(
                map.is_connected(a, a).unwrap().is_some(),
                "reflexive on {name}"
            );
            for b in &labels {
                let ab = map.is_connected(a, b).unwrap();
                let ba = map.is_connected(b, a).unwrap();
                assert_eq!(ab.is_some(), ba.is_some(), "symmetric on {name}: {a} {b}");
                if let Some(chain) = &ab {
                    assert!(
                        map.verify_connection(a, b, chain),
                        "witness on {name}: {a} {b}"
                    );
                }
                for c in &labels {
                    let bc = map.is_connected(b, c).unwrap();
                    let ac = map.is_connected(a, c).unwrap();
                    if ab.is_some() && bc.is_some() {
                        assert!(ac.is_some(), "transitive on {name}: {a} {b} {c}");
                    }
                }
            }
        }
    }
}

#[test]
fn homogeneous_products_land_in_star_component() {
    for (name, alg) in sampled_corpus(4) {
        let map = SupportMap::new(&alg);
        for la in alg.labels() {
            for lb in alg.labels() {
                for pa in [Parity::Even, Parity::Odd] {
                    for pb in [Parity::Even, Parity::Odd] {
                        let a = alg.homogeneous_piece(&la, pa);
                        let b = alg.homogeneous_piece(&lb, pb);
                        if a.is_zero() || b.is_zero() {
                            continue;
                        }
                        let prod = alg.bracket_span(&a, &b);
                        if prod.is_zero() {
                            continue;
                        }
                        let star = map.star(
                            &SupportSymbol::plain(la.clone()),
                            &SupportSymbol::plain(lb.clone()),
                        );
                        assert_eq!(star.len(), 1, "unique component on {name}");
                        let c = star.into_iter().next().unwrap();
                        let target = alg.homogeneous_piece(&c, pa.plus(pb));
                        assert!(
                            target.contains_subspace(&prod).unwrap(),
                            "parity component on {name}: [{la}^{pa},{lb}^{pb}]"
                        );
                    }
                }
            }
        }
    }
}

#[test]
fn kernel_vanishes_iff_lie_away_from_char_2() {
    for (name, alg) in valid_corpus() {
        if alg.field().characteristic() == 2 {
            continue;
        }
        let kernel = leibniz_kernel(&alg).unwrap();
        assert_eq!(
            alg.is_lie_superalgebra(),
            kernel.is_zero(),
            "kernel/skew equivalence on {name}"
        );
    }
}

#[test]
fn center_sits_inside_both_annihilators() {
    for (name, alg) in sampled_corpus(3) {
        let kernel = leibniz_kernel(&alg).unwrap();
        let z = center(&alg);
        for include_o in [true, false] {
            let ann = lie_annihilator(&alg, &kernel, include_o);
            assert!(ann.contains_subspace(&z).unwrap(), "containment on {name}");
        }
    }
}

#[test]
fn closure_is_monotone_idempotent_and_splits() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for (name, alg) in sampled_corpus(6) {
        if alg.dim() == 0 {
            continue;
        }
        // two random homogeneous generator sets, one containing the other
        let mut small = Vec::new();
        let mut big = Vec::new();
        for i in 0..alg.dim() {
            let v = Vector::standard_basis(alg.field(), alg.dim(), i);
            if rng.gen_bool(0.3) {
                small.push(v.clone());
                big.push(v);
            } else if rng.gen_bool(0.3) {
                big.push(v);
            }
        }
        let gs = GradedSubspace::from_homogeneous_generators(&alg, &small).unwrap();
        let gb = GradedSubspace::from_homogeneous_generators(&alg, &big).unwrap();
        let cs = ideal_closure(&alg, &gs);
        let cb = ideal_closure(&alg, &gb);
        assert!(
            cb.subspace
                .total()
                .contains_subspace(&cs.subspace.total())
                .unwrap(),
            "monotone on {name}"
        );
        assert!(cs.iterations <= alg.dim(), "iteration bound on {name}");
        let again = ideal_closure(&alg, &cs.subspace);
        assert_eq!(again.subspace, cs.subspace, "idempotent on {name}");
        // the graded split is the direct sum of its pieces
        let total = cs.subspace.total();
        let dims: usize = cs.subspace.pieces().values().map(|s| s.dim()).sum();
        assert_eq!(total.dim(), dims, "graded split on {name}");
    }
}

#[test]
fn maxlen_closures_split_into_full_pieces() {
    for (name, alg) in valid_corpus() {
        if !maxlen::is_maximal_length(&alg) {
            continue;
        }
        assert!(
            maxlen::closure_splits_into_full_pieces(&alg),
            "full-piece split on {name}"
        );
    }
}

#[test]
fn kernel_distinguished_part_is_annihilated_when_pair_generated() {
    for (name, alg) in valid_corpus() {
        if !maxlen::is_maximal_length(&alg) || !idealkit::is_tight(&alg) {
            continue;
        }
        let Some(o) = alg.distinguished().cloned() else {
            continue;
        };
        let kernel = leibniz_kernel(&alg).unwrap();
        let part = kernel.total().intersect(&alg.label_piece(&o)).unwrap();
        let ann = lie_annihilator(&alg, &kernel, false);
        assert!(
            ann.contains_subspace(&part).unwrap(),
            "kernel cap on {name}"
        );
    }
}

#[test]
fn parity_decomposition_of_distinguished_component() {
    for (name, alg) in valid_corpus() {
        let Ok(ctx) = MaxlenContext::new(&alg) else {
            continue;
        };
        assert!(
            maxlen::parity_decomposition_holds(&ctx),
            "parity split on {name}"
        );
    }
}

#[test]
fn closures_outside_kernel_hull_reach_everything_under_hypotheses() {
    // free pieces generate everything when the free side is rich and all
    // connected; kernel pieces regenerate exactly the kernel when the
    // kernel side is rich and connected
    for (name, alg) in valid_corpus() {
        let Ok(ctx) = MaxlenContext::new(&alg) else {
            continue;
        };
        let report = ctx.theorem_simplicity_check(DEFAULT_SEED).unwrap();
        let mult = ctx.support_multiplicativity().holds;
        let o_gen = idealkit::is_tight(&alg);
        if !(mult && o_gen) {
            continue;
        }
        let kernel = ctx.kernel();
        let full = leibniz_core::Subspace::full(alg.field(), alg.dim());
        let free_connected = ctx.side_all_connected(Side::Free, false);
        let kernel_connected = ctx.side_all_connected(Side::Kernel, false);
        if ctx.partition().free_labels().len() > 1 && free_connected {
            for (label, parity) in ctx.partition().tagged(Side::Free) {
                let piece = alg.homogeneous_piece(&label, parity);
                let g = GradedSubspace::from_homogeneous_generators(&alg, piece.rows()).unwrap();
                let closure = ideal_closure(&alg, &g).subspace.total();
                assert_eq!(closure, full, "free regeneration on {name} at {label}");
            }
        }
        let z_lie_zero = report
            .rows
            .iter()
            .any(|r| r.hypotheses.get("lie_annihilator_zero") == Some(&true));
        if ctx.partition().kernel_labels().len() > 1 && kernel_connected && z_lie_zero {
            for (label, parity) in ctx.partition().tagged(Side::Kernel) {
                let piece = alg.homogeneous_piece(&label, parity);
                let g = GradedSubspace::from_homogeneous_generators(&alg, piece.rows()).unwrap();
                let closure = ideal_closure(&alg, &g).subspace.total();
                assert_eq!(
                    closure,
                    kernel.total(),
                    "kernel regeneration on {name} at {label}"
                );
            }
        }
    }
}

#[test]
fn simple_implies_one_connection_class() {
    // an implication, never an equivalence
    for (name, alg) in valid_corpus() {
        let kernel = leibniz_kernel(&alg).unwrap();
        let report = idealkit::simplicity_oracle_with_kernel(&alg, &kernel, DEFAULT_SEED).unwrap();
        if report.verdict == idealkit::Verdict::Simple {
            let classes = SupportMap::new(&alg).connection_classes();
            assert_eq!(classes.len(), 1, "simple instance {name} must be one class");
        }
    }
}

#[test]
fn decomposition_rank_accounting() {
    // complement plus ideal totals always covers the algebra; equality of
    // the dimension count is exactly directness
    for (name, alg) in sampled_corpus(5) {
        let report = leibniz_core::decomposer::decompose(&alg);
        let dims: usize =
            report.complement.dim() + report.ideals.iter().map(|c| c.total.dim()).sum::<usize>();
        assert!(dims >= alg.dim(), "rank deficit on {name}");
        assert_eq!(
            dims == alg.dim(),
            report.direct,
            "directness accounting on {name}"
        );
    }
}

#[test]
fn decomposition_and_kernel_hold_on_random_valid_perturbations() {
    // stress the class machinery on perturbed tables that happen to stay
    // valid: these are not hand-picked, so they probe corners the named
    // corpus misses
    let bases = [
        corpus::gen_n2_family(2, leibniz_core::Field::Rationals),
        corpus::gen_n2_family(3, leibniz_core::Field::prime(5).unwrap()),
        corpus::simple_3dim(leibniz_core::Field::prime(7).unwrap()),
        corpus::two_step(leibniz_core::Field::Rationals),
        corpus::so3(leibniz_core::Field::prime(5).unwrap()),
        corpus::gen_n2_family(1, leibniz_core::Field::Rationals)
            .with_distinguished(Some("b1".into())),
        {
            let lie = corpus::sl2(leibniz_core::Field::prime(5).unwrap());
            let m = corpus::ModuleSpec::adjoint(&lie, leibniz_core::Parity::Even, "m");
            corpus::gen_hemisemidirect(&lie, &m)
                .expect("adjoint module is lawful")
                .with_distinguished(Some("h".into()))
        },
    ];
    let mut survivors = 0usize;
    for (bi, base) in bases.iter().enumerate() {
        for seed in 0..60u64 {
            let (alg, valid) =
                corpus::gen_perturb(base, 1 + (seed as usize % 3), seed * 31 + bi as u64);
            if !valid {
                continue;
            }
            survivors += 1;
            let report = leibniz_core::decomposer::decompose(&alg);
            assert!(
                report.all_checks_pass(),
                "decomposition checks failed on perturbation (base {bi}, seed {seed}): {:?}",
                report.checks
            );
            leibniz_kernel(&alg).expect("kernel identity on a valid algebra");
            if alg.distinguished().is_none() {
                assert!(
                    report.direct,
                    "no-distinguished direct sum (base {bi}, seed {seed})"
                );
            }
        }
    }
    assert!(
        survivors >= 20,
        "perturbation fuzzing produced too few valid survivors"
    );
}

#[test]
fn core_types_are_shareable_across_threads() {
    fn assert_send_sync<T: Send + Sync>() {}
    assert_send_sync::<leibniz_core::Scalar>();
    assert_send_sync::<leibniz_core::Vector>();
    assert_send_sync::<leibniz_core::Subspace>();
    assert_send_sync::<leibniz_core::Algebra>();
    assert_send_sync::<GradedSubspace>();
    assert_send_sync::<SupportMap>();
}

#[test]
fn validation_verdicts_match_expectations() {
    let mut rejected = 0;
    for inst in corpus::full_corpus() {
        let report = inst.algebra.validate();
        assert_eq!(
            report.is_valid(),
            inst.expected_valid,
            "verdict on {}",
            inst.name
        );
        if !inst.expected_valid {
            rejected += 1;
            assert!(!report.violations.is_empty(), "witness on {}", inst.name);
        }
    }
    assert!(
        rejected >= 5,
        "the perturbation suite must produce real negatives"
    );
}
