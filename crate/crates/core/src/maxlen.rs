//! Maximal-length analysis: the support partition induced by the Leibniz
//! kernel, parity-tracked connections whose steps avoid kernel labels,
//! support multiplicativity, and empirical verification of the simplicity
//! characterization and the small-cardinality trichotomy.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::algebra::{Algebra, GradedSubspace, Label, Parity};
use crate::exactlin::Subspace;
use crate::idealkit::{
    self, ideal_closure_of_vector, is_tight, leibniz_kernel, lie_annihilator, Inconsistency,
    SimplicityReport, Verdict,
};
use crate::supportgraph::{SupportMap, SupportSymbol, SymbolSet};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MaxlenError {
    #[error("algebra is not of maximal length")]
    NotMaximalLength,
    #[error("endpoint ({0}, parity {1}) carries no nonzero piece")]
    MissingEndpoint(Label, Parity),
    #[error("endpoints lie on different sides of the kernel partition")]
    MixedSides,
    #[error(transparent)]
    Internal(#[from] Inconsistency),
    #[error("preconditions unmet: {0}")]
    PreconditionsUnmet(String),
}

/// True iff every homogeneous piece away from the distinguished label has
/// dimension zero or one.
pub fn is_maximal_length(alg: &Algebra) -> bool {
    for label in alg.labels() {
        if Some(&label) == alg.distinguished() {
            continue;
        }
        for parity in [Parity::Even, Parity::Odd] {
            if alg.homogeneous_piece(&label, parity).dim() > 1 {
                return false;
            }
        }
    }
    true
}

/// Which side of the kernel a nonzero piece lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Kernel,
    Free,
}

/// Parity-tagged classification of the support (distinguished label
/// excluded) by membership of each nonzero piece in the Leibniz kernel.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct KernelPartition {
    pub kernel_even: BTreeSet<Label>,
    pub kernel_odd: BTreeSet<Label>,
    pub free_even: BTreeSet<Label>,
    pub free_odd: BTreeSet<Label>,
}

impl KernelPartition {
    pub fn kernel_labels(&self) -> BTreeSet<Label> {
        self.kernel_even.union(&self.kernel_odd).cloned().collect()
    }

    pub fn free_labels(&self) -> BTreeSet<Label> {
        self.free_even.union(&self.free_odd).cloned().collect()
    }

    pub fn set(&self, side: Side, parity: Parity) -> &BTreeSet<Label> {
        match (side, parity) {
            (Side::Kernel, Parity::Even) => &self.kernel_even,
            (Side::Kernel, Parity::Odd) => &self.kernel_odd,
            (Side::Free, Parity::Even) => &self.free_even,
            (Side::Free, Parity::Odd) => &self.free_odd,
        }
    }

    pub fn side_of(&self, label: &Label, parity: Parity) -> Option<Side> {
        if self.set(Side::Kernel, parity).contains(label) {
            Some(Side::Kernel)
        } else if self.set(Side::Free, parity).contains(label) {
            Some(Side::Free)
        } else {
            None
        }
    }

    /// All (label, parity) tags on one side.
    pub fn tagged(&self, side: Side) -> Vec<(Label, Parity)> {
        let mut v: Vec<(Label, Parity)> = self
            .set(side, Parity::Even)
            .iter()
            .map(|l| (l.clone(), Parity::Even))
            .chain(
                self.set(side, Parity::Odd)
                    .iter()
                    .map(|l| (l.clone(), Parity::Odd)),
            )
            .collect();
        v.sort();
        v
    }
}

/// A connection step: the symbol walked through and its declared parity.
pub type ChainStep = (SupportSymbol, Parity);

/// Shared state for the maximal-length operations.
pub struct MaxlenContext<'a> {
    alg: &'a Algebra,
    map: SupportMap,
    kernel: GradedSubspace,
    partition: KernelPartition,
}

impl<'a> MaxlenContext<'a> {
    pub fn new(alg: &'a Algebra) -> Result<MaxlenContext<'a>, MaxlenError> {
        if !is_maximal_length(alg) {
            return Err(MaxlenError::NotMaximalLength);
        }
        let kernel = leibniz_kernel(alg)?;
        let partition = kernel_partition(alg, &kernel)?;
        Ok(MaxlenContext {
            alg,
            map: SupportMap::new(alg),
            kernel,
            partition,
        })
    }

    pub fn algebra(&self) -> &Algebra {
        self.alg
    }

    pub fn kernel(&self) -> &GradedSubspace {
        &self.kernel
    }

    pub fn partition(&self) -> &KernelPartition {
        &self.partition
    }

    pub fn support_map(&self) -> &SupportMap {
        &self.map
    }

    /// Parity-tracked connection from one tagged piece to another whose
    /// step symbols stay on the free side; tilde companions are admitted
    /// as steps iff `allow_tilde`. Equal labels connect with the empty
    /// chain. The witness lists the start symbol and each step with its
    /// declared parity.
    pub fn free_connected(
        &self,
        from: (&Label, Parity),
        to: (&Label, Parity),
        allow_tilde: bool,
    ) -> Result<Option<Vec<ChainStep>>, MaxlenError> {
        let side_a = self
            .partition
            .side_of(from.0, from.1)
            .ok_or_else(|| MaxlenError::MissingEndpoint(from.0.clone(), from.1))?;
        let side_b = self
            .partition
            .side_of(to.0, to.1)
            .ok_or_else(|| MaxlenError::MissingEndpoint(to.0.clone(), to.1))?;
        if side_a != side_b {
            return Err(MaxlenError::MixedSides);
        }
        if from.0 == to.0 {
            return Ok(Some(Vec::new()));
        }
        let side = side_a;

        // candidate steps: free-side labels at a declared parity
        let mut steps: Vec<ChainStep> = Vec::new();
        for parity in [Parity::Even, Parity::Odd] {
            for l in self.partition.set(Side::Free, parity) {
                steps.push((SupportSymbol::plain(l.clone()), parity));
                if allow_tilde {
                    steps.push((SupportSymbol::tilde(l.clone()), parity));
                }
            }
        }

        type State = (Vec<SupportSymbol>, Parity);
        let start_set = SymbolSet::from([SupportSymbol::plain(from.0.clone())]);
        let start: State = (start_set.iter().cloned().collect(), from.1);
        let mut seen: HashSet<State> = HashSet::from([start.clone()]);
        let mut queue: VecDeque<(SymbolSet, Parity, Vec<ChainStep>)> = VecDeque::new();
        queue.push_back((
            start_set,
            from.1,
            vec![(SupportSymbol::plain(from.0.clone()), from.1)],
        ));

        while let Some((set, parity, chain)) = queue.pop_front() {
            for (step, step_parity) in &steps {
                let next = self.map.phi(&set, step);
                let cum = parity.plus(*step_parity);
                let plains: Vec<&SupportSymbol> = next.iter().filter(|s| !s.tilded).collect();
                if plains.is_empty() {
                    continue;
                }
                // every reached label must sit on the endpoint side at the
                // cumulative parity
                if !plains
                    .iter()
                    .all(|s| self.partition.side_of(&s.base, cum) == Some(side))
                {
                    continue;
                }
                let mut new_chain = chain.clone();
                new_chain.push((step.clone(), *step_parity));
                if cum == to.1 && plains.iter().any(|s| &s.base == to.0) {
                    return Ok(Some(new_chain));
                }
                let key: State = (next.iter().cloned().collect(), cum);
                if seen.insert(key) {
                    queue.push_back((next, cum, new_chain));
                }
            }
        }
        Ok(None)
    }

    /// Every tagged piece on the side connected to every other, both
    /// parities and both directions quantified (the chain definition is
    /// directional, so ordered pairs are checked).
    pub fn side_all_connected(&self, side: Side, allow_tilde: bool) -> bool {
        let tags = self.partition.tagged(side);
        for a in &tags {
            for b in &tags {
                if a.0 == b.0 {
                    continue;
                }
                match self.free_connected((&a.0, a.1), (&b.0, b.1), allow_tilde) {
                    Ok(Some(_)) => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// The multiplicativity conditions: whenever the star combinatorics
    /// relates a piece to a (source, step) pair, the product of the source
    /// piece by the step piece must attain the full target piece. The step
    /// ranges over all support symbols for free-side targets, and over
    /// free-side symbols only for kernel-side targets.
    pub fn support_multiplicativity(&self) -> MultiplicativityReport {
        for side in [Side::Free, Side::Kernel] {
            let targets = self.partition.tagged(side);
            for (b, j) in &targets {
                for (r_label, k) in self.step_labels(side) {
                    for r in [
                        SupportSymbol::plain(r_label.clone()),
                        SupportSymbol::tilde(r_label.clone()),
                    ] {
                        let image = self.map.star(&SupportSymbol::plain(b.clone()), &r);
                        for a in image {
                            for i in [Parity::Even, Parity::Odd] {
                                if self.partition.side_of(&a, i) != Some(side) {
                                    continue;
                                }
                                let target_piece = self.alg.homogeneous_piece(&a, i);
                                let source = self.alg.homogeneous_piece(b, *j);
                                let step_piece = self.alg.homogeneous_piece(&r_label, k);
                                let product = self.alg.bracket_span(&source, &step_piece);
                                if !product
                                    .contains_subspace(&target_piece)
                                    .expect("same ambient")
                                {
                                    return MultiplicativityReport {
                                        holds: false,
                                        counterexample: Some(MultWitness {
                                            target: (a.clone(), i),
                                            source: (b.clone(), *j),
                                            step: (r.clone(), k),
                                        }),
                                    };
                                }
                            }
                        }
                    }
                }
            }
        }
        MultiplicativityReport {
            holds: true,
            counterexample: None,
        }
    }

    /// Step labels with a declared parity: any support label with a
    /// nonzero piece at that parity for free-side targets, free-side
    /// labels only for kernel-side targets.
    fn step_labels(&self, target_side: Side) -> Vec<(Label, Parity)> {
        let mut out = Vec::new();
        match target_side {
            Side::Free => {
                let s = self.map.support();
                for l in &s.even {
                    out.push((l.clone(), Parity::Even));
                }
                for l in &s.odd {
                    out.push((l.clone(), Parity::Odd));
                }
            }
            Side::Kernel => {
                for p in [Parity::Even, Parity::Odd] {
                    for l in self.partition.set(Side::Free, p) {
                        out.push((l.clone(), p));
                    }
                }
            }
        }
        out
    }

    /// Evaluates the simplicity characterization: all hypotheses, both
    /// sides of the biconditional, and the consistency implication, for
    /// every combination of the annihilator quantification and the tilde
    /// step policy. Never overrides the oracle.
    pub fn theorem_simplicity_check(&self, seed: u64) -> Result<TheoremReport, Inconsistency> {
        let oracle = idealkit::simplicity_oracle_with_kernel(self.alg, &self.kernel, seed)?;
        let oracle_simple = match oracle.verdict {
            Verdict::Simple => Some(true),
            Verdict::NotSimple => Some(false),
            Verdict::ProbablySimple => None,
        };
        let mult = self.support_multiplicativity().holds;
        let free_count = self.partition.free_labels().len();
        let kernel_count = self.partition.kernel_labels().len();
        let o_generated = is_tight(self.alg);

        let mut rows = Vec::new();
        for include_o in [true, false] {
            let z_lie = lie_annihilator(self.alg, &self.kernel, include_o);
            for allow_tilde in [false, true] {
                let mut hypotheses = BTreeMap::new();
                hypotheses.insert("maximal_length".to_string(), true);
                hypotheses.insert("support_multiplicative".to_string(), mult);
                hypotheses.insert("free_side_bigger_than_one".to_string(), free_count > 1);
                hypotheses.insert("kernel_side_bigger_than_one".to_string(), kernel_count > 1);
                hypotheses.insert("distinguished_pair_generated".to_string(), o_generated);
                hypotheses.insert("lie_annihilator_zero".to_string(), z_lie.is_zero());
                let hypotheses_hold = hypotheses.values().all(|&v| v);
                let connectivity = self.side_all_connected(Side::Kernel, allow_tilde)
                    && self.side_all_connected(Side::Free, allow_tilde);
                let consistent = !hypotheses_hold
                    || match oracle_simple {
                        Some(s) => s == connectivity,
                        None => true, // sampling was inconclusive
                    };
                rows.push(TheoremRow {
                    include_o,
                    allow_tilde,
                    hypotheses,
                    hypotheses_hold,
                    connectivity,
                    consistent,
                });
            }
        }
        let consistent = rows.iter().all(|r| r.consistent);
        Ok(TheoremReport {
            rows,
            oracle,
            oracle_simple,
            consistent,
        })
    }

    /// Classification under the small-cardinality hypotheses: simple, or
    /// the kernel-complement shape with a single free label. A non-simple
    /// algebra with more than one free label (or none) under the
    /// hypotheses contradicts the characterization and is reported as
    /// `ImpossibleConfiguration`.
    pub fn trichotomy(&self, seed: u64) -> Result<Trichotomy, MaxlenError> {
        let report = self.theorem_simplicity_check(seed)?;
        let hyp_row = report.rows.iter().find(|r| {
            r.hypotheses.get("support_multiplicative") == Some(&true)
                && r.hypotheses.get("distinguished_pair_generated") == Some(&true)
                && r.hypotheses.get("lie_annihilator_zero") == Some(&true)
                && r.connectivity
        });
        if hyp_row.is_none() {
            return Err(MaxlenError::PreconditionsUnmet(
                "multiplicativity, pair generation, zero annihilator and connectivity are required"
                    .into(),
            ));
        }
        let free_count = self.partition.free_labels().len();
        let kernel_count = self.partition.kernel_labels().len();
        if free_count > 1 && kernel_count > 1 {
            return Err(MaxlenError::PreconditionsUnmet(
                "one of the two support sides must have at most one label".into(),
            ));
        }
        match report.oracle.verdict {
            Verdict::Simple => Ok(Trichotomy::Simple),
            Verdict::ProbablySimple => Ok(Trichotomy::Undetermined),
            Verdict::NotSimple => {
                if free_count != 1 {
                    return Ok(Trichotomy::ImpossibleConfiguration);
                }
                let free_label = self
                    .partition
                    .free_labels()
                    .into_iter()
                    .next()
                    .expect("one label");
                let l_a = self.alg.label_piece(&free_label);
                let l_o = match self.alg.distinguished() {
                    Some(o) => self.alg.label_piece(o),
                    None => Subspace::zero(self.alg.field(), self.alg.dim()),
                };
                let kernel_total = self.kernel.total();
                let sum = l_o
                    .sum(&l_a)
                    .and_then(|s| s.sum(&kernel_total))
                    .expect("same ambient");
                let rank_ok = sum == Subspace::full(self.alg.field(), self.alg.dim())
                    && l_o.dim() + l_a.dim() + kernel_total.dim() == self.alg.dim();
                let closed = self
                    .alg
                    .bracket_span(&l_a, &l_a)
                    .rows()
                    .iter()
                    .all(|w| l_a.contains(w).expect("same ambient"));
                Ok(Trichotomy::KernelComplement {
                    free_label,
                    rank_ok,
                    subalgebra_ok: closed,
                    dim_one: l_a.dim() == 1,
                })
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultWitness {
    pub target: (Label, Parity),
    pub source: (Label, Parity),
    pub step: (SupportSymbol, Parity),
}

impl fmt::Display for MultWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "piece ({},{}) not attained by [({},{}), {}@{}]",
            self.target.0, self.target.1, self.source.0, self.source.1, self.step.0, self.step.1
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MultiplicativityReport {
    pub holds: bool,
    pub counterexample: Option<MultWitness>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremRow {
    pub include_o: bool,
    pub allow_tilde: bool,
    pub hypotheses: BTreeMap<String, bool>,
    pub hypotheses_hold: bool,
    pub connectivity: bool,
    pub consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub rows: Vec<TheoremRow>,
    pub oracle: SimplicityReport,
    pub oracle_simple: Option<bool>,
    pub consistent: bool,
}

impl TheoremReport {
    /// True when some row has every hypothesis satisfied.
    pub fn hypotheses_hold_somewhere(&self) -> bool {
        self.rows.iter().any(|r| r.hypotheses_hold)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Trichotomy {
    Simple,
    KernelComplement {
        free_label: Label,
        rank_ok: bool,
        subalgebra_ok: bool,
        dim_one: bool,
    },
    ImpossibleConfiguration,
    Undetermined,
}

/// Classifies each nonzero piece away from the distinguished label by
/// membership in the kernel. In maximal length membership is all or
/// nothing; a proper intersection is an internal error.
pub fn kernel_partition(
    alg: &Algebra,
    kernel: &GradedSubspace,
) -> Result<KernelPartition, Inconsistency> {
    let mut partition = KernelPartition::default();
    for label in alg.labels() {
        if Some(&label) == alg.distinguished() {
            continue;
        }
        for parity in [Parity::Even, Parity::Odd] {
            let piece = alg.homogeneous_piece(&label, parity);
            if piece.is_zero() {
                continue;
            }
            let met = kernel.piece(&label, parity).map(Subspace::dim).unwrap_or(0);
            if met == 0 {
                match parity {
                    Parity::Even => partition.free_even.insert(label.clone()),
                    Parity::Odd => partition.free_odd.insert(label.clone()),
                };
            } else if met == piece.dim() {
                match parity {
                    Parity::Even => partition.kernel_even.insert(label.clone()),
                    Parity::Odd => partition.kernel_odd.insert(label.clone()),
                };
            } else {
                return Err(Inconsistency(format!(
                    "piece ({label},{parity}) meets the kernel properly"
                )));
            }
        }
    }
    Ok(partition)
}

/// In maximal length, whenever the distinguished component is generated by
/// pairs multiplying into it, its parity pieces decompose through
/// free-side second factors. Both sides are recomputed as subspaces.
pub fn parity_decomposition_holds(ctx: &MaxlenContext<'_>) -> bool {
    let alg = ctx.algebra();
    let Some(o) = alg.distinguished().cloned() else {
        return true; // nothing distinguished: everything is zero
    };
    if !is_tight(alg) {
        return true; // hypothesis absent, nothing to verify
    }
    let map = ctx.support_map();
    let mut even_sum = Subspace::zero(alg.field(), alg.dim());
    let mut odd_sum = Subspace::zero(alg.field(), alg.dim());
    for ((a, b), c) in map.label_products() {
        if c != &o || a == &o || b == &o {
            continue;
        }
        for pa in [Parity::Even, Parity::Odd] {
            for pb in [Parity::Even, Parity::Odd] {
                if ctx.partition().side_of(b, pb) != Some(Side::Free) {
                    continue;
                }
                let prod =
                    alg.bracket_span(&alg.homogeneous_piece(a, pa), &alg.homogeneous_piece(b, pb));
                if pa == pb {
                    even_sum = even_sum.sum(&prod).expect("same ambient");
                } else {
                    odd_sum = odd_sum.sum(&prod).expect("same ambient");
                }
            }
        }
    }
    even_sum == alg.homogeneous_piece(&o, Parity::Even)
        && odd_sum == alg.homogeneous_piece(&o, Parity::Odd)
}

/// Every ideal closure of a homogeneous generator splits as a piece of
/// the distinguished component plus full pieces elsewhere.
pub fn closure_splits_into_full_pieces(alg: &Algebra) -> bool {
    for i in 0..alg.dim() {
        let v = crate::exactlin::Vector::standard_basis(alg.field(), alg.dim(), i);
        let closure = match ideal_closure_of_vector(alg, &v) {
            Ok(r) => r.subspace,
            Err(_) => return false,
        };
        let total = closure.total();
        for label in alg.labels() {
            if Some(&label) == alg.distinguished() {
                continue;
            }
            for parity in [Parity::Even, Parity::Odd] {
                let piece = alg.homogeneous_piece(&label, parity);
                if piece.is_zero() {
                    continue;
                }
                let inter = total.intersect(&piece).expect("same ambient");
                if !(inter.is_zero() || inter == piece) {
                    return false;
                }
            }
        }
    }
    true
}
