//! Support combinatorics: the support sets of a grading, the star operation
//! on support symbols and their tilde companions, the one-step expansion map
//! phi, connection witnesses and connection equivalence classes.
//!
//! The tilde companion of a label lets a chain walk a product backwards or
//! sideways. For plain symbols `u ⋆ r` is the component product; `u ⋆ r~` is
//! the preimage {c : 0 != [L_c, L_r] <= L_u}; and `u~ ⋆ r` collects every
//! label related to u by a product involving r: partners of u multiplying
//! into r (either order) plus the image and preimage of u under left
//! multiplication by r. The last case is deliberately wider than the plain
//! cases: it is the symmetric closure that makes connectedness an
//! equivalence relation and the class subspaces ideals on every valid input.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::algebra::{Algebra, Label, Parity};

/// A support label or its formal tilde companion.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SupportSymbol {
    pub base: Label,
    pub tilded: bool,
}

impl SupportSymbol {
    pub fn plain(label: impl Into<Label>) -> SupportSymbol {
        SupportSymbol {
            base: label.into(),
            tilded: false,
        }
    }

    pub fn tilde(label: impl Into<Label>) -> SupportSymbol {
        SupportSymbol {
            base: label.into(),
            tilded: true,
        }
    }

    /// The tilde involution.
    pub fn toggled(&self) -> SupportSymbol {
        SupportSymbol {
            base: self.base.clone(),
            tilded: !self.tilded,
        }
    }
}

impl fmt::Display for SupportSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tilded {
            write!(f, "{}~", self.base)
        } else {
            write!(f, "{}", self.base)
        }
    }
}

pub type SymbolSet = BTreeSet<SupportSymbol>;

/// Support of the grading, split by parity. The parity sets may overlap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Support {
    pub all: BTreeSet<Label>,
    pub even: BTreeSet<Label>,
    pub odd: BTreeSet<Label>,
}

/// One equivalence class of the connection relation on the support minus
/// the distinguished label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectionClass {
    pub representative: Label,
    pub members: BTreeSet<Label>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SupportError {
    #[error("label {0} is the distinguished element")]
    Distinguished(Label),
    #[error("label {0} is not in the support")]
    NotInSupport(Label),
}

/// Precomputed label-level product table for a validated algebra.
///
/// `products[(a,b)] = c` whenever 0 != [L_a, L_b] <= L_c. Built once and
/// shared by the star / phi / class computations.
#[derive(Debug, Clone)]
pub struct SupportMap {
    support: Support,
    products: BTreeMap<(Label, Label), Label>,
    distinguished: Option<Label>,
}

impl SupportMap {
    pub fn new(alg: &Algebra) -> SupportMap {
        let mut even = BTreeSet::new();
        let mut odd = BTreeSet::new();
        for b in alg.basis() {
            match b.parity {
                Parity::Even => even.insert(b.label.clone()),
                Parity::Odd => odd.insert(b.label.clone()),
            };
        }
        let all: BTreeSet<Label> = even.union(&odd).cloned().collect();
        let mut products = BTreeMap::new();
        for a in &all {
            for b in &all {
                let targets = alg.label_pair_targets(a, b);
                debug_assert!(targets.len() <= 1, "set grading must be validated first");
                if let Some(c) = targets.into_iter().next() {
                    products.insert((a.clone(), b.clone()), c);
                }
            }
        }
        SupportMap {
            support: Support { all, even, odd },
            products,
            distinguished: alg.distinguished().cloned(),
        }
    }

    pub fn support(&self) -> &Support {
        &self.support
    }

    pub fn distinguished(&self) -> Option<&Label> {
        self.distinguished.as_ref()
    }

    pub fn label_products(&self) -> &BTreeMap<(Label, Label), Label> {
        &self.products
    }

    /// Support labels other than the distinguished one.
    pub fn undistinguished(&self) -> BTreeSet<Label> {
        self.support
            .all
            .iter()
            .filter(|l| Some(*l) != self.distinguished.as_ref())
            .cloned()
            .collect()
    }

    fn target(&self, a: &Label, b: &Label) -> Option<&Label> {
        self.products.get(&(a.clone(), b.clone()))
    }

    /// The star operation on support symbols.
    pub fn star(&self, x: &SupportSymbol, y: &SupportSymbol) -> BTreeSet<Label> {
        let mut out = BTreeSet::new();
        match (x.tilded, y.tilded) {
            (false, false) => {
                if let Some(c) = self.target(&x.base, &y.base) {
                    out.insert(c.clone());
                }
            }
            (false, true) => {
                // preimage: {c : 0 != [L_c, L_t] <= L_u} for u ⋆ t~
                for ((l, r), c) in &self.products {
                    if r == &y.base && c == &x.base {
                        out.insert(l.clone());
                    }
                }
            }
            (true, false) => {
                // partners of the tilde base multiplying into r, plus the
                // image and preimage of the base under left product by r
                let t = &x.base;
                let r = &y.base;
                for ((l, rr), c) in &self.products {
                    // [L_t, L_c] <= L_r
                    if l == t && c == r {
                        out.insert(rr.clone());
                    }
                    // [L_c, L_t] <= L_r
                    if rr == t && c == r {
                        out.insert(l.clone());
                    }
                    // [L_r, L_c] <= L_t
                    if l == r && c == t {
                        out.insert(rr.clone());
                    }
                }
                // [L_r, L_t] <= L_c
                if let Some(c) = self.target(r, t) {
                    out.insert(c.clone());
                }
            }
            (true, true) => {}
        }
        out
    }

    /// One-step expansion: star images of every symbol in `set` under `r`,
    /// with the distinguished label removed and the tilde copy adjoined.
    pub fn phi(&self, set: &SymbolSet, r: &SupportSymbol) -> SymbolSet {
        let mut plains: BTreeSet<Label> = BTreeSet::new();
        for x in set {
            debug_assert!(
                Some(&x.base) != self.distinguished.as_ref(),
                "phi input must avoid the distinguished symbols"
            );
            plains.extend(self.star(x, r));
        }
        if let Some(o) = &self.distinguished {
            plains.remove(o);
        }
        let mut out = SymbolSet::new();
        for l in plains {
            out.insert(SupportSymbol::plain(l.clone()));
            out.insert(SupportSymbol::tilde(l));
        }
        out
    }

    fn check_endpoint(&self, a: &Label) -> Result<(), SupportError> {
        if Some(a) == self.distinguished.as_ref() {
            return Err(SupportError::Distinguished(a.clone()));
        }
        if !self.support.all.contains(a) {
            return Err(SupportError::NotInSupport(a.clone()));
        }
        Ok(())
    }

    /// A connection chain from `a` to `b` when one exists. The chain `rs`
    /// satisfies: `rs[0]` is `a` or its tilde, each later entry is a step
    /// symbol, every intermediate iterated phi value is nonempty and the
    /// final one contains `b`. For a = b the one-element chain {a} works.
    pub fn is_connected(
        &self,
        a: &Label,
        b: &Label,
    ) -> Result<Option<Vec<SupportSymbol>>, SupportError> {
        self.check_endpoint(a)?;
        self.check_endpoint(b)?;
        if a == b {
            return Ok(Some(vec![SupportSymbol::plain(a.clone())]));
        }
        // breadth-first fixpoint from {a, a~}, recording for each newly
        // reached symbol the (previous symbol, step) that produced it
        let start = [
            SupportSymbol::plain(a.clone()),
            SupportSymbol::tilde(a.clone()),
        ];
        let mut parent: BTreeMap<SupportSymbol, Option<(SupportSymbol, SupportSymbol)>> =
            start.iter().cloned().map(|s| (s, None)).collect();
        let mut queue: VecDeque<SupportSymbol> = start.into_iter().collect();
        let steps = self.all_symbols();
        let goal = SupportSymbol::plain(b.clone());
        while let Some(x) = queue.pop_front() {
            for r in &steps {
                let image = self.phi(&SymbolSet::from([x.clone()]), r);
                for s in image {
                    if !parent.contains_key(&s) {
                        parent.insert(s.clone(), Some((x.clone(), r.clone())));
                        if s == goal {
                            return Ok(Some(backtrack(&parent, &goal)));
                        }
                        queue.push_back(s);
                    }
                }
            }
        }
        Ok(None)
    }

    /// Every plain and tilde symbol over the support, distinguished
    /// included (steps may pass through it; accumulated sets never do).
    pub fn all_symbols(&self) -> Vec<SupportSymbol> {
        let mut v = Vec::with_capacity(self.support.all.len() * 2);
        for l in &self.support.all {
            v.push(SupportSymbol::plain(l.clone()));
            v.push(SupportSymbol::tilde(l.clone()));
        }
        v
    }

    /// The partition of the support minus the distinguished label under the
    /// connection relation, computed by monotone fixpoint.
    pub fn connection_classes(&self) -> Vec<ConnectionClass> {
        let mut classes: Vec<ConnectionClass> = Vec::new();
        let mut assigned: BTreeSet<Label> = BTreeSet::new();
        let steps = self.all_symbols();
        for a in self.undistinguished() {
            if assigned.contains(&a) {
                continue;
            }
            let mut set = SymbolSet::from([
                SupportSymbol::plain(a.clone()),
                SupportSymbol::tilde(a.clone()),
            ]);
            loop {
                let mut grew = false;
                for r in &steps {
                    let image = self.phi(&set, r);
                    for s in image {
                        if set.insert(s) {
                            grew = true;
                        }
                    }
                }
                if !grew {
                    break;
                }
            }
            let mut members: BTreeSet<Label> = set
                .into_iter()
                .filter(|s| !s.tilded)
                .map(|s| s.base)
                .collect();
            members.insert(a.clone());
            assigned.extend(members.iter().cloned());
            classes.push(ConnectionClass {
                representative: a,
                members,
            });
        }
        classes
    }

    /// Re-evaluates a chain literally: `rs[0]` must be the start label or its
    /// tilde, all intermediate phi values nonempty, final value contains
    /// the target.
    pub fn verify_connection(&self, a: &Label, b: &Label, chain: &[SupportSymbol]) -> bool {
        if chain.is_empty() {
            return false;
        }
        if chain.len() == 1 {
            return chain[0] == SupportSymbol::plain(a.clone()) && a == b;
        }
        if chain[0].base != *a {
            return false;
        }
        let mut set = SymbolSet::from([chain[0].clone()]);
        for (k, r) in chain[1..].iter().enumerate() {
            set = self.phi(&set, r);
            let last = k == chain.len() - 2;
            if !last && set.is_empty() {
                return false;
            }
            if last {
                return set.contains(&SupportSymbol::plain(b.clone()));
            }
        }
        unreachable!("loop returns on the last step");
    }
}

fn backtrack(
    parent: &BTreeMap<SupportSymbol, Option<(SupportSymbol, SupportSymbol)>>,
    goal: &SupportSymbol,
) -> Vec<SupportSymbol> {
    let mut steps = Vec::new();
    let mut cur = goal.clone();
    while let Some((prev, step)) = parent.get(&cur).expect("reached symbols have parents") {
        steps.push(step.clone());
        cur = prev.clone();
    }
    steps.push(cur); // the root: a or its tilde
    steps.reverse();
    steps
}

/// Support sets of a validated algebra.
pub fn support(alg: &Algebra) -> Support {
    SupportMap::new(alg).support.clone()
}
