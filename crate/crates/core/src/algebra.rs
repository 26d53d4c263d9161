//! The data model: a set-graded Leibniz superalgebra presented by basis
//! elements (each carrying a grading label and a parity) and a sparse table
//! of structure constants, plus full validation of the defining axioms.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use thiserror::Error;

use crate::exactlin::{Field, LinError, Subspace, Vector};

/// Grading label. The grading set is an arbitrary set realized as strings;
/// no group structure is assumed anywhere.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label(pub String);

impl Label {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl From<&str> for Label {
    fn from(s: &str) -> Label {
        Label(s.to_string())
    }
}

impl From<String> for Label {
    fn from(s: String) -> Label {
        Label(s)
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Z_2 degree of a homogeneous element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn plus(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// The sign (-1)^{i*j} as an integer.
    pub fn pair_sign(self, other: Parity) -> i64 {
        if self == Parity::Odd && other == Parity::Odd {
            -1
        } else {
            1
        }
    }

    pub fn from_bit(bit: u8) -> Option<Parity> {
        match bit {
            0 => Some(Parity::Even),
            1 => Some(Parity::Odd),
            _ => None,
        }
    }

    pub fn bit(self) -> u8 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bit())
    }
}

/// A named generator living in exactly one (label, parity) cell.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisElement {
    pub name: String,
    pub label: Label,
    pub parity: Parity,
}

impl BasisElement {
    pub fn new(name: impl Into<String>, label: impl Into<Label>, parity: Parity) -> BasisElement {
        BasisElement {
            name: name.into(),
            label: label.into(),
            parity,
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("duplicate basis name {0:?}")]
    DuplicateName(String),
    #[error("empty grading label on basis element {0:?}")]
    EmptyLabel(String),
    #[error("product index ({0}, {1}) out of range")]
    IndexOutOfRange(usize, usize),
    #[error(transparent)]
    Lin(#[from] LinError),
}

/// A set-graded Leibniz superalgebra given by structure constants.
///
/// Construction checks only structural well-formedness (unique names,
/// nonempty labels, coordinate vectors over the right field). The algebra
/// axioms are checked by [`Algebra::validate`], which reports violations
/// with witnesses instead of failing.
#[derive(Debug, Clone, PartialEq)]
pub struct Algebra {
    field: Field,
    basis: Vec<BasisElement>,
    products: BTreeMap<(usize, usize), Vector>,
    distinguished: Option<Label>,
}

impl Algebra {
    pub fn new(
        field: Field,
        basis: Vec<BasisElement>,
        products: BTreeMap<(usize, usize), Vector>,
        distinguished: Option<Label>,
    ) -> Result<Algebra, AlgebraError> {
        let dim = basis.len();
        let mut seen = BTreeSet::new();
        for b in &basis {
            if !seen.insert(b.name.clone()) {
                return Err(AlgebraError::DuplicateName(b.name.clone()));
            }
            if b.label.as_str().is_empty() {
                return Err(AlgebraError::EmptyLabel(b.name.clone()));
            }
        }
        for (&(i, j), v) in &products {
            if i >= dim || j >= dim {
                return Err(AlgebraError::IndexOutOfRange(i, j));
            }
            if v.field() != field {
                return Err(AlgebraError::Lin(LinError::FieldMismatch(field, v.field())));
            }
            if v.dim() != dim {
                return Err(AlgebraError::Lin(LinError::DimensionMismatch(dim, v.dim())));
            }
        }
        let mut alg = Algebra {
            field,
            basis,
            products,
            distinguished,
        };
        // drop explicit zeros so the table is canonical
        alg.products.retain(|_, v| !v.is_zero());
        Ok(alg)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn products(&self) -> &BTreeMap<(usize, usize), Vector> {
        &self.products
    }

    pub fn distinguished(&self) -> Option<&Label> {
        self.distinguished.as_ref()
    }

    /// Same algebra with a different distinguished label (or none).
    pub fn with_distinguished(&self, label: Option<Label>) -> Algebra {
        let mut a = self.clone();
        a.distinguished = label;
        a
    }

    /// True when sign factors (-1)^{ij} collapse; legal but degenerate for
    /// superalgebra semantics.
    pub fn char2_warning(&self) -> bool {
        self.field.characteristic() == 2
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    /// Product of two basis elements, as a vector.
    pub fn basis_product(&self, i: usize, j: usize) -> Vector {
        self.products
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| Vector::zero(self.field, self.dim()))
    }

    /// Bilinear extension of the structure constants.
    pub fn multiply(&self, u: &Vector, v: &Vector) -> Result<Vector, LinError> {
        self.check_vector(u)?;
        self.check_vector(v)?;
        let mut out = Vector::zero(self.field, self.dim());
        for (&(i, j), w) in &self.products {
            let c = u.get(i).mul(v.get(j));
            if !c.is_zero() {
                out.axpy(&c, w);
            }
        }
        Ok(out)
    }

    /// Span of all products of one subspace by another.
    pub fn bracket_span(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut vecs = Vec::new();
        for u in a.rows() {
            for v in b.rows() {
                let w = self.multiply(u, v).expect("subspaces over the algebra");
                if !w.is_zero() {
                    vecs.push(w);
                }
            }
        }
        Subspace::from_vectors(self.field, self.dim(), &vecs).expect("products are compatible")
    }

    /// Span of the basis elements with the given label and parity; the zero
    /// subspace when no generator matches (unknown labels included).
    pub fn homogeneous_piece(&self, label: &Label, parity: Parity) -> Subspace {
        let vecs: Vec<Vector> = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, b)| &b.label == label && b.parity == parity)
            .map(|(i, _)| Vector::standard_basis(self.field, self.dim(), i))
            .collect();
        Subspace::from_vectors(self.field, self.dim(), &vecs).expect("basis vectors are compatible")
    }

    /// L_a = L_a^0 + L_a^1.
    pub fn label_piece(&self, label: &Label) -> Subspace {
        self.homogeneous_piece(label, Parity::Even)
            .sum(&self.homogeneous_piece(label, Parity::Odd))
            .expect("pieces share the ambient space")
    }

    /// Span of all products [L_a-basis, L_b-basis] for a pair of labels.
    pub fn label_pair_product(&self, a: &Label, b: &Label) -> Subspace {
        let mut vecs = Vec::new();
        for (&(i, j), w) in &self.products {
            if &self.basis[i].label == a && &self.basis[j].label == b {
                vecs.push(w.clone());
            }
        }
        Subspace::from_vectors(self.field, self.dim(), &vecs).expect("products are compatible")
    }

    /// Labels receiving nonzero coordinates of products of a label pair.
    pub fn label_pair_targets(&self, a: &Label, b: &Label) -> BTreeSet<Label> {
        let mut out = BTreeSet::new();
        for (&(i, j), w) in &self.products {
            if &self.basis[i].label == a && &self.basis[j].label == b {
                for (k, c) in w.coords().iter().enumerate() {
                    if !c.is_zero() {
                        out.insert(self.basis[k].label.clone());
                    }
                }
            }
        }
        out
    }

    /// All labels appearing on basis elements (the support of the grading).
    pub fn labels(&self) -> BTreeSet<Label> {
        self.basis.iter().map(|b| b.label.clone()).collect()
    }

    /// Checks the defining axioms and reports each violation with a witness.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        let dim = self.dim();

        // Z_2-grading of the product
        for (&(i, j), w) in &self.products {
            let expect = self.basis[i].parity.plus(self.basis[j].parity);
            for (k, c) in w.coords().iter().enumerate() {
                if !c.is_zero() && self.basis[k].parity != expect {
                    violations.push(Violation::Z2Grading {
                        left: i,
                        right: j,
                        coord: k,
                    });
                    break;
                }
            }
        }

        // Super Leibniz identity on all basis triples:
        // [x,[y,z]] = [[x,y],z] - (-1)^{|y||z|} [[x,z],y]
        // Triples where all three inner products are absent hold trivially.
        for x in 0..dim {
            let vx = Vector::standard_basis(self.field, dim, x);
            for y in 0..dim {
                let vy = Vector::standard_basis(self.field, dim, y);
                for z in 0..dim {
                    let yz = self.products.get(&(y, z));
                    let xy = self.products.get(&(x, y));
                    let xz = self.products.get(&(x, z));
                    if yz.is_none() && xy.is_none() && xz.is_none() {
                        continue;
                    }
                    let vz = Vector::standard_basis(self.field, dim, z);
                    let zero = Vector::zero(self.field, dim);
                    let lhs = match yz {
                        Some(w) => self.multiply(&vx, w).expect("validated vectors"),
                        None => zero.clone(),
                    };
                    let t1 = match xy {
                        Some(w) => self.multiply(w, &vz).expect("validated vectors"),
                        None => zero.clone(),
                    };
                    let t2 = match xz {
                        Some(w) => self.multiply(w, &vy).expect("validated vectors"),
                        None => zero,
                    };
                    let sign = self
                        .field
                        .from_i64(self.basis[y].parity.pair_sign(self.basis[z].parity));
                    let mut rhs = t1.clone();
                    rhs.axpy(&sign.neg(), &t2);
                    if lhs != rhs {
                        violations.push(Violation::SuperLeibniz { x, y, z });
                    }
                }
            }
        }

        // set-grading: per ordered label pair, products land in at most one
        // component
        let labels = self.labels();
        for a in &labels {
            for b in &labels {
                let targets = self.label_pair_targets(a, b);
                if targets.len() > 1 {
                    violations.push(Violation::SetGrading {
                        left: a.clone(),
                        right: b.clone(),
                        targets: targets.into_iter().collect(),
                    });
                }
            }
        }

        // distinguished element: must belong to the support, and
        // o * a != {o} for every other support label
        if let Some(o) = &self.distinguished {
            if !labels.contains(o) {
                violations.push(Violation::DistinguishedNotInSupport { label: o.clone() });
            } else {
                for a in &labels {
                    if a == o {
                        continue;
                    }
                    let targets = self.label_pair_targets(o, a);
                    if targets.len() == 1 && targets.contains(o) {
                        violations.push(Violation::DistinguishedProduct { label: a.clone() });
                    }
                }
            }
        }

        ValidationReport { violations }
    }

    /// True iff skew-supersymmetry `[x,y] = -(-1)^{ij}[y,x]` holds on all
    /// homogeneous basis pairs.
    pub fn is_lie_superalgebra(&self) -> bool {
        let dim = self.dim();
        for i in 0..dim {
            for j in 0..dim {
                let ij = self.basis_product(i, j);
                let ji = self.basis_product(j, i);
                let sign = self
                    .field
                    .from_i64(self.basis[i].parity.pair_sign(self.basis[j].parity));
                let expected = ji.scale(&sign.neg());
                if ij != expected {
                    return false;
                }
            }
        }
        true
    }

    fn check_vector(&self, v: &Vector) -> Result<(), LinError> {
        if v.field() != self.field {
            return Err(LinError::FieldMismatch(self.field, v.field()));
        }
        if v.dim() != self.dim() {
            return Err(LinError::DimensionMismatch(self.dim(), v.dim()));
        }
        Ok(())
    }
}

/// One violated axiom together with a concrete witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    /// Product of basis pair (left, right) has a coordinate of the wrong
    /// parity.
    Z2Grading {
        left: usize,
        right: usize,
        coord: usize,
    },
    /// Super Leibniz identity fails on the basis triple (x, y, z).
    SuperLeibniz { x: usize, y: usize, z: usize },
    /// Products of the label pair span more than one component.
    SetGrading {
        left: Label,
        right: Label,
        targets: Vec<Label>,
    },
    /// The distinguished label times this label lands back on the
    /// distinguished component.
    DistinguishedProduct { label: Label },
    /// The distinguished label does not occur in the support.
    DistinguishedNotInSupport { label: Label },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Z2Grading { left, right, coord } => {
                write!(
                    f,
                    "parity grading broken by product ({left},{right}) at coordinate {coord}"
                )
            }
            Violation::SuperLeibniz { x, y, z } => {
                write!(
                    f,
                    "super Leibniz identity fails on basis triple ({x},{y},{z})"
                )
            }
            Violation::SetGrading {
                left,
                right,
                targets,
            } => {
                let ts: Vec<String> = targets.iter().map(|t| t.to_string()).collect();
                write!(
                    f,
                    "products of ({left},{right}) span several components: {}",
                    ts.join(",")
                )
            }
            Violation::DistinguishedProduct { label } => {
                write!(
                    f,
                    "distinguished label multiplied by {label} lands on itself"
                )
            }
            Violation::DistinguishedNotInSupport { label } => {
                write!(f, "distinguished label {label} is outside the support")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// A graded subspace: one canonical subspace per (label, parity) cell,
/// stored in global coordinates; the total is the direct sum of the pieces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradedSubspace {
    field: Field,
    ambient: usize,
    pieces: BTreeMap<(Label, Parity), Subspace>,
}

impl GradedSubspace {
    pub fn zero(alg: &Algebra) -> GradedSubspace {
        GradedSubspace {
            field: alg.field(),
            ambient: alg.dim(),
            pieces: BTreeMap::new(),
        }
    }

    /// Splits a plain subspace into homogeneous pieces. Returns `None` when
    /// the subspace is not graded (the pieces do not add back up).
    pub fn split(alg: &Algebra, space: &Subspace) -> Option<GradedSubspace> {
        let mut pieces = BTreeMap::new();
        let mut total_dim = 0;
        for label in alg.labels() {
            for parity in [Parity::Even, Parity::Odd] {
                let cell = alg.homogeneous_piece(&label, parity);
                if cell.is_zero() {
                    continue;
                }
                let inter = space.intersect(&cell).expect("shared ambient");
                if !inter.is_zero() {
                    total_dim += inter.dim();
                    pieces.insert((label.clone(), parity), inter);
                }
            }
        }
        if total_dim == space.dim() {
            Some(GradedSubspace {
                field: alg.field(),
                ambient: alg.dim(),
                pieces,
            })
        } else {
            None
        }
    }

    /// Builds a graded subspace from homogeneous generators; any generator
    /// whose support crosses (label, parity) cells is rejected.
    pub fn from_homogeneous_generators(
        alg: &Algebra,
        gens: &[Vector],
    ) -> Result<GradedSubspace, NonHomogeneous> {
        let mut per_cell: BTreeMap<(Label, Parity), Vec<Vector>> = BTreeMap::new();
        for (gi, g) in gens.iter().enumerate() {
            if g.is_zero() {
                continue;
            }
            let mut cell: Option<(Label, Parity)> = None;
            for (k, c) in g.coords().iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let this = (alg.basis()[k].label.clone(), alg.basis()[k].parity);
                match &cell {
                    None => cell = Some(this),
                    Some(prev) if *prev == this => {}
                    Some(_) => return Err(NonHomogeneous { generator: gi }),
                }
            }
            per_cell
                .entry(cell.expect("nonzero generator has a cell"))
                .or_default()
                .push(g.clone());
        }
        let mut pieces = BTreeMap::new();
        for (cell, vecs) in per_cell {
            let s = Subspace::from_vectors(alg.field(), alg.dim(), &vecs).expect("checked above");
            if !s.is_zero() {
                pieces.insert(cell, s);
            }
        }
        Ok(GradedSubspace {
            field: alg.field(),
            ambient: alg.dim(),
            pieces,
        })
    }

    pub fn pieces(&self) -> &BTreeMap<(Label, Parity), Subspace> {
        &self.pieces
    }

    pub fn piece(&self, label: &Label, parity: Parity) -> Option<&Subspace> {
        self.pieces.get(&(label.clone(), parity))
    }

    pub fn dim(&self) -> usize {
        self.pieces.values().map(Subspace::dim).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.is_empty()
    }

    /// Sum of all pieces as a plain subspace.
    pub fn total(&self) -> Subspace {
        let mut acc = Subspace::zero(self.field, self.ambient);
        for p in self.pieces.values() {
            acc = acc.sum(p).expect("pieces share the ambient");
        }
        acc
    }

    /// Restriction to one parity, as a plain subspace.
    pub fn parity_part(&self, parity: Parity) -> Subspace {
        let mut acc = Subspace::zero(self.field, self.ambient);
        for ((_, p), s) in &self.pieces {
            if *p == parity {
                acc = acc.sum(s).expect("pieces share the ambient");
            }
        }
        acc
    }

    pub fn labels(&self) -> BTreeSet<Label> {
        self.pieces.keys().map(|(l, _)| l.clone()).collect()
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("generator {generator} is not homogeneous")]
pub struct NonHomogeneous {
    pub generator: usize,
}

/// The two-element instance used across the test suites: basis {x: (a,0),
/// y: (b,0)} with `[x,x] = y` and every other product zero.
pub fn n2(field: Field) -> Algebra {
    let basis = vec![
        BasisElement::new("x", "a", Parity::Even),
        BasisElement::new("y", "b", Parity::Even),
    ];
    let mut products = BTreeMap::new();
    products.insert((0, 0), Vector::from_i64(field, &[0, 1]));
    Algebra::new(field, basis, products, None).expect("n2 is well-formed")
}
