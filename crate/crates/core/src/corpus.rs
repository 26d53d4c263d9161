//! Constructive generators of valid set-graded Leibniz superalgebras, plus
//! perturbation negatives, and the named instance collections driven by the
//! test suites. Every generator is deterministic given its parameters and
//! seed; everything except the perturbations validates by construction (and
//! is re-validated, never trusted).

use std::collections::BTreeMap;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{Algebra, BasisElement, Label, Parity};
use crate::exactlin::{Field, Vector};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("the base algebra is not a validated Lie algebra")]
    NotLie,
    #[error("module action violates the right-module law at ({0}, {1}, {2})")]
    ModuleLaw(usize, usize, usize),
    #[error("generated algebra fails validation: {0}")]
    InvalidOutput(String),
    #[error("label map must be injective on distinct merged products")]
    BadRelabel,
}

/// A named corpus member. `expected_valid` records the validator verdict
/// for perturbed instances; constructive instances are always valid.
#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub name: String,
    pub algebra: Algebra,
    pub expected_valid: bool,
}

impl CorpusInstance {
    fn valid(name: impl Into<String>, algebra: Algebra) -> CorpusInstance {
        let name = name.into();
        debug_assert!(
            algebra.validate().is_valid(),
            "instance {name} must validate"
        );
        CorpusInstance {
            name,
            algebra,
            expected_valid: true,
        }
    }
}

/// All products zero. One generator per listed (label, parity) entry;
/// labels with an empty parity list are omitted from the support.
pub fn gen_abelian(cells: &[(&str, &[Parity])], field: Field) -> Algebra {
    let mut basis = Vec::new();
    for (label, parities) in cells {
        for (k, p) in parities.iter().enumerate() {
            basis.push(BasisElement::new(format!("{label}_{k}"), *label, *p));
        }
    }
    Algebra::new(field, basis, BTreeMap::new(), None).expect("abelian input is well-formed")
}

/// Direct sum of k copies of the two-element instance `[x,x] = y`, with 2k
/// distinct labels.
pub fn gen_n2_family(k: usize, field: Field) -> Algebra {
    assert!(k >= 1, "at least one copy");
    let dim = 2 * k;
    let mut basis = Vec::new();
    let mut products = BTreeMap::new();
    for c in 0..k {
        basis.push(BasisElement::new(
            format!("x{}", c + 1),
            format!("a{}", c + 1),
            Parity::Even,
        ));
        basis.push(BasisElement::new(
            format!("y{}", c + 1),
            format!("b{}", c + 1),
            Parity::Even,
        ));
        let mut w = Vector::zero(field, dim);
        w.set(2 * c + 1, field.one());
        products.insert((2 * c, 2 * c), w);
    }
    Algebra::new(field, basis, products, None).expect("n2 family is well-formed")
}

/// A right module over a Lie algebra, by matrices: `action[j][i]` is the
/// coordinate vector (in module coordinates) of the i-th module generator
/// multiplied by the j-th Lie basis element.
#[derive(Debug, Clone)]
pub struct ModuleSpec {
    pub dim: usize,
    pub action: Vec<Vec<Vector>>,
    pub parity: Parity,
    pub labels: Vec<Label>,
    pub names: Vec<String>,
}

impl ModuleSpec {
    pub fn from_i64(
        field: Field,
        parity: Parity,
        labels: &[&str],
        names: &[&str],
        action: &[&[&[i64]]],
    ) -> ModuleSpec {
        let dim = labels.len();
        let action = action
            .iter()
            .map(|per_lie| {
                per_lie
                    .iter()
                    .map(|row| Vector::from_i64(field, row))
                    .collect()
            })
            .collect();
        ModuleSpec {
            dim,
            action,
            parity,
            labels: labels.iter().map(|l| Label::from(*l)).collect(),
            names: names.iter().map(|n| n.to_string()).collect(),
        }
    }

    /// The adjoint module of a Lie algebra given by its own structure
    /// constants: generator i times Lie element j is [g_i, g_j].
    pub fn adjoint(lie: &Algebra, parity: Parity, tag: &str) -> ModuleSpec {
        let dim = lie.dim();
        let mut action = Vec::with_capacity(dim);
        for j in 0..dim {
            let mut col = Vec::with_capacity(dim);
            for i in 0..dim {
                col.push(lie.basis_product(i, j));
            }
            action.push(col);
        }
        // action is indexed [lie element][module generator]
        let action: Vec<Vec<Vector>> = (0..dim)
            .map(|j| (0..dim).map(|i| action[j][i].clone()).collect())
            .collect();
        ModuleSpec {
            dim,
            action,
            parity,
            labels: (0..dim)
                .map(|i| Label::from(format!("{tag}{}", i + 1)))
                .collect(),
            names: (0..dim).map(|i| format!("{tag}{}", i + 1)).collect(),
        }
    }

    /// Block sum of two modules over the same Lie algebra.
    pub fn block_sum(&self, other: &ModuleSpec, field: Field) -> ModuleSpec {
        assert_eq!(self.action.len(), other.action.len(), "same Lie algebra");
        let dim = self.dim + other.dim;
        let mut action = Vec::new();
        for j in 0..self.action.len() {
            let mut col = Vec::new();
            for v in &self.action[j] {
                let mut coords = v.coords().to_vec();
                coords.extend(std::iter::repeat_n(field.zero(), other.dim));
                col.push(Vector::new(field, coords).expect("same field"));
            }
            for v in &other.action[j] {
                let mut coords = vec![field.zero(); self.dim];
                coords.extend(v.coords().iter().cloned());
                col.push(Vector::new(field, coords).expect("same field"));
            }
            action.push(col);
        }
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().cloned());
        let mut names = self.names.clone();
        names.extend(other.names.iter().cloned());
        ModuleSpec {
            dim,
            action,
            parity: self.parity,
            labels,
            names,
        }
    }
}

/// The split extension of a Lie algebra by a right module placed in the
/// given parity: products are the Lie bracket on the first summand and the
/// module action for module-by-Lie pairs; everything else vanishes. The
/// module law is checked, and the output is re-validated rather than
/// trusted.
pub fn gen_hemisemidirect(lie: &Algebra, module: &ModuleSpec) -> Result<Algebra, CorpusError> {
    if !lie.validate().is_valid()
        || !lie.is_lie_superalgebra()
        || lie.basis().iter().any(|b| b.parity == Parity::Odd)
    {
        return Err(CorpusError::NotLie);
    }
    let g = lie.dim();
    let m = module.dim;
    let field = lie.field();

    // right-module law: x.[y,z] = (x.y).z - (x.z).y on basis triples
    let act = |i: usize, j: usize| -> Vector { module.action[j][i].clone() };
    let act_vec = |v: &Vector, j: usize| -> Vector {
        let mut out = Vector::zero(field, m);
        for (i, c) in v.coords().iter().enumerate() {
            if !c.is_zero() {
                out.axpy(c, &act(i, j));
            }
        }
        out
    };
    for i in 0..m {
        for y in 0..g {
            for z in 0..g {
                let bracket = lie.basis_product(y, z);
                let mut lhs = Vector::zero(field, m);
                for (l, c) in bracket.coords().iter().enumerate() {
                    if !c.is_zero() {
                        lhs.axpy(c, &act(i, l));
                    }
                }
                let rhs = act_vec(&act(i, y), z)
                    .sub(&act_vec(&act(i, z), y))
                    .expect("module dims");
                if lhs != rhs {
                    return Err(CorpusError::ModuleLaw(i, y, z));
                }
            }
        }
    }

    let mut basis: Vec<BasisElement> = lie.basis().to_vec();
    for i in 0..m {
        basis.push(BasisElement::new(
            module.names[i].clone(),
            module.labels[i].clone(),
            module.parity,
        ));
    }
    let mut products = BTreeMap::new();
    let embed_g = |v: &Vector| -> Vector {
        let mut coords = v.coords().to_vec();
        coords.extend(std::iter::repeat_n(field.zero(), m));
        Vector::new(field, coords).expect("same field")
    };
    let embed_m = |v: &Vector| -> Vector {
        let mut coords = vec![field.zero(); g];
        coords.extend(v.coords().iter().cloned());
        Vector::new(field, coords).expect("same field")
    };
    for (&(i, j), w) in lie.products() {
        products.insert((i, j), embed_g(w));
    }
    for i in 0..m {
        for j in 0..g {
            let w = act(i, j);
            if !w.is_zero() {
                products.insert((g + i, j), embed_m(&w));
            }
        }
    }
    let alg = Algebra::new(field, basis, products, None).expect("well-formed by construction");
    let report = alg.validate();
    if !report.is_valid() {
        return Err(CorpusError::InvalidOutput(format!(
            "{:?}",
            report.violations[0]
        )));
    }
    Ok(alg)
}

/// Direct sum of algebras; names and labels get a per-part suffix so the
/// parts stay disjoint. Distinguished labels are dropped.
pub fn direct_sum(parts: &[&Algebra]) -> Algebra {
    let field = parts[0].field();
    let dim: usize = parts.iter().map(|a| a.dim()).sum();
    let mut basis = Vec::new();
    let mut products = BTreeMap::new();
    let mut offset = 0usize;
    for (pi, part) in parts.iter().enumerate() {
        assert_eq!(part.field(), field, "parts share the field");
        for b in part.basis() {
            basis.push(BasisElement::new(
                format!("{}.{}", b.name, pi + 1),
                format!("{}.{}", b.label, pi + 1),
                b.parity,
            ));
        }
        for (&(i, j), w) in part.products() {
            let mut coords = vec![field.zero(); dim];
            for (k, c) in w.coords().iter().enumerate() {
                coords[offset + k] = c.clone();
            }
            products.insert(
                (offset + i, offset + j),
                Vector::new(field, coords).expect("same field"),
            );
        }
        offset += part.dim();
    }
    Algebra::new(field, basis, products, None).expect("well-formed by construction")
}

/// Applies a label map (merging allowed). Structure constants are
/// untouched; the caller re-validates, since merges can break the grading.
pub fn relabel(alg: &Algebra, map: &BTreeMap<Label, Label>) -> Algebra {
    let basis = alg
        .basis()
        .iter()
        .map(|b| {
            let label = map
                .get(&b.label)
                .cloned()
                .unwrap_or_else(|| b.label.clone());
            BasisElement::new(b.name.clone(), label, b.parity)
        })
        .collect();
    let distinguished = alg
        .distinguished()
        .map(|o| map.get(o).cloned().unwrap_or_else(|| o.clone()));
    Algebra::new(alg.field(), basis, alg.products().clone(), distinguished)
        .expect("relabeling keeps the algebra well-formed")
}

/// Random single-entry structure-constant edits. The validity flag is the
/// validator's verdict on the result, never a prediction.
pub fn gen_perturb(base: &Algebra, edits: usize, seed: u64) -> (Algebra, bool) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let dim = base.dim();
    let mut products = base.products().clone();
    for _ in 0..edits {
        if dim == 0 {
            break;
        }
        let i = rng.gen_range(0..dim);
        let j = rng.gen_range(0..dim);
        let k = rng.gen_range(0..dim);
        let c: i64 = rng.gen_range(-2..=2);
        let mut w = products
            .get(&(i, j))
            .cloned()
            .unwrap_or_else(|| Vector::zero(base.field(), dim));
        w.set(k, base.field().from_i64(c));
        if w.is_zero() {
            products.remove(&(i, j));
        } else {
            products.insert((i, j), w);
        }
    }
    let alg = Algebra::new(
        base.field(),
        base.basis().to_vec(),
        products,
        base.distinguished().cloned(),
    )
    .expect("edits keep the table well-formed");
    let valid = alg.validate().is_valid();
    (alg, valid)
}

/// The rotation algebra: three even lines with `[J1,J2] = J3` cyclically and
/// skew partners. Every right multiplication acts as a signed 2-cycle on
/// the lines, which makes the split extensions below multiplicative.
pub fn so3(field: Field) -> Algebra {
    let basis = vec![
        BasisElement::new("j1", "j1", Parity::Even),
        BasisElement::new("j2", "j2", Parity::Even),
        BasisElement::new("j3", "j3", Parity::Even),
    ];
    let mut products = BTreeMap::new();
    let mut put = |i: usize, j: usize, coords: &[i64]| {
        products.insert((i, j), Vector::from_i64(field, coords));
    };
    put(0, 1, &[0, 0, 1]);
    put(1, 0, &[0, 0, -1]);
    put(1, 2, &[1, 0, 0]);
    put(2, 1, &[-1, 0, 0]);
    put(2, 0, &[0, 1, 0]);
    put(0, 2, &[0, -1, 0]);
    Algebra::new(field, basis, products, None).expect("so3 is well-formed")
}

/// Chevalley-basis sl2: `[h,e] = 2e`, `[h,f] = -2f`, `[e,f] = h`.
pub fn sl2(field: Field) -> Algebra {
    let basis = vec![
        BasisElement::new("h", "h", Parity::Even),
        BasisElement::new("e", "e", Parity::Even),
        BasisElement::new("f", "f", Parity::Even),
    ];
    let mut products = BTreeMap::new();
    let mut put = |i: usize, j: usize, coords: &[i64]| {
        products.insert((i, j), Vector::from_i64(field, coords));
    };
    put(0, 1, &[0, 2, 0]);
    put(1, 0, &[0, -2, 0]);
    put(0, 2, &[0, 0, -2]);
    put(2, 0, &[0, 0, 2]);
    put(1, 2, &[1, 0, 0]);
    put(2, 1, &[-1, 0, 0]);
    Algebra::new(field, basis, products, None).expect("sl2 is well-formed")
}

/// Two-dimensional nonabelian Lie algebra `[e,f] = f`.
pub fn solvable2(field: Field) -> Algebra {
    let basis = vec![
        BasisElement::new("e", "e", Parity::Even),
        BasisElement::new("f", "f", Parity::Even),
    ];
    let mut products = BTreeMap::new();
    products.insert((0, 1), Vector::from_i64(field, &[0, 1]));
    products.insert((1, 0), Vector::from_i64(field, &[0, -1]));
    Algebra::new(field, basis, products, None).expect("solvable2 is well-formed")
}

/// Heisenberg algebra `[e,f] = h` with three labels.
pub fn heisenberg(field: Field) -> Algebra {
    let basis = vec![
        BasisElement::new("e", "e", Parity::Even),
        BasisElement::new("f", "f", Parity::Even),
        BasisElement::new("h", "h", Parity::Even),
    ];
    let mut products = BTreeMap::new();
    products.insert((0, 1), Vector::from_i64(field, &[0, 0, 1]));
    products.insert((1, 0), Vector::from_i64(field, &[0, 0, -1]));
    Algebra::new(field, basis, products, None).expect("heisenberg is well-formed")
}

/// A three-dimensional simple Leibniz algebra: `[x,x] = m`, `[m,x] = n`,
/// `[n,x] = -m`; the kernel is span{m,n} and the quotient line is the only
/// free label.
pub fn simple_3dim(field: Field) -> Algebra {
    let basis = vec![
        BasisElement::new("x", "a", Parity::Even),
        BasisElement::new("m", "b", Parity::Even),
        BasisElement::new("n", "c", Parity::Even),
    ];
    let mut products = BTreeMap::new();
    products.insert((0, 0), Vector::from_i64(field, &[0, 1, 0]));
    products.insert((1, 0), Vector::from_i64(field, &[0, 0, 1]));
    products.insert((2, 0), Vector::from_i64(field, &[0, -1, 0]));
    Algebra::new(field, basis, products, None).expect("simple_3dim is well-formed")
}

/// Three free even lines with a single skew product pair `[u,v] = w`.
pub fn two_step(field: Field) -> Algebra {
    let basis = vec![
        BasisElement::new("u", "a", Parity::Even),
        BasisElement::new("v", "b", Parity::Even),
        BasisElement::new("w", "c", Parity::Even),
    ];
    let mut products = BTreeMap::new();
    products.insert((0, 1), Vector::from_i64(field, &[0, 0, 1]));
    products.insert((1, 0), Vector::from_i64(field, &[0, 0, -1]));
    Algebra::new(field, basis, products, None).expect("two_step is well-formed")
}

/// A valid maximal-length instance that fails multiplicativity: the label
/// r carries both parities and the product into L_a goes through the odd
/// line only.
pub fn mult_counterexample(field: Field) -> Algebra {
    let basis = vec![
        BasisElement::new("xb", "b", Parity::Even),
        BasisElement::new("r0", "r", Parity::Even),
        BasisElement::new("r1", "r", Parity::Odd),
        BasisElement::new("xa", "a", Parity::Odd),
    ];
    let mut products = BTreeMap::new();
    products.insert((0, 2), Vector::from_i64(field, &[0, 0, 0, 1]));
    products.insert((2, 0), Vector::from_i64(field, &[0, 0, 0, -1]));
    Algebra::new(field, basis, products, None).expect("counterexample is well-formed")
}

/// so3 extended by adjoint copies in the given parities; the workhorse of
/// the theorem suites. With a single copy the result is simple; with two
/// copies each copy of the module is a proper ideal.
pub fn so3_with_ad_copies(field: Field, parities: &[Parity]) -> Algebra {
    let lie = so3(field);
    let mut alg: Option<Algebra> = None;
    // copies of the same parity merge into one module spec; alternating
    // parities need separate extensions, so build them by block sums per
    // parity and rely on the extension being independent of order
    let mut specs: Vec<ModuleSpec> = Vec::new();
    for (ci, p) in parities.iter().enumerate() {
        specs.push(ModuleSpec::adjoint(&lie, *p, &format!("m{}_", ci + 1)));
    }
    for spec in specs {
        let base = alg.take().unwrap_or_else(|| lie.clone());
        // extend the current algebra: module acts through the so3 block
        let extended = extend_by_module(&base, &lie, &spec);
        alg = Some(extended);
    }
    let alg = alg.expect("at least one copy");
    debug_assert!(alg.validate().is_valid());
    alg
}

/// Extends `base` (which contains `lie` as its leading block) by one more
/// module over `lie`: the new generators multiply only against the leading
/// block.
fn extend_by_module(base: &Algebra, lie: &Algebra, module: &ModuleSpec) -> Algebra {
    let field = base.field();
    let old = base.dim();
    let dim = old + module.dim;
    let mut basis = base.basis().to_vec();
    for i in 0..module.dim {
        basis.push(BasisElement::new(
            module.names[i].clone(),
            module.labels[i].clone(),
            module.parity,
        ));
    }
    let mut products = BTreeMap::new();
    for (&(i, j), w) in base.products() {
        let mut coords = w.coords().to_vec();
        coords.extend(std::iter::repeat_n(field.zero(), module.dim));
        products.insert((i, j), Vector::new(field, coords).expect("same field"));
    }
    for i in 0..module.dim {
        for j in 0..lie.dim() {
            let w = &module.action[j][i];
            if w.is_zero() {
                continue;
            }
            let mut coords = vec![field.zero(); dim];
            for (k, c) in w.coords().iter().enumerate() {
                coords[old + k] = c.clone();
            }
            products.insert(
                (old + i, j),
                Vector::new(field, coords).expect("same field"),
            );
        }
    }
    Algebra::new(field, basis, products, None).expect("well-formed by construction")
}

fn standard_fields() -> Vec<Field> {
    vec![
        Field::Rationals,
        Field::prime(2).unwrap(),
        Field::prime(3).unwrap(),
        Field::prime(5).unwrap(),
        Field::prime(7).unwrap(),
    ]
}

fn field_tag(f: Field) -> String {
    match f {
        Field::Rationals => "q".into(),
        Field::Prime(p) => format!("gf{p}"),
    }
}

/// Fifty abelian instances of assorted label shapes, parities and fields.
pub fn abelian_suite() -> Vec<CorpusInstance> {
    let fields = standard_fields();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut out = Vec::new();
    for n in 0..50 {
        let field = fields[n % fields.len()];
        let nlabels = rng.gen_range(1..=4usize);
        let mut cells: Vec<(String, Vec<Parity>)> = Vec::new();
        for li in 0..nlabels {
            let count = rng.gen_range(1..=3usize);
            let parities: Vec<Parity> = (0..count)
                .map(|_| {
                    if rng.gen_bool(0.5) {
                        Parity::Even
                    } else {
                        Parity::Odd
                    }
                })
                .collect();
            cells.push((format!("l{li}"), parities));
        }
        let borrowed: Vec<(&str, &[Parity])> = cells
            .iter()
            .map(|(l, ps)| (l.as_str(), ps.as_slice()))
            .collect();
        let alg = gen_abelian(&borrowed, field);
        out.push(CorpusInstance::valid(
            format!("abelian_{n:02}_{}", field_tag(field)),
            alg,
        ));
    }
    out
}

/// Fifty direct sums of the two-element building block.
pub fn n2_suite() -> Vec<CorpusInstance> {
    let mut fields = standard_fields();
    fields.push(Field::prime(11).unwrap());
    fields.push(Field::prime(13).unwrap());
    let mut out = Vec::new();
    'outer: for k in 1..=8usize {
        for f in &fields {
            if out.len() == 50 {
                break 'outer;
            }
            out.push(CorpusInstance::valid(
                format!("n2_k{k}_{}", field_tag(*f)),
                gen_n2_family(k, *f),
            ));
            if out.len() < 50 && k == 1 {
                // distinguished variant: the target label of the square
                let alg = gen_n2_family(1, *f).with_distinguished(Some("b1".into()));
                out.push(CorpusInstance::valid(
                    format!("n2_k1_o_{}", field_tag(*f)),
                    alg,
                ));
            }
        }
    }
    out
}

/// Fifty split extensions over GF(5) and GF(7).
pub fn hemisemidirect_suite() -> Vec<CorpusInstance> {
    let mut out = Vec::new();
    for p in [5u64, 7] {
        let field = Field::prime(p).unwrap();
        let tag = field_tag(field);
        let lies: Vec<(&str, Algebra)> = vec![
            ("r2", solvable2(field)),
            ("heis", heisenberg(field)),
            ("so3", so3(field)),
            ("sl2", sl2(field)),
            (
                "ab2",
                gen_abelian(&[("g1", &[Parity::Even]), ("g2", &[Parity::Even])], field),
            ),
        ];
        for (lname, lie) in &lies {
            for parity in [Parity::Even, Parity::Odd] {
                let ptag = if parity == Parity::Even { "ev" } else { "od" };
                // adjoint copy
                let m = ModuleSpec::adjoint(lie, parity, "m");
                let alg = gen_hemisemidirect(lie, &m).expect("adjoint module is lawful");
                out.push(CorpusInstance::valid(
                    format!("hemi_{lname}_ad_{ptag}_{tag}"),
                    alg,
                ));
                // zero action, one generator
                let z = ModuleSpec {
                    dim: 1,
                    action: vec![Vector::zero(field, 1); lie.dim()]
                        .into_iter()
                        .map(|v| vec![v])
                        .collect(),
                    parity,
                    labels: vec!["z".into()],
                    names: vec!["z".into()],
                };
                let alg = gen_hemisemidirect(lie, &z).expect("zero action is lawful");
                out.push(CorpusInstance::valid(
                    format!("hemi_{lname}_zero_{ptag}_{tag}"),
                    alg,
                ));
            }
        }
    }
    // scalar action over the solvable algebra: z.e = z, z.f = 0
    for p in [5u64, 7] {
        let field = Field::prime(p).unwrap();
        let lie = solvable2(field);
        for parity in [Parity::Even, Parity::Odd] {
            let ptag = if parity == Parity::Even { "ev" } else { "od" };
            let m = ModuleSpec::from_i64(field, parity, &["z"], &["z"], &[&[&[1]], &[&[0]]]);
            let alg = gen_hemisemidirect(&lie, &m).expect("scalar action is lawful");
            out.push(CorpusInstance::valid(
                format!("hemi_r2_scalar_{ptag}_{}", field_tag(field)),
                alg,
            ));
        }
    }
    // two adjoint copies glued as one module
    for p in [5u64, 7] {
        let field = Field::prime(p).unwrap();
        for (lname, lie) in [("so3", so3(field)), ("r2", solvable2(field))] {
            for parity in [Parity::Even, Parity::Odd] {
                let ptag = if parity == Parity::Even { "ev" } else { "od" };
                let m = ModuleSpec::adjoint(&lie, parity, "m")
                    .block_sum(&ModuleSpec::adjoint(&lie, parity, "w"), field);
                let alg = gen_hemisemidirect(&lie, &m).expect("block sums stay lawful");
                out.push(CorpusInstance::valid(
                    format!("hemi_{lname}_ad2_{ptag}_{}", field_tag(field)),
                    alg,
                ));
            }
        }
    }
    out.truncate(52);
    out
}

/// Thirty relabeled variants: merges that keep the grading valid, built
/// from the direct-sum families.
pub fn relabel_suite() -> Vec<CorpusInstance> {
    let fields = standard_fields();
    let mut out = Vec::new();
    for (n, f) in fields.iter().cycle().take(15).enumerate() {
        let k = 2 + n % 3;
        let base = gen_n2_family(k, *f);
        let mut map = BTreeMap::new();
        for c in 1..=k {
            map.insert(Label::from(format!("a{c}")), Label::from("a"));
            map.insert(Label::from(format!("b{c}")), Label::from("b"));
        }
        let merged = relabel(&base, &map);
        assert!(merged.validate().is_valid());
        out.push(CorpusInstance::valid(
            format!("relabel_n2x{k}_{n:02}_{}", field_tag(*f)),
            merged,
        ));
    }
    // merge the module labels of split extensions into one fat component
    for (n, p) in [5u64, 7, 5, 7, 5, 7, 5, 7, 5, 7].iter().enumerate() {
        let field = Field::prime(*p).unwrap();
        let lie = so3(field);
        let parity = if n % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        };
        let m = ModuleSpec::adjoint(&lie, parity, "m");
        let alg = gen_hemisemidirect(&lie, &m).expect("adjoint module is lawful");
        let mut map = BTreeMap::new();
        for i in 1..=3 {
            map.insert(Label::from(format!("m{i}")), Label::from("m"));
        }
        let merged = relabel(&alg, &map);
        assert!(merged.validate().is_valid());
        out.push(CorpusInstance::valid(
            format!("relabel_so3ad_{n:02}_gf{p}"),
            merged,
        ));
    }
    // abelian merges down to a single label
    for (n, f) in fields.iter().take(5).enumerate() {
        let base = gen_abelian(
            &[
                ("l0", &[Parity::Even, Parity::Odd]),
                ("l1", &[Parity::Even]),
            ],
            *f,
        );
        let mut map = BTreeMap::new();
        map.insert(Label::from("l1"), Label::from("l0"));
        let merged = relabel(&base, &map);
        out.push(CorpusInstance::valid(
            format!("relabel_abelian_{n:02}_{}", field_tag(*f)),
            merged,
        ));
    }
    out
}

/// Twenty perturbed instances with recorded validator verdicts; bases have
/// no distinguished label.
pub fn perturb_suite() -> Vec<CorpusInstance> {
    let mut out = Vec::new();
    let bases: Vec<(String, Algebra)> = vec![
        ("n2".into(), gen_n2_family(1, Field::Rationals)),
        ("n2x2".into(), gen_n2_family(2, Field::prime(5).unwrap())),
        (
            "abelian".into(),
            gen_abelian(
                &[("a", &[Parity::Even]), ("b", &[Parity::Odd])],
                Field::prime(7).unwrap(),
            ),
        ),
        ("simple3".into(), simple_3dim(Field::Rationals)),
    ];
    let mut n = 0;
    'outer: for (bname, base) in &bases {
        for seed in 0..5u64 {
            if n == 20 {
                break 'outer;
            }
            let edits = 1 + (seed as usize % 3);
            let (alg, valid) = gen_perturb(base, edits, 1000 + 17 * seed + n as u64);
            out.push(CorpusInstance {
                name: format!("perturb_{bname}_{n:02}"),
                algebra: alg,
                expected_valid: valid,
            });
            n += 1;
        }
    }
    out
}

/// The constructive acceptance corpus: abelian, direct sums of the
/// two-element block, split extensions, relabeled variants and perturbed
/// negatives.
pub fn acceptance_corpus() -> Vec<CorpusInstance> {
    let mut all = Vec::new();
    all.extend(abelian_suite());
    all.extend(n2_suite());
    all.extend(hemisemidirect_suite());
    all.extend(relabel_suite());
    all.extend(perturb_suite());
    all
}

/// Maximal-length instances for the simplicity-characterization suites.
/// At least 25 of them satisfy every hypothesis of the characterization
/// (single adjoint copies are simple, multiple copies and block sums are
/// not), and several more exercise failing hypotheses.
pub fn theorem_corpus() -> Vec<CorpusInstance> {
    let fields: Vec<Field> = vec![
        Field::Rationals,
        Field::prime(5).unwrap(),
        Field::prime(7).unwrap(),
        Field::prime(11).unwrap(),
        Field::prime(13).unwrap(),
    ];
    let mut out = Vec::new();
    for f in &fields {
        let tag = field_tag(*f);
        for parity in [Parity::Even, Parity::Odd] {
            let ptag = if parity == Parity::Even { "ev" } else { "od" };
            // simple: one adjoint copy
            out.push(CorpusInstance::valid(
                format!("thm_so3ad_{ptag}_{tag}"),
                so3_with_ad_copies(*f, &[parity]),
            ));
            // not simple: two copies of the same parity
            out.push(CorpusInstance::valid(
                format!("thm_so3ad2_{ptag}_{tag}"),
                so3_with_ad_copies(*f, &[parity, parity]),
            ));
        }
        // not simple: mixed parities
        out.push(CorpusInstance::valid(
            format!("thm_so3ad2_mixed_{tag}"),
            so3_with_ad_copies(*f, &[Parity::Even, Parity::Odd]),
        ));
        // not simple: block sum of two simple extensions
        let block = so3_with_ad_copies(*f, &[Parity::Even]);
        out.push(CorpusInstance::valid(
            format!("thm_so3ad_sum_{tag}"),
            direct_sum(&[&block, &block]),
        ));
        // hypothesis-failing companions
        out.push(CorpusInstance::valid(
            format!("thm_so3_plain_{tag}"),
            so3(*f),
        ));
        out.push(CorpusInstance::valid(
            format!("thm_simple3_{tag}"),
            simple_3dim(*f),
        ));
        if f.characteristic() != 2 && f.characteristic() != 3 {
            let lie = sl2(*f);
            let m = ModuleSpec::adjoint(&lie, Parity::Even, "m");
            let alg = gen_hemisemidirect(&lie, &m)
                .expect("adjoint module is lawful")
                .with_distinguished(Some("h".into()));
            assert!(alg.validate().is_valid());
            out.push(CorpusInstance::valid(
                format!("thm_sl2ad_cartan_{tag}"),
                alg,
            ));
        }
        out.push(CorpusInstance::valid(
            format!("thm_twostep_{tag}"),
            two_step(*f),
        ));
        out.push(CorpusInstance::valid(
            format!("thm_multfail_{tag}"),
            mult_counterexample(*f),
        ));
    }
    out
}

/// Small instances inside the literal-enumeration window: at most three
/// labels, dimension at most four, over GF(5) and GF(7).
pub fn oracle_window_corpus() -> Vec<CorpusInstance> {
    let mut out = Vec::new();
    for p in [5u64, 7] {
        let f = Field::prime(p).unwrap();
        let tag = field_tag(f);
        out.push(CorpusInstance::valid(
            format!("win_n2_{tag}"),
            gen_n2_family(1, f),
        ));
        out.push(CorpusInstance::valid(
            format!("win_n2_o_{tag}"),
            gen_n2_family(1, f).with_distinguished(Some("b1".into())),
        ));
        // merged double block: two labels, dimension four
        let base = gen_n2_family(2, f);
        let mut map = BTreeMap::new();
        for c in 1..=2 {
            map.insert(Label::from(format!("a{c}")), Label::from("a"));
            map.insert(Label::from(format!("b{c}")), Label::from("b"));
        }
        out.push(CorpusInstance::valid(
            format!("win_n2x2_merged_{tag}"),
            relabel(&base, &map),
        ));
        out.push(CorpusInstance::valid(
            format!("win_simple3_{tag}"),
            simple_3dim(f),
        ));
        out.push(CorpusInstance::valid(
            format!("win_twostep_{tag}"),
            two_step(f),
        ));
        out.push(CorpusInstance::valid(format!("win_r2_{tag}"), solvable2(f)));
        let m = ModuleSpec::from_i64(f, Parity::Even, &["z"], &["z"], &[&[&[1]], &[&[0]]]);
        out.push(CorpusInstance::valid(
            format!("win_r2_scalar_{tag}"),
            gen_hemisemidirect(&solvable2(f), &m).expect("scalar action is lawful"),
        ));
        out.push(CorpusInstance::valid(
            format!("win_abelian_{tag}"),
            gen_abelian(
                &[("a", &[Parity::Even, Parity::Even]), ("b", &[Parity::Odd])],
                f,
            ),
        ));
        out.push(CorpusInstance::valid(
            format!("win_multfail_{tag}"),
            mult_counterexample(f),
        ));
    }
    out
}

/// Everything: the acceptance corpus plus the theorem and oracle-window
/// collections.
pub fn full_corpus() -> Vec<CorpusInstance> {
    let mut all = acceptance_corpus();
    all.extend(theorem_corpus());
    all.extend(oracle_window_corpus());
    all
}
