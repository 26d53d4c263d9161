//! Exact linear algebra over the rationals and prime fields.
//!
//! Everything downstream (gradings, ideals, decompositions) reduces to
//! canonical subspaces: reduced row-echelon bases, sums, intersections,
//! complements and membership, all with exact arithmetic so that rank
//! identities hold with zero tolerance.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// Largest admissible prime modulus.
pub const MAX_PRIME: u64 = 1 << 31;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinError {
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(Field, Field),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("{0} is not a prime in the supported range")]
    BadModulus(u64),
    #[error("first subspace is not contained in the second")]
    NotContained,
    #[error("cannot parse {0:?} as a scalar")]
    Parse(String),
}

/// Field tag carried by every scalar, vector and subspace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rationals,
    Prime(u64),
}

impl Field {
    /// Prime field constructor; rejects composites and primes above 2^31.
    pub fn prime(p: u64) -> Result<Field, LinError> {
        if p <= MAX_PRIME && is_prime(p) {
            Ok(Field::Prime(p))
        } else {
            Err(LinError::BadModulus(p))
        }
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            Field::Rationals => 0,
            Field::Prime(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::zero()),
            Field::Prime(p) => Scalar::Mod {
                value: 0,
                modulus: *p,
            },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::one()),
            Field::Prime(p) => Scalar::Mod {
                value: 1 % *p,
                modulus: *p,
            },
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            Field::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let m = (n as i128).rem_euclid(*p as i128) as u64;
                Scalar::Mod {
                    value: m,
                    modulus: *p,
                }
            }
        }
    }

    /// Parses "n" or "p/q" over the rationals, an integer (reduced mod p)
    /// over a prime field.
    pub fn parse(&self, s: &str) -> Result<Scalar, LinError> {
        let s = s.trim();
        match self {
            Field::Rationals => BigRational::from_str(s)
                .map(Scalar::Rat)
                .map_err(|_| LinError::Parse(s.to_string())),
            Field::Prime(p) => {
                let n = i128::from_str(s).map_err(|_| LinError::Parse(s.to_string()))?;
                Ok(Scalar::Mod {
                    value: n.rem_euclid(*p as i128) as u64,
                    modulus: *p,
                })
            }
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rationals => write!(f, "Q"),
            Field::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// An exact field element: arbitrary-precision rational or residue mod p.
///
/// Arithmetic between scalars of different fields is a logic error; the
/// public operations on vectors and subspaces check tags up front and the
/// scalar ops panic if that contract is broken.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rationals,
            Scalar::Mod { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Mod { value, .. } => *value == 0,
        }
    }

    pub fn add(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (
                Scalar::Mod {
                    value: a,
                    modulus: p,
                },
                Scalar::Mod {
                    value: b,
                    modulus: q,
                },
            ) if p == q => Scalar::Mod {
                value: (a + b) % p,
                modulus: *p,
            },
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    pub fn sub(&self, rhs: &Scalar) -> Scalar {
        self.add(&rhs.neg())
    }

    pub fn mul(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (
                Scalar::Mod {
                    value: a,
                    modulus: p,
                },
                Scalar::Mod {
                    value: b,
                    modulus: q,
                },
            ) if p == q => {
                let v = ((*a as u128) * (*b as u128) % (*p as u128)) as u64;
                Scalar::Mod {
                    value: v,
                    modulus: *p,
                }
            }
            _ => panic!("mixed-field scalar arithmetic"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Mod { value, modulus } => Scalar::Mod {
                value: (*modulus - *value) % *modulus,
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(a) => {
                if a.is_zero() {
                    None
                } else {
                    Some(Scalar::Rat(a.recip()))
                }
            }
            Scalar::Mod { value, modulus } => {
                if *value == 0 {
                    None
                } else {
                    Some(Scalar::Mod {
                        value: mod_inverse(*value, *modulus),
                        modulus: *modulus,
                    })
                }
            }
        }
    }

    pub fn div(&self, rhs: &Scalar) -> Option<Scalar> {
        rhs.inv().map(|i| self.mul(&i))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Mod { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // extended Euclid on i128; p prime and a != 0 mod p
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "inverse of non-unit");
    t0.rem_euclid(p as i128) as u64
}

/// Dense coordinate vector over a fixed field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    field: Field,
    coords: Vec<Scalar>,
}

impl Vector {
    pub fn new(field: Field, coords: Vec<Scalar>) -> Result<Vector, LinError> {
        for c in &coords {
            if c.field() != field {
                return Err(LinError::FieldMismatch(field, c.field()));
            }
        }
        Ok(Vector { field, coords })
    }

    pub fn zero(field: Field, dim: usize) -> Vector {
        Vector {
            field,
            coords: vec![field.zero(); dim],
        }
    }

    pub fn standard_basis(field: Field, dim: usize, i: usize) -> Vector {
        let mut v = Vector::zero(field, dim);
        v.coords[i] = field.one();
        v
    }

    pub fn from_i64(field: Field, entries: &[i64]) -> Vector {
        Vector {
            field,
            coords: entries.iter().map(|&n| field.from_i64(n)).collect(),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.coords[i]
    }

    pub fn set(&mut self, i: usize, value: Scalar) {
        assert_eq!(value.field(), self.field, "mixed-field coordinate");
        self.coords[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Scalar::is_zero)
    }

    pub fn leading_index(&self) -> Option<usize> {
        self.coords.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, rhs: &Vector) -> Result<Vector, LinError> {
        self.check_compatible(rhs)?;
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Vector {
            field: self.field,
            coords,
        })
    }

    pub fn sub(&self, rhs: &Vector) -> Result<Vector, LinError> {
        self.check_compatible(rhs)?;
        let coords = self
            .coords
            .iter()
            .zip(&rhs.coords)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Vector {
            field: self.field,
            coords,
        })
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        assert_eq!(s.field(), self.field, "mixed-field scale");
        Vector {
            field: self.field,
            coords: self.coords.iter().map(|c| c.mul(s)).collect(),
        }
    }

    /// Adds `s * rhs` in place.
    pub fn axpy(&mut self, s: &Scalar, rhs: &Vector) {
        debug_assert_eq!(self.field, rhs.field);
        debug_assert_eq!(self.dim(), rhs.dim());
        for (a, b) in self.coords.iter_mut().zip(&rhs.coords) {
            *a = a.add(&s.mul(b));
        }
    }

    fn check_compatible(&self, rhs: &Vector) -> Result<(), LinError> {
        if self.field != rhs.field {
            return Err(LinError::FieldMismatch(self.field, rhs.field));
        }
        if self.dim() != rhs.dim() {
            return Err(LinError::DimensionMismatch(self.dim(), rhs.dim()));
        }
        Ok(())
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A linear subspace in canonical form: reduced row-echelon basis with
/// pivots 1, no zero rows. Two subspaces are equal iff their row matrices
/// are identical.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    rows: Vec<Vector>,
}

impl Subspace {
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            rows: Vec::new(),
        }
    }

    pub fn full(field: Field, ambient: usize) -> Subspace {
        let rows = (0..ambient)
            .map(|i| Vector::standard_basis(field, ambient, i))
            .collect();
        Subspace {
            field,
            ambient,
            rows,
        }
    }

    /// Canonical span of the given vectors.
    pub fn from_vectors(
        field: Field,
        ambient: usize,
        vecs: &[Vector],
    ) -> Result<Subspace, LinError> {
        for v in vecs {
            if v.field() != field {
                return Err(LinError::FieldMismatch(field, v.field()));
            }
            if v.dim() != ambient {
                return Err(LinError::DimensionMismatch(ambient, v.dim()));
            }
        }
        let rows = rref(vecs.to_vec());
        Ok(Subspace {
            field,
            ambient,
            rows,
        })
    }

    pub fn line(v: &Vector) -> Subspace {
        Subspace::from_vectors(v.field(), v.dim(), std::slice::from_ref(v))
            .expect("line construction cannot mismatch")
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn rows(&self) -> &[Vector] {
        &self.rows
    }

    pub fn pivot_columns(&self) -> Vec<usize> {
        self.rows
            .iter()
            .map(|r| r.leading_index().expect("no zero rows stored"))
            .collect()
    }

    /// Residual of `v` after eliminating against the basis rows.
    pub fn reduce(&self, v: &Vector) -> Result<Vector, LinError> {
        self.check_vector(v)?;
        let mut w = v.clone();
        for row in &self.rows {
            let p = row.leading_index().expect("no zero rows stored");
            let c = w.get(p).clone();
            if !c.is_zero() {
                w.axpy(&c.neg(), row);
            }
        }
        Ok(w)
    }

    pub fn contains(&self, v: &Vector) -> Result<bool, LinError> {
        Ok(self.reduce(v)?.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> Result<bool, LinError> {
        self.check_space(other)?;
        for row in &other.rows {
            if !self.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Smallest subspace containing both operands.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check_space(other)?;
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Subspace::from_vectors(self.field, self.ambient, &all)
    }

    /// Largest subspace contained in both operands (Zassenhaus block scheme).
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, LinError> {
        self.check_space(other)?;
        let n = self.ambient;
        let f = self.field;
        // Rows [a | a] for a in A, [b | 0] for b in B; after elimination the
        // rows with zero left half carry an intersection basis on the right.
        let mut block: Vec<Vector> = Vec::with_capacity(self.dim() + other.dim());
        for a in &self.rows {
            let mut coords = a.coords().to_vec();
            coords.extend(a.coords().iter().cloned());
            block.push(Vector::new(f, coords)?);
        }
        for b in &other.rows {
            let mut coords = b.coords().to_vec();
            coords.extend(std::iter::repeat_n(f.zero(), n));
            block.push(Vector::new(f, coords)?);
        }
        let reduced = rref(block);
        let mut inter = Vec::new();
        for row in reduced {
            let left_zero = row.coords()[..n].iter().all(Scalar::is_zero);
            if left_zero {
                let right = Vector::new(f, row.coords()[n..].to_vec())?;
                if !right.is_zero() {
                    inter.push(right);
                }
            }
        }
        Subspace::from_vectors(f, n, &inter)
    }

    /// Deterministic complement of `self` inside `b`: the span of the rows
    /// of `b` whose pivot column is not a pivot column of `self`, taken in
    /// increasing pivot order.
    pub fn complement_in(&self, b: &Subspace) -> Result<Subspace, LinError> {
        self.check_space(b)?;
        if !b.contains_subspace(self)? {
            return Err(LinError::NotContained);
        }
        let a_pivots = self.pivot_columns();
        let rows: Vec<Vector> = b
            .rows
            .iter()
            .filter(|r| !a_pivots.contains(&r.leading_index().expect("no zero rows")))
            .cloned()
            .collect();
        Subspace::from_vectors(self.field, self.ambient, &rows)
    }

    fn check_space(&self, other: &Subspace) -> Result<(), LinError> {
        if self.field != other.field {
            return Err(LinError::FieldMismatch(self.field, other.field));
        }
        if self.ambient != other.ambient {
            return Err(LinError::DimensionMismatch(self.ambient, other.ambient));
        }
        Ok(())
    }

    fn check_vector(&self, v: &Vector) -> Result<(), LinError> {
        if self.field != v.field() {
            return Err(LinError::FieldMismatch(self.field, v.field()));
        }
        if self.ambient != v.dim() {
            return Err(LinError::DimensionMismatch(self.ambient, v.dim()));
        }
        Ok(())
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "0");
        }
        write!(f, "span{{")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "}}")
    }
}

/// In-place Gauss-Jordan elimination to reduced row-echelon form with unit
/// pivots; zero rows are dropped. Idempotent and span-invariant.
pub fn rref(mut rows: Vec<Vector>) -> Vec<Vector> {
    rows.retain(|r| !r.is_zero());
    if rows.is_empty() {
        return rows;
    }
    let ncols = rows[0].dim();
    let mut rank = 0usize;
    for col in 0..ncols {
        let Some(pivot_row) = (rank..rows.len()).find(|&r| !rows[r].get(col).is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot_row);
        let inv = rows[rank].get(col).inv().expect("pivot is nonzero");
        rows[rank] = rows[rank].scale(&inv);
        let pivot = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank {
                let c = row.get(col).clone();
                if !c.is_zero() {
                    row.axpy(&c.neg(), &pivot);
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows.retain(|r| !r.is_zero());
    rows
}

/// Canonical basis of the solution space of `rows * x = 0`.
///
/// `rows` are the constraint rows, each of length `ncols`.
pub fn null_space(field: Field, ncols: usize, rows: &[Vector]) -> Result<Subspace, LinError> {
    for r in rows {
        if r.field() != field {
            return Err(LinError::FieldMismatch(field, r.field()));
        }
        if r.dim() != ncols {
            return Err(LinError::DimensionMismatch(ncols, r.dim()));
        }
    }
    let reduced = rref(rows.to_vec());
    let pivots: Vec<usize> = reduced.iter().map(|r| r.leading_index().unwrap()).collect();
    let mut basis = Vec::new();
    for free in 0..ncols {
        if pivots.contains(&free) {
            continue;
        }
        let mut v = Vector::zero(field, ncols);
        v.set(free, field.one());
        for (row, &p) in reduced.iter().zip(&pivots) {
            // pivot coordinate solves to minus the free-column entry
            v.set(p, row.get(free).neg());
        }
        basis.push(v);
    }
    Subspace::from_vectors(field, ncols, &basis)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rationals
    }

    fn gf(p: u64) -> Field {
        Field::prime(p).unwrap()
    }

    fn vq(entries: &[i64]) -> Vector {
        Vector::from_i64(q(), entries)
    }

    fn span_q(vs: &[&[i64]]) -> Subspace {
        let vecs: Vec<Vector> = vs.iter().map(|e| vq(e)).collect();
        Subspace::from_vectors(q(), vs[0].len(), &vecs).unwrap()
    }

    #[test]
    fn field_constructors() {
        assert!(Field::prime(7).is_ok());
        assert!(Field::prime(2).is_ok());
        assert_eq!(Field::prime(6), Err(LinError::BadModulus(6)));
        assert_eq!(Field::prime(1), Err(LinError::BadModulus(1)));
        assert!(Field::prime((1 << 31) + 11).is_err());
    }

    #[test]
    fn scalar_exactness() {
        // (a/b) * (b/a) = 1 for nonzero rationals
        let a = q().parse("3/7").unwrap();
        let inv = a.inv().unwrap();
        assert_eq!(a.mul(&inv), q().one());
        // x^p = x in GF(p)
        let f = gf(7);
        for n in 0..7 {
            let x = f.from_i64(n);
            let mut pow = f.one();
            for _ in 0..7 {
                pow = pow.mul(&x);
            }
            assert_eq!(pow, x);
        }
    }

    #[test]
    fn scalar_parsing() {
        assert_eq!(q().parse("5").unwrap(), q().from_i64(5));
        assert_eq!(q().parse("-3/4").unwrap().neg(), q().parse("3/4").unwrap());
        assert_eq!(gf(5).parse("-1").unwrap(), gf(5).from_i64(4));
        assert!(q().parse("abc").is_err());
    }

    #[test]
    fn mixed_field_rejected() {
        let v1 = vq(&[1, 0]);
        let v2 = Vector::from_i64(gf(5), &[1, 0]);
        assert!(matches!(v1.add(&v2), Err(LinError::FieldMismatch(_, _))));
        let s = Subspace::from_vectors(q(), 2, std::slice::from_ref(&v2));
        assert!(matches!(s, Err(LinError::FieldMismatch(_, _))));
    }

    #[test]
    fn rref_zero_input() {
        let s = span_q(&[&[0, 0]]);
        assert_eq!(s.dim(), 0);
        assert_eq!(s, Subspace::zero(q(), 2));
    }

    #[test]
    fn rref_scaling_invariance() {
        let s = span_q(&[&[2, 0], &[1, 0]]);
        assert_eq!(s.dim(), 1);
        assert_eq!(s.rows()[0], vq(&[1, 0]));
    }

    #[test]
    fn rref_gf7_by_hand() {
        let f = gf(7);
        let vecs = [Vector::from_i64(f, &[1, 1]), Vector::from_i64(f, &[0, 1])];
        let s = Subspace::from_vectors(f, 2, &vecs).unwrap();
        assert_eq!(s.rows()[0], Vector::from_i64(f, &[1, 0]));
        assert_eq!(s.rows()[1], Vector::from_i64(f, &[0, 1]));
    }

    #[test]
    fn sum_examples() {
        let x = span_q(&[&[1, 0]]);
        let zero = Subspace::zero(q(), 2);
        assert_eq!(x.sum(&zero).unwrap(), x);
        let y = span_q(&[&[0, 1]]);
        assert_eq!(x.sum(&y).unwrap(), Subspace::full(q(), 2));
        let d1 = span_q(&[&[1, 1]]);
        let d2 = span_q(&[&[2, 2]]);
        assert_eq!(d1.sum(&d2).unwrap(), d1);
    }

    #[test]
    fn intersect_examples() {
        let x = span_q(&[&[1, 0]]);
        assert_eq!(x.intersect(&x).unwrap(), x);
        let y = span_q(&[&[0, 1]]);
        assert!(x.intersect(&y).unwrap().is_zero());
        let plane = Subspace::full(q(), 2);
        let diag = span_q(&[&[1, 1]]);
        assert_eq!(plane.intersect(&diag).unwrap(), diag);
    }

    #[test]
    fn complement_examples() {
        let plane = Subspace::full(q(), 2);
        let zero = Subspace::zero(q(), 2);
        assert_eq!(zero.complement_in(&plane).unwrap(), plane);
        assert_eq!(plane.complement_in(&plane).unwrap(), zero);
        let x = span_q(&[&[1, 0]]);
        assert_eq!(x.complement_in(&plane).unwrap(), span_q(&[&[0, 1]]));
        // not contained
        let d = span_q(&[&[1, 1, 0]]);
        let b = span_q(&[&[1, 0, 0]]);
        assert_eq!(d.complement_in(&b), Err(LinError::NotContained));
    }

    #[test]
    fn contains_examples() {
        let zero = Subspace::zero(q(), 2);
        assert!(zero.contains(&Vector::zero(q(), 2)).unwrap());
        let x = span_q(&[&[1, 0]]);
        assert!(!x.contains(&vq(&[0, 1])).unwrap());
        let d = span_q(&[&[1, 1]]);
        assert!(d.contains(&vq(&[3, 3])).unwrap());
    }

    #[test]
    fn null_space_small() {
        // x + y = 0 over GF(5)
        let f = gf(5);
        let k = null_space(f, 2, &[Vector::from_i64(f, &[1, 1])]).unwrap();
        assert_eq!(k.dim(), 1);
        assert!(k.contains(&Vector::from_i64(f, &[1, -1])).unwrap());
        // no constraints: whole space
        let k2 = null_space(f, 3, &[]).unwrap();
        assert_eq!(k2, Subspace::full(f, 3));
    }

    #[test]
    fn membership_matches_enumeration_over_gf() {
        // over GF(p), p <= 7, dim <= 3: contains agrees with exhaustive
        // enumeration of the subspace
        for p in [2u64, 3, 5, 7] {
            let f = gf(p);
            let s = Subspace::from_vectors(
                f,
                3,
                &[
                    Vector::from_i64(f, &[1, 2, 0]),
                    Vector::from_i64(f, &[0, 1, 1]),
                ],
            )
            .unwrap();
            let mut members = std::collections::HashSet::new();
            for a in 0..p {
                for b in 0..p {
                    let mut v = Vector::zero(f, 3);
                    v.axpy(&f.from_i64(a as i64), &s.rows()[0]);
                    v.axpy(&f.from_i64(b as i64), &s.rows()[1]);
                    members.insert(format!("{v}"));
                }
            }
            // walk the whole ambient space
            for a in 0..p {
                for b in 0..p {
                    for c in 0..p {
                        let v = Vector::from_i64(f, &[a as i64, b as i64, c as i64]);
                        let inside = s.contains(&v).unwrap();
                        assert_eq!(inside, members.contains(&format!("{v}")));
                    }
                }
            }
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_field() -> impl Strategy<Value = Field> {
            prop_oneof![
                Just(Field::Rationals),
                Just(Field::prime(2).unwrap()),
                Just(Field::prime(5).unwrap()),
                Just(Field::prime(7).unwrap()),
            ]
        }

        fn arb_vec(field: Field, dim: usize) -> impl Strategy<Value = Vector> {
            proptest::collection::vec(-4i64..=4, dim)
                .prop_map(move |es| Vector::from_i64(field, &es))
        }

        fn arb_space(field: Field, dim: usize) -> impl Strategy<Value = Subspace> {
            proptest::collection::vec(arb_vec(field, dim), 0..=3)
                .prop_map(move |vs| Subspace::from_vectors(field, dim, &vs).unwrap())
        }

        proptest! {
            #[test]
            fn dim_formula((_f, a, b) in arb_field().prop_flat_map(|f| {
                (Just(f), arb_space(f, 4), arb_space(f, 4))
            })) {
                let s = a.sum(&b).unwrap();
                let i = a.intersect(&b).unwrap();
                prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
                prop_assert!(s.contains_subspace(&a).unwrap());
                prop_assert!(s.contains_subspace(&b).unwrap());
                prop_assert!(a.contains_subspace(&i).unwrap());
                prop_assert!(b.contains_subspace(&i).unwrap());
            }

            #[test]
            fn rref_idempotent_and_scale_invariant((f, a) in arb_field().prop_flat_map(|f| {
                (Just(f), arb_space(f, 4))
            })) {
                let again = Subspace::from_vectors(f, 4, a.rows()).unwrap();
                prop_assert_eq!(&again, &a);
                // doubling every row does not change the span (char 2 makes
                // doubled rows zero, which still spans a subspace of a)
                if f.characteristic() != 2 {
                    let doubled: Vec<Vector> =
                        a.rows().iter().map(|r| r.scale(&f.from_i64(2))).collect();
                    let s = Subspace::from_vectors(f, 4, &doubled).unwrap();
                    prop_assert_eq!(&s, &a);
                }
            }

            #[test]
            fn complement_properties((_f, a, b) in arb_field().prop_flat_map(|f| {
                (Just(f), arb_space(f, 4), arb_space(f, 4))
            })) {
                let big = a.sum(&b).unwrap();
                let c = a.complement_in(&big).unwrap();
                prop_assert!(a.intersect(&c).unwrap().is_zero());
                prop_assert_eq!(a.dim() + c.dim(), big.dim());
                prop_assert_eq!(a.sum(&c).unwrap(), big);
            }
        }
    }
}
