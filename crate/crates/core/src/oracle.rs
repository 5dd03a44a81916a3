//! Invariant counts from explicit matrix generators, by enumerating the
//! group and averaging `1/det(I - tM)`. Shares nothing with the character
//! table route beyond field arithmetic.

use std::collections::{HashMap, HashSet, VecDeque};

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use rayon::prelude::*;
use serde_json::Value;

use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::json;

/// Closure size limit used by the command line.
pub const DEFAULT_CAP: usize = 100_000;

/// Square matrix over cyclotomic numbers, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Cyclotomic>,
}

impl Matrix {
    pub fn identity(dim: usize) -> Self {
        let mut entries = vec![Cyclotomic::zero(); dim * dim];
        for i in 0..dim {
            entries[i * dim + i] = Cyclotomic::one();
        }
        Matrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Cyclotomic>>) -> Result<Self> {
        let dim = rows.len();
        if rows.iter().any(|r| r.len() != dim) {
            return Err(Error::Validation(format!("matrix is not square ({dim} rows)")));
        }
        Ok(Matrix { dim, entries: rows.into_iter().flatten().collect() })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Cyclotomic {
        &self.entries[i * self.dim + j]
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        let n = self.dim;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Cyclotomic::zero();
                for k in 0..n {
                    let (a, b) = (self.get(i, k), other.get(k, j));
                    if !a.is_zero() && !b.is_zero() {
                        acc += &(a * b);
                    }
                }
                entries.push(acc);
            }
        }
        Matrix { dim: n, entries }
    }

    pub fn trace(&self) -> Cyclotomic {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    /// Gauss-Jordan inverse; `None` if singular.
    pub fn inverse(&self) -> Option<Matrix> {
        let n = self.dim;
        let mut a = self.entries.clone();
        let mut b = Matrix::identity(n).entries;
        for col in 0..n {
            let pivot = (col..n).find(|&r| !a[r * n + col].is_zero())?;
            for j in 0..n {
                a.swap(col * n + j, pivot * n + j);
                b.swap(col * n + j, pivot * n + j);
            }
            let inv = a[col * n + col].inverse()?;
            for j in 0..n {
                a[col * n + j] = &a[col * n + j] * &inv;
                b[col * n + j] = &b[col * n + j] * &inv;
            }
            for r in 0..n {
                if r == col || a[r * n + col].is_zero() {
                    continue;
                }
                let f = a[r * n + col].clone();
                for j in 0..n {
                    a[r * n + j] = &a[r * n + j] - &(&f * &a[col * n + j]);
                    b[r * n + j] = &b[r * n + j] - &(&f * &b[col * n + j]);
                }
            }
        }
        Some(Matrix { dim: n, entries: b })
    }

    fn write_json(&self, out: &mut String) {
        out.push('[');
        for i in 0..self.dim {
            if i > 0 {
                out.push_str(", ");
            }
            out.push('[');
            for j in 0..self.dim {
                if j > 0 {
                    out.push_str(", ");
                }
                self.get(i, j).write_json(out);
            }
            out.push(']');
        }
        out.push(']');
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixGroupModel {
    pub name: String,
    pub dimension: usize,
    pub expected_order: Option<usize>,
    pub generators: Vec<Matrix>,
}

impl MatrixGroupModel {
    pub fn new(name: impl Into<String>, generators: Vec<Matrix>, expected_order: Option<usize>) -> Result<Self> {
        let name = name.into();
        let dimension = generators.first().map(Matrix::dim).unwrap_or(0);
        if dimension == 0 {
            return Err(Error::Validation(format!("model {name} has no generators")));
        }
        for (i, g) in generators.iter().enumerate() {
            if g.dim() != dimension {
                return Err(Error::Validation(format!(
                    "generator {i} of {name} is {}x{0}, expected {dimension}x{dimension}",
                    g.dim()
                )));
            }
            if g.inverse().is_none() {
                return Err(Error::Validation(format!("generator {i} of {name} is singular")));
            }
        }
        Ok(MatrixGroupModel { name, dimension, expected_order, generators })
    }

    pub fn from_json_bytes(bytes: &[u8]) -> Result<Self> {
        let doc = json::parse_document(bytes)?;
        let root = json::object(&doc, "model")?;
        let name = json::string(json::field(root, "name", "model")?, "name")?;
        let expected_order = match root.get("expected_order") {
            None | Some(Value::Null) => None,
            Some(v) => Some(json::u64_of(v, "expected_order")? as usize),
        };
        let mut generators = Vec::new();
        for (g, m) in json::array(json::field(root, "generators", "model")?, "generators")?.iter().enumerate() {
            let path = format!("generators[{g}]");
            let rows = json::array(m, &path)?
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    json::array(row, &format!("{path}[{i}]"))?
                        .iter()
                        .enumerate()
                        .map(|(j, v)| Cyclotomic::from_json(v, &format!("{path}[{i}][{j}]")))
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            generators.push(Matrix::from_rows(rows)?);
        }
        let model = Self::new(name, generators, expected_order)?;
        if let Some(d) = root.get("dimension") {
            let d = json::u64_of(d, "dimension")? as usize;
            if d != model.dimension {
                return Err(Error::Validation(format!("declared dimension {d}, generators are {}x{0}", model.dimension)));
            }
        }
        Ok(model)
    }

    pub fn to_json_string(&self) -> String {
        let mut out = String::from("{\n");
        json::write_key(&mut out, "name");
        json::write_str(&mut out, &self.name);
        out.push_str(",\n");
        json::write_key(&mut out, "dimension");
        json::write_display(&mut out, self.dimension);
        out.push_str(",\n");
        if let Some(o) = self.expected_order {
            json::write_key(&mut out, "expected_order");
            json::write_display(&mut out, o);
            out.push_str(",\n");
        }
        json::write_key(&mut out, "generators");
        out.push_str("[\n");
        for (i, g) in self.generators.iter().enumerate() {
            g.write_json(&mut out);
            out.push_str(if i + 1 < self.generators.len() { ",\n" } else { "\n" });
        }
        out.push_str("]\n}\n");
        out
    }

    /// The same group written in another basis: generators `P g P^{-1}`.
    pub fn conjugated(&self, p: &Matrix) -> Result<Self> {
        let p_inv = p
            .inverse()
            .ok_or_else(|| Error::InvalidArgument("change of basis is singular".into()))?;
        let generators = self.generators.iter().map(|g| p.mul(g).mul(&p_inv)).collect();
        Self::new(self.name.clone(), generators, self.expected_order)
    }
}

/// All group elements, found by breadth-first closure under the generators.
pub fn enumerate_group(model: &MatrixGroupModel, cap: usize) -> Result<Vec<Matrix>> {
    let id = Matrix::identity(model.dimension);
    let mut seen: HashSet<Matrix> = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(x) = queue.pop_front() {
        for g in &model.generators {
            let y = x.mul(g);
            if seen.contains(&y) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::CapExceeded { cap });
            }
            seen.insert(y.clone());
            elements.push(y.clone());
            queue.push_back(y);
        }
    }
    if let Some(expected) = model.expected_order {
        if elements.len() != expected {
            return Err(Error::Validation(format!(
                "{} closes to {} elements, expected {expected}",
                model.name,
                elements.len()
            )));
        }
    }
    Ok(elements)
}

type Poly = Vec<Cyclotomic>;

fn poly_mul(a: &[Cyclotomic], b: &[Cyclotomic]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Cyclotomic::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += &(x * y);
            }
        }
    }
    out
}

fn poly_add_assign(acc: &mut Poly, p: &[Cyclotomic], negate: bool) {
    if acc.len() < p.len() {
        acc.resize(p.len(), Cyclotomic::zero());
    }
    for (a, x) in acc.iter_mut().zip(p) {
        *a = if negate { &*a - x } else { &*a + x };
    }
}

/// Cofactor expansion along the first row of a matrix of polynomials.
fn poly_det(m: &[Vec<Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return vec![Cyclotomic::one()];
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc: Poly = Vec::new();
    for j in 0..n {
        if m[0][j].iter().all(Cyclotomic::is_zero) {
            continue;
        }
        let minor: Vec<Vec<Poly>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = poly_mul(&m[0][j], &poly_det(&minor));
        poly_add_assign(&mut acc, &term, j % 2 == 1);
    }
    acc
}

/// Coefficients of `det(I - tM)`, lowest degree first.
pub fn det_one_minus_t(m: &Matrix) -> Vec<Cyclotomic> {
    let n = m.dim();
    let rows: Vec<Vec<Poly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c0 = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                    vec![c0, -m.get(i, j)]
                })
                .collect()
        })
        .collect();
    let mut p = poly_det(&rows);
    p.resize(n + 1, Cyclotomic::zero());
    p
}

/// First `max_degree + 1` coefficients of `1/p(t)` for `p(0) = 1`.
pub fn invert_series(p: &[Cyclotomic], max_degree: usize) -> Result<Vec<Cyclotomic>> {
    if p.first() != Some(&Cyclotomic::one()) {
        return Err(Error::InvalidArgument("series inverse needs constant term 1".into()));
    }
    let mut q = vec![Cyclotomic::one()];
    for d in 1..=max_degree {
        let mut acc = Cyclotomic::zero();
        for i in 1..=d.min(p.len() - 1) {
            if !p[i].is_zero() && !q[d - i].is_zero() {
                acc += &(&p[i] * &q[d - i]);
            }
        }
        q.push(-acc);
    }
    Ok(q)
}

/// `m_0..m_D` averaged over the enumerated group.
pub fn molien_by_enumeration(model: &MatrixGroupModel, max_degree: usize, cap: usize) -> Result<Vec<BigUint>> {
    let elements = enumerate_group(model, cap)?;
    // Elements sharing det(I - tM) contribute identical series.
    let mut multiplicity: HashMap<Vec<Cyclotomic>, usize> = HashMap::new();
    for g in &elements {
        *multiplicity.entry(det_one_minus_t(g)).or_default() += 1;
    }
    let mut polys: Vec<(Vec<Cyclotomic>, usize)> = multiplicity.into_iter().collect();
    polys.sort_by_key(|(p, _)| format!("{p:?}"));
    let series = polys
        .par_iter()
        .map(|(p, k)| {
            let w = Rational::from_integer(BigInt::from(*k));
            Ok(invert_series(p, max_degree)?.iter().map(|c| c.scale(&w)).collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let order = Rational::from_integer(BigInt::from(elements.len()));
    (0..=max_degree)
        .map(|d| {
            let mut total = Cyclotomic::zero();
            for s in &series {
                total += &s[d];
            }
            let not_integer = |value: String| Error::NonIntegerCoefficient { degree: d, value };
            let m = total.as_rational().map_err(|_| not_integer(total.to_string()))? / &order;
            if !m.is_integer() || m.is_negative() {
                return Err(not_integer(m.to_string()));
            }
            Ok(m.to_integer().to_biguint().unwrap_or_default())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int_matrix(rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| Cyclotomic::from(x)).collect()).collect()).unwrap()
    }

    #[test]
    fn determinant_polynomial() {
        let m = int_matrix(&[&[0, 1], &[1, 0]]);
        // det(I - tM) = 1 - t^2
        assert_eq!(det_one_minus_t(&m), vec![1.into(), 0.into(), Cyclotomic::from(-1)]);
        let d = int_matrix(&[&[2, 0, 0], &[0, 3, 0], &[0, 0, 1]]);
        let p = det_one_minus_t(&d);
        // (1-2t)(1-3t)(1-t) = 1 - 6t + 11t^2 - 6t^3
        assert_eq!(p, vec![1.into(), Cyclotomic::from(-6), 11.into(), Cyclotomic::from(-6)]);
    }

    #[test]
    fn series_inverse() {
        let q = invert_series(&[1.into(), Cyclotomic::from(-1)], 5).unwrap();
        assert!(q.iter().all(|c| *c == Cyclotomic::one()));
        assert!(invert_series(&[2.into()], 3).is_err());
    }

    #[test]
    fn klein_four_invariants() {
        // diag(±1, ±1): invariants are polynomials in x^2, y^2
        let model = MatrixGroupModel::new(
            "V4",
            vec![int_matrix(&[&[-1, 0], &[0, 1]]), int_matrix(&[&[1, 0], &[0, -1]])],
            Some(4),
        )
        .unwrap();
        let m = molien_by_enumeration(&model, 6, 100).unwrap();
        let want: Vec<BigUint> = [1u32, 0, 2, 0, 3, 0, 4].iter().map(|&x| x.into()).collect();
        assert_eq!(m, want);
    }

    #[test]
    fn cap_and_order_checks() {
        let rot = int_matrix(&[&[0, -1], &[1, 0]]);
        let model = MatrixGroupModel::new("C4", vec![rot.clone()], Some(4)).unwrap();
        assert!(matches!(enumerate_group(&model, 3), Err(Error::CapExceeded { cap: 3 })));
        let wrong = MatrixGroupModel::new("C4", vec![rot], Some(5)).unwrap();
        assert!(matches!(enumerate_group(&wrong, 100), Err(Error::Validation(_))));
        let infinite = MatrixGroupModel::new("Z", vec![int_matrix(&[&[1, 1], &[0, 1]])], None).unwrap();
        assert!(matches!(enumerate_group(&infinite, 50), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn rejects_singular_generator() {
        assert!(MatrixGroupModel::new("bad", vec![int_matrix(&[&[1, 1], &[1, 1]])], None).is_err());
    }

    #[test]
    fn matrix_inverse() {
        let m = int_matrix(&[&[2, 1], &[1, 1]]);
        assert_eq!(m.mul(&m.inverse().unwrap()), Matrix::identity(2));
    }
}
