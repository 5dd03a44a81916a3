//! Invariant counts `m_d = dim Sym^d(V^∨)^G` computed from a character table.
//!
//! For each class the symmetric-power character values come from Newton's
//! identity `s_d = (1/d) Σ_{k=1..d} a_k s_{d-k}` with `a_k = χ̄(g^k)`, and
//! `m_d` is the multiplicity of the trivial character in `s_d`.

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::chartab::CharacterTable;
use crate::cyclo::{Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::json;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MolienProfile {
    pub table: String,
    pub character: usize,
    pub char_degree: BigUint,
    /// `m_0, ..., m_D`.
    pub coefficients: Vec<BigUint>,
}

impl MolienProfile {
    pub fn max_degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn coefficient(&self, d: usize) -> Option<&BigUint> {
        self.coefficients.get(d)
    }

    /// Series notation with zero terms dropped, e.g.
    /// `1 + t^2 + 3t^4 + O(t^5)`.
    pub fn format_series(&self) -> String {
        format_series(&self.coefficients)
    }

    /// `name: m_0, m_1, ...`
    pub fn format_text(&self) -> String {
        let list: Vec<String> = self.coefficients.iter().map(BigUint::to_string).collect();
        format!("{}: {}", self.table, list.join(", "))
    }

    pub fn to_json_string(&self) -> String {
        let mut out = String::from("{\"table\": ");
        json::write_str(&mut out, &self.table);
        out.push_str(", \"character\": ");
        json::write_display(&mut out, self.character);
        out.push_str(", \"degree\": ");
        json::write_display(&mut out, &self.char_degree);
        out.push_str(", \"max_degree\": ");
        json::write_display(&mut out, self.max_degree());
        out.push_str(", \"coefficients\": [");
        for (i, m) in self.coefficients.iter().enumerate() {
            if i > 0 {
                out.push_str(", ");
            }
            json::write_display(&mut out, m);
        }
        out.push_str("], \"series\": ");
        json::write_str(&mut out, &self.format_series());
        out.push('}');
        out
    }
}

pub fn format_series(coefficients: &[BigUint]) -> String {
    let mut parts = Vec::new();
    for (d, m) in coefficients.iter().enumerate() {
        if m.is_zero() {
            continue;
        }
        let c = if d > 0 && *m == BigUint::from(1u8) { String::new() } else { m.to_string() };
        parts.push(match d {
            0 => c,
            1 => format!("{c}t"),
            _ => format!("{c}t^{d}"),
        });
    }
    parts.push(format!("O(t^{})", coefficients.len()));
    parts.join(" + ")
}

/// Parses series notation back into `m_0, ..., m_{N-1}` where `O(t^N)` closes
/// the series.
pub fn parse_series(text: &str) -> Result<Vec<BigUint>> {
    let bad = |m: String| Error::parse(format!("series `{text}`: {m}"));
    let mut terms = Vec::new();
    let mut order = None;
    for raw in text.split('+') {
        let term = raw.trim();
        if let Some(rest) = term.strip_prefix("O(t^").and_then(|r| r.strip_suffix(')')) {
            order = Some(rest.trim().parse::<usize>().map_err(|_| bad(format!("bad order term `{term}`")))?);
            continue;
        }
        if order.is_some() {
            return Err(bad("terms after O(...)".into()));
        }
        let (coeff, degree) = match term.find('t') {
            None => (term, 0),
            Some(i) => {
                let exp = &term[i + 1..];
                let degree = if exp.is_empty() {
                    1
                } else {
                    exp.strip_prefix('^')
                        .and_then(|e| e.parse().ok())
                        .ok_or_else(|| bad(format!("bad exponent in `{term}`")))?
                };
                (&term[..i], degree)
            }
        };
        let coeff = if coeff.is_empty() {
            BigUint::from(1u8)
        } else {
            coeff.parse().map_err(|_| bad(format!("bad coefficient in `{term}`")))?
        };
        terms.push((degree, coeff));
    }
    let order = order.ok_or_else(|| bad("missing O(t^N) term".into()))?;
    let mut out = vec![BigUint::zero(); order];
    for (d, c) in terms {
        if d >= order {
            return Err(bad(format!("degree {d} beyond O(t^{order})")));
        }
        out[d] += c;
    }
    Ok(out)
}

/// Values of the complex-conjugate character.
pub fn dual_character(table: &CharacterTable, index: usize) -> Result<Vec<Cyclotomic>> {
    Ok(table.character(index)?.values.iter().map(Cyclotomic::conjugate).collect())
}

/// `values[d][c]` is the value of `Sym^d f` on class `c` for `d = 0..=max_degree`,
/// where `f` is a character of `table` given by its values.
pub fn symmetric_power_values(
    table: &CharacterTable,
    f: &[Cyclotomic],
    max_degree: usize,
) -> Result<Vec<Vec<Cyclotomic>>> {
    if f.len() != table.num_classes() {
        return Err(Error::InvalidArgument(format!(
            "class function has {} values, table has {} classes",
            f.len(),
            table.num_classes()
        )));
    }
    let per_class: Vec<Vec<Cyclotomic>> = (0..table.num_classes())
        .into_par_iter()
        .map(|c| {
            let a = (1..=max_degree as u64)
                .map(|k| Ok(f[table.power_class(c, k)?].clone()))
                .collect::<Result<Vec<_>>>()?;
            Ok(newton_complete(&a, max_degree))
        })
        .collect::<Result<_>>()?;
    Ok((0..=max_degree).map(|d| per_class.iter().map(|col| col[d].clone()).collect()).collect())
}

/// Complete homogeneous values `s_0..s_D` from power sums `a_1..a_D`.
fn newton_complete(a: &[Cyclotomic], max_degree: usize) -> Vec<Cyclotomic> {
    let mut s = Vec::with_capacity(max_degree + 1);
    s.push(Cyclotomic::one());
    for d in 1..=max_degree {
        let mut acc = Cyclotomic::zero();
        for k in 1..=d {
            if !a[k - 1].is_zero() && !s[d - k].is_zero() {
                acc += &(&a[k - 1] * &s[d - k]);
            }
        }
        s.push(acc.scale(&Rational::new(1.into(), BigInt::from(d))));
    }
    s
}

/// `m_d` for `d = 0..=max_degree`, the trivial multiplicity in `Sym^d f`.
pub fn invariant_counts(table: &CharacterTable, f: &[Cyclotomic], max_degree: usize) -> Result<Vec<BigUint>> {
    let sym = symmetric_power_values(table, f, max_degree)?;
    let weights: Vec<Rational> = table
        .classes()
        .iter()
        .map(|c| Rational::from_integer(BigInt::from(c.size.clone())))
        .collect();
    let order = Rational::from_integer(BigInt::from(table.order().clone()));
    sym.iter()
        .enumerate()
        .map(|(d, row)| {
            // Summed in class order so the result never depends on scheduling.
            let mut total = Cyclotomic::zero();
            for (w, v) in weights.iter().zip(row) {
                total += &v.scale(w);
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

/// Least `k` such that every central element acts on the character at
/// `index` by a scalar whose `k`-th power is 1. Invariants can only occur in
/// degrees divisible by `k`.
pub fn central_period(table: &CharacterTable, index: usize) -> Result<u64> {
    let chi = table.character(index)?;
    let degree = chi.values[0].as_rational()?;
    let mut period = 1u64;
    for (c, class) in table.classes().iter().enumerate() {
        if class.size != BigUint::from(1u8) || c == 0 {
            continue;
        }
        let scalar = chi.values[c].scale(&degree.recip());
        let o = class.element_order;
        let k = (1..=o)
            .filter(|k| o % k == 0)
            .find(|&k| scalar.pow(k as u32) == Cyclotomic::one())
            .ok_or_else(|| Error::Validation(format!("class {c} is central but does not act by a root of unity")))?;
        period = num_integer::lcm(period, k);
    }
    Ok(period)
}

/// Invariant counts of the character at `index`, acting on `Sym(V^∨)`.
pub fn molien_coefficients(table: &CharacterTable, index: usize, max_degree: usize) -> Result<MolienProfile> {
    let dual = dual_character(table, index)?;
    let coefficients = invariant_counts(table, &dual, max_degree)?;
    Ok(MolienProfile {
        table: table.name().to_owned(),
        character: index,
        char_degree: table.character(index)?.degree(),
        coefficients,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(xs: &[u32]) -> Vec<BigUint> {
        xs.iter().map(|&x| BigUint::from(x)).collect()
    }

    #[test]
    fn series_formatting() {
        assert_eq!(format_series(&ints(&[1, 0, 1, 2, 0])), "1 + t^2 + 2t^3 + O(t^5)");
        assert_eq!(format_series(&ints(&[1, 3])), "1 + 3t + O(t^2)");
        assert_eq!(format_series(&ints(&[1, 1])), "1 + t + O(t^2)");
    }

    #[test]
    fn series_parse_roundtrip() {
        let s = "1 + t^2 + t^3 + 2t^4 + 3t^5 + O(t^7)";
        let c = parse_series(s).unwrap();
        assert_eq!(c, ints(&[1, 0, 1, 1, 2, 3, 0]));
        assert_eq!(format_series(&c), s);
        assert!(parse_series("1 + t^9 + O(t^5)").is_err());
        assert!(parse_series("1 + t^2").is_err());
        assert!(parse_series("1 + xt^2 + O(t^3)").is_err());
    }

    #[test]
    fn newton_on_cyclic_generator() {
        // Sym^d of the faithful character of C2 at the nontrivial element: (-1)^d
        let a: Vec<Cyclotomic> = (1..=6).map(|k| Cyclotomic::from(if k % 2 == 1 { -1 } else { 1 })).collect();
        let s = newton_complete(&a, 6);
        for (d, v) in s.iter().enumerate() {
            assert_eq!(*v, Cyclotomic::from(if d % 2 == 1 { -1 } else { 1 }));
        }
    }
}
