//! Character tables: ingestion, validation, power maps and class-function
//! inner products.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::Value;

use crate::cyclo::{factorize, Cyclotomic, Rational};
use crate::error::{Error, Result};
use crate::json;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub name: String,
    pub size: BigUint,
    pub element_order: u64,
    /// prime `p` ↦ index of the class containing `g^p`.
    pub power_maps: BTreeMap<u64, usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    pub name: String,
    pub values: Vec<Cyclotomic>,
}

impl Character {
    /// Value at the identity class.
    pub fn degree(&self) -> BigUint {
        self.values[0]
            .as_rational()
            .ok()
            .and_then(|q| q.to_integer().to_biguint())
            .unwrap_or_default()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverInfo {
    pub base: String,
    pub multiplier: u64,
}

/// Power maps for primes that do not divide the group order, filled in on
/// demand from the Galois action on table columns.
#[derive(Clone, Debug, Default)]
struct DerivedMaps {
    by_prime: BTreeMap<u64, OnceLock<Vec<Option<usize>>>>,
    columns: OnceLock<HashMap<Vec<Cyclotomic>, usize>>,
}

#[derive(Clone, Debug)]
pub struct CharacterTable {
    name: String,
    order: BigUint,
    cover_of: Option<CoverInfo>,
    classes: Vec<ConjugacyClass>,
    characters: Vec<Character>,
    /// Primes dividing `|G|`, i.e. dividing some element order.
    primes: Vec<u64>,
    derived: DerivedMaps,
}

impl PartialEq for CharacterTable {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.order == other.order
            && self.cover_of == other.cover_of
            && self.classes == other.classes
            && self.characters == other.characters
    }
}

impl Eq for CharacterTable {}

impl CharacterTable {
    /// Assembles and fully validates a table, including orthogonality.
    pub fn new(
        name: impl Into<String>,
        order: BigUint,
        cover_of: Option<CoverInfo>,
        classes: Vec<ConjugacyClass>,
        characters: Vec<Character>,
    ) -> Result<Self> {
        let table = Self::new_unchecked_orthogonality(name, order, cover_of, classes, characters)?;
        table.check_orthogonality()?;
        Ok(table)
    }

    /// Structural validation only. Orthogonality is left to
    /// [`CharacterTable::check_orthogonality`].
    pub fn new_unchecked_orthogonality(
        name: impl Into<String>,
        order: BigUint,
        cover_of: Option<CoverInfo>,
        classes: Vec<ConjugacyClass>,
        characters: Vec<Character>,
    ) -> Result<Self> {
        let invalid = |m: String| Err(Error::Validation(m));
        let n = classes.len();
        if n == 0 {
            return invalid("table has no classes".into());
        }
        if !classes[0].size.is_one() || classes[0].element_order != 1 {
            return invalid("first class must be the identity (size 1, order 1)".into());
        }
        let mut total = BigUint::zero();
        let mut primes: Vec<u64> = Vec::new();
        for (i, c) in classes.iter().enumerate() {
            if c.element_order == 0 {
                return invalid(format!("class {i} ({}) has element order 0", c.name));
            }
            if c.size.is_zero() || !(&order % &c.size).is_zero() {
                return invalid(format!("class {i} ({}) size {} does not divide |G| = {order}", c.name, c.size));
            }
            total += &c.size;
            primes.extend(factorize(c.element_order).into_iter().map(|(p, _)| p));
        }
        if total != order {
            return invalid(format!("class sizes sum to {total}, expected |G| = {order}"));
        }
        primes.sort_unstable();
        primes.dedup();
        for (i, c) in classes.iter().enumerate() {
            for &p in &primes {
                if !c.power_maps.contains_key(&p) {
                    return Err(Error::MissingPowerMap { class: c.name.clone(), prime: p });
                }
            }
            for (&p, &t) in &c.power_maps {
                let Some(target) = classes.get(t) else {
                    return invalid(format!("class {i} ({}) {p}-power map points to missing class {t}", c.name));
                };
                let want = c.element_order / c.element_order.gcd(&p);
                if target.element_order != want {
                    return invalid(format!(
                        "class {i} ({}) {p}-power map lands on {} of order {}, expected order {want}",
                        c.name, target.name, target.element_order
                    ));
                }
            }
        }
        if characters.len() != n {
            return invalid(format!("{} characters for {n} classes", characters.len()));
        }
        for (i, chi) in characters.iter().enumerate() {
            if chi.values.len() != n {
                return invalid(format!("character {i} ({}) has {} values, expected {n}", chi.name, chi.values.len()));
            }
            let deg_ok = chi.values[0]
                .as_rational()
                .map(|q| q.is_integer() && q.is_positive())
                .unwrap_or(false);
            if !deg_ok {
                return invalid(format!("character {i} ({}) degree {} is not a positive integer", chi.name, chi.values[0]));
            }
        }
        let max_order = classes.iter().map(|c| c.element_order).max().unwrap_or(1);
        let by_prime = (2..max_order)
            .filter(|&p| primes.binary_search(&p).is_err() && factorize(p) == [(p, 1)])
            .map(|p| (p, OnceLock::new()))
            .collect();
        Ok(CharacterTable {
            name: name.into(),
            order,
            cover_of,
            classes,
            characters,
            primes,
            derived: DerivedMaps { by_prime, columns: OnceLock::new() },
        })
    }

    /// Ingests the JSON table format.
    pub fn from_json_bytes(bytes: &[u8]) -> Result<Self> {
        let doc = json::parse_document(bytes)?;
        let (name, order, cover, classes, characters) = parse_parts(&doc)?;
        Self::new(name, order, cover, classes, characters)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> &BigUint {
        &self.order
    }

    pub fn cover_of(&self) -> Option<&CoverInfo> {
        self.cover_of.as_ref()
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn characters(&self) -> &[Character] {
        &self.characters
    }

    pub fn character(&self, index: usize) -> Result<&Character> {
        self.characters.get(index).ok_or(Error::IndexOutOfRange {
            what: "character",
            index,
            len: self.characters.len(),
        })
    }

    /// Primes dividing the group order.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    /// Index of the first character of the given degree.
    pub fn first_character_of_degree(&self, degree: &BigUint) -> Option<usize> {
        self.characters.iter().position(|c| &c.degree() == degree)
    }

    /// Smallest degree among characters other than the trivial one.
    pub fn minimal_nontrivial_degree(&self) -> Option<BigUint> {
        self.characters
            .iter()
            .filter(|c| !c.values.iter().all(|v| v == &Cyclotomic::one()))
            .map(Character::degree)
            .min()
    }

    /// Index of the class containing `g^k` for `g` in class `class`.
    pub fn power_class(&self, class: usize, k: u64) -> Result<usize> {
        let c = self.classes.get(class).ok_or(Error::IndexOutOfRange {
            what: "class",
            index: class,
            len: self.classes.len(),
        })?;
        let k = k % c.element_order;
        if k == 0 {
            return Ok(0);
        }
        let mut cur = class;
        for (p, mult) in factorize(k) {
            for _ in 0..mult {
                cur = self.prime_power(cur, p)?;
            }
        }
        Ok(cur)
    }

    fn prime_power(&self, class: usize, p: u64) -> Result<usize> {
        if let Some(&t) = self.classes[class].power_maps.get(&p) {
            return Ok(t);
        }
        let missing = || Error::MissingPowerMap { class: self.classes[class].name.clone(), prime: p };
        if self.primes.binary_search(&p).is_ok() {
            return Err(missing());
        }
        if self.classes[class].element_order == 1 {
            return Ok(class);
        }
        let map = self
            .derived
            .by_prime
            .get(&p)
            .ok_or_else(missing)?
            .get_or_init(|| self.galois_power_map(p));
        map[class].ok_or_else(missing)
    }

    /// For `p` coprime to `|G|`, `χ(g^p)` is the Galois image `σ_p(χ(g))`,
    /// so the class of `g^p` is the column matching the conjugated column.
    fn galois_power_map(&self, p: u64) -> Vec<Option<usize>> {
        let columns = self.derived.columns.get_or_init(|| {
            (0..self.classes.len()).map(|c| (self.column(c), c)).collect()
        });
        (0..self.classes.len())
            .into_par_iter()
            .map(|c| {
                let image: Vec<Cyclotomic> = self.column(c).iter().map(|v| v.galois(p)).collect();
                columns.get(&image).copied()
            })
            .collect()
    }

    fn column(&self, c: usize) -> Vec<Cyclotomic> {
        self.characters.iter().map(|chi| chi.values[c].clone()).collect()
    }

    /// `χ(g^k)` for `g` in class `class`.
    pub fn char_value_at_power(&self, chi: usize, class: usize, k: u64) -> Result<Cyclotomic> {
        let chi = self.character(chi)?;
        Ok(chi.values[self.power_class(class, k)?].clone())
    }

    /// `(1/|G|) Σ |c| f(c) conj(g(c))`.
    pub fn inner_product(&self, f: &[Cyclotomic], g: &[Cyclotomic]) -> Result<Rational> {
        let n = self.classes.len();
        if f.len() != n || g.len() != n {
            return Err(Error::InvalidArgument(format!(
                "class functions of length {} and {}, table has {n} classes",
                f.len(),
                g.len()
            )));
        }
        let weights: Vec<BigInt> = self.classes.iter().map(|c| BigInt::from(c.size.clone())).collect();
        let sum = weighted_pairing(&weights, f, g);
        let order = Rational::from_integer(BigInt::from(self.order.clone()));
        Ok(sum.as_rational()? / order)
    }

    /// Checks `⟨χ_i, χ_j⟩ = δ_ij` for every pair of characters.
    pub fn check_orthogonality(&self) -> Result<()> {
        let weights: Vec<BigInt> = self.classes.iter().map(|c| BigInt::from(c.size.clone())).collect();
        let rows = self
            .characters
            .iter()
            .enumerate()
            .map(|(i, chi)| IntegralRow::new(&chi.values).ok_or(i))
            .collect::<std::result::Result<Vec<_>, usize>>()
            .map_err(|i| {
                Error::Validation(format!("character {i} ({}) has non-integral values", self.characters[i].name))
            })?;
        let order = BigInt::from(self.order.clone());
        let n = rows.len();
        let failure = (0..n).into_par_iter().find_map_first(|i| {
            (i..n).find_map(|j| {
                let s = rows[i].pairing(&rows[j], &weights);
                let expected = if i == j { Cyclotomic::from_integer(order.clone()) } else { Cyclotomic::zero() };
                (s != expected).then(|| {
                    let q = Rational::from_integer(order.clone());
                    let shown = s.as_rational().map(|v| (v / q).to_string()).unwrap_or_else(|_| s.to_string());
                    (i, j, shown)
                })
            })
        });
        match failure {
            None => Ok(()),
            Some((i, j, v)) => Err(Error::Validation(format!(
                "orthogonality failure at pair ({i}, {j}): inner product {v}"
            ))),
        }
    }

    /// Canonical JSON text: one class or character per line.
    pub fn to_json_string(&self) -> String {
        let mut out = String::from("{\n");
        json::write_key(&mut out, "group");
        json::write_str(&mut out, &self.name);
        out.push_str(",\n");
        json::write_key(&mut out, "order");
        json::write_display(&mut out, &self.order);
        out.push_str(",\n");
        if let Some(c) = &self.cover_of {
            json::write_key(&mut out, "cover_of");
            out.push_str("{\"base\": ");
            json::write_str(&mut out, &c.base);
            out.push_str(", \"multiplier\": ");
            json::write_display(&mut out, c.multiplier);
            out.push_str("},\n");
        }
        json::write_key(&mut out, "classes");
        out.push_str("[\n");
        for (i, c) in self.classes.iter().enumerate() {
            out.push_str("{\"name\": ");
            json::write_str(&mut out, &c.name);
            out.push_str(", \"size\": ");
            json::write_display(&mut out, &c.size);
            out.push_str(", \"order\": ");
            json::write_display(&mut out, c.element_order);
            out.push_str(", \"powermaps\": {");
            for (j, (p, t)) in c.power_maps.iter().enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                json::write_key(&mut out, &p.to_string());
                json::write_display(&mut out, t);
            }
            out.push_str("}}");
            out.push_str(if i + 1 < self.classes.len() { ",\n" } else { "\n" });
        }
        out.push_str("],\n");
        json::write_key(&mut out, "characters");
        out.push_str("[\n");
        for (i, chi) in self.characters.iter().enumerate() {
            out.push_str("{\"name\": ");
            json::write_str(&mut out, &chi.name);
            out.push_str(", \"values\": [");
            for (j, v) in chi.values.iter().enumerate() {
                if j > 0 {
                    out.push_str(", ");
                }
                v.write_json(&mut out);
            }
            out.push_str("]}");
            out.push_str(if i + 1 < self.characters.len() { ",\n" } else { "\n" });
        }
        out.push_str("]\n}\n");
        out
    }
}

/// `Σ_c w_c f(c) conj(g(c))`, with rational entries summed as integers.
fn weighted_pairing(weights: &[BigInt], f: &[Cyclotomic], g: &[Cyclotomic]) -> Cyclotomic {
    let mut rational = Rational::zero();
    let mut rest = Cyclotomic::zero();
    for ((w, a), b) in weights.iter().zip(f).zip(g) {
        if a.is_zero() || b.is_zero() {
            continue;
        }
        match (a.as_rational(), b.as_rational()) {
            (Ok(x), Ok(y)) => rational += x * y * w,
            _ => {
                let term = (a * &b.conjugate()).scale(&Rational::from_integer(w.clone()));
                rest += &term;
            }
        }
    }
    rest + Cyclotomic::from_rational(rational)
}

/// A character with integer coefficients throughout, laid out for fast
/// pairing: rational entries as plain integers, the rest as sparse terms.
enum IntegralValue {
    Zero,
    Int(BigInt),
    Irrational(u32, Vec<(u32, BigInt)>),
}

struct IntegralRow(Vec<IntegralValue>);

impl IntegralRow {
    fn new(values: &[Cyclotomic]) -> Option<Self> {
        values
            .iter()
            .map(|v| {
                if v.is_zero() {
                    return Some(IntegralValue::Zero);
                }
                let terms = v
                    .terms()
                    .iter()
                    .map(|(k, c)| c.is_integer().then(|| (*k, c.to_integer())))
                    .collect::<Option<Vec<_>>>()?;
                Some(if v.is_rational() {
                    IntegralValue::Int(terms.into_iter().next()?.1)
                } else {
                    IntegralValue::Irrational(v.conductor(), terms)
                })
            })
            .collect::<Option<Vec<_>>>()
            .map(IntegralRow)
    }

    /// `Σ_c w_c a(c) conj(b(c))`. Irrational products are collected per
    /// conductor without reduction and reduced once at the end.
    fn pairing(&self, other: &Self, weights: &[BigInt]) -> Cyclotomic {
        let mut rational = BigInt::zero();
        let mut dense: BTreeMap<u32, Vec<BigInt>> = BTreeMap::new();
        let mut push = |n: u32, a: &[(u32, BigInt)], na: u32, b: &[(u32, BigInt)], nb: u32, w: &BigInt| {
            let v = dense.entry(n).or_insert_with(|| vec![BigInt::zero(); n as usize]);
            let (fa, fb) = ((n / na) as u64, (n / nb) as u64);
            for (ka, ca) in a {
                let wa = w * ca;
                for (kb, cb) in b {
                    let e = (*ka as u64 * fa + (n as u64 - *kb as u64 * fb % n as u64)) % n as u64;
                    v[e as usize] += &wa * cb;
                }
            }
        };
        for ((w, a), b) in weights.iter().zip(&self.0).zip(&other.0) {
            match (a, b) {
                (IntegralValue::Zero, _) | (_, IntegralValue::Zero) => {}
                (IntegralValue::Int(x), IntegralValue::Int(y)) => rational += w * x * y,
                (IntegralValue::Int(x), IntegralValue::Irrational(nb, tb)) => {
                    push(*nb, &[(0, x.clone())], 1, tb, *nb, w)
                }
                (IntegralValue::Irrational(na, ta), IntegralValue::Int(y)) => {
                    push(*na, ta, *na, &[(0, y.clone())], 1, w)
                }
                (IntegralValue::Irrational(na, ta), IntegralValue::Irrational(nb, tb)) => {
                    let n = (*na as u64).lcm(&(*nb as u64)) as u32;
                    push(n, ta, *na, tb, *nb, w)
                }
            }
        }
        let mut total = Cyclotomic::from_integer(rational);
        for (n, v) in dense {
            let terms = v
                .into_iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(k, c)| (k as u64, Rational::from_integer(c)));
            total += &Cyclotomic::from_terms(n, terms);
        }
        total
    }
}

type Parts = (String, BigUint, Option<CoverInfo>, Vec<ConjugacyClass>, Vec<Character>);

fn parse_parts(doc: &Value) -> Result<Parts> {
    let root = json::object(doc, "table")?;
    let name = json::string(json::field(root, "group", "table")?, "group")?;
    let order = json::biguint(json::field(root, "order", "table")?, "order")?;
    let cover = match root.get("cover_of") {
        None | Some(Value::Null) => None,
        Some(v) => {
            let o = json::object(v, "cover_of")?;
            Some(CoverInfo {
                base: json::string(json::field(o, "base", "cover_of")?, "cover_of.base")?,
                multiplier: json::u64_of(json::field(o, "multiplier", "cover_of")?, "cover_of.multiplier")?,
            })
        }
    };
    let mut classes = Vec::new();
    for (i, c) in json::array(json::field(root, "classes", "table")?, "classes")?.iter().enumerate() {
        let path = format!("classes[{i}]");
        let o = json::object(c, &path)?;
        let mut power_maps = BTreeMap::new();
        if let Some(pm) = o.get("powermaps") {
            for (p, t) in json::object(pm, &format!("{path}.powermaps"))? {
                let prime: u64 = p
                    .parse()
                    .ok()
                    .filter(|&p| p >= 2 && factorize(p) == vec![(p, 1)])
                    .ok_or_else(|| Error::parse(format!("{path}.powermaps: `{p}` is not a prime")))?;
                let target = json::u64_of(t, &format!("{path}.powermaps.{p}"))? as usize;
                power_maps.insert(prime, target);
            }
        }
        classes.push(ConjugacyClass {
            name: json::string(json::field(o, "name", &path)?, &format!("{path}.name"))?,
            size: json::biguint(json::field(o, "size", &path)?, &format!("{path}.size"))?,
            element_order: json::u64_of(json::field(o, "order", &path)?, &format!("{path}.order"))?,
            power_maps,
        });
    }
    let mut characters = Vec::new();
    for (i, c) in json::array(json::field(root, "characters", "table")?, "characters")?.iter().enumerate() {
        let path = format!("characters[{i}]");
        let o = json::object(c, &path)?;
        let values = json::array(json::field(o, "values", &path)?, &format!("{path}.values"))?
            .iter()
            .enumerate()
            .map(|(j, v)| Cyclotomic::from_json(v, &format!("{path}.values[{j}]")))
            .collect::<Result<Vec<_>>>()?;
        let name = match o.get("name") {
            Some(v) => json::string(v, &format!("{path}.name"))?,
            None => format!("X.{}", i + 1),
        };
        characters.push(Character { name, values });
    }
    Ok((name, order, cover, classes, characters))
}
