//! One line per acceptance criterion. Every expected value below is pinned
//! here rather than read from the shipped metadata, so the data files and
//! the code are both checked against it.

use std::collections::BTreeMap;
use std::path::PathBuf;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use sporadic::data::{plan_character, DataDir};
use sporadic::molien::{self, molien_coefficients};
use sporadic::oracle::{molien_by_enumeration, DEFAULT_CAP};
use sporadic::rdplan::{self, BoundReport, Figure, GroupMetadata, Irreducibility, Relation, SubquotientTable};
use sporadic::{Cyclotomic, Rational};

/// All comparisons are exact integer or exact field equality.
const TOLERANCE: &str = "exact";
/// Randomized ring-axiom cases.
const RING_CASES: u32 = 1000;
const ORACLE_DEGREE: usize = 12;

const SERIES_ROWS: &[(&str, &[u64])] = &[
    ("J2", &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 1, 0, 2, 0, 3, 0, 1, 0, 4, 0, 2, 0]),
    ("M11", &[1, 0, 1, 1, 2, 3, 5, 6, 11, 16, 26, 38, 61, 91]),
    ("M12", &[1, 0, 1, 1, 2, 2, 5, 4, 9, 10, 17, 20, 36, 39, 67]),
    ("M22", &[1, 0, 0, 0, 1, 0, 1, 0, 2, 0, 3, 0, 6, 0, 9, 0, 15, 0, 26, 0]),
    ("Suz", &[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 7, 0, 0, 0]),
    ("J3", &[1, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 10, 0, 0, 26, 0, 0, 143, 0, 0, 680, 0, 0, 3310, 0, 0, 14229, 0, 0, 55826, 0, 0]),
    ("M23", &[1, 0, 1, 1, 2, 3, 6, 9, 17, 27, 49, 86, 159, 292]),
    ("HS", &[1, 0, 1, 0, 2, 1, 5, 3, 12, 9, 29, 28, 77, 87, 220]),
    ("McL", &[1, 0, 1, 0, 1, 1, 2, 3, 5, 6, 10, 14, 21, 29, 48, 70]),
    ("M24", &[1, 0, 1, 1, 2, 2, 5, 5, 11, 14, 25, 35, 65, 89]),
    ("Co3", &[1, 0, 1, 0, 1, 0, 2, 0, 3, 1, 5, 2, 9, 3, 14, 7, 23, 13]),
    ("Co2", &[1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 3, 1, 5, 1, 7, 2, 11, 3, 16]),
    ("Co1", &[1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 1, 0, 2, 0, 2, 0, 3, 0, 4, 0]),
    ("Ru", &[1, 0, 0, 0, 1, 0, 0, 0, 2, 0, 0, 0, 6, 0, 2, 0, 22, 0, 27, 0, 154, 0, 439, 0, 1966, 0, 7189, 0]),
    ("He", &[1, 0, 0, 1, 1, 1, 4, 5, 13, 30, 82, 245, 907, 3424]),
    ("J1", &[1, 0, 1, 1, 8, 34, 361, 2820, 22346, 156939, 1021469]),
    ("Fi22", &[1, 0, 1, 0, 1, 0, 2, 0, 5, 1, 13, 4, 60, 31, 488, 912]),
    ("HN", &[1, 0, 1, 0, 1, 0, 2, 1, 5, 6, 27, 92, 637, 5018, 47239]),
    ("Th", &[1, 0, 1, 0, 1, 0, 1, 0, 4, 0, 15, 50, 1854, 31610, 607473]),
    ("ON", &[1, 0, 0, 0, 0, 0, 16, 0, 0, 426595, 0, 0, 14039408007, 0, 0, 230067642077481, 0, 0]),
    ("Fi23", &[1, 0, 1, 1, 2, 3, 9, 15, 57, 324, 7961, 456255]),
    ("Fi24'", &[1, 0, 0, 1, 0, 0, 3, 0, 0, 11, 0, 0, 355, 0, 0, 17843536, 0, 0, 1848868683076, 0, 0]),
    ("J4", &[1, 0, 0, 0, 1, 0, 2, 2, 31, 521, 60960, 7118797, 795955946]),
    ("Ly", &[1, 0, 0, 0, 0, 0, 23, 21041, 697156, 191631120, 47708455027]),
    ("B", &[1, 0, 1, 0, 2, 0, 3, 0, 7, 0, 20, 3, 243, 8164, 2665262]),
    ("M", &[1, 0, 1, 1, 2, 2, 6, 6, 16, 27, 68, 182, 956]),
];

/// Coefficients whose printed value disagrees with two independent
/// computations (the character route here and a symmetric-power
/// decomposition in GAP): (group, degree, printed, computed).
const KNOWN_MISPRINTS: &[(&str, usize, u64, u64)] = &[("Ly", 7, 21041, 2104)];

/// Stated upper bounds, in increasing order.
const BOUNDS: &[(&str, i64)] = &[
    ("J2", 5), ("M11", 6), ("M12", 7), ("M22", 8), ("Suz", 10), ("J3", 16), ("M23", 17),
    ("M24", 18), ("HS", 18), ("McL", 19), ("Co3", 20), ("Co2", 20), ("Co1", 21), ("Ru", 26),
    ("He", 48), ("J1", 51), ("Fi22", 74), ("HN", 129), ("Th", 244), ("ON", 338), ("Fi23", 776),
    ("Fi24'", 779), ("J4", 1328), ("Ly", 2475), ("B", 4365), ("M", 196874),
];

/// (group, dim P(V), invariant degrees used, dim Perm).
const PLANS: &[(&str, u64, &[u32], &str)] = &[
    ("J2", 5, &[], "100"),
    ("M11", 9, &[2, 3, 4], "11"),
    ("M22", 9, &[4], "22"),
    ("M12", 10, &[2, 3, 4], "12"),
    ("Suz", 11, &[12], "1782"),
    ("J3", 17, &[6], "85"),
    ("M23", 21, &[2, 3, 4, 5], "23"),
    ("HS", 21, &[2, 4, 5], "100"),
    ("McL", 21, &[2, 5], "275"),
    ("M24", 22, &[2, 3, 4, 5], "24"),
    ("Co3", 22, &[2, 6], "276"),
    ("Co2", 22, &[2, 8], "2300"),
    ("Co1", 23, &[2, 12], "98280"),
    ("Ru", 27, &[4], "4060"),
    ("He", 50, &[3, 4], "2058"),
    ("J1", 55, &[2, 3, 4, 4], "266"),
    ("Fi22", 77, &[2, 6, 8], "3510"),
    ("HN", 132, &[2, 6, 7], "1140000"),
    ("Th", 247, &[2, 8, 8], "143127000"),
    ("ON", 341, &[6, 6, 6], "122760"),
    ("Fi23", 781, &[2, 3, 4, 5, 5], "31671"),
    ("Fi24'", 782, &[3, 6, 6], "306936"),
    ("J4", 1332, &[4, 6, 6, 7], "173067389"),
    ("Ly", 2479, &[6, 6, 6, 6], "8835156"),
    ("B", 4370, &[2, 4, 6, 8, 8], "13571955000"),
    ("M", 196882, &[2, 3, 4, 5, 6, 6, 6, 7], "97239461142009186000"),
];

const EXEMPT: [&str; 4] = ["M11", "M12", "M23", "M24"];

/// (group, dim W, dim P(V), dim X) with X a proper drop below P(V).
const FIGURE5: &[(&str, u64, u64, i64)] = &[
    ("M11", 10, 9, 6), ("M12", 11, 10, 7), ("M23", 22, 21, 17), ("HS", 22, 21, 18),
    ("McL", 22, 21, 19), ("M24", 23, 22, 18), ("Co3", 23, 22, 20), ("Co2", 23, 22, 20),
    ("He", 51, 50, 48), ("J1", 56, 55, 51), ("Fi22", 78, 77, 74), ("HN", 133, 132, 129),
    ("Th", 248, 247, 244), ("Fi23", 782, 781, 776), ("J4", 1333, 1332, 1328),
    ("Ly", 2480, 2479, 2475), ("B", 4371, 4370, 4365), ("M", 196883, 196882, 196874),
];

/// (group, dim W, dim P(V), dim X, cover).
const FIGURE6: &[(&str, u64, u64, i64, &str)] = &[
    ("J2", 14, 5, 5, "2.J2"), ("M22", 20, 9, 8, "12.M22"), ("Suz", 143, 11, 10, "6.Suz"),
    ("J3", 85, 17, 16, "3.J3"), ("Co1", 276, 23, 21, "2.Co1"), ("Ru", 378, 27, 26, "2.Ru"),
    ("ON", 10944, 341, 338, "3.ON"), ("Fi24'", 8671, 782, 779, "3.Fi24'"),
];

/// Groups tied in `dim X`.
const TIES: &[(&str, &str, i64)] = &[("M24", "HS", 18), ("Co3", "Co2", 20)];

/// Hilbert series of the invariant rings of the small models, from their
/// classical generator degrees: (model, numerator exponents, denominator degrees).
const CLASSICAL: &[(&str, &[usize], &[usize])] = &[
    ("C2", &[0], &[2]),
    ("S3", &[0], &[2, 3]),
    ("S4", &[0], &[2, 3, 4]),
    ("A5", &[0, 15], &[2, 6, 10]),
    ("2.A5", &[0, 30], &[12, 20]),
];

fn data() -> DataDir {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data");
    DataDir::open(root).expect("shipped data directory")
}

type Outcome = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err(e: sporadic::Error) -> String {
    e.to_string()
}

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

/// The printed row with known misprints replaced by the recomputed value.
fn golden(group: &str) -> Option<Vec<BigUint>> {
    let (_, row) = SERIES_ROWS.iter().find(|(g, _)| *g == group)?;
    let mut row: Vec<BigUint> = row.iter().copied().map(big).collect();
    for &(g, d, printed, computed) in KNOWN_MISPRINTS {
        if g == group {
            assert_eq!(row[d], big(printed));
            row[d] = big(computed);
        }
    }
    Some(row)
}

fn profiles(data: &DataDir, meta: &GroupMetadata) -> Result<BTreeMap<String, Vec<BigUint>>, String> {
    let mut out = BTreeMap::new();
    for (group, _) in SERIES_ROWS {
        let plan = meta.plan(group).map_err(err)?;
        let (table, index) = plan_character(data, plan).map_err(err)?;
        let len = golden(group).unwrap().len();
        let p = molien_coefficients(&table, index, len - 1).map_err(err)?;
        out.insert(group.to_string(), p.coefficients);
    }
    Ok(out)
}

fn golden_rows(computed: &BTreeMap<String, Vec<BigUint>>) -> Outcome {
    for (group, _) in SERIES_ROWS {
        let want = golden(group).unwrap();
        let got = &computed[*group];
        if let Some(d) = (0..want.len()).find(|&d| got[d] != want[d]) {
            return Err(format!("{group}: m_{d} = {}, expected {}", got[d], want[d]));
        }
    }
    let misprints: Vec<String> = KNOWN_MISPRINTS
        .iter()
        .map(|(g, d, p, c)| format!("{g} m_{d} printed {p}, computed {c}"))
        .collect();
    Ok(format!(
        "{} rows match exactly apart from one known misprint: {}",
        SERIES_ROWS.len(),
        misprints.join("; ")
    ))
}

fn bounds(reports: &BTreeMap<String, BoundReport>) -> Outcome {
    ensure(reports.len() == BOUNDS.len(), || format!("{} plans, expected {}", reports.len(), BOUNDS.len()))?;
    for &(g, b) in BOUNDS {
        let r = reports.get(g).ok_or_else(|| format!("{g}: no plan"))?;
        ensure(r.rd_bound == b, || format!("{g}: computed {}, expected {b}", r.rd_bound))?;
    }
    Ok(format!("all {} bounds, J2 <= 5 through M <= 196874", BOUNDS.len()))
}

fn irreducibility(meta: &GroupMetadata, reports: &BTreeMap<String, BoundReport>) -> Outcome {
    let mut checked = 0;
    for &(g, proj, degrees, perm) in PLANS {
        let plan = meta.plan(g).map_err(err)?;
        let mut have = plan.degrees();
        have.sort_unstable();
        ensure(have == degrees && plan.ambient_dim == proj, || {
            format!("{g}: plan {:?} in P^{}, expected {degrees:?} in P^{proj}", have, plan.ambient_dim)
        })?;
        let perm: BigUint = perm.parse().unwrap();
        let product: BigUint = degrees.iter().fold(BigUint::one(), |acc, &d| acc * d);
        match (&reports[g].irreducibility, EXEMPT.contains(&g)) {
            (Irreducibility::NotApplicable, true) => {}
            (Irreducibility::Checked { bezout_degree, perm_dim, holds }, false) => {
                ensure(*bezout_degree == product && *perm_dim == perm && *holds && product < perm, || {
                    format!("{g}: {bezout_degree} < {perm_dim} reported {holds}")
                })?;
                checked += 1;
            }
            (i, _) => return Err(format!("{g}: unexpected {i:?}")),
        }
    }
    ensure(checked == 22, || format!("{checked} groups checked, expected 22"))?;
    let b = &reports["B"].irreducibility;
    let m = &reports["M"].irreducibility;
    let show = |i: &Irreducibility| match i {
        Irreducibility::Checked { bezout_degree, perm_dim, .. } => format!("{bezout_degree} < {perm_dim}"),
        Irreducibility::NotApplicable => String::new(),
    };
    Ok(format!("{checked} groups, e.g. B: {}, M: {}", show(b), show(m)))
}

/// Monomials of degree `d` in generators of the given degrees, by direct
/// enumeration of exponent vectors.
fn monomials(degrees: &[u32], d: u32) -> BigUint {
    match degrees.split_first() {
        None => if d == 0 { BigUint::one() } else { BigUint::zero() },
        Some((&e, rest)) => (0..=d / e).map(|k| monomials(rest, d - k * e)).sum(),
    }
}

fn feasibility(data: &DataDir, meta: &GroupMetadata, computed: &BTreeMap<String, Vec<BigUint>>) -> Outcome {
    let mut ledgers = 0;
    for plan in &meta.plans {
        if plan.degrees().is_empty() {
            continue;
        }
        let (table, index) = plan_character(data, plan).map_err(err)?;
        let top = computed[&plan.group].len().max(plan.max_degree() as usize + 1) - 1;
        let profile = molien_coefficients(&table, index, top).map_err(err)?;
        let ledger = rdplan::check_plan_feasibility(plan, &profile).map_err(err)?;
        let want = golden(&plan.group).unwrap();
        for e in &ledger.entries {
            let chosen: Vec<u32> = plan.degrees().into_iter().filter(|&x| x <= e.degree).collect();
            let n = monomials(&chosen, e.degree);
            ensure(e.required == n, || format!("{}: N_{} = {}, enumeration gives {n}", plan.group, e.degree, e.required))?;
            ensure(e.available == want[e.degree as usize], || {
                format!("{}: m_{} = {} differs from the printed row", plan.group, e.degree, e.available)
            })?;
        }
        ensure(ledger.feasible(), || ledger.render())?;
        ledgers += 1;
    }
    let co3 = meta.plan("Co3").map_err(err)?;
    let m6 = &golden("Co3").unwrap()[6];
    ensure(co3.degrees().contains(&6) && *m6 == big(2), || "Co3 ledger does not consult m_6 = 2".into())?;
    Ok(format!("{ledgers} ledgers pass, consulted m_d equal the printed rows (Co3 m_6 = 2)"))
}

fn series_of(numerator: &[usize], denominator: &[usize], n: usize) -> Vec<BigUint> {
    let mut c = vec![BigUint::zero(); n + 1];
    for &e in numerator {
        if e <= n {
            c[e] += 1u32;
        }
    }
    for &e in denominator {
        for d in e..=n {
            let prev = c[d - e].clone();
            c[d] += prev;
        }
    }
    c
}

fn oracle(data: &DataDir) -> Outcome {
    for &(name, num, den) in CLASSICAL {
        let model = data.model(name).map_err(err)?;
        let by_matrices = molien_by_enumeration(&model, ORACLE_DEGREE, DEFAULT_CAP).map_err(err)?;
        let entry = data.model_entry(name).map_err(err)?;
        let table = data.table(&entry.table).map_err(err)?;
        let by_table = molien_coefficients(&table, entry.character, ORACLE_DEGREE).map_err(err)?.coefficients;
        let classical = series_of(num, den, ORACLE_DEGREE);
        ensure(by_matrices == by_table, || format!("{name}: {by_matrices:?} vs {by_table:?}"))?;
        ensure(by_table == classical, || format!("{name}: {by_table:?}, generator degrees give {classical:?}"))?;
        if name == "2.A5" {
            ensure(by_table.iter().skip(1).step_by(2).all(Zero::is_zero), || "2.A5: odd coefficient".into())?;
        }
    }
    Ok(format!("{} models agree for d <= {ORACLE_DEGREE}, 2.A5 vanishes in odd degrees", CLASSICAL.len()))
}

fn monotonicity(meta: &GroupMetadata, reports: &BTreeMap<String, BoundReport>) -> Outcome {
    let table = SubquotientTable::from_metadata(meta).map_err(err)?;
    ensure(table.relation("M", "J1") == Relation::NotSubquotient, || "J1 listed as a subquotient of M".into())?;
    let violations = rdplan::check_monotonicity(&table, reports).map_err(err)?;
    ensure(violations.is_empty(), || format!("{} violations", violations.len()))?;
    let mut sorted: Vec<(&str, i64)> = reports.values().map(|r| (r.group.as_str(), r.dim_x)).collect();
    sorted.sort_by_key(|&(g, d)| (d, BOUNDS.iter().position(|(b, _)| *b == g)));
    let pinned: Vec<(&str, i64)> = BOUNDS.to_vec();
    ensure(sorted == pinned, || format!("sorted order {sorted:?}"))?;
    for &(a, b, d) in TIES {
        ensure(reports[a].dim_x == d && reports[b].dim_x == d, || format!("{a} and {b} not both {d}"))?;
    }
    let chain = rdplan::check_dimension_chain(rdplan::DIMENSION_CHAIN, reports).map_err(err)?;
    ensure(chain.is_empty(), || chain.join("; "))?;
    Ok(format!(
        "{} subquotient pairs, no violations; chain holds with M24 = HS = 18, Co3 = Co2 = 20",
        table.subquotient_pairs().count()
    ))
}

fn figures(meta: &GroupMetadata) -> Outcome {
    let dims = meta.linear_dims();
    let five = rdplan::comparison_table(&meta.plans, &dims, Figure::Figure5).map_err(err)?;
    let six = rdplan::comparison_table(&meta.plans, &dims, Figure::Figure6).map_err(err)?;
    let got5: Vec<_> = five.iter().map(|r| (r.group.as_str(), r.linear_dim, r.projective_dim, r.dim_x)).collect();
    let got6: Vec<_> = six
        .iter()
        .map(|r| (r.group.as_str(), r.linear_dim, r.projective_dim, r.dim_x, r.cover.as_deref().unwrap_or("")))
        .collect();
    ensure(got5 == FIGURE5, || format!("figure5 rows {got5:?}"))?;
    ensure(got6 == FIGURE6, || format!("figure6 rows {got6:?}"))?;
    ensure(FIGURE5.iter().all(|&(_, w, p, x)| x < p as i64 && p < w), || "figure5 inequality".into())?;
    ensure(FIGURE6.iter().all(|&(_, w, p, x, _)| x <= p as i64 && p < w), || "figure6 inequality".into())?;
    ensure(five.iter().chain(&six).all(|r| r.ok), || "row flagged".into())?;
    Ok(format!("{} + {} rows, e.g. Fi24': 8671, 782, 779, cover 3.Fi24'", got5.len(), got6.len()))
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    let conductor = prop::sample::select(vec![1u32, 3, 4, 5, 7, 8, 9, 12, 15, 20, 24]);
    conductor.prop_flat_map(|n| {
        prop::collection::vec((0..n as u64, -6i64..=6, 1i64..=4), 0..4).prop_map(move |ts| {
            Cyclotomic::from_terms(n, ts.into_iter().map(|(k, a, b)| (k, Rational::new(a.into(), b.into()))))
        })
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-6 && (a.1 - b.1).abs() < 1e-6
}

fn ring_axioms() -> Result<(), String> {
    let mut runner = TestRunner::new(Config { cases: RING_CASES, ..Config::default() });
    runner
        .run(&(cyclotomic(), cyclotomic(), cyclotomic()), |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &(-&a)).is_zero());
            prop_assert_eq!(&a - &b, &a + &(-&b));
            prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
            if let Some(inv) = a.inverse() {
                prop_assert_eq!(&a * &inv, Cyclotomic::one());
            } else {
                prop_assert!(a.is_zero());
            }
            let (x, y) = (a.to_complex(), b.to_complex());
            prop_assert!(close((&a * &b).to_complex(), (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0)));
            Ok(())
        })
        .map_err(|e| e.to_string())
}

fn properties(data: &DataDir, meta: &GroupMetadata) -> Outcome {
    ring_axioms()?;
    let mut classes = 0;
    for name in data.manifest().tables.keys() {
        let t = data.table(name).map_err(err)?;
        t.check_orthogonality().map_err(err)?;
        for (i, c) in t.classes().iter().enumerate() {
            for k in 1..=c.element_order {
                let target = t.power_class(i, k).map_err(err)?;
                let want = c.element_order / num_integer::gcd(c.element_order, k);
                ensure(t.classes()[target].element_order == want, || format!("{name}: class {} to the {k}", c.name))?;
            }
            classes += 1;
        }
    }
    let sequential = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let wide = rayon::ThreadPoolBuilder::new().num_threads(8).build().unwrap();
    for plan in &meta.plans {
        let (table, index) = plan_character(data, plan).map_err(err)?;
        let top = 12;
        let p = molien_coefficients(&table, index, top).map_err(err)?;
        ensure(p.coefficients[0] == BigUint::one() && p.coefficients[1].is_zero(), || {
            format!("{}: m_0 = {}, m_1 = {}", plan.group, p.coefficients[0], p.coefficients[1])
        })?;
        let dual = molien::dual_character(&table, index).map_err(err)?;
        let via_dual = molien::invariant_counts(&table, &dual, top).map_err(err)?;
        ensure(via_dual == p.coefficients, || format!("{}: dual character differs", plan.group))?;
        let a = sequential.install(|| molien_coefficients(&table, index, top)).map_err(err)?;
        let b = wide.install(|| molien_coefficients(&table, index, top)).map_err(err)?;
        ensure(a == b && a == p, || format!("{}: output depends on thread count", plan.group))?;
    }
    Ok(format!(
        "{RING_CASES} ring cases, {} tables orthogonal, {classes} classes power-consistent, \
         m_0 = 1, m_1 = 0, duality and determinism on {} plans",
        data.manifest().tables.len(),
        meta.plans.len()
    ))
}

#[test]
fn acceptance() {
    let data = data();
    let meta = data.metadata().expect("metadata");
    let reports: BTreeMap<String, BoundReport> =
        meta.plans.iter().map(|p| (p.group.clone(), rdplan::compute_bound(p))).collect();
    let computed = profiles(&data, &meta);
    let results: Vec<(u32, &str, Outcome)> = vec![
        (1, "series rows", computed.clone().and_then(|c| golden_rows(&c))),
        (2, "bounds", bounds(&reports)),
        (3, "irreducibility", irreducibility(&meta, &reports)),
        (4, "feasibility", computed.and_then(|c| feasibility(&data, &meta, &c))),
        (5, "oracle", oracle(&data)),
        (6, "monotonicity", monotonicity(&meta, &reports)),
        (7, "figures", figures(&meta)),
        (8, "properties", properties(&data, &meta)),
    ];
    let mut failed = 0;
    for (n, name, r) in &results {
        match r {
            Ok(detail) => println!("PASS {n} {name} [{TOLERANCE}]: {detail}"),
            Err(detail) => {
                failed += 1;
                println!("FAIL {n} {name} [{TOLERANCE}]: {detail}");
            }
        }
    }
    assert_eq!(failed, 0, "{failed} acceptance criteria failed");
}
