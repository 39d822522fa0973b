//! Acceptance criteria. Every check is exact; each criterion prints one
//! PASS/FAIL line. Run with `cargo test --test acceptance -- --nocapture`.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use forgotten::forgotten::{
    all_classes, canonical_of, class_closure, classes_count, insert, is_canonical, lex_enumerate,
    CanonicalForm, ClassKey, Family,
};
use forgotten::ncpoly::commute_check;
use forgotten::perm::standardize;
use forgotten::qsym::{foata_phi, ns_map, ribbon_expansion, ExpansionMethods, RibbonEvaluator};
use forgotten::verify::{reference_class_n5, reversal_closed};
use forgotten::words::all_word_classes;
use forgotten::{Composition, Permutation, Word};
use num_bigint::BigInt;

fn p(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn set(list: &str) -> BTreeSet<Permutation> {
    list.split_whitespace().map(p).collect()
}

fn comps(list: &str) -> BTreeSet<Composition> {
    list.split_whitespace().map(|c| c.parse().unwrap()).collect()
}

fn key(q: &Permutation) -> ClassKey {
    ClassKey::of(q).unwrap()
}

type Criterion = (&'static str, fn() -> Outcome);

struct Outcome {
    ok: bool,
    detail: String,
}

fn check(ok: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        ok,
        detail: detail.into(),
    }
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    check(
        out.ok && took <= limit,
        format!("{} ({:.2?}, limit {:?})", out.detail, took, limit),
    )
}

fn c1_class_count() -> Outcome {
    timed(Duration::from_secs(60), || {
        let bad: Vec<usize> = (2..=8)
            .filter(|&n| all_classes(n).len() != n * n + 4 - 3 * n)
            .collect();
        check(bad.is_empty(), format!("n=2..8, mismatches at {bad:?}"))
    })
}

fn c2_characterization() -> Outcome {
    let mut discrepancies = 0;
    for n in 2..=7 {
        let classes = all_classes(n);
        let mut by_key: HashMap<ClassKey, BTreeSet<Permutation>> = HashMap::new();
        for q in Permutation::all(n) {
            by_key.entry(key(&q)).or_default().insert(q);
        }
        for class in &classes {
            let closure: BTreeSet<Permutation> = class.iter().cloned().collect();
            if by_key.get(&key(&class[0])) != Some(&closure) {
                discrepancies += 1;
            }
        }
        if by_key.len() != classes.len() {
            discrepancies += 1;
        }
    }
    check(discrepancies == 0, format!("{discrepancies} discrepancies, n<=7"))
}

fn c3_tables() -> Outcome {
    let tables: [(usize, &[&str]); 3] = [
        (2, &["12", "21"]),
        (3, &["123", "132 213", "231 312", "321"]),
        (
            4,
            &[
                "1234",
                "1243 1324 2134",
                "1342 1423 2143 2314 3124",
                "1432 3142 3214",
                "2341 2413 4123",
                "2431 3241 3412 4132 4213",
                "3421 4231 4312",
                "4321",
            ],
        ),
    ];
    let mut ok = true;
    for (n, rows) in tables {
        let want: BTreeSet<BTreeSet<Permutation>> = rows.iter().map(|r| set(r)).collect();
        let got: BTreeSet<BTreeSet<Permutation>> = all_classes(n)
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect();
        ok &= want == got;
    }
    let fifteen = class_closure(&p("12543"));
    ok &= fifteen.len() == 15 && fifteen == reference_class_n5();
    check(ok, "n=2,3,4 tables and the 15-element class of 12543")
}

fn c4_lex() -> Outcome {
    let lists = [
        "12 21",
        "123 132 231 321",
        "1234 1243 1342 1432 2341 2431 3421 4321",
        "12345 12354 12453 12543 13542 14532 15432 \
         23451 23541 24531 25431 35421 45321 54321",
    ];
    let mut ok = lists.iter().enumerate().all(|(i, l)| {
        let want: Vec<Permutation> = l.split_whitespace().map(p).collect();
        lex_enumerate(i + 2) == want
    });
    ok &= lex_enumerate(1) == vec![p("1")];
    ok &= (2..=12).all(|n| lex_enumerate(n).len() == n * n + 4 - 3 * n);
    ok &= (2..=7).all(|n| {
        all_classes(n)
            .iter()
            .all(|c| c.iter().all(|q| canonical_of(q).unwrap() == c[0]))
    });
    check(ok, "lists n<=5, counts n<=12, minima n<=7")
}

fn c5_inverse_and_involution() -> Outcome {
    let mut ok = (2..=8).all(|n| {
        lex_enumerate(n)
            .iter()
            .all(|w| key(w) == key(&w.inverse()))
    });
    ok &= (2..=9).all(|n| Permutation::all(n).all(|q| key(&q.schuetzenberger()) == key(&q)));
    ok &= (2..=6).all(|n| {
        Permutation::all(n).all(|q| class_closure(&q).contains(&q.schuetzenberger()))
    });
    check(ok, "inverse n<=8, involution keys n<=9, closures n<=6")
}

fn c6_formulas() -> Outcome {
    let mut ok = true;
    for n in 2..=12 {
        for family in [Family::Sigma, Family::Tau] {
            let forms = CanonicalForm::all(family, n);
            ok &= forms.len() == family.inv_range(n).count();
            for form in forms {
                ok &= form.inversions() == form.word().inversions();
                ok &= CanonicalForm::from_inversions(family, form.inversions(), n) == Ok(form);
            }
        }
    }
    let sigma = CanonicalForm::from_inversions(Family::Sigma, 13, 7).unwrap().word();
    let tau = CanonicalForm::from_inversions(Family::Tau, 13, 7).unwrap().word();
    // 1576542 is sometimes given here; it repeats the letter 5
    let misprint = "1576542";
    ok &= sigma == p("1576432") && misprint.parse::<Permutation>().is_err();
    ok &= tau == p("2476531");
    check(
        ok,
        format!("domain n<=12 round trips; n=7,i=13 -> {sigma} (not {misprint}) / {tau}"),
    )
}

fn c7_insertion() -> Outcome {
    let w = p("136542");
    // row 4 is sometimes given as 1267643, which repeats the letter 6
    let table = [
        "2476531", "1476532", "1376542", "1276543", "1267543", "1257643", "1247653",
    ];
    let mut ok = table
        .iter()
        .enumerate()
        .all(|(i, row)| insert(&w, i).unwrap().to_string() == *row);
    ok &= "1267643".parse::<Permutation>().is_err();
    for n in 2..=8 {
        for w in lex_enumerate(n - 1) {
            for i in 0..n {
                let res = insert(&w, i).unwrap();
                let mut letters = w.as_slice().to_vec();
                letters.push(i as u8);
                let std = standardize(&letters).unwrap();
                ok &= is_canonical(&res) && res.len() == n && key(&res) == key(&std);
            }
        }
    }
    check(ok, "table for 136542 (row 4 read as 1267543); n<=8 sweep")
}

fn c8_commutation() -> Outcome {
    timed(Duration::from_secs(300), || {
        let mut failures = Vec::new();
        for q in 2..=4u8 {
            for i in 1..=3 {
                for j in 1..=3 {
                    if !commute_check(i, j, q) {
                        failures.push((i, j, q));
                    }
                }
            }
        }
        check(failures.is_empty(), format!("i,j<=3, q=2..4, failures {failures:?}"))
    })
}

fn c9_ribbons() -> Outcome {
    let sweep = timed(Duration::from_secs(600), || {
        let mut ok = true;
        for n in 2..=7 {
            let mut eval = RibbonEvaluator::<BigInt>::new(n, n);
            for class in all_classes(n) {
                let k = key(&class[0]);
                let methods = ExpansionMethods::compute(&k);
                let expansion = ribbon_expansion(&k).unwrap();
                let lhs = eval.sum_over(&class);
                ok &= methods.agree()
                    && lhs == eval.ribbon_sum(&expansion)
                    && lhs.is_symmetric();
            }
        }
        check(ok, "n<=7, m=n")
    });
    let plus = ribbon_expansion(&ClassKey::new(8, 10, true).unwrap()).unwrap();
    let minus = ribbon_expansion(&ClassKey::new(8, 10, false).unwrap()).unwrap();
    let examples = plus.compositions == comps("11114 2123 1313 1232 422")
        && minus.compositions == comps("1151 341");
    check(
        sweep.ok && examples,
        format!("{}; S_8 inv 10: {plus} | {minus}", sweep.detail),
    )
}

fn c10_foata() -> Outcome {
    let mut ok = true;
    for n in 1..=7 {
        let mut phi_images = HashSet::new();
        let mut ns_images = HashSet::new();
        for q in Permutation::all(n) {
            let phi = foata_phi(&q);
            let ns = ns_map(&q);
            ok &= phi.inversions() == q.maj();
            ok &= phi.recoil_composition() == q.recoil_composition();
            ok &= ns.descent_set() == q.descent_set();
            ok &= ns.inversions() == q.inverse().maj();
            if n >= 2 {
                let (w, s) = (phi.as_slice(), q.as_slice());
                ok &= (w[0] < w[n - 1]) == (s[n - 2] < s[n - 1]);
            }
            phi_images.insert(phi);
            ns_images.insert(ns);
        }
        let fact: usize = (1..=n).product();
        ok &= phi_images.len() == fact && ns_images.len() == fact;
    }
    // NS sends {maj(p^-1) = k, n-1 before n} onto the class with key (n,k,+)
    for n in 2..=7 {
        let mut images: HashMap<ClassKey, BTreeSet<Permutation>> = HashMap::new();
        for q in Permutation::all(n) {
            let pen_first = q.position(n as u8 - 1) < q.position(n as u8);
            let k = ClassKey::new(n, q.inverse().maj(), pen_first);
            match k {
                Ok(k) => {
                    images.entry(k).or_default().insert(ns_map(&q));
                }
                Err(_) => ok = false,
            }
        }
        ok &= images.len() == classes_count(n);
        for (k, image) in images {
            ok &= image == class_closure(&k.canonical());
        }
    }
    check(ok, "n<=7")
}

fn c11_reversal() -> Outcome {
    let mut ok = (2..=7).all(|n| {
        all_classes(n).iter().all(|c| {
            let d: Vec<Composition> = c.iter().map(Permutation::descent_composition).collect();
            reversal_closed(&d)
        })
    });
    let mut word_classes = 0;
    for q in 1..=4 {
        for len in 1..=6 {
            for class in all_word_classes(len, q) {
                word_classes += 1;
                let d: Vec<Composition> =
                    class.iter().filter_map(Word::descent_composition).collect();
                ok &= reversal_closed(&d);
            }
        }
    }
    check(ok, format!("S_n n<=7 and {word_classes} word classes"))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 11] = [
        ("1 class count", c1_class_count),
        ("2 characterization", c2_characterization),
        ("3 tables", c3_tables),
        ("4 canonical elements", c4_lex),
        ("5 inverse and involution", c5_inverse_and_involution),
        ("6 inversion formulas", c6_formulas),
        ("7 insertion", c7_insertion),
        ("8 commutation", c8_commutation),
        ("9 ribbon expansions", c9_ribbons),
        ("10 foata and ns", c10_foata),
        ("11 reversal closure", c11_reversal),
    ];
    let mut failed = Vec::new();
    for (name, run) in criteria {
        let out = run();
        let status = if out.ok { "PASS" } else { "FAIL" };
        println!("{status} criterion {name}: {}", out.detail);
        if !out.ok {
            failed.push(name);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
