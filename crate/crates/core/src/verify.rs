//! Exhaustive verification suites.
//!
//! Each suite sweeps every input up to a size bound and tallies each
//! property separately, keeping the first counterexample found. Inputs are
//! visited by increasing size and then lexicographically, so the reported
//! counterexample is the smallest one.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::Error;
use crate::forgotten::{
    all_classes, canonical_of, class_closure, classes_count, elementary_moves, equivalent,
    insert, is_canonical, lambda_members, lambda_word, lex_enumerate, next_lambda_down,
    CanonicalForm, ClassKey, Family,
};
use crate::ncpoly::commute_check;
use crate::perm::{standardize, Composition, Permutation, Word};
use crate::qsym::{
    compositions_with_maj, determine_sign_pairing, foata_phi, ns_map, ribbon_expansion,
    ExpansionMethods, LastPart, RibbonEvaluator, SignPairing,
};
use crate::words::{all_word_classes, general_moves, word_normal_form};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Classes,
    Canonical,
    Insertion,
    Commutation,
    Ribbon,
    Foata,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Classes,
        Suite::Canonical,
        Suite::Insertion,
        Suite::Commutation,
        Suite::Ribbon,
        Suite::Foata,
    ];

    /// Largest bound accepted without an explicit override. For
    /// `Commutation` the bound is the alphabet size.
    pub fn cap(self) -> usize {
        match self {
            Suite::Commutation => 7,
            Suite::Ribbon => 8,
            _ => 9,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Classes => "classes",
            Suite::Canonical => "canonical",
            Suite::Insertion => "insertion",
            Suite::Commutation => "commutation",
            Suite::Ribbon => "ribbon",
            Suite::Foata => "foata",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown suite {s:?}")))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Tally of one property.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: Suite,
    pub name: String,
    pub passed: u64,
    pub failed: u64,
    pub counterexample: Option<String>,
}

impl Check {
    fn new(suite: Suite, name: impl Into<String>) -> Self {
        Check {
            suite,
            name: name.into(),
            passed: 0,
            failed: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok() { "PASS" } else { "FAIL" };
        write!(
            f,
            "{status} {}/{}: {} passed, {} failed",
            self.suite, self.name, self.passed, self.failed
        )?;
        if let Some(c) = &self.counterexample {
            write!(f, "; counterexample: {c}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub suite: Suite,
    pub max_n: usize,
    pub checks: Vec<Check>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::ok)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

struct Builder {
    suite: Suite,
    checks: Vec<Check>,
    notes: Vec<String>,
}

impl Builder {
    fn new(suite: Suite) -> Self {
        Builder {
            suite,
            checks: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn check(&mut self, name: &str) -> &mut Check {
        if let Some(i) = self.checks.iter().position(|c| c.name == name) {
            return &mut self.checks[i];
        }
        self.checks.push(Check::new(self.suite, name));
        self.checks.last_mut().expect("just pushed")
    }
}

/// Runs one suite (or all of them) up to `max_n`.
pub fn run(suite: Suite, max_n: usize) -> Report {
    let mut checks = Vec::new();
    let mut notes = Vec::new();
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    for s in suites {
        let b = match s {
            Suite::Classes => classes(max_n),
            Suite::Canonical => canonical(max_n),
            Suite::Insertion => insertion(max_n),
            Suite::Commutation => commutation(max_n),
            Suite::Ribbon => ribbon(max_n),
            Suite::Foata => foata(max_n),
            Suite::All => unreachable!(),
        };
        checks.extend(b.checks);
        notes.extend(b.notes);
    }
    Report {
        suite,
        max_n,
        checks,
        notes,
    }
}

fn perms(list: &str) -> BTreeSet<Permutation> {
    list.split_whitespace()
        .map(|s| s.parse().expect("literal permutation"))
        .collect()
}

/// Reference class tables for `n = 2, 3, 4`.
fn reference_tables() -> Vec<(usize, Vec<BTreeSet<Permutation>>)> {
    let rows = |list: &[&str]| list.iter().map(|r| perms(r)).collect::<Vec<_>>();
    vec![
        (2, rows(&["12", "21"])),
        (3, rows(&["123", "132 213", "231 312", "321"])),
        (
            4,
            rows(&[
                "1234",
                "1243 1324 2134",
                "1342 1423 2143 2314 3124",
                "1432 3142 3214",
                "2341 2413 4123",
                "2431 3241 3412 4132 4213",
                "3421 4231 4312",
                "4321",
            ]),
        ),
    ]
}

pub fn reference_class_n5() -> BTreeSet<Permutation> {
    perms(
        "12543 13452 13524 14253 14325 15234 21453 \
         21534 23154 23415 24135 31254 31425 32145 41235",
    )
}

fn classes(max_n: usize) -> Builder {
    let mut b = Builder::new(Suite::Classes);
    for n in 2..=max_n {
        let classes = all_classes(n);
        b.check("class count").record(classes.len() == classes_count(n), || {
            format!("n={n}: {} classes", classes.len())
        });
        b.notes
            .push(format!("n={n}: {} forgotten classes", classes.len()));

        let total: usize = classes.iter().map(Vec::len).sum();
        let factorial: usize = (1..=n).product();
        b.check("partition of S_n").record(total == factorial, || {
            format!("n={n}: classes cover {total} of {factorial}")
        });

        for p in Permutation::all(n) {
            let key = ClassKey::of(&p).expect("n >= 2");
            let moves = elementary_moves(&p);
            let bad = moves.iter().find(|q| ClassKey::of(q).ok() != Some(key));
            b.check("moves preserve key")
                .record(bad.is_none(), || format!("{p} -> {}", bad.unwrap()));
        }

        // closure partition and key partition coincide
        let mut keys_seen = HashSet::new();
        for class in &classes {
            let descents: Vec<Composition> =
                class.iter().map(Permutation::descent_composition).collect();
            b.check("descent compositions closed under reversal")
                .record(reversal_closed(&descents), || class[0].to_string());

            let key = ClassKey::of(&class[0]).expect("n >= 2");
            let uniform = class.iter().all(|q| ClassKey::of(q).ok() == Some(key));
            let fresh = keys_seen.insert(key);
            b.check("keys characterize classes")
                .record(uniform && fresh, || format!("class of {} (key {key})", class[0]));
        }

        if let Some((_, rows)) = reference_tables().into_iter().find(|(m, _)| *m == n) {
            let got: Vec<BTreeSet<Permutation>> = classes
                .iter()
                .map(|c| c.iter().cloned().collect())
                .collect();
            b.check("reference tables")
                .record(got == rows, || format!("n={n}: {got:?}"));
        }
        if n == 5 {
            let reference = reference_class_n5();
            let got = class_closure(&"12543".parse().expect("literal"));
            b.check("reference tables")
                .record(got == reference, || format!("closure of 12543: {got:?}"));
        }
    }
    b
}

fn canonical(max_n: usize) -> Builder {
    let mut b = Builder::new(Suite::Canonical);
    for n in 2..=max_n {
        let lex = lex_enumerate(n);
        let lex_set: BTreeSet<_> = lex.iter().cloned().collect();
        b.check("|Lex(n)| = n^2-3n+4").record(lex.len() == classes_count(n), || {
            format!("n={n}: {}", lex.len())
        });

        // Lex(n) lies inside the Λ-shapes, so filtering those suffices
        let avoiders: BTreeSet<Permutation> = (0u64..1 << (n - 1))
            .map(|mask| {
                let left = (1..n as u8).filter(|&x| mask >> (x - 1) & 1 == 1).collect();
                lambda_word(&left, n)
            })
            .filter(is_canonical)
            .collect();
        b.check("Lex(n) = pattern avoiders")
            .record(avoiders == lex_set, || format!("n={n}"));
        if n <= 8 {
            let brute: BTreeSet<_> = Permutation::all(n).filter(is_canonical).collect();
            b.check("Lex(n) = pattern avoiders")
                .record(brute == lex_set, || format!("n={n} over all of S_n"));
        }

        for family in [Family::Sigma, Family::Tau] {
            for form in CanonicalForm::all(family, n) {
                let word = form.word();
                b.check("inversion formula")
                    .record(form.inversions() == word.inversions(), || form.to_string());
                let back = CanonicalForm::from_inversions(family, form.inversions(), n);
                b.check("form round trip")
                    .record(back.as_ref() == Ok(&form), || form.to_string());
                b.check("forms are canonical")
                    .record(lex_set.contains(&word), || form.to_string());
            }
        }

        for w in &lex {
            let same = ClassKey::of(w).ok() == ClassKey::of(&w.inverse()).ok();
            b.check("Lex(n) closed under inverse classes")
                .record(same, || w.to_string());
        }

        for p in Permutation::all(n).filter(Permutation::is_lambda) {
            let target = canonical_of(&p).expect("n >= 2");
            let key = ClassKey::of(&p).expect("n >= 2");
            let mut cur = p.clone();
            let mut ok = true;
            while let Some(next) = next_lambda_down(&cur).expect("Λ-shaped") {
                if next >= cur || !next.is_lambda() || ClassKey::of(&next).ok() != Some(key) {
                    ok = false;
                    break;
                }
                cur = next;
            }
            ok &= cur == target && is_canonical(&cur);
            b.check("Λ chain reaches canonical")
                .record(ok, || format!("{p} stops at {cur}"));
        }

        if n <= 9 {
            for p in Permutation::all(n) {
                let sharp = p.schuetzenberger();
                b.check("Schützenberger preserves key")
                    .record(equivalent(&p, &sharp) == Ok(true), || p.to_string());
            }
            let cof: BTreeSet<ClassKey> = Permutation::all(n)
                .map(|p| ClassKey::of(&p.inverse()).expect("n >= 2"))
                .collect();
            let reps: BTreeSet<ClassKey> = lex
                .iter()
                .map(|w| ClassKey::of(&w.inverse().inverse()).expect("n >= 2"))
                .collect();
            b.check("coforgotten classes")
                .record(cof.len() == classes_count(n) && cof == reps, || {
                    format!("n={n}: {} coforgotten classes", cof.len())
                });
        }

        if n <= 7 {
            for class in all_classes(n) {
                let min = &class[0];
                let all_min = class.iter().all(|q| canonical_of(q).ok().as_ref() == Some(min));
                b.check("canonical = min of closure")
                    .record(all_min, || min.to_string());

                let plus = ClassKey::of(min).expect("n >= 2").one_before_n;
                let (first, last) = if plus { (1, n as u8) } else { (n as u8, 1) };
                let starts = class.iter().any(|q| q.as_slice()[0] == first);
                let ends = class.iter().any(|q| q.as_slice()[n - 1] == last);
                let no_other = !class.iter().any(|q| q.as_slice()[0] == last);
                b.check("first/last letter property")
                    .record(starts && ends && no_other, || min.to_string());

                if n <= 6 {
                    let set: HashSet<_> = class.iter().collect();
                    let closed = class.iter().all(|q| set.contains(&q.schuetzenberger()));
                    b.check("Schützenberger stays in closure")
                        .record(closed, || min.to_string());
                }
            }
        }
    }
    b
}

fn insertion(max_n: usize) -> Builder {
    let mut b = Builder::new(Suite::Insertion);
    for n in 2..=max_n {
        for w in lex_enumerate(n - 1) {
            for i in 0..n {
                let witness = || format!("{w} <- {i}");
                let Ok(res) = insert(&w, i) else {
                    b.check("insert result in Lex(n)").record(false, witness);
                    continue;
                };
                b.check("insert result in Lex(n)")
                    .record(is_canonical(&res) && res.len() == n, witness);
                b.check("insert inversion count")
                    .record(res.inversions() == w.inversions() + n - 1 - i, witness);
                let mut letters: Vec<u8> = w.as_slice().to_vec();
                letters.push(i as u8);
                let std = standardize(&letters).expect("nonempty");
                b.check("insert matches standardization")
                    .record(equivalent(&res, &std) == Ok(true), witness);
            }
        }
    }
    if max_n >= 7 {
        let w: Permutation = "136542".parse().expect("literal");
        let expected = [
            "2476531", "1476532", "1376542", "1276543", "1267543", "1257643", "1247653",
        ];
        for (i, e) in expected.iter().enumerate() {
            let got = insert(&w, i).map(|p| p.to_string());
            b.check("reference insertion table")
                .record(got.as_deref() == Ok(*e), || format!("i={i}: {got:?}"));
        }
    }
    b
}

fn commutation(max_q: usize) -> Builder {
    let mut b = Builder::new(Suite::Commutation);
    for q in 2..=max_q.min(u8::MAX as usize) as u8 {
        for i in 1..=3 {
            for j in 1..=3 {
                b.check("e_i e_j = e_j e_i in quotient")
                    .record(commute_check(i, j, q), || format!("i={i} j={j} q={q}"));
            }
        }
        if q > 4 {
            continue;
        }
        for len in 1..=6 {
            for class in all_word_classes(len, q) {
                let nf = &class[0];
                let members: BTreeSet<&Word> = class.iter().collect();
                for w in &class {
                    for u in general_moves(w) {
                        let mut a = w.letters().to_vec();
                        let mut c = u.letters().to_vec();
                        a.sort_unstable();
                        c.sort_unstable();
                        b.check("word moves preserve content")
                            .record(a == c, || format!("{w} -> {u}"));
                        // aba/baa and bab/bba shift the inversion count by one
                        if distinct(w.letters()) {
                            b.check("moves on distinct letters preserve inversions")
                                .record(w.inversions() == u.inversions(), || {
                                    format!("{w} -> {u}")
                                });
                        }
                        b.check("word classes closed").record(members.contains(&u), || {
                            format!("{w} -> {u}")
                        });
                    }
                    b.check("normal form is class invariant")
                        .record(&word_normal_form(w) == nf, || w.to_string());
                    if distinct(w.letters()) {
                        let std = standardize(w.letters()).expect("nonempty");
                        let on_words: BTreeSet<Permutation> = general_moves(w)
                            .iter()
                            .map(|u| standardize(u.letters()).expect("nonempty"))
                            .collect();
                        b.check("restriction to distinct letters")
                            .record(on_words == elementary_moves(&std), || w.to_string());
                    }
                }
                let descents: Vec<Composition> = class
                    .iter()
                    .filter_map(Word::descent_composition)
                    .collect();
                b.check("descent compositions closed under reversal")
                    .record(reversal_closed(&descents), || nf.to_string());
            }
        }
    }
    b
}

fn distinct(w: &[u8]) -> bool {
    let set: HashSet<_> = w.iter().collect();
    set.len() == w.len()
}

/// Multiset equality of `xs` and its image under reversal.
pub fn reversal_closed(xs: &[Composition]) -> bool {
    let mut counts: BTreeMap<&[usize], i64> = BTreeMap::new();
    let reversed: Vec<Composition> = xs.iter().map(Composition::reversed).collect();
    for c in xs {
        *counts.entry(c.parts()).or_default() += 1;
    }
    for c in &reversed {
        *counts.entry(c.parts()).or_default() -= 1;
    }
    counts.values().all(|&v| v == 0)
}

fn ribbon(max_n: usize) -> Builder {
    let mut b = Builder::new(Suite::Ribbon);
    let pairing = determine_sign_pairing(4..=5);
    b.notes.push(format!("sign pairing determined on n=4,5: {pairing:?}"));
    b.check("sign pairing (1 before n <-> not ending in 1)")
        .record(pairing == SignPairing::ADOPTED, || format!("{pairing:?}"));

    for n in 2..=max_n {
        let mut eval = RibbonEvaluator::<BigInt>::new(n, n);
        let all_classes = all_classes(n);
        for class in &all_classes {
            let key = ClassKey::of(&class[0]).expect("n >= 2");
            let methods = ExpansionMethods::compute(&key);
            b.check("three expansion methods agree")
                .record(methods.agree(), || format!("{key}: {methods:?}"));
            let lambda_recoils: Vec<_> = lambda_members(&key)
                .iter()
                .map(Permutation::recoil_composition)
                .collect();
            let distinct: BTreeSet<_> = lambda_recoils.iter().collect();
            b.check("Λ-members have distinct recoils")
                .record(distinct.len() == lambda_recoils.len(), || key.to_string());

            let Ok(expansion) = ribbon_expansion(&key) else {
                b.check("class sum = ribbon sum").record(false, || key.to_string());
                continue;
            };
            let lhs = eval.sum_over(class);
            let rhs = eval.ribbon_sum(&expansion);
            b.check("class sum = ribbon sum")
                .record(lhs == rhs, || format!("{key}: {expansion}"));
            b.check("class sum is symmetric")
                .record(lhs.is_symmetric(), || key.to_string());
            if n == 5 && key.inv == 3 && key.one_before_n {
                b.notes.push(format!("{key}: {expansion}"));
            }
        }

        for k in 0..=n * (n - 1) / 2 {
            let part = |sign: bool| {
                ClassKey::new(n, k, sign)
                    .ok()
                    .and_then(|key| ribbon_expansion(&key).ok())
                    .map(|e| e.compositions)
                    .unwrap_or_default()
            };
            let (plus, minus) = (part(true), part(false));
            let all = compositions_with_maj(n, k, LastPart::All);
            let union: BTreeSet<_> = plus.union(&minus).cloned().collect();
            b.check("expansions partition maj compositions").record(
                plus.is_disjoint(&minus) && union == all,
                || format!("n={n} k={k}"),
            );
        }
    }

    let reference = [
        (true, "(1,1,1,1,4) (2,1,2,3) (1,3,1,3) (1,2,3,2) (4,2,2)"),
        (false, "(1,1,5,1) (3,4,1)"),
    ];
    for (sign, list) in reference {
        let want: BTreeSet<Composition> = list
            .split_whitespace()
            .map(|c| c.parse().expect("literal"))
            .collect();
        let key = ClassKey::new(8, 10, sign).expect("valid key");
        let got = ribbon_expansion(&key).map(|e| e.compositions);
        b.check("reference S_8 expansions")
            .record(got.as_ref() == Ok(&want), || format!("{key}: {got:?}"));
    }
    b
}

fn foata(max_n: usize) -> Builder {
    let mut b = Builder::new(Suite::Foata);
    for n in 1..=max_n {
        let mut images = HashSet::new();
        let mut ns_images = HashSet::new();
        // NS preimages grouped by (maj of inverse, n-1 before n)
        let mut by_stat: BTreeMap<(usize, bool), BTreeSet<Permutation>> = BTreeMap::new();
        for p in Permutation::all(n) {
            let phi = foata_phi(&p);
            b.check("inv(Φ(p)) = maj(p)")
                .record(phi.inversions() == p.maj(), || p.to_string());
            b.check("Φ preserves recoils")
                .record(phi.recoil_composition() == p.recoil_composition(), || p.to_string());
            if n >= 2 {
                let w = phi.as_slice();
                let s = p.as_slice();
                b.check("Φ end-letter property")
                    .record((w[0] < w[n - 1]) == (s[n - 2] < s[n - 1]), || p.to_string());
            }
            if p.is_v() {
                let r = p.inverse();
                b.check("Φ fixes inverses of V-permutations")
                    .record(foata_phi(&r) == r, || p.to_string());
            }
            images.insert(phi);

            let ns = ns_map(&p);
            b.check("NS preserves descents")
                .record(ns.descent_set() == p.descent_set(), || p.to_string());
            b.check("inv(NS(p)) = maj(p^-1)")
                .record(ns.inversions() == p.inverse().maj(), || p.to_string());
            if n >= 2 {
                let one_first = ns.position(1) < ns.position(n as u8);
                let pen_first = p.position(n as u8 - 1) < p.position(n as u8);
                b.check("NS sign property")
                    .record(one_first == pen_first, || p.to_string());
                by_stat
                    .entry((p.inverse().maj(), pen_first))
                    .or_default()
                    .insert(ns.clone());
            }
            ns_images.insert(ns);
        }
        let factorial: usize = (1..=n).product();
        b.check("Φ is a bijection")
            .record(images.len() == factorial, || format!("n={n}"));
        b.check("NS is a bijection")
            .record(ns_images.len() == factorial, || format!("n={n}"));

        if n >= 2 {
            for ((k, pen_first), image) in by_stat {
                let ok = match ClassKey::new(n, k, pen_first) {
                    Ok(key) => image == class_closure(&key.canonical()),
                    Err(_) => false,
                };
                b.check("NS maps maj statistics onto classes")
                    .record(ok, || format!("n={n} k={k} sign={pen_first}"));
            }
        }
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_runs_pass() {
        let report = run(Suite::All, 4);
        for c in &report.checks {
            assert!(c.ok(), "{c}");
        }
        assert!(report.passed());
    }

    #[test]
    fn suite_names() {
        for s in Suite::EACH {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert_eq!("all".parse::<Suite>().unwrap(), Suite::All);
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn reversal_closure_helper() {
        let c = |s: &str| s.parse::<Composition>().unwrap();
        assert!(reversal_closed(&[c("(1,2)"), c("(2,1)")]));
        assert!(reversal_closed(&[c("(1,2,1)")]));
        assert!(!reversal_closed(&[c("(1,2)")]));
    }

    #[test]
    fn failing_check_keeps_first_witness() {
        let mut c = Check::new(Suite::Classes, "x");
        c.record(true, || unreachable!());
        c.record(false, || "first".into());
        c.record(false, || "second".into());
        assert_eq!(c.counterexample.as_deref(), Some("first"));
        assert_eq!((c.passed, c.failed), (1, 2));
        assert!(c.to_string().starts_with("FAIL classes/x"));
    }
}
