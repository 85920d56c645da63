//! One line per acceptance criterion. Set `DPL_SKIP_N4=1` to skip the
//! four-curve Möbius census.

use std::collections::{BTreeMap, BTreeSet};
use std::io::Write;
use std::time::Instant;

use dpl::catalog;
use dpl::chirotope::{self, Chirotope, ReconstructOptions};
use dpl::cocycle::{self, CocycleLabel};
use dpl::flags::two_curve_sigma1;
use dpl::mutation::{self, EnumerateOptions, Setting};
use dpl::words::{count_cyclic_shuffles, printed_shuffle_formula};
use dpl::{Arrangement, CrossingSymbol, KeyMode, SignedIndex, SignedPermutation};

type FlagCode = (u8, bool, bool);
type FaceRow<'a> = (u32, u32, &'a [(usize, usize)]);

struct Verdict {
    pass: bool,
    detail: String,
}

fn verdict(pass: bool, detail: impl Into<String>) -> Verdict {
    Verdict { pass, detail: detail.into() }
}

fn fv(pairs: &[(usize, usize)]) -> BTreeMap<usize, usize> {
    pairs.iter().copied().collect()
}

fn si(v: i64) -> SignedIndex {
    SignedIndex::from_i64(v).unwrap()
}

fn criterion_1() -> Verdict {
    let expected: [(&str, usize); 13] = [
        ("C04", 2),
        ("C07", 8),
        ("C18", 12),
        ("C37", 8),
        ("C15", 2),
        ("C43", 24),
        ("C22", 12),
        ("C33", 24),
        ("C32", 24),
        ("C25_2", 24),
        ("C25_1", 48),
        ("C36", 4),
        ("C64", 2),
    ];
    let mut bad = Vec::new();
    let mut c15 = 0;
    for (name, orbit) in expected {
        let a = catalog::arrangement(name).unwrap();
        if a.genus() != 1 || !a.is_simple() {
            bad.push(format!("{name} genus {}", a.genus()));
        }
        let got = a.orbit_count().unwrap();
        if name == "C15" {
            c15 = got;
        } else if got != orbit {
            bad.push(format!("{name} orbit {got} != {orbit}"));
        }
    }
    let c04 = catalog::arrangement("C04").unwrap();
    if c04.face_vector() != fv(&[(3, 4), (4, 9)]) {
        bad.push("C04 face vector".into());
    }
    let aut = catalog::arrangement("C64").unwrap().flags().automorphism_order();
    if aut != 24 {
        bad.push(format!("C64 |Aut| {aut}"));
    }
    verdict(bad.is_empty(), format!("mismatches {bad:?}; C15 orbit computed {c15} (printed 2, not asserted)"))
}

fn criterion_2() -> Verdict {
    // (slot, o, s) -> (slot, o, s) with + as true.
    let rows: [(FlagCode, FlagCode); 16] = [
        ((1, false, false), (1, false, false)),
        ((1, true, false), (1, false, true)),
        ((1, false, true), (1, true, false)),
        ((1, true, true), (1, true, true)),
        ((2, false, false), (3, false, true)),
        ((2, true, false), (3, false, false)),
        ((2, false, true), (3, true, true)),
        ((2, true, true), (3, true, false)),
        ((3, false, false), (2, true, false)),
        ((3, true, false), (2, true, true)),
        ((3, false, true), (2, false, false)),
        ((3, true, true), (2, false, true)),
        ((4, false, false), (4, true, true)),
        ((4, true, false), (4, true, false)),
        ((4, false, true), (4, false, true)),
        ((4, true, true), (4, false, false)),
    ];
    let mut ok = 0;
    for ((k, o, s), (k2, o2, s2)) in rows {
        let sym = CrossingSymbol::new(1, 2, k).unwrap();
        let (img, o3, s3) = two_curve_sigma1(sym, o, s);
        if img == CrossingSymbol::new(2, 1, k2).unwrap() && (o3, s3) == (o2, s2) {
            ok += 1;
        }
    }
    verdict(ok == 16, format!("{ok}/16 rows"))
}

fn criterion_3() -> Verdict {
    let t = Instant::now();
    let c = mutation::enumerate(3, Setting::Projective, &EnumerateOptions::default()).unwrap();
    let connected = mutation::connectivity_check(&c.classes);
    let secs = t.elapsed().as_secs_f64();
    verdict(
        c.classes.len() == 13 && connected && secs < 10.0,
        format!("{} classes, connected {connected}, {secs:.2}s", c.classes.len()),
    )
}

fn row(n: u32, simple_only: bool) -> (u64, u64, u64, u64) {
    let opts = EnumerateOptions { simple_only, ..Default::default() };
    let r = mutation::enumerate(n, Setting::Moebius, &opts).unwrap().row;
    (r.a, r.b, r.c, r.d)
}

fn criterion_4() -> Verdict {
    let r2 = row(2, true);
    let r3 = row(3, true);
    let all3 = row(3, false).0;
    let mut pass = r2 == (1, 1, 1, 1) && r3 == (118, 22, 16, 12) && all3 == 531;
    let mut detail = format!("n=2 {r2:?}, n=3 {r3:?}, n=3 with multiple points a={all3}");
    if std::env::var_os("DPL_SKIP_N4").is_some() {
        detail.push_str(", n=4 skipped");
        pass = false;
    } else {
        let t = Instant::now();
        let r4 = row(4, true);
        pass &= r4 == (541820, 22620, 11502, 5955);
        detail.push_str(&format!(", n=4 {r4:?} in {:.1}s", t.elapsed().as_secs_f64()));
    }
    verdict(pass, detail)
}

fn criterion_5() -> Verdict {
    let s3 = count_cyclic_shuffles(2);
    let printed = printed_shuffle_formula(3);
    verdict(s3 == 140, format!("s3 = {s3} by enumeration; printed closed formula gives {printed} (reported only)"))
}

fn criterion_6() -> Verdict {
    let mut bad = Vec::new();
    let mut check = |name: &str, a: &Arrangement, genus: u32, faces: &[(usize, usize)]| {
        if a.genus() != genus || a.face_vector() != fv(faces) {
            bad.push(format!("{name}: genus {} faces {:?}", a.genus(), a.face_vector()));
        }
    };
    check("M1star", &catalog::arrangement("M1star").unwrap(), 3, &[(2, 3), (4, 15), (5, 3), (6, 1), (9, 1)]);
    check("M2star", &catalog::arrangement("M2star").unwrap(), 3, &[(2, 4), (4, 14), (5, 3), (8, 1), (9, 1)]);
    check("all_c64(4)", &Arrangement::all_c64(4).unwrap(), 7, &[(2, 12), (8, 3), (12, 4)]);
    let table: [FaceRow; 5] = [
        (5, 14, &[(2, 20), (5, 1), (10, 1), (16, 5), (25, 1)]),
        (6, 21, &[(2, 30), (12, 5), (20, 6)]),
        (7, 33, &[(2, 42), (7, 1), (14, 2), (24, 7), (49, 1)]),
        (8, 43, &[(2, 56), (16, 7), (28, 8)]),
        (9, 58, &[(2, 72), (9, 1), (18, 3), (27, 3), (32, 9)]),
    ];
    for (n, g, faces) in table {
        check(&format!("all_c64({n})"), &Arrangement::all_c64(n).unwrap(), g, faces);
    }
    verdict(bad.is_empty(), format!("mismatches {bad:?}"))
}

fn names_match(chi: &Chirotope, expected: &[(&str, [i64; 3])]) -> bool {
    expected.iter().all(|(name, imgs)| {
        let e = chirotope::named_entry(name, &imgs.map(si)).unwrap();
        let mut t: Vec<u32> = imgs.iter().map(|x| x.unsigned_abs() as u32).collect();
        t.sort_unstable();
        chi.entry([t[0], t[1], t[2]]) == Some(&e)
    })
}

fn criterion_7() -> Verdict {
    let mut bad = Vec::new();
    // injectivity over the indexed and oriented three-curve classes
    let mut seen: BTreeMap<String, String> = BTreeMap::new();
    for name in catalog::CLASS_NAMES {
        let a = catalog::arrangement(name).unwrap();
        for g in SignedPermutation::all(&[1, 2, 3]) {
            let b = a.act(&g).unwrap();
            let chi = Chirotope::of(&b).unwrap().to_text();
            if let Some(prev) = seen.insert(chi, b.indexed_key()) {
                if prev != b.indexed_key() {
                    bad.push(format!("chirotope collision in {name}"));
                }
            }
        }
    }
    let classes = seen.len();
    let m1 = catalog::arrangement("M1").unwrap();
    let m2 = catalog::arrangement("M2").unwrap();
    let chi1 = Chirotope::of(&m1).unwrap();
    let chi2 = Chirotope::of(&m2).unwrap();
    if !names_match(&chi1, &[("C22", [1, -2, -3]), ("C22", [1, -3, -4]), ("C22", [1, -4, -2]), ("C04", [2, 3, 4])]) {
        bad.push("M1 entries".into());
    }
    if !names_match(&chi2, &[("C22", [1, 2, 3]), ("C22", [4, 2, -3]), ("C32", [1, 4, 2]), ("C32", [1, 4, 3])]) {
        bad.push("M2 entries".into());
    }
    let opts = ReconstructOptions::default();
    let thin5 = Arrangement::cyclic_thin(5).unwrap();
    if chirotope::reconstruct(&Chirotope::of(&thin5).unwrap(), &opts).ok() != Some(thin5) {
        bad.push("cyclic_thin(5) round trip".into());
    }
    if chirotope::reconstruct(&chi1, &opts).ok().as_ref() != Some(&m1) {
        bad.push("M1 round trip".into());
    }
    let any = chirotope::reconstruct_small(&chi1, &ReconstructOptions { genus: None }).unwrap();
    let star = catalog::arrangement("M1star").unwrap().flags().canonical_key(KeyMode::Plain);
    let impostor = any.iter().any(|a| a.genus() == 3 && a.flags().canonical_key(KeyMode::Plain) == star);
    let filtered = chirotope::reconstruct_small(&chi1, &opts).unwrap();
    if !impostor || filtered != vec![m1.clone()] {
        bad.push(format!("impostor present {impostor}, genus-one solutions {}", filtered.len()));
    }
    let c04 = Chirotope::parse(catalog::chirotope_text("allC04_n5").unwrap()).unwrap();
    let c32 = Chirotope::parse(catalog::chirotope_text("allC32_n4").unwrap()).unwrap();
    let k4 = chirotope::is_k_chirotope(&c04, 4).accepted;
    let k5 = chirotope::is_k_chirotope(&c04, 5);
    let c32k4 = chirotope::is_k_chirotope(&c32, 4).accepted;
    if !k4 || k5.accepted || c32k4 {
        bad.push("k-checks".into());
    }
    verdict(
        bad.is_empty(),
        format!(
            "{classes} indexed classes, failures {bad:?}; all-C04 k=5 witness {:?}: {}",
            k5.failing_subset,
            k5.reason.unwrap_or_default()
        ),
    )
}

fn criterion_8() -> Verdict {
    let mut bad = Vec::new();
    let mut martagons = BTreeSet::new();
    let mut checked = 0;
    for name in catalog::CLASS_NAMES {
        let a = catalog::arrangement(name).unwrap();
        for g in SignedPermutation::all(&[1, 2, 3]) {
            let b = a.act(&g).unwrap();
            for &i in b.indices() {
                checked += 1;
                if !mutation::pumping_check(&b, i).unwrap() {
                    bad.push(format!("pumping fails on {name}"));
                }
            }
        }
        if a.indices().iter().any(|&g| a.is_martagon(g).unwrap()) {
            martagons.insert(name);
        }
    }
    if martagons != BTreeSet::from(["C22", "C32"]) {
        bad.push(format!("martagons {martagons:?}"));
    }
    bad.dedup();
    verdict(
        bad.is_empty(),
        format!("pumping checked on {checked} (arrangement, curve) pairs; martagon classes {martagons:?}; failures {bad:?}; merge/split, group action and order independence in properties.rs"),
    )
}

fn criterion_9() -> Verdict {
    let two: CocycleLabel = "12..".parse().unwrap();
    let two_orbit = cocycle::orbit(&[two], &[1, 2]).unwrap().len();
    let reps = catalog::cocycle_representatives().unwrap();
    let active: Vec<CocycleLabel> = reps.iter().filter(|r| !r.quarantined).map(|r| r.label.clone()).collect();
    let quarantined: Vec<&str> = reps.iter().filter(|r| r.quarantined).map(|r| r.text.as_str()).collect();
    let total = cocycle::orbit(&active, &[1, 2, 3]).unwrap().len();
    let mut involution = true;
    for r in &reps {
        for g in SignedPermutation::all(&[1, 2, 3]) {
            let l = r.label.act(&g).unwrap();
            involution &= l.overline_reversed().overline_reversed() == l && l.overline_reversed().normalize() == l;
        }
    }
    verdict(
        two_orbit == 4 && total == 104 && involution,
        format!("2-body orbit {two_orbit}; 3-body total {total}; quarantined {quarantined:?}"),
    )
}

#[test]
fn acceptance() {
    let criteria: [(u32, fn() -> Verdict); 9] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
    ];
    let mut failed = Vec::new();
    for (k, f) in criteria {
        let t = Instant::now();
        let v = f();
        let status = if v.pass { "PASS" } else { "FAIL" };
        // written to stderr directly so the lines survive output capture
        let _ = writeln!(std::io::stderr(), "criterion {k}: {status} ({:.2}s) {}", t.elapsed().as_secs_f64(), v.detail);
        if !v.pass {
            failed.push(k);
        }
    }
    assert!(failed.is_empty(), "failed criteria {failed:?}");
}
