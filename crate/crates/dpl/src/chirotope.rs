//! Chirotopes: the map from index triples to three-curve classes, k-extension
//! checks through cyclic ternary relations, and reconstruction.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::arrangement::{slotted, Arrangement, Block, Cycle};
use crate::catalog;
use crate::error::{DplError, Result};
use crate::flags::KeyMode;
use crate::words::{rotation_eq, CrossingSymbol, SignedIndex, SignedPermutation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Flavor {
    Disk,
    Crosscap,
}

#[derive(Clone, Debug)]
pub struct Chirotope {
    indices: Vec<u32>,
    entries: BTreeMap<[u32; 3], Arrangement>,
}

impl PartialEq for Chirotope {
    fn eq(&self, other: &Self) -> bool {
        self.indices == other.indices
            && self.entries.len() == other.entries.len()
            && self.entries.iter().zip(&other.entries).all(|((k1, a), (k2, b))| k1 == k2 && a == b)
    }
}

impl Eq for Chirotope {}

fn triples(idx: &[u32]) -> Vec<[u32; 3]> {
    let mut out = Vec::new();
    for a in 0..idx.len() {
        for b in a + 1..idx.len() {
            for c in b + 1..idx.len() {
                out.push([idx[a], idx[b], idx[c]]);
            }
        }
    }
    out
}

/// All `k`-subsets of `idx`, in lexicographic order.
pub fn subsets(idx: &[u32], k: usize) -> Vec<Vec<u32>> {
    fn rec(idx: &[u32], k: usize, start: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for p in start..idx.len() {
            cur.push(idx[p]);
            rec(idx, k, p + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(idx, k, 0, &mut Vec::new(), &mut out);
    out
}

struct NamedClass {
    name: &'static str,
    rep: Arrangement,
}

fn named_classes() -> &'static HashMap<Vec<u8>, NamedClass> {
    static CELL: OnceLock<HashMap<Vec<u8>, NamedClass>> = OnceLock::new();
    CELL.get_or_init(|| {
        catalog::CLASS_NAMES
            .iter()
            .map(|&name| {
                let rep = catalog::arrangement(name).expect("catalog class");
                (rep.flags().canonical_key(KeyMode::Plain), NamedClass { name, rep })
            })
            .collect()
    })
}

/// Name of a three-curve arrangement: `C22(1 -2 -3)` for the named classes,
/// otherwise its indexed key.
pub fn class_name(a: &Arrangement) -> String {
    if a.n() == 3 {
        if let Some(nc) = named_classes().get(&a.flags().canonical_key(KeyMode::Plain)) {
            let bases = a.indices();
            for sigma in all_onto(bases) {
                if let Ok(img) = nc.rep.act(&sigma) {
                    if &img == a {
                        let imgs: Vec<String> = sigma.images().iter().map(|x| x.to_string()).collect();
                        return format!("{}({})", nc.name, imgs.join(" "));
                    }
                }
            }
        }
    }
    format!("[{}]", a.indexed_key())
}

/// Signed bijections from {1,2,3} onto the given bases, in a fixed order.
fn all_onto(bases: &[u32]) -> Vec<SignedPermutation> {
    SignedPermutation::all(bases)
        .into_iter()
        .map(|p| SignedPermutation::from_images(&[1, 2, 3], &p.images()).expect("bijection"))
        .collect()
}

/// Instantiates a named class with the signed images of 1, 2, 3.
pub fn named_entry(name: &str, images: &[SignedIndex]) -> Result<Arrangement> {
    let rep = catalog::arrangement(name)?;
    let sigma = SignedPermutation::from_images(&[1, 2, 3], images)?;
    rep.act(&sigma)
}

impl Chirotope {
    pub fn new(indices: &[u32], entries: BTreeMap<[u32; 3], Arrangement>) -> Result<Chirotope> {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if idx.len() < 3 {
            return Err(DplError::TooFewIndices(3));
        }
        for t in triples(&idx) {
            let e = entries.get(&t).ok_or_else(|| DplError::Parse(format!("missing entry for {t:?}")))?;
            if e.indices() != t {
                return Err(DplError::Parse(format!("entry for {t:?} lives on {:?}", e.indices())));
            }
        }
        if entries.len() != triples(&idx).len() {
            return Err(DplError::Parse("entries outside the index set".into()));
        }
        Ok(Chirotope { indices: idx, entries })
    }

    pub fn of(a: &Arrangement) -> Result<Chirotope> {
        if a.n() < 3 {
            return Err(DplError::TooFewIndices(3));
        }
        let mut entries = BTreeMap::new();
        for t in triples(a.indices()) {
            entries.insert(t, a.restriction(&t)?);
        }
        Ok(Chirotope { indices: a.indices().to_vec(), entries })
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn entries(&self) -> &BTreeMap<[u32; 3], Arrangement> {
        &self.entries
    }

    pub fn entry(&self, t: [u32; 3]) -> Option<&Arrangement> {
        let mut s = t;
        s.sort_unstable();
        self.entries.get(&s)
    }

    pub fn names(&self) -> BTreeMap<[u32; 3], String> {
        self.entries.iter().map(|(t, a)| (*t, class_name(a))).collect()
    }

    pub fn restriction(&self, subset: &[u32]) -> Result<Chirotope> {
        let mut j = subset.to_vec();
        j.sort_unstable();
        let entries = triples(&j)
            .into_iter()
            .map(|t| self.entries.get(&t).map(|a| (t, a.clone())).ok_or(DplError::UnknownIndex(t[0])))
            .collect::<Result<_>>()?;
        Chirotope::new(&j, entries)
    }

    pub fn act(&self, sigma: &SignedPermutation) -> Result<Chirotope> {
        let mut entries = BTreeMap::new();
        for (t, a) in &self.entries {
            let mut sub_images = Vec::new();
            for &b in t {
                sub_images.push(sigma.apply(SignedIndex::pos(b))?);
            }
            let sub = SignedPermutation::from_images(t, &sub_images)?;
            let img = a.act(&sub)?;
            let mut nt: Vec<u32> = sub_images.iter().map(|x| x.base).collect();
            nt.sort_unstable();
            entries.insert([nt[0], nt[1], nt[2]], img);
        }
        Chirotope::new(&sigma.image_bases(), entries)
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "indices: {}", self.indices.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "));
        for (t, a) in &self.entries {
            let name = class_name(a);
            let body = if name.starts_with('[') { inline(a) } else { name };
            let _ = writeln!(s, "chi {} {} {}: {}", t[0], t[1], t[2], body);
        }
        s
    }

    /// Parses `indices: ...` followed by `chi i j k: Name(a b c)` lines or
    /// inline cycles `chi i j k: D ... | D ... | D ... [/ M ... | M ... | M ...]`.
    pub fn parse(text: &str) -> Result<Chirotope> {
        let mut indices: Option<Vec<u32>> = None;
        let mut entries = BTreeMap::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |m: &str| DplError::Parse(format!("line {}: {m}", ln + 1));
            let (head, body) = line.split_once(':').ok_or_else(|| err("missing `:`"))?;
            let head = head.trim();
            if head == "indices" {
                let v: std::result::Result<Vec<u32>, _> = body.split_whitespace().map(str::parse).collect();
                indices = Some(v.map_err(|_| err("bad index list"))?);
                continue;
            }
            let mut it = head.split_whitespace();
            if it.next() != Some("chi") {
                return Err(err("expected `chi`"));
            }
            let t: Vec<u32> = it.map(|x| x.parse().map_err(|_| err("bad triple"))).collect::<Result<_>>()?;
            if t.len() != 3 {
                return Err(err("a triple needs three indices"));
            }
            let body = body.trim();
            let a = if let Some(open) = body.find('(') {
                let name = body[..open].trim();
                let close = body.rfind(')').ok_or_else(|| err("unclosed `(`"))?;
                let images: Vec<SignedIndex> = body[open + 1..close]
                    .split_whitespace()
                    .map(|x| x.parse::<SignedIndex>().map_err(|_| err("bad signed index")))
                    .collect::<Result<_>>()?;
                named_entry(name, &images)?
            } else {
                parse_inline(&t, body)?
            };
            let mut key = [t[0], t[1], t[2]];
            key.sort_unstable();
            if a.indices() != key {
                return Err(err("entry does not live on its triple"));
            }
            entries.insert(key, a);
        }
        let idx = match indices {
            Some(v) => v,
            None => entries.keys().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect(),
        };
        Chirotope::new(&idx, entries)
    }
}

fn inline(a: &Arrangement) -> String {
    let w = |c: &Cycle| c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ");
    let d: Vec<String> = a.indices().iter().map(|&i| w(a.disk(i).expect("curve"))).collect();
    let m: Vec<String> = a.indices().iter().map(|&i| w(a.crosscap(i).expect("curve"))).collect();
    format!("{} / {}", d.join(" | "), m.join(" | "))
}

fn parse_inline(t: &[u32], body: &str) -> Result<Arrangement> {
    let mut sorted = t.to_vec();
    sorted.sort_unstable();
    let (dpart, mpart) = match body.split_once('/') {
        Some((d, m)) => (d, Some(m)),
        None => (body, None),
    };
    let read = |part: &str| -> Result<BTreeMap<u32, Cycle>> {
        let words: Vec<&str> = part.split('|').collect();
        if words.len() != 3 {
            return Err(DplError::Parse("inline entry needs three cycles".into()));
        }
        let mut m = BTreeMap::new();
        for (&i, w) in sorted.iter().zip(words) {
            m.insert(i, crate::arrangement::parse_word(w)?);
        }
        Ok(m)
    };
    let disk = read(dpart)?;
    match mpart {
        Some(m) => Arrangement::validate(&sorted, disk, read(m)?),
        None => Arrangement::from_disk_only(&sorted, disk),
    }
}

fn symbols_restricted(a: &Arrangement, carrier: u32, flavor: Flavor) -> Result<Vec<CrossingSymbol>> {
    match flavor {
        Flavor::Disk => slotted(carrier, a.disk(carrier)?, true),
        Flavor::Crosscap => slotted(carrier, a.crosscap(carrier)?, false),
    }
}

/// Cyclic words of crossing symbols on `carrier` whose restriction to every
/// pair of other curves matches the chirotope.
fn carrier_candidates(chi: &Chirotope, carrier: u32, flavor: Flavor) -> Result<Vec<Vec<CrossingSymbol>>> {
    let others: Vec<u32> = chi.indices.iter().copied().filter(|&j| j != carrier).collect();
    let pair_word = |j: u32, k: u32| -> Result<Vec<CrossingSymbol>> {
        let e = chi.entry([carrier, j, k]).expect("entry");
        symbols_restricted(e, carrier, flavor)
    };
    let mut current = vec![pair_word(others[0], others[1])?];
    for (pos, &l) in others.iter().enumerate().skip(2) {
        let constraints: Vec<(u32, Vec<CrossingSymbol>)> =
            others[..pos].iter().map(|&j| pair_word(j, l).map(|w| (j, w))).collect::<Result<_>>()?;
        let lsyms: Vec<CrossingSymbol> = {
            let w = &constraints[0].1;
            w.iter().copied().filter(|x| x.other == l).collect()
        };
        let mut next = Vec::new();
        for base in &current {
            insert_all(base, &lsyms, &mut |cand| {
                let ok = constraints.iter().all(|(j, w)| {
                    let r: Vec<CrossingSymbol> =
                        cand.iter().copied().filter(|x| x.other == *j || x.other == l).collect();
                    rotation_eq(&r, w)
                });
                if ok {
                    next.push(cand.to_vec());
                }
            });
        }
        current = next;
        if current.is_empty() {
            break;
        }
    }
    Ok(current)
}

/// Calls `f` on every cyclic word obtained by inserting `items` (in this
/// order) into the cyclic word `base`; the first item goes after position 0.
fn insert_all(base: &[CrossingSymbol], items: &[CrossingSymbol], f: &mut dyn FnMut(&[CrossingSymbol])) {
    // gaps after base[g]; items placed in nondecreasing gap order starting from
    // some cyclic shift of the items, which is fixed because items is a cyclic
    // word itself: rotate items so each may come first after base[0].
    let m = items.len();
    let n = base.len();
    let mut gaps = vec![0usize; m];
    for shift in 0..m {
        let rot: Vec<CrossingSymbol> = (0..m).map(|t| items[(shift + t) % m]).collect();
        fn rec(
            k: usize,
            lo: usize,
            n: usize,
            gaps: &mut Vec<usize>,
            base: &[CrossingSymbol],
            rot: &[CrossingSymbol],
            f: &mut dyn FnMut(&[CrossingSymbol]),
        ) {
            if k == gaps.len() {
                let mut w = Vec::with_capacity(base.len() + rot.len());
                let mut t = 0;
                for (g, &b) in base.iter().enumerate() {
                    w.push(b);
                    while t < rot.len() && gaps[t] == g {
                        w.push(rot[t]);
                        t += 1;
                    }
                }
                f(&w);
                return;
            }
            for g in lo..n {
                gaps[k] = g;
                rec(k + 1, g, n, gaps, base, rot, f);
            }
        }
        rec(0, 0, n, &mut gaps, base, &rot, f);
    }
}

/// Per-carrier cyclic order read from four-curve reconstructions, with the
/// ternary-relation axioms checked.
pub fn relations_from(
    chi: &Chirotope,
    fours: &BTreeMap<Vec<u32>, Arrangement>,
    carrier: u32,
    flavor: Flavor,
) -> Result<Vec<CrossingSymbol>> {
    let others: Vec<u32> = chi.indices.iter().copied().filter(|&j| j != carrier).collect();
    let syms: Vec<CrossingSymbol> = others
        .iter()
        .flat_map(|&j| (1..=4u8).map(move |k| CrossingSymbol { carrier, other: j, slot: k }))
        .collect();
    let l = syms.len();
    let mut pos_cache: HashMap<Vec<u32>, HashMap<CrossingSymbol, usize>> = HashMap::new();
    let mut pos_in = |bases: &BTreeSet<u32>| -> Result<(Vec<u32>, HashMap<CrossingSymbol, usize>)> {
        let mut set: BTreeSet<u32> = bases.clone();
        for &j in &others {
            if set.len() >= 3 {
                break;
            }
            set.insert(j);
        }
        set.insert(carrier);
        let key: Vec<u32> = set.into_iter().collect();
        if let Some(p) = pos_cache.get(&key) {
            return Ok((key, p.clone()));
        }
        let a = fours.get(&key).ok_or_else(|| DplError::NotTotal {
            carrier,
            triple: bases.iter().copied().collect(),
            witness: key.clone(),
        })?;
        let w = symbols_restricted(a, carrier, flavor)?;
        let p: HashMap<CrossingSymbol, usize> = w.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        pos_cache.insert(key.clone(), p.clone());
        Ok((key, p))
    };
    // rel[a][b][c] for distinct a, b, c
    let mut rel = vec![false; l * l * l];
    let idx3 = |a: usize, b: usize, c: usize| (a * l + b) * l + c;
    for a in 0..l {
        for b in 0..l {
            for c in 0..l {
                if a == b || b == c || a == c {
                    continue;
                }
                let bases: BTreeSet<u32> = [syms[a].other, syms[b].other, syms[c].other].into_iter().collect();
                let (_, p) = pos_in(&bases)?;
                let len = p.len();
                let (pa, pb, pc) = (p[&syms[a]], p[&syms[b]], p[&syms[c]]);
                rel[idx3(a, b, c)] = (pb + len - pa) % len < (pc + len - pa) % len;
            }
        }
    }
    for a in 0..l {
        for b in 0..l {
            for c in 0..l {
                if a == b || b == c || a == c {
                    continue;
                }
                if rel[idx3(a, b, c)] == rel[idx3(a, c, b)] || rel[idx3(a, b, c)] != rel[idx3(b, c, a)] {
                    return Err(DplError::NotTotal {
                        carrier,
                        triple: vec![syms[a].other, syms[b].other, syms[c].other],
                        witness: vec![carrier, syms[a].other, syms[b].other, syms[c].other],
                    });
                }
            }
        }
    }
    for a in 0..l {
        for b in 0..l {
            for c in 0..l {
                if a == b || b == c || a == c || !rel[idx3(a, b, c)] {
                    continue;
                }
                for d in 0..l {
                    if d == a || d == b || d == c {
                        continue;
                    }
                    if rel[idx3(a, c, d)] && !rel[idx3(a, b, d)] {
                        let mut w: BTreeSet<u32> =
                            [syms[a].other, syms[b].other, syms[c].other, syms[d].other].into_iter().collect();
                        w.insert(carrier);
                        let labels = [a, b, c, d].iter().map(|&x| syms[x].other * 10 + syms[x].slot as u32).collect();
                        return Err(DplError::NotTransitive { carrier, labels, witness: w.into_iter().collect() });
                    }
                }
            }
        }
    }
    let mut rest: Vec<usize> = (1..l).collect();
    rest.sort_by(|&b, &c| if rel[idx3(0, b, c)] { std::cmp::Ordering::Less } else { std::cmp::Ordering::Greater });
    let mut out = vec![syms[0]];
    out.extend(rest.into_iter().map(|x| syms[x]));
    Ok(out)
}

/// Options for reconstruction.
#[derive(Clone, Copy, Debug)]
pub struct ReconstructOptions {
    /// Required genus; `None` accepts any genus.
    pub genus: Option<u32>,
}

impl Default for ReconstructOptions {
    fn default() -> Self {
        ReconstructOptions { genus: Some(1) }
    }
}

fn genus_ok(a: &Arrangement, opts: &ReconstructOptions) -> bool {
    opts.genus.is_none_or(|g| a.genus() == g)
}

/// Every arrangement on at most four curves with the given chirotope.
pub fn reconstruct_small(chi: &Chirotope, opts: &ReconstructOptions) -> Result<Vec<Arrangement>> {
    let n = chi.indices.len();
    if n == 3 {
        let a = chi.entries.values().next().expect("entry").clone();
        return Ok(if genus_ok(&a, opts) { vec![a] } else { vec![] });
    }
    let simple = chi.entries.values().all(|a| a.is_simple());
    let mut per_carrier: Vec<Vec<(Cycle, Cycle)>> = Vec::new();
    for &i in &chi.indices {
        let ds = carrier_candidates(chi, i, Flavor::Disk)?;
        let mut pairs = Vec::new();
        if simple {
            for d in ds {
                let dl: Cycle = d.iter().map(|&s| crate::arrangement::disk_letter(s)).collect();
                let ml: Cycle = dl.iter().map(|x| x.negate()).collect();
                pairs.push((dl, ml));
            }
        } else {
            let ms = carrier_candidates(chi, i, Flavor::Crosscap)?;
            for d in &ds {
                for m in &ms {
                    if block_compatible(d, m) {
                        let dl = d.iter().map(|&s| crate::arrangement::disk_letter(s)).collect();
                        let ml = m.iter().map(|&s| crate::arrangement::crosscap_letter(s)).collect();
                        pairs.push((dl, ml));
                    }
                }
            }
        }
        if pairs.is_empty() {
            return Ok(vec![]);
        }
        per_carrier.push(pairs);
    }
    let mut out: Vec<Arrangement> = Vec::new();
    let mut choice = vec![0usize; n];
    loop {
        let mut disk = BTreeMap::new();
        let mut cross = BTreeMap::new();
        for (t, &i) in chi.indices.iter().enumerate() {
            let (d, m) = &per_carrier[t][choice[t]];
            disk.insert(i, d.clone());
            cross.insert(i, m.clone());
        }
        if let Ok(a) = Arrangement::validate(&chi.indices, disk, cross) {
            if genus_ok(&a, opts) && Chirotope::of(&a).map(|c| &c == chi).unwrap_or(false) && !out.contains(&a) {
                out.push(a);
            }
        }
        let mut t = 0;
        loop {
            if t == n {
                return Ok(out);
            }
            choice[t] += 1;
            if choice[t] < per_carrier[t].len() {
                break;
            }
            choice[t] = 0;
            t += 1;
        }
    }
}

fn block_compatible(d: &[CrossingSymbol], m: &[CrossingSymbol]) -> bool {
    let l = d.len();
    let pos: HashMap<CrossingSymbol, usize> = m.iter().enumerate().map(|(p, &x)| (x, p)).collect();
    let linked: Vec<bool> = (0..l).map(|p| m[(pos[&d[p]] + 1) % l] == d[(p + l - 1) % l]).collect();
    let Some(p0) = (0..l).find(|&p| !linked[p]) else { return false };
    let mut blocks: Vec<Block> = Vec::new();
    for k in 0..l {
        let p = (p0 + k) % l;
        if !linked[p] {
            blocks.push(Vec::new());
        }
        blocks.last_mut().expect("open").push(d[p]);
    }
    let expect: Vec<CrossingSymbol> = blocks.iter().flat_map(|b| b.iter().rev().copied()).collect();
    rotation_eq(&expect, m)
}

/// The arrangement with the given chirotope (unique under the genus-one filter).
pub fn reconstruct(chi: &Chirotope, opts: &ReconstructOptions) -> Result<Arrangement> {
    let n = chi.indices.len();
    if n <= 4 {
        let mut v = reconstruct_small(chi, opts)?;
        return match v.len() {
            0 => Err(DplError::NoArrangement(format!("no arrangement on {:?}", chi.indices))),
            _ => Ok(v.swap_remove(0)),
        };
    }
    let mut fours = BTreeMap::new();
    for s in subsets(&chi.indices, 4) {
        let sub = chi.restriction(&s)?;
        let v = reconstruct_small(&sub, opts)?;
        let a = v
            .into_iter()
            .next()
            .ok_or_else(|| DplError::NoArrangement(format!("subset {s:?} has no arrangement")))?;
        fours.insert(s, a);
    }
    let mut disk = BTreeMap::new();
    let mut cross = BTreeMap::new();
    for &i in &chi.indices {
        let d = relations_from(chi, &fours, i, Flavor::Disk)?;
        let m = relations_from(chi, &fours, i, Flavor::Crosscap)?;
        if !block_compatible(&d, &m) {
            return Err(DplError::BlockInconsistent {
                carrier: i,
                reason: "disk and crosscap orders admit no common block decomposition".into(),
            });
        }
        disk.insert(i, d.iter().map(|&s| crate::arrangement::disk_letter(s)).collect());
        cross.insert(i, m.iter().map(|&s| crate::arrangement::crosscap_letter(s)).collect());
    }
    let a = Arrangement::validate(&chi.indices, disk, cross)?;
    if !genus_ok(&a, opts) {
        return Err(DplError::GenusNotOne(a.genus()));
    }
    if Chirotope::of(&a)? != *chi {
        return Err(DplError::NoArrangement("reconstruction has a different chirotope".into()));
    }
    Ok(a)
}

/// Outcome of a k-extension check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckReport {
    pub accepted: bool,
    pub failing_subset: Option<Vec<u32>>,
    pub reason: Option<String>,
}

/// Whether every restriction to at most `k` indices is realized (genus one).
pub fn is_k_chirotope(chi: &Chirotope, k: usize) -> CheckReport {
    let opts = ReconstructOptions::default();
    for t in chi.entries.values() {
        if t.genus() != 1 {
            return CheckReport {
                accepted: false,
                failing_subset: Some(t.indices().to_vec()),
                reason: Some(DplError::GenusNotOne(t.genus()).to_string()),
            };
        }
    }
    for size in 4..=k.min(chi.indices.len()) {
        for s in subsets(&chi.indices, size) {
            let sub = match chi.restriction(&s) {
                Ok(c) => c,
                Err(e) => return reject(s, e),
            };
            if let Err(e) = reconstruct(&sub, &opts) {
                return reject(s, e);
            }
        }
    }
    CheckReport { accepted: true, failing_subset: None, reason: None }
}

fn reject(s: Vec<u32>, e: DplError) -> CheckReport {
    CheckReport { accepted: false, failing_subset: Some(s), reason: Some(e.to_string()) }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn si(v: i64) -> SignedIndex {
        SignedIndex::from_i64(v).unwrap()
    }

    #[test]
    fn catalog_classes_name_themselves() {
        for name in catalog::CLASS_NAMES {
            let a = catalog::arrangement(name).unwrap();
            assert_eq!(class_name(&a), format!("{name}(1 2 3)"));
            assert_eq!(named_entry(name, &[si(1), si(2), si(3)]).unwrap(), a);
        }
    }

    #[test]
    fn thin_five_is_all_c04() {
        let a = Arrangement::cyclic_thin(5).unwrap();
        let chi = Chirotope::of(&a).unwrap();
        assert_eq!(chi.entries().len(), 10);
        assert!(chi.names().values().all(|n| n.starts_with("C04(")));
        assert_eq!(reconstruct(&chi, &ReconstructOptions::default()).unwrap(), a);
    }

    #[test]
    fn text_round_trip() {
        let chi = Chirotope::of(&catalog::arrangement("M2").unwrap()).unwrap();
        assert_eq!(Chirotope::parse(&chi.to_text()).unwrap(), chi);
    }

    #[test]
    fn restriction_and_act_commute() {
        let a = catalog::arrangement("M1").unwrap();
        let chi = Chirotope::of(&a).unwrap();
        let g = SignedPermutation::from_images(&[1, 2, 3, 4], &[si(2), si(-4), si(1), si(3)]).unwrap();
        assert_eq!(chi.act(&g).unwrap(), Chirotope::of(&a.act(&g).unwrap()).unwrap());
    }

    #[test]
    fn small_checks() {
        let c04 = Chirotope::parse(catalog::chirotope_text("allC04_n5").unwrap()).unwrap();
        assert!(is_k_chirotope(&c04, 4).accepted);
        let r = is_k_chirotope(&c04, 5);
        assert!(!r.accepted);
        assert_eq!(r.failing_subset, Some(vec![1, 2, 3, 4, 5]));
        let c32 = Chirotope::parse(catalog::chirotope_text("allC32_n4").unwrap()).unwrap();
        assert!(!is_k_chirotope(&c32, 4).accepted);
        let mixed = Chirotope::parse(catalog::chirotope_text("mixedC22C32_n4").unwrap()).unwrap();
        assert!(!is_k_chirotope(&mixed, 4).accepted);
    }

    #[test]
    fn subsets_of_four() {
        assert_eq!(subsets(&[1, 2, 3, 4], 3).len(), 4);
        assert_eq!(subsets(&[1, 2, 3, 4], 4), vec![vec![1, 2, 3, 4]]);
    }
}
