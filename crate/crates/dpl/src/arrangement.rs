//! Arrangements given by their side cycles, with validation through block
//! decompositions and the roll operator.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{DplError, Result};
use crate::flags::FlagComplex;
use crate::words::{
    canonical_rotation, crosscap_letter_positive, disk_letter_positive, roll, rotation_eq, CrossingSymbol, Head,
    SignedIndex, SignedPermutation,
};

pub type Cycle = Vec<SignedIndex>;
pub type Block = Vec<CrossingSymbol>;

/// A validated arrangement.
#[derive(Clone, Debug)]
pub struct Arrangement {
    name: Option<String>,
    indices: Vec<u32>,
    disk: BTreeMap<u32, Cycle>,
    crosscap: BTreeMap<u32, Cycle>,
    blocks: BTreeMap<u32, Vec<Block>>,
    vertices: Vec<Vec<(u32, usize)>>,
    vertex_of: HashMap<(u32, usize), usize>,
}

impl PartialEq for Arrangement {
    fn eq(&self, other: &Self) -> bool {
        self.indexed_key() == other.indexed_key()
    }
}

impl Eq for Arrangement {}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    pub name: Option<String>,
    pub indices: Vec<u32>,
    pub disk_cycles: BTreeMap<u32, Vec<i64>>,
    pub crosscap_cycles: BTreeMap<u32, Vec<i64>>,
    pub genus: u32,
    pub f_vector: BTreeMap<usize, usize>,
    pub simple: bool,
    pub thin: bool,
}

/// Slotted cycle of a carrier read from its letters.
pub fn slotted(carrier: u32, word: &[SignedIndex], disk: bool) -> Result<Block> {
    let kind = if disk { "disk" } else { "crosscap" };
    let mut positions: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
    for (p, x) in word.iter().enumerate() {
        positions.entry(x.base).or_default().push(p);
    }
    let mut out: Vec<Option<CrossingSymbol>> = vec![None; word.len()];
    for (&j, ps) in &positions {
        if ps.len() != 4 {
            return Err(DplError::WrongMultiplicity { curve: carrier, letter: j, count: ps.len() });
        }
        if j == carrier {
            return Err(DplError::WrongMultiplicity { curve: carrier, letter: j, count: 4 });
        }
        let signs: Vec<bool> = ps.iter().map(|&p| word[p].positive).collect();
        // slot k (1-based) has letter sign given by the cycle type
        let want: Vec<bool> = (1..=4u8)
            .map(|k| if disk { disk_letter_positive(k) } else { crosscap_letter_positive(k) })
            .collect();
        let r = (0..4)
            .find(|&r| (0..4).all(|t| signs[(r + t) % 4] == want[t]))
            .ok_or(DplError::BadSignPattern { curve: carrier, other: j, kind })?;
        for t in 0..4 {
            out[ps[(r + t) % 4]] = Some(CrossingSymbol { carrier, other: j, slot: t as u8 + 1 });
        }
    }
    Ok(out.into_iter().map(|x| x.expect("every letter slotted")).collect())
}

pub fn disk_letter(s: CrossingSymbol) -> SignedIndex {
    SignedIndex::new(s.other, disk_letter_positive(s.slot))
}

pub fn crosscap_letter(s: CrossingSymbol) -> SignedIndex {
    SignedIndex::new(s.other, crosscap_letter_positive(s.slot))
}

fn find_blocks(carrier: u32, s: &[CrossingSymbol], t: &[CrossingSymbol]) -> Result<Vec<Block>> {
    let l = s.len();
    let fail = |reason: &str| DplError::NoBlockDecomposition { curve: carrier, reason: reason.to_string() };
    if l == 0 {
        return Err(fail("empty cycle"));
    }
    let pos_t: HashMap<CrossingSymbol, usize> = t.iter().enumerate().map(|(p, &x)| (x, p)).collect();
    if pos_t.len() != l || t.len() != l {
        return Err(fail("disk and crosscap cycles name different crossings"));
    }
    let mut linked = vec![false; l];
    for p in 0..l {
        let q = *pos_t.get(&s[p]).ok_or_else(|| fail("crossing missing from crosscap cycle"))?;
        linked[p] = l > 1 && t[(q + 1) % l] == s[(p + l - 1) % l];
    }
    let p0 = (0..l).find(|&p| !linked[p]).ok_or_else(|| fail("single block"))?;
    let mut blocks: Vec<Block> = Vec::new();
    for d in 0..l {
        let p = (p0 + d) % l;
        if !linked[p] {
            blocks.push(Vec::new());
        }
        blocks.last_mut().expect("opened").push(s[p]);
    }
    for b in &blocks {
        let bases: BTreeSet<u32> = b.iter().map(|x| x.other).collect();
        if bases.len() != b.len() {
            return Err(fail("a block meets some curve twice"));
        }
    }
    let expect: Vec<CrossingSymbol> = blocks.iter().flat_map(|b| b.iter().rev().copied()).collect();
    if !rotation_eq(&expect, t) {
        return Err(fail("crosscap cycle is not the blockwise reversal"));
    }
    Ok(blocks)
}

fn heads(block: &[CrossingSymbol]) -> Vec<Head> {
    block.iter().map(|x| x.head()).collect()
}

/// The block of the target curve that `block` rolls to at `position` (1-based).
pub fn rolled(block: &[CrossingSymbol], position: usize) -> Result<(u32, Block)> {
    let h = heads(block);
    let mut r = roll(&h, position)?;
    let jp = h[position - 1].other;
    if !jp.positive {
        r.reverse();
    }
    Ok((jp.base, r.into_iter().map(Head::symbol).collect()))
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let n = self.0[y];
            self.0[y] = r;
            y = n;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra.max(rb)] = ra.min(rb);
        }
    }
}

fn check_indices(indices: &[u32]) -> Result<Vec<u32>> {
    let mut idx = indices.to_vec();
    idx.sort_unstable();
    idx.dedup();
    if idx.len() < 2 || idx.len() != indices.len() || idx.contains(&0) {
        return Err(DplError::TooFewIndices(2));
    }
    Ok(idx)
}

fn check_letters(indices: &[u32], i: u32, w: &[SignedIndex]) -> Result<()> {
    for x in w {
        if !indices.contains(&x.base) {
            return Err(DplError::UnknownIndex(x.base));
        }
    }
    for &j in indices {
        if j == i {
            continue;
        }
        let c = w.iter().filter(|x| x.base == j).count();
        if c != 4 {
            return Err(DplError::WrongMultiplicity { curve: i, letter: j, count: c });
        }
    }
    Ok(())
}

impl Arrangement {
    /// Validates side cycles of both types.
    pub fn validate(
        indices: &[u32],
        disk: BTreeMap<u32, Cycle>,
        crosscap: BTreeMap<u32, Cycle>,
    ) -> Result<Arrangement> {
        let idx = check_indices(indices)?;
        let mut blocks = BTreeMap::new();
        for &i in &idx {
            let d = disk.get(&i).ok_or(DplError::UnknownIndex(i))?;
            let m = crosscap.get(&i).ok_or(DplError::UnknownIndex(i))?;
            check_letters(&idx, i, d)?;
            check_letters(&idx, i, m)?;
            let s = slotted(i, d, true)?;
            let t = slotted(i, m, false)?;
            blocks.insert(i, find_blocks(i, &s, &t)?);
        }
        for k in disk.keys().chain(crosscap.keys()) {
            if !idx.contains(k) {
                return Err(DplError::UnknownIndex(*k));
            }
        }
        Self::assemble(None, idx, disk, crosscap, blocks)
    }

    /// Builds the simple arrangement with the given disk cycles.
    pub fn from_disk_only(indices: &[u32], disk: BTreeMap<u32, Cycle>) -> Result<Arrangement> {
        let idx = check_indices(indices)?;
        let mut crosscap = BTreeMap::new();
        for &i in &idx {
            let d = disk.get(&i).ok_or(DplError::UnknownIndex(i))?;
            check_letters(&idx, i, d)?;
            crosscap.insert(i, d.iter().map(|x| x.negate()).collect());
        }
        let a = Self::validate(&idx, disk, crosscap)?;
        if !a.is_simple() {
            return Err(DplError::NotSimple);
        }
        Ok(a)
    }

    /// Builds an arrangement from its block decompositions.
    pub fn from_blocks(indices: &[u32], blocks: BTreeMap<u32, Vec<Block>>) -> Result<Arrangement> {
        let idx = check_indices(indices)?;
        let mut disk = BTreeMap::new();
        let mut crosscap = BTreeMap::new();
        for &i in &idx {
            let bs = blocks.get(&i).ok_or(DplError::UnknownIndex(i))?;
            disk.insert(i, bs.iter().flatten().map(|&s| disk_letter(s)).collect());
            crosscap.insert(i, bs.iter().flat_map(|b| b.iter().rev()).map(|&s| crosscap_letter(s)).collect());
        }
        Self::validate(&idx, disk, crosscap)
    }

    fn assemble(
        name: Option<String>,
        indices: Vec<u32>,
        disk: BTreeMap<u32, Cycle>,
        crosscap: BTreeMap<u32, Cycle>,
        blocks: BTreeMap<u32, Vec<Block>>,
    ) -> Result<Arrangement> {
        let mut offset = BTreeMap::new();
        let mut total = 0usize;
        for (&i, bs) in &blocks {
            offset.insert(i, total);
            total += bs.len();
        }
        let mut lookup: HashMap<(u32, CrossingSymbol), usize> = HashMap::new();
        for (&i, bs) in &blocks {
            for (b, blk) in bs.iter().enumerate() {
                lookup.insert((i, blk[0]), b);
            }
        }
        let mut dsu = Dsu((0..total).collect());
        for (&i, bs) in &blocks {
            for (b, blk) in bs.iter().enumerate() {
                for p in 1..=blk.len() {
                    let (target, img) = rolled(blk, p)?;
                    let mismatch = || DplError::RollMismatch {
                        curve: i,
                        block: blk.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                        position: p,
                        target,
                    };
                    let tb = *lookup.get(&(target, img[0])).ok_or_else(mismatch)?;
                    if blocks[&target][tb] != img {
                        return Err(mismatch());
                    }
                    dsu.union(offset[&i] + b, offset[&target] + tb);
                }
            }
        }
        let mut comp: BTreeMap<usize, Vec<(u32, usize)>> = BTreeMap::new();
        for (&i, bs) in &blocks {
            for b in 0..bs.len() {
                let r = dsu.find(offset[&i] + b);
                comp.entry(r).or_default().push((i, b));
            }
        }
        let vertices: Vec<Vec<(u32, usize)>> = comp.into_values().collect();
        let mut vertex_of = HashMap::new();
        for (v, incs) in vertices.iter().enumerate() {
            for &(i, b) in incs {
                let blk = &blocks[&i][b];
                if blk.len() + 1 != incs.len() {
                    return Err(DplError::RollMismatch {
                        curve: i,
                        block: blk.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","),
                        position: 0,
                        target: i,
                    });
                }
                vertex_of.insert((i, b), v);
            }
        }
        Ok(Arrangement { name, indices, disk, crosscap, blocks, vertices, vertex_of })
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn indices(&self) -> &[u32] {
        &self.indices
    }

    pub fn n(&self) -> usize {
        self.indices.len()
    }

    pub fn disk(&self, i: u32) -> Result<&Cycle> {
        self.disk.get(&i).ok_or(DplError::UnknownIndex(i))
    }

    pub fn crosscap(&self, i: u32) -> Result<&Cycle> {
        self.crosscap.get(&i).ok_or(DplError::UnknownIndex(i))
    }

    pub fn disk_cycles(&self) -> &BTreeMap<u32, Cycle> {
        &self.disk
    }

    pub fn crosscap_cycles(&self) -> &BTreeMap<u32, Cycle> {
        &self.crosscap
    }

    /// Block decomposition of the slotted disk cycle of `i`, in cyclic order.
    pub fn blocks(&self, i: u32) -> Result<&Vec<Block>> {
        self.blocks.get(&i).ok_or(DplError::UnknownIndex(i))
    }

    pub fn all_blocks(&self) -> &BTreeMap<u32, Vec<Block>> {
        &self.blocks
    }

    /// Vertices as lists of (curve, block position).
    pub fn vertices(&self) -> &[Vec<(u32, usize)>] {
        &self.vertices
    }

    pub fn vertex_of(&self, curve: u32, block: usize) -> Option<usize> {
        self.vertex_of.get(&(curve, block)).copied()
    }

    /// Vertex identifiers met along curve `i`.
    pub fn node_cycle(&self, i: u32) -> Result<Vec<usize>> {
        let bs = self.blocks(i)?;
        Ok((0..bs.len()).map(|b| self.vertex_of[&(i, b)]).collect())
    }

    /// Crossing symbols of a vertex, one per unordered pair, carried by the smaller base.
    pub fn node_symbols(&self, v: usize) -> BTreeSet<CrossingSymbol> {
        let mut out = BTreeSet::new();
        for &(i, b) in &self.vertices[v] {
            for &s in &self.blocks[&i][b] {
                out.insert(s.normalized());
            }
        }
        out
    }

    pub fn is_simple(&self) -> bool {
        self.blocks.values().all(|bs| bs.iter().all(|b| b.len() == 1))
    }

    pub fn flags(&self) -> FlagComplex {
        FlagComplex::build(self)
    }

    pub fn genus(&self) -> u32 {
        self.flags().genus()
    }

    pub fn is_genus_one(&self) -> bool {
        self.genus() == 1
    }

    pub fn face_vector(&self) -> BTreeMap<usize, usize> {
        self.flags().face_vector()
    }

    /// Simple, with every crosscap side free of vertices.
    pub fn is_thin(&self) -> bool {
        if !self.is_simple() {
            return false;
        }
        let fc = self.flags();
        self.indices.iter().all(|&g| fc.vertices_in_crosscap_side(g).is_empty())
    }

    /// All vertices on `g` simple, and the four crossings with each other
    /// curve consecutive along `g`.
    pub fn is_martagon(&self, g: u32) -> Result<bool> {
        let bs = self.blocks(g)?;
        if bs.iter().any(|b| b.len() != 1) {
            return Ok(false);
        }
        let word: Vec<u32> = bs.iter().map(|b| b[0].other).collect();
        let l = word.len();
        let runs = (0..l).filter(|&p| word[p] != word[(p + l - 1) % l]).count();
        Ok(runs == self.n() - 1 || (self.n() == 2))
    }

    /// Restriction to the curves in `subset`.
    pub fn restriction(&self, subset: &[u32]) -> Result<Arrangement> {
        let mut j: Vec<u32> = subset.to_vec();
        j.sort_unstable();
        j.dedup();
        if j.len() < 2 {
            return Err(DplError::SubsetTooSmall);
        }
        for x in &j {
            if !self.indices.contains(x) {
                return Err(DplError::UnknownIndex(*x));
            }
        }
        let keep = |w: &Cycle| -> Cycle { w.iter().copied().filter(|x| j.contains(&x.base)).collect() };
        let disk = j.iter().map(|&i| (i, keep(&self.disk[&i]))).collect();
        let crosscap = j.iter().map(|&i| (i, keep(&self.crosscap[&i]))).collect();
        Self::validate(&j, disk, crosscap)
    }

    /// Relabels and reorients curves.
    pub fn act(&self, sigma: &SignedPermutation) -> Result<Arrangement> {
        let mut disk = BTreeMap::new();
        let mut crosscap = BTreeMap::new();
        for &i in &self.indices {
            let (ni, d) = crate::words::act(sigma, i, &self.disk[&i])?;
            let (_, m) = crate::words::act(sigma, i, &self.crosscap[&i])?;
            disk.insert(ni, d);
            crosscap.insert(ni, m);
        }
        let idx = sigma.image_bases();
        Self::validate(&idx, disk, crosscap)
    }

    /// Mirror image: every cycle reversed.
    pub fn mirror(&self) -> Result<Arrangement> {
        let rev = |m: &BTreeMap<u32, Cycle>| -> BTreeMap<u32, Cycle> {
            m.iter()
                .map(|(&i, w)| {
                    let mut w = w.clone();
                    w.reverse();
                    (i, w)
                })
                .collect()
        };
        Self::validate(&self.indices, rev(&self.disk), rev(&self.crosscap))
    }

    /// Canonical text identifying the indexed and oriented arrangement.
    pub fn indexed_key(&self) -> String {
        let mut s = String::new();
        for &i in &self.indices {
            let d: Vec<i64> = canonical_rotation(&self.disk[&i]).iter().map(|x| x.to_i64()).collect();
            let m: Vec<i64> = canonical_rotation(&self.crosscap[&i]).iter().map(|x| x.to_i64()).collect();
            let _ = write!(s, "{}:{:?}/{:?};", i, d, m);
        }
        s
    }

    /// Number of distinct indexed oriented arrangements obtained by
    /// reindexing and reorienting.
    pub fn orbit_count(&self) -> Result<usize> {
        let mut keys = BTreeSet::new();
        for g in SignedPermutation::all(&self.indices) {
            keys.insert(self.act(&g)?.indexed_key());
        }
        Ok(keys.len())
    }

    /// Text form accepted by [`Arrangement::parse`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if let Some(n) = &self.name {
            let _ = writeln!(s, "name: {n}");
        }
        let _ = writeln!(s, "indices: {}", join(&self.indices));
        for &i in &self.indices {
            let _ = writeln!(s, "D {}: {}", i, join(&self.disk[&i]));
        }
        for &i in &self.indices {
            let _ = writeln!(s, "M {}: {}", i, join(&self.crosscap[&i]));
        }
        s
    }

    pub fn summary(&self) -> Summary {
        let fc = self.flags();
        let conv = |m: &BTreeMap<u32, Cycle>| -> BTreeMap<u32, Vec<i64>> {
            m.iter().map(|(&i, w)| (i, w.iter().map(|x| x.to_i64()).collect())).collect()
        };
        let simple = self.is_simple();
        let thin = simple && self.indices.iter().all(|&g| fc.vertices_in_crosscap_side(g).is_empty());
        Summary {
            name: self.name.clone(),
            indices: self.indices.clone(),
            disk_cycles: conv(&self.disk),
            crosscap_cycles: conv(&self.crosscap),
            genus: fc.genus(),
            f_vector: fc.face_vector(),
            simple,
            thin,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.summary()).expect("serializable")
    }

    /// Parses the text format; crosscap cycles are derived when absent.
    pub fn parse(text: &str) -> Result<Arrangement> {
        let mut name = None;
        let mut indices: Option<Vec<u32>> = None;
        let mut disk = BTreeMap::new();
        let mut crosscap = BTreeMap::new();
        for (ln, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (head, body) = line
                .split_once(':')
                .ok_or_else(|| DplError::Parse(format!("line {}: missing `:`", ln + 1)))?;
            let head = head.trim();
            let body = body.trim();
            if head == "name" {
                name = Some(body.to_string());
            } else if head == "indices" {
                let v: std::result::Result<Vec<u32>, _> = body.split_whitespace().map(str::parse).collect();
                indices = Some(v.map_err(|_| DplError::Parse(format!("line {}: bad index list", ln + 1)))?);
            } else {
                let mut it = head.split_whitespace();
                let kind = it.next().unwrap_or("");
                let i: u32 = it
                    .next()
                    .and_then(|x| x.parse().ok())
                    .ok_or_else(|| DplError::Parse(format!("line {}: bad cycle header", ln + 1)))?;
                let w = parse_word(body)?;
                let target = match kind {
                    "D" => &mut disk,
                    "M" => &mut crosscap,
                    _ => return Err(DplError::Parse(format!("line {}: unknown key `{kind}`", ln + 1))),
                };
                if target.insert(i, w).is_some() {
                    return Err(DplError::Parse(format!("line {}: cycle {kind} {i} given twice", ln + 1)));
                }
            }
        }
        let indices = match indices {
            Some(v) => v,
            None => disk.keys().copied().collect(),
        };
        let a = if crosscap.is_empty() {
            Self::from_disk_only(&indices, disk)?
        } else {
            Self::validate(&indices, disk, crosscap)?
        };
        Ok(Arrangement { name, ..a })
    }

    /// The thin double of the cyclic pseudoline arrangement on `n` curves.
    pub fn cyclic_thin(n: u32) -> Result<Arrangement> {
        Self::cyclic_pattern(n, |j| [SignedIndex::pos(j), SignedIndex::pos(j)], |j| {
            [SignedIndex::neg(j), SignedIndex::neg(j)]
        })
    }

    /// The arrangement whose three-curve restrictions all have type C64.
    pub fn all_c64(n: u32) -> Result<Arrangement> {
        Self::cyclic_pattern(n, |j| [SignedIndex::pos(j), SignedIndex::neg(j)], |j| {
            [SignedIndex::neg(j), SignedIndex::pos(j)]
        })
    }

    fn cyclic_pattern(
        n: u32,
        first: impl Fn(u32) -> [SignedIndex; 2],
        second: impl Fn(u32) -> [SignedIndex; 2],
    ) -> Result<Arrangement> {
        if n < 2 {
            return Err(DplError::TooFewIndices(2));
        }
        let idx: Vec<u32> = (1..=n).collect();
        let mut disk = BTreeMap::new();
        for i in 1..=n {
            let order: Vec<u32> = (1..n).map(|d| (i - 1 + d) % n + 1).collect();
            let mut w = Vec::new();
            for &j in &order {
                w.extend(first(j));
            }
            for &j in &order {
                w.extend(second(j));
            }
            disk.insert(i, w);
        }
        Self::from_disk_only(&idx, disk)
    }
}

pub fn parse_word(body: &str) -> Result<Cycle> {
    body.split_whitespace()
        .map(|t| t.parse::<SignedIndex>().map_err(|_| DplError::MalformedWord(t.to_string())))
        .collect()
}

fn join<T: std::fmt::Display>(v: &[T]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// Number of circular shuffles of the elementary cycles on one curve of an
/// `n`-curve arrangement.
pub fn shuffle_count(n: usize) -> u128 {
    if n < 2 {
        return 0;
    }
    crate::words::count_cyclic_shuffles(n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(v: &[i64]) -> Cycle {
        v.iter().map(|&x| SignedIndex::from_i64(x).unwrap()).collect()
    }

    fn two_curves() -> Arrangement {
        let mut d = BTreeMap::new();
        d.insert(1, cyc(&[-2, -2, 2, 2]));
        d.insert(2, cyc(&[-1, -1, 1, 1]));
        Arrangement::from_disk_only(&[1, 2], d).unwrap()
    }

    #[test]
    fn two_curves_valid() {
        let a = two_curves();
        assert_eq!(a.crosscap(1).unwrap(), &cyc(&[2, 2, -2, -2]));
        assert_eq!(a.vertices().len(), 4);
        assert_eq!(a.genus(), 1);
    }

    #[test]
    fn wrong_multiplicity() {
        let mut d = BTreeMap::new();
        d.insert(1, cyc(&[-2, -2, 2]));
        d.insert(2, cyc(&[-1, -1, 1, 1]));
        assert!(matches!(Arrangement::from_disk_only(&[1, 2], d), Err(DplError::WrongMultiplicity { .. })));
    }

    #[test]
    fn bad_sign_pattern() {
        let mut d = BTreeMap::new();
        d.insert(1, cyc(&[-2, 2, -2, 2]));
        d.insert(2, cyc(&[-1, -1, 1, 1]));
        assert!(matches!(Arrangement::from_disk_only(&[1, 2], d), Err(DplError::BadSignPattern { .. })));
    }

    #[test]
    fn single_index_rejected() {
        let mut d = BTreeMap::new();
        d.insert(1, vec![]);
        assert!(Arrangement::from_disk_only(&[1], d).is_err());
    }

    #[test]
    fn thin_double() {
        let a = Arrangement::cyclic_thin(3).unwrap();
        assert!(a.is_thin());
        assert!(a.is_simple());
        assert_eq!(a.disk(1).unwrap(), &cyc(&[2, 2, 3, 3, -2, -2, -3, -3]));
        assert_eq!(Arrangement::cyclic_thin(2).unwrap(), two_curves());
    }

    #[test]
    fn text_round_trip() {
        let a = Arrangement::cyclic_thin(4).unwrap().with_name("thin4");
        let b = Arrangement::parse(&a.to_text()).unwrap();
        assert_eq!(a, b);
        assert_eq!(b.name(), Some("thin4"));
    }

    #[test]
    fn restriction_to_everything_is_identity() {
        let a = Arrangement::cyclic_thin(4).unwrap();
        assert_eq!(a.restriction(&[1, 2, 3, 4]).unwrap(), a);
        assert_eq!(a.restriction(&[1]).unwrap_err(), DplError::SubsetTooSmall);
    }

    #[test]
    fn shuffles() {
        assert_eq!(shuffle_count(3), 140);
        assert_eq!(shuffle_count(2), 1);
    }
}
