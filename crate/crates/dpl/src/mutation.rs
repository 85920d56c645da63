//! Mutations (flip, split, merge), flip-graph enumeration with canonical
//! deduplication, and the projective and Möbius censuses.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::sync::atomic::{AtomicUsize, Ordering};

use dashmap::DashMap;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rayon::prelude::*;
use serde::Serialize;

use crate::arrangement::{Arrangement, Block};
use crate::error::{DplError, Result};
use crate::flags::{FlagComplex, KeyMode};

/// A triangular face: its three sides, as (curve, start block, end block).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub face: usize,
    pub sides: [(u32, usize, usize); 3],
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Side {
    Disk,
    Crosscap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MutationMove {
    /// Invert a triangle of a simple arrangement.
    Flip { face: usize },
    /// Move `curve` off the vertex `vertex`, towards `side` of it.
    Split { vertex: usize, curve: u32, side: Side },
    /// Collapse a triangle onto its corner opposite to the side on `curve`.
    Merge { face: usize, curve: u32 },
}

/// Triangular faces with three distinct curves and simple corners.
pub fn triangles(a: &Arrangement) -> Vec<Triangle> {
    triangles_in(a, &a.flags())
}

fn triangles_in(a: &Arrangement, fc: &FlagComplex) -> Vec<Triangle> {
    let mut out = Vec::new();
    for face in 0..fc.face_count() {
        if fc.face_size(face) != 3 {
            continue;
        }
        let start = fc.faces()[face][0];
        let mut sides = Vec::new();
        let mut g = start;
        loop {
            let h = fc.sigma0(g);
            let fg = fc.flag(g);
            let fh = fc.flag(h);
            sides.push((fg.curve, fg.block, fh.block, fc.vertex(g)));
            g = fc.sigma1(h);
            if g == start {
                break;
            }
        }
        let curves: BTreeSet<u32> = sides.iter().map(|s| s.0).collect();
        let simple_corners = sides.iter().all(|s| a.vertices()[s.3].len() == 2);
        if curves.len() == 3 && simple_corners {
            let mut s: Vec<(u32, usize, usize)> = sides.iter().map(|x| (x.0, x.1, x.2)).collect();
            s.sort_unstable();
            out.push(Triangle { face, sides: [s[0], s[1], s[2]] });
        }
    }
    out
}

/// Triangle inversion on a simple arrangement.
pub fn flip(a: &Arrangement, face: usize) -> Result<Arrangement> {
    if !a.is_simple() {
        return Err(DplError::NotSimple);
    }
    let t = triangles(a)
        .into_iter()
        .find(|t| t.face == face)
        .ok_or_else(|| DplError::IllegalLocus(format!("face {face} is not a triangle")))?;
    let mut blocks = a.all_blocks().clone();
    for &(c, b1, b2) in &t.sides {
        blocks.get_mut(&c).expect("curve").swap(b1, b2);
    }
    Arrangement::from_blocks(a.indices(), blocks)
}

/// All arrangements reachable by one flip.
pub fn flips(a: &Arrangement) -> Vec<Arrangement> {
    let fc = a.flags();
    triangles_in(a, &fc).into_iter().filter_map(|t| flip(a, t.face).ok()).collect()
}

/// Moves `curve` off a multiple vertex.
pub fn split(a: &Arrangement, vertex: usize, curve: u32, side: Side) -> Result<Arrangement> {
    let incs = a
        .vertices()
        .get(vertex)
        .ok_or_else(|| DplError::IllegalLocus(format!("no vertex {vertex}")))?;
    if incs.len() < 3 {
        return Err(DplError::IllegalLocus(format!("vertex {vertex} is simple")));
    }
    let cb = incs
        .iter()
        .find(|&&(c, _)| c == curve)
        .map(|&(_, b)| b)
        .ok_or_else(|| DplError::IllegalLocus(format!("curve {curve} misses vertex {vertex}")))?;
    let mut blocks = a.all_blocks().clone();
    let disk = side == Side::Disk;
    // the moving curve: its block breaks into singletons
    {
        let bs = blocks.get_mut(&curve).expect("curve");
        let mut singles: Vec<Block> = bs[cb].iter().map(|&x| vec![x]).collect();
        if !disk {
            singles.reverse();
        }
        bs.splice(cb..=cb, singles);
    }
    for &(al, bl) in incs {
        if al == curve {
            continue;
        }
        let bs = blocks.get_mut(&al).expect("curve");
        let blk = bs[bl].clone();
        let y = *blk.iter().find(|x| x.other == curve).expect("crossing with moving curve");
        let rest: Block = blk.iter().copied().filter(|x| x.other != curve).collect();
        // sign of the moving curve's letter seen from al
        let lambda = !y.head().carrier.positive;
        let after = lambda == disk;
        let repl = if after { vec![rest, vec![y]] } else { vec![vec![y], rest] };
        bs.splice(bl..=bl, repl);
    }
    Arrangement::from_blocks(a.indices(), blocks)
}

/// All single splits of a non-simple arrangement.
pub fn splits(a: &Arrangement) -> Vec<(MutationMove, Arrangement)> {
    let mut out = Vec::new();
    for (v, incs) in a.vertices().iter().enumerate() {
        if incs.len() < 3 {
            continue;
        }
        for &(c, _) in incs {
            for side in [Side::Disk, Side::Crosscap] {
                if let Ok(b) = split(a, v, c, side) {
                    out.push((MutationMove::Split { vertex: v, curve: c, side }, b));
                }
            }
        }
    }
    out
}

fn same_arrangement(a: &Arrangement, b: &Arrangement) -> bool {
    a.indexed_key() == b.indexed_key()
}

/// Collapses a triangle with simple corners onto the corner opposite to its
/// side on `curve`, creating a triple point.
pub fn merge(a: &Arrangement, face: usize, curve: u32) -> Result<Arrangement> {
    let fc = a.flags();
    let t = triangles_in(a, &fc)
        .into_iter()
        .find(|t| t.face == face)
        .ok_or_else(|| DplError::IllegalLocus(format!("face {face} is not a triangle")))?;
    let cs = *t
        .sides
        .iter()
        .find(|s| s.0 == curve)
        .ok_or_else(|| DplError::IllegalLocus(format!("curve {curve} does not bound face {face}")))?;
    let others: Vec<(u32, usize, usize)> = t.sides.iter().copied().filter(|s| s.0 != curve).collect();
    let (pa, pb) = (cs.1, cs.2);
    let sym_c = |b: usize| a.all_blocks()[&curve][b][0];
    let (s1, s2) = (sym_c(pa), sym_c(pb));
    // on each other curve, the side touches the corner with `curve` and the far corner
    let mut plans = Vec::new();
    for &(al, b1, b2) in &others {
        let bs = &a.all_blocks()[&al];
        let (near, far) = if bs[b1][0].other == curve { (b1, b2) } else { (b2, b1) };
        plans.push((al, near, far));
    }
    let mut found = Vec::new();
    for mask in 0..8u32 {
        let mut blocks = a.all_blocks().clone();
        let c_block: Block = if mask & 1 == 0 { vec![s1, s2] } else { vec![s2, s1] };
        set_merged(blocks.get_mut(&curve).expect("curve"), pa, pb, c_block);
        for (k, &(al, near, far)) in plans.iter().enumerate() {
            let bs = blocks.get_mut(&al).expect("curve");
            let y = bs[near][0];
            let r = bs[far][0];
            let nb = if mask & (2 << k) == 0 { vec![y, r] } else { vec![r, y] };
            set_merged(bs, near, far, nb);
        }
        if let Ok(m) = Arrangement::from_blocks(a.indices(), blocks) {
            let pos = m.all_blocks()[&curve].iter().position(|b| b.contains(&s1));
            if let Some(v) = pos.and_then(|b| m.vertex_of(curve, b)) {
                for side in [Side::Disk, Side::Crosscap] {
                    if let Ok(back) = split(&m, v, curve, side) {
                        if same_arrangement(&back, a) {
                            found.push(m.clone());
                        }
                    }
                }
            }
        }
    }
    found.dedup_by(|x, y| same_arrangement(x, y));
    match found.len() {
        0 => Err(DplError::IllegalLocus(format!("face {face} cannot be merged along curve {curve}"))),
        _ => Ok(found.swap_remove(0)),
    }
}

fn set_merged(bs: &mut Vec<Block>, p: usize, q: usize, merged: Block) {
    let (lo, hi) = (p.min(q), p.max(q));
    let len = bs.len();
    if hi == lo + 1 {
        bs.splice(lo..=hi, [merged]);
    } else {
        // adjacent across the wrap-around
        debug_assert!(lo == 0 && hi == len - 1);
        bs.remove(hi);
        bs[0] = merged;
    }
}

/// All single merges.
pub fn merges(a: &Arrangement) -> Vec<(MutationMove, Arrangement)> {
    let mut out = Vec::new();
    let fc = a.flags();
    for t in triangles_in(a, &fc) {
        for &(c, _, _) in &t.sides {
            // the opposite corner must be simple for the merge to create a triple point
            if let Ok(m) = merge(a, t.face, c) {
                out.push((MutationMove::Merge { face: t.face, curve: c }, m));
            }
        }
    }
    out
}

pub fn apply(a: &Arrangement, mv: &MutationMove) -> Result<Arrangement> {
    match *mv {
        MutationMove::Flip { face } => flip(a, face),
        MutationMove::Split { vertex, curve, side } => split(a, vertex, curve, side),
        MutationMove::Merge { face, curve } => merge(a, face, curve),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Setting {
    Projective,
    Moebius,
}

#[derive(Clone, Debug)]
pub struct EnumerateOptions {
    pub simple_only: bool,
    pub state_limit: Option<usize>,
    /// Shuffles the frontier with this seed (for order-independence checks).
    pub shuffle_seed: Option<u64>,
}

impl Default for EnumerateOptions {
    fn default() -> Self {
        EnumerateOptions { simple_only: true, state_limit: None, shuffle_seed: None }
    }
}

/// Isomorphism classes found by a traversal, keyed by canonical key.
#[derive(Clone, Debug)]
pub struct ClassSet {
    pub classes: BTreeMap<Vec<u8>, Arrangement>,
    /// Class adjacency by single moves.
    pub edges: BTreeSet<(Vec<u8>, Vec<u8>)>,
    pub complete: bool,
}

impl ClassSet {
    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn keys(&self) -> BTreeSet<Vec<u8>> {
        self.classes.keys().cloned().collect()
    }
}

pub fn plain_key(a: &Arrangement) -> Vec<u8> {
    a.flags().canonical_key(KeyMode::Plain)
}

fn neighbours(a: &Arrangement, simple_only: bool) -> Vec<Arrangement> {
    if simple_only {
        flips(a)
    } else {
        let mut v: Vec<Arrangement> = merges(a).into_iter().map(|x| x.1).collect();
        v.extend(splits(a).into_iter().map(|x| x.1));
        v
    }
}

/// Breadth-first traversal of the mutation graph from `seed`.
pub fn explore(seed: Arrangement, opts: &EnumerateOptions) -> ClassSet {
    let seen: DashMap<Vec<u8>, Arrangement> = DashMap::new();
    let edges: DashMap<(Vec<u8>, Vec<u8>), ()> = DashMap::new();
    let count = AtomicUsize::new(0);
    let k0 = plain_key(&seed);
    seen.insert(k0.clone(), seed.clone());
    count.fetch_add(1, Ordering::SeqCst);
    let mut frontier = vec![(k0, seed)];
    let mut rng = opts.shuffle_seed.map(rand::rngs::StdRng::seed_from_u64);
    let mut complete = true;
    while !frontier.is_empty() {
        if let Some(r) = rng.as_mut() {
            frontier.shuffle(r);
        }
        let limit_hit = AtomicUsize::new(0);
        let next: Vec<(Vec<u8>, Arrangement)> = frontier
            .par_iter()
            .flat_map_iter(|(k, a)| {
                let mut out = Vec::new();
                for b in neighbours(a, opts.simple_only) {
                    if b.genus() != 1 {
                        continue;
                    }
                    let kb = plain_key(&b);
                    let pair = if *k <= kb { (k.clone(), kb.clone()) } else { (kb.clone(), k.clone()) };
                    edges.insert(pair, ());
                    if seen.contains_key(&kb) {
                        continue;
                    }
                    if let Some(lim) = opts.state_limit {
                        if count.load(Ordering::SeqCst) >= lim {
                            limit_hit.store(1, Ordering::SeqCst);
                            continue;
                        }
                    }
                    if let dashmap::mapref::entry::Entry::Vacant(e) = seen.entry(kb.clone()) {
                        e.insert(b.clone());
                        count.fetch_add(1, Ordering::SeqCst);
                        out.push((kb, b));
                    }
                }
                out
            })
            .collect();
        if limit_hit.load(Ordering::SeqCst) == 1 {
            complete = false;
        }
        let mut next = next;
        next.sort_by(|x, y| x.0.cmp(&y.0));
        frontier = next;
    }
    ClassSet {
        classes: seen.into_iter().collect(),
        edges: edges.into_iter().map(|(k, _)| k).collect(),
        complete,
    }
}

/// Whether the classes form one connected component of the recorded move graph.
pub fn connectivity_check(set: &ClassSet) -> bool {
    if set.classes.is_empty() {
        return true;
    }
    let mut adj: HashMap<&Vec<u8>, Vec<&Vec<u8>>> = HashMap::new();
    for (a, b) in &set.edges {
        if set.classes.contains_key(a) && set.classes.contains_key(b) {
            adj.entry(a).or_default().push(b);
            adj.entry(b).or_default().push(a);
        }
    }
    let start = set.classes.keys().next().expect("non-empty");
    let mut seen: BTreeSet<&Vec<u8>> = BTreeSet::from([start]);
    let mut q = VecDeque::from([start]);
    while let Some(x) = q.pop_front() {
        for &y in adj.get(x).map(|v| v.as_slice()).unwrap_or(&[]) {
            if seen.insert(y) {
                q.push_back(y);
            }
        }
    }
    seen.len() == set.classes.len()
}

/// If a vertex lies in the crosscap side of `g`, some triangle in that side
/// has a side on `g`.
pub fn pumping_check(a: &Arrangement, g: u32) -> Result<bool> {
    if !a.indices().contains(&g) {
        return Err(DplError::UnknownIndex(g));
    }
    let fc = a.flags();
    if fc.vertices_in_crosscap_side(g).is_empty() {
        return Ok(true);
    }
    let sides = fc.face_sides(g);
    Ok(triangles_in(a, &fc)
        .iter()
        .any(|t| sides[t.face] == Some(true) && t.sides.iter().any(|s| s.0 == g)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Default)]
pub struct CensusRow {
    pub n: usize,
    pub a: u64,
    pub b: u64,
    pub c: u64,
    pub d: u64,
}

/// Möbius counts contributed by one projective class.
pub fn moebius_counts(a: &Arrangement) -> CensusRow {
    let fc = a.flags();
    let n = a.n();
    let adm = fc.admissible_faces();
    let mut row = CensusRow { n, ..Default::default() };
    if adm.is_empty() {
        return row;
    }
    row.d = 1;
    let auts = fc.automorphisms(None);
    let fact: u64 = (1..=n as u64).product();
    let mut done: BTreeSet<usize> = BTreeSet::new();
    for &face in &adm {
        if done.contains(&face) {
            continue;
        }
        let x0 = fc.faces()[face][0];
        let mut stab = Vec::new();
        for phi in &auts {
            let img = fc.face_of(phi[x0 as usize]);
            done.insert(img);
            if img == face {
                stab.push(phi);
            }
        }
        row.c += 1;
        let mut image: BTreeSet<(Vec<u32>, bool)> = BTreeSet::new();
        for phi in &stab {
            image.insert((curve_permutation(&fc, phi), fc.reverses_face(face, phi)));
        }
        row.a += 2 * fact / image.len() as u64;
        row.b += if image.iter().any(|x| x.1) { 1 } else { 2 };
    }
    row
}

fn curve_permutation(fc: &FlagComplex, phi: &[u32]) -> Vec<u32> {
    let mut m: BTreeMap<u32, u32> = BTreeMap::new();
    for f in 0..fc.flag_count() as u32 {
        m.insert(fc.curve(f), fc.curve(phi[f as usize]));
    }
    m.into_values().collect()
}

/// Census result of an enumeration.
#[derive(Clone, Debug)]
pub struct Census {
    pub classes: ClassSet,
    pub row: CensusRow,
}

/// Traverses the mutation graph from the cyclic thin arrangement and tallies
/// the census row; stops early at the state limit and marks the result incomplete.
pub fn census(n: u32, setting: Setting, opts: &EnumerateOptions) -> Result<Census> {
    let seed = Arrangement::cyclic_thin(n)?;
    let classes = explore(seed, opts);
    let mut row = CensusRow { n: n as usize, ..Default::default() };
    match setting {
        Setting::Projective => row.d = classes.len() as u64,
        Setting::Moebius => {
            let rows: Vec<CensusRow> = classes.classes.par_iter().map(|(_, a)| moebius_counts(a)).collect();
            for r in rows {
                row.a += r.a;
                row.b += r.b;
                row.c += r.c;
                row.d += r.d;
            }
        }
    }
    Ok(Census { classes, row })
}

/// Like [`census`], but an incomplete traversal is an error.
pub fn enumerate(n: u32, setting: Setting, opts: &EnumerateOptions) -> Result<Census> {
    let c = census(n, setting, opts)?;
    if !c.classes.complete {
        return Err(DplError::ResourceLimit(opts.state_limit.unwrap_or(0)));
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flip_leaves_the_thin_class() {
        let a = Arrangement::cyclic_thin(3).unwrap();
        let k = plain_key(&a);
        let fl = flips(&a);
        assert!(!fl.is_empty());
        for b in &fl {
            assert_eq!(b.genus(), 1);
            assert_ne!(plain_key(b), k);
            assert!(flips(b).iter().any(|c| c == &a), "a flip is undone by a flip");
        }
    }

    #[test]
    fn flip_needs_a_triangle() {
        let a = Arrangement::cyclic_thin(3).unwrap();
        let fc = a.flags();
        let quad = (0..fc.face_count()).find(|&f| fc.face_size(f) == 4).unwrap();
        assert!(matches!(flip(&a, quad), Err(DplError::IllegalLocus(_))));
    }

    #[test]
    fn three_curve_projective_census() {
        let set = explore(Arrangement::cyclic_thin(3).unwrap(), &EnumerateOptions::default());
        assert!(set.complete);
        assert_eq!(set.len(), 13);
        assert!(connectivity_check(&set));
    }

    #[test]
    fn two_curve_moebius_row() {
        let c = enumerate(2, Setting::Moebius, &EnumerateOptions::default()).unwrap();
        assert_eq!((c.row.a, c.row.b, c.row.c, c.row.d), (1, 1, 1, 1));
    }

    #[test]
    fn state_limit_is_an_error() {
        let opts = EnumerateOptions { state_limit: Some(2), ..Default::default() };
        assert!(matches!(enumerate(3, Setting::Projective, &opts), Err(DplError::ResourceLimit(2))));
        let partial = census(3, Setting::Projective, &opts).unwrap();
        assert!(!partial.classes.complete);
    }

    #[test]
    fn merge_then_split_back() {
        let a = Arrangement::cyclic_thin(3).unwrap();
        let ms = merges(&a);
        assert!(!ms.is_empty());
        for (_, m) in ms {
            assert!(!m.is_simple());
            assert!(splits(&m).iter().any(|(_, b)| b == &a));
        }
    }

    #[test]
    fn split_rejects_simple_vertex() {
        let a = Arrangement::cyclic_thin(3).unwrap();
        assert!(split(&a, 0, 1, Side::Disk).is_err());
    }

    #[test]
    fn pumping_on_thin() {
        let a = Arrangement::cyclic_thin(4).unwrap();
        for &g in a.indices() {
            assert!(pumping_check(&a, g).unwrap());
        }
        assert!(pumping_check(&a, 9).is_err());
    }
}
