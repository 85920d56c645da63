//! The flag complex of an arrangement: three involutions on flags, faces,
//! genus, canonical keys and automorphisms.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;

use crate::arrangement::Arrangement;
use crate::words::{CrossingSymbol, Head};

/// A flag: an incidence of a curve with a vertex, a direction along the
/// curve (`outgoing`) and a side of the curve (`crosscap`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Flag {
    pub curve: u32,
    pub block: usize,
    pub outgoing: bool,
    pub crosscap: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KeyMode {
    Plain,
    IndexedOriented,
    Marked(usize),
}

#[derive(Clone, Debug)]
pub struct FlagComplex {
    inc_curve: Vec<u32>,
    inc_block: Vec<usize>,
    inc_vertex: Vec<usize>,
    inc_of: HashMap<(u32, usize), usize>,
    vertex_degree: Vec<usize>,
    s0: Vec<u32>,
    s1: Vec<u32>,
    s2: Vec<u32>,
    face_of: Vec<u32>,
    faces: Vec<Vec<u32>>,
    indexed: String,
}

fn flag_id(inc: usize, outgoing: bool, crosscap: bool) -> u32 {
    (inc * 4 + if outgoing { 0 } else { 2 } + if crosscap { 0 } else { 1 }) as u32
}

fn sign(b: bool) -> i8 {
    if b {
        1
    } else {
        -1
    }
}

impl FlagComplex {
    pub fn build(a: &Arrangement) -> FlagComplex {
        let mut inc_curve = Vec::new();
        let mut inc_block = Vec::new();
        let mut inc_vertex = Vec::new();
        let mut inc_of = HashMap::new();
        for (&i, bs) in a.all_blocks() {
            for b in 0..bs.len() {
                inc_of.insert((i, b), inc_curve.len());
                inc_curve.push(i);
                inc_block.push(b);
                inc_vertex.push(a.vertex_of(i, b).expect("vertex"));
            }
        }
        let ninc = inc_curve.len();
        let nf = ninc * 4;
        let vertex_degree: Vec<usize> = a.vertices().iter().map(|v| v.len()).collect();
        let mut s0 = vec![0u32; nf];
        let mut s1 = vec![0u32; nf];
        let mut s2 = vec![0u32; nf];
        for inc in 0..ninc {
            let i = inc_curve[inc];
            let b = inc_block[inc];
            let len = a.all_blocks()[&i].len();
            let next = inc_of[&(i, (b + 1) % len)];
            let prev = inc_of[&(i, (b + len - 1) % len)];
            // heads of this incidence keyed by the other curve
            let block = &a.all_blocks()[&i][b];
            let here: Vec<(u32, Head)> = block.iter().map(|s| (s.other, s.head())).collect();
            for o in [true, false] {
                for s in [true, false] {
                    let f = flag_id(inc, o, s) as usize;
                    s2[f] = flag_id(inc, o, !s);
                    s0[f] = flag_id(if o { next } else { prev }, !o, s);
                    s1[f] = sigma1(a, &inc_of, inc_vertex[inc], o, s, &here);
                }
            }
        }
        let mut fc = FlagComplex {
            inc_curve,
            inc_block,
            inc_vertex,
            inc_of,
            vertex_degree,
            s0,
            s1,
            s2,
            face_of: vec![u32::MAX; nf],
            faces: Vec::new(),
            indexed: a.indexed_key(),
        };
        fc.compute_faces();
        fc
    }

    fn compute_faces(&mut self) {
        let nf = self.s0.len();
        for f in 0..nf {
            if self.face_of[f] != u32::MAX {
                continue;
            }
            let id = self.faces.len() as u32;
            let mut orbit = Vec::new();
            let mut g = f as u32;
            let mut use0 = true;
            loop {
                self.face_of[g as usize] = id;
                orbit.push(g);
                g = if use0 { self.s0[g as usize] } else { self.s1[g as usize] };
                use0 = !use0;
                if g as usize == f && use0 {
                    break;
                }
            }
            orbit.sort_unstable();
            orbit.dedup();
            self.faces.push(orbit);
        }
    }

    pub fn flag_count(&self) -> usize {
        self.s0.len()
    }

    pub fn sigma0(&self, f: u32) -> u32 {
        self.s0[f as usize]
    }

    pub fn sigma1(&self, f: u32) -> u32 {
        self.s1[f as usize]
    }

    pub fn sigma2(&self, f: u32) -> u32 {
        self.s2[f as usize]
    }

    pub fn flag(&self, f: u32) -> Flag {
        let inc = f as usize / 4;
        Flag {
            curve: self.inc_curve[inc],
            block: self.inc_block[inc],
            outgoing: f & 2 == 0,
            crosscap: f & 1 == 0,
        }
    }

    pub fn flag_id(&self, flag: Flag) -> Option<u32> {
        let inc = *self.inc_of.get(&(flag.curve, flag.block))?;
        Some(flag_id(inc, flag.outgoing, flag.crosscap))
    }

    pub fn vertex(&self, f: u32) -> usize {
        self.inc_vertex[f as usize / 4]
    }

    pub fn curve(&self, f: u32) -> u32 {
        self.inc_curve[f as usize / 4]
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_degree.len()
    }

    pub fn edge_count(&self) -> usize {
        self.inc_curve.len()
    }

    pub fn face_count(&self) -> usize {
        self.faces.len()
    }

    pub fn faces(&self) -> &[Vec<u32>] {
        &self.faces
    }

    pub fn face_of(&self, f: u32) -> usize {
        self.face_of[f as usize] as usize
    }

    pub fn face_size(&self, face: usize) -> usize {
        self.faces[face].len() / 2
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.face_count() as i64
    }

    /// Non-orientable genus.
    pub fn genus(&self) -> u32 {
        (2 - self.euler_characteristic()) as u32
    }

    pub fn face_vector(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for face in 0..self.faces.len() {
            *m.entry(self.face_size(face)).or_insert(0) += 1;
        }
        m
    }

    /// Distinct curves bounding a face, with the face's vertices, in cyclic order.
    pub fn face_boundary(&self, face: usize) -> Vec<(u32, usize)> {
        let start = self.faces[face][0];
        let mut out = Vec::new();
        let mut g = start;
        loop {
            out.push((self.curve(g), self.vertex(g)));
            let h = self.s0[g as usize];
            g = self.s1[h as usize];
            if g == start {
                break;
            }
        }
        out
    }

    /// For every face, whether it lies in the crosscap side of curve `g`;
    /// `None` where the curve does not separate the face from itself.
    pub fn face_sides(&self, g: u32) -> Vec<Option<bool>> {
        let nfaces = self.faces.len();
        let mut parent: Vec<usize> = (0..nfaces).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            p[x] = r;
            r
        }
        for f in 0..self.flag_count() as u32 {
            if self.curve(f) != g {
                let a = find(&mut parent, self.face_of(f));
                let b = find(&mut parent, self.face_of(self.s2[f as usize]));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut label: HashMap<usize, Option<bool>> = HashMap::new();
        for f in 0..self.flag_count() as u32 {
            if self.curve(f) == g {
                let r = find(&mut parent, self.face_of(f));
                let side = self.flag(f).crosscap;
                let e = label.entry(r).or_insert(Some(side));
                if *e != Some(side) {
                    *e = None;
                }
            }
        }
        (0..nfaces)
            .map(|face| {
                let r = find(&mut parent, face);
                label.get(&r).copied().flatten()
            })
            .collect()
    }

    /// Vertices not on `g` that lie in its crosscap side.
    pub fn vertices_in_crosscap_side(&self, g: u32) -> Vec<usize> {
        let sides = self.face_sides(g);
        let mut on_g = vec![false; self.vertex_count()];
        for inc in 0..self.inc_curve.len() {
            if self.inc_curve[inc] == g {
                on_g[self.inc_vertex[inc]] = true;
            }
        }
        let mut out = Vec::new();
        let mut seen = vec![false; self.vertex_count()];
        for f in 0..self.flag_count() as u32 {
            let v = self.vertex(f);
            if on_g[v] || seen[v] {
                continue;
            }
            seen[v] = true;
            if sides[self.face_of(f)] == Some(true) {
                out.push(v);
            }
        }
        out.sort_unstable();
        out
    }

    /// Faces lying in the disk side of every curve.
    pub fn admissible_faces(&self) -> Vec<usize> {
        let curves: Vec<u32> = {
            let mut c = self.inc_curve.clone();
            c.sort_unstable();
            c.dedup();
            c
        };
        let all: Vec<Vec<Option<bool>>> = curves.iter().map(|&g| self.face_sides(g)).collect();
        (0..self.faces.len()).filter(|&face| all.iter().all(|s| s[face] == Some(false))).collect()
    }

    fn invariant(&self, f: u32) -> (usize, usize, usize) {
        (
            self.face_size(self.face_of(f)),
            self.face_size(self.face_of(self.s2[f as usize])),
            self.vertex_degree[self.vertex(f)],
        )
    }

    fn start_candidates(&self, within: Option<usize>) -> Vec<u32> {
        let pool: Vec<u32> = match within {
            Some(face) => self.faces[face].clone(),
            None => (0..self.flag_count() as u32).collect(),
        };
        let best = pool.iter().map(|&f| self.invariant(f)).min().expect("non-empty");
        pool.into_iter().filter(|&f| self.invariant(f) == best).collect()
    }

    /// BFS code from `start`; returns `None` as soon as it exceeds `bound`.
    fn code_from(&self, start: u32, bound: Option<&[u32]>, order: &mut Vec<u32>) -> Option<Vec<u32>> {
        let nf = self.flag_count();
        let mut label = vec![u32::MAX; nf];
        order.clear();
        order.push(start);
        label[start as usize] = 0;
        let mut code = Vec::with_capacity(3 * nf);
        let mut tight = bound.is_some();
        let mut idx = 0;
        while idx < order.len() {
            let f = order[idx] as usize;
            idx += 1;
            for g in [self.s0[f], self.s1[f], self.s2[f]] {
                if label[g as usize] == u32::MAX {
                    label[g as usize] = order.len() as u32;
                    order.push(g);
                }
                let l = label[g as usize];
                if tight {
                    let b = bound.expect("bound")[code.len()];
                    if l > b {
                        return None;
                    }
                    if l < b {
                        tight = false;
                    }
                }
                code.push(l);
            }
        }
        Some(code)
    }

    /// Minimal code and the BFS orders of all start flags attaining it.
    fn minimal(&self, within: Option<usize>) -> (Vec<u32>, Vec<Vec<u32>>) {
        let mut best: Option<Vec<u32>> = None;
        let mut orders: Vec<Vec<u32>> = Vec::new();
        let mut order = Vec::new();
        for f in self.start_candidates(within) {
            if let Some(code) = self.code_from(f, best.as_deref(), &mut order) {
                match &best {
                    Some(b) if *b == code => orders.push(order.clone()),
                    _ => {
                        best = Some(code);
                        orders = vec![order.clone()];
                    }
                }
            }
        }
        (best.expect("non-empty complex"), orders)
    }

    pub fn canonical_key(&self, mode: KeyMode) -> Vec<u8> {
        match mode {
            KeyMode::IndexedOriented => self.indexed.as_bytes().to_vec(),
            KeyMode::Plain => encode(&self.minimal(None).0),
            KeyMode::Marked(face) => {
                let mut k = encode(&self.minimal(Some(face)).0);
                k.push(b'*');
                k
            }
        }
    }

    /// All automorphisms as flag permutations (`within` restricts to those
    /// fixing a face).
    pub fn automorphisms(&self, within: Option<usize>) -> Vec<Vec<u32>> {
        let (_, orders) = self.minimal(within);
        let base = &orders[0];
        let mut pos = vec![0usize; self.flag_count()];
        for (l, &f) in base.iter().enumerate() {
            pos[f as usize] = l;
        }
        orders
            .iter()
            .map(|o| (0..self.flag_count()).map(|f| o[pos[f]]).collect())
            .collect()
    }

    pub fn automorphism_order(&self) -> usize {
        self.minimal(None).1.len()
    }

    /// Whether `phi` (fixing `face`) reverses the local orientation of the face.
    pub fn reverses_face(&self, face: usize, phi: &[u32]) -> bool {
        let start = self.faces[face][0];
        let target = phi[start as usize];
        let mut g = start;
        let mut step = 0usize;
        loop {
            if g == target {
                return step % 2 == 1;
            }
            g = if step.is_multiple_of(2) { self.s0[g as usize] } else { self.s1[g as usize] };
            step += 1;
            assert!(g != start || step % 2 == 1, "flag not in face");
        }
    }

    /// Graphviz text for the flag graph (edges labelled 0, 1, 2).
    pub fn flag_dot(&self) -> String {
        let mut s = String::from("graph flags {\n");
        for f in 0..self.flag_count() as u32 {
            let fl = self.flag(f);
            let _ = writeln!(
                s,
                "  f{} [label=\"{}@{} {}{}\"];",
                f,
                fl.curve,
                self.vertex(f),
                if fl.outgoing { '+' } else { '-' },
                if fl.crosscap { '+' } else { '-' }
            );
        }
        for (c, sig) in [&self.s0, &self.s1, &self.s2].iter().enumerate() {
            for f in 0..self.flag_count() as u32 {
                let g = sig[f as usize];
                if f < g {
                    let _ = writeln!(s, "  f{f} -- f{g} [label=\"{c}\"];");
                }
            }
        }
        s.push_str("}\n");
        s
    }

    /// Graphviz text for the dual graph: faces joined across edges.
    pub fn dual_dot(&self) -> String {
        let mut s = String::from("graph dual {\n");
        for face in 0..self.faces.len() {
            let _ = writeln!(s, "  c{} [label=\"{}\"];", face, self.face_size(face));
        }
        let mut seen = std::collections::BTreeSet::new();
        for f in 0..self.flag_count() as u32 {
            if !self.flag(f).outgoing {
                continue;
            }
            let a = self.face_of(f);
            let b = self.face_of(self.s2[f as usize]);
            let key = (f / 4, a.min(b), a.max(b));
            if seen.insert(key) {
                let _ = writeln!(s, "  c{} -- c{} [label=\"{}\"];", a, b, self.curve(f));
            }
        }
        s.push_str("}\n");
        s
    }
}

fn encode(code: &[u32]) -> Vec<u8> {
    let mut out = Vec::with_capacity(code.len() * 2);
    for &c in code {
        out.extend_from_slice(&(c as u16).to_be_bytes());
    }
    out
}

fn sigma1(
    a: &Arrangement,
    inc_of: &HashMap<(u32, usize), usize>,
    v: usize,
    o: bool,
    s: bool,
    here: &[(u32, Head)],
) -> u32 {
    let other_inc: HashMap<u32, usize> = a.vertices()[v].iter().map(|&(c, b)| (c, b)).collect();
    let head_of = |k: u32, j: u32| -> Head {
        let bk = other_inc[&k];
        let blk = &a.all_blocks()[&k][bk];
        blk.iter().find(|x| x.other == j).expect("pair at vertex").head()
    };
    // candidate on curve j reached directly from the flag
    let cand: Vec<(u32, bool, bool)> = here
        .iter()
        .map(|&(j, h)| {
            let (ai, aj) = (h.carrier.positive, h.other.positive);
            (j, (sign(s) * sign(aj)) > 0, (sign(o) * sign(ai)) > 0)
        })
        .collect();
    let chosen = if cand.len() == 1 {
        cand[0]
    } else {
        let minimal: Vec<(u32, bool, bool)> = cand
            .iter()
            .copied()
            .filter(|&(j, oj, sj)| {
                !cand.iter().any(|&(k, ok, sk)| {
                    if k == j {
                        return false;
                    }
                    let h = head_of(k, j);
                    let (bk, bj) = (h.carrier.positive, h.other.positive);
                    let img = (j, (sign(!sk) * sign(bj)) > 0, (sign(ok) * sign(bk)) > 0);
                    img == (j, oj, sj)
                })
            })
            .collect();
        assert_eq!(minimal.len(), 1, "dominance order must have a unique minimum");
        minimal[0]
    };
    let (j, oj, sj) = chosen;
    flag_id(inc_of[&(j, other_inc[&j])], oj, sj)
}

/// The image of `(symbol, o, s)` under σ₁ for the two-curve arrangement.
pub fn two_curve_sigma1(sym: CrossingSymbol, o: bool, s: bool) -> (CrossingSymbol, bool, bool) {
    let h = sym.head();
    let (ai, aj) = (h.carrier.positive, h.other.positive);
    (sym.swapped(), s == aj, o == ai)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn involutions() {
        let a = Arrangement::cyclic_thin(4).unwrap();
        let fc = a.flags();
        for f in 0..fc.flag_count() as u32 {
            for g in [fc.sigma0(f), fc.sigma1(f), fc.sigma2(f)] {
                assert_ne!(g, f);
            }
            assert_eq!(fc.sigma0(fc.sigma0(f)), f);
            assert_eq!(fc.sigma1(fc.sigma1(f)), f);
            assert_eq!(fc.sigma2(fc.sigma2(f)), f);
            assert_eq!(fc.sigma0(fc.sigma2(f)), fc.sigma2(fc.sigma0(f)));
        }
        assert_eq!(fc.flag_count(), 4 * fc.edge_count());
        let total: usize = fc.faces().iter().map(|x| x.len()).sum();
        assert_eq!(total, 4 * fc.edge_count());
    }

    #[test]
    fn thin_three() {
        let fc = Arrangement::cyclic_thin(3).unwrap().flags();
        assert_eq!(fc.genus(), 1);
        assert_eq!(fc.face_vector(), BTreeMap::from([(3, 4), (4, 9)]));
    }

    #[test]
    fn two_curve_group() {
        let fc = Arrangement::cyclic_thin(2).unwrap().flags();
        assert_eq!(fc.automorphism_order(), 8);
        assert_eq!(fc.genus(), 1);
    }
}
