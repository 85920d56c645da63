//! Signed indices, crossing symbols, circular words, the node product and the
//! roll operator.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum WordError {
    #[error("carrier bases differ: {0} vs {1}")]
    CarrierMismatch(u32, u32),
    #[error("co-indices {0} and {1} share a base")]
    SameCoIndex(SignedIndex, SignedIndex),
    #[error("roll position {0} out of range 1..={1}")]
    PositionOutOfRange(usize, usize),
    #[error("empty block")]
    EmptyBlock,
    #[error("bad signed index `{0}`")]
    BadIndex(String),
    #[error("pair needs two distinct bases, got {0} and {1}")]
    DegeneratePair(SignedIndex, SignedIndex),
    #[error("slot {0} outside 1..=4")]
    BadSlot(u8),
    #[error("index {0} not in the permutation domain")]
    OutsideDomain(u32),
    #[error("not a bijection on the signed indices")]
    NotBijective,
}

/// An index with a sign; `positive == false` is the overlined index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedIndex {
    pub base: u32,
    pub positive: bool,
}

impl SignedIndex {
    pub const fn new(base: u32, positive: bool) -> Self {
        SignedIndex { base, positive }
    }

    pub const fn pos(base: u32) -> Self {
        SignedIndex { base, positive: true }
    }

    pub const fn neg(base: u32) -> Self {
        SignedIndex { base, positive: false }
    }

    pub fn negate(self) -> Self {
        SignedIndex { base: self.base, positive: !self.positive }
    }

    /// Multiplies the sign by `s` (true is +).
    pub fn times(self, s: bool) -> Self {
        SignedIndex { base: self.base, positive: self.positive == s }
    }

    pub fn to_i64(self) -> i64 {
        if self.positive {
            self.base as i64
        } else {
            -(self.base as i64)
        }
    }

    pub fn from_i64(v: i64) -> Option<Self> {
        if v == 0 || v.unsigned_abs() > u32::MAX as u64 {
            return None;
        }
        Some(SignedIndex { base: v.unsigned_abs() as u32, positive: v > 0 })
    }

    /// Overline notation, e.g. `2̄`.
    pub fn overlined(self) -> String {
        if self.positive {
            self.base.to_string()
        } else {
            let mut s = String::new();
            for c in self.base.to_string().chars() {
                s.push(c);
                s.push('\u{0304}');
            }
            s
        }
    }
}

impl fmt::Display for SignedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.positive {
            write!(f, "{}", self.base)
        } else {
            write!(f, "-{}", self.base)
        }
    }
}

impl FromStr for SignedIndex {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let (neg, body) = if let Some(r) = t.strip_prefix('-') {
            (true, r)
        } else if let Some(r) = t.strip_prefix('~') {
            (true, r)
        } else if let Some(r) = t.strip_suffix('\u{0304}') {
            (true, r)
        } else {
            (false, t)
        };
        let base: u32 = body.parse().map_err(|_| WordError::BadIndex(s.to_string()))?;
        if base == 0 {
            return Err(WordError::BadIndex(s.to_string()));
        }
        Ok(SignedIndex { base, positive: !neg })
    }
}

/// Unordered pair of signed indices with distinct bases, stored base-ascending.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPair {
    lo: SignedIndex,
    hi: SignedIndex,
}

impl SignedPair {
    pub fn new(a: SignedIndex, b: SignedIndex) -> Result<Self, WordError> {
        match a.base.cmp(&b.base) {
            Ordering::Less => Ok(SignedPair { lo: a, hi: b }),
            Ordering::Greater => Ok(SignedPair { lo: b, hi: a }),
            Ordering::Equal => Err(WordError::DegeneratePair(a, b)),
        }
    }

    pub fn members(self) -> (SignedIndex, SignedIndex) {
        (self.lo, self.hi)
    }

    /// The member with the given base.
    pub fn get(self, base: u32) -> Option<SignedIndex> {
        if self.lo.base == base {
            Some(self.lo)
        } else if self.hi.base == base {
            Some(self.hi)
        } else {
            None
        }
    }

    /// The member whose base differs from `base`.
    pub fn other(self, base: u32) -> Option<SignedIndex> {
        if self.lo.base == base {
            Some(self.hi)
        } else if self.hi.base == base {
            Some(self.lo)
        } else {
            None
        }
    }

    /// Reads the pair as a head carried by `base`.
    pub fn head(self, base: u32) -> Option<Head> {
        Some(Head { carrier: self.get(base)?, other: self.other(base)? })
    }
}

impl fmt::Display for SignedPair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

/// Signs (carrier, other) of the signed pair named by slots 1..4.
pub const SLOT_SIGNS: [(bool, bool); 4] = [(true, true), (false, true), (true, false), (false, false)];

/// Slot of the same point read from the other curve.
pub const SLOT_SWAP: [u8; 4] = [1, 3, 2, 4];

pub fn slot_from_signs(carrier: bool, other: bool) -> u8 {
    match (carrier, other) {
        (true, true) => 1,
        (false, true) => 2,
        (true, false) => 3,
        (false, false) => 4,
    }
}

/// Sign of the letter written for `slot` in a disk-type cycle.
pub fn disk_letter_positive(slot: u8) -> bool {
    slot >= 3
}

/// Sign of the letter written for `slot` in a crosscap-type cycle.
pub fn crosscap_letter_positive(slot: u8) -> bool {
    slot <= 2
}

/// The crossing symbol `ij_k`: the k-th intersection of curves i and j met
/// along curve i.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CrossingSymbol {
    pub carrier: u32,
    pub other: u32,
    pub slot: u8,
}

impl CrossingSymbol {
    pub fn new(carrier: u32, other: u32, slot: u8) -> Result<Self, WordError> {
        if !(1..=4).contains(&slot) {
            return Err(WordError::BadSlot(slot));
        }
        if carrier == other {
            return Err(WordError::DegeneratePair(SignedIndex::pos(carrier), SignedIndex::pos(other)));
        }
        Ok(CrossingSymbol { carrier, other, slot })
    }

    pub fn head(self) -> Head {
        let (a, b) = SLOT_SIGNS[(self.slot - 1) as usize];
        Head { carrier: SignedIndex::new(self.carrier, a), other: SignedIndex::new(self.other, b) }
    }

    pub fn pair(self) -> SignedPair {
        self.head().pair()
    }

    /// The same point named from the other curve.
    pub fn swapped(self) -> CrossingSymbol {
        CrossingSymbol { carrier: self.other, other: self.carrier, slot: SLOT_SWAP[(self.slot - 1) as usize] }
    }

    /// Form with the smaller base as carrier.
    pub fn normalized(self) -> CrossingSymbol {
        if self.carrier < self.other {
            self
        } else {
            self.swapped()
        }
    }

    pub fn from_pair(pair: SignedPair, carrier: u32) -> Option<CrossingSymbol> {
        pair.head(carrier).map(Head::symbol)
    }
}

impl fmt::Display for CrossingSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}_{}", self.carrier, self.other, self.slot)
    }
}

/// A prime-factor entry `{i j}`: signed carrier and signed co-index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Head {
    pub carrier: SignedIndex,
    pub other: SignedIndex,
}

impl Head {
    pub fn new(carrier: SignedIndex, other: SignedIndex) -> Self {
        Head { carrier, other }
    }

    pub fn pair(self) -> SignedPair {
        SignedPair { lo: self.carrier, hi: self.other }.sorted()
    }

    pub fn symbol(self) -> CrossingSymbol {
        CrossingSymbol {
            carrier: self.carrier.base,
            other: self.other.base,
            slot: slot_from_signs(self.carrier.positive, self.other.positive),
        }
    }
}

impl SignedPair {
    fn sorted(self) -> SignedPair {
        if self.lo.base <= self.hi.base {
            self
        } else {
            SignedPair { lo: self.hi, hi: self.lo }
        }
    }
}

impl fmt::Display for Head {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{} {}}}", self.carrier, self.other)
    }
}

/// The node product of two entries of a prime factor with a common carrier.
///
/// `{εi a·j} ⊗ {ε'i b·j*} = {ε'a·j, -εb·j*}`; equal arguments give their own pair.
pub fn otimes(a: Head, b: Head) -> Result<SignedPair, WordError> {
    if a.carrier.base != b.carrier.base {
        return Err(WordError::CarrierMismatch(a.carrier.base, b.carrier.base));
    }
    if a == b {
        return Ok(a.pair());
    }
    if a.other.base == b.other.base {
        return Err(WordError::SameCoIndex(a.other, b.other));
    }
    let eps = a.carrier.positive;
    let eps2 = b.carrier.positive;
    SignedPair::new(a.other.times(eps2), b.other.times(!eps))
}

/// Rolls a prime factor to its `position`-th entry (1-based).
///
/// The result is read on the curve of that entry's co-index, as heads carried
/// by that base; it is to be compared with a block of the co-index's cycle,
/// reversed once more when the co-index itself is negative.
pub fn roll(block: &[Head], position: usize) -> Result<Vec<Head>, WordError> {
    let k = block.len();
    if k == 0 {
        return Err(WordError::EmptyBlock);
    }
    if position == 0 || position > k {
        return Err(WordError::PositionOutOfRange(position, k));
    }
    let p = position - 1;
    let target = block[p].other.base;
    let alpha = |q: usize| -> Result<Head, WordError> {
        let pair = match q.cmp(&p) {
            Ordering::Greater => otimes(block[p], block[q])?,
            Ordering::Equal => block[p].pair(),
            Ordering::Less => otimes(block[q], block[p])?,
        };
        Ok(pair.head(target).expect("product contains the target base"))
    };
    let mut out = Vec::with_capacity(k);
    for q in p + 1..k {
        out.push(alpha(q)?);
    }
    out.push(alpha(p)?);
    for q in 0..p {
        out.push(alpha(q)?);
    }
    if block[p].carrier.positive {
        out.reverse();
    }
    Ok(out)
}

/// Index of the lexicographically least rotation.
pub fn least_rotation<T: Ord>(w: &[T]) -> usize {
    let n = w.len();
    if n == 0 {
        return 0;
    }
    // Booth-style two-pointer scan.
    let (mut i, mut j, mut k) = (0usize, 1usize, 0usize);
    while i < n && j < n && k < n {
        let a = &w[(i + k) % n];
        let b = &w[(j + k) % n];
        match a.cmp(b) {
            Ordering::Equal => k += 1,
            Ordering::Greater => {
                i += k + 1;
                if i <= j {
                    i = j + 1;
                }
                k = 0;
            }
            Ordering::Less => {
                j += k + 1;
                if j <= i {
                    j = i + 1;
                }
                k = 0;
            }
        }
    }
    i.min(j)
}

pub fn rotate_to<T: Clone>(w: &[T], start: usize) -> Vec<T> {
    let n = w.len();
    (0..n).map(|t| w[(start + t) % n].clone()).collect()
}

pub fn canonical_rotation<T: Ord + Clone>(w: &[T]) -> Vec<T> {
    rotate_to(w, least_rotation(w))
}

/// Equality up to rotation.
pub fn rotation_eq<T: Ord + Clone>(a: &[T], b: &[T]) -> bool {
    a.len() == b.len() && canonical_rotation(a) == canonical_rotation(b)
}

/// A word taken modulo rotation.
#[derive(Clone, Debug)]
pub struct CircularWord<T> {
    letters: Vec<T>,
}

impl<T: Ord + Clone> CircularWord<T> {
    pub fn new(letters: Vec<T>) -> Self {
        CircularWord { letters }
    }

    pub fn letters(&self) -> &[T] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn canonical(&self) -> Vec<T> {
        canonical_rotation(&self.letters)
    }

    pub fn reversed(&self) -> Self {
        let mut l = self.letters.clone();
        l.reverse();
        CircularWord { letters: l }
    }

    /// The subword of letters satisfying `keep`, in cyclic order.
    pub fn restrict(&self, keep: impl Fn(&T) -> bool) -> Self {
        CircularWord { letters: self.letters.iter().filter(|x| keep(x)).cloned().collect() }
    }
}

impl<T: Ord + Clone> PartialEq for CircularWord<T> {
    fn eq(&self, other: &Self) -> bool {
        rotation_eq(&self.letters, &other.letters)
    }
}

impl<T: Ord + Clone> Eq for CircularWord<T> {}

impl fmt::Display for CircularWord<SignedIndex> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// A bijection of the signed indices over a finite base set that commutes
/// with negation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    map: BTreeMap<u32, SignedIndex>,
}

impl SignedPermutation {
    pub fn identity(bases: &[u32]) -> Self {
        SignedPermutation { map: bases.iter().map(|&b| (b, SignedIndex::pos(b))).collect() }
    }

    /// From images of the positive indices, in domain order.
    pub fn from_images(domain: &[u32], images: &[SignedIndex]) -> Result<Self, WordError> {
        if domain.len() != images.len() {
            return Err(WordError::NotBijective);
        }
        let mut seen: Vec<u32> = images.iter().map(|s| s.base).collect();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != images.len() {
            return Err(WordError::NotBijective);
        }
        Ok(SignedPermutation { map: domain.iter().copied().zip(images.iter().copied()).collect() })
    }

    pub fn domain(&self) -> Vec<u32> {
        self.map.keys().copied().collect()
    }

    pub fn image_bases(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.map.values().map(|s| s.base).collect();
        v.sort_unstable();
        v
    }

    pub fn images(&self) -> Vec<SignedIndex> {
        self.map.values().copied().collect()
    }

    pub fn apply(&self, x: SignedIndex) -> Result<SignedIndex, WordError> {
        let img = self.map.get(&x.base).ok_or(WordError::OutsideDomain(x.base))?;
        Ok(img.times(x.positive))
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> Result<SignedPermutation, WordError> {
        let mut map = BTreeMap::new();
        for (&b, &img) in &other.map {
            map.insert(b, self.apply(img)?);
        }
        Ok(SignedPermutation { map })
    }

    pub fn inverse(&self) -> SignedPermutation {
        let map = self.map.iter().map(|(&b, &img)| (img.base, SignedIndex::new(b, img.positive))).collect();
        SignedPermutation { map }
    }

    pub fn is_identity(&self) -> bool {
        self.map.iter().all(|(&b, &img)| img == SignedIndex::pos(b))
    }

    /// All n!·2ⁿ signed permutations of `bases` onto themselves, in a fixed order.
    pub fn all(bases: &[u32]) -> Vec<SignedPermutation> {
        let n = bases.len();
        let mut out = Vec::new();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut perms = Vec::new();
        permutations(&mut perm, 0, &mut perms);
        perms.sort();
        for p in perms {
            for mask in 0..(1u32 << n) {
                let images: Vec<SignedIndex> =
                    (0..n).map(|t| SignedIndex::new(bases[p[t]], mask & (1 << t) == 0)).collect();
                out.push(SignedPermutation::from_images(bases, &images).expect("bijection"));
            }
        }
        out
    }

    /// Relabels a word letter by letter.
    pub fn act_word(&self, w: &[SignedIndex]) -> Result<Vec<SignedIndex>, WordError> {
        w.iter().map(|&x| self.apply(x)).collect()
    }
}

fn permutations(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

impl fmt::Display for SignedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.map.values().map(|s| s.to_string()).collect();
        write!(f, "({})", parts.join(" "))
    }
}

/// Acts on a circular word: relabel letters, and reverse the word when the
/// carrier it belongs to changes sign.
pub fn act(sigma: &SignedPermutation, carrier: u32, w: &[SignedIndex]) -> Result<(u32, Vec<SignedIndex>), WordError> {
    let c = sigma.apply(SignedIndex::pos(carrier))?;
    let mut out = sigma.act_word(w)?;
    if !c.positive {
        out.reverse();
    }
    Ok((c.base, out))
}

/// Number of circular shuffles of `m` elementary circular words of length 4,
/// counted by direct enumeration.
pub fn count_cyclic_shuffles(m: usize) -> u128 {
    if m == 0 {
        return 0;
    }
    // Fix the first letter of word 0 at position 0; then arrange the rest
    // linearly so that each word's letters follow its cyclic order starting
    // from whichever occurrence comes first.
    let mut remaining = vec![4u8; m];
    remaining[0] = 3;
    let mut started = vec![false; m];
    started[0] = true;
    count_rec(&mut remaining, &mut started)
}

fn count_rec(remaining: &mut [u8], started: &mut [bool]) -> u128 {
    if remaining.iter().all(|&r| r == 0) {
        return 1;
    }
    let mut total = 0u128;
    for w in 0..remaining.len() {
        if remaining[w] == 0 {
            continue;
        }
        if started[w] {
            remaining[w] -= 1;
            total += count_rec(remaining, started);
            remaining[w] += 1;
        } else {
            // The first occurrence of an unstarted word may be any of its 4 letters.
            started[w] = true;
            remaining[w] -= 1;
            total += 4 * count_rec(remaining, started);
            remaining[w] += 1;
            started[w] = false;
        }
    }
    total
}

/// The closed formula printed for the shuffle count; it does not evaluate to
/// an integer in general and is kept only for comparison.
pub fn printed_shuffle_formula(n: usize) -> f64 {
    let m = 4 * n as u32 - 4;
    let mut fact = 1f64;
    for t in 1..=m {
        fact *= t as f64;
    }
    fact / (m as f64 * 24f64.powi(n as i32 - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(c: i64, o: i64) -> Head {
        Head::new(SignedIndex::from_i64(c).unwrap(), SignedIndex::from_i64(o).unwrap())
    }

    fn p(a: i64, b: i64) -> SignedPair {
        SignedPair::new(SignedIndex::from_i64(a).unwrap(), SignedIndex::from_i64(b).unwrap()).unwrap()
    }

    #[test]
    fn otimes_table_rows() {
        assert_eq!(otimes(h(1, 2), h(1, 2)).unwrap(), p(2, 1));
        assert_eq!(otimes(h(1, 2), h(1, 3)).unwrap(), p(2, -3));
        assert_eq!(otimes(h(-1, 2), h(1, 3)).unwrap(), p(2, 3));
        assert_eq!(otimes(h(1, 2), h(-1, 3)).unwrap(), p(-2, -3));
        assert_eq!(otimes(h(-1, 2), h(-1, 3)).unwrap(), p(-2, 3));
        assert!(otimes(h(1, 2), h(2, 3)).is_err());
        assert!(otimes(h(1, 2), h(1, -2)).is_err());
    }

    #[test]
    fn roll_singleton() {
        let r = roll(&[h(1, 2)], 1).unwrap();
        assert_eq!(r, vec![h(2, 1)]);
        assert!(roll(&[h(1, 2)], 2).is_err());
    }

    #[test]
    fn slot_tables_agree() {
        for slot in 1..=4u8 {
            let s = CrossingSymbol::new(1, 2, slot).unwrap();
            assert_eq!(s.swapped().pair(), s.pair());
            assert_eq!(s.swapped().swapped(), s);
            assert_eq!(CrossingSymbol::from_pair(s.pair(), 1), Some(s));
        }
    }

    #[test]
    fn least_rotation_basic() {
        assert_eq!(canonical_rotation(&[3, 1, 2]), vec![1, 2, 3]);
        assert_eq!(canonical_rotation(&[2, 1, 1, 2, 1]), vec![1, 1, 2, 1, 2]);
        assert_eq!(canonical_rotation(&[1, 1, 1]), vec![1, 1, 1]);
        assert!(rotation_eq(&[1, 2, 3, 4], &[3, 4, 1, 2]));
        assert!(!rotation_eq(&[1, 2, 3, 4], &[4, 3, 2, 1]));
    }

    #[test]
    fn signed_permutations_enumerate() {
        let all = SignedPermutation::all(&[1, 2, 3]);
        assert_eq!(all.len(), 48);
        assert!(all[0].is_identity());
        let s = &all[17];
        assert!(s.compose(&s.inverse()).unwrap().is_identity());
    }

    #[test]
    fn shuffle_counts() {
        assert_eq!(count_cyclic_shuffles(1), 1);
        assert_eq!(count_cyclic_shuffles(2), 140);
        assert!((printed_shuffle_formula(3) - 8.75).abs() < 1e-9);
    }

    #[test]
    fn parse_signed() {
        assert_eq!("-3".parse::<SignedIndex>().unwrap(), SignedIndex::neg(3));
        assert_eq!("12".parse::<SignedIndex>().unwrap(), SignedIndex::pos(12));
        assert!("0".parse::<SignedIndex>().is_err());
        assert!("x".parse::<SignedIndex>().is_err());
    }
}
