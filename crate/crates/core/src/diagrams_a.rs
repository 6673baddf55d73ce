//! Classical Brauer diagrams of type A.
//!
//! A diagram on `N` strands is a perfect matching of `2N` endpoints, top row
//! `0..N` and bottom row `N..2N` (0-based internally; the JSON schema is
//! 1-based). Composition stacks the left factor on top of the right one and
//! replaces every closed loop by a factor of `δ`.

use crate::admissible::RootSet;
use crate::rootsys::{DynkinType, Root, RootSystem};
use crate::scalars::DeltaPower;
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{HashMap, VecDeque};
use std::fmt;

/// A perfect matching on the `2N` endpoints of an `N`-strand diagram.
///
/// The partner array is a canonical encoding: equal pairings are equal
/// arrays, which keeps enumeration dedup cheap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Connector {
    partner: Vec<u8>,
}

impl Connector {
    pub fn identity(n: usize) -> Connector {
        let mut partner = vec![0u8; 2 * n];
        for i in 0..n {
            partner[i] = (n + i) as u8;
            partner[n + i] = i as u8;
        }
        Connector { partner }
    }

    /// Builds a connector from 0-based endpoint pairs.
    pub fn from_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Connector> {
        let mut partner = vec![u8::MAX; 2 * n];
        if pairs.len() != n {
            return Err(Error::StrandMismatch(pairs.len(), n));
        }
        for &(p, q) in pairs {
            if p >= 2 * n || q >= 2 * n || p == q || partner[p] != u8::MAX || partner[q] != u8::MAX
            {
                return Err(Error::GeneratorIndex {
                    index: p.max(q),
                    strands: n,
                });
            }
            partner[p] = q as u8;
            partner[q] = p as u8;
        }
        Ok(Connector { partner })
    }

    pub fn strands(&self) -> usize {
        self.partner.len() / 2
    }

    pub fn partner(&self, p: usize) -> usize {
        self.partner[p] as usize
    }

    /// Pairs as `(min, max)`, sorted lexicographically.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.strands());
        for p in 0..self.partner.len() {
            let q = self.partner(p);
            if p < q {
                out.push((p, q));
            }
        }
        out
    }

    /// Pairs with both endpoints in the top row.
    pub fn top_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.strands();
        self.pairs().into_iter().filter(|&(_, q)| q < n).collect()
    }

    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Connector {
        let mut partner = vec![0u8; self.partner.len()];
        for p in 0..self.partner.len() {
            partner[map(p)] = map(self.partner(p)) as u8;
        }
        Connector { partner }
    }

    /// Mirror through the vertical middle axis: endpoint `i` of each row maps
    /// to `N+1-i`.
    pub fn mirror(&self) -> Connector {
        let n = self.strands();
        self.relabel(|p| if p < n { n - 1 - p } else { 3 * n - 1 - p })
    }

    /// Top-bottom transpose (the diagram of the reversed word).
    pub fn transpose(&self) -> Connector {
        let n = self.strands();
        self.relabel(|p| if p < n { p + n } else { p - n })
    }

    /// True iff the pairing can be drawn without crossings: chords on the
    /// boundary cycle top `1..N`, bottom `N..1` must not interleave.
    pub fn is_planar(&self) -> bool {
        let n = self.strands();
        let pos = |p: usize| if p < n { p } else { 3 * n - 1 - p };
        let pairs = self.pairs();
        for (k, &(a, b)) in pairs.iter().enumerate() {
            let (a, b) = {
                let (x, y) = (pos(a), pos(b));
                (x.min(y), x.max(y))
            };
            for &(c, d) in pairs.iter().skip(k + 1) {
                let (c, d) = {
                    let (x, y) = (pos(c), pos(d));
                    (x.min(y), x.max(y))
                };
                let c_in = a < c && c < b;
                let d_in = a < d && d < b;
                if c_in != d_in {
                    return false;
                }
            }
        }
        true
    }
}

impl fmt::Display for Connector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.strands();
        let name = |p: usize| {
            if p < n {
                format!("t{}", p + 1)
            } else {
                format!("b{}", p - n + 1)
            }
        };
        let parts: Vec<String> = self
            .pairs()
            .iter()
            .map(|&(p, q)| format!("{}-{}", name(p), name(q)))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

/// Disjoint sets over the stacked endpoints with a Z/2 decoration parity
/// accumulated per component.
struct TraceSets {
    parent: Vec<u32>,
    rank: Vec<u8>,
    parity: Vec<bool>,
}

impl TraceSets {
    fn new(n: usize) -> TraceSets {
        TraceSets {
            parent: (0..n as u32).collect(),
            rank: vec![0; n],
            parity: vec![false; n],
        }
    }

    fn find(&mut self, x: u32) -> u32 {
        let p = self.parent[x as usize];
        if p != x {
            let root = self.find(p);
            self.parent[x as usize] = root;
        }
        self.parent[x as usize]
    }

    fn union(&mut self, a: u32, b: u32, dec: bool) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra == rb {
            self.parity[ra as usize] ^= dec;
            return;
        }
        let (hi, lo) = if self.rank[ra as usize] >= self.rank[rb as usize] {
            (ra, rb)
        } else {
            (rb, ra)
        };
        self.parent[lo as usize] = hi;
        if self.rank[hi as usize] == self.rank[lo as usize] {
            self.rank[hi as usize] += 1;
        }
        let merged = self.parity[hi as usize] ^ self.parity[lo as usize] ^ dec;
        self.parity[hi as usize] = merged;
    }
}

/// Outcome of stacking two connectors: the traced pairing, per-pair
/// decoration parities, and the closed loops split by parity.
pub(crate) struct Trace {
    pub conn: Connector,
    pub dec: u32,
    pub plain_loops: usize,
    pub odd_loops: usize,
}

/// Concatenates `a` above `b`, tracing paths with union-find and collecting
/// loops. Decoration masks are per-endpoint bitmasks (both endpoints of a
/// decorated pair are set); type-A callers pass zero.
pub(crate) fn trace(a: &Connector, a_dec: u32, b: &Connector, b_dec: u32) -> Trace {
    let n = a.strands();
    debug_assert_eq!(n, b.strands());
    // global ids: 0..n external top, n..2n middle, 2n..3n external bottom
    let mut sets = TraceSets::new(3 * n);
    for (p, q) in a.pairs() {
        let dec = a_dec & (1 << p) != 0;
        sets.union(p as u32, q as u32, dec);
    }
    for (p, q) in b.pairs() {
        let dec = b_dec & (1 << p) != 0;
        sets.union((p + n) as u32, (q + n) as u32, dec);
    }

    let mut ends: HashMap<u32, Vec<usize>> = HashMap::new();
    for g in (0..n).chain(2 * n..3 * n) {
        let root = sets.find(g as u32);
        ends.entry(root).or_default().push(g);
    }
    let mut pairs = Vec::with_capacity(n);
    let mut dec = 0u32;
    for (root, endpoints) in &ends {
        debug_assert_eq!(endpoints.len(), 2, "every traced path joins two externals");
        let map = |g: usize| if g < n { g } else { g - n };
        let (p, q) = (map(endpoints[0]), map(endpoints[1]));
        pairs.push((p.min(q), p.max(q)));
        if sets.parity[*root as usize] {
            dec |= (1 << p) | (1 << q);
        }
    }
    pairs.sort_unstable();

    // components without external endpoints are the closed loops
    let mut plain_loops = 0;
    let mut odd_loops = 0;
    let mut seen_roots: Vec<u32> = Vec::new();
    for g in n..2 * n {
        let root = sets.find(g as u32);
        if ends.contains_key(&root) || seen_roots.contains(&root) {
            continue;
        }
        seen_roots.push(root);
        if sets.parity[root as usize] {
            odd_loops += 1;
        } else {
            plain_loops += 1;
        }
    }

    Trace {
        conn: Connector::from_pairs(n, &pairs).expect("traced pairing is a perfect matching"),
        dec,
        plain_loops,
        odd_loops,
    }
}

/// A type-A diagram up to its `δ`-power.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ScaledDiagramA {
    pub delta: DeltaPower,
    pub conn: Connector,
}

impl ScaledDiagramA {
    pub fn new(conn: Connector) -> ScaledDiagramA {
        ScaledDiagramA {
            delta: DeltaPower::ONE,
            conn,
        }
    }

    pub fn identity(n: usize) -> ScaledDiagramA {
        ScaledDiagramA::new(Connector::identity(n))
    }

    pub fn times_delta(mut self, k: i32) -> ScaledDiagramA {
        self.delta = self.delta * DeltaPower(k);
        self
    }

    pub fn strands(&self) -> usize {
        self.conn.strands()
    }

    pub fn mirror(&self) -> ScaledDiagramA {
        ScaledDiagramA {
            delta: self.delta,
            conn: self.conn.mirror(),
        }
    }

    pub fn transpose(&self) -> ScaledDiagramA {
        ScaledDiagramA {
            delta: self.delta,
            conn: self.conn.transpose(),
        }
    }
}

impl fmt::Display for ScaledDiagramA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.delta != DeltaPower::ONE {
            write!(f, "{}*", self.delta)?;
        }
        write!(f, "{}", self.conn)
    }
}

/// Standard concatenation: identify `a`'s bottom row with `b`'s top row,
/// trace paths, and credit each closed loop with a factor `δ`.
pub fn compose(a: &ScaledDiagramA, b: &ScaledDiagramA) -> Result<ScaledDiagramA> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    let t = trace(&a.conn, 0, &b.conn, 0);
    debug_assert_eq!(t.odd_loops, 0);
    Ok(ScaledDiagramA {
        delta: a.delta * b.delta * DeltaPower(t.plain_loops as i32),
        conn: t.conn,
    })
}

pub fn compose_all(factors: &[ScaledDiagramA]) -> Result<ScaledDiagramA> {
    let n = factors
        .first()
        .map(|f| f.strands())
        .ok_or(Error::StrandMismatch(0, 0))?;
    let mut acc = ScaledDiagramA::identity(n);
    for f in factors {
        acc = compose(&acc, f)?;
    }
    Ok(acc)
}

fn check_gen_index(i: usize, n: usize) -> Result<()> {
    if i == 0 || i >= n {
        return Err(Error::GeneratorIndex {
            index: i,
            strands: n,
        });
    }
    Ok(())
}

/// The Coxeter generator `R_i`: swaps strands `i` and `i+1` (1-based).
pub fn gen_r(i: usize, n: usize) -> Result<ScaledDiagramA> {
    check_gen_index(i, n)?;
    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(n);
    for k in 0..n {
        if k == i - 1 {
            pairs.push((k, n + k + 1));
        } else if k == i {
            pairs.push((k, n + k - 1));
        } else {
            pairs.push((k, n + k));
        }
    }
    Ok(ScaledDiagramA::new(Connector::from_pairs(n, &pairs)?))
}

/// The Temperley-Lieb generator `E_i`: cups strands `i`, `i+1` on both rows.
pub fn gen_e(i: usize, n: usize) -> Result<ScaledDiagramA> {
    check_gen_index(i, n)?;
    let mut pairs: Vec<(usize, usize)> = vec![(i - 1, i), (n + i - 1, n + i)];
    for k in 0..n {
        if k != i - 1 && k != i {
            pairs.push((k, n + k));
        }
    }
    Ok(ScaledDiagramA::new(Connector::from_pairs(n, &pairs)?))
}

/// All `R_i` and `E_i` generators of the Brauer monoid on `n` strands.
pub fn full_brauer_gens(n: usize) -> Vec<ScaledDiagramA> {
    let mut gens = Vec::new();
    for i in 1..n {
        gens.push(gen_r(i, n).expect("index in range"));
        gens.push(gen_e(i, n).expect("index in range"));
    }
    gens
}

/// The `E_i` generators only.
pub fn tl_gens(n: usize) -> Vec<ScaledDiagramA> {
    (1..n)
        .map(|i| gen_e(i, n).expect("index in range"))
        .collect()
}

/// Left Cayley graph of the monoid generated by `gens`, deduplicated modulo
/// powers of `δ` (elements are keyed by connector alone).
pub struct MonoidEnumeration {
    pub elements: Vec<Connector>,
    pub index: HashMap<Connector, usize>,
    /// `edges[v]` lists `(generator, target)` for left multiplication.
    pub edges: Vec<Vec<(usize, usize)>>,
}

pub fn enumerate_monoid(gens: &[ScaledDiagramA], cap: usize) -> Result<MonoidEnumeration> {
    let n = gens
        .first()
        .map(|g| g.strands())
        .ok_or(Error::StrandMismatch(0, 0))?;
    let mut elements = vec![Connector::identity(n)];
    let mut index = HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut edges: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
    let mut head = 0;
    while head < elements.len() {
        let cur = ScaledDiagramA::new(elements[head].clone());
        for (g, gen) in gens.iter().enumerate() {
            let next = compose(gen, &cur)?.conn;
            let id = match index.get(&next) {
                Some(&id) => id,
                None => {
                    let id = elements.len();
                    if id >= cap {
                        return Err(Error::ElementCapExceeded(cap));
                    }
                    elements.push(next.clone());
                    index.insert(next, id);
                    edges.push(Vec::new());
                    id
                }
            };
            edges[head].push((g, id));
        }
        head += 1;
    }
    Ok(MonoidEnumeration {
        elements,
        index,
        edges,
    })
}

/// Minimal number of `R_i` in any expression of each monoid element:
/// a 0/1-weight shortest path in the left Cayley graph, with `R`-edges
/// weighing 1 and `E`-edges 0. Brute force, desk scale only.
pub fn heights_mod_delta(n: usize, cap: usize) -> Result<HashMap<Connector, usize>> {
    let gens = full_brauer_gens(n);
    let weight: Vec<usize> = (1..n).flat_map(|_| [1usize, 0]).collect();
    let enumeration = enumerate_monoid(&gens, cap)?;
    let mut dist = vec![usize::MAX; enumeration.elements.len()];
    let mut dq: VecDeque<usize> = VecDeque::new();
    dist[0] = 0;
    dq.push_back(0);
    while let Some(v) = dq.pop_front() {
        let dv = dist[v];
        for &(g, to) in &enumeration.edges[v] {
            let nd = dv + weight[g];
            if nd < dist[to] {
                dist[to] = nd;
                if weight[g] == 0 {
                    dq.push_front(to);
                } else {
                    dq.push_back(to);
                }
            }
        }
    }
    Ok(enumeration.elements.into_iter().zip(dist).collect())
}

pub fn word_height(d: &ScaledDiagramA, heights: &HashMap<Connector, usize>) -> Result<usize> {
    heights
        .get(&d.conn)
        .copied()
        .ok_or_else(|| Error::NotARoot(format!("connector {} not in enumerated monoid", d.conn)))
}

/// Reads the admissible set off the top of a diagram: each top horizontal
/// pair `{i, j}` is the type-A root `ε_i - ε_j`.
pub fn top_of(d: &ScaledDiagramA, sys: &RootSystem) -> Result<RootSet> {
    let n = d.strands();
    match sys.kind() {
        DynkinType::A(m) if m + 1 == n => {}
        other => {
            return Err(Error::UnsupportedSize(format!(
                "diagram top needs A_{} for {} strands, got {}",
                n - 1,
                n,
                other
            )))
        }
    }
    let mut roots = Vec::new();
    for (p, q) in d.conn.top_pairs() {
        roots.push(sys.root_from_epsilon_pair(p + 1, q + 1)?);
    }
    RootSet::new(sys, roots)
}

/// The diagram `E_β` for a positive root `β = ε_i - ε_j`: cups `{i, j}` on
/// both rows, identity elsewhere.
pub fn e_beta(beta: &Root, sys: &RootSystem, n: usize) -> Result<ScaledDiagramA> {
    if !sys.is_positive_root(beta) {
        return Err(Error::NotPositiveRoot(beta.to_string()));
    }
    let eps = sys.epsilon(beta);
    let i = eps
        .iter()
        .position(|&c| c == 1)
        .ok_or_else(|| Error::NotARoot(beta.to_string()))?;
    let j = eps
        .iter()
        .position(|&c| c == -1)
        .ok_or_else(|| Error::NotARoot(beta.to_string()))?;
    let mut pairs = vec![(i, j), (n + i, n + j)];
    for k in 0..n {
        if k != i && k != j {
            pairs.push((k, n + k));
        }
    }
    Ok(ScaledDiagramA::new(Connector::from_pairs(n, &pairs)?))
}

/// `E_B`, the product of `E_β` over an admissible set (order-independent).
pub fn e_set(b: &RootSet, sys: &RootSystem, n: usize) -> Result<ScaledDiagramA> {
    let mut acc = ScaledDiagramA::identity(n);
    for beta in b.roots() {
        acc = compose(&acc, &e_beta(beta, sys, n)?)?;
    }
    Ok(acc)
}

/// The admissible set action of a monomial: complete the top `B` into the
/// diagram `E_B` (no extra top horizontals), compose, and read the top.
pub fn diagram_action(a: &ScaledDiagramA, b: &RootSet, sys: &RootSystem) -> Result<RootSet> {
    let completed = e_set(b, sys, a.strands())?;
    top_of(&compose(a, &completed)?, sys)
}

/// All planar connectors on `n` strands: the non-crossing perfect matchings
/// of the `2n` boundary points. There are Catalan-many of them.
pub fn planar_connectors(n: usize) -> Vec<Connector> {
    // a chord from the first point splits the circle; the two sides match
    // independently
    fn non_crossing(points: &[usize]) -> Vec<Vec<(usize, usize)>> {
        if points.is_empty() {
            return vec![Vec::new()];
        }
        let first = points[0];
        let mut out = Vec::new();
        for k in (1..points.len()).step_by(2) {
            let inside = non_crossing(&points[1..k]);
            let outside = non_crossing(&points[k + 1..]);
            for i in &inside {
                for o in &outside {
                    let mut m = vec![(first, points[k])];
                    m.extend_from_slice(i);
                    m.extend_from_slice(o);
                    out.push(m);
                }
            }
        }
        out
    }
    let circle: Vec<usize> = (0..2 * n).collect();
    let endpoint = |c: usize| if c < n { c } else { 3 * n - 1 - c };
    let mut connectors: Vec<Connector> = non_crossing(&circle)
        .into_iter()
        .map(|pairs| {
            let mapped: Vec<(usize, usize)> = pairs
                .iter()
                .map(|&(a, b)| (endpoint(a), endpoint(b)))
                .collect();
            Connector::from_pairs(n, &mapped).expect("non-crossing matching is a pairing")
        })
        .collect();
    connectors.sort();
    connectors.dedup();
    connectors
}

/// Rank of the classical Brauer algebra on `m+1` strands: the product of the
/// first `m+1` odd integers.
pub fn brauer_rank(m: usize) -> u64 {
    (1..=m as u64 + 1).map(|k| 2 * k - 1).product()
}

pub fn catalan(n: usize) -> u64 {
    let mut c: u64 = 1;
    for k in 0..n as u64 {
        c = c * 2 * (2 * k + 1) / (k + 2);
    }
    c
}

pub fn binomial(n: usize, k: usize) -> u64 {
    let mut r: u64 = 1;
    for i in 0..k.min(n - k) as u64 {
        r = r * (n as u64 - i) / (i + 1);
    }
    r
}

/// JSON form of a type-A diagram: 1-based endpoints, top `1..N`, bottom
/// `N+1..2N`.
#[derive(Serialize, Deserialize)]
pub struct DiagramAJson {
    pub strands: usize,
    pub pairs: Vec<(usize, usize)>,
    pub delta: i32,
}

impl From<&ScaledDiagramA> for DiagramAJson {
    fn from(d: &ScaledDiagramA) -> DiagramAJson {
        DiagramAJson {
            strands: d.strands(),
            pairs: d
                .conn
                .pairs()
                .iter()
                .map(|&(p, q)| (p + 1, q + 1))
                .collect(),
            delta: d.delta.0,
        }
    }
}

impl TryFrom<&DiagramAJson> for ScaledDiagramA {
    type Error = Error;

    fn try_from(j: &DiagramAJson) -> Result<ScaledDiagramA> {
        let pairs: Vec<(usize, usize)> = j
            .pairs
            .iter()
            .map(|&(p, q)| (p.wrapping_sub(1), q.wrapping_sub(1)))
            .collect();
        Ok(ScaledDiagramA {
            delta: DeltaPower(j.delta),
            conn: Connector::from_pairs(j.strands, &pairs)?,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn generator_shapes() {
        let e1 = gen_e(1, 2).unwrap();
        assert_eq!(e1.conn.pairs(), vec![(0, 1), (2, 3)]);
        let r1 = gen_r(1, 2).unwrap();
        assert_eq!(r1.conn.pairs(), vec![(0, 3), (1, 2)]);
        assert!(gen_r(0, 2).is_err());
        assert!(gen_e(2, 2).is_err());
    }

    #[test]
    fn temperley_lieb_square_and_braid() {
        let e1 = gen_e(1, 2).unwrap();
        let sq = compose(&e1, &e1).unwrap();
        assert_eq!(sq.conn, e1.conn);
        assert_eq!(sq.delta, DeltaPower(1));

        let r1 = gen_r(1, 2).unwrap();
        let rr = compose(&r1, &r1).unwrap();
        assert_eq!(rr, ScaledDiagramA::identity(2));

        let r1 = gen_r(1, 3).unwrap();
        let r2 = gen_r(2, 3).unwrap();
        let lhs = compose_all(&[r1.clone(), r2.clone(), r1.clone()]).unwrap();
        let rhs = compose_all(&[r2.clone(), r1, r2]).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn absorption_identity() {
        // E_i R_j E_i = E_i for adjacent i, j
        let e1 = gen_e(1, 3).unwrap();
        let r2 = gen_r(2, 3).unwrap();
        let prod = compose_all(&[e1.clone(), r2, e1.clone()]).unwrap();
        assert_eq!(prod, e1);
    }

    #[test]
    fn mismatched_strand_counts_are_rejected() {
        let a = gen_e(1, 2).unwrap();
        let b = gen_e(1, 3).unwrap();
        assert!(compose(&a, &b).is_err());
    }

    #[test]
    fn planarity_examples() {
        assert!(Connector::identity(3).is_planar());
        assert!(!gen_r(1, 2).unwrap().conn.is_planar());
        assert!(gen_e(1, 4).unwrap().conn.is_planar());
        assert_eq!(planar_connectors(4).len(), 14);
    }

    #[test]
    fn planar_composed_with_planar_stays_planar() {
        for n in 2..=5 {
            let planars = planar_connectors(n);
            for a in &planars {
                for b in &planars {
                    let p = compose(
                        &ScaledDiagramA::new(a.clone()),
                        &ScaledDiagramA::new(b.clone()),
                    )
                    .unwrap();
                    assert!(p.conn.is_planar());
                }
            }
        }
    }

    #[test]
    fn mirror_examples() {
        assert_eq!(gen_e(1, 4).unwrap().mirror(), gen_e(3, 4).unwrap());
        assert_eq!(gen_e(2, 4).unwrap().mirror(), gen_e(2, 4).unwrap());
    }

    #[test]
    fn mirror_is_an_involutive_automorphism() {
        let gens = full_brauer_gens(4);
        for a in &gens {
            assert_eq!(a.mirror().mirror(), *a);
            for b in &gens {
                let lhs = compose(a, b).unwrap().mirror();
                let rhs = compose(&a.mirror(), &b.mirror()).unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn compose_is_associative_on_generator_triples() {
        for n in 2..=4 {
            let gens = full_brauer_gens(n);
            for a in &gens {
                for b in &gens {
                    for c in &gens {
                        let ab_c = compose(&compose(a, b).unwrap(), c).unwrap();
                        let a_bc = compose(a, &compose(b, c).unwrap()).unwrap();
                        assert_eq!(ab_c, a_bc);
                    }
                }
            }
        }
    }

    #[test]
    fn monoid_sizes_match_rank_formulas() {
        assert_eq!(
            enumerate_monoid(&full_brauer_gens(2), 10_000)
                .unwrap()
                .elements
                .len(),
            3
        );
        assert_eq!(
            enumerate_monoid(&full_brauer_gens(4), 10_000)
                .unwrap()
                .elements
                .len(),
            105
        );
        let tl4 = enumerate_monoid(&tl_gens(4), 10_000).unwrap();
        assert_eq!(tl4.elements.len(), 14);
        // the TL monoid is exactly the planar part of the Brauer monoid
        let br4 = enumerate_monoid(&full_brauer_gens(4), 10_000).unwrap();
        let planar: Vec<&Connector> = br4.elements.iter().filter(|c| c.is_planar()).collect();
        assert_eq!(planar.len(), 14);
        for c in &tl4.elements {
            assert!(planar.contains(&c));
        }
    }

    #[test]
    fn element_cap_is_enforced() {
        assert!(matches!(
            enumerate_monoid(&full_brauer_gens(4), 10),
            Err(Error::ElementCapExceeded(10))
        ));
    }

    #[test]
    fn heights_at_desk_scale() {
        let h = heights_mod_delta(2, 10_000).unwrap();
        assert_eq!(h[&Connector::identity(2)], 0);
        assert_eq!(h[&gen_r(1, 2).unwrap().conn], 1);
        assert_eq!(h[&gen_e(1, 2).unwrap().conn], 0);
    }

    #[test]
    fn brauer_counts() {
        assert_eq!(brauer_rank(1), 3);
        assert_eq!(brauer_rank(3), 105);
        assert_eq!(catalan(4), 14);
        assert_eq!(binomial(8, 4), 70);
    }

    #[test]
    fn delta_bookkeeping_over_longer_words() {
        // E_1 E_2 E_1 = E_1 with no loop, then E_1 E_1 adds one
        let e1 = gen_e(1, 3).unwrap();
        let e2 = gen_e(2, 3).unwrap();
        let w = compose_all(&[e1.clone(), e2, e1.clone(), e1.clone()]).unwrap();
        assert_eq!(w.conn, e1.conn);
        assert_eq!(w.delta, DeltaPower(1));
    }

    #[test]
    fn json_round_trip() {
        let d = gen_e(2, 4).unwrap().times_delta(-1);
        let j = DiagramAJson::from(&d);
        let text = serde_json::to_string(&j).unwrap();
        let back: DiagramAJson = serde_json::from_str(&text).unwrap();
        assert_eq!(ScaledDiagramA::try_from(&back).unwrap(), d);
    }

    #[test]
    fn diagram_tops_and_root_diagrams() {
        use crate::admissible::RootSet;
        use crate::rootsys::{DynkinType, RootSystem};
        let a3 = RootSystem::from_type(DynkinType::A(3)).unwrap();
        // the top of E_1 is the simple root a1
        let top = top_of(&gen_e(1, 4).unwrap(), &a3).unwrap();
        let a1 = RootSet::new(&a3, vec![a3.simple(1).unwrap()]).unwrap();
        assert_eq!(top, a1);
        // E_beta at a simple root is the matching generator
        assert_eq!(
            e_beta(&a3.simple(1).unwrap(), &a3, 4).unwrap(),
            gen_e(1, 4).unwrap()
        );
        // E_B over {a1, a3} is E_1 E_3
        let b = RootSet::new(&a3, vec![a3.simple(1).unwrap(), a3.simple(3).unwrap()]).unwrap();
        let expect = compose(&gen_e(1, 4).unwrap(), &gen_e(3, 4).unwrap()).unwrap();
        assert_eq!(e_set(&b, &a3, 4).unwrap(), expect);
        // the identity acts trivially
        assert_eq!(
            diagram_action(&ScaledDiagramA::identity(4), &b, &a3).unwrap(),
            b
        );
    }

    #[test]
    fn proptest_compose_associative_random_words() {
        use proptest::prelude::*;
        let mut runner = proptest::test_runner::TestRunner::default();
        runner
            .run(
                &(proptest::collection::vec(0usize..8, 3..9), 5usize..7),
                |(word, n)| {
                    let gens = full_brauer_gens(n);
                    let pick: Vec<&ScaledDiagramA> =
                        word.iter().map(|&k| &gens[k % gens.len()]).collect();
                    let mid = pick.len() / 2;
                    let left = pick[..mid]
                        .iter()
                        .fold(ScaledDiagramA::identity(n), |acc, g| {
                            compose(&acc, g).unwrap()
                        });
                    let right = pick[mid..]
                        .iter()
                        .fold(ScaledDiagramA::identity(n), |acc, g| {
                            compose(&acc, g).unwrap()
                        });
                    let joined = compose(&left, &right).unwrap();
                    let direct = pick.iter().fold(ScaledDiagramA::identity(n), |acc, g| {
                        compose(&acc, g).unwrap()
                    });
                    prop_assert_eq!(joined, direct);
                    Ok(())
                },
            )
            .unwrap();
    }
}
