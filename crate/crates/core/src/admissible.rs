//! Admissible sets of mutually orthogonal positive roots.
//!
//! Two equivalent admissibility definitions are implemented side by side:
//! the orbit-level one (nonadjacent nodes `i`, `j` with `γ, γ-α_i+α_j ∈ B`
//! force `R_iB = R_jB` throughout the Weyl orbit) and the local one (every
//! positive `γ` meeting three set members with product -1 forces
//! `2γ+γ_1+γ_2+γ_3 ∈ B`). The closure operator, the Weyl and `E_i` actions,
//! and the monoidal orbit posets with their height function live here too.

use crate::rootsys::{DynkinType, Root, RootSystem};
use crate::{Error, Result};
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

/// A set of mutually orthogonal positive roots, kept sorted for canonical
/// hashing and deterministic poset construction.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct RootSet(Vec<Root>);

impl RootSet {
    /// Builds a set after checking positivity and pairwise orthogonality.
    pub fn new(sys: &RootSystem, roots: Vec<Root>) -> Result<RootSet> {
        for r in &roots {
            if !sys.is_positive_root(r) {
                return Err(Error::NotPositiveRoot(r.to_string()));
            }
        }
        for (k, a) in roots.iter().enumerate() {
            for b in roots.iter().skip(k + 1) {
                if sys.inner(a, b) != 0 {
                    return Err(Error::NotOrthogonal(a.to_string(), b.to_string()));
                }
            }
        }
        Ok(RootSet::from_sorted(roots))
    }

    pub fn empty() -> RootSet {
        RootSet(Vec::new())
    }

    fn from_sorted(mut roots: Vec<Root>) -> RootSet {
        roots.sort_by_key(|r| (r.coeff_sum(), r.0.clone()));
        roots.dedup();
        RootSet(roots)
    }

    pub fn roots(&self) -> &[Root] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.0.contains(r)
    }

    pub fn with_root(&self, r: Root) -> RootSet {
        let mut v = self.0.clone();
        v.push(r);
        RootSet::from_sorted(v)
    }

    /// Applies the type-A mirror automorphism `α_i -> α_{n+1-i}` rootwise.
    pub fn mirrored(&self, sys: &RootSystem) -> RootSet {
        RootSet::from_sorted(self.0.iter().map(|r| sys.mirror_root(r)).collect())
    }
}

impl fmt::Display for RootSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", r)?;
        }
        write!(f, "}}")
    }
}

/// Set action of the reflection in `alpha`:
/// `wB = Φ⁺ ∩ {±wβ : β ∈ B}`.
fn reflect_set(sys: &RootSystem, alpha: &Root, b: &RootSet) -> RootSet {
    let imgs = b
        .roots()
        .iter()
        .map(|beta| {
            let img = sys
                .reflect(beta, alpha)
                .expect("reflection root is validated by callers");
            if img.is_positive() {
                img
            } else {
                img.neg()
            }
        })
        .collect();
    RootSet::from_sorted(imgs)
}

/// Applies a word of simple reflections (1-based node indices) right to left.
pub fn weyl_action(sys: &RootSystem, word: &[usize], b: &RootSet) -> Result<RootSet> {
    let mut cur = b.clone();
    for &i in word.iter().rev() {
        let alpha = sys.simple(i)?;
        cur = reflect_set(sys, &alpha, &cur);
    }
    Ok(cur)
}

/// The local admissibility test: every positive root `γ` meeting a triple
/// `γ_1, γ_2, γ_3 ∈ B` with all inner products -1 forces
/// `2γ+γ_1+γ_2+γ_3 ∈ B`, and with all inner products +1 forces
/// `±(2γ-γ_1-γ_2-γ_3) ∈ B`. The two orientations are exchanged by
/// `γ -> γ+γ_1+γ_2+γ_3`; mixed sign patterns reduce to them by
/// reflections in the `γ_k`, so this pair of scans is the complete rule.
pub fn is_admissible_local(sys: &RootSystem, b: &RootSet) -> bool {
    forced_roots(sys, b).is_empty()
}

/// Positive roots that the admissibility rule forces into `b` but that are
/// missing from it.
fn forced_roots(sys: &RootSystem, b: &RootSet) -> Vec<Root> {
    let roots = b.roots();
    let mut out = Vec::new();
    if roots.len() < 3 {
        return out;
    }
    for x in 0..roots.len() {
        for y in x + 1..roots.len() {
            for z in y + 1..roots.len() {
                for gamma in sys.positive_roots() {
                    let p = (
                        sys.inner(gamma, &roots[x]),
                        sys.inner(gamma, &roots[y]),
                        sys.inner(gamma, &roots[z]),
                    );
                    let forced = match p {
                        (-1, -1, -1) => gamma
                            .scaled_add(1, gamma)
                            .add(&roots[x])
                            .add(&roots[y])
                            .add(&roots[z]),
                        (1, 1, 1) => {
                            let r = gamma
                                .scaled_add(1, gamma)
                                .sub(&roots[x])
                                .sub(&roots[y])
                                .sub(&roots[z]);
                            if r.is_positive() {
                                r
                            } else {
                                r.neg()
                            }
                        }
                        _ => continue,
                    };
                    if !b.contains(&forced) && !out.contains(&forced) {
                        out.push(forced);
                    }
                }
            }
        }
    }
    out
}

/// The orbit-level admissibility test: walk the whole Weyl orbit and check
/// that nonadjacent nodes `i ≁ j` with `γ, γ-α_i+α_j` both in a member force
/// equal reflections of that member.
pub fn is_admissible_orbit(sys: &RootSystem, b: &RootSet) -> bool {
    let members = orbit_members(sys, b);
    orbit_pair_condition(sys, &members)
}

pub(crate) fn orbit_members(sys: &RootSystem, b: &RootSet) -> Vec<RootSet> {
    let mut seen: HashSet<RootSet> = HashSet::new();
    seen.insert(b.clone());
    let mut queue = vec![b.clone()];
    let mut head = 0;
    while head < queue.len() {
        let cur = queue[head].clone();
        head += 1;
        for i in 1..=sys.rank() {
            let alpha = sys.simple(i).expect("node in range");
            let next = reflect_set(sys, &alpha, &cur);
            if seen.insert(next.clone()) {
                queue.push(next);
            }
        }
    }
    queue
}

pub(crate) fn orbit_pair_condition(sys: &RootSystem, members: &[RootSet]) -> bool {
    let n = sys.rank();
    for c in members {
        for i in 1..=n {
            for j in 1..=n {
                if i == j || sys.diagram().adjacent(i, j) {
                    continue;
                }
                let ai = sys.simple(i).expect("node in range");
                let aj = sys.simple(j).expect("node in range");
                let witness = c
                    .roots()
                    .iter()
                    .any(|gamma| c.contains(&gamma.sub(&ai).add(&aj)));
                if witness {
                    let ri = reflect_set(sys, &ai, c);
                    let rj = reflect_set(sys, &aj, c);
                    if ri != rj {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Runs both admissibility definitions and returns their (asserted common)
/// verdict.
pub fn is_admissible(sys: &RootSystem, b: &RootSet) -> bool {
    let local = is_admissible_local(sys, b);
    let orbit = is_admissible_orbit(sys, b);
    assert_eq!(
        local,
        orbit,
        "admissibility definitions disagree on {} in {}",
        b,
        sys.kind()
    );
    local
}

/// The admissible closure: the unique smallest admissible set containing `X`.
pub fn closure(sys: &RootSystem, x: &RootSet) -> Result<RootSet> {
    let mut cur = x.clone();
    loop {
        let forced = forced_roots(sys, &cur);
        if forced.is_empty() {
            return Ok(cur);
        }
        for f in forced {
            for old in cur.roots() {
                if sys.inner(old, &f) != 0 && *old != f {
                    return Err(Error::ClosureNotOrthogonal(x.to_string()));
                }
            }
            if !sys.is_positive_root(&f) {
                return Err(Error::ClosureNotOrthogonal(x.to_string()));
            }
            cur = cur.with_root(f);
        }
    }
}

/// The Brauer-monoid generator action on admissible sets:
/// `B` if `α_i ∈ B`; the closure of `B ∪ {α_i}` if `α_i ⊥ B`;
/// otherwise `R_β R_i B` for `β ∈ B` not orthogonal to `α_i`.
///
/// The choice of `β` in the third case is pinned to the root of minimal
/// height; choice-independence is enforced by tests.
pub fn ei_action(sys: &RootSystem, i: usize, b: &RootSet) -> Result<RootSet> {
    let alpha = sys.simple(i)?;
    if b.contains(&alpha) {
        return Ok(b.clone());
    }
    if b.roots().iter().all(|beta| sys.inner(&alpha, beta) == 0) {
        return closure(sys, &b.with_root(alpha));
    }
    let beta = b
        .roots()
        .iter()
        .filter(|beta| sys.inner(&alpha, beta) != 0)
        .min_by_key(|beta| (beta.coeff_sum(), beta.0.clone()))
        .expect("case 3 has a non-orthogonal member")
        .clone();
    let after_ri = reflect_set(sys, &alpha, b);
    Ok(reflect_set(sys, &beta, &after_ri))
}

/// All candidate results of the third `ei_action` case, one per admissible
/// choice of `β`. Used to machine-check that the action is well defined.
pub fn ei_action_all_choices(sys: &RootSystem, i: usize, b: &RootSet) -> Result<Vec<RootSet>> {
    let alpha = sys.simple(i)?;
    if b.contains(&alpha) || b.roots().iter().all(|beta| sys.inner(&alpha, beta) == 0) {
        return Ok(vec![ei_action(sys, i, b)?]);
    }
    let after_ri = reflect_set(sys, &alpha, b);
    Ok(b.roots()
        .iter()
        .filter(|beta| sys.inner(&alpha, beta) != 0)
        .map(|beta| reflect_set(sys, beta, &after_ri))
        .collect())
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum EdgeSignal {
    Raise,
    Lower,
    Mixed,
}

/// Signal of `R_i` at `B` from the minimal-height moved roots:
/// a moved root `β` with `β - α_i ∈ Φ⁺` votes Lower, with `β + α_i ∈ Φ⁺`
/// votes Raise.
fn edge_signal(sys: &RootSystem, b: &RootSet, i: usize) -> EdgeSignal {
    let alpha = sys.simple(i).expect("node in range");
    let moved: Vec<(&Root, i32)> = b
        .roots()
        .iter()
        .filter_map(|beta| {
            let p = sys.inner(beta, &alpha);
            if *beta == alpha || p == 0 {
                None
            } else {
                Some((beta, p))
            }
        })
        .collect();
    let min_h = moved
        .iter()
        .map(|(beta, _)| beta.coeff_sum())
        .min()
        .expect("edge_signal is called when R_i moves B");
    let mut saw_raise = false;
    let mut saw_lower = false;
    for (beta, p) in moved {
        if beta.coeff_sum() == min_h {
            if p > 0 {
                saw_lower = true;
            } else {
                saw_raise = true;
            }
        }
    }
    match (saw_raise, saw_lower) {
        (true, false) => EdgeSignal::Raise,
        (false, true) => EdgeSignal::Lower,
        _ => EdgeSignal::Mixed,
    }
}

/// A Weyl orbit of admissible sets with its monoidal poset structure.
#[derive(Clone, Debug)]
pub struct OrbitPoset {
    sets: Vec<RootSet>,
    index: HashMap<RootSet, usize>,
    /// Raising edges `(lower, upper, node)`.
    raise_edges: Vec<(usize, usize, usize)>,
    heights: Vec<usize>,
    max_index: usize,
    diameter: usize,
}

impl OrbitPoset {
    pub fn sets(&self) -> &[RootSet] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn raise_edges(&self) -> &[(usize, usize, usize)] {
        &self.raise_edges
    }

    pub fn maximal(&self) -> &RootSet {
        &self.sets[self.max_index]
    }

    /// Hasse distance from the lowest layer to the maximal element.
    pub fn diameter(&self) -> usize {
        self.diameter
    }

    pub fn index_of(&self, b: &RootSet) -> Option<usize> {
        self.index.get(b).copied()
    }

    pub fn height_by_index(&self, idx: usize) -> usize {
        self.heights[idx]
    }

    /// Emits the Hasse diagram in DOT, with one `rank=same` layer per height.
    pub fn to_dot(&self) -> String {
        let mut s = String::new();
        s.push_str("digraph hasse {\n");
        s.push_str("  rankdir=BT;\n");
        s.push_str("  node [shape=box, fontname=\"monospace\"];\n");
        for (i, set) in self.sets.iter().enumerate() {
            s.push_str(&format!(
                "  n{} [label=\"{}\\nht {}\"];\n",
                i, set, self.heights[i]
            ));
        }
        let max_h = self.heights.iter().copied().max().unwrap_or(0);
        for h in 0..=max_h {
            let layer: Vec<String> = (0..self.sets.len())
                .filter(|&i| self.heights[i] == h)
                .map(|i| format!("n{};", i))
                .collect();
            if !layer.is_empty() {
                s.push_str(&format!("  {{ rank=same; {} }}\n", layer.join(" ")));
            }
        }
        for &(lo, hi, node) in &self.raise_edges {
            s.push_str(&format!("  n{} -> n{} [label=\"R{}\"];\n", lo, hi, node));
        }
        s.push_str("}\n");
        s
    }
}

/// BFS closure of an admissible set under the simple reflections, with
/// raise/lower classification of every Hasse edge, the unique maximal
/// element, and heights `d - l`.
pub fn orbit(sys: &RootSystem, b: &RootSet) -> Result<OrbitPoset> {
    let mut sets = orbit_members(sys, b);
    sets.sort();
    let index: HashMap<RootSet, usize> = sets
        .iter()
        .enumerate()
        .map(|(k, s)| (s.clone(), k))
        .collect();

    let mut raise_edges = Vec::new();
    let mut has_raise = vec![false; sets.len()];
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); sets.len()];
    for (from, cur) in sets.iter().enumerate() {
        for i in 1..=sys.rank() {
            let alpha = sys.simple(i)?;
            let img = reflect_set(sys, &alpha, cur);
            if img == *cur {
                continue;
            }
            let to = index[&img];
            adjacency[from].push(to);
            if from > to {
                // classified once per unordered edge, from its lower index
                continue;
            }
            let here = edge_signal(sys, cur, i);
            let there = edge_signal(sys, &img, i);
            use EdgeSignal::*;
            let raises_from_cur = match (here, there) {
                (Raise, Lower) | (Raise, Mixed) | (Mixed, Lower) => true,
                (Lower, Raise) | (Lower, Mixed) | (Mixed, Raise) => false,
                (Raise, Raise) | (Lower, Lower) | (Mixed, Mixed) => {
                    return Err(Error::AmbiguousEdgeClass(format!(
                        "{} --R{}-- {}",
                        cur, i, img
                    )))
                }
            };
            if raises_from_cur {
                raise_edges.push((from, to, i));
                has_raise[from] = true;
            } else {
                raise_edges.push((to, from, i));
                has_raise[to] = true;
            }
        }
    }

    let maximal: Vec<usize> = (0..sets.len()).filter(|&k| !has_raise[k]).collect();
    if maximal.len() != 1 {
        return Err(Error::AmbiguousEdgeClass(format!(
            "orbit of {} has {} maximal elements",
            b,
            maximal.len()
        )));
    }
    let max_index = maximal[0];

    // l = Hasse distance to the maximal element, d = its largest value.
    let mut dist = vec![usize::MAX; sets.len()];
    dist[max_index] = 0;
    let mut queue = VecDeque::from([max_index]);
    while let Some(v) = queue.pop_front() {
        for &w in &adjacency[v] {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    let diameter = dist.iter().copied().max().expect("orbit is nonempty");
    let heights = dist.iter().map(|&l| diameter - l).collect();
    let mut sorted_edges = raise_edges;
    sorted_edges.sort();
    Ok(OrbitPoset {
        sets,
        index,
        raise_edges: sorted_edges,
        heights,
        max_index,
        diameter,
    })
}

/// Height of `B` inside its orbit poset: `d - l`.
pub fn set_height(b: &RootSet, poset: &OrbitPoset) -> Result<usize> {
    poset
        .index_of(b)
        .map(|i| poset.height_by_index(i))
        .ok_or(Error::NotInPoset)
}

/// Every mutually orthogonal subset of the positive roots.
pub fn all_orthogonal_subsets(sys: &RootSystem) -> Vec<RootSet> {
    let roots = sys.positive_roots();
    let mut out = vec![RootSet::empty()];
    let mut stack: Vec<(usize, Vec<usize>)> = vec![(0, Vec::new())];
    while let Some((from, chosen)) = stack.pop() {
        for k in from..roots.len() {
            if chosen.iter().all(|&c| sys.inner(&roots[c], &roots[k]) == 0) {
                let mut next = chosen.clone();
                next.push(k);
                out.push(RootSet::from_sorted(
                    next.iter().map(|&c| roots[c].clone()).collect(),
                ));
                stack.push((k + 1, next));
            }
        }
    }
    out.sort();
    out
}

/// Recorded orbit representatives for the exceptional types, as simple-root
/// node sets together with a closure flag. Data only; the A and D
/// representatives are generated by orbit search instead.
///
/// The E7 row of the source table lists a repeated index; it is kept
/// verbatim here and collapses under set semantics.
pub fn e_type_orbit_representatives(k: usize) -> Result<Vec<(Vec<usize>, bool)>> {
    Ok(match k {
        6 => vec![
            (vec![], false),
            (vec![6], false),
            (vec![6, 4], false),
            (vec![6, 2, 3], true),
        ],
        7 => vec![
            (vec![], false),
            (vec![7], false),
            (vec![7, 5], false),
            (vec![5, 5, 2], false),
            (vec![7, 2, 3], true),
            (vec![7, 5, 2, 3], true),
        ],
        8 => vec![
            (vec![], false),
            (vec![8], false),
            (vec![8, 6], false),
            (vec![8, 2, 3], true),
            (vec![8, 5, 2, 3], true),
        ],
        other => {
            return Err(Error::UnsupportedSize(format!(
                "E{} has no recorded representatives",
                other
            )))
        }
    })
}

/// All admissible sets of `A_{2n-1}` that are fixed by the mirror
/// automorphism and have height 0, grouped by size `0..=n`.
pub fn sigma_fixed_height0(n: usize) -> Result<Vec<Vec<RootSet>>> {
    let sys = RootSystem::from_type(DynkinType::A(2 * n - 1))?;
    let all = all_orthogonal_subsets(&sys);
    let mut by_size: Vec<Vec<RootSet>> = Vec::with_capacity(n + 1);
    for size in 0..=n {
        let sized: Vec<&RootSet> = all.iter().filter(|s| s.len() == size).collect();
        let rep = sized
            .first()
            .expect("A_{2n-1} has orthogonal sets of every size up to n");
        let poset = orbit(&sys, rep)?;
        let mut group = Vec::new();
        for s in sized {
            if s.mirrored(&sys) != *s {
                continue;
            }
            if set_height(s, &poset)? == 0 {
                group.push((*s).clone());
            }
        }
        group.sort();
        by_size.push(group);
    }
    Ok(by_size)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rootsys::DynkinType;

    fn sys(kind: DynkinType) -> RootSystem {
        RootSystem::from_type(kind).unwrap()
    }

    fn set(sys: &RootSystem, nodes: &[usize]) -> RootSet {
        RootSet::new(sys, nodes.iter().map(|&i| sys.simple(i).unwrap()).collect()).unwrap()
    }

    #[test]
    fn raise_edges_are_graded_covers() {
        for kind in [
            DynkinType::A(4),
            DynkinType::A(5),
            DynkinType::D(4),
            DynkinType::D(5),
        ] {
            let s = sys(kind);
            let mut seen: HashSet<RootSet> = HashSet::new();
            for b in all_orthogonal_subsets(&s) {
                if seen.contains(&b) || !is_admissible_local(&s, &b) {
                    continue;
                }
                let poset = orbit(&s, &b).unwrap();
                for m in poset.sets() {
                    seen.insert(m.clone());
                }
                for &(lo, hi, _) in poset.raise_edges() {
                    assert_eq!(
                        poset.height_by_index(hi),
                        poset.height_by_index(lo) + 1,
                        "{}: raising edge is not a graded cover",
                        kind
                    );
                }
            }
        }
    }

    #[test]
    fn e6_representatives_construct_and_close() {
        let e6 = sys(DynkinType::E(6));
        for (nodes, needs_closure) in e_type_orbit_representatives(6).unwrap() {
            let raw = set(&e6, &nodes);
            let rep = if needs_closure {
                closure(&e6, &raw).unwrap()
            } else {
                raw
            };
            assert!(is_admissible_local(&e6, &rep), "{}", rep);
        }
        assert!(e_type_orbit_representatives(9).is_err());
    }

    #[test]
    fn fork_set_in_d4_is_not_admissible() {
        let d4 = sys(DynkinType::D(4));
        let b = set(&d4, &[1, 2, 4]);
        assert!(!is_admissible(&d4, &b));
    }

    #[test]
    fn empty_set_is_admissible() {
        let d4 = sys(DynkinType::D(4));
        assert!(is_admissible(&d4, &RootSet::empty()));
    }

    #[test]
    fn disjoint_simples_in_a4_are_admissible() {
        let a4 = sys(DynkinType::A(4));
        assert!(is_admissible(&a4, &set(&a4, &[1, 3])));
    }

    #[test]
    fn non_orthogonal_input_is_rejected() {
        let a4 = sys(DynkinType::A(4));
        let r = RootSet::new(&a4, vec![a4.simple(1).unwrap(), a4.simple(2).unwrap()]);
        assert!(r.is_err());
    }

    #[test]
    fn d4_closure_example() {
        let d4 = sys(DynkinType::D(4));
        let x = set(&d4, &[1, 2, 4]);
        let cl = closure(&d4, &x).unwrap();
        let highest = Root(vec![1, 1, 2, 1]);
        let expect = x.with_root(highest);
        assert_eq!(cl, expect);
        assert!(is_admissible(&d4, &cl));
    }

    #[test]
    fn closure_fixes_admissible_sets_and_singletons() {
        let a3 = sys(DynkinType::A(3));
        let single = set(&a3, &[1]);
        assert_eq!(closure(&a3, &single).unwrap(), single);
        let d4 = sys(DynkinType::D(4));
        let adm = closure(&d4, &set(&d4, &[1, 2, 4])).unwrap();
        assert_eq!(closure(&d4, &adm).unwrap(), adm);
    }

    #[test]
    fn closure_is_minimal_at_desk_scale() {
        // every admissible set containing X also contains closure(X)
        let d4 = sys(DynkinType::D(4));
        let x = set(&d4, &[1, 2, 4]);
        let cl = closure(&d4, &x).unwrap();
        for cand in all_orthogonal_subsets(&d4) {
            let contains_x = x.roots().iter().all(|r| cand.contains(r));
            if contains_x && is_admissible_local(&d4, &cand) {
                for r in cl.roots() {
                    assert!(cand.contains(r), "{} misses {}", cand, r);
                }
            }
        }
    }

    #[test]
    fn weyl_action_paper_example() {
        let a4 = sys(DynkinType::A(4));
        let b = RootSet::new(&a4, vec![Root(vec![1, 1, 0, 0]), a4.simple(4).unwrap()]).unwrap();
        let img = weyl_action(&a4, &[4, 1, 2, 1], &b).unwrap();
        assert_eq!(img, b);
    }

    #[test]
    fn weyl_action_identity_and_folding() {
        let a4 = sys(DynkinType::A(4));
        let b = set(&a4, &[1, 3]);
        assert_eq!(weyl_action(&a4, &[], &b).unwrap(), b);
        let single = set(&a4, &[1]);
        assert_eq!(weyl_action(&a4, &[1], &single).unwrap(), single);
    }

    #[test]
    fn weyl_action_preserves_size_and_admissibility() {
        let d4 = sys(DynkinType::D(4));
        let b = closure(&d4, &set(&d4, &[1, 2, 4])).unwrap();
        for i in 1..=4 {
            let img = weyl_action(&d4, &[i], &b).unwrap();
            assert_eq!(img.len(), b.len());
            assert!(is_admissible_local(&d4, &img));
        }
    }

    #[test]
    fn ei_action_three_cases() {
        let a2 = sys(DynkinType::A(2));
        let b1 = set(&a2, &[1]);
        assert_eq!(ei_action(&a2, 1, &b1).unwrap(), b1);
        assert_eq!(ei_action(&a2, 1, &RootSet::empty()).unwrap(), b1);
        assert_eq!(ei_action(&a2, 1, &set(&a2, &[2])).unwrap(), b1);
    }

    #[test]
    fn orbit_of_two_disjoint_simples_in_a4() {
        let a4 = sys(DynkinType::A(4));
        let poset = orbit(&a4, &set(&a4, &[1, 3])).unwrap();
        // 2-matchings on 5 points
        assert_eq!(poset.len(), 15);
        let max = poset.maximal();
        let expect =
            RootSet::new(&a4, vec![Root(vec![1, 1, 1, 0]), Root(vec![0, 1, 1, 1])]).unwrap();
        assert_eq!(*max, expect);
        assert_eq!(set_height(max, &poset).unwrap(), poset.diameter());
        assert_eq!(set_height(&set(&a4, &[1, 3]), &poset).unwrap(), 0);
    }

    #[test]
    fn orbit_of_empty_set_is_trivial() {
        let a4 = sys(DynkinType::A(4));
        let poset = orbit(&a4, &RootSet::empty()).unwrap();
        assert_eq!(poset.len(), 1);
        assert_eq!(poset.diameter(), 0);
    }

    #[test]
    fn singleton_orbits_follow_root_height() {
        let a3 = sys(DynkinType::A(3));
        let poset = orbit(&a3, &set(&a3, &[1])).unwrap();
        assert_eq!(poset.len(), a3.positive_roots().len());
        for r in a3.positive_roots() {
            let b = RootSet::new(&a3, vec![r.clone()]).unwrap();
            assert_eq!(
                set_height(&b, &poset).unwrap() as i32,
                a3.root_height(r).unwrap() - 1
            );
        }
    }

    #[test]
    fn height_errors_outside_poset() {
        let a4 = sys(DynkinType::A(4));
        let poset = orbit(&a4, &set(&a4, &[1, 3])).unwrap();
        assert!(set_height(&set(&a4, &[1]), &poset).is_err());
    }

    #[test]
    fn d4_orbit_posets_have_unique_maximal_elements() {
        let d4 = sys(DynkinType::D(4));
        let reps = [
            RootSet::empty(),
            set(&d4, &[3]),
            set(&d4, &[1, 2]),
            set(&d4, &[1, 4]),
            closure(&d4, &set(&d4, &[1, 2, 4])).unwrap(),
        ];
        for rep in reps {
            let poset = orbit(&d4, &rep).unwrap();
            let max_count = (0..poset.len())
                .filter(|&i| poset.height_by_index(i) == poset.diameter())
                .count();
            assert!(max_count >= 1);
            // uniqueness of the maximal element is already enforced inside
            // orbit(); this re-checks via heights.
            assert_eq!(
                poset
                    .sets()
                    .iter()
                    .filter(|s| set_height(s, &poset).unwrap() == poset.diameter())
                    .count(),
                1
            );
        }
    }

    #[test]
    fn d4_fork_pairs_lie_in_different_orbits() {
        let d4 = sys(DynkinType::D(4));
        let p12 = orbit(&d4, &set(&d4, &[1, 2])).unwrap();
        assert!(p12.index_of(&set(&d4, &[1, 4])).is_none());
    }

    #[test]
    fn sigma_fixed_height0_small_cases() {
        let grouped = sigma_fixed_height0(1).unwrap();
        assert_eq!(grouped[0].len(), 1);
        assert_eq!(grouped[1].len(), 1);

        let grouped = sigma_fixed_height0(2).unwrap();
        let a3 = sys(DynkinType::A(3));
        assert!(grouped[2].contains(&set(&a3, &[1, 3])));
        // counts per size: 1, 1, 2; the STL basis pairs tops with bottoms of
        // equal size, so the squares sum to binom(4, 2).
        let counts: Vec<usize> = grouped.iter().map(|g| g.len()).collect();
        assert_eq!(counts, vec![1, 1, 2]);
        let sq: usize = counts.iter().map(|c| c * c).sum();
        assert_eq!(sq, 6);
    }

    #[test]
    fn ei_action_choice_independence_small() {
        for kind in [
            DynkinType::A(4),
            DynkinType::A(5),
            DynkinType::D(4),
            DynkinType::D(5),
        ] {
            let s = sys(kind);
            for b in all_orthogonal_subsets(&s) {
                if !is_admissible_local(&s, &b) {
                    continue;
                }
                for i in 1..=s.rank() {
                    let all = ei_action_all_choices(&s, i, &b).unwrap();
                    let first = &all[0];
                    for other in &all {
                        assert_eq!(other, first, "E{} on {}", i, b);
                    }
                    assert_eq!(&ei_action(&s, i, &b).unwrap(), first);
                }
            }
        }
    }

    #[test]
    fn closure_operator_properties_random() {
        use proptest::prelude::*;
        let mut runner = proptest::test_runner::TestRunner::default();
        let strategies = (any::<u64>(), 0usize..2);
        runner
            .run(&strategies, |(seed, which)| {
                let s = if which == 0 {
                    sys(DynkinType::A(5))
                } else {
                    sys(DynkinType::D(5))
                };
                // build a random orthogonal subset from the seed
                let mut chosen: Vec<Root> = Vec::new();
                let mut state = seed;
                for r in s.positive_roots() {
                    state = state
                        .wrapping_mul(6364136223846793005)
                        .wrapping_add(1442695040888963407);
                    if state % 3 == 0 && chosen.iter().all(|c| s.inner(c, r) == 0) {
                        chosen.push(r.clone());
                    }
                }
                let x = RootSet::new(&s, chosen).unwrap();
                let cl = closure(&s, &x).unwrap();
                // extensive
                prop_assert!(x.roots().iter().all(|r| cl.contains(r)));
                // idempotent
                prop_assert_eq!(closure(&s, &cl).unwrap(), cl.clone());
                // monotone against every subset of x
                let roots = x.roots();
                for mask in 0..(1u32 << roots.len().min(4)) {
                    let sub: Vec<Root> = roots
                        .iter()
                        .enumerate()
                        .filter(|(k, _)| mask & (1 << k) != 0)
                        .map(|(_, r)| r.clone())
                        .collect();
                    let sub_cl = closure(&s, &RootSet::new(&s, sub).unwrap()).unwrap();
                    prop_assert!(sub_cl.roots().iter().all(|r| cl.contains(r)));
                }
                Ok(())
            })
            .unwrap();
    }
}
