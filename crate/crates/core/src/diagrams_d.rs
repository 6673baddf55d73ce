//! Brauer diagrams of type D on `n+1` strands.
//!
//! Layer L1 is the undecorated subalgebra with scalars in `H`: it carries
//! every `DTL(B_n)` computation in this crate. Layer L2 adds decorated
//! connectors (an even number of pairs marked) with the loop rules of the
//! decorated calculus: a plain loop gives `δ`, a pair of decorated loops
//! gives `θ`, and a lone decorated loop strips a decorated pair at the cost
//! of `θδ^{-1}`. Once `θ` is present all decorations are removed.

use crate::diagrams_a::{trace, Connector};
use crate::rootsys::{DynkinType, Root, RootSystem};
use crate::scalars::{HScalar, Tag};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Generator flavor for [`psi_gen`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum GenKind {
    R,
    E,
}

/// A type-D diagram: an `H`-scalar, a connector, and a decoration mask
/// (both endpoint bits of each decorated pair are set; L1 values have none).
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ScaledDiagramD {
    pub scalar: HScalar,
    pub conn: Connector,
    pub dec: u32,
}

impl ScaledDiagramD {
    pub fn new(scalar: HScalar, conn: Connector, dec: u32) -> ScaledDiagramD {
        let d = ScaledDiagramD { scalar, conn, dec };
        d.assert_invariants();
        d
    }

    pub fn plain(conn: Connector) -> ScaledDiagramD {
        ScaledDiagramD::new(HScalar::ONE, conn, 0)
    }

    pub fn identity(n: usize) -> ScaledDiagramD {
        ScaledDiagramD::plain(Connector::identity(n))
    }

    pub fn strands(&self) -> usize {
        self.conn.strands()
    }

    pub fn is_decorated(&self) -> bool {
        self.dec != 0
    }

    pub fn decorated_pairs(&self) -> Vec<(usize, usize)> {
        self.conn
            .pairs()
            .into_iter()
            .filter(|&(p, _)| self.dec & (1 << p) != 0)
            .collect()
    }

    pub fn times_delta(mut self, k: i32) -> ScaledDiagramD {
        self.scalar = self.scalar.times_delta(k);
        self
    }

    pub fn times(mut self, s: HScalar) -> ScaledDiagramD {
        self.scalar = self.scalar * s;
        self
    }

    /// Top-bottom transpose (image of the reversed word).
    pub fn transpose(&self) -> ScaledDiagramD {
        let n = self.strands();
        let map = |p: usize| if p < n { p + n } else { p - n };
        let mut dec = 0u32;
        for p in 0..2 * n {
            if self.dec & (1 << p) != 0 {
                dec |= 1 << map(p);
            }
        }
        ScaledDiagramD::new(self.scalar, self.conn.transpose(), dec)
    }

    fn assert_invariants(&self) {
        debug_assert!(
            self.decorated_pairs().len().is_multiple_of(2),
            "decoration count must be even: {}",
            self
        );
        debug_assert!(
            self.scalar.tag != Tag::Theta || self.dec == 0,
            "theta-tagged diagrams carry no decorations: {}",
            self
        );
        debug_assert!(
            self.scalar.tag == Tag::One || !self.conn.top_pairs().is_empty(),
            "xi/theta basis elements have a horizontal strand: {}",
            self
        );
        for (p, q) in self.conn.pairs() {
            debug_assert_eq!(
                self.dec & (1 << p) != 0,
                self.dec & (1 << q) != 0,
                "decoration marks whole pairs"
            );
        }
    }
}

impl fmt::Display for ScaledDiagramD {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}*{}", self.scalar, self.conn)?;
        let dec = self.decorated_pairs();
        if !dec.is_empty() {
            write!(f, " dec{:?}", dec)?;
        }
        Ok(())
    }
}

/// Undecorated composition: classical concatenation, every closed loop a
/// `δ`, scalars combined in `H`.
pub fn compose_l1(a: &ScaledDiagramD, b: &ScaledDiagramD) -> Result<ScaledDiagramD> {
    if a.is_decorated() || b.is_decorated() {
        return Err(Error::DecoratedOperandInL1);
    }
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    let t = trace(&a.conn, 0, &b.conn, 0);
    debug_assert_eq!(t.odd_loops, 0);
    Ok(ScaledDiagramD::new(
        (a.scalar * b.scalar).times_delta(t.plain_loops as i32),
        t.conn,
        0,
    ))
}

pub fn compose_l1_all(factors: &[ScaledDiagramD]) -> Result<ScaledDiagramD> {
    let n = factors
        .first()
        .map(|f| f.strands())
        .ok_or(Error::StrandMismatch(0, 0))?;
    let mut acc = ScaledDiagramD::identity(n);
    for f in factors {
        acc = compose_l1(&acc, f)?;
    }
    Ok(acc)
}

/// Decorated composition. Traced paths keep the parity of the decorations
/// they crossed; loops resolve as `δ` (even parity) or pair up into `θ`
/// (odd parity), a lone odd loop undecorating one result pair at `θδ^{-1}`.
/// A lone odd loop with nothing to undecorate falls outside the rule table
/// and is a hard error.
pub fn compose_l2(a: &ScaledDiagramD, b: &ScaledDiagramD) -> Result<ScaledDiagramD> {
    if a.strands() != b.strands() {
        return Err(Error::StrandMismatch(a.strands(), b.strands()));
    }
    let t = trace(&a.conn, a.dec, &b.conn, b.dec);
    let mut scalar = (a.scalar * b.scalar).times_delta(t.plain_loops as i32);
    let mut dec = t.dec;
    let paired = t.odd_loops / 2;
    for _ in 0..paired {
        scalar = scalar * HScalar::theta(0);
    }
    if t.odd_loops % 2 == 1 {
        // a decorated pair must be present to absorb the lone decorated loop
        if dec == 0 {
            return Err(Error::LoneDecoratedLoop(format!(
                "{} composed with {}",
                a, b
            )));
        }
        scalar = scalar * HScalar::theta(-1);
    }
    if scalar.tag == Tag::Theta {
        dec = 0;
    }
    Ok(ScaledDiagramD::new(scalar, t.conn, dec))
}

pub fn compose_l2_all(factors: &[ScaledDiagramD]) -> Result<ScaledDiagramD> {
    let n = factors
        .first()
        .map(|f| f.strands())
        .ok_or(Error::StrandMismatch(0, 0))?;
    let mut acc = ScaledDiagramD::identity(n);
    for f in factors {
        acc = compose_l2(&acc, f)?;
    }
    Ok(acc)
}

/// The image of a `Br(D_{n+1})` generator in the decorated diagram calculus.
///
/// Node `i >= 2` maps to the plain type-A generator on strands `{i-1, i}`;
/// node 1 is the decorated twin of node 2 (both strands marked). The images
/// are pinned by the presentation relation suite, not by pictures.
pub fn psi_gen(kind: GenKind, i: usize, n: usize) -> Result<ScaledDiagramD> {
    let strands = n + 1;
    if i == 0 || i > strands {
        return Err(Error::NodeIndex {
            index: i,
            context: format!("D{}", strands),
        });
    }
    let a_index = if i == 1 { 1 } else { i - 1 };
    let plain = match kind {
        GenKind::R => crate::diagrams_a::gen_r(a_index, strands)?,
        GenKind::E => crate::diagrams_a::gen_e(a_index, strands)?,
    };
    let dec = if i == 1 {
        // both strands of the node-2 twin are decorated
        let mut mask = 0u32;
        for (p, q) in plain.conn.pairs() {
            let touches = |x: usize| {
                let s = if x < strands { x } else { x - strands };
                s == 0 || s == 1
            };
            if touches(p) || touches(q) {
                mask |= (1 << p) | (1 << q);
            }
        }
        mask
    } else {
        0
    };
    Ok(ScaledDiagramD::new(HScalar::ONE, plain.conn, dec))
}

/// `ψ(E_β) = ψ(w) ψ(E_i) ψ(w)^{-1}` for a positive root `β = w α_i` of
/// `D_{n+1}`, with `w` found by search in the root system.
pub fn psi_e_root(beta: &Root, sys: &RootSystem, n: usize) -> Result<ScaledDiagramD> {
    let strands = n + 1;
    match sys.kind() {
        DynkinType::D(m) if m == strands => {}
        other => {
            return Err(Error::UnsupportedSize(format!(
                "psi_e_root needs D_{}, got {}",
                strands, other
            )))
        }
    }
    if !sys.is_positive_root(beta) {
        return Err(Error::NotPositiveRoot(beta.to_string()));
    }
    // BFS from β down to a simple root, recording the reflection word
    let mut frontier: Vec<(Root, Vec<usize>)> = vec![(beta.clone(), Vec::new())];
    let mut seen = vec![beta.clone()];
    loop {
        let mut next = Vec::new();
        for (r, word) in &frontier {
            for i in 1..=sys.rank() {
                if let Ok(s) = sys.simple(i) {
                    if *r == s {
                        // β = w α_i with w the reversed word applied so far
                        let mut diag = psi_gen(GenKind::E, i, n)?;
                        for &j in word.iter().rev() {
                            let rj = psi_gen(GenKind::R, j, n)?;
                            diag = compose_l2(&compose_l2(&rj, &diag)?, &rj)?;
                        }
                        return Ok(diag);
                    }
                    let img = sys.reflect(r, &s).expect("simple root is a root");
                    let img = if img.is_positive() { img } else { img.neg() };
                    if img.coeff_sum() < r.coeff_sum() && !seen.contains(&img) {
                        seen.push(img.clone());
                        let mut w = word.clone();
                        w.push(i);
                        next.push((img, w));
                    }
                }
            }
        }
        assert!(
            !next.is_empty(),
            "every positive root reduces to a simple one"
        );
        frontier = next;
    }
}

/// Enumerates the monoid generated by decorated diagrams modulo `δ`,
/// keyed by `(tag, connector, decorations)`.
pub fn enumerate_monoid_l2(
    gens: &[ScaledDiagramD],
    cap: usize,
) -> Result<Vec<(Tag, Connector, u32)>> {
    let n = gens
        .first()
        .map(|g| g.strands())
        .ok_or(Error::StrandMismatch(0, 0))?;
    let mut elements = vec![(Tag::One, Connector::identity(n), 0u32)];
    let mut seen: std::collections::HashSet<(Tag, Connector, u32)> =
        std::collections::HashSet::new();
    seen.insert(elements[0].clone());
    let mut head = 0;
    while head < elements.len() {
        let (tag, conn, dec) = elements[head].clone();
        let cur = ScaledDiagramD::new(HScalar { delta: 0, tag }, conn, dec);
        for g in gens {
            let next = compose_l2(g, &cur)?;
            let key = (next.scalar.tag, next.conn, next.dec);
            if seen.insert(key.clone()) {
                if elements.len() >= cap {
                    return Err(Error::ElementCapExceeded(cap));
                }
                elements.push(key);
            }
        }
        head += 1;
    }
    Ok(elements)
}

/// Census of the decorated-connector basis strata for `D_{n+1}`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BasisCensus {
    /// all decorated connectors
    pub t: u64,
    /// undecorated connectors
    pub t0: u64,
    /// decorated connectors with at least one horizontal strand
    pub t_eq: u64,
    /// undecorated connectors with at least one horizontal strand
    pub t0_eq: u64,
    /// the ξ stratum: `|ξ T^=|`
    pub xi_sector: u64,
    /// the θ stratum: `|θ (T^0 ∩ T^=)|`
    pub theta_sector: u64,
}

/// Exhaustive counts of the basis strata by brute enumeration of matchings
/// and even decoration patterns.
pub fn basis_census(n: usize) -> BasisCensus {
    let strands = n + 1;
    let matchings = all_matchings(strands);
    let even_patterns = 1u64 << n; // even subsets of n+1 pairs
    let with_horizontal = matchings
        .iter()
        .filter(|c| !c.top_pairs().is_empty())
        .count() as u64;
    let total = matchings.len() as u64;
    BasisCensus {
        t: total * even_patterns,
        t0: total,
        t_eq: with_horizontal * even_patterns,
        t0_eq: with_horizontal,
        xi_sector: with_horizontal * even_patterns,
        theta_sector: with_horizontal,
    }
}

/// All perfect matchings on the `2n` endpoints.
pub fn all_matchings(n: usize) -> Vec<Connector> {
    fn go(free: Vec<usize>, acc: &mut Vec<(usize, usize)>, out: &mut Vec<Vec<(usize, usize)>>) {
        if free.is_empty() {
            out.push(acc.clone());
            return;
        }
        let first = free[0];
        for k in 1..free.len() {
            acc.push((first, free[k]));
            let rest: Vec<usize> = free[1..]
                .iter()
                .enumerate()
                .filter(|(idx, _)| *idx != k - 1)
                .map(|(_, &v)| v)
                .collect();
            go(rest, acc, out);
            acc.pop();
        }
    }
    let mut out: Vec<Vec<(usize, usize)>> = Vec::new();
    go((0..2 * n).collect(), &mut Vec::new(), &mut out);
    out.into_iter()
        .map(|pairs| Connector::from_pairs(n, &pairs).expect("matching"))
        .collect()
}

/// JSON form of a type-D diagram: the type-A schema plus the `H` tag and the
/// decorated pairs (1-based endpoints).
#[derive(Serialize, Deserialize)]
pub struct DiagramDJson {
    pub strands: usize,
    pub pairs: Vec<(usize, usize)>,
    pub delta: i32,
    pub tag: Tag,
    pub decorated: Vec<(usize, usize)>,
}

impl From<&ScaledDiagramD> for DiagramDJson {
    fn from(d: &ScaledDiagramD) -> DiagramDJson {
        DiagramDJson {
            strands: d.strands(),
            pairs: d
                .conn
                .pairs()
                .iter()
                .map(|&(p, q)| (p + 1, q + 1))
                .collect(),
            delta: d.scalar.delta,
            tag: d.scalar.tag,
            decorated: d
                .decorated_pairs()
                .iter()
                .map(|&(p, q)| (p + 1, q + 1))
                .collect(),
        }
    }
}
