//! Simply-laced (ADE) root systems.
//!
//! Roots are stored as integer coefficient tuples over the simple roots;
//! the `ε`-realizations of types A and D are derived views used for the
//! star map and for the diagram-top correspondence.
//!
//! Node numbering: `A_n` is the path `1..n`; `D_n` has fork nodes 1, 2
//! joined to node 3 and the path `3..n`, realized as `α_1 = ε_2 - ε_1`,
//! `α_2 = ε_2 + ε_1`, `α_i = ε_i - ε_{i-1}`. Every later index formula
//! depends on this numbering.

use crate::{Error, Result};
use std::collections::HashMap;
use std::fmt;

/// Label of a spherical simply-laced diagram.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum DynkinType {
    A(usize),
    D(usize),
    E(usize),
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DynkinType::A(n) => write!(f, "A{}", n),
            DynkinType::D(n) => write!(f, "D{}", n),
            DynkinType::E(n) => write!(f, "E{}", n),
        }
    }
}

/// One of the ADE Coxeter diagrams, with 1-based node labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DynkinDiagram {
    kind: DynkinType,
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl DynkinDiagram {
    pub fn new(kind: DynkinType) -> Result<DynkinDiagram> {
        let (n, edges) = match kind {
            DynkinType::A(n) if n >= 1 => (n, (1..n).map(|i| (i, i + 1)).collect()),
            DynkinType::D(n) if n >= 2 => {
                let mut edges: Vec<(usize, usize)> = Vec::new();
                if n >= 3 {
                    edges.push((1, 3));
                    edges.push((2, 3));
                    edges.extend((3..n).map(|i| (i, i + 1)));
                }
                (n, edges)
            }
            DynkinType::E(n) if (6..=8).contains(&n) => {
                let mut edges = vec![(1, 3), (3, 4), (2, 4)];
                edges.extend((4..n).map(|i| (i, i + 1)));
                (n, edges)
            }
            other => {
                return Err(Error::UnsupportedSize(format!(
                    "{} is not a spherical ADE diagram",
                    other
                )))
            }
        };
        Ok(DynkinDiagram { kind, n, edges })
    }

    pub fn type_a(n: usize) -> Result<DynkinDiagram> {
        DynkinDiagram::new(DynkinType::A(n))
    }

    pub fn type_d(n: usize) -> Result<DynkinDiagram> {
        DynkinDiagram::new(DynkinType::D(n))
    }

    pub fn kind(&self) -> DynkinType {
        self.kind
    }

    /// Number of nodes.
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.edges.contains(&(i, j)) || self.edges.contains(&(j, i))
    }
}

/// A root as an integer coefficient tuple over the simple roots.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scaled_add(&self, k: i32, other: &Root) -> Root {
        Root(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    /// Sum of simple-root coefficients. Meaningful for positive roots.
    pub fn coeff_sum(&self) -> i32 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "{}", if c > 0 { "+" } else { "-" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            let a = c.abs();
            if a != 1 {
                write!(f, "{}", a)?;
            }
            write!(f, "a{}", i + 1)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// A realized ADE root system: diagram, positive roots, inner products.
#[derive(Clone, Debug)]
pub struct RootSystem {
    diagram: DynkinDiagram,
    positive: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(diagram: DynkinDiagram) -> RootSystem {
        let n = diagram.rank();
        let mut positive: Vec<Root> = (1..=n)
            .map(|i| {
                let mut c = vec![0; n];
                c[i - 1] = 1;
                Root(c)
            })
            .collect();
        let gram = |d: &DynkinDiagram, a: &Root, b: &Root| -> i32 {
            let mut s = 0;
            for i in 0..n {
                if a.0[i] != 0 {
                    s += 2 * a.0[i] * b.0[i];
                    for j in 0..n {
                        if i != j && b.0[j] != 0 && d.adjacent(i + 1, j + 1) {
                            s -= a.0[i] * b.0[j];
                        }
                    }
                }
            }
            s
        };
        // Closure of the simple roots under root addition: in a simply-laced
        // system β + α_i is a root exactly when (β, α_i) = -1.
        let mut seen: HashMap<Root, usize> = positive
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        let mut head = 0;
        while head < positive.len() {
            let beta = positive[head].clone();
            for i in 0..n {
                let alpha = &positive[i];
                if gram(&diagram, &beta, alpha) == -1 {
                    let gamma = beta.add(alpha);
                    if !seen.contains_key(&gamma) {
                        seen.insert(gamma.clone(), positive.len());
                        positive.push(gamma);
                    }
                }
            }
            head += 1;
        }
        positive.sort_by_key(|r| (r.coeff_sum(), r.0.clone()));
        let index = positive
            .iter()
            .enumerate()
            .map(|(k, r)| (r.clone(), k))
            .collect();
        RootSystem {
            diagram,
            positive,
            index,
        }
    }

    pub fn from_type(kind: DynkinType) -> Result<RootSystem> {
        Ok(RootSystem::new(DynkinDiagram::new(kind)?))
    }

    pub fn diagram(&self) -> &DynkinDiagram {
        &self.diagram
    }

    pub fn kind(&self) -> DynkinType {
        self.diagram.kind()
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    /// The positive roots, sorted by height then coefficients.
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// The simple root of a 1-based node.
    pub fn simple(&self, i: usize) -> Result<Root> {
        if i == 0 || i > self.rank() {
            return Err(Error::NodeIndex {
                index: i,
                context: format!("{}", self.kind()),
            });
        }
        let mut c = vec![0; self.rank()];
        c[i - 1] = 1;
        Ok(Root(c))
    }

    /// Simply-laced inner product; simple roots have norm 2.
    pub fn inner(&self, a: &Root, b: &Root) -> i32 {
        let n = self.rank();
        let mut s = 0;
        for i in 0..n {
            if a.0[i] == 0 {
                continue;
            }
            s += 2 * a.0[i] * b.0[i];
            for j in 0..n {
                if i != j && b.0[j] != 0 && self.diagram.adjacent(i + 1, j + 1) {
                    s -= a.0[i] * b.0[j];
                }
            }
        }
        s
    }

    pub fn is_root(&self, r: &Root) -> bool {
        self.index.contains_key(r) || self.index.contains_key(&r.neg())
    }

    pub fn is_positive_root(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    /// The simple reflection `s_α(β) = β - (β, α)α` for any root `α`.
    pub fn reflect(&self, beta: &Root, alpha: &Root) -> Result<Root> {
        if !self.is_root(alpha) {
            return Err(Error::NotARoot(alpha.to_string()));
        }
        Ok(beta.scaled_add(-self.inner(beta, alpha), alpha))
    }

    pub fn reflect_simple(&self, beta: &Root, i: usize) -> Result<Root> {
        let alpha = self.simple(i)?;
        self.reflect(beta, &alpha)
    }

    /// The canonical height of a positive root: its coefficient sum.
    pub fn root_height(&self, beta: &Root) -> Result<i32> {
        if !self.is_positive_root(beta) {
            return Err(Error::NotPositiveRoot(beta.to_string()));
        }
        Ok(beta.coeff_sum())
    }

    /// `ε`-coordinates of a root, for the type A and D realizations.
    pub fn epsilon(&self, r: &Root) -> Vec<i32> {
        match self.kind() {
            DynkinType::A(n) => {
                // α_i = ε_i - ε_{i+1} in R^{n+1}
                let mut v = vec![0; n + 1];
                for (i, &c) in r.0.iter().enumerate() {
                    v[i] += c;
                    v[i + 1] -= c;
                }
                v
            }
            DynkinType::D(n) => {
                // α_1 = ε_2 - ε_1, α_2 = ε_2 + ε_1, α_i = ε_i - ε_{i-1}
                let mut v = vec![0; n];
                v[0] += r.0[1] - r.0[0];
                v[1] += r.0[0] + r.0[1];
                for i in 3..=n {
                    v[i - 1] += r.0[i - 1];
                    v[i - 2] -= r.0[i - 1];
                }
                v
            }
            DynkinType::E(_) => panic!("no epsilon realization is provided for type E"),
        }
    }

    pub fn epsilon_string(&self, r: &Root) -> String {
        let v = self.epsilon(r);
        let mut s = String::new();
        // positive terms first, so ε_2 - ε_1 reads "e2-e1"
        let ordered = v
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .chain(v.iter().enumerate().filter(|(_, &c)| c < 0));
        for (i, &c) in ordered {
            if !s.is_empty() && c > 0 {
                s.push('+');
            }
            if c < 0 {
                s.push('-');
            }
            if c.abs() != 1 {
                s.push_str(&c.abs().to_string());
            }
            s.push_str(&format!("e{}", i + 1));
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }

    /// The type-D star map: `(ε_j ± ε_i)^* = ε_j ∓ ε_i`.
    pub fn star(&self, beta: &Root) -> Result<Root> {
        match self.kind() {
            DynkinType::D(_) => {}
            other => return Err(Error::StarRequiresTypeD(other.to_string())),
        }
        if !self.is_positive_root(beta) {
            return Err(Error::NotPositiveRoot(beta.to_string()));
        }
        let mut v = self.epsilon(beta);
        let lo = v
            .iter()
            .position(|&c| c != 0)
            .expect("positive root has a nonzero epsilon coordinate");
        v[lo] = -v[lo];
        for r in &self.positive {
            if self.epsilon(r) == v {
                return Ok(r.clone());
            }
        }
        Err(Error::NotARoot(format!("{:?}", v)))
    }

    /// The mirror diagram automorphism `α_i -> α_{n+1-i}` of type A.
    pub fn mirror_root(&self, r: &Root) -> Root {
        match self.kind() {
            DynkinType::A(_) => {
                let mut c = r.0.clone();
                c.reverse();
                Root(c)
            }
            other => panic!("mirror automorphism is only used for type A, got {}", other),
        }
    }

    /// The positive root with ε-support `{i, j}` in type A: `ε_i - ε_j`, i < j.
    pub fn root_from_epsilon_pair(&self, i: usize, j: usize) -> Result<Root> {
        match self.kind() {
            DynkinType::A(n) => {
                if i == 0 || j <= i || j > n + 1 {
                    return Err(Error::NodeIndex {
                        index: j,
                        context: format!("epsilon pair of {}", self.kind()),
                    });
                }
                let mut c = vec![0; n];
                for k in i..j {
                    c[k - 1] = 1;
                }
                Ok(Root(c))
            }
            other => Err(Error::UnsupportedSize(format!(
                "epsilon pairs address type A roots, got {}",
                other
            ))),
        }
    }
}
