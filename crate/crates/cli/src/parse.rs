//! Parsers for the notation used on the command line:
//! root expressions like `a1` or `a1+a2+2a3+a4`, comma-separated root sets,
//! diagram types like `A4`/`D4`, and generator words like `R1 E2` or
//! `e0 e1 he1`.

use anyhow::{anyhow, bail, Result};
use dtl_core::admissible::RootSet;
use dtl_core::rootsys::{DynkinType, Root, RootSystem};

pub fn parse_dynkin(literal: &str) -> Result<DynkinType> {
    let (letter, size) = dtl_core::suites::parse_type(literal)
        .map_err(|_| anyhow!("cannot parse type literal {:?}", literal))?;
    Ok(match letter {
        'A' => DynkinType::A(size),
        'D' => DynkinType::D(size),
        'E' => DynkinType::E(size),
        other => bail!("unsupported diagram type {}{}", other, size),
    })
}

/// Parses a coefficient expression over the simple roots: `a1`, `2a3`,
/// `a1+a2+2a3+a4`.
pub fn parse_root(expr: &str, sys: &RootSystem) -> Result<Root> {
    let mut coeffs = vec![0i32; sys.rank()];
    for term in expr.split('+') {
        let term = term.trim();
        if term.is_empty() {
            bail!("empty term in root expression {:?}", expr);
        }
        let a_pos = term
            .find(['a', 'A'])
            .ok_or_else(|| anyhow!("term {:?} has no root symbol aN", term))?;
        let coef: i32 = if a_pos == 0 {
            1
        } else {
            term[..a_pos].trim().parse()?
        };
        let idx: usize = term[a_pos + 1..].trim().parse()?;
        if idx == 0 || idx > sys.rank() {
            bail!("root index {} out of range for {}", idx, sys.kind());
        }
        coeffs[idx - 1] += coef;
    }
    let root = Root(coeffs);
    if !sys.is_positive_root(&root) {
        bail!("{} is not a positive root of {}", root, sys.kind());
    }
    Ok(root)
}

/// Parses a comma-separated list of root expressions into a mutually
/// orthogonal set.
pub fn parse_root_set(list: &str, sys: &RootSystem) -> Result<RootSet> {
    let mut roots = Vec::new();
    for part in list.split(',') {
        let part = part.trim();
        if part.is_empty() {
            continue;
        }
        roots.push(parse_root(part, sys)?);
    }
    RootSet::new(sys, roots).map_err(|e| anyhow!("{}", e))
}

/// A Brauer-monoid generator token.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ActionSym {
    R(usize),
    E(usize),
}

/// Parses a whitespace- or comma-separated word of `R<i>`/`E<i>` tokens.
pub fn parse_action_word(word: &str) -> Result<Vec<ActionSym>> {
    let mut out = Vec::new();
    for tok in word.split([' ', ',', '\t']) {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let (head, rest) = tok.split_at(1);
        let idx: usize = rest
            .parse()
            .map_err(|_| anyhow!("cannot parse generator token {:?}", tok))?;
        match head {
            "R" | "r" => out.push(ActionSym::R(idx)),
            "E" | "e" => out.push(ActionSym::E(idx)),
            _ => bail!("unknown generator token {:?}", tok),
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn root_expressions() {
        let d4 = RootSystem::from_type(DynkinType::D(4)).unwrap();
        assert_eq!(parse_root("a1", &d4).unwrap(), Root(vec![1, 0, 0, 0]));
        assert_eq!(
            parse_root("a1+a2+2a3+a4", &d4).unwrap(),
            Root(vec![1, 1, 2, 1])
        );
        assert!(parse_root("a9", &d4).is_err());
        assert!(parse_root("a1+a2", &d4).is_err()); // 2*eps2 is not a root
    }

    #[test]
    fn action_words() {
        assert_eq!(
            parse_action_word("R4 R1 R2 R1").unwrap(),
            vec![
                ActionSym::R(4),
                ActionSym::R(1),
                ActionSym::R(2),
                ActionSym::R(1)
            ]
        );
        assert_eq!(parse_action_word("E1").unwrap(), vec![ActionSym::E(1)]);
    }
}
