use minabc_core::Tree;

use crate::{OracleError, ENUM_MAX};

/// Iterator over the non-isomorphic free trees of one order.
///
/// Trees are produced from canonical level sequences, so vertex 0 is the
/// root of the canonical rooting and labels follow preorder.
#[derive(Debug, Clone)]
pub struct FreeTrees {
    n: usize,
    layout: Option<Vec<usize>>,
    single: bool,
}

pub fn enumerate_trees(n: usize) -> Result<FreeTrees, OracleError> {
    if n == 0 {
        return Err(OracleError::TooSmall(0));
    }
    if n > ENUM_MAX {
        return Err(OracleError::CapExceeded(n));
    }
    let layout = (n >= 2).then(|| (0..=n / 2).chain(1..n.div_ceil(2)).collect());
    Ok(FreeTrees { n, layout, single: n == 1 })
}

impl FreeTrees {
    pub fn order(&self) -> usize {
        self.n
    }
}

impl Iterator for FreeTrees {
    type Item = Tree;

    fn next(&mut self) -> Option<Tree> {
        if self.single {
            self.single = false;
            return Some(Tree::from_edges(1, &[]).expect("single vertex"));
        }
        let layout = next_tree(self.layout.take()?)?;
        let tree = level_sequence_to_tree(&layout);
        self.layout = next_rooted_tree(&layout, None);
        Some(tree)
    }
}

/// Builds the tree whose preorder depths are `levels` (root at depth 0).
pub fn level_sequence_to_tree(levels: &[usize]) -> Tree {
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    let mut stack: Vec<usize> = Vec::new();
    for (i, &lv) in levels.iter().enumerate() {
        while let Some(&j) = stack.last() {
            if levels[j] >= lv {
                stack.pop();
            } else {
                break;
            }
        }
        if let Some(&j) = stack.last() {
            edges.push((j, i));
        }
        stack.push(i);
    }
    Tree::from_edges(levels.len(), &edges).expect("level sequence describes a tree")
}

fn next_rooted_tree(pred: &[usize], p: Option<usize>) -> Option<Vec<usize>> {
    let p = match p {
        Some(p) => p,
        None => {
            let mut p = pred.len() - 1;
            while pred[p] == 1 {
                p -= 1;
            }
            p
        }
    };
    if p == 0 {
        return None;
    }
    let mut q = p - 1;
    while pred[q] != pred[p] - 1 {
        q -= 1;
    }
    let shift = p - q;
    let mut out = pred.to_vec();
    for i in p..out.len() {
        out[i] = out[i - shift];
    }
    Some(out)
}

/// Splits at the second depth-1 vertex: the first principal subtree
/// (depths shifted up by one) and the rest of the tree.
fn split(layout: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let m = layout.iter().enumerate().skip(2).find(|&(_, &v)| v == 1).map_or(layout.len(), |(i, _)| i);
    let left = layout[1..m].iter().map(|v| v - 1).collect();
    let rest = std::iter::once(0).chain(layout[m..].iter().copied()).collect();
    (left, rest)
}

/// Advances `candidate` to the next level sequence that is canonical for a
/// free tree (rooted at a centre with the tallest first subtree).
fn next_tree(candidate: Vec<usize>) -> Option<Vec<usize>> {
    let (left, rest) = split(&candidate);
    let lh = left.iter().copied().max().unwrap_or(0);
    let rh = rest.iter().copied().max().unwrap_or(0);
    let mut valid = rh >= lh;
    if valid && rh == lh && (left.len() > rest.len() || (left.len() == rest.len() && left > rest)) {
        valid = false;
    }
    if valid {
        return Some(candidate);
    }
    let p = left.len();
    let mut next = next_rooted_tree(&candidate, Some(p))?;
    if candidate[p] > 2 {
        let (new_left, _) = split(&next);
        let h = new_left.iter().copied().max().unwrap_or(0);
        let len = next.len();
        for (i, v) in (1..=h + 1).enumerate() {
            next[len - (h + 1) + i] = v;
        }
    }
    Some(next)
}
