//! Edge-decorated planar rooted trees and unlaced words.
//!
//! Reading edge labels along the boundary of a planar tree, starting and
//! ending at the root, meets every edge twice and never interleaves two
//! edges: the boundary word is unlaced, and every unlaced word arises from
//! exactly one tree. The admissible-cut coproduct on forests is
//! implemented here directly on trees, independently of the word side.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::element::{ModuleElement, Monoid, Tensor};
use crate::error::{Error, Result};
use crate::ring::RingMode;
use crate::words::{Letter, Phrase, Word};

/// A planar rooted tree whose edges carry pairwise distinct letters.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct PlanarTree {
    children: Vec<(Letter, PlanarTree)>,
}

impl PlanarTree {
    /// The one-vertex tree.
    pub fn point() -> Self {
        PlanarTree::default()
    }

    /// A root with the given child edges, left to right.
    pub fn new(children: Vec<(Letter, PlanarTree)>) -> Result<Self> {
        let tree = PlanarTree { children };
        let mut seen = BTreeSet::new();
        tree.check_distinct(&mut seen)?;
        Ok(tree)
    }

    fn check_distinct(&self, seen: &mut BTreeSet<Letter>) -> Result<()> {
        for (e, t) in &self.children {
            if !seen.insert(e.clone()) {
                return Err(Error::DuplicateDecoration(e.to_string()));
            }
            t.check_distinct(seen)?;
        }
        Ok(())
    }

    pub fn children(&self) -> &[(Letter, PlanarTree)] {
        &self.children
    }

    pub fn is_point(&self) -> bool {
        self.children.is_empty()
    }

    pub fn edge_count(&self) -> usize {
        self.children.iter().map(|(_, t)| 1 + t.edge_count()).sum()
    }

    /// The boundary word `e_1 w(t_1) e_1 e_2 w(t_2) e_2 ⋯`.
    pub fn to_word(&self) -> Word {
        let mut letters = Vec::with_capacity(2 * self.edge_count());
        self.push_word(&mut letters);
        Word::from_letters(letters)
    }

    fn push_word(&self, out: &mut Vec<Letter>) {
        for (e, t) in &self.children {
            out.push(e.clone());
            t.push_word(out);
            out.push(e.clone());
        }
    }
}

impl fmt::Display for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_point() {
            return f.write_str(".");
        }
        write_children(self, f)
    }
}

fn write_children(t: &PlanarTree, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (k, (e, sub)) in t.children.iter().enumerate() {
        if k > 0 {
            f.write_str(",")?;
        }
        write!(f, "{e}")?;
        if !sub.is_point() {
            f.write_str("(")?;
            write_children(sub, f)?;
            f.write_str(")")?;
        }
    }
    Ok(())
}

impl fmt::Debug for PlanarTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlanarTree({self})")
    }
}

/// Parses `.` for the point and otherwise a comma-separated list of root
/// edges, each optionally followed by its subtree in parentheses, as in
/// `A(B,C)`.
impl FromStr for PlanarTree {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().collect();
        if text.trim() == "." {
            return Ok(PlanarTree::point());
        }
        let mut pos = 0;
        let children = parse_list(&chars, &mut pos)?;
        if pos != chars.len() {
            return Err(Error::parse(pos, format!("unexpected character {:?} in tree", chars[pos])));
        }
        PlanarTree::new(children)
    }
}

fn parse_list(chars: &[char], pos: &mut usize) -> Result<Vec<(Letter, PlanarTree)>> {
    let mut out = Vec::new();
    loop {
        let start = *pos;
        while *pos < chars.len() && !"(),|.".contains(chars[*pos]) && !chars[*pos].is_whitespace() {
            *pos += 1;
        }
        if *pos == start {
            return Err(match chars.get(*pos) {
                Some(c) => Error::parse(*pos, format!("expected an edge letter, found {c:?}")),
                None => Error::parse(*pos, "expected an edge letter"),
            });
        }
        let symbol: String = chars[start..*pos].iter().collect();
        let letter = Letter::new(&symbol).map_err(|_| Error::parse(start, format!("invalid letter {symbol:?}")))?;
        let mut sub = PlanarTree::point();
        if chars.get(*pos) == Some(&'(') {
            *pos += 1;
            sub = PlanarTree {
                children: parse_list(chars, pos)?,
            };
            if chars.get(*pos) != Some(&')') {
                return Err(Error::parse(*pos, "missing closing parenthesis"));
            }
            *pos += 1;
        }
        out.push((letter, sub));
        if chars.get(*pos) == Some(&',') {
            *pos += 1;
        } else {
            return Ok(out);
        }
    }
}

/// The first obstruction to `w` being unlaced, as a 1-based position and
/// a reason.
pub fn unlaced_violation(w: &Word) -> Option<(usize, String)> {
    let letters = w.letters();
    let mut stack: Vec<&Letter> = Vec::new();
    let mut closed = BTreeSet::new();
    for (k, a) in letters.iter().enumerate() {
        if closed.contains(a) {
            return Some((k + 1, format!("letter {a} occurs more than twice")));
        }
        if let Some(depth) = stack.iter().rposition(|b| *b == a) {
            if depth + 1 != stack.len() {
                return Some((k + 1, format!("letters {a} and {} interleave", stack[stack.len() - 1])));
            }
            stack.pop();
            closed.insert(a.clone());
        } else {
            stack.push(a);
        }
    }
    stack
        .first()
        .map(|a| (w.len(), format!("letter {a} occurs only once")))
}

/// Each letter occurs 0 or 2 times and no two letters form `ABAB`.
pub fn is_unlaced(w: &Word) -> bool {
    unlaced_violation(w).is_none()
}

pub fn tree_to_word(t: &PlanarTree) -> Word {
    t.to_word()
}

/// The unique tree with boundary word `w`.
pub fn word_to_tree(w: &Word) -> Result<PlanarTree> {
    if let Some((position, reason)) = unlaced_violation(w) {
        return Err(Error::NotUnlaced {
            word: w.to_string(),
            position,
            reason,
        });
    }
    fn build(letters: &[Letter]) -> PlanarTree {
        let mut children = Vec::new();
        let mut k = 0;
        while k < letters.len() {
            let e = &letters[k];
            let close = k + 1 + letters[k + 1..].iter().position(|b| b == e).expect("unlaced");
            children.push((e.clone(), build(&letters[k + 1..close])));
            k = close + 1;
        }
        PlanarTree { children }
    }
    Ok(build(w.letters()))
}

/// A finite sequence of planar trees; the empty forest is the unit.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Forest(Vec<PlanarTree>);

impl Forest {
    pub fn new(trees: Vec<PlanarTree>) -> Self {
        Forest(trees)
    }

    pub fn single(t: PlanarTree) -> Self {
        Forest(vec![t])
    }

    pub fn trees(&self) -> &[PlanarTree] {
        &self.0
    }

    pub fn edge_count(&self) -> usize {
        self.0.iter().map(PlanarTree::edge_count).sum()
    }

    /// The phrase of boundary words; a point becomes `φ`.
    pub fn to_phrase(&self) -> Phrase {
        Phrase::from_words(self.0.iter().map(PlanarTree::to_word).collect())
    }
}

impl Monoid for Forest {
    fn unit() -> Self {
        Forest::default()
    }
    fn concat(&self, other: &Self) -> Self {
        Forest(self.0.iter().chain(&other.0).cloned().collect())
    }
}

impl fmt::Display for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        f.write_str("(")?;
        for (k, t) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("|")?;
            }
            write!(f, "{t}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Forest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Forest{self}")
    }
}

/// Parses `1` or `(t1|t2|...)`.
impl FromStr for Forest {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "1" {
            return Ok(Forest::default());
        }
        let inner = text
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| Error::parse(0, "a forest is 1 or (t1|t2|...)"))?;
        let mut trees = Vec::new();
        let mut offset = 1;
        for part in inner.split('|') {
            trees.push(part.parse().map_err(|e| match e {
                Error::Parse { position, message } => Error::parse(offset + position, message),
                other => other,
            })?);
            offset += part.chars().count() + 1;
        }
        Ok(Forest(trees))
    }
}

/// Admissible cuts of `t` as (pruned subtrees in planar order, trunk).
fn admissible(t: &PlanarTree) -> Vec<(Vec<PlanarTree>, PlanarTree)> {
    // For each child edge: keep it (recursing into its subtree) or cut it
    // (pruning its whole subtree and removing the edge).
    let mut acc: Vec<(Vec<PlanarTree>, Vec<(Letter, PlanarTree)>)> = vec![(Vec::new(), Vec::new())];
    for (e, sub) in &t.children {
        let mut next = Vec::new();
        for (pruned, trunk) in &acc {
            for (sub_pruned, sub_trunk) in admissible(sub) {
                let mut p = pruned.clone();
                p.extend(sub_pruned);
                let mut tr = trunk.clone();
                tr.push((e.clone(), sub_trunk));
                next.push((p, tr));
            }
            let mut p = pruned.clone();
            p.push(sub.clone());
            next.push((p, trunk.clone()));
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(p, children)| (p, PlanarTree { children }))
        .collect()
}

/// The admissible-cut coproduct of one tree:
/// `t ⊗ 1 + Σ_c P^c(t) ⊗ R^c(t)`, the empty cut giving `1 ⊗ t`.
pub fn ck_coproduct_tree(t: &PlanarTree, ring: RingMode) -> ModuleElement<Tensor<Forest, Forest>> {
    let mut out = ModuleElement::basis(Tensor(Forest::single(t.clone()), Forest::default()), ring);
    for (pruned, trunk) in admissible(t) {
        out.add_int(Tensor(Forest(pruned), Forest::single(trunk)), 1);
    }
    out
}

/// The admissible-cut coproduct, multiplicative over the trees of a forest.
pub fn ck_coproduct(f: &Forest, ring: RingMode) -> ModuleElement<Tensor<Forest, Forest>> {
    let mut out = ModuleElement::unit(ring);
    for t in &f.0 {
        out = out.checked_mul(&ck_coproduct_tree(t, ring)).expect("one ring");
    }
    out
}

/// Encodes each tensor factor by its phrase of boundary words.
pub fn encode(x: &ModuleElement<Tensor<Forest, Forest>>) -> ModuleElement<Tensor<Phrase, Phrase>> {
    x.map_basis(|Tensor(a, b)| Tensor(a.to_phrase(), b.to_phrase()))
}

/// An undecorated planar tree: the ordered list of child subtrees.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Shape(Vec<Shape>);

impl Shape {
    pub fn edge_count(&self) -> usize {
        self.0.iter().map(|s| 1 + s.edge_count()).sum()
    }

    /// Decorates edges in preorder with `letters`, which must be at least
    /// as many as the edges.
    pub fn label(&self, letters: &[Letter]) -> PlanarTree {
        fn go(s: &Shape, letters: &[Letter], next: &mut usize) -> PlanarTree {
            let mut children = Vec::new();
            for child in &s.0 {
                let e = letters[*next].clone();
                *next += 1;
                children.push((e, go(child, letters, next)));
            }
            PlanarTree { children }
        }
        go(self, letters, &mut 0)
    }
}

/// All planar shapes with exactly `n` edges.
pub fn planar_shapes(n: usize) -> Vec<Shape> {
    let mut table: Vec<Vec<Shape>> = vec![vec![Shape(Vec::new())]];
    for m in 1..=n {
        let mut shapes = Vec::new();
        // First child's subtree has s edges; the rest of the root uses m-1-s.
        for s in 0..m {
            for first in &table[s] {
                for rest in &table[m - 1 - s] {
                    let mut children = vec![first.clone()];
                    children.extend(rest.0.iter().cloned());
                    shapes.push(Shape(children));
                }
            }
        }
        table.push(shapes);
    }
    table.swap_remove(n)
}

fn arrangements(letters: &[Letter], n: usize, acc: &mut Vec<Letter>, used: &mut Vec<bool>, out: &mut Vec<Vec<Letter>>) {
    if acc.len() == n {
        out.push(acc.clone());
        return;
    }
    for k in 0..letters.len() {
        if !used[k] {
            used[k] = true;
            acc.push(letters[k].clone());
            arrangements(letters, n, acc, used, out);
            acc.pop();
            used[k] = false;
        }
    }
}

/// Every decorated tree with exactly `n` edges whose labels are distinct
/// letters from `letters`.
pub fn decorated_trees(letters: &[Letter], n: usize) -> Vec<PlanarTree> {
    let mut labelings = Vec::new();
    arrangements(letters, n, &mut Vec::new(), &mut vec![false; letters.len()], &mut labelings);
    planar_shapes(n)
        .iter()
        .flat_map(|s| labelings.iter().map(move |l| s.label(l)))
        .collect()
}
