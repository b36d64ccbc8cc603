//! w-tree presentations over the trivial diagram: recursive expansion into
//! w1-arrows and surgery into a Gauss diagram.
//!
//! A w-tree is an oriented, beaded, planar binary tree: the head is where
//! surgery inserts under-crossings, the tails mark the strands passing over.
//! Beads are stored mod 2 per edge (two consecutive beads cancel).
//!
//! Expansion rewrites a tree of degree `k >= 2` into the four-block pattern:
//! writing `L`, `R` for the two subtrees at the head-adjacent vertex (in
//! planar order), the emitted blocks are, in order along the strand at the
//! head site,
//!
//! ```text
//!   R*  L*  R  L        (* = bead-toggled copy)
//! ```
//!
//! so that the under-crossings realize the commutator of the subtree words.
//! A bead on the head edge inverts the result: emitted order reversed and
//! every parity toggled. This block order is the module constant pinned by
//! the calibration suite against the invariant tables (the figures alone
//! leave it ambiguous).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::diagram::{Chord, ChordId, EndpointId, GaussDiagram, Sign};
use crate::error::{Error, Result};
use crate::rational::Rational;

/// Attachment point on the trivial diagram: strand index (1-based) and an
/// exact position in `(0, 1)` along it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Site {
    pub strand: usize,
    pub pos: Rational,
}

impl Site {
    pub fn new(strand: usize, pos: Rational) -> Self {
        Site { strand, pos }
    }
}

/// A subtree together with the bead parity of its upper edge (the edge
/// connecting it to its parent vertex, or the head for the root).
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Subtree {
    Tail {
        site: Site,
        bead: bool,
    },
    Node {
        left: alloc::boxed::Box<Subtree>,
        right: alloc::boxed::Box<Subtree>,
        bead: bool,
    },
}

impl Subtree {
    pub fn tail(strand: usize, pos: Rational) -> Subtree {
        Subtree::Tail {
            site: Site::new(strand, pos),
            bead: false,
        }
    }

    pub fn node(left: Subtree, right: Subtree) -> Subtree {
        Subtree::Node {
            left: alloc::boxed::Box::new(left),
            right: alloc::boxed::Box::new(right),
            bead: false,
        }
    }

    pub fn bead(&self) -> bool {
        match self {
            Subtree::Tail { bead, .. } | Subtree::Node { bead, .. } => *bead,
        }
    }

    /// Toggle the bead parity of this subtree's upper edge.
    pub fn toggle_bead(&mut self) {
        match self {
            Subtree::Tail { bead, .. } | Subtree::Node { bead, .. } => *bead = !*bead,
        }
    }

    pub fn with_bead(mut self, on: bool) -> Subtree {
        if on {
            self.toggle_bead();
        }
        self
    }

    /// Number of tails.
    pub fn degree(&self) -> usize {
        match self {
            Subtree::Tail { .. } => 1,
            Subtree::Node { left, right, .. } => left.degree() + right.degree(),
        }
    }

    fn tails<'a>(&'a self, out: &mut Vec<&'a Site>) {
        match self {
            Subtree::Tail { site, .. } => out.push(site),
            Subtree::Node { left, right, .. } => {
                left.tails(out);
                right.tails(out);
            }
        }
    }
}

/// A w-tree for the trivial diagram: head site plus the root subtree. The
/// root's upper-edge bead is the head-edge bead (inversion marker).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WTree {
    pub head: Site,
    pub root: Subtree,
}

impl WTree {
    pub fn new(head: Site, root: Subtree) -> Self {
        WTree { head, root }
    }

    pub fn degree(&self) -> usize {
        self.root.degree()
    }

    /// Head-edge bead: a bead near the head inverts the element.
    pub fn inverted(mut self) -> Self {
        self.root.toggle_bead();
        self
    }

    fn sites(&self) -> Vec<&Site> {
        let mut v = Vec::new();
        self.root.tails(&mut v);
        v.push(&self.head);
        v
    }
}

/// A list of w-trees attached to the trivial diagram of `n` strands.
/// Surgery applies them jointly; stacking order along each strand is given
/// entirely by the positions.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WTreePresentation {
    pub n: usize,
    pub trees: Vec<WTree>,
}

impl WTreePresentation {
    pub fn new(n: usize, trees: Vec<WTree>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidDiagram(
                "strand count must be positive".into(),
            ));
        }
        let p = WTreePresentation { n, trees };
        p.validate()?;
        Ok(p)
    }

    fn validate(&self) -> Result<()> {
        let mut per_strand: BTreeMap<usize, Vec<&Rational>> = BTreeMap::new();
        for t in &self.trees {
            for s in t.sites() {
                if s.strand == 0 || s.strand > self.n {
                    return Err(Error::IndexOutOfRange(format!(
                        "site strand {} of {}",
                        s.strand, self.n
                    )));
                }
                if !s.pos.is_strictly_inside_unit() {
                    return Err(Error::InvalidDiagram(format!(
                        "position {} not strictly inside (0,1)",
                        s.pos
                    )));
                }
                per_strand.entry(s.strand).or_default().push(&s.pos);
            }
        }
        for (strand, mut ps) in per_strand {
            ps.sort();
            if ps.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::InvalidDiagram(format!(
                    "position collision on strand {strand}"
                )));
            }
        }
        Ok(())
    }

    /// All occupied positions, per strand, sorted ascending.
    fn anchors(&self) -> BTreeMap<usize, Vec<Rational>> {
        let mut m: BTreeMap<usize, Vec<Rational>> = BTreeMap::new();
        for t in &self.trees {
            for s in t.sites() {
                m.entry(s.strand).or_default().push(s.pos.clone());
            }
        }
        for v in m.values_mut() {
            v.sort();
        }
        m
    }
}

/// One w1-arrow produced by expansion.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Arrow {
    pub tail: Site,
    pub head: Site,
    pub bead: bool,
}

/// Core recursion: emitted `(tail site, parity)` list of a subtree,
/// not yet applying the subtree's own upper-edge bead.
fn expand_core(t: &Subtree) -> Vec<(&Site, bool)> {
    match t {
        Subtree::Tail { site, .. } => alloc::vec![(site, false)],
        Subtree::Node { left, right, .. } => {
            let blocks: [(&Subtree, bool); 4] =
                [(right, true), (left, true), (right, false), (left, false)];
            let mut out = Vec::new();
            for (sub, toggle) in blocks {
                let mut seq = expand_core(sub);
                if toggle ^ sub.bead() {
                    seq.reverse();
                    for item in &mut seq {
                        item.1 = !item.1;
                    }
                }
                out.extend(seq);
            }
            out
        }
    }
}

/// Fresh-position allocator: hands out strictly increasing positions in the
/// private window `(p, midpoint(p, next_anchor))` of each anchor.
struct Windows {
    anchors: BTreeMap<usize, Vec<Rational>>,
    used: BTreeMap<(usize, usize), u64>, // (strand, anchor idx) -> copies handed out
}

impl Windows {
    fn new(anchors: BTreeMap<usize, Vec<Rational>>) -> Self {
        Windows {
            anchors,
            used: BTreeMap::new(),
        }
    }

    fn fresh(&mut self, site: &Site, total_copies: u64) -> Rational {
        let list = &self.anchors[&site.strand];
        let idx = list
            .iter()
            .position(|p| p == &site.pos)
            .expect("site is an anchor");
        let upper = match list.get(idx + 1) {
            Some(next) => site.pos.midpoint(next),
            None => site.pos.midpoint(&Rational::one()),
        };
        let k = self.used.entry((site.strand, idx)).or_insert(0);
        *k += 1;
        Rational::affine_between(&site.pos, &upper, *k, total_copies + 1)
    }
}

/// Expand a w-tree into its ordered list of w1-arrows, with fresh rational
/// positions obtained by subdivision (order preserved, no floating point).
///
/// Degree-count law: the number of arrows is `N(deg)` with `N(1) = 1` and
/// `N(k) = 2(N(k1) + N(k2))` over the split at the head-adjacent vertex.
pub fn expand(tree: &WTree) -> Vec<Arrow> {
    let single = WTreePresentation {
        n: usize::MAX,
        trees: alloc::vec![tree.clone()],
    };
    let mut windows = Windows::new(single.anchors());
    expand_with_windows(tree, &mut windows)
}

fn expand_with_windows(tree: &WTree, windows: &mut Windows) -> Vec<Arrow> {
    let mut seq = expand_core(&tree.root);
    if tree.root.bead() {
        seq.reverse();
        for item in &mut seq {
            item.1 = !item.1;
        }
    }
    let total = seq.len() as u64;
    let mut copies: BTreeMap<(usize, Rational), u64> = BTreeMap::new();
    for (site, _) in &seq {
        *copies.entry((site.strand, site.pos.clone())).or_insert(0) += 1;
    }
    seq.iter()
        .map(|(site, parity)| Arrow {
            tail: Site::new(
                site.strand,
                windows.fresh(site, copies[&(site.strand, site.pos.clone())]),
            ),
            head: Site::new(tree.head.strand, windows.fresh(&tree.head, total)),
            bead: *parity,
        })
        .collect()
}

/// Surgery of a presentation: each expanded w1-arrow (tail on strand `a`,
/// head on strand `b`, parity `β`) becomes one chord with over endpoint on
/// `a`, under endpoint on `b` and sign `(-1)^β`; endpoints are inserted in
/// position order.
pub fn surgery(p: &WTreePresentation) -> Result<GaussDiagram> {
    p.validate()?;
    let mut windows = Windows::new(p.anchors());
    let mut placed: Vec<(usize, Rational, EndpointId)> = Vec::new();
    let mut chords = BTreeMap::new();
    let mut next_ep = 0u32;
    let mut next_chord = 0u32;
    for tree in &p.trees {
        for arrow in expand_with_windows(tree, &mut windows) {
            let over = EndpointId(next_ep);
            let under = EndpointId(next_ep + 1);
            next_ep += 2;
            placed.push((arrow.tail.strand, arrow.tail.pos, over));
            placed.push((arrow.head.strand, arrow.head.pos, under));
            chords.insert(
                ChordId(next_chord),
                Chord {
                    over,
                    under,
                    sign: if arrow.bead { Sign::Neg } else { Sign::Pos },
                },
            );
            next_chord += 1;
        }
    }
    let mut strands = alloc::vec![Vec::new(); p.n];
    for i in 1..=p.n {
        let mut row: Vec<(Rational, EndpointId)> = placed
            .iter()
            .filter(|(s, _, _)| *s == i)
            .map(|(_, p, e)| (p.clone(), *e))
            .collect();
        row.sort_by(|a, b| a.0.cmp(&b.0));
        if row.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::InvalidDiagram(format!(
                "position collision on strand {i}"
            )));
        }
        strands[i - 1] = row.into_iter().map(|(_, e)| e).collect();
    }
    GaussDiagram::new(strands, chords)
}

// ---- text format ----
//
// Header `strands <n>`, then one tree per line (newlines or `;` separate):
//
//     [<subtree> <head-site>]
//
// where a site is `<strand>@<p>/<q>` (rational in lowest terms, 0 < p/q < 1),
// a subtree is a site or `(<subtree> <subtree>)`, and any site or `(...)`
// group may be suffixed by `*` per bead on its upper edge. Parentheses
// around a single item are allowed and transparent. The head is written
// last; its `*` is the head-edge bead (inversion).

pub fn emit_wtree(p: &WTreePresentation) -> String {
    let mut out = format!("strands {}\n", p.n);
    for t in &p.trees {
        out.push('[');
        emit_subtree(&t.root, false, &mut out);
        out.push(' ');
        out.push_str(&format!("{}@{}", t.head.strand, t.head.pos));
        if t.root.bead() {
            out.push('*');
        }
        out.push_str("]\n");
    }
    out
}

fn emit_subtree(t: &Subtree, with_own_bead: bool, out: &mut String) {
    match t {
        Subtree::Tail { site, bead } => {
            out.push_str(&format!("{}@{}", site.strand, site.pos));
            if with_own_bead && *bead {
                out.push('*');
            }
        }
        Subtree::Node { left, right, bead } => {
            out.push('(');
            emit_subtree(left, true, out);
            out.push(' ');
            emit_subtree(right, true, out);
            out.push(')');
            if with_own_bead && *bead {
                out.push('*');
            }
        }
    }
}

pub fn parse_wtree(text: &str) -> Result<WTreePresentation> {
    let mut n: Option<usize> = None;
    let mut trees = Vec::new();
    for raw in text.split(['\n', ';']) {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("strands") {
            if n.is_some() {
                return Err(Error::Parse("duplicate `strands` header".into()));
            }
            n = Some(
                rest.trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad strand count `{}`", rest.trim())))?,
            );
            continue;
        }
        if n.is_none() {
            return Err(Error::Parse("missing `strands <n>` header".into()));
        }
        trees.push(parse_tree_line(line)?);
    }
    let n = n.ok_or_else(|| Error::Parse("missing `strands <n>` header".into()))?;
    WTreePresentation::new(n, trees)
}

fn parse_tree_line(line: &str) -> Result<WTree> {
    let inner = line
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(|| Error::Parse(format!("tree must be bracketed: `{line}`")))?;
    let mut toks = tokenize(inner)?;
    let mut items = Vec::new();
    while !toks.is_empty() {
        items.push(parse_subtree(&mut toks)?);
    }
    if items.len() != 2 {
        return Err(Error::Parse(format!(
            "tree needs exactly a subtree and a head site, got {} items",
            items.len()
        )));
    }
    let head_part = items.pop().unwrap();
    let mut root = items.pop().unwrap().into_subtree();
    let (head, head_star) = match head_part {
        Parsed::Leaf { site, bead } => (site, bead),
        Parsed::Group { mut children, bead } => {
            if children.len() != 1 {
                return Err(Error::Parse("head must be a single site".into()));
            }
            match children.pop().unwrap() {
                Parsed::Leaf { site, bead: inner } => (site, bead ^ inner),
                _ => return Err(Error::Parse("head must be a single site".into())),
            }
        }
    };
    // A star on the head site marks the head edge, the same edge as the
    // root subtree's upper edge; parities add mod 2.
    if head_star {
        root.toggle_bead();
    }
    Ok(WTree { head, root })
}

#[derive(Debug)]
enum Tok {
    Open,
    Close,
    Star,
    Site(usize, Rational),
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let mut out = Vec::new();
    let mut buf = String::new();
    let flush = |buf: &mut String, out: &mut Vec<Tok>| -> Result<()> {
        if buf.is_empty() {
            return Ok(());
        }
        let (strand, pos) = buf
            .split_once('@')
            .ok_or_else(|| Error::Parse(format!("bad site `{buf}`")))?;
        let strand: usize = strand
            .parse()
            .map_err(|_| Error::Parse(format!("bad strand `{strand}`")))?;
        let pos: Rational = pos.parse().map_err(Error::Parse)?;
        out.push(Tok::Site(strand, pos));
        buf.clear();
        Ok(())
    };
    for ch in s.chars() {
        match ch {
            '(' => {
                flush(&mut buf, &mut out)?;
                out.push(Tok::Open);
            }
            ')' => {
                flush(&mut buf, &mut out)?;
                out.push(Tok::Close);
            }
            '*' => {
                flush(&mut buf, &mut out)?;
                out.push(Tok::Star);
            }
            c if c.is_whitespace() => flush(&mut buf, &mut out)?,
            c => buf.push(c),
        }
    }
    flush(&mut buf, &mut out)?;
    out.reverse(); // use as a stack
    Ok(out)
}

enum Parsed {
    Leaf { site: Site, bead: bool },
    Group { children: Vec<Parsed>, bead: bool },
}

impl Parsed {
    fn into_subtree(self) -> Subtree {
        match self {
            Parsed::Leaf { site, bead } => Subtree::Tail { site, bead },
            Parsed::Group { children, bead } => {
                let mut subs: Vec<Subtree> =
                    children.into_iter().map(Parsed::into_subtree).collect();
                if subs.len() == 1 {
                    // transparent parentheses: bead adds to the child edge
                    let mut c = subs.pop().unwrap();
                    if bead {
                        c.toggle_bead();
                    }
                    c
                } else {
                    let right = subs.pop().unwrap();
                    let left = subs.pop().unwrap();
                    Subtree::Node {
                        left: alloc::boxed::Box::new(left),
                        right: alloc::boxed::Box::new(right),
                        bead,
                    }
                }
            }
        }
    }
}

fn parse_subtree(toks: &mut Vec<Tok>) -> Result<Parsed> {
    let t = toks
        .pop()
        .ok_or_else(|| Error::Parse("unexpected end of tree".into()))?;
    let mut node = match t {
        Tok::Site(strand, pos) => Parsed::Leaf {
            site: Site::new(strand, pos),
            bead: false,
        },
        Tok::Open => {
            let mut children = Vec::new();
            loop {
                match toks.last() {
                    Some(Tok::Close) => {
                        toks.pop();
                        break;
                    }
                    None => return Err(Error::Parse("unbalanced `(`".into())),
                    _ => children.push(parse_subtree(toks)?),
                }
            }
            if children.is_empty() || children.len() > 2 {
                return Err(Error::Parse(format!(
                    "group must hold 1 or 2 subtrees, got {}",
                    children.len()
                )));
            }
            Parsed::Group {
                children,
                bead: false,
            }
        }
        Tok::Close => return Err(Error::Parse("unbalanced `)`".into())),
        Tok::Star => return Err(Error::Parse("dangling `*`".into())),
    };
    while matches!(toks.last(), Some(Tok::Star)) {
        toks.pop();
        match &mut node {
            Parsed::Leaf { bead, .. } | Parsed::Group { bead, .. } => *bead = !*bead,
        }
    }
    Ok(node)
}
