//! Text forms of elements: cycle-link notation and the flat `a->b;c->d` form.
//!
//! In cycle-link notation a cycle `(a,b,c)` sends `a→b→c→a` and a link
//! `[a,b,c]` sends `a→b→c` with `c` unmapped and nothing mapped onto `a`. Every
//! point appears exactly once. The canonical form prints cycles first, then
//! links; cycles start at their minimum; blocks of each kind are sorted by
//! their minimum; fixed points are written out as `(x)`.

use crate::error::{Result, RookError};
use crate::rook::PartialPermutation;

#[derive(Debug, Clone, PartialEq, Eq)]
enum Block {
    Cycle(Vec<usize>),
    Link(Vec<usize>),
}

impl Block {
    fn min(&self) -> usize {
        match self {
            Block::Cycle(v) | Block::Link(v) => *v.iter().min().expect("nonempty block"),
        }
    }
}

fn blocks(s: &PartialPermutation) -> Vec<Block> {
    let n = s.n();
    let ran = s.range();
    let mut seen = vec![false; n + 1];
    let mut links = Vec::new();
    for start in 1..=n {
        if ran.contains(start) {
            continue;
        }
        let mut chain = vec![start];
        seen[start] = true;
        let mut cur = start;
        while let Some(next) = s.apply(cur) {
            chain.push(next);
            seen[next] = true;
            cur = next;
        }
        links.push(Block::Link(chain));
    }
    let mut cycles = Vec::new();
    for start in 1..=n {
        if seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut cur = s.apply(start).expect("points off links lie on cycles");
        while cur != start {
            cycle.push(cur);
            seen[cur] = true;
            cur = s.apply(cur).expect("points off links lie on cycles");
        }
        cycles.push(Block::Cycle(cycle));
    }
    // cycles were discovered from their minimum already
    cycles.sort_by_key(Block::min);
    links.sort_by_key(Block::min);
    cycles.extend(links);
    cycles
}

/// Canonical cycle-link string, e.g. `(4)[1,3,2]`.
pub fn print_cycle_link(s: &PartialPermutation) -> String {
    let mut out = String::new();
    for b in blocks(s) {
        let (open, close, items) = match &b {
            Block::Cycle(v) => ('(', ')', v),
            Block::Link(v) => ('[', ']', v),
        };
        out.push(open);
        let parts: Vec<String> = items.iter().map(|x| x.to_string()).collect();
        out.push_str(&parts.join(","));
        out.push(close);
    }
    out
}

/// Parses cycle-link notation for an element of `R_n`.
pub fn parse_cycle_link(text: &str, n: usize) -> Result<PartialPermutation> {
    let err = |msg: String| RookError::Parse(format!("cycle-link `{text}`: {msg}"));
    let mut images: Vec<Option<usize>> = vec![None; n];
    let mut seen = vec![false; n + 1];
    let mut chars = text.chars().filter(|c| !c.is_whitespace()).peekable();
    let mut count = 0;
    while let Some(open) = chars.next() {
        let close = match open {
            '(' => ')',
            '[' => ']',
            other => return Err(err(format!("unexpected `{other}`"))),
        };
        let mut body = String::new();
        loop {
            match chars.next() {
                Some(c) if c == close => break,
                Some(c) if c.is_ascii_digit() || c == ',' => body.push(c),
                Some(c) => return Err(err(format!("unexpected `{c}` inside block"))),
                None => return Err(err("unterminated block".into())),
            }
        }
        let mut items = Vec::new();
        for tok in body.split(',') {
            let x: usize = tok
                .parse()
                .map_err(|_| err(format!("bad symbol `{tok}`")))?;
            if x == 0 || x > n {
                return Err(err(format!("symbol {x} is outside 1..={n}")));
            }
            if seen[x] {
                return Err(err(format!("symbol {x} is repeated")));
            }
            seen[x] = true;
            items.push(x);
        }
        for w in items.windows(2) {
            images[w[0] - 1] = Some(w[1]);
        }
        if open == '(' {
            let (first, last) = (items[0], *items.last().expect("nonempty"));
            images[last - 1] = Some(first);
        }
        count += items.len();
    }
    if count != n {
        let missing: Vec<String> = (1..=n)
            .filter(|&x| !seen[x])
            .map(|x| x.to_string())
            .collect();
        return Err(err(format!("missing symbols {}", missing.join(","))));
    }
    PartialPermutation::new(n, &images)
}

/// Flat form: semicolon-separated `x->y` in increasing `x`; empty for the zero map.
pub fn print_flat(s: &PartialPermutation) -> String {
    let parts: Vec<String> = s.pairs().map(|(x, y)| format!("{x}->{y}")).collect();
    parts.join(";")
}

/// Parses the flat `x->y;…` form for an element of `R_n`.
pub fn parse_flat(text: &str, n: usize) -> Result<PartialPermutation> {
    let text = text.trim();
    let mut pairs = Vec::new();
    if !text.is_empty() {
        for item in text.split(';') {
            let (a, b) = item
                .split_once("->")
                .ok_or_else(|| RookError::Parse(format!("mapping `{item}` lacks `->`")))?;
            let x: usize = a
                .trim()
                .parse()
                .map_err(|_| RookError::Parse(format!("bad point `{a}`")))?;
            let y: usize = b
                .trim()
                .parse()
                .map_err(|_| RookError::Parse(format!("bad point `{b}`")))?;
            pairs.push((x, y));
        }
    }
    PartialPermutation::from_pairs(n, &pairs).map_err(|e| match e {
        RookError::InvalidArgument(msg) => RookError::Parse(format!("`{text}`: {msg}")),
        other => other,
    })
}
