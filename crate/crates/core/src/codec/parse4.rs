//! Parse IV: replace repeated token sequences with header-defined aliases.
//!
//! Candidates are the distinct repeated substrings of the stream, grouped as
//! LCP intervals of a suffix array. Every interval stands for the lengths
//! between its parent's depth (exclusive) and its own depth, which share one
//! occurrence set. Selection is greedy by net byte saving, with ties going
//! to the earliest first occurrence and then the shorter sequence. Savings
//! only shrink as positions get covered, so a max-heap of stale keys that is
//! re-evaluated on pop yields the exact greedy choice.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use super::container::{AliasDefinition, ALIAS_BASE, MAX_ALIASES, MAX_EXPANSION};
use crate::index_space::TokenIndex;

/// Suffix array by prefix doubling.
fn suffix_array(s: &[TokenIndex]) -> Vec<u32> {
    let n = s.len();
    let mut sa: Vec<u32> = (0..n as u32).collect();
    let mut rank: Vec<u32> = s.iter().map(|t| t.0 as u32).collect();
    let mut next = vec![0u32; n];
    let mut k = 1;
    loop {
        let key = |i: u32| {
            let i = i as usize;
            let second = rank.get(i + k).map_or(0, |&r| r as u64 + 1);
            ((rank[i] as u64) << 32) | second
        };
        sa.sort_unstable_by_key(|&i| key(i));
        next[sa[0] as usize] = 0;
        for w in 1..n {
            let bump = (key(sa[w - 1]) != key(sa[w])) as u32;
            next[sa[w] as usize] = next[sa[w - 1] as usize] + bump;
        }
        std::mem::swap(&mut rank, &mut next);
        if rank[sa[n - 1] as usize] as usize == n - 1 || k >= n {
            return sa;
        }
        k *= 2;
    }
}

/// Kasai LCP: `lcp[r]` is the common prefix of suffixes `sa[r-1]` and `sa[r]`.
fn lcp_array(s: &[TokenIndex], sa: &[u32]) -> Vec<u32> {
    let n = s.len();
    let mut rank = vec![0u32; n];
    for (r, &i) in sa.iter().enumerate() {
        rank[i as usize] = r as u32;
    }
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        let r = rank[i] as usize;
        if r == 0 {
            h = 0;
            continue;
        }
        let j = sa[r - 1] as usize;
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[r] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

#[derive(Clone, Copy, Debug)]
struct Interval {
    lb: u32,
    rb: u32,
    min_len: u16,
    max_len: u16,
}

/// Bottom-up LCP interval enumeration over depths capped at `MAX_EXPANSION`.
fn intervals(lcp: &[u32]) -> Vec<Interval> {
    let n = lcp.len();
    let cap = |v: u32| v.min(MAX_EXPANSION as u32);
    let mut out = Vec::new();
    // (depth, left bound)
    let mut stack: Vec<(u32, u32)> = vec![(0, 0)];
    for i in 1..=n {
        let cur = lcp.get(i).map_or(0, |&v| cap(v));
        let mut lb = i as u32 - 1;
        while cur < stack.last().expect("root").0 {
            let (depth, left) = stack.pop().expect("non-root");
            lb = left;
            let parent = cur.max(stack.last().expect("root").0);
            let min_len = (parent + 1).max(2);
            if min_len <= depth {
                out.push(Interval {
                    lb: left,
                    rb: i as u32 - 1,
                    min_len: min_len as u16,
                    max_len: depth as u16,
                });
            }
        }
        if cur > stack.last().expect("root").0 {
            stack.push((cur, lb));
        }
    }
    out
}

type Key = (i64, Reverse<u32>, Reverse<u16>);

fn saving(len: usize, count: usize) -> i64 {
    // each occurrence shrinks from len tokens to one; the record costs 3 + 2*len bytes
    2 * (len as i64 - 1) * count as i64 - 3 - 2 * len as i64
}

struct Selector<'a> {
    sa: &'a [u32],
    /// Uncovered tokens available from each position, capped.
    room: Vec<u16>,
    scratch: Vec<u32>,
}

impl Selector<'_> {
    fn positions(&mut self, iv: &Interval) -> &[u32] {
        self.scratch.clear();
        self.scratch
            .extend_from_slice(&self.sa[iv.lb as usize..=iv.rb as usize]);
        self.scratch.sort_unstable();
        &self.scratch
    }

    /// Greedy left-to-right non-overlapping occurrences of length `len`.
    fn occurrences(
        room: &[u16],
        positions: &[u32],
        len: usize,
        mut take: impl FnMut(u32),
    ) -> usize {
        let mut count = 0;
        let mut free_from = 0u32;
        for &p in positions {
            if p >= free_from && room[p as usize] as usize >= len {
                count += 1;
                free_from = p + len as u32;
                take(p);
            }
        }
        count
    }

    fn best(&mut self, iv: &Interval) -> Option<Key> {
        let room = std::mem::take(&mut self.room);
        let positions = self.positions(iv);
        let mut best: Option<Key> = None;
        for len in iv.min_len as usize..=iv.max_len as usize {
            if saving(len, positions.len()) <= 0 {
                continue;
            }
            let mut first = None;
            let count = Self::occurrences(&room, positions, len, |p| {
                first.get_or_insert(p);
            });
            let s = saving(len, count);
            if s > 0 {
                let key = (s, Reverse(first.expect("count > 0")), Reverse(len as u16));
                if best.is_none_or(|b| key > b) {
                    best = Some(key);
                }
            }
        }
        self.room = room;
        best
    }

    fn cover(&mut self, iv: &Interval, len: usize) -> Vec<u32> {
        let room = std::mem::take(&mut self.room);
        let mut taken = Vec::new();
        Self::occurrences(&room, self.positions(iv), len, |p| taken.push(p));
        self.room = room;
        for &p in &taken {
            let p = p as usize;
            self.room[p..p + len].fill(0);
            for q in p.saturating_sub(MAX_EXPANSION)..p {
                let d = (p - q) as u16;
                if self.room[q] > d {
                    self.room[q] = d;
                }
            }
        }
        taken
    }
}

/// Returns the alias table and the rewritten stream. Expanding every alias
/// of the output reproduces `tokens`.
pub fn compress_parse4(tokens: &[TokenIndex]) -> (Vec<AliasDefinition>, Vec<TokenIndex>) {
    let n = tokens.len();
    if n < 4 {
        return (Vec::new(), tokens.to_vec());
    }
    let sa = suffix_array(tokens);
    let lcp = lcp_array(tokens, &sa);
    let ivs = intervals(&lcp);
    drop(lcp);

    let room = (0..n).map(|i| (n - i).min(MAX_EXPANSION) as u16).collect();
    let mut sel = Selector {
        sa: &sa,
        room,
        scratch: Vec::new(),
    };
    let mut heap: BinaryHeap<(Key, u32)> = ivs
        .iter()
        .enumerate()
        .filter_map(|(i, iv)| sel.best(iv).map(|k| (k, i as u32)))
        .collect();

    let mut aliases = Vec::new();
    let mut starts: Vec<Option<(u16, u16)>> = vec![None; n];
    while aliases.len() < MAX_ALIASES {
        let Some((stale, id)) = heap.pop() else { break };
        let iv = ivs[id as usize];
        let Some(key) = sel.best(&iv) else { continue };
        if key < stale && heap.peek().is_some_and(|(top, _)| *top > key) {
            heap.push((key, id));
            continue;
        }
        let len = key.2 .0 as usize;
        let slot = aliases.len() as u16;
        let taken = sel.cover(&iv, len);
        let first = taken[0] as usize;
        for &p in &taken {
            starts[p as usize] = Some((slot, len as u16));
        }
        aliases.push(AliasDefinition {
            alias: TokenIndex(ALIAS_BASE + slot),
            expansion: tokens[first..first + len].to_vec(),
        });
        // leftover occurrences may still pay for another alias
        heap.push((key, id));
    }

    let mut out = Vec::with_capacity(n);
    let mut i = 0;
    while i < n {
        match starts[i] {
            Some((slot, len)) => {
                out.push(TokenIndex(ALIAS_BASE + slot));
                i += len as usize;
            }
            None => {
                out.push(tokens[i]);
                i += 1;
            }
        }
    }
    (aliases, out)
}
