#![allow(dead_code)]

use std::collections::HashSet;

use absentseq::classify::is_mas;
use absentseq::longest::{longest_mas, longest_mas_length};
use absentseq::mas_direct::{enumerate_mas, enumerate_mas_incremental};
use absentseq::mas_skeleton::{build_mas_skeleton, count_mas, enumerate_mas_via_skeleton};
use absentseq::oracle;
use absentseq::sas::{build_sas_skeleton, count_sas, enumerate_sas};
use absentseq::script::{EditScript, Expand, Replayer};
use absentseq::skeleton::{validate, LeveledGraph};
use absentseq::{AlphabetMode, Letter, Word, WordIndex};
use num_bigint::BigUint;
use rand::Rng;

pub fn index(s: &str) -> WordIndex {
    WordIndex::new(Word::from_str_bytes(s).unwrap())
}

pub fn index_of(symbols: &[u64]) -> WordIndex {
    WordIndex::new(Word::from_symbols(symbols.iter().copied(), AlphabetMode::Ints).unwrap())
}

pub fn render(ix: &WordIndex, vs: &[Vec<Letter>]) -> Vec<String> {
    vs.iter().map(|v| ix.word().render_string(v)).collect()
}

pub fn random_word(rng: &mut impl Rng, n: usize, sigma: u64) -> Vec<u64> {
    (0..n).map(|_| rng.gen_range(1..=sigma)).collect()
}

/// Every word of length `1..=max_len` over `1..=sigma`.
pub fn all_words(sigma: u64, max_len: usize) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<u64>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::with_capacity(layer.len() * sigma as usize);
        for w in &layer {
            for a in 1..=sigma {
                let mut u = w.clone();
                u.push(a);
                next.push(u);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn sorted_unique(name: &str, vs: &[Vec<Letter>]) -> Result<Vec<Vec<Letter>>, String> {
    let set: HashSet<&Vec<Letter>> = vs.iter().collect();
    if set.len() != vs.len() {
        return Err(format!("{name}: duplicates in stream"));
    }
    let mut out = vs.to_vec();
    out.sort();
    Ok(out)
}

fn replay<E: Expand>(
    name: &str,
    r: &mut Replayer<'_, E>,
    scripts: impl Iterator<Item = EditScript<E::Node>>,
    explicit: &[Vec<Letter>],
) -> Result<(), String> {
    let mut k = 0;
    for s in scripts {
        if s.segments.len() > 4 {
            return Err(format!("{name}: script with {} segments", s.segments.len()));
        }
        let got = r.apply(&s);
        if explicit.get(k).map(|v| v.as_slice()) != Some(got) {
            return Err(format!("{name}: replayed output {k} differs"));
        }
        k += 1;
    }
    if k != explicit.len() {
        return Err(format!("{name}: {k} scripts for {} words", explicit.len()));
    }
    Ok(())
}

/// Explicit streams of every engine agree with the oracles.
pub fn check_against_oracle(ix: &WordIndex) -> Result<(), String> {
    let w = ix.word().letters();
    let n = w.len();
    let want_sas = if n <= oracle::SAS_LIMIT { oracle::brute_sas(w) } else { oracle::sas_by_conditions(w) }
        .map_err(|e| e.to_string())?;
    let want_mas = if n <= oracle::MAS_LIMIT { oracle::brute_mas(w) } else { oracle::mas_by_conditions(w) }
        .map_err(|e| e.to_string())?;

    let sk = build_sas_skeleton(ix);
    let sas: Vec<Vec<Letter>> = enumerate_sas(&sk).collect();
    if sorted_unique("sas", &sas)? != want_sas {
        return Err("sas: set differs from oracle".into());
    }
    if count_sas(&sk) != BigUint::from(want_sas.len()) {
        return Err("count_sas differs from oracle".into());
    }

    let mk = build_mas_skeleton(ix);
    let mas: Vec<Vec<Letter>> = enumerate_mas_via_skeleton(&mk).collect();
    if sorted_unique("mas skeleton", &mas)? != want_mas {
        return Err("mas skeleton: set differs from oracle".into());
    }
    if count_mas(&mk) != BigUint::from(want_mas.len()) {
        return Err("count_mas differs from oracle".into());
    }
    let direct: Vec<Vec<Letter>> = enumerate_mas(ix).collect();
    if sorted_unique("mas direct", &direct)? != want_mas {
        return Err("mas direct: set differs from oracle".into());
    }

    let longest = want_mas.iter().map(|v| v.len()).max().unwrap();
    if longest_mas_length(ix) != longest {
        return Err("longest_mas_length differs from oracle".into());
    }
    let v = longest_mas(ix);
    if v.len() != longest || !is_mas(ix, &v).unwrap() {
        return Err("longest_mas is not a longest MAS".into());
    }
    Ok(())
}

/// Incremental streams replay to the explicit ones, element for element.
pub fn check_incremental(ix: &WordIndex) -> Result<(), String> {
    let sk = build_sas_skeleton(ix);
    let sas: Vec<Vec<Letter>> = enumerate_sas(&sk).collect();
    replay("sas", &mut sk.replayer(), sk.scripts(), &sas)?;

    let mk = build_mas_skeleton(ix);
    let mas: Vec<Vec<Letter>> = enumerate_mas_via_skeleton(&mk).collect();
    replay("mas skeleton", &mut mk.replayer(), mk.scripts(), &mas)?;

    let direct: Vec<Vec<Letter>> = enumerate_mas(ix).collect();
    replay("mas direct", &mut Replayer::new(ix), enumerate_mas_incremental(ix), &direct)?;
    Ok(())
}

pub fn check_skeletons_valid(ix: &WordIndex) -> Result<(), String> {
    let v = validate(&build_sas_skeleton(ix).dag().to_graph());
    if !v.is_empty() {
        return Err(format!("sas skeleton invalid: {v:?}"));
    }
    let v = validate(&build_mas_skeleton(ix).dag().to_graph());
    if !v.is_empty() {
        return Err(format!("mas skeleton invalid: {v:?}"));
    }
    Ok(())
}

/// A random valid skeleton with at most `max_nodes` nodes, ids shuffled.
pub fn random_skeleton(rng: &mut impl Rng, max_nodes: usize) -> LeveledGraph {
    let m = rng.gen_range(1..=7usize.min(max_nodes - 1));
    let mut budget = max_nodes - 2 - (m - 1);
    let mut levels = vec![0usize];
    let mut by_level: Vec<Vec<usize>> = vec![vec![0]];
    for l in 1..m {
        let extra = rng.gen_range(0..=budget.min(8));
        budget -= extra;
        let nodes: Vec<usize> = (0..=extra).map(|t| levels.len() + t).collect();
        levels.extend(std::iter::repeat(l).take(nodes.len()));
        by_level.push(nodes);
    }
    by_level.push(vec![levels.len()]);
    levels.push(m);

    let mut edges = Vec::new();
    for l in 1..m {
        let mut chain = by_level[l].clone();
        for t in (1..chain.len()).rev() {
            chain.swap(t, rng.gen_range(0..=t));
        }
        for pair in chain.windows(2) {
            edges.push((pair[0], pair[1]));
        }
        for &v in &by_level[l] {
            let to = rng.gen_range(l + 1..=m);
            let targets = &by_level[to];
            edges.push((v, targets[rng.gen_range(0..targets.len())]));
        }
    }
    for l in 1..=m {
        if rng.gen_bool(0.5) || (l == 1 && rng.gen_bool(0.5)) {
            let targets = &by_level[l];
            edges.push((0, targets[rng.gen_range(0..targets.len())]));
        }
    }

    let count = levels.len();
    let mut perm: Vec<usize> = (0..count).collect();
    for t in (1..count).rev() {
        perm.swap(t, rng.gen_range(0..=t));
    }
    let mut shuffled = vec![0; count];
    for v in 0..count {
        shuffled[perm[v]] = levels[v];
    }
    LeveledGraph { levels: shuffled, edges: edges.into_iter().map(|(u, v)| (perm[u], perm[v])).collect() }
}

/// All source-to-sink paths of the expanded graph, read off the edge list.
pub fn brute_paths(g: &LeveledGraph) -> Vec<Vec<usize>> {
    let n = g.levels.len();
    let m = *g.levels.iter().max().unwrap();
    let source = g.levels.iter().position(|&l| l == 0).unwrap();
    let sink = g.levels.iter().position(|&l| l == m).unwrap();
    let mut sibling = vec![usize::MAX; n];
    let mut down: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in &g.edges {
        if g.levels[u] == g.levels[v] {
            sibling[u] = v;
        } else {
            down[u].push(v);
        }
    }
    fn go(
        v: usize,
        sink: usize,
        down: &[Vec<usize>],
        sibling: &[usize],
        path: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if v == sink {
            out.push(path.clone());
            return;
        }
        for &t in &down[v] {
            let mut c = t;
            while c != usize::MAX {
                path.push(c);
                go(c, sink, down, sibling, path, out);
                path.pop();
                c = sibling[c];
            }
        }
    }
    let mut out = Vec::new();
    go(source, sink, &down, &sibling, &mut vec![source], &mut out);
    out
}
