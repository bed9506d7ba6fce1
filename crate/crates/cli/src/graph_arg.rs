//! `--graph` arguments: a named family, a graph6 string, `@file` or `-` for stdin.

use anyhow::{anyhow, bail, Context, Result};
use equiangular::graph::{self, Graph};
use std::io::Read;

pub const HELP: &str = "\
petersen | complete:N | path:N | cycle:N | star:LEAVES | spider:L1,L2,.. | caterpillar:P1,P2,.. | \
kneser:M:K | circulant:N:C1,C2,.. | random-regular:N:K:SEED | random-cubic:N:SEED | \
g6:STRING | @FILE (graph6) | - (graph6 on stdin)";

fn num(s: &str) -> Result<usize> {
    s.parse().with_context(|| format!("expected a number, got {s:?}"))
}

fn list(s: &str) -> Result<Vec<usize>> {
    s.split(',').map(num).collect()
}

fn first_line(text: &str) -> Result<&str> {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty())
        .ok_or_else(|| anyhow!("no graph6 line found"))
}

pub fn parse(arg: &str) -> Result<Graph> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        return Ok(graph::graph6_decode(first_line(&buf)?)?);
    }
    if let Some(path) = arg.strip_prefix('@') {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {path}"))?;
        return Ok(graph::graph6_decode(first_line(&text)?)?);
    }
    if let Some(g6) = arg.strip_prefix("g6:") {
        return Ok(graph::graph6_decode(g6)?);
    }
    let parts: Vec<&str> = arg.split(':').collect();
    let g = match parts[..] {
        ["petersen"] => graph::petersen(),
        ["complete", n] => graph::complete(num(n)?)?,
        ["path", n] => graph::path(num(n)?)?,
        ["cycle", n] => graph::cycle(num(n)?)?,
        ["star", n] => graph::star(num(n)?)?,
        ["spider", legs] => graph::spider(&list(legs)?)?,
        ["caterpillar", p] => graph::caterpillar(&list(p)?)?,
        ["kneser", m, k] => graph::kneser(num(m)?, num(k)?)?,
        ["circulant", n, c] => graph::circulant(num(n)?, &list(c)?)?,
        ["random-regular", n, k, seed] => graph::random_regular(num(n)?, num(k)?, num(seed)? as u64)?,
        ["random-cubic", n, seed] => graph::random_connected_regular(num(n)?, 3, num(seed)? as u64)?,
        ["random-regular" | "random-cubic", ..] => bail!("random graphs need an explicit seed: {HELP}"),
        _ => graph::graph6_decode(arg).map_err(|_| anyhow!("unrecognised graph {arg:?}; expected {HELP}"))?,
    };
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse("petersen").unwrap().order(), 10);
        assert_eq!(parse("kneser:8:2").unwrap().order(), 28);
        assert_eq!(parse("spider:1,2,2").unwrap().order(), 6);
        assert_eq!(parse("random-cubic:14:3").unwrap().regular_degree(), Some(3));
        assert_eq!(parse("g6:A_").unwrap().edge_count(), 1);
        assert_eq!(parse("A_").unwrap().edge_count(), 1);
        assert!(parse("random-cubic:14").is_err());
        assert!(parse("nonsense:1").is_err());
    }
}
