//! Reference tables shipped with the crate, as plain text, and their parsers.
//!
//! Every table is a list of `|`-separated rows; `#` starts a comment.

use crate::classify::{SevenClassName, SixClass};
use crate::cyclic::CyclicWord;
use crate::error::{Error, Result};
use crate::pencil::{CombinatorialPencil, ConicPencil};
use crate::projective::{Label, Side};

pub const CONIC_PENCILS: &str = include_str!("../data/golden/conic_pencils.txt");
pub const CUBIC_PENCILS: &str = include_str!("../data/golden/cubic_pencils.txt");
pub const SIX_LISTS: &str = include_str!("../data/golden/six_lists.txt");
pub const QUADRUPLES: &str = include_str!("../data/golden/quadruples.txt");
pub const LINE_WALLS: &str = include_str!("../data/golden/line_walls.txt");
pub const CONIC_WALLS: &str = include_str!("../data/golden/conic_walls.txt");
pub const COCONIC_TRIPLES: &str = include_str!("../data/golden/coconic_triples.txt");
pub const LINE_CONIC_WALLS: &str = include_str!("../data/golden/line_conic_walls.txt");
pub const REFINED_WALLS: &str = include_str!("../data/golden/refined_walls.txt");

/// Table names accepted by [`parse_table`].
pub const TABLE_NAMES: [&str; 9] = [
    "conic_pencils",
    "cubic_pencils",
    "six_lists",
    "quadruples",
    "line_walls",
    "conic_walls",
    "coconic_triples",
    "line_conic_walls",
    "refined_walls",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicPencilRow {
    pub zone: char,
    /// Node first, then the two other base points of the transformation.
    pub base: [Label; 3],
    pub pencil: ConicPencil,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CubicPencilRow {
    pub zone: char,
    pub pencil: CombinatorialPencil,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixListRow {
    pub node: Label,
    pub side: Side,
    pub word: CyclicWord,
    pub pencil: CombinatorialPencil,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SixListBlock {
    pub class: SixClass,
    pub zone: char,
    pub rows: Vec<SixListRow>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadrupleRow {
    pub arrangement: String,
    pub class: SevenClassName,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineWallRow {
    pub arrangement: String,
    pub class: SevenClassName,
    pub triple: [Label; 3],
    pub wall: u8,
    pub across: SevenClassName,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicWallRow {
    pub arrangement: String,
    pub class: SevenClassName,
    pub letter: char,
    pub across: SevenClassName,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoconicTriplesRow {
    pub letter: char,
    pub triples: Vec<[Label; 3]>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineConicRow {
    pub letter: char,
    pub triple: [Label; 3],
    /// Image of each label `1..=7`; index 0 unused.
    pub symmetry: [Label; 8],
    /// Wall number and the conic through six points after the symmetry.
    pub wall: Option<(u8, CyclicWord)>,
    pub equivalents: Vec<(char, [Label; 3])>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RefinedRow {
    pub class: SevenClassName,
    pub wall: u8,
    pub part: Option<u8>,
    pub across: SevenClassName,
    pub arrangement: String,
    pub triple: [Label; 3],
}

fn perr(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Non-comment lines with their 1-based numbers, split on `|`.
fn rows(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.split('#').next().unwrap_or("").trim();
        if l.is_empty() {
            None
        } else {
            Some((i + 1, l.split('|').map(str::trim).collect()))
        }
    })
}

fn cells<'a>(line: usize, c: &[&'a str], n: usize) -> Result<Vec<&'a str>> {
    if c.len() != n {
        return Err(perr(line, format!("expected {n} cells, found {}", c.len())));
    }
    Ok(c.to_vec())
}

fn at(line: usize, e: Error) -> Error {
    match e {
        Error::Parse { msg, .. } => Error::Parse { line, msg },
        other => Error::Parse { line, msg: other.to_string() },
    }
}

fn letter(line: usize, s: &str) -> Result<char> {
    let mut it = s.chars();
    match (it.next(), it.next()) {
        (Some(c), None) if c.is_ascii_uppercase() => Ok(c),
        _ => Err(perr(line, format!("bad letter {s:?}"))),
    }
}

fn digits(line: usize, s: &str) -> Result<Vec<Label>> {
    s.chars()
        .map(|c| match c.to_digit(10) {
            Some(d) if (1..=7).contains(&d) => Ok(d as Label),
            _ => Err(perr(line, format!("bad label in {s:?}"))),
        })
        .collect()
}

/// A triple of distinct labels written as `367`, returned sorted.
pub fn parse_triple(line: usize, s: &str) -> Result<[Label; 3]> {
    let v = digits(line, s)?;
    let mut t: [Label; 3] = v.try_into().map_err(|_| perr(line, format!("bad triple {s:?}")))?;
    t.sort_unstable();
    if t[0] == t[1] || t[1] == t[2] {
        return Err(perr(line, format!("repeated label in {s:?}")));
    }
    Ok(t)
}

fn wall_number(line: usize, s: &str) -> Result<(u8, Option<u8>)> {
    let rest = s.strip_prefix('W').ok_or_else(|| perr(line, format!("bad wall {s:?}")))?;
    let (n, part) = match rest.split_once('_') {
        Some((n, p)) => (n, Some(p.parse::<u8>().map_err(|_| perr(line, format!("bad wall {s:?}")))?)),
        None => (rest, None),
    };
    let n = n.parse::<u8>().map_err(|_| perr(line, format!("bad wall {s:?}")))?;
    if !(1..=27).contains(&n) {
        return Err(perr(line, format!("wall out of range {s:?}")));
    }
    Ok((n, part))
}

fn class(line: usize, s: &str) -> Result<SevenClassName> {
    SevenClassName::parse(s).map_err(|e| at(line, e))
}

/// Permutation in cycle notation such as `(1 6 2 7 5)(3 4)`.
pub fn parse_cycles(s: &str) -> Result<[Label; 8]> {
    let mut map: [Label; 8] = std::array::from_fn(|i| i as Label);
    let mut seen = [false; 8];
    let mut rest = s.trim();
    while !rest.is_empty() {
        let inner = rest.strip_prefix('(').ok_or_else(|| perr(0, format!("bad cycles {s:?}")))?;
        let (cyc, tail) = inner.split_once(')').ok_or_else(|| perr(0, format!("bad cycles {s:?}")))?;
        let labels: Vec<Label> = cyc
            .split_whitespace()
            .map(|t| match t.parse::<u8>() {
                Ok(d) if (1..=7).contains(&d) => Ok(d),
                _ => Err(perr(0, format!("bad label in {s:?}"))),
            })
            .collect::<Result<_>>()?;
        for (k, &l) in labels.iter().enumerate() {
            if seen[l as usize] {
                return Err(perr(0, format!("label {l} repeated in {s:?}")));
            }
            seen[l as usize] = true;
            map[l as usize] = labels[(k + 1) % labels.len()];
        }
        rest = tail.trim_start();
    }
    Ok(map)
}

pub fn parse_conic_pencils(text: &str) -> Result<Vec<ConicPencilRow>> {
    rows(text)
        .map(|(ln, c)| {
            let c = cells(ln, &c, 3)?;
            let zone = letter(ln, c[0])?;
            let b = digits(ln, c[1])?;
            let base: [Label; 3] = b.try_into().map_err(|_| perr(ln, "base needs three labels"))?;
            let pencil = ConicPencil::parse(base[0], [base[1], base[2]], c[2]).map_err(|e| at(ln, e))?;
            Ok(ConicPencilRow { zone, base, pencil })
        })
        .collect()
}

pub fn parse_cubic_pencils(text: &str) -> Result<Vec<CubicPencilRow>> {
    rows(text)
        .map(|(ln, c)| {
            let c = cells(ln, &c, 2)?;
            Ok(CubicPencilRow {
                zone: letter(ln, c[0])?,
                pencil: CombinatorialPencil::parse(c[1]).map_err(|e| at(ln, e))?,
            })
        })
        .collect()
}

pub fn parse_six_lists(text: &str) -> Result<Vec<SixListBlock>> {
    let mut out: Vec<SixListBlock> = Vec::new();
    for (ln, c) in rows(text) {
        if c.len() == 1 {
            let mut it = c[0].split_whitespace();
            let (Some(name), Some(z), None) = (it.next(), it.next(), it.next()) else {
                return Err(perr(ln, "expected class and zone"));
            };
            out.push(SixListBlock {
                class: SixClass::parse(name).map_err(|e| at(ln, e))?,
                zone: letter(ln, z)?,
                rows: Vec::new(),
            });
            continue;
        }
        let c = cells(ln, &c, 2)?;
        let block = out.last_mut().ok_or_else(|| perr(ln, "row before block header"))?;
        let head: Vec<&str> = c[0].split_whitespace().collect();
        if head.len() != 3 {
            return Err(perr(ln, "expected node, side and word"));
        }
        let node = digits(ln, head[0])?;
        let [node] = node[..] else {
            return Err(perr(ln, "bad node"));
        };
        let side = match head[1] {
            "<" => Side::Interior,
            ">" => Side::Exterior,
            other => return Err(perr(ln, format!("bad side {other:?}"))),
        };
        let word = CyclicWord::parse(head[2]).map_err(|e| at(ln, e))?;
        let pencil = CombinatorialPencil::parse(c[1]).map_err(|e| at(ln, e))?;
        if word.len() != 5 || word.contains(node) || pencil.node() != node {
            return Err(perr(ln, "row is inconsistent with its node"));
        }
        block.rows.push(SixListRow { node, side, word, pencil });
    }
    Ok(out)
}

fn arrangement(line: usize, s: &str) -> Result<String> {
    let ok = matches!(s, "R" | "T" | "V")
        || (s.starts_with('(') && s.ends_with(",6)") && (s.len() == 5 || (s.len() == 6 && s.as_bytes()[2] == b'\'')))
            && s.as_bytes()[1].is_ascii_uppercase();
    if ok {
        Ok(s.to_string())
    } else {
        Err(perr(line, format!("bad arrangement {s:?}")))
    }
}

pub fn parse_quadruples(text: &str) -> Result<Vec<QuadrupleRow>> {
    rows(text)
        .map(|(ln, c)| {
            let c = cells(ln, &c, 2)?;
            Ok(QuadrupleRow { arrangement: arrangement(ln, c[0])?, class: class(ln, c[1])? })
        })
        .collect()
}

pub fn parse_line_walls(text: &str) -> Result<Vec<LineWallRow>> {
    rows(text)
        .map(|(ln, c)| {
            let c = cells(ln, &c, 5)?;
            let (wall, part) = wall_number(ln, c[3])?;
            if part.is_some() {
                return Err(perr(ln, "unexpected wall subscript"));
            }
            Ok(LineWallRow {
                arrangement: arrangement(ln, c[0])?,
                class: class(ln, c[1])?,
                triple: parse_triple(ln, c[2])?,
                wall,
                across: class(ln, c[4])?,
            })
        })
        .collect()
}

pub fn parse_conic_walls(text: &str) -> Result<Vec<ConicWallRow>> {
    rows(text)
        .map(|(ln, c)| {
            let c = cells(ln, &c, 4)?;
            Ok(ConicWallRow {
                arrangement: arrangement(ln, c[0])?,
                class: class(ln, c[1])?,
                letter: letter(ln, c[2])?,
                across: class(ln, c[3])?,
            })
        })
        .collect()
}

pub fn parse_coconic_triples(text: &str) -> Result<Vec<CoconicTriplesRow>> {
    rows(text)
        .map(|(ln, c)| {
            let c = cells(ln, &c, 2)?;
            let triples = c[1].split_whitespace().map(|t| parse_triple(ln, t)).collect::<Result<Vec<_>>>()?;
            Ok(CoconicTriplesRow { letter: letter(ln, c[0])?, triples })
        })
        .collect()
}

fn letter_triple(line: usize, s: &str) -> Result<(char, [Label; 3])> {
    let mut it = s.chars();
    let l = it.next().ok_or_else(|| perr(line, "empty letter-triple"))?;
    Ok((letter(line, &l.to_string())?, parse_triple(line, it.as_str())?))
}

pub fn parse_line_conic_walls(text: &str) -> Result<Vec<LineConicRow>> {
    rows(text)
        .map(|(ln, c)| {
            let c = cells(ln, &c, 4)?;
            let (letter, triple) = letter_triple(ln, c[0])?;
            let symmetry = parse_cycles(c[1]).map_err(|e| at(ln, e))?;
            let wall = if c[2].is_empty() {
                None
            } else {
                let (w, conic) = c[2].split_once(',').ok_or_else(|| perr(ln, "expected wall and conic"))?;
                let (n, part) = wall_number(ln, w.trim())?;
                let conic = CyclicWord::parse(conic.trim()).map_err(|e| at(ln, e))?;
                if part.is_some() || conic.len() != 6 {
                    return Err(perr(ln, "bad line-conic wall"));
                }
                Some((n, conic))
            };
            let equivalents = c[3].split_whitespace().map(|t| letter_triple(ln, t)).collect::<Result<Vec<_>>>()?;
            Ok(LineConicRow { letter, triple, symmetry, wall, equivalents })
        })
        .collect()
}

pub fn parse_refined_walls(text: &str) -> Result<Vec<RefinedRow>> {
    rows(text)
        .map(|(ln, c)| {
            let c = cells(ln, &c, 4)?;
            let (wall, part) = wall_number(ln, c[1])?;
            let rep = c[3];
            let cut = rep.find(')').ok_or_else(|| perr(ln, format!("bad representative {rep:?}")))? + 1;
            Ok(RefinedRow {
                class: class(ln, c[0])?,
                wall,
                part,
                across: class(ln, c[2])?,
                arrangement: arrangement(ln, &rep[..cut])?,
                triple: parse_triple(ln, &rep[cut..])?,
            })
        })
        .collect()
}

/// Parses any table by name and returns the number of rows (blocks for
/// `six_lists`).
pub fn parse_table(name: &str, text: &str) -> Result<usize> {
    Ok(match name {
        "conic_pencils" => parse_conic_pencils(text)?.len(),
        "cubic_pencils" => parse_cubic_pencils(text)?.len(),
        "six_lists" => parse_six_lists(text)?.len(),
        "quadruples" => parse_quadruples(text)?.len(),
        "line_walls" => parse_line_walls(text)?.len(),
        "conic_walls" => parse_conic_walls(text)?.len(),
        "coconic_triples" => parse_coconic_triples(text)?.len(),
        "line_conic_walls" => parse_line_conic_walls(text)?.len(),
        "refined_walls" => parse_refined_walls(text)?.len(),
        other => return Err(perr(0, format!("unknown table {other:?}"))),
    })
}

/// All shipped tables, parsed.
#[derive(Clone, Debug)]
pub struct Golden {
    pub conic_pencils: Vec<ConicPencilRow>,
    pub cubic_pencils: Vec<CubicPencilRow>,
    pub six_lists: Vec<SixListBlock>,
    pub quadruples: Vec<QuadrupleRow>,
    pub line_walls: Vec<LineWallRow>,
    pub conic_walls: Vec<ConicWallRow>,
    pub coconic_triples: Vec<CoconicTriplesRow>,
    pub line_conic_walls: Vec<LineConicRow>,
    pub refined_walls: Vec<RefinedRow>,
}

impl Golden {
    pub fn load() -> &'static Golden {
        static G: std::sync::OnceLock<Golden> = std::sync::OnceLock::new();
        G.get_or_init(|| Golden {
            conic_pencils: parse_conic_pencils(CONIC_PENCILS).expect("shipped table"),
            cubic_pencils: parse_cubic_pencils(CUBIC_PENCILS).expect("shipped table"),
            six_lists: parse_six_lists(SIX_LISTS).expect("shipped table"),
            quadruples: parse_quadruples(QUADRUPLES).expect("shipped table"),
            line_walls: parse_line_walls(LINE_WALLS).expect("shipped table"),
            conic_walls: parse_conic_walls(CONIC_WALLS).expect("shipped table"),
            coconic_triples: parse_coconic_triples(COCONIC_TRIPLES).expect("shipped table"),
            line_conic_walls: parse_line_conic_walls(LINE_CONIC_WALLS).expect("shipped table"),
            refined_walls: parse_refined_walls(REFINED_WALLS).expect("shipped table"),
        })
    }

    /// Configuration name of an arrangement such as `(D,6)`.
    pub fn class_of(&self, arrangement: &str) -> Option<SevenClassName> {
        self.quadruples.iter().find(|r| r.arrangement == arrangement).map(|r| r.class)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_tables_parse() {
        let g = Golden::load();
        assert_eq!(g.conic_pencils.len(), 7);
        assert_eq!(g.cubic_pencils.len(), 7);
        assert_eq!(g.six_lists.len(), 4);
        assert!(g.six_lists.iter().all(|b| b.rows.len() == 6));
        assert_eq!(g.quadruples.len(), 14);
        assert_eq!(g.line_walls.len(), 81);
        assert_eq!(g.conic_walls.len(), 14);
        assert_eq!(g.coconic_triples.len(), 11);
        assert_eq!(g.line_conic_walls.len(), 21);
        assert_eq!(g.refined_walls.len(), 22);
    }

    #[test]
    fn cycles() {
        let p = parse_cycles("(1 6 2 7 5)(3 4)").unwrap();
        assert_eq!(&p[1..], &[6, 7, 4, 3, 1, 2, 5]);
        assert!(parse_cycles("(1 2)(2 3)").is_err());
        assert!(parse_cycles("(1 9)").is_err());
        assert_eq!(parse_cycles("").unwrap()[3], 3);
    }

    #[test]
    fn malformed_rows_report_line() {
        let e = parse_line_walls("# c\n(E,6) | (7,0,0,0) | 16 | W12 | (3,4,0,0)_1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 2, .. }));
        assert!(parse_quadruples("(Z,7) | (7,0,0,0)").is_err());
        assert!(parse_table("nope", "").is_err());
    }
}
