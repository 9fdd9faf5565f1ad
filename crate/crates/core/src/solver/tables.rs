//! Typed views of the case tables shipped with the catalog.

use std::sync::OnceLock;

use crate::catalog::{manifest, K6Variant};
use crate::coloring::{HexagonClass, PentagonSignature, SquareType};

/// Disk type of a special square, by which boundary types it admits.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SquareDiskType {
    /// Admits A and B1.
    One,
    /// Admits A and B2.
    Two,
    /// Admits C, B1 and B2.
    Three,
}

impl SquareDiskType {
    pub const ALL: [SquareDiskType; 3] = [SquareDiskType::One, SquareDiskType::Two, SquareDiskType::Three];

    pub fn required(self) -> &'static [SquareType] {
        match self {
            SquareDiskType::One => &[SquareType::A, SquareType::B1],
            SquareDiskType::Two => &[SquareType::A, SquareType::B2],
            SquareDiskType::Three => &[SquareType::C, SquareType::B1, SquareType::B2],
        }
    }

    /// First type whose whole requirement is met.
    pub fn of(admits: impl Fn(SquareType) -> bool) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.required().iter().all(|&s| admits(s)))
    }

    pub fn digit(self) -> char {
        match self {
            SquareDiskType::One => '1',
            SquareDiskType::Two => '2',
            SquareDiskType::Three => '3',
        }
    }

    fn from_digit(c: char) -> Option<Self> {
        match c {
            '1' => Some(SquareDiskType::One),
            '2' => Some(SquareDiskType::Two),
            '3' => Some(SquareDiskType::Three),
            _ => None,
        }
    }
}

pub type TypeTriple = [SquareDiskType; 3];

#[derive(Debug, Clone)]
pub struct Pentagon54 {
    pub square: SquareType,
    pub base: Vec<(PentagonSignature, String)>,
    /// `(signature, fixed position, reachable signatures)`.
    pub reductions: Vec<(PentagonSignature, u8, Vec<PentagonSignature>)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step54<'a> {
    Base(&'a str),
    /// Keep the singleton at `fixed`, move the one at `moving`.
    Reduce { fixed: u8, moving: u8, targets: &'a [PentagonSignature] },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Step6<'a> {
    Base(&'a str),
    /// Kempe change on the letters' colors, seeded at the first `p` of the class pattern.
    Reduce { letters: [u8; 2], targets: &'a [HexagonClass] },
}

#[derive(Debug, Clone)]
pub struct Tables {
    pub k444b: Vec<(Vec<TypeTriple>, String)>,
    pub k444a: Vec<(Vec<TypeTriple>, String)>,
    pub k54_a: Pentagon54,
    pub k54_b1: Pentagon54,
    pub k6_base: Vec<(HexagonClass, String)>,
    pub k6_reductions: Vec<(HexagonClass, [u8; 2], Vec<HexagonClass>)>,
    pub h7k2: Vec<(SquareType, String)>,
    pub c3c5: Vec<(SquareType, String)>,
}

fn triple(s: &str) -> Result<TypeTriple, String> {
    let v: Vec<SquareDiskType> =
        s.chars().map(|c| SquareDiskType::from_digit(c).ok_or_else(|| format!("bad type triple `{s}`"))).collect::<Result<_, _>>()?;
    v.try_into().map_err(|_| format!("bad type triple `{s}`"))
}

fn letter(c: char) -> Result<u8, String> {
    crate::coloring::LETTERS.iter().position(|&l| l == c).map(|i| i as u8).ok_or_else(|| format!("bad letter `{c}`"))
}

fn half(raw: &crate::catalog::Half54) -> Result<Pentagon54, String> {
    let sig = |s: &str| s.parse::<PentagonSignature>();
    Ok(Pentagon54 {
        square: raw.square.parse()?,
        base: raw.base.iter().map(|b| Ok((sig(&b.sig)?, b.entry.clone()))).collect::<Result<_, String>>()?,
        reductions: raw
            .reductions
            .iter()
            .map(|r| {
                let targets = r.targets.iter().map(|t| sig(t)).collect::<Result<_, _>>()?;
                Ok((sig(&r.sig)?, r.fixed, targets))
            })
            .collect::<Result<_, String>>()?,
    })
}

fn build() -> Result<Tables, String> {
    let raw = &manifest().tables;
    let rows = |t: &crate::catalog::RowTable| -> Result<Vec<(Vec<TypeTriple>, String)>, String> {
        t.rows
            .iter()
            .map(|r| Ok((r.types.iter().map(|s| triple(s)).collect::<Result<_, _>>()?, r.entry.clone())))
            .collect()
    };
    let quads = |t: &crate::catalog::QuadTable| -> Result<Vec<(SquareType, String)>, String> {
        t.rows.iter().map(|r| Ok((r.quad.parse()?, r.entry.clone()))).collect()
    };
    Ok(Tables {
        k444b: rows(&raw.k444b)?,
        k444a: rows(&raw.k444a)?,
        k54_a: half(&raw.k54.square_a)?,
        k54_b1: half(&raw.k54.square_b1)?,
        k6_base: raw.k6.base.iter().map(|b| Ok((b.class.parse()?, b.entry.clone()))).collect::<Result<_, String>>()?,
        k6_reductions: raw
            .k6
            .reductions
            .iter()
            .map(|r| {
                let ls: Vec<char> = r.letters.chars().collect();
                if ls.len() != 2 {
                    return Err(format!("bad letters `{}`", r.letters));
                }
                let targets = r.targets.iter().map(|t| t.parse()).collect::<Result<_, _>>()?;
                Ok((r.class.parse()?, [letter(ls[0])?, letter(ls[1])?], targets))
            })
            .collect::<Result<_, String>>()?,
        h7k2: quads(&raw.h7k2)?,
        c3c5: quads(&raw.c3c5)?,
    })
}

pub fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| build().unwrap_or_else(|e| panic!("case tables are malformed: {e}")))
}

impl Tables {
    pub fn lookup_444b(&self, t: TypeTriple) -> Option<&str> {
        self.k444b.iter().find(|(ts, _)| ts.contains(&t)).map(|(_, e)| e.as_str())
    }

    /// Entry for the cyclic rotation class of `t`, with the shift `k` such that
    /// `t` rotated left by `k` is listed.
    pub fn lookup_444a(&self, t: TypeTriple) -> Option<(&str, usize)> {
        (0..3).find_map(|k| {
            let r = [t[k % 3], t[(k + 1) % 3], t[(k + 2) % 3]];
            self.k444a.iter().find(|(ts, _)| ts.contains(&r)).map(|(_, e)| (e.as_str(), k))
        })
    }

    /// Pentagon table for a square disk type: A for types 1 and 2, B1 for type 3.
    pub fn pentagon_half(&self, t: SquareDiskType) -> &Pentagon54 {
        match t {
            SquareDiskType::Three => &self.k54_b1,
            _ => &self.k54_a,
        }
    }

    pub fn step_54<'a>(&'a self, half: &'a Pentagon54, sig: PentagonSignature) -> Option<Step54<'a>> {
        if let Some((_, e)) = half.base.iter().find(|(s, _)| *s == sig) {
            return Some(Step54::Base(e));
        }
        half.reductions.iter().find(|(s, _, _)| *s == sig).map(|(s, fixed, targets)| {
            let (j, k) = s.positions();
            let moving = if j == *fixed { k } else { j };
            Step54::Reduce { fixed: *fixed, moving, targets }
        })
    }

    pub fn step_6(&self, class: HexagonClass) -> Option<Step6<'_>> {
        if let Some((_, e)) = self.k6_base.iter().find(|(c, _)| *c == class) {
            return Some(Step6::Base(e));
        }
        self.k6_reductions
            .iter()
            .find(|(c, _, _)| *c == class)
            .map(|(_, letters, targets)| Step6::Reduce { letters: *letters, targets })
    }

    /// Entry for a quad type in the H7+K2 or C3+C5 table.
    pub fn quad_entry(table: &[(SquareType, String)], kind: SquareType) -> Option<&str> {
        table.iter().find(|(k, _)| *k == kind).map(|(_, e)| e.as_str())
    }

    /// Every figure id the tables can point to for a variant.
    pub fn entries(&self, variant: K6Variant) -> Vec<&str> {
        let mut out: Vec<&str> = match variant {
            K6Variant::V444A => self.k444a.iter().map(|(_, e)| e.as_str()).collect(),
            K6Variant::V444B => self.k444b.iter().map(|(_, e)| e.as_str()).collect(),
            K6Variant::V54 => {
                self.k54_a.base.iter().chain(&self.k54_b1.base).map(|(_, e)| e.as_str()).collect()
            }
            K6Variant::V6 => self.k6_base.iter().map(|(_, e)| e.as_str()).collect(),
        };
        out.sort_unstable();
        out.dedup();
        out
    }
}
