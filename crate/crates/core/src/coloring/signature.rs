//! Classification of colored boundary cycles of length 4, 5 and 6.

use std::fmt;
use std::str::FromStr;

use super::{Color, ColoringError};

/// Every color occurs a number of times congruent to the cycle length, mod 2.
pub fn parity_check(colors: &[Color]) -> bool {
    let n = colors.len();
    (0..3).all(|c| colors.iter().filter(|&&x| x == c).count() % 2 == n % 2)
}

/// Map sending colors to letters in order of first appearance.
pub fn first_seen_permutation(colors: &[Color]) -> [Color; 3] {
    let mut perm = [u8::MAX; 3];
    let mut next = 0;
    for &c in colors {
        if perm[c as usize] == u8::MAX {
            perm[c as usize] = next;
            next += 1;
        }
    }
    for p in perm.iter_mut() {
        if *p == u8::MAX {
            *p = next;
            next += 1;
        }
    }
    perm
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SquareType {
    A,
    B1,
    B2,
    C,
}

impl SquareType {
    pub const ALL: [SquareType; 4] = [SquareType::A, SquareType::B1, SquareType::B2, SquareType::C];

    pub fn pattern(self) -> &'static str {
        match self {
            SquareType::A => "tptp",
            SquareType::B1 => "ttpp",
            SquareType::B2 => "tppt",
            SquareType::C => "tttt",
        }
    }
}

impl fmt::Display for SquareType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SquareType::A => "A",
            SquareType::B1 => "B1",
            SquareType::B2 => "B2",
            SquareType::C => "C",
        };
        f.write_str(s)
    }
}

impl FromStr for SquareType {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" => Ok(SquareType::A),
            "B1" => Ok(SquareType::B1),
            "B2" => Ok(SquareType::B2),
            "C" => Ok(SquareType::C),
            _ => Err(format!("unknown square type `{s}`")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SquareSignature {
    pub kind: SquareType,
    /// `permutation[c]` is the letter index of color `c` in the canonical pattern.
    pub permutation: [Color; 3],
}

/// Classifies a colored square read from its fixed starting edge.
pub fn classify_square(c: [Color; 4]) -> Result<SquareSignature, ColoringError> {
    let kind = if c[0] == c[2] && c[1] == c[3] {
        if c[0] == c[1] {
            SquareType::C
        } else {
            SquareType::A
        }
    } else if c[0] == c[1] && c[2] == c[3] {
        SquareType::B1
    } else if c[1] == c[2] && c[3] == c[0] {
        SquareType::B2
    } else {
        let mut d = c.to_vec();
        d.sort_unstable();
        d.dedup();
        return Err(if d.len() == 3 { ColoringError::MixedTriple } else { ColoringError::BadParity });
    };
    Ok(SquareSignature { kind, permutation: first_seen_permutation(&c) })
}

/// Unordered 1-based positions `j < k` of the two singleton colors on a pentagon.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PentagonSignature {
    j: u8,
    k: u8,
}

impl PentagonSignature {
    pub fn new(j: u8, k: u8) -> Option<Self> {
        let (j, k) = (j.min(k), j.max(k));
        (j >= 1 && k <= 5 && j != k).then_some(PentagonSignature { j, k })
    }

    pub fn positions(self) -> (u8, u8) {
        (self.j, self.k)
    }

    pub fn contains(self, p: u8) -> bool {
        self.j == p || self.k == p
    }

    /// All ten signatures in lexicographic order.
    pub fn all() -> Vec<Self> {
        (1..=5).flat_map(|j| (j + 1..=5).map(move |k| PentagonSignature { j, k })).collect()
    }

    /// Cyclic distance between the two singleton positions (1 or 2).
    pub fn gap(self) -> u8 {
        let d = self.k - self.j;
        d.min(5 - d)
    }
}

impl fmt::Display for PentagonSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{};{}", self.j, self.k)
    }
}

impl FromStr for PentagonSignature {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (a, b) = s.split_once(';').ok_or_else(|| format!("bad pentagon signature `{s}`"))?;
        let j: u8 = a.trim().parse().map_err(|_| format!("bad position `{a}`"))?;
        let k: u8 = b.trim().parse().map_err(|_| format!("bad position `{b}`"))?;
        PentagonSignature::new(j, k).ok_or_else(|| format!("bad pentagon signature `{s}`"))
    }
}

pub fn classify_pentagon(c: [Color; 5]) -> Result<PentagonSignature, ColoringError> {
    let count = |x: Color| c.iter().filter(|&&y| y == x).count();
    let singles: Vec<u8> = (0..5).filter(|&i| count(c[i]) == 1).map(|i| i as u8 + 1).collect();
    if singles.len() != 2 || (0..3).any(|x| count(x) == 0) {
        return Err(ColoringError::BadParity);
    }
    Ok(PentagonSignature { j: singles[0], k: singles[1] })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HexagonClass {
    Pppppp,
    Ttpppp,
    Tptppp,
    Tpptpp,
    Ttppgg,
    Ttpgpg,
    Tpgtgp,
    Tpgtpg,
    Tpptgg,
}

impl HexagonClass {
    pub const ALL: [HexagonClass; 9] = [
        HexagonClass::Pppppp,
        HexagonClass::Ttpppp,
        HexagonClass::Tptppp,
        HexagonClass::Tpptpp,
        HexagonClass::Ttppgg,
        HexagonClass::Ttpgpg,
        HexagonClass::Tpgtgp,
        HexagonClass::Tpgtpg,
        HexagonClass::Tpptgg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            HexagonClass::Pppppp => "pppppp",
            HexagonClass::Ttpppp => "ttpppp",
            HexagonClass::Tptppp => "tptppp",
            HexagonClass::Tpptpp => "tpptpp",
            HexagonClass::Ttppgg => "ttppgg",
            HexagonClass::Ttpgpg => "ttpgpg",
            HexagonClass::Tpgtgp => "tpgtgp",
            HexagonClass::Tpgtpg => "tpgtpg",
            HexagonClass::Tpptgg => "tpptgg",
        }
    }

    /// The class name as a color sequence (t=0, p=1, g=2).
    pub fn pattern(self) -> [Color; 6] {
        let mut out = [0; 6];
        for (o, ch) in out.iter_mut().zip(self.name().chars()) {
            *o = super::LETTERS.iter().position(|&l| l == ch).unwrap() as Color;
        }
        out
    }
}

impl fmt::Display for HexagonClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for HexagonClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        HexagonClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown hexagon class `{s}`"))
    }
}

/// How a colored hexagon maps onto its class pattern.
///
/// With `reflected = false`, position `i` of the pattern reads edge `(rotation + i) % 6`;
/// with `reflected = true` it reads edge `(rotation - i) mod 6`. The pattern letter is
/// `permutation[color]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HexagonWitness {
    pub class: HexagonClass,
    pub rotation: usize,
    pub reflected: bool,
    pub permutation: [Color; 3],
}

impl HexagonWitness {
    /// Hexagon edge index read at pattern position `i`.
    pub fn edge_at(&self, i: usize) -> usize {
        if self.reflected {
            (self.rotation + 6 - i % 6) % 6
        } else {
            (self.rotation + i) % 6
        }
    }
}

fn read(c: &[Color; 6], rotation: usize, reflected: bool) -> [Color; 6] {
    let mut out = [0; 6];
    for (i, o) in out.iter_mut().enumerate() {
        let idx = if reflected { (rotation + 6 - i) % 6 } else { (rotation + i) % 6 };
        *o = c[idx];
    }
    out
}

pub fn classify_hexagon(c: [Color; 6]) -> Result<HexagonWitness, ColoringError> {
    if !parity_check(&c) {
        return Err(ColoringError::BadParity);
    }
    for reflected in [false, true] {
        for rotation in 0..6 {
            let seq = read(&c, rotation, reflected);
            let mut perm = first_seen_permutation(&seq);
            if seq.iter().all(|&x| x == seq[0]) {
                // the constant class is written with p
                perm = [0; 3];
                perm[seq[0] as usize] = 1;
                let others: Vec<usize> = (0..3).filter(|&x| x != seq[0] as usize).collect();
                perm[others[0]] = 0;
                perm[others[1]] = 2;
            }
            let mapped: Vec<Color> = seq.iter().map(|&x| perm[x as usize]).collect();
            if let Some(class) = HexagonClass::ALL.into_iter().find(|k| k.pattern()[..] == mapped[..]) {
                return Ok(HexagonWitness { class, rotation, reflected, permutation: perm });
            }
        }
    }
    unreachable!("the nine classes cover every even hexagon pattern")
}

#[cfg(test)]
mod tests {
    use super::*;

    const T: Color = 0;
    const P: Color = 1;
    const G: Color = 2;

    #[test]
    fn squares() {
        assert_eq!(classify_square([T, P, T, P]).unwrap().kind, SquareType::A);
        assert_eq!(classify_square([T, T, P, P]).unwrap().kind, SquareType::B1);
        assert_eq!(classify_square([T, P, P, T]).unwrap().kind, SquareType::B2);
        assert_eq!(classify_square([G, G, G, G]).unwrap().kind, SquareType::C);
        assert_eq!(classify_square([T, T, T, P]), Err(ColoringError::BadParity));
        assert_eq!(classify_square([T, P, G, T]), Err(ColoringError::MixedTriple));
    }

    #[test]
    fn pentagons() {
        assert_eq!(classify_pentagon([T, P, T, T, G]).unwrap().to_string(), "2;5");
        assert_eq!(classify_pentagon([T, P, G, T, T]).unwrap().to_string(), "2;3");
        assert_eq!(classify_pentagon([T, T, T, T, P]), Err(ColoringError::BadParity));
        assert_eq!(PentagonSignature::all().len(), 10);
        assert_eq!("3;1".parse::<PentagonSignature>().unwrap().positions(), (1, 3));
    }

    #[test]
    fn hexagons() {
        let w = classify_hexagon([T, G, P, T, G, P]).unwrap();
        assert_eq!(w.class, HexagonClass::Tpgtpg);
        assert_eq!(classify_hexagon([P; 6]).unwrap().class, HexagonClass::Pppppp);
        assert_eq!(classify_hexagon([T; 6]).unwrap().class, HexagonClass::Pppppp);
        assert_eq!(classify_hexagon([T, T, P, P, P, G]), Err(ColoringError::BadParity));
    }

    #[test]
    fn every_even_hexagon_is_classified_with_a_valid_witness() {
        let mut seen = std::collections::BTreeSet::new();
        for code in 0..729u32 {
            let mut c = [0; 6];
            let mut x = code;
            for slot in c.iter_mut() {
                *slot = (x % 3) as Color;
                x /= 3;
            }
            if !parity_check(&c) {
                assert!(classify_hexagon(c).is_err());
                continue;
            }
            let w = classify_hexagon(c).unwrap();
            for i in 0..6 {
                assert_eq!(w.permutation[c[w.edge_at(i)] as usize], w.class.pattern()[i]);
            }
            seen.insert(w.class);
        }
        assert_eq!(seen.len(), 9);
    }
}
