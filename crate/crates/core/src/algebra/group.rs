//! Finite groups as Cayley tables over dense indices `0..n`.
//!
//! Permutation groups multiply left to right: `(a * b)(x) = b(a(x))`, so a
//! word such as `f^12 g^4` applies `f` twelve times and then `g` four times.

use std::collections::HashMap;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use super::FiniteField;
use crate::{Error, Result};

/// Cayley tables up to this order are checked for associativity exhaustively.
pub const ASSOCIATIVITY_CHECK_LIMIT: usize = 200;

/// Recipe for a built-in or imported group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(usize),
    Symmetric(usize),
    Quaternion8,
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
    /// The nonabelian group of order 155 acting on `Z_31`, generated by
    /// `f: x -> x + 1` and `g: x -> 2x`.
    Frobenius31x5,
    /// Multiplicative group of `GF(q)`, indexed by discrete logarithm.
    FieldMultiplicative(u64),
    CayleyFile(PathBuf),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Symmetric(n) => write!(f, "symmetric:{n}"),
            GroupSpec::Quaternion8 => write!(f, "q8"),
            GroupSpec::DirectProduct(a, b) => write!(f, "{a} x {b}"),
            GroupSpec::Frobenius31x5 => write!(f, "frobenius-31-5"),
            GroupSpec::FieldMultiplicative(q) => write!(f, "fstar:{q}"),
            GroupSpec::CayleyFile(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `cyclic:n` (or `zN`), `symmetric:n` (or `sN`), `q8`,
    /// `frobenius-31-5`, `fstar:q`, `file:PATH` and products `A x B`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let parts: Vec<&str> = s.split(" x ").collect();
        if parts.len() > 1 {
            let mut spec = parts[0].parse::<GroupSpec>()?;
            for p in &parts[1..] {
                spec = GroupSpec::DirectProduct(Box::new(spec), Box::new(p.parse()?));
            }
            return Ok(spec);
        }
        let num = |t: &str| -> Result<usize> {
            t.parse::<usize>()
                .map_err(|_| Error::InvalidSpec(format!("bad group size in `{s}`")))
        };
        let lower = s.to_ascii_lowercase();
        if let Some(path) = s.strip_prefix("file:") {
            return Ok(GroupSpec::CayleyFile(PathBuf::from(path)));
        }
        if let Some(n) = lower.strip_prefix("cyclic:") {
            return Ok(GroupSpec::Cyclic(num(n)?));
        }
        if let Some(n) = lower.strip_prefix("symmetric:") {
            return Ok(GroupSpec::Symmetric(num(n)?));
        }
        if let Some(q) = lower.strip_prefix("fstar:") {
            return Ok(GroupSpec::FieldMultiplicative(num(q)? as u64));
        }
        match lower.as_str() {
            "q8" | "quaternion8" => return Ok(GroupSpec::Quaternion8),
            "frobenius-31-5" | "z31:z5" => return Ok(GroupSpec::Frobenius31x5),
            _ => {}
        }
        if let Some(n) = lower.strip_prefix('z') {
            if let Ok(n) = n.parse() {
                return Ok(GroupSpec::Cyclic(n));
            }
        }
        if let Some(n) = lower.strip_prefix('s') {
            if let Ok(n) = n.parse() {
                return Ok(GroupSpec::Symmetric(n));
            }
        }
        Err(Error::InvalidSpec(format!("unknown group `{s}`")))
    }
}

#[derive(Clone, Debug)]
enum GroupKind {
    Plain,
    Symmetric(usize),
    Product(Box<Group>, Box<Group>),
    Frobenius,
}

#[derive(Clone, Debug)]
pub struct Group {
    order: usize,
    table: Vec<u32>,
    identity: u32,
    inverses: Vec<u32>,
    names: Vec<String>,
    kind: GroupKind,
}

fn strip_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

impl Group {
    pub fn build(spec: &GroupSpec) -> Result<Group> {
        match spec {
            GroupSpec::Cyclic(n) => Ok(Group::cyclic(*n)),
            GroupSpec::Symmetric(n) => Ok(Group::symmetric(*n)),
            GroupSpec::Quaternion8 => Ok(Group::quaternion8()),
            GroupSpec::DirectProduct(a, b) => {
                Ok(Group::direct_product(&Group::build(a)?, &Group::build(b)?))
            }
            GroupSpec::Frobenius31x5 => Ok(Group::frobenius_31_5()),
            GroupSpec::FieldMultiplicative(q) => Group::field_multiplicative(*q),
            GroupSpec::CayleyFile(path) => Group::read_cayley_file(path),
        }
    }

    /// Validates a Cayley table and derives identity and inverses.
    pub fn from_table(order: usize, table: Vec<u32>, names: Option<Vec<String>>) -> Result<Group> {
        let bad = |m: String| Error::InvalidCayleyTable(m);
        if order == 0 {
            return Err(bad("empty group".into()));
        }
        if table.len() != order * order {
            return Err(bad(format!("expected {} entries, found {}", order * order, table.len())));
        }
        if let Some(&x) = table.iter().find(|&&x| x as usize >= order) {
            return Err(bad(format!("entry {x} out of range")));
        }
        let mut seen = vec![0usize; order];
        for r in 0..order {
            for c in 0..order {
                let x = table[r * order + c] as usize;
                if seen[x] == r * 2 + 1 {
                    return Err(bad(format!("row {r} is not a permutation")));
                }
                seen[x] = r * 2 + 1;
            }
        }
        seen.iter_mut().for_each(|s| *s = usize::MAX);
        for c in 0..order {
            for r in 0..order {
                let x = table[r * order + c] as usize;
                if seen[x] == c {
                    return Err(bad(format!("column {c} is not a permutation")));
                }
                seen[x] = c;
            }
        }
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| table[e * order + x] as usize == x && table[x * order + e] as usize == x))
            .ok_or_else(|| bad("no identity element".into()))? as u32;
        let inverses: Vec<u32> = (0..order)
            .map(|x| {
                (0..order)
                    .find(|&y| table[x * order + y] == identity)
                    .unwrap() as u32
            })
            .collect();
        if order <= ASSOCIATIVITY_CHECK_LIMIT {
            for a in 0..order {
                for b in 0..order {
                    let ab = table[a * order + b] as usize;
                    for c in 0..order {
                        let bc = table[b * order + c] as usize;
                        if table[ab * order + c] != table[a * order + bc] {
                            return Err(bad(format!("not associative at ({a},{b},{c})")));
                        }
                    }
                }
            }
        }
        let names = match names {
            Some(n) if n.len() == order => n,
            Some(n) => return Err(bad(format!("{} names for {} elements", n.len(), order))),
            None => (0..order).map(|i| i.to_string()).collect(),
        };
        Ok(Group {
            order,
            table,
            identity,
            inverses,
            names,
            kind: GroupKind::Plain,
        })
    }

    fn from_trusted(table: Vec<u32>, names: Vec<String>, kind: GroupKind) -> Group {
        let mut g = Group::from_table(names.len(), table, Some(names)).expect("built-in group is valid");
        g.kind = kind;
        g
    }

    pub fn cyclic(n: usize) -> Group {
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
            .collect();
        Group::from_trusted(table, (0..n).map(|i| i.to_string()).collect(), GroupKind::Plain)
    }

    /// All permutations of `{1..n}`, ordered lexicographically by image tuple.
    pub fn symmetric(n: usize) -> Group {
        let mut perms: Vec<Vec<u8>> = Vec::new();
        let mut cur: Vec<u8> = (0..n as u8).collect();
        loop {
            perms.push(cur.clone());
            // next permutation in lexicographic order
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        let index: HashMap<&[u8], u32> = perms
            .iter()
            .enumerate()
            .map(|(i, p)| (p.as_slice(), i as u32))
            .collect();
        let mut table = Vec::with_capacity(perms.len() * perms.len());
        for a in &perms {
            for b in &perms {
                let ab: Vec<u8> = (0..n).map(|x| b[a[x] as usize]).collect();
                table.push(index[ab.as_slice()]);
            }
        }
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        Group::from_trusted(table, names, GroupKind::Symmetric(n))
    }

    /// `{1, -1, i, -i, j, -j, k, -k}` with `i^2 = j^2 = k^2 = -1`, `ij = k`.
    pub fn quaternion8() -> Group {
        // unit index: 0 = 1, 1 = i, 2 = j, 3 = k; product (unit, sign flip)
        const UNIT: [[(usize, bool); 4]; 4] = [
            [(0, false), (1, false), (2, false), (3, false)],
            [(1, false), (0, true), (3, false), (2, true)],
            [(2, false), (3, true), (0, true), (1, false)],
            [(3, false), (2, false), (1, true), (0, true)],
        ];
        let decode = |x: usize| (x / 2, x % 2 == 1);
        let mut table = Vec::with_capacity(64);
        for a in 0..8 {
            for b in 0..8 {
                let ((ua, sa), (ub, sb)) = (decode(a), decode(b));
                let (u, flip) = UNIT[ua][ub];
                let neg = sa ^ sb ^ flip;
                table.push((u * 2 + neg as usize) as u32);
            }
        }
        let names = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        Group::from_trusted(table, names, GroupKind::Plain)
    }

    /// Elements `(a, b)` at index `a * |B| + b`, named `a|b`.
    pub fn direct_product(a: &Group, b: &Group) -> Group {
        let (na, nb) = (a.order, b.order);
        let n = na * nb;
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            let (xa, xb) = (x / nb, x % nb);
            for y in 0..n {
                let (ya, yb) = (y / nb, y % nb);
                table.push((a.mul(xa as u32, ya as u32) as usize * nb + b.mul(xb as u32, yb as u32) as usize) as u32);
            }
        }
        let names = (0..n)
            .map(|x| format!("{}|{}", a.names[x / nb], b.names[x % nb]))
            .collect();
        Group::from_trusted(
            table,
            names,
            GroupKind::Product(Box::new(a.clone()), Box::new(b.clone())),
        )
    }

    /// `f^a g^b` at index `5a + b`, acting on `Z_31` as `x -> 2^b (x + a)`.
    pub fn frobenius_31_5() -> Group {
        let maps: Vec<Vec<u32>> = (0..31u32)
            .flat_map(|a| {
                (0..5u32).map(move |b| (0..31u32).map(|x| ((1 << b) * (x + a)) % 31).collect())
            })
            .collect();
        let index: HashMap<&[u32], u32> = maps
            .iter()
            .enumerate()
            .map(|(i, m)| (m.as_slice(), i as u32))
            .collect();
        let mut table = Vec::with_capacity(155 * 155);
        for m1 in &maps {
            for m2 in &maps {
                let comp: Vec<u32> = (0..31).map(|x| m2[m1[x] as usize]).collect();
                table.push(index[comp.as_slice()]);
            }
        }
        let names = (0..155)
            .map(|i| {
                let (a, b) = (i / 5, i % 5);
                let part = |sym: char, e: usize| match e {
                    0 => String::new(),
                    1 => sym.to_string(),
                    _ => format!("{sym}^{e}"),
                };
                match (a, b) {
                    (0, 0) => "id".to_string(),
                    _ => format!("{}{}", part('f', a), part('g', b)),
                }
            })
            .collect();
        Group::from_trusted(table, names, GroupKind::Frobenius)
    }

    /// `GF(q)^*` with element `ω^i` at index `i`, named by its field value.
    pub fn field_multiplicative(q: u64) -> Result<Group> {
        let field = FiniteField::new(q)?;
        let n = (q - 1) as usize;
        let table = (0..n)
            .flat_map(|a| (0..n).map(move |b| ((a + b) % n) as u32))
            .collect();
        let names = (0..n).map(|i| field.exp(i as u64).to_string()).collect();
        Ok(Group::from_trusted(table, names, GroupKind::Plain))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> u32 {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order + b as usize]
    }

    #[inline]
    pub fn inv(&self, a: u32) -> u32 {
        self.inverses[a as usize]
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn name(&self, a: u32) -> &str {
        &self.names[a as usize]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order as u32).all(|a| (0..self.order as u32).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Looks up an element by its name, or by a structural parse for
    /// symmetric groups (any cycle notation), products (`a|b`) and the group of
    /// order 155 (words in `f` and `g`).
    pub fn element(&self, name: &str) -> Result<u32> {
        let key = strip_ws(name);
        if let Some(i) = self.names.iter().position(|n| strip_ws(n) == key) {
            return Ok(i as u32);
        }
        let unknown = || Error::UnknownElement(name.to_string());
        match &self.kind {
            GroupKind::Plain => Err(unknown()),
            GroupKind::Symmetric(n) => {
                let perm = parse_cycles(&key, *n).ok_or_else(unknown)?;
                let target = cycle_notation(&perm);
                self.names
                    .iter()
                    .position(|x| *x == target)
                    .map(|i| i as u32)
                    .ok_or_else(unknown)
            }
            GroupKind::Product(a, b) => {
                let (l, r) = key.split_once('|').ok_or_else(unknown)?;
                Ok(a.element(l)? * b.order as u32 + b.element(r)?)
            }
            GroupKind::Frobenius => {
                let mut acc = self.identity;
                let chars: Vec<char> = key.chars().collect();
                let mut i = 0;
                while i < chars.len() {
                    let gen = match chars[i] {
                        'f' => 5,
                        'g' => 1,
                        _ => return Err(unknown()),
                    };
                    i += 1;
                    let mut exp = 1u32;
                    if i < chars.len() && chars[i] == '^' {
                        i += 1;
                        let start = i;
                        while i < chars.len() && chars[i].is_ascii_digit() {
                            i += 1;
                        }
                        exp = chars[start..i]
                            .iter()
                            .collect::<String>()
                            .parse()
                            .map_err(|_| unknown())?;
                    }
                    for _ in 0..exp {
                        acc = self.mul(acc, gen);
                    }
                }
                Ok(acc)
            }
        }
    }

    /// Serialises in the Cayley-table text format.
    pub fn to_cayley_text(&self) -> String {
        let mut out = format!("{}\n", self.order);
        for r in 0..self.order {
            let row: Vec<String> = self.table[r * self.order..(r + 1) * self.order]
                .iter()
                .map(u32::to_string)
                .collect();
            out.push_str(&row.join(" "));
            out.push('\n');
        }
        for (i, n) in self.names.iter().enumerate() {
            out.push_str(&format!("# {i} {n}\n"));
        }
        out
    }

    /// Parses line 1 `n`, then `n` rows of `n` indices, then optional
    /// `# i name` lines.
    pub fn from_cayley_text(text: &str) -> Result<Group> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
        let bad = |m: &str| Error::InvalidCayleyTable(m.to_string());
        let n: usize = lines
            .next()
            .ok_or_else(|| bad("missing order"))?
            .parse()
            .map_err(|_| bad("order is not an integer"))?;
        let mut table = Vec::with_capacity(n * n);
        for r in 0..n {
            let line = lines.next().ok_or_else(|| bad(&format!("missing row {r}")))?;
            let row: Vec<u32> = line
                .split_whitespace()
                .map(str::parse)
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| bad(&format!("row {r} has a non-integer entry")))?;
            if row.len() != n {
                return Err(bad(&format!("row {r} has {} entries", row.len())));
            }
            table.extend(row);
        }
        let mut names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        for line in lines {
            let rest = line.strip_prefix('#').ok_or_else(|| bad("trailing data after table"))?;
            let mut parts = rest.trim().splitn(2, char::is_whitespace);
            let idx: usize = parts
                .next()
                .and_then(|t| t.parse().ok())
                .filter(|&i| i < n)
                .ok_or_else(|| bad("bad name line"))?;
            names[idx] = parts.next().unwrap_or("").trim().to_string();
        }
        Group::from_table(n, table, Some(names))
    }

    pub fn read_cayley_file(path: &Path) -> Result<Group> {
        let text = std::fs::read_to_string(path).map_err(|e| match e.kind() {
            std::io::ErrorKind::NotFound => Error::FileNotFound(path.to_path_buf()),
            _ => Error::Io(e),
        })?;
        Group::from_cayley_text(&text)
    }
}

/// Cycle notation on `1..n`, `id` for the identity; each cycle starts at its
/// smallest point, cycles ordered by that point.
fn cycle_notation(perm: &[u8]) -> String {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || perm[start] as usize == start {
            continue;
        }
        let mut cycle = vec![start + 1];
        seen[start] = true;
        let mut x = perm[start] as usize;
        while x != start {
            seen[x] = true;
            cycle.push(x + 1);
            x = perm[x] as usize;
        }
        let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
        out.push_str(&format!("({})", body.join(",")));
    }
    if out.is_empty() {
        "id".to_string()
    } else {
        out
    }
}

/// Parses cycle notation (whitespace already stripped). Cycles are applied
/// left to right.
fn parse_cycles(s: &str, n: usize) -> Option<Vec<u8>> {
    let mut perm: Vec<u8> = (0..n as u8).collect();
    if s == "id" || s == "()" {
        return Some(perm);
    }
    let mut rest = s;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(')?;
        let end = body.find(')')?;
        let points: Vec<usize> = body[..end]
            .split(',')
            .map(|t| t.parse::<usize>().ok().filter(|&p| (1..=n).contains(&p)))
            .collect::<Option<_>>()?;
        let mut cyc: Vec<u8> = (0..n as u8).collect();
        for i in 0..points.len() {
            cyc[points[i] - 1] = (points[(i + 1) % points.len()] - 1) as u8;
        }
        // left-to-right composition: first perm, then this cycle
        perm = perm.iter().map(|&x| cyc[x as usize]).collect();
        rest = &body[end + 1..];
    }
    Some(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn check_axioms(g: &Group) {
        let n = g.order() as u32;
        let e = g.identity();
        for a in 0..n {
            assert_eq!(g.mul(a, e), a);
            assert_eq!(g.mul(a, g.inv(a)), e);
            for b in 0..n {
                for c in 0..n {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }

    #[test]
    fn symmetric_5_has_order_120() {
        let g = Group::symmetric(5);
        assert_eq!(g.order(), 120);
        assert_eq!(g.name(g.identity()), "id");
        assert!(!g.is_abelian());
    }

    #[test]
    fn quaternion_relations() {
        let q = Group::quaternion8();
        check_axioms(&q);
        let (i, j, k, m1) = (q.element("i").unwrap(), q.element("j").unwrap(), q.element("k").unwrap(), q.element("-1").unwrap());
        assert_eq!(q.mul(i, i), m1);
        assert_eq!(q.mul(j, j), m1);
        assert_eq!(q.mul(k, k), m1);
        assert_eq!(q.mul(i, j), k);
        assert_eq!(q.mul(j, i), q.element("-k").unwrap());
    }

    #[test]
    fn q8_squared_has_order_64() {
        let q = Group::quaternion8();
        let g = Group::direct_product(&q, &q);
        assert_eq!(g.order(), 64);
        let x = g.element("i|-k").unwrap();
        assert_eq!(x, 2 * 8 + 7);
    }

    #[test]
    fn frobenius_group_of_order_155() {
        let g = Group::frobenius_31_5();
        assert_eq!(g.order(), 155);
        assert!(!g.is_abelian());
        check_axioms(&g);
        // g has order 5 since 2^5 = 32 = 1 mod 31
        let gen = g.element("g").unwrap();
        let mut x = g.identity();
        for _ in 0..5 {
            x = g.mul(x, gen);
        }
        assert_eq!(x, g.identity());
        assert_eq!(g.element("f^12g^4").unwrap(), 12 * 5 + 4);
        assert_eq!(g.element("f^15 g").unwrap(), 15 * 5 + 1);
    }

    #[test]
    fn builtins_satisfy_axioms() {
        for g in [
            Group::cyclic(13),
            Group::symmetric(4),
            Group::direct_product(&Group::cyclic(4), &Group::symmetric(4)),
            Group::field_multiplicative(9).unwrap(),
        ] {
            check_axioms(&g);
        }
    }

    #[test]
    fn cycle_notation_parses_any_rotation() {
        let g = Group::symmetric(5);
        let a = g.element("(1,4)(2,3,5)").unwrap();
        let b = g.element("(4,1)(5,2,3)").unwrap();
        assert_eq!(a, b);
        assert_eq!(g.name(a), "(1,4)(2,3,5)");
    }

    #[test]
    fn permutation_products_are_left_to_right() {
        let g = Group::symmetric(3);
        let a = g.element("(1,2)").unwrap();
        let b = g.element("(2,3)").unwrap();
        // 1 -> 2 -> 3, 3 -> 3 -> 2, 2 -> 1 -> 1
        assert_eq!(g.name(g.mul(a, b)), "(1,3,2)");
    }

    #[test]
    fn cayley_text_round_trip() {
        let g = Group::quaternion8();
        let h = Group::from_cayley_text(&g.to_cayley_text()).unwrap();
        assert_eq!(h.table(), g.table());
        assert_eq!(h.element("-j").unwrap(), g.element("-j").unwrap());
    }

    #[test]
    fn rejects_bad_tables() {
        // not a Latin square
        assert!(Group::from_cayley_text("2\n0 0\n1 1\n").is_err());
        // Latin but no identity
        // a*b = -a-b mod 3
        assert!(Group::from_cayley_text("3\n0 2 1\n2 1 0\n1 0 2\n").is_err());
        // Latin with identity but not associative
        let text = "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0\n";
        let err = Group::from_cayley_text(text).unwrap_err();
        assert!(err.to_string().contains("associative"), "{err}");
    }

    #[test]
    fn spec_parsing() {
        assert_eq!("z13".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(13));
        assert_eq!(
            "cyclic:4 x symmetric:4".parse::<GroupSpec>().unwrap(),
            GroupSpec::DirectProduct(Box::new(GroupSpec::Cyclic(4)), Box::new(GroupSpec::Symmetric(4)))
        );
        let spec: GroupSpec = "q8 x q8".parse().unwrap();
        assert_eq!(spec.to_string().parse::<GroupSpec>().unwrap(), spec);
        assert!("nonsense".parse::<GroupSpec>().is_err());
    }
}
