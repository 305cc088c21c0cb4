//! Finite groups given by Cayley tables, and subsets encoded as bitmasks.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest group order representable by a [`SubsetMask`].
pub const MAX_ORDER: usize = 64;

/// Default cap on the group order for operations that enumerate `Ω_σ`.
pub const DEFAULT_ORDER_CAP: usize = 12;

/// A subset of a finite group as a membership bitmask over element indices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SubsetMask(pub u64);

/// Serialized as the sorted list of element indices.
impl Serialize for SubsetMask {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.elements())
    }
}

impl<'de> Deserialize<'de> for SubsetMask {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<SubsetMask, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        if let Some(&g) = v.iter().find(|&&g| g >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("element index {g} exceeds {}", MAX_ORDER - 1)));
        }
        Ok(SubsetMask::from_elements(v))
    }
}

impl SubsetMask {
    pub const EMPTY: SubsetMask = SubsetMask(0);

    pub fn singleton(g: usize) -> SubsetMask {
        SubsetMask(1 << g)
    }

    /// `{1}`, the identity singleton.
    pub fn identity() -> SubsetMask {
        SubsetMask(1)
    }

    pub fn from_elements<I: IntoIterator<Item = usize>>(it: I) -> SubsetMask {
        SubsetMask(it.into_iter().fold(0, |m, g| m | (1 << g)))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, g: usize) -> bool {
        self.0 >> g & 1 == 1
    }

    pub fn with(self, g: usize) -> SubsetMask {
        SubsetMask(self.0 | 1 << g)
    }

    pub fn without(self, g: usize) -> SubsetMask {
        SubsetMask(self.0 & !(1 << g))
    }

    pub fn union(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 | other.0)
    }

    pub fn intersection(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & other.0)
    }

    pub fn difference(self, other: SubsetMask) -> SubsetMask {
        SubsetMask(self.0 & !other.0)
    }

    pub fn is_subset_of(self, other: SubsetMask) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Member indices in increasing order.
    pub fn elements(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let g = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(g)
            }
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.elements().collect()
    }

    /// Sort key: size first, then mask value.
    pub fn size_key(self) -> (usize, u64) {
        (self.len(), self.0)
    }
}

impl fmt::Debug for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.elements()).finish()
    }
}

impl fmt::Display for SubsetMask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.elements().map(|g| g.to_string()).collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

/// Builtin group families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BuiltinFamily {
    /// Cyclic group of order `param`.
    Cyclic,
    /// Dihedral group of order `2 * param`.
    Dihedral,
    /// Symmetric group on `param` points.
    Symmetric,
    /// Klein four-group; `param` is ignored.
    Klein,
}

/// Input description of a group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase")]
pub enum GroupDescriptor {
    Builtin {
        name: BuiltinFamily,
        #[serde(default)]
        param: usize,
    },
    Cayley {
        n: usize,
        table: Vec<Vec<usize>>,
        #[serde(default)]
        names: Option<Vec<String>>,
    },
}

impl FromStr for GroupDescriptor {
    type Err = Error;

    /// Parses the shorthand `builtin:<family>[:<param>]`.
    fn from_str(s: &str) -> Result<GroupDescriptor> {
        let parts: Vec<&str> = s.split(':').collect();
        let bad = || Error::Schema(format!("unrecognised group shorthand {s:?}"));
        if parts.len() < 2 || parts.len() > 3 || parts[0] != "builtin" {
            return Err(bad());
        }
        let name = match parts[1] {
            "cyclic" => BuiltinFamily::Cyclic,
            "dihedral" => BuiltinFamily::Dihedral,
            "symmetric" => BuiltinFamily::Symmetric,
            "klein" => BuiltinFamily::Klein,
            _ => return Err(bad()),
        };
        let param = match parts.get(2) {
            Some(p) => p.parse().map_err(|_| bad())?,
            None if name == BuiltinFamily::Klein => 4,
            None => return Err(bad()),
        };
        Ok(GroupDescriptor::Builtin { name, param })
    }
}

/// A validated finite group with the identity at index 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inv: Vec<usize>,
    names: Vec<String>,
}

impl FiniteGroup {
    pub fn build(desc: &GroupDescriptor) -> Result<FiniteGroup> {
        match desc {
            GroupDescriptor::Builtin { name, param } => match name {
                BuiltinFamily::Cyclic => FiniteGroup::cyclic(*param),
                BuiltinFamily::Dihedral => FiniteGroup::dihedral(*param),
                BuiltinFamily::Symmetric => FiniteGroup::symmetric(*param),
                BuiltinFamily::Klein => Ok(FiniteGroup::klein()),
            },
            GroupDescriptor::Cayley { n, table, names } => {
                if table.len() != *n {
                    return Err(Error::NotAGroup(format!("table has {} rows, expected {n}", table.len())));
                }
                FiniteGroup::from_table(table.clone(), names.clone())
            }
        }
    }

    /// Validates a Cayley table. The identity is moved to index 0 if needed.
    pub fn from_table(table: Vec<Vec<usize>>, names: Option<Vec<String>>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        if n > MAX_ORDER {
            return Err(Error::NotAGroup(format!("order {n} exceeds the supported maximum {MAX_ORDER}")));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!("row {i} has length {}, expected {n}", row.len())));
            }
            if let Some(&x) = row.iter().find(|&&x| x >= n) {
                return Err(Error::NotAGroup(format!("entry {x} in row {i} is out of range")));
            }
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::NotAGroup(format!("{} names for {n} elements", names.len())));
            }
        }
        let e = (0..n)
            .find(|&e| (0..n).all(|g| table[e][g] == g && table[g][e] == g))
            .ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(Error::NotAGroup(format!("associativity fails at ({a},{b},{c})")));
                    }
                }
            }
        }
        for g in 0..n {
            if !(0..n).any(|h| table[g][h] == e && table[h][g] == e) {
                return Err(Error::NotAGroup(format!("element {g} has no inverse")));
            }
        }
        // Relabel so that the identity sits at index 0.
        let swap = |x: usize| if x == e { 0 } else if x == 0 { e } else { x };
        let mut flat = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                flat[swap(a) * n + swap(b)] = swap(table[a][b]);
            }
        }
        let names = match names {
            Some(mut v) => {
                v.swap(0, e);
                v
            }
            None => (0..n).map(|i| i.to_string()).collect(),
        };
        Ok(FiniteGroup::from_flat(n, flat, names))
    }

    fn from_flat(order: usize, table: Vec<usize>, names: Vec<String>) -> FiniteGroup {
        let inv = (0..order).map(|g| (0..order).find(|&h| table[g * order + h] == 0).unwrap()).collect();
        FiniteGroup { order, table, inv, names }
    }

    fn from_product<F: Fn(usize, usize) -> usize>(order: usize, names: Vec<String>, mul: F) -> FiniteGroup {
        let mut table = vec![0; order * order];
        for a in 0..order {
            for b in 0..order {
                table[a * order + b] = mul(a, b);
            }
        }
        FiniteGroup::from_flat(order, table, names)
    }

    /// Cyclic group `⟨a⟩` of order `n`; element `i` is `a^i`.
    pub fn cyclic(n: usize) -> Result<FiniteGroup> {
        if n == 0 || n > MAX_ORDER {
            return Err(Error::NotAGroup(format!("unsupported cyclic order {n}")));
        }
        let names = (0..n)
            .map(|i| match i {
                0 => "1".to_string(),
                1 => "a".to_string(),
                _ => format!("a^{i}"),
            })
            .collect();
        Ok(FiniteGroup::from_product(n, names, |a, b| (a + b) % n))
    }

    /// Dihedral group of order `2n`; element `k + n·e` is `r^k s^e`.
    pub fn dihedral(n: usize) -> Result<FiniteGroup> {
        if n == 0 || 2 * n > MAX_ORDER {
            return Err(Error::NotAGroup(format!("unsupported dihedral parameter {n}")));
        }
        let names = (0..2 * n)
            .map(|i| {
                let (k, e) = (i % n, i / n);
                let r = match k {
                    0 => String::new(),
                    1 => "r".to_string(),
                    _ => format!("r^{k}"),
                };
                match (r.is_empty(), e) {
                    (true, 0) => "1".to_string(),
                    (true, _) => "s".to_string(),
                    (false, 0) => r,
                    (false, _) => format!("{r}s"),
                }
            })
            .collect();
        Ok(FiniteGroup::from_product(2 * n, names, |x, y| {
            let (k1, e1) = (x % n, x / n);
            let (k2, e2) = (y % n, y / n);
            let k = if e1 == 0 { (k1 + k2) % n } else { (k1 + n - k2) % n };
            k + n * ((e1 + e2) % 2)
        }))
    }

    /// Symmetric group on `{0, …, n−1}` in lexicographic order of image
    /// arrays; composition is `(p·q)(i) = p(q(i))`.
    pub fn symmetric(n: usize) -> Result<FiniteGroup> {
        if n == 0 || n > 4 {
            return Err(Error::NotAGroup(format!("unsupported symmetric degree {n}")));
        }
        let mut perms: Vec<Vec<usize>> = Vec::new();
        permutations(&mut (0..n).collect(), 0, &mut perms);
        perms.sort();
        let index = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
        let names = perms.iter().map(|p| cycle_notation(p)).collect();
        let order = perms.len();
        Ok(FiniteGroup::from_product(order, names, |a, b| {
            let c: Vec<usize> = (0..n).map(|i| perms[a][perms[b][i]]).collect();
            index(&c)
        }))
    }

    /// Klein four-group `C₂ × C₂`; element `x₁ + 2x₂` is `(x₁, x₂)`.
    pub fn klein() -> FiniteGroup {
        let names = ["1", "u", "v", "uv"].iter().map(|s| s.to_string()).collect();
        FiniteGroup::from_product(4, names, |a, b| a ^ b)
    }

    /// Direct product; element `(g, h)` has index `g + |G|·h`.
    pub fn direct_product(g: &FiniteGroup, h: &FiniteGroup) -> Result<FiniteGroup> {
        let (m, n) = (g.order, h.order);
        if m * n > MAX_ORDER {
            return Err(Error::NotAGroup(format!("product order {} exceeds {MAX_ORDER}", m * n)));
        }
        let names = (0..m * n).map(|i| format!("({},{})", g.name(i % m), h.name(i / m))).collect();
        Ok(FiniteGroup::from_product(m * n, names, |x, y| {
            g.mul(x % m, y % m) + m * h.mul(x / m, y / m)
        }))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn name(&self, a: usize) -> &str {
        &self.names[a]
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// The whole group as a mask.
    pub fn full(&self) -> SubsetMask {
        if self.order == 64 {
            SubsetMask(u64::MAX)
        } else {
            SubsetMask((1u64 << self.order) - 1)
        }
    }

    pub fn check_element(&self, g: usize) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { index: g, order: self.order })
        }
    }

    pub fn check_subset(&self, s: SubsetMask) -> Result<()> {
        if s.is_subset_of(self.full()) {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange { index: 63 - s.0.leading_zeros() as usize, order: self.order })
        }
    }

    /// `gS = {g·s : s ∈ S}`.
    pub fn translate(&self, s: SubsetMask, g: usize) -> SubsetMask {
        SubsetMask::from_elements(s.elements().map(|x| self.mul(g, x)))
    }

    /// Closure of `gens ∪ {1}` under products (and hence inverses).
    pub fn subgroup_generated(&self, gens: &[usize]) -> SubsetMask {
        let mut h = SubsetMask::identity();
        let mut frontier: Vec<usize> = vec![0];
        for &g in gens {
            if !h.contains(g) {
                h = h.with(g);
                frontier.push(g);
            }
        }
        while let Some(x) = frontier.pop() {
            for &g in gens {
                for y in [self.mul(x, g), self.mul(g, x)] {
                    if !h.contains(y) {
                        h = h.with(y);
                        frontier.push(y);
                    }
                }
            }
        }
        h
    }

    pub fn is_subgroup(&self, s: SubsetMask) -> bool {
        s.contains(0)
            && s.elements().all(|a| s.contains(self.inv(a)) && s.elements().all(|b| s.contains(self.mul(a, b))))
    }

    /// All subgroups, sorted by size then mask.
    pub fn subgroups(&self) -> Vec<SubsetMask> {
        let mut subs: Vec<SubsetMask> = Vec::new();
        for g in self.elements() {
            let c = self.subgroup_generated(&[g]);
            if !subs.contains(&c) {
                subs.push(c);
            }
        }
        // Every subgroup is a join of cyclic subgroups.
        let mut i = 0;
        while i < subs.len() {
            for j in 0..i {
                let gens: Vec<usize> = subs[i].union(subs[j]).to_vec();
                let k = self.subgroup_generated(&gens);
                if !subs.contains(&k) {
                    subs.push(k);
                }
            }
            i += 1;
        }
        subs.sort_by_key(|s| s.size_key());
        subs
    }

    pub fn element_order(&self, g: usize) -> usize {
        let mut x = g;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, g);
            k += 1;
        }
        k
    }

    /// Names of the members of `s`.
    pub fn subset_names(&self, s: SubsetMask) -> Vec<String> {
        s.elements().map(|g| self.names[g].clone()).collect()
    }

    /// The Cayley-table descriptor of this group.
    pub fn to_descriptor(&self) -> GroupDescriptor {
        let n = self.order;
        GroupDescriptor::Cayley {
            n,
            table: (0..n).map(|a| (0..n).map(|b| self.mul(a, b)).collect()).collect(),
            names: Some(self.names.clone()),
        }
    }
}

fn permutations(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == v.len() {
        out.push(v.clone());
        return;
    }
    for i in k..v.len() {
        v.swap(k, i);
        permutations(v, k + 1, out);
        v.swap(k, i);
    }
}

fn cycle_notation(p: &[usize]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for s in 0..p.len() {
        if seen[s] || p[s] == s {
            continue;
        }
        let mut cyc = vec![s];
        seen[s] = true;
        let mut x = p[s];
        while x != s {
            seen[x] = true;
            cyc.push(x);
            x = p[x];
        }
        let body: Vec<String> = cyc.iter().map(|c| c.to_string()).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        "1".to_string()
    } else {
        out
    }
}
