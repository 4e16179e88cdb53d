//! Named graph families, looked up by descriptor strings such as `"johnson:6,3"`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use drgq_exact::int;
use indexmap::IndexMap;

use crate::drg::ClassicalParameters;
use crate::graph::Graph;
use crate::{Error, Result};

/// Largest vertex count any builder will produce.
pub const MAX_FAMILY_ORDER: usize = 4096;

pub trait FamilyBuilder: Send + Sync {
    fn name(&self) -> &'static str;

    /// Names of the integer parameters, in descriptor order.
    fn parameters(&self) -> &'static [&'static str];

    fn build(&self, params: &[u64]) -> Result<Graph>;

    /// Classical parameters of the resulting graph, when it has them.
    fn classical_parameters(&self, _params: &[u64]) -> Option<ClassicalParameters> {
        None
    }
}

/// `family` or `family:p1,p2,…`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FamilyDescriptor {
    pub family: String,
    pub params: Vec<u64>,
}

impl FamilyDescriptor {
    pub fn new(family: &str, params: &[u64]) -> Self {
        Self {
            family: family.to_string(),
            params: params.to_vec(),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let (family, rest) = s.split_once(':').unwrap_or((s, ""));
        if family.is_empty() {
            return Err(Error::Syntax(format!("empty family name in {s:?}")));
        }
        let params = if rest.trim().is_empty() {
            Vec::new()
        } else {
            rest.split(',')
                .map(|p| {
                    p.trim()
                        .parse::<u64>()
                        .map_err(|_| Error::Syntax(format!("family parameter {p:?} is not a non-negative integer")))
                })
                .collect::<Result<_>>()?
        };
        Ok(Self {
            family: family.to_string(),
            params,
        })
    }
}

impl fmt::Display for FamilyDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.family)?;
        if !self.params.is_empty() {
            let p: Vec<String> = self.params.iter().map(u64::to_string).collect();
            write!(f, ":{}", p.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for FamilyDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

pub struct FamilyRegistry {
    builders: IndexMap<&'static str, Arc<dyn FamilyBuilder>>,
}

impl Default for FamilyRegistry {
    fn default() -> Self {
        let mut r = Self {
            builders: IndexMap::new(),
        };
        r.register(Arc::new(Hamming));
        r.register(Arc::new(Johnson));
        r.register(Arc::new(Hypercube));
        r.register(Arc::new(HalvedCube));
        r.register(Arc::new(Cycle));
        r.register(Arc::new(Path));
        r.register(Arc::new(Complete));
        r.register(Arc::new(CompleteBipartite));
        r.register(Arc::new(Petersen));
        r.register(Arc::new(Icosahedron));
        r
    }
}

impl FamilyRegistry {
    pub fn register(&mut self, builder: Arc<dyn FamilyBuilder>) {
        self.builders.insert(builder.name(), builder);
    }

    pub fn get(&self, name: &str) -> Option<Arc<dyn FamilyBuilder>> {
        self.builders.get(name).cloned()
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.builders.keys().copied()
    }

    fn lookup(&self, desc: &FamilyDescriptor) -> Result<Arc<dyn FamilyBuilder>> {
        let b = self
            .get(&desc.family)
            .ok_or_else(|| Error::UnknownFamily(desc.family.clone()))?;
        if b.parameters().len() != desc.params.len() {
            return Err(Error::InvalidFamilyParameters(format!(
                "{} takes {} parameter(s) ({}), found {}",
                b.name(),
                b.parameters().len(),
                b.parameters().join(","),
                desc.params.len()
            )));
        }
        Ok(b)
    }

    pub fn build(&self, desc: &FamilyDescriptor) -> Result<Graph> {
        self.lookup(desc)?.build(&desc.params)
    }

    pub fn classical_parameters(&self, desc: &FamilyDescriptor) -> Result<Option<ClassicalParameters>> {
        Ok(self.lookup(desc)?.classical_parameters(&desc.params))
    }
}

/// Builds a graph from a descriptor using the built-in families.
pub fn build_family(desc: &FamilyDescriptor) -> Result<Graph> {
    FamilyRegistry::default().build(desc)
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidFamilyParameters(msg.into())
}

fn check_order(n: u128) -> Result<usize> {
    if n > MAX_FAMILY_ORDER as u128 {
        return Err(invalid(format!("{n} vertices exceeds the limit of {MAX_FAMILY_ORDER}")));
    }
    Ok(n as usize)
}

fn classical(d: u64, b: i64, alpha: i64, beta: i64) -> Option<ClassicalParameters> {
    if d < 2 {
        return None;
    }
    ClassicalParameters::new(d as usize, int(b), int(alpha), int(beta)).ok()
}

/// Words of length `d` over `q` symbols, lexicographic.
fn words(d: u64, q: u64) -> Result<Vec<Vec<u64>>> {
    let n = check_order((q as u128).checked_pow(d as u32).unwrap_or(u128::MAX))?;
    Ok((0..n as u64)
        .map(|mut idx| {
            let mut w = vec![0; d as usize];
            for slot in w.iter_mut().rev() {
                *slot = idx % q;
                idx /= q;
            }
            w
        })
        .collect())
}

fn hamming_graph(d: u64, q: u64) -> Result<Graph> {
    if d < 1 || q < 2 {
        return Err(invalid("hamming needs D ≥ 1 and q ≥ 2"));
    }
    let w = words(d, q)?;
    Ok(Graph::from_predicate(w.len(), |x, y| {
        w[x].iter().zip(&w[y]).filter(|(a, b)| a != b).count() == 1
    }))
}

struct Hamming;

impl FamilyBuilder for Hamming {
    fn name(&self) -> &'static str {
        "hamming"
    }

    fn parameters(&self) -> &'static [&'static str] {
        &["D", "q"]
    }

    fn build(&self, p: &[u64]) -> Result<Graph> {
        hamming_graph(p[0], p[1])
    }

    fn classical_parameters(&self, p: &[u64]) -> Option<ClassicalParameters> {
        classical(p[0], 1, 0, p[1] as i64 - 1)
    }
}

struct Hypercube;

impl FamilyBuilder for Hypercube {
    fn name(&self) -> &'static str {
        "hypercube"
    }

    fn parameters(&self) -> &'static [&'static str] {
        &["D"]
    }

    fn build(&self, p: &[u64]) -> Result<Graph> {
        hamming_graph(p[0], 2)
    }

    fn classical_parameters(&self, p: &[u64]) -> Option<ClassicalParameters> {
        classical(p[0], 1, 0, 1)
    }
}

/// `k`-subsets of `{0, …, n−1}` as bit masks, lexicographic in their sorted elements.
fn subsets(n: u64, k: u64) -> Vec<u64> {
    fn rec(start: u64, n: u64, k: u64, mask: u64, out: &mut Vec<u64>) {
        if k == 0 {
            out.push(mask);
            return;
        }
        for i in start..n {
            if n - i < k {
                break;
            }
            rec(i + 1, n, k - 1, mask | (1 << i), out);
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, 0, &mut out);
    out
}

fn binomial(n: u64, k: u64) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

struct Johnson;

impl FamilyBuilder for Johnson {
    fn name(&self) -> &'static str {
        "johnson"
    }

    fn parameters(&self) -> &'static [&'static str] {
        &["n", "k"]
    }

    fn build(&self, p: &[u64]) -> Result<Graph> {
        let (n, k) = (p[0], p[1]);
        if k < 1 || k >= n || n > 63 {
            return Err(invalid(format!("johnson needs 1 ≤ k < n ≤ 63, found n = {n}, k = {k}")));
        }
        check_order(binomial(n, k))?;
        let s = subsets(n, k);
        Ok(Graph::from_predicate(s.len(), |x, y| {
            (s[x] & s[y]).count_ones() as u64 == k - 1
        }))
    }

    fn classical_parameters(&self, p: &[u64]) -> Option<ClassicalParameters> {
        let d = p[1].min(p[0].saturating_sub(p[1]));
        classical(d, 1, 1, p[0] as i64 - d as i64)
    }
}

struct HalvedCube;

impl FamilyBuilder for HalvedCube {
    fn name(&self) -> &'static str {
        "halved_cube"
    }

    fn parameters(&self) -> &'static [&'static str] {
        &["D"]
    }

    fn build(&self, p: &[u64]) -> Result<Graph> {
        let d = p[0];
        if !(2..=13).contains(&d) {
            return Err(invalid(format!("halved_cube needs 2 ≤ D ≤ 13, found {d}")));
        }
        let even: Vec<u64> = (0..1u64 << d).filter(|w| w.count_ones() % 2 == 0).collect();
        Ok(Graph::from_predicate(even.len(), |x, y| (even[x] ^ even[y]).count_ones() == 2))
    }

    fn classical_parameters(&self, p: &[u64]) -> Option<ClassicalParameters> {
        let m = p[0];
        classical(m / 2, 1, 2, 2 * m.div_ceil(2) as i64 - 1)
    }
}

struct Cycle;

impl FamilyBuilder for Cycle {
    fn name(&self) -> &'static str {
        "cycle"
    }

    fn parameters(&self) -> &'static [&'static str] {
        &["n"]
    }

    fn build(&self, p: &[u64]) -> Result<Graph> {
        let n = check_order(p[0] as u128)?;
        if n < 3 {
            return Err(invalid(format!("cycle needs n ≥ 3, found {n}")));
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }
}

struct Path;

impl FamilyBuilder for Path {
    fn name(&self) -> &'static str {
        "path"
    }

    fn parameters(&self) -> &'static [&'static str] {
        &["n"]
    }

    fn build(&self, p: &[u64]) -> Result<Graph> {
        let n = check_order(p[0] as u128)?;
        if n < 1 {
            return Err(invalid("path needs at least one vertex"));
        }
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }
}

struct Complete;

impl FamilyBuilder for Complete {
    fn name(&self) -> &'static str {
        "complete"
    }

    fn parameters(&self) -> &'static [&'static str] {
        &["n"]
    }

    fn build(&self, p: &[u64]) -> Result<Graph> {
        let n = check_order(p[0] as u128)?;
        if n < 2 {
            return Err(invalid(format!("complete needs n ≥ 2, found {n}")));
        }
        Ok(Graph::from_predicate(n, |_, _| true))
    }
}

struct CompleteBipartite;

impl FamilyBuilder for CompleteBipartite {
    fn name(&self) -> &'static str {
        "complete_bipartite"
    }

    fn parameters(&self) -> &'static [&'static str] {
        &["r", "s"]
    }

    fn build(&self, p: &[u64]) -> Result<Graph> {
        let (r, s) = (p[0], p[1]);
        if r < 1 || s < 1 {
            return Err(invalid("complete_bipartite needs r, s ≥ 1"));
        }
        let n = check_order(r as u128 + s as u128)?;
        let r = r as usize;
        Ok(Graph::from_predicate(n, |x, y| (x < r) != (y < r)))
    }
}

struct Petersen;

impl FamilyBuilder for Petersen {
    fn name(&self) -> &'static str {
        "petersen"
    }

    fn parameters(&self) -> &'static [&'static str] {
        &[]
    }

    /// Disjointness graph of the 2-subsets of a 5-set.
    fn build(&self, _: &[u64]) -> Result<Graph> {
        let s = subsets(5, 2);
        Ok(Graph::from_predicate(s.len(), |x, y| s[x] & s[y] == 0))
    }
}

struct Icosahedron;

impl FamilyBuilder for Icosahedron {
    fn name(&self) -> &'static str {
        "icosahedron"
    }

    fn parameters(&self) -> &'static [&'static str] {
        &[]
    }

    /// Apex 0, upper pentagon 1–5, lower pentagon 6–10, apex 11.
    fn build(&self, _: &[u64]) -> Result<Graph> {
        let mut edges = Vec::new();
        for i in 0..5 {
            let (up, up_next) = (1 + i, 1 + (i + 1) % 5);
            let (low, low_next) = (6 + i, 6 + (i + 1) % 5);
            edges.extend([(0, up), (up, up_next), (up, low), (up, low_next), (low, low_next), (low, 11)]);
        }
        Graph::from_edges(12, edges)
    }
}
