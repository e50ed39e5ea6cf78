//! Threshold-graph machinery: binary building strings, recognition,
//! exhaustive per-order enumeration, independence-polynomial uniqueness
//! sweeps, and the pattern survey.
//!
//! Threshold isomorphism is decided by degree-sequence equality
//! throughout; the degree sequence is a complete invariant for this
//! family, and the uniqueness sweep cross-checks that decision.

use std::collections::HashMap;
use std::fmt;

use crate::antiregular::{antiregular_poly_closed, AntiregularSpec};
use crate::engine;
use crate::error::Error;
use crate::graph::{DegreeSequence, Graph, MAX_VERTICES};
use crate::poly::Polynomial;
use crate::report::Report;
use crate::roots;

/// Full-sweep enumeration is wired for desk-scale orders.
pub const MAX_ENUMERATION_ORDER: usize = 16;

/// Construction trace of a threshold graph: bit i tells whether vertex i
/// arrived isolated ('0') or dominating ('1'). Always starts with '0'.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BuildingString {
    bits: Vec<bool>,
}

impl BuildingString {
    pub fn new(bits: Vec<bool>) -> Result<Self, Error> {
        if bits.is_empty() {
            return Err(Error::EmptyBuildingString);
        }
        if bits[0] {
            return Err(Error::BadBuildingString(
                bits.iter().map(|&b| if b { '1' } else { '0' }).collect(),
            ));
        }
        Ok(BuildingString { bits })
    }

    pub fn parse(s: &str) -> Result<Self, Error> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::NonBinaryCharacter(other)),
            })
            .collect::<Result<Vec<_>, _>>()?;
        BuildingString::new(bits)
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    /// The building string of A_n: "0101..." padded to length n with a
    /// leading "0" when n is odd.
    pub fn antiregular(n: usize) -> Result<Self, Error> {
        if n < 1 {
            return Err(Error::OrderOutOfRange { order: n, min: 1, max: MAX_VERTICES });
        }
        let mut bits = Vec::with_capacity(n);
        if n % 2 == 1 {
            bits.push(false);
        }
        while bits.len() < n {
            bits.push(false);
            bits.push(true);
        }
        BuildingString::new(bits)
    }
}

impl fmt::Display for BuildingString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.bits {
            write!(f, "{}", if b { '1' } else { '0' })?;
        }
        Ok(())
    }
}

/// Realize the graph a building string describes.
pub fn build_threshold(s: &BuildingString) -> Result<Graph, Error> {
    let n = s.len();
    if n > MAX_VERTICES {
        return Err(Error::CapacityExceeded { requested: n, limit: MAX_VERTICES });
    }
    let mut edges = Vec::new();
    for (i, &dominating) in s.bits().iter().enumerate() {
        if dominating {
            for j in 0..i {
                edges.push((j, i));
            }
        }
    }
    Graph::from_edges(n, &edges)
}

/// Threshold recognition by peeling: repeatedly strip a dominating vertex
/// if one exists, else an isolated vertex; ties go to the lowest label.
/// Returns the canonical building string, or `None` if the graph is not
/// threshold. The string rebuilds a graph equal to the input up to the
/// peeling's vertex order.
pub fn recognize_threshold(g: &Graph) -> Option<BuildingString> {
    let n = g.vertex_count();
    if n == 0 || n > MAX_VERTICES {
        return None;
    }
    let mut remaining = g.full_mask();
    let mut rev_bits = Vec::with_capacity(n);
    while remaining.count_ones() > 1 {
        let size = remaining.count_ones();
        let mut stripped = None;
        let mut m = remaining;
        while m != 0 {
            let v = m.trailing_zeros() as usize;
            if (g.neighbors(v) & remaining).count_ones() == size - 1 {
                stripped = Some((v, true));
                break;
            }
            m &= m - 1;
        }
        if stripped.is_none() {
            let mut m = remaining;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                if g.neighbors(v) & remaining == 0 {
                    stripped = Some((v, false));
                    break;
                }
                m &= m - 1;
            }
        }
        let (v, bit) = stripped?;
        rev_bits.push(bit);
        remaining &= !(1u64 << v);
    }
    rev_bits.push(false); // the seed vertex
    rev_bits.reverse();
    Some(BuildingString { bits: rev_bits })
}

pub fn is_threshold(g: &Graph) -> bool {
    recognize_threshold(g).is_some()
}

/// One row of the per-order census.
#[derive(Clone, Debug)]
pub struct ThresholdRecord {
    pub string: BuildingString,
    pub graph: Graph,
    pub degrees: DegreeSequence,
    pub poly: Polynomial,
}

/// All 2^(n−1) building strings of length `n`, lexicographically, with
/// the built graph, its degree sequence, and its independence polynomial.
/// Lazy: records are computed as the iterator is driven.
pub fn enumerate_threshold(
    n: usize,
) -> Result<impl Iterator<Item = ThresholdRecord>, Error> {
    if !(1..=MAX_ENUMERATION_ORDER).contains(&n) {
        return Err(Error::OrderOutOfRange { order: n, min: 1, max: MAX_ENUMERATION_ORDER });
    }
    let count: u64 = 1 << (n - 1);
    Ok((0..count).map(move |code| {
        let mut bits = vec![false; n];
        for i in 1..n {
            bits[i] = code >> (n - 1 - i) & 1 == 1;
        }
        let string = BuildingString { bits };
        let graph = build_threshold(&string).expect("length within capacity");
        let degrees = graph.degree_sequence();
        let poly = engine::independence_poly(&graph).expect("desk-scale graph");
        ThresholdRecord { string, graph, degrees, poly }
    }))
}

/// Desk-scale check of independence-polynomial uniqueness: group all
/// threshold graphs of order `n` by polynomial and assert every group is
/// one isomorphism class (equal degree sequences), with the antiregular
/// groups singled out. Violations become failing report rows.
pub fn verify_uniqueness(n: usize) -> Result<Report, Error> {
    if n > 12 {
        return Err(Error::OrderOutOfRange { order: n, min: 1, max: 12 });
    }
    let mut groups: HashMap<Polynomial, Vec<DegreeSequence>> = HashMap::new();
    for record in enumerate_threshold(n)? {
        groups.entry(record.poly).or_default().push(record.degrees);
    }
    let mut report = Report::new();
    let mut mixed = 0usize;
    for degs in groups.values() {
        if degs.iter().any(|d| d != &degs[0]) {
            mixed += 1;
        }
    }
    report.push(
        format!("order {n}: polynomial-equal implies degree-sequence-equal"),
        mixed == 0,
        format!("{} polynomial classes, {mixed} mixed", groups.len()),
    );

    let a_poly = antiregular_poly_closed(&AntiregularSpec::connected(n)?);
    let a_degs = groups.get(&a_poly);
    report.push(
        format!("order {n}: I(A_{n}) group is a single isomorphism class"),
        a_degs.is_some_and(|d| d.iter().all(|x| x == &d[0])),
        format!("{} strings build it", a_degs.map_or(0, Vec::len)),
    );
    if n >= 2 {
        let c_poly = antiregular_poly_closed(&AntiregularSpec::complement(n)?);
        let c_degs = groups.get(&c_poly);
        report.push(
            format!("order {n}: I(comp(A_{n})) group is a single isomorphism class"),
            c_degs.is_some_and(|d| d.iter().all(|x| x == &d[0])),
            format!("{} strings build it", c_degs.map_or(0, Vec::len)),
        );
    }
    Ok(report)
}

/// A building-string pattern: fixed prefix, then a period repeated (and
/// truncated) to reach each requested order.
#[derive(Clone, Debug)]
pub struct PatternSpec {
    pub prefix: Vec<bool>,
    pub period: Vec<bool>,
    pub orders: std::ops::RangeInclusive<usize>,
}

impl PatternSpec {
    pub fn parse(prefix: &str, period: &str, orders: std::ops::RangeInclusive<usize>) -> Result<Self, Error> {
        let parse_bits = |s: &str| {
            s.chars()
                .map(|c| match c {
                    '0' => Ok(false),
                    '1' => Ok(true),
                    other => Err(Error::NonBinaryCharacter(other)),
                })
                .collect::<Result<Vec<bool>, _>>()
        };
        let prefix = parse_bits(prefix)?;
        let period = parse_bits(period)?;
        if period.is_empty() {
            return Err(Error::EmptyPeriod);
        }
        Ok(PatternSpec { prefix, period, orders })
    }

    /// Expand to exactly `order` bits; the final period repetition is
    /// truncated when it overshoots.
    pub fn expand(&self, order: usize) -> Result<BuildingString, Error> {
        let mut bits = Vec::with_capacity(order);
        bits.extend(self.prefix.iter().copied().take(order));
        let mut i = 0;
        while bits.len() < order {
            bits.push(self.period[i % self.period.len()]);
            i += 1;
        }
        BuildingString::new(bits)
    }
}

/// Per-graph survey row: polynomial shape flags plus root structure.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SurveyRecord {
    pub order: usize,
    pub string: String,
    pub coeffs: Vec<String>,
    pub degrees: DegreeSequence,
    pub unimodal: bool,
    pub log_concave: bool,
    pub real_root_count: usize,
    pub all_roots_real: bool,
    #[serde(skip)]
    pub poly: Polynomial,
}

/// Expand the pattern at every requested order and classify the
/// resulting independence polynomials.
pub fn pattern_survey(spec: &PatternSpec) -> Result<Vec<SurveyRecord>, Error> {
    let mut out = Vec::new();
    for order in spec.orders.clone() {
        let string = spec.expand(order)?;
        let graph = build_threshold(&string)?;
        let poly = engine::independence_poly(&graph)?;
        let rr = roots::real_roots(&poly)?;
        out.push(SurveyRecord {
            order,
            string: string.to_string(),
            coeffs: poly.coeff_strings(),
            degrees: graph.degree_sequence(),
            unimodal: poly.is_unimodal()?,
            log_concave: poly.is_log_concave()?,
            real_root_count: rr.count,
            all_roots_real: roots::all_roots_real(&poly)?,
            poly,
        });
    }
    Ok(out)
}
