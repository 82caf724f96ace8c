//! Roman labelings f: V -> {0,1,2} and the validity predicates.
//!
//! A labeling is valid as an RDF when every 0-vertex has a 2-neighbor, and
//! as a TRDF when additionally no positive vertex is isolated among the
//! positive vertices. The text form everywhere (Display, serde, CLI files)
//! is the whitespace-separated digit string "0 2 1 0".

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::products::RootedProduct;
use crate::set::VertexSet;
use serde::de::Error as DeError;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RomanLabeling {
    labels: Vec<u8>,
}

impl RomanLabeling {
    pub fn from_labels(labels: Vec<u8>) -> Result<RomanLabeling> {
        if let Some((v, &l)) = labels.iter().enumerate().find(|(_, &l)| l > 2) {
            return Err(Error::InvalidWitness(format!(
                "label {} at vertex {} is not in {{0,1,2}}",
                l, v
            )));
        }
        Ok(RomanLabeling { labels })
    }

    pub fn constant(n: usize, label: u8) -> Result<RomanLabeling> {
        RomanLabeling::from_labels(vec![label; n])
    }

    /// Build from the positive classes; anything in neither set gets 0.
    pub fn from_sets(n: usize, ones: &VertexSet, twos: &VertexSet) -> Result<RomanLabeling> {
        if ones.universe() != n || twos.universe() != n {
            return Err(Error::DimensionMismatch(format!(
                "label classes live on universes {} and {}, graph order is {}",
                ones.universe(),
                twos.universe(),
                n
            )));
        }
        if ones.intersects(twos) {
            return Err(Error::InvalidWitness(format!(
                "classes overlap at {:?}",
                ones.intersection(twos)
            )));
        }
        let mut labels = vec![0u8; n];
        for v in ones.iter() {
            labels[v] = 1;
        }
        for v in twos.iter() {
            labels[v] = 2;
        }
        Ok(RomanLabeling { labels })
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u8] {
        &self.labels
    }

    pub fn weight(&self) -> usize {
        self.labels.iter().map(|&l| l as usize).sum()
    }

    fn class(&self, label: u8) -> VertexSet {
        VertexSet::from_members(
            self.labels.len(),
            self.labels
                .iter()
                .enumerate()
                .filter(|(_, &l)| l == label)
                .map(|(v, _)| v),
        )
    }

    pub fn v0(&self) -> VertexSet {
        self.class(0)
    }

    pub fn v1(&self) -> VertexSet {
        self.class(1)
    }

    pub fn v2(&self) -> VertexSet {
        self.class(2)
    }

    /// V_1 union V_2.
    pub fn positive(&self) -> VertexSet {
        VertexSet::from_members(
            self.labels.len(),
            self.labels
                .iter()
                .enumerate()
                .filter(|(_, &l)| l > 0)
                .map(|(v, _)| v),
        )
    }
}

impl fmt::Display for RomanLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.labels.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l)?;
        }
        Ok(())
    }
}

impl fmt::Debug for RomanLabeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self)
    }
}

impl Serialize for RomanLabeling {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ser.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for RomanLabeling {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(de)?;
        parse_labeling_text(&s).map_err(D::Error::custom)
    }
}

/// Parse the "0 2 1" text form (any whitespace separates).
pub fn parse_labeling_text(s: &str) -> Result<RomanLabeling> {
    let mut labels = Vec::new();
    for tok in s.split_whitespace() {
        match tok {
            "0" => labels.push(0),
            "1" => labels.push(1),
            "2" => labels.push(2),
            _ => {
                return Err(Error::InvalidWitness(format!(
                    "labeling token {:?} is not one of 0, 1, 2",
                    tok
                )))
            }
        }
    }
    Ok(RomanLabeling { labels })
}

fn check_dims(g: &Graph, f: &RomanLabeling) -> Result<()> {
    if f.len() != g.order() {
        return Err(Error::DimensionMismatch(format!(
            "labeling has {} entries, graph has {} vertices",
            f.len(),
            g.order()
        )));
    }
    Ok(())
}

/// Vertices labeled 0 with no 2-labeled neighbor.
pub fn rdf_violations(g: &Graph, f: &RomanLabeling) -> Result<Vec<usize>> {
    check_dims(g, f)?;
    let twos = f.v2();
    Ok(g.vertices()
        .filter(|&v| f.get(v) == 0 && g.neighbors(v).is_disjoint(&twos))
        .collect())
}

/// Positive vertices with no positive neighbor (the extra TRDF condition).
pub fn total_violations(g: &Graph, f: &RomanLabeling) -> Result<Vec<usize>> {
    check_dims(g, f)?;
    let pos = f.positive();
    Ok(g.vertices()
        .filter(|&v| f.get(v) > 0 && g.neighbors(v).is_disjoint(&pos))
        .collect())
}

pub fn is_rdf(g: &Graph, f: &RomanLabeling) -> Result<bool> {
    Ok(rdf_violations(g, f)?.is_empty())
}

pub fn is_trdf(g: &Graph, f: &RomanLabeling) -> Result<bool> {
    Ok(rdf_violations(g, f)?.is_empty() && total_violations(g, f)?.is_empty())
}

/// Restriction of a rooted-product labeling to copy x, read as a labeling
/// of H (the copy's spine vertex lands on H's root).
pub fn restrict_to_copy(rp: &RootedProduct, f: &RomanLabeling, x: usize) -> Result<RomanLabeling> {
    check_dims(&rp.graph, f)?;
    if x >= rp.n_g {
        return Err(Error::InvalidVertex {
            vertex: x,
            order: rp.n_g,
        });
    }
    let labels = (0..rp.n_h).map(|w| f.get(rp.encode(x, w))).collect();
    Ok(RomanLabeling { labels })
}
