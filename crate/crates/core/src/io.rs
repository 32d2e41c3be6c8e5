//! JSON interchange formats for groups, geometries, and loops.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::Geometry;
use crate::group::FiniteGroup;
use crate::kloop::KLoop;

/// Group input: either a full multiplication table or permutation generators.
/// All indices are 0-based.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum GroupJson {
    Cayley {
        table: Vec<Vec<usize>>,
        #[serde(skip_serializing_if = "Option::is_none")]
        labels: Option<Vec<String>>,
    },
    Permgroup {
        degree: usize,
        generators: Vec<Vec<usize>>,
    },
}

impl GroupJson {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupJson::Cayley { table, labels } => {
                FiniteGroup::from_cayley_table_labeled(table, labels.clone())
            }
            GroupJson::Permgroup { degree, generators } => {
                FiniteGroup::from_permutation_generators(*degree, generators)
            }
        }
    }

    pub fn build_bounded(&self, bound: usize) -> Result<FiniteGroup> {
        match self {
            GroupJson::Cayley { table, labels } => {
                FiniteGroup::from_cayley_table_labeled(table, labels.clone())
            }
            GroupJson::Permgroup { degree, generators } => {
                FiniteGroup::from_permutation_generators_bounded(*degree, generators, bound)
            }
        }
    }

    /// Export a group in table form.
    pub fn from_group(g: &FiniteGroup) -> Self {
        GroupJson::Cayley {
            table: g.mul_table(),
            labels: g.labels().map(|ls| ls.to_vec()),
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| Error::BadParams {
            reason: format!("invalid group JSON: {e}"),
        })
    }
}

/// Geometry export: the involution class and its line family.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GeometryJson {
    #[serde(rename = "Q")]
    pub q: Vec<usize>,
    pub lines: Vec<Vec<usize>>,
}

impl GeometryJson {
    pub fn from_geometry(geo: &Geometry) -> Self {
        GeometryJson {
            q: geo.points().to_vec(),
            lines: geo.lines().iter().map(|l| l.members().to_vec()).collect(),
        }
    }
}

/// Loop export: ambient carrier indices plus the operation table in
/// carrier positions.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LoopJson {
    pub carrier: Vec<usize>,
    pub otimes: Vec<Vec<usize>>,
}

impl LoopJson {
    pub fn from_loop(l: &KLoop) -> Self {
        let n = l.size();
        LoopJson {
            carrier: l.carrier().to_vec(),
            otimes: (0..n)
                .map(|a| (0..n).map(|b| l.otimes(a, b)).collect())
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cayley_json_round_trip() {
        let text = r#"{"type":"cayley","table":[[0,1],[1,0]],"labels":["e","t"]}"#;
        let parsed = GroupJson::parse(text).unwrap();
        let g = parsed.build().unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.label(1), "t");
        let exported = serde_json::to_string(&GroupJson::from_group(&g)).unwrap();
        let reparsed = GroupJson::parse(&exported).unwrap().build().unwrap();
        assert_eq!(g, reparsed);
    }

    #[test]
    fn permgroup_json_builds() {
        let text = r#"{"type":"permgroup","degree":3,"generators":[[1,2,0],[1,0,2]]}"#;
        let g = GroupJson::parse(text).unwrap().build().unwrap();
        assert_eq!(g.order(), 6);
    }

    #[test]
    fn malformed_json_is_a_bad_param() {
        assert_eq!(
            GroupJson::parse("{\"type\":\"nope\"}").unwrap_err().code(),
            "E_BAD_PARAMS"
        );
    }
}
