//! All families behind one type, converted through binary trees.

use std::fmt;
use std::str::FromStr;

use serde_json::Value;

use crate::ball::{BallSet, TorsionPair};
use crate::baseball::{perm_to_torsion, perm_to_tree, torsion_to_perm, tree_to_perm};
use crate::bookshelf::{bookshelf, bookshelf_gapped, gapped_to_tree, inverse_bookshelf};
use crate::dyck::{dyck_to_tree, dyck_to_young, tree_to_dyck, young_to_dyck};
use crate::error::{Error, Result};
use crate::json::{balls_from_value, Document};
use crate::path::{enumerate_dyck, DyckPath};
use crate::perm::{enumerate_perms213, Permutation213};
use crate::torsion::{
    enumerate_torsion, torsion_generate, torsion_to_gapped_young, torsion_to_tree, tree_to_torsion,
};
use crate::tree::{enumerate_trees, BinaryTree};
use crate::young::{enumerate_young, GappedYoungDiagram, YoungDiagram};

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub enum Family {
    Tree,
    Dyck,
    Young,
    Gapped,
    Perm213,
    Torsion,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::Tree,
        Family::Dyck,
        Family::Young,
        Family::Gapped,
        Family::Perm213,
        Family::Torsion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Tree => "tree",
            Family::Dyck => "dyck",
            Family::Young => "young",
            Family::Gapped => "gapped",
            Family::Perm213 => "perm213",
            Family::Torsion => "torsion",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| format!("unknown family {s:?}; expected one of tree, dyck, young, gapped, perm213, torsion"))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CatalanObject {
    Tree(BinaryTree),
    Dyck(DyckPath),
    Young(YoungDiagram),
    Gapped(GappedYoungDiagram),
    Perm213(Permutation213),
    Torsion(TorsionPair),
}

impl CatalanObject {
    pub fn family(&self) -> Family {
        match self {
            CatalanObject::Tree(_) => Family::Tree,
            CatalanObject::Dyck(_) => Family::Dyck,
            CatalanObject::Young(_) => Family::Young,
            CatalanObject::Gapped(_) => Family::Gapped,
            CatalanObject::Perm213(_) => Family::Perm213,
            CatalanObject::Torsion(_) => Family::Torsion,
        }
    }

    /// The common size `n`: internal nodes, semilength, ambient, length.
    pub fn size(&self) -> usize {
        match self {
            CatalanObject::Tree(t) => t.size(),
            CatalanObject::Dyck(p) => p.semilength(),
            CatalanObject::Young(y) => y.ambient(),
            CatalanObject::Gapped(g) => g.ambient(),
            CatalanObject::Perm213(p) => p.len(),
            CatalanObject::Torsion(p) => p.ambient(),
        }
    }

    pub fn to_tree(&self) -> Result<BinaryTree> {
        match self {
            CatalanObject::Tree(t) => Ok(t.clone()),
            CatalanObject::Dyck(p) => Ok(dyck_to_tree(p)),
            CatalanObject::Young(y) => inverse_bookshelf(y, y.ambient()),
            CatalanObject::Gapped(g) => gapped_to_tree(g),
            CatalanObject::Perm213(p) => Ok(perm_to_tree(p)),
            CatalanObject::Torsion(p) => torsion_to_tree(p.torsion(), p.ambient()),
        }
    }

    pub fn from_tree(t: &BinaryTree, family: Family) -> CatalanObject {
        match family {
            Family::Tree => CatalanObject::Tree(t.clone()),
            Family::Dyck => CatalanObject::Dyck(tree_to_dyck(t)),
            Family::Young => CatalanObject::Young(bookshelf(t)),
            Family::Gapped => CatalanObject::Gapped(bookshelf_gapped(t)),
            Family::Perm213 => CatalanObject::Perm213(tree_to_perm(t)),
            Family::Torsion => CatalanObject::Torsion(tree_to_torsion(t)),
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            CatalanObject::Tree(x) => x.to_value(),
            CatalanObject::Dyck(x) => x.to_value(),
            CatalanObject::Young(x) => x.to_value(),
            CatalanObject::Gapped(x) => x.to_value(),
            CatalanObject::Perm213(x) => x.to_value(),
            CatalanObject::Torsion(x) => x.to_value(),
        }
    }

    pub fn to_json(&self) -> String {
        self.to_value().to_string()
    }

    /// Compact text: paren string, step word, row tuple, value tuple, ball list.
    pub fn to_plain(&self) -> String {
        let tuple = |v: &[usize]| {
            format!(
                "({})",
                v.iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            )
        };
        match self {
            CatalanObject::Tree(t) => t.to_string(),
            CatalanObject::Dyck(p) => p.to_string(),
            CatalanObject::Young(y) => tuple(y.rows()),
            CatalanObject::Gapped(g) => g
                .boxes()
                .iter()
                .map(|(r, c)| format!("({r},{c})"))
                .collect::<Vec<_>>()
                .join(" "),
            CatalanObject::Perm213(p) => p.to_string(),
            CatalanObject::Torsion(p) => p
                .torsion()
                .iter()
                .map(|x| x.to_string())
                .collect::<Vec<_>>()
                .join(" "),
        }
    }

    /// Reads a JSON document or the compact text of the family.
    ///
    /// Tuples like `(2,1)` stand for a partition or permutation. A bare ball
    /// list stands for a torsion class and needs `n`; a bare partition takes
    /// the smallest staircase holding it unless `n` is given.
    pub fn parse(family: Family, text: &str, n: Option<usize>) -> Result<CatalanObject> {
        let text = text.trim();
        let json = serde_json::from_str::<Value>(text).ok();
        Ok(match family {
            Family::Tree => CatalanObject::Tree(match &json {
                Some(v) => BinaryTree::from_value(v)?,
                None => text.parse()?,
            }),
            Family::Dyck => CatalanObject::Dyck(match &json {
                Some(v) => DyckPath::from_value(v)?,
                None => text.parse()?,
            }),
            Family::Young => CatalanObject::Young(match &json {
                Some(v) if v.is_object() => YoungDiagram::from_value(v)?,
                _ => {
                    let rows = parse_tuple(text)?;
                    let least = rows
                        .iter()
                        .enumerate()
                        .map(|(i, r)| r + i + 1)
                        .max()
                        .unwrap_or(0);
                    YoungDiagram::new(n.unwrap_or(least), rows)?
                }
            }),
            Family::Gapped => CatalanObject::Gapped(GappedYoungDiagram::from_value(
                json.as_ref().ok_or_else(not_json)?,
            )?),
            Family::Perm213 => CatalanObject::Perm213(match &json {
                Some(v) => Permutation213::from_value(v)?,
                None => Permutation213::new(parse_tuple(text)?)?,
            }),
            Family::Torsion => {
                let v = json.as_ref().ok_or_else(not_json)?;
                CatalanObject::Torsion(if v.is_array() {
                    let n = n.ok_or_else(|| {
                        Error::Json("a bare ball list needs the ambient n".into())
                    })?;
                    class_to_pair(&balls_from_value(v)?, n)?
                } else {
                    TorsionPair::from_value(v)?
                })
            }
        })
    }
}

fn not_json() -> Error {
    Error::Json("expected a JSON document".into())
}

fn parse_tuple(text: &str) -> Result<Vec<usize>> {
    let inner = text
        .trim()
        .trim_start_matches(['(', '['])
        .trim_end_matches([')', ']']);
    inner
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Error::Json(format!("not a non-negative integer: {s:?}")))
        })
        .collect()
}

/// A torsion class together with its torsion-free class.
pub fn class_to_pair(g: &BallSet, n: usize) -> Result<TorsionPair> {
    let pair = torsion_generate(g, n)?;
    if pair.torsion() == g {
        Ok(pair)
    } else {
        Err(Error::NotTorsionClass)
    }
}

/// Routes through the tree; same-family conversion is the identity.
pub fn convert(obj: &CatalanObject, to: Family) -> Result<CatalanObject> {
    if obj.family() == to {
        return Ok(obj.clone());
    }
    Ok(CatalanObject::from_tree(&obj.to_tree()?, to))
}

/// The maps that skip the tree: Dyck paths against partitions, torsion
/// classes against gapped diagrams and against permutations.
pub fn convert_direct(obj: &CatalanObject, to: Family) -> Option<Result<CatalanObject>> {
    Some(match (obj, to) {
        (CatalanObject::Dyck(p), Family::Young) => Ok(CatalanObject::Young(dyck_to_young(p))),
        (CatalanObject::Young(y), Family::Dyck) => Ok(CatalanObject::Dyck(young_to_dyck(y))),
        (CatalanObject::Torsion(p), Family::Gapped) => {
            torsion_to_gapped_young(p.torsion(), p.ambient()).map(CatalanObject::Gapped)
        }
        (CatalanObject::Torsion(p), Family::Perm213) => {
            torsion_to_perm(p.torsion(), p.ambient()).map(CatalanObject::Perm213)
        }
        (CatalanObject::Perm213(p), Family::Torsion) => {
            class_to_pair(&perm_to_torsion(p), p.len()).map(CatalanObject::Torsion)
        }
        _ => return None,
    })
}

/// Every object of the family at size `n`, each family from its own generator.
pub fn enumerate(family: Family, n: usize) -> Vec<CatalanObject> {
    match family {
        Family::Tree => enumerate_trees(n)
            .into_iter()
            .map(CatalanObject::Tree)
            .collect(),
        Family::Dyck => enumerate_dyck(n)
            .into_iter()
            .map(CatalanObject::Dyck)
            .collect(),
        Family::Young => enumerate_young(n)
            .into_iter()
            .map(CatalanObject::Young)
            .collect(),
        Family::Gapped => enumerate_trees(n)
            .iter()
            .map(|t| CatalanObject::Gapped(bookshelf_gapped(t)))
            .collect(),
        Family::Perm213 => enumerate_perms213(n)
            .into_iter()
            .map(CatalanObject::Perm213)
            .collect(),
        Family::Torsion => enumerate_torsion(n)
            .into_iter()
            .map(|g| {
                CatalanObject::Torsion(class_to_pair(&g, n).expect("enumerated classes are closed"))
            })
            .collect(),
    }
}
