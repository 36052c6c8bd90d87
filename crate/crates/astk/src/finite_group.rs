//! File-backed finite groups: multiplication table, conjugacy classes and a
//! rational character table, with every load invariant checked and named.

use crate::error::{AstkError, Result};
use crate::linalg::ExactMatrix;
use crate::ratio::{parse_rat, Int, Rat};
use num::traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharacterRowJson {
    pub name: String,
    pub dim: u64,
    pub values: Vec<String>,
}

/// On-disk schema.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct FiniteGroupJson {
    pub name: String,
    pub elements: Vec<String>,
    pub multiplication: Vec<Vec<usize>>,
    pub classes: Vec<Vec<usize>>,
    pub characters: Vec<CharacterRowJson>,
    /// Optional: for each l, the class of g^l per class (enables Adams ops).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub power_maps: Option<BTreeMap<u64, Vec<usize>>>,
}

#[derive(Clone, Debug)]
pub struct CharacterRow {
    pub name: String,
    pub dim: u64,
    pub values: Vec<Rat>,
}

#[derive(Clone, Debug)]
pub struct FiniteGroupData {
    pub name: String,
    pub elements: Vec<String>,
    pub mult: Vec<Vec<usize>>,
    pub classes: Vec<Vec<usize>>,
    pub characters: Vec<CharacterRow>,
    pub power_maps: Option<BTreeMap<u64, Vec<usize>>>,
    pub identity: usize,
    pub inverse: Vec<usize>,
    /// class_of[g] = index of the conjugacy class containing g.
    pub class_of: Vec<usize>,
    /// Sum of squared dimensions equals |G| (absolutely irreducible table).
    pub is_split: bool,
    pub trivial_char: usize,
    /// struct_consts[i][j] = integer coordinates of chi_i * chi_j.
    pub struct_consts: Vec<Vec<Vec<Int>>>,
}

impl FiniteGroupData {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn num_classes(&self) -> usize {
        self.classes.len()
    }

    pub fn class_size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn identity_class(&self) -> usize {
        self.class_of[self.identity]
    }

    pub fn from_json(j: &FiniteGroupJson) -> Result<Self> {
        let n = j.elements.len();
        if n == 0 {
            return Err(AstkError::GroupLoad("empty element list".into()));
        }
        if j.multiplication.len() != n || j.multiplication.iter().any(|r| r.len() != n) {
            return Err(AstkError::GroupLoad(format!(
                "multiplication table must be {n}x{n}"
            )));
        }
        for (i, row) in j.multiplication.iter().enumerate() {
            for (k, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(AstkError::GroupLoad(format!(
                        "multiplication entry ({i},{k}) = {v} out of range"
                    )));
                }
            }
        }
        let mul = |a: usize, b: usize| j.multiplication[a][b];

        // Identity.
        let identity = (0..n)
            .find(|&e| (0..n).all(|g| mul(e, g) == g && mul(g, e) == g))
            .ok_or_else(|| AstkError::GroupLoad("no identity element".into()))?;

        // Inverses.
        let mut inverse = vec![0usize; n];
        for g in 0..n {
            inverse[g] = (0..n)
                .find(|&h| mul(g, h) == identity && mul(h, g) == identity)
                .ok_or_else(|| {
                    AstkError::GroupLoad(format!("element {} has no inverse", j.elements[g]))
                })?;
        }

        // Associativity, every triple.
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                        return Err(AstkError::GroupLoad(format!(
                            "associativity fails at triple ({}, {}, {})",
                            j.elements[a], j.elements[b], j.elements[c]
                        )));
                    }
                }
            }
        }

        // Classes: a partition closed under conjugation.
        let mut class_of = vec![usize::MAX; n];
        for (ci, class) in j.classes.iter().enumerate() {
            if class.is_empty() {
                return Err(AstkError::GroupLoad(format!("class {ci} is empty")));
            }
            for &g in class {
                if g >= n {
                    return Err(AstkError::GroupLoad(format!(
                        "class {ci} references element index {g} out of range"
                    )));
                }
                if class_of[g] != usize::MAX {
                    return Err(AstkError::GroupLoad(format!(
                        "element {} appears in two classes",
                        j.elements[g]
                    )));
                }
                class_of[g] = ci;
            }
        }
        if class_of.iter().any(|&c| c == usize::MAX) {
            return Err(AstkError::GroupLoad("classes do not cover the group".into()));
        }
        for g in 0..n {
            for h in 0..n {
                let conj = mul(mul(h, g), inverse[h]);
                if class_of[conj] != class_of[g] {
                    return Err(AstkError::GroupLoad(format!(
                        "classes not conjugation-closed: {} conjugated by {} leaves its class",
                        j.elements[g], j.elements[h]
                    )));
                }
            }
        }

        // Character table.
        let k = j.classes.len();
        if j.characters.len() != k {
            return Err(AstkError::GroupLoad(format!(
                "character table has {} rows but there are {k} conjugacy classes",
                j.characters.len()
            )));
        }
        let mut characters = Vec::with_capacity(k);
        for row in &j.characters {
            if row.values.len() != k {
                return Err(AstkError::GroupLoad(format!(
                    "character {} has {} values, expected {k}",
                    row.name,
                    row.values.len()
                )));
            }
            let values: Result<Vec<Rat>> = row
                .values
                .iter()
                .map(|s| parse_rat(s).map_err(AstkError::GroupLoad))
                .collect();
            characters.push(CharacterRow { name: row.name.clone(), dim: row.dim, values: values? });
        }
        let id_class = class_of[identity];
        for row in &characters {
            if row.values[id_class] != Rat::from_integer(Int::from(row.dim)) {
                return Err(AstkError::GroupLoad(format!(
                    "character {} has dim {} but value {} at the identity class",
                    row.name,
                    row.dim,
                    crate::ratio::format_rat(&row.values[id_class])
                )));
            }
        }

        // Pairwise orthogonality under the class-weighted inner product.
        let weight = |c: usize| Rat::from_integer(Int::from(j.classes[c].len()));
        for a in 0..k {
            for b in (a + 1)..k {
                let mut acc = Rat::zero();
                for c in 0..k {
                    acc += weight(c)
                        * characters[a].values[c].clone()
                        * characters[b].values[c].clone();
                }
                if !acc.is_zero() {
                    return Err(AstkError::GroupLoad(format!(
                        "characters {} and {} are not orthogonal",
                        characters[a].name, characters[b].name
                    )));
                }
            }
        }

        let trivial_char = characters
            .iter()
            .position(|r| r.dim == 1 && r.values.iter().all(|v| v.is_one()))
            .ok_or_else(|| AstkError::GroupLoad("no trivial character row".into()))?;

        let dim_sq: u64 = characters.iter().map(|r| r.dim * r.dim).sum();
        let is_split = dim_sq as usize == n;

        // Power maps, validated against the multiplication table.
        if let Some(pm) = &j.power_maps {
            for (&l, map) in pm {
                if map.len() != k {
                    return Err(AstkError::GroupLoad(format!(
                        "power map for l={l} has {} entries, expected {k}",
                        map.len()
                    )));
                }
                for (c, &target) in map.iter().enumerate() {
                    let g = j.classes[c][0];
                    let mut p = identity;
                    for _ in 0..l {
                        p = mul(p, g);
                    }
                    if target >= k || class_of[p] != target {
                        return Err(AstkError::GroupLoad(format!(
                            "power map for l={l} wrong on class {c}: table says class {}, file says {target}",
                            class_of[p]
                        )));
                    }
                }
            }
        }

        // Structure constants: chi_i * chi_j decomposed in the character
        // basis; rows are orthogonal hence independent, so the expansion is
        // unique. Genuine tables of Q-representations give integers.
        let char_matrix = ExactMatrix::from_cols(
            characters.iter().map(|r| r.values.clone()).collect(),
        );
        let mut struct_consts = vec![vec![Vec::new(); k]; k];
        for a in 0..k {
            for b in 0..k {
                let prod: Vec<Rat> = (0..k)
                    .map(|c| characters[a].values[c].clone() * characters[b].values[c].clone())
                    .collect();
                let coords = char_matrix.solve(&prod).ok_or_else(|| {
                    AstkError::GroupLoad(format!(
                        "product {}*{} does not decompose in the character rows",
                        characters[a].name, characters[b].name
                    ))
                })?;
                let ints: Result<Vec<Int>> = coords
                    .iter()
                    .map(|c| {
                        if c.denom().is_one() {
                            Ok(c.numer().clone())
                        } else {
                            Err(AstkError::GroupLoad(format!(
                                "product {}*{} has non-integral coordinate {}",
                                characters[a].name,
                                characters[b].name,
                                crate::ratio::format_rat(c)
                            )))
                        }
                    })
                    .collect();
                struct_consts[a][b] = ints?;
            }
        }

        Ok(FiniteGroupData {
            name: j.name.clone(),
            elements: j.elements.clone(),
            mult: j.multiplication.clone(),
            classes: j.classes.clone(),
            characters,
            power_maps: j.power_maps.clone(),
            identity,
            inverse,
            class_of,
            is_split,
            trivial_char,
            struct_consts,
        })
    }

    pub fn load_str(text: &str) -> Result<Self> {
        let j: FiniteGroupJson = serde_json::from_str(text)?;
        Self::from_json(&j)
    }

    /// Coordinates of a class function in the character basis, if expressible.
    pub fn decompose_class_function(&self, f: &[Rat]) -> Option<Vec<Rat>> {
        let mat =
            ExactMatrix::from_cols(self.characters.iter().map(|r| r.values.clone()).collect());
        mat.solve(f)
    }

    /// Direct product group with the Kronecker character table.
    pub fn product(a: &FiniteGroupData, b: &FiniteGroupData) -> Result<FiniteGroupData> {
        let na = a.order();
        let nb = b.order();
        let idx = |ga: usize, gb: usize| ga * nb + gb;
        let elements: Vec<String> = (0..na)
            .flat_map(|ga| {
                (0..nb).map(move |gb| format!("({},{})", ga, gb))
            })
            .enumerate()
            .map(|(i, _)| {
                let ga = i / nb;
                let gb = i % nb;
                format!("({},{})", a.elements[ga], b.elements[gb])
            })
            .collect();
        let mut mult = vec![vec![0usize; na * nb]; na * nb];
        for ga in 0..na {
            for gb in 0..nb {
                for ha in 0..na {
                    for hb in 0..nb {
                        mult[idx(ga, gb)][idx(ha, hb)] =
                            idx(a.mult[ga][ha], b.mult[gb][hb]);
                    }
                }
            }
        }
        let mut classes = Vec::new();
        for ca in &a.classes {
            for cb in &b.classes {
                let mut cls = Vec::new();
                for &ga in ca {
                    for &gb in cb {
                        cls.push(idx(ga, gb));
                    }
                }
                classes.push(cls);
            }
        }
        let mut characters = Vec::new();
        for ra in &a.characters {
            for rb in &b.characters {
                let mut values = Vec::new();
                for va in &ra.values {
                    for vb in &rb.values {
                        values.push(crate::ratio::format_rat(&(va.clone() * vb.clone())));
                    }
                }
                characters.push(CharacterRowJson {
                    name: format!("{}(x){}", ra.name, rb.name),
                    dim: ra.dim * rb.dim,
                    values,
                });
            }
        }
        let json = FiniteGroupJson {
            name: format!("{}x{}", a.name, b.name),
            elements,
            multiplication: mult,
            classes,
            characters,
            power_maps: None,
        };
        Self::from_json(&json)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn s3_loads_with_three_classes() {
        let g = FiniteGroupData::load_str(fixtures::S3_JSON).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.num_classes(), 3);
        assert!(g.is_split);
        assert_eq!(g.identity, 0);
        assert_eq!(g.characters[g.trivial_char].dim, 1);
    }

    #[test]
    fn c2_loads() {
        let g = FiniteGroupData::load_str(fixtures::C2_JSON).unwrap();
        assert_eq!(g.order(), 2);
        assert_eq!(g.num_classes(), 2);
    }

    #[test]
    fn broken_associativity_is_named() {
        // 3-element "table" with a deliberate associativity break.
        let text = r#"{
            "name": "broken",
            "elements": ["e", "a", "b"],
            "multiplication": [[0,1,2],[1,2,0],[2,1,0]],
            "classes": [[0],[1],[2]],
            "characters": [
                {"name": "t", "dim": 1, "values": ["1","1","1"]},
                {"name": "u", "dim": 1, "values": ["1","0","-1"]},
                {"name": "v", "dim": 1, "values": ["1","-1","1"]}
            ]
        }"#;
        let err = FiniteGroupData::load_str(text).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("associativity") || msg.contains("inverse"), "{msg}");
    }

    #[test]
    fn non_orthogonal_rows_rejected() {
        let text = r#"{
            "name": "badchars",
            "elements": ["e", "a"],
            "multiplication": [[0,1],[1,0]],
            "classes": [[0],[1]],
            "characters": [
                {"name": "t", "dim": 1, "values": ["1","1"]},
                {"name": "u", "dim": 1, "values": ["1","1"]}
            ]
        }"#;
        let err = FiniteGroupData::load_str(text).unwrap_err();
        assert!(err.to_string().contains("orthogonal"));
    }

    #[test]
    fn s3_structure_constants() {
        let g = FiniteGroupData::load_str(fixtures::S3_JSON).unwrap();
        // sgn * sgn = triv; std * std = triv + sgn + std.
        let sgn = g.characters.iter().position(|r| r.name == "sgn").unwrap();
        let std = g.characters.iter().position(|r| r.name == "std").unwrap();
        let triv = g.trivial_char;
        let mut expected = vec![Int::from(0); 3];
        expected[triv] = Int::from(1);
        assert_eq!(g.struct_consts[sgn][sgn], expected);
        let mut expected = vec![Int::from(1); 3];
        expected[std] = Int::from(1);
        expected[triv] = Int::from(1);
        expected[sgn] = Int::from(1);
        assert_eq!(g.struct_consts[std][std], expected);
    }

    #[test]
    fn product_of_c2s_is_klein_four() {
        let c2 = FiniteGroupData::load_str(fixtures::C2_JSON).unwrap();
        let v4 = FiniteGroupData::product(&c2, &c2).unwrap();
        assert_eq!(v4.order(), 4);
        assert_eq!(v4.num_classes(), 4);
        assert!(v4.is_split);
    }
}
