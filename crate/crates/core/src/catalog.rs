//! Named family instances, built from short specs such as `johnson2:6` or
//! `sts-bose:15`, and the standard catalog used by the claim suite.

use crate::error::{Error, Result};
use crate::families::{
    bose_sts, complete_multipartite, cyclic_latin, expected_params, latin_square_graph, mols_graph, named_family,
    orthogonal_pair, paper_sts13, skolem_sts, sts_block_graph, FamilyKind, LatinSquare, MolsPair, SteinerTripleSystem,
};
use crate::graph::Graph;
use crate::pattern::PatternName;
use crate::srg::SrgParams;
use crate::witness::{
    explicit_witness, latin_cop5, latin_p5, mols_cop5, mols_p5, p4_witness, sts_cop5, sts_p5, validated_set, Branch,
    Witness,
};

/// The combinatorial object a graph was built from, when there is one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Design {
    Latin(LatinSquare),
    Mols(MolsPair),
    Sts(SteinerTripleSystem),
}

#[derive(Debug, Clone)]
pub struct Instance {
    pub name: String,
    pub kind: FamilyKind,
    /// Arguments accepted by [`expected_params`] for `kind`.
    pub args: Vec<usize>,
    pub graph: Graph,
    pub design: Option<Design>,
}

impl Instance {
    pub fn expected_params(&self) -> Result<SrgParams> {
        expected_params(self.kind, &self.args)
    }
}

fn numbers(parts: &[&str], spec: &str) -> Result<Vec<usize>> {
    parts
        .iter()
        .map(|p| p.parse::<usize>().map_err(|_| Error::BadOrder(format!("'{p}' is not a number in '{spec}'"))))
        .collect()
}

/// Builds an instance from `family[:arg...]`.
///
/// Families: `johnson2:m`, `kneser2:m`, `hamming2:m`, `petersen`,
/// `multipartite:r:m`, `latin:m` (cyclic square), `mols:m` (odd m),
/// `sts-bose:m`, `sts-skolem:m`, `sts13:i`.
pub fn instance(spec: &str) -> Result<Instance> {
    let parts: Vec<&str> = spec.split(':').collect();
    let (head, rest) = (parts[0].to_ascii_lowercase(), &parts[1..]);
    let args = numbers(rest, spec)?;
    let arity = |want: usize| {
        if args.len() == want {
            Ok(())
        } else {
            Err(Error::BadOrder(format!("'{head}' takes {want} argument(s)")))
        }
    };
    let sts = |s: SteinerTripleSystem, tag: &str| Instance {
        name: format!("{tag}({})", s.order()),
        kind: FamilyKind::StsBlock,
        args: vec![s.order()],
        graph: sts_block_graph(&s),
        design: Some(Design::Sts(s)),
    };
    let inst = match head.as_str() {
        "petersen" => {
            arity(0)?;
            Instance {
                name: "Petersen".into(),
                kind: FamilyKind::Petersen,
                args: vec![],
                graph: named_family(FamilyKind::Petersen, 0)?,
                design: None,
            }
        }
        "johnson2" | "kneser2" | "hamming2" => {
            arity(1)?;
            let kind: FamilyKind = head.parse().map_err(Error::BadOrder)?;
            let m = args[0];
            let name = match kind {
                FamilyKind::Johnson2 => format!("J({m},2)"),
                FamilyKind::Kneser2 => format!("K({m},2)"),
                _ => format!("H(2,{m})"),
            };
            Instance { name, kind, args: args.clone(), graph: named_family(kind, m)?, design: None }
        }
        "multipartite" | "complete_multipartite" => {
            arity(2)?;
            Instance {
                name: format!("K_{{{}x{}}}", args[0], args[1]),
                kind: FamilyKind::CompleteMultipartite,
                args: args.clone(),
                graph: complete_multipartite(args[0], args[1])?,
                design: None,
            }
        }
        "latin" | "latin_square" => {
            arity(1)?;
            let l = cyclic_latin(args[0])?;
            Instance {
                name: format!("LSG(cyclic {})", args[0]),
                kind: FamilyKind::LatinSquare,
                args: args.clone(),
                graph: latin_square_graph(&l),
                design: Some(Design::Latin(l)),
            }
        }
        "mols" => {
            arity(1)?;
            let p = orthogonal_pair(args[0])?;
            Instance {
                name: format!("MOLSG({})", args[0]),
                kind: FamilyKind::Mols,
                args: args.clone(),
                graph: mols_graph(&p),
                design: Some(Design::Mols(p)),
            }
        }
        "sts-bose" => {
            arity(1)?;
            sts(bose_sts(args[0])?, "STS-bose")
        }
        "sts-skolem" => {
            arity(1)?;
            sts(skolem_sts(args[0])?, "STS-skolem")
        }
        "sts13" => {
            arity(1)?;
            let mut i = sts(paper_sts13(args[0])?, "STS");
            i.name = format!("STS(13)#{}", args[0]);
            i
        }
        _ => return Err(Error::BadOrder(format!("unknown family '{head}'"))),
    };
    Ok(inst)
}

/// Runs the construction that applies to `pattern` in this family.
///
/// P4 uses the general SRG argument. P5 and co-P5 use the family-specific
/// constructions; Kneser graphs reuse the Johnson witness of the
/// complementary pattern, since both share vertex labels.
pub fn constructive_witness(inst: &Instance, pattern: PatternName) -> Result<Witness> {
    if pattern == PatternName::P4 {
        return p4_witness(&inst.graph);
    }
    let none = || Error::BadOrder(format!("no construction for {pattern} in {}", inst.name));
    if !matches!(pattern, PatternName::P5 | PatternName::CoP5) {
        return Err(none());
    }
    let p5 = pattern == PatternName::P5;
    match (&inst.design, inst.kind) {
        (Some(Design::Latin(l)), _) => {
            if p5 {
                latin_p5(l)
            } else {
                latin_cop5(l)
            }
        }
        (Some(Design::Mols(p)), _) => {
            if p5 {
                mols_p5(p)
            } else {
                mols_cop5(p)
            }
        }
        (Some(Design::Sts(s)), _) => {
            if p5 {
                sts_p5(s)
            } else {
                sts_cop5(s)
            }
        }
        (None, FamilyKind::Johnson2 | FamilyKind::Hamming2) => explicit_witness(inst.kind, pattern, inst.args[0]),
        (None, FamilyKind::Kneser2 | FamilyKind::Petersen) => {
            let m = inst.args.first().copied().unwrap_or(5);
            let flipped = pattern.complement().expect("P5 and co-P5 are complementary");
            let w = explicit_witness(FamilyKind::Johnson2, flipped, m).map_err(|e| match e {
                Error::BelowThreshold { m, threshold, .. } => Error::BelowThreshold { pattern, m, threshold },
                e => e,
            })?;
            validated_set(&inst.graph, pattern, &w.vertices, Branch::Figure)
        }
        _ => Err(none()),
    }
}

/// Family specs covering the parameter-agreement ranges.
pub fn catalog_specs() -> Vec<String> {
    let mut specs = Vec::new();
    specs.extend((4..=8).map(|m| format!("johnson2:{m}")));
    specs.extend((5..=8).map(|m| format!("kneser2:{m}")));
    specs.extend((2..=6).map(|m| format!("hamming2:{m}")));
    specs.extend((3..=7).map(|m| format!("latin:{m}")));
    specs.extend([5, 7, 9, 11].map(|m| format!("mols:{m}")));
    specs.extend(
        ["sts-skolem:7", "sts-bose:9", "sts13:1", "sts13:2", "sts-skolem:13", "sts-bose:15"].map(String::from),
    );
    for r in 1..=4 {
        for m in 1..=4 {
            specs.push(format!("multipartite:{r}:{m}"));
        }
    }
    specs.push("petersen".into());
    specs
}

/// Every instance of [`catalog_specs`].
pub fn generated_catalog() -> Vec<Instance> {
    catalog_specs().iter().map(|s| instance(s).expect("catalog specs are valid")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn specs_parse() {
        assert_eq!(instance("johnson2:6").unwrap().graph.n(), 15);
        assert_eq!(instance("sts13:2").unwrap().name, "STS(13)#2");
        assert_eq!(instance("multipartite:3:2").unwrap().graph.n(), 6);
        assert!(instance("johnson2").is_err());
        assert!(instance("johnson2:x").is_err());
        assert!(instance("mols:4").is_err());
        assert!(instance("nope:3").is_err());
    }

    #[test]
    fn kneser_borrows_johnson_witness() {
        let k6 = instance("kneser2:6").unwrap();
        let w = constructive_witness(&k6, PatternName::P5).unwrap();
        assert_eq!(w.branch, Branch::Figure);
        let petersen = instance("petersen").unwrap();
        assert!(constructive_witness(&petersen, PatternName::P5).is_ok());
        assert!(matches!(
            constructive_witness(&petersen, PatternName::CoP5),
            Err(Error::BelowThreshold { pattern: PatternName::CoP5, m: 5, threshold: 6 })
        ));
        assert!(constructive_witness(&instance("multipartite:2:3").unwrap(), PatternName::Gem).is_err());
    }
}
