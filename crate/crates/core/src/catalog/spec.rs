use std::fmt;
use std::str::FromStr;

use crate::error::GroupError;

/// Named group families.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Family {
    Cyclic(u32),
    /// Dihedral group, parameterised by its order `2n`.
    Dihedral(u32),
    Symmetric(u32),
    Alternating(u32),
    SL2(u32),
    PSL2(u32),
    PGL2(u32),
    /// `PSL_3(2)`, realised as the isomorphic `PSL_2(7)`.
    PSL3Of2,
    /// Heisenberg group of order `p^3` and exponent `p`.
    ExtraspecialPlus(u32),
    /// `(C_2)^f ⋊ C_p` with `p = 2^f - 1`.
    FrobeniusMersenne(u32),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
}

/// A group description: either a named family or explicit generators.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum GroupSpec {
    Family(Family),
    Generators { degree: usize, cycles: Vec<String> },
}

impl GroupSpec {
    pub fn family(f: Family) -> Self {
        GroupSpec::Family(f)
    }

    /// Display label, e.g. `S(6)` or `extraspecial+(59)`.
    pub fn label(&self) -> String {
        match self {
            GroupSpec::Family(f) => f.to_string(),
            GroupSpec::Generators { .. } => self.to_string(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Cyclic(n) => write!(f, "C({n})"),
            Family::Dihedral(n) => write!(f, "D({n})"),
            Family::Symmetric(n) => write!(f, "S({n})"),
            Family::Alternating(n) => write!(f, "A({n})"),
            Family::SL2(q) => write!(f, "SL2({q})"),
            Family::PSL2(q) => write!(f, "PSL2({q})"),
            Family::PGL2(q) => write!(f, "PGL2({q})"),
            Family::PSL3Of2 => write!(f, "PSL3(2)"),
            Family::ExtraspecialPlus(p) => write!(f, "extraspecial+({p})"),
            Family::FrobeniusMersenne(k) => write!(f, "frobenius_mersenne({k})"),
            Family::DirectProduct(a, b) => write!(f, "direct_product({},{})", a.inner(), b.inner()),
        }
    }
}

impl GroupSpec {
    /// Form used inside `direct_product(...)`: families drop the prefix.
    fn inner(&self) -> String {
        match self {
            GroupSpec::Family(f) => f.to_string(),
            g => g.to_string(),
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Family(fam) => write!(f, "family:{fam}"),
            GroupSpec::Generators { degree, cycles } => {
                write!(f, "gens:{degree}:{}", cycles.join(","))
            }
        }
    }
}

impl FromStr for GroupSpec {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(rest) = s.strip_prefix("gens:") {
            let (deg, gens) = rest
                .split_once(':')
                .ok_or_else(|| GroupError::Parse(format!("expected gens:DEGREE:CYCLES in {s:?}")))?;
            let degree: usize = deg
                .trim()
                .parse()
                .map_err(|_| GroupError::Parse(format!("bad degree {deg:?}")))?;
            let cycles = gens
                .split(',')
                .map(str::trim)
                .filter(|c| !c.is_empty())
                .map(str::to_string)
                .collect();
            return Ok(GroupSpec::Generators { degree, cycles });
        }
        let body = s.strip_prefix("family:").unwrap_or(s);
        let (fam, rest) = parse_family(body)?;
        if !rest.trim().is_empty() {
            return Err(GroupError::Parse(format!("trailing input {rest:?} in {s:?}")));
        }
        Ok(GroupSpec::Family(fam))
    }
}

fn parse_family(s: &str) -> Result<(Family, &str), GroupError> {
    let s = s.trim_start();
    let open = s
        .find('(')
        .ok_or_else(|| GroupError::Parse(format!("expected NAME(...) in {s:?}")))?;
    let name = s[..open].trim();
    let after = &s[open + 1..];
    if name == "direct_product" {
        let (a, rest) = parse_family(after)?;
        let rest = rest
            .trim_start()
            .strip_prefix(',')
            .ok_or_else(|| GroupError::Parse("direct_product needs two factors".into()))?;
        let (b, rest) = parse_family(rest)?;
        let rest = rest
            .trim_start()
            .strip_prefix(')')
            .ok_or_else(|| GroupError::Parse("unclosed direct_product".into()))?;
        return Ok((
            Family::DirectProduct(
                Box::new(GroupSpec::Family(a)),
                Box::new(GroupSpec::Family(b)),
            ),
            rest,
        ));
    }
    let close = after
        .find(')')
        .ok_or_else(|| GroupError::Parse(format!("unclosed parameter list in {s:?}")))?;
    let param: u32 = after[..close]
        .trim()
        .parse()
        .map_err(|_| GroupError::Parse(format!("bad parameter in {s:?}")))?;
    let rest = &after[close + 1..];
    let fam = match name {
        "C" => Family::Cyclic(param),
        "D" => Family::Dihedral(param),
        "S" => Family::Symmetric(param),
        "A" => Family::Alternating(param),
        "SL2" => Family::SL2(param),
        "PSL2" => Family::PSL2(param),
        "PGL2" => Family::PGL2(param),
        "PSL3" if param == 2 => Family::PSL3Of2,
        "extraspecial+" | "extraspecial_plus" => Family::ExtraspecialPlus(param),
        "frobenius_mersenne" => Family::FrobeniusMersenne(param),
        _ => return Err(GroupError::Parse(format!("unknown family {name:?}"))),
    };
    Ok((fam, rest))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_catalog_grammar() {
        for text in [
            "family:S(6)",
            "family:PGL2(9)",
            "family:extraspecial+(59)",
            "family:frobenius_mersenne(5)",
            "family:D(8)",
            "family:direct_product(S(3),A(4))",
            "gens:5:(1 2 3 4 5),(1 2)",
        ] {
            let spec: GroupSpec = text.parse().unwrap();
            assert_eq!(spec.to_string(), text);
        }
        let g: GroupSpec = "gens:5:(1 2 3 4 5),(1 2)".parse().unwrap();
        assert_eq!(
            g,
            GroupSpec::Generators {
                degree: 5,
                cycles: vec!["(1 2 3 4 5)".into(), "(1 2)".into()]
            }
        );
        assert_eq!("S(4)".parse::<GroupSpec>().unwrap().label(), "S(4)");
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!("family:Q(8)".parse::<GroupSpec>().is_err());
        assert!("family:S(x)".parse::<GroupSpec>().is_err());
        assert!("family:S(3".parse::<GroupSpec>().is_err());
        assert!("gens:(1 2)".parse::<GroupSpec>().is_err());
        assert!("family:direct_product(S(3))".parse::<GroupSpec>().is_err());
    }
}
