use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("cannot parse {what} '{input}'")]
pub struct IdParseError {
    pub what: &'static str,
    pub input: String,
}

fn parse_err(what: &'static str, input: &str) -> IdParseError {
    IdParseError { what, input: input.to_string() }
}

/// One of the three equitable generators `x, y, z`, used to name axes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    /// The cyclic successor `x -> y -> z -> x`.
    pub fn next(self) -> Axis {
        match self {
            Axis::X => Axis::Y,
            Axis::Y => Axis::Z,
            Axis::Z => Axis::X,
        }
    }

    /// The cyclic predecessor `x -> z -> y -> x`.
    pub fn prev(self) -> Axis {
        self.next().next()
    }

    pub fn name(self) -> &'static str {
        match self {
            Axis::X => "x",
            Axis::Y => "y",
            Axis::Z => "z",
        }
    }
}

impl fmt::Display for Axis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Axis {
    type Err = IdParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "x" => Ok(Axis::X),
            "y" => Ok(Axis::Y),
            "z" => Ok(Axis::Z),
            _ => Err(parse_err("axis", s)),
        }
    }
}

/// `V`, carrying the `U_q` action, or its dual `V*`, carrying the `U_{q^-1}` action.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SpaceId {
    V,
    VDual,
}

impl SpaceId {
    pub const ALL: [SpaceId; 2] = [SpaceId::V, SpaceId::VDual];

    pub fn dual(self) -> SpaceId {
        match self {
            SpaceId::V => SpaceId::VDual,
            SpaceId::VDual => SpaceId::V,
        }
    }
}

impl fmt::Display for SpaceId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceId::V => "V",
            SpaceId::VDual => "V*",
        })
    }
}

impl FromStr for SpaceId {
    type Err = IdParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "V" => Ok(SpaceId::V),
            "V*" | "Vs" | "V_dual" => Ok(SpaceId::VDual),
            _ => Err(parse_err("space", s)),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Flavor {
    Row,
    Col,
}

/// One of the twelve bases `[xi]_row`, `[xi]_col`, `[xi]^inv_row`, `[xi]^inv_col`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BasisId {
    pub axis: Axis,
    pub inverted: bool,
    pub flavor: Flavor,
}

impl BasisId {
    pub const fn new(axis: Axis, inverted: bool, flavor: Flavor) -> Self {
        BasisId { axis, inverted, flavor }
    }

    pub fn row(axis: Axis) -> Self {
        Self::new(axis, false, Flavor::Row)
    }

    pub fn col(axis: Axis) -> Self {
        Self::new(axis, false, Flavor::Col)
    }

    pub fn inv_row(axis: Axis) -> Self {
        Self::new(axis, true, Flavor::Row)
    }

    pub fn inv_col(axis: Axis) -> Self {
        Self::new(axis, true, Flavor::Col)
    }

    pub fn all() -> Vec<BasisId> {
        let mut out = Vec::with_capacity(12);
        for axis in Axis::ALL {
            for inverted in [false, true] {
                for flavor in [Flavor::Row, Flavor::Col] {
                    out.push(BasisId::new(axis, inverted, flavor));
                }
            }
        }
        out
    }

    /// The basis obtained by reversing the order of the vectors.
    pub fn inversion(self) -> Self {
        BasisId { inverted: !self.inverted, ..self }
    }

    /// The basis of the dual space dual to this one: `[xi]_row <-> [xi]^inv_col`
    /// and `[xi]_col <-> [xi]^inv_row`.
    pub fn dual(self) -> Self {
        let flavor = match self.flavor {
            Flavor::Row => Flavor::Col,
            Flavor::Col => Flavor::Row,
        };
        BasisId { axis: self.axis, inverted: !self.inverted, flavor }
    }

    /// The decomposition this basis induces.
    pub fn decomposition(self) -> DecompId {
        DecompId { axis: self.axis, inverted: self.inverted }
    }
}

impl fmt::Display for BasisId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inv = if self.inverted { "inv" } else { "" };
        let flavor = match self.flavor {
            Flavor::Row => "row",
            Flavor::Col => "col",
        };
        write!(f, "[{}]{inv}{flavor}", self.axis)
    }
}

impl FromStr for BasisId {
    type Err = IdParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || parse_err("basis", s);
        let rest = s.strip_prefix('[').ok_or_else(err)?;
        let (axis, rest) = rest.split_once(']').ok_or_else(err)?;
        let axis: Axis = axis.parse().map_err(|_| err())?;
        let rest: String = rest.chars().filter(|c| !matches!(c, '_' | '^' | '{' | '}')).collect();
        let (inverted, flavor) = match rest.as_str() {
            "row" => (false, Flavor::Row),
            "col" => (false, Flavor::Col),
            "invrow" => (true, Flavor::Row),
            "invcol" => (true, Flavor::Col),
            _ => return Err(err()),
        };
        Ok(BasisId::new(axis, inverted, flavor))
    }
}

/// One of the six decompositions `[xi]` and `[xi]^inv`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecompId {
    pub axis: Axis,
    pub inverted: bool,
}

impl DecompId {
    pub fn new(axis: Axis, inverted: bool) -> Self {
        DecompId { axis, inverted }
    }

    pub fn all() -> Vec<DecompId> {
        Axis::ALL.iter().flat_map(|&a| [DecompId::new(a, false), DecompId::new(a, true)]).collect()
    }

    pub fn inversion(self) -> Self {
        DecompId { inverted: !self.inverted, ..self }
    }
}

impl fmt::Display for DecompId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]{}", self.axis, if self.inverted { "inv" } else { "" })
    }
}

impl FromStr for DecompId {
    type Err = IdParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || parse_err("decomposition", s);
        let rest = s.strip_prefix('[').ok_or_else(err)?;
        let (axis, rest) = rest.split_once(']').ok_or_else(err)?;
        let axis: Axis = axis.parse().map_err(|_| err())?;
        let rest: String = rest.chars().filter(|c| !matches!(c, '_' | '^' | '{' | '}')).collect();
        match rest.as_str() {
            "" => Ok(DecompId::new(axis, false)),
            "inv" => Ok(DecompId::new(axis, true)),
            _ => Err(err()),
        }
    }
}

/// The algebra elements `x, y, y^-1, z, n_x, n_y, n_z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    Equitable(Axis),
    YInv,
    N(Axis),
}

impl Generator {
    pub const ALL: [Generator; 7] = [
        Generator::Equitable(Axis::X),
        Generator::Equitable(Axis::Y),
        Generator::YInv,
        Generator::Equitable(Axis::Z),
        Generator::N(Axis::X),
        Generator::N(Axis::Y),
        Generator::N(Axis::Z),
    ];
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Equitable(a) => write!(f, "{a}"),
            Generator::YInv => write!(f, "y_inv"),
            Generator::N(a) => write!(f, "n_{a}"),
        }
    }
}

impl FromStr for Generator {
    type Err = IdParseError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "y_inv" | "y^-1" | "yinv" => Ok(Generator::YInv),
            _ => {
                if let Some(a) = s.strip_prefix("n_").or_else(|| s.strip_prefix('n')) {
                    a.parse().map(Generator::N).map_err(|_| parse_err("generator", s))
                } else {
                    s.parse().map(Generator::Equitable).map_err(|_| parse_err("generator", s))
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn twelve_distinct_bases_round_trip() {
        let all = BasisId::all();
        assert_eq!(all.len(), 12);
        for b in &all {
            assert_eq!(b.to_string().parse::<BasisId>().unwrap(), *b);
            assert_eq!(b.dual().dual(), *b);
            assert_eq!(b.inversion().inversion(), *b);
        }
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 12);
        assert_eq!("[y]^inv_col".parse::<BasisId>().unwrap(), BasisId::inv_col(Axis::Y));
        assert_eq!("[x]_row".parse::<BasisId>().unwrap(), BasisId::row(Axis::X));
        assert!("[w]row".parse::<BasisId>().is_err());
    }

    #[test]
    fn dual_pairs() {
        assert_eq!(BasisId::row(Axis::Y).dual(), BasisId::inv_col(Axis::Y));
        assert_eq!(BasisId::col(Axis::Z).dual(), BasisId::inv_row(Axis::Z));
    }

    #[test]
    fn generator_names() {
        for g in Generator::ALL {
            assert_eq!(g.to_string().parse::<Generator>().unwrap(), g);
        }
        assert!("w".parse::<Generator>().is_err());
        assert_eq!("V*".parse::<SpaceId>().unwrap(), SpaceId::VDual);
        assert_eq!("[z]inv".parse::<DecompId>().unwrap(), DecompId::new(Axis::Z, true));
    }
}
