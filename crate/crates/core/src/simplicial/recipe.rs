//! A small construction language for triangulations.
//!
//! ```text
//! recipe := cycle(n) | bdsimplex(d) | crosspoly(d) | point
//!         | subdiv(recipe) | quotient(recipe, antipode)
//!         | product(recipe, recipe) | consum(recipe, recipe)
//!         | mtorus(recipe, n)
//! ```

use std::fmt;
use std::str::FromStr;

use super::complex::{MarkedComplex, OrderedComplex};
use super::construct::{barycentric_subdivision, build_primitive, mapping_torus, ordered_product, Primitive};
use super::consum::connected_sum_default;
use super::quotient::quotient_subdividing;
use super::ComplexError;
use crate::fpgroup::{GroupError, Parser};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Recipe {
    Point,
    Primitive(Primitive),
    Subdiv(Box<Recipe>),
    /// Quotient by the carried antipodal involution.
    Quotient(Box<Recipe>),
    Product(Box<Recipe>, Box<Recipe>),
    ConSum(Box<Recipe>, Box<Recipe>),
    /// Mapping torus of the carried involution with the given number of slabs.
    MappingTorus(Box<Recipe>, usize),
}

impl Recipe {
    pub fn build(&self) -> Result<MarkedComplex, ComplexError> {
        match self {
            Recipe::Point => Ok(MarkedComplex::plain(OrderedComplex::from_facets(1, vec![])?)),
            Recipe::Primitive(p) => build_primitive(*p),
            Recipe::Subdiv(a) => barycentric_subdivision(&a.build()?),
            Recipe::Quotient(a) => quotient_subdividing(&a.build()?),
            Recipe::Product(a, b) => ordered_product(&a.build()?, &b.build()?),
            Recipe::ConSum(a, b) => connected_sum_default(&a.build()?, &b.build()?),
            Recipe::MappingTorus(a, n) => mapping_torus(&a.build()?, *n),
        }
    }

    /// Names of the marked loops the built complex will carry, without building it.
    pub fn loop_names(&self) -> Vec<String> {
        let prefixed = |a: &Recipe, b: &Recipe| {
            let mut out: Vec<String> = a.loop_names().into_iter().map(|n| format!("left.{n}")).collect();
            out.extend(b.loop_names().into_iter().map(|n| format!("right.{n}")));
            out.sort();
            out
        };
        match self {
            Recipe::Point | Recipe::Primitive(Primitive::SimplexBoundary(_) | Primitive::CrossPolytopeBoundary(_)) => {
                Vec::new()
            }
            Recipe::Primitive(Primitive::Cycle(_)) => vec!["c".into()],
            Recipe::Subdiv(a) => a.loop_names(),
            Recipe::Quotient(_) => vec!["q".into()],
            Recipe::Product(a, b) | Recipe::ConSum(a, b) => prefixed(a, b),
            Recipe::MappingTorus(a, _) => {
                let mut names = a.loop_names();
                names.push("t".into());
                names.sort();
                names
            }
        }
    }
}

impl fmt::Display for Recipe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Recipe::Point => write!(f, "point"),
            Recipe::Primitive(Primitive::Cycle(n)) => write!(f, "cycle({n})"),
            Recipe::Primitive(Primitive::SimplexBoundary(d)) => write!(f, "bdsimplex({d})"),
            Recipe::Primitive(Primitive::CrossPolytopeBoundary(d)) => write!(f, "crosspoly({d})"),
            Recipe::Subdiv(a) => write!(f, "subdiv({a})"),
            Recipe::Quotient(a) => write!(f, "quotient({a},antipode)"),
            Recipe::Product(a, b) => write!(f, "product({a},{b})"),
            Recipe::ConSum(a, b) => write!(f, "consum({a},{b})"),
            Recipe::MappingTorus(a, n) => write!(f, "mtorus({a},{n})"),
        }
    }
}

fn to_recipe_error(e: GroupError) -> ComplexError {
    match e {
        GroupError::Parse { column, message } => ComplexError::Recipe { column, message },
        other => ComplexError::Recipe { column: 0, message: other.to_string() },
    }
}

fn expr(p: &mut Parser<'_>) -> Result<Recipe, GroupError> {
    p.skip_ws();
    let col = p.column();
    let name = p.ident()?;
    if name == "point" {
        return Ok(Recipe::Point);
    }
    p.expect('(')?;
    let r = match name.as_str() {
        "cycle" | "bdsimplex" | "crosspoly" => {
            let n = p.integer()?;
            let n = usize::try_from(n)
                .map_err(|_| GroupError::Parse { column: col, message: format!("negative parameter {n}") })?;
            Recipe::Primitive(match name.as_str() {
                "cycle" => Primitive::Cycle(n),
                "bdsimplex" => Primitive::SimplexBoundary(n),
                _ => Primitive::CrossPolytopeBoundary(n),
            })
        }
        "subdiv" => Recipe::Subdiv(Box::new(expr(p)?)),
        "quotient" => {
            let a = expr(p)?;
            p.expect(',')?;
            p.skip_ws();
            let c = p.column();
            let inv = p.ident()?;
            if inv != "antipode" {
                return Err(GroupError::Parse { column: c, message: format!("unknown involution '{inv}'") });
            }
            Recipe::Quotient(Box::new(a))
        }
        "product" | "consum" => {
            let a = expr(p)?;
            p.expect(',')?;
            let b = expr(p)?;
            if name == "product" {
                Recipe::Product(Box::new(a), Box::new(b))
            } else {
                Recipe::ConSum(Box::new(a), Box::new(b))
            }
        }
        "mtorus" => {
            let a = expr(p)?;
            p.expect(',')?;
            p.skip_ws();
            let c = p.column();
            let n = p.integer()?;
            let n = usize::try_from(n)
                .map_err(|_| GroupError::Parse { column: c, message: format!("negative parameter {n}") })?;
            Recipe::MappingTorus(Box::new(a), n)
        }
        _ => return Err(GroupError::Parse { column: col, message: format!("unknown construction '{name}'") }),
    };
    p.expect(')')?;
    Ok(r)
}

impl FromStr for Recipe {
    type Err = ComplexError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser::new(s);
        let r = expr(&mut p).map_err(to_recipe_error)?;
        p.skip_ws();
        if let Some(c) = p.peek() {
            return Err(ComplexError::Recipe { column: p.column(), message: format!("trailing '{c}'") });
        }
        Ok(r)
    }
}
