//! The catalog file: one `[manifold]` section per model, `key = value` lines,
//! and whole-line `#` comments.

use std::path::Path;

use crate::cohomology::LoopRef;
use crate::covers::{AutGenerator, InvolutionLabel, Manifold, ManifoldModel, NormalForm, SeifertSymbol};
use crate::fpgroup::{GroupError, GroupHom2, Parser, Presentation, Word};
use crate::simplicial::Recipe;

use super::PipelineError;

/// The catalog shipped with the crate.
pub const DEFAULT_CATALOG: &str = include_str!("../../data/default_catalog.txt");

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    pub models: Vec<ManifoldModel>,
    pub warnings: Vec<String>,
}

impl Catalog {
    pub fn model(&self, name: &str) -> Option<&ManifoldModel> {
        self.models.iter().find(|m| m.name == name)
    }

    /// Keeps only the named model.
    pub fn restrict(mut self, name: &str) -> Result<Self, PipelineError> {
        self.models.retain(|m| m.name == name);
        if self.models.is_empty() {
            return Err(PipelineError::Semantic {
                line: 0,
                check: "manifold".into(),
                message: format!("no model named '{name}'"),
            });
        }
        Ok(self)
    }

    pub fn label_count(&self) -> usize {
        self.models.iter().map(|m| m.involution_labels.len()).sum()
    }
}

pub fn load_catalog(path: &Path) -> Result<Catalog, PipelineError> {
    let text = std::fs::read_to_string(path).map_err(|e| PipelineError::Io(format!("{}: {e}", path.display())))?;
    parse_catalog(&text)
}

pub fn default_catalog() -> Catalog {
    parse_catalog(DEFAULT_CATALOG).expect("bundled catalog is valid")
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> PipelineError {
    PipelineError::Parse { line, column, message: message.into() }
}

fn semantic(line: usize, check: &str, message: impl Into<String>) -> PipelineError {
    PipelineError::Semantic { line, check: check.into(), message: message.into() }
}

/// Shifts a column inside a value to a column of the whole line.
fn group_err(line: usize, offset: usize, e: GroupError) -> PipelineError {
    match e {
        GroupError::Parse { column, message } => parse_err(line, offset + column, message),
        other => semantic(line, "presentation", other.to_string()),
    }
}

#[derive(Default)]
struct Section {
    line: usize,
    entries: Vec<(usize, usize, String, String)>,
}

impl Section {
    fn single(&self, key: &str) -> Result<Option<(usize, usize, &str)>, PipelineError> {
        let mut found = self.entries.iter().filter(|e| e.2 == key);
        let first = found.next();
        if let Some(dup) = found.next() {
            return Err(semantic(dup.0, key, format!("key '{key}' given twice")));
        }
        Ok(first.map(|e| (e.0, e.1, e.3.as_str())))
    }

    fn all<'a>(&'a self, key: &'a str) -> impl Iterator<Item = (usize, usize, &'a str)> + 'a {
        self.entries.iter().filter(move |e| e.2 == key).map(|e| (e.0, e.1, e.3.as_str()))
    }
}

const KEYS: [&str; 9] =
    ["name", "seifert", "presentation", "w1", "recipe", "loops", "normal_form", "aut", "involution"];

pub fn parse_catalog(text: &str) -> Result<Catalog, PipelineError> {
    if text.trim().is_empty() {
        return Err(parse_err(1, 1, "empty catalog file"));
    }
    let mut sections: Vec<Section> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let content = raw;
        let trimmed = content.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        if trimmed.starts_with('[') {
            if trimmed != "[manifold]" {
                return Err(parse_err(line, indent + 1, format!("unknown section '{trimmed}'")));
            }
            sections.push(Section { line, entries: Vec::new() });
            continue;
        }
        let Some(eq) = content.find('=') else {
            return Err(parse_err(line, indent + 1, "expected 'key = value'"));
        };
        let key = content[..eq].trim();
        if !KEYS.contains(&key) {
            return Err(parse_err(line, indent + 1, format!("unknown key '{key}'")));
        }
        let section =
            sections.last_mut().ok_or_else(|| parse_err(line, indent + 1, "key outside a [manifold] section"))?;
        let after = &content[eq + 1..];
        let offset = eq + 1 + (after.len() - after.trim_start().len());
        section.entries.push((line, offset, key.to_string(), after.trim().to_string()));
    }

    let mut catalog = Catalog::default();
    let mut taus: Vec<(String, usize)> = Vec::new();
    for s in &sections {
        let model = build_model(s, &mut catalog.warnings)?;
        if catalog.model(&model.name).is_some() {
            return Err(semantic(s.line, "name", format!("model '{}' defined twice", model.name)));
        }
        for (_, l) in &model.involution_labels {
            if let Some((_, prev)) = taus.iter().find(|(t, _)| *t == l.tau) {
                return Err(semantic(s.line, "involution", format!("label {} already used at line {prev}", l.tau)));
            }
            taus.push((l.tau.clone(), s.line));
        }
        catalog.models.push(model);
    }
    Ok(catalog)
}

fn build_model(s: &Section, warnings: &mut Vec<String>) -> Result<ManifoldModel, PipelineError> {
    let (_, _, name) = s.single("name")?.ok_or_else(|| semantic(s.line, "name", "section has no name"))?;
    let kind = Manifold::from_name(name);
    if kind.is_none() {
        warnings
            .push(format!("line {}: '{name}' is not one of the four S2xR manifolds; results are unchecked", s.line));
    }
    let (pl, po, ptext) = s
        .single("presentation")?
        .ok_or_else(|| semantic(s.line, "presentation", format!("{name} has no presentation")))?;
    let presentation: Presentation = ptext.parse().map_err(|e| group_err(pl, po, e))?;
    let names = presentation.generator_names().to_vec();

    let (wl, wo, wtext) = s.single("w1")?.ok_or_else(|| semantic(s.line, "w1", format!("{name} has no w1")))?;
    let w1 = parse_values(wtext, &names).map_err(|(c, m)| parse_err(wl, wo + c, m))?;
    w1.check_relators(&presentation).map_err(|e| semantic(wl, "w1", format!("{name}: {e}")))?;

    let mut model = ManifoldModel::new(name, presentation, w1);

    if let Some((l, o, text)) = s.single("seifert")? {
        let sym: SeifertSymbol = text.parse().map_err(|m: String| parse_err(l, o + 1, m))?;
        if let Some(k) = kind {
            if sym != k.seifert() {
                return Err(semantic(l, "seifert", format!("{name} has Seifert symbol {}, not {sym}", k.seifert())));
            }
        }
        model.seifert = Some(sym);
    }

    if let Some((l, o, text)) = s.single("recipe")? {
        let recipe: Recipe = text.parse().map_err(|e| match e {
            crate::simplicial::ComplexError::Recipe { column, message } => parse_err(l, o + column, message),
            other => semantic(l, "recipe", other.to_string()),
        })?;
        model.recipe = Some(recipe);
    }

    if let Some((l, o, text)) = s.single("loops")? {
        let available = model.recipe.as_ref().map(Recipe::loop_names).unwrap_or_default();
        let mut loops: Vec<Option<LoopRef>> = vec![None; names.len()];
        for part in text.split(',') {
            let (g, r) = part.split_once(':').ok_or_else(|| parse_err(l, o + 1, format!("bad loop entry '{part}'")))?;
            let gi = names
                .iter()
                .position(|n| n == g.trim())
                .ok_or_else(|| semantic(l, "loops", format!("unknown generator '{}'", g.trim())))?;
            let r: LoopRef = r.parse().map_err(|m: String| parse_err(l, o + 1, m))?;
            if let Some(missing) = r.terms.iter().find(|t| !available.contains(t)) {
                return Err(semantic(l, "loops", format!("recipe of {name} has no loop '{missing}'")));
            }
            loops[gi] = Some(r);
        }
        if let Some(g) = loops.iter().position(Option::is_none) {
            return Err(semantic(l, "loops", format!("no loop for generator {}", names[g])));
        }
        model.loops = loops.into_iter().flatten().collect();
    }

    if let Some((l, o, text)) = s.single("normal_form")? {
        model.normal_form = Some(parse_normal_form(text, &names).map_err(|(c, m)| parse_err(l, o + c, m))?);
    }

    for (l, o, text) in s.all("aut") {
        let aut = parse_aut(text, &model.presentation).map_err(|e| group_err(l, o, e))?;
        model.aut_generators.push(aut);
    }

    for (l, o, text) in s.all("involution") {
        let (values, label) =
            text.split_once("->").ok_or_else(|| parse_err(l, o + 1, "expected 'values -> tau case'"))?;
        let phi = parse_values(values.trim(), &names).map_err(|(c, m)| parse_err(l, o + c, m))?;
        if !phi.is_epimorphism() {
            return Err(semantic(l, "involution", format!("{} is not surjective", values.trim())));
        }
        phi.check_relators(&model.presentation).map_err(|e| semantic(l, "involution", e.to_string()))?;
        let parts: Vec<&str> = label.split_whitespace().collect();
        let [tau, case] = parts.as_slice() else {
            return Err(parse_err(l, o + 1, "expected 'values -> tau case'"));
        };
        if model.label_for(&phi).is_some() {
            return Err(semantic(l, "involution", format!("{} labelled twice", values.trim())));
        }
        model.involution_labels.push((phi, InvolutionLabel { tau: tau.to_string(), case: case.to_string() }));
    }

    model.validate().map_err(|e| semantic(s.line, "model", e.to_string()))?;
    Ok(model)
}

/// `v:1,h:0`, one entry per generator in any order. Errors carry a 1-based column.
fn parse_values(text: &str, names: &[String]) -> Result<GroupHom2, (usize, String)> {
    let mut values: Vec<Option<u8>> = vec![None; names.len()];
    if text.trim().is_empty() {
        return Err((1, "expected generator values".into()));
    }
    let mut col = 1;
    for part in text.split(',') {
        let (g, v) = part.split_once(':').ok_or((col, format!("expected 'gen:value', found '{}'", part.trim())))?;
        let gi = names.iter().position(|n| n == g.trim()).ok_or((col, format!("unknown generator '{}'", g.trim())))?;
        let v = match v.trim() {
            "0" => 0,
            "1" => 1,
            other => return Err((col, format!("value '{other}' is not 0 or 1"))),
        };
        if values[gi].replace(v).is_some() {
            return Err((col, format!("generator '{}' given twice", g.trim())));
        }
        col += part.len() + 1;
    }
    match values.iter().position(Option::is_none) {
        Some(g) => Err((1, format!("no value for generator '{}'", names[g]))),
        None => Ok(GroupHom2::new(values.into_iter().flatten())),
    }
}

/// `Z: v=1, h=2` | `Z2xZ: v=(1,0), h=(0,1)` | `Z2*Z2: v=a, h=a b`.
fn parse_normal_form(text: &str, names: &[String]) -> Result<NormalForm, (usize, String)> {
    let (kind, rest) = text.split_once(':').ok_or((1, "expected 'group: images'".to_string()))?;
    let images = split_images(rest, names)?;
    let bad = |s: &str| (1, format!("bad image '{s}'"));
    match kind.trim() {
        "Z" => images.iter().map(|s| s.parse::<i64>().map_err(|_| bad(s))).collect::<Result<_, _>>().map(NormalForm::Z),
        "Z2xZ" => images
            .iter()
            .map(|s| {
                let inner = s.strip_prefix('(').and_then(|t| t.strip_suffix(')')).ok_or_else(|| bad(s))?;
                let (p, n) = inner.split_once(',').ok_or_else(|| bad(s))?;
                let p: u8 = p.trim().parse().map_err(|_| bad(s))?;
                let n: i64 = n.trim().parse().map_err(|_| bad(s))?;
                if p > 1 {
                    return Err(bad(s));
                }
                Ok((p, n))
            })
            .collect::<Result<_, _>>()
            .map(NormalForm::Z2xZ),
        "Z2*Z2" => images
            .iter()
            .map(|s| {
                s.split_whitespace()
                    .map(|t| match t {
                        "a" => Ok(0u8),
                        "b" => Ok(1u8),
                        _ => Err(bad(s)),
                    })
                    .collect::<Result<Vec<u8>, _>>()
            })
            .collect::<Result<_, _>>()
            .map(NormalForm::Dihedral),
        other => Err((1, format!("unknown group '{other}'"))),
    }
}

/// Splits `v=(1,0), h=(0,1)` on the commas outside parentheses, one image per generator.
fn split_images(rest: &str, names: &[String]) -> Result<Vec<String>, (usize, String)> {
    let mut parts = Vec::new();
    let (mut depth, mut start) = (0i32, 0);
    for (i, c) in rest.char_indices() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                parts.push(&rest[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&rest[start..]);
    let mut images: Vec<Option<String>> = vec![None; names.len()];
    for part in parts {
        let (g, img) = part.split_once('=').ok_or((1, format!("expected 'gen=image', found '{}'", part.trim())))?;
        let gi = names.iter().position(|n| n == g.trim()).ok_or((1, format!("unknown generator '{}'", g.trim())))?;
        if images[gi].replace(img.trim().to_string()).is_some() {
            return Err((1, format!("generator '{}' given twice", g.trim())));
        }
    }
    match images.iter().position(Option::is_none) {
        Some(g) => Err((1, format!("no image for generator '{}'", names[g]))),
        None => Ok(images.into_iter().flatten().collect()),
    }
}

/// `(v->v h, h->h^-1) inverse (v->v h, h->h^-1)`.
fn parse_aut(text: &str, p: &Presentation) -> Result<AutGenerator, GroupError> {
    let mut parser = Parser::new(text);
    let images = parse_map(&mut parser, p)?;
    parser.skip_ws();
    let kw = parser.ident()?;
    if kw != "inverse" {
        return Err(parser.error(format!("expected 'inverse', found '{kw}'")));
    }
    let inverse = parse_map(&mut parser, p)?;
    parser.skip_ws();
    if let Some(c) = parser.peek() {
        return Err(parser.error(format!("trailing '{c}'")));
    }
    Ok(AutGenerator { images, inverse })
}

fn parse_map(parser: &mut Parser<'_>, p: &Presentation) -> Result<Vec<Word>, GroupError> {
    let n = p.generator_count();
    let mut images: Vec<Option<Word>> = vec![None; n];
    parser.expect('(')?;
    loop {
        parser.skip_ws();
        let col = parser.column();
        let g = parser.ident()?;
        let gi = p
            .generator_index(&g)
            .ok_or(GroupError::Parse { column: col, message: format!("unknown generator '{g}'") })?;
        parser.expect('-')?;
        parser.expect('>')?;
        let w = parser.word(&mut |name| p.generator_index(name))?;
        if images[gi].replace(w).is_some() {
            return Err(GroupError::Parse { column: col, message: format!("generator '{g}' mapped twice") });
        }
        parser.skip_ws();
        match parser.bump() {
            Some(',') => continue,
            Some(')') => break,
            _ => return Err(parser.error("expected ',' or ')'".into())),
        }
    }
    match images.iter().position(Option::is_none) {
        Some(g) => Err(parser.error(format!("no image for generator '{}'", p.generator_names()[g]))),
        None => Ok(images.into_iter().flatten().collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const MINIMAL: &str = "[manifold]\nname = S2xS1\npresentation = <h | >\nw1 = h:0\n";

    #[test]
    fn bundled_catalog_loads() {
        let c = default_catalog();
        let names: Vec<&str> = c.models.iter().map(|m| m.name.as_str()).collect();
        assert_eq!(names, ["S2xS1", "E", "RP2xS1", "RP3#RP3"]);
        assert_eq!(c.label_count(), 7);
        assert!(c.warnings.is_empty());
        assert!(c.models.iter().all(|m| m.has_triangulation()));
        assert_eq!(c.model("RP3#RP3").unwrap().loops[1].to_string(), "left.q+right.q");
    }

    #[test]
    fn empty_and_comment_only() {
        assert!(matches!(parse_catalog(""), Err(PipelineError::Parse { line: 1, .. })));
        assert!(matches!(parse_catalog("  \n\n"), Err(PipelineError::Parse { .. })));
        assert!(parse_catalog("# nothing here\n").unwrap().models.is_empty());
    }

    #[test]
    fn w1_must_kill_relators() {
        let text = "[manifold]\nname = E\npresentation = <v, h | v^2 h^-1>\nw1 = v:0,h:1\n";
        match parse_catalog(text) {
            Err(PipelineError::Semantic { line: 4, check, message }) => {
                assert_eq!(check, "w1");
                assert!(message.contains("v^2 h^-1"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn parse_errors_have_locations() {
        let text = "[manifold]\nname = X\npresentation = <a | a^>\nw1 = a:0\n";
        match parse_catalog(text) {
            Err(PipelineError::Parse { line: 3, column, .. }) => assert_eq!(column, 23),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_catalog("name = E\n"), Err(PipelineError::Parse { line: 1, .. })));
        assert!(matches!(parse_catalog("[manifold]\ncolour = red\n"), Err(PipelineError::Parse { line: 2, .. })));
        assert!(matches!(parse_catalog("[other]\n"), Err(PipelineError::Parse { line: 1, .. })));
        let bad_recipe = format!("{MINIMAL}recipe = product(cycle(3),\n");
        assert!(matches!(parse_catalog(&bad_recipe), Err(PipelineError::Parse { line: 5, .. })));
    }

    #[test]
    fn semantic_checks() {
        let wrong_seifert = format!("{MINIMAL}seifert = {{1;(o1,0)}}\n");
        assert!(
            matches!(parse_catalog(&wrong_seifert), Err(PipelineError::Semantic { check, .. }) if check == "seifert")
        );
        let missing_loop = format!("{MINIMAL}recipe = product(bdsimplex(3),cycle(3))\nloops = h:left.c\n");
        assert!(matches!(parse_catalog(&missing_loop), Err(PipelineError::Semantic { check, .. }) if check == "loops"));
        let twice = format!("{MINIMAL}\n{MINIMAL}");
        assert!(matches!(parse_catalog(&twice), Err(PipelineError::Semantic { check, .. }) if check == "name"));
        let not_epi = format!("{MINIMAL}involution = h:0 -> tau1 A1\n");
        assert!(matches!(parse_catalog(&not_epi), Err(PipelineError::Semantic { check, .. }) if check == "involution"));
        let bad_aut = "[manifold]\nname = RP3#RP3\npresentation = <v, h | v^2, (v h)^2>\nw1 = v:0,h:0\n\
                       normal_form = Z2*Z2: v=a, h=a b\naut = (v->h, h->v) inverse (v->h, h->v)\n";
        assert!(matches!(parse_catalog(bad_aut), Err(PipelineError::Semantic { check, .. }) if check == "model"));
    }

    #[test]
    fn unknown_names_warn() {
        let text = "[manifold]\nname = Lens\npresentation = <a | a^3>\nw1 = a:0\n";
        let c = parse_catalog(text).unwrap();
        assert_eq!(c.warnings.len(), 1);
        assert!(c.models[0].kind.is_none());
    }

    #[test]
    fn value_lists() {
        let names = vec!["v".to_string(), "h".to_string()];
        assert_eq!(parse_values("h:1, v:0", &names).unwrap(), GroupHom2::new([0, 1]));
        assert!(parse_values("v:1", &names).is_err());
        assert!(parse_values("v:2,h:0", &names).is_err());
        assert_eq!(parse_values("v:1,x:0", &names).unwrap_err().0, 5);
        assert_eq!(
            parse_normal_form("Z2xZ: v=(1,0), h=(0,1)", &names).unwrap(),
            NormalForm::Z2xZ(vec![(1, 0), (0, 1)])
        );
        assert_eq!(
            parse_normal_form("Z2*Z2: v=a, h=a b", &names).unwrap(),
            NormalForm::Dihedral(vec![vec![0], vec![0, 1]])
        );
        assert!(parse_normal_form("Q: v=1, h=1", &names).is_err());
        assert!(parse_normal_form("Z: v=1", &names).is_err());
    }
}
