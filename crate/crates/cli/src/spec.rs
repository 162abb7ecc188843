//! Space specifications: catalog names with parameters, display labels,
//! and the generic fixed-point form.

use gsym_core::embedding::{catalog, find_family, CatalogFamily, Params, SpaceDescriptor, SummandSpec};
use gsym_core::liedata::{SimpleType, Twist};
use gsym_core::Error;

/// Largest parameter tried when matching a display label.
const LABEL_SEARCH: u32 = 64;

fn err(pos: usize, msg: impl Into<String>) -> Error {
    Error::Parse { pos, msg: msg.into() }
}

fn normalise(s: &str) -> String {
    s.chars()
        .filter(|c| !c.is_whitespace() && *c != '*')
        .map(|c| match c {
            '×' => 'x',
            '·' => '.',
            _ => c,
        })
        .flat_map(char::to_lowercase)
        .collect()
}

/// Parses any accepted form into a descriptor.
pub fn parse_space(text: &str) -> Result<SpaceDescriptor, Error> {
    let t = text.trim();
    if t.starts_with("g=") || t.starts_with("g =") {
        return parse_generic(text);
    }
    if let Some(sp) = parse_family_form(t)? {
        return Ok(sp);
    }
    if let Some(sp) = parse_label(t) {
        return Ok(sp);
    }
    Err(err(0, format!("`{t}` is neither a catalog family nor a known space")))
}

/// `NAME(n=3,k=1)` or a parameterless name like `E6/F4`.
fn parse_family_form(t: &str) -> Result<Option<SpaceDescriptor>, Error> {
    if let Some(f) = find_family(&normalise(t)).filter(|f| f.params == Params::Fixed) {
        return f.instantiate(0, 0).map(Some);
    }
    let Some(open) = t.rfind('(') else { return Ok(None) };
    let args = &t[open + 1..];
    if !args.ends_with(')') || !args.contains('=') {
        return Ok(None);
    }
    let Some(f) = find_family(&normalise(&t[..open])) else {
        return Err(err(0, format!("unknown family `{}`", &t[..open])));
    };
    let (mut n, mut k) = (None, None);
    let mut pos = open + 1;
    for part in args[..args.len() - 1].split(',') {
        let (key, value) = part
            .split_once('=')
            .ok_or_else(|| err(pos, format!("expected `name=value`, got `{part}`")))?;
        let v: u32 = value
            .trim()
            .parse()
            .map_err(|_| err(pos + key.len() + 1, format!("bad value `{}`", value.trim())))?;
        match key.trim() {
            "n" => n = Some(v),
            "k" => k = Some(v),
            other => return Err(err(pos, format!("unknown parameter `{other}`"))),
        }
        pos += part.len() + 1;
    }
    let need_k = f.params == Params::NK;
    let n = n.ok_or_else(|| err(open, format!("{} needs n", f.name)))?;
    let k = match (k, need_k) {
        (Some(k), true) => k,
        (None, true) => return Err(err(open, format!("{} needs k", f.name))),
        (Some(_), false) => return Err(err(open, format!("{} takes no k", f.name))),
        (None, false) => 0,
    };
    f.instantiate(n, k).map(Some)
}

/// Display labels such as `SU(6)/Sp(3)`.
fn parse_label(t: &str) -> Option<SpaceDescriptor> {
    let key = normalise(t);
    let hit = |f: &CatalogFamily, n: u32, k: u32| f.in_range(n, k) && normalise(&f.instance_name(n, k)) == key;
    for f in catalog() {
        match f.params {
            Params::Fixed => {}
            Params::N => {
                if let Some(n) = (1..=LABEL_SEARCH).find(|&n| hit(&f, n, 0)) {
                    return f.instantiate(n, 0).ok();
                }
            }
            Params::NK => {
                for n in 1..=LABEL_SEARCH {
                    if let Some(k) = (1..=n).find(|&k| hit(&f, n, k)) {
                        return f.instantiate(n, k).ok();
                    }
                }
            }
        }
    }
    None
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), Error> {
        self.ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            Ok(())
        } else {
            Err(err(self.pos, format!("expected `{tok}`")))
        }
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn word(&mut self) -> (usize, &'a str) {
        self.ws();
        let start = self.pos;
        let len = self.src[start..]
            .find(|c: char| !c.is_ascii_alphanumeric())
            .unwrap_or(self.src.len() - start);
        self.pos += len;
        (start, &self.src[start..start + len])
    }

    fn number(&mut self) -> Result<usize, Error> {
        let (at, w) = self.word();
        w.parse().map_err(|_| err(at, format!("expected a number, got `{w}`")))
    }

    fn simple_type(&mut self) -> Result<SimpleType, Error> {
        let (at, w) = self.word();
        w.parse().map_err(|_| err(at, format!("unknown type `{w}`")))
    }
}

/// `g=A5; cat=2; torus=0; summands=[(C3,[1,2,3])]`.
pub fn parse_generic(text: &str) -> Result<SpaceDescriptor, Error> {
    let mut c = Cursor { src: text, pos: 0 };
    c.expect("g")?;
    c.expect("=")?;
    let ambient = c.simple_type()?;
    if !ambient.is_ambient_rank() && !(ambient.family() == gsym_core::liedata::Family::C && ambient.rank() == 2) {
        return Err(err(0, format!("{ambient} is not an ambient type")));
    }
    c.expect(";")?;
    c.expect("cat")?;
    c.expect("=")?;
    let at = c.pos;
    let cat = c.number()?;
    let twist = u8::try_from(cat)
        .ok()
        .and_then(Twist::from_number)
        .ok_or_else(|| err(at, format!("bad category {cat}")))?;
    c.expect(";")?;
    c.expect("torus")?;
    c.expect("=")?;
    let torus = c.number()?;
    c.expect(";")?;
    c.expect("summands")?;
    c.expect("=")?;
    c.expect("[")?;
    let mut summands = Vec::new();
    if !c.eat("]") {
        loop {
            c.expect("(")?;
            let ty = c.simple_type()?;
            c.expect(",")?;
            c.expect("[")?;
            let mut idx = Vec::new();
            if !c.eat("]") {
                loop {
                    idx.push(c.number()?);
                    if c.eat("]") {
                        break;
                    }
                    c.expect(",")?;
                }
            }
            c.expect(")")?;
            summands.push(SummandSpec::new(ty, idx));
            if c.eat("]") {
                break;
            }
            c.expect(",")?;
        }
    }
    c.ws();
    if c.pos != text.len() {
        return Err(err(c.pos, "unexpected trailing input"));
    }
    Ok(SpaceDescriptor::new(ambient, twist, torus, summands))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn forms() {
        let a = parse_space("SU(2n)/Sp(n)(n=3)").unwrap();
        let b = parse_space("SU(6)/Sp(3)").unwrap();
        assert_eq!(a, b);
        assert_eq!(a.label(), "SU(6)/Sp(3)");
        let c = parse_space("SO(2n)/SO(2k)xSO(2n-2k)(n=5, k=2)").unwrap();
        assert_eq!(c.label(), "SO(10)/SO(4)xSO(6)");
        assert_eq!(parse_space("SO(10)/SO(4)×SO(6)").unwrap(), c);
        assert_eq!(parse_space("E6/F4").unwrap().label(), "E6/F4");
        assert_eq!(parse_space("E7/SU*(8)").unwrap().label(), "E7/SU(8)");
        let g = parse_space("g=A2; cat=1; torus=2; summands=[]").unwrap();
        assert_eq!((g.torus_rank, g.summands.len()), (2, 0));
    }

    #[test]
    fn errors_carry_positions() {
        match parse_generic("g=A2; cat=7; torus=0; summands=[]") {
            Err(Error::Parse { pos, .. }) => assert_eq!(pos, 10),
            other => panic!("{other:?}"),
        }
        match parse_generic("g=A2; cat=1; torus=0; summands=[(Q1,[1])]") {
            Err(Error::Parse { pos, msg }) => assert_eq!((pos, msg.as_str()), (33, "unknown type `Q1`")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(parse_space("SU(2n)/Sp(n)(n=3,k=1)"), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_space("SU(2n)/Sp(n)(n=1)"),
            Err(Error::ParameterOutOfRange(_))
        ));
        assert!(parse_space("Foo/Bar").is_err());
    }
}
