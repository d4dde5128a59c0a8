//! Conjugacy classes of `GL_n(F_q)` written as types tagged with eigenvalue
//! data, and generic eigenvalue choices for a multi-type.
//!
//! ```text
//! item     := entry "@" tag
//! tag      := int                          (degree 1: the eigenvalue)
//!           | "(" int ("," int)* ")"       (c₀,…,c_{d−1} of x^d + c_{d−1}x^{d−1} + ⋯ + c₀)
//! class    := item+
//! classes  := class (";" class)*
//! ```

use std::fmt;

use super::census::{key_type, ClassKey};
use super::field::{is_irreducible, monic_irreducibles, ExtField, FieldError, FpPoly};
use super::OracleError;
use crate::arith::lcm_u64;
use crate::partitions::{entry, Cursor, MultiType, Partition, TypeT};
use crate::quiver::{genericity_check, AbelianGroup, ClassData};

/// A class given by its elementary divisors: distinct monic irreducible
/// polynomials with Jordan partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ClassDescriptor {
    pub q: u32,
    pub key: ClassKey,
}

impl ClassDescriptor {
    pub fn new(q: u32, mut key: ClassKey) -> Self {
        key.sort();
        ClassDescriptor { q, key }
    }

    pub fn ty(&self) -> TypeT {
        key_type(&self.key)
    }

    pub fn size(&self) -> u32 {
        self.ty().size()
    }

    /// Every Jordan partition is a column.
    pub fn is_semisimple(&self) -> bool {
        self.key.iter().all(|(_, l)| l.len() as u32 == l.size())
    }

    /// Every Jordan partition is a single row.
    pub fn is_regular(&self) -> bool {
        self.key.iter().all(|(_, l)| l.len() == 1)
    }
}

impl fmt::Display for ClassDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (poly, l) in &self.key {
            let d = poly.len() - 1;
            if d == 1 {
                let a = (self.q - poly[0]) % self.q;
                write!(f, "{l}@{a}")?;
            } else {
                let cs: Vec<String> = poly[..d].iter().map(|c| c.to_string()).collect();
                write!(f, "({d},{l})@({})", cs.join(","))?;
            }
        }
        Ok(())
    }
}

/// Unipotent class with Jordan partition `lambda`.
pub fn unipotent_descriptor(lambda: &Partition, q: u64) -> ClassDescriptor {
    ClassDescriptor::new(q as u32, vec![(vec![q as u32 - 1, 1], lambda.clone())])
}

fn tag(c: &mut Cursor, d: u32, q: u32) -> Result<FpPoly, OracleError> {
    if c.peek() == Some('(') {
        c.expect('(')?;
        let mut coeffs = vec![(c.int()? % q as u64) as u32];
        while c.peek() == Some(',') {
            c.expect(',')?;
            coeffs.push((c.int()? % q as u64) as u32);
        }
        if coeffs.len() != d as usize {
            return c
                .err(format!(
                    "degree {d} entry needs {d} coefficients, found {}",
                    coeffs.len()
                ))
                .map_err(Into::into);
        }
        c.expect(')')?;
        coeffs.push(1);
        Ok(coeffs)
    } else {
        let at = c.pos;
        let a = (c.int()? % q as u64) as u32;
        if d != 1 {
            c.pos = at;
            c.skip_ws();
            return c
                .err(format!("degree {d} entry needs a coefficient tuple"))
                .map_err(Into::into);
        }
        if a == 0 {
            c.pos = at;
            c.skip_ws();
            return c.err("eigenvalue must be nonzero in F_q").map_err(Into::into);
        }
        Ok(vec![(q - a) % q, 1])
    }
}

/// Parses `;`-separated tagged classes over the prime field `F_q`.
pub fn parse_classes(s: &str, q: u64) -> Result<Vec<ClassDescriptor>, OracleError> {
    if !super::field::is_prime(q) {
        return Err(FieldError::NotPrime(q).into());
    }
    let p = q as u32;
    let mut c = Cursor::new(s);
    let mut out: Vec<ClassDescriptor> = Vec::new();
    let mut starts = Vec::new();
    loop {
        c.skip_ws();
        starts.push(c.pos);
        let mut key: ClassKey = Vec::new();
        loop {
            let (d, l) = entry(&mut c)?;
            c.expect('@')?;
            c.skip_ws();
            let at = c.pos;
            let f = tag(&mut c, d, p)?;
            if !is_irreducible(&f, p) || f == vec![0, 1] {
                c.pos = at;
                return c
                    .err(format!("x^{d} + … is not irreducible over F_{q} or has root 0"))
                    .map_err(Into::into);
            }
            if key.iter().any(|(g, _)| g == &f) {
                c.pos = at;
                return c.err("eigenvalue repeated within a class").map_err(Into::into);
            }
            key.push((f, l));
            if !matches!(c.peek(), Some('(') | Some('[')) {
                break;
            }
        }
        out.push(ClassDescriptor::new(p, key));
        match c.peek() {
            Some(';') => c.expect(';')?,
            None => break,
            Some(x) => {
                return c
                    .err(format!("expected ';' or end of input, found '{x}'"))
                    .map_err(Into::into)
            }
        }
    }
    let n = out[0].size();
    if let Some(i) = out.iter().position(|d| d.size() != n) {
        c.pos = starts[i];
        return c
            .err(format!(
                "class has size {} but the first class has size {n}",
                out[i].size()
            ))
            .map_err(Into::into);
    }
    Ok(out)
}

fn extension_degree(classes: &[ClassDescriptor]) -> u64 {
    classes
        .iter()
        .flat_map(|c| c.key.iter().map(|(f, _)| (f.len() - 1) as u64))
        .fold(1, lcm_u64)
}

fn class_data(field: &ExtField, classes: &[ClassDescriptor]) -> Vec<ClassData> {
    classes
        .iter()
        .map(|c| ClassData {
            ty: c.ty(),
            eigenvalues: c
                .key
                .iter()
                .flat_map(|(f, l)| field.root_logs(f).into_iter().map(move |e| (vec![e as i64], l.size())))
                .collect(),
        })
        .collect()
}

fn generic_in(field: &ExtField, classes: &[ClassDescriptor]) -> bool {
    genericity_check(&AbelianGroup::cyclic(field.order), &class_data(field, classes)).expect("well-formed classes")
}

/// Genericity of the eigenvalues, computed with discrete logs in the
/// smallest extension of `F_q` containing all of them.
pub fn is_generic(classes: &[ClassDescriptor], q: u64) -> bool {
    let field = ExtField::new(q as u32, extension_degree(classes) as usize);
    generic_in(&field, classes)
}

/// All ways to attach distinct irreducible polynomials to the entries of a
/// type, equal entries taking increasing polynomials.
fn assignments(ty: &TypeT, irr: &[Vec<FpPoly>], q: u32) -> Vec<ClassDescriptor> {
    let entries = ty.entries();
    let mut out = Vec::new();
    let mut chosen: Vec<usize> = Vec::new();
    fn rec(
        i: usize,
        entries: &[(u32, Partition)],
        irr: &[Vec<FpPoly>],
        q: u32,
        chosen: &mut Vec<usize>,
        out: &mut Vec<ClassDescriptor>,
    ) {
        if i == entries.len() {
            let key = entries
                .iter()
                .zip(chosen.iter())
                .map(|((d, l), &j)| (irr[*d as usize][j].clone(), l.clone()))
                .collect();
            out.push(ClassDescriptor::new(q, key));
            return;
        }
        let (d, _) = &entries[i];
        let start = if i > 0 && entries[i - 1] == entries[i] {
            chosen[i - 1] + 1
        } else {
            0
        };
        for j in start..irr[*d as usize].len() {
            let clash = (0..i).any(|k| entries[k].0 == *d && chosen[k] == j);
            if clash {
                continue;
            }
            chosen.push(j);
            rec(i + 1, entries, irr, q, chosen, out);
            chosen.pop();
        }
    }
    rec(0, entries, irr, q, &mut chosen, &mut out);
    out
}

/// First generic eigenvalue assignment for `omega` over `F_q` in a fixed
/// enumeration order, or `None` when there is none.
pub fn find_generic(omega: &MultiType, q: u64) -> Result<Option<Vec<ClassDescriptor>>, OracleError> {
    if !super::field::is_prime(q) {
        return Err(FieldError::NotPrime(q).into());
    }
    let p = q as u32;
    let max_d = omega.types().iter().flat_map(|t| t.degrees()).max().unwrap_or(1) as usize;
    let irr: Vec<Vec<FpPoly>> = (0..=max_d)
        .map(|d| if d == 0 { Vec::new() } else { monic_irreducibles(d, p) })
        .collect();
    let per_class: Vec<Vec<ClassDescriptor>> = omega.types().iter().map(|t| assignments(t, &irr, p)).collect();
    if per_class.iter().any(|v| v.is_empty()) {
        return Ok(None);
    }
    let d = omega
        .types()
        .iter()
        .flat_map(|t| t.degrees())
        .fold(1u64, |a, b| lcm_u64(a, b as u64));
    let field = ExtField::new(p, d as usize);
    let mut idx = vec![0usize; per_class.len()];
    loop {
        let pick: Vec<ClassDescriptor> = idx.iter().zip(&per_class).map(|(&i, v)| v[i].clone()).collect();
        if generic_in(&field, &pick) {
            return Ok(Some(pick));
        }
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return Ok(None);
            }
            idx[pos] += 1;
            if idx[pos] < per_class[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{parse_multitype, parse_type};

    #[test]
    fn parse_and_type() {
        let cs = parse_classes("[1]@1[1]@2; (2,[1])@(1,0)", 3).unwrap();
        assert_eq!(cs.len(), 2);
        assert_eq!(cs[0].ty(), parse_type("[1][1]").unwrap());
        assert_eq!(cs[1].ty(), parse_type("(2,[1])").unwrap());
        assert!(cs[0].is_semisimple() && cs[0].is_regular());
    }

    #[test]
    fn parse_errors() {
        for (s, pos) in [
            ("[1]@0", 4),
            ("[1]@1[1]@1", 9),
            ("(2,[1])@(2,0)", 8),
            ("[1]@1;[1,1]@1", 6),
            ("[1]1", 3),
        ] {
            match parse_classes(s, 3) {
                Err(OracleError::Parse(e)) => assert_eq!(e.pos, pos, "{s}: {}", e.render()),
                other => panic!("{s}: {other:?}"),
            }
        }
        assert!(matches!(parse_classes("[1]@1", 4), Err(OracleError::Field(_))));
    }

    #[test]
    fn genericity() {
        let d4 = parse_classes("[1]@1[1]@2;[1]@1[1]@2;[1]@1[1]@2;[1]@1[1]@2", 3).unwrap();
        assert!(!is_generic(&d4, 3));
        let om = parse_multitype("[1][1];[1][1];[1][1];[1][1]").unwrap();
        for q in [2, 3, 5] {
            assert!(find_generic(&om, q).unwrap().is_none());
        }
        let found = find_generic(&om, 7).unwrap().unwrap();
        assert!(is_generic(&found, 7));
        let n3 = parse_multitype("(3,[1]);(3,[1]);(2,[1])[1]").unwrap();
        assert!(find_generic(&n3, 2).unwrap().is_some());
        // only eigenvalue 1 exists over F_2
        assert!(find_generic(&parse_multitype("[1]").unwrap(), 2).unwrap().is_some());
        assert!(find_generic(&parse_multitype("[2];[1,1]").unwrap(), 2)
            .unwrap()
            .is_none());
    }
}
