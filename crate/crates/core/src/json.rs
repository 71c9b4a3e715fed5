//! Serde helpers: integers print as JSON numbers when they fit in i64 and
//! as decimal strings otherwise.

use num_bigint::BigInt;
use serde::ser::SerializeSeq;
use serde::Serializer;

pub(crate) fn big_int<S: Serializer>(x: &BigInt, s: S) -> Result<S::Ok, S::Error> {
    match i64::try_from(x) {
        Ok(v) => s.serialize_i64(v),
        Err(_) => s.serialize_str(&x.to_string()),
    }
}

pub(crate) fn big_ints<S: Serializer>(xs: &[BigInt], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&Wrapped(x))?;
    }
    seq.end()
}

pub(crate) fn big_int_rows<S: Serializer>(rows: &[Vec<BigInt>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for r in rows {
        seq.serialize_element(&Row(r))?;
    }
    seq.end()
}

struct Wrapped<'a>(&'a BigInt);

impl serde::Serialize for Wrapped<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        big_int(self.0, s)
    }
}

struct Row<'a>(&'a [BigInt]);

impl serde::Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        big_ints(self.0, s)
    }
}
