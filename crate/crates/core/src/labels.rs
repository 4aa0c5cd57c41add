//! Serde adapters that show zero-based node and row indices as 1-based
//! labels.

use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

pub mod one {
    use super::*;

    pub fn serialize<S: Serializer>(v: &usize, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(*v as u64 + 1)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<usize, D::Error> {
        let v = usize::deserialize(d)?;
        v.checked_sub(1).ok_or_else(|| D::Error::custom("labels start at 1"))
    }
}

pub mod many {
    use super::*;
    use serde::ser::SerializeSeq;

    pub fn serialize<S: Serializer>(v: &[usize], s: S) -> Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(v.len()))?;
        for x in v {
            seq.serialize_element(&(x + 1))?;
        }
        seq.end()
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<usize>, D::Error> {
        let v = Vec::<usize>::deserialize(d)?;
        v.into_iter()
            .map(|x| x.checked_sub(1).ok_or_else(|| D::Error::custom("labels start at 1")))
            .collect()
    }
}

/// `(u, v)` edge pairs.
pub mod pairs {
    use super::*;

    pub fn serialize<S: Serializer>(v: &[(usize, usize)], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(|&(a, b)| [a + 1, b + 1]))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<(usize, usize)>, D::Error> {
        let v = Vec::<[usize; 2]>::deserialize(d)?;
        v.into_iter()
            .map(|[a, b]| match (a.checked_sub(1), b.checked_sub(1)) {
                (Some(a), Some(b)) => Ok((a, b)),
                _ => Err(D::Error::custom("labels start at 1")),
            })
            .collect()
    }
}
