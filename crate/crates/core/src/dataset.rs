//! Dataset ingestion: CSV parsing, fixed-point scaling, Gray-code
//! binarization and leave-one-out folds.

use std::fmt;
use std::str::FromStr;

use crate::{Error, Result};

/// A decimal numeral kept exactly as `mantissa / 10^frac_digits`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Decimal {
    mantissa: i64,
    frac_digits: u32,
}

impl Decimal {
    pub fn to_f64(self) -> f64 {
        self.mantissa as f64 / 10f64.powi(self.frac_digits as i32)
    }

    /// `self * scale` if the product is an integer.
    pub fn scaled(self, scale: u32) -> Option<i64> {
        let num = self.mantissa.checked_mul(scale as i64)?;
        let den = 10i64.checked_pow(self.frac_digits)?;
        (num % den == 0).then(|| num / den)
    }
}

impl FromStr for Decimal {
    type Err = ();

    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        let s = s.trim();
        let (neg, body) = match s.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, s.strip_prefix('+').unwrap_or(s)),
        };
        let (int_part, frac_part) = match body.split_once('.') {
            Some((i, f)) => (i, f),
            None => (body, ""),
        };
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(());
        }
        if !int_part
            .bytes()
            .chain(frac_part.bytes())
            .all(|b| b.is_ascii_digit())
        {
            return Err(());
        }
        let digits = format!("{int_part}{frac_part}");
        let mut mantissa: i64 = digits.parse().map_err(|_| ())?;
        if neg {
            mantissa = -mantissa;
        }
        Ok(Decimal {
            mantissa,
            frac_digits: frac_part.len() as u32,
        })
    }
}

impl fmt::Display for Decimal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.frac_digits == 0 {
            return write!(f, "{}", self.mantissa);
        }
        let den = 10i64.pow(self.frac_digits);
        let sign = if self.mantissa < 0 { "-" } else { "" };
        let abs = self.mantissa.unsigned_abs();
        write!(
            f,
            "{sign}{}.{:0width$}",
            abs / den as u64,
            abs % den as u64,
            width = self.frac_digits as usize
        )
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct RawRecord {
    pub attributes: Vec<Decimal>,
    pub class_name: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct RawDataset {
    pub records: Vec<RawRecord>,
    pub attribute_count: usize,
    pub header: Option<Vec<String>>,
}

/// Parses comma-separated rows whose last column is the class name.
///
/// A first row whose attribute columns are not all numeric is taken as a
/// header. Blank lines are skipped.
pub fn parse_csv(text: &str) -> Result<RawDataset> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .peekable();

    let mut header = None;
    if let Some(&(_, first)) = lines.peek() {
        let cols: Vec<&str> = first.split(',').map(str::trim).collect();
        let numeric = cols.len() >= 2
            && cols[..cols.len() - 1]
                .iter()
                .all(|c| c.parse::<Decimal>().is_ok());
        if !numeric {
            header = Some(cols.iter().map(|c| c.to_string()).collect::<Vec<_>>());
            lines.next();
        }
    }

    let mut attribute_count = header
        .as_ref()
        .map(|h: &Vec<String>| h.len().saturating_sub(1));
    let mut records = Vec::new();
    for (line, row) in lines {
        let cols: Vec<&str> = row.split(',').map(str::trim).collect();
        let found = cols.len().saturating_sub(1);
        let expected = *attribute_count.get_or_insert(found);
        if found != expected || found == 0 {
            return Err(Error::RaggedRow {
                line,
                expected,
                found,
            });
        }
        let class_name = cols[found].to_string();
        if class_name.is_empty() {
            return Err(Error::EmptyClassName { line });
        }
        let attributes = cols[..found]
            .iter()
            .enumerate()
            .map(|(column, v)| {
                v.parse::<Decimal>().map_err(|_| Error::NonNumeric {
                    line,
                    column,
                    value: v.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        records.push(RawRecord {
            attributes,
            class_name,
        });
    }

    if records.is_empty() {
        return Err(Error::EmptyInput);
    }
    if records.len() < 2 {
        return Err(Error::TooFewPatterns(records.len()));
    }
    Ok(RawDataset {
        attribute_count: attribute_count.unwrap_or(0),
        records,
        header,
    })
}

/// Fixed-length bit string, most-significant (leftmost) bit at index 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitString {
    len: usize,
    words: Vec<u64>,
}

impl BitString {
    pub fn zeros(len: usize) -> Self {
        BitString {
            len,
            words: vec![0; len.div_ceil(64)],
        }
    }

    pub fn from_bits<I: IntoIterator<Item = bool>>(bits: I) -> Self {
        let bits: Vec<bool> = bits.into_iter().collect();
        let mut out = BitString::zeros(bits.len());
        for (i, b) in bits.into_iter().enumerate() {
            out.set(i, b);
        }
        out
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn set(&mut self, i: usize, bit: bool) {
        assert!(i < self.len, "bit index {i} out of range {}", self.len);
        let mask = 1u64 << (i % 64);
        if bit {
            self.words[i / 64] |= mask;
        } else {
            self.words[i / 64] &= !mask;
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        (0..self.len).map(|i| self.get(i))
    }

    pub fn concat(parts: &[BitString]) -> BitString {
        BitString::from_bits(parts.iter().flat_map(|p| p.iter().collect::<Vec<_>>()))
    }

    pub fn complement(&self) -> BitString {
        BitString::from_bits(self.iter().map(|b| !b))
    }

    /// Number of differing positions; `None` on length mismatch.
    pub fn hamming(&self, other: &BitString) -> Option<u32> {
        (self.len == other.len).then(|| {
            self.words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| (a ^ b).count_ones())
                .sum()
        })
    }
}

impl fmt::Display for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.iter() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitString({self})")
    }
}

impl FromStr for BitString {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::InvalidParams(format!("not a bit: {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()
            .map(BitString::from_bits)
    }
}

/// Binary-reflected Gray code of `value`, `width` bits, MSB first.
pub fn gray_encode(value: u64, width: u32) -> Result<BitString> {
    if width == 0 || width > 64 || (width < 64 && value >> width != 0) {
        return Err(Error::WidthExceeded { value, width });
    }
    let gray = value ^ (value >> 1);
    Ok(BitString::from_bits(
        (0..width).rev().map(|shift| gray >> shift & 1 == 1),
    ))
}

/// Bits needed to represent `v` in plain binary, at least 1.
fn bit_length(v: u64) -> u32 {
    (u64::BITS - v.leading_zeros()).max(1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum WidthPolicy {
    /// Smallest width covering each attribute's maximum scaled value.
    PerAttributeMin,
    /// One width for every attribute, covering the global maximum.
    GlobalMax,
    Explicit(Vec<u32>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinarizationSpec {
    pub scale_factor: u32,
    pub width_policy: WidthPolicy,
}

impl Default for BinarizationSpec {
    fn default() -> Self {
        BinarizationSpec {
            scale_factor: 10,
            width_policy: WidthPolicy::PerAttributeMin,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BinaryPattern {
    pub bits: BitString,
    pub class_id: usize,
    /// Source attributes after scaling, kept for the Euclidean baseline.
    pub scaled: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct LabeledDataset {
    pub patterns: Vec<BinaryPattern>,
    pub class_names: Vec<String>,
    pub n: usize,
    pub widths: Vec<u32>,
}

impl LabeledDataset {
    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn class_count(&self) -> usize {
        self.class_names.len()
    }

    pub fn class_ids(&self) -> Vec<usize> {
        self.patterns.iter().map(|p| p.class_id).collect()
    }

    /// One line per pattern: bits, a space, the class name.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for p in &self.patterns {
            out.push_str(&format!("{} {}\n", p.bits, self.class_names[p.class_id]));
        }
        out
    }
}

/// Scales every attribute, Gray-encodes it and concatenates the codes.
///
/// Widths are resolved on the whole dataset, so every fold derived from the
/// result shares one encoding.
pub fn binarize(raw: &RawDataset, spec: &BinarizationSpec) -> Result<LabeledDataset> {
    if spec.scale_factor == 0 {
        return Err(Error::Binarization("scale factor must be positive".into()));
    }
    let mut scaled_rows = Vec::with_capacity(raw.records.len());
    for (record, r) in raw.records.iter().enumerate() {
        let row = r
            .attributes
            .iter()
            .enumerate()
            .map(|(attribute, v)| match v.scaled(spec.scale_factor) {
                Some(s) if s >= 0 => Ok(s),
                Some(s) => Err(Error::Binarization(format!(
                    "record {record} attribute {attribute}: negative scaled value {s}"
                ))),
                None => Err(Error::NonIntegral {
                    record,
                    attribute,
                    value: v.to_string(),
                    scale: spec.scale_factor,
                }),
            })
            .collect::<Result<Vec<i64>>>()?;
        scaled_rows.push(row);
    }

    let maxima: Vec<u64> = (0..raw.attribute_count)
        .map(|a| scaled_rows.iter().map(|r| r[a] as u64).max().unwrap_or(0))
        .collect();
    let widths = match &spec.width_policy {
        WidthPolicy::PerAttributeMin => maxima.iter().map(|&m| bit_length(m)).collect(),
        WidthPolicy::GlobalMax => {
            let w = bit_length(maxima.iter().copied().max().unwrap_or(0));
            vec![w; raw.attribute_count]
        }
        WidthPolicy::Explicit(ws) => {
            if ws.len() != raw.attribute_count {
                return Err(Error::Binarization(format!(
                    "{} widths given for {} attributes",
                    ws.len(),
                    raw.attribute_count
                )));
            }
            ws.clone()
        }
    };

    let mut class_names: Vec<String> = Vec::new();
    let mut patterns = Vec::with_capacity(raw.records.len());
    for (r, scaled) in raw.records.iter().zip(scaled_rows) {
        let class_id = match class_names.iter().position(|c| *c == r.class_name) {
            Some(id) => id,
            None => {
                class_names.push(r.class_name.clone());
                class_names.len() - 1
            }
        };
        let codes = scaled
            .iter()
            .zip(&widths)
            .map(|(&v, &w)| gray_encode(v as u64, w))
            .collect::<Result<Vec<_>>>()?;
        patterns.push(BinaryPattern {
            bits: BitString::concat(&codes),
            class_id,
            scaled,
        });
    }

    Ok(LabeledDataset {
        n: widths.iter().map(|&w| w as usize).sum(),
        patterns,
        class_names,
        widths,
    })
}

#[derive(Clone, Debug)]
pub struct Fold {
    pub index: usize,
    pub training: LabeledDataset,
    pub query: BinaryPattern,
}

/// Leave-one-out folds; fold `i` holds out pattern `i`.
pub fn loo_folds(data: &LabeledDataset) -> Result<Vec<Fold>> {
    if data.len() < 2 {
        return Err(Error::TooFewPatterns(data.len()));
    }
    Ok((0..data.len())
        .map(|i| {
            let patterns = data
                .patterns
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            Fold {
                index: i,
                training: LabeledDataset {
                    patterns,
                    class_names: data.class_names.clone(),
                    n: data.n,
                    widths: data.widths.clone(),
                },
                query: data.patterns[i].clone(),
            }
        })
        .collect())
}
