//! Quasipositivity certificates and obstructions.
//!
//! A braid is quasipositive when it is a product of bands `w σ_i w⁻¹`.
//! Certificates list those bands explicitly. Membership in general is not
//! decided here: [`obstruct`] applies a fixed list of sound rules and
//! answers [`QPVerdict::Unknown`] when none applies.

use serde::{Deserialize, Serialize};

use crate::braid::{ArtinLetter, BraidWord};
use crate::error::{Error, Result};
use crate::garside::{self, conjugacy, Conjugacy};

/// The band `conjugator · σ_gen · conjugator⁻¹`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Band {
    conjugator: BraidWord,
    gen: usize,
}

impl Band {
    pub fn new(conjugator: BraidWord, gen: usize) -> Result<Self> {
        let n = conjugator.strands();
        if gen == 0 || gen >= n {
            return Err(Error::IndexOutOfRange {
                index: gen as i64,
                max: n.saturating_sub(1),
                strands: n,
            });
        }
        Ok(Band { conjugator, gen })
    }

    /// The bare generator `σ_gen`.
    pub fn generator(n: usize, gen: usize) -> Result<Self> {
        Self::new(BraidWord::identity(n), gen)
    }

    pub fn conjugator(&self) -> &BraidWord {
        &self.conjugator
    }

    pub fn gen(&self) -> usize {
        self.gen
    }

    pub fn strands(&self) -> usize {
        self.conjugator.strands()
    }

    pub fn to_word(&self) -> BraidWord {
        let mut w = self.conjugator.clone();
        w.push(ArtinLetter::positive(self.gen));
        w.extend(&self.conjugator.inverse());
        w
    }

    /// The same band written as `c σ1 c⁻¹`.
    pub fn to_sigma1(&self) -> Band {
        let n = self.strands();
        let mut conj = self.conjugator.clone();
        conj.extend(&sigma1_connector(n, self.gen));
        Band {
            conjugator: conj,
            gen: 1,
        }
    }
}

/// `c_i` with `σ_i = c_i σ1 c_i⁻¹`, namely
/// `c_i = (σ_{i-1}σ_i)(σ_{i-2}σ_{i-1})⋯(σ1σ2)`.
pub fn sigma1_connector(n: usize, gen: usize) -> BraidWord {
    let mut letters = Vec::new();
    for j in (1..gen as i32).rev() {
        letters.push(j);
        letters.push(j + 1);
    }
    BraidWord::from_signed(n, &letters).expect("indices below gen")
}

/// An ordered list of bands; its expansion is their product.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QPCertificate {
    strands: usize,
    bands: Vec<Band>,
}

impl QPCertificate {
    pub fn new(strands: usize, bands: Vec<Band>) -> Result<Self> {
        if let Some(b) = bands.iter().find(|b| b.strands() != strands) {
            return Err(Error::StrandMismatch {
                left: strands,
                right: b.strands(),
            });
        }
        Ok(QPCertificate { strands, bands })
    }

    pub fn empty(strands: usize) -> Self {
        QPCertificate {
            strands,
            bands: Vec::new(),
        }
    }

    /// One band `σ_i` per letter of a positive word.
    pub fn from_positive_word(w: &BraidWord) -> Option<Self> {
        let n = w.strands();
        let bands = w
            .letters()
            .iter()
            .map(|l| {
                l.is_positive().then(|| Band {
                    conjugator: BraidWord::identity(n),
                    gen: l.index(),
                })
            })
            .collect::<Option<Vec<_>>>()?;
        Some(QPCertificate { strands: n, bands })
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn bands(&self) -> &[Band] {
        &self.bands
    }

    pub fn len(&self) -> usize {
        self.bands.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bands.is_empty()
    }

    /// Every band rewritten as a conjugate of `σ1`.
    pub fn to_sigma1(&self) -> QPCertificate {
        QPCertificate {
            strands: self.strands,
            bands: self.bands.iter().map(Band::to_sigma1).collect(),
        }
    }
}

#[derive(Serialize, Deserialize)]
struct RawBand {
    conj: String,
    gen: usize,
}

#[derive(Serialize, Deserialize)]
struct RawCertificate {
    n: usize,
    bands: Vec<RawBand>,
}

impl Serialize for QPCertificate {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawCertificate {
            n: self.strands,
            bands: self
                .bands
                .iter()
                .map(|b| RawBand {
                    conj: b.conjugator.to_string(),
                    gen: b.gen,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawCertificate::deserialize(d)?;
        let bands = raw
            .bands
            .into_iter()
            .map(|b| Band::new(BraidWord::parse(&b.conj, raw.n)?, b.gen))
            .collect::<Result<Vec<_>>>()
            .map_err(serde::de::Error::custom)?;
        QPCertificate::new(raw.n, bands).map_err(serde::de::Error::custom)
    }
}

/// The product of the bands, as a word.
pub fn expand(cert: &QPCertificate) -> BraidWord {
    let mut w = BraidWord::identity(cert.strands);
    for b in &cert.bands {
        w.extend(&b.to_word());
    }
    w
}

/// Whether the certificate expands to `b`.
pub fn verify(cert: &QPCertificate, b: &BraidWord) -> Result<bool> {
    garside::is_equal(&expand(cert), b)
}

/// Bandwise conjugation: `(w, i) ↦ (u·w, i)`, a certificate for
/// `u · expand(cert) · u⁻¹`.
pub fn conjugate_certificate(cert: &QPCertificate, u: &BraidWord) -> Result<QPCertificate> {
    if u.strands() != cert.strands {
        return Err(Error::StrandMismatch {
            left: cert.strands,
            right: u.strands(),
        });
    }
    let bands = cert
        .bands
        .iter()
        .map(|b| {
            let mut conj = u.clone();
            conj.extend(&b.conjugator);
            Band {
                conjugator: conj,
                gen: b.gen,
            }
        })
        .collect();
    Ok(QPCertificate {
        strands: cert.strands,
        bands,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum NotQpReason {
    NegativeExponentSum,
    ZeroExponentNonidentity,
    AbelianizationOneNotBand,
}

impl NotQpReason {
    pub fn code(self) -> &'static str {
        match self {
            NotQpReason::NegativeExponentSum => "NEGATIVE_EXPONENT_SUM",
            NotQpReason::ZeroExponentNonidentity => "ZERO_EXPONENT_NONIDENTITY",
            NotQpReason::AbelianizationOneNotBand => "ABELIANIZATION_ONE_NOT_BAND",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QPVerdict {
    /// Carries a certificate that verifies against the input.
    Qp(QPCertificate),
    NotQp(NotQpReason),
    Unknown,
}

impl QPVerdict {
    pub fn kind(&self) -> &'static str {
        match self {
            QPVerdict::Qp(_) => "QP",
            QPVerdict::NotQp(_) => "NOT_QP",
            QPVerdict::Unknown => "UNKNOWN",
        }
    }
}

/// Applies the obstruction rules in order:
///
/// 1. the identity is QP with the empty certificate;
/// 2. negative exponent sum is not QP;
/// 3. exponent sum zero and not the identity is not QP;
/// 4. exponent sum one is QP iff conjugate to `σ1` (a single band);
/// 5. positive braids are QP, one band per letter of the normal form;
/// 6. otherwise unknown.
///
/// Exhausting the conjugacy budget in rule 4 gives `Unknown`.
pub fn obstruct(b: &BraidWord, budget: usize) -> QPVerdict {
    let n = b.strands();
    let nf = garside::normal_form(b);
    if nf.is_identity() {
        return QPVerdict::Qp(QPCertificate::empty(n));
    }
    let ab = b.exponent_sum();
    if ab < 0 {
        return QPVerdict::NotQp(NotQpReason::NegativeExponentSum);
    }
    if ab == 0 {
        return QPVerdict::NotQp(NotQpReason::ZeroExponentNonidentity);
    }
    if ab == 1 {
        let sigma1 = BraidWord::from_signed(n, &[1]).expect("n >= 2 when Ab = 1");
        return match conjugacy(&sigma1, b, budget) {
            Ok(Conjugacy::Conjugate { witness }) => QPVerdict::Qp(QPCertificate {
                strands: n,
                bands: vec![Band {
                    conjugator: witness,
                    gen: 1,
                }],
            }),
            Ok(Conjugacy::NotConjugate) => QPVerdict::NotQp(NotQpReason::AbelianizationOneNotBand),
            Err(_) => QPVerdict::Unknown,
        };
    }
    if nf.inf() >= 0 {
        let cert = QPCertificate::from_positive_word(&nf.to_word())
            .expect("normal form with inf >= 0 is a positive word");
        return QPVerdict::Qp(cert);
    }
    QPVerdict::Unknown
}

/// For periodic `b`, a certificate for the periodic `d`-th root found by
/// [`garside::periodic_root`] when that root is a nonnegative power of
/// `δ` or `γ`.
pub fn qp_root_periodic(b: &BraidWord, d: i64, budget: usize) -> Result<Option<QPCertificate>> {
    let Some(root) = garside::periodic_root(b, d, budget)? else {
        return Ok(None);
    };
    if root.power < 0 {
        return Ok(None);
    }
    Ok(QPCertificate::from_positive_word(&root.word(b.strands())))
}
