//! Reducible braids in regular form: tubular braids, cabling and
//! interior braids.
//!
//! A tubular braid on `m` tubes is cabled by replacing each tube with a
//! block of parallel strands. Widths are indexed by the tube's starting
//! position and must be constant along each orbit of the tubular
//! permutation. A regular form carries one interior braid per orbit,
//! placed at the end of the word on the block at the orbit's first
//! position `a_{i,1}`.
//!
//! Regular forms are trusted input: nothing here detects reducibility or
//! computes reduction systems.

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::qp::{Band, QPCertificate};

/// Orbits of the tubular permutation. Each orbit starts at its smallest
/// position `a_{i,1}` and continues with `a_{i,j+1} = π(a_{i,j})`.
pub fn orbit_structure(tubular: &BraidWord) -> Vec<Vec<usize>> {
    tubular.permutation().cycles()
}

/// The cable of one positive crossing of a `p`-block over a `q`-block:
/// `∏_{r=p..1} (σ_r σ_{r+1} ⋯ σ_{r+q-1})` in `B_{p+q}`, or its inverse
/// for `sign < 0`.
pub fn block_transposition(p: usize, q: usize, sign: i32) -> Result<BraidWord> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidWidths { p, q });
    }
    let mut letters = Vec::with_capacity(p * q);
    for r in (1..=p).rev() {
        letters.extend((r..r + q).map(|j| j as i32));
    }
    let w = BraidWord::from_signed(p + q, &letters)?;
    Ok(if sign < 0 { w.inverse() } else { w })
}

fn check_widths(widths: &[usize], strands: usize) -> Result<()> {
    if widths.len() != strands {
        return Err(Error::InconsistentRegularForm(format!(
            "{} widths for {strands} tubes",
            widths.len()
        )));
    }
    if widths.contains(&0) {
        return Err(Error::InconsistentRegularForm("zero width".into()));
    }
    Ok(())
}

fn check_orbit_widths(tubular: &BraidWord, widths: &[usize]) -> Result<()> {
    check_widths(widths, tubular.strands())?;
    let perm = tubular.permutation();
    for j in 0..widths.len() {
        if widths[perm.apply(j)] != widths[j] {
            return Err(Error::InconsistentRegularForm(format!(
                "width changes along the orbit of tube {j}"
            )));
        }
    }
    Ok(())
}

fn block_offsets(widths: &[usize]) -> Vec<usize> {
    widths
        .iter()
        .scan(0, |acc, &w| {
            let start = *acc;
            *acc += w;
            Some(start)
        })
        .collect()
}

/// Cables `word` starting from the given per-position widths. Returns the
/// cabled word and the widths at the end.
pub fn cable_word(word: &BraidWord, widths: &[usize]) -> Result<(BraidWord, Vec<usize>)> {
    check_widths(widths, word.strands())?;
    let n: usize = widths.iter().sum();
    let mut cur = widths.to_vec();
    let mut out = BraidWord::identity(n);
    for l in word.letters() {
        let r = l.index() - 1;
        let (p, q) = (cur[r], cur[r + 1]);
        let offset: usize = cur[..r].iter().sum();
        let t = if l.is_positive() {
            block_transposition(p, q, 1)?
        } else {
            block_transposition(q, p, -1)?
        };
        out.extend(&t.embed(offset, n)?);
        cur.swap(r, r + 1);
    }
    Ok((out, cur))
}

/// A reducible braid given by its tubular braid, the tube widths and one
/// interior braid per orbit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RegularForm {
    tubular: BraidWord,
    widths: Vec<usize>,
    interiors: Vec<BraidWord>,
}

impl RegularForm {
    /// `interiors` is indexed like [`orbit_structure`]; missing entries
    /// are trivial.
    pub fn new(tubular: BraidWord, widths: Vec<usize>, interiors: Vec<BraidWord>) -> Result<Self> {
        check_orbit_widths(&tubular, &widths)?;
        let orbits = orbit_structure(&tubular);
        if interiors.len() > orbits.len() {
            return Err(Error::InconsistentRegularForm(format!(
                "{} interiors for {} orbits",
                interiors.len(),
                orbits.len()
            )));
        }
        let mut full = Vec::with_capacity(orbits.len());
        for (i, orbit) in orbits.iter().enumerate() {
            let w = widths[orbit[0]];
            match interiors.get(i) {
                Some(b) if b.strands() != w => {
                    return Err(Error::InconsistentRegularForm(format!(
                        "interior of orbit {i} has {} strands, tube width is {w}",
                        b.strands()
                    )))
                }
                Some(b) => full.push(b.clone()),
                None => full.push(BraidWord::identity(w)),
            }
        }
        Ok(RegularForm {
            tubular,
            widths,
            interiors: full,
        })
    }

    pub fn tubular(&self) -> &BraidWord {
        &self.tubular
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn interiors(&self) -> &[BraidWord] {
        &self.interiors
    }

    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbit_structure(&self.tubular)
    }

    pub fn strands(&self) -> usize {
        self.widths.iter().sum()
    }
}

#[derive(Serialize, Deserialize)]
struct RawInterior {
    orbit: usize,
    word: String,
}

#[derive(Serialize, Deserialize)]
struct RawRegularForm {
    tubular: String,
    widths: Vec<usize>,
    #[serde(default)]
    interiors: Vec<RawInterior>,
}

impl Serialize for RegularForm {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawRegularForm {
            tubular: self.tubular.to_string(),
            widths: self.widths.clone(),
            interiors: self
                .interiors
                .iter()
                .enumerate()
                .filter(|(_, w)| !w.is_empty())
                .map(|(orbit, w)| RawInterior {
                    orbit,
                    word: w.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RegularForm {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RawRegularForm::deserialize(d)?;
        let build = || -> Result<RegularForm> {
            let m = raw.widths.len();
            let tubular = BraidWord::parse(&raw.tubular, m.max(1))?;
            check_orbit_widths(&tubular, &raw.widths)?;
            let orbits = orbit_structure(&tubular);
            let mut interiors: Vec<BraidWord> = orbits
                .iter()
                .map(|o| BraidWord::identity(raw.widths[o[0]]))
                .collect();
            for it in &raw.interiors {
                let Some(orbit) = orbits.get(it.orbit) else {
                    return Err(Error::InconsistentRegularForm(format!(
                        "no orbit {}",
                        it.orbit
                    )));
                };
                interiors[it.orbit] = BraidWord::parse(&it.word, raw.widths[orbit[0]])?;
            }
            RegularForm::new(tubular, raw.widths.clone(), interiors)
        };
        build().map_err(D::Error::custom)
    }
}

/// The composite braid: the cabled tubular word followed by each
/// interior on the block at position `a_{i,1}`.
pub fn assemble(rf: &RegularForm) -> Result<BraidWord> {
    let (mut out, end_widths) = cable_word(&rf.tubular, &rf.widths)?;
    let n = out.strands();
    let offsets = block_offsets(&end_widths);
    for (orbit, b) in rf.orbits().iter().zip(&rf.interiors) {
        out.extend(&b.embed(offsets[orbit[0]], n)?);
    }
    Ok(out)
}

/// Interior braids for every tube position before normalization: `b_j` is
/// the braiding inside the tube that starts at position `j`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TubePositionAssignment {
    pub tubular: String,
    pub widths: Vec<usize>,
    /// `(start position, word)` pairs; unlisted tubes are trivial.
    pub tubes: Vec<TubeInterior>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TubeInterior {
    pub tube: usize,
    pub word: String,
}

/// A tubular braid with an interior braid in every tube.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralForm {
    tubular: BraidWord,
    widths: Vec<usize>,
    tubes: Vec<BraidWord>,
}

impl GeneralForm {
    pub fn new(tubular: BraidWord, widths: Vec<usize>, tubes: Vec<BraidWord>) -> Result<Self> {
        check_orbit_widths(&tubular, &widths)?;
        if tubes.len() != widths.len() {
            return Err(Error::InconsistentRegularForm(format!(
                "{} tube interiors for {} tubes",
                tubes.len(),
                widths.len()
            )));
        }
        for (j, (b, &w)) in tubes.iter().zip(&widths).enumerate() {
            if b.strands() != w {
                return Err(Error::InconsistentRegularForm(format!(
                    "interior of tube {j} has {} strands, width is {w}",
                    b.strands()
                )));
            }
        }
        Ok(GeneralForm {
            tubular,
            widths,
            tubes,
        })
    }

    pub fn from_assignment(a: &TubePositionAssignment) -> Result<Self> {
        let m = a.widths.len();
        let tubular = BraidWord::parse(&a.tubular, m.max(1))?;
        check_widths(&a.widths, tubular.strands())?;
        let mut tubes: Vec<BraidWord> = a.widths.iter().map(|&w| BraidWord::identity(w)).collect();
        for t in &a.tubes {
            if t.tube >= m {
                return Err(Error::InconsistentRegularForm(format!(
                    "no tube {}",
                    t.tube
                )));
            }
            tubes[t.tube] = BraidWord::parse(&t.word, a.widths[t.tube])?;
        }
        Self::new(tubular, a.widths.clone(), tubes)
    }

    pub fn tubular(&self) -> &BraidWord {
        &self.tubular
    }

    pub fn widths(&self) -> &[usize] {
        &self.widths
    }

    pub fn tubes(&self) -> &[BraidWord] {
        &self.tubes
    }
}

/// The composite braid of a general form: the cabled tubular word, then
/// `b_j` on the block at the final position `π(j)` of tube `j`.
pub fn assemble_general(g: &GeneralForm) -> Result<BraidWord> {
    let (mut out, end_widths) = cable_word(&g.tubular, &g.widths)?;
    let n = out.strands();
    let offsets = block_offsets(&end_widths);
    let perm = g.tubular.permutation();
    for (j, b) in g.tubes.iter().enumerate() {
        out.extend(&b.embed(offsets[perm.apply(j)], n)?);
    }
    Ok(out)
}

/// Moves all interior braids of each orbit into the tube ending at
/// `a_{i,1}`. The regular interior is `b_{a_1} b_{a_2} ⋯ b_{a_r}` and the
/// returned `u` satisfies `u · assemble_general(g) · u⁻¹ = assemble(rf)`.
pub fn normalize_interiors(g: &GeneralForm) -> Result<(RegularForm, BraidWord)> {
    let orbits = orbit_structure(&g.tubular);
    let (cabled, end_widths) = cable_word(&g.tubular, &g.widths)?;
    let n = cabled.strands();
    let offsets = block_offsets(&end_widths);
    let mut interiors = Vec::with_capacity(orbits.len());
    let mut u = BraidWord::identity(n);
    for orbit in &orbits {
        let w = g.widths[orbit[0]];
        let mut prefix = BraidWord::identity(w);
        for (j, &a) in orbit.iter().enumerate() {
            if j > 0 && !prefix.is_empty() {
                u.extend(&prefix.embed(offsets[a], n)?);
            }
            prefix.extend(&g.tubes[a]);
        }
        interiors.push(prefix);
    }
    let rf = RegularForm::new(g.tubular.clone(), g.widths.clone(), interiors)?;
    Ok((rf, u))
}

/// Converts a regular form into the general form with the same braid.
pub fn regular_to_general(rf: &RegularForm) -> GeneralForm {
    let perm = rf.tubular.permutation();
    let inv = perm.inverse();
    let mut tubes: Vec<BraidWord> = rf.widths.iter().map(|&w| BraidWord::identity(w)).collect();
    for (orbit, b) in rf.orbits().iter().zip(&rf.interiors) {
        tubes[inv.apply(orbit[0])] = b.clone();
    }
    GeneralForm {
        tubular: rf.tubular.clone(),
        widths: rf.widths.clone(),
        tubes,
    }
}

/// Permutation of the composite braid computed directly from the tubular
/// permutation and the interior permutations.
pub fn cabled_permutation(rf: &RegularForm) -> Permutation {
    let perm = rf.tubular.permutation();
    let m = rf.widths.len();
    let start = block_offsets(&rf.widths);
    let mut end_widths = vec![0; m];
    for j in 0..m {
        end_widths[perm.apply(j)] = rf.widths[j];
    }
    let end = block_offsets(&end_widths);
    let mut interior_at: Vec<Option<Permutation>> = vec![None; m];
    for (orbit, b) in rf.orbits().iter().zip(&rf.interiors) {
        interior_at[orbit[0]] = Some(b.permutation());
    }
    let n = rf.strands();
    let mut images = vec![0; n];
    for j in 0..m {
        let target = perm.apply(j);
        for t in 0..rf.widths[j] {
            let inner = interior_at[target].as_ref().map_or(t, |p| p.apply(t));
            images[start[j] + t] = end[target] + inner;
        }
    }
    Permutation::from_images(images).expect("blocks partition the strands")
}

/// A certificate for `assemble(rf)` built from certificates of the
/// tubular braid and of the interiors.
///
/// A tubular band `w σ_j w⁻¹` whose crossing exchanges two blocks of equal
/// width `p` cables to the `p²` bands `W σ_a W⁻¹`, where `W` is the cable
/// of `w` and `σ_a` runs over the letters of the block transposition.
/// Interior bands are embedded on the block at `a_{i,1}` and follow the
/// tubular bands. A band exchanging blocks of different widths has a
/// cable that is not a product of bands, and is rejected.
pub fn cable_certificate(
    tubular_cert: &QPCertificate,
    interior_certs: &[Option<QPCertificate>],
    widths: &[usize],
) -> Result<QPCertificate> {
    let tubular = crate::qp::expand(tubular_cert);
    check_orbit_widths(&tubular, widths)?;
    let n: usize = widths.iter().sum();
    let mut bands = Vec::new();
    for (index, band) in tubular_cert.bands().iter().enumerate() {
        let (conj, cur) = cable_word(band.conjugator(), widths)?;
        let r = band.gen() - 1;
        let (p, q) = (cur[r], cur[r + 1]);
        if p != q {
            return Err(Error::UnequalBandWidths { band: index, p, q });
        }
        let offset: usize = cur[..r].iter().sum();
        for l in block_transposition(p, q, 1)?.letters() {
            bands.push(Band::new(conj.clone(), l.index() + offset)?);
        }
    }
    let (_, end_widths) = cable_word(&tubular, widths)?;
    let offsets = block_offsets(&end_widths);
    let orbits = orbit_structure(&tubular);
    if interior_certs.len() > orbits.len() {
        return Err(Error::InconsistentRegularForm(format!(
            "{} interior certificates for {} orbits",
            interior_certs.len(),
            orbits.len()
        )));
    }
    for (i, cert) in interior_certs.iter().enumerate() {
        let Some(cert) = cert else { continue };
        let w = widths[orbits[i][0]];
        if cert.strands() != w {
            return Err(Error::InconsistentRegularForm(format!(
                "interior certificate of orbit {i} has {} strands, tube width is {w}",
                cert.strands()
            )));
        }
        let offset = offsets[orbits[i][0]];
        for b in cert.bands() {
            bands.push(Band::new(
                b.conjugator().embed(offset, n)?,
                b.gen() + offset,
            )?);
        }
    }
    QPCertificate::new(n, bands)
}

/// Exponent sum of `assemble(rf)` from the data alone: each tubular letter
/// contributes `± p·q` for the widths it crosses.
pub fn assembled_exponent_sum(rf: &RegularForm) -> i64 {
    let mut cur = rf.widths.clone();
    let mut total: i64 = rf.interiors.iter().map(BraidWord::exponent_sum).sum();
    for l in rf.tubular.letters() {
        let r = l.index() - 1;
        total += l.sign() as i64 * (cur[r] * cur[r + 1]) as i64;
        cur.swap(r, r + 1);
    }
    total
}
