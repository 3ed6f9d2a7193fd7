use std::collections::BTreeMap;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use stackycovers_core::oracle::VerifyReport;
use stackycovers_core::simple_cyclic::{
    self as sc, CharAssumption, CoarsePicProof, CyclicPresentation, GnrRecord, SimpleCyclicParams,
    TautologicalFamily, TorsorMorphism,
};
use stackycovers_core::strata::{CodimReportP1, CodimReportP2};
use stackycovers_core::triple_cover::{
    self as tc, InjectivityRecord, TripleCoverParams, TripleFamily, TripleHomWitness, TripleStructureFlags,
};
use stackycovers_core::{Result, Verdict};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputRecord {
    pub format_version: u32,
    pub command: String,
    pub input: BTreeMap<String, String>,
    pub result: RecordBody,
}

impl OutputRecord {
    pub fn new(command: &str, input: Vec<(&str, String)>, result: RecordBody) -> Self {
        Self {
            format_version: FORMAT_VERSION,
            command: command.to_string(),
            input: input.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            result,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum RecordBody {
    Simple(Box<SimpleReport>),
    Triple(Box<TripleReport>),
    Pic(PicReport),
    StrataP1(CodimReportP1),
    StrataP2(CodimReportP2),
    Verify(VerifyReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleReport {
    pub params: SimpleCyclicParams,
    pub g: u64,
    pub g_d: u64,
    pub family: TautologicalFamily,
    /// `GL/μ_rd → GL/μ_d`
    pub torsor: TorsorMorphism,
    pub least_linearized_degree: u64,
    pub rationality: Verdict,
    pub pic_stack: CyclicPresentation,
    pub pic_rigidified: CyclicPresentation,
    #[serde(with = "stackycovers_core::serde_dec")]
    pub pic_index: BigInt,
    pub coarse_pic: CoarsePicProof,
    pub char_assumption: CharAssumption,
    pub no_section: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gnr: Option<GnrRecord>,
}

impl SimpleReport {
    pub fn build(p: &SimpleCyclicParams, ch: CharAssumption) -> Result<Self> {
        Ok(Self {
            params: *p,
            g: p.g(),
            g_d: p.g_d(),
            family: sc::tautological_family_exists(p),
            torsor: sc::torsor_hom_exists(p.rd(), p.d(), p.n())?,
            least_linearized_degree: sc::least_linearized_degree(p),
            rationality: sc::rationality_simple(p)?,
            pic_stack: sc::pic_stack(p)?,
            pic_rigidified: sc::pic_rigidified(p)?,
            pic_index: sc::pic_index(p, p.r())?,
            coarse_pic: sc::verify_coarse_pic_trivial(p)?,
            char_assumption: ch,
            no_section: sc::no_section_over_m0(p, ch, false),
            gnr: sc::gnr_classification(p).ok(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TripleReport {
    pub params: TripleCoverParams,
    /// `l₁, l₂ ≥ 4`
    pub standing_assumption: bool,
    pub family: TripleFamily,
    pub witness: TripleHomWitness,
    pub injectivity: InjectivityRecord,
    pub matches_reference: bool,
    pub flags: TripleStructureFlags,
    pub no_section: Verdict,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl TripleReport {
    pub fn build(p: &TripleCoverParams) -> Result<Self> {
        let injectivity = tc::pic_injectivity_index(p)?;
        let mut notes = Vec::new();
        if !p.meets_standing_assumption() {
            notes.push(format!(
                "branch degrees l1 = {}, l2 = {} are below 4; the codimension bound behind the no-section verdict is stated for l1, l2 ≥ 4",
                p.l1(),
                p.l2()
            ));
        }
        if let Some(r) = injectivity.reference_determinant.filter(|_| !injectivity.matches_reference()) {
            notes.push(format!(
                "computed index {} differs from the quoted determinant {r} of the image matrix",
                injectivity.index
            ));
        }
        Ok(Self {
            params: *p,
            standing_assumption: p.meets_standing_assumption(),
            family: tc::tautological_family_triple(p)?,
            witness: tc::triple_hom_witness(p)?,
            matches_reference: injectivity.matches_reference(),
            injectivity,
            flags: tc::triple_structure_flags(p),
            no_section: tc::no_section_over_m0_triple(p)?,
            notes,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicQuotient {
    pub k: u64,
    pub presentation: CyclicPresentation,
    #[serde(with = "stackycovers_core::serde_dec")]
    pub index: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PicReport {
    pub params: SimpleCyclicParams,
    pub stack: CyclicPresentation,
    pub rigidified: CyclicPresentation,
    /// One entry per divisor `k` of `r`.
    pub quotients: Vec<PicQuotient>,
}

impl PicReport {
    pub fn build(p: &SimpleCyclicParams) -> Result<Self> {
        let quotients = (1..=p.r())
            .filter(|k| p.r() % k == 0)
            .map(|k| {
                Ok(PicQuotient {
                    k,
                    presentation: sc::pic_quotient(p, k)?,
                    index: sc::pic_index(p, k)?,
                })
            })
            .collect::<Result<_>>()?;
        Ok(Self {
            params: *p,
            stack: sc::pic_stack(p)?,
            rigidified: sc::pic_rigidified(p)?,
            quotients,
        })
    }
}
