//! Serializable records for every artifact the library emits. All records
//! carry a `schema_version`; field elements appear as their canonical
//! integers, weight counts as decimal strings so arbitrary magnitudes
//! survive JSON.

use serde::{Deserialize, Serialize};

use crate::code::{LinearCode, WeightDistribution};
use crate::construct::{FeasibilityVerdict, IntersectionPair, PairRequest, Route};
use crate::field::Field;
use crate::matrix::Matrix;
use crate::quantum::AeaqeccParams;
use crate::{Error, Result};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldExport {
    pub p: u64,
    pub m: u32,
    /// Modulus over GF(p), constant term first.
    pub modulus: Vec<u32>,
}

impl FieldExport {
    pub fn from_field(f: &Field) -> FieldExport {
        FieldExport {
            p: f.p() as u64,
            m: f.m(),
            modulus: f.modulus_coeffs().to_vec(),
        }
    }

    pub fn to_field(&self) -> Result<Field> {
        Field::from_parts(self.p, self.m, &self.modulus)
    }
}

fn matrix_rows(m: &Matrix) -> Vec<Vec<u64>> {
    (0..m.rows())
        .map(|r| m.row(r).iter().map(|e| e.value() as u64).collect())
        .collect()
}

fn matrix_from_rows(field: &Field, rows: &[Vec<u64>], cols: usize) -> Result<Matrix> {
    let mut out = Vec::with_capacity(rows.len());
    for row in rows {
        if row.len() != cols {
            return Err(Error::DimensionMismatch("ragged matrix rows".into()));
        }
        out.push(
            row.iter()
                .map(|&v| field.element(v))
                .collect::<Result<Vec<_>>>()?,
        );
    }
    Ok(if out.is_empty() {
        Matrix::empty(field, cols)
    } else {
        Matrix::from_rows(field, out)
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeExport {
    pub schema_version: u32,
    pub field: FieldExport,
    pub n: usize,
    pub k: usize,
    pub generator: Vec<Vec<u64>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub parity: Option<Vec<Vec<u64>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub d: Option<usize>,
    pub provenance: String,
}

impl CodeExport {
    pub fn from_code(code: &LinearCode, provenance: &str) -> CodeExport {
        CodeExport {
            schema_version: SCHEMA_VERSION,
            field: FieldExport::from_field(code.field()),
            n: code.n(),
            k: code.k(),
            generator: matrix_rows(code.generator()),
            parity: Some(matrix_rows(code.parity())),
            d: code.d(),
            provenance: provenance.to_string(),
        }
    }

    /// Rebuilds the code, re-deriving the parity matrix and re-checking the
    /// generator rank; the exported parity rows, when present, must
    /// annihilate the generator.
    pub fn to_code(&self) -> Result<LinearCode> {
        let field = self.field.to_field()?;
        let gen = matrix_from_rows(&field, &self.generator, self.n)?;
        let mut code = LinearCode::from_generator(gen)?;
        if code.k() != self.k {
            return Err(Error::DimensionMismatch(
                "exported dimension differs from the generator rank".into(),
            ));
        }
        if let Some(parity) = &self.parity {
            let h = matrix_from_rows(&field, parity, self.n)?;
            if h.rows() + self.k != self.n || !code.generator().mul(&h.transpose()).is_zero() {
                return Err(Error::InvalidInput(
                    "exported parity rows do not check the generator".into(),
                ));
            }
        }
        if let Some(d) = self.d {
            code.set_distance(d);
        }
        Ok(code)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RequestExport {
    pub q: u64,
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub l: usize,
}

impl RequestExport {
    pub fn from_request(r: &PairRequest) -> RequestExport {
        RequestExport {
            q: r.q,
            n: r.n,
            k1: r.k1,
            k2: r.k2,
            l: r.l,
        }
    }

    pub fn to_request(&self) -> Result<PairRequest> {
        PairRequest::new(self.q, self.n, self.k1, self.k2, self.l)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationExport {
    /// k1 - rank(G1 H2^T)
    pub dim_by_parity_rank: usize,
    /// k1 + k2 - rank([G1; G2])
    pub dim_by_stacked_rank: usize,
    pub c1_mds: bool,
    pub c2_mds: bool,
    pub intersection_basis_rank: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairExport {
    pub schema_version: u32,
    pub request: RequestExport,
    pub route: String,
    pub l_claimed: usize,
    pub l_verified: usize,
    pub c1: CodeExport,
    pub c2: CodeExport,
    pub intersection_basis: Vec<Vec<u64>>,
    pub verification: VerificationExport,
}

impl PairExport {
    pub fn from_pair(req: &PairRequest, pair: &IntersectionPair) -> PairExport {
        PairExport {
            schema_version: SCHEMA_VERSION,
            request: RequestExport::from_request(req),
            route: pair.route.tag().to_string(),
            l_claimed: pair.l_claimed,
            l_verified: pair.l_verified,
            c1: CodeExport::from_code(&pair.c1, pair.route.tag()),
            c2: CodeExport::from_code(&pair.c2, pair.route.tag()),
            intersection_basis: matrix_rows(&pair.intersection_basis),
            verification: VerificationExport {
                dim_by_parity_rank: pair.dim_by_parity_rank,
                dim_by_stacked_rank: pair.dim_by_stacked_rank,
                c1_mds: true,
                c2_mds: true,
                intersection_basis_rank: pair.intersection_basis.rank(),
            },
        }
    }

    pub fn route(&self) -> Option<Route> {
        Route::from_tag(&self.route)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityExport {
    pub schema_version: u32,
    pub request: RequestExport,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

impl FeasibilityExport {
    pub fn new(req: &PairRequest, verdict: &FeasibilityVerdict) -> FeasibilityExport {
        let (status, route, reason) = match verdict {
            FeasibilityVerdict::Feasible(r) => ("feasible", Some(r.tag().to_string()), None),
            FeasibilityVerdict::InfeasibleProven(why) => {
                ("infeasible_proven", None, Some(why.clone()))
            }
            FeasibilityVerdict::OutOfScope(why) => ("out_of_scope", None, Some(why.clone())),
        };
        FeasibilityExport {
            schema_version: SCHEMA_VERSION,
            request: RequestExport::from_request(req),
            status: status.to_string(),
            route,
            reason,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AeaqeccExport {
    pub schema_version: u32,
    pub request: RequestExport,
    pub n: usize,
    pub k: usize,
    pub dz: usize,
    pub dx: usize,
    pub c: usize,
    pub pure: bool,
    pub mds: bool,
    /// Closed-form values the computed parameters were checked against.
    pub claimed: ClaimedParamsExport,
    pub pair: PairExport,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimedParamsExport {
    pub k: usize,
    pub dz: usize,
    pub dx: usize,
    pub c: usize,
}

impl AeaqeccExport {
    pub fn new(
        req: &PairRequest,
        pair: &IntersectionPair,
        params: &AeaqeccParams,
    ) -> AeaqeccExport {
        AeaqeccExport {
            schema_version: SCHEMA_VERSION,
            request: RequestExport::from_request(req),
            n: params.n,
            k: params.k,
            dz: params.dz,
            dx: params.dx,
            c: params.c,
            pure: params.pure,
            mds: params.mds,
            claimed: ClaimedParamsExport {
                k: req.k2 - req.l,
                dz: req.k1 + 1,
                dx: req.n - req.k2 + 1,
                c: req.k1 - req.l,
            },
            pair: PairExport::from_pair(req, pair),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistExport {
    pub schema_version: u32,
    pub q: u64,
    pub n: usize,
    pub k: usize,
    /// Decimal strings, index i = number of codewords of weight i.
    pub distribution: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub census_matches: Option<bool>,
}

impl WeightDistExport {
    pub fn new(q: u64, n: usize, k: usize, dist: &WeightDistribution) -> WeightDistExport {
        WeightDistExport {
            schema_version: SCHEMA_VERSION,
            q,
            n,
            k,
            distribution: dist.counts.iter().map(|c| c.to_string()).collect(),
            census: None,
            census_matches: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepLineExport {
    pub n: usize,
    pub k1: usize,
    pub k2: usize,
    pub l: usize,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub route: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l_verified: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepExport {
    pub schema_version: u32,
    pub q: u64,
    pub max_dim: usize,
    pub feasible: usize,
    pub verified: usize,
    pub infeasible_proven: usize,
    pub out_of_scope: usize,
    pub failures: usize,
    pub lines: Vec<SweepLineExport>,
}
