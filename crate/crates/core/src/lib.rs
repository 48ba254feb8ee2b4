//! MiniCrush: bit-exact PRNG implementations (MT19937, PCG32, Philox4x32-10)
//! plus a desk-scale statistical test battery, multi-stream campaign runner,
//! failure-profile analysis, and known-answer-test tooling.

pub mod analysis;
pub mod battery;
pub mod generators;
pub mod harness;
pub mod kat;
pub mod special;

pub use battery::{
    classify, run_battery, run_test, BatteryConfig, BatteryError, BitSlice, Classification,
    ClassificationPolicy, TestFamily, TestId, TestResult, TestSpec,
};
pub use generators::{
    philox_block, stream_from_seed, to_unit_interval, GeneratorKind, GeneratorState, Mt19937State,
    Pcg32State, PhiloxState, SplitMix64, StateCodecError, WordSource,
};
pub use harness::{
    derive_seeds, load_reports, run_campaign, save_reports, BatteryReport, CampaignError,
    HarnessConfig, ReportError,
};
pub use special::{
    berlekamp_massey, chi_square_sf, normal_cdf, poisson_tail, ComplexityScan, PValue,
    SpecialFnError,
};
