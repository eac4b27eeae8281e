//! Configuration, trajectory tables, the randomized property suite and output writers.

mod config;
mod emit;
mod experiment;
mod suite;

pub use config::{
    BoundVariant, ExperimentConfig, ModelConfig, ModelKind, OutputFormat, Overrides, SpinStarConfig, OUTPUT_DIR_ENV,
};
pub use emit::{csv_header, emit, from_json_str, to_csv_string, to_json_string, write_csv};
pub use experiment::{
    figure_bound, figure_rows, run_experiment, trajectory_tables, FigureEntry, FigureMetadata, FigureRow,
    FigureSummary, FigureTable, ResolvedModel,
};
pub use suite::{run_property_suite, InequalityStats, SuiteReport, MU_GRID};
