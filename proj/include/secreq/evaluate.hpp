// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 secreq contributors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secreq/corpus.hpp"
#include "secreq/forest.hpp"

namespace secreq::evaluate {

struct Confusion {
    std::int64_t tp = 0;
    std::int64_t fp = 0;
    std::int64_t fn = 0;
    std::int64_t tn = 0;

    std::int64_t total() const { return tp + fp + fn + tn; }
    bool operator==(const Confusion&) const = default;
};

/// Metric tuple in percentages. Zero-denominator precision/recall are
/// reported as 0 with the degenerate flag set instead of throwing.
struct MetricRow {
    double accuracy = 0;
    double precision = 0;
    double recall = 0;
    double f1 = 0;
    double f05 = 0;
    double f2 = 0;
    bool degenerate = false;
};

/// accuracy, P, R and the three F-scores from a confusion matrix.
MetricRow metrics(const Confusion& c);

/// F-beta on precision/recall given in any common scale:
/// (1 + b^2) P R / (b^2 P + R), 0 when the denominator vanishes.
double fbeta(double precision, double recall, double beta);

/// Per-fold bookkeeping for leak checks: which specs trained/tested, how
/// many rows entered SMOTE and how many synthetics it added, and the
/// fitted vocabulary.
struct FoldDebug {
    std::vector<std::string> train_specs;
    std::vector<std::string> test_specs;
    std::size_t n_train_rows = 0;
    std::size_t n_test_rows = 0;
    std::size_t n_smote_input_rows = 0;
    std::size_t n_synthetic_rows = 0;
    std::vector<std::string> vocabulary;
};

struct FoldResult {
    std::string fold_id;
    Confusion confusion;
    MetricRow row;
    FoldDebug debug;
};

struct EvalReport {
    std::vector<FoldResult> per_fold;
    MetricRow averages; // unweighted arithmetic means of the per-fold rows
};

/// Everything the training pipeline needs besides the data: preprocessing
/// switches, TF-IDF mode, SMOTE settings and forest hyper-parameters.
struct PipelineConfig {
    bool extend_stopwords = false;
    vectorize::TfidfMode tfidf_mode = vectorize::TfidfMode::PaperExact;
    bool l2_normalize = false;
    bool use_smote = true;
    std::size_t smote_k = 5;
    bool stratify_holdout = false;
    forest::HyperParams params;
};

/// Seeded unstratified 80/20 row split; features, SMOTE and the forest are
/// fitted on the training side only and the untouched test rows are
/// scored. Throws DataError when the training split ends up single-class
/// (advising a different seed) or the corpus is not fully labeled.
EvalReport run_holdout(const corpus::Corpus& corpus, const PipelineConfig& config,
                       std::uint64_t seed);

/// Leave-one-specification-out cross-project validation: one fold per
/// spec, trained fresh on all other specs. The optional spec-type filter
/// restricts the corpus first. Averages are unweighted means over folds.
/// Throws DataError naming the fold whose training side lacks a class.
EvalReport run_cross_project(const corpus::Corpus& corpus, const PipelineConfig& config,
                             std::uint64_t seed,
                             std::optional<corpus::SpecType> spec_type_filter = std::nullopt);

/// Trains on the full labeled corpus (no held-out fold). Used by the train
/// command; returns the model plus the fold bookkeeping.
forest::ForestModel train_pipeline(const corpus::Corpus& corpus, const PipelineConfig& config,
                                   std::uint64_t seed, FoldDebug* debug = nullptr);

/// Predictions for arbitrary rows under an existing model, applying the
/// model's own preprocessing configuration.
struct RowPrediction {
    forest::Prediction prediction;
    bool low_signal = false; // empty vector after preprocessing
};
std::vector<RowPrediction> predict_rows(const forest::ForestModel& model,
                                        const std::vector<corpus::Requirement>& rows);

struct KappaResult {
    double value = 0;
    bool degenerate = false; // chance agreement was exactly 1
};

/// Cohen's kappa for two binary label lists of equal non-zero length.
KappaResult cohen_kappa(const std::vector<int>& labels_a, const std::vector<int>& labels_b);

/// Per-fold metric deltas (variant - base) for accuracy, precision and
/// recall, plus the averages row. Fold ids must match pairwise.
struct DeltaRow {
    std::string fold_id;
    double accuracy = 0;
    double precision = 0;
    double recall = 0;
};
struct DeltaTable {
    std::vector<DeltaRow> per_fold;
    DeltaRow averages;
};
DeltaTable compare_reports(const EvalReport& base, const EvalReport& variant);

/// Report serialization: full-precision JSON, the paper-style aligned text
/// table (one decimal), and CSV.
std::string report_to_json(const EvalReport& report);
std::string report_to_table(const EvalReport& report);
std::string report_to_csv(const EvalReport& report);
EvalReport report_from_json(const std::string& text);

std::string delta_to_json(const DeltaTable& table);
std::string delta_to_table(const DeltaTable& table);
std::string delta_to_csv(const DeltaTable& table);

} // namespace secreq::evaluate
