// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 secreq contributors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "secreq/balance.hpp"
#include "secreq/vectorize.hpp"

namespace secreq::forest {

/// Number of features examined per split: sqrt/log2 of the feature count
/// (both rounded up), all features, or an explicit count.
struct MaxFeatures {
    enum class Kind { Sqrt, Log2, All, Count };
    Kind kind = Kind::Sqrt;
    int count = 0; // used when kind == Count

    static MaxFeatures sqrt() { return {Kind::Sqrt, 0}; }
    static MaxFeatures log2() { return {Kind::Log2, 0}; }
    static MaxFeatures all() { return {Kind::All, 0}; }
    static MaxFeatures exactly(int n) { return {Kind::Count, n}; }

    std::size_t resolve(std::size_t n_features) const;
    bool operator==(const MaxFeatures&) const = default;
};

std::string to_string(const MaxFeatures& mf);
MaxFeatures max_features_from_string(const std::string& s);

struct HyperParams {
    int n_estimators = 100;
    MaxFeatures max_features = MaxFeatures::sqrt();
    std::optional<int> max_depth;    // nullopt = unlimited
    bool bootstrap = true;
    int min_samples_split = 2;
    std::uint64_t seed = 0;

    bool operator==(const HyperParams&) const = default;
};

/// Flat tree node. Internal nodes carry a split (feature, threshold) and
/// child slots; leaves carry the positive fraction and sample count.
/// feature == -1 marks a leaf. Routing goes left when value <= threshold.
struct TreeNode {
    std::int32_t feature = -1;
    double threshold = 0.0;
    std::int32_t left = -1;
    std::int32_t right = -1;
    double positive_fraction = 0.0;
    std::int32_t sample_count = 0;

    bool is_leaf() const { return feature < 0; }
    bool operator==(const TreeNode&) const = default;
};

/// One decision tree as a node pool; the root is node 0.
struct Tree {
    std::vector<TreeNode> nodes;

    bool operator==(const Tree&) const = default;

    /// Leaf positive fraction for a sparse input.
    double route(const vectorize::SparseVector& vec) const;
    int depth() const;
};

struct ForestModel {
    std::vector<Tree> trees;
    HyperParams params;
    vectorize::FeatureSpace space;
    std::vector<double> importances; // per feature, sums to 1 when any split exists
    bool extended_stopwords = false; // preprocessing flag, needed at predict time
};

/// Trains the ensemble. Tree t draws its RNG from derive_seed(seed, t), so
/// results are identical regardless of how many workers run the loop.
/// Splits maximize Gini impurity decrease over candidate thresholds at
/// midpoints of consecutive distinct values; ties break to the lower
/// feature index, then the lower threshold. Importances are the
/// sample-weighted impurity decreases summed per feature, averaged over
/// trees and normalized to sum 1.
///
/// Throws DataError for an empty or single-class training set.
ForestModel fit_forest(const balance::LabeledMatrix& train, const HyperParams& params);

/// Same computation as fit_forest with the tree loop forced serial.
/// Kept as the reference path for determinism tests and the benchmark.
ForestModel fit_forest_serial(const balance::LabeledMatrix& train, const HyperParams& params);

struct Prediction {
    int label = 0;    // 1 = security-related
    double score = 0; // fraction of trees voting positive
};

/// Majority vote across trees: a tree votes positive when its leaf
/// positive fraction exceeds 0.5, and the forest predicts positive when
/// the positive-vote fraction exceeds 0.5. Both ties resolve negative.
Prediction predict(const ForestModel& model, const vectorize::SparseVector& vec);

std::vector<Prediction> predict_batch(const ForestModel& model,
                                      const std::vector<vectorize::SparseVector>& vecs);
std::vector<Prediction> predict_batch_serial(const ForestModel& model,
                                             const std::vector<vectorize::SparseVector>& vecs);

/// Top-n features by importance (descending, ties lexicographic by term),
/// importances scaled to percentages. n beyond the vocabulary returns all.
std::vector<std::pair<std::string, double>> top_features(const ForestModel& model,
                                                         std::size_t n);

/// Canonical single-document JSON model file. Saving the same model twice
/// produces byte-identical files. load_model throws DataError on corrupt
/// input or a format_version mismatch.
void save_model(const ForestModel& model, const std::string& path);
ForestModel load_model(const std::string& path);

std::string model_to_json(const ForestModel& model);
ForestModel model_from_json(const std::string& text);

} // namespace secreq::forest
