// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 secreq contributors

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "secreq/balance.hpp"
#include "secreq/forest.hpp"

namespace secreq::tune {

/// Candidate lists for the four tuned hyper-parameters.
struct SearchSpace {
    std::vector<int> n_estimators;
    std::vector<forest::MaxFeatures> max_features;
    std::vector<std::optional<int>> max_depth;
    std::vector<bool> bootstrap;

    std::size_t combinations() const;

    /// Spans the library defaults and the values random search typically
    /// settles on for this task (400 trees, sqrt features, unlimited
    /// depth, no bootstrap).
    static SearchSpace defaults();
};

enum class Objective { F1, F05, F2, Accuracy };

const char* to_string(Objective o);
Objective objective_from_string(const std::string& s);

struct Trial {
    forest::HyperParams params;
    double mean_score = 0;
    std::vector<double> fold_scores;
};

struct SearchResult {
    std::vector<Trial> trials;
    std::size_t best_index = 0;
    std::size_t total_fits = 0;     // one per (trial, inner fold) forest fit
    bool space_exhausted = false;   // fewer combinations than iterations

    const forest::HyperParams& best() const { return trials[best_index].params; }
};

struct SearchConfig {
    std::size_t iterations = 100;
    std::size_t inner_k = 3;
    std::uint64_t seed = 0;
    Objective objective = Objective::F1;
    bool use_smote = true;
    std::size_t smote_k = 5;
};

/// Random search over the space with inner k-fold cross-validation on the
/// given training rows only. Combinations are sampled uniformly without
/// replacement while the space allows; a space smaller than the iteration
/// budget is enumerated once and flagged exhausted. SMOTE runs inside each
/// inner training fold. Deterministic for a fixed seed; ties in the mean
/// score go to the earlier trial.
SearchResult random_search(const balance::LabeledMatrix& train, const SearchSpace& space,
                           const SearchConfig& config);

std::string search_space_to_json(const SearchSpace& space);
SearchSpace search_space_from_json(const std::string& text);

std::string search_result_to_json(const SearchResult& result);

std::string hyper_params_to_json(const forest::HyperParams& params);
forest::HyperParams hyper_params_from_json(const std::string& text);

} // namespace secreq::tune
