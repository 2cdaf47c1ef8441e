// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 secreq contributors

#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "secreq/textproc.hpp"

namespace secreq::vectorize {

/// paper-exact: idf = ln(N / df), tf = count / stream length, no smoothing,
/// no normalization. smoothed: idf = ln((1+N) / (1+df)) + 1, the variant
/// common vectorizer tooling applies.
enum class TfidfMode { PaperExact, Smoothed };

const char* to_string(TfidfMode m);
TfidfMode tfidf_mode_from_string(const std::string& s);

/// Sparse TF-IDF vector: (feature index, weight) entries with strictly
/// increasing indices and no stored zeros.
struct SparseVector {
    std::vector<std::pair<std::uint32_t, double>> entries;

    bool operator==(const SparseVector&) const = default;

    double at(std::uint32_t index) const; // 0.0 when absent
    double l2_norm() const;
};

/// Vocabulary plus per-term IDF weights, fitted on training streams only.
/// Term indices are dense, 0-based, lexicographic by term.
struct FeatureSpace {
    std::vector<std::string> terms;             // index -> term
    std::vector<double> idf;                    // index -> idf weight
    std::unordered_map<std::string, std::uint32_t> vocabulary; // term -> index
    std::uint32_t n_train_docs = 0;
    TfidfMode mode = TfidfMode::PaperExact;

    std::size_t size() const { return terms.size(); }
};

/// Builds the vocabulary and IDF table from training token streams.
/// Document frequency counts presence per requirement, not multiplicity.
/// Throws DataError when every stream is empty (no features).
FeatureSpace fit_features(const std::vector<textproc::TokenStream>& train, TfidfMode mode);

/// Maps one token stream to a sparse TF-IDF vector. Out-of-vocabulary
/// terms are ignored for features but still count toward the TF
/// denominator. Zero weights are dropped. Optional L2 normalization
/// (skipped for the zero vector).
SparseVector transform(const textproc::TokenStream& stream, const FeatureSpace& space,
                       bool l2_normalize);

/// Index-ordered term list; inverse of the vocabulary map.
std::vector<std::string> feature_names(const FeatureSpace& space);

} // namespace secreq::vectorize
