// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 secreq contributors

#pragma once

#include <cstdint>
#include <vector>

#include "secreq/vectorize.hpp"

namespace secreq::balance {

enum class RowOrigin { Real, Synthetic };

struct LabeledRow {
    vectorize::SparseVector vec;
    int label = 0;
    RowOrigin origin = RowOrigin::Real;
};

/// Rows of (vector, label, origin) sharing one feature dimensionality.
struct LabeledMatrix {
    std::vector<LabeledRow> rows;
    std::uint32_t dims = 0;

    std::size_t count_label(int label) const;
};

/// SMOTE oversampling of the minority class up to exact 1:1 balance.
///
/// Every synthetic row is x + g * (x_nn - x) for a minority row x, one of
/// its k nearest minority neighbors x_nn (Euclidean distance on dense
/// projections, ties by lower row index) and g uniform in [0,1). Base
/// points cycle round-robin through the minority rows in input order; the
/// neighbor among the k is drawn uniformly. Effective k is
/// min(k, minority-1); a lone minority row is duplicated. Real rows are
/// never removed or mutated; synthetics always carry the minority label.
/// Deterministic for a fixed (train, k, seed).
///
/// Throws DataError when the input lacks minority or majority rows.
LabeledMatrix smote(const LabeledMatrix& train, std::size_t k, std::uint64_t seed);

} // namespace secreq::balance
