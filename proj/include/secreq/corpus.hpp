// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 secreq contributors

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace secreq::corpus {

enum class SpecType { SRS, RFP, BL, OTHER };
enum class ProjectType { Student, Commercial, Research, Other };
enum class Prelabeled { Yes, Partially, No };

const char* to_string(SpecType t);
const char* to_string(ProjectType t);
const char* to_string(Prelabeled t);
SpecType spec_type_from_string(const std::string& s);
ProjectType project_type_from_string(const std::string& s);
Prelabeled prelabeled_from_string(const std::string& s);

/// One textual requirement. label: 1 = security-related (positive class),
/// 0 = other, nullopt = unlabeled.
struct Requirement {
    std::string spec_id;
    std::string req_id;
    std::string text;
    std::optional<int> label;

    bool operator==(const Requirement&) const = default;
};

/// Per-specification metadata, mirroring the sidecar CSV.
struct SpecMeta {
    std::string spec_id;
    SpecType spec_type = SpecType::OTHER;
    ProjectType project_type = ProjectType::Other;
    Prelabeled prelabeled = Prelabeled::No;

    bool operator==(const SpecMeta&) const = default;
};

/// Ordered requirements grouped by specification. Immutable by convention
/// after construction; all operations below are pure.
struct Corpus {
    std::vector<Requirement> requirements;
    std::vector<SpecMeta> specs;

    bool operator==(const Corpus&) const = default;

    std::size_t positive_count() const;
    std::size_t negative_count() const;
    std::size_t unlabeled_count() const;
    bool fully_labeled() const { return unlabeled_count() == 0; }

    const SpecMeta* find_spec(const std::string& spec_id) const;
    /// Indices of requirements belonging to one spec, in corpus order.
    std::vector<std::size_t> rows_of_spec(const std::string& spec_id) const;
};

enum class CorpusFormat { Csv, Jsonl };

/// Loads a corpus from CSV (header spec_id,req_id,text,label) or JSONL.
/// Reads the `<name>.meta.csv` sidecar when present, otherwise fills in
/// default metadata per spec. Throws DataError naming the offending line
/// on malformed rows, duplicate (spec_id, req_id) keys, or empty text.
Corpus load_corpus(const std::string& path, CorpusFormat format);

/// Writes the corpus plus its metadata sidecar. load(save(c)) == c.
void save_corpus(const Corpus& corpus, const std::string& path, CorpusFormat format);

/// Sidecar path for a corpus path: extension replaced by ".meta.csv".
std::string meta_path_for(const std::string& path);

struct AuditFlag {
    Requirement requirement;
    std::string reason; // "suspicious-negative" or "suspicious-positive"
};

/// Default keyword stems used by audit_labels: the security-bearing stems
/// that rank highest for this kind of classifier.
const std::vector<std::string>& default_audit_stems();

/// Flags labeled requirements that look mislabeled: negatives whose stemmed
/// text contains a keyword stem, and positives containing none. Advisory
/// only; the corpus is never modified. Output sorted by (spec_id, req_id).
std::vector<AuditFlag> audit_labels(const Corpus& corpus,
                                    const std::vector<std::string>& keyword_stems);

enum class Style { UserStory, SystemShall, VendorInstruction };

const char* to_string(Style s);
Style style_from_string(const std::string& s);

/// Deterministic synthetic corpus generator. Positives draw from a
/// security-vocabulary pool, negatives from a functional pool, both over
/// shared filler vocabulary; each spec's sentences follow its style from
/// style_mix (keyed by generated spec id "S1".."Sn"; missing entries cycle
/// styles). Fixed seed gives byte-identical corpora across runs and
/// platforms.
Corpus synthesize_corpus(std::uint64_t seed, std::size_t n_specs, std::size_t reqs_per_spec,
                         double positive_rate, const std::map<std::string, Style>& style_mix);

} // namespace secreq::corpus
