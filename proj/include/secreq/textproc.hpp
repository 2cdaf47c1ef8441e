// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 secreq contributors

#pragma once

#include <array>
#include <string>
#include <unordered_set>
#include <vector>

namespace secreq::textproc {

/// Bundled English stop-word list, lowercase, lexicographically sorted.
/// Mirrors data/stopwords_en.txt byte for byte (checked in tests).
inline constexpr std::size_t kStopWordCount = 318;
extern const std::array<const char*, kStopWordCount> kStopWords;

/// Active stop-word set. The extended variant adds the three terms that
/// dominate requirements prose: "user", "shall", "vendor".
struct StopWordSet {
    std::unordered_set<std::string> words;
    bool extended = false;

    static StopWordSet base();
    static StopWordSet base_extended();
    static StopWordSet make(bool extend) { return extend ? base_extended() : base(); }

    bool contains(const std::string& w) const { return words.count(w) != 0; }
};

/// Ordered list of lowercase stemmed terms, ready for vectorization.
using TokenStream = std::vector<std::string>;

/// Noise removal + case folding: every character that is not a letter or
/// digit becomes a space, ASCII letters are lowercased, runs of spaces
/// collapse, and the result is trimmed. UTF-8 aware: Latin-1 letters are
/// lowercased, Unicode punctuation is stripped, other non-ASCII letters
/// pass through.
std::string normalize(const std::string& text);

/// Splits normalized text on whitespace runs. Never emits empty tokens.
std::vector<std::string> tokenize(const std::string& text);

/// Order-preserving exact-match removal. Tokens must be lowercase.
std::vector<std::string> remove_stop_words(const std::vector<std::string>& tokens,
                                           const StopWordSet& stops);

/// Porter (1980) stem of a lowercase word. Words containing anything other
/// than a-z are returned unchanged, as are words of one or two letters.
std::string stem(const std::string& word);

/// Full pipeline: normalize -> tokenize -> remove stop words -> stem.
/// Stop-word removal happens before stemming; the list holds unstemmed
/// English words.
TokenStream preprocess(const std::string& text, const StopWordSet& stops);

} // namespace secreq::textproc
