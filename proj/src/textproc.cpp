// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 secreq contributors

#include "secreq/textproc.hpp"

#include <cstdint>

namespace secreq::textproc {

StopWordSet StopWordSet::base() {
    StopWordSet s;
    s.words.reserve(kStopWordCount);
    for (const char* w : kStopWords) s.words.insert(w);
    s.extended = false;
    return s;
}

StopWordSet StopWordSet::base_extended() {
    StopWordSet s = base();
    s.words.insert("user");
    s.words.insert("shall");
    s.words.insert("vendor");
    s.extended = true;
    return s;
}

namespace {

// Unicode codepoints treated as noise besides ASCII punctuation: Latin-1
// punctuation/symbols, general and supplemental punctuation, CJK symbols.
bool is_unicode_noise(std::uint32_t cp) {
    if (cp >= 0x00A0 && cp <= 0x00BF) return true;
    if (cp == 0x00D7 || cp == 0x00F7) return true;
    if (cp >= 0x2000 && cp <= 0x206F) return true;
    if (cp >= 0x2E00 && cp <= 0x2E7F) return true;
    if (cp >= 0x3000 && cp <= 0x303F) return true;
    return false;
}

// Lowercases the Latin-1 uppercase range; other non-ASCII letters pass
// through (the stemmer leaves them alone anyway).
std::uint32_t fold_case(std::uint32_t cp) {
    if (cp >= 0x00C0 && cp <= 0x00DE && cp != 0x00D7) return cp + 0x20;
    return cp;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Decodes one UTF-8 codepoint at i, advancing i. Invalid bytes decode as
// 0xFFFFFFFF (treated as noise).
std::uint32_t next_codepoint(const std::string& s, std::size_t& i) {
    const auto byte = [&](std::size_t j) { return static_cast<unsigned char>(s[j]); };
    unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int extra;
    std::uint32_t cp;
    if ((b0 & 0xE0) == 0xC0) {
        extra = 1;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        extra = 2;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        extra = 3;
        cp = b0 & 0x07;
    } else {
        ++i;
        return 0xFFFFFFFF;
    }
    if (i + static_cast<std::size_t>(extra) >= s.size()) {
        // truncated sequence
        ++i;
        return 0xFFFFFFFF;
    }
    for (int k = 1; k <= extra; ++k) {
        unsigned char bk = byte(i + static_cast<std::size_t>(k));
        if ((bk & 0xC0) != 0x80) {
            ++i;
            return 0xFFFFFFFF;
        }
        cp = (cp << 6) | (bk & 0x3F);
    }
    i += static_cast<std::size_t>(extra) + 1;
    return cp;
}

} // namespace

std::string normalize(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    bool pending_space = false;
    std::size_t i = 0;
    while (i < text.size()) {
        std::uint32_t cp = next_codepoint(text, i);
        bool keep;
        if (cp < 0x80) {
            if (cp >= 'A' && cp <= 'Z') cp += 0x20;
            keep = (cp >= 'a' && cp <= 'z') || (cp >= '0' && cp <= '9');
        } else {
            keep = cp != 0xFFFFFFFF && !is_unicode_noise(cp);
            cp = fold_case(cp);
        }
        if (keep) {
            if (pending_space && !out.empty()) out.push_back(' ');
            pending_space = false;
            append_utf8(out, cp);
        } else {
            pending_space = true;
        }
    }
    return out;
}

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const auto is_ws = [](char c) {
        return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
    };
    while (i < text.size()) {
        while (i < text.size() && is_ws(text[i])) ++i;
        std::size_t start = i;
        while (i < text.size() && !is_ws(text[i])) ++i;
        if (i > start) tokens.emplace_back(text.substr(start, i - start));
    }
    return tokens;
}

std::vector<std::string> remove_stop_words(const std::vector<std::string>& tokens,
                                           const StopWordSet& stops) {
    std::vector<std::string> kept;
    kept.reserve(tokens.size());
    for (const auto& t : tokens) {
        if (!stops.contains(t)) kept.push_back(t);
    }
    return kept;
}

TokenStream preprocess(const std::string& text, const StopWordSet& stops) {
    TokenStream out;
    for (const auto& token : remove_stop_words(tokenize(normalize(text)), stops)) {
        out.push_back(stem(token));
    }
    return out;
}

} // namespace secreq::textproc
