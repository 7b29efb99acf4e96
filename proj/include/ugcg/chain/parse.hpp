// Copyright (C) 2026 ugcg-guard authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cctype>
#include <string>

#include "ugcg/core/types.hpp"

namespace ugcg {

// Maps a raw backend reply to yes/no/n/a. Case-insensitive leading-token
// match after skipping whitespace, punctuation and light markup; sentence
// openers like "Yes," and "No." count. Hedges, refusals and empty replies
// map to n/a. Total and deterministic.
inline Answer parse_answer(const std::string& raw) {
    std::size_t i = 0;
    const std::size_t n = raw.size();
    // Skip anything before the first letter: spaces, quotes, markdown
    // asterisks/underscores, list bullets, and <...> tags as a unit.
    while (i < n) {
        if (raw[i] == '<') {
            while (i < n && raw[i] != '>') ++i;
            if (i < n) ++i;
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(raw[i]))) break;
        ++i;
    }
    std::string token;
    while (i < n && std::isalpha(static_cast<unsigned char>(raw[i]))) {
        token.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(raw[i]))));
        ++i;
    }
    if (token == "yes") return Answer::Yes;
    if (token == "no") return Answer::No;
    return Answer::NA;
}

}  // namespace ugcg
