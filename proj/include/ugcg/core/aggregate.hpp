// Copyright (C) 2026 ugcg-guard authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <string>

#include "ugcg/core/types.hpp"
#include "ugcg/errors.hpp"

namespace ugcg {

// Existential decision rule over the contextual answers: the image is unsafe
// exactly when at least one contextual question was answered yes. A "no"
// guidance answer short-circuits to safe (the chain must not have collected
// contextual answers in that case). n/a never flags.
inline Verdict aggregate_verdict(const ChainTranscript& transcript) {
    if (transcript.guidance && transcript.guidance->parsed == Answer::No &&
        !transcript.contextual.empty()) {
        throw ValidationError(
            "malformed transcript: contextual answers present despite guidance = no");
    }
    std::set<std::string> seen;
    for (const auto& ans : transcript.contextual) {
        if (!seen.insert(ans.question_id).second)
            throw ValidationError("malformed transcript: duplicate contextual answer for " +
                                  ans.question_id);
    }

    Verdict verdict;
    verdict.image_id = transcript.image_id;
    verdict.transcript = transcript;
    for (const auto& ans : transcript.contextual) {
        if (ans.parsed == Answer::Yes)
            verdict.reasons.push_back({ans.question_id, ans.category, ans.raw_text});
    }
    verdict.decision = verdict.reasons.empty() ? Decision::Safe : Decision::Unsafe;
    return verdict;
}

}  // namespace ugcg
