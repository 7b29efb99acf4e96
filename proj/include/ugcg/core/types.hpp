// Copyright (C) 2026 ugcg-guard authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ugcg/errors.hpp"

namespace ugcg {

enum class Source { X, Reddit, Discord, Synthetic, Other };

enum class Label { Safe, SexuallyExplicit, Violent, Unknown };

enum class Decision { Safe, Unsafe };

// Parsed form of a backend reply. NA covers hedges, refusals and anything
// that is neither an affirmative nor a negative.
enum class Answer { Yes, No, NA };

enum class QuestionCategory { Guidance, Sexual, Violent, Harm, General };

inline const char* to_string(Source s) {
    switch (s) {
    case Source::X: return "x";
    case Source::Reddit: return "reddit";
    case Source::Discord: return "discord";
    case Source::Synthetic: return "synthetic";
    case Source::Other: return "other";
    }
    return "other";
}

inline Source source_from_string(const std::string& s) {
    if (s == "x") return Source::X;
    if (s == "reddit") return Source::Reddit;
    if (s == "discord") return Source::Discord;
    if (s == "synthetic") return Source::Synthetic;
    if (s == "other") return Source::Other;
    throw InputError("unknown source: " + s);
}

inline const char* to_string(Label l) {
    switch (l) {
    case Label::Safe: return "safe";
    case Label::SexuallyExplicit: return "sexually-explicit";
    case Label::Violent: return "violent";
    case Label::Unknown: return "unknown";
    }
    return "unknown";
}

inline Label label_from_string(const std::string& s) {
    if (s == "safe") return Label::Safe;
    if (s == "sexually-explicit") return Label::SexuallyExplicit;
    if (s == "violent") return Label::Violent;
    if (s == "unknown") return Label::Unknown;
    throw InputError("unknown label: " + s);
}

inline const char* to_string(Decision d) {
    return d == Decision::Safe ? "safe" : "unsafe";
}

inline Decision decision_from_string(const std::string& s) {
    if (s == "safe") return Decision::Safe;
    if (s == "unsafe") return Decision::Unsafe;
    throw InputError("unknown decision: " + s);
}

inline const char* to_string(Answer a) {
    switch (a) {
    case Answer::Yes: return "yes";
    case Answer::No: return "no";
    case Answer::NA: return "n/a";
    }
    return "n/a";
}

inline Answer answer_from_string(const std::string& s) {
    if (s == "yes") return Answer::Yes;
    if (s == "no") return Answer::No;
    if (s == "n/a") return Answer::NA;
    throw InputError("unknown answer: " + s);
}

inline const char* to_string(QuestionCategory c) {
    switch (c) {
    case QuestionCategory::Guidance: return "guidance";
    case QuestionCategory::Sexual: return "sexual";
    case QuestionCategory::Violent: return "violent";
    case QuestionCategory::Harm: return "harm";
    case QuestionCategory::General: return "general";
    }
    return "general";
}

inline QuestionCategory category_from_string(const std::string& s) {
    if (s == "guidance") return QuestionCategory::Guidance;
    if (s == "sexual") return QuestionCategory::Sexual;
    if (s == "violent") return QuestionCategory::Violent;
    if (s == "harm") return QuestionCategory::Harm;
    if (s == "general") return QuestionCategory::General;
    throw InputError("unknown question category: " + s);
}

// One candidate promotional image plus provenance, dimensions and label.
// The payload is either a filesystem path or inline bytes; both may be
// empty for records that only carry metadata (fixture-driven runs never
// touch pixels).
struct ImageRecord {
    std::string id;
    std::string path;
    std::string bytes;
    int width = 0;   // 0 = unknown
    int height = 0;  // 0 = unknown
    Source source = Source::Other;
    std::vector<std::string> hashtags;
    Label label = Label::Unknown;
    std::string content_hash;  // lowercase hex digest, empty until computed

    bool has_payload() const { return !path.empty() || !bytes.empty(); }
    bool dimensions_known() const { return width > 0 && height > 0; }
};

// Reads the record's payload bytes, from memory or from disk.
inline std::string payload_bytes(const ImageRecord& rec) {
    if (!rec.bytes.empty()) return rec.bytes;
    if (rec.path.empty()) throw InputError("image record '" + rec.id + "' has no payload");
    std::ifstream in(rec.path, std::ios::binary);
    if (!in) throw InputError("cannot read image file: " + rec.path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct ChainAnswer {
    std::string question_id;
    std::string raw_text;  // backend reply, preserved verbatim
    Answer parsed = Answer::NA;
    QuestionCategory category = QuestionCategory::General;
};

// Ordered record of one image's pass through the question chain.
// Invariants: a "no" guidance answer implies no contextual answers; at most
// one contextual entry per question id. Enforced by aggregate_verdict.
struct ChainTranscript {
    std::string image_id;
    std::optional<ChainAnswer> guidance;
    std::vector<ChainAnswer> contextual;
    int backend_calls = 0;
    std::int64_t started_ms = 0;
    std::int64_t finished_ms = 0;
};

struct Reason {
    std::string question_id;
    QuestionCategory category = QuestionCategory::General;
    std::string raw_text;
};

// Safe/unsafe decision plus the yes-answered questions that produced it.
// decision == Unsafe exactly when reasons is non-empty.
struct Verdict {
    std::string image_id;
    Decision decision = Decision::Safe;
    std::vector<Reason> reasons;
    ChainTranscript transcript;
};

}  // namespace ugcg
