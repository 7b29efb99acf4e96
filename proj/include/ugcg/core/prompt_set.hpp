// Copyright (C) 2026 ugcg-guard authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "ugcg/core/types.hpp"
#include "ugcg/errors.hpp"

namespace ugcg {

struct Question {
    std::string id;
    std::string text;
    QuestionCategory category = QuestionCategory::General;
};

// The condition sentence plus the ordered question chain. The guidance
// question gates the contextual ones; contextual order is semantic.
struct PromptSet {
    std::string condition;
    std::vector<Question> questions;

    const Question* guidance() const {
        for (const auto& q : questions)
            if (q.category == QuestionCategory::Guidance) return &q;
        return nullptr;
    }

    std::vector<Question> contextual() const {
        std::vector<Question> out;
        for (const auto& q : questions)
            if (q.category != QuestionCategory::Guidance) out.push_back(q);
        return out;
    }

    const Question* find(const std::string& id) const {
        for (const auto& q : questions)
            if (q.id == id) return &q;
        return nullptr;
    }
};

// The stock moderation chain: one domain-adaptation condition, one guidance
// question and six contextual questions covering sexual content, violence
// and other harm.
inline PromptSet default_prompt_set() {
    PromptSet ps;
    ps.condition = "This is an image generated from a role-playing game.";
    ps.questions = {
        {"Q1", "Are there any characters or avatars in this image?",
         QuestionCategory::Guidance},
        {"Q2A", "Are the characters or avatars naked?", QuestionCategory::Sexual},
        {"Q2B",
         "Are there anuses, female breasts, female genitals, or male genitals "
         "exposed in this image?",
         QuestionCategory::Sexual},
        {"Q2C", "Are the characters or avatars indulging in any sexual activities?",
         QuestionCategory::Sexual},
        {"Q3A", "Are there any knives, guns, or deadly weapons presented in this image?",
         QuestionCategory::Violent},
        {"Q3B",
         "Are the characters or avatars indulging in any violent activities, "
         "such as murder, suicide, and torture?",
         QuestionCategory::Violent},
        {"Q4", "Are the characters or avatars indulging in any other harmful activities?",
         QuestionCategory::Harm},
    };
    return ps;
}

enum class PromptSetFindingKind {
    DuplicateId,
    EmptyText,
    EmptyCondition,
    MissingGuidance,
};

struct PromptSetFinding {
    PromptSetFindingKind kind;
    std::string detail;
};

struct PromptSetReport {
    std::vector<PromptSetFinding> findings;
    bool valid() const { return findings.empty(); }

    bool has(PromptSetFindingKind kind) const {
        return std::any_of(findings.begin(), findings.end(),
                           [&](const auto& f) { return f.kind == kind; });
    }
};

// Report-style check: duplicate ids, empty texts, empty condition, missing
// guidance question. Never throws.
inline PromptSetReport validate_prompt_set(const PromptSet& ps) {
    PromptSetReport report;
    if (ps.condition.empty())
        report.findings.push_back({PromptSetFindingKind::EmptyCondition, "condition is empty"});

    std::set<std::string> seen;
    for (const auto& q : ps.questions) {
        if (!seen.insert(q.id).second)
            report.findings.push_back(
                {PromptSetFindingKind::DuplicateId, "duplicate question id: " + q.id});
        if (q.text.empty())
            report.findings.push_back(
                {PromptSetFindingKind::EmptyText, "question has empty text: " + q.id});
    }
    if (ps.guidance() == nullptr)
        report.findings.push_back(
            {PromptSetFindingKind::MissingGuidance, "no guidance question present"});
    return report;
}

// Restricts a prompt set to the given contextual question ids. The condition
// and the guidance question are always retained; contextual order is
// preserved. keep = {} leaves the guidance question alone (presence-check
// mode).
inline PromptSet build_prompt_subset(const PromptSet& ps, const std::set<std::string>& keep) {
    for (const auto& id : keep) {
        const Question* q = ps.find(id);
        if (q == nullptr) throw InputError("unknown question id in subset: " + id);
        if (q->category == QuestionCategory::Guidance)
            continue;  // guidance is implicit, listing it is harmless
    }
    PromptSet out;
    out.condition = ps.condition;
    for (const auto& q : ps.questions) {
        if (q.category == QuestionCategory::Guidance || keep.count(q.id) > 0)
            out.questions.push_back(q);
    }
    return out;
}

// --- versioned text config -------------------------------------------------
//
// Line format, one record per line:
//   version 1
//   condition <text>
//   question <id> <category> <text>
// Blank lines and lines starting with '#' are ignored.

inline constexpr int kPromptSetFormatVersion = 1;

inline std::string serialize_prompt_set(const PromptSet& ps) {
    std::ostringstream out;
    out << "version " << kPromptSetFormatVersion << "\n";
    out << "condition " << ps.condition << "\n";
    for (const auto& q : ps.questions)
        out << "question " << q.id << " " << to_string(q.category) << " " << q.text << "\n";
    return out.str();
}

inline PromptSet parse_prompt_set(std::istream& in) {
    PromptSet ps;
    bool version_seen = false;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;

        std::istringstream fields(line);
        std::string keyword;
        fields >> keyword;
        if (keyword == "version") {
            int v = 0;
            if (!(fields >> v)) throw LoadError("bad version line", line_no);
            if (v != kPromptSetFormatVersion)
                throw LoadError("unsupported prompt set version: " + std::to_string(v), line_no);
            version_seen = true;
        } else if (keyword == "condition") {
            std::string rest;
            std::getline(fields, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
            ps.condition = rest;
        } else if (keyword == "question") {
            Question q;
            std::string category;
            if (!(fields >> q.id >> category)) throw LoadError("bad question line", line_no);
            try {
                q.category = category_from_string(category);
            } catch (const InputError& e) {
                throw LoadError(e.what(), line_no);
            }
            std::string rest;
            std::getline(fields, rest);
            if (!rest.empty() && rest.front() == ' ') rest.erase(0, 1);
            q.text = rest;
            ps.questions.push_back(std::move(q));
        } else {
            throw LoadError("unknown keyword: " + keyword, line_no);
        }
    }
    if (!version_seen) throw LoadError("missing version line");
    return ps;
}

inline PromptSet load_prompt_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw LoadError("cannot open prompt set file: " + path);
    return parse_prompt_set(in);
}

inline void save_prompt_set(const PromptSet& ps, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) throw LoadError("cannot write prompt set file: " + path);
    out << serialize_prompt_set(ps);
}

}  // namespace ugcg
