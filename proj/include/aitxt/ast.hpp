#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "aitxt/actions.hpp"
#include "aitxt/source_span.hpp"

namespace aitxt {

// Parsed representation of one ai.txt document. All types are plain values;
// nothing in the library mutates a PolicyFile after construction, so sharing
// across threads is safe. operator== is structural and ignores SourceSpans
// (and, on PolicyFile, the indent unit and source name) so that round-trip
// comparisons work on content alone.

enum class FileType { Html, Json, Xml };

std::string_view to_string(FileType t);
std::optional<FileType> file_type_from_string(std::string_view s);

/// Agent list of a User-agent line: "*" or one or more names.
struct AgentSelector {
    bool all = false;
    std::vector<std::string> names;  // empty iff all

    static AgentSelector wildcard() { return AgentSelector{true, {}}; }

    bool covers(std::string_view agent) const;

    friend bool operator==(const AgentSelector&, const AgentSelector&) = default;
};

bool is_valid_agent_name(std::string_view s);

/// Language identifier, ISO-639 style: 2-3 letter primary subtag plus an
/// optional 2 letter region (en, en-US, fra). Shape-checked only; no
/// registry lookup.
struct LanguageTag {
    std::string raw;

    std::string_view primary_subtag() const;
    std::string_view region_subtag() const;  // empty when absent

    friend bool operator==(const LanguageTag& a, const LanguageTag& b) { return a.raw == b.raw; }
};

bool is_valid_language_tag(std::string_view s);

/// One Lang/Guideline pair: a single-line plaintext instruction in the given
/// language, stored verbatim.
struct Guideline {
    LanguageTag language;
    std::string text;

    friend bool operator==(const Guideline&, const Guideline&) = default;
};

struct DisallowRule {
    ActionList actions;
    SourceSpan span;

    friend bool operator==(const DisallowRule& a, const DisallowRule& b) {
        return a.actions == b.actions;
    }
};

struct GuideRule {
    ActionList actions;
    std::vector<Guideline> guidelines;  // at least one
    SourceSpan span;

    friend bool operator==(const GuideRule& a, const GuideRule& b) {
        return a.actions == b.actions && a.guidelines == b.guidelines;
    }
};

using Rule = std::variant<DisallowRule, GuideRule>;

const ActionList& rule_actions(const Rule& rule);
const SourceSpan& rule_span(const Rule& rule);

/// Rules scoped to one content element: a CSS selector string for html
/// parents, a dot-notation object path for json/xml parents, or "*". The
/// name is stored verbatim; syntax is the validator's concern.
struct ElementBlock {
    std::string element_name;
    std::vector<Rule> rules;  // at least one
    SourceSpan span;

    friend bool operator==(const ElementBlock& a, const ElementBlock& b) {
        return a.element_name == b.element_name && a.rules == b.rules;
    }
};

/// Rules scoped to one site-root-relative path with a declared file type.
struct PathBlock {
    std::string path;
    FileType file_type = FileType::Html;
    std::vector<ElementBlock> elements;  // at least one
    SourceSpan span;

    friend bool operator==(const PathBlock& a, const PathBlock& b) {
        return a.path == b.path && a.file_type == b.file_type && a.elements == b.elements;
    }
};

bool is_valid_path(std::string_view s);

struct UserAgentBlock {
    AgentSelector agents;
    std::vector<PathBlock> paths;  // at least one
    SourceSpan span;

    friend bool operator==(const UserAgentBlock& a, const UserAgentBlock& b) {
        return a.agents == b.agents && a.paths == b.paths;
    }
};

/// Indentation unit of a document; fixed once inferred from the first
/// indented line.
enum class IndentUnit { TwoSpaces, FourSpaces, Tab };

std::string_view to_string(IndentUnit u);

struct PolicyFile {
    std::vector<UserAgentBlock> blocks;  // empty only for empty/comment-only input
    IndentUnit indent_unit = IndentUnit::TwoSpaces;
    std::string source_name;

    friend bool operator==(const PolicyFile& a, const PolicyFile& b) {
        return a.blocks == b.blocks;
    }
};

}  // namespace aitxt
