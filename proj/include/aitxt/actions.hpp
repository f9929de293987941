#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace aitxt {

/// The curated vocabulary of regulated actions. String forms are Title-case
/// and matching is case-sensitive; "Crop" or "train" are not members.
enum class ActionName {
    Analyze,
    Cite,
    Clip,
    Describe,
    Evaluate,
    Extract,
    Index,
    Manipulate,
    Rephrase,
    Return,
    Summarize,
    Train,
    Transcribe,
    Translate,
};

inline constexpr int kActionCount = 14;

/// All 14 actions in alphabetical order.
const std::array<ActionName, kActionCount>& vocabulary();

std::string_view to_string(ActionName name);

/// Exact Title-case lookup. The wildcard "*" is rejected here; it is handled
/// at the ActionList level.
std::optional<ActionName> action_from_string(std::string_view token);

/// One action verb as written in a rule. Either a vocabulary member or, in
/// lenient mode, an opaque extension token carried through unchanged.
struct Action {
    std::string name;
    std::optional<ActionName> builtin;

    static Action of(ActionName n) { return Action{std::string(to_string(n)), n}; }
    static Action extension(std::string token) { return Action{std::move(token), std::nullopt}; }

    bool is_extension() const { return !builtin.has_value(); }

    friend bool operator==(const Action& a, const Action& b) { return a.name == b.name; }
};

/// Action list of a Disallow/Guide rule: the wildcard "*" (all actions,
/// including extensions) or a non-empty duplicate-free list.
struct ActionList {
    bool all = false;
    std::vector<Action> actions;  // empty iff all

    static ActionList wildcard() { return ActionList{true, {}}; }

    bool covers(const Action& a) const;

    friend bool operator==(const ActionList&, const ActionList&) = default;
};

}  // namespace aitxt
