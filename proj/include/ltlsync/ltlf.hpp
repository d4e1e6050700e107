#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "ltlsync/errors.hpp"
#include "ltlsync/state_set.hpp"

namespace ltlsync::ltlf {

enum class Op { truth, falsity, atom, negation, conjunction, disjunction, implication, next, until, finally, globally };

/// Immutable LTL_f syntax tree over named atomic propositions. Copies share
/// structure; equality is structural.
class Formula {
public:
    Formula();  // true

    static Formula truth();
    static Formula falsity();
    static Formula atom(std::string name);
    static Formula negation(Formula f);
    static Formula conjunction(Formula a, Formula b);
    static Formula disjunction(Formula a, Formula b);
    static Formula implication(Formula a, Formula b);
    static Formula next(Formula f);
    static Formula until(Formula a, Formula b);
    static Formula finally(Formula f);
    static Formula globally(Formula f);

    Op op() const noexcept { return node_->op; }
    /// Atom name; empty for other nodes.
    const std::string& name() const noexcept { return node_->name; }
    /// First operand of unary and binary nodes.
    const Formula& lhs() const { return *node_->lhs; }
    const Formula& rhs() const { return *node_->rhs; }
    const Formula& operand() const { return *node_->lhs; }

    /// Node count.
    std::size_t size() const noexcept { return node_->size; }

    friend bool operator==(const Formula& a, const Formula& b);

private:
    struct Node {
        Op op;
        std::string name;
        std::shared_ptr<const Formula> lhs;
        std::shared_ptr<const Formula> rhs;
        std::size_t size;
    };
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static Formula make(Op op, std::string name, const Formula* a, const Formula* b);

    std::shared_ptr<const Node> node_;
};

/// Conjunction of all parts, left-nested; true when empty.
Formula conjoin(const std::vector<Formula>& parts);

/// Sorted, de-duplicated atom names.
std::vector<std::string> atoms(const Formula& f);

/// Canonical text with minimal parentheses; parse(to_string(f)) == f.
std::string to_string(const Formula& f);

/// Error with the byte offset where parsing failed.
class ParseError : public InputError {
public:
    ParseError(const std::string& what, std::size_t position)
        : InputError(what + " at position " + std::to_string(position)), position_(position) {}
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Grammar, loosest to tightest: -> (right), | (left), & (left), U (right),
/// prefix ! X F G. Atoms are identifiers [A-Za-z_][A-Za-z0-9_']* other than
/// the keywords true, false, X, F, G, U, or single-quoted strings with \'
/// and \\ escapes.
Formula parse(std::string_view text);

// --- semantics -------------------------------------------------------------

/// Propositions P; a label is a StateSet over indices into P.
using Propositions = std::vector<std::string>;
using Label = StateSet;
/// Non-empty sequence of labels.
using Trace = std::vector<Label>;

/// Truth of f at position 0 of a non-empty trace. X is strong next; F and G
/// are reflexive. Throws InputError for atoms outside props or an empty trace.
bool eval_trace(const Formula& f, const Trace& trace, const Propositions& props);

// --- fragments ---------------------------------------------------------------

struct FragmentTags {
    bool lplus_f = false;
    bool lplus_g = false;
    bool lplus_u = false;
    bool flat_until_conjunction = false;
    /// Set only when no other tag applies.
    bool general = false;

    std::vector<std::string> names() const;
};

/// Tags computed on the negation normal form after expanding implications.
FragmentTags classify_fragment(const Formula& f);

}  // namespace ltlsync::ltlf
