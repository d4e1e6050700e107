#include <algorithm>
#include <cctype>

#include "ltlsync/ltlf.hpp"

namespace ltlsync::ltlf {

Formula::Formula() : Formula(truth()) {}

Formula Formula::make(Op op, std::string name, const Formula* a, const Formula* b) {
    std::size_t size = 1 + (a ? a->size() : 0) + (b ? b->size() : 0);
    auto node = std::make_shared<const Node>(Node{op, std::move(name),
                                                  a ? std::make_shared<const Formula>(*a) : nullptr,
                                                  b ? std::make_shared<const Formula>(*b) : nullptr, size});
    return Formula(std::move(node));
}

Formula Formula::truth() {
    static const Formula t = make(Op::truth, {}, nullptr, nullptr);
    return t;
}
Formula Formula::falsity() {
    static const Formula f = make(Op::falsity, {}, nullptr, nullptr);
    return f;
}
Formula Formula::atom(std::string name) { return make(Op::atom, std::move(name), nullptr, nullptr); }
Formula Formula::negation(Formula f) { return make(Op::negation, {}, &f, nullptr); }
Formula Formula::conjunction(Formula a, Formula b) { return make(Op::conjunction, {}, &a, &b); }
Formula Formula::disjunction(Formula a, Formula b) { return make(Op::disjunction, {}, &a, &b); }
Formula Formula::implication(Formula a, Formula b) { return make(Op::implication, {}, &a, &b); }
Formula Formula::next(Formula f) { return make(Op::next, {}, &f, nullptr); }
Formula Formula::until(Formula a, Formula b) { return make(Op::until, {}, &a, &b); }
Formula Formula::finally(Formula f) { return make(Op::finally, {}, &f, nullptr); }
Formula Formula::globally(Formula f) { return make(Op::globally, {}, &f, nullptr); }

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.op() != b.op() || a.size() != b.size() || a.name() != b.name()) return false;
    if (a.node_->lhs && !(*a.node_->lhs == *b.node_->lhs)) return false;
    if (a.node_->rhs && !(*a.node_->rhs == *b.node_->rhs)) return false;
    return true;
}

Formula conjoin(const std::vector<Formula>& parts) {
    if (parts.empty()) return Formula::truth();
    Formula acc = parts.front();
    for (std::size_t i = 1; i < parts.size(); ++i) acc = Formula::conjunction(acc, parts[i]);
    return acc;
}

namespace {

void collect_atoms(const Formula& f, std::vector<std::string>& out) {
    switch (f.op()) {
        case Op::truth:
        case Op::falsity: return;
        case Op::atom: out.push_back(f.name()); return;
        case Op::negation:
        case Op::next:
        case Op::finally:
        case Op::globally: collect_atoms(f.operand(), out); return;
        default:
            collect_atoms(f.lhs(), out);
            collect_atoms(f.rhs(), out);
    }
}

// Binding strength; larger binds tighter.
int precedence(Op op) {
    switch (op) {
        case Op::implication: return 1;
        case Op::disjunction: return 2;
        case Op::conjunction: return 3;
        case Op::until: return 4;
        case Op::negation:
        case Op::next:
        case Op::finally:
        case Op::globally: return 5;
        default: return 6;
    }
}

bool is_keyword(std::string_view s) {
    return s == "true" || s == "false" || s == "X" || s == "F" || s == "G" || s == "U";
}

bool plain_identifier(std::string_view s) {
    if (s.empty() || is_keyword(s)) return false;
    const auto first = static_cast<unsigned char>(s[0]);
    if (!std::isalpha(first) && s[0] != '_') return false;
    return std::all_of(s.begin() + 1, s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
    });
}

std::string quote_atom(const std::string& name) {
    if (plain_identifier(name)) return name;
    std::string out = "'";
    for (char c : name) {
        if (c == '\'' || c == '\\') out += '\\';
        out += c;
    }
    out += '\'';
    return out;
}

void print(const Formula& f, std::string& out);

void print_child(const Formula& child, bool parenthesize, std::string& out) {
    if (parenthesize) out += '(';
    print(child, out);
    if (parenthesize) out += ')';
}

void print(const Formula& f, std::string& out) {
    const int prec = precedence(f.op());
    switch (f.op()) {
        case Op::truth: out += "true"; return;
        case Op::falsity: out += "false"; return;
        case Op::atom: out += quote_atom(f.name()); return;
        case Op::negation:
        case Op::next:
        case Op::finally:
        case Op::globally: {
            out += f.op() == Op::negation ? "!" : f.op() == Op::next ? "X " : f.op() == Op::finally ? "F " : "G ";
            print_child(f.operand(), precedence(f.operand().op()) < prec, out);
            return;
        }
        default: break;
    }
    // Left-associative: & and |. Right-associative: U and ->.
    const bool right_assoc = f.op() == Op::until || f.op() == Op::implication;
    const int lp = precedence(f.lhs().op());
    const int rp = precedence(f.rhs().op());
    print_child(f.lhs(), right_assoc ? lp <= prec : lp < prec, out);
    out += f.op() == Op::conjunction ? " & " : f.op() == Op::disjunction ? " | " : f.op() == Op::until ? " U " : " -> ";
    print_child(f.rhs(), right_assoc ? rp < prec : rp <= prec, out);
}

}  // namespace

std::vector<std::string> atoms(const Formula& f) {
    std::vector<std::string> out;
    collect_atoms(f, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::string to_string(const Formula& f) {
    std::string out;
    print(f, out);
    return out;
}

}  // namespace ltlsync::ltlf
