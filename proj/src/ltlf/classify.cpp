#include "ltlsync/ltlf.hpp"

namespace ltlsync::ltlf {

namespace {

// Modalities and negation placement seen in the negation normal form.
struct Shape {
    bool has_f = false;
    bool has_g = false;
    bool has_u = false;
    bool has_other = false;  // weak next, release, next
};

// Walks f as if pushed into negation normal form under `negated`.
void scan(const Formula& f, bool negated, Shape& s) {
    switch (f.op()) {
        case Op::truth:
        case Op::falsity:
        case Op::atom: return;
        case Op::negation: scan(f.operand(), !negated, s); return;
        case Op::conjunction:
        case Op::disjunction:
            scan(f.lhs(), negated, s);
            scan(f.rhs(), negated, s);
            return;
        case Op::implication:
            scan(f.lhs(), !negated, s);
            scan(f.rhs(), negated, s);
            return;
        case Op::next:
            s.has_other = true;
            scan(f.operand(), negated, s);
            return;
        case Op::finally:
            (negated ? s.has_g : s.has_f) = true;
            scan(f.operand(), negated, s);
            return;
        case Op::globally:
            (negated ? s.has_f : s.has_g) = true;
            scan(f.operand(), negated, s);
            return;
        case Op::until:
            (negated ? s.has_other : s.has_u) = true;
            scan(f.lhs(), negated, s);
            scan(f.rhs(), negated, s);
            return;
    }
}

bool negated_atom(const Formula& f) { return f.op() == Op::negation && f.operand().op() == Op::atom; }

bool flat_until_conjunction(const Formula& f) {
    if (f.op() == Op::conjunction) return flat_until_conjunction(f.lhs()) && flat_until_conjunction(f.rhs());
    return f.op() == Op::until && negated_atom(f.lhs()) && f.rhs().op() == Op::atom;
}

}  // namespace

FragmentTags classify_fragment(const Formula& f) {
    Shape s;
    scan(f, false, s);
    FragmentTags t;
    if (!s.has_other) {
        t.lplus_f = !s.has_g && !s.has_u;
        t.lplus_g = !s.has_f && !s.has_u;
        t.lplus_u = !s.has_f && !s.has_g;
    }
    t.flat_until_conjunction = flat_until_conjunction(f);
    t.general = !(t.lplus_f || t.lplus_g || t.lplus_u || t.flat_until_conjunction);
    return t;
}

std::vector<std::string> FragmentTags::names() const {
    std::vector<std::string> out;
    if (lplus_f) out.emplace_back("Lplus(F)");
    if (lplus_g) out.emplace_back("Lplus(G)");
    if (lplus_u) out.emplace_back("Lplus(U)");
    if (flat_until_conjunction) out.emplace_back("flat-until-conjunction");
    if (general) out.emplace_back("general");
    return out;
}

}  // namespace ltlsync::ltlf
