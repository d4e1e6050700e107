#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "ltlsync/errors.hpp"
#include "ltlsync/reductions.hpp"
#include "names.hpp"

namespace ltlsync {

void CnfFormula::validate() const {
    for (const auto& clause : clauses) {
        if (clause.empty()) throw InputError("empty clause");
        for (int lit : clause) {
            if (lit == 0 || static_cast<std::size_t>(std::abs(lit)) > num_vars) {
                throw InputError("literal " + std::to_string(lit) + " out of range");
            }
            if (std::find(clause.begin(), clause.end(), -lit) != clause.end()) {
                throw InputError("clause contains a literal and its negation");
            }
        }
    }
}

bool CnfFormula::satisfied_by(const std::vector<bool>& assignment) const {
    return std::all_of(clauses.begin(), clauses.end(), [&](const std::vector<int>& clause) {
        return std::any_of(clause.begin(), clause.end(), [&](int lit) {
            const bool v = assignment.at(static_cast<std::size_t>(std::abs(lit)) - 1);
            return lit > 0 ? v : !v;
        });
    });
}

CnfFormula parse_dimacs(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    CnfFormula cnf;
    bool header = false;
    std::size_t declared = 0;
    std::vector<int> clause;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c" || tok[0] == 'c' || tok == "%") continue;
        if (tok == "p") {
            std::string fmt;
            if (header || !(ls >> fmt >> cnf.num_vars >> declared) || fmt != "cnf") {
                throw InputError("bad DIMACS header: " + line);
            }
            header = true;
            continue;
        }
        if (!header) throw InputError("DIMACS clause before the header");
        do {
            char* end = nullptr;
            const long v = std::strtol(tok.c_str(), &end, 10);
            if (*end != '\0') throw InputError("bad DIMACS token '" + tok + "'");
            if (v == 0) {
                cnf.clauses.push_back(std::move(clause));
                clause.clear();
            } else {
                clause.push_back(static_cast<int>(v));
            }
        } while (ls >> tok);
    }
    if (!header) throw InputError("missing DIMACS header");
    if (!clause.empty()) cnf.clauses.push_back(std::move(clause));
    if (cnf.clauses.size() != declared) {
        throw InputError("DIMACS header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(cnf.clauses.size()));
    }
    cnf.validate();
    return cnf;
}

std::string to_dimacs(const CnfFormula& cnf) {
    std::ostringstream out;
    out << "p cnf " << cnf.num_vars << ' ' << cnf.clauses.size() << '\n';
    for (const auto& clause : cnf.clauses) {
        for (int lit : clause) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

std::optional<std::vector<bool>> brute_force_sat(const CnfFormula& cnf) {
    if (cnf.num_vars > 30) throw ResourceLimitError("too many variables for exhaustive search");
    std::vector<bool> a(cnf.num_vars);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cnf.num_vars); ++mask) {
        for (std::size_t i = 0; i < cnf.num_vars; ++i) a[i] = (mask >> i) & 1U;
        if (cnf.satisfied_by(a)) return a;
    }
    return std::nullopt;
}

ReductionOutput cnf_to_fvt(const CnfFormula& cnf) {
    cnf.validate();
    const std::size_t n = cnf.num_vars;
    const std::size_t m = cnf.clauses.size();
    if (n == 0 || m == 0) throw InputError("the reduction needs at least one variable and one clause");

    // variables of each clause, first occurrence order, with polarity
    std::vector<std::vector<int>> lits(m);
    for (std::size_t j = 0; j < m; ++j) {
        for (int lit : cnf.clauses[j]) {
            if (std::find(lits[j].begin(), lits[j].end(), lit) == lits[j].end()) lits[j].push_back(lit);
        }
    }

    std::vector<std::string> names;
    auto add = [&](std::string name) {
        names.push_back(std::move(name));
        return static_cast<Vertex>(names.size() - 1);
    };
    std::vector<Vertex> xp(n), x0(n), x1(n), cp(m);
    std::vector<std::vector<Vertex>> cv(m);
    for (std::size_t i = 0; i < n; ++i) {
        const std::string k = std::to_string(i + 1);
        xp[i] = add("x'" + k);
        x0[i] = add("x" + k + "^0");
        x1[i] = add("x" + k + "^1");
    }
    for (std::size_t j = 0; j < m; ++j) {
        cp[j] = add("c'" + std::to_string(j + 1));
        for (int lit : lits[j]) cv[j].push_back(add("c" + std::to_string(j + 1) + "^" + std::to_string(std::abs(lit))));
    }
    const Vertex f1 = add("f1");
    const Vertex f2 = add("f2");

    TraversalInstance inst{Digraph(names), {}, {}};
    Digraph& g = inst.graph;
    for (std::size_t i = 0; i < n; ++i) {
        g.add_edge(xp[i], x0[i]);
        g.add_edge(xp[i], x1[i]);
        const Vertex next = i + 1 < n ? xp[i + 1] : cp[0];
        g.add_edge(x0[i], next);
        g.add_edge(x1[i], next);
    }
    for (std::size_t j = 0; j < m; ++j) {
        const Vertex next = j + 1 < m ? cp[j + 1] : f1;
        for (Vertex c : cv[j]) {
            g.add_edge(cp[j], c);
            g.add_edge(c, next);
        }
    }
    g.add_edge(f1, f2);
    g.add_edge(f2, xp[0]);

    for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < lits[j].size(); ++k) {
            const int lit = lits[j][k];
            const auto var = static_cast<std::size_t>(std::abs(lit)) - 1;
            inst.pairs.emplace_back(lit > 0 ? x1[var] : x0[var], cv[j][k]);
        }
    }
    inst.pairs.emplace_back(xp[0], f1);
    inst.pairs.emplace_back(f1, f2);

    ReductionOutput out;
    out.kind = "cnf";
    out.variant = "fvt";
    out.traversal = std::move(inst);
    const nlohmann::json src = {{"num_vars", n}, {"clauses", cnf.clauses}};
    out.fingerprint = detail::fnv1a(src.dump());
    nlohmann::json neg = nlohmann::json::array(), pos = nlohmann::json::array();
    for (std::size_t i = 0; i < n; ++i) {
        neg.push_back(names[x0[i]]);
        pos.push_back(names[x1[i]]);
    }
    out.pullback = {{"source", src}, {"x0", neg}, {"x1", pos}};
    return out;
}

}  // namespace ltlsync
