#include <algorithm>

#include "ltlsync/automata_json.hpp"
#include "ltlsync/errors.hpp"
#include "ltlsync/reductions.hpp"

namespace ltlsync {

PartialDfa careful_source(const ReductionOutput& out) {
    if (out.kind != "careful") throw InputError("not a careful-synchronization reduction");
    return partial_dfa_from_json(out.pullback.at("source"));
}

std::vector<Acceptor> fai_sources(const ReductionOutput& out) {
    if (out.kind != "fai") throw InputError("not an intersection reduction");
    std::vector<Acceptor> accs;
    for (const auto& j : out.pullback.at("sources")) accs.push_back(acceptor_from_json(j));
    return accs;
}

CnfFormula cnf_source(const ReductionOutput& out) {
    if (out.kind != "cnf") throw InputError("not a CNF reduction");
    const auto& src = out.pullback.at("source");
    CnfFormula cnf{src.at("num_vars").get<std::size_t>(), src.at("clauses").get<std::vector<std::vector<int>>>()};
    cnf.validate();
    return cnf;
}

Word pullback_word(const ReductionOutput& out, std::span<const Letter> witness) {
    if (!out.dfa) throw InputError("reduction has no automaton");
    const Dfa& dfa = *out.dfa;
    if (out.kind == "careful") {
        const PartialDfa src = careful_source(out);
        Word w;
        for (Letter a : witness) {
            if (a >= src.num_letters()) break;  // the added letter c ends the source part
            w.push_back(a);
        }
        const auto image = step_set(src, src.all_states(), w);
        if (!image || image->count() != 1) {
            throw VerificationError("pulled-back word does not carefully synchronize the source");
        }
        return w;
    }
    if (out.kind == "fai") {
        const auto accs = fai_sources(out);
        const Letter r = dfa.letter_index(out.pullback.at("r").get<std::string>());
        const Letter t = dfa.letter_index(out.pullback.at("t").get<std::string>());
        std::size_t end = std::find(witness.begin(), witness.end(), t) - witness.begin();
        std::size_t begin = 0;
        for (std::size_t i = 0; i < end; ++i) {
            if (witness[i] == r) begin = i + 1;
        }
        const Word w(witness.begin() + static_cast<std::ptrdiff_t>(begin),
                     witness.begin() + static_cast<std::ptrdiff_t>(end));
        const PartialDfa& first = accs.front().dfa;
        for (const auto& acc : accs) {
            Word local;
            for (Letter a : w) local.push_back(acc.dfa.letter_index(first.letter_name(a)));
            if (!acc.accepts(local)) throw VerificationError("pulled-back word is rejected by a source acceptor");
        }
        return w;
    }
    throw InputError("reduction kind '" + out.kind + "' has no word pullback");
}

std::vector<bool> pullback_assignment(const ReductionOutput& out, const VertexPath& path) {
    const CnfFormula cnf = cnf_source(out);
    if (!out.traversal) throw InputError("reduction has no traversal instance");
    const Digraph& g = out.traversal->graph;
    auto vertex = [&](const std::string& name) {
        const auto& names = g.names();
        return static_cast<Vertex>(std::find(names.begin(), names.end(), name) - names.begin());
    };
    auto first_visit = [&](Vertex v) {
        return static_cast<std::size_t>(std::find(path.begin(), path.end(), v) - path.begin());
    };
    std::vector<bool> a(cnf.num_vars, false);
    for (std::size_t i = 0; i < cnf.num_vars; ++i) {
        const std::size_t neg = first_visit(vertex(out.pullback.at("x0").at(i).get<std::string>()));
        const std::size_t pos = first_visit(vertex(out.pullback.at("x1").at(i).get<std::string>()));
        a[i] = pos < neg;
    }
    if (!cnf.satisfied_by(a)) throw VerificationError("pulled-back assignment does not satisfy the formula");
    return a;
}

}  // namespace ltlsync
