#include "spinmcg/genus2.hpp"

#include <algorithm>
#include <array>
#include <tuple>

#include "spinmcg/errors.hpp"
#include "spinmcg/spin_membership.hpp"

namespace spinmcg::genus2 {

namespace {

const Genus G2{2};

SymplecticMatrixF2 c_mod2(int i) {
    return evaluate_mod2(TwistWord::letter(SymbolKind::C, i), G2);
}

TwistWord w(const std::string& s) { return parse_word(s, G2); }

}  // namespace

QuadraticForm base_form() { return QuadraticForm::q1(G2); }

bool CosetGraph::is_path() const {
    if (edges.size() + 1 != vertices.size()) return false;
    for (std::size_t k = 0; k < edges.size(); ++k)
        if (edges[k].from != k || edges[k].to != k + 1) return false;
    return true;
}

std::size_t CosetGraph::index_of(const QuadraticForm& q) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i] == q) return i;
    throw Error("form " + q.to_string() + " is not a vertex");
}

CosetGraph coset_graph() {
    const auto forms = enumerate_forms(G2, 1);
    // adjacency over the unordered vertex list
    std::vector<std::vector<std::pair<std::size_t, int>>> adj(forms.size());
    auto find = [&](const QuadraticForm& q) {
        return static_cast<std::size_t>(std::find(forms.begin(), forms.end(), q) - forms.begin());
    };
    for (std::size_t a = 0; a < forms.size(); ++a)
        for (int i = 1; i <= 5; ++i) {
            const std::size_t b = find(act_form(forms[a], c_mod2(i)));
            if (b != a) adj[a].push_back({b, i});
        }

    // order the path from the end whose edge label is smallest
    std::vector<std::size_t> ends;
    for (std::size_t a = 0; a < forms.size(); ++a)
        if (adj[a].size() == 1) ends.push_back(a);
    CosetGraph g;
    std::vector<std::size_t> order;
    if (ends.size() == 2) {
        std::size_t start = adj[ends[0]][0].second <= adj[ends[1]][0].second ? ends[0] : ends[1];
        std::size_t prev = forms.size(), cur = start;
        while (order.size() < forms.size()) {
            order.push_back(cur);
            std::size_t next = forms.size();
            for (auto [b, lbl] : adj[cur])
                if (b != prev) next = b;
            if (next == forms.size()) break;
            prev = cur;
            cur = next;
        }
    }
    if (order.size() != forms.size()) {
        order.clear();
        for (std::size_t a = 0; a < forms.size(); ++a) order.push_back(a);
    }
    std::vector<std::size_t> pos(forms.size());
    for (std::size_t k = 0; k < order.size(); ++k) {
        pos[order[k]] = k;
        g.vertices.push_back(forms[order[k]]);
    }
    for (std::size_t a = 0; a < forms.size(); ++a)
        for (auto [b, lbl] : adj[a])
            if (pos[a] < pos[b]) g.edges.push_back({pos[a], pos[b], lbl});
    std::sort(g.edges.begin(), g.edges.end(), [](const Edge& x, const Edge& y) {
        return std::tie(x.from, x.to, x.label) < std::tie(y.from, y.to, y.label);
    });
    g.base = g.index_of(base_form());
    return g;
}

std::vector<TwistWord> coset_representatives() {
    return {w("1"), w("C5"), w("C4"), w("C4 C3"), w("C4 C3 C2"), w("C4 C3 C2 C1")};
}

TwistWord representative(const TwistWord& word) {
    QuadraticForm q = base_form();
    const TwistWord flat = word.expanded(G2);
    for (const auto& s : flat.factors()) {
        if (s.kind != SymbolKind::C) throw Error("representative: word must be over C1..C5");
        if (s.exponent % 2 != 0) q = act_form(q, c_mod2(s.index));
    }
    for (const auto& rep : coset_representatives())
        if (act_form(base_form(), evaluate_mod2(rep, G2)) == q) return rep;
    throw Error("no coset representative for " + word.to_string());
}

std::vector<TableEntry> schreier_table() {
    static const std::array<std::array<const char*, 5>, 6> printed = {{
        {"1", "1", "1", "1", "1"},
        {"C1", "C2", "C3", "1", "D5"},
        {"C1", "C2", "1", "D4", "D5^-1 X4 D5"},
        {"C1", "1", "C3^-1 D4 C3", "C3", "D5^-1 X4 D5"},
        {"1", "C2^-1 C3^-1 D4 C3 C2", "C2", "C3", "D5^-1 X4 D5"},
        {"C1^-1 C2^-1 C3^-1 D4 C3 C2 C1", "C1", "C2", "C3", "D5^-1 X4 D5"},
    }};
    const QuadraticForm q = base_form();
    std::vector<TableEntry> out;
    const auto reps = coset_representatives();
    for (std::size_t r = 0; r < reps.size(); ++r)
        for (int i = 1; i <= 5; ++i) {
            TwistWord sg = reps[r] * TwistWord::letter(SymbolKind::C, i);
            TwistWord gen = sg * representative(sg).inverse();
            TwistWord pub = w(printed[r][static_cast<std::size_t>(i - 1)]);
            out.push_back({reps[r], i, gen, pub, evaluate(gen, G2) == evaluate(pub, G2),
                           is_spin_member(gen, q, G2).member});
        }
    return out;
}

std::vector<RelationCheck> verify_presentation_sp4() {
    std::vector<RelationCheck> out;
    auto eq = [](const std::string& a, const std::string& b) { return evaluate(w(a), G2) == evaluate(w(b), G2); };
    auto c = [](int i) { return "C" + std::to_string(i); };
    for (int i = 1; i <= 5; ++i)
        for (int j = i + 2; j <= 5; ++j)
            out.push_back({"commute " + c(i) + " " + c(j), eq(c(i) + " " + c(j), c(j) + " " + c(i))});
    for (int i = 1; i <= 4; ++i)
        out.push_back({"braid " + c(i) + " " + c(i + 1),
                       eq(c(i) + " " + c(i + 1) + " " + c(i), c(i + 1) + " " + c(i) + " " + c(i + 1))});
    out.push_back({"(C1 C2 C3 C4 C5)^6 = 1", evaluate(w("(C1 C2 C3 C4 C5)^6"), G2).is_identity()});
    const std::string delta = "C1 C2 C3 C4 C5 C5 C4 C3 C2 C1";
    const SymplecticMatrix d = evaluate(w(delta), G2);
    bool minus_identity = true;
    for (int r = 0; r < 4; ++r)
        for (int col = 0; col < 4; ++col) minus_identity = minus_identity && d.at(r, col) == (r == col ? -1 : 0);
    out.push_back({"(" + delta + ") = -I", minus_identity});
    out.push_back({"(" + delta + ")^2 = 1", (d * d).is_identity()});
    for (int i = 1; i <= 5; ++i)
        out.push_back({"(" + delta + ") commutes with " + c(i), eq("(" + delta + ") " + c(i), c(i) + " (" + delta + ")")});
    return out;
}

}  // namespace spinmcg::genus2
