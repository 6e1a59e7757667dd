#include "spinmcg/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <regex>
#include <sstream>

#include "spinmcg/errors.hpp"
#include "spinmcg/group_bfs.hpp"
#include "spinmcg/json_io.hpp"
#include "spinmcg/torelli.hpp"

namespace spinmcg::cli {

namespace {

using nlohmann::json;

struct Options {
    int genus = 2;
    std::string form = "q1";
    bool json = false;
    std::uint64_t cap = 0;
    std::vector<std::string> words;
    std::string file;
    std::string sigma;
    std::string ff;
    bool mod2 = false;
};

std::string joined(const std::vector<std::string>& parts) {
    std::string s;
    for (const auto& p : parts) s += (s.empty() ? "" : " ") + p;
    return s;
}

QuadraticForm form_of(const Options& o) {
    const Genus g(o.genus);
    if (o.form == "q0") return QuadraticForm::q0(g);
    if (o.form == "q1") return QuadraticForm::q1(g);
    return QuadraticForm::parse(g, o.form);
}

int cmd_eval(const Options& o, std::ostream& out) {
    const Genus g(o.genus);
    const TwistWord w = parse_word(joined(o.words), g);
    if (o.mod2) {
        const auto m = evaluate_mod2(w, g);
        if (o.json) out << json{{"word", w.to_string()}, {"matrix", to_json(m)}}.dump() << "\n";
        else out << m.to_string();
    } else {
        const auto m = evaluate(w, g);
        if (o.json) out << json{{"word", w.to_string()}, {"matrix", to_json(m)}}.dump() << "\n";
        else out << m.to_string();
    }
    return 0;
}

int cmd_member(const Options& o, std::ostream& out) {
    const Genus g(o.genus);
    const auto r = is_spin_member(parse_word(joined(o.words), g), form_of(o), g);
    if (o.json) out << to_json(r).dump() << "\n";
    else if (r.member) out << "member\n";
    else out << "not a member: q changes on " << r.failing_class->to_symbolic() << "\n";
    return r.member ? 0 : 1;
}

int cmd_extendable(const Options& o, std::ostream& out) {
    const Genus g(o.genus);
    const bool e = is_extendable_k3_sum(parse_word(joined(o.words), g), g);
    if (o.json) out << json{{"extendable", e}}.dump() << "\n";
    else out << (e ? "extendable" : "not extendable") << "\n";
    return e ? 0 : 1;
}

int cmd_witness(const Options& o, std::ostream& out) {
    const auto w = non_preserving_witness(form_of(o));
    if (!w) {
        out << (o.json ? "null" : "no witness: every nonzero class has q = 1") << "\n";
        return 1;
    }
    if (o.json) out << json{{"class", w->z.to_string()}, {"symbolic", w->z.to_symbolic()}, {"transvection", to_json(w->transvection)}}.dump() << "\n";
    else out << "z = " << w->z.to_symbolic() << " (q(z) = 0)\n" << w->transvection.to_string();
    return 0;
}

int cmd_certify(const Options& o, std::ostream& out) {
    const Genus g(o.genus);
    const int cap = o.cap ? static_cast<int>(o.cap) : kDefaultEnumerationCap;
    const auto c = certify_o_q1_generation(g, cap);
    if (o.json) {
        out << to_json(c).dump(1) << "\n";
        return c.ok() ? 0 : 1;
    }
    out << "genus " << g.value() << "\n";
    out << "image dictionary: " << c.phi2.entries.size() << " entries, " << (c.phi2.ok() ? "all match" : "mismatch") << "\n";
    for (const auto& e : c.phi2.entries) out << "  " << std::left << std::setw(6) << e.word << " -> T_" << e.expected.to_symbolic() << (e.ok ? "" : "  MISMATCH") << "\n";
    out << "base classes: " << c.base.size() << "\n";
    out << "classes with q1 = 1: " << c.lambda_count << ", traces " << (c.traces_ok ? "replay to the base" : "FAIL") << ", longest " << c.max_trace_length << "\n";
    out << "conjugation identity: " << c.conjugation_checks << (c.conjugation_exhaustive ? " pairs (exhaustive), " : " pairs (used by traces), ")
        << (c.conjugation_ok ? "ok" : "FAIL") << "\n";
    out << (c.ok() ? "certified" : "NOT certified") << "\n";
    return c.ok() ? 0 : 1;
}

int cmd_orders(const Options& o, std::ostream& out) {
    const Genus g(o.genus);
    const std::uint64_t cap = o.cap ? o.cap : 20'000'000;
    std::vector<SymplecticMatrixF2> all, gg;
    for (int i = 1; i <= 2 * g.value() + 1; ++i) all.push_back(evaluate_mod2(TwistWord::letter(SymbolKind::C, i), g));
    for (int i = 4; i <= 2 * g.value() - 2; i += 2) all.push_back(evaluate_mod2(TwistWord::letter(SymbolKind::B, i), g));
    for (const auto& w : gg_generators(g)) gg.push_back(evaluate_mod2(w, g));
    const std::uint64_t full = group_order_bfs(all, cap);
    const std::uint64_t orbit = form_orbit(all, QuadraticForm::q1(g)).size();
    const std::uint64_t sub = group_order_bfs(gg, cap);
    const bool ok = full % orbit == 0 && full / orbit == sub;
    if (o.json) {
        out << json{{"genus", g.value()}, {"full", full}, {"orbit", orbit}, {"spin", sub}, {"ok", ok}}.dump() << "\n";
    } else {
        out << "|<Phi2(C, B)>| = " << full << "\n";
        out << "orbit of q1 = " << orbit << "\n";
        out << "|<Phi2(G_g)>| = " << sub << "\n";
        out << full << " / " << orbit << (ok ? " = " : " != ") << sub << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_lambda(const Options& o, std::ostream& out) {
    const QuadraticForm q = form_of(o);
    const int cap = o.cap ? static_cast<int>(o.cap) : kDefaultEnumerationCap;
    const auto zs = enumerate_lambda(q, cap);
    const bool traced = q == QuadraticForm::q1(q.genus());
    if (o.json) {
        json j = json::array();
        for (auto z : zs) j.push_back(z.to_string());
        out << json{{"arf", arf(q)}, {"count", zs.size()}, {"classes", j}}.dump() << "\n";
        return 0;
    }
    out << "|Lambda(q)| = " << zs.size() << " (arf " << arf(q) << ")\n";
    for (auto z : zs) {
        out << z.to_symbolic();
        if (traced) {
            for (const auto& s : lambda_reduce(z).steps) out << " -> " << s.after.to_symbolic();
        }
        out << "\n";
    }
    return 0;
}

torelli::TackSequence tacks_of(const std::string& text, Genus g, std::vector<int>* beta_indices) {
    if (text.find_first_not_of("01") == std::string::npos) return torelli::TackSequence::from_string(g, text);
    std::vector<int> idx;
    bool beta = false;
    static const std::regex tok(R"(beta|β|\d+)");
    for (auto it = std::sregex_iterator(text.begin(), text.end(), tok); it != std::sregex_iterator(); ++it) {
        const std::string t = it->str();
        if (t == "beta" || t == "β" || t == "0") {
            idx.push_back(0);
            beta = true;
        } else {
            idx.push_back(std::stoi(t));
        }
    }
    if (beta) {
        *beta_indices = idx;
        return torelli::TackSequence(g, 0);
    }
    return torelli::TackSequence::from_indices(g, idx);
}

void print_node(const torelli::CertNode& n, int depth, std::ostream& out) {
    const std::string pad(static_cast<std::size_t>(2 * depth), ' ');
    const char* op = n.op == torelli::CertNode::Op::Leaf ? "leaf" : n.op == torelli::CertNode::Op::Conj ? "conj" : "prod";
    out << pad << op;
    if (!n.rule.empty()) out << " " << n.rule;
    if (n.tacks) out << " " << n.tacks->to_bracket_string();
    if (n.inverse) out << " (inverted)";
    if (n.op != torelli::CertNode::Op::Prod && !n.word.empty()) out << (n.op == torelli::CertNode::Op::Conj ? " by " : ": ") << n.word.to_string();
    out << "\n";
    for (const auto& s : n.steps)
        out << pad << "  | " << s.rule << " " << s.conjugator.to_string() << ": " << s.before.to_bracket_string() << " -> " << s.after.to_bracket_string() << "\n";
    for (const auto& c : n.children) print_node(c, depth + 1, out);
}

int cmd_rewrite(const Options& o, std::ostream& out) {
    const Genus g(o.genus);
    std::vector<int> beta;
    const auto s = tacks_of(joined(o.words), g, &beta);
    if (!beta.empty()) {
        const auto b = torelli::beta_convert(beta, g);
        if (o.json) out << json{{"requiresGeometry", true}, {"conjugatorTemplate", b.conjugator_template}}.dump() << "\n";
        else out << "requires-geometry\nconjugator template: " << b.conjugator_template << "\n";
        return 1;
    }
    const auto c = torelli::factorize(s);
    const auto rep = torelli::verify_certificate(c);
    if (o.json) {
        out << torelli::to_json(c).dump(1) << "\n";
    } else {
        print_node(c.root, 0, out);
        out << (rep.ok ? "verified" : "verification FAILED") << ": " << rep.nodes << " nodes, flattened length " << c.root.flatten().size() << "\n";
        for (const auto& f : rep.failures) out << "  " << f << "\n";
    }
    return rep.ok ? 0 : 1;
}

int cmd_verify_cert(const Options& o, std::ostream& out) {
    json j;
    if (o.file == "-") {
        j = json::parse(std::cin);
    } else {
        std::ifstream in(o.file);
        if (!in) throw Error("cannot open " + o.file);
        j = json::parse(in);
    }
    const auto rep = torelli::verify_certificate(torelli::certificate_from_json(j));
    if (o.json) {
        out << json{{"ok", rep.ok}, {"nodes", rep.nodes}, {"failures", rep.failures}}.dump() << "\n";
    } else {
        out << (rep.ok ? "pass" : "fail") << " (" << rep.nodes << " nodes)\n";
        for (const auto& f : rep.failures) out << "  " << f << "\n";
    }
    return rep.ok ? 0 : 1;
}

int cmd_table1(const Options& o, std::ostream& out) {
    const auto t = genus2::schreier_table();
    std::size_t good = 0;
    for (const auto& e : t) good += e.matrix_equal;
    if (o.json) {
        out << genus2::to_json(t).dump(1) << "\n";
        return good == t.size() ? 0 : 1;
    }
    std::size_t w[4] = {3, 6, 8, 9};
    for (const auto& e : t) {
        w[0] = std::max(w[0], e.row.to_string().size());
        w[2] = std::max(w[2], e.computed.to_string().size());
        w[3] = std::max(w[3], e.published.to_string().size());
    }
    auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d, const std::string& s) {
        out << std::left << std::setw(static_cast<int>(w[0])) << a << "  " << std::setw(static_cast<int>(w[1])) << b << "  "
            << std::setw(static_cast<int>(w[2])) << c << "  " << std::setw(static_cast<int>(w[3])) << d << "  " << s << "\n";
    };
    line("row", "column", "computed", "published", "status");
    for (const auto& e : t)
        line(e.row.to_string(), "C" + std::to_string(e.column), e.computed.to_string(), e.published.to_string(),
             e.matrix_equal ? "matrix-verified" : "mismatch");
    out << good << "/" << t.size() << " matrix-verified\n";
    return good == t.size() ? 0 : 1;
}

int cmd_coset_graph(const Options& o, std::ostream& out) {
    const auto cg = genus2::coset_graph();
    if (o.json) {
        out << genus2::to_json(cg).dump(1) << "\n";
        return cg.is_path() ? 0 : 1;
    }
    for (std::size_t v = 0; v < cg.vertices.size(); ++v) {
        out << cg.vertices[v].to_string() << (v == cg.base ? " (base)" : "") << ":";
        for (const auto& e : cg.edges) {
            if (e.from == v) out << " C" << e.label << "->" << cg.vertices[e.to].to_string();
            else if (e.to == v) out << " C" << e.label << "->" << cg.vertices[e.from].to_string();
        }
        out << "\n";
    }
    out << (cg.is_path() ? "path" : "not a path") << "\n";
    return cg.is_path() ? 0 : 1;
}

int cmd_arf(const Options& o, std::ostream& out) {
    int a;
    if (!o.sigma.empty() || !o.ff.empty()) {
        if (o.sigma.empty() || o.ff.empty()) throw Error("arf needs both --sigma and --ff");
        a = arf_from_signature(Integer(o.sigma), Integer(o.ff));
    } else {
        a = arf(form_of(o));
    }
    if (o.json) out << json{{"arf", a}}.dump() << "\n";
    else out << a << "\n";
    return 0;
}

int cmd_catalog(const Options& o, std::ostream& out) {
    const auto s = surface_catalog(joined(o.words));
    const auto a = s.arf();
    if (o.json) {
        out << to_json(s).dump() << "\n";
    } else {
        out << s.name << ": sigma " << s.sigma << ", F.F " << s.self_intersection << ", genus " << s.genus << ", arf "
            << (a ? std::to_string(*a) : std::string("undefined (not characteristic)")) << "\n";
    }
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"spin mapping class group computations"};
    app.require_subcommand(1);
    Options o;
    auto genus = [&](CLI::App* c, bool required = true) {
        auto* opt = c->add_option("-g,--genus", o.genus, "genus")->check(CLI::Range(1, 31));
        if (required) opt->required();
    };
    auto form = [&](CLI::App* c) { c->add_option("--form", o.form, "q0, q1 or basis values such as [1,1,0,0]"); };
    auto words = [&](CLI::App* c, const char* what) { c->add_option("word", o.words, what)->required(); };
    std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> cmds;
    auto add = [&](const char* name, const char* desc, int (*fn)(const Options&, std::ostream&)) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_flag("--json", o.json, "JSON output");
        cmds.emplace_back(c, fn);
        return c;
    };

    auto* c = add("eval", "image of a twist word in Sp(2g, Z)", cmd_eval);
    genus(c);
    words(c, "twist word");
    c->add_flag("--mod2", o.mod2, "reduce mod 2");
    c = add("member", "membership in the spin subgroup of a form", cmd_member);
    genus(c);
    form(c);
    words(c, "twist word");
    c = add("extendable", "extendability over the cubic connected sum", cmd_extendable);
    genus(c);
    words(c, "twist word");
    c = add("witness", "a transvection that moves the form", cmd_witness);
    genus(c);
    form(c);
    c = add("certify", "generation certificate for the odd orthogonal group", cmd_certify);
    genus(c);
    c->add_option("--cap", o.cap, "largest genus to enumerate");
    c = add("orders", "group orders by breadth-first search", cmd_orders);
    genus(c);
    c->add_option("--cap", o.cap, "element limit");
    c = add("lambda", "classes with q = 1", cmd_lambda);
    genus(c);
    form(c);
    c->add_option("--cap", o.cap, "largest genus to enumerate");
    c = add("rewrite", "factorize an odd subchain map", cmd_rewrite);
    genus(c);
    words(c, "tack bits (11110000) or chain indices ([1,2,3,4], beta allowed)");
    c = add("verify-cert", "check a factorization certificate", cmd_verify_cert);
    c->add_option("file", o.file, "certificate JSON, - for stdin")->required();
    add("table1", "genus-2 Schreier generators against the printed table", cmd_table1);
    add("coset-graph", "action of C1..C5 on the odd forms of genus 2", cmd_coset_graph);
    c = add("arf", "Arf invariant of a form or from signature data", cmd_arf);
    genus(c, false);
    form(c);
    c->add_option("--sigma", o.sigma, "signature of the 4-manifold");
    c->add_option("--ff", o.ff, "self-intersection of the surface");
    c = add("catalog", "knotted surface data", cmd_catalog);
    words(c, "cp2-Kd(<d>) or cp2-K3-sum(<g>)");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }
    try {
        for (auto& [sub, fn] : cmds)
            if (sub->parsed()) return fn(o, out);
    } catch (const CapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
    return run(args, out, err);
}

}  // namespace spinmcg::cli
