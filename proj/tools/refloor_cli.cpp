#include <refloor/refloor.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>

using namespace refloor;

namespace {

enum Exit { Ok = 0, Usage = 1, Domain = 2, BudgetExceeded = 3, VerificationFailed = 4 };

struct Globals {
    bool pretty = false;
    std::uint64_t budget = default_budget;
    unsigned threads = 1;
};

LatticePolygon load_polygon(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (arg[first] == '{' || arg[first] == '[')) return polygon_from_string(arg);
    std::ifstream in(arg);
    if (!in) throw CLI::ValidationError("polygon", "cannot open file '" + arg + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return polygon_from_string(buf.str());
}

void emit(const json& j, const Globals& g) { std::cout << (g.pretty ? j.dump(2) : j.dump()) << "\n"; }

std::string join(const std::vector<long>& v) {
    std::string s;
    for (long x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
    return s;
}

int cmd_info(const LatticePolygon& p, const Globals& g) {
    auto d = h_transverse_data(p);
    if (g.pretty) {
        std::cout << "a = " << d.a << "\ne_top = " << d.e_top << "\ne_bot = " << d.e_bot << "\nL = {" << join(d.L)
                  << "}\nR = {" << join(d.R) << "}\ny = " << d.y << "\nchi = " << d.chi << "\ninterior = " << d.interior
                  << "\nd_F = " << d.d_F << "\ns_max = " << d.s_max << "\n";
        for (const auto& [k, c] : d.n_k) std::cout << "n_" << k << " = " << c << "\n";
        return Ok;
    }
    emit(json{{"polygon", to_json(p)}, {"data", to_json(d)}}, g);
    return Ok;
}

int cmd_diagrams(const LatticePolygon& p, std::optional<long> max_codegree, bool exhaustive, const Globals& g) {
    auto d = h_transverse_data(p);
    EnumerationOptions opt{max_codegree, g.budget};
    auto classes = exhaustive ? enumerate_diagrams_exhaustive(d, opt) : enumerate_diagrams(d, opt);
    if (g.pretty) {
        std::cout << classes.size() << " classes\n";
        for (const auto& c : classes) {
            std::cout << "codeg " << c.codegree << "  deg " << c.degree << "  |Aut| " << c.aut << "  floors";
            for (const auto& f : c.diagram.floors) std::cout << " (" << f.ell << "," << f.r << "," << f.sources << "," << f.sinks << ")";
            std::cout << "  edges";
            for (const auto& e : c.diagram.edges) std::cout << " " << e.tail << "->" << e.head << ":" << e.weight;
            std::cout << "\n";
        }
        return Ok;
    }
    json list = json::array();
    for (const auto& c : classes) list.push_back(to_json(c));
    json out{{"polygon", to_json(p)}, {"count", classes.size()}, {"diagrams", list}};
    out["max_codegree"] = max_codegree ? json(*max_codegree) : json(nullptr);
    emit(out, g);
    return Ok;
}

int cmd_invariant(const LatticePolygon& p, long s, const std::optional<std::string>& pairing_text, std::optional<long> coeff,
                  const Globals& g) {
    auto d = h_transverse_data(p);
    std::optional<Pairing> pairing;
    if (pairing_text) {
        json pj;
        try {
            pj = json::parse(*pairing_text);
        } catch (const json::parse_error&) {
            throw CLI::ValidationError("--pairing", "not valid JSON");
        }
        pairing = pairing_from_json(pj);
    }
    EngineOptions opt{g.budget, g.threads};
    Pairing S = pairing ? *pairing : Pairing::standard(s);
    if (coeff) {
        BigInt c = invariant_coeff(d, s, *coeff, pairing, opt);
        if (g.pretty) std::cout << "<G(" << s << ")>_" << *coeff << " = " << c << "\n";
        else emit(json{{"polygon", to_json(p)}, {"s", s}, {"pairing", to_json(S)}, {"i", *coeff}, {"coefficient", to_decimal(c)}}, g);
        return Ok;
    }
    SymLaurent G = refined_invariant(d, s, pairing, opt);
    if (g.pretty) std::cout << "G(" << s << ") = " << G.pretty() << "\n";
    else emit(invariant_result_json(p, s, S, G), g);
    return Ok;
}

int cmd_star(const LatticePolygon& p, long s, const Globals& g) {
    auto d = h_transverse_data(p);
    TPoly star = star_invariant(d, s, std::nullopt, {g.budget, g.threads});
    if (g.pretty) std::cout << "G*(" << s << ") = " << star.pretty() << "\n";
    else emit(json{{"polygon", to_json(p)}, {"s", s}, {"pairing", to_json(Pairing::standard(s))}, {"G_star", to_json(star)}}, g);
    return Ok;
}

int cmd_universal(long i, bool singular, const Globals& g) {
    auto polys = singular ? universal_Q(i) : universal_P(i);
    const std::string name = singular ? "Q_" : "P_";
    json lines = json::array(), list = json::array();
    for (std::size_t k = 0; k < polys.size(); ++k) {
        std::string line = name + std::to_string(k) + " = " + polys[k].pretty_factored();
        if (g.pretty) std::cout << line << "\n";
        lines.push_back(line);
        list.push_back(to_json(polys[k]));
    }
    if (!g.pretty) emit(json{{"lines", lines}, {"polynomials", list}, {"singular", singular}}, g);
    return Ok;
}

int cmd_verify(const LatticePolygon& p, long s, long i, const Globals& g) {
    auto d = h_transverse_data(p);
    auto rep = verify_universal(p, d, s, i, {g.budget, g.threads});
    if (g.pretty) {
        std::cout << "<G(" << s << ")>_" << i << " = " << rep.enumerated << "\n"
                  << rep.polynomial << "_" << i << " = " << rep.formula << " = " << rep.universal << "\n"
                  << "equal: " << (rep.equal ? "yes" : "no") << "\n"
                  << "hypotheses (" << to_string(rep.hypotheses.theorem) << "): " << (rep.hypotheses_hold() ? "satisfied" : "not satisfied")
                  << "\n";
        for (const auto& f : rep.hypotheses.failures()) std::cout << "  fails: " << f << "\n";
    } else {
        emit(json{{"polygon", to_json(p)}, {"report", to_json(rep)}}, g);
    }
    return rep.hard_failure() ? VerificationFailed : Ok;
}

int cmd_lemmas(std::optional<long> max, const Globals& g) {
    auto results = run_lemma_suite(max ? LemmaBounds::capped(*max) : LemmaBounds{});
    bool all = true;
    json list = json::array();
    for (const auto& r : results) {
        all = all && r.passed;
        if (g.pretty) std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << (r.detail.empty() ? "" : "  [" + r.detail + "]") << "\n";
        list.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    }
    if (!g.pretty) emit(json{{"results", list}, {"all_passed", all}}, g);
    return all ? Ok : VerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Refined floor-diagram invariants of h-transverse lattice polygons"};
    app.require_subcommand(1);
    Globals g;
    if (const char* env = std::getenv("REFINED_FLOOR_BUDGET")) {
        try {
            g.budget = std::stoull(env);
        } catch (...) {
            std::cerr << "error: REFINED_FLOOR_BUDGET must be a positive integer\n";
            return Usage;
        }
    }
    g.threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_flag("--pretty", g.pretty, "Human-readable output");
    app.add_option("--budget", g.budget, "Enumeration node budget")->check(CLI::PositiveNumber);
    app.add_option("--threads", g.threads, "Worker threads for marking sums")->check(CLI::PositiveNumber);

    std::string polygon;
    long s = 0, i = 0;
    std::optional<long> max_codegree, coeff, lemma_max;
    std::optional<std::string> pairing;
    bool singular = false, exhaustive = false;

    auto add_polygon = [&](CLI::App* sub) {
        sub->add_option("polygon", polygon, "Polygon JSON (inline or file path)")->required();
    };
    auto* info = app.add_subcommand("info", "Print the combinatorial data of a polygon");
    add_polygon(info);
    auto* diagrams = app.add_subcommand("diagrams", "List floor diagram classes");
    add_polygon(diagrams);
    diagrams->add_option("--max-codegree", max_codegree, "Only classes of codegree at most this")->check(CLI::NonNegativeNumber);
    diagrams->add_flag("--exhaustive", exhaustive, "Use the brute-force tree enumeration");
    auto* invariant = app.add_subcommand("invariant", "Refined invariant G(s) or one of its coefficients");
    add_polygon(invariant);
    invariant->add_option("--s", s, "Pairing order")->check(CLI::NonNegativeNumber);
    invariant->add_option("--pairing", pairing, "Explicit pairing as JSON, e.g. [[1,2],[5,6]]");
    invariant->add_option("--coeff", coeff, "Only the coefficient of this codegree")->check(CLI::NonNegativeNumber);
    auto* star = app.add_subcommand("star", "Star invariant G*(S) as a polynomial in t");
    add_polygon(star);
    star->add_option("--s", s, "Pairing order")->check(CLI::NonNegativeNumber);
    auto* universal = app.add_subcommand("universal", "Universal polynomials P_0..P_i (or Q_0..Q_i)");
    universal->add_option("--i", i, "Highest index")->required()->check(CLI::NonNegativeNumber);
    universal->add_flag("--singular", singular, "Print Q_i instead of P_i");
    auto* verify = app.add_subcommand("verify", "Compare an enumerated coefficient with the universal polynomial");
    add_polygon(verify);
    verify->add_option("--s", s, "Pairing order")->check(CLI::NonNegativeNumber);
    verify->add_option("--i", i, "Codegree")->required()->check(CLI::NonNegativeNumber);
    auto* lemmas = app.add_subcommand("lemmas", "Run the combinatorial property suites");
    lemmas->add_option("--max", lemma_max, "Cap on the suite bounds")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? Ok : Usage;
    }

    try {
        if (*info) return cmd_info(load_polygon(polygon), g);
        if (*diagrams) return cmd_diagrams(load_polygon(polygon), max_codegree, exhaustive, g);
        if (*invariant) return cmd_invariant(load_polygon(polygon), s, pairing, coeff, g);
        if (*star) return cmd_star(load_polygon(polygon), s, g);
        if (*universal) return cmd_universal(i, singular, g);
        if (*verify) return cmd_verify(load_polygon(polygon), s, i, g);
        if (*lemmas) return cmd_lemmas(lemma_max, g);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return Usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code() == ErrorCode::SearchBudgetExceeded ? BudgetExceeded : Domain;
    }
    return Usage;
}
