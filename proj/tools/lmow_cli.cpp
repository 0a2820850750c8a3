#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "lmow/acceptance.hpp"
#include "lmow/json_io.hpp"

using namespace lmow;

namespace {

json read_json_arg(const std::string& arg) {
    // Inline JSON when it parses; otherwise a file path ("-" = stdin).
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[' || arg[0] == '"'))
        return json::parse(arg);
    std::ostringstream buf;
    if (arg == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(arg);
        if (!in)
            throw structure_error("cannot open input file: " + arg);
        buf << in.rdbuf();
    }
    return json::parse(buf.str());
}

struct Output {
    std::string path;
    bool pretty = false;

    void emit(const json& j) const {
        std::string text = pretty ? j.dump(2) : j.dump();
        if (path.empty()) {
            std::cout << text << "\n";
        } else {
            std::ofstream out(path);
            if (!out)
                throw structure_error("cannot open output file: " + path);
            out << text << "\n";
        }
    }
};

json series_to_json(const TruncatedSeries& s) {
    json coeffs = json::array();
    for (int k = 0; k <= s.order(); ++k)
        coeffs.push_back(s.coeff(k).str());
    return json{{"order", s.order()}, {"coeffs", coeffs}, {"text", s.str()}};
}

TruncatedSeries series_from_coeffs_json(const json& j, int order) {
    std::vector<Rational> coeffs;
    for (const auto& c : j)
        coeffs.push_back(rational_from_json(c));
    if (order < 0)
        order = (int)coeffs.size() - 1;
    return TruncatedSeries::from_coeffs(std::move(coeffs), order);
}

SymmetricLaurent alexander_arg(const std::string& inline_json, const std::string& knot) {
    if (!inline_json.empty() && !knot.empty())
        throw structure_error("give either an Alexander polynomial or a knot name, not both");
    if (!knot.empty())
        return alexander_from_seifert(knot_by_name(knot).seifert);
    if (inline_json.empty())
        throw structure_error("missing input polynomial");
    return validate_manifold_alexander(laurent_from_json(read_json_arg(inline_json)));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Diagram algebras and the degree-truncated universal invariant "
                 "of 3-manifolds with first homology Z"};
    app.require_subcommand(1);

    Output out;
    app.add_option("--output", out.path, "write the JSON result to a file");
    app.add_flag("--pretty", out.pretty, "pretty-print JSON output");

    // ---- series ----
    auto* series = app.add_subcommand("series", "truncated power series utilities");
    series->require_subcommand(1);

    int bc_max = 4;
    auto* bcoeffs = series->add_subcommand("bcoeffs", "wheel coefficients b_{2m}");
    bcoeffs->add_option("--max", bc_max, "largest degree 2m")->required();

    int nu_order = 4;
    auto* nu = series->add_subcommand("nu", "h/(e^{h/2}-e^{-h/2}) as a series");
    nu->add_option("--order", nu_order, "truncation order")->required();

    std::string series_coeffs;
    int series_order = -1;
    auto* slog = series->add_subcommand("log", "logarithm of a series with constant term 1");
    slog->add_option("--coeffs", series_coeffs, "coefficient list JSON")->required();
    slog->add_option("--order", series_order, "truncation order");
    auto* sexp = series->add_subcommand("exp", "exponential of a series with constant term 0");
    sexp->add_option("--coeffs", series_coeffs, "coefficient list JSON")->required();
    sexp->add_option("--order", series_order, "truncation order");

    // ---- knot ----
    auto* knot = app.add_subcommand("knot", "knot polynomial computations");
    knot->require_subcommand(1);
    std::string pd_file, seifert_file, knot_name;

    auto* kalex = knot->add_subcommand("alexander", "Alexander polynomial of a knot");
    kalex->add_option("--pd", pd_file, "PD code JSON file");
    kalex->add_option("--seifert", seifert_file, "Seifert matrix JSON file");
    kalex->add_option("--knot", knot_name, "bundled knot name");

    auto* kconway = knot->add_subcommand("conway", "Conway polynomial from a PD code");
    kconway->add_option("--pd", pd_file, "PD code JSON file");
    kconway->add_option("--knot", knot_name, "bundled knot name");

    auto* klist = knot->add_subcommand("list", "bundled knot table");

    // ---- diagram ----
    auto* diagram = app.add_subcommand("diagram", "operations on uni-trivalent diagrams");
    diagram->require_subcommand(1);
    std::string diagram_input;
    int iota_m = 0;

    auto* dclose = diagram->add_subcommand("close", "sum over all leg pairings");
    dclose->add_option("--input", diagram_input, "diagram JSON")->required();
    auto* diota = diagram->add_subcommand("iota", "contraction map");
    diota->add_option("--input", diagram_input, "diagram JSON")->required();
    diota->add_option("--m", iota_m, "contraction degree")->required();
    auto* dpwh = diagram->add_subcommand("pwh", "projection onto the wheel part");
    dpwh->add_option("--input", diagram_input, "diagram JSON")->required();
    auto* dweval = diagram->add_subcommand("weval", "edge-resolution weight polynomial");
    dweval->add_option("--input", diagram_input, "diagram JSON")->required();
    auto* dwc = diagram->add_subcommand("wc", "Conway weight system per degree");
    dwc->add_option("--input", diagram_input, "diagram JSON")->required();
    auto* dcanon = diagram->add_subcommand("canon", "canonical form with sign");
    dcanon->add_option("--input", diagram_input, "diagram JSON")->required();

    // ---- space ----
    auto* space = app.add_subcommand("space", "trivalent-graph quotient spaces");
    space->require_subcommand(1);
    int space_degree = 1;
    auto* sdim = space->add_subcommand("dim", "ambient size, relation rank, dimension");
    sdim->add_option("--degree", space_degree, "diagram degree (0..4)")->required();

    // ---- wheels ----
    auto* wheels_cmd = app.add_subcommand("wheels", "wheel algebra and Alexander series");
    wheels_cmd->require_subcommand(1);
    std::string alex_arg, wheels_knot, aprime_arg;
    int wheels_max = 4, wheels_span = 1;

    auto* walpha = wheels_cmd->add_subcommand("alpha", "alpha coefficients 2b + a'");
    walpha->add_option("--alexander", alex_arg, "Alexander polynomial JSON");
    walpha->add_option("--knot", wheels_knot, "bundled knot name");
    walpha->add_option("--max", wheels_max, "largest wheel size")->required();

    auto* waprime = wheels_cmd->add_subcommand("aprime", "a' coefficients of -1/2 log A(e^h)");
    waprime->add_option("--alexander", alex_arg, "Alexander polynomial JSON");
    waprime->add_option("--knot", wheels_knot, "bundled knot name");
    waprime->add_option("--max", wheels_max, "largest degree")->required();

    auto* wfrom = wheels_cmd->add_subcommand("fromaprime", "Alexander polynomial from a' data");
    wfrom->add_option("--aprime", aprime_arg, "a' coefficient map JSON")->required();
    wfrom->add_option("--span", wheels_span, "span bound")->required();

    // ---- lmo ----
    auto* lmo_cmd = app.add_subcommand("lmo", "degree-truncated universal invariant");
    lmo_cmd->require_subcommand(1);
    std::string lmo_alex, lmo_knot, lmo_input;
    int lmo_degree = 4, lmo_span = 1;

    auto* lforward = lmo_cmd->add_subcommand("forward", "invariant from an Alexander polynomial");
    lforward->add_option("--alexander", lmo_alex, "Alexander polynomial JSON");
    lforward->add_option("--knot", lmo_knot, "bundled knot name (0-surgery)");
    lforward->add_option("--degree", lmo_degree, "truncation degree (0..4)")->required();

    auto* linvert = lmo_cmd->add_subcommand("invert", "Alexander polynomial from the invariant");
    linvert->add_option("--input", lmo_input, "invariant JSON (file or inline)")->required();
    linvert->add_option("--degree", lmo_degree, "truncation degree")->required();
    linvert->add_option("--span", lmo_span, "span bound for the reconstruction")->required();

    // ---- verify ----
    auto* verify = app.add_subcommand("verify", "run the acceptance criteria");

    // Let --output / --pretty appear after the subcommand as well.
    std::function<void(CLI::App*)> allow_fallthrough = [&](CLI::App* a) {
        a->fallthrough();
        for (auto* sub : a->get_subcommands({}))
            allow_fallthrough(sub);
    };
    allow_fallthrough(&app);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (bcoeffs->parsed()) {
            json j = json::object();
            for (const auto& [m, v] : b_coefficients(bc_max))
                j[std::to_string(m)] = v.str();
            out.emit(j);
        } else if (nu->parsed()) {
            out.emit(series_to_json(nu_series(nu_order)));
        } else if (slog->parsed()) {
            out.emit(series_to_json(
                series_log(series_from_coeffs_json(read_json_arg(series_coeffs), series_order))));
        } else if (sexp->parsed()) {
            out.emit(series_to_json(
                series_exp(series_from_coeffs_json(read_json_arg(series_coeffs), series_order))));
        } else if (kalex->parsed()) {
            SymmetricLaurent a;
            if (!knot_name.empty())
                a = alexander_from_seifert(knot_by_name(knot_name).seifert);
            else if (!seifert_file.empty())
                a = alexander_from_seifert(seifert_from_json(read_json_arg(seifert_file)));
            else if (!pd_file.empty())
                a = conway_to_alexander(conway_from_pd(pd_from_json(read_json_arg(pd_file))));
            else
                throw structure_error("knot alexander: give --pd, --seifert or --knot");
            json j = to_json(a);
            j["text"] = a.str();
            out.emit(j);
        } else if (kconway->parsed()) {
            PDCode pd;
            if (!knot_name.empty())
                pd = knot_by_name(knot_name).pd;
            else if (!pd_file.empty())
                pd = pd_from_json(read_json_arg(pd_file));
            else
                throw structure_error("knot conway: give --pd or --knot");
            ConwayPolynomial c = conway_from_pd(pd);
            json coeffs = json::array();
            for (int k = 0; k <= c.degree(); ++k)
                coeffs.push_back(c.coeff(k).str());
            out.emit(json{{"coeffs", coeffs}, {"text", c.str()}});
        } else if (klist->parsed()) {
            json j = json::array();
            for (const auto& e : knot_table())
                j.push_back(e.name);
            out.emit(j);
        } else if (dclose->parsed()) {
            out.emit(to_json(close(diagram_from_json(read_json_arg(diagram_input)))));
        } else if (diota->parsed()) {
            out.emit(to_json(iota(diagram_from_json(read_json_arg(diagram_input)), iota_m)));
        } else if (dpwh->parsed()) {
            DiagramCombination x = DiagramCombination::single(
                diagram_from_json(read_json_arg(diagram_input)), Rational(1));
            out.emit(to_json(p_wh(x)));
        } else if (dweval->parsed()) {
            CPolynomial w = w_eval(DiagramCombination::single(
                diagram_from_json(read_json_arg(diagram_input)), Rational(1)));
            out.emit(json{{"w", w.str()}});
        } else if (dwc->parsed()) {
            auto v = w_conway(DiagramCombination::single(
                diagram_from_json(read_json_arg(diagram_input)), Rational(1)));
            json j = json::object();
            for (const auto& [deg, val] : v)
                j[std::to_string(deg)] = val.str();
            out.emit(j);
        } else if (dcanon->parsed()) {
            CanonResult r = canonicalize(diagram_from_json(read_json_arg(diagram_input)));
            if (r.zero) {
                out.emit(json{{"zero", true}});
            } else {
                out.emit(json{{"zero", false},
                              {"sign", r.sign},
                              {"degree", r.canon.degree()},
                              {"legs", r.canon.legs()},
                              {"diagram", to_json(r.canon.repr)}});
            }
        } else if (sdim->parsed()) {
            const QuotientSpace& qs = quotient_space(space_degree);
            out.emit(json{{"degree", space_degree},
                          {"ambient", qs.ambient_dim()},
                          {"rank", qs.rank()},
                          {"dim", qs.quotient_dim()}});
        } else if (walpha->parsed()) {
            out.emit(
                to_json(alpha_from_alexander(alexander_arg(alex_arg, wheels_knot), wheels_max)));
        } else if (waprime->parsed()) {
            json j = json::object();
            for (const auto& [w, v] :
                 a_prime_from_alexander(alexander_arg(alex_arg, wheels_knot), wheels_max))
                j[std::to_string(w)] = v.str();
            out.emit(j);
        } else if (wfrom->parsed()) {
            std::map<int, Rational> coeffs;
            json j = read_json_arg(aprime_arg);
            for (auto it = j.begin(); it != j.end(); ++it)
                coeffs[std::stoi(it.key())] = rational_from_json(it.value());
            SymmetricLaurent a = alexander_from_a_prime(coeffs, wheels_span);
            json r = to_json(a);
            r["text"] = a.str();
            out.emit(r);
        } else if (lforward->parsed()) {
            SymmetricLaurent a = alexander_arg(lmo_alex, lmo_knot);
            LMOElement z = lmo_forward(a, lmo_degree);
            json j = to_json(z);
            j["alexander"] = to_json(a);
            AlphaSeries alpha = alpha_from_alexander(a, 2 * lmo_degree);
            j["alpha"] = to_json(alpha);
            j["wheels"] = to_json(exp_disjoint(alpha, 2 * lmo_degree));
            json coords = json::object();
            for (int m = 1; m <= lmo_degree; ++m) {
                json vec = json::array();
                for (const auto& v : quotient_space(m).coordinates(z.part(m)))
                    vec.push_back(v.str());
                coords[std::to_string(m)] = vec;
            }
            j["coordinates"] = coords;
            out.emit(j);
        } else if (linvert->parsed()) {
            LMOElement z = lmo_from_json(read_json_arg(lmo_input));
            SymmetricLaurent a = lmo_invert(z, lmo_degree, lmo_span);
            json j = to_json(a);
            j["text"] = a.str();
            out.emit(j);
        } else if (verify->parsed()) {
            auto results = run_acceptance();
            int failed = 0;
            for (const auto& r : results) {
                std::printf("%s  %2d  %-36s %7.2fs  %s\n", r.passed ? "PASS" : "FAIL",
                            r.number, r.name.c_str(), r.seconds, r.detail.c_str());
                failed += !r.passed;
            }
            std::printf("%d/%zu criteria passed\n", (int)results.size() - failed,
                        results.size());
            return failed ? 1 : 0;
        }
    } catch (const structure_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
