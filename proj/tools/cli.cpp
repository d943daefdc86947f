#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "torgr/error.hpp"
#include "torgr/verify.hpp"

namespace torgr::cli {

namespace {

struct DecOpts {
    int d = 2;
    int n = 0;
    std::vector<int> blocks;

    Decomposition get() const {
        if (!blocks.empty()) return Decomposition(blocks, d);
        if (n <= 0) throw InvalidParameter("give --n or --blocks");
        return Decomposition::unit(d, n);
    }
};

void add_dec(CLI::App* app, DecOpts& o) {
    app->add_option("--d", o.d, "Subspace dimension d")->capture_default_str();
    app->add_option("--n", o.n, "Number of unit blocks");
    app->add_option("--blocks", o.blocks, "Block sizes r_1,...,r_n")->delimiter(',');
}

struct BudgetOpts {
    std::optional<std::size_t> max_basis, max_spairs;
    std::optional<double> max_seconds;
    std::optional<unsigned> threads;
};

void add_budget(CLI::App* app, BudgetOpts& b) {
    app->add_option("--max-basis", b.max_basis, "Basis size cap");
    app->add_option("--max-spairs", b.max_spairs, "S-pair cap");
    app->add_option("--max-seconds", b.max_seconds, "Wall-clock cap per computation");
    app->add_option("--threads", b.threads, "Reduction threads");
}

// Defaults, then the TORGR_BUDGET environment variable, then flags.
BuchbergerOptions engine_options(const BudgetOpts& b, double default_seconds = 0) {
    BuchbergerOptions o;
    o.budget.max_seconds = default_seconds;
    if (const char* env = std::getenv("TORGR_BUDGET")) {
        std::stringstream ss(env);
        std::string item;
        while (std::getline(ss, item, ',')) {
            auto eq = item.find('=');
            if (eq == std::string::npos) throw InvalidParameter("TORGR_BUDGET entries look like key=value: " + item);
            std::string k = item.substr(0, eq), v = item.substr(eq + 1);
            try {
                if (k == "max_basis") o.budget.max_basis = std::stoul(v);
                else if (k == "max_spairs") o.budget.max_spairs = std::stoul(v);
                else if (k == "max_seconds") o.budget.max_seconds = std::stod(v);
                else if (k == "threads") o.budget.threads = static_cast<unsigned>(std::stoul(v));
                else throw InvalidParameter("unknown TORGR_BUDGET key " + k);
            } catch (const std::logic_error&) {
                throw InvalidParameter("bad TORGR_BUDGET value: " + item);
            }
        }
    }
    if (b.max_basis) o.budget.max_basis = *b.max_basis;
    if (b.max_spairs) o.budget.max_spairs = *b.max_spairs;
    if (b.max_seconds) o.budget.max_seconds = *b.max_seconds;
    if (b.threads) o.budget.threads = *b.threads;
    return o;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParameter("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// One polynomial per line, or a json ideal document.
std::vector<Polynomial> read_ideal(const std::string& path) {
    std::string text = slurp(path);
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return polynomials_from_json(open_document(parse_document_text(text), "ideal").at("generators"));
    std::vector<Polynomial> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        Polynomial f = parse_polynomial(line);
        if (!f.is_zero()) out.push_back(f);
    }
    return out;
}

RationalPoint read_point(const std::string& path) { return point_from_json(open_document(parse_document_text(slurp(path)), "point")); }

json ideal_doc(const std::vector<Polynomial>& gens) { return document("ideal", {{"generators", to_json(gens)}}); }

void print_lines(std::ostream& out, const std::vector<Polynomial>& gens) {
    for (const auto& g : gens) out << to_string(g) << "\n";
}

std::vector<Polynomial> polys(const std::vector<Binomial>& bs) {
    std::vector<Polynomial> out;
    for (const auto& b : bs) out.push_back(b.polynomial());
    return out;
}

struct PointOpts {
    std::string file;
    std::uint64_t seed = 0;
    bool ones = false;
    bool grassmannian = true;

    RationalPoint get(const Decomposition& dec) const {
        if (!file.empty()) return read_point(file);
        if (ones) return ones_point(dec.d(), dec.total());
        Rng rng(seed);
        return grassmannian ? random_grassmannian_point(dec.d(), dec.total(), rng)
                            : random_point(dec.d(), dec.total(), rng);
    }
};

void add_point(CLI::App* app, PointOpts& p) {
    app->add_option("--point", p.file, "Point document (json)");
    app->add_option("--seed", p.seed, "Seed for a random point")->capture_default_str();
    app->add_flag("--ones", p.ones, "Use the all-ones point");
}

// Per-check wall clock for `verify` unless overridden; the n=6 experiment needs a cap.
constexpr double kVerifySeconds = 240;

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out_default, std::ostream& err) {
    CLI::App app{"Torus-quotient Grassmannian toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "Config file (TOML or INI); flags override it");
    std::string output;
    bool as_json = false;
    app.add_option("-o,--output", output, "Write output to a file");
    app.add_flag("--json", as_json, "Emit a schema-1 json document");

    // indices
    auto* ind = app.add_subcommand("indices", "Index sets of a decomposition");
    DecOpts ind_dec;
    add_dec(ind, ind_dec);
    bool f_multi = false, f_comp = false, f_str = false, f_sorted = false, f_lambda = false, f_lsort = false;
    ind->add_flag("--multi-indices", f_multi, "Plücker multi-indices");
    ind->add_flag("--compositions", f_comp, "Compositions S");
    ind->add_flag("--strings", f_str, "Block strings J");
    ind->add_flag("--sorted-pairs", f_sorted, "Sorted pairs");
    ind->add_flag("--lambda-w", f_lambda, "Pair sets per sorted pair");
    ind->add_flag("--lambda-sort", f_lsort, "Sorted pairs with at least d+2 distinct letters");

    // relations
    auto* rel = app.add_subcommand("relations", "Generate relation families");
    std::string family;
    rel->add_option("family", family, "plucker | linearized | wp | sorted-gb | orbit-gb | fiber | cubic | j-ideals | example")
        ->required()
        ->check(CLI::IsMember({"plucker", "linearized", "wp", "sorted-gb", "orbit-gb", "fiber", "cubic", "j-ideals", "example"}));
    DecOpts rel_dec;
    add_dec(rel, rel_dec);
    PointOpts rel_pt;
    add_point(rel, rel_pt);
    std::string example;
    std::vector<std::string> binding;
    bool list_examples = false;
    rel->add_option("--example", example, "Example family name");
    rel->add_option("--binding", binding, "Letter bindings like a=7")->delimiter(',');
    rel->add_flag("--list", list_examples, "List example families");

    // gb
    auto* gbc = app.add_subcommand("gb", "Reduced Gröbner basis of an input ideal");
    std::string gb_in, gb_order = "degrevlex";
    gbc->add_option("--input", gb_in, "Ideal file: one polynomial per line, or json")->required();
    gbc->add_option("--order", gb_order, "lex | degrevlex")->check(CLI::IsMember({"lex", "degrevlex"}))->capture_default_str();
    BudgetOpts gb_budget;
    add_budget(gbc, gb_budget);

    // kernel
    auto* ker = app.add_subcommand("kernel", "Multi-homogeneous kernel of a monomial map");
    std::string kind;
    int cap = 6;
    ker->add_option("--kind", kind, "phi | phi-rho | phi-gr | phi-gr-rho | zeta | zeta-p | rho-bullet | h-quotient-projection")
        ->required();
    ker->add_option("--cap", cap, "Degree cap")->capture_default_str();
    DecOpts ker_dec;
    add_dec(ker, ker_dec);
    PointOpts ker_pt;
    add_point(ker, ker_pt);
    BudgetOpts ker_budget;
    add_budget(ker, ker_budget);

    // hilbert
    auto* hil = app.add_subcommand("hilbert", "Hilbert function of an orbit closure");
    DecOpts hil_dec;
    add_dec(hil, hil_dec);
    PointOpts hil_pt;
    add_point(hil, hil_pt);
    int max_degree = 4;
    hil->add_option("--max-degree", max_degree, "Largest degree")->capture_default_str();

    // verify
    auto* ver = app.add_subcommand("verify", "Run the check battery");
    std::vector<std::string> checks;
    std::uint64_t ver_seed = 0;
    unsigned parallel = 1;
    bool list_checks = false;
    ver->add_option("--checks", checks, "Check ids (default: all)")->delimiter(',');
    ver->add_option("--seed", ver_seed, "Seed")->capture_default_str();
    ver->add_option("--parallel", parallel, "Concurrent checks")->capture_default_str();
    ver->add_flag("--list", list_checks, "List check ids");
    BudgetOpts ver_budget;
    add_budget(ver, ver_budget);

    // export
    auto* exp = app.add_subcommand("export", "Export an ideal");
    std::string format, exp_in;
    std::vector<std::string> ring;
    exp->add_option("--format", format, "json | cas-a | cas-b")->required()->check(CLI::IsMember({"json", "cas-a", "cas-b"}));
    exp->add_option("--input", exp_in, "Ideal file")->required();
    exp->add_option("--ring", ring, "Ring variables (default: those of the ideal)")->delimiter(',');

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out_default, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out_default, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out_default, err);
        return invalid_input;
    }

    std::ofstream file;
    if (!output.empty()) {
        file.open(output);
        if (!file) {
            err << "cannot write " << output << "\n";
            return invalid_input;
        }
    }
    std::ostream& out = output.empty() ? out_default : file;

    try {
        if (*ind) {
            Decomposition dec = ind_dec.get();
            bool any = f_multi || f_comp || f_str || f_sorted || f_lambda || f_lsort;
            json doc = json::object();
            if (f_multi || !any) {
                json a = json::array();
                for (const auto& u : multi_indices(dec.d(), dec.total())) a.push_back(u.str());
                doc["multi_indices"] = a;
            }
            if (f_comp || !any) {
                json a = json::array();
                for (const auto& c : composition_set(dec)) a.push_back(c.parts);
                doc["compositions"] = a;
            }
            if (f_str || !any) {
                json a = json::array();
                for (const auto& s : block_strings(dec)) a.push_back(s.str());
                doc["strings"] = a;
            }
            if (f_sorted || !any) {
                json a = json::array();
                for (const auto& w : sorted_pairs(dec)) a.push_back(w.str());
                doc["sorted_pairs"] = a;
            }
            if (f_lambda) {
                json a = json::object();
                for (const auto& w : sorted_pairs(dec)) {
                    json l = json::array();
                    for (const auto& uv : lambda_w(w, dec)) l.push_back(uv.str());
                    a[w.str()] = l;
                }
                doc["lambda_w"] = a;
            }
            if (f_lsort) {
                if (!dec.is_unit()) throw InvalidParameter("--lambda-sort needs unit blocks");
                json a = json::array();
                for (const auto& w : lambda_sort(dec.d(), dec.blocks())) a.push_back(w.str());
                doc["lambda_sort"] = a;
            }
            if (as_json) {
                out << document("indices", doc).dump(1) << "\n";
            } else {
                for (auto& [key, val] : doc.items()) {
                    if (doc.size() > 1) out << "# " << key << "\n";
                    if (val.is_object())
                        for (auto& [w, l] : val.items()) {
                            out << w << ":";
                            for (const auto& x : l) out << " " << x.get<std::string>();
                            out << "\n";
                        }
                    else
                        for (const auto& x : val) out << (x.is_string() ? x.get<std::string>() : x.dump()) << "\n";
                }
            }
            return ok;
        }

        if (*rel) {
            std::vector<Polynomial> gens;
            if (family == "example") {
                if (list_examples) {
                    for (const auto& e : example_catalog()) out << e.name << "\n";
                    return ok;
                }
                if (example.empty()) throw InvalidParameter("relations example needs --example NAME");
                std::map<std::string, int> b;
                for (const auto& s : binding) {
                    auto eq = s.find('=');
                    if (eq == std::string::npos) throw InvalidParameter("binding looks like a=7: " + s);
                    try {
                        b[s.substr(0, eq)] = std::stoi(s.substr(eq + 1));
                    } catch (const std::logic_error&) {
                        throw InvalidParameter("bad binding " + s);
                    }
                }
                gens.push_back(catalog_example(example, b, rel_dec.n));
            } else if (family == "cubic") {
                if (rel_dec.n <= 0) throw InvalidParameter("relations cubic needs --n");
                gens = polys(cubic_binomials(rel_dec.n));
            } else if (family == "plucker" || family == "linearized") {
                Decomposition dec = rel_dec.get();
                for (const auto& F : plucker_relations(dec.d(), dec.total()))
                    gens.push_back(family == "plucker" ? F.polynomial() : linearize(F));
            } else if (family == "wp") {
                Decomposition dec = rel_dec.get();
                for (const auto& w : nontrivial_pairs(dec)) {
                    auto b = polys(wp_binomials(w, dec));
                    gens.insert(gens.end(), b.begin(), b.end());
                }
            } else if (family == "sorted-gb") {
                gens = polys(sorted_gb(rel_dec.get()));
            } else if (family == "orbit-gb") {
                Decomposition dec = rel_dec.get();
                gens = orbit_gb(rel_pt.get(dec), dec, true);
            } else if (family == "fiber") {
                Decomposition dec = rel_dec.get();
                auto t = theta_eval(rel_pt.get(dec), dec);
                if (t.degenerate) throw PreconditionViolation("the point lies in the degenerate locus");
                gens = fiber_ideal(t.point, dec);
            } else if (family == "j-ideals") {
                Decomposition dec = rel_dec.get();
                JIdeals J = j_ideals(dec);
                if (as_json) {
                    json ja = json::object(), jw = json::object();
                    for (const auto& [a, g] : J.ja) ja[a.str()] = to_json(g);
                    for (const auto& [w, g] : J.jw) jw[w.str()] = to_json(g);
                    out << document("j-ideals", {{"ja", ja}, {"jw", jw}}).dump(1) << "\n";
                    return ok;
                }
                auto line = [&](const std::string& label, const std::vector<Polynomial>& g) {
                    out << label << ":";
                    for (const auto& p : g) out << " " << to_string(p);
                    out << "\n";
                };
                for (const auto& [a, g] : J.ja) line("J_" + a.str(), g);
                for (const auto& [w, g] : J.jw) line("J_" + w.str(), g);
                return ok;
            }
            if (as_json) out << ideal_doc(gens).dump(1) << "\n";
            else print_lines(out, gens);
            return ok;
        }

        if (*gbc) {
            auto gens = read_ideal(gb_in);
            std::set<VarId> vars;
            for (const auto& g : gens)
                for (const auto& v : g.variables()) vars.insert(v);
            TermOrder o = gb_order == "lex" ? TermOrder::lex({vars.begin(), vars.end()}) : default_order(vars);
            auto gb = reduced_groebner(gens, o, engine_options(gb_budget));
            if (as_json)
                out << document("groebner-basis", {{"generators", to_json(gb.generators)}, {"order", gb_order},
                                                   {"stats", to_json(gb.stats)}})
                           .dump(1)
                    << "\n";
            else
                print_lines(out, gb.generators);
            return ok;
        }

        if (*ker) {
            MapKind k = parse_kind(kind);
            Decomposition dec = ker_dec.get();
            BuchbergerOptions eo = engine_options(ker_budget);
            KernelReport r;
            if (k == MapKind::y_projection) {
                r = h_quotient_projection(dec, cap, eo);
            } else {
                std::optional<RationalPoint> p;
                if (k == MapKind::zeta_p) p = ker_pt.get(dec);
                r = kernel_mh(build_map(k, dec, std::nullopt, p), cap, eo);
            }
            if (as_json) out << document("kernel-report", to_json(r)).dump(1) << "\n";
            else print_lines(out, r.generators);
            if (r.truncated) err << "note: kernel truncated at degree " << cap << "\n";
            return ok;
        }

        if (*hil) {
            Decomposition dec = hil_dec.get();
            PointOpts p = hil_pt;
            auto h = hilbert_orbit(p.get(dec), dec, max_degree);
            if (as_json) {
                out << document("hilbert", {{"decomposition", to_json(dec)}, {"values", h}}).dump(1) << "\n";
            } else {
                for (std::size_t i = 0; i < h.size(); ++i) out << (i ? " " : "") << h[i];
                out << "\n";
            }
            return ok;
        }

        if (*ver) {
            if (list_checks) {
                for (const auto& id : check_ids()) out << id << "\n";
                return ok;
            }
            SuiteOptions so;
            so.seed = ver_seed;
            so.engine = engine_options(ver_budget, kVerifySeconds);
            so.parallelism = parallel;
            auto results = run_suite(checks.empty() ? check_ids() : checks, so);
            bool failed = false;
            for (const auto& r : results) failed = failed || r.status == CheckStatus::fail;
            if (as_json) {
                out << report_document(results, so).dump(1) << "\n";
            } else {
                for (const auto& r : results) out << r.id << ": " << status_name(r.status) << "\n";
            }
            return failed ? verification_failed : ok;
        }

        if (*exp) {
            auto gens = read_ideal(exp_in);
            if (format == "json") {
                out << ideal_doc(gens).dump(1) << "\n";
            } else {
                std::vector<VarId> vars;
                for (const auto& s : ring) vars.push_back(parse_var(s));
                out << export_cas(gens, vars, parse_dialect(format));
            }
            return ok;
        }
    } catch (const ResourceExceeded& e) {
        err << "resource exceeded: " << e.what() << "\n";
        return resource_exceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return invalid_input;
    } catch (const json::exception& e) {
        err << "error: malformed document: " << e.what() << "\n";
        return invalid_input;
    } catch (const std::logic_error& e) {
        err << "verification failure: " << e.what() << "\n";
        return verification_failed;
    }
    return ok;
}

} // namespace torgr::cli
