#include "cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "klr/brauer.hpp"
#include "klr/classifier.hpp"
#include "klr/quiver_io.hpp"
#include "klr/tableaux_gdim.hpp"

namespace klr::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

IntVec parse_list(const std::string& text, const std::string& flag) {
    IntVec out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw UsageError(flag + ": expected comma-separated integers, got '" + text + "'");
        }
    }
    if (out.empty()) throw UsageError(flag + ": empty list");
    return out;
}

IntMatrix parse_matrix(const std::string& text) {
    IntMatrix rows;
    std::stringstream ss(text);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(parse_list(row, "--matrix"));
    for (const IntVec& r : rows)
        if (r.size() != rows.size()) throw UsageError("--matrix: expected a square matrix");
    return rows;
}

struct Common {
    int ell = 0;
    std::string weight;
    std::string format = "text";
};

LevelKDominant parse_weight(const Common& c) {
    if (c.ell < 1) throw UsageError("--ell: must be at least 1");
    IntVec w = parse_list(c.weight, "--weight");
    if (static_cast<int>(w.size()) != c.ell + 1)
        throw UsageError("--weight: expected " + std::to_string(c.ell + 1) + " coefficients");
    for (int x : w)
        if (x < 0) throw UsageError("--weight: coefficients must be nonnegative");
    return w;
}

RootVector parse_beta(const std::string& text, int mdelta, int e) {
    IntVec b = parse_list(text, "--beta");
    if (static_cast<int>(b.size()) != e) throw UsageError("--beta: expected " + std::to_string(e) + " coefficients");
    if (mdelta < 0) throw UsageError("--mdelta: must be nonnegative");
    for (int& x : b) x += mdelta;
    for (int x : b)
        if (x < 0) throw UsageError("--beta: coefficients must be nonnegative");
    return RootVector{b};
}

void add_common(CLI::App* sub, Common& c, bool need_weight, const std::vector<std::string>& formats) {
    sub->add_option("--ell", c.ell, "rank ell >= 1")->required();
    if (need_weight) sub->add_option("--weight", c.weight, "coefficients m_0,...,m_ell")->required();
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember(formats));
}

json weight_json(const WeightCoeffs& w) { return {{"lambda", w.lambda}, {"delta", w.delta}}; }

std::string poly_row(const std::vector<LaurentPoly>& row) {
    std::string s;
    for (const LaurentPoly& p : row) s += (s.empty() ? "" : "  ") + p.to_string();
    return s;
}

BrauerGraph graph_from_json(const json& j) {
    IntVec mult;
    std::map<int, int> index;
    for (const auto& v : j.at("vertices")) {
        index[v.at("id").get<int>()] = static_cast<int>(mult.size());
        mult.push_back(v.value("mult", 1));
    }
    auto vid = [&](int id) {
        auto it = index.find(id);
        if (it == index.end()) throw Error(ErrorKind::InvalidGraph, "unknown vertex id " + std::to_string(id));
        return it->second;
    };
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
        const auto ends = e.get<IntVec>();
        if (ends.size() != 2) throw Error(ErrorKind::InvalidGraph, "an edge needs two endpoints");
        edges.emplace_back(vid(ends[0]), vid(ends[1]));
    }
    std::vector<IntVec> rotation;
    if (j.contains("rotation")) {
        rotation.assign(mult.size(), {});
        for (const auto& [key, order] : j.at("rotation").items()) rotation[vid(std::stoi(key))] = order.get<IntVec>();
    }
    return make_brauer_graph(mult, edges, rotation);
}

struct GraphSource {
    std::string file;
    std::string family;
    std::string line;
};

void add_graph_options(CLI::App* sub, GraphSource& g) {
    auto* f = sub->add_option("--graph", g.file, "graph JSON file");
    auto* fam = sub->add_option("--family", g.family, "s,a,m for the line family with one multiplicity-1 vertex");
    auto* ln = sub->add_option("--line", g.line, "n,m for a line with n edges and multiplicity m");
    f->excludes(fam)->excludes(ln);
    fam->excludes(ln);
}

bool has_graph(const GraphSource& g) { return !g.file.empty() || !g.family.empty() || !g.line.empty(); }

BrauerGraph load_graph(const GraphSource& g) {
    if (!g.file.empty()) {
        std::ifstream in(g.file);
        if (!in) throw UsageError("--graph: cannot open '" + g.file + "'");
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw UsageError(std::string("--graph: ") + e.what());
        }
        try {
            return graph_from_json(j);
        } catch (const json::exception& e) {
            throw UsageError(std::string("--graph: ") + e.what());
        }
    }
    if (!g.family.empty()) {
        const IntVec p = parse_list(g.family, "--family");
        if (p.size() != 3) throw UsageError("--family: expected s,a,m");
        return gamma_family(p[0], p[1], p[2]);
    }
    if (!g.line.empty()) {
        const IntVec p = parse_list(g.line, "--line");
        if (p.size() != 2) throw UsageError("--line: expected n,m");
        return line_graph(p[0], p[1]);
    }
    throw UsageError("one of --graph, --family, --line is required");
}

json matrix_json(const IntMatrix& m) { return m; }

std::string matrix_text(const IntMatrix& m, const std::string& indent) {
    std::string s;
    for (const IntVec& row : m) s += indent + format_vector(row) + "\n";
    return s;
}

TClass parse_t(const std::string& t) {
    if (t == "two" || t == "2") return TClass::TIsTwo;
    if (t == "minus-two" || t == "-2") return TClass::TIsMinusTwo;
    if (t == "sign") return TClass::TIsSignEll;
    if (t == "other") return TClass::TOther;
    throw UsageError("--t: expected two, minus-two, sign or other");
}

const char* t_name(TClass t) {
    switch (t) {
    case TClass::TIsTwo: return "two";
    case TClass::TIsMinusTwo: return "minus-two";
    case TClass::TIsSignEll: return "sign";
    case TClass::TOther: return "other";
    }
    return "other";
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"klrtype: weight quivers, block types, graded dimensions and Brauer graphs", "klrtype"};
    app.require_subcommand(1);

    Common mw_opts;
    auto* mw = app.add_subcommand("maxweights", "equivalence class, X-vectors and maximal weights");
    add_common(mw, mw_opts, true, {"text", "json"});

    Common q_opts;
    auto* qc = app.add_subcommand("quiver", "quiver on the equivalence class");
    add_common(qc, q_opts, true, {"text", "json", "dot"});

    Common t_opts;
    auto* tc = app.add_subcommand("tquiver", "distinguished subquiver with tags");
    add_common(tc, t_opts, true, {"text", "json", "dot"});

    Common c_opts;
    std::string c_beta;
    int c_mdelta = 0;
    int c_char = 0;
    std::string c_t = "other";
    long c_cap = 0;
    auto* cc = app.add_subcommand("classify", "representation type of a block");
    add_common(cc, c_opts, true, {"text", "json"});
    cc->add_option("--beta", c_beta, "coefficients of beta")->required();
    cc->add_option("--mdelta", c_mdelta, "add m delta to beta");
    cc->add_option("--char", c_char, "field characteristic, 0 or a prime");
    cc->add_option("--t", c_t, "class of t: two, minus-two, sign, other");
    cc->add_option("--iteration-cap", c_cap, "reflection cap, 0 for the default");

    Common g_opts;
    std::string g_beta;
    int g_mdelta = 0;
    std::vector<std::string> g_nu;
    bool g_all = false;
    int g_max = kDefaultMaxSize;
    auto* gc = app.add_subcommand("gdim", "graded dimensions via standard tableaux");
    add_common(gc, g_opts, true, {"text", "json"});
    gc->add_option("--beta", g_beta, "coefficients of beta")->required();
    gc->add_option("--mdelta", g_mdelta, "add m delta to beta");
    auto* nu_opt = gc->add_option("--nu", g_nu, "residue sequence (repeatable); prints the pairwise matrix");
    gc->add_flag("--all-nu", g_all, "use every residue sequence of beta")->excludes(nu_opt);
    gc->add_option("--max-size", g_max, "size cap for enumeration");

    GraphSource b_src;
    std::string b_format = "text";
    auto* bc = app.add_subcommand("brauer", "quiver presentation, Cartan matrix and invariants of a Brauer graph");
    add_graph_options(bc, b_src);
    bc->add_option("--format", b_format, "output format")->check(CLI::IsMember({"text", "json"}));

    GraphSource d_src;
    std::string d_matrix;
    std::string d_format = "text";
    int d_max_entry = 0;
    long d_cap = DecompOptions{}.node_cap;
    bool d_any = false;
    auto* dc = app.add_subcommand("decomp", "decomposition matrices D with D^t D = C");
    add_graph_options(dc, d_src);
    dc->add_option("--matrix", d_matrix, "Cartan matrix, rows separated by ';'");
    dc->add_option("--max-entry", d_max_entry, "entry bound, 0 for floor(sqrt(min diagonal))");
    dc->add_option("--node-cap", d_cap, "search node cap");
    dc->add_flag("--any-shape", d_any, "drop the unitriangular restriction");
    dc->add_option("--format", d_format, "output format")->check(CLI::IsMember({"text", "json"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (mw->parsed()) {
            const LevelKDominant base = parse_weight(mw_opts);
            const auto entries = max_plus(base);
            if (mw_opts.format == "json") {
                json j{{"ell", mw_opts.ell}, {"k", level(base)}, {"base", base}, {"members", json::array()}};
                for (const MaxWeightEntry& m : entries)
                    j["members"].push_back({{"coeffs", m.weight},
                                            {"x", m.x},
                                            {"beta", m.beta.coeffs},
                                            {"max_weight", weight_json(m.max_weight)}});
                out << j.dump(2) << "\n";
            } else {
                out << "# ell=" << mw_opts.ell << " k=" << level(base) << " base=" << format_weight(base)
                    << " members=" << entries.size() << "\n";
                out << "# weight\tX\tbeta\tmax_weight\n";
                for (const MaxWeightEntry& m : entries)
                    out << format_weight(m.weight) << "\t" << format_vector(m.x) << "\t" << format_root(m.beta)
                        << "\t" << format_weight(m.max_weight) << "\n";
            }
        } else if (qc->parsed()) {
            const WeightQuiver q = build_quiver(parse_weight(q_opts));
            if (q_opts.format == "json") out << to_json(q).dump(2) << "\n";
            else if (q_opts.format == "dot") out << to_dot(q);
            else out << to_text(q);
        } else if (tc->parsed()) {
            const TQuiver t = t_subquiver(parse_weight(t_opts));
            if (t_opts.format == "json") out << to_json(t).dump(2) << "\n";
            else if (t_opts.format == "dot") out << to_dot(t);
            else out << to_text(t);
        } else if (cc->parsed()) {
            const LevelKDominant base = parse_weight(c_opts);
            const RootVector beta = parse_beta(c_beta, c_mdelta, c_opts.ell + 1);
            const FieldParams params{c_char, parse_t(c_t)};
            const Classification c = classify_detailed(base, beta, params, c_cap);
            if (c_opts.format == "json") {
                json j{{"ell", c_opts.ell},
                       {"k", level(base)},
                       {"base", base},
                       {"beta", beta.coeffs},
                       {"char", c_char},
                       {"t", t_name(params.t_class)},
                       {"type", to_string(c.type)},
                       {"status", to_string(c.orbit.status)},
                       {"reflections", c.orbit.reflection_count},
                       {"reason", c.reason}};
                if (c.orbit.status == OrbitResult::Status::Nonzero) {
                    j["beta0"] = c.orbit.beta0.coeffs;
                    j["m"] = c.orbit.m;
                }
                out << j.dump(2) << "\n";
            } else {
                out << to_string(c.type) << "\n";
                out << "block " << to_string(c.orbit.status) << "  reflections=" << c.orbit.reflection_count;
                if (c.orbit.status == OrbitResult::Status::Nonzero)
                    out << "  beta0=" << format_root(c.orbit.beta0) << "  m=" << c.orbit.m;
                out << "\n";
                out << "reason " << c.reason << "\n";
            }
        } else if (gc->parsed()) {
            const LevelKDominant base = parse_weight(g_opts);
            const RootVector beta = parse_beta(g_beta, g_mdelta, g_opts.ell + 1);
            const IntVec charges = canonical_charges(base);
            std::vector<IntVec> nus;
            for (const std::string& s : g_nu) nus.push_back(parse_list(s, "--nu"));
            if (g_all) nus = residue_sequences(beta);
            json j{{"ell", g_opts.ell}, {"k", level(base)}, {"charges", charges}, {"beta", beta.coeffs}};
            if (nus.empty()) {
                const LaurentPoly total = graded_dim_total(charges, beta, g_max);
                j["dim_q"] = total.to_string();
                j["dim"] = total.at_one();
                if (g_opts.format == "json") out << j.dump(2) << "\n";
                else out << "dim_q " << total.to_string() << "\ndim " << total.at_one() << "\n";
            } else {
                const auto m = graded_dim_matrix(charges, beta, nus, g_max);
                if (g_opts.format == "json") {
                    j["idempotents"] = nus;
                    j["matrix"] = json::array();
                    j["at_one"] = json::array();
                    for (const auto& row : m) {
                        json r = json::array(), r1 = json::array();
                        for (const LaurentPoly& p : row) {
                            r.push_back(p.to_string());
                            r1.push_back(p.at_one());
                        }
                        j["matrix"].push_back(r);
                        j["at_one"].push_back(r1);
                    }
                    out << j.dump(2) << "\n";
                } else {
                    for (std::size_t a = 0; a < nus.size(); ++a)
                        for (std::size_t b = 0; b < nus.size(); ++b)
                            out << "e" << format_vector(nus[a]) << " R e" << format_vector(nus[b]) << "  "
                                << m[a][b].to_string() << "\n";
                    out << "at q=1\n";
                    for (const auto& row : m) {
                        IntVec r;
                        for (const LaurentPoly& p : row) r.push_back(static_cast<int>(p.at_one()));
                        out << "  " << format_vector(r) << "\n";
                    }
                }
            }
        } else if (bc->parsed()) {
            const BrauerGraph g = load_graph(b_src);
            const QuiverPresentation p = quiver_presentation(g);
            const DerivedInvariants inv = derived_invariants(g);
            IntMatrix cartan;
            bool have_cartan = true;
            try {
                cartan = cartan_matrix(g);
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::UnsupportedGraph) throw;
                have_cartan = false;
            }
            if (b_format == "json") {
                json j;
                j["quiver"]["vertices"] = p.n_vertices;
                j["quiver"]["arrows"] = json::array();
                for (std::size_t a = 0; a < p.arrows.size(); ++a)
                    j["quiver"]["arrows"].push_back({{"name", p.arrow_name(static_cast<int>(a))},
                                                     {"src", p.arrows[a].src},
                                                     {"dst", p.arrows[a].dst}});
                j["quiver"]["relations"] = json::array();
                for (const Relation& r : p.relations)
                    j["quiver"]["relations"].push_back({{"family", r.family}, {"text", p.relation_string(r)}});
                j["cartan"] = have_cartan ? json(matrix_json(cartan)) : json(nullptr);
                j["invariants"] = {{"vertices", inv.n_vertices},    {"edges", inv.n_edges},
                                   {"faces", inv.n_faces},          {"multiplicities", inv.mult_multiset},
                                   {"perimeters", inv.perimeter_multiset}, {"bipartite", inv.bipartite}};
                out << j.dump(2) << "\n";
            } else {
                out << "quiver vertices " << p.n_vertices << "\n";
                out << "arrows " << p.arrows.size() << "\n";
                for (std::size_t a = 0; a < p.arrows.size(); ++a)
                    out << "  " << p.arrow_name(static_cast<int>(a)) << ": " << p.arrows[a].src << " -> "
                        << p.arrows[a].dst << "\n";
                out << "relations " << p.relations.size() << "\n";
                for (const Relation& r : p.relations)
                    out << "  (" << r.family << ") " << p.relation_string(r) << "\n";
                if (have_cartan) out << "cartan\n" << matrix_text(cartan, "  ");
                else out << "cartan unsupported (loop or multiple edge)\n";
                out << "invariants vertices=" << inv.n_vertices << " edges=" << inv.n_edges
                    << " faces=" << inv.n_faces << " multiplicities=" << format_vector(inv.mult_multiset)
                    << " perimeters=" << format_vector(inv.perimeter_multiset)
                    << " bipartite=" << (inv.bipartite ? "yes" : "no") << "\n";
            }
        } else if (dc->parsed()) {
            if (!d_matrix.empty() && has_graph(d_src)) throw UsageError("--matrix: conflicts with a graph source");
            const IntMatrix c = d_matrix.empty() ? cartan_matrix(load_graph(d_src)) : parse_matrix(d_matrix);
            DecompOptions opts;
            opts.max_entry = d_max_entry;
            opts.node_cap = d_cap;
            opts.unitriangular = !d_any;
            const DecompResult r = decomp_search(c, opts);
            if (d_format == "json") {
                json j{{"cartan", matrix_json(c)},
                       {"solutions", json::array()},
                       {"unique", r.unique()},
                       {"nodes", r.nodes}};
                for (const IntMatrix& d : r.solutions) j["solutions"].push_back(matrix_json(d));
                out << j.dump(2) << "\n";
            } else {
                out << "cartan\n" << matrix_text(c, "  ");
                out << "solutions " << r.solutions.size() << (r.unique() ? " (unique)" : "") << "\n";
                for (std::size_t s = 0; s < r.solutions.size(); ++s)
                    out << "D" << s + 1 << "\n" << matrix_text(r.solutions[s], "  ");
                out << "nodes " << r.nodes << "\n";
            }
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace klr::cli
