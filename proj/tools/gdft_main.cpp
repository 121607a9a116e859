// Batch front-end: reads a JSON manifest, runs one of the toolkit commands,
// and writes CSV/JSON artifacts.  Exit codes: 0 success, 1 config error,
// 2 numeric failure, 3 infeasible query.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gdft/bosonic.hpp"
#include "gdft/boundary.hpp"
#include "gdft/liegroup.hpp"
#include "gdft/search.hpp"
#include "gdft/verify.hpp"

using json = nlohmann::json;
using namespace gdft;

namespace {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int worker_count() {
    if (const char* env = std::getenv("GDFT_WORKERS")) {
        int n = std::atoi(env);
        if (n > 0) return n;
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs fn(i) for i in [0, n) on the worker pool; results land in index order.
template <typename F>
void parallel_for(int n, F fn) {
    int workers = std::min(worker_count(), std::max(1, n));
    if (workers <= 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1))
                fn(i);
        });
    }
    for (std::thread& t : pool) t.join();
}

std::string fmt17(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string timestamp() {
    std::time_t now = std::time(nullptr);
    char buf[64];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    return buf;
}

void write_atomic(const std::string& path, const std::string& content) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ConfigError("cannot open output path: " + path);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        throw ConfigError("cannot rename temporary output to: " + path);
    }
}

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("config file not found: " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config parse error: ") + e.what());
    }
}

CMatrix parse_matrix(const json& j) {
    if (!j.is_array() || j.empty())
        throw ConfigError("matrix must be a nonempty nested array");
    int rows = static_cast<int>(j.size());
    int cols = static_cast<int>(j[0].size());
    CMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(j[r].size()) != cols)
            throw ConfigError("ragged matrix rows in config");
        for (int c = 0; c < cols; ++c) {
            const json& e = j[r][c];
            if (e.is_number()) {
                m(r, c) = Complex(e.get<double>(), 0.0);
            } else if (e.is_array() && e.size() == 2) {
                m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
            } else {
                throw ConfigError("matrix entries must be numbers or [re,im]");
            }
        }
    }
    return m;
}

RVector parse_vector(const json& j, const char* what) {
    if (!j.is_array()) throw ConfigError(std::string(what) + " must be an array");
    RVector v(static_cast<int>(j.size()));
    for (size_t i = 0; i < j.size(); ++i) v(static_cast<int>(i)) = j[i].get<double>();
    return v;
}

FunctionalTheoryModel build_theory(const json& cfg) {
    std::string kind = cfg.value("kind", "");
    if (kind == "explicit") {
        if (!cfg.contains("matrices"))
            throw ConfigError("explicit theory requires a 'matrices' object");
        const json& m = cfg["matrices"];
        std::vector<CMatrix> pots;
        for (const json& p : m.value("potentials", json::array()))
            pots.push_back(parse_matrix(p));
        if (!m.contains("interaction"))
            throw ConfigError("explicit theory requires an interaction matrix");
        return make_theory(pots, parse_matrix(m["interaction"]));
    }
    if (kind == "bosonic") {
        int d = cfg.value("d", 0), n = cfg.value("N", 0), p = cfg.value("P", 0);
        if (d < 2 || n < 1) throw ConfigError("bosonic theory requires d >= 2, N >= 1");
        if (cfg.contains("interaction")) {
            std::vector<Complex> tensor;
            for (const json& e : cfg["interaction"]) {
                if (e.is_number()) {
                    tensor.emplace_back(e.get<double>(), 0.0);
                } else {
                    tensor.emplace_back(e[0].get<double>(), e[1].get<double>());
                }
            }
            CMatrix w = interaction_from_tensor(d, n, p, tensor);
            return build_bosonic_theory(d, n, p, &w);
        }
        return build_bosonic_theory(d, n, p);
    }
    if (kind == "dimer") {
        int n = cfg.value("N", 0);
        if (n < 1) throw ConfigError("dimer theory requires N >= 1");
        return dimer_theory(n, cfg.value("theta", 0.0));
    }
    if (kind == "spin") {
        int n = cfg.value("N", 0);
        if (n < 1) throw ConfigError("spin theory requires N >= 1");
        return spin_chain_theory(n);
    }
    if (kind == "qubit") {
        return qubit_theory(cfg.value("lambda", 1.0));
    }
    throw ConfigError("unknown theory kind: '" + kind + "'");
}

LieAlgebraData build_algebra(const json& manifest) {
    const json params = manifest.value("params", json::object());
    if (params.contains("algebra")) {
        const json& a = params["algebra"];
        std::string name = a.value("name", "");
        if (name == "dimer") return dimer_algebra(a.value("N", 0));
        if (name == "su3_adjoint") return su3_adjoint_algebra();
        if (name == "su2_product") {
            std::vector<int> dims;
            for (const json& d : a.value("irreps", json::array()))
                dims.push_back(d.get<int>());
            return su2_product_algebra(dims);
        }
        throw ConfigError("unknown algebra name: '" + name + "'");
    }
    const json theory = manifest.value("theory", json::object());
    if (theory.value("kind", "") == "dimer")
        return dimer_algebra(theory.value("N", 0));
    throw ConfigError("kirwan requires params.algebra or a dimer theory");
}

json polytope_json(const Polytope& poly) {
    json verts = json::array();
    for (int vi : poly.vertices) {
        json v = json::array();
        for (int r = 0; r < poly.points.rows(); ++r)
            v.push_back(poly.points(r, vi));
        verts.push_back(std::move(v));
    }
    json ineqs = json::array();
    for (size_t fi = 0; fi < poly.facets.size(); ++fi) {
        FacetInequality f = facet_inequality(poly, static_cast<int>(fi));
        json s = json::array();
        for (int i = 0; i < f.S.size(); ++i) s.push_back(f.S(i));
        ineqs.push_back(json{{"S", std::move(s)}, {"nu", f.nu}});
    }
    return json{{"vertices", std::move(verts)},
                {"inequalities", std::move(ineqs)}};
}

SearchOptions options_from(const json& manifest, std::optional<std::uint64_t> seed,
                           std::optional<int> multistarts) {
    SearchOptions opts;
    if (manifest.contains("seed")) opts.seed = manifest["seed"].get<std::uint64_t>();
    if (seed) opts.seed = *seed;
    const json params = manifest.value("params", json::object());
    if (params.contains("multistarts"))
        opts.multistarts = params["multistarts"].get<int>();
    if (multistarts) opts.multistarts = *multistarts;
    return opts;
}

int cmd_domain(const json& manifest, const std::string& out) {
    FunctionalTheoryModel th = build_theory(manifest.value("theory", json::object()));
    WeightDecomposition wd = weight_decomposition(th);
    json j = polytope_json(representable_polytope(wd));
    j["timestamp"] = timestamp();
    write_atomic(out, j.dump(2) + "\n");
    return 0;
}

std::vector<RVector> grid_points(const json& params, int k) {
    std::vector<RVector> pts;
    if (params.contains("points")) {
        for (const json& p : params["points"]) pts.push_back(parse_vector(p, "point"));
    } else if (params.contains("linspace")) {
        const json& l = params["linspace"];
        RVector from = parse_vector(l.at("from"), "linspace.from");
        RVector to = parse_vector(l.at("to"), "linspace.to");
        int count = l.value("count", 2);
        if (count < 2) throw ConfigError("linspace.count must be >= 2");
        for (int i = 0; i < count; ++i) {
            double t = static_cast<double>(i) / (count - 1);
            pts.push_back((1 - t) * from + t * to);
        }
    } else {
        throw ConfigError("grid command requires params.points or params.linspace");
    }
    for (const RVector& p : pts) {
        if (p.size() != k)
            throw ConfigError("grid point dimension differs from the potential basis");
    }
    return pts;
}

int cmd_functional_grid(const json& manifest, const std::string& out,
                        const SearchOptions& opts) {
    FunctionalTheoryModel th = build_theory(manifest.value("theory", json::object()));
    std::vector<RVector> pts =
        grid_points(manifest.value("params", json::object()), th.potential_dim());
    const int n = static_cast<int>(pts.size());
    struct Row {
        double value = 0.0, residual = 0.0;
        int starts = 0;
        std::string error;
    };
    std::vector<Row> rows(n);
    parallel_for(n, [&](int i) {
        try {
            SearchResult sr = pure_functional(th, pts[i], opts);
            rows[i] = {sr.value, sr.constraint_residual, sr.starts_converged, ""};
        } catch (const GdftError& e) {
            rows[i].error = e.what();
        }
    });
    std::ostringstream os;
    os << "# generated " << timestamp() << "\n";
    for (int a = 0; a < th.potential_dim(); ++a) os << "rho_" << a << ",";
    os << "value,residual,starts_converged\n";
    for (int i = 0; i < n; ++i) {
        if (!rows[i].error.empty())
            throw GdftError(ErrorKind::DidNotConverge,
                            "grid point " + std::to_string(i) + ": " + rows[i].error);
        for (int a = 0; a < th.potential_dim(); ++a) os << fmt17(pts[i](a)) << ",";
        os << fmt17(rows[i].value) << "," << fmt17(rows[i].residual) << ","
           << rows[i].starts << "\n";
    }
    write_atomic(out, os.str());
    return 0;
}

int cmd_gradfield(const json& manifest, const std::string& out,
                  const SearchOptions& opts) {
    FunctionalTheoryModel th = build_theory(manifest.value("theory", json::object()));
    WeightDecomposition wd = weight_decomposition(th);
    Polytope poly = representable_polytope(wd);
    const json params = manifest.value("params", json::object());
    int res = params.value("resolution", 24);
    if (res < 2) throw ConfigError("gradfield resolution must be >= 2");

    // Interior nodes of a barycentric grid over the domain simplex.
    if (poly.dim + 1 != static_cast<int>(poly.vertices.size()))
        throw GdftError(ErrorKind::Unsupported,
                        "gradfield requires a simplicial domain");
    std::vector<RVector> vtx;
    for (int vi : poly.vertices) vtx.push_back(poly.points.col(vi));
    const int nv = static_cast<int>(vtx.size());
    // multi-indices (i_0..i_{nv-1}) summing to res, all parts >= 1
    std::vector<std::vector<int>> nodes;
    std::vector<int> idx(nv, 1);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == nv - 1) {
            idx[pos] = left;
            if (left >= 1) nodes.push_back(idx);
            return;
        }
        for (int v = 1; v <= left - (nv - 1 - pos); ++v) {
            idx[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, res);
    auto rho_of = [&](const std::vector<int>& node) {
        RVector rho = RVector::Zero(th.potential_dim());
        for (int v = 0; v < nv; ++v)
            rho += (static_cast<double>(node[v]) / res) * vtx[v];
        return rho;
    };
    const int n = static_cast<int>(nodes.size());
    std::vector<double> fvals(n);
    std::vector<std::string> errors(n);
    parallel_for(n, [&](int i) {
        try {
            fvals[i] = pure_functional(th, rho_of(nodes[i]), opts).value;
        } catch (const GdftError& e) {
            errors[i] = e.what();
        }
    });
    for (int i = 0; i < n; ++i) {
        if (!errors[i].empty())
            throw GdftError(ErrorKind::DidNotConverge,
                            "grid node " + std::to_string(i) + ": " + errors[i]);
    }
    std::map<std::vector<int>, int> lookup;
    for (int i = 0; i < n; ++i) lookup[nodes[i]] = i;
    // Central differences along the edge directions v_j - v_0; the gradient
    // magnitude uses the tangent-space representation of those directions.
    std::ostringstream os;
    os << "# generated " << timestamp() << "\n";
    for (int a = 0; a < th.potential_dim(); ++a) os << "rho_" << a << ",";
    os << "F,grad_norm\n";
    double h = 1.0 / res;
    for (int i = 0; i < n; ++i) {
        std::vector<double> deriv;
        bool complete = true;
        for (int j = 1; j < nv && complete; ++j) {
            std::vector<int> up = nodes[i], dn = nodes[i];
            up[j] += 1;
            up[0] -= 1;
            dn[j] -= 1;
            dn[0] += 1;
            auto iu = lookup.find(up), id = lookup.find(dn);
            if (iu == lookup.end() || id == lookup.end()) {
                complete = false;
                break;
            }
            deriv.push_back((fvals[iu->second] - fvals[id->second]) /
                            (2.0 * h * (vtx[j] - vtx[0]).norm()));
        }
        if (!complete) continue;
        double g2 = 0.0;
        for (double d : deriv) g2 += d * d;
        RVector rho = rho_of(nodes[i]);
        for (int a = 0; a < th.potential_dim(); ++a) os << fmt17(rho(a)) << ",";
        os << fmt17(fvals[i]) << "," << fmt17(std::sqrt(g2)) << "\n";
    }
    write_atomic(out, os.str());
    return 0;
}

int cmd_boundary_force(const json& manifest, const std::string& out,
                       const SearchOptions& opts,
                       const std::vector<double>& eps_override) {
    FunctionalTheoryModel th = build_theory(manifest.value("theory", json::object()));
    WeightDecomposition wd = weight_decomposition(th);
    const json params = manifest.value("params", json::object());
    BoundaryForceQuery q;
    q.facet.S = parse_vector(params.at("facet_S"), "facet_S");
    q.facet.nu = params.at("facet_nu").get<double>();
    q.rho_star = parse_vector(params.at("rho_star"), "rho_star");
    q.eta = parse_vector(params.at("eta"), "eta");
    if (params.contains("gamma")) {
        q.gamma = parse_vector(params["gamma"], "gamma");
        q.has_gamma = true;
    }
    std::vector<double> eps = eps_override;
    if (eps.empty() && params.contains("eps_list"))
        for (const json& e : params["eps_list"]) eps.push_back(e.get<double>());
    if (eps.empty()) eps = default_eps_grid();

    BoundaryForceResult r = abelian_boundary_force(th, wd, q, opts);
    ForceFit fit = finite_difference_force(th, q, eps, opts);
    json contributions = json::array();
    for (const auto& [omega, value] : r.contributions) {
        json w = json::array();
        for (int i = 0; i < omega.size(); ++i) w.push_back(omega(i));
        contributions.push_back(json{{"omega", std::move(w)}, {"value", value}});
    }
    json j{{"timestamp", timestamp()},
           {"G_formula", r.G},
           {"G_fit", fit.G_fit},
           {"contributions", std::move(contributions)},
           {"eps_points", eps},
           {"fit_values", fit.values},
           {"fit_intercept", fit.intercept},
           {"regularity_warning", r.regularity_warning}};
    write_atomic(out, j.dump(2) + "\n");
    return 0;
}

json candidate_json(const KirwanCandidate& c) {
    json s = json::array();
    for (std::int64_t e : c.s) s.push_back(e);
    return json{{"S", std::move(s)},
                {"c", c.c},
                {"dim_n_minus", c.dim_n_minus},
                {"dim_h_below", c.dim_h_below},
                {"witness_rank", c.witness_rank},
                {"verdict", c.accepted ? "accepted" : "rejected"},
                {"reason", c.reason}};
}

int cmd_kirwan(const json& manifest, const std::string& out,
               std::optional<std::uint64_t> seed) {
    LieAlgebraData alg = build_algebra(manifest);
    std::uint64_t s = manifest.value("seed", 2024);
    if (seed) s = *seed;
    KirwanResult kr = kirwan_polytope(alg, s);
    json candidates = json::array();
    for (const KirwanCandidate& c : kr.accepted) candidates.push_back(candidate_json(c));
    for (const KirwanCandidate& c : kr.rejected) candidates.push_back(candidate_json(c));
    json j{{"timestamp", timestamp()},
           {"polytope", polytope_json(kr.polytope)},
           {"candidates", std::move(candidates)}};
    write_atomic(out, j.dump(2) + "\n");
    return 0;
}

int cmd_verify(const std::string& out) {
    std::ostringstream table;
    bool all_pass = true;
    table << "criterion  result  seconds  name\n";
    for (int i = 1; i <= 9; ++i) {
        CriterionResult r = run_criterion(i);
        char line[512];
        std::snprintf(line, sizeof(line), "%-9d  %-6s  %7.2f  %s%s%s\n",
                      r.index, r.pass ? "PASS" : "FAIL", r.seconds,
                      r.name.c_str(), r.detail.empty() ? "" : " -- ",
                      r.detail.c_str());
        table << line;
        std::fputs(line, stdout);
        std::fflush(stdout);
        all_pass = all_pass && r.pass;
    }
    std::string verdict = all_pass ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED";
    table << verdict << "\n";
    std::puts(verdict.c_str());
    if (!out.empty()) {
        write_atomic(out, "# generated " + timestamp() + "\n" + table.str());
    }
    return all_pass ? 0 : 2;
}

bool infeasible_kind(ErrorKind k) {
    switch (k) {
        case ErrorKind::NotRepresentable:
        case ErrorKind::NotInRelativeInterior:
        case ErrorKind::EmptyFacet:
        case ErrorKind::NotOnFacet:
        case ErrorKind::NotNiceFacet:
        case ErrorKind::NotSimplexSetting:
        case ErrorKind::NotFullDimensional:
        case ErrorKind::NoCandidates:
        case ErrorKind::CriticalFacetPoint:
            return true;
        default:
            return false;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gdft: generalized functional-theory toolkit"};
    app.require_subcommand(1);
    std::string config_path, out_path;
    std::optional<std::uint64_t> seed;
    std::optional<int> multistarts;
    std::string eps_csv;

    std::vector<std::string> names = {"domain",         "functional-grid",
                                      "gradfield",      "boundary-force",
                                      "kirwan",         "verify"};
    for (const std::string& name : names) {
        CLI::App* sub = app.add_subcommand(name);
        if (name != "verify")
            sub->add_option("--config", config_path, "manifest JSON path")
                ->required();
        else
            sub->add_option("--config", config_path, "manifest JSON path");
        sub->add_option("--out", out_path, "output artifact path");
        sub->add_option("--seed", seed, "search seed override");
        sub->add_option("--multistarts", multistarts, "multistart override");
        sub->add_option("--eps-list", eps_csv, "comma-separated eps grid");
    }
    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }
    std::string command = app.get_subcommands()[0]->get_name();

    try {
        json manifest = json::object();
        if (!config_path.empty()) manifest = load_json(config_path);
        if (out_path.empty()) out_path = manifest.value("output_path", "");
        if (out_path.empty() && command != "verify")
            throw ConfigError("no output path (--out or manifest output_path)");
        SearchOptions opts = options_from(manifest, seed, multistarts);
        std::vector<double> eps;
        if (!eps_csv.empty()) {
            std::stringstream ss(eps_csv);
            std::string tok;
            while (std::getline(ss, tok, ',')) eps.push_back(std::stod(tok));
        }
        if (command == "domain") return cmd_domain(manifest, out_path);
        if (command == "functional-grid")
            return cmd_functional_grid(manifest, out_path, opts);
        if (command == "gradfield") return cmd_gradfield(manifest, out_path, opts);
        if (command == "boundary-force")
            return cmd_boundary_force(manifest, out_path, opts, eps);
        if (command == "kirwan") return cmd_kirwan(manifest, out_path, seed);
        if (command == "verify") return cmd_verify(out_path);
        throw ConfigError("unknown command: " + command);
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const json::exception& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 1;
    } catch (const GdftError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return infeasible_kind(e.kind()) ? 3 : 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
