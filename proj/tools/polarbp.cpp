// polarbp: certify, solve, and visualize sparse-recovery problems from the
// command line.  See --help for the subcommands.

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <polarbp/polarbp.hpp>

using nlohmann::json;
using namespace polarbp;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitDimension = 2;
constexpr int kExitNotUnique = 3;
constexpr int kExitInfeasible = 4;
constexpr int kExitUnboundedPolar = 5;
constexpr int kExitGuard = 6;

struct CliError {
    int code;
    std::string message;
};

double parse_number(const std::string& tok) {
    try {
        size_t pos = 0;
        const double v = std::stod(tok, &pos);
        if (pos != tok.size() || !std::isfinite(v)) throw std::invalid_argument(tok);
        return v;
    } catch (...) {
        throw CliError{kExitParse, "cannot parse number '" + tok + "'"};
    }
}

long parse_integer(const std::string& tok) {
    try {
        size_t pos = 0;
        const long v = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (...) {
        throw CliError{kExitParse, "cannot parse integer '" + tok + "'"};
    }
}

std::vector<std::string> tokenize(const std::string& s) {
    std::string cleaned = s;
    for (char& ch : cleaned)
        if (ch == ',') ch = ' ';
    std::istringstream in(cleaned);
    std::vector<std::string> toks;
    std::string t;
    while (in >> t) toks.push_back(t);
    return toks;
}

// Whitespace matrix text, columns are atoms; lines starting with '#' are
// comments.
AtomMatrix load_atoms(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CliError{kExitParse, "cannot open dictionary file: " + path};
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        const size_t pos = line.find_first_not_of(" \t\r");
        if (pos == std::string::npos || line[pos] == '#') continue;
        std::vector<double> row;
        for (const std::string& tok : tokenize(line)) row.push_back(parse_number(tok));
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (rows.empty()) throw CliError{kExitParse, "dictionary file has no data rows: " + path};
    const size_t n = rows.front().size();
    for (const auto& row : rows) {
        if (row.size() != n)
            throw CliError{kExitParse, "dictionary rows have unequal lengths in " + path};
    }
    Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(n));
    for (Index i = 0; i < m.rows(); ++i)
        for (Index j = 0; j < m.cols(); ++j)
            m(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    AtomMatrix a{m};
    try {
        validate(a);
    } catch (const std::invalid_argument& e) {
        throw CliError{kExitParse, std::string("invalid dictionary: ") + e.what()};
    }
    return a;
}

// Either `len` dense decimals or sparse "index:value" tokens (1-based).
Vector parse_vector_spec(const std::string& spec, Index len, const std::string& what) {
    const std::vector<std::string> toks = tokenize(spec);
    if (toks.empty()) throw CliError{kExitParse, what + " is empty"};
    bool sparse = false;
    for (const std::string& t : toks)
        if (t.find(':') != std::string::npos) sparse = true;

    Vector v = Vector::Zero(len);
    if (sparse) {
        std::set<long> seen;
        for (const std::string& t : toks) {
            const size_t colon = t.find(':');
            if (colon == std::string::npos || colon == 0 || colon + 1 == t.size())
                throw CliError{kExitParse, what + ": malformed sparse token '" + t + "'"};
            const long idx = parse_integer(t.substr(0, colon));
            const double val = parse_number(t.substr(colon + 1));
            if (idx < 1 || idx > len)
                throw CliError{kExitDimension,
                               what + ": index " + std::to_string(idx) + " outside 1.." +
                                   std::to_string(len)};
            if (!seen.insert(idx).second)
                throw CliError{kExitParse, what + ": duplicate index " + std::to_string(idx)};
            v(idx - 1) = val;
        }
    } else {
        if (static_cast<Index>(toks.size()) != len)
            throw CliError{kExitDimension, what + ": expected " + std::to_string(len) +
                                               " values, got " + std::to_string(toks.size())};
        for (Index i = 0; i < len; ++i) v(i) = parse_number(toks[static_cast<size_t>(i)]);
    }
    return v;
}

json vec_json(const Vector& v) {
    json a = json::array();
    for (Index i = 0; i < v.size(); ++i) a.push_back(v(i));
    return a;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(); }

std::string doubled_label(Index doubled_index, Index n) {
    const bool pos = doubled_index < n;
    const Index atom = pos ? doubled_index : doubled_index - n;
    return (pos ? "+" : "-") + std::to_string(atom + 1);
}

std::string support_label(const SignedSupport& s) {
    std::string out;
    for (const SignedAtom& p : s.pairs) {
        if (!out.empty()) out += ",";
        out += (p.sign > 0 ? "+" : "-") + std::to_string(p.index + 1);
    }
    return out;
}

std::string active_label(const std::vector<Index>& active, Index n, char sep = ',') {
    std::string out;
    for (Index j : active) {
        if (!out.empty()) out += sep;
        out += doubled_label(j, n);
    }
    return out;
}

SignedSupport support_from_active(const std::vector<Index>& active, Index n) {
    SignedSupport s;
    for (Index j : active)
        s.pairs.push_back({j < n ? j : j - n, j < n ? 1 : -1});
    std::sort(s.pairs.begin(), s.pairs.end(),
              [](const SignedAtom& u, const SignedAtom& v) { return u.index < v.index; });
    return s;
}

json certify_json(const CertificateReport& rep) {
    json j;
    j["fuchs"] = {
        {"holds", rep.fuchs.holds},
        {"margin", rep.fuchs.margin},
        {"witness", rep.fuchs.witness ? vec_json(*rep.fuchs.witness) : json()},
    };
    j["fuchs_corollary"] = {
        {"holds", rep.fuchs_corollary.holds},
        {"c_opt", vec_json(rep.fuchs_corollary.c_opt)},
        {"max_offsupport_dot", rep.fuchs_corollary.max_dot},
    };
    j["erc"] = {
        {"holds", rep.erc.holds},
        {"coefficient", finite_or_null(rep.erc.coefficient)},
    };
    j["spark"] = rep.spark_value;
    j["l0_unique"] = rep.l0_unique;
    j["l1_unique"] = rep.l1_unique;
    j["l1l0_equivalent"] = rep.l1l0_equivalent;
    j["support"] = {
        {"size", rep.support_size},
        {"rank", rep.support_rank},
    };
    return j;
}

void emit(const json& j, bool quiet, const std::string& quiet_line) {
    if (quiet)
        std::cout << quiet_line << "\n";
    else
        std::cout << j.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Subcommands

int cmd_certify(const std::string& dict_path, const std::string& x0_spec, bool quiet) {
    const AtomMatrix a = load_atoms(dict_path);
    const Vector x0 = parse_vector_spec(x0_spec, a.n(), "--x0");
    const CertificateReport rep = certify(a, make_representation(x0));
    emit(certify_json(rep), quiet, rep.l1_unique ? "true" : "false");
    return rep.l1_unique ? kExitOk : kExitNotUnique;
}

int cmd_solve(const std::string& dict_path, const std::string& y_spec,
              const std::string& method, std::optional<long> max_steps,
              std::optional<double> tol_override, bool quiet) {
    const AtomMatrix a = load_atoms(dict_path);
    const Vector y = parse_vector_spec(y_spec, a.d(), "--y");
    Tolerances tol;
    if (tol_override) tol.residual_tol = *tol_override;

    json j;
    j["method"] = method;
    Vector coeffs;
    std::string quiet_line;

    if (method == "bp" || method == "bp-brute") {
        const BpResult r = method == "bp" ? basis_pursuit(a, y, tol)
                                          : basis_pursuit_brute(a, y, tol);
        coeffs = r.coeffs;
        j["coeffs"] = vec_json(r.coeffs);
        j["objective"] = r.objective;
        j["residual_norm"] = (a.atoms * r.coeffs - y).norm();
        j["dual"] = vec_json(r.dual_point);
        j["unique_hint"] = r.unique_hint;
    } else if (method == "omp" || method == "mp") {
        const long cap = max_steps.value_or(method == "omp" ? a.n() : 1000);
        if (cap < 1) throw CliError{kExitParse, "--max-steps must be at least 1"};
        const PursuitTrace t = method == "omp" ? omp(a, y, cap, tol) : mp(a, y, cap, tol);
        coeffs = t.final_coeffs;
        j["coeffs"] = vec_json(t.final_coeffs);
        j["residual_norm"] = t.steps.empty() ? y.norm() : t.steps.back().residual_norm;
        j["converged"] = t.converged;
        j["steps_used"] = t.steps_used;
        json steps = json::array();
        for (const PursuitStep& st : t.steps) {
            steps.push_back({
                {"atom", (st.chosen_index % a.n()) + 1},
                {"sign", st.chosen_index < a.n() ? 1 : -1},
                {"correlation", st.correlation},
                {"coeffs_after", vec_json(st.coeffs_after)},
                {"residual_norm", st.residual_norm},
            });
        }
        j["trace"] = steps;
    } else {
        throw CliError{kExitParse, "unknown method '" + method + "' (bp, bp-brute, omp, mp)"};
    }

    std::ostringstream line;
    for (Index i = 0; i < coeffs.size(); ++i) line << (i ? " " : "") << coeffs(i);
    emit(j, quiet, line.str());
    return kExitOk;
}

int cmd_geometry_vertices(const std::string& dict_path, const std::string& plot_path,
                          bool quiet) {
    const AtomMatrix a = load_atoms(dict_path);
    const std::vector<PolarVertex> verts = enumerate_polar_vertices(a);

    json j;
    j["vertex_count"] = verts.size();
    json rows = json::array();
    for (const PolarVertex& v : verts) {
        rows.push_back({
            {"point", vec_json(v.point)},
            {"active", active_label(v.active_set, a.n())},
        });
    }
    j["vertices"] = rows;

    if (!plot_path.empty()) {
        if (a.d() != 2 && a.d() != 3)
            throw CliError{kExitDimension, "--plot-data supports d = 2 or d = 3 only"};
        std::ofstream out(plot_path);
        if (!out) throw CliError{kExitParse, "cannot open plot file: " + plot_path};
        out.precision(17);
        for (const PolarVertex& v : verts) {
            for (Index i = 0; i < v.point.size(); ++i) out << v.point(i) << ",";
            out << "v:" << active_label(v.active_set, a.n(), ';') << "\n";
        }
        // The polar polytope is the convex hull of the scaled atoms
        // ±aᵢ/‖aᵢ‖² in the dual picture; emit both signs per atom.
        for (int sign : {+1, -1}) {
            for (Index i = 0; i < a.n(); ++i) {
                const Vector p = sign * a.atoms.col(i) / a.atoms.col(i).squaredNorm();
                for (Index r = 0; r < p.size(); ++r) out << p(r) << ",";
                out << "a:" << (sign > 0 ? "+" : "-") << (i + 1) << "\n";
            }
        }
    }

    emit(j, quiet, std::to_string(verts.size()));
    return kExitOk;
}

int cmd_geometry_neighborly(const std::string& dict_path, long k, bool quiet) {
    const AtomMatrix a = load_atoms(dict_path);
    if (k < 1 || k > a.d())
        throw CliError{kExitDimension, "--k must satisfy 1 <= k <= d"};
    const NeighbourlyResult r = is_k_neighbourly(a, k);
    json j;
    j["k"] = k;
    j["neighborly"] = r.verdict;
    j["first_failure"] = r.first_failure ? json(support_label(*r.first_failure)) : json();
    emit(j, quiet, r.verdict ? "true" : "false");
    return kExitOk;
}

int cmd_geometry_spark(const std::string& dict_path, bool quiet) {
    const AtomMatrix a = load_atoms(dict_path);
    const Index s = spark(a);
    json j;
    j["spark"] = s;
    emit(j, quiet, std::to_string(s));
    return kExitOk;
}

// ---------------------------------------------------------------------------
// Built-in demos: hard-coded worked examples with a PASS/FAIL check of every
// printed quantity at 1e-9 absolute tolerance.

constexpr double kDemoTol = 1e-9;

bool close(double a, double b) { return std::abs(a - b) <= kDemoTol; }

int demo_unit_norm_d3(bool quiet) {
    const double s3 = 1.0 / std::sqrt(3.0);
    Matrix m(3, 3);
    m << 1, 0, s3,
         0, 1, s3,
         0, 0, s3;
    const AtomMatrix a{m};
    Vector x0(3);
    x0 << 1, 1, 0;
    const CertificateReport rep = certify(a, make_representation(x0));

    const double expected = 2.0 / std::sqrt(3.0);
    const Vector witness = rep.fuchs.witness.value_or(Vector::Zero(3));
    const double a3_dot = a.atoms.col(2).dot(witness);

    bool pass = true;
    pass &= close(rep.erc.coefficient, expected) && !rep.erc.holds;
    pass &= close(rep.fuchs_corollary.max_dot, expected) && !rep.fuchs_corollary.holds;
    pass &= rep.fuchs.holds && rep.fuchs.witness.has_value() && std::abs(a3_dot) < 1.0;
    pass &= rep.spark_value == 4 && rep.l1_unique;

    if (!quiet) {
        std::cout << "demo unit-norm-d3: three unit atoms in R^3, x0 = [1, 1, 0]\n"
                  << "  a1 = e1, a2 = e2, a3 = (1/sqrt(3))[1, 1, 1]\n"
                  << "  erc coefficient      = " << rep.erc.coefficient
                  << "  (expected 2/sqrt(3) = " << expected << ") -> holds="
                  << (rep.erc.holds ? "true" : "false") << "\n"
                  << "  corollary max dot    = " << rep.fuchs_corollary.max_dot
                  << "  (same 2/sqrt(3) probe value) -> holds="
                  << (rep.fuchs_corollary.holds ? "true" : "false") << "\n"
                  << "  fuchs margin         = " << rep.fuchs.margin
                  << ", witness a3 dot = " << a3_dot << " (inside (-1, 1)) -> holds="
                  << (rep.fuchs.holds ? "true" : "false") << "\n"
                  << "  spark = " << rep.spark_value
                  << ", l1_unique = " << (rep.l1_unique ? "true" : "false") << "\n";
        json j = certify_json(rep);
        j["demo"] = "unit-norm-d3";
        j["expected_coefficient"] = expected;
        j["witness_a3_dot"] = a3_dot;
        std::cout << j.dump(2) << "\n";
    }
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitParse;
}

int demo_omp_two_step(bool quiet) {
    const double s2 = std::sqrt(2.0);
    Matrix m(2, 2);
    m << 1, s2,
         0, s2;
    const AtomMatrix a{m};
    Vector y(2);
    y << 1, 0;

    const PursuitTrace one = omp(a, y, 1);
    const PursuitTrace two = omp(a, y, 2);

    bool pass = two.steps.size() == 2 && one.steps_used == 1 && !one.converged;
    if (pass) {
        const PursuitStep& s1 = two.steps[0];
        const PursuitStep& s2nd = two.steps[1];
        const Vector r1 = y - m * s1.coeffs_after;
        pass &= s1.chosen_index == 1;  // +a2 beats +a1 on raw inner products
        pass &= close(s1.correlation, s2);
        pass &= close(s1.coeffs_after(1), 1.0 / (2.0 * s2));
        pass &= close(r1(0), 0.5) && close(r1(1), -0.5);
        pass &= s2nd.chosen_index == 0 && close(s2nd.correlation, 0.5);
        pass &= two.converged && two.steps_used == 2;
        pass &= close(two.final_coeffs(0), 1.0) && close(two.final_coeffs(1), 0.0);
    }

    if (!quiet) {
        std::cout << "demo omp-two-step: a1 = [1, 0], a2 = [sqrt(2), sqrt(2)], y = [1, 0]\n";
        json steps = json::array();
        for (size_t k = 0; k < two.steps.size(); ++k) {
            const PursuitStep& st = two.steps[k];
            const Vector r = y - m * st.coeffs_after;
            std::cout << "  step " << (k + 1) << ": picks "
                      << doubled_label(st.chosen_index, a.n())
                      << " (inner product " << st.correlation << ")"
                      << ", coeffs = [" << st.coeffs_after(0) << ", " << st.coeffs_after(1)
                      << "], residual = [" << r(0) << ", " << r(1) << "]"
                      << ", |r| = " << st.residual_norm << "\n";
            steps.push_back({
                {"atom", (st.chosen_index % a.n()) + 1},
                {"correlation", st.correlation},
                {"coeffs_after", vec_json(st.coeffs_after)},
                {"residual", vec_json(r)},
            });
        }
        std::cout << "  one-step run converged: " << (one.converged ? "true" : "false")
                  << " (the wrong atom a2 cannot finish in m = 1 steps)\n"
                  << "  two-step final coeffs: [" << two.final_coeffs(0) << ", "
                  << two.final_coeffs(1) << "]\n";
        json j;
        j["demo"] = "omp-two-step";
        j["steps"] = steps;
        j["one_step_converged"] = one.converged;
        j["final_coeffs"] = vec_json(two.final_coeffs);
        j["expected_step1_coeff"] = 1.0 / (2.0 * s2);
        std::cout << j.dump(2) << "\n";
    }
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitParse;
}

int demo_fig_regions(bool quiet) {
    const double s2 = std::sqrt(2.0);
    Matrix m(2, 2);
    m << 1, s2,
         0, s2;
    const AtomMatrix a{m};
    const double beta = 0.75;
    const Vector y = beta * a.atoms.col(0);

    const std::vector<PolarVertex> verts = enumerate_polar_vertices(a);
    bool pass = verts.size() == 4;

    // y = beta*a1 ties the two vertices sharing the a1 facet (c1 = 1).
    std::vector<const PolarVertex*> ties;
    for (const PolarVertex& v : verts)
        if (std::abs(v.point(0) - 1.0) <= kDemoTol) ties.push_back(&v);
    pass &= ties.size() == 2;

    json tie_rows = json::array();
    if (!quiet) {
        std::cout << "demo fig-regions: a1 = [1, 0], a2 = [sqrt(2), sqrt(2)], y = " << beta
                  << "*a1\n  polar vertices:\n";
        for (const PolarVertex& v : verts)
            std::cout << "    (" << v.point(0) << ", " << v.point(1) << ")  active "
                      << active_label(v.active_set, a.n()) << "\n";
    }

    if (pass) {
        for (const PolarVertex* v : ties) {
            const Vector x = recover_primal_from_dual(a, y, v->point);
            const SignedSupport basis = support_from_active(v->active_set, a.n());
            const bool inside = cone_contains(a, basis, v->point);
            const bool recovered = close(x(0), beta) && close(x(1), 0.0);
            pass &= recovered;
            // The {+1,+2} basis has an external vertex here; {+1,-2} does not.
            const bool has_minus = basis.pairs.size() == 2 && basis.pairs[1].sign < 0;
            pass &= inside == has_minus;
            if (!quiet) {
                std::cout << "  tie vertex (" << v->point(0) << ", " << v->point(1)
                          << ") basis {" << support_label(basis) << "}: recovers x = ["
                          << x(0) << ", " << x(1) << "], vertex "
                          << (inside ? "inside" : "outside") << " its cone\n";
                tie_rows.push_back({
                    {"vertex", vec_json(v->point)},
                    {"basis", support_label(basis)},
                    {"recovered", vec_json(x)},
                    {"vertex_in_cone", inside},
                });
            }
        }
    }

    if (!quiet) {
        json j;
        j["demo"] = "fig-regions";
        j["vertex_count"] = verts.size();
        j["beta"] = beta;
        j["ties"] = tie_rows;
        std::cout << j.dump(2) << "\n";
    }
    std::cout << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kExitOk : kExitParse;
}

int cmd_demo(const std::string& name, bool quiet) {
    if (name == "unit-norm-d3") return demo_unit_norm_d3(quiet);
    if (name == "omp-two-step") return demo_omp_two_step(quiet);
    if (name == "fig-regions") return demo_fig_regions(quiet);
    throw CliError{kExitParse,
                   "unknown demo '" + name + "' (fig-regions, unit-norm-d3, omp-two-step)"};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sparse recovery certificates, basis pursuit, and polar-polytope geometry"};
    app.require_subcommand(1);

    std::string dict_path, x0_spec, y_spec, plot_path, demo_name;
    std::string method = "bp";
    long k = 1;
    std::optional<long> max_steps;
    std::optional<double> tol_override;
    bool quiet = false;
    app.add_flag("--quiet", quiet, "print only the headline value");

    CLI::App* certify_cmd =
        app.add_subcommand("certify", "certificate report for a representation");
    certify_cmd->fallthrough();
    certify_cmd->add_option("--dict", dict_path, "dictionary file (columns are atoms)")
        ->required();
    certify_cmd->add_option("--x0", x0_spec, "representation: dense values or index:value pairs")
        ->required();

    CLI::App* solve_cmd = app.add_subcommand("solve", "recover a representation of y");
    solve_cmd->fallthrough();
    solve_cmd->add_option("--dict", dict_path, "dictionary file (columns are atoms)")
        ->required();
    solve_cmd->add_option("--y", y_spec, "observation: dense values or index:value pairs")
        ->required();
    solve_cmd->add_option("--method", method, "bp | bp-brute | omp | mp");
    solve_cmd->add_option("--max-steps", max_steps, "pursuit step cap");
    solve_cmd->add_option("--tol", tol_override, "pursuit residual stopping tolerance");

    CLI::App* geom_cmd = app.add_subcommand("geometry", "polar-polytope analysis");
    geom_cmd->fallthrough();
    geom_cmd->require_subcommand(1);
    CLI::App* vertices_cmd = geom_cmd->add_subcommand("vertices", "enumerate polar vertices");
    vertices_cmd->fallthrough();
    vertices_cmd->add_option("--dict", dict_path, "dictionary file")->required();
    vertices_cmd->add_option("--plot-data", plot_path, "write x,y[,z],label CSV rows");
    CLI::App* neighborly_cmd =
        geom_cmd->add_subcommand("neighborly", "k-neighbourliness check");
    neighborly_cmd->fallthrough();
    neighborly_cmd->add_option("--dict", dict_path, "dictionary file")->required();
    neighborly_cmd->add_option("--k", k, "neighbourliness order")->required();
    CLI::App* spark_cmd = geom_cmd->add_subcommand("spark", "smallest dependent column count");
    spark_cmd->fallthrough();
    spark_cmd->add_option("--dict", dict_path, "dictionary file")->required();

    CLI::App* demo_cmd =
        app.add_subcommand("demo", "built-in worked examples with PASS/FAIL checks");
    demo_cmd->fallthrough();
    demo_cmd->add_option("name", demo_name, "fig-regions | unit-norm-d3 | omp-two-step")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitParse;
    }

    try {
        if (certify_cmd->parsed()) return cmd_certify(dict_path, x0_spec, quiet);
        if (solve_cmd->parsed())
            return cmd_solve(dict_path, y_spec, method, max_steps, tol_override, quiet);
        if (geom_cmd->parsed()) {
            if (vertices_cmd->parsed()) return cmd_geometry_vertices(dict_path, plot_path, quiet);
            if (neighborly_cmd->parsed()) return cmd_geometry_neighborly(dict_path, k, quiet);
            if (spark_cmd->parsed()) return cmd_geometry_spark(dict_path, quiet);
        }
        if (demo_cmd->parsed()) return cmd_demo(demo_name, quiet);
        std::cerr << "error: no subcommand\n";
        return kExitParse;
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const unbounded_polar_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnboundedPolar;
    } catch (const guard_exceeded_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
    } catch (const infeasible_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
}
