// Command-line front end: builds bases and kernels, runs spectral solves,
// and validates the library against the bundled reference tables.

#include <CLI11.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "tkern/tkern.hpp"

namespace {

using tkern::cplx;

double parse_number(const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("cli: bad number '" + s + "'");
    }
    if (used != s.size() || s.empty()) throw std::invalid_argument("cli: bad number '" + s + "'");
    return v;
}

/// Interval half-lengths accept plain numbers and pi expressions: "pi",
/// "2pi", "0.5*pi", "pi/2".
double parse_extent(std::string s) {
    for (auto& ch : s) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    const auto pos = s.find("pi");
    if (pos == std::string::npos) return parse_number(s);
    std::string pre = s.substr(0, pos), post = s.substr(pos + 2);
    if (!pre.empty() && pre.back() == '*') pre.pop_back();
    double value = (pre.empty() ? 1.0 : parse_number(pre)) * 3.14159265358979323846;
    if (!post.empty()) {
        if (post.front() != '/') throw std::invalid_argument("cli: bad extent '" + s + "'");
        value /= parse_number(post.substr(1));
    }
    return value;
}

tkern::Potential load_potential(const std::string& spec, const std::string& b_str,
                                std::size_t points, int jet_order) {
    if (spec.rfind("builtin:", 0) == 0) {
        if (b_str.empty()) throw std::invalid_argument("cli: --b is required for builtin potentials");
        return tkern::make_builtin_potential(spec.substr(8), parse_extent(b_str), points, jet_order);
    }
    std::ifstream probe(spec);
    if (!probe.good()) throw std::invalid_argument("cli: cannot open potential file '" + spec + "'");
    probe.close();
    auto p = tkern::potential_from_csv_samples(tkern::read_csv_samples(spec), spec);
    if (!b_str.empty()) {
        const double want = parse_extent(b_str);
        if (std::abs(want - p.q.b()) > 1e-9 * (1.0 + want))
            throw std::invalid_argument("cli: --b disagrees with the sampled domain");
    }
    return p;
}

nlohmann::ordered_json complex_json(cplx z) {
    return nlohmann::ordered_json::array({z.real(), z.imag()});
}

void emit_json(const nlohmann::ordered_json& j, const std::string& path) {
    const std::string text = j.dump(2);
    if (path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(path);
        if (!out) throw std::invalid_argument("cli: cannot write '" + path + "'");
        out << text << "\n";
    }
}

void require_mesh(int mesh) {
    if (mesh < 2 || mesh > 2000)
        throw std::invalid_argument("cli: --mesh must be between 2 and 2000");
}

template <typename Eval>
void write_mesh_csv(const std::string& path, Eval&& kernel, double b, int mesh) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cli: cannot write '" + path + "'");
    out << "x,t,re,im\n";
    for (int i = 0; i < mesh; ++i) {
        const double x = -b + 2.0 * b * i / (mesh - 1);
        for (int j = 0; j < mesh; ++j) {
            const double t = -b + 2.0 * b * j / (mesh - 1);
            if (std::abs(t) > std::abs(x)) continue;
            const cplx v = kernel(x, t);
            out << tkern::detail::format_double(x) << ',' << tkern::detail::format_double(t) << ','
                << tkern::detail::format_double(v.real()) << ','
                << tkern::detail::format_double(v.imag()) << '\n';
        }
    }
}

std::optional<tkern::ReferenceKernelKind> closed_form_kind(const std::string& name) {
    using RK = tkern::ReferenceKernelKind;
    if (name == "sech") return RK::sech_profile;
    if (name == "cosh" || name == "const:1") return RK::cosh_profile;
    if (name == "model") return RK::affine;
    return std::nullopt;
}

std::optional<tkern::ReferenceKernelKind> reciprocal_closed_form_kind(const std::string& name) {
    using RK = tkern::ReferenceKernelKind;
    if (name == "sech") return RK::cosh_profile;
    if (name == "cosh" || name == "const:1") return RK::sech_profile;
    if (name == "model") return RK::affine_reciprocal;
    return std::nullopt;
}

tkern::FitMethod parse_fit_method(const std::string& m) {
    if (m == "remez") return tkern::FitMethod::minimax;
    if (m == "least-squares" || m == "lsq") return tkern::FitMethod::least_squares;
    throw std::invalid_argument("cli: unknown method '" + m + "' (use remez or least-squares)");
}

// ---------------------------------------------------------------------------
// subcommand configs
// ---------------------------------------------------------------------------

struct BasisConfig {
    std::string potential, b, output, json;
    std::size_t points = 5001;
    int order = 10;
};

struct KernelConfig {
    std::string potential, b, output, json, kernel_out;
    std::string method = "remez"; // kernel-goursat only
    std::size_t points = 5001;
    int N = 10;
    int mesh = 100;
};

struct DarbouxConfig {
    std::string potential, b, output, json;
    std::string source = "taylor";
    std::string direction = "forward";
    std::size_t points = 5001;
    int N = 8;
    int mesh = 100;
};

struct EigenConfig {
    std::string potential, b, output, json;
    std::string method = "remez";
    std::size_t points = 5001;
    int N = 30;
    int count = 10;
    double omega_max = 0.0, scan_step = 0.0, root_tol = 1e-13;
};

struct ValidateConfig {
    std::string suite = "all";
    std::string json;
};

int run_basis(const BasisConfig& cfg) {
    auto p = load_potential(cfg.potential, cfg.b, cfg.points, 2);
    const tkern::BasisFamily fam = tkern::family_for(p, cfg.order);
    nlohmann::ordered_json j;
    j["command"] = "basis";
    j["potential"] = p.name;
    j["b"] = fam.b();
    j["n_points"] = fam.n_points();
    j["order"] = fam.order;
    j["h"] = complex_json(fam.h);
    j["family_fingerprint"] = fam.fingerprint();
    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) throw std::invalid_argument("cli: cannot write '" + cfg.output + "'");
        out << "x";
        for (int k = 0; k <= fam.order; ++k) out << ",phi" << k << "_re,phi" << k << "_im";
        for (int k = 0; k <= fam.order; ++k) out << ",psi" << k << "_re,psi" << k << "_im";
        out << "\n";
        for (std::size_t i = 0; i < fam.n_points(); ++i) {
            out << tkern::detail::format_double(fam.f.node(i));
            for (int k = 0; k <= fam.order; ++k) {
                const cplx v = fam.phi[static_cast<std::size_t>(k)][i];
                out << ',' << tkern::detail::format_double(v.real()) << ','
                    << tkern::detail::format_double(v.imag());
            }
            for (int k = 0; k <= fam.order; ++k) {
                const cplx v = fam.psi[static_cast<std::size_t>(k)][i];
                out << ',' << tkern::detail::format_double(v.real()) << ','
                    << tkern::detail::format_double(v.imag());
            }
            out << "\n";
        }
        j["csv"] = cfg.output;
    }
    emit_json(j, cfg.json);
    return 0;
}

int run_kernel(const KernelConfig& cfg, bool taylor) {
    require_mesh(cfg.mesh);
    auto p = load_potential(cfg.potential, cfg.b, cfg.points, std::max(40, cfg.N + 2));
    auto fam = std::make_shared<const tkern::BasisFamily>(tkern::family_for(p, cfg.N));

    tkern::KernelApproximation kernel;
    nlohmann::ordered_json j;
    j["command"] = taylor ? "kernel-taylor" : "kernel-goursat";
    j["potential"] = p.name;
    j["b"] = fam->b();
    j["n_points"] = fam->n_points();
    j["N"] = cfg.N;
    if (taylor) {
        if (!p.jet)
            throw std::invalid_argument(
                "cli: this potential carries no derivative data; use kernel-goursat instead");
        const tkern::SCoefficientTable table(std::max(1, cfg.N));
        kernel = p.jet_inv ? tkern::kernel_from_taylor(fam, table, *p.jet, *p.jet_inv, cfg.N)
                           : tkern::kernel_from_taylor(fam, table, *p.jet, cfg.N);
        j["method"] = "taylor";
    } else {
        const auto method = parse_fit_method(cfg.method);
        auto fit = tkern::kernel_from_goursat(fam, p.q, method, cfg.N);
        kernel = std::move(fit.kernel);
        j["method"] = cfg.method;
        j["fit"] = {{"even_error", fit.even_error},
                    {"odd_error", fit.odd_error},
                    {"even_minimax_converged", fit.even_minimax_converged},
                    {"odd_minimax_converged", fit.odd_minimax_converged}};
    }

    const auto targets = tkern::goursat_targets(p.q, fam->h);
    const auto resid = tkern::goursat_residual(kernel, targets);
    j["goursat_residual"] = {{"even", resid.even_part}, {"odd", resid.odd_part}};
    if (const auto kind = closed_form_kind(p.name)) {
        const auto ref = tkern::reference_kernel(*kind);
        j["reference_error"] = tkern::mesh_error(kernel, ref, fam->b(), cfg.mesh);
    }
    j["kernel"] = kernel.to_json();

    if (!cfg.kernel_out.empty()) {
        nlohmann::ordered_json file;
        file["potential"] = p.name;
        file["b"] = fam->b();
        file["n_points"] = fam->n_points();
        file["kernel"] = kernel.to_json();
        emit_json(file, cfg.kernel_out);
    }
    if (!cfg.output.empty()) {
        write_mesh_csv(cfg.output, [&](double x, double t) { return kernel.evaluate(x, t); },
                       fam->b(), cfg.mesh);
        j["csv"] = cfg.output;
    }
    emit_json(j, cfg.json);
    return 0;
}

int run_darboux(const DarbouxConfig& cfg) {
    require_mesh(cfg.mesh);
    auto p = load_potential(cfg.potential, cfg.b, cfg.points, std::max(40, cfg.N + 2));
    auto fam = std::make_shared<const tkern::BasisFamily>(tkern::family_for(p, cfg.N));
    const double b = fam->b();

    tkern::KernelApproximation source;
    if (cfg.source == "taylor") {
        if (!p.jet)
            throw std::invalid_argument("cli: this potential carries no derivative data; "
                                        "pick --source remez or least-squares");
        const tkern::SCoefficientTable table(std::max(1, cfg.N));
        source = p.jet_inv ? tkern::kernel_from_taylor(fam, table, *p.jet, *p.jet_inv, cfg.N)
                           : tkern::kernel_from_taylor(fam, table, *p.jet, cfg.N);
    } else {
        source = tkern::kernel_from_goursat(fam, p.q, parse_fit_method(cfg.source), cfg.N).kernel;
    }

    const auto src_eval = source.as_evaluable();
    const auto forward = tkern::darboux_kernel(src_eval, *fam, tkern::DarbouxDirection::forward);

    nlohmann::ordered_json j;
    j["command"] = "darboux";
    j["potential"] = p.name;
    j["b"] = b;
    j["n_points"] = fam->n_points();
    j["N"] = cfg.N;
    j["source"] = cfg.source;
    j["direction"] = cfg.direction;

    const auto vek = tkern::vekua_residual(src_eval, forward, *fam);
    j["vekua_residual"] = {{"first", vek.first}, {"second", vek.second}};

    const double inner = 0.9 * b;
    if (cfg.direction == "forward") {
        if (const auto kind = reciprocal_closed_form_kind(p.name)) {
            const auto ref = tkern::reference_kernel(*kind);
            j["reference_error"] = tkern::mesh_error(
                [&](double x, double t) { return forward.value(x, t); },
                [&](double x, double t) { return ref.value(x, t); }, inner, cfg.mesh);
        }
        if (!cfg.output.empty()) {
            write_mesh_csv(cfg.output, [&](double x, double t) { return forward.value(x, t); }, b,
                           cfg.mesh);
            j["csv"] = cfg.output;
        }
    } else if (cfg.direction == "roundtrip") {
        const auto back = tkern::darboux_kernel(forward, *fam, tkern::DarbouxDirection::reverse);
        j["round_trip_error"] = tkern::mesh_error(
            [&](double x, double t) { return back.value(x, t); },
            [&](double x, double t) { return src_eval.value(x, t); }, inner, cfg.mesh);
        if (!cfg.output.empty()) {
            write_mesh_csv(cfg.output, [&](double x, double t) { return back.value(x, t); }, b,
                           cfg.mesh);
            j["csv"] = cfg.output;
        }
    } else {
        throw std::invalid_argument("cli: --direction must be forward or roundtrip");
    }
    emit_json(j, cfg.json);
    return 0;
}

int run_eigen(const EigenConfig& cfg) {
    auto p = load_potential(cfg.potential, cfg.b, cfg.points, std::max(40, cfg.N + 2));
    auto fam = std::make_shared<const tkern::BasisFamily>(tkern::family_for(p, cfg.N));

    tkern::KernelApproximation kernel;
    if (cfg.method == "taylor") {
        if (!p.jet)
            throw std::invalid_argument("cli: this potential carries no derivative data; "
                                        "pick --method remez or least-squares");
        const tkern::SCoefficientTable table(std::max(1, cfg.N));
        kernel = p.jet_inv ? tkern::kernel_from_taylor(fam, table, *p.jet, *p.jet_inv, cfg.N)
                           : tkern::kernel_from_taylor(fam, table, *p.jet, cfg.N);
    } else {
        kernel = tkern::kernel_from_goursat(fam, p.q, parse_fit_method(cfg.method), cfg.N).kernel;
    }

    tkern::SpectralProblem problem{p.q, fam->b(), std::move(kernel),
                                   {0.0, cfg.omega_max, cfg.scan_step, cfg.root_tol}};
    const auto result = tkern::find_eigenvalues(problem, cfg.count);
    if (!result.complete)
        throw tkern::numerical_error("spectral: scan window exhausted before finding " +
                                     std::to_string(cfg.count) + " eigenvalues");

    nlohmann::ordered_json j;
    j["command"] = "eigen";
    j["potential"] = p.name;
    j["b"] = fam->b();
    j["n_points"] = fam->n_points();
    j["N"] = cfg.N;
    j["method"] = cfg.method;
    j["count"] = cfg.count;
    j["complete"] = result.complete;
    nlohmann::ordered_json vals = nlohmann::ordered_json::array();
    for (const auto& rec : result.values)
        vals.push_back({{"n", rec.index},
                        {"omega", rec.omega},
                        {"lambda", rec.omega_sq},
                        {"residual", rec.char_residual}});
    j["values"] = vals;

    if (!cfg.output.empty()) {
        std::ofstream out(cfg.output);
        if (!out) throw std::invalid_argument("cli: cannot write '" + cfg.output + "'");
        out << "n,omega,lambda,residual\n";
        for (const auto& rec : result.values)
            out << rec.index << ',' << tkern::detail::format_double(rec.omega) << ','
                << tkern::detail::format_double(rec.omega_sq) << ','
                << tkern::detail::format_double(rec.char_residual) << '\n';
        j["csv"] = cfg.output;
    }
    emit_json(j, cfg.json);
    return 0;
}

// ---------------------------------------------------------------------------
// validation suites
// ---------------------------------------------------------------------------

struct CheckItem {
    std::string suite, name, expected, computed, delta;
    bool pass = false;
};

std::string rational_str(const tkern::big_rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

void suite_s_table(std::vector<CheckItem>& items) {
    const tkern::SCoefficientTable table(6);
    std::map<int, int> rows_per_level;
    for (const auto& e : tkern::reference::s_table()) {
        tkern::ParameterList p{e.n, e.ell, e.d, e.parts};
        const tkern::big_int got = table.integer_value(p);
        CheckItem item;
        item.suite = "s-table";
        std::ostringstream nm;
        nm << "S(n=" << e.n << "; l=" << e.ell << "; d=" << e.d << "; parts=";
        for (std::size_t i = 0; i < e.parts.size(); ++i) nm << (i ? "," : "") << e.parts[i];
        nm << ")";
        item.name = nm.str();
        item.expected = std::to_string(e.value);
        item.computed = got.str();
        item.delta = tkern::big_int(got - e.value).str();
        item.pass = got == e.value;
        items.push_back(std::move(item));
        rows_per_level[e.n]++;
    }
    for (const auto& [n, rows] : rows_per_level) {
        CheckItem item;
        item.suite = "s-table";
        item.name = "entry count at level " + std::to_string(n);
        item.expected = std::to_string(rows);
        item.computed = std::to_string(table.level_count(n));
        item.delta = std::to_string(static_cast<long long>(table.level_count(n)) - rows);
        item.pass = table.level_count(n) == static_cast<std::size_t>(rows);
        items.push_back(std::move(item));
    }
}

void suite_coefficients(std::vector<CheckItem>& items) {
    const int n_max = 21;
    const tkern::SCoefficientTable table(n_max);

    tkern::ExactPotentialJet cosh_jet;
    cosh_jet.h = 0;
    cosh_jet.q_derivs.assign(static_cast<std::size_t>(n_max), tkern::big_rational(0));
    cosh_jet.q_derivs[0] = 1;
    tkern::ExactPotentialJet sech_jet;
    sech_jet.h = 0;
    sech_jet.q_derivs = tkern::detail::sech_potential_derivatives_exact(n_max);

    const auto dc = tkern::kernel_derivatives_at_origin(table, cosh_jet, n_max);
    const auto ds = tkern::kernel_derivatives_at_origin(table, sech_jet, n_max);

    tkern::PotentialJet cosh_jet_f{cplx{}, std::vector<cplx>(static_cast<std::size_t>(n_max), cplx{})};
    cosh_jet_f.q_derivs[0] = 1.0;
    const auto qd_f = tkern::detail::sech_potential_derivatives(n_max);
    tkern::PotentialJet sech_jet_f{cplx{}, std::vector<cplx>(qd_f.begin(), qd_f.end())};
    const auto dcf = tkern::kernel_derivatives_at_origin(table, cosh_jet_f, n_max);
    const auto dsf = tkern::kernel_derivatives_at_origin(table, sech_jet_f, n_max);

    for (const auto& row : tkern::reference::kernel_derivative_rows()) {
        const auto n = static_cast<std::size_t>(row.n);
        const tkern::big_rational pow2(tkern::big_int(1) << (row.n + 1));
        const struct {
            const char* tag;
            tkern::big_rational exact;
            cplx floated;
            long long want;
        } rows[2] = {{"cosh", dc[n] * pow2, dcf[n], row.scaled_cosh},
                     {"sech", ds[n] * pow2, dsf[n], row.scaled_sech}};
        for (const auto& r : rows) {
            CheckItem item;
            item.suite = "coefficients";
            item.name = std::string("scaled derivative order ") + std::to_string(row.n) + ", " + r.tag +
                        " (exact)";
            item.expected = std::to_string(r.want);
            item.computed = rational_str(r.exact);
            item.delta = rational_str(r.exact - r.want);
            item.pass = r.exact == tkern::big_rational(r.want);
            items.push_back(item);

            const double exact_d = static_cast<double>(r.want) / std::pow(2.0, row.n + 1);
            const double rel = std::abs(r.floated.real() - exact_d) /
                               std::max(1e-300, std::abs(exact_d));
            CheckItem fitem;
            fitem.suite = "coefficients";
            fitem.name = std::string("derivative order ") + std::to_string(row.n) + ", " + r.tag +
                         " (float)";
            fitem.expected = tkern::detail::format_double(exact_d);
            fitem.computed = tkern::detail::format_double(r.floated.real());
            fitem.delta = tkern::detail::format_double(rel);
            fitem.pass = rel <= 1e-12 && std::abs(r.floated.imag()) <= 1e-12 * std::abs(exact_d);
            items.push_back(fitem);
        }
    }

    const auto ec = tkern::taylor_pair_from_jet(table, sech_jet, n_max).coeffs;
    for (const auto& row : tkern::reference::sech_coefficient_rows()) {
        const auto n = static_cast<std::size_t>(row.n);
        tkern::big_rational nfact(1);
        for (int i = 2; i <= row.n; ++i) nfact *= i;
        const tkern::big_rational scale = tkern::big_rational(tkern::big_int(1) << (row.n + 1)) * nfact;
        const struct {
            const char* tag;
            tkern::big_rational got;
            long long want;
        } rows[2] = {{"c", ec.c[n] * scale, row.c_num}, {"b", ec.b[n] * scale, row.b_num}};
        for (const auto& r : rows) {
            CheckItem item;
            item.suite = "coefficients";
            item.name = std::string("expansion ") + r.tag + std::to_string(row.n) + " numerator";
            item.expected = std::to_string(r.want);
            item.computed = rational_str(r.got);
            item.delta = rational_str(r.got - r.want);
            item.pass = r.got == tkern::big_rational(r.want);
            items.push_back(item);
        }
    }
}

void suite_kernel_errors(std::vector<CheckItem>& items) {
    const std::size_t pts = 4001;
    std::optional<tkern::SCoefficientTable> taylor_table;
    for (const auto& tab : tkern::reference::kernel_error_tables()) {
        const bool taylor = std::string(tab.method) == "taylor";
        int max_order = 0;
        for (const auto& row : tab.rows) max_order = std::max(max_order, row.order);
        const std::string spec = std::string(tab.family) == "sech" ? "sech" : "const:1";
        auto p = tkern::make_builtin_potential(spec, tab.b, pts, max_order + 2);
        auto fam = std::make_shared<const tkern::BasisFamily>(tkern::family_for(p, max_order));
        const auto ref = tkern::reference_kernel(*closed_form_kind(p.name));

        std::vector<cplx> full_c, full_b;
        if (taylor) {
            if (!taylor_table || taylor_table->n_max() < max_order)
                taylor_table.emplace(max_order);
            const auto pair = tkern::taylor_pair_from_jet(*taylor_table, *p.jet, max_order);
            full_c = pair.coeffs.c;
            full_b = pair.coeffs.b;
        }
        for (const auto& row : tab.rows) {
            double err = 0.0;
            if (taylor) {
                std::vector<cplx> c(full_c.begin(), full_c.begin() + row.order + 1);
                std::vector<cplx> bb(full_b.begin(), full_b.begin() + row.order + 1);
                const tkern::KernelApproximation k(fam, std::move(c), std::move(bb));
                err = tkern::mesh_error(k, ref, tab.b, 100);
            } else {
                const auto fit =
                    tkern::kernel_from_goursat(fam, p.q, tkern::FitMethod::minimax, row.order);
                err = tkern::mesh_error(fit.kernel, ref, tab.b, 100);
            }
            const double tol = std::max(2.0 * row.error, 1e-13);
            CheckItem item;
            item.suite = "kernel-errors";
            std::ostringstream nm;
            nm << tab.family << " b=" << tab.b << " " << tab.method << " N=" << row.order;
            item.name = nm.str();
            item.expected = "<= " + tkern::detail::format_double(tol) + " (table: " +
                            tkern::detail::format_double(row.error) + ")";
            item.computed = tkern::detail::format_double(err);
            item.delta = tkern::detail::format_double(err - row.error);
            item.pass = err <= tol;
            items.push_back(std::move(item));
        }
    }
}

void suite_eigenvalues(std::vector<CheckItem>& items) {
    auto p = tkern::make_builtin_potential("exp", 3.14159265358979323846, 5001, 40);
    auto fam = std::make_shared<const tkern::BasisFamily>(tkern::family_for(p, 30));
    auto fit = tkern::kernel_from_goursat(fam, p.q, tkern::FitMethod::minimax, 30);
    tkern::SpectralProblem problem{p.q, fam->b(), std::move(fit.kernel), {}};
    const auto result = tkern::find_eigenvalues(problem, 1000);
    for (const auto& row : tkern::reference::eigenvalue_rows()) {
        CheckItem item;
        item.suite = "eigenvalues";
        item.name = "lambda_" + std::to_string(row.n);
        if (!result.complete || static_cast<std::size_t>(row.n) > result.values.size()) {
            item.expected = tkern::detail::format_double(row.lambda);
            item.computed = "missing";
            item.delta = "";
            item.pass = false;
        } else {
            const double ours = result.values[static_cast<std::size_t>(row.n) - 1].omega_sq;
            item.expected = tkern::detail::format_double(row.lambda);
            item.computed = tkern::detail::format_double(ours);
            item.delta = tkern::detail::format_double(ours - row.lambda);
            item.pass = std::abs(ours - row.lambda) <= 0.75 * row.granularity;
        }
        items.push_back(std::move(item));
    }
}

int run_validate(const ValidateConfig& cfg) {
    std::vector<CheckItem> items;
    bool known = false;
    if (cfg.suite == "s-table" || cfg.suite == "all") { suite_s_table(items); known = true; }
    if (cfg.suite == "coefficients" || cfg.suite == "all") { suite_coefficients(items); known = true; }
    if (cfg.suite == "kernel-errors" || cfg.suite == "all") { suite_kernel_errors(items); known = true; }
    if (cfg.suite == "eigenvalues" || cfg.suite == "all") { suite_eigenvalues(items); known = true; }
    if (!known)
        throw std::invalid_argument("cli: unknown suite '" + cfg.suite +
                                    "' (s-table, coefficients, kernel-errors, eigenvalues, all)");

    int failed = 0;
    for (const auto& item : items) {
        if (!item.pass) ++failed;
        std::cout << (item.pass ? "[PASS] " : "[FAIL] ") << item.suite << " | " << item.name
                  << " | expected " << item.expected << " | computed " << item.computed
                  << " | delta " << item.delta << "\n";
    }
    std::cout << items.size() - static_cast<std::size_t>(failed) << " of " << items.size()
              << " checks passed\n";

    if (!cfg.json.empty()) {
        nlohmann::ordered_json j;
        j["command"] = "validate";
        j["suite"] = cfg.suite;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& item : items)
            arr.push_back({{"suite", item.suite},
                           {"name", item.name},
                           {"expected", item.expected},
                           {"computed", item.computed},
                           {"delta", item.delta},
                           {"pass", item.pass}});
        j["items"] = arr;
        j["passed"] = items.size() - static_cast<std::size_t>(failed);
        j["failed"] = failed;
        emit_json(j, cfg.json);
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"transmutation kernel toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    BasisConfig basis_cfg;
    auto* basis = app.add_subcommand("basis", "build the recursive-integral basis of a potential");
    basis->add_option("--potential", basis_cfg.potential, "builtin:NAME or CSV sample file")->required();
    basis->add_option("--b", basis_cfg.b, "interval half-length (accepts pi expressions)");
    basis->add_option("--points", basis_cfg.points, "grid size (odd)");
    basis->add_option("--order", basis_cfg.order, "highest basis index");
    basis->add_option("--output", basis_cfg.output, "CSV file for the family values");
    basis->add_option("--json", basis_cfg.json, "JSON summary file (default: stdout)");
    basis->callback([&] { exit_code = run_basis(basis_cfg); });

    KernelConfig taylor_cfg;
    auto* ktaylor = app.add_subcommand("kernel-taylor",
                                       "kernel from derivative data of the potential at the origin");
    ktaylor->add_option("--potential", taylor_cfg.potential, "builtin:NAME")->required();
    ktaylor->add_option("--b", taylor_cfg.b, "interval half-length");
    ktaylor->add_option("--points", taylor_cfg.points, "grid size (odd)");
    ktaylor->add_option("--N", taylor_cfg.N, "truncation order");
    ktaylor->add_option("--mesh", taylor_cfg.mesh, "evaluation mesh resolution");
    ktaylor->add_option("--output", taylor_cfg.output, "CSV mesh of the kernel");
    ktaylor->add_option("--kernel-out", taylor_cfg.kernel_out, "JSON file for the coefficients");
    ktaylor->add_option("--json", taylor_cfg.json, "JSON summary file (default: stdout)");
    ktaylor->callback([&] { exit_code = run_kernel(taylor_cfg, true); });

    KernelConfig goursat_cfg;
    auto* kgoursat = app.add_subcommand("kernel-goursat",
                                        "kernel fitted to its characteristic boundary data");
    kgoursat->add_option("--potential", goursat_cfg.potential, "builtin:NAME or CSV sample file")
        ->required();
    kgoursat->add_option("--b", goursat_cfg.b, "interval half-length");
    kgoursat->add_option("--points", goursat_cfg.points, "grid size (odd)");
    kgoursat->add_option("--N", goursat_cfg.N, "truncation order");
    kgoursat->add_option("--method", goursat_cfg.method, "remez or least-squares");
    kgoursat->add_option("--mesh", goursat_cfg.mesh, "evaluation mesh resolution");
    kgoursat->add_option("--output", goursat_cfg.output, "CSV mesh of the kernel");
    kgoursat->add_option("--kernel-out", goursat_cfg.kernel_out, "JSON file for the coefficients");
    kgoursat->add_option("--json", goursat_cfg.json, "JSON summary file (default: stdout)");
    kgoursat->callback([&] { exit_code = run_kernel(goursat_cfg, false); });

    DarbouxConfig darboux_cfg;
    auto* darboux = app.add_subcommand("darboux",
                                       "kernel for the reciprocal solution via the line-integral map");
    darboux->add_option("--potential", darboux_cfg.potential, "builtin:NAME or CSV sample file")
        ->required();
    darboux->add_option("--b", darboux_cfg.b, "interval half-length");
    darboux->add_option("--points", darboux_cfg.points, "grid size (odd)");
    darboux->add_option("--N", darboux_cfg.N, "truncation order of the source kernel");
    darboux->add_option("--source", darboux_cfg.source, "taylor, remez, or least-squares");
    darboux->add_option("--direction", darboux_cfg.direction, "forward or roundtrip");
    darboux->add_option("--mesh", darboux_cfg.mesh, "evaluation mesh resolution");
    darboux->add_option("--output", darboux_cfg.output, "CSV mesh of the transformed kernel");
    darboux->add_option("--json", darboux_cfg.json, "JSON summary file (default: stdout)");
    darboux->callback([&] { exit_code = run_darboux(darboux_cfg); });

    EigenConfig eigen_cfg;
    auto* eigen = app.add_subcommand("eigen", "Dirichlet eigenvalues on [0, b]");
    eigen->add_option("--potential", eigen_cfg.potential, "builtin:NAME or CSV sample file")
        ->required();
    eigen->add_option("--b", eigen_cfg.b, "interval half-length");
    eigen->add_option("--points", eigen_cfg.points, "grid size (odd)");
    eigen->add_option("--N", eigen_cfg.N, "kernel truncation order");
    eigen->add_option("--method", eigen_cfg.method, "remez, least-squares, or taylor");
    eigen->add_option("--count", eigen_cfg.count, "number of eigenvalues");
    eigen->add_option("--omega-max", eigen_cfg.omega_max, "scan cap (0 = automatic)");
    eigen->add_option("--scan-step", eigen_cfg.scan_step, "scan step (0 = automatic)");
    eigen->add_option("--root-tol", eigen_cfg.root_tol, "relative tolerance for accepted roots");
    eigen->add_option("--output", eigen_cfg.output, "CSV file for the eigenvalues");
    eigen->add_option("--json", eigen_cfg.json, "JSON summary file (default: stdout)");
    eigen->callback([&] { exit_code = run_eigen(eigen_cfg); });

    ValidateConfig validate_cfg;
    auto* validate = app.add_subcommand("validate", "recompute the bundled reference tables");
    validate->add_option("--suite", validate_cfg.suite,
                         "s-table, coefficients, kernel-errors, eigenvalues, or all");
    validate->add_option("--json", validate_cfg.json, "JSON report file");
    validate->callback([&] { exit_code = run_validate(validate_cfg); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const tkern::numerical_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
