// lapuniq: classify sequence families, build and verify non-uniqueness
// witnesses, evaluate exact/numeric Laplace transforms, subordinate, invert,
// and run the cross-module property harness.
//
// Exit codes: 0 success, 1 verification/tolerance failure, 2 usage error.

#include "lapuniq/classify.hpp"
#include "lapuniq/descriptors.hpp"
#include "lapuniq/family_parse.hpp"
#include "lapuniq/harness.hpp"
#include "lapuniq/laplace_exact.hpp"
#include "lapuniq/laplace_numeric.hpp"
#include "lapuniq/post_widder.hpp"
#include "lapuniq/serialize.hpp"
#include "lapuniq/subordination.hpp"
#include "lapuniq/witness.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace lapuniq;
using cplx = std::complex<double>;

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::ostream& open_out(std::ofstream& file, const std::string& path) {
    if (path.empty() || path == "-") return std::cout;
    file.open(path);
    if (!file) throw CLI::ValidationError("--out", "cannot open '" + path + "'");
    return file;
}

/// Points file: one point per line, comma-separated complex literals
/// ("2", "1+1i", "0.5-2i"); '#' starts a comment line.
std::vector<std::vector<cplx>> read_points(const std::string& path, std::size_t dim) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open points file '" + path + "'");
    std::vector<std::vector<cplx>> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<cplx> p;
        for (const auto& f : lapuniq::detail::split_str(line, ','))
            p.push_back(lapuniq::detail::parse_complex(f));
        if (p.size() != dim)
            throw std::runtime_error("points file: expected " + std::to_string(dim) +
                                     " components per line");
        out.push_back(std::move(p));
    }
    if (out.empty()) throw std::runtime_error("points file '" + path + "' is empty");
    return out;
}

void write_csv_header(std::ostream& os, std::size_t dim) {
    for (std::size_t j = 1; j <= dim; ++j)
        os << "point" << j << "_re,point" << j << "_im,";
    os << "value_re,value_im,abs_error,method\n";
}

void write_csv_row(std::ostream& os, const std::vector<cplx>& p, cplx v, double err,
                   const std::string& method) {
    for (const auto& c : p) os << fmt17(c.real()) << ',' << fmt17(c.imag()) << ',';
    os << fmt17(v.real()) << ',' << fmt17(v.imag()) << ',' << fmt17(err) << ',' << method
       << '\n';
}

int cmd_classify(const std::vector<std::string>& families, std::size_t prefix,
                 const std::string& out_path) {
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    for (const auto& spec : families) {
        SequenceFamily fam = parse_family(spec);
        Verdict v = classify_nd(fam, prefix);
        nlohmann::json j;
        j["family"] = spec;
        j["status"] = to_string(v.status);
        j["rule"] = v.rule;
        j["certificate"] = v.certificate;
        os << j.dump() << '\n';
    }
    return 0;
}

int cmd_witness(const std::string& id, std::size_t npoints, std::optional<double> tol_opt,
                const std::string& family_override, const std::string& out_path) {
    Witness w = make_witness(id);
    if (!family_override.empty()) {
        if (family_override == "diag-kk")
            w.annihilated = diagonal_family();
        else if (family_override == "doetsch")
            w.annihilated = doetsch_family();
        else
            w.annihilated = parse_family(family_override);
    }
    double tol = tol_opt.value_or(w.exact_transform ? 0.0 : 1e-10);
    auto rep = verify_annihilation(w, npoints, tol);

    if (!out_path.empty()) {
        std::ofstream mf(out_path + ".manifest.json");
        mf << witness_manifest(w).dump(2) << '\n';
        if (w.function) {
            std::ofstream ff(out_path + ".exppoly.txt");
            write_text(ff, *w.function);
        }
        if (w.exact_transform) {
            std::ofstream tf(out_path + ".rattrans.txt");
            write_text(tf, *w.exact_transform);
        }
    }
    nlohmann::json j;
    j["id"] = w.id;
    j["points"] = npoints;
    j["max_abs"] = rep.max_abs;
    j["tol"] = tol;
    j["exact_path"] = rep.exact_path;
    j["pass"] = rep.pass;
    std::cout << j.dump() << '\n';
    return rep.pass ? 0 : 1;
}

int cmd_transform(const std::string& witness_id, const std::string& function_file,
                  const std::string& points_file, double tol, const std::string& out_path) {
    std::optional<ExpPolynomial> f;
    std::optional<RationalTransform> F;
    if (!witness_id.empty()) {
        Witness w = make_witness(witness_id);
        f = w.function;
        F = w.exact_transform;
    } else {
        std::ifstream in(function_file);
        if (!in) throw std::runtime_error("cannot open function file '" + function_file + "'");
        f = read_exp_polynomial(in);
        F = laplace_exact(*f);
    }
    std::size_t dim = F ? F->dim() : f->dim();
    auto pts = read_points(points_file, dim);

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    write_csv_header(os, dim);
    bool any_flagged = false;
    for (const auto& p : pts) {
        if (F) {
            cplx v = F->eval(p);
            if (std::isfinite(v.real()) && std::isfinite(v.imag())) {
                write_csv_row(os, p, v, 0.0, "exact");
            } else {
                write_csv_row(os, p, {0, 0}, 0.0, "error:pole");
                any_flagged = true;
            }
        } else {
            // no exact transform known: numeric path from the function
            auto d = descriptor_of(*f);
            try {
                auto tv = laplace_numeric(d, p, tol);
                write_csv_row(os, p, tv.value, tv.abs_error, "numeric");
            } catch (const std::exception&) {
                write_csv_row(os, p, {0, 0}, 0.0, "error:region");
                any_flagged = true;
            }
        }
    }
    return any_flagged ? 1 : 0;
}

int cmd_subordinate(const std::string& function_file, double gamma,
                    const std::string& points_file, double tol,
                    const std::string& out_path) {
    FunctionDescriptor G;
    if (function_file.empty()) {
        // default G(t) = e^{-t}
        auto g = ExpPolynomial::monomial(GaussianRational(1), {0}, {GaussianRational(-1)});
        G = descriptor_of(g);
    } else {
        std::ifstream in(function_file);
        if (!in) throw std::runtime_error("cannot open function file '" + function_file + "'");
        G = descriptor_of(read_exp_polynomial(in));
    }
    if (G.dim != 1) throw std::runtime_error("subordinate: only 1-D functions supported here");
    Subordinator sub(G, IndexSubset::full(1), {gamma}, tol / 10.0);
    auto Gg = sub.as_descriptor();
    auto pts = read_points(points_file, 1);

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    write_csv_header(os, 1);
    bool any_flagged = false;
    for (const auto& p : pts) {
        try {
            auto tv = laplace_numeric(Gg, p, tol);
            write_csv_row(os, p, tv.value, tv.abs_error, "numeric");
        } catch (const std::exception&) {
            write_csv_row(os, p, {0, 0}, 0.0, "error:region");
            any_flagged = true;
        }
    }
    return any_flagged ? 1 : 0;
}

int cmd_invert(const std::string& transform_file, const std::string& points_file,
               unsigned k, const std::string& out_path) {
    std::ifstream in(transform_file);
    if (!in) throw std::runtime_error("cannot open transform file '" + transform_file + "'");
    RationalTransform F = read_rational_transform(in);
    auto pts = read_points(points_file, F.dim());

    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    write_csv_header(os, F.dim());
    bool any_flagged = false;
    for (const auto& p : pts) {
        std::vector<double> t;
        for (const auto& c : p) {
            if (c.imag() != 0.0) throw std::runtime_error("invert: t must be real");
            t.push_back(c.real());
        }
        try {
            cplx v = post_widder_inverse(F, t, k);
            cplx prev = post_widder_inverse(F, t, k > 1 ? k - 1 : 1);
            write_csv_row(os, p, v, std::abs(v - prev), "post-widder");
        } catch (const std::exception&) {
            write_csv_row(os, p, {0, 0}, 0.0, "error:pole");
            any_flagged = true;
        }
    }
    return any_flagged ? 1 : 0;
}

int cmd_harness(std::uint64_t seed, std::size_t instances, const std::string& fault,
                const std::string& out_path) {
    auto reports = run_identity_suite(seed, instances, fault_from_string(fault));
    std::ofstream file;
    std::ostream& os = open_out(file, out_path);
    bool all_pass = true;
    for (const auto& r : reports) {
        os << r.to_json().dump() << '\n';
        if (!r.pass) all_pass = false;
    }
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"uniqueness sequences for multidimensional Laplace transforms"};
    app.require_subcommand(1);
    app.set_config("--config");
    unsigned jobs = 1;
    app.add_option("--jobs", jobs, "parallelism bound for batch evaluations")
        ->check(CLI::PositiveNumber);

    // classify
    auto* classify = app.add_subcommand("classify", "classify sequence families");
    std::vector<std::string> families;
    std::size_t prefix = 200;
    std::string out_path;
    classify->add_option("--family", families, "family spec(s) in the mini-language")
        ->required();
    classify->add_option("--prefix", prefix, "enumerated prefix length");
    classify->add_option("--out", out_path, "output path (default stdout)");

    // witness
    auto* witness = app.add_subcommand("witness", "build and verify a witness");
    std::string wid, wfam_override, wout;
    std::size_t wpoints = 50;
    std::optional<double> wtol;
    witness->add_option("id", wid, "witness id: dech | diagonal | ray[:c=..;d=..]")
        ->required();
    witness->add_option("--points", wpoints, "number of family points to verify");
    witness->add_option("--tol", wtol, "verification tolerance");
    witness->add_option("--family", wfam_override, "override the annihilated family");
    witness->add_option("--out", wout, "output file prefix for witness artifacts");

    // transform
    auto* transform = app.add_subcommand("transform", "evaluate a Laplace transform");
    std::string t_witness, t_function, t_points, t_out;
    double t_tol = 1e-8;
    transform->add_option("--witness", t_witness, "use a built-in witness's transform");
    transform->add_option("--function", t_function, "serialized exp-polynomial file");
    transform->add_option("--points", t_points, "lambda points file")->required();
    transform->add_option("--tol", t_tol, "numeric tolerance");
    transform->add_option("--out", t_out, "output path (default stdout)");

    // subordinate
    auto* subordinate = app.add_subcommand("subordinate",
                                           "transform of the subordinated function");
    std::string s_function, s_points, s_out;
    double s_gamma = 0.5, s_tol = 1e-5;
    subordinate->add_option("--function", s_function,
                            "serialized 1-D exp-polynomial (default e^{-t})");
    subordinate->add_option("--gamma", s_gamma, "subordination exponent in (0,1)")
        ->check(CLI::Range(1e-9, 1.0 - 1e-9));
    subordinate->add_option("--points", s_points, "lambda points file")->required();
    subordinate->add_option("--tol", s_tol, "target tolerance");
    subordinate->add_option("--out", s_out, "output path (default stdout)");

    // invert
    auto* invert = app.add_subcommand("invert", "Post-Widder inverse transform");
    std::string i_file, i_points, i_out;
    unsigned i_k = 10;
    invert->add_option("--transform", i_file, "serialized rational transform file")
        ->required();
    invert->add_option("--points", i_points, "t points file (real)")->required();
    invert->add_option("--k", i_k, "Post-Widder order")->check(CLI::PositiveNumber);
    invert->add_option("--out", i_out, "output path (default stdout)");

    // harness
    auto* harness = app.add_subcommand("harness", "run the identity property suite");
    std::uint64_t h_seed = 42;
    std::size_t h_instances = 20;
    std::string h_fault = "none", h_out;
    harness->add_option("--seed", h_seed, "random seed");
    harness->add_option("--instances", h_instances, "instances per property");
    harness->add_option("--fault", h_fault,
                        "seeded fault: none | drop-factorial | wrong-gamma-arg | "
                        "wrong-witness-family");
    harness->add_option("--out", h_out, "output path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // --help is not an error
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;  // usage error
    }

    try {
        if (*classify) return cmd_classify(families, prefix, out_path);
        if (*witness) return cmd_witness(wid, wpoints, wtol, wfam_override, wout);
        if (*transform) {
            if (t_witness.empty() == t_function.empty())
                throw std::runtime_error("transform: give exactly one of --witness/--function");
            return cmd_transform(t_witness, t_function, t_points, t_tol, t_out);
        }
        if (*subordinate) return cmd_subordinate(s_function, s_gamma, s_points, s_tol, s_out);
        if (*invert) return cmd_invert(i_file, i_points, i_k, i_out);
        if (*harness) return cmd_harness(h_seed, h_instances, h_fault, h_out);
    } catch (const FamilyParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
