#include "whittaker_cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "whittaker/coords.hpp"
#include "whittaker/dims.hpp"
#include "whittaker/errors.hpp"
#include "whittaker/mellin_barnes.hpp"
#include "whittaker/params.hpp"
#include "whittaker/radial.hpp"
#include "whittaker_cli/parallel.hpp"
#include "whittaker_cli/suites.hpp"

namespace whittaker::cli {

using nlohmann::json;

namespace {

struct ParamArgs {
    int n = 0;  // 0: take it from --lambda
    std::string lambda, lam_np1;
};

void add_param_options(CLI::App* app, ParamArgs& p) {
    app->add_option("--n", p.n, "rank n (checked against --lambda)");
    app->add_option("--lambda", p.lambda, "Lambda_1..Lambda_n, comma separated (7/2 for halves)")->required();
    app->add_option("--lam-np1", p.lam_np1, "Lambda_{n+1}")->required();
}

HCParam read_param(const ParamArgs& p) {
    HCParam L = parse_hc(p.lambda, p.lam_np1);
    if (p.n != 0 && p.n != L.n)
        throw ParameterError("--n " + std::to_string(p.n) + " does not match " + std::to_string(L.n) + " entries of --lambda");
    check_regular_dominant(L);
    return L;
}

std::vector<HalfInt> parse_weight(const std::string& csv) {
    std::vector<HalfInt> w;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) w.push_back(HalfInt::parse(item));
    if (w.empty()) throw ParameterError("empty weight");
    return w;
}

json half_json(HalfInt h) { return h.is_integer() ? json(h.as_int()) : json(h.to_double()); }

json half_vec(const std::vector<HalfInt>& v) {
    json a = json::array();
    for (auto h : v) a.push_back(half_json(h));
    return a;
}

json big_json(const BigInt& b) {
    if (b >= BigInt(std::numeric_limits<std::int64_t>::min()) && b <= BigInt(std::numeric_limits<std::int64_t>::max()))
        return b.convert_to<std::int64_t>();
    return b.str();
}

json chamber_json(const Chamber& c) { return {{"m", c.m}, {"sign", c.sign}, {"name", c.str()}}; }

json blattner_json(const BlattnerWeight& b) {
    return {{"lambda", half_vec(b.lambda)}, {"lambda_np1", half_json(b.lambda_np1)}, {"far_from_walls", b.far_from_walls}};
}

// "lo:hi:count" or a single value.
std::vector<double> parse_range(const std::string& spec, const char* what) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    try {
        if (parts.size() == 1) return {std::stod(parts[0])};
        if (parts.size() == 3) {
            const double lo = std::stod(parts[0]), hi = std::stod(parts[1]);
            const int count = std::stoi(parts[2]);
            if (count < 1) throw ParameterError(std::string(what) + ": count must be at least 1");
            std::vector<double> v;
            for (int i = 0; i < count; ++i) v.push_back(count == 1 ? lo : lo + (hi - lo) * i / (count - 1));
            return v;
        }
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const ParameterError*>(&e)) throw;
    }
    throw ParameterError(std::string(what) + ": expected lo:hi:count or a number, got '" + spec + "'");
}

struct PatternArgs {
    std::string pattern_json;
    bool corner = false;
    int m_prime = 0;  // 0: n-1
    int pm = +1;
    std::string convention = "upper-plus";
    bool no_ordering = false;
};

void add_pattern_options(CLI::App* app, PatternArgs& p) {
    app->add_option("--pattern", p.pattern_json, "GT pattern as a JSON array of rows of doubled entries");
    app->add_flag("--corner", p.corner, "use the corner pattern Q_{m'}^{pm} over the default lower rows (the default)");
    app->add_option("--m-prime", p.m_prime, "level m' (default n-1)");
    app->add_option("--pm", p.pm, "corner sign, +1 or -1")->check(CLI::IsMember({-1, 1}));
    app->add_option("--convention", p.convention, "which chamber the upper sign refers to")
        ->check(CLI::IsMember({"upper-plus", "upper-minus"}));
    app->add_flag("--no-ordering-check", p.no_ordering, "report exponents even when the ordering lemma fails");
}

DistinguishedPattern read_pattern(const PatternArgs& p, const HCParam& L) {
    const Chamber ch = classify(L);
    if (!has_algebraic_whittaker(ch, L.n)) throw ParameterError("no distinguished patterns for chamber " + ch.str());
    const int mp = p.m_prime == 0 ? L.n - 1 : p.m_prime;
    const auto bw = blattner(L);
    if (!p.pattern_json.empty()) {
        GTPattern Q;
        try {
            Q = pattern_from_json(p.pattern_json);
        } catch (const json::exception& e) {
            throw ParameterError(std::string("--pattern: ") + e.what());
        }
        if (Q.top() != bw.lambda) throw ParameterError("--pattern: top row must be the Blattner weight");
        if (!is_valid(Q)) throw ParameterError("--pattern: not a valid GT pattern");
        auto dp = make_distinguished(Q, ch.m, mp);
        if (!dp.valid()) throw ParameterError("--pattern: not distinguished at level m'=" + std::to_string(mp));
        return dp;
    }
    return corner_pattern(bw.lambda, ch.m, mp, p.pm, default_lower_rows(bw.lambda, ch.m));
}

SignConvention read_convention(const PatternArgs& p) {
    return p.convention == "upper-minus" ? SignConvention::UpperIsMinus : SignConvention::UpperIsPlus;
}

Kernel parse_kernel(const std::string& s) {
    if (s == "K" || s == "k") return Kernel::K;
    if (s == "I" || s == "i") return Kernel::I;
    throw ParameterError("--kind must be K or I");
}

std::ostream* open_output(const std::string& path, std::unique_ptr<std::ofstream>& file, std::ostream& out) {
    if (path.empty() || path == "-") return &out;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw ParameterError("cannot open " + path);
    return file.get();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Whittaker functions for discrete series of Spin(2n,2)", "whittaker"};
    app.require_subcommand(1);

    // classify
    ParamArgs cp;
    auto* c_classify = app.add_subcommand("classify", "chamber, GK dimension and Blattner weight of Lambda");
    add_param_options(c_classify, cp);

    // dim
    ParamArgs dpargs;
    double d_eta1 = 1, d_eta2 = -1;
    bool d_contra = false;
    auto* c_dim = app.add_subcommand("dim", "dimensions of the algebraic and continuous Whittaker models");
    add_param_options(c_dim, dpargs);
    c_dim->add_option("--eta1", d_eta1, "character eta_1 > 0");
    c_dim->add_option("--eta2", d_eta2, "character eta_2 != 0");
    c_dim->add_flag("--contragredient", d_contra, "use the contragredient parameter");

    // patterns
    std::string p_lambda;
    bool p_count = false, p_dist = false;
    int p_m = 0;
    long p_limit = -1;
    auto* c_patterns = app.add_subcommand("patterns", "list GT patterns of a dominant weight");
    c_patterns->add_option("--lambda", p_lambda, "highest weight, comma separated")->required();
    c_patterns->add_flag("--count", p_count, "print only the number of patterns");
    c_patterns->add_flag("--distinguished", p_dist, "only patterns distinguished at some level (needs --m)");
    c_patterns->add_option("--m", p_m, "chamber index for --distinguished");
    c_patterns->add_option("--limit", p_limit, "stop after this many patterns");

    // exponents
    ParamArgs ep;
    PatternArgs epat;
    auto* c_exp = app.add_subcommand("exponents", "K-sets, exponents and radial equations of a distinguished pattern");
    add_param_options(c_exp, ep);
    add_pattern_options(c_exp, epat);

    // eval
    ParamArgs vp;
    PatternArgs vpat;
    int v_j = 1, v_threads = 1;
    std::string v_kind = "K", v_t1 = "0.5:4:8", v_t2 = "0.5:4:8", v_coords = "t", v_oracle = "none", v_output;
    double v_eta1 = 1, v_eta2 = -1, v_tol = 1e-14;
    auto* c_eval = app.add_subcommand("eval", "evaluate f_j^{K,I} on a grid, CSV output");
    add_param_options(c_eval, vp);
    add_pattern_options(c_eval, vpat);
    c_eval->add_option("--j", v_j, "solution index, 1..N2");
    c_eval->add_option("--kind", v_kind, "K or I");
    c_eval->add_option("--eta1", v_eta1, "character eta_1 > 0");
    c_eval->add_option("--eta2", v_eta2, "character eta_2 != 0");
    c_eval->add_option("--t1", v_t1, "first grid axis, lo:hi:count (a1 when --coords a)");
    c_eval->add_option("--t2", v_t2, "second grid axis, lo:hi:count (a2 when --coords a)");
    c_eval->add_option("--coords", v_coords, "grid coordinates")->check(CLI::IsMember({"t", "a"}));
    c_eval->add_option("--oracle", v_oracle, "add contour quadrature columns")->check(CLI::IsMember({"none", "quadrature"}));
    c_eval->add_option("--tol", v_tol, "relative tolerance of the residue series")->check(CLI::PositiveNumber);
    c_eval->add_option("--output", v_output, "CSV file (default stdout)");
    c_eval->add_option("--threads", v_threads, "worker count (WHITTAKER_THREADS overrides)")->check(CLI::PositiveNumber);

    // verify
    std::vector<std::string> s_suites;
    std::uint64_t s_seed = SuiteOptions{}.seed;
    int s_threads = 1;
    bool s_list = false, s_brief = false;
    std::string s_output;
    auto* c_verify = app.add_subcommand("verify", "run verification suites, JSON ledger output");
    c_verify->add_option("--suite", s_suites, "suite to run (repeatable; default all)");
    c_verify->add_option("--seed", s_seed, "seed of the randomized checks");
    c_verify->add_option("--threads", s_threads, "worker count (WHITTAKER_THREADS overrides)")->check(CLI::PositiveNumber);
    c_verify->add_flag("--list", s_list, "list suite names");
    c_verify->add_flag("--brief", s_brief, "omit per-case details");
    c_verify->add_option("--output", s_output, "JSON file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kBadInput;
    }

    try {
        if (*c_classify) {
            const HCParam L = read_param(cp);
            const Chamber ch = classify(L);
            // the Blattner weight is only implemented for m <= n
            json bj = nullptr;
            if (ch.m <= L.n) bj = blattner_json(blattner(L, ch));
            const json j{{"Lambda", half_vec(L.entries)},
                         {"chamber", chamber_json(ch)},
                         {"gk_dimension", gk_dimension(ch, L.n)},
                         {"algebraic_whittaker", has_algebraic_whittaker(ch, L.n)},
                         {"integral", is_integral(L, ch)},
                         {"blattner", bj}};
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (*c_dim) {
            HCParam L = read_param(dpargs);
            if (d_contra) L = contragredient(L);
            const Character eta{d_eta1, d_eta2};
            check_character(eta);
            const DimResult r = algebraic_whittaker_dim(L);
            json tuples = json::array();
            for (const auto& [t, dim] : r.per_tuple)
                tuples.push_back({{"mu", half_vec(t.mu)}, {"mu_prime", half_vec(t.mu_prime)}, {"dim", big_json(dim)}});
            const json j{{"Lambda", half_vec(L.entries)},
                         {"contragredient", d_contra},
                         {"chamber", chamber_json(r.chamber)},
                         {"blattner", blattner_json(r.blattner)},
                         {"tuples", tuples},
                         {"interlacing_sum", big_json(r.interlacing_sum)},
                         {"total_algebraic", big_json(r.total)},
                         {"total_continuous", big_json(continuous_whittaker_dim(L, eta))},
                         {"eta", {eta.eta1, eta.eta2}},
                         {"status", r.status}};
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (*c_patterns) {
            const Weight w = parse_weight(p_lambda);
            if (!is_dominant_D(w)) throw ParameterError("--lambda is not a dominant so(2n) weight");
            if (p_count && !p_dist) {
                out << json{{"lambda", half_vec(w)}, {"count", big_json(count_patterns(w))}}.dump() << "\n";
                return kOk;
            }
            json list = json::array();
            long emitted = 0;
            if (p_dist) {
                if (p_m < 2 || p_m > static_cast<int>(w.size())) throw ParameterError("--distinguished needs 2 <= --m <= n");
                for (const auto& dp : enumerate_distinguished(w, p_m)) {
                    if (!dp.valid()) continue;
                    if (p_limit >= 0 && emitted >= p_limit) break;
                    ++emitted;
                    if (!p_count) list.push_back({{"m_prime", dp.m_prime}, {"pattern", json::parse(to_json(dp.Q))}, {"text", dp.Q.str()}});
                }
            } else {
                PatternEnumerator e(w);
                while (auto q = e.next()) {
                    if (p_limit >= 0 && emitted >= p_limit) break;
                    ++emitted;
                    list.push_back({{"pattern", json::parse(to_json(*q))}, {"text", q->str()}});
                }
            }
            json j{{"lambda", half_vec(w)}, {"count", emitted}};
            if (!p_count) j["patterns"] = list;
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (*c_exp) {
            const HCParam L = read_param(ep);
            const DistinguishedPattern dp = read_pattern(epat, L);
            const ExponentSystem es = exponents(dp, L, read_convention(epat), !epat.no_ordering);
            std::string why;
            const bool ordered = ordering_holds(es, &why);
            const auto ode = ode_system(es);
            json j{{"Lambda", half_vec(L.entries)},
                   {"chamber", chamber_json(classify(L))},
                   {"pattern", json::parse(to_json(dp.Q))},
                   {"text", dp.Q.str()},
                   {"m_prime", dp.m_prime},
                   {"conditions", {{"5.13(1)", dp.cond_5_13_1}, {"5.11", dp.cond_5_11}, {"5.13(4)", dp.cond_5_13_4}}},
                   {"exponents", json::parse(es.to_json())},
                   {"ordering", ordered},
                   {"ode_first", to_string(ode.first)},
                   {"ode_second", to_string(ode.second)}};
            if (!ordered) j["ordering_failure"] = why;
            out << j.dump(2) << "\n";
            return kOk;
        }
        if (*c_eval) {
            const HCParam L = read_param(vp);
            const DistinguishedPattern dp = read_pattern(vpat, L);
            const ExponentSystem es = exponents(dp, L, read_convention(vpat), !vpat.no_ordering);
            const Kernel kind = parse_kernel(v_kind);
            if (v_j < 1 || v_j > es.N2) throw ParameterError("--j must lie in 1.." + std::to_string(es.N2));
            const Character eta{v_eta1, v_eta2};
            check_character(eta);
            const auto ax1 = parse_range(v_t1, "--t1"), ax2 = parse_range(v_t2, "--t2");
            const bool a_coords = v_coords == "a";
            const bool oracle = v_oracle == "quadrature";

            struct Row {
                double x1, x2, t1, t2;
                cplx v;
                double err = 0;
                cplx q;
                double qerr = 0;
                std::string note;
            };
            std::vector<Row> rows;
            for (double x1 : ax1)
                for (double x2 : ax2) {
                    Row r{x1, x2, x1, x2, {}, 0, {}, 0, {}};
                    if (a_coords) {
                        if (!(x1 > 0 && x2 > 0)) throw ParameterError("a-coordinates must be positive");
                        const TCoords t = to_t(x1, x2, eta, es.sign);
                        r.t1 = t.t1;
                        r.t2 = t.t2;
                    }
                    if (!(r.t1 > 0) || r.t2 == 0) throw ParameterError("grid points need t1 > 0 and t2 != 0");
                    rows.push_back(r);
                }
            parallel_for(rows.size(), resolve_threads(v_threads), [&](std::size_t i) {
                Row& r = rows[i];
                try {
                    r.v = residue_eval(v_j, kind, es, r.t1, r.t2, v_tol, &r.err);
                } catch (const PoleCollision&) {
                    r.v = contour_quadrature(v_j, kind, es, r.t1, r.t2, {}, &r.err);
                    r.note = "contour";
                }
                if (oracle) r.q = contour_quadrature(v_j, kind, es, r.t1, r.t2, {}, &r.qerr);
            });

            std::unique_ptr<std::ofstream> file;
            std::ostream& os = *open_output(v_output, file, out);
            os << "t1,t2,re,im,abs_err";
            if (a_coords) os << ",a1,a2";
            if (oracle) os << ",oracle_re,oracle_im,oracle_abs_err,oracle_rel_diff";
            os << "\n" << std::setprecision(17);
            for (const auto& r : rows) {
                os << r.t1 << ',' << r.t2 << ',' << r.v.real() << ',' << r.v.imag() << ',' << r.err;
                if (a_coords) os << ',' << r.x1 << ',' << r.x2;
                if (oracle) os << ',' << r.q.real() << ',' << r.q.imag() << ',' << r.qerr << ',' << std::abs(r.v - r.q) / std::abs(r.q);
                os << "\n";
            }
            return kOk;
        }
        if (*c_verify) {
            if (s_list) {
                for (const auto& n : suite_names()) out << n << "\t" << suite_criterion(n) << "\n";
                return kOk;
            }
            std::vector<std::string> names = s_suites.empty() ? suite_names() : s_suites;
            for (const auto& n : names) suite_criterion(n);  // reject unknown names before running anything
            SuiteOptions opt;
            opt.seed = s_seed;
            opt.threads = s_threads;
            json ledger{{"seed", s_seed}, {"threads", resolve_threads(s_threads)}, {"suites", json::array()}};
            bool all = true;
            for (const auto& n : names) {
                const SuiteResult r = run_suite(n, opt);
                all = all && r.passed;
                json jr = to_json(r);
                if (s_brief) jr.erase("detail");
                ledger["suites"].push_back(jr);
                err << (r.passed ? "PASS " : "FAIL ") << n << " [" << std::fixed << std::setprecision(2) << r.seconds << " s] " << r.summary
                    << "\n";
            }
            ledger["passed"] = all;
            std::unique_ptr<std::ofstream> file;
            std::ostream& os = *open_output(s_output, file, out);
            os << ledger.dump(2) << "\n";
            return all ? kOk : kVerificationFailed;
        }
    } catch (const std::invalid_argument& e) {
        // StructuralError and ParameterError
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kVerificationFailed;
    }
    return kBadInput;
}

}  // namespace whittaker::cli
