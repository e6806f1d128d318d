// halfzeta: zeta functions and special values at s = 1/2 of curves over F_q.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "halfzeta/corpus.hpp"
#include "halfzeta/curve_io.hpp"
#include "halfzeta/errors.hpp"
#include "halfzeta/motive.hpp"
#include "halfzeta/padic.hpp"
#include "halfzeta/report_json.hpp"
#include "halfzeta/special_values.hpp"
#include "halfzeta/tate_rank.hpp"
#include "halfzeta/verify.hpp"

using namespace halfzeta;

namespace {

enum Exit { ok = 0, failure = 1, usage = 2 };

struct OrderFlags {
    std::uint32_t p = 3;
    int f = 1;
};

int default_workers()
{
    return static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));
}

void add_order_flags(CLI::App* cmd, OrderFlags& o)
{
    cmd->add_option("--p", o.p, "characteristic");
    cmd->add_option("--f", o.f, "q = p^{2f}");
}

CorpusCurve resolve_curve(const std::string& source, const OrderFlags& of, int workers)
{
    const std::string prefix = "builtin:";
    if (source.rfind(prefix, 0) != 0)
        return certify_curve(source, load_curve(source), workers);
    const SquareOrder o(of.p, of.f);
    const std::string name = source.substr(prefix.size());
    if (name == "p1")
        return {source, std::nullopt, ZetaFunction::projective_line(o), {}};
    if (name == "point")
        return {source, std::nullopt, ZetaFunction::point(o), {}};
    if (name == "e")
        return {source, std::nullopt, ZetaFunction::type_c_elliptic(o), {}};
    if (name == "typec")
        return certify_curve(source, find_type_c_curve(o.p(), o.f(), workers), workers);
    throw input_error("unknown builtin \"" + name + "\" (expected p1, point, e or typec)");
}

ojson zeta_report(const CorpusCurve& c)
{
    ojson j = zeta_json(c.zeta);
    j["counts"] = counts_json(c.counts);
    if (c.model)
        j["curve"] = curve_to_json(*c.model);
    return j;
}

ojson special_report(const CorpusCurve& c)
{
    ojson j = special_json(special_values(c.zeta));
    j["q"] = int_json(c.zeta.q());
    j["slopes"] = slopes_json(slope_profile(c.zeta));
    return j;
}

std::string slopes_field(const ZetaFunction& z)
{
    std::string out;
    for (const auto& s : slope_profile(z).polygons.at(1).expanded()) {
        if (!out.empty())
            out += ' ';
        out += s.get_str();
    }
    return out;
}

struct ScanFlags {
    OrderFlags order;
    int genus = 1;
    int count = -1;
    std::uint64_t seed = 7;
    std::optional<long> trace_min, trace_max;
    int workers = default_workers();
};

void run_scan(const ScanFlags& sf, std::ostream& out)
{
    const SquareOrder o(sf.order.p, sf.order.f);
    if (sf.genus < 1)
        throw input_error("--genus must be >= 1");
    CorpusRng rng(sf.seed);
    std::vector<CurveModel> models;
    if (sf.genus == 1 && sf.count < 0)
        models = elliptic_models(o);
    else
        models = random_hyperelliptic(o, sf.genus, sf.count < 0 ? 20 : sf.count, rng);

    out << "# halfzeta scan p=" << o.p() << " f=" << o.f() << " genus=" << sf.genus << " seed=" << sf.seed
        << " rng=" << rng_name << (sf.genus == 1 && sf.count < 0 ? " exhaustive" : " sampled") << '\n';
    out << "q,p,f,genus,kind,trace_or_na,rho,c,c2,m2_or_na,ordinary,slopes\n";
    if (sf.trace_min && sf.trace_max && *sf.trace_min > *sf.trace_max)
        return;
    for (const auto& m : models) {
        const CorpusCurve c = certify_curve("scan", m, sf.workers);
        const BigInt trace = -c.zeta.P[1].coeff(1);
        if ((sf.trace_min && trace < *sf.trace_min) || (sf.trace_max && trace > *sf.trace_max))
            continue;
        const auto sv = special_values(c.zeta);
        out << o.q() << ',' << o.p() << ',' << o.f() << ',' << c.zeta.genus << ',' << to_string(m.kind) << ','
            << (c.zeta.genus == 1 ? trace.get_str() : std::string("na")) << ',' << sv.rho << ',' << to_string(sv.c)
            << ',' << to_string(sv.c_squared) << ','
            << (sv.sha_prediction ? BigInt(*sv.sha_prediction * *sv.sha_prediction).get_str() : std::string("na"))
            << ',' << (sv.ordinary ? "true" : "false") << ',' << slopes_field(c.zeta) << '\n';
    }
}

nlohmann::json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw input_error("cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(path + ": " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Zeta functions, special values at s = 1/2 and their identity checks for curves over F_q, q = p^{2f}"};
    app.require_subcommand(1);

    int workers = default_workers();
    app.add_option("--workers", workers, "point-counting threads")->check(CLI::PositiveNumber);

    std::string curve_spec;
    OrderFlags zeta_order;
    auto* zeta = app.add_subcommand("zeta", "zeta function of a curve file or builtin:{p1,point,e,typec}");
    zeta->add_option("curve,--curve", curve_spec, "curve JSON file or builtin name")->required();
    add_order_flags(zeta, zeta_order);

    auto* special = app.add_subcommand("special", "rho, c, c^2, chi(O), [E(F_q)] and m for a curve");
    special->add_option("curve,--curve", curve_spec, "curve JSON file or builtin name")->required();
    add_order_flags(special, zeta_order);

    VerifyOptions vo;
    vo.workers = workers;
    bool verify_text = false;
    std::vector<std::string> inject;
    auto* verify = app.add_subcommand("verify", "run the identity and property suites");
    verify->add_option("--suite", vo.suite, "curve, motive, padic or all");
    verify->add_option("--p", vo.p);
    verify->add_option("--f", vo.f);
    verify->add_option("--genus", vo.genus, "genus of the random hyperelliptic curves");
    verify->add_option("--count", vo.count, "random curves / motives per run");
    verify->add_option("--seed", vo.seed);
    verify->add_flag("--text", verify_text, "one line per check instead of JSON");
    verify->add_option("--inject", inject)->group("");

    ScanFlags sf;
    long tmin = 0, tmax = 0;
    auto* scan = app.add_subcommand("scan", "CSV table over elliptic (exhaustive) or random hyperelliptic curves");
    add_order_flags(scan, sf.order);
    scan->add_option("--genus", sf.genus);
    scan->add_option("--count", sf.count, "sample this many random curves instead of the exhaustive elliptic list");
    scan->add_option("--seed", sf.seed);
    auto* tmin_opt = scan->add_option("--trace-min", tmin);
    auto* tmax_opt = scan->add_option("--trace-max", tmax);
    std::string scan_out;
    scan->add_option("-o,--output", scan_out, "write CSV here instead of stdout");

    OrderFlags efq_order;
    auto* efq = app.add_subcommand("efq", "the type-(c) curve E over F_q and [E(F_q)]");
    add_order_flags(efq, efq_order);

    std::string motive_file;
    int ext_k = 0, twist_n = 0;
    bool tensor_dual = false;
    auto* motive = app.add_subcommand("motive", "L-function and half-shift identity of a motive JSON file");
    motive->add_option("file", motive_file)->required();
    motive->add_option("--ext", ext_k, "replace M by its k-th exterior power");
    motive->add_option("--twist", twist_n, "Tate twist M(n)");
    motive->add_flag("--tensor-dual-e", tensor_dual, "replace M by M tensor h^1(E)^dual");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (zeta->parsed()) {
            std::cout << zeta_report(resolve_curve(curve_spec, zeta_order, workers)).dump(2) << '\n';
        } else if (special->parsed()) {
            std::cout << special_report(resolve_curve(curve_spec, zeta_order, workers)).dump(2) << '\n';
        } else if (verify->parsed()) {
            vo.workers = workers;
            vo.inject = {inject.begin(), inject.end()};
            const auto result = run_verify(vo);
            if (verify_text) {
                for (const auto& c : result.checks) {
                    std::cout << (c.status == CheckStatus::pass ? "PASS" : c.status == CheckStatus::fail ? "FAIL" : "SKIP")
                              << ' ' << c.name << ": " << c.detail;
                    if (!c.witness.empty())
                        std::cout << " [" << c.witness << ']';
                    std::cout << '\n';
                }
            } else {
                std::cout << verify_json(result, vo).dump(2) << '\n';
            }
            return result.exit_code();
        } else if (scan->parsed()) {
            sf.workers = workers;
            if (*tmin_opt)
                sf.trace_min = tmin;
            if (*tmax_opt)
                sf.trace_max = tmax;
            if (scan_out.empty()) {
                run_scan(sf, std::cout);
            } else {
                std::ostringstream buf;
                run_scan(sf, buf);
                std::ofstream out(scan_out);
                if (!out)
                    throw input_error("cannot write " + scan_out);
                out << buf.str();
            }
        } else if (efq->parsed()) {
            const SquareOrder o(efq_order.p, efq_order.f);
            const CurveModel E = find_type_c_curve(o.p(), o.f(), workers);
            ojson j;
            j["q"] = int_json(o.q());
            j["E_order"] = int_json(o.e_order());
            j["trace"] = int_json(2 * o.sqrt_q());
            j["type"] = to_string(SupersingularType::type_c);
            j["model"] = curve_to_json(E);
            std::cout << j.dump(2) << '\n';
        } else if (motive->parsed()) {
            WeilMotive M = motive_from_json(read_json_file(motive_file));
            if (ext_k > 0)
                M = exterior_power(M, ext_k);
            if (twist_n != 0)
                M = twist(M, twist_n);
            if (tensor_dual)
                M = tensor(M, dual_h1_E(M.order()));
            const auto hs = check_half_shift_identity(M);
            ojson j;
            j["motive"] = motive_json(M);
            j["rank"] = M.rank();
            j["L"] = lfunction_json(l_function(M));
            j["half_shift"] = {{"holds", hs.holds}, {"lhs", lfunction_json(hs.lhs)}, {"rhs", lfunction_json(hs.rhs)}};
            std::cout << j.dump(2) << '\n';
            return hs.holds ? ok : failure;
        }
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const bound_exceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const halfzeta::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const certification_error& e) {
        std::cerr << e.what() << '\n';
        return failure;
    } catch (const identity_violation& e) {
        std::cerr << "identity violated: " << e.what() << '\n';
        return failure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return failure;
    }
    return ok;
}
