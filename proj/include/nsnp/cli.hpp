#pragma once

// Command-line surface. One subcommand per capability; JSON/CSV/text
// output; exit code 0 on success or all-pass, 1 on verification failure
// (any fail check), 2 on usage or input errors. All behavior is driven
// by flags; there is no environment-variable configuration.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nsnp/bounds.hpp"
#include "nsnp/characters.hpp"
#include "nsnp/field.hpp"
#include "nsnp/numtheory.hpp"
#include "nsnp/pairs.hpp"
#include "nsnp/verify.hpp"

namespace nsnp::cli {

constexpr int kSchemaVersion = 1;

struct Options {
    std::string format = "text";
    std::string out_path;
    bool raw = false;
};

inline void emit(const Options& opt, const std::string& payload,
                 std::ostream& out) {
    if (opt.out_path.empty()) {
        out << payload;
    } else {
        std::ofstream f(opt.out_path, std::ios::binary);
        if (!f) throw std::invalid_argument("cannot write " + opt.out_path);
        f << payload;
    }
}

inline nlohmann::json base_doc(const std::string& command,
                               nlohmann::json inputs) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["inputs"] = std::move(inputs);
    return j;
}

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string report_csv(const std::vector<VerificationReport>& reps) {
    std::string out = "suite,check,status,expected,actual,note\n";
    for (const auto& rep : reps)
        for (const auto& c : rep.checks)
            out += csv_escape(rep.suite) + "," + csv_escape(c.name) + "," +
                   to_string(c.status) + "," + csv_escape(c.expected) + "," +
                   csv_escape(c.actual) + "," + csv_escape(c.note) + "\n";
    return out;
}

inline std::string render_pair_member(const FieldContext& ctx, u64 rank,
                                      bool raw) {
    if (!raw) return ctx.render_rank(rank);
    auto e = ctx.element(rank);
    std::string s = "[";
    for (std::size_t i = 0; i < e.c.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(e.c[i]);
    }
    return s + "]";
}

/// Runs the tool; returns the process exit code. Streams are injectable
/// so the whole surface is testable in-process.
inline int run(std::vector<std::string> args, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"consecutive non-square non-primitive pair toolkit"};
    app.require_subcommand(1);

    Options opt;
    app.add_option("--format", opt.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--out", opt.out_path, "write output to a file");

    // profile
    u64 q = 0, ell = 0, arg_i = 0, arg_j = 0, t_in = 0, max_q = 10000;
    long long q_signed = 0, t_signed = 0;
    bool nsnp = false, strict = false, no_timestamp = false;
    unsigned jobs = std::thread::hardware_concurrency();
    if (jobs == 0) jobs = 1;
    std::string method = "brute", theorem = "all", suite = "all";
    std::string data_dir = "data";

    auto* c_profile = app.add_subcommand("profile", "prime power profile of q");
    c_profile->add_option("q", q)->required();

    auto* c_pairs = app.add_subcommand("pairs", "enumerate NSl or NSNP pairs");
    c_pairs->add_option("--q", q)->required();
    auto* pairs_ell = c_pairs->add_option("--ell", ell, "odd prime l dividing q-1");
    c_pairs->add_flag("--nsnp", nsnp, "enumerate NSNP pairs")->excludes(pairs_ell);
    c_pairs->add_flag("--raw", opt.raw, "coefficient-vector element rendering");

    auto* c_count = app.add_subcommand("count", "count NSl pairs");
    c_count->add_option("--q", q)->required();
    c_count->add_option("--ell", ell)->required();
    c_count->add_option("--method", method, "brute, charsum or cyclotomic")
        ->check(CLI::IsMember({"brute", "charsum", "cyclotomic"}));

    auto* c_jacobi = app.add_subcommand(
        "jacobi", "Jacobi sum J(chi_i, chi_j) for chi_a(gamma^k) = zeta_2l^{ak}");
    c_jacobi->add_option("--q", q)->required();
    c_jacobi->add_option("--ell", ell)->required();
    c_jacobi->add_option("--i", arg_i)->required();
    c_jacobi->add_option("--j", arg_j)->required();

    auto* c_bound = app.add_subcommand("bound", "explicit lower bound for N_l(q)");
    c_bound->add_option("--q", q)->required();
    c_bound->add_option("--ell", ell)->required();

    auto* c_thresh = app.add_subcommand("thresholds", "positivity thresholds for l");
    c_thresh->add_option("--ell", ell)->required();

    auto* c_minq = app.add_subcommand("minq-theta", "least q with theta_q <= 1/3");
    c_minq->add_option("--ell", ell)->required();
    c_minq->add_flag("--strict", strict, "require theta_q < 1/3");

    auto* c_scan = app.add_subcommand("scan", "scan odd prime powers for pairs");
    c_scan->add_option("--max", max_q);
    c_scan->add_option("--theorem", theorem, "main, lpower or all")
        ->check(CLI::IsMember({"main", "lpower", "all"}));
    c_scan->add_option("--jobs", jobs);

    auto* c_verify = app.add_subcommand("verify", "run verification suites");
    c_verify->add_option("--suite", suite)
        ->check(CLI::IsMember({"tables", "identities", "section3", "scan", "all"}));
    c_verify->add_option("--max", max_q);
    c_verify->add_option("--jobs", jobs);
    c_verify->add_option("--data", data_dir, "directory with bundled table data");
    c_verify->add_flag("--no-timestamp", no_timestamp);

    auto* c_decomp = app.add_subcommand("decompose", "q = A^2 + 3B^2 decomposition");
    c_decomp->add_option("--q", q_signed)->required();
    c_decomp->add_option("--t", t_signed)->required();

    try {
        std::reverse(args.begin(), args.end());  // CLI11 takes a reversed vector
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (c_profile->parsed()) {
            auto pr = profile(q);
            auto cls = classify_theta(pr);
            if (opt.format == "json") {
                auto j = base_doc("profile", {{"q", q}});
                nlohmann::json res;
                res["q"] = pr.q;
                res["p"] = pr.p;
                res["n"] = pr.n;
                res["theta"] = pr.theta.get_str();
                res["theta_class"] = cls.cls == ThetaClass::Half    ? "half"
                                     : cls.cls == ThetaClass::Third ? "third"
                                                                    : "other";
                if (!cls.witness.empty()) res["theta_witness"] = cls.witness;
                if (pr.ell) res["ell"] = *pr.ell;
                res["lambda_minus_one"] = pr.lambda_minus_one;
                res["omega"] = pr.omega;
                nlohmann::json fac = nlohmann::json::array();
                for (auto [p, e] : pr.qm1.factors) fac.push_back({{"p", p}, {"e", e}});
                res["q_minus_1_factors"] = fac;
                j["results"] = res;
                emit(opt, j.dump(2) + "\n", out);
            } else {
                std::ostringstream os;
                os << "q = " << pr.q << " = " << pr.p << "^" << pr.n << "\n";
                os << "q-1 =";
                for (auto [p, e] : pr.qm1.factors) {
                    os << " " << p;
                    if (e > 1) os << "^" << e;
                }
                os << "\ntheta_q = " << pr.theta.get_str();
                if (cls.cls == ThetaClass::Half) os << " (= 1/2: " << cls.witness << ")";
                if (cls.cls == ThetaClass::Third) os << " (= 1/3: " << cls.witness << ")";
                os << "\nlambda(-1) = " << (pr.lambda_minus_one > 0 ? "+1" : "-1")
                   << "\nomega = " << pr.omega << "\n";
                if (pr.ell) os << "least odd prime divisor of q-1: " << *pr.ell << "\n";
                emit(opt, os.str(), out);
            }
            return 0;
        }

        if (c_pairs->parsed()) {
            if (!nsnp && ell == 0)
                throw std::invalid_argument("pairs: give --ell or --nsnp");
            FieldContext ctx(q);
            PairReport rep = nsnp ? enumerate_nsnp(ctx) : enumerate_nsl(ctx, ell);
            if (opt.format == "json") {
                auto j = base_doc("pairs", {{"q", q},
                                            {"kind", nsnp ? "nsnp" : "nsl"},
                                            {"ell", nsnp ? 0 : ell}});
                nlohmann::json arr = nlohmann::json::array();
                for (auto [a, b] : rep.pairs)
                    arr.push_back({render_pair_member(ctx, a, opt.raw),
                                   render_pair_member(ctx, b, opt.raw)});
                j["results"] = {{"count", rep.pairs.size()}, {"pairs", arr}};
                emit(opt, j.dump(2) + "\n", out);
            } else if (opt.format == "csv") {
                std::string s = "q,kind,alpha,alpha_plus_1\n";
                for (auto [a, b] : rep.pairs)
                    s += std::to_string(q) + "," + (nsnp ? "nsnp" : "nsl") + "," +
                         csv_escape(render_pair_member(ctx, a, opt.raw)) + "," +
                         csv_escape(render_pair_member(ctx, b, opt.raw)) + "\n";
                emit(opt, s, out);
            } else {
                std::ostringstream os;
                os << rep.pairs.size() << (nsnp ? " NSNP" : " NS" + std::to_string(ell))
                   << " pair(s) in F_" << q << "\n";
                for (auto [a, b] : rep.pairs)
                    os << "(" << render_pair_member(ctx, a, opt.raw) << ","
                       << render_pair_member(ctx, b, opt.raw) << ")\n";
                emit(opt, os.str(), out);
            }
            return 0;
        }

        if (c_count->parsed()) {
            FieldContext ctx(q);
            if ((q - 1) % ell != 0)
                throw std::invalid_argument("ell does not divide q-1");
            long long n = 0;
            if (method == "brute")
                n = static_cast<long long>(enumerate_nsl(ctx, ell).count());
            else if (method == "charsum")
                n = count_charsum(ctx, ell);
            else
                n = cyclotomic_number(ctx, ctx.gamma_rank(), ell, ell, ell);
            if (opt.format == "json") {
                auto j = base_doc("count", {{"q", q}, {"ell", ell}, {"method", method}});
                j["results"] = {{"count", n}};
                emit(opt, j.dump(2) + "\n", out);
            } else if (opt.format == "csv") {
                emit(opt,
                     "q,ell,method,count\n" + std::to_string(q) + "," +
                         std::to_string(ell) + "," + method + "," + std::to_string(n) +
                         "\n",
                     out);
            } else {
                emit(opt, std::to_string(n) + "\n", out);
            }
            return 0;
        }

        if (c_jacobi->parsed()) {
            FieldContext ctx(q);
            if ((q - 1) % ell != 0)
                throw std::invalid_argument("ell does not divide q-1");
            CharSumTable table(ctx, ell);
            auto J = table.jacobi(arg_i % table.m(), arg_j % table.m());
            if (opt.format == "json") {
                auto j = base_doc("jacobi", {{"q", q}, {"ell", ell}, {"i", arg_i}, {"j", arg_j}});
                j["results"] = {{"coeffs", J.coeffs()},
                                {"order", J.order()},
                                {"is_integer", J.is_rational_integer()}};
                if (J.is_rational_integer()) j["results"]["value"] = J.as_integer();
                emit(opt, j.dump(2) + "\n", out);
            } else {
                emit(opt, J.str() + "\n", out);
            }
            return 0;
        }

        if (c_bound->parsed()) {
            (void)profile(q);  // validates q before the divisibility check
            auto bd = lower_bound(q, ell);
            if (opt.format == "json") {
                auto j = base_doc("bound", {{"q", q}, {"ell", ell}});
                j["results"] = {{"value", bd.decimal},
                                {"positive", bd.positive},
                                {"corollary_applies", bd.corollary_applies},
                                {"lambda_minus_one", bd.lambda_minus_one}};
                emit(opt, j.dump(2) + "\n", out);
            } else {
                std::ostringstream os;
                os << "N_" << ell << "(" << q << ") >= " << bd.decimal
                   << (bd.positive ? " (positive)" : " (not positive)") << "\n"
                   << "corollary q > 16 l^4 " << (bd.corollary_applies ? "applies" : "does not apply")
                   << "\n";
                emit(opt, os.str(), out);
            }
            return 0;
        }

        if (c_thresh->parsed()) {
            auto cor = corollary_threshold(ell);
            auto worst = theorem_threshold(ell, +1);
            auto best = theorem_threshold(ell, -1);
            if (opt.format == "json") {
                auto j = base_doc("thresholds", {{"ell", ell}});
                j["results"] = {{"corollary_16l4", cor.get_str()},
                                {"theorem_worst_lambda_plus", worst.get_str()},
                                {"theorem_lambda_minus", best.get_str()}};
                emit(opt, j.dump(2) + "\n", out);
            } else {
                std::ostringstream os;
                os << "corollary threshold 16 l^4: " << cor.get_str() << "\n"
                   << "theorem threshold (lambda(-1)=+1): " << worst.get_str() << "\n"
                   << "theorem threshold (lambda(-1)=-1): " << best.get_str() << "\n";
                emit(opt, os.str(), out);
            }
            return 0;
        }

        if (c_minq->parsed()) {
            auto mq = min_q_theta(ell);
            const mpz_class& v = strict ? mq.q_strict : mq.q_leq;
            if (opt.format == "json") {
                auto j = base_doc("minq-theta", {{"ell", ell}, {"strict", strict}});
                j["results"] = {{"q", v.get_str()},
                                {"q_strict", mq.q_strict.get_str()},
                                {"q_leq", mq.q_leq.get_str()}};
                emit(opt, j.dump(2) + "\n", out);
            } else {
                emit(opt, v.get_str() + "\n", out);
            }
            return 0;
        }

        if (c_scan->parsed() || c_verify->parsed()) {
            std::vector<VerificationReport> reps;
            if (c_scan->parsed()) {
                auto rep = scan_theorems(max_q, jobs);
                if (theorem != "all") {
                    VerificationReport filtered;
                    filtered.suite = rep.suite;
                    const std::string prefix =
                        theorem == "main" ? "theorem-1" : "theorem-2";
                    for (const auto& c : rep.checks)
                        if (c.name.rfind(prefix, 0) == 0) filtered.checks.push_back(c);
                    rep = filtered;
                }
                reps.push_back(rep);
            } else {
                bool all = suite == "all";
                if (all || suite == "tables") {
                    reps.push_back(verify_table_n3(load_table_n3(data_dir + "/table_n3.tsv")));
                    reps.push_back(verify_table_pairs(
                        load_table_pairs(data_dir + "/table_ns3_pairs.tsv")));
                    reps.push_back(verify_ns5());
                    reps.push_back(verify_table1());
                }
                if (all || suite == "identities")
                    reps.push_back(verify_identities(std::min<u64>(max_q, 2000), {3, 5}, jobs));
                if (all || suite == "section3") reps.push_back(verify_section3(200));
                if (all || suite == "scan") reps.push_back(scan_theorems(max_q, jobs));
            }

            std::size_t fails = 0, lints = 0, passes = 0;
            for (const auto& r : reps) {
                fails += r.count(CheckStatus::Fail);
                lints += r.count(CheckStatus::Lint);
                passes += r.count(CheckStatus::Pass);
            }
            if (opt.format == "json") {
                auto j = base_doc(c_scan->parsed() ? "scan" : "verify",
                                  {{"max", max_q},
                                   {"suite", c_scan->parsed() ? theorem : suite}});
                if (!no_timestamp && c_verify->parsed()) {
                    auto now = std::chrono::system_clock::now().time_since_epoch();
                    j["timestamp"] =
                        std::chrono::duration_cast<std::chrono::seconds>(now).count();
                }
                j["results"] = nlohmann::json::array();
                for (const auto& r : reps) j["results"].push_back(r.to_json());
                j["summary"] = {{"pass", passes}, {"fail", fails}, {"lint", lints}};
                emit(opt, j.dump(2) + "\n", out);
            } else if (opt.format == "csv") {
                emit(opt, report_csv(reps), out);
            } else {
                std::string s;
                for (const auto& r : reps) s += r.text();
                s += "total: " + std::to_string(passes) + " pass, " +
                     std::to_string(fails) + " fail, " + std::to_string(lints) +
                     " lint\n";
                emit(opt, s, out);
            }
            return fails == 0 ? 0 : 1;
        }

        if (c_decomp->parsed()) {
            auto d = decompose_AB(q_signed, t_signed);
            std::string sign = d.B_sign == BSign::Undetermined ? "undetermined"
                               : d.B_sign == BSign::Minus      ? "minus"
                                                               : "plus";
            if (opt.format == "json") {
                auto j = base_doc("decompose", {{"q", q_signed}, {"t", t_signed}});
                j["results"] = {{"A", d.A},
                                {"B_magnitude", d.B_magnitude},
                                {"B_sign", sign}};
                emit(opt, j.dump(2) + "\n", out);
            } else {
                std::ostringstream os;
                os << q_signed << " = (" << d.A << ")^2 + 3*(" << d.B_magnitude
                   << ")^2, sign of B " << sign << "\n";
                emit(opt, os.str(), out);
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "invariant failure: " << e.what() << "\n";
        return 1;
    }
    err << "unknown command\n";
    return 2;
}

}  // namespace nsnp::cli
