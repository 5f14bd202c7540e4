#include "cayley/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cayley/arith.hpp"
#include "cayley/densities.hpp"
#include "cayley/empirical.hpp"
#include "cayley/enumeration.hpp"
#include "cayley/lattice.hpp"
#include "cayley/surface.hpp"
#include "cayley/torsor.hpp"

namespace cayley::cli {

namespace {

using nlohmann::json;

std::string fmt_real(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

json json_int(Int128 v) {
    if (v.fits_int64()) return v.to_int64();
    return v.str();
}

Rational parse_fraction(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Int128::parse(text));
    return Rational(Int128::parse(text.substr(0, slash)), Int128::parse(text.substr(slash + 1)));
}

struct Output {
    std::ostream* stream;
    std::ofstream file;

    static Output open(const std::string& path, std::ostream& fallback) {
        Output o;
        if (path.empty()) {
            o.stream = &fallback;
        } else {
            o.file.open(path);
            if (!o.file) throw std::invalid_argument("cannot open output file " + path);
            o.stream = &o.file;
        }
        return o;
    }
    std::ostream& os() { return *stream; }
};

constexpr const char* scan_note =
    "empirical growth ratios only; the limiting constant is not determined at this scale";

void emit_count_reports(const std::vector<CountReport>& rows, const std::string& format,
                        std::ostream& os, bool with_note) {
    if (format == "json") {
        json j;
        j["rows"] = json::array();
        for (const auto& r : rows) {
            json row;
            row["B"] = r.B;
            row["N"] = json_int(r.N);
            row["Nstar"] = r.Nstar ? json(json_int(*r.Nstar)) : json(nullptr);
            row["ratio"] = r.ratio;
            row["method"] = r.method;
            j["rows"].push_back(row);
        }
        if (with_note) j["note"] = scan_note;
        os << j.dump(2) << "\n";
        return;
    }
    os << "B,N,Nstar,ratio,method\n";
    for (const auto& r : rows) {
        os << fmt_real(r.B) << "," << r.N.str() << "," << (r.Nstar ? r.Nstar->str() : "") << ","
           << fmt_real(r.ratio) << "," << r.method << "\n";
    }
    if (with_note) os << "# note: " << scan_note << "\n";
}

struct CommonOpts {
    std::string format = "csv";
    std::string out_path;
    int workers = 1;
    std::int64_t naive_limit = 300;
    std::int64_t torsor_limit = 100000;
    std::int64_t cell_budget = default_cell_budget;

    EnumLimits limits() const {
        EnumLimits l;
        l.naive_limit = naive_limit;
        l.torsor_limit = torsor_limit;
        l.cell_budget = cell_budget;
        l.workers = workers;
        return l;
    }
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out_path, "Write results to a file instead of stdout");
    cmd->add_option("--workers", opts.workers, "Worker threads for the counting loops")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--naive-limit", opts.naive_limit, "Height cap for the brute-force oracle");
    cmd->add_option("--torsor-limit", opts.torsor_limit, "Height cap for the torsor enumerator");
    cmd->add_option("--cell-budget", opts.cell_budget, "Cell budget for box enumerations");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact point counts on the Cayley cubic surface"};
    app.require_subcommand(1);

    // count -----------------------------------------------------------------
    auto* count_cmd = app.add_subcommand("count", "N(B) by one counting method");
    CommonOpts count_opts;
    double count_b = 0;
    std::string count_method = "naive";
    std::string count_star_mode;
    count_cmd->add_option("--max-b", count_b, "Height bound B")->required();
    count_cmd->add_option("--method", count_method, "Counting method")
        ->check(CLI::IsMember({"naive", "torsor"}));
    count_cmd->add_option("--star", count_star_mode, "Also compute N*(B) by this mode")
        ->check(CLI::IsMember({"direct", "convolution"}));
    add_common(count_cmd, count_opts);

    // scan ------------------------------------------------------------------
    auto* scan_cmd = app.add_subcommand("scan", "N(B) and growth ratios over a ladder of B values");
    CommonOpts scan_opts;
    std::string scan_ladder;
    std::string scan_method = "torsor";
    scan_cmd->add_option("--ladder", scan_ladder, "Comma-separated B values")->required();
    scan_cmd->add_option("--method", scan_method, "Counting method")
        ->check(CLI::IsMember({"naive", "torsor"}));
    add_common(scan_cmd, scan_opts);

    // decompose ---------------------------------------------------------------
    auto* dec_cmd = app.add_subcommand("decompose", "Torsor coordinates of one primitive U-point");
    CommonOpts dec_opts;
    std::vector<std::string> dec_coords;
    dec_cmd->add_option("coords", dec_coords, "x1 x2 x3 x4")->expected(4);
    add_common(dec_cmd, dec_opts);

    // verify ------------------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify", "Round-trip and identity suite up to a height");
    CommonOpts verify_opts;
    std::int64_t verify_b = 100;
    verify_cmd->add_option("--max-b", verify_b, "Height bound")->required();
    add_common(verify_cmd, verify_opts);

    // densities -----------------------------------------------------------------
    auto* dens_cmd = app.add_subcommand("densities", "Local densities against their oracles");
    CommonOpts dens_opts;
    std::int64_t dens_pmax = 31;
    int dens_special = 0;
    dens_cmd->add_option("--p-max", dens_pmax, "Largest prime")->required();
    dens_cmd->add_option("--special", dens_special, "Also check the ramified family at this e");
    add_common(dens_cmd, dens_opts);

    // rho -------------------------------------------------------------------
    auto* rho_cmd = app.add_subcommand("rho", "Quadratic congruence counts and their Jacobi sums");
    CommonOpts rho_opts;
    std::int64_t rho_q = 0, rho_a = 0, rho_b = 0;
    bool rho_check = false;
    std::int64_t rho_max_identity = 199, rho_max_bound = 100;
    auto* rho_q_opt = rho_cmd->add_option("--q", rho_q, "Modulus");
    rho_cmd->add_option("--a", rho_a, "Quadratic coefficient")->needs(rho_q_opt);
    rho_cmd->add_option("--b", rho_b, "Constant term")->needs(rho_q_opt);
    rho_cmd->add_flag("--check", rho_check, "Run the identity and bound sweeps");
    rho_cmd->add_option("--max-q-identity", rho_max_identity, "Odd-q sweep bound");
    rho_cmd->add_option("--max-q-bound", rho_max_bound, "All-q bound sweep limit");
    add_common(rho_cmd, rho_opts);

    // lemma6 ------------------------------------------------------------------
    auto* l6_cmd = app.add_subcommand("lemma6", "Plane-box counts against the closed-form bound");
    l6_cmd->set_help_flag("--help", "Print help");  // frees -h for the box bounds
    CommonOpts l6_opts;
    std::int64_t l6_random = 0;
    std::uint64_t l6_seed = 0;
    std::string l6_v, l6_h;
    auto* l6_rand_opt = l6_cmd->add_option("--random", l6_random, "Number of seeded trials");
    auto* l6_seed_opt = l6_cmd->add_option("--seed", l6_seed, "Seed for the trials");
    l6_rand_opt->needs(l6_seed_opt);
    auto* l6_v_opt = l6_cmd->add_option("--v", l6_v, "Plane vector a,b,c");
    l6_cmd->add_option("--h", l6_h, "Box bounds h1,h2,h3")->needs(l6_v_opt);
    add_common(l6_cmd, l6_opts);

    // lemma7 ------------------------------------------------------------------
    auto* l7_cmd = app.add_subcommand("lemma7", "Lattice-ellipse counts against the closed-form bound");
    CommonOpts l7_opts;
    std::int64_t l7_random = 0;
    std::uint64_t l7_seed = 0;
    auto* l7_rand_opt = l7_cmd->add_option("--random", l7_random, "Number of seeded trials")->required();
    auto* l7_seed_opt = l7_cmd->add_option("--seed", l7_seed, "Seed for the trials");
    l7_rand_opt->needs(l7_seed_opt);
    add_common(l7_cmd, l7_opts);

    // lemma34 -----------------------------------------------------------------
    auto* l34_cmd = app.add_subcommand("lemma34", "Dyadic-box divisor equation counters");
    CommonOpts l34_opts;
    int l34_which = 1;
    std::string l34_k;
    std::int64_t l34_random = 0;
    std::uint64_t l34_seed = 0;
    std::int64_t l34_budget = 10000;
    l34_cmd->add_option("--which", l34_which, "Equation 1..4")->required()->check(CLI::Range(1, 4));
    l34_cmd->add_option("--k", l34_k, "Seven comma-separated dyadic bases (fractions allowed)");
    auto* l34_rand_opt = l34_cmd->add_option("--random", l34_random, "Number of seeded trials");
    auto* l34_seed_opt = l34_cmd->add_option("--seed", l34_seed, "Seed for the trials");
    l34_rand_opt->needs(l34_seed_opt);
    l34_cmd->add_option("--budget", l34_budget, "Base-product budget for random tuples");
    add_common(l34_cmd, l34_opts);

    // lowerbound ----------------------------------------------------------------
    auto* lb_cmd = app.add_subcommand("lowerbound", "Squarefree divisor-sum lower bound");
    CommonOpts lb_opts;
    double lb_b = 0;
    std::string lb_delta = "1/84";
    lb_cmd->add_option("--b", lb_b, "Height bound B")->required();
    lb_cmd->add_option("--delta", lb_delta, "Cutoff exponent as a fraction p/q");
    add_common(lb_cmd, lb_opts);

    // lattice-det ---------------------------------------------------------------
    auto* ld_cmd = app.add_subcommand("lattice-det", "Divisibility-lattice determinant");
    CommonOpts ld_opts;
    std::vector<std::string> ld_m;
    ld_cmd->add_option("m", ld_m, "m1 m2 m3 m4")->expected(4);
    add_common(ld_cmd, ld_opts);

    std::vector<std::string> argv_copy(args);
    try {
        std::reverse(argv_copy.begin(), argv_copy.end());
        app.parse(argv_copy);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        err << "run with --help for usage\n";
        return 1;
    }

    try {
        if (count_cmd->parsed()) {
            auto o = Output::open(count_opts.out_path, out);
            auto t0 = std::chrono::steady_clock::now();
            CountReport r = count_method == "torsor" ? count_torsor(count_b, count_opts.limits())
                                                     : count_naive(count_b, count_opts.limits());
            if (!count_star_mode.empty())
                r.Nstar = count_star(count_b,
                                     count_star_mode == "direct" ? StarMethod::direct
                                                                 : StarMethod::convolution,
                                     count_opts.limits());
            emit_count_reports({r}, count_opts.format, o.os(), false);
            err << "# elapsed_seconds="
                << fmt_real(std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count())
                << "\n";
            return 0;
        }

        if (scan_cmd->parsed()) {
            auto o = Output::open(scan_opts.out_path, out);
            std::vector<double> ladder;
            std::stringstream ss(scan_ladder);
            std::string item;
            while (std::getline(ss, item, ',')) ladder.push_back(std::stod(item));
            if (ladder.empty()) throw std::invalid_argument("scan: empty ladder");
            auto rows = ratio_report(ladder, scan_method, scan_opts.limits());
            emit_count_reports(rows, scan_opts.format, o.os(), true);
            for (const auto& r : rows)
                err << "# B=" << fmt_real(r.B) << " elapsed_seconds=" << fmt_real(r.elapsed_seconds)
                    << "\n";
            return 0;
        }

        if (dec_cmd->parsed()) {
            auto o = Output::open(dec_opts.out_path, out);
            CayleyPoint p;
            for (int i = 0; i < 4; ++i) p.x[i] = Int128::parse(dec_coords[static_cast<std::size_t>(i)]);
            Decomposition d = decompose(p);
            o.os() << to_json(d).dump(2) << "\n";
            return 0;
        }

        if (verify_cmd->parsed()) {
            auto o = Output::open(verify_opts.out_path, out);
            auto limits = verify_opts.limits();
            limits.naive_limit = std::max(limits.naive_limit, verify_b);
            limits.torsor_limit = std::max(limits.torsor_limit, verify_b);
            VerifyReport r = verify_parametrization(verify_b, limits);
            o.os() << "checked_points=" << r.points << " checked_tuples=" << r.tuples
                   << " failures=" << r.failures.size() << "\n";
            for (const auto& f : r.failures) err << "violation: " << f << "\n";
            return r.ok() ? 0 : 3;
        }

        if (dens_cmd->parsed()) {
            auto o = Output::open(dens_opts.out_path, out);
            bool all_equal = true;
            std::vector<json> rows;
            o.os() << "p,variant,e,density_formula,density_bruteforce,equal\n";
            for (std::int64_t p = 2; p <= dens_pmax; ++p) {
                if (!is_prime(p)) continue;
                Rational formula = local_density_generic(p);
                Rational oracle = brute_force_density_generic(p);
                bool equal = formula == oracle;
                all_equal = all_equal && equal;
                o.os() << p << ",generic,," << formula.str() << "," << oracle.str() << ","
                       << (equal ? 1 : 0) << "\n";
                if (dens_special > 0) {
                    Rational sf = local_density_special(p, dens_special);
                    Rational so = brute_force_density_special(p, dens_special);
                    bool sequal = sf == so;
                    all_equal = all_equal && sequal;
                    o.os() << p << ",special," << dens_special << "," << sf.str() << "," << so.str()
                           << "," << (sequal ? 1 : 0) << "\n";
                }
            }
            return all_equal ? 0 : 3;
        }

        if (rho_cmd->parsed()) {
            auto o = Output::open(rho_opts.out_path, out);
            int exit_code = 0;
            if (rho_q > 0) {
                Int128 direct = rho(Int128(rho_q), Int128(rho_a), Int128(rho_b));
                Int128 sum = rho_jacobi_sum(Int128(rho_q), Int128(rho_a), Int128(rho_b));
                bool odd = rho_q % 2 != 0;
                o.os() << "q,a,b,direct,jacobi_sum,identity_applies,equal\n";
                o.os() << rho_q << "," << rho_a << "," << rho_b << "," << direct.str() << ","
                       << sum.str() << "," << (odd ? 1 : 0) << ","
                       << (odd ? (direct == sum ? "1" : "0") : "") << "\n";
                if (odd && gcd(Int128(rho_a) * Int128(rho_b), Int128(rho_q)) == Int128(1) &&
                    direct != sum)
                    exit_code = 3;
            }
            if (rho_check) {
                std::int64_t identity_failures = 0, bound_failures = 0;
                for (std::int64_t q = 1; q <= rho_max_identity; q += 2)
                    for (std::int64_t a = 1; a <= q; ++a)
                        for (std::int64_t b = 1; b <= q; ++b) {
                            if (gcd(Int128(a) * Int128(b), Int128(q)) != Int128(1)) continue;
                            if (rho(Int128(q), Int128(a), Int128(b)) !=
                                rho_jacobi(Int128(q), Int128(a), Int128(b)))
                                ++identity_failures;
                        }
                for (std::int64_t q = 1; q <= rho_max_bound; ++q)
                    for (std::int64_t a = 1; a <= q; ++a)
                        for (std::int64_t b = 1; b <= q; ++b) {
                            if (gcd(Int128(a), Int128(b)) != Int128(1)) continue;
                            if (gcd(Int128(a) * Int128(b), Int128(q)) != Int128(1)) continue;
                            if (rho(Int128(q), Int128(a), Int128(b)) >
                                Int128(4) * rho_jacobi_sum(Int128(q), Int128(a), Int128(b)))
                                ++bound_failures;
                        }
                o.os() << "check,max_q,failures\n";
                o.os() << "identity," << rho_max_identity << "," << identity_failures << "\n";
                o.os() << "bound," << rho_max_bound << "," << bound_failures << "\n";
                if (identity_failures + bound_failures > 0) exit_code = 3;
            }
            if (rho_q <= 0 && !rho_check)
                throw std::invalid_argument("rho: give --q Q --a A --b B, or --check");
            return exit_code;
        }

        if (l6_cmd->parsed()) {
            auto o = Output::open(l6_opts.out_path, out);
            if (l6_random > 0) {
                BoundTrialReport r = run_plane_box_trials(l6_random, l6_seed);
                o.os() << "trials,violations,max_ratio\n";
                o.os() << r.trials << "," << r.violations << "," << fmt_real(r.max_ratio) << "\n";
                return r.violations == 0 ? 0 : 3;
            }
            if (l6_v.empty()) throw std::invalid_argument("lemma6: give --random N --seed S, or --v/--h");
            PlaneBoxQuery q;
            {
                std::stringstream ss(l6_v);
                std::string item;
                for (auto& c : q.v) { std::getline(ss, item, ','); c = std::stoll(item); }
                std::stringstream sh(l6_h);
                for (auto& h : q.H) { std::getline(sh, item, ','); h = std::stod(item); }
            }
            Int128 count = count_primitive_on_plane(q, l6_opts.cell_budget);
            double bound = plane_box_bound(q);
            bool ok = count.to_double() <= bound;
            o.os() << "v1,v2,v3,H1,H2,H3,count,bound,ok\n";
            o.os() << q.v[0] << "," << q.v[1] << "," << q.v[2] << "," << fmt_real(q.H[0]) << ","
                   << fmt_real(q.H[1]) << "," << fmt_real(q.H[2]) << "," << count.str() << ","
                   << fmt_real(bound) << "," << (ok ? 1 : 0) << "\n";
            return ok ? 0 : 3;
        }

        if (l7_cmd->parsed()) {
            auto o = Output::open(l7_opts.out_path, out);
            BoundTrialReport r = run_ellipse_trials(l7_random, l7_seed);
            o.os() << "trials,violations,max_ratio\n";
            o.os() << r.trials << "," << r.violations << "," << fmt_real(r.max_ratio) << "\n";
            return r.violations == 0 ? 0 : 3;
        }

        if (l34_cmd->parsed()) {
            auto o = Output::open(l34_opts.out_path, out);
            EqVariant variant = variant_from_index(l34_which);
            o.os() << "variant,K1,K2,K3,K4,K5,K6,K7,count,bound_value,ratio\n";
            auto emit_row = [&](const ScanRow& row) {
                o.os() << variant_name(row.variant);
                for (double k : row.K.K) o.os() << "," << fmt_real(k);
                o.os() << "," << row.count.str() << "," << fmt_real(row.bound) << ","
                       << fmt_real(row.ratio) << "\n";
            };
            if (!l34_k.empty()) {
                DyadicTuple7 K;
                std::stringstream ss(l34_k);
                std::string item;
                for (auto& k : K.K) {
                    if (!std::getline(ss, item, ','))
                        throw std::invalid_argument("lemma34: --k needs seven values");
                    k = parse_fraction(item).to_double();
                }
                ScanRow row;
                row.variant = variant;
                row.K = K;
                row.count = count_dyadic_equation(variant, K, l34_opts.cell_budget);
                row.bound = variant_bound(variant, K);
                row.ratio = row.count.to_double() / row.bound;
                emit_row(row);
                return 0;
            }
            if (l34_random > 0) {
                ScanReport r = ratio_scan(variant, static_cast<int>(l34_random), l34_seed,
                                          Int128(l34_budget));
                for (const auto& row : r.rows) emit_row(row);
                o.os() << "# max_ratio=" << fmt_real(r.max_ratio) << "\n";
                return 0;
            }
            throw std::invalid_argument("lemma34: give --k, or --random N --seed S");
        }

        if (lb_cmd->parsed()) {
            auto o = Output::open(lb_opts.out_path, out);
            Rational delta = parse_fraction(lb_delta);
            double sum = lower_bound_sum(lb_b, delta);
            o.os() << "B,delta,sum\n";
            o.os() << fmt_real(lb_b) << "," << delta.str() << "," << fmt_real(sum) << "\n";
            return 0;
        }

        if (ld_cmd->parsed()) {
            auto o = Output::open(ld_opts.out_path, out);
            std::array<Int128, 4> m;
            for (int i = 0; i < 4; ++i) m[static_cast<std::size_t>(i)] = Int128::parse(ld_m[static_cast<std::size_t>(i)]);
            Int128 det = divisibility_lattice_det(m[0], m[1], m[2], m[3]);
            o.os() << "m1,m2,m3,m4,det\n";
            o.os() << m[0].str() << "," << m[1].str() << "," << m[2].str() << "," << m[3].str()
                   << "," << det.str() << "\n";
            return 0;
        }
    } catch (const capacity_error& e) {
        err << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}

}  // namespace cayley::cli
