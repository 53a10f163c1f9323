#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cfub/analytic.hpp"
#include "cfub/fubini.hpp"
#include "cfub/triangles.hpp"
#include "cfub/verify.hpp"

namespace {

using namespace cfub;

std::vector<unsigned> parse_uint_list(const std::string& s) {
    std::vector<unsigned> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(static_cast<unsigned>(std::stoul(item)));
    return out;
}

Rational scale_for(unsigned n) { return n >= 1 ? Rational(2).pow(n - 1) : Rational(1); }

int cmd_table(const std::string& kind, unsigned max_n, const std::string& fmt) {
    TriangleTable t = kind == "S" ? build_stirling2(max_n) : build_central_T(max_n);
    if (fmt == "csv") {
        std::cout << t.to_csv();
    } else if (fmt == "json") {
        std::cout << t.to_json() << "\n";
    } else {
        for (unsigned n = 0; n <= max_n; ++n) {
            for (unsigned k = 0; k <= n; ++k)
                std::cout << t.at(n, k).to_string() << (k == n ? "" : " ");
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_poly(unsigned n, const std::string& route_s, const std::string& fmt, bool scaled) {
    auto route = parse_route(route_s);
    if (!route) {
        std::cerr << "unknown route '" << route_s << "'; valid: definition, binomial, odd_step, "
                     "stirling, second_order, determinant, egf, parity\n";
        return 2;
    }
    Poly p = c_poly(n, *route);
    if (scaled && n % 2 == 1) p = scale_for(n) * p;
    if (fmt == "json")
        std::cout << poly_to_json(n, p) << "\n";
    else
        std::cout << p.to_plain_string() << "\n";
    return 0;
}

int cmd_numbers(unsigned upto, bool scaled, const std::string& fmt) {
    nlohmann::json arr = nlohmann::json::array();
    if (fmt == "csv") std::cout << "n,value,scale\n";
    for (unsigned n = 0; n <= upto; ++n) {
        Rational v = c_number(n);
        std::string scale = "1";
        if (scaled && n % 2 == 1) {
            v = scale_for(n) * v;
            scale = "2^" + std::to_string(n - 1);
        }
        if (fmt == "json") {
            arr.push_back({{"n", n}, {"value", v.to_string()}, {"scale", scale}});
        } else if (fmt == "csv") {
            std::cout << n << "," << v.to_string() << "," << scale << "\n";
        } else {
            std::cout << n << " " << v.to_string();
            if (scale != "1") std::cout << "  (scaled by " << scale << ")";
            std::cout << "\n";
        }
    }
    if (fmt == "json") std::cout << arr.dump() << "\n";
    return 0;
}

int cmd_verify(unsigned max_n, const std::string& fmt, const std::string& inject_t,
               const std::string& inject_r) {
    Injection inj;
    if (!inject_t.empty()) {
        std::stringstream ss(inject_t);
        std::string ns, ks, vs;
        if (!std::getline(ss, ns, ',') || !std::getline(ss, ks, ',') || !std::getline(ss, vs)) {
            std::cerr << "--inject-t expects n,k,value\n";
            return 2;
        }
        inj.t_entry = {static_cast<unsigned>(std::stoul(ns)), static_cast<unsigned>(std::stoul(ks)),
                       Rational::from_string(vs)};
    }
    if (!inject_r.empty()) {
        std::stringstream ss(inject_r);
        std::string js, vs;
        if (!std::getline(ss, js, ',') || !std::getline(ss, vs)) {
            std::cerr << "--inject-r expects j,value\n";
            return 2;
        }
        inj.r_coeff = {static_cast<unsigned>(std::stoul(js)), Rational::from_string(vs)};
    }
    auto reports = run_verification(max_n, inj);
    if (fmt == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& r : reports)
            arr.push_back({{"name", r.name},
                           {"range", r.range},
                           {"status", status_name(r.status)},
                           {"detail", r.detail}});
        std::cout << arr.dump() << "\n";
    } else {
        for (const auto& r : reports) {
            std::cout << status_name(r.status) << "  " << r.name << "  [" << r.range << "]";
            if (!r.detail.empty()) std::cout << "  " << r.detail;
            std::cout << "\n";
        }
    }
    return all_passed(reports) ? 0 : 1;
}

int cmd_bench(const std::string& routes_s, const std::string& ns_s, const std::string& fmt) {
    std::vector<FubiniRoute> routes;
    {
        std::stringstream ss(routes_s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (item.empty()) continue;
            auto r = parse_route(item);
            if (!r || *r == FubiniRoute::parity_reflection) {
                std::cerr << "unknown or non-computing route '" << item << "'\n";
                return 2;
            }
            routes.push_back(*r);
        }
    }
    auto ns = parse_uint_list(ns_s);
    struct Row { std::string route; unsigned n; long long usec; };
    std::vector<Row> rows;
    for (auto r : routes)
        for (unsigned n : ns) {
            std::vector<long long> samples;
            for (int rep = 0; rep < 5; ++rep) {
                auto t0 = std::chrono::steady_clock::now();
                volatile int sink = c_poly(n, r).degree();
                (void)sink;
                auto t1 = std::chrono::steady_clock::now();
                samples.push_back(
                    std::chrono::duration_cast<std::chrono::microseconds>(t1 - t0).count());
            }
            std::sort(samples.begin(), samples.end());
            rows.push_back({route_name(r), n, samples[2]});
        }
    if (fmt == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows)
            arr.push_back({{"route", row.route}, {"n", row.n}, {"usec", row.usec}});
        std::cout << arr.dump() << "\n";
    } else {
        if (fmt == "csv") std::cout << "route,n,usec\n";
        for (const auto& row : rows)
            std::cout << row.route << (fmt == "csv" ? "," : "  n=") << row.n
                      << (fmt == "csv" ? "," : "  ") << row.usec << (fmt == "csv" ? "" : " us")
                      << "\n";
    }
    // The odd-step recurrence skips the vanishing even terms, so it should
    // come in at or under the full binomial recurrence at large n.
    if (!ns.empty()) {
        unsigned largest = *std::max_element(ns.begin(), ns.end());
        long long odd = -1, bin = -1;
        for (const auto& row : rows)
            if (row.n == largest) {
                if (row.route == "odd_step") odd = row.usec;
                if (row.route == "binomial") bin = row.usec;
            }
        if (odd >= 0 && bin >= 0 && fmt == "plain")
            std::cout << "# odd_step vs binomial at n=" << largest << ": " << odd << " us vs " << bin
                      << " us (" << (odd <= bin ? "odd_step faster or equal" : "binomial faster")
                      << ")\n";
    }
    return 0;
}

int cmd_asymptotic(const std::string& ns_s, const std::string& fmt) {
    auto ns = parse_uint_list(ns_s);
    auto reports = asymptotic_report(ns);
    if (fmt == "json") {
        for (const auto& r : reports) std::cout << r.to_json() << "\n";
    } else {
        if (fmt == "csv") std::cout << "n,exact,estimate,ratio\n";
        for (const auto& r : reports) {
            std::ostringstream os;
            os.precision(10);
            if (fmt == "csv")
                os << r.n << "," << c_number(r.n).to_string() << "," << r.estimate << "," << r.ratio;
            else
                os << "n=" << r.n << "  exact=" << c_number(r.n).to_string()
                   << "  estimate=" << r.estimate << "  ratio=" << r.ratio;
            std::cout << os.str() << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Central Fubini-like numbers and polynomials: exact routes, "
                 "cross-verification, and asymptotics"};
    app.require_subcommand(1);

    std::string fmt = "plain";

    auto* table = app.add_subcommand("table", "Emit a triangle of S(n,k) or T(n,k)");
    std::string table_kind;
    unsigned table_max_n = 10;
    table->add_option("kind", table_kind, "S or T")->required()->check(CLI::IsMember({"S", "T"}));
    table->add_option("--max-n", table_max_n, "largest row");
    table->add_option("--format", fmt)->check(CLI::IsMember({"plain", "json", "csv"}));

    auto* poly = app.add_subcommand("poly", "Emit c_n(x) computed by a chosen route");
    unsigned poly_n = 0;
    std::string poly_route = "definition";
    bool poly_scaled = false;
    poly->add_option("--n", poly_n)->required();
    poly->add_option("--route", poly_route);
    poly->add_flag("--scaled", poly_scaled, "multiply odd rows by 2^(n-1)");
    poly->add_option("--format", fmt)->check(CLI::IsMember({"plain", "json"}));

    auto* numbers = app.add_subcommand("numbers", "Emit c_0..c_upto");
    unsigned numbers_upto = 10;
    bool numbers_scaled = false;
    numbers->add_option("--upto", numbers_upto)->required();
    numbers->add_flag("--scaled", numbers_scaled, "print odd entries as 2^(n-1) c_n");
    numbers->add_option("--format", fmt)->check(CLI::IsMember({"plain", "json", "csv"}));

    auto* verify = app.add_subcommand("verify", "Run the full cross-verification suite");
    unsigned verify_max_n = 20;
    std::string inject_t, inject_r;
    verify->add_option("--max-n", verify_max_n);
    verify->add_option("--format", fmt)->check(CLI::IsMember({"plain", "json"}));
    verify->add_option("--inject-t", inject_t, "corrupt T(n,k): n,k,value (self-test)");
    verify->add_option("--inject-r", inject_r, "corrupt determinant band R(j): j,value (self-test)");

    auto* bench = app.add_subcommand("bench", "Time routes against each other");
    std::string bench_routes, bench_ns;
    bench->add_option("--routes", bench_routes)->required();
    bench->add_option("--n", bench_ns)->expected(0, 1);
    bench->add_option("--format", fmt)->check(CLI::IsMember({"plain", "json", "csv"}));

    auto* asym = app.add_subcommand("asymptotic", "Exact vs asymptotic estimate");
    std::string asym_ns;
    asym->add_option("--n", asym_ns)->expected(0, 1);
    asym->add_option("--format", fmt)->check(CLI::IsMember({"plain", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (table->parsed()) return cmd_table(table_kind, table_max_n, fmt);
        if (poly->parsed()) return cmd_poly(poly_n, poly_route, fmt, poly_scaled);
        if (numbers->parsed()) return cmd_numbers(numbers_upto, numbers_scaled, fmt);
        if (verify->parsed()) return cmd_verify(verify_max_n, fmt, inject_t, inject_r);
        if (bench->parsed()) return cmd_bench(bench_routes, bench_ns, fmt);
        if (asym->parsed()) return cmd_asymptotic(asym_ns, fmt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
