// Command-line driver: runs duality checks over a case matrix and emits
// JSON and CSV reports.

#include <atomic>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "swdual/duality.hpp"

namespace {

using namespace swdual;

std::vector<CaseSpec> default_suite() {
    std::vector<CaseSpec> cases;
    auto add = [&](int m, int n, int r, int s, FieldSpec f) {
        CaseSpec c;
        c.m = m;
        c.n = n;
        c.r = r;
        c.s = s;
        c.field = f;
        c.checks = known_checks();
        cases.push_back(std::move(c));
    };
    const FieldSpec q = FieldSpec::rationals();
    const FieldSpec p2 = FieldSpec::prime(2), p3 = FieldSpec::prime(3), p5 = FieldSpec::prime(5);
    for (auto [m, r] : {std::pair{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}})
        for (const auto& f : {q, p2, p3, p5}) add(m, 0, r, 0, f);
    for (auto [m, n, r] : {std::tuple{1, 1, 2}, {1, 1, 3}, {2, 1, 2}})
        for (const auto& f : {q, p3}) add(m, n, r, 0, f);
    for (auto [m, n, r, s] :
         {std::tuple{2, 0, 1, 1}, {2, 0, 2, 1}, {3, 0, 1, 1}, {1, 1, 1, 1}, {2, 1, 1, 1}})
        for (const auto& f : {q, p2, p3}) add(m, n, r, s, f);
    return cases;
}

SuiteReport run_parallel(const std::vector<CaseSpec>& cases, std::int64_t budget, int jobs) {
    SuiteReport out;
    out.cases.resize(cases.size());
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::vector<std::string> errors;
    auto worker = [&]() {
        for (;;) {
            std::size_t t = next.fetch_add(1);
            if (t >= cases.size()) return;
            try {
                out.cases[t] = run_case(cases[t], budget);
            } catch (const std::exception& e) {
                std::lock_guard<std::mutex> lock(err_mutex);
                errors.emplace_back(e.what());
            }
        }
    };
    if (jobs <= 1 || cases.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        int k = std::min<int>(jobs, static_cast<int>(cases.size()));
        for (int t = 0; t < k; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (!errors.empty()) throw std::runtime_error(errors.front());
    return out;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for commuting GL(m|n) / walled Brauer actions on mixed tensor "
                 "space: duality, relation, and invariant checks"};

    int m = 0, n = 0, r = 0, s = 0;
    std::string field_text = "rational";
    std::string check_text = "second";
    std::int64_t budget = 256;
    std::string config_path, out_path;
    int jobs = 1;

    app.add_option("--m", m, "first block size (>= 1 selects a single case)");
    app.add_option("--n", n, "second block size (0 for GL(m))");
    app.add_option("--r", r, "tensor power of V");
    app.add_option("--s", s, "tensor power of W");
    app.add_option("--field", field_text, "ground field: rational or p:<prime>");
    app.add_option("--check", check_text,
                   "comma-separated checks: second|first|relations|invariant|"
                   "coefficient-equations|all");
    app.add_option("--budget", budget, "maximum tensor space dimension (m+n)^(r+s)");
    app.add_option("--config", config_path, "config file with a case list");
    app.add_option("--out", out_path, "write the JSON report to this path");
    app.add_option("--jobs", jobs, "number of concurrent case workers");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        std::vector<swdual::CaseSpec> cases;
        if (!config_path.empty()) {
            std::ifstream in(config_path);
            if (!in) throw std::runtime_error("cannot open config file: " + config_path);
            swdual::SuiteConfig cfg = swdual::parse_config(in);
            budget = cfg.budget;
            cases = std::move(cfg.cases);
        } else if (m > 0) {
            swdual::CaseSpec c;
            c.m = m;
            c.n = n;
            c.r = r;
            c.s = s;
            c.field = swdual::parse_field(field_text);
            c.checks.clear();
            std::istringstream cs(check_text);
            std::string one;
            while (std::getline(cs, one, ',')) {
                if (one == "all") c.checks = swdual::known_checks();
                else if (swdual::known_checks().count(one)) c.checks.insert(one);
                else throw std::runtime_error("unknown check '" + one + "'");
            }
            if (c.checks.empty()) throw std::runtime_error("no checks selected");
            cases.push_back(std::move(c));
        } else {
            cases = default_suite();
        }
        for (const auto& c : cases)
            if (c.tensor_spec().dim() > budget)
                throw std::runtime_error("case " + c.id() + " exceeds budget " +
                                         std::to_string(budget));

        swdual::SuiteReport report = run_parallel(cases, budget, jobs);

        std::cout << report.to_csv();
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) throw std::runtime_error("cannot open output path: " + out_path);
            out << report.to_json().dump(2) << "\n";
        } else {
            std::cout << report.to_json().dump(2) << "\n";
        }
        return report.all_pass() ? 0 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
