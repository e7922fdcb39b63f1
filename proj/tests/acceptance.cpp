// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Usage: acceptance <path-to-known-discrepancies-file>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "piforms/piforms.hpp"

using namespace piforms;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    std::cout << (ok ? "PASS" : "FAIL") << " " << name;
    if (!detail.empty()) std::cout << " (" << detail << ")";
    std::cout << "\n";
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void criterion_goldens() {
    auto t0 = Clock::now();
    int verified = 0;
    std::string first_bad;
    for (const auto& g : catalog::golden_series()) {
        auto rep = engine::verify_golden(g, 30);
        if (rep.verdict == engine::Verdict::verified)
            ++verified;
        else if (first_bad.empty())
            first_bad = g.label + ": " + rep.details;
    }
    double secs = seconds_since(t0);
    std::ostringstream d;
    d << verified << "/17 printed series at 30 digits, " << secs << " s";
    if (!first_bad.empty()) d << ", first failure " << first_bad;
    report("golden-series-30-digits", verified == 17 && secs < 10.0, d.str());
}

void criterion_reductions() {
    bool ok = true;
    auto check = [&](const char* fam, std::vector<long> params, const char* label) {
        auto inst = catalog::instantiate(fam, params);
        const auto& gold = catalog::golden(label);
        if (inst.term.start_index != gold.term.start_index) ok = false;
        for (long k = gold.term.start_index; k <= gold.term.start_index + 20; ++k)
            if (inst.prefactor * hyperterm::term_value(inst.term, k) !=
                hyperterm::term_value(gold.term, k))
                ok = false;
        if (!(inst.lhs.coeff == gold.lhs.coeff) || inst.lhs.pi_power != gold.lhs.pi_power)
            ok = false;
    };
    check("thm-2.1", {0, 0}, "eq-1");
    check("thm-2.3", {1, 1, 0}, "eq-2");
    report("theorem-reduction-exact-k20", ok, "exact rational equality, k <= 20");
}

void criterion_master_identities() {
    auto t0 = Clock::now();
    auto d = hyperterm::dougall_grid(8);
    auto c = hyperterm::chu7f6_grid(8);
    double secs = seconds_since(t0);
    std::ostringstream msg;
    msg << "dougall " << d.checked << " checked/" << d.failed << " failed, chu7f6 "
        << c.checked << " checked/" << c.failed << " failed, " << secs << " s";
    bool ok = d.checked >= 50 && d.failed == 0 && c.checked >= 50 && c.failed == 0 &&
              secs < 30.0;
    report("master-identities-exact", ok, msg.str());
}

std::set<std::string> load_known(const std::string& path) {
    std::set<std::string> known;
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        known.insert(line);
    }
    return known;
}

void criterion_sweep(const std::string& known_path) {
    auto t0 = Clock::now();
    std::set<std::string> known = load_known(known_path);
    std::set<std::string> found;
    long total = 0, verified = 0;
    for (const auto& f : catalog::list_families()) {
        for (const auto& rep : engine::sweep(f.id, 2, 20)) {
            ++total;
            if (rep.verdict == engine::Verdict::verified) {
                ++verified;
            } else {
                std::string csv;
                for (size_t i = 0; i < rep.params.size(); ++i)
                    csv += (i ? "," : "") + std::to_string(rep.params[i]);
                found.insert(rep.family_id + " " + csv);
            }
        }
    }
    double secs = seconds_since(t0);
    std::ostringstream msg;
    msg << verified << "/" << total << " tuples verified at 20 digits, "
        << found.size() << " flagged vs " << known.size() << " known, " << secs << " s";
    bool ok = found == known;
    if (!ok) {
        for (const auto& s : found)
            if (!known.count(s)) {
                msg << ", unexpected: " << s;
                break;
            }
        for (const auto& s : known)
            if (!found.count(s)) {
                msg << ", missing: " << s;
                break;
            }
    }
    report("sweep-bound2-20-digits", ok, msg.str());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <known-discrepancies-file>\n";
        return 2;
    }
    try {
        criterion_goldens();
        criterion_reductions();
        criterion_master_identities();
        criterion_sweep(argv[1]);
    } catch (const std::exception& e) {
        std::cout << "FAIL internal-error (" << e.what() << ")\n";
        return 1;
    }
    return failures == 0 ? 0 : 1;
}
