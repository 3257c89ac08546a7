// Acceptance suite: one line per criterion, exact arithmetic, zero tolerance.
// Criterion 3 asserts the printed psi3 recursion verbatim; exact computation
// refutes its 9^(k-1) factor for every k >= 2, so that criterion reports FAIL
// by design, together with the corrected identity that does hold. See the
// per-line details.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <vector>

#include "psi3ut/checks.hpp"
#include "psi3ut/cli.hpp"
#include "psi3ut/cring.hpp"
#include "psi3ut/pipeline.hpp"
#include "psi3ut/valuations.hpp"

using namespace psi3ut;
using checks::CheckRow;

namespace {

constexpr unsigned kMod2Exp = 128;

struct Outcome {
    bool pass;
    std::string detail;
};

std::vector<std::uint64_t> seed_range(std::uint64_t count) {
    std::vector<std::uint64_t> s(count);
    for (std::uint64_t i = 0; i < count; ++i) s[i] = i;
    return s;
}

Outcome criterion_valuations() {
    CheckRow nine = checks::nine_power_valuation(4096);
    CheckRow tower = checks::nine_power_tower(12);
    CheckRow iota = checks::iota_product_valuation(512);
    std::ostringstream d;
    d << "nu2(9^l-1)=nu2(l)+3 for l<=4096 [" << (nine.pass ? "ok" : "FAIL") << "]; "
      << "nu2(9^(2^j)-1)=j+3 for j<=12 [" << (tower.pass ? "ok" : "FAIL") << "]; "
      << "nu2(prod)=4l-alpha(l) for l<=512 [" << (iota.pass ? "ok" : "FAIL") << "]";
    return {nine.pass && tower.pass && iota.pass, d.str()};
}

Outcome criterion_sharpness() {
    CheckRow row = checks::f_sharp_integrality(40);
    return {row.pass, row.detail + " for k <= 40"};
}

Outcome criterion_psi3_action() {
    CheckRow printed_f = checks::psi3_f_recursion_printed(40);
    CheckRow corrected_f = checks::psi3_f_recursion(40);
    checks::Psi3TransferRows rows = checks::psi3_g_transfer_rows(40);
    bool pass = printed_f.pass && rows.printed_cases.pass && rows.deep_exponent.pass;
    std::ostringstream d;
    d << "printed recursion 9^k f + 9^(k-1) 2^(nu2(k)+1) u^2 f': " << printed_f.detail << "; "
      << "corrected recursion (no 9^(k-1)): "
      << (corrected_f.pass ? "holds 40/40" : "FAILS") << "; printed shallow/middle sub-entries: "
      << rows.printed_cases.detail << "; computed-exponent sub-entries: "
      << (rows.structure.pass ? "all exact" : "FAIL") << "; " << rows.deep_exponent.detail;
    return {pass, d.str()};
}

Outcome criterion_extraction() {
    CheckRow row = checks::matrix_extraction(12, seed_range(100), kMod2Exp);
    return {row.pass, row.detail + " (n=12, diag 9^k, odd superdiagonal, D-normalization, "
                                   "closed form A01 = mu^-1 (lam11 - 8 lam10))"};
}

Outcome criterion_conjugacy() {
    CheckRow e2e = checks::conjugacy_end_to_end(12, seed_range(100), kMod2Exp);
    CheckRow rand_c = checks::conjugacy_random(16, seed_range(100), kMod2Exp);
    std::ostringstream d;
    d << "end-to-end n=12: " << e2e.detail << "; random C n=16: " << rand_c.detail;
    return {e2e.pass && rand_c.pass, d.str()};
}

Outcome criterion_xn() {
    CheckRow vanish = checks::xn_vanishing(10, kMod2Exp);
    CheckRow path = checks::xn_path_oracle(8, 16, kMod2Exp);

    bool diag_ok = true;
    for (unsigned n = 1; n <= 8 && diag_ok; ++n) {
        UTMatrix x = xn_product(n, 16, kMod2Exp);
        for (unsigned s = 1; s <= 16; ++s) {
            Integer prod = 1;
            for (unsigned u = 1; u <= n; ++u) prod *= nine_pow(s - 1) - nine_pow(u - 1);
            if (Z2Residue(prod, kMod2Exp).value() != x.at(s - 1, s - 1)) diag_ok = false;
        }
    }

    UTMatrix x2 = xn_product(2, 4, kMod2Exp);
    bool spots = (x2.at(1, 2) == 80) && (x2.at(0, 2) == 1);

    CheckRow displayed = checks::xn_displayed_form(8, 16, kMod2Exp);

    std::ostringstream d;
    d << "vanishing n<=10 [" << (vanish.pass ? "ok" : "FAIL") << "]; path=brute n<=8 size 16 ["
      << (path.pass ? "ok" : "FAIL") << "]; diagonal product identity ["
      << (diag_ok ? "ok" : "FAIL") << "]; spot values (X2)_{1,2}=80, (X2)_{0,2}=1 ["
      << (spots ? "ok" : "FAIL") << "]; documented deviation: " << displayed.detail;
    return {vanish.pass && path.pass && diag_ok && spots, d.str()};
}

Outcome criterion_verify_paper() {
    cli::RunConfig cfg;
    cfg.command = "verify-paper";
    cfg.n = 8;
    cfg.seeds = seed_range(10);
    cfg.mod2exp = kMod2Exp;
    auto start = std::chrono::steady_clock::now();
    cli::RunResult r = cli::run(cfg);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream d;
    d << "verify-paper --n 8 --seeds 10: exit " << r.exit_code << " in " << secs << " s";
    return {r.exit_code == 0 && secs < 180.0, d.str()};
}

} // namespace

int main() {
    std::printf("psi3ut acceptance suite (all arithmetic exact, mod2exp = %u)\n", kMod2Exp);

    struct Entry {
        const char* name;
        Outcome (*fn)();
    };
    const Entry entries[] = {
        {"valuation identities", criterion_valuations},
        {"basis sharp integrality", criterion_sharpness},
        {"psi3 action printed vs computed", criterion_psi3_action},
        {"matrix extraction", criterion_extraction},
        {"conjugacy to the bidiagonal matrix", criterion_conjugacy},
        {"X_n products and entry formulas", criterion_xn},
        {"full verification run", criterion_verify_paper},
    };

    int failures = 0;
    int index = 0;
    for (const Entry& e : entries) {
        ++index;
        auto start = std::chrono::steady_clock::now();
        Outcome o = e.fn();
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failures;
        std::printf("[%d/7] %s  %s (%.1f s)\n        %s\n", index, o.pass ? "PASS" : "FAIL",
                    e.name, secs, o.detail.c_str());
    }

    if (failures == 0) {
        std::printf("RESULT: all 7 criteria pass\n");
    } else {
        std::printf("RESULT: %d of 7 criteria fail\n", failures);
        std::printf("note: criterion 3 asserts the printed 9^(k-1)-carrying recursion verbatim; "
                    "exact computation shows that factor is spurious (the corrected identity "
                    "passes for every k <= 40), so a FAIL there reflects the printed formula, "
                    "not the engine\n");
    }
    return failures == 0 ? 0 : 1;
}
