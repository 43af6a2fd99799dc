// One pass/fail line per acceptance criterion; nonzero exit if any fails.

#include <chrono>
#include <functional>
#include <iostream>

#include "seqasym/verify.hpp"

using namespace seqasym;

int main() {
    struct Criterion {
        int id;
        const char* what;
        std::function<VerificationSummary()> run;
    };
    const std::vector<Criterion> criteria = {
        {1, "appendix tables reproduced bit-exact", [] { return verify_appendix(true); }},
        {2, "tournament expansion folds to -2^2, 2^4, -2^8, -2^15", [] { return verify_wright(); }},
        {3, "permutation expansion numerators for k = 1..10", [] { return verify_comtet(); }},
        {4, "brute-force oracles equal parts tables", [] { return verify_oracle(); }},
        {5, "lift identity for n <= 8, m <= 5", [] { return verify_lift(8, 5); }},
        {6, "coefficient sums vanish for k = 1..8", [] { return verify_sum_rule(8); }},
        {7, "composition route equals seq coefficients", [] { return verify_bender(8, 5); }},
        {8, "normalized residuals within 5% and shrinking", [] { return verify_residual_order(); }},
        {9, "audit verdicts at N = 60", [] { return verify_audit(60); }},
        {10, "leading terms match closed forms for m <= 5", [] { return verify_leading_terms(5); }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const VerificationSummary s = c.run();
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << "criterion " << c.id << ": " << (s.ok() ? "PASS" : "FAIL") << " - " << c.what << " ("
                  << s.checks << " checks, " << s.failures.size() << " failures, " << s.skipped << " skipped, "
                  << std::fixed;
        std::cout.precision(2);
        std::cout << secs << " s)\n";
        std::cout.unsetf(std::ios_base::floatfield);
        for (const auto& f : s.failures) {
            std::cout << "    " << f.class_name << " [" << f.indices << "] expected " << f.expected << ", got "
                      << f.actual << '\n';
        }
        if (!s.ok()) ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
