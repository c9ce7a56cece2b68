#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace acs {

struct CheckResult {
    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::string detail;  // first failure, if any
};

struct SelftestOptions {
    int m_max = 4;
    int n_max = 8;
    int kernel_m_max = 6;
    int kernel_n_max = 6;
    int samples = 100;
    std::uint64_t seed = 20260417;
};

/// Identity suites over the K-ring and the Chern class routes:
/// relation (eta + t eta)^k = 2 e^{k-1} - f^{k-1}, eta^{2n} = (eta + t eta)^n,
/// the conjugation series, H * t(H) = 1, e_1^{n-1} - e_j^{n-1} =
/// eta_1^{2n-1} - eta_j^{2n-1}, kernel anti-invariance / rank, and agreement
/// of the character route with the product formula on random vectors.
std::vector<CheckResult> run_selftest(const SelftestOptions& options = {});

} // namespace acs
