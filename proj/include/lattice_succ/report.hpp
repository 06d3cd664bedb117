#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace lattice_succ {

/// Outcome of an executable property check. Stops at the first failure.
struct VerifyReport {
    bool passed = true;
    std::size_t checks = 0;
    std::string failure;
    std::optional<std::size_t> failing_index;

    void fail(std::string message, std::optional<std::size_t> index = std::nullopt)
    {
        if (!passed) return;
        passed = false;
        failure = std::move(message);
        failing_index = index;
    }

    /// Folds another report in; keeps the first failure seen.
    VerifyReport& merge(const VerifyReport& other)
    {
        checks += other.checks;
        if (!other.passed) fail(other.failure, other.failing_index);
        return *this;
    }
};

} // namespace lattice_succ
