#pragma once

#include "dtroots/arithmetic.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace dtroots::cli {

struct ClaimResult {
    std::string suite;
    std::string claim;
    bool passed = false;
    std::string detail;
};

inline constexpr std::string_view kSuites[] = {"thm32", "thm41", "thm45", "thm51", "thm52", "cor53", "prop21"};

/// Runs one named suite, or every suite for "all". Throws InvalidInput for
/// an unknown suite name.
std::vector<ClaimResult> run_suite(std::string_view suite, Int limit, unsigned jobs);

} // namespace dtroots::cli
