#pragma once

#include "chambered/coxeter.hpp"
#include "chambered/fan.hpp"
#include "chambered/io.hpp"
#include "chambered/parallel.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace chambered {

struct CertifyOptions {
    int length = 4;              // ball l(w) <= length
    int truncation = 8;          // oracle truncation N
    std::size_t count = 1000;    // coverage sample size
    std::uint64_t seed = 1;
    int bound = 50;
    int full_disjoint_length = 3;     // all pairs checked up to this length
    std::size_t sampled_pairs = 500;  // random pairs on the whole ball
    int oracle_length = 4;            // capped further by truncation - margin
    int margin = 2;
    Exec exec = Exec::parallel;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string witness;  // first counterexample or error, empty on success
    io::Json stats = io::Json::object();
    double seconds = 0;
};

struct CertifyReport {
    std::vector<CheckResult> checks;
    bool passed() const;
};

// Individual checks; each catches its own exceptions and reports them as
// failures. The ball must come from sys.enumerate_up_to_length.
CheckResult check_representation(const CoxeterSystem& sys, const Ball& ball, std::uint64_t seed,
                                 std::size_t samples = 100);
CheckResult check_null_root(const CoxeterSystem& sys, const Ball& ball);
CheckResult check_distinct(const Ball& ball, Exec exec);
CheckResult check_disjoint(const Ball& ball, const CertifyOptions& opts);
CheckResult check_half_space(const CoxeterSystem& sys, const Ball& ball);
CheckResult check_mutation_hasse(const Ball& ball);
CheckResult check_locate_consistency(const CoxeterSystem& sys, const Ball& ball);
CheckResult check_coverage(const CoxeterSystem& sys, const CoverageOptions& opts);
CheckResult check_oracle(const CoxeterSystem& sys, const Ball& ball, int max_length,
                         int truncation, int margin, Exec exec);

// Runs every check above at the configured bounds. Throws NotAffineError on
// non-affine systems.
CertifyReport certify(const CoxeterSystem& sys, const CertifyOptions& opts);

io::Json to_json(const CheckResult& c);
io::Json to_json(const CertifyReport& r);

} // namespace chambered
