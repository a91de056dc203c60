#pragma once

#include <string>
#include <vector>

namespace cvejoin {

struct CheckResult {
    std::string name;
    bool pass = false;
    double deviation = 0.0; // measured worst deviation, check-specific
    double tolerance = 0.0;
    std::string detail;
};

struct VerifyOptions {
    // Negative-control knob: a value in 1..mutation_count() perturbs one
    // closed-form coefficient by +1, which must make the suite fail.
    int mutation = 0;
    int random_trials = 200;
    int max_eigensolver_dim = 500;
};

int mutation_count();

struct VerifyReport {
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

// The built-in verification suite: closed-form distance spectra against the
// numeric route, -2 multiplicities, the line-graph spectrum oracle, the
// equienergetic family certificates, index closed forms against definitional
// values, randomized structural identities, and eigensolver accuracy on
// matrices with known spectra.
VerifyReport run_verification_suite(const VerifyOptions& opts = {});

} // namespace cvejoin
