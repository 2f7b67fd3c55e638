#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "fuzzylat/frame.hpp"
#include "fuzzylat/report.hpp"

// Seeded property runs over generated instances. Each trial draws its
// instances from an mt19937_64 seeded with seed + trial, so any single trial
// can be regenerated without replaying the ones before it. Violations are
// captured as self-contained bundles (factor matrices, t-norm, witness) that
// re-evaluate to the same outcome.

namespace fuzzylat::verify {

enum class Claim {
    ProductClosure,              // products under t-norms without zero divisors are lattices
                                 // with coordinatewise structure
    DistributiveImpliesModular,  // plus agreement of the two distributive forms
    ProductPreservesLaws,        // distributive (modular) factors give distributive (modular) products
    LukasiewiczCounterexample,   // some Lukasiewicz product of posets is not transitive
    ZeroDivisorNilpotent,        // zero divisors on the grid iff nilpotent elements on the grid
};

const char* to_string(Claim c);
/// Accepts the descriptive names above and the short ids Thm4_8, Thm5_6,
/// ThmProd5_6, Thm4_4, Lemma4_11.
Claim parse_claim(std::string_view name);
const std::vector<std::string>& claim_names();

struct Config {
    std::size_t trials = 100;
    std::uint64_t seed = 0;
    Index min_size = 2;
    Index max_size = 6;
    Index min_factors = 2;
    Index max_factors = 3;
    std::vector<std::string> tnorms;  // empty: the claim's default set
    double grid_step = 0.1;
    int max_n = 64;

    void validate() const;
};

/// Default t-norm set per claim.
std::vector<std::string> default_tnorms(Claim c);

/// One evaluated instance. `family` is "distributive"/"modular" for
/// ProductPreservesLaws, empty otherwise. `grid_step` is only used by
/// ZeroDivisorNilpotent, as is `max_n`.
struct Bundle {
    Claim claim = Claim::ProductClosure;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::string tnorm;
    std::string family;
    double grid_step = 0;
    int max_n = 0;
    std::vector<Frame> factors;
    std::string detail;
    IndexTuple witness;
};

nlohmann::json to_json(const Bundle& b);
Bundle bundle_from_json(const nlohmann::json& j);

/// Outcome of evaluating a bundle's inputs: `violated` means the claim failed
/// on this instance (for LukasiewiczCounterexample: an intransitive product
/// was found, which is the sought outcome).
struct Outcome {
    bool violated = false;
    std::string detail;
    IndexTuple witness;
    std::vector<std::string> tags;  // counted by run()
};

Outcome evaluate(const Bundle& b);

/// True when evaluating the stored inputs reproduces the stored detail and witness.
bool replays(const Bundle& b);

struct Run {
    Claim claim = Claim::ProductClosure;
    Config config;
    std::vector<Bundle> failures;  // sorted by trial
    std::vector<Bundle> findings;  // intransitive products (LukasiewiczCounterexample only)
    std::map<std::string, std::size_t> counters;
    double seconds = 0;

    /// No failures, and for LukasiewiczCounterexample at least one finding.
    bool passed() const {
        return failures.empty() && (claim != Claim::LukasiewiczCounterexample || !findings.empty());
    }
};

Run run(Claim claim, const Config& config);

nlohmann::json summary_json(const Run& r);

}  // namespace fuzzylat::verify
