#include "fuzzylat/verify.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "fuzzylat/core.hpp"
#include "fuzzylat/gen.hpp"
#include "fuzzylat/io.hpp"
#include "fuzzylat/laws.hpp"
#include "fuzzylat/product.hpp"
#include "fuzzylat/samples.hpp"
#include "fuzzylat/tnorm.hpp"

namespace fuzzylat::verify {

namespace {

struct ClaimName {
    Claim claim;
    const char* name;
    const char* short_id;
};

constexpr ClaimName kClaims[] = {
    {Claim::ProductClosure, "product-closure", "Thm4_8"},
    {Claim::DistributiveImpliesModular, "distributive-implies-modular", "Thm5_6"},
    {Claim::ProductPreservesLaws, "product-preserves-laws", "ThmProd5_6"},
    {Claim::LukasiewiczCounterexample, "lukasiewicz-counterexample", "Thm4_4"},
    {Claim::ZeroDivisorNilpotent, "zero-divisor-nilpotent", "Lemma4_11"},
};

std::string labels_of(const Frame& f, const IndexTuple& t) {
    std::string s = "(";
    for (std::size_t k = 0; k < t.size(); ++k) {
        if (k > 0) s += ", ";
        s += f.label(t[k]);
    }
    return s + ")";
}

std::vector<BoundedLattice> certify_factors(const Bundle& b) {
    if (b.factors.empty()) throw std::invalid_argument("bundle has no factors");
    std::vector<BoundedLattice> out;
    for (const auto& f : b.factors) out.push_back(certify_or_throw(f));
    return out;
}

TNorm product_tnorm(const std::string& name) {
    auto t = builtin(name);
    if (t.status == ZeroDivisorStatus::HasZeroDivisors) {
        throw std::invalid_argument("t-norm '" + name + "' has zero divisors");
    }
    return t;
}

bool in_family(const BoundedLattice& l, const std::string& family) {
    if (family == "distributive") return is_distributive(l);
    if (family == "modular") return is_modular(l);
    throw std::invalid_argument("unknown law family '" + family + "'");
}

Outcome certify_outcome(const ProductFrame& p, std::optional<BoundedLattice>& out) {
    try {
        auto r = certify_product(p);
        if (auto* err = std::get_if<LatticeCertError>(&r)) {
            return Outcome{true, "product is not a bounded lattice: " + err->message(), err->detail,
                           {}};
        }
        out.emplace(std::get<BoundedLattice>(std::move(r)));
        return {};
    } catch (const StructureMismatch& v) {
        return Outcome{true, v.what(), v.elements(), {}};
    }
}

Outcome eval_product_closure(const Bundle& b) {
    auto p = direct_product(certify_factors(b), product_tnorm(b.tnorm));
    std::optional<BoundedLattice> l;
    auto o = certify_outcome(p, l);
    o.tags.push_back("products");
    if (l) o.tags.push_back("certified");
    return o;
}

Outcome eval_distributive_modular(const Bundle& b) {
    Outcome o;
    for (const auto& l : certify_factors(b)) {
        const auto dist = check_distributive(l, 1);
        const auto& a = dist.checks[0];
        const auto& c = dist.checks[1];
        const bool modular = is_modular(l);
        o.tags.push_back("lattices");
        if (dist.passed()) o.tags.push_back("distributive");
        if (modular) o.tags.push_back("modular");
        if (!o.violated && a.holds() != c.holds()) {
            const auto& w = a.holds() ? c.witnesses.front() : a.witnesses.front();
            o = Outcome{true, "distributive forms disagree at " + labels_of(l.frame(), w.elements),
                        w.elements, std::move(o.tags)};
        } else if (!o.violated && dist.passed() && !modular) {
            const auto w = check_modular(l, 1).witnesses.front();
            o = Outcome{true, "distributive but not modular at " + labels_of(l.frame(), w.elements),
                        w.elements, std::move(o.tags)};
        }
    }
    return o;
}

Outcome eval_product_laws(const Bundle& b) {
    auto factors = certify_factors(b);
    for (const auto& f : factors) {
        if (!in_family(f, b.family)) {
            throw std::invalid_argument("factor is not " + b.family);
        }
    }
    auto p = direct_product(std::move(factors), product_tnorm(b.tnorm));
    std::optional<BoundedLattice> l;
    auto o = certify_outcome(p, l);
    o.tags.push_back("products");
    if (!l) return o;
    if (b.family == "distributive") {
        const auto r = check_distributive(*l, 1);
        for (const auto& c : r.checks) {
            if (!c.holds()) {
                const auto& w = c.witnesses.front().elements;
                return Outcome{true, c.law + " fails at " + labels_of(p.frame, w), w, o.tags};
            }
        }
    } else {
        const auto r = check_modular(*l, 1);
        if (!r.holds()) {
            const auto& w = r.witnesses.front().elements;
            return Outcome{true, "modular law fails at " + labels_of(p.frame, w), w, o.tags};
        }
    }
    o.tags.push_back(b.family);
    return o;
}

Outcome eval_lukasiewicz(const Bundle& b) {
    if (b.factors.empty()) throw std::invalid_argument("bundle has no factors");
    const auto frame = product_frame(b.factors, builtin(b.tnorm));
    Outcome o;
    o.tags.push_back("products");
    if (auto w = witness_intransitivity(frame)) {
        o.violated = true;
        o.witness.assign(w->begin(), w->end());
        o.detail = "product not transitive at " + labels_of(frame, o.witness);
        o.tags.push_back("intransitive");
    }
    return o;
}

Outcome eval_zero_divisor(const Bundle& b) {
    const auto t = builtin(b.tnorm);
    const auto zd = find_zero_divisor(t, b.grid_step);
    const auto nil = find_nilpotent(t, b.grid_step, b.max_n);
    Outcome o;
    o.tags.push_back("grids");
    if (zd) o.tags.push_back("zero-divisor");
    if (nil) o.tags.push_back("nilpotent");
    std::string problem;
    if (zd.has_value() != nil.has_value()) {
        problem = zd ? "zero divisor without nilpotent element" : "nilpotent element without zero divisor";
    } else if (t.status == ZeroDivisorStatus::HasZeroDivisors && !zd) {
        problem = "declared zero divisors not found on the grid";
    } else if (t.status == ZeroDivisorStatus::NoZeroDivisors && zd) {
        problem = "zero divisor found for a t-norm declared without any";
    }
    if (!problem.empty()) {
        o.violated = true;
        o.detail = problem + " (step " + io::format_grade(b.grid_step) + ")";
    }
    return o;
}

}  // namespace

const char* to_string(Claim c) {
    for (const auto& n : kClaims) {
        if (n.claim == c) return n.name;
    }
    return "?";
}

Claim parse_claim(std::string_view name) {
    for (const auto& n : kClaims) {
        if (name == n.name || name == n.short_id) return n.claim;
    }
    throw std::invalid_argument("unknown claim '" + std::string(name) + "'");
}

const std::vector<std::string>& claim_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& n : kClaims) {
            v.emplace_back(n.name);
            v.emplace_back(n.short_id);
        }
        return v;
    }();
    return names;
}

void Config::validate() const {
    if (trials == 0) throw std::invalid_argument("trials must be positive");
    if (min_size < 1 || max_size > 12 || min_size > max_size) {
        throw std::invalid_argument("factor sizes must lie within [1, 12]");
    }
    if (min_factors < 1 || min_factors > max_factors || max_factors > 4) {
        throw std::invalid_argument("factor count must lie within [1, 4]");
    }
    if (!(grid_step > 0) || grid_step > 0.5) {
        throw std::invalid_argument("grid step must lie in (0, 0.5]");
    }
    if (max_n < 2) throw std::invalid_argument("max_n must be at least 2");
    for (const auto& t : tnorms) builtin(t);
}

std::vector<std::string> default_tnorms(Claim c) {
    switch (c) {
        case Claim::ProductClosure:
        case Claim::ProductPreservesLaws: return {"minimum", "algebraic", "hamacher"};
        case Claim::DistributiveImpliesModular: return {};
        case Claim::LukasiewiczCounterexample: return {"lukasiewicz"};
        case Claim::ZeroDivisorNilpotent: return {"minimum", "algebraic", "lukasiewicz", "hamacher"};
    }
    return {};
}

nlohmann::json to_json(const Bundle& b) {
    nlohmann::json j{{"claim", to_string(b.claim)},
                     {"trial", b.trial},
                     {"seed", b.seed},
                     {"detail", b.detail},
                     {"witness", b.witness}};
    if (!b.tnorm.empty()) j["tnorm"] = b.tnorm;
    if (!b.family.empty()) j["family"] = b.family;
    if (b.claim == Claim::ZeroDivisorNilpotent) {
        j["grid_step"] = b.grid_step;
        j["max_n"] = b.max_n;
    }
    auto factors = nlohmann::json::array();
    for (const auto& f : b.factors) {
        factors.push_back(nlohmann::json::parse(io::to_json(f)));
    }
    j["factors"] = std::move(factors);
    return j;
}

Bundle bundle_from_json(const nlohmann::json& j) {
    Bundle b;
    b.claim = parse_claim(j.at("claim").get<std::string>());
    b.trial = j.value("trial", std::size_t{0});
    b.seed = j.value("seed", std::uint64_t{0});
    b.tnorm = j.value("tnorm", std::string());
    b.family = j.value("family", std::string());
    b.grid_step = j.value("grid_step", 0.0);
    b.max_n = j.value("max_n", 0);
    b.detail = j.value("detail", std::string());
    b.witness = j.value("witness", IndexTuple{});
    for (const auto& f : j.value("factors", nlohmann::json::array())) {
        b.factors.push_back(io::parse_json(f.dump()).frame);
    }
    return b;
}

Outcome evaluate(const Bundle& b) {
    switch (b.claim) {
        case Claim::ProductClosure: return eval_product_closure(b);
        case Claim::DistributiveImpliesModular: return eval_distributive_modular(b);
        case Claim::ProductPreservesLaws: return eval_product_laws(b);
        case Claim::LukasiewiczCounterexample: return eval_lukasiewicz(b);
        case Claim::ZeroDivisorNilpotent: return eval_zero_divisor(b);
    }
    throw std::logic_error("unhandled claim");
}

bool replays(const Bundle& b) {
    const auto o = evaluate(b);
    return o.violated && o.detail == b.detail && o.witness == b.witness;
}

namespace {

GenConfig gen_config(const Config& c) {
    GenConfig g;
    g.min_size = c.min_size;
    g.max_size = c.max_size;
    return g;
}

Index draw_factor_count(const Config& c, Rng& rng) {
    return std::uniform_int_distribution<Index>(c.min_factors, c.max_factors)(rng);
}

// Rejection sampling inside a kind catalog that mostly lands in the family.
Frame draw_in_family(const GenConfig& g, const std::string& family, Rng& rng) {
    const auto cfg = family == "distributive"
                         ? with_kinds(g, {SkeletonKind::Chain, SkeletonKind::Boolean,
                                          SkeletonKind::Grid, SkeletonKind::Random})
                         : with_kinds(g, {SkeletonKind::Chain, SkeletonKind::Boolean,
                                          SkeletonKind::Grid, SkeletonKind::M3,
                                          SkeletonKind::Random});
    for (int attempt = 0; attempt < 1000; ++attempt) {
        auto l = gen_bounded_fuzzy_lattice(cfg, rng);
        if (in_family(l, family)) return l.frame();
    }
    throw std::runtime_error("could not draw a " + family + " lattice");
}

}  // namespace

Run run(Claim claim, const Config& config) {
    config.validate();
    const auto start = std::chrono::steady_clock::now();
    Run r;
    r.claim = claim;
    r.config = config;
    const auto tnorms = config.tnorms.empty() ? default_tnorms(claim) : config.tnorms;
    if (claim == Claim::ProductClosure || claim == Claim::ProductPreservesLaws) {
        for (const auto& t : tnorms) product_tnorm(t);
    }
    const auto g = gen_config(config);

    auto record = [&r](Bundle b) {
        auto o = evaluate(b);
        for (const auto& tag : o.tags) ++r.counters[tag];
        if (!o.violated) return;
        b.detail = std::move(o.detail);
        b.witness = std::move(o.witness);
        if (b.claim == Claim::LukasiewiczCounterexample) r.findings.push_back(std::move(b));
        else r.failures.push_back(std::move(b));
    };

    for (std::size_t trial = 0; trial < config.trials; ++trial) {
        const std::uint64_t seed = config.seed + trial;
        Bundle base;
        base.claim = claim;
        base.trial = trial;
        base.seed = seed;
        Rng rng(seed);

        switch (claim) {
            case Claim::ProductClosure: {
                const Index k = draw_factor_count(config, rng);
                for (Index f = 0; f < k; ++f) {
                    base.factors.push_back(gen_bounded_fuzzy_lattice(g, rng).frame());
                }
                for (const auto& t : tnorms) {
                    auto b = base;
                    b.tnorm = t;
                    record(std::move(b));
                }
                break;
            }
            case Claim::DistributiveImpliesModular: {
                if (trial == 0) base.factors.push_back(fuzzify(skeletons::m3(), g, rng));
                else if (trial == 1) base.factors.push_back(fuzzify(skeletons::n5(), g, rng));
                else base.factors.push_back(gen_bounded_fuzzy_lattice(g, rng).frame());
                record(std::move(base));
                break;
            }
            case Claim::ProductPreservesLaws: {
                for (const std::string family : {"distributive", "modular"}) {
                    Rng frng(seed);
                    auto b = base;
                    b.family = family;
                    const Index k = draw_factor_count(config, frng);
                    for (Index f = 0; f < k; ++f) {
                        if (trial == 0 && f == 0 && family == "modular") {
                            b.factors.push_back(fuzzify(skeletons::m3(), g, frng));
                        } else {
                            b.factors.push_back(draw_in_family(g, family, frng));
                        }
                    }
                    for (const auto& t : tnorms) {
                        auto bt = b;
                        bt.tnorm = t;
                        record(std::move(bt));
                    }
                }
                break;
            }
            case Claim::LukasiewiczCounterexample: {
                if (trial == 0) {
                    base.factors = {samples::four_chain(), samples::four_square()};
                } else {
                    const Index k = draw_factor_count(config, rng);
                    for (Index f = 0; f < k; ++f) base.factors.push_back(gen_fuzzy_poset(g, rng));
                }
                for (const auto& t : tnorms) {
                    auto b = base;
                    b.tnorm = t;
                    record(std::move(b));
                }
                break;
            }
            case Claim::ZeroDivisorNilpotent: {
                // a different grid each trial: 1/N for N = N0, N0+1, ...
                const auto n0 = static_cast<long>(std::lround(1.0 / config.grid_step));
                const double step =
                    trial == 0 ? config.grid_step : 1.0 / double(n0 + static_cast<long>(trial % 41));
                for (const auto& t : tnorms) {
                    auto b = base;
                    b.tnorm = t;
                    b.grid_step = step;
                    b.max_n = config.max_n;
                    record(std::move(b));
                }
                break;
            }
        }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

nlohmann::json summary_json(const Run& r) {
    nlohmann::json j{{"claim", to_string(r.claim)},
                     {"trials", r.config.trials},
                     {"seed", r.config.seed},
                     {"passed", r.passed()},
                     {"failures", r.failures.size()},
                     {"findings", r.findings.size()},
                     {"counters", r.counters},
                     {"seconds", r.seconds}};
    if (!r.failures.empty()) j["first_failure"] = to_json(r.failures.front());
    if (!r.findings.empty()) j["first_finding"] = to_json(r.findings.front());
    return j;
}

}  // namespace fuzzylat::verify
