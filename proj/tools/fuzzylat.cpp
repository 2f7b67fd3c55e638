// fuzzylat: command-line front end.
// Exit status: 0 success, 1 a check failed (details as JSON on stdout),
// 2 usage or input error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fuzzylat/fuzzylat.hpp"
#include "fuzzylat/io.hpp"
#include "fuzzylat/verify.hpp"

namespace fs = std::filesystem;
using namespace fuzzylat;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::optional<io::Format> format_opt(const std::string& name) {
    if (name.empty()) return std::nullopt;
    return io::parse_format(name);
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json labels_json(const Frame& f, const IndexTuple& t) {
    auto a = json::array();
    for (Index i : t) a.push_back(f.label(i));
    return a;
}

json lattice_json(const BoundedLattice& l) {
    return json{{"certified", true},
                {"size", l.size()},
                {"bottom", l.label(l.bottom())},
                {"top", l.label(l.top())}};
}

json cert_json(const CertResult<double>& r, const Frame& f) {
    if (const auto* l = std::get_if<BoundedLattice>(&r)) return lattice_json(*l);
    auto j = io::cert_error_json(std::get<LatticeCertError>(r), f);
    j["certified"] = false;
    return j;
}

std::vector<std::string> split_list(const std::vector<std::string>& items) {
    std::vector<std::string> out;
    for (const auto& item : items) {
        std::stringstream ss(item);
        for (std::string part; std::getline(ss, part, ',');) {
            if (!part.empty()) out.push_back(part);
        }
    }
    return out;
}

int cmd_check(const std::string& file, const std::string& format) {
    const auto frame = io::load(file, format_opt(format));
    const auto poset = is_fuzzy_poset(frame);
    const auto cert = certify_lattice(frame);
    json j{{"file", file},
           {"elements", frame.size()},
           {"poset", io::report_json(poset, &frame)},
           {"lattice", cert_json(cert, frame)}};
    print(j);
    return certified(cert) ? kOk : kCheckFailed;
}

int cmd_product(const std::vector<std::string>& files, const std::string& tnorm,
                const std::string& sep, const std::string& out, const std::string& format,
                bool certify) {
    const auto t = builtin(tnorm);
    ProductOptions opts;
    opts.separator = sep;

    std::vector<Frame> frames;
    std::vector<BoundedLattice> lattices;
    for (const auto& f : files) {
        frames.push_back(io::load(f));
        if (auto l = certify_lattice(frames.back()); certified(l)) {
            lattices.push_back(std::get<BoundedLattice>(std::move(l)));
        }
    }

    json summary{{"tnorm", t.name}, {"factors", files}};
    int status = kOk;
    std::optional<Frame> result;
    if (lattices.size() == frames.size()) {
        auto p = direct_product(lattices, t, opts);
        if (!p.notes.empty()) summary["notes"] = p.notes;
        if (certify) {
            try {
                const auto r = certify_product(p);
                summary["certification"] = cert_json(r, p.frame);
                if (!certified(r)) status = kCheckFailed;
            } catch (const StructureMismatch& v) {
                summary["certification"] = json{{"certified", false},
                                                {"violation", v.what()},
                                                {"labels", labels_json(p.frame, v.elements())}};
                status = kCheckFailed;
            }
        }
        result = std::move(p.frame);
    } else {
        if (certify) throw InputError("--certify needs every factor to be a bounded lattice");
        summary["notes"] = json::array({"some factors are not lattices; product relation only"});
        result = product_frame(frames, t, opts);
    }
    summary["elements"] = result->size();

    const auto fmt = format.empty() ? (out.empty() ? io::Format::Json : io::format_from_path(out))
                                    : io::parse_format(format);
    if (out.empty()) {
        std::cout << io::emit(*result, fmt);
        if (certify || summary.contains("notes")) std::cerr << summary.dump(2) << "\n";
    } else {
        io::Metadata meta{"product", t.name + " product of " + std::to_string(files.size()) +
                                         " factors", ""};
        io::save(*result, out, fmt, meta);
        summary["output"] = out;
        print(summary);
    }
    return status;
}

int cmd_bound(const std::string& file, const std::string& a, const std::string& b, bool meet) {
    const auto frame = io::load(file);
    const Index i = frame.index_of(a), k = frame.index_of(b);
    const auto r = meet ? fuzzy_meet(frame, i, k) : fuzzy_join(frame, i, k);
    const char* key = meet ? "meet" : "join";
    json j{{"a", a}, {"b", b}};
    if (r) {
        j[key] = frame.label(*r);
        print(j);
        return kOk;
    }
    j[key] = nullptr;
    const Index pair[] = {i, k};
    const auto bounds = meet ? lower_bounds(frame, std::span<const Index>(pair))
                             : upper_bounds(frame, std::span<const Index>(pair));
    j[meet ? "lower_bounds" : "upper_bounds"] = labels_json(frame, bounds);
    print(j);
    return kCheckFailed;
}

json read_map(const std::string& spec) {
    const auto trimmed = spec.find_first_not_of(" \t\n");
    if (trimmed != std::string::npos && spec[trimmed] == '{') return json::parse(spec);
    return json::parse(io::read_file(spec));
}

int cmd_hom(const std::string& src, const std::string& dst, const std::string& map_spec) {
    const auto fs_ = io::load(src), fd = io::load(dst);
    const auto rs = certify_lattice(fs_), rd = certify_lattice(fd);
    if (!certified(rs) || !certified(rd)) {
        print(json{{"source", cert_json(rs, fs_)}, {"target", cert_json(rd, fd)}});
        return kCheckFailed;
    }
    const auto& ls = std::get<BoundedLattice>(rs);
    const auto& ld = std::get<BoundedLattice>(rd);

    json m;
    try {
        m = read_map(map_spec);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("map is not valid JSON: ") + e.what());
    }
    if (!m.is_object()) throw InputError("map must be a JSON object {source: target}");
    std::vector<Index> assignment(static_cast<std::size_t>(ls.size()), -1);
    for (const auto& [k, v] : m.items()) {
        if (!v.is_string()) throw InputError("map values must be labels");
        assignment[static_cast<std::size_t>(fs_.index_of(k))] = fd.index_of(v.get<std::string>());
    }
    for (Index x = 0; x < ls.size(); ++x) {
        if (assignment[static_cast<std::size_t>(x)] < 0) {
            throw InputError("map does not assign '" + ls.label(x) + "'");
        }
    }
    const LatticeMap f(ls, ld, assignment);
    const auto mono = is_monotone(f);
    const auto hom = is_bounded_homomorphism(f);
    print(json{{"monotone", io::report_json(mono, &fs_)},
               {"bounded_homomorphism", io::report_json(hom, &fs_)}});
    return hom.holds() ? kOk : kCheckFailed;
}

int cmd_witness(const std::string& file) {
    const auto frame = io::load(file);
    const auto w = witness_intransitivity(frame);
    if (!w) {
        print(json{{"transitive", true}});
        return kOk;
    }
    const IndexTuple t(w->begin(), w->end());
    print(json{{"transitive", false}, {"witness", labels_json(frame, t)}, {"indices", t}});
    return kCheckFailed;
}

int cmd_verify(const std::string& claim_name, verify::Config cfg,
               const std::vector<std::string>& tnorms, const std::string& bundle_dir) {
    verify::Claim claim;
    try {
        claim = verify::parse_claim(claim_name);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    cfg.tnorms = split_list(tnorms);
    const auto r = verify::run(claim, cfg);
    auto j = verify::summary_json(r);
    if (!r.failures.empty()) {
        const fs::path dir =
            bundle_dir.empty() ? fs::temp_directory_path() / "fuzzylat-bundles" : fs::path(bundle_dir);
        fs::create_directories(dir);
        auto paths = json::array();
        for (const auto& b : r.failures) {
            const auto path = dir / (std::string(verify::to_string(b.claim)) + "-trial" +
                                     std::to_string(b.trial) + "-" + b.tnorm + b.family + ".json");
            io::write_file(path, verify::to_json(b).dump(2) + "\n");
            paths.push_back(path.string());
        }
        j["bundles"] = std::move(paths);
    }
    print(j);
    return r.passed() ? kOk : kCheckFailed;
}

int cmd_replay(const std::string& file) {
    const auto b = verify::bundle_from_json(json::parse(io::read_file(file)));
    const auto o = verify::evaluate(b);
    const bool same = o.violated && o.detail == b.detail && o.witness == b.witness;
    print(json{{"claim", verify::to_string(b.claim)},
               {"violated", o.violated},
               {"detail", o.detail},
               {"witness", o.witness},
               {"reproduces", same}});
    return o.violated ? kCheckFailed : kOk;
}

GenConfig gen_config_from_json(const json& j) {
    GenConfig cfg;
    cfg.seed = j.value("seed", cfg.seed);
    cfg.min_size = j.value("min_size", cfg.min_size);
    cfg.max_size = j.value("max_size", cfg.max_size);
    if (j.contains("size")) cfg.min_size = cfg.max_size = j["size"].get<Index>();
    cfg.grade_min = j.value("grade_min", cfg.grade_min);
    cfg.grade_max = j.value("grade_max", cfg.grade_max);
    cfg.shuffle = j.value("shuffle", cfg.shuffle);
    if (j.contains("kinds")) {
        cfg.weights.clear();
        for (const auto& k : j["kinds"]) cfg.weights[skeleton_kind(k.get<std::string>())] = 1;
    }
    if (j.contains("weights")) {
        cfg.weights.clear();
        for (const auto& [k, w] : j["weights"].items()) cfg.weights[skeleton_kind(k)] = w.get<double>();
    }
    return cfg;
}

int cmd_gen(const std::string& config, const std::string& out, std::optional<std::uint64_t> seed,
            bool poset, const std::string& format) {
    json j = json::object();
    if (!config.empty()) {
        try {
            j = read_map(config);
        } catch (const json::parse_error& e) {
            throw InputError(std::string("config is not valid JSON: ") + e.what());
        }
    }
    auto cfg = gen_config_from_json(j);
    if (seed) cfg.seed = *seed;
    poset = poset || j.value("structure", std::string("lattice")) == "poset";
    const Frame frame = poset ? gen_fuzzy_poset(cfg) : gen_bounded_fuzzy_lattice(cfg).frame();
    io::Metadata meta{poset ? "generated poset" : "generated lattice",
                      "seed " + std::to_string(cfg.seed), ""};
    if (out.empty()) {
        std::cout << io::emit(frame, format.empty() ? io::Format::Json : io::parse_format(format),
                              meta);
    } else {
        io::save(frame, out, format_opt(format), meta);
    }
    return kOk;
}

int cmd_compare(const std::string& a, const std::string& b, double tol) {
    const auto fa = io::load(a), fb = io::load(b);
    const auto r = io::compare(fa, fb, tol);
    auto j = io::report_json(r, &fa);
    if (const auto* g = r.find("grades"); g && !g->holds()) {
        const auto& cell = g->witnesses.front().elements;
        j["first_difference"] = json{{"row", fa.label(cell[0])},
                                     {"col", fa.label(cell[1])},
                                     {"a", fa(cell[0], cell[1])},
                                     {"b", fb(cell[0], cell[1])}};
    }
    print(j);
    return r.passed() ? kOk : kCheckFailed;
}

int cmd_tnorm(const std::string& name, double step, int max_n) {
    const auto t = builtin(name);
    const auto r = conformance(t, step);
    json j{{"tnorm", t.name},
           {"status", to_string(t.status)},
           {"step", step},
           {"conformance", io::report_json(r)}};
    if (auto zd = find_zero_divisor(t, step)) j["zero_divisor"] = json{{"a", zd->a}, {"b", zd->b}};
    else j["zero_divisor"] = nullptr;
    if (auto nil = find_nilpotent(t, step, max_n)) j["nilpotent"] = json{{"a", nil->a}, {"n", nil->n}};
    else j["nilpotent"] = nullptr;
    print(j);
    return r.passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite fuzzy posets, fuzzy lattices and their t-norm products"};
    app.require_subcommand(1);
    std::function<int()> action;

    std::string file, file2, format, out, sep, tnorm = "minimum", a, b, map_spec, config;
    std::vector<std::string> files, tnorms;
    bool certify = false, poset = false;
    double tol = 1e-9, step = 0.05;
    int max_n = 64;
    std::optional<std::uint64_t> seed;

    auto* check = app.add_subcommand("check", "axioms and lattice certification of a matrix");
    check->add_option("file", file)->required();
    check->add_option("--format", format, "json or csv (default: by extension)");
    check->callback([&] { action = [&] { return cmd_check(file, format); }; });

    auto* product = app.add_subcommand("product", "direct product realized by a t-norm");
    product->add_option("files", files)->required()->expected(1, -1);
    product->add_option("--tnorm", tnorm)->check(CLI::IsMember(builtin_names()));
    product->add_option("--sep", sep, "label separator (default: none)");
    product->add_option("-o,--output", out);
    product->add_option("--format", format);
    product->add_flag("--certify", certify, "certify and compare with coordinatewise structure");
    product->callback(
        [&] { action = [&] { return cmd_product(files, tnorm, sep, out, format, certify); }; });

    for (const bool is_meet : {true, false}) {
        auto* sub = app.add_subcommand(is_meet ? "meet" : "join",
                                       is_meet ? "fuzzy meet of two elements"
                                               : "fuzzy join of two elements");
        sub->add_option("file", file)->required();
        sub->add_option("a", a)->required();
        sub->add_option("b", b)->required();
        sub->callback([&, is_meet] { action = [&, is_meet] { return cmd_bound(file, a, b, is_meet); }; });
    }

    auto* hom = app.add_subcommand("hom", "check a map between two lattices");
    hom->add_option("source", file)->required();
    hom->add_option("target", file2)->required();
    hom->add_option("--map", map_spec, "JSON object {source: target}, inline or a file")->required();
    hom->callback([&] { action = [&] { return cmd_hom(file, file2, map_spec); }; });

    auto* witness = app.add_subcommand("witness-intransitivity", "find a transitivity violation");
    witness->add_option("file", file)->required();
    witness->callback([&] { action = [&] { return cmd_witness(file); }; });

    verify::Config vcfg;
    std::string claim, bundle_dir;
    auto* ver = app.add_subcommand("verify", "seeded property run");
    ver->add_option("--theorem,--claim", claim, "claim id")
        ->required()
        ->check(CLI::IsMember(verify::claim_names()));
    ver->add_option("--trials", vcfg.trials)->capture_default_str();
    ver->add_option("--seed", vcfg.seed)->capture_default_str();
    ver->add_option("--tnorm", tnorms, "comma-separated t-norm names");
    ver->add_option("--min-size", vcfg.min_size)->capture_default_str();
    ver->add_option("--max-size", vcfg.max_size)->capture_default_str();
    ver->add_option("--min-factors", vcfg.min_factors)->capture_default_str();
    ver->add_option("--max-factors", vcfg.max_factors)->capture_default_str();
    ver->add_option("--grid-step", vcfg.grid_step)->capture_default_str();
    ver->add_option("--bundle-dir", bundle_dir, "where failure bundles are written");
    ver->callback([&] { action = [&] { return cmd_verify(claim, vcfg, tnorms, bundle_dir); }; });

    auto* replay = app.add_subcommand("replay", "re-evaluate a failure bundle");
    replay->add_option("bundle", file)->required();
    replay->callback([&] { action = [&] { return cmd_replay(file); }; });

    auto* gen = app.add_subcommand("gen", "generate a fuzzified lattice or poset");
    gen->add_option("--config", config, "JSON config, inline or a file");
    gen->add_option("-o,--output", out);
    gen->add_option("--seed", seed);
    gen->add_flag("--poset", poset, "allow non-lattice skeletons");
    gen->add_option("--format", format);
    gen->callback([&] { action = [&] { return cmd_gen(config, out, seed, poset, format); }; });

    auto* cmp = app.add_subcommand("compare", "entrywise comparison of two matrices");
    cmp->add_option("a", file)->required();
    cmp->add_option("b", file2)->required();
    cmp->add_option("--tol", tol)->capture_default_str();
    cmp->callback([&] { action = [&] { return cmd_compare(file, file2, tol); }; });

    auto* tn = app.add_subcommand("tnorm", "grid conformance and zero-divisor scan");
    tn->add_option("name", tnorm)->required()->check(CLI::IsMember(builtin_names()));
    tn->add_option("--step", step)->capture_default_str();
    tn->add_option("--max-n", max_n)->capture_default_str();
    tn->callback([&] { action = [&] { return cmd_tnorm(tnorm, step, max_n); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        return action();
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
    }
    return kInputError;
}
