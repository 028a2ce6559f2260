#pragma once

// Job specifications, the command dispatcher behind the CLI, and a
// content-addressed result cache. A job is normalized (inputs parsed and
// re-serialized canonically) before hashing, so textual variants of the same
// computation share one cache entry; the engine version and every budget
// value participate in the key, so upgrades and budget changes never replay
// stale results. Cache writes go through a temporary file plus rename and are
// atomic on POSIX filesystems.

#include <openssl/evp.h>
#include <unistd.h>

#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "json_io.hpp"
#include "parser.hpp"
#include "pipeline.hpp"
#include "version.hpp"

namespace bsideal {

struct JobSpec {
    std::string command;             // bfun, ann, tuple, verify, oracle-bfun, exp-locus, zeta
    std::vector<std::string> polys;  // tuple entries (one entry for bfun)
    std::vector<unsigned> m;         // shift multi-index; empty means all ones
    std::string bpoly;               // verify: the b-polynomial to certify
    std::string resolution;          // zeta: resolution data as JSON text
    Budget budget;
    AnsatzBounds bounds;
    bool cache_enabled = true;
    std::string output_path;         // empty = stdout; never part of the cache key
};

// --- signature inference -------------------------------------------------

namespace detail {

inline bool numbered_x_name(const std::string& name, long& index) {
    if (name.size() < 2 || name[0] != 'x') return false;
    for (std::size_t i = 1; i < name.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(name[i]))) return false;
    index = std::stol(name.substr(1));
    return true;
}

}  // namespace detail

// Variable names seen across the input strings, in canonical order. Accepted
// names are the letters x, y, z or the numbered family x1..xn; the two
// families do not mix. Falls back to {"x"} when no identifier occurs, so that
// constant inputs reach the tuple constructor and fail with its message.
inline std::vector<std::string> infer_x_names(const std::vector<std::string>& polys) {
    std::vector<std::string> seen;
    for (auto& src : polys)
        for (auto& name : collect_identifiers(src)) {
            bool dup = false;
            for (auto& s : seen) dup = dup || s == name;
            if (!dup) seen.push_back(name);
        }
    if (seen.empty()) return {"x"};
    bool letters = true, numbered = true;
    for (auto& name : seen) {
        long idx;
        letters = letters && (name == "x" || name == "y" || name == "z");
        numbered = numbered && detail::numbered_x_name(name, idx);
    }
    if (letters) {
        std::vector<std::string> out;
        for (const char* name : {"x", "y", "z"})
            for (auto& s : seen)
                if (s == name) out.push_back(name);
        return out;
    }
    if (numbered) {
        std::sort(seen.begin(), seen.end(), [](const std::string& a, const std::string& b) {
            long ia, ib;
            detail::numbered_x_name(a, ia);
            detail::numbered_x_name(b, ib);
            return ia < ib;
        });
        return seen;
    }
    std::string joined;
    for (auto& s : seen) joined += (joined.empty() ? "" : ", ") + s;
    throw InputError("variables must all be named x, y, z or all x1..xn; got: " + joined);
}

inline InputTuple parse_tuple(const std::vector<std::string>& polys) {
    if (polys.empty()) throw InputError("no input polynomials given");
    Signature sig(infer_x_names(polys), static_cast<int>(polys.size()));
    std::vector<MultiPoly> fs;
    for (auto& src : polys) fs.push_back(parse_poly(src, sig));
    return InputTuple(std::move(sig), std::move(fs));
}

// --- normalization and hashing -------------------------------------------

inline std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("sha256 digest failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    out.reserve(2 * len);
    for (unsigned i = 0; i < len; ++i) {
        out += hex[md[i] >> 4];
        out += hex[md[i] & 15];
    }
    return out;
}

namespace detail {

inline MultiIndex effective_m(const JobSpec& spec, int r) {
    if (spec.m.empty()) return MultiIndex(static_cast<std::size_t>(r), 1u);
    MultiIndex m(spec.m.begin(), spec.m.end());
    if (static_cast<int>(m.size()) != r)
        throw InputError("multi-index length does not match the tuple");
    return m;
}

inline std::string resolution_canonical(const std::string& text) {
    ResolutionData R = resolution_from_text(text);
    Json divisors = Json::array();
    for (auto& d : R.divisors()) {
        Json N = Json::array();
        for (auto& nij : d.N) N.push_back(integer_json(nij));
        divisors.push_back(Json{{"N", std::move(N)},
                                {"nu", integer_json(d.nu)},
                                {"label", d.label}});
    }
    return Json{{"r", R.r()}, {"divisors", std::move(divisors)}, {"label", R.label()}}.dump();
}

}  // namespace detail

// Canonical text of a job: what the cache key hashes. Parses every input, so
// malformed jobs fail here and are never cached.
inline std::string normalized_job_text(const JobSpec& spec) {
    std::ostringstream out;
    out << "engine=" << kEngineVersion << "\n";
    out << "command=" << spec.command << "\n";
    if (spec.command == "suite") {
        // The suite has no free inputs beyond the budgets.
    } else {
        InputTuple F = parse_tuple(spec.polys);
        for (auto& f : F.fs()) out << "F=" << f.str() << "\n";
        if (spec.command != "ann" && spec.command != "bfun" &&
            spec.command != "oracle-bfun") {
            for (auto mi : detail::effective_m(spec, F.r())) out << "m=" << mi << "\n";
        }
        if (spec.command == "verify")
            out << "b=" << parse_spoly(spec.bpoly, F.signature()).str() << "\n";
        if (spec.command == "zeta")
            out << "resolution=" << detail::resolution_canonical(spec.resolution) << "\n";
    }
    out << "budget=" << spec.budget.max_pairs << "," << spec.budget.max_op_degree << ","
        << spec.budget.max_s_degree << "\n";
    out << "bounds=" << spec.bounds.order << "," << spec.bounds.xdeg << ","
        << spec.bounds.sdeg << "\n";
    return out.str();
}

// --- result cache ---------------------------------------------------------

class ResultCache {
public:
    explicit ResultCache(std::string dir) : dir_(std::move(dir)) {}

    // $BSIDEAL_CACHE_DIR when set, else ./.bsideal-cache
    static std::string default_dir() {
        if (const char* env = std::getenv("BSIDEAL_CACHE_DIR"))
            if (*env) return env;
        return ".bsideal-cache";
    }

    std::optional<std::string> get(const std::string& key) const {
        std::ifstream in(path_for(key), std::ios::binary);
        if (!in) return std::nullopt;
        std::ostringstream buf;
        buf << in.rdbuf();
        std::string bytes = buf.str();
        Json doc = Json::parse(bytes, nullptr, /*allow_exceptions=*/false);
        if (doc.is_discarded() || !doc.is_object()) {
            std::cerr << "warning: corrupt cache entry " << path_for(key)
                      << ", recomputing\n";
            return std::nullopt;
        }
        return bytes;
    }

    // Atomic: writes a sibling temp file, then renames over the target.
    // Cache trouble is never fatal to the computation itself.
    void put(const std::string& key, const std::string& bytes) const {
        namespace fs = std::filesystem;
        try {
            fs::create_directories(dir_);
            fs::path tmp = fs::path(dir_) / (key + ".tmp" + std::to_string(::getpid()));
            {
                std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
                out << bytes;
                if (!out) throw std::runtime_error("short write");
            }
            fs::rename(tmp, path_for(key));
        } catch (const std::exception& e) {
            std::cerr << "warning: could not write cache entry: " << e.what() << "\n";
        }
    }

private:
    std::string path_for(const std::string& key) const {
        return (std::filesystem::path(dir_) / (key + ".json")).string();
    }

    std::string dir_;
};

// --- the dispatcher -------------------------------------------------------

namespace detail {

inline Json tuple_input_json(const JobSpec& spec, const InputTuple& F, const MultiIndex* m) {
    Json in{{"command", spec.command}};
    if (spec.command == "bfun" || spec.command == "oracle-bfun") {
        in["f"] = F.f(0).str();
    } else {
        Json fs = Json::array();
        for (auto& f : F.fs()) fs.push_back(f.str());
        in["F"] = std::move(fs);
    }
    if (m) {
        Json mj = Json::array();
        for (auto mi : *m) mj.push_back(mi);
        in["m"] = std::move(mj);
    }
    return in;
}

inline Json generators_json(const BSIdeal& B) {
    Json out = Json::array();
    for (auto& g : B.generators) out.push_back(factored_str(g));
    return out;
}

}  // namespace detail

// Executes one job and returns the result document (without timestamp).
// Deterministic for fixed inputs and budgets.
inline Json run_job(const JobSpec& spec) {
    Json doc;
    if (spec.command == "bfun" || spec.command == "oracle-bfun") {
        if (spec.polys.size() != 1)
            throw InputError("this command takes exactly one polynomial");
        InputTuple F = parse_tuple(spec.polys);
        doc["input"] = detail::tuple_input_json(spec, F, nullptr);
        std::optional<MultiPoly> b;
        Json reports;
        if (spec.command == "bfun") {
            b = bfunction(F.f(0), spec.budget);
            reports["method"] = "annihilator elimination";
        } else {
            b = oracle_bfunction(F.f(0), spec.bounds);
            reports["method"] = "linear-algebra oracle";
            if (!b) reports["note"] = "no b-polynomial within the configured bounds";
        }
        doc["generators"] = Json::array();
        if (b) {
            doc["generators"].push_back(factored_str(*b));
            doc["roots"] = roots_json(*b);
            auto roots = univariate_rational_roots(*b);
            if (!roots.empty()) {
                Rational max_root = roots.front().first;
                for (auto& [root, mult] : roots)
                    if (max_root < root) max_root = root;
                reports["lct"] = rational_json(-max_root);
            }
        }
        doc["reports"] = std::move(reports);
    } else if (spec.command == "ann") {
        InputTuple F = parse_tuple(spec.polys);
        doc["input"] = detail::tuple_input_json(spec, F, nullptr);
        Json gens = Json::array();
        for (auto& op : annihilator_fs(F, spec.budget)) gens.push_back(op.str());
        doc["generators"] = std::move(gens);
    } else if (spec.command == "tuple" || spec.command == "exp-locus") {
        InputTuple F = parse_tuple(spec.polys);
        MultiIndex m = detail::effective_m(spec, F.r());
        doc["input"] = detail::tuple_input_json(spec, F, &m);
        BSIdeal B = bs_ideal(F, m, spec.budget);
        doc["generators"] = detail::generators_json(B);
        if (spec.command == "exp-locus") {
            SupportLocus locus = exp_locus(B);  // throws if anything is unresolved
            doc["components"] = components_json(locus_components(B).components);
            doc["exp_locus"] = locus_json(locus);
        } else {
            StructureReport rep = check_structure(B, m);
            doc["components"] = components_json(rep.locus.components);
            if (rep.locus.unresolved.empty())
                doc["exp_locus"] = locus_json(exp_locus(B));
            doc["reports"] = Json{{"structure", structure_json(rep)}};
        }
    } else if (spec.command == "verify") {
        InputTuple F = parse_tuple(spec.polys);
        MultiIndex m = detail::effective_m(spec, F.r());
        if (spec.bpoly.empty()) throw InputError("verify needs a b-polynomial (-b)");
        MultiPoly b = parse_spoly(spec.bpoly, F.signature());
        Json in = detail::tuple_input_json(spec, F, &m);
        in["b"] = b.str();
        doc["input"] = std::move(in);
        std::optional<WeylElement> witness = find_witness(b, F, m, spec.bounds);
        Json reports{{"verified", witness.has_value()}};
        reports["witness"] = witness ? Json(witness->str()) : Json(nullptr);
        if (!witness)
            reports["note"] = "no operator within the configured bounds certifies b";
        doc["reports"] = std::move(reports);
    } else if (spec.command == "zeta") {
        if (spec.resolution.empty())
            throw InputError("zeta needs resolution data (--resolution)");
        InputTuple F = parse_tuple(spec.polys);
        MultiIndex m = detail::effective_m(spec, F.r());
        ResolutionData R = resolution_from_text(spec.resolution);
        Json in = detail::tuple_input_json(spec, F, &m);
        in["resolution"] = Json::parse(detail::resolution_canonical(spec.resolution));
        doc["input"] = std::move(in);
        BSIdeal B = bs_ideal(F, m, spec.budget);
        ConjectureReport rep = conjecture_check(R, B);
        doc["generators"] = detail::generators_json(B);
        doc["components"] = components_json(rep.candidates);
        doc["reports"] = Json{{"zeta", conjecture_json(rep)}};
    } else {
        throw InputError("unknown command: " + spec.command);
    }
    doc["budget"] = budget_json(spec.budget, spec.bounds);
    doc["engine_version"] = kEngineVersion;
    return doc;
}

inline std::string iso8601_now() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

struct JobResult {
    std::string bytes;  // the JSON document, pretty-printed, newline-terminated
    bool from_cache = false;
    std::string key;
};

// Cache-aware wrapper around run_job. Replays are byte-identical (including
// the stored timestamp); fresh runs differ from each other only in the
// timestamp field.
inline JobResult run_job_cached(const JobSpec& spec) {
    std::string key = sha256_hex(normalized_job_text(spec));
    ResultCache cache(ResultCache::default_dir());
    if (spec.cache_enabled)
        if (auto hit = cache.get(key)) return {*hit, true, key};
    Json doc = run_job(spec);
    doc["timestamp"] = iso8601_now();
    std::string bytes = doc.dump(2);
    bytes += '\n';
    if (spec.cache_enabled) cache.put(key, bytes);
    return {std::move(bytes), false, key};
}

}  // namespace bsideal
