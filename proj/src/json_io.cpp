#include "overdet/json_io.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "overdet/errors.hpp"

namespace overdet {

namespace {

using nlohmann::json;

Int int_from_json(const json& v, const std::string& path) {
    if (v.is_number_integer()) return Int(v.get<long long>());
    if (v.is_string()) {
        try {
            return Int(v.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("not an integer", path);
        }
    }
    throw ParseError("expected an integer (number or decimal string)", path);
}

json int_to_json(const Int& x) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (x >= lo && x <= hi) return x.convert_to<std::int64_t>();
    return x.str();  // too large for a JSON number: decimal string
}

json vec_to_json(const IntVec& v) {
    json out = json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

json subset_to_json(const Subset& s) {
    json out = json::array();
    for (std::size_t m : s.members_1based()) out.push_back(m);
    return out;
}

json support_to_json(const SupportSet& s) {
    json out = json::array();
    for (const IntVec& p : s.points) out.push_back(vec_to_json(p));
    return out;
}

json laurent_to_json(const LaurentPoly& f) {
    json terms = json::array();
    for (const auto& [exp, coeff] : f.terms) {
        terms.push_back(json{{"exponent", vec_to_json(exp)}, {"coefficient", rat_to_string(coeff)}});
    }
    return json{{"dim", f.dim}, {"terms", terms}};
}

}  // namespace

ParsedCollection parse_collection(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), "");
    }
    if (!doc.is_object()) throw ParseError("document must be a JSON object", "");
    if (!doc.contains("n")) throw ParseError("missing field", "n");
    if (!doc["n"].is_number_integer() || doc["n"].get<long long>() < 1)
        throw ParseError("ambient dimension must be a positive integer", "n");
    const std::size_t n = doc["n"].get<std::size_t>();
    if (!doc.contains("supports") || !doc["supports"].is_array() || doc["supports"].empty())
        throw ParseError("supports must be a nonempty array", "supports");

    ParsedCollection out;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("name must be a string", "name");
        out.name = doc["name"].get<std::string>();
    }

    std::vector<SupportSet> supports;
    for (std::size_t i = 0; i < doc["supports"].size(); ++i) {
        const json& sup = doc["supports"][i];
        const std::string spath = "supports[" + std::to_string(i) + "]";
        if (!sup.is_array() || sup.empty())
            throw ParseError("support must be a nonempty array of points", spath);
        std::vector<IntVec> points;
        for (std::size_t j = 0; j < sup.size(); ++j) {
            const json& pt = sup[j];
            const std::string ppath = spath + "[" + std::to_string(j) + "]";
            if (!pt.is_array()) throw ParseError("point must be an array", ppath);
            if (pt.size() != n)
                throw ParseError("point has " + std::to_string(pt.size()) +
                                     " coordinates, expected " + std::to_string(n),
                                 ppath);
            IntVec v;
            for (std::size_t t = 0; t < pt.size(); ++t)
                v.push_back(int_from_json(pt[t], ppath + "[" + std::to_string(t) + "]"));
            points.push_back(std::move(v));
        }
        const std::size_t before = points.size();
        SupportSet s = make_support(n, std::move(points));
        if (s.points.size() != before)
            out.warnings.push_back("duplicate points dropped in " + spath);
        supports.push_back(std::move(s));
    }
    out.collection = make_collection(n, std::move(supports));
    return out;
}

nlohmann::json collection_to_json(const Collection& c, const std::string& name) {
    json supports = json::array();
    for (const SupportSet& s : c.supports) supports.push_back(support_to_json(s));
    json out{{"n", c.n}, {"supports", supports}};
    if (!name.empty()) out["name"] = name;
    return out;
}

nlohmann::json analysis_to_json(const AnalysisReport& r) {
    return json{{"minimal_defect", r.minimal_defect},
                {"essential", subset_to_json(r.essential)},
                {"codimension", r.codimension},
                {"generically_consistent", r.generically_consistent}};
}

nlohmann::json reduction_to_json(const Reduction& r) {
    json rows = json::array();
    for (std::size_t i = 0; i < r.quotient.matrix.rows(); ++i)
        rows.push_back(vec_to_json(r.quotient.matrix.row(i)));
    json residual = json::array();
    for (const SupportSet& s : r.residual_supports) residual.push_back(support_to_json(s));
    return json{{"essential", subset_to_json(r.essential)},
                {"index", int_to_json(r.index)},
                {"fiber_dim", r.fiber_dim},
                {"quotient_dim", r.quotient.quotient_dim()},
                {"projection", rows},
                {"residual_supports", residual}};
}

nlohmann::json count_to_json(const CountReport& r) {
    return json{{"predicted_count", int_to_json(r.predicted_count)},
                {"factorial_factor", int_to_json(r.factorial_factor)},
                {"index_factor", int_to_json(r.index_factor)},
                {"mixed_volume_standard", rat_to_string(r.mixed_volume_standard)},
                {"mixed_volume_normalized", int_to_json(r.mixed_volume_factor)},
                {"zero_set_dim", r.zero_set_dim}};
}

nlohmann::json degrees_to_json(const ResultantDegrees& r) {
    json degrees = json::array();
    for (const Int& d : r.degrees) degrees.push_back(int_to_json(d));
    return json{{"degrees", degrees}};
}

nlohmann::json mixed_volume_to_json(const MixedVolumeResult& r) {
    return json{{"standard", rat_to_string(r.standard)},
                {"normalized", int_to_json(r.normalized)}};
}

nlohmann::json sample_to_json(const ConsistentSample& s) {
    json system = json::array();
    for (const LaurentPoly& f : s.system) system.push_back(laurent_to_json(f));
    json witness = json::array();
    for (const Rat& w : s.witness) witness.push_back(rat_to_string(w));
    return json{{"system", system}, {"witness", witness}, {"seed", s.seed}};
}

nlohmann::json verification_to_json(const VerificationReport& r) {
    json trials = json::array();
    for (const auto& [seed, count] : r.trials)
        trials.push_back(json{{"seed", seed}, {"oracle_count", count}});
    return json{{"predicted", int_to_json(r.predicted)},
                {"trials", trials},
                {"agreement_fraction", rat_to_string(r.agreement_fraction)},
                {"genericity", "sample genericity is a measure-one assertion, not certified"}};
}

std::string input_digest(const nlohmann::json& canonical_input) {
    // FNV-1a over the canonical serialization.
    const std::string s = canonical_input.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

nlohmann::json report_document(const std::string& command, const nlohmann::json& input_echo,
                               nlohmann::json result) {
    return json{{"version", kVersion},
                {"command", command},
                {"input_digest", input_digest(input_echo)},
                {"result", std::move(result)}};
}

}  // namespace overdet
