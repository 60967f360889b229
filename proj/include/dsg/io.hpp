#pragma once

#include "dsg/distance.hpp"
#include "dsg/gluing.hpp"
#include "dsg/sfs.hpp"
#include "dsg/surgery.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>

namespace dsg {

using Json = nlohmann::json;

namespace detail {

inline Json parse_json(const std::string& text, const std::string& what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw input_error(what + ": " + e.what());
    }
}

inline long long require_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw input_error(where + ": expected an integer, got " + j.dump());
    return j.get<long long>();
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---- surgery descriptions --------------------------------------------------
// {"components": n, "linking": [[int,...],...], "slopes": [[p,q],...]}

inline SurgeryDescription surgery_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("components") || !j.contains("linking") ||
        !j.contains("slopes"))
        throw input_error("surgery description needs 'components', 'linking' and 'slopes'");
    long long n = detail::require_int(j.at("components"), "components");
    if (n < 0) throw input_error("components must be >= 0");
    const Json& lk = j.at("linking");
    const Json& sl = j.at("slopes");
    if (!lk.is_array() || static_cast<long long>(lk.size()) != n)
        throw input_error("linking must be an n x n array");
    if (!sl.is_array() || static_cast<long long>(sl.size()) != n)
        throw input_error("slopes must list one [p,q] pair per component");
    IntMatrix m(n, n);
    for (long long i = 0; i < n; ++i) {
        const Json& row = lk.at(i);
        if (!row.is_array() || static_cast<long long>(row.size()) != n)
            throw input_error("linking row " + std::to_string(i) + " must have length " +
                              std::to_string(n));
        for (long long k = 0; k < n; ++k)
            m(i, k) = detail::require_int(row.at(k), "linking entry");
    }
    std::vector<RationalSlope> slopes;
    for (long long i = 0; i < n; ++i) {
        const Json& pair = sl.at(i);
        if (!pair.is_array() || pair.size() != 2)
            throw input_error("slope " + std::to_string(i) + " must be a [p,q] pair");
        try {
            slopes.emplace_back(Int(detail::require_int(pair.at(0), "slope numerator")),
                                Int(detail::require_int(pair.at(1), "slope denominator")));
        } catch (const domain_error& e) {
            throw input_error("slope " + std::to_string(i) + ": " + e.what());
        }
    }
    try {
        return SurgeryDescription(std::move(m), std::move(slopes));
    } catch (const domain_error& e) {
        throw input_error(e.what());
    }
}

inline Json surgery_to_json(const SurgeryDescription& d) {
    Json j;
    j["components"] = d.components();
    Json lk = Json::array();
    for (std::size_t i = 0; i < d.components(); ++i) {
        Json row = Json::array();
        for (std::size_t k = 0; k < d.components(); ++k) row.push_back(to_ll(d.linking(i, k)));
        lk.push_back(row);
    }
    j["linking"] = lk;
    Json sl = Json::array();
    for (const RationalSlope& s : d.slopes) sl.push_back({to_ll(s.p), to_ll(s.q)});
    j["slopes"] = sl;
    return j;
}

inline SurgeryDescription load_surgery(const std::string& path) {
    return surgery_from_json(detail::parse_json(read_file(path), path));
}

// ---- Seifert data -----------------------------------------------------------
// {"base": {"orientable": bool, "genus": int}, "fibers": [[a,b],...]}

inline SeifertData sfs_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("base") || !j.contains("fibers"))
        throw input_error("Seifert data needs 'base' and 'fibers'");
    const Json& base = j.at("base");
    if (!base.is_object() || !base.contains("orientable") || !base.contains("genus"))
        throw input_error("base needs 'orientable' and 'genus'");
    if (!base.at("orientable").is_boolean())
        throw input_error("base.orientable must be a boolean");
    BaseSurface bs;
    try {
        bs = BaseSurface(base.at("orientable").get<bool>(),
                         detail::require_int(base.at("genus"), "base.genus"));
    } catch (const domain_error& e) {
        throw input_error(e.what());
    }
    const Json& fibers = j.at("fibers");
    if (!fibers.is_array()) throw input_error("fibers must be an array of [a,b] pairs");
    std::vector<Rational> fs;
    for (const Json& f : fibers) {
        if (!f.is_array() || f.size() != 2)
            throw input_error("each fiber must be an [a,b] pair");
        long long a = detail::require_int(f.at(0), "fiber numerator");
        long long b = detail::require_int(f.at(1), "fiber denominator");
        if (b < 1) throw input_error("fiber denominator must be >= 1");
        fs.emplace_back(Int(a), Int(b));
    }
    return SeifertData(bs, std::move(fs));
}

inline Json sfs_to_json(const SeifertData& s) {
    Json j;
    j["base"] = {{"orientable", s.base.orientable}, {"genus", s.base.genus}};
    Json fibers = Json::array();
    for (const Rational& f : s.fibers) fibers.push_back({to_ll(f.num), to_ll(f.den)});
    j["fibers"] = fibers;
    return j;
}

inline SeifertData load_sfs(const std::string& path) {
    return sfs_from_json(detail::parse_json(read_file(path), path));
}

// ---- gluing systems and shapes ----------------------------------------------
// {"rows": [[a1,b1,...,a_t,b_t,c],...]} and {"shapes": [[re,im],...]}

inline GluingSystem gluing_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array())
        throw input_error("gluing system needs a 'rows' array");
    const Json& rows = j.at("rows");
    std::vector<std::vector<long long>> data;
    std::size_t width = 0;
    for (const Json& row : rows) {
        if (!row.is_array()) throw input_error("each gluing row must be an array");
        if (data.empty()) {
            width = row.size();
            if (width % 2 != 1 || width < 1)
                throw input_error("gluing rows must have odd width 2t+1");
        } else if (row.size() != width) {
            throw input_error("gluing rows must all have the same width");
        }
        std::vector<long long> r;
        for (const Json& e : row) r.push_back(detail::require_int(e, "gluing coefficient"));
        data.push_back(std::move(r));
    }
    std::size_t t = data.empty() ? 0 : (width - 1) / 2;
    return GluingSystem(t, std::move(data));
}

inline Json gluing_to_json(const GluingSystem& sys) {
    Json rows = Json::array();
    for (const auto& r : sys.rows) rows.push_back(r);
    return Json{{"rows", rows}};
}

inline ShapeVector shapes_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("shapes") || !j.at("shapes").is_array())
        throw input_error("shape file needs a 'shapes' array");
    std::vector<Complex> z;
    for (const Json& pair : j.at("shapes")) {
        if (!pair.is_array() || pair.size() != 2 || !pair.at(0).is_number() ||
            !pair.at(1).is_number())
            throw input_error("each shape must be a [re,im] number pair");
        z.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    }
    return ShapeVector(std::move(z));
}

inline Json shapes_to_json(const ShapeVector& z) {
    Json shapes = Json::array();
    for (const Complex& s : z.z) shapes.push_back({s.real(), s.imag()});
    return Json{{"shapes", shapes}};
}

inline GluingSystem load_gluing(const std::string& path) {
    return gluing_from_json(detail::parse_json(read_file(path), path));
}

inline ShapeVector load_shapes(const std::string& path) {
    return shapes_from_json(detail::parse_json(read_file(path), path));
}

}  // namespace dsg
