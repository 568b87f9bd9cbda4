#include "superschur/io.hpp"

#include <fstream>
#include <map>

namespace superschur {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::vector<std::string> string_list(const json& doc, const char* key) {
    std::vector<std::string> out;
    if (!doc.contains(key)) return out;
    const json& arr = doc.at(key);
    if (!arr.is_array()) throw ParseError(std::string("'") + key + "' must be an array of labels");
    for (const json& item : arr) {
        if (!item.is_string())
            throw ParseError(std::string("'") + key + "' must contain only strings");
        out.push_back(item.get<std::string>());
    }
    return out;
}

}  // namespace

GradedSubspace subspace_from_labels(const SuperAlgebra& a, const std::vector<std::string>& labels) {
    std::vector<Vec> rows;
    for (const std::string& label : labels) {
        auto idx = a.index_of(label);
        if (!idx) throw ParseError("unknown basis label '" + label + "'");
        rows.push_back(a.basis_vector(*idx));
    }
    return GradedSubspace::span(a.dims(), rows);
}

AlgebraFile parse_algebra_json(const json& doc) {
    if (!doc.is_object()) throw ParseError("algebra file must be a JSON object");
    AlgebraFile out;
    out.name = doc.value("name", std::string());

    std::vector<std::string> even = string_list(doc, "even");
    std::vector<std::string> odd = string_list(doc, "odd");
    std::map<std::string, int> index;
    {
        int i = 0;
        for (const std::string& l : even) {
            if (!index.emplace(l, i++).second) throw ParseError("duplicate label '" + l + "'");
        }
        for (const std::string& l : odd) {
            if (!index.emplace(l, i++).second) throw ParseError("duplicate label '" + l + "'");
        }
    }
    const int d = static_cast<int>(index.size());

    SuperAlgebra::Builder builder(even, odd);
    // canonical unordered slot -> 1-based entry number, for double-spec reports
    std::map<std::pair<int, int>, int> seen;
    int entry_no = 0;
    if (doc.contains("brackets")) {
        if (!doc.at("brackets").is_array()) throw ParseError("'brackets' must be an array");
        for (const json& entry : doc.at("brackets")) {
            ++entry_no;
            const std::string where = "brackets[" + std::to_string(entry_no) + "]";
            if (!entry.is_object() || !entry.contains("left") || !entry.contains("right") ||
                !entry.contains("value"))
                throw ParseError(where + ": expected {left, right, value}");
            const std::string left = entry.at("left").get<std::string>();
            const std::string right = entry.at("right").get<std::string>();
            auto li = index.find(left), ri = index.find(right);
            if (li == index.end()) throw ParseError(where + ": unknown label '" + left + "'");
            if (ri == index.end()) throw ParseError(where + ": unknown label '" + right + "'");

            Vec value(d);
            if (!entry.at("value").is_object())
                throw ParseError(where + ": 'value' must map labels to rational strings");
            for (const auto& [key, val] : entry.at("value").items()) {
                auto ki = index.find(key);
                if (ki == index.end()) throw ParseError(where + ": unknown label '" + key + "'");
                if (!val.is_string())
                    throw ParseError(where + ": rationals must be strings like \"-3/2\"");
                try {
                    value[ki->second] = Rat::parse(val.get<std::string>());
                } catch (const std::invalid_argument& err) {
                    throw ParseError(where + ": " + err.what());
                }
            }

            auto slot = std::minmax(li->second, ri->second);
            auto [it, fresh] = seen.emplace(std::pair{slot.first, slot.second}, entry_no);
            if (!fresh)
                throw ParseError("bracket [" + left + "," + right + "] at " + where +
                                 " already specified at brackets[" + std::to_string(it->second) +
                                 "]");
            try {
                builder.set_bracket(li->second, ri->second, std::move(value));
            } catch (const std::invalid_argument& err) {
                throw ParseError(where + ": " + err.what());
            }
        }
    }
    out.algebra = builder.build();

    if (doc.contains("ideal"))
        out.ideal = subspace_from_labels(out.algebra, string_list(doc, "ideal"));
    if (doc.contains("complement"))
        out.complement = subspace_from_labels(out.algebra, string_list(doc, "complement"));
    return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& err) {
        throw ParseError("'" + path + "': " + err.what());
    }
    return parse_algebra_json(doc);
}

ordered_json algebra_to_json(const SuperAlgebra& a, const std::string& name) {
    ordered_json doc;
    doc["name"] = name;
    doc["even"] = ordered_json::array();
    for (int i = 0; i < a.even_dim(); ++i) doc["even"].push_back(a.name(i));
    doc["odd"] = ordered_json::array();
    for (int i = a.even_dim(); i < a.dim(); ++i) doc["odd"].push_back(a.name(i));
    doc["brackets"] = ordered_json::array();
    for (int p = 0; p < a.dim(); ++p)
        for (int q = p; q < a.dim(); ++q) {
            const Vec& br = a.basis_bracket(p, q);
            if (vec_is_zero(br)) continue;
            ordered_json entry;
            entry["left"] = a.name(p);
            entry["right"] = a.name(q);
            ordered_json value;
            for (int k = 0; k < a.dim(); ++k)
                if (!br[k].is_zero()) value[a.name(k)] = br[k].str();
            entry["value"] = std::move(value);
            doc["brackets"].push_back(std::move(entry));
        }
    return doc;
}

void save_algebra_file(const SuperAlgebra& a, const std::string& name, const std::string& path) {
    std::ofstream outfile(path);
    if (!outfile) throw ParseError("cannot write '" + path + "'");
    outfile << algebra_to_json(a, name).dump(2) << "\n";
}

}  // namespace superschur
