#include "enscoh/ensemble_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace enscoh {

namespace {

using nlohmann::json;

std::size_t read_dim(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer() || j[key].get<long long>() < 2) {
        throw Error(std::string("ensemble JSON: '") + key + "' must be an integer >= 2");
    }
    return j[key].get<std::size_t>();
}

Ket read_ket(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim) {
        throw Error("ensemble JSON: " + where + " must be an array of " + std::to_string(dim) + " amplitudes");
    }
    CVector v(static_cast<Eigen::Index>(dim));
    for (std::size_t i = 0; i < dim; ++i) {
        const json& a = j[i];
        if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
            throw Error("ensemble JSON: " + where + " amplitudes must be [re, im] pairs");
        }
        v[static_cast<Eigen::Index>(i)] = cplx(a[0].get<double>(), a[1].get<double>());
    }
    return Ket(v);
}

json write_ket(const Ket& k) {
    json out = json::array();
    for (Eigen::Index i = 0; i < k.amplitudes().size(); ++i) {
        out.push_back({k.amplitudes()[i].real(), k.amplitudes()[i].imag()});
    }
    return out;
}

}  // namespace

ProductEnsemble ensemble_from_json(const json& j) {
    if (!j.is_object()) throw Error("ensemble JSON: top level must be an object");
    const std::size_t d1 = read_dim(j, "d1");
    const std::size_t d2 = read_dim(j, "d2");
    if (!j.contains("states") || !j["states"].is_array()) throw Error("ensemble JSON: 'states' must be an array");
    std::vector<ProductState> states;
    for (std::size_t i = 0; i < j["states"].size(); ++i) {
        const json& s = j["states"][i];
        const std::string where = "states[" + std::to_string(i) + "]";
        if (!s.is_object() || !s.contains("alice") || !s.contains("bob")) {
            throw Error("ensemble JSON: " + where + " needs 'alice' and 'bob'");
        }
        states.push_back({read_ket(s["alice"], d1, where + ".alice"), read_ket(s["bob"], d2, where + ".bob")});
    }
    std::string label;
    if (j.contains("label")) {
        if (!j["label"].is_string()) throw Error("ensemble JSON: 'label' must be a string");
        label = j["label"].get<std::string>();
    }
    return ProductEnsemble(d1, d2, std::move(states), label);
}

json ensemble_to_json(const ProductEnsemble& e) {
    json states = json::array();
    for (const auto& s : e.states()) states.push_back({{"alice", write_ket(s.alice)}, {"bob", write_ket(s.bob)}});
    return {{"d1", e.d1()}, {"d2", e.d2()}, {"label", e.label()}, {"states", states}};
}

ProductEnsemble parse_ensemble(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw Error(std::string("ensemble JSON: ") + err.what());
    }
    return ensemble_from_json(j);
}

ProductEnsemble load_ensemble_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open ensemble file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_ensemble(buf.str());
}

ProductEnsemble resolve_ensemble(const std::string& name_or_path) {
    const auto names = ensemble_names();
    if (std::find(names.begin(), names.end(), name_or_path) != names.end()) return named_ensemble(name_or_path);
    if (std::filesystem::exists(name_or_path)) return load_ensemble_file(name_or_path);
    std::string known;
    for (const auto& n : names) known += (known.empty() ? "" : ", ") + n;
    throw Error("unknown ensemble '" + name_or_path + "' (not a file; known names: " + known + ")");
}

}  // namespace enscoh
