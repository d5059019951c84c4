#include "fusionkit/ring_file.hpp"

#include "fusionkit/axioms.hpp"

#include <json.hpp>

#include <fstream>
#include <limits>
#include <sstream>

namespace fusionkit {

using nlohmann::json;

namespace {

[[noreturn]] void invalid(const std::string& what) { throw FusionError(ErrorKind::InvalidTable, what); }

int int_param(const json& params, const char* key, int fallback) {
    if (!params.contains(key)) {
        return fallback;
    }
    const auto& v = params.at(key);
    if (!v.is_number_integer()) {
        throw FusionError(ErrorKind::InvalidParam, std::string("parameter \"") + key + "\" must be an integer");
    }
    return v.get<int>();
}

Quantity parse_dim(const std::string& label, const json& v) {
    if (v.is_number_integer()) {
        return Quantity::exact(Integer(v.get<long long>()));
    }
    if (v.is_number_unsigned()) {
        return Quantity::exact(Integer(v.get<unsigned long long>()));
    }
    if (v.is_number_float()) {
        return Quantity::approximate(v.get<double>());
    }
    if (v.is_string()) {
        try {
            return Quantity::exact(Rational(v.get<std::string>()));
        } catch (const std::exception&) {
            // fall through to the error below
        }
    }
    invalid("dimension of \"" + label + "\" must be a number or an exact decimal string");
}

FusionRing table_from_json(const json& doc, const RingLoadOptions& options) {
    TableSpec spec;
    for (const char* key : {"labels", "unit", "conjugate", "dim", "products"}) {
        if (!doc.contains(key)) {
            invalid(std::string("table document lacks \"") + key + "\"");
        }
    }
    spec.labels = doc.at("labels").get<std::vector<std::string>>();
    spec.unit = doc.at("unit").get<std::string>();
    spec.conjugate = doc.at("conjugate").get<std::map<std::string, std::string>>();
    for (const auto& [label, v] : doc.at("dim").items()) {
        spec.dim.emplace(label, parse_dim(label, v));
    }
    if (doc.contains("description")) {
        spec.description = doc.at("description").get<std::string>();
    }
    for (const auto& [key, coeffs] : doc.at("products").items()) {
        const auto bar = key.find('|');
        if (bar == std::string::npos || key.find('|', bar + 1) != std::string::npos) {
            invalid("product key \"" + key + "\" must have the form A|B");
        }
        std::map<std::string, Integer> m;
        for (const auto& [label, n] : coeffs.items()) {
            if (!n.is_number_integer()) {
                invalid("coefficient of \"" + label + "\" in \"" + key + "\" must be an integer");
            }
            m.emplace(label, Integer(n.get<long long>()));
        }
        spec.products.emplace(std::make_pair(key.substr(0, bar), key.substr(bar + 1)), std::move(m));
    }

    FusionRing ring = build_table_ring(spec);

    // closure: every pair of labels needs an entry
    for (const auto& a : spec.labels) {
        for (const auto& b : spec.labels) {
            if (!spec.products.contains({a, b})) {
                throw FusionError(ErrorKind::IncompleteTable, "no product entry for \"" + a + "|" + b + "\"");
            }
        }
    }

    const bool truncated = doc.value("truncated", false);
    if (options.verify && !truncated) {
        const auto basis = ring.rules().finite_basis();
        const AxiomReport report = verify_axioms(ring, window_from_labels(ring, *basis));
        for (const auto& check : report.checks) {
            if (!check.passed) {
                invalid("axiom " + check.name + " fails: " + check.witness);
            }
        }
    }
    return ring;
}

FusionRing builtin_from_json(const json& doc) {
    const std::string name = doc.at("name").get<std::string>();
    const json params = doc.value("params", json::object());
    if (name == "zd") {
        return build_zd_ring(int_param(params, "d", 1));
    }
    if (name == "free") {
        return build_free_group_ring(int_param(params, "rank", 2));
    }
    if (name == "cyclic") {
        return build_cyclic_ring(int_param(params, "n", 2));
    }
    if (name == "su2") {
        return build_su2_ring();
    }
    if (name == "deformed_su2") {
        return build_deformed_su2_ring(int_param(params, "n", 3));
    }
    if (name == "trivial") {
        return build_trivial_ring();
    }
    if (name == "group_table") {
        return build_finite_group_ring(params.at("table").get<std::vector<std::vector<int>>>(),
                                       params.value("names", std::vector<std::string>{}));
    }
    if (name == "tensor") {
        if (!params.contains("left") || !params.contains("right")) {
            throw FusionError(ErrorKind::InvalidParam, "tensor needs \"left\" and \"right\" ring documents");
        }
        return tensor_product(ring_from_json(params.at("left").dump()), ring_from_json(params.at("right").dump()));
    }
    throw FusionError(ErrorKind::InvalidParam, "unknown builtin ring \"" + name + "\"");
}

}  // namespace

FusionRing ring_from_json(std::string_view text, RingLoadOptions options) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        throw FusionError(ErrorKind::InvalidParam, std::string("ring document is not valid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object() || !doc.contains("type")) {
            throw FusionError(ErrorKind::InvalidParam, "ring document needs a \"type\" field");
        }
        const std::string type = doc.at("type").get<std::string>();
        if (type == "builtin") {
            return builtin_from_json(doc);
        }
        if (type == "table") {
            return table_from_json(doc, options);
        }
        throw FusionError(ErrorKind::InvalidParam, "unknown ring document type \"" + type + "\"");
    } catch (const json::exception& e) {
        throw FusionError(ErrorKind::InvalidParam, std::string("malformed ring document: ") + e.what());
    }
}

FusionRing load_ring_file(const std::filesystem::path& path, RingLoadOptions options) {
    std::ifstream in(path);
    if (!in) {
        throw FusionError(ErrorKind::InvalidParam, "cannot open ring file " + path.string());
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return ring_from_json(buffer.str(), options);
}

std::string export_table_json(const FusionRing& ring, const TruncationWindow& window) {
    json doc;
    doc["type"] = "table";
    doc["description"] = ring.description() + " restricted to " + std::to_string(window.size()) + " labels";
    json labels = json::array();
    json conj = json::object();
    json dims = json::object();
    json products = json::object();
    bool truncated = false;
    for (const auto& a : window.labels()) {
        const std::string name = ring.render(a);
        labels.push_back(name);
        conj[name] = ring.render(ring.conjugate(a));
        const Quantity& d = ring.dim(a);
        if (d.is_exact() && denominator(d.rational()) == 1) {
            const Integer n = numerator(d.rational());
            if (n <= std::numeric_limits<long long>::max()) {
                dims[name] = static_cast<long long>(n);
            } else {
                dims[name] = n.str();
            }
        } else {
            dims[name] = d.value();
        }
        for (const auto& b : window.labels()) {
            json entry = json::object();
            for (const auto& [c, n] : ring.product(a, b)) {
                if (window.contains(c)) {
                    entry[ring.render(c)] = static_cast<long long>(n);
                } else {
                    truncated = true;
                }
            }
            products[name + "|" + ring.render(b)] = std::move(entry);
        }
    }
    doc["labels"] = std::move(labels);
    doc["unit"] = ring.render(ring.unit());
    doc["conjugate"] = std::move(conj);
    doc["dim"] = std::move(dims);
    doc["products"] = std::move(products);
    if (truncated) {
        doc["truncated"] = true;
    }
    return doc.dump(2);
}

}  // namespace fusionkit
