#include "mnum/interchange.hpp"

#include <json.hpp>

#include "mnum/error.hpp"

namespace mnum {

namespace {

using nlohmann::json;

[[noreturn]] void invalid(const std::string& what)
{
    throw Error(Errc::invalid_document, what);
}

Natural read_multiplicity(const json& j)
{
    if (j.is_number_unsigned()) {
        return Natural(j.get<std::uint64_t>());
    }
    if (j.is_number_integer()) {
        invalid("negative multiplicity " + j.dump());
    }
    if (j.is_string()) {
        try {
            return Natural::parse(j.get<std::string>());
        } catch (const Error&) {
            invalid("multiplicity string " + j.dump() + " is not a decimal numeral");
        }
    }
    if (j.is_number_float()) {
        invalid("multiplicity " + j.dump() + " is not an integer; write large values as decimal strings");
    }
    invalid("multiplicity must be an integer, got " + j.dump());
}

std::string write_multiplicity(const Natural& m)
{
    if (m.to_u64()) {
        return m.to_string();
    }
    return "\"" + m.to_string() + "\"";
}

} // namespace

Document read_document(std::string_view text)
{
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(Errc::malformed_document, e.what());
    }
    if (!root.is_object()) {
        invalid("document must be a JSON object");
    }
    for (const auto& [key, _] : root.items()) {
        if (key != "dim" && key != "entries" && key != "domain_base") {
            invalid("unknown field '" + key + "'");
        }
    }
    if (!root.contains("dim") || !root["dim"].is_number_unsigned() || root["dim"].get<std::uint64_t>() == 0) {
        invalid("'dim' must be a positive integer");
    }
    const auto dim = root["dim"].get<std::size_t>();

    std::optional<DomainBase> base;
    if (root.contains("domain_base")) {
        const auto& jb = root["domain_base"];
        if (!jb.is_array()) {
            invalid("'domain_base' must be a list");
        }
        std::vector<Domain> domains;
        for (const auto& jd : jb) {
            if (!jd.is_object() || !jd.contains("name") || !jd["name"].is_string() || !jd.contains("elements") ||
                !jd["elements"].is_array()) {
                invalid("each domain must be {\"name\": string, \"elements\": [string, ...]}");
            }
            Domain d{jd["name"].get<std::string>(), {}};
            for (const auto& je : jd["elements"]) {
                if (!je.is_string()) {
                    invalid("domain elements must be strings");
                }
                d.elements.push_back(je.get<std::string>());
            }
            domains.push_back(std::move(d));
        }
        try {
            base.emplace(std::move(domains));
        } catch (const Error& e) {
            invalid(e.what());
        }
    }

    if (!root.contains("entries") || !root["entries"].is_array()) {
        invalid("'entries' must be a list");
    }
    std::vector<Component> comps;
    for (const auto& je : root["entries"]) {
        if (!je.is_array() || je.size() != 2 || !je[0].is_array()) {
            invalid("each entry must be [[i, ...], multiplicity], got " + je.dump());
        }
        std::vector<MultiIndex::value_type> coords;
        for (const auto& jc : je[0]) {
            if (!jc.is_number_unsigned()) {
                invalid("index coordinates must be non-negative integers, got " + jc.dump());
            }
            coords.push_back(jc.get<std::uint64_t>());
        }
        if (coords.size() != dim) {
            invalid("entry " + je.dump() + " has " + std::to_string(coords.size()) + " coordinates, dim is " +
                    std::to_string(dim));
        }
        comps.push_back({MultiIndex(coords), read_multiplicity(je[1])});
    }

    Document doc{Polymset::from_components(dim, std::move(comps)), std::move(base)};
    if (doc.domain_base) {
        try {
            doc.domain_base->validate(doc.value);
        } catch (const Error& e) {
            invalid(e.what());
        }
    }
    return doc;
}

std::string write_document(const Document& doc)
{
    std::string out = "{\n  \"dim\": " + std::to_string(doc.value.dim()) + ",\n  \"entries\": [";
    bool first = true;
    for (const auto& c : doc.value.components()) {
        out += first ? "\n    [[" : ",\n    [[";
        first = false;
        for (std::size_t i = 0; i < c.index.size(); ++i) {
            out += (i == 0 ? "" : ", ") + std::to_string(c.index[i]);
        }
        out += "], " + write_multiplicity(c.multiplicity) + "]";
    }
    out += doc.value.empty() ? "]" : "\n  ]";
    if (doc.domain_base) {
        out += ",\n  \"domain_base\": [";
        bool first_domain = true;
        for (const auto& d : doc.domain_base->domains()) {
            out += first_domain ? "\n    " : ",\n    ";
            first_domain = false;
            out += "{\"name\": " + json(d.name).dump() + ", \"elements\": [";
            for (std::size_t i = 0; i < d.elements.size(); ++i) {
                out += (i == 0 ? "" : ", ") + json(d.elements[i]).dump();
            }
            out += "]}";
        }
        out += "\n  ]";
    }
    out += "\n}\n";
    return out;
}

} // namespace mnum
