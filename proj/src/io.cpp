#include "snc/io.hpp"

#include <limits>
#include <set>

#include "snc/error.hpp"

namespace snc
{

namespace
{

class Reader
{
public:
    std::vector<std::string> errors;

    void error(const std::string& path, const std::string& message)
    {
        errors.push_back((path.empty() ? std::string("/") : path) + ": " + message);
    }

    void only_keys(const Json& j, const std::string& path, const std::set<std::string>& allowed)
    {
        for (const auto& [key, value] : j.items())
            if (!allowed.count(key))
                error(path, "unknown key '" + key + "'");
    }

    bool object(const Json& j, const std::string& path)
    {
        if (j.is_object())
            return true;
        error(path, "expected an object");
        return false;
    }

    bool array(const Json& j, const std::string& path)
    {
        if (j.is_array())
            return true;
        error(path, "expected an array");
        return false;
    }

    std::optional<std::string> string(const Json& j, const std::string& path)
    {
        if (j.is_string())
            return j.get<std::string>();
        error(path, "expected a string");
        return std::nullopt;
    }

    std::optional<Integer> integer(const Json& j, const std::string& path)
    {
        if (j.is_number_integer())
            return j.is_number_unsigned() ? Integer(j.get<std::uint64_t>()) : Integer(j.get<std::int64_t>());
        if (j.is_string()) {
            const auto text = j.get<std::string>();
            const std::size_t start = !text.empty() && text[0] == '-' ? 1 : 0;
            bool digits = text.size() > start;
            for (std::size_t i = start; i < text.size(); ++i)
                digits = digits && text[i] >= '0' && text[i] <= '9';
            if (digits)
                return Integer(text);
        }
        error(path, "expected an integer");
        return std::nullopt;
    }

    std::optional<std::uint64_t> count(const Json& j, const std::string& path, std::uint64_t minimum)
    {
        auto x = integer(j, path);
        if (!x)
            return std::nullopt;
        if (*x < minimum || *x > std::numeric_limits<std::uint32_t>::max()) {
            error(path, "expected an integer of at least " + std::to_string(minimum));
            return std::nullopt;
        }
        return static_cast<std::uint64_t>(*x);
    }

    std::vector<std::uint64_t> degrees(const Json& j, const std::string& path)
    {
        std::vector<std::uint64_t> out;
        if (!array(j, path))
            return out;
        for (std::size_t i = 0; i < j.size(); ++i)
            if (auto d = count(j[i], path + "/" + std::to_string(i), 1))
                out.push_back(*d);
        return out;
    }

    std::vector<std::string> strings(const Json& j, const std::string& path)
    {
        std::vector<std::string> out;
        if (!array(j, path))
            return out;
        for (std::size_t i = 0; i < j.size(); ++i)
            if (auto s = string(j[i], path + "/" + std::to_string(i)))
                out.push_back(*s);
        return out;
    }

    /// Integer vector, optionally of a required length.
    std::optional<IntVector> vector(const Json& j, const std::string& path, std::optional<Index> length)
    {
        if (!array(j, path))
            return std::nullopt;
        if (length && static_cast<Index>(j.size()) != *length) {
            error(path, "expected " + std::to_string(*length) + " entries, got " + std::to_string(j.size()));
            return std::nullopt;
        }
        IntVector v(static_cast<Index>(j.size()));
        bool ok = true;
        for (std::size_t i = 0; i < j.size(); ++i) {
            auto x = integer(j[i], path + "/" + std::to_string(i));
            if (x)
                v(static_cast<Index>(i)) = *x;
            ok = ok && x.has_value();
        }
        return ok ? std::optional<IntVector>(v) : std::nullopt;
    }

    /// List of columns, each of length `rows`.
    std::optional<IntMatrix> columns(const Json& j, const std::string& path, Index rows)
    {
        if (!array(j, path))
            return std::nullopt;
        IntMatrix m(rows, static_cast<Index>(j.size()));
        bool ok = true;
        for (std::size_t c = 0; c < j.size(); ++c) {
            auto v = vector(j[c], path + "/" + std::to_string(c), rows);
            if (v)
                m.col(static_cast<Index>(c)) = *v;
            ok = ok && v.has_value();
        }
        return ok ? std::optional<IntMatrix>(m) : std::nullopt;
    }

    std::optional<std::size_t> depth(const std::string& key, const std::string& path)
    {
        std::size_t used = 0;
        unsigned long value = 0;
        try {
            value = std::stoul(key, &used);
        }
        catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != key.size()) {
            error(path, "stratum depth '" + key + "' is not an integer");
            return std::nullopt;
        }
        return static_cast<std::size_t>(value);
    }

    std::map<std::string, std::string> id_map(const Json& j, const std::string& path)
    {
        std::map<std::string, std::string> out;
        if (!object(j, path))
            return out;
        for (const auto& [key, value] : j.items())
            if (auto s = string(value, path + "/" + key))
                out[key] = *s;
        return out;
    }
};

SncConfiguration read_config(Reader& r, const Json& j)
{
    SncConfiguration cfg;
    if (j.contains("name"))
        cfg.name = r.string(j["name"], "/name").value_or("");
    if (!j.contains("components"))
        r.error("/components", "missing");
    else if (r.array(j["components"], "/components")) {
        const auto& list = j["components"];
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string path = "/components/" + std::to_string(i);
            if (!r.object(list[i], path))
                continue;
            r.only_keys(list[i], path, {"id", "point_degrees"});
            ComponentRecord c;
            if (!list[i].contains("id"))
                r.error(path + "/id", "missing");
            else
                c.id = r.string(list[i]["id"], path + "/id").value_or("");
            if (list[i].contains("point_degrees"))
                c.point_degrees = r.degrees(list[i]["point_degrees"], path + "/point_degrees");
            cfg.components.push_back(std::move(c));
        }
    }
    if (j.contains("strata") && r.object(j["strata"], "/strata")) {
        for (const auto& [key, list] : j["strata"].items()) {
            const std::string base = "/strata/" + key;
            const auto depth = r.depth(key, base);
            if (!depth || !r.array(list, base))
                continue;
            auto& out = cfg.strata[*depth];
            for (std::size_t i = 0; i < list.size(); ++i) {
                const std::string path = base + "/" + std::to_string(i);
                if (!r.object(list[i], path))
                    continue;
                r.only_keys(list[i], path, {"id", "on", "facets", "point_degrees"});
                StratumRecord s;
                if (!list[i].contains("id"))
                    r.error(path + "/id", "missing");
                else
                    s.id = r.string(list[i]["id"], path + "/id").value_or("");
                if (!list[i].contains("on"))
                    r.error(path + "/on", "missing");
                else
                    s.on = r.strings(list[i]["on"], path + "/on");
                if (list[i].contains("facets"))
                    s.facets = r.strings(list[i]["facets"], path + "/facets");
                if (list[i].contains("point_degrees"))
                    s.point_degrees = r.degrees(list[i]["point_degrees"], path + "/point_degrees");
                out.push_back(std::move(s));
            }
        }
    }
    if (j.contains("frobenius") && r.object(j["frobenius"], "/frobenius")) {
        const auto& f = j["frobenius"];
        r.only_keys(f, "/frobenius", {"order", "components", "strata"});
        FrobeniusAction action;
        if (!f.contains("order"))
            r.error("/frobenius/order", "missing");
        else
            action.order = r.count(f["order"], "/frobenius/order", 1).value_or(1);
        if (f.contains("components"))
            action.components = r.id_map(f["components"], "/frobenius/components");
        if (f.contains("strata") && r.object(f["strata"], "/frobenius/strata")) {
            for (const auto& [key, map] : f["strata"].items()) {
                const std::string path = "/frobenius/strata/" + key;
                if (auto depth = r.depth(key, path))
                    action.strata[*depth] = r.id_map(map, path);
            }
        }
        cfg.frobenius = std::move(action);
    }
    return cfg;
}

Pi1Input read_pi1(Reader& r, const Json& j, const SncConfiguration& cfg)
{
    Pi1Input pi1;
    const std::uint64_t default_order = cfg.frobenius ? cfg.frobenius->order : 1;
    Index y0_gens = 0;
    FgAbelianGroup y0_group;
    IntMatrix y0_frobenius(0, 0);
    std::uint64_t y0_order = default_order;
    if (j.contains("pi1_y0") && r.object(j["pi1_y0"], "/pi1_y0")) {
        const auto& y = j["pi1_y0"];
        r.only_keys(y, "/pi1_y0", {"generators", "relations", "frobenius", "order"});
        y0_gens = static_cast<Index>(
            y.contains("generators") ? r.count(y["generators"], "/pi1_y0/generators", 0).value_or(0) : 0);
        IntMatrix relations(y0_gens, 0);
        if (y.contains("relations"))
            relations = r.columns(y["relations"], "/pi1_y0/relations", y0_gens).value_or(relations);
        y0_frobenius = IntMatrix::Identity(y0_gens, y0_gens);
        if (y.contains("frobenius")) {
            auto m = r.columns(y["frobenius"], "/pi1_y0/frobenius", y0_gens);
            if (m && m->cols() != y0_gens)
                r.error("/pi1_y0/frobenius", "expected one image per generator");
            else if (m)
                y0_frobenius = *m;
        }
        if (y.contains("order"))
            y0_order = r.count(y["order"], "/pi1_y0/order", 1).value_or(default_order);
        y0_group = FgAbelianGroup(y0_gens, relations);
    }
    else {
        y0_frobenius = IntMatrix(0, 0);
    }
    if (r.errors.empty()) {
        try {
            pi1.y0 = GaloisModule(y0_group, y0_frobenius, y0_order);
        }
        catch (const ValidationError& e) {
            r.error("/pi1_y0", e.what());
        }
    }

    if (j.contains("component_maps") && r.array(j["component_maps"], "/component_maps")) {
        const auto& list = j["component_maps"];
        for (std::size_t i = 0; i < list.size(); ++i) {
            const std::string path = "/component_maps/" + std::to_string(i);
            if (!r.object(list[i], path))
                continue;
            const auto& m = list[i];
            r.only_keys(m, path, {"component", "generators", "relations", "frobenius", "matrix"});
            ComponentMap cm;
            if (!m.contains("component"))
                r.error(path + "/component", "missing");
            else
                cm.component = r.string(m["component"], path + "/component").value_or("");
            const auto k =
                static_cast<Index>(m.contains("generators") ? r.count(m["generators"], path + "/generators", 0).value_or(0)
                                                            : 0);
            IntMatrix relations(k, 0);
            if (m.contains("relations"))
                relations = r.columns(m["relations"], path + "/relations", k).value_or(relations);
            cm.group = FgAbelianGroup(k, relations);
            cm.to_y0 = IntMatrix::Zero(y0_gens, k);
            if (m.contains("matrix")) {
                auto images = r.columns(m["matrix"], path + "/matrix", y0_gens);
                if (images && images->cols() != k)
                    r.error(path + "/matrix", "expected one image per generator");
                else if (images)
                    cm.to_y0 = *images;
            }
            if (m.contains("frobenius") && r.array(m["frobenius"], path + "/frobenius")) {
                const auto& f = m["frobenius"];
                if (static_cast<Index>(f.size()) != k)
                    r.error(path + "/frobenius", "expected one image per generator");
                else if (k > 0 && r.array(f[0], path + "/frobenius/0"))
                    if (auto images = r.columns(f, path + "/frobenius", static_cast<Index>(f[0].size())))
                        cm.frobenius = *images;
            }
            pi1.component_maps.push_back(std::move(cm));
        }
    }
    return pi1;
}

EdgeLabelCochain read_labels(Reader& r, const Json& j)
{
    EdgeLabelCochain labels;
    if (!j.contains("edge_labels") || !r.object(j["edge_labels"], "/edge_labels"))
        return labels;
    for (const auto& [edge, value] : j["edge_labels"].items())
        if (auto v = r.vector(value, "/edge_labels/" + edge, std::nullopt))
            labels[edge] = *v;
    return labels;
}

void throw_if_errors(const Reader& r)
{
    if (r.errors.empty())
        return;
    std::string message = "invalid document:";
    for (const auto& e : r.errors)
        message += "\n  " + e;
    throw ValidationError(message);
}

Json columns_to_json(const IntMatrix& m)
{
    Json out = Json::array();
    for (Index c = 0; c < m.cols(); ++c) {
        Json col = Json::array();
        for (Index r = 0; r < m.rows(); ++r)
            col.push_back(integer_to_json(m(r, c)));
        out.push_back(std::move(col));
    }
    return out;
}

Json vector_to_json(const IntVector& v)
{
    Json out = Json::array();
    for (Index i = 0; i < v.size(); ++i)
        out.push_back(integer_to_json(v(i)));
    return out;
}

} // namespace

Json integer_to_json(const Integer& x)
{
    if (fits_int64(x))
        return static_cast<std::int64_t>(x);
    return to_string(x);
}

Json matrix_to_json(const IntMatrix& m)
{
    Json out = Json::array();
    for (Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Index c = 0; c < m.cols(); ++c)
            row.push_back(integer_to_json(m(r, c)));
        out.push_back(std::move(row));
    }
    return out;
}

Json invariants_to_json(const GroupInvariants& g)
{
    Json torsion = Json::array();
    for (const auto& d : g.torsion)
        torsion.push_back(integer_to_json(d));
    return Json{{"invariant_factors", torsion}, {"free_rank", g.free_rank}, {"text", g.to_string()}};
}

SncConfiguration config_from_json(const Json& json)
{
    Reader r;
    if (!r.object(json, ""))
        throw_if_errors(r);
    auto cfg = read_config(r, json);
    throw_if_errors(r);
    return cfg;
}

Document parse_document(const Json& json, bool validate)
{
    Reader r;
    if (!r.object(json, ""))
        throw_if_errors(r);
    r.only_keys(json, "", {"name", "components", "strata", "frobenius", "pi1_y0", "component_maps", "edge_labels"});
    Document doc;
    doc.config = read_config(r, json);
    doc.pi1 = read_pi1(r, json, doc.config);
    doc.labels = read_labels(r, json);
    throw_if_errors(r);
    if (validate) {
        require_valid(doc.config);
        component_sum(doc.config, doc.pi1);
        validate_labels(doc.config, doc.labels, doc.pi1);
    }
    return doc;
}

Document parse_document(const std::string& text, bool validate)
{
    Json json;
    try {
        json = Json::parse(text);
    }
    catch (const Json::parse_error& e) {
        throw ValidationError(std::string("malformed document: ") + e.what());
    }
    return parse_document(json, validate);
}

Json config_to_json(const SncConfiguration& config)
{
    Json out;
    out["name"] = config.name;
    Json components = Json::array();
    for (const auto& c : config.components)
        components.push_back(Json{{"id", c.id}, {"point_degrees", c.point_degrees}});
    out["components"] = components;
    Json strata = Json::object();
    for (const auto& [depth, list] : config.strata) {
        Json items = Json::array();
        for (const auto& s : list) {
            Json item{{"id", s.id}, {"on", s.on}};
            if (s.facets)
                item["facets"] = *s.facets;
            item["point_degrees"] = s.point_degrees;
            items.push_back(std::move(item));
        }
        strata[std::to_string(depth)] = items;
    }
    out["strata"] = strata;
    if (config.frobenius) {
        Json f{{"order", config.frobenius->order}, {"components", config.frobenius->components}};
        Json fs = Json::object();
        for (const auto& [depth, map] : config.frobenius->strata)
            fs[std::to_string(depth)] = map;
        f["strata"] = fs;
        out["frobenius"] = f;
    }
    return out;
}

Json to_json(const Document& document)
{
    Json out = config_to_json(document.config);
    const auto& y0 = document.pi1.y0;
    out["pi1_y0"] = Json{{"generators", y0.group().generator_count()},
                         {"relations", columns_to_json(y0.group().relations())},
                         {"frobenius", columns_to_json(y0.frobenius_matrix())},
                         {"order", y0.order()}};
    Json maps = Json::array();
    for (const auto& cm : document.pi1.component_maps) {
        Json m{{"component", cm.component},
               {"generators", cm.group.generator_count()},
               {"relations", columns_to_json(cm.group.relations())}};
        if (cm.frobenius)
            m["frobenius"] = columns_to_json(*cm.frobenius);
        m["matrix"] = columns_to_json(cm.to_y0);
        maps.push_back(std::move(m));
    }
    out["component_maps"] = maps;
    Json labels = Json::object();
    for (const auto& [edge, v] : document.labels)
        labels[edge] = vector_to_json(v);
    out["edge_labels"] = labels;
    return out;
}

} // namespace snc
