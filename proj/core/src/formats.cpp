#include "rainbow/formats.hpp"

#include <fstream>
#include <sstream>

#include "rainbow/error.hpp"

namespace rainbow {
namespace {

mpz_class parse_integer(const std::string& text, std::string_view what) {
    mpz_class out;
    if (text.empty() || mpz_set_str(out.get_mpz_t(), text.c_str(), 10) != 0) {
        throw ParameterError("malformed integer '" + text + "' in " + std::string{what});
    }
    return out;
}

const Json& member(const Json& j, const char* key, std::string_view what) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParameterError(std::string{what} + ": missing field \"" + key + "\"");
    }
    return j.at(key);
}

void require_type(const Json& j, std::string_view expected) {
    const Json& type = member(j, "type", "instance");
    if (!type.is_string() || type.get<std::string>() != expected) {
        throw ParameterError("expected \"type\":\"" + std::string{expected} + "\"");
    }
}

std::string string_of(const Json& j, std::string_view what) {
    if (!j.is_string()) {
        throw ParameterError(std::string{what} + " must be a decimal string");
    }
    return j.get<std::string>();
}

}  // namespace

Json rational_to_json(const mpq_class& value) {
    mpq_class canonical{value};
    canonical.canonicalize();
    return Json::array({canonical.get_num().get_str(), canonical.get_den().get_str()});
}

mpq_class rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw ParameterError("rational must be a [\"num\", \"den\"] pair");
    }
    const mpz_class num = parse_integer(string_of(j[0], "numerator"), "rational numerator");
    const mpz_class den = parse_integer(string_of(j[1], "denominator"), "rational denominator");
    if (den <= 0) {
        throw ParameterError("rational denominator must be positive");
    }
    mpq_class out{num, den};
    out.canonicalize();
    return out;
}

Json to_json(const PointInstance& inst) {
    Json coords = Json::array();
    for (const auto& p : inst.points) {
        Json point = Json::array();
        for (const auto& c : p.coords) point.push_back(rational_to_json(c));
        coords.push_back(std::move(point));
    }
    Json out;
    out["type"] = "points";
    out["d"] = inst.d;
    out["coords"] = std::move(coords);
    return out;
}

PointInstance points_from_json(const Json& j) {
    require_type(j, "points");
    const Json& d = member(j, "d", "points");
    if (!d.is_number_integer() || d.get<long long>() < 1) {
        throw ParameterError("points: \"d\" must be a positive integer");
    }
    const Json& coords = member(j, "coords", "points");
    if (!coords.is_array()) {
        throw ParameterError("points: \"coords\" must be an array");
    }
    std::vector<RationalPoint> points;
    for (const auto& p : coords) {
        if (!p.is_array()) {
            throw ParameterError("points: each point must be an array of rationals");
        }
        std::vector<mpq_class> c;
        for (const auto& x : p) c.push_back(rational_from_json(x));
        points.emplace_back(std::move(c));
    }
    return make_point_instance(d.get<std::size_t>(), std::move(points));
}

Json to_json(const IntegerInstance& inst) {
    Json values = Json::array();
    for (const auto& v : inst.values) values.push_back(v.get_str());
    Json out;
    out["type"] = "integers";
    out["values"] = std::move(values);
    return out;
}

IntegerInstance integers_from_json(const Json& j) {
    require_type(j, "integers");
    const Json& values = member(j, "values", "integers");
    if (!values.is_array()) {
        throw ParameterError("integers: \"values\" must be an array");
    }
    std::vector<mpz_class> out;
    for (const auto& v : values) out.push_back(parse_integer(string_of(v, "integer value"), "integers"));
    return make_integer_instance(std::move(out));
}

Json to_json(const SymPoly& poly) {
    Json out;
    out["type"] = "sympoly";
    if (poly.field().is_prime_field()) {
        const mpz_class& p = poly.field().modulus();
        Json gf;
        if (mpz_fits_ulong_p(p.get_mpz_t()) != 0) {
            gf["GF"] = p.get_ui();
        } else {
            gf["GF"] = p.get_str();
        }
        out["field"] = std::move(gf);
    } else {
        out["field"] = "Q";
    }
    out["degree"] = poly.degree();
    Json coeffs = Json::array();
    for (const auto& t : poly.terms()) coeffs.push_back(Json::array({t.i, t.j, t.c.get_str()}));
    out["coeffs"] = std::move(coeffs);
    return out;
}

SymPoly sympoly_from_json(const Json& j) {
    require_type(j, "sympoly");
    const Json& field_json = member(j, "field", "sympoly");
    Field field = Field::rationals();
    if (field_json.is_string()) {
        if (field_json.get<std::string>() != "Q") {
            throw ParameterError("sympoly: field must be \"Q\" or {\"GF\": p}");
        }
    } else if (field_json.is_object() && field_json.contains("GF")) {
        const Json& p = field_json.at("GF");
        if (p.is_number_unsigned() || (p.is_number_integer() && p.get<long long>() > 0)) {
            field = Field::prime(mpz_class{p.get<unsigned long>()});
        } else if (p.is_string()) {
            field = Field::prime(parse_integer(p.get<std::string>(), "GF modulus"));
        } else {
            throw ParameterError("sympoly: GF modulus must be a positive integer");
        }
    } else {
        throw ParameterError("sympoly: field must be \"Q\" or {\"GF\": p}");
    }
    const Json& degree = member(j, "degree", "sympoly");
    if (!degree.is_number_integer()) {
        throw ParameterError("sympoly: \"degree\" must be an integer");
    }
    std::vector<Monomial> terms;
    for (const auto& entry : member(j, "coeffs", "sympoly")) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer() || !entry[2].is_string()) {
            throw ParameterError("sympoly: each coefficient must be [i, j, \"c\"]");
        }
        mpq_class c;
        if (mpq_set_str(c.get_mpq_t(), entry[2].get<std::string>().c_str(), 10) != 0 ||
            sgn(c.get_den()) == 0) {
            throw ParameterError("sympoly: malformed coefficient '" + entry[2].get<std::string>() + "'");
        }
        c.canonicalize();
        terms.push_back(Monomial{entry[0].get<int>(), entry[1].get<int>(), c});
    }
    return SymPoly{std::move(field), degree.get<int>(), std::move(terms)};
}

Instance instance_from_json(const Json& j) {
    const std::string type = string_of(member(j, "type", "instance"), "instance type");
    if (type == "integers") return integers_from_json(j);
    if (type == "points") return points_from_json(j);
    throw ParameterError("unknown instance type '" + type + "'");
}

Json to_json(const Instance& inst) {
    return std::visit([](const auto& value) { return to_json(value); }, inst);
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in{path};
    if (!in) {
        throw ParameterError("cannot open " + path.string());
    }
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParameterError("invalid JSON in " + path.string() + ": " + e.what());
    }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out{path, std::ios::binary};
    if (!out) {
        throw ParameterError("cannot write " + path.string());
    }
    out << text;
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
    write_text_file(path, j.dump(2) + "\n");
}

}  // namespace rainbow
