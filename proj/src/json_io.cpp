#include "svf/json_io.hpp"

#include "svf/errors.hpp"

#include <fstream>
#include <sstream>

namespace svf {

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

std::vector<Rational> rational_array(const Json& j) {
    if (!j.is_array()) throw Error(ErrorKind::ParseError, "expected an array of rationals");
    std::vector<Rational> out;
    out.reserve(j.size());
    for (const auto& item : j) out.push_back(item.get<Rational>());
    return out;
}

std::int64_t integer_value(const Json& j) {
    if (j.is_number_integer()) return j.get<std::int64_t>();
    if (j.is_string()) {
        const Rational r = Rational::parse(j.get<std::string>());
        if (r.is_integer() && r.numerator().fits_slong_p()) return r.numerator().get_si();
    }
    throw Error(ErrorKind::ParseError, "expected an integer, got " + j.dump());
}

} // namespace

void to_json(Json& j, const Rational& r) { j = r.str(); }

void from_json(const Json& j, Rational& r) {
    if (j.is_string()) {
        r = Rational::parse(j.get<std::string>());
    } else if (j.is_number_integer()) {
        r = Rational(j.get<long>());
    } else {
        throw Error(ErrorKind::ParseError, "rational must be a \"p/q\" string or an integer, got " + j.dump());
    }
}

Json probability_vector_to_json(const ProbabilityVector& p) {
    Json j;
    j["n"] = p.size();
    j["entries"] = std::vector<Rational>(p.entries().begin(), p.entries().end());
    return j;
}

ProbabilityVector probability_vector_from_json(const Json& j) {
    auto entries = rational_array(field(j, "entries"));
    if (j.contains("n")) {
        const std::int64_t n = integer_value(j.at("n"));
        if (n != static_cast<std::int64_t>(entries.size())) {
            throw Error(ErrorKind::DimensionMismatch, "\"n\" is " + std::to_string(n) + " but there are " +
                                                          std::to_string(entries.size()) + " entries");
        }
    }
    return make_probability_vector(std::move(entries));
}

Json game_to_json(const WeightedGame& g) {
    Json j;
    j["weights"] = g.weights;
    j["theta"] = g.threshold;
    return j;
}

WeightedGame game_from_json(const Json& j) {
    WeightedGame g;
    g.weights = rational_array(field(j, "weights"));
    g.threshold = j.contains("theta") ? j.at("theta").get<Rational>() : Rational(0);
    return g;
}

Json semivalues_to_json(const SemivalueVector& s) {
    Json j;
    j["values"] = s.values;
    return j;
}

std::vector<Rational> vector_from_json(const Json& j) {
    if (j.is_array()) return rational_array(j);
    if (j.is_object()) {
        if (j.contains("values")) return rational_array(j.at("values"));
        if (j.contains("vector")) return rational_array(j.at("vector"));
    }
    throw Error(ErrorKind::ParseError, "expected an array or an object with \"values\" or \"vector\"");
}

Json vector_to_json(const std::vector<Rational>& v) {
    Json j;
    j["vector"] = v;
    return j;
}

Json inverse_result_to_json(const InverseResult& r, const Rational& theta) {
    Json j;
    j["status"] = std::string(to_string(r.status));
    if (!r.weights.empty()) {
        j["weights"] = r.weights;
        j["theta"] = theta;
    }
    if (r.status != InverseStatus::no_solution_in_class) j["distance"] = r.distance;
    j["games_examined"] = r.games_examined;
    return j;
}

Json certificate_to_json(const CaratheodoryCertificate& cert) {
    Json j;
    j["point"] = cert.point;
    j["vertices"] = Json::array();
    for (const auto& v : cert.vertices) j["vertices"].push_back(v);
    j["witnesses"] = Json::array();
    for (const auto& g : cert.witnesses) j["witnesses"].push_back(game_to_json(g));
    j["lambdas"] = cert.lambdas;
    return j;
}

CaratheodoryCertificate certificate_from_json(const Json& j) {
    CaratheodoryCertificate cert;
    cert.point = rational_array(field(j, "point"));
    const Json& vertices = field(j, "vertices");
    const Json& witnesses = field(j, "witnesses");
    if (!vertices.is_array() || !witnesses.is_array()) throw Error(ErrorKind::ParseError, "vertices and witnesses must be arrays");
    for (const auto& v : vertices) cert.vertices.push_back(rational_array(v));
    for (const auto& g : witnesses) cert.witnesses.push_back(game_from_json(g));
    cert.lambdas = rational_array(field(j, "lambdas"));
    return cert;
}

Json rpartition_to_json(const RPartitionInstance& inst) {
    Json j;
    j["c"] = inst.c;
    j["k"] = inst.k;
    return j;
}

RPartitionInstance rpartition_from_json(const Json& j) {
    RPartitionInstance inst;
    const Json& c = field(j, "c");
    if (!c.is_array()) throw Error(ErrorKind::ParseError, "\"c\" must be an array");
    for (const auto& v : c) {
        const std::int64_t value = integer_value(v);
        if (value <= 0) throw Error(ErrorKind::BadInstance, "entries of c must be positive integers");
        inst.c.push_back(value);
    }
    const std::int64_t k = integer_value(field(j, "k"));
    if (k < 0 || k > static_cast<std::int64_t>(inst.c.size())) {
        throw Error(ErrorKind::BadInstance, "k must lie in [0, n]");
    }
    inst.k = static_cast<int>(k);
    return inst;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::IoError, "cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

std::string render(const Json& j) { return j.dump() + "\n"; }

} // namespace svf
